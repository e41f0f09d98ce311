//! Directed and undirected graphs in compressed sparse row form, with
//! edge-list parsing, reversal, and basic structural statistics.

use alloc::borrow::ToOwned;
use alloc::collections::BTreeMap;
use alloc::string::{String, ToString};
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};

/// Dense node identifier, `0..node_count`.
pub type NodeId = u32;

#[derive(Debug)]
struct Labels {
    names: Vec<String>,
    index: BTreeMap<String, NodeId>,
}

/// A graph with CSR adjacency in both directions.
///
/// Node ids are dense. For undirected graphs every edge is stored as two
/// arcs, one per direction, and the out- and in-adjacency coincide.
/// Duplicate edges collapse; self-loops are kept. Reversal of a directed
/// graph is O(1): the two CSR halves swap behind shared `Arc`s.
#[derive(Debug, Clone)]
pub struct Graph {
    directed: bool,
    node_count: usize,
    edge_count: usize,
    out_offs: Arc<Vec<u32>>,
    out_tgts: Arc<Vec<NodeId>>,
    in_offs: Arc<Vec<u32>>,
    in_tgts: Arc<Vec<NodeId>>,
    labels: Option<Arc<Labels>>,
}

/// Summary numbers for a graph.
#[derive(Debug, Clone, PartialEq)]
pub struct GraphStats {
    pub node_count: usize,
    pub edge_count: usize,
    /// `2·edge_count / node_count` for both orientations.
    pub avg_degree: f64,
    /// Fraction of edges whose removal disconnects the undirected
    /// projection, over the total edge count. 0 for edgeless graphs.
    pub bridge_fraction: f64,
}

fn build_csr(node_count: usize, arcs: &[(NodeId, NodeId)]) -> (Vec<u32>, Vec<NodeId>) {
    let mut offs = vec![0u32; node_count + 1];
    for &(u, _) in arcs {
        offs[u as usize + 1] += 1;
    }
    for i in 0..node_count {
        offs[i + 1] += offs[i];
    }
    let mut tgts = vec![0 as NodeId; arcs.len()];
    let mut cursor = offs.clone();
    for &(u, v) in arcs {
        tgts[cursor[u as usize] as usize] = v;
        cursor[u as usize] += 1;
    }
    (offs, tgts)
}

impl Graph {
    /// Builds a graph over `node_count` nodes from an edge list.
    ///
    /// Endpoints must be below `node_count`. Duplicate edges (same
    /// unordered pair when undirected) are collapsed.
    pub fn new(node_count: usize, edges: &[(NodeId, NodeId)], directed: bool) -> Result<Graph> {
        Self::build(node_count, edges, directed, None)
    }

    /// Like [`Graph::new`] with one label per node; labels must be unique.
    pub fn with_labels(
        labels: Vec<String>,
        edges: &[(NodeId, NodeId)],
        directed: bool,
    ) -> Result<Graph> {
        let mut index = BTreeMap::new();
        for (i, name) in labels.iter().enumerate() {
            if index.insert(name.clone(), i as NodeId).is_some() {
                return Err(Error::InvalidInput(alloc::format!(
                    "duplicate node label {name:?}"
                )));
            }
        }
        Self::build(
            labels.len(),
            edges,
            directed,
            Some(Arc::new(Labels {
                names: labels,
                index,
            })),
        )
    }

    fn build(
        node_count: usize,
        edges: &[(NodeId, NodeId)],
        directed: bool,
        labels: Option<Arc<Labels>>,
    ) -> Result<Graph> {
        if node_count == 0 {
            return Err(Error::EmptyGraph);
        }
        if node_count > u32::MAX as usize {
            return Err(Error::InvalidInput("more than u32::MAX nodes".to_owned()));
        }
        for &(u, v) in edges {
            for node in [u, v] {
                if node as usize >= node_count {
                    return Err(Error::NodeOutOfRange { node, node_count });
                }
            }
        }

        let mut canonical: Vec<(NodeId, NodeId)> = edges
            .iter()
            .map(|&(u, v)| {
                if directed || u <= v {
                    (u, v)
                } else {
                    (v, u)
                }
            })
            .collect();
        canonical.sort_unstable();
        canonical.dedup();
        let edge_count = canonical.len();

        let (out_offs, out_tgts, in_offs, in_tgts);
        if directed {
            let (o, t) = build_csr(node_count, &canonical);
            let mut rev: Vec<(NodeId, NodeId)> = canonical.iter().map(|&(u, v)| (v, u)).collect();
            rev.sort_unstable();
            let (io, it) = build_csr(node_count, &rev);
            out_offs = Arc::new(o);
            out_tgts = Arc::new(t);
            in_offs = Arc::new(io);
            in_tgts = Arc::new(it);
        } else {
            let mut arcs: Vec<(NodeId, NodeId)> = Vec::with_capacity(2 * edge_count);
            for &(u, v) in &canonical {
                arcs.push((u, v));
                if u != v {
                    arcs.push((v, u));
                }
            }
            arcs.sort_unstable();
            let (o, t) = build_csr(node_count, &arcs);
            out_offs = Arc::new(o);
            out_tgts = Arc::new(t);
            in_offs = Arc::clone(&out_offs);
            in_tgts = Arc::clone(&out_tgts);
        }

        Ok(Graph {
            directed,
            node_count,
            edge_count,
            out_offs,
            out_tgts,
            in_offs,
            in_tgts,
            labels,
        })
    }

    pub fn node_count(&self) -> usize {
        self.node_count
    }

    /// Number of arcs (directed) or unordered edges (undirected).
    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn is_directed(&self) -> bool {
        self.directed
    }

    fn check_node(&self, node: NodeId) -> Result<()> {
        if (node as usize) < self.node_count {
            Ok(())
        } else {
            Err(Error::NodeOutOfRange {
                node,
                node_count: self.node_count,
            })
        }
    }

    /// Successors of `u`, ascending. Panics if `u` is out of range.
    pub fn out_neighbors(&self, u: NodeId) -> &[NodeId] {
        let (a, b) = (
            self.out_offs[u as usize] as usize,
            self.out_offs[u as usize + 1] as usize,
        );
        &self.out_tgts[a..b]
    }

    /// Predecessors of `u`, ascending. Panics if `u` is out of range.
    pub fn in_neighbors(&self, u: NodeId) -> &[NodeId] {
        let (a, b) = (
            self.in_offs[u as usize] as usize,
            self.in_offs[u as usize + 1] as usize,
        );
        &self.in_tgts[a..b]
    }

    pub fn out_degree(&self, u: NodeId) -> Result<usize> {
        self.check_node(u)?;
        Ok(self.out_neighbors(u).len())
    }

    pub fn in_degree(&self, u: NodeId) -> Result<usize> {
        self.check_node(u)?;
        Ok(self.in_neighbors(u).len())
    }

    /// True when the arc `u -> v` exists (either direction counts as the
    /// same edge in undirected graphs).
    pub fn has_edge(&self, u: NodeId, v: NodeId) -> bool {
        if u as usize >= self.node_count || v as usize >= self.node_count {
            return false;
        }
        self.out_neighbors(u).binary_search(&v).is_ok()
    }

    /// The transpose. Undirected graphs reverse to themselves; directed
    /// graphs swap adjacency halves without copying them.
    pub fn reverse(&self) -> Graph {
        if !self.directed {
            return self.clone();
        }
        Graph {
            directed: true,
            node_count: self.node_count,
            edge_count: self.edge_count,
            out_offs: Arc::clone(&self.in_offs),
            out_tgts: Arc::clone(&self.in_tgts),
            in_offs: Arc::clone(&self.out_offs),
            in_tgts: Arc::clone(&self.out_tgts),
            labels: self.labels.clone(),
        }
    }

    /// Edges in deterministic order: all arcs `(u, v)` ascending for
    /// directed graphs, canonical pairs `u <= v` for undirected ones.
    pub fn edges(&self) -> Vec<(NodeId, NodeId)> {
        let mut out = Vec::with_capacity(self.edge_count);
        for u in 0..self.node_count as NodeId {
            for &v in self.out_neighbors(u) {
                if self.directed || u <= v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// Neighbor sets of the undirected simple projection: edge directions
    /// dropped, self-loops removed, each list sorted and duplicate-free.
    pub fn undirected_projection(&self) -> Vec<Vec<NodeId>> {
        let mut adj = vec![Vec::new(); self.node_count];
        for (u, v) in self.edges() {
            if u == v {
                continue;
            }
            adj[u as usize].push(v);
            adj[v as usize].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
        }
        adj
    }

    /// Display label for a node: its string label when the graph has one,
    /// otherwise the decimal id.
    pub fn label_of(&self, u: NodeId) -> String {
        match &self.labels {
            Some(labels) if (u as usize) < labels.names.len() => labels.names[u as usize].clone(),
            _ => u.to_string(),
        }
    }

    /// Resolves a label (or, for unlabeled graphs, a decimal id) to a node.
    /// Unknown labels report up to three close matches.
    pub fn node_by_label(&self, label: &str) -> Result<NodeId> {
        if let Some(labels) = &self.labels {
            if let Some(&id) = labels.index.get(label) {
                return Ok(id);
            }
            return Err(Error::UnknownLabel {
                label: label.to_owned(),
                suggestions: suggest(label, labels.index.keys()),
            });
        }
        match label.parse::<NodeId>() {
            Ok(id) if (id as usize) < self.node_count => Ok(id),
            Ok(id) => Err(Error::NodeOutOfRange {
                node: id,
                node_count: self.node_count,
            }),
            Err(_) => Err(Error::UnknownLabel {
                label: label.to_owned(),
                suggestions: Vec::new(),
            }),
        }
    }

    /// `2·|E| / |V|`.
    pub fn avg_degree(&self) -> f64 {
        2.0 * self.edge_count as f64 / self.node_count as f64
    }

    /// Fraction of edges that are bridges of the undirected projection.
    /// An edge counts as a bridge when removing its projected pair
    /// disconnects the projection. Self-loops never count. 0 when the
    /// graph has no edges.
    pub fn bridge_fraction(&self) -> f64 {
        if self.edge_count == 0 {
            return 0.0;
        }
        let bridges = projection_bridges(&self.undirected_projection());
        let hits = self
            .edges()
            .iter()
            .filter(|&&(u, v)| {
                u != v && bridges.contains_key(&(u.min(v), u.max(v)))
            })
            .count();
        hits as f64 / self.edge_count as f64
    }

    pub fn stats(&self) -> GraphStats {
        GraphStats {
            node_count: self.node_count,
            edge_count: self.edge_count,
            avg_degree: self.avg_degree(),
            bridge_fraction: self.bridge_fraction(),
        }
    }

    /// Serializes the edge list as tab-separated label pairs, one edge per
    /// line, in the order of [`Graph::edges`]. Round-trips through
    /// [`load_edge_list`] for graphs without isolated nodes.
    pub fn to_edge_list(&self) -> String {
        let mut out = String::new();
        for (u, v) in self.edges() {
            out.push_str(&self.label_of(u));
            out.push('\t');
            out.push_str(&self.label_of(v));
            out.push('\n');
        }
        out
    }
}

/// Bridge pairs `(min, max)` of a simple undirected adjacency structure,
/// found with an iterative lowlink depth-first search.
fn projection_bridges(adj: &[Vec<NodeId>]) -> BTreeMap<(NodeId, NodeId), ()> {
    const UNSEEN: u32 = u32::MAX;
    let n = adj.len();
    let mut disc = vec![UNSEEN; n];
    let mut low = vec![0u32; n];
    let mut timer = 0u32;
    let mut bridges = BTreeMap::new();
    // Frame: (node, parent, next neighbor index).
    let mut stack: Vec<(u32, u32, usize)> = Vec::new();

    for root in 0..n as u32 {
        if disc[root as usize] != UNSEEN {
            continue;
        }
        stack.push((root, UNSEEN, 0));
        while let Some(&(u, parent, idx)) = stack.last() {
            if idx == 0 {
                disc[u as usize] = timer;
                low[u as usize] = timer;
                timer += 1;
            }
            if idx < adj[u as usize].len() {
                stack.last_mut().unwrap().2 += 1;
                let v = adj[u as usize][idx];
                if disc[v as usize] == UNSEEN {
                    stack.push((v, u, 0));
                } else if v != parent {
                    low[u as usize] = low[u as usize].min(disc[v as usize]);
                }
            } else {
                stack.pop();
                if let Some(&(p, _, _)) = stack.last() {
                    low[p as usize] = low[p as usize].min(low[u as usize]);
                    if low[u as usize] > disc[p as usize] {
                        bridges.insert((p.min(u), p.max(u)), ());
                    }
                }
            }
        }
    }
    bridges
}

/// Up to three labels within Levenshtein distance 2 of `query`
/// (case-insensitive), closest first.
fn suggest<'a>(query: &str, labels: impl Iterator<Item = &'a String>) -> Vec<String> {
    let needle = query.to_lowercase();
    let mut scored: Vec<(usize, &'a String)> = labels
        .filter_map(|label| {
            let d = levenshtein(&needle, &label.to_lowercase());
            (d <= 2).then_some((d, label))
        })
        .collect();
    scored.sort_by(|a, b| a.0.cmp(&b.0).then_with(|| a.1.cmp(b.1)));
    scored.into_iter().take(3).map(|(_, l)| l.clone()).collect()
}

fn levenshtein(a: &str, b: &str) -> usize {
    let a: Vec<char> = a.chars().collect();
    let b: Vec<char> = b.chars().collect();
    let mut prev: Vec<usize> = (0..=b.len()).collect();
    let mut cur = vec![0usize; b.len() + 1];
    for (i, &ca) in a.iter().enumerate() {
        cur[0] = i + 1;
        for (j, &cb) in b.iter().enumerate() {
            let sub = prev[j] + usize::from(ca != cb);
            cur[j + 1] = sub.min(prev[j + 1] + 1).min(cur[j] + 1);
        }
        core::mem::swap(&mut prev, &mut cur);
    }
    prev[b.len()]
}

/// Parses a whitespace-separated edge list: two node labels per line,
/// `#` to end of line is a comment, blank lines are skipped. Labels are
/// interned in order of first appearance, so node ids are dense and
/// deterministic. Inputs with no edges yield [`Error::EmptyGraph`].
pub fn load_edge_list(text: &str, directed: bool) -> Result<Graph> {
    let mut names: Vec<String> = Vec::new();
    let mut index: BTreeMap<String, NodeId> = BTreeMap::new();
    let mut edges: Vec<(NodeId, NodeId)> = Vec::new();

    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let mut tokens = line.split_whitespace();
        let (Some(u), Some(v)) = (tokens.next(), tokens.next()) else {
            return Err(Error::Parse {
                line: lineno + 1,
                message: alloc::format!("expected two node labels, found {line:?}"),
            });
        };
        if let Some(extra) = tokens.next() {
            return Err(Error::Parse {
                line: lineno + 1,
                message: alloc::format!("unexpected trailing token {extra:?}"),
            });
        }
        let mut intern = |tok: &str| -> NodeId {
            if let Some(&id) = index.get(tok) {
                return id;
            }
            let id = names.len() as NodeId;
            names.push(tok.to_owned());
            index.insert(tok.to_owned(), id);
            id
        };
        let ue = intern(u);
        let ve = intern(v);
        edges.push((ue, ve));
    }

    if names.is_empty() {
        return Err(Error::EmptyGraph);
    }
    Graph::with_labels(names, &edges, directed)
}
