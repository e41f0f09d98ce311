//! Ranking-quality and community metrics, plus the community and
//! relevance file formats.

use alloc::borrow::ToOwned;
use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::graph::{Graph, NodeId};
use crate::math;

/// Jaccard coefficient of two sets; two empty sets score 0.
pub fn jaccard<T: Ord>(a: &BTreeSet<T>, b: &BTreeSet<T>) -> f64 {
    let inter = a.intersection(b).count();
    let union = a.len() + b.len() - inter;
    if union == 0 {
        0.0
    } else {
        inter as f64 / union as f64
    }
}

/// Ground-truth community memberships: a set of community labels per
/// node. Labels are opaque strings, interned to dense ids.
#[derive(Debug, Clone, PartialEq)]
pub struct CommunityAssignment {
    names: Vec<String>,
    membership: Vec<BTreeSet<u32>>,
}

impl CommunityAssignment {
    /// One community per node. `labels[i]` must index into `names`.
    pub fn from_single_labels(labels: &[u32], names: Vec<String>) -> Result<CommunityAssignment> {
        for &l in labels {
            if l as usize >= names.len() {
                return Err(Error::InvalidInput(format!(
                    "community id {l} has no name (have {})",
                    names.len()
                )));
            }
        }
        Ok(CommunityAssignment {
            names,
            membership: labels.iter().map(|&l| BTreeSet::from([l])).collect(),
        })
    }

    /// Parses `node \t comm1,comm2,...` lines against a graph's node
    /// labels. `#` starts a comment; blank lines are skipped. Every line
    /// must name a node of the graph, each node at most once. Graph nodes
    /// missing from the file end up with an empty community set and are
    /// skipped (with a count) by query-based evaluations.
    pub fn parse(text: &str, graph: &Graph) -> Result<CommunityAssignment> {
        let mut names: Vec<String> = Vec::new();
        let mut name_ids: BTreeMap<String, u32> = BTreeMap::new();
        let mut membership = vec![BTreeSet::new(); graph.node_count()];
        let mut seen = vec![false; graph.node_count()];

        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let mut tokens = line.split_whitespace();
            let (Some(node_tok), Some(comm_tok)) = (tokens.next(), tokens.next()) else {
                return Err(Error::Parse {
                    line: lineno + 1,
                    message: format!("expected `node\tcomm1,comm2,...`, found {line:?}"),
                });
            };
            if let Some(extra) = tokens.next() {
                return Err(Error::Parse {
                    line: lineno + 1,
                    message: format!("unexpected trailing token {extra:?}"),
                });
            }
            let node = graph.node_by_label(node_tok)?;
            if seen[node as usize] {
                return Err(Error::Parse {
                    line: lineno + 1,
                    message: format!("duplicate entry for node {node_tok:?}"),
                });
            }
            seen[node as usize] = true;
            for comm in comm_tok.split(',') {
                if comm.is_empty() {
                    return Err(Error::Parse {
                        line: lineno + 1,
                        message: "empty community label".to_owned(),
                    });
                }
                let id = *name_ids.entry(comm.to_owned()).or_insert_with(|| {
                    names.push(comm.to_owned());
                    (names.len() - 1) as u32
                });
                membership[node as usize].insert(id);
            }
        }
        Ok(CommunityAssignment { names, membership })
    }

    /// Serializes in the `node \t comm1,comm2,...` file format, nodes in
    /// id order; nodes without communities are omitted.
    pub fn to_community_text(&self, graph: &Graph) -> String {
        let mut out = String::new();
        for (i, comms) in self.membership.iter().enumerate() {
            if comms.is_empty() {
                continue;
            }
            let list: Vec<&str> = comms.iter().map(|&c| self.names[c as usize].as_str()).collect();
            out.push_str(&format!(
                "{}\t{}\n",
                graph.label_of(i as NodeId),
                list.join(",")
            ));
        }
        out
    }

    pub fn node_count(&self) -> usize {
        self.membership.len()
    }

    pub fn community_count(&self) -> usize {
        self.names.len()
    }

    pub fn community_name(&self, id: u32) -> &str {
        &self.names[id as usize]
    }

    /// Community set of a node; empty when the node was not covered.
    pub fn membership(&self, u: NodeId) -> &BTreeSet<u32> {
        &self.membership[u as usize]
    }

    /// Mean number of communities per node, nodes without any counted as
    /// zero. Errors on an empty assignment.
    pub fn cpv(&self) -> Result<f64> {
        if self.membership.is_empty() {
            return Err(Error::InvalidInput(
                "communities-per-vertex of an empty assignment".into(),
            ));
        }
        let total: usize = self.membership.iter().map(|s| s.len()).sum();
        Ok(total as f64 / self.membership.len() as f64)
    }

    /// Collapses to one community per node (the lowest-id label) for
    /// metrics that need a partition. Errors if any node is unlabeled.
    pub fn partition(&self) -> Result<Vec<u32>> {
        self.membership
            .iter()
            .enumerate()
            .map(|(i, s)| {
                s.first().copied().ok_or_else(|| {
                    Error::InvalidInput(format!("node id {i} has no community label"))
                })
            })
            .collect()
    }
}

/// Average Jaccard at `k`, evaluated literally as
/// `(sum_{j=1..k} sum_{i=1..j} J_i) / k` where `J_i` is the Jaccard
/// coefficient between the query's community set and that of the rank-i
/// result. Rank i is thereby weighted `(k - i + 1) / k`, so the value can
/// exceed 1 (constant `J` gives `J (k+1)/2`).
pub fn aj_at_k(
    query_comms: &BTreeSet<u32>,
    ranked_comms: &[&BTreeSet<u32>],
    k: usize,
) -> Result<f64> {
    check_aj_args(ranked_comms.len(), k)?;
    let mut prefix = 0.0f64;
    let mut total = 0.0f64;
    for comms in ranked_comms.iter().take(k) {
        prefix += jaccard(query_comms, comms);
        total += prefix;
    }
    Ok(total / k as f64)
}

/// Position-normalized variant of [`aj_at_k`]: each inner prefix sum is
/// divided by its own length `j`, keeping the value in `[0, 1]`.
pub fn aj_at_k_normalized(
    query_comms: &BTreeSet<u32>,
    ranked_comms: &[&BTreeSet<u32>],
    k: usize,
) -> Result<f64> {
    check_aj_args(ranked_comms.len(), k)?;
    let mut prefix = 0.0f64;
    let mut total = 0.0f64;
    for (j, comms) in ranked_comms.iter().take(k).enumerate() {
        prefix += jaccard(query_comms, comms);
        total += prefix / (j + 1) as f64;
    }
    Ok(total / k as f64)
}

fn check_aj_args(len: usize, k: usize) -> Result<()> {
    if k == 0 {
        return Err(Error::InvalidInput("aj@k needs k >= 1".into()));
    }
    if k > len {
        return Err(Error::InvalidInput(format!(
            "aj@k needs at least k ranked entries (k={k}, got {len})"
        )));
    }
    Ok(())
}

/// Mean average Jaccard over queries: the mean of [`aj_at_k`] of each
/// query's ranking. Queries without community labels are skipped; the
/// second return value counts them. Rankings shorter than `k` are padded
/// with zero-overlap entries. Errors when every query is skipped.
pub fn maj_at_k(
    queries: &[NodeId],
    rankings: &[Vec<NodeId>],
    comms: &CommunityAssignment,
    k: usize,
) -> Result<(f64, usize)> {
    if queries.is_empty() {
        return Err(Error::InvalidInput("maj@k needs at least one query".into()));
    }
    if queries.len() != rankings.len() {
        return Err(Error::InvalidInput(format!(
            "maj@k got {} queries but {} rankings",
            queries.len(),
            rankings.len()
        )));
    }
    if k == 0 {
        return Err(Error::InvalidInput("maj@k needs k >= 1".into()));
    }
    let mut total = 0.0f64;
    let mut used = 0usize;
    let mut skipped = 0usize;
    for (&q, ranking) in queries.iter().zip(rankings) {
        let s_q = comms.membership(q);
        if s_q.is_empty() {
            skipped += 1;
            continue;
        }
        let mut prefix = 0.0f64;
        let mut sum = 0.0f64;
        for j in 0..k {
            if let Some(&v) = ranking.get(j) {
                prefix += jaccard(s_q, comms.membership(v));
            }
            sum += prefix;
        }
        total += sum / k as f64;
        used += 1;
    }
    if used == 0 {
        return Err(Error::InvalidInput(
            "maj@k: no query has community labels".into(),
        ));
    }
    Ok((total / used as f64, skipped))
}

/// Normalized discounted cumulative gain at `k` over graded relevances
/// in retrieved order: gain `2^rel - 1`, discount `log2(i + 1)` at rank
/// `i`, normalized by the DCG of the descending-sorted relevances. An
/// all-zero relevance list scores 0.
pub fn ndcg_at_k(relevance_in_rank_order: &[u32], k: usize) -> Result<f64> {
    if k == 0 {
        return Err(Error::InvalidInput("ndcg@k needs k >= 1".into()));
    }
    if k > relevance_in_rank_order.len() {
        return Err(Error::InvalidInput(format!(
            "ndcg@k needs at least k entries (k={k}, got {})",
            relevance_in_rank_order.len()
        )));
    }
    let dcg = dcg_at_k(relevance_in_rank_order, k);
    let mut ideal: Vec<u32> = relevance_in_rank_order.to_vec();
    ideal.sort_unstable_by(|a, b| b.cmp(a));
    let idcg = dcg_at_k(&ideal, k);
    if idcg == 0.0 {
        Ok(0.0)
    } else {
        Ok(dcg / idcg)
    }
}

fn dcg_at_k(rels: &[u32], k: usize) -> f64 {
    rels.iter()
        .take(k)
        .enumerate()
        .map(|(i, &rel)| (math::exp2(rel as f64) - 1.0) / math::log2((i + 2) as f64))
        .sum()
}

/// Newman modularity of a total partition on the undirected simple
/// projection: `Q = sum_c (e_c/m - (d_c/(2m))^2)` with `e_c` the
/// intra-community edge count and `d_c` the community degree sum.
/// A single community scores exactly 0; an edgeless graph scores 0.
pub fn modularity(graph: &Graph, partition: &[u32]) -> Result<f64> {
    if partition.len() != graph.node_count() {
        return Err(Error::InvalidInput(format!(
            "partition labels {} nodes but the graph has {}",
            partition.len(),
            graph.node_count()
        )));
    }
    let adj = graph.undirected_projection();
    let degree_total: usize = adj.iter().map(|l| l.len()).sum();
    if degree_total == 0 {
        return Ok(0.0);
    }
    let m = degree_total as f64 / 2.0;

    let ncomm = partition.iter().map(|&c| c as usize + 1).max().unwrap_or(0);
    let mut intra = vec![0.0f64; ncomm];
    let mut degsum = vec![0.0f64; ncomm];
    for (u, nbrs) in adj.iter().enumerate() {
        let cu = partition[u] as usize;
        degsum[cu] += nbrs.len() as f64;
        for &v in nbrs {
            if u as NodeId <= v && partition[v as usize] as usize == cu {
                intra[cu] += 1.0;
            }
        }
    }
    let q = (0..ncomm)
        .map(|c| intra[c] / m - (degsum[c] / (2.0 * m)) * (degsum[c] / (2.0 * m)))
        .sum();
    Ok(q)
}

/// A graded relevance judgment list: candidates with integer vote counts
/// in `[0, 20]` that total exactly 20, in retrieved rank order.
#[derive(Debug, Clone, PartialEq)]
pub struct RelevanceList {
    pub entries: Vec<(String, u32)>,
}

impl RelevanceList {
    /// Parses `candidate \t votes` lines; `#` comments and blank lines
    /// are skipped. Votes must each lie in `[0, 20]` and sum to 20;
    /// duplicate candidates are rejected.
    pub fn parse(text: &str) -> Result<RelevanceList> {
        let mut entries: Vec<(String, u32)> = Vec::new();
        let mut seen: BTreeSet<String> = BTreeSet::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let mut tokens = line.split_whitespace();
            let (Some(cand), Some(votes_tok)) = (tokens.next(), tokens.next()) else {
                return Err(Error::Parse {
                    line: lineno + 1,
                    message: format!("expected `candidate\tvotes`, found {line:?}"),
                });
            };
            if let Some(extra) = tokens.next() {
                return Err(Error::Parse {
                    line: lineno + 1,
                    message: format!("unexpected trailing token {extra:?}"),
                });
            }
            let votes: u32 = votes_tok.parse().map_err(|_| Error::Parse {
                line: lineno + 1,
                message: format!("votes must be a non-negative integer, found {votes_tok:?}"),
            })?;
            if votes > 20 {
                return Err(Error::Parse {
                    line: lineno + 1,
                    message: format!("votes must lie in [0, 20], found {votes}"),
                });
            }
            if !seen.insert(cand.to_owned()) {
                return Err(Error::Parse {
                    line: lineno + 1,
                    message: format!("duplicate candidate {cand:?}"),
                });
            }
            entries.push((cand.to_owned(), votes));
        }
        let total: u32 = entries.iter().map(|(_, v)| v).sum();
        if total != 20 {
            return Err(Error::Parse {
                line: 0,
                message: format!("votes must total 20, found {total}"),
            });
        }
        Ok(RelevanceList { entries })
    }

    /// Vote counts in retrieved order, ready for [`ndcg_at_k`].
    pub fn relevances(&self) -> Vec<u32> {
        self.entries.iter().map(|(_, v)| *v).collect()
    }
}
