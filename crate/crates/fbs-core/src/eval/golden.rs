//! Built-in reference example: a 14-node, two-community directed graph
//! with known expected orderings per measure, used as the golden test
//! fixture throughout the crate.
//!
//! The graph: a hub `G` fans out to `D`, `E`, `F`, `H`; `E` and `F` feed
//! `D`; `D` fans out to leaves `A`, `B`, `C`; `H` fans out to leaves
//! `I`, `J`, `K` and is pointed at by `L`, `M`, `N`. Communities split
//! `{A..G}` (white) from `{H..N}` (grey).

use alloc::string::ToString;
use alloc::vec;
use alloc::vec::Vec;

use crate::eval::metrics::CommunityAssignment;
use crate::graph::{Graph, NodeId};
use crate::math;

/// Labels in node-id order.
const LABELS: [&str; 14] = [
    "A", "B", "C", "D", "E", "F", "G", "H", "I", "J", "K", "L", "M", "N",
];

fn id(label: &str) -> NodeId {
    LABELS.iter().position(|&l| l == label).unwrap() as NodeId
}

/// The reference graph: 14 nodes, 15 directed edges.
pub fn reference_graph() -> Graph {
    let edge = |a: &str, b: &str| (id(a), id(b));
    let edges = [
        edge("G", "D"),
        edge("G", "E"),
        edge("G", "F"),
        edge("G", "H"),
        edge("E", "D"),
        edge("F", "D"),
        edge("D", "A"),
        edge("D", "B"),
        edge("D", "C"),
        edge("H", "I"),
        edge("H", "J"),
        edge("H", "K"),
        edge("L", "H"),
        edge("M", "H"),
        edge("N", "H"),
    ];
    Graph::with_labels(
        LABELS.iter().map(|l| l.to_string()).collect(),
        &edges,
        true,
    )
    .expect("reference graph is valid")
}

/// The reference graph's two communities: `white` = A..G, `grey` = H..N.
pub fn reference_communities() -> CommunityAssignment {
    let labels: Vec<u32> = (0..14).map(|i| u32::from(i >= 7)).collect();
    CommunityAssignment::from_single_labels(
        &labels,
        vec!["white".to_string(), "grey".to_string()],
    )
    .expect("reference communities are valid")
}

/// Expected tie-group orderings on the reference graph for query `G`,
/// one list of label groups per measure, best group first. Nodes scoring
/// zero form the trailing group.
#[derive(Debug, Clone, PartialEq)]
pub struct ReferenceRankings {
    /// Personalized PageRank, ε=0.15.
    pub ppr: Vec<Vec<&'static str>>,
    /// Two-sided similarity, linear combiner λ=0.5.
    pub fbs: Vec<Vec<&'static str>>,
    /// Personalized SALSA, α=0.15.
    pub psalsa: Vec<Vec<&'static str>>,
    /// Adamic-Adar (query and its direct partner score 0: no common
    /// neighbor with themselves).
    pub adamic_adar: Vec<Vec<&'static str>>,
    /// SimRank, c=0.8.
    pub simrank: Vec<Vec<&'static str>>,
}

/// The five known orderings for query `G`.
pub fn reference_rankings() -> ReferenceRankings {
    ReferenceRankings {
        ppr: vec![
            vec!["G"],
            vec!["D"],
            vec!["E", "F", "H"],
            vec!["A", "B", "C"],
            vec!["I", "J", "K"],
            vec!["L", "M", "N"],
        ],
        fbs: vec![
            vec!["G"],
            vec!["D"],
            vec!["E", "F"],
            vec!["A", "B", "C"],
            vec!["H"],
            vec!["I", "J", "K"],
            vec!["L", "M", "N"],
        ],
        psalsa: vec![
            vec!["G"],
            vec!["H"],
            vec!["D"],
            vec!["E", "F"],
            vec!["A", "B", "C", "I", "J", "K", "L", "M", "N"],
        ],
        adamic_adar: vec![
            vec!["D"],
            vec!["A", "B", "C", "E", "F"],
            vec!["I", "J", "K", "L", "M", "N"],
            vec!["G", "H"],
        ],
        simrank: vec![
            vec!["G"],
            vec!["I", "J", "K", "L", "M", "N"],
            vec!["A", "B", "C"],
            vec!["D"],
            vec!["E", "F"],
            vec!["H"],
        ],
    }
}

/// Groups a descending ranked list into tie groups: consecutive entries
/// whose scores differ by at most `tol` share a group. Each group's node
/// ids are ascending.
pub fn tie_groups(ranked: &[(NodeId, f64)], tol: f64) -> Vec<Vec<NodeId>> {
    let mut groups: Vec<Vec<NodeId>> = Vec::new();
    let mut last_score = f64::NAN;
    for &(node, score) in ranked {
        if !groups.is_empty() && math::abs(last_score - score) <= tol {
            groups.last_mut().unwrap().push(node);
        } else {
            groups.push(vec![node]);
        }
        last_score = score;
    }
    for group in &mut groups {
        group.sort_unstable();
    }
    groups
}
