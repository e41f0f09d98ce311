//! Planted partition benchmark graphs: known community structure with
//! Bernoulli edge probabilities inside and across communities.

use alloc::format;
use alloc::string::ToString;
use alloc::vec::Vec;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::eval::metrics::CommunityAssignment;
use crate::graph::{Graph, NodeId};

/// Generates a planted partition graph: `k` communities of `size` nodes
/// each, every distinct node pair drawn independently with probability
/// `p_in` inside a community and `p_out` across (`p_in > p_out` so the
/// planted structure exists; no self-loops). Node `i` belongs to
/// community `i / size`; communities are named by their index. Pairs are
/// visited in a fixed row-major order, so output is deterministic per
/// seed.
pub fn planted_partition(
    k: usize,
    size: usize,
    p_in: f64,
    p_out: f64,
    directed: bool,
    seed: u64,
) -> Result<(Graph, CommunityAssignment)> {
    if k == 0 || size == 0 {
        return Err(Error::InvalidInput(
            "planted partition needs k >= 1 communities of size >= 1".into(),
        ));
    }
    for (name, p) in [("p_in", p_in), ("p_out", p_out)] {
        if !(0.0..=1.0).contains(&p) {
            return Err(Error::InvalidInput(format!(
                "{name} must lie in [0, 1], got {p}"
            )));
        }
    }
    if p_in <= p_out {
        return Err(Error::InvalidInput(format!(
            "planted structure needs p_in > p_out, got p_in={p_in}, p_out={p_out}"
        )));
    }

    let n = k * size;
    let community = |i: usize| (i / size) as u32;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges: Vec<(NodeId, NodeId)> = Vec::new();
    for i in 0..n {
        let j_start = if directed { 0 } else { i + 1 };
        for j in j_start..n {
            if i == j {
                continue;
            }
            let p = if community(i) == community(j) { p_in } else { p_out };
            if rng.random::<f64>() < p {
                edges.push((i as NodeId, j as NodeId));
            }
        }
    }

    let graph = Graph::new(n, &edges, directed)?;
    let labels: Vec<u32> = (0..n).map(community).collect();
    let names = (0..k).map(|c| c.to_string()).collect();
    let assignment = CommunityAssignment::from_single_labels(&labels, names)?;
    Ok((graph, assignment))
}
