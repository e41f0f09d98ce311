//! Two-sided similarity: combiners, candidate pruning, ordering, and the
//! reference-graph combined row.

use fbs_core::eval::golden::{reference_graph, reference_rankings, tie_groups};
use fbs_core::fbs::{
    backward_mode, combine_linear, combine_saturation, fbs_query, fbs_two_feature, forward_mode,
    CombinerSpec, FbsConfig,
};
use fbs_core::graph::Graph;
use fbs_core::ppr::{ppr_rank, PprConfig};
use fbs_core::Error;

fn cfg_linear(lambda: f64) -> FbsConfig {
    FbsConfig {
        combiner: CombinerSpec::Linear { lambda },
        ..FbsConfig::default()
    }
}

fn node(g: &Graph, label: &str) -> u32 {
    g.node_by_label(label).unwrap()
}

#[test]
fn combiners_hit_pinned_values() {
    assert_eq!(combine_linear(0.3, 0.7, 1.0), 0.3);
    assert_eq!(combine_linear(0.3, 0.7, 0.0), 0.7);
    assert!((combine_linear(0.2, 0.4, 0.5) - 0.3).abs() < 1e-15);
    assert_eq!(combine_saturation(0.0, 0.0, 0.571, 0.72, 0.3), 0.0);
    // A feature equal to its saturation constant is squashed to 1/2.
    assert!((combine_saturation(0.72, 0.0, 0.571, 0.72, 0.3) - 0.2855).abs() < 1e-12);
    let spec = CombinerSpec::saturation_preset();
    assert!((spec.combine(0.72, 0.0) - 0.2855).abs() < 1e-12);
    // Saturation stays below 1 even for huge inputs.
    assert!(combine_saturation(1e12, 1e12, 0.5, 0.72, 0.3) < 1.0);
}

#[test]
fn invalid_combiners_are_rejected() {
    assert!(CombinerSpec::Linear { lambda: -0.1 }.validate().is_err());
    assert!(CombinerSpec::Linear { lambda: 1.1 }.validate().is_err());
    assert!(CombinerSpec::Saturation {
        lambda: 0.5,
        k1: 0.0,
        k2: 0.3
    }
    .validate()
    .is_err());
    assert!(CombinerSpec::saturation_preset().validate().is_ok());
}

#[test]
fn forward_mode_is_the_ppr_prefix() {
    let g = reference_graph();
    let q = node(&g, "G");
    let ppr_cfg = PprConfig::default();
    let fwd = forward_mode(&g, q, 20, &ppr_cfg).unwrap();
    // All 11 reachable nodes, no zero-score entries.
    assert_eq!(fwd.len(), 11);
    let ranked = ppr_rank(&g, q, &ppr_cfg).unwrap();
    let fwd_nodes: Vec<u32> = fwd.iter().map(|&(v, _)| v).collect();
    let ppr_nodes: Vec<u32> = ranked.iter().map(|&(v, _)| v).collect();
    assert_eq!(fwd_nodes, ppr_nodes);
    // n=1 keeps only the query.
    let top1 = forward_mode(&g, q, 1, &ppr_cfg).unwrap();
    assert_eq!(top1.len(), 1);
    assert_eq!(top1[0].0, q);
}

#[test]
fn backward_mode_scores_unreachable_candidates_zero() {
    // 0 -> 1 -> 2 and isolated-ish 3 -> 0: from candidate 2 the query 0
    // is unreachable on the reversed graph only if no path 0 -> ... -> 2
    // exists there, i.e. no path 2 -> 0 here. Use a pure chain.
    let g = Graph::new(3, &[(0, 1), (1, 2)], true).unwrap();
    let rev = g.reverse();
    let cands = vec![(0u32, 1.0), (1u32, 0.5), (2u32, 0.25)];
    let bwd = backward_mode(&rev, &cands, 0, &PprConfig::default()).unwrap();
    assert!(bwd[&0] > 0.0);
    assert!(bwd[&1] > 0.0);
    assert!(bwd[&2] > 0.0);
    // Reverse the chain: candidates upstream of the query get exactly 0.
    let g2 = Graph::new(3, &[(1, 0), (2, 1)], true).unwrap();
    let rev2 = g2.reverse();
    let bwd2 = backward_mode(&rev2, &cands, 0, &PprConfig::default()).unwrap();
    assert_eq!(bwd2[&1], 0.0);
    assert_eq!(bwd2[&2], 0.0);
}

#[test]
fn reference_graph_combined_row_matches_exact_arithmetic() {
    let g = reference_graph();
    let result = fbs_query(&g, node(&g, "G"), &cfg_linear(0.5)).unwrap();
    // Exact leaky values: combined = (raw_forward + raw_backward) / 2.
    let expect = [
        ("G", 0.15),
        ("D", 0.10040625),
        ("E", 0.0796875),
        ("F", 0.0796875),
        ("A", 0.0609609375),
        ("B", 0.0609609375),
        ("C", 0.0609609375),
        ("H", 0.031875),
        ("I", 0.0180625),
        ("J", 0.0180625),
        ("K", 0.0180625),
    ];
    assert_eq!(result.candidates.len(), 11);
    for (label, want) in expect {
        let cand = result
            .candidates
            .iter()
            .find(|c| c.node == node(&g, label))
            .unwrap_or_else(|| panic!("{label} missing"));
        assert!(
            (cand.combined - want).abs() <= 1e-6,
            "combined at {label}: got {}, want {want}",
            cand.combined
        );
    }
    // Ordering matches the documented reference row.
    let ranked: Vec<(u32, f64)> = result
        .rows(g.node_count(), None, true)
        .iter()
        .map(|c| (c.node, c.combined))
        .collect();
    let groups: Vec<Vec<String>> = tie_groups(&ranked, 1e-9)
        .into_iter()
        .map(|grp| grp.into_iter().map(|v| g.label_of(v)).collect())
        .collect();
    let want: Vec<Vec<String>> = reference_rankings()
        .fbs
        .into_iter()
        .map(|grp| grp.into_iter().map(String::from).collect())
        .collect();
    assert_eq!(groups, want);
}

#[test]
fn lambda_one_reduces_to_forward_order() {
    let g = reference_graph();
    let q = node(&g, "G");
    let result = fbs_query(&g, q, &cfg_linear(1.0)).unwrap();
    let fbs_order: Vec<u32> = result.candidates.iter().map(|c| c.node).collect();
    let ppr_order: Vec<u32> = ppr_rank(&g, q, &PprConfig::default())
        .unwrap()
        .iter()
        .map(|&(v, _)| v)
        .collect();
    assert_eq!(fbs_order, ppr_order);
}

#[test]
fn forward_candidates_always_have_positive_backward() {
    // A node enters the candidate list only if it is reachable from the
    // query, and then the query is reachable from it on the reversed
    // graph, so its backward score is positive too. This makes the
    // zero-backward fallback ordering purely defensive for fbs_query.
    let chain = Graph::new(4, &[(0, 1), (1, 2), (2, 3)], true).unwrap();
    for (g, q) in [(&chain, 0u32), (&reference_graph(), 6u32)] {
        let result = fbs_query(g, q, &cfg_linear(0.0)).unwrap();
        for c in &result.candidates {
            assert!(c.forward > 0.0);
            assert!(
                c.backward > 0.0,
                "candidate {} has zero backward score",
                c.node
            );
        }
    }
    // At lambda=0 the combined score is the backward score and the
    // result is ordered by it.
    let result = fbs_query(&chain, 0, &cfg_linear(0.0)).unwrap();
    for c in &result.candidates {
        assert_eq!(c.combined, c.backward);
    }
    for w in result.candidates.windows(2) {
        assert!(w[0].combined >= w[1].combined);
    }
}

#[test]
fn two_feature_matches_direct_runs() {
    let g = reference_graph();
    let cfg = FbsConfig {
        ppr: PprConfig {
            tolerance: 1e-12,
            max_iterations: 10_000,
            ..PprConfig::default()
        },
        ..FbsConfig::default()
    };
    let (fwd, bwd) = fbs_two_feature(&g, node(&g, "G"), node(&g, "H"), &cfg).unwrap();
    // Normalized forward: raw 0.031875 over the leaky total 0.431934375.
    assert!((fwd - 0.031875 / 0.431934375).abs() <= 1e-9);
    // Normalized backward: raw 0.031875 over the leaky total 0.2775 of
    // the reversed run from H.
    assert!((bwd - 0.031875 / 0.2775).abs() <= 1e-9);
    assert!((bwd - 0.11486486486486486).abs() <= 1e-9);
}

#[test]
fn two_feature_on_a_single_node_graph_is_unit() {
    let g = Graph::new(1, &[], true).unwrap();
    let (fwd, bwd) = fbs_two_feature(&g, 0, 0, &FbsConfig::default()).unwrap();
    assert_eq!((fwd, bwd), (1.0, 1.0));
}

#[test]
fn two_feature_is_symmetric_on_a_two_cycle() {
    let g = Graph::new(2, &[(0, 1), (1, 0)], true).unwrap();
    let cfg = FbsConfig::default();
    let (fwd, bwd) = fbs_two_feature(&g, 0, 1, &cfg).unwrap();
    assert_eq!(fwd, bwd);
}

#[test]
fn candidate_set_is_contained_in_forward_list() {
    let g = reference_graph();
    let q = node(&g, "G");
    let cfg = FbsConfig {
        n: 5,
        ..cfg_linear(0.5)
    };
    let result = fbs_query(&g, q, &cfg).unwrap();
    assert_eq!(result.candidates.len(), 5);
    let fwd: Vec<u32> = forward_mode(&g, q, 5, &cfg.ppr)
        .unwrap()
        .iter()
        .map(|&(v, _)| v)
        .collect();
    for c in &result.candidates {
        assert!(fwd.contains(&c.node));
    }
}

#[test]
fn extra_rounds_reach_a_fixpoint_on_the_reference_graph() {
    let g = reference_graph();
    let q = node(&g, "G");
    let one = fbs_query(&g, q, &cfg_linear(0.5)).unwrap();
    let many = fbs_query(
        &g,
        q,
        &FbsConfig {
            rounds: 5,
            ..cfg_linear(0.5)
        },
    )
    .unwrap();
    assert_eq!(one, many);
}

#[test]
fn invalid_config_is_rejected() {
    let g = reference_graph();
    assert!(matches!(
        fbs_query(&g, 0, &FbsConfig { n: 0, ..FbsConfig::default() }),
        Err(Error::InvalidInput(_))
    ));
    assert!(matches!(
        fbs_query(&g, 0, &FbsConfig { rounds: 0, ..FbsConfig::default() }),
        Err(Error::InvalidInput(_))
    ));
    assert!(matches!(
        fbs_query(&g, 0, &cfg_linear(1.5)),
        Err(Error::InvalidInput(_))
    ));
}

#[test]
fn result_tsv_has_five_columns_and_stable_ranks() {
    let g = reference_graph();
    let result = fbs_query(&g, node(&g, "G"), &cfg_linear(0.5)).unwrap();
    let tsv = result.to_tsv(&g, Some(3), false);
    let lines: Vec<&str> = tsv.lines().collect();
    assert_eq!(lines.len(), 3);
    let first: Vec<&str> = lines[0].split('\t').collect();
    assert_eq!(first.len(), 5);
    assert_eq!(first[0], "1");
    assert_eq!(first[1], "G");
    // include_zero pads the tail with zero rows in id order.
    let padded = result.to_tsv(&g, None, true);
    assert_eq!(padded.lines().count(), 14);
    let last: Vec<&str> = padded.lines().last().unwrap().split('\t').collect();
    assert_eq!(last[1], "N");
    assert_eq!(last[4], "0.000000000");
}
