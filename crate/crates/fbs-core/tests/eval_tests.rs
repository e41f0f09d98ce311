//! Evaluation toolkit: overlap metrics, graded-relevance gain, community
//! quality, link-prediction harness, and the planted-partition generator.

use std::collections::BTreeSet;

use fbs_core::eval::golden::{reference_communities, reference_graph, tie_groups};
use fbs_core::eval::linkpred::{
    build_link_prediction_set, logistic_cv_auc, pair_features, roc_points, trapezoid_auc,
    two_feature_matrix, PairFeature,
};
use fbs_core::eval::metrics::{
    aj_at_k, aj_at_k_normalized, jaccard, maj_at_k, modularity, ndcg_at_k, CommunityAssignment,
    RelevanceList,
};
use fbs_core::eval::synth::planted_partition;
use fbs_core::fbs::{fbs_two_feature, FbsConfig};
use fbs_core::graph::Graph;
use fbs_core::ppr::{ppr, PprConfig};
use fbs_core::Error;

fn set(items: &[u32]) -> BTreeSet<u32> {
    items.iter().copied().collect()
}

fn assert_close(got: f64, want: f64, tol: f64, what: &str) {
    assert!(
        (got - want).abs() <= tol,
        "{what}: got {got}, want {want} (tol {tol})"
    );
}

// ------------------------------------------------------------ set overlap

#[test]
fn jaccard_pins() {
    assert_close(jaccard(&set(&[1, 2]), &set(&[2, 3])), 1.0 / 3.0, 0.0, "1/3");
    assert_eq!(jaccard(&set(&[1, 2]), &set(&[1, 2])), 1.0);
    assert_eq!(jaccard(&set(&[1]), &set(&[2])), 0.0);
    assert_eq!(jaccard::<u32>(&set(&[]), &set(&[])), 0.0);
    assert_eq!(jaccard(&set(&[]), &set(&[1])), 0.0);
    assert_eq!(jaccard(&set(&[1]), &set(&[1, 2])), 0.5);
}

// --------------------------------------------------------- average Jaccard

#[test]
fn aj_at_k_weights_early_ranks_harder() {
    // Constant overlap J yields J*(k+1)/2: the metric exceeds 1 by design.
    let q = set(&[0]);
    let full = set(&[0]);
    let ranked: Vec<&BTreeSet<u32>> = vec![&full; 4];
    assert_eq!(aj_at_k(&q, &ranked, 4).unwrap(), 2.5);
    assert_eq!(aj_at_k(&q, &ranked, 1).unwrap(), 1.0);

    // J = (1, 1/2): aj@2 = (1 + 3/2) / 2.
    let q2 = set(&[0]);
    let exact = set(&[0]);
    let half = set(&[0, 1]);
    let ranked2: Vec<&BTreeSet<u32>> = vec![&exact, &half];
    assert_eq!(aj_at_k(&q2, &ranked2, 2).unwrap(), 1.25);
    assert_eq!(aj_at_k(&q2, &ranked2, 1).unwrap(), 1.0);

    // J constant at 0.4 (overlap 2 of union 5), k = 3: 0.4 * 4 / 2 = 0.8.
    let q3 = set(&[0, 1, 2]);
    let partial = set(&[0, 1, 3, 4]);
    let ranked3: Vec<&BTreeSet<u32>> = vec![&partial; 3];
    assert_close(aj_at_k(&q3, &ranked3, 3).unwrap(), 0.8, 1e-15, "0.4 constant");

    assert!(matches!(aj_at_k(&q, &ranked, 0), Err(Error::InvalidInput(_))));
    assert!(matches!(aj_at_k(&q, &ranked, 5), Err(Error::InvalidInput(_))));
}

#[test]
fn aj_at_k_normalized_stays_in_unit_range() {
    let q = set(&[0]);
    let full = set(&[0]);
    let half = set(&[0, 1]);
    let ranked: Vec<&BTreeSet<u32>> = vec![&full, &half];
    // Prefix means: 1/1, then (1 + 1/2)/2 = 3/4; mean = 7/8.
    assert_eq!(aj_at_k_normalized(&q, &ranked, 2).unwrap(), 0.875);
    let all: Vec<&BTreeSet<u32>> = vec![&full; 6];
    assert_eq!(aj_at_k_normalized(&q, &all, 6).unwrap(), 1.0);
    let none = set(&[9]);
    let misses: Vec<&BTreeSet<u32>> = vec![&none; 3];
    assert_eq!(aj_at_k_normalized(&q, &misses, 3).unwrap(), 0.0);
}

#[test]
fn maj_at_k_averages_skips_and_pads() {
    // Five nodes: 0..2 in community 0, 3..4 in community 1.
    let comms =
        CommunityAssignment::from_single_labels(&[0, 0, 0, 1, 1], vec!["x".into(), "y".into()])
            .unwrap();

    // A single query reduces to its aj@k.
    let (value, skipped) = maj_at_k(&[0], &[vec![1, 2, 1, 2]], &comms, 4).unwrap();
    assert_eq!((value, skipped), (2.5, 0));

    // Perfect and hopeless queries average: (2.5 + 0) / 2.
    let (value, skipped) = maj_at_k(
        &[0, 3],
        &[vec![1, 2, 1, 2], vec![0, 1, 2, 0]],
        &comms,
        4,
    )
    .unwrap();
    assert_eq!((value, skipped), (1.25, 0));

    // A ranking shorter than k contributes zero overlap at the missing
    // ranks: single exact hit then padding = (1+1+1+1)/4.
    let (value, _) = maj_at_k(&[0], &[vec![1]], &comms, 4).unwrap();
    assert_eq!(value, 1.0);

    // Unlabeled queries are skipped and counted, not averaged as zero.
    let g = Graph::with_labels(
        vec!["a".into(), "b".into(), "c".into()],
        &[(0, 1), (1, 2)],
        false,
    )
    .unwrap();
    let partial = CommunityAssignment::parse("a\tred\nb\tred\n", &g).unwrap();
    let (value, skipped) = maj_at_k(&[0, 2], &[vec![1, 1], vec![1, 1]], &partial, 2).unwrap();
    assert_eq!(skipped, 1);
    assert_eq!(value, 1.5); // query a alone: J = (1,1) -> (1 + 2)/2

    // Every query unlabeled -> error, as does shape abuse.
    assert!(matches!(
        maj_at_k(&[2], &[vec![0]], &partial, 1),
        Err(Error::InvalidInput(_))
    ));
    assert!(matches!(
        maj_at_k(&[0, 1], &[vec![0]], &comms, 1),
        Err(Error::InvalidInput(_))
    ));
    assert!(matches!(maj_at_k(&[], &[], &comms, 1), Err(Error::InvalidInput(_))));
    assert!(matches!(
        maj_at_k(&[0], &[vec![0]], &comms, 0),
        Err(Error::InvalidInput(_))
    ));
}

// ------------------------------------------------------------------- nDCG

#[test]
fn ndcg_reference_values() {
    // Twenty graded votes split (4, 6, 10) in retrieved order:
    // DCG = 15/log2(2) + 63/log2(3) + 1023/log2(4) = 566.2485744750019,
    // ideal order (10, 6, 4) gives 1070.2485744750018, ratio below.
    assert_close(
        ndcg_at_k(&[4, 6, 10], 3).unwrap(),
        0.5290813629467048,
        1e-12,
        "ndcg(4,6,10)",
    );
    assert_eq!(ndcg_at_k(&[10, 6, 4], 3).unwrap(), 1.0);
    assert_eq!(ndcg_at_k(&[10, 6, 4, 2], 2).unwrap(), 1.0);
    assert_eq!(ndcg_at_k(&[20], 1).unwrap(), 1.0);
    // All-zero relevance defines 0, not NaN.
    assert_eq!(ndcg_at_k(&[0, 0, 0], 3).unwrap(), 0.0);
    assert!(matches!(ndcg_at_k(&[1], 0), Err(Error::InvalidInput(_))));
    assert!(matches!(ndcg_at_k(&[1], 2), Err(Error::InvalidInput(_))));
}

#[test]
fn relevance_list_parsing() {
    let list = RelevanceList::parse("alpha\t8\nbeta\t7 # raters\n\ngamma\t5\n").unwrap();
    assert_eq!(
        list.entries,
        vec![
            ("alpha".to_string(), 8),
            ("beta".to_string(), 7),
            ("gamma".to_string(), 5)
        ]
    );
    assert_eq!(list.relevances(), vec![8, 7, 5]);
    // Feeds nDCG directly.
    let ndcg = ndcg_at_k(&list.relevances(), 3).unwrap();
    assert!((0.0..=1.0).contains(&ndcg));

    assert!(matches!(
        RelevanceList::parse("a\t21"),
        Err(Error::Parse { line: 1, .. })
    ));
    assert!(matches!(
        RelevanceList::parse("a\t10\nb\t-1\nc\t11"),
        Err(Error::Parse { line: 2, .. })
    ));
    assert!(matches!(
        RelevanceList::parse("a\t10\na\t10"),
        Err(Error::Parse { line: 2, .. })
    ));
    assert!(matches!(
        RelevanceList::parse("a\t10\nb\t5"),
        Err(Error::Parse { line: 0, .. }) // totals 15, not 20
    ));
    assert!(matches!(
        RelevanceList::parse("a\t10\textra\nb\t10"),
        Err(Error::Parse { line: 1, .. })
    ));
    assert!(matches!(
        RelevanceList::parse("only-a-name"),
        Err(Error::Parse { line: 1, .. })
    ));
}

// ------------------------------------------------------------- modularity

#[test]
fn modularity_pins() {
    // Two disjoint triangles split perfectly: Q = 2 (3/6 - (6/12)^2) = 1/2.
    let tri2 = Graph::new(
        6,
        &[(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)],
        false,
    )
    .unwrap();
    assert_eq!(modularity(&tri2, &[0, 0, 0, 1, 1, 1]).unwrap(), 0.5);

    // Everything in one community is exactly 0 by construction.
    assert_eq!(modularity(&tri2, &[0; 6]).unwrap(), 0.0);

    // A single edge with singleton communities: -2 (1/2)^2 = -1/2.
    let pair = Graph::new(2, &[(0, 1)], false).unwrap();
    assert_eq!(modularity(&pair, &[0, 1]).unwrap(), -0.5);

    // Edgeless graphs score 0 rather than dividing by zero.
    let bare = Graph::new(3, &[], false).unwrap();
    assert_eq!(modularity(&bare, &[0, 1, 2]).unwrap(), 0.0);

    // Direction and self-loops are ignored via the simple projection.
    let tri2_directed = Graph::new(
        6,
        &[(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (0, 0)],
        true,
    )
    .unwrap();
    assert_eq!(modularity(&tri2_directed, &[0, 0, 0, 1, 1, 1]).unwrap(), 0.5);

    assert!(matches!(
        modularity(&pair, &[0]),
        Err(Error::InvalidInput(_))
    ));
}

// ----------------------------------------------------- community handling

#[test]
fn communities_per_vertex() {
    let single =
        CommunityAssignment::from_single_labels(&[0, 0, 1], vec!["x".into(), "y".into()]).unwrap();
    assert_eq!(single.cpv().unwrap(), 1.0);

    let g = Graph::with_labels(vec!["x".into(), "y".into()], &[(0, 1)], false).unwrap();
    let multi = CommunityAssignment::parse("x\tc1,c2\ny\tc3,c4,c5,c6\n", &g).unwrap();
    assert_eq!(multi.cpv().unwrap(), 3.0);
    assert_eq!(multi.community_count(), 6);

    let empty = CommunityAssignment::from_single_labels(&[], Vec::new()).unwrap();
    assert!(matches!(empty.cpv(), Err(Error::InvalidInput(_))));
}

#[test]
fn community_file_parsing_and_round_trip() {
    let g = Graph::with_labels(
        vec!["a".into(), "b".into(), "c".into()],
        &[(0, 1), (1, 2)],
        false,
    )
    .unwrap();
    let comms = CommunityAssignment::parse("# hand labels\na\tred,blue\nb\tred\n", &g).unwrap();
    assert_eq!(comms.membership(0), &set(&[0, 1]));
    assert_eq!(comms.membership(1), &set(&[0]));
    assert!(comms.membership(2).is_empty());
    assert_eq!(comms.community_count(), 2);
    assert_eq!(comms.community_name(0), "red");
    assert_eq!(comms.community_name(1), "blue");

    // Uncovered nodes make a partition impossible...
    assert!(matches!(comms.partition(), Err(Error::InvalidInput(_))));
    // ...but full coverage collapses to the lowest community id.
    let full = CommunityAssignment::parse("a\tred,blue\nb\tred\nc\tblue\n", &g).unwrap();
    assert_eq!(full.partition().unwrap(), vec![0, 0, 1]);

    // Serialize then reparse: same memberships, empty nodes omitted.
    let text = comms.to_community_text(&g);
    assert_eq!(text, "a\tred,blue\nb\tred\n");
    let again = CommunityAssignment::parse(&text, &g).unwrap();
    for u in 0..3 {
        assert_eq!(comms.membership(u), again.membership(u));
    }

    assert!(matches!(
        CommunityAssignment::parse("a\tred\na\tblue\n", &g),
        Err(Error::Parse { line: 2, .. })
    ));
    assert!(matches!(
        CommunityAssignment::parse("a\tred,,blue\n", &g),
        Err(Error::Parse { line: 1, .. })
    ));
    assert!(matches!(
        CommunityAssignment::parse("zz\tred\n", &g),
        Err(Error::UnknownLabel { .. })
    ));
    assert!(matches!(
        CommunityAssignment::parse("a\tred trailing\n", &g),
        Err(Error::Parse { line: 1, .. })
    ));
}

// --------------------------------------------------------- link prediction

#[test]
fn link_prediction_set_invariants() {
    let g = reference_graph();
    let lp = build_link_prediction_set(&g, 5, 7, 42).unwrap();
    assert_eq!(lp.positives.len(), 5);
    assert_eq!(lp.negatives.len(), 7);
    let pos_set: BTreeSet<_> = lp.positives.iter().copied().collect();
    assert_eq!(pos_set.len(), 5, "positives must be distinct");
    for &(a, b) in &lp.positives {
        assert!(g.has_edge(a, b));
    }
    let neg_set: BTreeSet<_> = lp.negatives.iter().copied().collect();
    assert_eq!(neg_set.len(), 7, "negatives must be distinct");
    for &(a, b) in &lp.negatives {
        assert_ne!(a, b, "no self pairs");
        assert!(!g.has_edge(a, b));
    }

    // Determinism per seed; a new seed draws a different sample.
    let same = build_link_prediction_set(&g, 5, 7, 42).unwrap();
    assert_eq!(lp, same);
    let other = build_link_prediction_set(&g, 5, 7, 43).unwrap();
    assert!(lp.positives != other.positives || lp.negatives != other.negatives);

    // Sampling every edge returns exactly the edge set.
    let all = build_link_prediction_set(&g, g.edge_count(), 3, 1).unwrap();
    let sampled: BTreeSet<_> = all.positives.into_iter().collect();
    let edges: BTreeSet<_> = g.edges().into_iter().collect();
    assert_eq!(sampled, edges);

    // Undirected pairs come out canonicalized.
    let path = Graph::new(5, &[(0, 1), (1, 2), (2, 3), (3, 4)], false).unwrap();
    let lp_u = build_link_prediction_set(&path, 2, 4, 9).unwrap();
    for &(a, b) in &lp_u.negatives {
        assert!(a < b, "undirected negative ({a}, {b}) not canonical");
    }

    // Requests beyond supply fail up front.
    assert!(matches!(
        build_link_prediction_set(&g, 16, 1, 0),
        Err(Error::InvalidInput(_))
    ));
    let k4 = Graph::new(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)], false).unwrap();
    assert!(matches!(
        build_link_prediction_set(&k4, 1, 1, 0),
        Err(Error::InvalidInput(_))
    ));
}

#[test]
fn pair_feature_values_match_direct_scorers() {
    let g = reference_graph();
    let cfg = PprConfig::default();
    let pairs = [(6u32, 3u32), (6, 7), (3, 0)];
    let rows = pair_features(
        &g,
        &pairs,
        &[
            PairFeature::FbsForward,
            PairFeature::FbsBackward,
            PairFeature::AdamicAdar,
        ],
        &cfg,
    )
    .unwrap();
    let rev = g.reverse();
    for (row, &(u, v)) in rows.iter().zip(&pairs) {
        assert_eq!(row[0], ppr(&g, u, &cfg).unwrap().scores[v as usize]);
        assert_eq!(row[1], ppr(&rev, v, &cfg).unwrap().scores[u as usize]);
        let aa = fbs_core::baselines::adamic_adar(&g, u, v).unwrap();
        assert_eq!(row[2], aa);
    }

    // The two-column matrix is exactly the paired-similarity features.
    let fbs_cfg = FbsConfig::default();
    let two = two_feature_matrix(&g, &pairs, &cfg).unwrap();
    for (row, &(u, v)) in two.iter().zip(&pairs) {
        let (f, b) = fbs_two_feature(&g, u, v, &fbs_cfg).unwrap();
        assert_close(row[0], f, 1e-15, "forward feature");
        assert_close(row[1], b, 1e-15, "backward feature");
    }

    assert!(matches!(
        pair_features(&g, &pairs, &[], &cfg),
        Err(Error::InvalidInput(_))
    ));
}

#[test]
fn logistic_cv_separates_and_calibrates() {
    // A feature that equals the label separates perfectly.
    let mut features = Vec::new();
    let mut labels = Vec::new();
    for i in 0..20 {
        features.push(vec![1.0 + 0.01 * i as f64]);
        labels.push(true);
        features.push(vec![-1.0 - 0.01 * i as f64]);
        labels.push(false);
    }
    let (auc, roc) = logistic_cv_auc(&features, &labels, 5, 42).unwrap();
    assert_eq!(auc, 1.0);
    assert_eq!(roc.first(), Some(&(0.0, 0.0)));
    assert_eq!(roc.last(), Some(&(1.0, 1.0)));

    // A feature carrying no signal stays near chance level.
    use rand::Rng;
    use rand::SeedableRng;
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
    let mut noise_features = Vec::new();
    let mut noise_labels = Vec::new();
    for i in 0..1000 {
        noise_features.push(vec![rng.random::<f64>()]);
        noise_labels.push(i % 2 == 0);
    }
    // Null AUC sigma at 500 + 500 samples is about 0.018; allow 3+ of it.
    let (noise_auc, _) = logistic_cv_auc(&noise_features, &noise_labels, 5, 42).unwrap();
    assert!(
        (noise_auc - 0.5).abs() <= 0.06,
        "uninformative feature should sit near 0.5, got {noise_auc}"
    );

    // Shape and class-size validation.
    assert!(matches!(
        logistic_cv_auc(&features, &labels, 1, 0),
        Err(Error::InvalidInput(_))
    ));
    assert!(matches!(
        logistic_cv_auc(&features[..3], &labels, 2, 0),
        Err(Error::InvalidInput(_))
    ));
    let tiny: Vec<Vec<f64>> = vec![vec![0.0]; 6];
    let tiny_labels = vec![true, false, true, false, true, false];
    assert!(matches!(
        logistic_cv_auc(&tiny, &tiny_labels, 2, 0),
        Err(Error::InvalidInput(_))
    ));
}

#[test]
fn roc_trapezoid_equals_pairwise_count() {
    // Tied scores across classes must contribute half wins, exactly as
    // the tie-grouped ROC's diagonal segment does.
    let scores = [0.9, 0.8, 0.8, 0.3, 0.2];
    let labels = [true, true, false, false, false];
    let roc = roc_points(&scores, &labels).unwrap();
    let auc = trapezoid_auc(&roc);

    let mut wins = 0.0f64;
    let mut pairs = 0.0f64;
    for (sp, &lp) in scores.iter().zip(&labels) {
        if !lp {
            continue;
        }
        for (sn, &ln) in scores.iter().zip(&labels) {
            if ln {
                continue;
            }
            pairs += 1.0;
            if sp > sn {
                wins += 1.0;
            } else if sp == sn {
                wins += 0.5;
            }
        }
    }
    assert_close(auc, wins / pairs, 1e-15, "trapezoid vs pair count");
    assert_close(auc, 5.5 / 6.0, 1e-15, "hand value");

    // All-one-class input is rejected.
    assert!(matches!(
        roc_points(&[0.1, 0.2], &[true, true]),
        Err(Error::InvalidInput(_))
    ));
}

// ------------------------------------------------------ planted partition

#[test]
fn planted_partition_extremes_and_determinism() {
    // p_in = 1, p_out = 0 plants two clean triangles.
    let (g, comms) = planted_partition(2, 3, 1.0, 0.0, false, 5).unwrap();
    assert_eq!(g.node_count(), 6);
    assert_eq!(g.edge_count(), 6);
    assert!(!g.is_directed());
    for c in [0u32, 3u32] {
        for a in c..c + 3 {
            for b in a + 1..c + 3 {
                assert!(g.has_edge(a, b), "missing intra edge ({a}, {b})");
            }
        }
    }
    for a in 0..3u32 {
        for b in 3..6u32 {
            assert!(!g.has_edge(a, b), "unexpected cross edge ({a}, {b})");
        }
    }
    assert_eq!(comms.partition().unwrap(), vec![0, 0, 0, 1, 1, 1]);
    assert_eq!(comms.community_name(0), "0");
    assert_eq!(comms.community_name(1), "1");

    // Same seed, same graph; different seed, different edges.
    let (g1, _) = planted_partition(3, 8, 0.4, 0.05, true, 77).unwrap();
    let (g2, _) = planted_partition(3, 8, 0.4, 0.05, true, 77).unwrap();
    assert_eq!(g1.edges(), g2.edges());
    assert!(g1.is_directed());
    let (g3, _) = planted_partition(3, 8, 0.4, 0.05, true, 78).unwrap();
    assert_ne!(g1.edges(), g3.edges());
}

#[test]
fn planted_partition_edge_count_is_plausible() {
    // 3 communities of 10, p_in = 0.3, p_out = 0.05 undirected:
    // mean 135*0.3 + 300*0.05 = 55.5 edges, sigma ~ 6.5; stay within 4.
    let (g, _) = planted_partition(3, 10, 0.3, 0.05, false, 11).unwrap();
    let e = g.edge_count() as f64;
    assert!(
        (29.0..=82.0).contains(&e),
        "edge count {e} outside 4-sigma band"
    );
}

#[test]
fn planted_partition_rejects_bad_parameters() {
    for (k, size, p_in, p_out) in [
        (0usize, 3usize, 0.5, 0.1),
        (2, 0, 0.5, 0.1),
        (2, 3, 1.2, 0.1),
        (2, 3, 0.5, -0.1),
        (2, 3, 0.1, 0.5),
        (2, 3, 0.3, 0.3),
    ] {
        assert!(
            matches!(
                planted_partition(k, size, p_in, p_out, false, 0),
                Err(Error::InvalidInput(_))
            ),
            "({k}, {size}, {p_in}, {p_out}) should be rejected"
        );
    }
}

// ---------------------------------------------------------- golden fixture

#[test]
fn reference_fixture_sanity() {
    let g = reference_graph();
    assert_eq!(g.node_count(), 14);
    assert_eq!(g.edge_count(), 15);
    assert!(g.is_directed());
    let q = g.node_by_label("G").unwrap();
    assert_eq!(g.in_degree(q).unwrap(), 0);
    assert_eq!(g.out_degree(q).unwrap(), 4);

    let comms = reference_communities();
    assert_eq!(comms.community_count(), 2);
    assert_eq!(comms.cpv().unwrap(), 1.0);
    let partition = comms.partition().unwrap();
    for (u, &c) in partition.iter().enumerate() {
        let expected = if u < 7 { 0 } else { 1 };
        assert_eq!(c, expected, "node {u}");
    }
    // The split is assortative but weakly so on this small fixture.
    let q_mod = modularity(&g, &partition).unwrap();
    assert!(q_mod > 0.0 && q_mod < 1.0, "modularity {q_mod}");
}

#[test]
fn tie_groups_chain_adjacent_values() {
    let ranked = [(7u32, 1.0), (2, 1.0 - 1e-12), (5, 0.5)];
    assert_eq!(tie_groups(&ranked, 1e-9), vec![vec![2, 7], vec![5]]);
    // Grouping is transitive along the sorted chain: each neighbor pair
    // within tolerance joins, even if the extremes differ by more.
    let chained = [(0u32, 1.0), (1, 1.0 - 8e-10), (2, 1.0 - 1.6e-9)];
    assert_eq!(tie_groups(&chained, 1e-9), vec![vec![0, 1, 2]]);
    let empty: Vec<(u32, f64)> = Vec::new();
    assert!(tie_groups(&empty, 1e-9).is_empty());
}
