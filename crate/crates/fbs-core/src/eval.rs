//! Evaluation toolkit: ranking and community metrics, link-prediction
//! harness, synthetic benchmark graphs, and the built-in reference
//! example with its known orderings.

pub mod golden;
pub mod linkpred;
pub mod metrics;
pub mod synth;

pub use golden::{reference_communities, reference_graph, reference_rankings, tie_groups, ReferenceRankings};
pub use linkpred::{
    build_link_prediction_set, logistic_cv_auc, roc_points, trapezoid_auc, two_feature_matrix,
    LinkPredictionSet,
};
pub use metrics::{
    aj_at_k, aj_at_k_normalized, jaccard, maj_at_k, modularity, ndcg_at_k, CommunityAssignment,
    RelevanceList,
};
pub use synth::planted_partition;
