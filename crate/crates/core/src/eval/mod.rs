//! Hold-out evaluation: edge splits, ranking metrics and the seeded
//! benchmark driver.

mod bench;
mod metrics;
mod report;
mod split;

pub use bench::{
    run_benchmark, score_method, training_size_sweep, AucSetting, BenchConfig, Method, SweepReport,
    TopL,
};
pub use metrics::{
    auc, auc_from_classes, downsample_roc, precision_at, roc_area, roc_points, AucMode, RocPoint,
    MAX_ROC_POINTS,
};
pub use report::{EvalReport, MethodReport, MethodStatus, TrialMetrics, TrialSummary};
pub use split::{split, test_edge_count, CandidateUniverse, TrainTestSplit};
