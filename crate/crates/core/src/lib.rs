//! Desk-scale laboratory for group-robust machine unlearning.
//!
//! The crate trains small MLP classifiers on synthetic grouped datasets with a
//! controllable spurious correlation, removes forget sets exactly (retraining,
//! optionally with sampling-distribution reweighting or a simplified group-DRO)
//! or approximately (L1-sparse, SalUn-lite, SCRUB-lite, and a mutual-information
//! based unlearner driven by a Donsker-Varadhan neural estimator), and scores
//! every run with the full accuracy / membership-inference / fairness metric
//! suite against a retrained gold standard.

pub mod data;
pub mod harness;
pub mod metrics;
pub mod mi;
pub mod models;
pub mod numeric;
pub mod unlearn;

pub use data::{ForgetSpec, GroupStats, GroupedDataset, LabeledExample, SyntheticConfig};
pub use metrics::{MetricsReport, SeedMetrics};
pub use models::{MineNetwork, ModelCheckpoint, ModelShapes};
pub use numeric::{Matrix, ParameterSet, ScheduleState};
pub use unlearn::{BaselineConfig, MiuConfig, TrainConfig};
