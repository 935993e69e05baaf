//! Dense 64-bit matrix numerics with exact reverse-mode gradients for fixed
//! MLP shapes, the momentum-SGD update, and the warmup + cosine learning-rate
//! schedule. Everything is single-threaded with a fixed summation order so
//! identical seeds give bitwise-identical results.

mod loss;
mod matrix;
mod mlp;
mod optim;
mod rng;
mod schedule;

pub use loss::{
    kl_divergence, l1_penalty, per_example_nll, softmax_cross_entropy, softmax_rows,
    weighted_softmax_cross_entropy,
};
pub use matrix::Matrix;
pub use mlp::{backward_mlp, forward_mlp, ForwardCache, Layer, ParameterSet};
pub use optim::{l1_shrink, sgd_ascend, sgd_step, sgd_step_masked, ParamMask};
pub use rng::{derive_seed, seed_stream};
pub use schedule::ScheduleState;

/// Errors raised by the numeric layer.
#[derive(Debug, thiserror::Error)]
pub enum NumericError {
    #[error("shape mismatch in {op}: {details}")]
    Shape { op: &'static str, details: String },
    #[error("non-finite value encountered in {context}")]
    NonFinite { context: String },
    #[error("target index {index} out of range for {num_classes} classes")]
    ClassIndex { index: usize, num_classes: usize },
}

pub type NumericResult<T> = Result<T, NumericError>;
