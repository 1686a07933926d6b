//! Shared data model: feature schemas, instances, counterfactual deltas,
//! the delta application operator, cost functions and feasible change sets.
//!
//! All types are immutable values after construction and all operations are
//! pure functions, so everything here is safe to share across threads.

mod delta;
mod feasible;
mod instance;
mod schema;

pub use delta::{
    apply_delta, delta_cost, sparsity_cost, weighted_delta_cost, Change, CostKind, Delta,
};
pub use feasible::{feasible_change_set, FeasibleChange, FeasibleChangeSet};
pub use instance::{Instance, Value};
pub use schema::{FeatureDescriptor, FeatureDomain, FeatureSpace, Label};

use thiserror::Error;

/// Errors raised by domain-level validation and operations.
#[derive(Debug, Error, PartialEq)]
pub enum DomainError {
    #[error("expected {expected} feature values, got {got}")]
    ArityMismatch { expected: usize, got: usize },
    #[error("feature `{feature}`: value kind does not match the feature kind")]
    KindMismatch { feature: String },
    #[error("feature `{feature}`: category index {index} out of range (have {len})")]
    UnknownCategory {
        feature: String,
        index: usize,
        len: usize,
    },
    #[error("feature `{feature}`: unknown category label `{label}`")]
    UnknownCategoryLabel { feature: String, label: String },
    #[error("feature `{feature}` is not actionable but the delta changes it")]
    NotActionable { feature: String },
    #[error("feature `{feature}`: value {value} outside feasible bounds [{lo}, {hi}]")]
    BoundViolation {
        feature: String,
        value: f64,
        lo: f64,
        hi: f64,
    },
    #[error("feature `{feature}`: invalid bounds (min must be <= max, both finite)")]
    InvalidBounds { feature: String },
    #[error("feature `{feature}`: categorical features need at least 2 categories")]
    TooFewCategories { feature: String },
    #[error("duplicate feature name `{name}`")]
    DuplicateFeature { name: String },
    #[error("label set must be non-empty and free of duplicates")]
    BadLabelSet,
    #[error("unknown label `{label}`")]
    UnknownLabel { label: String },
    #[error("operation requires a non-empty instance group")]
    EmptyGroup,
    #[error("cost weights must be positive and match the feature arity")]
    BadWeights,
}
