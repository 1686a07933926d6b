//! Counterfactual changes and their costs.

use serde::{Deserialize, Serialize};

use super::instance::{Instance, Value};
use super::schema::{FeatureDomain, FeatureSpace};
use super::DomainError;
use crate::num::Real;

/// Per-feature change: nothing, a numeric offset, or a categorical
/// replacement (index into the feature's category list).
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub enum Change<F> {
    None,
    Offset(F),
    SetCategory(usize),
}

impl<F: Real> Change<F> {
    pub fn is_none(&self) -> bool {
        matches!(self, Change::None)
    }
}

/// A counterfactual change, one [`Change`] per feature.
///
/// Construction normalizes `Offset(0)` to `None` so that a zero-cost delta is
/// exactly the all-`None` delta, and rejects changes on non-actionable
/// features.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Delta<F> {
    changes: Vec<Change<F>>,
}

impl<F: Real> Delta<F> {
    pub fn new(space: &FeatureSpace<F>, changes: Vec<Change<F>>) -> Result<Self, DomainError> {
        if changes.len() != space.arity() {
            return Err(DomainError::ArityMismatch {
                expected: space.arity(),
                got: changes.len(),
            });
        }
        let mut normalized = Vec::with_capacity(changes.len());
        for (descr, change) in space.features().iter().zip(changes) {
            let change = match (&descr.domain, change) {
                (_, Change::None) => Change::None,
                (FeatureDomain::Numeric { .. }, Change::Offset(o)) => {
                    if !o.is_finite() {
                        return Err(DomainError::BoundViolation {
                            feature: descr.name.clone(),
                            value: o.as_f64(),
                            lo: f64::NEG_INFINITY,
                            hi: f64::INFINITY,
                        });
                    }
                    if o == F::zero() {
                        Change::None
                    } else {
                        Change::Offset(o)
                    }
                }
                (FeatureDomain::Categorical { categories }, Change::SetCategory(c)) => {
                    if c >= categories.len() {
                        return Err(DomainError::UnknownCategory {
                            feature: descr.name.clone(),
                            index: c,
                            len: categories.len(),
                        });
                    }
                    Change::SetCategory(c)
                }
                _ => {
                    return Err(DomainError::KindMismatch {
                        feature: descr.name.clone(),
                    });
                }
            };
            if !change.is_none() && !descr.actionable {
                return Err(DomainError::NotActionable {
                    feature: descr.name.clone(),
                });
            }
            normalized.push(change);
        }
        Ok(Self {
            changes: normalized,
        })
    }

    /// The all-`None` delta for a space.
    pub fn identity(space: &FeatureSpace<F>) -> Self {
        Self {
            changes: vec![Change::None; space.arity()],
        }
    }

    pub fn changes(&self) -> &[Change<F>] {
        &self.changes
    }

    pub fn is_identity(&self) -> bool {
        self.changes.iter().all(Change::is_none)
    }

    pub(crate) fn from_changes_unchecked(changes: Vec<Change<F>>) -> Self {
        Self { changes }
    }
}

/// Which cost function scores a delta.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, Default)]
#[serde(rename_all = "kebab-case")]
pub enum CostKind {
    /// Sum over features of `|offset|` (numeric) or `1` (categorical change).
    #[default]
    WeightedPsi,
    /// Number of changed features.
    Sparsity,
    /// Euclidean norm of the delta in encoded space.
    L2,
}

/// Apply a delta to an instance: numeric features add the offset, categorical
/// features are replaced, `None` copies the value.
///
/// Out-of-bounds results are an error, never clipped: silent clipping would
/// corrupt the cost accounting downstream.
pub fn apply_delta<F: Real>(
    space: &FeatureSpace<F>,
    x: &Instance<F>,
    d: &Delta<F>,
) -> Result<Instance<F>, DomainError> {
    if x.values().len() != d.changes().len() || x.values().len() != space.arity() {
        return Err(DomainError::ArityMismatch {
            expected: space.arity(),
            got: d.changes().len(),
        });
    }
    let mut out = Vec::with_capacity(space.arity());
    for ((descr, value), change) in space.features().iter().zip(x.values()).zip(d.changes()) {
        let new = match (change, value) {
            (Change::None, v) => *v,
            (Change::Offset(o), Value::Num(v)) => {
                let moved = *v + *o;
                match &descr.domain {
                    FeatureDomain::Numeric { min, max } => {
                        if !(moved.is_finite() && *min <= moved && moved <= *max) {
                            return Err(DomainError::BoundViolation {
                                feature: descr.name.clone(),
                                value: moved.as_f64(),
                                lo: min.as_f64(),
                                hi: max.as_f64(),
                            });
                        }
                    }
                    FeatureDomain::Categorical { .. } => {
                        return Err(DomainError::KindMismatch {
                            feature: descr.name.clone(),
                        });
                    }
                }
                Value::Num(moved)
            }
            (Change::SetCategory(c), Value::Cat(_)) => Value::Cat(*c),
            _ => {
                return Err(DomainError::KindMismatch {
                    feature: descr.name.clone(),
                });
            }
        };
        out.push(new);
    }
    Ok(Instance::from_values_unchecked(out))
}

/// Unweighted per-feature cost: `|offset|` for numeric changes, `1` for
/// categorical changes, `0` for no change.
pub fn delta_cost<F: Real>(d: &Delta<F>) -> F {
    d.changes()
        .iter()
        .map(|c| match c {
            Change::None => F::zero(),
            Change::Offset(o) => o.abs(),
            Change::SetCategory(_) => F::one(),
        })
        .sum()
}

/// [`delta_cost`] with per-feature positive weights.
pub fn weighted_delta_cost<F: Real>(d: &Delta<F>, weights: &[F]) -> Result<F, DomainError> {
    if weights.len() != d.changes().len() || weights.iter().any(|w| !(*w > F::zero())) {
        return Err(DomainError::BadWeights);
    }
    Ok(d.changes()
        .iter()
        .zip(weights)
        .map(|(c, w)| match c {
            Change::None => F::zero(),
            Change::Offset(o) => o.abs() * *w,
            Change::SetCategory(_) => *w,
        })
        .sum())
}

/// Number of changed features. Normalizing by the arity gives the
/// changed-feature percentage reported by the evaluation harness.
pub fn sparsity_cost<F: Real>(d: &Delta<F>) -> usize {
    d.changes().iter().filter(|c| !c.is_none()).count()
}
