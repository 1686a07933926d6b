//! Feasible change sets: the per-feature box of offsets that keeps every
//! member of an instance group inside the domain bounds.

use serde::{Deserialize, Serialize};

use super::delta::{Change, Delta};
use super::instance::{Instance, Value};
use super::schema::{FeatureDomain, FeatureSpace};
use super::DomainError;
use crate::num::Real;

/// Allowed changes for one feature.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub enum FeasibleChange<F> {
    /// Numeric offsets in `[lo, hi]`; the interval always contains 0.
    Interval { lo: F, hi: F },
    /// Allowed categorical replacements (empty when the feature is frozen).
    Categories { allowed: Vec<usize> },
}

/// Per-feature feasible changes for a group of instances.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FeasibleChangeSet<F> {
    entries: Vec<FeasibleChange<F>>,
}

impl<F: Real> FeasibleChangeSet<F> {
    pub fn entries(&self) -> &[FeasibleChange<F>] {
        &self.entries
    }

    pub fn entry(&self, i: usize) -> &FeasibleChange<F> {
        &self.entries[i]
    }

    pub fn arity(&self) -> usize {
        self.entries.len()
    }

    /// Whether every change of `d` lies inside this set.
    pub fn contains(&self, d: &Delta<F>) -> bool {
        d.changes().len() == self.entries.len()
            && d.changes()
                .iter()
                .zip(&self.entries)
                .all(|(c, e)| match (c, e) {
                    (Change::None, _) => true,
                    (Change::Offset(o), FeasibleChange::Interval { lo, hi }) => {
                        *lo <= *o && *o <= *hi
                    }
                    (Change::SetCategory(c), FeasibleChange::Categories { allowed }) => {
                        allowed.contains(c)
                    }
                    _ => false,
                })
    }

    /// Clip a delta into the set: numeric offsets clamp to `[lo, hi]`,
    /// categorical changes outside the allowed set become `None`.
    pub fn clip(&self, d: &Delta<F>) -> Delta<F> {
        let changes = d
            .changes()
            .iter()
            .zip(&self.entries)
            .map(|(c, e)| match (c, e) {
                (Change::None, _) => Change::None,
                (Change::Offset(o), FeasibleChange::Interval { lo, hi }) => {
                    let clipped = o.max(*lo).min(*hi);
                    if clipped == F::zero() {
                        Change::None
                    } else {
                        Change::Offset(clipped)
                    }
                }
                (Change::SetCategory(c), FeasibleChange::Categories { allowed }) => {
                    if allowed.contains(c) {
                        Change::SetCategory(*c)
                    } else {
                        Change::None
                    }
                }
                _ => Change::None,
            })
            .collect();
        Delta::from_changes_unchecked(changes)
    }

    /// Largest possible unweighted delta cost inside the box; useful for
    /// choosing a regularization strength that makes validity dominate cost.
    pub fn cost_upper_bound(&self) -> F {
        self.entries
            .iter()
            .map(|e| match e {
                FeasibleChange::Interval { lo, hi } => lo.abs().max(hi.abs()),
                FeasibleChange::Categories { allowed } => {
                    if allowed.is_empty() {
                        F::zero()
                    } else {
                        F::one()
                    }
                }
            })
            .sum()
    }
}

/// Compute the feasible change set of a group.
///
/// For numeric feature `i` with feasible values `[min_i, max_i]` the offset
/// interval is `lo_i = min_i - min_j (x_j)_i` and `hi_i = max_i - max_j
/// (x_j)_i`, so any offset in it keeps every member inside bounds. Actionable
/// categorical features may move to any category; frozen features admit no
/// change at all.
pub fn feasible_change_set<F: Real>(
    space: &FeatureSpace<F>,
    group: &[Instance<F>],
) -> Result<FeasibleChangeSet<F>, DomainError> {
    if group.is_empty() {
        return Err(DomainError::EmptyGroup);
    }
    let mut entries = Vec::with_capacity(space.arity());
    for (i, descr) in space.features().iter().enumerate() {
        let entry = match &descr.domain {
            FeatureDomain::Numeric { min, max } => {
                if !descr.actionable {
                    FeasibleChange::Interval {
                        lo: F::zero(),
                        hi: F::zero(),
                    }
                } else {
                    let mut group_min = F::infinity();
                    let mut group_max = F::neg_infinity();
                    for x in group {
                        let v = match x.value(i) {
                            Value::Num(v) => *v,
                            Value::Cat(_) => {
                                return Err(DomainError::KindMismatch {
                                    feature: descr.name.clone(),
                                });
                            }
                        };
                        group_min = group_min.min(v);
                        group_max = group_max.max(v);
                    }
                    FeasibleChange::Interval {
                        lo: *min - group_min,
                        hi: *max - group_max,
                    }
                }
            }
            FeatureDomain::Categorical { categories } => FeasibleChange::Categories {
                allowed: if descr.actionable {
                    (0..categories.len()).collect()
                } else {
                    Vec::new()
                },
            },
        };
        entries.push(entry);
    }
    Ok(FeasibleChangeSet { entries })
}
