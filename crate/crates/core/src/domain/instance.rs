//! Instances: one value per feature of a [`FeatureSpace`].

use serde::{Deserialize, Serialize};

use super::schema::{FeatureDomain, FeatureSpace};
use super::DomainError;
use crate::num::Real;

/// A single feature value. Categorical values are indices into the feature's
/// category list.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub enum Value<F> {
    Num(F),
    Cat(usize),
}

impl<F: Real> Value<F> {
    pub fn as_num(&self) -> Option<F> {
        match self {
            Value::Num(v) => Some(*v),
            Value::Cat(_) => None,
        }
    }

    pub fn as_cat(&self) -> Option<usize> {
        match self {
            Value::Num(_) => None,
            Value::Cat(c) => Some(*c),
        }
    }
}

/// A point of the feature space, validated against its schema on construction.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Instance<F> {
    values: Vec<Value<F>>,
}

impl<F: Real> Instance<F> {
    pub fn new(space: &FeatureSpace<F>, values: Vec<Value<F>>) -> Result<Self, DomainError> {
        if values.len() != space.arity() {
            return Err(DomainError::ArityMismatch {
                expected: space.arity(),
                got: values.len(),
            });
        }
        for (descr, value) in space.features().iter().zip(&values) {
            match (&descr.domain, value) {
                (FeatureDomain::Numeric { min, max }, Value::Num(v)) => {
                    if !(v.is_finite() && *min <= *v && *v <= *max) {
                        return Err(DomainError::BoundViolation {
                            feature: descr.name.clone(),
                            value: v.as_f64(),
                            lo: min.as_f64(),
                            hi: max.as_f64(),
                        });
                    }
                }
                (FeatureDomain::Categorical { categories }, Value::Cat(c)) => {
                    if *c >= categories.len() {
                        return Err(DomainError::UnknownCategory {
                            feature: descr.name.clone(),
                            index: *c,
                            len: categories.len(),
                        });
                    }
                }
                _ => {
                    return Err(DomainError::KindMismatch {
                        feature: descr.name.clone(),
                    });
                }
            }
        }
        Ok(Self { values })
    }

    /// All-numeric convenience constructor.
    pub fn numeric(space: &FeatureSpace<F>, values: &[F]) -> Result<Self, DomainError> {
        Self::new(space, values.iter().map(|v| Value::Num(*v)).collect())
    }

    pub fn values(&self) -> &[Value<F>] {
        &self.values
    }

    pub fn value(&self, i: usize) -> &Value<F> {
        &self.values[i]
    }

    pub(crate) fn from_values_unchecked(values: Vec<Value<F>>) -> Self {
        Self { values }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::domain::FeatureDescriptor;

    fn space() -> FeatureSpace<f64> {
        FeatureSpace::new(
            vec![
                FeatureDescriptor::numeric("x", 0.0, 10.0),
                FeatureDescriptor::categorical("c", ["red", "blue"]),
            ],
            vec!["neg".into(), "pos".into()],
        )
        .unwrap()
    }

    #[test]
    fn accepts_valid_values() {
        let x = Instance::new(&space(), vec![Value::Num(3.0), Value::Cat(1)]).unwrap();
        assert_eq!(x.value(0).as_num(), Some(3.0));
        assert_eq!(x.value(1).as_cat(), Some(1));
    }

    #[test]
    fn rejects_out_of_bounds_and_bad_kind() {
        let s = space();
        assert!(matches!(
            Instance::new(&s, vec![Value::Num(11.0), Value::Cat(0)]),
            Err(DomainError::BoundViolation { .. })
        ));
        assert!(matches!(
            Instance::new(&s, vec![Value::Cat(0), Value::Cat(0)]),
            Err(DomainError::KindMismatch { .. })
        ));
        assert!(matches!(
            Instance::new(&s, vec![Value::Num(1.0), Value::Cat(7)]),
            Err(DomainError::UnknownCategory { .. })
        ));
        assert!(matches!(
            Instance::new(&s, vec![Value::Num(1.0)]),
            Err(DomainError::ArityMismatch { .. })
        ));
    }
}
