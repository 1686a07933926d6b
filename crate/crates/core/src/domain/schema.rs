//! Feature schemas: what a tabular domain looks like and what may change.

use serde::{Deserialize, Serialize};

use super::DomainError;
use crate::num::Real;

/// Value domain of a single feature.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub enum FeatureDomain<F> {
    /// Numeric feature with inclusive feasible bounds `[min, max]`.
    Numeric { min: F, max: F },
    /// Categorical feature with an ordered set of category labels.
    Categorical { categories: Vec<String> },
}

/// Schema of one feature: name, value domain and actionability.
///
/// A non-actionable feature can never be changed by a counterfactual.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FeatureDescriptor<F> {
    pub name: String,
    pub domain: FeatureDomain<F>,
    pub actionable: bool,
}

impl<F: Real> FeatureDescriptor<F> {
    pub fn numeric(name: impl Into<String>, min: F, max: F) -> Self {
        Self {
            name: name.into(),
            domain: FeatureDomain::Numeric { min, max },
            actionable: true,
        }
    }

    pub fn categorical<S: Into<String>>(
        name: impl Into<String>,
        categories: impl IntoIterator<Item = S>,
    ) -> Self {
        Self {
            name: name.into(),
            domain: FeatureDomain::Categorical {
                categories: categories.into_iter().map(Into::into).collect(),
            },
            actionable: true,
        }
    }

    pub fn frozen(mut self) -> Self {
        self.actionable = false;
        self
    }

    pub fn is_numeric(&self) -> bool {
        matches!(self.domain, FeatureDomain::Numeric { .. })
    }

    fn validate(&self) -> Result<(), DomainError> {
        match &self.domain {
            FeatureDomain::Numeric { min, max } => {
                if !(min.is_finite() && max.is_finite() && *min <= *max) {
                    return Err(DomainError::InvalidBounds {
                        feature: self.name.clone(),
                    });
                }
            }
            FeatureDomain::Categorical { categories } => {
                if categories.len() < 2 {
                    return Err(DomainError::TooFewCategories {
                        feature: self.name.clone(),
                    });
                }
            }
        }
        Ok(())
    }
}

/// Prediction label, an index into the owning [`FeatureSpace`]'s label set.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Label(pub usize);

/// Schema of a mixed numeric/categorical tabular domain together with the
/// prediction codomain.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FeatureSpace<F> {
    features: Vec<FeatureDescriptor<F>>,
    labels: Vec<String>,
}

impl<F: Real> FeatureSpace<F> {
    pub fn new(
        features: Vec<FeatureDescriptor<F>>,
        labels: Vec<String>,
    ) -> Result<Self, DomainError> {
        for (i, f) in features.iter().enumerate() {
            f.validate()?;
            if features[..i].iter().any(|g| g.name == f.name) {
                return Err(DomainError::DuplicateFeature {
                    name: f.name.clone(),
                });
            }
        }
        if labels.is_empty() {
            return Err(DomainError::BadLabelSet);
        }
        for (i, l) in labels.iter().enumerate() {
            if labels[..i].contains(l) {
                return Err(DomainError::BadLabelSet);
            }
        }
        Ok(Self { features, labels })
    }

    pub fn features(&self) -> &[FeatureDescriptor<F>] {
        &self.features
    }

    pub fn feature(&self, i: usize) -> &FeatureDescriptor<F> {
        &self.features[i]
    }

    pub fn arity(&self) -> usize {
        self.features.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label_name(&self, label: Label) -> &str {
        &self.labels[label.0]
    }

    /// Resolve a label by its display name.
    pub fn label_by_name(&self, name: &str) -> Result<Label, DomainError> {
        self.labels
            .iter()
            .position(|l| l == name)
            .map(Label)
            .ok_or_else(|| DomainError::UnknownLabel {
                label: name.to_string(),
            })
    }

    pub fn is_binary(&self) -> bool {
        self.labels.len() == 2
    }

    /// The label that is not `label`; only meaningful for binary spaces.
    pub fn other_label(&self, label: Label) -> Option<Label> {
        if self.is_binary() {
            Some(Label(1 - label.0))
        } else {
            None
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_inverted_bounds() {
        let err = FeatureSpace::new(
            vec![FeatureDescriptor::numeric("x", 5.0f64, 1.0)],
            vec!["a".into(), "b".into()],
        )
        .unwrap_err();
        assert!(matches!(err, DomainError::InvalidBounds { .. }));
    }

    #[test]
    fn rejects_single_category() {
        let err = FeatureSpace::new(
            vec![FeatureDescriptor::<f64>::categorical("c", ["only"])],
            vec!["a".into(), "b".into()],
        )
        .unwrap_err();
        assert!(matches!(err, DomainError::TooFewCategories { .. }));
    }

    #[test]
    fn rejects_duplicate_names_and_empty_labels() {
        let feats = vec![
            FeatureDescriptor::numeric("x", 0.0f64, 1.0),
            FeatureDescriptor::numeric("x", 0.0, 1.0),
        ];
        assert!(matches!(
            FeatureSpace::new(feats, vec!["a".into(), "b".into()]),
            Err(DomainError::DuplicateFeature { .. })
        ));
        assert!(matches!(
            FeatureSpace::new(vec![FeatureDescriptor::numeric("x", 0.0f64, 1.0)], vec![]),
            Err(DomainError::BadLabelSet)
        ));
    }

    #[test]
    fn label_lookup() {
        let space = FeatureSpace::new(
            vec![FeatureDescriptor::numeric("x", 0.0f64, 1.0)],
            vec!["no".into(), "yes".into()],
        )
        .unwrap();
        assert_eq!(space.label_by_name("yes").unwrap(), Label(1));
        assert_eq!(space.label_name(Label(0)), "no");
        assert_eq!(space.other_label(Label(1)), Some(Label(0)));
        assert!(space.label_by_name("maybe").is_err());
    }
}
