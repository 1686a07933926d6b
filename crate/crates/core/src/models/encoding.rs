//! Numeric encoding of mixed-feature data: numeric features pass through,
//! categorical features one-hot. Deltas encode to direction vectors in the
//! same space (a categorical change contributes the unit axis of its target
//! category).

use serde::{Deserialize, Serialize};

use crate::domain::{Change, Delta, FeatureDomain, FeatureSpace, Instance, Value};
use crate::num::Real;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
struct Slot {
    start: usize,
    width: usize,
}

/// Fixed layout mapping a [`FeatureSpace`] to dense real vectors.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Encoding {
    slots: Vec<Slot>,
    dim: usize,
}

impl Encoding {
    pub fn for_space<F: Real>(space: &FeatureSpace<F>) -> Self {
        let mut slots = Vec::with_capacity(space.arity());
        let mut start = 0;
        for descr in space.features() {
            let width = match &descr.domain {
                FeatureDomain::Numeric { .. } => 1,
                FeatureDomain::Categorical { categories } => categories.len(),
            };
            slots.push(Slot { start, width });
            start += width;
        }
        Self { slots, dim: start }
    }

    /// Encoded dimension.
    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Start offset and width of feature `i` in the encoded vector.
    pub fn slot(&self, i: usize) -> (usize, usize) {
        let s = self.slots[i];
        (s.start, s.width)
    }

    pub fn encode_instance<F: Real>(&self, x: &Instance<F>) -> Vec<F> {
        let mut out = vec![F::zero(); self.dim];
        for (slot, value) in self.slots.iter().zip(x.values()) {
            match value {
                Value::Num(v) => out[slot.start] = *v,
                Value::Cat(c) => out[slot.start + c] = F::one(),
            }
        }
        out
    }

    /// Direction vector of a delta: offsets at numeric slots, a unit
    /// component on the one-hot axis of the target category.
    pub fn encode_delta<F: Real>(&self, d: &Delta<F>) -> Vec<F> {
        let mut out = vec![F::zero(); self.dim];
        for (slot, change) in self.slots.iter().zip(d.changes()) {
            match change {
                Change::None => {}
                Change::Offset(o) => out[slot.start] = *o,
                Change::SetCategory(c) => out[slot.start + c] = F::one(),
            }
        }
        out
    }

    /// Inverse of [`encode_delta`] for all-numeric spaces; exact zeros map to
    /// "no change".
    pub fn decode_numeric_delta<F: Real>(&self, space: &FeatureSpace<F>, enc: &[F]) -> Delta<F> {
        debug_assert_eq!(enc.len(), self.dim);
        debug_assert!(space.features().iter().all(|f| f.is_numeric()));
        let changes = self
            .slots
            .iter()
            .map(|slot| {
                let v = enc[slot.start];
                if v == F::zero() {
                    Change::None
                } else {
                    Change::Offset(v)
                }
            })
            .collect();
        Delta::from_changes_unchecked(changes)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::domain::FeatureDescriptor;

    fn mixed() -> FeatureSpace<f64> {
        FeatureSpace::new(
            vec![
                FeatureDescriptor::numeric("x", -10.0, 10.0),
                FeatureDescriptor::categorical("c", ["a", "b", "d"]),
                FeatureDescriptor::numeric("y", -10.0, 10.0),
            ],
            vec!["neg".into(), "pos".into()],
        )
        .unwrap()
    }

    #[test]
    fn instance_layout() {
        let s = mixed();
        let enc = Encoding::for_space(&s);
        assert_eq!(enc.dim(), 5);
        let x = Instance::new(&s, vec![Value::Num(2.0), Value::Cat(1), Value::Num(-1.0)]).unwrap();
        assert_eq!(enc.encode_instance(&x), vec![2.0, 0.0, 1.0, 0.0, -1.0]);
    }

    #[test]
    fn delta_direction_layout() {
        let s = mixed();
        let enc = Encoding::for_space(&s);
        let d = Delta::new(
            &s,
            vec![Change::Offset(0.5), Change::SetCategory(2), Change::None],
        )
        .unwrap();
        assert_eq!(enc.encode_delta(&d), vec![0.5, 0.0, 0.0, 1.0, 0.0]);
    }

    #[test]
    fn numeric_decode_roundtrip() {
        let s = FeatureSpace::new(
            vec![
                FeatureDescriptor::numeric("a", -10.0, 10.0),
                FeatureDescriptor::numeric("b", -10.0, 10.0),
            ],
            vec!["neg".into(), "pos".into()],
        )
        .unwrap();
        let enc = Encoding::for_space(&s);
        let d = enc.decode_numeric_delta(&s, &[0.0, -1.5]);
        assert_eq!(d.changes(), &[Change::None, Change::Offset(-1.5)]);
        assert_eq!(enc.encode_delta(&d), vec![0.0, -1.5]);
    }
}
