//! Linkage functions: total tables on `E × 2^E`.

use crate::error::{Error, Result};
use crate::rational::Rational;
use crate::system::{GroundSet, Subset};

/// A monotonicity counterexample: `smaller ⊆ larger` yet
/// `π(x, smaller) < π(x, larger)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonotonicityViolation {
    pub element: usize,
    pub smaller: Subset,
    pub larger: Subset,
}

/// A total table `π : E × 2^E → Q`.
///
/// The table covers every pair, including `x ∈ X`; extraction only ever reads
/// pairs with `x` a feasible continuation, but monotonicity is defined and
/// checked on the whole domain.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinkageFunction {
    ground: GroundSet,
    /// Indexed by `mask * n + element`.
    values: Vec<Rational>,
}

impl LinkageFunction {
    pub fn from_fn(ground: &GroundSet, mut f: impl FnMut(usize, &Subset) -> Rational) -> Self {
        let n = ground.n();
        let mut values = Vec::with_capacity(n << n);
        for mask in 0..=ground.full_subset().mask() {
            let set = Subset::from_mask(ground, mask).expect("mask in range");
            for x in 0..n {
                values.push(f(x, &set));
            }
        }
        Self {
            ground: ground.clone(),
            values,
        }
    }

    pub fn constant(ground: &GroundSet, value: Rational) -> Self {
        let n = ground.n();
        Self {
            ground: ground.clone(),
            values: vec![value; n << n],
        }
    }

    pub(crate) fn from_raw(ground: &GroundSet, values: Vec<Rational>) -> Self {
        debug_assert_eq!(values.len(), ground.n() << ground.n());
        Self {
            ground: ground.clone(),
            values,
        }
    }

    pub fn ground(&self) -> &GroundSet {
        &self.ground
    }

    pub fn value(&self, element: usize, set: &Subset) -> Result<Rational> {
        if set.ground() != &self.ground {
            return Err(Error::GroundSetMismatch);
        }
        if element >= self.ground.n() {
            return Err(Error::InvalidGroundSet(format!(
                "element index {element} out of range"
            )));
        }
        Ok(self.at(element, set.mask()))
    }

    #[inline]
    pub(crate) fn at(&self, element: usize, mask: u32) -> Rational {
        self.values[mask as usize * self.ground.n() + element]
    }

    pub(crate) fn raw_values(&self) -> &[Rational] {
        &self.values
    }

    /// Entries in canonical (mask, element) order.
    pub fn entries(&self) -> impl Iterator<Item = (usize, Subset, Rational)> + '_ {
        let n = self.ground.n();
        (0..=self.ground.full_subset().mask()).flat_map(move |mask| {
            let set = Subset::from_mask(&self.ground, mask).expect("mask in range");
            (0..n).map(move |x| (x, set.clone(), self.at(x, mask)))
        })
    }

    pub fn is_monotone(&self) -> bool {
        self.monotonicity_violation().is_none()
    }

    /// Checks `X ⊆ Y ⇒ π(x, X) ≥ π(x, Y)` over covering pairs `(X, X ∪ y)`
    /// only, which suffices by transitivity along chains.
    pub fn monotonicity_violation(&self) -> Option<MonotonicityViolation> {
        let n = self.ground.n();
        for mask in 0..=self.ground.full_mask() {
            for y in 0..n {
                let bit = 1u32 << y;
                if mask & bit != 0 {
                    continue;
                }
                let bigger = mask | bit;
                for x in 0..n {
                    if self.at(x, mask) < self.at(x, bigger) {
                        return Some(MonotonicityViolation {
                            element: x,
                            smaller: Subset::from_mask(&self.ground, mask).expect("mask in range"),
                            larger: Subset::from_mask(&self.ground, bigger).expect("mask in range"),
                        });
                    }
                }
            }
        }
        None
    }

    /// Pointwise minimum. The meet of two monotone linkages is monotone; if
    /// both represent the same set function on a system with non-empty
    /// continuation sets, so does the meet.
    pub fn meet(&self, other: &LinkageFunction) -> Result<LinkageFunction> {
        if self.ground != other.ground {
            return Err(Error::GroundSetMismatch);
        }
        Ok(LinkageFunction {
            ground: self.ground.clone(),
            values: self
                .values
                .iter()
                .zip(&other.values)
                .map(|(a, b)| *a.min(b))
                .collect(),
        })
    }

    /// Pointwise maximum.
    pub fn join(&self, other: &LinkageFunction) -> Result<LinkageFunction> {
        if self.ground != other.ground {
            return Err(Error::GroundSetMismatch);
        }
        Ok(LinkageFunction {
            ground: self.ground.clone(),
            values: self
                .values
                .iter()
                .zip(&other.values)
                .map(|(a, b)| *a.max(b))
                .collect(),
        })
    }
}

/// The worked example linkage on `E = {1,2}`, `𝓕 = 2^E`:
/// `π(2, ∅) = 2` and `π = 1` everywhere else.
pub fn example_linkage(ground: &GroundSet) -> LinkageFunction {
    LinkageFunction::from_fn(ground, |x, set| {
        if x == 1 && set.is_empty() {
            Rational::int(2)
        } else {
            Rational::int(1)
        }
    })
}
