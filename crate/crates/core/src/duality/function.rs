//! Set functions with exact rational values.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::rational::Rational;
use crate::system::{SetFamily, Subset, TruncatedAntimatroid};

/// A violating triple for quasi-concavity: `z` is a maximal valued subset of
/// `x ∩ y` with `F(z) < min{F(x), F(y)}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuasiConcavityViolation {
    pub x: Subset,
    pub y: Subset,
    pub z: Subset,
}

/// An exact-valued set function on the feasible sets of one system.
///
/// `system` is the carrier used for continuations and meets; values live on
/// the members of `𝓕_{k−1}` (or, for functions extended to maximal sets, on
/// all of `𝓕_k`). Evaluating the function outside its value table is a hard
/// error, never a silent default.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SetFunction {
    system: SetFamily,
    k: usize,
    values: BTreeMap<u32, Rational>,
    /// Value-table keys in canonical (size, mask) order.
    domain: Vec<u32>,
}

impl SetFunction {
    /// A function on `𝓕_{k−1}` of a truncated antimatroid.
    pub fn on_truncation(
        system: &TruncatedAntimatroid,
        values: impl IntoIterator<Item = (Subset, Rational)>,
    ) -> Result<Self> {
        Self::on_family(system.family(), system.k(), values)
    }

    /// A function on `𝓕_{k−1}` of an arbitrary family of rank at least `k`.
    ///
    /// The value table must cover exactly the members of size at most `k−1`,
    /// optionally together with all members of size exactly `k` (a function
    /// already extended to the maximal sets).
    pub fn on_family(
        system: &SetFamily,
        k: usize,
        values: impl IntoIterator<Item = (Subset, Rational)>,
    ) -> Result<Self> {
        let rank = system.rank();
        if k < 1 || k > rank {
            return Err(Error::InvalidTruncationLevel { k, rank });
        }
        let mut table = BTreeMap::new();
        for (set, value) in values {
            if set.ground() != system.ground() {
                return Err(Error::GroundSetMismatch);
            }
            if !system.contains(&set) {
                return Err(Error::NotFeasible(set.to_string()));
            }
            if table.insert(set.mask(), value).is_some() {
                return Err(Error::DuplicateMember(set.to_string()));
            }
        }
        Self::from_table(system, k, table)
    }

    pub(crate) fn from_table(
        system: &SetFamily,
        k: usize,
        values: BTreeMap<u32, Rational>,
    ) -> Result<Self> {
        let mut has_top_values = false;
        for &mask in values.keys() {
            let size = mask.count_ones() as usize;
            if size >= k {
                if size > k || !system.contains_mask(mask) {
                    let s = Subset::from_mask(system.ground(), mask)?;
                    return Err(Error::NotFeasible(s.to_string()));
                }
                has_top_values = true;
            }
        }
        for &mask in system.member_masks() {
            let size = mask.count_ones() as usize;
            if size < k && !values.contains_key(&mask) {
                let s = Subset::from_mask(system.ground(), mask)?;
                return Err(Error::MissingValue(s.to_string()));
            }
            if has_top_values && size == k && !values.contains_key(&mask) {
                let s = Subset::from_mask(system.ground(), mask)?;
                return Err(Error::MissingValue(s.to_string()));
            }
        }
        let mut domain: Vec<u32> = values.keys().copied().collect();
        domain.sort_unstable_by_key(|m| (m.count_ones(), *m));
        Ok(Self {
            system: system.clone(),
            k,
            values,
            domain,
        })
    }

    pub fn system(&self) -> &SetFamily {
        &self.system
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn ground(&self) -> &crate::system::GroundSet {
        self.system.ground()
    }

    /// Sets carrying a value, in canonical order.
    pub fn domain(&self) -> impl Iterator<Item = Subset> + '_ {
        self.domain
            .iter()
            .map(|&m| Subset::from_mask(self.system.ground(), m).expect("validated mask"))
    }

    pub(crate) fn domain_masks(&self) -> &[u32] {
        &self.domain
    }

    /// Keys of size at most `k−1` — the `𝓕_{k−1}` part of the table.
    pub(crate) fn interior_masks(&self) -> impl Iterator<Item = u32> + '_ {
        let k = self.k;
        self.domain
            .iter()
            .copied()
            .filter(move |m| (m.count_ones() as usize) < k)
    }

    /// Whether the table also covers the size-`k` members.
    pub fn is_extended(&self) -> bool {
        self.domain
            .iter()
            .any(|m| m.count_ones() as usize == self.k)
    }

    pub fn value(&self, set: &Subset) -> Result<Rational> {
        if set.ground() != self.system.ground() {
            return Err(Error::GroundSetMismatch);
        }
        self.values
            .get(&set.mask())
            .copied()
            .ok_or_else(|| Error::MissingValue(set.to_string()))
    }

    pub(crate) fn value_of_mask(&self, mask: u32) -> Option<Rational> {
        self.values.get(&mask).copied()
    }

    pub fn min_value(&self) -> Rational {
        self.values
            .values()
            .copied()
            .min()
            .expect("value tables are non-empty")
    }

    /// Quasi-concavity over the valued sets: for every pair `X`, `Y` and
    /// every maximal valued subset `Z` of `X ∩ Y`, `F(Z) ≥ min{F(X), F(Y)}`.
    pub fn is_quasi_concave(&self) -> bool {
        self.quasi_concavity_violation().is_none()
    }

    /// First violating triple in canonical order, scanning pairs with the
    /// later member first.
    pub fn quasi_concavity_violation(&self) -> Option<QuasiConcavityViolation> {
        for (i, &x) in self.domain.iter().enumerate() {
            for &y in &self.domain[..i] {
                let fx = self.values[&x];
                let fy = self.values[&y];
                let bound = fx.min(fy);
                let inter = x & y;
                for &z in &self.domain {
                    if z & !inter != 0 {
                        continue;
                    }
                    // maximal among valued subsets of the intersection
                    if self
                        .domain
                        .iter()
                        .any(|&o| o != z && o & !inter == 0 && z & !o == 0)
                    {
                        continue;
                    }
                    if self.values[&z] < bound {
                        let ground = self.system.ground();
                        return Some(QuasiConcavityViolation {
                            x: Subset::from_mask(ground, x).expect("validated mask"),
                            y: Subset::from_mask(ground, y).expect("validated mask"),
                            z: Subset::from_mask(ground, z).expect("validated mask"),
                        });
                    }
                }
            }
        }
        None
    }
}
