//! Truncated antimatroids.

use crate::error::{Error, Result};
use crate::system::{SetFamily, Subset};

/// A k-truncated antimatroid: the members of size at most `k` of some
/// antimatroid.
///
/// Validation uses the recognizer for truncations: an accessible system of
/// rank `k` is a k-truncation of an antimatroid exactly when it satisfies the
/// k-truncated interval property. The wrapped family is always the truncated
/// system itself (rank exactly `k`), and every member of size at most `k−1`
/// has a non-empty continuation set — the hypothesis the duality operations
/// rely on.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedAntimatroid {
    family: SetFamily,
    k: usize,
}

impl TruncatedAntimatroid {
    /// Truncates `family` at level `k` and validates the result.
    pub fn new(family: &SetFamily, k: usize) -> Result<Self> {
        let rank = family.rank();
        if k < 1 || k > rank {
            return Err(Error::InvalidTruncationLevel { k, rank });
        }
        let trunc = family.truncate(k)?;
        let fail = |reason: &str| Error::NotTruncatedAntimatroid {
            k,
            reason: reason.to_string(),
        };
        if trunc.rank() != k {
            return Err(fail("truncation has rank below k"));
        }
        if !trunc.is_accessible() {
            return Err(fail("truncation is not accessible"));
        }
        if let Some(v) = trunc.truncated_interval_violation(k)? {
            return Err(fail(&format!("truncated interval property fails at {v}")));
        }
        // Extraction's hypothesis: every member below the top level extends.
        for m in trunc.members() {
            if m.len() < k && trunc.continuations(&m)?.is_empty() {
                return Err(fail(&format!("no feasible continuation of {m}")));
            }
        }
        Ok(Self { family: trunc, k })
    }

    /// Views an antimatroid as the truncation of itself at `k = rank`.
    pub fn from_antimatroid(family: &SetFamily) -> Result<Self> {
        if !family.is_antimatroid()? {
            return Err(Error::NotTruncatedAntimatroid {
                k: family.rank(),
                reason: "family is not an antimatroid".into(),
            });
        }
        Self::new(family, family.rank())
    }

    /// The truncated system `(E, 𝓕_k)`.
    pub fn family(&self) -> &SetFamily {
        &self.family
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn ground(&self) -> &crate::system::GroundSet {
        self.family.ground()
    }

    /// Members of `𝓕_{k−1}`, the domain set functions live on.
    pub fn interior_members(&self) -> impl Iterator<Item = Subset> + '_ {
        let k = self.k;
        self.family.members().filter(move |m| m.len() < k)
    }

    pub(crate) fn interior_masks(&self) -> impl Iterator<Item = u32> + '_ {
        let k = self.k;
        self.family
            .member_masks()
            .iter()
            .copied()
            .filter(move |m| (m.count_ones() as usize) < k)
    }

    /// Members of size exactly `k`, the maximal sets of the truncation.
    pub fn top_members(&self) -> impl Iterator<Item = Subset> + '_ {
        let k = self.k;
        self.family.members().filter(move |m| m.len() == k)
    }

    pub fn continuations(&self, set: &Subset) -> Result<Subset> {
        self.family.continuations(set)
    }

    /// Semilattice meet `X ∧ Y = 𝓑(X ∩ Y)`.
    ///
    /// The truncation is usually not union-closed, but for members `X`, `Y`
    /// every feasible subset of `X ∩ Y` already has size at most `k`, so the
    /// maximal one is the same as in the untruncated antimatroid and is
    /// unique.
    pub fn meet(&self, x: &Subset, y: &Subset) -> Result<Subset> {
        if !self.family.contains(x) {
            return Err(Error::NotFeasible(x.to_string()));
        }
        if !self.family.contains(y) {
            return Err(Error::NotFeasible(y.to_string()));
        }
        let maximal = self.family.maximal_feasible_subsets(&x.intersection(y))?;
        match maximal.as_slice() {
            [unique] => Ok(unique.clone()),
            _ => Err(Error::ConsistencyViolation(format!(
                "meet of {x} and {y} has {} maximal feasible subsets",
                maximal.len()
            ))),
        }
    }

    pub(crate) fn meet_mask(&self, x: u32, y: u32) -> u32 {
        let masks = self.family.maximal_feasible_masks(x & y);
        debug_assert_eq!(
            masks.len(),
            1,
            "meet must be unique on truncated antimatroids"
        );
        masks[0]
    }
}
