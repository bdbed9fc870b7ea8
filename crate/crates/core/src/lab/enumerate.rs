//! Exhaustive enumeration of set families and of set functions.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lab::random::SplitMix64;
use crate::rational::Rational;
use crate::system::{GroundSet, SetFamily, TruncatedAntimatroid};

/// Families are generated over the numeric ground set `{"1", ..., "n"}` and
/// always contain the empty set — a forced consequence of accessibility that
/// prunes the `2^(2^n)` search space.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum FamilyClass {
    /// Every ∅-containing family.
    AllFamilies,
    /// Accessible families.
    Accessible,
    /// Accessible and union-closed families.
    Antimatroid,
    /// Accessible families of rank `k ≥ 1` that are not antimatroids but
    /// still have a feasible continuation for every member of `𝓕_{k−1}` —
    /// the hypothesis class of the necessity theorem.
    AccessibleNonAntimatroid,
}

impl FamilyClass {
    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "all" | "all-families" => Some(Self::AllFamilies),
            "accessible" => Some(Self::Accessible),
            "antimatroid" => Some(Self::Antimatroid),
            "accessible-non-antimatroid" => Some(Self::AccessibleNonAntimatroid),
            _ => None,
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            Self::AllFamilies => "all-families",
            Self::Accessible => "accessible",
            Self::Antimatroid => "antimatroid",
            Self::AccessibleNonAntimatroid => "accessible-non-antimatroid",
        }
    }
}

/// What to enumerate. `k`, when present, keeps only families of rank
/// exactly `k`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EnumerationSpec {
    pub n: usize,
    pub class: FamilyClass,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k: Option<usize>,
}

impl EnumerationSpec {
    pub fn new(n: usize, class: FamilyClass) -> Self {
        Self { n, class, k: None }
    }

    /// Cost guardrails: subset-space sweeps stop at n = 4; the dedicated
    /// antimatroid search extends to n = 5.
    pub fn check_guardrails(&self) -> Result<()> {
        if self.n < 1 {
            return Err(Error::GuardrailExceeded("n must be at least 1".into()));
        }
        let limit = match self.class {
            FamilyClass::Antimatroid => 5,
            _ => 4,
        };
        if self.n > limit {
            return Err(Error::GuardrailExceeded(format!(
                "n = {} exceeds the limit of {limit} for class {}",
                self.n,
                self.class.name()
            )));
        }
        Ok(())
    }
}

fn family_sort_key(f: &SetFamily) -> Vec<(u32, u32)> {
    f.member_masks()
        .iter()
        .map(|&m| (m.count_ones(), m))
        .collect()
}

/// Every ∅-containing family of `spec.n` elements in the requested class,
/// each exactly once, in canonical order.
pub fn enumerate_families(spec: &EnumerationSpec) -> Result<Vec<SetFamily>> {
    spec.check_guardrails()?;
    let ground = GroundSet::numeric(spec.n)?;
    let mut out = match spec.class {
        FamilyClass::Antimatroid => antimatroids_dfs(&ground)?,
        _ => {
            let mut families = Vec::new();
            let slots = (1u32 << spec.n) - 1; // non-empty masks
            for indicator in 0u64..(1u64 << slots) {
                let masks = std::iter::once(0u32)
                    .chain((1..=slots).filter(|m| indicator & (1 << (m - 1)) != 0));
                let family = SetFamily::from_masks(&ground, masks).expect("distinct masks");
                let keep = match spec.class {
                    FamilyClass::AllFamilies => true,
                    FamilyClass::Accessible => family.is_accessible(),
                    FamilyClass::AccessibleNonAntimatroid => in_necessity_class(&family)?,
                    FamilyClass::Antimatroid => unreachable!(),
                };
                if keep {
                    families.push(family);
                }
            }
            families
        }
    };
    if let Some(k) = spec.k {
        out.retain(|f| f.rank() == k);
    }
    out.sort_by_cached_key(family_sort_key);
    Ok(out)
}

fn in_necessity_class(family: &SetFamily) -> Result<bool> {
    if !family.is_accessible() || family.is_antimatroid()? {
        return Ok(false);
    }
    let k = family.rank();
    if k < 1 {
        return Ok(false);
    }
    Ok(family
        .member_masks()
        .iter()
        .filter(|m| (m.count_ones() as usize) < k)
        .all(|&m| family.continuations_mask(m) != 0))
}

/// Depth-first construction of all antimatroids over `ground`.
///
/// Non-empty masks are decided in (size, mask) order. Including a mask needs
/// a one-element-smaller member below it (accessibility); including two masks
/// forces their union, which always sits at a later position. Forced masks
/// that cannot be included accessibly kill the branch.
fn antimatroids_dfs(ground: &GroundSet) -> Result<Vec<SetFamily>> {
    let n = ground.n();
    let mut order: Vec<u32> = (1..(1u32 << n)).collect();
    order.sort_unstable_by_key(|m| (m.count_ones(), *m));

    struct Search<'a> {
        ground: &'a GroundSet,
        order: Vec<u32>,
        n: usize,
        out: Vec<SetFamily>,
    }

    impl Search<'_> {
        // `chosen` and `forced` are bitsets over masks; bit `m` refers to
        // subset mask `m`. Bit 0 (the empty set) is always chosen.
        fn recurse(&mut self, pos: usize, chosen: u64, forced: u64) {
            if pos == self.order.len() {
                let members = (0..(1u32 << self.n)).filter(|&m| chosen & (1u64 << m) != 0);
                self.out
                    .push(SetFamily::from_masks(self.ground, members).expect("distinct masks"));
                return;
            }
            let m = self.order[pos];
            let eligible = (0..self.n)
                .any(|b| m & (1 << b) != 0 && chosen & (1u64 << (m & !(1u32 << b))) != 0);
            let forced_here = forced & (1u64 << m) != 0;
            if !forced_here {
                self.recurse(pos + 1, chosen, forced);
            }
            if eligible {
                let mut new_forced = forced;
                let mut rest = chosen;
                while rest != 0 {
                    let a = rest.trailing_zeros();
                    rest &= rest - 1;
                    let union = a | m;
                    if union != m && union != a {
                        new_forced |= 1u64 << union;
                    }
                }
                self.recurse(pos + 1, chosen | (1u64 << m), new_forced);
            }
            // forced but not eligible: dead branch
        }
    }

    let mut search = Search {
        ground,
        order,
        n,
        out: Vec::new(),
    };
    search.recurse(0, 1, 0);
    for family in &search.out {
        if !family.is_antimatroid()? {
            return Err(Error::ConsistencyViolation(
                "antimatroid search emitted a non-antimatroid".into(),
            ));
        }
    }
    Ok(search.out)
}

pub const FUNCTION_ENUMERATION_CAP: u64 = 200_000;

/// The index plan for sweeping total assignments `𝓕_{k−1} → codomain`.
///
/// When the full space fits under the cap every assignment appears once, in
/// mixed-radix order with the first domain member as the least significant
/// digit. Otherwise the plan is a systematic seeded subsample: `cap` evenly
/// spaced indices starting from a seed-derived offset.
#[derive(Clone, Debug)]
pub(crate) struct FunctionIndexing {
    pub domain_len: usize,
    pub codomain_len: usize,
    pub total: u128,
    pub sampled: bool,
    pub count: u64,
    offset: u128,
}

impl FunctionIndexing {
    pub fn new(domain_len: usize, codomain_len: usize, cap: u64, seed: u64) -> Self {
        assert!(codomain_len >= 1 && cap >= 1);
        let total = (codomain_len as u128)
            .checked_pow(domain_len as u32)
            .unwrap_or(u128::MAX);
        let sampled = total > cap as u128;
        let count = if sampled { cap } else { total as u64 };
        let offset = if sampled {
            SplitMix64::new(seed).next_u64() as u128 % total
        } else {
            0
        };
        Self {
            domain_len,
            codomain_len,
            total,
            sampled,
            count,
            offset,
        }
    }

    pub fn index(&self, t: u64) -> u128 {
        if self.sampled {
            (self.offset + (t as u128 * self.total) / self.count as u128) % self.total
        } else {
            t as u128
        }
    }

    /// Digits of assignment `t`, one codomain index per domain position.
    pub fn digits_into(&self, t: u64, out: &mut [u8]) {
        debug_assert_eq!(out.len(), self.domain_len);
        let mut index = self.index(t);
        let base = self.codomain_len as u128;
        for digit in out.iter_mut() {
            *digit = (index % base) as u8;
            index /= base;
        }
    }
}

/// All total assignments from `𝓕_{k−1}` of `system` into `codomain`, as
/// validated set functions. Spaces larger than [`FUNCTION_ENUMERATION_CAP`]
/// are subsampled systematically by seed; [`FunctionEnumeration::sampled`]
/// reports when that happened.
pub fn enumerate_set_functions(
    system: &TruncatedAntimatroid,
    codomain: &[Rational],
    seed: u64,
) -> FunctionEnumeration {
    let domain: Vec<u32> = system.interior_masks().collect();
    let indexing =
        FunctionIndexing::new(domain.len(), codomain.len(), FUNCTION_ENUMERATION_CAP, seed);
    FunctionEnumeration {
        system: system.clone(),
        codomain: codomain.to_vec(),
        domain,
        next: 0,
        indexing,
    }
}

pub struct FunctionEnumeration {
    system: TruncatedAntimatroid,
    codomain: Vec<Rational>,
    domain: Vec<u32>,
    next: u64,
    indexing: FunctionIndexing,
}

impl FunctionEnumeration {
    pub fn total_assignments(&self) -> u128 {
        self.indexing.total
    }

    pub fn sampled(&self) -> bool {
        self.indexing.sampled
    }

    pub fn len(&self) -> u64 {
        self.indexing.count
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

impl Iterator for FunctionEnumeration {
    type Item = crate::duality::SetFunction;

    fn next(&mut self) -> Option<Self::Item> {
        if self.next >= self.indexing.count {
            return None;
        }
        let mut digits = vec![0u8; self.domain.len()];
        self.indexing.digits_into(self.next, &mut digits);
        self.next += 1;
        let values: BTreeMap<u32, Rational> = self
            .domain
            .iter()
            .zip(&digits)
            .map(|(&m, &d)| (m, self.codomain[d as usize]))
            .collect();
        Some(
            crate::duality::SetFunction::from_table(self.system.family(), self.system.k(), values)
                .expect("enumerated tables are total"),
        )
    }
}

/// Integer codomain `{0, 1, ..., max}`.
pub fn integer_codomain(max: i64) -> Vec<Rational> {
    (0..=max).map(Rational::int).collect()
}
