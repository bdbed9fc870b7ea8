//! The duality operations: extraction, the canonical linkage, representation
//! and dominance checks.

use std::collections::BTreeMap;

use crate::duality::{LinkageFunction, SetFunction};
use crate::error::{Error, Result};
use crate::rational::Rational;
use crate::system::{SetFamily, Subset, TruncatedAntimatroid};

/// Evidence that `linkage` represents `function`: one witness continuation
/// per valued set attaining the defining minimum.
#[derive(Clone, Debug)]
pub struct RepresentationCertificate {
    pub function: SetFunction,
    pub linkage: LinkageFunction,
    /// For each mask in `𝓕_{k−1}`, an element of `Γ(X)` with
    /// `F(X) = π(x*, X)`.
    pub witnesses: BTreeMap<u32, usize>,
}

/// `F(X) = min_{x ∈ Γ(X)} π(x, X)` on `𝓕_{k−1}` of a truncated antimatroid.
///
/// On the Boolean system `2^E` with `k = n` this coincides with the minimum
/// over the whole complement `E − X`. Monotonicity of `pi` is the caller's
/// contract; extraction itself only needs non-empty continuation sets, which
/// the truncated antimatroid guarantees.
pub fn extract_set_function(
    pi: &LinkageFunction,
    system: &TruncatedAntimatroid,
) -> Result<SetFunction> {
    extract_on_family(pi, system.family(), system.k())
}

/// Extraction on an arbitrary family of rank at least `k`. Fails with
/// [`Error::EmptyContinuationSet`] when some member of `𝓕_{k−1}` has no
/// feasible continuation.
pub fn extract_on_family(
    pi: &LinkageFunction,
    family: &SetFamily,
    k: usize,
) -> Result<SetFunction> {
    if pi.ground() != family.ground() {
        return Err(Error::GroundSetMismatch);
    }
    let rank = family.rank();
    if k < 1 || k > rank {
        return Err(Error::InvalidTruncationLevel { k, rank });
    }
    let n = family.n();
    let mut values = BTreeMap::new();
    for &mask in family.member_masks() {
        if mask.count_ones() as usize >= k {
            continue;
        }
        let gamma = family.continuations_mask(mask);
        if gamma == 0 {
            let s = Subset::from_mask(family.ground(), mask)?;
            return Err(Error::EmptyContinuationSet(s.to_string()));
        }
        let min = (0..n)
            .filter(|x| gamma & (1 << x) != 0)
            .map(|x| pi.at(x, mask))
            .min()
            .expect("gamma is non-empty");
        values.insert(mask, min);
    }
    SetFunction::from_table(family, k, values)
}

/// Extends an extracted function to the maximal sets: for members `X` with
/// `|X| = k`, `F(X) = min_{x ∈ E−X} π(x, X)`. For `X = E` the complement is
/// exhausted and the value falls back to the minimum of `F` over `𝓕_{k−1}`,
/// which keeps the extension quasi-concave because `E` is the top of the
/// semilattice.
pub fn extend_to_maximal(f: &SetFunction, pi: &LinkageFunction) -> Result<SetFunction> {
    if pi.ground() != f.ground() {
        return Err(Error::GroundSetMismatch);
    }
    let family = f.system();
    let n = family.n();
    let full = f.ground().full_subset().mask();
    let fallback = f.min_value();
    let mut values: BTreeMap<u32, Rational> = f
        .domain_masks()
        .iter()
        .map(|&m| (m, f.value_of_mask(m).expect("domain mask")))
        .collect();
    for &mask in family.member_masks() {
        if mask.count_ones() as usize != f.k() {
            continue;
        }
        let value = if mask == full {
            fallback
        } else {
            (0..n)
                .filter(|x| mask & (1 << x) == 0)
                .map(|x| pi.at(x, mask))
                .min()
                .expect("complement is non-empty")
        };
        values.insert(mask, value);
    }
    SetFunction::from_table(family, f.k(), values)
}

/// The canonical linkage `π_F`: for `x ∉ X` with a non-empty valued interval
/// `[X, E−x]`, the maximum of `F` over that interval; everywhere else the
/// minimum of `F` over `𝓕_{k−1}`. Defined for every pair, feasible or not,
/// and always monotone.
pub fn build_canonical_linkage(f: &SetFunction) -> Result<LinkageFunction> {
    let interior: Vec<u32> = f.interior_masks().collect();
    if interior.is_empty() {
        return Err(Error::EmptyFamily);
    }
    let global_min = interior
        .iter()
        .map(|&m| f.value_of_mask(m).expect("interior mask"))
        .min()
        .expect("interior is non-empty");
    let ground = f.ground().clone();
    let n = ground.n();
    let mut values = Vec::with_capacity(n << n);
    for mask in 0..=ground.full_subset().mask() {
        for x in 0..n {
            let bit = 1u32 << x;
            let mut best: Option<Rational> = None;
            if mask & bit == 0 {
                for &a in &interior {
                    if mask & !a == 0 && a & bit == 0 {
                        let v = f.value_of_mask(a).expect("interior mask");
                        best = Some(best.map_or(v, |b: Rational| b.max(v)));
                    }
                }
            }
            values.push(best.unwrap_or(global_min));
        }
    }
    Ok(LinkageFunction::from_raw(&ground, values))
}

/// Whether extraction from `pi` reproduces `f` exactly on `𝓕_{k−1}`.
pub fn represents(pi: &LinkageFunction, f: &SetFunction) -> Result<bool> {
    let extracted = extract_on_family(pi, f.system(), f.k())?;
    Ok(f.interior_masks()
        .all(|m| extracted.value_of_mask(m) == f.value_of_mask(m)))
}

/// The null property: `π_F(x, X) ≤ π(x, X)` for every `X ∈ 𝓕_{k−1}` and
/// `x ∈ Γ(X)`. Requires `pi` to represent `f`.
pub fn dominates_canonical(pi: &LinkageFunction, f: &SetFunction) -> Result<bool> {
    if !represents(pi, f)? {
        return Err(Error::NotARepresentation);
    }
    let canonical = build_canonical_linkage(f)?;
    let family = f.system();
    let n = family.n();
    for mask in f.interior_masks() {
        let gamma = family.continuations_mask(mask);
        for x in 0..n {
            if gamma & (1 << x) != 0 && canonical.at(x, mask) > pi.at(x, mask) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

fn interval_members(f: &SetFunction, element: usize, set: &Subset) -> Result<Vec<u32>> {
    if set.ground() != f.ground() {
        return Err(Error::GroundSetMismatch);
    }
    if element >= f.ground().n() {
        return Err(Error::InvalidGroundSet(format!(
            "element index {element} out of range"
        )));
    }
    let bit = 1u32 << element;
    let members: Vec<u32> = f
        .interior_masks()
        .filter(|&a| set.mask() & !a == 0 && a & bit == 0)
        .collect();
    if members.is_empty() {
        return Err(Error::EmptyInterval {
            x: f.ground().label(element).to_string(),
            set: set.to_string(),
        });
    }
    Ok(members)
}

/// A valued member of `[X, E−x]` maximizing `F`, ties broken by smallest
/// (size, numeric mask). Pairs with `x ∈ X` have an empty interval.
pub fn interval_argmax(f: &SetFunction, element: usize, set: &Subset) -> Result<Subset> {
    let members = interval_members(f, element, set)?;
    let mut best = members[0];
    let mut best_value = f.value_of_mask(best).expect("interval member");
    for &a in &members[1..] {
        let v = f.value_of_mask(a).expect("interval member");
        if v > best_value {
            best = a;
            best_value = v;
        }
    }
    Subset::from_mask(f.ground(), best)
}

/// Every maximizer of `F` on `[X, E−x]`, in canonical order. Exposed so the
/// representation proof can be replayed for each possible tie-break.
pub fn interval_argmax_all(f: &SetFunction, element: usize, set: &Subset) -> Result<Vec<Subset>> {
    let members = interval_members(f, element, set)?;
    let best = members
        .iter()
        .map(|&a| f.value_of_mask(a).expect("interval member"))
        .max()
        .expect("interval is non-empty");
    members
        .into_iter()
        .filter(|&a| f.value_of_mask(a) == Some(best))
        .map(|a| Subset::from_mask(f.ground(), a))
        .collect()
}

/// Builds the per-set witness table showing that `pi` represents `f`.
pub fn certify_representation(
    pi: &LinkageFunction,
    f: &SetFunction,
) -> Result<RepresentationCertificate> {
    if pi.ground() != f.ground() {
        return Err(Error::GroundSetMismatch);
    }
    let family = f.system();
    let n = family.n();
    let mut witnesses = BTreeMap::new();
    for mask in f.interior_masks() {
        let gamma = family.continuations_mask(mask);
        if gamma == 0 {
            let s = Subset::from_mask(family.ground(), mask)?;
            return Err(Error::EmptyContinuationSet(s.to_string()));
        }
        let (witness, min) = (0..n)
            .filter(|x| gamma & (1 << x) != 0)
            .map(|x| (x, pi.at(x, mask)))
            .min_by_key(|&(_, v)| v)
            .expect("gamma is non-empty");
        if Some(min) != f.value_of_mask(mask) {
            return Err(Error::NotARepresentation);
        }
        witnesses.insert(mask, witness);
    }
    Ok(RepresentationCertificate {
        function: f.clone(),
        linkage: pi.clone(),
        witnesses,
    })
}
