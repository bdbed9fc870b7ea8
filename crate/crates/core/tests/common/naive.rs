//! An independent reference model built on `BTreeSet<String>` with no bit
//! masks, no member ordering, and full (untransformed) quantifiers. The
//! library is cross-checked against this model on every instance small
//! enough to sweep.

use std::collections::{BTreeMap, BTreeSet};

pub type Elem = String;
pub type Set = BTreeSet<Elem>;
pub type Family = BTreeSet<Set>;

/// Exact rational as a (numerator, denominator > 0) pair compared by
/// cross-multiplication in i128.
pub type Q = (i64, i64);

pub fn q_le(a: Q, b: Q) -> bool {
    (a.0 as i128) * (b.1 as i128) <= (b.0 as i128) * (a.1 as i128)
}

pub fn q_min(a: Q, b: Q) -> Q {
    if q_le(a, b) {
        a
    } else {
        b
    }
}

pub fn q_eq(a: Q, b: Q) -> bool {
    q_le(a, b) && q_le(b, a)
}

fn union(a: &Set, b: &Set) -> Set {
    a.union(b).cloned().collect()
}

fn is_subset(a: &Set, b: &Set) -> bool {
    a.is_subset(b)
}

/// All subsets of `ground`, by recursive include/exclude.
pub fn power_set(ground: &[Elem]) -> Vec<Set> {
    let mut out = vec![Set::new()];
    for e in ground {
        let mut extended = Vec::new();
        for s in &out {
            let mut t = s.clone();
            t.insert(e.clone());
            extended.push(t);
        }
        out.extend(extended);
    }
    out
}

/// Every family over `ground` that contains the empty set.
pub fn all_families(ground: &[Elem]) -> Vec<Family> {
    let candidates: Vec<Set> = power_set(ground)
        .into_iter()
        .filter(|s| !s.is_empty())
        .collect();
    let mut out: Vec<Family> = vec![Family::from([Set::new()])];
    for c in &candidates {
        let mut extended = Vec::new();
        for f in &out {
            let mut g = f.clone();
            g.insert(c.clone());
            extended.push(g);
        }
        out.extend(extended);
    }
    out
}

pub fn is_accessible(family: &Family) -> bool {
    family.iter().all(|x| {
        x.is_empty()
            || x.iter().any(|e| {
                let mut smaller = x.clone();
                smaller.remove(e);
                family.contains(&smaller)
            })
    })
}

pub fn satisfies_exchange(family: &Family) -> bool {
    family.iter().all(|x| {
        family.iter().all(|y| {
            is_subset(x, y)
                || x.difference(y).any(|e| {
                    let mut bigger = y.clone();
                    bigger.insert(e.clone());
                    family.contains(&bigger)
                })
        })
    })
}

pub fn is_union_closed(family: &Family) -> bool {
    family
        .iter()
        .all(|x| family.iter().all(|y| family.contains(&union(x, y))))
}

pub fn has_interval_property(ground: &[Elem], family: &Family) -> bool {
    family.iter().all(|x| {
        family
            .iter()
            .filter(|y| is_subset(x, y))
            .all(|y| interval_step_holds(ground, family, x, y))
    })
}

fn interval_step_holds(ground: &[Elem], family: &Family, x: &Set, y: &Set) -> bool {
    ground.iter().filter(|e| !y.contains(*e)).all(|e| {
        let mut xe = x.clone();
        xe.insert(e.clone());
        if !family.contains(&xe) {
            return true;
        }
        let mut ye = y.clone();
        ye.insert(e.clone());
        family.contains(&ye)
    })
}

pub fn has_truncated_interval_property(ground: &[Elem], family: &Family, k: usize) -> bool {
    family.iter().filter(|x| x.len() < k).all(|x| {
        family
            .iter()
            .filter(|y| y.len() < k && is_subset(x, y))
            .all(|y| interval_step_holds(ground, family, x, y))
    })
}

pub fn rank_of(family: &Family, x: &Set) -> Option<usize> {
    family
        .iter()
        .filter(|y| is_subset(y, x))
        .map(|y| y.len())
        .max()
}

pub fn rank(family: &Family) -> usize {
    family.iter().map(|y| y.len()).max().unwrap_or(0)
}

pub fn gamma(ground: &[Elem], family: &Family, x: &Set) -> Set {
    ground
        .iter()
        .filter(|e| {
            if x.contains(*e) {
                return false;
            }
            let mut xe = x.clone();
            xe.insert((*e).clone());
            family.contains(&xe)
        })
        .cloned()
        .collect()
}

pub fn maximal_feasible(family: &Family, x: &Set) -> Vec<Set> {
    let inside: Vec<&Set> = family.iter().filter(|y| is_subset(y, x)).collect();
    inside
        .iter()
        .filter(|y| !inside.iter().any(|z| *z != **y && is_subset(y, z)))
        .map(|y| (*y).clone())
        .collect()
}

/// Definition-style quasi-concavity: for every pair of valued sets and every
/// maximal valued subset of their intersection, the value bound holds.
pub fn quasi_concave(values: &BTreeMap<Set, Q>) -> bool {
    let domain: Family = values.keys().cloned().collect();
    values.iter().all(|(x, &fx)| {
        values.iter().all(|(y, &fy)| {
            let inter: Set = x.intersection(y).cloned().collect();
            maximal_feasible(&domain, &inter)
                .iter()
                .all(|z| q_le(q_min(fx, fy), values[z]))
        })
    })
}

pub type Linkage = BTreeMap<(Elem, Set), Q>;

/// Full-quantifier monotonicity: every pair `X ⊆ Y`, not just covers.
pub fn monotone_full(ground: &[Elem], pi: &Linkage) -> bool {
    let subsets = power_set(ground);
    ground.iter().all(|e| {
        subsets.iter().all(|x| {
            subsets
                .iter()
                .filter(|y| is_subset(x, y))
                .all(|y| q_le(pi[&(e.clone(), y.clone())], pi[&(e.clone(), x.clone())]))
        })
    })
}

/// `F(X) = min_{x ∈ Γ(X)} π(x, X)` on members of size below `k`.
pub fn extract(
    ground: &[Elem],
    family: &Family,
    k: usize,
    pi: &Linkage,
) -> Option<BTreeMap<Set, Q>> {
    let mut out = BTreeMap::new();
    for x in family.iter().filter(|x| x.len() < k) {
        let continuations = gamma(ground, family, x);
        let mut best: Option<Q> = None;
        for e in &continuations {
            let v = pi[&(e.clone(), x.clone())];
            best = Some(match best {
                None => v,
                Some(b) => q_min(b, v),
            });
        }
        out.insert(x.clone(), best?);
    }
    Some(out)
}

/// The canonical linkage by its defining formula, on every pair.
pub fn canonical_linkage(ground: &[Elem], values: &BTreeMap<Set, Q>) -> Linkage {
    let global_min = values
        .values()
        .copied()
        .reduce(q_min)
        .expect("non-empty value table");
    let mut out = Linkage::new();
    for x_set in power_set(ground) {
        for e in ground {
            let candidates: Vec<Q> = values
                .iter()
                .filter(|(a, _)| is_subset(&x_set, a) && !a.contains(e))
                .map(|(_, &v)| v)
                .collect();
            let value = if x_set.contains(e) || candidates.is_empty() {
                global_min
            } else {
                candidates
                    .into_iter()
                    .reduce(|a, b| if q_le(a, b) { b } else { a })
                    .expect("non-empty candidates")
            };
            out.insert((e.clone(), x_set.clone()), value);
        }
    }
    out
}

pub fn antimatroid_count(ground: &[Elem]) -> usize {
    all_families(ground)
        .iter()
        .filter(|f| is_accessible(f) && is_union_closed(f))
        .count()
}
