//! Shared fixtures and conversions between the library types and the naive
//! reference model.
//!
//! Each integration test target compiles this module separately and uses a
//! different slice of it.
#![allow(dead_code)]

pub mod naive;

use antimatroid::duality::LinkageFunction;
use antimatroid::{GroundSet, SetFamily, Subset};
use std::collections::BTreeMap;

pub fn ground(n: usize) -> GroundSet {
    GroundSet::numeric(n).unwrap()
}

pub fn family(n: usize, members: &[&[&str]]) -> SetFamily {
    let g = ground(n);
    let subsets: Vec<Subset> = members.iter().map(|m| g.subset(m).unwrap()).collect();
    SetFamily::from_subsets(&g, &subsets).unwrap()
}

/// `{∅, {1}, {2}, {1,2}, {1,3}, {1,2,3}}` — an antimatroid of rank 3.
pub fn family_p() -> SetFamily {
    family(
        3,
        &[
            &[],
            &["1"],
            &["2"],
            &["1", "2"],
            &["1", "3"],
            &["1", "2", "3"],
        ],
    )
}

/// `{∅, {1}, {2}, {1,2}, {1,3}, {1,2,4}, {1,3,4}}` — accessible, rank 3,
/// fails the 3-truncated interval property.
pub fn family_n() -> SetFamily {
    family(
        4,
        &[
            &[],
            &["1"],
            &["2"],
            &["1", "2"],
            &["1", "3"],
            &["1", "2", "4"],
            &["1", "3", "4"],
        ],
    )
}

pub fn boolean_family(n: usize) -> SetFamily {
    let g = ground(n);
    SetFamily::from_masks(&g, 0..=g.full_subset().mask()).unwrap()
}

pub fn to_naive_set(subset: &Subset) -> naive::Set {
    subset.labels().iter().map(|s| s.to_string()).collect()
}

pub fn to_naive_family(family: &SetFamily) -> naive::Family {
    family.members().map(|m| to_naive_set(&m)).collect()
}

pub fn to_naive_linkage(pi: &LinkageFunction) -> naive::Linkage {
    let mut out = naive::Linkage::new();
    for (x, set, value) in pi.entries() {
        out.insert(
            (pi.ground().label(x).to_string(), to_naive_set(&set)),
            (value.numerator(), value.denominator()),
        );
    }
    out
}

pub fn from_naive_family(g: &GroundSet, family: &naive::Family) -> SetFamily {
    let subsets: Vec<Subset> = family
        .iter()
        .map(|s| {
            let labels: Vec<&str> = s.iter().map(|e| e.as_str()).collect();
            g.subset(&labels).unwrap()
        })
        .collect();
    SetFamily::from_subsets(g, &subsets).unwrap()
}

pub fn naive_values(f: &antimatroid::duality::SetFunction) -> BTreeMap<naive::Set, naive::Q> {
    f.domain()
        .map(|set| {
            let v = f.value(&set).unwrap();
            (to_naive_set(&set), (v.numerator(), v.denominator()))
        })
        .collect()
}
