//! Ground sets and bit-vector subsets.
//!
//! A [`GroundSet`] fixes an ordered list of element labels; element `i` in
//! declaration order is bit `i` of every [`Subset`] mask over that ground set.
//! Ground sets are capped at 16 elements so that full linkage tables
//! (`n * 2^n` entries) and subset sweeps stay tractable.

use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use crate::error::{Error, Result};

pub const MAX_GROUND_SIZE: usize = 16;

#[derive(Debug)]
struct GroundInner {
    labels: Vec<String>,
}

/// An ordered set of distinct element labels. Cheap to clone.
#[derive(Clone, Debug)]
pub struct GroundSet {
    inner: Arc<GroundInner>,
}

impl GroundSet {
    pub fn new<I, S>(labels: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        if labels.is_empty() {
            return Err(Error::InvalidGroundSet("no elements".into()));
        }
        if labels.len() > MAX_GROUND_SIZE {
            return Err(Error::InvalidGroundSet(format!(
                "{} elements exceed the maximum of {MAX_GROUND_SIZE}",
                labels.len()
            )));
        }
        for (i, label) in labels.iter().enumerate() {
            if label.is_empty() {
                return Err(Error::InvalidGroundSet(format!(
                    "element {i} has an empty label"
                )));
            }
            if labels[..i].contains(label) {
                return Err(Error::InvalidGroundSet(format!(
                    "duplicate label {label:?}"
                )));
            }
        }
        Ok(Self {
            inner: Arc::new(GroundInner { labels }),
        })
    }

    /// Ground set labeled `"1".."n"`, the convention used by generated systems.
    pub fn numeric(n: usize) -> Result<Self> {
        Self::new((1..=n).map(|i| i.to_string()))
    }

    pub fn n(&self) -> usize {
        self.inner.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.inner.labels
    }

    pub fn label(&self, index: usize) -> &str {
        &self.inner.labels[index]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.inner.labels.iter().position(|l| l == label)
    }

    pub(crate) fn full_mask(&self) -> u32 {
        ((1u64 << self.n()) - 1) as u32
    }

    pub fn empty_subset(&self) -> Subset {
        Subset {
            ground: self.clone(),
            mask: 0,
        }
    }

    pub fn full_subset(&self) -> Subset {
        Subset {
            ground: self.clone(),
            mask: self.full_mask(),
        }
    }

    /// Builds a subset from labels; unknown or repeated labels are errors.
    pub fn subset<S: AsRef<str>>(&self, labels: &[S]) -> Result<Subset> {
        let mut mask = 0u32;
        for label in labels {
            let label = label.as_ref();
            let i = self
                .index_of(label)
                .ok_or_else(|| Error::InvalidGroundSet(format!("unknown label {label:?}")))?;
            if mask & (1 << i) != 0 {
                return Err(Error::DuplicateMember(format!("{{{label}}}")));
            }
            mask |= 1 << i;
        }
        Ok(Subset {
            ground: self.clone(),
            mask,
        })
    }

    /// All `2^n` subsets in ascending mask order.
    pub fn all_subsets(&self) -> impl Iterator<Item = Subset> + '_ {
        (0..=self.full_mask()).map(move |mask| Subset {
            ground: self.clone(),
            mask,
        })
    }
}

impl PartialEq for GroundSet {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner) || self.inner.labels == other.inner.labels
    }
}

impl Eq for GroundSet {}

impl fmt::Display for GroundSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}}", self.inner.labels.join(","))
    }
}

/// A subset of one ground set, stored as a bit mask.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subset {
    ground: GroundSet,
    mask: u32,
}

impl Subset {
    pub fn from_mask(ground: &GroundSet, mask: u32) -> Result<Self> {
        if mask & !ground.full_mask() != 0 {
            return Err(Error::MaskOutOfRange {
                mask,
                n: ground.n(),
            });
        }
        Ok(Self {
            ground: ground.clone(),
            mask,
        })
    }

    pub fn ground(&self) -> &GroundSet {
        &self.ground
    }

    pub fn mask(&self) -> u32 {
        self.mask
    }

    pub fn len(&self) -> usize {
        self.mask.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.mask == 0
    }

    pub fn contains_index(&self, index: usize) -> bool {
        index < self.ground.n() && self.mask & (1 << index) != 0
    }

    /// Indices of the elements present, ascending.
    pub fn indices(&self) -> impl Iterator<Item = usize> + '_ {
        let mask = self.mask;
        (0..self.ground.n()).filter(move |i| mask & (1 << i) != 0)
    }

    pub fn labels(&self) -> Vec<&str> {
        self.indices().map(|i| self.ground.label(i)).collect()
    }

    fn check_ground(&self, other: &Subset) {
        assert!(
            self.ground == other.ground,
            "subsets over different ground sets: {} vs {}",
            self.ground,
            other.ground
        );
    }

    pub fn union(&self, other: &Subset) -> Subset {
        self.check_ground(other);
        Subset {
            ground: self.ground.clone(),
            mask: self.mask | other.mask,
        }
    }

    pub fn intersection(&self, other: &Subset) -> Subset {
        self.check_ground(other);
        Subset {
            ground: self.ground.clone(),
            mask: self.mask & other.mask,
        }
    }

    pub fn difference(&self, other: &Subset) -> Subset {
        self.check_ground(other);
        Subset {
            ground: self.ground.clone(),
            mask: self.mask & !other.mask,
        }
    }

    pub fn complement(&self) -> Subset {
        Subset {
            ground: self.ground.clone(),
            mask: self.ground.full_mask() & !self.mask,
        }
    }

    pub fn is_subset_of(&self, other: &Subset) -> bool {
        self.check_ground(other);
        self.mask & !other.mask == 0
    }

    /// `X ∪ x` for a single element index.
    pub fn with_index(&self, index: usize) -> Subset {
        assert!(index < self.ground.n(), "element index out of range");
        Subset {
            ground: self.ground.clone(),
            mask: self.mask | (1 << index),
        }
    }

    /// `X − x` for a single element index.
    pub fn without_index(&self, index: usize) -> Subset {
        assert!(index < self.ground.n(), "element index out of range");
        Subset {
            ground: self.ground.clone(),
            mask: self.mask & !(1 << index),
        }
    }

    /// Sort key giving the canonical (size, numeric mask) order.
    pub fn canonical_key(&self) -> (usize, u32) {
        (self.len(), self.mask)
    }
}

impl Hash for Subset {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.mask.hash(state);
        self.ground.labels().hash(state);
    }
}

impl fmt::Display for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}}", self.labels().join(","))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_bad_ground_sets() {
        assert!(GroundSet::new(Vec::<String>::new()).is_err());
        assert!(GroundSet::new(["1", "1"]).is_err());
        assert!(GroundSet::new(["1", ""]).is_err());
        assert!(GroundSet::numeric(17).is_err());
        assert!(GroundSet::numeric(16).is_ok());
    }

    #[test]
    fn bit_positions_follow_declaration_order() {
        let g = GroundSet::new(["b", "a", "c"]).unwrap();
        let s = g.subset(&["a", "c"]).unwrap();
        assert_eq!(s.mask(), 0b110);
        assert_eq!(s.labels(), vec!["a", "c"]);
        assert_eq!(s.to_string(), "{a,c}");
    }

    #[test]
    fn subset_algebra() {
        let g = GroundSet::numeric(4).unwrap();
        let a = g.subset(&["1", "2"]).unwrap();
        let b = g.subset(&["2", "3"]).unwrap();
        assert_eq!(a.union(&b).mask(), 0b0111);
        assert_eq!(a.intersection(&b).mask(), 0b0010);
        assert_eq!(a.difference(&b).mask(), 0b0001);
        assert_eq!(a.complement().mask(), 0b1100);
        assert!(a.intersection(&b).is_subset_of(&a));
        assert!(!a.is_subset_of(&b));
    }

    #[test]
    fn masks_outside_width_rejected() {
        let g = GroundSet::numeric(2).unwrap();
        assert!(Subset::from_mask(&g, 0b100).is_err());
        assert!(Subset::from_mask(&g, 0b11).is_ok());
    }

    #[test]
    fn grounds_with_equal_labels_are_interchangeable() {
        let g1 = GroundSet::numeric(2).unwrap();
        let g2 = GroundSet::numeric(2).unwrap();
        assert_eq!(g1, g2);
        let s1 = g1.subset(&["1"]).unwrap();
        let s2 = g2.subset(&["1"]).unwrap();
        assert_eq!(s1, s2);
        assert_eq!(s1.union(&s2).mask(), 0b01);
    }
}
