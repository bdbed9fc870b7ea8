//! The necessity construction: a monotone linkage whose extracted function
//! fails quasi-concavity on any accessible system that is not a k-truncated
//! antimatroid.

use crate::duality::LinkageFunction;
use crate::error::{Error, Result};
use crate::rational::Rational;
use crate::system::{SetFamily, Subset};

/// The constructed linkage together with the violating triple it exploits:
/// `lower ⊂ upper` in `𝓕_{k−1}`, `element ∉ upper`, with
/// `lower ∪ element` feasible and `upper ∪ element` not.
#[derive(Clone, Debug)]
pub struct CounterexampleLinkage {
    pub linkage: LinkageFunction,
    pub lower: Subset,
    pub upper: Subset,
    pub element: usize,
}

impl CounterexampleLinkage {
    pub fn element_label(&self) -> &str {
        self.lower.ground().label(self.element)
    }
}

/// Finds a witness `(A, B, a)` against the k-truncated interval property and
/// builds the three-valued linkage
///
/// ```text
/// π(x, X) = 0  if x ∈ X
///           1  if x = a and A ⊆ X ⊆ E − a
///           2  otherwise
/// ```
///
/// which is monotone, while its extracted function has `F(A) = 1` and
/// `F(A ∪ a) = F(B) = 2`, so `F` is not quasi-concave. Systems that satisfy
/// the property give [`Error::NoViolation`] — by the truncation recognizer
/// they are k-truncated antimatroids, and every extracted function on them is
/// quasi-concave.
pub fn counterexample_linkage(family: &SetFamily, k: usize) -> Result<CounterexampleLinkage> {
    let violation = family
        .truncated_interval_violation(k)?
        .ok_or(Error::NoViolation)?;
    let a_mask = violation.lower.mask();
    let a_elem = violation.element;
    let linkage = LinkageFunction::from_fn(family.ground(), |x, set| {
        if set.contains_index(x) {
            Rational::int(0)
        } else if x == a_elem && a_mask & !set.mask() == 0 {
            Rational::int(1)
        } else {
            Rational::int(2)
        }
    });
    Ok(CounterexampleLinkage {
        linkage,
        lower: violation.lower,
        upper: violation.upper,
        element: a_elem,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::duality::extract_on_family;
    use crate::testutil::{family_n, family_p};

    #[test]
    fn family_n_yields_the_proof_witness() {
        let n = family_n();
        let ce = counterexample_linkage(&n, 3).unwrap();
        let g = n.ground();
        assert_eq!(ce.lower, g.subset(&["1"]).unwrap());
        assert_eq!(ce.upper, g.subset(&["1", "2"]).unwrap());
        assert_eq!(ce.element_label(), "3");
        assert!(ce.linkage.is_monotone());

        let f = extract_on_family(&ce.linkage, &n, 3).unwrap();
        assert_eq!(f.value(&ce.lower).unwrap(), Rational::int(1));
        assert_eq!(f.value(&ce.upper).unwrap(), Rational::int(2));
        let extended = ce.lower.with_index(ce.element);
        assert_eq!(f.value(&extended).unwrap(), Rational::int(2));
        assert!(!f.is_quasi_concave());
    }

    #[test]
    fn antimatroids_have_no_violation() {
        let p = family_p();
        assert!(matches!(
            counterexample_linkage(&p, 3),
            Err(Error::NoViolation)
        ));
    }

    #[test]
    fn out_of_range_level_propagates() {
        let p = family_p();
        assert!(matches!(
            counterexample_linkage(&p, 9),
            Err(Error::InvalidTruncationLevel { .. })
        ));
    }
}
