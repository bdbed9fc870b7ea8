//! Quasi-concave set functions, monotone linkage functions, and the duality
//! between them.
//!
//! A set function `F` on the members of size at most `k−1` of a k-truncated
//! antimatroid is quasi-concave exactly when it is the minimum of some
//! monotone linkage function over feasible continuations. The canonical
//! linkage [`build_canonical_linkage`] realizes the representation and is the
//! least element — the null — of the semilattice of all linkages representing
//! `F` under the pointwise-minimum meet.

mod function;
mod linkage;
mod ops;

pub use function::{QuasiConcavityViolation, SetFunction};
pub use linkage::{example_linkage, LinkageFunction, MonotonicityViolation};
pub use ops::{
    build_canonical_linkage, certify_representation, dominates_canonical, extend_to_maximal,
    extract_on_family, extract_set_function, interval_argmax, interval_argmax_all, represents,
    RepresentationCertificate,
};
