//! Exhaustive and randomized verification machinery: family and function
//! enumeration, seeded monotone-linkage generation, the necessity
//! counterexample construction, and one suite per theorem producing
//! machine-readable reports. This layer doubles as the brute-force oracle
//! behind the library's frozen example values.

mod counterexample;
mod enumerate;
mod random;
mod report;
mod suites;

pub use counterexample::{counterexample_linkage, CounterexampleLinkage};
pub use enumerate::{
    enumerate_families, enumerate_set_functions, integer_codomain, EnumerationSpec, FamilyClass,
    FunctionEnumeration, FUNCTION_ENUMERATION_CAP,
};
pub use random::{derive_seed, random_monotone_linkage, SplitMix64};
pub use report::{ReportFailure, ReportSpec, VerificationReport};
pub use suites::{
    suite_necessity, suite_null_dominance, suite_random_extraction, suite_recognizer_agreement,
    suite_representation_roundtrip, suite_semilattice, suite_structural, suite_worked_example,
    verify_all, VerifyOptions,
};
