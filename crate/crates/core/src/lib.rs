//! Antimatroids as finite set systems, and the duality between quasi-concave
//! set functions and monotone linkage functions.
//!
//! The crate has three layers:
//!
//! - [`system`]: ground sets, bit-vector subsets, validated set families with
//!   the antimatroid recognizers (accessibility, exchange, union-closure,
//!   interval property), ranks, truncations, continuations, bases, and the
//!   semilattice meet.
//! - [`duality`]: exact-valued set functions and linkage functions, with
//!   extraction of a set function from a monotone linkage (minimum over
//!   feasible continuations), the canonical linkage built back from a set
//!   function (maxima over feasible intervals), representation and dominance
//!   checks, and pointwise meets of linkages.
//! - [`lab`]: exhaustive and seeded-random instance generators plus one
//!   verification suite per theorem, producing machine-readable reports.
//!
//! Everything is exact: function values are rationals compared by
//! cross-multiplication, and all verdicts are equalities or inequalities of
//! those values. All types are immutable after validation and every operation
//! is a pure function of its inputs, so values can be shared freely across
//! threads.

pub mod duality;
pub mod error;
pub mod io;
pub mod lab;
pub mod rational;
pub mod system;

pub use error::{Error, Result};
pub use rational::Rational;
pub use system::{GroundSet, IntervalViolation, SetFamily, Subset, TruncatedAntimatroid};
