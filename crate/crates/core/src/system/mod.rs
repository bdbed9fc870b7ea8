//! Finite set systems over a fixed ground set: subsets as bit vectors,
//! validated families, antimatroid recognizers, and truncations.

mod family;
mod ground;
mod truncation;

pub use family::{IntervalViolation, SetFamily};
pub use ground::{GroundSet, Subset, MAX_GROUND_SIZE};
pub use truncation::TruncatedAntimatroid;
