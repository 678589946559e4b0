//! Word rewriting on the free algebra.
//!
//! A [`RewriteSystem`] holds rules `lhs -> rhs` (lhs a word, rhs a polynomial)
//! that are strictly decreasing under a certified ordering. The crate computes
//! normal forms, minimal overlaps, completeness reports, Knuth-Bendix completion,
//! ideal membership, and the module-extended variants in [`modext`].

mod completion;
mod error;
pub mod json;
pub mod modext;
mod normal;
mod overlap;
mod system;

pub use completion::{ideal_member, knuth_bendix, knuth_bendix_filtered, orient_relation, Completion};
pub use error::RewriteError;
pub use normal::{ReductionStep, ReductionTrace};
pub use overlap::{Failure, Overlap, OverlapKind, Resolution, VerifyReport};
pub use system::{RewriteSystem, Rule};

/// Default bound on elementary rewrite steps per normal-form computation.
pub const DEFAULT_STEP_LIMIT: u64 = 1_000_000;
