//! Exact rational scalars, letters, words and free-algebra polynomials, together
//! with the word orderings used to orient rewriting rules.
//!
//! Words are stored as sequences of letter ids into an [`Alphabet`]. The alphabet's
//! array order is the letter order, greatest first: id 0 is the greatest letter.

pub mod alphabet;
pub mod error;
pub mod json;
pub mod ordering;
pub mod poly;
pub mod scalar;
pub mod word;

pub use alphabet::{Alphabet, Letter, LetterId, LetterKind, ModuleClass};
pub use error::CoreError;
pub use ordering::{CompareResult, OrderingSpec};
pub use poly::Polynomial;
pub use scalar::{format_scalar, parse_scalar, Rational, Scalar};
pub use word::Word;
