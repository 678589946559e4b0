//! The four-term free bimodule resolution of `A_o(n)`: the maps `Φ0..Φ3`, the rule
//! systems of the three graph stages, their weak-completeness checks, the scripted
//! containment identities and the kernel generators.

mod alphabets;
mod containment;
mod error;
mod kernel;
mod maps;
mod matrix;
mod stages;

pub use alphabets::{stage_alphabet, universal_alphabet, StageLetters};
pub use containment::{containment_check, ContainmentResult};
pub use error::ResolutionError;
pub use kernel::{stage_kernel, KernelMatch};
pub use maps::{compose_zero, phi_image, stage_graph_map, CompositionReport};
pub use matrix::PolyMatrix;
pub use stages::{expected_families, stage_system, stage_system_unchecked, verify_stage, ResolutionStage, StageReport};
