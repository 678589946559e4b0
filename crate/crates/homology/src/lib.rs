//! Exact rational linear algebra for the homology and cohomology of one-dimensional
//! modules `K_Λ` over `A_o(n)`: the induced maps `Φ1*, Φ2*, Φ3*`, their ranks, the
//! eigenvalue bookkeeping `k₋₁, k_Λ` and the spectral identities for `D_Ψ`.

mod blocks;
mod error;
mod generate;
mod matrix;
mod phi;
mod spectral;
mod unipoly;

pub use blocks::{k_values, Block, KValues};
pub use error::HomologyError;
pub use generate::{random_jordan, random_orthogonal, rotation, rotation_block_matrix};
pub use matrix::{MatrixJson, RationalMatrix};
pub use phi::{build_d, build_l, ext_dims, hh_dims, HomologyDims, Phi3Sign, PhiStars};
pub use spectral::{charpoly_identity_check, intertwine_check, wedge2};
pub use unipoly::UniPoly;
