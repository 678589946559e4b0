use ncrw_core::Scalar;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::{HomologyError, RationalMatrix};

/// `D_Ψ[(p,q),(r,s)] = δ(q,r) ψ[p,s]`: row `(p,q)` carries the row `ψ[p,·]` in column
/// block `q`. Indices `(p,q)` map to `(p-1)n + q`.
pub fn build_d(psi: &RationalMatrix) -> Result<RationalMatrix, HomologyError> {
    let n = square(psi)?;
    let mut d = RationalMatrix::zeros(n * n, n * n);
    for p in 0..n {
        for q in 0..n {
            for s in 0..n {
                d[(p * n + q, q * n + s)] = psi[(p, s)].clone();
            }
        }
    }
    Ok(d)
}

/// `L_Λ = diag(Λ, ..., Λ)`, i.e. `L_Λ[(p,q),(r,s)] = δ(p,r) λ[q,s]`.
pub fn build_l(lambda: &RationalMatrix) -> Result<RationalMatrix, HomologyError> {
    let n = square(lambda)?;
    Ok(RationalMatrix::block_diagonal(&vec![lambda.clone(); n]))
}

fn square(m: &RationalMatrix) -> Result<usize, HomologyError> {
    if m.is_square() {
        Ok(m.rows())
    } else {
        Err(HomologyError::NotSquare(m.rows(), m.cols()))
    }
}

/// Sign of the trace term in `Φ3*`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Phi3Sign {
    /// Coefficient `δ(p,q) - (ΩΛ^t)[p,q]` at `f[p,q]`, the image of `Φ3`.
    #[default]
    Minus,
    /// Coefficient `δ(p,q) + (ΩΛ^t)[p,q]`, the variant obtained by dropping the sign.
    Plus,
}

/// The maps of the complex `K ← K^{n²} ← K^{n²} ← K` for the pair `(Λ, Ω)`.
///
/// * `m1` (1 × n²): coefficient `ω[p,q] - λ[p,q]` of `Φ1*(e[p,q])`
/// * `m2` (n² × n²): row `(p,q)` is `Φ2*(f[p,q]) = Σ_i (ω[p,i] e[q,i] + λ[q,i] e[p,i])`,
///   so `m2 = L_Λ + D_Ω`
/// * `m3` (n² × 1): coefficient of `f[p,q]` in `Φ3*(f)`
#[derive(Debug, Clone)]
pub struct PhiStars {
    pub n: usize,
    pub m1: RationalMatrix,
    pub m2: RationalMatrix,
    pub m3: RationalMatrix,
}

fn check_pair(lambda: &RationalMatrix, omega: &RationalMatrix) -> Result<usize, HomologyError> {
    let n = square(lambda)?;
    if square(omega)? != n {
        return Err(HomologyError::SizeMismatch(format!("Λ is {n}x{n}, Ω is {}x{}", omega.rows(), omega.cols())));
    }
    for (name, m) in [("Λ", lambda), ("Ω", omega)] {
        if !m.is_orthogonal() {
            return Err(HomologyError::NotOrthogonal(name.into()));
        }
    }
    Ok(n)
}

impl PhiStars {
    pub fn build(lambda: &RationalMatrix, omega: &RationalMatrix, sign: Phi3Sign) -> Result<PhiStars, HomologyError> {
        let n = check_pair(lambda, omega)?;
        let m1 = RationalMatrix::from_fn(1, n * n, |_, k| &omega[(k / n, k % n)] - &lambda[(k / n, k % n)]);
        let m2 = build_l(lambda)?.add(&build_d(omega)?)?;
        let ol = omega.mul(&lambda.transpose())?;
        let m3 = RationalMatrix::from_fn(n * n, 1, |k, _| {
            let (p, q) = (k / n, k % n);
            let d = if p == q { Scalar::one() } else { Scalar::zero() };
            match sign {
                Phi3Sign::Minus => d - &ol[(p, q)],
                Phi3Sign::Plus => d + &ol[(p, q)],
            }
        });
        Ok(PhiStars { n, m1, m2, m3 })
    }

    pub fn ranks(&self) -> [usize; 3] {
        [self.m1.rank(), self.m2.rank(), self.m3.rank()]
    }

    /// `Φ1* ∘ Φ2* = 0` and `Φ2* ∘ Φ3* = 0`.
    pub fn is_complex(&self) -> bool {
        let a = self.m2.mul(&self.m1.transpose()).map(|m| m.is_zero()).unwrap_or(false);
        let b = self.m3.transpose().mul(&self.m2).map(|m| m.is_zero()).unwrap_or(false);
        a && b
    }

    /// The dual maps of the cohomology complex, each the transpose of its homology
    /// counterpart: `Φ1^*` (n² × 1), `Φ2^*` (n² × n²), `Φ3^*` (1 × n²).
    pub fn ext_matrices(lambda: &RationalMatrix, omega: &RationalMatrix, sign: Phi3Sign) -> Result<[RationalMatrix; 3], HomologyError> {
        let n = check_pair(lambda, omega)?;
        // Φ2^*(ē[p,q]) = Σ_x ω[x,q] f̄[x,p] + Σ_y λ[y,q] f̄[p,y], row (p,q), column (x,y).
        let mut e2 = RationalMatrix::zeros(n * n, n * n);
        for p in 0..n {
            for q in 0..n {
                for x in 0..n {
                    e2[(p * n + q, x * n + p)] += &omega[(x, q)];
                    e2[(p * n + q, p * n + x)] += &lambda[(x, q)];
                }
            }
        }
        let e1 = RationalMatrix::from_fn(n * n, 1, |k, _| &omega[(k / n, k % n)] - &lambda[(k / n, k % n)]);
        // Φ3^*(f̄[p,q]) = (δ(p,q) ∓ Σ_i λ[q,i] ω[p,i]) f̄.
        let e3 = RationalMatrix::from_fn(1, n * n, |_, k| {
            let (p, q) = (k / n, k % n);
            let s = (0..n).fold(Scalar::zero(), |acc, i| acc + &lambda[(q, i)] * &omega[(p, i)]);
            let d = if p == q { Scalar::one() } else { Scalar::zero() };
            match sign {
                Phi3Sign::Minus => d - s,
                Phi3Sign::Plus => d + s,
            }
        });
        Ok([e1, e2, e3])
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HomologyDims {
    pub hh: [i64; 4],
    pub ranks: [usize; 3],
}

impl HomologyDims {
    fn from_ranks(n: usize, ranks: [usize; 3]) -> Self {
        let n2 = (n * n) as i64;
        let [r1, r2, r3] = ranks.map(|r| r as i64);
        HomologyDims { hh: [1 - r1, n2 - r1 - r2, n2 - r2 - r3, 1 - r3], ranks }
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.hh[0] - self.hh[1] + self.hh[2] - self.hh[3]
    }
}

/// Homology dimensions `ℋℋ_0..ℋℋ_3` from exact ranks of `Φ1*, Φ2*, Φ3*`.
pub fn hh_dims(lambda: &RationalMatrix, omega: &RationalMatrix, sign: Phi3Sign) -> Result<HomologyDims, HomologyError> {
    let phi = PhiStars::build(lambda, omega, sign)?;
    Ok(HomologyDims::from_ranks(phi.n, phi.ranks()))
}

/// Cohomology dimensions from the dual maps built with `sign`. Fails with
/// `RankMismatch` if a dual rank differs from the rank of the homology map with the
/// default sign.
pub fn ext_dims(lambda: &RationalMatrix, omega: &RationalMatrix, sign: Phi3Sign) -> Result<HomologyDims, HomologyError> {
    let phi = PhiStars::build(lambda, omega, Phi3Sign::Minus)?;
    let tor = phi.ranks();
    let ext = PhiStars::ext_matrices(lambda, omega, sign)?;
    for (i, m) in ext.iter().enumerate() {
        let r = m.rank();
        if r != tor[i] {
            return Err(HomologyError::RankMismatch { map: i + 1, tor: tor[i], ext: r });
        }
    }
    Ok(HomologyDims::from_ranks(phi.n, tor))
}
