use ncrw_core::Scalar;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::{HomologyError, RationalMatrix};

/// A diagonal block of a block-structured orthogonal matrix.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Block {
    /// `[1]`
    Plus,
    /// `[-1]`
    Minus,
    /// `[[c, -s], [s, c]]` with `c² + s² = 1`
    Rotation,
    /// `[[c, s], [s, -c]]` with `c² + s² = 1`
    Reflection,
}

impl Block {
    pub fn size(self) -> usize {
        match self {
            Block::Plus | Block::Minus => 1,
            Block::Rotation | Block::Reflection => 2,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct KValues {
    /// Multiplicity of the eigenvalue `-1`.
    pub k_minus1: usize,
    /// Number of unordered eigenvalue pairs whose product is exactly `1`.
    pub k_lambda: usize,
}

impl KValues {
    pub fn total(&self) -> usize {
        self.k_minus1 + self.k_lambda
    }
}

/// Eigenvalues as `(re, im)` pairs read off the declared blocks, after checking
/// that `psi` has exactly that shape.
fn eigenvalues(psi: &RationalMatrix, blocks: &[Block]) -> Result<Vec<(Scalar, Scalar)>, HomologyError> {
    let n = psi.rows();
    if !psi.is_square() {
        return Err(HomologyError::NotSquare(psi.rows(), psi.cols()));
    }
    let declared: usize = blocks.iter().map(|b| b.size()).sum();
    if declared != n {
        return Err(HomologyError::UnsupportedSpectrum(format!("blocks cover {declared} rows, matrix has {n}")));
    }
    let bad = |i: usize, b: Block| HomologyError::UnsupportedSpectrum(format!("block {b:?} at row {} does not match", i + 1));
    let (zero, one) = (Scalar::zero(), Scalar::one());
    let mut ev = Vec::with_capacity(n);
    let mut start = 0;
    for &b in blocks {
        let end = start + b.size();
        for i in start..end {
            for j in (0..n).filter(|j| !(start..end).contains(j)) {
                if !psi[(i, j)].is_zero() || !psi[(j, i)].is_zero() {
                    return Err(bad(start, b));
                }
            }
        }
        match b {
            Block::Plus | Block::Minus => {
                let v = if b == Block::Plus { one.clone() } else { -one.clone() };
                if psi[(start, start)] != v {
                    return Err(bad(start, b));
                }
                ev.push((v, zero.clone()));
            }
            Block::Rotation | Block::Reflection => {
                let (c, s) = (psi[(start, start)].clone(), psi[(start + 1, start)].clone());
                let sign = if b == Block::Rotation { -one.clone() } else { one.clone() };
                let ok = psi[(start, start + 1)] == &s * &sign
                    && psi[(start + 1, start + 1)] == if b == Block::Rotation { c.clone() } else { -c.clone() }
                    && &c * &c + &s * &s == one;
                if !ok {
                    return Err(bad(start, b));
                }
                if b == Block::Rotation {
                    ev.push((c.clone(), s.clone()));
                    ev.push((c, -s));
                } else {
                    ev.push((one.clone(), zero.clone()));
                    ev.push((-one.clone(), zero.clone()));
                }
            }
        }
        start = end;
    }
    Ok(ev)
}

/// `k₋₁` and `k_Λ` for a block-structured orthogonal `psi` (typically `ΩΛ^t`).
pub fn k_values(psi: &RationalMatrix, blocks: &[Block]) -> Result<KValues, HomologyError> {
    let ev = eigenvalues(psi, blocks)?;
    let minus_one = (-Scalar::one(), Scalar::zero());
    let k_minus1 = ev.iter().filter(|e| **e == minus_one).count();
    let mut k_lambda = 0;
    for i in 0..ev.len() {
        for j in 0..i {
            let (a, b) = &ev[i];
            let (c, d) = &ev[j];
            if a * c - b * d == Scalar::one() && (a * d + b * c).is_zero() {
                k_lambda += 1;
            }
        }
    }
    Ok(KValues { k_minus1, k_lambda })
}
