use std::fmt;

use ncrw_core::{format_scalar, parse_scalar, Scalar};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::{HomologyError, UniPoly};

/// Dense matrix of exact rationals, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

/// `{"rows": [["1","0"],["0","3/5"]]}`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct MatrixJson {
    pub rows: Vec<Vec<String>>,
}

impl RationalMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        RationalMatrix { rows, cols, data: vec![Scalar::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = RationalMatrix::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Scalar::one();
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, f: impl Fn(usize, usize) -> Scalar) -> Self {
        let data = (0..rows).flat_map(|i| (0..cols).map(move |j| (i, j))).map(|(i, j)| f(i, j)).collect();
        RationalMatrix { rows, cols, data }
    }

    pub fn from_rows(rows: Vec<Vec<Scalar>>) -> Result<Self, HomologyError> {
        let cols = rows.first().map_or(0, |r| r.len());
        if rows.iter().any(|r| r.len() != cols) {
            return Err(HomologyError::Malformed("rows of different lengths".into()));
        }
        Ok(RationalMatrix { rows: rows.len(), cols, data: rows.into_iter().flatten().collect() })
    }

    pub fn from_i64(rows: &[&[i64]]) -> Result<Self, HomologyError> {
        RationalMatrix::from_rows(rows.iter().map(|r| r.iter().map(|&v| Scalar::from_integer(BigInt::from(v))).collect()).collect())
    }

    pub fn diagonal(entries: &[Scalar]) -> Self {
        let n = entries.len();
        RationalMatrix::from_fn(n, n, |i, j| if i == j { entries[i].clone() } else { Scalar::zero() })
    }

    /// Block-diagonal matrix from square blocks.
    pub fn block_diagonal(blocks: &[RationalMatrix]) -> Self {
        let n: usize = blocks.iter().map(|b| b.rows).sum();
        let mut m = RationalMatrix::zeros(n, n);
        let mut off = 0;
        for b in blocks {
            for i in 0..b.rows {
                for j in 0..b.cols {
                    m[(off + i, off + j)] = b[(i, j)].clone();
                }
            }
            off += b.rows;
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn transpose(&self) -> Self {
        RationalMatrix::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    pub fn mul(&self, o: &RationalMatrix) -> Result<Self, HomologyError> {
        if self.cols != o.rows {
            return Err(HomologyError::SizeMismatch(format!("{}x{} times {}x{}", self.rows, self.cols, o.rows, o.cols)));
        }
        let mut out = RationalMatrix::zeros(self.rows, o.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..o.cols {
                    let b = &o[(k, j)];
                    if !b.is_zero() {
                        out.data[i * o.cols + j] += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    fn zip(&self, o: &RationalMatrix, f: impl Fn(&Scalar, &Scalar) -> Scalar) -> Result<Self, HomologyError> {
        if (self.rows, self.cols) != (o.rows, o.cols) {
            return Err(HomologyError::SizeMismatch(format!("{}x{} and {}x{}", self.rows, self.cols, o.rows, o.cols)));
        }
        Ok(RationalMatrix { rows: self.rows, cols: self.cols, data: self.data.iter().zip(&o.data).map(|(a, b)| f(a, b)).collect() })
    }

    pub fn add(&self, o: &RationalMatrix) -> Result<Self, HomologyError> {
        self.zip(o, |a, b| a + b)
    }

    pub fn sub(&self, o: &RationalMatrix) -> Result<Self, HomologyError> {
        self.zip(o, |a, b| a - b)
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        RationalMatrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|a| a * c).collect() }
    }

    pub fn neg(&self) -> Self {
        self.scale(&-Scalar::one())
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|a| a.is_zero())
    }

    /// `(X ⊗ Y)[(p,q),(r,s)] = x[p,r] y[q,s]`.
    pub fn kron(&self, o: &RationalMatrix) -> Self {
        RationalMatrix::from_fn(self.rows * o.rows, self.cols * o.cols, |i, j| {
            &self[(i / o.rows, j / o.cols)] * &o[(i % o.rows, j % o.cols)]
        })
    }

    pub fn trace(&self) -> Scalar {
        (0..self.rows.min(self.cols)).fold(Scalar::zero(), |acc, i| acc + &self[(i, i)])
    }

    /// Exact check `M M^t = M^t M = id`.
    pub fn is_orthogonal(&self) -> bool {
        if !self.is_square() {
            return false;
        }
        let id = RationalMatrix::identity(self.rows);
        let t = self.transpose();
        self.mul(&t).is_ok_and(|p| p == id) && t.mul(self).is_ok_and(|p| p == id)
    }

    /// Rank over the rationals. Rows are cleared to integers and reduced by
    /// fraction-free (Bareiss) elimination.
    pub fn rank(&self) -> usize {
        let mut a: Vec<Vec<BigInt>> = (0..self.rows)
            .map(|i| {
                let row = self.row(i);
                let l = row.iter().fold(BigInt::one(), |acc, v| acc.lcm(v.denom()));
                row.iter().map(|v| (v * Scalar::from_integer(l.clone())).to_integer()).collect()
            })
            .collect();
        let (m, n) = (self.rows, self.cols);
        let mut rank = 0;
        let mut prev = BigInt::one();
        for col in 0..n {
            if rank == m {
                break;
            }
            let Some(p) = (rank..m).find(|&r| !a[r][col].is_zero()) else { continue };
            a.swap(rank, p);
            for r in rank + 1..m {
                for c in col + 1..n {
                    let v = &a[rank][col] * &a[r][c] - &a[r][col] * &a[rank][c];
                    a[r][c] = v / &prev;
                }
                a[r][col] = BigInt::zero();
            }
            prev = a[rank][col].clone();
            rank += 1;
        }
        rank
    }

    /// Inverse by Gauss-Jordan elimination, or `None` when singular.
    pub fn inverse(&self) -> Option<Self> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        let mut a = self.clone();
        let mut inv = RationalMatrix::identity(n);
        for col in 0..n {
            let p = (col..n).find(|&r| !a[(r, col)].is_zero())?;
            a.swap_rows(col, p);
            inv.swap_rows(col, p);
            let piv = a[(col, col)].clone();
            for j in 0..n {
                a[(col, j)] = &a[(col, j)] / &piv;
                inv[(col, j)] = &inv[(col, j)] / &piv;
            }
            for r in 0..n {
                if r != col && !a[(r, col)].is_zero() {
                    let f = a[(r, col)].clone();
                    for j in 0..n {
                        let (x, y) = (&a[(col, j)] * &f, &inv[(col, j)] * &f);
                        a[(r, j)] -= x;
                        inv[(r, j)] -= y;
                    }
                }
            }
        }
        Some(inv)
    }

    fn swap_rows(&mut self, i: usize, j: usize) {
        if i != j {
            for c in 0..self.cols {
                self.data.swap(i * self.cols + c, j * self.cols + c);
            }
        }
    }

    /// Characteristic polynomial `det(x·id - M)` by the Faddeev-LeVerrier recursion.
    pub fn charpoly(&self) -> Result<UniPoly, HomologyError> {
        if !self.is_square() {
            return Err(HomologyError::NotSquare(self.rows, self.cols));
        }
        let n = self.rows;
        let mut coeffs = vec![Scalar::zero(); n + 1];
        coeffs[n] = Scalar::one();
        let mut m = RationalMatrix::zeros(n, n);
        for k in 1..=n {
            let mut next = self.mul(&m)?;
            for i in 0..n {
                next[(i, i)] += &coeffs[n - k + 1];
            }
            let am = self.mul(&next)?;
            coeffs[n - k] = -am.trace() / Scalar::from_integer(BigInt::from(k));
            m = next;
        }
        Ok(UniPoly::new(coeffs))
    }

    pub fn to_json(&self) -> MatrixJson {
        MatrixJson { rows: (0..self.rows).map(|i| self.row(i).iter().map(format_scalar).collect()).collect() }
    }

    pub fn from_json(j: &MatrixJson) -> Result<Self, HomologyError> {
        let rows = j
            .rows
            .iter()
            .map(|r| r.iter().map(|s| parse_scalar(s).map_err(|e| HomologyError::Malformed(e.to_string()))).collect())
            .collect::<Result<Vec<Vec<Scalar>>, _>>()?;
        RationalMatrix::from_rows(rows)
    }
}

impl std::ops::Index<(usize, usize)> for RationalMatrix {
    type Output = Scalar;
    fn index(&self, (i, j): (usize, usize)) -> &Scalar {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for RationalMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Scalar {
        &mut self.data[i * self.cols + j]
    }
}

impl fmt::Display for RationalMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(format_scalar).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}
