use std::fmt;
use std::ops::Mul;

use ncrw_core::{format_scalar, Scalar};
use num_traits::{One, Zero};

/// Univariate polynomial over the rationals, coefficients in ascending degree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UniPoly {
    coeffs: Vec<Scalar>,
}

impl UniPoly {
    pub fn new(mut coeffs: Vec<Scalar>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn one() -> Self {
        UniPoly::new(vec![Scalar::one()])
    }

    /// `x - r`.
    pub fn linear(r: Scalar) -> Self {
        UniPoly::new(vec![-r, Scalar::one()])
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// `p(x²)`.
    pub fn in_square(&self) -> Self {
        let mut out = vec![Scalar::zero(); (2 * self.coeffs.len()).saturating_sub(1)];
        for (i, c) in self.coeffs.iter().enumerate() {
            out[2 * i] = c.clone();
        }
        UniPoly::new(out)
    }

    pub fn eval(&self, x: &Scalar) -> Scalar {
        self.coeffs.iter().rev().fold(Scalar::zero(), |acc, c| acc * x + c)
    }

    /// Multiplicity of `r` as a root.
    pub fn root_multiplicity(&self, r: &Scalar) -> usize {
        let mut p = self.coeffs.clone();
        let mut m = 0;
        while !p.is_empty() && UniPoly::new(p.clone()).eval(r).is_zero() {
            // Synthetic division by (x - r).
            let mut q = vec![Scalar::zero(); p.len() - 1];
            let mut carry = Scalar::zero();
            for i in (0..p.len()).rev() {
                let v = &p[i] + &carry * r;
                if i > 0 {
                    q[i - 1] = v.clone();
                }
                carry = v;
            }
            p = q;
            m += 1;
        }
        m
    }
}

impl Mul for &UniPoly {
    type Output = UniPoly;
    fn mul(self, o: &UniPoly) -> UniPoly {
        if self.coeffs.is_empty() || o.coeffs.is_empty() {
            return UniPoly::new(Vec::new());
        }
        let mut out = vec![Scalar::zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in o.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        UniPoly::new(out)
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| match i {
                0 => format_scalar(c),
                1 => format!("{}x", format_scalar(c)),
                _ => format!("{}x^{i}", format_scalar(c)),
            })
            .collect();
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}
