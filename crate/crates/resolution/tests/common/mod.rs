//! Evaluation oracle: a pair of one-dimensional representations of the algebra given
//! by rational orthogonal matrices `O` (left) and `P` (right). A word `u m v` with one
//! module letter `m` maps to `ρ_O(u) ρ_P(v)` times `m`. This never uses rewriting.

#![allow(dead_code)]

use std::collections::BTreeMap;

use ncrw_core::scalar::{int, ratio};
use ncrw_core::{Alphabet, LetterId, LetterKind, Polynomial, Scalar};
use num_traits::{One, Zero};

pub type Mat = Vec<Vec<Scalar>>;

pub fn identity(n: usize) -> Mat {
    (0..n).map(|i| (0..n).map(|j| if i == j { Scalar::one() } else { Scalar::zero() }).collect()).collect()
}

fn mul(a: &Mat, b: &Mat) -> Mat {
    let n = a.len();
    (0..n).map(|i| (0..n).map(|j| (0..n).fold(Scalar::zero(), |acc, k| acc + &a[i][k] * &b[k][j])).collect()).collect()
}

/// Pythagorean triples `(a, b, c)` with `a² + b² = c²`.
const TRIPLES: [(i64, i64, i64); 4] = [(3, 4, 5), (5, 12, 13), (8, 15, 17), (7, 24, 25)];

/// A product of rational plane rotations and sign flips, driven by `seed`.
pub fn orthogonal(n: usize, seed: &[u8]) -> Mat {
    let mut m = identity(n);
    for (k, &s) in seed.iter().enumerate() {
        let (a, b, c) = TRIPLES[s as usize % TRIPLES.len()];
        let i = k % n;
        let j = (i + 1 + (s as usize / 4) % (n - 1).max(1)) % n;
        let mut g = identity(n);
        if i != j {
            g[i][i] = ratio(a, c);
            g[j][j] = ratio(a, c);
            g[i][j] = ratio(-b, c);
            g[j][i] = ratio(b, c);
        }
        if s % 2 == 1 {
            for x in g[i].iter_mut() {
                *x = -x.clone();
            }
        }
        m = mul(&m, &g);
    }
    m
}

pub fn is_orthogonal(m: &Mat) -> bool {
    let n = m.len();
    (0..n).all(|i| (0..n).all(|j| (0..n).fold(Scalar::zero(), |acc, k| acc + &m[i][k] * &m[j][k]) == if i == j { int(1) } else { int(0) }))
}

fn value(alphabet: &Alphabet, id: LetterId, m: &Mat) -> Scalar {
    let l = alphabet.letter(id);
    m[l.indices[0] as usize - 1][l.indices[1] as usize - 1].clone()
}

/// Image of a polynomial whose words each carry exactly one module letter.
pub fn eval(p: &Polynomial, alphabet: &Alphabet, left: &Mat, right: &Mat) -> BTreeMap<LetterId, Scalar> {
    let mut out: BTreeMap<LetterId, Scalar> = BTreeMap::new();
    for (w, c) in p.terms() {
        let letters: Vec<LetterId> = w.iter().collect();
        let pos: Vec<usize> = (0..letters.len()).filter(|&i| alphabet.letter(letters[i]).kind != LetterKind::Algebra).collect();
        assert_eq!(pos.len(), 1, "word {} is not of module degree one", alphabet.render_word(w));
        let m = pos[0];
        let mut v = c.clone();
        for &l in &letters[..m] {
            v *= value(alphabet, l, left);
        }
        for &l in &letters[m + 1..] {
            v *= value(alphabet, l, right);
        }
        *out.entry(letters[m]).or_insert_with(Scalar::zero) += v;
    }
    out.retain(|_, v| !v.is_zero());
    out
}

/// Image of an algebra polynomial under `ρ_O`.
pub fn eval_algebra(p: &Polynomial, alphabet: &Alphabet, m: &Mat) -> Scalar {
    p.terms().fold(Scalar::zero(), |acc, (w, c)| acc + w.iter().fold(c.clone(), |v, l| v * value(alphabet, l, m)))
}
