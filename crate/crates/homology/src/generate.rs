use ncrw_core::scalar::ratio;
use ncrw_core::Scalar;
use num_traits::One;
use rand::seq::SliceRandom;
use rand::Rng;

use crate::{Block, RationalMatrix};

/// The rotation `[[a/c, -b/c], [b/c, a/c]]`. Requires `a² + b² = c²`, `c ≠ 0`.
pub fn rotation(a: i64, b: i64, c: i64) -> RationalMatrix {
    assert!(c != 0 && a * a + b * b == c * c, "({a}, {b}, {c}) is not a Pythagorean triple");
    let (x, y) = (ratio(a, c), ratio(b, c));
    RationalMatrix::from_rows(vec![vec![x.clone(), -y.clone()], vec![y, x]]).expect("2x2")
}

/// A random rational point `(c, s)` on the unit circle with `s ≠ 0`.
fn random_angle<R: Rng>(rng: &mut R) -> (Scalar, Scalar) {
    let m: i64 = rng.gen_range(2..=5);
    let k: i64 = rng.gen_range(1..m);
    let (mut a, mut b, c) = (m * m - k * k, 2 * m * k, m * m + k * k);
    if rng.gen_bool(0.5) {
        std::mem::swap(&mut a, &mut b);
    }
    if rng.gen_bool(0.5) {
        a = -a;
    }
    if rng.gen_bool(0.5) {
        b = -b;
    }
    (ratio(a, c), ratio(b, c))
}

/// Random block-diagonal orthogonal matrix of size `n` together with its block
/// structure. Rotation blocks use Pythagorean angles.
pub fn rotation_block_matrix<R: Rng>(n: usize, rng: &mut R) -> (RationalMatrix, Vec<Block>) {
    let mut blocks = Vec::new();
    let mut mats = Vec::new();
    let mut left = n;
    while left > 0 {
        let b = match (left, rng.gen_range(0..4)) {
            (1, r) if r < 2 => Block::Plus,
            (1, _) => Block::Minus,
            (_, 0) => Block::Plus,
            (_, 1) => Block::Minus,
            (_, 2) => Block::Rotation,
            _ => Block::Reflection,
        };
        let m = match b {
            Block::Plus => RationalMatrix::identity(1),
            Block::Minus => RationalMatrix::identity(1).neg(),
            Block::Rotation | Block::Reflection => {
                let (c, s) = random_angle(rng);
                let rows = if b == Block::Rotation {
                    vec![vec![c.clone(), -s.clone()], vec![s, c]]
                } else {
                    vec![vec![c.clone(), s.clone()], vec![s, -c]]
                };
                RationalMatrix::from_rows(rows).expect("2x2")
            }
        };
        left -= b.size();
        blocks.push(b);
        mats.push(m);
    }
    (RationalMatrix::block_diagonal(&mats), blocks)
}

/// Random orthogonal matrix: a product of Pythagorean Givens rotations in random
/// coordinate planes, a random sign diagonal and a random permutation.
pub fn random_orthogonal<R: Rng>(n: usize, rng: &mut R) -> RationalMatrix {
    let mut m = RationalMatrix::identity(n);
    if n >= 2 {
        for _ in 0..n {
            let i = rng.gen_range(0..n);
            let mut j = rng.gen_range(0..n - 1);
            if j >= i {
                j += 1;
            }
            let (c, s) = random_angle(rng);
            let mut g = RationalMatrix::identity(n);
            g[(i, i)] = c.clone();
            g[(j, j)] = c;
            g[(i, j)] = -s.clone();
            g[(j, i)] = s;
            m = m.mul(&g).expect("square");
        }
    }
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(rng);
    let signs: Vec<bool> = (0..n).map(|_| rng.gen_bool(0.5)).collect();
    RationalMatrix::from_fn(n, n, |i, j| {
        let v = m[(perm[i], j)].clone();
        if signs[i] {
            -v
        } else {
            v
        }
    })
}

/// Random upper-triangular Jordan-form matrix of the given size. Eigenvalues are
/// small rationals, repeated with some probability, and a `1` is placed above the
/// diagonal between equal neighbours with probability one half.
pub fn random_jordan<R: Rng>(size: usize, rng: &mut R) -> RationalMatrix {
    let mut diag: Vec<Scalar> = Vec::with_capacity(size);
    for i in 0..size {
        if i > 0 && rng.gen_bool(0.4) {
            diag.push(diag[i - 1].clone());
        } else {
            diag.push(ratio(rng.gen_range(-4..=4), rng.gen_range(1..=3)));
        }
    }
    let mut j = RationalMatrix::diagonal(&diag);
    for i in 1..size {
        if diag[i] == diag[i - 1] && rng.gen_bool(0.5) {
            j[(i - 1, i)] = Scalar::one();
        }
    }
    j
}
