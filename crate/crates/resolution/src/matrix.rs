use ncrw_core::Polynomial;

/// A square matrix of free-algebra elements, for the generic matrices `A`, `E`, `F`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolyMatrix {
    pub entries: Vec<Vec<Polynomial>>,
}

impl PolyMatrix {
    pub fn from_fn(n: usize, f: impl Fn(usize, usize) -> Polynomial) -> Self {
        PolyMatrix { entries: (1..=n).map(|i| (1..=n).map(|j| f(i, j)).collect()).collect() }
    }

    pub fn n(&self) -> usize {
        self.entries.len()
    }

    /// Entry `(i, j)`, 1-based.
    pub fn at(&self, i: usize, j: usize) -> &Polynomial {
        &self.entries[i - 1][j - 1]
    }

    /// Entrywise transpose; products inside entries keep their letter order.
    pub fn t(&self) -> Self {
        PolyMatrix::from_fn(self.n(), |i, j| self.at(j, i).clone())
    }

    pub fn mul(&self, o: &PolyMatrix) -> Self {
        let n = self.n();
        PolyMatrix::from_fn(n, |i, j| (1..=n).fold(Polynomial::zero(), |acc, k| acc + self.at(i, k) * o.at(k, j)))
    }

    pub fn add(&self, o: &PolyMatrix) -> Self {
        PolyMatrix::from_fn(self.n(), |i, j| self.at(i, j) + o.at(i, j))
    }

    pub fn sub(&self, o: &PolyMatrix) -> Self {
        PolyMatrix::from_fn(self.n(), |i, j| self.at(i, j) - o.at(i, j))
    }

    pub fn neg(&self) -> Self {
        PolyMatrix::from_fn(self.n(), |i, j| -self.at(i, j).clone())
    }

    /// Multiplies every entry by `p` on the left.
    pub fn lmul(&self, p: &Polynomial) -> Self {
        PolyMatrix::from_fn(self.n(), |i, j| p * self.at(i, j))
    }

    /// Multiplies every entry by `p` on the right.
    pub fn rmul(&self, p: &Polynomial) -> Self {
        PolyMatrix::from_fn(self.n(), |i, j| self.at(i, j) * p)
    }

    pub fn trace(&self) -> Polynomial {
        (1..=self.n()).fold(Polynomial::zero(), |acc, i| acc + self.at(i, i).clone())
    }
}
