//! Polynomials of the free algebra: finite linear combinations of words.

use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::ordering::{CompareResult, OrderingSpec};
use crate::{Alphabet, CoreError, LetterId, Scalar, Word};

/// A free-algebra element. No word is stored with a zero coefficient.
#[derive(Debug, Clone, PartialEq, Eq, Default, Hash)]
pub struct Polynomial {
    terms: BTreeMap<Word, Scalar>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Polynomial::default()
    }

    /// The empty-word polynomial `1`.
    pub fn one() -> Self {
        Polynomial::constant(Scalar::one())
    }

    pub fn constant(c: Scalar) -> Self {
        Polynomial::term(c, Word::empty())
    }

    pub fn monomial(w: Word) -> Self {
        Polynomial::term(Scalar::one(), w)
    }

    pub fn letter(id: LetterId) -> Self {
        Polynomial::monomial(Word::from(vec![id]))
    }

    pub fn term(c: Scalar, w: Word) -> Self {
        let mut p = Polynomial::zero();
        p.add_term(w, c);
        p
    }

    pub fn from_terms<I: IntoIterator<Item = (Scalar, Word)>>(terms: I) -> Self {
        let mut p = Polynomial::zero();
        for (c, w) in terms {
            p.add_term(w, c);
        }
        p
    }

    /// Adds `c · w` in place, dropping the word if its coefficient becomes zero.
    pub fn add_term(&mut self, w: Word, c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(w) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    /// Adds `c · p` in place.
    pub fn add_scaled(&mut self, p: &Polynomial, c: &Scalar) {
        for (w, v) in &p.terms {
            self.add_term(w.clone(), v * c);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, w: &Word) -> Scalar {
        self.terms.get(w).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Word, &Scalar)> {
        self.terms.iter()
    }

    pub fn into_terms(self) -> BTreeMap<Word, Scalar> {
        self.terms
    }

    /// The support `supp{p}`.
    pub fn support(&self) -> impl Iterator<Item = &Word> {
        self.terms.keys()
    }

    pub fn scale(&self, c: &Scalar) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero();
        }
        Polynomial { terms: self.terms.iter().map(|(w, v)| (w.clone(), v * c)).collect() }
    }

    /// `p · self · s` for words `p`, `s`.
    pub fn wrap(&self, p: &[LetterId], s: &[LetterId]) -> Polynomial {
        Polynomial { terms: self.terms.iter().map(|(w, v)| (w.wrap(p, s), v.clone())).collect() }
    }

    /// Replaces letters by polynomials. Letters mapped to `None` are kept.
    pub fn substitute<F>(&self, f: F) -> Polynomial
    where
        F: Fn(LetterId) -> Option<Polynomial>,
    {
        let mut out = Polynomial::zero();
        for (w, c) in &self.terms {
            let mut acc = Polynomial::constant(c.clone());
            for id in w.iter() {
                match f(id) {
                    Some(img) => acc = &acc * &img,
                    None => acc = acc.wrap(&[], &[id]),
                }
                if acc.is_zero() {
                    break;
                }
            }
            out = out + acc;
        }
        out
    }

    /// Renames every letter through `map` (`map[old] = new`).
    pub fn map_letters(&self, map: &[LetterId]) -> Polynomial {
        Polynomial::from_terms(self.terms.iter().map(|(w, c)| (c.clone(), w.iter().map(|id| map[id as usize]).collect())))
    }

    /// The support word that is strictly greater than all others, with its coefficient.
    pub fn leading_monomial(&self, ord: &OrderingSpec) -> Result<(Word, Scalar), CoreError> {
        let mut it = self.terms.keys();
        let mut best = it.next().ok_or(CoreError::ZeroPolynomial)?;
        for w in it {
            if ord.compare(w, best) == CompareResult::Greater {
                best = w;
            }
        }
        for w in self.terms.keys() {
            if w != best && ord.compare(w, best) != CompareResult::Less {
                return Err(CoreError::NoStrictMaximum(format!("{w:?}"), format!("{best:?}")));
            }
        }
        Ok((best.clone(), self.terms[best].clone()))
    }

    /// Human-readable rendering, e.g. `-a[1,2]a[2,2] + 1`.
    pub fn render(&self, alphabet: &Alphabet) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (w, c)) in self.terms.iter().rev().enumerate() {
            let neg = c < &Scalar::zero();
            let mag = if neg { -c.clone() } else { c.clone() };
            if i == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let word = if w.is_empty() { String::new() } else { alphabet.render_word(w) };
            if mag.is_one() && !w.is_empty() {
                out.push_str(&word);
            } else {
                out.push_str(&crate::format_scalar(&mag));
                out.push_str(&word);
            }
        }
        out
    }

    /// Number of letters satisfying `pred` in each support word.
    pub fn letter_counts<F: Fn(LetterId) -> bool>(&self, pred: F) -> Vec<usize> {
        self.terms.keys().map(|w| w.iter().filter(|&l| pred(l)).count()).collect()
    }
}

impl Add for Polynomial {
    type Output = Polynomial;
    fn add(mut self, rhs: Polynomial) -> Polynomial {
        for (w, c) in rhs.terms {
            self.add_term(w, c);
        }
        self
    }
}

impl Add<&Polynomial> for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        self.clone() + rhs.clone()
    }
}

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial { terms: self.terms.into_iter().map(|(w, c)| (w, -c)).collect() }
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -self.clone()
    }
}

impl Sub for Polynomial {
    type Output = Polynomial;
    fn sub(mut self, rhs: Polynomial) -> Polynomial {
        for (w, c) in rhs.terms {
            self.add_term(w, -c);
        }
        self
    }
}

impl Sub<&Polynomial> for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self.clone() - rhs.clone()
    }
}

impl Mul<&Polynomial> for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        let mut out = Polynomial::zero();
        for (u, a) in &self.terms {
            for (v, b) in &rhs.terms {
                out.add_term(u.concat(v), a * b);
            }
        }
        out
    }
}

impl Mul for Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: Polynomial) -> Polynomial {
        &self * &rhs
    }
}
