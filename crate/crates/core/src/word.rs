//! Words (monomials) over an alphabet, stored as letter ids.

use crate::LetterId;

/// A finite sequence of letters. The empty word is the identity of concatenation.
///
/// The derived `Ord` is the raw id-sequence order used only for storage; word
/// orderings live in [`crate::OrderingSpec`].
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Word(Vec<LetterId>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[LetterId] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<LetterId> {
        self.0
    }

    pub fn iter(&self) -> impl Iterator<Item = LetterId> + '_ {
        self.0.iter().copied()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = Vec::with_capacity(self.len() + other.len());
        v.extend_from_slice(&self.0);
        v.extend_from_slice(&other.0);
        Word(v)
    }

    /// `p · self · s`.
    pub fn wrap(&self, p: &[LetterId], s: &[LetterId]) -> Word {
        let mut v = Vec::with_capacity(p.len() + self.len() + s.len());
        v.extend_from_slice(p);
        v.extend_from_slice(&self.0);
        v.extend_from_slice(s);
        Word(v)
    }

    /// Replaces the factor of length `len` at `pos` by `middle`.
    pub fn splice(&self, pos: usize, len: usize, middle: &Word) -> Word {
        middle.wrap(&self.0[..pos], &self.0[pos + len..])
    }

    pub fn slice(&self, from: usize, to: usize) -> Word {
        Word(self.0[from..to].to_vec())
    }

    /// Start positions of every occurrence of `f`, left to right (overlapping ones included).
    pub fn occurrences(&self, f: &Word) -> Vec<usize> {
        if f.is_empty() || f.len() > self.len() {
            return Vec::new();
        }
        (0..=self.len() - f.len()).filter(|&i| self.0[i..i + f.len()] == f.0[..]).collect()
    }

    pub fn contains_factor(&self, f: &Word) -> bool {
        f.len() <= self.len() && self.0.windows(f.len().max(1)).any(|w| f.is_empty() || w == &f.0[..])
    }

    /// Every decomposition `self = p · f · s`, ordered by the position of `f`.
    pub fn factor_occurrences(&self, f: &Word) -> Vec<(Word, Word)> {
        self.occurrences(f)
            .into_iter()
            .map(|i| (self.slice(0, i), self.slice(i + f.len(), self.len())))
            .collect()
    }
}

impl From<Vec<LetterId>> for Word {
    fn from(v: Vec<LetterId>) -> Self {
        Word(v)
    }
}

impl From<&[LetterId]> for Word {
    fn from(v: &[LetterId]) -> Self {
        Word(v.to_vec())
    }
}

impl FromIterator<LetterId> for Word {
    fn from_iter<I: IntoIterator<Item = LetterId>>(iter: I) -> Self {
        Word(iter.into_iter().collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(v: &[u32]) -> Word {
        Word::from(v)
    }

    #[test]
    fn overlapping_occurrences() {
        let occ = w(&[0, 0, 0]).factor_occurrences(&w(&[0, 0]));
        assert_eq!(occ, vec![(w(&[]), w(&[0])), (w(&[0]), w(&[]))]);
        assert!(w(&[0, 1]).factor_occurrences(&w(&[2])).is_empty());
    }

    #[test]
    fn splice_and_concat() {
        let x = w(&[1, 2, 3, 4]);
        assert_eq!(x.splice(1, 2, &w(&[9])), w(&[1, 9, 4]));
        assert_eq!(x.splice(0, 4, &Word::empty()), Word::empty());
        assert_eq!(w(&[1]).concat(&w(&[2])), w(&[1, 2]));
        assert!(x.contains_factor(&w(&[3, 4])));
        assert!(!x.contains_factor(&w(&[4, 3])));
    }
}
