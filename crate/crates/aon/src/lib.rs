//! Generators, relations and the complete rewriting system of the orthogonal free
//! quantum group `A_o(n)`: the algebra on letters `a[i,j]` with `A A^t = A^t A = 1`.
//!
//! Letter order: `a[i,j] > a[k,l]` iff `i < k`, or `i = k` and `j < l`.

use ncrw_core::{Alphabet, Letter, LetterId, OrderingSpec, Polynomial, Scalar, Word};
use ncrw_rewrite::{RewriteError, RewriteSystem, Rule, VerifyReport};
use num_traits::One;

/// `a[i,j]` for `i, j` in `1..=n`, greatest first.
pub fn alphabet(n: usize) -> Alphabet {
    Alphabet::new(algebra_letters(n)).expect("distinct letters")
}

/// The algebra letters in order, for alphabets that prepend module letters.
pub fn algebra_letters(n: usize) -> Vec<Letter> {
    let n = n as i64;
    (1..=n).flat_map(|i| (1..=n).map(move |j| Letter::algebra("a", &[i, j]))).collect()
}

/// Letter lookup for `a[i,j]` inside any alphabet that contains the algebra letters.
#[derive(Debug, Clone)]
pub struct Letters {
    n: usize,
    ids: Vec<LetterId>,
}

impl Letters {
    pub fn new(alphabet: &Alphabet, n: usize) -> Self {
        let n64 = n as i64;
        let ids = (1..=n64).flat_map(|i| (1..=n64).map(move |j| (i, j))).map(|(i, j)| alphabet.expect_id("a", &[i, j])).collect();
        Letters { n, ids }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Id of `a[i,j]`, 1-based.
    pub fn id(&self, i: usize, j: usize) -> LetterId {
        self.ids[(i - 1) * self.n + (j - 1)]
    }

    /// `a[i,j]` as a polynomial.
    pub fn a(&self, i: usize, j: usize) -> Polynomial {
        Polynomial::letter(self.id(i, j))
    }

    pub fn word(&self, pairs: &[(usize, usize)]) -> Word {
        pairs.iter().map(|&(i, j)| self.id(i, j)).collect()
    }
}

fn delta(i: usize, j: usize) -> Polynomial {
    if i == j {
        Polynomial::one()
    } else {
        Polynomial::zero()
    }
}

/// `Σ_{i>=from} a[p,i] a[q,i]` (rows) or `Σ_{i>=from} a[i,p] a[i,q]` (columns).
fn partial_sum(l: &Letters, p: usize, q: usize, from: usize, columns: bool) -> Polynomial {
    let mut s = Polynomial::zero();
    for i in from..=l.n() {
        s = s + if columns { l.a(i, p) * l.a(i, q) } else { l.a(p, i) * l.a(q, i) };
    }
    s
}

/// Row relation `Σ_i a[p,i] a[q,i] - δ(p,q)`, an entry of `A A^t - 1`.
pub fn row_relation(l: &Letters, p: usize, q: usize) -> Polynomial {
    partial_sum(l, p, q, 1, false) - delta(p, q)
}

/// Column relation `Σ_i a[i,p] a[i,q] - δ(p,q)`, an entry of `A^t A - 1`.
pub fn column_relation(l: &Letters, p: usize, q: usize) -> Polynomial {
    partial_sum(l, p, q, 1, true) - delta(p, q)
}

/// The `2n²` defining relations, rows first, each with a label.
pub fn relations(n: usize) -> Vec<(String, Polynomial)> {
    let a = alphabet(n);
    let l = Letters::new(&a, n);
    let mut out = Vec::new();
    for p in 1..=n {
        for q in 1..=n {
            out.push((format!("row[{p},{q}]"), row_relation(&l, p, q)));
        }
    }
    for p in 1..=n {
        for q in 1..=n {
            out.push((format!("col[{p},{q}]"), column_relation(&l, p, q)));
        }
    }
    out
}

/// The relations with duplicates removed, in first-occurrence order.
pub fn distinct_relations(n: usize) -> Vec<Polynomial> {
    let mut out: Vec<Polynomial> = Vec::new();
    for (_, r) in relations(n) {
        if !out.contains(&r) {
            out.push(r);
        }
    }
    out
}

/// `Z[p,q] = -Σ_{i>=2} a[p,i] a[q,i] + δ(p,q)`.
pub fn z(l: &Letters, p: usize, q: usize) -> Polynomial {
    delta(p, q) - partial_sum(l, p, q, 2, false)
}

/// `S[p,q] = -Σ_{i>=2} a[i,p] a[i,q] + δ(p,q)`.
pub fn s(l: &Letters, p: usize, q: usize) -> Polynomial {
    delta(p, q) - partial_sum(l, p, q, 2, true)
}

/// The rule families over `alphabet`, which must contain the letters `a[i,j]`.
/// For `n = 1` only the two quadratic rules exist.
pub fn rules_in(alphabet: &Alphabet, n: usize) -> Vec<Rule> {
    let l = Letters::new(alphabet, n);
    let mut out = Vec::new();
    for p in 1..=n {
        for q in 1..=n {
            out.push(Rule::tagged(l.word(&[(p, 1), (q, 1)]), z(&l, p, q), format!("Z~[{p},{q}]")));
        }
    }
    for p in 1..=n {
        for q in 1..=n {
            out.push(Rule::tagged(l.word(&[(1, p), (1, q)]), s(&l, p, q), format!("S~[{p},{q}]")));
        }
    }
    if n < 2 {
        return out;
    }
    for p in 1..=n {
        for q in 1..=n {
            for r in 1..=n {
                let rhs = -(l.a(p, 1) * partial_sum(&l, q, r, 3, false)) + l.a(p, 1) * delta(q, r) - z(&l, p, q) * l.a(r, 1);
                out.push(Rule::tagged(l.word(&[(p, 1), (q, 2), (r, 2)]), rhs, format!("Z~[{p},{q},{r}]")));
            }
        }
    }
    for p in 1..=n {
        for q in 1..=n {
            for r in 1..=n {
                let rhs = -(l.a(1, p) * partial_sum(&l, q, r, 3, true)) + l.a(1, p) * delta(q, r) - s(&l, p, q) * l.a(1, r);
                out.push(Rule::tagged(l.word(&[(1, p), (2, q), (2, r)]), rhs, format!("S~[{p},{q},{r}]")));
            }
        }
    }
    out
}

/// The complete system for `A_o(n)` under the canonical ordering.
pub fn aon_rules(n: usize) -> RewriteSystem {
    let a = alphabet(n);
    let rules = rules_in(&a, n);
    RewriteSystem::new(a, OrderingSpec::canonical(), rules).expect("rules are decreasing")
}

/// Expresses a rule difference as a combination of defining relations, or `None` if
/// the tag is not one of the four families.
pub fn ideal_certificate(l: &Letters, rule: &Rule) -> Option<Polynomial> {
    let tag = rule.tag.as_deref()?;
    let (head, rest) = tag.split_once('[')?;
    let idx: Vec<usize> = rest.trim_end_matches(']').split(',').map(|t| t.parse().ok()).collect::<Option<_>>()?;
    Some(match (head, idx.as_slice()) {
        ("Z~", &[p, q]) => row_relation(l, p, q),
        ("S~", &[p, q]) => column_relation(l, p, q),
        ("Z~", &[p, q, r]) => l.a(p, 1) * row_relation(l, q, r) - row_relation(l, p, q) * l.a(r, 1),
        ("S~", &[p, q, r]) => l.a(1, p) * column_relation(l, q, r) - column_relation(l, p, q) * l.a(1, r),
        _ => return None,
    })
}

#[derive(Debug, Clone)]
pub struct AonReport {
    pub n: usize,
    pub rules: usize,
    pub verify: VerifyReport,
    /// Tags of rules whose difference did not match its relation combination.
    pub ideal_failures: Vec<String>,
}

impl AonReport {
    pub fn complete(&self) -> bool {
        self.verify.complete && self.ideal_failures.is_empty()
    }
}

/// Checks every minimal overlap and that every rule difference lies in the ideal.
pub fn aon_verify(n: usize, step_limit: u64) -> AonReport {
    let sys = aon_rules(n);
    let l = Letters::new(sys.alphabet(), n);
    let ideal_failures = sys
        .rules()
        .iter()
        .filter(|r| ideal_certificate(&l, r) != Some(r.difference()))
        .map(|r| r.tag.clone().unwrap_or_default())
        .collect();
    AonReport { n, rules: sys.len(), verify: sys.verify_complete(step_limit), ideal_failures }
}

/// Irreducible words of each length `0..=max_len`, in ascending id order.
pub fn basis_words(sys: &RewriteSystem, max_len: usize) -> Vec<Vec<Word>> {
    let k = sys.alphabet().len() as LetterId;
    let mut out = vec![vec![Word::empty()]];
    for _ in 0..max_len {
        let prev = out.last().expect("nonempty");
        let next: Vec<Word> = prev
            .iter()
            .flat_map(|w| (0..k).map(move |l| w.concat(&Word::from(vec![l]))))
            .filter(|w| sys.is_irreducible(w))
            .collect();
        out.push(next);
    }
    out
}

/// Orthogonal idempotents of `A_o(1)`: `e1 = (1+a)/2`, `e2 = (1-a)/2` satisfy
/// `e1² = e1`, `e2² = e2`, `e1 e2 = 0` modulo the rules, and `e1 + e2 = 1`.
pub fn idempotent_check(step_limit: u64) -> Result<bool, RewriteError> {
    let sys = aon_rules(1);
    let a = Polynomial::letter(0);
    let half = Scalar::new(1.into(), 2.into());
    let e1 = (&a + &Polynomial::one()).scale(&half);
    let e2 = (&Polynomial::one() - &a).scale(&half);
    let zero = |p: Polynomial| sys.normal_form(&p, step_limit).map(|x| x.is_zero());
    Ok(zero(&e1 * &e1 - e1.clone())? && zero(&e2 * &e2 - e2.clone())? && zero(&e1 * &e2)? && (&e1 + &e2) == Polynomial::constant(Scalar::one()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts() {
        assert_eq!(aon_rules(1).len(), 2);
        assert_eq!(aon_rules(2).len(), 24);
        assert_eq!(aon_rules(3).len(), 72);
        assert_eq!(relations(3).len(), 18);
        assert_eq!(distinct_relations(1).len(), 1);
    }

    #[test]
    fn idempotents() {
        assert!(idempotent_check(1000).unwrap());
    }

    #[test]
    fn certificates_match() {
        for n in 1..=3 {
            let r = aon_verify(n, 100_000);
            assert!(r.ideal_failures.is_empty(), "{:?}", r.ideal_failures);
        }
    }
}
