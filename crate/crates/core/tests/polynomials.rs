use std::collections::HashMap;

use ncrw_core::json::{poly_from_json, poly_to_json};
use ncrw_core::scalar::int;
use ncrw_core::{Alphabet, CoreError, OrderingSpec, Polynomial, Scalar, Word};
use num_traits::Zero;
use proptest::prelude::*;

fn word_strategy(letters: u32, max_len: usize) -> impl Strategy<Value = Vec<u32>> {
    prop::collection::vec(0..letters, 0..=max_len)
}

fn poly_strategy(terms: usize) -> impl Strategy<Value = Vec<(i64, Vec<u32>)>> {
    prop::collection::vec((-5i64..=5, word_strategy(3, 3)), terms)
}

fn build(t: &[(i64, Vec<u32>)]) -> Polynomial {
    Polynomial::from_terms(t.iter().map(|(c, w)| (int(*c), Word::from(w.clone()))))
}

/// Triple product expanded term by term without the library's multiplication.
fn triple_oracle(a: &[(i64, Vec<u32>)], b: &[(i64, Vec<u32>)], c: &[(i64, Vec<u32>)]) -> HashMap<Vec<u32>, i64> {
    let mut out: HashMap<Vec<u32>, i64> = HashMap::new();
    for (x, u) in a {
        for (y, v) in b {
            for (z, w) in c {
                let mut word = u.clone();
                word.extend(v);
                word.extend(w);
                *out.entry(word).or_default() += x * y * z;
            }
        }
    }
    out.retain(|_, v| *v != 0);
    out
}

proptest! {
    #[test]
    fn ring_axioms(a in poly_strategy(4), b in poly_strategy(4), c in poly_strategy(4)) {
        let (p, q, r) = (build(&a), build(&b), build(&c));
        prop_assert_eq!((&p + &q) + r.clone(), &p + &(&q + &r));
        prop_assert_eq!(&p * &(&q + &r), &(&p * &q) + &(&p * &r));
        prop_assert_eq!(&(&p + &q) * &r, &(&p * &r) + &(&q * &r));
        prop_assert_eq!(&Polynomial::one() * &p, p.clone());
        prop_assert_eq!(&p * &Polynomial::one(), p.clone());
        prop_assert!((&p - &p).is_zero());
    }

    #[test]
    fn multiplication_associative_against_expansion(a in poly_strategy(4), b in poly_strategy(4), c in poly_strategy(4)) {
        let (p, q, r) = (build(&a), build(&b), build(&c));
        let left = &(&p * &q) * &r;
        let right = &p * &(&q * &r);
        prop_assert_eq!(&left, &right);
        let oracle = triple_oracle(&a, &b, &c);
        prop_assert_eq!(left.len(), oracle.len());
        for (w, v) in oracle {
            prop_assert_eq!(left.coeff(&Word::from(w)), int(v));
        }
    }

    #[test]
    fn factor_occurrences_match_scan(w in word_strategy(3, 8), f in prop::collection::vec(0u32..3, 1..=3)) {
        let word = Word::from(w.clone());
        let got = word.factor_occurrences(&Word::from(f.clone()));
        let mut expected = Vec::new();
        for i in 0..w.len() {
            if i + f.len() <= w.len() && w[i..i + f.len()] == f[..] {
                expected.push((Word::from(w[..i].to_vec()), Word::from(w[i + f.len()..].to_vec())));
            }
        }
        prop_assert_eq!(got, expected);
    }

    #[test]
    fn leading_monomial_is_maximal(a in poly_strategy(5)) {
        let p = build(&a);
        prop_assume!(!p.is_zero());
        let ord = OrderingSpec::Canonical;
        let (lw, lc) = p.leading_monomial(&ord).unwrap();
        prop_assert!(!lc.is_zero());
        for w in p.support() {
            if *w != lw {
                prop_assert_eq!(ord.compare(w, &lw), ncrw_core::CompareResult::Less);
            }
        }
    }

    #[test]
    fn json_round_trip(a in poly_strategy(5)) {
        let alphabet = Alphabet::from_tokens(&["x[1]", "x[2]", "y"]).unwrap();
        let p = build(&a);
        let text = serde_json::to_string(&poly_to_json(&p, &alphabet)).unwrap();
        let back = poly_from_json(&serde_json::from_str::<Vec<_>>(&text).unwrap(), &alphabet).unwrap();
        prop_assert_eq!(back, p);
    }
}

fn aon2() -> Alphabet {
    Alphabet::from_tokens(&["a[1,1]", "a[1,2]", "a[2,1]", "a[2,2]"]).unwrap()
}

#[test]
fn leading_monomial_orientation_example() {
    let a = aon2();
    let p = Polynomial::monomial(a.parse_word("a[1,1]a[1,1]").unwrap())
        + Polynomial::monomial(a.parse_word("a[1,2]a[1,2]").unwrap())
        - Polynomial::one();
    let (w, c) = p.leading_monomial(&OrderingSpec::Canonical).unwrap();
    assert_eq!(a.render_word(&w), "a[1,1]a[1,1]");
    assert_eq!(c, int(1));
}

#[test]
fn length_tie_has_no_strict_maximum() {
    let a = aon2();
    let p = Polynomial::monomial(a.parse_word("a[1,2]a[1,2]").unwrap())
        + Polynomial::monomial(a.parse_word("a[2,1]a[2,1]").unwrap());
    assert!(matches!(p.leading_monomial(&OrderingSpec::Length), Err(CoreError::NoStrictMaximum(_, _))));
}

#[test]
fn scale_by_zero_vanishes() {
    let p = Polynomial::letter(1) + Polynomial::one();
    assert!(p.scale(&Scalar::zero()).is_zero());
}
