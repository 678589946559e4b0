use std::collections::BTreeSet;

use ncrw_aon::{alphabet, aon_rules, aon_verify, basis_words, relations, rules_in, s, z, Letters};
use ncrw_automaton::Dfa;
use ncrw_core::{OrderingSpec, Polynomial, Word};
use ncrw_rewrite::{orient_relation, OverlapKind, Resolution, DEFAULT_STEP_LIMIT};

fn poly(n: usize, text: &str) -> Polynomial {
    Polynomial::monomial(alphabet(n).parse_word(text).unwrap())
}

fn rule_by_tag<'a>(sys: &'a ncrw_rewrite::RewriteSystem, tag: &str) -> (usize, &'a ncrw_rewrite::Rule) {
    sys.rules().iter().enumerate().find(|(_, r)| r.tag.as_deref() == Some(tag)).unwrap()
}

/// The irreducible three-letter words of `A_o(2)` as tabulated.
const TABLE: [&str; 16] = [
    "a[2,2]a[1,1]a[2,2]",
    "a[2,1]a[1,2]a[2,1]",
    "a[2,2]a[1,2]a[2,1]",
    "a[2,2]a[1,2]a[2,2]",
    "a[1,2]a[2,1]a[1,2]",
    "a[2,2]a[2,1]a[1,2]",
    "a[2,2]a[2,1]a[2,2]",
    "a[1,1]a[2,2]a[1,1]",
    "a[1,2]a[2,2]a[1,1]",
    "a[1,2]a[2,2]a[1,2]",
    "a[2,1]a[2,2]a[1,1]",
    "a[2,1]a[2,2]a[2,1]",
    "a[2,2]a[2,2]a[1,1]",
    "a[2,2]a[2,2]a[1,2]",
    "a[2,2]a[2,2]a[2,1]",
    "a[2,2]a[2,2]a[2,2]",
];

#[test]
fn normal_forms() {
    let sys = aon_rules(2);
    let nf = |p: &Polynomial| sys.normal_form(p, DEFAULT_STEP_LIMIT).unwrap();
    let w = alphabet(2).parse_word("a[1,1]a[1,1]").unwrap();
    let (pos, rule) = sys.find_redex(&w).unwrap();
    assert_eq!(sys.rewrite_at(&w, pos, rule), Polynomial::one() - poly(2, "a[1,2]a[1,2]"));
    assert_eq!(nf(&poly(2, "a[1,1]a[1,1]")), poly(2, "a[2,2]a[2,2]"));
    assert_eq!(nf(&poly(2, "a[1,1]a[2,2]a[1,1]")), poly(2, "a[1,1]a[2,2]a[1,1]"));
    assert_eq!(nf(&Polynomial::one()), Polynomial::one());
}

#[test]
fn rule_examples() {
    let sys = aon_rules(2);
    let (_, r) = rule_by_tag(&sys, "Z~[1,2]");
    assert_eq!(r.lhs, alphabet(2).parse_word("a[1,1]a[2,1]").unwrap());
    assert_eq!(r.rhs, -poly(2, "a[1,2]a[2,2]"));
    let (_, r) = rule_by_tag(&sys, "Z~[1,2,1]");
    assert_eq!(r.lhs, alphabet(2).parse_word("a[1,1]a[2,2]a[1,2]").unwrap());
    assert_eq!(r.rhs, poly(2, "a[1,2]a[2,2]a[1,1]"));
    for n in 1..=4 {
        let sys = aon_rules(n);
        let expect = if n == 1 { 2 } else { 2 * n * n + 2 * n * n * n };
        assert_eq!(sys.len(), expect);
        assert!(sys.rules().iter().all(|r| r.is_strictly_decreasing(sys.ordering())));
    }
}

#[test]
fn relations_orient_to_quadratic_rules() {
    for n in 2..=3 {
        let sys = aon_rules(n);
        for (tag, rel) in relations(n) {
            let rule = orient_relation(&rel, &OrderingSpec::canonical()).unwrap();
            let (p, q) = {
                let idx: Vec<usize> = tag[4..tag.len() - 1].split(',').map(|x| x.parse().unwrap()).collect();
                (idx[0], idx[1])
            };
            let family = if tag.starts_with("row") { "Z~" } else { "S~" };
            let (_, want) = rule_by_tag(&sys, &format!("{family}[{p},{q}]"));
            assert_eq!((&rule.lhs, &rule.rhs), (&want.lhs, &want.rhs), "{tag}");
        }
    }
}

/// Entries of `A A^t - 1` and `A^t A - 1` from a generic matrix product.
#[test]
fn relations_are_matrix_entries() {
    let n = 3;
    let a = alphabet(n);
    let l = Letters::new(&a, n);
    let m: Vec<Vec<Polynomial>> = (1..=n).map(|i| (1..=n).map(|j| l.a(i, j)).collect()).collect();
    let t: Vec<Vec<Polynomial>> = (0..n).map(|i| (0..n).map(|j| m[j][i].clone()).collect()).collect();
    let mul = |x: &Vec<Vec<Polynomial>>, y: &Vec<Vec<Polynomial>>, i: usize, j: usize| {
        (0..n).fold(Polynomial::zero(), |acc, k| acc + &x[i][k] * &y[k][j])
    };
    let rels = relations(n);
    for i in 0..n {
        for j in 0..n {
            let id = if i == j { Polynomial::one() } else { Polynomial::zero() };
            assert_eq!(rels[i * n + j].1, mul(&m, &t, i, j) - id.clone());
            assert_eq!(rels[n * n + i * n + j].1, mul(&t, &m, i, j) - id);
        }
    }
}

#[test]
fn overlap_examples() {
    let sys = aon_rules(2);
    let (z11, _) = rule_by_tag(&sys, "Z~[1,1]");
    let (s11, _) = rule_by_tag(&sys, "S~[1,1]");
    let overlaps = sys.minimal_overlaps();
    let w3 = alphabet(2).parse_word("a[1,1]a[1,1]a[1,1]").unwrap();
    assert!(overlaps.iter().any(|o| o.rule_a == z11 && o.rule_b == z11 && o.word == w3 && o.kind == OverlapKind::Partial));
    let w2 = alphabet(2).parse_word("a[1,1]a[1,1]").unwrap();
    let total = overlaps.iter().find(|o| o.rule_a == z11 && o.rule_b == s11 && o.word == w2).unwrap();
    assert_eq!(total.kind, OverlapKind::Total);
    assert!(matches!(sys.resolve_overlap(total, DEFAULT_STEP_LIMIT), Resolution::Joinable(_)));
}

#[test]
fn complete_for_small_n() {
    for n in 1..=3 {
        let r = aon_verify(n, DEFAULT_STEP_LIMIT);
        assert!(r.complete(), "n = {n}: {:?}", r.verify.failures.first());
        assert!(r.verify.overlaps_total > 0);
    }
}

#[test]
fn cubic_identity() {
    let n = 3;
    let sys = aon_rules(n);
    let l = Letters::new(sys.alphabet(), n);
    let nf = |p: &Polynomial| sys.normal_form(p, DEFAULT_STEP_LIMIT).unwrap();
    for p in 1..=n {
        for q in 1..=n {
            for r in 1..=n {
                assert_eq!(nf(&(z(&l, p, q) * l.a(r, 1))), nf(&(l.a(p, 1) * z(&l, q, r))));
                assert_eq!(nf(&(s(&l, p, q) * l.a(1, r))), nf(&(l.a(1, p) * s(&l, q, r))));
            }
        }
    }
}

#[test]
fn basis_matches_table_and_automaton() {
    let sys = aon_rules(2);
    let basis = basis_words(&sys, 6);
    let counts: Vec<usize> = basis.iter().map(Vec::len).collect();
    assert_eq!(&counts[..4], &[1, 4, 9, 16]);
    let a = alphabet(2);
    let table: BTreeSet<Word> = TABLE.iter().map(|t| a.parse_word(t).unwrap()).collect();
    assert_eq!(basis[3].iter().cloned().collect::<BTreeSet<_>>(), table);

    let lhs: BTreeSet<Word> = sys.rules().iter().map(|r| r.lhs.clone()).collect();
    assert_eq!(lhs.iter().filter(|w| w.len() == 2).count(), 7);
    let dfa = Dfa::build(&lhs.into_iter().collect::<Vec<_>>(), &a).unwrap();
    for (len, words) in basis.iter().enumerate() {
        assert_eq!(dfa.count_words(len), words.len().into());
    }
    let min = dfa.minimize();
    assert_eq!(min.num_states(), 10);
}

#[test]
fn rules_over_wider_alphabet() {
    let mut letters = vec![ncrw_core::Letter::module("e", &[], ncrw_core::ModuleClass::Bild)];
    letters.extend(ncrw_aon::algebra_letters(3));
    let wide = ncrw_core::Alphabet::new(letters).unwrap();
    assert_eq!(rules_in(&wide, 3).len(), 72);
}
