use ncrw_core::{Alphabet, Letter, ModuleClass, OrderingSpec, Polynomial, Word};
use ncrw_rewrite::modext::{graph_system, module_degree, pi1, ModuleDegree, SplitSystem};
use ncrw_rewrite::{RewriteError, RewriteSystem, Rule, DEFAULT_STEP_LIMIT};
use proptest::prelude::*;

/// Bild `e`, urbild `e[p,q]`, then `a[i,j]`, n = 2.
fn alphabet() -> Alphabet {
    let mut l = vec![Letter::module("e", &[], ModuleClass::Bild)];
    for p in (1..=2).rev() {
        for q in (1..=2).rev() {
            l.push(Letter::module("e", &[p, q], ModuleClass::Urbild));
        }
    }
    for i in 1..=2 {
        for j in 1..=2 {
            l.push(Letter::algebra("a", &[i, j]));
        }
    }
    Alphabet::new(l).unwrap()
}

fn p(a: &Alphabet, s: &str) -> Polynomial {
    Polynomial::monomial(a.parse_word(s).unwrap())
}

#[test]
fn degrees() {
    let a = alphabet();
    assert_eq!(module_degree(&(p(&a, "a[1,1]ea[1,2]") + p(&a, "e")), &a), ModuleDegree::Deg1(Some(ModuleClass::Bild)));
    assert_eq!(module_degree(&p(&a, "ee"), &a), ModuleDegree::Mixed);
    assert_eq!(module_degree(&(p(&a, "a[1,1]") + Polynomial::one()), &a), ModuleDegree::Deg0);
    assert_eq!(module_degree(&(p(&a, "e") + p(&a, "e[1,1]")), &a), ModuleDegree::Deg1(None));
    assert_eq!(module_degree(&(p(&a, "e") + p(&a, "a[1,1]")), &a), ModuleDegree::Mixed);
}

#[test]
fn pi1_splits_at_the_generator() {
    let a = alphabet();
    let b = pi1(&p(&a, "a[1,1]e[2,2]a[1,2]"), &a).unwrap();
    let entries: Vec<_> = b.entries().collect();
    assert_eq!(entries.len(), 1);
    assert_eq!(entries[0].0, a.expect_id("e", &[2, 2]));
    assert_eq!(entries[0].1, &a.parse_word("a[1,1]").unwrap());
    assert_eq!(entries[0].2, &a.parse_word("a[1,2]").unwrap());
    assert!(pi1(&(p(&a, "e[1,1]") - p(&a, "e[1,1]")), &a).unwrap().is_zero());
    assert!(matches!(pi1(&p(&a, "a[1,1]"), &a), Err(RewriteError::NotDegreeOne)));
}

fn phi1(a: &Alphabet) -> Vec<(u32, Polynomial)> {
    let mut out = Vec::new();
    for i in 1..=2 {
        for j in 1..=2 {
            let x = format!("a[{i},{j}]");
            out.push((a.expect_id("e", &[i, j]), p(a, &format!("{x}e")) - p(a, &format!("e{x}"))));
        }
    }
    out
}

#[test]
fn graph_of_phi1_over_free_algebra() {
    let a = alphabet();
    let free = RewriteSystem::new(a.clone(), OrderingSpec::module_for(&a), vec![]).unwrap();
    let split = graph_system(&phi1(&a), &free).unwrap();
    assert_eq!(split.r_e.len(), 4);
    assert!(split.r_f.is_empty());
    for &i in &split.r_e {
        let r = split.base.rule(i);
        let x = r.lhs.as_slice()[0];
        let token = a.letter(x).token();
        let gen = a.expect_id("e", &a.letter(x).indices);
        assert_eq!(r.lhs, Word::from(vec![x, a.expect_id("e", &[])]));
        assert_eq!(r.rhs, p(&a, &format!("e{token}")) + Polynomial::letter(gen));
    }
    let report = split.verify_weak_complete(DEFAULT_STEP_LIMIT);
    assert!(report.complete);
    assert!(split.kernel_generators(&report).unwrap().is_empty());
    assert!(split.predicate_violations().is_empty());
}

#[test]
fn identity_graph_is_trivial() {
    let a = alphabet();
    let free = RewriteSystem::new(a.clone(), OrderingSpec::module_for(&a), vec![]).unwrap();
    let f = a.expect_id("e", &[1, 1]);
    let split = graph_system(&[(f, Polynomial::letter(f))], &free).unwrap();
    assert!(split.r_e.is_empty());
    assert_eq!(split.trivial, vec![f]);
}

#[test]
fn classification_and_kernel() {
    let a = alphabet();
    let rules = vec![
        Rule::new(a.parse_word("a[1,1]a[1,1]").unwrap(), Polynomial::one()),
        Rule::new(a.parse_word("a[1,1]e").unwrap(), p(&a, "ea[1,1]") + p(&a, "e[1,1]")),
        Rule::new(a.parse_word("a[1,1]e[1,1]").unwrap(), -p(&a, "e[1,1]a[1,1]")),
    ];
    let split = SplitSystem::classify(RewriteSystem::new(a.clone(), OrderingSpec::module_for(&a), rules).unwrap()).unwrap();
    assert_eq!((split.r_a.clone(), split.r_e.clone(), split.r_f.clone()), (vec![0], vec![1], vec![2]));
    let incomplete = ncrw_rewrite::VerifyReport::default();
    assert!(matches!(split.kernel_generators(&incomplete), Err(RewriteError::WeakCompletenessNotVerified)));
    let report = split.verify_weak_complete(DEFAULT_STEP_LIMIT);
    assert!(report.complete, "{report:?}");
    let k = split.kernel_generators(&report).unwrap();
    assert_eq!(k.len(), 1);
    assert_eq!(k[0].to_polynomial(), p(&a, "a[1,1]e[1,1]") + p(&a, "e[1,1]a[1,1]"));
    for o in split.p_minimal_overlaps() {
        assert!(ncrw_rewrite::modext::module_count(&o.word, &a) <= 1);
    }

    let bad = vec![Rule::new(a.parse_word("a[1,1]e[1,1]").unwrap(), p(&a, "e"))];
    assert!(matches!(
        SplitSystem::classify(RewriteSystem::new(a.clone(), OrderingSpec::canonical(), bad).unwrap()),
        Err(RewriteError::UrbildNotClosed(0))
    ));
}

fn deg_word() -> impl Strategy<Value = Word> {
    (prop::collection::vec(5u32..9, 0..3), prop::option::of(0u32..5), prop::collection::vec(5u32..9, 0..3)).prop_map(
        |(l, m, r)| l.into_iter().chain(m).chain(r).collect(),
    )
}

proptest! {
    #[test]
    fn pi1_is_linear(u in deg_word(), v in deg_word()) {
        let a = alphabet();
        let pu = Polynomial::monomial(u);
        let pv = Polynomial::monomial(v);
        if let (Ok(x), Ok(y)) = (pi1(&pu, &a), pi1(&pv, &a)) {
            prop_assert_eq!(pi1(&(&pu + &pv), &a).unwrap(), x.add(&y));
        }
    }

    #[test]
    fn degree_of_products(u in deg_word(), v in deg_word()) {
        let a = alphabet();
        let prod = module_degree(&Polynomial::monomial(u.concat(&v)), &a);
        let (du, dv) = (module_degree(&Polynomial::monomial(u), &a), module_degree(&Polynomial::monomial(v), &a));
        let expect = match (du, dv) {
            (ModuleDegree::Deg0, d) | (d, ModuleDegree::Deg0) => d,
            _ => ModuleDegree::Mixed,
        };
        prop_assert_eq!(prod, expect);
    }
}
