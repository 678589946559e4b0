mod common;

use common::{eval, eval_algebra, is_orthogonal, orthogonal};
use ncrw_core::{LetterId, ModuleClass, OrderingSpec, Polynomial};
use ncrw_resolution::{
    compose_zero, containment_check, phi_image, stage_alphabet, stage_graph_map, stage_kernel, stage_system, stage_system_unchecked,
    universal_alphabet, verify_stage, ResolutionError, ResolutionStage, StageLetters,
};
use ncrw_rewrite::modext::graph_system;
use ncrw_rewrite::RewriteSystem;
use proptest::prelude::*;

const LIMIT: u64 = 1_000_000;

fn stage(n: usize, s: u8) -> ResolutionStage {
    stage_system(n, s).expect("stage builds")
}

#[test]
fn stage_alphabets_have_the_module_letters_first() {
    for (s, bild, urbild) in [(1u8, 1, 9), (2, 9, 9), (3, 9, 1)] {
        let a = stage_alphabet(3, s).unwrap();
        assert_eq!(a.len(), bild + urbild + 9);
        let classes: Vec<_> = (0..a.len() as LetterId).map(|i| a.class(i)).collect();
        assert!(classes[..bild].iter().all(|c| *c == Some(ModuleClass::Bild)));
        assert!(classes[bild..bild + urbild].iter().all(|c| *c == Some(ModuleClass::Urbild)));
        assert!(classes[bild + urbild..].iter().all(|c| c.is_none()));
    }
    let a = stage_alphabet(3, 2).unwrap();
    assert_eq!(a.letter(0).token(), "e[3,3]");
    assert_eq!(a.letter(8).token(), "e[1,1]");
    assert!(matches!(stage_alphabet(3, 4), Err(ResolutionError::BadStage(4))));
}

#[test]
fn rule_counts_per_stage() {
    // (r_a, r_e, r_f): 2n² + 2n³ algebra rules, then the tabulated families.
    for n in [3usize, 4] {
        let r_a = 2 * n * n + 2 * n * n * n;
        let expected = [(1u8, n * n, 2 * n * n), (2, 2 * n * n, 1), (3, 1 + 2 * n, 0)];
        for (s, r_e, r_f) in expected {
            let st = stage(n, s);
            assert_eq!((st.split.r_a.len(), st.split.r_e.len(), st.split.r_f.len()), (r_a, r_e, r_f), "n={n} stage {s}");
            assert!(st.split.predicate_violations().is_empty());
        }
    }
}

#[test]
fn small_n_is_rejected_unless_unchecked() {
    assert!(matches!(stage_system(2, 1), Err(ResolutionError::SmallN(2))));
    let st = stage_system_unchecked(2, 1).unwrap();
    assert_eq!(st.split.r_e.len(), 4);
}

#[test]
fn phi_images_of_known_generators() {
    let a = universal_alphabet(2);
    let l = StageLetters::new(&a, 2);
    assert_eq!(phi_image(&l, 0, &[]).unwrap(), Polynomial::one());
    let p1 = phi_image(&l, 1, &[1, 2]).unwrap();
    assert_eq!(p1.render(&a), "a[1,2]e - ea[1,2]");
    let p2 = phi_image(&l, 2, &[2, 1]).unwrap();
    assert_eq!(p2.len(), 4);
    let p3 = phi_image(&l, 3, &[]).unwrap();
    // n³ products a f a and n diagonal letters.
    assert_eq!(p3.len(), 8 + 2);
    assert!(phi_image(&l, 1, &[3, 1]).is_err());
    assert!(phi_image(&l, 4, &[]).is_err());
}

#[test]
fn consecutive_maps_compose_to_zero() {
    for n in [2usize, 3, 4] {
        for i in 0..=2 {
            let r = compose_zero(n, i, LIMIT).unwrap();
            assert!(r.ok(), "n={n} map {i}: {:?}", r.nonzero);
            assert_eq!(r.generators, if i == 2 { 1 } else { n * n });
        }
    }
    assert!(compose_zero(3, 3, LIMIT).is_err());
}

fn graph_rules(n: usize, s: u8) -> Vec<(String, String)> {
    let alphabet = stage_alphabet(n, s).unwrap();
    let l = StageLetters::new(&alphabet, n);
    let r_a = RewriteSystem::new(alphabet.clone(), OrderingSpec::module_for(&alphabet), ncrw_aon::rules_in(&alphabet, n)).unwrap();
    let g = graph_system(&stage_graph_map(&l, s).unwrap(), &r_a).unwrap();
    let mut out: Vec<_> =
        g.r_e.iter().map(|&i| (alphabet.render_word(&g.base.rule(i).lhs), g.base.rule(i).rhs.render(&alphabet))).collect();
    out.sort();
    out
}

fn table_rules(n: usize, s: u8, head: &str) -> Vec<(String, String)> {
    let st = stage_system_unchecked(n, s).unwrap();
    let a = st.alphabet();
    let mut out: Vec<_> = st
        .system()
        .rules()
        .iter()
        .filter(|r| r.tag.as_deref().is_some_and(|t| t == head || (t.starts_with(&format!("{head}[")) && t.contains(','))))
        .map(|r| (a.render_word(&r.lhs), r.rhs.render(a)))
        .collect();
    out.sort();
    out
}

#[test]
fn oriented_graph_of_phi1_at_n2_gives_four_rules() {
    let g = graph_rules(2, 1);
    assert_eq!(g.len(), 4);
    assert!(g.iter().all(|(lhs, _)| lhs.starts_with("a[") && lhs.ends_with("]e")));
    assert_eq!(g, table_rules(2, 1, "V~"));
}

#[test]
fn oriented_graphs_reproduce_the_tabulated_rules() {
    let g2 = graph_rules(3, 2);
    assert_eq!(g2.len(), 9);
    assert!(g2.iter().all(|(lhs, _)| lhs.starts_with("a[") && lhs.contains(",3]e[") && lhs.ends_with(",3]")));
    assert_eq!(g2, table_rules(3, 2, "V~"));
    assert_eq!(graph_rules(3, 1), table_rules(3, 1, "V~"));
    assert_eq!(graph_rules(3, 3), table_rules(3, 3, "V~"));
}

#[test]
fn weak_completeness_and_family_tables_at_n3() {
    for s in 1..=3 {
        let rep = verify_stage(&stage(3, s), LIMIT);
        assert!(rep.weakly_complete, "stage {s}: {} failures", rep.report.failures.len());
        assert!(rep.missing.is_empty(), "stage {s} missing {:?}", rep.missing);
        assert!(rep.extra.is_empty(), "stage {s} extra {:?}", rep.extra);
    }
    let rep = verify_stage(&stage(3, 1), LIMIT);
    assert_eq!(rep.families["V~/2*Z~/2"], 9);
    assert_eq!(rep.families["S~/3*V~/2"], 27);
    assert_eq!(rep.report.quotient_resolved, 0);
    let rep = verify_stage(&stage(3, 2), LIMIT);
    assert_eq!(rep.families["V~/2*W~/2"], 1);
    assert!(rep.report.quotient_resolved > 0);
}

#[test]
fn containment_scripts_hold() {
    for n in [3usize, 4] {
        for s in 1..=3 {
            for c in containment_check(&stage(n, s), LIMIT).unwrap() {
                assert!(c.ok(), "n={n} stage {s} {}: {:?}", c.name, c.failures);
            }
        }
    }
}

#[test]
fn kernel_generators_match_the_next_map() {
    let k1 = stage_kernel(&stage(3, 1), LIMIT).unwrap();
    assert_eq!(k1.len(), 18);
    assert!(k1.iter().all(|k| k.ok));
    assert_eq!(k1.iter().filter(|k| k.matched.starts_with("+Φ2")).count(), 9);
    let k2 = stage_kernel(&stage(3, 2), LIMIT).unwrap();
    assert_eq!(k2.len(), 1);
    assert_eq!((k2[0].tag.as_str(), k2[0].matched.as_str(), k2[0].ok), ("K~", "-Φ3(f)", true));
    assert!(stage_kernel(&stage(3, 3), LIMIT).unwrap().is_empty());
}

/// Substitutes the stage graph map for the urbild letters.
fn through_graph(st: &ResolutionStage, p: &Polynomial) -> Polynomial {
    let l = st.letters();
    let map = stage_graph_map(&l, st.stage).unwrap();
    p.substitute(|id| map.iter().find(|(g, _)| *g == id).map(|(_, img)| img.clone()))
}

fn seed() -> impl Strategy<Value = (Vec<u8>, Vec<u8>)> {
    (prop::collection::vec(any::<u8>(), 1..6), prop::collection::vec(any::<u8>(), 1..6))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn oracle_matrices_are_orthogonal((s, _) in seed()) {
        prop_assert!(is_orthogonal(&orthogonal(3, &s)));
    }

    /// Every stage rule relation lies in the graph module: after substituting the
    /// graph map it vanishes in every pair of one-dimensional representations.
    #[test]
    fn stage_relations_vanish_through_the_graph((s, t) in seed(), which in 1u8..=3) {
        let (o, p) = (orthogonal(3, &s), orthogonal(3, &t));
        let st = stage(3, which);
        for &i in st.split.r_e.iter().chain(&st.split.r_f) {
            let r = st.system().rule(i);
            let image = eval(&through_graph(&st, &r.difference()), st.alphabet(), &o, &p);
            prop_assert!(image.is_empty(), "{:?} leaves {:?}", r.tag, image);
        }
    }

    /// Algebra rules hold in the representations.
    #[test]
    fn algebra_rules_hold_in_representations((s, _) in seed()) {
        let o = orthogonal(3, &s);
        let st = stage(3, 1);
        for &i in &st.split.r_a {
            prop_assert!(num_traits::Zero::is_zero(&eval_algebra(&st.system().rule(i).difference(), st.alphabet(), &o)));
        }
    }

    /// The composite of consecutive maps vanishes in the representations.
    #[test]
    fn composites_vanish_in_representations((s, t) in seed()) {
        let (o, p) = (orthogonal(3, &s), orthogonal(3, &t));
        let a = universal_alphabet(3);
        let l = StageLetters::new(&a, 3);
        for i in 1u8..=2 {
            let inner_gens: Vec<Vec<usize>> = (1..=3).flat_map(|p| (1..=3).map(move |q| vec![p, q])).collect();
            let outer_gens = if i == 1 { inner_gens.clone() } else { vec![vec![]] };
            let name = if i == 1 { "e" } else { "f" };
            let inner: Vec<(LetterId, Polynomial)> = inner_gens
                .iter()
                .map(|g| (a.expect_id(name, &[g[0] as i64, g[1] as i64]), phi_image(&l, i, g).unwrap()))
                .collect();
            for g in outer_gens {
                let outer = phi_image(&l, i + 1, &g).unwrap();
                let composed = outer.substitute(|id| inner.iter().find(|(x, _)| *x == id).map(|(_, q)| q.clone()));
                prop_assert!(eval(&composed, &a, &o, &p).is_empty());
            }
        }
    }

    /// Kernel generators are killed by the stage map in the representations.
    #[test]
    fn kernel_generators_are_cycles((s, t) in seed()) {
        let (o, p) = (orthogonal(3, &s), orthogonal(3, &t));
        for which in 1u8..=2 {
            let st = stage(3, which);
            for &i in &st.split.r_f {
                let d = st.system().rule(i).difference();
                prop_assert!(eval(&through_graph(&st, &d), st.alphabet(), &o, &p).is_empty());
            }
        }
    }
}
