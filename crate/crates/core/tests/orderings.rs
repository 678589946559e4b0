use ncrw_core::{CompareResult, OrderingSpec, Word};
use proptest::prelude::*;

const LETTERS: u32 = 4;

fn word() -> impl Strategy<Value = Word> {
    prop::collection::vec(0..LETTERS, 0..=5).prop_map(Word::from)
}

fn short_word() -> impl Strategy<Value = Word> {
    prop::collection::vec(0..LETTERS, 0..=3).prop_map(Word::from)
}

/// Every ordering except Lex, over a 4-letter alphabet whose ids 0 and 1 are separators.
fn orderings() -> Vec<OrderingSpec> {
    vec![
        OrderingSpec::Protolex,
        OrderingSpec::Length,
        OrderingSpec::Canonical,
        OrderingSpec::KbWeight(vec![2, 1, 3, 1]),
        OrderingSpec::Combined(vec![OrderingSpec::KbWeight(vec![2, 1, 3, 1]), OrderingSpec::Canonical]),
        OrderingSpec::Combined(vec![OrderingSpec::Length, OrderingSpec::Protolex]),
        OrderingSpec::Syllable { separators: vec![true, true, false, false] },
        OrderingSpec::Module { class: vec![2, 1, 0, 0] },
    ]
}

fn all_orderings() -> Vec<OrderingSpec> {
    let mut v = orderings();
    v.push(OrderingSpec::Lex);
    v
}

proptest! {
    #[test]
    fn multiplicative(a in word(), b in word(), p in short_word(), s in short_word()) {
        for ord in orderings() {
            let r = ord.compare(&a, &b);
            if r == CompareResult::Less || r == CompareResult::Equivalent {
                prop_assert_eq!(ord.compare(&p.concat(&a), &p.concat(&b)), r, "{:?} prefix", ord);
                prop_assert_eq!(ord.compare(&a.concat(&s), &b.concat(&s)), r, "{:?} suffix", ord);
            }
        }
    }

    #[test]
    fn antisymmetric_and_reflexive(a in word(), b in word()) {
        for ord in all_orderings() {
            prop_assert_eq!(ord.compare(&a, &a), CompareResult::Equivalent);
            prop_assert_eq!(ord.compare(&a, &b), ord.compare(&b, &a).reverse());
        }
    }

    #[test]
    fn transitive(a in word(), b in word(), c in word()) {
        use CompareResult::*;
        for ord in all_orderings() {
            let ab = ord.compare(&a, &b);
            let bc = ord.compare(&b, &c);
            let ac = ord.compare(&a, &c);
            match (ab, bc) {
                (Less, Less) | (Less, Equivalent) | (Equivalent, Less) => prop_assert_eq!(ac, Less, "{:?}", ord),
                (Equivalent, Equivalent) => prop_assert_eq!(ac, Equivalent, "{:?}", ord),
                _ => {}
            }
        }
    }

    #[test]
    fn key_is_linear_extension(a in word(), b in word()) {
        for ord in all_orderings() {
            let (ka, kb) = (ord.key(&a), ord.key(&b));
            match ord.compare(&a, &b) {
                CompareResult::Less => prop_assert!(ka < kb, "{:?}", ord),
                CompareResult::Greater => prop_assert!(ka > kb, "{:?}", ord),
                CompareResult::Equivalent => prop_assert_eq!(ka, kb, "{:?}", ord),
                CompareResult::Incomparable => {}
            }
        }
    }

    #[test]
    fn total_orders_never_incomparable(a in word(), b in word()) {
        for ord in [
            OrderingSpec::Canonical,
            OrderingSpec::Syllable { separators: vec![true, true, false, false] },
            OrderingSpec::Module { class: vec![2, 1, 0, 0] },
        ] {
            let r = ord.compare(&a, &b);
            prop_assert_ne!(r, CompareResult::Incomparable);
            prop_assert_eq!(r == CompareResult::Equivalent, a == b);
        }
    }

    #[test]
    fn canonical_is_length_then_protolex(a in word(), b in word()) {
        let combined = OrderingSpec::Combined(vec![OrderingSpec::Length, OrderingSpec::Protolex]);
        prop_assert_eq!(OrderingSpec::Canonical.compare(&a, &b), combined.compare(&a, &b));
    }
}

/// Randomized descent: from a random start, repeatedly step to a random smaller word
/// among words of length at most 6. Every chain must stop well before the bound.
#[test]
fn descending_chains_terminate() {
    use rand::{Rng, SeedableRng};
    let mut rng = rand::rngs::StdRng::seed_from_u64(7);
    let mut all = vec![Word::empty()];
    let mut frontier = vec![Word::empty()];
    for _ in 0..6 {
        let mut next = Vec::new();
        for w in &frontier {
            for l in 0..LETTERS {
                next.push(w.concat(&Word::from(vec![l])));
            }
        }
        all.extend(next.iter().cloned());
        frontier = next;
    }
    let bound = all.len();
    for ord in [
        OrderingSpec::Canonical,
        OrderingSpec::Syllable { separators: vec![true, true, false, false] },
        OrderingSpec::KbWeight(vec![2, 1, 3, 1]),
        OrderingSpec::Module { class: vec![2, 1, 0, 0] },
    ] {
        for _ in 0..20 {
            let mut cur = all[rng.gen_range(0..all.len())].clone();
            let mut steps = 0;
            loop {
                let smaller: Vec<&Word> = all.iter().filter(|w| ord.compare(w, &cur) == CompareResult::Less).collect();
                if smaller.is_empty() {
                    break;
                }
                cur = smaller[rng.gen_range(0..smaller.len())].clone();
                steps += 1;
                assert!(steps <= bound);
            }
        }
    }
}
