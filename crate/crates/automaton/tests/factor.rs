use ncrw_automaton::Dfa;
use ncrw_core::{Alphabet, Word};
use proptest::prelude::*;

fn alphabet() -> Alphabet {
    Alphabet::from_tokens(&["c", "b", "a"]).unwrap()
}

fn all_words(k: u32, len: usize) -> Vec<Word> {
    let mut out = vec![Word::empty()];
    for _ in 0..len {
        out = out.iter().flat_map(|w| (0..k).map(move |l| w.concat(&Word::from(vec![l])))).collect();
    }
    out
}

fn forbidden() -> impl Strategy<Value = Vec<Word>> {
    prop::collection::vec(prop::collection::vec(0u32..3, 1..4).prop_map(Word::from), 1..5)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn acceptance_is_factor_freeness(f in forbidden()) {
        let d = Dfa::build(&f, &alphabet()).unwrap();
        let m = d.minimize();
        for len in 0..=6 {
            let mut brute = 0u64;
            for w in all_words(3, len) {
                let ok = !f.iter().any(|x| w.contains_factor(x));
                prop_assert_eq!(d.is_irreducible(&w).unwrap(), ok);
                prop_assert_eq!(m.is_irreducible(&w).unwrap(), ok);
                brute += u64::from(ok);
            }
            prop_assert_eq!(d.count_words(len), brute.into());
        }
        prop_assert!(m.num_states() <= d.num_states());
    }

    #[test]
    fn prefix_closed(f in forbidden(), w in prop::collection::vec(0u32..3, 0..8)) {
        let d = Dfa::build(&f, &alphabet()).unwrap();
        let w = Word::from(w);
        if d.is_irreducible(&w).unwrap() {
            for k in 0..w.len() {
                prop_assert!(d.is_irreducible(&w.slice(0, k)).unwrap());
            }
        }
    }
}

#[test]
fn empty_word_and_unknown_letters() {
    let a = alphabet();
    let d = Dfa::build(&[a.parse_word("ab").unwrap()], &a).unwrap();
    assert!(d.is_irreducible(&Word::empty()).unwrap());
    assert!(d.is_irreducible(&Word::from(vec![7])).is_err());
    assert!(Dfa::build(&[Word::empty()], &a).is_err());
}
