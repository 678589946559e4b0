use ncrw_aon::algebra_letters;
use ncrw_core::{Alphabet, Letter, LetterId, ModuleClass, Polynomial};

use crate::ResolutionError;

/// `name[p,q]` for all `p, q`, with `[n,n]` first and `[1,1]` last.
fn indexed(name: &str, n: usize, class: ModuleClass) -> Vec<Letter> {
    let n = n as i64;
    (1..=n).rev().flat_map(|p| (1..=n).rev().map(move |q| Letter::module(name, &[p, q], class))).collect()
}

/// Module letters of a stage (bild first, then urbild) followed by the algebra letters.
///
/// * stage 1: bild `e`, urbild `e[p,q]`
/// * stage 2: bild `e[p,q]`, urbild `f[p,q]`
/// * stage 3: bild `f[p,q]`, urbild `f`
pub fn stage_alphabet(n: usize, stage: u8) -> Result<Alphabet, ResolutionError> {
    let mut letters = match stage {
        1 => {
            let mut v = vec![Letter::module("e", &[], ModuleClass::Bild)];
            v.extend(indexed("e", n, ModuleClass::Urbild));
            v
        }
        2 => {
            let mut v = indexed("e", n, ModuleClass::Bild);
            v.extend(indexed("f", n, ModuleClass::Urbild));
            v
        }
        3 => {
            let mut v = indexed("f", n, ModuleClass::Bild);
            v.push(Letter::module("f", &[], ModuleClass::Urbild));
            v
        }
        s => return Err(ResolutionError::BadStage(s)),
    };
    letters.extend(algebra_letters(n));
    Ok(Alphabet::new(letters).expect("distinct letters"))
}

/// Every generator of every stage plus the algebra letters, for composing maps.
/// Module classes are irrelevant here and all set to bild.
pub fn universal_alphabet(n: usize) -> Alphabet {
    let mut letters = vec![Letter::module("f", &[], ModuleClass::Bild)];
    letters.extend(indexed("f", n, ModuleClass::Bild));
    letters.extend(indexed("e", n, ModuleClass::Bild));
    letters.push(Letter::module("e", &[], ModuleClass::Bild));
    letters.extend(algebra_letters(n));
    Alphabet::new(letters).expect("distinct letters")
}

/// Letter lookup by name inside a stage or universal alphabet.
#[derive(Debug, Clone)]
pub struct StageLetters<'a> {
    pub alphabet: &'a Alphabet,
    pub n: usize,
}

impl<'a> StageLetters<'a> {
    pub fn new(alphabet: &'a Alphabet, n: usize) -> Self {
        StageLetters { alphabet, n }
    }

    fn get(&self, name: &str, idx: &[i64]) -> Polynomial {
        Polynomial::letter(self.id(name, idx))
    }

    pub fn id(&self, name: &str, idx: &[i64]) -> LetterId {
        self.alphabet.expect_id(name, idx)
    }

    pub fn a(&self, i: usize, j: usize) -> Polynomial {
        self.get("a", &[i as i64, j as i64])
    }

    pub fn e0(&self) -> Polynomial {
        self.get("e", &[])
    }

    pub fn e(&self, p: usize, q: usize) -> Polynomial {
        self.get("e", &[p as i64, q as i64])
    }

    pub fn f(&self, p: usize, q: usize) -> Polynomial {
        self.get("f", &[p as i64, q as i64])
    }

    pub fn f0(&self) -> Polynomial {
        self.get("f", &[])
    }
}
