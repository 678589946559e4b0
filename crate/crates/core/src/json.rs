//! JSON forms of letters, alphabets and polynomials.

use serde::{Deserialize, Serialize};

use crate::{format_scalar, parse_scalar, Alphabet, CoreError, Letter, LetterKind, ModuleClass, Polynomial};

/// One polynomial term: `{"c":"-1","w":["a[1,2]","a[2,2]"]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub c: String,
    pub w: Vec<String>,
}

/// Alphabet entry: a bare token for an algebra letter, or an object for a module generator.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum LetterJson {
    Token(String),
    Full {
        letter: String,
        #[serde(default)]
        kind: Option<String>,
        #[serde(default)]
        class: Option<ModuleClass>,
    },
}

impl LetterJson {
    pub fn to_letter(&self) -> Result<Letter, CoreError> {
        match self {
            LetterJson::Token(t) => {
                let (name, indices) = Letter::parse_token(t)?;
                Ok(Letter { name, indices, kind: LetterKind::Algebra })
            }
            LetterJson::Full { letter, kind, class } => {
                let (name, indices) = Letter::parse_token(letter)?;
                let kind = match (kind.as_deref(), class) {
                    (None | Some("algebra"), None) => LetterKind::Algebra,
                    (None | Some("module"), Some(c)) => LetterKind::Module(*c),
                    (Some("module"), None) => LetterKind::Module(ModuleClass::Bild),
                    _ => return Err(CoreError::BadToken(letter.clone())),
                };
                Ok(Letter { name, indices, kind })
            }
        }
    }

    pub fn from_letter(l: &Letter) -> Self {
        match l.kind {
            LetterKind::Algebra => LetterJson::Token(l.token()),
            LetterKind::Module(c) => LetterJson::Full { letter: l.token(), kind: Some("module".into()), class: Some(c) },
        }
    }
}

pub fn alphabet_from_json(entries: &[LetterJson]) -> Result<Alphabet, CoreError> {
    Alphabet::new(entries.iter().map(LetterJson::to_letter).collect::<Result<_, _>>()?)
}

pub fn alphabet_to_json(a: &Alphabet) -> Vec<LetterJson> {
    a.letters().iter().map(LetterJson::from_letter).collect()
}

pub fn poly_from_json(terms: &[TermJson], alphabet: &Alphabet) -> Result<Polynomial, CoreError> {
    let mut p = Polynomial::zero();
    for t in terms {
        p.add_term(alphabet.parse_tokens(&t.w)?, parse_scalar(&t.c)?);
    }
    Ok(p)
}

/// Terms in descending raw word order, so output is deterministic.
pub fn poly_to_json(p: &Polynomial, alphabet: &Alphabet) -> Vec<TermJson> {
    p.terms().rev().map(|(w, c)| TermJson { c: format_scalar(c), w: alphabet.word_tokens(w) }).collect()
}
