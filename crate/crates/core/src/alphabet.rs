//! Letters and ordered alphabets.

use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::{CoreError, Word};

/// Index of a letter inside its alphabet. Smaller ids are greater letters.
pub type LetterId = u32;

/// Which side of a module homomorphism a module generator belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ModuleClass {
    /// Generator of the source module.
    Urbild,
    /// Generator of the target module.
    Bild,
}

/// Algebra letter or module generator.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum LetterKind {
    Algebra,
    Module(ModuleClass),
}

/// A letter `name` or `name[i,j,...]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Letter {
    pub name: String,
    pub indices: Vec<i64>,
    pub kind: LetterKind,
}

impl Letter {
    pub fn algebra(name: &str, indices: &[i64]) -> Self {
        Letter { name: name.to_string(), indices: indices.to_vec(), kind: LetterKind::Algebra }
    }

    pub fn module(name: &str, indices: &[i64], class: ModuleClass) -> Self {
        Letter { name: name.to_string(), indices: indices.to_vec(), kind: LetterKind::Module(class) }
    }

    /// Text form `name` or `name[i,j]`.
    pub fn token(&self) -> String {
        if self.indices.is_empty() {
            self.name.clone()
        } else {
            let idx: Vec<String> = self.indices.iter().map(|i| i.to_string()).collect();
            format!("{}[{}]", self.name, idx.join(","))
        }
    }

    /// Parses a single token into `(name, indices)`.
    pub fn parse_token(s: &str) -> Result<(String, Vec<i64>), CoreError> {
        let bad = || CoreError::BadToken(s.to_string());
        let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let (name, rest) = match t.find('[') {
            Some(i) => (&t[..i], Some(&t[i..])),
            None => (t.as_str(), None),
        };
        if name.is_empty() || !name.chars().all(|c| c.is_alphanumeric() || c == '_' || c == '\'') {
            return Err(bad());
        }
        let indices = match rest {
            None => Vec::new(),
            Some(r) => {
                let inner = r.strip_prefix('[').and_then(|r| r.strip_suffix(']')).ok_or_else(bad)?;
                inner
                    .split(',')
                    .map(|x| x.parse::<i64>().map_err(|_| bad()))
                    .collect::<Result<Vec<_>, _>>()?
            }
        };
        Ok((name.to_string(), indices))
    }

    pub fn is_module(&self) -> bool {
        matches!(self.kind, LetterKind::Module(_))
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.token())
    }
}

/// A finite totally ordered alphabet, greatest letter first.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Alphabet {
    letters: Vec<Letter>,
    lookup: HashMap<(String, Vec<i64>), LetterId>,
}

impl Alphabet {
    pub fn new(letters: Vec<Letter>) -> Result<Self, CoreError> {
        let mut lookup = HashMap::with_capacity(letters.len());
        for (i, l) in letters.iter().enumerate() {
            if lookup.insert((l.name.clone(), l.indices.clone()), i as LetterId).is_some() {
                return Err(CoreError::DuplicateLetter(l.token()));
            }
        }
        Ok(Alphabet { letters, lookup })
    }

    /// Alphabet of plain algebra letters given by tokens, greatest first.
    pub fn from_tokens<S: AsRef<str>>(tokens: &[S]) -> Result<Self, CoreError> {
        let letters = tokens
            .iter()
            .map(|t| Letter::parse_token(t.as_ref()).map(|(n, i)| Letter { name: n, indices: i, kind: LetterKind::Algebra }))
            .collect::<Result<Vec<_>, _>>()?;
        Alphabet::new(letters)
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn letter(&self, id: LetterId) -> &Letter {
        &self.letters[id as usize]
    }

    pub fn id(&self, name: &str, indices: &[i64]) -> Option<LetterId> {
        self.lookup.get(&(name.to_string(), indices.to_vec())).copied()
    }

    /// Like [`Alphabet::id`] but panics on a missing letter; for generated alphabets.
    pub fn expect_id(&self, name: &str, indices: &[i64]) -> LetterId {
        self.id(name, indices).unwrap_or_else(|| panic!("letter {name}{indices:?} not in alphabet"))
    }

    /// Resolves one letter token.
    pub fn parse_letter(&self, token: &str) -> Result<LetterId, CoreError> {
        let (name, idx) = Letter::parse_token(token)?;
        self.id(&name, &idx).ok_or_else(|| CoreError::UnknownLetter(token.trim().to_string()))
    }

    /// Parses a word written as concatenated tokens, e.g. `a[1,1]a[2,2]` or `aba`.
    /// Tokens may be separated by whitespace, `*` or `·`. Matching is longest-first.
    /// The strings `1` and the empty string denote the empty word.
    pub fn parse_word(&self, text: &str) -> Result<Word, CoreError> {
        let t: String = text.chars().filter(|c| !c.is_whitespace() && *c != '*' && *c != '·').collect();
        if t.is_empty() || t == "1" {
            return Ok(Word::empty());
        }
        let mut tokens: Vec<(String, LetterId)> =
            self.letters.iter().enumerate().map(|(i, l)| (l.token(), i as LetterId)).collect();
        tokens.sort_by_key(|t| std::cmp::Reverse(t.0.len()));
        let mut out = Vec::new();
        let mut rest = t.as_str();
        while !rest.is_empty() {
            let hit = tokens.iter().find(|(tok, _)| rest.starts_with(tok.as_str()));
            match hit {
                Some((tok, id)) => {
                    out.push(*id);
                    rest = &rest[tok.len()..];
                }
                None => return Err(CoreError::UnknownLetter(rest.to_string())),
            }
        }
        Ok(Word::from(out))
    }

    /// Parses a list of letter tokens into a word.
    pub fn parse_tokens<S: AsRef<str>>(&self, tokens: &[S]) -> Result<Word, CoreError> {
        tokens.iter().map(|t| self.parse_letter(t.as_ref())).collect::<Result<Vec<_>, _>>().map(Word::from)
    }

    pub fn render_word(&self, w: &Word) -> String {
        if w.is_empty() {
            return "1".to_string();
        }
        w.iter().map(|id| self.letter(id).token()).collect::<Vec<_>>().join("")
    }

    pub fn word_tokens(&self, w: &Word) -> Vec<String> {
        w.iter().map(|id| self.letter(id).token()).collect()
    }

    pub fn is_module(&self, id: LetterId) -> bool {
        self.letter(id).is_module()
    }

    pub fn class(&self, id: LetterId) -> Option<ModuleClass> {
        match self.letter(id).kind {
            LetterKind::Module(c) => Some(c),
            LetterKind::Algebra => None,
        }
    }

    /// Maps every letter of `self` to the letter with the same name and indices in `target`.
    pub fn translation_to(&self, target: &Alphabet) -> Result<Vec<LetterId>, CoreError> {
        self.letters
            .iter()
            .map(|l| target.id(&l.name, &l.indices).ok_or_else(|| CoreError::UnknownLetter(l.token())))
            .collect()
    }

    pub fn check_word(&self, w: &Word) -> Result<(), CoreError> {
        match w.iter().find(|&id| id as usize >= self.letters.len()) {
            Some(id) => Err(CoreError::LetterOutOfRange(id)),
            None => Ok(()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tokens_round_trip() {
        assert_eq!(Letter::parse_token("a[2,1]").unwrap(), ("a".to_string(), vec![2, 1]));
        assert_eq!(Letter::parse_token("f").unwrap(), ("f".to_string(), vec![]));
        assert!(Letter::parse_token("a[1,").is_err());
        assert!(Letter::parse_token("").is_err());
        assert_eq!(Letter::algebra("e", &[1, 3]).token(), "e[1,3]");
    }

    #[test]
    fn parse_words_longest_match() {
        let a = Alphabet::from_tokens(&["b", "a", "ab"]).unwrap();
        let w = a.parse_word("aba").unwrap();
        assert_eq!(a.render_word(&w), "aba");
        assert_eq!(w.len(), 2);
        let b = Alphabet::from_tokens(&["a[1,1]", "a[1,2]"]).unwrap();
        let w = b.parse_word("a[1,1] a[1,2]a[1,1]").unwrap();
        assert_eq!(w.as_slice(), &[0, 1, 0]);
        assert!(b.parse_word("a[3,3]").is_err());
        assert!(b.parse_word("1").unwrap().is_empty());
    }

    #[test]
    fn duplicates_rejected() {
        assert!(Alphabet::from_tokens(&["a", "a"]).is_err());
    }
}
