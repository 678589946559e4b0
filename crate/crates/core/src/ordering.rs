//! Quasiorders on words.
//!
//! Letters are compared by alphabet position: a smaller id is a greater letter.
//! Every variant also provides a [`OrderingSpec::key`], an integer vector whose
//! lexicographic order is a linear extension of the ordering. Equivalent words get
//! equal keys, so keys of the parts of a combined ordering can be concatenated.

use std::cmp::Ordering as Cmp;

use serde_json::{json, Value};

use crate::{Alphabet, CoreError, LetterId, ModuleClass, Word};

/// Outcome of comparing two words under a quasiorder.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CompareResult {
    Less,
    Greater,
    Equivalent,
    Incomparable,
}

impl CompareResult {
    fn from_cmp(c: Cmp) -> Self {
        match c {
            Cmp::Less => CompareResult::Less,
            Cmp::Greater => CompareResult::Greater,
            Cmp::Equal => CompareResult::Equivalent,
        }
    }

    pub fn reverse(self) -> Self {
        match self {
            CompareResult::Less => CompareResult::Greater,
            CompareResult::Greater => CompareResult::Less,
            r => r,
        }
    }
}

/// Class code of a letter for [`OrderingSpec::Module`].
pub const CLASS_ALGEBRA: u8 = 0;
pub const CLASS_URBILD: u8 = 1;
pub const CLASS_BILD: u8 = 2;

/// A word ordering. Letter data is indexed by letter id.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OrderingSpec {
    /// Position-wise letter comparison; words of different length are incomparable.
    Protolex,
    /// Lexicographic order, shorter words padded with a letter below all others.
    /// Neither noetherian nor multiplicative.
    Lex,
    /// Compares total weight only; equal weights are equivalent.
    KbWeight(Vec<u64>),
    /// Compares length only.
    Length,
    /// Length, then protolex.
    Canonical,
    /// `a < b` iff `a <₁ b`, or `a ≈₁ b` and `a ≲₂ b`, and so on.
    Combined(Vec<OrderingSpec>),
    /// Syllable ordering for the marked separator letters: the separator projections
    /// are compared canonically, then the syllables between separators position-wise,
    /// each canonically.
    Syllable { separators: Vec<bool> },
    /// Ordering for module-extended systems. Compares, in turn: the number of bild
    /// letters, the number of urbild letters, the length, the vector of syllable
    /// lengths (a longer earlier syllable is greater), the separator projection by
    /// protolex, and the syllables position-wise. Noetherian and multiplicative.
    Module { class: Vec<u8> },
}

fn rank(id: LetterId) -> u64 {
    u64::from(u32::MAX - id)
}

fn cmp_letter(a: LetterId, b: LetterId) -> Cmp {
    b.cmp(&a)
}

fn protolex(a: &[LetterId], b: &[LetterId]) -> CompareResult {
    if a.len() != b.len() {
        return CompareResult::Incomparable;
    }
    for (x, y) in a.iter().zip(b) {
        if x != y {
            return CompareResult::from_cmp(cmp_letter(*x, *y));
        }
    }
    CompareResult::Equivalent
}

fn canonical(a: &[LetterId], b: &[LetterId]) -> CompareResult {
    match a.len().cmp(&b.len()) {
        Cmp::Equal => protolex(a, b),
        c => CompareResult::from_cmp(c),
    }
}

fn canonical_key(w: &[LetterId], out: &mut Vec<u64>) {
    out.push(w.len() as u64);
    out.extend(w.iter().map(|&l| rank(l)));
}

/// Splits `w` into separator projection and syllables.
fn syllables(w: &[LetterId], is_sep: impl Fn(LetterId) -> bool) -> (Vec<LetterId>, Vec<&[LetterId]>) {
    let mut seps = Vec::new();
    let mut syl = Vec::new();
    let mut start = 0;
    for (i, &l) in w.iter().enumerate() {
        if is_sep(l) {
            seps.push(l);
            syl.push(&w[start..i]);
            start = i + 1;
        }
    }
    syl.push(&w[start..]);
    (seps, syl)
}

impl OrderingSpec {
    pub fn canonical() -> Self {
        OrderingSpec::Canonical
    }

    /// Syllable ordering with separators taken from the module letters of `alphabet`.
    pub fn syllable_for(alphabet: &Alphabet) -> Self {
        OrderingSpec::Syllable { separators: alphabet.letters().iter().map(|l| l.is_module()).collect() }
    }

    /// Module ordering with classes taken from `alphabet`.
    pub fn module_for(alphabet: &Alphabet) -> Self {
        let class = (0..alphabet.len() as LetterId)
            .map(|id| match alphabet.class(id) {
                None => CLASS_ALGEBRA,
                Some(ModuleClass::Urbild) => CLASS_URBILD,
                Some(ModuleClass::Bild) => CLASS_BILD,
            })
            .collect();
        OrderingSpec::Module { class }
    }

    /// Compares two words. Words must only contain letters of the alphabet the
    /// ordering was built for.
    pub fn compare(&self, a: &Word, b: &Word) -> CompareResult {
        self.compare_slices(a.as_slice(), b.as_slice())
    }

    fn compare_slices(&self, a: &[LetterId], b: &[LetterId]) -> CompareResult {
        match self {
            OrderingSpec::Protolex => protolex(a, b),
            OrderingSpec::Lex => {
                for i in 0..a.len().max(b.len()) {
                    match (a.get(i), b.get(i)) {
                        (Some(x), Some(y)) if x == y => continue,
                        (Some(x), Some(y)) => return CompareResult::from_cmp(cmp_letter(*x, *y)),
                        (Some(_), None) => return CompareResult::Greater,
                        (None, Some(_)) => return CompareResult::Less,
                        (None, None) => unreachable!(),
                    }
                }
                CompareResult::Equivalent
            }
            OrderingSpec::KbWeight(wt) => {
                let s = |w: &[LetterId]| w.iter().map(|&l| wt[l as usize]).sum::<u64>();
                CompareResult::from_cmp(s(a).cmp(&s(b)))
            }
            OrderingSpec::Length => CompareResult::from_cmp(a.len().cmp(&b.len())),
            OrderingSpec::Canonical => canonical(a, b),
            OrderingSpec::Combined(parts) => {
                for p in parts {
                    match p.compare_slices(a, b) {
                        CompareResult::Equivalent => continue,
                        r => return r,
                    }
                }
                CompareResult::Equivalent
            }
            OrderingSpec::Syllable { separators } => {
                let is_sep = |l: LetterId| separators[l as usize];
                let (sa, ya) = syllables(a, is_sep);
                let (sb, yb) = syllables(b, is_sep);
                match canonical(&sa, &sb) {
                    CompareResult::Equivalent => {}
                    r => return r,
                }
                for (x, y) in ya.iter().zip(&yb) {
                    match canonical(x, y) {
                        CompareResult::Equivalent => {}
                        r => return r,
                    }
                }
                CompareResult::Equivalent
            }
            OrderingSpec::Module { class } => {
                let count = |w: &[LetterId], c: u8| w.iter().filter(|&&l| class[l as usize] == c).count();
                let head = |w: &[LetterId]| (count(w, CLASS_BILD), count(w, CLASS_URBILD), w.len());
                match head(a).cmp(&head(b)) {
                    Cmp::Equal => {}
                    c => return CompareResult::from_cmp(c),
                }
                let is_sep = |l: LetterId| class[l as usize] != CLASS_ALGEBRA;
                let (sa, ya) = syllables(a, is_sep);
                let (sb, yb) = syllables(b, is_sep);
                let la: Vec<usize> = ya.iter().map(|s| s.len()).collect();
                let lb: Vec<usize> = yb.iter().map(|s| s.len()).collect();
                match la.cmp(&lb) {
                    Cmp::Equal => {}
                    c => return CompareResult::from_cmp(c),
                }
                match protolex(&sa, &sb) {
                    CompareResult::Equivalent => {}
                    r => return r,
                }
                for (x, y) in ya.iter().zip(&yb) {
                    match protolex(x, y) {
                        CompareResult::Equivalent => {}
                        r => return r,
                    }
                }
                CompareResult::Equivalent
            }
        }
    }

    /// Integer key whose lexicographic order extends this ordering linearly.
    /// Equivalent words get equal keys.
    pub fn key(&self, w: &Word) -> Vec<u64> {
        let mut out = Vec::with_capacity(2 * w.len() + 4);
        self.push_key(w.as_slice(), &mut out);
        out
    }

    fn push_key(&self, w: &[LetterId], out: &mut Vec<u64>) {
        match self {
            OrderingSpec::Protolex | OrderingSpec::Canonical => canonical_key(w, out),
            OrderingSpec::Lex => {
                out.extend(w.iter().map(|&l| rank(l) + 1));
                out.push(0);
            }
            OrderingSpec::KbWeight(wt) => out.push(w.iter().map(|&l| wt[l as usize]).sum()),
            OrderingSpec::Length => out.push(w.len() as u64),
            OrderingSpec::Combined(parts) => parts.iter().for_each(|p| p.push_key(w, out)),
            OrderingSpec::Syllable { separators } => {
                let (s, y) = syllables(w, |l| separators[l as usize]);
                canonical_key(&s, out);
                y.iter().for_each(|x| canonical_key(x, out));
            }
            OrderingSpec::Module { class } => {
                let count = |c: u8| w.iter().filter(|&&l| class[l as usize] == c).count() as u64;
                out.extend([count(CLASS_BILD), count(CLASS_URBILD), w.len() as u64]);
                let (s, y) = syllables(w, |l| class[l as usize] != CLASS_ALGEBRA);
                out.extend(y.iter().map(|x| x.len() as u64));
                out.extend(s.iter().map(|&l| rank(l)));
                y.iter().for_each(|x| out.extend(x.iter().map(|&l| rank(l))));
            }
        }
    }

    /// True when the ordering is certified noetherian and multiplicative by construction.
    pub fn is_certified(&self) -> bool {
        match self {
            OrderingSpec::Lex => false,
            OrderingSpec::Combined(parts) => !parts.is_empty() && parts.iter().all(|p| p.is_certified()),
            _ => true,
        }
    }

    /// Checks the ordering's letter data against an alphabet size.
    pub fn validate(&self, n_letters: usize) -> Result<(), CoreError> {
        let bad = |m: &str| Err(CoreError::BadOrdering(m.to_string()));
        match self {
            OrderingSpec::KbWeight(w) => {
                if w.len() != n_letters {
                    return bad("kbweight needs one weight per letter");
                }
                if w.contains(&0) {
                    return bad("kbweight weights must be positive");
                }
                Ok(())
            }
            OrderingSpec::Combined(parts) => {
                if parts.is_empty() {
                    return bad("combined ordering needs at least one part");
                }
                parts.iter().try_for_each(|p| p.validate(n_letters))
            }
            OrderingSpec::Syllable { separators } if separators.len() != n_letters => bad("separator mask size"),
            OrderingSpec::Module { class } if class.len() != n_letters => bad("class vector size"),
            _ => Ok(()),
        }
    }

    /// Parses the JSON form, resolving letter names against `alphabet`.
    pub fn from_json(v: &Value, alphabet: &Alphabet) -> Result<Self, CoreError> {
        let bad = |m: String| CoreError::BadOrdering(m);
        let ty = v.get("type").and_then(Value::as_str).ok_or_else(|| bad("missing \"type\"".into()))?;
        let spec = match ty {
            "protolex" => OrderingSpec::Protolex,
            "lex" => OrderingSpec::Lex,
            "length" => OrderingSpec::Length,
            "canonical" => OrderingSpec::Canonical,
            "kbweight" => {
                let map = v.get("weights").and_then(Value::as_object).ok_or_else(|| bad("missing weights".into()))?;
                let mut w = vec![0u64; alphabet.len()];
                for (tok, val) in map {
                    let id = alphabet.parse_letter(tok)?;
                    w[id as usize] = val.as_u64().ok_or_else(|| bad(format!("weight of {tok}")))?;
                }
                OrderingSpec::KbWeight(w)
            }
            "combined" => {
                let parts = v.get("parts").and_then(Value::as_array).ok_or_else(|| bad("missing parts".into()))?;
                OrderingSpec::Combined(parts.iter().map(|p| OrderingSpec::from_json(p, alphabet)).collect::<Result<_, _>>()?)
            }
            "syllable" => match v.get("separators").and_then(Value::as_array) {
                None => OrderingSpec::syllable_for(alphabet),
                Some(list) => {
                    let mut mask = vec![false; alphabet.len()];
                    for t in list {
                        let tok = t.as_str().ok_or_else(|| bad("separator must be a string".into()))?;
                        mask[alphabet.parse_letter(tok)? as usize] = true;
                    }
                    OrderingSpec::Syllable { separators: mask }
                }
            },
            "module" => OrderingSpec::module_for(alphabet),
            other => return Err(bad(format!("unknown ordering type `{other}`"))),
        };
        spec.validate(alphabet.len())?;
        Ok(spec)
    }

    pub fn to_json(&self, alphabet: &Alphabet) -> Value {
        let tok = |i: usize| alphabet.letter(i as LetterId).token();
        match self {
            OrderingSpec::Protolex => json!({"type": "protolex"}),
            OrderingSpec::Lex => json!({"type": "lex"}),
            OrderingSpec::Length => json!({"type": "length"}),
            OrderingSpec::Canonical => json!({"type": "canonical"}),
            OrderingSpec::KbWeight(w) => {
                let m: serde_json::Map<String, Value> = w.iter().enumerate().map(|(i, x)| (tok(i), json!(x))).collect();
                json!({"type": "kbweight", "weights": m})
            }
            OrderingSpec::Combined(parts) => {
                json!({"type": "combined", "parts": parts.iter().map(|p| p.to_json(alphabet)).collect::<Vec<_>>()})
            }
            OrderingSpec::Syllable { separators } => {
                let s: Vec<String> = separators.iter().enumerate().filter(|(_, b)| **b).map(|(i, _)| tok(i)).collect();
                json!({"type": "syllable", "separators": s})
            }
            OrderingSpec::Module { .. } => json!({"type": "module"}),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    // a1 < a2 < a3 as ids 2, 1, 0
    fn alpha() -> Alphabet {
        Alphabet::from_tokens(&["b2", "b1", "a3", "a2", "a1"]).unwrap()
    }

    fn w(a: &Alphabet, s: &str) -> Word {
        a.parse_word(s).unwrap()
    }

    #[test]
    fn canonical_examples() {
        let a = alpha();
        let c = OrderingSpec::Canonical;
        assert_eq!(c.compare(&w(&a, "a3"), &w(&a, "a1a2")), CompareResult::Less);
        assert_eq!(c.compare(&w(&a, "a1a2"), &w(&a, "a3a1")), CompareResult::Less);
    }

    #[test]
    fn syllable_examples() {
        let a = alpha();
        let s = OrderingSpec::Syllable { separators: vec![true, true, false, false, false] };
        assert_eq!(s.compare(&w(&a, "a3b1a3"), &w(&a, "a1b2a1a2")), CompareResult::Less);
        assert_eq!(s.compare(&w(&a, "a3a2a3"), &w(&a, "b1")), CompareResult::Less);
        assert_eq!(s.compare(&w(&a, "a2b1a3a2"), &w(&a, "a1a3b1")), CompareResult::Less);
    }

    #[test]
    fn lex_descends_forever() {
        let a = Alphabet::from_tokens(&["b", "a"]).unwrap();
        let chain = ["b", "ab", "aab", "aaab"];
        for p in chain.windows(2) {
            assert_eq!(OrderingSpec::Lex.compare(&w(&a, p[0]), &w(&a, p[1])), CompareResult::Greater);
        }
        assert!(!OrderingSpec::Lex.is_certified());
    }

    #[test]
    fn quasi_results() {
        let a = alpha();
        assert_eq!(OrderingSpec::Length.compare(&w(&a, "a1a2"), &w(&a, "a2a1")), CompareResult::Equivalent);
        assert_eq!(OrderingSpec::Protolex.compare(&w(&a, "a1"), &w(&a, "a2a1")), CompareResult::Incomparable);
        let kb = OrderingSpec::KbWeight(vec![1, 1, 2, 1, 3]);
        assert_eq!(kb.compare(&w(&a, "a1"), &w(&a, "a3a2")), CompareResult::Equivalent);
    }

    #[test]
    fn json_round_trip() {
        let a = alpha();
        for v in [
            json!({"type": "canonical"}),
            json!({"type": "combined", "parts": [{"type": "length"}, {"type": "protolex"}]}),
            json!({"type": "syllable", "separators": ["b2", "b1"]}),
            json!({"type": "kbweight", "weights": {"b2": 1, "b1": 1, "a3": 2, "a2": 1, "a1": 3}}),
        ] {
            let o = OrderingSpec::from_json(&v, &a).unwrap();
            assert_eq!(OrderingSpec::from_json(&o.to_json(&a), &a).unwrap(), o);
        }
        assert!(OrderingSpec::from_json(&json!({"type": "kbweight", "weights": {"a1": 0}}), &a).is_err());
    }
}
