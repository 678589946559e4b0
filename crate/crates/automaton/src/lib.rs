//! Forbidden-factor automata: a DFA accepting exactly the words with no factor in a
//! finite forbidden set, built from the failure-link (Aho-Corasick) construction, with
//! exact word counting by transfer matrix.

use std::collections::{BTreeMap, HashMap, VecDeque};

use ncrw_core::{Alphabet, LetterId, Word};
use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum AutomatonError {
    #[error("letter id {0} is outside the automaton alphabet")]
    UnknownLetter(LetterId),
    #[error("unknown letter token {0}")]
    UnknownToken(String),
    #[error("forbidden words must be nonempty")]
    EmptyForbidden,
    #[error("malformed automaton: {0}")]
    Malformed(String),
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
}

/// A total DFA over letter ids `0..letters.len()`. State 0 is the start state; every
/// state except `dead` is accepting and `dead` absorbs all letters.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Dfa {
    letters: Vec<String>,
    trans: Vec<Vec<u32>>,
    dead: u32,
}

impl Dfa {
    /// Builds the factor automaton of `forbidden` over `alphabet`.
    pub fn build(forbidden: &[Word], alphabet: &Alphabet) -> Result<Dfa, AutomatonError> {
        let k = alphabet.len();
        let letters = alphabet.letters().iter().map(|l| l.token()).collect();
        // Trie of forbidden words.
        let mut goto: Vec<Vec<Option<u32>>> = vec![vec![None; k]];
        let mut out = vec![false];
        for w in forbidden {
            if w.is_empty() {
                return Err(AutomatonError::EmptyForbidden);
            }
            let mut cur = 0usize;
            for l in w.iter() {
                if l as usize >= k {
                    return Err(AutomatonError::UnknownLetter(l));
                }
                cur = match goto[cur][l as usize] {
                    Some(n) => n as usize,
                    None => {
                        goto.push(vec![None; k]);
                        out.push(false);
                        let n = goto.len() - 1;
                        goto[cur][l as usize] = Some(n as u32);
                        n
                    }
                };
            }
            out[cur] = true;
        }
        // Failure links in breadth-first order complete the transition function.
        let nodes = goto.len();
        let mut delta = vec![vec![0u32; k]; nodes];
        let mut fail = vec![0u32; nodes];
        let mut queue = VecDeque::new();
        for c in 0..k {
            match goto[0][c] {
                Some(n) => {
                    delta[0][c] = n;
                    queue.push_back(n as usize);
                }
                None => delta[0][c] = 0,
            }
        }
        while let Some(u) = queue.pop_front() {
            out[u] = out[u] || out[fail[u] as usize];
            for c in 0..k {
                match goto[u][c] {
                    Some(v) => {
                        fail[v as usize] = delta[fail[u] as usize][c];
                        delta[u][c] = v;
                        queue.push_back(v as usize);
                    }
                    None => delta[u][c] = delta[fail[u] as usize][c],
                }
            }
        }
        // Collapse every node that has seen a forbidden word into one dead state.
        let mut index = vec![u32::MAX; nodes];
        let mut live = 0u32;
        for u in 0..nodes {
            if !out[u] {
                index[u] = live;
                live += 1;
            }
        }
        let dead = live;
        let mut trans = Vec::with_capacity(live as usize + 1);
        for u in 0..nodes {
            if !out[u] {
                trans.push(delta[u].iter().map(|&v| if out[v as usize] { dead } else { index[v as usize] }).collect());
            }
        }
        trans.push(vec![dead; k]);
        Ok(Dfa { letters, trans, dead })
    }

    pub fn letters(&self) -> &[String] {
        &self.letters
    }

    /// Number of states including the dead state.
    pub fn num_states(&self) -> usize {
        self.trans.len()
    }

    pub fn dead(&self) -> u32 {
        self.dead
    }

    pub fn step(&self, state: u32, letter: LetterId) -> u32 {
        self.trans[state as usize][letter as usize]
    }

    /// Runs `w` from the start state.
    pub fn run(&self, w: &Word) -> Result<u32, AutomatonError> {
        let mut s = 0;
        for l in w.iter() {
            if l as usize >= self.letters.len() {
                return Err(AutomatonError::UnknownLetter(l));
            }
            s = self.step(s, l);
        }
        Ok(s)
    }

    /// True iff `w` has no forbidden factor.
    pub fn is_irreducible(&self, w: &Word) -> Result<bool, AutomatonError> {
        Ok(self.run(w)? != self.dead)
    }

    /// Parses a word written in the automaton's letter tokens.
    pub fn parse_word(&self, text: &str) -> Result<Word, AutomatonError> {
        let alphabet = Alphabet::from_tokens(&self.letters).map_err(|e| AutomatonError::Malformed(e.to_string()))?;
        alphabet.parse_word(text).map_err(|_| AutomatonError::UnknownToken(text.to_string()))
    }

    /// `m[i][j]` = number of letters leading from live state `i` to live state `j`.
    pub fn transfer_matrix(&self) -> Vec<Vec<u64>> {
        let live = self.dead as usize;
        let mut m = vec![vec![0u64; live]; live];
        for (i, row) in self.trans.iter().enumerate().take(live) {
            for &t in row {
                if t != self.dead {
                    m[i][t as usize] += 1;
                }
            }
        }
        m
    }

    /// Number of accepted words of exactly `length` letters: the start row of the
    /// `length`-th power of the transfer matrix, summed.
    pub fn count_words(&self, length: usize) -> BigUint {
        let m = self.transfer_matrix();
        let live = m.len();
        let mut v = vec![BigUint::zero(); live];
        v[0] = BigUint::one();
        for _ in 0..length {
            let mut next = vec![BigUint::zero(); live];
            for (i, vi) in v.iter().enumerate() {
                if vi.is_zero() {
                    continue;
                }
                for (j, &c) in m[i].iter().enumerate() {
                    if c != 0 {
                        next[j] += vi * c;
                    }
                }
            }
            v = next;
        }
        v.into_iter().sum()
    }

    /// The minimal equivalent DFA (Moore partition refinement), start state first.
    pub fn minimize(&self) -> Dfa {
        let n = self.trans.len();
        let k = self.letters.len();
        // Drop unreachable states first.
        let mut reach = vec![false; n];
        let mut stack = vec![0usize];
        reach[0] = true;
        while let Some(s) = stack.pop() {
            for &t in &self.trans[s] {
                if !reach[t as usize] {
                    reach[t as usize] = true;
                    stack.push(t as usize);
                }
            }
        }
        reach[self.dead as usize] = true;
        let mut class: Vec<usize> = (0..n).map(|s| usize::from(s as u32 == self.dead)).collect();
        loop {
            let mut sig: HashMap<(usize, Vec<usize>), usize> = HashMap::new();
            let mut next = vec![0; n];
            for s in (0..n).filter(|&s| reach[s]) {
                let key = (class[s], self.trans[s].iter().map(|&t| class[t as usize]).collect());
                let id = sig.len();
                next[s] = *sig.entry(key).or_insert(id);
            }
            let before = (0..n).filter(|&s| reach[s]).map(|s| class[s]).collect::<std::collections::BTreeSet<_>>().len();
            class = next;
            if sig.len() == before {
                break;
            }
        }
        // Renumber: start first, dead last.
        let mut order: Vec<usize> = Vec::new();
        let mut id_of: BTreeMap<usize, u32> = BTreeMap::new();
        let dead_class = class[self.dead as usize];
        let mut queue = VecDeque::from([0usize]);
        let mut seen = vec![false; n];
        seen[0] = true;
        while let Some(s) = queue.pop_front() {
            if class[s] != dead_class && !id_of.contains_key(&class[s]) {
                id_of.insert(class[s], order.len() as u32);
                order.push(s);
            }
            for &t in &self.trans[s] {
                if !seen[t as usize] {
                    seen[t as usize] = true;
                    queue.push_back(t as usize);
                }
            }
        }
        let dead = order.len() as u32;
        id_of.insert(dead_class, dead);
        let mut trans: Vec<Vec<u32>> = order.iter().map(|&s| self.trans[s].iter().map(|&t| id_of[&class[t as usize]]).collect()).collect();
        trans.push(vec![dead; k]);
        Dfa { letters: self.letters.clone(), trans, dead }
    }

    pub fn to_json(&self) -> DfaJson {
        let transitions = self
            .trans
            .iter()
            .enumerate()
            .filter(|(s, _)| *s as u32 != self.dead)
            .map(|(s, row)| {
                let m = row
                    .iter()
                    .enumerate()
                    .filter(|(_, &t)| t != self.dead)
                    .map(|(l, &t)| (self.letters[l].clone(), t))
                    .collect();
                (s.to_string(), m)
            })
            .collect();
        DfaJson { letters: self.letters.clone(), states: self.trans.len(), start: 0, dead: self.dead, transitions }
    }

    /// Rebuilds from JSON; missing transitions go to the dead state.
    pub fn from_json(j: &DfaJson) -> Result<Dfa, AutomatonError> {
        if j.start != 0 || j.dead as usize >= j.states {
            return Err(AutomatonError::Malformed("start must be 0 and dead a valid state".into()));
        }
        let pos: HashMap<&str, usize> = j.letters.iter().enumerate().map(|(i, l)| (l.as_str(), i)).collect();
        let mut trans = vec![vec![j.dead; j.letters.len()]; j.states];
        for (s, row) in &j.transitions {
            let s: usize = s.parse().map_err(|_| AutomatonError::Malformed(format!("state {s}")))?;
            if s >= j.states || s as u32 == j.dead {
                return Err(AutomatonError::Malformed(format!("state {s}")));
            }
            for (l, &t) in row {
                let li = *pos.get(l.as_str()).ok_or_else(|| AutomatonError::UnknownToken(l.clone()))?;
                if t as usize >= j.states {
                    return Err(AutomatonError::Malformed(format!("target {t}")));
                }
                trans[s][li] = t;
            }
        }
        let dead = j.dead;
        // The JSON dead state may sit anywhere; move it last so live states are 0..dead.
        let mut perm: Vec<u32> = (0..j.states as u32).filter(|&s| s != dead).collect();
        perm.push(dead);
        let mut inv = vec![0u32; j.states];
        for (new, &old) in perm.iter().enumerate() {
            inv[old as usize] = new as u32;
        }
        let trans = perm.iter().map(|&old| trans[old as usize].iter().map(|&t| inv[t as usize]).collect()).collect();
        Ok(Dfa { letters: j.letters.clone(), trans, dead: j.states as u32 - 1 })
    }

    /// Graphviz rendering of the live part.
    pub fn to_dot(&self) -> String {
        let mut s = String::from("digraph dfa {\n  rankdir=LR;\n");
        for (i, row) in self.trans.iter().enumerate().take(self.dead as usize) {
            let mut by_target: BTreeMap<u32, Vec<&str>> = BTreeMap::new();
            for (l, &t) in row.iter().enumerate() {
                if t != self.dead {
                    by_target.entry(t).or_default().push(&self.letters[l]);
                }
            }
            for (t, ls) in by_target {
                s.push_str(&format!("  {i} -> {t} [label=\"{}\"];\n", ls.join(",")));
            }
        }
        s.push_str("}\n");
        s
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DfaJson {
    pub letters: Vec<String>,
    pub states: usize,
    pub start: u32,
    pub dead: u32,
    /// Live transitions only, keyed by state then letter token.
    pub transitions: BTreeMap<String, BTreeMap<String, u32>>,
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn forbid_aa() {
        let a = Alphabet::from_tokens(&["b", "a"]).unwrap();
        let d = Dfa::build(&[a.parse_word("aa").unwrap()], &a).unwrap();
        for (w, ok) in [("bbb", true), ("ab", true), ("bab", true), ("baab", false), ("1", true)] {
            assert_eq!(d.is_irreducible(&a.parse_word(w).unwrap()).unwrap(), ok, "{w}");
        }
        // Fibonacci counts.
        let counts: Vec<u64> = (0..8).map(|l| d.count_words(l).try_into().unwrap()).collect();
        assert_eq!(counts, vec![1, 2, 3, 5, 8, 13, 21, 34]);
    }

    #[test]
    fn json_round_trip() {
        let a = Alphabet::from_tokens(&["b", "a"]).unwrap();
        let d = Dfa::build(&[a.parse_word("aba").unwrap(), a.parse_word("bb").unwrap()], &a).unwrap();
        let j = serde_json::to_string(&d.to_json()).unwrap();
        let back = Dfa::from_json(&serde_json::from_str(&j).unwrap()).unwrap();
        assert_eq!(back, d);
    }
}
