use std::collections::HashMap;

use ncrw_core::{Alphabet, CompareResult, LetterId, OrderingSpec, Polynomial, Word};

use crate::RewriteError;

/// An oriented relation `lhs -> rhs`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Rule {
    pub lhs: Word,
    pub rhs: Polynomial,
    pub tag: Option<String>,
}

impl Rule {
    pub fn new(lhs: Word, rhs: Polynomial) -> Self {
        Rule { lhs, rhs, tag: None }
    }

    pub fn tagged(lhs: Word, rhs: Polynomial, tag: impl Into<String>) -> Self {
        Rule { lhs, rhs, tag: Some(tag.into()) }
    }

    /// `lhs - rhs`, the relation the rule encodes.
    pub fn difference(&self) -> Polynomial {
        Polynomial::monomial(self.lhs.clone()) - self.rhs.clone()
    }

    /// True iff every word of the right-hand side is strictly smaller than the lhs.
    pub fn is_strictly_decreasing(&self, ord: &OrderingSpec) -> bool {
        self.rhs.support().all(|w| ord.compare(w, &self.lhs) == CompareResult::Less)
    }

    /// Family label: the tag up to `[` plus the number of indices, e.g. `Z~/2`.
    pub fn family(&self) -> String {
        match &self.tag {
            None => "?".to_string(),
            Some(t) => match t.split_once('[') {
                None => format!("{t}/0"),
                Some((head, rest)) => format!("{head}/{}", rest.trim_end_matches(']').split(',').count()),
            },
        }
    }

    pub fn label(&self, index: usize) -> String {
        self.tag.clone().unwrap_or_else(|| format!("#{index}"))
    }
}

#[derive(Debug, Clone, Default)]
struct TrieNode {
    next: HashMap<LetterId, usize>,
    /// Rules whose lhs ends at this node, ascending.
    rules: Vec<usize>,
}

/// Prefix tree over rule left-hand sides.
#[derive(Debug, Clone)]
struct Trie {
    nodes: Vec<TrieNode>,
}

impl Trie {
    fn build(rules: &[Rule]) -> Self {
        let mut nodes = vec![TrieNode::default()];
        for (i, r) in rules.iter().enumerate() {
            let mut cur = 0;
            for l in r.lhs.iter() {
                cur = match nodes[cur].next.get(&l) {
                    Some(&n) => n,
                    None => {
                        nodes.push(TrieNode::default());
                        let n = nodes.len() - 1;
                        nodes[cur].next.insert(l, n);
                        n
                    }
                };
            }
            nodes[cur].rules.push(i);
        }
        Trie { nodes }
    }

    /// Lowest-index rule whose lhs occurs at `pos`.
    fn first_match(&self, w: &[LetterId], pos: usize) -> Option<usize> {
        let mut node = 0;
        let mut best: Option<usize> = None;
        for l in &w[pos..] {
            match self.nodes[node].next.get(l) {
                None => break,
                Some(&n) => {
                    node = n;
                    if let Some(&r) = self.nodes[n].rules.first() {
                        best = Some(best.map_or(r, |b| b.min(r)));
                    }
                }
            }
        }
        best
    }

    /// Every rule whose lhs occurs at `pos`.
    fn matches_at(&self, w: &[LetterId], pos: usize) -> Vec<usize> {
        let mut node = 0;
        let mut out = Vec::new();
        for l in &w[pos..] {
            match self.nodes[node].next.get(l) {
                None => break,
                Some(&n) => {
                    node = n;
                    out.extend_from_slice(&self.nodes[n].rules);
                }
            }
        }
        out
    }
}

/// Rules over an ordered alphabet with a certified ordering.
#[derive(Debug, Clone)]
pub struct RewriteSystem {
    alphabet: Alphabet,
    ordering: OrderingSpec,
    rules: Vec<Rule>,
    trie: Trie,
}

impl RewriteSystem {
    /// Validates letters, orientation and the ordering certificate.
    pub fn new(alphabet: Alphabet, ordering: OrderingSpec, rules: Vec<Rule>) -> Result<Self, RewriteError> {
        if ordering == OrderingSpec::Lex {
            return Err(RewriteError::LexOrderingRejected);
        }
        if !ordering.is_certified() {
            return Err(RewriteError::UncertifiedOrdering);
        }
        ordering.validate(alphabet.len())?;
        for (i, r) in rules.iter().enumerate() {
            if r.lhs.is_empty() {
                return Err(RewriteError::EmptyLhs(i));
            }
            alphabet.check_word(&r.lhs)?;
            for w in r.rhs.support() {
                alphabet.check_word(w)?;
            }
            if !r.rhs.coeff(&r.lhs).eq(&num_traits::Zero::zero()) {
                return Err(RewriteError::LhsInRhs(i));
            }
            if !r.is_strictly_decreasing(&ordering) {
                return Err(RewriteError::NotDecreasing { index: i, tag: r.label(i) });
            }
        }
        let trie = Trie::build(&rules);
        Ok(RewriteSystem { alphabet, ordering, rules, trie })
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn ordering(&self) -> &OrderingSpec {
        &self.ordering
    }

    pub fn rules(&self) -> &[Rule] {
        &self.rules
    }

    pub fn rule(&self, i: usize) -> &Rule {
        &self.rules[i]
    }

    pub fn len(&self) -> usize {
        self.rules.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rules.is_empty()
    }

    /// Leftmost redex; among rules matching there, the lowest index.
    pub fn find_redex(&self, w: &Word) -> Option<(usize, usize)> {
        let s = w.as_slice();
        (0..s.len()).find_map(|pos| self.trie.first_match(s, pos).map(|r| (pos, r)))
    }

    /// Every `(position, rule)` pair that applies to `w`.
    pub fn all_redexes(&self, w: &Word) -> Vec<(usize, usize)> {
        let s = w.as_slice();
        (0..s.len()).flat_map(|pos| self.trie.matches_at(s, pos).into_iter().map(move |r| (pos, r))).collect()
    }

    pub fn is_irreducible(&self, w: &Word) -> bool {
        self.find_redex(w).is_none()
    }

    /// The same rules re-expressed over `target` (letters matched by name and indices).
    pub fn translate(&self, target: &Alphabet, ordering: OrderingSpec) -> Result<RewriteSystem, RewriteError> {
        let map = self.alphabet.translation_to(target)?;
        let rules = self
            .rules
            .iter()
            .map(|r| Rule {
                lhs: r.lhs.iter().map(|l| map[l as usize]).collect(),
                rhs: r.rhs.map_letters(&map),
                tag: r.tag.clone(),
            })
            .collect();
        RewriteSystem::new(target.clone(), ordering, rules)
    }

    /// A new system with the given rules and the same alphabet and ordering.
    pub fn with_rules(&self, rules: Vec<Rule>) -> Result<RewriteSystem, RewriteError> {
        RewriteSystem::new(self.alphabet.clone(), self.ordering.clone(), rules)
    }
}
