use std::collections::BTreeSet;

use ncrw_core::{Polynomial, Word};
use rayon::prelude::*;

use crate::RewriteSystem;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum OverlapKind {
    /// A proper suffix of `lhs_a` is a proper prefix of `lhs_b`.
    Partial,
    /// `lhs_a` occurs inside `lhs_b`.
    Total,
}

/// A word with two rule applications that share at least one letter.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Overlap {
    pub word: Word,
    pub rule_a: usize,
    pub rule_b: usize,
    pub kind: OverlapKind,
    /// Position of `lhs_a` in `word`.
    pub pos_a: usize,
    /// Position of `lhs_b` in `word`.
    pub pos_b: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Resolution {
    Joinable(Polynomial),
    NotJoinable(Polynomial, Polynomial),
    Limit,
}

/// An overlap whose branches did not meet, with their normal forms.
/// Both are `None` when the step limit was hit.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Failure {
    pub overlap: Overlap,
    pub nf_a: Option<Polynomial>,
    pub nf_b: Option<Polynomial>,
}

impl Failure {
    pub fn is_limit(&self) -> bool {
        self.nf_a.is_none()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct VerifyReport {
    pub overlaps_total: usize,
    pub joinable: usize,
    pub failures: Vec<Failure>,
    pub complete: bool,
    /// Overlaps counted as joinable only after identifying urbild-side terms modulo
    /// the submodule generated by the urbild rules.
    pub quotient_resolved: usize,
    /// Every overlap that was checked, in enumeration order.
    pub overlaps: Vec<Overlap>,
}

impl RewriteSystem {
    /// All partial overlaps of ordered rule pairs (shifted self-overlaps included) and
    /// all total overlaps, sorted and deduplicated.
    pub fn minimal_overlaps(&self) -> Vec<Overlap> {
        let rules = self.rules();
        let mut out = BTreeSet::new();
        for (a, ra) in rules.iter().enumerate() {
            let la = ra.lhs.as_slice();
            for (b, rb) in rules.iter().enumerate() {
                let lb = rb.lhs.as_slice();
                for k in 1..la.len() {
                    let shared = la.len() - k;
                    if shared < lb.len() && la[k..] == lb[..shared] {
                        let word: Word = la[..k].iter().chain(lb).copied().collect();
                        out.insert(Overlap { word, rule_a: a, rule_b: b, kind: OverlapKind::Partial, pos_a: 0, pos_b: k });
                    }
                }
                if a != b && la.len() <= lb.len() && (la != lb || a < b) {
                    for pos in rb.lhs.occurrences(&ra.lhs) {
                        out.insert(Overlap {
                            word: rb.lhs.clone(),
                            rule_a: a,
                            rule_b: b,
                            kind: OverlapKind::Total,
                            pos_a: pos,
                            pos_b: 0,
                        });
                    }
                }
            }
        }
        out.into_iter().collect()
    }

    /// The two one-step rewrites of the overlap word.
    pub fn overlap_branches(&self, o: &Overlap) -> (Polynomial, Polynomial) {
        (self.rewrite_at(&o.word, o.pos_a, o.rule_a), self.rewrite_at(&o.word, o.pos_b, o.rule_b))
    }

    pub fn resolve_overlap(&self, o: &Overlap, step_limit: u64) -> Resolution {
        let (a, b) = self.overlap_branches(o);
        match (self.normal_form(&a, step_limit), self.normal_form(&b, step_limit)) {
            (Ok(na), Ok(nb)) if na == nb => Resolution::Joinable(na),
            (Ok(na), Ok(nb)) => Resolution::NotJoinable(na, nb),
            _ => Resolution::Limit,
        }
    }

    /// Resolves the given overlaps in parallel and aggregates the results.
    pub fn verify_overlaps(&self, overlaps: Vec<Overlap>, step_limit: u64) -> VerifyReport {
        let results: Vec<Resolution> = overlaps.par_iter().map(|o| self.resolve_overlap(o, step_limit)).collect();
        let mut failures = Vec::new();
        let mut joinable = 0;
        for (o, r) in overlaps.iter().zip(results) {
            match r {
                Resolution::Joinable(_) => joinable += 1,
                Resolution::NotJoinable(a, b) => failures.push(Failure { overlap: o.clone(), nf_a: Some(a), nf_b: Some(b) }),
                Resolution::Limit => failures.push(Failure { overlap: o.clone(), nf_a: None, nf_b: None }),
            }
        }
        VerifyReport { overlaps_total: overlaps.len(), joinable, complete: failures.is_empty(), failures, quotient_resolved: 0, overlaps }
    }

    /// Checks every minimal overlap for joinability.
    pub fn verify_complete(&self, step_limit: u64) -> VerifyReport {
        self.verify_overlaps(self.minimal_overlaps(), step_limit)
    }
}
