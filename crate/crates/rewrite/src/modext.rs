//! Rewriting with module generators: module degree, the split of a system into
//! algebra, bild and urbild rules, weak completeness and kernel extraction.

use std::collections::BTreeMap;

use ncrw_core::{format_scalar, Alphabet, LetterId, ModuleClass, Polynomial, Scalar, Word};
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::{knuth_bendix_filtered, orient_relation, Completion, Overlap, RewriteError, RewriteSystem, Rule, VerifyReport};

/// Rule bound for [`SplitSystem::urbild_completion`] inside the weak check.
pub const URBILD_COMPLETION_MAX_RULES: usize = 400;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ModuleDegree {
    /// No support word has a module letter.
    Deg0,
    /// Every support word has exactly one module letter; `Some` when all share a class.
    Deg1(Option<ModuleClass>),
    Mixed,
}

impl ModuleDegree {
    /// The module predicate: degree zero or one.
    pub fn predicate(self) -> bool {
        !matches!(self, ModuleDegree::Mixed)
    }
}

pub fn module_count(w: &Word, alphabet: &Alphabet) -> usize {
    w.iter().filter(|&l| alphabet.is_module(l)).count()
}

pub fn module_degree(p: &Polynomial, alphabet: &Alphabet) -> ModuleDegree {
    let mut counts = p.support().map(|w| module_count(w, alphabet));
    let Some(first) = counts.next() else {
        return ModuleDegree::Deg0;
    };
    if first > 1 || counts.any(|c| c != first) {
        return ModuleDegree::Mixed;
    }
    if first == 0 {
        return ModuleDegree::Deg0;
    }
    let mut classes = p.support().filter_map(|w| w.iter().find_map(|l| alphabet.class(l)));
    let c0 = classes.next();
    if classes.all(|c| Some(c) == c0) {
        ModuleDegree::Deg1(c0)
    } else {
        ModuleDegree::Deg1(None)
    }
}

/// An element of a free bimodule, stored as free-algebra lifts `c · left ⊗ right` per
/// module generator slot.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct BimoduleElement {
    terms: BTreeMap<(LetterId, Word, Word), Scalar>,
}

impl BimoduleElement {
    pub fn zero() -> Self {
        BimoduleElement::default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, slot: LetterId, left: Word, right: Word, c: Scalar) {
        let key = (slot, left, right);
        let v = self.terms.entry(key.clone()).or_insert_with(Scalar::zero);
        *v += c;
        if v.is_zero() {
            self.terms.remove(&key);
        }
    }

    /// `(slot, left, right, coefficient)` in slot order.
    pub fn entries(&self) -> impl Iterator<Item = (LetterId, &Word, &Word, &Scalar)> {
        self.terms.iter().map(|((s, l, r), c)| (*s, l, r, c))
    }

    /// Slots with a nonzero component.
    pub fn slots(&self) -> Vec<LetterId> {
        let mut v: Vec<LetterId> = self.terms.keys().map(|k| k.0).collect();
        v.dedup();
        v
    }

    /// Back to the degree-one polynomial `Σ c · left · slot · right`.
    pub fn to_polynomial(&self) -> Polynomial {
        Polynomial::from_terms(self.entries().map(|(s, l, r, c)| (c.clone(), l.concat(&Word::from(vec![s])).concat(r))))
    }

    pub fn add(&self, other: &BimoduleElement) -> BimoduleElement {
        let mut out = self.clone();
        for (s, l, r, c) in other.entries() {
            out.add_term(s, l.clone(), r.clone(), c.clone());
        }
        out
    }

    pub fn neg(&self) -> BimoduleElement {
        let mut out = self.clone();
        for v in out.terms.values_mut() {
            *v = -v.clone();
        }
        out
    }

    /// Reduces the left and right components with algebra-only rules. Such rules never
    /// match across the module letter, so this is the normal form of the lift.
    pub fn reduced(&self, r_a: &RewriteSystem, step_limit: u64) -> Result<BimoduleElement, RewriteError> {
        pi1(&r_a.normal_form(&self.to_polynomial(), step_limit)?, r_a.alphabet())
    }

    pub fn to_json(&self, alphabet: &Alphabet) -> Vec<BimoduleTermJson> {
        self.entries()
            .map(|(s, l, r, c)| BimoduleTermJson {
                slot: alphabet.letter(s).token(),
                c: format_scalar(c),
                left: alphabet.word_tokens(l),
                right: alphabet.word_tokens(r),
            })
            .collect()
    }

    pub fn render(&self, alphabet: &Alphabet) -> String {
        self.to_polynomial().render(alphabet)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BimoduleTermJson {
    pub slot: String,
    pub c: String,
    pub left: Vec<String>,
    pub right: Vec<String>,
}

/// Splits each term `c · p · ε · s` of a degree-one polynomial into `(ε, c · p, s)`.
pub fn pi1(p: &Polynomial, alphabet: &Alphabet) -> Result<BimoduleElement, RewriteError> {
    let mut out = BimoduleElement::zero();
    for (w, c) in p.terms() {
        let s = w.as_slice();
        let mut pos = s.iter().enumerate().filter(|(_, &l)| alphabet.is_module(l)).map(|(i, _)| i);
        let (Some(i), None) = (pos.next(), pos.next()) else {
            return Err(RewriteError::NotDegreeOne);
        };
        out.add_term(s[i], Word::from(&s[..i]), Word::from(&s[i + 1..]), c.clone());
    }
    Ok(out)
}

/// A module-extended system with its rules partitioned by the module letter in the lhs.
#[derive(Debug, Clone)]
pub struct SplitSystem {
    pub base: RewriteSystem,
    /// Rules without module letters.
    pub r_a: Vec<usize>,
    /// Rules whose lhs has one bild generator.
    pub r_e: Vec<usize>,
    /// Rules whose lhs has one urbild generator.
    pub r_f: Vec<usize>,
    /// Generators whose graph relation vanished and produced no rule.
    pub trivial: Vec<LetterId>,
}

impl SplitSystem {
    pub fn classify(base: RewriteSystem) -> Result<SplitSystem, RewriteError> {
        let a = base.alphabet();
        let (mut r_a, mut r_e, mut r_f) = (Vec::new(), Vec::new(), Vec::new());
        for (i, r) in base.rules().iter().enumerate() {
            let mods: Vec<LetterId> = r.lhs.iter().filter(|&l| a.is_module(l)).collect();
            match mods.as_slice() {
                [] => r_a.push(i),
                [m] => match a.class(*m) {
                    Some(ModuleClass::Bild) => r_e.push(i),
                    _ => {
                        if !matches!(module_degree(&r.rhs, a), ModuleDegree::Deg1(Some(ModuleClass::Urbild)))
                            && !r.rhs.is_zero()
                        {
                            return Err(RewriteError::UrbildNotClosed(i));
                        }
                        r_f.push(i)
                    }
                },
                _ => return Err(RewriteError::BadModuleRule(i)),
            }
        }
        Ok(SplitSystem { base, r_a, r_e, r_f, trivial: Vec::new() })
    }

    /// The algebra rules alone, over the same alphabet and ordering.
    pub fn algebra_system(&self) -> Result<RewriteSystem, RewriteError> {
        self.base.with_rules(self.r_a.iter().map(|&i| self.base.rule(i).clone()).collect())
    }

    pub fn is_urbild_rule(&self, i: usize) -> bool {
        self.r_f.binary_search(&i).is_ok()
    }

    /// Minimal overlaps whose word has at most one module letter.
    pub fn p_minimal_overlaps(&self) -> Vec<Overlap> {
        let a = self.base.alphabet();
        self.base.minimal_overlaps().into_iter().filter(|o| module_count(&o.word, a) <= 1).collect()
    }

    /// Weak completeness: every module-minimal overlap between algebra and bild rules
    /// resolves under the full system once urbild-side terms are taken modulo the
    /// submodule generated by the urbild rules. A branch difference counts as resolved
    /// when each of its words has an urbild letter and it reduces to zero under
    /// [`SplitSystem::urbild_completion`].
    pub fn verify_weak_complete(&self, step_limit: u64) -> VerifyReport {
        let overlaps = self
            .p_minimal_overlaps()
            .into_iter()
            .filter(|o| !self.is_urbild_rule(o.rule_a) && !self.is_urbild_rule(o.rule_b))
            .collect();
        let mut report = self.base.verify_overlaps(overlaps, step_limit);
        if report.failures.is_empty() {
            return report;
        }
        let a = self.base.alphabet();
        let urbild_only = |p: &Polynomial| p.support().all(|w| w.iter().any(|l| a.class(l) == Some(ModuleClass::Urbild)));
        let candidates = report.failures.iter().any(|f| matches!((&f.nf_a, &f.nf_b), (Some(x), Some(y)) if urbild_only(&(x - y))));
        if !candidates {
            return report;
        }
        let completion = match self.urbild_completion(URBILD_COMPLETION_MAX_RULES, step_limit) {
            Ok(Completion::Completed(sys)) => sys,
            _ => return report,
        };
        let before = report.failures.len();
        report.failures.retain(|f| match (&f.nf_a, &f.nf_b) {
            (Some(x), Some(y)) => {
                let d = x - y;
                !(urbild_only(&d) && matches!(completion.normal_form(&d, step_limit), Ok(nf) if nf.is_zero()))
            }
            _ => true,
        });
        report.quotient_resolved = before - report.failures.len();
        report.joinable += report.quotient_resolved;
        report.complete = report.failures.is_empty();
        report
    }

    /// Completion of the algebra and urbild rules over words with at most one module
    /// letter. Its normal forms decide membership in the urbild submodule generated by
    /// the urbild rules, modulo the algebra relations.
    pub fn urbild_completion(&self, max_rules: usize, step_limit: u64) -> Result<Completion, RewriteError> {
        let rules = self.r_a.iter().chain(&self.r_f).map(|&i| self.base.rule(i).clone()).collect();
        let sys = self.base.with_rules(rules)?;
        knuth_bendix_filtered(&sys, max_rules, step_limit, |s, o| module_count(&o.word, s.alphabet()) <= 1)
    }

    /// The stricter check over every module-minimal overlap, urbild rules included.
    pub fn verify_p_complete(&self, step_limit: u64) -> VerifyReport {
        self.base.verify_overlaps(self.p_minimal_overlaps(), step_limit)
    }

    /// `pi1(lhs - rhs)` for every urbild rule. `report` must be a complete weak check.
    pub fn kernel_generators(&self, report: &VerifyReport) -> Result<Vec<BimoduleElement>, RewriteError> {
        if !report.complete {
            return Err(RewriteError::WeakCompletenessNotVerified);
        }
        self.r_f.iter().map(|&i| pi1(&self.base.rule(i).difference(), self.base.alphabet())).collect()
    }

    /// Rules whose lhs satisfies the module predicate but whose rhs does not.
    pub fn predicate_violations(&self) -> Vec<usize> {
        let a = self.base.alphabet();
        (0..self.base.len())
            .filter(|&i| {
                let r = self.base.rule(i);
                module_count(&r.lhs, a) <= 1 && !module_degree(&r.rhs, a).predicate()
            })
            .collect()
    }
}

/// Orients `φ(f) - f` for every generator `f` and adds the results to the algebra rules.
/// `r_a` must be over the full alphabet with an ordering that ranks bild letters above
/// urbild letters.
pub fn graph_system(phi_images: &[(LetterId, Polynomial)], r_a: &RewriteSystem) -> Result<SplitSystem, RewriteError> {
    let a = r_a.alphabet();
    let mut rules = r_a.rules().to_vec();
    let mut trivial = Vec::new();
    for (f, image) in phi_images {
        let d = image - &Polynomial::letter(*f);
        if d.is_zero() {
            trivial.push(*f);
            continue;
        }
        let r = orient_relation(&d, r_a.ordering())?;
        rules.push(Rule { tag: Some(format!("graph[{}]", a.letter(*f).token())), ..r });
    }
    let mut split = SplitSystem::classify(r_a.with_rules(rules)?)?;
    split.trivial = trivial;
    Ok(split)
}
