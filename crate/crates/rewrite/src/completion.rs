use std::collections::VecDeque;

use ncrw_core::{OrderingSpec, Polynomial, Scalar};
use num_traits::One;

use crate::{Failure, Overlap, RewriteError, RewriteSystem, Rule};

/// Orients `p = 0` as `lm(p) -> lm(p) - p / lc(p)`.
pub fn orient_relation(p: &Polynomial, ord: &OrderingSpec) -> Result<Rule, RewriteError> {
    if *ord == OrderingSpec::Lex {
        return Err(RewriteError::LexOrderingRejected);
    }
    let (lm, lc) = p.leading_monomial(ord)?;
    let inv = Scalar::one() / lc;
    let rhs = Polynomial::monomial(lm.clone()) - p.scale(&inv);
    let rule = Rule::new(lm, rhs);
    if !rule.is_strictly_decreasing(ord) {
        return Err(RewriteError::NotDecreasing { index: 0, tag: "oriented".into() });
    }
    Ok(rule)
}

#[derive(Debug, Clone)]
pub enum Completion {
    Completed(RewriteSystem),
    /// Stopped early: the rule bound was reached or a difference could not be oriented.
    Exhausted { system: RewriteSystem, pending: Vec<Failure>, reason: String },
}

impl Completion {
    pub fn system(&self) -> &RewriteSystem {
        match self {
            Completion::Completed(s) => s,
            Completion::Exhausted { system, .. } => system,
        }
    }

    pub fn is_completed(&self) -> bool {
        matches!(self, Completion::Completed(_))
    }
}

/// Knuth-Bendix completion: orients the differences of non-joinable overlaps into new
/// rules and inter-reduces until every overlap is joinable.
pub fn knuth_bendix(sys: &RewriteSystem, max_rules: usize, step_limit: u64) -> Result<Completion, RewriteError> {
    knuth_bendix_filtered(sys, max_rules, step_limit, |_, _| true)
}

/// Completion that only considers the overlaps accepted by `keep`.
pub fn knuth_bendix_filtered<F>(sys: &RewriteSystem, max_rules: usize, step_limit: u64, keep: F) -> Result<Completion, RewriteError>
where
    F: Fn(&RewriteSystem, &Overlap) -> bool,
{
    let ord = sys.ordering().clone();
    let mut current = interreduce(sys.clone(), VecDeque::new(), &ord, step_limit)?;
    loop {
        let overlaps = current.minimal_overlaps().into_iter().filter(|o| keep(&current, o)).collect();
        let report = current.verify_overlaps(overlaps, step_limit);
        if report.complete {
            return Ok(Completion::Completed(current));
        }
        if let Some(f) = report.failures.iter().find(|f| f.is_limit()) {
            return Ok(Completion::Exhausted {
                system: current,
                pending: vec![f.clone()],
                reason: "step limit exceeded".into(),
            });
        }
        let mut queue = VecDeque::new();
        for f in &report.failures {
            if let (Some(a), Some(b)) = (&f.nf_a, &f.nf_b) {
                queue.push_back(a - b);
            }
        }
        current = match interreduce(current.clone(), queue, &ord, step_limit) {
            Ok(s) => s,
            Err(RewriteError::Core(e)) => {
                return Ok(Completion::Exhausted { system: current, pending: report.failures, reason: e.to_string() })
            }
            Err(e) => return Err(e),
        };
        if current.len() > max_rules {
            return Ok(Completion::Exhausted {
                system: current,
                pending: report.failures,
                reason: format!("more than {max_rules} rules"),
            });
        }
    }
}

/// Adds the relations in `queue` one at a time and keeps the rule set inter-reduced:
/// no lhs contains another lhs and every rhs is irreducible.
fn interreduce(
    sys: RewriteSystem,
    mut queue: VecDeque<Polynomial>,
    ord: &OrderingSpec,
    step_limit: u64,
) -> Result<RewriteSystem, RewriteError> {
    let mut rules = sys.rules().to_vec();
    let mut current = sys;
    loop {
        // Drop rules whose lhs is reducible by another rule and requeue their relations.
        let mut kept: Vec<Rule> = Vec::new();
        for (i, r) in rules.iter().enumerate() {
            let shadowed = rules.iter().enumerate().any(|(j, s)| {
                j != i && r.lhs.contains_factor(&s.lhs) && (s.lhs != r.lhs || j < i)
            });
            if shadowed {
                queue.push_back(r.difference());
            } else {
                kept.push(r.clone());
            }
        }
        let base = current.with_rules(kept.clone())?;
        let mut rules_nf = Vec::with_capacity(kept.len());
        for r in kept {
            let rhs = base.normal_form(&r.rhs, step_limit)?;
            rules_nf.push(Rule { lhs: r.lhs, rhs, tag: r.tag });
        }
        current = current.with_rules(rules_nf)?;
        rules = current.rules().to_vec();
        let next = loop {
            match queue.pop_front() {
                None => break None,
                Some(p) => {
                    let d = current.normal_form(&p, step_limit)?;
                    if !d.is_zero() {
                        break Some(d);
                    }
                }
            }
        };
        match next {
            None => return Ok(current),
            Some(d) => {
                rules.push(orient_relation(&d, ord)?);
                current = current.with_rules(rules.clone())?;
            }
        }
    }
}

/// True iff `f` reduces to zero, i.e. lies in the ideal generated by the rule relations.
pub fn ideal_member(f: &Polynomial, sys: &RewriteSystem, step_limit: u64) -> Result<bool, RewriteError> {
    Ok(sys.normal_form(f, step_limit)?.is_zero())
}
