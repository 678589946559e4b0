use std::collections::BTreeMap;

use ncrw_core::{Polynomial, Scalar, Word};

use crate::{RewriteError, RewriteSystem};

/// One elementary rewrite: `rule` applied at `position` of `word`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionStep {
    pub rule: usize,
    pub position: usize,
    pub word: Word,
}

/// The steps taken by a normal-form computation and its result.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ReductionTrace {
    pub steps: Vec<ReductionStep>,
    pub result: Polynomial,
}

impl RewriteSystem {
    /// Rewrites one occurrence of `rule` at `pos` inside `w`.
    pub fn rewrite_at(&self, w: &Word, pos: usize, rule: usize) -> Polynomial {
        let r = self.rule(rule);
        let s = w.as_slice();
        r.rhs.wrap(&s[..pos], &s[pos + r.lhs.len()..])
    }

    /// Normal form under the deterministic redex policy: the greatest reducible
    /// support word first, its leftmost redex, the lowest-index rule there.
    pub fn normal_form(&self, p: &Polynomial, step_limit: u64) -> Result<Polynomial, RewriteError> {
        self.reduce(p, step_limit, None)
    }

    /// [`RewriteSystem::normal_form`] with the full list of steps.
    pub fn normal_form_traced(&self, p: &Polynomial, step_limit: u64) -> Result<(Polynomial, ReductionTrace), RewriteError> {
        let mut steps = Vec::new();
        let nf = self.reduce(p, step_limit, Some(&mut steps))?;
        Ok((nf.clone(), ReductionTrace { steps, result: nf }))
    }

    fn reduce(&self, p: &Polynomial, step_limit: u64, mut trace: Option<&mut Vec<ReductionStep>>) -> Result<Polynomial, RewriteError> {
        let ord = self.ordering();
        let mut todo: BTreeMap<(Vec<u64>, Word), Scalar> = BTreeMap::new();
        let push = |todo: &mut BTreeMap<(Vec<u64>, Word), Scalar>, w: Word, c: Scalar| {
            let key = (ord.key(&w), w);
            match todo.entry(key) {
                std::collections::btree_map::Entry::Vacant(e) => {
                    e.insert(c);
                }
                std::collections::btree_map::Entry::Occupied(mut e) => {
                    *e.get_mut() += c;
                    if num_traits::Zero::is_zero(e.get()) {
                        e.remove();
                    }
                }
            }
        };
        for (w, c) in p.terms() {
            push(&mut todo, w.clone(), c.clone());
        }
        let mut result = Polynomial::zero();
        let mut steps = 0u64;
        while let Some(((_, w), c)) = todo.pop_last() {
            match self.find_redex(&w) {
                None => result.add_term(w, c),
                Some((pos, ri)) => {
                    if steps >= step_limit {
                        let mut rest = result.clone();
                        rest.add_term(w, c);
                        for ((_, w2), c2) in todo {
                            rest.add_term(w2, c2);
                        }
                        let steps = trace.map(std::mem::take).unwrap_or_default();
                        return Err(RewriteError::StepLimitExceeded {
                            limit: step_limit,
                            partial: Box::new(ReductionTrace { steps, result: rest }),
                        });
                    }
                    steps += 1;
                    let r = self.rule(ri);
                    let s = w.as_slice();
                    let (pre, post) = (&s[..pos], &s[pos + r.lhs.len()..]);
                    for (rw, rc) in r.rhs.terms() {
                        push(&mut todo, rw.wrap(pre, post), rc * &c);
                    }
                    if let Some(t) = trace.as_deref_mut() {
                        t.push(ReductionStep { rule: ri, position: pos, word: w });
                    }
                }
            }
        }
        Ok(result)
    }

    /// Replays `steps` from `input`: each step rewrites the whole current coefficient
    /// of its word.
    pub fn replay(&self, input: &Polynomial, steps: &[ReductionStep]) -> Polynomial {
        let mut cur = input.clone();
        for st in steps {
            let c = cur.coeff(&st.word);
            cur.add_term(st.word.clone(), -c.clone());
            cur.add_scaled(&self.rewrite_at(&st.word, st.position, st.rule), &c);
        }
        cur
    }

    /// True iff no support word contains a rule lhs.
    pub fn is_normal(&self, p: &Polynomial) -> bool {
        p.support().all(|w| self.is_irreducible(w))
    }
}
