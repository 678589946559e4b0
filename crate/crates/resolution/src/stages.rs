use std::collections::{BTreeMap, BTreeSet};

use ncrw_core::{Alphabet, OrderingSpec, Polynomial, Word};
use ncrw_rewrite::modext::SplitSystem;
use ncrw_rewrite::{RewriteSystem, Rule, VerifyReport};
use serde::Serialize;

use crate::{stage_alphabet, ResolutionError, StageLetters};

fn lhs_word(p: &Polynomial) -> Word {
    p.support().next().expect("monomial").clone()
}

fn rule(lhs: Polynomial, rhs: Polynomial, tag: String) -> Rule {
    Rule::tagged(lhs_word(&lhs), rhs, tag)
}

fn delta(i: usize, j: usize) -> Polynomial {
    if i == j {
        Polynomial::one()
    } else {
        Polynomial::zero()
    }
}

fn sum<I: IntoIterator<Item = Polynomial>>(it: I) -> Polynomial {
    it.into_iter().fold(Polynomial::zero(), |acc, p| acc + p)
}

fn stage1_rules(l: &StageLetters) -> Vec<Rule> {
    let n = l.n;
    let mut out = Vec::new();
    for p in 1..=n {
        for q in 1..=n {
            out.push(rule(&l.a(p, q) * &l.e0(), &l.e0() * &l.a(p, q) + l.e(p, q), format!("V~[{p},{q}]")));
        }
    }
    for p in 1..=n {
        for q in 1..=n {
            let rhs = -sum((1..n).map(|i| &l.a(p, i) * &l.e(q, i))) - sum((1..=n).map(|i| &l.e(p, i) * &l.a(q, i)));
            out.push(rule(&l.a(p, n) * &l.e(q, n), rhs, format!("K~[{p},{q}]")));
        }
    }
    for p in 1..=n {
        for q in 1..=n {
            let rhs = -sum((1..n).map(|i| &l.a(i, p) * &l.e(i, q))) - sum((1..=n).map(|i| &l.e(i, p) * &l.a(i, q)));
            out.push(rule(&l.a(n, p) * &l.e(n, q), rhs, format!("K~'[{p},{q}]")));
        }
    }
    out
}

/// `a[j,i] f[j,k] a[k,i]`.
fn afa(l: &StageLetters, j: usize, k: usize, i: usize) -> Polynomial {
    &(&l.a(j, i) * &l.f(j, k)) * &l.a(k, i)
}

/// `Σ_{j,k} a[j,i] f[j,k] a[k,i]`, skipping `(j,k) = (n,n)` when `skip_nn`.
fn afa_column(l: &StageLetters, i: usize, skip_nn: bool) -> Polynomial {
    let n = l.n;
    let mut out = Polynomial::zero();
    for j in 1..=n {
        for k in 1..=n {
            if !(skip_nn && j == n && k == n) {
                out = out + afa(l, j, k, i);
            }
        }
    }
    out
}

fn stage2_rules(l: &StageLetters) -> Vec<Rule> {
    let n = l.n;
    let mut out = Vec::new();
    for p in 1..=n {
        for q in 1..=n {
            let rhs = -sum((1..n).map(|i| &l.a(p, i) * &l.e(q, i))) - sum((1..=n).map(|i| &l.e(p, i) * &l.a(q, i))) + l.f(p, q);
            out.push(rule(&l.a(p, n) * &l.e(q, n), rhs, format!("V~[{p},{q}]")));
        }
    }
    for p in 1..=n {
        for q in 1..=n {
            let mut rhs = -sum((1..n).map(|j| &l.a(j, p) * &l.e(j, q))) - sum((1..=n).map(|j| &l.e(j, p) * &l.a(j, q)));
            for j in 1..=n {
                for k in 1..=n {
                    rhs = rhs + &(&l.a(j, p) * &l.f(j, k)) * &l.a(k, q);
                }
            }
            out.push(rule(&l.a(n, p) * &l.e(n, q), rhs, format!("W~[{p},{q}]")));
        }
    }
    let rhs = -(afa_column(l, 1, true) + sum((2..=n).map(|i| afa_column(l, i, false)))) + sum((1..=n).map(|i| l.f(i, i)));
    out.push(rule(afa(l, n, n, 1), rhs, "K~".into()));
    out
}

/// `Q = Σ_{i>=3} Σ_{j,k} a[j,i] f[j,k] a[k,i] - Σ_i f[i,i] - f`.
fn q_poly(l: &StageLetters) -> Polynomial {
    let n = l.n;
    sum((3..=n).map(|i| afa_column(l, i, false))) - sum((1..=n).map(|i| l.f(i, i))) - l.f0()
}

fn stage3_rules(l: &StageLetters) -> Vec<Rule> {
    let n = l.n;
    let la = ncrw_aon::Letters::new(l.alphabet, n);
    let q = q_poly(l);
    let mut out = Vec::new();
    let rhs = -q.clone() - afa_column(l, 2, false) - afa_column(l, 1, true);
    out.push(rule(afa(l, n, n, 1), rhs, "V~".into()));
    for p in 1..=n {
        let mut zfa = Polynomial::zero();
        for j in 1..=n {
            for k in 1..=n {
                zfa = zfa + &(&ncrw_aon::z(&la, p, j) * &l.f(j, k)) * &l.a(k, 1);
            }
        }
        let rhs = -zfa - &l.a(p, 1) * &(&q + &afa_column(l, 2, true));
        out.push(rule(&l.a(p, 1) * &afa(l, n, n, 2), rhs, format!("V~[{p}]")));
    }
    for p in 1..=n {
        let head = &l.a(n, 1) * &l.f(n, n);
        let tail = sum((3..=n).map(|i| &l.a(n, i) * &l.a(p, i))) - delta(n, p);
        let mut afz = Polynomial::zero();
        for j in 1..=n {
            for k in 1..=n {
                if !(j == n && k == n) {
                    afz = afz + &(&l.a(j, 1) * &l.f(j, k)) * &ncrw_aon::z(&la, k, p);
                }
            }
        }
        let rhs = -(&head * &tail) + afz + &(&q + &afa_column(l, 2, false)) * &l.a(p, 1);
        let lhs = &(&head * &l.a(n, 2)) * &l.a(p, 2);
        out.push(rule(lhs, rhs, format!("W~[{p}]")));
    }
    out
}

/// One graph stage: the algebra rules plus the tabulated module rules, split by class.
#[derive(Debug, Clone)]
pub struct ResolutionStage {
    pub n: usize,
    pub stage: u8,
    pub split: SplitSystem,
}

impl ResolutionStage {
    pub fn system(&self) -> &RewriteSystem {
        &self.split.base
    }

    pub fn alphabet(&self) -> &Alphabet {
        self.split.base.alphabet()
    }

    pub fn letters(&self) -> StageLetters<'_> {
        StageLetters::new(self.alphabet(), self.n)
    }

    /// The rules with the given tag.
    pub fn rule_by_tag(&self, tag: &str) -> Option<&Rule> {
        self.system().rules().iter().find(|r| r.tag.as_deref() == Some(tag))
    }
}

/// Builds stage `stage` for `n >= 3`.
pub fn stage_system(n: usize, stage: u8) -> Result<ResolutionStage, ResolutionError> {
    if n < 3 {
        return Err(ResolutionError::SmallN(n));
    }
    stage_system_unchecked(n, stage)
}

/// Builds a stage without the `n >= 3` guard, for experiments with small `n`.
pub fn stage_system_unchecked(n: usize, stage: u8) -> Result<ResolutionStage, ResolutionError> {
    let alphabet = stage_alphabet(n, stage)?;
    let l = StageLetters::new(&alphabet, n);
    let mut rules = ncrw_aon::rules_in(&alphabet, n);
    rules.extend(match stage {
        1 => stage1_rules(&l),
        2 => stage2_rules(&l),
        _ => stage3_rules(&l),
    });
    let ordering = OrderingSpec::module_for(&alphabet);
    let split = SplitSystem::classify(RewriteSystem::new(alphabet, ordering, rules)?)?;
    Ok(ResolutionStage { n, stage, split })
}

/// Unordered family pairs of the overlaps with a module rule that the hand
/// verification lists for each stage.
pub fn expected_families(stage: u8) -> Vec<(String, String)> {
    let pairs: &[(&str, &str)] = match stage {
        1 => &[("V~/2", "Z~/2"), ("S~/2", "V~/2"), ("V~/2", "Z~/3"), ("S~/3", "V~/2")],
        2 => &[("S~/2", "V~/2"), ("S~/3", "V~/2"), ("W~/2", "Z~/2"), ("W~/2", "Z~/3"), ("V~/2", "W~/2")],
        3 => &[
            ("V~/0", "Z~/2"),
            ("V~/1", "Z~/2"),
            ("W~/1", "Z~/2"),
            ("S~/2", "V~/1"),
            ("S~/2", "W~/1"),
            ("V~/0", "Z~/3"),
            ("S~/3", "V~/1"),
            ("S~/3", "W~/1"),
        ],
        _ => &[],
    };
    pairs.iter().map(|&(a, b)| ordered(a.into(), b.into())).collect()
}

fn ordered(a: String, b: String) -> (String, String) {
    if a <= b {
        (a, b)
    } else {
        (b, a)
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct StageReport {
    pub n: usize,
    pub stage: u8,
    pub rules: usize,
    pub r_a: usize,
    pub r_e: usize,
    pub r_f: usize,
    #[serde(skip)]
    pub report: VerifyReport,
    /// Overlap count per unordered family pair, for overlaps involving a module rule.
    pub families: BTreeMap<String, usize>,
    /// Listed families that produced no overlap.
    pub missing: Vec<String>,
    /// Families found that the list does not mention.
    pub extra: Vec<String>,
    pub weakly_complete: bool,
}

fn pair_label(p: &(String, String)) -> String {
    format!("{}*{}", p.0, p.1)
}

/// Weak completeness of a stage with the family cross-tabulation.
pub fn verify_stage(stage: &ResolutionStage, step_limit: u64) -> StageReport {
    let split = &stage.split;
    let report = split.verify_weak_complete(step_limit);
    let module_rule = |i: usize| split.r_e.contains(&i) || split.r_f.contains(&i);
    let mut found: BTreeMap<(String, String), usize> = BTreeMap::new();
    for o in &report.overlaps {
        if module_rule(o.rule_a) || module_rule(o.rule_b) {
            let key = ordered(split.base.rule(o.rule_a).family(), split.base.rule(o.rule_b).family());
            *found.entry(key).or_default() += 1;
        }
    }
    let expected: BTreeSet<(String, String)> = expected_families(stage.stage).into_iter().collect();
    let missing = expected.iter().filter(|k| !found.contains_key(*k)).map(pair_label).collect();
    let extra = found.keys().filter(|k| !expected.contains(*k)).map(pair_label).collect();
    StageReport {
        n: stage.n,
        stage: stage.stage,
        rules: split.base.len(),
        r_a: split.r_a.len(),
        r_e: split.r_e.len(),
        r_f: split.r_f.len(),
        weakly_complete: report.complete,
        families: found.iter().map(|(k, v)| (pair_label(k), *v)).collect(),
        missing,
        extra,
        report,
    }
}
