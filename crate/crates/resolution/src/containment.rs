use ncrw_core::Polynomial;
use ncrw_rewrite::RewriteSystem;
use serde::Serialize;

use crate::{PolyMatrix, ResolutionError, ResolutionStage};

/// One scripted identity `lhs ≡ rhs` checked entrywise modulo the algebra relations.
#[derive(Debug, Clone, Serialize)]
pub struct ContainmentResult {
    pub name: String,
    pub entries: usize,
    /// Positions `(p, q)` (1-based) whose difference does not reduce to zero.
    pub failures: Vec<(usize, usize)>,
}

impl ContainmentResult {
    pub fn ok(&self) -> bool {
        self.failures.is_empty()
    }
}

fn diff(stage: &ResolutionStage, tag: &str) -> Polynomial {
    stage.rule_by_tag(tag).unwrap_or_else(|| panic!("stage {} has rule {tag}", stage.stage)).difference()
}

fn tag_matrix(stage: &ResolutionStage, head: &str) -> PolyMatrix {
    PolyMatrix::from_fn(stage.n, |p, q| diff(stage, &format!("{head}[{p},{q}]")))
}

fn check_matrix(r_a: &RewriteSystem, name: &str, lhs: &PolyMatrix, rhs: &PolyMatrix, limit: u64) -> Result<ContainmentResult, ResolutionError> {
    let n = lhs.n();
    let mut failures = Vec::new();
    for p in 1..=n {
        for q in 1..=n {
            if !r_a.normal_form(&(lhs.at(p, q) - rhs.at(p, q)), limit)?.is_zero() {
                failures.push((p, q));
            }
        }
    }
    Ok(ContainmentResult { name: name.into(), entries: n * n, failures })
}

fn check_list(r_a: &RewriteSystem, name: &str, pairs: &[(Polynomial, Polynomial)], limit: u64) -> Result<ContainmentResult, ResolutionError> {
    let mut failures = Vec::new();
    for (i, (l, r)) in pairs.iter().enumerate() {
        if !r_a.normal_form(&(l - r), limit)?.is_zero() {
            failures.push((i + 1, 1));
        }
    }
    Ok(ContainmentResult { name: name.into(), entries: pairs.len(), failures })
}

/// The matrix identities that place each stage's kernel rules in the span of the
/// graph module, checked modulo the algebra relations.
///
/// * stage 1: `X A^t + A X^t ≡ K` with `X = E - (A e - e A)`, and `A^t K A ≡ K'`
/// * stage 2: `A^t S A ≡ -W` with `S = F - (A E^t + E A^t)`, and `tr(A^t S A) - tr(S) ≡ K`
/// * stage 3: `a[p,1] S ≡ V_p` and `S a[p,1] ≡ -W_p` with `S` the stage rule difference
pub fn containment_check(stage: &ResolutionStage, step_limit: u64) -> Result<Vec<ContainmentResult>, ResolutionError> {
    let n = stage.n;
    let l = stage.letters();
    let r_a = stage.split.algebra_system()?;
    let a = PolyMatrix::from_fn(n, |i, j| l.a(i, j));
    let at = a.t();
    match stage.stage {
        1 => {
            let x = tag_matrix(stage, "V~").neg();
            let k = tag_matrix(stage, "K~");
            let k2 = tag_matrix(stage, "K~'");
            let y = x.mul(&at).add(&a.mul(&x.t()));
            Ok(vec![
                check_matrix(&r_a, "XA^t+AX^t=K", &y, &k, step_limit)?,
                check_matrix(&r_a, "A^tKA=K'", &at.mul(&k).mul(&a), &k2, step_limit)?,
            ])
        }
        2 => {
            let s = tag_matrix(stage, "V~").neg();
            let w = tag_matrix(stage, "W~");
            let asa = at.mul(&s).mul(&a);
            let trace = asa.trace() - s.trace();
            Ok(vec![
                check_matrix(&r_a, "A^tSA=-W", &asa, &w.neg(), step_limit)?,
                check_list(&r_a, "tr(A^tSA)-tr(S)=K", &[(trace, diff(stage, "K~"))], step_limit)?,
            ])
        }
        3 => {
            let s = diff(stage, "V~");
            let left: Vec<_> = (1..=n).map(|p| (&l.a(p, 1) * &s, diff(stage, &format!("V~[{p}]")))).collect();
            let right: Vec<_> = (1..=n).map(|p| (&s * &l.a(p, 1), -diff(stage, &format!("W~[{p}]")))).collect();
            Ok(vec![check_list(&r_a, "a[p,1]S=V_p", &left, step_limit)?, check_list(&r_a, "Sa[p,1]=-W_p", &right, step_limit)?])
        }
        s => Err(ResolutionError::BadStage(s)),
    }
}
