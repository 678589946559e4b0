use ncrw_core::Polynomial;
use ncrw_rewrite::modext::BimoduleElement;
use serde::Serialize;

use crate::{phi_image, PolyMatrix, ResolutionError, ResolutionStage};

/// One urbild rule read as a kernel generator and what it was matched against.
#[derive(Debug, Clone, Serialize)]
pub struct KernelMatch {
    pub tag: String,
    /// The generator after reducing its coefficients under the algebra rules.
    pub generator: String,
    /// The expression it equals modulo the algebra relations, e.g. `+Φ2(f[1,2])`.
    pub matched: String,
    pub ok: bool,
    #[serde(skip)]
    pub element: BimoduleElement,
}

/// Kernel generators of a weakly complete stage, each matched against the image of the
/// next map (stage 1: `+Φ2`, stage 2: `-Φ3`) or against a combination of such images.
pub fn stage_kernel(stage: &ResolutionStage, step_limit: u64) -> Result<Vec<KernelMatch>, ResolutionError> {
    let split = &stage.split;
    let report = split.verify_weak_complete(step_limit);
    let generators = split.kernel_generators(&report)?;
    let r_a = split.algebra_system()?;
    let l = stage.letters();
    let n = stage.n;
    let alphabet = stage.alphabet();
    let phi2 = |p: usize, q: usize| phi_image(&l, 2, &[p, q]);
    let k_matrix = || -> Result<PolyMatrix, ResolutionError> {
        let rows = (1..=n).map(|p| (1..=n).map(|q| phi2(p, q)).collect::<Result<Vec<_>, _>>()).collect::<Result<Vec<_>, _>>()?;
        Ok(PolyMatrix { entries: rows })
    };
    let mut out = Vec::new();
    for (&i, g) in split.r_f.iter().zip(generators) {
        let rule = split.base.rule(i);
        let tag = rule.label(i);
        let (expected, matched): (Polynomial, String) = match (stage.stage, tag.split_once('[')) {
            (1, Some(("K~", idx))) => {
                let (p, q) = parse_pair(idx);
                (phi2(p, q)?, format!("+Φ2(f[{p},{q}])"))
            }
            (1, Some(("K~'", idx))) => {
                let (p, q) = parse_pair(idx);
                let a = PolyMatrix::from_fn(n, |i, j| l.a(i, j));
                let span = a.t().mul(&k_matrix()?).mul(&a);
                (span.at(p, q).clone(), format!("Σ a[i,{p}] Φ2(f[i,j]) a[j,{q}]"))
            }
            (2, None) if tag == "K~" => (-phi_image(&l, 3, &[])?, "-Φ3(f)".into()),
            _ => (Polynomial::zero(), "unmatched".into()),
        };
        let residue = r_a.normal_form(&(rule.difference() - expected), step_limit)?;
        let element = g.reduced(&r_a, step_limit)?;
        out.push(KernelMatch { tag, generator: element.render(alphabet), matched, ok: residue.is_zero(), element });
    }
    Ok(out)
}

fn parse_pair(idx: &str) -> (usize, usize) {
    let (p, q) = idx.trim_end_matches(']').split_once(',').expect("two indices");
    (p.parse().expect("index"), q.parse().expect("index"))
}
