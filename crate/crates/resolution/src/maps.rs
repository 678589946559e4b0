use ncrw_core::{LetterId, OrderingSpec, Polynomial};
use ncrw_rewrite::RewriteSystem;
use serde::Serialize;

use crate::{universal_alphabet, ResolutionError, StageLetters};

/// `Φ_map(generator)` over any alphabet holding the needed letters.
///
/// * `Φ0(e) = 1`
/// * `Φ1(e[p,q]) = a[p,q] e - e a[p,q]`
/// * `Φ2(f[p,q]) = Σ_i (a[p,i] e[q,i] + e[p,i] a[q,i])`
/// * `Φ3(f) = -Σ_{i,j,k} a[j,i] f[j,k] a[k,i] + Σ_i f[i,i]`
pub fn phi_image(l: &StageLetters, map: u8, generator: &[usize]) -> Result<Polynomial, ResolutionError> {
    let n = l.n;
    let bad = || ResolutionError::BadGenerator { map, generator: format!("{generator:?}") };
    let in_range = |&x: &usize| (1..=n).contains(&x);
    match (map, generator) {
        (0, []) => Ok(Polynomial::one()),
        (1, [p, q]) if [p, q].into_iter().all(in_range) => Ok(&l.a(*p, *q) * &l.e0() - &l.e0() * &l.a(*p, *q)),
        (2, [p, q]) if [p, q].into_iter().all(in_range) => {
            Ok((1..=n).fold(Polynomial::zero(), |acc, i| acc + &l.a(*p, i) * &l.e(*q, i) + &l.e(*p, i) * &l.a(*q, i)))
        }
        (3, []) => {
            let mut out = Polynomial::zero();
            for i in 1..=n {
                out = out + l.f(i, i);
                for j in 1..=n {
                    for k in 1..=n {
                        out = out - &(&l.a(j, i) * &l.f(j, k)) * &l.a(k, i);
                    }
                }
            }
            Ok(out)
        }
        _ => Err(bad()),
    }
}

/// Index lists of the generators of map `i`.
fn generators(n: usize, map: u8) -> Vec<Vec<usize>> {
    match map {
        0 | 3 => vec![vec![]],
        _ => (1..=n).flat_map(|p| (1..=n).map(move |q| vec![p, q])).collect(),
    }
}

/// Id of the generator of map `i` in a universal or stage alphabet.
fn generator_id(l: &StageLetters, map: u8, g: &[usize]) -> LetterId {
    let idx: Vec<i64> = g.iter().map(|&x| x as i64).collect();
    let name = if map <= 1 { "e" } else { "f" };
    l.id(name, &idx)
}

/// The graph map of a stage: the images of its urbild generators in bild terms.
/// Stage 3 uses `-Φ3`, which is the orientation of the tabulated rule.
pub fn stage_graph_map(l: &StageLetters, stage: u8) -> Result<Vec<(LetterId, Polynomial)>, ResolutionError> {
    if !(1..=3).contains(&stage) {
        return Err(ResolutionError::BadStage(stage));
    }
    generators(l.n, stage)
        .into_iter()
        .map(|g| {
            let image = phi_image(l, stage, &g)?;
            let image = if stage == 3 { -image } else { image };
            Ok((generator_id(l, stage, &g), image))
        })
        .collect()
}

#[derive(Debug, Clone, Serialize)]
pub struct CompositionReport {
    /// `i` in `Φ_i ∘ Φ_{i+1}`.
    pub map: u8,
    pub generators: usize,
    /// Rendered generators whose composite does not reduce to zero.
    pub nonzero: Vec<String>,
}

impl CompositionReport {
    pub fn ok(&self) -> bool {
        self.nonzero.is_empty()
    }
}

/// Checks `Φ_i ∘ Φ_{i+1} = 0` modulo the algebra relations, for `i` in `0..=2`.
pub fn compose_zero(n: usize, i: u8, step_limit: u64) -> Result<CompositionReport, ResolutionError> {
    if i > 2 {
        return Err(ResolutionError::BadGenerator { map: i, generator: "composition".into() });
    }
    let alphabet = universal_alphabet(n);
    let l = StageLetters::new(&alphabet, n);
    let r_a = RewriteSystem::new(alphabet.clone(), OrderingSpec::canonical(), ncrw_aon::rules_in(&alphabet, n))?;
    let inner: Vec<(LetterId, Polynomial)> =
        generators(n, i).into_iter().map(|g| Ok((generator_id(&l, i, &g), phi_image(&l, i, &g)?))).collect::<Result<_, ResolutionError>>()?;
    let mut nonzero = Vec::new();
    let outer = generators(n, i + 1);
    for g in &outer {
        let image = phi_image(&l, i + 1, g)?;
        let composed = image.substitute(|id| inner.iter().find(|(x, _)| *x == id).map(|(_, p)| p.clone()));
        if !r_a.normal_form(&composed, step_limit)?.is_zero() {
            nonzero.push(alphabet.letter(generator_id(&l, i + 1, g)).token());
        }
    }
    Ok(CompositionReport { map: i, generators: outer.len(), nonzero })
}
