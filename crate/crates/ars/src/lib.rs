//! Finite abstract reduction systems.
//!
//! Every property is decided exactly by reachability on the finite edge graph.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ArsError {
    #[error("edge endpoint `{0}` is not an element")]
    UnknownElement(String),
    #[error("duplicate element `{0}`")]
    DuplicateElement(String),
}

/// A finite reduction relation on named elements.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize, Default)]
pub struct FiniteArs {
    pub elements: Vec<String>,
    pub edges: Vec<(String, String)>,
}

/// Result of [`analyze_ars`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ArsReport {
    pub noetherian: bool,
    pub locally_confluent: bool,
    pub totally_confluent: bool,
    pub church_rosser: bool,
    pub unique_normal_forms: bool,
    /// Every irreducible element reachable from each element.
    pub normal_forms: BTreeMap<String, BTreeSet<String>>,
}

impl FiniteArs {
    pub fn new<S: Into<String>>(elements: Vec<S>, edges: Vec<(S, S)>) -> Self {
        FiniteArs {
            elements: elements.into_iter().map(Into::into).collect(),
            edges: edges.into_iter().map(|(a, b)| (a.into(), b.into())).collect(),
        }
    }

    /// Adjacency lists over element indices.
    pub fn adjacency(&self) -> Result<Vec<Vec<usize>>, ArsError> {
        let mut index = HashMap::new();
        for (i, e) in self.elements.iter().enumerate() {
            if index.insert(e.as_str(), i).is_some() {
                return Err(ArsError::DuplicateElement(e.clone()));
            }
        }
        let mut adj = vec![Vec::new(); self.elements.len()];
        for (a, b) in &self.edges {
            let ia = *index.get(a.as_str()).ok_or_else(|| ArsError::UnknownElement(a.clone()))?;
            let ib = *index.get(b.as_str()).ok_or_else(|| ArsError::UnknownElement(b.clone()))?;
            if !adj[ia].contains(&ib) {
                adj[ia].push(ib);
            }
        }
        Ok(adj)
    }
}

/// Reflexive-transitive closure as a dense boolean matrix.
fn closure(adj: &[Vec<usize>]) -> Vec<Vec<bool>> {
    let n = adj.len();
    let mut reach = vec![vec![false; n]; n];
    for (x, row) in reach.iter_mut().enumerate() {
        let mut stack = vec![x];
        row[x] = true;
        while let Some(y) = stack.pop() {
            for &z in &adj[y] {
                if !row[z] {
                    row[z] = true;
                    stack.push(z);
                }
            }
        }
    }
    reach
}

fn joinable(reach: &[Vec<bool>], y: usize, z: usize) -> bool {
    reach[y].iter().zip(&reach[z]).any(|(a, b)| *a && *b)
}

/// Decides noetherianity, local and total confluence, the Church-Rosser property
/// and uniqueness of normal forms.
pub fn analyze_ars(ars: &FiniteArs) -> Result<ArsReport, ArsError> {
    let adj = ars.adjacency()?;
    let n = adj.len();
    let reach = closure(&adj);

    // A cycle exists iff some x reaches itself through at least one edge.
    let noetherian = !(0..n).any(|x| adj[x].iter().any(|&y| reach[y][x]));

    let locally_confluent = adj.iter().all(|succ| {
        succ.iter().all(|&y| succ.iter().all(|&z| joinable(&reach, y, z)))
    });

    let totally_confluent = (0..n).all(|x| {
        let r: Vec<usize> = (0..n).filter(|&y| reach[x][y]).collect();
        r.iter().all(|&y| r.iter().all(|&z| joinable(&reach, y, z)))
    });

    // Undirected components by union-find.
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while p[r] != r {
            r = p[r];
        }
        let mut c = x;
        while p[c] != r {
            let nx = p[c];
            p[c] = r;
            c = nx;
        }
        r
    }
    for (x, succ) in adj.iter().enumerate() {
        for &y in succ {
            let (a, b) = (find(&mut parent, x), find(&mut parent, y));
            parent[a] = b;
        }
    }
    let comp: Vec<usize> = (0..n).map(|x| find(&mut parent, x)).collect();
    let church_rosser =
        (0..n).all(|x| (0..n).all(|y| comp[x] != comp[y] || joinable(&reach, x, y)));

    let irreducible: Vec<bool> = adj.iter().map(|s| s.is_empty()).collect();
    let mut normal_forms = BTreeMap::new();
    let mut unique_normal_forms = true;
    for (row, name) in reach.iter().zip(&ars.elements) {
        let nf: BTreeSet<String> =
            (0..n).filter(|&y| row[y] && irreducible[y]).map(|y| ars.elements[y].clone()).collect();
        unique_normal_forms &= nf.len() == 1;
        normal_forms.insert(name.clone(), nf);
    }

    Ok(ArsReport { noetherian, locally_confluent, totally_confluent, church_rosser, unique_normal_forms, normal_forms })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn locally_but_not_totally_confluent() {
        let ars = FiniteArs::new(
            vec!["x1", "x2", "z1", "z2"],
            vec![("x1", "z1"), ("x1", "x2"), ("x2", "x1"), ("x2", "z2")],
        );
        let r = analyze_ars(&ars).unwrap();
        assert!(r.locally_confluent);
        assert!(!r.totally_confluent);
        assert!(!r.noetherian);
        assert!(!r.church_rosser);
        assert!(!r.unique_normal_forms);
        let nf: Vec<&str> = r.normal_forms["x1"].iter().map(String::as_str).collect();
        assert_eq!(nf, vec!["z1", "z2"]);
    }

    #[test]
    fn empty_system() {
        let r = analyze_ars(&FiniteArs::default()).unwrap();
        assert!(r.noetherian && r.locally_confluent && r.totally_confluent && r.church_rosser && r.unique_normal_forms);
    }

    #[test]
    fn unknown_endpoint() {
        let ars = FiniteArs::new(vec!["a"], vec![("a", "b")]);
        assert_eq!(analyze_ars(&ars), Err(ArsError::UnknownElement("b".into())));
    }

    #[test]
    fn self_loop_is_not_noetherian() {
        let ars = FiniteArs::new(vec!["a"], vec![("a", "a")]);
        assert!(!analyze_ars(&ars).unwrap().noetherian);
    }
}
