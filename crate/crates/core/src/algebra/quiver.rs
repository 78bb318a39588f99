//! Bound quiver algebras with monomial (zero) relations.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactla::Field;
use crate::Config;

use super::{Alg, Algebra, Hints};

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Arrow {
    pub name: String,
    pub from: String,
    pub to: String,
}

/// Relation paths list arrows in the order they are traversed.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct QuiverSpec {
    pub vertices: Vec<String>,
    pub arrows: Vec<Arrow>,
    #[serde(default)]
    pub zero_relations: Vec<Vec<String>>,
}

/// A nonzero residue path: start vertex and arrow indices in traversal order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Path {
    pub start: usize,
    pub end: usize,
    pub arrows: Vec<usize>,
}

impl QuiverSpec {
    pub fn new(vertices: &[&str], arrows: &[(&str, &str, &str)], relations: &[&[&str]]) -> Self {
        QuiverSpec {
            vertices: vertices.iter().map(|s| s.to_string()).collect(),
            arrows: arrows
                .iter()
                .map(|(n, f, t)| Arrow { name: n.to_string(), from: f.to_string(), to: t.to_string() })
                .collect(),
            zero_relations: relations.iter().map(|r| r.iter().map(|s| s.to_string()).collect()).collect(),
        }
    }

    /// Linearly oriented A_n path algebra quiver `1 → 2 → ⋯ → n`.
    pub fn linear(n: usize) -> Self {
        let vs: Vec<String> = (1..=n).map(|i| i.to_string()).collect();
        QuiverSpec {
            arrows: (1..n)
                .map(|i| Arrow { name: format!("a{i}"), from: vs[i - 1].clone(), to: vs[i].clone() })
                .collect(),
            vertices: vs,
            zero_relations: vec![],
        }
    }

    /// Arrows reversed, relation paths read backwards.
    pub fn reversed(&self) -> Self {
        QuiverSpec {
            vertices: self.vertices.clone(),
            arrows: self
                .arrows
                .iter()
                .map(|a| Arrow { name: a.name.clone(), from: a.to.clone(), to: a.from.clone() })
                .collect(),
            zero_relations: self.zero_relations.iter().map(|r| r.iter().rev().cloned().collect()).collect(),
        }
    }

    /// Full subquiver on `keep`; relations through removed arrows are dropped.
    pub fn restricted(&self, keep: &[String]) -> Self {
        let arrows: Vec<Arrow> =
            self.arrows.iter().filter(|a| keep.contains(&a.from) && keep.contains(&a.to)).cloned().collect();
        let names: Vec<&String> = arrows.iter().map(|a| &a.name).collect();
        QuiverSpec {
            vertices: self.vertices.iter().filter(|v| keep.contains(v)).cloned().collect(),
            zero_relations: self
                .zero_relations
                .iter()
                .filter(|r| r.iter().all(|x| names.contains(&x)))
                .cloned()
                .collect(),
            arrows,
        }
    }

    fn indexed(&self) -> Result<(Vec<(usize, usize)>, Vec<Vec<usize>>)> {
        let mut vidx = HashMap::new();
        for (i, v) in self.vertices.iter().enumerate() {
            if vidx.insert(v.as_str(), i).is_some() {
                return Err(Error::Input(format!("duplicate vertex '{v}'")));
            }
        }
        let mut aidx = HashMap::new();
        let mut ends = Vec::new();
        for (i, a) in self.arrows.iter().enumerate() {
            let f = *vidx.get(a.from.as_str()).ok_or_else(|| Error::Input(format!("arrow '{}' has unknown source '{}'", a.name, a.from)))?;
            let t = *vidx.get(a.to.as_str()).ok_or_else(|| Error::Input(format!("arrow '{}' has unknown target '{}'", a.name, a.to)))?;
            if aidx.insert(a.name.as_str(), i).is_some() {
                return Err(Error::Input(format!("duplicate arrow '{}'", a.name)));
            }
            ends.push((f, t));
        }
        let mut rels = Vec::new();
        for (ri, r) in self.zero_relations.iter().enumerate() {
            if r.len() < 2 {
                return Err(Error::Input(format!("relation {ri} has length {} < 2", r.len())));
            }
            let mut path = Vec::new();
            for name in r {
                path.push(*aidx.get(name.as_str()).ok_or_else(|| Error::Input(format!("relation {ri} uses unknown arrow '{name}'")))?);
            }
            for w in path.windows(2) {
                if ends[w[0]].1 != ends[w[1]].0 {
                    return Err(Error::Input(format!(
                        "relation {ri} is not composable at '{}' then '{}'",
                        self.arrows[w[0]].name, self.arrows[w[1]].name
                    )));
                }
            }
            rels.push(path);
        }
        Ok((ends, rels))
    }

    /// All nonzero residue paths, trivial ones first, then by length.
    pub fn paths(&self, cap: usize) -> Result<Vec<Path>> {
        let (ends, rels) = self.indexed()?;
        let is_zero = |p: &[usize]| rels.iter().any(|r| p.len() >= r.len() && p.ends_with(r));
        let mut out: Vec<Path> = (0..self.vertices.len()).map(|v| Path { start: v, end: v, arrows: vec![] }).collect();
        let mut layer: Vec<Path> = out.clone();
        while !layer.is_empty() {
            let mut next = Vec::new();
            for p in &layer {
                for (ai, &(f, t)) in ends.iter().enumerate() {
                    if f != p.end {
                        continue;
                    }
                    let mut arrows = p.arrows.clone();
                    arrows.push(ai);
                    if is_zero(&arrows) {
                        continue;
                    }
                    next.push(Path { start: p.start, end: t, arrows });
                    if out.len() + next.len() > cap {
                        return Err(Error::PathCap(cap));
                    }
                }
            }
            out.extend(next.iter().cloned());
            layer = next;
        }
        Ok(out)
    }

    pub fn path_label(&self, p: &Path) -> String {
        if p.arrows.is_empty() {
            return format!("e{}", self.vertices[p.start]);
        }
        let names: Vec<&str> = p.arrows.iter().map(|&a| self.arrows[a].name.as_str()).collect();
        if names.iter().all(|n| n.chars().count() == 1) {
            names.concat()
        } else {
            names.join("*")
        }
    }
}

impl<K: Field> Algebra<K> {
    /// Path algebra modulo zero relations. The ring product `p·q` is "q then p".
    pub fn from_quiver(q: &QuiverSpec, field: &K, cfg: &Config) -> Result<Alg<K>> {
        let paths = q.paths(cfg.cap_paths)?;
        let d = paths.len();
        let index: HashMap<(usize, Vec<usize>), usize> =
            paths.iter().enumerate().map(|(i, p)| ((p.start, p.arrows.clone()), i)).collect();
        let mut mult = vec![Vec::new(); d * d];
        for (i, p) in paths.iter().enumerate() {
            for (j, r) in paths.iter().enumerate() {
                // b_i b_j = r then p
                if r.end != p.start {
                    continue;
                }
                let mut arrows = r.arrows.clone();
                arrows.extend(&p.arrows);
                if let Some(&k) = index.get(&(r.start, arrows)) {
                    mult[i * d + j].push((k, field.one()));
                }
            }
        }
        let n = q.vertices.len();
        let mut unit = vec![field.zero(); d];
        for u in unit.iter_mut().take(n) {
            *u = field.one();
        }
        let basis = |i: usize| {
            let mut v = vec![field.zero(); d];
            v[i] = field.one();
            v
        };
        let hints = Hints {
            radical: Some((n..d).map(basis).collect()),
            idempotents: Some((0..n).map(basis).collect()),
            vertex_labels: Some(q.vertices.clone()),
            quiver: Some(q.clone()),
        };
        let labels = paths.iter().map(|p| q.path_label(p)).collect();
        Algebra::from_table(field, labels, mult, unit, hints, cfg)
    }
}
