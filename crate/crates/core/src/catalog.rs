//! Small standard algebras used by tests, the acceptance suite and the CLI.

use crate::algebra::{Alg, Algebra, QuiverSpec};
use crate::error::Result;
use crate::exactla::Field;
use crate::Config;

/// `k[x]/(x^n)` as a one-loop quiver.
pub fn truncated_poly_quiver(n: usize) -> QuiverSpec {
    let mut q = QuiverSpec::new(&["1"], &[("x", "1", "1")], &[]);
    if n >= 1 {
        q.zero_relations.push(vec!["x".to_string(); n]);
    }
    q
}

pub fn truncated_poly<K: Field>(field: &K, n: usize, cfg: &Config) -> Result<Alg<K>> {
    Algebra::from_quiver(&truncated_poly_quiver(n), field, cfg)
}

/// Product of `n` copies of the field.
pub fn semisimple<K: Field>(field: &K, n: usize, cfg: &Config) -> Result<Alg<K>> {
    let names: Vec<String> = (1..=n).map(|i| i.to_string()).collect();
    let q = QuiverSpec { vertices: names, arrows: vec![], zero_relations: vec![] };
    Algebra::from_quiver(&q, field, cfg)
}

/// Linearly oriented `A_n` path algebra.
pub fn linear_an<K: Field>(field: &K, n: usize, cfg: &Config) -> Result<Alg<K>> {
    Algebra::from_quiver(&QuiverSpec::linear(n), field, cfg)
}

/// `D_4` with all arrows into the central vertex.
pub fn d4_quiver() -> QuiverSpec {
    QuiverSpec::new(&["1", "2", "3", "4"], &[("a", "1", "4"), ("b", "2", "4"), ("c", "3", "4")], &[])
}

/// Three vertices, arrows `a:1→2, b:2→3, c:3→1, d:3→1`, relations `bc, ca, dab`.
pub fn rrc_example_quiver() -> QuiverSpec {
    QuiverSpec::new(
        &["1", "2", "3"],
        &[("a", "1", "2"), ("b", "2", "3"), ("c", "3", "1"), ("d", "3", "1")],
        &[&["b", "c"], &["c", "a"], &["d", "a", "b"]],
    )
}

/// Three vertices, arrows `a:1→2, b:2→3, c:3→1, d:1→3`, relations `dc, bca, bcd, ca`.
pub fn qh_example_quiver() -> QuiverSpec {
    QuiverSpec::new(
        &["1", "2", "3"],
        &[("a", "1", "2"), ("b", "2", "3"), ("c", "3", "1"), ("d", "1", "3")],
        &[&["d", "c"], &["b", "c", "a"], &["b", "c", "d"], &["c", "a"]],
    )
}

/// Nakayama algebra on an oriented line (`cyclic = false`) or cycle with `n` vertices,
/// truncated so that the projective at vertex `i` has Loewy length `kupisch[i]`.
pub fn nakayama_quiver(kupisch: &[usize], cyclic: bool) -> QuiverSpec {
    let n = kupisch.len();
    let vertices: Vec<String> = (1..=n).map(|i| i.to_string()).collect();
    let m = if cyclic { n } else { n.saturating_sub(1) };
    let arrows: Vec<crate::algebra::Arrow> = (0..m)
        .map(|i| crate::algebra::Arrow {
            name: format!("a{}", i + 1),
            from: vertices[i].clone(),
            to: vertices[(i + 1) % n].clone(),
        })
        .collect();
    let mut rels = Vec::new();
    for (i, &l) in kupisch.iter().enumerate() {
        // the path of length l from vertex i is zero
        let mut path = Vec::new();
        let mut v = i;
        let mut ok = true;
        for _ in 0..l {
            if !cyclic && v + 1 >= n {
                ok = false;
                break;
            }
            path.push(format!("a{}", v + 1));
            v = (v + 1) % n;
        }
        if ok && l >= 2 {
            rels.push(path);
        }
    }
    // keep only minimal relations
    let minimal: Vec<Vec<String>> = rels
        .iter()
        .filter(|r| !rels.iter().any(|s| s != *r && s.len() < r.len() && r.windows(s.len()).any(|w| w == s.as_slice())))
        .cloned()
        .collect();
    QuiverSpec { vertices, arrows, zero_relations: minimal }
}
