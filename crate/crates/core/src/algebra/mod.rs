//! Finite-dimensional associative unital algebras by structure constants.

pub mod idempotents;
pub mod ops;
pub mod presentation;
pub mod quiver;
pub mod quotient;
pub mod radical;

use std::collections::hash_map::DefaultHasher;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::{Arc, OnceLock, Weak};

use crate::error::{Error, Result};
use crate::exactla::{Field, Matrix, Span};
use crate::Config;

pub use ops::{AlgOps, StructOps};
pub use presentation::{Generator, Presentation, Word};
pub use quiver::{Arrow, QuiverSpec};
pub use quotient::{AlgebraMorphism, Corner, Quotient};

/// Shared handle; algebras are immutable once built.
pub type Alg<K> = Arc<Algebra<K>>;

/// Sparse structure constants: entry `i * d + j` lists `(k, c)` with `b_i b_j = sum c b_k`.
pub type Table<K> = Vec<Vec<(usize, <K as Field>::Elem)>>;

/// Optional precomputed data; every hint is verified during the build.
#[derive(Clone, Debug)]
pub struct Hints<K: Field> {
    pub radical: Option<Vec<Vec<K::Elem>>>,
    pub idempotents: Option<Vec<Vec<K::Elem>>>,
    pub vertex_labels: Option<Vec<String>>,
    pub quiver: Option<QuiverSpec>,
}

impl<K: Field> Default for Hints<K> {
    fn default() -> Self {
        Hints { radical: None, idempotents: None, vertex_labels: None, quiver: None }
    }
}

pub struct Algebra<K: Field> {
    field: K,
    dim: usize,
    labels: Vec<String>,
    mult: Table<K>,
    unit: Vec<K::Elem>,
    radical: Vec<Vec<K::Elem>>,
    rad_span: Span<K>,
    /// Bases of J, J^2, ... down to the last nonzero power.
    rad_powers: Vec<Vec<Vec<K::Elem>>>,
    idempotents: Vec<Vec<K::Elem>>,
    classes: Vec<usize>,
    /// dim e_v A e_v / e_v J e_v
    local_dims: Vec<usize>,
    vertex_labels: Vec<String>,
    quiver: Option<QuiverSpec>,
    fingerprint: u64,
    presentation: OnceLock<Presentation<K>>,
    opposite: OnceLock<Alg<K>>,
    op_origin: Option<Weak<Algebra<K>>>,
}

impl<K: Field> fmt::Debug for Algebra<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Algebra")
            .field("field", &self.field.spec())
            .field("dim", &self.dim)
            .field("radical_dim", &self.radical.len())
            .field("idempotents", &self.idempotents.len())
            .field("loewy_length", &self.loewy_length())
            .finish()
    }
}

fn unit_vec<K: Field>(k: &K, d: usize, i: usize) -> Vec<K::Elem> {
    let mut v = vec![k.zero(); d];
    v[i] = k.one();
    v
}

impl<K: Field> Algebra<K> {
    /// Builds from a sparse table, validating associativity and the unit.
    pub fn from_table(
        field: &K,
        labels: Vec<String>,
        mult: Table<K>,
        unit: Vec<K::Elem>,
        hints: Hints<K>,
        cfg: &Config,
    ) -> Result<Alg<K>> {
        let d = labels.len();
        if mult.len() != d * d || unit.len() != d {
            return Err(Error::Shape(format!("table for dimension {d} has wrong size")));
        }
        let mult: Table<K> = mult
            .into_iter()
            .map(|row| {
                let mut acc: Vec<K::Elem> = vec![field.zero(); d];
                for (k, v) in row {
                    acc[k] = field.add(&acc[k], &v);
                }
                acc.into_iter().enumerate().filter(|(_, v)| !field.is_zero(v)).collect()
            })
            .collect();
        check_table(field, d, &mult, &unit)?;
        Self::assemble(field, labels, mult, unit, hints, cfg)
    }

    /// Dense constants `c[i][j][k]`.
    pub fn from_structure_constants(
        field: &K,
        labels: Vec<String>,
        c: &[Vec<Vec<K::Elem>>],
        unit: Vec<K::Elem>,
        cfg: &Config,
    ) -> Result<Alg<K>> {
        let d = labels.len();
        let mut mult = vec![Vec::new(); d * d];
        for i in 0..d {
            for j in 0..d {
                for k in 0..d {
                    let v = &c[i][j][k];
                    if !field.is_zero(v) {
                        mult[i * d + j].push((k, v.clone()));
                    }
                }
            }
        }
        Self::from_table(field, labels, mult, unit, Hints::default(), cfg)
    }

    fn assemble(
        field: &K,
        labels: Vec<String>,
        mult: Table<K>,
        unit: Vec<K::Elem>,
        hints: Hints<K>,
        cfg: &Config,
    ) -> Result<Alg<K>> {
        let d = labels.len();
        let ops = StructOps::new(field, d, &mult, &unit);
        let radical = match hints.radical {
            Some(r) => r,
            None => radical::radical_basis(&ops)?,
        };
        let rad_span = Span::from_vectors(field, d, radical.iter());
        let radical: Vec<Vec<K::Elem>> = rad_span.basis().to_vec();
        let rad_powers = verify_radical(field, d, &mult, &unit, &rad_span)?;
        let mut rng = cfg.rng();
        let start = hints.idempotents.unwrap_or_else(|| if d == 0 { vec![] } else { vec![unit.clone()] });
        let hinted = start.len();
        let idempotents = idempotents::refine(&ops, &radical, start, &mut rng)?;
        let classes = idempotents::classes(&ops, &rad_span, &idempotents);
        let local_dims = idempotents
            .iter()
            .map(|e| {
                let (s, jd) = idempotents::corner(&ops, &radical, e);
                s.dim() - jd
            })
            .collect();
        let vertex_labels = match hints.vertex_labels {
            Some(v) if v.len() == idempotents.len() && hinted == idempotents.len() => v,
            _ => (1..=idempotents.len()).map(|i| i.to_string()).collect(),
        };
        let mut h = DefaultHasher::new();
        field.spec().hash(&mut h);
        d.hash(&mut h);
        mult.hash(&mut h);
        unit.hash(&mut h);
        idempotents.hash(&mut h);
        let fingerprint = h.finish();
        Ok(Arc::new(Algebra {
            field: field.clone(),
            dim: d,
            labels,
            mult,
            unit,
            radical,
            rad_span,
            rad_powers,
            idempotents,
            classes,
            local_dims,
            vertex_labels,
            quiver: hints.quiver,
            fingerprint,
            presentation: OnceLock::new(),
            opposite: OnceLock::new(),
            op_origin: None,
        }))
    }

    pub fn field(&self) -> &K {
        &self.field
    }
    pub fn dim(&self) -> usize {
        self.dim
    }
    pub fn labels(&self) -> &[String] {
        &self.labels
    }
    pub fn table(&self) -> &Table<K> {
        &self.mult
    }
    pub fn product(&self, i: usize, j: usize) -> &[(usize, K::Elem)] {
        &self.mult[i * self.dim + j]
    }
    pub fn unit(&self) -> &[K::Elem] {
        &self.unit
    }
    pub fn basis_vec(&self, i: usize) -> Vec<K::Elem> {
        unit_vec(&self.field, self.dim, i)
    }
    pub fn zero_vec(&self) -> Vec<K::Elem> {
        vec![self.field.zero(); self.dim]
    }
    pub fn mul(&self, a: &[K::Elem], b: &[K::Elem]) -> Vec<K::Elem> {
        ops::sparse_mul(&self.field, self.dim, &self.mult, a, b)
    }
    pub fn ops(&self) -> StructOps<'_, K> {
        StructOps::new(&self.field, self.dim, &self.mult, &self.unit)
    }
    pub fn radical(&self) -> &[Vec<K::Elem>] {
        &self.radical
    }
    pub fn radical_span(&self) -> &Span<K> {
        &self.rad_span
    }
    pub fn radical_power(&self, n: usize) -> Vec<Vec<K::Elem>> {
        if n == 0 {
            return (0..self.dim).map(|i| self.basis_vec(i)).collect();
        }
        self.rad_powers.get(n - 1).cloned().unwrap_or_default()
    }
    pub fn loewy_length(&self) -> usize {
        if self.dim == 0 {
            0
        } else {
            self.rad_powers.len() + 1
        }
    }
    pub fn idempotents(&self) -> &[Vec<K::Elem>] {
        &self.idempotents
    }
    pub fn num_vertices(&self) -> usize {
        self.idempotents.len()
    }
    pub fn classes(&self) -> &[usize] {
        &self.classes
    }
    pub fn num_classes(&self) -> usize {
        self.classes.iter().max().map_or(0, |m| m + 1)
    }
    /// dim e_v A e_v / e_v J e_v for each vertex.
    pub fn local_dims(&self) -> &[usize] {
        &self.local_dims
    }
    pub fn vertex_labels(&self) -> &[String] {
        &self.vertex_labels
    }
    pub fn vertex_index(&self, label: &str) -> Option<usize> {
        self.vertex_labels.iter().position(|l| l == label)
    }
    pub fn quiver(&self) -> Option<&QuiverSpec> {
        self.quiver.as_ref()
    }
    pub fn fingerprint(&self) -> u64 {
        self.fingerprint
    }
    /// Every corner is split local and no two idempotents are equivalent.
    pub fn is_split_basic(&self) -> bool {
        self.local_dims.iter().all(|&s| s == 1) && self.num_classes() == self.idempotents.len()
    }
    pub fn is_semisimple(&self) -> bool {
        self.radical.is_empty()
    }

    pub fn same_algebra(a: &Alg<K>, b: &Alg<K>) -> bool {
        Arc::ptr_eq(a, b) || (a.fingerprint == b.fingerprint && a.mult == b.mult && a.idempotents == b.idempotents)
    }

    /// Sum of the idempotents with the given indices.
    pub fn idempotent_sum(&self, set: &[usize]) -> Vec<K::Elem> {
        let k = &self.field;
        let mut v = self.zero_vec();
        for &i in set {
            for (a, b) in v.iter_mut().zip(&self.idempotents[i]) {
                *a = k.add(a, b);
            }
        }
        v
    }

    /// Basis of `a A b`.
    pub fn sandwich(&self, a: &[K::Elem], b: &[K::Elem]) -> Vec<Vec<K::Elem>> {
        let mut s = Span::new(&self.field, self.dim);
        for i in 0..self.dim {
            let x = self.basis_vec(i);
            s.insert(&self.mul(&self.mul(a, &x), b));
        }
        s.basis().to_vec()
    }

    /// Left multiplication matrix of `a`.
    pub fn left_matrix(&self, a: &[K::Elem]) -> Matrix<K> {
        self.ops().rep(a)
    }

    pub fn presentation(&self) -> &Presentation<K> {
        self.presentation.get_or_init(|| Presentation::build(self))
    }

    /// The opposite algebra; `a.opposite().opposite()` is `a` itself.
    pub fn opposite(self: &Arc<Self>) -> Alg<K> {
        if let Some(orig) = self.op_origin.as_ref().and_then(|w| w.upgrade()) {
            return orig;
        }
        self.opposite
            .get_or_init(|| {
                let d = self.dim;
                let mut mult = vec![Vec::new(); d * d];
                for i in 0..d {
                    for j in 0..d {
                        mult[i * d + j] = self.mult[j * d + i].clone();
                    }
                }
                let mut h = DefaultHasher::new();
                self.fingerprint.hash(&mut h);
                "op".hash(&mut h);
                let gens = self.presentation().generators().iter().map(|g| g.swapped()).collect();
                let op = Algebra {
                    field: self.field.clone(),
                    dim: d,
                    labels: self.labels.clone(),
                    mult,
                    unit: self.unit.clone(),
                    radical: self.radical.clone(),
                    rad_span: self.rad_span.clone(),
                    rad_powers: self.rad_powers.clone(),
                    idempotents: self.idempotents.clone(),
                    classes: self.classes.clone(),
                    local_dims: self.local_dims.clone(),
                    vertex_labels: self.vertex_labels.clone(),
                    quiver: self.quiver.as_ref().map(|q| q.reversed()),
                    fingerprint: h.finish(),
                    presentation: OnceLock::new(),
                    opposite: OnceLock::new(),
                    op_origin: Some(Arc::downgrade(self)),
                };
                let pres = Presentation::with_generators(&op, gens);
                let _ = op.presentation.set(pres);
                Arc::new(op)
            })
            .clone()
    }

    /// Dimension of `e_t A e_s`.
    pub fn block_dim(&self, t: usize, s: usize) -> usize {
        self.presentation().words().iter().filter(|w| w.src == s && w.tgt == t).count()
    }
}

fn check_table<K: Field>(k: &K, d: usize, mult: &Table<K>, unit: &[K::Elem]) -> Result<()> {
    for (idx, row) in mult.iter().enumerate() {
        if row.iter().any(|(kk, _)| *kk >= d) {
            return Err(Error::Input(format!("structure constant for pair {idx} points outside the basis")));
        }
    }
    // unit laws
    for i in 0..d {
        let b = unit_vec(k, d, i);
        if ops::sparse_mul(k, d, mult, unit, &b) != b {
            return Err(Error::Unit(format!("1·b{i} != b{i}")));
        }
        if ops::sparse_mul(k, d, mult, &b, unit) != b {
            return Err(Error::Unit(format!("b{i}·1 != b{i}")));
        }
    }
    // (b_i b_j) b_l = b_i (b_j b_l)
    for i in 0..d {
        for j in 0..d {
            let ij = &mult[i * d + j];
            for l in 0..d {
                let mut lhs = vec![k.zero(); d];
                for (m, c) in ij {
                    for (n, v) in &mult[m * d + l] {
                        k.mul_add(&mut lhs[*n], c, v);
                    }
                }
                let mut rhs = vec![k.zero(); d];
                for (m, c) in &mult[j * d + l] {
                    for (n, v) in &mult[i * d + m] {
                        k.mul_add(&mut rhs[*n], c, v);
                    }
                }
                if lhs != rhs {
                    return Err(Error::Associativity(i, j, l));
                }
            }
        }
    }
    Ok(())
}

/// Checks that `rad` is a nilpotent two-sided ideal with semisimple quotient;
/// returns the bases of its nonzero powers.
fn verify_radical<K: Field>(
    k: &K,
    d: usize,
    mult: &Table<K>,
    unit: &[K::Elem],
    rad: &Span<K>,
) -> Result<Vec<Vec<Vec<K::Elem>>>> {
    let basis = rad.basis().to_vec();
    for j in &basis {
        for i in 0..d {
            let b = unit_vec(k, d, i);
            if !rad.contains(&ops::sparse_mul(k, d, mult, &b, j)) || !rad.contains(&ops::sparse_mul(k, d, mult, j, &b)) {
                return Err(Error::Input("radical candidate is not a two-sided ideal".into()));
            }
        }
    }
    let mut powers = Vec::new();
    let mut cur = basis.clone();
    while !cur.is_empty() {
        if powers.len() > d {
            return Err(Error::Input("radical candidate is not nilpotent".into()));
        }
        powers.push(cur.clone());
        let mut next = Span::new(k, d);
        for x in &cur {
            for j in &basis {
                next.insert(&ops::sparse_mul(k, d, mult, x, j));
            }
        }
        if next.dim() == cur.len() {
            return Err(Error::Input("radical candidate is not nilpotent".into()));
        }
        cur = next.basis().to_vec();
    }
    // quotient has zero radical
    let (qlabels, qmult, qunit, _) = quotient::quotient_table(k, d, mult, unit, rad);
    let qd = qlabels;
    let qops = StructOps::new(k, qd, &qmult, &qunit);
    if !radical::radical_basis(&qops)?.is_empty() {
        return Err(Error::Input("quotient by the radical candidate is not semisimple".into()));
    }
    Ok(powers)
}
