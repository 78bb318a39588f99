//! Quotients by idempotent ideals, corner algebras and algebra morphisms.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::exactla::{Field, Matrix, Span};
use crate::Config;

use super::{Alg, Algebra, Hints, Table};

/// Coordinates not used as pivots by the semi-echelon span.
pub(crate) fn complement_indices<K: Field>(k: &K, d: usize, span: &Span<K>) -> Vec<usize> {
    (0..d)
        .filter(|&i| {
            let mut v = vec![k.zero(); d];
            v[i] = k.one();
            let r = span.reduce(&v);
            // a pivot coordinate reduces to something vanishing at i
            !k.is_zero(&r[i])
        })
        .collect()
}

/// Class of `v` modulo the span, in complement coordinates.
pub(crate) fn project<K: Field>(span: &Span<K>, comp: &[usize], v: &[K::Elem]) -> Vec<K::Elem> {
    let r = span.reduce(v);
    comp.iter().map(|&i| r[i].clone()).collect()
}

pub(crate) fn quotient_table<K: Field>(
    k: &K,
    d: usize,
    mult: &Table<K>,
    unit: &[K::Elem],
    ideal: &Span<K>,
) -> (usize, Table<K>, Vec<K::Elem>, Vec<usize>) {
    let comp = complement_indices(k, d, ideal);
    let qd = comp.len();
    let mut qmult = vec![Vec::new(); qd * qd];
    for (a, &i) in comp.iter().enumerate() {
        for (b, &j) in comp.iter().enumerate() {
            let mut v = vec![k.zero(); d];
            for (kk, c) in &mult[i * d + j] {
                v[*kk] = c.clone();
            }
            let p = project(ideal, &comp, &v);
            qmult[a * qd + b] = p.into_iter().enumerate().filter(|(_, c)| !k.is_zero(c)).collect();
        }
    }
    let qunit = project(ideal, &comp, unit);
    (qd, qmult, qunit, comp)
}

/// A unital algebra homomorphism given by its matrix (target dim × source dim).
#[derive(Clone, Debug)]
pub struct AlgebraMorphism<K: Field> {
    pub src: Alg<K>,
    pub tgt: Alg<K>,
    pub matrix: Matrix<K>,
}

impl<K: Field> AlgebraMorphism<K> {
    pub fn new(src: Alg<K>, tgt: Alg<K>, matrix: Matrix<K>) -> Result<Self> {
        if matrix.shape() != (tgt.dim(), src.dim()) {
            return Err(Error::Shape("algebra morphism matrix has the wrong shape".into()));
        }
        let f = AlgebraMorphism { src, tgt, matrix };
        if f.apply(f.src.unit()) != f.tgt.unit() {
            return Err(Error::Input("map does not preserve the unit".into()));
        }
        let d = f.src.dim();
        let images: Vec<Vec<K::Elem>> = (0..d).map(|i| f.matrix.col(i)).collect();
        for i in 0..d {
            for j in 0..d {
                let lhs = f.apply(&f.src.mul(&f.src.basis_vec(i), &f.src.basis_vec(j)));
                let rhs = f.tgt.mul(&images[i], &images[j]);
                if lhs != rhs {
                    return Err(Error::Input(format!("map is not multiplicative on basis pair ({i}, {j})")));
                }
            }
        }
        Ok(f)
    }

    pub fn identity(a: &Alg<K>) -> Self {
        AlgebraMorphism { src: a.clone(), tgt: a.clone(), matrix: Matrix::identity(a.field(), a.dim()) }
    }

    pub fn apply(&self, v: &[K::Elem]) -> Vec<K::Elem> {
        self.matrix.mul_vec(v)
    }
}

/// `Γ / ΓeΓ` with its projection.
#[derive(Clone, Debug)]
pub struct Quotient<K: Field> {
    pub algebra: Alg<K>,
    pub projection: AlgebraMorphism<K>,
    /// Basis of the ideal, in coordinates of the ambient algebra.
    pub ideal: Vec<Vec<K::Elem>>,
    /// Ambient vertex index of each quotient vertex.
    pub vertices: Vec<usize>,
}

/// `eΓe` with its (non-unital) embedding.
#[derive(Clone, Debug)]
pub struct Corner<K: Field> {
    pub algebra: Alg<K>,
    /// Ambient dim × corner dim.
    pub embedding: Matrix<K>,
    pub vertices: Vec<usize>,
}

impl<K: Field> Algebra<K> {
    /// Basis of the two-sided ideal generated by `e`.
    pub fn ideal_generated(&self, e: &[K::Elem]) -> Vec<Vec<K::Elem>> {
        let k = self.field();
        let d = self.dim();
        let mut left = Span::new(k, d);
        for i in 0..d {
            left.insert(&self.mul(&self.basis_vec(i), e));
        }
        let mut ideal = Span::new(k, d);
        for x in left.basis() {
            for j in 0..d {
                ideal.insert(&self.mul(x, &self.basis_vec(j)));
            }
        }
        ideal.basis().to_vec()
    }

    /// `Γ/ΓeΓ` for `e` the sum of the idempotents indexed by `set`.
    pub fn quotient_by_idempotent(self: &Arc<Self>, set: &[usize], cfg: &Config) -> Result<Quotient<K>> {
        let k = self.field();
        let d = self.dim();
        check_set(self, set)?;
        let e = self.idempotent_sum(set);
        let ideal_basis = self.ideal_generated(&e);
        let ideal = Span::from_vectors(k, d, ideal_basis.iter());
        let (qd, qmult, qunit, comp) = quotient_table(k, d, self.table(), self.unit(), &ideal);
        let vertices: Vec<usize> = (0..self.num_vertices()).filter(|v| !set.contains(v)).collect();
        let proj = |v: &[K::Elem]| project(&ideal, &comp, v);
        let mut rad = Span::new(k, qd);
        for j in self.radical() {
            rad.insert(&proj(j));
        }
        let hints = Hints {
            radical: Some(rad.basis().to_vec()),
            idempotents: Some(vertices.iter().map(|&v| proj(&self.idempotents()[v])).collect()),
            vertex_labels: Some(vertices.iter().map(|&v| self.vertex_labels()[v].clone()).collect()),
            quiver: self.quiver().map(|q| {
                let keep: Vec<String> = vertices.iter().map(|&v| self.vertex_labels()[v].clone()).collect();
                q.restricted(&keep)
            }),
        };
        let labels = comp.iter().map(|&i| self.labels()[i].clone()).collect();
        let alg = Algebra::from_table(k, labels, qmult, qunit, hints, cfg)?;
        let matrix = Matrix::from_cols(k, qd, &(0..d).map(|i| proj(&self.basis_vec(i))).collect::<Vec<_>>());
        let projection = AlgebraMorphism { src: self.clone(), tgt: alg.clone(), matrix };
        Ok(Quotient { algebra: alg, projection, ideal: ideal_basis, vertices })
    }

    /// The corner algebra `eΓe` for `e` the sum of the idempotents indexed by `set`.
    pub fn corner(self: &Arc<Self>, set: &[usize], cfg: &Config) -> Result<Corner<K>> {
        let k = self.field();
        check_set(self, set)?;
        let e = self.idempotent_sum(set);
        let span = Span::from_vectors(k, self.dim(), self.sandwich(&e, &e).iter());
        let basis = span.basis().to_vec();
        let cd = basis.len();
        let coords = |v: &[K::Elem]| span.coords(v).expect("element of the corner");
        let mut mult = vec![Vec::new(); cd * cd];
        for a in 0..cd {
            for b in 0..cd {
                let p = coords(&self.mul(&basis[a], &basis[b]));
                mult[a * cd + b] = p.into_iter().enumerate().filter(|(_, c)| !k.is_zero(c)).collect();
            }
        }
        let unit = if cd == 0 { vec![] } else { coords(&e) };
        let rad: Vec<Vec<K::Elem>> = self.sandwich_radical(&e).iter().map(|v| coords(v)).collect();
        let hints = Hints {
            radical: Some(rad),
            idempotents: Some(set.iter().map(|&v| coords(&self.idempotents()[v])).collect()),
            vertex_labels: Some(set.iter().map(|&v| self.vertex_labels()[v].clone()).collect()),
            quiver: None,
        };
        let labels = (0..cd).map(|i| format!("c{i}")).collect();
        let alg = Algebra::from_table(k, labels, mult, unit, hints, cfg)?;
        let embedding = Matrix::from_cols(k, self.dim(), &basis);
        Ok(Corner { algebra: alg, embedding, vertices: set.to_vec() })
    }

    /// Basis of `eJe`.
    pub fn sandwich_radical(&self, e: &[K::Elem]) -> Vec<Vec<K::Elem>> {
        let mut s = Span::new(self.field(), self.dim());
        for j in self.radical() {
            s.insert(&self.mul(&self.mul(e, j), e));
        }
        s.basis().to_vec()
    }
}

fn check_set<K: Field>(a: &Algebra<K>, set: &[usize]) -> Result<()> {
    let n = a.num_vertices();
    let mut seen = vec![false; n];
    for &v in set {
        if v >= n || seen[v] {
            return Err(Error::Input(format!("invalid idempotent index {v}")));
        }
        seen[v] = true;
    }
    Ok(())
}
