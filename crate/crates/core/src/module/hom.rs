use std::sync::Arc;

use crate::algebra::{radical, Alg, AlgOps, Algebra, Hints, Table};
use crate::error::{Error, Result};
use crate::exactla::{Field, Matrix};
use crate::Config;

use super::{Module, Morphism};

/// A basis of `Hom(X, Y)` with constant-time coordinates.
#[derive(Clone, Debug)]
pub struct HomSpace<K: Field> {
    pub src: Module<K>,
    pub tgt: Module<K>,
    pub basis: Vec<Morphism<K>>,
    /// Flattened positions at which the basis is the identity.
    free: Vec<usize>,
}

impl<K: Field> HomSpace<K> {
    pub fn new(x: &Module<K>, y: &Module<K>) -> Result<Self> {
        x.check_same_algebra(y)?;
        let k = x.field();
        let n = x.dims().len();
        let mut base = Vec::with_capacity(n + 1);
        let mut u = 0;
        for v in 0..n {
            base.push(u);
            u += y.dims()[v] * x.dims()[v];
        }
        if u == 0 {
            return Ok(HomSpace { src: x.clone(), tgt: y.clone(), basis: vec![], free: vec![] });
        }
        let pres = x.algebra().presentation();
        let mut rows: Vec<Vec<K::Elem>> = Vec::new();
        for (gi, g) in pres.generators().iter().enumerate() {
            let (s, t) = (g.src, g.tgt);
            let (xs, xt, ys) = (x.dims()[s], x.dims()[t], y.dims()[s]);
            let yt = y.dims()[t];
            if yt == 0 || xs == 0 {
                continue;
            }
            let rx = x.act(gi);
            let ry = y.act(gi);
            for i in 0..yt {
                for j in 0..xs {
                    let mut row = vec![k.zero(); u];
                    for l in 0..xt {
                        let c = rx.get(l, j);
                        if !k.is_zero(c) {
                            let idx = base[t] + i * xt + l;
                            row[idx] = k.add(&row[idx], c);
                        }
                    }
                    for l in 0..ys {
                        let c = ry.get(i, l);
                        if !k.is_zero(c) {
                            let idx = base[s] + l * xs + j;
                            row[idx] = k.sub(&row[idx], c);
                        }
                    }
                    if row.iter().any(|e| !k.is_zero(e)) {
                        rows.push(row);
                    }
                }
            }
        }
        let sys = Matrix::from_rows(k, u, &rows);
        let (_, pivots, _) = sys.rref();
        let ker = sys.kernel_basis();
        let mut is_pivot = vec![false; u];
        for p in pivots {
            is_pivot[p] = true;
        }
        let free: Vec<usize> = (0..u).filter(|&i| !is_pivot[i]).collect();
        let basis = ker.to_cols().iter().map(|c| Morphism::unflatten(x, y, c)).collect();
        Ok(HomSpace { src: x.clone(), tgt: y.clone(), basis, free })
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Coordinates of a morphism known to lie in the space.
    pub fn coords(&self, f: &Morphism<K>) -> Vec<K::Elem> {
        let v = f.flatten();
        self.free.iter().map(|&i| v[i].clone()).collect()
    }

    pub fn element(&self, c: &[K::Elem]) -> Morphism<K> {
        Morphism::combination(&self.src, &self.tgt, c, &self.basis)
    }

    pub fn random<R: rand::Rng + ?Sized>(&self, rng: &mut R) -> Morphism<K> {
        let k = self.src.field();
        let c: Vec<K::Elem> = (0..self.dim()).map(|_| k.random(rng)).collect();
        self.element(&c)
    }
}

pub fn hom_basis<K: Field>(x: &Module<K>, y: &Module<K>) -> Result<Vec<Morphism<K>>> {
    Ok(HomSpace::new(x, y)?.basis)
}

pub fn hom_dim<K: Field>(x: &Module<K>, y: &Module<K>) -> Result<usize> {
    Ok(HomSpace::new(x, y)?.dim())
}

/// `End(X)` as an algebra with product "f then g".
#[derive(Debug)]
pub struct EndData<K: Field> {
    pub space: HomSpace<K>,
    pub algebra: Alg<K>,
}

struct EndOps<'a, K: Field> {
    field: &'a K,
    d: usize,
    table: &'a Table<K>,
    unit: &'a [K::Elem],
    mats: Vec<Matrix<K>>,
    traces: Vec<K::Elem>,
}

impl<'a, K: Field> AlgOps<K> for EndOps<'a, K> {
    fn field(&self) -> &K {
        self.field
    }
    fn dim(&self) -> usize {
        self.d
    }
    fn mul(&self, a: &[K::Elem], b: &[K::Elem]) -> Vec<K::Elem> {
        crate::algebra::ops::sparse_mul(self.field, self.d, self.table, a, b)
    }
    fn one(&self) -> Vec<K::Elem> {
        self.unit.to_vec()
    }
    fn rep(&self, a: &[K::Elem]) -> Matrix<K> {
        let n = self.mats.first().map_or(0, |m| m.rows());
        let mut m = Matrix::zeros(self.field, n, n);
        for (c, b) in a.iter().zip(&self.mats) {
            m.add_scaled(c, b);
        }
        m
    }
    fn rep_dim(&self) -> usize {
        self.mats.first().map_or(0, |m| m.rows())
    }
    fn trace(&self, a: &[K::Elem]) -> K::Elem {
        let k = self.field;
        let mut t = k.zero();
        for (x, tr) in a.iter().zip(&self.traces) {
            if !k.is_zero(x) {
                k.mul_add(&mut t, x, tr);
            }
        }
        t
    }
}

/// Structure constants of `End(X)` in the given basis.
pub(crate) fn end_table<K: Field>(space: &HomSpace<K>) -> (Table<K>, Vec<K::Elem>) {
    let k = space.src.field();
    let d = space.dim();
    let mut table = vec![Vec::new(); d * d];
    for a in 0..d {
        for b in 0..d {
            // f_a · f_b = f_a then f_b
            let c = space.coords(&space.basis[a].then(&space.basis[b]));
            table[a * d + b] = c.into_iter().enumerate().filter(|(_, v)| !k.is_zero(v)).collect();
        }
    }
    let unit = space.coords(&Morphism::identity(&space.src));
    (table, unit)
}

pub(crate) fn build_end<K: Field>(x: &Module<K>, cfg: &Config) -> Result<EndData<K>> {
    if x.is_zero() {
        return Err(Error::ZeroModule);
    }
    let space = HomSpace::new(x, x)?;
    let k = x.field();
    let d = space.dim();
    let (table, unit) = end_table(&space);
    let mats: Vec<Matrix<K>> = space.basis.iter().map(|f| f.matrix()).collect();
    let traces = mats.iter().map(|m| m.trace()).collect();
    let ops = EndOps { field: k, d, table: &table, unit: &unit, mats, traces };
    let rad = radical::radical_basis(&ops)?;
    let labels = (0..d).map(|i| format!("f{i}")).collect();
    let hints = Hints { radical: Some(rad), ..Hints::default() };
    let algebra = Algebra::from_table(k, labels, table, unit, hints, cfg)?;
    Ok(EndData { space, algebra })
}

impl<K: Field> Module<K> {
    /// Cached endomorphism data; computed with the first config passed.
    pub fn end_data(&self, cfg: &Config) -> Result<Arc<EndData<K>>> {
        if let Some(e) = self.end_cell().get() {
            return Ok(e.clone());
        }
        let e = Arc::new(build_end(self, cfg)?);
        Ok(self.end_cell().get_or_init(|| e).clone())
    }

    /// `End(X)` with product "f then g" and the matching Hom basis.
    pub fn endomorphism_algebra(&self, cfg: &Config) -> Result<(Alg<K>, HomSpace<K>)> {
        let e = self.end_data(cfg)?;
        Ok((e.algebra.clone(), e.space.clone()))
    }
}
