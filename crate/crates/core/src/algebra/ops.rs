use crate::exactla::{Field, Matrix};

/// Minimal arithmetic interface of a finite-dimensional algebra given in coordinates.
pub trait AlgOps<K: Field> {
    fn field(&self) -> &K;
    fn dim(&self) -> usize;
    fn mul(&self, a: &[K::Elem], b: &[K::Elem]) -> Vec<K::Elem>;
    fn one(&self) -> Vec<K::Elem>;
    /// Matrix of `a` in some faithful representation.
    fn rep(&self, a: &[K::Elem]) -> Matrix<K>;
    fn rep_dim(&self) -> usize;
    fn trace(&self, a: &[K::Elem]) -> K::Elem {
        self.rep(a).trace()
    }
}

/// Structure-constant algebra with a sparse table indexed by `i * d + j`.
pub struct StructOps<'a, K: Field> {
    pub field: &'a K,
    pub d: usize,
    pub mult: &'a [Vec<(usize, K::Elem)>],
    pub unit: &'a [K::Elem],
    traces: Vec<K::Elem>,
}

impl<'a, K: Field> StructOps<'a, K> {
    pub fn new(field: &'a K, d: usize, mult: &'a [Vec<(usize, K::Elem)>], unit: &'a [K::Elem]) -> Self {
        let mut traces = vec![field.zero(); d];
        for (m, t) in traces.iter_mut().enumerate() {
            for j in 0..d {
                for (kk, v) in &mult[m * d + j] {
                    if *kk == j {
                        *t = field.add(t, v);
                    }
                }
            }
        }
        StructOps { field, d, mult, unit, traces }
    }
}

pub(crate) fn sparse_mul<K: Field>(
    k: &K,
    d: usize,
    mult: &[Vec<(usize, K::Elem)>],
    a: &[K::Elem],
    b: &[K::Elem],
) -> Vec<K::Elem> {
    let mut out = vec![k.zero(); d];
    let bnz: Vec<usize> = (0..d).filter(|&j| !k.is_zero(&b[j])).collect();
    for i in 0..d {
        if k.is_zero(&a[i]) {
            continue;
        }
        for &j in &bnz {
            let ab = k.mul(&a[i], &b[j]);
            for (kk, v) in &mult[i * d + j] {
                k.mul_add(&mut out[*kk], &ab, v);
            }
        }
    }
    out
}

impl<'a, K: Field> AlgOps<K> for StructOps<'a, K> {
    fn field(&self) -> &K {
        self.field
    }
    fn dim(&self) -> usize {
        self.d
    }
    fn mul(&self, a: &[K::Elem], b: &[K::Elem]) -> Vec<K::Elem> {
        sparse_mul(self.field, self.d, self.mult, a, b)
    }
    fn one(&self) -> Vec<K::Elem> {
        self.unit.to_vec()
    }
    fn rep(&self, a: &[K::Elem]) -> Matrix<K> {
        let k = self.field;
        let d = self.d;
        let mut m = Matrix::zeros(k, d, d);
        for i in 0..d {
            if k.is_zero(&a[i]) {
                continue;
            }
            for j in 0..d {
                for (kk, v) in &self.mult[i * d + j] {
                    let cur = m.get(*kk, j).clone();
                    let mut cur = cur;
                    k.mul_add(&mut cur, &a[i], v);
                    m.set(*kk, j, cur);
                }
            }
        }
        m
    }
    fn rep_dim(&self) -> usize {
        self.d
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
