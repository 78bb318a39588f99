use std::fmt;

use crate::error::{Error, Result};
use crate::exactla::field::Field;

/// Dense row-major matrix over a field context.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix<K: Field> {
    field: K,
    rows: usize,
    cols: usize,
    data: Vec<K::Elem>,
}

impl<K: Field> fmt::Debug for Matrix<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, "; ")?;
            }
            let row: Vec<String> = self.row(i).iter().map(|x| self.field.fmt_elem(x)).collect();
            write!(f, "{}", row.join(" "))?;
        }
        write!(f, "]")
    }
}

impl<K: Field> Matrix<K> {
    pub fn zeros(field: &K, rows: usize, cols: usize) -> Self {
        Matrix { field: field.clone(), rows, cols, data: vec![field.zero(); rows * cols] }
    }

    pub fn identity(field: &K, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = field.one();
        }
        m
    }

    pub fn from_vec(field: &K, rows: usize, cols: usize, data: Vec<K::Elem>) -> Self {
        assert_eq!(data.len(), rows * cols, "entry count must equal rows*cols");
        Matrix { field: field.clone(), rows, cols, data }
    }

    pub fn from_fn(field: &K, rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> K::Elem) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { field: field.clone(), rows, cols, data }
    }

    /// Integer entries, reduced into the field.
    pub fn from_i64(field: &K, rows: &[Vec<i64>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        Self::from_fn(field, r, c, |i, j| field.from_i64(rows[i][j]))
    }

    /// Matrix whose columns are the given vectors.
    pub fn from_cols(field: &K, rows: usize, cols: &[Vec<K::Elem>]) -> Self {
        Self::from_fn(field, rows, cols.len(), |i, j| cols[j][i].clone())
    }

    pub fn from_rows(field: &K, cols: usize, rows: &[Vec<K::Elem>]) -> Self {
        Self::from_fn(field, rows.len(), cols, |i, j| rows[i][j].clone())
    }

    pub fn column_vector(field: &K, v: &[K::Elem]) -> Self {
        Self::from_vec(field, v.len(), 1, v.to_vec())
    }

    pub fn field(&self) -> &K {
        &self.field
    }
    pub fn rows(&self) -> usize {
        self.rows
    }
    pub fn cols(&self) -> usize {
        self.cols
    }
    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }
    pub fn data(&self) -> &[K::Elem] {
        &self.data
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> &K::Elem {
        &self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: K::Elem) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[K::Elem] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn col(&self, j: usize) -> Vec<K::Elem> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn to_cols(&self) -> Vec<Vec<K::Elem>> {
        (0..self.cols).map(|j| self.col(j)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| self.field.is_zero(x))
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| {
                    let x = self.get(i, j);
                    if i == j {
                        self.field.is_one(x)
                    } else {
                        self.field.is_zero(x)
                    }
                })
            })
    }

    pub fn check_same_field(&self, other: &Self) -> Result<()> {
        if self.field != other.field {
            return Err(Error::FieldMismatch);
        }
        Ok(())
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check_same_field(other)?;
        if self.cols != other.rows {
            return Err(Error::Shape(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(self.mul_unchecked(other))
    }

    /// Matrix product. Panics on shape mismatch.
    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "shape mismatch in product");
        self.mul_unchecked(other)
    }

    fn mul_unchecked(&self, other: &Self) -> Self {
        let f = &self.field;
        let mut out = Self::zeros(f, self.rows, other.cols);
        let oc = other.cols;
        for i in 0..self.rows {
            let out_row = &mut out.data[i * oc..(i + 1) * oc];
            for k in 0..self.cols {
                let a = &self.data[i * self.cols + k];
                if f.is_zero(a) {
                    continue;
                }
                let brow = &other.data[k * oc..(k + 1) * oc];
                for (o, b) in out_row.iter_mut().zip(brow) {
                    if !f.is_zero(b) {
                        f.mul_add(o, a, b);
                    }
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[K::Elem]) -> Vec<K::Elem> {
        assert_eq!(self.cols, v.len());
        let f = &self.field;
        (0..self.rows)
            .map(|i| {
                let mut acc = f.zero();
                for (a, b) in self.row(i).iter().zip(v) {
                    if !f.is_zero(a) && !f.is_zero(b) {
                        f.mul_add(&mut acc, a, b);
                    }
                }
                acc
            })
            .collect()
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.shape(), other.shape());
        let f = &self.field;
        let data = self.data.iter().zip(&other.data).map(|(a, b)| f.add(a, b)).collect();
        Matrix { field: f.clone(), rows: self.rows, cols: self.cols, data }
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!(self.shape(), other.shape());
        let f = &self.field;
        let data = self.data.iter().zip(&other.data).map(|(a, b)| f.sub(a, b)).collect();
        Matrix { field: f.clone(), rows: self.rows, cols: self.cols, data }
    }

    pub fn scale(&self, c: &K::Elem) -> Self {
        let f = &self.field;
        let data = self.data.iter().map(|a| f.mul(a, c)).collect();
        Matrix { field: f.clone(), rows: self.rows, cols: self.cols, data }
    }

    /// `self += c * other`
    pub fn add_scaled(&mut self, c: &K::Elem, other: &Self) {
        assert_eq!(self.shape(), other.shape());
        if self.field.is_zero(c) {
            return;
        }
        let f = self.field.clone();
        for (a, b) in self.data.iter_mut().zip(&other.data) {
            if !f.is_zero(b) {
                f.mul_add(a, c, b);
            }
        }
    }

    pub fn neg(&self) -> Self {
        let f = &self.field;
        let data = self.data.iter().map(|a| f.neg(a)).collect();
        Matrix { field: f.clone(), rows: self.rows, cols: self.cols, data }
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(&self.field, self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn trace(&self) -> K::Elem {
        let f = &self.field;
        let mut t = f.zero();
        for i in 0..self.rows.min(self.cols) {
            t = f.add(&t, self.get(i, i));
        }
        t
    }

    pub fn hstack(field: &K, rows: usize, parts: &[&Self]) -> Self {
        let cols = parts.iter().map(|p| p.cols).sum();
        let mut out = Self::zeros(field, rows, cols);
        let mut c0 = 0;
        for p in parts {
            assert_eq!(p.rows, rows);
            out.set_block(0, c0, p);
            c0 += p.cols;
        }
        out
    }

    pub fn vstack(field: &K, cols: usize, parts: &[&Self]) -> Self {
        let rows = parts.iter().map(|p| p.rows).sum();
        let mut out = Self::zeros(field, rows, cols);
        let mut r0 = 0;
        for p in parts {
            assert_eq!(p.cols, cols);
            out.set_block(r0, 0, p);
            r0 += p.rows;
        }
        out
    }

    pub fn block(&self, r0: usize, c0: usize, rows: usize, cols: usize) -> Self {
        Self::from_fn(&self.field, rows, cols, |i, j| self.get(r0 + i, c0 + j).clone())
    }

    pub fn set_block(&mut self, r0: usize, c0: usize, m: &Self) {
        for i in 0..m.rows {
            for j in 0..m.cols {
                self.set(r0 + i, c0 + j, m.get(i, j).clone());
            }
        }
    }

    pub fn select_cols(&self, idx: &[usize]) -> Self {
        Self::from_fn(&self.field, self.rows, idx.len(), |i, j| self.get(i, idx[j]).clone())
    }

    pub fn select_rows(&self, idx: &[usize]) -> Self {
        Self::from_fn(&self.field, idx.len(), self.cols, |i, j| self.get(idx[i], j).clone())
    }

    /// Reduced row-echelon form, pivot columns and rank.
    pub fn rref(&self) -> (Self, Vec<usize>, usize) {
        let mut m = self.clone();
        let pivots = m.rref_in_place();
        let r = pivots.len();
        (m, pivots, r)
    }

    fn rref_in_place(&mut self) -> Vec<usize> {
        let f = self.field.clone();
        let (rows, cols) = (self.rows, self.cols);
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..cols {
            if r == rows {
                break;
            }
            let Some(p) = (r..rows).find(|&i| !f.is_zero(&self.data[i * cols + c])) else {
                continue;
            };
            if p != r {
                for j in 0..cols {
                    self.data.swap(p * cols + j, r * cols + j);
                }
            }
            let inv = f.inv(&self.data[r * cols + c]).expect("nonzero pivot");
            for j in c..cols {
                let v = &self.data[r * cols + j];
                if !f.is_zero(v) {
                    self.data[r * cols + j] = f.mul(v, &inv);
                }
            }
            let pivot_row: Vec<(usize, K::Elem)> = (c..cols)
                .filter(|&j| !f.is_zero(&self.data[r * cols + j]))
                .map(|j| (j, self.data[r * cols + j].clone()))
                .collect();
            for i in 0..rows {
                if i == r {
                    continue;
                }
                let factor = self.data[i * cols + c].clone();
                if f.is_zero(&factor) {
                    continue;
                }
                let nf = f.neg(&factor);
                for (j, v) in &pivot_row {
                    f.mul_add(&mut self.data[i * cols + j], &nf, v);
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        self.clone().rref_in_place().len()
    }

    /// Columns span the null space.
    pub fn kernel_basis(&self) -> Self {
        let f = &self.field;
        let (m, pivots, _) = self.rref();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let free: Vec<usize> = (0..self.cols).filter(|&c| !is_pivot[c]).collect();
        let mut k = Self::zeros(f, self.cols, free.len());
        for (j, &fc) in free.iter().enumerate() {
            k.set(fc, j, f.one());
            for (r, &pc) in pivots.iter().enumerate() {
                let v = m.get(r, fc);
                if !f.is_zero(v) {
                    k.set(pc, j, f.neg(v));
                }
            }
        }
        k
    }

    /// Some X with self·X = b, or None when inconsistent.
    pub fn solve(&self, b: &Self) -> Result<Option<Self>> {
        self.check_same_field(b)?;
        if self.rows != b.rows {
            return Err(Error::Shape(format!(
                "solve: {}x{} system with {}x{} right side",
                self.rows, self.cols, b.rows, b.cols
            )));
        }
        let f = &self.field;
        let aug = Self::hstack(f, self.rows, &[self, b]);
        let (m, pivots, _) = aug.rref();
        if pivots.iter().any(|&p| p >= self.cols) {
            return Ok(None);
        }
        let mut x = Self::zeros(f, self.cols, b.cols);
        for (r, &pc) in pivots.iter().enumerate() {
            for j in 0..b.cols {
                x.set(pc, j, m.get(r, self.cols + j).clone());
            }
        }
        Ok(Some(x))
    }

    pub fn inverse(&self) -> Option<Self> {
        if self.rows != self.cols {
            return None;
        }
        let id = Self::identity(&self.field, self.rows);
        match self.solve(&id) {
            Ok(Some(x)) if self.rank() == self.rows => Some(x),
            _ => None,
        }
    }

    /// Indices of a maximal independent set of columns, chosen greedily left to right.
    pub fn independent_cols(&self) -> Vec<usize> {
        self.rref().1
    }

    /// Basis of the column space (a subset of the columns).
    pub fn col_space(&self) -> Self {
        let idx = self.independent_cols();
        self.select_cols(&idx)
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::Value::Array(
            (0..self.rows)
                .map(|i| serde_json::Value::Array(self.row(i).iter().map(|x| self.field.to_json(x)).collect()))
                .collect(),
        )
    }

    pub fn from_json(field: &K, v: &serde_json::Value, rows: usize, cols: usize) -> Result<Self> {
        let arr = v.as_array().ok_or_else(|| Error::Input(format!("expected a matrix, found {v}")))?;
        if arr.len() != rows {
            return Err(Error::Input(format!("expected {rows} rows, found {}", arr.len())));
        }
        let mut data = Vec::with_capacity(rows * cols);
        for r in arr {
            let row = r.as_array().ok_or_else(|| Error::Input(format!("expected a row, found {r}")))?;
            if row.len() != cols {
                return Err(Error::Input(format!("expected {cols} columns, found {}", row.len())));
            }
            for x in row {
                data.push(field.from_json(x)?);
            }
        }
        Ok(Self::from_vec(field, rows, cols, data))
    }
}

/// Incrementally built subspace in semi-echelon form, with coordinates
/// relative to the independent vectors inserted so far.
#[derive(Clone, Debug)]
pub struct Span<K: Field> {
    field: K,
    len: usize,
    basis: Vec<Vec<K::Elem>>,
    rows: Vec<(usize, Vec<K::Elem>, Vec<K::Elem>)>,
}

impl<K: Field> Span<K> {
    pub fn new(field: &K, len: usize) -> Self {
        Span { field: field.clone(), len, basis: Vec::new(), rows: Vec::new() }
    }

    pub fn from_vectors<'a>(field: &K, len: usize, vs: impl IntoIterator<Item = &'a Vec<K::Elem>>) -> Self
    where
        K::Elem: 'a,
    {
        let mut s = Self::new(field, len);
        for v in vs {
            s.insert(v);
        }
        s
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn ambient(&self) -> usize {
        self.len
    }

    /// The independent vectors in insertion order.
    pub fn basis(&self) -> &[Vec<K::Elem>] {
        &self.basis
    }

    pub fn basis_matrix(&self) -> Matrix<K> {
        Matrix::from_cols(&self.field, self.len, &self.basis)
    }

    fn reduce_full(&self, v: &[K::Elem]) -> (Vec<K::Elem>, Vec<K::Elem>) {
        let f = &self.field;
        let mut w = v.to_vec();
        let mut combo = vec![f.zero(); self.basis.len()];
        for (p, row, rc) in &self.rows {
            let c = w[*p].clone();
            if f.is_zero(&c) {
                continue;
            }
            let nc = f.neg(&c);
            for (x, y) in w.iter_mut().zip(row) {
                if !f.is_zero(y) {
                    f.mul_add(x, &nc, y);
                }
            }
            for (x, y) in combo.iter_mut().zip(rc) {
                if !f.is_zero(y) {
                    f.mul_add(x, &c, y);
                }
            }
        }
        (w, combo)
    }

    /// Residual of `v` after elimination against the span.
    pub fn reduce(&self, v: &[K::Elem]) -> Vec<K::Elem> {
        let f = &self.field;
        let mut w = v.to_vec();
        for (p, row, _) in &self.rows {
            let c = w[*p].clone();
            if f.is_zero(&c) {
                continue;
            }
            let nc = f.neg(&c);
            for (x, y) in w.iter_mut().zip(row) {
                if !f.is_zero(y) {
                    f.mul_add(x, &nc, y);
                }
            }
        }
        w
    }

    pub fn contains(&self, v: &[K::Elem]) -> bool {
        self.reduce(v).iter().all(|x| self.field.is_zero(x))
    }

    /// Coordinates of `v` in `basis()`, if `v` lies in the span.
    pub fn coords(&self, v: &[K::Elem]) -> Option<Vec<K::Elem>> {
        let (w, combo) = self.reduce_full(v);
        if w.iter().all(|x| self.field.is_zero(x)) {
            Some(combo)
        } else {
            None
        }
    }

    /// Adds `v`; returns true when it was independent.
    pub fn insert(&mut self, v: &[K::Elem]) -> bool {
        assert_eq!(v.len(), self.len, "vector length mismatch");
        let f = self.field.clone();
        let (mut w, combo) = self.reduce_full(v);
        let Some(p) = w.iter().position(|x| !f.is_zero(x)) else {
            return false;
        };
        let k = self.basis.len();
        // w = v - sum combo_i b_i ; new row expressed in basis with v as index k
        let mut rc: Vec<K::Elem> = combo.iter().map(|c| f.neg(c)).collect();
        rc.push(f.one());
        let inv = f.inv(&w[p]).unwrap();
        for x in w.iter_mut() {
            if !f.is_zero(x) {
                *x = f.mul(x, &inv);
            }
        }
        for x in rc.iter_mut() {
            *x = f.mul(x, &inv);
        }
        for (_, _, r) in self.rows.iter_mut() {
            r.resize(k + 1, f.zero());
        }
        self.basis.push(v.to_vec());
        self.rows.push((p, w, rc));
        true
    }
}
