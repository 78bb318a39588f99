//! Finite-dimensional left modules given by generator actions on vertex blocks.

mod hom;
mod morphism;

use std::fmt;
use std::sync::{Arc, OnceLock};

use crate::algebra::{Alg, Algebra, AlgebraMorphism};
use crate::error::{Error, Result};
use crate::exactla::{Field, Matrix, Span};

pub use hom::{hom_basis, hom_dim, HomSpace};
pub use morphism::Morphism;

struct Inner<K: Field> {
    alg: Alg<K>,
    dims: Vec<usize>,
    offsets: Vec<usize>,
    /// One `dims[tgt] × dims[src]` block per generator.
    acts: Vec<Matrix<K>>,
    words: OnceLock<Vec<Matrix<K>>>,
    end: OnceLock<Arc<hom::EndData<K>>>,
}

/// A left module; cheap to clone.
#[derive(Clone)]
pub struct Module<K: Field>(Arc<Inner<K>>);

impl<K: Field> fmt::Debug for Module<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Module(dims {:?})", self.0.dims)
    }
}

impl<K: Field> PartialEq for Module<K> {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (Algebra::same_algebra(&self.0.alg, &other.0.alg)
                && self.0.dims == other.0.dims
                && self.0.acts == other.0.acts)
    }
}

fn offsets(dims: &[usize]) -> Vec<usize> {
    let mut o = Vec::with_capacity(dims.len() + 1);
    let mut s = 0;
    for d in dims {
        o.push(s);
        s += d;
    }
    o.push(s);
    o
}

impl<K: Field> Module<K> {
    pub(crate) fn raw(alg: &Alg<K>, dims: Vec<usize>, acts: Vec<Matrix<K>>) -> Self {
        let offsets = offsets(&dims);
        Module(Arc::new(Inner {
            alg: alg.clone(),
            dims,
            offsets,
            acts,
            words: OnceLock::new(),
            end: OnceLock::new(),
        }))
    }

    /// Validated construction from generator blocks.
    pub fn new(alg: &Alg<K>, dims: Vec<usize>, acts: Vec<Matrix<K>>) -> Result<Self> {
        let pres = alg.presentation();
        if dims.len() != alg.num_vertices() || acts.len() != pres.generators().len() {
            return Err(Error::Shape("module data does not match the algebra".into()));
        }
        for (g, m) in pres.generators().iter().zip(&acts) {
            if m.shape() != (dims[g.tgt], dims[g.src]) || m.field() != alg.field() {
                return Err(Error::Shape(format!("action of '{}' has shape {:?}", g.label, m.shape())));
            }
        }
        let m = Self::raw(alg, dims, acts);
        m.validate()?;
        Ok(m)
    }

    /// Checks `ρ(g)ρ(w) = ρ(g·w)` for all generators and words.
    pub fn validate(&self) -> Result<()> {
        let alg = &self.0.alg;
        let pres = alg.presentation();
        let k = alg.field();
        let words = self.word_matrices();
        for (gi, g) in pres.generators().iter().enumerate() {
            let action = pres.action(gi);
            for (wi, w) in pres.words().iter().enumerate() {
                if w.tgt != g.src {
                    continue;
                }
                let lhs = self.0.acts[gi].mul(&words[wi]);
                let mut rhs = Matrix::zeros(k, self.0.dims[g.tgt], self.0.dims[w.src]);
                for (vi, v) in pres.words().iter().enumerate() {
                    let c = action.get(vi, wi);
                    if k.is_zero(c) {
                        continue;
                    }
                    if v.src != w.src || v.tgt != g.tgt {
                        return Err(Error::Input("presentation action leaves its block".into()));
                    }
                    rhs.add_scaled(c, &words[vi]);
                }
                if lhs != rhs {
                    return Err(Error::Input(format!("action is not multiplicative at generator '{}'", g.label)));
                }
            }
        }
        Ok(())
    }

    /// Module from matrices `ρ(b_i)` for every basis element.
    pub fn from_action(alg: &Alg<K>, mats: &[Matrix<K>]) -> Result<Self> {
        let k = alg.field();
        let d = alg.dim();
        if mats.len() != d {
            return Err(Error::Shape(format!("expected {d} action matrices, got {}", mats.len())));
        }
        let n = mats.first().map_or(0, |m| m.rows());
        for m in mats {
            if m.shape() != (n, n) {
                return Err(Error::Shape("action matrices must be square of one size".into()));
            }
        }
        let rho = |x: &[K::Elem]| -> Matrix<K> {
            let mut acc = Matrix::zeros(k, n, n);
            for (c, m) in x.iter().zip(mats) {
                acc.add_scaled(c, m);
            }
            acc
        };
        if rho(alg.unit()) != Matrix::identity(k, n) {
            return Err(Error::Input("the unit does not act as the identity".into()));
        }
        for i in 0..d {
            for j in 0..d {
                let lhs = mats[i].mul(&mats[j]);
                let mut rhs = Matrix::zeros(k, n, n);
                for (kk, c) in alg.product(i, j) {
                    rhs.add_scaled(c, &mats[*kk]);
                }
                if lhs != rhs {
                    return Err(Error::Input(format!(
                        "action is not multiplicative on ({}, {})",
                        alg.labels()[i],
                        alg.labels()[j]
                    )));
                }
            }
        }
        let mut cols = Vec::new();
        let mut dims = Vec::new();
        for e in alg.idempotents() {
            let img = rho(e).col_space();
            dims.push(img.cols());
            cols.extend(img.to_cols());
        }
        let p = Matrix::from_cols(k, n, &cols);
        let pinv = p.inverse().ok_or_else(|| Error::Input("idempotent images do not span".into()))?;
        let offs = offsets(&dims);
        let acts = alg
            .presentation()
            .generators()
            .iter()
            .map(|g| {
                let full = pinv.mul(&rho(&g.elem)).mul(&p);
                full.block(offs[g.tgt], offs[g.src], dims[g.tgt], dims[g.src])
            })
            .collect();
        Module::new(alg, dims, acts)
    }

    /// Quiver representation: one matrix per arrow, `dim(to) × dim(from)`.
    pub fn from_representation(alg: &Alg<K>, vertex_dims: &[usize], arrow_maps: &[(String, Matrix<K>)]) -> Result<Self> {
        let pres = alg.presentation();
        if alg.quiver().is_none() {
            return Err(Error::Input("representation form needs a quiver algebra".into()));
        }
        if vertex_dims.len() != alg.num_vertices() {
            return Err(Error::Shape("one dimension per vertex expected".into()));
        }
        let mut acts: Vec<Option<Matrix<K>>> = vec![None; pres.generators().len()];
        for (name, m) in arrow_maps {
            let gi = pres.generator_index(name).ok_or_else(|| Error::Input(format!("unknown arrow '{name}'")))?;
            acts[gi] = Some(m.clone());
        }
        let acts = pres
            .generators()
            .iter()
            .zip(acts)
            .map(|(g, m)| m.unwrap_or_else(|| Matrix::zeros(alg.field(), vertex_dims[g.tgt], vertex_dims[g.src])))
            .collect();
        Module::new(alg, vertex_dims.to_vec(), acts)
    }

    pub fn algebra(&self) -> &Alg<K> {
        &self.0.alg
    }
    pub fn field(&self) -> &K {
        self.0.alg.field()
    }
    pub fn dims(&self) -> &[usize] {
        &self.0.dims
    }
    pub fn dim(&self) -> usize {
        *self.0.offsets.last().unwrap_or(&0)
    }
    pub fn offset(&self, v: usize) -> usize {
        self.0.offsets[v]
    }
    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }
    pub fn act(&self, g: usize) -> &Matrix<K> {
        &self.0.acts[g]
    }
    pub fn acts(&self) -> &[Matrix<K>] {
        &self.0.acts
    }
    pub fn ptr_eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
    }
    pub(crate) fn end_cell(&self) -> &OnceLock<Arc<hom::EndData<K>>> {
        &self.0.end
    }

    pub fn check_same_algebra(&self, other: &Self) -> Result<()> {
        if Algebra::same_algebra(&self.0.alg, &other.0.alg) {
            Ok(())
        } else {
            Err(Error::AlgebraMismatch)
        }
    }

    /// `ρ(w)` for every word, as `dims[tgt] × dims[src]` blocks.
    pub fn word_matrices(&self) -> &[Matrix<K>] {
        self.0.words.get_or_init(|| {
            let k = self.field();
            let pres = self.0.alg.presentation();
            let mut out: Vec<Matrix<K>> = Vec::with_capacity(pres.words().len());
            for w in pres.words() {
                let m = match (w.parent, w.gen) {
                    (Some(p), Some(g)) => self.0.acts[g].mul(&out[p]),
                    _ => Matrix::identity(k, self.0.dims[w.src]),
                };
                out.push(m);
            }
            out
        })
    }

    /// Full matrix of an algebra element.
    pub fn act_elem(&self, x: &[K::Elem]) -> Matrix<K> {
        let k = self.field();
        let pres = self.0.alg.presentation();
        let c = pres.coords(x);
        let n = self.dim();
        let mut m = Matrix::zeros(k, n, n);
        let words = self.word_matrices();
        for (wi, w) in pres.words().iter().enumerate() {
            if k.is_zero(&c[wi]) {
                continue;
            }
            let (r0, c0) = (self.offset(w.tgt), self.offset(w.src));
            let b = &words[wi];
            for i in 0..b.rows() {
                for j in 0..b.cols() {
                    let v = b.get(i, j);
                    if !k.is_zero(v) {
                        let mut cur = m.get(r0 + i, c0 + j).clone();
                        k.mul_add(&mut cur, &c[wi], v);
                        m.set(r0 + i, c0 + j, cur);
                    }
                }
            }
        }
        m
    }

    /// `ρ(g)` as a full matrix.
    pub fn act_full(&self, g: usize) -> Matrix<K> {
        let gen = &self.0.alg.presentation().generators()[g];
        let n = self.dim();
        let mut m = Matrix::zeros(self.field(), n, n);
        m.set_block(self.offset(gen.tgt), self.offset(gen.src), &self.0.acts[g]);
        m
    }

    pub fn zero(alg: &Alg<K>) -> Self {
        let k = alg.field();
        let dims = vec![0; alg.num_vertices()];
        let acts = alg.presentation().generators().iter().map(|_| Matrix::zeros(k, 0, 0)).collect();
        Self::raw(alg, dims, acts)
    }

    /// `A e_v` in word coordinates.
    pub fn projective(alg: &Alg<K>, v: usize) -> Self {
        let pres = alg.presentation();
        let n = alg.num_vertices();
        let from = pres.words_from(v);
        let mut blocks: Vec<Vec<usize>> = vec![Vec::new(); n];
        for &w in from {
            blocks[pres.words()[w].tgt].push(w);
        }
        let dims: Vec<usize> = blocks.iter().map(|b| b.len()).collect();
        let acts = pres
            .generators()
            .iter()
            .enumerate()
            .map(|(gi, g)| {
                let a = pres.action(gi);
                Matrix::from_fn(alg.field(), dims[g.tgt], dims[g.src], |i, j| a.get(blocks[g.tgt][i], blocks[g.src][j]).clone())
            })
            .collect();
        Self::raw(alg, dims, acts)
    }

    /// The regular module `A = ⊕ A e_v`.
    pub fn regular(alg: &Alg<K>) -> Self {
        let parts: Vec<Module<K>> = (0..alg.num_vertices()).map(|v| Self::projective(alg, v)).collect();
        Self::direct_sum(alg, &parts).0
    }

    pub fn simple(alg: &Alg<K>, v: usize) -> Self {
        Self::projective(alg, v).top().tgt().clone()
    }

    pub fn injective(alg: &Alg<K>, v: usize) -> Self {
        Self::projective(&alg.opposite(), v).dual()
    }

    /// `D(A_A)`, the injective cogenerator.
    pub fn dual_regular(alg: &Alg<K>) -> Self {
        Self::regular(&alg.opposite()).dual()
    }

    /// Dual module over the opposite algebra.
    pub fn dual(&self) -> Self {
        let op = self.0.alg.opposite();
        let acts = self.0.acts.iter().map(|m| m.transpose()).collect();
        Self::raw(&op, self.0.dims.clone(), acts)
    }

    /// Direct sum with its inclusions and projections.
    pub fn direct_sum(alg: &Alg<K>, parts: &[Module<K>]) -> (Self, Vec<Morphism<K>>, Vec<Morphism<K>>) {
        let k = alg.field();
        let n = alg.num_vertices();
        let dims: Vec<usize> = (0..n).map(|v| parts.iter().map(|p| p.dims()[v]).sum()).collect();
        let acts = alg
            .presentation()
            .generators()
            .iter()
            .enumerate()
            .map(|(gi, g)| {
                let mut m = Matrix::zeros(k, dims[g.tgt], dims[g.src]);
                let (mut r, mut c) = (0, 0);
                for p in parts {
                    m.set_block(r, c, p.act(gi));
                    r += p.dims()[g.tgt];
                    c += p.dims()[g.src];
                }
                m
            })
            .collect();
        let sum = Self::raw(alg, dims.clone(), acts);
        let mut incs = Vec::new();
        let mut projs = Vec::new();
        let mut start = vec![0; n];
        for p in parts {
            let inc: Vec<Matrix<K>> = (0..n)
                .map(|v| {
                    let mut m = Matrix::zeros(k, dims[v], p.dims()[v]);
                    for i in 0..p.dims()[v] {
                        m.set(start[v] + i, i, k.one());
                    }
                    m
                })
                .collect();
            let proj: Vec<Matrix<K>> = inc.iter().map(|m| m.transpose()).collect();
            incs.push(Morphism::raw(p.clone(), sum.clone(), inc));
            projs.push(Morphism::raw(sum.clone(), p.clone(), proj));
            for v in 0..n {
                start[v] += p.dims()[v];
            }
        }
        (sum, incs, projs)
    }

    /// Splits a full vector into vertex components.
    pub fn split_vector(&self, x: &[K::Elem]) -> Vec<Vec<K::Elem>> {
        (0..self.dims().len()).map(|v| x[self.offset(v)..self.offset(v + 1)].to_vec()).collect()
    }

    /// Submodule generated by block vectors `(vertex, vector)`.
    pub fn submodule(&self, gens: &[(usize, Vec<K::Elem>)]) -> Morphism<K> {
        let k = self.field();
        let pres = self.0.alg.presentation();
        let n = self.dims().len();
        let mut spans: Vec<Span<K>> = self.dims().iter().map(|&d| Span::new(k, d)).collect();
        let mut queue: Vec<(usize, Vec<K::Elem>)> = Vec::new();
        for (v, x) in gens {
            if spans[*v].insert(x) {
                queue.push((*v, x.clone()));
            }
        }
        while let Some((v, x)) = queue.pop() {
            for (gi, g) in pres.generators().iter().enumerate() {
                if g.src != v {
                    continue;
                }
                let y = self.0.acts[gi].mul_vec(&x);
                if spans[g.tgt].insert(&y) {
                    queue.push((g.tgt, y));
                }
            }
        }
        let bases: Vec<Vec<Vec<K::Elem>>> = (0..n).map(|v| spans[v].basis().to_vec()).collect();
        self.closed_submodule(bases)
    }

    /// Submodule generated by full vectors.
    pub fn submodule_of_vectors(&self, xs: &[Vec<K::Elem>]) -> Morphism<K> {
        let mut gens = Vec::new();
        for x in xs {
            for (v, c) in self.split_vector(x).into_iter().enumerate() {
                if c.iter().any(|e| !self.field().is_zero(e)) {
                    gens.push((v, c));
                }
            }
        }
        self.submodule(&gens)
    }

    /// Inclusion of a submodule given by action-closed per-vertex bases.
    pub fn closed_submodule(&self, bases: Vec<Vec<Vec<K::Elem>>>) -> Morphism<K> {
        let k = self.field();
        let pres = self.0.alg.presentation();
        let spans: Vec<Span<K>> =
            bases.iter().enumerate().map(|(v, b)| Span::from_vectors(k, self.dims()[v], b.iter())).collect();
        let dims: Vec<usize> = spans.iter().map(|s| s.dim()).collect();
        let acts = pres
            .generators()
            .iter()
            .enumerate()
            .map(|(gi, g)| {
                let cols: Vec<Vec<K::Elem>> = spans[g.src]
                    .basis()
                    .iter()
                    .map(|x| spans[g.tgt].coords(&self.0.acts[gi].mul_vec(x)).expect("subspace is not closed"))
                    .collect();
                Matrix::from_cols(k, dims[g.tgt], &cols)
            })
            .collect();
        let sub = Self::raw(&self.0.alg, dims, acts);
        let blocks = spans.iter().enumerate().map(|(v, s)| Matrix::from_cols(k, self.dims()[v], s.basis())).collect();
        Morphism::raw(sub, self.clone(), blocks)
    }

    /// Projection onto the quotient by the image of a monomorphism into `self`.
    pub fn quotient(&self, sub: &Morphism<K>) -> Morphism<K> {
        let k = self.field();
        let pres = self.0.alg.presentation();
        let n = self.dims().len();
        let spans: Vec<Span<K>> = (0..n)
            .map(|v| Span::from_vectors(k, self.dims()[v], sub.block(v).to_cols().iter()))
            .collect();
        let comps: Vec<Vec<usize>> =
            (0..n).map(|v| crate::algebra::quotient::complement_indices(k, self.dims()[v], &spans[v])).collect();
        let proj = |v: usize, x: &[K::Elem]| crate::algebra::quotient::project(&spans[v], &comps[v], x);
        let dims: Vec<usize> = comps.iter().map(|c| c.len()).collect();
        let acts = pres
            .generators()
            .iter()
            .enumerate()
            .map(|(gi, g)| {
                let a = &self.0.acts[gi];
                let cols: Vec<Vec<K::Elem>> = comps[g.src].iter().map(|&j| proj(g.tgt, &a.col(j))).collect();
                Matrix::from_cols(k, dims[g.tgt], &cols)
            })
            .collect();
        let q = Self::raw(&self.0.alg, dims.clone(), acts);
        let blocks = (0..n)
            .map(|v| {
                let cols: Vec<Vec<K::Elem>> = (0..self.dims()[v])
                    .map(|j| {
                        let mut e = vec![k.zero(); self.dims()[v]];
                        e[j] = k.one();
                        proj(v, &e)
                    })
                    .collect();
                Matrix::from_cols(k, dims[v], &cols)
            })
            .collect();
        Morphism::raw(self.clone(), q, blocks)
    }

    /// Inclusion of `J·X`.
    pub fn radical_submodule(&self) -> Morphism<K> {
        let pres = self.0.alg.presentation();
        let k = self.field();
        let mut gens = Vec::new();
        for (gi, g) in pres.generators().iter().enumerate() {
            if !g.radical {
                continue;
            }
            for x in self.0.acts[gi].to_cols() {
                if x.iter().any(|e| !k.is_zero(e)) {
                    gens.push((g.tgt, x));
                }
            }
        }
        self.submodule(&gens)
    }

    /// Projection onto `X/JX`.
    pub fn top(&self) -> Morphism<K> {
        self.quotient(&self.radical_submodule())
    }

    /// Inclusion of the socle `{x : Jx = 0}`.
    pub fn socle(&self) -> Morphism<K> {
        let k = self.field();
        let alg = &self.0.alg;
        let pres = alg.presentation();
        let n = self.dims().len();
        let words = self.word_matrices();
        let bases = (0..n)
            .map(|v| {
                let mut rows: Vec<Matrix<K>> = Vec::new();
                for (gi, g) in pres.generators().iter().enumerate() {
                    if !g.radical {
                        continue;
                    }
                    if alg.is_split_basic() {
                        if g.src == v {
                            rows.push(self.0.acts[gi].clone());
                        }
                    } else {
                        for (wi, w) in pres.words().iter().enumerate() {
                            if w.src == v && w.tgt == g.src {
                                rows.push(self.0.acts[gi].mul(&words[wi]));
                            }
                        }
                    }
                }
                let refs: Vec<&Matrix<K>> = rows.iter().collect();
                let stacked = Matrix::vstack(k, self.dims()[v], &refs);
                stacked.kernel_basis().to_cols()
            })
            .collect();
        self.closed_submodule(bases)
    }

    /// Radical layers `J^i X / J^{i+1} X` dimensions, top first.
    pub fn radical_layers(&self) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        let mut cur = self.clone();
        while !cur.is_zero() {
            let r = cur.radical_submodule();
            let top: Vec<usize> = cur.dims().iter().zip(r.src().dims()).map(|(a, b)| a - b).collect();
            out.push(top);
            cur = r.src().clone();
        }
        out
    }

    pub fn loewy_length(&self) -> usize {
        self.radical_layers().len()
    }

    /// Restriction of scalars along an algebra morphism into this module's algebra.
    pub fn restrict_along(&self, phi: &AlgebraMorphism<K>) -> Result<Self> {
        if !Algebra::same_algebra(&phi.tgt, &self.0.alg) {
            return Err(Error::AlgebraMismatch);
        }
        let phi = AlgebraMorphism::new(phi.src.clone(), phi.tgt.clone(), phi.matrix.clone())?;
        let mats: Vec<Matrix<K>> = (0..phi.src.dim()).map(|i| self.act_elem(&phi.matrix.col(i))).collect();
        Self::from_action(&phi.src, &mats)
    }

    /// Raw action matrices `ρ(b_i)` in the block basis.
    pub fn basis_action(&self) -> Vec<Matrix<K>> {
        (0..self.0.alg.dim()).map(|i| self.act_elem(&self.0.alg.basis_vec(i))).collect()
    }

    /// Dimension vector as a map from vertex label.
    pub fn dim_vector(&self) -> Vec<(String, usize)> {
        self.0.alg.vertex_labels().iter().cloned().zip(self.0.dims.iter().copied()).collect()
    }
}
