use std::fmt;

use crate::error::{Error, Result};
use crate::exactla::{Field, Matrix};

use super::Module;

/// Module homomorphism with one block `tgt_v × src_v` per vertex.
#[derive(Clone)]
pub struct Morphism<K: Field> {
    src: Module<K>,
    tgt: Module<K>,
    blocks: Vec<Matrix<K>>,
}

impl<K: Field> fmt::Debug for Morphism<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Morphism({:?} -> {:?}, rank {})", self.src.dims(), self.tgt.dims(), self.rank())
    }
}

impl<K: Field> PartialEq for Morphism<K> {
    fn eq(&self, other: &Self) -> bool {
        self.src == other.src && self.tgt == other.tgt && self.blocks == other.blocks
    }
}

impl<K: Field> Morphism<K> {
    pub(crate) fn raw(src: Module<K>, tgt: Module<K>, blocks: Vec<Matrix<K>>) -> Self {
        Morphism { src, tgt, blocks }
    }

    /// Checked construction.
    pub fn new(src: Module<K>, tgt: Module<K>, blocks: Vec<Matrix<K>>) -> Result<Self> {
        src.check_same_algebra(&tgt)?;
        let n = src.dims().len();
        if blocks.len() != n {
            return Err(Error::Shape("one block per vertex expected".into()));
        }
        for v in 0..n {
            if blocks[v].shape() != (tgt.dims()[v], src.dims()[v]) {
                return Err(Error::Shape(format!("block {v} has shape {:?}", blocks[v].shape())));
            }
        }
        let f = Morphism { src, tgt, blocks };
        f.check()?;
        Ok(f)
    }

    /// Intertwining identity on every generator.
    pub fn check(&self) -> Result<()> {
        let pres = self.src.algebra().presentation();
        for (gi, g) in pres.generators().iter().enumerate() {
            let lhs = self.blocks[g.tgt].mul(self.src.act(gi));
            let rhs = self.tgt.act(gi).mul(&self.blocks[g.src]);
            if lhs != rhs {
                return Err(Error::NotMorphism(format!("fails to commute with '{}'", g.label)));
            }
        }
        Ok(())
    }

    pub fn src(&self) -> &Module<K> {
        &self.src
    }
    pub fn tgt(&self) -> &Module<K> {
        &self.tgt
    }
    pub fn block(&self, v: usize) -> &Matrix<K> {
        &self.blocks[v]
    }
    pub fn blocks(&self) -> &[Matrix<K>] {
        &self.blocks
    }

    pub fn zero(src: &Module<K>, tgt: &Module<K>) -> Self {
        let k = src.field();
        let blocks = (0..src.dims().len()).map(|v| Matrix::zeros(k, tgt.dims()[v], src.dims()[v])).collect();
        Morphism { src: src.clone(), tgt: tgt.clone(), blocks }
    }

    pub fn identity(x: &Module<K>) -> Self {
        let k = x.field();
        let blocks = x.dims().iter().map(|&d| Matrix::identity(k, d)).collect();
        Morphism { src: x.clone(), tgt: x.clone(), blocks }
    }

    /// `g ∘ self`.
    pub fn then(&self, g: &Morphism<K>) -> Morphism<K> {
        debug_assert_eq!(self.tgt.dims(), g.src.dims());
        let blocks = self.blocks.iter().zip(&g.blocks).map(|(f, g)| g.mul(f)).collect();
        Morphism { src: self.src.clone(), tgt: g.tgt.clone(), blocks }
    }

    pub fn add(&self, other: &Morphism<K>) -> Morphism<K> {
        let blocks = self.blocks.iter().zip(&other.blocks).map(|(a, b)| a.add(b)).collect();
        Morphism { src: self.src.clone(), tgt: self.tgt.clone(), blocks }
    }

    pub fn sub(&self, other: &Morphism<K>) -> Morphism<K> {
        let blocks = self.blocks.iter().zip(&other.blocks).map(|(a, b)| a.sub(b)).collect();
        Morphism { src: self.src.clone(), tgt: self.tgt.clone(), blocks }
    }

    pub fn scale(&self, c: &K::Elem) -> Morphism<K> {
        let blocks = self.blocks.iter().map(|a| a.scale(c)).collect();
        Morphism { src: self.src.clone(), tgt: self.tgt.clone(), blocks }
    }

    /// Linear combination of morphisms sharing source and target.
    pub fn combination(src: &Module<K>, tgt: &Module<K>, coeffs: &[K::Elem], fs: &[Morphism<K>]) -> Morphism<K> {
        let mut out = Morphism::zero(src, tgt);
        for (c, f) in coeffs.iter().zip(fs) {
            if src.field().is_zero(c) {
                continue;
            }
            for (a, b) in out.blocks.iter_mut().zip(&f.blocks) {
                a.add_scaled(c, b);
            }
        }
        out
    }

    /// Same maps with replaced endpoints of equal shape.
    pub fn with_ends(&self, src: &Module<K>, tgt: &Module<K>) -> Morphism<K> {
        Morphism { src: src.clone(), tgt: tgt.clone(), blocks: self.blocks.clone() }
    }

    pub fn rank(&self) -> usize {
        self.blocks.iter().map(|b| b.rank()).sum()
    }
    pub fn is_zero(&self) -> bool {
        self.blocks.iter().all(|b| b.is_zero())
    }
    pub fn is_mono(&self) -> bool {
        self.rank() == self.src.dim()
    }
    pub fn is_epi(&self) -> bool {
        self.rank() == self.tgt.dim()
    }
    pub fn is_iso(&self) -> bool {
        self.src.dims() == self.tgt.dims() && self.is_mono()
    }

    /// Full matrix in the block bases.
    pub fn matrix(&self) -> Matrix<K> {
        let k = self.src.field();
        let mut m = Matrix::zeros(k, self.tgt.dim(), self.src.dim());
        for (v, b) in self.blocks.iter().enumerate() {
            m.set_block(self.tgt.offset(v), self.src.offset(v), b);
        }
        m
    }

    pub fn apply(&self, x: &[K::Elem]) -> Vec<K::Elem> {
        let mut out = Vec::with_capacity(self.tgt.dim());
        for (v, b) in self.blocks.iter().enumerate() {
            out.extend(b.mul_vec(&x[self.src.offset(v)..self.src.offset(v + 1)]));
        }
        out
    }

    /// Blocks flattened row-major into one vector.
    pub fn flatten(&self) -> Vec<K::Elem> {
        self.blocks.iter().flat_map(|b| b.data().iter().cloned()).collect()
    }

    pub fn unflatten(src: &Module<K>, tgt: &Module<K>, v: &[K::Elem]) -> Morphism<K> {
        let k = src.field();
        let mut pos = 0;
        let blocks = (0..src.dims().len())
            .map(|i| {
                let (r, c) = (tgt.dims()[i], src.dims()[i]);
                let m = Matrix::from_vec(k, r, c, v[pos..pos + r * c].to_vec());
                pos += r * c;
                m
            })
            .collect();
        Morphism { src: src.clone(), tgt: tgt.clone(), blocks }
    }

    /// Inclusion of the kernel.
    pub fn kernel(&self) -> Morphism<K> {
        let bases = self.blocks.iter().map(|b| b.kernel_basis().to_cols()).collect();
        self.src.closed_submodule(bases)
    }

    /// Inclusion of the image.
    pub fn image(&self) -> Morphism<K> {
        let bases = self.blocks.iter().map(|b| b.col_space().to_cols()).collect();
        self.tgt.closed_submodule(bases)
    }

    /// Projection onto the cokernel.
    pub fn cokernel(&self) -> Morphism<K> {
        self.tgt.quotient(&self.image())
    }

    /// Factorization of `self` through a monomorphism `mono` with the same target.
    pub fn factor_through_mono(&self, mono: &Morphism<K>) -> Option<Morphism<K>> {
        let blocks: Option<Vec<Matrix<K>>> = self
            .blocks
            .iter()
            .zip(&mono.blocks)
            .map(|(f, m)| m.solve(f).ok().flatten())
            .collect();
        blocks.map(|b| Morphism { src: self.src.clone(), tgt: mono.src.clone(), blocks: b })
    }

    /// Factorization of `self` through an epimorphism `epi` with the same source.
    pub fn factor_through_epi(&self, epi: &Morphism<K>) -> Option<Morphism<K>> {
        // h ∘ epi = self, blockwise h E = F  <=>  E^T h^T = F^T
        let blocks: Option<Vec<Matrix<K>>> = self
            .blocks
            .iter()
            .zip(&epi.blocks)
            .map(|(f, e)| e.transpose().solve(&f.transpose()).ok().flatten().map(|x| x.transpose()))
            .collect();
        blocks.map(|b| Morphism { src: epi.tgt.clone(), tgt: self.tgt.clone(), blocks: b })
    }

    /// The dual morphism `D(tgt) → D(src)`.
    pub fn dual(&self) -> Morphism<K> {
        let blocks = self.blocks.iter().map(|b| b.transpose()).collect();
        Morphism { src: self.tgt.dual(), tgt: self.src.dual(), blocks }
    }

    /// Dual morphism between already dualized modules.
    pub fn dual_between(&self, dtgt: &Module<K>, dsrc: &Module<K>) -> Morphism<K> {
        let blocks = self.blocks.iter().map(|b| b.transpose()).collect();
        Morphism { src: dtgt.clone(), tgt: dsrc.clone(), blocks }
    }

    /// Inverse of an isomorphism.
    pub fn inverse(&self) -> Option<Morphism<K>> {
        let blocks: Option<Vec<Matrix<K>>> = self.blocks.iter().map(|b| b.inverse()).collect();
        blocks.map(|b| Morphism { src: self.tgt.clone(), tgt: self.src.clone(), blocks: b })
    }
}
