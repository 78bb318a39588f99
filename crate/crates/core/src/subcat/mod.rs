//! Finite subcategories `add M`, approximations, resolution dimension and the
//! rejection functors.

mod chain;

pub use chain::*;

use std::sync::{Arc, OnceLock};

use crate::algebra::Alg;
use crate::decomp::{canonical_key, decompose, find_iso};
use crate::error::{Error, Result};
use crate::exactla::{Field, Span};
use crate::homology::Dim;
use crate::module::{HomSpace, Module, Morphism};
use crate::Config;

struct Shared<K: Field> {
    alg: Alg<K>,
    parts: Vec<Module<K>>,
    homs: Vec<OnceLock<HomSpace<K>>>,
    jac: Vec<OnceLock<Vec<Morphism<K>>>>,
}

/// `add M` for a list of pairwise non-isomorphic indecomposables.
#[derive(Clone)]
pub struct Subcategory<K: Field> {
    shared: Arc<Shared<K>>,
    idx: Vec<usize>,
}

impl<K: Field> std::fmt::Debug for Subcategory<K> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let dims: Vec<_> = self.parts().map(|m| m.dims().to_vec()).collect();
        write!(f, "Subcategory{dims:?}")
    }
}

impl<K: Field> Subcategory<K> {
    /// Trusted constructor: `parts` must be indecomposable and pairwise non-isomorphic.
    pub fn from_parts(alg: &Alg<K>, parts: Vec<Module<K>>) -> Self {
        let n = parts.len();
        let shared = Shared {
            alg: alg.clone(),
            parts,
            homs: (0..n * n).map(|_| OnceLock::new()).collect(),
            jac: (0..n * n).map(|_| OnceLock::new()).collect(),
        };
        Subcategory { shared: Arc::new(shared), idx: (0..n).collect() }
    }

    /// `add` of the given modules: decomposes, removes repetitions and sorts canonically.
    pub fn add(alg: &Alg<K>, modules: &[Module<K>], cfg: &Config) -> Result<Self> {
        let mut parts: Vec<Module<K>> = Vec::new();
        for m in modules {
            m.check_same_algebra(&Module::zero(alg))?;
            let d = decompose(m, cfg)?;
            if !d.certified {
                return Err(Error::Uncertified("decomposition of a generator".into()));
            }
            for (p, _) in d.parts {
                if find_iso(&p, &parts, cfg)?.is_none() {
                    parts.push(p);
                }
            }
        }
        parts.sort_by_key(|a| canonical_key(a));
        Ok(Self::from_parts(alg, parts))
    }

    pub fn empty(alg: &Alg<K>) -> Self {
        Self::from_parts(alg, vec![])
    }

    pub fn algebra(&self) -> &Alg<K> {
        &self.shared.alg
    }
    pub fn len(&self) -> usize {
        self.idx.len()
    }
    pub fn is_empty(&self) -> bool {
        self.idx.is_empty()
    }
    pub fn part(&self, i: usize) -> &Module<K> {
        &self.shared.parts[self.idx[i]]
    }
    pub fn parts(&self) -> impl Iterator<Item = &Module<K>> + '_ {
        self.idx.iter().map(move |&i| &self.shared.parts[i])
    }
    pub fn part_list(&self) -> Vec<Module<K>> {
        self.parts().cloned().collect()
    }
    /// Indices into the list this subcategory was cut from.
    pub fn master_indices(&self) -> &[usize] {
        &self.idx
    }
    pub fn shares_parts_with(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.shared, &other.shared)
    }

    /// The subcategory on a subset of the local part indices (same sharing).
    pub fn restrict(&self, keep: &[usize]) -> Self {
        Subcategory { shared: self.shared.clone(), idx: keep.iter().map(|&i| self.idx[i]).collect() }
    }

    /// Subcategory on the given master indices.
    pub fn with_master(&self, master: Vec<usize>) -> Self {
        Subcategory { shared: self.shared.clone(), idx: master }
    }

    pub fn without(&self, i: usize) -> Self {
        let keep: Vec<usize> = (0..self.len()).filter(|&j| j != i).collect();
        self.restrict(&keep)
    }

    pub fn generator(&self) -> Module<K> {
        Module::direct_sum(&self.shared.alg, &self.part_list()).0
    }

    /// Local index of a part isomorphic to the indecomposable `x`.
    pub fn index_of(&self, x: &Module<K>, cfg: &Config) -> Result<Option<usize>> {
        for (i, p) in self.parts().enumerate() {
            if crate::decomp::iso_indecomposable(x, p, cfg)? {
                return Ok(Some(i));
            }
        }
        Ok(None)
    }

    /// Whether every indecomposable summand of `x` lies in the subcategory.
    pub fn contains(&self, x: &Module<K>, cfg: &Config) -> Result<bool> {
        if x.is_zero() {
            return Ok(true);
        }
        let d = decompose(x, cfg)?;
        for (p, _) in &d.parts {
            if self.index_of(p, cfg)?.is_none() {
                return Ok(false);
            }
        }
        Ok(true)
    }

    fn master_hom(&self, a: usize, b: usize) -> &HomSpace<K> {
        let n = self.shared.parts.len();
        self.shared.homs[a * n + b]
            .get_or_init(|| HomSpace::new(&self.shared.parts[a], &self.shared.parts[b]).expect("same algebra"))
    }

    /// `Hom(C_i, C_j)` for local indices.
    pub fn hom(&self, i: usize, j: usize) -> &HomSpace<K> {
        self.master_hom(self.idx[i], self.idx[j])
    }

    /// Basis of `J(C_i, C_j)` for local indices.
    pub fn jac(&self, i: usize, j: usize, cfg: &Config) -> Result<&[Morphism<K>]> {
        let (a, b) = (self.idx[i], self.idx[j]);
        let n = self.shared.parts.len();
        let cell = &self.shared.jac[a * n + b];
        if let Some(v) = cell.get() {
            return Ok(v);
        }
        let v = if a == b {
            let e = self.shared.parts[a].end_data(cfg)?;
            e.algebra.radical().iter().map(|r| e.space.element(r)).collect()
        } else {
            self.master_hom(a, b).basis.clone()
        };
        Ok(cell.get_or_init(|| v))
    }

    /// The dual subcategory over the opposite algebra, with the same indexing.
    pub fn dual(&self) -> Self {
        let op = self.shared.alg.opposite();
        let master = Self::from_parts(&op, self.shared.parts.iter().map(|m| m.dual()).collect());
        master.with_master(self.idx.clone())
    }

    /// The subcategory on all parts of the shared list.
    pub fn master(&self) -> Self {
        self.with_master((0..self.shared.parts.len()).collect())
    }
}

/// Basis of `J(Y, X)`: morphisms `f` with `g∘f ∈ rad End(Y)` for every `g: X → Y`.
pub fn radical_hom<K: Field>(y: &Module<K>, x: &Module<K>, cfg: &Config) -> Result<Vec<Morphism<K>>> {
    y.check_same_algebra(x)?;
    let h = HomSpace::new(y, x)?;
    if h.dim() == 0 {
        return Ok(vec![]);
    }
    let back = HomSpace::new(x, y)?;
    if back.dim() == 0 {
        return Ok(h.basis);
    }
    let end = y.end_data(cfg)?;
    let k = y.field();
    let e = end.space.dim();
    let rad = Span::from_vectors(k, e, end.algebra.radical().iter());
    // coordinates modulo the radical, for each g, stacked
    let mut cols: Vec<Vec<K::Elem>> = Vec::with_capacity(h.dim());
    for f in &h.basis {
        let mut col = Vec::new();
        for g in &back.basis {
            col.extend(rad.reduce(&end.space.coords(&f.then(g))));
        }
        cols.push(col);
    }
    let m = crate::exactla::Matrix::from_cols(k, cols[0].len(), &cols);
    let ker = m.kernel_basis();
    Ok(ker.to_cols().iter().map(|c| h.element(c)).collect())
}

/// Per-vertex spanning columns of a family of images in `x`.
fn image_sum<K: Field>(x: &Module<K>, maps: &[Morphism<K>]) -> Morphism<K> {
    let k = x.field();
    let n = x.dims().len();
    let bases = (0..n)
        .map(|v| {
            let mut s = Span::new(k, x.dims()[v]);
            for f in maps {
                for c in f.block(v).to_cols() {
                    s.insert(&c);
                }
            }
            s.basis().to_vec()
        })
        .collect();
    x.closed_submodule(bases)
}

/// `F_C X ↪ X`, the sum of images of radical maps from `C`.
pub fn f_c<K: Field>(c: &Subcategory<K>, x: &Module<K>, cfg: &Config) -> Result<Morphism<K>> {
    let mut maps = Vec::new();
    for p in c.parts() {
        maps.extend(radical_hom(p, x, cfg)?);
    }
    Ok(image_sum(x, &maps))
}

/// `X ↠ G_C X`, computed as the dual of `F_{DC}(DX) ↪ DX`.
pub fn g_c<K: Field>(c: &Subcategory<K>, x: &Module<K>, cfg: &Config) -> Result<Morphism<K>> {
    let inc = f_c(&c.dual(), &x.dual(), cfg)?;
    let q = inc.dual();
    Ok(q.with_ends(x, q.tgt()))
}

/// A right approximation `⊕ C_{summands[i]} → X`, or a left one `X → ⊕ C_{summands[i]}`.
#[derive(Clone, Debug)]
pub struct Approximation<K: Field> {
    pub map: Morphism<K>,
    pub left: bool,
    /// Local part index of each summand of the source.
    pub summands: Vec<usize>,
    /// Inclusions of the summands into the source.
    pub inclusions: Vec<Morphism<K>>,
}

impl<K: Field> Approximation<K> {
    pub fn object(&self) -> &Module<K> {
        if self.left {
            self.map.tgt()
        } else {
            self.map.src()
        }
    }
}

/// Minimal right `C`-approximation of `x`.
pub fn right_min_approx<K: Field>(c: &Subcategory<K>, x: &Module<K>, cfg: &Config) -> Result<Approximation<K>> {
    let homs: Vec<HomSpace<K>> = c.parts().map(|p| HomSpace::new(p, x)).collect::<Result<_>>()?;
    let mut picks: Vec<(usize, Morphism<K>)> = Vec::new();
    for kk in 0..c.len() {
        let hk = &homs[kk];
        if hk.dim() == 0 {
            continue;
        }
        let mut span = Span::new(x.field(), hk.dim());
        for (j, hj) in homs.iter().enumerate() {
            if hj.dim() == 0 {
                continue;
            }
            for r in c.jac(kk, j, cfg)? {
                for h in &hj.basis {
                    span.insert(&hk.coords(&r.then(h)));
                }
            }
        }
        let ends = &c.hom(kk, kk).basis;
        for h in &hk.basis {
            if span.dim() == hk.dim() {
                break;
            }
            if span.contains(&hk.coords(h)) {
                continue;
            }
            for e in ends {
                span.insert(&hk.coords(&e.then(h)));
            }
            picks.push((kk, h.clone()));
        }
    }
    let alg = x.algebra();
    let srcs: Vec<Module<K>> = picks.iter().map(|(kk, _)| c.part(*kk).clone()).collect();
    let (y, incs, projs) = Module::direct_sum(alg, &srcs);
    let mut map = Morphism::zero(&y, x);
    for (pr, (_, h)) in projs.iter().zip(&picks) {
        map = map.add(&pr.then(h));
    }
    Ok(Approximation { map, left: false, summands: picks.iter().map(|p| p.0).collect(), inclusions: incs })
}

/// Minimal left `C`-approximation `X → ⊕ C_i`, through duality.
pub fn left_min_approx<K: Field>(c: &Subcategory<K>, x: &Module<K>, cfg: &Config) -> Result<Approximation<K>> {
    let r = right_min_approx(&c.dual(), &x.dual(), cfg)?;
    let d = r.map.dual();
    let tgt = d.tgt().clone();
    let parts: Vec<Module<K>> = r.summands.iter().map(|&i| c.part(i).clone()).collect();
    let (y, incs, _) = Module::direct_sum(x.algebra(), &parts);
    debug_assert_eq!(y.dims(), tgt.dims());
    Ok(Approximation { map: d.with_ends(x, &y), left: true, summands: r.summands, inclusions: incs })
}

/// Minimal right `C`-resolution of `X`, with `Ω_C` taken as the kernel at each stage.
#[derive(Clone, Debug)]
pub struct CResolution<K: Field> {
    pub target: Module<K>,
    pub approximations: Vec<Approximation<K>>,
    pub resdim: Dim,
}

pub fn c_resolution<K: Field>(c: &Subcategory<K>, x: &Module<K>, cap: usize, cfg: &Config) -> Result<CResolution<K>> {
    let mut cur = x.clone();
    let mut approximations = Vec::new();
    if x.is_zero() {
        return Ok(CResolution { target: x.clone(), approximations, resdim: Dim::Finite(0) });
    }
    loop {
        let a = right_min_approx(c, &cur, cfg)?;
        let ker = a.map.kernel().src().clone();
        approximations.push(a);
        let n = approximations.len() - 1;
        let reaches = ker.is_zero() || c.parts().all(|p| HomSpace::new(p, &ker).map(|h| h.dim() == 0).unwrap_or(false));
        if reaches {
            return Ok(CResolution { target: x.clone(), approximations, resdim: Dim::Finite(n) });
        }
        if n >= cap {
            return Ok(CResolution { target: x.clone(), approximations, resdim: Dim::Unknown });
        }
        cur = ker;
    }
}

/// `resdim_C X`.
pub fn resdim<K: Field>(c: &Subcategory<K>, x: &Module<K>, cfg: &Config) -> Result<Dim> {
    Ok(c_resolution(c, x, cfg.cap_resdim, cfg)?.resdim)
}

/// `resdim_C` over a list of modules.
pub fn resdim_over<K: Field>(c: &Subcategory<K>, xs: &[Module<K>], cfg: &Config) -> Result<Dim> {
    let mut best = Dim::Finite(0);
    for x in xs {
        best = best.max(resdim(c, x, cfg)?);
    }
    Ok(best)
}

/// Splitting projective / injective flags for each part.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub struct SplittingObjects {
    pub projective: Vec<bool>,
    pub injective: Vec<bool>,
}

pub fn splitting_objects<K: Field>(c: &Subcategory<K>, cfg: &Config) -> Result<SplittingObjects> {
    let mut projective = Vec::new();
    let mut injective = Vec::new();
    for p in c.parts() {
        projective.push(f_c(c, p, cfg)?.src().dim() < p.dim());
        injective.push(g_c(c, p, cfg)?.tgt().dim() < p.dim());
    }
    Ok(SplittingObjects { projective, injective })
}

/// Projective and injective: the indecomposables that form a rejective singleton.
pub fn rejectable_singleton<K: Field>(x: &Module<K>, cfg: &Config) -> Result<bool> {
    if !crate::decomp::is_indecomposable(x, cfg)? {
        return Err(Error::Input("expected an indecomposable module".into()));
    }
    Ok(crate::homology::is_projective(x) && crate::homology::is_injective(x))
}

/// Whether `F_{C'} X ∈ C` for every `C' ⊆ C` and `X ∈ C'`, by enumerating all subsets of
/// `ind C`; refused above `max_parts` indecomposables.
pub fn rejection_closed<K: Field>(c: &Subcategory<K>, max_parts: usize, cfg: &Config) -> Result<bool> {
    let n = c.len();
    if n > max_parts {
        return Err(Error::SizeBound(format!("{n} indecomposables exceed the bound {max_parts}")));
    }
    for mask in 1u64..1 << n {
        let keep: Vec<usize> = (0..n).filter(|i| mask >> i & 1 == 1).collect();
        let sub = c.restrict(&keep);
        for x in sub.parts() {
            let f = f_c(&sub, x, cfg)?;
            if f.src().is_zero() {
                continue;
            }
            for (p, _) in decompose(f.src(), cfg)?.parts {
                if c.index_of(&p, cfg)?.is_none() {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}
