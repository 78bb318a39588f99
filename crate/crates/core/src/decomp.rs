//! Krull–Schmidt decomposition, summand and isomorphism tests.

use crate::error::{Error, Result};
use crate::exactla::{Field, Span};
use crate::module::{HomSpace, Module, Morphism};
use crate::Config;

/// One summand instance inside the decomposed module.
#[derive(Clone, Debug)]
pub struct Piece<K: Field> {
    /// Index into `Decomposition::parts`.
    pub class: usize,
    pub inclusion: Morphism<K>,
    pub projection: Morphism<K>,
}

impl<K: Field> Piece<K> {
    pub fn module(&self) -> &Module<K> {
        self.inclusion.src()
    }
}

#[derive(Clone, Debug)]
pub struct Decomposition<K: Field> {
    pub module: Module<K>,
    /// Pairwise non-isomorphic indecomposables in canonical order, with multiplicities.
    pub parts: Vec<(Module<K>, usize)>,
    pub pieces: Vec<Piece<K>>,
    /// Splitting idempotents as endomorphisms, one per piece.
    pub idempotents: Vec<Morphism<K>>,
    pub certified: bool,
}

impl<K: Field> Decomposition<K> {
    pub fn num_pieces(&self) -> usize {
        self.pieces.len()
    }
    pub fn is_indecomposable(&self) -> bool {
        self.pieces.len() == 1
    }
}

/// Labels of the top, with multiplicity, sorted.
pub fn top_labels<K: Field>(x: &Module<K>) -> Vec<String> {
    let top = x.top();
    let labels = x.algebra().vertex_labels();
    let mut out = Vec::new();
    for (v, &d) in top.tgt().dims().iter().enumerate() {
        for _ in 0..d {
            out.push(labels[v].clone());
        }
    }
    out.sort();
    out
}

/// Canonical sort key of an indecomposable.
pub fn canonical_key<K: Field>(x: &Module<K>) -> (usize, Vec<String>, Vec<usize>) {
    (x.dim(), top_labels(x), x.dims().to_vec())
}

pub fn decompose<K: Field>(x: &Module<K>, cfg: &Config) -> Result<Decomposition<K>> {
    if x.is_zero() {
        return Ok(Decomposition { module: x.clone(), parts: vec![], pieces: vec![], idempotents: vec![], certified: true });
    }
    let end = match x.end_data(cfg) {
        Ok(e) => e,
        Err(Error::Splitting(_)) | Err(Error::Unsupported(_)) => {
            let id = Morphism::identity(x);
            return Ok(Decomposition {
                module: x.clone(),
                parts: vec![(x.clone(), 1)],
                pieces: vec![Piece { class: 0, inclusion: id.clone(), projection: id.clone() }],
                idempotents: vec![id],
                certified: false,
            });
        }
        Err(e) => return Err(e),
    };
    let e = &end.algebra;
    let mut raw = Vec::new();
    for (i, eps) in e.idempotents().iter().enumerate() {
        let f = end.space.element(eps);
        let inc = f.image();
        let proj = f.factor_through_mono(&inc).expect("idempotent factors through its image");
        raw.push((e.classes()[i], inc, proj, f));
    }
    let ncls = e.num_classes();
    let mut reps: Vec<Option<Module<K>>> = vec![None; ncls];
    let mut mult = vec![0usize; ncls];
    for (c, inc, _, _) in &raw {
        if reps[*c].is_none() {
            reps[*c] = Some(inc.src().clone());
        }
        mult[*c] += 1;
    }
    let mut order: Vec<usize> = (0..ncls).collect();
    let keys: Vec<_> = reps.iter().map(|m| canonical_key(m.as_ref().unwrap())).collect();
    order.sort_by(|a, b| keys[*a].cmp(&keys[*b]));
    let mut rank = vec![0; ncls];
    for (pos, &c) in order.iter().enumerate() {
        rank[c] = pos;
    }
    let parts = order.iter().map(|&c| (reps[c].clone().unwrap(), mult[c])).collect();
    let mut pieces = Vec::new();
    let mut idempotents = Vec::new();
    raw.sort_by_key(|(c, _, _, _)| rank[*c]);
    for (c, inc, proj, f) in raw {
        pieces.push(Piece { class: rank[c], inclusion: inc, projection: proj });
        idempotents.push(f);
    }
    Ok(Decomposition { module: x.clone(), parts, pieces, idempotents, certified: true })
}

pub fn is_indecomposable<K: Field>(x: &Module<K>, cfg: &Config) -> Result<bool> {
    if x.is_zero() {
        return Ok(false);
    }
    Ok(x.end_data(cfg)?.algebra.num_vertices() == 1)
}

/// Whether some composite `X → Y → X` is invertible (X indecomposable).
pub fn is_summand<K: Field>(x: &Module<K>, y: &Module<K>, cfg: &Config) -> Result<bool> {
    x.check_same_algebra(y)?;
    if !is_indecomposable(x, cfg)? {
        return Err(Error::Input("summand test needs an indecomposable module".into()));
    }
    pairing_nonradical(x, y, cfg)
}

fn pairing_nonradical<K: Field>(x: &Module<K>, y: &Module<K>, cfg: &Config) -> Result<bool> {
    if y.is_zero() {
        return Ok(false);
    }
    let end = x.end_data(cfg)?;
    let rad = Span::from_vectors(x.field(), end.space.dim(), end.algebra.radical().iter());
    let xy = HomSpace::new(x, y)?;
    if xy.dim() == 0 {
        return Ok(false);
    }
    let yx = HomSpace::new(y, x)?;
    for f in &xy.basis {
        for g in &yx.basis {
            if !rad.contains(&end.space.coords(&f.then(g))) {
                return Ok(true);
            }
        }
    }
    Ok(false)
}

/// Isomorphism of indecomposables.
pub fn iso_indecomposable<K: Field>(x: &Module<K>, y: &Module<K>, cfg: &Config) -> Result<bool> {
    if x.dims() != y.dims() {
        return Ok(false);
    }
    pairing_nonradical(x, y, cfg)
}

pub fn is_isomorphic<K: Field>(x: &Module<K>, y: &Module<K>, cfg: &Config) -> Result<bool> {
    x.check_same_algebra(y)?;
    if x.dims() != y.dims() {
        return Ok(false);
    }
    if x.is_zero() {
        return Ok(true);
    }
    let h = HomSpace::new(x, y)?;
    let mut rng = cfg.rng();
    for _ in 0..4 {
        if h.random(&mut rng).is_iso() {
            return Ok(true);
        }
    }
    let dx = decompose(x, cfg)?;
    let dy = decompose(y, cfg)?;
    if dx.parts.len() != dy.parts.len() || dx.pieces.len() != dy.pieces.len() {
        return Ok(false);
    }
    let mut used = vec![false; dy.parts.len()];
    for (a, ma) in &dx.parts {
        let mut found = false;
        for (j, (b, mb)) in dy.parts.iter().enumerate() {
            if !used[j] && ma == mb && iso_indecomposable(a, b, cfg)? {
                used[j] = true;
                found = true;
                break;
            }
        }
        if !found {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Index of the part in `list` isomorphic to the indecomposable `x`.
pub fn find_iso<K: Field>(x: &Module<K>, list: &[Module<K>], cfg: &Config) -> Result<Option<usize>> {
    for (i, y) in list.iter().enumerate() {
        if iso_indecomposable(x, y, cfg)? {
            return Ok(Some(i));
        }
    }
    Ok(None)
}
