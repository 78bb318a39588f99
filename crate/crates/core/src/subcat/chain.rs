//! Cancellations, rejective chains and their classification.

use serde::{Deserialize, Serialize};

use super::{f_c, g_c, right_min_approx, Subcategory};
use crate::decomp::{canonical_key, decompose, top_labels};
use crate::error::{Error, Result};
use crate::exactla::{Field, Span};
use crate::module::{Module, Morphism};
use crate::Config;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Side {
    Right,
    Left,
}

/// Rank data of `Hom(Z, Y) → Hom(Z, X)` for one test object `Z`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HomCheck {
    pub test: usize,
    pub hom_dim: usize,
    pub jac_dim: usize,
    pub rank: usize,
}

/// Certificate for one removed object: its minimal approximation by the smaller
/// subcategory and the rank checks against every object of the larger one.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ObjectCertificate {
    pub object: usize,
    pub approximation: Vec<usize>,
    /// Approximation injective (right) or surjective (left) as a module map.
    pub exact_in_modules: bool,
    pub checks: Vec<HomCheck>,
}

impl ObjectCertificate {
    /// Categorically monic (right) or epic (left) in the ambient subcategory.
    pub fn categorical(&self) -> bool {
        self.checks.iter().all(|c| c.rank == c.hom_dim)
    }
    /// Every radical map from the ambient factors through the approximation.
    pub fn cosemisimple(&self) -> bool {
        self.checks.iter().all(|c| c.rank == c.jac_dim)
    }
    /// The single-object criterion: `C(-,Y) → J(-,X)` is an isomorphism.
    pub fn criterion(&self) -> bool {
        self.categorical() && self.cosemisimple()
    }
}

fn rank_of<K: Field>(maps: &[Morphism<K>]) -> usize {
    let Some(first) = maps.first() else { return 0 };
    let k = first.src().field();
    let n = first.flatten().len();
    let mut s = Span::new(k, n);
    for f in maps {
        s.insert(&f.flatten());
    }
    s.dim()
}

/// Right-side certificates for `sub ⊆ amb` (shared parts) at the given objects of `amb`.
fn right_certificates<K: Field>(
    sub: &Subcategory<K>,
    amb: &Subcategory<K>,
    objects: &[usize],
    cfg: &Config,
) -> Result<Vec<ObjectCertificate>> {
    if !sub.shares_parts_with(amb) {
        return Err(Error::MalformedChain("subcategories must be cut from the same part list".into()));
    }
    let mut out = Vec::new();
    for &xi in objects {
        let x = amb.part(xi);
        let a = right_min_approx(sub, x, cfg)?;
        let mut checks = Vec::new();
        for zi in 0..amb.len() {
            let mut imgs = Vec::new();
            let mut hom_dim = 0;
            for (s, inc) in a.summands.iter().zip(&a.inclusions) {
                let sm = sub.master_indices()[*s];
                let h = amb.master_hom(amb.master_indices()[zi], sm);
                hom_dim += h.dim();
                for g in &h.basis {
                    imgs.push(g.then(inc).then(&a.map));
                }
            }
            let jac_dim = amb.jac(zi, xi, cfg)?.len();
            checks.push(HomCheck { test: amb.master_indices()[zi], hom_dim, jac_dim, rank: rank_of(&imgs) });
        }
        out.push(ObjectCertificate {
            object: amb.master_indices()[xi],
            approximation: a.summands.iter().map(|&s| sub.master_indices()[s]).collect(),
            exact_in_modules: a.map.is_mono(),
            checks,
        });
    }
    Ok(out)
}

fn local_complement<K: Field>(sub: &Subcategory<K>, amb: &Subcategory<K>) -> Vec<usize> {
    (0..amb.len()).filter(|&i| !sub.master_indices().contains(&amb.master_indices()[i])).collect()
}

/// Certificates for `sub ⊆ amb` on the given side, over `ind amb ∖ ind sub`.
pub fn step_certificates<K: Field>(
    sub: &Subcategory<K>,
    amb: &Subcategory<K>,
    side: Side,
    cfg: &Config,
) -> Result<Vec<ObjectCertificate>> {
    let objs = local_complement(sub, amb);
    match side {
        Side::Right => right_certificates(sub, amb, &objs, cfg),
        Side::Left => {
            let dm = amb.master().dual();
            let (ds, da) = (dm.with_master(sub.master_indices().to_vec()), dm.with_master(amb.master_indices().to_vec()));
            right_certificates(&ds, &da, &objs, cfg)
        }
    }
}

/// Whether `sub` is a cosemisimple right rejective subcategory of `amb`.
pub fn is_cosemisimple_right_rejective<K: Field>(
    sub: &Subcategory<K>,
    amb: &Subcategory<K>,
    cfg: &Config,
) -> Result<(bool, Vec<ObjectCertificate>)> {
    let c = step_certificates(sub, amb, Side::Right, cfg)?;
    Ok((c.iter().all(|o| o.criterion()), c))
}

pub fn is_cosemisimple_left_rejective<K: Field>(
    sub: &Subcategory<K>,
    amb: &Subcategory<K>,
    cfg: &Config,
) -> Result<(bool, Vec<ObjectCertificate>)> {
    let c = step_certificates(sub, amb, Side::Left, cfg)?;
    Ok((c.iter().all(|o| o.criterion()), c))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Certification {
    /// `F_C X` (or `G_C X`) already lies in the smaller subcategory.
    Functor,
    /// Checked object by object.
    Direct,
    Failed,
}

#[derive(Clone, Debug)]
pub struct Cancellation<K: Field> {
    pub removed: usize,
    pub result: Subcategory<K>,
    pub certification: Certification,
}

/// Splitting objects `F_C X ⊊ X` (or `G_C X ⊊ X`), in canonical order.
fn eligible_objects<K: Field>(c: &Subcategory<K>, side: Side, cfg: &Config) -> Result<Vec<usize>> {
    let mut eligible = Vec::new();
    for (i, p) in c.parts().enumerate() {
        let smaller = match side {
            Side::Right => f_c(c, p, cfg)?.src().dim() < p.dim(),
            Side::Left => g_c(c, p, cfg)?.tgt().dim() < p.dim(),
        };
        if smaller {
            eligible.push(i);
        }
    }
    eligible.sort_by_key(|&i| canonical_key(c.part(i)));
    Ok(eligible)
}

/// How removing part `i` is certified cosemisimple rejective, if it is.
fn certify<K: Field>(c: &Subcategory<K>, i: usize, side: Side, cfg: &Config) -> Result<Option<Certification>> {
    let sub = c.without(i);
    let p = c.part(i);
    let image = match side {
        Side::Right => f_c(c, p, cfg)?.src().clone(),
        Side::Left => g_c(c, p, cfg)?.tgt().clone(),
    };
    if sub.contains(&image, cfg)? {
        return Ok(Some(Certification::Functor));
    }
    let certs = step_certificates(&sub, c, side, cfg)?;
    Ok(certs.iter().all(|o| o.criterion()).then_some(Certification::Direct))
}

/// Right (or left) cancellation of the canonically least certifiable splitting object.
pub fn cancellation<K: Field>(c: &Subcategory<K>, side: Side, cfg: &Config) -> Result<Cancellation<K>> {
    let eligible = eligible_objects(c, side, cfg)?;
    if eligible.is_empty() {
        return Err(Error::NoEligibleObject);
    }
    for &i in &eligible {
        if let Some(certification) = certify(c, i, side, cfg)? {
            return Ok(Cancellation { removed: c.master_indices()[i], result: c.without(i), certification });
        }
    }
    let i = eligible[0];
    Ok(Cancellation { removed: c.master_indices()[i], result: c.without(i), certification: Certification::Failed })
}

pub fn right_cancellation<K: Field>(c: &Subcategory<K>, cfg: &Config) -> Result<Cancellation<K>> {
    cancellation(c, Side::Right, cfg)
}

pub fn left_cancellation<K: Field>(c: &Subcategory<K>, cfg: &Config) -> Result<Cancellation<K>> {
    cancellation(c, Side::Left, cfg)
}

/// A descending chain `C_0 ⊇ C_1 ⊇ … ⊇ C_m` cut from one list of parts.
#[derive(Clone, Debug)]
pub struct Chain<K: Field> {
    pub levels: Vec<Subcategory<K>>,
}

impl<K: Field> Chain<K> {
    pub fn new(levels: Vec<Subcategory<K>>) -> Result<Self> {
        if levels.is_empty() {
            return Err(Error::MalformedChain("empty chain".into()));
        }
        for w in levels.windows(2) {
            if !w[1].shares_parts_with(&w[0]) {
                return Err(Error::MalformedChain("levels from different part lists".into()));
            }
            if !w[1].master_indices().iter().all(|i| w[0].master_indices().contains(i)) {
                return Err(Error::MalformedChain("chain is not descending".into()));
            }
        }
        Ok(Chain { levels })
    }

    /// Chain `C_n = add(gens[n])` for modules given per level.
    pub fn from_generators(alg: &crate::Alg<K>, gens: &[Vec<Module<K>>], cfg: &Config) -> Result<Self> {
        let all: Vec<Module<K>> = gens.iter().flatten().cloned().collect();
        let top = Subcategory::add(alg, &all, cfg)?;
        let mut levels = Vec::new();
        for g in gens {
            let mut idx = Vec::new();
            for m in g {
                if m.is_zero() {
                    continue;
                }
                for (p, _) in decompose(m, cfg)?.parts {
                    let i = top.index_of(&p, cfg)?.ok_or_else(|| Error::MalformedChain("part not found".into()))?;
                    if !idx.contains(&i) {
                        idx.push(i);
                    }
                }
            }
            idx.sort();
            levels.push(top.with_master(idx));
        }
        Chain::new(levels)
    }

    pub fn length(&self) -> usize {
        self.levels.len() - 1
    }

    pub fn top(&self) -> &Subcategory<K> {
        &self.levels[0]
    }

    /// Generator of `C_0`.
    pub fn generator(&self) -> Module<K> {
        self.levels[0].generator()
    }
}

/// Chain obtained by repeated cancellation; stops at the empty subcategory or at the first
/// step without a certified candidate. Candidates keeping every level rejective in `C_0`
/// are preferred, then canonical order.
pub fn cancellation_chain<K: Field>(c: &Subcategory<K>, side: Side, cfg: &Config) -> Result<(Chain<K>, Vec<Certification>)> {
    let mut levels = vec![c.clone()];
    let mut certs = Vec::new();
    while !levels.last().unwrap().is_empty() {
        let cur = levels.last().unwrap();
        let mut first = None;
        let mut chosen = None;
        for i in eligible_objects(cur, side, cfg)? {
            let Some(cert) = certify(cur, i, side, cfg)? else { continue };
            let sub = cur.without(i);
            if step_certificates(&sub, c, side, cfg)?.iter().all(|o| o.categorical()) {
                chosen = Some((sub, cert));
                break;
            }
            first.get_or_insert((sub, cert));
        }
        let Some((sub, cert)) = chosen.or(first) else { break };
        certs.push(cert);
        levels.push(sub);
    }
    Ok((Chain::new(levels)?, certs))
}

/// `M_{n+1} := F_{add M_n} M_n` (right) or `G_{add M_n} M_n` (left), until zero.
pub fn iterated_radical_modules<K: Field>(m0: &Module<K>, side: Side, cfg: &Config) -> Result<Vec<Module<K>>> {
    let mut out = vec![m0.clone()];
    let alg = m0.algebra();
    while !out.last().unwrap().is_zero() {
        let m = out.last().unwrap();
        let c = Subcategory::add(alg, std::slice::from_ref(m), cfg)?;
        let next = match side {
            Side::Right => f_c(&c, m, cfg)?.src().clone(),
            Side::Left => g_c(&c, m, cfg)?.tgt().clone(),
        };
        if next.dim() >= m.dim() {
            return Err(Error::Uncertified("radical iteration did not shrink".into()));
        }
        out.push(next);
    }
    Ok(out)
}

/// Chain `C_n = add(⊕_{i ≥ n} M_i)` from the iterated radicals of `m0`.
pub fn iterated_radical_chain<K: Field>(m0: &Module<K>, side: Side, cfg: &Config) -> Result<(Chain<K>, Vec<Module<K>>)> {
    let ms = iterated_radical_modules(m0, side, cfg)?;
    let gens: Vec<Vec<Module<K>>> = (0..ms.len()).map(|n| ms[n..].to_vec()).collect();
    Ok((Chain::from_generators(m0.algebra(), &gens, cfg)?, ms))
}

/// `X / J^i X`.
pub fn radical_quotient<K: Field>(x: &Module<K>, i: usize) -> Module<K> {
    let mut sub = Morphism::identity(x);
    for _ in 0..i {
        sub = sub.src().radical_submodule().then(&sub);
    }
    x.quotient(&sub.image()).tgt().clone()
}

/// `C_n = add(⊕_{i=0}^{m-n} Λ/J^i)` with `m` the Loewy length.
pub fn radical_series_chain<K: Field>(alg: &crate::Alg<K>, cfg: &Config) -> Result<(Chain<K>, Vec<Module<K>>)> {
    let lam = Module::regular(alg);
    let m = lam.loewy_length();
    let qs: Vec<Module<K>> = (0..=m).map(|i| radical_quotient(&lam, i)).collect();
    let gens: Vec<Vec<Module<K>>> = (0..=m).map(|n| qs[..=(m - n)].to_vec()).collect();
    Ok((Chain::from_generators(alg, &gens, cfg)?, qs))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PartSummary {
    pub dim: usize,
    pub dims: Vec<usize>,
    pub top: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StepReport {
    pub removed: Vec<usize>,
    pub cosemisimple: bool,
    pub right_rejective: bool,
    pub left_rejective: bool,
    pub lambda_total_right: bool,
    pub lambda_total_left: bool,
    pub right: Vec<ObjectCertificate>,
    pub left: Vec<ObjectCertificate>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChainReport {
    pub parts: Vec<PartSummary>,
    pub levels: Vec<Vec<usize>>,
    pub length: usize,
    pub steps: Vec<StepReport>,
    pub saturated: bool,
    pub complete: bool,
    pub right_rejective: bool,
    pub left_rejective: bool,
    pub rejective: bool,
    pub total_right: bool,
    pub total_left: bool,
    pub lambda_total_right: bool,
    pub lambda_total_left: bool,
}

/// Whether every level is right (left) rejective in `C_0`, by monic (epic) approximations.
fn total<K: Field>(chain: &Chain<K>, side: Side, cfg: &Config) -> Result<bool> {
    let c0 = chain.top();
    for level in &chain.levels[1..] {
        if !step_certificates(level, c0, side, cfg)?.iter().all(|o| o.categorical()) {
            return Ok(false);
        }
    }
    Ok(true)
}

pub fn classify_chain<K: Field>(chain: &Chain<K>, cfg: &Config) -> Result<ChainReport> {
    let top = chain.top();
    let master = top.master();
    let parts = master
        .parts()
        .map(|m| PartSummary { dim: m.dim(), dims: m.dims().to_vec(), top: top_labels(m) })
        .collect();
    let mut steps = Vec::new();
    for w in chain.levels.windows(2) {
        let (amb, sub) = (&w[0], &w[1]);
        let right = step_certificates(sub, amb, Side::Right, cfg)?;
        let left = step_certificates(sub, amb, Side::Left, cfg)?;
        let cosemisimple = right.iter().all(|o| o.cosemisimple()) && left.iter().all(|o| o.cosemisimple());
        steps.push(StepReport {
            removed: local_complement(sub, amb).iter().map(|&i| amb.master_indices()[i]).collect(),
            cosemisimple,
            right_rejective: cosemisimple && right.iter().all(|o| o.categorical()),
            left_rejective: cosemisimple && left.iter().all(|o| o.categorical()),
            lambda_total_right: right.iter().all(|o| o.exact_in_modules),
            lambda_total_left: left.iter().all(|o| o.exact_in_modules),
            right,
            left,
        });
    }
    let right_rejective = steps.iter().all(|s| s.right_rejective);
    let left_rejective = steps.iter().all(|s| s.left_rejective);
    let total_right = right_rejective && total(chain, Side::Right, cfg)?;
    let total_left = left_rejective && total(chain, Side::Left, cfg)?;
    Ok(ChainReport {
        parts,
        levels: chain.levels.iter().map(|l| l.master_indices().to_vec()).collect(),
        length: chain.length(),
        saturated: steps.iter().all(|s| s.removed.len() == 1),
        complete: chain.levels.last().unwrap().is_empty(),
        right_rejective,
        left_rejective,
        rejective: right_rejective && left_rejective,
        total_right,
        total_left,
        lambda_total_right: right_rejective && steps.iter().all(|s| s.lambda_total_right),
        lambda_total_left: left_rejective && steps.iter().all(|s| s.lambda_total_left),
        steps,
    })
}
