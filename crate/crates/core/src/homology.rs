//! Projective covers, minimal resolutions, projective and global dimension,
//! Ext, and the Igusa–Todorov functions.

use serde::{Deserialize, Serialize};

use crate::algebra::Alg;
use crate::decomp::{decompose, find_iso, is_isomorphic};
use crate::error::{Error, Result};
use crate::exactla::{Field, Matrix, Rationals, Span};
use crate::module::{HomSpace, Module, Morphism};
use crate::Config;

/// A homological dimension that may be infinite or undetermined within the caps.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Dim {
    Finite(usize),
    Infinite,
    Unknown,
}

impl Dim {
    pub fn finite(self) -> Option<usize> {
        match self {
            Dim::Finite(n) => Some(n),
            _ => None,
        }
    }

    /// Supremum, with `Infinite` absorbing and `Unknown` next.
    pub fn max(self, other: Dim) -> Dim {
        match (self, other) {
            (Dim::Infinite, _) | (_, Dim::Infinite) => Dim::Infinite,
            (Dim::Unknown, _) | (_, Dim::Unknown) => Dim::Unknown,
            (Dim::Finite(a), Dim::Finite(b)) => Dim::Finite(a.max(b)),
        }
    }
}

impl std::fmt::Display for Dim {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Dim::Finite(n) => write!(f, "{n}"),
            Dim::Infinite => write!(f, "inf"),
            Dim::Unknown => write!(f, "unknown"),
        }
    }
}

/// Projective cover together with the vertex of each indecomposable summand.
#[derive(Clone, Debug)]
pub struct Cover<K: Field> {
    pub map: Morphism<K>,
    pub tops: Vec<usize>,
}

/// Vertices representing the isoclasses of simples.
pub fn class_representatives<K: Field>(a: &Alg<K>) -> Vec<usize> {
    let mut seen = vec![false; a.num_classes()];
    let mut out = Vec::new();
    for v in 0..a.num_vertices() {
        let c = a.classes()[v];
        if !seen[c] {
            seen[c] = true;
            out.push(v);
        }
    }
    out
}

/// The simple module of each class, in class order.
pub fn simples<K: Field>(a: &Alg<K>) -> Vec<Module<K>> {
    class_representatives(a).into_iter().map(|v| Module::simple(a, v)).collect()
}

/// Indecomposable projectives, one per class.
pub fn projectives<K: Field>(a: &Alg<K>) -> Vec<Module<K>> {
    class_representatives(a).into_iter().map(|v| Module::projective(a, v)).collect()
}

pub fn cover<K: Field>(x: &Module<K>) -> Cover<K> {
    let a = x.algebra();
    let top = x.top();
    let mut parts = Vec::new();
    let mut maps = Vec::new();
    let mut tops = Vec::new();
    let pres = a.presentation();
    let words = x.word_matrices();
    for v in class_representatives(a) {
        let q = top.block(v);
        if q.rows() == 0 {
            continue;
        }
        let p = Module::projective(a, v);
        for j in q.independent_cols() {
            // P_v → X sending the word w to ρ(w) x_j
            let n = a.num_vertices();
            let mut cols: Vec<Vec<Vec<K::Elem>>> = vec![Vec::new(); n];
            for &w in pres.words_from(v) {
                let t = pres.words()[w].tgt;
                cols[t].push(words[w].col(j));
            }
            let blocks = (0..n).map(|u| Matrix::from_cols(x.field(), x.dims()[u], &cols[u])).collect();
            maps.push(Morphism::raw(p.clone(), x.clone(), blocks));
            parts.push(p.clone());
            tops.push(v);
        }
    }
    let (sum, _, projs) = Module::direct_sum(a, &parts);
    let mut map = Morphism::zero(&sum, x);
    for (pr, f) in projs.iter().zip(&maps) {
        map = map.add(&pr.then(f));
    }
    Cover { map, tops }
}

pub fn projective_cover<K: Field>(x: &Module<K>) -> Morphism<K> {
    cover(x).map
}

/// Kernel of the projective cover, with its inclusion.
pub fn syzygy_inclusion<K: Field>(x: &Module<K>) -> Morphism<K> {
    projective_cover(x).kernel()
}

pub fn syzygy<K: Field>(x: &Module<K>) -> Module<K> {
    syzygy_inclusion(x).src().clone()
}

pub fn is_projective<K: Field>(x: &Module<K>) -> bool {
    projective_cover(x).src().dim() == x.dim()
}

pub fn is_injective<K: Field>(x: &Module<K>) -> bool {
    is_projective(&x.dual())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case", tag = "kind")]
pub enum ResolutionStatus {
    /// `Ω^n X = 0`, `n` the projective dimension.
    Finite { length: usize },
    /// `Ω^i X ≅ Ω^j X` with `i < j`.
    Periodic { from: usize, to: usize },
    CapHit,
}

/// Minimal projective resolution `… → P_1 → P_0 → X`.
#[derive(Clone, Debug)]
pub struct Resolution<K: Field> {
    pub target: Module<K>,
    /// `P_i` with `d_i : P_i → P_{i-1}` (`d_0 : P_0 → X`).
    pub stages: Vec<(Module<K>, Morphism<K>)>,
    /// `Ω^i X` with its inclusion into `P_{i-1}` (identity for `i = 0`).
    pub syzygies: Vec<Morphism<K>>,
    pub tops: Vec<Vec<usize>>,
    pub minimal: bool,
    pub cap: usize,
    pub status: ResolutionStatus,
}

impl<K: Field> Resolution<K> {
    pub fn length(&self) -> usize {
        self.stages.len()
    }

    pub fn pd(&self) -> Dim {
        match self.status {
            ResolutionStatus::Finite { length } => Dim::Finite(length),
            ResolutionStatus::Periodic { .. } => Dim::Infinite,
            ResolutionStatus::CapHit => Dim::Unknown,
        }
    }

    /// `Ω^i X`, if computed.
    pub fn syzygy(&self, i: usize) -> Option<&Module<K>> {
        self.syzygies.get(i).map(|f| f.src())
    }

    /// Checks `d²=0`, exactness by rank and minimality.
    pub fn verify(&self) -> Result<()> {
        for i in 0..self.stages.len() {
            let d = &self.stages[i].1;
            d.check()?;
            let tgt_dim = d.tgt().dim();
            let prev_rank = if i == 0 { tgt_dim } else { self.stages[i - 1].1.rank() };
            let ker_prev = if i == 0 { 0 } else { self.stages[i - 1].0.dim() - prev_rank };
            if i == 0 && d.rank() != tgt_dim {
                return Err(Error::Uncertified("cover is not onto".into()));
            }
            if i > 0 {
                if !d.then(&self.stages[i - 1].1).is_zero() {
                    return Err(Error::Uncertified(format!("d² ≠ 0 at stage {i}")));
                }
                if d.rank() != ker_prev {
                    return Err(Error::Uncertified(format!("not exact at stage {}", i - 1)));
                }
                let rad = d.tgt().radical_submodule();
                if d.factor_through_mono(&rad).is_none() {
                    return Err(Error::Uncertified(format!("stage {i} is not minimal")));
                }
            }
        }
        if let ResolutionStatus::Finite { length } = self.status {
            let last_ok = self.stages.get(length).map_or(self.target.is_zero(), |(_, d)| d.is_mono());
            if !last_ok {
                return Err(Error::Uncertified("final differential is not injective".into()));
            }
        }
        Ok(())
    }
}

pub fn min_resolution<K: Field>(x: &Module<K>, cap: usize, cfg: &Config) -> Result<Resolution<K>> {
    let mut stages: Vec<(Module<K>, Morphism<K>)> = Vec::new();
    let mut syz = vec![Morphism::identity(x)];
    let mut tops = Vec::new();
    let mut status = ResolutionStatus::CapHit;
    if x.is_zero() {
        status = ResolutionStatus::Finite { length: 0 };
    }
    while !x.is_zero() {
        let i = stages.len();
        let omega = syz[i].src().clone();
        if i > 0 {
            let mut hit = None;
            for (j, s) in syz.iter().enumerate().take(i) {
                if s.src().dims() == omega.dims() && is_isomorphic(s.src(), &omega, cfg)? {
                    hit = Some(j);
                    break;
                }
            }
            if let Some(j) = hit {
                status = ResolutionStatus::Periodic { from: j, to: i };
                break;
            }
        }
        if i >= cap {
            break;
        }
        let c = cover(&omega);
        let p = c.map.src().clone();
        let d = c.map.then(&syz[i]);
        let k = c.map.kernel();
        let done = k.src().is_zero();
        stages.push((p, d));
        tops.push(c.tops);
        syz.push(k);
        if done {
            status = ResolutionStatus::Finite { length: i };
            break;
        }
    }
    Ok(Resolution { target: x.clone(), stages, syzygies: syz, tops, minimal: true, cap, status })
}

/// Graph of syzygies of non-projective indecomposables reachable from a module.
#[derive(Clone, Debug)]
pub struct SyzygyLedger<K: Field> {
    pub base: Module<K>,
    /// Non-projective indecomposables, up to isomorphism.
    pub classes: Vec<Module<K>>,
    /// Multiplicities of the non-projective summands of `X`.
    pub base_vector: Vec<usize>,
    /// `omega[c]` lists `(class, multiplicity)` of `Ω(classes[c])`, once expanded.
    pub omega: Vec<Option<Vec<(usize, usize)>>>,
    pub closed: bool,
    /// `rank Ω^n G_X` for `n = 0, 1, …`.
    pub ranks: Vec<usize>,
    pub stabilization: Option<usize>,
}

impl<K: Field> SyzygyLedger<K> {
    /// Builds the closure under `Ω`, stopping after `cap` classes.
    pub fn build(x: &Module<K>, cap: usize, cfg: &Config) -> Result<Self> {
        let mut ledger = SyzygyLedger {
            base: x.clone(),
            classes: vec![],
            base_vector: vec![],
            omega: vec![],
            closed: false,
            ranks: vec![],
            stabilization: None,
        };
        let parts = ledger.nonprojective_parts(x, cfg)?;
        let mut vec = Vec::new();
        for (m, c) in parts {
            let idx = ledger.intern(&m, cfg)?;
            vec.push((idx, c));
        }
        let mut next = 0;
        while next < ledger.classes.len() {
            if ledger.classes.len() > cap {
                break;
            }
            let om = syzygy(&ledger.classes[next]);
            let mut row = Vec::new();
            for (m, c) in ledger.nonprojective_parts(&om, cfg)? {
                let idx = ledger.intern(&m, cfg)?;
                row.push((idx, c));
            }
            ledger.omega[next] = Some(row);
            next += 1;
        }
        ledger.closed = ledger.omega.iter().all(|o| o.is_some());
        ledger.base_vector = vec![0; ledger.classes.len()];
        for (i, c) in vec {
            ledger.base_vector[i] += c;
        }
        if ledger.closed {
            ledger.compute_ranks();
        }
        Ok(ledger)
    }

    fn nonprojective_parts(&self, x: &Module<K>, cfg: &Config) -> Result<Vec<(Module<K>, usize)>> {
        let d = decompose(x, cfg)?;
        if !d.certified {
            return Err(Error::Uncertified("decomposition not certified".into()));
        }
        Ok(d.parts.into_iter().filter(|(m, _)| !is_projective(m)).collect())
    }

    fn intern(&mut self, m: &Module<K>, cfg: &Config) -> Result<usize> {
        if let Some(i) = find_iso(m, &self.classes, cfg)? {
            return Ok(i);
        }
        self.classes.push(m.clone());
        self.omega.push(None);
        Ok(self.classes.len() - 1)
    }

    /// `Ω` as an integer matrix acting on row vectors.
    pub fn omega_matrix(&self) -> Option<Vec<Vec<i64>>> {
        let u = self.classes.len();
        let mut l = vec![vec![0i64; u]; u];
        for (c, row) in self.omega.iter().enumerate() {
            for &(d, m) in row.as_ref()? {
                l[c][d] += m as i64;
            }
        }
        Some(l)
    }

    fn compute_ranks(&mut self) {
        let u = self.classes.len();
        let q = Rationals;
        let l = Matrix::from_i64(&q, &self.omega_matrix().unwrap());
        let gens: Vec<Vec<i64>> = (0..u)
            .filter(|&c| self.base_vector[c] > 0)
            .map(|c| (0..u).map(|d| i64::from(d == c)).collect())
            .collect();
        let mut ranks = Vec::new();
        if gens.is_empty() || u == 0 {
            ranks.push(0);
        } else {
            let mut cur = Matrix::from_i64(&q, &gens);
            for _ in 0..=u {
                ranks.push(cur.rank());
                cur = cur.mul(&l);
            }
        }
        let last = *ranks.last().unwrap();
        let phi = ranks.iter().position(|&r| r == last).unwrap_or(0);
        self.ranks = ranks;
        self.stabilization = Some(phi);
    }

    /// Projective dimension of each class; cycles certify infinity.
    pub fn class_pds(&self) -> Vec<Dim> {
        let u = self.classes.len();
        let cyc: Vec<bool> = (0..u).map(|c| self.reachable(c).contains(&c)).collect();
        let mut memo: Vec<Option<Dim>> = vec![None; u];
        (0..u)
            .map(|c| {
                if cyc[c] || self.reachable(c).iter().any(|&d| cyc[d]) {
                    Dim::Infinite
                } else {
                    self.pd_dag(c, &mut memo)
                }
            })
            .collect()
    }

    fn reachable(&self, c: usize) -> Vec<usize> {
        let mut seen = vec![false; self.classes.len()];
        let mut stack = vec![c];
        let mut out = Vec::new();
        while let Some(v) = stack.pop() {
            if let Some(row) = &self.omega[v] {
                for &(d, _) in row {
                    if !seen[d] {
                        seen[d] = true;
                        out.push(d);
                        stack.push(d);
                    }
                }
            }
        }
        out
    }

    fn pd_dag(&self, c: usize, memo: &mut Vec<Option<Dim>>) -> Dim {
        if let Some(d) = memo[c] {
            return d;
        }
        let d = match &self.omega[c] {
            None => Dim::Unknown,
            Some(row) => {
                let mut best = Dim::Finite(1);
                for &(d, _) in row {
                    best = best.max(match self.pd_dag(d, memo) {
                        Dim::Finite(n) => Dim::Finite(n + 1),
                        o => o,
                    });
                }
                best
            }
        };
        memo[c] = Some(d);
        d
    }

    /// Multiplicity vector of the non-projective part of `Ω^n X`.
    pub fn omega_power_vector(&self, n: usize) -> Option<Vec<i64>> {
        let l = self.omega_matrix()?;
        let u = self.classes.len();
        let mut v: Vec<i64> = self.base_vector.iter().map(|&c| c as i64).collect();
        for _ in 0..n {
            let mut w = vec![0i64; u];
            for c in 0..u {
                if v[c] != 0 {
                    for d in 0..u {
                        w[d] += v[c] * l[c][d];
                    }
                }
            }
            v = w;
        }
        Some(v)
    }
}

/// `pd X`, from the minimal resolution, falling back to the syzygy ledger
/// when no whole-module repetition appears within the cap.
pub fn pd<K: Field>(x: &Module<K>, cfg: &Config) -> Result<Dim> {
    let r = min_resolution(x, cfg.cap_res, cfg)?;
    match r.pd() {
        Dim::Unknown => pd_by_ledger(x, cfg),
        d => Ok(d),
    }
}

/// `pd X` as the maximum over indecomposable summands, read off the syzygy graph.
pub fn pd_by_ledger<K: Field>(x: &Module<K>, cfg: &Config) -> Result<Dim> {
    if is_projective(x) {
        return Ok(Dim::Finite(0));
    }
    let l = SyzygyLedger::build(x, cfg.cap_res, cfg)?;
    let pds = l.class_pds();
    let mut best = Dim::Finite(0);
    for (c, &m) in l.base_vector.iter().enumerate() {
        if m > 0 {
            best = best.max(pds[c]);
        }
    }
    Ok(best)
}

/// `gl.dim A` as the maximum projective dimension of the simples.
pub fn gldim<K: Field>(a: &Alg<K>, cfg: &Config) -> Result<Dim> {
    let mut best = Dim::Finite(0);
    for s in simples(a) {
        best = best.max(pd(&s, cfg)?);
        if best == Dim::Infinite {
            break;
        }
    }
    Ok(best)
}

/// Projective dimension of each simple, in class order.
pub fn simple_pds<K: Field>(a: &Alg<K>, cfg: &Config) -> Result<Vec<Dim>> {
    simples(a).iter().map(|s| pd(s, cfg)).collect()
}

/// `dim Ext^i(X, Y)`; `None` if the resolution is cut off before stage `i`.
pub fn ext<K: Field>(x: &Module<K>, y: &Module<K>, i: usize, cfg: &Config) -> Result<Option<usize>> {
    x.check_same_algebra(y)?;
    if i == 0 {
        return Ok(Some(HomSpace::new(x, y)?.dim()));
    }
    let cap = i.min(cfg.cap_res);
    let r = min_resolution(x, cap, cfg)?;
    let omega = match r.syzygies.get(i) {
        Some(f) => f,
        None => {
            return match r.status {
                ResolutionStatus::Finite { .. } => Ok(Some(0)),
                ResolutionStatus::Periodic { from, to } => {
                    let j = from + (i - 1 - from) % (to - from) + 1;
                    ext_from(&r, j, y).map(Some)
                }
                ResolutionStatus::CapHit => Ok(None),
            }
        }
    };
    if omega.src().is_zero() {
        return Ok(Some(0));
    }
    ext_from(&r, i, y).map(Some)
}

fn ext_from<K: Field>(r: &Resolution<K>, i: usize, y: &Module<K>) -> Result<usize> {
    if i == 0 {
        return Ok(HomSpace::new(&r.target, y)?.dim());
    }
    let inc = &r.syzygies[i];
    let h = HomSpace::new(inc.src(), y)?;
    if h.dim() == 0 {
        return Ok(0);
    }
    let hp = HomSpace::new(inc.tgt(), y)?;
    let mut span = Span::new(y.field(), h.dim());
    for g in &hp.basis {
        span.insert(&h.coords(&inc.then(g)));
    }
    Ok(h.dim() - span.dim())
}

#[derive(Clone, Debug)]
pub struct PhiPsi<K: Field> {
    pub phi: Option<usize>,
    pub psi: Option<usize>,
    pub ledger: SyzygyLedger<K>,
}

/// Igusa–Todorov `φ(X)` and `ψ(X)`.
pub fn phi_psi<K: Field>(x: &Module<K>, cfg: &Config) -> Result<PhiPsi<K>> {
    let ledger = SyzygyLedger::build(x, cfg.cap_res, cfg)?;
    if !ledger.closed {
        return Ok(PhiPsi { phi: None, psi: None, ledger });
    }
    let phi = ledger.stabilization.unwrap_or(0);
    let pds = ledger.class_pds();
    let v = ledger.omega_power_vector(phi).unwrap();
    let mut sup = 0;
    for (c, &m) in v.iter().enumerate() {
        if m > 0 {
            match pds[c] {
                Dim::Finite(n) => sup = sup.max(n),
                Dim::Infinite => {}
                Dim::Unknown => return Ok(PhiPsi { phi: Some(phi), psi: None, ledger }),
            }
        }
    }
    Ok(PhiPsi { phi: Some(phi), psi: Some(phi + sup), ledger })
}

/// `ψ(M) + n + 1`, a bound on `pd X` for every `X` of finite projective
/// dimension admitting a length-`n` weak resolution by `add M`.
pub fn findim_bound<K: Field>(generator: &Module<K>, n: usize, cfg: &Config) -> Result<Option<usize>> {
    Ok(phi_psi(generator, cfg)?.psi.map(|p| p + n + 1))
}
