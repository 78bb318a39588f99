//! Heredity ideals and chains, neat sequences, quasi-hereditary search and
//! representation-dimension bounds.

use std::collections::HashSet;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::decomp::top_labels;
use crate::exactla::{Matrix, Span};
use crate::homology::{class_representatives, cover, gldim, is_projective, min_resolution, projectives, Dim, ResolutionStatus};
use crate::subcat::{
    classify_chain, is_cosemisimple_left_rejective, is_cosemisimple_right_rejective, iterated_radical_modules,
    radical_quotient, resdim_over, Chain, ChainReport, PartSummary, Side, Subcategory,
};
use crate::{Alg, Config, Error, Field, Module, Result};

/// `ΓeΓ` for `e` the sum of the listed primitive idempotents.
#[derive(Clone, Debug)]
pub struct IdempotentIdeal<K: Field> {
    pub set: Vec<usize>,
    /// Basis in algebra coordinates.
    pub basis: Vec<Vec<K::Elem>>,
    /// As a left module.
    pub module: Module<K>,
}

fn restricted_action<K: Field>(g: &Alg<K>, span: &Span<K>, left: bool) -> Vec<Matrix<K>> {
    let k = g.field();
    let n = span.dim();
    (0..g.dim())
        .map(|i| {
            let b = g.basis_vec(i);
            let cols: Vec<Vec<K::Elem>> = span
                .basis()
                .iter()
                .map(|x| {
                    let y = if left { g.mul(&b, x) } else { g.mul(x, &b) };
                    span.coords(&y).expect("ideal is closed")
                })
                .collect();
            Matrix::from_cols(k, n, &cols)
        })
        .collect()
}

fn ideal_module<K: Field>(g: &Alg<K>, span: &Span<K>, left: bool) -> Result<Module<K>> {
    let alg = if left { g.clone() } else { g.opposite() };
    if span.dim() == 0 {
        return Ok(Module::zero(&alg));
    }
    Module::from_action(&alg, &restricted_action(g, span, left))
}

fn check_vertex_set<K: Field>(g: &Alg<K>, set: &[usize]) -> Result<()> {
    let mut seen = HashSet::new();
    for &v in set {
        if v >= g.num_vertices() || !seen.insert(v) {
            return Err(Error::Input(format!("invalid idempotent index {v}")));
        }
    }
    Ok(())
}

pub fn idempotent_ideal<K: Field>(g: &Alg<K>, set: &[usize]) -> Result<IdempotentIdeal<K>> {
    check_vertex_set(g, set)?;
    let e = g.idempotent_sum(set);
    if g.mul(&e, &e) != e {
        return Err(Error::Input("not an idempotent".into()));
    }
    let span = Span::from_vectors(g.field(), g.dim(), g.ideal_generated(&e).iter());
    let module = ideal_module(g, &span, true)?;
    Ok(IdempotentIdeal { set: set.to_vec(), basis: span.basis().to_vec(), module })
}

/// Verdict of the heredity test for `I = ΓeΓ`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HeredityVerdict {
    pub set: Vec<usize>,
    pub ideal_dim: usize,
    pub idempotent: bool,
    pub radical_sandwich_zero: bool,
    pub projective: bool,
    /// Same test for `I` as a right module.
    pub projective_op: bool,
    /// Tops of the projective cover of `I`; an isomorphism when `projective`.
    pub cover_tops: Vec<usize>,
    pub heredity: bool,
}

pub fn heredity_ideal_test<K: Field>(g: &Alg<K>, set: &[usize]) -> Result<HeredityVerdict> {
    let ideal = idempotent_ideal(g, set)?;
    let k = g.field();
    let d = g.dim();
    let mut sq = Span::new(k, d);
    for x in &ideal.basis {
        for y in &ideal.basis {
            sq.insert(&g.mul(x, y));
        }
    }
    let idempotent = sq.dim() == ideal.basis.len();
    let mut radical_sandwich_zero = true;
    'outer: for x in &ideal.basis {
        for j in g.radical() {
            let xj = g.mul(x, j);
            for y in &ideal.basis {
                if g.mul(&xj, y).iter().any(|c| !k.is_zero(c)) {
                    radical_sandwich_zero = false;
                    break 'outer;
                }
            }
        }
    }
    let c = cover(&ideal.module);
    let projective = c.map.src().dim() == ideal.module.dim();
    let span = Span::from_vectors(k, d, ideal.basis.iter());
    let projective_op = is_projective(&ideal_module(g, &span, false)?);
    Ok(HeredityVerdict {
        set: set.to_vec(),
        ideal_dim: ideal.basis.len(),
        idempotent,
        radical_sandwich_zero,
        projective,
        projective_op,
        cover_tops: c.tops,
        heredity: idempotent && radical_sandwich_zero && projective,
    })
}

/// Descending vertex sets `e_0 = 1 ⊇ e_1 ⊇ … ⊇ e_m = 0`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdempotentChain {
    pub levels: Vec<Vec<usize>>,
}

impl IdempotentChain {
    pub fn new<K: Field>(g: &Alg<K>, mut levels: Vec<Vec<usize>>) -> Result<Self> {
        for l in &mut levels {
            check_vertex_set(g, l)?;
            l.sort_unstable();
        }
        let all: Vec<usize> = (0..g.num_vertices()).collect();
        if levels.first() != Some(&all) {
            return Err(Error::MalformedChain("chain must start at all vertices".into()));
        }
        if levels.last().map_or(true, |l| !l.is_empty()) {
            return Err(Error::MalformedChain("chain must end at the empty set".into()));
        }
        for w in levels.windows(2) {
            if w[1].len() >= w[0].len() || !w[1].iter().all(|v| w[0].contains(v)) {
                return Err(Error::MalformedChain("chain is not strictly descending".into()));
            }
        }
        for l in &levels {
            for &v in l {
                let c = g.classes()[v];
                if (0..g.num_vertices()).any(|u| g.classes()[u] == c && !l.contains(&u)) {
                    return Err(Error::MalformedChain("level splits an idempotent class".into()));
                }
            }
        }
        Ok(IdempotentChain { levels })
    }

    /// Parses `{2}⊂{1,2}⊂{1,2,3}` (vertex labels, smallest level first).
    pub fn parse<K: Field>(g: &Alg<K>, s: &str) -> Result<Self> {
        let mut levels = vec![Vec::new()];
        for part in s.split(['⊂', '<']).map(str::trim).filter(|p| !p.is_empty()) {
            let inner = part
                .strip_prefix('{')
                .and_then(|p| p.strip_suffix('}'))
                .ok_or_else(|| Error::Input(format!("bad level '{part}'")))?;
            let mut set = Vec::new();
            for lab in inner.split(',').map(str::trim).filter(|l| !l.is_empty()) {
                set.push(g.vertex_index(lab).ok_or_else(|| Error::Input(format!("unknown vertex '{lab}'")))?);
            }
            levels.push(set);
        }
        levels.reverse();
        IdempotentChain::new(g, levels)
    }

    pub fn display<K: Field>(&self, g: &Alg<K>) -> String {
        let labels = g.vertex_labels();
        self.levels
            .iter()
            .rev()
            .filter(|l| !l.is_empty())
            .map(|l| format!("{{{}}}", l.iter().map(|&v| labels[v].as_str()).collect::<Vec<_>>().join(",")))
            .collect::<Vec<_>>()
            .join("⊂")
    }

    pub fn length(&self) -> usize {
        self.levels.len() - 1
    }
}

fn quotient_gldim<K: Field>(g: &Alg<K>, set: &[usize], cfg: &Config) -> Result<Dim> {
    if set.len() == g.num_vertices() {
        return Ok(Dim::Finite(0));
    }
    if set.is_empty() {
        return gldim(g, cfg);
    }
    gldim(&g.quotient_by_idempotent(set, cfg)?.algebra, cfg)
}

/// Three-valued verdict.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Neat {
    Neat,
    NotNeat,
    Unknown,
}

impl Neat {
    pub fn all(vs: &[Neat]) -> Neat {
        if vs.contains(&Neat::NotNeat) {
            Neat::NotNeat
        } else if vs.contains(&Neat::Unknown) {
            Neat::Unknown
        } else {
            Neat::Neat
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HeredityStep {
    /// Step `n`: `I_{n-1}/I_n` inside `Γ/I_n`.
    pub n: usize,
    /// Vertices of `e_{n-1} − e_n` in the ambient numbering.
    pub added: Vec<usize>,
    pub verdict: HeredityVerdict,
    /// `gl.dim Γ/I_n` and `gl.dim Γ/I_{n-1}`.
    pub gldim_before: Dim,
    pub gldim_after: Dim,
    /// `0 ≤ difference ≤ 2`; `None` when not decidable.
    pub bound_holds: Option<bool>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HeredityReport {
    pub algebra_dim: usize,
    pub vertices: Vec<String>,
    pub chain: IdempotentChain,
    pub chain_display: String,
    pub steps: Vec<HeredityStep>,
    pub heredity: bool,
    pub neat_steps: Vec<Neat>,
    pub neat: Neat,
    pub gldim: Dim,
    /// `gl.dim Γ ≤ 2m − 2` for heredity chains.
    pub heredity_bound_holds: Option<bool>,
    /// `gl.dim Γ ≤ 2^m − 2` for neat sequences.
    pub neat_bound_holds: Option<bool>,
}

fn positions(of: &[usize], within: &[usize]) -> Vec<usize> {
    of.iter().filter_map(|v| within.iter().position(|w| w == v)).collect()
}

fn step_bound(before: Dim, after: Dim) -> Option<bool> {
    match (before, after) {
        (Dim::Finite(b), Dim::Finite(a)) => Some(b >= a && b - a <= 2),
        (Dim::Infinite, Dim::Finite(_)) => Some(false),
        _ => None,
    }
}

/// One heredity step in `Γ/I_n`.
fn heredity_step<K: Field>(g: &Alg<K>, lower: &[usize], upper: &[usize], cfg: &Config) -> Result<HeredityVerdict> {
    let added: Vec<usize> = upper.iter().copied().filter(|v| !lower.contains(v)).collect();
    let mut v = if lower.is_empty() {
        heredity_ideal_test(g, &added)?
    } else {
        let q = g.quotient_by_idempotent(lower, cfg)?;
        heredity_ideal_test(&q.algebra, &positions(&added, &q.vertices))?
    };
    v.set = added;
    Ok(v)
}

pub fn heredity_chain_verify<K: Field>(g: &Alg<K>, chain: &IdempotentChain, cfg: &Config) -> Result<HeredityReport> {
    let m = chain.length();
    let gldims: Vec<Dim> = chain.levels.iter().map(|l| quotient_gldim(g, l, cfg)).collect::<Result<_>>()?;
    let mut steps = Vec::new();
    for n in (1..=m).rev() {
        let (lower, upper) = (&chain.levels[n], &chain.levels[n - 1]);
        let verdict = heredity_step(g, lower, upper, cfg)?;
        let (before, after) = (gldims[n], gldims[n - 1]);
        steps.push(HeredityStep {
            n,
            added: verdict.set.clone(),
            bound_holds: if verdict.heredity { step_bound(before, after) } else { None },
            verdict,
            gldim_before: before,
            gldim_after: after,
        });
    }
    let heredity = steps.iter().all(|s| s.verdict.heredity);
    let neat_steps = neat_sequence(g, chain, cfg)?;
    let neat = Neat::all(&neat_steps);
    let gd = gldims[m];
    let bound = |b: usize| match gd {
        Dim::Finite(d) => Some(d <= b),
        Dim::Infinite => Some(false),
        Dim::Unknown => None,
    };
    Ok(HeredityReport {
        algebra_dim: g.dim(),
        vertices: g.vertex_labels().to_vec(),
        chain_display: chain.display(g),
        chain: chain.clone(),
        heredity_bound_holds: if heredity { bound((2 * m).saturating_sub(2)) } else { None },
        neat_bound_holds: if neat == Neat::Neat { bound((1usize << m.min(62)).saturating_sub(2)) } else { None },
        steps,
        heredity,
        neat_steps,
        neat,
        gldim: gd,
    })
}

/// Whether `f` is neat: `Ext^i((Γ/J)f, (Γ/J)f) = 0` for all `i > 0`.
pub fn neat_test<K: Field>(g: &Alg<K>, f: &[usize], cfg: &Config) -> Result<Neat> {
    check_vertex_set(g, f)?;
    if f.is_empty() {
        return Ok(Neat::Neat);
    }
    let classes: HashSet<usize> = f.iter().map(|&v| g.classes()[v]).collect();
    let reps: Vec<usize> = class_representatives(g).into_iter().filter(|v| classes.contains(&g.classes()[*v])).collect();
    let simples: Vec<Module<K>> = reps.iter().map(|&v| Module::simple(g, v)).collect();
    let (s, _, _) = Module::direct_sum(g, &simples);
    let r = min_resolution(&s, cfg.cap_res, cfg)?;
    let hits = |range: std::ops::Range<usize>| {
        r.tops[range].iter().flatten().any(|&v| classes.contains(&g.classes()[v]))
    };
    Ok(match r.status {
        ResolutionStatus::Finite { length } => {
            if hits(1..length + 1) {
                Neat::NotNeat
            } else {
                Neat::Neat
            }
        }
        ResolutionStatus::Periodic { from, to } => {
            if hits(from.min(1)..to) {
                Neat::NotNeat
            } else {
                Neat::Neat
            }
        }
        ResolutionStatus::CapHit => {
            if r.tops.len() > 1 && hits(1..r.tops.len()) {
                Neat::NotNeat
            } else {
                Neat::Unknown
            }
        }
    })
}

/// Neat verdict of `f_t = e_{t-1} − e_t` in `e_{t-1} Γ e_{t-1}`, for `t = 1..=m`.
pub fn neat_sequence<K: Field>(g: &Alg<K>, chain: &IdempotentChain, cfg: &Config) -> Result<Vec<Neat>> {
    let mut out = Vec::new();
    for t in 1..=chain.length() {
        let (upper, lower) = (&chain.levels[t - 1], &chain.levels[t]);
        let f: Vec<usize> = upper.iter().copied().filter(|v| !lower.contains(v)).collect();
        let v = if upper.len() == g.num_vertices() {
            neat_test(g, &f, cfg)?
        } else {
            let c = g.corner(upper, cfg)?;
            neat_test(&c.algebra, &positions(&f, &c.vertices), cfg)?
        };
        out.push(v);
    }
    Ok(out)
}

fn class_members<K: Field>(g: &Alg<K>) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new(); g.num_classes()];
    for v in 0..g.num_vertices() {
        out[g.classes()[v]].push(v);
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QhSearch {
    pub chain: Option<IdempotentChain>,
    /// Number of heredity tests run.
    pub tests: usize,
}

fn qh_dfs<K: Field>(
    g: &Alg<K>,
    members: &[Vec<usize>],
    used: u64,
    path: &mut Vec<usize>,
    dead: &mut HashSet<u64>,
    tests: &mut usize,
    cfg: &Config,
) -> Result<bool> {
    let n = members.len();
    if path.len() == n {
        return Ok(true);
    }
    if dead.contains(&used) {
        return Ok(false);
    }
    let lower: Vec<usize> = (0..n).filter(|c| used >> c & 1 == 1).flat_map(|c| members[c].clone()).collect();
    let quotient = if lower.is_empty() { None } else { Some(g.quotient_by_idempotent(&lower, cfg)?) };
    for c in 0..n {
        if used >> c & 1 == 1 {
            continue;
        }
        *tests += 1;
        let ok = match &quotient {
            None => heredity_ideal_test(g, &members[c])?.heredity,
            Some(q) => heredity_ideal_test(&q.algebra, &positions(&members[c], &q.vertices))?.heredity,
        };
        if !ok {
            continue;
        }
        path.push(c);
        if qh_dfs(g, members, used | 1 << c, path, dead, tests, cfg)? {
            return Ok(true);
        }
        path.pop();
    }
    dead.insert(used);
    Ok(false)
}

fn chain_from_path<K: Field>(g: &Alg<K>, members: &[Vec<usize>], path: &[usize]) -> Result<IdempotentChain> {
    let m = path.len();
    let levels = (0..=m).map(|n| path[..m - n].iter().flat_map(|&c| members[c].clone()).collect()).collect();
    IdempotentChain::new(g, levels)
}

/// First saturated heredity chain in canonical order, or certified exhaustion.
pub fn qh_search<K: Field>(g: &Alg<K>, cfg: &Config) -> Result<QhSearch> {
    let n = g.num_classes();
    if n > cfg.qh_bound || n > 63 {
        return Err(Error::SizeBound(format!("{n} idempotent classes exceed the bound {}", cfg.qh_bound)));
    }
    let members = class_members(g);
    let results: Vec<Result<(Option<Vec<usize>>, usize)>> = (0..n)
        .into_par_iter()
        .map(|c| {
            let mut tests = 1;
            if !heredity_ideal_test(g, &members[c])?.heredity {
                return Ok((None, tests));
            }
            let mut path = vec![c];
            let mut dead = HashSet::new();
            let found = qh_dfs(g, &members, 1 << c, &mut path, &mut dead, &mut tests, cfg)?;
            Ok((found.then_some(path), tests))
        })
        .collect();
    let mut tests = 0;
    let mut chain = None;
    for r in results {
        let (p, t) = r?;
        tests += t;
        if chain.is_none() {
            if let Some(p) = p {
                chain = Some(chain_from_path(g, &members, &p)?);
            }
        }
    }
    if n == 0 {
        chain = Some(IdempotentChain { levels: vec![vec![]] });
    }
    Ok(QhSearch { chain, tests })
}

/// `J_Γ(1−e) ∈ add Γe` (right) or `(1−e)J_Γ ∈ add eΓ` (left).
pub fn cosemisimple_by_idempotent<K: Field>(g: &Alg<K>, set: &[usize], side: Side) -> Result<bool> {
    check_vertex_set(g, set)?;
    let alg = match side {
        Side::Right => g.clone(),
        Side::Left => g.opposite(),
    };
    let classes: HashSet<usize> = set.iter().map(|&v| g.classes()[v]).collect();
    for v in class_representatives(&alg) {
        if classes.contains(&alg.classes()[v]) {
            continue;
        }
        let r = Module::projective(&alg, v).radical_submodule().src().clone();
        let c = cover(&r);
        if c.map.src().dim() != r.dim() || c.tops.iter().any(|t| !classes.contains(&alg.classes()[*t])) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `pr Γ` with the vertex of each part.
#[derive(Clone, Debug)]
pub struct ProjectiveCategory<K: Field> {
    pub category: Subcategory<K>,
    /// Class representative vertex of each local part.
    pub vertex_of_part: Vec<usize>,
}

impl<K: Field> ProjectiveCategory<K> {
    pub fn new(g: &Alg<K>, cfg: &Config) -> Result<Self> {
        let category = Subcategory::add(g, &projectives(g), cfg)?;
        let mut vertex_of_part = vec![usize::MAX; category.len()];
        for v in class_representatives(g) {
            let i = category
                .index_of(&Module::projective(g, v), cfg)?
                .ok_or_else(|| Error::Uncertified("projective not found in pr".into()))?;
            vertex_of_part[i] = v;
        }
        Ok(ProjectiveCategory { category, vertex_of_part })
    }

    /// `add Γe` for a vertex set.
    pub fn of_vertices(&self, g: &Alg<K>, set: &[usize]) -> Subcategory<K> {
        let classes: HashSet<usize> = set.iter().map(|&v| g.classes()[v]).collect();
        let keep: Vec<usize> =
            (0..self.category.len()).filter(|&i| classes.contains(&g.classes()[self.vertex_of_part[i]])).collect();
        self.category.restrict(&keep)
    }
}

/// The two cosemisimplicity criteria for one step `C_n ⊆ C_{n-1}` of a chain over `pr Γ`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CriterionCheck {
    pub n: usize,
    pub right_idempotent: bool,
    pub right_direct: bool,
    pub left_idempotent: bool,
    pub left_direct: bool,
}

impl CriterionCheck {
    pub fn agree(&self) -> bool {
        self.right_idempotent == self.right_direct && self.left_idempotent == self.left_direct
    }
}

/// Both criteria for `add Γe ⊆ pr Γ`.
pub fn criterion_check<K: Field>(g: &Alg<K>, pr: &ProjectiveCategory<K>, set: &[usize], cfg: &Config) -> Result<CriterionCheck> {
    let sub = pr.of_vertices(g, set);
    Ok(CriterionCheck {
        n: 0,
        right_idempotent: cosemisimple_by_idempotent(g, set, Side::Right)?,
        right_direct: is_cosemisimple_right_rejective(&sub, &pr.category, cfg)?.0,
        left_idempotent: cosemisimple_by_idempotent(g, set, Side::Left)?,
        left_direct: is_cosemisimple_left_rejective(&sub, &pr.category, cfg)?.0,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Dictionary {
    pub chain: IdempotentChain,
    pub chain_display: String,
    pub classification: ChainReport,
    pub heredity: HeredityReport,
    /// Complete total right or left rejective chains must be heredity chains.
    pub total_implies_heredity: Option<bool>,
    /// Complete total right or left rejective chains of length `m` force `gl.dim Γ ≤ m`.
    pub total_gldim_bound: Option<bool>,
    pub criteria: Vec<CriterionCheck>,
}

impl Dictionary {
    pub fn criteria_agree(&self) -> bool {
        self.criteria.iter().all(CriterionCheck::agree)
    }
}

/// Vertex sets of the levels of a chain inside `pr Γ`.
pub fn chain_to_idempotents<K: Field>(g: &Alg<K>, chain: &Chain<K>, cfg: &Config) -> Result<IdempotentChain> {
    let top = chain.top().master();
    let mut vertex = vec![None; top.len()];
    for v in class_representatives(g) {
        if let Some(i) = top.index_of(&Module::projective(g, v), cfg)? {
            vertex[i] = Some(v);
        }
    }
    let members = class_members(g);
    let mut levels = Vec::new();
    for l in &chain.levels {
        let mut set = Vec::new();
        for &i in l.master_indices() {
            let v = vertex[i].ok_or_else(|| Error::Input("subcategory not generated by projectives".into()))?;
            set.extend(members[g.classes()[v]].iter().copied());
        }
        levels.push(set);
    }
    if levels.last().map_or(false, |l| !l.is_empty()) {
        levels.push(vec![]);
    }
    IdempotentChain::new(g, levels)
}

/// Chain of subcategories of `pr Γ` for an idempotent chain.
pub fn idempotents_to_chain<K: Field>(g: &Alg<K>, chain: &IdempotentChain, cfg: &Config) -> Result<Chain<K>> {
    let pr = ProjectiveCategory::new(g, cfg)?;
    Chain::new(chain.levels.iter().map(|l| pr.of_vertices(g, l)).collect())
}

pub fn chain_dictionary<K: Field>(g: &Alg<K>, chain: &Chain<K>, cfg: &Config) -> Result<Dictionary> {
    let ic = chain_to_idempotents(g, chain, cfg)?;
    let classification = classify_chain(chain, cfg)?;
    let heredity = heredity_chain_verify(g, &ic, cfg)?;
    let total = classification.complete && (classification.total_right || classification.total_left);
    let m = ic.length();
    let total_gldim_bound = total.then(|| matches!(heredity.gldim, Dim::Finite(d) if d <= m));
    let mut criteria = Vec::new();
    for n in 1..=m {
        let upper = &ic.levels[n - 1];
        let lower = &ic.levels[n];
        let mut c = if upper.len() == g.num_vertices() {
            criterion_check(g, &ProjectiveCategory::new(g, cfg)?, lower, cfg)?
        } else {
            let corner = g.corner(upper, cfg)?;
            let pr = ProjectiveCategory::new(&corner.algebra, cfg)?;
            criterion_check(&corner.algebra, &pr, &positions(lower, &corner.vertices), cfg)?
        };
        c.n = n;
        criteria.push(c);
    }
    Ok(Dictionary {
        chain_display: ic.display(g),
        chain: ic,
        total_implies_heredity: total.then_some(heredity.heredity),
        total_gldim_bound,
        classification,
        heredity,
        criteria,
    })
}

fn is_uniserial<K: Field>(x: &Module<K>) -> bool {
    let a = x.algebra();
    x.radical_layers().iter().all(|layer| match layer.iter().position(|&d| d > 0) {
        Some(v) => layer == Module::simple(a, v).dims(),
        None => false,
    })
}

/// All indecomposables `P_v / J^t P_v` of a Nakayama algebra.
pub fn nakayama_enumerate<K: Field>(a: &Alg<K>, cfg: &Config) -> Result<Subcategory<K>> {
    for v in class_representatives(a) {
        if !is_uniserial(&Module::projective(a, v)) {
            return Err(Error::NotNakayama(format!("projective at {} is not uniserial", a.vertex_labels()[v])));
        }
        if !is_uniserial(&Module::projective(&a.opposite(), v)) {
            return Err(Error::NotNakayama(format!("injective at {} is not uniserial", a.vertex_labels()[v])));
        }
    }
    let mut mods = Vec::new();
    for v in class_representatives(a) {
        let p = Module::projective(a, v);
        for t in 1..=p.loewy_length() {
            mods.push(radical_quotient(&p, t));
        }
    }
    Subcategory::add(a, &mods, cfg)
}

/// `gl.dim End(M)`.
pub fn g_of<K: Field>(m: &Module<K>, cfg: &Config) -> Result<Dim> {
    if m.is_zero() {
        return Ok(Dim::Finite(0));
    }
    let (e, _) = m.endomorphism_algebra(cfg)?;
    gldim(&e, cfg)
}

/// Basic `End` of the additive generator of `c`, with the part index of each vertex.
#[derive(Clone, Debug)]
pub struct EndAlgebra<K: Field> {
    pub algebra: Alg<K>,
    pub part_of_vertex: Vec<usize>,
}

pub fn end_algebra<K: Field>(c: &Subcategory<K>, cfg: &Config) -> Result<EndAlgebra<K>> {
    let (alg, space) = c.generator().endomorphism_algebra(cfg)?;
    let mut part_of_vertex = Vec::new();
    for e in alg.idempotents() {
        let f = space.element(e);
        let img = f.image().src().clone();
        let i = c.index_of(&img, cfg)?.ok_or_else(|| Error::Uncertified("idempotent image is not a part".into()))?;
        part_of_vertex.push(i);
    }
    Ok(EndAlgebra { algebra: alg, part_of_vertex })
}

/// `End(N)/[add M]` for `M` given by local part indices of `n`.
pub fn end_quotient<K: Field>(n: &Subcategory<K>, m: &[usize], cfg: &Config) -> Result<Option<Alg<K>>> {
    let e = end_algebra(n, cfg)?;
    let set: Vec<usize> = (0..e.algebra.num_vertices()).filter(|&v| m.contains(&e.part_of_vertex[v])).collect();
    if set.len() == e.algebra.num_vertices() {
        return Ok(None);
    }
    Ok(Some(e.algebra.quotient_by_idempotent(&set, cfg)?.algebra))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum RStrategy {
    IteratedRadical,
    IteratedCoradical,
    RadicalSeries,
    FullGenerator,
}

impl RStrategy {
    pub const ALL: [RStrategy; 4] =
        [RStrategy::IteratedRadical, RStrategy::IteratedCoradical, RStrategy::RadicalSeries, RStrategy::FullGenerator];
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RUpper {
    pub strategy: RStrategy,
    pub bound: Dim,
    /// Indecomposable summands of `M ⊕ N`.
    pub witness: Vec<PartSummary>,
}

fn summary<K: Field>(m: &Module<K>) -> PartSummary {
    PartSummary { dim: m.dim(), dims: m.dims().to_vec(), top: top_labels(m) }
}

/// `g(M ⊕ N)` for the `N` produced by a strategy; an upper bound for `r(M)`.
pub fn r_upper<K: Field>(m: &Module<K>, strategy: RStrategy, cfg: &Config) -> Result<RUpper> {
    let a = m.algebra();
    let extra: Vec<Module<K>> = match strategy {
        RStrategy::IteratedRadical => iterated_radical_modules(m, Side::Right, cfg)?,
        RStrategy::IteratedCoradical => iterated_radical_modules(m, Side::Left, cfg)?,
        RStrategy::RadicalSeries => {
            let lam = Module::regular(a);
            (1..=lam.loewy_length()).map(|i| radical_quotient(&lam, i)).collect()
        }
        RStrategy::FullGenerator => nakayama_enumerate(a, cfg)?.part_list(),
    };
    let mut all = vec![m.clone()];
    all.extend(extra.into_iter().filter(|x| !x.is_zero()));
    let c = Subcategory::add(a, &all, cfg)?;
    Ok(RUpper { strategy, bound: g_of(&c.generator(), cfg)?, witness: c.parts().map(summary).collect() })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RepDimReport {
    pub nakayama: bool,
    pub semisimple: bool,
    /// Exact value, only for Nakayama algebras with a passing cross-check.
    pub exact: Option<usize>,
    pub upper: Dim,
    pub best: Option<RStrategy>,
    pub candidates: Vec<RUpper>,
    /// `g` of the full generator and `resdim` of all indecomposables over it.
    pub full_generator_g: Option<Dim>,
    pub full_resdim: Option<Dim>,
}

pub fn repdim_report<K: Field>(a: &Alg<K>, cfg: &Config) -> Result<RepDimReport> {
    let (m, _, _) = Module::direct_sum(a, &[Module::regular(a), Module::dual_regular(a)]);
    let full = nakayama_enumerate(a, cfg).ok();
    let mut candidates = Vec::new();
    for s in RStrategy::ALL {
        if s == RStrategy::FullGenerator && full.is_none() {
            continue;
        }
        candidates.push(r_upper(&m, s, cfg)?);
    }
    let mut upper = Dim::Unknown;
    let mut best = None;
    for c in &candidates {
        let better = match (c.bound, upper) {
            (Dim::Finite(x), Dim::Finite(y)) => x < y,
            (Dim::Finite(_), _) => true,
            (Dim::Infinite, Dim::Unknown) => true,
            _ => false,
        };
        if better {
            upper = c.bound;
            best = Some(c.strategy);
        }
    }
    let semisimple = a.is_semisimple();
    let (mut full_g, mut full_resdim, mut exact) = (None, None, None);
    if let Some(f) = &full {
        let g = g_of(&f.generator(), cfg)?;
        let r = resdim_over(f, &f.part_list(), cfg)?;
        full_g = Some(g);
        full_resdim = Some(r);
        let consistent = matches!(g, Dim::Finite(d) if d <= 2) && r == Dim::Finite(0);
        if consistent {
            exact = Some(if semisimple { 0 } else { 2 });
        }
    }
    Ok(RepDimReport {
        nakayama: full.is_some(),
        semisimple,
        exact,
        upper,
        best,
        candidates,
        full_generator_g: full_g,
        full_resdim,
    })
}

/// Idempotent chain of `End(G)` for a chain whose top is `add G`.
pub fn transport_chain<K: Field>(chain: &Chain<K>, cfg: &Config) -> Result<(EndAlgebra<K>, IdempotentChain)> {
    let top = chain.top();
    let e = end_algebra(top, cfg)?;
    let mut levels = Vec::new();
    for l in &chain.levels {
        let local: Vec<usize> = l
            .master_indices()
            .iter()
            .map(|i| top.master_indices().iter().position(|j| j == i).expect("descending chain"))
            .collect();
        levels.push((0..e.algebra.num_vertices()).filter(|&v| local.contains(&e.part_of_vertex[v])).collect());
    }
    if levels.last().map_or(false, |l: &Vec<usize>| !l.is_empty()) {
        levels.push(vec![]);
    }
    let ic = IdempotentChain::new(&e.algebra, levels)?;
    Ok((e, ic))
}
