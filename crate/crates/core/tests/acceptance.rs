//! End-to-end acceptance suite: one pass/fail line per criterion.

mod common;

use std::sync::Mutex;

use common::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rejectia::algebra::Algebra;
use rejectia::decomp::{is_indecomposable, is_isomorphic};
use rejectia::exactla::Span;
use rejectia::homology::{ext, findim_bound, gldim, pd, phi_psi, projectives, simples, syzygy, Dim};
use rejectia::module::hom_dim;
use rejectia::strat::*;
use rejectia::subcat::*;
use rejectia::{catalog, Alg, Field, Matrix, Module, Morphism, PrimeField, QuiverSpec};

type Outcome = Result<String, String>;

fn k() -> PrimeField {
    PrimeField::default()
}

fn lib<T>(r: rejectia::Result<T>) -> Result<T, String> {
    r.map_err(|e| e.to_string())
}

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn alg(q: &QuiverSpec) -> Alg<Fp> {
    Algebra::from_quiver(q, &k(), &cfg()).unwrap()
}

fn rrc() -> Alg<Fp> {
    alg(&catalog::rrc_example_quiver())
}

fn qh() -> Alg<Fp> {
    alg(&catalog::qh_example_quiver())
}

fn trunc(n: usize) -> Alg<Fp> {
    catalog::truncated_poly(&k(), n, &cfg()).unwrap()
}

fn sum(a: &Alg<Fp>, parts: &[Module<Fp>]) -> Module<Fp> {
    Module::direct_sum(a, parts).0
}

fn lambda_dlambda(a: &Alg<Fp>) -> Module<Fp> {
    sum(a, &[Module::regular(a), Module::dual_regular(a)])
}

fn le(d: Dim, b: usize) -> bool {
    matches!(d, Dim::Finite(x) if x <= b)
}

/// Heredity steps verified anywhere in the suite, for the gl.dim bound criterion.
#[derive(Default)]
struct Log {
    steps: Mutex<Vec<(String, HeredityStep)>>,
}

impl Log {
    fn record(&self, name: &str, r: &HeredityReport) {
        let mut s = self.steps.lock().unwrap();
        for st in &r.steps {
            if st.verdict.heredity {
                s.push((name.to_string(), st.clone()));
            }
        }
    }
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for i in 0..=p.len() {
            let mut q = p.clone();
            q.insert(i, n - 1);
            out.push(q);
        }
    }
    out
}

fn ac1(log: &Log) -> Outcome {
    let c = cfg();
    let g = rrc();
    let pr = lib(Subcategory::add(&g, &projectives(&g), &c))?;
    let (chain, certs) = lib(cancellation_chain(&pr, Side::Right, &c))?;
    let d = lib(chain_dictionary(&g, &chain, &c))?;
    ensure!(d.chain_display == "{3}⊂{2,3}⊂{1,2,3}", "cancel-right gave {}", d.chain_display);
    ensure!(d.classification.complete, "chain incomplete");
    let mut left_fails = 0;
    for w in chain.levels.windows(2) {
        let (right, _) = lib(is_cosemisimple_right_rejective(&w[1], &w[0], &c))?;
        ensure!(right, "a step is not cosemisimple right rejective");
        let (left, _) = lib(is_cosemisimple_left_rejective(&w[1], &w[0], &c))?;
        left_fails += usize::from(!left);
    }
    ensure!(left_fails > 0, "every step is also left rejective");
    let n = g.num_vertices();
    let mut checked = 0;
    for p in permutations(n) {
        let levels = (0..=n).map(|i| p[..n - i].to_vec()).collect();
        let ic = lib(IdempotentChain::new(&g, levels))?;
        let r = lib(heredity_chain_verify(&g, &ic, &c))?;
        log.record("rrc saturated", &r);
        ensure!(!r.heredity, "{} is a heredity chain", ic.display(&g));
        checked += 1;
    }
    ensure!(lib(qh_search(&g, &c))?.chain.is_none(), "qh_search found a chain");
    ensure!(!d.heredity.heredity, "translated chain is heredity");
    Ok(format!(
        "chain {} certified {:?}; left check fails at {left_fails} step(s); {checked} saturated chains rejected",
        d.chain_display, certs
    ))
}

fn ac2(log: &Log) -> Outcome {
    let c = cfg();
    let g = qh();
    let ic = lib(IdempotentChain::parse(&g, "{2}⊂{1,2}⊂{1,2,3}"))?;
    let r = lib(heredity_chain_verify(&g, &ic, &c))?;
    log.record("qh example", &r);
    ensure!(r.heredity, "heredity verification failed");
    let pr = lib(ProjectiveCategory::new(&g, &c))?;
    let all: Vec<usize> = (0..g.num_vertices()).collect();
    for v in 0..g.num_vertices() {
        let set: Vec<usize> = all.iter().copied().filter(|&w| w != v).collect();
        let cc = lib(criterion_check(&g, &pr, &set, &c))?;
        ensure!(cc.agree(), "criteria disagree removing vertex {}: {cc:?}", v + 1);
        ensure!(
            !cc.right_direct && !cc.left_direct,
            "removing vertex {} is cosemisimple rejective: {cc:?}",
            v + 1
        );
    }
    Ok(format!("{} heredity, gldim {}; no one-step removal on either side; criteria agree", r.chain_display, r.gldim))
}

fn ac3(log: &Log) -> Outcome {
    let c = cfg();
    let mut gs = Vec::new();
    for n in 2..=6 {
        let t = trunc(n);
        let (chain, _) = lib(radical_series_chain(&t, &c))?;
        let r = lib(classify_chain(&chain, &c))?;
        ensure!(r.complete && r.lambda_total_left, "n={n}: not complete Λ-total left rejective");
        let g = lib(g_of(&chain.generator(), &c))?;
        ensure!(le(g, n) && g == Dim::Finite(2), "n={n}: g = {g}");
        gs.push(g);
        if n == 3 {
            let (e, ic) = lib(transport_chain(&chain, &c))?;
            ensure!(e.algebra.dim() == 14, "End has dimension {}", e.algebra.dim());
            ensure!(lib(gldim(&e.algebra, &c))? == Dim::Finite(2), "gldim of the 14-dim End is not 2");
            let h = lib(heredity_chain_verify(&e.algebra, &ic, &c))?;
            log.record("radical series n=3", &h);
            ensure!(h.heredity, "transported chain is not heredity");
        }
    }
    Ok(format!("n=2..6 complete Λ-total left rejective; g = {gs:?}; 14-dim End has gldim 2"))
}

fn ac4(_: &Log) -> Outcome {
    let c = cfg();
    let mut algs: Vec<(String, Alg<Fp>)> = (2..=6).map(|n| (format!("x^{n}"), trunc(n))).collect();
    algs.push(("rrc".into(), rrc()));
    algs.push(("qh".into(), qh()));
    let mut rows = Vec::new();
    for (name, a) in &algs {
        let lam = Module::regular(a);
        let (chain, _) = lib(iterated_radical_chain(&lam, Side::Right, &c))?;
        let r = lib(classify_chain(&chain, &c))?;
        ensure!(r.complete && r.lambda_total_right, "{name}: not complete Λ-total right rejective");
        let g = lib(g_of(&chain.generator(), &c))?;
        // composition length of Λ over End(Λ): simples are one-dimensional
        let length = lam.dim();
        ensure!(le(g, chain.length()), "{name}: gldim {g} exceeds chain length {}", chain.length());
        ensure!(le(g, length), "{name}: gldim {g} exceeds length {length}");
        rows.push(format!("{name}: gldim {g} ≤ {}", chain.length()));
    }
    Ok(rows.join(", "))
}

fn nakayama_family() -> Vec<(String, Alg<Fp>)> {
    let specs: [(&[usize], bool); 10] = [
        (&[2, 1], false),
        (&[3, 2, 1], false),
        (&[2, 2, 1], false),
        (&[3, 2, 2, 1], false),
        (&[2, 3, 2, 1], false),
        (&[4, 3, 2, 1], false),
        (&[2], true),
        (&[2, 2], true),
        (&[3, 2], true),
        (&[3, 3, 3], true),
    ];
    specs
        .iter()
        .map(|(kup, cyc)| {
            (format!("{}{kup:?}", if *cyc { "cyclic" } else { "linear" }), alg(&catalog::nakayama_quiver(kup, *cyc)))
        })
        .collect()
}

fn ac5(_: &Log) -> Outcome {
    let c = cfg();
    let (mut sandwiches, mut infinite) = (0, 0);
    for (name, a) in nakayama_family() {
        let full = lib(nakayama_enumerate(&a, &c))?;
        let ind = full.part_list();
        ensure!(ind.len() == nakayama_indecomposables(&a).len(), "{name}: enumeration size");
        let r = lib(resdim_over(&full, &ind, &c))?;
        let g = lib(g_of(&full.generator(), &c))?;
        ensure!(r == Dim::Finite(0) && le(g, 2), "{name}: resdim {r}, g {g}");
        let base = lib(Subcategory::add(&a, &[lambda_dlambda(&a)], &c))?;
        let outside: Vec<usize> =
            (0..ind.len()).filter(|&i| !base.contains(&ind[i], &c).unwrap_or(true)).collect();
        // smallest and largest proper subgenerators containing Λ⊕DΛ
        let mut choices = vec![vec![]];
        if outside.len() > 1 {
            choices.push(outside[1..].to_vec());
            choices.push(outside[..1].to_vec());
        }
        for extra in choices {
            let mut gens = vec![lambda_dlambda(&a)];
            gens.extend(extra.iter().map(|&i| ind[i].clone()));
            let sub = lib(Subcategory::add(&a, &gens, &c))?;
            if sub.len() == ind.len() {
                continue;
            }
            let g = lib(g_of(&sub.generator(), &c))?;
            let r = lib(resdim_over(&sub, &ind, &c))?;
            match (g, r) {
                (Dim::Finite(gv), Dim::Finite(rv)) => {
                    ensure!(gv.saturating_sub(2) == rv, "{name}: max(g-2,0) = {} ≠ resdim {rv}", gv.saturating_sub(2));
                    sandwiches += 1;
                }
                (Dim::Infinite, Dim::Finite(rv)) => return Err(format!("{name}: g infinite but resdim {rv}")),
                (Dim::Infinite, _) => infinite += 1,
                _ => return Err(format!("{name}: undecided g {g} with resdim {r}")),
            }
        }
    }
    Ok(format!("10 Nakayama algebras: resdim 0, g ≤ 2; sandwich equality on {sandwiches} proper subgenerators, {infinite} with g and resdim both infinite"))
}

fn ac6(log: &Log) -> Outcome {
    let steps = log.steps.lock().unwrap();
    let mut decided = 0;
    for (name, s) in steps.iter() {
        match s.bound_holds {
            Some(true) => decided += 1,
            Some(false) => {
                return Err(format!("{name} step {}: gldim {} → {}", s.n, s.gldim_before, s.gldim_after));
            }
            None => {}
        }
    }
    ensure!(decided > 0, "no decided heredity steps");
    Ok(format!("{} heredity steps, {decided} decided, 0 violations", steps.len()))
}

fn ac7(log: &Log) -> Outcome {
    let c = cfg();
    let mut sources: Vec<(String, Alg<Fp>)> = (2..=4).map(|n| (format!("x^{n}"), trunc(n))).collect();
    for (name, a) in nakayama_family().into_iter().take(3) {
        sources.push((name, a));
    }
    sources.push(("qh example".into(), qh()));
    let mut instances = 0;
    for (name, a) in &sources {
        let gens: Vec<Module<Fp>> = match nakayama_enumerate(a, &c) {
            Ok(full) => full.part_list(),
            Err(_) => vec![Module::regular(a)],
        };
        let cat = lib(Subcategory::add(a, &gens, &c))?;
        let e = lib(end_algebra(&cat, &c))?.algebra;
        if !le(lib(gldim(&e, &c))?, 2) {
            continue;
        }
        let pr = lib(Subcategory::add(&e, &projectives(&e), &c))?;
        let (chain, _) = lib(cancellation_chain(&pr, Side::Right, &c))?;
        let d = lib(chain_dictionary(&e, &chain, &c))?;
        log.record(&format!("End over {name}"), &d.heredity);
        ensure!(d.classification.complete, "End over {name}: right cancellation stopped");
        ensure!(d.classification.total_right, "End over {name}: not total right rejective");
        ensure!(d.heredity.heredity, "End over {name}: translated chain is not heredity");
        instances += 1;
    }
    ensure!(instances >= 5, "only {instances} End algebras with gldim ≤ 2");
    Ok(format!("{instances} End algebras with gldim ≤ 2: complete, total right, heredity"))
}

/// A random short exact sequence `0 → X → Y → Z → 0` from a submodule of a random module.
fn random_ses(a: &Alg<Fp>, rng: &mut ChaCha8Rng) -> (Module<Fp>, Module<Fp>, Module<Fp>) {
    let y = random_small_module(a, 8, rng);
    let kk = a.field();
    let v: Vec<u32> = (0..y.dim()).map(|_| kk.random(rng)).collect();
    let inc = y.submodule_of_vectors(&[v]);
    let z = y.quotient(&inc).tgt().clone();
    (inc.src().clone(), y, z)
}

fn ac8(_: &Log) -> Outcome {
    let c = cfg();
    let mut rng = ChaCha8Rng::seed_from_u64(48);
    let mut counts = [0usize; 3];
    let mut bounds = Vec::new();
    for (name, a) in [("x^3", trunc(3)), ("rrc", rrc()), ("qh", qh())] {
        let mut finite_pds = Vec::new();
        for _ in 0..200 {
            let x = random_small_module(&a, 6, &mut rng);
            let y = random_small_module(&a, 6, &mut rng);
            let px = lib(phi_psi(&x, &c))?.psi;
            let d = lib(pd(&x, &c))?;
            if let (Dim::Finite(p), Some(s)) = (d, px) {
                ensure!(s == p, "{name}: ψ = {s} but pd = {p}");
                finite_pds.push(p);
                counts[0] += 1;
            }
            let pxy = lib(phi_psi(&sum(&a, &[x.clone(), y.clone()]), &c))?.psi;
            if let (Some(s), Some(t)) = (px, pxy) {
                ensure!(s <= t, "{name}: ψ(X) = {s} > ψ(X⊕Y) = {t}");
                counts[1] += 1;
            }
            let (l, m, r) = random_ses(&a, &mut rng);
            if let Dim::Finite(pz) = lib(pd(&r, &c))? {
                finite_pds.push(pz);
                if let Some(t) = lib(phi_psi(&sum(&a, &[l, m]), &c))?.psi {
                    ensure!(pz <= t + 1, "{name}: pd Z = {pz} > ψ(X⊕Y) + 1 = {}", t + 1);
                    counts[2] += 1;
                }
            }
        }
        let lam = lambda_dlambda(&a);
        let mut bound = None;
        for side in [Side::Right, Side::Left] {
            let mut all = vec![lam.clone()];
            all.extend(lib(iterated_radical_modules(&lam, side, &c))?.into_iter().filter(|m| !m.is_zero()));
            let gen = lib(Subcategory::add(&a, &all, &c))?.generator();
            if let Dim::Finite(g) = lib(g_of(&gen, &c))? {
                if g <= 3 {
                    bound = lib(findim_bound(&gen, g.saturating_sub(2), &c))?;
                    break;
                }
            }
        }
        let Some(b) = bound else {
            return Err(format!("{name}: no finite findim bound"));
        };
        let worst = finite_pds.iter().copied().max().unwrap_or(0);
        ensure!(worst <= b, "{name}: sampled pd {worst} exceeds findim bound {b}");
        bounds.push(format!("{name} ≤ {b}"));
    }
    Ok(format!(
        "checked (i) {} (ii) {} (iii) {} instances; findim bounds {}",
        counts[0],
        counts[1],
        counts[2],
        bounds.join(", ")
    ))
}

fn d4_indecomposables(a: &Alg<Fp>) -> Vec<Module<Fp>> {
    let kk = a.field();
    let mut out = Vec::new();
    let arrows = ["a", "b", "c"];
    // centre of dimension at most one: any subset of the sources
    for mask in 0u32..16 {
        let centre = (mask >> 3) as usize & 1;
        let src: Vec<usize> = (0..3).map(|i| (mask >> i) as usize & 1).collect();
        let total: usize = src.iter().sum::<usize>() + centre;
        if total == 0 || (centre == 0 && total > 1) {
            continue;
        }
        let maps = (0..3)
            .filter(|&i| src[i] == 1 && centre == 1)
            .map(|i| (arrows[i].to_string(), Matrix::from_rows(kk, 1, &[vec![1]])))
            .collect::<Vec<_>>();
        out.push(Module::from_representation(a, &[src[0], src[1], src[2], centre], &maps).unwrap());
    }
    // centre of dimension two with three distinct lines
    let lines = [vec![vec![1], vec![0]], vec![vec![0], vec![1]], vec![vec![1], vec![1]]];
    let maps = (0..3).map(|i| (arrows[i].to_string(), Matrix::from_rows(kk, 1, &lines[i]))).collect::<Vec<_>>();
    out.push(Module::from_representation(a, &[1, 1, 1, 2], &maps).unwrap());
    out
}

fn ac9(_: &Log) -> Outcome {
    let c = cfg();
    let a2 = catalog::linear_an(&k(), 2, &c).unwrap();
    let a3 = catalog::linear_an(&k(), 3, &c).unwrap();
    let d4 = alg(&catalog::d4_quiver());
    let d4_ind = d4_indecomposables(&d4);
    ensure!(d4_ind.len() == 12, "D4 list has {} modules", d4_ind.len());
    for (i, x) in d4_ind.iter().enumerate() {
        ensure!(lib(is_indecomposable(x, &c))?, "D4 module {i} decomposes");
        for y in &d4_ind[..i] {
            ensure!(!lib(is_isomorphic(x, y, &c))?, "D4 list has repeats");
        }
    }
    let cases = [("A2", nakayama_indecomposables(&a2), a2), ("A3", nakayama_indecomposables(&a3), a3), ("D4", d4_ind, d4)];
    let mut witnesses = Vec::new();
    let mut rows = Vec::new();
    for (name, ind, a) in &cases {
        let m = lambda_dlambda(a);
        let g = lib(g_of(&m, &c))?;
        ensure!(le(g, 3), "{name}: g(Λ⊕DΛ) = {g}");
        let cat = lib(Subcategory::add(a, &[m], &c))?;
        let mut worst = 0;
        for x in ind {
            let r = lib(c_resolution(&cat, x, c.cap_resdim, &c))?;
            let Dim::Finite(d) = r.resdim else {
                return Err(format!("{name}: undecided resdim"));
            };
            worst = worst.max(d);
            let stages: Vec<_> = r
                .approximations
                .iter()
                .map(|ap| serde_json::json!({ "summands": ap.summands, "object_dims": ap.object().dims() }))
                .collect();
            witnesses.push(serde_json::json!({ "algebra": name, "module": x.dims(), "resdim": d, "stages": stages }));
        }
        ensure!(worst <= 1, "{name}: resdim {worst}");
        if *name == "A2" {
            ensure!(worst == 0, "A2: resdim {worst}");
        }
        rows.push(format!("{name}: g {g}, resdim {worst}"));
    }
    let path = std::path::Path::new(env!("CARGO_TARGET_TMPDIR")).join("resdim_witnesses.json");
    std::fs::write(&path, serde_json::to_string_pretty(&witnesses).unwrap()).map_err(|e| e.to_string())?;
    Ok(format!("{}; {} witnesses in {}", rows.join(", "), witnesses.len(), path.display()))
}

fn span_dim(x: &Module<Fp>, maps: &[Morphism<Fp>]) -> usize {
    (0..x.dims().len())
        .map(|v| {
            let mut s = Span::new(x.field(), x.dims()[v]);
            for f in maps {
                for col in f.block(v).to_cols() {
                    s.insert(&col);
                }
            }
            s.dim()
        })
        .sum()
}

/// `pd` from top multiplicities and dimension counts of projective covers.
fn pd_oracle(x: &Module<Fp>, cap: usize) -> Option<usize> {
    let a = x.algebra();
    let mut cur = x.clone();
    for i in 0..cap {
        let cover: usize = simples(a)
            .iter()
            .zip(0..)
            .map(|(s, v)| hom_oracle(&cur, s) * Module::projective(a, v).dim())
            .sum();
        if cover == cur.dim() {
            return Some(i);
        }
        let next = syzygy(&cur);
        assert_eq!(next.dim(), cover - cur.dim());
        cur = next;
    }
    None
}

fn ideal_oracle(g: &Alg<Fp>, set: &[usize]) -> usize {
    let e = g.idempotent_sum(set);
    let mut s = Span::new(&k(), g.dim());
    for i in 0..g.dim() {
        let be = g.mul(&g.basis_vec(i), &e);
        for j in 0..g.dim() {
            s.insert(&g.mul(&be, &g.basis_vec(j)));
        }
    }
    s.dim()
}

fn ac10(_: &Log) -> Outcome {
    let c = cfg();
    let mut rng = ChaCha8Rng::seed_from_u64(10);
    let mut n = [0usize; 5];
    for a in [rrc(), qh(), trunc(3)] {
        let basic = simples(&a).len() == a.num_vertices();
        for _ in 0..12 {
            let x = random_small_module(&a, 6, &mut rng);
            let y = random_small_module(&a, 6, &mut rng);
            ensure!(lib(hom_dim(&x, &y))? == hom_oracle(&x, &y), "Hom dimension mismatch");
            ensure!(lib(ext(&x, &y, 1, &c))? == Some(ext1_oracle(&x, &y)), "Ext¹ mismatch");
            ensure!(lib(ext(&x, &y, 2, &c))? == Some(ext1_oracle(&syzygy(&x), &y)), "Ext² mismatch");
            n[0] += 1;
            n[1] += 2;
            if basic {
                let cap = 12;
                match (pd_oracle(&x, cap), lib(pd(&x, &c))?) {
                    (Some(p), d) => ensure!(d == Dim::Finite(p), "pd {d} but oracle {p}"),
                    (None, d) => ensure!(!matches!(d, Dim::Finite(p) if p < cap), "pd {d} but oracle exceeds {cap}"),
                }
                n[2] += 1;
            }
            let mut gens = vec![y.clone()];
            if rng.gen_bool(0.5) {
                gens.push(Module::regular(&a));
            }
            let cat = lib(Subcategory::add(&a, &gens, &c))?;
            let f = lib(f_c(&cat, &x, &c))?;
            let mut maps = Vec::new();
            for p in cat.parts() {
                maps.extend(jac_oracle(p, &x, &c));
            }
            ensure!(f.src().dim() == span_dim(&x, &maps), "F_C dimension mismatch");
            n[3] += 1;
        }
        for mask in 0usize..1 << a.num_vertices() {
            let set: Vec<usize> = (0..a.num_vertices()).filter(|i| mask >> i & 1 == 1).collect();
            ensure!(lib(idempotent_ideal(&a, &set))?.basis.len() == ideal_oracle(&a, &set), "ΓeΓ mismatch");
            n[4] += 1;
        }
    }
    Ok(format!("Hom {} Ext {} pd {} F_C {} ΓeΓ {} comparisons, all equal", n[0], n[1], n[2], n[3], n[4]))
}

fn ac11(_: &Log) -> Outcome {
    let c = cfg();
    let mut rows = Vec::new();
    for n in [3, 4] {
        let a = trunc(n);
        let full = lib(nakayama_enumerate(&a, &c))?;
        let ind = full.part_list();
        let lam = Module::regular(&a);
        let series: Vec<Module<Fp>> = (1..=n).map(|i| radical_quotient(&lam, i)).collect();
        // the radical series is already the full generator; dropping one non-projective
        // indecomposable gives non-vacuous instances
        let mut extra = vec![series];
        for drop in 1..n {
            extra.push((1..=n).filter(|&i| i != drop).map(|i| radical_quotient(&lam, i)).collect());
        }
        for (i, gens) in extra.iter().enumerate() {
            let m = lib(Subcategory::add(&a, gens, &c))?;
            let local: Vec<usize> =
                m.parts().map(|p| lib(full.index_of(p, &c)).map(|o| o.expect("part of N"))).collect::<Result<_, _>>()?;
            let r = lib(resdim_over(&m, &ind, &c))?;
            let label = if i == 0 { "radical series" } else { "supplementary" };
            let Some(q) = lib(end_quotient(&full, &local, &c))? else {
                rows.push(format!("n={n} {label}: quotient zero"));
                continue;
            };
            let gq = lib(gldim(&q, &c))?;
            match (gq, r) {
                (Dim::Finite(d), Dim::Finite(r)) => {
                    ensure!(d + 1 <= 3 * r, "n={n} {label}: gldim {d} > 3·{r} − 1");
                    rows.push(format!("n={n} {label}: {d} ≤ {}", (3 * r).saturating_sub(1)));
                }
                _ => rows.push(format!("n={n} {label}: gldim {gq}, resdim {r}")),
            }
        }
    }
    Ok(rows.join("; "))
}

#[test]
fn acceptance() {
    let log = Log::default();
    type Criterion = fn(&Log) -> Outcome;
    let criteria: [(usize, &str, Criterion); 10] = [
        (1, "right rejective chain, not quasi-hereditary", ac1),
        (2, "heredity chain without one-step removals", ac2),
        (3, "radical-series chains", ac3),
        (4, "iterated-radical chains", ac4),
        (5, "Auslander criterion on Nakayama algebras", ac5),
        (7, "gldim ≤ 2 gives total right rejective chains", ac7),
        (8, "Igusa-Todorov function", ac8),
        (9, "hereditary bound", ac9),
        (10, "oracle equivalence", ac10),
        (11, "factor-category bound", ac11),
    ];
    let mut results: Vec<(usize, &str, Outcome)> = std::thread::scope(|s| {
        let handles: Vec<_> = criteria
            .iter()
            .map(|&(i, name, f)| {
                let log = &log;
                (i, name, s.spawn(move || f(log)))
            })
            .collect();
        handles
            .into_iter()
            .map(|(i, name, h)| (i, name, h.join().unwrap_or_else(|_| Err("panicked".into()))))
            .collect()
    });
    results.push((6, "heredity gl.dim bound", ac6(&log)));
    results.sort_by_key(|r| r.0);
    let mut failed = Vec::new();
    for (i, name, out) in &results {
        match out {
            Ok(detail) => println!("PASS  {i:>2}  {name}: {detail}"),
            Err(why) => {
                println!("FAIL  {i:>2}  {name}: {why}");
                failed.push(*i);
            }
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
