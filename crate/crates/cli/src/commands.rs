use std::path::Path;

use serde_json::{json, Value};

use rejectia::decomp::top_labels;
use rejectia::homology::{gldim, pd, phi_psi, projectives, simple_pds, Dim};
use rejectia::io::{AlgebraJson, ModuleJson};
use rejectia::strat::{
    chain_to_idempotents, g_of, heredity_chain_verify, nakayama_enumerate, neat_sequence, neat_test, qh_search,
    repdim_report, IdempotentChain, Neat,
};
use rejectia::subcat::{
    c_resolution, cancellation_chain, classify_chain, iterated_radical_chain, radical_series_chain, PartSummary, Side,
    Subcategory,
};
use rejectia::{Alg, Config, Error, Field, FieldSpec, Module, PrimeField, Rationals, Result};

use crate::report::{sha256_hex, Report, CAP, INPUT, NEGATIVE, OK};
use crate::{Cli, Command, Method};

fn code_of(e: &Error) -> u8 {
    match e {
        Error::PathCap(_) | Error::Cap(_) | Error::SizeBound(_) => CAP,
        Error::NoEligibleObject => NEGATIVE,
        _ => INPUT,
    }
}

fn command_name(c: &Command) -> &'static str {
    match c {
        Command::AlgCheck { .. } => "alg-check",
        Command::Chain { .. } => "chain",
        Command::Qh { .. } => "qh",
        Command::Neat { .. } => "neat",
        Command::Gldim { .. } => "gldim",
        Command::Repdim { .. } => "repdim",
        Command::Psi { .. } => "psi",
        Command::Resdim { .. } => "resdim",
    }
}

fn algebra_file(c: &Command) -> &Path {
    match c {
        Command::AlgCheck { file }
        | Command::Chain { file, .. }
        | Command::Qh { file, .. }
        | Command::Neat { file, .. }
        | Command::Gldim { file, .. }
        | Command::Repdim { file }
        | Command::Psi { file, .. }
        | Command::Resdim { file, .. } => file,
    }
}

pub fn run(cli: &Cli) -> Report {
    let cfg = Config {
        seed: cli.seed,
        cap_res: cli.cap_res as usize,
        cap_resdim: cli.cap_resdim as usize,
        cap_paths: cli.cap_paths as usize,
        qh_bound: cli.qh_bound as usize,
    };
    let mut rep = Report::new(command_name(&cli.command), cfg.clone());
    if let Err(e) = execute(cli, &cfg, &mut rep) {
        rep.fail(code_of(&e), e.to_string());
    }
    rep
}

fn read(path: &Path, rep: &mut Report) -> Result<String> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::Input(format!("{}: {e}", path.display())))?;
    rep.inputs.push(sha256_hex(text.as_bytes()));
    Ok(text)
}

fn execute(cli: &Cli, cfg: &Config, rep: &mut Report) -> Result<()> {
    let path = algebra_file(&cli.command);
    let aj = AlgebraJson::parse(&read(path, rep)?).map_err(|e| Error::Input(format!("{}: {e}", path.display())))?;
    let spec = match cli.field {
        Some(c) => FieldSpec::from_char(c)?,
        None => aj.field_spec()?.unwrap_or(FieldSpec::Prime(101)),
    };
    rep.field = Some(spec.characteristic());
    match spec {
        FieldSpec::Prime(p) => exec(&PrimeField::new(p)?, cli, &aj, cfg, rep),
        FieldSpec::Rational => exec(&Rationals, cli, &aj, cfg, rep),
    }
}

fn load_module<K: Field>(path: &Path, a: &Alg<K>, rep: &mut Report) -> Result<Module<K>> {
    let mj = ModuleJson::parse(&read(path, rep)?).map_err(|e| Error::Input(format!("{}: {e}", path.display())))?;
    mj.build(a)
}

fn summary<K: Field>(m: &Module<K>) -> PartSummary {
    PartSummary { dim: m.dim(), dims: m.dims().to_vec(), top: top_labels(m) }
}

fn dim_code(d: Dim) -> u8 {
    if d == Dim::Unknown {
        CAP
    } else {
        OK
    }
}

fn vertex_set<K: Field>(a: &Alg<K>, s: &str) -> Result<Vec<usize>> {
    s.split(',')
        .map(str::trim)
        .filter(|l| !l.is_empty())
        .map(|l| a.vertex_index(l).ok_or_else(|| Error::Input(format!("unknown vertex '{l}'"))))
        .collect()
}

fn neat_verdict(n: Neat) -> (&'static str, u8) {
    match n {
        Neat::Neat => ("neat", OK),
        Neat::NotNeat => ("not neat", NEGATIVE),
        Neat::Unknown => ("unknown at cap", CAP),
    }
}

fn to_value<T: serde::Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("serializable")
}

fn exec<K: Field>(k: &K, cli: &Cli, aj: &AlgebraJson, cfg: &Config, rep: &mut Report) -> Result<()> {
    let a = aj.build(k, cfg)?;
    match &cli.command {
        Command::AlgCheck { .. } => {
            let n = a.num_vertices();
            let cartan: Vec<Vec<usize>> = (0..n).map(|t| (0..n).map(|s| a.block_dim(t, s)).collect()).collect();
            let result = json!({
                "dim": a.dim(),
                "radical_dim": a.radical().len(),
                "loewy_length": a.loewy_length(),
                "vertices": a.vertex_labels(),
                "idempotents": n,
                "classes": a.num_classes(),
                "semisimple": a.is_semisimple(),
                "cartan": cartan,
                "algebra": AlgebraJson::from_algebra(&a),
            });
            rep.finish("valid", OK, result);
        }
        Command::Chain { method, module, .. } => chain_command(&a, *method, module.as_deref(), cfg, rep)?,
        Command::Qh { chain, .. } => {
            let (found, tests) = match chain {
                Some(s) => (Some(IdempotentChain::parse(&a, s)?), None),
                None => {
                    let s = qh_search(&a, cfg)?;
                    (s.chain, Some(s.tests))
                }
            };
            match found {
                Some(c) => {
                    let r = heredity_chain_verify(&a, &c, cfg)?;
                    let (verdict, code) = match (r.heredity, chain.is_some()) {
                        (true, _) => ("quasi-hereditary: yes", OK),
                        (false, true) => ("heredity chain: no", NEGATIVE),
                        (false, false) => ("quasi-hereditary: no", NEGATIVE),
                    };
                    let result = json!({ "quasi_hereditary": r.heredity, "chain": r.chain_display, "tests": tests, "report": r });
                    rep.finish(verdict, code, result);
                }
                None => {
                    let result = json!({ "quasi_hereditary": false, "chain": Value::Null, "tests": tests });
                    rep.finish("quasi-hereditary: no", NEGATIVE, result);
                }
            }
        }
        Command::Neat { idempotent, chain, .. } => {
            if let Some(c) = chain {
                let c = IdempotentChain::parse(&a, c)?;
                let steps = neat_sequence(&a, &c, cfg)?;
                let all = Neat::all(&steps);
                let (v, code) = neat_verdict(all);
                rep.finish(v, code, json!({ "chain": c.display(&a), "steps": steps, "neat": all }));
            } else {
                let s = idempotent.as_deref().ok_or_else(|| Error::Input("--idempotent or --chain is required".into()))?;
                let f = vertex_set(&a, s)?;
                let n = neat_test(&a, &f, cfg)?;
                let (v, code) = neat_verdict(n);
                rep.finish(v, code, json!({ "idempotent": f, "neat": n }));
            }
        }
        Command::Gldim { module, end, .. } => {
            let m = module.as_deref().map(|p| load_module(p, &a, rep)).transpose()?;
            if *end {
                let m = m.unwrap_or_else(|| Module::regular(&a));
                let d = g_of(&m, cfg)?;
                rep.finish(&format!("gldim End = {d}"), dim_code(d), json!({ "module_dim": m.dim(), "gldim_end": d }));
            } else if let Some(m) = m {
                let d = pd(&m, cfg)?;
                rep.finish(&format!("pd = {d}"), dim_code(d), json!({ "module_dim": m.dim(), "pd": d }));
            } else {
                let d = gldim(&a, cfg)?;
                let pds = simple_pds(&a, cfg)?;
                rep.finish(&format!("gldim = {d}"), dim_code(d), json!({ "gldim": d, "simple_pds": pds }));
            }
        }
        Command::Repdim { .. } => {
            let r = repdim_report(&a, cfg)?;
            let (verdict, code) = match (r.exact, r.upper) {
                (Some(e), _) => (format!("rep.dim = {e}"), OK),
                (None, Dim::Finite(u)) => (format!("rep.dim ≤ {u}"), OK),
                (None, d) => (format!("rep.dim bound {d}"), CAP),
            };
            rep.finish(&verdict, code, to_value(&r));
        }
        Command::Psi { module, shift, .. } => {
            let m = match module {
                Some(p) => load_module(p, &a, rep)?,
                None => Module::regular(&a),
            };
            let r = phi_psi(&m, cfg)?;
            let l = &r.ledger;
            let result = json!({
                "phi": r.phi,
                "psi": r.psi,
                "findim_bound": r.psi.map(|p| p + shift + 1),
                "ledger": {
                    "classes": l.classes.iter().map(summary).collect::<Vec<_>>(),
                    "base_vector": l.base_vector,
                    "omega": l.omega,
                    "closed": l.closed,
                    "ranks": l.ranks,
                    "stabilization": l.stabilization,
                },
            });
            match (r.phi, r.psi) {
                (Some(p), Some(q)) => rep.finish(&format!("φ = {p}, ψ = {q}"), OK, result),
                _ => rep.finish("unknown at cap", CAP, result),
            }
        }
        Command::Resdim { module, target, .. } => {
            let m = load_module(module, &a, rep)?;
            let c = Subcategory::add(&a, &[m], cfg)?;
            let targets = match target {
                Some(p) => vec![load_module(p, &a, rep)?],
                None => nakayama_enumerate(&a, cfg)?.part_list(),
            };
            let mut best = Dim::Finite(0);
            let mut rows = Vec::new();
            for t in &targets {
                let r = c_resolution(&c, t, cfg.cap_resdim, cfg)?;
                best = best.max(r.resdim);
                let stages: Vec<Value> = r
                    .approximations
                    .iter()
                    .map(|ap| json!({ "summands": ap.summands, "object_dim": ap.object().dim(), "kernel_dim": ap.map.kernel().src().dim() }))
                    .collect();
                rows.push(json!({ "target": summary(t), "resdim": r.resdim, "stages": stages }));
            }
            let parts: Vec<PartSummary> = c.parts().map(summary).collect();
            rep.finish(&format!("resdim = {best}"), dim_code(best), json!({ "resdim": best, "parts": parts, "targets": rows }));
        }
    }
    Ok(())
}

fn chain_command<K: Field>(a: &Alg<K>, method: Method, module: Option<&Path>, cfg: &Config, rep: &mut Report) -> Result<()> {
    let m = module.map(|p| load_module(p, a, rep)).transpose()?;
    let mut extra = json!({});
    let mut cancel = false;
    let chain = match method {
        Method::IteratedRadical | Method::IteratedCoradical => {
            let side = if method == Method::IteratedRadical { Side::Right } else { Side::Left };
            let m0 = m.clone().unwrap_or_else(|| Module::regular(a));
            let (chain, ms) = iterated_radical_chain(&m0, side, cfg)?;
            extra = json!({ "modules": ms.iter().map(summary).collect::<Vec<_>>() });
            chain
        }
        Method::RadicalSeries => radical_series_chain(a, cfg)?.0,
        Method::CancelRight | Method::CancelLeft => {
            cancel = true;
            let side = if method == Method::CancelRight { Side::Right } else { Side::Left };
            let gens = match &m {
                Some(m) => vec![m.clone()],
                None => projectives(a),
            };
            let c = Subcategory::add(a, &gens, cfg)?;
            let (chain, certs) = cancellation_chain(&c, side, cfg)?;
            extra = json!({ "certifications": certs });
            chain
        }
    };
    let report = classify_chain(&chain, cfg)?;
    let display = if cancel && m.is_none() && report.complete {
        Some(chain_to_idempotents(a, &chain, cfg)?.display(a))
    } else {
        None
    };
    let result = json!({
        "method": format!("{method:?}"),
        "chain": display,
        "report": report,
        "extra": extra,
        "parts": chain.top().parts().map(ModuleJson::from_module).collect::<Vec<_>>(),
    });
    if report.complete {
        rep.finish("complete", OK, result);
    } else if cancel {
        rep.finish(&format!("no eligible object at step {}", chain.length() + 1), NEGATIVE, result);
    } else {
        rep.finish("incomplete", NEGATIVE, result);
    }
    Ok(())
}
