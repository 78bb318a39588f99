//! Complete sets of orthogonal primitive idempotents.

use rand::Rng;

use crate::error::{Error, Result};
use crate::exactla::poly::{self, Splitting};
use crate::exactla::{Field, Span};

use super::ops::AlgOps;

const BUDGET: usize = 200;

fn axpy<K: Field>(k: &K, acc: &mut [K::Elem], c: &K::Elem, v: &[K::Elem]) {
    if k.is_zero(c) {
        return;
    }
    for (a, b) in acc.iter_mut().zip(v) {
        if !k.is_zero(b) {
            k.mul_add(a, c, b);
        }
    }
}

fn unit_vec<K: Field>(k: &K, d: usize, i: usize) -> Vec<K::Elem> {
    let mut v = vec![k.zero(); d];
    v[i] = k.one();
    v
}

/// Basis of `eAe` together with the dimension of `eJe`.
pub fn corner<K: Field, O: AlgOps<K>>(ops: &O, rad: &[Vec<K::Elem>], e: &[K::Elem]) -> (Span<K>, usize) {
    let k = ops.field();
    let d = ops.dim();
    let mut span = Span::new(k, d);
    for i in 0..d {
        let b = unit_vec(k, d, i);
        span.insert(&ops.mul(&ops.mul(e, &b), e));
    }
    let mut jspan = Span::new(k, d);
    for j in rad {
        jspan.insert(&ops.mul(&ops.mul(e, j), e));
    }
    let jd = jspan.dim();
    (span, jd)
}

/// Evaluates `f(z)` in the corner with identity `e`.
pub fn eval_poly<K: Field, O: AlgOps<K>>(ops: &O, f: &[K::Elem], z: &[K::Elem], e: &[K::Elem]) -> Vec<K::Elem> {
    let k = ops.field();
    let mut acc = vec![k.zero(); ops.dim()];
    for c in f.iter().rev() {
        acc = ops.mul(&acc, z);
        axpy(k, &mut acc, c, e);
    }
    acc
}

/// Minimal polynomial of `z` inside the corner with identity `e`.
pub fn min_poly<K: Field, O: AlgOps<K>>(ops: &O, z: &[K::Elem], e: &[K::Elem]) -> Vec<K::Elem> {
    let k = ops.field();
    let mut span = Span::new(k, ops.dim());
    let mut pw = e.to_vec();
    loop {
        if let Some(c) = span.coords(&pw) {
            let mut f: Vec<K::Elem> = c.iter().map(|x| k.neg(x)).collect();
            f.push(k.one());
            return f;
        }
        span.insert(&pw);
        pw = ops.mul(&pw, z);
    }
}

enum Local<E> {
    Yes,
    Split(Vec<E>, Vec<E>),
}

fn examine<K: Field, O: AlgOps<K>, R: Rng + ?Sized>(
    ops: &O,
    rad: &[Vec<K::Elem>],
    e: &[K::Elem],
    rng: &mut R,
) -> Result<Local<K::Elem>> {
    let k = ops.field();
    let (span, jd) = corner(ops, rad, e);
    let s = span.dim() - jd;
    if s == 0 {
        return Err(Error::Splitting("idempotent lies in the radical".into()));
    }
    if s == 1 {
        return Ok(Local::Yes);
    }
    let basis = span.basis().to_vec();
    for _ in 0..BUDGET {
        let mut z = vec![k.zero(); ops.dim()];
        for b in &basis {
            let c = k.random(rng);
            axpy(k, &mut z, &c, b);
        }
        let f = min_poly(ops, &z, e);
        match poly::split(k, &f, rng) {
            Splitting::Split(f1, f2) => {
                let (g, _s, t) = poly::xgcd(k, &f1, &f2);
                debug_assert_eq!(g, poly::one(k));
                let u = poly::rem(k, &poly::mul(k, &t, &f2), &f);
                let e1 = eval_poly(ops, &u, &z, e);
                let e2: Vec<K::Elem> = e.iter().zip(&e1).map(|(a, b)| k.sub(a, b)).collect();
                return Ok(Local::Split(e1, e2));
            }
            Splitting::Irreducible(r) => {
                if poly::deg(k, &r) == Some(s) {
                    return Ok(Local::Yes);
                }
            }
            Splitting::Unknown => {}
        }
    }
    Err(Error::Splitting(format!("no splitting element found for a corner of semisimple rank {s}")))
}

/// Refines the given orthogonal idempotents (summing to 1) into primitive ones.
/// Output keeps the order of `start`, each entry replaced by its refinement.
pub fn refine<K: Field, O: AlgOps<K>, R: Rng + ?Sized>(
    ops: &O,
    rad: &[Vec<K::Elem>],
    start: Vec<Vec<K::Elem>>,
    rng: &mut R,
) -> Result<Vec<Vec<K::Elem>>> {
    let k = ops.field();
    check_orthogonal(ops, &start)?;
    let mut out = Vec::new();
    let mut stack: Vec<Vec<K::Elem>> = start.into_iter().rev().collect();
    while let Some(e) = stack.pop() {
        if e.iter().all(|x| k.is_zero(x)) {
            continue;
        }
        match examine(ops, rad, &e, rng)? {
            Local::Yes => out.push(e),
            Local::Split(a, b) => {
                stack.push(b);
                stack.push(a);
            }
        }
    }
    Ok(out)
}

pub fn check_orthogonal<K: Field, O: AlgOps<K>>(ops: &O, es: &[Vec<K::Elem>]) -> Result<()> {
    let k = ops.field();
    let mut sum = vec![k.zero(); ops.dim()];
    for (i, a) in es.iter().enumerate() {
        axpy(k, &mut sum, &k.one(), a);
        for (j, b) in es.iter().enumerate() {
            let p = ops.mul(a, b);
            let ok = if i == j { &p == a } else { p.iter().all(|x| k.is_zero(x)) };
            if !ok {
                return Err(Error::Input(format!("idempotents {i} and {j} are not orthogonal idempotents")));
            }
        }
    }
    if sum != ops.one() {
        return Err(Error::Input("idempotents do not sum to the unit".into()));
    }
    Ok(())
}

/// Class index per idempotent: `e_i ~ e_j` when `e_i A e_j A e_i` is not inside the radical.
pub fn classes<K: Field, O: AlgOps<K>>(ops: &O, rad: &Span<K>, es: &[Vec<K::Elem>]) -> Vec<usize> {
    let k = ops.field();
    let d = ops.dim();
    let n = es.len();
    let block = |a: &[K::Elem], b: &[K::Elem]| -> Vec<Vec<K::Elem>> {
        let mut s = Span::new(k, d);
        for i in 0..d {
            let u = unit_vec(k, d, i);
            s.insert(&ops.mul(&ops.mul(a, &u), b));
        }
        s.basis().to_vec()
    };
    let mut cls: Vec<Option<usize>> = vec![None; n];
    let mut next = 0;
    for i in 0..n {
        if cls[i].is_some() {
            continue;
        }
        cls[i] = Some(next);
        for j in i + 1..n {
            if cls[j].is_some() {
                continue;
            }
            let ij = block(&es[i], &es[j]);
            let ji = block(&es[j], &es[i]);
            let linked = ij.iter().any(|x| ji.iter().any(|y| !rad.contains(&ops.mul(x, y))));
            if linked {
                cls[j] = Some(next);
            }
        }
        next += 1;
    }
    cls.into_iter().map(|c| c.unwrap()).collect()
}
