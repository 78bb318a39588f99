//! Dense univariate polynomials, lowest degree first.

use num_bigint::BigUint;
use rand::Rng;

use crate::exactla::field::{rational_roots, Field, FieldSpec};

pub type Poly<K> = Vec<<K as Field>::Elem>;

pub fn trim<K: Field>(k: &K, mut p: Poly<K>) -> Poly<K> {
    while p.last().map_or(false, |c| k.is_zero(c)) {
        p.pop();
    }
    p
}

/// Degree, with `None` for the zero polynomial.
pub fn deg<K: Field>(k: &K, p: &[K::Elem]) -> Option<usize> {
    p.iter().rposition(|c| !k.is_zero(c))
}

pub fn one<K: Field>(k: &K) -> Poly<K> {
    vec![k.one()]
}

pub fn x<K: Field>(k: &K) -> Poly<K> {
    vec![k.zero(), k.one()]
}

pub fn add<K: Field>(k: &K, a: &[K::Elem], b: &[K::Elem]) -> Poly<K> {
    let n = a.len().max(b.len());
    let z = k.zero();
    let out = (0..n).map(|i| k.add(a.get(i).unwrap_or(&z), b.get(i).unwrap_or(&z))).collect();
    trim(k, out)
}

pub fn sub<K: Field>(k: &K, a: &[K::Elem], b: &[K::Elem]) -> Poly<K> {
    let n = a.len().max(b.len());
    let z = k.zero();
    let out = (0..n).map(|i| k.sub(a.get(i).unwrap_or(&z), b.get(i).unwrap_or(&z))).collect();
    trim(k, out)
}

pub fn scale<K: Field>(k: &K, a: &[K::Elem], c: &K::Elem) -> Poly<K> {
    trim(k, a.iter().map(|x| k.mul(x, c)).collect())
}

pub fn mul<K: Field>(k: &K, a: &[K::Elem], b: &[K::Elem]) -> Poly<K> {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = vec![k.zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if k.is_zero(x) {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            k.mul_add(&mut out[i + j], x, y);
        }
    }
    trim(k, out)
}

/// Quotient and remainder. Panics on division by zero.
pub fn divrem<K: Field>(k: &K, a: &[K::Elem], b: &[K::Elem]) -> (Poly<K>, Poly<K>) {
    let db = deg(k, b).expect("division by the zero polynomial");
    let lead_inv = k.inv(&b[db]).unwrap();
    let mut r = trim(k, a.to_vec());
    if r.len() <= db {
        return (vec![], r);
    }
    let mut q = vec![k.zero(); r.len() - db];
    while let Some(dr) = deg(k, &r) {
        if dr < db {
            break;
        }
        let c = k.mul(&r[dr], &lead_inv);
        let s = dr - db;
        for i in 0..=db {
            let t = k.mul(&c, &b[i]);
            r[s + i] = k.sub(&r[s + i], &t);
        }
        q[s] = c;
        r = trim(k, r);
    }
    (trim(k, q), r)
}

pub fn rem<K: Field>(k: &K, a: &[K::Elem], b: &[K::Elem]) -> Poly<K> {
    divrem(k, a, b).1
}

pub fn monic<K: Field>(k: &K, a: &[K::Elem]) -> Poly<K> {
    match deg(k, a) {
        None => vec![],
        Some(d) => {
            let inv = k.inv(&a[d]).unwrap();
            scale(k, &a[..=d], &inv)
        }
    }
}

/// Monic greatest common divisor.
pub fn gcd<K: Field>(k: &K, a: &[K::Elem], b: &[K::Elem]) -> Poly<K> {
    let mut a = trim(k, a.to_vec());
    let mut b = trim(k, b.to_vec());
    while !b.is_empty() {
        let r = rem(k, &a, &b);
        a = b;
        b = r;
    }
    monic(k, &a)
}

/// Bezout coefficients: returns (g, s, t) with s·a + t·b = g monic.
pub fn xgcd<K: Field>(k: &K, a: &[K::Elem], b: &[K::Elem]) -> (Poly<K>, Poly<K>, Poly<K>) {
    let (mut r0, mut r1) = (trim(k, a.to_vec()), trim(k, b.to_vec()));
    let (mut s0, mut s1) = (one(k), vec![]);
    let (mut t0, mut t1) = (vec![], one(k));
    while !r1.is_empty() {
        let (q, r) = divrem(k, &r0, &r1);
        let s2 = sub(k, &s0, &mul(k, &q, &s1));
        let t2 = sub(k, &t0, &mul(k, &q, &t1));
        r0 = r1;
        r1 = r;
        s0 = s1;
        s1 = s2;
        t0 = t1;
        t1 = t2;
    }
    match deg(k, &r0) {
        None => (vec![], s0, t0),
        Some(d) => {
            let inv = k.inv(&r0[d]).unwrap();
            (scale(k, &r0, &inv), scale(k, &s0, &inv), scale(k, &t0, &inv))
        }
    }
}

pub fn derivative<K: Field>(k: &K, a: &[K::Elem]) -> Poly<K> {
    let out = a.iter().enumerate().skip(1).map(|(i, c)| k.mul(c, &k.from_i64(i as i64))).collect();
    trim(k, out)
}

pub fn mulmod<K: Field>(k: &K, a: &[K::Elem], b: &[K::Elem], m: &[K::Elem]) -> Poly<K> {
    rem(k, &mul(k, a, b), m)
}

pub fn powmod<K: Field>(k: &K, a: &[K::Elem], e: &BigUint, m: &[K::Elem]) -> Poly<K> {
    let mut acc = rem(k, &one(k), m);
    let base = rem(k, a, m);
    for i in (0..e.bits()).rev() {
        acc = mulmod(k, &acc, &acc, m);
        if e.bit(i) {
            acc = mulmod(k, &acc, &base, m);
        }
    }
    acc
}

fn is_const<K: Field>(k: &K, a: &[K::Elem]) -> bool {
    deg(k, a).map_or(true, |d| d == 0)
}

/// Product of the distinct monic irreducible factors.
pub fn radical<K: Field>(k: &K, f: &[K::Elem]) -> Poly<K> {
    let f = monic(k, f);
    if is_const(k, &f) {
        return f;
    }
    let df = derivative(k, &f);
    if df.is_empty() {
        // f = h(x^p); over GF(p) the p-th root of a coefficient is itself
        let p = k.characteristic() as usize;
        let h: Poly<K> = f.iter().step_by(p).cloned().collect();
        return radical(k, &h);
    }
    let g = gcd(k, &f, &df);
    let sq = divrem(k, &f, &g).0;
    if is_const(k, &g) {
        return monic(k, &sq);
    }
    let rg = radical(k, &g);
    let common = gcd(k, &sq, &rg);
    monic(k, &mul(k, &sq, &divrem(k, &rg, &common).0))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Splitting<E> {
    /// `f = a·b` with `a`, `b` coprime and of positive degree.
    Split(Vec<E>, Vec<E>),
    /// The radical of `f` is irreducible.
    Irreducible(Vec<E>),
    Unknown,
}

/// Tries to write `f` as a product of two coprime factors of positive degree.
pub fn split<K: Field, R: Rng + ?Sized>(k: &K, f: &[K::Elem], rng: &mut R) -> Splitting<K::Elem> {
    let f = monic(k, f);
    let r = radical(k, &f);
    let factor = match k.spec() {
        FieldSpec::Prime(p) => factor_gfp(k, &r, p as u64, rng),
        FieldSpec::Rational => factor_q(k, &r),
    };
    match factor {
        Factor::Proper(g) => {
            let n = deg(k, &f).unwrap_or(0) as u64;
            let gn = powmod(k, &g, &BigUint::from(n.max(1)), &f);
            let a = gcd(k, &f, &gn);
            let a = if a.is_empty() { f.clone() } else { a };
            let b = divrem(k, &f, &a).0;
            debug_assert!(!is_const(k, &a) && !is_const(k, &b));
            Splitting::Split(a, monic(k, &b))
        }
        Factor::Irreducible => Splitting::Irreducible(r),
        Factor::Unknown => Splitting::Unknown,
    }
}

enum Factor<E> {
    Proper(Vec<E>),
    Irreducible,
    Unknown,
}

/// Proper factor of a squarefree monic polynomial over GF(p).
fn factor_gfp<K: Field, R: Rng + ?Sized>(k: &K, h: &[K::Elem], p: u64, rng: &mut R) -> Factor<K::Elem> {
    let n = match deg(k, h) {
        None | Some(0) | Some(1) => return Factor::Irreducible,
        Some(n) => n,
    };
    let pb = BigUint::from(p);
    let xx = x(k);
    let mut xp = rem(k, &xx, h);
    for d in 1..=n / 2 {
        xp = powmod(k, &xp, &pb, h);
        let g = gcd(k, h, &sub(k, &xp, &xx));
        let dg = deg(k, &g).unwrap_or(0);
        if dg == 0 {
            continue;
        }
        if dg < n {
            return Factor::Proper(g);
        }
        // h is a product of n/d irreducibles of degree d
        return equal_degree(k, h, d, p, rng);
    }
    Factor::Irreducible
}

fn equal_degree<K: Field, R: Rng + ?Sized>(k: &K, h: &[K::Elem], d: usize, p: u64, rng: &mut R) -> Factor<K::Elem> {
    let n = deg(k, h).unwrap();
    let pd = BigUint::from(p).pow(d as u32);
    let pb = BigUint::from(p);
    for _ in 0..200 {
        let a: Poly<K> = trim(k, (0..n).map(|_| k.random(rng)).collect());
        if is_const(k, &a) {
            continue;
        }
        let g0 = gcd(k, h, &a);
        if !is_const(k, &g0) {
            return Factor::Proper(g0);
        }
        let b = if p == 2 {
            let mut t = a.clone();
            let mut acc = a.clone();
            for _ in 1..d {
                t = powmod(k, &t, &pb, h);
                acc = add(k, &acc, &t);
            }
            acc
        } else {
            let e = (&pd - 1u32) / 2u32;
            sub(k, &powmod(k, &a, &e, h), &one(k))
        };
        let g = gcd(k, h, &b);
        let dg = deg(k, &g).unwrap_or(0);
        if dg > 0 && dg < n {
            return Factor::Proper(g);
        }
    }
    Factor::Unknown
}

fn factor_q<K: Field>(k: &K, h: &[K::Elem]) -> Factor<K::Elem> {
    let n = match deg(k, h) {
        None | Some(0) | Some(1) => return Factor::Irreducible,
        Some(n) => n,
    };
    let coeffs: Option<Vec<_>> = h.iter().map(|c| k.as_rational(c)).collect();
    let Some(coeffs) = coeffs else { return Factor::Unknown };
    match rational_roots(&coeffs) {
        Some(roots) if !roots.is_empty() => {
            let r = k.from_rational(&roots[0]).unwrap();
            Factor::Proper(vec![k.neg(&r), k.one()])
        }
        Some(_) if n <= 3 => Factor::Irreducible,
        _ => Factor::Unknown,
    }
}
