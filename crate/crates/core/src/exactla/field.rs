use std::fmt::Debug;
use std::hash::Hash;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Runtime description of a base field.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum FieldSpec {
    Rational,
    Prime(u32),
}

impl FieldSpec {
    pub fn characteristic(&self) -> u64 {
        match self {
            FieldSpec::Rational => 0,
            FieldSpec::Prime(p) => *p as u64,
        }
    }

    pub fn from_char(c: u64) -> Result<FieldSpec> {
        if c == 0 {
            return Ok(FieldSpec::Rational);
        }
        if c > u32::MAX as u64 / 2 || !is_prime(c) {
            return Err(Error::Input(format!("characteristic {c} is not a supported prime")));
        }
        Ok(FieldSpec::Prime(c as u32))
    }
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// A field context. Elements are plain values; the context carries the arithmetic.
pub trait Field: Clone + Debug + PartialEq + Eq + Hash + Send + Sync + 'static {
    type Elem: Clone + Debug + PartialEq + Eq + Hash + Send + Sync + 'static;

    fn spec(&self) -> FieldSpec;
    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn from_i64(&self, v: i64) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem>;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn random<R: Rng + ?Sized>(&self, rng: &mut R) -> Self::Elem;
    /// Integer representative in `0..p` (prime fields only).
    fn lift(&self, a: &Self::Elem) -> Option<u64>;
    fn to_json(&self, a: &Self::Elem) -> serde_json::Value;
    fn from_json(&self, v: &serde_json::Value) -> Result<Self::Elem>;

    fn characteristic(&self) -> u64 {
        self.spec().characteristic()
    }

    /// Exact rational value (characteristic 0 only).
    fn as_rational(&self, _a: &Self::Elem) -> Option<BigRational> {
        None
    }

    fn from_rational(&self, _q: &BigRational) -> Option<Self::Elem> {
        None
    }

    fn is_one(&self, a: &Self::Elem) -> bool {
        *a == self.one()
    }

    /// `acc += a * b`
    fn mul_add(&self, acc: &mut Self::Elem, a: &Self::Elem, b: &Self::Elem) {
        let t = self.mul(a, b);
        *acc = self.add(acc, &t);
    }

    fn div(&self, a: &Self::Elem, b: &Self::Elem) -> Option<Self::Elem> {
        self.inv(b).map(|bi| self.mul(a, &bi))
    }

    fn pow(&self, a: &Self::Elem, mut e: u64) -> Self::Elem {
        let mut base = a.clone();
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            e >>= 1;
        }
        acc
    }

    fn fmt_elem(&self, a: &Self::Elem) -> String {
        self.to_json(a).to_string()
    }
}

/// GF(p) for a prime p < 2^31.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PrimeField {
    p: u32,
}

impl PrimeField {
    pub fn new(p: u32) -> Result<Self> {
        if p >= 1 << 31 || !is_prime(p as u64) {
            return Err(Error::Input(format!("{p} is not a supported prime")));
        }
        Ok(PrimeField { p })
    }

    pub fn modulus(&self) -> u32 {
        self.p
    }

    #[inline]
    fn reduce(&self, v: u64) -> u32 {
        (v % self.p as u64) as u32
    }
}

impl Default for PrimeField {
    fn default() -> Self {
        PrimeField { p: 101 }
    }
}

impl Field for PrimeField {
    type Elem = u32;

    fn spec(&self) -> FieldSpec {
        FieldSpec::Prime(self.p)
    }
    #[inline]
    fn zero(&self) -> u32 {
        0
    }
    #[inline]
    fn one(&self) -> u32 {
        1 % self.p
    }
    fn from_i64(&self, v: i64) -> u32 {
        v.rem_euclid(self.p as i64) as u32
    }
    #[inline]
    fn add(&self, a: &u32, b: &u32) -> u32 {
        let s = *a as u64 + *b as u64;
        if s >= self.p as u64 {
            (s - self.p as u64) as u32
        } else {
            s as u32
        }
    }
    #[inline]
    fn sub(&self, a: &u32, b: &u32) -> u32 {
        if a >= b {
            a - b
        } else {
            (*a as u64 + self.p as u64 - *b as u64) as u32
        }
    }
    #[inline]
    fn mul(&self, a: &u32, b: &u32) -> u32 {
        self.reduce(*a as u64 * *b as u64)
    }
    #[inline]
    fn neg(&self, a: &u32) -> u32 {
        if *a == 0 {
            0
        } else {
            self.p - a
        }
    }
    fn inv(&self, a: &u32) -> Option<u32> {
        if *a == 0 {
            return None;
        }
        // extended Euclid
        let (mut t, mut newt) = (0i64, 1i64);
        let (mut r, mut newr) = (self.p as i64, *a as i64);
        while newr != 0 {
            let q = r / newr;
            (t, newt) = (newt, t - q * newt);
            (r, newr) = (newr, r - q * newr);
        }
        Some(t.rem_euclid(self.p as i64) as u32)
    }
    #[inline]
    fn is_zero(&self, a: &u32) -> bool {
        *a == 0
    }
    fn random<R: Rng + ?Sized>(&self, rng: &mut R) -> u32 {
        rng.gen_range(0..self.p)
    }
    fn lift(&self, a: &u32) -> Option<u64> {
        Some(*a as u64)
    }
    #[inline]
    fn mul_add(&self, acc: &mut u32, a: &u32, b: &u32) {
        *acc = self.reduce(*acc as u64 + *a as u64 * *b as u64);
    }
    fn to_json(&self, a: &u32) -> serde_json::Value {
        serde_json::Value::from(*a)
    }
    fn from_json(&self, v: &serde_json::Value) -> Result<u32> {
        if let Some(i) = v.as_i64() {
            return Ok(self.from_i64(i));
        }
        if let Some(s) = v.as_str() {
            let q = parse_rational(s)?;
            let num = self.from_bigint(q.numer());
            let den = self.from_bigint(q.denom());
            return self
                .div(&num, &den)
                .ok_or_else(|| Error::Input(format!("denominator of {s} vanishes mod {}", self.p)));
        }
        Err(Error::Input(format!("expected a field element, found {v}")))
    }
}

impl PrimeField {
    fn from_bigint(&self, b: &BigInt) -> u32 {
        let p = BigInt::from(self.p);
        let r = ((b % &p) + &p) % &p;
        r.to_u32().unwrap_or(0)
    }
}

/// The rational numbers with arbitrary precision.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct Rationals;

fn parse_rational(s: &str) -> Result<BigRational> {
    let bad = || Error::Input(format!("cannot parse rational '{s}'"));
    let s = s.trim();
    match s.split_once('/') {
        Some((a, b)) => {
            let a: BigInt = a.trim().parse().map_err(|_| bad())?;
            let b: BigInt = b.trim().parse().map_err(|_| bad())?;
            if b.is_zero() {
                return Err(bad());
            }
            Ok(BigRational::new(a, b))
        }
        None => Ok(BigRational::from_integer(s.parse().map_err(|_| bad())?)),
    }
}

impl Field for Rationals {
    type Elem = BigRational;

    fn spec(&self) -> FieldSpec {
        FieldSpec::Rational
    }
    fn zero(&self) -> BigRational {
        BigRational::zero()
    }
    fn one(&self) -> BigRational {
        BigRational::one()
    }
    fn from_i64(&self, v: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(v))
    }
    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }
    fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a - b
    }
    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }
    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }
    fn inv(&self, a: &BigRational) -> Option<BigRational> {
        if a.is_zero() {
            None
        } else {
            Some(a.recip())
        }
    }
    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }
    fn random<R: Rng + ?Sized>(&self, rng: &mut R) -> BigRational {
        self.from_i64(rng.gen_range(-7..=7))
    }
    fn lift(&self, _a: &BigRational) -> Option<u64> {
        None
    }
    fn as_rational(&self, a: &BigRational) -> Option<BigRational> {
        Some(a.clone())
    }
    fn from_rational(&self, q: &BigRational) -> Option<BigRational> {
        Some(q.clone())
    }
    fn to_json(&self, a: &BigRational) -> serde_json::Value {
        if a.is_integer() {
            if let Some(i) = a.numer().to_i64() {
                return serde_json::Value::from(i);
            }
        }
        serde_json::Value::from(if a.is_integer() {
            a.numer().to_string()
        } else {
            format!("{}/{}", a.numer(), a.denom())
        })
    }
    fn from_json(&self, v: &serde_json::Value) -> Result<BigRational> {
        if let Some(i) = v.as_i64() {
            return Ok(self.from_i64(i));
        }
        if let Some(s) = v.as_str() {
            return parse_rational(s);
        }
        Err(Error::Input(format!("expected a rational, found {v}")))
    }
}

/// Rational roots of a polynomial with rational coefficients (low degree first),
/// found by the rational root test. `None` when the coefficients are too large to try.
pub(crate) fn rational_roots(coeffs: &[BigRational]) -> Option<Vec<BigRational>> {
    let mut c: Vec<BigRational> = coeffs.to_vec();
    while c.last().map_or(false, |x| x.is_zero()) {
        c.pop();
    }
    if c.len() <= 1 {
        return Some(vec![]);
    }
    let mut roots = Vec::new();
    if c[0].is_zero() {
        roots.push(BigRational::zero());
        while c.len() > 1 && c[0].is_zero() {
            c.remove(0);
        }
    }
    let lcm = c.iter().fold(BigInt::one(), |acc, x| num_integer::lcm(acc, x.denom().clone()));
    let ints: Vec<BigInt> = c.iter().map(|x| (x * BigRational::from_integer(lcm.clone())).to_integer()).collect();
    let a0 = ints[0].abs();
    let an = ints.last().unwrap().abs();
    let limit = BigInt::from(1_000_000_000_000i64);
    if a0 > limit || an > limit {
        return None;
    }
    let divisors = |n: &BigInt| -> Vec<BigInt> {
        let n = n.to_i64().unwrap_or(1).max(1);
        let mut out = Vec::new();
        let mut d = 1i64;
        while d * d <= n {
            if n % d == 0 {
                out.push(BigInt::from(d));
                if d * d != n {
                    out.push(BigInt::from(n / d));
                }
            }
            d += 1;
        }
        out
    };
    let eval = |x: &BigRational| -> BigRational {
        let mut acc = BigRational::zero();
        for k in c.iter().rev() {
            acc = acc * x + k;
        }
        acc
    };
    for p in divisors(&a0) {
        for q in divisors(&an) {
            for s in [1i64, -1] {
                let x = BigRational::new(&p * BigInt::from(s), q.clone());
                if !roots.contains(&x) && eval(&x).is_zero() {
                    roots.push(x);
                }
            }
        }
    }
    roots.sort();
    Some(roots)
}
