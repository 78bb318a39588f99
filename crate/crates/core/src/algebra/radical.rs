//! Jacobson radical of a matrix-represented algebra.

use crate::error::{Error, Result};
use crate::exactla::{Field, FieldSpec, Matrix};

use super::ops::AlgOps;

/// Basis of the radical, as coordinate vectors.
///
/// Trace form kernel in characteristic 0 or when p exceeds the representation
/// degree; otherwise the p-power trace refinement over integer lifts.
pub fn radical_basis<K: Field, O: AlgOps<K>>(ops: &O) -> Result<Vec<Vec<K::Elem>>> {
    let k = ops.field();
    let d = ops.dim();
    if d == 0 {
        return Ok(vec![]);
    }
    let unit = |i: usize| -> Vec<K::Elem> {
        let mut v = vec![k.zero(); d];
        v[i] = k.one();
        v
    };
    let basis: Vec<Vec<K::Elem>> = (0..d).map(unit).collect();
    // step 0: kernel of the trace form
    let mut gram = Matrix::zeros(k, d, d);
    for i in 0..d {
        for j in 0..d {
            let t = ops.trace(&ops.mul(&basis[i], &basis[j]));
            gram.set(i, j, t);
        }
    }
    let ker = gram.transpose().kernel_basis();
    let mut current: Vec<Vec<K::Elem>> = ker.to_cols();
    let p = match k.spec() {
        FieldSpec::Rational => return Ok(current),
        FieldSpec::Prime(p) => p as u64,
    };
    let n = ops.rep_dim() as u64;
    let mut l = 0u32;
    while p.pow(l + 1) <= n {
        l += 1;
    }
    for i in 1..=l {
        if current.is_empty() {
            break;
        }
        let pi = p.pow(i) as u128;
        let q = pi * p as u128;
        let r = current.len();
        let mut g = Matrix::zeros(k, r, d);
        for (a, x) in current.iter().enumerate() {
            for (j, y) in basis.iter().enumerate() {
                let z = ops.mul(x, y);
                let m = ops.rep(&z);
                let t = lifted_power_trace(k, &m, pi, q)?;
                if t % pi != 0 {
                    return Err(Error::Unsupported(
                        "p-power trace not divisible; representation is not faithful".into(),
                    ));
                }
                g.set(a, j, k.from_i64(((t / pi) % p as u128) as i64));
            }
        }
        // combinations c with sum_a c_a g[a][j] = 0
        let ker = g.transpose().kernel_basis();
        let mut next = Vec::with_capacity(ker.cols());
        for c in ker.to_cols() {
            let mut v = vec![k.zero(); d];
            for (ca, x) in c.iter().zip(&current) {
                if k.is_zero(ca) {
                    continue;
                }
                for (vi, xi) in v.iter_mut().zip(x) {
                    k.mul_add(vi, ca, xi);
                }
            }
            next.push(v);
        }
        current = next;
    }
    Ok(current)
}

/// Trace of `lift(m)^e` modulo `q`.
fn lifted_power_trace<K: Field>(k: &K, m: &Matrix<K>, e: u128, q: u128) -> Result<u128> {
    let n = m.rows();
    let mut base = vec![0u128; n * n];
    for i in 0..n {
        for j in 0..n {
            base[i * n + j] = k
                .lift(m.get(i, j))
                .ok_or_else(|| Error::Unsupported("integer lift needs a prime field".into()))?
                as u128;
        }
    }
    let matmul = |a: &[u128], b: &[u128]| -> Vec<u128> {
        let mut out = vec![0u128; n * n];
        for i in 0..n {
            for t in 0..n {
                let x = a[i * n + t];
                if x == 0 {
                    continue;
                }
                for j in 0..n {
                    out[i * n + j] = (out[i * n + j] + x * b[t * n + j]) % q;
                }
            }
        }
        out
    };
    let mut acc: Vec<u128> = (0..n * n).map(|idx| if idx / n == idx % n { 1 } else { 0 }).collect();
    let mut e = e;
    let mut b = base;
    while e > 0 {
        if e & 1 == 1 {
            acc = matmul(&acc, &b);
        }
        e >>= 1;
        if e > 0 {
            b = matmul(&b, &b);
        }
    }
    Ok((0..n).fold(0u128, |s, i| (s + acc[i * n + i]) % q))
}
