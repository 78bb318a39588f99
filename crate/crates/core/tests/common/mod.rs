//! Shared brute-force references and random module generators.
#![allow(dead_code)]

use rand::Rng;
use rand_chacha::ChaCha8Rng;
use rejectia::{Alg, Config, Field, Matrix, Module, PrimeField, Span};

pub type Fp = PrimeField;

pub fn cfg() -> Config {
    Config::default()
}

pub fn random_invertible(k: &Fp, n: usize, rng: &mut ChaCha8Rng) -> Matrix<Fp> {
    loop {
        let m = Matrix::from_fn(k, n, n, |_, _| k.random(rng));
        if m.rank() == n {
            return m;
        }
    }
}

/// Same module in a random basis.
pub fn scramble(x: &Module<Fp>, rng: &mut ChaCha8Rng) -> Module<Fp> {
    let k = x.field();
    let a = x.algebra();
    let bs: Vec<_> = x.dims().iter().map(|&d| random_invertible(k, d, rng)).collect();
    let acts = a
        .presentation()
        .generators()
        .iter()
        .enumerate()
        .map(|(gi, g)| bs[g.tgt].mul(x.act(gi)).mul(&bs[g.src].inverse().unwrap()))
        .collect();
    Module::new(a, x.dims().to_vec(), acts).unwrap()
}

fn sparse_random(k: &Fp, n: usize, rng: &mut ChaCha8Rng) -> Vec<u32> {
    (0..n).map(|_| if rng.gen_bool(0.4) { k.random(rng) } else { 0 }).collect()
}

/// A random quotient or submodule of an indecomposable projective or injective.
pub fn random_module(a: &Alg<Fp>, rng: &mut ChaCha8Rng) -> Module<Fp> {
    let k = a.field();
    let v = rng.gen_range(0..a.num_vertices());
    let base = if rng.gen_bool(0.5) { Module::projective(a, v) } else { Module::injective(a, v) };
    let x = sparse_random(k, base.dim(), rng);
    let sub = base.submodule_of_vectors(&[x]);
    if rng.gen_bool(0.5) {
        base.quotient(&sub).tgt().clone()
    } else {
        sub.src().clone()
    }
}

/// Random module of dimension between 1 and `max`.
pub fn random_small_module(a: &Alg<Fp>, max: usize, rng: &mut ChaCha8Rng) -> Module<Fp> {
    loop {
        let m = random_module(a, rng);
        if !m.is_zero() && m.dim() <= max {
            return m;
        }
    }
}

/// `dim Ext¹(X, Y)` as cocycles modulo coboundaries of upper-triangular extensions.
pub fn ext1_oracle<K: Field>(x: &Module<K>, y: &Module<K>) -> usize {
    let k = x.field();
    let a = x.algebra();
    let pres = a.presentation();
    let gens = pres.generators();
    let words = pres.words();
    let (wx, wy) = (x.word_matrices(), y.word_matrices());
    // coordinates of δ: one block Y_t × X_s per generator
    let mut offs = Vec::new();
    let mut n = 0;
    for g in gens {
        offs.push(n);
        n += y.dims()[g.tgt] * x.dims()[g.src];
    }
    let delta_block = |d: &[K::Elem], gi: usize| {
        let g = &gens[gi];
        let (r, c) = (y.dims()[g.tgt], x.dims()[g.src]);
        Matrix::from_vec(k, r, c, d[offs[gi]..offs[gi] + r * c].to_vec())
    };
    let constraint = |d: &[K::Elem]| -> Vec<K::Elem> {
        let mut off: Vec<Matrix<K>> = Vec::new();
        for w in words {
            let m = match (w.parent, w.gen) {
                (Some(p), Some(g)) => y.act(g).mul(&off[p]).add(&delta_block(d, g).mul(&wx[p])),
                _ => Matrix::zeros(k, y.dims()[w.src], x.dims()[w.src]),
            };
            off.push(m);
        }
        let mut out = Vec::new();
        for (gi, g) in gens.iter().enumerate() {
            let act = pres.action(gi);
            for (wi, w) in words.iter().enumerate() {
                if w.tgt != g.src {
                    continue;
                }
                let mut m = y.act(gi).mul(&off[wi]).add(&delta_block(d, gi).mul(&wx[wi]));
                for (vi, v) in words.iter().enumerate() {
                    let c = act.get(vi, wi);
                    if !k.is_zero(c) && v.src == w.src {
                        m = m.sub(&off[vi].scale(c));
                    }
                }
                out.extend(m.data().iter().cloned());
            }
        }
        out
    };
    let _ = wy;
    let unit = |i: usize| (0..n).map(|j| if i == j { k.one() } else { k.zero() }).collect::<Vec<_>>();
    let cols: Vec<Vec<K::Elem>> = (0..n).map(|i| constraint(&unit(i))).collect();
    let rows = cols.first().map_or(0, |c| c.len());
    let z = if rows == 0 { n } else { n - Matrix::from_cols(k, rows, &cols).rank() };
    // coboundaries
    let mut b = Span::new(k, n);
    let nv = x.dims().len();
    for v in 0..nv {
        for i in 0..y.dims()[v] {
            for j in 0..x.dims()[v] {
                let mut d = vec![k.zero(); n];
                for (gi, g) in gens.iter().enumerate() {
                    let (r, c) = (y.dims()[g.tgt], x.dims()[g.src]);
                    let mut h_s = Matrix::zeros(k, y.dims()[g.src], c);
                    let mut h_t = Matrix::zeros(k, r, x.dims()[g.tgt]);
                    if g.src == v {
                        h_s.set(i, j, k.one());
                    }
                    if g.tgt == v {
                        h_t.set(i, j, k.one());
                    }
                    let m = y.act(gi).mul(&h_s).sub(&h_t.mul(x.act(gi)));
                    for (p, e) in m.data().iter().enumerate() {
                        d[offs[gi] + p] = e.clone();
                    }
                }
                b.insert(&d);
            }
        }
    }
    z - b.dim()
}

/// `dim Hom(X, Y)` by solving the intertwining equations on the full word basis.
pub fn hom_oracle<K: Field>(x: &Module<K>, y: &Module<K>) -> usize {
    let k = x.field();
    let (n, m) = (x.dim(), y.dim());
    if n == 0 || m == 0 {
        return 0;
    }
    let a = x.algebra();
    let elems: Vec<Vec<K::Elem>> = (0..a.dim()).map(|i| a.basis_vec(i)).collect();
    let mut rows = Vec::new();
    for e in &elems {
        let (ax, ay) = (x.act_elem(e), y.act_elem(e));
        for i in 0..m {
            for j in 0..n {
                // (F ρX(e) − ρY(e) F)_{ij}, with F an m×n matrix in row-major unknowns
                let mut row = vec![k.zero(); m * n];
                for l in 0..n {
                    let idx = i * n + l;
                    row[idx] = k.add(&row[idx], ax.get(l, j));
                }
                for l in 0..m {
                    let idx = l * n + j;
                    row[idx] = k.sub(&row[idx], ay.get(i, l));
                }
                rows.push(row);
            }
        }
    }
    m * n - Matrix::from_rows(k, m * n, &rows).rank()
}

/// All indecomposables of a Nakayama algebra: the quotients `P_v / J^k P_v`.
pub fn nakayama_indecomposables<K: Field>(a: &Alg<K>) -> Vec<Module<K>> {
    let mut out = Vec::new();
    for v in rejectia::homology::class_representatives(a) {
        let p = Module::projective(a, v);
        for k in 1..=p.loewy_length() {
            out.push(rejectia::subcat::radical_quotient(&p, k));
        }
    }
    out
}

/// `J(Y, X)` through `f∘g ∈ rad End(X)` for all `g: X → Y`, the opposite-side criterion.
pub fn jac_oracle<K: Field>(y: &Module<K>, x: &Module<K>, cfg: &Config) -> Vec<rejectia::Morphism<K>> {
    use rejectia::module::HomSpace;
    let k = x.field();
    let h = HomSpace::new(y, x).unwrap();
    let back = HomSpace::new(x, y).unwrap();
    if h.dim() == 0 || back.dim() == 0 {
        return h.basis;
    }
    let end = x.end_data(cfg).unwrap();
    let rad = Span::from_vectors(k, end.space.dim(), end.algebra.radical().iter());
    let cols: Vec<Vec<K::Elem>> = h
        .basis
        .iter()
        .map(|f| back.basis.iter().flat_map(|g| rad.reduce(&end.space.coords(&g.then(f)))).collect())
        .collect();
    let m = Matrix::from_cols(k, cols[0].len(), &cols);
    m.kernel_basis().to_cols().iter().map(|c| h.element(c)).collect()
}
