//! Generators and a word basis adapted to the primitive idempotents.

use crate::exactla::{Field, Matrix, Span};

use super::Algebra;

/// An element of `e_tgt A e_src`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Generator<E> {
    pub elem: Vec<E>,
    pub src: usize,
    pub tgt: usize,
    /// Lies in the radical (an arrow for quiver algebras).
    pub radical: bool,
    pub label: String,
}

impl<E: Clone> Generator<E> {
    /// The same element viewed in the opposite algebra.
    pub fn swapped(&self) -> Self {
        Generator { elem: self.elem.clone(), src: self.tgt, tgt: self.src, radical: self.radical, label: self.label.clone() }
    }
}

/// A word `g_k ⋯ g_1 e_src`, stored through its parent.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Word {
    pub src: usize,
    pub tgt: usize,
    pub parent: Option<usize>,
    pub gen: Option<usize>,
}

#[derive(Clone, Debug)]
pub struct Presentation<K: Field> {
    gens: Vec<Generator<K::Elem>>,
    words: Vec<Word>,
    elems: Vec<Vec<K::Elem>>,
    w_inv: Matrix<K>,
    /// Left action of each generator on the regular module, in word coordinates.
    action: Vec<Matrix<K>>,
    from: Vec<Vec<usize>>,
}

impl<K: Field> Presentation<K> {
    pub fn build(alg: &Algebra<K>) -> Self {
        let k = alg.field();
        let d = alg.dim();
        let n = alg.num_vertices();
        let es = alg.idempotents();
        let proj = |t: usize, x: &[K::Elem], s: usize| alg.mul(&alg.mul(&es[t], x), &es[s]);
        let mut gens = Vec::new();
        let label_of = |x: &[K::Elem], idx: usize| -> String {
            let nz: Vec<usize> = (0..d).filter(|&i| !k.is_zero(&x[i])).collect();
            if nz.len() == 1 && k.is_one(&x[nz[0]]) {
                alg.labels()[nz[0]].clone()
            } else {
                format!("g{idx}")
            }
        };
        // radical generators: complement of e_t J^2 e_s in e_t J e_s
        let j2 = alg.radical_power(2);
        let mut spans: Vec<Span<K>> = Vec::with_capacity(n * n);
        for t in 0..n {
            for s in 0..n {
                let mut sp = Span::new(k, d);
                for x in &j2 {
                    sp.insert(&proj(t, x, s));
                }
                spans.push(sp);
            }
        }
        for j in alg.radical() {
            for t in 0..n {
                for s in 0..n {
                    let x = proj(t, j, s);
                    if spans[t * n + s].insert(&x) {
                        let label = label_of(&x, gens.len());
                        gens.push(Generator { elem: x, src: s, tgt: t, radical: true, label });
                    }
                }
            }
        }
        // semisimple generators: complement of e_t J e_s (+ k e_s) in e_t A e_s
        let mut spans: Vec<Span<K>> = Vec::with_capacity(n * n);
        for t in 0..n {
            for s in 0..n {
                let mut sp = Span::new(k, d);
                for x in alg.radical() {
                    sp.insert(&proj(t, x, s));
                }
                if t == s {
                    sp.insert(&es[s]);
                }
                spans.push(sp);
            }
        }
        for i in 0..d {
            let b = alg.basis_vec(i);
            for t in 0..n {
                for s in 0..n {
                    let x = proj(t, &b, s);
                    if spans[t * n + s].insert(&x) {
                        let label = label_of(&x, gens.len());
                        gens.push(Generator { elem: x, src: s, tgt: t, radical: false, label });
                    }
                }
            }
        }
        Self::with_generators(alg, gens)
    }

    /// Word basis for a fixed generating set.
    pub fn with_generators(alg: &Algebra<K>, gens: Vec<Generator<K::Elem>>) -> Self {
        let k = alg.field();
        let d = alg.dim();
        let n = alg.num_vertices();
        let mut words = Vec::new();
        let mut elems = Vec::new();
        let mut span = Span::new(k, d);
        for v in 0..n {
            let e = alg.idempotents()[v].clone();
            span.insert(&e);
            words.push(Word { src: v, tgt: v, parent: None, gen: None });
            elems.push(e);
        }
        let mut head = 0;
        while head < words.len() {
            let tgt = words[head].tgt;
            for (gi, g) in gens.iter().enumerate() {
                if g.src != tgt {
                    continue;
                }
                let x = alg.mul(&g.elem, &elems[head]);
                if span.insert(&x) {
                    words.push(Word { src: words[head].src, tgt: g.tgt, parent: Some(head), gen: Some(gi) });
                    elems.push(x);
                }
            }
            head += 1;
        }
        assert_eq!(words.len(), d, "generators must generate the algebra");
        let w = Matrix::from_cols(k, d, &elems);
        let w_inv = w.inverse().expect("word basis is a basis");
        let action = gens
            .iter()
            .map(|g| {
                let cols: Vec<Vec<K::Elem>> = elems.iter().map(|x| w_inv.mul_vec(&alg.mul(&g.elem, x))).collect();
                Matrix::from_cols(k, d, &cols)
            })
            .collect();
        let mut from = vec![Vec::new(); n];
        for (i, w) in words.iter().enumerate() {
            from[w.src].push(i);
        }
        Presentation { gens, words, elems, w_inv, action, from }
    }

    pub fn generators(&self) -> &[Generator<K::Elem>] {
        &self.gens
    }
    pub fn words(&self) -> &[Word] {
        &self.words
    }
    /// Word elements in the algebra basis.
    pub fn word_elems(&self) -> &[Vec<K::Elem>] {
        &self.elems
    }
    /// Word coordinates of an algebra element.
    pub fn coords(&self, x: &[K::Elem]) -> Vec<K::Elem> {
        self.w_inv.mul_vec(x)
    }
    pub fn action(&self, g: usize) -> &Matrix<K> {
        &self.action[g]
    }
    /// Words starting at vertex `v`, i.e. a basis of `A e_v`.
    pub fn words_from(&self, v: usize) -> &[usize] {
        &self.from[v]
    }
    pub fn generator_index(&self, label: &str) -> Option<usize> {
        self.gens.iter().position(|g| g.label == label)
    }
}
