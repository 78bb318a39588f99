mod common;

use common::*;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rejectia::algebra::Algebra;
use rejectia::decomp::{decompose, is_isomorphic};
use rejectia::homology::{is_projective, min_resolution, pd, phi_psi, projective_cover, syzygy};
use rejectia::module::hom_dim;
use rejectia::subcat::{f_c, Subcategory};
use rejectia::{catalog, Alg, Field, Matrix, Module, PrimeField, Rationals};

fn algebras() -> Vec<Alg<Fp>> {
    let k = PrimeField::new(7).unwrap();
    [catalog::rrc_example_quiver(), catalog::qh_example_quiver(), catalog::truncated_poly_quiver(3)]
        .iter()
        .map(|q| Algebra::from_quiver(q, &k, &cfg()).unwrap())
        .collect()
}

fn config() -> ProptestConfig {
    ProptestConfig { cases: 24, failure_persistence: None, ..ProptestConfig::default() }
}

proptest! {
    #![proptest_config(config())]

    #[test]
    fn prime_field_axioms(a in 0u32..101, b in 0u32..101, c in 0u32..101) {
        let k = PrimeField::new(101).unwrap();
        prop_assert_eq!(k.mul(&a, &k.add(&b, &c)), k.add(&k.mul(&a, &b), &k.mul(&a, &c)));
        prop_assert_eq!(k.add(&a, &k.neg(&a)), 0);
        if a != 0 {
            prop_assert_eq!(k.mul(&a, &k.inv(&a).unwrap()), 1);
        }
    }

    #[test]
    fn rational_field_axioms(a in -50i64..50, b in 1i64..50) {
        let q = Rationals;
        let x = q.div(&q.from_i64(a), &q.from_i64(b)).unwrap();
        prop_assert_eq!(q.mul(&x, &q.from_i64(b)), q.from_i64(a));
        prop_assert!(q.is_zero(&q.sub(&x, &x)));
    }

    #[test]
    fn rank_nullity(seed in any::<u64>(), r in 1usize..6, c in 1usize..6) {
        let k = PrimeField::new(5).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let m = Matrix::from_fn(&k, r, c, |_, _| k.random(&mut rng));
        let ker = m.kernel_basis();
        prop_assert_eq!(m.rank() + ker.cols(), c);
        prop_assert!(m.mul(&ker).is_zero());
        prop_assert_eq!(m.transpose().rank(), m.rank());
    }

    #[test]
    fn scrambled_modules_are_isomorphic(seed in any::<u64>(), which in 0usize..3) {
        let a = &algebras()[which];
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let x = random_small_module(a, 6, &mut rng);
        let y = scramble(&x, &mut rng);
        prop_assert!(is_isomorphic(&x, &y, &cfg()).unwrap());
        prop_assert_eq!(hom_dim(&x, &y).unwrap(), hom_oracle(&x, &y));
    }

    #[test]
    fn decompositions_reassemble(seed in any::<u64>(), which in 0usize..3) {
        let a = &algebras()[which];
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let x = random_small_module(a, 6, &mut rng);
        let y = random_small_module(a, 6, &mut rng);
        let (s, _, _) = Module::direct_sum(a, &[x.clone(), y.clone()]);
        let d = decompose(&s, &cfg()).unwrap();
        let total: usize = d.parts.iter().map(|(m, c)| m.dim() * c).sum();
        prop_assert_eq!(total, x.dim() + y.dim());
        let parts: Vec<Module<Fp>> = d.parts.iter().flat_map(|(m, c)| std::iter::repeat(m.clone()).take(*c)).collect();
        prop_assert!(is_isomorphic(&Module::direct_sum(a, &parts).0, &s, &cfg()).unwrap());
    }

    #[test]
    fn syzygy_dimensions_and_resolutions(seed in any::<u64>(), which in 0usize..3) {
        let a = &algebras()[which];
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let x = random_small_module(a, 6, &mut rng);
        prop_assert_eq!(projective_cover(&x).src().dim(), x.dim() + syzygy(&x).dim());
        min_resolution(&x, 5, &cfg()).unwrap().verify().unwrap();
    }

    #[test]
    fn pd_of_sum_is_max_and_psi_is_monotone(seed in any::<u64>(), which in 0usize..3) {
        let a = &algebras()[which];
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let x = random_small_module(a, 5, &mut rng);
        let y = random_small_module(a, 5, &mut rng);
        let (s, _, _) = Module::direct_sum(a, &[x.clone(), y.clone()]);
        prop_assert_eq!(pd(&s, &cfg()).unwrap(), pd(&x, &cfg()).unwrap().max(pd(&y, &cfg()).unwrap()));
        if let (Some(p), Some(q)) = (phi_psi(&x, &cfg()).unwrap().psi, phi_psi(&s, &cfg()).unwrap().psi) {
            prop_assert!(p <= q);
        }
    }

    #[test]
    fn radical_functor_is_a_monotone_submodule(seed in any::<u64>(), which in 0usize..3) {
        let a = &algebras()[which];
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let x = random_small_module(a, 6, &mut rng);
        let y = random_small_module(a, 6, &mut rng);
        let small = Subcategory::add(a, &[y.clone()], &cfg()).unwrap();
        let big = Subcategory::add(a, &[y, Module::regular(a)], &cfg()).unwrap();
        let fs = f_c(&small, &x, &cfg()).unwrap();
        let fb = f_c(&big, &x, &cfg()).unwrap();
        prop_assert!(fs.is_mono() && fb.is_mono());
        prop_assert!(fs.src().dim() <= fb.src().dim());
        let pr = Subcategory::add(a, &[Module::regular(a)], &cfg()).unwrap();
        let fp = f_c(&pr, &x, &cfg()).unwrap();
        prop_assert!(fp.src().dim() >= x.radical_submodule().src().dim());
        let d = decompose(&x, &cfg()).unwrap();
        if d.parts.iter().all(|(m, _)| !is_projective(m)) {
            prop_assert_eq!(fp.src().dim(), x.dim());
        }
        prop_assert!(fp.src().dim() <= fb.src().dim());
    }
}
