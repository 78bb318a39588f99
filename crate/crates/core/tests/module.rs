use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rejectia::algebra::{Algebra, AlgebraMorphism};
use rejectia::module::{hom_dim, HomSpace};
use rejectia::{catalog, Config, Field, Matrix, Module, Morphism, PrimeField};

fn cfg() -> Config {
    Config::default()
}

fn layers_by_label(m: &Module<PrimeField>) -> Vec<Vec<String>> {
    let labels = m.algebra().vertex_labels().to_vec();
    m.radical_layers()
        .iter()
        .map(|l| {
            let mut out = Vec::new();
            for (v, &c) in l.iter().enumerate() {
                for _ in 0..c {
                    out.push(labels[v].clone());
                }
            }
            out
        })
        .collect()
}

#[test]
fn projectives_of_the_rrc_example_have_the_printed_layers() {
    let k = PrimeField::default();
    let a = Algebra::from_quiver(&catalog::rrc_example_quiver(), &k, &cfg()).unwrap();
    let p = |v: &str| Module::projective(&a, a.vertex_index(v).unwrap());
    let s = |xs: &[&[&str]]| xs.iter().map(|l| l.iter().map(|x| x.to_string()).collect()).collect::<Vec<Vec<String>>>();
    assert_eq!(layers_by_label(&p("1")), s(&[&["1"], &["2"], &["3"], &["1"], &["2"]]));
    assert_eq!(layers_by_label(&p("2")), s(&[&["2"], &["3"], &["1"], &["2"]]));
    assert_eq!(layers_by_label(&p("3")), s(&[&["3"], &["1", "1"], &["2"]]));
}

#[test]
fn simples_and_homs_for_a2() {
    let k = PrimeField::default();
    let a = catalog::linear_an(&k, 2, &cfg()).unwrap();
    let s1 = Module::simple(&a, 0);
    let s2 = Module::simple(&a, 1);
    assert_eq!(s1.dim(), 1);
    assert_eq!(hom_dim(&s1, &s1).unwrap(), 1);
    assert_eq!(hom_dim(&s1, &s2).unwrap(), 0);
    let reg = Module::regular(&a);
    assert_eq!(hom_dim(&reg, &reg).unwrap(), a.dim());
}

#[test]
fn truncated_polynomial_is_selfinjective() {
    let k = PrimeField::default();
    let a = catalog::truncated_poly(&k, 3, &cfg()).unwrap();
    let p = Module::projective(&a, 0);
    let i = Module::injective(&a, 0);
    assert_eq!(p.dim(), 3);
    assert_eq!(i.dim(), 3);
    assert!(std::sync::Arc::ptr_eq(i.algebra(), &a));
    let h = HomSpace::new(&p, &i).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    assert!((0..20).any(|_| h.random(&mut rng).is_iso()));
    assert_eq!(p.radical_submodule().src().dim(), 2);
    assert_eq!(p.socle().src().dim(), 1);
}

#[test]
fn yoneda_dimension_on_random_modules() {
    let k = PrimeField::default();
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for q in [catalog::rrc_example_quiver(), catalog::qh_example_quiver()] {
        let a = Algebra::from_quiver(&q, &k, &cfg()).unwrap();
        for _ in 0..5 {
            let x = random_quotient_of_regular(&a, &mut rng);
            for v in 0..a.num_vertices() {
                let p = Module::projective(&a, v);
                assert_eq!(hom_dim(&p, &x).unwrap(), x.dims()[v]);
            }
            // duality
            let y = random_quotient_of_regular(&a, &mut rng);
            assert_eq!(hom_dim(&x, &y).unwrap(), hom_dim(&y.dual(), &x.dual()).unwrap());
        }
    }
}

fn random_quotient_of_regular(a: &rejectia::Alg<PrimeField>, rng: &mut ChaCha8Rng) -> Module<PrimeField> {
    let k = a.field();
    let reg = Module::regular(a);
    let x: Vec<u32> = (0..reg.dim()).map(|_| if rand::Rng::gen_bool(rng, 0.3) { k.random(rng) } else { 0 }).collect();
    let sub = reg.submodule_of_vectors(&[x]);
    reg.quotient(&sub).tgt().clone()
}

#[test]
fn morphisms_from_constructions_intertwine() {
    let k = PrimeField::default();
    let a = Algebra::from_quiver(&catalog::qh_example_quiver(), &k, &cfg()).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..5 {
        let x = random_quotient_of_regular(&a, &mut rng);
        let y = random_quotient_of_regular(&a, &mut rng);
        let h = HomSpace::new(&x, &y).unwrap();
        for f in &h.basis {
            f.check().unwrap();
            let ker = f.kernel();
            ker.check().unwrap();
            let im = f.image();
            im.check().unwrap();
            let cok = f.cokernel();
            cok.check().unwrap();
            assert_eq!(ker.src().dim() + im.src().dim(), x.dim());
            assert_eq!(im.src().dim() + cok.tgt().dim(), y.dim());
        }
        x.top().check().unwrap();
        x.socle().check().unwrap();
    }
}

#[test]
fn representation_and_action_forms_agree() {
    let k = PrimeField::default();
    let a = catalog::linear_an(&k, 2, &cfg()).unwrap();
    let m = Module::from_representation(&a, &[1, 1], &[("a1".to_string(), Matrix::from_i64(&k, &[vec![1]]))]).unwrap();
    let p1 = Module::projective(&a, 0);
    assert_eq!(m.dims(), p1.dims());
    let raw = m.basis_action();
    let m2 = Module::from_action(&a, &raw).unwrap();
    assert_eq!(m2.dims(), m.dims());
    let bad = Module::from_representation(&a, &[1, 2], &[("a1".to_string(), Matrix::from_i64(&k, &[vec![1]]))]);
    assert!(bad.is_err());
}

#[test]
fn restriction_along_identity_and_quotient() {
    let k = PrimeField::default();
    let g = Algebra::from_quiver(&catalog::qh_example_quiver(), &k, &cfg()).unwrap();
    let x = Module::projective(&g, 0);
    let id = AlgebraMorphism::identity(&g);
    assert_eq!(x.restrict_along(&id).unwrap().dims(), x.dims());
    let v2 = g.vertex_index("2").unwrap();
    let q = g.quotient_by_idempotent(&[v2], &cfg()).unwrap();
    for v in 0..q.algebra.num_vertices() {
        let s = Module::simple(&q.algebra, v);
        let inflated = s.restrict_along(&q.projection).unwrap();
        assert_eq!(inflated.dim(), 1);
        let orig = q.vertices[v];
        assert_eq!(inflated.dims()[orig], 1);
    }
}

#[test]
fn endomorphism_algebra_of_regular_module() {
    let k = PrimeField::default();
    let a = catalog::truncated_poly(&k, 2, &cfg()).unwrap();
    let (e, _) = Module::regular(&a).endomorphism_algebra(&cfg()).unwrap();
    assert_eq!(e.dim(), 2);
    assert_eq!(e.radical().len(), 1);
    let b = catalog::linear_an(&k, 2, &cfg()).unwrap();
    let s = Module::direct_sum(&b, &[Module::simple(&b, 0), Module::simple(&b, 1)]).0;
    let (e, _) = s.endomorphism_algebra(&cfg()).unwrap();
    assert_eq!(e.dim(), 2);
    assert!(e.radical().is_empty());
    assert_eq!(e.num_vertices(), 2);
}

#[test]
fn morphism_identity_and_zero() {
    let k = PrimeField::default();
    let a = catalog::truncated_poly(&k, 3, &cfg()).unwrap();
    let x = Module::regular(&a);
    let id = Morphism::identity(&x);
    assert_eq!(id.kernel().src().dim(), 0);
    assert!(id.is_iso());
    assert!(Morphism::zero(&x, &x).is_zero());
}
