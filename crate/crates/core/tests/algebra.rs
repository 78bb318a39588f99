use rejectia::algebra::{Algebra, Hints};
use rejectia::catalog;
use rejectia::{Config, Error, Field, PrimeField, QuiverSpec, Rationals};

fn cfg() -> Config {
    Config::default()
}

/// Independent count of paths avoiding every relation as a contiguous block.
fn brute_path_count(q: &QuiverSpec, max_len: usize) -> usize {
    let mut count = q.vertices.len();
    let mut layer: Vec<Vec<usize>> = (0..q.arrows.len()).map(|a| vec![a]).collect();
    let name = |a: usize| q.arrows[a].name.clone();
    let zero = |p: &[usize]| {
        q.zero_relations.iter().any(|r| {
            p.windows(r.len()).any(|w| w.iter().map(|&a| name(a)).collect::<Vec<_>>() == *r)
        })
    };
    for _ in 0..max_len {
        layer.retain(|p| !zero(p));
        count += layer.len();
        let mut next = Vec::new();
        for p in &layer {
            let end = &q.arrows[*p.last().unwrap()].to;
            for (a, arr) in q.arrows.iter().enumerate() {
                if &arr.from == end {
                    let mut np = p.clone();
                    np.push(a);
                    next.push(np);
                }
            }
        }
        layer = next;
    }
    assert!(layer.iter().all(|p| zero(p)), "paths remain beyond the search depth");
    count
}

#[test]
fn dual_numbers() {
    let k = PrimeField::default();
    let a = catalog::truncated_poly(&k, 2, &cfg()).unwrap();
    assert_eq!(a.dim(), 2);
    assert_eq!(a.radical().len(), 1);
    assert_eq!(a.loewy_length(), 2);
    assert_eq!(a.num_vertices(), 1);
}

#[test]
fn cube_truncation_has_loewy_length_three() {
    let k = PrimeField::default();
    let a = catalog::truncated_poly(&k, 3, &cfg()).unwrap();
    assert_eq!(a.radical().len(), 2);
    assert_eq!(a.loewy_length(), 3);
}

#[test]
fn a2_path_algebra() {
    let k = PrimeField::default();
    let a = catalog::linear_an(&k, 2, &cfg()).unwrap();
    assert_eq!(a.dim(), 3);
    assert_eq!(a.idempotents().len(), 2);
    assert!(a.is_split_basic());
    let pres = a.presentation();
    assert_eq!(pres.generators().len(), 1);
    assert_eq!(pres.generators()[0].label, "a1");
}

#[test]
fn example_quivers_match_path_enumeration() {
    let k = PrimeField::default();
    for q in [catalog::rrc_example_quiver(), catalog::qh_example_quiver()] {
        let expect = brute_path_count(&q, 12);
        let a = Algebra::from_quiver(&q, &k, &cfg()).unwrap();
        assert_eq!(a.dim(), expect);
        assert_eq!(a.presentation().generators().len(), 4);
    }
    let a = Algebra::from_quiver(&catalog::rrc_example_quiver(), &k, &cfg()).unwrap();
    assert_eq!(a.dim(), 13);
}

#[test]
fn semisimple_and_field() {
    let k = PrimeField::default();
    let a = catalog::semisimple(&k, 3, &cfg()).unwrap();
    assert!(a.radical().is_empty());
    assert_eq!(a.idempotents().len(), 3);
    let one = Algebra::from_structure_constants(&k, vec!["1".into()], &[vec![vec![1]]], vec![1], &cfg()).unwrap();
    assert_eq!(one.idempotents().len(), 1);
    assert!(one.radical().is_empty());
}

#[test]
fn product_table_splits_without_hints() {
    let k = PrimeField::default();
    // k × k on basis (1, e) with e^2 = e
    let c = vec![vec![vec![1, 0], vec![0, 1]], vec![vec![0, 1], vec![0, 1]]];
    let a = Algebra::from_structure_constants(&k, vec!["1".into(), "e".into()], &c, vec![1, 0], &cfg()).unwrap();
    assert_eq!(a.idempotents().len(), 2);
    assert!(a.radical().is_empty());
}

#[test]
fn matrix_algebra_has_two_equivalent_idempotents() {
    for p in [2u32, 3, 101] {
        let k = PrimeField::new(p).unwrap();
        // M_2(k) with basis E11, E12, E21, E22
        let d = 4;
        let idx = |i: usize, j: usize| 2 * i + j;
        let mut c = vec![vec![vec![0u32; d]; d]; d];
        for i in 0..2 {
            for j in 0..2 {
                for l in 0..2 {
                    c[idx(i, j)][idx(j, l)][idx(i, l)] = 1;
                }
            }
        }
        let labels = vec!["E11".into(), "E12".into(), "E21".into(), "E22".into()];
        let a = Algebra::from_structure_constants(&k, labels, &c, vec![1, 0, 0, 1], &cfg()).unwrap();
        assert!(a.radical().is_empty(), "p = {p}");
        assert_eq!(a.idempotents().len(), 2);
        assert_eq!(a.num_classes(), 1);
        assert!(!a.is_split_basic());
    }
}

#[test]
fn radical_in_small_characteristic() {
    // group algebra of Z/2 over GF(2) is k[x]/(x^2) in disguise
    let k = PrimeField::new(2).unwrap();
    let c = vec![vec![vec![1, 0], vec![0, 1]], vec![vec![0, 1], vec![1, 0]]];
    let a = Algebra::from_structure_constants(&k, vec!["1".into(), "g".into()], &c, vec![1, 0], &cfg()).unwrap();
    assert_eq!(a.radical().len(), 1);
    assert_eq!(a.loewy_length(), 2);
    // Z/3 over GF(3)
    let k = PrimeField::new(3).unwrap();
    let mut c = vec![vec![vec![0u32; 3]; 3]; 3];
    for i in 0..3 {
        for j in 0..3 {
            c[i][j][(i + j) % 3] = 1;
        }
    }
    let a = Algebra::from_structure_constants(&k, vec!["1".into(), "g".into(), "g2".into()], &c, vec![1, 0, 0], &cfg())
        .unwrap();
    assert_eq!(a.radical().len(), 2);
    assert_eq!(a.loewy_length(), 3);
}

#[test]
fn field_extension_is_local() {
    // GF(9) = GF(3)[i]/(i^2+1) and Q(sqrt 2)
    let k = PrimeField::new(3).unwrap();
    let c = vec![vec![vec![1, 0], vec![0, 1]], vec![vec![0, 1], vec![2, 0]]];
    let a = Algebra::from_structure_constants(&k, vec!["1".into(), "i".into()], &c, vec![1, 0], &cfg()).unwrap();
    assert_eq!(a.idempotents().len(), 1);
    assert_eq!(a.local_dims(), &[2]);
    let q = Rationals;
    let two = q.from_i64(2);
    let c = vec![vec![vec![q.one(), q.zero()], vec![q.zero(), q.one()]], vec![vec![q.zero(), q.one()], vec![two, q.zero()]]];
    let a = Algebra::from_structure_constants(&q, vec!["1".into(), "r".into()], &c, vec![q.one(), q.zero()], &cfg())
        .unwrap();
    assert_eq!(a.idempotents().len(), 1);
}

#[test]
fn associativity_failure_is_reported() {
    let k = PrimeField::default();
    // unit 1, elements x, y with x*y = x but y*x = 0, x*x = y: not associative
    let d = 3;
    let mut c = vec![vec![vec![0u32; d]; d]; d];
    for i in 0..d {
        c[0][i][i] = 1;
        c[i][0][i] = 1;
    }
    c[1][2][1] = 1;
    c[1][1][2] = 1;
    let err = Algebra::from_structure_constants(&k, vec!["1".into(), "x".into(), "y".into()], &c, vec![1, 0, 0], &cfg())
        .unwrap_err();
    assert!(matches!(err, Error::Associativity(_, _, _)), "{err:?}");
}

#[test]
fn unbounded_quiver_hits_cap() {
    let k = PrimeField::default();
    let q = QuiverSpec::new(&["1"], &[("x", "1", "1")], &[]);
    let cfg = Config { cap_paths: 100, ..Config::default() };
    assert!(matches!(Algebra::from_quiver(&q, &k, &cfg), Err(Error::PathCap(100))));
}

#[test]
fn malformed_relation_is_rejected() {
    let k = PrimeField::default();
    let q = QuiverSpec::new(&["1", "2"], &[("a", "1", "2")], &[&["a", "a"]]);
    assert!(matches!(Algebra::from_quiver(&q, &k, &cfg()), Err(Error::Input(_))));
}

#[test]
fn opposite_is_involutive() {
    let k = PrimeField::default();
    let a = catalog::linear_an(&k, 2, &cfg()).unwrap();
    let op = a.opposite();
    assert!(std::sync::Arc::ptr_eq(&op.opposite(), &a));
    let arrows = &op.quiver().unwrap().arrows;
    assert_eq!((arrows[0].from.as_str(), arrows[0].to.as_str()), ("2", "1"));
    // table transpose oracle
    let d = a.dim();
    for i in 0..d {
        for j in 0..d {
            assert_eq!(op.product(i, j), a.product(j, i));
        }
    }
    let comm = catalog::truncated_poly(&k, 3, &cfg()).unwrap();
    assert_eq!(comm.opposite().table(), comm.table());
}

#[test]
fn quotient_and_corner_dimensions() {
    let k = PrimeField::default();
    let g = Algebra::from_quiver(&catalog::qh_example_quiver(), &k, &cfg()).unwrap();
    let v2 = g.vertex_index("2").unwrap();
    let e = g.idempotent_sum(&[v2]);
    // oracle: span of all b_i e b_j
    let mut span = rejectia::Span::new(&k, g.dim());
    for i in 0..g.dim() {
        for j in 0..g.dim() {
            span.insert(&g.mul(&g.mul(&g.basis_vec(i), &e), &g.basis_vec(j)));
        }
    }
    let q = g.quotient_by_idempotent(&[v2], &cfg()).unwrap();
    assert_eq!(q.algebra.dim() + span.dim(), g.dim());
    let all: Vec<usize> = (0..3).collect();
    assert_eq!(g.quotient_by_idempotent(&all, &cfg()).unwrap().algebra.dim(), 0);
    assert_eq!(g.quotient_by_idempotent(&[], &cfg()).unwrap().algebra.dim(), g.dim());
    let c = g.corner(&[v2], &cfg()).unwrap();
    assert_eq!(c.algebra.dim(), g.block_dim(v2, v2));
    // projection is an algebra morphism
    rejectia::algebra::AlgebraMorphism::new(g.clone(), q.algebra.clone(), q.projection.matrix.clone()).unwrap();
}

#[test]
fn bad_radical_hint_is_rejected() {
    let k = PrimeField::default();
    let q = catalog::truncated_poly_quiver(3);
    let a = Algebra::from_quiver(&q, &k, &cfg()).unwrap();
    // claim J^2 is the radical
    let hints = Hints { radical: Some(vec![a.basis_vec(2)]), ..Hints::default() };
    let r = Algebra::from_table(&k, a.labels().to_vec(), a.table().clone(), a.unit().to_vec(), hints, &cfg());
    assert!(r.is_err());
}
