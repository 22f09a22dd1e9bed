use mirabolic::corpus::{
    normal_form_corpus, orbit_corpus, random_label, random_p_element, DEFAULT_SEED,
};
use mirabolic::linalg::{jordan_structure, sylvester_solve};
use mirabolic::rep::{all_sign_vectors, attach_rep_p, induced_signs};
use mirabolic::*;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn small_matrix(rows: usize, cols: usize) -> impl Strategy<Value = ExactMatrix> {
    proptest::collection::vec((-3i64..=3, 1i64..=3), rows * cols).prop_map(move |v| {
        let data = v
            .into_iter()
            .map(|(p, q)| Scalar::from_ratio(p, q))
            .collect();
        ExactMatrix::new(rows, cols, data).unwrap()
    })
}

fn invertible(n: usize) -> impl Strategy<Value = ExactMatrix> {
    small_matrix(n, n).prop_filter("invertible", |m| m.inverse().is_some())
}

fn partition() -> impl Strategy<Value = Partition> {
    proptest::collection::vec(1usize..=6, 0..8).prop_map(Partition::from_unsorted)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn rank_is_invariant_under_equivalence(m in small_matrix(3, 4), g in invertible(3), h in invertible(4)) {
        prop_assert_eq!((&(&g * &m) * &h).rank(), m.rank());
    }

    #[test]
    fn sylvester_solutions_satisfy_the_equation(
        b in small_matrix(2, 2), c in small_matrix(3, 3), r in small_matrix(3, 2)
    ) {
        match sylvester_solve(&b, &c, &r) {
            Ok(m) => prop_assert_eq!(&(&m * &b) - &(&c * &m), r),
            Err(e) => prop_assert_eq!(e, Error::SingularSylvester),
        }
    }

    #[test]
    fn kernel_vectors_are_annihilated(m in small_matrix(3, 5)) {
        let k = m.kernel();
        prop_assert_eq!(k.len(), m.nullity());
        for v in k {
            prop_assert!(m.mul_vec(&v).iter().all(Scalar::is_zero));
        }
    }

    #[test]
    fn dual_is_an_involution(p in partition()) {
        prop_assert_eq!(p.dual().dual(), p.clone());
        prop_assert_eq!(p.dual().weight(), p.weight());
        prop_assert_eq!(p.dual().len(), p.largest().unwrap_or(0));
    }

    #[test]
    fn projection_is_idempotent_and_linear(x in small_matrix(4, 4), y in small_matrix(4, 4)) {
        let px = project_to_p_star(&x);
        prop_assert_eq!(project_to_p_star(&px), px.clone());
        prop_assert_eq!(project_to_p_star(&(&x + &y)), &px + &project_to_p_star(&y));
    }

    #[test]
    fn jordan_structure_is_conjugation_invariant(g in invertible(3)) {
        let j = ExactMatrix::jordan_block(2, &Scalar::one());
        let m = ExactMatrix::block_diag(&[j, ExactMatrix::diagonal(&[Scalar::from_int(-1)])]);
        let js = jordan_structure(&m.conjugate_by(&g).unwrap(), &[Scalar::one(), Scalar::from_int(-1)]).unwrap();
        prop_assert_eq!(js[&Scalar::one()].parts(), &[2]);
        prop_assert_eq!(js[&Scalar::from_int(-1)].parts(), &[1]);
    }

    #[test]
    fn adduction_is_multiplicative(seed in any::<u64>(), real in any::<bool>()) {
        let field = if real { Field::Real } else { Field::Complex };
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (l1, l2) = (random_label(field, &mut rng), random_label(field, &mut rng));
        let (j1, a1) = l1.adduce();
        let (j2, a2) = l2.adduce();
        let (j, a) = l1.times(&l2).unwrap().adduce();
        prop_assert_eq!(j, j1 + j2);
        prop_assert_eq!(a, a1.times(&a2).unwrap());
    }
}

#[test]
fn jordan_structure_recovers_every_partition() {
    for w in 1..=6 {
        for p in Partition::all(w) {
            let a = Scalar::from_ratio(-2, 3);
            let o = OrbitDatum::complex(vec![(a.clone(), p.clone())]).unwrap();
            let js = jordan_structure(&o.realize_xi(), &[a.clone()]).unwrap();
            assert_eq!(js[&a], p);
        }
    }
}

#[test]
fn jordan_structure_survives_a_hundred_conjugations() {
    let mut rng = ChaCha8Rng::seed_from_u64(DEFAULT_SEED);
    let m = ExactMatrix::jordan_block(2, &Scalar::one());
    for _ in 0..100 {
        // the Levi block of a random mirabolic element is a random invertible matrix
        let g = random_p_element(3, &mut rng).submatrix(0, 0, 2, 2);
        let js = jordan_structure(&m.conjugate_by(&g).unwrap(), &[Scalar::one()]).unwrap();
        assert_eq!(js[&Scalar::one()].parts(), &[2]);
    }
}

#[test]
fn realized_orbits_have_their_jordan_data() {
    for o in orbit_corpus(Field::Real, 4)
        .into_iter()
        .chain(orbit_corpus(Field::Complex, 4))
    {
        let xi = o.realize_xi();
        assert_eq!(xi.rows(), o.size());
        let js = jordan_structure(&xi, &o.eigenvalue_hints()).unwrap();
        assert_eq!(OrbitDatum::from_jordan_data(o.field(), &js).unwrap(), o);
        assert_eq!(centralizer_dim(&xi), o.centralizer_dim(), "{o}");
    }
}

#[test]
fn selections_are_valid_distinct_and_contain_the_dense_one() {
    for o in orbit_corpus(Field::Real, 5)
        .into_iter()
        .chain(orbit_corpus(Field::Complex, 5))
    {
        let sels = enumerate_selections(&o);
        let dense = dense_selection(&o);
        assert_eq!(sels.iter().filter(|s| **s == dense).count(), 1, "{o}");
        let mut vs = Vec::new();
        let n = o.size();
        for s in &sels {
            s.validate(&o).unwrap();
            let v = build_v_i(&o, s);
            let mut e = vec![Scalar::zero(); n];
            e[n - 1] = Scalar::one();
            assert_eq!(build_g_i(&o, s).left_mul_row(&e), v);
            assert!(build_g_i(&o, s).inverse().is_some());
            vs.push(v);
        }
        vs.sort();
        vs.dedup();
        assert_eq!(vs.len(), sels.len(), "{o}");
    }
}

#[test]
fn images_conserve_weight_and_dense_depth_is_maximal() {
    for o in orbit_corpus(Field::Real, 5)
        .into_iter()
        .chain(orbit_corpus(Field::Complex, 5))
    {
        for s in enumerate_selections(&o) {
            let m = symbolic_image(&o, &s).unwrap();
            assert_eq!(m.size(), o.size());
        }
        let dense = symbolic_image(&o, &dense_selection(&o)).unwrap();
        let expected: usize = o
            .classes()
            .iter()
            .map(|c| c.eigenvalue.multiplicity() * c.partition.largest().unwrap())
            .sum();
        assert_eq!(dense.depth(), expected, "{o}");
        for c in dense.a_part().classes() {
            let orig = o
                .classes()
                .iter()
                .find(|d| d.eigenvalue == c.eigenvalue)
                .unwrap();
            assert_eq!(c.partition, orig.partition.remove_largest_part().unwrap());
        }
    }
}

#[test]
fn geometry_checks_pass_on_small_orbits() {
    for o in orbit_corpus(Field::Complex, 4)
        .into_iter()
        .chain(orbit_corpus(Field::Real, 4))
    {
        let r = check_geometry(&o).unwrap();
        assert!(r.passed(), "{o}: {:?}", r.witnesses);
    }
}

#[test]
fn normal_forms_classify_to_themselves() {
    for m in normal_form_corpus(Field::Complex, 5)
        .into_iter()
        .chain(normal_form_corpus(Field::Real, 5))
    {
        let c = classify_with_certificate(&m.realize(), m.field(), &m.a_part().eigenvalue_hints())
            .unwrap();
        assert_eq!(c.datum, m);
        assert_eq!(c.normal_form, m.realize());
        let stab = stabilizer_dim(&m.realize());
        assert_eq!(stab, m.predicted_stabilizer_dim(), "{m}");
        assert_eq!(m.depth() == m.size(), stab == 0);
    }
}

#[test]
fn fibers_over_non_strongly_regular_points_have_positive_stabilizers() {
    let mut rng = ChaCha8Rng::seed_from_u64(DEFAULT_SEED);
    for m in normal_form_corpus(Field::Complex, 4)
        .into_iter()
        .filter(|m| m.depth() < m.size())
    {
        let x = m.realize();
        let n = x.rows();
        for _ in 0..10 {
            let mut z = x.clone();
            for i in 0..n {
                z.set(
                    i,
                    n - 1,
                    Scalar::from_int(rand::Rng::gen_range(&mut rng, -3..=3)),
                );
            }
            assert!(point_stabilizer_dim(&z) >= 1, "{m}");
        }
    }
}

#[test]
fn unipotent_restriction_drops_one_from_each_dual_part() {
    for w in 1..=8 {
        for p in Partition::all(w) {
            let o = OrbitDatum::complex(vec![(Scalar::zero(), p.clone())]).unwrap();
            let r = attach_rep_gl(&o, None).unwrap().restrict_to_p().unwrap();
            assert_eq!(r.depth(), p.largest().unwrap());
            let ts: Vec<usize> = r.adduced().factors().iter().map(Factor::t).collect();
            let expected: Vec<usize> = p
                .dual()
                .parts()
                .iter()
                .map(|t| t - 1)
                .filter(|&t| t > 0)
                .collect();
            assert_eq!(ts, expected);
            let rest = p.remove_largest_part().unwrap();
            let a = if rest.is_empty() {
                OrbitDatum::empty(Field::Complex)
            } else {
                OrbitDatum::complex(vec![(Scalar::zero(), rest)]).unwrap()
            };
            let omega = MirabolicOrbitDatum::new(p.largest().unwrap(), a).unwrap();
            assert_eq!(attach_rep_p(&omega, None).unwrap(), r);
        }
    }
}

#[test]
fn attached_labels_have_the_orbit_size() {
    for o in orbit_corpus(Field::Real, 6) {
        for s in all_sign_vectors(&o) {
            assert_eq!(attach_rep_gl(&o, Some(&s)).unwrap().size(), o.size());
            let dense = symbolic_image(&o, &dense_selection(&o)).unwrap();
            let p = attach_rep_p(&dense, Some(&induced_signs(&o, &s))).unwrap();
            assert_eq!(p.size(), o.size());
        }
    }
}

#[test]
fn non_real_complex_eigenvalues_are_classified_but_not_attached() {
    let o = OrbitDatum::complex(vec![
        (Scalar::gaussian(1, 1), Partition::new(vec![2]).unwrap()),
        (Scalar::from_int(0), Partition::new(vec![1]).unwrap()),
    ])
    .unwrap();
    for s in enumerate_selections(&o) {
        assert_eq!(
            oracle_image(&o, &s).unwrap(),
            symbolic_image(&o, &s).unwrap()
        );
    }
    assert!(matches!(
        attach_rep_gl(&o, None),
        Err(Error::UnsupportedOrbitShape(_))
    ));
}
