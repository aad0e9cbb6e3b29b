use matsuo_core::algebra::is_homomorphism;
use matsuo_core::constructions::{
    check_projection_cases, jordan_from_roots, jordan_product, jr_dimension, matsuo_algebra, matsuo_to_roots,
    proj_matrix, projection_case, MatsuoSpec, ProjectionCase,
};
use matsuo_core::fischer::{gamma_of_rootsystem, roots_of, RootType};
use matsuo_core::{FieldSpec, Matrix};

#[test]
fn case_formula_matches_matrix_products() {
    for field in [FieldSpec::Rationals, FieldSpec::Prime(5), FieldSpec::Prime(7)] {
        for t in [
            RootType::A(2),
            RootType::A(3),
            RootType::B2,
            RootType::G2,
            RootType::D(4),
        ] {
            let r = roots_of(t);
            assert_eq!(check_projection_cases(&r, field).unwrap(), None, "{t} over {field}");
        }
    }
}

#[test]
fn a2_product_by_hand() {
    // m_a ∙ m_b for a = e1 - e2, b = e2 - e3, c = e1 - e3, written out.
    let q = FieldSpec::Rationals;
    let ma = proj_matrix(q, &[1, -1, 0]).unwrap();
    let mb = proj_matrix(q, &[0, 1, -1]).unwrap();
    let mc = proj_matrix(q, &[1, 0, -1]).unwrap();
    let quarter = q.ratio(1, 4).unwrap();
    let want = ma.add(&mb).sub(&mc).scale(&quarter);
    assert_eq!(jordan_product(&ma, &mb), want);
    let by_hand = Matrix::from_i64_rows(q, &[&[0, -1, 1], &[-1, 2, -1], &[1, -1, 0]]).scale(&q.ratio(1, 8).unwrap());
    assert_eq!(want, by_hand);
}

#[test]
fn norm_ratios_per_system() {
    for (t, k) in [(RootType::B2, 2), (RootType::G2, 3)] {
        let r = roots_of(t);
        let n = r.positive_roots().len();
        let found = (0..n)
            .flat_map(|i| (0..n).map(move |j| (i, j)))
            .any(|(i, j)| matches!(projection_case(&r, i, j), ProjectionCase::Rank2 { k: kk, .. } if kk == k));
        assert!(found, "{t}");
    }
}

#[test]
fn g2_needs_characteristic_not_three() {
    assert!(check_projection_cases(&roots_of(RootType::G2), FieldSpec::Prime(3)).is_err());
    assert_eq!(
        check_projection_cases(&roots_of(RootType::G2), FieldSpec::Prime(5)).unwrap(),
        None
    );
}

#[test]
fn span_dimensions() {
    for (t, n) in [
        (RootType::A(1), 1),
        (RootType::A(2), 2),
        (RootType::A(3), 3),
        (RootType::A(4), 4),
        (RootType::A(5), 5),
        (RootType::D(4), 4),
        (RootType::D(5), 5),
        (RootType::E6, 6),
        (RootType::B2, 2),
        (RootType::G2, 2),
    ] {
        assert_eq!(jr_dimension(&roots_of(t), FieldSpec::Rationals), n * (n + 1) / 2, "{t}");
    }
}

#[test]
fn root_algebras_are_jordan() {
    for t in [RootType::A(3), RootType::B2, RootType::G2, RootType::D(4)] {
        let j = jordan_from_roots(&roots_of(t), FieldSpec::Rationals).unwrap();
        assert_eq!(j.algebra.dim(), jr_dimension(&roots_of(t), FieldSpec::Rationals));
        assert!(j.algebra.jordan_check().is_jordan(), "{t}");
    }
}

#[test]
fn matsuo_maps_onto_root_algebra() {
    let q = FieldSpec::Rationals;
    for (t, dims, injective) in [
        (RootType::A(2), (3, 3), true),
        (RootType::A(3), (6, 6), true),
        (RootType::A(4), (10, 10), true),
        (RootType::D(4), (12, 10), false),
    ] {
        let r = roots_of(t);
        let m = matsuo_algebra(&MatsuoSpec::half(gamma_of_rootsystem(&r).unwrap(), q));
        let j = jordan_from_roots(&r, q).unwrap();
        let f = matsuo_to_roots(&j);
        assert_eq!((m.dim(), j.algebra.dim()), dims, "{t}");
        assert!(is_homomorphism(&m, &j.algebra, &f), "{t}");
        assert_eq!(f.rank(), j.algebra.dim(), "{t} surjective");
        assert_eq!(f.kernel().is_zero(), injective, "{t}");
    }
}
