use std::sync::Arc;

use super::*;
use crate::field_tower::{ConstScalar, Monomial, RatFunc, TowerElement, TowerSpec};
use crate::lie::{make_sl, make_so, LieElement};
use crate::sample;

fn sl_elem(
    alg: &Arc<crate::lie::DLieAlgebra>,
    spec: &Arc<TowerSpec>,
    terms: &[(usize, TowerElement)],
) -> LieElement {
    let mut x = LieElement::zero(alg, spec);
    for (i, c) in terms {
        x = x
            .try_add(&LieElement::basis(alg, spec, *i).scale(c).unwrap())
            .unwrap();
    }
    x
}

#[test]
fn type_a_generator_examples() {
    let act = action_typeA_Z2(3, &RatFunc::t()).unwrap();
    let (g, spec) = (act.algebra().clone(), act.spec().clone());
    let one = TowerElement::one(&spec);
    let r2 = TowerElement::sqrt_alpha(&spec).unwrap();

    let skew = sl_elem(
        &g,
        &spec,
        &[(g.e(0, 1), one.clone()), (g.e(1, 0), one.neg())],
    );
    assert_eq!(act.apply_generator(0, &skew).unwrap(), skew);

    let sym = sl_elem(
        &g,
        &spec,
        &[(g.e(0, 1), one.clone()), (g.e(1, 0), one.clone())],
    );
    assert_eq!(act.apply_generator(0, &sym).unwrap(), sym.neg());
    let rsym = sym.scale(&r2).unwrap();
    assert_eq!(act.apply_generator(0, &rsym).unwrap(), rsym);
}

#[test]
fn type_a_rejects_small_n_and_square_alpha() {
    assert!(matches!(
        action_typeA_Z2(2, &RatFunc::t()),
        Err(DescentError::Ineligible(_))
    ));
    let t2 = RatFunc::t()
        .pow(2)
        .unwrap()
        .scale(&ConstScalar::from_int(5));
    assert!(matches!(
        action_typeA_Z2(3, &t2),
        Err(DescentError::Ineligible(_))
    ));
}

#[test]
fn type_d_generator_examples() {
    let act = action_typeD_Z2(8, &RatFunc::t()).unwrap();
    let (g, spec) = (act.algebra().clone(), act.spec().clone());
    let one = TowerElement::one(&spec);
    let r2 = TowerElement::sqrt_alpha(&spec).unwrap();

    let y = sl_elem(&g, &spec, &[(g.f(2, 5), one.clone())]);
    assert_eq!(act.apply_generator(0, &y).unwrap(), y);
    let x = sl_elem(&g, &spec, &[(g.f(0, 1), one.clone())]);
    assert_eq!(act.apply_generator(0, &x).unwrap(), x.neg());
    let rx = x.scale(&r2).unwrap();
    assert_eq!(act.apply_generator(0, &rx).unwrap(), rx);

    assert!(action_typeD_Z2(7, &RatFunc::t()).is_err());
    assert!(action_typeD_Z2(6, &RatFunc::t()).is_err());
}

#[test]
fn trivial_group_gives_full_algebra() {
    let g = make_sl(2).unwrap();
    let k = TowerSpec::base();
    let f = fixed_points(&action_trivial(&g, &k));
    assert_eq!(f.dim(), 3);
    assert!(verify_descent(&f, None).unwrap().passed());
}

#[test]
fn type_a_fixed_points_dimension_and_report() {
    let act = action_typeA_Z2(3, &RatFunc::t()).unwrap();
    let f = fixed_points(&act);
    assert_eq!(f.dim(), 8);
    let report = verify_descent(&f, Some(&act)).unwrap();
    assert!(report.passed(), "{report}");

    let short = f.without(3);
    let report = verify_descent(&short, Some(&act)).unwrap();
    assert!(!report.get("dimension").unwrap().passed);
    assert!(!report.get("split").unwrap().passed);
}

#[test]
fn non_fixed_vector_is_caught() {
    let act = action_typeA_Z2(3, &RatFunc::t()).unwrap();
    let mut f = fixed_points(&act);
    let (g, spec) = (act.algebra().clone(), act.spec().clone());
    f.basis[0] = sl_elem(&g, &spec, &[(g.e(0, 1), TowerElement::one(&spec))]);
    assert!(!is_fixed(&f, &act).unwrap());
    assert!(
        !verify_descent(&f, Some(&act))
            .unwrap()
            .get("fixed")
            .unwrap()
            .passed
    );
}

#[test]
fn type_d_fixed_points_dimension() {
    let act = action_typeD_Z2(8, &RatFunc::t()).unwrap();
    let f = fixed_points(&act);
    assert_eq!(f.dim(), 28);
    assert!(verify_descent(&f, Some(&act)).unwrap().passed());
}

#[test]
fn subspace_equal_requires_same_ambient() {
    let a = fixed_points(&action_typeA_Z2(3, &RatFunc::t()).unwrap());
    let d = fixed_points(&action_typeD_Z2(8, &RatFunc::t()).unwrap());
    assert!(subspace_equal(&a, &a).unwrap());
    assert_eq!(subspace_equal(&a, &d), Err(DescentError::AmbientMismatch));
    assert!(!subspace_equal(&a, &a.without(0)).unwrap());
}

#[test]
fn triality_map_is_an_automorphism_of_order_three() {
    let g = make_so(8).unwrap();
    let k = TowerSpec::base();
    let s = seven_linear_map(&triality_matrix());
    for i in 0..28 {
        let x = LieElement::basis(&g, &k, i);
        let s3 = x.apply_linear(&s).apply_linear(&s).apply_linear(&s);
        assert_eq!(s3, x);
        for j in i + 1..28 {
            let y = LieElement::basis(&g, &k, j);
            let lhs = x.bracket(&y).unwrap().apply_linear(&s);
            let rhs = x.apply_linear(&s).bracket(&y.apply_linear(&s)).unwrap();
            assert_eq!(lhs, rhs, "basis pair ({i}, {j})");
        }
    }
}

#[test]
fn flip_on_seven_vectors_is_conjugation() {
    let g = make_so(8).unwrap();
    assert_eq!(seven_linear_map(&flip_matrix()), conjugation_by_flip(&g));
}

#[test]
fn sigma_fixes_eigen_times_radical() {
    let spec = TowerSpec::cubic(RatFunc::t()).unwrap();
    let act = action_D4(true, false, &spec).unwrap();
    let r3sq = TowerElement::monomial(&spec, Monomial { sqrt: 0, cbrt: 2 }).unwrap();
    let v_omega = [
        ConstScalar::sqrt_minus_three(),
        ConstScalar::one(),
        ConstScalar::one(),
        ConstScalar::one(),
    ];
    for i in 0..7 {
        let mut vs: [[TowerElement; 4]; 7] =
            std::array::from_fn(|_| std::array::from_fn(|_| TowerElement::zero(&spec)));
        vs[i] = std::array::from_fn(|s| r3sq.scale_k(&RatFunc::from_scalar(v_omega[s].clone())));
        let x = seven_join(act.algebra(), &vs).unwrap();
        assert_eq!(act.apply_generator(0, &x).unwrap(), x);
    }
}

#[test]
fn action_d4_needs_layers() {
    let quad = TowerSpec::quadratic(RatFunc::t()).unwrap();
    assert!(matches!(
        action_D4(true, false, &quad),
        Err(DescentError::MissingLayer(_))
    ));
    let cub = TowerSpec::cubic(RatFunc::t()).unwrap();
    assert!(matches!(
        action_D4(false, true, &cub),
        Err(DescentError::MissingLayer(_))
    ));
    assert_eq!(
        action_D4(false, true, &quad).unwrap().group(),
        GroupKind::Z2
    );
}

fn s3_spec() -> Arc<TowerSpec> {
    let alpha = crate::field_tower::parse_ratfunc("1 - t^3").unwrap();
    TowerSpec::new(
        Some(alpha),
        Some([RatFunc::one(), RatFunc::one()]),
        Some(RatFunc::t()),
    )
    .unwrap()
}

#[test]
fn s3_group_laws_on_random_elements() {
    let spec = s3_spec();
    let act = action_D4(true, true, &spec).unwrap();
    let mut rng = sample::rng(7);
    let xs: Vec<LieElement> = (0..10)
        .map(|_| sample::random_lie(&mut rng, act.algebra(), &spec, 1, 0.15))
        .collect();
    assert!(act.relations_hold(&xs).unwrap());
    let scalars = vec![
        TowerElement::t(&spec),
        TowerElement::sqrt_alpha(&spec).unwrap(),
        TowerElement::cbrt_beta(&spec).unwrap(),
    ];
    assert!(act.generator_laws_hold(&xs[..4], &scalars).unwrap());
}

#[test]
fn group_action_composes() {
    let spec = s3_spec();
    let act = action_D4(true, true, &spec).unwrap();
    let mut rng = sample::rng(11);
    let x = sample::random_lie(&mut rng, act.algebra(), &spec, 1, 0.3);
    for a in GroupKind::S3.elements() {
        for b in GroupKind::S3.elements() {
            let lhs = act.apply(a.mul(b), &x).unwrap();
            let rhs = act.apply(a, &act.apply(b, &x).unwrap()).unwrap();
            assert_eq!(lhs, rhs, "{a} * {b}");
        }
    }
}

#[test]
fn d4_z3_fixed_points_dimension() {
    let spec = TowerSpec::cubic(RatFunc::t()).unwrap();
    let act = action_D4(true, false, &spec).unwrap();
    let f = fixed_points(&act);
    assert_eq!(f.dim(), 28);
    assert!(verify_descent(&f, Some(&act)).unwrap().passed());
}

#[test]
fn torsor_invariants_are_constant_maps() {
    let r = trivial_torsor_iso(&make_sl(3).unwrap(), GroupKind::Z2).unwrap();
    assert!(r.passed(), "{r}");
    let r = trivial_torsor_iso(&make_sl(2).unwrap(), GroupKind::Trivial).unwrap();
    assert!(r.passed(), "{r}");
}

#[test]
fn induced_case_a() {
    let act = action_typeA_Z2(3, &RatFunc::t()).unwrap();
    let r = induced_fixed_check(InducedCase::A, &act).unwrap();
    assert!(r.passed(), "{r}");
    assert!(matches!(
        induced_fixed_check(InducedCase::B, &act),
        Err(DescentError::BadGroup(_))
    ));
}

#[test]
fn induced_rejects_trivial_field_action() {
    let spec = TowerSpec::base();
    let g = make_sl(3).unwrap();
    let gen = Generator {
        name: "tau".into(),
        linear: linear_from_matrix_map(&g, |m| {
            (0..3)
                .map(|i| (0..3).map(|j| -&m[j][i]).collect())
                .collect()
        }),
        field: crate::field_tower::FieldAutomorphism::identity(&spec),
    };
    let act = SemilinearAction::from_parts(GroupKind::Z2, g, spec, vec![gen], "transpose over K")
        .unwrap();
    assert_eq!(
        induced_fixed_check(InducedCase::A, &act).unwrap_err(),
        DescentError::TrivialFieldAction
    );
}
