//! The explicit bases of the twisted forms and their comparison with the
//! fixed points computed by elimination.

use std::sync::Arc;
use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::descent::{
    action_D4, action_typeA_Z2, action_typeD_Z2, check_alpha, fixed_points, seven_join,
    seven_split, subspace_equal, triality_matrix, verify_descent, Construction, DescentError,
    FixedSubalgebra, GroupKind, SemilinearAction,
};
use crate::field_tower::{
    check_s3_extension, noncube_certify, ConstScalar, Monomial, NonCubeVerdict, RatFunc, S3Report,
    TowerElement, TowerSpec,
};
use crate::lie::{make_sl, make_so, DLieAlgebra, LieElement};
use crate::linalg::RatRref;
use crate::report::VerificationReport;

type Vec4<T> = [T; 4];

/// S together with its eigenvectors for 1, 1, ω, ω².
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EigenData {
    pub s: [Vec4<ConstScalar>; 4],
    pub v1a: Vec4<ConstScalar>,
    pub v1b: Vec4<ConstScalar>,
    pub v_omega: Vec4<ConstScalar>,
    pub v_omega2: Vec4<ConstScalar>,
}

impl EigenData {
    pub fn standard() -> Self {
        let i = ConstScalar::from_int;
        let r = ConstScalar::sqrt_minus_three();
        Self {
            s: triality_matrix(),
            v1a: [i(0), i(1), i(-1), i(0)],
            v1b: [i(0), i(1), i(0), i(-1)],
            v_omega: [r.clone(), i(1), i(1), i(1)],
            v_omega2: [-&r, i(1), i(1), i(1)],
        }
    }

    pub fn pairs(&self) -> [(&'static str, &Vec4<ConstScalar>, ConstScalar); 4] {
        [
            ("v1a", &self.v1a, ConstScalar::one()),
            ("v1b", &self.v1b, ConstScalar::one()),
            ("v_omega", &self.v_omega, ConstScalar::omega()),
            ("v_omega2", &self.v_omega2, ConstScalar::omega_squared()),
        ]
    }
}

fn mat_vec(m: &[Vec4<ConstScalar>; 4], v: &Vec4<ConstScalar>) -> Vec4<ConstScalar> {
    std::array::from_fn(|r| (0..4).fold(ConstScalar::zero(), |acc, c| &acc + &(&m[r][c] * &v[c])))
}

fn mat_mul(a: &[Vec4<ConstScalar>; 4], b: &[Vec4<ConstScalar>; 4]) -> [Vec4<ConstScalar>; 4] {
    std::array::from_fn(|r| {
        std::array::from_fn(|c| {
            (0..4).fold(ConstScalar::zero(), |acc, k| &acc + &(&a[r][k] * &b[k][c]))
        })
    })
}

/// Determinant by elimination over k.
pub fn det4(m: &[Vec4<ConstScalar>; 4]) -> ConstScalar {
    let mut a = m.clone();
    let mut det = ConstScalar::one();
    for c in 0..4 {
        let Some(p) = (c..4).find(|&r| !a[r][c].is_zero()) else {
            return ConstScalar::zero();
        };
        if p != c {
            a.swap(p, c);
            det = -det;
        }
        det = &det * &a[c][c];
        let inv = a[c][c].inv().unwrap();
        for r in c + 1..4 {
            let f = &a[r][c] * &inv;
            if f.is_zero() {
                continue;
            }
            for k in c..4 {
                a[r][k] = &a[r][k] - &(&f * &a[c][k]);
            }
        }
    }
    det
}

pub fn eigen_check(e: &EigenData) -> VerificationReport {
    let start = Instant::now();
    let mut report = VerificationReport::new("eigen_check");
    for (name, v, lambda) in e.pairs() {
        let sv = mat_vec(&e.s, v);
        let lv: Vec4<ConstScalar> = std::array::from_fn(|k| &lambda * &v[k]);
        report.check(
            format!("eigen_{name}"),
            sv == lv,
            format!("S v = {lambda} v"),
        );
    }
    let cols = [&e.v1a, &e.v1b, &e.v_omega, &e.v_omega2];
    let m: [Vec4<ConstScalar>; 4] =
        std::array::from_fn(|r| std::array::from_fn(|c| cols[c][r].clone()));
    let det = det4(&m);
    report.check("independent", !det.is_zero(), format!("det = {det}"));
    let s3 = mat_mul(&mat_mul(&e.s, &e.s), &e.s);
    let id: [Vec4<ConstScalar>; 4] = std::array::from_fn(|r| {
        std::array::from_fn(|c| {
            if r == c {
                ConstScalar::one()
            } else {
                ConstScalar::zero()
            }
        })
    });
    report.check("s_cubed_identity", s3 == id, "S^3 = I");
    report.finish(start)
}

fn form(
    algebra: Arc<DLieAlgebra>,
    spec: Arc<TowerSpec>,
    group: GroupKind,
    basis: Vec<LieElement>,
) -> FixedSubalgebra {
    FixedSubalgebra {
        algebra,
        spec,
        group,
        basis,
        construction: Construction::Explicit,
    }
}

/// 𝔬ₙ(K) ⊕ √α·(Symₙ(K) ∩ 𝔰𝔩ₙ(K)) inside 𝔰𝔩ₙ(K(√α)).
#[allow(non_snake_case)]
pub fn basis_typeA_form(n: usize, alpha: &RatFunc) -> Result<FixedSubalgebra, DescentError> {
    if n < 3 {
        return Err(DescentError::Ineligible(format!(
            "type A needs n >= 3, got {n}"
        )));
    }
    check_alpha(alpha)?;
    let g = make_sl(n)?;
    let spec = TowerSpec::quadratic(alpha.clone())?;
    let r2 = TowerElement::sqrt_alpha(&spec).unwrap();
    let e = |i| LieElement::basis(&g, &spec, i);
    let mut basis = Vec::with_capacity(n * n - 1);
    for i in 0..n {
        for j in i + 1..n {
            basis.push(e(g.e(i, j)).try_sub(&e(g.e(j, i)))?);
        }
    }
    for i in 0..n {
        for j in i + 1..n {
            basis.push(e(g.e(i, j)).try_add(&e(g.e(j, i)))?.scale(&r2)?);
        }
    }
    for i in 0..n - 1 {
        basis.push(e(g.h(i)).scale(&r2)?);
    }
    Ok(form(g, spec, GroupKind::Z2, basis))
}

/// {√α·F[0,j]} ∪ {F[i,j] : 1 ≤ i < j} inside 𝔬ₘ(K(√α)).
#[allow(non_snake_case)]
pub fn basis_typeD_form(m: usize, alpha: &RatFunc) -> Result<FixedSubalgebra, DescentError> {
    if m < 8 || !m.is_multiple_of(2) {
        return Err(DescentError::Ineligible(format!(
            "type D needs even m >= 8, got {m}"
        )));
    }
    check_alpha(alpha)?;
    let g = make_so(m)?;
    let spec = TowerSpec::quadratic(alpha.clone())?;
    let r2 = TowerElement::sqrt_alpha(&spec).unwrap();
    let mut basis = Vec::with_capacity(m * (m - 1) / 2);
    for j in 1..m {
        basis.push(LieElement::basis(&g, &spec, g.f(0, j)).scale(&r2)?);
    }
    for i in 1..m {
        for j in i + 1..m {
            basis.push(LieElement::basis(&g, &spec, g.f(i, j)));
        }
    }
    Ok(form(g, spec, GroupKind::Z2, basis))
}

fn lift4(spec: &Arc<TowerSpec>, v: &Vec4<ConstScalar>) -> Vec4<TowerElement> {
    std::array::from_fn(|k| TowerElement::from_scalar(spec, v[k].clone()))
}

fn times4(x: &TowerElement, v: &Vec4<TowerElement>) -> Vec4<TowerElement> {
    std::array::from_fn(|k| x.try_mul(&v[k]).expect("same tower"))
}

fn cube_root_layer(spec: &Arc<TowerSpec>) -> Result<(TowerElement, TowerElement), DescentError> {
    let r3 = TowerElement::cbrt_beta(spec)
        .ok_or_else(|| DescentError::MissingLayer("cube-root layer".into()))?;
    let r3sq = TowerElement::monomial(spec, Monomial { sqrt: 0, cbrt: 2 }).unwrap();
    Ok((r3, r3sq))
}

/// Generators of Ξ: v₁⁽¹⁾, v₁⁽²⁾, ∛β·v_{ω²}, (∛β)²·v_ω.
pub fn xi_subspace(spec: &Arc<TowerSpec>) -> Result<[Vec4<TowerElement>; 4], DescentError> {
    let (r3, r3sq) = cube_root_layer(spec)?;
    let e = EigenData::standard();
    Ok([
        lift4(spec, &e.v1a),
        lift4(spec, &e.v1b),
        times4(&r3, &lift4(spec, &e.v_omega2)),
        times4(&r3sq, &lift4(spec, &e.v_omega)),
    ])
}

/// γ/∛β, written on the monomial basis as (γ/β)·(∛β)².
pub fn cbrt_beta_bar(spec: &Arc<TowerSpec>) -> Result<TowerElement, DescentError> {
    let (_, r3sq) = cube_root_layer(spec)?;
    let gamma = spec
        .gamma()
        .ok_or_else(|| DescentError::MissingLayer("gamma".into()))?;
    let beta = TowerElement::beta(spec).unwrap();
    let g = TowerElement::from_k(spec, gamma.clone());
    Ok(g.try_div(&beta)?.try_mul(&r3sq)?)
}

/// Generators of Θ: v₁⁽¹⁾, v₁⁽²⁾, ∛β v_{ω²} + ∛β̄ v_ω, √α(∛β v_{ω²} − ∛β̄ v_ω).
pub fn theta_subspace(spec: &Arc<TowerSpec>) -> Result<[Vec4<TowerElement>; 4], DescentError> {
    let (r3, _) = cube_root_layer(spec)?;
    let r2 = TowerElement::sqrt_alpha(spec)
        .ok_or_else(|| DescentError::MissingLayer("square-root layer".into()))?;
    let bar = cbrt_beta_bar(spec)?;
    let e = EigenData::standard();
    let a = times4(&r3, &lift4(spec, &e.v_omega2));
    let b = times4(&bar, &lift4(spec, &e.v_omega));
    let sum: Vec4<TowerElement> = std::array::from_fn(|k| a[k].try_add(&b[k]).unwrap());
    let diff: Vec4<TowerElement> = std::array::from_fn(|k| a[k].try_sub(&b[k]).unwrap());
    Ok([
        lift4(spec, &e.v1a),
        lift4(spec, &e.v1b),
        sum,
        times4(&r2, &diff),
    ])
}

/// The D4 subspace for `group`: Ξ for ℤ₃, Θ for 𝔖₃.
pub fn d4_subspace(
    group: GroupKind,
    spec: &Arc<TowerSpec>,
) -> Result<[Vec4<TowerElement>; 4], DescentError> {
    match group {
        GroupKind::Z3 => xi_subspace(spec),
        GroupKind::S3 => theta_subspace(spec),
        g => Err(DescentError::BadGroup(format!(
            "the seven-vector form needs Z3 or S3, got {g}"
        ))),
    }
}

/// Seven copies of the subspace generators, one slot at a time.
#[allow(non_snake_case)]
pub fn basis_D4_form(
    group: GroupKind,
    spec: &Arc<TowerSpec>,
) -> Result<FixedSubalgebra, DescentError> {
    let gens = d4_subspace(group, spec)?;
    let g = make_so(8)?;
    let mut basis = Vec::with_capacity(28);
    for i in 0..7 {
        for v in &gens {
            let mut vs: [Vec4<TowerElement>; 7] =
                std::array::from_fn(|_| std::array::from_fn(|_| TowerElement::zero(spec)));
            vs[i] = v.clone();
            basis.push(seven_join(&g, &vs)?);
        }
    }
    Ok(form(g, spec.clone(), group, basis))
}

fn vec4_to_k(v: &Vec4<TowerElement>) -> Vec<RatFunc> {
    v.iter().flat_map(|x| x.coords().iter().cloned()).collect()
}

/// Whether every one of the seven vectors of `x` lies in the K-span of `gens`.
pub fn seven_vectors_in_span(
    x: &LieElement,
    gens: &[Vec4<TowerElement>; 4],
) -> Result<bool, DescentError> {
    let vs = seven_split(x)?;
    let ncols = 4 * x.spec().degree();
    let rows: Vec<Vec<RatFunc>> = gens.iter().map(vec4_to_k).collect();
    let rref = RatRref::from_vectors(ncols, &rows);
    Ok(vs.iter().all(|v| rref.contains(&vec4_to_k(v))))
}

/// Eligibility of a D4 tower. ℤ₃ needs β ∈ K certified non-cube; 𝔖₃ needs
/// conditions (a)–(c). The error names the failed condition.
pub fn check_d4_tower(
    group: GroupKind,
    spec: &Arc<TowerSpec>,
    limit: usize,
) -> Result<Option<S3Report>, DescentError> {
    match group {
        GroupKind::Z3 => {
            let beta = TowerElement::beta(spec)
                .ok_or_else(|| DescentError::MissingLayer("beta".into()))?;
            match noncube_certify(&beta, limit)? {
                NonCubeVerdict::Certified { .. } => Ok(None),
                NonCubeVerdict::Cube { root, .. } => Err(DescentError::Ineligible(format!(
                    "beta is a cube of {root}"
                ))),
                NonCubeVerdict::Unknown { reason, .. } => Err(DescentError::Ineligible(format!(
                    "beta not certified non-cube: {reason}"
                ))),
            }
        }
        GroupKind::S3 => {
            let alpha = spec
                .alpha()
                .ok_or_else(|| DescentError::MissingLayer("alpha".into()))?;
            let gamma = spec
                .gamma()
                .ok_or_else(|| DescentError::MissingLayer("gamma".into()))?;
            let beta = TowerElement::beta(spec)
                .ok_or_else(|| DescentError::MissingLayer("beta".into()))?;
            let report = check_s3_extension(alpha, &beta, gamma, limit);
            if !report.alpha_not_square {
                return Err(DescentError::Ineligible("(a) alpha is a square".into()));
            }
            if !report.beta_not_cube {
                return Err(DescentError::Ineligible(
                    "(b) beta not certified non-cube".into(),
                ));
            }
            if !report.gamma_cubed_is_norm {
                return Err(DescentError::Ineligible(
                    "(c) gamma^3 != beta * bar(beta)".into(),
                ));
            }
            Ok(Some(report))
        }
        g => Err(DescentError::BadGroup(format!(
            "the seven-vector form needs Z3 or S3, got {g}"
        ))),
    }
}

/// One configuration of a twisted form.
#[derive(Clone, Debug)]
pub enum FormConfig {
    A {
        n: usize,
        alpha: RatFunc,
    },
    D {
        m: usize,
        alpha: RatFunc,
    },
    /// 𝔬₈ with ℤ₂ (quadratic tower), ℤ₃ (cubic over K) or 𝔖₃.
    D4 {
        group: GroupKind,
        spec: Arc<TowerSpec>,
    },
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Full,
    Fast,
}

impl FormConfig {
    pub fn name(&self) -> String {
        match self {
            Self::A { n, .. } => format!("A{}", n - 1),
            Self::D { m, .. } => format!("D{}", m / 2),
            Self::D4 { group, .. } => format!("D4-{group}"),
        }
    }

    pub fn group(&self) -> GroupKind {
        match self {
            Self::A { .. } | Self::D { .. } => GroupKind::Z2,
            Self::D4 { group, .. } => *group,
        }
    }

    /// Parameter echo for reports.
    pub fn parameters(&self) -> Vec<(&'static str, String)> {
        match self {
            Self::A { n, alpha } => vec![("n", n.to_string()), ("alpha", alpha.to_string())],
            Self::D { m, alpha } => vec![("m", m.to_string()), ("alpha", alpha.to_string())],
            Self::D4 { group, spec } => {
                let [a, b, c] = spec.describe();
                let mut out = vec![("group", group.to_string())];
                for (k, v) in [("alpha", a), ("beta", b), ("gamma", c)] {
                    if let Some(v) = v {
                        out.push((k, v));
                    }
                }
                out
            }
        }
    }

    /// Reject ineligible parameters before any construction.
    pub fn validate(&self, limit: usize) -> Result<(), DescentError> {
        match self {
            Self::A { n, alpha } => {
                if *n < 3 {
                    return Err(DescentError::Ineligible(format!(
                        "type A needs n >= 3, got {n}"
                    )));
                }
                check_alpha(alpha)
            }
            Self::D { m, alpha } => {
                if *m < 8 || m % 2 != 0 {
                    return Err(DescentError::Ineligible(format!(
                        "type D needs even m >= 8, got {m}"
                    )));
                }
                check_alpha(alpha)
            }
            Self::D4 {
                group: GroupKind::Z2,
                spec,
            } => {
                let alpha = spec
                    .alpha()
                    .ok_or_else(|| DescentError::MissingLayer("alpha".into()))?;
                check_alpha(alpha)
            }
            Self::D4 { group, spec } => check_d4_tower(*group, spec, limit).map(|_| ()),
        }
    }

    pub fn explicit(&self) -> Result<FixedSubalgebra, DescentError> {
        match self {
            Self::A { n, alpha } => basis_typeA_form(*n, alpha),
            Self::D { m, alpha } => basis_typeD_form(*m, alpha),
            Self::D4 {
                group: GroupKind::Z2,
                spec,
            } => {
                let alpha = spec
                    .alpha()
                    .ok_or_else(|| DescentError::MissingLayer("alpha".into()))?;
                basis_typeD_form(8, alpha)
            }
            Self::D4 { group, spec } => basis_D4_form(*group, spec),
        }
    }

    pub fn action(&self) -> Result<SemilinearAction, DescentError> {
        match self {
            Self::A { n, alpha } => action_typeA_Z2(*n, alpha),
            Self::D { m, alpha } => action_typeD_Z2(*m, alpha),
            Self::D4 { group, spec } => match group {
                GroupKind::Z2 => action_D4(false, true, spec),
                GroupKind::Z3 => action_D4(true, false, spec),
                GroupKind::S3 => action_D4(true, true, spec),
                GroupKind::Trivial => {
                    Err(DescentError::BadGroup("D4 needs a nontrivial group".into()))
                }
            },
        }
    }
}

/// Fixed points by elimination, the explicit basis, their equality and the
/// descent checks on both. The fast suite skips the 𝔖₃ elimination and
/// checks the explicit basis against the action directly.
pub fn certify_form(
    config: &FormConfig,
    suite: Suite,
    limit: usize,
) -> Result<VerificationReport, DescentError> {
    let start = Instant::now();
    config.validate(limit)?;
    let mut report = VerificationReport::new("certify_form").param("type", config.name());
    for (k, v) in config.parameters() {
        report.set_param(k, v);
    }
    report.set_param("suite", format!("{suite:?}").to_lowercase());

    if let FormConfig::D4 {
        group: GroupKind::S3,
        spec,
    } = config
    {
        if let Some(s3) = check_d4_tower(GroupKind::S3, spec, limit)? {
            report.check("s3_alpha_not_square", s3.alpha_not_square, "(a)");
            let witness = match &s3.noncube {
                Some(v) => serde_json::to_string(v).unwrap_or_default(),
                None => String::new(),
            };
            report.check("s3_beta_not_cube", s3.beta_not_cube, witness);
            report.check("s3_gamma_cubed_is_norm", s3.gamma_cubed_is_norm, "(c)");
        }
    }

    let action = config.action()?;
    let explicit = config.explicit()?;
    // The 𝔖₃ form lives in 𝔬₈ over the same tower, so it shares the ambient.
    let explicit_report = verify_descent(&explicit, Some(&action))?;
    report.absorb("explicit", explicit_report);

    let skip_elimination = suite == Suite::Fast && config.group() == GroupKind::S3;
    if !skip_elimination {
        let fixed = fixed_points(&action);
        report.absorb("fixed", verify_descent(&fixed, Some(&action))?);
        let equal = subspace_equal(&explicit, &fixed)?;
        report.check(
            "explicit_equals_fixed",
            equal,
            format!(
                "{} explicit vs {} computed over K",
                explicit.dim(),
                fixed.dim()
            ),
        );
        if let FormConfig::D4 {
            group: g @ (GroupKind::Z3 | GroupKind::S3),
            spec,
        } = config
        {
            let gens = d4_subspace(*g, spec)?;
            let mut all = true;
            for x in &fixed.basis {
                all &= seven_vectors_in_span(x, &gens)?;
            }
            report.check(
                "seven_vector_membership",
                all,
                format!("{} computed vectors", fixed.dim()),
            );
        }
    }
    Ok(report.finish(start))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field_tower::parse_ratfunc;

    fn s3_spec() -> Arc<TowerSpec> {
        TowerSpec::new(
            Some(parse_ratfunc("1 - t^3").unwrap()),
            Some([RatFunc::one(), RatFunc::one()]),
            Some(RatFunc::t()),
        )
        .unwrap()
    }

    #[test]
    fn eigen_data_checks_pass() {
        let r = eigen_check(&EigenData::standard());
        assert!(r.passed(), "{r}");
        assert_eq!(r.checks.len(), 6);
    }

    #[test]
    fn wrong_eigenvalue_fails() {
        let mut e = EigenData::standard();
        std::mem::swap(&mut e.v_omega, &mut e.v_omega2);
        let r = eigen_check(&e);
        assert!(!r.get("eigen_v_omega").unwrap().passed);
        assert!(r.get("independent").unwrap().passed);
    }

    #[test]
    fn type_a_counts_and_membership() {
        let f = basis_typeA_form(3, &RatFunc::t()).unwrap();
        assert_eq!(f.dim(), 8);
        let g = &f.algebra;
        let r2 = TowerElement::sqrt_alpha(&f.spec).unwrap();
        let sym = LieElement::basis(g, &f.spec, g.e(0, 1))
            .try_add(&LieElement::basis(g, &f.spec, g.e(1, 0)))
            .unwrap()
            .scale(&r2)
            .unwrap();
        assert!(f.basis.contains(&sym));
        assert_eq!(basis_typeA_form(4, &RatFunc::t()).unwrap().dim(), 15);
        assert!(matches!(
            basis_typeA_form(2, &RatFunc::t()),
            Err(DescentError::Ineligible(_))
        ));
    }

    #[test]
    fn type_d_counts() {
        assert_eq!(basis_typeD_form(8, &RatFunc::t()).unwrap().dim(), 28);
        assert_eq!(basis_typeD_form(10, &RatFunc::t()).unwrap().dim(), 45);
        assert!(basis_typeD_form(9, &RatFunc::t()).is_err());
    }

    #[test]
    fn xi_contains_radical_eigenvector_and_is_fixed() {
        let spec = TowerSpec::cubic(RatFunc::t()).unwrap();
        let xi = xi_subspace(&spec).unwrap();
        let r3 = TowerElement::cbrt_beta(&spec).unwrap();
        let e = EigenData::standard();
        assert_eq!(xi[2], times4(&r3, &lift4(&spec, &e.v_omega2)));
        let act = action_D4(true, false, &spec).unwrap();
        let f = basis_D4_form(GroupKind::Z3, &spec).unwrap();
        for x in &f.basis {
            assert_eq!(act.apply_generator(0, x).unwrap(), *x);
        }
    }

    #[test]
    fn theta_generators_fixed_by_both() {
        let spec = s3_spec();
        let act = action_D4(true, true, &spec).unwrap();
        let f = basis_D4_form(GroupKind::S3, &spec).unwrap();
        assert_eq!(f.dim(), 28);
        for x in &f.basis {
            for k in 0..2 {
                assert_eq!(act.apply_generator(k, x).unwrap(), *x);
            }
        }
    }

    #[test]
    fn cbrt_beta_bar_cubes_to_conjugate() {
        let spec = s3_spec();
        let bar = cbrt_beta_bar(&spec).unwrap();
        let expected = TowerElement::from_coords(
            &spec,
            vec![
                RatFunc::one(),
                RatFunc::from_int(-1),
                RatFunc::zero(),
                RatFunc::zero(),
                RatFunc::zero(),
                RatFunc::zero(),
            ],
        );
        assert_eq!(bar.pow(3), expected);
    }

    #[test]
    fn d4_tower_conditions_named() {
        let bad = TowerSpec::new(
            Some(parse_ratfunc("1 - t^3").unwrap()),
            Some([RatFunc::one(), RatFunc::one()]),
            Some(RatFunc::t().scale(&ConstScalar::from_int(2))),
        )
        .unwrap();
        let err = check_d4_tower(GroupKind::S3, &bad, 25).unwrap_err();
        assert!(err.to_string().contains("(c)"), "{err}");
        let cube = TowerSpec::cubic(RatFunc::t().pow(3).unwrap()).unwrap();
        assert!(check_d4_tower(GroupKind::Z3, &cube, 25).is_err());
    }

    #[test]
    fn certify_small_configurations() {
        for config in [
            FormConfig::A {
                n: 3,
                alpha: RatFunc::t(),
            },
            FormConfig::D {
                m: 8,
                alpha: RatFunc::t(),
            },
            FormConfig::D4 {
                group: GroupKind::Z3,
                spec: TowerSpec::cubic(RatFunc::t()).unwrap(),
            },
            FormConfig::D4 {
                group: GroupKind::Z2,
                spec: TowerSpec::quadratic(RatFunc::t()).unwrap(),
            },
        ] {
            let r = certify_form(&config, Suite::Full, 25).unwrap();
            assert!(r.passed(), "{r}");
        }
    }

    #[test]
    fn fast_suite_skips_s3_elimination() {
        let config = FormConfig::D4 {
            group: GroupKind::S3,
            spec: s3_spec(),
        };
        let r = certify_form(&config, Suite::Fast, 25).unwrap();
        assert!(r.passed(), "{r}");
        assert!(r.get("explicit_equals_fixed").is_none());
    }
}
