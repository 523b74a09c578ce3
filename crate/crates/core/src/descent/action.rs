use std::sync::Arc;

use super::group::{GroupElement, GroupKind};
use super::seven::{flip_matrix, seven_linear_map, triality_matrix};
use super::DescentError;
use crate::field_tower::{
    is_square_geometric, AutomorphismKind, ConstScalar, FieldAutomorphism, RatFunc, TowerSpec,
};
use crate::lie::{make_sl, make_so, DLieAlgebra, LieElement};
use crate::linalg::KMatrix;

/// Sparse rows of a k-linear map on 𝔤₀: `out_a = Σ_b m[a][b]·x_b`.
pub type LinearMap = Vec<Vec<(usize, ConstScalar)>>;

/// One generator: an automorphism of 𝔤₀ over k paired with a field
/// automorphism of L over K, acting by `x ⊗ ℓ ↦ A(x) ⊗ φ(ℓ)`.
#[derive(Clone, Debug)]
pub struct Generator {
    pub name: String,
    pub linear: LinearMap,
    pub field: FieldAutomorphism,
}

#[derive(Clone, Debug)]
pub struct SemilinearAction {
    group: GroupKind,
    algebra: Arc<DLieAlgebra>,
    spec: Arc<TowerSpec>,
    generators: Vec<Generator>,
    description: String,
}

/// Require that α is not a square in ℂ(t).
pub fn check_alpha(alpha: &RatFunc) -> Result<(), DescentError> {
    match is_square_geometric(alpha) {
        Ok(false) => Ok(()),
        Ok(true) => Err(DescentError::Ineligible("alpha is a square".into())),
        Err(_) => Err(DescentError::Ineligible("alpha is zero".into())),
    }
}

/// Linear map on coordinates induced by a map on k-matrices.
pub fn linear_from_matrix_map(
    alg: &DLieAlgebra,
    f: impl Fn(&[Vec<ConstScalar>]) -> Vec<Vec<ConstScalar>>,
) -> LinearMap {
    let d = alg.dim();
    let mut rows = vec![Vec::new(); d];
    for b in 0..d {
        let image = f(&alg.basis_matrix(b));
        let coords = alg
            .coords_of_matrix(&image)
            .expect("map preserves the algebra");
        for (a, v) in coords.into_iter().enumerate() {
            if !v.is_zero() {
                rows[a].push((b, v));
            }
        }
    }
    rows
}

impl SemilinearAction {
    /// Assemble an action from parts. The generator list must match
    /// `group.generator_names()`.
    pub fn from_parts(
        group: GroupKind,
        algebra: Arc<DLieAlgebra>,
        spec: Arc<TowerSpec>,
        generators: Vec<Generator>,
        description: impl Into<String>,
    ) -> Result<Self, DescentError> {
        let names: Vec<&str> = generators.iter().map(|g| g.name.as_str()).collect();
        if names != group.generator_names() {
            return Err(DescentError::BadGroup(format!(
                "group {group} expects generators {:?}, got {names:?}",
                group.generator_names()
            )));
        }
        for g in &generators {
            if g.linear.len() != algebra.dim() || **g.field.spec() != *spec {
                return Err(DescentError::BadGroup(format!(
                    "generator {} does not fit the ambient",
                    g.name
                )));
            }
        }
        Ok(Self {
            group,
            algebra,
            spec,
            generators,
            description: description.into(),
        })
    }

    pub fn group(&self) -> GroupKind {
        self.group
    }

    pub fn algebra(&self) -> &Arc<DLieAlgebra> {
        &self.algebra
    }

    pub fn spec(&self) -> &Arc<TowerSpec> {
        &self.spec
    }

    pub fn generators(&self) -> &[Generator] {
        &self.generators
    }

    pub fn description(&self) -> &str {
        &self.description
    }

    pub fn apply_generator(&self, k: usize, x: &LieElement) -> Result<LieElement, DescentError> {
        let g = &self.generators[k];
        Ok(x.apply_field(&g.field)?.apply_linear(&g.linear))
    }

    fn generator_index(&self, name: &str) -> Option<usize> {
        self.generators.iter().position(|g| g.name == name)
    }

    /// Action of σ^a·τ^b: τ is applied first.
    pub fn apply(&self, e: GroupElement, x: &LieElement) -> Result<LieElement, DescentError> {
        let mut y = x.clone();
        for (name, times) in [("tau", e.tau), ("sigma", e.sigma)] {
            if times == 0 {
                continue;
            }
            let k = self
                .generator_index(name)
                .ok_or_else(|| DescentError::BadGroup(format!("{e} is not in {}", self.group)))?;
            for _ in 0..times {
                y = self.apply_generator(k, &y)?;
            }
        }
        Ok(y)
    }

    /// The K-matrix of generator `k` on the K-space 𝔤₀(L) of dimension
    /// dim·[L:K], coordinate `b·[L:K] + m`: the Kronecker product of the
    /// linear part with the matrix of the field automorphism.
    pub fn k_matrix(&self, k: usize) -> KMatrix {
        let g = &self.generators[k];
        let deg = self.spec.degree();
        let n = self.algebra.dim() * deg;
        // phi[m'][m]: coordinate m' of the image of monomial m
        let phi: Vec<Vec<RatFunc>> = (0..deg)
            .map(|mp| {
                (0..deg)
                    .map(|m| g.field.image_of_monomial(m).coords()[mp].clone())
                    .collect()
            })
            .collect();
        let mut out = KMatrix::new(n);
        for row in &g.linear {
            for phi_row in &phi {
                let mut entries = Vec::new();
                for (b, c) in row {
                    for (m, f) in phi_row.iter().enumerate() {
                        if !f.is_zero() {
                            entries.push((b * deg + m, f.scale(c)));
                        }
                    }
                }
                out.push_row(entries);
            }
        }
        out
    }

    fn power(&self, k: usize, n: usize, x: &LieElement) -> Result<LieElement, DescentError> {
        let mut y = x.clone();
        for _ in 0..n {
            y = self.apply_generator(k, &y)?;
        }
        Ok(y)
    }

    /// Group relations σ³ = 1, τ² = 1 and στ = τσ² as maps on `samples`.
    pub fn relations_hold(&self, samples: &[LieElement]) -> Result<bool, DescentError> {
        let ks = self.generator_index("sigma");
        let kt = self.generator_index("tau");
        for x in samples {
            if let Some(ks) = ks {
                if self.power(ks, 3, x)? != *x {
                    return Ok(false);
                }
            }
            if let Some(kt) = kt {
                if self.power(kt, 2, x)? != *x {
                    return Ok(false);
                }
            }
            if let (Some(ks), Some(kt)) = (ks, kt) {
                let lhs = self.apply_generator(ks, &self.apply_generator(kt, x)?)?;
                let rhs = self.apply_generator(kt, &self.power(ks, 2, x)?)?;
                if lhs != rhs {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// Each generator preserves brackets and commutes with ∂ on `samples`
    /// (all pairs), and is semilinear for the scalars `scalars`.
    pub fn generator_laws_hold(
        &self,
        samples: &[LieElement],
        scalars: &[crate::field_tower::TowerElement],
    ) -> Result<bool, DescentError> {
        for k in 0..self.generators.len() {
            let field = &self.generators[k].field;
            for (i, x) in samples.iter().enumerate() {
                let gx = self.apply_generator(k, x)?;
                if self.apply_generator(k, &x.derive())? != gx.derive() {
                    return Ok(false);
                }
                for l in scalars {
                    let lhs = self.apply_generator(k, &x.scale(l)?)?;
                    if lhs != gx.scale(&field.apply(l)?)? {
                        return Ok(false);
                    }
                }
                for y in &samples[i + 1..] {
                    let gy = self.apply_generator(k, y)?;
                    if self.apply_generator(k, &x.bracket(y)?)? != gx.bracket(&gy)? {
                        return Ok(false);
                    }
                }
            }
        }
        Ok(true)
    }
}

/// The trivial group acting on 𝔤₀(L).
pub fn action_trivial(algebra: &Arc<DLieAlgebra>, spec: &Arc<TowerSpec>) -> SemilinearAction {
    SemilinearAction {
        group: GroupKind::Trivial,
        algebra: algebra.clone(),
        spec: spec.clone(),
        generators: Vec::new(),
        description: "trivial".into(),
    }
}

/// 𝔰𝔩ₙ over K(√α) with X ↦ −ᵗX̄.
#[allow(non_snake_case)]
pub fn action_typeA_Z2(n: usize, alpha: &RatFunc) -> Result<SemilinearAction, DescentError> {
    if n < 3 {
        return Err(DescentError::Ineligible(format!(
            "type A needs n >= 3, got {n}"
        )));
    }
    check_alpha(alpha)?;
    let alg = make_sl(n)?;
    let spec = TowerSpec::quadratic(alpha.clone())?;
    let linear = linear_from_matrix_map(&alg, |m| {
        (0..n)
            .map(|i| (0..n).map(|j| -&m[j][i]).collect())
            .collect()
    });
    let field = FieldAutomorphism::new(AutomorphismKind::Bar, &spec)?;
    SemilinearAction::from_parts(
        GroupKind::Z2,
        alg,
        spec,
        vec![Generator {
            name: "tau".into(),
            linear,
            field,
        }],
        format!("sl{n}, X -> -transpose(bar X)"),
    )
}

/// X ↦ D·X·D with D = diag(−1, 1, …, 1), on any 𝔬ₘ.
pub fn conjugation_by_flip(alg: &DLieAlgebra) -> LinearMap {
    let m = alg.matrix_size();
    let sign = |i: usize| if i == 0 { -1 } else { 1 };
    linear_from_matrix_map(alg, |x| {
        (0..m)
            .map(|i| {
                (0..m)
                    .map(|j| {
                        x[i][j].scale(&num_rational::BigRational::from_integer(
                            (sign(i) * sign(j)).into(),
                        ))
                    })
                    .collect()
            })
            .collect()
    })
}

/// 𝔬ₘ over K(√α) with X ↦ D·X̄·D, D = diag(−1, 1, …, 1).
#[allow(non_snake_case)]
pub fn action_typeD_Z2(m: usize, alpha: &RatFunc) -> Result<SemilinearAction, DescentError> {
    if m < 8 || !m.is_multiple_of(2) {
        return Err(DescentError::Ineligible(format!(
            "type D needs even m >= 8, got {m}"
        )));
    }
    check_alpha(alpha)?;
    let alg = make_so(m)?;
    let spec = TowerSpec::quadratic(alpha.clone())?;
    let linear = conjugation_by_flip(&alg);
    let field = FieldAutomorphism::new(AutomorphismKind::Bar, &spec)?;
    SemilinearAction::from_parts(
        GroupKind::Z2,
        alg,
        spec,
        vec![Generator {
            name: "tau".into(),
            linear,
            field,
        }],
        format!("so{m}, X -> D bar(X) D"),
    )
}

/// 𝔬₈ over `spec` with σ acting by S on the seven vectors (paired with
/// ∛β ↦ ω∛β) and/or τ acting by diag(−1,1,1,1) (paired with τ on L, or with
/// the conjugation of K(√α) when there is no cube-root layer).
#[allow(non_snake_case)]
pub fn action_D4(
    sigma: bool,
    tau: bool,
    spec: &Arc<TowerSpec>,
) -> Result<SemilinearAction, DescentError> {
    let alg = make_so(8)?;
    let group = match (sigma, tau) {
        (false, false) => return Ok(action_trivial(&alg, spec)),
        (true, false) => GroupKind::Z3,
        (false, true) => GroupKind::Z2,
        (true, true) => GroupKind::S3,
    };
    let mut gens = Vec::new();
    if sigma {
        if !spec.has_cbrt() {
            return Err(DescentError::MissingLayer(
                "sigma needs a cube-root layer".into(),
            ));
        }
        gens.push(Generator {
            name: "sigma".into(),
            linear: seven_linear_map(&triality_matrix()),
            field: FieldAutomorphism::new(AutomorphismKind::Sigma, spec)?,
        });
    }
    if tau {
        let kind = match (spec.has_sqrt(), spec.has_cbrt()) {
            (false, _) => {
                return Err(DescentError::MissingLayer(
                    "tau needs a square-root layer".into(),
                ))
            }
            (true, true) => {
                if spec.gamma().is_none() {
                    return Err(DescentError::MissingLayer("tau needs gamma".into()));
                }
                AutomorphismKind::Tau
            }
            (true, false) => AutomorphismKind::Bar,
        };
        gens.push(Generator {
            name: "tau".into(),
            linear: seven_linear_map(&flip_matrix()),
            field: FieldAutomorphism::new(kind, spec)?,
        });
    }
    SemilinearAction::from_parts(
        group,
        alg,
        spec.clone(),
        gens,
        format!("so8 triality, group {group}"),
    )
}
