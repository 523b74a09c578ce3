//! Validation of the data (α, β, γ) defining an S3-extension L = K(√α, ∛β).

use serde::{Deserialize, Serialize};

use super::automorphism::{AutomorphismKind, FieldAutomorphism};
use super::noncube::{noncube_certify, NonCubeVerdict};
use super::powers::is_square_geometric;
use super::ratfunc::RatFunc;
use super::tower::{Monomial, TowerElement, TowerSpec};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct S3Report {
    /// (a) α is not a square in ℂ(t).
    pub alpha_not_square: bool,
    /// (b) β is certified not to be a cube.
    pub beta_not_cube: bool,
    pub noncube: Option<NonCubeVerdict>,
    /// (c) γ³ = β·β̄.
    pub gamma_cubed_is_norm: bool,
    /// τ(∛β)·∛β = γ, when τ is defined on the tower.
    pub tau_product_is_gamma: Option<bool>,
    pub notes: Vec<String>,
}

impl S3Report {
    pub fn passed(&self) -> bool {
        self.alpha_not_square
            && self.beta_not_cube
            && self.gamma_cubed_is_norm
            && self.tau_product_is_gamma != Some(false)
    }
}

/// Check conditions (a)–(c) for `beta ∈ K(√α)`. Failures are report entries.
pub fn check_s3_extension(
    alpha: &RatFunc,
    beta: &TowerElement,
    gamma: &RatFunc,
    limit: usize,
) -> S3Report {
    let mut notes = Vec::new();
    let alpha_not_square = match is_square_geometric(alpha) {
        Ok(sq) => !sq,
        Err(e) => {
            notes.push(format!("alpha: {e}"));
            false
        }
    };

    let m = match TowerSpec::quadratic(alpha.clone()) {
        Ok(m) => m,
        Err(e) => {
            notes.push(format!("tower: {e}"));
            return S3Report {
                alpha_not_square,
                beta_not_cube: false,
                noncube: None,
                gamma_cubed_is_norm: false,
                tau_product_is_gamma: None,
                notes,
            };
        }
    };
    let beta = match beta.lift(&m) {
        Ok(b) if b.in_quadratic_subfield() => b,
        _ => {
            notes.push("beta does not lie in K(r2)".into());
            TowerElement::zero(&m)
        }
    };

    let noncube = if beta.is_zero() {
        None
    } else {
        match noncube_certify(&beta, limit) {
            Ok(v) => Some(v),
            Err(e) => {
                notes.push(format!("noncube: {e}"));
                None
            }
        }
    };
    let beta_not_cube = noncube.as_ref().is_some_and(NonCubeVerdict::is_certified);

    let b0 = beta.coord(Monomial::ONE);
    let b1 = beta.coord(Monomial { sqrt: 1, cbrt: 0 });
    let norm = &(&b0 * &b0) - &(&(&b1 * &b1) * alpha);
    let gamma_cubed = gamma.pow(3).expect("nonnegative power");
    let gamma_cubed_is_norm = !gamma.is_zero() && gamma_cubed == norm;
    if !gamma_cubed_is_norm {
        notes.push(format!(
            "gamma^3 = {gamma_cubed} but beta*bar(beta) = {norm}"
        ));
    }

    let mut tau_product_is_gamma = None;
    if gamma_cubed_is_norm && !beta.is_zero() {
        let tau = TowerSpec::new(Some(alpha.clone()), Some([b0, b1]), Some(gamma.clone()))
            .and_then(|l| {
                let tau = FieldAutomorphism::new(AutomorphismKind::Tau, &l)?;
                let r3 = TowerElement::cbrt_beta(&l).unwrap();
                let prod = &tau.apply(&r3)? * &r3;
                Ok(prod == TowerElement::from_k(&l, gamma.clone()))
            });
        match tau {
            Ok(ok) => tau_product_is_gamma = Some(ok),
            Err(e) => notes.push(format!("tau: {e}")),
        }
    }

    S3Report {
        alpha_not_square,
        beta_not_cube,
        noncube,
        gamma_cubed_is_norm,
        tau_product_is_gamma,
        notes,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field_tower::noncube::DEFAULT_SPECIALIZATION_LIMIT;
    use crate::field_tower::poly::Poly;

    fn example(gamma: RatFunc) -> S3Report {
        let alpha = RatFunc::from_poly(Poly::from_ints(&[1, 0, 0, -1]));
        let m = TowerSpec::quadratic(alpha.clone()).unwrap();
        let beta = &TowerElement::one(&m) + &TowerElement::sqrt_alpha(&m).unwrap();
        check_s3_extension(&alpha, &beta, &gamma, DEFAULT_SPECIALIZATION_LIMIT)
    }

    #[test]
    fn example_data_passes() {
        let r = example(RatFunc::t());
        assert!(r.alpha_not_square && r.beta_not_cube && r.gamma_cubed_is_norm);
        assert_eq!(r.tau_product_is_gamma, Some(true));
        assert!(r.passed());
    }

    #[test]
    fn wrong_gamma_fails_c() {
        let r = example(RatFunc::from_poly(Poly::from_ints(&[0, 2])));
        assert!(r.alpha_not_square && r.beta_not_cube);
        assert!(!r.gamma_cubed_is_norm);
        assert!(!r.passed());
    }

    #[test]
    fn square_alpha_fails_a() {
        let alpha = RatFunc::from_poly(Poly::from_ints(&[0, 0, 1]));
        let m = TowerSpec::quadratic(alpha.clone()).unwrap();
        let beta = TowerElement::t(&m);
        let r = check_s3_extension(&alpha, &beta, &RatFunc::t(), 5);
        assert!(!r.alpha_not_square);
        assert!(!r.passed());
    }
}
