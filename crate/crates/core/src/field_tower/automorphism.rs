use std::fmt;
use std::sync::Arc;

use super::ratfunc::RatFunc;
use super::tower::{TowerElement, TowerSpec};
use super::FieldError;

#[derive(Copy, Clone, PartialEq, Eq, Hash, Debug, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum AutomorphismKind {
    Id,
    /// √α ↦ −√α, ∛β fixed.
    Bar,
    /// √α fixed, ∛β ↦ ω∛β.
    Sigma,
    /// √α ↦ −√α, ∛β ↦ γ/∛β.
    Tau,
}

impl fmt::Display for AutomorphismKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Self::Id => "id",
            Self::Bar => "bar",
            Self::Sigma => "sigma",
            Self::Tau => "tau",
        };
        f.write_str(s)
    }
}

/// A K-automorphism of L, stored as the images of the monomial basis.
#[derive(Clone, Debug)]
pub struct FieldAutomorphism {
    kind: AutomorphismKind,
    spec: Arc<TowerSpec>,
    images: Vec<TowerElement>,
}

impl FieldAutomorphism {
    /// Build `kind` on `spec`, checking that the generator images satisfy the
    /// defining relations (√α)² = α and (∛β)³ = β.
    pub fn new(kind: AutomorphismKind, spec: &Arc<TowerSpec>) -> Result<Self, FieldError> {
        let undefined = |reason: &str| FieldError::UndefinedAutomorphism {
            name: kind.to_string(),
            reason: reason.to_string(),
        };
        let r2 = TowerElement::sqrt_alpha(spec);
        let r3 = TowerElement::cbrt_beta(spec);
        let (img2, img3) = match kind {
            AutomorphismKind::Id => (r2.clone(), r3.clone()),
            AutomorphismKind::Bar => {
                let r2 = r2.ok_or_else(|| undefined("no square-root layer"))?;
                (Some(r2.neg()), r3.clone())
            }
            AutomorphismKind::Sigma => {
                let r3 = r3.clone().ok_or_else(|| undefined("no cube-root layer"))?;
                (r2.clone(), Some(r3.omega_twist(1)))
            }
            AutomorphismKind::Tau => {
                let r2 = r2.ok_or_else(|| undefined("no square-root layer"))?;
                let r3 = r3.clone().ok_or_else(|| undefined("no cube-root layer"))?;
                let gamma = spec
                    .gamma()
                    .ok_or_else(|| undefined("gamma is not given"))?;
                let beta_inv = TowerElement::beta(spec).unwrap().inv()?;
                // γ/∛β = (γ/β)·(∛β)²
                let img = (&beta_inv * &r3.pow(2)).scale_k(gamma);
                (Some(r2.neg()), Some(img))
            }
        };

        let one = TowerElement::one(spec);
        if let (Some(i2), Some(alpha)) = (&img2, spec.alpha()) {
            if i2.pow(2) != TowerElement::from_k(spec, alpha.clone()) {
                return Err(undefined("image of r2 does not square to alpha"));
            }
        }
        if let (Some(i3), Some([b0, b1])) = (&img3, spec.beta()) {
            let mut beta_image = TowerElement::from_k(spec, b0.clone());
            if let Some(i2) = &img2 {
                beta_image = &beta_image + &i2.scale_k(b1);
            }
            if i3.pow(3) != beta_image {
                return Err(undefined("image of r3 does not cube to the image of beta"));
            }
        }

        let images = spec
            .monomials()
            .iter()
            .map(|m| {
                let mut x = one.clone();
                if m.sqrt == 1 {
                    x = &x * img2.as_ref().unwrap();
                }
                for _ in 0..m.cbrt {
                    x = &x * img3.as_ref().unwrap();
                }
                x
            })
            .collect();
        Ok(Self {
            kind,
            spec: spec.clone(),
            images,
        })
    }

    pub fn identity(spec: &Arc<TowerSpec>) -> Self {
        Self::new(AutomorphismKind::Id, spec).expect("identity is always defined")
    }

    pub fn kind(&self) -> AutomorphismKind {
        self.kind
    }

    pub fn spec(&self) -> &Arc<TowerSpec> {
        &self.spec
    }

    /// Image of the `k`-th basis monomial.
    pub fn image_of_monomial(&self, k: usize) -> &TowerElement {
        &self.images[k]
    }

    pub fn is_identity_on_field(&self) -> bool {
        self.images.iter().enumerate().all(|(k, img)| {
            img.coords()
                .iter()
                .enumerate()
                .all(|(j, c)| if j == k { c.is_one() } else { c.is_zero() })
        })
    }

    pub fn apply(&self, x: &TowerElement) -> Result<TowerElement, FieldError> {
        if !(Arc::ptr_eq(x.spec(), &self.spec) || **x.spec() == *self.spec) {
            return Err(FieldError::TowerMismatch);
        }
        if self.kind == AutomorphismKind::Id {
            return Ok(x.clone());
        }
        let mut out = TowerElement::zero(&self.spec);
        for (c, img) in x.coords().iter().zip(&self.images) {
            if !c.is_zero() {
                out = &out + &img.scale_k(c);
            }
        }
        Ok(out)
    }
}

/// `x·bar(x)` for x ∈ M; the r2-coordinate of the result vanishes.
pub fn quadratic_norm(x: &TowerElement) -> Result<RatFunc, FieldError> {
    if !x.spec().has_sqrt() {
        return x.as_k().cloned().ok_or(FieldError::TowerMismatch);
    }
    let p = x * &x.sqrt_flip();
    p.as_k().cloned().ok_or_else(|| {
        FieldError::NotAField("element is not in K(r2), norm left an r3 component".into())
    })
}
