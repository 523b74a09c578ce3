use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use super::algebra::DLieAlgebra;
use super::LieError;
use crate::field_tower::{
    same_tower, ConstScalar, FieldAutomorphism, RatFunc, TowerElement, TowerSpec,
};

/// An element of 𝔤₀(L) = 𝔤₀ ⊗ L, coordinates on the algebra's basis.
#[derive(Clone, Debug)]
pub struct LieElement {
    algebra: Arc<DLieAlgebra>,
    spec: Arc<TowerSpec>,
    coords: Vec<TowerElement>,
}

impl PartialEq for LieElement {
    fn eq(&self, o: &Self) -> bool {
        self.algebra == o.algebra && self.coords == o.coords
    }
}

impl Eq for LieElement {}

fn add_scaled(acc: &mut TowerElement, c: &ConstScalar, x: &TowerElement) {
    *acc = if c.is_one() {
        &*acc + x
    } else if (-c).is_one() {
        &*acc - x
    } else {
        &*acc + &x.scale_k(&RatFunc::from_scalar(c.clone()))
    };
}

impl LieElement {
    pub fn zero(algebra: &Arc<DLieAlgebra>, spec: &Arc<TowerSpec>) -> Self {
        Self {
            algebra: algebra.clone(),
            spec: spec.clone(),
            coords: vec![TowerElement::zero(spec); algebra.dim()],
        }
    }

    /// The basis vector `B_i`.
    pub fn basis(algebra: &Arc<DLieAlgebra>, spec: &Arc<TowerSpec>, i: usize) -> Self {
        let mut x = Self::zero(algebra, spec);
        x.coords[i] = TowerElement::one(spec);
        x
    }

    pub fn from_coords(
        algebra: &Arc<DLieAlgebra>,
        coords: Vec<TowerElement>,
    ) -> Result<Self, LieError> {
        if coords.len() != algebra.dim() {
            return Err(LieError::DimensionMismatch {
                expected: algebra.dim(),
                got: coords.len(),
            });
        }
        let spec = coords[0].spec().clone();
        if coords.iter().any(|c| !same_tower(c.spec(), &spec)) {
            return Err(LieError::Field(
                crate::field_tower::FieldError::TowerMismatch,
            ));
        }
        Ok(Self {
            algebra: algebra.clone(),
            spec,
            coords,
        })
    }

    /// From K-coefficients (all coordinates in K).
    pub fn from_k_coords(
        algebra: &Arc<DLieAlgebra>,
        spec: &Arc<TowerSpec>,
        coords: &[RatFunc],
    ) -> Self {
        assert_eq!(coords.len(), algebra.dim());
        Self {
            algebra: algebra.clone(),
            spec: spec.clone(),
            coords: coords
                .iter()
                .map(|c| TowerElement::from_k(spec, c.clone()))
                .collect(),
        }
    }

    pub fn algebra(&self) -> &Arc<DLieAlgebra> {
        &self.algebra
    }

    pub fn spec(&self) -> &Arc<TowerSpec> {
        &self.spec
    }

    pub fn coords(&self) -> &[TowerElement] {
        &self.coords
    }

    pub fn coord(&self, i: usize) -> &TowerElement {
        &self.coords[i]
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(TowerElement::is_zero)
    }

    fn check(&self, o: &Self) -> Result<(), LieError> {
        if self.algebra != o.algebra {
            return Err(LieError::AlgebraMismatch);
        }
        if !same_tower(&self.spec, &o.spec) {
            return Err(LieError::Field(
                crate::field_tower::FieldError::TowerMismatch,
            ));
        }
        Ok(())
    }

    pub fn try_add(&self, o: &Self) -> Result<Self, LieError> {
        self.check(o)?;
        Ok(self.zip(o, |a, b| a + b))
    }

    pub fn try_sub(&self, o: &Self) -> Result<Self, LieError> {
        self.check(o)?;
        Ok(self.zip(o, |a, b| a - b))
    }

    fn zip(&self, o: &Self, f: impl Fn(&TowerElement, &TowerElement) -> TowerElement) -> Self {
        Self {
            algebra: self.algebra.clone(),
            spec: self.spec.clone(),
            coords: self
                .coords
                .iter()
                .zip(&o.coords)
                .map(|(a, b)| f(a, b))
                .collect(),
        }
    }

    fn map(&self, f: impl Fn(&TowerElement) -> TowerElement) -> Self {
        Self {
            algebra: self.algebra.clone(),
            spec: self.spec.clone(),
            coords: self.coords.iter().map(f).collect(),
        }
    }

    pub fn neg(&self) -> Self {
        self.map(TowerElement::neg)
    }

    pub fn scale(&self, s: &TowerElement) -> Result<Self, LieError> {
        if !same_tower(s.spec(), &self.spec) {
            return Err(LieError::Field(
                crate::field_tower::FieldError::TowerMismatch,
            ));
        }
        Ok(self.map(|c| if c.is_zero() { c.clone() } else { c * s }))
    }

    pub fn scale_k(&self, r: &RatFunc) -> Self {
        self.map(|c| c.scale_k(r))
    }

    pub fn bracket(&self, o: &Self) -> Result<Self, LieError> {
        self.check(o)?;
        let mut out = vec![TowerElement::zero(&self.spec); self.algebra.dim()];
        for (i, x) in self.coords.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in o.coords.iter().enumerate() {
                if i == j || y.is_zero() {
                    continue;
                }
                let terms = self.algebra.bracket_basis(i, j);
                if terms.is_empty() {
                    continue;
                }
                let xy = x * y;
                for (k, c) in terms {
                    add_scaled(&mut out[*k], c, &xy);
                }
            }
        }
        Ok(Self {
            algebra: self.algebra.clone(),
            spec: self.spec.clone(),
            coords: out,
        })
    }

    /// Entry-wise derivative (the basis matrices are constant).
    pub fn derive(&self) -> Self {
        self.map(TowerElement::derive)
    }

    /// Apply a field automorphism to every coordinate.
    pub fn apply_field(&self, phi: &FieldAutomorphism) -> Result<Self, LieError> {
        let coords = self
            .coords
            .iter()
            .map(|c| phi.apply(c))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Self {
            algebra: self.algebra.clone(),
            spec: self.spec.clone(),
            coords,
        })
    }

    /// Apply a k-linear map given by sparse rows `out_a = Σ_b m[a][b]·x_b`.
    pub fn apply_linear(&self, rows: &[Vec<(usize, ConstScalar)>]) -> Self {
        let coords = rows
            .iter()
            .map(|row| {
                let mut acc = TowerElement::zero(&self.spec);
                for (b, c) in row {
                    if !self.coords[*b].is_zero() {
                        add_scaled(&mut acc, c, &self.coords[*b]);
                    }
                }
                acc
            })
            .collect();
        Self {
            algebra: self.algebra.clone(),
            spec: self.spec.clone(),
            coords,
        }
    }

    /// Apply a K-matrix `out_a = Σ_b m[a][b]·x_b` (dense rows).
    pub fn apply_k_matrix(&self, m: &[Vec<RatFunc>]) -> Self {
        let coords = m
            .iter()
            .map(|row| {
                let mut acc = TowerElement::zero(&self.spec);
                for (r, x) in row.iter().zip(&self.coords) {
                    if !r.is_zero() && !x.is_zero() {
                        acc = &acc + &x.scale_k(r);
                    }
                }
                acc
            })
            .collect();
        Self {
            algebra: self.algebra.clone(),
            spec: self.spec.clone(),
            coords,
        }
    }

    /// Base extension to a larger tower.
    pub fn lift(&self, spec: &Arc<TowerSpec>) -> Result<Self, LieError> {
        let coords = self
            .coords
            .iter()
            .map(|c| c.lift(spec))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Self {
            algebra: self.algebra.clone(),
            spec: spec.clone(),
            coords,
        })
    }

    /// Coordinates over K of length `dim·[L:K]`, index `basis·[L:K] + monomial`.
    pub fn to_k_vector(&self) -> Vec<RatFunc> {
        self.coords
            .iter()
            .flat_map(|c| c.coords().iter().cloned())
            .collect()
    }

    pub fn from_k_vector(algebra: &Arc<DLieAlgebra>, spec: &Arc<TowerSpec>, v: &[RatFunc]) -> Self {
        let deg = spec.degree();
        assert_eq!(v.len(), algebra.dim() * deg);
        Self {
            algebra: algebra.clone(),
            spec: spec.clone(),
            coords: v
                .chunks(deg)
                .map(|c| TowerElement::from_coords(spec, c.to_vec()))
                .collect(),
        }
    }

    /// Nonzero coordinates keyed by basis label.
    pub fn coordinate_map(&self) -> BTreeMap<String, String> {
        self.coords
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| (self.algebra.label(i).to_string(), c.to_string()))
            .collect()
    }
}

impl fmt::Display for LieElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self
            .coords
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| format!("({})*{}", c, self.algebra.label(i)))
            .collect();
        if terms.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", terms.join(" + "))
        }
    }
}

/// The derivation X ↦ ∂X + [D, X], with ∂ acting entry-wise.
#[derive(Clone, Debug, Default)]
pub struct DerivationOp {
    twist: Option<LieElement>,
}

impl DerivationOp {
    pub fn untwisted() -> Self {
        Self { twist: None }
    }

    pub fn twisted(d: LieElement) -> Self {
        Self { twist: Some(d) }
    }

    pub fn twist(&self) -> Option<&LieElement> {
        self.twist.as_ref()
    }

    pub fn apply(&self, x: &LieElement) -> Result<LieElement, LieError> {
        let dx = x.derive();
        match &self.twist {
            None => Ok(dx),
            Some(d) => {
                let d = if same_tower(d.spec(), x.spec()) {
                    d.clone()
                } else {
                    d.lift(x.spec())?
                };
                dx.try_add(&d.bracket(x)?)
            }
        }
    }
}

pub fn derive_element(d: &DerivationOp, x: &LieElement) -> Result<LieElement, LieError> {
    d.apply(x)
}

/// Leibniz rule for `d` on every pair of basis vectors scaled by each of
/// `1, t, √α, ∛β` (those present in `spec`).
pub fn leibniz_check(
    d: &DerivationOp,
    g: &Arc<DLieAlgebra>,
    spec: &Arc<TowerSpec>,
) -> Result<bool, LieError> {
    let mut scalars = vec![TowerElement::one(spec), TowerElement::t(spec)];
    scalars.extend(TowerElement::sqrt_alpha(spec));
    scalars.extend(TowerElement::cbrt_beta(spec));
    let n = g.dim();
    let scaled: Vec<Vec<LieElement>> = (0..n)
        .map(|i| {
            let b = LieElement::basis(g, spec, i);
            scalars.iter().map(|s| b.scale(s).unwrap()).collect()
        })
        .collect();
    let derived: Vec<Vec<LieElement>> = scaled
        .iter()
        .map(|v| v.iter().map(|x| d.apply(x)).collect::<Result<Vec<_>, _>>())
        .collect::<Result<_, _>>()?;
    for i in 0..n {
        for j in 0..n {
            for (x, dx) in scaled[i].iter().zip(&derived[i]) {
                for (y, dy) in scaled[j].iter().zip(&derived[j]) {
                    let lhs = d.apply(&x.bracket(y)?)?;
                    let rhs = dx.bracket(y)?.try_add(&x.bracket(dy)?)?;
                    if lhs != rhs {
                        return Ok(false);
                    }
                }
            }
        }
    }
    Ok(true)
}

/// Verify that the K-matrix `phi` (columns are images of basis vectors)
/// is an isomorphism (g, d_g + ad D) → (g2, d_g2): bracket-preserving and
/// intertwining the derivations on every basis vector. All computations
/// happen in the tower of `twist`.
pub fn quasi_iso_verify(
    g: &Arc<DLieAlgebra>,
    d_g: &DerivationOp,
    g2: &Arc<DLieAlgebra>,
    d_g2: &DerivationOp,
    twist: &LieElement,
    phi: &[Vec<RatFunc>],
) -> Result<bool, LieError> {
    let n = g.dim();
    if g2.dim() != n || phi.len() != n || phi.iter().any(|r| r.len() != n) {
        return Err(LieError::DimensionMismatch {
            expected: n,
            got: phi.len(),
        });
    }
    if crate::linalg::invert(phi).is_none() {
        return Err(LieError::Singular);
    }
    if twist.algebra() != g {
        return Err(LieError::AlgebraMismatch);
    }
    let spec = twist.spec();
    let image = |x: &LieElement| -> LieElement {
        LieElement {
            algebra: g2.clone(),
            spec: spec.clone(),
            coords: x.apply_k_matrix(phi).coords,
        }
    };
    let basis: Vec<LieElement> = (0..n).map(|i| LieElement::basis(g, spec, i)).collect();
    let images: Vec<LieElement> = basis.iter().map(&image).collect();
    for i in 0..n {
        for j in i + 1..n {
            if image(&basis[i].bracket(&basis[j])?) != images[i].bracket(&images[j])? {
                return Ok(false);
            }
        }
    }
    let source = DerivationOp::twisted(match d_g.twist() {
        Some(d0) => d0.lift(spec)?.try_add(twist)?,
        None => twist.clone(),
    });
    for (b, img) in basis.iter().zip(&images) {
        if image(&source.apply(b)?) != d_g2.apply(img)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The K-matrix of `X ↦ g·X·g⁻¹` for an invertible `g` with entries in K.
pub fn adjoint_matrix(
    alg: &DLieAlgebra,
    gm: &[Vec<RatFunc>],
) -> Result<Vec<Vec<RatFunc>>, LieError> {
    let n = alg.matrix_size();
    let inv = crate::linalg::invert(gm).ok_or(LieError::Singular)?;
    let mul = |a: &[Vec<RatFunc>], b: &[Vec<RatFunc>]| -> Vec<Vec<RatFunc>> {
        (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        let mut acc = RatFunc::zero();
                        for k in 0..n {
                            if !a[i][k].is_zero() && !b[k][j].is_zero() {
                                acc = &acc + &(&a[i][k] * &b[k][j]);
                            }
                        }
                        acc
                    })
                    .collect()
            })
            .collect()
    };
    let dim = alg.dim();
    let mut phi = vec![vec![RatFunc::zero(); dim]; dim];
    for b in 0..dim {
        let bm: Vec<Vec<RatFunc>> = alg
            .basis_matrix(b)
            .into_iter()
            .map(|r| r.into_iter().map(RatFunc::from_scalar).collect())
            .collect();
        let conj = mul(&mul(gm, &bm), &inv);
        for (a, c) in alg.coords_of_matrix(&conj)?.into_iter().enumerate() {
            phi[a][b] = c;
        }
    }
    Ok(phi)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field_tower::Poly;
    use crate::lie::{make_sl, make_so};

    fn alpha() -> RatFunc {
        RatFunc::from_poly(Poly::from_ints(&[1, 0, 0, -1]))
    }

    #[test]
    fn basic_brackets() {
        let g = make_sl(3).unwrap();
        let k = TowerSpec::base();
        let e01 = LieElement::basis(&g, &k, g.e(0, 1));
        let e12 = LieElement::basis(&g, &k, g.e(1, 2));
        assert_eq!(
            e01.bracket(&e12).unwrap(),
            LieElement::basis(&g, &k, g.e(0, 2))
        );
        assert!(e01.bracket(&e01).unwrap().is_zero());
    }

    #[test]
    fn bracket_is_bilinear_over_the_tower() {
        let g = make_sl(3).unwrap();
        let m = TowerSpec::quadratic(alpha()).unwrap();
        let r = TowerElement::sqrt_alpha(&m).unwrap();
        let x = LieElement::basis(&g, &m, g.e(0, 1));
        let y = LieElement::basis(&g, &m, g.e(1, 0));
        assert_eq!(
            x.scale(&r).unwrap().bracket(&y).unwrap(),
            x.bracket(&y).unwrap().scale(&r).unwrap()
        );
    }

    #[test]
    fn derivation_examples() {
        let g = make_sl(2).unwrap();
        let k = TowerSpec::base();
        let e01 = LieElement::basis(&g, &k, g.e(0, 1));
        let e10 = LieElement::basis(&g, &k, g.e(1, 0));
        let d = DerivationOp::untwisted();
        assert!(d.apply(&e01).unwrap().is_zero());
        assert_eq!(d.apply(&e01.scale_k(&RatFunc::t())).unwrap(), e01);
        let tw = DerivationOp::twisted(e01.clone());
        assert_eq!(tw.apply(&e10).unwrap(), LieElement::basis(&g, &k, g.h(0)));
    }

    #[test]
    fn leibniz_untwisted_so5_over_quadratic() {
        let g = make_so(5).unwrap();
        let m = TowerSpec::quadratic(alpha()).unwrap();
        assert!(leibniz_check(&DerivationOp::untwisted(), &g, &m).unwrap());
    }

    #[test]
    fn conjugation_witness() {
        // Ad(I + t·E01) carries (sl2, ∂ + ad E01) to (sl2, ∂)
        let g = make_sl(2).unwrap();
        let k = TowerSpec::base();
        let gm = vec![
            vec![RatFunc::one(), RatFunc::t()],
            vec![RatFunc::zero(), RatFunc::one()],
        ];
        let phi = adjoint_matrix(&g, &gm).unwrap();
        let d = LieElement::basis(&g, &k, g.e(0, 1));
        let plain = DerivationOp::untwisted();
        assert!(quasi_iso_verify(&g, &plain, &g, &plain, &d, &phi).unwrap());
        // identity does not intertwine
        let id: Vec<Vec<RatFunc>> = (0..3)
            .map(|i| {
                (0..3)
                    .map(|j| {
                        if i == j {
                            RatFunc::one()
                        } else {
                            RatFunc::zero()
                        }
                    })
                    .collect()
            })
            .collect();
        assert!(!quasi_iso_verify(&g, &plain, &g, &plain, &d, &id).unwrap());
        assert!(
            quasi_iso_verify(&g, &plain, &g, &DerivationOp::twisted(d.clone()), &d, &id).unwrap()
        );
        let singular = vec![vec![RatFunc::zero(); 3]; 3];
        assert_eq!(
            quasi_iso_verify(&g, &plain, &g, &plain, &d, &singular),
            Err(LieError::Singular)
        );
    }
}
