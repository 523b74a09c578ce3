//! Radical towers K ⊆ K(√α) ⊆ K(√α, ∛β) and their elements.

use std::fmt;
use std::sync::Arc;

use super::ratfunc::RatFunc;
use super::scalar::ConstScalar;
use super::FieldError;

/// A basis monomial `√α^sqrt · ∛β^cbrt` of L over K.
#[derive(Copy, Clone, PartialEq, Eq, Hash, Debug)]
pub struct Monomial {
    pub sqrt: u8,
    pub cbrt: u8,
}

impl Monomial {
    pub const ONE: Monomial = Monomial { sqrt: 0, cbrt: 0 };

    /// Display name in the `r2` / `r3` notation.
    pub fn name(&self) -> String {
        match (self.sqrt, self.cbrt) {
            (0, 0) => "1".into(),
            (1, 0) => "r2".into(),
            (0, 1) => "r3".into(),
            (0, c) => format!("r3^{c}"),
            (_, 1) => "r2*r3".into(),
            (_, c) => format!("r2*r3^{c}"),
        }
    }
}

/// Print order of the monomials: `1, r2, r3, r3^2, r2*r3, r2*r3^2`.
const MONOMIAL_ORDER: [Monomial; 6] = [
    Monomial { sqrt: 0, cbrt: 0 },
    Monomial { sqrt: 1, cbrt: 0 },
    Monomial { sqrt: 0, cbrt: 1 },
    Monomial { sqrt: 0, cbrt: 2 },
    Monomial { sqrt: 1, cbrt: 1 },
    Monomial { sqrt: 1, cbrt: 2 },
];

/// Defining data of a tower. `beta = b0 + b1·√α` lives in M = K(√α) and
/// `gamma`, when present, is the K-element used to define τ(∛β) = γ/∛β.
#[derive(Debug)]
pub struct TowerSpec {
    alpha: Option<RatFunc>,
    beta: Option<[RatFunc; 2]>,
    gamma: Option<RatFunc>,
    monomials: Vec<Monomial>,
    index: [[Option<usize>; 3]; 2],
    /// ∂α / 2α
    dlog_sqrt: RatFunc,
    /// ∂β / 3β as an element of M
    dlog_cbrt: [RatFunc; 2],
}

impl PartialEq for TowerSpec {
    fn eq(&self, o: &Self) -> bool {
        self.alpha == o.alpha && self.beta == o.beta && self.gamma == o.gamma
    }
}

impl Eq for TowerSpec {}

impl TowerSpec {
    /// K itself.
    pub fn base() -> Arc<Self> {
        Self::new(None, None, None).expect("base tower")
    }

    /// M = K(√α).
    pub fn quadratic(alpha: RatFunc) -> Result<Arc<Self>, FieldError> {
        Self::new(Some(alpha), None, None)
    }

    /// K(∛β) with β ∈ K.
    pub fn cubic(beta: RatFunc) -> Result<Arc<Self>, FieldError> {
        Self::new(None, Some([beta, RatFunc::zero()]), None)
    }

    /// K(√α, ∛β) with β given by its coordinates `[b0, b1]` on `1, √α`.
    pub fn new(
        alpha: Option<RatFunc>,
        beta: Option<[RatFunc; 2]>,
        gamma: Option<RatFunc>,
    ) -> Result<Arc<Self>, FieldError> {
        if alpha.as_ref().is_some_and(RatFunc::is_zero) {
            return Err(FieldError::MalformedTower("alpha must be nonzero".into()));
        }
        if let Some([b0, b1]) = &beta {
            if b0.is_zero() && b1.is_zero() {
                return Err(FieldError::MalformedTower("beta must be nonzero".into()));
            }
            if !b1.is_zero() && alpha.is_none() {
                return Err(FieldError::MalformedTower(
                    "beta has an r2 component but the tower has no square-root layer".into(),
                ));
            }
        }
        if let Some(g) = &gamma {
            if alpha.is_none() || beta.is_none() {
                return Err(FieldError::MalformedTower(
                    "gamma requires both radical layers".into(),
                ));
            }
            if g.is_zero() {
                return Err(FieldError::MalformedTower("gamma must be nonzero".into()));
            }
        }

        let sqrt_layer = if alpha.is_some() { 2 } else { 1 };
        let cbrt_layer = if beta.is_some() { 3 } else { 1 };
        let monomials: Vec<Monomial> = MONOMIAL_ORDER
            .iter()
            .copied()
            .filter(|m| (m.sqrt as usize) < sqrt_layer && (m.cbrt as usize) < cbrt_layer)
            .collect();
        let mut index = [[None; 3]; 2];
        for (k, m) in monomials.iter().enumerate() {
            index[m.sqrt as usize][m.cbrt as usize] = Some(k);
        }

        let dlog_sqrt = match &alpha {
            Some(a) => &a.derive() / &(a * &RatFunc::from_int(2)),
            None => RatFunc::zero(),
        };
        let dlog_cbrt = match &beta {
            None => [RatFunc::zero(), RatFunc::zero()],
            Some([b0, b1]) => {
                // ∂β = ∂b0 + (∂b1 + b1·∂α/2α)·√α, divided by 3β inside M.
                let d0 = b0.derive();
                let d1 = &b1.derive() + &(b1 * &dlog_sqrt);
                let three = RatFunc::from_int(3);
                let (c0, c1) = (b0 * &three, b1 * &three);
                let alpha_v = alpha.clone().unwrap_or_else(RatFunc::zero);
                let norm = &(&c0 * &c0) - &(&(&c1 * &c1) * &alpha_v);
                let Some(norm_inv) = norm.inv() else {
                    return Err(FieldError::MalformedTower(
                        "beta is not invertible in K(r2)".into(),
                    ));
                };
                // (d0 + d1 r)(c0 − c1 r) = (d0 c0 − d1 c1 α) + (d1 c0 − d0 c1) r
                let e0 = &(&(&d0 * &c0) - &(&(&d1 * &c1) * &alpha_v)) * &norm_inv;
                let e1 = &(&(&d1 * &c0) - &(&d0 * &c1)) * &norm_inv;
                [e0, e1]
            }
        };

        Ok(Arc::new(Self {
            alpha,
            beta,
            gamma,
            monomials,
            index,
            dlog_sqrt,
            dlog_cbrt,
        }))
    }

    pub fn alpha(&self) -> Option<&RatFunc> {
        self.alpha.as_ref()
    }

    pub fn beta(&self) -> Option<&[RatFunc; 2]> {
        self.beta.as_ref()
    }

    pub fn gamma(&self) -> Option<&RatFunc> {
        self.gamma.as_ref()
    }

    pub fn has_sqrt(&self) -> bool {
        self.alpha.is_some()
    }

    pub fn has_cbrt(&self) -> bool {
        self.beta.is_some()
    }

    /// [L : K].
    pub fn degree(&self) -> usize {
        self.monomials.len()
    }

    pub fn monomials(&self) -> &[Monomial] {
        &self.monomials
    }

    pub fn index_of(&self, m: Monomial) -> Option<usize> {
        self.index
            .get(m.sqrt as usize)
            .and_then(|row| row.get(m.cbrt as usize))
            .copied()
            .flatten()
    }

    /// Text forms of the defining data, for reports.
    pub fn describe(&self) -> [Option<String>; 3] {
        let beta = self.beta.as_ref().map(|[b0, b1]| {
            if b1.is_zero() {
                b0.to_string()
            } else {
                let m = TowerSpec::quadratic(self.alpha.clone().unwrap()).unwrap();
                TowerElement::from_coords(&m, vec![b0.clone(), b1.clone()]).to_string()
            }
        });
        [
            self.alpha.as_ref().map(ToString::to_string),
            beta,
            self.gamma.as_ref().map(ToString::to_string),
        ]
    }
}

/// An element of L, by K-coordinates on the monomial basis of its tower.
#[derive(Clone, Debug)]
pub struct TowerElement {
    spec: Arc<TowerSpec>,
    coords: Vec<RatFunc>,
}

impl PartialEq for TowerElement {
    fn eq(&self, o: &Self) -> bool {
        (Arc::ptr_eq(&self.spec, &o.spec) || self.spec == o.spec) && self.coords == o.coords
    }
}

impl Eq for TowerElement {}

pub(crate) fn same_tower(a: &Arc<TowerSpec>, b: &Arc<TowerSpec>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

impl TowerElement {
    pub fn zero(spec: &Arc<TowerSpec>) -> Self {
        Self {
            spec: spec.clone(),
            coords: vec![RatFunc::zero(); spec.degree()],
        }
    }

    pub fn one(spec: &Arc<TowerSpec>) -> Self {
        Self::from_k(spec, RatFunc::one())
    }

    pub fn from_k(spec: &Arc<TowerSpec>, r: RatFunc) -> Self {
        let mut x = Self::zero(spec);
        x.coords[0] = r;
        x
    }

    pub fn from_int(spec: &Arc<TowerSpec>, v: i64) -> Self {
        Self::from_k(spec, RatFunc::from_int(v))
    }

    pub fn from_scalar(spec: &Arc<TowerSpec>, c: ConstScalar) -> Self {
        Self::from_k(spec, RatFunc::from_scalar(c))
    }

    pub fn t(spec: &Arc<TowerSpec>) -> Self {
        Self::from_k(spec, RatFunc::t())
    }

    /// Coordinates in the order of `spec.monomials()`. Panics on a length
    /// mismatch.
    pub fn from_coords(spec: &Arc<TowerSpec>, coords: Vec<RatFunc>) -> Self {
        assert_eq!(
            coords.len(),
            spec.degree(),
            "coordinate count must equal [L:K]"
        );
        Self {
            spec: spec.clone(),
            coords,
        }
    }

    pub fn monomial(spec: &Arc<TowerSpec>, m: Monomial) -> Option<Self> {
        let k = spec.index_of(m)?;
        let mut x = Self::zero(spec);
        x.coords[k] = RatFunc::one();
        Some(x)
    }

    /// √α, if the tower has a square-root layer.
    pub fn sqrt_alpha(spec: &Arc<TowerSpec>) -> Option<Self> {
        Self::monomial(spec, Monomial { sqrt: 1, cbrt: 0 })
    }

    /// ∛β, if the tower has a cube-root layer.
    pub fn cbrt_beta(spec: &Arc<TowerSpec>) -> Option<Self> {
        Self::monomial(spec, Monomial { sqrt: 0, cbrt: 1 })
    }

    /// β as an element of L.
    pub fn beta(spec: &Arc<TowerSpec>) -> Option<Self> {
        let [b0, b1] = spec.beta()?;
        let mut x = Self::from_k(spec, b0.clone());
        if !b1.is_zero() {
            x.coords[spec.index_of(Monomial { sqrt: 1, cbrt: 0 })?] = b1.clone();
        }
        Some(x)
    }

    pub fn spec(&self) -> &Arc<TowerSpec> {
        &self.spec
    }

    pub fn coords(&self) -> &[RatFunc] {
        &self.coords
    }

    pub fn into_coords(self) -> Vec<RatFunc> {
        self.coords
    }

    pub fn coord(&self, m: Monomial) -> RatFunc {
        self.spec
            .index_of(m)
            .map(|k| self.coords[k].clone())
            .unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(RatFunc::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.coords[0].is_one() && self.coords[1..].iter().all(RatFunc::is_zero)
    }

    /// The K-value when every non-trivial coordinate vanishes.
    pub fn as_k(&self) -> Option<&RatFunc> {
        self.coords[1..]
            .iter()
            .all(RatFunc::is_zero)
            .then(|| &self.coords[0])
    }

    /// True when the element lies in M = K(√α).
    pub fn in_quadratic_subfield(&self) -> bool {
        self.spec
            .monomials()
            .iter()
            .zip(&self.coords)
            .all(|(m, c)| m.cbrt == 0 || c.is_zero())
    }

    /// Re-express an element of a sub-tower (same α, fewer layers) in `spec`.
    pub fn lift(&self, spec: &Arc<TowerSpec>) -> Result<Self, FieldError> {
        if same_tower(&self.spec, spec) {
            return Ok(self.clone());
        }
        let mut out = Self::zero(spec);
        for (m, c) in self.spec.monomials().iter().zip(&self.coords) {
            if c.is_zero() {
                continue;
            }
            let k = spec.index_of(*m).ok_or(FieldError::TowerMismatch)?;
            out.coords[k] = c.clone();
        }
        if self.spec.has_sqrt() && self.spec.alpha() != spec.alpha() {
            return Err(FieldError::TowerMismatch);
        }
        Ok(out)
    }

    fn check(&self, o: &Self) -> Result<(), FieldError> {
        if same_tower(&self.spec, &o.spec) {
            Ok(())
        } else {
            Err(FieldError::TowerMismatch)
        }
    }

    pub fn try_add(&self, o: &Self) -> Result<Self, FieldError> {
        self.check(o)?;
        Ok(self.add_unchecked(o))
    }

    pub fn try_sub(&self, o: &Self) -> Result<Self, FieldError> {
        self.check(o)?;
        Ok(self.sub_unchecked(o))
    }

    pub fn try_mul(&self, o: &Self) -> Result<Self, FieldError> {
        self.check(o)?;
        Ok(self.mul_unchecked(o))
    }

    pub fn try_div(&self, o: &Self) -> Result<Self, FieldError> {
        self.check(o)?;
        Ok(self.mul_unchecked(&o.inv()?))
    }

    fn add_unchecked(&self, o: &Self) -> Self {
        Self {
            spec: self.spec.clone(),
            coords: self
                .coords
                .iter()
                .zip(&o.coords)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    fn sub_unchecked(&self, o: &Self) -> Self {
        Self {
            spec: self.spec.clone(),
            coords: self
                .coords
                .iter()
                .zip(&o.coords)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    fn mul_unchecked(&self, o: &Self) -> Self {
        let spec = &self.spec;
        if spec.degree() == 1 {
            return Self::from_k(spec, &self.coords[0] * &o.coords[0]);
        }
        // Exponent grid: sqrt up to 3 (after folding β's √α part), cbrt up to 4.
        let mut grid: [[RatFunc; 5]; 4] = Default::default();
        let mut touched = false;
        for (ma, a) in spec.monomials.iter().zip(&self.coords) {
            if a.is_zero() {
                continue;
            }
            for (mb, b) in spec.monomials.iter().zip(&o.coords) {
                if b.is_zero() {
                    continue;
                }
                let cell = &mut grid[(ma.sqrt + mb.sqrt) as usize][(ma.cbrt + mb.cbrt) as usize];
                *cell = &*cell + &(a * b);
                touched = true;
            }
        }
        if !touched {
            return Self::zero(spec);
        }
        if let Some([b0, b1]) = spec.beta() {
            for j in (3..5).rev() {
                for i in 0..3 {
                    let c = std::mem::take(&mut grid[i][j]);
                    if c.is_zero() {
                        continue;
                    }
                    grid[i][j - 3] = &grid[i][j - 3] + &(&c * b0);
                    if !b1.is_zero() {
                        grid[i + 1][j - 3] = &grid[i + 1][j - 3] + &(&c * b1);
                    }
                }
            }
        }
        if let Some(alpha) = spec.alpha() {
            for i in (2..4).rev() {
                for j in 0..3 {
                    let c = std::mem::take(&mut grid[i][j]);
                    if c.is_zero() {
                        continue;
                    }
                    grid[i - 2][j] = &grid[i - 2][j] + &(&c * alpha);
                }
            }
        }
        let coords = spec
            .monomials
            .iter()
            .map(|m| std::mem::take(&mut grid[m.sqrt as usize][m.cbrt as usize]))
            .collect();
        Self {
            spec: spec.clone(),
            coords,
        }
    }

    pub fn neg(&self) -> Self {
        Self {
            spec: self.spec.clone(),
            coords: self.coords.iter().map(|c| -c).collect(),
        }
    }

    /// Multiply by a scalar of K.
    pub fn scale_k(&self, r: &RatFunc) -> Self {
        Self {
            spec: self.spec.clone(),
            coords: self.coords.iter().map(|c| c * r).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one(&self.spec);
        for _ in 0..e {
            acc = acc.mul_unchecked(self);
        }
        acc
    }

    /// ∛β ↦ ω^k·∛β on coordinates; an M-automorphism of L.
    pub(crate) fn omega_twist(&self, k: usize) -> Self {
        let coords = self
            .spec
            .monomials
            .iter()
            .zip(&self.coords)
            .map(|(m, c)| {
                let w = ConstScalar::omega_pow(k * m.cbrt as usize);
                if w.is_one() {
                    c.clone()
                } else {
                    c.scale(&w)
                }
            })
            .collect();
        Self {
            spec: self.spec.clone(),
            coords,
        }
    }

    /// √α ↦ −√α on coordinates; the conjugation of M over K, applied
    /// coordinate-wise.
    pub(crate) fn sqrt_flip(&self) -> Self {
        let coords = self
            .spec
            .monomials
            .iter()
            .zip(&self.coords)
            .map(|(m, c)| if m.sqrt == 1 { -c } else { c.clone() })
            .collect();
        Self {
            spec: self.spec.clone(),
            coords,
        }
    }

    /// Multiplicative inverse, by multiplying through conjugates down the
    /// tower: first the σ-conjugates over M, then the conjugate over K.
    pub fn inv(&self) -> Result<Self, FieldError> {
        if self.is_zero() {
            return Err(FieldError::DivisionByZero);
        }
        let spec = &self.spec;
        let mut cofactor = Self::one(spec);
        let mut norm = self.clone();
        if spec.has_cbrt() {
            cofactor = self.omega_twist(1).mul_unchecked(&self.omega_twist(2));
            norm = self.mul_unchecked(&cofactor);
        }
        if spec.has_sqrt() {
            let conj = norm.sqrt_flip();
            norm = norm.mul_unchecked(&conj);
            cofactor = cofactor.mul_unchecked(&conj);
        }
        let n = norm
            .as_k()
            .expect("norm down the tower lands in K")
            .inv()
            .ok_or_else(|| FieldError::NotAField("nonzero element with zero norm".into()))?;
        Ok(cofactor.scale_k(&n))
    }

    /// The unique extension of ∂ (∂t = 1, constants killed) to L:
    /// ∂√α = (∂α/2α)·√α and ∂∛β = (∂β/3β)·∛β.
    pub fn derive(&self) -> Self {
        let spec = &self.spec;
        let mut out: Vec<RatFunc> = self.coords.iter().map(RatFunc::derive).collect();
        let [e0, e1] = &spec.dlog_cbrt;
        for (m, c) in spec.monomials.iter().zip(&self.coords) {
            if c.is_zero() || *m == Monomial::ONE {
                continue;
            }
            let k = spec.index_of(*m).unwrap();
            let mut f = RatFunc::zero();
            if m.sqrt == 1 {
                f = &f + &spec.dlog_sqrt;
            }
            if m.cbrt > 0 {
                let j = RatFunc::from_int(m.cbrt as i64);
                f = &f + &(&j * e0);
                if !e1.is_zero() {
                    // j·e1·√α times the monomial
                    let je1c = &(&j * e1) * c;
                    if m.sqrt == 0 {
                        let t = spec
                            .index_of(Monomial {
                                sqrt: 1,
                                cbrt: m.cbrt,
                            })
                            .unwrap();
                        out[t] = &out[t] + &je1c;
                    } else {
                        let t = spec
                            .index_of(Monomial {
                                sqrt: 0,
                                cbrt: m.cbrt,
                            })
                            .unwrap();
                        out[t] = &out[t] + &(&je1c * spec.alpha().unwrap());
                    }
                }
            }
            if !f.is_zero() {
                out[k] = &out[k] + &(&f * c);
            }
        }
        Self {
            spec: spec.clone(),
            coords: out,
        }
    }
}

macro_rules! tower_ops {
    ($($tr:ident $m:ident $inner:ident),*) => {$(
        impl std::ops::$tr<&TowerElement> for &TowerElement {
            type Output = TowerElement;
            /// Panics on mismatched towers; use the `try_` methods to handle that case.
            fn $m(self, o: &TowerElement) -> TowerElement {
                self.check(o).expect("tower mismatch");
                self.$inner(o)
            }
        }
        impl std::ops::$tr<TowerElement> for TowerElement {
            type Output = TowerElement;
            fn $m(self, o: TowerElement) -> TowerElement { (&self).$m(&o) }
        }
    )*};
}
tower_ops!(Add add add_unchecked, Sub sub sub_unchecked, Mul mul mul_unchecked);

impl std::ops::Neg for &TowerElement {
    type Output = TowerElement;
    fn neg(self) -> TowerElement {
        TowerElement::neg(self)
    }
}

impl fmt::Display for TowerElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut terms = Vec::new();
        for (m, c) in self.spec.monomials.iter().zip(&self.coords) {
            if c.is_zero() {
                continue;
            }
            if *m == Monomial::ONE {
                terms.push(c.to_string());
            } else if c.is_one() {
                terms.push(m.name());
            } else if (-c).is_one() {
                terms.push(format!("-{}", m.name()));
            } else {
                terms.push(format!("({})*{}", c, m.name()));
            }
        }
        if terms.is_empty() {
            return write!(f, "0");
        }
        let mut out = String::new();
        for (i, t) in terms.iter().enumerate() {
            if i == 0 {
                out.push_str(t);
            } else if let Some(rest) = t.strip_prefix('-') {
                out.push_str(" - ");
                out.push_str(rest);
            } else {
                out.push_str(" + ");
                out.push_str(t);
            }
        }
        write!(f, "{out}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field_tower::poly::Poly;

    fn one_minus_t3() -> RatFunc {
        RatFunc::from_poly(Poly::from_ints(&[1, 0, 0, -1]))
    }

    fn s3_tower() -> Arc<TowerSpec> {
        TowerSpec::new(
            Some(one_minus_t3()),
            Some([RatFunc::one(), RatFunc::one()]),
            Some(RatFunc::t()),
        )
        .unwrap()
    }

    #[test]
    fn conjugate_product_example() {
        // (1 + √α)(1 − √α) = 1 − α = t³ for α = 1 − t³
        let m = TowerSpec::quadratic(one_minus_t3()).unwrap();
        let r = TowerElement::sqrt_alpha(&m).unwrap();
        let one = TowerElement::one(&m);
        let p = &(&one + &r) * &(&one - &r);
        assert_eq!(
            p,
            TowerElement::from_k(&m, RatFunc::from_poly(Poly::from_ints(&[0, 0, 0, 1])))
        );
    }

    #[test]
    fn inverse_of_sqrt() {
        let m = TowerSpec::quadratic(one_minus_t3()).unwrap();
        let r = TowerElement::sqrt_alpha(&m).unwrap();
        let expected = r.scale_k(&one_minus_t3().inv().unwrap());
        assert_eq!(r.inv().unwrap(), expected);
    }

    #[test]
    fn cube_of_cbrt_is_beta() {
        let l = s3_tower();
        let r3 = TowerElement::cbrt_beta(&l).unwrap();
        assert_eq!(r3.pow(3), TowerElement::beta(&l).unwrap());
    }

    #[test]
    fn inverse_in_full_tower() {
        let l = s3_tower();
        let r2 = TowerElement::sqrt_alpha(&l).unwrap();
        let r3 = TowerElement::cbrt_beta(&l).unwrap();
        let x = &(&TowerElement::t(&l) + &(&r2 * &r3)) + &r3.pow(2);
        assert!((&x * &x.inv().unwrap()).is_one());
        assert_eq!(
            TowerElement::zero(&l).inv(),
            Err(FieldError::DivisionByZero)
        );
    }

    #[test]
    fn derive_sqrt_example() {
        // ∂√α = (−3t² / (2(1 − t³)))·√α
        let m = TowerSpec::quadratic(one_minus_t3()).unwrap();
        let r = TowerElement::sqrt_alpha(&m).unwrap();
        let factor = RatFunc::new(
            Poly::from_ints(&[0, 0, -3]),
            Poly::from_ints(&[2, 0, 0, -2]),
        )
        .unwrap();
        assert_eq!(r.derive(), r.scale_k(&factor));
    }

    #[test]
    fn derive_cbrt_satisfies_implicit_relation() {
        // 3 (∛β)² ∂∛β = ∂β
        let l = s3_tower();
        let r3 = TowerElement::cbrt_beta(&l).unwrap();
        let lhs = &(&TowerElement::from_int(&l, 3) * &r3.pow(2)) * &r3.derive();
        assert_eq!(lhs, TowerElement::beta(&l).unwrap().derive());
    }

    #[test]
    fn mismatched_towers_are_rejected() {
        let a = TowerElement::one(&TowerSpec::quadratic(RatFunc::t()).unwrap());
        let b = TowerElement::one(&TowerSpec::quadratic(one_minus_t3()).unwrap());
        assert_eq!(a.try_add(&b), Err(FieldError::TowerMismatch));
    }

    #[test]
    fn malformed_towers() {
        assert!(TowerSpec::new(None, Some([RatFunc::one(), RatFunc::one()]), None).is_err());
        assert!(TowerSpec::new(Some(RatFunc::t()), None, Some(RatFunc::t())).is_err());
        assert!(TowerSpec::quadratic(RatFunc::zero()).is_err());
    }

    #[test]
    fn display_uses_monomial_names() {
        let l = s3_tower();
        let r2 = TowerElement::sqrt_alpha(&l).unwrap();
        let r3 = TowerElement::cbrt_beta(&l).unwrap();
        let x = &(&TowerElement::one(&l) - &r2) + &(&r2 * &r3.pow(2)).scale_k(&RatFunc::t());
        assert_eq!(x.to_string(), "1 - r2 + (t)*r2*r3^2");
    }
}
