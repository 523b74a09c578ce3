//! The base field K = k(t) of rational functions.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_rational::BigRational;

use super::poly::Poly;
use super::scalar::ConstScalar;

/// A reduced fraction `num / den` with `den` monic and `gcd(num, den) = 1`.
/// Zero is `0 / 1`, so structural equality is field equality.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct RatFunc {
    num: Poly,
    den: Poly,
}

impl Default for RatFunc {
    fn default() -> Self {
        Self::zero()
    }
}

impl RatFunc {
    /// Reduce `num / den` to canonical form. Returns `None` if `den` is zero.
    pub fn new(num: Poly, den: Poly) -> Option<Self> {
        if den.is_zero() {
            return None;
        }
        Some(Self::normalize(num, den))
    }

    fn normalize(num: Poly, den: Poly) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        let g = num.gcd(&den);
        let (num, den) = if g.is_one() {
            (num, den)
        } else {
            (num.exact_div(&g), den.exact_div(&g))
        };
        let lc = den.leading_coeff().unwrap().clone();
        if lc.is_one() {
            Self { num, den }
        } else {
            let inv = lc.inv().unwrap();
            Self {
                num: num.scale(&inv),
                den: den.scale(&inv),
            }
        }
    }

    pub fn zero() -> Self {
        Self {
            num: Poly::zero(),
            den: Poly::one(),
        }
    }

    pub fn one() -> Self {
        Self::from_poly(Poly::one())
    }

    pub fn t() -> Self {
        Self::from_poly(Poly::t())
    }

    pub fn from_int(v: i64) -> Self {
        Self::from_scalar(ConstScalar::from_int(v))
    }

    pub fn from_scalar(c: ConstScalar) -> Self {
        Self::from_poly(Poly::constant(c))
    }

    pub fn from_poly(p: Poly) -> Self {
        Self {
            num: p,
            den: Poly::one(),
        }
    }

    pub fn num(&self) -> &Poly {
        &self.num
    }

    pub fn den(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    /// A constant of k, if this function is one.
    pub fn as_constant(&self) -> Option<ConstScalar> {
        (self.den.is_one() && self.num.is_constant()).then(|| self.num.coeff(0))
    }

    pub fn has_rational_coeffs(&self) -> bool {
        self.num.has_rational_coeffs() && self.den.has_rational_coeffs()
    }

    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        Some(Self::normalize(self.den.clone(), self.num.clone()))
    }

    pub fn scale(&self, c: &ConstScalar) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            num: self.num.scale(c),
            den: self.den.clone(),
        }
    }

    pub fn pow(&self, e: i32) -> Option<Self> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let e = e.unsigned_abs();
        Some(Self {
            num: base.num.pow(e),
            den: base.den.pow(e),
        })
    }

    /// The derivation with ∂t = 1 and ∂c = 0 for constants.
    pub fn derive(&self) -> Self {
        if self.den.is_one() {
            return Self::from_poly(self.num.derivative());
        }
        let n = &(&self.num.derivative() * &self.den) - &(&self.num * &self.den.derivative());
        Self::normalize(n, &self.den * &self.den)
    }

    /// Evaluate at a rational point; `None` at a pole.
    pub fn eval_rational(&self, x: &BigRational) -> Option<ConstScalar> {
        let d = self.den.eval_rational(x);
        if d.is_zero() {
            return None;
        }
        Some(&self.num.eval_rational(x) / &d)
    }
}

impl Add<&RatFunc> for &RatFunc {
    type Output = RatFunc;
    fn add(self, o: &RatFunc) -> RatFunc {
        if self.is_zero() {
            return o.clone();
        }
        if o.is_zero() {
            return self.clone();
        }
        if self.den == o.den {
            if self.den.is_one() {
                return RatFunc::from_poly(&self.num + &o.num);
            }
            return RatFunc::normalize(&self.num + &o.num, self.den.clone());
        }
        let g = self.den.gcd(&o.den);
        let a = o.den.exact_div(&g);
        let b = self.den.exact_div(&g);
        let num = &(&self.num * &a) + &(&o.num * &b);
        RatFunc::normalize(num, &self.den * &a)
    }
}

impl Sub<&RatFunc> for &RatFunc {
    type Output = RatFunc;
    fn sub(self, o: &RatFunc) -> RatFunc {
        self + &(-o)
    }
}

impl Mul<&RatFunc> for &RatFunc {
    type Output = RatFunc;
    fn mul(self, o: &RatFunc) -> RatFunc {
        if self.is_zero() || o.is_zero() {
            return RatFunc::zero();
        }
        if self.den.is_one() && o.den.is_one() {
            return RatFunc::from_poly(&self.num * &o.num);
        }
        // cross-cancel before multiplying
        let g1 = self.num.gcd(&o.den);
        let g2 = o.num.gcd(&self.den);
        let n1 = self.num.exact_div(&g1);
        let d2 = o.den.exact_div(&g1);
        let n2 = o.num.exact_div(&g2);
        let d1 = self.den.exact_div(&g2);
        let num = &n1 * &n2;
        let den = &d1 * &d2;
        let lc = den.leading_coeff().unwrap().clone();
        if lc.is_one() {
            RatFunc { num, den }
        } else {
            let inv = lc.inv().unwrap();
            RatFunc {
                num: num.scale(&inv),
                den: den.scale(&inv),
            }
        }
    }
}

impl Div<&RatFunc> for &RatFunc {
    type Output = RatFunc;
    fn div(self, o: &RatFunc) -> RatFunc {
        self * &o.inv().expect("rational function division by zero")
    }
}

impl Neg for &RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl Neg for RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        -&self
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr<RatFunc> for RatFunc {
            type Output = RatFunc;
            fn $m(self, o: RatFunc) -> RatFunc { (&self).$m(&o) }
        }
        impl $tr<&RatFunc> for RatFunc {
            type Output = RatFunc;
            fn $m(self, o: &RatFunc) -> RatFunc { (&self).$m(o) }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul, Div div);

fn needs_parens(p: &Poly) -> bool {
    p.coeffs().iter().filter(|c| !c.is_zero()).count() > 1
        || p.coeffs().iter().any(|c| !c.is_zero() && !c.is_rational())
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            return write!(f, "{}", self.num);
        }
        if needs_parens(&self.num) {
            write!(f, "({})", self.num)?;
        } else {
            write!(f, "{}", self.num)?;
        }
        write!(f, "/({})", self.den)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rf(n: &[i64], d: &[i64]) -> RatFunc {
        RatFunc::new(Poly::from_ints(n), Poly::from_ints(d)).unwrap()
    }

    #[test]
    fn canonical_form_reduces_and_makes_monic() {
        // (2t^2 − 2) / (2t + 2) = t − 1
        let r = rf(&[-2, 0, 2], &[2, 2]);
        assert_eq!(r, RatFunc::from_poly(Poly::from_ints(&[-1, 1])));
        assert_eq!(rf(&[0], &[5, 1]), RatFunc::zero());
        assert!(RatFunc::new(Poly::one(), Poly::zero()).is_none());
    }

    #[test]
    fn quotient_rule_example() {
        // ∂(t³/(t+1)) = (2t³ + 3t²)/(t+1)²
        let f = rf(&[0, 0, 0, 1], &[1, 1]);
        let expected = rf(&[0, 0, 3, 2], &[1, 2, 1]);
        assert_eq!(f.derive(), expected);
    }

    #[test]
    fn derive_kills_constants() {
        // ∂(ω·t) = ω
        let f = RatFunc::from_poly(Poly::monomial(ConstScalar::omega(), 1));
        assert_eq!(f.derive(), RatFunc::from_scalar(ConstScalar::omega()));
        assert!(RatFunc::from_scalar(ConstScalar::omega())
            .derive()
            .is_zero());
    }

    #[test]
    fn field_operations() {
        let a = rf(&[1, 2], &[0, 1]);
        let b = rf(&[3], &[1, 0, 1]);
        let s = &a + &b;
        assert_eq!(&s - &b, a);
        let p = &a * &b;
        assert_eq!(&p / &b, a);
        assert!((&a * &a.inv().unwrap()).is_one());
    }

    #[test]
    fn eval_detects_poles() {
        let f = rf(&[1], &[-2, 1]);
        assert!(f
            .eval_rational(&BigRational::from_integer(2.into()))
            .is_none());
        assert_eq!(
            f.eval_rational(&BigRational::from_integer(3.into())),
            Some(ConstScalar::one())
        );
    }
}
