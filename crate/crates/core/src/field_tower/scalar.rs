//! Constants `a + b·ω` of k = ℚ(ω), ω a primitive cube root of unity.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// An element `a + b·ω` of ℚ(ω) with `ω² = −1 − ω`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct ConstScalar {
    a: BigRational,
    b: BigRational,
}

impl ConstScalar {
    pub fn new(a: BigRational, b: BigRational) -> Self {
        Self { a, b }
    }

    pub fn from_int(v: i64) -> Self {
        Self::rational(BigRational::from_integer(BigInt::from(v)))
    }

    pub fn from_ratio(num: i64, den: i64) -> Self {
        Self::rational(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    pub fn rational(a: BigRational) -> Self {
        Self {
            a,
            b: BigRational::zero(),
        }
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    /// The primitive cube root of unity ω.
    pub fn omega() -> Self {
        Self {
            a: BigRational::zero(),
            b: BigRational::one(),
        }
    }

    /// ω² = −1 − ω.
    pub fn omega_squared() -> Self {
        Self::from_pair(-1, -1)
    }

    /// √−3 := 1 + 2ω.
    pub fn sqrt_minus_three() -> Self {
        Self::from_pair(1, 2)
    }

    /// `a + b·ω` from small integers.
    pub fn from_pair(a: i64, b: i64) -> Self {
        Self {
            a: BigRational::from_integer(a.into()),
            b: BigRational::from_integer(b.into()),
        }
    }

    /// ω raised to `k` (mod 3).
    pub fn omega_pow(k: usize) -> Self {
        match k % 3 {
            0 => Self::one(),
            1 => Self::omega(),
            _ => Self::omega_squared(),
        }
    }

    pub fn real_part(&self) -> &BigRational {
        &self.a
    }

    pub fn omega_part(&self) -> &BigRational {
        &self.b
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.a.is_one() && self.b.is_zero()
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    /// The rational value, when the ω-part vanishes.
    pub fn as_rational(&self) -> Option<&BigRational> {
        self.b.is_zero().then_some(&self.a)
    }

    /// Field norm to ℚ: `a² − ab + b²`.
    pub fn norm(&self) -> BigRational {
        &self.a * &self.a - &self.a * &self.b + &self.b * &self.b
    }

    /// Image under ω ↦ ω².
    pub fn conjugate(&self) -> Self {
        Self {
            a: &self.a - &self.b,
            b: -&self.b,
        }
    }

    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        if self.b.is_zero() {
            return Some(Self::rational(self.a.recip()));
        }
        let n = self.norm();
        let c = self.conjugate();
        Some(Self {
            a: c.a / &n,
            b: c.b / n,
        })
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Multiply both parts by a rational.
    pub fn scale(&self, r: &BigRational) -> Self {
        Self {
            a: &self.a * r,
            b: &self.b * r,
        }
    }
}

impl Add<&ConstScalar> for &ConstScalar {
    type Output = ConstScalar;
    fn add(self, o: &ConstScalar) -> ConstScalar {
        ConstScalar {
            a: &self.a + &o.a,
            b: &self.b + &o.b,
        }
    }
}

impl Sub<&ConstScalar> for &ConstScalar {
    type Output = ConstScalar;
    fn sub(self, o: &ConstScalar) -> ConstScalar {
        ConstScalar {
            a: &self.a - &o.a,
            b: &self.b - &o.b,
        }
    }
}

impl Mul<&ConstScalar> for &ConstScalar {
    type Output = ConstScalar;
    fn mul(self, o: &ConstScalar) -> ConstScalar {
        if self.b.is_zero() && o.b.is_zero() {
            return ConstScalar::rational(&self.a * &o.a);
        }
        // (a + bω)(c + dω) = (ac − bd) + (ad + bc − bd)ω
        let bd = &self.b * &o.b;
        ConstScalar {
            a: &self.a * &o.a - &bd,
            b: &self.a * &o.b + &self.b * &o.a - bd,
        }
    }
}

impl Div<&ConstScalar> for &ConstScalar {
    type Output = ConstScalar;
    fn div(self, o: &ConstScalar) -> ConstScalar {
        self * &o.inv().expect("division by zero constant")
    }
}

impl Neg for &ConstScalar {
    type Output = ConstScalar;
    fn neg(self) -> ConstScalar {
        ConstScalar {
            a: -&self.a,
            b: -&self.b,
        }
    }
}

impl Neg for ConstScalar {
    type Output = ConstScalar;
    fn neg(self) -> ConstScalar {
        ConstScalar {
            a: -self.a,
            b: -self.b,
        }
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr<ConstScalar> for ConstScalar {
            type Output = ConstScalar;
            fn $m(self, o: ConstScalar) -> ConstScalar { (&self).$m(&o) }
        }
        impl $tr<&ConstScalar> for ConstScalar {
            type Output = ConstScalar;
            fn $m(self, o: &ConstScalar) -> ConstScalar { (&self).$m(o) }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul, Div div);

fn fmt_rational(r: &BigRational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

impl fmt::Display for ConstScalar {
    /// Prints in the input grammar: `3`, `-1/2`, `w`, `(1 + 2*w)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let omega_term = |b: &BigRational| -> String {
            if b.is_one() {
                "w".to_string()
            } else if (-b).is_one() {
                "-w".to_string()
            } else {
                format!("{}*w", fmt_rational(b))
            }
        };
        match (self.a.is_zero(), self.b.is_zero()) {
            (_, true) => write!(f, "{}", fmt_rational(&self.a)),
            (true, false) => write!(f, "{}", omega_term(&self.b)),
            (false, false) => {
                let sign = if self.b.is_negative() { "-" } else { "+" };
                let mag = omega_term(&self.b.abs());
                write!(f, "({} {} {})", fmt_rational(&self.a), sign, mag)
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn omega_is_a_primitive_cube_root() {
        let w = ConstScalar::omega();
        assert!(!w.is_one());
        assert!(w.pow(3).is_one());
        let s = &ConstScalar::one() + &(&w + &(&w * &w));
        assert!(s.is_zero());
    }

    #[test]
    fn sqrt_minus_three_squares_to_minus_three() {
        let r = ConstScalar::sqrt_minus_three();
        assert_eq!(&r * &r, ConstScalar::from_int(-3));
    }

    #[test]
    fn inverse_round_trips() {
        let x = ConstScalar::new(
            BigRational::new(3.into(), 7.into()),
            BigRational::from_integer((-5).into()),
        );
        let y = x.inv().unwrap();
        assert!((&x * &y).is_one());
        assert!(ConstScalar::zero().inv().is_none());
    }

    #[test]
    fn display_forms() {
        assert_eq!(ConstScalar::from_ratio(-1, 2).to_string(), "-1/2");
        assert_eq!(ConstScalar::omega().to_string(), "w");
        assert_eq!(ConstScalar::sqrt_minus_three().to_string(), "(1 + 2*w)");
        assert_eq!(ConstScalar::from_pair(0, -1).to_string(), "-w");
        assert_eq!(ConstScalar::from_pair(2, -3).to_string(), "(2 - 3*w)");
    }
}
