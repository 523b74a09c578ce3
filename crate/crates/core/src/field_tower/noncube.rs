//! One-sided certification that β ∈ M = K(√α) is not a cube in ℂ(t)(√α).
//!
//! Three kinds of certificate are produced, in order:
//!
//! 1. β ∈ K: exact multiplicity test over ℂ(t) (a cube in M would force β
//!    to be a cube in K, since β² = N(m)³).
//! 2. The norm β·β̄ is not a cube in ℂ(t).
//! 3. Specialization. Write N(β) = κ·ρ³ with κ a constant. If β is a cube
//!    over ℂ then β/κ² is a cube over k(t)(√α); specializing t ↦ t₀ with
//!    α(t₀) < 0 yields a cube in ℚ(√α(t₀)). So exhibiting a t₀ at which the
//!    specialized β/κ² is not a cube in that imaginary quadratic field proves
//!    β is not a cube. Cube roots are decided exactly: a root y of x has
//!    norm n = ∛N(x) and its trace s is a rational root of s³ − 3ns − Tr(x).

use num_bigint::BigInt;
use num_integer::{Integer, Roots};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::powers::geometric_cube_root;
use super::ratfunc::RatFunc;
use super::tower::{Monomial, TowerElement};
use super::FieldError;

pub const DEFAULT_SPECIALIZATION_LIMIT: usize = 25;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum NonCubeCertificate {
    /// β ∈ K has a factor whose multiplicity is not divisible by 3.
    BaseField { beta: String },
    /// β·β̄ is not a cube in ℂ(t).
    Norm { norm: String },
    /// β/κ² specialized at `t0` is not a cube in ℚ(√d), d = α(t0) < 0.
    Specialization {
        t0: i64,
        d: String,
        normalizer: String,
        value: String,
        reason: String,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum NonCubeVerdict {
    Certified {
        certificate: NonCubeCertificate,
    },
    /// β = constant · root³ in ℂ(t).
    Cube {
        root: String,
        constant: String,
    },
    Unknown {
        tried: Vec<i64>,
        reason: String,
    },
}

impl NonCubeVerdict {
    pub fn is_certified(&self) -> bool {
        matches!(self, Self::Certified { .. })
    }
}

/// `p + q·√d` in a quadratic number field ℚ(√d).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuadraticNumber {
    pub p: BigRational,
    pub q: BigRational,
}

impl QuadraticNumber {
    pub fn new(p: BigRational, q: BigRational) -> Self {
        Self { p, q }
    }

    pub fn mul(&self, o: &Self, d: &BigRational) -> Self {
        Self {
            p: &self.p * &o.p + &self.q * &o.q * d,
            q: &self.p * &o.q + &self.q * &o.p,
        }
    }

    pub fn norm(&self, d: &BigRational) -> BigRational {
        &self.p * &self.p - &self.q * &self.q * d
    }

    pub fn cube(&self, d: &BigRational) -> Self {
        self.mul(&self.mul(self, d), d)
    }

    pub fn display(&self, d: &BigRational) -> String {
        let root = format!("sqrt({d})");
        let q = if self.q.is_one() {
            root
        } else if (-&self.q).is_one() {
            format!("-{root}")
        } else {
            format!("{}*{root}", self.q)
        };
        match (self.p.is_zero(), self.q.is_zero()) {
            (_, true) => self.p.to_string(),
            (true, false) => q,
            (false, false) => match q.strip_prefix('-') {
                Some(rest) => format!("{} - {rest}", self.p),
                None => format!("{} + {q}", self.p),
            },
        }
    }
}

fn rational_cube_root(r: &BigRational) -> Option<BigRational> {
    let n = r.numer().cbrt();
    let d = r.denom().cbrt();
    (&n * &n * &n == *r.numer() && &d * &d * &d == *r.denom()).then(|| BigRational::new(n, d))
}

/// Integer roots of the monic cubic r³ + a·r + b.
fn integer_roots_depressed_cubic(a: &BigInt, b: &BigInt) -> Vec<BigInt> {
    let f = |r: &BigInt| r * r * r + a * r + b;
    let bound = BigInt::one() + a.abs().max(b.abs());
    // f is increasing on |r| ≥ c + 1 and non-increasing on |r| ≤ c.
    let segments: Vec<(BigInt, BigInt, bool)> = if a.is_negative() {
        let c: BigInt = Roots::sqrt(&(-a / BigInt::from(3)));
        vec![
            (-&bound, -&c - 1, true),
            (-c.clone(), c.clone(), false),
            (c + 1, bound.clone(), true),
        ]
    } else {
        vec![(-&bound, bound.clone(), true)]
    };
    let mut roots = Vec::new();
    for (lo, hi, increasing) in segments {
        if lo > hi {
            continue;
        }
        // smallest r in [lo, hi] with f(r) ≥ 0 (increasing) or f(r) ≤ 0
        let past = |r: &BigInt| {
            let v = f(r);
            if increasing {
                !v.is_negative()
            } else {
                !v.is_positive()
            }
        };
        if !past(&hi) {
            continue;
        }
        let (mut l, mut h) = (lo, hi);
        while l < h {
            let mid = (&l + &h).div_floor(&BigInt::from(2));
            if past(&mid) {
                h = mid;
            } else {
                l = mid + 1;
            }
        }
        if f(&l).is_zero() && !roots.contains(&l) {
            roots.push(l);
        }
    }
    roots
}

/// A cube root of `x` in ℚ(√d), if one exists. Requires `d` not a rational
/// square. Exact and complete.
pub fn cube_root_in_quadratic_field(
    x: &QuadraticNumber,
    d: &BigRational,
) -> Option<QuadraticNumber> {
    let norm = x.norm(d);
    let n = rational_cube_root(&norm)?;
    let trace = &x.p * BigRational::from_integer(2.into());
    // s³ − 3n·s − Tr(x) = 0; substitute s = r/D to clear denominators.
    let den = n.denom().lcm(trace.denom());
    let dr = BigRational::from_integer(den.clone());
    let a = -(BigRational::from_integer(3.into()) * &n * &dr * &dr);
    let b = -(&trace * &dr * &dr * &dr);
    debug_assert!(a.is_integer() && b.is_integer());
    for r in integer_roots_depressed_cubic(&a.to_integer(), &b.to_integer()) {
        let s = BigRational::new(r, den.clone());
        let denom = &s * &s - &n;
        let y = if denom.is_zero() {
            QuadraticNumber::new(-s, BigRational::zero())
        } else {
            QuadraticNumber::new((&x.p + &s * &n) / &denom, &x.q / &denom)
        };
        if y.cube(d) == *x {
            return Some(y);
        }
    }
    None
}

/// Primes 2, 3, 5, 7, … as specialization points.
fn specialization_points() -> impl Iterator<Item = i64> {
    (2i64..).filter(|n| (2..).take_while(|k| k * k <= *n).all(|k| n % k != 0))
}

/// Certify that `beta` (an element of K or of K(√α)) is not a cube.
/// Never returns a certificate for a cube; may return `Unknown`.
pub fn noncube_certify(beta: &TowerElement, limit: usize) -> Result<NonCubeVerdict, FieldError> {
    if beta.is_zero() {
        return Err(FieldError::ZeroInput);
    }
    if !beta.in_quadratic_subfield() {
        return Err(FieldError::MalformedTower("beta must lie in K(r2)".into()));
    }
    let spec = beta.spec();
    let b0 = beta.coord(Monomial::ONE);
    let b1 = beta.coord(Monomial { sqrt: 1, cbrt: 0 });

    if b1.is_zero() {
        return Ok(match geometric_cube_root(&b0)? {
            Some(w) => NonCubeVerdict::Cube {
                root: w.root.to_string(),
                constant: w.constant.to_string(),
            },
            None => NonCubeVerdict::Certified {
                certificate: NonCubeCertificate::BaseField {
                    beta: b0.to_string(),
                },
            },
        });
    }

    let alpha = spec
        .alpha()
        .expect("r2 component implies a square-root layer");
    let norm = &(&b0 * &b0) - &(&(&b1 * &b1) * alpha);
    if norm.is_zero() {
        return Err(FieldError::NotAField("beta has zero norm".into()));
    }
    let Some(w) = geometric_cube_root(&norm)? else {
        return Ok(NonCubeVerdict::Certified {
            certificate: NonCubeCertificate::Norm {
                norm: norm.to_string(),
            },
        });
    };

    let unknown = |tried: Vec<i64>, reason: &str| NonCubeVerdict::Unknown {
        tried,
        reason: reason.to_string(),
    };
    let Some(kappa) = w.constant.as_rational().cloned() else {
        return Ok(unknown(vec![], "norm has a non-rational leading constant"));
    };
    if !(alpha.has_rational_coeffs() && b0.has_rational_coeffs() && b1.has_rational_coeffs()) {
        return Ok(unknown(
            vec![],
            "specialization needs rational coefficients",
        ));
    }
    let kappa_sq_inv = RatFunc::from_scalar(super::scalar::ConstScalar::rational(
        (&kappa * &kappa).recip(),
    ));
    let (c0, c1) = (&b0 * &kappa_sq_inv, &b1 * &kappa_sq_inv);
    let scaled_norm = &(&c0 * &c0) - &(&(&c1 * &c1) * alpha);

    let mut tried = Vec::new();
    for t0 in specialization_points().take(limit) {
        tried.push(t0);
        let x0 = BigRational::from_integer(t0.into());
        let rational_at = |f: &RatFunc| -> Option<BigRational> {
            f.eval_rational(&x0).and_then(|v| v.as_rational().cloned())
        };
        let Some(d) = rational_at(alpha) else {
            continue;
        };
        if !d.is_negative() {
            continue;
        }
        let (Some(p), Some(q)) = (rational_at(&c0), rational_at(&c1)) else {
            continue;
        };
        match rational_at(&scaled_norm) {
            Some(n) if !n.is_zero() => {}
            _ => continue,
        }
        let x = QuadraticNumber::new(p, q);
        if cube_root_in_quadratic_field(&x, &d).is_none() {
            let reason = if rational_cube_root(&x.norm(&d)).is_none() {
                format!("norm {} is not a rational cube", x.norm(&d))
            } else {
                "no rational trace admits a cube root".to_string()
            };
            return Ok(NonCubeVerdict::Certified {
                certificate: NonCubeCertificate::Specialization {
                    t0,
                    d: d.to_string(),
                    normalizer: kappa.to_string(),
                    value: x.display(&d),
                    reason,
                },
            });
        }
    }
    Ok(unknown(tried, "every tried specialization is a cube"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field_tower::poly::Poly;
    use crate::field_tower::tower::TowerSpec;

    fn q(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    #[test]
    fn integer_roots_found() {
        // (r − 2)(r + 1)(r + 1) = r³ − 3r − 2
        let roots = integer_roots_depressed_cubic(&BigInt::from(-3), &BigInt::from(-2));
        let mut roots: Vec<i64> = roots.iter().map(|r| r.try_into().unwrap()).collect();
        roots.sort();
        assert_eq!(roots, vec![-1, 2]);
        assert!(integer_roots_depressed_cubic(&BigInt::from(-6), &BigInt::from(-2)).is_empty());
    }

    #[test]
    fn one_plus_sqrt_minus_seven_is_not_a_cube() {
        let d = q(-7);
        let x = QuadraticNumber::new(q(1), q(1));
        assert!(cube_root_in_quadratic_field(&x, &d).is_none());
    }

    #[test]
    fn cubes_are_recognized() {
        let d = q(-7);
        let y = QuadraticNumber::new(
            BigRational::new(1.into(), 2.into()),
            BigRational::new((-3).into(), 4.into()),
        );
        let x = y.cube(&d);
        let r = cube_root_in_quadratic_field(&x, &d).unwrap();
        assert_eq!(r.cube(&d), x);
        let rational = QuadraticNumber::new(q(-27), q(0));
        assert_eq!(
            cube_root_in_quadratic_field(&rational, &d).unwrap().p,
            q(-3)
        );
    }

    #[test]
    fn example_certified_at_two() {
        let alpha = RatFunc::from_poly(Poly::from_ints(&[1, 0, 0, -1]));
        let m = TowerSpec::quadratic(alpha).unwrap();
        let beta = &TowerElement::one(&m) + &TowerElement::sqrt_alpha(&m).unwrap();
        match noncube_certify(&beta, DEFAULT_SPECIALIZATION_LIMIT).unwrap() {
            NonCubeVerdict::Certified {
                certificate: NonCubeCertificate::Specialization { t0, d, .. },
            } => {
                assert_eq!(t0, 2);
                assert_eq!(d, "-7");
            }
            other => panic!("unexpected verdict {other:?}"),
        }
    }

    #[test]
    fn base_field_cube_reports_witness() {
        let m = TowerSpec::quadratic(RatFunc::from_poly(Poly::from_ints(&[1, 0, 0, -1]))).unwrap();
        let beta = TowerElement::from_k(&m, RatFunc::from_poly(Poly::from_ints(&[0, 0, 0, 1])));
        assert_eq!(
            noncube_certify(&beta, 5).unwrap(),
            NonCubeVerdict::Cube {
                root: "t".into(),
                constant: "1".into()
            }
        );
    }

    #[test]
    fn constant_multiple_of_a_cube_is_not_certified() {
        // 2·(1 + √α)³ is a cube over ℂ; the normalizer must absorb the 2.
        let alpha = RatFunc::from_poly(Poly::from_ints(&[1, 0, 0, -1]));
        let m = TowerSpec::quadratic(alpha).unwrap();
        let base = &TowerElement::one(&m) + &TowerElement::sqrt_alpha(&m).unwrap();
        let beta = base.pow(3).scale_k(&RatFunc::from_int(2));
        assert!(!noncube_certify(&beta, 10).unwrap().is_certified());
    }

    #[test]
    fn points_are_primes() {
        let v: Vec<i64> = specialization_points().take(5).collect();
        assert_eq!(v, vec![2, 3, 5, 7, 11]);
    }
}
