//! Reduction of ℤ_(p)[ω][t] modulo p = 2⁶¹ − 1, used to detect coprime
//! polynomials without rational coefficient growth.
//!
//! p ≡ 1 (mod 3), so ω maps to a primitive cube root of unity in F_p and
//! reduction is a ring map on coefficients with denominators prime to p.
//! When both leading coefficients survive, the degree of the gcd mod p
//! bounds the degree of the true gcd from above.

use std::sync::OnceLock;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::ToPrimitive;

use super::poly::Poly;
use super::scalar::ConstScalar;

const P: u64 = (1 << 61) - 1;

fn mul(a: u64, b: u64) -> u64 {
    ((a as u128 * b as u128) % P as u128) as u64
}

fn add(a: u64, b: u64) -> u64 {
    (a + b) % P
}

fn sub(a: u64, b: u64) -> u64 {
    (a + P - b) % P
}

fn pow(mut a: u64, mut e: u64) -> u64 {
    let mut acc = 1;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul(acc, a);
        }
        a = mul(a, a);
        e >>= 1;
    }
    acc
}

fn inv(a: u64) -> u64 {
    pow(a, P - 2)
}

fn omega() -> u64 {
    static W: OnceLock<u64> = OnceLock::new();
    *W.get_or_init(|| {
        (2..)
            .map(|g| pow(g, (P - 1) / 3))
            .find(|&r| r != 1)
            .expect("F_p has a primitive cube root of unity")
    })
}

fn reduce_int(n: &BigInt) -> u64 {
    let r = n % BigInt::from(P);
    let r = if r.sign() == num_bigint::Sign::Minus {
        r + BigInt::from(P)
    } else {
        r
    };
    r.to_u64().unwrap()
}

fn reduce_rational(x: &BigRational) -> Option<u64> {
    let d = reduce_int(x.denom());
    (d != 0).then(|| mul(reduce_int(x.numer()), inv(d)))
}

fn reduce_scalar(c: &ConstScalar) -> Option<u64> {
    let a = reduce_rational(c.real_part())?;
    let b = reduce_rational(c.omega_part())?;
    Some(add(a, mul(b, omega())))
}

/// Coefficients mod p, lowest first; `None` if a denominator vanishes or
/// the leading coefficient does.
fn reduce(f: &Poly) -> Option<Vec<u64>> {
    let v: Vec<u64> = f
        .coeffs()
        .iter()
        .map(reduce_scalar)
        .collect::<Option<_>>()?;
    (v.last().copied() != Some(0)).then_some(v)
}

fn trim(v: &mut Vec<u64>) {
    while v.last() == Some(&0) {
        v.pop();
    }
}

fn rem(mut a: Vec<u64>, b: &[u64]) -> Vec<u64> {
    let db = b.len() - 1;
    let lc_inv = inv(b[db]);
    while a.len() > db {
        let k = a.len() - 1 - db;
        let c = mul(a[a.len() - 1], lc_inv);
        for (j, bj) in b.iter().enumerate() {
            a[k + j] = sub(a[k + j], mul(c, *bj));
        }
        trim(&mut a);
    }
    a
}

/// An upper bound for the degree of gcd(f, g), or `None` if the reduction
/// is not usable. Both inputs must be nonzero.
pub(crate) fn gcd_degree_bound(f: &Poly, g: &Poly) -> Option<usize> {
    let mut a = reduce(f)?;
    let mut b = reduce(g)?;
    if a.len() < b.len() {
        std::mem::swap(&mut a, &mut b);
    }
    while !b.is_empty() {
        let r = rem(a, &b);
        a = b;
        b = r;
    }
    Some(a.len() - 1)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn omega_is_primitive_cube_root() {
        let w = omega();
        assert_ne!(w, 1);
        assert_eq!(pow(w, 3), 1);
        // ω² + ω + 1 = 0 matches the relation used by ConstScalar
        assert_eq!(add(add(mul(w, w), w), 1), 0);
    }

    #[test]
    fn bound_detects_common_factor() {
        let f = &Poly::from_ints(&[-1, 1]) * &Poly::from_ints(&[2, 0, 1]);
        let g = &Poly::from_ints(&[-1, 1]) * &Poly::from_ints(&[5, 1]);
        assert_eq!(gcd_degree_bound(&f, &g), Some(1));
        assert_eq!(
            gcd_degree_bound(&Poly::from_ints(&[2, 0, 1]), &Poly::from_ints(&[5, 1])),
            Some(0)
        );
    }
}
