//! Geometric power tests: is f an n-th power in ℂ(t)?
//!
//! Square-free decomposition over k agrees with the one over ℂ in
//! characteristic zero, and nonzero constants are n-th powers in ℂ, so the
//! test only looks at multiplicities.

use super::poly::Poly;
use super::ratfunc::RatFunc;
use super::scalar::ConstScalar;
use super::FieldError;

/// Monic `r` with `p = lc(p)·r^n`, if one exists.
fn monic_nth_root(p: &Poly, n: usize) -> Option<Poly> {
    let mut root = Poly::one();
    for (factor, mult) in p.squarefree_decomposition() {
        if mult % n != 0 {
            return None;
        }
        root = &root * &factor.pow((mult / n) as u32);
    }
    Some(root)
}

/// True iff `f` is a square in ℂ(t).
pub fn is_square_geometric(f: &RatFunc) -> Result<bool, FieldError> {
    if f.is_zero() {
        return Err(FieldError::ZeroInput);
    }
    Ok(monic_nth_root(f.num(), 2).is_some() && monic_nth_root(f.den(), 2).is_some())
}

/// `f = constant · root³` with `root` having monic numerator and
/// denominator. Over ℂ the constant is itself a cube.
#[derive(Clone, Debug, PartialEq)]
pub struct CubeWitness {
    pub root: RatFunc,
    pub constant: ConstScalar,
}

/// Decide whether `f` is a cube in ℂ(t) and return the witness when it is.
pub fn geometric_cube_root(f: &RatFunc) -> Result<Option<CubeWitness>, FieldError> {
    if f.is_zero() {
        return Err(FieldError::ZeroInput);
    }
    let (Some(n), Some(d)) = (monic_nth_root(f.num(), 3), monic_nth_root(f.den(), 3)) else {
        return Ok(None);
    };
    let root = RatFunc::new(n, d).expect("nonzero denominator");
    let constant = f.num().leading_coeff().unwrap().clone();
    Ok(Some(CubeWitness { root, constant }))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(cs: &[i64]) -> Poly {
        Poly::from_ints(cs)
    }

    #[test]
    fn even_multiplicities_are_squares() {
        // 5 (t − 1)² (t + 2)⁴
        let f = RatFunc::from_poly(poly(&[5]) * poly(&[-1, 1]).pow(2) * poly(&[2, 1]).pow(4));
        assert!(is_square_geometric(&f).unwrap());
    }

    #[test]
    fn odd_multiplicity_is_not_square() {
        assert!(!is_square_geometric(&RatFunc::t()).unwrap());
        let alpha = RatFunc::from_poly(poly(&[1, 0, 0, -1]));
        assert!(!is_square_geometric(&alpha).unwrap());
        let f = RatFunc::new(poly(&[1]), poly(&[0, 0, 1])).unwrap();
        assert!(is_square_geometric(&f).unwrap());
    }

    #[test]
    fn zero_is_rejected() {
        assert_eq!(
            is_square_geometric(&RatFunc::zero()),
            Err(FieldError::ZeroInput)
        );
    }

    #[test]
    fn cube_witness_for_t_cubed() {
        let f = RatFunc::from_poly(poly(&[0, 0, 0, 1]));
        let w = geometric_cube_root(&f).unwrap().unwrap();
        assert_eq!(w.root, RatFunc::t());
        assert!(w.constant.is_one());
        assert!(geometric_cube_root(&RatFunc::t()).unwrap().is_none());
    }
}
