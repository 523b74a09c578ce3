//! Seeded random values for property tests and benchmarks.

use std::sync::Arc;

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use crate::field_tower::{ConstScalar, Poly, RatFunc, TowerElement, TowerSpec};
use crate::lie::{DLieAlgebra, LieElement};

pub fn rng(seed: u64) -> StdRng {
    StdRng::seed_from_u64(seed)
}

pub fn random_scalar(rng: &mut impl Rng) -> ConstScalar {
    ConstScalar::from_pair(rng.random_range(-3..=3), rng.random_range(-2..=2))
}

/// Polynomial of degree at most `deg`, possibly zero.
pub fn random_poly(rng: &mut impl Rng, deg: usize) -> Poly {
    Poly::from_coeffs((0..=deg).map(|_| random_scalar(rng)).collect())
}

/// Numerator of degree ≤ `deg`; the denominator is 1 about half the time.
pub fn random_ratfunc(rng: &mut impl Rng, deg: usize) -> RatFunc {
    let num = random_poly(rng, deg);
    if rng.random_bool(0.5) {
        return RatFunc::from_poly(num);
    }
    loop {
        let den = random_poly(rng, deg.max(1));
        if let Some(r) = RatFunc::new(num.clone(), den) {
            return r;
        }
    }
}

/// Coordinates are polynomials of degree ≤ `deg`.
pub fn random_element(rng: &mut impl Rng, spec: &Arc<TowerSpec>, deg: usize) -> TowerElement {
    let coords = (0..spec.degree())
        .map(|_| RatFunc::from_poly(random_poly(rng, deg)))
        .collect();
    TowerElement::from_coords(spec, coords)
}

/// Coordinates are rational functions as in [`random_ratfunc`].
pub fn random_fraction_element(
    rng: &mut impl Rng,
    spec: &Arc<TowerSpec>,
    deg: usize,
) -> TowerElement {
    let coords = (0..spec.degree())
        .map(|_| random_ratfunc(rng, deg))
        .collect();
    TowerElement::from_coords(spec, coords)
}

pub fn random_nonzero_element(
    rng: &mut impl Rng,
    spec: &Arc<TowerSpec>,
    deg: usize,
) -> TowerElement {
    loop {
        let x = random_element(rng, spec, deg);
        if !x.is_zero() {
            return x;
        }
    }
}

/// About `density` of the coordinates are nonzero.
pub fn random_lie(
    rng: &mut impl Rng,
    algebra: &Arc<DLieAlgebra>,
    spec: &Arc<TowerSpec>,
    deg: usize,
    density: f64,
) -> LieElement {
    let coords = (0..algebra.dim())
        .map(|_| {
            if rng.random_bool(density) {
                random_element(rng, spec, deg)
            } else {
                TowerElement::zero(spec)
            }
        })
        .collect();
    LieElement::from_coords(algebra, coords).expect("coordinate count matches")
}
