//! Fixtures shared by the criterion benchmarks under `benches/`.

use std::sync::Arc;

use dlie::{parse_ratfunc, RatFunc, TowerSpec};

/// L = K(√(1 − t³), ∛(1 + √(1 − t³))) with γ = t.
pub fn s3_tower() -> Arc<TowerSpec> {
    TowerSpec::new(
        Some(parse_ratfunc("1 - t^3").unwrap()),
        Some([RatFunc::one(), RatFunc::one()]),
        Some(RatFunc::t()),
    )
    .unwrap()
}

/// A pair of rational functions with a nontrivial common factor.
pub fn ratfunc_pair() -> (RatFunc, RatFunc) {
    (
        parse_ratfunc("(t^3 - 2*t + 1)/(t^2 + w*t - 3)").unwrap(),
        parse_ratfunc("(t^2 + w*t - 3)/(t - 1)^2").unwrap(),
    )
}
