//! Invariants of Map(Γ, 𝔤₀(K)) and of the induced algebras
//! Map(Γ′\Γ, 𝔤₀(L)) for Γ = 𝔖₃.

use std::sync::Arc;
use std::time::Instant;

use serde::{Deserialize, Serialize};

use super::action::SemilinearAction;
use super::fixed::{fixed_points, k_spans_equal};
use super::group::{GroupElement, GroupKind};
use super::DescentError;
use crate::field_tower::{RatFunc, TowerSpec};
use crate::lie::{DLieAlgebra, LieElement};
use crate::linalg::{rank_of, KMatrix, RatRref};
use crate::report::VerificationReport;

/// Map(Γ, 𝔤₀(K)) with (γf)(γ′) = f(γ′γ): the invariants are the constant
/// maps, and f ↦ f(1) identifies them with 𝔤₀(K).
pub fn trivial_torsor_iso(
    g0: &Arc<DLieAlgebra>,
    group: GroupKind,
) -> Result<VerificationReport, DescentError> {
    let start = Instant::now();
    let mut report = VerificationReport::new("trivial_torsor_iso")
        .param("algebra", g0.kind())
        .param("group", group);
    let els = group.elements();
    let idx = |e: GroupElement| els.iter().position(|x| *x == e).unwrap();
    let d = g0.dim();
    let n = els.len() * d;

    let mut system = KMatrix::new(n);
    for g in group.generators() {
        let mut m = KMatrix::new(n);
        for e in &els {
            let src = idx(e.mul(g));
            for b in 0..d {
                m.push_row(vec![(src * d + b, RatFunc::one())]);
            }
        }
        system.append(m.minus_identity());
    }
    let inv = system.kernel();
    report.check(
        "invariant_dimension",
        inv.len() == d,
        format!("{} invariants, dim g0 = {d}", inv.len()),
    );

    let constant = inv
        .iter()
        .all(|v| v.chunks(d).all(|block| block == &v[..d]));
    report.check("constant_maps", constant, format!("{} copies", els.len()));

    let ev: Vec<Vec<RatFunc>> = inv.iter().map(|v| v[..d].to_vec()).collect();
    let r = rank_of(&ev, d);
    report.check(
        "evaluation_iso",
        r == d && inv.len() == d,
        format!("rank of f -> f(1) is {r}"),
    );

    // component-wise bracket and ∂ stay in the invariants
    let k = TowerSpec::base();
    let rref = RatRref::from_vectors(n, &inv);
    let split = |v: &[RatFunc]| -> Vec<LieElement> {
        v.chunks(d)
            .map(|c| LieElement::from_k_coords(g0, &k, c))
            .collect()
    };
    let join =
        |xs: &[LieElement]| -> Vec<RatFunc> { xs.iter().flat_map(|x| x.to_k_vector()).collect() };
    let mut closed = true;
    'outer: for i in 0..inv.len() {
        let xi = split(&inv[i]);
        if !rref.contains(&join(
            &xi.iter().map(LieElement::derive).collect::<Vec<_>>(),
        )) {
            closed = false;
            break;
        }
        for j in i + 1..inv.len() {
            let xj = split(&inv[j]);
            let br = xi
                .iter()
                .zip(&xj)
                .map(|(a, b)| a.bracket(b))
                .collect::<Result<Vec<_>, _>>()?;
            if !rref.contains(&join(&br)) {
                closed = false;
                break 'outer;
            }
        }
    }
    report.check(
        "lie_closure",
        closed,
        "component-wise bracket and derivation",
    );
    Ok(report.finish(start))
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum InducedCase {
    /// Γ′ = ℤ₂ on a quadratic L, cosets indexed by ℤ₃.
    A,
    /// Γ′ = ℤ₃ on a cubic L, cosets indexed by ℤ₂.
    B,
}

/// Build Map(Γ′\Γ, 𝔤₀(L)) with the induced 𝔖₃-action, compute its
/// invariants and compare them with 𝔤₀(L)^{Γ′} through evaluation at the
/// trivial coset.
pub fn induced_fixed_check(
    case: InducedCase,
    action: &SemilinearAction,
) -> Result<VerificationReport, DescentError> {
    let start = Instant::now();
    let expected = match case {
        InducedCase::A => GroupKind::Z2,
        InducedCase::B => GroupKind::Z3,
    };
    if action.group() != expected {
        return Err(DescentError::BadGroup(format!(
            "case {case:?} needs a {expected} action, got {}",
            action.group()
        )));
    }
    if action.generators()[0].field.is_identity_on_field() {
        return Err(DescentError::TrivialFieldAction);
    }
    let mut report = VerificationReport::new("induced_fixed_check")
        .param("case", format!("{case:?}").to_lowercase())
        .param("algebra", action.algebra().kind())
        .param("action", action.description());

    let n = action.algebra().dim() * action.spec().degree();
    let p = action.k_matrix(0);
    let copies = match case {
        InducedCase::A => 3,
        InducedCase::B => 2,
    };
    let total = copies * n;
    let block_identity = |from: usize| -> KMatrix {
        let mut m = KMatrix::new(total);
        for r in 0..n {
            m.push_row(vec![(from * n + r, RatFunc::one())]);
        }
        m
    };
    let mut sigma = KMatrix::new(total);
    let mut tau = KMatrix::new(total);
    match case {
        InducedCase::A => {
            // (σf)(k) = f(k + 1), (τf)(k) = ρ′(τ)·f(−k)
            for k in 0..3 {
                sigma.append(block_identity((k + 1) % 3));
                tau.append(p.shifted(((3 - k) % 3) * n, total));
            }
        }
        InducedCase::B => {
            // (τf)(j) = f(1 − j), (σf)(0) = ρ′(σ)·f(0), (σf)(1) = ρ′(σ)⁻¹·f(1)
            for j in 0..2 {
                tau.append(block_identity(1 - j));
            }
            sigma.append(p.shifted(0, total));
            sigma.append(p.mul(&p).shifted(n, total));
        }
    }

    let id = KMatrix::identity(total);
    let s2 = sigma.mul(&sigma);
    let laws = s2.mul(&sigma) == id && tau.mul(&tau) == id && tau.mul(&sigma) == s2.mul(&tau);
    report.check(
        "group_laws",
        laws,
        "sigma^3 = tau^2 = 1, tau sigma = sigma^2 tau",
    );

    let mut system = sigma.minus_identity();
    system.append(tau.minus_identity());
    let inv = system.kernel();
    let direct = fixed_points(action).k_vectors();
    report.check(
        "invariant_dimension",
        inv.len() == direct.len(),
        format!(
            "{} invariants, {} fixed points of the subgroup",
            inv.len(),
            direct.len()
        ),
    );
    let ev: Vec<Vec<RatFunc>> = inv.iter().map(|v| v[..n].to_vec()).collect();
    let r = rank_of(&ev, n);
    report.check("evaluation_injective", r == inv.len(), format!("rank {r}"));
    report.check(
        "equals_subgroup_fixed_points",
        k_spans_equal(&ev, &direct, n),
        "evaluation at the trivial coset",
    );
    Ok(report.finish(start))
}
