use std::sync::Arc;

use serde::{Deserialize, Serialize};

use super::action::SemilinearAction;
use super::group::GroupKind;
use super::DescentError;
use crate::field_tower::{same_tower, RatFunc, TowerElement, TowerSpec};
use crate::lie::{DLieAlgebra, LieElement};
use crate::linalg::{rank_of, rank_over_tower, KMatrix, RatRref};
use crate::report::VerificationReport;

#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Construction {
    Explicit,
    Descent,
}

/// A K-basis of a K-form inside 𝔤₀(L).
#[derive(Clone, Debug)]
pub struct FixedSubalgebra {
    pub algebra: Arc<DLieAlgebra>,
    pub spec: Arc<TowerSpec>,
    pub group: GroupKind,
    pub basis: Vec<LieElement>,
    pub construction: Construction,
}

impl FixedSubalgebra {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Basis vectors as K-vectors of length dim 𝔤₀ · [L:K].
    pub fn k_vectors(&self) -> Vec<Vec<RatFunc>> {
        self.basis.iter().map(LieElement::to_k_vector).collect()
    }

    pub fn k_dim(&self) -> usize {
        self.algebra.dim() * self.spec.degree()
    }

    pub fn same_ambient(&self, o: &Self) -> bool {
        self.algebra == o.algebra && same_tower(&self.spec, &o.spec)
    }

    /// A copy with basis vector `k` removed.
    pub fn without(&self, k: usize) -> Self {
        let mut f = self.clone();
        f.basis.remove(k);
        f
    }
}

/// The K-matrix whose kernel is the fixed space: the stacked rows of
/// ρ(γ) − id over all generators γ.
pub fn fixed_point_system(action: &SemilinearAction) -> KMatrix {
    let n = action.algebra().dim() * action.spec().degree();
    let mut system = KMatrix::new(n);
    for k in 0..action.generators().len() {
        system.append(action.k_matrix(k).minus_identity());
    }
    system
}

/// 𝔤₀(L)^Γ as a normalized K-basis.
pub fn fixed_points(action: &SemilinearAction) -> FixedSubalgebra {
    let system = fixed_point_system(action);
    let kernel = system.kernel();
    FixedSubalgebra {
        algebra: action.algebra().clone(),
        spec: action.spec().clone(),
        group: action.group(),
        basis: kernel
            .iter()
            .map(|v| LieElement::from_k_vector(action.algebra(), action.spec(), v))
            .collect(),
        construction: Construction::Descent,
    }
}

/// Every basis vector is fixed by every generator.
pub fn is_fixed(f: &FixedSubalgebra, action: &SemilinearAction) -> Result<bool, DescentError> {
    for x in &f.basis {
        for k in 0..action.generators().len() {
            if action.apply_generator(k, x)? != *x {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Dimension, bracket closure, ∂-closure and the split check; with an
/// action, also fixedness of every basis vector.
pub fn verify_descent(
    f: &FixedSubalgebra,
    action: Option<&SemilinearAction>,
) -> Result<VerificationReport, DescentError> {
    let start = std::time::Instant::now();
    let d = f.algebra.dim();
    let mut report = VerificationReport::new("verify_descent")
        .param("algebra", f.algebra.kind())
        .param("group", f.group)
        .param(
            "construction",
            format!("{:?}", f.construction).to_lowercase(),
        );

    let vectors = f.k_vectors();
    let rref = RatRref::from_vectors(f.k_dim(), &vectors);
    let rank = rref.rank();
    report.check(
        "dimension",
        rank == d && f.dim() == d,
        format!("{} vectors, K-rank {rank}, dim g0 = {d}", f.dim()),
    );

    if let Some(action) = action {
        let fixed = is_fixed(f, action)?;
        report.check(
            "fixed",
            fixed,
            format!("{} generators", action.generators().len()),
        );
    }

    let mut bracket_ok = true;
    let mut witness = format!("{} brackets", f.dim() * f.dim().saturating_sub(1) / 2);
    'outer: for i in 0..f.dim() {
        for j in i + 1..f.dim() {
            let b = f.basis[i].bracket(&f.basis[j])?;
            if !rref.contains(&b.to_k_vector()) {
                bracket_ok = false;
                witness = format!("[b{i}, b{j}] leaves the span");
                break 'outer;
            }
        }
    }
    report.check("bracket_closure", bracket_ok, witness);

    let mut derive_ok = true;
    let mut witness = format!("{} derivatives", f.dim());
    for (i, x) in f.basis.iter().enumerate() {
        if !rref.contains(&x.derive().to_k_vector()) {
            derive_ok = false;
            witness = format!("d(b{i}) leaves the span");
            break;
        }
    }
    report.check("derivation_closure", derive_ok, witness);

    let rows: Vec<Vec<TowerElement>> = f.basis.iter().map(|x| x.coords().to_vec()).collect();
    let l_rank = rank_over_tower(&rows)?;
    report.check(
        "split",
        rows.len() == d && l_rank == d,
        format!("{}x{d} matrix over L has rank {l_rank}", rows.len()),
    );
    Ok(report.finish(start))
}

/// Equality of K-spans, decided by ranks: rank F1 = rank F2 = rank(F1 ∪ F2).
pub fn subspace_equal(f1: &FixedSubalgebra, f2: &FixedSubalgebra) -> Result<bool, DescentError> {
    if !f1.same_ambient(f2) {
        return Err(DescentError::AmbientMismatch);
    }
    Ok(k_spans_equal(&f1.k_vectors(), &f2.k_vectors(), f1.k_dim()))
}

pub fn k_spans_equal(a: &[Vec<RatFunc>], b: &[Vec<RatFunc>], ncols: usize) -> bool {
    let ra = rank_of(a, ncols);
    let rb = rank_of(b, ncols);
    if ra != rb {
        return false;
    }
    let both: Vec<Vec<RatFunc>> = a.iter().chain(b).cloned().collect();
    rank_of(&both, ncols) == ra
}
