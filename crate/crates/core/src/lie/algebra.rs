use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use super::LieError;
use crate::field_tower::ConstScalar;

/// Matrix models of the simple Lie algebras that are constructed concretely.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "type", content = "size", rename_all = "lowercase")]
pub enum AlgebraKind {
    /// 𝔰𝔩ₙ, type A_{n−1}.
    Sl(usize),
    /// 𝔬ₘ, skew-symmetric m×m matrices.
    So(usize),
}

impl AlgebraKind {
    pub fn matrix_size(&self) -> usize {
        match *self {
            Self::Sl(n) | Self::So(n) => n,
        }
    }

    pub fn dim(&self) -> usize {
        match *self {
            Self::Sl(n) => n * n - 1,
            Self::So(m) => m * (m - 1) / 2,
        }
    }
}

impl fmt::Display for AlgebraKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Sl(n) => write!(f, "sl{n}"),
            Self::So(m) => write!(f, "so{m}"),
        }
    }
}

/// Entries a matrix over which can be converted to and from basis
/// coordinates.
pub trait MatrixEntry: Clone {
    fn is_zero(&self) -> bool;
    fn add(&self, o: &Self) -> Self;
    fn sub(&self, o: &Self) -> Self;
    fn neg(&self) -> Self;
}

impl MatrixEntry for ConstScalar {
    fn is_zero(&self) -> bool {
        ConstScalar::is_zero(self)
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn neg(&self) -> Self {
        -self
    }
}

impl MatrixEntry for crate::field_tower::RatFunc {
    fn is_zero(&self) -> bool {
        crate::field_tower::RatFunc::is_zero(self)
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn neg(&self) -> Self {
        -self
    }
}

impl MatrixEntry for crate::field_tower::TowerElement {
    fn is_zero(&self) -> bool {
        crate::field_tower::TowerElement::is_zero(self)
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn neg(&self) -> Self {
        crate::field_tower::TowerElement::neg(self)
    }
}

/// A simple Lie algebra over k given by a basis of matrices and its
/// structure constants `[B_i, B_j] = Σ_k c_{ij}^k B_k`.
///
/// Basis order and labels (indices are 0-based):
/// - 𝔰𝔩ₙ: `E[i,j]` for i ≠ j in row-major order, then
///   `H[i] = E[i,i] − E[i+1,i+1]` for i = 0..n−2.
/// - 𝔬ₘ: `F[i,j] = E[i,j] − E[j,i]` for i < j in lexicographic order.
#[derive(Debug)]
pub struct DLieAlgebra {
    kind: AlgebraKind,
    labels: Vec<String>,
    /// Nonzero entries `(row, col, value)` of each basis matrix.
    basis: Vec<Vec<(usize, usize, i64)>>,
    /// Dense c_{ij}^k at `(i·dim + j)·dim + k`.
    constants: Vec<ConstScalar>,
    /// Nonzero terms of `[B_i, B_j]` at `i·dim + j`.
    products: Vec<Vec<(usize, ConstScalar)>>,
}

impl PartialEq for DLieAlgebra {
    fn eq(&self, o: &Self) -> bool {
        self.kind == o.kind
    }
}

impl Eq for DLieAlgebra {}

pub fn make_sl(n: usize) -> Result<Arc<DLieAlgebra>, LieError> {
    if n < 2 {
        return Err(LieError::TooSmall {
            what: "sl(n)",
            min: 2,
            got: n,
        });
    }
    let mut labels = Vec::new();
    let mut basis = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if i != j {
                labels.push(format!("E[{i},{j}]"));
                basis.push(vec![(i, j, 1)]);
            }
        }
    }
    for i in 0..n - 1 {
        labels.push(format!("H[{i}]"));
        basis.push(vec![(i, i, 1), (i + 1, i + 1, -1)]);
    }
    Ok(Arc::new(DLieAlgebra::build(
        AlgebraKind::Sl(n),
        labels,
        basis,
    )))
}

pub fn make_so(m: usize) -> Result<Arc<DLieAlgebra>, LieError> {
    if m < 3 {
        return Err(LieError::TooSmall {
            what: "so(m)",
            min: 3,
            got: m,
        });
    }
    let mut labels = Vec::new();
    let mut basis = Vec::new();
    for i in 0..m {
        for j in i + 1..m {
            labels.push(format!("F[{i},{j}]"));
            basis.push(vec![(i, j, 1), (j, i, -1)]);
        }
    }
    Ok(Arc::new(DLieAlgebra::build(
        AlgebraKind::So(m),
        labels,
        basis,
    )))
}

impl DLieAlgebra {
    fn build(kind: AlgebraKind, labels: Vec<String>, basis: Vec<Vec<(usize, usize, i64)>>) -> Self {
        let dim = basis.len();
        debug_assert_eq!(dim, kind.dim());
        let mut alg = Self {
            kind,
            labels,
            basis,
            constants: vec![ConstScalar::zero(); dim * dim * dim],
            products: vec![Vec::new(); dim * dim],
        };
        let n = kind.matrix_size();
        for i in 0..dim {
            for j in 0..dim {
                // commutator of two sparse integer matrices
                let mut c = vec![vec![0i64; n]; n];
                for &(a, b, x) in &alg.basis[i] {
                    for &(b2, d, y) in &alg.basis[j] {
                        if b == b2 {
                            c[a][d] += x * y;
                        }
                    }
                }
                for &(a, b, x) in &alg.basis[j] {
                    for &(b2, d, y) in &alg.basis[i] {
                        if b == b2 {
                            c[a][d] -= x * y;
                        }
                    }
                }
                let c: Vec<Vec<ConstScalar>> = c
                    .into_iter()
                    .map(|r| r.into_iter().map(ConstScalar::from_int).collect())
                    .collect();
                let coords = alg
                    .coords_of_matrix(&c)
                    .expect("commutators stay in the algebra");
                for (k, v) in coords.into_iter().enumerate() {
                    if !v.is_zero() {
                        alg.constants[(i * dim + j) * dim + k] = v.clone();
                        alg.products[i * dim + j].push((k, v));
                    }
                }
            }
        }
        alg
    }

    pub fn kind(&self) -> AlgebraKind {
        self.kind
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn matrix_size(&self) -> usize {
        self.kind.matrix_size()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    /// Index of `E[i,j]` (i ≠ j) in 𝔰𝔩ₙ.
    pub fn e(&self, i: usize, j: usize) -> usize {
        self.index_of(&format!("E[{i},{j}]")).expect("E[i,j] label")
    }

    /// Index of `H[i]` in 𝔰𝔩ₙ.
    pub fn h(&self, i: usize) -> usize {
        self.index_of(&format!("H[{i}]")).expect("H[i] label")
    }

    /// Index of `F[i,j]` (i < j) in 𝔬ₘ.
    pub fn f(&self, i: usize, j: usize) -> usize {
        self.index_of(&format!("F[{i},{j}]")).expect("F[i,j] label")
    }

    /// c_{ij}^k.
    pub fn structure_constant(&self, i: usize, j: usize, k: usize) -> &ConstScalar {
        let d = self.dim();
        &self.constants[(i * d + j) * d + k]
    }

    /// Nonzero terms of `[B_i, B_j]`.
    pub fn bracket_basis(&self, i: usize, j: usize) -> &[(usize, ConstScalar)] {
        &self.products[i * self.dim() + j]
    }

    /// Nonzero entries of the basis matrix `B_i`.
    pub fn basis_entries(&self, i: usize) -> &[(usize, usize, i64)] {
        &self.basis[i]
    }

    /// Coordinates of a matrix that lies in the algebra.
    pub fn coords_of_matrix<T: MatrixEntry>(&self, m: &[Vec<T>]) -> Result<Vec<T>, LieError> {
        let n = self.matrix_size();
        if m.len() != n || m.iter().any(|r| r.len() != n) {
            return Err(LieError::DimensionMismatch {
                expected: n,
                got: m.len(),
            });
        }
        match self.kind {
            AlgebraKind::Sl(_) => {
                let mut coords = Vec::with_capacity(self.dim());
                for (i, row) in m.iter().enumerate() {
                    for (j, x) in row.iter().enumerate() {
                        if i != j {
                            coords.push(x.clone());
                        }
                    }
                }
                let mut acc = m[0][0].clone();
                for i in 0..n - 1 {
                    coords.push(acc.clone());
                    acc = acc.add(&m[i + 1][i + 1]);
                }
                if !acc.is_zero() {
                    return Err(LieError::NotInAlgebra("matrix is not traceless".into()));
                }
                Ok(coords)
            }
            AlgebraKind::So(_) => {
                let mut coords = Vec::with_capacity(self.dim());
                for i in 0..n {
                    if !m[i][i].is_zero() {
                        return Err(LieError::NotInAlgebra(
                            "matrix is not skew-symmetric".into(),
                        ));
                    }
                    for j in i + 1..n {
                        if !m[i][j].add(&m[j][i]).is_zero() {
                            return Err(LieError::NotInAlgebra(
                                "matrix is not skew-symmetric".into(),
                            ));
                        }
                        coords.push(m[i][j].clone());
                    }
                }
                Ok(coords)
            }
        }
    }

    /// The matrix `Σ coords[i]·B_i`.
    pub fn matrix_of<T: MatrixEntry>(&self, coords: &[T], zero: &T) -> Vec<Vec<T>> {
        assert_eq!(coords.len(), self.dim());
        let n = self.matrix_size();
        let mut m = vec![vec![zero.clone(); n]; n];
        for (c, entries) in coords.iter().zip(&self.basis) {
            if c.is_zero() {
                continue;
            }
            for &(a, b, x) in entries {
                m[a][b] = match x {
                    1 => m[a][b].add(c),
                    -1 => m[a][b].sub(c),
                    _ => unreachable!("basis entries are ±1"),
                };
            }
        }
        m
    }

    /// Dense basis matrix over k.
    pub fn basis_matrix(&self, i: usize) -> Vec<Vec<ConstScalar>> {
        let mut coords = vec![ConstScalar::zero(); self.dim()];
        coords[i] = ConstScalar::one();
        self.matrix_of(&coords, &ConstScalar::zero())
    }

    /// Every `c_{ij}^k = −c_{ji}^k`.
    pub fn antisymmetry_check(&self) -> bool {
        let d = self.dim();
        (0..d).all(|i| {
            (0..d).all(|j| {
                (0..d)
                    .all(|k| *self.structure_constant(i, j, k) == -self.structure_constant(j, i, k))
            })
        })
    }

    /// Jacobi identity on every ordered basis triple.
    pub fn jacobi_check(&self) -> bool {
        let d = self.dim();
        let mut acc = vec![ConstScalar::zero(); d];
        for i in 0..d {
            for j in 0..d {
                for k in 0..d {
                    acc.iter_mut().for_each(|x| *x = ConstScalar::zero());
                    for (a, b, c) in [(i, j, k), (j, k, i), (k, i, j)] {
                        // [[B_a, B_b], B_c]
                        for (l, x) in self.bracket_basis(a, b) {
                            for (m, y) in self.bracket_basis(*l, c) {
                                acc[*m] = &acc[*m] + &(x * y);
                            }
                        }
                    }
                    if acc.iter().any(|x| !x.is_zero()) {
                        return false;
                    }
                }
            }
        }
        true
    }
}

pub fn jacobi_check(g: &DLieAlgebra) -> bool {
    g.jacobi_check()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dimensions() {
        assert_eq!(make_sl(2).unwrap().dim(), 3);
        assert_eq!(make_sl(4).unwrap().dim(), 15);
        assert_eq!(make_so(8).unwrap().dim(), 28);
        assert_eq!(make_so(10).unwrap().dim(), 45);
        assert!(make_sl(1).is_err());
        assert!(make_so(2).is_err());
    }

    #[test]
    fn sl3_brackets() {
        let g = make_sl(3).unwrap();
        // [E01, E10] = E00 − E11 = H0
        assert_eq!(
            g.bracket_basis(g.e(0, 1), g.e(1, 0)),
            &[(g.h(0), ConstScalar::one())]
        );
        // [E01, E12] = E02
        assert_eq!(
            g.bracket_basis(g.e(0, 1), g.e(1, 2)),
            &[(g.e(0, 2), ConstScalar::one())]
        );
    }

    #[test]
    fn coordinates_round_trip() {
        let g = make_sl(3).unwrap();
        let coords: Vec<ConstScalar> = (0..8)
            .map(|i| ConstScalar::from_int(i as i64 - 3))
            .collect();
        let m = g.matrix_of(&coords, &ConstScalar::zero());
        assert_eq!(g.coords_of_matrix(&m).unwrap(), coords);
        let mut bad = m.clone();
        bad[0][0] = &bad[0][0] + &ConstScalar::one();
        assert!(g.coords_of_matrix(&bad).is_err());
    }

    #[test]
    fn small_algebras_satisfy_jacobi() {
        for g in [
            make_sl(2).unwrap(),
            make_sl(3).unwrap(),
            make_so(5).unwrap(),
        ] {
            assert!(g.antisymmetry_check());
            assert!(g.jacobi_check());
        }
    }
}
