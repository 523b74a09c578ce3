//! The decomposition of 𝔬₈ into seven 4-vectors used for triality.
//!
//! With indices 0..7 and `w(j) = j − 7` for j > 7,
//! `X_i = (x[0,i], x[w(i+1),w(i+5)], x[w(i+4),w(i+6)], x[w(i+2),w(i+3)])`
//! for i = 1..7. The 28 slots are exactly the entries above or below the
//! diagonal, each independent entry once.

use crate::field_tower::ConstScalar;
use crate::lie::{AlgebraKind, DLieAlgebra, LieElement, MatrixEntry};

use super::DescentError;

fn wrap(j: usize) -> usize {
    if j > 7 {
        j - 7
    } else {
        j
    }
}

/// `(row, col)` of the four slots of `X_i`, i = 1..7 stored at `i − 1`.
pub fn seven_slots() -> [[(usize, usize); 4]; 7] {
    let mut out = [[(0, 0); 4]; 7];
    for (k, slots) in out.iter_mut().enumerate() {
        let i = k + 1;
        *slots = [
            (0, i),
            (wrap(i + 1), wrap(i + 5)),
            (wrap(i + 4), wrap(i + 6)),
            (wrap(i + 2), wrap(i + 3)),
        ];
    }
    out
}

/// Position of `F[a,b]` (a < b) in the 𝔬₈ basis.
fn so8_index(a: usize, b: usize) -> usize {
    debug_assert!(a < b && b < 8);
    // number of pairs (i, j) with i < a, plus offset in row a
    a * (15 - a) / 2 + (b - a - 1)
}

/// Slot table as `(basis index, sign)`: `x[r,c] = sign · coords[index]`.
fn slot_table() -> [[(usize, bool); 4]; 7] {
    let mut out = [[(0, false); 4]; 7];
    for (k, slots) in seven_slots().iter().enumerate() {
        for (s, &(r, c)) in slots.iter().enumerate() {
            out[k][s] = if r < c {
                (so8_index(r, c), false)
            } else {
                (so8_index(c, r), true)
            };
        }
    }
    out
}

fn ensure_so8(alg: &DLieAlgebra) -> Result<(), DescentError> {
    if alg.kind() != AlgebraKind::So(8) {
        return Err(DescentError::Ineligible(format!(
            "seven vectors need so8, got {}",
            alg.kind()
        )));
    }
    Ok(())
}

/// Split 𝔬₈ coordinates into the seven vectors.
pub fn seven_split_coords<T: MatrixEntry>(coords: &[T]) -> [[T; 4]; 7] {
    assert_eq!(coords.len(), 28);
    let table = slot_table();
    std::array::from_fn(|k| {
        std::array::from_fn(|s| {
            let (idx, neg) = table[k][s];
            if neg {
                coords[idx].neg()
            } else {
                coords[idx].clone()
            }
        })
    })
}

/// Inverse of [`seven_split_coords`].
pub fn seven_join_coords<T: MatrixEntry>(vs: &[[T; 4]; 7]) -> Vec<T> {
    let table = slot_table();
    let mut out: Vec<Option<T>> = vec![None; 28];
    for k in 0..7 {
        for s in 0..4 {
            let (idx, neg) = table[k][s];
            out[idx] = Some(if neg {
                vs[k][s].neg()
            } else {
                vs[k][s].clone()
            });
        }
    }
    out.into_iter()
        .map(|x| x.expect("the 28 slots cover 𝔬₈"))
        .collect()
}

pub fn seven_split(
    x: &LieElement,
) -> Result<[[crate::field_tower::TowerElement; 4]; 7], DescentError> {
    ensure_so8(x.algebra())?;
    Ok(seven_split_coords(x.coords()))
}

pub fn seven_join(
    alg: &std::sync::Arc<DLieAlgebra>,
    vs: &[[crate::field_tower::TowerElement; 4]; 7],
) -> Result<LieElement, DescentError> {
    ensure_so8(alg)?;
    Ok(LieElement::from_coords(alg, seven_join_coords(vs))?)
}

/// Split an 8×8 matrix, which must be skew-symmetric.
pub fn seven_split_matrix<T: MatrixEntry>(m: &[Vec<T>]) -> Result<[[T; 4]; 7], DescentError> {
    if m.len() != 8 || m.iter().any(|r| r.len() != 8) {
        return Err(DescentError::NotSkew("matrix must be 8×8".into()));
    }
    for i in 0..8 {
        for j in i..8 {
            if !m[i][j].add(&m[j][i]).is_zero() {
                return Err(DescentError::NotSkew(format!(
                    "entries ({i},{j}) and ({j},{i})"
                )));
            }
        }
    }
    Ok(std::array::from_fn(|k| {
        std::array::from_fn(|s| {
            let (r, c) = seven_slots()[k][s];
            m[r][c].clone()
        })
    }))
}

/// The triality matrix S = ½·[[−1,−1,−1,−1],[1,1,−1,−1],[1,−1,1,−1],[1,−1,−1,1]].
pub fn triality_matrix() -> [[ConstScalar; 4]; 4] {
    let signs = [
        [-1, -1, -1, -1],
        [1, 1, -1, -1],
        [1, -1, 1, -1],
        [1, -1, -1, 1],
    ];
    signs.map(|r| r.map(|s| ConstScalar::from_ratio(s, 2)))
}

/// diag(−1, 1, 1, 1).
pub fn flip_matrix() -> [[ConstScalar; 4]; 4] {
    std::array::from_fn(|i| {
        std::array::from_fn(|j| match (i, j) {
            (0, 0) => ConstScalar::from_int(-1),
            _ if i == j => ConstScalar::one(),
            _ => ConstScalar::zero(),
        })
    })
}

/// The k-linear map on 𝔬₈ acting by `m` on each of the seven vectors, as
/// sparse rows over the basis.
pub fn seven_linear_map(m: &[[ConstScalar; 4]; 4]) -> Vec<Vec<(usize, ConstScalar)>> {
    let mut rows = vec![Vec::new(); 28];
    for b in 0..28 {
        let mut e = vec![ConstScalar::zero(); 28];
        e[b] = ConstScalar::one();
        let vs = seven_split_coords(&e);
        let image: [[ConstScalar; 4]; 7] = std::array::from_fn(|k| {
            std::array::from_fn(|r| {
                let mut acc = ConstScalar::zero();
                for c in 0..4 {
                    acc = &acc + &(&m[r][c] * &vs[k][c]);
                }
                acc
            })
        });
        for (a, v) in seven_join_coords(&image).into_iter().enumerate() {
            if !v.is_zero() {
                rows[a].push((b, v));
            }
        }
    }
    rows
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn slots_are_distinct_and_cover() {
        let mut seen = std::collections::BTreeSet::new();
        for slots in seven_slots() {
            for (r, c) in slots {
                assert_ne!(r, c);
                assert!(seen.insert((r.min(c), r.max(c))));
            }
        }
        assert_eq!(seen.len(), 28);
    }

    #[test]
    fn wrap_example() {
        // X_3, third slot reads x[7,2]
        assert_eq!(seven_slots()[2][2], (7, 2));
        assert_eq!(seven_slots()[0][0], (0, 1));
    }

    #[test]
    fn index_formula_matches_labels() {
        let g = crate::lie::make_so(8).unwrap();
        for a in 0..8 {
            for b in a + 1..8 {
                assert_eq!(so8_index(a, b), g.f(a, b));
            }
        }
    }

    #[test]
    fn split_reads_first_entry() {
        let mut e = vec![ConstScalar::zero(); 28];
        e[so8_index(0, 1)] = ConstScalar::one();
        let vs = seven_split_coords(&e);
        assert!(vs[0][0].is_one());
        assert!(vs.iter().flatten().filter(|x| !x.is_zero()).count() == 1);
        assert_eq!(seven_join_coords(&vs), e);
    }

    #[test]
    fn non_skew_matrix_rejected() {
        let mut m = vec![vec![ConstScalar::zero(); 8]; 8];
        m[0][1] = ConstScalar::one();
        assert!(seven_split_matrix(&m).is_err());
        m[1][0] = ConstScalar::from_int(-1);
        assert!(seven_split_matrix(&m).unwrap()[0][0].is_one());
    }
}
