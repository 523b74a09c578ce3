//! A deliberately plain reference implementation: dense Gauss-Jordan over
//! K with rational-function entries, and generator matrices obtained by
//! applying the action to every K-basis vector.

#![allow(dead_code)]

use dlie::descent::SemilinearAction;
use dlie::lie::LieElement;
use dlie::RatFunc;

/// Reduced row echelon form; returns the pivot columns.
pub fn rref(m: &mut [Vec<RatFunc>], ncols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..ncols {
        let Some(p) = (row..m.len()).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(row, p);
        let inv = m[row][col].inv().unwrap();
        for c in 0..ncols {
            m[row][c] = &m[row][c] * &inv;
        }
        for r in 0..m.len() {
            if r != row && !m[r][col].is_zero() {
                let f = m[r][col].clone();
                for c in 0..ncols {
                    let v = &m[r][c] - &(&f * &m[row][c]);
                    m[r][c] = v;
                }
            }
        }
        pivots.push(col);
        row += 1;
        if row == m.len() {
            break;
        }
    }
    pivots
}

pub fn rank(rows: &[Vec<RatFunc>], ncols: usize) -> usize {
    rref(&mut rows.to_vec(), ncols).len()
}

pub fn kernel(rows: &[Vec<RatFunc>], ncols: usize) -> Vec<Vec<RatFunc>> {
    let mut m = rows.to_vec();
    let pivots = rref(&mut m, ncols);
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![RatFunc::zero(); ncols];
            v[f] = RatFunc::one();
            for (r, &p) in pivots.iter().enumerate() {
                v[p] = -&m[r][f];
            }
            v
        })
        .collect()
}

pub fn spans_equal(a: &[Vec<RatFunc>], b: &[Vec<RatFunc>], ncols: usize) -> bool {
    let ra = rank(a, ncols);
    let both: Vec<Vec<RatFunc>> = a.iter().chain(b).cloned().collect();
    ra == rank(b, ncols) && ra == rank(&both, ncols)
}

/// ρ(γ_k) − id as a dense K-matrix, column j the image of K-basis vector j.
pub fn generator_minus_identity(action: &SemilinearAction, k: usize) -> Vec<Vec<RatFunc>> {
    let n = action.algebra().dim() * action.spec().degree();
    let mut m = vec![vec![RatFunc::zero(); n]; n];
    for j in 0..n {
        let mut e = vec![RatFunc::zero(); n];
        e[j] = RatFunc::one();
        let x = LieElement::from_k_vector(action.algebra(), action.spec(), &e);
        let image = action.apply_generator(k, &x).unwrap().to_k_vector();
        for (i, v) in image.into_iter().enumerate() {
            m[i][j] = if i == j { &v - &RatFunc::one() } else { v };
        }
    }
    m
}

pub fn fixed_points(action: &SemilinearAction) -> Vec<Vec<RatFunc>> {
    let n = action.algebra().dim() * action.spec().degree();
    let rows: Vec<Vec<RatFunc>> = (0..action.generators().len())
        .flat_map(|k| generator_minus_identity(action, k))
        .collect();
    kernel(&rows, n)
}
