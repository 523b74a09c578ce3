//! Linear algebra over K = k(t): fraction-free echelon forms over k[t],
//! kernels, membership tests, and ranks over a tower L.

use crate::field_tower::{FieldError, Poly, RatFunc, TowerElement};

/// A sparse row: `(column, entry)` pairs sorted by column, no zero entries.
pub type SparseRow<T> = Vec<(usize, T)>;

/// A K-matrix stored by sparse rows.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct KMatrix {
    ncols: usize,
    rows: Vec<SparseRow<RatFunc>>,
}

impl KMatrix {
    pub fn new(ncols: usize) -> Self {
        Self {
            ncols,
            rows: Vec::new(),
        }
    }

    pub fn from_dense(ncols: usize, rows: &[Vec<RatFunc>]) -> Self {
        let mut m = Self::new(ncols);
        for r in rows {
            m.push_dense(r);
        }
        m
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::new(n);
        for i in 0..n {
            m.rows.push(vec![(i, RatFunc::one())]);
        }
        m
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[SparseRow<RatFunc>] {
        &self.rows
    }

    /// Append a row; zero entries are dropped and columns sorted.
    pub fn push_row(&mut self, mut row: SparseRow<RatFunc>) {
        row.retain(|(_, v)| !v.is_zero());
        row.sort_by_key(|(c, _)| *c);
        debug_assert!(row.iter().all(|(c, _)| *c < self.ncols));
        self.rows.push(row);
    }

    pub fn push_dense(&mut self, row: &[RatFunc]) {
        assert_eq!(row.len(), self.ncols);
        self.rows.push(
            row.iter()
                .enumerate()
                .filter(|(_, v)| !v.is_zero())
                .map(|(c, v)| (c, v.clone()))
                .collect(),
        );
    }

    pub fn append(&mut self, other: KMatrix) {
        assert_eq!(self.ncols, other.ncols);
        self.rows.extend(other.rows);
    }

    pub fn entry(&self, r: usize, c: usize) -> RatFunc {
        self.rows[r]
            .binary_search_by_key(&c, |(k, _)| *k)
            .map(|i| self.rows[r][i].1.clone())
            .unwrap_or_default()
    }

    pub fn to_dense(&self) -> Vec<Vec<RatFunc>> {
        self.rows
            .iter()
            .map(|r| {
                let mut d = vec![RatFunc::zero(); self.ncols];
                for (c, v) in r {
                    d[*c] = v.clone();
                }
                d
            })
            .collect()
    }

    pub fn mul_vec(&self, v: &[RatFunc]) -> Vec<RatFunc> {
        assert_eq!(v.len(), self.ncols);
        self.rows
            .iter()
            .map(|r| {
                let mut acc = RatFunc::zero();
                for (c, e) in r {
                    if !v[*c].is_zero() {
                        acc = &acc + &(e * &v[*c]);
                    }
                }
                acc
            })
            .collect()
    }

    /// Matrix product `self · o`.
    pub fn mul(&self, o: &KMatrix) -> KMatrix {
        assert_eq!(self.ncols, o.nrows());
        let mut out = KMatrix::new(o.ncols);
        for r in &self.rows {
            let mut acc: std::collections::BTreeMap<usize, RatFunc> =
                std::collections::BTreeMap::new();
            for (c, a) in r {
                for (k, b) in &o.rows[*c] {
                    let e = acc.entry(*k).or_default();
                    *e = &*e + &(a * b);
                }
            }
            out.push_row(acc.into_iter().collect());
        }
        out
    }

    /// Rows shifted: row `r` of `self` placed with columns offset by `by`,
    /// in a matrix with `ncols` columns.
    pub fn shifted(&self, by: usize, ncols: usize) -> KMatrix {
        let mut out = KMatrix::new(ncols);
        for r in &self.rows {
            out.rows
                .push(r.iter().map(|(c, v)| (c + by, v.clone())).collect());
        }
        out
    }

    /// `self − I` for a square matrix.
    pub fn minus_identity(&self) -> KMatrix {
        assert_eq!(self.nrows(), self.ncols);
        let mut out = KMatrix::new(self.ncols);
        for (i, r) in self.rows.iter().enumerate() {
            let mut row = r.clone();
            match row.binary_search_by_key(&i, |(c, _)| *c) {
                Ok(k) => row[k].1 = &row[k].1 - &RatFunc::one(),
                Err(k) => row.insert(k, (i, -RatFunc::one())),
            }
            out.push_row(row);
        }
        out
    }

    pub fn rank(&self) -> usize {
        echelon(self.poly_rows(), self.ncols).pivots.len()
    }

    /// Normalized K-basis of the right kernel.
    pub fn kernel(&self) -> Vec<Vec<RatFunc>> {
        let ech = echelon(self.poly_rows(), self.ncols);
        normalize_basis(&back_substitute(&ech, self.ncols), self.ncols)
    }

    fn poly_rows(&self) -> Vec<SparseRow<Poly>> {
        self.rows
            .iter()
            .filter_map(|r| clear_denominators(r))
            .collect()
    }
}

fn lcm(a: &Poly, b: &Poly) -> Poly {
    if a.is_one() {
        return b.clone();
    }
    let g = a.gcd(b);
    a * &b.exact_div(&g)
}

/// Scale a K-row into k[t] with content removed; `None` for a zero row.
pub fn clear_denominators(row: &[(usize, RatFunc)]) -> Option<SparseRow<Poly>> {
    let row: Vec<&(usize, RatFunc)> = row.iter().filter(|(_, v)| !v.is_zero()).collect();
    if row.is_empty() {
        return None;
    }
    let mut l = Poly::one();
    for (_, v) in &row {
        if !v.den().is_one() {
            l = lcm(&l, v.den());
        }
    }
    let mut out: SparseRow<Poly> = row
        .iter()
        .map(|(c, v)| {
            let p = if v.den().is_one() {
                v.num() * &l
            } else {
                v.num() * &l.exact_div(v.den())
            };
            (*c, p)
        })
        .collect();
    strip_content(&mut out);
    Some(out)
}

/// Divide by the gcd of the entries and make the first entry monic.
fn strip_content(row: &mut SparseRow<Poly>) {
    let mut g: Option<Poly> = None;
    for (_, p) in row.iter() {
        let next = match &g {
            None => p.monic(),
            Some(g) => g.gcd(p),
        };
        let done = next.is_one();
        g = Some(next);
        if done {
            break;
        }
    }
    if let Some(g) = g.filter(|g| !g.is_one()) {
        for (_, p) in row.iter_mut() {
            *p = p.exact_div(&g);
        }
    }
    let lc = row[0].1.leading_coeff().unwrap().clone();
    if !lc.is_one() {
        let inv = lc.inv().unwrap();
        for (_, p) in row.iter_mut() {
            *p = p.scale(&inv);
        }
    }
}

/// `a·x − b·y` on sparse rows.
fn combine(a: &Poly, x: &SparseRow<Poly>, b: &Poly, y: &SparseRow<Poly>) -> SparseRow<Poly> {
    let mut out = Vec::with_capacity(x.len() + y.len());
    let (mut i, mut j) = (0, 0);
    while i < x.len() || j < y.len() {
        let cx = x.get(i).map(|e| e.0);
        let cy = y.get(j).map(|e| e.0);
        let (c, v) = match (cx, cy) {
            (Some(cx), Some(cy)) if cx == cy => {
                let v = &(a * &x[i].1) - &(b * &y[j].1);
                i += 1;
                j += 1;
                (cx, v)
            }
            (Some(cx), cy) if cy.is_none_or(|cy| cx < cy) => {
                i += 1;
                (cx, a * &x[i - 1].1)
            }
            (_, Some(cy)) => {
                j += 1;
                (cy, -&(b * &y[j - 1].1))
            }
            _ => unreachable!(),
        };
        if !v.is_zero() {
            out.push((c, v));
        }
    }
    out
}

/// Row echelon form over k[t].
pub struct Echelon {
    /// Pivot rows, pivot columns strictly increasing.
    pub rows: Vec<SparseRow<Poly>>,
    pub pivots: Vec<usize>,
}

/// Fraction-free elimination over k[t]. The pivot of each column is the
/// candidate entry of least degree; eliminating `a` against pivot `p`
/// replaces the row by `(p/g)·row − (a/g)·pivot_row`, `g = gcd(a, p)`,
/// followed by content removal.
pub fn echelon(rows: Vec<SparseRow<Poly>>, ncols: usize) -> Echelon {
    let mut active: Vec<SparseRow<Poly>> = rows.into_iter().filter(|r| !r.is_empty()).collect();
    let mut out = Echelon {
        rows: Vec::new(),
        pivots: Vec::new(),
    };
    for col in 0..ncols {
        if active.is_empty() {
            break;
        }
        let candidates: Vec<usize> = (0..active.len())
            .filter(|&i| active[i][0].0 == col)
            .collect();
        let Some(&best) = candidates
            .iter()
            .min_by_key(|&&i| (active[i][0].1.degree_or_zero(), active[i].len()))
        else {
            continue;
        };
        let pivot_row = active.swap_remove(best);
        let p = &pivot_row[0].1;
        let mut k = 0;
        while k < active.len() {
            if active[k][0].0 != col {
                k += 1;
                continue;
            }
            let a = &active[k][0].1;
            let g = a.gcd(p);
            let (pg, ag) = if g.is_one() {
                (p.clone(), a.clone())
            } else {
                (p.exact_div(&g), a.exact_div(&g))
            };
            let mut r = combine(&pg, &active[k], &ag, &pivot_row);
            if r.is_empty() {
                active.swap_remove(k);
            } else {
                strip_content(&mut r);
                active[k] = r;
                k += 1;
            }
        }
        out.rows.push(pivot_row);
        out.pivots.push(col);
    }
    out
}

/// Kernel basis over K from an echelon form: one vector per free column.
pub fn back_substitute(ech: &Echelon, ncols: usize) -> Vec<Vec<RatFunc>> {
    let mut is_pivot = vec![false; ncols];
    for &p in &ech.pivots {
        is_pivot[p] = true;
    }
    let mut basis = Vec::new();
    for free in (0..ncols).filter(|&c| !is_pivot[c]) {
        let mut x = vec![RatFunc::zero(); ncols];
        x[free] = RatFunc::one();
        for (row, &p) in ech.rows.iter().zip(&ech.pivots).rev() {
            let mut acc = RatFunc::zero();
            for (c, e) in &row[1..] {
                if !x[*c].is_zero() {
                    acc = &acc + &(&x[*c] * &RatFunc::from_poly(e.clone()));
                }
            }
            if !acc.is_zero() {
                let piv = RatFunc::from_poly(row[0].1.clone());
                x[p] = -(&acc / &piv);
            }
        }
        basis.push(x);
    }
    basis
}

/// Canonical basis of the K-span of `vectors`: reduced echelon over K, then
/// each vector scaled into k[t] with content removed and first entry monic.
pub fn normalize_basis(vectors: &[Vec<RatFunc>], ncols: usize) -> Vec<Vec<RatFunc>> {
    let mut rref = RatRref::new(ncols);
    for v in vectors {
        rref.insert(v);
    }
    rref.rows
        .iter()
        .map(|r| {
            let sparse: SparseRow<RatFunc> = r
                .iter()
                .enumerate()
                .filter(|(_, v)| !v.is_zero())
                .map(|(c, v)| (c, v.clone()))
                .collect();
            let mut out = vec![RatFunc::zero(); ncols];
            for (c, p) in clear_denominators(&sparse).expect("nonzero row") {
                out[c] = RatFunc::from_poly(p);
            }
            out
        })
        .collect()
}

/// K-rank of a family of dense vectors.
pub fn rank_of(vectors: &[Vec<RatFunc>], ncols: usize) -> usize {
    KMatrix::from_dense(ncols, vectors).rank()
}

/// Reduced row echelon form over K, tracking each row as a combination of
/// the independent inserted vectors.
#[derive(Clone, Debug)]
pub struct RatRref {
    ncols: usize,
    rows: Vec<Vec<RatFunc>>,
    pivots: Vec<usize>,
    combos: Vec<Vec<RatFunc>>,
    inputs: usize,
}

fn axpy(y: &mut [RatFunc], c: &RatFunc, x: &[RatFunc]) {
    // y ← y − c·x
    for (yi, xi) in y.iter_mut().zip(x) {
        if !xi.is_zero() {
            *yi = &*yi - &(c * xi);
        }
    }
}

impl RatRref {
    pub fn new(ncols: usize) -> Self {
        Self {
            ncols,
            rows: Vec::new(),
            pivots: Vec::new(),
            combos: Vec::new(),
            inputs: 0,
        }
    }

    pub fn from_vectors(ncols: usize, vectors: &[Vec<RatFunc>]) -> Self {
        let mut r = Self::new(ncols);
        for v in vectors {
            r.insert(v);
        }
        r
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<RatFunc>] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Residual of `v` after reduction and its coefficients on the rows'
    /// combinations.
    fn reduce(&self, v: &[RatFunc]) -> (Vec<RatFunc>, Vec<RatFunc>) {
        assert_eq!(v.len(), self.ncols);
        let mut v = v.to_vec();
        let mut coeffs = vec![RatFunc::zero(); self.inputs];
        for ((row, &p), combo) in self.rows.iter().zip(&self.pivots).zip(&self.combos) {
            let c = v[p].clone();
            if c.is_zero() {
                continue;
            }
            axpy(&mut v, &c, row);
            for (k, e) in combo.iter().enumerate() {
                if !e.is_zero() {
                    coeffs[k] = &coeffs[k] + &(&c * e);
                }
            }
        }
        (v, coeffs)
    }

    /// Insert a vector; returns false if it was already in the span.
    pub fn insert(&mut self, v: &[RatFunc]) -> bool {
        let (mut v, coeffs) = self.reduce(v);
        let Some(p) = v.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let k = self.inputs;
        self.inputs += 1;
        for combo in &mut self.combos {
            combo.push(RatFunc::zero());
        }
        let mut combo: Vec<RatFunc> = coeffs.into_iter().map(|c| -c).collect();
        combo.push(RatFunc::one());
        debug_assert_eq!(combo.len(), k + 1);

        let inv = v[p].inv().unwrap();
        for x in v.iter_mut().chain(combo.iter_mut()) {
            if !x.is_zero() {
                *x = &*x * &inv;
            }
        }
        for (row, c) in self.rows.iter_mut().zip(self.combos.iter_mut()) {
            let f = row[p].clone();
            if !f.is_zero() {
                axpy(row, &f, &v);
                axpy(c, &f, &combo);
            }
        }
        let at = self.pivots.partition_point(|&q| q < p);
        self.rows.insert(at, v);
        self.pivots.insert(at, p);
        self.combos.insert(at, combo);
        true
    }

    pub fn contains(&self, v: &[RatFunc]) -> bool {
        self.reduce(v).0.iter().all(RatFunc::is_zero)
    }

    /// Coefficients of `v` on the independent inserted vectors, in insertion
    /// order, if `v` lies in their span.
    pub fn coefficients(&self, v: &[RatFunc]) -> Option<Vec<RatFunc>> {
        let (res, coeffs) = self.reduce(v);
        res.iter().all(RatFunc::is_zero).then_some(coeffs)
    }
}

/// Inverse of a square K-matrix given densely; `None` if singular.
pub fn invert(m: &[Vec<RatFunc>]) -> Option<Vec<Vec<RatFunc>>> {
    let n = m.len();
    let mut rref = RatRref::new(n);
    for r in m {
        if !rref.insert(r) {
            return None;
        }
    }
    // rows are now e_p = Σ_k combo_p[k]·m_k, so the combos are the rows of m⁻¹
    let mut inv = vec![Vec::new(); n];
    for (&p, combo) in rref.pivots.iter().zip(&rref.combos) {
        inv[p] = combo.clone();
    }
    Some(inv)
}

/// Rank over L of a matrix with entries in a tower, by Gaussian elimination
/// over L. Rows must share one tower.
pub fn rank_over_tower(rows: &[Vec<TowerElement>]) -> Result<usize, FieldError> {
    let mut rows: Vec<Vec<TowerElement>> = rows.to_vec();
    let ncols = rows.first().map_or(0, Vec::len);
    let size = |x: &TowerElement| -> usize {
        x.coords()
            .iter()
            .filter(|c| !c.is_zero())
            .map(|c| 1 + c.num().degree_or_zero() + c.den().degree_or_zero())
            .sum()
    };
    let mut rank = 0;
    for col in 0..ncols {
        let Some(best) = (rank..rows.len())
            .filter(|&i| !rows[i][col].is_zero())
            .min_by_key(|&i| {
                (
                    size(&rows[i][col]),
                    rows[i].iter().filter(|x| !x.is_zero()).count(),
                )
            })
        else {
            continue;
        };
        rows.swap(rank, best);
        let inv = rows[rank][col].inv()?;
        let pivot = rows[rank]
            .iter()
            .map(|x| {
                if x.is_zero() {
                    Ok(x.clone())
                } else {
                    x.try_mul(&inv)
                }
            })
            .collect::<Result<Vec<_>, _>>()?;
        for i in rank + 1..rows.len() {
            let f = rows[i][col].clone();
            if f.is_zero() {
                continue;
            }
            for c in col..ncols {
                if !pivot[c].is_zero() {
                    rows[i][c] = rows[i][c].try_sub(&f.try_mul(&pivot[c])?)?;
                }
            }
        }
        rows[rank] = pivot;
        rank += 1;
    }
    Ok(rank)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rf(n: &[i64], d: &[i64]) -> RatFunc {
        RatFunc::new(Poly::from_ints(n), Poly::from_ints(d)).unwrap()
    }

    fn p(n: &[i64]) -> RatFunc {
        RatFunc::from_poly(Poly::from_ints(n))
    }

    #[test]
    fn kernel_of_rank_one() {
        // [t, 1/t] has kernel spanned by (1, −t²)
        let m = KMatrix::from_dense(2, &[vec![p(&[0, 1]), rf(&[1], &[0, 1])]]);
        let k = m.kernel();
        assert_eq!(k.len(), 1);
        assert_eq!(k[0], vec![p(&[1]), p(&[0, 0, -1])]);
        assert_eq!(m.rank(), 1);
    }

    #[test]
    fn kernel_vectors_are_annihilated() {
        let rows = vec![
            vec![p(&[1, 1]), p(&[0, 2]), p(&[3]), p(&[0])],
            vec![p(&[0, 0, 1]), p(&[1]), rf(&[1], &[1, 1]), p(&[2, 0, 1])],
            vec![p(&[1, 1, 1]), p(&[1, 2]), p(&[3]), p(&[2, 0, 1])],
        ];
        let m = KMatrix::from_dense(4, &rows);
        let k = m.kernel();
        assert_eq!(m.rank() + k.len(), 4);
        for v in &k {
            assert!(m.mul_vec(v).iter().all(RatFunc::is_zero));
        }
    }

    #[test]
    fn rref_membership_and_coefficients() {
        let a = vec![p(&[1]), p(&[0, 1]), p(&[0])];
        let b = vec![p(&[0]), p(&[1]), rf(&[1], &[1, 1])];
        let r = RatRref::from_vectors(3, &[a.clone(), b.clone()]);
        let t = p(&[0, 1]);
        let v: Vec<RatFunc> = a.iter().zip(&b).map(|(x, y)| &(&t * x) + y).collect();
        assert_eq!(r.coefficients(&v).unwrap(), vec![t, p(&[1])]);
        assert!(!r.contains(&[p(&[0]), p(&[0]), p(&[1])]));
    }

    #[test]
    fn inverse_round_trip() {
        let m = vec![vec![p(&[0, 1]), p(&[1])], vec![p(&[1]), p(&[0])]];
        let inv = invert(&m).unwrap();
        for i in 0..2 {
            for j in 0..2 {
                let mut acc = RatFunc::zero();
                for k in 0..2 {
                    acc = &acc + &(&m[i][k] * &inv[k][j]);
                }
                assert_eq!(
                    acc,
                    if i == j {
                        RatFunc::one()
                    } else {
                        RatFunc::zero()
                    }
                );
            }
        }
        assert!(invert(&[vec![p(&[1]), p(&[2])], vec![p(&[2]), p(&[4])]]).is_none());
    }
}
