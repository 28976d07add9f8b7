//! Exact sparse linear algebra over ℚ.
//!
//! Two elimination routines back everything: [`SparseMat::rank`], a
//! fraction-free integer elimination (rows are scaled to integers and kept
//! content-reduced, pivots chosen for sparsity), and [`SparseMat::rref`],
//! a deterministic rational reduced row-echelon form used wherever an
//! actual basis is needed. RREF is unique, so echelon bases and
//! [`Subspace`] equality are canonical.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::scalar::Scalar;

/// Sparse matrix over ℚ, row-major, each row sorted by column index.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SparseMat {
    rows: usize,
    cols: usize,
    data: Vec<Vec<(usize, Scalar)>>,
}

impl SparseMat {
    pub fn zero(rows: usize, cols: usize) -> Self {
        SparseMat {
            rows,
            cols,
            data: vec![Vec::new(); rows],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = SparseMat::zero(n, n);
        for i in 0..n {
            m.data[i].push((i, crate::scalar::one()));
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    /// Adds `v` to the entry at (r, c).
    pub fn add(&mut self, r: usize, c: usize, v: Scalar) {
        assert!(r < self.rows && c < self.cols, "entry out of range");
        if v.is_zero() {
            return;
        }
        let row = &mut self.data[r];
        match row.binary_search_by_key(&c, |(j, _)| *j) {
            Ok(idx) => {
                row[idx].1 += v;
                if row[idx].1.is_zero() {
                    row.remove(idx);
                }
            }
            Err(idx) => row.insert(idx, (c, v)),
        }
    }

    pub fn get(&self, r: usize, c: usize) -> Scalar {
        match self.data[r].binary_search_by_key(&c, |(j, _)| *j) {
            Ok(idx) => self.data[r][idx].1.clone(),
            Err(_) => crate::scalar::zero(),
        }
    }

    pub fn row_entries(&self, r: usize) -> &[(usize, Scalar)] {
        &self.data[r]
    }

    pub fn nnz(&self) -> usize {
        self.data.iter().map(Vec::len).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Vec::is_empty)
    }

    pub fn transpose(&self) -> SparseMat {
        let mut t = SparseMat::zero(self.cols, self.rows);
        for (r, row) in self.data.iter().enumerate() {
            for (c, v) in row {
                t.data[*c].push((r, v.clone()));
            }
        }
        t
    }

    /// Matrix product `self * other`.
    pub fn mul(&self, other: &SparseMat) -> SparseMat {
        assert_eq!(self.cols, other.rows, "shape mismatch in matrix product");
        let mut out = SparseMat::zero(self.rows, other.cols);
        for (r, row) in self.data.iter().enumerate() {
            let mut acc: Vec<(usize, Scalar)> = Vec::new();
            for (k, a) in row {
                for (c, b) in &other.data[*k] {
                    let v = a * b;
                    match acc.binary_search_by_key(c, |(j, _)| *j) {
                        Ok(idx) => acc[idx].1 += v,
                        Err(idx) => acc.insert(idx, (*c, v)),
                    }
                }
            }
            acc.retain(|(_, v)| !v.is_zero());
            out.data[r] = acc;
        }
        out
    }

    pub fn mul_vec(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(self.cols, v.len());
        self.data
            .iter()
            .map(|row| {
                let mut s = crate::scalar::zero();
                for (c, a) in row {
                    if !v[*c].is_zero() {
                        s += a * &v[*c];
                    }
                }
                s
            })
            .collect()
    }

    /// Exact rank via fraction-free elimination: rows are cleared to
    /// content-reduced integer vectors and combined by lcm-scaled
    /// subtraction; pivots are chosen to minimize fill (fewest-entry row,
    /// then fewest-entry column).
    pub fn rank(&self) -> usize {
        let mut rows: Vec<Vec<(usize, BigInt)>> = self
            .data
            .iter()
            .filter(|row| !row.is_empty())
            .map(|row| integer_row(row))
            .collect();
        let mut colcount = vec![0usize; self.cols];
        for row in &rows {
            for (c, _) in row {
                colcount[*c] += 1;
            }
        }
        let mut rank = 0;
        while !rows.is_empty() {
            // pivot row: fewest entries; pivot column within it: fewest entries
            let (pr, _) = rows
                .iter()
                .enumerate()
                .min_by_key(|(_, row)| row.len())
                .unwrap();
            let pivot_row = rows.swap_remove(pr);
            for (c, _) in &pivot_row {
                colcount[*c] -= 1;
            }
            let (pc, pv) = pivot_row
                .iter()
                .min_by_key(|(c, _)| colcount[*c])
                .map(|(c, v)| (*c, v.clone()))
                .unwrap();
            rank += 1;
            let mut next = Vec::with_capacity(rows.len());
            for row in rows {
                let rv = match row.binary_search_by_key(&pc, |(j, _)| *j) {
                    Ok(idx) => row[idx].1.clone(),
                    Err(_) => {
                        next.push(row);
                        continue;
                    }
                };
                for (c, _) in &row {
                    colcount[*c] -= 1;
                }
                let m = pv.lcm(&rv);
                let fr = &m / &rv;
                let fp = &m / &pv;
                let combined = row_axpy(&row, &fr, &pivot_row, &fp);
                if !combined.is_empty() {
                    for (c, _) in &combined {
                        colcount[*c] += 1;
                    }
                    next.push(combined);
                }
            }
            rows = next;
        }
        rank
    }

    /// Deterministic reduced row-echelon form over ℚ.
    pub fn rref(&self) -> Rref {
        let mut rows: Vec<Vec<(usize, Scalar)>> =
            self.data.iter().filter(|r| !r.is_empty()).cloned().collect();
        let mut done: Vec<Vec<(usize, Scalar)>> = Vec::new();
        let mut pivots: Vec<usize> = Vec::new();
        for col in 0..self.cols {
            let Some(pos) = rows.iter().position(|r| r[0].0 == col) else {
                continue;
            };
            let mut piv = rows.swap_remove(pos);
            let inv = piv[0].1.recip();
            for (_, v) in piv.iter_mut() {
                *v *= &inv;
            }
            for row in rows.iter_mut().chain(done.iter_mut()) {
                if let Ok(idx) = row.binary_search_by_key(&col, |(j, _)| *j) {
                    let f = row[idx].1.clone();
                    *row = row_axpy_scalar(row, &f, &piv);
                }
            }
            rows.retain(|r| !r.is_empty());
            done.push(piv);
            pivots.push(col);
            if rows.is_empty() {
                break;
            }
        }
        debug_assert!(rows.is_empty());
        Rref {
            cols: self.cols,
            rows: done,
            pivots,
        }
    }

    /// Canonical basis of the right kernel, one vector per free column in
    /// ascending column order.
    pub fn kernel_basis(&self) -> Vec<Vec<Scalar>> {
        let rref = self.rref();
        debug_assert_eq!(rref.pivots.len(), self.rank());
        let mut pivot_of_col = vec![usize::MAX; self.cols];
        for (r, c) in rref.pivots.iter().enumerate() {
            pivot_of_col[*c] = r;
        }
        let mut basis = Vec::new();
        for free in 0..self.cols {
            if pivot_of_col[free] != usize::MAX {
                continue;
            }
            let mut v = vec![crate::scalar::zero(); self.cols];
            v[free] = crate::scalar::one();
            for (r, c) in rref.pivots.iter().enumerate() {
                if let Ok(idx) = rref.rows[r].binary_search_by_key(&free, |(j, _)| *j) {
                    v[*c] = -rref.rows[r][idx].1.clone();
                }
            }
            basis.push(v);
        }
        basis
    }
}

/// Result of [`SparseMat::rref`]: reduced rows ordered by pivot column.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Rref {
    pub cols: usize,
    pub rows: Vec<Vec<(usize, Scalar)>>,
    pub pivots: Vec<usize>,
}

fn integer_row(row: &[(usize, Scalar)]) -> Vec<(usize, BigInt)> {
    let mut l = BigInt::one();
    for (_, v) in row {
        l = l.lcm(v.denom());
    }
    let mut out: Vec<(usize, BigInt)> = row
        .iter()
        .map(|(c, v)| (*c, v.numer() * (&l / v.denom())))
        .collect();
    let mut g = BigInt::zero();
    for (_, v) in &out {
        g = g.gcd(v);
    }
    if !g.is_one() && !g.is_zero() {
        for (_, v) in out.iter_mut() {
            *v = &*v / &g;
        }
    }
    out
}

/// `fr * a - fp * b` on sorted integer rows, content-reduced.
fn row_axpy(
    a: &[(usize, BigInt)],
    fr: &BigInt,
    b: &[(usize, BigInt)],
    fp: &BigInt,
) -> Vec<(usize, BigInt)> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        if j >= b.len() || (i < a.len() && a[i].0 < b[j].0) {
            out.push((a[i].0, fr * &a[i].1));
            i += 1;
        } else if i >= a.len() || b[j].0 < a[i].0 {
            out.push((b[j].0, -(fp * &b[j].1)));
            j += 1;
        } else {
            let v = fr * &a[i].1 - fp * &b[j].1;
            if !v.is_zero() {
                out.push((a[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    let mut g = BigInt::zero();
    for (_, v) in &out {
        g = g.gcd(v);
    }
    if !g.is_one() && !g.is_zero() {
        for (_, v) in out.iter_mut() {
            *v = &*v / &g;
        }
    }
    out
}

/// `a - f * b` on sorted rational rows.
fn row_axpy_scalar(
    a: &[(usize, Scalar)],
    f: &Scalar,
    b: &[(usize, Scalar)],
) -> Vec<(usize, Scalar)> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        if j >= b.len() || (i < a.len() && a[i].0 < b[j].0) {
            out.push(a[i].clone());
            i += 1;
        } else if i >= a.len() || b[j].0 < a[i].0 {
            out.push((b[j].0, -(f * &b[j].1)));
            j += 1;
        } else {
            let v = &a[i].1 - f * &b[j].1;
            if !v.is_zero() {
                out.push((a[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

/// A linear subspace of ℚ^ambient held as the unique RREF basis of its
/// spanning set. Equality of subspaces is therefore literal equality.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subspace {
    ambient: usize,
    basis: Vec<Vec<Scalar>>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn from_spanning(ambient: usize, vectors: &[Vec<Scalar>]) -> Self {
        let mut m = SparseMat::zero(vectors.len(), ambient);
        for (r, v) in vectors.iter().enumerate() {
            assert_eq!(v.len(), ambient, "spanning vector has wrong length");
            for (c, x) in v.iter().enumerate() {
                if !x.is_zero() {
                    m.add(r, c, x.clone());
                }
            }
        }
        let rref = m.rref();
        let basis = rref
            .rows
            .iter()
            .map(|row| {
                let mut v = vec![crate::scalar::zero(); ambient];
                for (c, x) in row {
                    v[*c] = x.clone();
                }
                v
            })
            .collect();
        Subspace {
            ambient,
            basis,
            pivots: rref.pivots,
        }
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vec<Scalar>] {
        &self.basis
    }

    /// Residual of `v` after reduction against the echelon basis; zero iff
    /// `v` lies in the subspace.
    pub fn reduce(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(v.len(), self.ambient);
        let mut r = v.to_vec();
        for (row, pc) in self.basis.iter().zip(&self.pivots) {
            if !r[*pc].is_zero() {
                let f = r[*pc].clone();
                for (c, x) in row.iter().enumerate() {
                    if !x.is_zero() {
                        r[c] -= &f * x;
                    }
                }
            }
        }
        r
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        self.reduce(v).iter().all(Zero::is_zero)
    }

    /// Coordinates of `v` in the echelon basis, `None` when `v` is not in
    /// the subspace. Echelon rows carry a 1 at their pivot column and
    /// zeros at the other pivots, so the coordinates can be read off.
    pub fn coordinates(&self, v: &[Scalar]) -> Option<Vec<Scalar>> {
        assert_eq!(v.len(), self.ambient);
        let mut coords = vec![crate::scalar::zero(); self.dim()];
        let mut residual = v.to_vec();
        for (t, (row, pc)) in self.basis.iter().zip(&self.pivots).enumerate() {
            if residual[*pc].is_zero() {
                continue;
            }
            coords[t] = residual[*pc].clone();
            for (c, x) in row.iter().enumerate() {
                if !x.is_zero() {
                    residual[c] -= &coords[t] * x;
                }
            }
        }
        residual.iter().all(Zero::is_zero).then_some(coords)
    }

    pub fn contains_all(&self, other: &Subspace) -> bool {
        other.basis.iter().all(|v| self.contains(v))
    }
}

/// Solves `M x = t` for each target column `t`; `None` when any system is
/// inconsistent. Free variables are set to zero, so solutions are
/// deterministic.
pub fn solve_columns(m: &SparseMat, targets: &[Vec<Scalar>]) -> Option<Vec<Vec<Scalar>>> {
    let (rows, cols) = (m.rows(), m.cols());
    let mut aug = SparseMat::zero(rows, cols + targets.len());
    for r in 0..rows {
        for (c, v) in m.row_entries(r) {
            aug.add(r, *c, v.clone());
        }
    }
    for (j, t) in targets.iter().enumerate() {
        assert_eq!(t.len(), rows, "target has wrong length");
        for (r, v) in t.iter().enumerate() {
            if !v.is_zero() {
                aug.add(r, cols + j, v.clone());
            }
        }
    }
    let rref = aug.rref();
    if rref.pivots.iter().any(|p| *p >= cols) {
        return None;
    }
    let mut solutions = vec![vec![crate::scalar::zero(); cols]; targets.len()];
    for (r, p) in rref.pivots.iter().enumerate() {
        for (c, v) in &rref.rows[r] {
            if *c >= cols {
                solutions[*c - cols][*p] = v.clone();
            }
        }
    }
    Some(solutions)
}

/// Inverse of a dense square matrix; `None` when singular.
pub fn invert_dense(a: &[Vec<Scalar>]) -> Option<Vec<Vec<Scalar>>> {
    let n = a.len();
    let mut m = SparseMat::zero(n, 2 * n);
    for (r, row) in a.iter().enumerate() {
        assert_eq!(row.len(), n, "matrix not square");
        for (c, v) in row.iter().enumerate() {
            if !v.is_zero() {
                m.add(r, c, v.clone());
            }
        }
        m.add(r, n + r, crate::scalar::one());
    }
    let rref = m.rref();
    if rref.pivots.len() < n || rref.pivots[..n] != (0..n).collect::<Vec<_>>()[..] {
        return None;
    }
    let mut inv = vec![vec![crate::scalar::zero(); n]; n];
    for (r, row) in rref.rows.iter().enumerate().take(n) {
        for (c, v) in row {
            if *c >= n {
                inv[r][*c - n] = v.clone();
            }
        }
    }
    Some(inv)
}

/// Determinant of a dense square matrix by rational elimination.
pub fn det_dense(a: &[Vec<Scalar>]) -> Scalar {
    let n = a.len();
    let mut m: Vec<Vec<Scalar>> = a.to_vec();
    let mut det = crate::scalar::one();
    for col in 0..n {
        let Some(p) = (col..n).find(|&r| !m[r][col].is_zero()) else {
            return crate::scalar::zero();
        };
        if p != col {
            m.swap(p, col);
            det = -det;
        }
        det *= &m[col][col];
        let inv = m[col][col].recip();
        for r in col + 1..n {
            if m[r][col].is_zero() {
                continue;
            }
            let f = &m[r][col] * &inv;
            for c in col..n {
                let sub = &f * &m[col][c];
                m[r][c] -= sub;
            }
        }
    }
    det
}
