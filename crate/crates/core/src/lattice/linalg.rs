//! Exact integer matrices: column echelon form with a tracked unimodular
//! transform, saturated kernels, and Smith normal form diagonals.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list()
            .entries((0..self.rows).map(|r| self.row(r).iter().map(|x| x.to_string()).collect::<Vec<_>>()))
            .finish()
    }
}

/// A·U = [H | 0] with U unimodular; `rank` is the number of nonzero columns of H.
#[derive(Debug, Clone)]
pub struct Echelon {
    pub rank: usize,
    pub u: Matrix,
    pub u_inv: Matrix,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = BigInt::one();
        }
        m
    }

    pub fn from_rows(rows: &[Vec<i64>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        let mut m = Self::zeros(r, c);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), c, "ragged matrix");
            for (j, &x) in row.iter().enumerate() {
                m.data[i * c + j] = BigInt::from(x);
            }
        }
        m
    }

    pub fn from_big_rows(rows: Vec<Vec<BigInt>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            assert_eq!(row.len(), c, "ragged matrix");
            data.extend(row);
        }
        Matrix { rows: r, cols: c, data }
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &BigInt {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: BigInt) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[BigInt] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<BigInt>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    /// Entries as i64, if they all fit.
    pub fn to_i64_rows(&self) -> Option<Vec<Vec<i64>>> {
        use num_traits::ToPrimitive;
        (0..self.rows)
            .map(|r| self.row(r).iter().map(|x| x.to_i64()).collect())
            .collect()
    }

    pub fn column(&self, c: usize) -> Vec<BigInt> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|r| {
                (0..self.cols).all(|c| {
                    let x = self.get(r, c);
                    if r == c {
                        x.is_one()
                    } else {
                        x.is_zero()
                    }
                })
            })
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn max_abs_bits(&self) -> u64 {
        self.data.iter().map(|x| x.bits()).max().unwrap_or(0)
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        let mut out = Matrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        out.data[i * other.cols + j] += a * b;
                    }
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(self.cols, v.len(), "dimension mismatch");
        (0..self.rows)
            .map(|r| self.row(r).iter().zip(v).map(|(a, b)| a * b).sum())
            .collect()
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a - b).collect(),
        }
    }

    pub fn pow(&self, mut e: u64) -> Matrix {
        assert_eq!(self.rows, self.cols, "power of a non-square matrix");
        let mut base = self.clone();
        let mut acc = Matrix::identity(self.rows);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Block-diagonal sum.
    pub fn direct_sum(&self, other: &Matrix) -> Matrix {
        let mut out = Matrix::zeros(self.rows + other.rows, self.cols + other.cols);
        for r in 0..self.rows {
            for c in 0..self.cols {
                out.set(r, c, self.get(r, c).clone());
            }
        }
        for r in 0..other.rows {
            for c in 0..other.cols {
                out.set(self.rows + r, self.cols + c, other.get(r, c).clone());
            }
        }
        out
    }

    /// Columns `range` of `self` as a new matrix.
    pub fn columns(&self, range: std::ops::Range<usize>) -> Matrix {
        let mut out = Matrix::zeros(self.rows, range.len());
        for r in 0..self.rows {
            for (j, c) in range.clone().enumerate() {
                out.set(r, j, self.get(r, c).clone());
            }
        }
        out
    }

    /// Rows `range` of `self` as a new matrix.
    pub fn rows_range(&self, range: std::ops::Range<usize>) -> Matrix {
        let mut out = Matrix::zeros(range.len(), self.cols);
        for (i, r) in range.enumerate() {
            for c in 0..self.cols {
                out.set(i, c, self.get(r, c).clone());
            }
        }
        out
    }

    // Elementary operations. Each has an inverse of the same shape, which is
    // what keeps U and U⁻¹ in step during echelon reduction.

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    pub fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for r in 0..self.rows {
            self.data.swap(r * self.cols + a, r * self.cols + b);
        }
    }

    /// row[dst] += k·row[src]
    pub fn add_row_multiple(&mut self, dst: usize, src: usize, k: &BigInt) {
        if k.is_zero() {
            return;
        }
        for c in 0..self.cols {
            let v = &self.data[src * self.cols + c] * k;
            if !v.is_zero() {
                self.data[dst * self.cols + c] += v;
            }
        }
    }

    /// col[dst] += k·col[src]
    pub fn add_col_multiple(&mut self, dst: usize, src: usize, k: &BigInt) {
        if k.is_zero() {
            return;
        }
        for r in 0..self.rows {
            let v = &self.data[r * self.cols + src] * k;
            if !v.is_zero() {
                self.data[r * self.cols + dst] += v;
            }
        }
    }

    /// Column echelon form A·U = [H | 0], tracking U and U⁻¹.
    pub fn column_echelon(&self) -> Echelon {
        let n = self.cols;
        let mut a = self.clone();
        let mut u = Matrix::identity(n);
        let mut u_inv = Matrix::identity(n);
        let mut pivot = 0;
        for r in 0..self.rows {
            if pivot == n {
                break;
            }
            loop {
                let best = (pivot..n)
                    .filter(|&c| !a.get(r, c).is_zero())
                    .min_by(|&x, &y| a.get(r, x).magnitude().cmp(a.get(r, y).magnitude()));
                let Some(best) = best else { break };
                a.swap_cols(pivot, best);
                u.swap_cols(pivot, best);
                u_inv.swap_rows(pivot, best);
                let p = a.get(r, pivot).clone();
                let mut clean = true;
                for c in pivot + 1..n {
                    if a.get(r, c).is_zero() {
                        continue;
                    }
                    let q = a.get(r, c).div_floor(&p);
                    let neg_q = -&q;
                    a.add_col_multiple(c, pivot, &neg_q);
                    u.add_col_multiple(c, pivot, &neg_q);
                    u_inv.add_row_multiple(pivot, c, &q);
                    if !a.get(r, c).is_zero() {
                        clean = false;
                    }
                }
                if clean {
                    break;
                }
            }
            if !a.get(r, pivot).is_zero() {
                pivot += 1;
            }
        }
        Echelon {
            rank: pivot,
            u,
            u_inv,
        }
    }

    pub fn rank(&self) -> usize {
        self.column_echelon().rank
    }

    /// Smith normal form diagonal: nonzero invariant factors d₁ | d₂ | …, positive.
    pub fn smith_diagonal(&self) -> Vec<BigInt> {
        let mut a = self.clone();
        let (m, n) = (a.rows, a.cols);
        let mut diag = Vec::new();
        let mut t = 0;
        while t < m.min(n) {
            let mut best: Option<(usize, usize)> = None;
            for r in t..m {
                for c in t..n {
                    let x = a.get(r, c);
                    if !x.is_zero()
                        && best.is_none_or(|(br, bc)| x.magnitude() < a.get(br, bc).magnitude())
                    {
                        best = Some((r, c));
                    }
                }
            }
            let Some((br, bc)) = best else { break };
            a.swap_rows(t, br);
            a.swap_cols(t, bc);
            loop {
                let p = a.get(t, t).clone();
                let mut clean = true;
                for r in t + 1..m {
                    if a.get(r, t).is_zero() {
                        continue;
                    }
                    let q = -a.get(r, t).div_floor(&p);
                    a.add_row_multiple(r, t, &q);
                    if !a.get(r, t).is_zero() {
                        clean = false;
                    }
                }
                for c in t + 1..n {
                    if a.get(t, c).is_zero() {
                        continue;
                    }
                    let q = -a.get(t, c).div_floor(&p);
                    a.add_col_multiple(c, t, &q);
                    if !a.get(t, c).is_zero() {
                        clean = false;
                    }
                }
                if clean {
                    break;
                }
                // a remainder smaller than the pivot appeared: move it to (t, t)
                let mut best = (t, t);
                for r in t..m {
                    let x = a.get(r, t);
                    if !x.is_zero() && x.magnitude() < a.get(best.0, best.1).magnitude() {
                        best = (r, t);
                    }
                }
                for c in t..n {
                    let x = a.get(t, c);
                    if !x.is_zero() && x.magnitude() < a.get(best.0, best.1).magnitude() {
                        best = (t, c);
                    }
                }
                a.swap_rows(t, best.0);
                a.swap_cols(t, best.1);
            }
            diag.push(a.get(t, t).abs());
            t += 1;
        }
        // pairwise gcd/lcm turns any diagonal into the divisibility chain
        for i in 0..diag.len() {
            for j in i + 1..diag.len() {
                let g = diag[i].gcd(&diag[j]);
                let l = diag[i].lcm(&diag[j]);
                diag[i] = g;
                diag[j] = l;
            }
        }
        diag
    }
}

/// Saturated kernel lattice of A, with coordinates for its elements.
#[derive(Debug, Clone)]
pub struct Kernel {
    offset: usize,
    basis: Matrix,
    u_inv: Matrix,
}

impl Kernel {
    pub fn of(a: &Matrix) -> Kernel {
        let ech = a.column_echelon();
        let n = a.ncols();
        Kernel {
            offset: ech.rank,
            basis: ech.u.columns(ech.rank..n),
            u_inv: ech.u_inv,
        }
    }

    pub fn rank(&self) -> usize {
        self.basis.ncols()
    }

    /// Basis vectors as the columns of a matrix.
    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    /// Coordinates of the columns of `b` (assumed to lie in the kernel) in the basis.
    pub fn coordinates(&self, b: &Matrix) -> Matrix {
        let n = self.u_inv.nrows();
        self.u_inv.rows_range(self.offset..n).mul(b)
    }
}

/// Invariant factors of the finite quotient ker(A) / im(B), and its free rank.
/// im(B) must lie in ker(A).
pub fn quotient(kernel_of: &Matrix, image_of: &Matrix) -> (Vec<BigInt>, usize) {
    let ker = Kernel::of(kernel_of);
    let coords = ker.coordinates(image_of);
    let diag = coords.smith_diagonal();
    let free = ker.rank() - diag.len();
    let torsion = diag.into_iter().filter(|d| !d.is_one()).collect();
    (torsion, free)
}
