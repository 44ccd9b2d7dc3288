use std::fmt;

use crate::error::{Error, Result};
use crate::par;

use super::Scalar;

/// Dense row-major matrix over ℚ(i).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

/// Outcome of [`Matrix::solve`].
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Solution {
    /// One exact solution. Free variables are set to zero.
    Found(Vec<Scalar>),
    Inconsistent,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![Scalar::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = Scalar::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Scalar>>) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::DimensionMismatch("ragged rows".into()));
        }
        let n = rows.len();
        Ok(Matrix { rows: n, cols, data: rows.into_iter().flatten().collect() })
    }

    /// Builds a matrix whose `j`-th column is `columns[j]`. All columns must
    /// have length `rows`.
    pub fn from_columns(rows: usize, columns: &[Vec<Scalar>]) -> Result<Self> {
        if columns.iter().any(|c| c.len() != rows) {
            return Err(Error::DimensionMismatch("column length".into()));
        }
        let cols = columns.len();
        let mut m = Matrix::zeros(rows, cols);
        for (j, col) in columns.iter().enumerate() {
            for (i, x) in col.iter().enumerate() {
                m.data[i * cols + j] = x.clone();
            }
        }
        Ok(m)
    }

    /// Integer entries, mostly for tests.
    pub fn from_ints(rows: &[&[i64]]) -> Self {
        Matrix::from_rows(rows.iter().map(|r| r.iter().map(|&x| Scalar::from_int(x)).collect()).collect())
            .expect("rectangular input")
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Scalar {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, x: Scalar) {
        self.data[r * self.cols + c] = x;
    }

    pub fn row(&self, r: usize) -> &[Scalar] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<Scalar> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    fn check_square(&self) -> Result<()> {
        if self.is_square() {
            Ok(())
        } else {
            Err(Error::NotSquare { rows: self.rows, cols: self.cols })
        }
    }

    fn product_row(&self, rhs: &Matrix, i: usize) -> Vec<Scalar> {
        let mut out = vec![Scalar::zero(); rhs.cols];
        for (k, a) in self.row(i).iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (o, b) in out.iter_mut().zip(rhs.row(k)) {
                if !b.is_zero() {
                    *o += &(a * b);
                }
            }
        }
        out
    }

    fn check_mul(&self, rhs: &Matrix) -> Result<()> {
        if self.cols != rhs.rows {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        Ok(())
    }

    /// Matrix product; rows are computed in parallel under the `parallel`
    /// feature.
    pub fn mul(&self, rhs: &Matrix) -> Result<Matrix> {
        self.check_mul(rhs)?;
        let rows = par::map_range(self.rows, |i| self.product_row(rhs, i));
        Ok(Matrix { rows: self.rows, cols: rhs.cols, data: rows.into_iter().flatten().collect() })
    }

    /// Same result as [`Matrix::mul`], always on the calling thread.
    pub fn mul_sequential(&self, rhs: &Matrix) -> Result<Matrix> {
        self.check_mul(rhs)?;
        let data = (0..self.rows).flat_map(|i| self.product_row(rhs, i)).collect();
        Ok(Matrix { rows: self.rows, cols: rhs.cols, data })
    }

    pub fn mul_vec(&self, v: &[Scalar]) -> Result<Vec<Scalar>> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch(format!("{} columns, vector of {}", self.cols, v.len())));
        }
        Ok((0..self.rows)
            .map(|i| {
                let mut acc = Scalar::zero();
                for (a, x) in self.row(i).iter().zip(v) {
                    if !a.is_zero() && !x.is_zero() {
                        acc += &(a * x);
                    }
                }
                acc
            })
            .collect())
    }

    pub fn add(&self, rhs: &Matrix) -> Result<Matrix> {
        self.zip_with(rhs, |a, b| a + b)
    }

    pub fn sub(&self, rhs: &Matrix) -> Result<Matrix> {
        self.zip_with(rhs, |a, b| a - b)
    }

    fn zip_with(&self, rhs: &Matrix, f: impl Fn(&Scalar, &Scalar) -> Scalar) -> Result<Matrix> {
        if (self.rows, self.cols) != (rhs.rows, rhs.cols) {
            return Err(Error::DimensionMismatch("elementwise shapes differ".into()));
        }
        let data = self.data.iter().zip(&rhs.data).map(|(a, b)| f(a, b)).collect();
        Ok(Matrix { rows: self.rows, cols: self.cols, data })
    }

    /// `self − λ·I`.
    pub fn shifted(&self, lambda: &Scalar) -> Result<Matrix> {
        self.check_square()?;
        let mut m = self.clone();
        for i in 0..self.rows {
            let d = &m.data[i * self.cols + i] - lambda;
            m.data[i * self.cols + i] = d;
        }
        Ok(m)
    }

    /// Exact `n`-th power by repeated squaring; `n = 0` gives the identity.
    pub fn pow(&self, n: u32) -> Result<Matrix> {
        self.check_square()?;
        let mut result = Matrix::identity(self.rows);
        let mut base = self.clone();
        let mut e = n;
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul(&base)?;
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base)?;
            }
        }
        Ok(result)
    }

    /// Stacks matrices vertically. All must share a column count.
    pub fn vstack(parts: &[&Matrix]) -> Result<Matrix> {
        let cols = parts.first().map_or(0, |m| m.cols);
        if parts.iter().any(|m| m.cols != cols) {
            return Err(Error::DimensionMismatch("vstack column counts differ".into()));
        }
        let rows = parts.iter().map(|m| m.rows).sum();
        let data = parts.iter().flat_map(|m| m.data.iter().cloned()).collect();
        Ok(Matrix { rows, cols, data })
    }

    /// Reduced row echelon form and pivot columns. The pivot in each column
    /// is the first nonzero entry at or below the current row.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..m.cols {
            if row == m.rows {
                break;
            }
            let Some(p) = (row..m.rows).find(|&r| !m.get(r, col).is_zero()) else {
                continue;
            };
            m.swap_rows(row, p);
            let inv = m.get(row, col).inv().expect("pivot is nonzero");
            if !inv.is_one() {
                for c in col..m.cols {
                    let x = m.get(row, c);
                    if !x.is_zero() {
                        let y = x * &inv;
                        m.set(row, c, y);
                    }
                }
            }
            let pivot_row: Vec<Scalar> = m.row(row).to_vec();
            for r in 0..m.rows {
                if r == row {
                    continue;
                }
                let factor = m.get(r, col).clone();
                if factor.is_zero() {
                    continue;
                }
                for (c, p) in pivot_row.iter().enumerate().skip(col) {
                    if !p.is_zero() {
                        let y = m.get(r, c) - &(&factor * p);
                        m.set(r, c, y);
                    }
                }
            }
            pivots.push(col);
            row += 1;
        }
        (m, pivots)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    /// Rank by forward elimination only.
    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        let mut row = 0;
        for col in 0..m.cols {
            if row == m.rows {
                break;
            }
            let Some(p) = (row..m.rows).find(|&r| !m.get(r, col).is_zero()) else {
                continue;
            };
            m.swap_rows(row, p);
            let inv = m.get(row, col).inv().expect("pivot is nonzero");
            let pivot_row: Vec<Scalar> = m.row(row).to_vec();
            for r in row + 1..m.rows {
                if m.get(r, col).is_zero() {
                    continue;
                }
                let factor = m.get(r, col) * &inv;
                for (c, p) in pivot_row.iter().enumerate().skip(col) {
                    if !p.is_zero() {
                        let y = m.get(r, c) - &(&factor * p);
                        m.set(r, c, y);
                    }
                }
            }
            row += 1;
        }
        row
    }

    /// Canonical basis of the row space: the nonzero rows of the reduced
    /// row echelon form.
    pub fn row_space_basis(&self) -> Vec<Vec<Scalar>> {
        let (r, pivots) = self.rref();
        (0..pivots.len()).map(|k| r.row(k).to_vec()).collect()
    }

    /// Places `rhs` to the right of `self`.
    pub fn hstack(&self, rhs: &Matrix) -> Result<Matrix> {
        if self.rows != rhs.rows {
            return Err(Error::DimensionMismatch("hstack row counts differ".into()));
        }
        let cols = self.cols + rhs.cols;
        let mut data = Vec::with_capacity(self.rows * cols);
        for r in 0..self.rows {
            data.extend_from_slice(self.row(r));
            data.extend_from_slice(rhs.row(r));
        }
        Ok(Matrix { rows: self.rows, cols, data })
    }

    /// Basis of the right null space, one vector per free column, in
    /// increasing free-column order.
    pub fn kernel(&self) -> Vec<Vec<Scalar>> {
        let (r, pivots) = self.rref();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        (0..self.cols)
            .filter(|&f| !is_pivot[f])
            .map(|f| {
                let mut v = vec![Scalar::zero(); self.cols];
                v[f] = Scalar::one();
                for (k, &p) in pivots.iter().enumerate() {
                    v[p] = -r.get(k, f);
                }
                v
            })
            .collect()
    }

    /// Solves `self · x = b` exactly.
    pub fn solve(&self, b: &[Scalar]) -> Result<Solution> {
        if b.len() != self.rows {
            return Err(Error::DimensionMismatch(format!("{} rows, rhs of {}", self.rows, b.len())));
        }
        let mut aug = Matrix::zeros(self.rows, self.cols + 1);
        for (r, x) in b.iter().enumerate() {
            for c in 0..self.cols {
                aug.set(r, c, self.get(r, c).clone());
            }
            aug.set(r, self.cols, x.clone());
        }
        let (red, pivots) = aug.rref();
        if pivots.last() == Some(&self.cols) {
            return Ok(Solution::Inconsistent);
        }
        let mut x = vec![Scalar::zero(); self.cols];
        for (k, &p) in pivots.iter().enumerate() {
            x[p] = red.get(k, self.cols).clone();
        }
        Ok(Solution::Found(x))
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows {
            let cells: Vec<String> = self.row(r).iter().map(ToString::to_string).collect();
            writeln!(f, "[{}]", cells.join(", "))?;
        }
        Ok(())
    }
}
