//! Small dense matrices, LU factorization with partial pivoting and a
//! one-norm condition estimate.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};

/// Pivots below `PIVOT_TOLERANCE * max|entry|` are treated as zero.
pub const PIVOT_TOLERANCE: f64 = 1e-14;
/// Condition estimates above this flag the solve as ill-conditioned.
pub const ILL_CONDITIONED: f64 = 1e12;

/// Row-major dense matrix.
#[derive(Clone, PartialEq, Serialize)]
pub struct DenseMatrix {
    rows: usize,
    cols: usize,
    data: Vec<f64>,
}

impl DenseMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self { rows, cols, data: vec![0.0; rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = 1.0;
        }
        m
    }

    pub fn from_row_major(rows: usize, cols: usize, data: Vec<f64>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::DimensionMismatch { expected: rows * cols, got: data.len() });
        }
        Ok(Self { rows, cols, data })
    }

    pub fn from_rows(rows: &[Vec<f64>]) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        let mut data = Vec::with_capacity(rows.len() * cols);
        for row in rows {
            if row.len() != cols {
                return Err(Error::DimensionMismatch { expected: cols, got: row.len() });
            }
            data.extend_from_slice(row);
        }
        Ok(Self { rows: rows.len(), cols, data })
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> f64) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Self { rows, cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.data
    }

    pub fn row(&self, i: usize) -> &[f64] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<f64> {
        (0..self.rows).map(|i| self[(i, j)]).collect()
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self[(j, i)])
    }

    pub fn max_abs(&self) -> f64 {
        self.data.iter().fold(0.0, |m, v| m.max(v.abs()))
    }

    pub fn norm_one(&self) -> f64 {
        (0..self.cols)
            .map(|j| (0..self.rows).map(|i| self[(i, j)].abs()).sum::<f64>())
            .fold(0.0, f64::max)
    }

    pub fn mul_vec(&self, x: &[f64]) -> Result<Vec<f64>> {
        if x.len() != self.cols {
            return Err(Error::DimensionMismatch { expected: self.cols, got: x.len() });
        }
        Ok((0..self.rows)
            .map(|i| self.row(i).iter().zip(x).map(|(a, b)| a * b).sum())
            .collect())
    }

    pub fn matmul(&self, other: &DenseMatrix) -> Result<DenseMatrix> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch { expected: self.cols, got: other.rows });
        }
        let mut out = DenseMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            let orow = &mut out.data[i * other.cols..(i + 1) * other.cols];
            for (k, &a) in self.row(i).iter().enumerate() {
                if a == 0.0 {
                    continue;
                }
                for (o, &b) in orow.iter_mut().zip(other.row(k)) {
                    *o += a * b;
                }
            }
        }
        Ok(out)
    }

    /// `selfᵀ · other` without materializing the transpose.
    pub fn transpose_matmul(&self, other: &DenseMatrix) -> Result<DenseMatrix> {
        if self.rows != other.rows {
            return Err(Error::DimensionMismatch { expected: self.rows, got: other.rows });
        }
        let mut out = DenseMatrix::zeros(self.cols, other.cols);
        for k in 0..self.rows {
            let brow = other.row(k);
            for (i, &a) in self.row(k).iter().enumerate() {
                if a == 0.0 {
                    continue;
                }
                let orow = &mut out.data[i * other.cols..(i + 1) * other.cols];
                for (o, &b) in orow.iter_mut().zip(brow) {
                    *o += a * b;
                }
            }
        }
        Ok(out)
    }
}

impl DenseMatrix {
    /// `self · otherᵀ` without materializing the transpose.
    pub fn matmul_transpose(&self, other: &DenseMatrix) -> Result<DenseMatrix> {
        if self.cols != other.cols {
            return Err(Error::DimensionMismatch { expected: self.cols, got: other.cols });
        }
        Ok(DenseMatrix::from_fn(self.rows, other.rows, |i, j| {
            self.row(i).iter().zip(other.row(j)).map(|(a, b)| a * b).sum()
        }))
    }
}

impl std::ops::Index<(usize, usize)> for DenseMatrix {
    type Output = f64;
    fn index(&self, (i, j): (usize, usize)) -> &f64 {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for DenseMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut f64 {
        &mut self.data[i * self.cols + j]
    }
}

impl fmt::Debug for DenseMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "DenseMatrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            writeln!(f, "  {:?}", self.row(i))?;
        }
        write!(f, "]")
    }
}

/// Result of a linear solve.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SolveReport {
    pub solution: Vec<f64>,
    pub condition_estimate: f64,
    /// Set when `condition_estimate` exceeds [`ILL_CONDITIONED`].
    pub ill_conditioned: bool,
}

/// LU factorization `P·R = L·U` of a square matrix.
#[derive(Clone)]
pub struct Lu {
    n: usize,
    lu: Vec<f64>,
    perm: Vec<usize>,
    condition: f64,
}

impl Lu {
    pub fn factor(r: &DenseMatrix) -> Result<Self> {
        if r.rows != r.cols {
            return Err(Error::DimensionMismatch { expected: r.rows, got: r.cols });
        }
        let n = r.rows;
        let threshold = PIVOT_TOLERANCE * r.max_abs();
        let mut lu = r.data.clone();
        let mut perm: Vec<usize> = (0..n).collect();
        for c in 0..n {
            let (p, pv) = (c..n)
                .map(|i| (i, lu[i * n + c].abs()))
                .fold((c, -1.0), |best, cur| if cur.1 > best.1 { cur } else { best });
            if !(pv >= threshold) || pv == 0.0 {
                return Err(Error::SingularMatrix { column: c, pivot: pv, threshold });
            }
            if p != c {
                for j in 0..n {
                    lu.swap(c * n + j, p * n + j);
                }
                perm.swap(c, p);
            }
            let d = lu[c * n + c];
            for i in c + 1..n {
                let f = lu[i * n + c] / d;
                lu[i * n + c] = f;
                if f != 0.0 {
                    for j in c + 1..n {
                        lu[i * n + j] -= f * lu[c * n + j];
                    }
                }
            }
        }
        let mut out = Self { n, lu, perm, condition: f64::INFINITY };
        out.condition = (r.norm_one() * out.inverse_norm_one_estimate()).max(1.0);
        Ok(out)
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn condition_estimate(&self) -> f64 {
        self.condition
    }

    /// Solves `R x = q`.
    pub fn solve_in_place(&self, q: &[f64]) -> Vec<f64> {
        let n = self.n;
        let mut x: Vec<f64> = self.perm.iter().map(|&p| q[p]).collect();
        for i in 0..n {
            let mut s = x[i];
            for j in 0..i {
                s -= self.lu[i * n + j] * x[j];
            }
            x[i] = s;
        }
        for i in (0..n).rev() {
            let mut s = x[i];
            for j in i + 1..n {
                s -= self.lu[i * n + j] * x[j];
            }
            x[i] = s / self.lu[i * n + i];
        }
        x
    }

    /// Solves `Rᵀ y = q`.
    pub fn solve_transpose(&self, q: &[f64]) -> Vec<f64> {
        let n = self.n;
        let mut z = q.to_vec();
        for i in 0..n {
            let mut s = z[i];
            for j in 0..i {
                s -= self.lu[j * n + i] * z[j];
            }
            z[i] = s / self.lu[i * n + i];
        }
        for i in (0..n).rev() {
            let mut s = z[i];
            for j in i + 1..n {
                s -= self.lu[j * n + i] * z[j];
            }
            z[i] = s;
        }
        let mut y = vec![0.0; n];
        for (i, &p) in self.perm.iter().enumerate() {
            y[p] = z[i];
        }
        y
    }

    pub fn solve(&self, q: &[f64]) -> Result<SolveReport> {
        if q.len() != self.n {
            return Err(Error::DimensionMismatch { expected: self.n, got: q.len() });
        }
        Ok(SolveReport {
            solution: self.solve_in_place(q),
            condition_estimate: self.condition,
            ill_conditioned: self.condition > ILL_CONDITIONED,
        })
    }

    // Hager's estimate of ‖R⁻¹‖₁.
    fn inverse_norm_one_estimate(&self) -> f64 {
        let n = self.n;
        if n == 0 {
            return 0.0;
        }
        let mut x = vec![1.0 / n as f64; n];
        let mut est = 0.0;
        for _ in 0..5 {
            let y = self.solve_in_place(&x);
            let new_est: f64 = y.iter().map(|v| v.abs()).sum();
            let xi: Vec<f64> = y.iter().map(|&v| if v >= 0.0 { 1.0 } else { -1.0 }).collect();
            let z = self.solve_transpose(&xi);
            let (jmax, zmax) = z
                .iter()
                .enumerate()
                .fold((0, -1.0), |b, (i, v)| if v.abs() > b.1 { (i, v.abs()) } else { b });
            let ztx: f64 = z.iter().zip(&x).map(|(a, b)| a * b).sum();
            if new_est <= est || zmax <= ztx {
                est = est.max(new_est);
                break;
            }
            est = new_est;
            x = vec![0.0; n];
            x[jmax] = 1.0;
        }
        // Higham's alternating-sign safeguard.
        let alt: Vec<f64> = (0..n)
            .map(|i| {
                let s = if i % 2 == 0 { 1.0 } else { -1.0 };
                s * (1.0 + i as f64 / (n.max(2) - 1) as f64)
            })
            .collect();
        let y = self.solve_in_place(&alt);
        let alt_est = 2.0 * y.iter().map(|v| v.abs()).sum::<f64>() / (3.0 * n as f64);
        est.max(alt_est)
    }
}

impl fmt::Debug for Lu {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Lu")
            .field("n", &self.n)
            .field("condition", &self.condition)
            .finish_non_exhaustive()
    }
}

pub fn solve(r: &DenseMatrix, q: &[f64]) -> Result<SolveReport> {
    if q.len() != r.rows {
        return Err(Error::DimensionMismatch { expected: r.rows, got: q.len() });
    }
    Lu::factor(r)?.solve(q)
}

/// Solves for several right-hand sides with one factorization.
pub fn solve_multi(r: &DenseMatrix, qs: &[Vec<f64>]) -> Result<Vec<SolveReport>> {
    let lu = Lu::factor(r)?;
    qs.iter().map(|q| lu.solve(q)).collect()
}
