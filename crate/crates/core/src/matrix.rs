//! Dense complex matrices.

use std::ops::Index;

use nalgebra::DMatrix;

use crate::error::{Error, Result};
use crate::C64;

/// Cap on rows and on columns of any product built with [`DenseMatrix::kron`].
pub const KRON_CAP: usize = 10_000;

/// Row-major dense complex matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct DenseMatrix {
    rows: usize,
    cols: usize,
    data: Vec<C64>,
}

/// Outcome of a unitarity test.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct UnitarityCheck {
    pub unitary: bool,
    /// Max abs entry of `A†A − I`.
    pub residual: f64,
    pub tolerance: f64,
}

impl DenseMatrix {
    pub fn new(rows: usize, cols: usize, data: Vec<C64>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::ShapeMismatch(format!(
                "{} entries for a {rows}x{cols} matrix",
                data.len()
            )));
        }
        if let Some(p) = data.iter().position(|z| !z.is_finite()) {
            return Err(Error::NonFinite(p));
        }
        Ok(DenseMatrix { rows, cols, data })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        DenseMatrix {
            rows,
            cols,
            data: vec![C64::new(0.0, 0.0); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = DenseMatrix::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = C64::new(1.0, 0.0);
        }
        m
    }

    /// Builds a matrix entry by entry from `f(row, col)`, 0-based.
    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> C64) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        DenseMatrix { rows, cols, data }
    }

    pub fn diagonal(values: &[C64]) -> Self {
        let n = values.len();
        DenseMatrix::from_fn(n, n, |r, c| if r == c { values[r] } else { C64::new(0.0, 0.0) })
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

    /// Row-major entries.
    pub fn as_slice(&self) -> &[C64] {
        &self.data
    }

    pub fn row(&self, r: usize) -> &[C64] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub(crate) fn set(&mut self, r: usize, c: usize, value: C64) {
        self.data[r * self.cols + c] = value;
    }

    /// Kronecker product `self ⊗ other`.
    pub fn kron(&self, other: &DenseMatrix) -> Result<DenseMatrix> {
        let rows = checked_dim(self.rows, other.rows)?;
        let cols = checked_dim(self.cols, other.cols)?;
        let mut out = DenseMatrix::zeros(rows, cols);
        for i in 0..self.rows {
            for (j, &a) in self.row(i).iter().enumerate() {
                if a == C64::new(0.0, 0.0) {
                    continue;
                }
                for k in 0..other.rows {
                    let dst = (i * other.rows + k) * cols + j * other.cols;
                    for (l, &b) in other.row(k).iter().enumerate() {
                        out.data[dst + l] = a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    /// Matrix product `self · other`.
    pub fn mat_mul(&self, other: &DenseMatrix) -> Result<DenseMatrix> {
        if self.cols != other.rows {
            return Err(Error::ShapeMismatch(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = DenseMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            let dst = &mut out.data[i * other.cols..(i + 1) * other.cols];
            for (k, &a) in self.row(i).iter().enumerate() {
                if a == C64::new(0.0, 0.0) {
                    continue;
                }
                for (d, &b) in dst.iter_mut().zip(other.row(k)) {
                    *d += a * b;
                }
            }
        }
        Ok(out)
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> DenseMatrix {
        DenseMatrix::from_fn(self.cols, self.rows, |r, c| self[(c, r)].conj())
    }

    /// `self · v`.
    pub fn apply(&self, v: &[C64]) -> Result<Vec<C64>> {
        if v.len() != self.cols {
            return Err(Error::ShapeMismatch(format!(
                "{}x{} matrix applied to a vector of length {}",
                self.rows,
                self.cols,
                v.len()
            )));
        }
        Ok((0..self.rows)
            .map(|r| self.row(r).iter().zip(v).map(|(&a, &x)| a * x).sum())
            .collect())
    }

    pub fn scale(&self, factor: C64) -> DenseMatrix {
        DenseMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|&z| z * factor).collect(),
        }
    }

    /// Max abs entry difference. Shapes must agree.
    pub fn max_abs_diff(&self, other: &DenseMatrix) -> Result<f64> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::ShapeMismatch(format!(
                "{}x{} vs {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max))
    }

    /// Tests `A†A = I` entrywise.
    pub fn is_unitary(&self, tol: f64) -> Result<UnitarityCheck> {
        if !self.is_square() {
            return Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let gram = self.adjoint().mat_mul(self)?;
        let residual = gram.max_abs_diff(&DenseMatrix::identity(self.rows))?;
        Ok(UnitarityCheck {
            unitary: residual <= tol,
            residual,
            tolerance: tol,
        })
    }

    pub fn inverse(&self) -> Result<DenseMatrix> {
        if !self.is_square() {
            return Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let inv = self.to_nalgebra().try_inverse().ok_or(Error::Singular)?;
        if inv.iter().any(|z| !z.is_finite()) {
            return Err(Error::Singular);
        }
        Ok(DenseMatrix::from_fn(self.rows, self.cols, |r, c| inv[(r, c)]))
    }

    /// Singular values, largest first.
    pub fn singular_values(&self) -> Vec<f64> {
        if self.rows == 0 || self.cols == 0 {
            return Vec::new();
        }
        let mut sv: Vec<f64> = self.to_nalgebra().singular_values().iter().copied().collect();
        sv.sort_by(|a, b| b.total_cmp(a));
        sv
    }

    fn to_nalgebra(&self) -> DMatrix<C64> {
        DMatrix::from_row_slice(self.rows, self.cols, &self.data)
    }
}

impl Index<(usize, usize)> for DenseMatrix {
    type Output = C64;

    fn index(&self, (r, c): (usize, usize)) -> &C64 {
        assert!(r < self.rows && c < self.cols, "index ({r}, {c}) out of bounds");
        &self.data[r * self.cols + c]
    }
}

fn checked_dim(a: usize, b: usize) -> Result<usize> {
    match a.checked_mul(b) {
        Some(n) if n <= KRON_CAP => Ok(n),
        _ => Err(Error::TooLarge {
            what: "Kronecker product dimension",
            size: a.saturating_mul(b),
            cap: KRON_CAP,
        }),
    }
}

/// Kronecker product of plain vectors, `v ⊗ w`.
pub fn kron_vec(v: &[C64], w: &[C64]) -> Vec<C64> {
    v.iter().flat_map(|&a| w.iter().map(move |&b| a * b)).collect()
}
