//! The multipartite gate entangler `R = R^d + R^ad`, the pattern permutation
//! `P` and the phase gate `τ = R·P`.
//!
//! For `n = N^m`, `R` is diagonal in its first and last rows and antidiagonal
//! in between: row `r` has its single nonzero at column `n + 1 − r`. Two
//! readings of which coefficient goes on each antidiagonal row are supported,
//! see [`Convention`].

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::matrix::{DenseMatrix, UnitarityCheck};
use crate::segre::{is_fully_separable, SeparabilityVerdict, DEFAULT_SEPARABILITY_TOL};
use crate::tensor::{uniform_product_state, CoefficientTensor, StateVector};
use crate::C64;

/// Default tolerance for unitarity checks.
pub const DEFAULT_UNITARY_TOL: f64 = 1e-12;

/// Which coefficient sits on antidiagonal row `r` of the entangler.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum Convention {
    /// Row `r` carries `α` at lex position `n + 1 − r`. This reproduces the
    /// explicit 9×9 and 27×27 matrices, e.g. `α₃₂` on row 2 for `N = 3, m = 2`.
    PaperMatrix,
    /// Row `r` carries `α` at lex position `r`, so applying `R` to the
    /// uniform product state returns the coefficients `α` in lex order.
    #[default]
    Theorem,
}

impl Convention {
    pub fn as_str(&self) -> &'static str {
        match self {
            Convention::PaperMatrix => "paper-matrix",
            Convention::Theorem => "theorem",
        }
    }
}

impl fmt::Display for Convention {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Convention {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "paper-matrix" => Ok(Convention::PaperMatrix),
            "theorem" => Ok(Convention::Theorem),
            other => Err(format!("unknown convention '{other}' (expected paper-matrix or theorem)")),
        }
    }
}

/// A square matrix with exactly one structural entry per row and per column.
///
/// Stored as a permutation `row → column` plus the value in each row. Values
/// may be zero; the pattern is still a permutation.
#[derive(Debug, Clone, PartialEq)]
pub struct MonomialGateMatrix {
    column_of_row: Vec<usize>,
    value_of_row: Vec<C64>,
}

impl MonomialGateMatrix {
    /// `column_of_row` is 0-based and must be a permutation of `0..n`.
    pub fn new(column_of_row: Vec<usize>, value_of_row: Vec<C64>) -> Result<Self> {
        let n = column_of_row.len();
        if value_of_row.len() != n {
            return Err(Error::ShapeMismatch(format!(
                "{n} columns but {} values",
                value_of_row.len()
            )));
        }
        let mut hit = vec![false; n];
        for &c in &column_of_row {
            if c >= n || std::mem::replace(&mut hit[c], true) {
                return Err(Error::ShapeMismatch("column pattern is not a permutation".into()));
            }
        }
        if let Some(p) = value_of_row.iter().position(|z| !z.is_finite()) {
            return Err(Error::NonFinite(p));
        }
        Ok(MonomialGateMatrix {
            column_of_row,
            value_of_row,
        })
    }

    pub fn n(&self) -> usize {
        self.column_of_row.len()
    }

    /// 0-based column of row `r`'s entry.
    pub fn column_of_row(&self) -> &[usize] {
        &self.column_of_row
    }

    pub fn value_of_row(&self) -> &[C64] {
        &self.value_of_row
    }

    /// `(row, column, value)` triples, 0-based, in row order.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, C64)> + '_ {
        self.column_of_row
            .iter()
            .zip(&self.value_of_row)
            .enumerate()
            .map(|(r, (&c, &v))| (r, c, v))
    }

    pub fn is_diagonal(&self) -> bool {
        self.column_of_row.iter().enumerate().all(|(r, &c)| r == c)
    }

    pub fn to_dense(&self) -> DenseMatrix {
        let n = self.n();
        let mut m = DenseMatrix::zeros(n, n);
        for (r, c, v) in self.entries() {
            m.set(r, c, v);
        }
        m
    }

    /// `self · other`, kept monomial.
    pub fn compose(&self, other: &MonomialGateMatrix) -> Result<MonomialGateMatrix> {
        if self.n() != other.n() {
            return Err(Error::ShapeMismatch(format!("{} vs {}", self.n(), other.n())));
        }
        let (cols, vals) = self
            .entries()
            .map(|(_, mid, v)| (other.column_of_row[mid], v * other.value_of_row[mid]))
            .unzip();
        Ok(MonomialGateMatrix {
            column_of_row: cols,
            value_of_row: vals,
        })
    }

    /// `self · v`.
    pub fn apply(&self, v: &[C64]) -> Result<Vec<C64>> {
        if v.len() != self.n() {
            return Err(Error::ShapeMismatch(format!(
                "{n}x{n} matrix applied to a vector of length {}",
                v.len(),
                n = self.n()
            )));
        }
        Ok(self.entries().map(|(_, c, val)| val * v[c]).collect())
    }

    /// `max_r | |v_r|² − 1 |`, which equals the max entry of `M†M − I`.
    pub fn unitarity_residual(&self) -> f64 {
        self.value_of_row
            .iter()
            .map(|z| (z.norm_sqr() - 1.0).abs())
            .fold(0.0, f64::max)
    }

    pub fn is_unitary(&self, tol: f64) -> UnitarityCheck {
        let residual = self.unitarity_residual();
        UnitarityCheck {
            unitary: residual <= tol,
            residual,
            tolerance: tol,
        }
    }
}

/// 0-based entangler pattern: first and last rows fixed, the rest reversed.
fn pattern_column(r: usize, n: usize) -> usize {
    if r == 0 || r == n - 1 {
        r
    } else {
        n - 1 - r
    }
}

fn entangler_size(a: &CoefficientTensor) -> Result<usize> {
    if a.dims().uniform_dim().is_none() {
        return Err(Error::NonUniformDims(a.dims().as_slice().to_vec()));
    }
    let n = a.dims().total();
    if n < 2 {
        return Err(Error::InvalidDims(format!(
            "entangler needs at least 2 basis states, dims {} give {n}",
            a.dims()
        )));
    }
    Ok(n)
}

/// Builds `R` from the coefficients of `a` (all subsystems of equal dimension).
///
/// Corners take `α_{1…1}` and `α_{N…N}`. Middle row `r` (1-based) sits at
/// column `n + 1 − r` and takes `α` at lex position `n + 1 − r` under
/// [`Convention::PaperMatrix`] or `r` under [`Convention::Theorem`]. For odd
/// `n` the centre row is on both diagonals and the two readings coincide.
pub fn construct_entangler(a: &CoefficientTensor, convention: Convention) -> Result<MonomialGateMatrix> {
    let n = entangler_size(a)?;
    let alpha = a.entries();
    let (cols, vals) = (0..n)
        .map(|r| {
            let c = pattern_column(r, n);
            let source = match convention {
                Convention::PaperMatrix => c,
                Convention::Theorem => r,
            };
            (c, alpha[source])
        })
        .unzip();
    Ok(MonomialGateMatrix {
        column_of_row: cols,
        value_of_row: vals,
    })
}

/// The permutation with the entangler's pattern and all values 1. It is an involution.
pub fn pattern_permutation(n: usize) -> Result<MonomialGateMatrix> {
    if n < 2 {
        return Err(Error::InvalidDims(format!("pattern permutation needs n >= 2, got {n}")));
    }
    Ok(MonomialGateMatrix {
        column_of_row: (0..n).map(|r| pattern_column(r, n)).collect(),
        value_of_row: vec![C64::new(1.0, 0.0); n],
    })
}

/// `τ = R · P`, diagonal with `τ_rr` the value on row `r` of `R`.
pub fn phase_gate(a: &CoefficientTensor, convention: Convention) -> Result<MonomialGateMatrix> {
    let r = construct_entangler(a, convention)?;
    let p = pattern_permutation(r.n())?;
    let tau = r.compose(&p)?;
    debug_assert!(tau.is_diagonal());
    Ok(tau)
}

/// `R (|ψ⟩ ⊗ ⋯ ⊗ |ψ⟩)` with `|ψ⟩ = |1⟩ + ⋯ + |N⟩`.
pub fn apply_entangler(a: &CoefficientTensor, convention: Convention) -> Result<StateVector> {
    let r = construct_entangler(a, convention)?;
    let input = uniform_product_state(a.dims());
    let out = r.apply(input.amplitudes())?;
    StateVector::new(a.dims().clone(), out)
}

/// Tolerances used by [`certify_entangler`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CertifyTolerances {
    pub unitary: f64,
    pub separability: f64,
}

impl Default for CertifyTolerances {
    fn default() -> Self {
        CertifyTolerances {
            unitary: DEFAULT_UNITARY_TOL,
            separability: DEFAULT_SEPARABILITY_TOL,
        }
    }
}

/// Independent facts about one entangler.
#[derive(Debug, Clone, PartialEq)]
pub struct EntanglerCertificate {
    pub convention: Convention,
    /// Whether `R` is a gate (all coefficients unimodular).
    pub unitary: UnitarityCheck,
    /// Separability of `R` applied to the uniform product state.
    pub entangling: SeparabilityVerdict,
    /// Separability of the coefficient tensor itself.
    pub coefficient_verdict: SeparabilityVerdict,
}

impl EntanglerCertificate {
    /// Unitary and produces an entangled output.
    pub fn is_entangling_gate(&self) -> bool {
        self.unitary.unitary && self.entangling.entangled()
    }
}

/// Reports unitarity, the output verdict and the coefficient verdict of `R`.
///
/// Under [`Convention::Theorem`] the two verdicts always coincide; under
/// [`Convention::PaperMatrix`] they can differ for `N ≥ 3`.
pub fn certify_entangler(
    a: &CoefficientTensor,
    convention: Convention,
    tol: CertifyTolerances,
) -> Result<EntanglerCertificate> {
    let r = construct_entangler(a, convention)?;
    let output = apply_entangler(a, convention)?;
    Ok(EntanglerCertificate {
        convention,
        unitary: r.is_unitary(tol.unitary),
        entangling: is_fully_separable(&output.to_tensor(), tol.separability)?,
        coefficient_verdict: is_fully_separable(a, tol.separability)?,
    })
}
