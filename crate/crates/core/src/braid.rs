//! Yang–Baxter checks and braid group representations.
//!
//! An operator `R` on `V ⊗ V` (with `dim V = N`) represents the braid group
//! `B_n` through `b_i ↦ I^{⊗(i−1)} ⊗ R ⊗ I^{⊗(n−i−1)}` whenever it is
//! invertible and satisfies the braided Yang–Baxter equation
//! `(R⊗I)(I⊗R)(R⊗I) = (I⊗R)(R⊗I)(I⊗R)`.

use crate::error::{Error, Result};
use crate::matrix::DenseMatrix;
use crate::C64;

/// Largest `N^n` for which representation matrices are built densely.
pub const REPRESENTATION_CAP: usize = 4096;

/// The phase-decorated swap `|r, s⟩ ↦ M_{sr} |s, r⟩` on `C^N ⊗ C^N`.
///
/// Entry `(lex(k,l), lex(r,s))` is `M_{kl}` when `r = l` and `s = k`, zero
/// otherwise. It is unitary and solves the braided Yang–Baxter equation
/// whenever every `M_{kl}` is unimodular.
pub fn r_from_phase_matrix(m: &DenseMatrix) -> Result<DenseMatrix> {
    if !m.is_square() {
        return Err(Error::NotSquare {
            rows: m.rows(),
            cols: m.cols(),
        });
    }
    let n = m.rows();
    let size = n.checked_mul(n).filter(|&s| s <= REPRESENTATION_CAP).ok_or(Error::TooLarge {
        what: "R matrix dimension",
        size: n.saturating_mul(n),
        cap: REPRESENTATION_CAP,
    })?;
    let mut out = DenseMatrix::zeros(size, size);
    for k in 0..n {
        for l in 0..n {
            out.set(k * n + l, l * n + k, m[(k, l)]);
        }
    }
    Ok(out)
}

/// The tensor swap `|r, s⟩ ↦ |s, r⟩` on `C^N ⊗ C^N`.
pub fn swap_gate(n: usize) -> Result<DenseMatrix> {
    r_from_phase_matrix(&DenseMatrix::from_fn(n, n, |_, _| C64::new(1.0, 0.0)))
}

/// Result of a Yang–Baxter residual computation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct YbeReport {
    pub residual: f64,
    pub passed: bool,
    pub tolerance: f64,
}

impl YbeReport {
    fn new(residual: f64, tolerance: f64) -> Self {
        YbeReport {
            residual,
            passed: residual <= tolerance,
            tolerance,
        }
    }
}

/// Checks that `r` is `N² × N²`.
fn local_dim(r: &DenseMatrix, n: usize) -> Result<()> {
    if !r.is_square() {
        return Err(Error::NotSquare {
            rows: r.rows(),
            cols: r.cols(),
        });
    }
    if n == 0 || n.checked_mul(n) != Some(r.rows()) {
        return Err(Error::ShapeMismatch(format!(
            "R is {0}x{0}, expected {1}x{1} for N = {n}",
            r.rows(),
            n.saturating_mul(n)
        )));
    }
    Ok(())
}

/// Max abs entry of `(R⊗I)(I⊗R)(R⊗I) − (I⊗R)(R⊗I)(I⊗R)` on `(C^N)^{⊗3}`.
pub fn check_yang_baxter(r: &DenseMatrix, n: usize, tol: f64) -> Result<YbeReport> {
    local_dim(r, n)?;
    let id = DenseMatrix::identity(n);
    let r12 = r.kron(&id)?;
    let r23 = id.kron(r)?;
    let lhs = r12.mat_mul(&r23)?.mat_mul(&r12)?;
    let rhs = r23.mat_mul(&r12)?.mat_mul(&r23)?;
    Ok(YbeReport::new(lhs.max_abs_diff(&rhs)?, tol))
}

/// The flat-crossing composite `P·R`, with `P` the tensor swap.
pub fn flat_crossing(r: &DenseMatrix, n: usize) -> Result<DenseMatrix> {
    local_dim(r, n)?;
    swap_gate(n)?.mat_mul(r)
}

/// Max abs entry of `R₁₂R₁₃R₂₃ − R₂₃R₁₃R₁₂` (the algebraic Yang–Baxter
/// equation). Apply it to [`flat_crossing`] of a braided solution.
pub fn check_algebraic_yang_baxter(r: &DenseMatrix, n: usize, tol: f64) -> Result<YbeReport> {
    local_dim(r, n)?;
    let id = DenseMatrix::identity(n);
    let r12 = r.kron(&id)?;
    let r23 = id.kron(r)?;
    let p23 = id.kron(&swap_gate(n)?)?;
    let r13 = p23.mat_mul(&r12)?.mat_mul(&p23)?;
    let lhs = r12.mat_mul(&r13)?.mat_mul(&r23)?;
    let rhs = r23.mat_mul(&r13)?.mat_mul(&r12)?;
    Ok(YbeReport::new(lhs.max_abs_diff(&rhs)?, tol))
}

fn representation_size(n: usize, strands: usize) -> Result<usize> {
    let exp = u32::try_from(strands).map_err(|_| Error::TooLarge {
        what: "strand count",
        size: strands,
        cap: REPRESENTATION_CAP,
    })?;
    n.checked_pow(exp)
        .filter(|&s| s <= REPRESENTATION_CAP)
        .ok_or(Error::TooLarge {
            what: "braid representation dimension",
            size: n.checked_pow(exp).unwrap_or(usize::MAX),
            cap: REPRESENTATION_CAP,
        })
}

/// `τ(b_i) = I^{⊗(i−1)} ⊗ R ⊗ I^{⊗(n−i−1)}` on `n` strands, `1 ≤ i ≤ n − 1`.
pub fn braid_generator_rep(r: &DenseMatrix, n: usize, strands: usize, i: usize) -> Result<DenseMatrix> {
    local_dim(r, n)?;
    if strands < 2 {
        return Err(Error::InvalidDims(format!("need at least 2 strands, got {strands}")));
    }
    if i < 1 || i >= strands {
        return Err(Error::BadLetter {
            letter: i32::try_from(i).unwrap_or(i32::MAX),
            max: strands - 1,
        });
    }
    representation_size(n, strands)?;
    let left = DenseMatrix::identity(n.pow((i - 1) as u32));
    let right = DenseMatrix::identity(n.pow((strands - i - 1) as u32));
    left.kron(r)?.kron(&right)
}

/// A word in the generators `b_i` and their inverses.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BraidWord {
    strands: usize,
    letters: Vec<i32>,
}

impl BraidWord {
    /// `letters` holds `i` for `b_i` and `−i` for `b_i⁻¹`.
    pub fn new(strands: usize, letters: Vec<i32>) -> Result<Self> {
        if strands < 2 {
            return Err(Error::InvalidDims(format!("need at least 2 strands, got {strands}")));
        }
        let max = strands - 1;
        for &letter in &letters {
            let g = letter.unsigned_abs() as usize;
            if g < 1 || g > max {
                return Err(Error::BadLetter { letter, max });
            }
        }
        Ok(BraidWord { strands, letters })
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[i32] {
        &self.letters
    }

    /// The word followed by its inverse (reversed, negated).
    pub fn then_inverse(&self) -> BraidWord {
        let mut letters = self.letters.clone();
        letters.extend(self.letters.iter().rev().map(|&l| -l));
        BraidWord {
            strands: self.strands,
            letters,
        }
    }
}

/// Ordered product of `τ(b_i)^{±1}` over the letters; the empty word is `I`.
pub fn evaluate_braid_word(w: &BraidWord, r: &DenseMatrix, n: usize) -> Result<DenseMatrix> {
    local_dim(r, n)?;
    let size = representation_size(n, w.strands)?;
    let r_inv = if w.letters.iter().any(|&l| l < 0) {
        Some(r.inverse()?)
    } else {
        None
    };
    let mut acc = DenseMatrix::identity(size);
    for &letter in &w.letters {
        let g = letter.unsigned_abs() as usize;
        let factor = match (letter < 0, &r_inv) {
            (true, Some(inv)) => braid_generator_rep(inv, n, w.strands, g)?,
            _ => braid_generator_rep(r, n, w.strands, g)?,
        };
        acc = acc.mat_mul(&factor)?;
    }
    Ok(acc)
}

/// Which Artin relation a check refers to. Generator indices are 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Relation {
    /// `b_i b_j = b_j b_i` for `|i − j| ≥ 2`.
    FarCommutation { i: usize, j: usize },
    /// `b_i b_{i+1} b_i = b_{i+1} b_i b_{i+1}`.
    Braid { i: usize },
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RelationCheck {
    pub relation: Relation,
    pub residual: f64,
    pub passed: bool,
}

#[derive(Debug, Clone, PartialEq)]
pub struct BraidRelationsReport {
    pub strands: usize,
    pub tolerance: f64,
    pub checks: Vec<RelationCheck>,
}

impl BraidRelationsReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn max_residual(&self, far: bool) -> f64 {
        self.checks
            .iter()
            .filter(|c| matches!(c.relation, Relation::FarCommutation { .. }) == far)
            .map(|c| c.residual)
            .fold(0.0, f64::max)
    }
}

/// Evaluates every Artin relation of `B_strands` in the representation built from `r`.
pub fn check_braid_relations(
    r: &DenseMatrix,
    n: usize,
    strands: usize,
    tol: f64,
) -> Result<BraidRelationsReport> {
    local_dim(r, n)?;
    if strands < 2 {
        return Err(Error::InvalidDims(format!("need at least 2 strands, got {strands}")));
    }
    representation_size(n, strands)?;
    let gens = (1..strands)
        .map(|i| braid_generator_rep(r, n, strands, i))
        .collect::<Result<Vec<_>>>()?;
    let mut checks = Vec::new();
    for i in 1..strands {
        for j in i + 2..strands {
            let (bi, bj) = (&gens[i - 1], &gens[j - 1]);
            let residual = bi.mat_mul(bj)?.max_abs_diff(&bj.mat_mul(bi)?)?;
            checks.push(RelationCheck {
                relation: Relation::FarCommutation { i, j },
                residual,
                passed: residual <= tol,
            });
        }
    }
    for i in 1..strands.saturating_sub(1) {
        let (b, c) = (&gens[i - 1], &gens[i]);
        let lhs = b.mat_mul(c)?.mat_mul(b)?;
        let rhs = c.mat_mul(b)?.mat_mul(c)?;
        let residual = lhs.max_abs_diff(&rhs)?;
        checks.push(RelationCheck {
            relation: Relation::Braid { i },
            residual,
            passed: residual <= tol,
        });
    }
    Ok(BraidRelationsReport {
        strands,
        tolerance: tol,
        checks,
    })
}
