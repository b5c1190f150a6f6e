//! Subsystem dimensions and multi-indices.
//!
//! Basis states of `C^{N_1} ⊗ ⋯ ⊗ C^{N_m}` are labelled by digit tuples
//! `(k_1, …, k_m)` with `1 ≤ k_j ≤ N_j`. They are ordered lexicographically
//! with the first digit most significant, so for dims `(3, 3)` the order is
//! `11, 12, 13, 21, …, 33`.

use std::fmt;

use crate::error::{Error, Result};

/// Largest total dimension `Π N_j` accepted anywhere in the crate.
pub const MAX_TOTAL_DIM: usize = 10_000;

/// Subsystem dimensions `(N_1, …, N_m)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Dims(Vec<usize>);

impl Dims {
    pub fn new(dims: impl Into<Vec<usize>>) -> Result<Self> {
        let dims = dims.into();
        if dims.is_empty() {
            return Err(Error::InvalidDims("no subsystems".into()));
        }
        if let Some(slot) = dims.iter().position(|&d| d == 0) {
            return Err(Error::InvalidDims(format!("slot {} has dimension 0", slot + 1)));
        }
        let total = dims
            .iter()
            .try_fold(1usize, |acc, &d| acc.checked_mul(d))
            .filter(|&t| t <= MAX_TOTAL_DIM);
        match total {
            Some(_) => Ok(Dims(dims)),
            None => Err(Error::TooLarge {
                what: "state space",
                size: dims.iter().fold(1usize, |a, &d| a.saturating_mul(d)),
                cap: MAX_TOTAL_DIM,
            }),
        }
    }

    /// `m` copies of `n`.
    pub fn uniform(n: usize, m: usize) -> Result<Self> {
        Dims::new(vec![n; m])
    }

    /// Number of subsystems `m`.
    pub fn order(&self) -> usize {
        self.0.len()
    }

    /// `Π N_j`.
    pub fn total(&self) -> usize {
        self.0.iter().product()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    /// `Some(N)` when every subsystem has dimension `N`.
    pub fn uniform_dim(&self) -> Option<usize> {
        let first = self.0[0];
        self.0.iter().all(|&d| d == first).then_some(first)
    }

    /// Dimensions with slot `slot` (1-based) removed.
    pub(crate) fn without(&self, slot: usize) -> Vec<usize> {
        self.0
            .iter()
            .enumerate()
            .filter(|&(j, _)| j + 1 != slot)
            .map(|(_, &d)| d)
            .collect()
    }

    /// 0-based lexicographic offset of 1-based digits. Digits are assumed valid.
    pub(crate) fn offset_of(&self, digits: &[usize]) -> usize {
        digits
            .iter()
            .zip(&self.0)
            .fold(0, |acc, (&k, &n)| acc * n + (k - 1))
    }

    /// 1-based digits of a 0-based offset. The offset is assumed valid.
    pub(crate) fn digits_of(&self, mut offset: usize) -> Vec<usize> {
        let mut digits = vec![0; self.0.len()];
        for (slot, &n) in self.0.iter().enumerate().rev() {
            digits[slot] = offset % n + 1;
            offset /= n;
        }
        digits
    }

    /// Iterates every multi-index in lexicographic order.
    pub fn indices(&self) -> impl Iterator<Item = MultiIndex> + '_ {
        (0..self.total()).map(move |o| MultiIndex {
            digits: self.digits_of(o),
            dims: self.clone(),
        })
    }
}

impl fmt::Display for Dims {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|d| d.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// A basis label `(k_1, …, k_m)` with 1-based digits.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MultiIndex {
    digits: Vec<usize>,
    dims: Dims,
}

impl MultiIndex {
    pub fn new(digits: impl Into<Vec<usize>>, dims: &Dims) -> Result<Self> {
        let digits = digits.into();
        if digits.len() != dims.order() {
            return Err(Error::ArityMismatch {
                expected: dims.order(),
                got: digits.len(),
            });
        }
        for (j, (&k, &n)) in digits.iter().zip(dims.as_slice()).enumerate() {
            if k < 1 || k > n {
                return Err(Error::DigitOutOfRange {
                    slot: j + 1,
                    digit: k,
                    dim: n,
                });
            }
        }
        Ok(MultiIndex {
            digits,
            dims: dims.clone(),
        })
    }

    /// Inverse of [`MultiIndex::lex_index`]: the multi-index at 1-based position `r`.
    pub fn from_lex(r: usize, dims: &Dims) -> Result<Self> {
        let len = dims.total();
        if r < 1 || r > len {
            return Err(Error::IndexOutOfRange { index: r, len });
        }
        Ok(MultiIndex {
            digits: dims.digits_of(r - 1),
            dims: dims.clone(),
        })
    }

    pub(crate) fn from_offset(offset: usize, dims: &Dims) -> Self {
        debug_assert!(offset < dims.total());
        MultiIndex {
            digits: dims.digits_of(offset),
            dims: dims.clone(),
        }
    }

    pub fn digits(&self) -> &[usize] {
        &self.digits
    }

    pub fn dims(&self) -> &Dims {
        &self.dims
    }

    /// 1-based position `1 + Σ_j (k_j − 1)·Π_{j'>j} N_{j'}`.
    pub fn lex_index(&self) -> usize {
        self.offset() + 1
    }

    /// 0-based position, for indexing flat storage.
    pub fn offset(&self) -> usize {
        self.dims.offset_of(&self.digits)
    }

    /// Reflects every digit: `k_j ↦ N_j + 1 − k_j`.
    ///
    /// `lex_index(complement(k)) = Π N_j + 1 − lex_index(k)`, which is what
    /// places coefficients on the antidiagonal.
    pub fn complement(&self) -> MultiIndex {
        let digits = self
            .digits
            .iter()
            .zip(self.dims.as_slice())
            .map(|(&k, &n)| n + 1 - k)
            .collect();
        MultiIndex {
            digits,
            dims: self.dims.clone(),
        }
    }

    /// Copy with digit at `slot` (1-based) replaced. The digit must be valid.
    pub(crate) fn with_digit(&self, slot: usize, digit: usize) -> MultiIndex {
        let mut out = self.clone();
        out.digits[slot - 1] = digit;
        out
    }
}

impl fmt::Display for MultiIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.digits.iter().map(|d| d.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}
