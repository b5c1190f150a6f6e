//! Full separability of pure multipartite states.
//!
//! A nonzero tensor `α` is a product `α¹ ⊗ ⋯ ⊗ αᵐ` exactly when it lies on the
//! Segre variety, the common zero set of the quadrics
//!
//! ```text
//! α_k · α_l − α_{k ← l_j} · α_{l ← k_j}
//! ```
//!
//! where `k ← l_j` is `k` with its `j`-th digit replaced by `l_j`. For a fixed
//! slot `j` these are the 2×2 minors of the mode-`j` flattening, so the same
//! question can be answered a second way: every flattening must have rank 1.
//! [`is_fully_separable`] uses the quadrics, [`rank1_oracle`] the singular
//! values, and the two are kept independent so that one can check the other.

use std::collections::HashSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::index::{Dims, MultiIndex};
use crate::matrix::kron_vec;
use crate::tensor::CoefficientTensor;
use crate::C64;

/// Default threshold on the normalized quadric residual.
pub const DEFAULT_SEPARABILITY_TOL: f64 = 1e-9;

/// Default bound on `σ₂ / σ₁` in [`rank1_oracle`].
pub const DEFAULT_ORACLE_TOL: f64 = 1e-10;

/// Normalized residuals in `(MARGINAL_LOW, MARGINAL_HIGH)` are too close to the
/// threshold for the verdict to be trusted without a second look.
pub const MARGINAL_LOW: f64 = 1e-12;
pub const MARGINAL_HIGH: f64 = 1e-6;

/// The Segre embedding: the outer product of one coordinate vector per factor.
pub fn segre_map(factors: &[Vec<C64>]) -> Result<CoefficientTensor> {
    if factors.is_empty() {
        return Err(Error::InvalidDims("no factors".into()));
    }
    for (j, f) in factors.iter().enumerate() {
        if let Some(p) = f.iter().position(|z| !z.is_finite()) {
            return Err(Error::NonFinite(p));
        }
        if !f.is_empty() && f.iter().all(|z| z.norm_sqr() == 0.0) {
            return Err(Error::Zero(if j == 0 { "first factor" } else { "a factor" }));
        }
    }
    let dims = Dims::new(factors.iter().map(Vec::len).collect::<Vec<_>>())?;
    let entries = factors[1..]
        .iter()
        .fold(factors[0].clone(), |acc, f| kron_vec(&acc, f));
    CoefficientTensor::new(dims, entries)
}

/// One quadric `α_k α_l − α_{k←l_j} α_{l←k_j}`.
///
/// Stored canonically: `k_j < l_j` and the remaining digits of `k` precede
/// those of `l` lexicographically.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct QuadricGenerator {
    slot: usize,
    k: MultiIndex,
    l: MultiIndex,
}

impl QuadricGenerator {
    /// Validates and canonicalizes. Errors on trivial generators (equal digit
    /// at `slot`, or equal remaining digits), which vanish identically.
    pub fn new(slot: usize, k: MultiIndex, l: MultiIndex) -> Result<Self> {
        let order = k.dims().order();
        if k.dims() != l.dims() {
            return Err(Error::ShapeMismatch("k and l have different dims".into()));
        }
        if slot < 1 || slot > order {
            return Err(Error::SlotOutOfRange { slot, order });
        }
        let (kj, lj) = (k.digits()[slot - 1], l.digits()[slot - 1]);
        let rest_k = k.with_digit(slot, 1);
        let rest_l = l.with_digit(slot, 1);
        if kj == lj || rest_k == rest_l {
            return Err(Error::InvalidDims(
                "trivial generator: indices must differ at the slot and elsewhere".into(),
            ));
        }
        // orient so that k_j < l_j, then order the rests by swapping digit j
        let (k, l) = if kj < lj { (k, l) } else { (l, k) };
        let (k, l) = if rest_k_before(&k, &l, slot) {
            (k, l)
        } else {
            let (kj, lj) = (k.digits()[slot - 1], l.digits()[slot - 1]);
            (l.with_digit(slot, kj), k.with_digit(slot, lj))
        };
        Ok(QuadricGenerator { slot, k, l })
    }

    /// 1-based slot `j`.
    pub fn slot(&self) -> usize {
        self.slot
    }

    pub fn k(&self) -> &MultiIndex {
        &self.k
    }

    pub fn l(&self) -> &MultiIndex {
        &self.l
    }

    /// The exchanged pair `(k ← l_j, l ← k_j)`.
    pub fn exchanged(&self) -> (MultiIndex, MultiIndex) {
        let j = self.slot;
        (
            self.k.with_digit(j, self.l.digits()[j - 1]),
            self.l.with_digit(j, self.k.digits()[j - 1]),
        )
    }

    /// The unordered pair of unordered monomials, as lex offsets. Two
    /// generators with the same key are the same polynomial up to sign.
    fn polynomial_key(&self) -> ((usize, usize), (usize, usize)) {
        let (kx, lx) = self.exchanged();
        let a = ordered(self.k.offset(), self.l.offset());
        let b = ordered(kx.offset(), lx.offset());
        if a <= b {
            (a, b)
        } else {
            (b, a)
        }
    }
}

impl fmt::Display for QuadricGenerator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "j={} k={} l={}", self.slot, self.k, self.l)
    }
}

fn ordered(a: usize, b: usize) -> (usize, usize) {
    if a <= b {
        (a, b)
    } else {
        (b, a)
    }
}

fn rest_k_before(k: &MultiIndex, l: &MultiIndex, slot: usize) -> bool {
    k.with_digit(slot, 1).offset() < l.with_digit(slot, 1).offset()
}

/// Every distinct quadric generator for `dims`, in a fixed order: by slot,
/// then by the pair `(k_j, l_j)`, then by the pair of remaining digits.
///
/// A polynomial that arises from more than one slot is emitted once, at its
/// first occurrence. For two factors the slot-2 quadrics repeat the slot-1
/// ones, so dims `(N, N)` yield exactly the `C(N,2)²` minors of the `N×N`
/// coefficient matrix.
pub fn quadric_generators(dims: &Dims) -> Result<Vec<QuadricGenerator>> {
    if dims.order() < 2 {
        return Err(Error::InvalidDims(
            "quadric generators need at least two subsystems".into(),
        ));
    }
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for slot in 1..=dims.order() {
        let n = dims.as_slice()[slot - 1];
        let rest_total = dims.total() / n;
        for a in 1..=n {
            for b in a + 1..=n {
                for r1 in 0..rest_total {
                    for r2 in r1 + 1..rest_total {
                        let k = MultiIndex::from_offset(insert_offset(dims, slot, a, r1), dims);
                        let l = MultiIndex::from_offset(insert_offset(dims, slot, b, r2), dims);
                        let g = QuadricGenerator { slot, k, l };
                        if seen.insert(g.polynomial_key()) {
                            out.push(g);
                        }
                    }
                }
            }
        }
    }
    Ok(out)
}

/// Lex offset of the multi-index whose digit at `slot` is `digit` and whose
/// remaining digits sit at position `rest_offset` among the rest.
fn insert_offset(dims: &Dims, slot: usize, digit: usize, rest_offset: usize) -> usize {
    let d = dims.as_slice();
    // weight of slot = product of dims after it; split rest offset around slot
    let after: usize = d[slot..].iter().product();
    let high = rest_offset / after;
    let low = rest_offset % after;
    (high * d[slot - 1] + (digit - 1)) * after + low
}

/// `α_k α_l − α_{k←l_j} α_{l←k_j}`.
pub fn evaluate_quadric(g: &QuadricGenerator, a: &CoefficientTensor) -> Result<C64> {
    if g.k.dims() != a.dims() {
        return Err(Error::ShapeMismatch(format!(
            "generator dims {} vs tensor dims {}",
            g.k.dims(),
            a.dims()
        )));
    }
    let (kx, lx) = g.exchanged();
    let e = a.entries();
    Ok(e[g.k.offset()] * e[g.l.offset()] - e[kx.offset()] * e[lx.offset()])
}

/// Result of [`is_fully_separable`].
#[derive(Debug, Clone, PartialEq)]
pub struct SeparabilityVerdict {
    pub separable: bool,
    /// Largest `|quadric|` after normalizing the max-modulus entry to 1.
    pub max_violation: f64,
    /// The generator achieving `max_violation`, present iff entangled.
    pub witness: Option<QuadricGenerator>,
    pub tolerance_used: f64,
}

impl SeparabilityVerdict {
    pub fn entangled(&self) -> bool {
        !self.separable
    }

    /// True when `max_violation` falls strictly between [`MARGINAL_LOW`] and
    /// [`MARGINAL_HIGH`].
    pub fn is_marginal(&self) -> bool {
        self.max_violation > MARGINAL_LOW && self.max_violation < MARGINAL_HIGH
    }
}

/// Decides full separability by evaluating every quadric generator.
///
/// The tensor is first divided by its first max-modulus entry; the state is
/// separable iff the largest `|quadric|` is at most `tol`. Ties for the
/// largest residual go to the earliest generator.
pub fn is_fully_separable(a: &CoefficientTensor, tol: f64) -> Result<SeparabilityVerdict> {
    let normalized = a.normalized()?;
    if a.dims().order() < 2 {
        return Ok(SeparabilityVerdict {
            separable: true,
            max_violation: 0.0,
            witness: None,
            tolerance_used: tol,
        });
    }
    let mut worst: Option<(f64, QuadricGenerator)> = None;
    for g in quadric_generators(a.dims())? {
        let r = evaluate_quadric(&g, &normalized)?.norm();
        if worst.as_ref().is_none_or(|(w, _)| r > *w) {
            worst = Some((r, g));
        }
    }
    let (max_violation, witness) = worst.map_or((0.0, None), |(r, g)| (r, Some(g)));
    let separable = max_violation <= tol;
    Ok(SeparabilityVerdict {
        separable,
        max_violation,
        witness: if separable { None } else { witness },
        tolerance_used: tol,
    })
}

/// `σ₂ / σ₁` of every mode flattening (0 where the flattening has one row or column).
pub fn flattening_ratios(a: &CoefficientTensor) -> Result<Vec<f64>> {
    if a.is_zero() {
        return Err(Error::Zero("coefficient tensor"));
    }
    (1..=a.dims().order())
        .map(|slot| {
            let sv = a.flatten_mode(slot)?.singular_values();
            Ok(match sv.as_slice() {
                [s1, s2, ..] => s2 / s1,
                _ => 0.0,
            })
        })
        .collect()
}

/// Independent separability test: true iff every mode flattening has
/// `σ₂ ≤ tol · σ₁`.
pub fn rank1_oracle(a: &CoefficientTensor, tol: f64) -> Result<bool> {
    Ok(flattening_ratios(a)?.into_iter().all(|r| r <= tol))
}
