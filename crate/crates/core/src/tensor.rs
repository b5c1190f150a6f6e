//! Coefficient tensors (box-shape arrays) and state vectors.

use crate::error::{Error, Result};
use crate::index::{Dims, MultiIndex};
use crate::matrix::DenseMatrix;
use crate::C64;

/// The coefficients `α_{k_1…k_m}` of a pure state, stored flat in
/// lexicographic order (first index most significant).
#[derive(Debug, Clone, PartialEq)]
pub struct CoefficientTensor {
    dims: Dims,
    entries: Vec<C64>,
}

impl CoefficientTensor {
    pub fn new(dims: Dims, entries: Vec<C64>) -> Result<Self> {
        if entries.len() != dims.total() {
            return Err(Error::ShapeMismatch(format!(
                "{} entries for dims {dims} (expected {})",
                entries.len(),
                dims.total()
            )));
        }
        if let Some(p) = entries.iter().position(|z| !z.is_finite()) {
            return Err(Error::NonFinite(p));
        }
        Ok(CoefficientTensor { dims, entries })
    }

    /// Real-valued entries, for tests and examples.
    pub fn from_real(dims: &[usize], entries: &[f64]) -> Result<Self> {
        let dims = Dims::new(dims.to_vec())?;
        CoefficientTensor::new(dims, entries.iter().map(|&x| C64::new(x, 0.0)).collect())
    }

    pub fn dims(&self) -> &Dims {
        &self.dims
    }

    pub fn entries(&self) -> &[C64] {
        &self.entries
    }

    pub fn into_entries(self) -> Vec<C64> {
        self.entries
    }

    /// `α_k`. Panics if `k` belongs to different dims.
    pub fn get(&self, k: &MultiIndex) -> C64 {
        assert_eq!(k.dims(), &self.dims, "multi-index dims differ from tensor dims");
        self.entries[k.offset()]
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|z| z.norm_sqr() == 0.0)
    }

    /// Largest `|α_k|`.
    pub fn max_modulus(&self) -> f64 {
        self.entries.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    pub fn scale(&self, factor: C64) -> CoefficientTensor {
        CoefficientTensor {
            dims: self.dims.clone(),
            entries: self.entries.iter().map(|&z| z * factor).collect(),
        }
    }

    /// Divides by the first entry of maximal modulus, so that entry becomes exactly 1.
    ///
    /// Dividing by the entry itself rather than its modulus makes the result
    /// invariant under any nonzero complex rescaling of the input.
    pub fn normalized(&self) -> Result<CoefficientTensor> {
        let pivot = self
            .entries
            .iter()
            .copied()
            .fold(None::<C64>, |best, z| match best {
                Some(b) if b.norm() >= z.norm() => Some(b),
                _ => Some(z),
            })
            .filter(|z| z.norm_sqr() != 0.0)
            .ok_or(Error::Zero("coefficient tensor"))?;
        let entries = self.entries.iter().map(|&z| z / pivot).collect();
        Ok(CoefficientTensor {
            dims: self.dims.clone(),
            entries,
        })
    }

    /// Mode-`slot` matricization (slot is 1-based).
    ///
    /// Row = digit at `slot`, column = lex position of the remaining digits.
    /// Every quadric generator acting on `slot` is a 2×2 minor of this matrix.
    pub fn flatten_mode(&self, slot: usize) -> Result<DenseMatrix> {
        let order = self.dims.order();
        if slot < 1 || slot > order {
            return Err(Error::SlotOutOfRange { slot, order });
        }
        let rows = self.dims.as_slice()[slot - 1];
        let rest = Dims::new(self.dims.without(slot)).unwrap_or_else(|_| {
            // m = 1: a single column
            Dims::new(vec![1]).expect("unit dims")
        });
        let cols = self.dims.total() / rows;
        let mut out = DenseMatrix::zeros(rows, cols);
        for (offset, &value) in self.entries.iter().enumerate() {
            let digits = self.dims.digits_of(offset);
            let row = digits[slot - 1] - 1;
            let col = if order == 1 {
                0
            } else {
                let rest_digits: Vec<usize> = digits
                    .iter()
                    .enumerate()
                    .filter(|&(j, _)| j + 1 != slot)
                    .map(|(_, &k)| k)
                    .collect();
                rest.offset_of(&rest_digits)
            };
            out.set(row, col, value);
        }
        Ok(out)
    }
}

/// Amplitudes of a (not necessarily normalized) pure state in the product basis.
#[derive(Debug, Clone, PartialEq)]
pub struct StateVector {
    dims: Dims,
    amplitudes: Vec<C64>,
}

impl StateVector {
    pub fn new(dims: Dims, amplitudes: Vec<C64>) -> Result<Self> {
        let t = CoefficientTensor::new(dims, amplitudes)?;
        Ok(t.into())
    }

    pub fn dims(&self) -> &Dims {
        &self.dims
    }

    pub fn amplitudes(&self) -> &[C64] {
        &self.amplitudes
    }

    /// The amplitudes viewed as a coefficient tensor.
    pub fn to_tensor(&self) -> CoefficientTensor {
        CoefficientTensor {
            dims: self.dims.clone(),
            entries: self.amplitudes.clone(),
        }
    }
}

impl From<CoefficientTensor> for StateVector {
    fn from(t: CoefficientTensor) -> Self {
        StateVector {
            dims: t.dims,
            amplitudes: t.entries,
        }
    }
}

impl From<StateVector> for CoefficientTensor {
    fn from(s: StateVector) -> Self {
        CoefficientTensor {
            dims: s.dims,
            entries: s.amplitudes,
        }
    }
}

/// `(|1⟩ + ⋯ + |N_1⟩) ⊗ ⋯ ⊗ (|1⟩ + ⋯ + |N_m⟩)`, left unnormalized: every amplitude is 1.
pub fn uniform_product_state(dims: &Dims) -> StateVector {
    StateVector {
        dims: dims.clone(),
        amplitudes: vec![C64::new(1.0, 0.0); dims.total()],
    }
}
