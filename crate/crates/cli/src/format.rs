//! JSON wire formats.
//!
//! Complex numbers are `[re, im]` pairs. Multi-indices, rows and columns are
//! 1-based; flat entry arrays are positional in lex order.

use braidgate::{
    CoefficientTensor, DenseMatrix, Dims, MonomialGateMatrix, QuadricGenerator, C64,
};
use serde::{Deserialize, Serialize};

pub type Pair = [f64; 2];

pub fn pair(z: C64) -> Pair {
    [z.re, z.im]
}

fn complex(p: &Pair) -> C64 {
    C64::new(p[0], p[1])
}

/// `{"dims": [...], "entries": [[re, im], ...]}`
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TensorFile {
    pub dims: Vec<usize>,
    pub entries: Vec<Pair>,
}

impl TensorFile {
    pub fn from_tensor(t: &CoefficientTensor) -> Self {
        TensorFile {
            dims: t.dims().as_slice().to_vec(),
            entries: t.entries().iter().copied().map(pair).collect(),
        }
    }

    pub fn to_tensor(&self) -> braidgate::Result<CoefficientTensor> {
        let dims = Dims::new(self.dims.clone())?;
        CoefficientTensor::new(dims, self.entries.iter().map(complex).collect())
    }
}

/// A dense matrix as nested rows: `{"rows": [[[re, im], ...], ...]}`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DenseFile {
    pub rows: Vec<Vec<Pair>>,
}

impl DenseFile {
    pub fn to_matrix(&self) -> Result<DenseMatrix, String> {
        let n_rows = self.rows.len();
        let n_cols = self.rows.first().map_or(0, Vec::len);
        if let Some(r) = self.rows.iter().position(|row| row.len() != n_cols) {
            return Err(format!("row {} has {} entries, expected {n_cols}", r + 1, self.rows[r].len()));
        }
        let data = self.rows.iter().flatten().map(complex).collect();
        DenseMatrix::new(n_rows, n_cols, data).map_err(|e| e.to_string())
    }
}

/// Either input file shape accepted by `ybe` and `braid`.
#[derive(Debug, Clone, PartialEq, Deserialize)]
#[serde(untagged)]
pub enum MatrixOrTensor {
    Tensor(TensorFile),
    Dense(DenseFile),
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MonomialEntry {
    pub row: usize,
    pub col: usize,
    pub value: Pair,
}

/// Sparse form of a monomial matrix: `{"n": 9, "rows": [{"row", "col", "value"}, ...]}`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MonomialFile {
    pub n: usize,
    pub rows: Vec<MonomialEntry>,
}

impl MonomialFile {
    pub fn from_matrix(m: &MonomialGateMatrix) -> Self {
        MonomialFile {
            n: m.n(),
            rows: m
                .entries()
                .map(|(r, c, v)| MonomialEntry {
                    row: r + 1,
                    col: c + 1,
                    value: pair(v),
                })
                .collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GeneratorJson {
    pub j: usize,
    pub k: Vec<usize>,
    pub l: Vec<usize>,
}

impl From<&QuadricGenerator> for GeneratorJson {
    fn from(g: &QuadricGenerator) -> Self {
        GeneratorJson {
            j: g.slot(),
            k: g.k().digits().to_vec(),
            l: g.l().digits().to_vec(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ConstructOutput {
    pub convention: String,
    pub dims: Vec<usize>,
    pub entangler: MonomialFile,
    pub permutation: MonomialFile,
    pub phase_gate: MonomialFile,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SeparabilityOutput {
    pub dims: Vec<usize>,
    pub separable: bool,
    pub max_violation: f64,
    pub tolerance: f64,
    pub witness: Option<GeneratorJson>,
    pub oracle_agrees: bool,
    /// `σ₂/σ₁` of each mode flattening.
    pub oracle_ratios: Vec<f64>,
    pub marginal: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GeneratorsOutput {
    pub dims: Vec<usize>,
    pub count: usize,
    pub generators: Vec<GeneratorJson>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct YbeOutput {
    pub n: usize,
    pub form: String,
    pub residual: f64,
    pub passed: bool,
    pub tolerance: f64,
    pub unitary_residual: f64,
    /// Algebraic Yang–Baxter residual of the flat-crossing composite `P·R`.
    pub flat_crossing_residual: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RelationJson {
    pub relation: String,
    pub i: usize,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub j: Option<usize>,
    pub residual: f64,
    pub passed: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BraidOutput {
    pub n: usize,
    pub strands: usize,
    pub form: String,
    pub tolerance: f64,
    pub passed: bool,
    pub relations: Vec<RelationJson>,
}
