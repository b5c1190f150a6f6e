use std::fmt;
use std::fs;
use std::io::Write;

use braidgate::segre::flattening_ratios;
use braidgate::{
    apply_entangler, check_algebraic_yang_baxter, check_braid_relations, check_yang_baxter,
    construct_entangler, flat_crossing, is_fully_separable, pattern_permutation, phase_gate,
    quadric_generators, r_from_phase_matrix, random_phase_matrix, random_phases, swap_gate,
    CoefficientTensor, Convention, DenseMatrix, Dims, Relation, DEFAULT_ORACLE_TOL,
};
use serde::Serialize;

use crate::format::{
    BraidOutput, ConstructOutput, GeneratorJson, GeneratorsOutput, MatrixOrTensor, MonomialFile,
    RelationJson, SeparabilityOutput, TensorFile, YbeOutput,
};
use crate::{BraidArgs, Common, Form, GeneratorArgs, OperatorArgs, RandomArgs, Source, TensorArgs};

/// An input or usage problem; always exit code 2.
#[derive(Debug)]
pub struct InputError(String);

impl fmt::Display for InputError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl From<braidgate::Error> for InputError {
    fn from(e: braidgate::Error) -> Self {
        InputError(e.to_string())
    }
}

impl From<String> for InputError {
    fn from(s: String) -> Self {
        InputError(s)
    }
}

impl From<&str> for InputError {
    fn from(s: &str) -> Self {
        InputError(s.to_owned())
    }
}

type CmdResult = Result<u8, InputError>;

fn emit(common: &Common, value: &impl Serialize) -> Result<(), InputError> {
    let mut text = serde_json::to_string_pretty(value).map_err(|e| format!("serializing output: {e}"))?;
    text.push('\n');
    match &common.output {
        Some(path) => fs::write(path, text).map_err(|e| format!("writing {}: {e}", path.display()))?,
        None => std::io::stdout()
            .write_all(text.as_bytes())
            .map_err(|e| format!("writing stdout: {e}"))?,
    }
    Ok(())
}

fn check_tol(tol: f64) -> Result<(), InputError> {
    if tol.is_finite() && tol > 0.0 {
        Ok(())
    } else {
        Err(format!("tolerance must be a positive finite number, got {tol}").into())
    }
}

fn read_json<T: serde::de::DeserializeOwned>(source: &Source) -> Result<T, InputError> {
    let path = source.input.as_ref().ok_or("missing --input")?;
    let text = fs::read_to_string(path).map_err(|e| format!("reading {}: {e}", path.display()))?;
    serde_json::from_str(&text).map_err(|e| format!("parsing {}: {e}", path.display()).into())
}

fn seeded_dims(source: &Source) -> Result<(Dims, u64), InputError> {
    let dims = source.dims.clone().ok_or("--random-phases needs --dims")?;
    let seed = source.seed.ok_or("--random-phases needs an explicit --seed")?;
    Ok((Dims::new(dims)?, seed))
}

fn load_tensor(source: &Source) -> Result<CoefficientTensor, InputError> {
    match (&source.input, source.phases) {
        (Some(_), true) => Err("use either --input or --random-phases, not both".into()),
        (Some(_), false) => {
            let file: TensorFile = read_json(source)?;
            Ok(file.to_tensor()?)
        }
        (None, true) => {
            let (dims, seed) = seeded_dims(source)?;
            Ok(random_phases(&dims, seed))
        }
        (None, false) => Err("need --input FILE or --dims with --random-phases --seed".into()),
    }
}

pub fn construct(args: &TensorArgs) -> CmdResult {
    let a = load_tensor(&args.source)?;
    let convention = Convention::from(args.convention);
    let r = construct_entangler(&a, convention)?;
    let out = ConstructOutput {
        convention: convention.to_string(),
        dims: a.dims().as_slice().to_vec(),
        entangler: MonomialFile::from_matrix(&r),
        permutation: MonomialFile::from_matrix(&pattern_permutation(r.n())?),
        phase_gate: MonomialFile::from_matrix(&phase_gate(&a, convention)?),
    };
    emit(&args.common, &out)?;
    Ok(0)
}

pub fn entangle(args: &TensorArgs) -> CmdResult {
    let a = load_tensor(&args.source)?;
    let out = apply_entangler(&a, args.convention.into())?;
    emit(&args.common, &TensorFile::from_tensor(&out.to_tensor()))?;
    Ok(0)
}

/// Residuals inside this band are too close to the threshold for the two
/// tests to be expected to agree.
fn marginal_band(tol: f64) -> (f64, f64) {
    (
        braidgate::segre::MARGINAL_LOW.min(tol * 1e-3),
        braidgate::segre::MARGINAL_HIGH.max(tol * 1e3),
    )
}

pub fn separability(args: &TensorArgs) -> CmdResult {
    check_tol(args.tol)?;
    let a = load_tensor(&args.source)?;
    let verdict = is_fully_separable(&a, args.tol)?;
    let ratios = flattening_ratios(&a)?;
    let oracle = ratios.iter().all(|&r| r <= DEFAULT_ORACLE_TOL);
    let (lo, hi) = marginal_band(args.tol);
    let marginal = verdict.max_violation > lo && verdict.max_violation < hi;
    let agrees = oracle == verdict.separable;
    let out = SeparabilityOutput {
        dims: a.dims().as_slice().to_vec(),
        separable: verdict.separable,
        max_violation: verdict.max_violation,
        tolerance: verdict.tolerance_used,
        witness: verdict.witness.as_ref().map(GeneratorJson::from),
        oracle_agrees: agrees,
        oracle_ratios: ratios,
        marginal,
    };
    emit(&args.common, &out)?;
    if marginal {
        eprintln!(
            "note: residual {:e} is marginal (between {lo:e} and {hi:e}); verdict uses the hard threshold {:e}",
            verdict.max_violation, args.tol
        );
    }
    if !agrees && !marginal {
        eprintln!("error: rank-1 oracle disagrees with the quadric verdict");
        return Ok(1);
    }
    Ok(0)
}

pub fn generators(args: &GeneratorArgs) -> CmdResult {
    let dims = Dims::new(args.dims.clone())?;
    let gens = quadric_generators(&dims)?;
    let out = GeneratorsOutput {
        dims: args.dims.clone(),
        count: gens.len(),
        generators: gens.iter().map(GeneratorJson::from).collect(),
    };
    emit(&args.common, &out)?;
    Ok(0)
}

fn two_party_dim(dims: &[usize]) -> Result<usize, InputError> {
    match dims {
        [n] => Ok(*n),
        [a, b] if a == b => Ok(*a),
        _ => Err(format!("expected --dims N or N,N, got {dims:?}").into()),
    }
}

fn isqrt_exact(size: usize) -> Option<usize> {
    let n = (size as f64).sqrt().round() as usize;
    (n * n == size).then_some(n)
}

fn dense_r(m: DenseMatrix) -> Result<(DenseMatrix, usize), InputError> {
    let n = isqrt_exact(m.rows())
        .filter(|_| m.is_square())
        .ok_or_else(|| format!("R must be N²×N², got {}x{}", m.rows(), m.cols()))?;
    Ok((m, n))
}

/// Builds the operator R, its local dimension N and the form actually used.
fn load_operator(args: &OperatorArgs) -> Result<(DenseMatrix, usize, Form), InputError> {
    let source = &args.source;
    if source.input.is_some() && source.phases {
        return Err("use either --input or --random-phases, not both".into());
    }
    let file = match &source.input {
        Some(_) => Some(read_json::<MatrixOrTensor>(source)?),
        None => None,
    };
    let form = args.form.unwrap_or(match file {
        Some(MatrixOrTensor::Dense(_)) => Form::Matrix,
        _ => Form::Delta,
    });

    let phases = match (form, file) {
        (Form::Swap, None) if !source.phases => {
            let n = two_party_dim(source.dims.as_deref().ok_or("--form swap needs --dims")?)?;
            return Ok((swap_gate(n)?, n, form));
        }
        (Form::Swap, _) => return Err("--form swap takes only --dims".into()),
        (Form::Matrix, Some(MatrixOrTensor::Dense(d))) => {
            let (m, n) = dense_r(d.to_matrix()?)?;
            return Ok((m, n, form));
        }
        (Form::Matrix, _) => return Err("--form matrix needs a {\"rows\": ...} file".into()),
        (_, Some(MatrixOrTensor::Tensor(t))) => t.to_tensor()?,
        (Form::Delta, Some(MatrixOrTensor::Dense(d))) => {
            let m = d.to_matrix()?;
            if !m.is_square() {
                return Err("phase matrix must be square".into());
            }
            CoefficientTensor::new(Dims::new(vec![m.rows(), m.cols()])?, m.as_slice().to_vec())?
        }
        (_, Some(MatrixOrTensor::Dense(_))) => return Err("--form entangler needs a tensor file".into()),
        (_, None) if source.phases => {
            let (dims, seed) = seeded_dims(source)?;
            let n = two_party_dim(dims.as_slice())?;
            if form == Form::Delta {
                let m = random_phase_matrix(n, seed)?;
                CoefficientTensor::new(Dims::uniform(n, 2)?, m.as_slice().to_vec())?
            } else {
                random_phases(&Dims::uniform(n, 2)?, seed)
            }
        }
        (_, None) => return Err("need --input FILE, --random-phases with --dims and --seed, or --form swap".into()),
    };

    let n = match phases.dims().as_slice() {
        [a, b] if a == b => *a,
        dims => return Err(format!("R acts on two equal subsystems; got dims {dims:?}").into()),
    };
    let r = if form == Form::Delta {
        r_from_phase_matrix(&DenseMatrix::new(n, n, phases.entries().to_vec())?)?
    } else {
        construct_entangler(&phases, args.convention.into())?.to_dense()
    };
    Ok((r, n, form))
}

fn form_name(form: Form) -> &'static str {
    match form {
        Form::Delta => "delta",
        Form::Entangler => "entangler",
        Form::Swap => "swap",
        Form::Matrix => "matrix",
    }
}

pub fn ybe(args: &OperatorArgs) -> CmdResult {
    check_tol(args.tol)?;
    let (r, n, form) = load_operator(args)?;
    let report = check_yang_baxter(&r, n, args.tol)?;
    let unitary = r.is_unitary(args.tol)?;
    let flat = check_algebraic_yang_baxter(&flat_crossing(&r, n)?, n, args.tol)?;
    let out = YbeOutput {
        n,
        form: form_name(form).into(),
        residual: report.residual,
        passed: report.passed,
        tolerance: report.tolerance,
        unitary_residual: unitary.residual,
        flat_crossing_residual: flat.residual,
    };
    emit(&args.common, &out)?;
    Ok(if report.passed { 0 } else { 1 })
}

pub fn braid(args: &BraidArgs) -> CmdResult {
    let op = &args.operator;
    check_tol(op.tol)?;
    let (r, n, form) = load_operator(op)?;
    let report = check_braid_relations(&r, n, args.strands, op.tol)?;
    let relations = report
        .checks
        .iter()
        .map(|c| {
            let (relation, i, j) = match c.relation {
                Relation::FarCommutation { i, j } => ("far_commutation", i, Some(j)),
                Relation::Braid { i } => ("braid", i, None),
            };
            RelationJson {
                relation: relation.into(),
                i,
                j,
                residual: c.residual,
                passed: c.passed,
            }
        })
        .collect();
    let out = BraidOutput {
        n,
        strands: args.strands,
        form: form_name(form).into(),
        tolerance: op.tol,
        passed: report.passed(),
        relations,
    };
    emit(&op.common, &out)?;
    Ok(if report.passed() { 0 } else { 1 })
}

pub fn random(args: &RandomArgs) -> CmdResult {
    let dims = Dims::new(args.dims.clone())?;
    emit(&args.common, &TensorFile::from_tensor(&random_phases(&dims, args.seed)))?;
    Ok(0)
}
