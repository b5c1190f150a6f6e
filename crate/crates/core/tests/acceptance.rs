//! Acceptance checks. Runs every criterion, prints one PASS/FAIL line each,
//! and exits non-zero if any failed.

use std::process::ExitCode;

use braidgate::{
    apply_entangler, certify_entangler, check_braid_relations, check_yang_baxter,
    construct_entangler, evaluate_quadric, is_fully_separable, pattern_permutation, phase_gate,
    quadric_generators, r_from_phase_matrix, random_phase_matrix, random_phases, rank1_oracle,
    segre_map, C64, CertifyTolerances, CoefficientTensor, Convention, DenseMatrix, Dims,
    MultiIndex, DEFAULT_ORACLE_TOL, DEFAULT_SEPARABILITY_TOL,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn c(re: f64) -> C64 {
    C64::new(re, 0.0)
}

/// α at 1-based lex position p holds the marker value p.
fn markers(dims: &[usize]) -> CoefficientTensor {
    let n: usize = dims.iter().product();
    CoefficientTensor::from_real(dims, &(1..=n).map(|x| x as f64).collect::<Vec<_>>()).unwrap()
}

fn marker(dims: &Dims, digits: &[usize]) -> C64 {
    c(MultiIndex::new(digits.to_vec(), dims).unwrap().lex_index() as f64)
}

/// Parses a subscript like "332" into digits.
fn subscript(s: &str) -> Vec<usize> {
    s.chars().map(|ch| ch.to_digit(10).unwrap() as usize).collect()
}

fn random_tensor(dims: &Dims, rng: &mut ChaCha8Rng) -> CoefficientTensor {
    let e = (0..dims.total())
        .map(|_| C64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)))
        .collect();
    CoefficientTensor::new(dims.clone(), e).unwrap()
}

fn random_vec(n: usize, rng: &mut ChaCha8Rng) -> Vec<C64> {
    (0..n)
        .map(|_| C64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)))
        .collect()
}

/// Dense 9x9 built straight from the printed matrix: (row, col, subscript).
fn golden_nine() -> Vec<(usize, usize, &'static str)> {
    vec![
        (1, 1, "11"),
        (2, 8, "32"),
        (3, 7, "31"),
        (4, 6, "23"),
        (5, 5, "22"),
        (6, 4, "21"),
        (7, 3, "13"),
        (8, 2, "12"),
        (9, 9, "33"),
    ]
}

fn criterion_1() -> Outcome {
    let a = markers(&[3, 3]);
    let r = construct_entangler(&a, Convention::PaperMatrix).map_err(|e| e.to_string())?;
    let want_entries: Vec<_> = golden_nine()
        .into_iter()
        .map(|(row, col, sub)| (row - 1, col - 1, marker(a.dims(), &subscript(sub))))
        .collect();
    let want = DenseMatrix::from_fn(9, 9, |i, j| {
        want_entries
            .iter()
            .find(|&&(r, c, _)| (r, c) == (i, j))
            .map_or(c(0.0), |&(_, _, v)| v)
    });
    let got: Vec<_> = r.entries().collect();
    ensure(got == want_entries, || format!("nonzero set {got:?}"))?;
    ensure(r.to_dense() == want, || "dense expansion differs".into())?;
    Ok("9 nonzeros match exactly".into())
}

fn criterion_2() -> Outcome {
    let p = pattern_permutation(9).map_err(|e| e.to_string())?.to_dense();
    // diag(1,0,…,0,1) + antidiag(0,1,…,1,0)
    let want = DenseMatrix::from_fn(9, 9, |i, j| {
        let diag = i == j && (i == 0 || i == 8);
        let anti = i + j == 8 && i != 0 && i != 8;
        if diag || anti {
            c(1.0)
        } else {
            c(0.0)
        }
    });
    ensure(p == want, || "P_9x9 differs".into())?;

    let a = markers(&[3, 3]);
    let tau = phase_gate(&a, Convention::PaperMatrix).map_err(|e| e.to_string())?;
    let want: Vec<C64> = ["11", "32", "31", "23", "22", "21", "13", "12", "33"]
        .iter()
        .map(|s| marker(a.dims(), &subscript(s)))
        .collect();
    ensure(tau.is_diagonal(), || "tau not diagonal".into())?;
    ensure(tau.to_dense() == DenseMatrix::diagonal(&want), || {
        format!("tau diag {:?}", tau.value_of_row())
    })?;
    Ok("P and tau match exactly".into())
}

fn criterion_3() -> Outcome {
    let a = markers(&[3, 3, 3]);
    let r = construct_entangler(&a, Convention::PaperMatrix).map_err(|e| e.to_string())?;
    let antidiag = [
        "332", "331", "323", "322", "321", "313", "312", "311", "233", "232", "231", "223", "222",
        "221", "213", "212", "211", "133", "132", "131", "123", "122", "121", "113", "112",
    ];
    let d = r.to_dense();
    ensure(d[(0, 0)] == marker(a.dims(), &[1, 1, 1]), || "corner 111".into())?;
    ensure(d[(26, 26)] == marker(a.dims(), &[3, 3, 3]), || "corner 333".into())?;
    for (k, sub) in antidiag.iter().enumerate() {
        let row = k + 1; // 0-based rows 1..=25, i.e. rows 2..=26
        let want = marker(a.dims(), &subscript(sub));
        ensure(d[(row, 26 - row)] == want, || format!("row {} expected α{sub}", row + 1))?;
    }
    let nonzero = d.as_slice().iter().filter(|z| z.norm() != 0.0).count();
    ensure(nonzero == 27, || format!("{nonzero} nonzeros"))?;
    Ok("α332 (row 2) … α112 (row 26) exact".into())
}

fn criterion_4() -> Outcome {
    let shapes = [(2, 2), (3, 2), (2, 3), (3, 3)];
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let mut entangled = 0;
    for case in 0..50 {
        let (n, m) = shapes[case % shapes.len()];
        let dims = Dims::uniform(n, m).unwrap();
        let a = random_tensor(&dims, &mut rng);
        let out = apply_entangler(&a, Convention::Theorem).map_err(|e| e.to_string())?;
        let bits_equal = out
            .amplitudes()
            .iter()
            .zip(a.entries())
            .all(|(x, y)| x.re.to_bits() == y.re.to_bits() && x.im.to_bits() == y.im.to_bits());
        ensure(bits_equal, || format!("case {case}: amplitudes differ"))?;
        let vin = is_fully_separable(&a, DEFAULT_SEPARABILITY_TOL).unwrap();
        let vout = is_fully_separable(&out.to_tensor(), DEFAULT_SEPARABILITY_TOL).unwrap();
        ensure(vin == vout, || format!("case {case}: verdicts differ"))?;
        entangled += usize::from(vout.entangled());
    }
    Ok(format!("50/50 bit-identical, verdicts equal ({entangled} entangled)"))
}

fn criterion_5() -> Outcome {
    let mut worst_ybe: f64 = 0.0;
    let mut worst_unit: f64 = 0.0;
    for seed in 0..100u64 {
        let n = [2, 3, 4][(seed % 3) as usize];
        let r = r_from_phase_matrix(&random_phase_matrix(n, seed).unwrap()).unwrap();
        let ybe = check_yang_baxter(&r, n, 1e-12).unwrap();
        let unit = r.is_unitary(1e-12).unwrap();
        worst_ybe = worst_ybe.max(ybe.residual);
        worst_unit = worst_unit.max(unit.residual);
        ensure(ybe.residual < 1e-12 && unit.residual < 1e-12, || {
            format!("seed {seed}: ybe {:e} unitary {:e}", ybe.residual, unit.residual)
        })?;
    }
    Ok(format!("max YBE residual {worst_ybe:e}, max unitarity residual {worst_unit:e}"))
}

fn criterion_6() -> Outcome {
    let r = r_from_phase_matrix(&random_phase_matrix(2, 606).unwrap()).unwrap();
    let mut detail = Vec::new();
    for strands in [3, 4] {
        let rep = check_braid_relations(&r, 2, strands, 1e-12).map_err(|e| e.to_string())?;
        let far = rep.max_residual(true);
        let braid = rep.max_residual(false);
        ensure(rep.passed() && braid < 1e-12 && far < 1e-12, || {
            format!("n={strands}: braid {braid:e}, far {far:e}")
        })?;
        detail.push(format!("n={strands} braid {braid:e} far {far:e}"));
    }
    let skew = DenseMatrix::from_fn(4, 4, |i, j| C64::new(0.3 * i as f64 - 0.7 * j as f64, (i * j) as f64 * 0.2 + 0.1));
    let ybe = check_yang_baxter(&skew, 2, 1e-12).unwrap();
    ensure(!ybe.passed, || "control R unexpectedly solves YBE".into())?;
    let rep = check_braid_relations(&skew, 2, 4, 1e-12).unwrap();
    let far = rep.max_residual(true);
    ensure(far < 1e-12, || format!("non-YBE far commutation {far:e}"))?;
    detail.push(format!("non-YBE R (YBE residual {:.3}) far {far:e}", ybe.residual));
    Ok(detail.join("; "))
}

fn criterion_7() -> Outcome {
    let shapes: [&[usize]; 8] = [
        &[2, 2],
        &[2, 3],
        &[3, 3],
        &[3, 2],
        &[2, 2, 2],
        &[2, 3, 2],
        &[3, 2, 3],
        &[3, 3, 3],
    ];
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let (mut compared, mut boundary, mut separable) = (0, 0, 0);
    for case in 0..1000 {
        let dims = Dims::new(shapes[case % shapes.len()].to_vec()).unwrap();
        let a = if case % 2 == 0 {
            let factors: Vec<_> = dims.as_slice().iter().map(|&n| random_vec(n, &mut rng)).collect();
            segre_map(&factors).unwrap()
        } else {
            random_tensor(&dims, &mut rng)
        };
        let v = is_fully_separable(&a, DEFAULT_SEPARABILITY_TOL).unwrap();
        if v.max_violation > 1e-12 && v.max_violation < 1e-6 {
            boundary += 1;
            continue;
        }
        let oracle = rank1_oracle(&a, DEFAULT_ORACLE_TOL).unwrap();
        ensure(oracle == v.separable, || {
            format!("case {case} dims {dims}: quadric {} oracle {oracle} residual {:e}", v.separable, v.max_violation)
        })?;
        compared += 1;
        separable += usize::from(v.separable);
    }
    ensure(compared >= 990, || format!("only {compared} cases away from the boundary"))?;
    Ok(format!("{compared} compared ({separable} separable), {boundary} near boundary, 0 disagreements"))
}

fn criterion_8() -> Outcome {
    let a = segre_map(&[vec![c(1.0), c(1.0), c(2.0)], vec![c(1.0), c(1.0), c(1.0)]]).unwrap();
    let tol = CertifyTolerances::default();
    let paper = certify_entangler(&a, Convention::PaperMatrix, tol).map_err(|e| e.to_string())?;
    ensure(paper.coefficient_verdict.separable, || "coefficients not separable".into())?;
    ensure(paper.entangling.entangled(), || "paper-matrix output not entangled".into())?;
    ensure(paper.entangling.witness.is_some(), || "no witness".into())?;

    // the explicit minor u2v2(u1v1 − u3v3): rows {1,2}, cols {1,2} of the output
    let out = apply_entangler(&a, Convention::PaperMatrix).unwrap().to_tensor();
    let d = out.dims().clone();
    let g = quadric_generators(&d)
        .unwrap()
        .into_iter()
        .find(|g| g.slot() == 1 && g.k().digits() == [1, 1] && g.l().digits() == [2, 2])
        .ok_or("minor rows{1,2} cols{1,2} not enumerated")?;
    let raw = evaluate_quadric(&g, &out).unwrap();
    let normalized = evaluate_quadric(&g, &out.normalized().unwrap()).unwrap();
    ensure(raw == c(-1.0), || format!("raw witness minor {raw}"))?;
    ensure((normalized.norm() - 0.25).abs() < 1e-15, || format!("normalized witness minor {normalized}"))?;
    ensure(paper.entangling.max_violation >= 0.25, || "max violation below the witness".into())?;

    let theorem = certify_entangler(&a, Convention::Theorem, tol).map_err(|e| e.to_string())?;
    ensure(theorem.coefficient_verdict.separable && theorem.entangling.separable, || {
        "theorem convention not separable".into()
    })?;
    Ok(format!(
        "witness minor -1 (normalized 0.25); worst minor {} (normalized max {}); theorem: both separable",
        paper.entangling.witness.as_ref().unwrap(),
        paper.entangling.max_violation
    ))
}

fn criterion_9() -> Outcome {
    let mut got = Vec::new();
    let mut ok = true;
    for (dims, want) in [(vec![2, 2], 1), (vec![3, 3], 18), (vec![2, 2, 2], 12)] {
        let d = Dims::new(dims).unwrap();
        let n = quadric_generators(&d).unwrap().len();
        ok &= n == want;
        got.push(format!("{d}: {n} (want {want})"));
    }
    ensure(ok, || got.join(", "))?;
    Ok(got.join(", "))
}

fn criterion_10() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(10);
    let shapes: [&[usize]; 4] = [&[2, 2], &[3, 3], &[2, 2, 2], &[3, 3, 3]];
    let lambdas = [c(2.0), C64::new(0.0, 1.0), c(1e-6)];
    let mut flag_changes = [0usize; 3];
    let mut value_changes = [0usize; 3];
    let mut max_abs = [0.0f64; 3];
    for case in 0..100 {
        let dims = Dims::new(shapes[case % 4].to_vec()).unwrap();
        let a = if case % 2 == 0 {
            random_tensor(&dims, &mut rng)
        } else {
            let f: Vec<_> = dims.as_slice().iter().map(|&n| random_vec(n, &mut rng)).collect();
            segre_map(&f).unwrap()
        };
        let v = is_fully_separable(&a, DEFAULT_SEPARABILITY_TOL).unwrap();
        for (i, &lambda) in lambdas.iter().enumerate() {
            let w = is_fully_separable(&a.scale(lambda), DEFAULT_SEPARABILITY_TOL).unwrap();
            flag_changes[i] += usize::from(w.separable != v.separable);
            if w.max_violation != v.max_violation {
                value_changes[i] += 1;
                max_abs[i] = max_abs[i].max((w.max_violation - v.max_violation).abs());
            }
        }
    }
    let summary = lambdas
        .iter()
        .enumerate()
        .map(|(i, l)| {
            format!(
                "λ={l}: {} flag / {} value changes (max abs diff {:.1e})",
                flag_changes[i], value_changes[i], max_abs[i]
            )
        })
        .collect::<Vec<_>>()
        .join("; ");
    let clean = flag_changes.iter().chain(&value_changes).all(|&n| n == 0);
    ensure(clean, || summary.clone())?;
    Ok(summary)
}

fn criterion_11() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let shapes = [(2, 2), (3, 2), (2, 3), (3, 3), (4, 2)];
    let (mut unitary, mut not_unitary) = (0, 0);
    for case in 0..100u64 {
        let (n, m) = shapes[(case % 5) as usize];
        let dims = Dims::uniform(n, m).unwrap();
        let mut a = random_phases(&dims, 1100 + case);
        if case % 2 == 1 {
            // push one coefficient's modulus off 1
            let entries: Vec<C64> = {
                let mut e = a.entries().to_vec();
                let pos = rng.gen_range(0..e.len());
                let factor = if rng.gen::<bool>() { rng.gen_range(1.001..2.0) } else { rng.gen_range(0.0..0.999) };
                e[pos] *= factor;
                e
            };
            a = CoefficientTensor::new(dims.clone(), entries).unwrap();
        }
        let unimodular = a.entries().iter().all(|z| (z.norm() - 1.0).abs() <= 1e-12);
        let r = construct_entangler(&a, Convention::Theorem).unwrap();
        let dense = r.to_dense().is_unitary(1e-12).unwrap();
        ensure(dense.unitary == unimodular, || {
            format!("case {case}: unitary {} unimodular {unimodular} residual {:e}", dense.unitary, dense.residual)
        })?;
        let paper = construct_entangler(&a, Convention::PaperMatrix).unwrap().to_dense();
        ensure(paper.is_unitary(1e-12).unwrap().unitary == unimodular, || format!("case {case} paper-matrix"))?;
        if unimodular {
            unitary += 1;
        } else {
            not_unitary += 1;
        }
    }
    ensure(unitary == 50 && not_unitary == 50, || format!("{unitary} unimodular / {not_unitary} not"))?;
    Ok("50 unimodular → unitary, 50 perturbed → not unitary".into())
}

type Criterion = (&'static str, fn() -> Outcome);

fn main() -> ExitCode {
    let criteria: [Criterion; 11] = [
        ("1  golden 9x9 entangler", criterion_1),
        ("2  golden P and tau (9x9)", criterion_2),
        ("3  golden 27x27 antidiagonal", criterion_3),
        ("4  theorem-convention output identity", criterion_4),
        ("5  delta-form YBE and unitarity", criterion_5),
        ("6  braid relations", criterion_6),
        ("7  quadric vs rank-1 oracle", criterion_7),
        ("8  convention-divergence witness", criterion_8),
        ("9  generator counts", criterion_9),
        ("10 scale invariance", criterion_10),
        ("11 unitarity criterion", criterion_11),
    ];
    let mut failed = 0;
    for (name, check) in criteria {
        match check() {
            Ok(detail) => println!("PASS  {name}: {detail}"),
            Err(why) => {
                failed += 1;
                println!("FAIL  {name}: {why}");
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
