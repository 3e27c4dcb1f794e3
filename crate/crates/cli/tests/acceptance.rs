//! Acceptance suite. Runs every criterion, prints one PASS/FAIL line each
//! and exits non-zero if any criterion fails.

use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use biquat::oracle::{
    lattice_search, refine_root, sample_root_with_parameters, sample_unit_pure, task_rng, term_table, LatticeSpec,
};
use biquat::{
    classify_root, constraint_residuals, dot_cross, make_nontrivial_root, Biquaternion, PureUnit, Quaternion,
    RootClassification,
};
use rand::Rng;

const SEED: u64 = 0x5eed_2005;

type Check = Result<String, String>;
type Criterion = (&'static str, fn() -> Check);
/// (a, b, c, d, family) for each lattice hit.
type CensusHit = (f64, f64, f64, f64, &'static str);

fn ensure(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn within_time(elapsed: Duration, limit: Duration) -> Result<(), String> {
    ensure(elapsed < limit, format!("took {elapsed:?}, limit {limit:?}"))
}

fn minus_one_deviation(q: &Biquaternion) -> f64 {
    q.square().max_abs_diff(&-Biquaternion::ONE)
}

fn s(x: f64) -> f64 {
    x.sqrt()
}

fn example_mu() -> PureUnit {
    PureUnit::new(1.0 / s(3.0), 1.0 / s(3.0), 1.0 / s(3.0)).unwrap()
}

fn example_nu() -> PureUnit {
    PureUnit::new(0.0, 1.0 / s(2.0), -1.0 / s(2.0)).unwrap()
}

fn criterion_1() -> Check {
    let q = Biquaternion::new(Quaternion::pure(s(2.0), 0.0, 0.0), Quaternion::J);
    let dev = minus_one_deviation(&q);
    ensure(dev <= 1e-12, format!("max deviation {dev:e}"))?;
    Ok(format!("max deviation {dev:e}"))
}

fn criterion_2() -> Check {
    let q = Biquaternion::new(Quaternion::pure(1.0, 1.0, 1.0), Quaternion::pure(0.0, 1.0, -1.0));
    let dev = minus_one_deviation(&q);
    ensure(dev <= 1e-12, format!("square deviation {dev:e}"))?;

    let parts = [
        Biquaternion::from_real(Quaternion::I),
        Biquaternion::from_real(Quaternion::J),
        Biquaternion::from_real(Quaternion::K),
        Biquaternion::from_imag(Quaternion::J),
        Biquaternion::from_imag(-Quaternion::K),
    ];
    let table = term_table(&parts);
    let expected = [
        ["-1", "k", "-j", "kI", "jI"],
        ["-k", "-1", "i", "-I", "-iI"],
        ["j", "-i", "-1", "-iI", "I"],
        ["-kI", "-I", "iI", "1", "i"],
        ["-jI", "iI", "I", "-i", "1"],
    ];
    let cells = table.symbolic_entries(17, 1e-12);
    for (r, row) in expected.iter().enumerate() {
        for (c, want) in row.iter().enumerate() {
            ensure(
                cells[r][c] == *want,
                format!("entry ({r},{c}) is {}, expected {want}", cells[r][c]),
            )?;
        }
    }
    let total_dev = table.total().max_abs_diff(&-Biquaternion::ONE);
    ensure(total_dev <= 1e-12, format!("table total deviation {total_dev:e}"))?;
    Ok(format!(
        "25/25 entries match, square deviation {dev:e}, total deviation {total_dev:e}"
    ))
}

fn criterion_3() -> Check {
    let real = example_nu().quaternion() * 3.0;
    let imag = example_mu().quaternion() * (2.0 * s(2.0));
    let q = Biquaternion::new(real, imag);
    let dev = minus_one_deviation(&q);
    ensure(dev <= 1e-12, format!("square deviation {dev:e}"))?;

    let table = term_table(&[Biquaternion::from_real(real), Biquaternion::from_imag(imag)]);
    let diag = table.diagonal();
    let d9 = diag[0].max_abs_diff(&Biquaternion::scalar(-9.0));
    let d8 = diag[1].max_abs_diff(&Biquaternion::scalar(8.0));
    ensure(
        d9 <= 1e-12 && d8 <= 1e-12,
        format!("diagonal blocks {:?} / {:?}", diag[0], diag[1]),
    )?;
    let cross = (table.entry(0, 1) + table.entry(1, 0)).coefficient_norm();
    ensure(cross <= 1e-12, format!("cross terms sum to {cross:e}"))?;
    Ok(format!(
        "diagonal -9 and +8 (deviations {d9:e}, {d8:e}), square deviation {dev:e}"
    ))
}

fn criterion_4() -> Check {
    let start = Instant::now();
    let mut worst: f64 = 0.0;
    for n in 0..10_000 {
        let root = sample_root_with_parameters(&mut task_rng(SEED, n), 5.0).map_err(|e| e.to_string())?;
        ensure(root.t > 0.0 && root.t <= 5.0, format!("t = {} out of range", root.t))?;
        worst = worst.max(root.root.square_plus_one().coefficient_norm());
    }
    let elapsed = start.elapsed();
    ensure(worst <= 1e-9, format!("max residual {worst:e}"))?;
    within_time(elapsed, Duration::from_secs(1))?;
    Ok(format!("10000 roots, max residual {worst:e}, {elapsed:?}"))
}

fn criterion_5() -> Check {
    let start = Instant::now();
    let mut rng = task_rng(SEED, 5);
    let mut worst: f64 = 0.0;
    for _ in 0..10_000 {
        let c: [f64; 8] = std::array::from_fn(|_| rng.gen_range(-10.0..=10.0));
        let q = Biquaternion::from_array(c);
        let r = constraint_residuals(&q);
        worst = worst.max(r.reassemble().max_abs_diff(&(q * q + Biquaternion::ONE)));
    }
    let elapsed = start.elapsed();
    ensure(worst <= 1e-9, format!("max coefficient deviation {worst:e}"))?;
    within_time(elapsed, Duration::from_secs(1))?;
    Ok(format!("10000 biquaternions, max deviation {worst:e}, {elapsed:?}"))
}

fn criterion_6() -> Check {
    let start = Instant::now();
    let (mut dir_err, mut t_err): (f64, f64) = (0.0, 0.0);
    for n in 0..1_000 {
        let sampled = sample_root_with_parameters(&mut task_rng(SEED ^ 6, n), 5.0).map_err(|e| e.to_string())?;
        let q = make_nontrivial_root(sampled.mu, sampled.nu, sampled.t).map_err(|e| e.to_string())?;
        match classify_root(&q, 1e-9).map_err(|e| e.to_string())? {
            RootClassification::Nontrivial { mu, nu, t } => {
                dir_err = dir_err
                    .max(mu.max_abs_diff(&sampled.mu))
                    .max(nu.max_abs_diff(&sampled.nu));
                t_err = t_err.max((t - sampled.t).abs());
            }
            other => return Err(format!("sample {n} classified as {other:?}")),
        }
    }
    let elapsed = start.elapsed();
    ensure(
        dir_err <= 1e-9 && t_err <= 1e-9,
        format!("direction error {dir_err:e}, t error {t_err:e}"),
    )?;
    within_time(elapsed, Duration::from_secs(1))?;
    Ok(format!(
        "1000 round trips, direction error {dir_err:e}, t error {t_err:e}, {elapsed:?}"
    ))
}

fn census(nu: PureUnit) -> Result<(Vec<CensusHit>, Duration), String> {
    let start = Instant::now();
    let spec = LatticeSpec {
        bound: 2.0,
        step: 0.25,
        mu: PureUnit::I,
        nu,
    };
    let report = lattice_search(&spec, 1e-9).map_err(|e| e.to_string())?;
    let elapsed = start.elapsed();
    ensure(!report.has_violation(), "theorem-violation flag raised")?;
    let hits = report
        .hits
        .iter()
        .map(|h| (h.a, h.b, h.c, h.d, h.classification.as_ref().unwrap().family_name()))
        .collect();
    Ok((hits, elapsed))
}

fn criterion_7() -> Check {
    let (hits, t_perp) = census(PureUnit::J)?;
    let expected = vec![
        (0.0, -1.25, 0.0, -0.75, "nontrivial"),
        (0.0, -1.25, 0.0, 0.75, "nontrivial"),
        (0.0, -1.0, 0.0, 0.0, "unit-pure"),
        (0.0, 0.0, -1.0, 0.0, "imaginary-unit"),
        (0.0, 0.0, 1.0, 0.0, "imaginary-unit"),
        (0.0, 1.0, 0.0, 0.0, "unit-pure"),
        (0.0, 1.25, 0.0, -0.75, "nontrivial"),
        (0.0, 1.25, 0.0, 0.75, "nontrivial"),
    ];
    ensure(hits == expected, format!("perpendicular hits {hits:?}"))?;
    within_time(t_perp, Duration::from_secs(10))?;

    let (hits, t_obl) = census(PureUnit::normalize(1.0, 1.0, 0.0).unwrap())?;
    let expected = vec![
        (0.0, -1.0, 0.0, 0.0, "unit-pure"),
        (0.0, 0.0, -1.0, 0.0, "imaginary-unit"),
        (0.0, 0.0, 1.0, 0.0, "imaginary-unit"),
        (0.0, 1.0, 0.0, 0.0, "unit-pure"),
    ];
    ensure(hits == expected, format!("oblique hits {hits:?}"))?;
    within_time(t_obl, Duration::from_secs(10))?;
    Ok(format!(
        "perpendicular 8 hits ({t_perp:?}), oblique 4 hits, 0 nontrivial ({t_obl:?}), 0 violations"
    ))
}

fn criterion_8() -> Check {
    let start = Instant::now();
    let mut counts = [0usize; 3];
    let mut worst: f64 = 0.0;
    for n in 0..1_000u64 {
        let mut rng = task_rng(SEED ^ 8, n);
        let base = match n % 10 {
            0 => Biquaternion::IMAG * if n % 20 == 0 { 1.0 } else { -1.0 },
            1 => Biquaternion::from_real(sample_unit_pure(&mut rng).quaternion()),
            _ => {
                sample_root_with_parameters(&mut rng, 2.0)
                    .map_err(|e| e.to_string())?
                    .root
            }
        };
        let noisy = base.to_array().map(|c| c + rng.gen_range(-1e-3..=1e-3));
        let refined = refine_root(&Biquaternion::from_array(noisy), 50).map_err(|e| format!("probe {n}: {e}"))?;
        ensure(
            refined.residual <= 1e-12,
            format!("probe {n}: residual {:e}", refined.residual),
        )?;
        worst = worst.max(refined.residual);
        match refined.classification {
            RootClassification::Nontrivial { .. } => counts[0] += 1,
            RootClassification::UnitPure { .. } => counts[1] += 1,
            RootClassification::ImaginaryUnit { .. } => counts[2] += 1,
            RootClassification::NotRoot { .. } => return Err(format!("probe {n}: refined point is not a root")),
        }
    }
    let elapsed = start.elapsed();
    within_time(elapsed, Duration::from_secs(5))?;
    Ok(format!(
        "1000 converged (nontrivial {}, unit-pure {}, imaginary-unit {}), max residual {worst:e}, 0 violations, {elapsed:?}",
        counts[0], counts[1], counts[2]
    ))
}

fn criterion_9() -> Check {
    let start = Instant::now();
    let mut rng = task_rng(SEED, 9);
    let (mut product_err, mut anti_err): (f64, f64) = (0.0, 0.0);
    for _ in 0..10_000 {
        let mut pure = || {
            Quaternion::pure(
                rng.gen_range(-1.0..=1.0),
                rng.gen_range(-1.0..=1.0),
                rng.gen_range(-1.0..=1.0),
            )
        };
        let (u, v) = (pure(), pure());
        let (dot, cross) = dot_cross(u, v).map_err(|e| e.to_string())?;
        product_err = product_err.max((u * v).max_abs_diff(&(cross - Quaternion::real(dot))));

        let mu = sample_unit_pure(&mut rng).quaternion();
        let nu = sample_unit_pure(&mut rng).quaternion();
        let (dot, _) = dot_cross(mu, nu).map_err(|e| e.to_string())?;
        anti_err = anti_err.max((mu * nu + nu * mu).max_abs_diff(&Quaternion::real(-2.0 * dot)));
    }
    let elapsed = start.elapsed();
    ensure(
        product_err <= 1e-12 && anti_err <= 1e-12,
        format!("errors {product_err:e}, {anti_err:e}"),
    )?;
    within_time(elapsed, Duration::from_secs(1))?;
    Ok(format!(
        "10000 pairs, uv error {product_err:e}, anticommutator error {anti_err:e}, {elapsed:?}"
    ))
}

fn criterion_10() -> Check {
    let out = Command::new(env!("CARGO_BIN_EXE_biquat"))
        .arg("verify-examples")
        .output()
        .map_err(|e| e.to_string())?;
    let stdout = String::from_utf8_lossy(&out.stdout);
    ensure(
        out.status.code() == Some(0),
        format!("exit status {:?}\n{stdout}", out.status.code()),
    )?;
    let pass_lines = stdout.lines().filter(|l| l.starts_with("PASS example")).count();
    ensure(pass_lines == 3, format!("{pass_lines} PASS lines\n{stdout}"))?;
    ensure(!stdout.contains("FAIL"), stdout.to_string())?;
    Ok("verify-examples: 3 PASS lines, exit 0".to_string())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("example 1 squares to -1", criterion_1),
        ("example 2 squares to -1 and its 5x5 table matches", criterion_2),
        ("example 3 squares to -1 with diagonal -9 and +8", criterion_3),
        ("generator soundness sweep", criterion_4),
        ("residual identity", criterion_5),
        ("classifier round trip", criterion_6),
        ("lattice census", criterion_7),
        ("Newton completeness probe", criterion_8),
        ("pure product identities", criterion_9),
        ("verify-examples end to end", criterion_10),
    ];
    let mut failed = 0;
    for (n, (name, check)) in criteria.iter().enumerate() {
        match check() {
            Ok(detail) => println!("PASS [{}] {name}: {detail}", n + 1),
            Err(detail) => {
                failed += 1;
                println!("FAIL [{}] {name}: {detail}", n + 1);
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
