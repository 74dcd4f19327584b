//! Acceptance suite: one test per criterion, each printing a pass/fail
//! line. Run with `cargo test -p kfunc-lab --test acceptance -- --nocapture`
//! to see the lines for passing criteria too.

use std::process::Command;
use std::time::{Duration, Instant};

use kfunc_lab::embed::{dilation_norm_exact, dilation_norm_numeric};
use kfunc_lab::kfunc::KProfile;
use kfunc_lab::stepfn::ValueMassList;
use kfunc_lab::verify::{oracle_dominance_dev, run_suite, Suite};

const SEED: u64 = 7;

fn announce(id: u32, name: &str, pass: bool, detail: &str) {
    println!(
        "acceptance {id:02} {name}: {} ({detail})",
        if pass { "PASS" } else { "FAIL" }
    );
    assert!(pass, "criterion {id} ({name}) failed: {detail}");
}

/// Runs the CLI binary's verify subcommand and returns (summary, exit ok).
fn cli_verify(suite: &str, cases: usize, tol: f64) -> (String, bool) {
    let out = Command::new(env!("CARGO_BIN_EXE_kfunc-lab"))
        .args([
            "verify",
            suite,
            "--seed",
            &SEED.to_string(),
            "--cases",
            &cases.to_string(),
            "--tol",
            &format!("{tol:e}"),
        ])
        .output()
        .expect("binary runs");
    let stdout = String::from_utf8(out.stdout).expect("utf-8 output");
    let summary = stdout.lines().last().unwrap_or_default().to_string();
    (summary, out.status.success())
}

#[test]
fn acceptance_01_allocation_identity() {
    let start = Instant::now();
    let (summary, ok) = cli_verify("theorem1", 1000, 1e-9);
    let elapsed = start.elapsed();
    let in_time = elapsed < Duration::from_secs(5);
    announce(
        1,
        "direct oracle vs merge on 1000 instances",
        ok && in_time,
        &format!("{summary}, {elapsed:.2?}"),
    );
}

#[test]
fn acceptance_02_truncation_convergence() {
    let report = run_suite(Suite::Theorem2, SEED, 200, 1e-12).unwrap();
    announce(
        2,
        "coordinate truncation monotone and exact at full length",
        report.pass(),
        &report.summary_line(),
    );
}

#[test]
fn acceptance_03_product_space_reduction() {
    let start = Instant::now();
    let (summary, ok) = cli_verify("eq10", 200, 1e-9);
    let elapsed = start.elapsed();
    let in_time = elapsed < Duration::from_secs(2);
    announce(
        3,
        "merged rearrangement integrates to the allocation value",
        ok && in_time,
        &format!("{summary}, {elapsed:.2?}"),
    );
}

#[test]
fn acceptance_04_interpolation_norm_identity() {
    let start = Instant::now();
    let report = run_suite(Suite::Eq11, SEED, 25, 1e-8).unwrap();
    let elapsed = start.elapsed();
    let in_time = elapsed < Duration::from_secs(10);
    announce(
        4,
        "interpolation norm equals product-space Lorentz norm",
        report.pass() && in_time,
        &format!("{}, {elapsed:.2?}", report.summary_line()),
    );
}

#[test]
fn acceptance_05_dilation_distribution_identities() {
    let continuous = run_suite(Suite::Eq13, SEED, 500, 1e-12).unwrap();
    let discrete = run_suite(Suite::Sp, SEED, 500, 1e-12).unwrap();
    announce(
        5,
        "dilation distribution identities exact, strict bracket included",
        continuous.pass() && discrete.pass(),
        &format!("{}; {}", continuous.summary_line(), discrete.summary_line()),
    );
}

#[test]
fn acceptance_06_dilation_norm_convergence() {
    let start = Instant::now();
    // the pinned closed form: k = 1 on (0,1], p = 2 gives exactly 2
    let unit = KProfile::from_levels(&ValueMassList::new(vec![(1.0, 1.0)]).unwrap());
    let exact = dilation_norm_exact(&unit, 2.0).unwrap();
    let numeric = dilation_norm_numeric(&unit, 2.0, 1e-6, 1e6, 8).unwrap();
    let pinned_ok = (exact - 2.0).abs() <= 1e-12
        && numeric <= exact * (1.0 + 1e-9)
        && (exact - numeric) / exact <= 0.01;
    // random profiles with structure inside [1/4, 4]; the suite also checks
    // monotonicity in the window and the grid
    let report = run_suite(Suite::Eq14, SEED, 12, 1e-2).unwrap();
    let elapsed = start.elapsed();
    let in_time = elapsed < Duration::from_secs(10);
    announce(
        6,
        "numeric dilation norm within 1% of the closed form, monotone",
        pinned_ok && report.pass() && in_time,
        &format!(
            "unit: numeric={numeric:.6} exact={exact}; {}, {elapsed:.2?}",
            report.summary_line()
        ),
    );
}

#[test]
fn acceptance_07_sandwich_bounds() {
    let hardy = run_suite(Suite::Hardy, SEED, 200, 1e-9).unwrap();
    let remark7 = run_suite(Suite::Remark7, SEED, 100, 1e-9).unwrap();
    announce(
        7,
        "Lorentz and tensorized sandwiches hold with constant p'",
        hardy.pass() && remark7.pass(),
        &format!(
            "{} worst_ratio={:.6}; {} worst_ratio={:.6}",
            hardy.summary_line(),
            hardy.worst_ratio.unwrap_or(f64::NAN),
            remark7.summary_line(),
            remark7.worst_ratio.unwrap_or(f64::NAN)
        ),
    );
}

#[test]
fn acceptance_08_oracle_dominance() {
    let (overshoot, aligned) = oracle_dominance_dev(SEED, 200).unwrap();
    announce(
        8,
        "grid oracle never exceeds the merge, aligned grids agree",
        overshoot <= 1e-9 && aligned <= 1e-9,
        &format!("overshoot={overshoot:e}, aligned_dev={aligned:e}"),
    );
}
