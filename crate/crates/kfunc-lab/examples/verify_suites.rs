//! Programmatic access to the verification suites the CLI exposes as
//! `kfunc-lab verify <suite>`.
//!
//! Run with `cargo run --example verify_suites`.

use kfunc_lab::verify::{run_suite, Suite};

fn main() -> kfunc_lab::Result<()> {
    println!("suite,cases,max_rel_dev,pass");
    for suite in Suite::ALL {
        // small case counts keep this demo quick; the defaults are the
        // acceptance-scale runs
        let cases = suite.default_cases().min(50);
        let report = run_suite(suite, 7, cases, suite.default_tol())?;
        println!("{}", report.summary_line());
        if let Some(ratio) = report.worst_ratio {
            println!("#   worst sandwich ratio {ratio:.6}");
        }
    }
    Ok(())
}
