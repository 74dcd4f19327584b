use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use kfunc_lab::instance::Instance;
use kfunc_lab::lorentz::{interp_norm, lorentz_pq, lorentz_pq_starstar};
use kfunc_lab::verify::{run_suite, Suite};
use kfunc_lab::Error;

const EXIT_VERIFY_FAIL: u8 = 1;
const EXIT_INPUT: u8 = 2;
const EXIT_DIVERGENT: u8 = 3;

#[derive(Parser)]
#[command(
    name = "kfunc-lab",
    version,
    about = "K-functional, Lorentz and interpolation-norm evaluation with oracle-backed verification suites"
)]
struct Cli {
    #[command(subcommand)]
    command: Commands,
}

#[derive(Subcommand)]
enum Commands {
    /// Evaluate the K-functional of an instance at the given budgets
    #[command(name = "k-eval")]
    KEval {
        /// Instance JSON file
        file: PathBuf,
        /// Comma-separated budgets t >= 0
        #[arg(long, value_delimiter = ',', required = true)]
        t: Vec<f64>,
    },
    /// Evaluate a Lorentz or interpolation norm of an instance
    Norm {
        /// Instance JSON file
        file: PathBuf,
        /// Which norm to evaluate
        #[arg(long, value_enum)]
        kind: NormKind,
        /// Exponent p (a number or "inf"); used by pq and pq-star
        #[arg(long)]
        p: Option<String>,
        /// Exponent q (a number or "inf")
        #[arg(long)]
        q: Option<String>,
        /// Interpolation parameter theta in (0, 1); used by interp
        #[arg(long)]
        theta: Option<f64>,
    },
    /// Run a verification suite and exit 0 iff it passes
    Verify {
        /// One of: theorem1, theorem2, eq10, eq11, eq13, eq14, sp, hardy, remark7
        suite: String,
        /// 64-bit seed for the instance stream
        #[arg(long, default_value_t = 7)]
        seed: u64,
        /// Number of cases (suite default when omitted)
        #[arg(long)]
        cases: Option<usize>,
        /// Pass tolerance on the worst relative deviation (suite default
        /// when omitted; KFUNCLAB_TOL_OVERRIDE wins over both)
        #[arg(long)]
        tol: Option<f64>,
        /// Write the per-case CSV here instead of stdout
        #[arg(long)]
        csv: Option<PathBuf>,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum NormKind {
    /// Lorentz norm of the instance's derivative k read as x*
    Pq,
    /// Lorentz norm of the running average K(t)/t
    PqStar,
    /// Real-interpolation norm with parameter theta
    Interp,
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => ExitCode::from(code),
        Err(err) => {
            eprintln!("error: {err}");
            let code = match err {
                Error::Divergent(_) => EXIT_DIVERGENT,
                _ => EXIT_INPUT,
            };
            ExitCode::from(code)
        }
    }
}

fn run(cli: Cli) -> Result<u8, Error> {
    match cli.command {
        Commands::KEval { file, t } => k_eval(&file, &t),
        Commands::Norm {
            file,
            kind,
            p,
            q,
            theta,
        } => norm(&file, kind, p.as_deref(), q.as_deref(), theta),
        Commands::Verify {
            suite,
            seed,
            cases,
            tol,
            csv,
        } => verify(&suite, seed, cases, tol, csv.as_deref()),
    }
}

fn k_eval(file: &std::path::Path, ts: &[f64]) -> Result<u8, Error> {
    for &t in ts {
        if !t.is_finite() || t < 0.0 {
            return Err(Error::NegativeValue {
                what: "budget",
                value: t,
            });
        }
    }
    let profile = Instance::from_path(file)?.to_vector_function()?.k_profile();
    println!("t,K_t");
    for &t in ts {
        println!("{},{}", t, profile.eval(t)?);
    }
    Ok(0)
}

fn parse_exponent(text: Option<&str>, what: &'static str) -> Result<f64, Error> {
    let text = text.ok_or(Error::InvalidParameter(what))?;
    if text.eq_ignore_ascii_case("inf") || text == "∞" {
        return Ok(f64::INFINITY);
    }
    text.parse::<f64>()
        .map_err(|_| Error::InvalidParameter(what))
}

fn fmt_exponent(v: f64) -> String {
    if v.is_infinite() {
        "inf".into()
    } else {
        format!("{v}")
    }
}

fn norm(
    file: &std::path::Path,
    kind: NormKind,
    p: Option<&str>,
    q: Option<&str>,
    theta: Option<f64>,
) -> Result<u8, Error> {
    let profile = Instance::from_path(file)?.to_vector_function()?.k_profile();
    let q = parse_exponent(q, "--q is required (a number or \"inf\")")?;
    let (label, p_eff, theta_col, value) = match kind {
        NormKind::Pq => {
            let p = parse_exponent(p, "--p is required for --kind pq")?;
            ("pq", p, String::new(), lorentz_pq(profile.k(), p, q)?)
        }
        NormKind::PqStar => {
            let p = parse_exponent(p, "--p is required for --kind pq-star")?;
            (
                "pq-star",
                p,
                String::new(),
                lorentz_pq_starstar(&profile, p, q)?,
            )
        }
        NormKind::Interp => {
            let theta = theta.ok_or(Error::InvalidParameter(
                "--theta is required for --kind interp",
            ))?;
            (
                "interp",
                1.0 / (1.0 - theta),
                format!("{theta}"),
                interp_norm(&profile, theta, q)?,
            )
        }
    };
    println!("kind,p,q,theta,norm");
    println!(
        "{label},{},{},{theta_col},{value}",
        fmt_exponent(p_eff),
        fmt_exponent(q)
    );
    Ok(0)
}

fn verify(
    name: &str,
    seed: u64,
    cases: Option<usize>,
    tol: Option<f64>,
    csv: Option<&std::path::Path>,
) -> Result<u8, Error> {
    let suite = Suite::from_name(name).ok_or(Error::InvalidParameter(
        "unknown suite (expected one of: theorem1, theorem2, eq10, eq11, eq13, eq14, sp, hardy, remark7)",
    ))?;
    let cases = cases.unwrap_or_else(|| suite.default_cases());
    let mut tol = tol.unwrap_or_else(|| suite.default_tol());
    if let Ok(text) = std::env::var("KFUNCLAB_TOL_OVERRIDE") {
        tol = text
            .parse::<f64>()
            .map_err(|_| Error::InvalidParameter("KFUNCLAB_TOL_OVERRIDE must be a number"))?;
    }
    let report = run_suite(suite, seed, cases, tol)?;
    match csv {
        Some(path) => {
            std::fs::write(path, report.csv())
                .map_err(|e| Error::Instance(format!("{}: {e}", path.display())))?;
        }
        None => print!("{}", report.csv()),
    }
    println!("{}", report.summary_line());
    Ok(if report.pass() { 0 } else { EXIT_VERIFY_FAIL })
}
