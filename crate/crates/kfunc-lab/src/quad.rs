//! Gauss–Legendre quadrature with dyadic adaptive refinement.
//!
//! Used for the running-average norm integrals, whose integrands are
//! smooth and positive on the interior pieces of a profile (the first
//! piece and the tail are handled in closed form by the caller).

use std::sync::OnceLock;

const NODES: usize = 32;

/// Nodes and weights of the `NODES`-point rule on `[-1, 1]`, via Newton
/// iteration on the Legendre recurrence.
fn rule() -> &'static [(f64, f64)] {
    static RULE: OnceLock<Vec<(f64, f64)>> = OnceLock::new();
    RULE.get_or_init(|| {
        let n = NODES;
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            let mut x = (std::f64::consts::PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
            let mut dp = 0.0;
            for _ in 0..100 {
                let (p, d) = legendre_with_derivative(n, x);
                dp = d;
                let dx = -p / d;
                x += dx;
                if dx.abs() <= 1e-15 {
                    break;
                }
            }
            let w = 2.0 / ((1.0 - x * x) * dp * dp);
            out.push((x, w));
        }
        out
    })
}

/// Legendre polynomial `P_n` and its derivative at `x`, by the three-term
/// recurrence.
fn legendre_with_derivative(n: usize, x: f64) -> (f64, f64) {
    let mut p_prev = 1.0;
    let mut p = x;
    for k in 1..n {
        let kf = k as f64;
        let next = ((2.0 * kf + 1.0) * x * p - kf * p_prev) / (kf + 1.0);
        p_prev = p;
        p = next;
    }
    let dp = (n as f64) * (x * p - p_prev) / (x * x - 1.0);
    (p, dp)
}

fn fixed_rule<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64) -> f64 {
    let mid = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    rule()
        .iter()
        .map(|&(x, w)| w * f(mid + half * x))
        .sum::<f64>()
        * half
}

/// Integrates `f` over `[a, b]`, bisecting until two successive
/// refinements agree to `rel_tol` (relative to the refined value).
pub fn integrate<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64, rel_tol: f64) -> f64 {
    if a >= b {
        return 0.0;
    }
    let whole = fixed_rule(f, a, b);
    refine(f, a, b, whole, rel_tol, 0)
}

fn refine<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64, whole: f64, rel_tol: f64, depth: u32) -> f64 {
    let mid = 0.5 * (a + b);
    let left = fixed_rule(f, a, mid);
    let right = fixed_rule(f, mid, b);
    let sum = left + right;
    if (sum - whole).abs() <= rel_tol * sum.abs().max(f64::MIN_POSITIVE) || depth >= 48 {
        return sum;
    }
    refine(f, a, mid, left, rel_tol, depth + 1) + refine(f, mid, b, right, rel_tol, depth + 1)
}
