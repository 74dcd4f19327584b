//! Product-space rearrangements and power-dilation embeddings.
//!
//! For a simple vector function with cells `(μ_i, k_i)` the scalar
//! function `Ψ(s, ω) = k(f(ω), s)` on the product measure `dμ ds` has the
//! decreasing rearrangement [`psi_star`]: the weighted rearrangement merge
//! of the cell derivatives. Integrating it reproduces the allocation
//! K-functional, and its Lorentz norms reproduce the interpolation norms
//! of the vector function.
//!
//! The power dilation `ω ↦ ω^{−1/p}·x` over `(0, ∞)` (and its discrete
//! counterpart `n ↦ n^{−1/p}·x`) embeds a single profile into the product
//! space. Its interpolation norm has the closed form
//! `p'·(∫ k^p ds)^{1/p}` ([`dilation_norm_exact`]); the same value is
//! approached from below by discretizing the dilation on a logarithmic
//! grid and running the allocation machinery
//! ([`dilation_norm_numeric`]).

use crate::alloc::SimpleVectorFunction;
use crate::kfunc::KProfile;
use crate::lorentz::{conjugate, interp_norm, lorentz_pq_starstar};
use crate::stepfn::{merge_rearranged, StepFunction, ValueMassList};
use crate::{Error, Result};

/// Decreasing rearrangement of `Ψ(s, ω)` over the product measure.
#[derive(Debug, Clone, PartialEq)]
pub struct PsiRearrangement {
    psi_star: StepFunction,
}

impl PsiRearrangement {
    pub fn as_step(&self) -> &StepFunction {
        &self.psi_star
    }

    pub fn into_profile(self) -> KProfile {
        KProfile::new(self.psi_star).expect("merged rearrangement is monotone with tail 0")
    }
}

/// Rearranges the product-space function of `f`: cell `i` contributes its
/// derivative `k_i` with lengths scaled by `μ_i`.
pub fn psi_star(f: &SimpleVectorFunction) -> PsiRearrangement {
    let merged = merge_rearranged(f.cells().iter().map(|(mu, p)| (*mu, p.k())))
        .expect("cell profiles have tail 0 and positive mass");
    PsiRearrangement { psi_star: merged }
}

/// Worst absolute gap between `∫_0^t Ψ*` and the allocation K-functional
/// over the given budgets. Both sides are exact, so this should vanish to
/// rounding.
pub fn psi_reduction_max_dev(f: &SimpleVectorFunction, ts: &[f64]) -> Result<f64> {
    let psi = psi_star(f);
    let profile = f.k_profile();
    let mut worst = 0.0f64;
    for &t in ts {
        let lhs = psi.as_step().integrate(t)?;
        let rhs = profile.eval(t)?;
        worst = worst.max((lhs - rhs).abs());
    }
    Ok(worst)
}

/// Two norm evaluations that an identity claims are equal.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NormComparison {
    pub lhs: f64,
    pub rhs: f64,
    pub deviation: f64,
}

/// Interpolation norm of the vector function versus the running-average
/// Lorentz norm of its product-space rearrangement, `p = 1/(1−θ)`.
pub fn interp_vs_psi_norm(f: &SimpleVectorFunction, theta: f64, q: f64) -> Result<NormComparison> {
    let lhs = interp_norm(&f.k_profile(), theta, q)?;
    let rhs = lorentz_pq_starstar(&psi_star(f).into_profile(), 1.0 / (1.0 - theta), q)?;
    Ok(NormComparison {
        lhs,
        rhs,
        deviation: (lhs - rhs).abs(),
    })
}

/// `‖Ψ_f‖_{L_p}` computed by tensorization: `(Σ_i μ_i ∫ k_i^p ds)^{1/p}`.
pub fn tensorized_lp_norm(f: &SimpleVectorFunction, p: f64) -> Result<f64> {
    if !p.is_finite() || p <= 0.0 {
        return Err(Error::NonPositive {
            what: "exponent",
            value: p,
        });
    }
    let mut sum = 0.0;
    for (mu, profile) in f.cells() {
        sum += mu * profile.k().power(p)?.total_integral();
    }
    Ok(sum.powf(1.0 / p))
}

/// Closed-form interpolation norm of the continuous power dilation of a
/// profile: `p'·(∫_0^∞ k(s)^p ds)^{1/p}` for `p > 1`.
pub fn dilation_norm_exact(profile: &KProfile, p: f64) -> Result<f64> {
    if !p.is_finite() || p <= 1.0 {
        return Err(Error::InvalidParameter(
            "dilation norm requires finite p > 1",
        ));
    }
    let integral = profile.k().power(p)?.total_integral();
    Ok(conjugate(p) * integral.powf(1.0 / p))
}

/// Discretizes the power dilation `ω ↦ ω^{−1/p}·x` on a logarithmic grid
/// over `[omega_min, omega_max]`.
///
/// Each cell `(g_j, g_{j+1}]` becomes a vector-function cell with mass
/// `g_{j+1} − g_j` and the profile scaled by the exact cell average of
/// `ω^{−1/p}`. Homogeneity makes the per-cell K-integral exact for any
/// cell-wise-constant budget split, so the allocation value of the
/// discretization is the supremum over cell-wise-constant test functions:
/// a guaranteed lower bound for the dilation norm that can only grow when
/// the window widens or a cell is split.
pub fn dilation_discretization(
    profile: &KProfile,
    p: f64,
    omega_min: f64,
    omega_max: f64,
    cells_per_decade: u32,
) -> Result<SimpleVectorFunction> {
    if !p.is_finite() || p <= 1.0 {
        return Err(Error::InvalidParameter(
            "dilation norm requires finite p > 1",
        ));
    }
    if !(omega_min > 0.0 && omega_min < omega_max && omega_max.is_finite()) {
        return Err(Error::InvalidParameter(
            "window must satisfy 0 < omega_min < omega_max < ∞",
        ));
    }
    if cells_per_decade == 0 {
        return Err(Error::InvalidParameter("cells_per_decade must be >= 1"));
    }
    let pp = conjugate(p);
    let cpd = f64::from(cells_per_decade);
    let decades = (omega_max / omega_min).log10();
    let raw = decades * cpd;
    let cells = if (raw - raw.round()).abs() < 1e-9 {
        raw.round()
    } else {
        raw.ceil()
    } as u64;
    let mut parts = Vec::with_capacity(cells as usize);
    for j in 0..cells {
        let g0 = omega_min * 10f64.powf(j as f64 / cpd);
        let g1 = (omega_min * 10f64.powf((j + 1) as f64 / cpd)).min(omega_max);
        if g1 <= g0 {
            break;
        }
        // exact average of ω^{−1/p} over the cell
        let scale = pp * (g1.powf(1.0 / pp) - g0.powf(1.0 / pp)) / (g1 - g0);
        parts.push((g1 - g0, profile.scale(scale)?));
    }
    SimpleVectorFunction::new(parts)
}

/// Interpolation norm (`θ = 1 − 1/p`, `q = ∞`) of the discretized power
/// dilation. Converges to [`dilation_norm_exact`] from below as the window
/// widens and the grid refines.
pub fn dilation_norm_numeric(
    profile: &KProfile,
    p: f64,
    omega_min: f64,
    omega_max: f64,
    cells_per_decade: u32,
) -> Result<f64> {
    if profile.is_zero() {
        // still validate the window
        dilation_discretization(&KProfile::zero(), p, omega_min, omega_max, cells_per_decade)?;
        return Ok(0.0);
    }
    let discretized = dilation_discretization(profile, p, omega_min, omega_max, cells_per_decade)?;
    interp_norm(&discretized.k_profile(), 1.0 - 1.0 / p, f64::INFINITY)
}

/// A claimed identity between two computations.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct IdentityPair {
    pub lhs: f64,
    pub rhs: f64,
}

impl IdentityPair {
    pub fn relative_deviation(&self) -> f64 {
        crate::oracle::relative_deviation(self.lhs, self.rhs)
    }
}

/// Distribution identity of the continuous dilation: for level data
/// `(v_i, m_i)` and `t > 0`,
///
/// ```text
/// t^p · m({|ω^{−1/p} f| > t})  =  Σ_i m_i · v_i^p .
/// ```
///
/// The left side goes through the ω-section measure `{ω : ω < (v/t)^p}`;
/// the right side is the plain `L_p` mass.
pub fn dilation_distribution_identity(
    levels: &ValueMassList,
    p: f64,
    t: f64,
) -> Result<IdentityPair> {
    validate_pt(p, t)?;
    let section: f64 = levels
        .pairs()
        .iter()
        .map(|&(v, m)| m * (v / t).powf(p))
        .sum();
    let lhs = t.powf(p) * section;
    let rhs = levels.pairs().iter().map(|&(v, m)| m * v.powf(p)).sum();
    Ok(IdentityPair { lhs, rhs })
}

/// Largest integer strictly below `r` (0 for `r <= 1`); the bracket used
/// by the discrete distribution identity, including `[4] = 3` at integer
/// arguments.
pub fn integers_strictly_below(r: f64) -> f64 {
    if r.is_nan() || r <= 1.0 {
        return 0.0;
    }
    let f = r.floor();
    if f == r {
        f - 1.0
    } else {
        f
    }
}

/// Distribution identity of the discrete dilation `n ↦ n^{−1/p}·f`:
///
/// ```text
/// m'({|n^{−1/p} f| > t})  =  Σ_i m_i · [ v_i^p / t^p ]
/// ```
///
/// with the strict bracket of [`integers_strictly_below`]. The left side
/// counts the surviving integers directly (the sequence is truncated at
/// the first `n` with `n^{−1/p}·v <= t`, i.e. `v^p <= n·t^p`; all later
/// terms contribute nothing).
pub fn discrete_dilation_distribution(
    levels: &ValueMassList,
    p: f64,
    t: f64,
) -> Result<IdentityPair> {
    validate_pt(p, t)?;
    let tp = t.powf(p);
    let mut lhs = 0.0;
    let mut rhs = 0.0;
    for &(v, m) in levels.pairs() {
        let vp = v.powf(p);
        if vp / tp > 1e9 {
            return Err(Error::InvalidParameter(
                "level/threshold ratio too large for exact counting",
            ));
        }
        let mut count = 0.0;
        let mut n = 1.0;
        while vp > n * tp {
            count += 1.0;
            n += 1.0;
        }
        lhs += m * count;
        rhs += m * integers_strictly_below(vp / tp);
    }
    Ok(IdentityPair { lhs, rhs })
}

/// `(Σ_i m_i · v_i^p)^{1/p}`, the `L_p` norm of the level data.
pub fn level_lp_norm(levels: &ValueMassList, p: f64) -> Result<f64> {
    if !p.is_finite() || p <= 0.0 {
        return Err(Error::NonPositive {
            what: "exponent",
            value: p,
        });
    }
    Ok(levels
        .pairs()
        .iter()
        .map(|&(v, m)| m * v.powf(p))
        .sum::<f64>()
        .powf(1.0 / p))
}

fn validate_pt(p: f64, t: f64) -> Result<()> {
    if !p.is_finite() || p <= 0.0 {
        return Err(Error::NonPositive {
            what: "exponent",
            value: p,
        });
    }
    if !t.is_finite() || t <= 0.0 {
        return Err(Error::NonPositive {
            what: "threshold",
            value: t,
        });
    }
    Ok(())
}
