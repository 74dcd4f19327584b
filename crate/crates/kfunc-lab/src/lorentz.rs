//! Lorentz quasi-norms and the real-interpolation norm of a K-profile.
//!
//! Two families are provided. [`lorentz_pq`] integrates the step function
//! itself (read as a decreasing rearrangement `x*`):
//!
//! ```text
//! ‖x‖_{p,q} = ( ∫_0^∞ [t^{1/p} x*(t)]^q  dt/t )^{1/q}
//! ```
//!
//! with exact per-piece closed forms. [`lorentz_pq_starstar`] replaces
//! `x*` by the running average `x**(t) = K(t)/t` of a profile; each linear
//! piece of `K` is integrated by adaptive Gauss–Legendre quadrature while
//! the first piece (where `K(t) = v₁·t`) and the constant tail are added
//! analytically. The real-interpolation norm with `θ = 1 − 1/p` is the
//! same integral, so [`interp_norm`] is the identical code path.

use crate::kfunc::KProfile;
use crate::quad;
use crate::stepfn::StepFunction;
use crate::{Error, Result};

/// Relative tolerance for the per-piece adaptive quadrature.
pub const QUAD_REL_TOL: f64 = 1e-10;

fn validate_q(q: f64) -> Result<()> {
    if q.is_nan() || q < 1.0 {
        return Err(Error::InvalidParameter("q must lie in [1, ∞]"));
    }
    Ok(())
}

/// Conjugate exponent `p/(p−1)`; `1` for `p = ∞`.
pub fn conjugate(p: f64) -> f64 {
    if p.is_infinite() {
        1.0
    } else {
        p / (p - 1.0)
    }
}

/// Lorentz quasi-norm of a tail-0 step function interpreted as `x*`.
///
/// Finite `q`: exact closed form `Σ_j v_j^q (p/q)(s_j^{q/p} − s_{j-1}^{q/p})`
/// raised to `1/q`. For `q = ∞` the supremum `sup_t t^{1/p}·x*(t)` is
/// attained at right endpoints of pieces. A nonzero tail means the norm is
/// infinite and is rejected; `p = ∞` is supported only with `q = ∞`
/// (essential supremum).
pub fn lorentz_pq(fstar: &StepFunction, p: f64, q: f64) -> Result<f64> {
    if p.is_nan() || p <= 0.0 {
        return Err(Error::InvalidParameter("p must lie in (0, ∞]"));
    }
    validate_q(q)?;
    if fstar.is_zero() {
        return Ok(0.0);
    }
    if fstar.tail() > 0.0 {
        return Err(Error::Divergent("step function has a nonzero tail"));
    }
    if q.is_infinite() {
        if p.is_infinite() {
            return Ok(fstar.values().iter().copied().fold(0.0, f64::max));
        }
        return Ok(fstar
            .pieces()
            .map(|piece| piece.end.powf(1.0 / p) * piece.value)
            .fold(0.0, f64::max));
    }
    if p.is_infinite() {
        return Err(Error::Divergent("p = ∞ requires q = ∞"));
    }
    let qp = q / p;
    let sum: f64 = fstar
        .pieces()
        .map(|piece| piece.value.powf(q) * (p / q) * (piece.end.powf(qp) - piece.start.powf(qp)))
        .sum();
    Ok(sum.powf(1.0 / q))
}

/// Lorentz norm of the running average `x**(t) = K(t)/t` of a profile.
///
/// Requires `p > 1`: the tail behaviour `x**(t) ~ K(∞)/t` makes the
/// integral diverge otherwise. `p = ∞` is supported only with `q = ∞`,
/// where the supremum is `k(0⁺)`.
pub fn lorentz_pq_starstar(profile: &KProfile, p: f64, q: f64) -> Result<f64> {
    if p.is_nan() {
        return Err(Error::InvalidParameter("p must lie in (1, ∞]"));
    }
    validate_q(q)?;
    if p <= 1.0 {
        return Err(Error::Divergent("running-average norm requires p > 1"));
    }
    if profile.is_zero() {
        return Ok(0.0);
    }
    if q.is_infinite() {
        return Ok(sup_weighted_average(profile, p));
    }
    if p.is_infinite() {
        return Err(Error::Divergent("p = ∞ requires q = ∞"));
    }
    Ok(integral_weighted_average(profile, p, q).powf(1.0 / q))
}

/// `sup_t t^{1/p − 1} K(t)` over the piecewise-linear profile.
///
/// On a piece `K(t) = c + v·t` the map `t ↦ t^α (c + v·t)` with
/// `α = 1/p − 1 ∈ [−1, 0)` has a single interior critical point
/// `t* = (p−1)·c/v`; the supremum candidates are the clamped critical
/// point and the piece endpoints. Beyond the support `K` is constant and
/// the weight decays, so the last right endpoint covers the tail.
fn sup_weighted_average(profile: &KProfile, p: f64) -> f64 {
    if p.is_infinite() {
        return profile.initial_slope();
    }
    let alpha = 1.0 / p - 1.0;
    let mut best = 0.0f64;
    let mut k_at_start = 0.0;
    for piece in profile.k().pieces() {
        let v = piece.value;
        let c = k_at_start - v * piece.start;
        let phi = |t: f64| t.powf(alpha) * (c + v * t);
        best = best.max(phi(piece.end));
        if piece.start > 0.0 {
            best = best.max(phi(piece.start));
        }
        if c > 0.0 && v > 0.0 {
            let t_star = (p - 1.0) * c / v;
            if t_star > piece.start && t_star < piece.end {
                best = best.max(phi(t_star));
            }
        }
        k_at_start += v * (piece.end - piece.start);
    }
    best
}

/// `∫_0^∞ [t^{1/p} K(t)/t]^q dt/t` for finite `q`, `1 < p < ∞`.
fn integral_weighted_average(profile: &KProfile, p: f64, q: f64) -> f64 {
    let expo = q / p - q - 1.0;
    let mut total = 0.0;
    let mut k_at_start = 0.0;
    for piece in profile.k().pieces() {
        let v = piece.value;
        if piece.start == 0.0 {
            // K(t) = v·t here, so the integrand is v^q t^{q/p - 1} exactly
            total += v.powf(q) * (p / q) * piece.end.powf(q / p);
        } else {
            let c = k_at_start - v * piece.start;
            let f = |t: f64| (c + v * t).powf(q) * t.powf(expo);
            total += quad::integrate(&f, piece.start, piece.end, QUAD_REL_TOL);
        }
        k_at_start += v * (piece.end - piece.start);
    }
    // constant tail K ≡ K(∞) from the end of the support onwards
    let support_end = profile.k().support_end();
    let k_total = profile.total();
    total += k_total.powf(q) * support_end.powf(q / p - q) / (q - q / p);
    total
}

/// Real-interpolation norm `( ∫ (t^{−θ} K(t))^q dt/t )^{1/q}` of a profile.
///
/// With `p = 1/(1−θ)` this is exactly the running-average Lorentz norm, so
/// it shares that code path.
pub fn interp_norm(profile: &KProfile, theta: f64, q: f64) -> Result<f64> {
    if !(theta > 0.0 && theta < 1.0) {
        return Err(Error::InvalidParameter("theta must lie in (0, 1)"));
    }
    lorentz_pq_starstar(profile, 1.0 / (1.0 - theta), q)
}

/// The two sides of the Hardy comparison for one profile.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HardySandwich {
    /// `‖k‖_{p,q}` with `k` read as `x*`.
    pub lower: f64,
    /// The running-average norm `‖·‖_{(p,q)}`.
    pub upper: f64,
    /// Conjugate exponent `p'`, the sandwich constant.
    pub conjugate: f64,
    /// `upper / lower`; `None` for the zero profile.
    pub ratio: Option<f64>,
}

impl HardySandwich {
    /// `lower <= upper <= p'·lower` up to a relative slack.
    pub fn holds(&self, rel_slack: f64) -> bool {
        let scale = self.upper.max(self.lower).max(f64::MIN_POSITIVE);
        self.lower <= self.upper + rel_slack * scale
            && self.upper <= self.conjugate * self.lower + rel_slack * scale
    }
}

/// Evaluates both Lorentz norms of a profile and returns the sandwich
/// `‖k‖_{p,q} <= ‖·‖_{(p,q)} <= p'·‖k‖_{p,q}` data; `1 < p < ∞`.
///
/// The left inequality is pointwise (`k(t) <= K(t)/t` since `k` is
/// nonincreasing); the right one is the Hardy bound with constant `p'`.
pub fn hardy_sandwich(profile: &KProfile, p: f64, q: f64) -> Result<HardySandwich> {
    if p.is_nan() || p <= 1.0 || p.is_infinite() {
        return Err(Error::InvalidParameter(
            "hardy sandwich requires finite p > 1",
        ));
    }
    let lower = lorentz_pq(profile.k(), p, q)?;
    let upper = lorentz_pq_starstar(profile, p, q)?;
    Ok(HardySandwich {
        lower,
        upper,
        conjugate: conjugate(p),
        ratio: (lower > 0.0).then(|| upper / lower),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::stepfn::ValueMassList;
    use proptest::prelude::*;

    const INF: f64 = f64::INFINITY;

    fn unit_profile() -> KProfile {
        // K(t) = min(t, 1)
        KProfile::from_levels(&ValueMassList::new(vec![(1.0, 1.0)]).unwrap())
    }

    fn step(bp: &[f64], vs: &[f64]) -> StepFunction {
        StepFunction::new(bp.to_vec(), vs.to_vec(), 0.0).unwrap()
    }

    #[test]
    fn pq_examples() {
        let f = step(&[1.0], &[1.0]);
        assert!((lorentz_pq(&f, 2.0, 2.0).unwrap() - 1.0).abs() <= 1e-15);
        assert!((lorentz_pq(&f, 2.0, 1.0).unwrap() - 2.0).abs() <= 1e-15);
        assert!((lorentz_pq(&f, 3.0, INF).unwrap() - 1.0).abs() <= 1e-15);
        // essential supremum
        assert_eq!(
            lorentz_pq(&step(&[1.0, 2.0], &[3.0, 1.0]), INF, INF).unwrap(),
            3.0
        );
    }

    #[test]
    fn pq_divergence_and_validation() {
        let f = step(&[1.0], &[1.0]);
        let tailed = StepFunction::new(vec![1.0], vec![2.0], 1.0).unwrap();
        assert!(matches!(
            lorentz_pq(&tailed, 2.0, 2.0),
            Err(Error::Divergent(_))
        ));
        assert!(matches!(lorentz_pq(&f, INF, 2.0), Err(Error::Divergent(_))));
        assert!(lorentz_pq(&f, 0.0, 2.0).is_err());
        assert!(lorentz_pq(&f, 2.0, 0.5).is_err());
        assert_eq!(lorentz_pq(&StepFunction::zero(), 2.0, 2.0).unwrap(), 0.0);
    }

    /// Brute force for the running-average norms on a log grid; the
    /// independent check behind the frozen values below. The window is
    /// wide enough that the slowest head growth (q/p = 1/4 at p = 4,
    /// q = 1) and tail decay (q/p' = 1/3 at p = 1.5, q = 1) both truncate
    /// below 1e-5 relative.
    fn brute_starstar(profile: &KProfile, p: f64, q: f64) -> f64 {
        let n = 280_000;
        let (lo, hi) = (-24.0f64, 16.0f64);
        let weighted = |t: f64| t.powf(1.0 / p) * profile.eval(t).unwrap() / t;
        if q.is_infinite() {
            return (0..=n)
                .map(|i| weighted(10f64.powf(lo + (hi - lo) * f64::from(i) / f64::from(n))))
                .fold(0.0, f64::max);
        }
        let dln = (hi - lo) / f64::from(n) * std::f64::consts::LN_10;
        let mut sum = 0.0;
        for i in 0..=n {
            let t = 10f64.powf(lo + (hi - lo) * f64::from(i) / f64::from(n));
            let w = if i == 0 || i == n { 0.5 } else { 1.0 };
            sum += w * weighted(t).powf(q) * dln;
        }
        sum.powf(1.0 / q)
    }

    #[test]
    fn starstar_examples() {
        let p = unit_profile();
        // analytic pieces: ∫_0^1 dt + ∫_1^∞ t^{-2} dt = 2
        let got = lorentz_pq_starstar(&p, 2.0, 2.0).unwrap();
        assert!((got - 2.0f64.sqrt()).abs() <= 1e-10, "{got}");
        assert!((got - brute_starstar(&p, 2.0, 2.0)).abs() <= 1e-4);

        // sup t^{-1/2}·min(t, 1) is attained at t = 1
        let got = lorentz_pq_starstar(&p, 2.0, INF).unwrap();
        assert!((got - 1.0).abs() <= 1e-12, "{got}");
        assert!((got - brute_starstar(&p, 2.0, INF)).abs() <= 1e-6);

        assert_eq!(
            lorentz_pq_starstar(&KProfile::zero(), 2.0, 2.0).unwrap(),
            0.0
        );
    }

    #[test]
    fn starstar_matches_brute_force_on_multi_piece_profiles() {
        let profiles = [
            KProfile::from_levels(&ValueMassList::new(vec![(2.0, 1.0), (1.0, 1.0)]).unwrap()),
            KProfile::from_levels(
                &ValueMassList::new(vec![(4.0, 0.25), (2.0, 1.75), (0.5, 2.0)]).unwrap(),
            ),
        ];
        for profile in &profiles {
            for p in [1.5, 2.0, 4.0] {
                for q in [1.0, 2.0, INF] {
                    let got = lorentz_pq_starstar(profile, p, q).unwrap();
                    let brute = brute_starstar(profile, p, q);
                    assert!(
                        (got - brute).abs() <= 2e-4 * brute,
                        "p={p} q={q}: {got} vs {brute}"
                    );
                }
            }
        }
    }

    #[test]
    fn starstar_divergence() {
        let p = unit_profile();
        assert!(matches!(
            lorentz_pq_starstar(&p, 1.0, 2.0),
            Err(Error::Divergent(_))
        ));
        assert!(matches!(
            lorentz_pq_starstar(&p, 0.5, INF),
            Err(Error::Divergent(_))
        ));
        assert!(matches!(
            lorentz_pq_starstar(&p, INF, 2.0),
            Err(Error::Divergent(_))
        ));
        assert_eq!(lorentz_pq_starstar(&p, INF, INF).unwrap(), 1.0);
    }

    #[test]
    fn interp_examples() {
        let p = unit_profile();
        assert!((interp_norm(&p, 0.5, INF).unwrap() - 1.0).abs() <= 1e-12);
        assert!((interp_norm(&p, 0.5, 2.0).unwrap() - 2.0f64.sqrt()).abs() <= 1e-10);
        assert_eq!(interp_norm(&KProfile::zero(), 0.5, 2.0).unwrap(), 0.0);
        assert!(interp_norm(&p, 0.0, 2.0).is_err());
        assert!(interp_norm(&p, 1.0, 2.0).is_err());
    }

    #[test]
    fn hardy_examples() {
        let p = unit_profile();
        let s = hardy_sandwich(&p, 2.0, 2.0).unwrap();
        assert!((s.lower - 1.0).abs() <= 1e-12);
        assert!((s.upper - 2.0f64.sqrt()).abs() <= 1e-10);
        assert_eq!(s.conjugate, 2.0);
        assert!(s.holds(1e-12));

        let s = hardy_sandwich(&p, 2.0, INF).unwrap();
        assert!(s.lower <= s.upper && s.upper <= 2.0 * s.lower);

        let z = hardy_sandwich(&KProfile::zero(), 2.0, 2.0).unwrap();
        assert_eq!((z.lower, z.upper, z.ratio), (0.0, 0.0, None));
        assert!(z.holds(1e-12));
    }

    fn arb_profile() -> impl Strategy<Value = KProfile> {
        prop::collection::vec((1u32..=64, 1u32..=32), 1..8).prop_map(|raw| {
            KProfile::from_levels(
                &ValueMassList::new(
                    raw.into_iter()
                        .map(|(v, m)| (f64::from(v) / 8.0, f64::from(m) / 8.0))
                        .collect(),
                )
                .unwrap(),
            )
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]

        #[test]
        fn pp_norm_is_the_lp_norm(profile in arb_profile(), pq in 1u32..=4) {
            let p = f64::from(pq);
            let norm = lorentz_pq(profile.k(), p, p).unwrap();
            let lp: f64 = profile.k().power(p).unwrap().total_integral();
            let dev = (norm.powf(p) - lp).abs();
            prop_assert!(dev <= 1e-12 * lp.max(1.0), "{} vs {}", norm.powf(p), lp);
        }

        #[test]
        fn hardy_sandwich_holds(profile in arb_profile(), pi in 0usize..3, qi in 0usize..4) {
            let p = [1.5, 2.0, 4.0][pi];
            let q = [1.0, 2.0, p, INF][qi];
            let s = hardy_sandwich(&profile, p, q).unwrap();
            prop_assert!(s.holds(1e-9), "{:?}", s);
        }

        #[test]
        fn interp_equals_running_average_path(profile in arb_profile(), ti in 1u32..=3, qi in 0usize..3) {
            let theta = f64::from(ti) / 4.0;
            let q = [1.0, 2.0, INF][qi];
            let via_theta = interp_norm(&profile, theta, q).unwrap();
            let via_p = lorentz_pq_starstar(&profile, 1.0 / (1.0 - theta), q).unwrap();
            prop_assert!((via_theta - via_p).abs() <= 1e-12 * via_p.max(1.0));
        }

        #[test]
        fn norms_are_one_homogeneous(profile in arb_profile(), ci in 1u32..=16) {
            let c = f64::from(ci) / 4.0;
            let scaled = profile.scale(c).unwrap();
            for (norm, scaled_norm) in [
                (lorentz_pq(profile.k(), 2.0, 1.0).unwrap(), lorentz_pq(scaled.k(), 2.0, 1.0).unwrap()),
                (lorentz_pq_starstar(&profile, 2.0, 2.0).unwrap(), lorentz_pq_starstar(&scaled, 2.0, 2.0).unwrap()),
                (interp_norm(&profile, 0.25, INF).unwrap(), interp_norm(&scaled, 0.25, INF).unwrap()),
            ] {
                prop_assert!((scaled_norm - c * norm).abs() <= 1e-9 * (c * norm).max(1e-9));
            }
        }
    }
}
