//! Lorentz quasi-norms, the running-average variant, the interpolation norm
//! and the Hardy sandwich between them.
//!
//! Run with `cargo run --example lorentz_norms`.

use kfunc_lab::kfunc::KProfile;
use kfunc_lab::lorentz::{hardy_sandwich, interp_norm, lorentz_pq, lorentz_pq_starstar};
use kfunc_lab::stepfn::ValueMassList;

fn main() -> kfunc_lab::Result<()> {
    let inf = f64::INFINITY;
    // K(t) = min(t, 1): the profile of a unit level
    let profile = KProfile::from_levels(&ValueMassList::new(vec![(1.0, 1.0)])?);

    println!("k = 1 on (0,1]:");
    println!(
        "  ‖·‖_(2,2) of k      = {}",
        lorentz_pq(profile.k(), 2.0, 2.0)?
    );
    println!(
        "  ‖·‖_(2,1) of k      = {}",
        lorentz_pq(profile.k(), 2.0, 1.0)?
    );
    println!(
        "  ‖·‖_(3,∞) of k      = {}",
        lorentz_pq(profile.k(), 3.0, inf)?
    );

    // the running-average variant integrates K(t)/t instead of k
    println!(
        "  running-average (2,2) = {} (analytic value √2)",
        lorentz_pq_starstar(&profile, 2.0, 2.0)?
    );
    println!(
        "  running-average (2,∞) = {} (sup t^(-1/2)·min(t,1) at t = 1)",
        lorentz_pq_starstar(&profile, 2.0, inf)?
    );

    // interpolation norm with θ = 1 − 1/p is the same integral
    println!(
        "  interpolation θ=1/2, q=∞ = {}",
        interp_norm(&profile, 0.5, inf)?
    );
    println!(
        "  interpolation θ=1/2, q=2 = {}",
        interp_norm(&profile, 0.5, 2.0)?
    );

    // k <= K(t)/t pointwise and Hardy's inequality bound the two norms
    // against each other with constant p'
    println!("\nHardy sandwich on a three-piece profile:");
    let rough = KProfile::from_levels(&ValueMassList::new(vec![
        (4.0, 0.25),
        (2.0, 1.75),
        (0.5, 2.0),
    ])?);
    for (p, q) in [(1.5, 1.0), (2.0, 2.0), (4.0, inf)] {
        let s = hardy_sandwich(&rough, p, q)?;
        println!(
            "  p={p}, q={q}: {:.6} <= {:.6} <= p'·lower = {:.6} (ratio {:.4})",
            s.lower,
            s.upper,
            s.conjugate * s.lower,
            s.ratio.unwrap_or(1.0)
        );
    }
    Ok(())
}
