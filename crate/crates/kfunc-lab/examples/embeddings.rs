//! Power-dilation embeddings: the closed-form interpolation norm, its
//! discretized lower bound, and the exact distribution identities of the
//! continuous and discrete dilations.
//!
//! Run with `cargo run --example embeddings`.

use kfunc_lab::embed::{
    dilation_distribution_identity, dilation_norm_exact, dilation_norm_numeric,
    discrete_dilation_distribution, integers_strictly_below, level_lp_norm,
};
use kfunc_lab::kfunc::KProfile;
use kfunc_lab::stepfn::ValueMassList;

fn main() -> kfunc_lab::Result<()> {
    // dilating a profile x along ω ↦ ω^{-1/p}·x has interpolation norm
    // p'·(∫ k^p)^{1/p}; for k = 1 on (0,1] and p = 2 that is exactly 2
    let unit = KProfile::from_levels(&ValueMassList::new(vec![(1.0, 1.0)])?);
    let p = 2.0;
    let exact = dilation_norm_exact(&unit, p)?;
    println!("closed form for the unit profile, p = 2: {exact}");

    println!("\ndiscretized on a log grid (lower bound, monotone in both knobs):");
    for (wmin, wmax, cpd) in [
        (1e-3, 1e3, 4),
        (1e-3, 1e3, 8),
        (1e-6, 1e6, 8),
        (1e-6, 1e6, 16),
    ] {
        let numeric = dilation_norm_numeric(&unit, p, wmin, wmax, cpd)?;
        println!(
            "  window [{wmin:e}, {wmax:e}], {cpd:>2} cells/decade: {numeric:.9}  (gap {:.2e})",
            (exact - numeric) / exact
        );
    }

    // continuous dilation: t^p·m({|ω^{-1/p} f| > t}) equals the L_p mass
    let levels = ValueMassList::new(vec![(2.0, 3.0), (0.5, 1.0)])?;
    let pair = dilation_distribution_identity(&levels, p, 1.25)?;
    println!(
        "\ncontinuous distribution identity at t = 1.25: {} = {}",
        pair.lhs, pair.rhs
    );
    let lp = level_lp_norm(&levels, p)?;
    println!("L_p norm of the levels: {lp}");

    // discrete dilation n ↦ n^{-1/p}·f counts with the strict bracket
    // [r] = largest integer below r, so [4] = 3
    println!(
        "\nstrict bracket: [2.5] = {}, [4] = {}, [1] = {}",
        integers_strictly_below(2.5),
        integers_strictly_below(4.0),
        integers_strictly_below(1.0),
    );
    for t in [1.0, 0.5, 0.25] {
        let pair = discrete_dilation_distribution(&levels, p, t)?;
        let weak = t * pair.lhs.powf(1.0 / p);
        println!(
            "  t = {t}: count = {}, bracket = {}, t·count^(1/p) = {weak:.6} <= {lp:.6}",
            pair.lhs, pair.rhs
        );
    }
    println!("the weak norm approaches the L_p norm as t → 0");
    Ok(())
}
