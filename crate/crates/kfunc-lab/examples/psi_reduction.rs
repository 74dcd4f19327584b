//! Reducing a vector-valued function to scalar product-space data: the
//! rearranged Ψ carries the full K-profile and all interpolation norms.
//!
//! Run with `cargo run --example psi_reduction`.

use kfunc_lab::alloc::SimpleVectorFunction;
use kfunc_lab::embed::{interp_vs_psi_norm, psi_reduction_max_dev, psi_star, tensorized_lp_norm};
use kfunc_lab::kfunc::{KProfile, WeightedScalarCouple};
use kfunc_lab::lorentz::lorentz_pq;
use kfunc_lab::stepfn::ValueMassList;

fn main() -> kfunc_lab::Result<()> {
    let f = SimpleVectorFunction::new(vec![
        (
            0.5,
            KProfile::from_levels(&ValueMassList::new(vec![(3.0, 1.0), (1.0, 2.0)])?),
        ),
        (
            2.0,
            KProfile::from_couple(&WeightedScalarCouple::new(2.0, 0.5, -1.5)?),
        ),
        (
            1.0,
            KProfile::from_levels(&ValueMassList::new(vec![(2.5, 0.25)])?),
        ),
    ])?;

    // Ψ(s, ω) = k(f(ω), s) rearranged over the product measure dμ ds
    let psi = psi_star(&f);
    println!(
        "Ψ* has {} pieces, support up to {}",
        psi.as_step().piece_count(),
        psi.as_step().support_end()
    );

    // equimeasurability with the weighted union of cell derivatives
    println!("\ndistribution check (product measure vs weighted union):");
    for v in [0.5, 1.0, 2.0] {
        let union: f64 = f
            .cells()
            .iter()
            .map(|(mu, p)| mu * p.k().distribution(v))
            .sum();
        println!(
            "  |{{Ψ > {v}}}| = {} = Σ μ_i·|{{k_i > {v}}}| = {}",
            psi.as_step().distribution(v),
            union
        );
    }

    // integrating Ψ* reproduces the allocation K-functional
    let ts: Vec<f64> = (0..16)
        .map(|k| (-6.0 + 0.8 * f64::from(k)).exp2())
        .collect();
    println!(
        "\nmax |∫_0^t Ψ* − K(t)| over 16 budgets = {:e}",
        psi_reduction_max_dev(&f, &ts)?
    );

    // and the interpolation norms agree with the product-space Lorentz norms
    for (theta, q) in [(0.25, 1.0), (0.5, 2.0), (0.75, f64::INFINITY)] {
        let cmp = interp_vs_psi_norm(&f, theta, q)?;
        println!(
            "θ={theta}, q={q}: interp = {:.9}, Ψ-norm = {:.9}, dev = {:e}",
            cmp.lhs, cmp.rhs, cmp.deviation
        );
    }

    // at p = q = 1/(1−θ) the product-space L_p norm tensorizes exactly
    let theta = 0.5;
    let p = 1.0 / (1.0 - theta);
    let tensorized = tensorized_lp_norm(&f, p)?;
    let psi_lp = lorentz_pq(psi_star(&f).as_step(), p, p)?;
    println!("\ntensorized L_{p} norm = {tensorized:.12} = ‖Ψ*‖_(p,p) = {psi_lp:.12}");
    Ok(())
}
