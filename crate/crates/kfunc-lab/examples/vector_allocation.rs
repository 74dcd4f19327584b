//! The vector-valued K-functional as a budget allocation, solved exactly by
//! rearrangement merge and cross-checked by brute force.
//!
//! Run with `cargo run --example vector_allocation`.

use kfunc_lab::alloc::{grid_alloc_oracle, SimpleVectorFunction};
use kfunc_lab::kfunc::{KProfile, WeightedScalarCouple};

fn main() -> kfunc_lab::Result<()> {
    // cells (μ, K-profile); the value at budget t is
    //   sup { Σ μ_i K_i(t_i) : t_i >= 0, Σ μ_i t_i <= t }
    let f = SimpleVectorFunction::new(vec![
        (
            1.0,
            KProfile::from_couple(&WeightedScalarCouple::new(1.0, 1.0, 1.0)?),
        ),
        (
            1.0,
            KProfile::from_couple(&WeightedScalarCouple::new(1.0, 2.0, 1.0)?),
        ),
    ])?;

    let profile = f.k_profile();
    println!(
        "merged derivative: values {:?} with breakpoints {:?}",
        profile.k().values(),
        profile.k().breakpoints()
    );
    println!("K(1) = {} (hand computation gives 3/2)", profile.eval(1.0)?);

    // the brute-force oracle enumerates allocations on a grid; a grid that
    // hits the derivative breakpoints is exact, anything else is a lower
    // bound
    for steps in [1, 2, 3, 10] {
        println!(
            "  grid oracle, {steps} steps: {}",
            grid_alloc_oracle(&f, 1.0, steps)?
        );
    }
    println!(
        "  breakpoint-aligned oracle:  {}",
        grid_alloc_oracle(&f, 1.0, 0)?
    );

    // keeping the first n cells only can only lower the value, and reaches
    // the full value at n = len
    println!("\ntruncation at t = 1:");
    for n in 1..=2 {
        println!("  first {n} cell(s): {}", f.truncated_eval(n, 1.0)?);
    }

    // measure weights scale interval lengths, not values
    let weighted = SimpleVectorFunction::new(vec![
        (
            2.0,
            KProfile::from_couple(&WeightedScalarCouple::new(1.0, 1.0, 1.0)?),
        ),
        (
            1.0,
            KProfile::from_couple(&WeightedScalarCouple::new(1.0, 1.0, 1.0)?),
        ),
    ])?;
    let wp = weighted.k_profile();
    println!(
        "\nweighted cells [(2, min(t,1)), (1, min(t,1))]: k = {:?} on (0, {:?}]",
        wp.k().values(),
        wp.k().breakpoints()
    );
    println!("K(2) = {}", wp.eval(2.0)?);
    Ok(())
}
