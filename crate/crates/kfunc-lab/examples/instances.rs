//! Building, serializing and evaluating problem instances: the same JSON
//! documents the `kfunc-lab` binary consumes.
//!
//! Run with `cargo run --example instances`.

use kfunc_lab::instance::{Coordinate, Instance};
use kfunc_lab::lorentz::interp_norm;

fn main() -> kfunc_lab::Result<()> {
    let instance = Instance::new(vec![
        Coordinate::Scalar {
            mu: 1.0,
            a: 1.0,
            b: 1.0,
            x: 1.0,
        },
        Coordinate::Profile {
            mu: 2.0,
            k: vec![(0.5, 2.0), (1.25, 0.5)],
        },
        Coordinate::Levels {
            mu: 1.0,
            levels: vec![(3.0, 1.0), (1.0, 2.0)],
        },
    ]);

    let text = instance.to_json();
    println!("serialized instance:\n{text}\n");

    let parsed = Instance::from_json(&text)?;
    assert_eq!(parsed, instance);
    println!("round-trips losslessly: true");

    let profile = parsed.to_vector_function()?.k_profile();
    println!("\nbudget table (what `k-eval --t ...` prints):");
    println!("t,K_t");
    for t in [0.25, 0.5, 1.0, 2.0, 4.0, 8.0] {
        println!("{},{}", t, profile.eval(t)?);
    }

    println!("\ninterpolation norm θ=1/2, q=2 (what `norm --kind interp` prints):");
    println!("{}", interp_norm(&profile, 0.5, 2.0)?);
    Ok(())
}
