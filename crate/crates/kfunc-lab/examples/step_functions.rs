//! Step-function algebra: evaluation, integration, distribution functions,
//! decreasing rearrangement and the weighted rearrangement merge.
//!
//! Run with `cargo run --example step_functions`.

use kfunc_lab::stepfn::{merge_rearranged, rearrange, StepFunction, ValueMassList};

fn main() -> kfunc_lab::Result<()> {
    // value 3 on (0,1], value 1 on (1,3], zero beyond
    let f = StepFunction::new(vec![1.0, 3.0], vec![3.0, 1.0], 0.0)?;
    println!("f = 3 on (0,1], 1 on (1,3]");
    println!("  f(0.5) = {}   (first piece)", f.evaluate(0.5)?);
    println!(
        "  f(1)   = {}   (pieces are right-closed)",
        f.evaluate(1.0)?
    );
    println!("  f(2)   = {}", f.evaluate(2.0)?);
    println!("  ∫_0^2 f = {}  (3·1 + 1·1)", f.integrate(2.0)?);
    println!("  |{{f > 2}}| = {}", f.distribution(2.0));
    println!("  |{{f > 0.5}}| = {}", f.distribution(0.5));

    // the same function described as an unordered level multiset
    let levels = ValueMassList::new(vec![(1.0, 2.0), (3.0, 1.0)])?;
    let rearranged = rearrange(&levels);
    println!(
        "\nrearrange {{(1,2),(3,1)}} reproduces f: {}",
        rearranged == f
    );
    println!(
        "  equimeasurable: |{{·>0.5}}| = {} = mass above 0.5 = {}",
        rearranged.distribution(0.5),
        levels.mass_above(0.5)
    );
    println!(
        "  L1 preserved: ∫ = {} = Σ value·mass = {}",
        rearranged.total_integral(),
        levels.l1()
    );

    // weighted disjoint union: weights multiply interval lengths
    let a = StepFunction::new(vec![1.0], vec![1.0], 0.0)?;
    let b = StepFunction::new(vec![0.5], vec![2.0], 0.0)?;
    let merged = merge_rearranged([(1.0, &a), (1.0, &b)])?;
    println!("\nmerge [(1, 1 on (0,1]), (1, 2 on (0,0.5])]:");
    println!(
        "  breakpoints {:?}, values {:?}",
        merged.breakpoints(),
        merged.values()
    );
    let doubled = merge_rearranged([(2.0, &a)])?;
    println!(
        "merge [(2, 1 on (0,1])] stretches the support to {:?}",
        doubled.breakpoints()
    );

    // pointwise powers keep the breakpoints
    let squared = f.power(2.0)?;
    println!("\nf² has values {:?} on the same pieces", squared.values());
    Ok(())
}
