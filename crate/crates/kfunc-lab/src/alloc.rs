//! Vector-valued and measure-weighted K-functionals as budget allocations.
//!
//! For a simple vector function with cells `(μ_i, K_i)` the K-functional is
//!
//! ```text
//! K(t) = sup { Σ_i μ_i · K_i(t_i)  :  t_i >= 0,  Σ_i μ_i · t_i <= t }
//! ```
//!
//! a sup-convolution of concave profiles under a shared budget. Its
//! derivative is the decreasing rearrangement of the union of the cell
//! derivatives with lengths scaled by `μ_i` (substituting `u = μ_i · t_i`
//! turns the constraint into a plain sum and stretches the `s`-axis of
//! `k_i` by `μ_i`), so the whole profile is computed exactly by
//! [`merge_rearranged`](crate::stepfn::merge_rearranged) instead of by
//! iterative optimization. [`grid_alloc_oracle`] evaluates the same
//! supremum by brute-force enumeration for cross-checking.

use crate::kfunc::KProfile;
use crate::stepfn::merge_rearranged;
use crate::{Error, Result};

/// Largest cell count the exhaustive oracle accepts before refusing.
pub const ORACLE_CELL_LIMIT: usize = 6;

/// A finite list of cells `(μ_i, K-profile)`; the discretization of an
/// element of `L₁(A₀) + L∞(A₁)` by a simple function.
#[derive(Debug, Clone, PartialEq)]
pub struct SimpleVectorFunction {
    cells: Vec<(f64, KProfile)>,
}

impl SimpleVectorFunction {
    /// Validates `μ_i > 0` for every cell. An empty list is the zero
    /// function.
    pub fn new(cells: Vec<(f64, KProfile)>) -> Result<Self> {
        for &(mu, _) in &cells {
            if !mu.is_finite() || mu <= 0.0 {
                return Err(Error::NonPositive {
                    what: "cell mass",
                    value: mu,
                });
            }
        }
        Ok(Self { cells })
    }

    pub fn empty() -> Self {
        Self { cells: Vec::new() }
    }

    pub fn cells(&self) -> &[(f64, KProfile)] {
        &self.cells
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    /// The exact K-profile of the whole function: the merged rearrangement
    /// of the cell derivatives. Its value at `t` is the allocation
    /// supremum above.
    pub fn k_profile(&self) -> KProfile {
        self.truncated_profile(self.cells.len())
    }

    /// K-profile of the first `min(n, len)` cells; evaluating it gives the
    /// truncation used in the coordinate-projection convergence check.
    pub fn truncated_profile(&self, n: usize) -> KProfile {
        let take = n.min(self.cells.len());
        let merged = merge_rearranged(self.cells[..take].iter().map(|(mu, p)| (*mu, p.k())))
            .expect("cell profiles have tail 0 and positive mass");
        KProfile::new(merged).expect("merged rearrangement is monotone with tail 0")
    }

    /// `K(t)` of the first `min(n, len)` cells; nondecreasing in `n` and
    /// equal to the full value once `n >= len`.
    pub fn truncated_eval(&self, n: usize, t: f64) -> Result<f64> {
        self.truncated_profile(n).eval(t)
    }
}

/// Brute-force evaluation of the allocation supremum at budget `t`.
///
/// With `steps >= 1` the search runs over the discrete simplex
/// `t_i = j_i · t / (steps · μ_i)`, `Σ j_i <= steps`: a lower bound on the
/// exact value that converges as `steps → ∞` and is exact whenever the
/// grid hits the optimizing breakpoints.
///
/// `steps = 0` selects the breakpoint-aligned search: each coordinate
/// ranges over `{0} ∪ breakpoints(k_i)` and the leftover budget is granted
/// to each coordinate in turn. The optimum of a concave piecewise-linear
/// allocation problem has every coordinate at a kink except at most one,
/// so this enumeration is exact.
///
/// Refuses instances with more than [`ORACLE_CELL_LIMIT`] cells.
pub fn grid_alloc_oracle(f: &SimpleVectorFunction, t: f64, steps: usize) -> Result<f64> {
    if f.len() > ORACLE_CELL_LIMIT {
        return Err(Error::OracleTooLarge {
            cells: f.len(),
            limit: ORACLE_CELL_LIMIT,
        });
    }
    if !t.is_finite() || t < 0.0 {
        return Err(Error::NegativeValue {
            what: "budget",
            value: t,
        });
    }
    if f.is_empty() || t == 0.0 {
        return Ok(0.0);
    }
    if steps == 0 {
        breakpoint_search(f.cells(), t)
    } else {
        simplex_search(f.cells(), t, steps)
    }
}

fn simplex_search(cells: &[(f64, KProfile)], t: f64, steps: usize) -> Result<f64> {
    let mut best = 0.0f64;
    let mut stack = vec![(0usize, steps, 0.0f64)];
    // depth-first over (cell index, remaining grid steps, value so far)
    while let Some((idx, remaining, value)) = stack.pop() {
        if idx == cells.len() {
            best = best.max(value);
            continue;
        }
        let (mu, profile) = &cells[idx];
        for j in 0..=remaining {
            let ti = (j as f64) * t / ((steps as f64) * mu);
            let v = value + mu * profile.eval(ti)?;
            stack.push((idx + 1, remaining - j, v));
        }
    }
    Ok(best)
}

fn breakpoint_search(cells: &[(f64, KProfile)], t: f64) -> Result<f64> {
    let candidates: Vec<Vec<f64>> = cells
        .iter()
        .map(|(_, p)| {
            let mut c = vec![0.0];
            c.extend_from_slice(p.k().breakpoints());
            c
        })
        .collect();
    let mut assignment = vec![0.0f64; cells.len()];
    let mut best = 0.0f64;
    descend(
        cells,
        &candidates,
        t,
        0,
        0.0,
        0.0,
        &mut assignment,
        &mut best,
    )?;
    Ok(best)
}

#[allow(clippy::too_many_arguments)]
fn descend(
    cells: &[(f64, KProfile)],
    candidates: &[Vec<f64>],
    t: f64,
    idx: usize,
    spent: f64,
    value: f64,
    assignment: &mut Vec<f64>,
    best: &mut f64,
) -> Result<()> {
    if idx == cells.len() {
        *best = (*best).max(value);
        // grant the leftover budget to each coordinate in turn
        let leftover = (t - spent).max(0.0);
        if leftover > 0.0 {
            for (i, (mu, profile)) in cells.iter().enumerate() {
                let ti = assignment[i];
                let bumped = value + mu * (profile.eval(ti + leftover / mu)? - profile.eval(ti)?);
                *best = (*best).max(bumped);
            }
        }
        return Ok(());
    }
    let (mu, profile) = &cells[idx];
    for &ti in &candidates[idx] {
        let cost = mu * ti;
        if spent + cost > t {
            continue;
        }
        assignment[idx] = ti;
        let v = value + mu * profile.eval(ti)?;
        descend(
            cells,
            candidates,
            t,
            idx + 1,
            spent + cost,
            v,
            assignment,
            best,
        )?;
    }
    Ok(())
}
