//! Direct K-functional oracle for the weighted-scalar testbed.
//!
//! For coordinates `(μ_i, (a_i, b_i, x_i))` the K-functional of the couple
//! `(ℓ₁-type sum with weights μ_i·a_i, sup with weights b_i)` is, by
//! definition, the infimum over decompositions `x_i = x0_i + x1_i` of
//!
//! ```text
//! Σ_i μ_i · a_i · |x0_i|  +  t · max_i b_i · |x1_i|
//! ```
//!
//! Fixing the sup level `m = max_i b_i·|x1_i|` solves the inner infimum in
//! closed form (shrink each `|x0_i|` to `max(0, |x_i| - m/b_i)`), leaving
//!
//! ```text
//! cost(m) = Σ_i μ_i · a_i · max(0, |x_i| - m/b_i) + t·m
//! ```
//!
//! which is convex piecewise-linear in `m >= 0`, so the exact minimum is
//! attained at a kink: `m ∈ {0} ∪ {b_i·|x_i|}`. This path never touches
//! the rearrangement machinery, which makes it an independent witness for
//! the allocation identity.

use crate::alloc::SimpleVectorFunction;
use crate::kfunc::{KProfile, WeightedScalarCouple};
use crate::{Error, Result};

/// A list of weighted scalar coordinates `(μ_i, couple_i)`.
#[derive(Debug, Clone, PartialEq)]
pub struct ScalarInstance {
    coords: Vec<(f64, WeightedScalarCouple)>,
}

/// Worst deviations between two evaluation routes over a set of budgets.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct DeviationReport {
    pub max_abs: f64,
    pub max_rel: f64,
}

/// Relative deviation with the larger magnitude as the reference scale;
/// zero when both sides agree exactly (including 0 vs 0).
pub fn relative_deviation(a: f64, b: f64) -> f64 {
    if a == b {
        return 0.0;
    }
    (a - b).abs() / a.abs().max(b.abs())
}

impl ScalarInstance {
    pub fn new(coords: Vec<(f64, WeightedScalarCouple)>) -> Result<Self> {
        for &(mu, _) in &coords {
            if !mu.is_finite() || mu <= 0.0 {
                return Err(Error::NonPositive {
                    what: "coordinate mass",
                    value: mu,
                });
            }
        }
        Ok(Self { coords })
    }

    pub fn coords(&self) -> &[(f64, WeightedScalarCouple)] {
        &self.coords
    }

    pub fn is_empty(&self) -> bool {
        self.coords.is_empty()
    }

    /// `cost(m)` at sup level `m >= 0`; convex piecewise-linear in `m`.
    pub fn decomposition_cost(&self, m: f64, t: f64) -> f64 {
        let shrinkage: f64 = self
            .coords
            .iter()
            .map(|(mu, c)| mu * c.shrinkage_cost(m))
            .sum();
        shrinkage + t * m
    }

    /// Exact K-functional value from the infimum definition: the minimum
    /// of `cost(m)` over the kink levels `{0} ∪ {b_i·|x_i|}`. Ties break
    /// toward the smaller level, which is not observable in the value.
    pub fn direct_k(&self, t: f64) -> Result<f64> {
        if !t.is_finite() || t < 0.0 {
            return Err(Error::NegativeValue {
                what: "budget",
                value: t,
            });
        }
        let mut best = self.decomposition_cost(0.0, t);
        for (_, c) in &self.coords {
            let cost = self.decomposition_cost(c.b * c.x.abs(), t);
            if cost < best {
                best = cost;
            }
        }
        Ok(best)
    }

    /// The same instance as cells `(μ_i, scalar-couple profile)` for the
    /// allocation route.
    pub fn to_vector_function(&self) -> SimpleVectorFunction {
        SimpleVectorFunction::new(
            self.coords
                .iter()
                .map(|(mu, c)| (*mu, KProfile::from_couple(c)))
                .collect(),
        )
        .expect("coordinate masses are positive")
    }
}

/// Compares the infimum route against the rearrangement-merge route at the
/// given budgets and reports the worst absolute and relative deviation.
pub fn allocation_identity_check(inst: &ScalarInstance, ts: &[f64]) -> Result<DeviationReport> {
    let profile = inst.to_vector_function().k_profile();
    let mut report = DeviationReport::default();
    for &t in ts {
        let direct = inst.direct_k(t)?;
        let merged = profile.eval(t)?;
        report.max_abs = report.max_abs.max((direct - merged).abs());
        report.max_rel = report.max_rel.max(relative_deviation(direct, merged));
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn inst(coords: &[(f64, f64, f64, f64)]) -> ScalarInstance {
        ScalarInstance::new(
            coords
                .iter()
                .map(|&(mu, a, b, x)| (mu, WeightedScalarCouple::new(a, b, x).unwrap()))
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn direct_examples() {
        let two = inst(&[(1.0, 1.0, 1.0, 1.0), (1.0, 1.0, 2.0, 1.0)]);
        // kink scan over m ∈ {0, 1, 2}: cost(1) = 1.5 is the minimum
        assert_eq!(two.direct_k(1.0).unwrap(), 1.5);

        let single = inst(&[(1.0, 1.0, 1.0, 1.0)]);
        assert_eq!(single.direct_k(0.5).unwrap(), 0.5);

        // t = 0: everything goes to the sup side at zero cost
        assert_eq!(two.direct_k(0.0).unwrap(), 0.0);
        assert_eq!(inst(&[]).direct_k(3.0).unwrap(), 0.0);
    }

    #[test]
    fn identity_check_examples() {
        let two = inst(&[(1.0, 1.0, 1.0, 1.0), (1.0, 1.0, 2.0, 1.0)]);
        let report = allocation_identity_check(&two, &[0.25, 0.5, 1.0, 2.0, 4.0]).unwrap();
        assert!(report.max_rel <= 1e-9, "{report:?}");

        let empty = ScalarInstance::new(Vec::new()).unwrap();
        let report = allocation_identity_check(&empty, &[1.0, 2.0]).unwrap();
        assert_eq!(report.max_abs, 0.0);

        let single = inst(&[(2.0, 0.5, 3.0, -1.5)]);
        let report = allocation_identity_check(&single, &[0.1, 1.0, 10.0]).unwrap();
        assert!(report.max_rel <= 1e-12, "{report:?}");
    }

    fn arb_instance() -> impl Strategy<Value = ScalarInstance> {
        prop::collection::vec(
            (
                -4.0f64..4.0,
                -4.0f64..4.0,
                -4.0f64..4.0,
                prop::num::f64::NORMAL.prop_map(|x| x % 4.0),
            ),
            0..8,
        )
        .prop_map(|raw| {
            ScalarInstance::new(
                raw.into_iter()
                    .map(|(lmu, la, lb, x)| {
                        (
                            lmu.exp2(),
                            WeightedScalarCouple::new(la.exp2(), lb.exp2(), x).unwrap(),
                        )
                    })
                    .collect(),
            )
            .unwrap()
        })
    }

    proptest! {
        #[test]
        fn direct_is_concave_nondecreasing_in_t(i in arb_instance(), t in 0.01f64..32.0, dt in 0.01f64..8.0) {
            let k0 = i.direct_k(t).unwrap();
            let k1 = i.direct_k(t + dt).unwrap();
            let k2 = i.direct_k(t + 2.0 * dt).unwrap();
            let tol = 1e-12 * k2.max(1.0);
            prop_assert!(k1 >= k0 - tol);
            prop_assert!(k2 - k1 <= k1 - k0 + tol);
        }

        #[test]
        fn direct_is_homogeneous(i in arb_instance(), t in 0.01f64..32.0, lam in -4.0f64..4.0) {
            let scaled = ScalarInstance::new(
                i.coords()
                    .iter()
                    .map(|&(mu, c)| {
                        (mu, WeightedScalarCouple::new(c.a, c.b, lam * c.x).unwrap())
                    })
                    .collect(),
            ).unwrap();
            let lhs = scaled.direct_k(t).unwrap();
            let rhs = lam.abs() * i.direct_k(t).unwrap();
            prop_assert!(relative_deviation(lhs, rhs) <= 1e-12);
        }

        #[test]
        fn kink_scan_beats_fine_grid(i in arb_instance(), t in 0.01f64..32.0) {
            let scanned = i.direct_k(t).unwrap();
            // 10x-finer uniform grid up to the largest kink never does better
            let m_max = i
                .coords()
                .iter()
                .map(|(_, c)| c.b * c.x.abs())
                .fold(0.0f64, f64::max);
            let mut grid_best = i.decomposition_cost(0.0, t);
            let n = 10 * (i.coords().len().max(1) + 1);
            for j in 0..=n {
                let m = m_max * (j as f64) / (n as f64);
                grid_best = grid_best.min(i.decomposition_cost(m, t));
            }
            prop_assert!(scanned <= grid_best + 1e-12 * grid_best.max(1.0));
        }

        #[test]
        fn allocation_identity_holds(i in arb_instance()) {
            let ts: Vec<f64> = (0..16)
                .map(|k| (-6.0 + 12.0 * (k as f64) / 15.0).exp2())
                .collect();
            let report = allocation_identity_check(&i, &ts).unwrap();
            prop_assert!(report.max_rel <= 1e-9, "{:?}", report);
        }
    }
}
