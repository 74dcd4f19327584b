//! K-functional profiles.
//!
//! A [`KProfile`] stores the concave nondecreasing map `t ↦ K(t)` with
//! `K(0) = 0` through its derivative: a nonincreasing step function `k`
//! with tail 0, so that `K(t) = ∫_0^t k(s) ds`. Only elements with a
//! finite `K(∞)` (the A₀-norm bound) are representable, which is exactly
//! the class every operation here integrates over.

use crate::stepfn::{rearrange, StepFunction, ValueMassList};
use crate::{Error, Result};

/// One coordinate couple `(ℝ, a·|·|; ℝ, b·|·|)` carrying the element `x`.
///
/// The split `x = x0 + x1` costs `a·|x0| + t·b·|x1|`, so the optimal cost
/// is `|x|·min(a, t·b)`: the infimum is attained by putting all of `x`
/// into whichever side is cheaper.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WeightedScalarCouple {
    pub a: f64,
    pub b: f64,
    pub x: f64,
}

impl WeightedScalarCouple {
    pub fn new(a: f64, b: f64, x: f64) -> Result<Self> {
        for (what, value) in [("couple weight a", a), ("couple weight b", b)] {
            if !value.is_finite() || value <= 0.0 {
                return Err(Error::NonPositive { what, value });
            }
        }
        if !x.is_finite() {
            return Err(Error::NonFinite {
                what: "element value x",
                value: x,
            });
        }
        Ok(Self { a, b, x })
    }

    /// Cost of the decomposition capped at level `x1 <= m/b`, plus `t·m`.
    pub(crate) fn shrinkage_cost(&self, m: f64) -> f64 {
        self.a * (self.x.abs() - m / self.b).max(0.0)
    }
}

/// A K-functional profile, stored via its derivative `k`.
#[derive(Debug, Clone, PartialEq)]
pub struct KProfile {
    k: StepFunction,
}

impl KProfile {
    /// Wraps a derivative `k`, which must be nonincreasing with tail 0.
    pub fn new(k: StepFunction) -> Result<Self> {
        if k.tail() != 0.0 {
            return Err(Error::NonzeroTail("KProfile"));
        }
        if !k.is_nonincreasing() {
            return Err(Error::NotMonotone("KProfile"));
        }
        Ok(Self { k })
    }

    /// The profile of the zero element: `K ≡ 0`.
    pub fn zero() -> Self {
        Self {
            k: StepFunction::zero(),
        }
    }

    /// Profile of a weighted scalar couple: `K(t) = |x|·min(a, t·b)`, i.e.
    /// `k = b·|x|` on `(0, a/b]` and 0 beyond.
    pub fn from_couple(c: &WeightedScalarCouple) -> Self {
        if c.x == 0.0 {
            return Self::zero();
        }
        let k = StepFunction::new(vec![c.a / c.b], vec![c.b * c.x.abs()], 0.0)
            .expect("couple invariants give a valid step function");
        Self { k }
    }

    /// Profile of a simple function in the `(L1, L∞)` couple: `k` is the
    /// decreasing rearrangement of the level data, so `K(t) = ∫_0^t f*`.
    pub fn from_levels(levels: &ValueMassList) -> Self {
        Self {
            k: rearrange(levels),
        }
    }

    /// The derivative `k`.
    pub fn k(&self) -> &StepFunction {
        &self.k
    }

    pub fn is_zero(&self) -> bool {
        self.k.is_zero()
    }

    /// `K(t) = ∫_0^t k` for `t >= 0`; concave, nondecreasing, `K(0) = 0`.
    pub fn eval(&self, t: f64) -> Result<f64> {
        self.k.integrate(t)
    }

    /// `K(∞) = ‖k‖_{L¹}`, the A₀-norm bound of the element.
    pub fn total(&self) -> f64 {
        self.k.total_integral()
    }

    /// `k(0⁺)`, the steepest slope of `K`.
    pub fn initial_slope(&self) -> f64 {
        self.k.value_at_zero()
    }

    /// The running average `K(t)/t` for `t > 0`; nonincreasing in `t`.
    pub fn running_average(&self, t: f64) -> Result<f64> {
        if !t.is_finite() || t <= 0.0 {
            return Err(Error::NonPositive {
                what: "running-average point",
                value: t,
            });
        }
        Ok(self.eval(t)? / t)
    }

    /// Pointwise scaling of the profile by `c >= 0` (homogeneity of `K`).
    pub fn scale(&self, c: f64) -> Result<KProfile> {
        Ok(Self {
            k: self.k.scale(c)?,
        })
    }
}
