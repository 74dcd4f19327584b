//! Exact algebra of nonnegative step functions on `(0, ∞)`.
//!
//! A [`StepFunction`] is finitely piecewise constant: it takes the value
//! `v_j` on the half-open interval `(s_{j-1}, s_j]` (with `s_0 = 0`
//! implicit) and a constant `tail` value on `(s_n, ∞)`. Everything is
//! immutable after construction, and every constructor canonicalizes
//! (zero-length pieces dropped, adjacent equal values merged, a last value
//! equal to the tail absorbed into it), so structural equality is
//! meaningful.
//!
//! Breakpoint arithmetic stays closed under the operations provided here:
//! rearrangement and merging only sort values and add masses, so the
//! results are exact up to binary64 rounding. There is no floating grid
//! anywhere.

use crate::{Error, Result};

/// One half-open piece `(start, end]` of a step function together with its
/// value.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Piece {
    pub start: f64,
    pub end: f64,
    pub value: f64,
}

/// Finitely piecewise-constant nonnegative function on `(0, ∞)`.
#[derive(Debug, Clone, PartialEq)]
pub struct StepFunction {
    /// Strictly increasing positive breakpoints `s_1 < … < s_n`.
    breakpoints: Vec<f64>,
    /// `values[j]` is taken on `(s_{j-1}, s_j]`.
    values: Vec<f64>,
    /// Value on `(s_n, ∞)`.
    tail: f64,
}

impl StepFunction {
    /// Builds a step function from raw pieces and canonicalizes it.
    ///
    /// `values[j]` is the value on `(breakpoints[j-1], breakpoints[j]]`;
    /// `tail` is the value beyond the last breakpoint. Breakpoints must be
    /// finite, positive and strictly increasing; values and the tail must
    /// be finite and nonnegative.
    pub fn new(breakpoints: Vec<f64>, values: Vec<f64>, tail: f64) -> Result<Self> {
        if breakpoints.len() != values.len() {
            return Err(Error::LengthMismatch {
                breakpoints: breakpoints.len(),
                values: values.len(),
            });
        }
        let mut prev = 0.0;
        for &s in &breakpoints {
            if !s.is_finite() || s <= prev {
                return Err(Error::InvalidBreakpoints);
            }
            prev = s;
        }
        for &v in values.iter().chain(std::iter::once(&tail)) {
            if !v.is_finite() {
                return Err(Error::NonFinite {
                    what: "step value",
                    value: v,
                });
            }
            if v < 0.0 {
                return Err(Error::NegativeValue {
                    what: "step value",
                    value: v,
                });
            }
        }
        Ok(Self::canonicalize(breakpoints, values, tail))
    }

    /// The zero function.
    pub fn zero() -> Self {
        Self {
            breakpoints: Vec::new(),
            values: Vec::new(),
            tail: 0.0,
        }
    }

    /// The constant function `c` on all of `(0, ∞)`.
    pub fn constant(c: f64) -> Result<Self> {
        Self::new(Vec::new(), Vec::new(), c)
    }

    fn canonicalize(breakpoints: Vec<f64>, values: Vec<f64>, tail: f64) -> Self {
        let mut bp = Vec::with_capacity(breakpoints.len());
        let mut vs: Vec<f64> = Vec::with_capacity(values.len());
        for (s, v) in breakpoints.into_iter().zip(values) {
            if vs.last() == Some(&v) {
                // same value as the previous piece: extend it
                *bp.last_mut().unwrap() = s;
            } else {
                bp.push(s);
                vs.push(v);
            }
        }
        // a trailing run equal to the tail belongs to the tail
        while vs.last() == Some(&tail) {
            vs.pop();
            bp.pop();
        }
        Self {
            breakpoints: bp,
            values: vs,
            tail,
        }
    }

    pub fn breakpoints(&self) -> &[f64] {
        &self.breakpoints
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn tail(&self) -> f64 {
        self.tail
    }

    /// Number of stored pieces (excluding the tail).
    pub fn piece_count(&self) -> usize {
        self.values.len()
    }

    /// True for the identically-zero function.
    pub fn is_zero(&self) -> bool {
        self.values.is_empty() && self.tail == 0.0
    }

    /// End of the last stored piece (`0` when there is none).
    pub fn support_end(&self) -> f64 {
        self.breakpoints.last().copied().unwrap_or(0.0)
    }

    /// The value on the first piece, i.e. the limit from the right at 0.
    pub fn value_at_zero(&self) -> f64 {
        self.values.first().copied().unwrap_or(self.tail)
    }

    /// Iterates over the stored pieces as `(start, end]`-intervals.
    pub fn pieces(&self) -> impl Iterator<Item = Piece> + '_ {
        self.breakpoints
            .iter()
            .zip(&self.values)
            .scan(0.0, |start, (&end, &value)| {
                let piece = Piece {
                    start: *start,
                    end,
                    value,
                };
                *start = end;
                Some(piece)
            })
    }

    /// Point evaluation at `s > 0`.
    ///
    /// Pieces are right-closed: the value at a breakpoint `s_j` is `v_j`.
    pub fn evaluate(&self, s: f64) -> Result<f64> {
        if !s.is_finite() || s <= 0.0 {
            return Err(Error::NonPositive {
                what: "evaluation point",
                value: s,
            });
        }
        // first breakpoint >= s owns the piece containing s
        let idx = self.breakpoints.partition_point(|&b| b < s);
        Ok(if idx < self.values.len() {
            self.values[idx]
        } else {
            self.tail
        })
    }

    /// Exact integral over `(0, t]`; `t = ∞` gives [`Self::total_integral`].
    pub fn integrate(&self, t: f64) -> Result<f64> {
        if t.is_nan() || t < 0.0 {
            return Err(Error::NegativeValue {
                what: "integration endpoint",
                value: t,
            });
        }
        if t.is_infinite() {
            return Ok(self.total_integral());
        }
        let mut acc = 0.0;
        for piece in self.pieces() {
            if t <= piece.start {
                return Ok(acc);
            }
            acc += piece.value * (piece.end.min(t) - piece.start);
        }
        if t > self.support_end() {
            acc += self.tail * (t - self.support_end());
        }
        Ok(acc)
    }

    /// Integral over all of `(0, ∞)`; `+∞` when the tail is nonzero.
    pub fn total_integral(&self) -> f64 {
        if self.tail > 0.0 {
            return f64::INFINITY;
        }
        self.pieces().map(|p| p.value * (p.end - p.start)).sum()
    }

    /// Lebesgue measure of `{s > 0 : f(s) > v}`; `+∞` iff `tail > v`.
    pub fn distribution(&self, v: f64) -> f64 {
        if self.tail > v {
            return f64::INFINITY;
        }
        self.pieces()
            .filter(|p| p.value > v)
            .map(|p| p.end - p.start)
            .sum()
    }

    /// Pointwise `p`-th power; breakpoints are preserved.
    pub fn power(&self, p: f64) -> Result<StepFunction> {
        if !p.is_finite() || p <= 0.0 {
            return Err(Error::NonPositive {
                what: "exponent",
                value: p,
            });
        }
        StepFunction::new(
            self.breakpoints.clone(),
            self.values.iter().map(|v| v.powf(p)).collect(),
            self.tail.powf(p),
        )
    }

    /// Pointwise scaling by `c >= 0`.
    pub fn scale(&self, c: f64) -> Result<StepFunction> {
        if !c.is_finite() || c < 0.0 {
            return Err(Error::NegativeValue {
                what: "scale factor",
                value: c,
            });
        }
        StepFunction::new(
            self.breakpoints.clone(),
            self.values.iter().map(|v| v * c).collect(),
            self.tail * c,
        )
    }

    /// True when `v_1 >= v_2 >= … >= v_n >= tail`.
    pub fn is_nonincreasing(&self) -> bool {
        self.values.windows(2).all(|w| w[0] >= w[1])
            && self.values.last().is_none_or(|&v| v >= self.tail)
    }

    /// Level decomposition `(value, piece length)` of the stored pieces.
    ///
    /// Zero-valued pieces carry no information for rearrangement and are
    /// skipped. The tail is ignored; use on tail-0 functions.
    pub fn level_masses(&self) -> ValueMassList {
        let pairs = self
            .pieces()
            .filter(|p| p.value > 0.0)
            .map(|p| (p.value, p.end - p.start))
            .collect();
        ValueMassList { pairs }
    }
}

/// A finite multiset of `(value, mass)` pairs: the level decomposition of a
/// simple function. Order is irrelevant.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct ValueMassList {
    pairs: Vec<(f64, f64)>,
}

impl ValueMassList {
    /// Validates `value >= 0`, `mass > 0` (both finite) for every pair.
    pub fn new(pairs: Vec<(f64, f64)>) -> Result<Self> {
        for &(v, m) in &pairs {
            if !v.is_finite() || v < 0.0 {
                return Err(Error::NegativeValue {
                    what: "level value",
                    value: v,
                });
            }
            if !m.is_finite() || m <= 0.0 {
                return Err(Error::NonPositive {
                    what: "level mass",
                    value: m,
                });
            }
        }
        Ok(Self { pairs })
    }

    pub fn pairs(&self) -> &[(f64, f64)] {
        &self.pairs
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn total_mass(&self) -> f64 {
        self.pairs.iter().map(|&(_, m)| m).sum()
    }

    /// `Σ value·mass`, the L¹ integral of the represented function.
    pub fn l1(&self) -> f64 {
        self.pairs.iter().map(|&(v, m)| v * m).sum()
    }

    /// Total mass of levels strictly above `v`.
    pub fn mass_above(&self, v: f64) -> f64 {
        self.pairs
            .iter()
            .filter(|&&(value, _)| value > v)
            .map(|&(_, m)| m)
            .sum()
    }
}

/// Decreasing rearrangement of a level decomposition.
///
/// Sorts the pairs by value descending and lays their masses out as
/// consecutive intervals starting at 0. The result is equimeasurable with
/// the input: `result.distribution(v) = Σ {mass : value > v}` for every
/// `v >= 0`. Ties between equal values coalesce; zero values vanish into
/// the tail.
pub fn rearrange(levels: &ValueMassList) -> StepFunction {
    let mut sorted: Vec<(f64, f64)> = levels.pairs.clone();
    sorted.sort_by(|a, b| b.0.partial_cmp(&a.0).expect("values are finite"));
    let mut breakpoints = Vec::with_capacity(sorted.len());
    let mut values = Vec::with_capacity(sorted.len());
    let mut pos = 0.0;
    for (v, m) in sorted {
        pos += m;
        breakpoints.push(pos);
        values.push(v);
    }
    StepFunction::canonicalize(breakpoints, values, 0.0)
}

/// Decreasing rearrangement of a weighted disjoint union of step functions.
///
/// Part `i` contributes each of its pieces with the interval length
/// multiplied by `weight_i`; the result is the rearrangement of the
/// concatenated level decompositions, so its distribution at `v` equals
/// `Σ_i weight_i · f_i.distribution(v)`. Exact, with no discretization grid.
///
/// Every part must have tail 0 (finite support) and positive weight.
pub fn merge_rearranged<'a, I>(parts: I) -> Result<StepFunction>
where
    I: IntoIterator<Item = (f64, &'a StepFunction)>,
{
    let mut pairs = Vec::new();
    for (weight, f) in parts {
        if !weight.is_finite() || weight <= 0.0 {
            return Err(Error::NonPositive {
                what: "merge weight",
                value: weight,
            });
        }
        if f.tail() != 0.0 {
            return Err(Error::NonzeroTail("merge_rearranged"));
        }
        for piece in f.pieces() {
            if piece.value > 0.0 {
                pairs.push((piece.value, weight * (piece.end - piece.start)));
            }
        }
    }
    Ok(rearrange(&ValueMassList { pairs }))
}
