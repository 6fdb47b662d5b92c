use crate::asinh::asinh_stable;
use crate::error::{Error, Result};

/// `log(1 + sqrt(2))`, the value of `asinh(1)`.
///
/// Every mean scaled by the arithmetic mean becomes a one-variable function of
/// `x = (a - b)/(a + b)`; under the substitution `x = sinh(t)` the variable
/// `t = asinh(x)` ranges over `(0, T_STAR)`.
pub const T_STAR: f64 = 0.881_373_587_019_543;

/// Largest value the normalized half-gap can take: strongly unbalanced pairs
/// would otherwise round `(a - b)/(a + b)` to exactly 1.
pub(crate) const MAX_UNIT_X: f64 = 1.0 - f64::EPSILON / 2.0;

/// An ordered pair of positive reals, the arguments of every mean.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PositivePair {
    a: f64,
    b: f64,
}

impl PositivePair {
    /// Both arguments must be positive and finite.
    pub fn new(a: f64, b: f64) -> Result<Self> {
        if a > 0.0 && b > 0.0 && a.is_finite() && b.is_finite() {
            Ok(Self { a, b })
        } else {
            Err(Error::NonPositiveInput { a, b })
        }
    }

    pub fn a(&self) -> f64 {
        self.a
    }

    pub fn b(&self) -> f64 {
        self.b
    }

    pub fn swapped(&self) -> Self {
        Self {
            a: self.b,
            b: self.a,
        }
    }

    pub fn is_diagonal(&self) -> bool {
        self.a == self.b
    }

    /// Arithmetic mean `(a + b)/2`.
    pub fn arithmetic(&self) -> f64 {
        0.5 * (self.a + self.b)
    }

    /// Normalized half-gap `x = (a - b)/(a + b)`, always in `(-1, 1)`.
    ///
    /// Pairs whose magnitudes differ by more than ~16 orders would round to
    /// exactly 1; the value is clamped just inside the interval and
    /// [`co_gap`](Self::co_gap) carries the lost information.
    pub fn x(&self) -> f64 {
        if self.a == self.b {
            return 0.0;
        }
        ((self.a - self.b) / (self.a + self.b)).clamp(-MAX_UNIT_X, MAX_UNIT_X)
    }

    pub fn abs_x(&self) -> f64 {
        self.x().abs()
    }

    /// `1 - |x|` computed as `2 min(a,b)/(a + b)`.
    ///
    /// For strongly unbalanced pairs this keeps full relative accuracy where
    /// `1.0 - abs_x()` would round to zero.
    pub fn co_gap(&self) -> f64 {
        2.0 * self.a.min(self.b) / (self.a + self.b)
    }
}

/// The substitution variable pair `(x, t)` with `x = sinh(t)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ScaledVariable {
    x: f64,
    t: f64,
}

impl ScaledVariable {
    /// Requires `x` in `(0, 1)`; `t = asinh(x)` then lies in `(0, T_STAR)`.
    pub fn from_x(x: f64) -> Result<Self> {
        if x > 0.0 && x < 1.0 {
            Ok(Self {
                x,
                t: asinh_stable(x),
            })
        } else {
            Err(Error::OutOfDomain {
                value: x,
                domain: "(0, 1)",
            })
        }
    }

    /// Scaled variable of a non-diagonal pair, using `|x|`.
    pub fn from_pair(pair: &PositivePair) -> Result<Self> {
        if pair.is_diagonal() {
            return Err(Error::DegeneratePair);
        }
        Self::from_x(pair.abs_x())
    }

    pub fn x(&self) -> f64 {
        self.x
    }

    pub fn t(&self) -> f64 {
        self.t
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_non_positive_and_non_finite() {
        assert!(PositivePair::new(0.0, 1.0).is_err());
        assert!(PositivePair::new(1.0, -2.0).is_err());
        assert!(PositivePair::new(f64::NAN, 1.0).is_err());
        assert!(PositivePair::new(1.0, f64::INFINITY).is_err());
        assert!(PositivePair::new(1e-300, 1e300).is_ok());
    }

    #[test]
    fn x_is_in_open_unit_interval() {
        let p = PositivePair::new(1e9, 1e-9).unwrap();
        assert!(p.x() < 1.0 && p.x() > 0.99);
        // raw division would round to exactly 1 for this pair
        let extreme = PositivePair::new(1e300, 1e-300).unwrap();
        assert!(extreme.x() < 1.0);
        assert!(extreme.swapped().x() > -1.0);
        assert_eq!(PositivePair::new(3.0, 3.0).unwrap().x(), 0.0);
        let q = PositivePair::new(2.0, 1.0).unwrap();
        assert_eq!(q.x(), 1.0 / 3.0);
        assert_eq!(q.swapped().x(), -1.0 / 3.0);
    }

    #[test]
    fn co_gap_keeps_precision_for_unbalanced_pairs() {
        let p = PositivePair::new(1.0, 1e-60).unwrap();
        assert!((p.co_gap() - 2e-60).abs() < 1e-75);
        // 1 - |x| resolves no further than one ulp of 1, sixty orders away
        assert!(1.0 - p.abs_x() > 1e-17);
        assert!(p.co_gap() < 1e-59);
    }

    #[test]
    fn scaled_variable_matches_sinh() {
        let sv = ScaledVariable::from_x(0.5).unwrap();
        assert!((sv.t().sinh() - 0.5).abs() < 1e-15);
        assert!(sv.t() > 0.0 && sv.t() < T_STAR);
        assert!(ScaledVariable::from_x(1.0).is_err());
        assert!(ScaledVariable::from_x(0.0).is_err());
    }

    #[test]
    fn t_star_is_asinh_of_one() {
        assert_eq!(T_STAR, asinh_stable(1.0));
    }
}
