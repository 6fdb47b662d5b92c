//! Named function descriptors and the grid monotonicity harness.
//!
//! The descriptor catalog makes the analysis functions addressable by name
//! from the command line and the demo page: the derivative quotient `phi`,
//! the three ratio functions of `t` behind the bound certificates, the
//! combination gap `varphi_p`, and its two slope witnesses.
//!
//! `monotone_ratio_check` is the numerical face of the monotone quotient
//! rule: if `f1'/f2'` is monotone then so is `(f1 - f1(a))/(f2 - f2(a))`.
//! The check certifies (it does not prove) monotonicity of the shifted
//! quotient on a grid, returning the first offending pair as witness.

use crate::bounds::{bound_ratio, CertificateId};
use crate::error::{Error, Result};
use crate::pair::{MAX_UNIT_X, T_STAR};
use crate::phi::{phi_eval, varphi, varphi_slope_f, varphi_slope_g, PhiMethod};

/// A function from the analysis catalog, addressable by name.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum NamedFunction {
    /// Derivative quotient `phi(t)` on `(0, t*)`.
    Phi,
    /// Ratio function of the H-Q certificate as a function of `t`.
    RatioF,
    /// Ratio function of the G-Q certificate.
    RatioG,
    /// Ratio function of the H-C certificate.
    RatioH,
    /// Combination gap `varphi_p(x)` on `(0, 1)`.
    Varphi { p: f64 },
    /// Increasing slope witness for the `p = 5/9` gap case.
    VarphiSlopeF,
    /// Increasing slope witness for the `p = 0` gap case.
    VarphiSlopeG,
}

impl NamedFunction {
    pub const NAMES: [&'static str; 7] = [
        "phi",
        "f-ratio",
        "g-ratio",
        "h-ratio",
        "varphi_p",
        "varphi-slope-f",
        "varphi-slope-g",
    ];

    /// Parses a catalog name; `param` supplies the exponent for `varphi_p`
    /// (default `5/9`, the critical one).
    pub fn parse(name: &str, param: Option<f64>) -> Result<Self> {
        match name {
            "phi" => Ok(NamedFunction::Phi),
            "f-ratio" => Ok(NamedFunction::RatioF),
            "g-ratio" => Ok(NamedFunction::RatioG),
            "h-ratio" => Ok(NamedFunction::RatioH),
            "varphi_p" => Ok(NamedFunction::Varphi {
                p: param.unwrap_or(5.0 / 9.0),
            }),
            "varphi-slope-f" => Ok(NamedFunction::VarphiSlopeF),
            "varphi-slope-g" => Ok(NamedFunction::VarphiSlopeG),
            other => Err(Error::UnknownDescriptor(other.to_string())),
        }
    }

    /// Open interval on which the function is defined.
    pub fn domain(&self) -> (f64, f64) {
        match self {
            NamedFunction::Phi
            | NamedFunction::RatioF
            | NamedFunction::RatioG
            | NamedFunction::RatioH => (0.0, T_STAR),
            _ => (0.0, 1.0),
        }
    }

    pub fn eval(&self, v: f64) -> Result<f64> {
        match *self {
            NamedFunction::Phi => phi_eval(v, PhiMethod::Direct),
            NamedFunction::RatioF => bound_ratio(CertificateId::HQ, unit_x(v)?),
            NamedFunction::RatioG => bound_ratio(CertificateId::GQ, unit_x(v)?),
            NamedFunction::RatioH => bound_ratio(CertificateId::HC, unit_x(v)?),
            NamedFunction::Varphi { p } => varphi(v, p),
            NamedFunction::VarphiSlopeF => varphi_slope_f(v),
            NamedFunction::VarphiSlopeG => varphi_slope_g(v),
        }
    }
}

fn unit_x(t: f64) -> Result<f64> {
    if t > 0.0 && t < T_STAR {
        // guards against sinh(t) rounding up to exactly 1 near the endpoint
        Ok(t.sinh().min(MAX_UNIT_X))
    } else {
        Err(Error::OutOfDomain {
            value: t,
            domain: "(0, log(1+sqrt 2))",
        })
    }
}

// Stable building blocks for the numerators/denominators of the three
// t-ratio functions, total at t = 0.

/// `ln(cosh t)`.
pub fn ln_cosh(t: f64) -> f64 {
    t.cosh().ln()
}

/// `ln(sinh(t)/t)`, with a series for small `t` and 0 at `t = 0`.
pub fn ln_sinhc(t: f64) -> f64 {
    if t == 0.0 {
        return 0.0;
    }
    let u = t * t;
    if t.abs() < 1e-2 {
        (u / 6.0 * (1.0 + u / 20.0 * (1.0 + u / 42.0))).ln_1p()
    } else {
        (t.sinh() / t).ln()
    }
}

/// `ln(1 - sinh^2 t)` for `t` in `[0, t*)`.
pub fn ln_co_sinh_sq(t: f64) -> f64 {
    let s = t.sinh();
    ((1.0 - s) * (1.0 + s)).ln()
}

/// Numerator `ln(cosh t) - ln(sinh(t)/t)` shared by the H-Q and G-Q ratio
/// functions.
pub fn ratio_fg_numerator(t: f64) -> f64 {
    ln_cosh(t) - ln_sinhc(t)
}

/// Denominator of the H-Q ratio function.
pub fn ratio_f_denominator(t: f64) -> f64 {
    ln_cosh(t) - ln_co_sinh_sq(t)
}

/// Denominator of the G-Q ratio function.
pub fn ratio_g_denominator(t: f64) -> f64 {
    ln_cosh(t) - 0.5 * ln_co_sinh_sq(t)
}

/// Numerator of the H-C ratio function.
pub fn ratio_h_numerator(t: f64) -> f64 {
    ln_cosh(t) - 0.5 * ln_sinhc(t)
}

/// Denominator of the H-C ratio function (same as the G-Q one).
pub fn ratio_h_denominator(t: f64) -> f64 {
    ratio_g_denominator(t)
}

/// Verdict of a grid monotonicity check of a shifted quotient.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum MonotoneVerdict {
    /// Strictly increasing on the grid, or constant (flagged) — a constant
    /// quotient counts as non-decreasing.
    Increasing { constant: bool, min_gap: f64 },
    Decreasing { min_gap: f64 },
    /// First adjacent grid pair breaking the established direction.
    Violation {
        x_first: f64,
        x_second: f64,
        q_first: f64,
        q_second: f64,
    },
}

/// Certifies monotonicity of `(f1(x) - f1(a)) / (f2(x) - f2(a))` on a grid
/// of `grid` interior points of `(a, b)`.
///
/// The anchor values are taken at `a` itself, so the supplied functions must
/// be total there (the catalog numerators and denominators above all vanish
/// at 0 by construction). Non-finite quotient values are reported as
/// violations with the offending abscissa.
pub fn monotone_ratio_check(
    f1: impl Fn(f64) -> f64,
    f2: impl Fn(f64) -> f64,
    interval: (f64, f64),
    grid: usize,
) -> MonotoneVerdict {
    let (a, b) = interval;
    let f1a = f1(a);
    let f2a = f2(a);
    let h = (b - a) / (grid + 1) as f64;

    let mut prev_x = f64::NAN;
    let mut prev_q = f64::NAN;
    let mut direction = 0i8;
    let mut constant = true;
    let mut min_gap = f64::INFINITY;

    for i in 1..=grid {
        let x = a + i as f64 * h;
        let q = (f1(x) - f1a) / (f2(x) - f2a);
        if !q.is_finite() {
            return MonotoneVerdict::Violation {
                x_first: prev_x,
                x_second: x,
                q_first: prev_q,
                q_second: q,
            };
        }
        if i > 1 {
            let gap = q - prev_q;
            if gap != 0.0 {
                constant = false;
                let dir = if gap > 0.0 { 1 } else { -1 };
                if direction == 0 {
                    direction = dir;
                } else if dir != direction {
                    return MonotoneVerdict::Violation {
                        x_first: prev_x,
                        x_second: x,
                        q_first: prev_q,
                        q_second: q,
                    };
                }
                min_gap = min_gap.min(gap.abs());
            } else if direction != 0 {
                // a flat step inside a strictly monotone run breaks strictness
                return MonotoneVerdict::Violation {
                    x_first: prev_x,
                    x_second: x,
                    q_first: prev_q,
                    q_second: q,
                };
            }
        }
        prev_x = x;
        prev_q = q;
    }

    if constant {
        MonotoneVerdict::Increasing {
            constant: true,
            min_gap: 0.0,
        }
    } else if direction > 0 {
        MonotoneVerdict::Increasing {
            constant: false,
            min_gap,
        }
    } else {
        MonotoneVerdict::Decreasing { min_gap }
    }
}
