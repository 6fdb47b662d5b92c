//! The even-series quotient `phi` and the combination-gap functions.
//!
//! `phi(t) = [3 - cosh(2t)][sinh(2t) - 2t] / (2 t sinh^2(t) [5 + cosh(2t)])`
//! is the derivative ratio that controls the H-Q bound; it is available both
//! in closed hyperbolic form and as a quotient of truncated even series with
//! exact rational coefficients. The `varphi` family measures the gap
//! `p ln(G/A) + (1-p) ln(C/A) - ln(M/A)` whose sign at `p = 5/9` and `p = 0`
//! settles the G-C bound.

use std::sync::OnceLock;

use num_traits::{ToPrimitive, Zero};

use crate::asinh::asinh_stable;
use crate::error::{Error, Result};
use crate::means::{ln_scaled, MeanKind};
use crate::pair::T_STAR;
use crate::series::{coeff, CoefficientSequence, Rational, SequencePair, SequenceRole};

/// Conversion that survives numerators and denominators far outside the f64
/// range (factorials at index 200 are ~10^870): the quotient is brought into
/// a 64-bit window by a power-of-two shift first.
pub fn rational_to_f64(r: &Rational) -> f64 {
    if r.is_zero() {
        return 0.0;
    }
    let shift = r.numer().bits() as i64 - r.denom().bits() as i64;
    let k = 64 - shift;
    let q = if k >= 0 {
        (r.numer() << k as u64) / r.denom()
    } else {
        r.numer() / (r.denom() << (-k) as u64)
    };
    let q = q.to_f64().expect("64-bit window quotient fits in f64");
    q * 2f64.powi(-k as i32)
}

fn check_phi_domain(t: f64) -> Result<()> {
    if t > 0.0 && t <= T_STAR {
        Ok(())
    } else {
        Err(Error::OutOfDomain {
            value: t,
            domain: "(0, log(1+sqrt 2)]",
        })
    }
}

/// Evaluation route for [`phi_eval`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PhiMethod {
    /// The closed hyperbolic quotient.
    Direct,
    /// Quotient of the two truncated even series with `terms` coefficients.
    Series { terms: usize },
}

pub fn phi_direct(t: f64) -> Result<f64> {
    check_phi_domain(t)?;
    let s = t.sinh();
    let c2 = (2.0 * t).cosh();
    Ok((3.0 - c2) * ((2.0 * t).sinh() - 2.0 * t) / (2.0 * t * s * s * (5.0 + c2)))
}

fn phi_coeffs_f64(terms: usize) -> Vec<(f64, f64)> {
    static CACHE: OnceLock<Vec<(f64, f64)>> = OnceLock::new();
    let cached = CACHE.get_or_init(|| phi_coeffs_uncached(64));
    if terms <= cached.len() {
        cached[..terms].to_vec()
    } else {
        phi_coeffs_uncached(terms)
    }
}

fn phi_coeffs_uncached(terms: usize) -> Vec<(f64, f64)> {
    (0..terms)
        .map(|n| {
            let a = coeff(
                CoefficientSequence {
                    pair: SequencePair::Phi,
                    role: SequenceRole::Numerator,
                },
                n,
            );
            let b = coeff(
                CoefficientSequence {
                    pair: SequencePair::Phi,
                    role: SequenceRole::Denominator,
                },
                n,
            );
            (rational_to_f64(&a), rational_to_f64(&b))
        })
        .collect()
}

/// Truncated-series value of `phi` together with a tail estimate.
///
/// Both series are summed by Horner in `u = t^2`; the reported bound is
/// `|first omitted term| / (1 - observed term ratio)` for the numerator and
/// denominator, propagated through the quotient.
pub fn phi_series_with_tail(t: f64, terms: usize) -> Result<(f64, f64)> {
    check_phi_domain(t)?;
    if terms == 0 {
        return Err(Error::OutOfDomain {
            value: 0.0,
            domain: "at least one series term",
        });
    }
    let cs = phi_coeffs_f64(terms + 1);
    let u = t * t;
    let mut num = 0.0;
    let mut den = 0.0;
    for &(a, b) in cs[..terms].iter().rev() {
        num = num * u + a;
        den = den * u + b;
    }
    let value = num / den;

    let un = u.powi(terms as i32 - 1);
    let (a_last, b_last) = cs[terms - 1];
    let (a_next, b_next) = cs[terms];
    let tail = |last: f64, next: f64| -> f64 {
        let next_term = (next * un * u).abs();
        let ratio = if last != 0.0 {
            (next * u / last).abs().min(0.5)
        } else {
            0.5
        };
        next_term / (1.0 - ratio)
    };
    let bound = (tail(a_last, a_next) + value.abs() * tail(b_last, b_next)) / den.abs();
    Ok((value, bound))
}

/// `phi(t)` on `(0, log(1+sqrt 2)]` by the chosen route. The series route
/// extends continuously to `2/9` as `t -> 0`; the direct route hits `0/0`
/// there, which is why grid code near the origin prefers the series.
pub fn phi_eval(t: f64, method: PhiMethod) -> Result<f64> {
    match method {
        PhiMethod::Direct => phi_direct(t),
        PhiMethod::Series { terms } => phi_series_with_tail(t, terms).map(|(v, _)| v),
    }
}

// Expanded numerator and denominator of phi and their derivatives.
fn phi1(t: f64) -> f64 {
    3.0 * (2.0 * t).sinh() - 6.0 * t + 2.0 * t * (2.0 * t).cosh() - 0.5 * (4.0 * t).sinh()
}

fn phi2(t: f64) -> f64 {
    0.5 * t * (8.0 * (2.0 * t).cosh() + (4.0 * t).cosh() - 9.0)
}

fn phi1_prime(t: f64) -> f64 {
    let s = t.sinh();
    8.0 * s * (t * t.cosh() - 2.0 * s * s * s)
}

fn phi2_prime(t: f64) -> f64 {
    let s = t.sinh();
    s * (20.0 * t * t.cosh() + 4.0 * t * (3.0 * t).cosh() + 9.0 * s + (3.0 * t).sinh())
}

/// Analytic derivative of `phi` via the quotient rule on the expanded forms.
pub fn phi_derivative(t: f64) -> Result<f64> {
    check_phi_domain(t)?;
    let p2 = phi2(t);
    Ok((phi1_prime(t) * p2 - phi1(t) * phi2_prime(t)) / (p2 * p2))
}

/// Hyperbolic values at multiples of `t* = log(1 + sqrt 2)`.
///
/// At these points sinh and cosh take the closed values
/// `sinh: 1, 2 sqrt 2, 7` and `cosh: sqrt 2, 3, 5 sqrt 2`, which double as
/// cheap self-checks for the whole hyperbolic evaluation path.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HyperbolicCheckpoint {
    pub multiple: u32,
    pub sinh: f64,
    pub cosh: f64,
    pub sinh_reference: f64,
    pub cosh_reference: f64,
}

pub fn hyperbolic_checkpoints() -> [HyperbolicCheckpoint; 3] {
    let sqrt2 = std::f64::consts::SQRT_2;
    let refs = [(1.0, sqrt2), (2.0 * sqrt2, 3.0), (7.0, 5.0 * sqrt2)];
    std::array::from_fn(|i| {
        let m = (i + 1) as u32;
        let t = m as f64 * T_STAR;
        HyperbolicCheckpoint {
            multiple: m,
            sinh: t.sinh(),
            cosh: t.cosh(),
            sinh_reference: refs[i].0,
            cosh_reference: refs[i].1,
        }
    })
}

fn check_unit_domain(x: f64) -> Result<()> {
    if x > 0.0 && x < 1.0 {
        Ok(())
    } else {
        Err(Error::OutOfDomain {
            value: x,
            domain: "(0, 1)",
        })
    }
}

/// The combination gap
/// `varphi_p(x) = p ln(G/A) + (1 - p) ln(C/A) - ln(M/A)` expressed through
/// the scaled forms; it vanishes as `x -> 0` and its sign over `(0, 1)` is
/// exactly the question of whether `G^p C^{1-p}` bounds `M` from one side.
pub fn varphi(x: f64, p: f64) -> Result<f64> {
    check_unit_domain(x)?;
    let co = 1.0 - x;
    let lg = ln_scaled(MeanKind::Geometric, x, co);
    let lc = ln_scaled(MeanKind::ContraHarmonic, x, co);
    let lm = ln_scaled(MeanKind::NeumanSandor, x, co);
    Ok(lc - lm + p * (lg - lc))
}

/// Numerator of `d/dx varphi_p(x)` after clearing the positive factor
/// `x (1 - x^4) sqrt(1 + x^2) asinh(x)`:
///
/// `x - x^5 - [1 + (3p - 2) x^2 + (1 - p) x^4] sqrt(1 + x^2) asinh(x)`.
pub fn varphi_slope_core(x: f64, p: f64) -> Result<f64> {
    check_unit_domain(x)?;
    let x2 = x * x;
    let bracket = 1.0 + (3.0 * p - 2.0) * x2 + (1.0 - p) * x2 * x2;
    Ok(x - x * x2 * x2 - bracket * (1.0 + x2).sqrt() * asinh_stable(x))
}

/// The increasing witness for the `p = 5/9` case: with `f` below,
/// `d/dx varphi_slope_core(x, 5/9) = -x f(x) / (9 sqrt(1 + x^2))`, so
/// `f(0) = 0` and `f' > 0` force the slope core negative on `(0, 1)`.
pub fn varphi_slope_f(x: f64) -> Result<f64> {
    check_unit_domain(x)?;
    let x2 = x * x;
    Ok(x * (49.0 * x2 - 3.0) * (1.0 + x2).sqrt()
        + (3.0 + 7.0 * x2 + 20.0 * x2 * x2) * asinh_stable(x))
}

/// The increasing witness for the `p = 0` case:
/// `varphi_slope_core(x, 0) / (1 - x^2) = x (1 + x^2) - (1 - x^2) sqrt(1 + x^2) asinh(x)`.
pub fn varphi_slope_g(x: f64) -> Result<f64> {
    check_unit_domain(x)?;
    let x2 = x * x;
    Ok(x * (1.0 + x2) - (1.0 - x2) * (1.0 + x2).sqrt() * asinh_stable(x))
}
