//! The nine classical bivariate means and their scaled forms.
//!
//! With `A = (a + b)/2` and `x = (a - b)/(a + b)`, every mean here divided by
//! `A` is a function of `x` alone:
//!
//! ```text
//! H/A = 1 - x^2        G/A = sqrt(1 - x^2)   L/A = x/atanh(x)
//! P/A = x/asin(x)      A/A = 1               M/A = x/asinh(x)
//! T/A = x/atan(x)      Q/A = sqrt(1 + x^2)   C/A = 1 + x^2
//! ```
//!
//! The four transcendental ratios are 0/0 at the diagonal; below `|x| = 2^-10`
//! they are evaluated through truncated even series whose tails sit far below
//! one ulp, so grid sweeps can touch the diagonal without losing digits.

use crate::asinh::asinh_stable;
use crate::error::{Error, Result};
use crate::pair::PositivePair;

/// Scaled ratios switch from the closed form to a series in `x^2` here.
pub const RATIO_SERIES_CUT: f64 = 0.000_976_562_5; // 2^-10

/// Log-scaled forms switch to a series-based `ln_1p` below this.
const LOG_SERIES_CUT: f64 = 1e-2;

/// Tags for the nine means, ordered by the strict chain
/// `H < G < L < P < A < M < T < Q < C` that holds for every `a != b`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum MeanKind {
    Harmonic,
    Geometric,
    Logarithmic,
    SeiffertFirst,
    Arithmetic,
    NeumanSandor,
    SeiffertSecond,
    Quadratic,
    ContraHarmonic,
}

impl MeanKind {
    pub const ALL: [MeanKind; 9] = [
        MeanKind::Harmonic,
        MeanKind::Geometric,
        MeanKind::Logarithmic,
        MeanKind::SeiffertFirst,
        MeanKind::Arithmetic,
        MeanKind::NeumanSandor,
        MeanKind::SeiffertSecond,
        MeanKind::Quadratic,
        MeanKind::ContraHarmonic,
    ];

    /// Single-letter tag used on the command line: H G L P A M T Q C.
    pub fn symbol(&self) -> char {
        match self {
            MeanKind::Harmonic => 'H',
            MeanKind::Geometric => 'G',
            MeanKind::Logarithmic => 'L',
            MeanKind::SeiffertFirst => 'P',
            MeanKind::Arithmetic => 'A',
            MeanKind::NeumanSandor => 'M',
            MeanKind::SeiffertSecond => 'T',
            MeanKind::Quadratic => 'Q',
            MeanKind::ContraHarmonic => 'C',
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            MeanKind::Harmonic => "harmonic",
            MeanKind::Geometric => "geometric",
            MeanKind::Logarithmic => "logarithmic",
            MeanKind::SeiffertFirst => "first Seiffert",
            MeanKind::Arithmetic => "arithmetic",
            MeanKind::NeumanSandor => "Neuman-Sandor",
            MeanKind::SeiffertSecond => "second Seiffert",
            MeanKind::Quadratic => "quadratic",
            MeanKind::ContraHarmonic => "contra-harmonic",
        }
    }
}

impl std::str::FromStr for MeanKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "H" | "harmonic" => Ok(MeanKind::Harmonic),
            "G" | "geometric" => Ok(MeanKind::Geometric),
            "L" | "logarithmic" => Ok(MeanKind::Logarithmic),
            "P" | "seiffert1" | "first-seiffert" => Ok(MeanKind::SeiffertFirst),
            "A" | "arithmetic" => Ok(MeanKind::Arithmetic),
            "M" | "neuman-sandor" => Ok(MeanKind::NeumanSandor),
            "T" | "seiffert2" | "second-seiffert" => Ok(MeanKind::SeiffertSecond),
            "Q" | "quadratic" => Ok(MeanKind::Quadratic),
            "C" | "contra-harmonic" => Ok(MeanKind::ContraHarmonic),
            other => Err(Error::UnknownDescriptor(other.to_string())),
        }
    }
}

/// `theta(x)/x - 1` for the inverse function behind each transcendental mean,
/// as a truncated even series in `u = x^2` (through `x^8`).
fn inverse_over_x_m1(kind: MeanKind, u: f64) -> f64 {
    match kind {
        // atanh(x)/x - 1
        MeanKind::Logarithmic => u * (1.0 / 3.0 + u * (0.2 + u * (1.0 / 7.0 + u / 9.0))),
        // asin(x)/x - 1
        MeanKind::SeiffertFirst => {
            u * (1.0 / 6.0 + u * (0.075 + u * (5.0 / 112.0 + u * (35.0 / 1152.0))))
        }
        // asinh(x)/x - 1
        MeanKind::NeumanSandor => {
            u * (-1.0 / 6.0 + u * (0.075 + u * (-5.0 / 112.0 + u * (35.0 / 1152.0))))
        }
        // atan(x)/x - 1
        MeanKind::SeiffertSecond => u * (-1.0 / 3.0 + u * (0.2 + u * (-1.0 / 7.0 + u / 9.0))),
        _ => unreachable!("only transcendental means have an inverse-function series"),
    }
}

/// `x/theta(x)` for the four transcendental means, `0 <= x < 1`.
pub(crate) fn transcendental_ratio(kind: MeanKind, x: f64) -> f64 {
    if x < RATIO_SERIES_CUT {
        return 1.0 / (1.0 + inverse_over_x_m1(kind, x * x));
    }
    match kind {
        MeanKind::Logarithmic => x / x.atanh(),
        MeanKind::SeiffertFirst => x / x.asin(),
        MeanKind::NeumanSandor => x / asinh_stable(x),
        MeanKind::SeiffertSecond => x / x.atan(),
        _ => unreachable!(),
    }
}

/// Mean divided by the arithmetic mean, as a function of `x` in `[0, 1)`.
///
/// Implemented for the kinds whose scaled form appears in the bound
/// certificates (H, G, A, M, Q, C); the remaining kinds report
/// [`Error::UnsupportedScaledForm`]. All six return exactly 1 at `x = 0`.
pub fn scaled_ratio(kind: MeanKind, x: f64) -> Result<f64> {
    if !(0.0..1.0).contains(&x) {
        return Err(Error::OutOfDomain {
            value: x,
            domain: "[0, 1)",
        });
    }
    match kind {
        MeanKind::Arithmetic => Ok(1.0),
        MeanKind::Harmonic => Ok((1.0 - x) * (1.0 + x)),
        MeanKind::Geometric => Ok(((1.0 - x) * (1.0 + x)).sqrt()),
        MeanKind::Quadratic => Ok((1.0 + x * x).sqrt()),
        MeanKind::ContraHarmonic => Ok(1.0 + x * x),
        MeanKind::NeumanSandor => Ok(transcendental_ratio(MeanKind::NeumanSandor, x)),
        other => Err(Error::UnsupportedScaledForm(other)),
    }
}

/// `ln(mean/A)` as a function of `x`, stable over the whole range.
///
/// `co` must hold `1 - x` to full relative accuracy; pairs provide it through
/// [`PositivePair::co_gap`], grid code can pass `1.0 - x` directly when `x`
/// is the primary variable. Near the diagonal the four transcendental kinds
/// go through `ln_1p` of a series so that the leading `x^2/c` term keeps all
/// of its digits.
pub(crate) fn ln_scaled(kind: MeanKind, x: f64, co: f64) -> f64 {
    // x may equal 1.0 exactly for strongly degenerate pairs; co then carries
    // the actual distance to the endpoint and every branch stays finite
    // except the logarithmic mean, whose scaled log tends to -inf there.
    debug_assert!((0.0..=1.0).contains(&x) && co > 0.0);
    match kind {
        MeanKind::Arithmetic => 0.0,
        MeanKind::Harmonic => {
            if x >= 0.5 {
                (co * (1.0 + x)).ln()
            } else {
                (-x * x).ln_1p()
            }
        }
        MeanKind::Geometric => 0.5 * ln_scaled(MeanKind::Harmonic, x, co),
        MeanKind::Quadratic => 0.5 * (x * x).ln_1p(),
        MeanKind::ContraHarmonic => (x * x).ln_1p(),
        kind => {
            if x < LOG_SERIES_CUT {
                let m1 = inverse_over_x_m1(kind, x * x);
                (-m1 / (1.0 + m1)).ln_1p()
            } else {
                transcendental_ratio(kind, x).ln()
            }
        }
    }
}

/// Evaluates the selected mean at a pair of positive reals.
///
/// Diagonal pairs return `a` exactly; otherwise the result is strictly
/// between `min(a,b)` and `max(a,b)`, symmetric in the arguments, and
/// homogeneous of degree one up to rounding.
pub fn mean_eval(kind: MeanKind, pair: &PositivePair) -> f64 {
    if pair.is_diagonal() {
        return pair.a();
    }
    let a = pair.a();
    let b = pair.b();
    let am = pair.arithmetic();
    let ax = pair.abs_x();
    match kind {
        MeanKind::Arithmetic => am,
        // min * (2 max / (a+b)) == 2ab/(a+b) without intermediate overflow
        MeanKind::Harmonic => a.min(b) * (2.0 * a.max(b) / (a + b)),
        MeanKind::Geometric => a.sqrt() * b.sqrt(),
        MeanKind::Quadratic => am * (1.0 + ax * ax).sqrt(),
        MeanKind::ContraHarmonic => am * (1.0 + ax * ax),
        kind => am * transcendental_ratio(kind, ax),
    }
}

/// The mean `(a - b) / (2 asinh((a - b)/(a + b)))`, extended with `a` on the
/// diagonal, evaluated as `A(a,b) * x/asinh(x)` so that the near-diagonal
/// 0/0 never forms.
pub fn neuman_sandor(pair: &PositivePair) -> f64 {
    mean_eval(MeanKind::NeumanSandor, pair)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pair(a: f64, b: f64) -> PositivePair {
        PositivePair::new(a, b).unwrap()
    }

    #[test]
    fn exact_algebraic_values() {
        assert_eq!(mean_eval(MeanKind::Harmonic, &pair(2.0, 1.0)), 4.0 / 3.0);
        assert_eq!(mean_eval(MeanKind::Arithmetic, &pair(2.0, 1.0)), 1.5);
        assert_eq!(
            mean_eval(MeanKind::ContraHarmonic, &pair(2.0, 1.0)),
            5.0 / 3.0
        );
        assert_eq!(mean_eval(MeanKind::Geometric, &pair(4.0, 9.0)), 6.0);
    }

    #[test]
    fn diagonal_returns_argument_exactly() {
        for kind in MeanKind::ALL {
            assert_eq!(mean_eval(kind, &pair(5.0, 5.0)), 5.0);
            assert_eq!(mean_eval(kind, &pair(0.1, 0.1)), 0.1);
        }
    }

    #[test]
    fn chain_is_strict_off_the_diagonal() {
        for &(a, b) in &[(2.0, 1.0), (10.0, 0.3), (1.0 + 1e-5, 1.0)] {
            let p = pair(a, b);
            let values: Vec<f64> = MeanKind::ALL.iter().map(|&k| mean_eval(k, &p)).collect();
            for w in values.windows(2) {
                assert!(w[0] < w[1], "chain failed at ({a}, {b}): {values:?}");
            }
        }
    }

    #[test]
    fn scaled_ratio_trivials() {
        for kind in [
            MeanKind::Harmonic,
            MeanKind::Geometric,
            MeanKind::Arithmetic,
            MeanKind::NeumanSandor,
            MeanKind::Quadratic,
            MeanKind::ContraHarmonic,
        ] {
            assert_eq!(scaled_ratio(kind, 0.0).unwrap(), 1.0);
        }
        assert_eq!(scaled_ratio(MeanKind::Harmonic, 0.5).unwrap(), 0.75);
        assert!(matches!(
            scaled_ratio(MeanKind::Logarithmic, 0.5),
            Err(Error::UnsupportedScaledForm(MeanKind::Logarithmic))
        ));
        assert!(scaled_ratio(MeanKind::Harmonic, 1.0).is_err());
        assert!(scaled_ratio(MeanKind::Harmonic, -0.1).is_err());
    }

    #[test]
    fn series_branch_is_continuous_at_the_cut() {
        for kind in [
            MeanKind::Logarithmic,
            MeanKind::SeiffertFirst,
            MeanKind::NeumanSandor,
            MeanKind::SeiffertSecond,
        ] {
            let below = transcendental_ratio(kind, RATIO_SERIES_CUT * (1.0 - 1e-14));
            let above = transcendental_ratio(kind, RATIO_SERIES_CUT);
            assert!(
                ((below - above) / above).abs() < 1e-13,
                "{kind:?} jumps at the series cut"
            );
        }
    }

    #[test]
    fn neuman_sandor_is_finite_and_tight_near_diagonal() {
        let p = pair(1.0 + 1e-10, 1.0);
        let m = neuman_sandor(&p);
        let am = p.arithmetic();
        assert!(m.is_finite());
        assert!((m - am).abs() < 1e-10 * am);
        // M - A ~ A x^2/6 ~ 4e-22 here, below one ulp of A: equality is the
        // best f64 can represent, strict order resumes by x ~ 1e-8
        assert!(m >= am);
        let wider = pair(1.0 + 1e-7, 1.0);
        assert!(neuman_sandor(&wider) > wider.arithmetic());
    }

    #[test]
    fn symmetry_is_exact() {
        for kind in MeanKind::ALL {
            for &(a, b) in &[(2.0, 1.0), (7.3, 0.02), (1e6, 1e-6)] {
                let p = pair(a, b);
                assert_eq!(mean_eval(kind, &p), mean_eval(kind, &p.swapped()));
            }
        }
    }

    #[test]
    fn kind_parsing_round_trips() {
        for kind in MeanKind::ALL {
            let parsed: MeanKind = kind.symbol().to_string().parse().unwrap();
            assert_eq!(parsed, kind);
        }
        assert!("X".parse::<MeanKind>().is_err());
    }
}
