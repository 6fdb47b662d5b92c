//! Exact rational coefficient sequences behind the series-ratio arguments.
//!
//! Three even power-series quotients drive the monotonicity proofs of the
//! sharp bounds. Each is `sum(a_n t^{2n}) / sum(b_n t^{2n})` with explicit
//! closed-form coefficients, and the sign pattern of the ratio sequence
//! `a_n/b_n` decides the monotonicity of the quotient. Everything here is
//! computed in arbitrary-precision rationals: the sign tests at small `n`
//! are decided by cancellations that floating point cannot certify.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Exact arbitrary-precision rational; always stored in lowest terms with a
/// positive denominator.
pub type Rational = num_rational::BigRational;

/// The three catalog quotients, named after the ratio function they steer.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SequencePair {
    /// Numerator/denominator pair of the `phi` quotient (the H-Q case).
    Phi,
    /// Pair of the G-Q ratio-function derivative quotient.
    GRatio,
    /// Pair of the H-C ratio-function derivative quotient.
    HRatio,
}

impl SequencePair {
    pub const ALL: [SequencePair; 3] =
        [SequencePair::Phi, SequencePair::GRatio, SequencePair::HRatio];

    pub fn name(&self) -> &'static str {
        match self {
            SequencePair::Phi => "phi",
            SequencePair::GRatio => "g-ratio",
            SequencePair::HRatio => "h-ratio",
        }
    }

    pub fn parse(name: &str) -> Result<Self> {
        match name {
            "phi" => Ok(SequencePair::Phi),
            "g-ratio" => Ok(SequencePair::GRatio),
            "h-ratio" => Ok(SequencePair::HRatio),
            other => Err(Error::UnknownSequence(other.to_string())),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SequenceRole {
    Numerator,
    Denominator,
}

/// One coefficient generator: a quotient side of one of the catalog pairs.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CoefficientSequence {
    pub pair: SequencePair,
    pub role: SequenceRole,
}

/// Sign of an exact rational quantity.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sign {
    Negative,
    Zero,
    Positive,
}

impl Sign {
    pub fn of(r: &Rational) -> Sign {
        if r.is_zero() {
            Sign::Zero
        } else if r.is_positive() {
            Sign::Positive
        } else {
            Sign::Negative
        }
    }

    pub fn glyph(&self) -> char {
        match self {
            Sign::Negative => '-',
            Sign::Zero => '0',
            Sign::Positive => '+',
        }
    }
}

fn factorial(k: u64) -> BigInt {
    let mut acc = BigInt::one();
    for i in 2..=k {
        acc *= i;
    }
    acc
}

/// `2^e` as an exact rational; `e` may be negative.
fn pow2(e: i64) -> Rational {
    if e >= 0 {
        Rational::from_integer(BigInt::one() << e)
    } else {
        Rational::new(BigInt::one(), BigInt::one() << (-e))
    }
}

fn big(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// The coefficient at index `n`, from the factored closed form.
pub fn coeff(seq: CoefficientSequence, n: usize) -> Rational {
    let k = n as i64;
    match (seq.pair, seq.role) {
        // 2^{2n+4} (n + 3 - 2^{2n+1}) / (2n+3)!
        (SequencePair::Phi | SequencePair::GRatio, SequenceRole::Numerator) => {
            pow2(2 * k + 4) * (big(k + 3) - pow2(2 * k + 1))
                / Rational::from_integer(factorial(2 * n as u64 + 3))
        }
        // 2^{2n+4} (1 + 2^{2n-1}) / (2n+2)!
        (SequencePair::Phi, SequenceRole::Denominator) => {
            pow2(2 * k + 4) * (big(1) + pow2(2 * k - 1))
                / Rational::from_integer(factorial(2 * n as u64 + 2))
        }
        // 2^{2n+4} / (2n+2)!
        (SequencePair::GRatio, SequenceRole::Denominator) => {
            pow2(2 * k + 4) / Rational::from_integer(factorial(2 * n as u64 + 2))
        }
        // 2^{2n+3} [(3 - 2^{2n})(2n+3) + 3 - 2^{2n+2}] / (2n+3)!
        (SequencePair::HRatio, SequenceRole::Numerator) => {
            let inner = (big(3) - pow2(2 * k)) * big(2 * k + 3) + big(3) - pow2(2 * k + 2);
            pow2(2 * k + 3) * inner / Rational::from_integer(factorial(2 * n as u64 + 3))
        }
        // 2^{2n+5} / (2n+2)!
        (SequencePair::HRatio, SequenceRole::Denominator) => {
            pow2(2 * k + 5) / Rational::from_integer(factorial(2 * n as u64 + 2))
        }
    }
}

/// The same coefficient computed along an independent route: the unshifted
/// series of the expanded hyperbolic polynomials, reindexed, or the closed
/// form with its inner bracket multiplied out. Equality with [`coeff`] for
/// every `n` guards against transcription slips in either formula.
pub fn coeff_alt(seq: CoefficientSequence, n: usize) -> Rational {
    let k = n as i64;
    match (seq.pair, seq.role) {
        // 2^{2m+1} (2m + 4 - 2^{2m}) / (2m+1)! at m = n+1
        (SequencePair::Phi | SequencePair::GRatio, SequenceRole::Numerator) => {
            pow2(2 * k + 3) * (big(2 * k + 6) - pow2(2 * k + 2))
                / Rational::from_integer(factorial(2 * n as u64 + 3))
        }
        // 2^{2m} (4 + 2^{2m-1}) / (2m)! at m = n+1
        (SequencePair::Phi, SequenceRole::Denominator) => {
            pow2(2 * k + 2) * (big(4) + pow2(2 * k + 1))
                / Rational::from_integer(factorial(2 * n as u64 + 2))
        }
        // 4 * 2^{2m} / (2m)! at m = n+1
        (SequencePair::GRatio, SequenceRole::Denominator) => {
            big(4) * pow2(2 * k + 2) / Rational::from_integer(factorial(2 * n as u64 + 2))
        }
        // bracket expanded: 6n + 12 - (2n+7) 4^n
        (SequencePair::HRatio, SequenceRole::Numerator) => {
            let inner = big(6 * k + 12) - big(2 * k + 7) * pow2(2 * k);
            pow2(2 * k + 3) * inner / Rational::from_integer(factorial(2 * n as u64 + 3))
        }
        // 2 * 2^{2n+4} / (2n+2)!
        (SequencePair::HRatio, SequenceRole::Denominator) => {
            big(2) * pow2(2 * k + 4) / Rational::from_integer(factorial(2 * n as u64 + 2))
        }
    }
}

/// The ratio `numerator_n / denominator_n` of a catalog pair.
pub fn ratio_term(pair: SequencePair, n: usize) -> Result<Rational> {
    let den = coeff(
        CoefficientSequence {
            pair,
            role: SequenceRole::Denominator,
        },
        n,
    );
    if den.is_zero() {
        return Err(Error::ZeroDenominator(n));
    }
    Ok(coeff(
        CoefficientSequence {
            pair,
            role: SequenceRole::Numerator,
        },
        n,
    ) / den)
}

/// Closed form of the `phi` ratio sequence:
/// `(n + 3 - 2^{2n+1}) / ((2n+3)(1 + 2^{2n-1}))`.
pub fn phi_ratio_closed_form(n: usize) -> Rational {
    let k = n as i64;
    (big(k + 3) - pow2(2 * k + 1)) / (big(2 * k + 3) * (big(1) + pow2(2 * k - 1)))
}

/// Closed form of the forward difference `ratio(n+1) - ratio(n)`.
fn difference_closed_form(pair: SequencePair, n: usize) -> Rational {
    let k = n as i64;
    match pair {
        // [2^{4n+3} - (6n^2 + 57n + 76) 2^{2n-1} - 3]
        //   / [(2n+3)(2n+5)(1 + 2^{2n-1})(1 + 2^{2n+1})]
        SequencePair::Phi => {
            let num = pow2(4 * k + 3) - big(6 * k * k + 57 * k + 76) * pow2(2 * k - 1) - big(3);
            let den = big(2 * k + 3)
                * big(2 * k + 5)
                * (big(1) + pow2(2 * k - 1))
                * (big(1) + pow2(2 * k + 1));
            num / den
        }
        // -[3 + (6n+7) 2^{2n+1}] / [(2n+3)(2n+5)]
        SequencePair::GRatio => {
            -(big(3) + big(6 * k + 7) * pow2(2 * k + 1)) / (big(2 * k + 3) * big(2 * k + 5))
        }
        // -3 2^{2n-2} - 3/[2(2n+3)(2n+5)] - (6n+7) 2^{2n} / [(2n+3)(2n+5)]
        SequencePair::HRatio => {
            let band = big(2 * k + 3) * big(2 * k + 5);
            -big(3) * pow2(2 * k - 2)
                - big(3) / (big(2) * band.clone())
                - big(6 * k + 7) * pow2(2 * k) / band
        }
    }
}

/// Sign of `ratio(n+1) - ratio(n)`, with the exact difference as witness.
///
/// The difference is computed twice: directly from the coefficients and from
/// the published closed form. A mismatch is reported as an error rather than
/// silently trusting either side.
pub fn difference_sign(pair: SequencePair, n: usize) -> Result<(Sign, Rational)> {
    let direct = ratio_term(pair, n + 1)? - ratio_term(pair, n)?;
    let closed = difference_closed_form(pair, n);
    if direct != closed {
        return Err(Error::DifferenceMismatch {
            index: n,
            direct: direct.to_string(),
            closed: closed.to_string(),
        });
    }
    Ok((Sign::of(&direct), direct))
}

/// Exact monotonicity shape of a ratio sequence over `0..=horizon`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MonotonicityPattern {
    Increasing,
    Decreasing,
    /// Strictly decreasing up to the switch index, then strictly increasing;
    /// the switch index is the position of the minimum term.
    DecreasingThenIncreasing { switch_index: usize },
    IncreasingThenDecreasing { switch_index: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SequenceClassification {
    pub pattern: MonotonicityPattern,
    pub horizon: usize,
}

/// Classifies the ratio sequence of a catalog pair by exact comparison of
/// consecutive terms up to `horizon` (which must be at least 4). Sequences
/// with more than one direction switch, or with a repeated term, fall outside
/// the one-switch criterion and are reported as inconclusive.
pub fn classify_ratio_sequence(pair: SequencePair, horizon: usize) -> Result<SequenceClassification> {
    if horizon < 4 {
        return Err(Error::HorizonTooSmall(horizon));
    }
    let mut signs = Vec::with_capacity(horizon);
    let mut prev = ratio_term(pair, 0)?;
    for n in 1..=horizon {
        let term = ratio_term(pair, n)?;
        match Sign::of(&(&term - &prev)) {
            Sign::Zero => return Err(Error::InconclusiveSequence(horizon)),
            s => signs.push(s),
        }
        prev = term;
    }

    let switches: Vec<usize> = signs
        .windows(2)
        .enumerate()
        .filter(|(_, w)| w[0] != w[1])
        .map(|(i, _)| i + 1)
        .collect();

    let pattern = match (switches.len(), signs[0]) {
        (0, Sign::Positive) => MonotonicityPattern::Increasing,
        (0, Sign::Negative) => MonotonicityPattern::Decreasing,
        (1, Sign::Negative) => MonotonicityPattern::DecreasingThenIncreasing {
            switch_index: switches[0],
        },
        (1, Sign::Positive) => MonotonicityPattern::IncreasingThenDecreasing {
            switch_index: switches[0],
        },
        _ => return Err(Error::InconclusiveSequence(horizon)),
    };
    Ok(SequenceClassification { pattern, horizon })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(n: i64, d: i64) -> Rational {
        Rational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn phi_leading_coefficients() {
        let a0 = coeff(
            CoefficientSequence {
                pair: SequencePair::Phi,
                role: SequenceRole::Numerator,
            },
            0,
        );
        let b0 = coeff(
            CoefficientSequence {
                pair: SequencePair::Phi,
                role: SequenceRole::Denominator,
            },
            0,
        );
        assert_eq!(a0, rat(8, 3));
        assert_eq!(b0, rat(12, 1));
    }

    #[test]
    fn phi_ratio_values() {
        assert_eq!(ratio_term(SequencePair::Phi, 0).unwrap(), rat(2, 9));
        assert_eq!(ratio_term(SequencePair::Phi, 1).unwrap(), rat(-4, 15));
        assert_eq!(ratio_term(SequencePair::Phi, 2).unwrap(), rat(-3, 7));
        assert_eq!(ratio_term(SequencePair::Phi, 3).unwrap(), rat(-122, 297));
        for n in 0..32 {
            assert_eq!(
                ratio_term(SequencePair::Phi, n).unwrap(),
                phi_ratio_closed_form(n)
            );
        }
    }

    #[test]
    fn companion_ratio_leading_terms() {
        assert_eq!(ratio_term(SequencePair::GRatio, 0).unwrap(), rat(1, 3));
        assert_eq!(ratio_term(SequencePair::HRatio, 0).unwrap(), rat(5, 12));
    }

    #[test]
    fn alternate_route_agrees() {
        for pair in SequencePair::ALL {
            for role in [SequenceRole::Numerator, SequenceRole::Denominator] {
                for n in 0..24 {
                    let seq = CoefficientSequence { pair, role };
                    assert_eq!(coeff(seq, n), coeff_alt(seq, n), "{pair:?}/{role:?} n={n}");
                }
            }
        }
    }

    #[test]
    fn difference_signs_match_formulas() {
        let (s, v) = difference_sign(SequencePair::Phi, 1).unwrap();
        assert_eq!(s, Sign::Negative);
        assert_eq!(v, rat(-3, 7) - rat(-4, 15));

        let (s, v) = difference_sign(SequencePair::Phi, 3).unwrap();
        assert_eq!(s, Sign::Positive);
        assert!(v.is_positive());

        let (s, v) = difference_sign(SequencePair::GRatio, 0).unwrap();
        assert_eq!(s, Sign::Negative);
        assert_eq!(v, rat(-17, 15));

        let (s, _) = difference_sign(SequencePair::HRatio, 0).unwrap();
        assert_eq!(s, Sign::Negative);
    }

    #[test]
    fn classification_of_catalog_pairs() {
        let c = classify_ratio_sequence(SequencePair::Phi, 50).unwrap();
        assert_eq!(
            c.pattern,
            MonotonicityPattern::DecreasingThenIncreasing { switch_index: 2 }
        );
        assert_eq!(
            classify_ratio_sequence(SequencePair::GRatio, 50)
                .unwrap()
                .pattern,
            MonotonicityPattern::Decreasing
        );
        assert_eq!(
            classify_ratio_sequence(SequencePair::HRatio, 50)
                .unwrap()
                .pattern,
            MonotonicityPattern::Decreasing
        );
        assert!(matches!(
            classify_ratio_sequence(SequencePair::Phi, 3),
            Err(Error::HorizonTooSmall(3))
        ));
    }

    #[test]
    fn denominators_stay_positive() {
        for pair in SequencePair::ALL {
            for n in 0..64 {
                let d = coeff(
                    CoefficientSequence {
                        pair,
                        role: SequenceRole::Denominator,
                    },
                    n,
                );
                assert!(d.is_positive(), "{pair:?} denominator at {n}");
            }
        }
    }

    #[test]
    fn sequence_names_parse() {
        for pair in SequencePair::ALL {
            assert_eq!(SequencePair::parse(pair.name()).unwrap(), pair);
        }
        assert!(SequencePair::parse("nope").is_err());
    }
}
