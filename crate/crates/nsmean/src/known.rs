//! Classical inequality catalog around the Neuman-Sandor mean.
//!
//! Every predicate here is a published result restated as a checkable margin:
//! the strict mean chain, the product bounds `P M < A^2` and
//! `A T < M^2 < (A^2 + T^2)/2`, the sharp `Q/A` and `C/A` geometric-mean
//! bounds, the generalized-log-mean sandwich `L_{p0} < M < L_2`, and the
//! Ky Fan ratio ordering on `(0, 1/2)^2`. Margins are computed in log-scaled
//! space with dedicated small-`x` series where the leading `x^2` terms
//! cancel, so every check stays decidable down to `|x| ~ 1e-6`.

use std::f64::consts::{LN_2, SQRT_2};
use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::logmean::{generalized_log_mean, solve_p0};
use crate::means::{ln_scaled, transcendental_ratio, MeanKind};
use crate::pair::PositivePair;

/// One catalog predicate evaluated at a pair. The margin is the smallest
/// slack among the strict inequalities in the predicate (log-scaled for the
/// multiplicative ones); `pass` is `margin > 0`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct KnownResultOutcome {
    pub id: &'static str,
    pub pass: bool,
    pub margin: f64,
}

fn outcome(id: &'static str, margin: f64) -> KnownResultOutcome {
    KnownResultOutcome {
        id,
        pass: margin > 0.0,
        margin,
    }
}

fn p0_cached() -> f64 {
    static P0: OnceLock<f64> = OnceLock::new();
    *P0.get_or_init(solve_p0)
}

/// `(1 + (T/A)^2)/2 - (M/A)^2`, the scaled margin of
/// `M^2 < (A^2 + T^2)/2`. The `x^2` terms cancel, so below `x = 1e-2` the
/// direct difference is replaced by its series `u^2/30 - u^3/63`.
fn mean_square_margin(x: f64) -> f64 {
    let u = x * x;
    if x < 1e-2 {
        return u * u * (1.0 / 30.0 - u / 63.0);
    }
    let t = transcendental_ratio(MeanKind::SeiffertSecond, x);
    let m = transcendental_ratio(MeanKind::NeumanSandor, x);
    0.5 * (1.0 + t * t) - m * m
}

/// Evaluates the full catalog at one non-diagonal pair.
pub fn check_known_results(pair: &PositivePair) -> Result<Vec<KnownResultOutcome>> {
    if pair.is_diagonal() {
        return Err(Error::DegeneratePair);
    }
    let x = pair.abs_x();
    let co = pair.co_gap();
    let l = |kind: MeanKind| ln_scaled(kind, x, co);

    let mut results = Vec::with_capacity(7);

    // strict chain H < G < L < P < A < M < T < Q < C
    let chain_margin = MeanKind::ALL
        .windows(2)
        .map(|w| l(w[1]) - l(w[0]))
        .fold(f64::INFINITY, f64::min);
    results.push(outcome("chain", chain_margin));

    // P M < A^2, i.e. ln(P/A) + ln(M/A) < 0
    results.push(outcome(
        "pm-below-a2",
        -(l(MeanKind::SeiffertFirst) + l(MeanKind::NeumanSandor)),
    ));

    // A T < M^2
    results.push(outcome(
        "at-below-m2",
        2.0 * l(MeanKind::NeumanSandor) - l(MeanKind::SeiffertSecond),
    ));

    // M^2 < (A^2 + T^2)/2 (value-scaled margin)
    results.push(outcome("m2-below-mean-square", mean_square_margin(x)));

    // Q^{1/3} A^{2/3} < M < Q^b A^{1-b}, b = 2 (ln(2 + sqrt 2) - ln 3)/ln 2
    let b_q = 2.0 * ((2.0 + SQRT_2).ln() - 3f64.ln()) / LN_2;
    let lower_q = l(MeanKind::NeumanSandor) - l(MeanKind::Quadratic) / 3.0;
    let upper_q = b_q * l(MeanKind::Quadratic) - l(MeanKind::NeumanSandor);
    results.push(outcome("neuman-qa", lower_q.min(upper_q)));

    // C^{1/6} A^{5/6} < M < C^m A^{1-m}, m = (ln(2 + sqrt 2) - ln 3)/ln 2
    let m_c = 0.5 * b_q;
    let lower_c = l(MeanKind::NeumanSandor) - l(MeanKind::ContraHarmonic) / 6.0;
    let upper_c = m_c * l(MeanKind::ContraHarmonic) - l(MeanKind::NeumanSandor);
    results.push(outcome("neuman-ca", lower_c.min(upper_c)));

    // L_{p0} < M < L_2; ln(L_2/A) = ln(1 + x^2/3)/2 exactly
    let am = pair.arithmetic();
    let lower_li = l(MeanKind::NeumanSandor) - (generalized_log_mean(p0_cached(), pair) / am).ln();
    let upper_li = 0.5 * (x * x / 3.0).ln_1p() - l(MeanKind::NeumanSandor);
    results.push(outcome("li-logmean", lower_li.min(upper_li)));

    Ok(results)
}

/// The six Ky Fan ratios `K(a,b)/K(1-a,1-b)` for K = G, L, P, A, M, T.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct KyFanOutcome {
    pub ratios: [f64; 6],
    /// Smallest log-gap between consecutive ratios.
    pub margin: f64,
    pub pass: bool,
}

const KY_FAN_KINDS: [MeanKind; 6] = [
    MeanKind::Geometric,
    MeanKind::Logarithmic,
    MeanKind::SeiffertFirst,
    MeanKind::Arithmetic,
    MeanKind::NeumanSandor,
    MeanKind::SeiffertSecond,
];

/// Checks the strict increase of the Ky Fan ratios. Requires both arguments
/// in `(0, 1/2)` and distinct.
///
/// The common factor `A(a,b)/A(a',b')` cancels in consecutive comparisons,
/// so the ordering margin reduces to differences of scaled logs at `x` and
/// `x'` and stays sharp even for nearly equal arguments.
pub fn ky_fan_check(pair: &PositivePair) -> Result<KyFanOutcome> {
    let (a, b) = (pair.a(), pair.b());
    if !(a < 0.5 && b < 0.5) {
        return Err(Error::KyFanDomain);
    }
    if pair.is_diagonal() {
        return Err(Error::DegeneratePair);
    }
    let primed = PositivePair::new(1.0 - a, 1.0 - b).expect("complement stays positive");

    let x = pair.abs_x();
    let co = pair.co_gap();
    let xp = primed.abs_x();
    let cop = primed.co_gap();
    let scale = pair.arithmetic() / primed.arithmetic();

    let ratios: [f64; 6] = std::array::from_fn(|i| {
        let k = KY_FAN_KINDS[i];
        scale * (ln_scaled(k, x, co) - ln_scaled(k, xp, cop)).exp()
    });

    let margin = KY_FAN_KINDS
        .windows(2)
        .map(|w| {
            (ln_scaled(w[1], x, co) - ln_scaled(w[0], x, co))
                - (ln_scaled(w[1], xp, cop) - ln_scaled(w[0], xp, cop))
        })
        .fold(f64::INFINITY, f64::min);

    Ok(KyFanOutcome {
        ratios,
        margin,
        pass: margin > 0.0,
    })
}
