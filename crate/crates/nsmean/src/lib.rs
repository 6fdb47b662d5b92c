//! Bivariate special means and sharp bounds for the Neuman-Sandor mean.
//!
//! The Neuman-Sandor mean of two positive reals,
//!
//! ```text
//! M(a, b) = (a - b) / (2 asinh((a - b)/(a + b))),
//! ```
//!
//! sits strictly between the arithmetic and second Seiffert means inside the
//! classical chain `H < G < L < P < A < M < T < Q < C`. This crate provides:
//!
//! * numerically stable evaluation of all nine means, including the scaled
//!   one-variable forms `mean/A` as functions of `x = (a - b)/(a + b)`
//!   ([`means`], [`asinh`]);
//! * the exact rational coefficient sequences and monotonicity classifier
//!   behind the series-quotient arguments ([`series`]), plus the derivative
//!   quotient `phi` and the combination-gap functions ([`phi`]);
//! * four sharp-bound certificates `X^alpha Y^{1-alpha} < M < Y` for the
//!   base pairs (H,Q), (G,Q), (H,C), (G,C) with exponents 2/9, 1/3, 5/12,
//!   5/9, endpoint estimation of those exponents, and seeded verification
//!   sweeps with machine-readable reports ([`bounds`]);
//! * the classical inequality catalog (product bounds, Ky Fan ratios,
//!   generalized-log-mean sandwich) as checkable margins ([`known`],
//!   [`logmean`]).
//!
//! ```
//! use nsmean::{neuman_sandor, mean_eval, MeanKind, PositivePair};
//!
//! let pair = PositivePair::new(2.0, 1.0).unwrap();
//! let m = neuman_sandor(&pair);
//! assert!(mean_eval(MeanKind::Arithmetic, &pair) < m);
//! assert!(m < mean_eval(MeanKind::SeiffertSecond, &pair));
//! ```

pub mod asinh;
pub mod bounds;
pub mod descriptor;
pub mod error;
pub mod known;
pub mod logmean;
pub mod means;
pub mod pair;
pub mod phi;
pub mod series;

pub use asinh::asinh_stable;
pub use bounds::{
    bound_ratio, certificate, certificates, estimate_sharp_exponents, geometric_combination,
    verify_double_inequality, BoundCertificate, BoundSide, CertificateId, ExtremalRatio,
    SharpnessEstimate, VerificationReport, Violation,
};
pub use descriptor::{monotone_ratio_check, MonotoneVerdict, NamedFunction};
pub use error::{Error, Result};
pub use known::{check_known_results, ky_fan_check, KnownResultOutcome, KyFanOutcome};
pub use logmean::{generalized_log_mean, solve_p0};
pub use means::{mean_eval, neuman_sandor, scaled_ratio, MeanKind};
pub use pair::{PositivePair, ScaledVariable, T_STAR};
pub use phi::{
    hyperbolic_checkpoints, phi_derivative, phi_eval, phi_series_with_tail, varphi,
    varphi_slope_f, varphi_slope_g, HyperbolicCheckpoint, PhiMethod,
};
pub use series::{
    classify_ratio_sequence, coeff, difference_sign, phi_ratio_closed_form, ratio_term,
    CoefficientSequence, MonotonicityPattern, Rational, SequenceClassification, SequencePair,
    SequenceRole, Sign,
};
