use crate::means::MeanKind;

/// Errors produced by mean evaluation, series generation and verification.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("mean arguments must be positive finite reals, got ({a}, {b})")]
    NonPositiveInput { a: f64, b: f64 },

    #[error("argument {value} outside the domain {domain}")]
    OutOfDomain { value: f64, domain: &'static str },

    #[error("no scaled form is implemented for {0:?}")]
    UnsupportedScaledForm(MeanKind),

    #[error("arguments must be distinct")]
    DegeneratePair,

    #[error("Ky Fan ratios require both arguments in (0, 1/2)")]
    KyFanDomain,

    #[error("unknown certificate id `{0}` (expected HQ, GQ, HC or GC)")]
    UnknownCertificate(String),

    #[error("unknown function descriptor `{0}`")]
    UnknownDescriptor(String),

    #[error("unknown coefficient sequence `{0}` (expected phi, g-ratio or h-ratio)")]
    UnknownSequence(String),

    #[error("denominator coefficient vanishes at index {0}")]
    ZeroDenominator(usize),

    #[error("difference formula mismatch at index {index}: direct {direct} vs closed form {closed}")]
    DifferenceMismatch {
        index: usize,
        direct: String,
        closed: String,
    },

    #[error("ratio sequence has more than one monotonicity switch up to index {0}")]
    InconclusiveSequence(usize),

    #[error("classification horizon must be at least 4, got {0}")]
    HorizonTooSmall(usize),

    #[error("ratio function is not monotone: r({x_first}) = {q_first} vs r({x_second}) = {q_second}")]
    NonMonotoneRatio {
        x_first: f64,
        x_second: f64,
        q_first: f64,
        q_second: f64,
    },
}

pub type Result<T> = std::result::Result<T, Error>;
