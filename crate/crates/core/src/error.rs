use thiserror::Error;

/// Errors surfaced by exact and numeric routines.
///
/// Most operations in this crate are total on their documented domains and
/// return plain values; `Error` covers contract violations (mismatched series
/// orders, out-of-range enumeration requests) and the one genuinely
/// load-bearing failure mode: a rational computation that was required to be
/// integral and is not.
#[derive(Debug, Error)]
pub enum Error {
    #[error("multinomial parts sum to {sum}, expected n = {n}")]
    PartsSumMismatch { n: u32, sum: u32 },

    #[error("series truncation orders differ: {left} vs {right}")]
    OrderMismatch { left: usize, right: usize },

    #[error("series exponential requires a zero constant term, found {found}")]
    NonzeroConstantTerm { found: String },

    #[error("coefficient index {n} exceeds truncation order {order}")]
    CoefficientBeyondOrder { n: usize, order: usize },

    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    #[error("explicit formula requires beta >= 1, got beta = {beta}")]
    ExplicitNeedsPositiveBeta { beta: String },

    #[error("non-integral result in {context}: {value}")]
    NonIntegral { context: String, value: String },

    #[error("{what} = {value} exceeds the exhaustive enumeration cap {cap}")]
    EnumerationCap {
        what: &'static str,
        value: u32,
        cap: u32,
    },

    #[error("expansion index e = {e} out of range for n = {n}")]
    ExpansionIndex { n: u32, e: u32 },

    #[error("asymptotic evaluation requires lambda > n, got lambda = {lambda}, n = {n}")]
    LambdaTooSmall { lambda: String, n: u32 },
}

pub type Result<T> = std::result::Result<T, Error>;
