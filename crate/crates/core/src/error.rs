use thiserror::Error;

/// Errors raised by the solver and analysis routines.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("{name} must be positive and finite, got {value}")]
    NonPositive { name: &'static str, value: f64 },

    #[error("{name} must be finite, got {value}")]
    NonFinite { name: &'static str, value: f64 },

    #[error(
        "oscillator must be underdamped (sigma > beta > 0), got beta = {beta}, sigma = {sigma}"
    )]
    NotUnderdamped { beta: f64, sigma: f64 },

    #[error("inconsistent oscillator parameters: {0}")]
    Inconsistent(String),

    #[error("dispersion relation {relation}: {message}")]
    InvalidRelation {
        relation: &'static str,
        message: String,
    },

    #[error("time must be finite and non-negative, got {0}")]
    NegativeTime(f64),

    #[error("truncation must be at least 1")]
    ZeroTruncation,

    #[error("grid must contain at least {min} points, got {len}")]
    GridTooSmall { len: usize, min: usize },

    #[error("grid must be strictly increasing (violated at index {index})")]
    GridNotIncreasing { index: usize },

    #[error("grid point {x} lies outside the periodic domain [-pi, pi)")]
    OutsideDomain { x: f64 },

    #[error("grid is not uniform (spacing deviates at index {index})")]
    GridNotUniform { index: usize },

    #[error("time step {dt} too coarse for frequency {frequency}: dt * frequency must not exceed {limit}")]
    StepTooCoarse { dt: f64, frequency: f64, limit: f64 },

    #[error("quadrature needs at least {min} panels, got {panels}")]
    TooFewPanels { panels: usize, min: usize },

    #[error("at least {min} scales required, got {got}")]
    TooFewScales { got: usize, min: usize },

    #[error("at least two ascending truncations required")]
    BadTruncations,

    #[error("x = 0 is the logarithmic singularity of the series")]
    SingularPoint,

    #[error("x = {0} lies outside [-pi, pi]")]
    OutsidePeriod(f64),

    #[error("k = {k} with alpha = {alpha} makes |k| + alpha vanish")]
    VanishingDenominator { k: i64, alpha: f64 },

    #[error("non-finite value encountered: {0}")]
    NonFiniteResult(&'static str),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn positive(name: &'static str, value: f64) -> Result<f64> {
    if value.is_finite() && value > 0.0 {
        Ok(value)
    } else {
        Err(Error::NonPositive { name, value })
    }
}

pub(crate) fn time(t: f64) -> Result<f64> {
    if t.is_finite() && t >= 0.0 {
        Ok(t)
    } else {
        Err(Error::NegativeTime(t))
    }
}

pub(crate) fn finite(name: &'static str, value: f64) -> Result<f64> {
    if value.is_finite() {
        Ok(value)
    } else {
        Err(Error::NonFinite { name, value })
    }
}
