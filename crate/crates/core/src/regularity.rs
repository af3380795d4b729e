//! Smoothness predicted from the large-wave-number growth of `ω(k)`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::dispersion::DispersionRelation;

/// Which family of forced equations is being solved.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Model {
    /// Second order in time; cosine series.
    Bidirectional,
    /// First order in time; full Fourier series.
    Unidirectional,
}

impl Model {
    pub fn as_str(&self) -> &'static str {
        match self {
            Model::Bidirectional => "bidirectional",
            Model::Unidirectional => "unidirectional",
        }
    }
}

impl fmt::Display for Model {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "class", rename_all = "snake_case")]
pub enum RegularityClass {
    /// Coefficients do not decay (`m = 0`); partial sums need not converge.
    NonDecaying,
    /// Sublinear dispersion in the bidirectional model; coefficients decay
    /// too slowly to rule out a fractal profile.
    FractalCandidate,
    /// No `Cⁿ` class follows from the decay rate alone.
    NoGuarantee,
    /// `u(t, ·) ∈ Cⁿ` for every `n ≤ max_derivative`.
    Smooth { max_derivative: u32 },
}

impl RegularityClass {
    /// Total order used to check that faster dispersion never makes things worse.
    pub fn rank(&self) -> u32 {
        match *self {
            RegularityClass::NonDecaying => 0,
            RegularityClass::FractalCandidate => 1,
            RegularityClass::NoGuarantee => 2,
            RegularityClass::Smooth { max_derivative } => 3 + max_derivative,
        }
    }
}

impl fmt::Display for RegularityClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RegularityClass::NonDecaying => f.write_str("non-decaying"),
            RegularityClass::FractalCandidate => f.write_str("fractal-candidate"),
            RegularityClass::NoGuarantee => f.write_str("no C^n guaranteed"),
            RegularityClass::Smooth { max_derivative } => write!(f, "C^{max_derivative}"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RegularityReport {
    pub model: Model,
    pub asymptotic_exponent: f64,
    /// Fourier coefficients decay like `|k|^(−coefficient_decay)`.
    pub coefficient_decay: f64,
    pub class: RegularityClass,
}

/// Largest integer `n ≥ 0` with `n < bound`, if any.
fn largest_below(bound: f64) -> Option<u32> {
    if bound > 0.0 {
        Some((bound.ceil() - 1.0) as u32)
    } else {
        None
    }
}

/// Classifies by asymptotic exponent alone.
pub fn classify_exponent(m: f64, model: Model) -> RegularityReport {
    let (decay, class) = match model {
        Model::Bidirectional => {
            let class = if m <= 0.0 {
                RegularityClass::NonDecaying
            } else if m < 1.0 {
                RegularityClass::FractalCandidate
            } else {
                largest_below(2.0 * m - 1.0).map_or(RegularityClass::NoGuarantee, |n| {
                    RegularityClass::Smooth { max_derivative: n }
                })
            };
            (2.0 * m, class)
        }
        Model::Unidirectional => {
            let class = if m <= 0.0 {
                RegularityClass::NonDecaying
            } else {
                largest_below(m - 1.0).map_or(RegularityClass::NoGuarantee, |n| {
                    RegularityClass::Smooth { max_derivative: n }
                })
            };
            (m, class)
        }
    };
    RegularityReport {
        model,
        asymptotic_exponent: m,
        coefficient_decay: decay.max(0.0),
        class,
    }
}

pub fn classify_regularity(rel: &DispersionRelation, model: Model) -> RegularityReport {
    classify_exponent(rel.asymptotic_exponent(), model)
}
