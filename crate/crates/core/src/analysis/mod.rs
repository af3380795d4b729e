//! Diagnostics for the smooth-versus-fractal dichotomy.

pub mod convergence;
pub mod fractal;
pub mod series;

pub use convergence::{classify_differences, convergence_report, ConvergenceReport, Verdict};
pub use fractal::{
    box_counting_dimension, box_counting_dimension_of, windowed_dimensions, FractalEstimate,
    ScaleCount,
};
pub use series::{
    log_singularity_closed_form, log_singularity_sum, partial_fraction_terms, PartialFractionTerms,
};
