//! Behaviour of partial sums as the truncation grows.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::dispersion::DispersionRelation;
use crate::error::{Error, Result};
use crate::oscillator::OscillatorParams;
use crate::periodic::SeriesCoefficients;
use crate::profile::{check_periodic_grid, sup_distance};
use crate::regularity::Model;

/// Sup differences above this are visible at plotting resolution.
pub const OSCILLATION_FLOOR: f64 = 0.1;
/// A successive difference at least this fraction of its predecessor counts
/// as not decreasing.
pub const STALL_RATIO: f64 = 0.99;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Converging,
    Inconclusive,
    Oscillatory,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Converging => "converging",
            Verdict::Inconclusive => "inconclusive",
            Verdict::Oscillatory => "oscillatory",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ConvergenceReport {
    pub truncations: Vec<usize>,
    /// `max |S_{N_{i+1}} − S_{N_i}|` for consecutive truncations.
    pub sup_diffs: Vec<f64>,
    /// Root-mean-square of the same differences over the grid.
    pub l2_diffs: Vec<f64>,
    pub verdict: Verdict,
}

/// Oscillatory when every difference is visible and none shrinks;
/// converging when they strictly decrease.
pub fn classify_differences(sup_diffs: &[f64]) -> Verdict {
    let stalled = sup_diffs.windows(2).all(|w| w[1] >= STALL_RATIO * w[0]);
    let visible = sup_diffs.iter().all(|&d| d > OSCILLATION_FLOOR);
    if visible && stalled {
        Verdict::Oscillatory
    } else if sup_diffs.windows(2).all(|w| w[1] < w[0]) {
        Verdict::Converging
    } else {
        Verdict::Inconclusive
    }
}

pub fn convergence_report(
    params: &OscillatorParams,
    rel: &DispersionRelation,
    model: Model,
    t: f64,
    truncations: &[usize],
    grid: &[f64],
) -> Result<ConvergenceReport> {
    if truncations.len() < 2 || truncations.windows(2).any(|w| w[1] <= w[0]) {
        return Err(Error::BadTruncations);
    }
    check_periodic_grid(grid)?;
    let largest = *truncations.last().unwrap();
    let series = SeriesCoefficients::new(params, rel, model, largest, t)?;
    let profiles: Vec<Vec<f64>> = truncations
        .iter()
        .map(|&n| series.synthesize(grid, n, rayon::current_num_threads()))
        .collect();
    let sup_diffs: Vec<f64> = profiles
        .windows(2)
        .map(|w| sup_distance(&w[0], &w[1]))
        .collect();
    let l2_diffs = profiles
        .windows(2)
        .map(|w| {
            let ss: f64 = w[0].iter().zip(&w[1]).map(|(a, b)| (a - b) * (a - b)).sum();
            (ss / grid.len() as f64).sqrt()
        })
        .collect();
    Ok(ConvergenceReport {
        truncations: truncations.to_vec(),
        verdict: classify_differences(&sup_diffs),
        sup_diffs,
        l2_diffs,
    })
}
