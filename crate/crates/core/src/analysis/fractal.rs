//! Box-counting dimension of a sampled graph.
//!
//! The graph is mapped to the unit square and covered by dyadic boxes of side
//! `2^{−3}, 2^{−4}, …`. In each column the straight segments joining
//! consecutive samples are clipped to the column and the occupied rows counted.
//! The dimension is the least-squares slope of `log N(ε)` against `log(1/ε)`,
//! skipping the coarsest scale (trend dominated) and the two finest (limited
//! by sampling and truncation).

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::profile::SolutionProfile;

pub const MIN_SAMPLES: usize = 1024;
pub const MIN_SCALES: usize = 5;
pub const DEFAULT_SCALES: usize = 8;
/// Coarsest box side is `2^{−COARSEST_LEVEL}`.
pub const COARSEST_LEVEL: u32 = 3;
const SKIP_COARSE: usize = 1;
const SKIP_FINE: usize = 2;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ScaleCount {
    pub box_size: f64,
    pub count: u64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FractalEstimate {
    pub dimension: f64,
    /// Smallest and largest box side used in the fit.
    pub scale_range: (f64, f64),
    /// Root-mean-square residual of the log-log fit.
    pub fit_residual: f64,
    /// Counts at every scale, coarsest first.
    pub box_counts: Vec<ScaleCount>,
    /// Set when the graph has no vertical extent; the dimension is then 1.
    pub flat: bool,
}

fn check_uniform(grid: &[f64]) -> Result<()> {
    let n = grid.len();
    let step = (grid[n - 1] - grid[0]) / (n - 1) as f64;
    if step.is_nan() || step <= 0.0 {
        return Err(Error::GridNotIncreasing { index: 1 });
    }
    for (i, w) in grid.windows(2).enumerate() {
        if ((w[1] - w[0]) - step).abs() > 1e-6 * step {
            return Err(Error::GridNotUniform { index: i + 1 });
        }
    }
    Ok(())
}

fn count_boxes(xs: &[f64], ys: &[f64], level: u32) -> u64 {
    let cols = 1usize << level;
    let n = cols as f64;
    let mut lo = vec![f64::INFINITY; cols];
    let mut hi = vec![f64::NEG_INFINITY; cols];
    let column = |x: f64| ((x * n) as usize).min(cols - 1);
    for i in 0..xs.len() - 1 {
        let (x0, x1, y0, y1) = (xs[i], xs[i + 1], ys[i], ys[i + 1]);
        let slope = (y1 - y0) / (x1 - x0);
        for c in column(x0)..=column(x1) {
            let xa = x0.max(c as f64 / n);
            let xb = x1.min((c + 1) as f64 / n);
            if xb < xa {
                continue;
            }
            let ya = y0 + slope * (xa - x0);
            let yb = y0 + slope * (xb - x0);
            lo[c] = lo[c].min(ya.min(yb));
            hi[c] = hi[c].max(ya.max(yb));
        }
    }
    lo.iter()
        .zip(&hi)
        .filter(|(l, _)| l.is_finite())
        .map(|(&l, &h)| {
            let top = ((h * n) as u64).min(cols as u64 - 1);
            let bottom = ((l.max(0.0) * n) as u64).min(cols as u64 - 1);
            top - bottom + 1
        })
        .sum()
}

/// Box-counting dimension of the graph of `values` over a uniform `grid`.
pub fn box_counting_dimension_of(
    grid: &[f64],
    values: &[f64],
    n_scales: usize,
) -> Result<FractalEstimate> {
    if grid.len() < MIN_SAMPLES || values.len() != grid.len() {
        return Err(Error::GridTooSmall {
            len: grid.len().min(values.len()),
            min: MIN_SAMPLES,
        });
    }
    if n_scales < MIN_SCALES {
        return Err(Error::TooFewScales {
            got: n_scales,
            min: MIN_SCALES,
        });
    }
    check_uniform(grid)?;
    if let Some(&v) = values.iter().find(|v| !v.is_finite()) {
        return Err(Error::NonFinite {
            name: "profile value",
            value: v,
        });
    }
    let levels: Vec<u32> = (0..n_scales as u32).map(|i| COARSEST_LEVEL + i).collect();
    let fitted = &levels[SKIP_COARSE..levels.len() - SKIP_FINE];
    let scale_range = (
        0.5f64.powi(*fitted.last().unwrap() as i32),
        0.5f64.powi(fitted[0] as i32),
    );

    let (vmin, vmax) = values
        .iter()
        .fold((f64::INFINITY, f64::NEG_INFINITY), |(a, b), &v| {
            (a.min(v), b.max(v))
        });
    if vmax - vmin <= 0.0 {
        let box_counts = levels
            .iter()
            .map(|&l| ScaleCount {
                box_size: 0.5f64.powi(l as i32),
                count: 1u64 << l,
            })
            .collect();
        return Ok(FractalEstimate {
            dimension: 1.0,
            scale_range,
            fit_residual: 0.0,
            box_counts,
            flat: true,
        });
    }

    let span = grid[grid.len() - 1] - grid[0];
    let xs: Vec<f64> = grid.iter().map(|x| (x - grid[0]) / span).collect();
    let ys: Vec<f64> = values.iter().map(|v| (v - vmin) / (vmax - vmin)).collect();
    let box_counts: Vec<ScaleCount> = levels
        .par_iter()
        .map(|&l| ScaleCount {
            box_size: 0.5f64.powi(l as i32),
            count: count_boxes(&xs, &ys, l),
        })
        .collect();

    let points: Vec<(f64, f64)> = box_counts[SKIP_COARSE..box_counts.len() - SKIP_FINE]
        .iter()
        .map(|s| ((1.0 / s.box_size).ln(), (s.count as f64).ln()))
        .collect();
    let (slope, residual) = least_squares(&points);
    Ok(FractalEstimate {
        dimension: slope,
        scale_range,
        fit_residual: residual,
        box_counts,
        flat: false,
    })
}

pub fn box_counting_dimension(
    profile: &SolutionProfile,
    n_scales: usize,
) -> Result<FractalEstimate> {
    box_counting_dimension_of(&profile.grid, &profile.values, n_scales)
}

/// Dimension estimates on `windows` equal, contiguous pieces of the profile,
/// as `(x_start, x_end, estimate)`.
pub fn windowed_dimensions(
    profile: &SolutionProfile,
    windows: usize,
    n_scales: usize,
) -> Result<Vec<(f64, f64, FractalEstimate)>> {
    let len = profile.len() / windows.max(1);
    (0..windows.max(1))
        .map(|w| {
            let range = w * len..(w + 1) * len;
            let grid = &profile.grid[range.clone()];
            let est = box_counting_dimension_of(grid, &profile.values[range], n_scales)?;
            Ok((grid[0], grid[grid.len() - 1], est))
        })
        .collect()
}

/// Slope and RMS residual of the least-squares line through `points`.
fn least_squares(points: &[(f64, f64)]) -> (f64, f64) {
    let n = points.len() as f64;
    let mx = points.iter().map(|p| p.0).sum::<f64>() / n;
    let my = points.iter().map(|p| p.1).sum::<f64>() / n;
    let sxx: f64 = points.iter().map(|p| (p.0 - mx).powi(2)).sum();
    let sxy: f64 = points.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    let slope = sxy / sxx;
    let ssr: f64 = points
        .iter()
        .map(|p| (p.1 - my - slope * (p.0 - mx)).powi(2))
        .sum();
    (slope, (ssr / n).sqrt())
}
