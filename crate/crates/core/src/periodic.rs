//! Solution profiles on the periodic domain `−π < x < π`.
//!
//! Profiles are partial Fourier sums evaluated directly at every grid point,
//! always in ascending `k`, so the value at a point does not depend on how
//! the grid is split across threads.

use std::f64::consts::PI;

use rayon::prelude::*;

use crate::dispersion::DispersionRelation;
use crate::error::{time, Error, Result};
use crate::modal;
use crate::oscillator::OscillatorParams;
use crate::profile::{
    check_periodic_grid, Method, Normalization, Provenance, Solution, SolutionProfile,
};
use crate::regularity::Model;

/// Fourier coefficients of one solution at one time, `k = 0..=modes`.
#[derive(Debug, Clone, PartialEq)]
pub struct SeriesCoefficients {
    pub time: f64,
    pub model: Model,
    /// `½ a₀(t)`
    pub mean: f64,
    /// `a_k`, index `k − 1`.
    pub cosine: Vec<f64>,
    /// `b_k`, index `k − 1`; all zero for the bidirectional model.
    pub sine: Vec<f64>,
}

impl SeriesCoefficients {
    pub fn new(
        params: &OscillatorParams,
        rel: &DispersionRelation,
        model: Model,
        modes: usize,
        t: f64,
    ) -> Result<Self> {
        if modes < 1 {
            return Err(Error::ZeroTruncation);
        }
        let t = time(t)?;
        let ks = 1..=modes as u32;
        let (mean, cosine, sine) = match model {
            Model::Bidirectional => (
                0.5 * modal::a0_bidirectional(params, t),
                ks.map(|k| modal::ak_bidirectional(params, rel, k, t))
                    .collect(),
                vec![0.0; modes],
            ),
            Model::Unidirectional => {
                let (a, b) = ks
                    .map(|k| modal::modal_unidirectional(params, rel, k, t))
                    .unzip();
                (0.5 * modal::a0_unidirectional(params, t), a, b)
            }
        };
        Ok(SeriesCoefficients {
            time: t,
            model,
            mean,
            cosine,
            sine,
        })
    }

    pub fn modes(&self) -> usize {
        self.cosine.len()
    }

    /// Partial sum over `1 ≤ k ≤ modes` at one point.
    pub fn partial_sum(&self, x: f64, modes: usize) -> f64 {
        let mut sum = self.mean;
        match self.model {
            Model::Bidirectional => {
                for (i, a) in self.cosine[..modes].iter().enumerate() {
                    sum += a * ((i + 1) as f64 * x).cos();
                }
            }
            Model::Unidirectional => {
                for (i, (a, b)) in self.cosine[..modes].iter().zip(&self.sine).enumerate() {
                    let (s, c) = ((i + 1) as f64 * x).sin_cos();
                    sum += a * c + b * s;
                }
            }
        }
        sum
    }

    /// Partial sums at every grid point, with the grid split into `chunks`
    /// contiguous pieces evaluated in parallel.
    pub fn synthesize(&self, grid: &[f64], modes: usize, chunks: usize) -> Vec<f64> {
        let modes = modes.min(self.modes());
        let chunk_len = grid.len().div_ceil(chunks.max(1)).max(1);
        let mut out = vec![0.0; grid.len()];
        out.par_chunks_mut(chunk_len)
            .zip(grid.par_chunks(chunk_len))
            .for_each(|(dst, xs)| {
                for (d, &x) in dst.iter_mut().zip(xs) {
                    *d = self.partial_sum(x, modes);
                }
            });
        out
    }
}

fn default_chunks() -> usize {
    rayon::current_num_threads() * 4
}

/// Partial-sum profile of either model, grid split into `chunks` pieces.
pub fn eval_model_chunked(
    params: &OscillatorParams,
    rel: &DispersionRelation,
    model: Model,
    modes: usize,
    t: f64,
    grid: &[f64],
    chunks: usize,
) -> Result<SolutionProfile> {
    check_periodic_grid(grid)?;
    let series = SeriesCoefficients::new(params, rel, model, modes, t)?;
    let values = series.synthesize(grid, modes, chunks);
    SolutionProfile::new(
        t,
        grid.to_vec(),
        values,
        Provenance {
            solution: model.into(),
            relation: Some(*rel),
            method: Method::PartialSum { modes },
            normalization: Normalization::Absorbed,
            oscillator: *params,
        },
    )
}

pub fn eval_model(
    params: &OscillatorParams,
    rel: &DispersionRelation,
    model: Model,
    modes: usize,
    t: f64,
    grid: &[f64],
) -> Result<SolutionProfile> {
    eval_model_chunked(params, rel, model, modes, t, grid, default_chunks())
}

/// `u(x) = ½a₀(t) + Σ_{k=1}^{N} a_k(t) cos kx`.
pub fn eval_bidirectional(
    params: &OscillatorParams,
    rel: &DispersionRelation,
    modes: usize,
    t: f64,
    grid: &[f64],
) -> Result<SolutionProfile> {
    eval_model(params, rel, Model::Bidirectional, modes, t, grid)
}

/// `v(x) = ½a₀(t) + Σ_{k=1}^{N} [a_k(t) cos kx + b_k(t) sin kx]`.
pub fn eval_unidirectional(
    params: &OscillatorParams,
    rel: &DispersionRelation,
    modes: usize,
    t: f64,
    grid: &[f64],
) -> Result<SolutionProfile> {
    eval_model(params, rel, Model::Unidirectional, modes, t, grid)
}

/// Classical periodic solution as a sum over `2π`-translated light cones,
/// `u(x) = −Σ_n h̃(t − |x − 2nπ|/c)`, in the classical normalization.
pub fn dalembert_periodic(
    params: &OscillatorParams,
    t: f64,
    grid: &[f64],
) -> Result<SolutionProfile> {
    check_periodic_grid(grid)?;
    let t = time(t)?;
    let c = params.wave_speed();
    let reach = ((c * t + PI) / (2.0 * PI)).floor() as i64 + 1;
    let values = grid
        .par_iter()
        .map(|&x| {
            (-reach..=reach)
                .map(|n| -params.displacement(t - (x - 2.0 * PI * n as f64).abs() / c))
                .sum()
        })
        .collect();
    SolutionProfile::new(
        t,
        grid.to_vec(),
        values,
        Provenance {
            solution: Solution::ImageSum,
            relation: Some(DispersionRelation::Wave { c }),
            method: Method::ClosedForm,
            normalization: Normalization::Classical,
            oscillator: *params,
        },
    )
}

/// Largest `|u_{i+1} − 2u_i + u_{i−1}| / Δx²` over interior points of a
/// uniformly sampled profile.
pub fn max_second_difference(profile: &SolutionProfile) -> f64 {
    let g = &profile.grid;
    let dx = (g[g.len() - 1] - g[0]) / (g.len() - 1) as f64;
    profile
        .values
        .windows(3)
        .map(|w| (w[2] - 2.0 * w[1] + w[0]).abs())
        .fold(0.0, f64::max)
        / (dx * dx)
}
