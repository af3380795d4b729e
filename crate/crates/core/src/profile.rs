//! Sampled spatial profiles and the grids they live on.

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::dispersion::DispersionRelation;
use crate::error::{Error, Result};
use crate::oscillator::OscillatorParams;
use crate::regularity::Model;

/// Uniform periodic grid `x_j = −π + 2πj/M`, `j = 0..M`.
pub fn periodic_grid(points: usize) -> Vec<f64> {
    let m = points as f64;
    (0..points).map(|j| -PI + 2.0 * PI * j as f64 / m).collect()
}

/// Uniform grid on the closed interval `[−half_width, half_width]`.
pub fn symmetric_grid(half_width: f64, points: usize) -> Vec<f64> {
    if points < 2 {
        return vec![-half_width; points];
    }
    let last = (points - 1) as f64;
    (0..points)
        .map(|j| -half_width + 2.0 * half_width * j as f64 / last)
        .collect()
}

/// Checks length and strict monotonicity.
pub fn check_grid(grid: &[f64]) -> Result<()> {
    if grid.len() < 2 {
        return Err(Error::GridTooSmall {
            len: grid.len(),
            min: 2,
        });
    }
    for (i, x) in grid.iter().enumerate() {
        if !x.is_finite() {
            return Err(Error::NonFinite {
                name: "grid point",
                value: *x,
            });
        }
        if i > 0 && *x <= grid[i - 1] {
            return Err(Error::GridNotIncreasing { index: i });
        }
    }
    Ok(())
}

/// Additionally requires every point to lie in `[−π, π)`.
pub fn check_periodic_grid(grid: &[f64]) -> Result<()> {
    check_grid(grid)?;
    match grid.iter().find(|x| !(-PI..PI).contains(*x)) {
        Some(&x) => Err(Error::OutsideDomain { x }),
        None => Ok(()),
    }
}

/// Which forcing normalization a profile is expressed in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Normalization {
    /// Forcing `h'(t) δ(x)` (bidirectional) or `h(t) δ(x)/(2c)` (unidirectional).
    Absorbed,
    /// Classical wave problem `u_tt = c² u_xx − 2c h'(t) δ(x)`.
    Classical,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Method {
    /// Fourier partial sum over `1 ≤ k ≤ modes`.
    PartialSum { modes: usize },
    /// Exact closed form.
    ClosedForm,
    /// Composite midpoint rule for the inverse Fourier transform.
    Quadrature { k_max: f64, panels: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Solution {
    Bidirectional,
    Unidirectional,
    ImageSum,
    LambLine,
}

impl From<Model> for Solution {
    fn from(m: Model) -> Self {
        match m {
            Model::Bidirectional => Solution::Bidirectional,
            Model::Unidirectional => Solution::Unidirectional,
        }
    }
}

/// Where a profile came from.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Provenance {
    pub solution: Solution,
    pub relation: Option<DispersionRelation>,
    pub method: Method,
    pub normalization: Normalization,
    pub oscillator: OscillatorParams,
}

/// Solution `u(t, ·)` sampled on a grid.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SolutionProfile {
    pub time: f64,
    pub grid: Vec<f64>,
    pub values: Vec<f64>,
    pub provenance: Provenance,
}

impl SolutionProfile {
    pub(crate) fn new(
        time: f64,
        grid: Vec<f64>,
        values: Vec<f64>,
        provenance: Provenance,
    ) -> Result<Self> {
        debug_assert_eq!(grid.len(), values.len());
        if values.iter().any(|v| !v.is_finite()) {
            return Err(Error::NonFiniteResult("profile value"));
        }
        Ok(SolutionProfile {
            time,
            grid,
            values,
            provenance,
        })
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Re-expresses an absorbed-forcing profile in the classical normalization
    /// by multiplying with `−2c`. Profiles already classical are returned as is.
    pub fn into_classical(mut self) -> Self {
        if self.provenance.normalization == Normalization::Absorbed {
            let scale = self.provenance.oscillator.classical_scale();
            self.values.iter_mut().for_each(|v| *v *= scale);
            self.provenance.normalization = Normalization::Classical;
        }
        self
    }

    /// Largest `|u(x)|`.
    pub fn sup_norm(&self) -> f64 {
        self.values.iter().fold(0.0, |m, v| m.max(v.abs()))
    }

    /// Largest pointwise difference to another profile on the same grid.
    pub fn sup_distance(&self, other: &SolutionProfile) -> f64 {
        sup_distance(&self.values, &other.values)
    }

    /// On a uniform periodic grid of even length, `max |u(x_j) − u(x_{M−j})|`.
    pub fn max_even_asymmetry(&self) -> f64 {
        let n = self.values.len();
        (1..n)
            .map(|j| (self.values[j] - self.values[n - j]).abs())
            .fold(0.0, f64::max)
    }
}

pub fn sup_distance(a: &[f64], b: &[f64]) -> f64 {
    a.iter()
        .zip(b)
        .map(|(x, y)| (x - y).abs())
        .fold(0.0, f64::max)
}
