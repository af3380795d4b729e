//! Solutions on the whole line.
//!
//! The dispersive solutions are inverse Fourier transforms of the same modal
//! closed forms used on the periodic domain, now at continuous wave number:
//!
//! ```text
//! u(t, x) = ½ ∫ [a(|k|, t) cos kx + sgn(k) b(|k|, t) sin kx] dk
//! ```
//!
//! with `b ≡ 0` for the bidirectional model. The integral is truncated to
//! `[−k_max, k_max]` and evaluated by the composite midpoint rule.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::dispersion::DispersionRelation;
use crate::error::{positive, time, Error, Result};
use crate::modal::{self, ModalCoefficients};
use crate::oscillator::OscillatorParams;
use crate::profile::{check_grid, Method, Normalization, Provenance, Solution, SolutionProfile};
use crate::regularity::{classify_regularity, Model};

pub const MIN_PANELS: usize = 64;
/// Tail estimates above this flag the cutoff as too small.
pub const TAIL_FLAG: f64 = 1e-2;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct LineQuadrature {
    pub k_max: f64,
    pub panels: usize,
}

impl Default for LineQuadrature {
    fn default() -> Self {
        LineQuadrature {
            k_max: 400.0,
            panels: 1 << 15,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LineProfile {
    pub profile: SolutionProfile,
    /// Heuristic size of the neglected tail `|k| > k_max`.
    pub error_estimate: f64,
    pub k_max_too_small: bool,
}

/// Lamb's solution of the classical problem,
/// `u = −C e^{−(ct−|x|)/(2b)} sin κ(ct − |x|)` inside the light cone and zero
/// outside.
pub fn lamb_line_closed_form(
    params: &OscillatorParams,
    t: f64,
    grid: &[f64],
) -> Result<SolutionProfile> {
    check_grid(grid)?;
    let t = time(t)?;
    let c = params.wave_speed();
    let (b, kappa) = (params.lamb_b(), params.lamb_kappa());
    let amp = params.amplitude();
    let values = grid
        .iter()
        .map(|x| {
            let lag = c * t - x.abs();
            if lag > 0.0 {
                -amp * (-lag / (2.0 * b)).exp() * (kappa * lag).sin()
            } else {
                0.0
            }
        })
        .collect();
    SolutionProfile::new(
        t,
        grid.to_vec(),
        values,
        Provenance {
            solution: Solution::LambLine,
            relation: Some(DispersionRelation::Wave { c }),
            method: Method::ClosedForm,
            normalization: Normalization::Classical,
            oscillator: *params,
        },
    )
}

/// Magnitude bound on the integrand at wave number `k`.
fn envelope(params: &OscillatorParams, model: Model, omega: f64, t: f64) -> f64 {
    let m = ModalCoefficients::new(params, omega);
    let decay = (-params.beta() * t).exp();
    let amp = params.amplitude().abs() / std::f64::consts::PI;
    match model {
        Model::Bidirectional => amp * (m.p.abs() + m.q.abs() + decay * (m.p.abs() + m.r.abs())),
        Model::Unidirectional => {
            let a = m.p.abs() + m.q.abs() + decay * (m.p.abs() + m.r.abs());
            let b = m.q.abs() + m.p.abs() + decay * (m.q.abs() + m.s.abs());
            amp * (a + b) / (2.0 * params.wave_speed())
        }
    }
}

/// Dispersive line solution by midpoint quadrature, in the absorbed
/// normalization.
pub fn line_profile_quadrature(
    params: &OscillatorParams,
    rel: &DispersionRelation,
    model: Model,
    t: f64,
    grid: &[f64],
    quad: LineQuadrature,
) -> Result<LineProfile> {
    check_grid(grid)?;
    let t = time(t)?;
    let k_max = positive("k_max", quad.k_max)?;
    if quad.panels < MIN_PANELS {
        return Err(Error::TooFewPanels {
            panels: quad.panels,
            min: MIN_PANELS,
        });
    }
    let width = 2.0 * k_max / quad.panels as f64;
    // (k, weight·a, weight·sgn(k)·b) per panel midpoint
    let nodes: Vec<(f64, f64, f64)> = (0..quad.panels)
        .map(|j| {
            let k = -k_max + (j as f64 + 0.5) * width;
            let omega = rel.omega(k);
            let (a, b) = match model {
                Model::Bidirectional => (modal::bidirectional_mode(params, omega, t), 0.0),
                Model::Unidirectional => modal::unidirectional_mode(params, omega, t),
            };
            let signed_b = if k < 0.0 { -b } else { b };
            (k, 0.5 * width * a, 0.5 * width * signed_b)
        })
        .collect();
    if nodes
        .iter()
        .any(|(_, a, b)| !(a.is_finite() && b.is_finite()))
    {
        return Err(Error::NonFiniteResult("line integrand"));
    }

    let values: Vec<f64> = grid
        .par_iter()
        .map(|&x| {
            let mut sum = 0.0;
            match model {
                Model::Bidirectional => {
                    for &(k, a, _) in &nodes {
                        sum += a * (k * x).cos();
                    }
                }
                Model::Unidirectional => {
                    for &(k, a, b) in &nodes {
                        let (s, c) = (k * x).sin_cos();
                        sum += a * c + b * s;
                    }
                }
            }
            sum
        })
        .collect();

    let decay = classify_regularity(rel, model).coefficient_decay;
    let edge = envelope(params, model, rel.omega(k_max), t) * k_max;
    let error_estimate = if decay > 1.0 {
        edge / (decay - 1.0)
    } else {
        edge
    };

    let profile = SolutionProfile::new(
        t,
        grid.to_vec(),
        values,
        Provenance {
            solution: model.into(),
            relation: Some(*rel),
            method: Method::Quadrature {
                k_max,
                panels: quad.panels,
            },
            normalization: Normalization::Absorbed,
            oscillator: *params,
        },
    )?;
    Ok(LineProfile {
        profile,
        error_estimate,
        k_max_too_small: error_estimate > TAIL_FLAG,
    })
}

/// Classical wave problem (`ω = ck`) by quadrature, rescaled by `−2c` into
/// the normalization of [`lamb_line_closed_form`].
pub fn line_profile_classical(
    params: &OscillatorParams,
    t: f64,
    grid: &[f64],
    quad: LineQuadrature,
) -> Result<LineProfile> {
    let wave = DispersionRelation::Wave {
        c: params.wave_speed(),
    };
    let mut out = line_profile_quadrature(params, &wave, Model::Bidirectional, t, grid, quad)?;
    out.error_estimate *= params.classical_scale().abs();
    out.profile = out.profile.into_classical();
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::profile::symmetric_grid;

    fn reference_params() -> OscillatorParams {
        OscillatorParams::reference()
    }

    #[test]
    fn closed_form_at_origin() {
        let p = reference_params();
        let prof = lamb_line_closed_form(&p, 10.0, &[-1.0, 0.0]).unwrap();
        let expected = 0.5 * (-1.0_f64).exp() * (10.0 * 0.99_f64.sqrt()).sin();
        assert!((prof.values[1] - expected).abs() < 1e-15);
        assert!((prof.values[1] + 0.092_208_3).abs() < 1e-7);
    }

    #[test]
    fn closed_form_outside_cone_and_at_start() {
        let p = reference_params();
        let t = 4.0;
        let x = 1.5 * p.wave_speed() * t;
        let prof = lamb_line_closed_form(&p, t, &[-x, x]).unwrap();
        assert_eq!(prof.values, vec![0.0, 0.0]);
        let start = lamb_line_closed_form(&p, 0.0, &symmetric_grid(5.0, 11)).unwrap();
        assert!(start.values.iter().all(|&v| v == 0.0));
    }

    #[test]
    fn closed_form_is_delayed_displacement() {
        let p = OscillatorParams::from_physical(10.0, 4.0, 1.0, 1.0, 0.7).unwrap();
        let grid = symmetric_grid(8.0, 33);
        let prof = lamb_line_closed_form(&p, 3.0, &grid).unwrap();
        for (x, u) in grid.iter().zip(&prof.values) {
            let exact = -p.displacement(3.0 - x.abs() / p.wave_speed());
            assert!((u - exact).abs() < 1e-14);
        }
    }

    #[test]
    fn classical_scaling_applied_once() {
        let p = OscillatorParams::from_physical(10.0, 4.0, 1.0, 1.0, 0.7).unwrap();
        let grid = symmetric_grid(3.0, 7);
        let quad = LineQuadrature {
            k_max: 50.0,
            panels: 1024,
        };
        let wave = DispersionRelation::Wave { c: p.wave_speed() };
        let raw =
            line_profile_quadrature(&p, &wave, Model::Bidirectional, 1.0, &grid, quad).unwrap();
        let classical = line_profile_classical(&p, 1.0, &grid, quad).unwrap();
        assert_eq!(
            classical.profile.provenance.normalization,
            Normalization::Classical
        );
        for (a, b) in raw.profile.values.iter().zip(&classical.profile.values) {
            assert_eq!(*b, -4.0 * a);
        }
        // idempotent
        let twice = classical.profile.clone().into_classical();
        assert_eq!(twice.values, classical.profile.values);
    }

    #[test]
    fn quadrature_vanishes_at_start() {
        let grid = symmetric_grid(10.0, 41);
        for model in [Model::Bidirectional, Model::Unidirectional] {
            let out = line_profile_quadrature(
                &reference_params(),
                &DispersionRelation::SqrtAbsK,
                model,
                0.0,
                &grid,
                LineQuadrature::default(),
            )
            .unwrap();
            assert!(out.profile.sup_norm() < 1e-6);
        }
    }

    #[test]
    fn quadrature_rejects_bad_settings() {
        let grid = symmetric_grid(1.0, 5);
        let rel = DispersionRelation::Quadratic;
        let few = LineQuadrature {
            k_max: 10.0,
            panels: 32,
        };
        assert!(matches!(
            line_profile_quadrature(
                &reference_params(),
                &rel,
                Model::Bidirectional,
                1.0,
                &grid,
                few
            ),
            Err(Error::TooFewPanels { .. })
        ));
        let zero = LineQuadrature {
            k_max: 0.0,
            panels: 128,
        };
        assert!(line_profile_quadrature(
            &reference_params(),
            &rel,
            Model::Bidirectional,
            1.0,
            &grid,
            zero
        )
        .is_err());
    }

    #[test]
    fn matches_classical_closed_form() {
        let p = reference_params();
        let grid = symmetric_grid(10.0, 201);
        let t = 5.0;
        let quad = line_profile_classical(&p, t, &grid, LineQuadrature::default()).unwrap();
        assert!(!quad.k_max_too_small);
        let exact = lamb_line_closed_form(&p, t, &grid).unwrap();
        let mut worst: f64 = 0.0;
        for (i, x) in grid.iter().enumerate() {
            if x.abs() < 0.2 || (x.abs() - t).abs() < 0.2 {
                continue;
            }
            worst = worst.max((quad.profile.values[i] - exact.values[i]).abs());
        }
        assert!(worst < 5e-3, "{worst}");
    }

    #[test]
    fn unidirectional_transport_on_the_line() {
        // v = h(t − x/c)/(2c²) on 0 < x < ct, zero elsewhere
        let p = reference_params();
        let t = 3.0;
        let grid = symmetric_grid(6.0, 121);
        let out = line_profile_quadrature(
            &p,
            &DispersionRelation::Wave { c: 1.0 },
            Model::Unidirectional,
            t,
            &grid,
            LineQuadrature {
                k_max: 2000.0,
                panels: 1 << 16,
            },
        )
        .unwrap();
        let mut worst: f64 = 0.0;
        for (x, v) in grid.iter().zip(&out.profile.values) {
            if x.abs() < 0.2 || (x - t).abs() < 0.2 {
                continue;
            }
            let exact = if *x > 0.0 {
                p.displacement(t - x) / 2.0
            } else {
                0.0
            };
            worst = worst.max((v - exact).abs());
        }
        assert!(worst < 1e-2, "{worst}");
    }
}
