//! Closed-form Fourier coefficients of the periodic solutions.
//!
//! The bidirectional coefficient `a_k` solves
//! `a_k'' + ω(k)² a_k = h'(t)/π`, `a_k(0) = a_k'(0) = 0`, and the
//! unidirectional pair `(a_k, b_k)` comes from the first-order mode equation
//! of `v_t + L[v] = h(t) δ(x) / (2c)`. Both reuse the same four amplitude
//! factors `(p, q, r, s)` over the shared denominator
//! `D = (σ² − ω²)² + 4ω²β²`.

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::dispersion::DispersionRelation;
use crate::oscillator::OscillatorParams;

/// Amplitude factors of a single Fourier mode with frequency `ω`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ModalCoefficients {
    pub p: f64,
    pub q: f64,
    pub r: f64,
    pub s: f64,
    pub denominator: f64,
}

impl ModalCoefficients {
    pub fn new(params: &OscillatorParams, omega: f64) -> Self {
        let beta = params.beta();
        let sigma2 = params.sigma() * params.sigma();
        let varsigma = params.varsigma();
        let w2 = omega * omega;
        let detune = sigma2 - w2;
        // strictly positive: 4ω²β² > 0 unless ω = 0, where D = σ⁴
        let denominator = detune * detune + 4.0 * w2 * beta * beta;
        ModalCoefficients {
            p: varsigma * detune / denominator,
            q: 2.0 * omega * beta * varsigma / denominator,
            r: beta * (sigma2 + w2) / denominator,
            s: omega * (2.0 * beta * beta - sigma2 + w2) / denominator,
            denominator,
        }
    }
}

/// Frequency used in the exponentially decaying transient.
///
/// The damped frequency `ς` is the only choice that satisfies both initial
/// conditions; `Natural` (`σ`) exists to demonstrate that it does not.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum TransientFrequency {
    #[default]
    Damped,
    Natural,
}

impl TransientFrequency {
    fn value(self, params: &OscillatorParams) -> f64 {
        match self {
            TransientFrequency::Damped => params.varsigma(),
            TransientFrequency::Natural => params.sigma(),
        }
    }
}

/// `∫₀ᵗ h(s) ds / σ²`-shaped bracket shared by both `a₀` formulas:
/// `ς − e^{−βt}(ς cos ςt + β sin ςt)`.
fn zero_mode_bracket(params: &OscillatorParams, t: f64) -> f64 {
    let (b, vs) = (params.beta(), params.varsigma());
    let (sin, cos) = (vs * t).sin_cos();
    vs - (-b * t).exp() * (vs * cos + b * sin)
}

/// Zero mode of the bidirectional cosine series.
pub fn a0_bidirectional(params: &OscillatorParams, t: f64) -> f64 {
    let (b, vs) = (params.beta(), params.varsigma());
    params.amplitude() * zero_mode_bracket(params, t) / (PI * (b * b + vs * vs))
}

/// Zero mode of the unidirectional Fourier series.
pub fn a0_unidirectional(params: &OscillatorParams, t: f64) -> f64 {
    let sigma2 = params.sigma() * params.sigma();
    params.amplitude() * zero_mode_bracket(params, t) / (2.0 * params.wave_speed() * PI * sigma2)
}

/// Bidirectional coefficient for a mode of frequency `omega`.
///
/// The formula is analytic in `t`; it is the physical solution for `t ≥ 0`.
pub fn bidirectional_mode(params: &OscillatorParams, omega: f64, t: f64) -> f64 {
    bidirectional_mode_with(params, omega, t, TransientFrequency::Damped)
}

pub fn bidirectional_mode_with(
    params: &OscillatorParams,
    omega: f64,
    t: f64,
    transient: TransientFrequency,
) -> f64 {
    let m = ModalCoefficients::new(params, omega);
    let (sw, cw) = (omega * t).sin_cos();
    let (st, ct) = (transient.value(params) * t).sin_cos();
    let decay = (-params.beta() * t).exp();
    params.amplitude() / PI * (m.p * cw + m.q * sw - decay * (m.p * ct + m.r * st))
}

/// Bidirectional coefficient `a_k(t)`, `k ≥ 1`.
pub fn ak_bidirectional(
    params: &OscillatorParams,
    rel: &DispersionRelation,
    k: u32,
    t: f64,
) -> f64 {
    bidirectional_mode(params, rel.omega(k as f64), t)
}

/// Unidirectional pair `(a, b)` for a mode of frequency `omega`.
pub fn unidirectional_mode(params: &OscillatorParams, omega: f64, t: f64) -> (f64, f64) {
    let m = ModalCoefficients::new(params, omega);
    let (sw, cw) = (omega * t).sin_cos();
    let (st, ct) = (params.varsigma() * t).sin_cos();
    let decay = (-params.beta() * t).exp();
    let scale = params.amplitude() / (2.0 * params.wave_speed() * PI);
    let a = scale * (m.p * cw + m.q * sw - decay * (m.p * ct + m.r * st));
    let b = scale * (-m.q * cw + m.p * sw + decay * (m.q * ct + m.s * st));
    (a, b)
}

/// Unidirectional coefficients `(a_k(t), b_k(t))`, `k ≥ 1`.
pub fn modal_unidirectional(
    params: &OscillatorParams,
    rel: &DispersionRelation,
    k: u32,
    t: f64,
) -> (f64, f64) {
    unidirectional_mode(params, rel.omega(k as f64), t)
}

/// Cosine coefficient of the classical periodic wave problem
/// `u_tt = c² u_xx − 2c h'(t) δ(x)`, written out directly in terms of `ck`.
pub fn classical_wave_coefficient(params: &OscillatorParams, k: u32, t: f64) -> f64 {
    let c = params.wave_speed();
    let (b, sigma, vs) = (params.beta(), params.sigma(), params.varsigma());
    let ck = c * k as f64;
    let den = (sigma * sigma - ck * ck).powi(2) + 4.0 * ck * ck * b * b;
    let pk = vs * (sigma * sigma - ck * ck) / den;
    let qk = 2.0 * ck * b * vs / den;
    let rk = b * (sigma * sigma + ck * ck) / den;
    -2.0 * c * params.amplitude() / PI
        * (pk * (ck * t).cos() + qk * (ck * t).sin()
            - (-b * t).exp() * (pk * (vs * t).cos() + rk * (vs * t).sin()))
}
