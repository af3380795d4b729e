//! Numerical integrators that check the closed forms.
//!
//! Nothing here calls into [`crate::modal`]: the forcing is rebuilt from the
//! oscillator parameters and the mode equations are integrated with the
//! classical fourth-order Runge–Kutta scheme.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{positive, time, Error, Result};
use crate::oscillator::OscillatorParams;

/// Largest admissible `dt · max(ω, σ)`.
pub const RESOLUTION_LIMIT: f64 = 0.1;

/// Default step: `1e−4`, refined so that `ω · dt ≤ 1e−2` for fast modes.
pub fn default_step(omega: f64) -> f64 {
    if omega > 100.0 {
        1e-2 / omega
    } else {
        1e-4
    }
}

type State = [f64; 2];

fn rk4_step<F>(f: &F, t: f64, y: State, dt: f64) -> State
where
    F: Fn(f64, State) -> State,
{
    let add = |y: State, k: State, h: f64| [y[0] + h * k[0], y[1] + h * k[1]];
    let k1 = f(t, y);
    let k2 = f(t + 0.5 * dt, add(y, k1, 0.5 * dt));
    let k3 = f(t + 0.5 * dt, add(y, k2, 0.5 * dt));
    let k4 = f(t + dt, add(y, k3, dt));
    [
        y[0] + dt / 6.0 * (k1[0] + 2.0 * k2[0] + 2.0 * k3[0] + k4[0]),
        y[1] + dt / 6.0 * (k1[1] + 2.0 * k2[1] + 2.0 * k3[1] + k4[1]),
    ]
}

/// Integrates from `(t = 0, y0)` and records the state at each requested time.
/// Each leg uses the largest uniform step not exceeding `dt`.
fn integrate<F>(f: F, y0: State, times: &[f64], dt: f64) -> Vec<State>
where
    F: Fn(f64, State) -> State,
{
    let mut out = Vec::with_capacity(times.len());
    let (mut t, mut y) = (0.0, y0);
    for &target in times {
        let span = target - t;
        if span > 0.0 {
            let steps = (span / dt).ceil().max(1.0) as u64;
            let h = span / steps as f64;
            for i in 0..steps {
                y = rk4_step(&f, t + i as f64 * h, y, h);
            }
            t = target;
        }
        out.push(y);
    }
    out
}

fn check_times(times: &[f64]) -> Result<()> {
    let mut prev = 0.0;
    for &t in times {
        time(t)?;
        if t < prev {
            return Err(Error::Inconsistent("sample times must be ascending".into()));
        }
        prev = t;
    }
    Ok(())
}

fn check_step(params: &OscillatorParams, omega: f64, dt: f64) -> Result<()> {
    positive("dt", dt)?;
    if !(omega.is_finite() && omega >= 0.0) {
        return Err(Error::NonFinite {
            name: "omega",
            value: omega,
        });
    }
    let frequency = omega.max(params.sigma());
    if dt * frequency > RESOLUTION_LIMIT {
        return Err(Error::StepTooCoarse {
            dt,
            frequency,
            limit: RESOLUTION_LIMIT,
        });
    }
    Ok(())
}

/// `h(t) = C e^{−βt} sin ςt`
fn forcing(params: &OscillatorParams, t: f64) -> f64 {
    params.amplitude() * (-params.beta() * t).exp() * (params.varsigma() * t).sin()
}

/// `h'(t) = C e^{−βt}(ς cos ςt − β sin ςt)`
fn forcing_rate(params: &OscillatorParams, t: f64) -> f64 {
    let (b, w) = (params.beta(), params.varsigma());
    let (s, c) = (w * t).sin_cos();
    params.amplitude() * (-b * t).exp() * (w * c - b * s)
}

/// `(a, a')` of `a'' + ω² a = h'(t)/π`, `a(0) = a'(0) = 0`, at each time.
pub fn rk4_bidirectional_samples(
    params: &OscillatorParams,
    omega: f64,
    times: &[f64],
    dt: f64,
) -> Result<Vec<(f64, f64)>> {
    check_step(params, omega, dt)?;
    check_times(times)?;
    let w2 = omega * omega;
    let rhs = |t: f64, y: State| [y[1], forcing_rate(params, t) / PI - w2 * y[0]];
    Ok(integrate(rhs, [0.0, 0.0], times, dt)
        .into_iter()
        .map(|y| (y[0], y[1]))
        .collect())
}

pub fn rk4_bidirectional_mode(
    params: &OscillatorParams,
    omega: f64,
    t_end: f64,
    dt: f64,
) -> Result<(f64, f64)> {
    Ok(rk4_bidirectional_samples(params, omega, &[t_end], dt)?[0])
}

/// Complex mode `ĉ' + iω ĉ = h(t)/(2π)`, `ĉ(0) = 0`, at each time.
///
/// The real series coefficients follow as `a = 2 Re ĉ`, `b = −2 Im ĉ`.
pub fn rk4_unidirectional_samples(
    params: &OscillatorParams,
    omega: f64,
    times: &[f64],
    dt: f64,
) -> Result<Vec<Complex64>> {
    check_step(params, omega, dt)?;
    check_times(times)?;
    // (Re ĉ, Im ĉ)' = (ω Im ĉ + h/2π, −ω Re ĉ)
    let rhs = |t: f64, y: State| {
        [
            omega * y[1] + forcing(params, t) / (2.0 * PI),
            -omega * y[0],
        ]
    };
    Ok(integrate(rhs, [0.0, 0.0], times, dt)
        .into_iter()
        .map(|y| Complex64::new(y[0], y[1]))
        .collect())
}

pub fn rk4_unidirectional_mode(
    params: &OscillatorParams,
    omega: f64,
    t_end: f64,
    dt: f64,
) -> Result<Complex64> {
    Ok(rk4_unidirectional_samples(params, omega, &[t_end], dt)?[0])
}

/// Free oscillator `a'' + ω² a = 0` from arbitrary initial data.
pub fn rk4_free_oscillator(
    omega: f64,
    initial: (f64, f64),
    t_end: f64,
    dt: f64,
) -> Result<(f64, f64)> {
    positive("dt", dt)?;
    time(t_end)?;
    let w2 = omega * omega;
    let y = integrate(
        |_, y: State| [y[1], -w2 * y[0]],
        [initial.0, initial.1],
        &[t_end],
        dt,
    )[0];
    Ok((y[0], y[1]))
}

/// `∫₀ᵗ h(s) ds = C[ς − e^{−βt}(ς cos ςt + β sin ςt)]/σ²`.
pub fn integral_of_h(params: &OscillatorParams, t: f64) -> f64 {
    let (b, w, s) = (params.beta(), params.varsigma(), params.sigma());
    let (sn, cs) = (w * t).sin_cos();
    params.amplitude() * (w - (-b * t).exp() * (w * cs + b * sn)) / (s * s)
}

/// Composite trapezoid rule for `∫₀ᵗ h(s) ds`.
pub fn trapezoid_integral_of_h(params: &OscillatorParams, t: f64, dt: f64) -> Result<f64> {
    positive("dt", dt)?;
    let t = time(t)?;
    if t == 0.0 {
        return Ok(0.0);
    }
    let n = (t / dt).ceil().max(1.0) as u64;
    let h = t / n as f64;
    let mut sum = 0.5 * (forcing(params, 0.0) + forcing(params, t));
    for i in 1..n {
        sum += forcing(params, i as f64 * h);
    }
    Ok(sum * h)
}
