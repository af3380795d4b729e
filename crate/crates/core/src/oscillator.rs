//! The damped point-mass oscillator that drives the medium.
//!
//! The displacement of the mass is `h(t) = C e^{-βt} sin ςt` with
//! `ς = √(σ² − β²)`. Everything downstream works on this slow time scale;
//! Lamb's own parameters `b = c/(2β)` and `κ = ς/c` are derived read-only.

use serde::{Deserialize, Serialize};

use crate::error::{finite, positive, Error, Result};

const IDENTITY_TOL: f64 = 1e-12;

/// Underdamped oscillator parameters `(C, β, σ, c)` plus the derived damped
/// frequency `ς`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "RawOscillator", into = "RawOscillator")]
pub struct OscillatorParams {
    amplitude: f64,
    beta: f64,
    sigma: f64,
    varsigma: f64,
    wave_speed: f64,
}

#[derive(Serialize, Deserialize)]
struct RawOscillator {
    amplitude: f64,
    beta: f64,
    sigma: f64,
    varsigma: f64,
    wave_speed: f64,
}

impl From<OscillatorParams> for RawOscillator {
    fn from(p: OscillatorParams) -> Self {
        RawOscillator {
            amplitude: p.amplitude,
            beta: p.beta,
            sigma: p.sigma,
            varsigma: p.varsigma,
            wave_speed: p.wave_speed,
        }
    }
}

impl TryFrom<RawOscillator> for OscillatorParams {
    type Error = Error;

    fn try_from(raw: RawOscillator) -> Result<Self> {
        let params = OscillatorParams::new(raw.amplitude, raw.beta, raw.sigma, raw.wave_speed)?;
        finite("varsigma", raw.varsigma)?;
        let identity = raw.varsigma * raw.varsigma + raw.beta * raw.beta;
        if (identity - raw.sigma * raw.sigma).abs() > IDENTITY_TOL * raw.sigma * raw.sigma {
            return Err(Error::Inconsistent(format!(
                "varsigma^2 + beta^2 = {identity} but sigma^2 = {}",
                raw.sigma * raw.sigma
            )));
        }
        // keep the stored damped frequency bit for bit so replays match
        Ok(OscillatorParams {
            varsigma: raw.varsigma,
            ..params
        })
    }
}

impl OscillatorParams {
    /// Builds the oscillator from amplitude `C`, damping `β`, natural
    /// frequency `σ` and wave speed `c`.
    pub fn new(amplitude: f64, beta: f64, sigma: f64, wave_speed: f64) -> Result<Self> {
        let amplitude = finite("amplitude", amplitude)?;
        if amplitude == 0.0 {
            return Err(Error::NonPositive {
                name: "|amplitude|",
                value: amplitude,
            });
        }
        let beta = positive("beta", beta)?;
        let sigma = positive("sigma", sigma)?;
        let wave_speed = positive("wave speed", wave_speed)?;
        if beta >= sigma {
            return Err(Error::NotUnderdamped { beta, sigma });
        }
        let varsigma = ((sigma - beta) * (sigma + beta)).sqrt();
        Ok(OscillatorParams {
            amplitude,
            beta,
            sigma,
            varsigma,
            wave_speed,
        })
    }

    /// Builds the oscillator from Lamb's parameterization: wave speed `c`,
    /// amplitude `C`, decay length `b` and spatial frequency `κ`.
    pub fn from_lamb(
        amplitude: f64,
        wave_speed: f64,
        lamb_b: f64,
        lamb_kappa: f64,
    ) -> Result<Self> {
        let amplitude = finite("amplitude", amplitude)?;
        if amplitude == 0.0 {
            return Err(Error::NonPositive {
                name: "|amplitude|",
                value: amplitude,
            });
        }
        let wave_speed = positive("wave speed", wave_speed)?;
        let lamb_b = positive("b", lamb_b)?;
        let lamb_kappa = positive("kappa", lamb_kappa)?;
        let beta = wave_speed / (2.0 * lamb_b);
        let varsigma = lamb_kappa * wave_speed;
        let sigma = varsigma.hypot(beta);
        Ok(OscillatorParams {
            amplitude,
            beta,
            sigma,
            varsigma,
            wave_speed,
        })
    }

    /// Builds the oscillator from the physical constants of the string and
    /// the mass: `c = √(T/ρ)`, `β = √(ρT)/M`.
    pub fn from_physical(
        mass: f64,
        tension: f64,
        density: f64,
        natural_frequency: f64,
        amplitude: f64,
    ) -> Result<Self> {
        let mass = positive("mass", mass)?;
        let tension = positive("tension", tension)?;
        let density = positive("density", density)?;
        let wave_speed = (tension / density).sqrt();
        let beta = (density * tension).sqrt() / mass;
        Self::new(amplitude, beta, natural_frequency, wave_speed)
    }

    /// Reference parameters, also the CLI defaults:
    /// `c = 1, C = −1/2, b = 5, κ = √0.99`, hence `β = 0.1`, `σ = 1`.
    pub fn reference() -> Self {
        Self::from_lamb(-0.5, 1.0, 5.0, 0.99_f64.sqrt()).expect("reference parameters are valid")
    }

    pub fn amplitude(&self) -> f64 {
        self.amplitude
    }

    pub fn beta(&self) -> f64 {
        self.beta
    }

    pub fn sigma(&self) -> f64 {
        self.sigma
    }

    /// Damped frequency `ς = √(σ² − β²)`.
    pub fn varsigma(&self) -> f64 {
        self.varsigma
    }

    pub fn wave_speed(&self) -> f64 {
        self.wave_speed
    }

    /// Lamb's decay length `b = c/(2β)`.
    pub fn lamb_b(&self) -> f64 {
        self.wave_speed / (2.0 * self.beta)
    }

    /// Lamb's spatial frequency `κ = ς/c`.
    pub fn lamb_kappa(&self) -> f64 {
        self.varsigma / self.wave_speed
    }

    /// Displacement of the mass, extended by zero for `t ≤ 0`.
    pub fn displacement(&self, t: f64) -> f64 {
        if t > 0.0 {
            self.amplitude * (-self.beta * t).exp() * (self.varsigma * t).sin()
        } else {
            0.0
        }
    }

    /// Factor relating the absorbed-forcing normalization used by the
    /// dispersive solutions to the classical wave-equation solution: `−2c`.
    pub fn classical_scale(&self) -> f64 {
        -2.0 * self.wave_speed
    }
}

impl Default for OscillatorParams {
    fn default() -> Self {
        Self::reference()
    }
}
