//! Catalog of real, even dispersion relations `ω(k)`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A named, parameterized dispersion relation.
///
/// Every variant depends on `k` only through `k²` or `|k|`, so `ω(−k) = ω(k)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "name", rename_all = "snake_case")]
pub enum DispersionRelation {
    /// `ω = c|k|`
    Wave { c: f64 },
    /// `ω = √(c²k² + εk⁴)`
    ElasticString { c: f64, epsilon: f64 },
    /// `ω = c|k| / √(1 + εk²)`
    RegularizedBoussinesq { c: f64, epsilon: f64 },
    /// `ω = √(c²k² + μ²)` with Klein–Gordon mass `μ`.
    KleinGordon { c: f64, kg_mass: f64 },
    /// `ω = √|k|`
    SqrtAbsK,
    /// `ω = √(|k| tanh |k|)`
    WaterWave,
    /// `ω = k²`
    Quadratic,
    /// `ω = k² / (1 + a k²)`
    RationalQuadratic { denom_scale: f64 },
    /// `ω = |k|^m`
    PowerLaw { m_pow: f64 },
}

/// Names accepted by [`DispersionRelation::from_name`], in catalog order.
pub const CATALOG_NAMES: [&str; 9] = [
    "wave",
    "elastic_string",
    "regularized_boussinesq",
    "klein_gordon",
    "sqrt_abs_k",
    "water_wave",
    "quadratic",
    "rational_quadratic",
    "power_law",
];

impl DispersionRelation {
    pub const DEFAULT_C: f64 = 1.0;
    pub const DEFAULT_EPSILON: f64 = 1.0;
    pub const DEFAULT_KG_MASS: f64 = 1.0;
    pub const DEFAULT_DENOM_SCALE: f64 = 1.0 / 3.0;
    pub const DEFAULT_POWER: f64 = 3.0;

    /// Every catalog entry with its default parameters.
    pub fn catalog() -> Vec<DispersionRelation> {
        CATALOG_NAMES
            .iter()
            .map(|name| Self::from_name(name, &[]).expect("defaults are valid"))
            .collect()
    }

    /// Builds a relation from its catalog name and `key = value` overrides.
    /// Unspecified parameters take their defaults.
    pub fn from_name(name: &str, params: &[(&str, f64)]) -> Result<Self> {
        let lookup = |relation: &'static str, allowed: &[&str]| -> Result<()> {
            for (key, _) in params {
                if !allowed.contains(key) {
                    return Err(Error::InvalidRelation {
                        relation,
                        message: format!("unknown parameter `{key}`"),
                    });
                }
            }
            Ok(())
        };
        let get = |key: &str, default: f64| {
            params
                .iter()
                .rev()
                .find(|(k, _)| *k == key)
                .map_or(default, |(_, v)| *v)
        };
        let rel = match name {
            "wave" => {
                lookup("wave", &["c"])?;
                DispersionRelation::Wave {
                    c: get("c", Self::DEFAULT_C),
                }
            }
            "elastic_string" => {
                lookup("elastic_string", &["c", "epsilon"])?;
                DispersionRelation::ElasticString {
                    c: get("c", Self::DEFAULT_C),
                    epsilon: get("epsilon", Self::DEFAULT_EPSILON),
                }
            }
            "regularized_boussinesq" => {
                lookup("regularized_boussinesq", &["c", "epsilon"])?;
                DispersionRelation::RegularizedBoussinesq {
                    c: get("c", Self::DEFAULT_C),
                    epsilon: get("epsilon", Self::DEFAULT_EPSILON),
                }
            }
            "klein_gordon" => {
                lookup("klein_gordon", &["c", "kg_mass"])?;
                DispersionRelation::KleinGordon {
                    c: get("c", Self::DEFAULT_C),
                    kg_mass: get("kg_mass", Self::DEFAULT_KG_MASS),
                }
            }
            "sqrt_abs_k" => {
                lookup("sqrt_abs_k", &[])?;
                DispersionRelation::SqrtAbsK
            }
            "water_wave" => {
                lookup("water_wave", &[])?;
                DispersionRelation::WaterWave
            }
            "quadratic" => {
                lookup("quadratic", &[])?;
                DispersionRelation::Quadratic
            }
            "rational_quadratic" => {
                lookup("rational_quadratic", &["denom_scale"])?;
                DispersionRelation::RationalQuadratic {
                    denom_scale: get("denom_scale", Self::DEFAULT_DENOM_SCALE),
                }
            }
            "power_law" => {
                lookup("power_law", &["m_pow"])?;
                DispersionRelation::PowerLaw {
                    m_pow: get("m_pow", Self::DEFAULT_POWER),
                }
            }
            other => {
                return Err(Error::InvalidRelation {
                    relation: "catalog",
                    message: format!(
                        "unknown dispersion relation `{other}` (expected one of {})",
                        CATALOG_NAMES.join(", ")
                    ),
                })
            }
        };
        rel.validate()
    }

    /// Checks that the parameters keep `ω` real and the declared asymptotics
    /// meaningful.
    pub fn validate(self) -> Result<Self> {
        let name = self.name();
        let bad = |message: String| Error::InvalidRelation {
            relation: name,
            message,
        };
        let speed = |c: f64| {
            if c.is_finite() && c > 0.0 {
                Ok(())
            } else {
                Err(bad(format!("c must be positive, got {c}")))
            }
        };
        let nonneg = |key: &str, v: f64| {
            if v.is_finite() && v >= 0.0 {
                Ok(())
            } else {
                Err(bad(format!("{key} must be non-negative, got {v}")))
            }
        };
        match self {
            DispersionRelation::Wave { c } => speed(c)?,
            DispersionRelation::ElasticString { c, epsilon }
            | DispersionRelation::RegularizedBoussinesq { c, epsilon } => {
                speed(c)?;
                nonneg("epsilon", epsilon)?;
            }
            DispersionRelation::KleinGordon { c, kg_mass } => {
                speed(c)?;
                nonneg("kg_mass", kg_mass)?;
            }
            DispersionRelation::SqrtAbsK
            | DispersionRelation::WaterWave
            | DispersionRelation::Quadratic => {}
            DispersionRelation::RationalQuadratic { denom_scale } => {
                if !(denom_scale.is_finite() && denom_scale > 0.0) {
                    return Err(bad(format!(
                        "denom_scale must be positive, got {denom_scale}"
                    )));
                }
            }
            DispersionRelation::PowerLaw { m_pow } => {
                if !(m_pow > 0.0 && m_pow <= 4.0) {
                    return Err(bad(format!("m_pow must lie in (0, 4], got {m_pow}")));
                }
            }
        }
        Ok(self)
    }

    pub fn name(&self) -> &'static str {
        match self {
            DispersionRelation::Wave { .. } => "wave",
            DispersionRelation::ElasticString { .. } => "elastic_string",
            DispersionRelation::RegularizedBoussinesq { .. } => "regularized_boussinesq",
            DispersionRelation::KleinGordon { .. } => "klein_gordon",
            DispersionRelation::SqrtAbsK => "sqrt_abs_k",
            DispersionRelation::WaterWave => "water_wave",
            DispersionRelation::Quadratic => "quadratic",
            DispersionRelation::RationalQuadratic { .. } => "rational_quadratic",
            DispersionRelation::PowerLaw { .. } => "power_law",
        }
    }

    /// Human-readable formula.
    pub fn formula(&self) -> &'static str {
        match self {
            DispersionRelation::Wave { .. } => "omega = c|k|",
            DispersionRelation::ElasticString { .. } => "omega = sqrt(c^2 k^2 + epsilon k^4)",
            DispersionRelation::RegularizedBoussinesq { .. } => {
                "omega = c|k| / sqrt(1 + epsilon k^2)"
            }
            DispersionRelation::KleinGordon { .. } => "omega = sqrt(c^2 k^2 + kg_mass^2)",
            DispersionRelation::SqrtAbsK => "omega = sqrt(|k|)",
            DispersionRelation::WaterWave => "omega = sqrt(|k| tanh|k|)",
            DispersionRelation::Quadratic => "omega = k^2",
            DispersionRelation::RationalQuadratic { .. } => "omega = k^2 / (1 + denom_scale k^2)",
            DispersionRelation::PowerLaw { .. } => "omega = |k|^m_pow",
        }
    }

    /// Parameters as `(key, value)` pairs, in a fixed order.
    pub fn params(&self) -> Vec<(&'static str, f64)> {
        match *self {
            DispersionRelation::Wave { c } => vec![("c", c)],
            DispersionRelation::ElasticString { c, epsilon }
            | DispersionRelation::RegularizedBoussinesq { c, epsilon } => {
                vec![("c", c), ("epsilon", epsilon)]
            }
            DispersionRelation::KleinGordon { c, kg_mass } => vec![("c", c), ("kg_mass", kg_mass)],
            DispersionRelation::SqrtAbsK
            | DispersionRelation::WaterWave
            | DispersionRelation::Quadratic => vec![],
            DispersionRelation::RationalQuadratic { denom_scale } => {
                vec![("denom_scale", denom_scale)]
            }
            DispersionRelation::PowerLaw { m_pow } => vec![("m_pow", m_pow)],
        }
    }

    /// Frequency `ω(k)` at a (possibly non-integer) wave number.
    pub fn omega(&self, k: f64) -> f64 {
        let a = k.abs();
        match *self {
            DispersionRelation::Wave { c } => c * a,
            DispersionRelation::ElasticString { c, epsilon } => {
                let k2 = a * a;
                (c * c * k2 + epsilon * k2 * k2).sqrt()
            }
            DispersionRelation::RegularizedBoussinesq { c, epsilon } => {
                c * a / (1.0 + epsilon * a * a).sqrt()
            }
            DispersionRelation::KleinGordon { c, kg_mass } => (c * a).hypot(kg_mass),
            DispersionRelation::SqrtAbsK => a.sqrt(),
            DispersionRelation::WaterWave => (a * a.tanh()).sqrt(),
            DispersionRelation::Quadratic => a * a,
            DispersionRelation::RationalQuadratic { denom_scale } => {
                a * a / (1.0 + denom_scale * a * a)
            }
            DispersionRelation::PowerLaw { m_pow } => a.powf(m_pow),
        }
    }

    /// Declared exponent `m` with `ω(k) ~ |k|^m` as `|k| → ∞`.
    pub fn asymptotic_exponent(&self) -> f64 {
        match *self {
            DispersionRelation::Wave { .. } | DispersionRelation::KleinGordon { .. } => 1.0,
            DispersionRelation::ElasticString { epsilon, .. } => {
                if epsilon > 0.0 {
                    2.0
                } else {
                    1.0
                }
            }
            DispersionRelation::RegularizedBoussinesq { epsilon, .. } => {
                if epsilon > 0.0 {
                    0.0
                } else {
                    1.0
                }
            }
            DispersionRelation::SqrtAbsK | DispersionRelation::WaterWave => 0.5,
            DispersionRelation::Quadratic => 2.0,
            DispersionRelation::RationalQuadratic { .. } => 0.0,
            DispersionRelation::PowerLaw { m_pow } => m_pow,
        }
    }
}

impl fmt::Display for DispersionRelation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name())?;
        let params = self.params();
        if !params.is_empty() {
            let list: Vec<String> = params.iter().map(|(k, v)| format!("{k}={v}")).collect();
            write!(f, "({})", list.join(", "))?;
        }
        Ok(())
    }
}
