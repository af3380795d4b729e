//! Record of a run, sufficient to reproduce its outputs bit for bit.

use std::fs;
use std::path::Path;

use lamb_core::line::LineQuadrature;
use lamb_core::{DispersionRelation, Model, OscillatorParams};
use serde::{Deserialize, Serialize};

use crate::error::{CliError, CliResult};

pub const MANIFEST_NAME: &str = "manifest.json";
pub const VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct LineSettings {
    pub x_max: f64,
    pub quadrature: LineQuadrature,
    pub classical: bool,
}

/// Optional diagnostics written to the report next to the profiles.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportSettings {
    pub oracle: bool,
    pub fractal: bool,
}

impl ReportSettings {
    pub fn any(&self) -> bool {
        self.oracle || self.fractal
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunManifest {
    pub command: String,
    pub version: String,
    pub oscillator: OscillatorParams,
    pub relation: DispersionRelation,
    pub model: Model,
    pub times: Vec<f64>,
    pub grid_points: usize,
    /// Truncation of periodic runs.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub modes: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub line: Option<LineSettings>,
    #[serde(default)]
    pub report: ReportSettings,
    /// Output files, relative to the manifest's directory.
    pub outputs: Vec<String>,
}

impl RunManifest {
    pub fn load(path: &Path) -> CliResult<Self> {
        let text = fs::read_to_string(path).map_err(|e| CliError::io(path, e))?;
        let manifest: RunManifest =
            serde_json::from_str(&text).map_err(|source| CliError::Manifest {
                path: path.to_path_buf(),
                source,
            })?;
        manifest.relation.validate()?;
        if manifest.version != VERSION {
            eprintln!(
                "warning: manifest written by version {}, replaying with {VERSION}",
                manifest.version
            );
        }
        Ok(manifest)
    }

    /// Fails unless the manifest was written by `command`.
    pub fn expect_command(self, command: &str) -> CliResult<Self> {
        if self.command == command {
            Ok(self)
        } else {
            Err(CliError::Usage(format!(
                "manifest is for `{}`, not `{command}`",
                self.command
            )))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_round_trip_is_lossless() {
        let m = RunManifest {
            command: "line".into(),
            version: VERSION.into(),
            oscillator: OscillatorParams::new(0.3, 0.1 + 0.2, 1.0 / 3.0 + 0.5, 0.7).unwrap(),
            relation: DispersionRelation::ElasticString {
                c: 0.1,
                epsilon: 1e-17,
            },
            model: Model::Unidirectional,
            times: vec![0.1 + 0.2, 1e-300, 30.0],
            grid_points: 17,
            modes: None,
            line: Some(LineSettings {
                x_max: std::f64::consts::E,
                quadrature: LineQuadrature::default(),
                classical: true,
            }),
            report: ReportSettings {
                oracle: true,
                fractal: false,
            },
            outputs: vec!["u_t30.csv".into()],
        };
        let text = serde_json::to_string_pretty(&m).unwrap();
        let back: RunManifest = serde_json::from_str(&text).unwrap();
        assert_eq!(back, m);
        assert_eq!(back.times[0].to_bits(), m.times[0].to_bits());
        assert_eq!(serde_json::to_string_pretty(&back).unwrap(), text);
    }

    #[test]
    fn key_order_is_fixed() {
        let m = RunManifest {
            command: "simulate".into(),
            version: VERSION.into(),
            oscillator: OscillatorParams::reference(),
            relation: DispersionRelation::SqrtAbsK,
            model: Model::Bidirectional,
            times: vec![30.0],
            grid_points: 4096,
            modes: Some(1000),
            line: None,
            report: ReportSettings::default(),
            outputs: vec![],
        };
        let text = serde_json::to_string(&m).unwrap();
        let keys = [
            "\"command\"",
            "\"version\"",
            "\"oscillator\"",
            "\"relation\"",
            "\"model\"",
            "\"times\"",
            "\"grid_points\"",
            "\"modes\"",
            "\"report\"",
            "\"outputs\"",
        ];
        let pos: Vec<usize> = keys.iter().map(|k| text.find(k).unwrap()).collect();
        assert!(pos.windows(2).all(|w| w[0] < w[1]));
        assert!(!text.contains("\"line\""));
    }
}
