//! `simulate` and `line`: profiles written as CSV plus a manifest.

use std::io::Write;
use std::path::Path;

use lamb_core::analysis::{box_counting_dimension, fractal::DEFAULT_SCALES, FractalEstimate};
use lamb_core::line::{lamb_line_closed_form, line_profile_quadrature, LineQuadrature};
use lamb_core::periodic::{dalembert_periodic, eval_model};
use lamb_core::profile::{periodic_grid, symmetric_grid};
use lamb_core::{DispersionRelation, Model, OscillatorParams, SolutionProfile};
use serde::{Deserialize, Serialize};

use crate::args::{resolve_times, LineArgs, SimulateArgs};
use crate::error::{CliError, CliResult};
use crate::manifest::{LineSettings, ReportSettings, RunManifest, MANIFEST_NAME, VERSION};
use crate::output::{csv_string, json_string, profile_file_name, write_all_atomic};

pub const REPORT_NAME: &str = "report.json";
/// Points this close to `x = 0` or `|x| = ct` are left out of the line
/// oracle comparison; the closed form has kinks there.
pub const KINK_MARGIN: f64 = 0.2;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ProfileSummary {
    pub t: f64,
    pub file: String,
    pub sup_norm: f64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub oracle_sup_distance: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub line_error_estimate: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub fractal: Option<FractalEstimate>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunReport {
    pub command: String,
    pub profiles: Vec<ProfileSummary>,
}

fn require_classical_wave(
    params: &OscillatorParams,
    rel: &DispersionRelation,
    model: Model,
) -> CliResult<()> {
    match rel {
        DispersionRelation::Wave { c }
            if *c == params.wave_speed() && model == Model::Bidirectional =>
        {
            Ok(())
        }
        _ => Err(CliError::Usage(
            "--oracle needs --dispersion wave with c equal to --wave-speed and --model bi".into(),
        )),
    }
}

/// Periodic partial-sum profiles of a manifest.
pub fn simulate_profiles(m: &RunManifest) -> CliResult<Vec<SolutionProfile>> {
    let modes = m
        .modes
        .ok_or_else(|| CliError::Usage("manifest has no truncation".into()))?;
    let grid = periodic_grid(m.grid_points);
    m.times
        .iter()
        .map(|&t| {
            Ok(eval_model(
                &m.oscillator,
                &m.relation,
                m.model,
                modes,
                t,
                &grid,
            )?)
        })
        .collect()
}

/// Line profiles of a manifest, with their tail estimates.
pub fn line_profiles(m: &RunManifest) -> CliResult<Vec<(SolutionProfile, f64)>> {
    let settings = m
        .line
        .ok_or_else(|| CliError::Usage("manifest has no line settings".into()))?;
    let grid = symmetric_grid(settings.x_max, m.grid_points);
    m.times
        .iter()
        .map(|&t| {
            let out = line_profile_quadrature(
                &m.oscillator,
                &m.relation,
                m.model,
                t,
                &grid,
                settings.quadrature,
            )?;
            let mut estimate = out.error_estimate;
            let profile = if settings.classical {
                estimate *= m.oscillator.classical_scale().abs();
                out.profile.into_classical()
            } else {
                out.profile
            };
            Ok((profile, estimate))
        })
        .collect()
}

fn files_for(m: &RunManifest) -> Vec<String> {
    m.times.iter().map(|&t| profile_file_name(t)).collect()
}

pub fn simulate(args: &SimulateArgs, out: &mut dyn Write) -> CliResult<()> {
    let mut manifest = match &args.replay {
        Some(path) => RunManifest::load(path)?.expect_command("simulate")?,
        None => {
            if args.modes < 1 {
                return Err(CliError::Usage("--modes must be at least 1".into()));
            }
            if args.grid < 2 {
                return Err(CliError::Usage("--grid must be at least 2".into()));
            }
            RunManifest {
                command: "simulate".into(),
                version: VERSION.into(),
                oscillator: args.oscillator.resolve()?,
                relation: args.relation.resolve()?,
                model: args.relation.model.into(),
                times: resolve_times(&args.times)?,
                grid_points: args.grid,
                modes: Some(args.modes),
                line: None,
                report: ReportSettings {
                    oracle: args.oracle,
                    fractal: args.fractal,
                },
                outputs: vec![],
            }
        }
    };
    let settings = manifest.report;
    if settings.oracle {
        require_classical_wave(&manifest.oscillator, &manifest.relation, manifest.model)?;
    }
    let profiles = simulate_profiles(&manifest)?;
    let names = files_for(&manifest);

    let mut summaries = Vec::with_capacity(profiles.len());
    for (profile, file) in profiles.iter().zip(&names) {
        let oracle_sup_distance = if settings.oracle {
            let images = dalembert_periodic(&manifest.oscillator, profile.time, &profile.grid)?;
            Some(profile.clone().into_classical().sup_distance(&images))
        } else {
            None
        };
        let fractal = if settings.fractal {
            Some(box_counting_dimension(profile, DEFAULT_SCALES)?)
        } else {
            None
        };
        summaries.push(ProfileSummary {
            t: profile.time,
            file: file.clone(),
            sup_norm: profile.sup_norm(),
            oracle_sup_distance,
            line_error_estimate: None,
            fractal,
        });
    }
    finish(
        &args.out,
        &mut manifest,
        &profiles,
        names,
        summaries,
        args.json,
        out,
    )
}

pub fn line(args: &LineArgs, out: &mut dyn Write) -> CliResult<()> {
    let mut manifest = match &args.replay {
        Some(path) => RunManifest::load(path)?.expect_command("line")?,
        None => {
            if args.grid < 2 {
                return Err(CliError::Usage("--grid must be at least 2".into()));
            }
            if !(args.xmax.is_finite() && args.xmax > 0.0) {
                return Err(CliError::Usage("--xmax must be positive".into()));
            }
            RunManifest {
                command: "line".into(),
                version: VERSION.into(),
                oscillator: args.oscillator.resolve()?,
                relation: args.relation.resolve()?,
                model: args.relation.model.into(),
                times: resolve_times(&args.times)?,
                grid_points: args.grid,
                modes: None,
                line: Some(LineSettings {
                    x_max: args.xmax,
                    quadrature: LineQuadrature {
                        k_max: args.k_max,
                        panels: args.panels,
                    },
                    classical: args.classical,
                }),
                report: ReportSettings {
                    oracle: args.oracle,
                    fractal: false,
                },
                outputs: vec![],
            }
        }
    };
    let settings = manifest.report;
    if settings.oracle {
        require_classical_wave(&manifest.oscillator, &manifest.relation, manifest.model)?;
    }
    let results = line_profiles(&manifest)?;
    let names = files_for(&manifest);
    let classical = manifest.line.is_some_and(|l| l.classical);

    let mut summaries = Vec::with_capacity(results.len());
    for ((profile, estimate), file) in results.iter().zip(&names) {
        let oracle_sup_distance = if settings.oracle {
            let exact = lamb_line_closed_form(&manifest.oscillator, profile.time, &profile.grid)?;
            let scale = if classical {
                1.0
            } else {
                manifest.oscillator.classical_scale()
            };
            let front = manifest.oscillator.wave_speed() * profile.time;
            let worst = profile
                .grid
                .iter()
                .zip(profile.values.iter().zip(&exact.values))
                .filter(|(x, _)| x.abs() > KINK_MARGIN && (x.abs() - front).abs() > KINK_MARGIN)
                .map(|(_, (u, e))| (scale * u - e).abs())
                .fold(0.0, f64::max);
            Some(worst)
        } else {
            None
        };
        summaries.push(ProfileSummary {
            t: profile.time,
            file: file.clone(),
            sup_norm: profile.sup_norm(),
            oracle_sup_distance,
            line_error_estimate: Some(*estimate),
            fractal: None,
        });
    }
    let profiles: Vec<SolutionProfile> = results.into_iter().map(|(p, _)| p).collect();
    finish(
        &args.out,
        &mut manifest,
        &profiles,
        names,
        summaries,
        args.json,
        out,
    )
}

fn finish(
    dir: &Path,
    manifest: &mut RunManifest,
    profiles: &[SolutionProfile],
    names: Vec<String>,
    summaries: Vec<ProfileSummary>,
    json: bool,
    out: &mut dyn Write,
) -> CliResult<()> {
    let report = RunReport {
        command: manifest.command.clone(),
        profiles: summaries,
    };
    let mut files: Vec<(String, String)> = names
        .iter()
        .zip(profiles)
        .map(|(name, p)| (name.clone(), csv_string(&p.grid, &p.values)))
        .collect();
    manifest.outputs = names;
    if manifest.report.any() {
        manifest.outputs.push(REPORT_NAME.into());
        files.push((REPORT_NAME.into(), json_string(&report)));
    }
    files.push((MANIFEST_NAME.into(), json_string(&*manifest)));
    write_all_atomic(dir, &files)?;

    let text = if json {
        json_string(&report)
    } else {
        render(&report, dir)
    };
    out.write_all(text.as_bytes())
        .map_err(|e| CliError::io("<stdout>", e))
}

fn render(report: &RunReport, dir: &Path) -> String {
    let mut s = String::new();
    for p in &report.profiles {
        s.push_str(&format!(
            "t={}: {} sup|u|={:.6e}",
            p.t,
            dir.join(&p.file).display(),
            p.sup_norm
        ));
        if let Some(e) = p.line_error_estimate {
            s.push_str(&format!(" tail~{e:.2e}"));
        }
        if let Some(d) = p.oracle_sup_distance {
            let against = if report.command == "line" {
                "closed form"
            } else {
                "d'Alembert"
            };
            s.push_str(&format!(" sup-norm vs {against}={d:.3e}"));
        }
        if let Some(f) = &p.fractal {
            s.push_str(&format!(" dimension={:.4}", f.dimension));
        }
        s.push('\n');
    }
    s.push_str(&format!("manifest {}\n", dir.join(MANIFEST_NAME).display()));
    s
}
