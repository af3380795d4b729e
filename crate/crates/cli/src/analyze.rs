//! `fractal` and `converge`: regularity diagnostics printed to stdout.

use std::io::Write;

use lamb_core::analysis::{
    box_counting_dimension, convergence_report, windowed_dimensions, ConvergenceReport,
    FractalEstimate,
};
use lamb_core::periodic::eval_model;
use lamb_core::profile::periodic_grid;
use lamb_core::{DispersionRelation, Model};
use serde::{Deserialize, Serialize};

use crate::args::{resolve_times, ConvergeArgs, FractalArgs};
use crate::error::{CliError, CliResult};
use crate::output::json_string;
use crate::verify::weierstrass_calibration;

pub const CALIBRATION_TOL: f64 = 0.1;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct WindowDimension {
    pub x_start: f64,
    pub x_end: f64,
    pub dimension: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FractalRow {
    pub t: f64,
    pub estimate: FractalEstimate,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub windows: Option<Vec<WindowDimension>>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FractalReport {
    pub relation: DispersionRelation,
    pub model: Model,
    pub modes: usize,
    pub grid_points: usize,
    pub calibration_dimension: f64,
    pub rows: Vec<FractalRow>,
}

pub fn fractal(args: &FractalArgs, out: &mut dyn Write) -> CliResult<()> {
    let params = args.oscillator.resolve()?;
    let rel = args.relation.resolve()?;
    let model: Model = args.relation.model.into();
    let times = resolve_times(&args.times)?;

    // the estimator is only trusted once it reproduces a known dimension
    let calibration = weierstrass_calibration()?.dimension;
    if (calibration - 1.5).abs() > CALIBRATION_TOL {
        return Err(CliError::Verification(vec![format!(
            "estimator calibration ({calibration:.4}, expected 1.5)"
        )]));
    }

    let grid = periodic_grid(args.grid);
    let mut rows = Vec::with_capacity(times.len());
    for t in times {
        let profile = eval_model(&params, &rel, model, args.modes, t, &grid)?;
        let estimate = box_counting_dimension(&profile, args.scales)?;
        let windows = match args.windows {
            Some(w) => Some(
                windowed_dimensions(&profile, w, args.scales)?
                    .into_iter()
                    .map(|(x_start, x_end, e)| WindowDimension {
                        x_start,
                        x_end,
                        dimension: e.dimension,
                    })
                    .collect(),
            ),
            None => None,
        };
        rows.push(FractalRow {
            t,
            estimate,
            windows,
        });
    }
    let report = FractalReport {
        relation: rel,
        model,
        modes: args.modes,
        grid_points: args.grid,
        calibration_dimension: calibration,
        rows,
    };
    let text = if args.json {
        json_string(&report)
    } else {
        let mut s = format!("calibration dimension {calibration:.4}\n");
        for r in &report.rows {
            s.push_str(&format!(
                "t={}: dimension {:.4} (fit residual {:.2e}{})\n",
                r.t,
                r.estimate.dimension,
                r.estimate.fit_residual,
                if r.estimate.flat { ", flat" } else { "" }
            ));
            for w in r.windows.iter().flatten() {
                s.push_str(&format!(
                    "  [{:+.4}, {:+.4}] {:.4}\n",
                    w.x_start, w.x_end, w.dimension
                ));
            }
        }
        s
    };
    out.write_all(text.as_bytes())
        .map_err(|e| CliError::io("<stdout>", e))
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ConvergeRow {
    pub t: f64,
    pub report: ConvergenceReport,
}

pub fn converge(args: &ConvergeArgs, out: &mut dyn Write) -> CliResult<()> {
    let params = args.oscillator.resolve()?;
    let rel = args.relation.resolve()?;
    let model: Model = args.relation.model.into();
    let grid = periodic_grid(args.grid);
    let rows = resolve_times(&args.times)?
        .into_iter()
        .map(|t| {
            Ok(ConvergeRow {
                t,
                report: convergence_report(&params, &rel, model, t, &args.truncations, &grid)?,
            })
        })
        .collect::<CliResult<Vec<_>>>()?;
    let text = if args.json {
        json_string(&rows)
    } else {
        let mut s = String::new();
        for row in &rows {
            s.push_str(&format!("t={}: {}\n", row.t, row.report.verdict));
            let r = &row.report;
            for (i, (sup, l2)) in r.sup_diffs.iter().zip(&r.l2_diffs).enumerate() {
                s.push_str(&format!(
                    "  N={} -> {}: sup {sup:.3e}, rms {l2:.3e}\n",
                    r.truncations[i],
                    r.truncations[i + 1]
                ));
            }
        }
        s
    };
    out.write_all(text.as_bytes())
        .map_err(|e| CliError::io("<stdout>", e))
}
