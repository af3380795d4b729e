//! Built-in checks of the closed forms against independent computations.

use std::f64::consts::PI;
use std::io::Write;
use std::time::Instant;

use lamb_core::analysis::{
    box_counting_dimension_of, log_singularity_sum, partial_fraction_terms, FractalEstimate,
};
use lamb_core::line::{lamb_line_closed_form, line_profile_classical, LineQuadrature};
use lamb_core::modal::{self, bidirectional_mode_with, TransientFrequency};
use lamb_core::oracle::{default_step, rk4_bidirectional_samples, rk4_unidirectional_samples};
use lamb_core::periodic::{dalembert_periodic, eval_bidirectional};
use lamb_core::profile::{periodic_grid, symmetric_grid};
use lamb_core::{DispersionRelation, OscillatorParams};
use serde::{Deserialize, Serialize};

use crate::args::VerifyArgs;
use crate::error::{CliError, CliResult};
use crate::output::json_string;
use crate::simulate::KINK_MARGIN;

pub const ORACLE_MODES: [u32; 5] = [1, 2, 5, 17, 40];
pub const ORACLE_TIMES: [f64; 4] = [0.5, 1.0, 5.0, 10.0];
pub const ORACLE_TOL: f64 = 1e-7;
/// Modes `1..=INITIAL_MODES` enter the initial-condition check.
pub const INITIAL_MODES: u32 = 1000;
pub const SLOPE_TOL: f64 = 1e-6;
pub const WEIERSTRASS_SAMPLES: usize = 1 << 16;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CheckResult {
    pub name: String,
    pub passed: bool,
    /// Worst observed value of the checked quantity.
    pub measured: f64,
    pub threshold: f64,
    pub detail: String,
    pub seconds: f64,
}

fn check(name: &str, measured: f64, threshold: f64, detail: String, start: Instant) -> CheckResult {
    CheckResult {
        name: name.into(),
        passed: measured < threshold,
        measured,
        threshold,
        detail,
        seconds: start.elapsed().as_secs_f64(),
    }
}

/// Largest `|closed form − RK4|` over the catalog, [`ORACLE_MODES`] and
/// [`ORACLE_TIMES`], as `(bidirectional, unidirectional)`.
pub fn modal_oracle_errors(params: &OscillatorParams) -> lamb_core::Result<(f64, f64)> {
    let c = params.wave_speed();
    let (mut bi, mut uni) = (0.0_f64, 0.0_f64);
    for rel in DispersionRelation::catalog() {
        for k in ORACLE_MODES {
            let omega = rel.omega(k as f64);
            let dt = default_step(omega);
            let a = rk4_bidirectional_samples(params, omega, &ORACLE_TIMES, dt)?;
            let z = rk4_unidirectional_samples(params, omega, &ORACLE_TIMES, dt)?;
            for (i, &t) in ORACLE_TIMES.iter().enumerate() {
                bi = bi.max((a[i].0 - modal::ak_bidirectional(params, &rel, k, t)).abs());
                let (ua, ub) = modal::modal_unidirectional(params, &rel, k, t);
                uni = uni
                    .max((z[i].re / c - ua).abs())
                    .max((-z[i].im / c - ub).abs());
            }
        }
    }
    Ok((bi, uni))
}

/// Worst initial value and worst centered-difference slope at `t = 0` over
/// the catalog and modes `1..=INITIAL_MODES`, both models.
///
/// The difference step shrinks with the mode frequency so that it resolves
/// the fast phase `ωt`.
pub fn initial_condition_errors(
    params: &OscillatorParams,
    transient: TransientFrequency,
) -> (f64, f64, String) {
    let (mut value, mut slope) = (0.0_f64, 0.0_f64);
    let mut worst = String::new();
    for rel in DispersionRelation::catalog() {
        for k in 1..=INITIAL_MODES {
            let omega = rel.omega(k as f64);
            let h = 1e-4 / omega.max(1.0);
            let bi = |t| bidirectional_mode_with(params, omega, t, transient);
            let uni = |t| modal::unidirectional_mode(params, omega, t);
            value = value.max(bi(0.0).abs());
            let (a0, b0) = uni(0.0);
            value = value.max(a0.abs()).max(b0.abs());
            let (ap, bp) = uni(h);
            let (am, bm) = uni(-h);
            let slopes = [
                (bi(h) - bi(-h)) / (2.0 * h),
                (ap - am) / (2.0 * h),
                (bp - bm) / (2.0 * h),
            ];
            for s in slopes {
                if s.abs() > slope {
                    slope = s.abs();
                    worst = format!("{} k={k}", rel.name());
                }
            }
        }
    }
    (value, slope, worst)
}

/// `Σ_{j≤12} 2^{−j/2} cos(2^j x)` on a uniform periodic grid.
pub fn weierstrass_calibration() -> lamb_core::Result<FractalEstimate> {
    let grid = periodic_grid(WEIERSTRASS_SAMPLES);
    let values: Vec<f64> = grid
        .iter()
        .map(|&x| {
            (1..=12)
                .map(|j| 2f64.powf(-0.5 * j as f64) * (2f64.powi(j) * x).cos())
                .sum()
        })
        .collect();
    box_counting_dimension_of(&grid, &values, 8)
}

pub fn run_checks(sigma_variant: bool) -> CliResult<Vec<CheckResult>> {
    let p = OscillatorParams::reference();
    let mut results = Vec::new();

    let start = Instant::now();
    let (bi, uni) = modal_oracle_errors(&p)?;
    results.push(check(
        "modal_oracle",
        bi.max(uni),
        ORACLE_TOL,
        format!("bidirectional {bi:.2e}, unidirectional {uni:.2e} vs RK4"),
        start,
    ));

    let start = Instant::now();
    let transient = if sigma_variant {
        TransientFrequency::Natural
    } else {
        TransientFrequency::Damped
    };
    let (value, slope, worst) = initial_condition_errors(&p, transient);
    let mut ic = check(
        "initial_conditions",
        slope,
        SLOPE_TOL,
        format!("max |a(0)| = {value:e}, worst slope at {worst}, transient {transient:?}"),
        start,
    );
    ic.passed &= value == 0.0;
    results.push(ic);

    let start = Instant::now();
    let grid = periodic_grid(2048);
    let wave = DispersionRelation::Wave { c: p.wave_speed() };
    let mut periodic: f64 = 0.0;
    for t in [1.0, 2.0, 5.0, 10.0] {
        let series = eval_bidirectional(&p, &wave, 1000, t, &grid)?.into_classical();
        periodic = periodic.max(series.sup_distance(&dalembert_periodic(&p, t, &grid)?));
    }
    results.push(check(
        "classical_periodic",
        periodic,
        1e-2,
        "N=1000 series vs image sum, t in {1,2,5,10}".into(),
        start,
    ));

    let start = Instant::now();
    let t = 5.0;
    let grid = symmetric_grid(10.0, 401);
    let quad = line_profile_classical(&p, t, &grid, LineQuadrature::default())?;
    let exact = lamb_line_closed_form(&p, t, &grid)?;
    let line = grid
        .iter()
        .zip(quad.profile.values.iter().zip(&exact.values))
        .filter(|(x, _)| x.abs() > KINK_MARGIN && (x.abs() - t).abs() > KINK_MARGIN)
        .map(|(_, (a, b))| (a - b).abs())
        .fold(0.0, f64::max);
    results.push(check(
        "classical_line",
        line,
        5e-3,
        "quadrature vs closed form at t=5 away from kinks".into(),
        start,
    ));

    let start = Instant::now();
    let d = weierstrass_calibration()?.dimension;
    results.push(check(
        "estimator_calibration",
        (d - 1.5).abs(),
        0.1 + f64::EPSILON,
        format!("Weierstrass dimension {d:.4}, expected 1.5"),
        start,
    ));

    let start = Instant::now();
    let mut rel_err: f64 = 0.0;
    for alpha in [0.5, 1.0, 2.0] {
        for k in 1..=10_000i64 {
            let terms = partial_fraction_terms(alpha, k)?;
            let exact = 1.0 / (k as f64 + alpha);
            rel_err = rel_err.max((terms.sum() - exact).abs() / exact);
        }
    }
    results.push(check(
        "partial_fractions",
        rel_err,
        1e-15 + f64::EPSILON * 1e-3,
        "three-term identity, k <= 1e4".into(),
        start,
    ));

    let start = Instant::now();
    let mut log_err: f64 = 0.0;
    for x in [0.1, 0.5, 1.0, 2.0, 3.0] {
        for alpha in [0.0, 1.0] {
            let (sum, closed) = log_singularity_sum(alpha, x, 100_000)?;
            log_err = log_err.max((sum - closed).abs());
        }
    }
    results.push(check(
        "log_singularity",
        log_err,
        1e-3,
        format!("N=1e5 partial sums vs closed form, x in (0, {PI:.4})"),
        start,
    ));

    Ok(results)
}

pub fn run(args: &VerifyArgs, out: &mut dyn Write) -> CliResult<()> {
    let results = run_checks(args.sigma_variant)?;
    let text = if args.json {
        json_string(&results)
    } else {
        render(&results)
    };
    out.write_all(text.as_bytes())
        .map_err(|e| CliError::io("<stdout>", e))?;
    let failed: Vec<String> = results
        .iter()
        .filter(|r| !r.passed)
        .map(|r| r.name.clone())
        .collect();
    if failed.is_empty() {
        Ok(())
    } else {
        Err(CliError::Verification(failed))
    }
}

fn render(results: &[CheckResult]) -> String {
    let mut s = format!(
        "{:<22} {:<5} {:>12} {:>10} {:>8}  detail\n",
        "check", "ok", "measured", "threshold", "seconds"
    );
    for r in results {
        s.push_str(&format!(
            "{:<22} {:<5} {:>12.3e} {:>10.1e} {:>8.2}  {}\n",
            r.name,
            if r.passed { "pass" } else { "FAIL" },
            r.measured,
            r.threshold,
            r.seconds,
            r.detail
        ));
    }
    s
}
