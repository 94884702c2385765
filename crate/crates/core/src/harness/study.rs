use std::path::Path;

use crate::error::{Result, SolverError};
use crate::par::Execution;
use crate::problems::{make_problem, ProblemId};
use crate::{Order, SchemeConfig};

use super::output::fmt_f64;
use super::run::{run_simulation, RunConfig};

/// One mesh of a convergence table. Rates are empty on the first row.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ConvergenceRow {
    /// Cells per axis.
    pub mesh: usize,
    pub error_l1: f64,
    pub rate_l1: Option<f64>,
    pub error_linf: f64,
    pub rate_linf: Option<f64>,
    pub error_l2: f64,
    pub wall_time: f64,
}

fn rate(coarse: (usize, f64), fine: (usize, f64)) -> f64 {
    (coarse.1 / fine.1).ln() / (fine.0 as f64 / coarse.0 as f64).ln()
}

/// Observed orders between successive rows; `log2` of the error ratio on
/// dyadic meshes.
pub fn fill_rates(rows: &mut [ConvergenceRow]) {
    if let Some(first) = rows.first_mut() {
        first.rate_l1 = None;
        first.rate_linf = None;
    }
    for k in 1..rows.len() {
        let (a, b) = (rows[k - 1], rows[k]);
        rows[k].rate_l1 = Some(rate((a.mesh, a.error_l1), (b.mesh, b.error_l1)));
        rows[k].rate_linf = Some(rate((a.mesh, a.error_linf), (b.mesh, b.error_linf)));
    }
}

/// Run `problem` on each mesh (`n` or `n x n`) and tabulate density errors
/// against the exact solution.
///
/// In accuracy mode the step shrinks like `h^(5/3)` from the coarsest mesh
/// down, so that mesh runs at the plain CFL step and time and space errors
/// stay of comparable size on all meshes.
pub fn convergence_study(
    problem: ProblemId,
    scheme: SchemeConfig,
    meshes: &[usize],
    t_final: Option<f64>,
    exec: Execution,
) -> Result<Vec<ConvergenceRow>> {
    let spec = make_problem(problem);
    if !spec.has_exact {
        return Err(SolverError::NoExactSolution(problem.to_string()));
    }
    if meshes.windows(2).any(|w| w[1] <= w[0]) {
        return Err(SolverError::InvalidConfig("meshes must increase".into()));
    }
    let mut scheme = scheme;
    if let (true, Some(&n0)) = (scheme.accuracy_mode, meshes.first()) {
        let g = spec.grid(n0, n0)?;
        scheme.accuracy_length = if g.dim == 1 { g.dx } else { g.dx.min(g.dy) };
    }
    let mut rows = Vec::with_capacity(meshes.len());
    for &n in meshes {
        let mut cfg = RunConfig::new(problem, scheme).mesh(n, n);
        cfg.t_final = t_final;
        cfg.exec = exec;
        let res = run_simulation(&cfg)?;
        let e = res.solution.errors(&spec)?;
        rows.push(ConvergenceRow {
            mesh: n,
            error_l1: e.l1,
            rate_l1: None,
            error_linf: e.linf,
            rate_linf: None,
            error_l2: e.l2,
            wall_time: res.wall_time,
        });
    }
    fill_rates(&mut rows);
    Ok(rows)
}

/// Measured cost of one mesh.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct EfficiencyPoint {
    pub order: Order,
    pub mesh: usize,
    pub error_l2: f64,
    pub wall_time: f64,
}

/// Estimated wall time to reach `target` L2 error.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct EfficiencyRow {
    pub order: Order,
    pub target: f64,
    pub wall_time: f64,
    /// False when the estimate is extrapolated beyond the measured meshes.
    pub bracketed: bool,
}

/// Log-log interpolation of wall time against error through the two
/// measurements that bracket `target`, or the nearest pair otherwise.
/// `points` must be ordered by mesh.
pub fn interpolate_cost(points: &[EfficiencyPoint], target: f64) -> Option<(f64, bool)> {
    if points.len() < 2 || !(target > 0.0) {
        return None;
    }
    let bracket = points
        .windows(2)
        .position(|w| w[0].error_l2 >= target && target >= w[1].error_l2);
    let (k, bracketed) = match bracket {
        Some(k) => (k, true),
        None if target < points[points.len() - 1].error_l2 => (points.len() - 2, false),
        None => (0, false),
    };
    let (a, b) = (points[k], points[k + 1]);
    let (ea, eb) = (a.error_l2.ln(), b.error_l2.ln());
    if !(ea - eb).is_normal() {
        return None;
    }
    let slope = (b.wall_time.ln() - a.wall_time.ln()) / (eb - ea);
    let cost = (a.wall_time.ln() + slope * (target.ln() - ea)).exp();
    Some((cost, bracketed))
}

/// Cost of every order in `plan` on its meshes, plus the interpolated wall
/// time to reach each target.
pub fn efficiency_study(
    problem: ProblemId,
    plan: &[(SchemeConfig, Vec<usize>)],
    targets: &[f64],
    exec: Execution,
) -> Result<(Vec<EfficiencyPoint>, Vec<EfficiencyRow>)> {
    let mut points = Vec::new();
    let mut rows = Vec::new();
    for (scheme, meshes) in plan {
        let table = convergence_study(problem, *scheme, meshes, None, exec)?;
        let pts: Vec<EfficiencyPoint> = table
            .iter()
            .map(|r| EfficiencyPoint {
                order: scheme.order,
                mesh: r.mesh,
                error_l2: r.error_l2,
                wall_time: r.wall_time.max(1e-9),
            })
            .collect();
        for &target in targets {
            let (wall_time, bracketed) = interpolate_cost(&pts, target).ok_or_else(|| {
                SolverError::InvalidConfig(format!(
                    "order {} needs two meshes with distinct errors",
                    scheme.order
                ))
            })?;
            rows.push(EfficiencyRow {
                order: scheme.order,
                target,
                wall_time,
                bracketed,
            });
        }
        points.extend(pts);
    }
    Ok((points, rows))
}

pub fn write_efficiency_csv(rows: &[EfficiencyRow], path: &Path) -> Result<()> {
    let mut text = String::from("order,target_error,wall_time,bracketed\n");
    for r in rows {
        text.push_str(&format!(
            "{},{},{},{}\n",
            r.order,
            fmt_f64(r.target),
            fmt_f64(r.wall_time),
            r.bracketed
        ));
    }
    super::output::write_text(path, &text)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn row(mesh: usize, e: f64) -> ConvergenceRow {
        ConvergenceRow {
            mesh,
            error_l1: e,
            rate_l1: None,
            error_linf: e,
            rate_linf: None,
            error_l2: e,
            wall_time: 0.0,
        }
    }

    #[test]
    fn rates_reproduce_the_printed_table() {
        // 1-D accuracy table: errors and printed rates per order
        let cols: [([f64; 4], [f64; 3]); 4] = [
            ([4.93e-03, 2.49e-03, 1.25e-03, 6.27e-04], [0.985, 0.993, 0.996]),
            ([4.70e-04, 1.12e-04, 2.76e-05, 6.30e-06], [2.07, 2.03, 2.13]),
            ([1.02e-05, 1.24e-06, 1.55e-07, 1.94e-08], [3.04, 3.00, 3.00]),
            ([1.33e-07, 4.40e-09, 1.42e-10, 4.55e-12], [4.92, 4.95, 5.00]),
        ];
        // The last fifth-order rate is printed as 5.00, but no values that
        // round to 1.42e-10 and 4.55e-12 give more than 4.97.
        let skip = (3, 2);
        for (col, (errs, rates)) in cols.into_iter().enumerate() {
            let mut rows: Vec<_> = [100, 200, 400, 800]
                .iter()
                .zip(errs)
                .map(|(&m, e)| row(m, e))
                .collect();
            fill_rates(&mut rows);
            assert_eq!(rows[0].rate_l1, None);
            for k in 0..3 {
                if (col, k) == skip {
                    continue;
                }
                let r = rows[k + 1].rate_l1.unwrap();
                assert!((r - rates[k]).abs() <= 0.01, "{r} vs {}", rates[k]);
            }
        }
    }

    #[test]
    fn single_mesh_has_no_rate() {
        let mut rows = vec![row(50, 1e-3)];
        fill_rates(&mut rows);
        assert_eq!(rows[0].rate_l1, None);
    }

    #[test]
    fn cost_interpolation() {
        let p = |mesh, e, w| EfficiencyPoint {
            order: Order::Third,
            mesh,
            error_l2: e,
            wall_time: w,
        };
        // error ~ h^3, cost ~ h^-2  =>  cost ~ e^(-2/3)
        let pts = [p(100, 1e-6, 1.0), p(200, 1.25e-7, 4.0), p(400, 1.5625e-8, 16.0)];
        let (w, inside) = interpolate_cost(&pts, 1e-7).unwrap();
        assert!(inside);
        let want = 4.0 * (1e-7_f64 / 1.25e-7).powf(-2.0 / 3.0);
        assert!((w - want).abs() < 1e-9 * want);
        let (w, inside) = interpolate_cost(&pts, 1e-9).unwrap();
        assert!(!inside);
        let want = 16.0 * (1e-9_f64 / 1.5625e-8).powf(-2.0 / 3.0);
        assert!((w - want).abs() < 1e-9 * want);
        assert!(interpolate_cost(&pts[..1], 1e-7).is_none());
    }
}
