use std::path::{Path, PathBuf};
use std::time::Instant;

use crate::eos::{GasParams, PrimitiveState};
use crate::error::{Result, SolverError};
use crate::par::Execution;
use crate::problems::{make_problem, ProblemId, ProblemSpec};
use crate::spatial::{Field, Grid, SpatialOperator};
use crate::time::{integrate_to, TimeControl};
use crate::SchemeConfig;

use super::norms::{error_norms, exact_field, ErrorNorms};
use super::output::{write_diagonal_slice_csv, write_snapshot_csv};

/// One simulation request.
#[derive(Clone, Debug, PartialEq)]
pub struct RunConfig {
    pub problem: ProblemId,
    pub scheme: SchemeConfig,
    /// Defaults to the problem's mesh.
    pub nx: Option<usize>,
    pub ny: Option<usize>,
    /// Defaults to the problem's final time.
    pub t_final: Option<f64>,
    /// Final snapshot path; intermediate snapshots go next to it.
    pub out: Option<PathBuf>,
    pub snapshots: Vec<f64>,
    pub exec: Execution,
}

impl RunConfig {
    pub fn new(problem: ProblemId, scheme: SchemeConfig) -> Self {
        Self {
            problem,
            scheme,
            nx: None,
            ny: None,
            t_final: None,
            out: None,
            snapshots: Vec::new(),
            exec: Execution::default(),
        }
    }

    pub fn mesh(mut self, nx: usize, ny: usize) -> Self {
        self.nx = Some(nx);
        self.ny = Some(ny);
        self
    }

    pub fn spec(&self) -> ProblemSpec {
        make_problem(self.problem)
    }

    fn resolved_mesh(&self, spec: &ProblemSpec) -> (usize, usize) {
        let nx = self.nx.unwrap_or(spec.default_mesh.0);
        let ny = if spec.dim == 1 {
            1
        } else {
            self.ny.or(self.nx).unwrap_or(spec.default_mesh.1)
        };
        (nx, ny)
    }
}

/// Final field of a run in either dimension.
#[derive(Clone, Debug, PartialEq)]
pub enum Solution {
    OneD(Field<3>),
    TwoD(Field<4>),
}

impl Solution {
    pub fn grid(&self) -> Grid {
        match self {
            Solution::OneD(f) => f.grid,
            Solution::TwoD(f) => f.grid,
        }
    }

    pub fn time(&self) -> f64 {
        match self {
            Solution::OneD(f) => f.time,
            Solution::TwoD(f) => f.time,
        }
    }

    /// Density of interior cell `(i, j)`.
    pub fn density(&self, i: usize, j: usize) -> f64 {
        match self {
            Solution::OneD(f) => f.cell(i, j)[0],
            Solution::TwoD(f) => f.cell(i, j)[0],
        }
    }

    pub fn primitives(&self, gas: GasParams) -> Result<Vec<PrimitiveState>> {
        match self {
            Solution::OneD(f) => f.primitives(gas),
            Solution::TwoD(f) => f.primitives(gas),
        }
    }

    /// Totals of every conserved component (2-D padded to four slots).
    pub fn totals(&self) -> Vec<f64> {
        match self {
            Solution::OneD(f) => f.totals().0.to_vec(),
            Solution::TwoD(f) => f.totals().0.to_vec(),
        }
    }

    pub fn write_csv(&self, gas: GasParams, path: &Path) -> Result<()> {
        match self {
            Solution::OneD(f) => write_snapshot_csv(f, gas, path),
            Solution::TwoD(f) => write_snapshot_csv(f, gas, path),
        }
    }

    /// Density errors against the exact solution at the field time.
    pub fn errors(&self, spec: &ProblemSpec) -> Result<ErrorNorms> {
        match self {
            Solution::OneD(f) => error_norms(f, &exact_field(spec, f.grid, f.time)?),
            Solution::TwoD(f) => error_norms(f, &exact_field(spec, f.grid, f.time)?),
        }
    }
}

#[derive(Clone, Debug)]
pub struct RunResult {
    pub solution: Solution,
    pub initial_totals: Vec<f64>,
    /// Seconds spent integrating, excluding output.
    pub wall_time: f64,
    pub steps: usize,
    /// Every CSV written, in order.
    pub files: Vec<PathBuf>,
}

/// `run.csv` at time 0.5 becomes `run_t0.5.csv`.
fn snapshot_path(out: &Path, t: f64, tag: &str) -> PathBuf {
    let stem = out.file_stem().and_then(|s| s.to_str()).unwrap_or("run");
    let ext = out.extension().and_then(|s| s.to_str()).unwrap_or("csv");
    out.with_file_name(format!("{stem}_{tag}{t}.{ext}"))
}

/// Set up the problem, integrate to the final time and write any requested
/// CSV output.
pub fn run_simulation(cfg: &RunConfig) -> Result<RunResult> {
    cfg.scheme.validate()?;
    let spec = cfg.spec();
    let (nx, ny) = cfg.resolved_mesh(&spec);
    let t_final = cfg.t_final.unwrap_or(spec.t_final);
    let mut times: Vec<f64> = cfg
        .snapshots
        .iter()
        .copied()
        .filter(|&t| t > 0.0 && t < t_final)
        .collect();
    if cfg.snapshots.iter().any(|t| !t.is_finite() || *t < 0.0) {
        return Err(SolverError::InvalidConfig("snapshot times must be >= 0".into()));
    }
    times.sort_by(f64::total_cmp);
    times.dedup();
    times.push(t_final);

    let op = SpatialOperator::new(cfg.scheme, spec.gas, spec.bcs)
        .with_source(spec.source)
        .with_execution(cfg.exec);
    if spec.dim == 1 {
        let field = spec.initial_field::<3>(nx, ny)?;
        drive(cfg, &spec, &op, field, &times, Solution::OneD)
    } else {
        let field = spec.initial_field::<4>(nx, ny)?;
        drive(cfg, &spec, &op, field, &times, Solution::TwoD)
    }
}

fn drive<const N: usize>(
    cfg: &RunConfig,
    spec: &ProblemSpec,
    op: &SpatialOperator,
    mut field: Field<N>,
    times: &[f64],
    wrap: fn(Field<N>) -> Solution,
) -> Result<RunResult> {
    let initial_totals = field.totals().0.to_vec();
    let mut files = Vec::new();
    let mut steps = 0;
    let mut wall = 0.0;
    let last = times.len() - 1;
    for (k, &t) in times.iter().enumerate() {
        let control = TimeControl::new(cfg.scheme.cfl, t, cfg.scheme.accuracy_mode)?
            .with_accuracy_length(cfg.scheme.accuracy_length)?;
        let start = Instant::now();
        let log = integrate_to(&mut field, op, &control)?;
        wall += start.elapsed().as_secs_f64();
        steps += log.steps;
        if let Some(out) = &cfg.out {
            let path = if k == last {
                out.clone()
            } else {
                snapshot_path(out, t, "t")
            };
            write_snapshot_csv(&field, spec.gas, &path)?;
            files.push(path);
            if k == last && spec.id == ProblemId::Ex8 {
                let diag = snapshot_path(out, t, "diag_t");
                write_diagonal_slice_csv(&field, &diag)?;
                files.push(diag);
            }
        }
    }
    Ok(RunResult {
        solution: wrap(field),
        initial_totals,
        wall_time: wall,
        steps,
        files,
    })
}
