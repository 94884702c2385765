//! Running problems, measuring errors and writing CSV output.

mod config;
mod norms;
mod output;
mod run;
mod study;

pub use config::{parse_snapshots, RunOptions};
pub use norms::{error_norms, exact_field, ErrorNorms};
pub use output::{
    read_table_csv, write_diagonal_slice_csv, write_snapshot_csv, write_table_csv,
    SNAPSHOT_HEADER_1D, SNAPSHOT_HEADER_2D, TABLE_HEADER,
};
pub use run::{run_simulation, RunConfig, RunResult, Solution};
pub use study::{
    convergence_study, efficiency_study, fill_rates, interpolate_cost, write_efficiency_csv,
    ConvergenceRow, EfficiencyPoint, EfficiencyRow,
};

/// Thread cap from `EULER_THREADS` (0 or unset means the default).
pub fn threads_from_env() -> crate::Result<usize> {
    match std::env::var("EULER_THREADS") {
        Err(_) => Ok(0),
        Ok(v) if v.trim().is_empty() => Ok(0),
        Ok(v) => v.trim().parse().map_err(|_| {
            crate::SolverError::InvalidConfig(format!("EULER_THREADS = `{v}` is not a count"))
        }),
    }
}
