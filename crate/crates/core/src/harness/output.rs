use std::fs::File;
use std::io::Write;
use std::path::Path;

use crate::eos::{cons_to_prim, GasParams};
use crate::error::{Result, SolverError};
use crate::spatial::Field;

use super::study::ConvergenceRow;

pub const SNAPSHOT_HEADER_1D: [&str; 5] = ["x", "rho", "u", "p", "E"];
pub const SNAPSHOT_HEADER_2D: [&str; 7] = ["x", "y", "rho", "u", "v", "p", "E"];
pub const TABLE_HEADER: [&str; 6] = [
    "mesh",
    "error_l1",
    "rate_l1",
    "error_linf",
    "rate_linf",
    "wall_time",
];

/// 17 significant digits: lossless for f64.
pub(crate) fn fmt_f64(v: f64) -> String {
    format!("{v:.16e}")
}

fn writer(path: &Path) -> Result<csv::Writer<File>> {
    if let Some(dir) = path.parent().filter(|d| !d.as_os_str().is_empty()) {
        std::fs::create_dir_all(dir).map_err(|source| SolverError::IoFailure {
            path: dir.to_path_buf(),
            source,
        })?;
    }
    csv::Writer::from_path(path).map_err(|source| SolverError::Csv {
        path: path.to_path_buf(),
        source,
    })
}

fn csv_err(path: &Path) -> impl Fn(csv::Error) -> SolverError + '_ {
    move |source| SolverError::Csv {
        path: path.to_path_buf(),
        source,
    }
}

fn finish(mut w: csv::Writer<File>, path: &Path) -> Result<()> {
    w.flush().map_err(|source| SolverError::IoFailure {
        path: path.to_path_buf(),
        source,
    })
}

/// Cell-center primitive values plus total energy, row-major.
pub fn write_snapshot_csv<const N: usize>(
    field: &Field<N>,
    gas: GasParams,
    path: &Path,
) -> Result<()> {
    let mut w = writer(path)?;
    let err = csv_err(path);
    let grid = field.grid;
    if grid.dim == 1 {
        w.write_record(SNAPSHOT_HEADER_1D).map_err(&err)?;
    } else {
        w.write_record(SNAPSHOT_HEADER_2D).map_err(&err)?;
    }
    for j in 0..grid.ny {
        for i in 0..grid.nx {
            let u = field.cell(i, j);
            let p = cons_to_prim(&u, gas)?;
            let rec: Vec<String> = if grid.dim == 1 {
                vec![grid.x_center(i), p.rho, p.u, p.p, u.energy()]
            } else {
                vec![
                    grid.x_center(i),
                    grid.y_center(j),
                    p.rho,
                    p.u,
                    p.v,
                    p.p,
                    u.energy(),
                ]
            }
            .into_iter()
            .map(fmt_f64)
            .collect();
            w.write_record(&rec).map_err(&err)?;
        }
    }
    finish(w, path)
}

/// Density along `y = x` by nearest-cell sampling, one row per x-column.
pub fn write_diagonal_slice_csv<const N: usize>(field: &Field<N>, path: &Path) -> Result<()> {
    let grid = field.grid;
    if grid.dim != 2 {
        return Err(SolverError::GridMismatch("diagonal slice needs a 2-D field".into()));
    }
    let mut w = writer(path)?;
    let err = csv_err(path);
    w.write_record(["x", "rho"]).map_err(&err)?;
    for i in 0..grid.nx {
        let x = grid.x_center(i);
        if x < grid.ymin || x > grid.ymax {
            continue;
        }
        let j = (((x - grid.ymin) / grid.dy).floor() as usize).min(grid.ny - 1);
        w.write_record([fmt_f64(x), fmt_f64(field.cell(i, j)[0])])
            .map_err(&err)?;
    }
    finish(w, path)
}

pub fn write_table_csv(rows: &[ConvergenceRow], path: &Path) -> Result<()> {
    let mut w = writer(path)?;
    let err = csv_err(path);
    w.write_record(TABLE_HEADER).map_err(&err)?;
    let opt = |r: Option<f64>| r.map(fmt_f64).unwrap_or_default();
    for r in rows {
        w.write_record([
            r.mesh.to_string(),
            fmt_f64(r.error_l1),
            opt(r.rate_l1),
            fmt_f64(r.error_linf),
            opt(r.rate_linf),
            fmt_f64(r.wall_time),
        ])
        .map_err(&err)?;
    }
    finish(w, path)
}

/// Inverse of [`write_table_csv`]; the L2 error is not stored and reads as 0.
pub fn read_table_csv(path: &Path) -> Result<Vec<ConvergenceRow>> {
    let err = csv_err(path);
    let mut r = csv::Reader::from_path(path).map_err(&err)?;
    let header: Vec<String> = r
        .headers()
        .map_err(&err)?
        .iter()
        .map(str::to_string)
        .collect();
    if header != TABLE_HEADER {
        return Err(SolverError::InvalidConfig(format!(
            "{}: unexpected header {header:?}",
            path.display()
        )));
    }
    let bad = |what: &str| SolverError::InvalidConfig(format!("{}: bad {what}", path.display()));
    let num = |s: &str, what: &str| s.parse::<f64>().map_err(|_| bad(what));
    let opt = |s: &str, what: &str| {
        if s.is_empty() {
            Ok(None)
        } else {
            num(s, what).map(Some)
        }
    };
    let mut rows = Vec::new();
    for rec in r.records() {
        let rec = rec.map_err(&err)?;
        rows.push(ConvergenceRow {
            mesh: rec[0].parse().map_err(|_| bad("mesh"))?,
            error_l1: num(&rec[1], "error_l1")?,
            rate_l1: opt(&rec[2], "rate_l1")?,
            error_linf: num(&rec[3], "error_linf")?,
            rate_linf: opt(&rec[4], "rate_linf")?,
            error_l2: 0.0,
            wall_time: num(&rec[5], "wall_time")?,
        });
    }
    Ok(rows)
}

/// Write plain text, creating parent directories.
pub(crate) fn write_text(path: &Path, text: &str) -> Result<()> {
    let io = |source| SolverError::IoFailure {
        path: path.to_path_buf(),
        source,
    };
    if let Some(dir) = path.parent().filter(|d| !d.as_os_str().is_empty()) {
        std::fs::create_dir_all(dir).map_err(io)?;
    }
    File::create(path)
        .and_then(|mut f| f.write_all(text.as_bytes()))
        .map_err(io)
}
