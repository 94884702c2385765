use std::path::PathBuf;

use crate::error::{Result, SolverError};
use crate::problems::ProblemId;
use crate::{FluxFamily, Order, SchemeConfig};

use super::run::RunConfig;

/// Partially specified run settings, from a config file or the command line.
/// Later layers override earlier ones with [`RunOptions::overlay`].
#[derive(Clone, Debug, Default, PartialEq)]
pub struct RunOptions {
    pub problem: Option<ProblemId>,
    pub order: Option<Order>,
    pub flux: Option<FluxFamily>,
    pub nx: Option<usize>,
    pub ny: Option<usize>,
    pub cfl: Option<f64>,
    pub theta: Option<f64>,
    pub t_final: Option<f64>,
    pub accuracy_mode: Option<bool>,
    pub accuracy_length: Option<f64>,
    pub out: Option<PathBuf>,
    pub snapshots: Option<Vec<f64>>,
}

/// Comma-separated list of times.
pub fn parse_snapshots(s: &str) -> Result<Vec<f64>> {
    s.split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| {
            t.parse::<f64>()
                .map_err(|_| SolverError::InvalidConfig(format!("bad snapshot time `{t}`")))
        })
        .collect()
}

fn parse<T: std::str::FromStr>(key: &str, v: &str) -> Result<T> {
    v.parse()
        .map_err(|_| SolverError::InvalidConfig(format!("bad value `{v}` for `{key}`")))
}

impl RunOptions {
    /// Parse `key = value` lines. `#` starts a comment; keys accept either
    /// `-` or `_` as separator.
    pub fn from_config_str(text: &str) -> Result<Self> {
        let mut o = Self::default();
        for (n, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (key, value) = line.split_once('=').ok_or_else(|| {
                SolverError::InvalidConfig(format!("line {}: expected `key = value`", n + 1))
            })?;
            let key = key.trim().replace('_', "-").to_ascii_lowercase();
            let v = value.trim();
            match key.as_str() {
                "problem" => o.problem = Some(v.parse()?),
                "order" => o.order = Some(Order::from_u8(parse(&key, v)?)?),
                "flux" => o.flux = Some(v.parse()?),
                "nx" => o.nx = Some(parse(&key, v)?),
                "ny" => o.ny = Some(parse(&key, v)?),
                "cfl" => o.cfl = Some(parse(&key, v)?),
                "theta" => o.theta = Some(parse(&key, v)?),
                "t-final" => o.t_final = Some(parse(&key, v)?),
                "accuracy-mode" => o.accuracy_mode = Some(parse(&key, v)?),
                "accuracy-length" => o.accuracy_length = Some(parse(&key, v)?),
                "out" => o.out = Some(PathBuf::from(v)),
                "snapshots" => o.snapshots = Some(parse_snapshots(v)?),
                other => {
                    return Err(SolverError::InvalidConfig(format!(
                        "line {}: unknown key `{other}`",
                        n + 1
                    )))
                }
            }
        }
        Ok(o)
    }

    pub fn from_config_file(path: &std::path::Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|source| SolverError::IoFailure {
            path: path.to_path_buf(),
            source,
        })?;
        Self::from_config_str(&text)
    }

    /// Values set in `top` win.
    pub fn overlay(self, top: RunOptions) -> RunOptions {
        RunOptions {
            problem: top.problem.or(self.problem),
            order: top.order.or(self.order),
            flux: top.flux.or(self.flux),
            nx: top.nx.or(self.nx),
            ny: top.ny.or(self.ny),
            cfl: top.cfl.or(self.cfl),
            theta: top.theta.or(self.theta),
            t_final: top.t_final.or(self.t_final),
            accuracy_mode: top.accuracy_mode.or(self.accuracy_mode),
            accuracy_length: top.accuracy_length.or(self.accuracy_length),
            out: top.out.or(self.out),
            snapshots: top.snapshots.or(self.snapshots),
        }
    }

    /// Scheme with defaults for everything unset (order 5, TV flux).
    pub fn scheme(&self) -> Result<SchemeConfig> {
        let mut s = SchemeConfig::new(
            self.order.unwrap_or(Order::Fifth),
            self.flux.unwrap_or_default(),
        );
        if let Some(cfl) = self.cfl {
            s.cfl = cfl;
        }
        if let Some(theta) = self.theta {
            s.weno.theta = theta;
        }
        s.accuracy_mode = self.accuracy_mode.unwrap_or(false);
        if let Some(l) = self.accuracy_length {
            s.accuracy_length = l;
        }
        s.validate()?;
        Ok(s)
    }

    pub fn run_config(&self) -> Result<RunConfig> {
        let problem = self
            .problem
            .ok_or_else(|| SolverError::InvalidConfig("no problem given".into()))?;
        let mut cfg = RunConfig::new(problem, self.scheme()?);
        cfg.nx = self.nx;
        cfg.ny = self.ny;
        cfg.t_final = self.t_final;
        cfg.out = self.out.clone();
        cfg.snapshots = self.snapshots.clone().unwrap_or_default();
        Ok(cfg)
    }
}
