//! The eleven benchmark problems: domains, gas, boundary conditions, initial
//! data, final times and exact solutions where they exist.

use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;

use crate::eos::{prim_to_cons, GasParams, PrimitiveState};
use crate::error::{Result, SolverError};
use crate::spatial::{Boundaries, BoundaryKind, Field, Grid, Source};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ProblemId {
    Ex1,
    Ex2,
    Ex3,
    Ex4,
    Ex5,
    Ex6,
    Ex7,
    Ex8,
    Ex9,
    Ex10,
    Ex11,
}

impl ProblemId {
    pub const ALL: [ProblemId; 11] = [
        ProblemId::Ex1,
        ProblemId::Ex2,
        ProblemId::Ex3,
        ProblemId::Ex4,
        ProblemId::Ex5,
        ProblemId::Ex6,
        ProblemId::Ex7,
        ProblemId::Ex8,
        ProblemId::Ex9,
        ProblemId::Ex10,
        ProblemId::Ex11,
    ];

    pub fn number(self) -> usize {
        self as usize + 1
    }

    /// Descriptive alias accepted next to `exN`.
    pub fn alias(self) -> &'static str {
        match self {
            ProblemId::Ex1 => "smooth-1d",
            ProblemId::Ex2 => "smooth-advection",
            ProblemId::Ex3 => "shu-osher",
            ProblemId::Ex4 => "titarev-toro",
            ProblemId::Ex5 => "blast",
            ProblemId::Ex6 => "smooth-2d",
            ProblemId::Ex7 => "vortex",
            ProblemId::Ex8 => "explosion",
            ProblemId::Ex9 => "implosion",
            ProblemId::Ex10 => "kelvin-helmholtz",
            ProblemId::Ex11 => "rayleigh-taylor",
        }
    }
}

impl fmt::Display for ProblemId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ex{}", self.number())
    }
}

impl FromStr for ProblemId {
    type Err = SolverError;

    fn from_str(s: &str) -> Result<Self> {
        let key = s.trim().to_ascii_lowercase();
        let extra = match key.as_str() {
            "kh" => Some(ProblemId::Ex10),
            "rt" => Some(ProblemId::Ex11),
            "woodward-colella" => Some(ProblemId::Ex5),
            _ => None,
        };
        extra
            .or_else(|| {
                ProblemId::ALL
                    .into_iter()
                    .find(|p| p.to_string() == key || p.alias() == key)
            })
            .ok_or_else(|| SolverError::UnknownProblem(s.to_string()))
    }
}

/// Everything needed to set up and judge one benchmark run.
#[derive(Clone, Debug, PartialEq)]
pub struct ProblemSpec {
    pub id: ProblemId,
    pub dim: usize,
    pub x: (f64, f64),
    /// Unused in 1-D.
    pub y: (f64, f64),
    pub gas: GasParams,
    pub t_final: f64,
    /// `(nx, ny)`; `ny == 1` in 1-D.
    pub default_mesh: (usize, usize),
    pub bcs: Boundaries,
    pub source: Option<Source>,
    pub has_exact: bool,
}

pub fn make_problem(id: ProblemId) -> ProblemSpec {
    use BoundaryKind::*;
    let gas14 = GasParams::default();
    let one_d = |x, t_final, n, bc| ProblemSpec {
        id,
        dim: 1,
        x,
        y: (0.0, 1.0),
        gas: gas14,
        t_final,
        default_mesh: (n, 1),
        bcs: Boundaries::uniform(bc),
        source: None,
        has_exact: false,
    };
    let two_d = |x, y, t_final, n: (usize, usize), bc| ProblemSpec {
        id,
        dim: 2,
        x,
        y,
        gas: gas14,
        t_final,
        default_mesh: n,
        bcs: Boundaries::uniform(bc),
        source: None,
        has_exact: false,
    };
    match id {
        ProblemId::Ex1 => ProblemSpec {
            has_exact: true,
            ..one_d((-1.0, 1.0), 0.1, 100, Periodic)
        },
        ProblemId::Ex2 => ProblemSpec {
            has_exact: true,
            ..one_d((-1.0, 1.0), 0.1, 100, Periodic)
        },
        ProblemId::Ex3 => one_d((-5.0, 5.0), 5.0, 400, Free),
        ProblemId::Ex4 => one_d((-10.0, 5.0), 5.0, 1200, Free),
        ProblemId::Ex5 => one_d((0.0, 1.0), 0.038, 400, SolidWall),
        ProblemId::Ex6 => ProblemSpec {
            has_exact: true,
            ..two_d((-1.0, 1.0), (-1.0, 1.0), 0.1, (50, 50), Periodic)
        },
        ProblemId::Ex7 => ProblemSpec {
            has_exact: true,
            ..two_d((-5.0, 5.0), (-5.0, 5.0), 10.0, (100, 100), Periodic)
        },
        ProblemId::Ex8 => two_d((-1.0, 1.0), (-1.0, 1.0), 0.25, (50, 50), Free),
        ProblemId::Ex9 => two_d((0.0, 0.3), (0.0, 0.3), 2.5, (400, 400), SolidWall),
        ProblemId::Ex10 => two_d((-0.5, 0.5), (-0.5, 0.5), 4.0, (1024, 1024), Periodic),
        ProblemId::Ex11 => {
            let gas = GasParams::new(5.0 / 3.0).expect("5/3 > 1");
            let top = PrimitiveState::new(1.0, 0.0, 0.0, 2.5, gas).expect("valid state");
            let bottom = PrimitiveState::new(2.0, 0.0, 0.0, 1.0, gas).expect("valid state");
            ProblemSpec {
                gas,
                bcs: Boundaries {
                    left: SolidWall,
                    right: SolidWall,
                    bottom: Dirichlet(bottom),
                    top: Dirichlet(top),
                },
                source: Some(Source::Gravity),
                ..two_d((0.0, 0.25), (0.0, 1.0), 2.95, (256, 1024), SolidWall)
            }
        }
    }
}

/// Vortex strength of the isentropic vortex.
const VORTEX_EPS: f64 = 5.0;
/// Shear-layer smoothing width of the Kelvin-Helmholtz setup.
const KH_L: f64 = 0.00625;

impl ProblemSpec {
    fn contains(&self, x: f64, y: f64) -> bool {
        let tol = 1e-12 * (self.x.1 - self.x.0).max(self.y.1 - self.y.0);
        let inside = |v: f64, (lo, hi): (f64, f64)| v >= lo - tol && v <= hi + tol;
        inside(x, self.x) && (self.dim == 1 || inside(y, self.y))
    }

    /// Primitive initial state at `(x, y)`; `y` is ignored in 1-D.
    pub fn initial_condition(&self, x: f64, y: f64) -> Result<PrimitiveState> {
        if !self.contains(x, y) {
            return Err(SolverError::OutOfDomain { x, y });
        }
        let g = self.gas;
        let gamma = g.gamma();
        let prim = |rho, u, v, p| PrimitiveState::new(rho, u, v, p, g);
        match self.id {
            ProblemId::Ex1 | ProblemId::Ex2 | ProblemId::Ex6 | ProblemId::Ex7 => {
                self.exact_solution(x, y, 0.0)
            }
            ProblemId::Ex3 => {
                if x < -4.0 {
                    prim(27.0 / 7.0, 4.0 * 35.0_f64.sqrt() / 9.0, 0.0, 31.0 / 3.0)
                } else {
                    prim(1.0 + 0.2 * (5.0 * x).sin(), 0.0, 0.0, 1.0)
                }
            }
            ProblemId::Ex4 => {
                if x < -4.5 {
                    prim(1.51695, 0.523346, 0.0, 1.805)
                } else {
                    prim(1.0 + 0.1 * (20.0 * x).sin(), 0.0, 0.0, 1.0)
                }
            }
            ProblemId::Ex5 => {
                let p = if x < 0.1 {
                    1000.0
                } else if x <= 0.9 {
                    0.01
                } else {
                    100.0
                };
                prim(1.0, 0.0, 0.0, p)
            }
            ProblemId::Ex8 => {
                if x * x + y * y < 0.16 {
                    prim(1.0, 0.0, 0.0, 1.0)
                } else {
                    prim(0.125, 0.0, 0.0, 0.1)
                }
            }
            ProblemId::Ex9 => {
                // Even meshes put the diagonal cells exactly on the jump; they
                // get the mean of the two states, like H(0) = 1/2.
                let s = x.abs() + y.abs();
                if (s - 0.15).abs() <= 1e-12 {
                    prim(0.5625, 0.0, 0.0, 0.57)
                } else if s < 0.15 {
                    prim(0.125, 0.0, 0.0, 0.14)
                } else {
                    prim(1.0, 0.0, 0.0, 1.0)
                }
            }
            ProblemId::Ex10 => {
                let (rho, u) = if y < -0.25 {
                    (1.0, -0.5 + 0.5 * ((y + 0.25) / KH_L).exp())
                } else if y < 0.0 {
                    (2.0, 0.5 - 0.5 * ((-y - 0.25) / KH_L).exp())
                } else if y < 0.25 {
                    (2.0, 0.5 - 0.5 * ((y - 0.25) / KH_L).exp())
                } else {
                    (1.0, -0.5 + 0.5 * ((0.25 - y) / KH_L).exp())
                };
                prim(rho, u, 0.01 * (4.0 * PI * x).sin(), 1.5)
            }
            ProblemId::Ex11 => {
                let (rho, p) = if y < 0.5 {
                    (2.0, 2.0 * y + 1.0)
                } else {
                    (1.0, y + 1.5)
                };
                let c = (gamma * p / rho).sqrt();
                prim(rho, 0.0, -0.025 * c * (8.0 * PI * x).cos(), p)
            }
        }
    }

    /// Exact primitive state at `(x, y, t)` for the smooth problems.
    pub fn exact_solution(&self, x: f64, y: f64, t: f64) -> Result<PrimitiveState> {
        let g = self.gas;
        match self.id {
            ProblemId::Ex1 => {
                PrimitiveState::new(1.0 + 0.1 * (2.0 * PI * (x - t)).sin(), 1.0, 0.0, 1.0, g)
            }
            ProblemId::Ex2 => {
                PrimitiveState::new((2.0 + (PI * (x - t)).sin()).powi(4), 1.0, 0.0, 1.0, g)
            }
            ProblemId::Ex6 => PrimitiveState::new(
                1.0 + 0.2 * (PI * (x + y - 0.3 * t)).sin(),
                1.0,
                -0.7,
                1.0,
                g,
            ),
            ProblemId::Ex7 => {
                // advected by (1, 1) and wrapped into the periodic box
                let wrap = |v: f64, (lo, hi): (f64, f64)| lo + (v - lo).rem_euclid(hi - lo);
                let (x0, y0) = (wrap(x - t, self.x), wrap(y - t, self.y));
                vortex(x0, y0, g)
            }
            _ => Err(SolverError::NoExactSolution(self.id.to_string())),
        }
    }

    pub fn grid(&self, nx: usize, ny: usize) -> Result<Grid> {
        if self.dim == 1 {
            Grid::new_1d(nx, self.x.0, self.x.1)
        } else {
            Grid::new_2d(nx, ny, self.x, self.y)
        }
    }

    /// Field sampled pointwise at cell centers.
    pub fn initial_field<const N: usize>(&self, nx: usize, ny: usize) -> Result<Field<N>> {
        let grid = self.grid(nx, ny)?;
        Field::from_fn(grid, |x, y| {
            Ok(prim_to_cons(&self.initial_condition(x, y)?, self.gas))
        })
    }
}

fn vortex(x: f64, y: f64, g: GasParams) -> Result<PrimitiveState> {
    let gamma = g.gamma();
    let r2 = x * x + y * y;
    let t = 1.0 - (gamma - 1.0) * VORTEX_EPS * VORTEX_EPS / (8.0 * gamma * PI * PI) * (1.0 - r2).exp();
    let rho = t.powf(1.0 / (gamma - 1.0));
    let bump = VORTEX_EPS / (2.0 * PI) * (0.5 * (1.0 - r2)).exp();
    PrimitiveState::new(rho, 1.0 - bump * y, 1.0 + bump * x, rho.powf(gamma), g)
}
