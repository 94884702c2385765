//! Three-stage SSP Runge-Kutta time stepping with CFL step control.

use std::time::{Duration, Instant};

use crate::eos::{cons_to_prim, signal_speeds, GasParams, StateVector};
use crate::error::{Result, SolverError};
use crate::spatial::{Field, SpatialOperator};

/// Exponent of `dx` in the accuracy-mode step, `dt ~ dx^(5/3)`.
pub const ACCURACY_EXPONENT: f64 = 5.0 / 3.0;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct TimeControl {
    pub cfl: f64,
    pub t_final: f64,
    /// Shrink steps by `(h / accuracy_length)^(2/3)`, `h = min(dx, dy)`, so
    /// that the time error falls at the fifth-order rate.
    pub accuracy_mode: bool,
    /// Cell size at which the accuracy-mode step equals the plain CFL step.
    pub accuracy_length: f64,
}

impl TimeControl {
    pub fn new(cfl: f64, t_final: f64, accuracy_mode: bool) -> Result<Self> {
        if !(cfl > 0.0 && cfl < 1.0) {
            return Err(SolverError::InvalidConfig(format!("cfl = {cfl}")));
        }
        if !(t_final >= 0.0) || !t_final.is_finite() {
            return Err(SolverError::InvalidConfig(format!("t_final = {t_final}")));
        }
        Ok(Self {
            cfl,
            t_final,
            accuracy_mode,
            accuracy_length: 1.0,
        })
    }

    pub fn with_accuracy_length(mut self, length: f64) -> Result<Self> {
        if !(length > 0.0 && length.is_finite()) {
            return Err(SolverError::InvalidConfig(format!("accuracy length = {length}")));
        }
        self.accuracy_length = length;
        Ok(self)
    }
}

/// Unclipped CFL step of the current field.
pub fn stable_dt<const N: usize>(
    field: &Field<N>,
    control: &TimeControl,
    gas: GasParams,
) -> Result<f64> {
    let grid = field.grid;
    let (mut sx, mut sy) = (0.0_f64, 0.0_f64);
    for u in field.interior() {
        let (a, b) = signal_speeds(&cons_to_prim(&u, gas)?);
        sx = sx.max(a);
        sy = sy.max(b);
    }
    let rate = if grid.dim == 1 {
        sx / grid.dx
    } else {
        sx / grid.dx + sy / grid.dy
    };
    if !(rate > 0.0) {
        return Err(SolverError::ZeroWaveSpeed);
    }
    let mut dt = control.cfl / rate;
    if control.accuracy_mode {
        let h = if grid.dim == 1 { grid.dx } else { grid.dx.min(grid.dy) };
        // never above the plain CFL step
        dt *= (h / control.accuracy_length).min(1.0).powf(ACCURACY_EXPONENT - 1.0);
    }
    Ok(dt)
}

/// Next step size, clipped so the run lands on `t_final`.
pub fn compute_dt<const N: usize>(
    field: &Field<N>,
    control: &TimeControl,
    gas: GasParams,
) -> Result<f64> {
    let dt = stable_dt(field, control, gas)?;
    Ok(dt.min(control.t_final - field.time))
}

/// Stage buffers reused between steps.
#[derive(Debug, Default)]
pub struct Rk3Workspace<const N: usize> {
    u0: Vec<StateVector<N>>,
    k: Vec<StateVector<N>>,
}

/// One SSP-RK3 step of the interior cells of `field`. `rhs` must refresh
/// ghosts itself; `field.time` is advanced by `dt`.
pub fn ssprk3_step<const N: usize, F>(field: &mut Field<N>, dt: f64, rhs: F) -> Result<()>
where
    F: FnMut(&mut Field<N>, &mut [StateVector<N>]) -> Result<()>,
{
    ssprk3_step_with(field, dt, rhs, &mut Rk3Workspace::default())
}

pub fn ssprk3_step_with<const N: usize, F>(
    field: &mut Field<N>,
    dt: f64,
    mut rhs: F,
    ws: &mut Rk3Workspace<N>,
) -> Result<()>
where
    F: FnMut(&mut Field<N>, &mut [StateVector<N>]) -> Result<()>,
{
    let cells = field.grid.cells();
    ws.u0.clear();
    ws.u0.extend(field.interior());
    ws.k.resize(cells, StateVector::ZERO);

    // U1 = U0 + dt L(U0)
    rhs(field, &mut ws.k)?;
    update(field, &ws.u0, &ws.k, |_, u, k| u + k * dt);
    // U2 = 3/4 U0 + 1/4 (U1 + dt L(U1)), written as an increment on U0.
    // The weights then multiply small quantities only, so their rounding
    // (1/3 and 2/3 are inexact) does not bias the state step after step.
    rhs(field, &mut ws.k)?;
    update(field, &ws.u0, &ws.k, |u0, u, k| u0 + (u - u0 + k * dt) * 0.25);
    // U3 = 1/3 U0 + 2/3 (U2 + dt L(U2))
    rhs(field, &mut ws.k)?;
    update(field, &ws.u0, &ws.k, |u0, u, k| {
        u0 + (u - u0 + k * dt) * (2.0 / 3.0)
    });
    field.time += dt;
    Ok(())
}

fn update<const N: usize>(
    field: &mut Field<N>,
    u0: &[StateVector<N>],
    k: &[StateVector<N>],
    f: impl Fn(StateVector<N>, StateVector<N>, StateVector<N>) -> StateVector<N>,
) {
    let nx = field.grid.nx;
    for j in 0..field.grid.ny {
        for i in 0..nx {
            let c = j * nx + i;
            let cell = field.cell_mut(i, j);
            *cell = f(u0[c], *cell, k[c]);
        }
    }
}

/// Outcome of [`integrate_to`].
#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct StepLog {
    pub steps: usize,
    pub wall_time: Duration,
}

/// Advance `field` to `control.t_final`.
pub fn integrate_to<const N: usize>(
    field: &mut Field<N>,
    op: &SpatialOperator,
    control: &TimeControl,
) -> Result<StepLog> {
    let start = Instant::now();
    let mut ws = Rk3Workspace::default();
    let mut steps = 0;
    while field.time < control.t_final {
        let dt = stable_dt(field, control, op.gas)?;
        if dt < 1e-14 * control.t_final {
            return Err(SolverError::StepCollapse {
                dt,
                time: field.time,
            });
        }
        let remaining = control.t_final - field.time;
        let last = dt >= remaining;
        let dt = if last { remaining } else { dt };
        ssprk3_step_with(field, dt, |f, out| op.evaluate(f, out), &mut ws)?;
        if last {
            field.time = control.t_final;
        }
        steps += 1;
    }
    Ok(StepLog {
        steps,
        wall_time: start.elapsed(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::eos::{prim_to_cons, PrimitiveState};
    use crate::spatial::{BoundaryKind, Boundaries, Grid};
    use crate::{FluxFamily, Order, SchemeConfig};

    fn rest_field(n: usize, dx: f64) -> Field<3> {
        let g = GasParams::default();
        let grid = Grid::new_1d(n, 0.0, n as f64 * dx).unwrap();
        let w = PrimitiveState::new(1.0, 0.0, 0.0, 1.0, g).unwrap();
        Field::new(grid, prim_to_cons(&w, g)).unwrap()
    }

    #[test]
    fn cfl_step_at_rest() {
        let f = rest_field(10, 0.01);
        let ctl = TimeControl::new(0.45, 1.0, false).unwrap();
        let dt = compute_dt(&f, &ctl, GasParams::default()).unwrap();
        let want = 0.45 * 0.01 / 1.4_f64.sqrt();
        assert!((dt - want).abs() <= 1e-15 * want);
    }

    #[test]
    fn final_step_is_clipped() {
        let mut f = rest_field(10, 0.01);
        let ctl = TimeControl::new(0.45, 0.01, false).unwrap();
        f.time = 0.95 * 0.01;
        let dt = compute_dt(&f, &ctl, GasParams::default()).unwrap();
        assert!((dt - 0.05 * 0.01).abs() < 1e-18);
    }

    #[test]
    fn accuracy_mode_scaling() {
        let g = GasParams::default();
        let ctl = TimeControl::new(0.45, 1.0, true).unwrap();
        let plain = TimeControl::new(0.45, 1.0, false).unwrap();
        let a = stable_dt(&rest_field(10, 0.02), &ctl, g).unwrap();
        let b = stable_dt(&rest_field(10, 0.01), &ctl, g).unwrap();
        assert!((a / b - 2.0_f64.powf(5.0 / 3.0)).abs() < 1e-12);
        let c = stable_dt(&rest_field(10, 0.01), &plain, g).unwrap();
        assert!((b / c - 0.01_f64.powf(2.0 / 3.0)).abs() < 1e-12);

        // anchored at h = 0.02: equal to the plain step there, never above it
        let anchored = ctl.with_accuracy_length(0.02).unwrap();
        let at = |h| stable_dt(&rest_field(10, h), &anchored, g).unwrap();
        let plain_at = |h| stable_dt(&rest_field(10, h), &plain, g).unwrap();
        assert!((at(0.02) / plain_at(0.02) - 1.0).abs() < 1e-14);
        assert!((at(0.01) / plain_at(0.01) - 0.5_f64.powf(2.0 / 3.0)).abs() < 1e-14);
        assert_eq!(at(0.04), plain_at(0.04));
        assert!(ctl.with_accuracy_length(0.0).is_err());
    }

    #[test]
    fn zero_wave_speed_is_reported() {
        // a 2-D grid whose state has c = 0 cannot be built; fake one via
        // an infinite spacing instead
        let mut f = rest_field(4, 1.0);
        f.grid.dx = f64::INFINITY;
        let ctl = TimeControl::new(0.45, 1.0, false).unwrap();
        assert!(matches!(
            stable_dt(&f, &ctl, GasParams::default()),
            Err(SolverError::ZeroWaveSpeed)
        ));
    }

    #[test]
    fn zero_rhs_leaves_field_unchanged() {
        let mut f = rest_field(6, 0.1);
        let before = f.clone();
        ssprk3_step(&mut f, 0.3, |_, out| {
            out.fill(StateVector::ZERO);
            Ok(())
        })
        .unwrap();
        assert_eq!(f.data, before.data);
        assert_eq!(f.time, 0.3);
    }

    #[test]
    fn linear_amplification_factor() {
        for (lambda, dt) in [(-1.0, 0.1), (-3.0, 0.5), (2.0, 0.05), (-0.7, 1.3)] {
            let mut f = rest_field(1, 1.0);
            ssprk3_step(&mut f, dt, |field, out| {
                out[0] = field.cell(0, 0) * lambda;
                Ok(())
            })
            .unwrap();
            let z: f64 = lambda * dt;
            let amp = 1.0 + z + z * z / 2.0 + z * z * z / 6.0;
            for (c, want) in [1.0, 0.0, 2.5].iter().enumerate() {
                assert!((f.cell(0, 0)[c] - want * amp).abs() <= 1e-14 * want.abs().max(1.0));
            }
        }
    }

    #[test]
    fn integrate_hits_t_final_and_conserves() {
        let g = GasParams::default();
        let grid = Grid::new_1d(50, -1.0, 1.0).unwrap();
        let mut f = Field::<3>::from_fn(grid, |x, _| {
            let w = PrimitiveState::new(1.0 + 0.2 * (3.0 * x).cos(), 0.5, 0.0, 1.0, g)?;
            Ok(prim_to_cons(&w, g))
        })
        .unwrap();
        let before = f.totals();
        let op = SpatialOperator::new(
            SchemeConfig::new(Order::Third, FluxFamily::Tv),
            g,
            Boundaries::uniform(BoundaryKind::Periodic),
        );
        let ctl = TimeControl::new(0.45, 0.37, false).unwrap();
        let log = integrate_to(&mut f, &op, &ctl).unwrap();
        assert!(log.steps > 0);
        assert_eq!(f.time, 0.37);
        let after = f.totals();
        for c in 0..3 {
            assert!((after[c] - before[c]).abs() <= 1e-12 * before[c].abs().max(1.0));
        }
        // already at t_final: no steps
        let snapshot = f.clone();
        let log = integrate_to(&mut f, &op, &ctl).unwrap();
        assert_eq!(log.steps, 0);
        assert_eq!(f, snapshot);
    }
}
