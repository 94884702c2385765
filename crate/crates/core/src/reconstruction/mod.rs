//! One-sided interface values `U-` / `U+`.
//!
//! Orders 1 and 2 work component-wise on conserved variables. Orders 3 and 5
//! interpolate local characteristic variables built from the eigensystem at
//! the arithmetic mean of the two cells adjoining each interface.

mod eigen;
mod weno;

pub use eigen::{euler_eigensystem, Eigensystem};
pub use weno::{
    weno3_face_value, weno3_face_value_right, weno3_weights, wenoz5_face_value,
    wenoz5_face_value_right, wenoz5_weights,
};

use crate::eos::{Axis, ConservedState, GasParams, StateVector};
use crate::error::{Result, SolverError};
use crate::Order;

/// Ghost layers required on each side of a line for every supported order.
pub const GHOST: usize = 3;

/// Left- and right-biased values at one interface.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct FacePair<const N: usize> {
    pub minus: ConservedState<N>,
    pub plus: ConservedState<N>,
}

impl<const N: usize> Default for FacePair<N> {
    fn default() -> Self {
        Self {
            minus: StateVector::ZERO,
            plus: StateVector::ZERO,
        }
    }
}

/// Limiter and WENO constants.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct WenoParams {
    pub eps: f64,
    /// Exponent applied to `tau` in the third-order interpolant.
    pub power3: f64,
    /// Exponent applied to the `tau / (beta + eps)` ratio in WENO-Z.
    pub power5: f64,
    /// Generalized minmod parameter, `1 <= theta <= 2`.
    pub theta: f64,
}

impl Default for WenoParams {
    fn default() -> Self {
        Self {
            eps: 1e-12,
            power3: 1.4,
            power5: 2.0,
            theta: 1.3,
        }
    }
}

impl WenoParams {
    pub fn validate(&self) -> Result<()> {
        if !(self.eps > 0.0) {
            return Err(SolverError::InvalidConfig(format!("eps = {}", self.eps)));
        }
        if !(1.0..=2.0).contains(&self.theta) {
            return Err(SolverError::InvalidConfig(format!(
                "theta = {} (must lie in [1, 2])",
                self.theta
            )));
        }
        Ok(())
    }
}

/// `min` if all arguments are positive, `max` if all are negative, else 0.
pub fn minmod(values: &[f64]) -> Result<f64> {
    let (first, rest) = values.split_first().ok_or(SolverError::EmptyInput)?;
    let mut out = *first;
    if out > 0.0 {
        for &v in rest {
            if !(v > 0.0) {
                return Ok(0.0);
            }
            out = out.min(v);
        }
    } else if out < 0.0 {
        for &v in rest {
            if !(v < 0.0) {
                return Ok(0.0);
            }
            out = out.max(v);
        }
    } else {
        return Ok(0.0);
    }
    Ok(out)
}

#[inline]
fn minmod3(a: f64, b: f64, c: f64) -> f64 {
    if a > 0.0 && b > 0.0 && c > 0.0 {
        a.min(b).min(c)
    } else if a < 0.0 && b < 0.0 && c < 0.0 {
        a.max(b).max(c)
    } else {
        0.0
    }
}

/// Generalized-minmod slope of the middle cell of `cells`, per component.
#[inline]
pub fn minmod_slope<const N: usize>(
    cells: &[ConservedState<N>; 3],
    theta: f64,
    dx: f64,
) -> StateVector<N> {
    let mut out = [0.0; N];
    for (i, o) in out.iter_mut().enumerate() {
        let (a, b, c) = (cells[0][i], cells[1][i], cells[2][i]);
        *o = minmod3(theta * (b - a) / dx, (c - a) / (2.0 * dx), theta * (c - b) / dx);
    }
    StateVector(out)
}

/// Piecewise-linear face values `(U at x_{j-1/2}+, U at x_{j+1/2}-)` of the
/// middle cell, together with its slope.
pub fn minmod_face_values<const N: usize>(
    cells: &[ConservedState<N>; 3],
    theta: f64,
    dx: f64,
) -> (StateVector<N>, FacePair<N>) {
    let slope = minmod_slope(cells, theta, dx);
    let half = slope * (0.5 * dx);
    (
        slope,
        FacePair {
            minus: cells[1] - half,
            plus: cells[1] + half,
        },
    )
}

/// Reusable buffers for line reconstruction.
#[derive(Debug, Default)]
pub(crate) struct LineScratch<const N: usize> {
    slopes: Vec<StateVector<N>>,
}

/// Face values at all `n + 1` interfaces of a line of `n` interior cells
/// padded with [`GHOST`] cells on each side. `faces[i]` is interface
/// `i - 1/2` of interior cell `i` (so `faces[0]` is the left boundary).
pub fn reconstruct_faces<const N: usize>(
    cells: &[ConservedState<N>],
    order: Order,
    axis: Axis,
    params: &WenoParams,
    gas: GasParams,
    spacing: f64,
) -> Result<Vec<FacePair<N>>> {
    if cells.len() < 2 * GHOST + 1 {
        return Err(SolverError::InsufficientStencil {
            needed: 2 * GHOST + 1,
            got: cells.len(),
        });
    }
    let mut faces = vec![FacePair::default(); cells.len() - 2 * GHOST + 1];
    let mut scratch = LineScratch::default();
    reconstruct_line(
        cells,
        order,
        axis,
        params,
        gas,
        spacing,
        &mut faces,
        &mut scratch,
    )?;
    Ok(faces)
}

#[allow(clippy::too_many_arguments)]
pub(crate) fn reconstruct_line<const N: usize>(
    cells: &[ConservedState<N>],
    order: Order,
    axis: Axis,
    params: &WenoParams,
    gas: GasParams,
    spacing: f64,
    faces: &mut [FacePair<N>],
    scratch: &mut LineScratch<N>,
) -> Result<()> {
    let nfaces = faces.len();
    debug_assert_eq!(cells.len(), nfaces - 1 + 2 * GHOST);
    // face f lies between cells[GHOST - 1 + f] and cells[GHOST + f]
    let base = GHOST - 1;
    match order {
        Order::First => {
            for (f, face) in faces.iter_mut().enumerate() {
                face.minus = cells[base + f];
                face.plus = cells[base + f + 1];
            }
        }
        Order::Second => {
            let slopes = &mut scratch.slopes;
            slopes.clear();
            // slopes of cells base..=base + nfaces
            for c in base..=base + nfaces {
                let stencil = [cells[c - 1], cells[c], cells[c + 1]];
                slopes.push(minmod_slope(&stencil, params.theta, spacing));
            }
            let half = 0.5 * spacing;
            for (f, face) in faces.iter_mut().enumerate() {
                face.minus = cells[base + f] + slopes[f] * half;
                face.plus = cells[base + f + 1] - slopes[f + 1] * half;
            }
        }
        Order::Third => {
            for (f, face) in faces.iter_mut().enumerate() {
                let j = base + f;
                let es = euler_eigensystem(&((cells[j] + cells[j + 1]) * 0.5), axis, gas)?;
                let g: [StateVector<N>; 4] =
                    std::array::from_fn(|m| es.to_characteristic(&cells[j - 1 + m]));
                let mut lo = [0.0; N];
                let mut hi = [0.0; N];
                for i in 0..N {
                    let w = [g[0][i], g[1][i], g[2][i], g[3][i]];
                    lo[i] = weno3_face_value(&w, params);
                    hi[i] = weno3_face_value_right(&w, params);
                }
                face.minus = es.from_characteristic(&StateVector(lo));
                face.plus = es.from_characteristic(&StateVector(hi));
            }
        }
        Order::Fifth => {
            // separate copies so p = 2 never reaches libm `pow`
            if params.power5 == 2.0 {
                fifth_faces(cells, axis, gas, faces, params.eps, |r| r * r)?;
            } else {
                let p = params.power5;
                fifth_faces(cells, axis, gas, faces, params.eps, move |r: f64| r.powf(p))?;
            }
        }
    }
    Ok(())
}

#[inline(never)]
fn fifth_faces<const N: usize, A: Fn(f64) -> f64 + Copy>(
    cells: &[ConservedState<N>],
    axis: Axis,
    gas: GasParams,
    faces: &mut [FacePair<N>],
    eps: f64,
    alpha: A,
) -> Result<()> {
    let base = GHOST - 1;
    for (f, face) in faces.iter_mut().enumerate() {
        let j = base + f;
        let es = euler_eigensystem(&((cells[j] + cells[j + 1]) * 0.5), axis, gas)?;
        let g: [StateVector<N>; 6] =
            std::array::from_fn(|m| es.to_characteristic(&cells[j - 2 + m]));
        let mut lo = [0.0; N];
        let mut hi = [0.0; N];
        for i in 0..N {
            let w = [g[0][i], g[1][i], g[2][i], g[3][i], g[4][i], g[5][i]];
            (lo[i], hi[i]) = weno::wenoz5_pair_with(&w, eps, alpha);
        }
        face.minus = es.from_characteristic(&StateVector(lo));
        face.plus = es.from_characteristic(&StateVector(hi));
    }
    Ok(())
}
