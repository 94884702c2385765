//! Toro-Vazquez flux splitting: an upwinded advection flux plus a pressure
//! flux built from the interface star values of the pressure subsystem.

use crate::eos::{cons_to_prim, Axis, ConservedState, FluxVector, GasParams, PrimitiveState};
use crate::error::{Result, SolverError};

/// Star values of the pressure subsystem at one interface.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct StarState {
    /// Normal velocity `u*` (or `v*` for y-interfaces).
    pub vel_star: f64,
    pub p_star: f64,
    /// `C+`, built from the right (plus) state; positive for valid input.
    pub c_plus: f64,
    /// `C-`, built from the left (minus) state; negative for valid input.
    pub c_minus: f64,
}

/// Star values between the left (`minus`) and right (`plus`) interface states.
///
/// Each side's `C` coefficient uses that side's own sound speed.
#[inline]
pub fn star_states(
    left: &PrimitiveState,
    right: &PrimitiveState,
    axis: Axis,
    _gas: GasParams,
) -> Result<StarState> {
    let ql = left.normal_velocity(axis);
    let qr = right.normal_velocity(axis);
    let c_plus = right.rho * (qr + (qr * qr + 4.0 * right.c * right.c).sqrt());
    let c_minus = left.rho * (ql - (ql * ql + 4.0 * left.c * left.c).sqrt());
    let spread = c_plus - c_minus;
    if !(spread > 0.0) {
        return Err(SolverError::DegenerateWaveFan(spread));
    }
    let inv = 1.0 / spread;
    let vel_star = (c_plus * qr - c_minus * ql) * inv - 2.0 * inv * (right.p - left.p);
    let p_star = (c_plus * left.p - c_minus * right.p) * inv
        + 0.5 * c_plus * c_minus * inv * (qr - ql);
    Ok(StarState {
        vel_star,
        p_star,
        c_plus,
        c_minus,
    })
}

/// TV numerical flux: advection flux + pressure flux.
#[inline]
pub fn tv_numerical_flux<const N: usize>(
    left: &ConservedState<N>,
    right: &ConservedState<N>,
    axis: Axis,
    gas: GasParams,
) -> Result<FluxVector<N>> {
    axis.check::<N>()?;
    let wl = cons_to_prim(left, gas)?;
    let wr = cons_to_prim(right, gas)?;
    tv_flux_from_parts(left, &wl, right, &wr, axis, gas)
}

#[inline]
pub(crate) fn tv_flux_from_parts<const N: usize>(
    left: &ConservedState<N>,
    wl: &PrimitiveState,
    right: &ConservedState<N>,
    wr: &PrimitiveState,
    axis: Axis,
    gas: GasParams,
) -> Result<FluxVector<N>> {
    let star = star_states(wl, wr, axis, gas)?;
    let (upwind, w) = if star.vel_star >= 0.0 {
        (left, wl)
    } else {
        (right, wr)
    };
    let mut flux = *upwind;
    flux[N - 1] = 0.5 * w.rho * (w.u * w.u + w.v * w.v);
    let mut flux = flux * star.vel_star;
    let g = gas.gamma();
    flux[axis.momentum_index()] += star.p_star;
    flux[N - 1] += g * star.vel_star * star.p_star / (g - 1.0);
    Ok(flux)
}
