//! Comparison fluxes: central-upwind (HLL-type) and HLLC.
//!
//! Both use one-sided eigenvalue bounds `q -/+ c` taken from each side as
//! their signal-speed estimates.

use crate::eos::{
    cons_to_prim, flux_from_parts, Axis, ConservedState, FluxVector, GasParams, PrimitiveState,
};
use crate::error::{Result, SolverError};

/// Signal-speed estimates at one interface.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct WaveSpeeds {
    pub s_left: f64,
    pub s_right: f64,
    /// Contact speed; only meaningful for HLLC.
    pub s_star: f64,
}

/// One-sided local speeds `a-` <= 0 <= `a+` of the central-upwind flux.
pub fn cu_speeds(wl: &PrimitiveState, wr: &PrimitiveState, axis: Axis) -> WaveSpeeds {
    let ql = wl.normal_velocity(axis);
    let qr = wr.normal_velocity(axis);
    let a_plus = (ql + wl.c).max(qr + wr.c).max(0.0);
    let a_minus = (ql - wl.c).min(qr - wr.c).min(0.0);
    WaveSpeeds {
        s_left: a_minus,
        s_right: a_plus,
        s_star: f64::NAN,
    }
}

/// Central-upwind flux (equivalent to HLL with the bounds of [`cu_speeds`]).
pub fn cu_hll_flux<const N: usize>(
    left: &ConservedState<N>,
    right: &ConservedState<N>,
    axis: Axis,
    gas: GasParams,
) -> Result<FluxVector<N>> {
    axis.check::<N>()?;
    let wl = cons_to_prim(left, gas)?;
    let wr = cons_to_prim(right, gas)?;
    Ok(cu_flux_from_parts(left, &wl, right, &wr, axis))
}

#[inline]
pub(crate) fn cu_flux_from_parts<const N: usize>(
    left: &ConservedState<N>,
    wl: &PrimitiveState,
    right: &ConservedState<N>,
    wr: &PrimitiveState,
    axis: Axis,
) -> FluxVector<N> {
    let WaveSpeeds {
        s_left: am,
        s_right: ap,
        ..
    } = cu_speeds(wl, wr, axis);
    let spread = ap - am;
    if spread == 0.0 {
        return FluxVector::ZERO;
    }
    let fl = flux_from_parts(left, wl, axis);
    let fr = flux_from_parts(right, wr, axis);
    let inv = 1.0 / spread;
    (fl * ap - fr * am) * inv + (*right - *left) * (ap * am * inv)
}

/// Wave speeds of the HLLC solver: direct bounds plus the pressure-based
/// contact speed.
pub fn hllc_speeds(wl: &PrimitiveState, wr: &PrimitiveState, axis: Axis) -> Result<WaveSpeeds> {
    let ql = wl.normal_velocity(axis);
    let qr = wr.normal_velocity(axis);
    let s_left = (ql - wl.c).min(qr - wr.c);
    let s_right = (ql + wl.c).max(qr + wr.c);
    if !(s_right - s_left > 0.0) {
        return Err(SolverError::DegenerateWaveFan(s_right - s_left));
    }
    let ml = wl.rho * (s_left - ql);
    let mr = wr.rho * (s_right - qr);
    let s_star = (wr.p - wl.p + ml * ql - mr * qr) / (ml - mr);
    Ok(WaveSpeeds {
        s_left,
        s_right,
        s_star,
    })
}

pub fn hllc_flux<const N: usize>(
    left: &ConservedState<N>,
    right: &ConservedState<N>,
    axis: Axis,
    gas: GasParams,
) -> Result<FluxVector<N>> {
    axis.check::<N>()?;
    let wl = cons_to_prim(left, gas)?;
    let wr = cons_to_prim(right, gas)?;
    hllc_flux_from_parts(left, &wl, right, &wr, axis)
}

#[inline]
pub(crate) fn hllc_flux_from_parts<const N: usize>(
    left: &ConservedState<N>,
    wl: &PrimitiveState,
    right: &ConservedState<N>,
    wr: &PrimitiveState,
    axis: Axis,
) -> Result<FluxVector<N>> {
    let s = hllc_speeds(wl, wr, axis)?;
    if s.s_left >= 0.0 {
        return Ok(flux_from_parts(left, wl, axis));
    }
    if s.s_right <= 0.0 {
        return Ok(flux_from_parts(right, wr, axis));
    }
    let (state, w, wave) = if s.s_star >= 0.0 {
        (left, wl, s.s_left)
    } else {
        (right, wr, s.s_right)
    };
    let star = star_region_state(state, w, wave, s.s_star, axis);
    Ok(flux_from_parts(state, w, axis) + (star - *state) * wave)
}

/// Conserved state between the outer wave `wave` and the contact.
fn star_region_state<const N: usize>(
    state: &ConservedState<N>,
    w: &PrimitiveState,
    wave: f64,
    s_star: f64,
    axis: Axis,
) -> ConservedState<N> {
    let q = w.normal_velocity(axis);
    let factor = w.rho * (wave - q) / (wave - s_star);
    let mut out = *state * (factor / w.rho);
    out[0] = factor;
    out[axis.momentum_index()] = factor * s_star;
    out[N - 1] = factor
        * (state.energy() / w.rho + (s_star - q) * (s_star + w.p / (w.rho * (wave - q))));
    out
}
