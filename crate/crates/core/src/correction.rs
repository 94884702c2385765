//! A-WENO correction terms: central differences of the physical flux at grid
//! points around an interface, and the corrected interface flux `H`.

use crate::eos::{FluxVector, StateVector};
use crate::error::{Result, SolverError};
use crate::Order;

/// `F_xx` at `j+1/2` from `F_{j-1..j+2}`, second-order accurate.
#[inline]
pub fn fxx_third<const N: usize>(f: &[FluxVector<N>; 4], dx: f64) -> FluxVector<N> {
    (f[0] - f[1] - f[2] + f[3]) * (1.0 / (2.0 * dx * dx))
}

/// `F_xx` at `j+1/2` from `F_{j-2..j+3}`, fourth-order accurate.
#[inline]
pub fn fxx_fifth<const N: usize>(f: &[FluxVector<N>; 6], dx: f64) -> FluxVector<N> {
    ((f[0] + f[5]) * -5.0 + (f[1] + f[4]) * 39.0 - (f[2] + f[3]) * 34.0)
        * (1.0 / (48.0 * dx * dx))
}

/// `F_xxxx` at `j+1/2` from `F_{j-2..j+3}`, second-order accurate.
#[inline]
pub fn fxxxx_fifth<const N: usize>(f: &[FluxVector<N>; 6], dx: f64) -> FluxVector<N> {
    ((f[0] + f[5]) - (f[1] + f[4]) * 3.0 + (f[2] + f[3]) * 2.0) * (1.0 / (2.0 * dx.powi(4)))
}

/// Derivative estimates entering `H`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Corrections<const N: usize> {
    None,
    Third { fxx: FluxVector<N> },
    Fifth { fxx: FluxVector<N>, fxxxx: FluxVector<N> },
}

/// `H = F_FV - dx^2/24 F_xx [+ 7 dx^4/5760 F_xxxx]`.
pub fn assemble_h_flux<const N: usize>(
    fv_flux: FluxVector<N>,
    order: Order,
    corrections: Corrections<N>,
    dx: f64,
) -> Result<FluxVector<N>> {
    let dx2 = dx * dx;
    match (order, corrections) {
        (Order::First | Order::Second, Corrections::None) => Ok(fv_flux),
        (Order::Third, Corrections::Third { fxx }) => Ok(fv_flux - fxx * (dx2 / 24.0)),
        (Order::Fifth, Corrections::Fifth { fxx, fxxxx }) => {
            Ok(fv_flux - fxx * (dx2 / 24.0) + fxxxx * (7.0 * dx2 * dx2 / 5760.0))
        }
        _ => Err(SolverError::OrderCorrectionMismatch {
            order: order.as_u8(),
        }),
    }
}

/// Combined correction `H - F_FV` straight from the point fluxes; the form used
/// in the inner loop.
#[inline]
pub(crate) fn correction_from_points<const N: usize>(
    order: Order,
    f: &[FluxVector<N>],
) -> FluxVector<N> {
    match order {
        // dx cancels: dx^2/24 * (..)/(2 dx^2)
        Order::Third => (f[1] - f[2] - f[3] + f[4]) * (-1.0 / 48.0),
        Order::Fifth => {
            let s0 = f[0] + f[5];
            let s1 = f[1] + f[4];
            let s2 = f[2] + f[3];
            let fxx = s0 * -5.0 + s1 * 39.0 - s2 * 34.0;
            let fxxxx = s0 - s1 * 3.0 + s2 * 2.0;
            fxx * (-1.0 / (24.0 * 48.0)) + fxxxx * (7.0 / (5760.0 * 2.0))
        }
        _ => StateVector::ZERO,
    }
}
