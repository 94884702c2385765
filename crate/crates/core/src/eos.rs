//! Ideal-gas state algebra.
//!
//! Conserved vectors are stored as `[f64; N]` with `N = 3` in 1-D
//! (`rho, rho*u, E`) and `N = 4` in 2-D (`rho, rho*u, rho*v, E`). The energy
//! always sits in the last slot.

use std::ops::{Add, AddAssign, Index, IndexMut, Mul, Neg, Sub, SubAssign};

use crate::error::{Result, SolverError};

/// Specific-heat ratio of the ideal gas.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct GasParams {
    gamma: f64,
}

impl GasParams {
    pub fn new(gamma: f64) -> Result<Self> {
        if !(gamma > 1.0) || !gamma.is_finite() {
            return Err(SolverError::InvalidGamma(gamma));
        }
        Ok(Self { gamma })
    }

    #[inline]
    pub fn gamma(&self) -> f64 {
        self.gamma
    }
}

impl Default for GasParams {
    fn default() -> Self {
        Self { gamma: 1.4 }
    }
}

/// Coordinate direction of a flux or sweep.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Axis {
    X,
    Y,
}

impl Axis {
    /// Slot of the normal momentum in a conserved vector.
    #[inline]
    pub fn momentum_index(self) -> usize {
        match self {
            Axis::X => 1,
            Axis::Y => 2,
        }
    }

    #[inline]
    pub(crate) fn check<const N: usize>(self) -> Result<()> {
        if N == 3 && self == Axis::Y {
            Err(SolverError::AxisInvalid)
        } else {
            Ok(())
        }
    }
}

/// A vector of conserved quantities, or of any quantity laid out the same
/// way (fluxes, right-hand sides, characteristic variables).
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct StateVector<const N: usize>(pub [f64; N]);

pub type ConservedState<const N: usize> = StateVector<N>;
pub type FluxVector<const N: usize> = StateVector<N>;

impl<const N: usize> StateVector<N> {
    pub const ZERO: Self = Self([0.0; N]);

    #[inline]
    pub fn rho(&self) -> f64 {
        self.0[0]
    }

    #[inline]
    pub fn mx(&self) -> f64 {
        self.0[1]
    }

    /// y-momentum; zero for 1-D states.
    #[inline]
    pub fn my(&self) -> f64 {
        if N == 4 {
            self.0[2]
        } else {
            0.0
        }
    }

    #[inline]
    pub fn energy(&self) -> f64 {
        self.0[N - 1]
    }

    pub fn max_abs(&self) -> f64 {
        self.0.iter().fold(0.0_f64, |m, v| m.max(v.abs()))
    }

    pub fn is_finite(&self) -> bool {
        self.0.iter().all(|v| v.is_finite())
    }
}

impl<const N: usize> Default for StateVector<N> {
    fn default() -> Self {
        Self::ZERO
    }
}

impl<const N: usize> Index<usize> for StateVector<N> {
    type Output = f64;
    #[inline]
    fn index(&self, i: usize) -> &f64 {
        &self.0[i]
    }
}

impl<const N: usize> IndexMut<usize> for StateVector<N> {
    #[inline]
    fn index_mut(&mut self, i: usize) -> &mut f64 {
        &mut self.0[i]
    }
}

impl<const N: usize> Add for StateVector<N> {
    type Output = Self;
    #[inline]
    fn add(mut self, rhs: Self) -> Self {
        self += rhs;
        self
    }
}

impl<const N: usize> AddAssign for StateVector<N> {
    #[inline]
    fn add_assign(&mut self, rhs: Self) {
        for (a, b) in self.0.iter_mut().zip(rhs.0) {
            *a += b;
        }
    }
}

impl<const N: usize> Sub for StateVector<N> {
    type Output = Self;
    #[inline]
    fn sub(mut self, rhs: Self) -> Self {
        self -= rhs;
        self
    }
}

impl<const N: usize> SubAssign for StateVector<N> {
    #[inline]
    fn sub_assign(&mut self, rhs: Self) {
        for (a, b) in self.0.iter_mut().zip(rhs.0) {
            *a -= b;
        }
    }
}

impl<const N: usize> Mul<f64> for StateVector<N> {
    type Output = Self;
    #[inline]
    fn mul(mut self, s: f64) -> Self {
        for a in self.0.iter_mut() {
            *a *= s;
        }
        self
    }
}

impl<const N: usize> Mul<StateVector<N>> for f64 {
    type Output = StateVector<N>;
    #[inline]
    fn mul(self, v: StateVector<N>) -> StateVector<N> {
        v * self
    }
}

impl<const N: usize> Neg for StateVector<N> {
    type Output = Self;
    #[inline]
    fn neg(self) -> Self {
        self * -1.0
    }
}

/// Primitive variables with the derived sound speed. `v` is zero in 1-D.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PrimitiveState {
    pub rho: f64,
    pub u: f64,
    pub v: f64,
    pub p: f64,
    pub c: f64,
}

impl PrimitiveState {
    /// Builds a primitive state, deriving the sound speed.
    pub fn new(rho: f64, u: f64, v: f64, p: f64, gas: GasParams) -> Result<Self> {
        if !(rho > 0.0) {
            return Err(SolverError::NonPositiveDensity(rho));
        }
        if !(p > 0.0) {
            return Err(SolverError::NonPositivePressure(p));
        }
        Ok(Self {
            rho,
            u,
            v,
            p,
            c: (gas.gamma() * p / rho).sqrt(),
        })
    }

    /// Velocity component along `axis`.
    #[inline]
    pub fn normal_velocity(&self, axis: Axis) -> f64 {
        match axis {
            Axis::X => self.u,
            Axis::Y => self.v,
        }
    }
}

#[inline]
pub fn cons_to_prim<const N: usize>(
    state: &ConservedState<N>,
    gas: GasParams,
) -> Result<PrimitiveState> {
    let rho = state.rho();
    if !(rho > 0.0) {
        return Err(SolverError::NonPositiveDensity(rho));
    }
    let u = state.mx() / rho;
    let v = state.my() / rho;
    let p = (gas.gamma() - 1.0) * (state.energy() - 0.5 * rho * (u * u + v * v));
    if !(p > 0.0) {
        return Err(SolverError::NonPositivePressure(p));
    }
    Ok(PrimitiveState {
        rho,
        u,
        v,
        p,
        c: (gas.gamma() * p / rho).sqrt(),
    })
}

/// Inverse of [`cons_to_prim`]. For `N = 3` the `v` component is ignored.
#[inline]
pub fn prim_to_cons<const N: usize>(w: &PrimitiveState, gas: GasParams) -> ConservedState<N> {
    let v = if N == 4 { w.v } else { 0.0 };
    let mut out = [0.0; N];
    out[0] = w.rho;
    out[1] = w.rho * w.u;
    if N == 4 {
        out[2] = w.rho * v;
    }
    out[N - 1] = w.p / (gas.gamma() - 1.0) + 0.5 * w.rho * (w.u * w.u + v * v);
    StateVector(out)
}

/// Physical flux `F(U)` (axis X) or `G(U)` (axis Y).
#[inline]
pub fn exact_flux<const N: usize>(
    state: &ConservedState<N>,
    axis: Axis,
    gas: GasParams,
) -> Result<FluxVector<N>> {
    axis.check::<N>()?;
    let w = cons_to_prim(state, gas)?;
    Ok(flux_from_parts(state, &w, axis))
}

/// Physical flux from a conserved state and its already-derived primitives.
#[inline]
pub(crate) fn flux_from_parts<const N: usize>(
    state: &ConservedState<N>,
    w: &PrimitiveState,
    axis: Axis,
) -> FluxVector<N> {
    let q = w.normal_velocity(axis);
    let mut f = *state * q;
    f[axis.momentum_index()] += w.p;
    f[N - 1] += q * w.p;
    f
}

/// Largest `|u| + c` and `|v| + c` over a set of states.
pub(crate) fn signal_speeds(w: &PrimitiveState) -> (f64, f64) {
    (w.u.abs() + w.c, w.v.abs() + w.c)
}
