//! Toro-Vazquez flux-splitting schemes of orders 1, 2, 3 and 5 for the 1-D
//! and 2-D Euler equations, with CU (HLL) and HLLC comparison fluxes.
//!
//! States are const-generic over the number of conserved variables: `N = 3`
//! in one dimension, `N = 4` in two.

pub mod alt_flux;
pub mod correction;
pub mod eos;
pub mod error;
pub mod harness;
pub mod problems;
pub mod reconstruction;
pub mod spatial;
pub mod time;
pub mod tv_flux;

mod par;

use std::fmt;
use std::str::FromStr;

pub use eos::{
    cons_to_prim, exact_flux, prim_to_cons, Axis, ConservedState, FluxVector, GasParams,
    PrimitiveState, StateVector,
};
pub use error::{Result, SolverError};
pub use par::{configure_threads, Execution};
pub use reconstruction::WenoParams;

/// Formal order of accuracy of a scheme.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Order {
    First,
    Second,
    Third,
    Fifth,
}

impl Order {
    pub const ALL: [Order; 4] = [Order::First, Order::Second, Order::Third, Order::Fifth];

    pub fn as_u8(self) -> u8 {
        match self {
            Order::First => 1,
            Order::Second => 2,
            Order::Third => 3,
            Order::Fifth => 5,
        }
    }

    pub fn from_u8(order: u8) -> Result<Self> {
        match order {
            1 => Ok(Order::First),
            2 => Ok(Order::Second),
            3 => Ok(Order::Third),
            5 => Ok(Order::Fifth),
            other => Err(SolverError::UnsupportedOrder(other)),
        }
    }

    /// Orders 3 and 5 evolve point values with A-WENO corrections.
    pub fn is_awe(self) -> bool {
        matches!(self, Order::Third | Order::Fifth)
    }
}

impl fmt::Display for Order {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_u8())
    }
}

/// Numerical flux used at the interfaces.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub enum FluxFamily {
    #[default]
    Tv,
    CuHll,
    Hllc,
}

impl fmt::Display for FluxFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            FluxFamily::Tv => "tv",
            FluxFamily::CuHll => "cu",
            FluxFamily::Hllc => "hllc",
        })
    }
}

impl FromStr for FluxFamily {
    type Err = SolverError;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "tv" => Ok(FluxFamily::Tv),
            "cu" | "hll" | "cu-hll" | "cu_hll" => Ok(FluxFamily::CuHll),
            "hllc" => Ok(FluxFamily::Hllc),
            _ => Err(SolverError::InvalidConfig(format!("unknown flux family `{s}`"))),
        }
    }
}

/// Everything the spatial operator needs besides the field itself.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SchemeConfig {
    pub order: Order,
    pub flux: FluxFamily,
    pub weno: WenoParams,
    pub cfl: f64,
    pub accuracy_mode: bool,
    /// See [`time::TimeControl::accuracy_length`].
    pub accuracy_length: f64,
}

impl SchemeConfig {
    pub fn new(order: Order, flux: FluxFamily) -> Self {
        Self {
            order,
            flux,
            weno: WenoParams::default(),
            cfl: 0.45,
            accuracy_mode: false,
            accuracy_length: 1.0,
        }
    }

    pub fn validate(&self) -> Result<()> {
        self.weno.validate()?;
        if !(self.cfl > 0.0 && self.cfl < 1.0) {
            return Err(SolverError::InvalidConfig(format!("cfl = {}", self.cfl)));
        }
        if !(self.accuracy_length > 0.0 && self.accuracy_length.is_finite()) {
            return Err(SolverError::InvalidConfig(format!(
                "accuracy length = {}",
                self.accuracy_length
            )));
        }
        Ok(())
    }
}
