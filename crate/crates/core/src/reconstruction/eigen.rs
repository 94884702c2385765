//! Eigen-decomposition of the directional Euler flux Jacobian.

use crate::eos::{cons_to_prim, Axis, ConservedState, GasParams, StateVector};
use crate::error::Result;

/// Right eigenvectors (columns of `r`), the matching left eigenvectors (rows
/// of `r_inv`) and the eigenvalues `(q-c, q, [q,] q+c)`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Eigensystem<const N: usize> {
    pub r: [[f64; N]; N],
    pub r_inv: [[f64; N]; N],
    pub lambdas: [f64; N],
}

impl<const N: usize> Eigensystem<N> {
    /// Characteristic variables `R^{-1} u`.
    #[inline]
    pub fn to_characteristic(&self, u: &StateVector<N>) -> StateVector<N> {
        StateVector(mat_vec(&self.r_inv, &u.0))
    }

    /// Conserved variables `R g`.
    #[inline]
    pub fn from_characteristic(&self, g: &StateVector<N>) -> StateVector<N> {
        StateVector(mat_vec(&self.r, &g.0))
    }
}

#[inline]
fn mat_vec<const N: usize>(m: &[[f64; N]; N], v: &[f64; N]) -> [f64; N] {
    let mut out = [0.0; N];
    for (o, row) in out.iter_mut().zip(m) {
        *o = row.iter().zip(v).map(|(a, b)| a * b).sum();
    }
    out
}

/// Analytic eigensystem of `dF/dU` (axis X) or `dG/dU` (axis Y) at `avg`.
///
/// In 2-D the tangential velocity is carried by its own (shear) field.
pub fn euler_eigensystem<const N: usize>(
    avg: &ConservedState<N>,
    axis: Axis,
    gas: GasParams,
) -> Result<Eigensystem<N>> {
    axis.check::<N>()?;
    let w = cons_to_prim(avg, gas)?;
    let g = gas.gamma();
    let c = w.c;
    let vel = [w.u, w.v];
    let dims = N - 2;
    let kin = 0.5 * (w.u * w.u + w.v * w.v);
    let h = (avg.energy() + w.p) / w.rho;
    let k = axis.momentum_index() - 1;
    let q = vel[k];
    let b1 = (g - 1.0) / (c * c);
    let b2 = b1 * kin;
    let last = N - 1;

    let mut r = [[0.0; N]; N];
    let mut r_inv = [[0.0; N]; N];
    let mut lambdas = [q; N];
    lambdas[0] = q - c;
    lambdas[last] = q + c;

    // acoustic and entropy columns
    r[0][0] = 1.0;
    r[0][1] = 1.0;
    r[0][last] = 1.0;
    for d in 0..dims {
        let n = if d == k { 1.0 } else { 0.0 };
        r[1 + d][0] = vel[d] - c * n;
        r[1 + d][1] = vel[d];
        r[1 + d][last] = vel[d] + c * n;
    }
    r[last][0] = h - q * c;
    r[last][1] = kin;
    r[last][last] = h + q * c;

    r_inv[0][0] = 0.5 * (b2 + q / c);
    r_inv[1][0] = 1.0 - b2;
    r_inv[last][0] = 0.5 * (b2 - q / c);
    for d in 0..dims {
        let n = if d == k { 1.0 } else { 0.0 };
        r_inv[0][1 + d] = 0.5 * (-b1 * vel[d] - n / c);
        r_inv[1][1 + d] = b1 * vel[d];
        r_inv[last][1 + d] = 0.5 * (-b1 * vel[d] + n / c);
    }
    r_inv[0][last] = 0.5 * b1;
    r_inv[1][last] = -b1;
    r_inv[last][last] = 0.5 * b1;

    if N == 4 {
        // shear wave: tangential momentum slot t
        let t = 1 - k;
        r[1 + t][2] = 1.0;
        r[last][2] = vel[t];
        r_inv[2][0] = -vel[t];
        r_inv[2][1 + t] = 1.0;
    }

    Ok(Eigensystem { r, r_inv, lambdas })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::eos::{exact_flux, prim_to_cons, PrimitiveState};
    use proptest::prelude::*;

    fn mat_mul<const N: usize>(a: &[[f64; N]; N], b: &[[f64; N]; N]) -> [[f64; N]; N] {
        let mut out = [[0.0; N]; N];
        for i in 0..N {
            for j in 0..N {
                out[i][j] = (0..N).map(|k| a[i][k] * b[k][j]).sum();
            }
        }
        out
    }

    /// Finite-difference Jacobian of the physical flux, exact up to round-off.
    ///
    /// Along a momentum or energy direction the flux is a cubic polynomial, so
    /// a fourth-order central difference has no truncation error. Along the
    /// density direction `rho^2 F` is quadratic in `rho`, so a two-point
    /// difference of that product is exact as well.
    fn fd_jacobian<const N: usize>(u: &StateVector<N>, axis: Axis, g: GasParams) -> [[f64; N]; N] {
        let flux = |v: &StateVector<N>| exact_flux(v, axis, g).unwrap();
        let kin = (1..N - 1).map(|k| u[k] * u[k]).sum::<f64>() / (2.0 * u[0]);
        let rho_e = u[N - 1] - kin;
        let mut jac = [[0.0; N]; N];
        for j in 0..N {
            // steps small enough to keep the pressure positive
            let h = match j {
                0 => 0.1 * u[0] * rho_e / (rho_e + kin),
                _ if j == N - 1 => 0.25 * rho_e,
                _ => 0.05 * (u[0] * rho_e).sqrt(),
            };
            let shifted = |s: f64| {
                let mut v = *u;
                v[j] += s * h;
                v
            };
            let d = if j == 0 {
                let p = |s: f64| {
                    let v = shifted(s);
                    flux(&v) * (v[0] * v[0])
                };
                let dp = (p(1.0) - p(-1.0)) * (0.5 / h);
                dp * (1.0 / (u[0] * u[0])) - flux(u) * (2.0 / u[0])
            } else {
                let f = |s: f64| flux(&shifted(s));
                ((f(1.0) - f(-1.0)) * (2.0 / 3.0) - (f(2.0) - f(-2.0)) * (1.0 / 12.0)) * (1.0 / h)
            };
            for i in 0..N {
                jac[i][j] = d[i];
            }
        }
        jac
    }

    fn diag_residual<const N: usize>(u: &StateVector<N>, axis: Axis, g: GasParams) -> f64 {
        let es = euler_eigensystem(u, axis, g).unwrap();
        let a = fd_jacobian(u, axis, g);
        let d = mat_mul(&es.r_inv, &mat_mul(&a, &es.r));
        let mut worst = 0.0_f64;
        for i in 0..N {
            for j in 0..N {
                let target = if i == j { es.lambdas[i] } else { 0.0 };
                worst = worst.max((d[i][j] - target).abs());
            }
        }
        worst
    }

    #[test]
    fn rest_state_eigenvalues() {
        let g = GasParams::default();
        let u = StateVector([1.0, 0.0, 2.5]);
        let es = euler_eigensystem(&u, Axis::X, g).unwrap();
        let c = 1.4_f64.sqrt();
        assert!((es.lambdas[0] + c).abs() < 1e-15);
        assert_eq!(es.lambdas[1], 0.0);
        assert!((es.lambdas[2] - c).abs() < 1e-15);
    }

    #[test]
    fn inverse_pair_on_fixed_states() {
        let g = GasParams::default();
        let w = PrimitiveState::new(1.3, 0.4, -0.9, 0.7, g).unwrap();
        let u4 = prim_to_cons::<4>(&w, g);
        for axis in [Axis::X, Axis::Y] {
            let es = euler_eigensystem(&u4, axis, g).unwrap();
            let id = mat_mul(&es.r, &es.r_inv);
            for i in 0..4 {
                for j in 0..4 {
                    let target = if i == j { 1.0 } else { 0.0 };
                    assert!((id[i][j] - target).abs() < 1e-12);
                }
            }
            assert!(diag_residual(&u4, axis, g) < 1e-12);
        }
        let u3 = prim_to_cons::<3>(&w, g);
        assert!(diag_residual(&u3, Axis::X, g) < 1e-12);
    }

    proptest! {
        #[test]
        fn diagonalizes_fd_jacobian(rho in 0.3..3.0, u in -2.0..2.0, v in -2.0..2.0, p in 0.3..3.0) {
            let g = GasParams::default();
            let w = PrimitiveState::new(rho, u, v, p, g).unwrap();
            let s4 = prim_to_cons::<4>(&w, g);
            let s3 = prim_to_cons::<3>(&w, g);
            prop_assert!(diag_residual(&s4, Axis::X, g) < 1e-12);
            prop_assert!(diag_residual(&s4, Axis::Y, g) < 1e-12);
            prop_assert!(diag_residual(&s3, Axis::X, g) < 1e-12);
        }

        #[test]
        fn characteristic_round_trip(rho in 0.3..3.0, u in -2.0..2.0, v in -2.0..2.0, p in 0.3..3.0,
                                     x in prop::array::uniform4(-5.0..5.0f64)) {
            let g = GasParams::default();
            let w = PrimitiveState::new(rho, u, v, p, g).unwrap();
            let es = euler_eigensystem(&prim_to_cons::<4>(&w, g), Axis::Y, g).unwrap();
            let x = StateVector(x);
            let back = es.from_characteristic(&es.to_characteristic(&x));
            for i in 0..4 {
                prop_assert!((back[i] - x[i]).abs() <= 1e-12);
            }
        }
    }
}
