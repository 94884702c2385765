//! Scalar WENO-type interpolants at `x_{j+1/2}`.
//!
//! Left-biased values take the stencil in natural order. Right-biased values
//! take the same stencil and apply the mirror-image formulas written out
//! explicitly below.

use super::WenoParams;

const D3: [f64; 2] = [0.25, 0.75];
const D5: [f64; 3] = [1.0 / 16.0, 5.0 / 8.0, 5.0 / 16.0];

#[inline]
fn sq(x: f64) -> f64 {
    x * x
}

#[inline]
fn pow(x: f64, p: f64) -> f64 {
    if p == 1.0 {
        x
    } else {
        x.powf(p)
    }
}

/// Nonlinear weights of the third-order interpolant. `tau` is already raised
/// to the power `p`.
#[inline]
fn weights3(beta: [f64; 2], tau: f64, eps: f64) -> [f64; 2] {
    let a0 = D3[0] * (1.0 + tau / (beta[0] + eps));
    let a1 = D3[1] * (1.0 + tau / (beta[1] + eps));
    let s = 1.0 / (a0 + a1);
    [a0 * s, a1 * s]
}

/// Nonlinear WENO-Z weights; `alpha` raises the ratio to the power `p`.
#[inline(always)]
fn weights5_with(beta: [f64; 3], tau: f64, eps: f64, alpha: impl Fn(f64) -> f64) -> [f64; 3] {
    let a0 = D5[0] * (1.0 + alpha(tau / (beta[0] + eps)));
    let a1 = D5[1] * (1.0 + alpha(tau / (beta[1] + eps)));
    let a2 = D5[2] * (1.0 + alpha(tau / (beta[2] + eps)));
    let s = 1.0 / (a0 + a1 + a2);
    [a0 * s, a1 * s, a2 * s]
}

#[inline]
fn weights5(beta: [f64; 3], tau: f64, eps: f64, p: f64) -> [f64; 3] {
    weights5_with(beta, tau, eps, |r| pow(r, p))
}

/// Linear candidates and smoothness data of the left-biased third-order
/// interpolant on `w = (w_{j-1}, w_j, w_{j+1}, w_{j+2})`.
#[inline]
fn parts3_left(w: &[f64; 4]) -> ([f64; 2], [f64; 2], f64) {
    let [wm, w0, w1, w2] = *w;
    let cand = [-0.5 * wm + 1.5 * w0, 0.5 * w0 + 0.5 * w1];
    let beta = [sq(wm - w0), sq(w0 - w1)];
    let b2 = 13.0 / 12.0 * sq(wm - 2.0 * w0 + w1) + 0.25 * sq(w1 - wm);
    let b3 = 13.0 / 12.0 * sq(w0 - 2.0 * w1 + w2) + 0.25 * sq(3.0 * w0 - 4.0 * w1 + w2);
    (cand, beta, (b2 - b3).abs())
}

#[inline]
fn parts3_right(w: &[f64; 4]) -> ([f64; 2], [f64; 2], f64) {
    let [wm, w0, w1, w2] = *w;
    let cand = [-0.5 * w2 + 1.5 * w1, 0.5 * w1 + 0.5 * w0];
    let beta = [sq(w2 - w1), sq(w1 - w0)];
    let b2 = 13.0 / 12.0 * sq(w2 - 2.0 * w1 + w0) + 0.25 * sq(w0 - w2);
    let b3 = 13.0 / 12.0 * sq(w1 - 2.0 * w0 + wm) + 0.25 * sq(3.0 * w1 - 4.0 * w0 + wm);
    (cand, beta, (b2 - b3).abs())
}

/// Left-biased third-order WENO-type value at `j+1/2` from
/// `(w_{j-1}, w_j, w_{j+1}, w_{j+2})`.
#[inline]
pub fn weno3_face_value(w: &[f64; 4], params: &WenoParams) -> f64 {
    let (cand, beta, tau) = parts3_left(w);
    let om = weights3(beta, pow(tau, params.power3), params.eps);
    om[0] * cand[0] + om[1] * cand[1]
}

/// Right-biased counterpart of [`weno3_face_value`] on the same stencil.
#[inline]
pub fn weno3_face_value_right(w: &[f64; 4], params: &WenoParams) -> f64 {
    let (cand, beta, tau) = parts3_right(w);
    let om = weights3(beta, pow(tau, params.power3), params.eps);
    om[0] * cand[0] + om[1] * cand[1]
}

/// Nonlinear weights of the left-biased third-order interpolant.
pub fn weno3_weights(w: &[f64; 4], params: &WenoParams) -> [f64; 2] {
    let (_, beta, tau) = parts3_left(w);
    weights3(beta, pow(tau, params.power3), params.eps)
}

#[inline]
fn parts5_left(w: &[f64; 6]) -> ([f64; 3], [f64; 3]) {
    let [wm2, wm1, w0, w1, w2, _] = *w;
    let cand = [
        0.375 * wm2 - 1.25 * wm1 + 1.875 * w0,
        -0.125 * wm1 + 0.75 * w0 + 0.375 * w1,
        0.375 * w0 + 0.75 * w1 - 0.125 * w2,
    ];
    let beta = [
        13.0 / 12.0 * sq(wm2 - 2.0 * wm1 + w0) + 0.25 * sq(wm2 - 4.0 * wm1 + 3.0 * w0),
        13.0 / 12.0 * sq(wm1 - 2.0 * w0 + w1) + 0.25 * sq(wm1 - w1),
        13.0 / 12.0 * sq(w0 - 2.0 * w1 + w2) + 0.25 * sq(3.0 * w0 - 4.0 * w1 + w2),
    ];
    (cand, beta)
}

#[inline]
fn parts5_right(w: &[f64; 6]) -> ([f64; 3], [f64; 3]) {
    let [_, wm1, w0, w1, w2, w3] = *w;
    let cand = [
        0.375 * w3 - 1.25 * w2 + 1.875 * w1,
        -0.125 * w2 + 0.75 * w1 + 0.375 * w0,
        0.375 * w1 + 0.75 * w0 - 0.125 * wm1,
    ];
    let beta = [
        13.0 / 12.0 * sq(w3 - 2.0 * w2 + w1) + 0.25 * sq(w3 - 4.0 * w2 + 3.0 * w1),
        13.0 / 12.0 * sq(w2 - 2.0 * w1 + w0) + 0.25 * sq(w2 - w0),
        13.0 / 12.0 * sq(w1 - 2.0 * w0 + wm1) + 0.25 * sq(3.0 * w1 - 4.0 * w0 + wm1),
    ];
    (cand, beta)
}

/// Left-biased fifth-order WENO-Z value at `j+1/2` from
/// `(w_{j-2}, ..., w_{j+3})`; `w_{j+3}` is not used.
#[inline]
pub fn wenoz5_face_value(w: &[f64; 6], params: &WenoParams) -> f64 {
    let (cand, beta) = parts5_left(w);
    let tau = (beta[2] - beta[0]).abs();
    let om = weights5(beta, tau, params.eps, params.power5);
    om[0] * cand[0] + om[1] * cand[1] + om[2] * cand[2]
}

/// Right-biased counterpart of [`wenoz5_face_value`]; `w_{j-2}` is not used.
#[inline]
pub fn wenoz5_face_value_right(w: &[f64; 6], params: &WenoParams) -> f64 {
    let (cand, beta) = parts5_right(w);
    let tau = (beta[2] - beta[0]).abs();
    let om = weights5(beta, tau, params.eps, params.power5);
    om[0] * cand[0] + om[1] * cand[1] + om[2] * cand[2]
}

/// Left- and right-biased values at `j+1/2` in one pass, with the power
/// supplied as a closure so hot loops can use a plain square.
#[inline(always)]
pub(crate) fn wenoz5_pair_with(
    w: &[f64; 6],
    eps: f64,
    alpha: impl Fn(f64) -> f64 + Copy,
) -> (f64, f64) {
    let (cl, bl) = parts5_left(w);
    let ol = weights5_with(bl, (bl[2] - bl[0]).abs(), eps, alpha);
    let (cr, br) = parts5_right(w);
    let or = weights5_with(br, (br[2] - br[0]).abs(), eps, alpha);
    (
        ol[0] * cl[0] + ol[1] * cl[1] + ol[2] * cl[2],
        or[0] * cr[0] + or[1] * cr[1] + or[2] * cr[2],
    )
}

pub fn wenoz5_weights(w: &[f64; 6], params: &WenoParams) -> [f64; 3] {
    let (_, beta) = parts5_left(w);
    weights5(beta, (beta[2] - beta[0]).abs(), params.eps, params.power5)
}
