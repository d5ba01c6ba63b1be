//! Tanh-sinh quadrature. Integrands receive the node together with its
//! exact distances to both ends, so endpoint singularities such as
//! `(x - a)^(-2/3)` keep full relative accuracy.

use crate::arith::Prec;
use rug::float::Constant;
use rug::{Complex, Float};
use std::f64::consts::PI;

const T_MAX: f64 = 6.6;

#[derive(Clone, Copy, Debug)]
pub struct Estimate {
    pub value: f64,
    pub error: f64,
}

/// `int_a^b f(x) dx` with `f(x, x - a, b - x)`.
pub fn integrate<F: FnMut(f64, f64, f64) -> f64>(a: f64, b: f64, tol: f64, mut f: F) -> Estimate {
    let len = b - a;
    let mut node = |t: f64| -> f64 {
        let s = PI * t.sinh();
        // u = 1/(1+e^{-s}), 1-u = 1/(1+e^{s}) without cancellation
        let (dl, dr, w) = if s >= 0.0 {
            let e = (-s).exp();
            (len / (1.0 + e), len * e / (1.0 + e), e / ((1.0 + e) * (1.0 + e)))
        } else {
            let e = s.exp();
            (len * e / (1.0 + e), len / (1.0 + e), e / ((1.0 + e) * (1.0 + e)))
        };
        if dl <= 0.0 || dr <= 0.0 || !w.is_normal() {
            return 0.0;
        }
        let x = if dl < dr { a + dl } else { b - dr };
        let v = f(x, dl, dr);
        let r = v * len * PI * t.cosh() * w;
        if r.is_finite() {
            r
        } else {
            0.0
        }
    };
    let mut h = 1.0;
    let mut sum = node(0.0);
    let mut k = 1;
    while k as f64 <= T_MAX {
        sum += node(k as f64) + node(-(k as f64));
        k += 1;
    }
    let mut est = sum * h;
    let mut err = f64::INFINITY;
    for level in 1..=12 {
        h /= 2.0;
        let mut add = 0.0;
        let mut t = h;
        while t <= T_MAX {
            add += node(t) + node(-t);
            t += 2.0 * h;
        }
        sum += add;
        let new = sum * h;
        err = (new - est).abs();
        est = new;
        if level >= 3 && err <= tol * est.abs().max(1e-300) {
            break;
        }
    }
    Estimate { value: est, error: err }
}

/// `int_a^inf f(x) dx` with `f(x, x - a)`, via `x = a + (1-u)/u`.
pub fn integrate_upper<F: FnMut(f64, f64) -> f64>(a: f64, tol: f64, mut f: F) -> Estimate {
    integrate(0.0, 1.0, tol, |_, u, v| {
        let d = v / u;
        f(a + d, d) / (u * u)
    })
}

/// `int_{-inf}^b f(x) dx` with `f(x, b - x)`.
pub fn integrate_lower<F: FnMut(f64, f64) -> f64>(b: f64, tol: f64, mut f: F) -> Estimate {
    integrate_upper(-b, tol, |y, d| f(-y, d))
}

/// Multiprecision tanh-sinh on `[0, 1]` for a vector of complex integrands
/// sharing nodes. `f(u, 1-u)` returns every component. Levels are refined
/// until all components change by less than `10^(-digits)` times the
/// largest component.
pub fn integrate_mp<F: FnMut(&Float, &Float) -> Vec<Complex>>(prec: Prec, digits: u32, max_level: u32, mut f: F) -> Vec<Complex> {
    let bits = prec.bits();
    let pi = Float::with_val(bits, Constant::Pi);
    let ln10 = std::f64::consts::LN_10;
    let tmax = ((3.0 * digits as f64 + 10.0) * ln10 / PI).asinh();
    let mut eval = |t: &Float, acc: &mut Vec<Complex>| {
        let s = Float::with_val(bits, t.sinh_ref()) * &pi;
        let e = Float::with_val(bits, -s.clone().abs()).exp();
        let one_e = Float::with_val(bits, 1 + &e);
        let big = Float::with_val(bits, 1 / &one_e);
        let small = Float::with_val(bits, &e / &one_e);
        if small.is_zero() {
            return;
        }
        let w = Float::with_val(bits, &big * &small) * t.clone().cosh() * &pi;
        let vals = if s.is_sign_negative() { f(&small, &big) } else { f(&big, &small) };
        if acc.is_empty() {
            acc.extend(vals.iter().map(|_| Complex::new(bits)));
        }
        for (a, v) in acc.iter_mut().zip(vals) {
            *a += v * &w;
        }
    };
    let mut sum: Vec<Complex> = Vec::new();
    eval(&Float::new(bits), &mut sum);
    let mut k = 1;
    while (k as f64) <= tmax {
        eval(&Float::with_val(bits, k), &mut sum);
        eval(&Float::with_val(bits, -k), &mut sum);
        k += 1;
    }
    let mut h = Float::with_val(bits, 1);
    let mut est: Vec<Complex> = sum.iter().map(|s| Complex::with_val(bits, s * &h)).collect();
    for level in 1..=max_level {
        h /= 2u32;
        let step = 1u64 << level;
        let mut j = 1u64;
        loop {
            let t = Float::with_val(bits, j) / step;
            if t.to_f64() > tmax {
                break;
            }
            eval(&t, &mut sum);
            eval(&(-t), &mut sum);
            j += 2;
        }
        let new: Vec<Complex> = sum.iter().map(|s| Complex::with_val(bits, s * &h)).collect();
        let scale = new.iter().map(crate::arith::abs_f64).fold(0.0, f64::max);
        let diff = new
            .iter()
            .zip(&est)
            .map(|(a, b)| crate::arith::dist_f64(a, b))
            .fold(0.0, f64::max);
        est = new;
        if level >= 3 && (diff <= scale * 10f64.powi(-(digits as i32)) || scale == 0.0) {
            break;
        }
    }
    est
}
