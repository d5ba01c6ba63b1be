//! Polynomial zeros by simultaneous Aberth–Ehrlich iteration, zero counting
//! measures, Kolmogorov distances and spurious pair detection.

mod froissart;
mod measure;

pub use froissart::{froissart_pairs, froissart_triplets, LimitPiece, LimitSet, Triplet, ZeroPair};
pub use measure::{counting_measure, kolmogorov_distance, DensityRef, EmpiricalMeasure, KsReport};

use crate::arith::{abs_f64, to_c64, Field, Poly};
use num_complex::Complex64;
use rug::{Assign, Complex, Float};

pub const ANGLE_OFFSET: f64 = 0.31;
pub const MAX_SWEEPS: usize = 500;
/// Precision of the repulsion sums; the fixed point does not depend on it.
const SUM_BITS: u32 = 128;

#[derive(Clone, Debug)]
pub struct ZeroSet {
    pub roots: Vec<Complex>,
    /// log10 of `|p(z)| / sum |a_k| |z|^k`.
    pub residual_log10: Vec<f64>,
    /// log10 of the last correction, relative to `max(1, |z|)`.
    pub correction_log10: Vec<f64>,
    pub converged: Vec<bool>,
    pub sweeps: usize,
}

impl ZeroSet {
    pub fn len(&self) -> usize {
        self.roots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }

    pub fn all_converged(&self) -> bool {
        self.converged.iter().all(|&c| c)
    }

    pub fn to_c64(&self) -> Vec<Complex64> {
        self.roots.iter().map(to_c64).collect()
    }

    pub fn max_residual_log10(&self) -> f64 {
        self.residual_log10.iter().cloned().fold(f64::NEG_INFINITY, f64::max)
    }
}

/// Realness test used for zero distributions: `|Im z| < 1e-8 (1 + |z|)`.
pub fn is_real_root(z: Complex64) -> bool {
    z.im.abs() < 1e-8 * (1.0 + z.norm())
}

/// The positive root of `|a_d| x^d = sum_{k<d} |a_k| x^k`, in log2.
fn cauchy_radius_log2(mags: &[f64]) -> f64 {
    let d = mags.len() - 1;
    let lead = mags[d];
    let h = |t: f64| {
        let terms: Vec<f64> = (0..d).filter(|&k| mags[k].is_finite()).map(|k| mags[k] + k as f64 * t).collect();
        let m = terms.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
        if !m.is_finite() {
            return f64::INFINITY;
        }
        let s: f64 = terms.iter().map(|x| (x - m).exp2()).sum();
        lead + d as f64 * t - (m + s.log2())
    };
    let (mut lo, mut hi) = (-1.0, 1.0);
    while h(lo) > 0.0 {
        lo *= 2.0;
    }
    while h(hi) < 0.0 {
        hi *= 2.0;
    }
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if h(mid) < 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
        if hi - lo < 1e-12 {
            break;
        }
    }
    hi
}

/// `|p(z)| / sum |a_k||z|^k`, in log10.
pub fn relative_residual_log10(p: &Poly, z: &Complex) -> f64 {
    residual_with(p, &abs_coeffs(p), z)
}

fn abs_coeffs(p: &Poly) -> Vec<Float> {
    p.coeffs().iter().map(|c| Float::with_val(64, c.abs_ref())).collect()
}

fn residual_with(p: &Poly, abs: &[Float], z: &Complex) -> f64 {
    let v = p.eval(z);
    let az = Float::with_val(64, z.abs_ref());
    let mut acc = Float::new(64);
    for c in abs.iter().rev() {
        acc *= &az;
        acc += c;
    }
    if acc.is_zero() {
        return f64::NEG_INFINITY;
    }
    Field::mag(&v).log10() - acc.log2().to_f64() * std::f64::consts::LOG10_2
}

/// All zeros of `p` at the precision of its coefficients. Exact zeros at
/// the origin are split off first. The iteration starts on the Cauchy
/// circle with angles `2 pi k / d + 0.31` and stops once every relative
/// correction is below `10^(-P/2)` or after 500 sweeps.
pub fn find_roots(p: &Poly) -> ZeroSet {
    let p = p.clone().trimmed();
    let bits = p.bits();
    let prec = p.prec();
    let mut roots = Vec::new();
    let lowest = p.coeffs().iter().position(|c| !c.is_zero()).unwrap_or(0);
    let q = Poly::new(p.coeffs()[lowest..].to_vec());
    for _ in 0..lowest {
        roots.push(Complex::new(bits));
    }
    let d = q.degree().unwrap_or(0);
    let mut out = ZeroSet {
        residual_log10: vec![f64::NEG_INFINITY; lowest],
        correction_log10: vec![f64::NEG_INFINITY; lowest],
        converged: vec![true; lowest],
        roots,
        sweeps: 0,
    };
    if d == 0 {
        return out;
    }
    let mags: Vec<f64> = q.coeffs().iter().map(|c| Field::mag(c).0).collect();
    let r = cauchy_radius_log2(&mags);
    let radius = Float::with_val(bits, r).exp2();
    let pi2 = Float::with_val(bits, rug::float::Constant::Pi) * 2u32;
    let mut z: Vec<Complex> = (0..d)
        .map(|k| {
            let th = Float::with_val(bits, &pi2 * k as u32) / d as u32 + ANGLE_OFFSET;
            let (s, c) = th.sin_cos(Float::new(bits));
            Complex::with_val(bits, (Float::with_val(bits, &radius * &c), Float::with_val(bits, &radius * &s)))
        })
        .collect();
    let mut sweeps = aberth_f64(&q, &mut z);
    // then multiprecision stages, each seeding the next at doubled precision
    let mut ladder = Vec::new();
    let mut s = 64u32;
    while s < prec.get() {
        ladder.push(s);
        s *= 2;
    }
    ladder.push(prec.get());
    let mut done = vec![false; d];
    let mut corr = vec![f64::INFINITY; d];
    for (i, &digits) in ladder.iter().enumerate() {
        let last = i + 1 == ladder.len();
        let sp = crate::arith::Prec::digits(digits);
        let qs = if last { q.clone() } else { q.with_prec(sp) };
        let mut zs: Vec<Complex> = z.iter().map(|x| Complex::with_val(sp.bits(), x)).collect();
        let st = aberth_stage(&qs, &mut zs, -(digits as f64) / 2.0, !last, if i == 0 && sweeps == 0 { MAX_SWEEPS } else { 30 }, MAX_SWEEPS - sweeps.min(MAX_SWEEPS - 1));
        sweeps += st.0;
        if last {
            done = st.1;
            corr = st.2;
        }
        z = zs.into_iter().map(|x| Complex::with_val(bits, x)).collect();
    }
    for (k, zk) in z.into_iter().enumerate() {
        out.residual_log10.push(relative_residual_log10(&q, &zk));
        out.correction_log10.push(corr[k]);
        out.converged.push(done[k]);
        out.roots.push(zk);
    }
    out.sweeps = sweeps;
    out
}

/// Newton ratio `p/p'` and relative residual in double precision, through
/// the reversed polynomial when `|z| > 1` so that nothing overflows.
fn newton_f64(a: &[Complex64], abs: &[f64], z: Complex64) -> (Complex64, f64) {
    let d = a.len() - 1;
    let zero = Complex64::new(0.0, 0.0);
    if z.norm() <= 1.0 {
        let (mut p, mut dp, mut s) = (zero, zero, 0.0);
        let r = z.norm();
        for k in (0..=d).rev() {
            dp = dp * z + p;
            p = p * z + a[k];
            s = s * r + abs[k];
        }
        (p / dp, p.norm() / s)
    } else {
        let w = z.inv();
        let r = w.norm();
        let (mut p, mut dp, mut s) = (zero, zero, 0.0);
        for k in 0..=d {
            dp = dp * w + p;
            p = p * w + a[k];
            s = s * r + abs[k];
        }
        (z / (d as f64 - w * dp / p), p.norm() / s)
    }
}

/// Approach phase in double precision on max-scaled coefficients. Skipped
/// (returns 0) when the coefficients do not fit the double range.
fn aberth_f64(q: &Poly, z: &mut [Complex]) -> usize {
    let mags: Vec<f64> = q.coeffs().iter().map(|c| Field::mag(c).0).collect();
    let top = mags.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
    let lead = mags[mags.len() - 1];
    if top - lead > 900.0 {
        return 0;
    }
    let a: Vec<Complex64> = q
        .coeffs()
        .iter()
        .map(|c| {
            let re = Float::with_val(64, c.real() >> top as i32).to_f64();
            let im = Float::with_val(64, c.imag() >> top as i32).to_f64();
            Complex64::new(re, im)
        })
        .collect();
    let abs: Vec<f64> = a.iter().map(|c| c.norm()).collect();
    let mut x: Vec<Complex64> = z.iter().map(to_c64).collect();
    if x.iter().any(|v| !v.re.is_finite() || !v.im.is_finite()) {
        return 0;
    }
    let d = x.len();
    let mut done = vec![false; d];
    let mut sweeps = 0;
    while sweeps < MAX_SWEEPS && done.iter().any(|&v| !v) {
        sweeps += 1;
        let mut next = x.clone();
        for k in 0..d {
            if done[k] {
                continue;
            }
            let (n, res) = newton_f64(&a, &abs, x[k]);
            if !n.re.is_finite() || !n.im.is_finite() {
                done[k] = true;
                continue;
            }
            let s: Complex64 = (0..d).filter(|&j| j != k).map(|j| (x[k] - x[j]).inv()).sum();
            let w = n / (1.0 - n * s);
            if w.re.is_finite() && w.im.is_finite() {
                next[k] -= w;
            }
            if res < 1e-13 || w.norm() < 1e-15 * x[k].norm().max(1.0) {
                done[k] = true;
            }
        }
        x = next;
    }
    for (t, v) in z.iter_mut().zip(&x) {
        let bits = t.prec().0;
        *t = Complex::with_val(bits, (v.re, v.im));
    }
    sweeps
}

/// Synchronous Aberth sweeps until every relative correction is below
/// `10^tol`. Below full precision (`stall`), a root also stops once its
/// residual reaches rounding level, and the stage ends when nothing has
/// improved for `patience` sweeps. Returns sweeps, convergence flags and last corrections.
fn aberth_stage(q: &Poly, z: &mut [Complex], tol: f64, stall: bool, patience: usize, max: usize) -> (usize, Vec<bool>, Vec<f64>) {
    let d = z.len();
    let bits = q.bits();
    let mut done = vec![false; d];
    let mut corr = vec![f64::INFINITY; d];
    let mut diff = Complex::new(bits);
    let mut lo = Complex::new(SUM_BITS);
    let mut sweeps = 0;
    let mut best = f64::INFINITY;
    let mut since_best = 0;
    let mut done_count = 0;
    let floor = -(q.prec().get() as f64) + 6.0;
    let abs = abs_coeffs(q);
    while sweeps < max && done.iter().any(|&x| !x) {
        sweeps += 1;
        let mut next = z.to_vec();
        for k in 0..d {
            if done[k] {
                continue;
            }
            let (v, dv) = q.eval_with_derivative(&z[k]);
            if v.is_zero() {
                done[k] = true;
                corr[k] = f64::NEG_INFINITY;
                continue;
            }
            let mut s = Complex::new(SUM_BITS);
            for j in 0..d {
                if j != k {
                    diff.assign(&z[k] - &z[j]);
                    lo.assign(&diff);
                    if !lo.is_zero() {
                        lo.recip_mut();
                        s += &lo;
                    }
                }
            }
            let w = if dv.is_zero() {
                // push off a critical point
                Complex::with_val(bits, &v * 0.5) / (Complex::with_val(bits, &v).abs() + 1u32)
            } else {
                let newton = Complex::with_val(bits, &v / &dv);
                let den = Complex::with_val(bits, 1) - Complex::with_val(bits, &newton * &s);
                newton / den
            };
            let scale = 1f64.max(abs_f64(&z[k]));
            let c = Field::mag(&w).log10() - scale.log10();
            corr[k] = c;
            next[k] -= &w;
            if c < tol || (stall && c < floor / 4.0 && residual_with(q, &abs, &next[k]) < floor) {
                done[k] = true;
            }
        }
        z.clone_from_slice(&next);
        let worst = (0..d).filter(|&k| !done[k]).map(|k| corr[k]).fold(f64::NEG_INFINITY, f64::max);
        let now_done = done.iter().filter(|&&x| x).count();
        if worst < best - 1.0 || now_done > done_count {
            done_count = now_done;
            best = worst;
            since_best = 0;
        } else {
            since_best += 1;
        }
        if stall && since_best >= patience {
            break;
        }
    }
    (sweeps, done, corr)
}

/// Eigenvalues of the companion matrix in double precision. Oracle for
/// low degrees only.
pub fn companion_roots(p: &[Complex64]) -> Vec<Complex64> {
    let d = p.iter().rposition(|c| *c != Complex64::new(0.0, 0.0)).unwrap_or(0);
    if d == 0 {
        return Vec::new();
    }
    let m = nalgebra::DMatrix::from_fn(d, d, |i, j| {
        if j == d - 1 {
            -p[i] / p[d]
        } else if i == j + 1 {
            Complex64::new(1.0, 0.0)
        } else {
            Complex64::new(0.0, 0.0)
        }
    });
    nalgebra::Schur::new(m).eigenvalues().map(|v| v.iter().cloned().collect()).unwrap_or_default()
}

#[cfg(test)]
mod tests;
