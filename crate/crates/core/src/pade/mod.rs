//! Classical Padé approximants from Laurent coefficients at infinity,
//! multipoint Padé, J-fractions, and the Jacobi-polynomial oracle.

mod jacobi;
mod jfrac;
mod multipoint;

pub use jacobi::jacobi_oracle;
pub use jfrac::{jfraction_coeffs, JFraction};
pub use multipoint::{multipoint_pade, two_point_pade, MultipointPair, MultipointSpec, Node, TwoPointOrders};

use crate::arith::{abs_f64, nullspace, Field, Poly, Prec, PrecisionPolicy, SeriesInf};
use crate::error::{Error, Result};
use crate::germ::Germ;
use rug::{Complex, Float};
use serde::{Deserialize, Serialize};

/// How well a returned tuple satisfies its defining conditions.
#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct Certificate {
    /// Working precision of the solve, in digits.
    pub digits: u32,
    /// Precision attempts used (1 = first try succeeded).
    pub attempts: u32,
    /// Highest and lowest power of the expansion forced to vanish.
    pub vanish_from: i64,
    pub vanish_to: i64,
    /// `log10` of the largest row residual, each row normalized by the
    /// sum of the magnitudes of its terms.
    pub residual_log10: f64,
    pub nullity: usize,
    pub pivot_ratio_log10: f64,
}

impl Certificate {
    pub fn passes(&self) -> bool {
        self.residual_log10 <= -(self.digits as f64) / 3.0
    }
}

/// `P_{n,0} + P_{n,1} f = O(z^(-n-1))`, with `[n/n]_f = -P_{n,0}/P_{n,1}`.
#[derive(Clone, Debug)]
pub struct PadePair {
    pub p0: Poly,
    pub p1: Poly,
    pub n: usize,
    /// Smaller than `n` when the table block is degenerate.
    pub effective_n: usize,
    pub cert: Certificate,
}

impl PadePair {
    /// `[n/n]_f(z)`.
    pub fn eval(&self, z: &Complex) -> Result<Complex> {
        let d = self.p1.eval(z);
        if d.is_zero() {
            return Err(Error::Degenerate("pole of the approximant".into()));
        }
        Ok(-(self.p0.eval(z) / d))
    }

    pub fn denominator(&self) -> &Poly {
        &self.p1
    }

    /// `P_{n,0}` divided by the same constant that makes `P_{n,1}` monic.
    pub fn numerator(&self) -> Poly {
        -&self.p0
    }
}

fn is_real_slice(c: &[Complex]) -> bool {
    c.iter().all(|x| x.imag().is_zero())
}

/// Null vector of a complex matrix, run in real arithmetic when every
/// entry is real.
pub(crate) fn solve_null(rows: Vec<Vec<Complex>>, prec: Prec) -> crate::arith::Nullspace<Complex> {
    let thr = prec.get() as f64 - 10.0;
    if rows.iter().all(|r| is_real_slice(r)) {
        let real: Vec<Vec<Float>> = rows.into_iter().map(|r| r.into_iter().map(|c| c.into_real_imag().0).collect()).collect();
        let ns = nullspace(real, thr);
        crate::arith::Nullspace {
            vector: ns.vector.into_iter().map(Complex::from).collect(),
            rank: ns.rank,
            nullity: ns.nullity,
            pivot_ratio_log10: ns.pivot_ratio_log10,
        }
    } else {
        nullspace(rows, thr)
    }
}

/// Normalized residual `|sum| / sum |terms|` of one row, as `log10`.
pub(crate) fn row_residual(terms: &[Complex], bits: u32) -> f64 {
    let mut s = Complex::new(bits);
    let mut m = 0.0;
    for t in terms {
        s += t;
        m += abs_f64(t);
    }
    if m == 0.0 {
        return f64::NEG_INFINITY;
    }
    let r = crate::arith::log10_abs(&s) - m.log10();
    if r.is_nan() {
        f64::NEG_INFINITY
    } else {
        r
    }
}

/// Residuals of `P0 + P1 f` for the powers `z^n .. z^-n`.
pub fn pade_residual(p0: &Poly, p1: &Poly, s: &SeriesInf, n: usize) -> f64 {
    let bits = s.bits().max(p1.bits());
    let mut worst = f64::NEG_INFINITY;
    for m in -(n as i64)..=(n as i64) {
        let mut terms = Vec::new();
        if m >= 0 {
            terms.push(Complex::with_val(bits, &p0.coeff(m as usize)));
        }
        for j in 0..=n {
            let k = j as i64 - m;
            if k >= 0 && (k as usize) <= s.order() {
                terms.push(Complex::with_val(bits, &p1.coeff(j) * s.coeff(k as usize)));
            }
        }
        worst = worst.max(row_residual(&terms, bits));
    }
    worst
}

/// Single-precision solve of the Padé system from `c_0..c_2n`. On a
/// rank-deficient block the order is reduced until the null space is one
/// dimensional.
pub fn pade_polynomials(s: &SeriesInf, n: usize) -> Result<PadePair> {
    if s.order() < 2 * n {
        return Err(Error::Degenerate(format!("need {} coefficients, have {}", 2 * n + 1, s.order() + 1)));
    }
    let prec = s.prec();
    let bits = s.bits();
    let mut m = n;
    loop {
        let (p1, nullity, piv) = if m == 0 {
            (Poly::one(prec), 1, 0.0)
        } else {
            // rows: sum_j q_j c_{j+r} = 0 for r = 1..m
            let rows: Vec<Vec<Complex>> = (1..=m).map(|r| (0..=m).map(|j| s.coeff(j + r).clone()).collect()).collect();
            let ns = solve_null(rows, prec);
            (Poly::new(ns.vector), ns.nullity, ns.pivot_ratio_log10)
        };
        if nullity > 1 {
            m -= 1;
            continue;
        }
        let p1 = normalize_monic(p1, prec);
        let p0 = polynomial_part(&p1, s, m, bits);
        let mut p1n = p1;
        let mut p0n = p0;
        if m < n {
            p1n = pad(p1n, n);
            p0n = pad(p0n, n);
        }
        let res = pade_residual(&p0n, &p1n, s, n);
        return Ok(PadePair {
            p0: p0n,
            p1: p1n,
            n,
            effective_n: m,
            cert: Certificate {
                digits: prec.get(),
                attempts: 1,
                vanish_from: n as i64,
                vanish_to: -(n as i64),
                residual_log10: res,
                nullity,
                pivot_ratio_log10: piv,
            },
        });
    }
}

fn pad(p: Poly, n: usize) -> Poly {
    let bits = p.bits();
    let mut c = p.into_coeffs();
    c.resize(n + 1, Complex::new(bits));
    Poly::new(c)
}

/// Monic when the top coefficient is not negligible; otherwise unit max
/// coefficient.
pub(crate) fn normalize_monic(p: Poly, prec: Prec) -> Poly {
    let top = p.coeff(p.bound());
    let big = p.max_coeff_log10();
    if !top.is_zero() && Field::mag(&top).log10() > big - prec.get() as f64 / 2.0 {
        let inv = Complex::with_val(p.bits(), 1) / &top;
        return p.scale(&inv);
    }
    let lead = p.leading().cloned();
    match lead {
        Some(l) => {
            let inv = Complex::with_val(p.bits(), 1) / &l;
            p.scale(&inv)
        }
        None => p,
    }
}

/// `-[P1 f]_+`, the polynomial part with sign flipped.
fn polynomial_part(p1: &Poly, s: &SeriesInf, n: usize, bits: u32) -> Poly {
    let coeffs = (0..=n)
        .map(|m| {
            let mut acc = Complex::new(bits);
            for j in m..=n {
                acc += &p1.coeff(j) * s.coeff(j - m);
            }
            -acc
        })
        .collect();
    Poly::new(coeffs)
}

/// Expands the germ at the policy precision, solves, and certifies the
/// result against an independent expansion at twice the digits. Escalates
/// the slope on failure.
pub fn pade_for_germ(germ: &Germ, n: usize, policy: &PrecisionPolicy) -> Result<PadePair> {
    let mut last = 0.0;
    for attempt in 0..=policy.retries {
        let prec = policy.attempt(n, attempt);
        let s = germ.expand_at_infinity(2 * n, prec)?;
        let mut pair = pade_polynomials(&s, n)?;
        let hi = germ.expand_at_infinity(2 * n, prec.scaled(2, 1))?;
        pair.cert.residual_log10 = pade_residual(&pair.p0, &pair.p1, &hi, n);
        pair.cert.attempts = attempt + 1;
        last = pair.cert.residual_log10;
        if pair.cert.passes() {
            return Ok(pair);
        }
    }
    Err(Error::PrecisionExhausted { digits: policy.attempt(n, policy.retries).get(), residual_exp: last.ceil() as i64 })
}

/// Cosine of the angle between two coefficient vectors (Hermitian).
pub fn collinearity(a: &Poly, b: &Poly) -> f64 {
    let bits = a.bits().max(b.bits());
    let n = a.coeffs().len().max(b.coeffs().len());
    let mut dot = Complex::new(bits);
    let mut na = Float::new(bits);
    let mut nb = Float::new(bits);
    for k in 0..n {
        let x = a.coeff(k);
        let y = b.coeff(k);
        dot += Complex::with_val(bits, &x * y.clone().conj());
        na += x.norm().real();
        nb += y.norm().real();
    }
    let den = Float::with_val(bits, na * nb).sqrt();
    let c = Float::with_val(bits, dot.abs().real() / den);
    c.to_f64()
}

/// `1 - cos` between two coefficient vectors, kept at full precision so
/// that tiny defects are not lost to rounding.
pub fn collinearity_defect_log10(a: &Poly, b: &Poly) -> f64 {
    let bits = a.bits().max(b.bits());
    let n = a.coeffs().len().max(b.coeffs().len());
    let mut dot = Complex::new(bits);
    let mut na = Float::new(bits);
    let mut nb = Float::new(bits);
    for k in 0..n {
        let x = a.coeff(k);
        let y = b.coeff(k);
        dot += Complex::with_val(bits, &x * y.clone().conj());
        na += x.norm().real();
        nb += y.norm().real();
    }
    // 1 - |<a,b>|^2/(|a|^2|b|^2) ~ 2(1 - cos)
    let num = Float::with_val(bits, dot.norm().real());
    let den = Float::with_val(bits, &na * &nb);
    let d = Float::with_val(bits, 1 - num / den) / 2u32;
    if d.is_zero() || d.is_sign_negative() {
        return f64::NEG_INFINITY;
    }
    Field::mag(&d).log10()
}

#[cfg(test)]
mod tests;
