//! Type I Hermite–Padé polynomials for `[1, f, f^2]`, the Hermite
//! approximants built from them, and trend measurements for the limits of
//! their ratios.

use crate::arith::{abs_f64, dist_f64, Field, Poly, Prec, PrecisionPolicy, SeriesInf};
use crate::error::{Error, Result};
use crate::germ::Germ;
use crate::pade::{row_residual, solve_null, Certificate};
use num_complex::Complex64;
use rug::Complex;
use serde::{Deserialize, Serialize};

/// Which sign the approximant ratios carry.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize, Default)]
#[serde(rename_all = "kebab-case")]
pub enum SignConvention {
    /// `Q_{n,0}/Q_{n,2}` and `Q_{n,1}/Q_{n,2}`.
    #[default]
    Definition,
    /// `-Q_{n,0}/Q_{n,2}` and `-Q_{n,1}/Q_{n,2}`.
    Theorem1,
}

impl std::str::FromStr for SignConvention {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "definition" => Ok(SignConvention::Definition),
            "theorem1" => Ok(SignConvention::Theorem1),
            _ => Err(Error::Config(format!("unknown sign convention '{s}'"))),
        }
    }
}

/// How the null vector is pinned down.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Normalization {
    /// Eliminate in natural column order; last free unknown set to 1.
    LastFree,
    /// Eliminate with the unknowns in reverse order, which frees a
    /// different unknown and scales the vector differently.
    Reversed,
}

#[derive(Clone, Debug)]
pub struct HermiteTriple {
    pub q0: Poly,
    pub q1: Poly,
    pub q2: Poly,
    pub n: usize,
    pub cert: Certificate,
    /// Number of Laurent coefficients the system consumed (`3n+2`).
    pub consumed: usize,
}

impl HermiteTriple {
    pub fn polys(&self) -> [&Poly; 3] {
        [&self.q0, &self.q1, &self.q2]
    }

    /// `Q0 + Q1 f + Q2 f^2` at `z`, given `f(z)`.
    pub fn remainder(&self, fz: &Complex, z: &Complex) -> Complex {
        let f2 = Complex::with_val(fz.prec().0, fz * fz);
        self.q0.eval(z) + self.q1.eval(z) * fz + self.q2.eval(z) * f2
    }
}

/// Coefficient of `z^m` in `Q0 + Q1 f + Q2 f^2`, split into its terms.
fn row_terms(t: [&Poly; 3], sf: &SeriesInf, sf2: &SeriesInf, n: usize, m: i64, bits: u32) -> Vec<Complex> {
    let mut terms = Vec::with_capacity(2 * n + 3);
    if m >= 0 && m as usize <= n {
        terms.push(Complex::with_val(bits, &t[0].coeff(m as usize)));
    }
    for j in 0..=n {
        let k = j as i64 - m;
        if k < 0 {
            continue;
        }
        let k = k as usize;
        if k <= sf.order() {
            terms.push(Complex::with_val(bits, &t[1].coeff(j) * sf.coeff(k)));
        }
        if k <= sf2.order() {
            terms.push(Complex::with_val(bits, &t[2].coeff(j) * sf2.coeff(k)));
        }
    }
    terms
}

/// Worst normalized residual over the powers `z^n .. z^-(2n+1)`.
pub fn hp_residual(t: [&Poly; 3], sf: &SeriesInf, sf2: &SeriesInf, n: usize) -> f64 {
    let bits = sf.bits();
    (-(2 * n as i64 + 1)..=n as i64)
        .map(|m| row_residual(&row_terms(t, sf, sf2, n, m, bits), bits))
        .fold(f64::NEG_INFINITY, f64::max)
}

/// Null-space solve from `c_0..c_{3n+1}` of `f` and of `f^2`. The rows are
/// the powers `z^-1 .. z^-(2n+1)` in the unknowns of `Q1`, `Q2`; the
/// polynomial part then fixes `Q0`.
pub fn hp_type1(sf: &SeriesInf, sf2: &SeriesInf, n: usize, norm: Normalization) -> Result<HermiteTriple> {
    let need = 3 * n + 1;
    if sf.order() < need || sf2.order() < need {
        return Err(Error::Degenerate(format!("need {} coefficients", need + 1)));
    }
    let prec = sf.prec();
    let bits = sf.bits();
    let cols = 2 * n + 2;
    let mut rows: Vec<Vec<Complex>> = (1..=2 * n + 1)
        .map(|r| {
            let mut row: Vec<Complex> = (0..=n).map(|j| sf.coeff(j + r).clone()).collect();
            row.extend((0..=n).map(|j| sf2.coeff(j + r).clone()));
            row
        })
        .collect();
    if norm == Normalization::Reversed {
        rows.iter_mut().for_each(|r| r.reverse());
    }
    let ns = solve_null(rows, prec);
    let mut x = ns.vector;
    if norm == Normalization::Reversed {
        x.reverse();
    }
    debug_assert_eq!(x.len(), cols);
    let q1 = Poly::new(x[..=n].to_vec());
    let q2 = Poly::new(x[n + 1..].to_vec());
    let q0 = Poly::new(
        (0..=n)
            .map(|m| {
                let mut acc = Complex::new(bits);
                for j in m..=n {
                    acc += &q1.coeff(j) * sf.coeff(j - m);
                    acc += &q2.coeff(j) * sf2.coeff(j - m);
                }
                -acc
            })
            .collect(),
    );
    let res = hp_residual([&q0, &q1, &q2], sf, sf2, n);
    Ok(HermiteTriple {
        q0,
        q1,
        q2,
        n,
        consumed: 3 * n + 2,
        cert: Certificate {
            digits: prec.get(),
            attempts: 1,
            vanish_from: n as i64,
            vanish_to: -(2 * n as i64 + 1),
            residual_log10: res,
            nullity: ns.nullity,
            pivot_ratio_log10: ns.pivot_ratio_log10,
        },
    })
}

/// Series of `f` and `f^2` at the given order. `f^2` comes from its own
/// germ when one exists and is checked against the Cauchy square.
pub fn series_pair(germ: &Germ, order: usize, prec: Prec) -> Result<(SeriesInf, SeriesInf)> {
    let sf = germ.expand_at_infinity(order, prec)?;
    let prod = sf.mul(&sf);
    let sf2 = match germ.square() {
        Some(sq) => {
            let ind = sq.expand_at_infinity(order, prec)?;
            let tol = -(prec.get() as f64) / 2.0;
            for k in 0..=order {
                let scale = 1.0f64.max(abs_f64(ind.coeff(k)));
                let d = dist_f64(ind.coeff(k), prod.coeff(k)) / scale;
                if d > 10f64.powf(tol) {
                    return Err(Error::InvalidGerm(format!("f^2 expansion disagrees with the squared series at k={k}")));
                }
            }
            ind
        }
        None => prod,
    };
    Ok((sf, sf2))
}

/// Normalized size of the coefficients of `z^-(2n+2) .. z^-(2n+4)`; tiny
/// values mean the triple is an exact relation.
fn tail_size(t: &HermiteTriple, germ: &Germ, prec: Prec) -> Result<f64> {
    let n = t.n;
    let (sf, sf2) = series_pair(germ, 3 * n + 4, prec)?;
    let bits = sf.bits();
    let polys = t.polys();
    let mut worst = f64::NEG_INFINITY;
    let mut scale = f64::NEG_INFINITY;
    for m in -(2 * n as i64 + 4)..=-(2 * n as i64 + 2) {
        let terms = row_terms(polys, &sf, &sf2, n, m, bits);
        let mut s = Complex::new(bits);
        for x in &terms {
            s += x;
            scale = scale.max(Field::mag(x).log10());
        }
        worst = worst.max(Field::mag(&s).log10());
    }
    Ok(worst - scale)
}

/// Expands, solves and certifies, escalating precision on a failed
/// certificate. Dependence of `1, f, f^2` is reported as an error.
pub fn hp_for_germ(germ: &Germ, n: usize, policy: &PrecisionPolicy, norm: Normalization) -> Result<HermiteTriple> {
    let mut last = 0.0;
    let mut wide_null = false;
    for attempt in 0..=policy.retries {
        let prec = policy.attempt(n, attempt);
        let (sf, sf2) = series_pair(germ, 3 * n + 1, prec)?;
        let mut t = hp_type1(&sf, &sf2, n, norm)?;
        if t.cert.nullity > 1 {
            if wide_null {
                return Err(Error::Dependent { nullity: t.cert.nullity });
            }
            wide_null = true;
            // retest at doubled precision before declaring dependence
            let hi = prec.scaled(2, 1);
            let (a, b) = series_pair(germ, 3 * n + 1, hi)?;
            let t2 = hp_type1(&a, &b, n, norm)?;
            if t2.cert.nullity > 1 {
                return Err(Error::Dependent { nullity: t2.cert.nullity });
            }
            t = t2;
        }
        let hi = Prec::digits(t.cert.digits * 2);
        if tail_size(&t, germ, hi)? < -(t.cert.digits as f64) / 2.0 {
            return Err(Error::Dependent { nullity: t.cert.nullity });
        }
        let (a, b) = series_pair(germ, 3 * n + 1, hi)?;
        t.cert.residual_log10 = hp_residual(t.polys(), &a, &b, n);
        t.cert.attempts = attempt + 1;
        last = t.cert.residual_log10;
        if t.cert.passes() {
            let p = Prec::digits(t.cert.digits);
            let scale = match t.q2.leading() {
                Some(l) => Complex::with_val(p.bits(), 1) / l,
                None => Complex::with_val(p.bits(), 1),
            };
            t.q0 = t.q0.scale(&scale);
            t.q1 = t.q1.scale(&scale);
            t.q2 = t.q2.scale(&scale);
            return Ok(t);
        }
    }
    Err(Error::PrecisionExhausted { digits: policy.attempt(n, policy.retries).get(), residual_exp: last.ceil() as i64 })
}

/// `H_{n,0}` and `H_{n,1}` as numerator/denominator pairs.
#[derive(Clone, Debug)]
pub struct HermiteApproximants {
    pub h0: Poly,
    pub h1: Poly,
    pub den: Poly,
    pub convention: SignConvention,
}

pub fn hermite_approximants(t: &HermiteTriple, convention: SignConvention) -> Result<HermiteApproximants> {
    if t.q2.is_zero() {
        return Err(Error::Degenerate("Q_{n,2} vanishes identically".into()));
    }
    let (h0, h1) = match convention {
        SignConvention::Definition => (t.q0.clone(), t.q1.clone()),
        SignConvention::Theorem1 => (-&t.q0, -&t.q1),
    };
    Ok(HermiteApproximants { h0, h1, den: t.q2.clone(), convention })
}

impl HermiteApproximants {
    fn ratio(&self, num: &Poly, z: &Complex) -> Result<Complex> {
        let d = self.den.eval(z);
        if d.is_zero() {
            return Err(Error::Degenerate("pole of the approximant".into()));
        }
        Ok(num.eval(z) / d)
    }

    pub fn eval_h0(&self, z: &Complex) -> Result<Complex> {
        self.ratio(&self.h0, z)
    }

    pub fn eval_h1(&self, z: &Complex) -> Result<Complex> {
        self.ratio(&self.h1, z)
    }
}

/// Branch against which the approximant ratios are compared.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Branch {
    /// The branch fixed by the expansion at infinity.
    Infinity,
    /// The branch continued across the cuts (real on the cut set).
    OffF,
    /// The branch continued across cut segment `k` only, counted from the left.
    Across(usize),
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct TrendRow {
    pub n: usize,
    /// `max_z |H_{n,0} - f^2|` over the test points.
    pub conj1_error: f64,
    /// `max_z |H_{n,1} - C f|` with the constant fitted at the largest n.
    pub conj2_error: f64,
    pub conj1_per_point: Vec<f64>,
    pub conj2_per_point: Vec<f64>,
    pub digits: u32,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct TrendReport {
    pub branch: Branch,
    pub points: Vec<(f64, f64)>,
    pub fitted_constant: (f64, f64),
    pub rows: Vec<TrendRow>,
}

impl TrendReport {
    pub fn conj1_decreasing(&self) -> bool {
        self.rows.windows(2).all(|w| w[1].conj1_error < w[0].conj1_error)
    }

    pub fn conj2_decreasing(&self) -> bool {
        self.rows.windows(2).all(|w| w[1].conj2_error < w[0].conj2_error)
    }
}

fn branch_value(germ: &Germ, branch: Branch, z: &Complex) -> Result<Complex> {
    match branch {
        Branch::Infinity => germ.eval(z),
        Branch::OffF => germ.eval_off_f(z),
        Branch::Across(k) => germ.eval_across(z, k),
    }
}

/// Errors of both approximant ratios against `f^2` and a fitted multiple
/// of `f` at the test points, for each `n`.
pub fn conjecture_trends(
    germ: &Germ,
    n_list: &[usize],
    points: &[Complex64],
    branch: Branch,
    convention: SignConvention,
    policy: &PrecisionPolicy,
) -> Result<TrendReport> {
    if n_list.is_empty() || points.is_empty() {
        return Err(Error::Config("need at least one n and one test point".into()));
    }
    let mut h0s = Vec::new();
    let mut h1s = Vec::new();
    let mut digits = Vec::new();
    let prec = Prec::digits(40);
    let fvals: Vec<Complex> = points.iter().map(|z| branch_value(germ, branch, &prec.c(z.re, z.im))).collect::<Result<_>>()?;
    for &n in n_list {
        let t = hp_for_germ(germ, n, policy, Normalization::LastFree)?;
        let ha = hermite_approximants(&t, convention)?;
        let p = Prec::digits(t.cert.digits);
        let mut a = Vec::new();
        let mut b = Vec::new();
        for z in points {
            let zz = p.c(z.re, z.im);
            a.push(Complex::with_val(prec.bits(), ha.eval_h0(&zz)?));
            b.push(Complex::with_val(prec.bits(), ha.eval_h1(&zz)?));
        }
        h0s.push(a);
        h1s.push(b);
        digits.push(t.cert.digits);
    }
    // least squares C = sum conj(f) H1 / sum |f|^2 at the largest n
    let last = h1s.last().unwrap();
    let mut num = Complex::new(prec.bits());
    let mut den = Complex::new(prec.bits());
    for (f, h) in fvals.iter().zip(last) {
        num += Complex::with_val(prec.bits(), f.clone().conj() * h);
        den += Complex::with_val(prec.bits(), f.clone().norm());
    }
    let c = num / den;
    let mut rows = Vec::new();
    for (i, &n) in n_list.iter().enumerate() {
        let mut e1 = Vec::new();
        let mut e2 = Vec::new();
        for (j, f) in fvals.iter().enumerate() {
            let f2 = Complex::with_val(prec.bits(), f * f);
            e1.push(dist_f64(&h0s[i][j], &f2));
            let cf = Complex::with_val(prec.bits(), f * &c);
            e2.push(dist_f64(&h1s[i][j], &cf));
        }
        rows.push(TrendRow {
            n,
            conj1_error: e1.iter().cloned().fold(0.0, f64::max),
            conj2_error: e2.iter().cloned().fold(0.0, f64::max),
            conj1_per_point: e1,
            conj2_per_point: e2,
            digits: digits[i],
        });
    }
    Ok(TrendReport {
        branch,
        points: points.iter().map(|z| (z.re, z.im)).collect(),
        fitted_constant: (c.real().to_f64(), c.imag().to_f64()),
        rows,
    })
}
