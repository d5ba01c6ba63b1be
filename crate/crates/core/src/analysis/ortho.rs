use crate::arith::{Num, Poly, Prec};
use crate::error::{Error, Result};
use crate::germ::Germ;
use crate::pade::jacobi_oracle;
use crate::quad::integrate_mp;
use rug::float::Constant;
use rug::ops::Pow;
use rug::{Complex, Float};
use serde::{Deserialize, Serialize};

/// Which orthogonality relation to test.
#[derive(Clone, Debug)]
pub enum Orthogonality {
    /// `int_E P_{n,1}(x) x^k Δf(x) dx = 0`.
    PadeEq65,
    /// `int_E Q_{n,2}(x) P_{n+k,1}(x) (f^+ + f^-)(x) Δf(x) dx = 0`, with
    /// `aux[i] = P_{n+k_i,1}` for the `i`-th requested `k`.
    HpEq69 { aux: Vec<Poly> },
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct OrthoRow {
    pub k: usize,
    /// `log10 |int g| / int |g|`.
    pub residual_log10: f64,
}

#[allow(clippy::too_many_arguments)]
fn integrate_segment(
    p: &Poly,
    germ: &Germ,
    ks: &[usize],
    which: &Orthogonality,
    a: &Float,
    b: &Float,
    prec: Prec,
    digits: u32,
    max_level: u32,
    moduli: bool,
) -> Result<Vec<Complex>> {
    let bits = prec.bits();
    let m = ks.len();
    let len = Float::with_val(bits, b - a);
    let mut failure: Option<Error> = None;
    let out = integrate_mp(prec, digits, max_level, |u, w| {
        let (anchor, off) = if u < w { (a, Float::with_val(bits, u * &len)) } else { (b, -Float::with_val(bits, w * &len)) };
        let x = Float::with_val(bits, anchor + &off);
        let xc = Complex::with_val(bits, &x);
        let (fp, fm) = match germ.boundary_values_rel(anchor, &off) {
            Ok(v) => v,
            Err(e) => {
                failure.get_or_insert(e);
                return vec![Complex::new(bits); m];
            }
        };
        let jump = Complex::with_val(bits, &fp - &fm) * &len;
        let base = Complex::with_val(bits, p.eval(&xc) * &jump);
        let vals: Vec<Complex> = match which {
            Orthogonality::PadeEq65 => ks.iter().map(|&k| Complex::with_val(bits, &base * Float::with_val(bits, (&x).pow(k as u32)))).collect(),
            Orthogonality::HpEq69 { aux } => {
                let base = base * Complex::with_val(bits, &fp + &fm);
                aux.iter().map(|q| Complex::with_val(bits, &base * q.eval(&xc))).collect()
            }
        };
        if moduli {
            vals.into_iter().map(|g| Complex::with_val(bits, g.abs())).collect()
        } else {
            vals
        }
    });
    match failure {
        Some(e) => Err(e),
        None => Ok(out),
    }
}

/// Normalized orthogonality residuals, one per `k`, by multiprecision
/// tanh-sinh on each cut segment.
pub fn orthogonality_residual(p: &Poly, germ: &Germ, ks: &[usize], which: &Orthogonality) -> Result<Vec<OrthoRow>> {
    if let Orthogonality::HpEq69 { aux } = which {
        if aux.len() != ks.len() {
            return Err(Error::Config("one auxiliary denominator per k is required".into()));
        }
    }
    let prec = p.prec();
    let bits = prec.bits();
    let segs = germ.cut_segments(prec)?;
    let m = ks.len();
    let mut value = vec![Complex::new(bits); m];
    let mut size = vec![Float::new(bits); m];
    for (a, b) in &segs {
        // The moduli have kinks at the zeros and converge slowly; a few
        // digits suffice for the normalization.
        let exact = integrate_segment(p, germ, ks, which, a, b, prec, prec.get() / 4 + 10, 14, false)?;
        let moduli = integrate_segment(p, germ, ks, which, a, b, prec, 3, 8, true)?;
        for i in 0..m {
            value[i] += &exact[i];
            size[i] += moduli[i].real();
        }
    }
    Ok(ks
        .iter()
        .enumerate()
        .map(|(i, &k)| {
            let v = Float::with_val(bits, value[i].abs_ref());
            let r = if size[i].is_zero() { f64::NEG_INFINITY } else { Float::with_val(bits, v / &size[i]).log10().to_f64() };
            OrthoRow { k, residual_log10: r }
        })
        .collect())
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct AsymptoticsRow {
    pub n: usize,
    pub ratio: (f64, f64),
    pub defect: f64,
    /// Imaginary parts of both sides relative to their size, `log10`;
    /// meaningful for real `z > 1`.
    pub imag_log10: (f64, f64),
}

/// Ratio of `P_n^{(-alpha, alpha)}(z)` to
/// `((z-1)/(z+1))^{alpha/2} (z + sqrt(z^2-1))^{n+1/2} / ((2 pi n)^{1/2} (z^2-1)^{1/4})`.
pub fn jacobi_asymptotics_check(n_list: &[usize], alpha: &Num, z: num_complex::Complex64, prec: Prec) -> Result<Vec<AsymptoticsRow>> {
    if z.im == 0.0 && z.re.abs() <= 1.0 {
        return Err(Error::Config("z must lie off [-1, 1]".into()));
    }
    let bits = prec.bits();
    let zz = prec.c(z.re, z.im);
    let al = alpha.eval(prec);
    let zm = Complex::with_val(bits, &zz - 1u32);
    let zp = Complex::with_val(bits, &zz + 1u32);
    let root = Complex::with_val(bits, zm.sqrt_ref()) * Complex::with_val(bits, zp.sqrt_ref());
    let phi = Complex::with_val(bits, &zz + &root);
    let quarter = Complex::with_val(bits, zm.clone().sqrt().sqrt()) * Complex::with_val(bits, zp.clone().sqrt().sqrt());
    let front = Complex::with_val(bits, &zm / &zp).pow(Complex::with_val(bits, &al / 2u32));
    let two_pi = Float::with_val(bits, Constant::Pi) * 2u32;
    let mut rows = Vec::new();
    for &n in n_list {
        if n == 0 {
            return Err(Error::Config("n must be positive".into()));
        }
        let lhs = jacobi_oracle(n, alpha, prec).eval(&zz);
        let e = Complex::with_val(bits, n) + Float::with_val(bits, 0.5);
        let pw = Complex::with_val(bits, (&phi).pow(&e));
        let norm = Float::with_val(bits, &two_pi * n as u32).sqrt();
        let rhs = Complex::with_val(bits, &front * &pw) / &quarter / norm;
        let ratio = Complex::with_val(bits, &lhs / &rhs);
        let defect = crate::arith::dist_f64(&ratio, &Complex::with_val(bits, 1));
        let rel = |c: &Complex| {
            let a = Float::with_val(bits, c.abs_ref());
            Float::with_val(bits, c.imag().clone().abs() / a).log10().to_f64()
        };
        rows.push(AsymptoticsRow { n, ratio: (ratio.real().to_f64(), ratio.imag().to_f64()), defect, imag_log10: (rel(&lhs), rel(&rhs)) });
    }
    Ok(rows)
}
