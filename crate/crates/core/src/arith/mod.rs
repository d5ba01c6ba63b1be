//! Multiprecision scalars, polynomials, truncated series and the null-space
//! solver used by every approximant construction.

mod linalg;
mod num;
mod poly;
mod series;

pub use linalg::{nullspace, Field, Mag, Nullspace};
pub use num::Num;
pub use poly::Poly;
pub use series::{poly_times_series, Laurent, SeriesInf, Taylor};

use crate::error::{Error, Result};
use rug::float::Constant;
use rug::ops::Pow;
use rug::{Complex, Float, Rational};

pub const LOG2_10: f64 = std::f64::consts::LOG2_10;

/// Working precision, stated in decimal digits.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Prec {
    digits: u32,
}

impl Prec {
    pub fn digits(digits: u32) -> Self {
        Prec { digits: digits.max(5) }
    }

    pub fn from_bits(bits: u32) -> Self {
        Prec::digits(((bits as f64 - 8.0) / LOG2_10).floor().max(5.0) as u32)
    }

    pub fn get(self) -> u32 {
        self.digits
    }

    pub fn bits(self) -> u32 {
        (self.digits as f64 * LOG2_10).ceil() as u32 + 8
    }

    pub fn scaled(self, num: u32, den: u32) -> Self {
        Prec::digits(self.digits * num / den)
    }

    pub fn float(self, v: f64) -> Float {
        Float::with_val(self.bits(), v)
    }

    pub fn zero(self) -> Complex {
        Complex::new(self.bits())
    }

    pub fn one(self) -> Complex {
        Complex::with_val(self.bits(), 1)
    }

    pub fn c(self, re: f64, im: f64) -> Complex {
        Complex::with_val(self.bits(), (re, im))
    }

    pub fn ci(self, n: i64) -> Complex {
        Complex::with_val(self.bits(), n)
    }

    pub fn rat(self, num: i64, den: i64) -> Complex {
        Complex::with_val(self.bits(), Rational::from((num, den)))
    }

    pub fn pi(self) -> Float {
        Float::with_val(self.bits(), Constant::Pi)
    }

    /// `10^(-k)` at this precision.
    pub fn tiny(self, k: f64) -> Float {
        let t = Float::with_val(self.bits(), -k);
        Float::with_val(self.bits(), 10).pow(t)
    }

    pub fn parse(self, s: &str) -> Result<Complex> {
        parse_complex(s, self)
    }
}

impl Default for Prec {
    fn default() -> Self {
        Prec::digits(60)
    }
}

/// Working precision as an affine function of the degree, `base + slope*n`,
/// with a bounded number of slope doublings on residual failure.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PrecisionPolicy {
    pub base: u32,
    pub slope: u32,
    pub retries: u32,
}

impl Default for PrecisionPolicy {
    fn default() -> Self {
        PrecisionPolicy { base: 60, slope: 12, retries: 2 }
    }
}

impl PrecisionPolicy {
    pub fn for_n(&self, n: usize) -> Prec {
        Prec::digits(self.base + self.slope * n as u32)
    }

    /// Precision used on attempt `k` (0 is the first try).
    pub fn attempt(&self, n: usize, k: u32) -> Prec {
        Prec::digits(self.base + (self.slope << k) * n as u32)
    }
}

fn parse_real(s: &str, prec: Prec) -> Result<Float> {
    let s = s.trim();
    if s.is_empty() {
        return Err(Error::Parse("empty number".into()));
    }
    if s.contains('/') {
        let r = Rational::from_str_radix(s, 10)
            .map_err(|e| Error::Parse(format!("{s}: {e}")))?;
        return Ok(Float::with_val(prec.bits(), r));
    }
    let p = Float::parse(s).map_err(|e| Error::Parse(format!("{s}: {e}")))?;
    Ok(Float::with_val(prec.bits(), p))
}

/// Parses `a`, `bi`, `a+bi`, `a-bi`, `i`, `-i` where `a`, `b` are decimals
/// or rationals `p/q`. The value is rounded once, at `prec`.
pub fn parse_complex(s: &str, prec: Prec) -> Result<Complex> {
    let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    if t.is_empty() {
        return Err(Error::Parse("empty number".into()));
    }
    let bytes = t.as_bytes();
    let mut split = None;
    for i in (1..bytes.len()).rev() {
        let c = bytes[i];
        if (c == b'+' || c == b'-') && !matches!(bytes[i - 1], b'e' | b'E') {
            split = Some(i);
            break;
        }
    }
    let imag_of = |u: &str| -> Result<Float> {
        let body = &u[..u.len() - 1];
        match body {
            "" | "+" => Ok(Float::with_val(prec.bits(), 1)),
            "-" => Ok(Float::with_val(prec.bits(), -1)),
            _ => parse_real(body.trim_end_matches('*'), prec),
        }
    };
    let (re, im) = if t.ends_with('i') || t.ends_with('j') {
        match split {
            Some(i) => (parse_real(&t[..i], prec)?, imag_of(&t[i..])?),
            None => (Float::new(prec.bits()), imag_of(&t)?),
        }
    } else {
        (parse_real(&t, prec)?, Float::new(prec.bits()))
    };
    Ok(Complex::with_val(prec.bits(), (re, im)))
}

/// Base-10 exponent of `|z|`, or `-inf` for zero.
pub fn log10_abs(z: &Complex) -> f64 {
    Field::mag(z).log10()
}

/// Low-precision `|z|`, for diagnostics and tolerances.
pub fn abs_f64(z: &Complex) -> f64 {
    z.real().to_f64().hypot(z.imag().to_f64())
}

/// Low-precision `|a - b|`.
pub fn dist_f64(a: &Complex, b: &Complex) -> f64 {
    let bits = a.prec().0.max(b.prec().0);
    abs_f64(&Complex::with_val(bits, a - b))
}

pub fn to_c64(z: &Complex) -> num_complex::Complex64 {
    num_complex::Complex64::new(z.real().to_f64(), z.imag().to_f64())
}

pub fn from_c64(z: num_complex::Complex64, prec: Prec) -> Complex {
    prec.c(z.re, z.im)
}

/// Decimal string with `digits` significant digits, `a+bi` form.
pub fn fmt_complex(z: &Complex, digits: usize) -> String {
    let re = fmt_float(z.real(), digits);
    if z.imag().is_zero() {
        return re;
    }
    let im = fmt_float(z.imag(), digits);
    if im.starts_with('-') {
        format!("{re}{im}i")
    } else {
        format!("{re}+{im}i")
    }
}

pub fn fmt_float(x: &Float, digits: usize) -> String {
    if x.is_zero() {
        return "0".into();
    }
    x.to_string_radix(10, Some(digits.max(1)))
}
