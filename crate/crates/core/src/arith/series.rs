use super::{Poly, Prec};
use rug::Complex;

/// Truncated expansion `sum_{k=0}^{N} c_k z^{-k}` at infinity.
#[derive(Clone, Debug, PartialEq)]
pub struct SeriesInf {
    coeffs: Vec<Complex>,
}

impl SeriesInf {
    pub fn new(coeffs: Vec<Complex>) -> Self {
        assert!(!coeffs.is_empty());
        SeriesInf { coeffs }
    }

    /// Highest retained index `N`.
    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Complex] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> &Complex {
        &self.coeffs[k]
    }

    pub fn bits(&self) -> u32 {
        self.coeffs.iter().map(|c| c.prec().0).max().unwrap()
    }

    pub fn prec(&self) -> Prec {
        Prec::from_bits(self.bits())
    }

    pub fn truncate(&self, order: usize) -> Self {
        SeriesInf { coeffs: self.coeffs[..=order.min(self.order())].to_vec() }
    }

    pub fn is_real(&self) -> bool {
        self.coeffs.iter().all(|c| c.imag().is_zero())
    }

    /// Cauchy product truncated to the smaller order.
    pub fn mul(&self, o: &SeriesInf) -> SeriesInf {
        let n = self.order().min(o.order());
        let bits = self.bits().max(o.bits());
        let mut out = vec![Complex::new(bits); n + 1];
        for (k, slot) in out.iter_mut().enumerate() {
            for j in 0..=k {
                *slot += &self.coeffs[j] * &o.coeffs[k - j];
            }
        }
        SeriesInf { coeffs: out }
    }

    pub fn add(&self, o: &SeriesInf) -> SeriesInf {
        let n = self.order().min(o.order());
        let bits = self.bits().max(o.bits());
        SeriesInf {
            coeffs: (0..=n).map(|k| Complex::with_val(bits, &self.coeffs[k] + &o.coeffs[k])).collect(),
        }
    }

    pub fn scale(&self, s: &Complex) -> SeriesInf {
        let bits = self.bits().max(s.prec().0);
        SeriesInf { coeffs: self.coeffs.iter().map(|c| Complex::with_val(bits, c * s)).collect() }
    }

    /// Multiplicative inverse; requires `c_0 != 0`.
    pub fn recip(&self) -> Option<SeriesInf> {
        if self.coeffs[0].is_zero() {
            return None;
        }
        let bits = self.bits();
        let n = self.order();
        let inv0 = Complex::with_val(bits, 1) / &self.coeffs[0];
        let mut out: Vec<Complex> = Vec::with_capacity(n + 1);
        out.push(inv0.clone());
        for k in 1..=n {
            let mut s = Complex::new(bits);
            for j in 1..=k {
                s += &self.coeffs[j] * &out[k - j];
            }
            out.push(-(s * &inv0));
        }
        Some(SeriesInf { coeffs: out })
    }

    /// Partial sum at `z`.
    pub fn eval_truncated(&self, z: &Complex) -> Complex {
        let bits = self.bits().max(z.prec().0);
        let w = Complex::with_val(bits, 1) / z;
        let mut acc = Complex::new(bits);
        for c in self.coeffs.iter().rev() {
            acc *= &w;
            acc += c;
        }
        acc
    }
}

/// Truncated Taylor expansion `sum d_k (z - z0)^k`.
#[derive(Clone, Debug, PartialEq)]
pub struct Taylor {
    pub center: Complex,
    coeffs: Vec<Complex>,
}

impl Taylor {
    pub fn new(center: Complex, coeffs: Vec<Complex>) -> Self {
        assert!(!coeffs.is_empty());
        Taylor { center, coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Complex] {
        &self.coeffs
    }

    pub fn eval_truncated(&self, z: &Complex) -> Complex {
        let bits = self.coeffs[0].prec().0.max(z.prec().0);
        let h = Complex::with_val(bits, z - &self.center);
        let mut acc = Complex::new(bits);
        for c in self.coeffs.iter().rev() {
            acc *= &h;
            acc += c;
        }
        acc
    }
}

/// Two-sided truncated Laurent expansion. Stores the coefficients of
/// `z^top, z^(top-1), ..., z^bottom` where `bottom` is the lowest power
/// whose coefficient is fully determined.
#[derive(Clone, Debug, PartialEq)]
pub struct Laurent {
    pub top: i64,
    coeffs: Vec<Complex>,
}

impl Laurent {
    pub fn bottom(&self) -> i64 {
        self.top - self.coeffs.len() as i64 + 1
    }

    /// Coefficient of `z^m`; `None` outside the valid range.
    pub fn coeff(&self, m: i64) -> Option<&Complex> {
        if m > self.top || m < self.bottom() {
            return None;
        }
        Some(&self.coeffs[(self.top - m) as usize])
    }

    pub fn coeffs_desc(&self) -> &[Complex] {
        &self.coeffs
    }
}

/// `P(z) S(z)` where `S` is a series at infinity. The result is valid from
/// `z^deg` down to `z^(deg - N)`, `deg` being the stored bound of `P`.
pub fn poly_times_series(p: &Poly, s: &SeriesInf) -> Laurent {
    let d = p.bound() as i64;
    let n = s.order() as i64;
    let bits = p.bits().max(s.bits());
    let mut coeffs = Vec::with_capacity((n + 1) as usize);
    for m in (d - n..=d).rev() {
        let mut acc = Complex::new(bits);
        for (j, pj) in p.coeffs().iter().enumerate() {
            let k = j as i64 - m;
            if (0..=n).contains(&k) && !pj.is_zero() {
                acc += pj * s.coeff(k as usize);
            }
        }
        coeffs.push(acc);
    }
    Laurent { top: d, coeffs }
}
