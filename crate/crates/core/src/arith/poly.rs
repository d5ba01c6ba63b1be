use super::{Field, Prec};
use rug::{Assign, Complex};
use std::ops::{Add, Mul, Neg, Sub};

/// Dense polynomial with multiprecision complex coefficients in ascending
/// order. Trailing zero coefficients are allowed; `degree` ignores them.
#[derive(Clone, Debug, PartialEq)]
pub struct Poly {
    coeffs: Vec<Complex>,
    bits: u32,
}

impl Poly {
    pub fn new(coeffs: Vec<Complex>) -> Self {
        let bits = coeffs.iter().map(|c| c.prec().0).max().unwrap_or(64);
        let coeffs = if coeffs.is_empty() { vec![Complex::new(bits)] } else { coeffs };
        Poly { coeffs, bits }
    }

    pub fn zero(prec: Prec) -> Self {
        Poly { coeffs: vec![prec.zero()], bits: prec.bits() }
    }

    pub fn one(prec: Prec) -> Self {
        Poly { coeffs: vec![prec.one()], bits: prec.bits() }
    }

    /// The monomial `z - a`.
    pub fn linear(a: &Complex) -> Self {
        let bits = a.prec().0;
        Poly::new(vec![Complex::with_val(bits, -a), Complex::with_val(bits, 1)])
    }

    pub fn from_roots(roots: &[Complex], prec: Prec) -> Self {
        let mut p = Poly::one(prec);
        for r in roots {
            p = &p * &Poly::linear(r);
        }
        p
    }

    pub fn bits(&self) -> u32 {
        self.bits
    }

    pub fn prec(&self) -> Prec {
        Prec::from_bits(self.bits)
    }

    pub fn coeffs(&self) -> &[Complex] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Complex> {
        self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Complex {
        self.coeffs.get(k).cloned().unwrap_or_else(|| Complex::new(self.bits))
    }

    /// Number of stored coefficients minus one (the declared degree bound).
    pub fn bound(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.iter().rposition(|c| !c.is_zero())
    }

    pub fn is_zero(&self) -> bool {
        self.degree().is_none()
    }

    pub fn is_real(&self) -> bool {
        self.coeffs.iter().all(|c| c.imag().is_zero())
    }

    pub fn leading(&self) -> Option<&Complex> {
        self.degree().map(|d| &self.coeffs[d])
    }

    /// Removes trailing zeros.
    pub fn trimmed(mut self) -> Self {
        let d = self.degree().unwrap_or(0);
        self.coeffs.truncate(d + 1);
        self
    }

    /// Drops trailing coefficients whose magnitude is below
    /// `10^(-digits)` times the largest one.
    pub fn trim_relative(mut self, digits: f64) -> Self {
        let m = self.coeffs.iter().map(Field::mag).fold(f64::NEG_INFINITY, |a, b| a.max(b.0));
        let cut = m - digits * super::LOG2_10;
        while self.coeffs.len() > 1 && self.coeffs.last().unwrap().mag().0 <= cut {
            self.coeffs.pop();
        }
        self
    }

    pub fn eval(&self, z: &Complex) -> Complex {
        let bits = self.bits.max(z.prec().0);
        let mut acc = Complex::new(bits);
        for c in self.coeffs.iter().rev() {
            acc *= z;
            acc += c;
        }
        acc
    }

    /// Value and first derivative by Horner.
    pub fn eval_with_derivative(&self, z: &Complex) -> (Complex, Complex) {
        let bits = self.bits.max(z.prec().0);
        let mut p = Complex::new(bits);
        let mut dp = Complex::new(bits);
        for c in self.coeffs.iter().rev() {
            dp *= z;
            dp += &p;
            p *= z;
            p += c;
        }
        (p, dp)
    }

    pub fn derivative(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return Poly { coeffs: vec![Complex::new(self.bits)], bits: self.bits };
        }
        let coeffs = self.coeffs[1..]
            .iter()
            .enumerate()
            .map(|(k, c)| Complex::with_val(self.bits, c * (k as u32 + 1)))
            .collect();
        Poly { coeffs, bits: self.bits }
    }

    pub fn scale(&self, s: &Complex) -> Self {
        let bits = self.bits.max(s.prec().0);
        Poly { coeffs: self.coeffs.iter().map(|c| Complex::with_val(bits, c * s)).collect(), bits }
    }

    /// Divides by the leading coefficient. Returns `None` for the zero
    /// polynomial.
    pub fn monic(&self) -> Option<Self> {
        let d = self.degree()?;
        let inv = Complex::with_val(self.bits, 1) / &self.coeffs[d];
        let mut p = self.scale(&inv);
        p.coeffs[d].assign(1);
        Some(p)
    }

    /// Multiplies by `z^k`.
    pub fn shift(&self, k: usize) -> Self {
        let mut coeffs = vec![Complex::new(self.bits); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Poly { coeffs, bits: self.bits }
    }

    pub fn with_prec(&self, prec: Prec) -> Self {
        Poly {
            coeffs: self.coeffs.iter().map(|c| Complex::with_val(prec.bits(), c)).collect(),
            bits: prec.bits(),
        }
    }

    pub fn to_c64(&self) -> Vec<num_complex::Complex64> {
        self.coeffs.iter().map(super::to_c64).collect()
    }

    /// Largest coefficient magnitude as `log10`.
    pub fn max_coeff_log10(&self) -> f64 {
        self.coeffs.iter().map(|c| c.mag().log10()).fold(f64::NEG_INFINITY, f64::max)
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, o: &Poly) -> Poly {
        let bits = self.bits.max(o.bits);
        let n = self.coeffs.len().max(o.coeffs.len());
        let coeffs = (0..n)
            .map(|k| {
                let mut c = Complex::new(bits);
                if let Some(a) = self.coeffs.get(k) {
                    c += a;
                }
                if let Some(b) = o.coeffs.get(k) {
                    c += b;
                }
                c
            })
            .collect();
        Poly { coeffs, bits }
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly { coeffs: self.coeffs.iter().map(|c| Complex::with_val(self.bits, -c)).collect(), bits: self.bits }
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, o: &Poly) -> Poly {
        self + &(-o)
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, o: &Poly) -> Poly {
        let bits = self.bits.max(o.bits);
        let mut coeffs = vec![Complex::new(bits); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Poly { coeffs, bits }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use rug::Rational;

    fn rat_poly(v: &[(i64, i64)], p: Prec) -> Poly {
        Poly::new(v.iter().map(|&(a, b)| p.rat(a, b)).collect())
    }

    // Exact convolution over Q, compared after rounding.
    fn exact_mul(a: &[(i64, i64)], b: &[(i64, i64)]) -> Vec<Rational> {
        let mut out = vec![Rational::new(); a.len() + b.len() - 1];
        for (i, x) in a.iter().enumerate() {
            for (j, y) in b.iter().enumerate() {
                out[i + j] += Rational::from(*x) * Rational::from(*y);
            }
        }
        out
    }

    #[test]
    fn eval_and_derivative() {
        let p = Prec::digits(30);
        let q = rat_poly(&[(1, 1), (-3, 1), (0, 1), (2, 1)], p); // 2z^3 - 3z + 1
        let z = p.c(0.5, 1.0);
        let (v, d) = q.eval_with_derivative(&z);
        let z2 = Complex::with_val(p.bits(), &z * &z);
        let expect_v = Complex::with_val(p.bits(), &z2 * &z) * 2 - Complex::with_val(p.bits(), &z * 3) + 1;
        let expect_d = z2 * 6 - 3;
        assert!(Complex::with_val(p.bits(), &v - &expect_v).abs().real().to_f64() < 1e-25);
        assert!(Complex::with_val(p.bits(), &d - &expect_d).abs().real().to_f64() < 1e-25);
        assert_eq!(q.derivative().eval(&z), d);
        assert_eq!(q.degree(), Some(3));
    }

    #[test]
    fn monic_and_roots() {
        let p = Prec::digits(30);
        let r = vec![p.c(1.0, 0.0), p.c(-2.0, 0.5)];
        let q = Poly::from_roots(&r, p);
        assert_eq!(q.degree(), Some(2));
        for z in &r {
            assert!(q.eval(z).abs().real().to_f64() < 1e-28);
        }
        let s = q.scale(&p.c(3.0, 0.0)).monic().unwrap();
        assert!(Complex::with_val(p.bits(), &s.coeffs()[0] - &q.coeffs()[0]).abs().real().to_f64() < 1e-28);
        assert!(Poly::zero(p).monic().is_none());
    }

    proptest! {
        #[test]
        fn product_matches_exact_convolution(
            a in proptest::collection::vec((-20i64..20, 1i64..9), 1..6),
            b in proptest::collection::vec((-20i64..20, 1i64..9), 1..6),
        ) {
            let p = Prec::digits(50);
            let prod = &rat_poly(&a, p) * &rat_poly(&b, p);
            let exact = exact_mul(&a, &b);
            for (c, e) in prod.coeffs().iter().zip(&exact) {
                let e = Complex::with_val(p.bits(), e);
                let d = Complex::with_val(p.bits(), c - &e).abs().real().to_f64();
                prop_assert!(d <= 1e-45 * (1.0 + e.abs().real().to_f64()));
            }
        }

        #[test]
        fn ring_laws(
            a in proptest::collection::vec(-50i64..50, 1..5),
            b in proptest::collection::vec(-50i64..50, 1..5),
            c in proptest::collection::vec(-50i64..50, 1..5),
        ) {
            let p = Prec::digits(30);
            let mk = |v: &Vec<i64>| Poly::new(v.iter().map(|&x| p.ci(x)).collect());
            let (a, b, c) = (mk(&a), mk(&b), mk(&c));
            // integer coefficients are exact here
            prop_assert_eq!((&a * &b).trimmed(), (&b * &a).trimmed());
            prop_assert_eq!((&a * &(&b + &c)).trimmed(), (&(&a * &b) + &(&a * &c)).trimmed());
            prop_assert_eq!((&(&a - &b) + &b).trimmed(), a.clone().trimmed());
        }
    }
}
