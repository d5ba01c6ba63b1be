use crate::arith::{Field, Poly, Prec, SeriesInf};
use crate::error::{Error, Result};
use rug::Complex;

/// `c_0 + A_1/(z - B_1 - A_2/(z - B_2 - ...))`.
#[derive(Clone, Debug)]
pub struct JFraction {
    pub c0: Complex,
    pub a: Vec<Complex>,
    pub b: Vec<Complex>,
    /// Set when some `A_k` vanished: the series is (numerically) rational
    /// and the fraction terminated early.
    pub terminated: bool,
}

impl JFraction {
    pub fn depth(&self) -> usize {
        self.a.len()
    }

    /// Value of the `n`-level truncate, evaluated bottom-up.
    pub fn eval(&self, n: usize, z: &Complex) -> Result<Complex> {
        if n > self.depth() {
            return Err(Error::Degenerate(format!("depth {} < {}", self.depth(), n)));
        }
        let bits = self.c0.prec().0.max(z.prec().0);
        let mut t = Complex::new(bits);
        for k in (0..n).rev() {
            let d = Complex::with_val(bits, z - &self.b[k]) - &t;
            if d.is_zero() {
                return Err(Error::Degenerate("pole of the truncated fraction".into()));
            }
            t = Complex::with_val(bits, &self.a[k] / &d);
        }
        Ok(t + &self.c0)
    }

    /// Denominators `Q_0 .. Q_n` from
    /// `Q_{k+1} = (z - B_{k+1}) Q_k - A_{k+1} Q_{k-1}`.
    pub fn denominators(&self, n: usize) -> Vec<Poly> {
        let prec = Prec::from_bits(self.c0.prec().0);
        let mut out = vec![Poly::one(prec)];
        if n == 0 {
            return out;
        }
        let z = Poly::new(vec![prec.zero(), prec.one()]);
        out.push(&z - &Poly::new(vec![self.b[0].clone()]));
        for k in 1..n.min(self.depth()) {
            let lin = &z - &Poly::new(vec![self.b[k].clone()]);
            let next = &(&lin * &out[k]) - &out[k - 1].scale(&self.a[k]);
            out.push(next);
        }
        out
    }
}

/// Functional Euclid algorithm: repeatedly split off `A/(z - B - tail)`
/// from the series tail. Needs `c_0..c_{2K}`.
pub fn jfraction_coeffs(s: &SeriesInf, depth: usize) -> Result<JFraction> {
    if s.order() < 2 * depth {
        return Err(Error::Degenerate(format!("need {} coefficients for depth {}", 2 * depth + 1, depth)));
    }
    let prec = s.prec();
    let bits = s.bits();
    let c0 = s.coeff(0).clone();
    // tail in powers w^1..w^N stored from index 0
    let mut tail: Vec<Complex> = s.coeffs()[1..].to_vec();
    let scale = tail.iter().map(|c| Field::mag(c).0).fold(f64::NEG_INFINITY, f64::max);
    let thr = prec.get() as f64 - 10.0;
    let mut a = Vec::new();
    let mut b = Vec::new();
    let mut terminated = false;
    for _ in 0..depth {
        let lead = tail.first().cloned();
        let tail_mag = tail.iter().map(|c| Field::mag(c).0).fold(f64::NEG_INFINITY, f64::max);
        let ak = match lead {
            Some(x) if Field::mag(&x).0 > scale.max(tail_mag) - thr * crate::arith::LOG2_10 => x,
            _ => {
                terminated = true;
                break;
            }
        };
        // u = (tail / (A w))^{-1}
        let normed: Vec<Complex> = tail.iter().map(|c| Complex::with_val(bits, c / &ak)).collect();
        let u = SeriesInf::new(normed).recip().unwrap();
        let uc = u.coeffs();
        b.push(Complex::with_val(bits, -&uc[1]));
        a.push(ak);
        tail = uc[2..].iter().map(|c| Complex::with_val(bits, -c)).collect();
        if tail.is_empty() {
            break;
        }
    }
    Ok(JFraction { c0, a, b, terminated })
}
