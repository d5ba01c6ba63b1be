use super::LOG2_10;
use rug::ops::NegAssign;
use rug::{Complex, Float};
use std::cmp::Ordering;

/// Magnitude key stored as `log2 |x|`, so that comparisons never under- or
/// overflow whatever the exponent range of the operands.
#[derive(Clone, Copy, Debug, PartialEq, PartialOrd)]
pub struct Mag(pub f64);

impl Mag {
    pub fn log10(self) -> f64 {
        self.0 / LOG2_10
    }
}

/// The scalar operations the eliminator needs. Implemented for real and
/// complex multiprecision numbers.
pub trait Field: Clone {
    fn mag(&self) -> Mag;
    fn is_zero_val(&self) -> bool;
    fn one_like(&self) -> Self;
    fn zero_like(&self) -> Self;
    fn div_by(&self, d: &Self) -> Self;
    /// `self += a * b`
    fn add_mul(&mut self, a: &Self, b: &Self);
    fn negate(&mut self);
}

impl Field for Float {
    fn mag(&self) -> Mag {
        if self.is_zero() || !self.is_finite() {
            return Mag(f64::NEG_INFINITY);
        }
        let (m, e) = self.to_f64_exp();
        Mag(m.abs().log2() + e as f64)
    }
    fn is_zero_val(&self) -> bool {
        self.is_zero()
    }
    fn one_like(&self) -> Self {
        Float::with_val(self.prec(), 1)
    }
    fn zero_like(&self) -> Self {
        Float::new(self.prec())
    }
    fn div_by(&self, d: &Self) -> Self {
        Float::with_val(self.prec().max(d.prec()), self / d)
    }
    fn add_mul(&mut self, a: &Self, b: &Self) {
        *self += a * b;
    }
    fn negate(&mut self) {
        self.neg_assign();
    }
}

impl Field for Complex {
    fn mag(&self) -> Mag {
        let a = Field::mag(self.real());
        let b = Field::mag(self.imag());
        if a > b {
            a
        } else {
            b
        }
    }
    fn is_zero_val(&self) -> bool {
        self.is_zero()
    }
    fn one_like(&self) -> Self {
        Complex::with_val(self.prec(), 1)
    }
    fn zero_like(&self) -> Self {
        Complex::new(self.prec())
    }
    fn div_by(&self, d: &Self) -> Self {
        Complex::with_val(self.prec().0.max(d.prec().0), self / d)
    }
    fn add_mul(&mut self, a: &Self, b: &Self) {
        let (ar, ai) = (a.real(), a.imag());
        let (br, bi) = (b.real(), b.imag());
        let (re, im) = self.as_mut_real_imag();
        *re += ar * br;
        *re -= ai * bi;
        *im += ar * bi;
        *im += ai * br;
    }
    fn negate(&mut self) {
        self.neg_assign();
    }
}

/// Outcome of [`nullspace`].
#[derive(Clone, Debug)]
pub struct Nullspace<T> {
    /// A null vector. When the nullity exceeds one this is the basis vector
    /// whose last free entry is 1 and the other free entries are 0.
    pub vector: Vec<T>,
    pub rank: usize,
    pub nullity: usize,
    /// `log10` of smallest accepted pivot over largest entry.
    pub pivot_ratio_log10: f64,
}

/// Null space of a `rows x cols` matrix by Gaussian elimination with full
/// pivoting. Pivots below `10^(-threshold_digits)` times the largest entry
/// are treated as zero. The matrix is consumed.
pub fn nullspace<T: Field>(mut a: Vec<Vec<T>>, threshold_digits: f64) -> Nullspace<T> {
    let rows = a.len();
    let cols = a.first().map_or(0, |r| r.len());
    assert!(cols > 0 && a.iter().all(|r| r.len() == cols));
    let mut perm: Vec<usize> = (0..cols).collect();
    let mut maxmag = Mag(f64::NEG_INFINITY);
    for r in &a {
        for x in r {
            let m = x.mag();
            if m > maxmag {
                maxmag = m;
            }
        }
    }
    let cutoff = maxmag.0 - threshold_digits * LOG2_10;
    let mut rank = 0;
    let mut min_piv = maxmag;
    let steps = rows.min(cols);
    for k in 0..steps {
        let mut best = (Mag(f64::NEG_INFINITY), k, k);
        for (i, row) in a.iter().enumerate().skip(k) {
            for (j, x) in row.iter().enumerate().skip(k) {
                let m = x.mag();
                if m.partial_cmp(&best.0) == Some(Ordering::Greater) {
                    best = (m, i, j);
                }
            }
        }
        if !(best.0 .0 > cutoff) {
            break;
        }
        let (m, pi, pj) = best;
        a.swap(k, pi);
        if pj != k {
            for row in a.iter_mut() {
                row.swap(k, pj);
            }
            perm.swap(k, pj);
        }
        if m < min_piv {
            min_piv = m;
        }
        let (top, bottom) = a.split_at_mut(k + 1);
        let prow = &top[k];
        for row in bottom.iter_mut() {
            if row[k].is_zero_val() {
                continue;
            }
            let mut f = row[k].div_by(&prow[k]);
            f.negate();
            for j in k + 1..cols {
                row[j].add_mul(&f, &prow[j]);
            }
            row[k] = row[k].zero_like();
        }
        rank = k + 1;
    }
    let nullity = cols - rank;
    let proto = a[0][0].zero_like();
    let mut y: Vec<T> = vec![proto.clone(); cols];
    if nullity > 0 {
        y[cols - 1] = proto.one_like();
        for k in (0..rank).rev() {
            let mut s = proto.clone();
            for j in k + 1..cols {
                if !y[j].is_zero_val() {
                    s.add_mul(&a[k][j], &y[j]);
                }
            }
            let mut v = s.div_by(&a[k][k]);
            v.negate();
            y[k] = v;
        }
    }
    let mut vector = vec![proto; cols];
    for (k, v) in y.into_iter().enumerate() {
        vector[perm[k]] = v;
    }
    Nullspace {
        vector,
        rank,
        nullity,
        pivot_ratio_log10: (min_piv.0 - maxmag.0) / LOG2_10,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rug::Rational;

    fn f(bits: u32, v: i64) -> Float {
        Float::with_val(bits, v)
    }

    #[test]
    fn rank_deficient_real() {
        // rows: [1 2 3], [2 4 6] -> nullity 2
        let a = vec![vec![f(100, 1), f(100, 2), f(100, 3)], vec![f(100, 2), f(100, 4), f(100, 6)]];
        let ns = nullspace(a, 25.0);
        assert_eq!(ns.rank, 1);
        assert_eq!(ns.nullity, 2);
    }

    #[test]
    fn exact_rational_oracle() {
        // 2x3 system with known rational null vector (1, -2, 1) for
        // rows [1 1 1], [1 2 3].
        let bits = 200;
        let a = vec![
            vec![f(bits, 1), f(bits, 1), f(bits, 1)],
            vec![f(bits, 1), f(bits, 2), f(bits, 3)],
        ];
        let ns = nullspace(a, 50.0);
        assert_eq!(ns.nullity, 1);
        let v = &ns.vector;
        let r0 = Float::with_val(bits, &v[0] / &v[2]);
        let r1 = Float::with_val(bits, &v[1] / &v[2]);
        assert_eq!(r0, 1);
        assert_eq!(r1, -2);
    }

    #[test]
    fn complex_hilbert_like() {
        // Rows i of (1/(i+j+1)) * (1+i) for a 6x7 system; residual tiny.
        let bits = 400;
        let m = 6;
        let mut a = Vec::new();
        for i in 0..m {
            let mut row = Vec::new();
            for j in 0..=m {
                let r = Rational::from((1, (i + j + 1) as i64));
                row.push(Complex::with_val(bits, (r, j as i64)));
            }
            a.push(row);
        }
        let keep = a.clone();
        let ns = nullspace(a, 100.0);
        assert_eq!(ns.nullity, 1);
        for row in keep {
            let mut s = Complex::new(bits);
            for (x, y) in row.iter().zip(&ns.vector) {
                s += x * y;
            }
            assert!(s.abs().real().to_f64() < 1e-90);
        }
    }
}
