use crate::arith::{Num, Poly, Prec};
use rug::Complex;

/// `P_n^{(-alpha, alpha)}` from the three-term recurrence for Jacobi
/// polynomials `P_n^{(a,b)}`.
pub fn jacobi_oracle(n: usize, alpha: &Num, prec: Prec) -> Poly {
    let bits = prec.bits();
    let al = alpha.eval(prec);
    let a = Complex::with_val(bits, -&al);
    let b = al;
    let one = Poly::one(prec);
    if n == 0 {
        return one;
    }
    let ab = Complex::with_val(bits, &a + &b);
    // P_1 = (a - b)/2 + (1 + (a+b)/2) x
    let c0 = Complex::with_val(bits, &a - &b) / 2u32;
    let c1 = Complex::with_val(bits, &ab / 2u32) + 1u32;
    let mut prev = one;
    let mut cur = Poly::new(vec![c0, c1]);
    let x = Poly::new(vec![prec.zero(), prec.one()]);
    for k in 2..=n {
        let k = k as u32;
        let s = Complex::with_val(bits, &ab + 2 * k); // 2k + a + b
        let lhs = Complex::with_val(bits, &ab + k) * (2 * k) * Complex::with_val(bits, &s - 2u32);
        let m1 = Complex::with_val(bits, &s - 1u32);
        let lin_x = Complex::with_val(bits, &s * Complex::with_val(bits, &s - 2u32)) * &m1;
        let a2 = Complex::with_val(bits, &a * &a);
        let b2 = Complex::with_val(bits, &b * &b);
        let lin_c = Complex::with_val(bits, a2 - b2) * &m1;
        let rk = Complex::with_val(bits, &a + (k - 1)) * Complex::with_val(bits, &b + (k - 1)) * &s * 2u32;
        let t1 = &(&x.scale(&lin_x) + &Poly::new(vec![lin_c])) * &cur;
        let t2 = prev.scale(&rk);
        let inv = Complex::with_val(bits, 1) / &lhs;
        let next = (&t1 - &t2).scale(&inv);
        prev = cur;
        cur = next;
    }
    cur
}
