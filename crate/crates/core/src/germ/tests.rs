use super::*;
use crate::arith::{abs_f64, dist_f64};
use proptest::prelude::*;

fn n(s: &str) -> Num {
    Num::parse(s).unwrap()
}

fn binom(alpha: &Rational, k: u32) -> Rational {
    let mut r = Rational::from(1);
    for j in 0..k {
        r *= Rational::from(alpha - j) / (j + 1);
    }
    r
}

#[test]
fn jacobi_germ_matches_exact_binomial_convolution() {
    // ((1+w)/(1-w))^a = sum_j C(a,j) w^j * sum_i C(-a,i) (-w)^i
    let a = Rational::from((1, 3));
    let germ = Germ::jacobi(Num::real(a.clone())).unwrap();
    let p = Prec::digits(50);
    let s = germ.expand_at_infinity(12, p).unwrap();
    let na = Rational::from(-&a);
    for k in 0..=12u32 {
        let mut c = Rational::new();
        for j in 0..=k {
            let sign = if (k - j) % 2 == 0 { 1 } else { -1 };
            c += binom(&a, j) * binom(&na, k - j) * sign;
        }
        let e = Complex::with_val(p.bits(), &c);
        assert!(dist_f64(s.coeff(k as usize), &e) < 1e-45, "k={k}");
    }
    assert!(dist_f64(s.coeff(1), &p.rat(2, 3)) < 1e-48);
}

#[test]
fn decaying_product_is_shifted() {
    // (z-1)^(-1/2) (z+1)^(-1/2) = 1/z + O(z^-3)
    let g = Germ::product(vec![Factor::new(n("1"), n("-1/2")), Factor::new(n("-1"), n("-1/2"))]).unwrap();
    let s = g.expand_at_infinity(5, Prec::digits(30)).unwrap();
    assert!(s.coeff(0).is_zero());
    assert!(dist_f64(s.coeff(1), &Prec::digits(30).ci(1)) < 1e-28);
    assert!(abs_f64(s.coeff(2)) < 1e-28);
    assert!(dist_f64(s.coeff(3), &Prec::digits(30).rat(1, 2)) < 1e-28);
}

#[test]
fn rejects_non_integer_exponent_sum_at_infinity() {
    let e = Germ::product(vec![Factor::new(n("1"), n("1/3"))]);
    assert!(matches!(e, Err(Error::InvalidGerm(_))));
    let e = Germ::product(vec![Factor::new(n("1"), n("1")), Factor::new(n("2"), n("1"))]);
    assert!(matches!(e, Err(Error::InvalidGerm(_))));
}

#[test]
fn eval_agrees_with_series_far_out() {
    let g = Germ::product(vec![
        Factor::new(n("-1.2+0.8i"), n("1/3")),
        Factor::new(n("0.9+1.5i"), n("1/3")),
        Factor::new(n("0.5-1.2i"), n("-2/3")),
    ])
    .unwrap();
    let p = Prec::digits(40);
    let s = g.expand_at_infinity(300, p).unwrap();
    for z in [p.c(8.0, 3.0), p.c(-6.0, -5.0), p.c(0.0, 9.0)] {
        let a = g.eval(&z).unwrap();
        let b = s.eval_truncated(&z);
        assert!(dist_f64(&a, &b) < 1e-30, "{}", dist_f64(&a, &b));
    }
}

#[test]
fn principal_sheet_is_continuous_on_a_large_circle() {
    let g = Germ::product(vec![
        Factor::new(n("-1.2+0.8i"), n("1/3")),
        Factor::new(n("0.9+1.5i"), n("1/3")),
        Factor::new(n("0.5-1.2i"), n("-2/3")),
    ])
    .unwrap();
    let p = Prec::digits(30);
    let mut prev = g.eval(&p.c(3.0, 0.0)).unwrap();
    for k in 1..=720 {
        let t = k as f64 * std::f64::consts::PI / 360.0;
        let v = g.eval(&p.c(3.0 * t.cos(), 3.0 * t.sin())).unwrap();
        assert!(dist_f64(&v, &prev) < 0.05);
        prev = v;
    }
}

#[test]
fn log_terms() {
    let g = Germ::new(
        Center::Infinity,
        vec![WeightedTerm { weight: n("2"), term: Term::Log { a: n("-1+i"), b: n("1-0.5i") } }],
    )
    .unwrap();
    let p = Prec::digits(40);
    let s = g.expand_at_infinity(200, p).unwrap();
    let z = p.c(4.0, -7.0);
    assert!(dist_f64(&g.eval(&z).unwrap(), &s.eval_truncated(&z)) < 1e-30);
    // finite centre
    let h = Germ::new(
        Center::Point(n("0")),
        vec![WeightedTerm { weight: n("1"), term: Term::Log { a: n("2"), b: n("3i") } }],
    )
    .unwrap();
    let t = h.expand_at_point(120, p).unwrap();
    let z = p.c(0.3, 0.4);
    assert!(dist_f64(&h.eval(&z).unwrap(), &t.eval_truncated(&z)) < 1e-30);
}

#[test]
fn point_centred_normalization() {
    // ((1-2z)(2-z))^(-1/2) with value 1/sqrt(2) at 0
    let g = Germ::new(
        Center::Point(n("0")),
        vec![WeightedTerm {
            weight: n("2^(-1/2)"),
            term: Term::Product(vec![Factor::new(n("1/2"), n("-1/2")), Factor::new(n("2"), n("-1/2"))]),
        }],
    )
    .unwrap();
    let p = Prec::digits(40);
    let v0 = g.expand_at_point(3, p).unwrap().coeffs()[0].clone();
    assert!(dist_f64(&v0, &p.c(std::f64::consts::FRAC_1_SQRT_2, 0.0)) < 1e-15);
    let z = p.c(0.1, 0.05);
    let direct = {
        let a = Complex::with_val(p.bits(), 1 - Complex::with_val(p.bits(), &z * 2u32));
        let b = Complex::with_val(p.bits(), 2 - &z);
        (a * b).sqrt().recip()
    };
    assert!(dist_f64(&g.eval(&z).unwrap(), &direct) < 1e-35);
    let t = g.expand_at_point(150, p).unwrap();
    assert!(dist_f64(&t.eval_truncated(&z), &direct) < 1e-30);
}

#[test]
fn cut_segments_of_three_segment_germs() {
    let g = Germ::product(vec![
        Factor::new(n("-2.5"), n("1/3")),
        Factor::new(n("-1.3"), n("-1/3")),
        Factor::new(n("-0.3"), n("1/2")),
        Factor::new(n("0.3"), n("-1/2")),
        Factor::new(n("1.3"), n("-1/3")),
        Factor::new(n("2.5"), n("1/3")),
    ])
    .unwrap();
    let segs = g.cut_segments_f64().unwrap();
    assert_eq!(segs, vec![(-2.5, -1.3), (-0.3, 0.3), (1.3, 2.5)]);
    assert!(g.eval(&Prec::digits(30).c(0.1, 0.0)).is_err());
    assert!(g.eval(&Prec::digits(30).c(1.0, 0.0)).is_ok());
}

#[test]
fn boundary_values_are_limits() {
    let g = Germ::jacobi(n("1/3")).unwrap();
    let p = Prec::digits(60);
    let x = p.float(0.37);
    let (fp, fm) = g.boundary_values(&x).unwrap();
    let eps = 1e-40;
    let up = g.eval(&p.c(0.37, eps)).unwrap();
    let dn = g.eval(&p.c(0.37, -eps)).unwrap();
    assert!(dist_f64(&fp, &up) < 1e-35);
    assert!(dist_f64(&fm, &dn) < 1e-35);
    // jump = -2i sin(pi/3) |(1+x)/(1-x)|^(1/3)
    let m = ((1.37f64) / 0.63).powf(1.0 / 3.0);
    let j = Complex::with_val(p.bits(), &fp - &fm);
    assert!((j.imag().to_f64() + 2.0 * (std::f64::consts::PI / 3.0).sin() * m).abs() < 1e-14);
    // relative form near the endpoint
    let one = p.float(1.0);
    let off = Float::with_val(p.bits(), -1e-50);
    let (fp2, _) = g.boundary_values_rel(&one, &off).unwrap();
    let expect = (2.0f64 / 1e-50).powf(1.0 / 3.0);
    assert!((abs_f64(&fp2) / expect - 1.0).abs() < 1e-12);
}

#[test]
fn off_f_branch_for_single_segment() {
    let g = Germ::jacobi(n("1/3")).unwrap();
    let p = Prec::digits(40);
    for (re, im) in [(0.3, 0.2), (-2.0, -1.0), (5.0, 0.01), (0.0, -3.0)] {
        let z = p.c(re, im);
        let h = {
            let num = Complex::with_val(p.bits(), 1 + &z);
            let den = Complex::with_val(p.bits(), 1 - &z);
            (num / den).pow(Float::with_val(p.bits(), Rational::from((1, 3))))
        };
        assert!(dist_f64(&g.eval_off_f(&z).unwrap(), &h) < 1e-35);
    }
    let v = g.eval_off_f(&p.c(0.0, 0.0)).unwrap();
    assert!(dist_f64(&v, &p.ci(1)) < 1e-35);
    assert!(g.eval_off_f(&p.c(2.0, 0.0)).is_err());
    let sb = g.second_branch(p).unwrap();
    assert!(dist_f64(&sb.constant, &p.ci(-1)) < 1e-35);
    assert!(Germ::jacobi(n("1/2")).unwrap().second_branch(p).is_err());
}

#[test]
fn mixed_exponents_have_no_common_off_f_branch() {
    let g = Germ::segments(&[
        (n("-2.5"), n("-1.3"), n("1/3")),
        (n("-0.8"), n("0.8"), n("-1/3")),
        (n("1.3"), n("2.5"), n("1/3")),
    ])
    .unwrap();
    assert!(g.off_f_phase(Prec::digits(30)).is_err());
    let g = Germ::segments(&[
        (n("-2.5"), n("-1.3"), n("1/3")),
        (n("-0.8"), n("0.8"), n("1/3")),
        (n("1.3"), n("2.5"), n("1/3")),
    ])
    .unwrap();
    let s = g.off_f_phase(Prec::digits(30)).unwrap();
    assert!((s.to_f64() + 1.0 / 3.0).abs() < 1e-25);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn square_germ_matches_series_product(
        pts in proptest::collection::vec((-30i32..30, -30i32..30), 2..4),
        e in proptest::collection::vec(-5i32..5, 2..4),
    ) {
        let k = pts.len().min(e.len());
        let mut fs: Vec<Factor> = (0..k)
            .map(|j| Factor::new(
                Num::gauss(Rational::from((pts[j].0, 10)), Rational::from((pts[j].1, 10))),
                Num::ratio(e[j] as i64, 6)))
            .collect();
        let s: i64 = e[..k].iter().map(|&x| x as i64).sum();
        // close the exponent sum to zero with one more point
        fs.push(Factor::new(Num::ratio(37, 10), Num::ratio(-s, 6)));
        let g = Germ::product(fs).unwrap();
        let p = Prec::digits(40);
        let a = g.expand_at_infinity(25, p).unwrap();
        let sq = g.square().unwrap().expand_at_infinity(25, p).unwrap();
        let m = a.mul(&a);
        for j in 0..=25 {
            let scale = 1.0 + abs_f64(sq.coeff(j));
            prop_assert!(dist_f64(sq.coeff(j), m.coeff(j)) <= 1e-33 * scale);
        }
    }

    #[test]
    fn taylor_recurrence_matches_eval(re in -0.2f64..0.2, im in -0.2f64..0.2) {
        let g = Germ::new(
            Center::Point(n("0")),
            vec![WeightedTerm {
                weight: n("1"),
                term: Term::Product(vec![Factor::new(n("0.9-1.1i"), n("1/4")), Factor::new(n("0.1+0.2i"), n("-1/4"))]),
            }],
        ).unwrap();
        let p = Prec::digits(40);
        let t = g.expand_at_point(200, p).unwrap();
        let z = p.c(re * 0.5, im * 0.5);
        prop_assert!(dist_f64(&t.eval_truncated(&z), &g.eval(&z).unwrap()) < 1e-25);
    }
}

#[test]
fn branch_across_one_segment_is_real_on_it() {
    let g = Germ::segments(&[
        (n("-2.5"), n("-1.3"), n("1/3")),
        (n("-0.3"), n("0.3"), n("1/2")),
        (n("1.3"), n("2.5"), n("-1/3")),
    ])
    .unwrap();
    let p = Prec::digits(40);
    for (k, x) in [(0usize, -1.9), (1, 0.1), (2, 1.7)] {
        let z = Complex::with_val(p.bits(), (x, 1e-30));
        let v = g.eval_across(&z, k).unwrap();
        assert!(v.imag().to_f64().abs() < 1e-20, "segment {k}");
        assert!(v.real().to_f64().abs() > 1e-3);
    }
    assert!(g.eval_across(&Complex::with_val(p.bits(), (0.0, 1.0)), 3).is_err());
    let common = Germ::segments(&[(n("-1"), n("1"), n("1/3"))]).unwrap();
    let z = Complex::with_val(p.bits(), (0.4, 0.7));
    let d = Complex::with_val(p.bits(), common.eval_across(&z, 0).unwrap() - common.eval_off_f(&z).unwrap());
    assert!(d.abs().real().to_f64() < 1e-30);
}
