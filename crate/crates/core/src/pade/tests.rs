use super::*;
use crate::arith::{dist_f64, Num};
use crate::germ::{Center, Factor, Term, WeightedTerm};
use proptest::prelude::*;

fn n(s: &str) -> Num {
    Num::parse(s).unwrap()
}

fn jac(alpha: &str) -> Germ {
    Germ::jacobi(n(alpha)).unwrap()
}

#[test]
fn order_one_closed_form() {
    let p = Prec::digits(50);
    let s = jac("1/3").expand_at_infinity(2, p).unwrap();
    let pair = pade_polynomials(&s, 1).unwrap();
    // P_{1,1} = z - 1/3
    assert!(dist_f64(&pair.p1.coeff(0), &p.rat(-1, 3)) < 1e-45);
    assert!(dist_f64(&pair.p1.coeff(1), &p.ci(1)) < 1e-45);
    let z = p.c(2.0, 0.5);
    let a = Complex::with_val(p.bits(), &z + p.rat(1, 3));
    let b = Complex::with_val(p.bits(), &z - p.rat(1, 3));
    assert!(dist_f64(&pair.eval(&z).unwrap(), &(a / b)) < 1e-45);
}

#[test]
fn order_zero_is_constant_term() {
    let p = Prec::digits(40);
    let s = jac("1/5").expand_at_infinity(0, p).unwrap();
    let pair = pade_polynomials(&s, 0).unwrap();
    assert!(dist_f64(&pair.eval(&p.c(3.0, 1.0)).unwrap(), &p.ci(1)) < 1e-38);
}

fn rational_germ() -> Germ {
    // (z - 1)(z + 2i) / ((z - 2)(z + 3))
    Germ::product(vec![
        Factor::new(n("1"), n("1")),
        Factor::new(n("-2i"), n("1")),
        Factor::new(n("2"), n("-1")),
        Factor::new(n("-3"), n("-1")),
    ])
    .unwrap()
}

#[test]
fn rational_function_is_reproduced() {
    let g = rational_germ();
    let pol = PrecisionPolicy::default();
    let pair = pade_for_germ(&g, 5, &pol).unwrap();
    assert_eq!(pair.effective_n, 2);
    let p = Prec::digits(100);
    for z in [p.c(0.3, 0.7), p.c(-5.0, 1.0)] {
        let v = g.eval(&z).unwrap();
        assert!(dist_f64(&pair.eval(&z).unwrap(), &v) < 1e-80);
    }
}

#[test]
fn jfraction_leading_coefficients() {
    let p = Prec::digits(60);
    let s = jac("1/3").expand_at_infinity(40, p).unwrap();
    let jf = jfraction_coeffs(&s, 20).unwrap();
    assert!(dist_f64(&jf.a[0], &p.rat(2, 3)) < 1e-55);
    assert!(dist_f64(&jf.b[0], &p.rat(1, 3)) < 1e-55);
    let v = jf.eval(1, &p.c(2.0, 0.0)).unwrap();
    assert!(dist_f64(&v, &p.c(1.4, 0.0)) < 1e-15);
    assert!(dist_f64(&jf.eval(0, &p.c(2.0, 0.0)).unwrap(), &p.ci(1)) < 1e-55);
}

#[test]
fn rational_jfraction_terminates() {
    // 1 + 1/(z - b)
    let g = Germ::new(
        Center::Infinity,
        vec![
            WeightedTerm { weight: n("1"), term: Term::Constant },
            WeightedTerm { weight: n("1"), term: Term::Product(vec![Factor::new(n("3/4"), n("-1"))]) },
        ],
    )
    .unwrap();
    let p = Prec::digits(60);
    let s = g.expand_at_infinity(10, p).unwrap();
    let jf = jfraction_coeffs(&s, 5).unwrap();
    assert!(jf.terminated);
    assert_eq!(jf.depth(), 1);
    assert!(dist_f64(&jf.a[0], &p.ci(1)) < 1e-55);
    assert!(dist_f64(&jf.b[0], &p.rat(3, 4)) < 1e-55);
}

#[test]
fn jfraction_denominators_match_pade() {
    let prec = Prec::digits(400);
    let g = Germ::product(vec![
        Factor::new(n("-1.2+0.8i"), n("1/3")),
        Factor::new(n("0.9+1.5i"), n("1/3")),
        Factor::new(n("0.5-1.2i"), n("-2/3")),
    ])
    .unwrap();
    let s = g.expand_at_infinity(40, prec).unwrap();
    let jf = jfraction_coeffs(&s, 20).unwrap();
    let qs = jf.denominators(20);
    for k in [1usize, 5, 12, 20] {
        let pair = pade_polynomials(&s, k).unwrap();
        let d = collinearity_defect_log10(&qs[k], &pair.p1);
        assert!(d < -(prec.get() as f64) / 2.0, "k={k} defect 1e{d}");
        let z = prec.c(1.7, -2.2);
        let a = jf.eval(k, &z).unwrap();
        let b = pair.eval(&z).unwrap();
        assert!(dist_f64(&a, &b) < 1e-150);
    }
}

#[test]
fn jacobi_oracle_basics() {
    let p = Prec::digits(60);
    let a = n("1/3");
    let p1 = jacobi_oracle(1, &a, p);
    assert!(dist_f64(&p1.coeff(0), &p.rat(-1, 3)) < 1e-55);
    assert!(dist_f64(&p1.coeff(1), &p.ci(1)) < 1e-55);
    assert_eq!(jacobi_oracle(0, &a, p).degree(), Some(0));
    // (z^2-1) w'' + 2(z - alpha) w' - n(n+1) w = 0
    for deg in [3usize, 9, 17] {
        let w = jacobi_oracle(deg, &a, p);
        let w1 = w.derivative();
        let w2 = w1.derivative();
        for k in 0..10 {
            let z = p.c(-1.3 + 0.3 * k as f64, 0.1 * k as f64);
            let z2m1 = Complex::with_val(p.bits(), &z * &z) - 1u32;
            let za = Complex::with_val(p.bits(), &z - p.rat(1, 3)) * 2u32;
            let r = z2m1 * w2.eval(&z) + za * w1.eval(&z) - w.eval(&z) * (deg * (deg + 1)) as u32;
            let scale = 1.0 + crate::arith::abs_f64(&w.eval(&z)) * (deg * deg) as f64;
            assert!(crate::arith::abs_f64(&r) < 1e-45 * scale);
        }
    }
}

#[test]
fn pade_denominator_is_jacobi() {
    let p = Prec::digits(100);
    let a = n("1/3");
    let s = Germ::jacobi(a.clone()).unwrap().expand_at_infinity(40, p).unwrap();
    for deg in 1..=20 {
        let pair = pade_polynomials(&s, deg).unwrap();
        let j = jacobi_oracle(deg, &a, p);
        assert!(collinearity(&pair.p1, &j) >= 1.0 - 1e-20);
        assert!(collinearity_defect_log10(&pair.p1, &j) < -20.0);
    }
}

fn fig5_pair() -> (Germ, Germ) {
    let f0 = Germ::new(
        Center::Point(n("0")),
        vec![WeightedTerm {
            weight: n("2^(-1/2)"),
            term: Term::Product(vec![Factor::new(n("1/2"), n("-1/2")), Factor::new(n("2"), n("-1/2"))]),
        }],
    )
    .unwrap();
    let finf = Germ::new(
        Center::Infinity,
        vec![
            WeightedTerm {
                weight: n("2^(-1/2)"),
                term: Term::Product(vec![Factor::new(n("1/2"), n("-1/2")), Factor::new(n("2"), n("-1/2"))]),
            },
            WeightedTerm { weight: n("1"), term: Term::Constant },
        ],
    )
    .unwrap();
    (f0, finf)
}

#[test]
fn two_point_residual_orders() {
    let (f0, finf) = fig5_pair();
    let pol = PrecisionPolicy::default();
    for orders in [TwoPointOrders::Displayed, TwoPointOrders::Alternative] {
        let r = two_point_pade(&f0, &finf, 30, orders, &pol).unwrap();
        assert!(r.cert.passes(), "{:?}", r.cert);
        assert_eq!(r.node_residuals.len(), 2);
        assert!(r.node_residuals.iter().all(|&x| x < -(r.cert.digits as f64) / 3.0));
    }
}

#[test]
fn two_point_rational_reproduction() {
    let g = rational_germ();
    // the same function as a germ at 0: value at 0 is (−1)(2i)/((−2)(3)) = i/3
    let f0 = Germ::new(
        Center::Point(n("0")),
        vec![WeightedTerm {
            weight: n("1/3i"),
            term: Term::Product(vec![
                Factor::new(n("1"), n("1")),
                Factor::new(n("-2i"), n("1")),
                Factor::new(n("2"), n("-1")),
                Factor::new(n("-3"), n("-1")),
            ]),
        }],
    )
    .unwrap();
    let p = Prec::digits(30);
    assert!(dist_f64(&f0.eval(&p.c(0.4, 0.1)).unwrap(), &g.eval(&p.c(0.4, 0.1)).unwrap()) < 1e-25);
    let r = two_point_pade(&f0, &g, 2, TwoPointOrders::Displayed, &PrecisionPolicy::default()).unwrap();
    let z = Prec::digits(80).c(0.9, -1.4);
    assert!(dist_f64(&r.eval(&z).unwrap(), &g.eval(&z).unwrap()) < 1e-60);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(5))]

    #[test]
    fn single_node_at_infinity_is_classical_pade(
        a in -9i32..9, b in -9i32..9, c in -9i32..9, d in -9i32..9, e in 1i64..5,
    ) {
        let g = Germ::product(vec![
            Factor::new(Num::gauss((a, 7).into(), (b, 5).into()), Num::ratio(e, 7)),
            Factor::new(Num::gauss((c, 3).into(), (d + 20, 9).into()), Num::ratio(-e, 7)),
        ]).unwrap();
        let nn = 6;
        let pol = PrecisionPolicy::default();
        let classical = pade_for_germ(&g, nn, &pol).unwrap();
        let spec = MultipointSpec { nodes: vec![(Node::Infinity, 2 * nn + 1, g.clone())] };
        let mp = multipoint_pade(&spec, nn, &pol).unwrap();
        let prec = pol.for_n(nn);
        for k in 0..20 {
            let t = k as f64 * 0.3;
            let z = prec.c(3.0 * t.cos() + 0.1, 3.0 * t.sin());
            let x = classical.eval(&z).unwrap();
            let y = mp.eval(&z).unwrap();
            prop_assert!(dist_f64(&x, &y) <= 1e-60 * (1.0 + crate::arith::abs_f64(&x)));
        }
    }
}
