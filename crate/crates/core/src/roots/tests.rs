use super::*;
use crate::arith::{Num, Prec};
use crate::germ::Germ;
use crate::pade::pade_for_germ;
use proptest::prelude::*;

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

#[test]
fn quadratic() {
    let p = Prec::digits(50);
    let q = Poly::new(vec![p.ci(-1), p.zero(), p.ci(1)]);
    let mut r = find_roots(&q).to_c64();
    r.sort_by(|a, b| a.re.total_cmp(&b.re));
    assert!((r[0] - c(-1.0, 0.0)).norm() < 1e-40);
    assert!((r[1] - c(1.0, 0.0)).norm() < 1e-40);
}

#[test]
fn tenths_from_expanded_product() {
    let prec = Prec::digits(80);
    let roots: Vec<Complex> = (1..=10).map(|k| prec.rat(k, 10)).collect();
    let q = Poly::from_roots(&roots, prec);
    let zs = find_roots(&q);
    assert!(zs.all_converged());
    assert_eq!(zs.len(), 10);
    for r in &roots {
        let best = zs.roots.iter().map(|z| crate::arith::dist_f64(z, r)).fold(f64::INFINITY, f64::min);
        assert!(best < 10f64.powf(-40.0 + 8.0), "{best}");
    }
}

#[test]
fn zeros_at_origin_with_multiplicity() {
    let p = Prec::digits(30);
    let q = Poly::new(vec![p.zero(), p.zero(), p.ci(1)]);
    let zs = find_roots(&q);
    assert_eq!(zs.len(), 2);
    let m = counting_measure(&zs, 2);
    assert_eq!(m.mass, 1.0);
    assert!(m.points.iter().all(|(z, _)| z.norm() == 0.0));
    let k = find_roots(&Poly::one(p));
    assert!(counting_measure(&k, 3).points.is_empty());
}

#[test]
fn jacobi_denominator_zeros_on_interval() {
    let g = Germ::jacobi(Num::ratio(1, 3)).unwrap();
    let pair = pade_for_germ(&g, 100, &crate::arith::PrecisionPolicy::default()).unwrap();
    let zs = find_roots(&pair.p1);
    assert!(zs.all_converged());
    assert_eq!(zs.len(), 100);
    for z in zs.to_c64() {
        assert!(z.im.abs() < 1e-6 && z.re.abs() < 1.0 + 1e-6, "{z}");
    }
    let ks = kolmogorov_distance(&counting_measure(&zs, 100), &DensityRef::arcsine(), None).unwrap();
    assert!(ks.distance < 0.05, "{}", ks.distance);
}

#[test]
fn companion_oracle_agrees() {
    let p = Prec::digits(40);
    let coeffs = [c(2.0, -1.0), c(0.5, 0.0), c(-3.0, 1.0), c(0.0, 1.0), c(1.0, 0.0), c(0.25, 0.5)];
    let q = Poly::new(coeffs.iter().map(|z| p.c(z.re, z.im)).collect());
    let a = find_roots(&q).to_c64();
    let b = companion_roots(&coeffs);
    assert_eq!(b.len(), 5);
    for z in &b {
        let best = a.iter().map(|w| (w - z).norm()).fold(f64::INFINITY, f64::min);
        assert!(best < 1e-10);
    }
}

#[test]
fn uniform_against_arcsine() {
    let pts: Vec<Complex64> = (0..20000).map(|k| c(-1.0 + (2 * k + 1) as f64 / 20000.0, 0.0)).collect();
    let m = EmpiricalMeasure::from_points(&pts, pts.len());
    let d = kolmogorov_distance(&m, &DensityRef::arcsine(), None).unwrap().distance;
    assert!((d - 0.1052568).abs() < 1e-3, "{d}");
    let exact = DensityRef::uniform(-1.0, 1.0);
    let d2 = kolmogorov_distance(&m, &exact, None).unwrap().distance;
    assert!(d2 < 1e-4);
}

#[test]
fn reference_mass_is_checked() {
    let bad = DensityRef::new(vec![(0.0, 1.0)], |_, _, _| 2.0);
    assert!(kolmogorov_distance(&EmpiricalMeasure::default(), &bad, None).is_err());
}

#[test]
fn window_reports_outside_mass() {
    // Cauchy density on the line
    let r = DensityRef::new(vec![(f64::NEG_INFINITY, f64::INFINITY)], |x, _, _| 1.0 / (std::f64::consts::PI * (1.0 + x * x)));
    assert!((r.total_mass() - 1.0).abs() < 1e-9);
    let pts = [c(0.0, 0.0), c(20.0, 0.0), c(0.0, 1.0)];
    let ks = kolmogorov_distance(&EmpiricalMeasure::from_points(&pts, 3), &r, Some(10.0)).unwrap();
    assert!((ks.outside_mass - 1.0 / 3.0).abs() < 1e-12);
    assert!((ks.nonreal_mass - 1.0 / 3.0).abs() < 1e-12);
    let expect = 1.0 - 2.0 * (10f64).atan() / std::f64::consts::PI;
    assert!((ks.ref_outside_mass - expect).abs() < 1e-9);
}

#[test]
fn constructed_doublet() {
    let limit = LimitSet::real_intervals(&[(-1.0, 1.0)], 0.05);
    let pairs = froissart_pairs(&[c(2.0, 2.0), c(0.5, 0.0)], &[c(2.0 + 1e-4, 2.0), c(0.5, 1e-4)], 1e-3, &limit);
    assert_eq!(pairs.len(), 1);
    assert_eq!((pairs[0].zero, pairs[0].pole), (0, 0));
}

#[test]
fn constructed_triplet() {
    let limit = LimitSet::real_intervals(&[(1.0, f64::INFINITY), (f64::NEG_INFINITY, -1.0)], 0.02);
    let a = [c(0.3, 0.4), c(5.0, 0.0)];
    let b = [c(0.3, 0.4 + 1e-5), c(-7.0, 0.0)];
    let t = froissart_triplets([&a, &b, &[c(0.3 + 1e-5, 0.4)]], 1e-3, &limit);
    assert_eq!(t.len(), 1);
    assert_eq!(t[0].indices, [0, 0, 0]);
}

fn pts() -> impl Strategy<Value = Vec<Complex64>> {
    prop::collection::vec((-3.0f64..3.0, -3.0f64..3.0).prop_map(|(a, b)| c(a, b)), 0..12)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn pairs_symmetric_and_disjoint(a in pts(), b in pts()) {
        let limit = LimitSet::real_intervals(&[(-1.0, 1.0)], 0.05);
        let p = froissart_pairs(&a, &b, 0.8, &limit);
        let q = froissart_pairs(&b, &a, 0.8, &limit);
        let mut pp: Vec<_> = p.iter().map(|x| (x.zero, x.pole)).collect();
        let mut qq: Vec<_> = q.iter().map(|x| (x.pole, x.zero)).collect();
        pp.sort();
        qq.sort();
        prop_assert_eq!(&pp, &qq);
        let mut zs: Vec<_> = pp.iter().map(|x| x.0).collect();
        zs.dedup();
        prop_assert_eq!(zs.len(), pp.len());
    }

    #[test]
    fn ks_triangle_inequality(a in prop::collection::vec(-1.0f64..1.0, 1..15),
                              b in prop::collection::vec(-1.0f64..1.0, 1..15),
                              d in prop::collection::vec(-1.0f64..1.0, 1..15)) {
        // distances between step functions through a histogram reference
        let step = |xs: &[f64]| {
            let mut s = xs.to_vec();
            s.sort_by(f64::total_cmp);
            s
        };
        let cdf = |s: &[f64], x: f64| s.iter().filter(|&&y| y <= x).count() as f64 / s.len() as f64;
        let (a, b, d) = (step(&a), step(&b), step(&d));
        let grid: Vec<f64> = a.iter().chain(&b).chain(&d).cloned().collect();
        let dist = |u: &[f64], v: &[f64]| grid.iter().map(|&x| (cdf(u, x) - cdf(v, x)).abs()).fold(0.0, f64::max);
        prop_assert!(dist(&a, &d) <= dist(&a, &b) + dist(&b, &d) + 1e-12);
        // and the library statistic against a uniform reference stays in [0,1]
        let m = EmpiricalMeasure::from_points(&a.iter().map(|&x| c(x, 0.0)).collect::<Vec<_>>(), a.len());
        let k = kolmogorov_distance(&m, &DensityRef::uniform(-1.0, 1.0), None).unwrap().distance;
        prop_assert!((0.0..=1.0).contains(&k));
    }

    #[test]
    fn real_polys_conjugate_closed(r in prop::collection::vec(-2.0f64..2.0, 2..7)) {
        let p = Prec::digits(40);
        let q = Poly::new(r.iter().map(|&x| p.c(x, 0.0)).collect());
        prop_assume!(r.last().unwrap().abs() > 0.1);
        let zs = find_roots(&q).to_c64();
        for z in &zs {
            let best = zs.iter().map(|w| (w - z.conj()).norm()).fold(f64::INFINITY, f64::min);
            prop_assert!(best < 1e-15);
        }
        // sum of roots against the second coefficient
        let s: Complex64 = zs.iter().sum();
        let n = r.len() - 1;
        let expect = -r[n - 1] / r[n];
        prop_assert!((s.re - expect).abs() < 1e-12 * (1.0 + expect.abs()));
    }
}
