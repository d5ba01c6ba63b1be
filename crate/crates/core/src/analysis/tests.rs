use super::nodes::ErrorEval;
use super::*;
use crate::arith::{Num, Poly, Prec, PrecisionPolicy};
use crate::germ::Germ;
use crate::hermite::{hermite_approximants, hp_for_germ, HermiteApproximants, Normalization, SignConvention};
use crate::pade::pade_for_germ;
use crate::potential::paper_densities;
use crate::roots::{kolmogorov_distance, EmpiricalMeasure, LimitSet};
use num_complex::Complex64;
use proptest::prelude::*;

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

fn hp(alpha: Num, n: usize) -> (Germ, HermiteApproximants, RealTarget) {
    let g = Germ::jacobi(alpha).unwrap();
    let t = hp_for_germ(&g, n, &PrecisionPolicy::default(), Normalization::LastFree).unwrap();
    let h = hermite_approximants(&t, SignConvention::Definition).unwrap();
    let rt = RealTarget::new(&g, Prec::digits(t.cert.digits)).unwrap();
    (g, h, rt)
}

#[test]
fn nodes_are_sign_changes_and_follow_eta_e() {
    let n = 24;
    let (_, h, rt) = hp(Num::ratio(1, 3), n);
    let ns = interpolation_nodes(&h, &rt, n, None).unwrap();
    assert!(ns.count as i64 >= 2 * n as i64 - 10, "{}", ns.count);
    assert!(ns.nodes.windows(2).all(|w| w[0] < w[1]));
    let ev = ErrorEval { h: &h, target: &rt, prec: h.den.prec() };
    for &x in &ns.nodes {
        let (l, _) = ev.at(x - 1e-10).unwrap();
        let (r, _) = ev.at(x + 1e-10).unwrap();
        assert_ne!(l.is_sign_negative(), r.is_sign_negative(), "node {x}");
    }
    let pts: Vec<Complex64> = ns.nodes.iter().map(|&x| c(x, 0.0)).collect();
    let d = paper_densities(1.0 / 3.0).unwrap();
    let ks = kolmogorov_distance(&EmpiricalMeasure::from_points(&pts, 2 * n), &d.eta_e, None).unwrap();
    assert!(ks.distance < 0.05, "{}", ks.distance);
}

#[test]
fn mirrored_exponent_mirrors_nodes() {
    let n = 12;
    let (_, h1, rt1) = hp(Num::ratio(1, 3), n);
    let (_, h2, rt2) = hp(Num::ratio(-1, 3), n);
    let a = interpolation_nodes(&h1, &rt1, n, None).unwrap().nodes;
    let mut b: Vec<f64> = interpolation_nodes(&h2, &rt2, n, None).unwrap().nodes.iter().map(|x| -x).collect();
    b.reverse();
    assert_eq!(a.len(), b.len());
    for (x, y) in a.iter().zip(&b) {
        assert!((x - y).abs() < 1e-8, "{x} {y}");
    }
}

#[test]
fn alternation_run_and_magnitudes() {
    let n = 24;
    let (_, h, rt) = hp(Num::ratio(1, 3), n);
    let ns = interpolation_nodes(&h, &rt, n, None).unwrap();
    let d = paper_densities(1.0 / 3.0).unwrap();
    let k = crate::potential::Condenser::new(&[(-1.0, 1.0)]).unwrap();
    let rep = alternation_check(&h, &rt, &ns, n, 0.1, alternation_log_weight(n, k, d.eta_e.clone())).unwrap();
    assert!(rep.run >= rep.required, "{} {}", rep.run, rep.required);
    assert!(rep.extrema.windows(2).all(|w| w[0].1 != w[1].1));
    assert!(rep.passes(0.5, 2.0), "{:?}", rep.central_range);
    let w = alternation_log_weight(n, k, d.eta_e);
    assert!(alternation_check(&h, &rt, &ns, n, 1.5, w).is_err());
}

#[test]
fn pade_rate_at_two() {
    let g = Germ::jacobi(Num::ratio(1, 3)).unwrap();
    let grid = [c(2.0, 0.0), c(0.0, 1.5)];
    let e = approximation_errors(&Family::Pade, &g, &[20, 30], &grid, &PrecisionPolicy::default()).unwrap();
    let rm = rate_map(&e, &grid, &Predictor::StahlGe(vec![(-1.0, 1.0)]), -1e9).unwrap();
    assert_eq!((rm.n, rm.n_prev), (30, 20));
    let p = &rm.points[0];
    assert!((p.predicted.unwrap() - (2.0 + 3f64.sqrt()).powi(-2)).abs() < 1e-9);
    assert!((p.ratio.unwrap() - 1.0).abs() < 0.1, "{:?}", p);
    let none = rate_map(&e, &grid, &Predictor::None, -1e9).unwrap();
    assert!(none.points.iter().all(|p| p.predicted.is_none() && p.observed.is_some()));
    let dropped = rate_map(&e, &grid, &Predictor::None, 0.0).unwrap();
    assert!(dropped.points.iter().all(|p| p.observed.is_none() && p.note.is_some()));
    assert!(rate_map(&e[..1], &grid, &Predictor::None, -1e9).is_err());
}

#[test]
fn predictors_contract_off_the_support() {
    let d = paper_densities(1.0 / 3.0).unwrap();
    let k = crate::potential::Condenser::new(&[(-1.0, 1.0)]).unwrap();
    let preds = [
        Predictor::StahlGe(vec![(-1.0, 1.0)]),
        Predictor::Theorem1Gf { condenser: k, eta_e: d.eta_e },
        Predictor::BuslaevGreen { a: 1.0, b: 3.0 },
    ];
    for z in [c(0.3, 0.7), c(-2.0, 1.0), c(0.0, -2.0)] {
        for p in &preds {
            let v = p.value(z).unwrap().unwrap();
            assert!(v > 0.0 && v < 1.0, "{v}");
        }
    }
}

#[test]
fn orthogonality_pade_and_hp() {
    let g = Germ::jacobi(Num::ratio(1, 3)).unwrap();
    let pol = PrecisionPolicy::default();
    let n = 8;
    let pp = pade_for_germ(&g, n, &pol).unwrap();
    let p = pp.cert.digits as f64;
    let ks: Vec<usize> = (0..=n).collect();
    let r = orthogonality_residual(pp.denominator(), &g, &ks, &Orthogonality::PadeEq65).unwrap();
    let control = r[n].residual_log10;
    for row in &r[..n] {
        assert!(row.residual_log10 <= -p / 4.0, "{:?}", row);
        assert!(row.residual_log10 <= control - 3.0);
    }
    let t = hp_for_germ(&g, n, &pol, Normalization::LastFree).unwrap();
    let ks: Vec<usize> = (1..=n + 1).collect();
    let aux_pol = PrecisionPolicy { base: t.cert.digits, slope: 0, retries: 2 };
    let aux: Vec<Poly> = ks.iter().map(|k| pade_for_germ(&g, n + k, &aux_pol).unwrap().denominator().clone()).collect();
    let r = orthogonality_residual(&t.q2, &g, &ks, &Orthogonality::HpEq69 { aux }).unwrap();
    let p = t.cert.digits as f64;
    let control = r[n].residual_log10;
    for row in &r[..n] {
        assert!(row.residual_log10 <= -p / 4.0, "{:?}", row);
        assert!(row.residual_log10 <= control - 3.0);
    }
    assert!(orthogonality_residual(&t.q2, &g, &ks, &Orthogonality::HpEq69 { aux: vec![] }).is_err());
}

#[test]
fn jacobi_asymptotics_halves() {
    let rows = jacobi_asymptotics_check(&[50, 100], &Num::ratio(1, 3), c(2.0, 0.0), Prec::digits(60)).unwrap();
    assert!(rows[0].defect <= 0.05);
    assert!(rows[1].defect <= 0.6 * rows[0].defect);
    for r in &rows {
        assert!(r.imag_log10.0 <= -30.0 && r.imag_log10.1 <= -30.0);
    }
    assert!(jacobi_asymptotics_check(&[10], &Num::ratio(1, 3), c(0.5, 0.0), Prec::digits(30)).is_err());
}

#[test]
fn nuttall_sup_decreases() {
    let g = Germ::jacobi(Num::ratio(1, 3)).unwrap();
    let k: Vec<Complex64> = (0..40).map(|j| Complex64::from_polar(3.0, j as f64 * std::f64::consts::TAU / 40.0)).collect();
    let limit = LimitSet::real_intervals(&[(-1.0, 1.0)], 0.05);
    let rows = nuttall_uniform_check(&g, &[8, 16], &k, 0.05, 0.01, &limit, &PrecisionPolicy::default()).unwrap();
    assert!(rows[1].sup_error.unwrap() < rows[0].sup_error.unwrap());
    let empty = nuttall_uniform_check(&g, &[4], &[], 0.05, 0.01, &limit, &PrecisionPolicy::default()).unwrap();
    assert!(empty[0].sup_error.is_none());
}

#[test]
fn set_statistics() {
    let a = [c(0.0, 0.0), c(1.0, 0.0), c(5.0, 5.0)];
    let b = [c(0.0, 0.1), c(1.0, 0.0)];
    assert!((one_sided_hausdorff(&a[..2], &b, &[]) - 0.1).abs() < 1e-12);
    assert!(one_sided_hausdorff(&a, &b, &[(c(5.0, 5.0), 0.5)]) < 0.11);
    let zs = [c(-2.0, 0.0), c(0.0, 0.01), c(0.99, 0.0), c(0.5, 0.5)];
    assert!((fraction_near_complement(&zs, &[(-1.0, 1.0)], 0.02) - 0.5).abs() < 1e-12);
    assert!((nonreal_fraction(&zs, 1e-3) - 0.5).abs() < 1e-12);
    let grid = clustered_grid(-1.0, 1.0, 40);
    assert_eq!(grid.len(), 39);
    assert!(grid[0] + 1.0 < 1e-5);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]
    #[test]
    fn hausdorff_bounds(pts in proptest::collection::vec((-5.0f64..5.0, -5.0f64..5.0), 1..12)) {
        let a: Vec<Complex64> = pts.iter().map(|&(x, y)| c(x, y)).collect();
        prop_assert_eq!(one_sided_hausdorff(&a, &a, &[]), 0.0);
        let shifted: Vec<Complex64> = a.iter().map(|z| z + c(0.3, 0.0)).collect();
        prop_assert!(one_sided_hausdorff(&a, &shifted, &[]) <= 0.3 + 1e-12);
    }
}
