use super::*;
use crate::arith::Prec;

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

#[test]
fn single_interval() {
    let eq = equilibrium_intervals(&[(-1.0, 1.0)]).unwrap();
    assert!((eq.robin - 2f64.ln()).abs() < 1e-10, "{}", eq.robin);
    let arcsine = DensityRef::arcsine();
    for x in [-0.9, 0.0, 0.4] {
        assert!((eq.density.density(x) - arcsine.density(x)).abs() < 1e-10);
    }
    let g = eq.green_inf(c(2.0, 0.0));
    assert!((g - (2.0 + 3f64.sqrt()).ln()).abs() < 1e-9, "{g}");
    assert!((green_segment(-1.0, 1.0, c(2.0, 0.0), None) - 1.3169578969248166).abs() < 1e-12);
}

#[test]
fn symmetric_pair_is_odd_numerator() {
    for a in [0.2, 0.5, 0.8] {
        let eq = equilibrium_intervals(&[(-1.0, -a), (a, 1.0)]).unwrap();
        assert!(eq.numerator[0].abs() < 1e-9 * eq.numerator[1].abs(), "{:?}", eq.numerator);
        assert!((eq.density.total_mass() - 1.0).abs() < 1e-9);
    }
}

#[test]
fn potential_constant_on_support() {
    let e = [(-2.5, -1.3), (-0.8, 0.8), (1.3, 2.5)];
    let eq = equilibrium_intervals(&e).unwrap();
    assert!((eq.density.total_mass() - 1.0).abs() < 1e-9);
    let mut vals = Vec::new();
    for &(a, b) in &e {
        for x in grid(a, b, 67) {
            vals.push(log_potential(&eq.density, c(x, 0.0)));
        }
    }
    let spread = vals.iter().cloned().fold(f64::NEG_INFINITY, f64::max) - vals.iter().cloned().fold(f64::INFINITY, f64::min);
    assert!(spread < 1e-8, "{spread}");
    // g_E positive off E, zero on E, log growth
    assert!(eq.green_inf(c(0.0, 1.0)) > 0.0);
    assert!(eq.green_inf(c(1.0, 0.0)) > 0.0);
    assert!(eq.green_inf(c(0.3, 0.0)).abs() < 1e-8);
    let big = eq.green_inf(c(1e4, 0.0)) - 1e4f64.ln();
    let bigger = eq.green_inf(c(0.0, 2e4)) - 2e4f64.ln();
    assert!((big - bigger).abs() < 1e-3);
}

#[test]
fn overlapping_segments_rejected() {
    assert!(equilibrium_intervals(&[(-1.0, 0.5), (0.2, 1.0)]).is_err());
}

#[test]
fn paper_density_values() {
    let v = PaperDensities::eta_e_at(0.0).unwrap();
    assert!((v - 3f64.sqrt() / (2.0 * std::f64::consts::PI)).abs() < 1e-15);
    assert!((v - 0.275664).abs() < 1e-6);
    for x in [0.1, 0.5, 0.93] {
        assert_eq!(PaperDensities::eta_e_at(x).unwrap(), PaperDensities::eta_e_at(-x).unwrap());
    }
    assert!(PaperDensities::eta_e_at(1.0).is_err());
    assert!(PaperDensities::eta_f_at(-1.0).is_err());
    let d = paper_densities(1.0 / 3.0).unwrap();
    assert!((d.eta_e.total_mass() - 1.0).abs() < 1e-8);
    assert!((d.eta_f.total_mass() - 1.0).abs() < 1e-8);
    assert!(PaperDensities::eta_f_at(3.0).unwrap() > 0.0);
}

#[test]
fn condenser_green_functions() {
    let k = Condenser::new(&[(-1.0, 1.0)]).unwrap();
    // symmetry and vanishing on the plates
    let (p, q) = (c(0.3, 0.7), c(-2.0, 0.4));
    assert!((k.g_e(Some(p), q) - k.g_e(Some(q), p)).abs() < 1e-12);
    assert!((k.g_f(p, q) - k.g_f(q, p)).abs() < 1e-12);
    assert!(k.g_e(Some(p), c(0.5, 0.0)).abs() < 1e-12);
    assert!(k.g_f(p, c(3.0, 0.0)).abs() < 1e-12);
    assert!(k.g_f(p, c(0.0, 0.0)) > 0.0);
    assert!(Condenser::new(&[(-1.0, 0.0), (0.5, 1.0)]).is_err());
}

#[test]
fn identities_hold_for_paper_densities() {
    let d = paper_densities(1.0 / 3.0).unwrap();
    let k = Condenser::new(&[(-1.0, 1.0)]).unwrap();
    let r = equilibrium_residual(&k, &d.eta_e, &d.eta_f, &grid(-0.99, 0.99, 25), &grid(1.01, 10.0, 25));
    assert!(r.on_e.spread < 1e-4, "{:?}", r.on_e);
    assert!(r.on_f.spread < 1e-3, "{:?}", r.on_f);
    assert!((r.on_f.min - 6.0 * 2f64.ln()).abs() < 1e-4);
    // a null measure leaves 3 g_E, far from constant
    let zero = DensityRef::new(vec![(1.0, f64::INFINITY)], |_, _, _| 0.0);
    let r0 = equilibrium_residual(&k, &d.eta_e, &zero, &grid(-0.5, 0.5, 3), &grid(1.01, 10.0, 10));
    assert!(r0.on_f.spread > 1.0);
    let rate = k.predicted_rate(&d.eta_e, c(0.0, 2.0));
    assert!((rate - 0.582084113883).abs() < 1e-6, "{rate}");
}

#[test]
fn equilateral_chebotarev() {
    let w = std::f64::consts::TAU / 3.0;
    let pts = [c(1.0, 0.0), c(w.cos(), w.sin()), c((2.0 * w).cos(), (2.0 * w).sin())];
    let (ch, _) = chebotarev_point(pts, Prec::digits(40)).unwrap();
    assert!(ch.v.norm() < 1e-10);
    let g = trace_stahl_arcs(pts, ch.v).unwrap();
    for (j, arc) in g.arcs.iter().enumerate() {
        for z in arc {
            // radial segment from a_j to 0
            let cross = (z * pts[j].conj()).im;
            assert!(cross.abs() < 1e-6, "{z}");
        }
    }
    assert!(arc_potential_max(&g) < 1e-5);
}

#[test]
fn skewed_triple_is_self_certifying() {
    let pts = [c(-1.2, 0.8), c(0.9, 1.5), c(0.5, -1.2)];
    let (ch, _) = chebotarev_point(pts, Prec::digits(50)).unwrap();
    assert!(ch.residual_log10 < -50.0 / 3.0);
    assert!(ch.recheck_log10 < -50.0 / 3.0 + 2.0, "{:?}", ch);
    let g = trace_stahl_arcs(pts, ch.v).unwrap();
    assert!(arc_potential_max(&g) < 1e-5);
    assert!(g.arcs.iter().all(|a| (a.last().unwrap() - ch.v).norm() < 1e-5));
    assert!(chebotarev_point([c(0.0, 0.0), c(1.0, 1.0), c(2.0, 2.0)], Prec::digits(30)).is_err());
}

use proptest::prelude::*;
proptest! {
    #![proptest_config(ProptestConfig::with_cases(4))]
    #[test]
    fn chebotarev_equivariant(sr in 0.5f64..2.0, th in 0.0f64..6.0, br in -1.0f64..1.0, bi in -1.0f64..1.0) {
        let pts = [c(-1.2, 0.8), c(0.9, 1.5), c(0.5, -1.2)];
        let al = Complex64::from_polar(sr, th);
        let be = c(br, bi);
        let p = Prec::digits(40);
        let (v0, _) = chebotarev_point(pts, p).unwrap();
        let (v1, _) = chebotarev_point(pts.map(|z| al * z + be), p).unwrap();
        prop_assert!((al * v0.v + be - v1.v).norm() < 1e-10);
    }
}
