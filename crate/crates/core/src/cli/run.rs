use super::export::{f64s, ExperimentResult, ZeroKind};
use super::presets::{preset, PresetKind};
use super::{ExperimentConfig, Task, DEFAULT_BUDGET_S};
use crate::analysis::{
    alternation_check, alternation_log_weight, approximation_errors, fraction_near_complement, interpolation_nodes, nonreal_fraction, orthogonality_residual, rate_map, Family, Orthogonality, Predictor, RealTarget,
};
use crate::arith::{to_c64, Num, Poly, Prec};
use crate::error::{Error, Result};
use crate::germ::{Center, Germ, Term};
use crate::hermite::{hermite_approximants, hp_for_germ, Normalization};
use crate::pade::{jfraction_coeffs, multipoint_pade, pade_for_germ, two_point_pade, MultipointSpec, Node, TwoPointOrders};
use crate::potential::{arc_potential_max, chebotarev_point, equilibrium_intervals, paper_densities, trace_stahl_arcs, Condenser};
use crate::roots::{find_roots, froissart_pairs, froissart_triplets, kolmogorov_distance, EmpiricalMeasure, LimitPiece, LimitSet, ZeroSet};
use num_complex::Complex64;
use std::time::Instant;

/// Wall-clock allowance checked between pipeline stages.
#[derive(Clone, Copy, Debug)]
pub struct Budget {
    start: Instant,
    limit_s: f64,
}

impl Budget {
    pub fn new(limit_s: f64) -> Self {
        Budget { start: Instant::now(), limit_s }
    }

    pub fn elapsed(&self) -> f64 {
        self.start.elapsed().as_secs_f64()
    }

    pub fn exceeded(&self) -> bool {
        self.elapsed() > self.limit_s
    }

    pub fn check(&self) -> Result<()> {
        if self.exceeded() {
            Err(Error::TimeBudget(self.limit_s))
        } else {
            Ok(())
        }
    }
}

/// Runs the configured task. A result whose `partial` field is set was
/// cut short by the time budget after at least one stage completed.
pub fn run_task(cfg: &ExperimentConfig) -> Result<ExperimentResult> {
    let task = cfg.validate()?;
    let budget = Budget::new(cfg.time_budget_s.unwrap_or(DEFAULT_BUDGET_S));
    let mut r = ExperimentResult::new(task.name());
    if let Some(g) = &cfg.germ {
        r.input("germ", cfg_germ_text(g)?);
    }
    r.input("prec_base", cfg.precision.base);
    r.input("prec_slope", cfg.precision.slope);
    r.input("sign_convention", format!("{:?}", cfg.sign_convention));
    match task {
        Task::Expand => expand(cfg, &mut r)?,
        Task::Pade => pade(cfg, &cfg.germ()?, cfg.n_or(10), &mut r, &budget)?,
        Task::Pade2 => pade2(cfg, &cfg.germ()?, &cfg.germ0.as_ref().unwrap().to_germ()?, cfg.n_or(10), &mut r, &budget)?,
        Task::Mpade => mpade(cfg, &mut r)?,
        Task::Jfrac => jfrac(cfg, &mut r)?,
        Task::Hp => hp(cfg, &cfg.germ()?, cfg.n_or(10), &[], &mut r, &budget)?,
        Task::Roots => roots(cfg, &mut r)?,
        Task::Zdist => zdist(cfg, &mut r)?,
        Task::Froissart => froissart(cfg, &mut r)?,
        Task::Nodes => nodes(cfg, &mut r)?,
        Task::Alternation => alternation(cfg, &mut r)?,
        Task::Rates => rates(cfg, &mut r)?,
        Task::Ortho => ortho(cfg, &mut r)?,
        Task::Stahlgeo => stahlgeo(cfg, &mut r)?,
        Task::Preset => run_preset(cfg, &mut r, &budget)?,
    }
    Ok(r)
}

fn cfg_germ_text(g: &super::GermInput) -> Result<String> {
    Ok(g.to_germ()?.to_string())
}

fn points(cfg: &ExperimentConfig, prec: Prec) -> Result<Vec<rug::Complex>> {
    cfg.points.iter().map(|s| prec.parse(s)).collect()
}

fn expand(cfg: &ExperimentConfig, r: &mut ExperimentResult) -> Result<()> {
    let g = cfg.germ()?;
    let order = cfg.n_or(10);
    let prec = cfg.policy().for_n(order);
    match g.expand(order, prec)? {
        crate::germ::Expansion::Infinity(s) => r.values("coefficients_at_infinity", s.coeffs()),
        crate::germ::Expansion::Point(t) => r.values("taylor_coefficients", t.coeffs()),
    }
    r.input("order", order);
    r.metric("digits", prec.get(), None, prec.get());
    Ok(())
}

/// Limit set for doublet detection: the real cuts of a real germ, the
/// traced arcs of a three-point product, or nothing.
fn pade_limit(g: &Germ) -> LimitSet {
    if g.is_real_subclass() {
        if let Ok(s) = g.cut_segments_f64() {
            return LimitSet::real_intervals(&s, 0.02);
        }
    }
    if let Some(geo) = three_point_geometry(g) {
        let pieces = geo.arcs.iter().flat_map(|a| a.windows(2).map(|w| LimitPiece::Segment(w[0], w[1])).collect::<Vec<_>>()).collect();
        return LimitSet { pieces, margin: 0.05 };
    }
    LimitSet::default()
}

fn three_point_geometry(g: &Germ) -> Option<crate::potential::StahlGeometry> {
    let [t] = g.terms() else { return None };
    let Term::Product(fs) = &t.term else { return None };
    if fs.len() != 3 || *g.center() != Center::Infinity {
        return None;
    }
    let pts = [fs[0].point.eval_f64(), fs[1].point.eval_f64(), fs[2].point.eval_f64()];
    let (ch, _) = chebotarev_point(pts, Prec::digits(40)).ok()?;
    trace_stahl_arcs(pts, ch.v).ok()
}

fn pade(cfg: &ExperimentConfig, g: &Germ, n: usize, r: &mut ExperimentResult, budget: &crate::cli::Budget) -> Result<()> {
    r.input("n", n);
    let pp = pade_for_germ(g, n, &cfg.policy())?;
    r.cert("pade", &pp.cert);
    r.poly("P0", &pp.p0);
    r.poly("P1", &pp.p1);
    r.metric("effective_n", pp.effective_n, None, pp.cert.digits);
    let p = Prec::digits(pp.cert.digits);
    for (s, z) in cfg.points.iter().zip(points(cfg, p)?) {
        let v = pp.eval(&z)?;
        let e = crate::arith::dist_f64(&v, &g.eval(&z)?);
        r.metric(&format!("value@{s}"), crate::arith::fmt_complex(&v, super::OUTPUT_DIGITS), None, p.get());
        r.metric_f(&format!("error@{s}"), e, None, p.get());
    }
    if budget.exceeded() {
        r.partial = Some(format!("stopped after the solve at n = {n}"));
        return Ok(());
    }
    let zeros = find_roots(&pp.numerator());
    let poles = find_roots(pp.denominator());
    r.zeros_mp(ZeroKind::ZeroP, &zeros);
    r.zeros_mp(ZeroKind::Pole, &poles);
    let limit = pade_limit(g);
    let radius = cfg.radius.unwrap_or(1e-3);
    let pairs = froissart_pairs(&zeros.to_c64(), &poles.to_c64(), radius, &limit);
    r.metric("froissart_doublets", pairs.len(), Some(&format!("pair distance < {}", f64s(radius))), p.get());
    for d in &pairs {
        r.metric_f(&format!("doublet_distance@{}", f64s(poles.to_c64()[d.pole].re)), d.distance, None, p.get());
    }
    if let Some(geo) = three_point_geometry(g) {
        r.metric_f("chebotarev_re", geo.v.re, None, 40);
        r.metric_f("chebotarev_im", geo.v.im, None, 40);
        r.overlays.arcs = geo.arcs.iter().map(|a| a.iter().map(|z| [f64s(z.re), f64s(z.im)]).collect()).collect();
        let far = poles.to_c64().iter().filter(|z| geo.distance(**z) > 0.02).count();
        r.metric("poles_farther_than_0.02_from_arcs", far, Some("<= 1"), p.get());
    }
    if let Ok(s) = g.cut_segments_f64() {
        r.overlays.segments = s.iter().map(|(a, b)| [f64s(*a), f64s(*b)]).collect();
    }
    Ok(())
}

fn pade2(cfg: &ExperimentConfig, finf: &Germ, f0: &Germ, n: usize, r: &mut ExperimentResult, budget: &crate::cli::Budget) -> Result<()> {
    r.input("n", n);
    r.input("germ0", f0);
    let orders = cfg.orders.unwrap_or(TwoPointOrders::Displayed);
    let mp = two_point_pade(f0, finf, n, orders, &cfg.policy())?;
    r.cert("two_point", &mp.cert);
    r.poly("P", &mp.p);
    r.poly("Q", &mp.q);
    for (i, v) in mp.node_residuals.iter().enumerate() {
        r.metric_f(&format!("node_residual_log10[{i}]"), *v, Some("<= -P/3"), mp.cert.digits);
    }
    if budget.exceeded() {
        r.partial = Some(format!("stopped after the solve at n = {n}"));
        return Ok(());
    }
    let zeros = find_roots(&mp.p);
    let poles = find_roots(&mp.q);
    r.zeros_mp(ZeroKind::ZeroP, &zeros);
    r.zeros_mp(ZeroKind::Pole, &poles);
    let radius = cfg.radius.unwrap_or(1e-3);
    let pairs = froissart_pairs(&zeros.to_c64(), &poles.to_c64(), radius, &LimitSet::default());
    r.metric("froissart_doublets", pairs.len(), Some(&format!("pair distance < {}", f64s(radius))), mp.cert.digits);
    Ok(())
}

fn mpade(cfg: &ExperimentConfig, r: &mut ExperimentResult) -> Result<()> {
    let mut nodes = Vec::new();
    for ni in &cfg.nodes {
        let g = ni.germ.to_germ()?;
        let node = match g.center() {
            Center::Infinity => Node::Infinity,
            Center::Point(p) => Node::Point(p.clone()),
        };
        nodes.push((node, ni.mult, g));
    }
    let total: usize = nodes.iter().map(|x| x.1).sum();
    if total % 2 == 0 {
        return Err(Error::Degenerate(format!("multiplicities sum to {total}, which is not 2n+1")));
    }
    let n = cfg.n.unwrap_or((total - 1) / 2);
    r.input("n", n);
    let mp = multipoint_pade(&MultipointSpec { nodes }, n, &cfg.policy())?;
    r.cert("multipoint", &mp.cert);
    r.poly("P", &mp.p);
    r.poly("Q", &mp.q);
    for (i, v) in mp.node_residuals.iter().enumerate() {
        r.metric_f(&format!("node_residual_log10[{i}]"), *v, Some("<= -P/3"), mp.cert.digits);
    }
    r.zeros_mp(ZeroKind::ZeroP, &find_roots(&mp.p));
    r.zeros_mp(ZeroKind::Pole, &find_roots(&mp.q));
    Ok(())
}

fn jfrac(cfg: &ExperimentConfig, r: &mut ExperimentResult) -> Result<()> {
    let g = cfg.germ()?;
    let n = cfg.n_or(10);
    r.input("depth", n);
    let prec = cfg.policy().for_n(n);
    let s = g.expand_at_infinity(2 * n + 2, prec)?;
    let jf = jfraction_coeffs(&s, n)?;
    r.values("c0", std::slice::from_ref(&jf.c0));
    r.values("A", &jf.a);
    r.values("B", &jf.b);
    r.metric("terminated", jf.terminated, None, prec.get());
    for (s, z) in cfg.points.iter().zip(points(cfg, prec)?) {
        let v = jf.eval(jf.depth(), &z)?;
        r.metric(&format!("value@{s}"), crate::arith::fmt_complex(&v, super::OUTPUT_DIGITS), None, prec.get());
    }
    Ok(())
}

fn hp(cfg: &ExperimentConfig, g: &Germ, n: usize, segments: &[(f64, f64)], r: &mut ExperimentResult, budget: &crate::cli::Budget) -> Result<()> {
    r.input("n", n);
    let t = hp_for_germ(g, n, &cfg.policy(), Normalization::LastFree)?;
    let d = t.cert.digits;
    r.cert("hermite_pade", &t.cert);
    r.poly("Q0", &t.q0);
    r.poly("Q1", &t.q1);
    r.poly("Q2", &t.q2);
    let ha = hermite_approximants(&t, cfg.sign_convention)?;
    let p = Prec::digits(d);
    for (s, z) in cfg.points.iter().zip(points(cfg, p)?) {
        r.metric(&format!("H0@{s}"), crate::arith::fmt_complex(&ha.eval_h0(&z)?, super::OUTPUT_DIGITS), None, d);
        r.metric(&format!("H1@{s}"), crate::arith::fmt_complex(&ha.eval_h1(&z)?, super::OUTPUT_DIGITS), None, d);
    }
    if budget.exceeded() {
        r.partial = Some(format!("stopped after the solve at n = {n}"));
        return Ok(());
    }
    let z0 = find_roots(&t.q0);
    let z1 = find_roots(&t.q1);
    let z2 = find_roots(&t.q2);
    r.zeros_mp(ZeroKind::ZeroQ0, &z0);
    r.zeros_mp(ZeroKind::ZeroQ1, &z1);
    r.zeros_mp(ZeroKind::ZeroQ2, &z2);
    let all: Vec<Complex64> = [&z0, &z1, &z2].iter().flat_map(|z| z.to_c64()).collect();
    let segs: Vec<(f64, f64)> = if segments.is_empty() { g.cut_segments_f64().unwrap_or_default() } else { segments.to_vec() };
    r.overlays.segments = segs.iter().map(|(a, b)| [f64s(*a), f64s(*b)]).collect();
    if !segs.is_empty() {
        r.metric_f("fraction_within_0.02_of_real_complement", fraction_near_complement(&all, &segs, 0.02), Some(">= 0.95 (case1)"), d);
    }
    r.metric_f("nonreal_fraction", nonreal_fraction(&all, 1e-6), None, d);
    let limit = LimitSet::real_intervals(&[(f64::NEG_INFINITY, f64::INFINITY)], 0.02);
    let radius = cfg.radius.unwrap_or(0.05);
    let (c0, c1, c2) = (z0.to_c64(), z1.to_c64(), z2.to_c64());
    let trip = froissart_triplets([&c0, &c1, &c2], radius, &limit);
    r.metric("froissart_triplets", trip.len(), Some(&format!("diameter < {}", f64s(radius))), d);
    for tr in &trip {
        let z = c2[tr.indices[2]];
        r.metric_f(&format!("triplet@{}{:+}i", f64s(z.re), z.im), tr.diameter, None, d);
    }
    Ok(())
}

fn roots(cfg: &ExperimentConfig, r: &mut ExperimentResult) -> Result<()> {
    let prec = Prec::digits(cfg.precision.base);
    let coeffs = cfg.coeffs.iter().map(|s| Num::parse(s).map(|x| x.eval(prec))).collect::<Result<Vec<_>>>()?;
    let p = Poly::new(coeffs);
    if p.degree().unwrap_or(0) == 0 {
        return Err(Error::Degenerate("constant polynomial has no roots".into()));
    }
    let z = find_roots(&p);
    r.metric_f("max_residual_log10", z.max_residual_log10(), None, prec.get());
    r.metric("all_converged", z.all_converged(), None, prec.get());
    r.zeros_mp(ZeroKind::ZeroP, &z);
    Ok(())
}

/// `alpha` of `((z+1)/(z-1))^alpha`, when the germ has that form.
fn jacobi_alpha(g: &Germ) -> Option<f64> {
    let [t] = g.terms() else { return None };
    let Term::Product(fs) = &t.term else { return None };
    if fs.len() != 2 || *g.center() != Center::Infinity {
        return None;
    }
    let pt = |k: usize| fs[k].point.eval_f64();
    let (i, j) = if pt(0).re < pt(1).re { (0, 1) } else { (1, 0) };
    let ok = pt(i) == Complex64::new(-1.0, 0.0) && pt(j) == Complex64::new(1.0, 0.0);
    let a = fs[i].exponent.eval_f64();
    let b = fs[j].exponent.eval_f64();
    (ok && a.im == 0.0 && (a.re + b.re).abs() < 1e-15 && t.weight == Num::int(1)).then_some(a.re)
}

fn need_jacobi(g: &Germ) -> Result<f64> {
    jacobi_alpha(g).ok_or_else(|| Error::Unsupported("this check needs the germ ((z+1)/(z-1))^alpha".into()))
}

fn family(cfg: &ExperimentConfig) -> &str {
    cfg.family.as_deref().unwrap_or("pade")
}

fn zdist(cfg: &ExperimentConfig, r: &mut ExperimentResult) -> Result<()> {
    let g = cfg.germ()?;
    let n = cfg.n_or(40);
    r.input("n", n);
    r.input("family", family(cfg));
    match family(cfg) {
        "pade" => {
            let pp = pade_for_germ(&g, n, &cfg.policy())?;
            let poles = find_roots(pp.denominator());
            r.zeros_mp(ZeroKind::Pole, &poles);
            let eq = equilibrium_intervals(&g.cut_segments_f64()?)?;
            let m = EmpiricalMeasure::from_points(&poles.to_c64(), n);
            let ks = kolmogorov_distance(&m, &eq.density, cfg.window)?;
            ks_metrics(r, &ks, pp.cert.digits);
        }
        "hp" => {
            let alpha = need_jacobi(&g)?;
            let dens = paper_densities(alpha)?;
            let t = hp_for_germ(&g, n, &cfg.policy(), Normalization::LastFree)?;
            let d = t.cert.digits;
            let zs = [find_roots(&t.q0), find_roots(&t.q1), find_roots(&t.q2)];
            for (k, z) in zs.iter().enumerate() {
                r.zeros_mp([ZeroKind::ZeroQ0, ZeroKind::ZeroQ1, ZeroKind::ZeroQ2][k], z);
                r.metric(&format!("Q{k}_zeros_off_real_complement"), hp_exceptions(z), Some("<= 6"), d);
            }
            let m = EmpiricalMeasure::from_points(&zs[2].to_c64(), n);
            let ks = kolmogorov_distance(&m, &dens.eta_f, Some(cfg.window.unwrap_or(10.0)))?;
            ks_metrics(r, &ks, d);
        }
        other => return Err(Error::Config(format!("zdist family '{other}' is not pade or hp"))),
    }
    Ok(())
}

/// Zeros that are non-real or inside `(-1, 1)`.
fn hp_exceptions(z: &ZeroSet) -> usize {
    z.to_c64().iter().filter(|w| !crate::roots::is_real_root(**w) || w.re.abs() < 1.0).count()
}

fn ks_metrics(r: &mut ExperimentResult, ks: &crate::roots::KsReport, d: u32) {
    r.metric_f("kolmogorov_distance", ks.distance, Some("<= 0.05"), d);
    r.metric_f("nonreal_mass", ks.nonreal_mass, None, d);
    r.metric_f("outside_window_mass", ks.outside_mass, None, d);
    r.metric_f("reference_outside_window_mass", ks.ref_outside_mass, None, d);
}

fn froissart(cfg: &ExperimentConfig, r: &mut ExperimentResult) -> Result<()> {
    let g = cfg.germ()?;
    let n = cfg.n_or(40);
    let budget = Budget::new(cfg.time_budget_s.unwrap_or(DEFAULT_BUDGET_S));
    match family(cfg) {
        "pade" => pade(cfg, &g, n, r, &budget),
        "hp" => hp(cfg, &g, n, &[], r, &budget),
        other => Err(Error::Config(format!("froissart family '{other}' is not pade or hp"))),
    }
}

fn hp_target(cfg: &ExperimentConfig, n: usize) -> Result<(Germ, crate::hermite::HermiteApproximants, RealTarget, u32)> {
    let g = cfg.germ()?;
    let t = hp_for_germ(&g, n, &cfg.policy(), Normalization::LastFree)?;
    let ha = hermite_approximants(&t, cfg.sign_convention)?;
    let rt = RealTarget::new(&g, Prec::digits(t.cert.digits))?;
    Ok((g, ha, rt, t.cert.digits))
}

fn nodes(cfg: &ExperimentConfig, r: &mut ExperimentResult) -> Result<()> {
    let n = cfg.n_or(40);
    r.input("n", n);
    let (g, ha, rt, d) = hp_target(cfg, n)?;
    let ns = interpolation_nodes(&ha, &rt, n, None)?;
    r.metric("node_count", ns.count, Some(&format!(">= {}", (2 * n).saturating_sub(10))), d);
    r.metric("missing_nodes", ns.missing, Some("<= 10"), d);
    r.metric("pole_brackets", ns.pole_brackets, None, d);
    let pts: Vec<Complex64> = ns.nodes.iter().map(|&x| Complex64::new(x, 0.0)).collect();
    r.points(ZeroKind::Node, &pts);
    if let Some(alpha) = jacobi_alpha(&g) {
        let dens = paper_densities(alpha)?;
        let ks = kolmogorov_distance(&EmpiricalMeasure::from_points(&pts, 2 * n), &dens.eta_e, None)?;
        r.metric_f("kolmogorov_distance_eta_e", ks.distance, Some("<= 0.05"), d);
    }
    Ok(())
}

fn alternation(cfg: &ExperimentConfig, r: &mut ExperimentResult) -> Result<()> {
    let n = cfg.n_or(60);
    let theta = cfg.theta.unwrap_or(0.1);
    r.input("n", n);
    r.input("theta", theta);
    let (g, ha, rt, d) = hp_target(cfg, n)?;
    let alpha = need_jacobi(&g)?;
    let dens = paper_densities(alpha)?;
    let ns = interpolation_nodes(&ha, &rt, n, None)?;
    let k = Condenser::new(&[(-1.0, 1.0)])?;
    let rep = alternation_check(&ha, &rt, &ns, n, theta, alternation_log_weight(n, k, dens.eta_e))?;
    r.metric("alternating_run", rep.run, Some(&format!(">= {}", rep.required)), d);
    r.metric_f("central_magnitude_min", rep.central_range.0, Some(">= 0.5"), d);
    r.metric_f("central_magnitude_max", rep.central_range.1, Some("<= 2"), d);
    for (x, s, m) in &rep.extrema {
        r.metric_f(&format!("extremum@{}", f64s(*x)), *m * *s as f64, None, d);
    }
    Ok(())
}

fn rates(cfg: &ExperimentConfig, r: &mut ExperimentResult) -> Result<()> {
    let g = cfg.germ()?;
    let grid: Vec<Complex64> = points(cfg, Prec::digits(30))?.iter().map(to_c64).collect();
    let fam = match family(cfg) {
        "pade" => Family::Pade,
        "hp" => Family::Hermite(cfg.sign_convention),
        "pade2" => Family::TwoPoint {
            f0: cfg.germ0.as_ref().ok_or_else(|| Error::Config("pade2 rates need germ0".into()))?.to_germ()?,
            orders: cfg.orders.unwrap_or(TwoPointOrders::Displayed),
        },
        other => return Err(Error::Config(format!("rates family '{other}' is not pade, hp or pade2"))),
    };
    let predictor = match cfg.predictor.as_deref().unwrap_or("none") {
        "none" => Predictor::None,
        "stahl" => Predictor::StahlGe(g.cut_segments_f64()?),
        "theorem1" => {
            let alpha = need_jacobi(&g)?;
            Predictor::Theorem1Gf { condenser: Condenser::new(&[(-1.0, 1.0)])?, eta_e: paper_densities(alpha)?.eta_e }
        }
        "buslaev" => {
            let [a, b] = cfg.segment.ok_or_else(|| Error::Config("the buslaev predictor needs a segment".into()))?;
            Predictor::BuslaevGreen { a, b }
        }
        other => return Err(Error::Config(format!("unknown predictor '{other}'"))),
    };
    let errs = approximation_errors(&fam, &g, &cfg.n_list, &grid, &cfg.policy())?;
    let floor = -(cfg.policy().for_n(*cfg.n_list.iter().max().unwrap()).get() as f64) / 2.0;
    let map = rate_map(&errs, &grid, &predictor, floor)?;
    r.input("n_list", format!("{:?}", cfg.n_list));
    for (n, row) in &errs {
        for (s, e) in cfg.points.iter().zip(row) {
            r.metric_f(&format!("log10_error[n={n}]@{s}"), *e, None, cfg.policy().for_n(*n).get());
        }
    }
    for (s, p) in cfg.points.iter().zip(&map.points) {
        let d = cfg.policy().for_n(map.n).get();
        if let Some(o) = p.observed {
            r.metric_f(&format!("observed_rate@{s}"), o, None, d);
        }
        if let Some(o) = p.observed_prev {
            r.metric_f(&format!("observed_rate_prev@{s}"), o, None, d);
        }
        if let Some(v) = p.predicted {
            r.metric_f(&format!("predicted_rate@{s}"), v, None, d);
        }
        if let Some(v) = p.ratio {
            r.metric_f(&format!("ratio@{s}"), v, None, d);
        }
        if let Some(note) = &p.note {
            r.metric(&format!("note@{s}"), note, None, d);
        }
    }
    Ok(())
}

fn ortho(cfg: &ExperimentConfig, r: &mut ExperimentResult) -> Result<()> {
    let g = cfg.germ()?;
    let n = cfg.n_or(20);
    r.input("n", n);
    let rel = cfg.relation.as_deref().unwrap_or("pade");
    r.input("relation", rel);
    let (rows, d) = match rel {
        "pade" => {
            let pp = pade_for_germ(&g, n, &cfg.policy())?;
            let ks: Vec<usize> = (0..=n).collect();
            (orthogonality_residual(pp.denominator(), &g, &ks, &Orthogonality::PadeEq65)?, pp.cert.digits)
        }
        "hp" => {
            let t = hp_for_germ(&g, n, &cfg.policy(), Normalization::LastFree)?;
            let ks: Vec<usize> = (1..=n + 1).collect();
            let aux_pol = crate::arith::PrecisionPolicy { base: t.cert.digits, slope: 0, retries: cfg.precision.retries };
            let aux = ks.iter().map(|k| pade_for_germ(&g, n + k, &aux_pol).map(|p| p.denominator().clone())).collect::<Result<Vec<_>>>()?;
            (orthogonality_residual(&t.q2, &g, &ks, &Orthogonality::HpEq69 { aux })?, t.cert.digits)
        }
        other => return Err(Error::Config(format!("relation '{other}' is not pade or hp"))),
    };
    let tol = format!("<= {}", -(d as f64) / 4.0);
    let control = if rel == "pade" { n } else { n + 1 };
    for row in &rows {
        let t = if row.k == control { Some("control") } else { Some(tol.as_str()) };
        r.metric_f(&format!("residual_log10[k={}]", row.k), row.residual_log10, t, d);
    }
    Ok(())
}

fn stahlgeo(cfg: &ExperimentConfig, r: &mut ExperimentResult) -> Result<()> {
    let prec = Prec::digits(cfg.precision.base.max(40));
    let pts = points(cfg, prec)?;
    let a = [to_c64(&pts[0]), to_c64(&pts[1]), to_c64(&pts[2])];
    let (ch, _) = chebotarev_point(a, prec)?;
    r.metric("chebotarev_point", &ch.v_text, None, ch.digits);
    r.metric_f("period_residual_log10", ch.residual_log10, Some(&format!("<= {}", -(prec.get() as f64) / 5.0)), ch.digits);
    r.metric_f("period_recheck_log10", ch.recheck_log10, None, ch.digits);
    r.metric("newton_iterations", ch.iterations, None, ch.digits);
    let geo = trace_stahl_arcs(a, ch.v)?;
    r.metric_f("arc_potential_max", arc_potential_max(&geo), Some("<= 1e-5"), 16);
    r.overlays.arcs = geo.arcs.iter().map(|a| a.iter().map(|z| [f64s(z.re), f64s(z.im)]).collect()).collect();
    if let Some(n) = cfg.n {
        // P_{n,1} zeros of (z-a1)^(1/3)(z-a2)^(1/3)(z-a3)^(-2/3) against the arcs
        let spec: Vec<String> = [(&cfg.points[0], "1/3"), (&cfg.points[1], "1/3"), (&cfg.points[2], "-2/3")].iter().map(|(p, e)| format!("{p}:{e}")).collect();
        let g = super::parse_germ(&format!("prod({})", spec.join(",")))?;
        let pp = pade_for_germ(&g, n, &cfg.policy())?;
        let poles = find_roots(pp.denominator());
        let far = poles.to_c64().iter().filter(|z| geo.distance(**z) > 0.02).count();
        r.zeros_mp(ZeroKind::Pole, &poles);
        r.metric("poles_farther_than_0.02_from_arcs", far, Some("<= 1"), pp.cert.digits);
    }
    Ok(())
}

fn run_preset(cfg: &ExperimentConfig, r: &mut ExperimentResult, budget: &Budget) -> Result<()> {
    let p = preset(cfg.preset.as_deref().unwrap_or_default())?;
    let n = cfg.n.unwrap_or_else(|| p.n(cfg.paper_scale));
    r.task = format!("preset {}", p.id);
    r.input("preset", p.id);
    r.input("formula", p.formula);
    r.input("paper_scale", cfg.paper_scale);
    if let Some(note) = p.note {
        r.input("note", note);
    }
    let g = p.germ()?;
    r.input("germ", &g);
    match p.kind {
        PresetKind::Pade => pade(cfg, &g, n, r, budget)?,
        PresetKind::TwoPoint => pade2(cfg, &g, &p.germ0()?.expect("two-point preset has germ0"), n, r, budget)?,
        PresetKind::Hermite => hp(cfg, &g, n, p.segments, r, budget)?,
    }
    if budget.exceeded() && r.partial.is_none() {
        r.partial = Some(format!("time budget exceeded after completing n = {n}"));
    }
    Ok(())
}
