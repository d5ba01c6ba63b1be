use crate::arith::{to_c64, Prec, PrecisionPolicy};
use crate::error::{Error, Result};
use crate::germ::Germ;
use crate::hermite::{hermite_approximants, hp_for_germ, Normalization, SignConvention};
use crate::pade::{pade_for_germ, two_point_pade, TwoPointOrders};
use crate::potential::{equilibrium_intervals, green_segment, Condenser, DensityRef};
use crate::roots::{find_roots, froissart_pairs, LimitSet};
use num_complex::Complex64;
use rug::{Complex, Float};
use serde::{Deserialize, Serialize};

/// Which approximant sequence a rate map measures.
#[derive(Clone, Debug)]
pub enum Family {
    /// Diagonal Padé at infinity, error `f - [n/n]_f`.
    Pade,
    /// Hermite approximant, error `f_2 - H_{n,1}`.
    Hermite(SignConvention),
    /// Two-point Padé from `f0` at 0, error against the target germ.
    TwoPoint { f0: Germ, orders: TwoPointOrders },
}

/// Potential-theory value the observed rate is compared with.
#[derive(Clone)]
pub enum Predictor {
    None,
    /// `e^{-2 g_E(z, inf)}` for the union of real segments `E`.
    StahlGe(Vec<(f64, f64)>),
    /// `e^{-2 G_F^{eta_E}(z)}` for a single segment.
    Theorem1Gf { condenser: Condenser, eta_e: DensityRef },
    /// `e^{-g(z, 0)}` for the complement of one real segment, a stand-in
    /// for the Buslaev compact, which is not computed.
    BuslaevGreen { a: f64, b: f64 },
}

impl Predictor {
    pub fn value(&self, z: Complex64) -> Result<Option<f64>> {
        Ok(match self {
            Predictor::None => None,
            Predictor::StahlGe(e) => Some((-2.0 * equilibrium_intervals(e)?.green_inf(z)).exp()),
            Predictor::Theorem1Gf { condenser, eta_e } => Some(condenser.predicted_rate(eta_e, z)),
            Predictor::BuslaevGreen { a, b } => Some((-green_segment(*a, *b, z, Some(Complex64::new(0.0, 0.0)))).exp()),
        })
    }
}

/// `log10 |error|` per grid point for each `n`.
pub fn approximation_errors(family: &Family, germ: &Germ, n_list: &[usize], grid: &[Complex64], policy: &PrecisionPolicy) -> Result<Vec<(usize, Vec<f64>)>> {
    let mut out = Vec::new();
    for &n in n_list {
        let errs = match family {
            Family::Pade => {
                let pp = pade_for_germ(germ, n, policy)?;
                let p = Prec::digits(pp.cert.digits);
                grid.iter()
                    .map(|z| {
                        let zz = p.c(z.re, z.im);
                        Ok(log10_diff(&germ.eval(&zz)?, &pp.eval(&zz)?))
                    })
                    .collect::<Result<Vec<_>>>()?
            }
            Family::Hermite(conv) => {
                let t = hp_for_germ(germ, n, policy, Normalization::LastFree)?;
                let h = hermite_approximants(&t, *conv)?;
                let p = Prec::digits(t.cert.digits);
                let sb = germ.second_branch(p)?;
                grid.iter()
                    .map(|z| {
                        let zz = p.c(z.re, z.im);
                        Ok(log10_diff(&sb.eval(&zz)?, &h.eval_h1(&zz)?))
                    })
                    .collect::<Result<Vec<_>>>()?
            }
            Family::TwoPoint { f0, orders } => {
                let mp = two_point_pade(f0, germ, n, *orders, policy)?;
                let p = Prec::digits(mp.cert.digits);
                grid.iter()
                    .map(|z| {
                        let zz = p.c(z.re, z.im);
                        Ok(log10_diff(&germ.eval(&zz)?, &mp.eval(&zz)?))
                    })
                    .collect::<Result<Vec<_>>>()?
            }
        };
        out.push((n, errs));
    }
    Ok(out)
}

fn log10_diff(a: &Complex, b: &Complex) -> f64 {
    let d = Complex::with_val(a.prec().0.max(b.prec().0), a - b);
    crate::arith::log10_abs(&d)
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct RatePoint {
    pub z: (f64, f64),
    /// `|error|^(1/n)` at the largest `n`.
    pub observed: Option<f64>,
    /// Same at the second-largest `n`, a stability cross-check.
    pub observed_prev: Option<f64>,
    pub predicted: Option<f64>,
    pub ratio: Option<f64>,
    pub note: Option<String>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct RateMap {
    pub n: usize,
    pub n_prev: usize,
    pub points: Vec<RatePoint>,
}

/// Observed rates at the largest `n` against the predictor. Points whose
/// error falls below `floor_log10` (working-precision underflow) are
/// dropped with a note.
pub fn rate_map(errors: &[(usize, Vec<f64>)], grid: &[Complex64], predictor: &Predictor, floor_log10: f64) -> Result<RateMap> {
    if errors.len() < 2 {
        return Err(Error::Config("a rate map needs at least two n values".into()));
    }
    let mut sorted: Vec<&(usize, Vec<f64>)> = errors.iter().collect();
    sorted.sort_by_key(|e| e.0);
    let (n, last) = (sorted[sorted.len() - 1].0, &sorted[sorted.len() - 1].1);
    let (n_prev, prev) = (sorted[sorted.len() - 2].0, &sorted[sorted.len() - 2].1);
    if last.len() != grid.len() || prev.len() != grid.len() {
        return Err(Error::Config("error rows do not match the grid".into()));
    }
    let rate = |l: f64, n: usize| (l.is_finite() && l > floor_log10).then(|| 10f64.powf(l / n as f64));
    let mut points = Vec::new();
    for (i, z) in grid.iter().enumerate() {
        let observed = rate(last[i], n);
        let observed_prev = rate(prev[i], n_prev);
        let predicted = predictor.value(*z)?;
        let ratio = match (observed, predicted) {
            (Some(o), Some(p)) if p > 0.0 => Some(o / p),
            _ => None,
        };
        let note = observed.is_none().then(|| "error below working precision, dropped".to_string());
        points.push(RatePoint { z: (z.re, z.im), observed, observed_prev, predicted, ratio, note });
    }
    Ok(RateMap { n, n_prev, points })
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct NuttallRow {
    pub n: usize,
    /// `None` when every grid point lies inside an excluded disk.
    pub sup_error: Option<f64>,
    pub excluded: usize,
    pub froissart: Vec<(f64, f64)>,
}

/// Sup of `|f - J_n|` over `k` minus `eps`-disks around Froissart doublets
/// of `[n/n]_f`. Doublets are zero-pole pairs closer than `radius` and
/// away from `limit`.
pub fn nuttall_uniform_check(
    germ: &Germ,
    n_list: &[usize],
    k: &[Complex64],
    eps: f64,
    radius: f64,
    limit: &LimitSet,
    policy: &PrecisionPolicy,
) -> Result<Vec<NuttallRow>> {
    let mut rows = Vec::new();
    for &n in n_list {
        let pp = pade_for_germ(germ, n, policy)?;
        let zeros = find_roots(&pp.numerator()).to_c64();
        let poles = find_roots(pp.denominator()).to_c64();
        let spurious: Vec<Complex64> = froissart_pairs(&zeros, &poles, radius, limit).iter().map(|d| poles[d.pole]).collect();
        let p = Prec::digits(pp.cert.digits);
        let mut sup: Option<f64> = None;
        let mut excluded = 0;
        for z in k {
            if spurious.iter().any(|s| (s - z).norm() < eps) {
                excluded += 1;
                continue;
            }
            let zz = p.c(z.re, z.im);
            let d = Complex::with_val(p.bits(), germ.eval(&zz)? - pp.eval(&zz)?);
            let e = Float::with_val(64, d.abs_ref()).to_f64();
            sup = Some(sup.map_or(e, |s: f64| s.max(e)));
        }
        rows.push(NuttallRow { n, sup_error: sup, excluded, froissart: spurious.iter().map(|s| (s.re, s.im)).collect() });
    }
    Ok(rows)
}

/// `max_{a in from, outside the disks} min_{b in to} |a - b|`; 0 when no
/// point of `from` survives.
pub fn one_sided_hausdorff(from: &[Complex64], to: &[Complex64], disks: &[(Complex64, f64)]) -> f64 {
    from.iter()
        .filter(|a| !disks.iter().any(|(c, r)| (*a - c).norm() < *r))
        .map(|a| to.iter().map(|b| (a - b).norm()).fold(f64::INFINITY, f64::min))
        .fold(0.0, f64::max)
}

/// Fraction of points within `tol` of the real line outside the open
/// segments `e`.
pub fn fraction_near_complement(zs: &[Complex64], e: &[(f64, f64)], tol: f64) -> f64 {
    if zs.is_empty() {
        return 0.0;
    }
    let near = zs
        .iter()
        .filter(|z| {
            let inside = e.iter().find(|(a, b)| z.re > *a && z.re < *b);
            let dx = inside.map_or(0.0, |(a, b)| (z.re - a).min(b - z.re));
            dx.hypot(z.im) <= tol
        })
        .count();
    near as f64 / zs.len() as f64
}

/// Fraction of points with `|Im z| >= threshold`.
pub fn nonreal_fraction(zs: &[Complex64], threshold: f64) -> f64 {
    if zs.is_empty() {
        return 0.0;
    }
    zs.iter().filter(|z| z.im.abs() >= threshold).count() as f64 / zs.len() as f64
}

/// Zeros of a polynomial as `f64` pairs, for reports.
pub fn zeros_c64(p: &crate::arith::Poly) -> Vec<Complex64> {
    find_roots(p).roots.iter().map(to_c64).collect()
}
