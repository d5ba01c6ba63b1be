use super::{is_real_root, ZeroSet};
use crate::error::{Error, Result};
use crate::quad::{integrate, integrate_lower, integrate_upper};
use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use std::sync::Arc;

/// Point masses in the plane.
#[derive(Clone, Debug, Default, Serialize, Deserialize)]
pub struct EmpiricalMeasure {
    pub points: Vec<(Complex64, f64)>,
    pub mass: f64,
}

/// `(1/n) chi(Q)`: one point mass `1/n` per zero, multiplicity included.
pub fn counting_measure(zs: &ZeroSet, n: usize) -> EmpiricalMeasure {
    let w = 1.0 / n.max(1) as f64;
    let points: Vec<_> = zs.to_c64().into_iter().map(|z| (z, w)).collect();
    let mass = w * points.len() as f64;
    EmpiricalMeasure { points, mass }
}

impl EmpiricalMeasure {
    pub fn from_points(pts: &[Complex64], n: usize) -> Self {
        let w = 1.0 / n.max(1) as f64;
        EmpiricalMeasure { points: pts.iter().map(|&z| (z, w)).collect(), mass: w * pts.len() as f64 }
    }

    pub fn nonreal_mass(&self) -> f64 {
        self.points.iter().filter(|(z, _)| !is_real_root(*z)).map(|p| p.1).sum()
    }
}

type DensityFn = dyn Fn(f64, f64, f64) -> f64 + Send + Sync;

/// A density on a union of real intervals (ends may be infinite). The
/// density is called as `f(x, x - a, b - x)` for the interval `(a, b)`
/// containing `x`.
#[derive(Clone)]
pub struct DensityRef {
    pub intervals: Vec<(f64, f64)>,
    density: Arc<DensityFn>,
}

impl std::fmt::Debug for DensityRef {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("DensityRef").field("intervals", &self.intervals).finish()
    }
}

const QUAD_TOL: f64 = 1e-12;

impl DensityRef {
    pub fn new(intervals: Vec<(f64, f64)>, density: impl Fn(f64, f64, f64) -> f64 + Send + Sync + 'static) -> Self {
        DensityRef { intervals, density: Arc::new(density) }
    }

    /// `dx / (pi sqrt(1 - x^2))` on `[-1, 1]`.
    pub fn arcsine() -> Self {
        DensityRef::new(vec![(-1.0, 1.0)], |_, l, r| 1.0 / (std::f64::consts::PI * (l * r).sqrt()))
    }

    pub fn uniform(a: f64, b: f64) -> Self {
        let h = 1.0 / (b - a);
        DensityRef::new(vec![(a, b)], move |_, _, _| h)
    }

    pub fn density(&self, x: f64) -> f64 {
        for &(a, b) in &self.intervals {
            if x > a && x < b {
                return (self.density)(x, x - a, b - x);
            }
        }
        0.0
    }

    /// Mass of `(lo, hi)`.
    pub fn mass_between(&self, lo: f64, hi: f64) -> f64 {
        self.integrate_range(lo, hi, &[], |_, _, _, _, _| 1.0)
    }

    /// `int g d(mu)` over the support, with extra break points (for
    /// example the location of a log singularity of `g`).
    /// `g` is called as `g(t, lo, t - lo, hi, hi - t)` for the piece
    /// `(lo, hi)` containing `t`, so log kernels centred at a break point
    /// can use exact distances.
    pub fn integrate_with(&self, splits: &[f64], g: impl Fn(f64, f64, f64, f64, f64) -> f64) -> f64 {
        self.integrate_range(f64::NEG_INFINITY, f64::INFINITY, splits, g)
    }

    fn integrate_range(&self, lo: f64, hi: f64, splits: &[f64], g: impl Fn(f64, f64, f64, f64, f64) -> f64) -> f64 {
        let mut total = 0.0;
        for &(a, b) in &self.intervals {
            let u = lo.max(a);
            let v = hi.min(b);
            if u >= v {
                continue;
            }
            let mut cuts = vec![u];
            let mut inner: Vec<f64> = splits.iter().cloned().filter(|&c| c > u && c < v).collect();
            inner.sort_by(f64::total_cmp);
            cuts.extend(inner);
            cuts.push(v);
            for w in cuts.windows(2) {
                total += self.piece(a, b, w[0], w[1], &g);
            }
        }
        total
    }

    /// Integral over `(u, v)` inside the support interval `(a, b)`.
    fn piece(&self, a: f64, b: f64, u: f64, v: f64, g: &impl Fn(f64, f64, f64, f64, f64) -> f64) -> f64 {
        let f = &self.density;
        match (u.is_finite(), v.is_finite()) {
            (true, true) => integrate(u, v, QUAD_TOL, |x, dl, dr| {
                let l = if u == a { dl } else { x - a };
                let r = if v == b { dr } else { b - x };
                f(x, l, r) * g(x, u, dl, v, dr)
            })
            .value,
            (true, false) => integrate_upper(u, QUAD_TOL, |x, dl| {
                let l = if u == a { dl } else { x - a };
                f(x, l, f64::INFINITY) * g(x, u, dl, v, f64::INFINITY)
            })
            .value,
            (false, true) => integrate_lower(v, QUAD_TOL, |x, dr| {
                let r = if v == b { dr } else { b - x };
                f(x, f64::INFINITY, r) * g(x, u, f64::INFINITY, v, dr)
            })
            .value,
            (false, false) => {
                integrate_lower(0.0, QUAD_TOL, |x, d| f(x, f64::INFINITY, f64::INFINITY) * g(x, u, f64::INFINITY, 0.0, d)).value
                    + integrate_upper(0.0, QUAD_TOL, |x, d| f(x, f64::INFINITY, f64::INFINITY) * g(x, 0.0, d, v, f64::INFINITY)).value
            }
        }
    }

    pub fn total_mass(&self) -> f64 {
        self.mass_between(f64::NEG_INFINITY, f64::INFINITY)
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct KsReport {
    pub distance: f64,
    pub window: Option<f64>,
    /// Mass of the measure on non-real points, left out of the statistic.
    pub nonreal_mass: f64,
    /// Real mass of the measure outside the window.
    pub outside_mass: f64,
    /// Mass of the reference outside the window.
    pub ref_outside_mass: f64,
}

/// `sup |F_m - F_ref|` over the real line, or over `[-R, R]` with both
/// distribution functions started at `-R`. Non-real points are reported
/// separately.
pub fn kolmogorov_distance(m: &EmpiricalMeasure, reference: &DensityRef, window: Option<f64>) -> Result<KsReport> {
    let total = reference.total_mass();
    if (total - 1.0).abs() > 1e-8 {
        return Err(Error::Degenerate(format!("reference mass {total} differs from 1")));
    }
    let (lo, hi) = match window {
        Some(r) => (-r, r),
        None => (f64::NEG_INFINITY, f64::INFINITY),
    };
    let mut xs: Vec<(f64, f64)> = Vec::new();
    let mut nonreal = 0.0;
    let mut outside = 0.0;
    for &(z, w) in &m.points {
        if !is_real_root(z) {
            nonreal += w;
        } else if z.re < lo || z.re > hi {
            outside += w;
        } else {
            xs.push((z.re, w));
        }
    }
    xs.sort_by(|a, b| a.0.total_cmp(&b.0));
    let mut fm = 0.0;
    let mut fr = 0.0;
    let mut prev = lo;
    let mut dist: f64 = 0.0;
    let mut i = 0;
    while i < xs.len() {
        let x = xs[i].0;
        fr += reference.mass_between(prev, x);
        prev = x;
        dist = dist.max((fm - fr).abs());
        while i < xs.len() && xs[i].0 == x {
            fm += xs[i].1;
            i += 1;
        }
        dist = dist.max((fm - fr).abs());
    }
    fr += reference.mass_between(prev, hi);
    dist = dist.max((fm - fr).abs());
    let ref_inside = reference.mass_between(lo, hi);
    Ok(KsReport { distance: dist.min(1.0), window, nonreal_mass: nonreal, outside_mass: outside, ref_outside_mass: 1.0 - ref_inside })
}
