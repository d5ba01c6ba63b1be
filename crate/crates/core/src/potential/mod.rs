//! Equilibrium measures on unions of real segments, Green functions, the
//! explicit `q = 1` measures of the Hermite–Padé condenser, and Stahl
//! geometry for three branch points.

mod stahl;

pub use crate::roots::DensityRef;
pub use stahl::{arc_potential_max, chebotarev_point, periods, trace_stahl_arcs, Chebotarev, StahlGeometry};

use crate::error::{Error, Result};
use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use std::f64::consts::PI;

/// `w + sqrt(w-1) sqrt(w+1)`, the inverse Joukowski map onto `|u| >= 1`.
pub fn joukowski_inv(w: Complex64) -> Complex64 {
    let one = Complex64::new(1.0, 0.0);
    let s = (w - one).sqrt() * (w + one).sqrt();
    let u = w + s;
    if u.norm() >= 1.0 {
        u
    } else {
        w - s
    }
}

/// Green function of the complement of the real segment `[a, b]` at `z`
/// with pole at `pole` (`None` for infinity).
pub fn green_segment(a: f64, b: f64, z: Complex64, pole: Option<Complex64>) -> f64 {
    let to_unit = |x: Complex64| (x * 2.0 - (a + b)) / (b - a);
    let u = joukowski_inv(to_unit(z));
    match pole {
        None => u.norm().ln().max(0.0),
        Some(p) => {
            let bp = joukowski_inv(to_unit(p));
            ((Complex64::new(1.0, 0.0) - bp.conj() * u) / (u - bp)).norm().ln()
        }
    }
}

fn check_segments(e: &[(f64, f64)]) -> Result<Vec<(f64, f64)>> {
    if e.is_empty() {
        return Err(Error::Config("empty segment list".into()));
    }
    let mut s = e.to_vec();
    s.sort_by(|x, y| x.0.total_cmp(&y.0));
    for w in &s {
        if !(w.0 < w.1) || !w.0.is_finite() || !w.1.is_finite() {
            return Err(Error::Config(format!("bad segment [{}, {}]", w.0, w.1)));
        }
    }
    for w in s.windows(2) {
        if w[1].0 <= w[0].1 {
            return Err(Error::Config(format!("segments [{}, {}] and [{}, {}] overlap", w[0].0, w[0].1, w[1].0, w[1].1)));
        }
    }
    Ok(s)
}

/// `prod |x - e|` over all segment ends, using the exact distances to
/// the ends of the current interval.
fn end_product(ends: &[f64], x: f64, a: f64, dl: f64, b: f64, dr: f64) -> f64 {
    ends.iter()
        .map(|&e| {
            if e == a {
                dl
            } else if e == b {
                dr
            } else {
                (x - e).abs()
            }
        })
        .product()
}

/// `|z - t|`, exact when `z` is real and sits at an end of the piece.
fn dist_at(z: Complex64, t: f64, lo: f64, dl: f64, hi: f64, dr: f64) -> f64 {
    if z.im == 0.0 && z.re == lo {
        dl
    } else if z.im == 0.0 && z.re == hi {
        dr
    } else {
        (z - t).norm()
    }
}

/// `V^mu(z) = int log 1/|z - t| dmu(t)`.
pub fn log_potential(mu: &DensityRef, z: Complex64) -> f64 {
    mu.integrate_with(&[z.re], |t, lo, dl, hi, dr| -dist_at(z, t, lo, dl, hi, dr).ln())
}

/// Equilibrium measure of a union of segments with its Robin constant.
#[derive(Clone, Debug)]
pub struct Equilibrium {
    pub segments: Vec<(f64, f64)>,
    pub density: DensityRef,
    /// `V^lambda` on the segments, `log 1/cap(E)`.
    pub robin: f64,
    /// Coefficients of the numerator polynomial, ascending.
    pub numerator: Vec<f64>,
}

impl Equilibrium {
    /// `g_E(z, infinity) = robin - V^lambda(z)`.
    pub fn green_inf(&self, z: Complex64) -> f64 {
        self.robin - log_potential(&self.density, z)
    }
}

/// Density `|P(x)| / (pi sqrt|prod (x - e_j)|)` with `P` of degree `q-1`
/// fixed by zero integrals over the gaps and unit mass.
pub fn equilibrium_intervals(e: &[(f64, f64)]) -> Result<Equilibrium> {
    let segs = check_segments(e)?;
    let q = segs.len();
    let ends: Vec<f64> = segs.iter().flat_map(|s| [s.0, s.1]).collect();
    let moment = |a: f64, b: f64, k: usize| {
        let ends = ends.clone();
        crate::quad::integrate(a, b, 1e-13, move |x, dl, dr| x.powi(k as i32) / end_product(&ends, x, a, dl, b, dr).sqrt()).value
    };
    let mut m = DMatrix::<f64>::zeros(q, q);
    let mut rhs = DVector::<f64>::zeros(q);
    for (g, w) in segs.windows(2).enumerate() {
        for k in 0..q {
            m[(g, k)] = moment(w[0].1, w[1].0, k);
        }
    }
    for k in 0..q {
        m[(q - 1, k)] = segs
            .iter()
            .enumerate()
            .map(|(j, s)| {
                let sign = if (q - 1 - j) % 2 == 0 { 1.0 } else { -1.0 };
                sign * moment(s.0, s.1, k) / PI
            })
            .sum();
    }
    rhs[q - 1] = 1.0;
    let c = m.lu().solve(&rhs).ok_or_else(|| Error::Degenerate("singular gap system".into()))?;
    let numerator: Vec<f64> = c.iter().cloned().collect();
    let p = numerator.clone();
    let ends2 = ends.clone();
    let segs2 = segs.clone();
    let density = DensityRef::new(segs.clone(), move |x, dl, dr| {
        let &(a, b) = segs2.iter().find(|s| x >= s.0 && x <= s.1).unwrap_or(&segs2[0]);
        let px: f64 = p.iter().rev().fold(0.0, |acc, c| acc * x + c);
        px.abs() / (PI * end_product(&ends2, x, a, dl, b, dr).sqrt())
    });
    let (a, b) = segs[0];
    let robin = log_potential(&density, Complex64::new(0.5 * (a + b), 0.0));
    Ok(Equilibrium { segments: segs, density, robin, numerator })
}

/// The explicit measures of the two-plate problem for `E = [-1, 1]`.
pub struct PaperDensities {
    pub eta_e: DensityRef,
    pub eta_f: DensityRef,
}

fn eta_e_formula(dl: f64, dr: f64) -> f64 {
    3f64.sqrt() / (4.0 * PI) / (dl * dr).cbrt() * (1.0 / dr.cbrt() + 1.0 / dl.cbrt())
}

/// `ax - 1` for `|x| > 1`, as `d`.
fn eta_f_formula(x: f64, d: f64) -> f64 {
    let ax = x.abs();
    3f64.sqrt() / (2.0 * PI) / (d * (ax + 1.0)).cbrt() * (1.0 / d.cbrt() - 1.0 / (ax + 1.0).cbrt())
}

impl PaperDensities {
    /// `d eta_E / dx` at an interior point of `(-1, 1)`.
    pub fn eta_e_at(x: f64) -> Result<f64> {
        if !(x > -1.0 && x < 1.0) {
            return Err(Error::OnCut(format!("eta_E is singular or zero at {x}")));
        }
        Ok(eta_e_formula(1.0 + x, 1.0 - x))
    }

    /// `d eta_F / dx` for `|x| > 1`.
    pub fn eta_f_at(x: f64) -> Result<f64> {
        if !(x.abs() > 1.0) || !x.is_finite() {
            return Err(Error::OnCut(format!("eta_F is singular or zero at {x}")));
        }
        Ok(eta_f_formula(x, x.abs() - 1.0))
    }
}

/// The closed-form densities for `q = 1`. They do not depend on the
/// exponent, which is only checked for admissibility.
pub fn paper_densities(alpha: f64) -> Result<PaperDensities> {
    if (2.0 * alpha).fract() == 0.0 {
        return Err(Error::InvalidGerm(format!("2 alpha = {} is an integer", 2.0 * alpha)));
    }
    let eta_e = DensityRef::new(vec![(-1.0, 1.0)], |_, dl, dr| eta_e_formula(dl, dr));
    let eta_f = DensityRef::new(vec![(f64::NEG_INFINITY, -1.0), (1.0, f64::INFINITY)], |x, dl, dr| {
        let d = if x > 0.0 { dl } else { dr };
        eta_f_formula(x, d)
    });
    Ok(PaperDensities { eta_e, eta_f })
}

/// Plates `E = [a, b]` and `F`, the closure of the rest of the extended
/// real line. Green functions with finite poles are available for one
/// segment only.
#[derive(Clone, Copy, Debug, Serialize, Deserialize)]
pub struct Condenser {
    pub a: f64,
    pub b: f64,
}

impl Condenser {
    pub fn new(e: &[(f64, f64)]) -> Result<Self> {
        let s = check_segments(e)?;
        if s.len() != 1 {
            return Err(Error::Unsupported("Green functions of the two plates need a single segment".into()));
        }
        Ok(Condenser { a: s[0].0, b: s[0].1 })
    }

    fn center(&self) -> f64 {
        0.5 * (self.a + self.b)
    }

    /// `g_E(zeta, z)`; `zeta = None` is the pole at infinity.
    pub fn g_e(&self, zeta: Option<Complex64>, z: Complex64) -> f64 {
        green_segment(self.a, self.b, z, zeta)
    }

    /// `g_F(zeta, z)`, Green function of the complement of `F`, through
    /// `x -> 1/(x - c)` which sends `F` onto a bounded segment.
    pub fn g_f(&self, zeta: Complex64, z: Complex64) -> f64 {
        let c = self.center();
        let h = 2.0 / (self.b - self.a);
        let m = |x: Complex64| if x == Complex64::new(c, 0.0) { None } else { Some((x - c).inv()) };
        match (m(z), m(zeta)) {
            (Some(w), p) => green_segment(-h, h, w, p),
            (None, Some(p)) => green_segment(-h, h, p, None),
            (None, None) => f64::INFINITY,
        }
    }

    /// `V^mu_*`, the potential with kernel `log 1/|1 - z/t|` outside the
    /// unit disk.
    pub fn star_potential(mu: &DensityRef, z: Complex64) -> f64 {
        mu.integrate_with(&[z.re], |t, lo, dl, hi, dr| {
            let d = dist_at(z, t, lo, dl, hi, dr);
            if t.abs() <= 1.0 {
                -d.ln()
            } else {
                -(d / t.abs()).ln()
            }
        })
    }

    /// `int g_F(t, z) dmu(t)` for `mu` on `E`.
    pub fn green_potential_f(&self, mu: &DensityRef, z: Complex64) -> f64 {
        mu.integrate_with(&[z.re], |t, _, _, _, _| self.g_f(Complex64::new(t, 0.0), z))
    }

    /// `int g_E(t, z) dmu(t)` for `mu` on `F`.
    pub fn green_potential_e(&self, mu: &DensityRef, z: Complex64) -> f64 {
        mu.integrate_with(&[z.re], |t, _, _, _, _| self.g_e(Some(Complex64::new(t, 0.0)), z))
    }

    /// Left side of the identity on `E`: `3 V^eta_E + G_F^eta_E`.
    pub fn lhs_on_e(&self, eta_e: &DensityRef, x: f64) -> f64 {
        let z = Complex64::new(x, 0.0);
        3.0 * log_potential(eta_e, z) + self.green_potential_f(eta_e, z)
    }

    /// Left side of the identity on `F`: `3 V_*^eta_F + G_E^eta_F + 3 g_E(., inf)`.
    pub fn lhs_on_f(&self, eta_f: &DensityRef, y: f64) -> f64 {
        let z = Complex64::new(y, 0.0);
        3.0 * Self::star_potential(eta_f, z) + self.green_potential_e(eta_f, z) + 3.0 * self.g_e(None, z)
    }

    /// Predicted `|f_2 - H_{n,1}|^(1/n)` limit, `exp(-2 G_F^eta_E(z))`.
    pub fn predicted_rate(&self, eta_e: &DensityRef, z: Complex64) -> f64 {
        (-2.0 * self.green_potential_f(eta_e, z)).exp()
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Spread {
    pub min: f64,
    pub max: f64,
    pub spread: f64,
    pub points: usize,
}

impl Spread {
    fn of(vals: &[f64]) -> Self {
        let min = vals.iter().cloned().fold(f64::INFINITY, f64::min);
        let max = vals.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
        Spread { min, max, spread: max - min, points: vals.len() }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct EquilibriumReport {
    pub on_e: Spread,
    pub on_f: Spread,
}

/// Uniform grid of `n` points on `[lo, hi]`.
pub fn grid(lo: f64, hi: f64, n: usize) -> Vec<f64> {
    (0..n).map(|k| lo + (hi - lo) * k as f64 / (n.max(2) - 1) as f64).collect()
}

/// Max minus min of both identities' left sides on the given grids.
pub fn equilibrium_residual(c: &Condenser, eta_e: &DensityRef, eta_f: &DensityRef, grid_e: &[f64], grid_f: &[f64]) -> EquilibriumReport {
    let on_e: Vec<f64> = grid_e.iter().map(|&x| c.lhs_on_e(eta_e, x)).collect();
    let on_f: Vec<f64> = grid_f.iter().map(|&y| c.lhs_on_f(eta_f, y)).collect();
    EquilibriumReport { on_e: Spread::of(&on_e), on_f: Spread::of(&on_f) }
}

#[cfg(test)]
mod tests;
