use crate::arith::{abs_f64, from_c64, to_c64, Field, Prec};
use crate::error::{Error, Result};
use crate::quad::integrate_mp;
use num_complex::Complex64;
use rug::{Complex, Float};
use serde::{Deserialize, Serialize};

const DETOUR: f64 = 1e-2;

/// One piece of a period contour, parametrized by `u` in `[0, 1]`.
enum Piece {
    /// Straight line; flags say whether the ends are the branch points.
    Line { from: Complex, to: Complex, at_a: bool, at_b: bool },
    Arc { center: Complex, radius: Float, theta0: Float, theta1: Float },
}

/// Square root with the cut turned away from a contour seen from `p`:
/// `sqrt(w / r) sqrt(r)` with `r` the unit direction to the contour.
fn sqrt_rot(w: &Complex, r: &Complex, sr: &Complex) -> Complex {
    let bits = w.prec().0;
    Complex::with_val(bits, w / r).sqrt() * sr
}

fn unit(z: Complex) -> Complex {
    let m = Float::with_val(z.prec().0, z.abs_ref());
    z / m
}

struct Contour {
    a: Complex,
    b: Complex,
    pieces: Vec<Piece>,
    rv: Complex,
    srv: Complex,
    rc: Complex,
    src: Complex,
}

fn foot(p: &Complex, a: &Complex, b: &Complex) -> (Complex, Float) {
    let bits = p.prec().0;
    let d = Complex::with_val(bits, b - a);
    let n2 = Float::with_val(bits, d.abs_ref()).square();
    let pa = Complex::with_val(bits, p - a);
    let t = Float::with_val(bits, Complex::with_val(bits, pa * d.clone().conj()).real()) / n2;
    let f = Complex::with_val(bits, a + d * &t);
    (f, t)
}

impl Contour {
    fn new(a: &Complex, b: &Complex, c: &Complex, v: &Complex) -> Self {
        let bits = a.prec().0;
        let (fv, tv) = foot(v, a, b);
        let dv = Complex::with_val(bits, &fv - v);
                let normal = unit(Complex::with_val(bits, b - a) * Complex::with_val(bits, (0, 1)));
        let dist = abs_f64(&dv);
        let tv = tv.to_f64();
        let near = dist < DETOUR && tv > 0.0 && tv < 1.0;
        let rv = if dv.is_zero() { normal.clone() } else { unit(dv.clone()) };
        let (fc, _) = foot(c, a, b);
        let rc = unit(Complex::with_val(bits, &fc - c));
        let pieces = if near {
            let dir = unit(Complex::with_val(bits, b - a));
            let rad = Float::with_val(bits, DETOUR);
            let s1 = Complex::with_val(bits, &fv - Complex::with_val(bits, &dir * &rad));
            let s2 = Complex::with_val(bits, &fv + Complex::with_val(bits, &dir * &rad));
            // bulge on the side away from v: direction rv
            let ang_dir = Float::with_val(bits, dir.imag().clone().atan2(dir.real()));
            let side = Complex::with_val(bits, &rv * dir.clone().conj());
            let pi = Float::with_val(bits, rug::float::Constant::Pi);
            let theta0 = Float::with_val(bits, &ang_dir + &pi);
            let theta1 = if side.imag().is_sign_positive() {
                Float::with_val(bits, &ang_dir)
            } else {
                Float::with_val(bits, &ang_dir + Float::with_val(bits, &pi * 2u32))
            };
            vec![
                Piece::Line { from: a.clone(), to: s1, at_a: true, at_b: false },
                Piece::Arc { center: fv.clone(), radius: rad, theta0, theta1 },
                Piece::Line { from: s2, to: b.clone(), at_a: false, at_b: true },
            ]
        } else {
            vec![Piece::Line { from: a.clone(), to: b.clone(), at_a: true, at_b: true }]
        };
        let srv = Complex::with_val(bits, rv.sqrt_ref());
        let src = Complex::with_val(bits, rc.sqrt_ref());
        Contour { a: a.clone(), b: b.clone(), pieces, rv, srv, rc, src }
    }

    /// `int sqrt((z-v)/A3) dz` and its derivative in `v` over the contour.
    fn integrate(&self, c: &Complex, v: &Complex, prec: Prec, digits: u32) -> (Complex, Complex) {
        let bits = prec.bits();
        let ba = Complex::with_val(bits, &self.b - &self.a);
        let ba2 = Complex::with_val(bits, &ba * &ba);
        // sqrt((z-a)(z-b)) = i (b-a) sqrt(Y), Y = -(z-a)(z-b)/(b-a)^2
        let iba = Complex::with_val(bits, &ba * Complex::with_val(bits, (0, 1)));
        let mut total = Complex::new(bits);
        let mut dtotal = Complex::new(bits);
        for piece in &self.pieces {
            let r = integrate_mp(prec, digits, 12, |u, w| {
                let (z, za, zb, dz) = match piece {
                    Piece::Line { from, to, at_a, at_b } => {
                        let d = Complex::with_val(bits, to - from);
                        let z = if u < w {
                            Complex::with_val(bits, from + Complex::with_val(bits, &d * u))
                        } else {
                            Complex::with_val(bits, to - Complex::with_val(bits, &d * w))
                        };
                        let za = if *at_a { Complex::with_val(bits, &d * u) } else { Complex::with_val(bits, &z - &self.a) };
                        let zb = if *at_b { -Complex::with_val(bits, &d * w) } else { Complex::with_val(bits, &z - &self.b) };
                        (z, za, zb, d)
                    }
                    Piece::Arc { center, radius, theta0, theta1 } => {
                        let span = Float::with_val(bits, theta1 - theta0);
                        let th = Float::with_val(bits, theta0 + Float::with_val(bits, &span * u));
                        let (s, co) = th.sin_cos(Float::new(bits));
                        let e = Complex::with_val(bits, (co, s));
                        let z = Complex::with_val(bits, center + Complex::with_val(bits, &e * radius));
                        let dz = Complex::with_val(bits, &e * Complex::with_val(bits, (0, 1))) * radius * &span;
                        let za = Complex::with_val(bits, &z - &self.a);
                        let zb = Complex::with_val(bits, &z - &self.b);
                        (z, za, zb, dz)
                    }
                };
                let y = -Complex::with_val(bits, &za * &zb) / &ba2;
                let s = Complex::with_val(bits, &iba * y.sqrt());
                let zv = Complex::with_val(bits, &z - v);
                let zc = Complex::with_val(bits, &z - c);
                let sv = sqrt_rot(&zv, &self.rv, &self.srv);
                let sc = sqrt_rot(&zc, &self.rc, &self.src);
                let den = Complex::with_val(bits, &sc * &s);
                let f = Complex::with_val(bits, &sv / &den) * &dz;
                let df = -Complex::with_val(bits, &dz / (den * &sv)) / 2u32;
                vec![f, df]
            });
            total += &r[0];
            dtotal += &r[1];
        }
        (total, dtotal)
    }
}

/// The two periods `a1 -> a2` and `a1 -> a3` with their `v` derivatives.
pub fn periods(a: &[Complex; 3], v: &Complex, prec: Prec, digits: u32) -> [(Complex, Complex); 2] {
    let c12 = Contour::new(&a[0], &a[1], &a[2], v);
    let c13 = Contour::new(&a[0], &a[2], &a[1], v);
    [c12.integrate(&a[2], v, prec, digits), c13.integrate(&a[1], v, prec, digits)]
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Chebotarev {
    pub v: Complex64,
    /// Decimal string of `v` at full precision.
    pub v_text: String,
    pub digits: u32,
    pub iterations: usize,
    /// log10 of `max |Re period|` at the returned point.
    pub residual_log10: f64,
    /// The same recomputed with finer quadrature at more digits.
    pub recheck_log10: f64,
}

fn max_re_log10(p: &[(Complex, Complex); 2]) -> f64 {
    p.iter().map(|x| Field::mag(x.0.real()).log10()).fold(f64::NEG_INFINITY, f64::max)
}

/// Zero of the three-point quadratic differential for which both periods
/// of `sqrt((z-v)/A3) dz` are purely imaginary. Newton from the centroid.
pub fn chebotarev_point(pts: [Complex64; 3], prec: Prec) -> Result<(Chebotarev, Complex)> {
    let bits = prec.bits();
    let scale = pts.iter().map(|p| p.norm()).fold(1.0, f64::max);
    let cross = ((pts[1] - pts[0]).conj() * (pts[2] - pts[0])).im;
    if cross.abs() <= 1e-12 * scale * scale {
        return Err(Error::Degenerate("branch points are collinear".into()));
    }
    for i in 0..3 {
        for j in i + 1..3 {
            if (pts[i] - pts[j]).norm() <= 1e-12 * scale {
                return Err(Error::Degenerate("branch points coincide".into()));
            }
        }
    }
    let a: [Complex; 3] = pts.map(|p| from_c64(p, prec));
    let mut v = Complex::with_val(bits, &a[0] + &a[1]);
    v += &a[2];
    v /= 3u32;
    let digits = prec.get();
    let target = -(digits as f64) / 3.0;
    for it in 0..50 {
        let p = periods(&a, &v, prec, digits);
        let res = max_re_log10(&p);
        if res < target {
            let hi = Prec::digits(digits + digits / 2);
            let vh = Complex::with_val(hi.bits(), &v);
            let ah: [Complex; 3] = pts.map(|q| from_c64(q, hi));
            let re = max_re_log10(&periods(&ah, &vh, hi, hi.get()));
            let text = crate::arith::fmt_complex(&v, (digits as usize).min(40));
            return Ok((Chebotarev { v: to_c64(&v), v_text: text, digits, iterations: it, residual_log10: res, recheck_log10: re }, v));
        }
        // J = [[Re P', -Im P'] ...] for the two real conditions
        let (f1, f2) = (p[0].0.real().clone(), p[1].0.real().clone());
        let (j11, j12) = (p[0].1.real().clone(), -p[0].1.imag().clone());
        let (j21, j22) = (p[1].1.real().clone(), -p[1].1.imag().clone());
        let det = Float::with_val(bits, &j11 * &j22) - Float::with_val(bits, &j12 * &j21);
        if det.is_zero() {
            return Err(Error::NotConverged("singular period Jacobian".into()));
        }
        let dx = (Float::with_val(bits, &j22 * &f1) - Float::with_val(bits, &j12 * &f2)) / &det;
        let dy = (Float::with_val(bits, &j11 * &f2) - Float::with_val(bits, &j21 * &f1)) / &det;
        v -= Complex::with_val(bits, (dx, dy));
        if !v.real().is_finite() || abs_f64(&v) > 10.0 * scale {
            return Err(Error::NotConverged("Newton left the configuration".into()));
        }
    }
    Err(Error::NotConverged("Chebotarev point after 50 Newton steps".into()))
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct StahlGeometry {
    pub points: [Complex64; 3],
    pub v: Complex64,
    /// One polyline per branch point, from `a_j` to (near) `v`.
    pub arcs: Vec<Vec<Complex64>>,
}

impl StahlGeometry {
    /// Distance from `z` to the nearest arc polyline.
    pub fn distance(&self, z: Complex64) -> f64 {
        let mut best = f64::INFINITY;
        for arc in &self.arcs {
            for w in arc.windows(2) {
                let d = w[1] - w[0];
                let n2 = d.norm_sqr();
                let t = if n2 == 0.0 { 0.0 } else { (((z - w[0]) * d.conj()).re / n2).clamp(0.0, 1.0) };
                best = best.min((z - (w[0] + d * t)).norm());
            }
        }
        best
    }
}

fn q_of(z: Complex64, a: &[Complex64; 3], v: Complex64) -> Complex64 {
    (z - v) / ((z - a[0]) * (z - a[1]) * (z - a[2]))
}

/// Unit direction with `sqrt(Q) dz` imaginary, oriented along `heading`.
fn direction(z: Complex64, a: &[Complex64; 3], v: Complex64, heading: Complex64) -> Complex64 {
    let s = q_of(z, a, v).sqrt();
    let d = Complex64::new(0.0, 1.0) * s.conj() / s.norm();
    if (d * heading.conj()).re < 0.0 {
        -d
    } else {
        d
    }
}

pub const ARC_STEP: f64 = 1e-3;
pub const ARC_STOP: f64 = 1e-6;

/// Trajectories of `-(z-v)/A3(z) dz^2 > 0` from each branch point to `v`,
/// by RK4 with unit speed. Steps shrink near the branch point and near `v`.
pub fn trace_stahl_arcs(a: [Complex64; 3], v: Complex64) -> Result<StahlGeometry> {
    let escape = 10.0 * a.iter().map(|p| p.norm()).fold(0.0, f64::max);
    let mut arcs = Vec::new();
    for j in 0..3 {
        let mut c = a[j] - v;
        for k in 0..3 {
            if k != j {
                c /= a[j] - a[k];
            }
        }
        let c = Complex64::new(0.0, 0.0) + c;
        // c e^{i theta} < 0
        let head = -c.conj() / c.norm();
        let h0 = 1e-8;
        let mut z = a[j] + head * h0;
        let mut heading = head;
        let mut arc = vec![a[j], z];
        let mut steps = 0usize;
        loop {
            let dv = (z - v).norm();
            if dv < ARC_STOP {
                break;
            }
            let h = ARC_STEP.min(0.1 * (z - a[j]).norm()).min(0.5 * dv);
            let k1 = direction(z, &a, v, heading);
            let k2 = direction(z + k1 * (h / 2.0), &a, v, k1);
            let k3 = direction(z + k2 * (h / 2.0), &a, v, k1);
            let k4 = direction(z + k3 * h, &a, v, k1);
            let step = (k1 + k2 * 2.0 + k3 * 2.0 + k4) / 6.0;
            heading = k1;
            z += step * h;
            arc.push(z);
            steps += 1;
            if z.norm() > escape || !z.re.is_finite() {
                return Err(Error::NotConverged(format!("arc from a_{} escaped; inconsistent geometry", j + 1)));
            }
            if steps > 2_000_000 {
                return Err(Error::NotConverged(format!("arc from a_{} did not reach v", j + 1)));
            }
        }
        arcs.push(arc);
    }
    Ok(StahlGeometry { points: a, v, arcs })
}

/// `max |Re int_{a_j}^z sqrt((t-v)/A3) dt|` over the arc vertices, by
/// Simpson's rule on each polyline piece with the root continued along
/// the arc.
pub fn arc_potential_max(g: &StahlGeometry) -> f64 {
    let mut worst: f64 = 0.0;
    for arc in &g.arcs {
        let mut acc = 0.0;
        let mut prev: Option<Complex64> = None;
        let branch = |z: Complex64, prev: &mut Option<Complex64>| {
            let s = q_of(z, &g.points, g.v).sqrt();
            let s = match prev {
                Some(p) if (s * p.conj()).re < 0.0 => -s,
                _ => s,
            };
            *prev = Some(s);
            s
        };
        // the first piece leaves a_j along the exact critical direction
        for w in arc.windows(2).skip(1) {
            let m = (w[0] + w[1]) * 0.5;
            let f0 = branch(w[0], &mut prev);
            let fm = branch(m, &mut prev);
            let f1 = branch(w[1], &mut prev);
            acc += ((f0 + fm * 4.0 + f1) / 6.0 * (w[1] - w[0])).re;
            worst = worst.max(acc.abs());
        }
    }
    worst
}
