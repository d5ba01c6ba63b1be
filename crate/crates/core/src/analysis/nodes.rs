use crate::arith::Prec;
use crate::error::{Error, Result};
use crate::germ::Germ;
use crate::hermite::HermiteApproximants;
use rug::float::Constant;
use rug::{Complex, Float};
use serde::{Deserialize, Serialize};

/// `f_2` restricted to the cut set, where it is real: the off-cut branch
/// times `-2 cos(pi s)`, evaluated from the upper boundary value.
pub struct RealTarget {
    germ: Germ,
    rot: Complex,
    pub segments: Vec<(f64, f64)>,
}

impl RealTarget {
    pub fn new(germ: &Germ, prec: Prec) -> Result<Self> {
        let sb = germ.second_branch(prec)?;
        let s = germ.off_f_phase(prec)?;
        let th = -Float::with_val(prec.bits(), &s * Float::with_val(prec.bits(), Constant::Pi));
        let (sn, cs) = th.sin_cos(Float::new(prec.bits()));
        let rot = Complex::with_val(prec.bits(), (cs, sn)) * &sb.constant;
        Ok(RealTarget { germ: germ.clone(), rot, segments: germ.cut_segments_f64()? })
    }

    pub fn eval(&self, x: &Float) -> Result<Float> {
        let (fp, _) = self.germ.boundary_values(x)?;
        Ok(Complex::with_val(x.prec(), fp * &self.rot).real().clone())
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct NodeSet {
    pub nodes: Vec<f64>,
    pub count: usize,
    /// Width of the final bracket around each node.
    pub bracket: f64,
    /// Sign changes caused by poles of the approximant, dropped.
    pub pole_brackets: usize,
    /// `2n - count`, the observed number of missing free nodes.
    pub missing: i64,
}

/// Grid on `(a, b)` clustered like `(distance to end)^(1/4)` at both ends.
pub fn clustered_grid(a: f64, b: f64, points: usize) -> Vec<f64> {
    let mid = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    (1..points)
        .map(|k| {
            let t = -1.0 + 2.0 * k as f64 / points as f64;
            mid + half * t.signum() * (1.0 - (1.0 - t.abs()).powi(4))
        })
        .collect()
}

pub(crate) struct ErrorEval<'a> {
    pub h: &'a HermiteApproximants,
    pub target: &'a RealTarget,
    pub prec: Prec,
}

impl ErrorEval<'_> {
    /// `f_2(x) - H_{n,1}(x)` and the sign of `Q_{n,2}(x)`.
    pub fn at(&self, x: f64) -> Result<(Float, bool)> {
        let xf = Float::with_val(self.prec.bits(), x);
        let z = Complex::with_val(self.prec.bits(), &xf);
        let den = self.h.den.eval(&z);
        let num = self.h.h1.eval(&z);
        let hv = Complex::with_val(self.prec.bits(), &num / &den);
        let f2 = self.target.eval(&xf)?;
        Ok((f2 - hv.real(), den.real().is_sign_positive()))
    }
}

/// Sign changes of `f_2 - H_{n,1}` on the cut segments, bisected to
/// `1e-12`. Brackets across which `Q_{n,2}` changes sign are poles and are
/// dropped.
pub fn interpolation_nodes(h: &HermiteApproximants, target: &RealTarget, n: usize, per_segment: Option<usize>) -> Result<NodeSet> {
    let prec = h.den.prec();
    let ev = ErrorEval { h, target, prec };
    let pts = per_segment.unwrap_or(40 * n.max(1));
    let mut nodes = Vec::new();
    let mut poles = 0;
    for &(a, b) in &target.segments {
        let grid = clustered_grid(a, b, pts);
        let mut prev: Option<(f64, Float, bool)> = None;
        for &x in &grid {
            let (e, s) = ev.at(x)?;
            if let Some((xp, ep, sp)) = &prev {
                if e.is_zero() {
                    nodes.push(x);
                } else if !ep.is_zero() && ep.is_sign_negative() != e.is_sign_negative() {
                    if *sp != s {
                        poles += 1;
                    } else {
                        nodes.push(bisect(&ev, *xp, x, ep.is_sign_negative())?);
                    }
                }
            }
            prev = Some((x, e, s));
        }
    }
    let count = nodes.len();
    Ok(NodeSet { nodes, count, bracket: 1e-12, pole_brackets: poles, missing: 2 * n as i64 - count as i64 })
}

fn bisect(ev: &ErrorEval, mut lo: f64, mut hi: f64, lo_negative: bool) -> Result<f64> {
    while hi - lo > 1e-12 {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        let (e, _) = ev.at(mid)?;
        if e.is_zero() {
            return Ok(mid);
        }
        if e.is_sign_negative() == lo_negative {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(0.5 * (lo + hi))
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct AlternationReport {
    pub n: usize,
    pub theta: f64,
    /// `floor(2n(1 - theta))`.
    pub required: usize,
    /// Longest run of consecutive extrema with alternating signs.
    pub run: usize,
    /// Abscissae, signs (+1/-1) and weighted magnitudes of the extrema.
    pub extrema: Vec<(f64, i8, f64)>,
    /// Range of weighted magnitudes over extrema with `|x| <= 1/2`.
    pub central_range: (f64, f64),
}

impl AlternationReport {
    pub fn passes(&self, lo: f64, hi: f64) -> bool {
        self.run >= self.required && self.central_range.0 >= lo && self.central_range.1 <= hi
    }
}

/// Extrema of `w_n(x) (f_2 - H_{n,1})(x)` between consecutive nodes and the
/// longest alternating run. `log_weight(x)` is `ln w_n(x)`.
pub fn alternation_check(
    h: &HermiteApproximants,
    target: &RealTarget,
    nodes: &NodeSet,
    n: usize,
    theta: f64,
    log_weight: impl Fn(f64) -> f64,
) -> Result<AlternationReport> {
    if !(theta > 0.0 && theta < 1.0) {
        return Err(Error::Config("theta must lie in (0, 1)".into()));
    }
    let prec = h.den.prec();
    let ev = ErrorEval { h, target, prec };
    let weighted = |x: f64| -> Result<f64> {
        let (e, _) = ev.at(x)?;
        if e.is_zero() {
            return Ok(0.0);
        }
        let l = Float::with_val(64, e.abs_ref()).ln().to_f64() + log_weight(x);
        Ok(if e.is_sign_negative() { -l.exp() } else { l.exp() })
    };
    let mut extrema = Vec::new();
    for w in nodes.nodes.windows(2) {
        let (lo, hi) = (w[0], w[1]);
        // sample, then golden-section on the best cell
        let k = 12;
        let mut best = (0.0f64, 0.0f64);
        for j in 1..k {
            let x = lo + (hi - lo) * j as f64 / k as f64;
            let v = weighted(x)?;
            if v.abs() > best.1.abs() {
                best = (x, v);
            }
        }
        let cell = (hi - lo) / k as f64;
        let (mut a, mut b) = ((best.0 - cell).max(lo), (best.0 + cell).min(hi));
        let g = 0.5 * (5f64.sqrt() - 1.0);
        let mut c = b - g * (b - a);
        let mut d = a + g * (b - a);
        let mut fc = weighted(c)?.abs();
        let mut fd = weighted(d)?.abs();
        for _ in 0..30 {
            if fc > fd {
                b = d;
                d = c;
                fd = fc;
                c = b - g * (b - a);
                fc = weighted(c)?.abs();
            } else {
                a = c;
                c = d;
                fc = fd;
                d = a + g * (b - a);
                fd = weighted(d)?.abs();
            }
        }
        let x = 0.5 * (a + b);
        let v = weighted(x)?;
        let v = if v.abs() >= best.1.abs() { v } else { best.1 };
        extrema.push((x, if v < 0.0 { -1i8 } else { 1i8 }, v.abs()));
    }
    if extrema.len() < 2 {
        return Err(Error::Degenerate("fewer than two extrema".into()));
    }
    let mut run = 1;
    let mut cur = 1;
    for w in extrema.windows(2) {
        if w[0].1 != w[1].1 {
            cur += 1;
            run = run.max(cur);
        } else {
            cur = 1;
        }
    }
    let central: Vec<f64> = extrema.iter().filter(|e| e.0.abs() <= 0.5).map(|e| e.2).collect();
    let central_range = (
        central.iter().cloned().fold(f64::INFINITY, f64::min),
        central.iter().cloned().fold(f64::NEG_INFINITY, f64::max),
    );
    Ok(AlternationReport { n, theta, required: (2.0 * n as f64 * (1.0 - theta)).floor() as usize, run, extrema, central_range })
}
