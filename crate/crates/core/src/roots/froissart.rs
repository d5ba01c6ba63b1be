use num_complex::Complex64;
use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, Serialize, Deserialize)]
pub enum LimitPiece {
    Segment(Complex64, Complex64),
    /// Half-line from a point in a direction.
    Ray(Complex64, Complex64),
}

impl LimitPiece {
    pub fn distance(&self, z: Complex64) -> f64 {
        match *self {
            LimitPiece::Segment(a, b) => {
                let d = b - a;
                let t = if d.norm_sqr() == 0.0 { 0.0 } else { ((z - a) * d.conj()).re / d.norm_sqr() };
                (z - (a + d * t.clamp(0.0, 1.0))).norm()
            }
            LimitPiece::Ray(a, dir) => {
                let u = dir / dir.norm();
                let t = ((z - a) * u.conj()).re.max(0.0);
                (z - (a + u * t)).norm()
            }
        }
    }
}

/// The set where zeros are expected to accumulate, with a margin.
#[derive(Clone, Debug, Default, Serialize, Deserialize)]
pub struct LimitSet {
    pub pieces: Vec<LimitPiece>,
    pub margin: f64,
}

impl LimitSet {
    /// Real intervals, possibly with infinite ends.
    pub fn real_intervals(iv: &[(f64, f64)], margin: f64) -> Self {
        let c = |x: f64| Complex64::new(x, 0.0);
        let pieces = iv
            .iter()
            .map(|&(a, b)| match (a.is_finite(), b.is_finite()) {
                (true, true) => LimitPiece::Segment(c(a), c(b)),
                (true, false) => LimitPiece::Ray(c(a), c(1.0)),
                (false, true) => LimitPiece::Ray(c(b), c(-1.0)),
                (false, false) => LimitPiece::Ray(c(0.0), c(1.0)),
            })
            .chain(iv.iter().filter(|p| !p.0.is_finite() && !p.1.is_finite()).map(|_| LimitPiece::Ray(c(0.0), c(-1.0))))
            .collect();
        LimitSet { pieces, margin }
    }

    pub fn distance(&self, z: Complex64) -> f64 {
        self.pieces.iter().map(|p| p.distance(z)).fold(f64::INFINITY, f64::min)
    }

    pub fn excludes(&self, z: Complex64) -> bool {
        self.distance(z) > self.margin
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct ZeroPair {
    pub zero: usize,
    pub pole: usize,
    pub distance: f64,
}

fn greedy_pairs(a: &[Complex64], b: &[Complex64], radius: f64, limit: &LimitSet) -> Vec<(usize, usize, f64)> {
    let mut cand = Vec::new();
    for (i, &x) in a.iter().enumerate() {
        if !limit.excludes(x) {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            let d = (x - y).norm();
            if d < radius && limit.excludes(y) {
                cand.push((i, j, d));
            }
        }
    }
    cand.sort_by(|p, q| p.2.total_cmp(&q.2).then(p.0.cmp(&q.0)).then(p.1.cmp(&q.1)));
    let mut ua = vec![false; a.len()];
    let mut ub = vec![false; b.len()];
    let mut out = Vec::new();
    for (i, j, d) in cand {
        if !ua[i] && !ub[j] {
            ua[i] = true;
            ub[j] = true;
            out.push((i, j, d));
        }
    }
    out
}

/// Zero/pole pairs closer than `radius`, both away from the limit set,
/// matched greedily by distance.
pub fn froissart_pairs(zeros: &[Complex64], poles: &[Complex64], radius: f64, limit: &LimitSet) -> Vec<ZeroPair> {
    greedy_pairs(zeros, poles, radius, limit)
        .into_iter()
        .map(|(zero, pole, distance)| ZeroPair { zero, pole, distance })
        .collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Triplet {
    pub indices: [usize; 3],
    /// Largest pairwise distance.
    pub diameter: f64,
}

/// One zero from each of three sets, pairwise closer than `radius`.
pub fn froissart_triplets(sets: [&[Complex64]; 3], radius: f64, limit: &LimitSet) -> Vec<Triplet> {
    let mut cand = Vec::new();
    for (i, j, d01) in greedy_pairs(sets[0], sets[1], radius, limit) {
        for (k, &z) in sets[2].iter().enumerate() {
            let d02 = (sets[0][i] - z).norm();
            let d12 = (sets[1][j] - z).norm();
            if d02 < radius && d12 < radius && limit.excludes(z) {
                cand.push(Triplet { indices: [i, j, k], diameter: d01.max(d02).max(d12) });
            }
        }
    }
    cand.sort_by(|p, q| p.diameter.total_cmp(&q.diameter).then(p.indices.cmp(&q.indices)));
    let mut used = vec![false; sets[2].len()];
    let mut out = Vec::new();
    for t in cand {
        if !used[t.indices[2]] {
            used[t.indices[2]] = true;
            out.push(t);
        }
    }
    out
}
