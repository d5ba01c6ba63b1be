use super::{row_residual, solve_null, Certificate};
use crate::arith::{Num, Poly, Prec, PrecisionPolicy};
use crate::error::{Error, Result};
use crate::germ::{Center, Germ};
use rug::{Complex, Integer};

#[derive(Clone, Debug, PartialEq)]
pub enum Node {
    Infinity,
    Point(Num),
}

/// Interpolation nodes with multiplicities and the germ given at each.
#[derive(Clone, Debug)]
pub struct MultipointSpec {
    pub nodes: Vec<(Node, usize, Germ)>,
}

/// How the `2n+1` conditions split between `0` and infinity.
#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum TwoPointOrders {
    /// `n` conditions at 0, `n+1` at infinity.
    Displayed,
    /// `n+1` conditions at 0, `n` at infinity.
    Alternative,
}

/// `B_n = P_n / Q_n`.
#[derive(Clone, Debug)]
pub struct MultipointPair {
    pub p: Poly,
    pub q: Poly,
    pub n: usize,
    pub cert: Certificate,
    /// Worst normalized residual per node, as `log10`.
    pub node_residuals: Vec<f64>,
}

impl MultipointPair {
    pub fn eval(&self, z: &Complex) -> Result<Complex> {
        let d = self.q.eval(z);
        if d.is_zero() {
            return Err(Error::Degenerate("pole of the approximant".into()));
        }
        Ok(self.p.eval(z) / d)
    }
}

impl MultipointSpec {
    pub fn validate(&self, n: usize) -> Result<()> {
        let total: usize = self.nodes.iter().map(|x| x.1).sum();
        if total != 2 * n + 1 {
            return Err(Error::Degenerate(format!("multiplicities sum to {total}, need {}", 2 * n + 1)));
        }
        for (node, _, g) in &self.nodes {
            let ok = match (node, g.center()) {
                (Node::Infinity, Center::Infinity) => true,
                (Node::Point(a), Center::Point(b)) => a == b,
                _ => false,
            };
            if !ok {
                return Err(Error::InvalidGerm("germ centre does not match its node".into()));
            }
        }
        Ok(())
    }
}

fn binom(i: usize, l: usize) -> Integer {
    Integer::from(Integer::binomial_u(i as u32, l as u32))
}

/// Rows of the stacked system, one inner vector of terms per unknown, in
/// the order `p_0..p_n, q_0..q_n`.
fn build_rows(spec: &MultipointSpec, n: usize, prec: Prec) -> Result<Vec<(usize, Vec<Complex>)>> {
    let bits = prec.bits();
    let mut rows = Vec::new();
    for (idx, (node, k, g)) in spec.nodes.iter().enumerate() {
        let k = *k;
        if k == 0 {
            continue;
        }
        match node {
            Node::Infinity => {
                let s = g.expand_at_infinity(k.saturating_sub(1).max(n + 1), prec)?;
                for r in 0..k {
                    let m = n as i64 - r as i64;
                    let mut row = vec![Complex::new(bits); 2 * n + 2];
                    if (0..=n as i64).contains(&m) {
                        row[m as usize] = Complex::with_val(bits, -1);
                    }
                    for j in 0..=n {
                        let c = j as i64 - m;
                        if c >= 0 && (c as usize) <= s.order() {
                            row[n + 1 + j] = s.coeff(c as usize).clone();
                        }
                    }
                    rows.push((idx, row));
                }
            }
            Node::Point(z) => {
                let zj = z.eval(prec);
                let t = g.expand_at_point(k - 1, prec)?;
                let d = t.coeffs();
                // powers of z_j
                let mut zp = vec![Complex::with_val(bits, 1)];
                for _ in 0..n {
                    let nx = Complex::with_val(bits, zp.last().unwrap() * &zj);
                    zp.push(nx);
                }
                for r in 0..k {
                    let mut row = vec![Complex::new(bits); 2 * n + 2];
                    for i in 0..=n {
                        if i >= r {
                            let c = Complex::with_val(bits, &zp[i - r] * binom(i, r));
                            row[i] = -c;
                        }
                        let mut acc = Complex::new(bits);
                        for l in 0..=r.min(i) {
                            acc += Complex::with_val(bits, &zp[i - l] * binom(i, l)) * &d[r - l];
                        }
                        row[n + 1 + i] = acc;
                    }
                    rows.push((idx, row));
                }
            }
        }
    }
    Ok(rows)
}

fn residuals(spec: &MultipointSpec, n: usize, x: &[Complex], prec: Prec) -> Result<Vec<f64>> {
    let rows = build_rows(spec, n, prec)?;
    let bits = prec.bits();
    let mut out = vec![f64::NEG_INFINITY; spec.nodes.len()];
    for (idx, row) in rows {
        let terms: Vec<Complex> = row.iter().zip(x).map(|(a, b)| Complex::with_val(bits, a * b)).collect();
        out[idx] = out[idx].max(row_residual(&terms, bits));
    }
    Ok(out)
}

/// Solves the stacked multipoint system at the policy precision and
/// certifies it with expansions at twice the digits.
pub fn multipoint_pade(spec: &MultipointSpec, n: usize, policy: &PrecisionPolicy) -> Result<MultipointPair> {
    spec.validate(n)?;
    let mut last = 0.0;
    for attempt in 0..=policy.retries {
        let prec = policy.attempt(n, attempt);
        let rows: Vec<Vec<Complex>> = build_rows(spec, n, prec)?.into_iter().map(|r| r.1).collect();
        let ns = solve_null(rows, prec);
        let x = ns.vector;
        let p = Poly::new(x[..=n].to_vec());
        let q = Poly::new(x[n + 1..].to_vec());
        if q.is_zero() {
            return Err(Error::Degenerate("denominator vanishes identically".into()));
        }
        let node_residuals = residuals(spec, n, &x, prec.scaled(2, 1))?;
        let worst = node_residuals.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
        last = worst;
        let scale = Complex::with_val(prec.bits(), 1) / q.leading().unwrap();
        let pair = MultipointPair {
            p: p.scale(&scale),
            q: q.scale(&scale),
            n,
            cert: Certificate {
                digits: prec.get(),
                attempts: attempt + 1,
                vanish_from: 0,
                vanish_to: 2 * n as i64,
                residual_log10: worst,
                nullity: ns.nullity,
                pivot_ratio_log10: ns.pivot_ratio_log10,
            },
            node_residuals,
        };
        if ns.nullity > 1 {
            return Err(Error::Dependent { nullity: ns.nullity });
        }
        if pair.cert.passes() {
            return Ok(pair);
        }
    }
    Err(Error::PrecisionExhausted { digits: policy.attempt(n, policy.retries).get(), residual_exp: last.ceil() as i64 })
}

/// Two-point Padé from a germ at 0 and a germ at infinity.
pub fn two_point_pade(f0: &Germ, finf: &Germ, n: usize, orders: TwoPointOrders, policy: &PrecisionPolicy) -> Result<MultipointPair> {
    let (k0, kinf) = match orders {
        TwoPointOrders::Displayed => (n, n + 1),
        TwoPointOrders::Alternative => (n + 1, n),
    };
    let spec = MultipointSpec {
        nodes: vec![(Node::Point(Num::int(0)), k0, f0.clone()), (Node::Infinity, kinf, finf.clone())],
    };
    multipoint_pade(&spec, n, policy)
}
