//! Germs of multivalued functions: weighted sums of products of complex
//! powers, logarithms of ratios and constants, centred at infinity or at a
//! finite point. Expansion, evaluation on the principal sheet, boundary
//! values on the cuts of the real subclass, and the second branch.

use crate::arith::{Num, Prec, SeriesInf, Taylor};
use crate::error::{Error, Result};
use rug::float::Constant;
use rug::ops::Pow;
use rug::{Assign, Complex, Float, Rational};
use std::cmp::Ordering;
use std::fmt;

#[derive(Clone, Debug, PartialEq)]
pub enum Center {
    Infinity,
    Point(Num),
}

#[derive(Clone, Debug, PartialEq)]
pub struct Factor {
    pub point: Num,
    pub exponent: Num,
}

impl Factor {
    pub fn new(point: Num, exponent: Num) -> Self {
        Factor { point, exponent }
    }
}

/// One summand before weighting. A product is normalized to leading
/// coefficient 1 at infinity, or to value 1 at a finite centre. A logarithm
/// `log((z-a)/(z-b))` takes its principal value.
#[derive(Clone, Debug, PartialEq)]
pub enum Term {
    Product(Vec<Factor>),
    Log { a: Num, b: Num },
    Constant,
}

#[derive(Clone, Debug, PartialEq)]
pub struct WeightedTerm {
    pub weight: Num,
    pub term: Term,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Germ {
    center: Center,
    terms: Vec<WeightedTerm>,
}

/// Expansion of a germ about its centre.
#[derive(Clone, Debug)]
pub enum Expansion {
    Infinity(SeriesInf),
    Point(Taylor),
}

/// `f_2 = constant * (off-F branch of f)` for single-exponent real germs.
#[derive(Clone, Debug)]
pub struct SecondBranch {
    pub germ: Germ,
    pub constant: Complex,
}

impl SecondBranch {
    pub fn eval(&self, z: &Complex) -> Result<Complex> {
        Ok(self.germ.eval_off_f(z)? * &self.constant)
    }
}

fn guard(prec: Prec) -> Prec {
    Prec::digits(prec.get() + 10)
}

fn exact_sum(nums: &[&Num]) -> Option<Num> {
    let mut acc = Num::int(0);
    for n in nums {
        n.as_rat()?;
        acc = acc.add(n);
    }
    Some(acc)
}

/// Returns `k` when `x` is (numerically or exactly) the integer `k`.
fn as_integer(x: &Num) -> Option<i64> {
    if let Some(r) = x.as_real_rat() {
        return (r.denom() == &1u32).then(|| r.numer().to_i64()).flatten();
    }
    let v = x.eval(Prec::digits(60));
    let re = v.real().to_f64();
    let k = re.round();
    let tol = 1e-40;
    let d = Float::with_val(v.real().prec(), v.real() - k);
    (d.abs().to_f64() < tol && v.imag().clone().abs().to_f64() < tol).then_some(k as i64)
}

fn nonpositive_real(z: &Complex) -> bool {
    z.imag().is_zero() && z.real().cmp0() != Some(Ordering::Greater)
}

impl Germ {
    pub fn new(center: Center, terms: Vec<WeightedTerm>) -> Result<Self> {
        if terms.is_empty() {
            return Err(Error::InvalidGerm("no terms".into()));
        }
        let g = Germ { center, terms };
        g.validate()?;
        Ok(g)
    }

    /// `prod (z - a_j)^(alpha_j)` at infinity.
    pub fn product(factors: Vec<Factor>) -> Result<Self> {
        Germ::new(Center::Infinity, vec![WeightedTerm { weight: Num::int(1), term: Term::Product(factors) }])
    }

    /// `prod ((z - a_j)/(z - b_j))^(alpha_j)` at infinity.
    pub fn segments(segs: &[(Num, Num, Num)]) -> Result<Self> {
        let mut f = Vec::new();
        for (a, b, e) in segs {
            f.push(Factor::new(a.clone(), e.clone()));
            f.push(Factor::new(b.clone(), e.neg()));
        }
        Germ::product(f)
    }

    /// `((z + 1)/(z - 1))^alpha`.
    pub fn jacobi(alpha: Num) -> Result<Self> {
        Germ::segments(&[(Num::int(-1), Num::int(1), alpha)])
    }

    pub fn center(&self) -> &Center {
        &self.center
    }

    pub fn terms(&self) -> &[WeightedTerm] {
        &self.terms
    }

    fn center_value(&self, prec: Prec) -> Option<Complex> {
        match &self.center {
            Center::Infinity => None,
            Center::Point(p) => Some(p.eval(prec)),
        }
    }

    fn validate(&self) -> Result<()> {
        for t in &self.terms {
            match &t.term {
                Term::Product(fs) => {
                    if fs.is_empty() {
                        return Err(Error::InvalidGerm("empty product".into()));
                    }
                    if let Center::Point(z0) = &self.center {
                        let z = z0.eval(Prec::digits(60));
                        for f in fs {
                            if f.point.eval(Prec::digits(60)) == z {
                                return Err(Error::InvalidGerm("branch point at the centre".into()));
                            }
                        }
                    } else {
                        let s = self.exponent_sum(fs);
                        match as_integer(&s) {
                            Some(k) if k <= 0 => {}
                            _ => {
                                return Err(Error::InvalidGerm(format!(
                                    "exponent sum {s} is not a non-positive integer; not holomorphic at infinity"
                                )))
                            }
                        }
                    }
                }
                Term::Log { a, b } => {
                    if a == b {
                        return Err(Error::InvalidGerm("log of a constant ratio".into()));
                    }
                }
                Term::Constant => {}
            }
        }
        Ok(())
    }

    fn exponent_sum(&self, fs: &[Factor]) -> Num {
        let e: Vec<&Num> = fs.iter().map(|f| &f.exponent).collect();
        exact_sum(&e).unwrap_or_else(|| {
            let mut acc = Num::int(0);
            for x in e {
                acc = acc.add(x);
            }
            acc
        })
    }

    /// Coefficients `c_0..c_order`.
    pub fn expand_at_infinity(&self, order: usize, prec: Prec) -> Result<SeriesInf> {
        if self.center != Center::Infinity {
            return Err(Error::InvalidGerm("germ is not centred at infinity".into()));
        }
        let g = guard(prec);
        let mut total = vec![Complex::new(g.bits()); order + 1];
        for t in &self.terms {
            let w = t.weight.eval(g);
            let c = match &t.term {
                Term::Product(fs) => {
                    let shift = -as_integer(&self.exponent_sum(fs)).unwrap() as usize;
                    let mut c = vec![Complex::new(g.bits()); order + 1];
                    if shift <= order {
                        let e = product_series(fs, None, order - shift, g);
                        for (k, v) in e.into_iter().enumerate() {
                            c[k + shift] = v;
                        }
                    }
                    c
                }
                Term::Log { a, b } => {
                    let (a, b) = (a.eval(g), b.eval(g));
                    let mut c = vec![Complex::new(g.bits()); order + 1];
                    let mut pa = Complex::with_val(g.bits(), 1);
                    let mut pb = pa.clone();
                    for (k, slot) in c.iter_mut().enumerate().skip(1) {
                        pa *= &a;
                        pb *= &b;
                        *slot = Complex::with_val(g.bits(), &pb - &pa) / k as u32;
                    }
                    c
                }
                Term::Constant => {
                    let mut c = vec![Complex::new(g.bits()); order + 1];
                    c[0] = Complex::with_val(g.bits(), 1);
                    c
                }
            };
            for (s, v) in total.iter_mut().zip(c) {
                *s += v * &w;
            }
        }
        Ok(SeriesInf::new(total.into_iter().map(|c| Complex::with_val(prec.bits(), c)).collect()))
    }

    /// Taylor coefficients `d_0..d_order` about the finite centre.
    pub fn expand_at_point(&self, order: usize, prec: Prec) -> Result<Taylor> {
        let g = guard(prec);
        let z0 = self.center_value(g).ok_or_else(|| Error::InvalidGerm("germ is centred at infinity".into()))?;
        let mut total = vec![Complex::new(g.bits()); order + 1];
        for t in &self.terms {
            let w = t.weight.eval(g);
            let c = match &t.term {
                Term::Product(fs) => product_series(fs, Some(&z0), order, g),
                Term::Log { a, b } => {
                    let ia = Complex::with_val(g.bits(), &z0 - a.eval(g)).recip();
                    let ib = Complex::with_val(g.bits(), &z0 - b.eval(g)).recip();
                    let mut c = vec![Complex::new(g.bits()); order + 1];
                    c[0] = Complex::with_val(g.bits(), &ib / &ia).ln();
                    let mut pa = Complex::with_val(g.bits(), 1);
                    let mut pb = pa.clone();
                    for (k, slot) in c.iter_mut().enumerate().skip(1) {
                        pa *= &ia;
                        pb *= &ib;
                        let v = Complex::with_val(g.bits(), &pa - &pb) / k as u32;
                        *slot = if k % 2 == 1 { v } else { -v };
                    }
                    c
                }
                Term::Constant => {
                    let mut c = vec![Complex::new(g.bits()); order + 1];
                    c[0] = Complex::with_val(g.bits(), 1);
                    c
                }
            };
            for (s, v) in total.iter_mut().zip(c) {
                *s += v * &w;
            }
        }
        Ok(Taylor::new(
            Complex::with_val(prec.bits(), &z0),
            total.into_iter().map(|c| Complex::with_val(prec.bits(), c)).collect(),
        ))
    }

    pub fn expand(&self, order: usize, prec: Prec) -> Result<Expansion> {
        match self.center {
            Center::Infinity => Ok(Expansion::Infinity(self.expand_at_infinity(order, prec)?)),
            Center::Point(_) => Ok(Expansion::Point(self.expand_at_point(order, prec)?)),
        }
    }

    /// Value on the principal sheet. For germs at infinity the cuts of a
    /// product form a star from its leftmost branch point; for a finite
    /// centre they are rays pointing away from the centre. Real germs
    /// evaluated on the real axis use the boundary formula off the cuts.
    pub fn eval(&self, z: &Complex) -> Result<Complex> {
        let prec = Prec::from_bits(z.prec().0);
        let g = guard(prec);
        if z.imag().is_zero() && self.is_real_subclass() {
            let x = Float::with_val(g.bits(), z.real());
            for p in self.branch_points(g) {
                if *p.real() == x {
                    return Err(Error::OnCut(crate::arith::fmt_complex(z, 12)));
                }
            }
            for (a, b) in self.cut_segments(g)? {
                if x > a && x < b {
                    return Err(Error::OnCut(crate::arith::fmt_complex(z, 12)));
                }
            }
            let zero = Float::new(g.bits());
            let (fp, _) = self.boundary_values_rel(&x, &zero)?;
            return Ok(Complex::with_val(prec.bits(), fp));
        }
        let zg = Complex::with_val(g.bits(), z);
        let on_cut = || Error::OnCut(crate::arith::fmt_complex(z, 12));
        let z0 = self.center_value(g);
        let mut total = Complex::new(g.bits());
        for t in &self.terms {
            let v = match &t.term {
                Term::Product(fs) => {
                    let pts: Vec<Complex> = fs.iter().map(|f| f.point.eval(g)).collect();
                    match &z0 {
                        Some(z0) => {
                            let mut acc = Complex::with_val(g.bits(), 1);
                            for (f, a) in fs.iter().zip(&pts) {
                                let r = Complex::with_val(g.bits(), &zg - a) / Complex::with_val(g.bits(), z0 - a);
                                if nonpositive_real(&r) {
                                    return Err(on_cut());
                                }
                                acc *= cpow(&r, &f.exponent, g);
                            }
                            acc
                        }
                        None => {
                            let ci = leftmost(&pts);
                            let c = &pts[ci];
                            let dc = Complex::with_val(g.bits(), &zg - c);
                            if dc.is_zero() {
                                return Err(on_cut());
                            }
                            let s = as_integer(&self.exponent_sum(fs)).unwrap();
                            let mut acc = Complex::with_val(g.bits(), dc.clone().pow(s as i32));
                            for (f, a) in fs.iter().zip(&pts) {
                                if a == c {
                                    continue;
                                }
                                let r = Complex::with_val(g.bits(), &zg - a) / &dc;
                                if nonpositive_real(&r) {
                                    return Err(on_cut());
                                }
                                acc *= cpow(&r, &f.exponent, g);
                            }
                            acc
                        }
                    }
                }
                Term::Log { a, b } => {
                    let r = Complex::with_val(g.bits(), &zg - a.eval(g)) / Complex::with_val(g.bits(), &zg - b.eval(g));
                    if nonpositive_real(&r) {
                        return Err(on_cut());
                    }
                    r.ln()
                }
                Term::Constant => Complex::with_val(g.bits(), 1),
            };
            total += v * t.weight.eval(g);
        }
        Ok(Complex::with_val(prec.bits(), total))
    }

    pub fn eval_f64(&self, z: num_complex::Complex64) -> Result<num_complex::Complex64> {
        let p = Prec::digits(30);
        Ok(crate::arith::to_c64(&self.eval(&p.c(z.re, z.im))?))
    }

    /// Real branch points, exponents and weights, centred at infinity.
    pub fn is_real_subclass(&self) -> bool {
        self.center == Center::Infinity
            && self.terms.iter().all(|t| {
                t.weight.is_real()
                    && match &t.term {
                        Term::Product(fs) => fs.iter().all(|f| f.point.is_real() && f.exponent.is_real()),
                        Term::Log { a, b } => a.is_real() && b.is_real(),
                        Term::Constant => true,
                    }
            })
    }

    /// All branch points, unsorted and with repetitions removed.
    pub fn branch_points(&self, prec: Prec) -> Vec<Complex> {
        let mut out: Vec<Complex> = Vec::new();
        let mut push = |z: Complex| {
            if !out.contains(&z) {
                out.push(z);
            }
        };
        for t in &self.terms {
            match &t.term {
                Term::Product(fs) => fs.iter().for_each(|f| push(f.point.eval(prec))),
                Term::Log { a, b } => {
                    push(a.eval(prec));
                    push(b.eval(prec));
                }
                Term::Constant => {}
            }
        }
        out
    }

    /// Jump phase (as a multiple of pi) of one product term across the real
    /// axis at `x`: the sum of exponents whose points lie right of `x`.
    fn phase_right_of(fs: &[Factor], x: &Float, prec: Prec) -> Complex {
        let mut s = Complex::new(prec.bits());
        for f in fs {
            if *f.point.eval(prec).real() > *x {
                s += f.exponent.eval(prec);
            }
        }
        s
    }

    /// The cut set of a real germ as disjoint closed segments, from the
    /// sorted branch points and the jump across each interval.
    pub fn cut_segments(&self, prec: Prec) -> Result<Vec<(Float, Float)>> {
        if !self.is_real_subclass() {
            return Err(Error::Unsupported("cut segments need a real germ".into()));
        }
        let mut pts: Vec<Float> = self.branch_points(prec).into_iter().map(|z| z.real().clone()).collect();
        pts.sort_by(|a, b| a.partial_cmp(b).unwrap());
        let mut segs: Vec<(Float, Float)> = Vec::new();
        for w in pts.windows(2) {
            let mid = Float::with_val(prec.bits(), &w[0] + &w[1]) / 2u32;
            let mut jump = false;
            for t in &self.terms {
                match &t.term {
                    Term::Product(fs) => {
                        let s = Self::phase_right_of(fs, &mid, prec);
                        let r = Float::with_val(prec.bits(), s.real() - s.real().clone().round());
                        if r.abs().to_f64() > 1e-30 {
                            jump = true;
                        }
                    }
                    Term::Log { a, b } => {
                        let ra = *a.eval(prec).real() > mid;
                        let rb = *b.eval(prec).real() > mid;
                        if ra != rb {
                            jump = true;
                        }
                    }
                    Term::Constant => {}
                }
            }
            if jump {
                match segs.last_mut() {
                    Some(last) if last.1 == w[0] => last.1 = w[1].clone(),
                    _ => segs.push((w[0].clone(), w[1].clone())),
                }
            }
        }
        Ok(segs)
    }

    pub fn cut_segments_f64(&self) -> Result<Vec<(f64, f64)>> {
        Ok(self.cut_segments(Prec::digits(30))?.into_iter().map(|(a, b)| (a.to_f64(), b.to_f64())).collect())
    }

    /// `(f^+(x), f^-(x))` for a real germ and real `x`.
    pub fn boundary_values(&self, x: &Float) -> Result<(Complex, Complex)> {
        self.boundary_values_rel(x, &Float::new(x.prec()))
    }

    /// Boundary values at `x = anchor + offset`. Distances to a branch
    /// point equal to `anchor` are taken as `|offset|`, so values near an
    /// endpoint keep full relative accuracy.
    pub fn boundary_values_rel(&self, anchor: &Float, offset: &Float) -> Result<(Complex, Complex)> {
        if !self.is_real_subclass() {
            return Err(Error::Unsupported("boundary values need a real germ".into()));
        }
        let prec = Prec::from_bits(anchor.prec().max(offset.prec()));
        let g = guard(prec);
        let x = Float::with_val(g.bits(), anchor + offset);
        let pi = Float::with_val(g.bits(), Constant::Pi);
        let dist = |p: &Float| -> Result<(Float, bool)> {
            if p == anchor {
                if offset.is_zero() {
                    return Err(Error::OnCut(format!("{}", anchor.to_f64())));
                }
                return Ok((Float::with_val(g.bits(), offset.abs_ref()), offset.cmp0() == Some(Ordering::Less)));
            }
            let d = Float::with_val(g.bits(), &x - p);
            if d.is_zero() {
                return Err(Error::OnCut(format!("{}", x.to_f64())));
            }
            let right = d.cmp0() == Some(Ordering::Less);
            Ok((d.abs(), right))
        };
        let mut plus = Complex::new(g.bits());
        let mut minus = Complex::new(g.bits());
        for t in &self.terms {
            let w = t.weight.eval(g);
            let (vp, vm) = match &t.term {
                Term::Product(fs) => {
                    let mut logmod = Float::new(g.bits());
                    let mut phase = Float::new(g.bits());
                    for f in fs {
                        let e = f.exponent.eval(g);
                        let (d, right) = dist(f.point.eval(g).real())?;
                        logmod += d.ln() * e.real();
                        if right {
                            phase += e.real();
                        }
                    }
                    let m = logmod.exp();
                    let th = Float::with_val(g.bits(), &phase * &pi);
                    let (s, c) = th.sin_cos(Float::new(g.bits()));
                    let vp = Complex::with_val(g.bits(), (Float::with_val(g.bits(), &m * &c), Float::with_val(g.bits(), &m * &s)));
                    (vp.clone(), vp.conj())
                }
                Term::Log { a, b } => {
                    let (da, ra) = dist(a.eval(g).real())?;
                    let (db, rb) = dist(b.eval(g).real())?;
                    let re = da.ln() - db.ln();
                    let k = ra as i32 - rb as i32;
                    let im = Float::with_val(g.bits(), &pi * k);
                    let vp = Complex::with_val(g.bits(), (&re, &im));
                    (vp.clone(), vp.conj())
                }
                Term::Constant => (Complex::with_val(g.bits(), 1), Complex::with_val(g.bits(), 1)),
            };
            plus += vp * &w;
            minus += vm * &w;
        }
        Ok((Complex::with_val(prec.bits(), plus), Complex::with_val(prec.bits(), minus)))
    }

    /// Jump `f^+ - f^-` at `anchor + offset`.
    pub fn jump_rel(&self, anchor: &Float, offset: &Float) -> Result<Complex> {
        let (p, m) = self.boundary_values_rel(anchor, offset)?;
        Ok(p - m)
    }

    /// The common phase `s` (in units of pi) of `f^+` over every cut
    /// segment of a single-product real germ.
    pub fn off_f_phase(&self, prec: Prec) -> Result<Float> {
        let fs = match self.terms.as_slice() {
            [WeightedTerm { term: Term::Product(fs), .. }] if self.is_real_subclass() => fs,
            _ => return Err(Error::Unsupported("the off-F branch needs a single real product".into())),
        };
        let segs = self.cut_segments(prec)?;
        let mut phase: Option<Float> = None;
        for (a, b) in &segs {
            let mid = Float::with_val(prec.bits(), a + b) / 2u32;
            let s = Self::phase_right_of(fs, &mid, prec).real().clone();
            if let Some(p) = &phase {
                let d = Float::with_val(prec.bits(), &s - p) / 2u32;
                let r = Float::with_val(prec.bits(), &d - d.clone().round());
                if r.abs().to_f64() > 1e-30 {
                    return Err(Error::Unsupported("cut segments carry different exponents".into()));
                }
            } else {
                phase = Some(s);
            }
        }
        phase.ok_or_else(|| Error::Unsupported("germ has no cuts".into()))
    }

    /// The phase `s` (in units of pi) of `f^+` on cut segment `k` of a
    /// single-product real germ.
    pub fn segment_phase(&self, k: usize, prec: Prec) -> Result<Float> {
        let fs = match self.terms.as_slice() {
            [WeightedTerm { term: Term::Product(fs), .. }] if self.is_real_subclass() => fs,
            _ => return Err(Error::Unsupported("continuation across a cut needs a single real product".into())),
        };
        let segs = self.cut_segments(prec)?;
        let (a, b) = segs.get(k).ok_or_else(|| Error::Config(format!("no cut segment {k}")))?;
        let mid = Float::with_val(prec.bits(), a + b) / 2u32;
        Ok(Self::phase_right_of(fs, &mid, prec).real().clone())
    }

    /// The branch `f e^{-i pi s sgn Im z}` obtained by continuing `f` across
    /// its cuts; it is real on the cut set and has its own cuts on `F`.
    pub fn eval_off_f(&self, z: &Complex) -> Result<Complex> {
        let s = self.off_f_phase(guard(Prec::from_bits(z.prec().0)))?;
        self.eval_rotated(z, &s)
    }

    /// The branch obtained by continuing `f` across cut segment `k` only.
    pub fn eval_across(&self, z: &Complex, k: usize) -> Result<Complex> {
        let s = self.segment_phase(k, guard(Prec::from_bits(z.prec().0)))?;
        self.eval_rotated(z, &s)
    }

    fn eval_rotated(&self, z: &Complex, s: &Float) -> Result<Complex> {
        let prec = Prec::from_bits(z.prec().0);
        let g = guard(prec);
        let pi = Float::with_val(g.bits(), Constant::Pi);
        if z.imag().is_zero() {
            let x = Float::with_val(g.bits(), z.real());
            let inside = self.cut_segments(g)?.iter().any(|(a, b)| x > *a && x < *b);
            if !inside {
                return Err(Error::OnCut(crate::arith::fmt_complex(z, 12)));
            }
            let (fp, _) = self.boundary_values(&x)?;
            let th = -Float::with_val(g.bits(), s * &pi);
            let rot = Complex::with_val(g.bits(), (th.clone().cos(), th.sin()));
            let v = fp * rot;
            return Ok(Complex::with_val(prec.bits(), v.real()));
        }
        let f = self.eval(&Complex::with_val(g.bits(), z))?;
        let sign: i32 = if z.imag().cmp0() == Some(Ordering::Greater) { -1 } else { 1 };
        let th: Float = Float::with_val(g.bits(), s * &pi) * sign;
        let rot = Complex::with_val(g.bits(), (th.clone().cos(), th.sin()));
        Ok(Complex::with_val(prec.bits(), f * rot))
    }

    /// The second branch of a single-exponent real germ:
    /// `f_2 = -2 cos(pi s) * offF`.
    pub fn second_branch(&self, prec: Prec) -> Result<SecondBranch> {
        let g = guard(prec);
        let s = self.off_f_phase(g)?;
        let pi = Float::with_val(g.bits(), Constant::Pi);
        let c = Float::with_val(g.bits(), &s * &pi).cos() * -2i32;
        if c.clone().abs().to_f64() < 1e-30 {
            return Err(Error::Degenerate("second branch vanishes identically (exponent 1/2)".into()));
        }
        Ok(SecondBranch { germ: self.clone(), constant: Complex::with_val(prec.bits(), c) })
    }

    /// `f^2` as a germ in its own right, when `f` is a single product or
    /// constant; exponents double and the weight squares.
    pub fn square(&self) -> Option<Germ> {
        match self.terms.as_slice() {
            [WeightedTerm { weight, term: Term::Product(fs) }] => Some(Germ {
                center: self.center.clone(),
                terms: vec![WeightedTerm {
                    weight: weight.mul(weight),
                    term: Term::Product(
                        fs.iter().map(|f| Factor::new(f.point.clone(), f.exponent.mul(&Num::int(2)))).collect(),
                    ),
                }],
            }),
            [WeightedTerm { weight, term: Term::Constant }] => Some(Germ {
                center: self.center.clone(),
                terms: vec![WeightedTerm { weight: weight.mul(weight), term: Term::Constant }],
            }),
            _ => None,
        }
    }

    pub fn scaled(&self, s: &Num) -> Germ {
        Germ {
            center: self.center.clone(),
            terms: self.terms.iter().map(|t| WeightedTerm { weight: t.weight.mul(s), term: t.term.clone() }).collect(),
        }
    }
}

fn leftmost(pts: &[Complex]) -> usize {
    let mut best = 0;
    for (i, p) in pts.iter().enumerate() {
        let b = &pts[best];
        let ord = p.real().partial_cmp(b.real()).unwrap().then(p.imag().partial_cmp(b.imag()).unwrap());
        if ord == Ordering::Less {
            best = i;
        }
    }
    best
}

fn cpow(r: &Complex, e: &Num, g: Prec) -> Complex {
    match e.as_real_rat() {
        Some(q) if q.denom() == &1u32 => Complex::with_val(g.bits(), r.pow(q.numer().to_i32().unwrap_or(0))),
        Some(q) => Complex::with_val(g.bits(), r.pow(Float::with_val(g.bits(), q))),
        None => Complex::with_val(g.bits(), r.pow(e.eval(g))),
    }
}

/// Series of `prod (1 - a_j w)^(alpha_j)` in `w = 1/z` (no centre), or of
/// `prod (1 + h/(z0 - a_j))^(alpha_j)` in `h = z - z0`, via the
/// logarithmic-derivative recurrence `(k+1) e_{k+1} = sum g_m e_{k-m}`.
fn product_series(fs: &[Factor], z0: Option<&Complex>, order: usize, g: Prec) -> Vec<Complex> {
    let bits = g.bits();
    let exps: Vec<Complex> = fs.iter().map(|f| f.exponent.eval(g)).collect();
    let bases: Vec<Complex> = fs
        .iter()
        .map(|f| {
            let a = f.point.eval(g);
            match z0 {
                None => a,
                Some(z0) => -Complex::with_val(bits, z0 - &a).recip(),
            }
        })
        .collect();
    // log-derivative coefficients: -sum alpha_j b_j^{m+1}
    let mut gcoef = Vec::with_capacity(order);
    let mut pw: Vec<Complex> = bases.clone();
    for _ in 0..order {
        let mut s = Complex::new(bits);
        for (p, e) in pw.iter().zip(&exps) {
            s += p * e;
        }
        gcoef.push(-s);
        for (p, b) in pw.iter_mut().zip(&bases) {
            *p *= b;
        }
    }
    let mut e: Vec<Complex> = Vec::with_capacity(order + 1);
    e.push(Complex::with_val(bits, 1));
    let mut t = Complex::new(bits);
    for k in 0..order {
        let mut s = Complex::new(bits);
        for m in 0..=k {
            t.assign(&gcoef[m] * &e[k - m]);
            s += &t;
        }
        e.push(s / (k as u32 + 1));
    }
    e
}

impl fmt::Display for Germ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|t| {
                let body = match &t.term {
                    Term::Product(fs) => fs
                        .iter()
                        .map(|x| format!("(z-({}))^({})", x.point, x.exponent))
                        .collect::<Vec<_>>()
                        .join("*"),
                    Term::Log { a, b } => format!("log((z-({a}))/(z-({b})))"),
                    Term::Constant => "1".into(),
                };
                if t.weight == Num::int(1) {
                    body
                } else {
                    format!("({})*{}", t.weight, body)
                }
            })
            .collect();
        let c = match &self.center {
            Center::Infinity => "infinity".to_string(),
            Center::Point(p) => p.to_string(),
        };
        write!(f, "{} at {}", parts.join(" + "), c)
    }
}

/// Exact rational exponent sum, when available.
pub fn rational_exponent_sum(fs: &[Factor]) -> Option<Rational> {
    let mut acc = Rational::new();
    for f in fs {
        acc += f.exponent.as_real_rat()?;
    }
    Some(acc)
}

#[cfg(test)]
mod tests;
