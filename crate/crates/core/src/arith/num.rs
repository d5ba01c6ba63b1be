use super::Prec;
use crate::error::{Error, Result};
use rug::ops::Pow;
use rug::{Complex, Float, Integer, Rational};
use std::fmt;

/// An exactly specified complex number: a Gaussian rational, or powers,
/// products and sums of such. Evaluated on demand at any precision, so
/// that raising the working precision never re-reads rounded inputs.
#[derive(Clone, Debug, PartialEq)]
pub enum Num {
    Rat(Rational, Rational),
    Pow(Box<Num>, Rational),
    Mul(Box<Num>, Box<Num>),
    Add(Box<Num>, Box<Num>),
}

impl Num {
    pub fn int(n: i64) -> Num {
        Num::Rat(Rational::from(n), Rational::new())
    }

    pub fn ratio(p: i64, q: i64) -> Num {
        Num::Rat(Rational::from((p, q)), Rational::new())
    }

    pub fn real(r: Rational) -> Num {
        Num::Rat(r, Rational::new())
    }

    pub fn gauss(re: Rational, im: Rational) -> Num {
        Num::Rat(re, im)
    }

    /// Exact value when this is a Gaussian rational.
    pub fn as_rat(&self) -> Option<(&Rational, &Rational)> {
        match self {
            Num::Rat(a, b) => Some((a, b)),
            _ => None,
        }
    }

    pub fn as_real_rat(&self) -> Option<&Rational> {
        match self {
            Num::Rat(a, b) if b.is_zero() => Some(a),
            _ => None,
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, Num::Rat(a, b) if a.is_zero() && b.is_zero())
    }

    /// True when the value is real; decided exactly for rationals and
    /// structurally for powers of positive reals.
    pub fn is_real(&self) -> bool {
        match self {
            Num::Rat(_, b) => b.is_zero(),
            Num::Pow(b, _) => b.is_real() && b.eval(Prec::digits(30)).real().is_sign_positive(),
            Num::Mul(a, b) | Num::Add(a, b) => a.is_real() && b.is_real(),
        }
    }

    pub fn eval(&self, prec: Prec) -> Complex {
        let bits = prec.bits();
        match self {
            Num::Rat(a, b) => Complex::with_val(bits, (a, b)),
            Num::Pow(b, e) => {
                let g = Prec::digits(prec.get() + 10);
                let base = b.eval(g);
                let ef = Float::with_val(g.bits(), e);
                if base.imag().is_zero() && base.real().is_sign_positive() {
                    let r = Float::with_val(g.bits(), base.real()).pow(&ef);
                    Complex::with_val(bits, r)
                } else {
                    Complex::with_val(bits, base.pow(&ef))
                }
            }
            Num::Mul(a, b) => {
                let g = Prec::digits(prec.get() + 5);
                Complex::with_val(bits, a.eval(g) * b.eval(g))
            }
            Num::Add(a, b) => {
                let g = Prec::digits(prec.get() + 5);
                Complex::with_val(bits, a.eval(g) + b.eval(g))
            }
        }
    }

    pub fn eval_f64(&self) -> num_complex::Complex64 {
        super::to_c64(&self.eval(Prec::digits(30)))
    }

    pub fn mul(&self, o: &Num) -> Num {
        match (self, o) {
            (Num::Rat(a, b), Num::Rat(c, d)) => {
                let re = Rational::from(a * c) - Rational::from(b * d);
                let im = Rational::from(a * d) + Rational::from(b * c);
                Num::Rat(re, im)
            }
            _ => Num::Mul(Box::new(self.clone()), Box::new(o.clone())),
        }
    }

    pub fn add(&self, o: &Num) -> Num {
        match (self, o) {
            (Num::Rat(a, b), Num::Rat(c, d)) => Num::Rat(Rational::from(a + c), Rational::from(b + d)),
            _ => Num::Add(Box::new(self.clone()), Box::new(o.clone())),
        }
    }

    pub fn neg(&self) -> Num {
        self.mul(&Num::int(-1))
    }

    pub fn sub(&self, o: &Num) -> Num {
        self.add(&o.neg())
    }

    pub fn recip(&self) -> Result<Num> {
        match self {
            Num::Rat(a, b) => {
                let den = Rational::from(a * a) + Rational::from(b * b);
                if den.is_zero() {
                    return Err(Error::Parse("division by zero".into()));
                }
                Ok(Num::Rat(Rational::from(a / &den), -Rational::from(b / &den)))
            }
            _ => Ok(Num::Pow(Box::new(self.clone()), Rational::from(-1))),
        }
    }

    pub fn pow(&self, e: &Rational) -> Num {
        if let (Num::Rat(a, b), true) = (self, e.denom() == &1u32) {
            if b.is_zero() {
                if let Some(k) = e.numer().to_i32() {
                    if !(a.is_zero() && k < 0) {
                        return Num::real(Rational::from(a.pow(k)));
                    }
                }
            }
        }
        Num::Pow(Box::new(self.clone()), e.clone())
    }

    pub fn parse(s: &str) -> Result<Num> {
        let toks: Vec<char> = s.chars().filter(|c| !c.is_whitespace()).collect();
        let mut p = Parser { t: &toks, i: 0, src: s };
        let v = p.expr()?;
        if p.i != toks.len() {
            return Err(p.err("trailing input"));
        }
        Ok(v)
    }
}

impl From<i64> for Num {
    fn from(n: i64) -> Num {
        Num::int(n)
    }
}

fn fmt_rat(r: &Rational) -> String {
    if r.denom() == &1u32 {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

impl fmt::Display for Num {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Num::Rat(a, b) => {
                if b.is_zero() {
                    write!(f, "{}", fmt_rat(a))
                } else if a.is_zero() {
                    write!(f, "{}i", fmt_rat(b))
                } else if b.cmp0() == std::cmp::Ordering::Less {
                    write!(f, "{}-{}i", fmt_rat(a), fmt_rat(&Rational::from(-b)))
                } else {
                    write!(f, "{}+{}i", fmt_rat(a), fmt_rat(b))
                }
            }
            Num::Pow(b, e) => write!(f, "({})^({})", b, fmt_rat(e)),
            Num::Mul(a, b) => write!(f, "({})*({})", a, b),
            Num::Add(a, b) => write!(f, "({})+({})", a, b),
        }
    }
}

struct Parser<'a> {
    t: &'a [char],
    i: usize,
    src: &'a str,
}

impl Parser<'_> {
    fn err(&self, what: &str) -> Error {
        Error::Parse(format!("{what} at position {} in '{}'", self.i, self.src))
    }

    fn peek(&self) -> Option<char> {
        self.t.get(self.i).copied()
    }

    fn expr(&mut self) -> Result<Num> {
        let mut neg = false;
        if let Some(c @ ('+' | '-')) = self.peek() {
            neg = c == '-';
            self.i += 1;
        }
        let mut acc = self.term()?;
        if neg {
            acc = acc.neg();
        }
        while let Some(c @ ('+' | '-')) = self.peek() {
            self.i += 1;
            let t = self.term()?;
            acc = if c == '+' { acc.add(&t) } else { acc.sub(&t) };
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<Num> {
        let mut acc = self.power()?;
        loop {
            match self.peek() {
                Some('*') => {
                    self.i += 1;
                    let r = self.power()?;
                    acc = acc.mul(&r);
                }
                Some('/') => {
                    self.i += 1;
                    let r = self.power()?;
                    acc = acc.mul(&r.recip()?);
                }
                Some('i') | Some('j') => {
                    self.i += 1;
                    acc = acc.mul(&Num::gauss(Rational::new(), Rational::from(1)));
                }
                _ => return Ok(acc),
            }
        }
    }

    fn power(&mut self) -> Result<Num> {
        let base = self.atom()?;
        if self.peek() == Some('^') {
            self.i += 1;
            let e = self.atom()?;
            let e = e.as_real_rat().ok_or_else(|| self.err("exponent must be a real rational"))?.clone();
            return Ok(base.pow(&e));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Num> {
        match self.peek() {
            Some('(') => {
                self.i += 1;
                let v = self.expr()?;
                if self.peek() != Some(')') {
                    return Err(self.err("expected ')'"));
                }
                self.i += 1;
                Ok(v)
            }
            Some('i') | Some('j') => {
                self.i += 1;
                Ok(Num::gauss(Rational::new(), Rational::from(1)))
            }
            Some('-') => {
                self.i += 1;
                Ok(self.atom()?.neg())
            }
            Some(c) if c.is_ascii_alphabetic() => {
                let start = self.i;
                while self.peek().is_some_and(|c| c.is_ascii_alphabetic()) {
                    self.i += 1;
                }
                let name: String = self.t[start..self.i].iter().collect();
                if name != "sqrt" {
                    return Err(self.err("unknown function"));
                }
                let arg = self.atom()?;
                Ok(arg.pow(&Rational::from((1, 2))))
            }
            Some(c) if c.is_ascii_digit() || c == '.' => {
                Ok(Num::real(self.number()?))
            }
            _ => Err(self.err("expected a number")),
        }
    }

    fn number(&mut self) -> Result<Rational> {
        let start = self.i;
        let mut digits = String::new();
        let mut frac = 0i64;
        let mut seen_dot = false;
        while let Some(c) = self.peek() {
            if c.is_ascii_digit() {
                digits.push(c);
                if seen_dot {
                    frac += 1;
                }
            } else if c == '.' && !seen_dot {
                seen_dot = true;
            } else {
                break;
            }
            self.i += 1;
        }
        if digits.is_empty() {
            self.i = start;
            return Err(self.err("malformed number"));
        }
        let mut exp = 0i64;
        if matches!(self.peek(), Some('e') | Some('E')) {
            self.i += 1;
            let mut es = String::new();
            if let Some(c @ ('+' | '-')) = self.peek() {
                es.push(c);
                self.i += 1;
            }
            while let Some(c) = self.peek().filter(|c| c.is_ascii_digit()) {
                es.push(c);
                self.i += 1;
            }
            exp = es.parse().map_err(|_| self.err("malformed exponent"))?;
        }
        let m: Integer = digits.parse().map_err(|_| self.err("malformed number"))?;
        let e = exp - frac;
        let ten = Integer::from(10);
        let scale = Integer::from(ten.pow(e.unsigned_abs() as u32));
        Ok(if e >= 0 { Rational::from(m * scale) } else { Rational::from((m, scale)) })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exact_decimals_and_rationals() {
        assert_eq!(Num::parse("0.9-1.1i").unwrap(), Num::gauss(Rational::from((9, 10)), Rational::from((-11, 10))));
        assert_eq!(Num::parse("-1/3").unwrap(), Num::ratio(-1, 3));
        assert_eq!(Num::parse("2.5e-1").unwrap(), Num::ratio(1, 4));
        assert_eq!(Num::parse("-i").unwrap(), Num::gauss(Rational::new(), Rational::from(-1)));
        assert_eq!(Num::parse("3 + 5i").unwrap(), Num::gauss(Rational::from(3), Rational::from(5)));
        assert_eq!(Num::parse("(1+i)*(1-i)").unwrap(), Num::int(2));
        assert_eq!(Num::parse("1/(2i)").unwrap(), Num::gauss(Rational::new(), Rational::from((-1, 2))));
    }

    #[test]
    fn powers() {
        let p = Prec::digits(50);
        let v = Num::parse("2^(-1/2)").unwrap().eval(p);
        let expect = Float::with_val(p.bits(), 2).sqrt().recip();
        assert!(v.imag().is_zero());
        assert_eq!(*v.real(), expect);
        assert_eq!(Num::parse("sqrt(4)").unwrap().eval(p), p.ci(2));
        assert_eq!(Num::parse("3^2").unwrap(), Num::int(9));
        assert!(Num::parse("2^(1/2)").unwrap().is_real());
        assert!(!Num::parse("(-2)^(1/2)").unwrap().is_real());
    }

    #[test]
    fn display_roundtrip() {
        for s in ["-6/5+4/5i", "1/3", "2i", "(2)^(-1/2)"] {
            let n = Num::parse(s).unwrap();
            assert_eq!(Num::parse(&n.to_string()).unwrap(), n);
        }
    }

    #[test]
    fn rejects_garbage() {
        assert!(Num::parse("1..2").is_err());
        assert!(Num::parse("foo(2)").is_err());
        assert!(Num::parse("2^i").is_err());
        assert!(Num::parse("").is_err());
    }
}
