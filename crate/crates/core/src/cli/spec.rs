use crate::arith::Num;
use crate::error::{Error, Result};
use crate::germ::{Center, Factor, Germ, Term, WeightedTerm};
use serde::{Deserialize, Serialize};

/// One summand of a structured germ description. Exactly one of
/// `product`, `log` and `constant` is given; numbers are exact strings
/// such as `1/3`, `-1.2+0.8i` or `2^(-1/2)`.
#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TermSpec {
    #[serde(default)]
    pub weight: Option<String>,
    /// `[point, exponent]` pairs.
    #[serde(default)]
    pub product: Option<Vec<[String; 2]>>,
    #[serde(default)]
    pub log: Option<[String; 2]>,
    #[serde(default)]
    pub constant: Option<bool>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GermSpec {
    /// `"infinity"` or a number.
    #[serde(default = "infinity")]
    pub center: String,
    pub terms: Vec<TermSpec>,
}

fn infinity() -> String {
    "infinity".into()
}

/// A germ given either structurally or in the compact one-line form
/// accepted by [`parse_germ`].
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum GermInput {
    Compact(String),
    Structured(GermSpec),
}

impl GermInput {
    pub fn to_germ(&self) -> Result<Germ> {
        match self {
            GermInput::Compact(s) => parse_germ(s),
            GermInput::Structured(g) => g.to_germ(),
        }
    }
}

fn num(s: &str) -> Result<Num> {
    Num::parse(s)
}

impl GermSpec {
    pub fn to_germ(&self) -> Result<Germ> {
        let center = parse_center(&self.center)?;
        let mut terms = Vec::new();
        for t in &self.terms {
            let weight = t.weight.as_deref().map(num).transpose()?.unwrap_or(Num::int(1));
            let given = t.product.is_some() as u8 + t.log.is_some() as u8 + t.constant.unwrap_or(false) as u8;
            if given != 1 {
                return Err(Error::Config("each term needs exactly one of product, log, constant".into()));
            }
            let term = if let Some(p) = &t.product {
                Term::Product(p.iter().map(|[a, e]| Ok(Factor::new(num(a)?, num(e)?))).collect::<Result<_>>()?)
            } else if let Some([a, b]) = &t.log {
                Term::Log { a: num(a)?, b: num(b)? }
            } else {
                Term::Constant
            };
            terms.push(WeightedTerm { weight, term });
        }
        Germ::new(center, terms)
    }
}

fn parse_center(s: &str) -> Result<Center> {
    let t = s.trim();
    if t.is_empty() || t.eq_ignore_ascii_case("infinity") || t.eq_ignore_ascii_case("inf") {
        Ok(Center::Infinity)
    } else {
        Ok(Center::Point(num(t)?))
    }
}

/// Compact germ syntax: terms separated by `;`, an optional `@ centre`
/// suffix. A term is `[weight *] prod(a:e, a:e, ...)`, `[weight *] log(a, b)`
/// or `[weight *] const`.
///
/// `prod(-1:1/3, 1:-1/3)` is `((z+1)/(z-1))^(1/3)` at infinity.
pub fn parse_germ(s: &str) -> Result<Germ> {
    let (body, center) = match s.rsplit_once('@') {
        Some((b, c)) => (b, parse_center(c)?),
        None => (s, Center::Infinity),
    };
    let mut terms = Vec::new();
    for raw in body.split(';') {
        let t = raw.trim();
        if t.is_empty() {
            continue;
        }
        let (kw, pos) = ["prod(", "log(", "const"]
            .iter()
            .filter_map(|k| t.find(k).map(|p| (*k, p)))
            .min_by_key(|x| x.1)
            .ok_or_else(|| Error::Parse(format!("term '{t}' has no prod(...), log(...) or const")))?;
        let wtxt = t[..pos].trim().trim_end_matches('*').trim();
        let weight = if wtxt.is_empty() { Num::int(1) } else { num(wtxt)? };
        let rest = &t[pos + kw.len()..];
        let term = match kw {
            "const" => {
                if !rest.trim().is_empty() {
                    return Err(Error::Parse(format!("trailing input after const in '{t}'")));
                }
                Term::Constant
            }
            _ => {
                let inner = rest.trim_end().strip_suffix(')').ok_or_else(|| Error::Parse(format!("missing ')' in '{t}'")))?;
                if kw == "log(" {
                    let (a, b) = inner.split_once(',').ok_or_else(|| Error::Parse(format!("log needs two points in '{t}'")))?;
                    Term::Log { a: num(a)?, b: num(b)? }
                } else {
                    let fs = inner
                        .split(',')
                        .map(|f| {
                            let (a, e) = f.split_once(':').ok_or_else(|| Error::Parse(format!("factor '{f}' needs point:exponent")))?;
                            Ok(Factor::new(num(a)?, num(e)?))
                        })
                        .collect::<Result<Vec<_>>>()?;
                    Term::Product(fs)
                }
            }
        };
        terms.push(WeightedTerm { weight, term });
    }
    Germ::new(center, terms)
}
