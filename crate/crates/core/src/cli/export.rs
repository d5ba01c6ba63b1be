use crate::arith::{fmt_complex, fmt_float, Poly};
use crate::error::Result;
use num_complex::Complex64;
use rug::Complex;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::Path;

/// Significant digits of multiprecision numbers in exported files.
pub const OUTPUT_DIGITS: usize = 30;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum ZeroKind {
    #[serde(rename = "zero-Q0")]
    ZeroQ0,
    #[serde(rename = "zero-Q1")]
    ZeroQ1,
    #[serde(rename = "zero-Q2")]
    ZeroQ2,
    #[serde(rename = "zero-P")]
    ZeroP,
    #[serde(rename = "pole")]
    Pole,
    #[serde(rename = "node")]
    Node,
}

impl ZeroKind {
    pub fn label(self) -> &'static str {
        match self {
            ZeroKind::ZeroQ0 => "zero-Q0",
            ZeroKind::ZeroQ1 => "zero-Q1",
            ZeroKind::ZeroQ2 => "zero-Q2",
            ZeroKind::ZeroP => "zero-P",
            ZeroKind::Pole => "pole",
            ZeroKind::Node => "node",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ZeroRecord {
    pub kind: ZeroKind,
    pub re: String,
    pub im: String,
    /// `log10` of the relative polynomial residual.
    pub residual: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct NamedPoly {
    pub name: String,
    pub coeffs: Vec<String>,
}

/// A reported number with the tolerance it is judged against and the
/// working precision it came from.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Metric {
    pub name: String,
    pub value: String,
    pub tolerance: Option<String>,
    pub digits: u32,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Certificate {
    pub name: String,
    pub digits: u32,
    pub residual_log10: String,
    pub passes: bool,
}

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct Overlays {
    pub segments: Vec<[String; 2]>,
    pub arcs: Vec<Vec<[String; 2]>>,
}

/// Everything a run produces, with every number as a decimal string.
#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct ExperimentResult {
    pub task: String,
    pub inputs: BTreeMap<String, String>,
    pub polys: Vec<NamedPoly>,
    pub zeros: Vec<ZeroRecord>,
    pub metrics: Vec<Metric>,
    pub certificates: Vec<Certificate>,
    pub overlays: Overlays,
    /// Present when the time budget stopped the pipeline early.
    pub partial: Option<String>,
}

pub fn f64s(x: f64) -> String {
    format!("{x:e}")
}

impl ExperimentResult {
    pub fn new(task: &str) -> Self {
        ExperimentResult { task: task.into(), ..Default::default() }
    }

    pub fn input(&mut self, k: &str, v: impl ToString) {
        self.inputs.insert(k.into(), v.to_string());
    }

    pub fn poly(&mut self, name: &str, p: &Poly) {
        self.polys.push(NamedPoly { name: name.into(), coeffs: p.coeffs().iter().map(|c| fmt_complex(c, OUTPUT_DIGITS)).collect() });
    }

    pub fn values(&mut self, name: &str, v: &[Complex]) {
        self.polys.push(NamedPoly { name: name.into(), coeffs: v.iter().map(|c| fmt_complex(c, OUTPUT_DIGITS)).collect() });
    }

    pub fn zeros_mp(&mut self, kind: ZeroKind, zs: &crate::roots::ZeroSet) {
        for (z, r) in zs.roots.iter().zip(&zs.residual_log10) {
            self.zeros.push(ZeroRecord { kind, re: fmt_float(z.real(), OUTPUT_DIGITS), im: fmt_float(z.imag(), OUTPUT_DIGITS), residual: f64s(*r) });
        }
    }

    pub fn points(&mut self, kind: ZeroKind, zs: &[Complex64]) {
        for z in zs {
            self.zeros.push(ZeroRecord { kind, re: f64s(z.re), im: f64s(z.im), residual: "nan".into() });
        }
    }

    pub fn metric(&mut self, name: &str, value: impl ToString, tolerance: Option<&str>, digits: u32) {
        self.metrics.push(Metric { name: name.into(), value: value.to_string(), tolerance: tolerance.map(String::from), digits });
    }

    pub fn metric_f(&mut self, name: &str, value: f64, tolerance: Option<&str>, digits: u32) {
        self.metric(name, f64s(value), tolerance, digits);
    }

    pub fn cert(&mut self, name: &str, c: &crate::pade::Certificate) {
        self.certificates.push(Certificate { name: name.into(), digits: c.digits, residual_log10: f64s(c.residual_log10), passes: c.passes() });
    }

    pub fn metric_value(&self, name: &str) -> Option<&str> {
        self.metrics.iter().find(|m| m.name == name).map(|m| m.value.as_str())
    }

    /// Points of one kind, as `f64` pairs.
    pub fn kind_points(&self, kind: ZeroKind) -> Vec<Complex64> {
        self.zeros
            .iter()
            .filter(|z| z.kind == kind)
            .map(|z| Complex64::new(z.re.parse().unwrap_or(f64::NAN), z.im.parse().unwrap_or(f64::NAN)))
            .collect()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("result serializes")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| crate::Error::Parse(e.to_string()))
    }

    pub fn to_csv(&self) -> String {
        let mut s = String::from("kind,re,im,residual\n");
        for z in &self.zeros {
            let _ = writeln!(s, "{},{},{},{}", z.kind.label(), z.re, z.im, z.residual);
        }
        s
    }
}

/// Output formats selected on the command line.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Formats {
    pub json: bool,
    pub csv: bool,
    pub svg: bool,
}

impl std::str::FromStr for Formats {
    type Err = crate::Error;
    fn from_str(s: &str) -> Result<Self> {
        let mut f = Formats::default();
        for p in s.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            match p {
                "json" => f.json = true,
                "csv" => f.csv = true,
                "svg" => f.svg = true,
                _ => return Err(crate::Error::Config(format!("unknown format '{p}'"))),
            }
        }
        Ok(f)
    }
}

/// Writes `result.json`, `zeros.csv` and `plot.svg` as selected, plus the
/// `run.json` sidecar carrying wall-clock data, which is kept out of the
/// deterministic result.
pub fn export(result: &ExperimentResult, dir: &Path, formats: Formats, sidecar: &serde_json::Value) -> Result<Vec<std::path::PathBuf>> {
    std::fs::create_dir_all(dir)?;
    let mut written = Vec::new();
    let mut put = |name: &str, body: String| -> Result<()> {
        let p = dir.join(name);
        std::fs::write(&p, body)?;
        written.push(p);
        Ok(())
    };
    if formats.json {
        put("result.json", result.to_json())?;
    }
    if formats.csv {
        put("zeros.csv", result.to_csv())?;
    }
    if formats.svg {
        put("plot.svg", super::svg::render_result(result))?;
    }
    put("run.json", serde_json::to_string_pretty(sidecar).expect("sidecar serializes"))?;
    Ok(written)
}
