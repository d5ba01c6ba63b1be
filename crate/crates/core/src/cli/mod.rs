//! Configuration, experiment presets, the task runner and result export
//! used by the `hpade` binary.

mod export;
mod presets;
mod run;
mod spec;
mod svg;

pub use export::{export, f64s, Certificate, ExperimentResult, Formats, Metric, NamedPoly, Overlays, ZeroKind, ZeroRecord, OUTPUT_DIGITS};
pub use presets::{preset, Preset, PresetKind, PRESETS};
pub use run::{run_task, Budget};
pub use spec::{parse_germ, GermInput, GermSpec, TermSpec};
pub use svg::{render_result, render_svg, viewport, PointSet};

use crate::arith::PrecisionPolicy;
use crate::error::{Error, Result};
use crate::hermite::SignConvention;
use crate::pade::TwoPointOrders;
use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Task {
    Expand,
    Pade,
    Pade2,
    Mpade,
    Jfrac,
    Hp,
    Roots,
    Zdist,
    Froissart,
    Nodes,
    Alternation,
    Rates,
    Ortho,
    Stahlgeo,
    Preset,
}

impl Task {
    pub fn name(self) -> &'static str {
        match self {
            Task::Expand => "expand",
            Task::Pade => "pade",
            Task::Pade2 => "pade2",
            Task::Mpade => "mpade",
            Task::Jfrac => "jfrac",
            Task::Hp => "hp",
            Task::Roots => "roots",
            Task::Zdist => "zdist",
            Task::Froissart => "froissart",
            Task::Nodes => "nodes",
            Task::Alternation => "alternation",
            Task::Rates => "rates",
            Task::Ortho => "ortho",
            Task::Stahlgeo => "stahlgeo",
            Task::Preset => "preset",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct PrecisionConfig {
    pub base: u32,
    pub slope: u32,
    pub retries: u32,
}

impl Default for PrecisionConfig {
    fn default() -> Self {
        let p = PrecisionPolicy::default();
        PrecisionConfig { base: p.base, slope: p.slope, retries: p.retries }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct OutputConfig {
    pub dir: Option<String>,
    /// Any of `json`, `csv`, `svg`.
    pub formats: Vec<String>,
}

/// One interpolation node of a multipoint problem: the germ's centre is
/// the node.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct NodeInput {
    pub mult: usize,
    pub germ: GermInput,
}

/// A complete run description. Read from TOML; command-line flags
/// override individual fields.
#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct ExperimentConfig {
    pub task: Option<Task>,
    pub preset: Option<String>,
    /// The germ at infinity.
    pub germ: Option<GermInput>,
    /// The germ at 0 for two-point problems.
    pub germ0: Option<GermInput>,
    pub nodes: Vec<NodeInput>,
    pub n: Option<usize>,
    pub n_list: Vec<usize>,
    pub precision: PrecisionConfig,
    pub output: OutputConfig,
    pub sign_convention: SignConvention,
    pub window: Option<f64>,
    /// Evaluation points as exact complex strings.
    pub points: Vec<String>,
    pub theta: Option<f64>,
    pub radius: Option<f64>,
    /// `pade`, `hp` or `pade2`.
    pub family: Option<String>,
    /// `none`, `stahl`, `theorem1` or `buslaev`.
    pub predictor: Option<String>,
    /// Real segment for the `buslaev` predictor.
    pub segment: Option<[f64; 2]>,
    /// `pade` or `hp`.
    pub relation: Option<String>,
    /// Polynomial coefficients, ascending, for `roots`.
    pub coeffs: Vec<String>,
    pub orders: Option<TwoPointOrders>,
    pub paper_scale: bool,
    pub time_budget_s: Option<f64>,
}

/// Default time budget per run, in seconds.
pub const DEFAULT_BUDGET_S: f64 = 600.0;

impl ExperimentConfig {
    pub fn from_toml(s: &str) -> Result<Self> {
        toml::from_str(s).map_err(|e| Error::Config(e.to_string()))
    }

    pub fn to_toml(&self) -> Result<String> {
        toml::to_string(self).map_err(|e| Error::Config(e.to_string()))
    }

    pub fn policy(&self) -> PrecisionPolicy {
        PrecisionPolicy { base: self.precision.base, slope: self.precision.slope, retries: self.precision.retries }
    }

    pub fn formats(&self) -> Result<Formats> {
        if self.output.formats.is_empty() {
            return Ok(Formats { json: true, csv: false, svg: false });
        }
        self.output.formats.join(",").parse()
    }

    pub fn germ(&self) -> Result<crate::germ::Germ> {
        self.germ.as_ref().ok_or_else(|| Error::Config("this task needs a germ".into()))?.to_germ()
    }

    pub fn n_or(&self, default: usize) -> usize {
        self.n.unwrap_or(default)
    }

    /// Checks that the fields the task needs are present and sane.
    pub fn validate(&self) -> Result<Task> {
        let task = self.task.ok_or_else(|| Error::Config("no task given".into()))?;
        if self.n == Some(0) || self.n_list.contains(&0) {
            return Err(Error::Config("n must be at least 1".into()));
        }
        if self.precision.base == 0 {
            return Err(Error::Config("precision base must be positive".into()));
        }
        let need = |ok: bool, what: &str| if ok { Ok(()) } else { Err(Error::Config(format!("task '{}' needs {what}", task.name()))) };
        match task {
            Task::Expand | Task::Pade | Task::Jfrac | Task::Hp | Task::Zdist | Task::Froissart | Task::Nodes | Task::Alternation | Task::Ortho => {
                need(self.germ.is_some(), "a germ")?
            }
            Task::Pade2 => need(self.germ.is_some() && self.germ0.is_some(), "germ and germ0")?,
            Task::Mpade => need(!self.nodes.is_empty(), "nodes")?,
            Task::Roots => need(!self.coeffs.is_empty(), "coefficients")?,
            Task::Rates => {
                need(self.germ.is_some(), "a germ")?;
                need(self.n_list.len() >= 2, "at least two values in n_list")?;
                need(!self.points.is_empty(), "evaluation points")?;
            }
            Task::Stahlgeo => need(self.points.len() == 3, "three points")?,
            Task::Preset => need(self.preset.is_some(), "a preset id")?,
        }
        if let Some(t) = self.theta {
            if !(t > 0.0 && t < 1.0) {
                return Err(Error::Config("theta must lie in (0, 1)".into()));
            }
        }
        Ok(task)
    }
}

#[cfg(test)]
mod tests;
