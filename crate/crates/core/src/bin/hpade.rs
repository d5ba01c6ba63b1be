use clap::{Args, Parser, Subcommand};
use hpade::cli::{export, run_task, ExperimentConfig, GermInput, NodeInput, Task};
use hpade::hermite::SignConvention;
use hpade::{Error, Result};
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "hpade", version, about = "Padé and Hermite–Padé approximants of multivalued germs")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
    #[command(flatten)]
    opts: Opts,
}

#[derive(Subcommand)]
enum Cmd {
    /// Series coefficients of a germ.
    Expand,
    /// Diagonal Padé approximant at infinity.
    Pade,
    /// Two-point Padé approximant from germs at 0 and infinity.
    Pade2,
    /// Multipoint Padé approximant from `--node` germs.
    Mpade,
    /// J-fraction coefficients.
    Jfrac,
    /// Type I Hermite–Padé polynomials for [1, f, f^2].
    Hp,
    /// Roots of a polynomial given by `--coeffs`.
    Roots,
    /// Zero distribution against its reference measure.
    Zdist,
    /// Froissart doublets or triplets.
    Froissart,
    /// Interpolation nodes of the Hermite approximant.
    Nodes,
    /// Alternation of the weighted error.
    Alternation,
    /// Observed and predicted convergence rates.
    Rates,
    /// Orthogonality residuals.
    Ortho,
    /// Chebotarëv point and arcs of three branch points.
    Stahlgeo,
    /// Run a named figure or case setup.
    Preset { id: String },
}

#[derive(Args)]
struct Opts {
    /// TOML configuration; flags override its fields.
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    /// Germ in compact form, e.g. "prod(-1:1/3, 1:-1/3)".
    #[arg(long, global = true, allow_hyphen_values = true)]
    germ: Option<String>,
    /// Germ at 0 for two-point problems, e.g. "prod(1/2:-1/2, 2:-1/2) @ 0".
    #[arg(long, global = true, allow_hyphen_values = true)]
    germ0: Option<String>,
    /// Multipoint node "MULT|GERM"; repeatable.
    #[arg(long, global = true, allow_hyphen_values = true)]
    node: Vec<String>,
    /// Degree n.
    #[arg(long, global = true)]
    n: Option<usize>,
    /// Comma-separated degrees.
    #[arg(long, global = true, value_delimiter = ',')]
    n_list: Vec<usize>,
    /// Base working precision in digits.
    #[arg(long, global = true)]
    prec_base: Option<u32>,
    /// Extra digits per unit of n.
    #[arg(long, global = true)]
    prec_slope: Option<u32>,
    /// Kolmogorov window half-width.
    #[arg(long, global = true)]
    window: Option<f64>,
    /// Output directory; JSON goes to stdout when absent.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Any of json,csv,svg.
    #[arg(long, global = true)]
    format: Option<String>,
    /// Use the published degrees instead of halved ones.
    #[arg(long, global = true)]
    paper_scale: bool,
    /// definition or theorem1.
    #[arg(long, global = true)]
    sign_convention: Option<SignConvention>,
    /// Semicolon-separated complex points.
    #[arg(long, global = true, allow_hyphen_values = true)]
    points: Option<String>,
    /// Fraction of alternation points that may be lost, in (0, 1).
    #[arg(long, global = true)]
    theta: Option<f64>,
    /// Froissart detection radius.
    #[arg(long, global = true)]
    radius: Option<f64>,
    /// pade, hp or pade2.
    #[arg(long, global = true)]
    family: Option<String>,
    /// none, stahl, theorem1 or buslaev.
    #[arg(long, global = true)]
    predictor: Option<String>,
    /// Segment "a,b" for the buslaev predictor.
    #[arg(long, global = true, allow_hyphen_values = true)]
    segment: Option<String>,
    /// pade or hp.
    #[arg(long, global = true)]
    relation: Option<String>,
    /// Semicolon-separated ascending coefficients.
    #[arg(long, global = true, allow_hyphen_values = true)]
    coeffs: Option<String>,
    /// Time budget in seconds.
    #[arg(long, global = true)]
    time_budget: Option<f64>,
}

fn task_of(cmd: &Cmd) -> Task {
    match cmd {
        Cmd::Expand => Task::Expand,
        Cmd::Pade => Task::Pade,
        Cmd::Pade2 => Task::Pade2,
        Cmd::Mpade => Task::Mpade,
        Cmd::Jfrac => Task::Jfrac,
        Cmd::Hp => Task::Hp,
        Cmd::Roots => Task::Roots,
        Cmd::Zdist => Task::Zdist,
        Cmd::Froissart => Task::Froissart,
        Cmd::Nodes => Task::Nodes,
        Cmd::Alternation => Task::Alternation,
        Cmd::Rates => Task::Rates,
        Cmd::Ortho => Task::Ortho,
        Cmd::Stahlgeo => Task::Stahlgeo,
        Cmd::Preset { .. } => Task::Preset,
    }
}

fn split(s: &str) -> Vec<String> {
    s.split(';').map(str::trim).filter(|x| !x.is_empty()).map(String::from).collect()
}

fn build(cli: &Cli) -> Result<ExperimentConfig> {
    let o = &cli.opts;
    let mut c = match &o.config {
        Some(p) => ExperimentConfig::from_toml(&std::fs::read_to_string(p)?)?,
        None => ExperimentConfig::default(),
    };
    c.task = Some(task_of(&cli.cmd));
    if let Cmd::Preset { id } = &cli.cmd {
        c.preset = Some(id.clone());
    }
    if let Some(g) = &o.germ {
        c.germ = Some(GermInput::Compact(g.clone()));
    }
    if let Some(g) = &o.germ0 {
        c.germ0 = Some(GermInput::Compact(g.clone()));
    }
    for nd in &o.node {
        let (m, g) = nd.split_once('|').ok_or_else(|| Error::Config(format!("node '{nd}' is not MULT|GERM")))?;
        let mult = m.trim().parse().map_err(|_| Error::Config(format!("bad multiplicity in '{nd}'")))?;
        c.nodes.push(NodeInput { mult, germ: GermInput::Compact(g.into()) });
    }
    c.n = o.n.or(c.n);
    if !o.n_list.is_empty() {
        c.n_list = o.n_list.clone();
    }
    if let Some(b) = o.prec_base {
        c.precision.base = b;
    }
    if let Some(s) = o.prec_slope {
        c.precision.slope = s;
    }
    c.window = o.window.or(c.window);
    if let Some(d) = &o.out {
        c.output.dir = Some(d.display().to_string());
    }
    if let Some(f) = &o.format {
        c.output.formats = f.split(',').map(String::from).collect();
    }
    c.paper_scale |= o.paper_scale;
    if let Some(s) = o.sign_convention {
        c.sign_convention = s;
    }
    if let Some(p) = &o.points {
        c.points = split(p);
    }
    c.theta = o.theta.or(c.theta);
    c.radius = o.radius.or(c.radius);
    c.family = o.family.clone().or(c.family);
    c.predictor = o.predictor.clone().or(c.predictor);
    c.relation = o.relation.clone().or(c.relation);
    if let Some(s) = &o.segment {
        let v: Vec<f64> = s.split(',').map(|x| x.trim().parse::<f64>()).collect::<std::result::Result<_, _>>().map_err(|e| Error::Config(format!("segment: {e}")))?;
        let [a, b] = v[..] else { return Err(Error::Config("segment needs two numbers".into())) };
        c.segment = Some([a, b]);
    }
    if let Some(s) = &o.coeffs {
        c.coeffs = split(s);
    }
    c.time_budget_s = o.time_budget.or(c.time_budget_s);
    if c.paper_scale && c.time_budget_s.is_none() {
        c.time_budget_s = Some(f64::INFINITY);
    }
    Ok(c)
}

fn run(cli: &Cli) -> Result<i32> {
    let cfg = build(cli)?;
    let start = std::time::Instant::now();
    let result = run_task(&cfg)?;
    let formats = cfg.formats()?;
    let sidecar = serde_json::json!({
        "version": env!("CARGO_PKG_VERSION"),
        "wall_clock_s": start.elapsed().as_secs_f64(),
        "config": cfg.to_toml()?,
    });
    match &cfg.output.dir {
        Some(dir) => {
            for p in export(&result, std::path::Path::new(dir), formats, &sidecar)? {
                eprintln!("wrote {}", p.display());
            }
        }
        None => {
            use std::io::Write;
            let _ = writeln!(std::io::stdout(), "{}", result.to_json());
        }
    }
    Ok(if result.partial.is_some() { Error::TimeBudget(0.0).exit_code() } else { 0 })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
