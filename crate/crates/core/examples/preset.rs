//! Runs a figure preset through the same path as the command-line tool and
//! writes JSON, CSV and SVG to a temporary directory.
use hpade::cli::{export, run_task, ExperimentConfig, Task};

fn main() -> hpade::Result<()> {
    let id = std::env::args().nth(1).unwrap_or_else(|| "case1".into());
    let cfg = ExperimentConfig { task: Some(Task::Preset), preset: Some(id.clone()), n: Some(30), ..Default::default() };
    let r = run_task(&cfg)?;
    for m in &r.metrics {
        println!("{} = {}", m.name, m.value);
    }
    let dir = std::env::temp_dir().join(format!("hpade-{id}"));
    std::fs::create_dir_all(&dir)?;
    for f in export(&r, &dir, "json,csv,svg".parse()?, &serde_json::json!({ "example": "preset" }))? {
        println!("wrote {}", f.display());
    }
    Ok(())
}
