use super::*;
use num_complex::Complex64;

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

fn close(a: Complex64, b: Complex64, tol: f64) -> bool {
    (a - b).norm() <= tol * (1.0 + b.norm())
}

#[test]
fn compact_and_structured_germs_agree() {
    let a = parse_germ("prod(-1:1/3, 1:-1/3)").unwrap();
    let toml = r#"
task = "pade"
n = 4
[germ]
center = "infinity"
terms = [{ product = [["-1", "1/3"], ["1", "-1/3"]] }]
"#;
    let cfg = ExperimentConfig::from_toml(toml).unwrap();
    assert_eq!(cfg.germ().unwrap(), a);
    assert_eq!(cfg.validate().unwrap(), Task::Pade);
    let b = parse_germ("2*log(1, -1); 3*const; prod(0.5+1i:1/2, 2:-1/2)").unwrap();
    assert_eq!(b.terms().len(), 3);
    let t = parse_germ("prod(1/2:-1/2, 2:-1/2) @ 0").unwrap();
    assert!(!matches!(t.center(), crate::germ::Center::Infinity));
    assert!(parse_germ("prod(1:1/3").is_err());
    assert!(parse_germ("nothing").is_err());
    assert!(ExperimentConfig::from_toml("bogus = 1").is_err());
}

#[test]
fn config_validation() {
    let mut cfg = ExperimentConfig {
        task: Some(Task::Rates),
        germ: Some(GermInput::Compact("prod(-1:1/3, 1:-1/3)".into())),
        ..Default::default()
    };
    assert!(cfg.validate().is_err());
    cfg.n_list = vec![10, 20];
    cfg.points = vec!["2".into()];
    assert!(cfg.validate().is_ok());
    cfg.n = Some(0);
    assert!(cfg.validate().is_err());
    cfg.n = Some(3);
    cfg.theta = Some(1.5);
    assert!(cfg.validate().is_err());
    cfg.theta = Some(0.5);
    let back = ExperimentConfig::from_toml(&cfg.to_toml().unwrap()).unwrap();
    assert_eq!(back, cfg);
}

// Each preset germ against a direct evaluation of its formula.
#[test]
fn preset_germs_match_formulas() {
    let cbrt = |w: Complex64| w.powf(1.0 / 3.0);
    let z = c(9.0, 0.7);
    let p = |a: Complex64, e: f64| (z - a).powf(e);
    let six = (z + c(4.3, 1.0)) * (z - c(2.0, 0.5)) * (z + c(2.0, 2.0)) * (z + c(1.0, -3.0)) * (z - c(4.0, 2.0)) * (z - c(3.0, 5.0));
    let checks: Vec<(&str, Complex64)> = vec![
        ("figure1", p(c(-1.2, 0.8), 1.0 / 3.0) * p(c(0.9, 1.5), 1.0 / 3.0) * p(c(0.5, -1.2), -2.0 / 3.0)),
        ("figure2", six.powf(-1.0 / 6.0)),
        ("figure3", ((z - c(-1.0, 0.8)) / (z - c(1.0, 1.2))).sqrt() + ((z - c(-1.0, 1.5)) / (z - c(-1.0, -1.5))).sqrt()),
        ("figure4", ((z - c(-1.0, 0.8)) / (z - c(1.0, 1.2))).ln() + ((z - c(-1.0, 1.5)) / (z - c(-1.0, -1.5))).ln()),
        ("figure5", ((2.0 * z - 1.0) * (z - 2.0)).powf(-0.5) + 1.0),
        ("figure6", -((z - c(0.9, -1.1)) / (z - c(0.1, 0.2))).powf(0.25)),
        ("case1", cbrt((z + 2.5) / (z + 1.3)) * cbrt((z + 0.8) / (z - 0.8)) * cbrt((z - 1.3) / (z - 2.5))),
        ("case2", cbrt((z + 2.5) / (z + 1.3)) / cbrt((z + 0.8) / (z - 0.8)) * cbrt((z - 1.3) / (z - 2.5))),
        ("case3", cbrt((z + 2.5) / (z + 1.3)) * ((z + 0.3) / (z - 0.3)).sqrt() / cbrt((z - 1.3) / (z - 2.5))),
        ("figure11", cbrt((z + 2.5) / (z + 1.3)) * ((z + 0.3) / (z - 0.3)).sqrt() * cbrt((z - 1.3) / (z - 2.5))),
    ];
    for (id, want) in checks {
        let got = preset(id).unwrap().germ().unwrap().eval_f64(z).unwrap();
        assert!(close(got, want, 1e-12), "{id}: {got} vs {want}");
    }
    let z0 = c(0.1, 0.05);
    let f5 = preset("figure5").unwrap().germ0().unwrap().unwrap();
    let want = ((1.0 - 2.0 * z0) * (2.0 - z0)).powf(-0.5);
    assert!(close(f5.eval_f64(z0).unwrap(), want, 1e-12));
    let f6 = preset("figure6").unwrap().germ0().unwrap().unwrap();
    let want = ((z0 - c(0.9, -1.1)) / (z0 - c(0.1, 0.2))).powf(0.25);
    assert!(close(f6.eval_f64(z0).unwrap(), want, 1e-12), "{} vs {want}", f6.eval_f64(z0).unwrap());
}

#[test]
fn preset_registry() {
    let published = [130, 267, 300, 300, 120, 195, 200, 200, 320, 320, 320, 320, 320, 320];
    for (k, n) in published.iter().enumerate() {
        let p = preset(&format!("figure{}", k + 1)).unwrap();
        assert_eq!(p.paper_n, *n);
        assert_eq!(p.n(true), *n);
        assert_eq!(p.n(false), n / 2);
    }
    for id in ["figure7", "figure8"] {
        assert_eq!(preset(id).unwrap().germ, preset("case1").unwrap().germ);
    }
    for id in ["figure9", "figure10"] {
        assert_eq!(preset(id).unwrap().germ().unwrap(), preset("case2").unwrap().germ().unwrap());
    }
    assert!(preset("figure10").unwrap().note.is_some());
    assert!(preset("case3").unwrap().note.is_some());
    assert_eq!(preset("case3").unwrap().paper_n, 200);
    assert_ne!(preset("case3").unwrap().germ().unwrap(), preset("figure11").unwrap().germ().unwrap());
    assert!(preset("figure99").is_err());
}

#[test]
fn scale_flag_changes_only_n() {
    let mk = |paper| ExperimentConfig {
        task: Some(Task::Preset),
        preset: Some("figure3".into()),
        paper_scale: paper,
        n: Some(6),
        ..Default::default()
    };
    let a = run_task(&mk(false)).unwrap();
    let b = run_task(&mk(true)).unwrap();
    assert_eq!(a.inputs.get("germ"), b.inputs.get("germ"));
    assert_eq!(a.polys, b.polys);
}

#[test]
fn preset_runs_are_deterministic() {
    let cfg = ExperimentConfig { task: Some(Task::Preset), preset: Some("case1".into()), n: Some(8), ..Default::default() };
    let a = run_task(&cfg).unwrap().to_json();
    let b = run_task(&cfg).unwrap().to_json();
    assert_eq!(a, b);
    let ra = render_result(&ExperimentResult::from_json(&a).unwrap());
    let rb = render_result(&ExperimentResult::from_json(&b).unwrap());
    assert_eq!(ra, rb);
    assert_eq!(ra.matches("class=\"segment\"").count(), 3);
}

#[test]
fn export_formats() {
    let mut r = ExperimentResult::new("roots");
    r.points(ZeroKind::ZeroP, &[c(1.0, 0.0), c(-1.0, 0.5)]);
    r.metric_f("x", 0.25, Some("<= 1"), 30);
    let csv = r.to_csv();
    assert_eq!(csv.lines().count(), 3, "{csv}");
    let back = ExperimentResult::from_json(&r.to_json()).unwrap();
    assert_eq!(back, r);
    let v: serde_json::Value = serde_json::from_str(&r.to_json()).unwrap();
    assert!(v["metrics"][0]["value"].is_string());
    assert!(v["zeros"][0]["re"].is_string());
    let dir = tempfile::tempdir().unwrap();
    let files = export(&r, dir.path(), "json,csv,svg".parse().unwrap(), &serde_json::json!({})).unwrap();
    assert!(files.iter().all(|f| f.exists()));
    assert!(files.len() >= 3);
    assert!("json,pdf".parse::<Formats>().is_err());
}

#[test]
fn svg_markers_and_legend() {
    let one = render_svg(&[PointSet { label: "z".into(), color: "blue", points: vec![c(0.0, 0.0)] }], &[], &[]);
    assert_eq!(one.matches("class=\"marker\"").count(), 1);
    let sets: Vec<PointSet> = ["a", "b", "c"]
        .iter()
        .map(|l| PointSet { label: l.to_string(), color: "red", points: vec![c(1.0, 1.0)] })
        .collect();
    let s = render_svg(&sets, &[], &[]);
    assert_eq!(s.matches("class=\"legend\"").count(), 3);
    let pos: Vec<usize> = ["a", "b", "c"].iter().map(|l| s.find(&format!(">{l}</text>")).unwrap()).collect();
    assert!(pos.windows(2).all(|w| w[0] < w[1]));
    assert_eq!(s, render_svg(&sets, &[], &[]));
    let empty = render_svg(&[], &[], &[]);
    assert_eq!(empty.matches("class=\"marker\"").count(), 0);
    assert!(empty.contains("class=\"axis\""));
    assert_eq!(viewport(&[], &[], &[]), (-1.0, 1.0, -1.0, 1.0));
}

#[test]
fn errors_map_to_exit_codes() {
    let cfg = ExperimentConfig { task: Some(Task::Roots), coeffs: vec!["5".into()], ..Default::default() };
    assert_eq!(run_task(&cfg).unwrap_err().exit_code(), 2);
    let cfg = ExperimentConfig { task: Some(Task::Hp), germ: Some(GermInput::Compact("prod(-1:1, 1:-1)".into())), n: Some(3), ..Default::default() };
    assert_eq!(run_task(&cfg).unwrap_err().exit_code(), 2);
    assert_eq!(crate::Error::PrecisionExhausted { digits: 10, residual_exp: -3 }.exit_code(), 3);
    assert_eq!(crate::Error::TimeBudget(1.0).exit_code(), 4);
    assert_eq!(crate::Error::Config("x".into()).exit_code(), 1);
}

#[test]
fn zero_budget_marks_partial() {
    let cfg = ExperimentConfig {
        task: Some(Task::Preset),
        preset: Some("figure1".into()),
        n: Some(6),
        time_budget_s: Some(0.0),
        ..Default::default()
    };
    let r = run_task(&cfg).unwrap();
    assert!(r.partial.is_some());
    let b = Budget::new(1e9);
    assert!(!b.exceeded() && b.check().is_ok());
}
