use std::path::Path;
use std::process::{Command, Output};

fn qflab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qflab"))
        .args(args)
        .output()
        .expect("run qflab")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exited normally")
}

#[test]
fn list_shows_the_catalog() {
    let o = qflab(&["list"]);
    assert_eq!(code(&o), 0);
    let names: Vec<String> = stdout(&o)
        .lines()
        .map(|l| l.split_whitespace().next().unwrap().to_owned())
        .collect();
    assert_eq!(
        names,
        [
            "dual-numbers-char0",
            "f4-over-f2",
            "f8-over-f2",
            "f9-over-f3",
            "flatfixed-counterexample",
            "function-field-witness",
            "gaussian-rationals",
            "inseparable-model",
            "truncated-poly-char2",
            "two-variable-char2",
        ]
    );
}

#[test]
fn gaussian_rationals_report_is_all_pass_json() {
    let o = qflab(&["run", "gaussian-rationals", "--format", "json"]);
    assert_eq!(code(&o), 0, "{}", stdout(&o));
    let v: serde_json::Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert_eq!(v["scenario"], "gaussian-rationals");
    assert!(v["elapsed-ms"].is_u64());
    let assertions = v["assertions"].as_array().unwrap();
    assert!(assertions.iter().all(|a| a["verdict"] == "pass"));
    let w = assertions.iter().find(|a| a["name"] == "dim W").unwrap();
    assert_eq!(
        (w["expected"].as_str(), w["computed"].as_str()),
        (Some("0"), Some("0"))
    );
}

#[test]
fn function_field_witness_is_printed() {
    let o = qflab(&["run", "function-field-witness"]);
    assert_eq!(code(&o), 0);
    let text = stdout(&o);
    let witnesses = text
        .lines()
        .filter(|l| l.trim() == "witness: lambda = T, x = (1, 0), y = (0, 1): 1 != 0");
    assert_eq!(witnesses.count(), 2, "{text}");
}

#[test]
fn config_file_selects_scenario_params_and_output() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("report.csv");
    let cfg = dir.path().join("run.json");
    let body = serde_json::json!({
        "scenario": "inseparable-model",
        "params": {"p": 3},
        "format": "csv",
        "out": out,
    });
    std::fs::write(&cfg, body.to_string()).unwrap();
    let o = qflab(&["run", "--config", cfg.to_str().unwrap()]);
    assert_eq!(code(&o), 0);
    let csv = std::fs::read_to_string(&out).unwrap();
    assert!(
        csv.starts_with("scenario,name,operation,expected,computed,verdict,witness,elapsed-ms\n")
    );
    assert!(csv.contains("p = 3: dim W over K(T^p),q_phi,3,3,pass"));
    assert!(!csv.contains("p = 2"));
}

#[test]
fn usage_errors_exit_2() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("bad.json");
    std::fs::write(&cfg, r#"{"scenario": "f4-over-f2", "seed": 1}"#).unwrap();
    for args in [
        vec!["run", "no-such-scenario"],
        vec!["run", "--config", cfg.to_str().unwrap()],
        vec!["run", "f4-over-f2", "--degree", "4"],
        vec!["run", "truncated-poly-char2", "--degree", "3"],
        vec!["run", "f4-over-f2", "--workers", "0"],
        vec!["run"],
        vec!["frobnicate"],
    ] {
        let o = qflab(&args);
        assert_eq!(
            code(&o),
            2,
            "{args:?}: {}",
            String::from_utf8_lossy(&o.stderr)
        );
    }
}

#[test]
fn guard_exceeded_exits_3() {
    let o = qflab(&[
        "run",
        "truncated-poly-char2",
        "--degree",
        "6",
        "--format",
        "json",
    ]);
    assert_eq!(code(&o), 3);
    let v: serde_json::Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert_eq!(v["status"], "guard-exceeded");
    assert!(v["error"].as_str().unwrap().contains("exceeds guard"));
}

#[test]
fn reports_do_not_depend_on_worker_count() {
    let strip = |o: &Output| -> Vec<String> {
        stdout(o)
            .lines()
            .map(|l| l.rsplit_once(',').unwrap().0.to_owned())
            .collect()
    };
    let args = [
        "run",
        "gaussian-rationals",
        "f4-over-f2",
        "dual-numbers-char0",
        "--format",
        "csv",
    ];
    let one = qflab(&[&args[..], &["--workers", "1"]].concat());
    let three = qflab(&[&args[..], &["--workers", "3"]].concat());
    assert_eq!(strip(&one), strip(&three));
}

#[test]
fn shipped_goldens_match() {
    let o = qflab(&["goldens", "verify", "--workers", "4"]);
    assert_eq!(code(&o), 0, "{}", stdout(&o));
    assert!(stdout(&o).ends_with("10 of 10 goldens match\n"));
}

#[test]
fn verify_after_regen_passes_and_perturbation_fails_with_diff() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path().to_str().unwrap();
    let scenarios = ["f4-over-f2", "gaussian-rationals"];
    let o = qflab(&[&["goldens", "regen", "--dir", d][..], &scenarios].concat());
    assert_eq!(code(&o), 0);
    let o = qflab(&[&["goldens", "verify", "--dir", d][..], &scenarios].concat());
    assert_eq!(code(&o), 0, "{}", stdout(&o));

    let path = Path::new(d).join("f4-over-f2.json");
    let golden = std::fs::read_to_string(&path).unwrap();
    let needle = "\"expected\": \"2\",";
    let line = golden.lines().position(|l| l.trim() == needle).unwrap() + 1;
    std::fs::write(&path, golden.replacen(needle, "\"expected\": \"3\",", 1)).unwrap();
    let o = qflab(&[&["goldens", "verify", "--dir", d][..], &scenarios].concat());
    assert_eq!(code(&o), 1);
    let text = stdout(&o);
    assert!(text.contains("mismatch f4-over-f2"), "{text}");
    assert!(text.contains(&format!("line {line}:")), "{text}");
    let diff_line = |sign: &str, value: &str| {
        text.lines().any(|l| {
            let l = l.trim_start();
            l.starts_with(sign) && l[1..].trim() == format!("\"expected\": \"{value}\",")
        })
    };
    assert!(diff_line("-", "3") && diff_line("+", "2"), "{text}");
    assert!(text.contains("ok       gaussian-rationals"));

    std::fs::remove_file(Path::new(d).join("gaussian-rationals.json")).unwrap();
    let o = qflab(&[&["goldens", "verify", "--dir", d][..], &scenarios].concat());
    assert_eq!(code(&o), 1);
    assert!(stdout(&o).contains("missing  gaussian-rationals"));
}
