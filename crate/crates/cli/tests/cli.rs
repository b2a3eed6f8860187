use std::path::Path;
use std::process::{Command, Output};

fn panelbreak(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_panelbreak")).args(args).output().expect("binary runs")
}

fn write_config(dir: &Path, body: &str) -> String {
    let path = dir.join("run.toml");
    std::fs::write(&path, body).unwrap();
    path.to_string_lossy().into_owned()
}

#[test]
fn synth_then_run_from_file() {
    let dir = tempfile::tempdir().unwrap();
    let csv = dir.path().join("walks.csv");
    let out = panelbreak(&["synth", "--kind", "cointegrated", "--seed", "4", "--out", csv.to_str().unwrap(), "--entities", "15", "--years", "35"]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let text = std::fs::read_to_string(&csv).unwrap();
    assert!(text.starts_with("entity,year,variable,value\n"));
    assert_eq!(text.lines().count(), 1 + 15 * 35 * 4);

    let cfg = write_config(dir.path(), "input = \"walks.csv\"\nstart_year = 1988\nhorizon = 8\nformats = [\"csv\"]\n");
    let bundle = dir.path().join("bundle");
    let out = panelbreak(&["run", "--config", &cfg, "--output-dir", bundle.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    assert!(bundle.join("slope_homogeneity.csv").exists());
    assert!(!bundle.join("FAILED").exists());
    let summary = std::fs::read_to_string(bundle.join("summary.csv")).unwrap();
    assert!(summary.contains("cointegration,ok,cointegrated"), "{summary}");
}

#[test]
fn stage_subcommand_prints_its_table() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = write_config(dir.path(), "synth_kind = \"cointegrated\"\nsynth_entities = 12\nsynth_years = 30\nstart_year = 1993\n");
    let out = panelbreak(&["cointegration", "--config", &cfg]);
    assert!(out.status.success());
    let md = String::from_utf8(out.stdout).unwrap();
    assert!(md.starts_with("# Pedroni Residual Cointegration Test"));
    assert_eq!(md.matches("-Statistic |").count(), 7);
    assert!(md.contains("cointegration_verdict") || md.contains("majority rule"));
}

#[test]
fn validation_errors_exit_two() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = write_config(dir.path(), "synth_kind = \"cointegrated\"\nrank = 4\n");
    let out = panelbreak(&["run", "--config", &cfg]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("1 <= r < K"));

    let csv = dir.path().join("dup.csv");
    std::fs::write(&csv, "entity,year,variable,value\nA,2000,co2,1\nA,2000,co2,2\n").unwrap();
    let cfg = write_config(dir.path(), "input = \"dup.csv\"\nstart_year = 2000\nend_year = 2000\ndummy_threshold = 2000\n");
    let bundle = dir.path().join("b");
    let out = panelbreak(&["run", "--config", &cfg, "--output-dir", bundle.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    let marker = std::fs::read_to_string(bundle.join("FAILED")).unwrap();
    assert!(marker.contains("stage ingest") && marker.contains("line 3"), "{marker}");
}

#[test]
fn numerical_failure_exits_three_with_partial_bundle() {
    // co2 is an exact copy of energy_use, so the long-run regression is singular
    let dir = tempfile::tempdir().unwrap();
    let mut text = String::from("entity,year,variable,value\n");
    for e in 0..8 {
        let mut level = [0.0f64; 3];
        for (t, year) in (1990..2020).enumerate() {
            for (j, l) in level.iter_mut().enumerate() {
                *l += (((e * 31 + t * 17 + j * 7) % 11) as f64 - 5.0) / 3.0;
            }
            for (v, x) in [("co2", level[0]), ("energy_use", level[0]), ("gdp", level[1]), ("population", level[2])] {
                text.push_str(&format!("E{e},{year},{v},{x}\n"));
            }
        }
    }
    std::fs::write(dir.path().join("singular.csv"), text).unwrap();
    let cfg = write_config(dir.path(), "input = \"singular.csv\"\nstart_year = 1990\nend_year = 2019\n");
    let bundle = dir.path().join("b");
    let out = panelbreak(&["run", "--config", &cfg, "--output-dir", bundle.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(3), "{}", String::from_utf8_lossy(&out.stderr));
    assert!(bundle.join("FAILED").exists());
    assert!(bundle.join("variables.csv").exists());
}
