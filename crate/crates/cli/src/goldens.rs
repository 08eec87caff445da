use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use crate::report::Report;

pub fn default_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("goldens")
}

pub fn path_for(dir: &Path, scenario: &str) -> PathBuf {
    dir.join(format!("{scenario}.json"))
}

/// Writes the canonical rendering of each report, one file per scenario.
pub fn regen(dir: &Path, reports: &[Report]) -> Result<Vec<PathBuf>, String> {
    fs::create_dir_all(dir).map_err(|e| format!("{}: {e}", dir.display()))?;
    reports
        .iter()
        .map(|r| {
            let path = path_for(dir, &r.scenario);
            fs::write(&path, r.canonical_json()).map_err(|e| format!("{}: {e}", path.display()))?;
            Ok(path)
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Check {
    Match,
    Missing(PathBuf),
    Mismatch(Vec<String>),
}

pub fn verify_one(dir: &Path, report: &Report) -> Check {
    let path = path_for(dir, &report.scenario);
    match fs::read_to_string(&path) {
        Err(_) => Check::Missing(path),
        Ok(golden) => {
            let current = report.canonical_json();
            if golden == current {
                Check::Match
            } else {
                Check::Mismatch(line_diff(&golden, &current))
            }
        }
    }
}

/// Line-by-line differences, numbered from 1; `-` is the golden, `+` the
/// current rendering.
pub fn line_diff(golden: &str, current: &str) -> Vec<String> {
    let (g, c): (Vec<&str>, Vec<&str>) = (golden.lines().collect(), current.lines().collect());
    let mut out = Vec::new();
    for i in 0..g.len().max(c.len()) {
        let (a, b) = (g.get(i), c.get(i));
        if a == b {
            continue;
        }
        let mut line = format!("line {}:", i + 1);
        if let Some(a) = a {
            let _ = write!(line, "\n  - {a}");
        }
        if let Some(b) = b {
            let _ = write!(line, "\n  + {b}");
        }
        out.push(line);
    }
    if out.is_empty() {
        // Same lines, different terminators.
        out.push(String::from("line endings differ"));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn diff_reports_changed_and_extra_lines() {
        let d = line_diff("a\nb\nc\n", "a\nx\nc\nd\n");
        assert_eq!(d, ["line 2:\n  - b\n  + x", "line 4:\n  + d"]);
    }

    #[test]
    fn diff_of_trailing_newline_only() {
        assert_eq!(line_diff("a\n", "a"), ["line endings differ"]);
    }
}
