use std::path::{Path, PathBuf};

use serde::Deserialize;

use crate::report::Format;

/// Scenario parameters. Each scenario declares which keys it accepts.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Params {
    pub p: Option<u64>,
    pub n: Option<usize>,
    pub degree: Option<usize>,
}

impl Params {
    /// Names of the keys that are set.
    pub fn keys(&self) -> Vec<&'static str> {
        let mut out = Vec::new();
        if self.p.is_some() {
            out.push("p");
        }
        if self.n.is_some() {
            out.push("n");
        }
        if self.degree.is_some() {
            out.push("degree");
        }
        out
    }

    /// `self` with the keys set in `over` replaced.
    pub fn merged(self, over: Params) -> Params {
        Params {
            p: over.p.or(self.p),
            n: over.n.or(self.n),
            degree: over.degree.or(self.degree),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Deserialize)]
#[serde(untagged)]
pub enum Scenarios {
    One(String),
    Many(Vec<String>),
}

impl Scenarios {
    pub fn into_vec(self) -> Vec<String> {
        match self {
            Scenarios::One(s) => vec![s],
            Scenarios::Many(v) => v,
        }
    }
}

/// The run configuration file. Command-line flags override its keys.
#[derive(Debug, Clone, Default, PartialEq, Eq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Config {
    pub scenario: Option<Scenarios>,
    #[serde(default)]
    pub params: Params,
    pub format: Option<Format>,
    pub out: Option<PathBuf>,
    pub workers: Option<usize>,
}

pub fn load(path: &Path) -> Result<Config, String> {
    let text = std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    parse(&text).map_err(|e| format!("{}: {e}", path.display()))
}

pub fn parse(text: &str) -> Result<Config, String> {
    serde_json::from_str(text).map_err(|e| e.to_string())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn full_config_parses() {
        let c = parse(
            r#"{"scenario": ["f4-over-f2"], "params": {"p": 3}, "format": "csv", "out": "r.csv", "workers": 2}"#,
        )
        .unwrap();
        assert_eq!(c.scenario.unwrap().into_vec(), ["f4-over-f2"]);
        assert_eq!(c.params.p, Some(3));
        assert_eq!(c.format, Some(Format::Csv));
        assert_eq!(c.workers, Some(2));
    }

    #[test]
    fn unknown_keys_are_rejected() {
        assert!(parse(r#"{"scenarios": "x"}"#)
            .unwrap_err()
            .contains("unknown field"));
        assert!(parse(r#"{"params": {"q": 2}}"#)
            .unwrap_err()
            .contains("unknown field"));
    }

    #[test]
    fn flags_override_file_params() {
        let file = Params {
            p: Some(2),
            n: Some(3),
            degree: None,
        };
        let flags = Params {
            p: Some(3),
            ..Params::default()
        };
        assert_eq!(
            file.merged(flags),
            Params {
                p: Some(3),
                n: Some(3),
                degree: None
            }
        );
    }
}
