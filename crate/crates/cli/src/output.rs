use std::fmt;
use std::io::Write;
use std::path::Path;
use std::process::ExitCode;

use anyhow::Context;
use serde_json::{Map, Value};

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Text,
    JsonLines,
}

/// Where report lines go. When an artifact is streamed to stdout, reports
/// move to stderr so the two never mix.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sink {
    Stdout,
    Stderr,
}

#[derive(Debug, Clone, Copy)]
pub struct Reporter {
    pub format: Format,
    pub sink: Sink,
}

impl Reporter {
    pub fn to(self, sink: Sink) -> Self {
        Reporter { sink, ..self }
    }

    /// One `key=value ...` line, or one JSON object with the same keys.
    pub fn emit(&self, fields: &[(&str, Value)]) {
        let line = match self.format {
            Format::Text => fields
                .iter()
                .map(|(k, v)| match v {
                    Value::String(s) => format!("{k}={s}"),
                    other => format!("{k}={other}"),
                })
                .collect::<Vec<_>>()
                .join(" "),
            Format::JsonLines => {
                let map: Map<String, Value> = fields
                    .iter()
                    .map(|(k, v)| (k.to_string(), v.clone()))
                    .collect();
                Value::Object(map).to_string()
            }
        };
        match self.sink {
            Sink::Stdout => println!("{line}"),
            Sink::Stderr => eprintln!("{line}"),
        }
    }

    pub fn summary(&self, algorithm: &str, k: usize, palette: usize, valid: bool, seconds: f64) {
        self.emit(&[
            ("algorithm", algorithm.into()),
            ("k", k.into()),
            ("palette", palette.into()),
            ("valid", valid.into()),
            ("seconds", seconds_value(seconds)),
        ]);
    }
}

/// Seconds rounded to milliseconds, identical in both formats.
pub fn seconds_value(seconds: f64) -> Value {
    let rounded = (seconds * 1000.0).round() / 1000.0;
    serde_json::Number::from_f64(rounded)
        .map(Value::Number)
        .unwrap_or(Value::Null)
}

/// Writes through a temporary file in the target directory, then renames.
pub fn write_atomic(path: &Path, contents: &str) -> anyhow::Result<()> {
    let dir = match path.parent() {
        Some(p) if !p.as_os_str().is_empty() => p,
        _ => Path::new("."),
    };
    let mut tmp = tempfile::NamedTempFile::new_in(dir)
        .with_context(|| format!("creating temporary file in {}", dir.display()))?;
    tmp.write_all(contents.as_bytes())?;
    tmp.as_file().sync_all()?;
    tmp.persist(path)
        .with_context(|| format!("writing {}", path.display()))?;
    Ok(())
}

/// Writes to `path`, or to stdout when absent.
pub fn write_artifact(path: Option<&Path>, contents: &str) -> anyhow::Result<()> {
    match path {
        Some(p) => write_atomic(p, contents),
        None => {
            std::io::stdout().write_all(contents.as_bytes())?;
            Ok(())
        }
    }
}

/// Failure classes, one per exit code.
#[derive(Debug)]
pub enum Failure {
    /// Verification failed or a run was exhausted.
    Invalid,
    /// Bad input or an unmet precondition.
    Input(anyhow::Error),
    /// Self-verification failed or an internal invariant broke.
    Internal(anyhow::Error),
}

impl Failure {
    pub fn exit_code(&self) -> ExitCode {
        ExitCode::from(match self {
            Failure::Invalid => 1,
            Failure::Input(_) => 2,
            Failure::Internal(_) => 3,
        })
    }
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Failure::Invalid => f.write_str("invalid"),
            Failure::Input(e) => write!(f, "error: {e:#}"),
            Failure::Internal(e) => write!(f, "internal error: {e:#}"),
        }
    }
}

impl From<anyhow::Error> for Failure {
    fn from(e: anyhow::Error) -> Self {
        match e.downcast_ref::<hypermajority::Error>() {
            Some(inner) if !inner.is_input_error() && !matches!(inner, hypermajority::Error::Io(_)) => {
                Failure::Internal(e)
            }
            _ => Failure::Input(e),
        }
    }
}

impl From<hypermajority::Error> for Failure {
    fn from(e: hypermajority::Error) -> Self {
        anyhow::Error::from(e).into()
    }
}
