//! Run configuration from command-line flags and an optional `key = value` file.

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::fmt;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use ks_core::output::DEFAULT_PRECISION;
use ks_core::{build_case, CaseDefinition, CaseId, CaseSettings, InitMode, Pivoting};

/// Keys accepted in a config file; each mirrors the flag of the same name.
pub const KEYS: [&str; 12] = [
    "case",
    "n",
    "dt",
    "t-end",
    "theta",
    "alpha",
    "snapshots",
    "init",
    "pivot",
    "out",
    "precision",
    "sweep",
];

#[derive(Debug, thiserror::Error)]
pub enum ConfigError {
    /// Malformed command line, or `--help` / `--version`.
    #[error("{0}")]
    Cli(#[from] clap::Error),
    #[error("invalid value for {origin}: {reason}")]
    InvalidValue { origin: String, reason: String },
    #[error("{path}:{line}: unknown key `{key}`")]
    UnknownKey {
        path: String,
        line: usize,
        key: String,
    },
    #[error("{path}:{line}: {reason}")]
    Syntax {
        path: String,
        line: usize,
        reason: String,
    },
    #[error("cannot read config file {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("missing required setting `case` (pass --case or set it in the config file)")]
    MissingCase,
}

#[derive(Debug, Parser)]
#[command(
    name = "ctb-ks",
    version,
    about = "Trigonometric B-spline collocation solver for the Kuramoto-Sivashinsky equation"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Run one of the built-in cases and write its output files.
    Run(RunArgs),
}

#[derive(Debug, Args)]
struct RunArgs {
    /// Built-in case: a (shock), b (periodic-like sine data) or c (Gaussian).
    #[arg(long, value_name = "a|b|c")]
    case: Option<String>,
    /// Number of intervals N.
    #[arg(long, value_name = "INT", allow_hyphen_values = true)]
    n: Option<String>,
    /// Time step.
    #[arg(long, value_name = "REAL", allow_hyphen_values = true)]
    dt: Option<String>,
    /// End time.
    #[arg(long = "t-end", value_name = "REAL", allow_hyphen_values = true)]
    t_end: Option<String>,
    /// Coefficient of u_xxxx.
    #[arg(long, value_name = "REAL", allow_hyphen_values = true)]
    theta: Option<String>,
    /// Coefficient of u_xx.
    #[arg(long, value_name = "REAL", allow_hyphen_values = true)]
    alpha: Option<String>,
    /// Comma-separated output times.
    #[arg(long, value_name = "t1,t2,...", allow_hyphen_values = true)]
    snapshots: Option<String>,
    /// Initial fit: function-fit or uxx-fit.
    #[arg(long, value_name = "MODE")]
    init: Option<String>,
    /// Pivoting in the banded solver: partial or none.
    #[arg(long, value_name = "MODE")]
    pivot: Option<String>,
    /// Output directory.
    #[arg(long, value_name = "DIR")]
    out: Option<String>,
    /// Significant digits in text output.
    #[arg(long, value_name = "INT", allow_hyphen_values = true)]
    precision: Option<String>,
    /// Flat `key = value` file; flags override its values.
    #[arg(long, value_name = "FILE")]
    config: Option<PathBuf>,
    /// Run several values of one parameter concurrently, e.g. `theta=0.02,0.05`.
    #[arg(long, value_name = "PARAM=v1,v2,...")]
    sweep: Option<String>,
}

impl RunArgs {
    fn flags(&self) -> Vec<(&'static str, &Option<String>)> {
        vec![
            ("case", &self.case),
            ("n", &self.n),
            ("dt", &self.dt),
            ("t-end", &self.t_end),
            ("theta", &self.theta),
            ("alpha", &self.alpha),
            ("snapshots", &self.snapshots),
            ("init", &self.init),
            ("pivot", &self.pivot),
            ("out", &self.out),
            ("precision", &self.precision),
            ("sweep", &self.sweep),
        ]
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SweepParam {
    Theta,
    Alpha,
}

impl fmt::Display for SweepParam {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SweepParam::Theta => "theta",
            SweepParam::Alpha => "alpha",
        })
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Sweep {
    pub param: SweepParam,
    pub values: Vec<f64>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub case: CaseId,
    pub settings: CaseSettings,
    pub t_end: f64,
    pub snapshots: Vec<f64>,
    pub init: InitMode,
    pub pivot: Pivoting,
    pub out: PathBuf,
    pub precision: usize,
    pub sweep: Option<Sweep>,
}

impl RunConfig {
    /// Defaults for a case.
    pub fn for_case(case: CaseId) -> Self {
        Self {
            case,
            settings: case.defaults(),
            t_end: case.default_t_end(),
            snapshots: case.default_snapshots(),
            init: InitMode::default(),
            pivot: Pivoting::default(),
            out: PathBuf::from(format!("out/case-{case}")),
            precision: DEFAULT_PRECISION,
            sweep: None,
        }
    }

    pub fn case_definition(&self) -> ks_core::Result<CaseDefinition> {
        build_case(self.case, self.settings)
    }

    /// One config per sweep value, each writing to its own subdirectory.
    pub fn expand_sweep(&self) -> Vec<RunConfig> {
        let Some(sweep) = &self.sweep else {
            return vec![self.clone()];
        };
        sweep
            .values
            .iter()
            .map(|&v| {
                let mut c = self.clone();
                c.sweep = None;
                match sweep.param {
                    SweepParam::Theta => c.settings.theta = v,
                    SweepParam::Alpha => c.settings.alpha = v,
                }
                c.out = self.out.join(format!("{}-{v}", sweep.param));
                c
            })
            .collect()
    }
}

/// Where a raw setting came from, for error messages.
#[derive(Debug, Clone)]
enum Origin {
    Flag(&'static str),
    File {
        path: String,
        line: usize,
        key: String,
    },
}

impl fmt::Display for Origin {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Origin::Flag(name) => write!(f, "--{name}"),
            Origin::File { path, line, key } => write!(f, "`{key}` ({path}:{line})"),
        }
    }
}

fn invalid(origin: &Origin, reason: impl Into<String>) -> ConfigError {
    ConfigError::InvalidValue {
        origin: origin.to_string(),
        reason: reason.into(),
    }
}

/// Parses a flat `key = value` config file. `#` starts a comment.
pub fn parse_config_text(
    text: &str,
    path: &str,
) -> Result<BTreeMap<String, (String, usize)>, ConfigError> {
    let mut map = BTreeMap::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let Some((key, value)) = content.split_once('=') else {
            return Err(ConfigError::Syntax {
                path: path.to_string(),
                line,
                reason: format!("expected `key = value`, found `{content}`"),
            });
        };
        let key = key.trim().replace('_', "-");
        if !KEYS.contains(&key.as_str()) {
            return Err(ConfigError::UnknownKey {
                path: path.to_string(),
                line,
                key,
            });
        }
        if map
            .insert(key.clone(), (value.trim().to_string(), line))
            .is_some()
        {
            return Err(ConfigError::Syntax {
                path: path.to_string(),
                line,
                reason: format!("duplicate key `{key}`"),
            });
        }
    }
    Ok(map)
}

fn parse_f64(origin: &Origin, s: &str) -> Result<f64, ConfigError> {
    let v: f64 = s
        .trim()
        .parse()
        .map_err(|_| invalid(origin, format!("expected a number, got `{s}`")))?;
    if !v.is_finite() {
        return Err(invalid(
            origin,
            format!("expected a finite number, got `{s}`"),
        ));
    }
    Ok(v)
}

fn parse_list(origin: &Origin, s: &str) -> Result<Vec<f64>, ConfigError> {
    s.split(',')
        .filter(|p| !p.trim().is_empty())
        .map(|p| parse_f64(origin, p))
        .collect()
}

fn parse_sweep(origin: &Origin, s: &str) -> Result<Sweep, ConfigError> {
    let (name, values) = s
        .split_once('=')
        .ok_or_else(|| invalid(origin, format!("expected PARAM=v1,v2,..., got `{s}`")))?;
    let param = match name.trim() {
        "theta" => SweepParam::Theta,
        "alpha" => SweepParam::Alpha,
        other => {
            return Err(invalid(
                origin,
                format!("cannot sweep `{other}` (expected theta or alpha)"),
            ))
        }
    };
    let values = parse_list(origin, values)?;
    if values.is_empty() {
        return Err(invalid(origin, "no sweep values given"));
    }
    Ok(Sweep { param, values })
}

/// Builds a [`RunConfig`] from `argv` (program name first) and an optional
/// config file. A `--config` flag in `argv` is used when `config_file` is `None`.
pub fn parse_config<I, T>(argv: I, config_file: Option<&Path>) -> Result<RunConfig, ConfigError>
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = Cli::try_parse_from(argv)?;
    let Command::Run(args) = cli.command;

    let mut raw: BTreeMap<&'static str, (String, Origin)> = BTreeMap::new();
    if let Some(path) = config_file.or(args.config.as_deref()) {
        let shown = path.display().to_string();
        let text = std::fs::read_to_string(path).map_err(|source| ConfigError::Io {
            path: shown.clone(),
            source,
        })?;
        for (key, (value, line)) in parse_config_text(&text, &shown)? {
            let key = KEYS
                .iter()
                .find(|k| **k == key)
                .copied()
                .expect("validated key");
            let origin = Origin::File {
                path: shown.clone(),
                line,
                key: key.to_string(),
            };
            raw.insert(key, (value, origin));
        }
    }
    for (key, value) in args.flags() {
        if let Some(v) = value {
            raw.insert(key, (v.clone(), Origin::Flag(key)));
        }
    }

    let (case_value, case_origin) = raw.get("case").ok_or(ConfigError::MissingCase)?;
    let case: CaseId = case_value
        .parse()
        .map_err(|e: String| invalid(case_origin, e))?;
    let mut cfg = RunConfig::for_case(case);

    for (key, (value, origin)) in &raw {
        match *key {
            "case" => {}
            "n" => {
                let n: i64 = value
                    .trim()
                    .parse()
                    .map_err(|_| invalid(origin, format!("expected an integer, got `{value}`")))?;
                if n < 2 {
                    return Err(invalid(origin, format!("N must be at least 2, got {n}")));
                }
                cfg.settings.n = n as usize;
            }
            "dt" => {
                let dt = parse_f64(origin, value)?;
                if dt <= 0.0 {
                    return Err(invalid(
                        origin,
                        format!("time step must be positive, got {dt}"),
                    ));
                }
                cfg.settings.dt = dt;
            }
            "t-end" => {
                let t = parse_f64(origin, value)?;
                if t < 0.0 {
                    return Err(invalid(
                        origin,
                        format!("end time must be non-negative, got {t}"),
                    ));
                }
                cfg.t_end = t;
            }
            "theta" => cfg.settings.theta = parse_f64(origin, value)?,
            "alpha" => cfg.settings.alpha = parse_f64(origin, value)?,
            "snapshots" => cfg.snapshots = parse_list(origin, value)?,
            "init" => {
                cfg.init = value
                    .trim()
                    .parse()
                    .map_err(|e: String| invalid(origin, e))?
            }
            "pivot" => {
                cfg.pivot = value
                    .trim()
                    .parse()
                    .map_err(|e: String| invalid(origin, e))?
            }
            "out" => cfg.out = PathBuf::from(value.trim()),
            "precision" => {
                let p: i64 = value
                    .trim()
                    .parse()
                    .map_err(|_| invalid(origin, format!("expected an integer, got `{value}`")))?;
                if !(1..=17).contains(&p) {
                    return Err(invalid(
                        origin,
                        format!("precision must be in 1..=17, got {p}"),
                    ));
                }
                cfg.precision = p as usize;
            }
            "sweep" => cfg.sweep = Some(parse_sweep(origin, value)?),
            _ => unreachable!("keys are validated"),
        }
    }

    match raw.get("snapshots") {
        Some((_, origin)) => {
            if let Some(t) = cfg
                .snapshots
                .iter()
                .find(|&&t| t < 0.0 || t > cfg.t_end * (1.0 + 1e-12))
            {
                return Err(invalid(
                    origin,
                    format!("snapshot time {t} is outside [0, t_end = {}]", cfg.t_end),
                ));
            }
        }
        None => cfg.snapshots = default_snapshots(case, cfg.t_end),
    }

    // surface problem-level validation (e.g. theta = 0) against the flag that caused it
    let probe = match &cfg.sweep {
        Some(_) => cfg.expand_sweep(),
        None => vec![cfg.clone()],
    };
    for c in &probe {
        if let Err(e) = c.case_definition() {
            let name = match &e {
                ks_core::Error::InvalidParameter { name, .. } => *name,
                _ => "n",
            };
            let origin = raw
                .get(name)
                .map(|(_, o)| o.clone())
                .or_else(|| raw.get("sweep").map(|(_, o)| o.clone()))
                .unwrap_or(Origin::Flag("case"));
            return Err(invalid(&origin, e.to_string()));
        }
    }
    Ok(cfg)
}

/// Default output times for a case when the end time may have been changed.
pub fn default_snapshots(case: CaseId, t_end: f64) -> Vec<f64> {
    match case {
        CaseId::A => case
            .default_snapshots()
            .into_iter()
            .filter(|&t| t <= t_end * (1.0 + 1e-12))
            .collect(),
        CaseId::B | CaseId::C => {
            let count = (t_end / 0.1 + 1e-9).floor() as usize;
            (1..=count).map(|k| k as f64 * 0.1).collect()
        }
    }
}
