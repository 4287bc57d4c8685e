//! Runs a configuration and writes its result files.

use std::fs::{self, File};
use std::io::{BufWriter, Write};
use std::path::{Path, PathBuf};
use std::time::Instant;

use ks_core::output::{write_field_dump, write_snapshot_table};
use ks_core::stepper::steps_to;
use ks_core::{Snapshot, Solver};
use serde::Serialize;

use crate::config::RunConfig;

pub const SUMMARY_FILE: &str = "summary.json";
pub const TIMINGS_FILE: &str = "timings.json";
pub const FIELD_FILE: &str = "field.csv";

#[derive(Debug, thiserror::Error)]
pub enum RunError {
    #[error("cannot write {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("invalid configuration: {0}")]
    Config(#[from] ks_core::Error),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Completed,
    Failed,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ConfigEcho {
    pub case: String,
    pub n: usize,
    pub dt: f64,
    pub t_end: f64,
    pub alpha: f64,
    pub theta: f64,
    pub snapshots: Vec<f64>,
    pub init: String,
    pub pivot: String,
    pub precision: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SnapshotRecord {
    pub t: f64,
    pub level: usize,
    pub file: String,
    pub max_abs_u: f64,
}

/// Published values for the same time, when the table has a row for it.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ReferenceRow {
    pub present: f64,
    pub quintic: f64,
    pub lattice_boltzmann: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct GreEntry {
    pub t: f64,
    pub computed: f64,
    pub reference: Option<ReferenceRow>,
    pub ratio_to_reference: Option<f64>,
}

/// Wall-clock timings in seconds. Kept out of `summary.json` so that file is
/// byte-stable between runs.
#[derive(Debug, Clone, Default, PartialEq, Serialize)]
pub struct Timings {
    pub fit: f64,
    pub mean_step: f64,
    pub total: f64,
    pub steps: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RunSummary {
    pub config: ConfigEcho,
    pub status: Status,
    pub error: Option<String>,
    pub steps_completed: usize,
    pub final_time: f64,
    pub field_dump: String,
    pub snapshots: Vec<SnapshotRecord>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub gre: Option<Vec<GreEntry>>,
    #[serde(skip)]
    pub timings: Timings,
}

impl RunSummary {
    pub fn completed(&self) -> bool {
        self.status == Status::Completed
    }
}

fn echo(cfg: &RunConfig) -> ConfigEcho {
    ConfigEcho {
        case: cfg.case.to_string(),
        n: cfg.settings.n,
        dt: cfg.settings.dt,
        t_end: cfg.t_end,
        alpha: cfg.settings.alpha,
        theta: cfg.settings.theta,
        snapshots: cfg.snapshots.clone(),
        init: cfg.init.to_string(),
        pivot: cfg.pivot.to_string(),
        precision: cfg.precision,
    }
}

pub fn snapshot_file_name(t: f64) -> String {
    format!("snapshot-t{t:.6}.csv")
}

fn create(path: &Path) -> Result<BufWriter<File>, RunError> {
    File::create(path)
        .map(BufWriter::new)
        .map_err(|source| RunError::Io {
            path: path.to_path_buf(),
            source,
        })
}

fn io_at(path: &Path) -> impl Fn(std::io::Error) -> RunError + '_ {
    move |source| RunError::Io {
        path: path.to_path_buf(),
        source,
    }
}

fn write_json<T: Serialize>(path: &Path, value: &T) -> Result<(), RunError> {
    let mut w = create(path)?;
    serde_json::to_writer_pretty(&mut w, value).map_err(|e| io_at(path)(e.into()))?;
    writeln!(w).and_then(|_| w.flush()).map_err(io_at(path))
}

/// Runs `cfg`, writing snapshot tables, the field dump, `summary.json` and
/// `timings.json` into `cfg.out`. Solver failures end the run early and are
/// reported in the summary; only I/O and configuration problems are errors.
pub fn execute(cfg: &RunConfig) -> Result<RunSummary, RunError> {
    let total_start = Instant::now();
    let case = cfg.case_definition()?;
    fs::create_dir_all(&cfg.out).map_err(io_at(&cfg.out))?;

    let dt = case.problem.dt;
    let total_steps = steps_to(cfg.t_end, dt);
    let mut levels: Vec<usize> = cfg.snapshots.iter().map(|&t| steps_to(t, dt)).collect();
    levels.push(0);
    levels.sort_unstable();
    levels.dedup();
    levels.retain(|&l| l <= total_steps);

    let nodes = case.problem.grid.nodes().to_vec();
    let mut snapshots: Vec<Snapshot> = Vec::new();
    let mut error = None;
    let mut steps_done = 0;
    let mut final_time = 0.0;
    let (mut fit_time, mut step_time) = (0.0, 0.0);

    match Solver::new(case.problem.clone(), cfg.pivot) {
        Err(e) => error = Some(e.to_string()),
        Ok(solver) => {
            let fit_start = Instant::now();
            let initial = solver.initial_state(cfg.init);
            fit_time = fit_start.elapsed().as_secs_f64();
            match initial {
                Err(e) => error = Some(e.to_string()),
                Ok(mut state) => {
                    let mut next = levels.iter().peekable();
                    let step_start = Instant::now();
                    loop {
                        if next.peek() == Some(&&state.level) {
                            snapshots.push(solver.snapshot(&state));
                            next.next();
                        }
                        final_time = state.time;
                        if state.level >= total_steps {
                            break;
                        }
                        match solver.step(&state) {
                            Ok(s) => {
                                state = s;
                                steps_done += 1;
                            }
                            Err(e) => {
                                error = Some(e.to_string());
                                break;
                            }
                        }
                    }
                    step_time = step_start.elapsed().as_secs_f64();
                }
            }
        }
    }

    let mut records = Vec::with_capacity(snapshots.len());
    for s in &snapshots {
        let file = snapshot_file_name(s.time);
        let path = cfg.out.join(&file);
        let mut w = create(&path)?;
        write_snapshot_table(&mut w, &nodes, s, cfg.precision)
            .and_then(|_| w.flush())
            .map_err(io_at(&path))?;
        records.push(SnapshotRecord {
            t: s.time,
            level: s.level,
            file,
            max_abs_u: s.u.iter().fold(0.0f64, |m, v| m.max(v.abs())),
        });
    }
    let field_path = cfg.out.join(FIELD_FILE);
    let mut w = create(&field_path)?;
    write_field_dump(&mut w, &snapshots, cfg.precision)
        .and_then(|_| w.flush())
        .map_err(io_at(&field_path))?;

    let gre = case.exact.map(|_| {
        snapshots
            .iter()
            .filter(|s| s.level > 0)
            .filter_map(|s| {
                let computed = case.gre_of(s)?.ok()?;
                let reference = case.reference_gre.and_then(|table| {
                    table
                        .iter()
                        .find(|r| (r.t - s.time).abs() < 1e-9)
                        .map(|r| ReferenceRow {
                            present: r.present,
                            quintic: r.quintic,
                            lattice_boltzmann: r.lattice_boltzmann,
                        })
                });
                let ratio_to_reference = reference.as_ref().map(|r| computed / r.present);
                Some(GreEntry {
                    t: s.time,
                    computed,
                    reference,
                    ratio_to_reference,
                })
            })
            .collect()
    });

    let summary = RunSummary {
        config: echo(cfg),
        status: if error.is_none() {
            Status::Completed
        } else {
            Status::Failed
        },
        error,
        steps_completed: steps_done,
        final_time,
        field_dump: FIELD_FILE.to_string(),
        snapshots: records,
        gre,
        timings: Timings {
            fit: fit_time,
            mean_step: if steps_done > 0 {
                step_time / steps_done as f64
            } else {
                0.0
            },
            total: total_start.elapsed().as_secs_f64(),
            steps: steps_done,
        },
    };
    write_json(&cfg.out.join(SUMMARY_FILE), &summary)?;
    write_json(&cfg.out.join(TIMINGS_FILE), &summary.timings)?;
    Ok(summary)
}

/// Runs every configuration of a sweep on its own thread.
pub fn execute_all(configs: &[RunConfig]) -> Vec<Result<RunSummary, RunError>> {
    std::thread::scope(|scope| {
        let handles: Vec<_> = configs
            .iter()
            .map(|c| scope.spawn(move || execute(c)))
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("run thread panicked"))
            .collect()
    })
}
