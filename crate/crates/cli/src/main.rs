use std::process::ExitCode;

use anyhow::Context;
use ks_cli::{execute, execute_all, parse_config, ConfigError, RunSummary};

fn report(summary: &RunSummary, out: &std::path::Path) {
    let c = &summary.config;
    println!(
        "case {}: N = {}, dt = {}, t_end = {}, alpha = {}, theta = {} -> {}",
        c.case,
        c.n,
        c.dt,
        c.t_end,
        c.alpha,
        c.theta,
        out.display()
    );
    if let Some(gre) = &summary.gre {
        println!(
            "{:>8} {:>14} {:>14} {:>14}",
            "t", "GRE", "reference", "quintic"
        );
        for g in gre {
            let (r, q) = g
                .reference
                .as_ref()
                .map(|r| (format!("{:.6e}", r.present), format!("{:.6e}", r.quintic)))
                .unwrap_or_default();
            println!("{:>8.3} {:>14.6e} {:>14} {:>14}", g.t, g.computed, r, q);
        }
    }
    match &summary.error {
        None => println!(
            "completed {} steps in {:.3} s",
            summary.steps_completed, summary.timings.total
        ),
        Some(e) => eprintln!("run failed after {} steps: {e}", summary.steps_completed),
    }
}

fn run() -> anyhow::Result<ExitCode> {
    let cfg = match parse_config(std::env::args_os(), None) {
        Ok(cfg) => cfg,
        Err(ConfigError::Cli(e)) => {
            let _ = e.print();
            return Ok(ExitCode::from(e.exit_code() as u8));
        }
        Err(e) => return Err(e).context("usage error (see `ctb-ks run --help`)"),
    };
    let configs = cfg.expand_sweep();
    let results = if configs.len() == 1 {
        vec![execute(&configs[0])]
    } else {
        execute_all(&configs)
    };
    let mut ok = true;
    for (c, r) in configs.iter().zip(results) {
        let summary = r.with_context(|| format!("run writing to {}", c.out.display()))?;
        report(&summary, &c.out);
        ok &= summary.completed();
    }
    Ok(if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    })
}

fn main() -> ExitCode {
    match run() {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
