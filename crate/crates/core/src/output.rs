//! Plain-text result files.
//!
//! * snapshot table: header `x,u,v`, one row per knot;
//! * field dump: no header, one row per snapshot, `t` followed by `U` at every
//!   knot (`N + 2` columns).
//!
//! Numbers are written in scientific notation with a fixed number of
//! significant digits so the files are byte-stable.

use std::io::{self, Write};

use crate::stepper::Snapshot;

pub const DEFAULT_PRECISION: usize = 9;

/// Formats `value` with `digits` significant digits.
pub fn format_number(value: f64, digits: usize) -> String {
    let digits = digits.max(1);
    format!("{:.*e}", digits - 1, value)
}

pub fn write_snapshot_table<W: Write>(
    out: &mut W,
    nodes: &[f64],
    snapshot: &Snapshot,
    digits: usize,
) -> io::Result<()> {
    writeln!(out, "x,u,v")?;
    for ((x, u), v) in nodes.iter().zip(&snapshot.u).zip(&snapshot.v) {
        writeln!(
            out,
            "{},{},{}",
            format_number(*x, digits),
            format_number(*u, digits),
            format_number(*v, digits)
        )?;
    }
    Ok(())
}

pub fn write_field_dump<W: Write>(
    out: &mut W,
    snapshots: &[Snapshot],
    digits: usize,
) -> io::Result<()> {
    for s in snapshots {
        let mut line = format_number(s.time, digits);
        for u in &s.u {
            line.push(',');
            line.push_str(&format_number(*u, digits));
        }
        writeln!(out, "{line}")?;
    }
    Ok(())
}
