//! CSV writers for trajectories, sweeps and gait events.
//!
//! Numbers are written in scientific notation with 17 significant digits so
//! that every `f64` survives a write/parse round trip. Output depends only on
//! the input values.

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::Path;

use super::IoError;
use crate::analysis::SweepRow;
use crate::trajectory::{FootId, GaitEvent, GaitSample, Point};

pub const SAMPLE_HEADER: &str = "t,comF_x,comF_y,comF_z,comH_x,comH_y,comH_z,comQ_x,comQ_y,comQ_z,\
FL_x,FL_y,FL_z,FR_x,FR_y,FR_z,HL_x,HL_y,HL_z,HR_x,HR_y,HR_z,FL_sup,FR_sup,HL_sup,HR_sup";

pub const SWEEP_HEADER: &str =
    "v,d_SL,d_SW,omega_S,A_y,A_z,z_max,fn_sqrt,fn_squared,class,feasible";

pub const EVENT_HEADER: &str = "t,foot,kind,x,y,z";

const SAMPLE_COLUMNS: usize = 26;

fn num(x: f64) -> String {
    if x.is_finite() {
        format!("{x:.16e}")
    } else {
        // "NaN" / "inf", both accepted by f64::from_str
        format!("{x}")
    }
}

fn push_point(fields: &mut Vec<String>, p: &Point) {
    fields.extend([num(p.x), num(p.y), num(p.z)]);
}

pub fn write_samples<W: Write>(samples: &[GaitSample], mut out: W) -> io::Result<()> {
    writeln!(out, "{SAMPLE_HEADER}")?;
    for s in samples {
        let mut fields = Vec::with_capacity(SAMPLE_COLUMNS);
        fields.push(num(s.t));
        for p in [&s.com_fore, &s.com_hind, &s.com_quad] {
            push_point(&mut fields, p);
        }
        for p in &s.feet {
            push_point(&mut fields, p);
        }
        fields.extend(
            s.support
                .iter()
                .map(|&b| if b { "1" } else { "0" }.to_string()),
        );
        writeln!(out, "{}", fields.join(","))?;
    }
    out.flush()
}

pub fn write_sweep<W: Write>(rows: &[SweepRow], mut out: W) -> io::Result<()> {
    writeln!(out, "{SWEEP_HEADER}")?;
    for r in rows {
        writeln!(
            out,
            "{},{},{},{},{},{},{},{},{},{},{}",
            num(r.velocity),
            num(r.step_length),
            num(r.step_width),
            num(r.cadence),
            num(r.lateral_amplitude),
            num(r.vertical_amplitude),
            num(r.max_height),
            num(r.froude_sqrt),
            num(r.froude_squared),
            r.band,
            r.feasible,
        )?;
    }
    out.flush()
}

pub fn write_events<W: Write>(events: &[GaitEvent], mut out: W) -> io::Result<()> {
    writeln!(out, "{EVENT_HEADER}")?;
    for e in events {
        writeln!(
            out,
            "{},{},{},{},{},{}",
            num(e.t),
            e.foot,
            e.kind,
            num(e.position.x),
            num(e.position.y),
            num(e.position.z),
        )?;
    }
    out.flush()
}

fn write_file<F>(path: &Path, write: F) -> Result<(), IoError>
where
    F: FnOnce(BufWriter<File>) -> io::Result<()>,
{
    let file = File::create(path).map_err(|e| IoError::file(path, e))?;
    write(BufWriter::new(file)).map_err(|e| IoError::file(path, e))
}

pub fn export_samples(samples: &[GaitSample], path: impl AsRef<Path>) -> Result<(), IoError> {
    write_file(path.as_ref(), |w| write_samples(samples, w))
}

pub fn export_sweep(rows: &[SweepRow], path: impl AsRef<Path>) -> Result<(), IoError> {
    write_file(path.as_ref(), |w| write_sweep(rows, w))
}

pub fn export_events(events: &[GaitEvent], path: impl AsRef<Path>) -> Result<(), IoError> {
    write_file(path.as_ref(), |w| write_events(events, w))
}

/// Parses a sample CSV produced by [`write_samples`].
pub fn parse_samples(text: &str) -> Result<Vec<GaitSample>, IoError> {
    let mut lines = text.lines().enumerate();
    match lines.next() {
        Some((_, header)) if header == SAMPLE_HEADER => {}
        _ => {
            return Err(IoError::Csv {
                line: 1,
                reason: "missing or unexpected header".into(),
            })
        }
    }
    lines
        .filter(|(_, l)| !l.is_empty())
        .map(|(i, line)| {
            let line_no = i + 1;
            let fields: Vec<&str> = line.split(',').collect();
            if fields.len() != SAMPLE_COLUMNS {
                return Err(IoError::Csv {
                    line: line_no,
                    reason: format!("expected {SAMPLE_COLUMNS} fields, got {}", fields.len()),
                });
            }
            let value = |k: usize| -> Result<f64, IoError> {
                fields[k].parse::<f64>().map_err(|e| IoError::Csv {
                    line: line_no,
                    reason: format!("field {k} `{}`: {e}", fields[k]),
                })
            };
            let point = |k: usize| -> Result<Point, IoError> {
                Ok(Point::new(value(k)?, value(k + 1)?, value(k + 2)?))
            };
            let mut feet = [Point::origin(); 4];
            let mut support = [false; 4];
            for foot in FootId::ALL {
                let i = foot.index();
                feet[i] = point(10 + 3 * i)?;
                support[i] = match fields[22 + i] {
                    "1" => true,
                    "0" => false,
                    other => {
                        return Err(IoError::Csv {
                            line: line_no,
                            reason: format!("support flag must be 0 or 1, got `{other}`"),
                        })
                    }
                };
            }
            Ok(GaitSample {
                t: value(0)?,
                com_fore: point(1)?,
                com_hind: point(4)?,
                com_quad: point(7)?,
                feet,
                support,
            })
        })
        .collect()
}

pub fn read_samples(path: impl AsRef<Path>) -> Result<Vec<GaitSample>, IoError> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path).map_err(|e| IoError::file(path, e))?;
    parse_samples(&text)
}
