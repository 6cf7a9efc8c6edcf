//! `quadgait` command line.
//!
//! Exit codes:
//!
//! | code | meaning |
//! |---|---|
//! | 0 | success (for `check`: every constraint passes) |
//! | 1 | model error (infeasible or singular gait) |
//! | 2 | usage error (bad flags, unknown plot kind) |
//! | 3 | `check` ran but at least one constraint fails |
//! | 4 | configuration error (parse or validation) |
//! | 5 | file I/O error |

use std::ffi::OsString;
use std::fs;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};

use super::config::{load_config_text, RunConfig};
use super::export::{export_events, export_samples, export_sweep};
use super::plot::{plot_samples, plot_sweep, PlotKind};
use super::IoError;
use crate::analysis::{audit, band_transitions, feasibility_check, sweep_with, velocity_grid};
use crate::gait_model::{froude, speed_range};

pub const EXIT_OK: i32 = 0;
pub const EXIT_MODEL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_CHECK_FAILED: i32 = 3;
pub const EXIT_CONFIG: i32 = 4;
pub const EXIT_IO: i32 = 5;

#[derive(Debug, Parser)]
#[command(
    name = "quadgait",
    version,
    about = "Quadruped walking trajectories from two coupled inverted-pendulum bipeds"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct Common {
    /// Run configuration file (flat `key = value` TOML)
    #[arg(long, value_name = "PATH")]
    config: Option<PathBuf>,
    /// Walking velocity, m/s
    #[arg(long)]
    velocity: Option<f64>,
    /// Number of steps to generate
    #[arg(long)]
    steps: Option<usize>,
    /// Sampling interval, s
    #[arg(long)]
    dt: Option<f64>,
    /// Output directory
    #[arg(long, value_name = "DIR", default_value = ".")]
    out: PathBuf,
    /// Plots to emit, comma separated
    #[arg(long, value_name = "KIND[,KIND...]", value_delimiter = ',')]
    plot: Vec<String>,
    /// Accept velocities below the minimum walking speed
    #[arg(long)]
    permissive: bool,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Generate a trajectory (samples.csv) and optional plots
    Gen(Common),
    /// Tabulate gait parameters over a velocity grid (sweep.csv)
    Sweep {
        #[command(flatten)]
        common: Common,
        /// First grid velocity, m/s [default: minimum walking speed]
        #[arg(long)]
        from: Option<f64>,
        /// Last grid velocity, m/s [default: maximum walking speed]
        #[arg(long)]
        to: Option<f64>,
        /// Number of grid points
        #[arg(long, default_value_t = 50)]
        count: usize,
    },
    /// Print the feasibility report for one velocity
    Check(Common),
    /// List lift-off and touchdown events (events.csv)
    Events(Common),
}

fn exit_code(err: &IoError) -> i32 {
    match err {
        IoError::Gait(_) => EXIT_MODEL,
        IoError::Usage(_) => EXIT_USAGE,
        IoError::Parse(_) | IoError::Invalid { .. } => EXIT_CONFIG,
        IoError::File { .. } | IoError::Csv { .. } => EXIT_IO,
    }
}

impl Common {
    /// Config file (or defaults) with command-line overrides applied.
    fn run_config(&self) -> Result<RunConfig, IoError> {
        let mut cfg = match &self.config {
            Some(path) => load_config_text(path)?,
            None => RunConfig::default(),
        };
        if let Some(v) = self.velocity {
            cfg.velocity = v;
        }
        if let Some(n) = self.steps {
            cfg.steps = n;
        }
        if let Some(dt) = self.dt {
            cfg.dt = dt;
        }
        cfg.permissive |= self.permissive;
        Ok(cfg)
    }

    fn plots(&self, trajectory: bool) -> Result<Vec<PlotKind>, IoError> {
        self.plot
            .iter()
            .map(|name| {
                let kind: PlotKind = name.trim().parse()?;
                if kind.is_trajectory() != trajectory {
                    return Err(IoError::Usage(format!(
                        "plot kind `{kind}` is not available for this subcommand"
                    )));
                }
                Ok(kind)
            })
            .collect()
    }

    fn out_dir(&self) -> Result<&Path, IoError> {
        fs::create_dir_all(&self.out).map_err(|e| IoError::file(&self.out, e))?;
        Ok(&self.out)
    }
}

fn gen(common: &Common) -> Result<i32, IoError> {
    let plots = common.plots(true)?;
    let cfg = common.run_config()?;
    cfg.validate()?;
    let gait = cfg.gait()?;
    let samples = gait.generate(cfg.steps, cfg.dt)?;
    let out = common.out_dir()?;

    let csv = out.join("samples.csv");
    export_samples(&samples, &csv)?;
    println!("wrote {} ({} samples)", csv.display(), samples.len());
    for kind in plots {
        let path = out.join(format!("{kind}.svg"));
        plot_samples(&samples, kind, &path)?;
        println!("wrote {}", path.display());
    }

    let sp = gait.stride();
    let metrics = audit(&samples, sp)?;
    if sp.sub_minimum {
        println!("warning: velocity below minimum walking speed; lateral sway clamped to the feet");
    }
    println!(
        "v={} d_SL={:.6} d_SW={:.6} cadence={:.6} A_y={:.6} A_z={:.6} z_max={:.6} Fn={:.4}",
        sp.velocity,
        sp.step_length,
        sp.step_width,
        sp.cadence,
        sp.lateral_amplitude,
        sp.vertical_amplitude,
        sp.max_height,
        froude(sp.velocity, &cfg.morphology, cfg.froude_convention),
    );
    println!(
        "audit: max_leg_extension={:.6} max_swing_x_jump={:.3e} com_speed_error={:.3e} intercom_distance_range={:.3e} swing_peak_clearance={:.6}",
        metrics.max_leg_extension,
        metrics.max_swing_x_jump,
        metrics.com_speed_error,
        metrics.intercom_distance_range,
        metrics.swing_peak_clearance,
    );
    Ok(EXIT_OK)
}

fn sweep_cmd(
    common: &Common,
    from: Option<f64>,
    to: Option<f64>,
    count: usize,
) -> Result<i32, IoError> {
    let plots = common.plots(false)?;
    let cfg = common.run_config()?;
    let range = speed_range(&cfg.morphology)?;
    let grid = velocity_grid(from.unwrap_or(range.min), to.unwrap_or(range.max), count)
        .map_err(|e| IoError::Usage(e.to_string()))?;
    let rows = sweep_with(&cfg.morphology, &grid, cfg.froude_convention)?;
    let out = common.out_dir()?;

    let csv = out.join("sweep.csv");
    export_sweep(&rows, &csv)?;
    println!("wrote {} ({} rows)", csv.display(), rows.len());
    for kind in plots {
        let path = out.join(format!("{kind}.svg"));
        plot_sweep(&rows, kind, &path)?;
        println!("wrote {}", path.display());
    }
    println!(
        "speed range [{:.4}, {:.4}] m/s, {} of {} rows feasible",
        range.min,
        range.max,
        rows.iter().filter(|r| r.feasible).count(),
        rows.len()
    );
    for t in band_transitions(&rows, cfg.froude_convention) {
        println!("{} -> {} at v={:.4} m/s", t.from, t.to, t.velocity);
    }
    Ok(EXIT_OK)
}

fn check(common: &Common) -> Result<i32, IoError> {
    let cfg = common.run_config()?;
    let report = feasibility_check(cfg.velocity, &cfg.morphology)?;
    print!("{report}");
    Ok(if report.overall {
        EXIT_OK
    } else {
        EXIT_CHECK_FAILED
    })
}

fn events_cmd(common: &Common) -> Result<i32, IoError> {
    let cfg = common.run_config()?;
    cfg.validate()?;
    let events = cfg.gait()?.events(cfg.steps)?;
    let out = common.out_dir()?;
    let csv = out.join("events.csv");
    export_events(&events, &csv)?;
    println!("wrote {} ({} events)", csv.display(), events.len());
    Ok(EXIT_OK)
}

/// Parses `args` (including the program name), runs the subcommand and
/// returns the process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return e.exit_code();
        }
    };
    let result = match &cli.command {
        Command::Gen(common) => gen(common),
        Command::Sweep {
            common,
            from,
            to,
            count,
        } => sweep_cmd(common, *from, *to, *count),
        Command::Check(common) => check(common),
        Command::Events(common) => events_cmd(common),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            exit_code(&e)
        }
    }
}
