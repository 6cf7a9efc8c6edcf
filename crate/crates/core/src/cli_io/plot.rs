//! Static SVG line charts of trajectories and sweeps.
//!
//! Every data series is a single `<polyline>` carrying a `class` (its group:
//! `com`, `cor`, `strategy`, `froude`) and a `data-series` name, so the files
//! can be inspected structurally.

use std::fmt;
use std::path::Path;
use std::str::FromStr;

use svg::node::element::{Line, Polyline, Rectangle, Text};
use svg::Document;

use super::IoError;
use crate::analysis::{SweepRow, CANTER_MIN, WALK_MIN};
use crate::trajectory::{FootId, GaitSample, Point};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PlotKind {
    /// CoMs on the x–y plane.
    Transverse,
    /// CoMs on the y–z plane.
    Frontal,
    /// CoMs on the x–z plane.
    Sagittal,
    /// Forward coordinate of the four CoRs against time.
    CorXVsT,
    /// Step length and step width against velocity.
    SweepStrategy,
    /// Froude numbers against velocity with the gait band edges.
    SweepFroude,
}

impl PlotKind {
    pub const ALL: [PlotKind; 6] = [
        PlotKind::Transverse,
        PlotKind::Frontal,
        PlotKind::Sagittal,
        PlotKind::CorXVsT,
        PlotKind::SweepStrategy,
        PlotKind::SweepFroude,
    ];

    pub fn name(self) -> &'static str {
        match self {
            PlotKind::Transverse => "transverse",
            PlotKind::Frontal => "frontal",
            PlotKind::Sagittal => "sagittal",
            PlotKind::CorXVsT => "cor-x-vs-t",
            PlotKind::SweepStrategy => "sweep-strategy",
            PlotKind::SweepFroude => "sweep-froude",
        }
    }

    /// Whether the plot is drawn from trajectory samples rather than a sweep.
    pub fn is_trajectory(self) -> bool {
        !matches!(self, PlotKind::SweepStrategy | PlotKind::SweepFroude)
    }
}

impl fmt::Display for PlotKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for PlotKind {
    type Err = IoError;

    fn from_str(s: &str) -> Result<Self, IoError> {
        PlotKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| {
                let known: Vec<_> = PlotKind::ALL.iter().map(|k| k.name()).collect();
                IoError::Usage(format!(
                    "unknown plot kind `{s}` (expected one of {})",
                    known.join(", ")
                ))
            })
    }
}

struct Series {
    name: String,
    class: &'static str,
    points: Vec<(f64, f64)>,
}

/// A labelled horizontal reference line.
struct Guide {
    y: f64,
    label: String,
}

struct Chart {
    title: String,
    x_label: &'static str,
    y_label: &'static str,
    series: Vec<Series>,
    guides: Vec<Guide>,
}

const WIDTH: f64 = 760.0;
const HEIGHT: f64 = 480.0;
const LEFT: f64 = 80.0;
const RIGHT: f64 = 170.0;
const TOP: f64 = 40.0;
const BOTTOM: f64 = 60.0;
const PALETTE: [&str; 4] = ["#1f77b4", "#d62728", "#2ca02c", "#9467bd"];

fn padded_range(mut lo: f64, mut hi: f64) -> (f64, f64) {
    if !(lo.is_finite() && hi.is_finite()) {
        return (0.0, 1.0);
    }
    if hi - lo <= f64::EPSILON * hi.abs().max(1.0) {
        let pad = (lo.abs() * 0.1).max(1e-3);
        lo -= pad;
        hi += pad;
    }
    let pad = (hi - lo) * 0.05;
    (lo - pad, hi + pad)
}

fn label(x: f64) -> String {
    let s = format!("{x:.3}");
    if s == "-0.000" {
        "0.000".into()
    } else {
        s
    }
}

impl Chart {
    fn render(&self) -> Document {
        let finite = |p: &&(f64, f64)| p.0.is_finite() && p.1.is_finite();
        let all = self
            .series
            .iter()
            .flat_map(|s| s.points.iter().filter(finite));
        let (mut x_lo, mut x_hi, mut y_lo, mut y_hi) = (
            f64::INFINITY,
            f64::NEG_INFINITY,
            f64::INFINITY,
            f64::NEG_INFINITY,
        );
        for &(x, y) in all {
            x_lo = x_lo.min(x);
            x_hi = x_hi.max(x);
            y_lo = y_lo.min(y);
            y_hi = y_hi.max(y);
        }
        for g in &self.guides {
            y_lo = y_lo.min(g.y);
            y_hi = y_hi.max(g.y);
        }
        let (x_lo, x_hi) = padded_range(x_lo, x_hi);
        let (y_lo, y_hi) = padded_range(y_lo, y_hi);

        let plot_w = WIDTH - LEFT - RIGHT;
        let plot_h = HEIGHT - TOP - BOTTOM;
        let px = |x: f64| LEFT + (x - x_lo) / (x_hi - x_lo) * plot_w;
        let py = |y: f64| TOP + (y_hi - y) / (y_hi - y_lo) * plot_h;

        let mut doc = Document::new()
            .set("viewBox", (0, 0, WIDTH, HEIGHT))
            .set("width", WIDTH)
            .set("height", HEIGHT)
            .set("font-family", "sans-serif")
            .set("font-size", 12)
            .add(
                Rectangle::new()
                    .set("width", WIDTH)
                    .set("height", HEIGHT)
                    .set("fill", "white"),
            )
            .add(
                Rectangle::new()
                    .set("class", "frame")
                    .set("x", LEFT)
                    .set("y", TOP)
                    .set("width", plot_w)
                    .set("height", plot_h)
                    .set("fill", "none")
                    .set("stroke", "black"),
            )
            .add(
                Text::new(self.title.clone())
                    .set("x", LEFT + plot_w / 2.0)
                    .set("y", TOP / 2.0 + 6.0)
                    .set("text-anchor", "middle")
                    .set("font-size", 15),
            )
            .add(
                Text::new(self.x_label)
                    .set("x", LEFT + plot_w / 2.0)
                    .set("y", HEIGHT - 15.0)
                    .set("text-anchor", "middle"),
            )
            .add(
                Text::new(self.y_label)
                    .set("x", 18.0)
                    .set("y", TOP + plot_h / 2.0)
                    .set("text-anchor", "middle")
                    .set(
                        "transform",
                        format!("rotate(-90 18 {})", TOP + plot_h / 2.0),
                    ),
            );

        const TICKS: usize = 5;
        for i in 0..=TICKS {
            let f = i as f64 / TICKS as f64;
            let (xv, yv) = (x_lo + f * (x_hi - x_lo), y_lo + f * (y_hi - y_lo));
            let (x, y) = (px(xv), py(yv));
            doc = doc
                .add(
                    Line::new()
                        .set("class", "tick")
                        .set("x1", x)
                        .set("x2", x)
                        .set("y1", TOP + plot_h)
                        .set("y2", TOP + plot_h + 5.0)
                        .set("stroke", "black"),
                )
                .add(
                    Text::new(label(xv))
                        .set("x", x)
                        .set("y", TOP + plot_h + 20.0)
                        .set("text-anchor", "middle"),
                )
                .add(
                    Line::new()
                        .set("class", "tick")
                        .set("x1", LEFT - 5.0)
                        .set("x2", LEFT)
                        .set("y1", y)
                        .set("y2", y)
                        .set("stroke", "black"),
                )
                .add(
                    Text::new(label(yv))
                        .set("x", LEFT - 8.0)
                        .set("y", y + 4.0)
                        .set("text-anchor", "end"),
                );
        }

        for g in &self.guides {
            let y = py(g.y);
            doc = doc
                .add(
                    Line::new()
                        .set("class", "guide")
                        .set("x1", LEFT)
                        .set("x2", LEFT + plot_w)
                        .set("y1", y)
                        .set("y2", y)
                        .set("stroke", "gray")
                        .set("stroke-dasharray", "4 3"),
                )
                .add(
                    Text::new(g.label.clone())
                        .set("x", LEFT + plot_w - 4.0)
                        .set("y", y - 4.0)
                        .set("text-anchor", "end")
                        .set("fill", "gray"),
                );
        }

        for (i, s) in self.series.iter().enumerate() {
            let color = PALETTE[i % PALETTE.len()];
            let points: Vec<String> = s
                .points
                .iter()
                .filter(finite)
                .map(|&(x, y)| format!("{:.2},{:.2}", px(x), py(y)))
                .collect();
            let legend_y = TOP + 10.0 + 20.0 * i as f64;
            doc = doc
                .add(
                    Polyline::new()
                        .set("class", s.class)
                        .set("data-series", s.name.clone())
                        .set("fill", "none")
                        .set("stroke", color)
                        .set("stroke-width", 1.5)
                        .set("points", points.join(" ")),
                )
                .add(
                    Line::new()
                        .set("class", "legend")
                        .set("x1", WIDTH - RIGHT + 15.0)
                        .set("x2", WIDTH - RIGHT + 40.0)
                        .set("y1", legend_y)
                        .set("y2", legend_y)
                        .set("stroke", color)
                        .set("stroke-width", 2),
                )
                .add(
                    Text::new(s.name.clone())
                        .set("x", WIDTH - RIGHT + 46.0)
                        .set("y", legend_y + 4.0),
                );
        }
        doc
    }
}

type ComAccessor = fn(&GaitSample) -> Point;

fn samples_chart(samples: &[GaitSample], kind: PlotKind) -> Result<Chart, IoError> {
    let com_series = |pick: fn(&Point) -> (f64, f64)| -> Vec<Series> {
        let coms: [(&str, ComAccessor); 3] = [
            ("com_F", |s| s.com_fore),
            ("com_H", |s| s.com_hind),
            ("com_quad", |s| s.com_quad),
        ];
        coms.into_iter()
            .map(|(name, com)| Series {
                name: name.into(),
                class: "com",
                points: samples.iter().map(|s| pick(&com(s))).collect(),
            })
            .collect()
    };
    let (title, x_label, y_label, series) = match kind {
        PlotKind::Transverse => (
            "CoM trajectories, transverse plane",
            "x [m]",
            "y [m]",
            com_series(|p| (p.x, p.y)),
        ),
        PlotKind::Frontal => (
            "CoM trajectories, frontal plane",
            "y [m]",
            "z [m]",
            com_series(|p| (p.y, p.z)),
        ),
        PlotKind::Sagittal => (
            "CoM trajectories, sagittal plane",
            "x [m]",
            "z [m]",
            com_series(|p| (p.x, p.z)),
        ),
        PlotKind::CorXVsT => (
            "Anteroposterior CoR trajectories",
            "t [s]",
            "x [m]",
            FootId::ALL
                .into_iter()
                .map(|foot| Series {
                    name: foot.label().into(),
                    class: "cor",
                    points: samples.iter().map(|s| (s.t, s.foot(foot).x)).collect(),
                })
                .collect(),
        ),
        other => {
            return Err(IoError::Usage(format!(
                "plot kind `{other}` needs sweep data, not a trajectory"
            )))
        }
    };
    Ok(Chart {
        title: title.into(),
        x_label,
        y_label,
        series,
        guides: Vec::new(),
    })
}

fn sweep_chart(rows: &[SweepRow], kind: PlotKind) -> Result<Chart, IoError> {
    let column = |name: &str, class, f: fn(&SweepRow) -> f64| Series {
        name: name.into(),
        class,
        points: rows.iter().map(|r| (r.velocity, f(r))).collect(),
    };
    match kind {
        PlotKind::SweepStrategy => Ok(Chart {
            title: "Step length and step width strategies".into(),
            x_label: "v [m/s]",
            y_label: "[m]",
            series: vec![
                column("d_SL", "strategy", |r| r.step_length),
                column("d_SW", "strategy", |r| r.step_width),
            ],
            guides: Vec::new(),
        }),
        PlotKind::SweepFroude => Ok(Chart {
            title: "Froude number".into(),
            x_label: "v [m/s]",
            y_label: "Fn",
            series: vec![
                column("fn_sqrt", "froude", |r| r.froude_sqrt),
                column("fn_squared", "froude", |r| r.froude_squared),
            ],
            guides: vec![
                Guide {
                    y: WALK_MIN,
                    label: "walk".into(),
                },
                Guide {
                    y: CANTER_MIN,
                    label: "gait/canter".into(),
                },
            ],
        }),
        other => Err(IoError::Usage(format!(
            "plot kind `{other}` needs a trajectory, not sweep data"
        ))),
    }
}

pub fn render_samples(samples: &[GaitSample], kind: PlotKind) -> Result<String, IoError> {
    if samples.is_empty() {
        return Err(IoError::Usage("cannot plot an empty trajectory".into()));
    }
    Ok(samples_chart(samples, kind)?.render().to_string())
}

pub fn render_sweep(rows: &[SweepRow], kind: PlotKind) -> Result<String, IoError> {
    if rows.is_empty() {
        return Err(IoError::Usage("cannot plot an empty sweep".into()));
    }
    Ok(sweep_chart(rows, kind)?.render().to_string())
}

fn write(path: &Path, text: String) -> Result<(), IoError> {
    std::fs::write(path, text + "\n").map_err(|e| IoError::file(path, e))
}

pub fn plot_samples(
    samples: &[GaitSample],
    kind: PlotKind,
    path: impl AsRef<Path>,
) -> Result<(), IoError> {
    write(path.as_ref(), render_samples(samples, kind)?)
}

pub fn plot_sweep(
    rows: &[SweepRow],
    kind: PlotKind,
    path: impl AsRef<Path>,
) -> Result<(), IoError> {
    write(path.as_ref(), render_sweep(rows, kind)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::analysis::sweep;
    use crate::gait_model::{MorphologyConfig, VelocityMode};
    use crate::trajectory::{Gait, PhaseConfig, SwingProfile};

    fn samples() -> Vec<GaitSample> {
        let cfg = MorphologyConfig::default();
        let pc = PhaseConfig::synchronized(&cfg).unwrap();
        Gait::new(&cfg, pc, 1.0, VelocityMode::Strict, SwingProfile::Sine)
            .unwrap()
            .generate(4, 0.01)
            .unwrap()
    }

    fn count(svg: &str, needle: &str) -> usize {
        svg.matches(needle).count()
    }

    #[test]
    fn transverse_plot_has_three_com_polylines() {
        let svg = render_samples(&samples(), PlotKind::Transverse).unwrap();
        assert_eq!(count(&svg, "<polyline"), 3);
        assert_eq!(count(&svg, "class=\"com\""), 3);
        for name in ["com_F", "com_H", "com_quad"] {
            assert!(svg.contains(&format!("data-series=\"{name}\"")));
        }
    }

    #[test]
    fn cor_plot_has_four_traces() {
        let svg = render_samples(&samples(), PlotKind::CorXVsT).unwrap();
        assert_eq!(count(&svg, "class=\"cor\""), 4);
        for name in ["FL", "FR", "HL", "HR"] {
            assert!(svg.contains(&format!("data-series=\"{name}\"")));
        }
    }

    #[test]
    fn sweep_plots() {
        let rows = sweep(&MorphologyConfig::default(), &[0.4, 0.8, 1.2, 1.6]).unwrap();
        let svg = render_sweep(&rows, PlotKind::SweepFroude).unwrap();
        assert_eq!(count(&svg, "class=\"froude\""), 2);
        assert_eq!(count(&svg, "class=\"guide\""), 2);
        let svg = render_sweep(&rows, PlotKind::SweepStrategy).unwrap();
        assert_eq!(count(&svg, "class=\"strategy\""), 2);
    }

    #[test]
    fn mismatched_and_empty_inputs_are_usage_errors() {
        assert!(matches!(
            render_samples(&[], PlotKind::Transverse),
            Err(IoError::Usage(_))
        ));
        assert!(matches!(
            render_samples(&samples(), PlotKind::SweepFroude),
            Err(IoError::Usage(_))
        ));
        assert!(matches!(
            render_sweep(&[], PlotKind::SweepFroude),
            Err(IoError::Usage(_))
        ));
        assert!(matches!(
            "spiral".parse::<PlotKind>(),
            Err(IoError::Usage(_))
        ));
        for kind in PlotKind::ALL {
            assert_eq!(kind.name().parse::<PlotKind>().unwrap(), kind);
        }
    }

    #[test]
    fn rendering_is_deterministic() {
        let s = samples();
        assert_eq!(
            render_samples(&s, PlotKind::Sagittal).unwrap(),
            render_samples(&s, PlotKind::Sagittal).unwrap()
        );
    }
}
