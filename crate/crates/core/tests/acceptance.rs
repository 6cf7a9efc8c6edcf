//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! non-zero if any criterion fails.

mod common;

use std::f64::consts::PI;
use std::process::{Command, ExitCode};
use std::time::Instant;

use proptest::strategy::{Strategy, ValueTree};
use proptest::test_runner::TestRunner;
use quadgait::analysis::{band_transitions, sweep, velocity_grid, GaitBand};
use quadgait::cli_io::read_samples;
use quadgait::gait_model::{
    froude, speed_range, step_length, step_width, stride_parameters, FroudeConvention,
    MorphologyConfig, VelocityMode,
};
use quadgait::trajectory::{stance_index, Biped, Gait, PhaseConfig, SwingProfile};

use common::{admissible_morphology, rel_diff};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(ok: bool, detail: String) -> Outcome {
    if ok {
        Ok(detail)
    } else {
        Err(detail)
    }
}

fn default_gait(v: f64) -> Gait {
    let cfg = MorphologyConfig::default();
    let pc = PhaseConfig::new(0.0, PI / 2.0, cfg.spine_length).unwrap();
    Gait::new(&cfg, pc, v, VelocityMode::Strict, SwingProfile::Sine).unwrap()
}

#[allow(clippy::approx_constant)]
fn speed_range_reproduced() -> Outcome {
    let r = speed_range(&MorphologyConfig::default()).map_err(|e| e.to_string())?;
    ensure(
        (r.min - 0.318).abs() <= 0.005 && (r.max - 1.712).abs() <= 0.01,
        format!("range = ({:.6}, {:.6}) m/s", r.min, r.max),
    )
}

fn froude_endpoints() -> Outcome {
    let cfg = MorphologyConfig::default();
    let r = speed_range(&cfg).map_err(|e| e.to_string())?;
    let lo = froude(r.min, &cfg, FroudeConvention::Sqrt);
    let hi = froude(r.max, &cfg, FroudeConvention::Sqrt);
    ensure(
        (lo - 0.16).abs() <= 0.01 && (hi - 0.86).abs() <= 0.01,
        format!("Fn(v_min) = {lo:.5}, Fn(v_max) = {hi:.5}"),
    )
}

fn walk_transition() -> Outcome {
    let cfg = MorphologyConfig::default();
    let r = speed_range(&cfg).map_err(|e| e.to_string())?;
    let grid = velocity_grid(r.min, r.max, 500).map_err(|e| e.to_string())?;
    let rows = sweep(&cfg, &grid).map_err(|e| e.to_string())?;
    let crossing = band_transitions(&rows, FroudeConvention::Sqrt)
        .into_iter()
        .find(|t| t.from == GaitBand::Walk && t.to == GaitBand::GaitCanter)
        .ok_or("no walk -> gait/canter transition in the sweep")?;
    ensure(
        (crossing.velocity - 0.80).abs() <= 0.02,
        format!("Fn crosses 0.40 at v = {:.5} m/s", crossing.velocity),
    )
}

fn strategy_endpoints() -> Outcome {
    let cfg = MorphologyConfig::default();
    let v_max = speed_range(&cfg).map_err(|e| e.to_string())?.max;
    let e = |r: quadgait::Result<f64>| r.map_err(|e| e.to_string());
    let sl0 = e(step_length(0.0, &cfg))?;
    let sl_top = e(step_length(0.8 * v_max, &cfg))?;
    let sw0 = e(step_width(0.0, &cfg))?;
    let sw_fast = e(step_width(100.0, &cfg))?;
    ensure(
        sl0 == 0.10
            && sl_top == 0.35
            && sw0 == 1.2 * cfg.hip_width
            && sw_fast == cfg.hip_width / 2.0,
        format!(
            "d_SL(0) = {sl0}, d_SL(0.8 v_max) = {sl_top}, d_SW(0) = {sw0}, d_SW(100) = {sw_fast}"
        ),
    )
}

fn quad_com_is_midpoint() -> Outcome {
    let samples = default_gait(1.0)
        .generate(10, 0.001)
        .map_err(|e| e.to_string())?;
    let mut worst = 0.0f64;
    for s in &samples {
        let mid = [
            (s.com_fore.x + s.com_hind.x) / 2.0,
            (s.com_fore.y + s.com_hind.y) / 2.0,
            (s.com_fore.z + s.com_hind.z) / 2.0,
        ];
        for (k, m) in mid.iter().enumerate() {
            worst = worst.max((s.com_quad[k] - m).abs());
        }
    }
    ensure(
        worst == 0.0,
        format!("{} samples, max deviation = {worst:e}", samples.len()),
    )
}

fn kinematic_properties() -> Outcome {
    const MORPHOLOGIES: usize = 100;
    const INSTANTS: usize = 100;
    let start = Instant::now();
    let mut runner = TestRunner::deterministic();
    let unit = 0.0..=1.0f64;
    let draw = |runner: &mut TestRunner| unit.clone().new_tree(runner).unwrap().current();
    let mut failures = Vec::new();
    let mut checked = 0usize;

    for _ in 0..MORPHOLOGIES {
        let cfg = admissible_morphology(std::array::from_fn(|_| draw(&mut runner)));
        let r = speed_range(&cfg).map_err(|e| e.to_string())?;
        let v = r.min + draw(&mut runner) * (r.max - r.min);
        let (phi_f, phi_h) = (2.0 * PI * draw(&mut runner), 2.0 * PI * draw(&mut runner));
        let pc = PhaseConfig::new(phi_f, phi_h, cfg.spine_length).map_err(|e| e.to_string())?;
        let g = Gait::new(&cfg, pc, v, VelocityMode::Strict, SwingProfile::Sine)
            .map_err(|e| format!("v={v}: {e}"))?;
        let sp = *g.stride();
        let half = sp.step_width / 2.0;
        let bound = half - sp.lateral_amplitude;

        for _ in 0..INSTANTS {
            let t = 10.0 * sp.step_period() * draw(&mut runner);
            let s = g.sample(t).map_err(|e| format!("v={v} t={t}: {e}"))?;
            checked += 1;
            let mut fail = |what: &str| failures.push(format!("{what} (v={v:.4}, t={t:.4})"));

            for biped in Biped::BOTH {
                let com = s.com(biped);
                if com.z > sp.max_height + 1e-12
                    || com.z < sp.max_height - 2.0 * sp.vertical_amplitude - 1e-12
                {
                    fail("height band");
                }
                let foot = s.support_foot(biped);
                let cor = s.foot(foot);
                if (cor - com).norm() > cfg.max_leg_extension + 1e-9 {
                    fail("leg reach");
                }
                if !(bound > 0.0 && (com.y - cor.y).abs() >= bound - 1e-12) {
                    fail("swing denominator");
                }
                // The same support interval sampled at mid-stance.
                let phase = g.phases().phase(biped);
                let n = stance_index(t, sp.cadence, phase);
                let mid = (n as f64 - phase / PI) / sp.cadence;
                let other = g.sample(mid).map_err(|e| e.to_string())?;
                if other.support_foot(biped) != foot || other.foot(foot) != cor {
                    fail("support stationarity");
                }
            }
            for (i, p) in s.feet.iter().enumerate() {
                let sign = if i % 2 == 0 { 1.0 } else { -1.0 };
                if p.y != sign * half {
                    fail("lateral pinning");
                }
            }
        }
    }
    let elapsed = start.elapsed().as_secs_f64();
    let summary = format!(
        "{checked} instants over {MORPHOLOGIES} morphologies in {elapsed:.2} s, {} violations",
        failures.len()
    );
    if let Some(first) = failures.first() {
        return Err(format!("{summary}; first: {first}"));
    }
    ensure(checked >= 10_000 && elapsed < 10.0, summary)
}

fn periodicity() -> Outcome {
    let g = default_gait(1.0);
    let period = g.stride().step_period();
    let mut worst_y = 0.0f64;
    let mut worst_z = 0.0f64;
    for k in 0..=1000 {
        let t = 2.0 * period * k as f64 / 1000.0;
        for biped in Biped::BOTH {
            let a = g.com(t, biped);
            worst_y = worst_y.max((g.com(t + 2.0 * period, biped).y - a.y).abs());
            worst_z = worst_z.max((g.com(t + period, biped).z - a.z).abs());
        }
    }
    ensure(
        worst_y < 1e-9 && worst_z < 1e-9,
        format!("max |dy| = {worst_y:e}, max |dz| = {worst_z:e}"),
    )
}

fn sweep_matches_oracle() -> Outcome {
    let cfg = MorphologyConfig::default();
    let r = speed_range(&cfg).map_err(|e| e.to_string())?;
    let grid = velocity_grid(r.min, r.max, 200).map_err(|e| e.to_string())?;
    let rows = sweep(&cfg, &grid).map_err(|e| e.to_string())?;
    let mut worst = 0.0f64;
    for row in &rows {
        let sp = stride_parameters(row.velocity, &cfg).map_err(|e| e.to_string())?;
        for (a, b) in [
            (row.step_length, sp.step_length),
            (row.step_width, sp.step_width),
            (row.cadence, sp.cadence),
            (row.lateral_amplitude, sp.lateral_amplitude),
            (row.vertical_amplitude, sp.vertical_amplitude),
            (row.max_height, sp.max_height),
        ] {
            worst = worst.max(rel_diff(a, b));
        }
    }
    ensure(
        worst <= 1e-12 && rows.iter().all(|r| r.feasible),
        format!("{} rows, max relative difference = {worst:e}", rows.len()),
    )
}

fn cli_end_to_end() -> Outcome {
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let out = Command::new(env!("CARGO_BIN_EXE_quadgait"))
        .args([
            "gen",
            "--velocity",
            "1.0",
            "--steps",
            "4",
            "--plot",
            "transverse",
        ])
        .arg("--out")
        .arg(dir.path())
        .output()
        .map_err(|e| e.to_string())?;
    if !out.status.success() {
        return Err(format!(
            "exit {:?}: {}",
            out.status.code(),
            String::from_utf8_lossy(&out.stderr)
        ));
    }
    let samples = read_samples(dir.path().join("samples.csv")).map_err(|e| e.to_string())?;
    let (first, last) = (samples.first().ok_or("empty CSV")?, samples.last().unwrap());
    let span = last.com_quad.x - first.com_quad.x;
    let svg =
        std::fs::read_to_string(dir.path().join("transverse.svg")).map_err(|e| e.to_string())?;
    let com_lines = svg
        .split("<polyline")
        .skip(1)
        .filter(|el| el.split('>').next().unwrap_or("").contains("class=\"com\""))
        .count();
    ensure(
        (span - 1.130).abs() <= 0.001 && com_lines == 3,
        format!("quad CoM x span = {span:.9} m, CoM polylines = {com_lines}"),
    )
}

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        ("speed range", speed_range_reproduced),
        ("Froude endpoints", froude_endpoints),
        ("walk to gait/canter transition", walk_transition),
        ("strategy endpoints", strategy_endpoints),
        ("quadruped CoM is the biped midpoint", quad_com_is_midpoint),
        ("kinematic properties", kinematic_properties),
        ("periodicity", periodicity),
        ("sweep matches stride parameters", sweep_matches_oracle),
        ("CLI end to end", cli_end_to_end),
    ];
    let mut failed = 0;
    for (i, (name, criterion)) in criteria.iter().enumerate() {
        match criterion() {
            Ok(detail) => println!("PASS {}. {name}: {detail}", i + 1),
            Err(detail) => {
                failed += 1;
                println!("FAIL {}. {name}: {detail}", i + 1);
            }
        }
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
