//! Command-line front end. Exit codes: 0 ok, 1 verification failure,
//! 2 usage/parse error, 3 domain error.

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::error::Error;
use crate::g12::{direct_boost_rotor, parallel_rotor, psi, rotor_sqrt, MinkowskiVector};
use crate::g2::{G2, Vector2};
use crate::kinematics::{
    apply_passive_boost, compose_frames, passive_boost_factor, Velocity,
};
use crate::matrix_rep::matrix_of;
use crate::transforms::{active_boost, classify_unit_minus_one, OrientedFrame, UnitVector2};
use crate::verify::run_suite;

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_DOMAIN: i32 = 3;

/// Tolerance used for report-level consistency checks; overridable with the
/// `GA_TOLERANCE` environment variable.
pub fn tolerance() -> f64 {
    std::env::var("GA_TOLERANCE")
        .ok()
        .and_then(|v| v.parse().ok())
        .unwrap_or(1e-10)
}

#[derive(Debug, Parser)]
#[command(name = "movingplanes", version, about = "Geometric algebra of moving planes")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Debug, Args)]
pub struct FramePair {
    /// Hyperbolic angle of the first frame.
    #[arg(long, allow_hyphen_values = true)]
    pub phi: Option<f64>,
    /// Direction angle (radians) of the first frame's boost axis.
    #[arg(long, default_value = "0", allow_hyphen_values = true)]
    pub a_angle: f64,
    /// Hyperbolic angle of the second frame.
    #[arg(long, allow_hyphen_values = true)]
    pub rho: Option<f64>,
    /// Direction angle (radians) of the second frame's boost axis.
    #[arg(long, default_value = "0", allow_hyphen_values = true)]
    pub b_angle: f64,
    /// First frame velocity as `vx,vy` (alternative to --phi/--a-angle).
    #[arg(long, conflicts_with = "phi")]
    pub uv: Option<String>,
    /// Second frame velocity as `vx,vy` (alternative to --rho/--b-angle).
    #[arg(long, conflicts_with = "rho")]
    pub uw: Option<String>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Compose two moving frames: the plane-algebra route and the spacetime
    /// route, with their discrepancy.
    Compose {
        #[command(flatten)]
        frames: FramePair,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Boost a multivector, actively (two-sided with inverse) or passively
    /// (same-side exponentials).
    Boost {
        /// Target multivector, e.g. "1 + 2e1 - e12".
        #[arg(long)]
        target: String,
        /// Direction angle (radians) of the boost axis.
        #[arg(long, default_value = "0", allow_hyphen_values = true)]
        dir_angle: f64,
        /// Hyperbolic angle of the boost.
        #[arg(long, allow_hyphen_values = true)]
        phi: f64,
        #[arg(long, conflicts_with = "passive")]
        active: bool,
        #[arg(long)]
        passive: bool,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Classify a zero-scalar multivector; if it squares to -1, also report
    /// its oriented-frame decomposition.
    Classify {
        mv: String,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Spectral-basis 2x2 matrix of a plane multivector.
    Matrix {
        mv: String,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Duality map: unit relative bivector to unit timelike spacetime vector.
    Dual {
        mv: String,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Run a randomized invariant suite with deterministic seeding.
    Verify {
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long, default_value = "42")]
        seed: u64,
        #[arg(long, default_value = "1000")]
        count: usize,
    },
    /// Parameter sweep over frame pairs, CSV output.
    Sweep {
        /// Range `start:end` for the first hyperbolic angle.
        #[arg(long, default_value = "0:1")]
        phi_range: String,
        /// Range `start:end` for the second hyperbolic angle.
        #[arg(long, default_value = "0:1")]
        rho_range: String,
        /// Range `start:end` for the angle between the two boost axes.
        #[arg(long, default_value = "0:0")]
        theta_range: String,
        /// Number of samples per axis.
        #[arg(long, default_value = "5")]
        steps: usize,
    },
}

fn parse_velocity_pair(text: &str) -> Result<Velocity, String> {
    let parts: Vec<&str> = text.split(',').collect();
    if parts.len() != 2 {
        return Err(format!("expected `vx,vy`, got `{text}`"));
    }
    let vx: f64 = parts[0].trim().parse().map_err(|_| format!("bad number `{}`", parts[0]))?;
    let vy: f64 = parts[1].trim().parse().map_err(|_| format!("bad number `{}`", parts[1]))?;
    Velocity::new(Vector2::new(vx, vy)).map_err(|e| e.to_string())
}

impl FramePair {
    fn frames(&self) -> Result<(OrientedFrame, OrientedFrame), (i32, String)> {
        let j = match (&self.uv, self.phi) {
            (Some(raw), _) => match parse_velocity_pair(raw) {
                Ok(v) => v.frame(),
                Err(e) => return Err((EXIT_DOMAIN, e)),
            },
            (None, Some(phi)) => {
                OrientedFrame::positive(UnitVector2::from_angle(self.a_angle), phi)
            }
            (None, None) => return Err((EXIT_USAGE, "missing --phi or --uv".into())),
        };
        let k = match (&self.uw, self.rho) {
            (Some(raw), _) => match parse_velocity_pair(raw) {
                Ok(v) => v.frame(),
                Err(e) => return Err((EXIT_DOMAIN, e)),
            },
            (None, Some(rho)) => {
                OrientedFrame::positive(UnitVector2::from_angle(self.b_angle), rho)
            }
            (None, None) => return Err((EXIT_USAGE, "missing --rho or --uw".into())),
        };
        Ok((j, k))
    }
}

/// Runs a parsed command, returning the process exit code.
pub fn run(cli: Cli) -> i32 {
    match cli.command {
        Command::Compose { frames, format } => run_compose(frames, format),
        Command::Boost { target, dir_angle, phi, passive, format, .. } => {
            run_boost(&target, dir_angle, phi, passive, format)
        }
        Command::Classify { mv, format } => run_classify(&mv, format),
        Command::Matrix { mv, format } => run_matrix(&mv, format),
        Command::Dual { mv, format } => run_dual(&mv, format),
        Command::Verify { suite, seed, count } => run_verify(&suite, seed, count),
        Command::Sweep { phi_range, rho_range, theta_range, steps } => {
            run_sweep(&phi_range, &rho_range, &theta_range, steps)
        }
    }
}

fn run_compose(frames: FramePair, format: Format) -> i32 {
    let (j, k) = match frames.frames() {
        Ok(p) => p,
        Err((code, msg)) => {
            eprintln!("error: {msg}");
            return code;
        }
    };
    let r = compose_frames(j, k);

    // spacetime route through the duality map
    let u = MinkowskiVector::T;
    let v = crate::g12::psi_frame(j).expect("positively oriented frame");
    let w = crate::g12::psi_frame(k).expect("positively oriented frame");
    let (v_dot_w, vw12) = crate::g12::recompute_composition(u, v, w)
        .expect("future-oriented frames");
    let discrepancy = (v_dot_w - r.omega.cosh()).abs().max((vw12 - r.vw).max_abs());

    match format {
        Format::Text => {
            println!("omega = {}", r.omega);
            println!("c = {}", r.c_direction);
            println!("v_w = {}", r.vw);
            println!("v.w (spacetime) = {v_dot_w}");
            println!("v_w (spacetime) = {vw12}");
            println!("max discrepancy = {discrepancy:e}");
            if discrepancy > tolerance() {
                println!("WARNING: routes disagree beyond tolerance {:e}", tolerance());
            }
        }
        Format::Json => {
            let out = json!({
                "omega": r.omega,
                "c": r.c_direction,
                "vw": r.vw,
                "spacetime": { "v_dot_w": v_dot_w, "vw": vw12 },
                "discrepancy": discrepancy,
            });
            println!("{out}");
        }
        Format::Csv => {
            println!("omega,vw_e1,vw_e2,vw_e12,v_dot_w,discrepancy");
            println!(
                "{},{},{},{},{},{}",
                r.omega, r.vw.e1, r.vw.e2, r.vw.e12, v_dot_w, discrepancy
            );
        }
    }
    EXIT_OK
}

fn parse_mv(text: &str) -> Result<G2, i32> {
    // JSON object or the term syntax
    if text.trim_start().starts_with('{') {
        serde_json::from_str(text).map_err(|e| {
            eprintln!("error: bad JSON multivector: {e}");
            EXIT_USAGE
        })
    } else {
        text.parse().map_err(|e: Error| {
            eprintln!("error: {e}");
            EXIT_USAGE
        })
    }
}

fn emit_mv(g: G2, format: Format) {
    match format {
        Format::Text => println!("{g}"),
        Format::Json => println!("{}", serde_json::to_string(&g).unwrap()),
        Format::Csv => {
            println!("s,e1,e2,e12");
            println!("{},{},{},{}", g.s, g.e1, g.e2, g.e12);
        }
    }
}

fn run_boost(target: &str, dir_angle: f64, phi: f64, passive: bool, format: Format) -> i32 {
    let x = match parse_mv(target) {
        Ok(x) => x,
        Err(code) => return code,
    };
    let dir = UnitVector2::from_angle(dir_angle);
    let out = if passive {
        apply_passive_boost(x, dir, phi)
    } else {
        active_boost(x, dir, phi)
    };
    emit_mv(out, format);
    EXIT_OK
}

fn run_classify(mv: &str, format: Format) -> i32 {
    let g = match parse_mv(mv) {
        Ok(g) => g,
        Err(code) => return code,
    };
    let class = match g.classify_zero_scalar() {
        Ok(c) => c,
        Err(e) => {
            eprintln!("error: {e}");
            return EXIT_DOMAIN;
        }
    };
    let frame = classify_unit_minus_one(g).ok();
    match format {
        Format::Text => {
            println!("class = {class:?}");
            if let Some(f) = frame {
                println!(
                    "frame: orientation = {}, a = {}, phi = {}",
                    f.orientation,
                    G2::from(f.a.vector()),
                    f.phi
                );
            }
        }
        Format::Json | Format::Csv => {
            let out = json!({
                "class": format!("{class:?}"),
                "frame": frame.map(|f| json!({
                    "orientation": f.orientation,
                    "a": [f.a.vector().e1, f.a.vector().e2],
                    "phi": f.phi,
                })),
            });
            println!("{out}");
        }
    }
    EXIT_OK
}

fn run_matrix(mv: &str, format: Format) -> i32 {
    let g = match parse_mv(mv) {
        Ok(g) => g,
        Err(code) => return code,
    };
    let m = matrix_of(g);
    match format {
        Format::Text => {
            println!("[{} {}]", m.m11, m.m12);
            println!("[{} {}]", m.m21, m.m22);
        }
        Format::Json | Format::Csv => println!("{}", serde_json::to_string(&m).unwrap()),
    }
    EXIT_OK
}

fn run_dual(mv: &str, format: Format) -> i32 {
    let g = match parse_mv(mv) {
        Ok(g) => g,
        Err(code) => return code,
    };
    let r = match psi(g) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return EXIT_DOMAIN;
        }
    };
    match format {
        Format::Text => println!("{}", r.mv()),
        Format::Json | Format::Csv => println!("{}", serde_json::to_string(&r.mv()).unwrap()),
    }
    EXIT_OK
}

fn run_verify(suite: &str, seed: u64, count: usize) -> i32 {
    let reports = match run_suite(suite, seed, count) {
        Some(r) => r,
        None => {
            eprintln!(
                "error: unknown suite `{suite}` (expected one of {})",
                crate::verify::SUITES.join(", ")
            );
            return EXIT_USAGE;
        }
    };
    let mut ok = true;
    for report in &reports {
        for check in &report.checks {
            let status = if check.passed() { "pass" } else { "FAIL" };
            println!(
                "[{status}] {}/{}: max error {:e} (tolerance {:e})",
                report.suite, check.name, check.max_error, check.tolerance
            );
            if let Some(witness) = &check.counterexample {
                println!("        counterexample: {witness}");
            }
            ok &= check.passed();
        }
    }
    if ok {
        EXIT_OK
    } else {
        EXIT_VERIFY_FAIL
    }
}

fn parse_range(text: &str) -> Result<(f64, f64), String> {
    let parts: Vec<&str> = text.split(':').collect();
    if parts.len() != 2 {
        return Err(format!("expected `start:end`, got `{text}`"));
    }
    let a: f64 = parts[0].trim().parse().map_err(|_| format!("bad number `{}`", parts[0]))?;
    let b: f64 = parts[1].trim().parse().map_err(|_| format!("bad number `{}`", parts[1]))?;
    if b < a {
        return Err(format!("empty range `{text}`"));
    }
    Ok((a, b))
}

fn grid(range: (f64, f64), steps: usize) -> Vec<f64> {
    if steps == 1 {
        return vec![range.0];
    }
    (0..steps)
        .map(|k| range.0 + (range.1 - range.0) * k as f64 / (steps - 1) as f64)
        .collect()
}

fn run_sweep(phi_range: &str, rho_range: &str, theta_range: &str, steps: usize) -> i32 {
    if steps == 0 {
        eprintln!("error: --steps must be at least 1");
        return EXIT_USAGE;
    }
    let ranges: Result<Vec<(f64, f64)>, String> =
        [phi_range, rho_range, theta_range].iter().map(|r| parse_range(r)).collect();
    let ranges = match ranges {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return EXIT_USAGE;
        }
    };
    println!("phi,rho,theta_ab,omega,Omega,vw_norm,uvw_norm,active_passive_gap");
    let a = UnitVector2::from_angle(0.0);
    for &phi in &grid(ranges[0], steps) {
        for &rho in &grid(ranges[1], steps) {
            for &theta in &grid(ranges[2], steps) {
                let b = UnitVector2::from_angle(theta);
                let j = OrientedFrame::positive(a, phi);
                let k = OrientedFrame::positive(b, rho);
                let r = compose_frames(j, k);
                let vw_norm = r.omega.tanh();
                let uv = Velocity::new(j.velocity()).expect("tanh < 1");
                let uw = Velocity::new(k.velocity()).expect("tanh < 1");
                let (omega_passive, uvw_norm) = match passive_boost_factor(uv, uw) {
                    Ok(pb) => (pb.omega, pb.u_vw.norm()),
                    Err(_) => (0.0, 0.0),
                };
                let u = MinkowskiVector::T;
                let v = crate::g12::psi_frame(j).unwrap();
                let w = crate::g12::psi_frame(k).unwrap();
                let gap = match parallel_rotor(u, v, w) {
                    Ok(rp) => {
                        let direct = direct_boost_rotor(v, w).expect("future-oriented");
                        (rotor_sqrt(rp) - direct).max_abs()
                    }
                    Err(_) => 0.0,
                };
                println!(
                    "{phi},{rho},{theta},{},{omega_passive},{vw_norm},{uvw_norm},{gap}",
                    r.omega
                );
            }
        }
    }
    EXIT_OK
}
