//! Command-line driver. `run` returns the process exit code.

use super::json::*;
use super::{read_off, write_off};
use crate::construct::{conway_chain, generate_monostable, ChainSpec, ConstructError, GeneratorMode, GeneratorParams};
use crate::dynamics::{monostable_oracle, roll_trace};
use crate::equilibria::classify_equilibria;
use crate::geom_core::{mass_properties, ConvexPolyhedron, Vec3};
use crate::metrics::metrics_report;
use clap::{Parser, Subcommand};
use std::path::{Path, PathBuf};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FALSE: i32 = 1;
pub const EXIT_DEGENERATE: i32 = 2;
pub const EXIT_GENERATION_FAILED: i32 = 3;
pub const EXIT_USAGE: i32 = 64;
pub const EXIT_IO: i32 = 66;

/// Caps worker threads; 0 or unset means one per core.
pub const THREADS_ENV: &str = "EQUILIB_THREADS";

#[derive(Parser, Debug)]
#[command(name = "equilib", version, about = "Equilibria of convex polyhedra and monostable generators")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Classify equilibria, mass properties and metrics of an OFF mesh.
    Analyze {
        mesh: PathBuf,
        /// Reference point `x,y,z`; defaults to the centroid.
        #[arg(long = "ref", value_parser = parse_point, allow_hyphen_values = true)]
        reference: Option<Vec3>,
        /// Include a roll trace from every face.
        #[arg(long)]
        roll: bool,
        /// Rotation order for the symmetry residual about z.
        #[arg(long, default_value_t = 2)]
        order: usize,
    },
    /// Generate a monostable polyhedron with an n-fold axis.
    Generate {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        eps: f64,
        #[arg(long, default_value = "axis_apex")]
        mode: GeneratorMode,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Meridian rings of the first attempt.
        #[arg(long)]
        k: Option<usize>,
        /// Columns per sector of the first attempt.
        #[arg(long)]
        s: Option<usize>,
        #[arg(long, default_value_t = 16)]
        max_attempts: usize,
        #[arg(long)]
        out: PathBuf,
    },
    /// Diameter, girth, Hausdorff distance and symmetry residual.
    Metrics {
        mesh: PathBuf,
        #[arg(long, default_value_t = 2)]
        order: usize,
    },
    /// Obtuse chain from (1, 0) to radius `target` at angle `beta`.
    Chain {
        #[arg(long, allow_hyphen_values = true)]
        beta: f64,
        #[arg(long)]
        target: f64,
        #[arg(long, default_value_t = 16)]
        k: usize,
    },
    /// Exit 0 iff the mesh is monostable about its centroid.
    VerifyMonostable { mesh: PathBuf },
}

fn parse_point(s: &str) -> Result<Vec3, String> {
    let parts: Vec<&str> = s.split(',').collect();
    if parts.len() != 3 {
        return Err("expected x,y,z".into());
    }
    let mut v = [0.0; 3];
    for (i, p) in parts.iter().enumerate() {
        v[i] = p.trim().parse::<f64>().map_err(|e| format!("{p:?}: {e}"))?;
    }
    Ok(Vec3::new(v[0], v[1], v[2]))
}

/// Applies [`THREADS_ENV`] to the global rayon pool.
pub fn configure_threads() -> Result<(), String> {
    let Ok(raw) = std::env::var(THREADS_ENV) else { return Ok(()) };
    let n: usize = raw.trim().parse().map_err(|_| format!("{THREADS_ENV}={raw:?} is not a non-negative integer"))?;
    if n > 0 {
        // a pool may already exist when called twice in one process
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
    }
    Ok(())
}

fn describe(path: &Path, p: &ConvexPolyhedron) -> InputDescriptor {
    InputDescriptor {
        path: path.display().to_string(),
        vertices: p.num_vertices(),
        edges: p.num_edges(),
        faces: p.num_faces(),
    }
}

fn load(path: &Path) -> Result<ConvexPolyhedron, i32> {
    read_off(path).map_err(|e| {
        eprintln!("equilib: {e}");
        EXIT_IO
    })
}

/// Parses `args` (program name first) and runs the command, writing
/// documents to `out`.
pub fn run<I, T>(args: I, out: &mut dyn std::io::Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let _ = e.print();
            return code;
        }
    };
    if let Err(msg) = configure_threads() {
        eprintln!("equilib: {msg}");
        return EXIT_USAGE;
    }
    match dispatch(cli.command, out) {
        Ok(code) => code,
        Err(code) => code,
    }
}

fn emit(out: &mut dyn std::io::Write, text: &str) -> Result<(), i32> {
    writeln!(out, "{text}").map_err(|e| {
        eprintln!("equilib: {e}");
        EXIT_IO
    })
}

fn dispatch(cmd: Command, out: &mut dyn std::io::Write) -> Result<i32, i32> {
    match cmd {
        Command::Analyze { mesh, reference, roll, order } => {
            let p = load(&mesh)?;
            let mass = mass_properties(&p);
            let c = reference.unwrap_or(mass.centroid);
            let report = classify_equilibria(&p, &c).map_err(|e| {
                eprintln!("equilib: {e}");
                EXIT_USAGE
            })?;
            let metrics = metrics_report(&p, order.max(2), &Vec3::z());
            let traces = if roll {
                let mut v = Vec::new();
                for f in 0..p.num_faces() {
                    match roll_trace(&p, &c, f) {
                        Ok(t) => v.push(TraceDoc::from(&t)),
                        Err(e) => {
                            eprintln!("equilib: roll from face {f}: {e}");
                        }
                    }
                }
                Some(v)
            } else {
                None
            };
            let doc = AnalysisDocument {
                schema_version: SCHEMA_VERSION,
                tool: ToolInfo::current(),
                input: describe(&mesh, &p),
                parameters: AnalyzeParams {
                    reference: reference.map(|r| [F17(r.x), F17(r.y), F17(r.z)]),
                    roll,
                    symmetry_order: order.max(2),
                },
                mass: MassDoc::from(&mass),
                equilibria: ReportDoc::new(&report, &c),
                metrics: MetricsDoc::from(&metrics),
                roll_traces: traces,
            };
            emit(out, &doc.to_json())?;
            Ok(if report.any_degenerate { EXIT_DEGENERATE } else { EXIT_OK })
        }
        Command::Generate { n, eps, mode, seed, k, s, max_attempts, out: path } => {
            let mut params = GeneratorParams::new(n, eps).with_mode(mode);
            params.seed = seed;
            params.max_attempts = max_attempts;
            if let Some(k) = k {
                params.k = k;
            }
            if let Some(s) = s {
                params.s = s;
            }
            let pdoc = GenerateParamsDoc { n, eps: F17(eps), mode: mode.name().into(), seed };
            match generate_monostable(&params) {
                Ok(r) => {
                    write_off(&r.polyhedron, &path).map_err(|e| {
                        eprintln!("equilib: {e}");
                        EXIT_IO
                    })?;
                    let c = mass_properties(&r.polyhedron).centroid;
                    let doc = GenerationDocument::success(pdoc, &r, &path.display().to_string(), &c);
                    emit(out, &serde_json::to_string_pretty(&doc).expect("serializes"))?;
                    Ok(EXIT_OK)
                }
                Err(ConstructError::InvalidParams(msg)) => {
                    eprintln!("equilib: {msg}");
                    Ok(EXIT_USAGE)
                }
                Err(ConstructError::GenerationFailed { log, .. }) => {
                    let doc = GenerationDocument {
                        schema_version: SCHEMA_VERSION,
                        tool: ToolInfo::current(),
                        parameters: pdoc,
                        success: false,
                        output: None,
                        equilibria: None,
                        hausdorff: None,
                        symmetry_residual: None,
                        attempts: log.iter().map(AttemptDoc::from).collect(),
                    };
                    emit(out, &serde_json::to_string_pretty(&doc).expect("serializes"))?;
                    Ok(EXIT_GENERATION_FAILED)
                }
                Err(e) => {
                    eprintln!("equilib: {e}");
                    Ok(EXIT_GENERATION_FAILED)
                }
            }
        }
        Command::Metrics { mesh, order } => {
            let p = load(&mesh)?;
            let m = metrics_report(&p, order.max(2), &Vec3::z());
            let doc = MetricsDocument {
                schema_version: SCHEMA_VERSION,
                tool: ToolInfo::current(),
                input: describe(&mesh, &p),
                metrics: MetricsDoc::from(&m),
            };
            emit(out, &serde_json::to_string_pretty(&doc).expect("serializes"))?;
            Ok(EXIT_OK)
        }
        Command::Chain { beta, target, k } => {
            let spec = ChainSpec { beta, target_radius: target, k };
            match conway_chain(&spec) {
                Ok(pts) => {
                    let doc = ChainDocument {
                        schema_version: SCHEMA_VERSION,
                        beta: F17(beta),
                        target: F17(target),
                        k,
                        points: pts.iter().map(|p| [F17(p.x), F17(p.y)]).collect(),
                        radii: pts.iter().map(|p| F17(p.norm())).collect(),
                    };
                    emit(out, &serde_json::to_string_pretty(&doc).expect("serializes"))?;
                    Ok(EXIT_OK)
                }
                Err(e) => {
                    eprintln!("equilib: {e}");
                    Ok(EXIT_USAGE)
                }
            }
        }
        Command::VerifyMonostable { mesh } => {
            let p = load(&mesh)?;
            let c = mass_properties(&p).centroid;
            let report = classify_equilibria(&p, &c).map_err(|e| {
                eprintln!("equilib: {e}");
                EXIT_USAGE
            })?;
            let verdict = match monostable_oracle(&p) {
                Ok(v) => v,
                Err(e) => {
                    eprintln!("equilib: {e}");
                    return Ok(EXIT_DEGENERATE);
                }
            };
            let doc = VerdictDocument {
                schema_version: SCHEMA_VERSION,
                tool: ToolInfo::current(),
                input: describe(&mesh, &p),
                monostable: verdict,
                stable_faces: report.stable_faces(),
                stable: report.s,
                saddle: report.h,
                unstable: report.u,
            };
            emit(out, &serde_json::to_string_pretty(&doc).expect("serializes"))?;
            Ok(if verdict { EXIT_OK } else { EXIT_FALSE })
        }
    }
}

