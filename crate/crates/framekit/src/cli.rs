//! `framekit` subcommands.

use std::ffi::OsString;
use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use framekit_core::cutproject::{build_scheme, build_window, diffraction};
use framekit_core::frames::PARSEVAL_TOL;
use framekit_core::lattice::{generate_patch, Node};
use framekit_core::quantize::{iterate_trace, quantize};

use crate::catalog::{self, parse_name, FrameSource};
use crate::json::{pretty, quantization_json, read_frame, write_frame};
use crate::report::{analyze, embedding};
use crate::tables::{
    diffraction_csv, grid_points, lattice_csv, parse_grid, points_csv, read_observable,
    read_points, trace_csv,
};
use crate::{parallel, svg, Error, Result};

#[derive(Debug, Parser)]
#[command(
    name = "framekit",
    version,
    about = "Finite tight frames: analysis, quantization, lattices and quasicrystals"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Write a named frame as JSON.
    FrameBuild {
        #[arg(long)]
        name: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Frame bounds, Parseval residual and stochastic profile.
    FrameAnalyze {
        /// Frame name or JSON file.
        #[arg(long)]
        frame: String,
        /// Parseval tolerance on the Frobenius residual.
        #[arg(long, default_value_t = PARSEVAL_TOL)]
        tol: f64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Naimark projector, orthonormal system and complementary frame.
    FrameEmbed {
        #[arg(long)]
        frame: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Quantize an observable with a normalized Parseval frame.
    Quantize {
        #[arg(long)]
        frame: String,
        /// CSV of `index,value` rows or a JSON array.
        #[arg(long)]
        observable: PathBuf,
        /// Number of lower-symbol iterations written to --trace.
        #[arg(long, requires = "trace")]
        iterate: Option<usize>,
        #[arg(long, requires = "iterate")]
        trace: Option<PathBuf>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Patch of the honeycomb lattice or diamond structure around the origin.
    LatticeGen {
        #[arg(long, value_enum)]
        lattice: LatticeKind,
        #[arg(long)]
        radius: u32,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        svg: Option<PathBuf>,
        /// Half-width of the `|z|` slab plotted for 3-dim points.
        #[arg(long, default_value_t = 0.25)]
        slice: f64,
    },
    /// Cut-and-project point set with preimages in `[-B, B]^M`.
    QcGen {
        #[arg(long)]
        frame: String,
        #[arg(long)]
        radius: u32,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        svg: Option<PathBuf>,
        #[arg(long, default_value_t = 0.25)]
        slice: f64,
    },
    /// Normalized diffraction intensities of a point CSV on a q-grid.
    Diffract {
        #[arg(long)]
        points: PathBuf,
        /// `qmin:qmax:steps`, for every axis or comma-separated per axis.
        #[arg(long, allow_hyphen_values = true)]
        grid: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum LatticeKind {
    Honeycomb,
    Diamond,
}

/// Runs the command line and returns the process exit code.
pub fn main<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    match run(cli.command) {
        Ok(()) => 0,
        Err(e) => {
            eprintln!("framekit: {e}");
            e.exit_code()
        }
    }
}

pub fn run(command: Command) -> Result<()> {
    match command {
        Command::FrameBuild { name, out } => {
            let named = parse_name(&name)
                .ok_or_else(|| Error::Usage(format!("unknown frame name {name:?}")))?;
            emit(out.as_deref(), &write_frame(&catalog::build(named)?))
        }
        Command::FrameAnalyze { frame, tol, out } => {
            if !(tol.is_finite() && tol >= 0.0) {
                return Err(Error::Usage(format!(
                    "--tol must be a non-negative number, got {tol}"
                )));
            }
            emit(
                out.as_deref(),
                &pretty(&analyze(&resolve_frame(&frame)?, tol)?),
            )
        }
        Command::FrameEmbed { frame, out } => emit(
            out.as_deref(),
            &pretty(&embedding(&resolve_frame(&frame)?)?),
        ),
        Command::Quantize {
            frame,
            observable,
            iterate,
            trace,
            out,
        } => {
            let src = resolve_frame(&frame)?;
            let nf = src.require_normalized()?;
            let f = read_observable(&read(&observable)?)?;
            let result = quantize(nf, &f)?;
            if let (Some(k), Some(path)) = (iterate, trace) {
                emit(Some(&path), &trace_csv(&iterate_trace(nf, &f, k)?))?;
            }
            emit(
                out.as_deref(),
                &quantization_json(&result, src.frame.field()),
            )
        }
        Command::LatticeGen {
            lattice,
            radius,
            out,
            svg: svg_out,
            slice,
        } => {
            let (csv, coords) = match lattice {
                LatticeKind::Honeycomb => lattice_table::<3>(radius)?,
                LatticeKind::Diamond => lattice_table::<4>(radius)?,
            };
            if let Some(path) = svg_out {
                emit(Some(&path), &svg::scatter(&svg::slice(&coords, slice)))?;
            }
            emit(out.as_deref(), &csv)
        }
        Command::QcGen {
            frame,
            radius,
            out,
            svg: svg_out,
            slice,
        } => {
            let src = resolve_frame(&frame)?;
            let scheme = build_scheme(&src.frame)?;
            let window = build_window(&scheme)?;
            let threads = parallel::thread_count()?;
            let set = parallel::generate_quasicrystal(&scheme, &window, radius, threads)?;
            if !set.near_misses.is_empty() {
                eprintln!(
                    "framekit: {} rejected preimages lie within 1e-6 of the window boundary",
                    set.near_misses.len()
                );
            }
            if let Some(path) = svg_out {
                let physical: Vec<Vec<f64>> = set
                    .points
                    .iter()
                    .map(|p| p.point.physical.clone())
                    .collect();
                emit(Some(&path), &svg::scatter(&svg::slice(&physical, slice)))?;
            }
            emit(
                out.as_deref(),
                &points_csv(&set, scheme.superspace_dim(), scheme.physical_dim()),
            )
        }
        Command::Diffract { points, grid, out } => {
            let pts = read_points(fs::File::open(&points).map_err(|e| io_context(e, &points))?)?;
            let dim = pts.first().map_or(0, Vec::len);
            let q = grid_points(&parse_grid(&grid, dim)?);
            let intensity = diffraction(&pts, &q)?;
            emit(out.as_deref(), &diffraction_csv(&q, &intensity))
        }
    }
}

fn lattice_table<const D: usize>(radius: u32) -> Result<(String, Vec<Vec<f64>>)> {
    let nodes: Vec<Node<D>> = generate_patch(radius)?;
    let coords = nodes.iter().map(Node::embed).collect();
    Ok((lattice_csv(&nodes), coords))
}

/// A frame given by name or JSON path; a string that is both is rejected.
pub fn resolve_frame(arg: &str) -> Result<FrameSource> {
    let named = parse_name(arg);
    let is_file = Path::new(arg).is_file();
    match (named, is_file) {
        (Some(_), true) => Err(Error::Usage(format!(
            "{arg:?} is both a frame name and a file"
        ))),
        (Some(n), false) => catalog::build(n),
        (None, true) => read_frame(&read(Path::new(arg))?),
        (None, false) => Err(Error::Usage(format!(
            "{arg:?} is neither a frame name nor a file"
        ))),
    }
}

fn io_context(e: io::Error, path: &Path) -> Error {
    Error::Io(io::Error::new(e.kind(), format!("{}: {e}", path.display())))
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|e| io_context(e, path))
}

/// Writes `text` to `path`, or to stdout without one.
fn emit(path: Option<&Path>, text: &str) -> Result<()> {
    match path {
        Some(p) => fs::write(p, text).map_err(|e| io_context(e, p)),
        None => {
            let mut out = io::stdout().lock();
            out.write_all(text.as_bytes())?;
            out.flush()?;
            Ok(())
        }
    }
}
