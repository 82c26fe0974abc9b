//! `halving`: compute, construct, audit and render underlying geographs.
//!
//! Exit status is 0 on success, 1 when `audit` finds a failing check and 2
//! for input or usage errors.

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use halving_core::format::{parse_points, to_dot, to_svg, write_points, GeographDocument};
use halving_core::{
    audit, chain_decomposition, components, cross, generate, halving_edges, Error, GeneratorSpec, OrientedGeograph,
    PointConfig, Shape,
};

#[derive(Parser)]
#[command(name = "halving", version, about = "Exact halving lines of planar point sets")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the halving edges of a point file
    Compute {
        points: PathBuf,
        #[arg(long, value_enum, default_value_t = OutputFormat::Edges)]
        format: OutputFormat,
    },
    /// Print the connected components, one per line
    Components { points: PathBuf },
    /// Print the direction, halves, degrees and chains
    Chains { points: PathBuf },
    /// Build the cross of two configurations
    Cross {
        a: PathBuf,
        b: PathBuf,
        /// Output point file
        #[arg(short, long)]
        output: PathBuf,
        /// Output document (default: the output path with `.json` appended)
        #[arg(long)]
        doc: Option<PathBuf>,
    },
    /// Generate a configuration
    Gen {
        #[arg(long, value_enum)]
        shape: ShapeArg,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = halving_core::construct::DEFAULT_BOUND)]
        bound: i64,
        #[arg(short, long)]
        output: PathBuf,
    },
    /// Run every structural check
    Audit {
        points: PathBuf,
        /// Emit the report as JSON
        #[arg(long)]
        json: bool,
    },
    /// Write an SVG drawing
    Render {
        points: PathBuf,
        #[arg(short, long)]
        output: PathBuf,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum OutputFormat {
    Edges,
    Doc,
    Dot,
}

#[derive(Clone, Copy, ValueEnum)]
enum ShapeArg {
    Convex,
    Star,
    Random,
}

/// An input or usage problem; rendered as one diagnostic line.
struct Failure(String);

fn fail_at(path: &Path, line: Option<usize>, msg: impl std::fmt::Display) -> Failure {
    match line {
        Some(l) => Failure(format!("{}:{l}: {msg}", path.display())),
        None => Failure(format!("{}: {msg}", path.display())),
    }
}

fn load(path: &Path) -> Result<PointConfig, Failure> {
    let text = fs::read_to_string(path).map_err(|e| fail_at(path, None, e))?;
    let file = parse_points(&text).map_err(|e| match e {
        halving_core::format::ParseError::Syntax { line, message } => fail_at(path, Some(line), message),
        halving_core::format::ParseError::Duplicate { line, first_line } => fail_at(
            path,
            Some(line),
            format!("points must be distinct; this point repeats line {first_line}"),
        ),
    })?;
    let lines = file.lines.clone();
    file.into_config().map_err(|e| match e {
        Error::CollinearTriple { indices } => fail_at(
            path,
            Some(lines[indices[0]]),
            format!(
                "points on lines {}, {}, {} are collinear; no three points may be collinear",
                lines[indices[0]], lines[indices[1]], lines[indices[2]]
            ),
        ),
        Error::DuplicatePoints { first, second } => fail_at(
            path,
            Some(lines[second]),
            format!("points must be distinct; this point repeats line {}", lines[first]),
        ),
        Error::OddSize { n } => fail_at(path, None, format!("{n} points; the point count must be even")),
        Error::TooFewPoints { n } => fail_at(path, None, format!("{n} points; at least 2 are required")),
        other => fail_at(path, None, other),
    })
}

fn write(path: &Path, contents: &str) -> Result<(), Failure> {
    fs::write(path, contents).map_err(|e| fail_at(path, None, e))
}

fn join(vs: &[usize]) -> String {
    vs.iter().map(usize::to_string).collect::<Vec<_>>().join(" ")
}

fn run(cli: Cli) -> Result<ExitCode, Failure> {
    let mut out = String::new();
    let mut status = ExitCode::SUCCESS;
    match cli.command {
        Command::Compute { points, format } => {
            let g = halving_edges(&load(&points)?);
            match format {
                OutputFormat::Edges => {
                    for (a, b) in g.edges() {
                        let _ = writeln!(out, "{a} {b}");
                    }
                }
                OutputFormat::Doc => out = GeographDocument::from_geograph(&g).to_json(),
                OutputFormat::Dot => out = to_dot(&g),
            }
        }
        Command::Components { points } => {
            let g = halving_edges(&load(&points)?);
            for class in components(&g).classes() {
                let _ = writeln!(out, "{}", join(class));
            }
        }
        Command::Chains { points } => {
            let og = OrientedGeograph::with_default_direction(halving_edges(&load(&points)?));
            let (left, right) = og.halves();
            let _ = writeln!(out, "direction: (1, {})", og.direction().t());
            let _ = writeln!(out, "left half: {}", join(&left));
            let _ = writeln!(out, "right half: {}", join(&right));
            out.push_str("degrees (vertex: left right):\n");
            for &v in og.order() {
                let _ = writeln!(
                    out,
                    "  {v}: {} {}",
                    og.left_degree(v).expect("in range"),
                    og.right_degree(v).expect("in range")
                );
            }
            let dec = chain_decomposition(&og).map_err(|e| Failure(e.to_string()))?;
            out.push_str("chains:\n");
            for chain in dec.chains() {
                let _ = writeln!(out, "  {}", join(chain.vertices()));
            }
        }
        Command::Cross { a, b, output, doc } => {
            let (ca, cb) = (load(&a)?, load(&b)?);
            let r = cross(&ca, &cb).map_err(|e| Failure(format!("cross failed: {e}")))?;
            let doc_path = doc.unwrap_or_else(|| {
                let mut p = output.clone().into_os_string();
                p.push(".json");
                PathBuf::from(p)
            });
            write(&output, &write_points(r.config.points()))?;
            write(&doc_path, &GeographDocument::from_geograph(&r.geograph).to_json())?;
            let _ = writeln!(out, "attempts: {}", r.attempts);
            let _ = writeln!(out, "points: {}", r.config.len());
            let _ = writeln!(out, "halving lines: {}", r.geograph.edges().len());
        }
        Command::Gen {
            shape,
            n,
            seed,
            bound,
            output,
        } => {
            let shape = match shape {
                ShapeArg::Convex => Shape::Convex,
                ShapeArg::Star => Shape::Star,
                ShapeArg::Random => Shape::Random,
            };
            let spec = GeneratorSpec { shape, n, seed, bound };
            let c = generate(&spec).map_err(|e| Failure(e.to_string()))?;
            write(&output, &write_points(c.points()))?;
        }
        Command::Audit { points, json } => {
            let report = audit(&load(&points)?);
            out = if json { report.to_json() } else { report.to_text() };
            if !report.passed() {
                status = ExitCode::from(1);
            }
        }
        Command::Render { points, output } => {
            let g = halving_edges(&load(&points)?);
            write(&output, &to_svg(&g))?;
        }
    }
    print!("{out}");
    Ok(status)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(Failure(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
