//! Command-line front end: argument parsing, input/output plumbing and
//! exit codes. [`run`] does all the work and never touches the process
//! streams, so tests can drive it directly.
//!
//! Exit codes: 0 success, 1 malformed input (bad JSON, unknown keys, wrong
//! lengths, oversized values, bad arguments), 2 a well-formed input that is
//! mathematically invalid, 3 a failing `roundtrip` property.

pub mod roundtrip;
pub mod wire;

use std::io::Read;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use dynnikov::{
    coordinates_from_intersections, decompose, enumerate_small, intersections_from_coordinates, oracle_intersections,
    random_census, render_ascii, render_svg, validate_intersections, coordinates_from_decomposition, Decomposition,
    GeneratorConfig, TwistSign,
};
use serde::Serialize;

use wire::{parse, to_line, CensusJson, CoordinatesJson, IntersectionsJson};

pub const C_CONVENTION: &str =
    "c<0 means |c| parallel copies of the curve c; c>0 means c twisting components.";

/// Upper bounds on work requested from the command line.
pub const MAX_N: usize = 64;
pub const MAX_ENUMERATE_CAP: u64 = 3;
pub const MAX_RANDOM_COUNT: u64 = 1 << 20;
pub const MAX_TRIALS: usize = 1_000_000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CliError {
    Malformed(String),
    Invalid(String),
}

impl CliError {
    pub fn code(&self) -> i32 {
        match self {
            CliError::Malformed(_) => 1,
            CliError::Invalid(_) => 2,
        }
    }

    fn message(&self) -> &str {
        match self {
            CliError::Malformed(m) | CliError::Invalid(m) => m,
        }
    }
}

fn invalid(e: dynnikov::Error) -> CliError {
    CliError::Invalid(e.to_string())
}

/// Everything a run produced.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

#[derive(Debug, Parser)]
#[command(
    name = "dynnikov",
    version,
    about = "Dynnikov coordinates for laminations on a punctured torus with one boundary component",
    after_help = C_CONVENTION
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, clap::Args)]
struct Io {
    /// JSON input; read from --in or stdin when absent.
    input: Option<String>,
    /// Read the input from a file.
    #[arg(long = "in", value_name = "PATH", conflicts_with = "input")]
    in_path: Option<PathBuf>,
    /// Write the output to a file instead of stdout.
    #[arg(long = "out", value_name = "PATH")]
    out_path: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Format {
    Ascii,
    Svg,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Intersection vector -> coordinates.
    #[command(after_help = C_CONVENTION)]
    Encode {
        #[command(flatten)]
        io: Io,
        /// Twist direction (-1, 0, 1); must be nonzero exactly when there is twisting.
        #[arg(long, default_value_t = 0, allow_negative_numbers = true,
              value_parser = clap::value_parser!(i64).range(-1..=1))]
        sign: i64,
    },
    /// Coordinates -> intersection vector.
    #[command(after_help = C_CONVENTION)]
    Decode {
        #[command(flatten)]
        io: Io,
    },
    /// Check an intersection vector and report every violated condition.
    #[command(after_help = C_CONVENTION)]
    Validate {
        #[command(flatten)]
        io: Io,
    },
    /// Intersection vector -> census of components.
    #[command(after_help = C_CONVENTION)]
    Decompose {
        #[command(flatten)]
        io: Io,
        #[arg(long, default_value_t = 0, allow_negative_numbers = true,
              value_parser = clap::value_parser!(i64).range(-1..=1))]
        sign: i64,
    },
    /// Draw a census, or the census of a coordinate vector.
    Render {
        #[command(flatten)]
        io: Io,
        #[arg(long, value_enum, default_value_t = Format::Ascii)]
        format: Format,
    },
    /// A seeded random census with its intersections and coordinates.
    Random {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long = "max-count", default_value_t = 5)]
        max_count: u64,
        #[arg(long = "out", value_name = "PATH")]
        out_path: Option<PathBuf>,
    },
    /// Every valid census with all counts at most --cap, one per line.
    Enumerate {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 1)]
        cap: u64,
        #[arg(long = "out", value_name = "PATH")]
        out_path: Option<PathBuf>,
    },
    /// Seeded property checks; prints a summary or a shrunk counterexample.
    Roundtrip {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 1000)]
        trials: usize,
    },
}

#[derive(Serialize)]
struct ValidationJson {
    valid: bool,
    violations: Vec<ViolationJson>,
}

#[derive(Serialize)]
struct ViolationJson {
    condition: &'static str,
    detail: String,
}

#[derive(Serialize)]
struct RandomJson {
    census: CensusJson,
    intersections: IntersectionsJson,
    coordinates: CoordinatesJson,
}

/// Parse `argv` (program name first) and run the command.
pub fn run<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    run_with_stdin(argv, &mut std::io::stdin())
}

/// As [`run`], reading absent input from `stdin`.
pub fn run_with_stdin<I, T>(argv: I, stdin: &mut dyn Read) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome {
                    code: 1,
                    stdout: String::new(),
                    stderr: text,
                }
            } else {
                Outcome {
                    code: 0,
                    stdout: text,
                    stderr: String::new(),
                }
            };
        }
    };
    match dispatch(cli.command, stdin) {
        Ok(Reply::Out(text, None)) => Outcome {
            code: 0,
            stdout: text,
            stderr: String::new(),
        },
        Ok(Reply::Out(text, Some(path))) => match std::fs::write(&path, &text) {
            Ok(()) => Outcome {
                code: 0,
                stdout: String::new(),
                stderr: String::new(),
            },
            Err(e) => fail(1, format!("error: cannot write {}: {e}\n", path.display())),
        },
        Ok(Reply::Fail(code, text)) => fail(code, text),
        Err(e) => fail(e.code(), format!("error: {}\n", e.message())),
    }
}

fn fail(code: i32, stderr: String) -> Outcome {
    Outcome {
        code,
        stdout: String::new(),
        stderr,
    }
}

enum Reply {
    Out(String, Option<PathBuf>),
    Fail(i32, String),
}

fn read_input(io: &Io, stdin: &mut dyn Read) -> Result<String, CliError> {
    if let Some(text) = &io.input {
        return Ok(text.clone());
    }
    let mut buf = String::new();
    match &io.in_path {
        Some(path) => {
            buf = std::fs::read_to_string(path)
                .map_err(|e| CliError::Malformed(format!("cannot read {}: {e}", path.display())))?
        }
        None => {
            stdin
                .read_to_string(&mut buf)
                .map_err(|e| CliError::Malformed(format!("cannot read stdin: {e}")))?;
        }
    }
    Ok(buf)
}

fn line<T: Serialize>(value: &T) -> String {
    let mut s = to_line(value);
    s.push('\n');
    s
}

fn sign_of(x: i64) -> Result<TwistSign, CliError> {
    TwistSign::from_i64(x).map_err(|e| CliError::Malformed(e.to_string()))
}

fn check_n(n: usize) -> Result<(), CliError> {
    if n < 2 {
        Err(invalid(dynnikov::Error::TooFewPunctures(n)))
    } else if n > MAX_N {
        Err(CliError::Malformed(format!("n = {n} exceeds the limit {MAX_N}")))
    } else {
        Ok(())
    }
}

fn dispatch(command: Command, stdin: &mut dyn Read) -> Result<Reply, CliError> {
    match command {
        Command::Encode { io, sign } => {
            let v = parse::<IntersectionsJson>(&read_input(&io, stdin)?)?.into_vector()?;
            let d = coordinates_from_intersections(&v, sign_of(sign)?).map_err(invalid)?;
            Ok(Reply::Out(line(&CoordinatesJson::from(&d)), io.out_path))
        }
        Command::Decode { io } => {
            let d = parse::<CoordinatesJson>(&read_input(&io, stdin)?)?.into_coordinates()?;
            let v = intersections_from_coordinates(&d).map_err(invalid)?;
            Ok(Reply::Out(line(&IntersectionsJson::from(&v)), io.out_path))
        }
        Command::Validate { io } => {
            let v = parse::<IntersectionsJson>(&read_input(&io, stdin)?)?.into_vector()?;
            let report = validate_intersections(&v);
            let json = ValidationJson {
                valid: report.is_valid(),
                violations: report
                    .violations
                    .iter()
                    .map(|x| ViolationJson {
                        condition: x.condition.as_str(),
                        detail: x.detail.clone(),
                    })
                    .collect(),
            };
            if report.is_valid() {
                Ok(Reply::Out(line(&json), io.out_path))
            } else {
                Ok(Reply::Fail(2, line(&json)))
            }
        }
        Command::Decompose { io, sign } => {
            let v = parse::<IntersectionsJson>(&read_input(&io, stdin)?)?.into_vector()?;
            let d = decompose(&v, sign_of(sign)?).map_err(invalid)?;
            Ok(Reply::Out(line(&CensusJson::from(&d)), io.out_path))
        }
        Command::Render { io, format } => {
            let d = render_input(&read_input(&io, stdin)?)?;
            let text = match format {
                Format::Ascii => render_ascii(&d),
                Format::Svg => render_svg(&d),
            };
            Ok(Reply::Out(text, io.out_path))
        }
        Command::Random {
            n,
            seed,
            max_count,
            out_path,
        } => {
            check_n(n)?;
            if max_count == 0 || max_count > MAX_RANDOM_COUNT {
                return Err(CliError::Malformed(format!("--max-count must lie in 1..={MAX_RANDOM_COUNT}")));
            }
            let d: Decomposition = random_census(GeneratorConfig { n, max_count, seed }).map_err(invalid)?;
            let v = oracle_intersections(&d).map_err(invalid)?;
            let coords = coordinates_from_decomposition(&d).map_err(invalid)?;
            let json = RandomJson {
                census: CensusJson::from(&d),
                intersections: IntersectionsJson::from(&v),
                coordinates: CoordinatesJson::from(&coords),
            };
            Ok(Reply::Out(line(&json), out_path))
        }
        Command::Enumerate { n, cap, out_path } => {
            check_n(n)?;
            if cap > MAX_ENUMERATE_CAP || (n > 4 && cap > 1) {
                return Err(CliError::Malformed(format!(
                    "--cap {cap} is too large for n = {n} (cap <= {MAX_ENUMERATE_CAP}, and cap <= 1 past n = 4)"
                )));
            }
            let text: String = enumerate_small::<i64>(n, cap).map(|d| line(&CensusJson::from(&d))).collect();
            Ok(Reply::Out(text, out_path))
        }
        Command::Roundtrip { n, seed, trials } => {
            check_n(n)?;
            if trials > MAX_TRIALS {
                return Err(CliError::Malformed(format!("--trials exceeds the limit {MAX_TRIALS}")));
            }
            match roundtrip::run(n, seed, trials) {
                Ok(summary) => Ok(Reply::Out(line(&summary), None)),
                Err(failure) => Ok(Reply::Fail(3, line(&failure))),
            }
        }
    }
}

/// A census, or a coordinate vector (recognized by its `a` key) whose census
/// is drawn with the twist direction of its `T`.
fn render_input(text: &str) -> Result<Decomposition, CliError> {
    let value: serde_json::Value = parse(text)?;
    if value.get("a").is_some() {
        let d = parse::<CoordinatesJson>(text)?.into_coordinates()?;
        let v = intersections_from_coordinates(&d).map_err(invalid)?;
        decompose(&v, d.twist_sign()).map_err(invalid)
    } else {
        parse::<CensusJson>(text)?.into_census()
    }
}
