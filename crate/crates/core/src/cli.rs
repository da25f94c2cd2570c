//! Command-line front end. [`run`] is the whole program minus process exit,
//! so tests can drive it with in-memory writers.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};

use crate::converter::{demyanov_convert, Collection};
use crate::dynamics::{
    builtin_counterexample, evaluate_paper_claim, iterate_until_cycle, search_cycles,
    GeneratorParams, InstanceSource, DEFAULT_CAP,
};
use crate::error::Error;
use crate::format::{canonical_digest, parse_family, serialize_family};
use crate::render::{render_svg, RenderSpec};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 64;
pub const EXIT_DATA: i32 = 65;
pub const EXIT_NO_INPUT: i32 = 66;
pub const EXIT_SOFTWARE: i32 = 70;

#[derive(Parser, Debug)]
#[command(
    name = "demyanov",
    version,
    about = "Iterate the Demyanov converter on planar polytope families"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Write the builtin four-polygon family as a document.
    Builtin {
        #[arg(long = "out")]
        output: Option<PathBuf>,
    },
    /// Apply the converter once.
    Convert {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long = "out")]
        output: Option<PathBuf>,
    },
    /// Iterate until the first repeated collection and report N and L.
    Iterate {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, default_value_t = DEFAULT_CAP)]
        cap: usize,
        /// Write one document per trajectory element into this directory.
        #[arg(long)]
        dump_dir: Option<PathBuf>,
    },
    /// Recompute the builtin trajectory and check the cycle-length-four relations.
    VerifyClaim,
    /// Render a family as SVG, one panel per member.
    Render {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long = "out")]
        output: Option<PathBuf>,
        #[arg(long, default_value_t = 4)]
        columns: usize,
    },
    /// Iterate many seeded random families and tabulate cycle lengths.
    Search {
        #[arg(long, default_value_t = 100)]
        instances: usize,
        #[arg(long, default_value_t = 4)]
        num_polytopes: usize,
        #[arg(long, default_value_t = 4)]
        max_vertices: usize,
        #[arg(long, default_value_t = 3)]
        coord_bound: u32,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = DEFAULT_CAP)]
        cap: usize,
        /// Write the family with the largest cycle length here.
        #[arg(long = "out")]
        output: Option<PathBuf>,
    },
}

#[derive(Args, Debug)]
#[group(required = true, multiple = false)]
struct InputArgs {
    #[arg(long = "in")]
    input: Option<PathBuf>,
    #[arg(long)]
    builtin: bool,
}

enum Failure {
    Io(PathBuf, std::io::Error),
    Domain(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Domain(e)
    }
}

impl Failure {
    fn exit_code(&self) -> i32 {
        match self {
            Failure::Io(..) => EXIT_NO_INPUT,
            Failure::Domain(Error::Parse(_) | Error::EmptyInput) => EXIT_DATA,
            Failure::Domain(_) => EXIT_SOFTWARE,
        }
    }
}

/// Parses `argv` (program name first), runs the subcommand and returns the
/// process exit code.
pub fn run<I, S>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = out.write_all(text.as_bytes());
                    EXIT_OK
                }
                _ => {
                    let _ = err.write_all(text.as_bytes());
                    EXIT_USAGE
                }
            };
        }
    };
    match execute(cli.command, out) {
        Ok(code) => code,
        Err(f) => {
            let _ = match &f {
                Failure::Io(path, e) => writeln!(err, "error: {}: {e}", path.display()),
                Failure::Domain(e) => writeln!(err, "error: {e}"),
            };
            f.exit_code()
        }
    }
}

fn load(input: &InputArgs) -> Result<Collection, Failure> {
    match &input.input {
        Some(path) => {
            let text = fs::read_to_string(path).map_err(|e| Failure::Io(path.clone(), e))?;
            Ok(parse_family(&text)?)
        }
        None => Ok(builtin_counterexample()),
    }
}

fn emit(text: &str, path: Option<&Path>, out: &mut dyn Write) -> Result<(), Failure> {
    match path {
        Some(p) => fs::write(p, text).map_err(|e| Failure::Io(p.to_owned(), e)),
        None => out
            .write_all(text.as_bytes())
            .map_err(|e| Failure::Io(PathBuf::from("<stdout>"), e)),
    }
}

fn say(out: &mut dyn Write, line: std::fmt::Arguments<'_>) -> Result<(), Failure> {
    writeln!(out, "{line}").map_err(|e| Failure::Io(PathBuf::from("<stdout>"), e))
}

fn execute(command: Command, out: &mut dyn Write) -> Result<i32, Failure> {
    match command {
        Command::Builtin { output } => {
            emit(
                &serialize_family(&builtin_counterexample()),
                output.as_deref(),
                out,
            )?;
        }
        Command::Convert { input, output } => {
            let image = demyanov_convert(&load(&input)?)?;
            emit(&serialize_family(&image), output.as_deref(), out)?;
        }
        Command::Iterate {
            input,
            cap,
            dump_dir,
        } => {
            let omega0 = load(&input)?;
            let result = match iterate_until_cycle(&omega0, cap) {
                Ok(r) => r,
                Err(Error::CapExceeded { cap, partial }) => {
                    if let Some(dir) = &dump_dir {
                        dump(dir, &partial)?;
                    }
                    return Err(Error::CapExceeded { cap, partial }.into());
                }
                Err(e) => return Err(e.into()),
            };
            say(
                out,
                format_args!("N={} L={}", result.preperiod, result.cycle_length),
            )?;
            for (k, (omega, digest)) in result
                .trajectory
                .iter()
                .zip(&result.canonical_hashes)
                .enumerate()
            {
                say(
                    out,
                    format_args!("k={k} members={} sha256={digest}", omega.len()),
                )?;
            }
            if let Some(dir) = &dump_dir {
                dump(dir, &result.trajectory)?;
            }
        }
        Command::VerifyClaim => {
            let verdict = evaluate_paper_claim()?;
            for (k, omega) in verdict.collections.iter().enumerate() {
                say(
                    out,
                    format_args!(
                        "Omega_{k}: {} members, sha256={}",
                        omega.len(),
                        canonical_digest(omega)
                    ),
                )?;
            }
            for check in &verdict.checks {
                let tag = if check.passed { "PASS" } else { "FAIL" };
                say(out, format_args!("{tag} {}", check.relation))?;
            }
            if !verdict.passed() {
                return Ok(EXIT_SOFTWARE);
            }
        }
        Command::Render {
            input,
            output,
            columns,
        } => {
            let spec = RenderSpec {
                columns,
                ..RenderSpec::default()
            };
            emit(&render_svg(&load(&input)?, &spec), output.as_deref(), out)?;
        }
        Command::Search {
            instances,
            num_polytopes,
            max_vertices,
            coord_bound,
            seed,
            cap,
            output,
        } => {
            if instances == 0 || num_polytopes == 0 || max_vertices == 0 {
                return Err(Error::InvariantViolation("counts must be positive".into()).into());
            }
            let source = InstanceSource::Random(GeneratorParams {
                num_polytopes,
                max_vertices,
                coord_bound,
            });
            let report = search_cycles(&source, instances, cap, seed)?;
            say(
                out,
                format_args!(
                    "instances={} cap_exceeded={}",
                    report.instances_run, report.cap_exceeded
                ),
            )?;
            for (l, count) in &report.histogram {
                say(out, format_args!("L={l} count={count}"))?;
            }
            if let Some(w) = &report.max_l_witness {
                say(
                    out,
                    format_args!("max_L={} seed={}", w.cycle_length, w.seed),
                )?;
                if let Some(path) = &output {
                    emit(&serialize_family(&w.family), Some(path), out)?;
                }
            }
        }
    }
    Ok(EXIT_OK)
}

fn dump(dir: &Path, trajectory: &[Collection]) -> Result<(), Failure> {
    fs::create_dir_all(dir).map_err(|e| Failure::Io(dir.to_owned(), e))?;
    for (k, omega) in trajectory.iter().enumerate() {
        let path = dir.join(format!("omega_{k:04}.json"));
        fs::write(&path, serialize_family(omega)).map_err(|e| Failure::Io(path, e))?;
    }
    Ok(())
}
