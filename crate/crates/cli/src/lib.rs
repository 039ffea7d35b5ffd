//! Command-line front end: argument parsing, config files, exit codes.
//!
//! Exit codes: 0 success, 1 a verification found a counterexample, 2 usage
//! error or inapplicable request, 3 power iteration did not converge.

mod args;
mod commands;

use std::ffi::OsString;
use std::fs::File;
use std::io::{self, BufRead, BufWriter, Write};

use clap::error::ErrorKind;
use clap::Parser;

use args::Cli;
use clique_spectra::Error;

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFICATION_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_NOT_CONVERGED: i32 = 3;

/// Failure of one invocation, carrying its exit code.
#[derive(Debug)]
pub(crate) enum Failure {
    Usage(String),
    Library(Error),
    /// Data was written; the checked claim did not hold.
    Verification,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Library(e)
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Library(e.into())
    }
}

impl Failure {
    fn exit_code(&self) -> i32 {
        match self {
            Failure::Usage(_) => EXIT_USAGE,
            Failure::Library(e) if e.is_non_convergence() => EXIT_NOT_CONVERGED,
            Failure::Library(_) => EXIT_USAGE,
            Failure::Verification => EXIT_VERIFICATION_FAILED,
        }
    }
}

/// Turns `key = value` lines into flags; `key = true` becomes a bare flag
/// and `key = false` is dropped. `#` starts a comment line.
fn config_flags(text: &str) -> Result<Vec<String>, Failure> {
    let mut flags = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let Some((key, value)) = line.split_once('=') else {
            return Err(Failure::Usage(format!("config line {}: expected key=value, got {line:?}", idx + 1)));
        };
        let (key, value) = (key.trim().trim_start_matches("--"), value.trim());
        match value {
            "false" => {}
            "true" => flags.push(format!("--{key}")),
            _ => {
                flags.push(format!("--{key}"));
                flags.push(value.to_string());
            }
        }
    }
    Ok(flags)
}

/// Splices `--config <file>` contents in right after the subcommand, so
/// later command-line flags override them.
fn expand_config(argv: Vec<String>) -> Result<Vec<String>, Failure> {
    let mut out = Vec::with_capacity(argv.len());
    let mut path = None;
    let mut iter = argv.into_iter();
    while let Some(arg) = iter.next() {
        if arg == "--config" {
            path = Some(iter.next().ok_or_else(|| Failure::Usage("--config needs a file".into()))?);
        } else if let Some(p) = arg.strip_prefix("--config=") {
            path = Some(p.to_string());
        } else {
            out.push(arg);
        }
    }
    if let Some(path) = path {
        let text = std::fs::read_to_string(&path).map_err(|e| Failure::Usage(format!("cannot read config {path}: {e}")))?;
        let flags = config_flags(&text)?;
        let at = out
            .iter()
            .skip(1)
            .position(|a| !a.starts_with('-'))
            .map_or(out.len(), |p| p + 2);
        out.splice(at..at, flags);
    }
    Ok(out)
}

/// Runs one invocation against the given streams and returns its exit code.
pub fn run_with<I, T>(argv: I, stdin: &mut dyn BufRead, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString>,
{
    let argv: Vec<String> = argv
        .into_iter()
        .map(|a| a.into().to_string_lossy().into_owned())
        .collect();
    let outcome = expand_config(argv).and_then(|argv| match Cli::try_parse_from(argv) {
        Ok(cli) => dispatch(cli, stdin, stdout, stderr),
        Err(e) => match e.kind() {
            ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                let _ = write!(stdout, "{e}");
                Ok(())
            }
            _ => Err(Failure::Usage(e.to_string())),
        },
    });
    match outcome {
        Ok(()) => EXIT_OK,
        Err(failure) => {
            match &failure {
                Failure::Usage(msg) => {
                    let _ = writeln!(stderr, "{}", msg.trim_end());
                }
                Failure::Library(e) => {
                    let _ = writeln!(stderr, "error: {e}");
                }
                Failure::Verification => {}
            }
            failure.exit_code()
        }
    }
}

fn dispatch(cli: Cli, stdin: &mut dyn BufRead, stdout: &mut dyn Write, stderr: &mut dyn Write) -> Result<(), Failure> {
    let target = cli.command.output_path().cloned();
    let mut file;
    let out: &mut dyn Write = match &target {
        Some(path) => {
            file = BufWriter::new(File::create(path).map_err(|e| Failure::Usage(format!("cannot create {}: {e}", path.display())))?);
            &mut file
        }
        None => stdout,
    };
    let result = commands::execute(cli.command, stdin, out, stderr);
    out.flush()?;
    result
}

/// Runs with the process streams.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString>,
{
    let stdin = io::stdin();
    let mut input = stdin.lock();
    let stdout = io::stdout();
    let mut output = stdout.lock();
    let mut errors = io::stderr();
    run_with(argv, &mut input, &mut output, &mut errors)
}
