//! Argument parsing and dispatch for the `drglab` binary.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use drglab_core::connect::DEFAULT_PATH_BUDGET;
use drglab_core::Graph;
use serde_json::Value;

use crate::family::{self, FamilyName};
use crate::report::{self, Method};
use crate::verify::{self, Params};
use crate::{edgelist, Error, Result};

#[derive(Parser, Debug)]
#[command(name = "drglab", version, about = "Squares of hypercubes and related distance-regular graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Build a family member and write it as an edge list
    Family {
        #[command(flatten)]
        source: Source,
        /// Output file; stdout when absent
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Distances, intersection array, strong regularity, antipodality
    Analyze {
        #[command(flatten)]
        source: Source,
        #[arg(long)]
        json: bool,
    },
    /// Adjacency spectrum
    Spectrum {
        #[command(flatten)]
        source: Source,
        #[arg(long, value_enum, default_value = "both")]
        method: Method,
        #[arg(long, default_value_t = 1e-10)]
        tol: f64,
        #[arg(long)]
        json: bool,
    },
    /// Automorphism group and transitivity
    Aut {
        #[command(flatten)]
        source: Source,
        #[arg(long)]
        json: bool,
    },
    /// Vertex connectivity
    Connectivity {
        #[command(flatten)]
        source: Source,
        #[arg(long)]
        json: bool,
    },
    /// Exhaustive panconnectedness check (at most 16 vertices)
    Panconnect {
        #[command(flatten)]
        source: Source,
        /// Node budget per path search
        #[arg(long, default_value_t = DEFAULT_PATH_BUDGET)]
        budget: u64,
        #[arg(long)]
        json: bool,
    },
    /// Run every registered claim
    Verify {
        /// Largest dimension for the structural claims (4..=8)
        #[arg(long, default_value_t = 6)]
        max_n: usize,
        /// Node budget per path search
        #[arg(long, default_value_t = DEFAULT_PATH_BUDGET)]
        budget: u64,
        #[arg(long)]
        json: bool,
    },
}

/// A graph from `--in`, or a family from `--name`.
#[derive(Args, Debug)]
struct Source {
    #[arg(long, value_enum)]
    name: Option<FamilyName>,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    k: Option<usize>,
    /// Edge-list file
    #[arg(long = "in")]
    input: Option<PathBuf>,
}

impl Source {
    fn load(&self) -> Result<Graph> {
        match (self.name, self.input.as_deref()) {
            (Some(name), input) => family::build(name, self.n, self.k, input),
            (None, Some(path)) => edgelist::read(path),
            (None, None) => Err(Error::Usage("give --name <family> or --in <file>".into())),
        }
    }
}

/// Run with `args` (program name first), writing to `out` and `err`.
/// Returns the exit status: 0 on success, 1 when an analysis fails, 2 on
/// usage errors.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = e.exit_code();
            let text = e.render().to_string();
            if code == 0 {
                let _ = write!(out, "{text}");
            } else {
                let _ = write!(err, "{text}");
            }
            return if code == 0 { 0 } else { 2 };
        }
    };
    match dispatch(cli.command, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "drglab: {e}");
            if e.is_usage() {
                2
            } else {
                1
            }
        }
    }
}

fn emit(out: &mut dyn Write, json: bool, v: &Value, text: impl FnOnce(&Value) -> String) -> Result<i32> {
    let s = if json { report::render(v) } else { text(v) };
    out.write_all(s.as_bytes()).map_err(|e| Error::Io { path: "<stdout>".into(), source: e })?;
    Ok(0)
}

/// `key: value` lines for the top-level fields of a report.
fn plain(v: &Value) -> String {
    let mut s = String::new();
    if let Value::Object(map) = v {
        for (k, x) in map {
            let shown = match x {
                Value::String(t) => t.clone(),
                other => other.to_string(),
            };
            s.push_str(&format!("{k}: {shown}\n"));
        }
    }
    s
}

fn dispatch(command: Command, out: &mut dyn Write) -> Result<i32> {
    match command {
        Command::Family { source, out: path } => {
            let g = source.load()?;
            match path {
                Some(p) => edgelist::write(Path::new(&p), &g)?,
                None => out.write_all(edgelist::to_string(&g).as_bytes()).map_err(|e| Error::Io { path: "<stdout>".into(), source: e })?,
            }
            Ok(0)
        }
        Command::Analyze { source, json } => emit(out, json, &report::analyze(&source.load()?)?, plain),
        Command::Spectrum { source, method, tol, json } => {
            if tol.is_nan() || tol <= 0.0 {
                return Err(Error::Usage(format!("--tol must be positive, got {tol}")));
            }
            emit(out, json, &report::spectrum(&source.load()?, method, tol)?, plain)
        }
        Command::Aut { source, json } => emit(out, json, &report::automorphisms(&source.load()?)?, plain),
        Command::Connectivity { source, json } => emit(out, json, &report::connectivity(&source.load()?)?, plain),
        Command::Panconnect { source, budget, json } => {
            let v = report::panconnect(&source.load()?, budget)?;
            let failed = v["panconnected"] == Value::Bool(false);
            emit(out, json, &v, plain)?;
            Ok(if failed { 1 } else { 0 })
        }
        Command::Verify { max_n, budget, json } => {
            let r = verify::run(Params { max_n, budget }, verify::thread_count())?;
            let text = if json { report::render(&r.to_json()) } else { r.to_text() };
            out.write_all(text.as_bytes()).map_err(|e| Error::Io { path: "<stdout>".into(), source: e })?;
            Ok(if r.all_passed() { 0 } else { 1 })
        }
    }
}
