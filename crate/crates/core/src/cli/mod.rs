//! Command-line front end: `validate`, `metamodel`, `graph` and `explain`.

mod explain;
mod graph;

use std::collections::BTreeMap;
use std::io::{self, Write};
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use thiserror::Error;
use walkdir::WalkDir;

pub use explain::explain;
pub use graph::{count_nodes, export_graph};

use crate::metamodel::{all_property_specs, all_relationship_specs, all_term_specs};
use crate::model::{resolve, Level, ResolvedSuite};
use crate::parser::{parse_suite, SuiteAst};
use crate::reporting::{
    exit_code, exit_code_strict, render_json, render_text, Diagnostic, Report, SuiteSummary,
};
use crate::validator::validate_suite;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("cannot read `{path}`: {source}")]
    Read { path: String, source: io::Error },
    #[error("no such file or directory: `{0}`")]
    Missing(String),
    #[error("cannot write `{path}`: {source}")]
    Write { path: String, source: io::Error },
    #[error("unknown topic `{0}`")]
    UnknownTopic(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Parser)]
#[command(
    name = "ontoarch",
    version,
    about = "Validate layered ontology suites against the ThingFO foundational ontology",
    arg_required_else_help = true
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Parse, resolve and check `.onto` files; directories are searched recursively.
    Validate {
        #[arg(required = true)]
        paths: Vec<PathBuf>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        /// Treat warnings as errors for the exit code.
        #[arg(long)]
        strict: bool,
        /// Write the report to this file instead of standard output.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Show the built-in foundational catalog.
    Metamodel {
        /// Print only the term, property and relationship totals.
        #[arg(long)]
        counts: bool,
    },
    /// Export the module and term graph as Graphviz DOT.
    Graph {
        #[arg(required = true)]
        paths: Vec<PathBuf>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Explain a diagnostic code, rule, foundational term, relationship or property.
    Explain { topic: String },
}

/// Every `.onto` file under the given paths, sorted and without duplicates.
/// Explicitly named files are taken whatever their extension.
pub fn collect_inputs(paths: &[PathBuf]) -> Result<Vec<PathBuf>, CliError> {
    let mut files = Vec::new();
    for p in paths {
        if p.is_file() {
            files.push(p.clone());
        } else if p.is_dir() {
            for entry in WalkDir::new(p).sort_by_file_name() {
                let entry = entry.map_err(|e| CliError::Read {
                    path: p.display().to_string(),
                    source: e.into(),
                })?;
                let path = entry.path();
                if entry.file_type().is_file() && path.extension().is_some_and(|x| x == "onto") {
                    files.push(path.to_path_buf());
                }
            }
        } else {
            return Err(CliError::Missing(p.display().to_string()));
        }
    }
    files.sort();
    files.dedup();
    Ok(files)
}

/// Reads files into `(path, text)` pairs.
pub fn read_sources(files: &[PathBuf]) -> Result<Vec<(String, String)>, CliError> {
    files
        .iter()
        .map(|f| {
            let text = std::fs::read_to_string(f).map_err(|source| CliError::Read {
                path: f.display().to_string(),
                source,
            })?;
            Ok((f.display().to_string(), text))
        })
        .collect()
}

fn ast_summary(ast: &SuiteAst) -> SuiteSummary {
    let mut modules = BTreeMap::from([(Level::FO, 1)]);
    for m in ast.modules() {
        *modules.entry(m.level).or_insert(0) += 1;
    }
    SuiteSummary {
        modules,
        terms: ast.modules().map(|m| m.terms().count()).sum(),
        relations: ast.modules().map(|m| m.relations().count()).sum(),
        individuals: ast.instances().map(|i| i.individuals().count()).sum(),
        worlds: ast.instances().map(|i| i.worlds().count()).sum(),
    }
}

/// Parses and resolves. Files that fail to parse are left out of
/// resolution; their diagnostics are returned alongside.
pub fn load_suite(
    sources: &[(String, String)],
) -> (Option<ResolvedSuite>, Vec<Diagnostic>, SuiteSummary) {
    let (ast, mut diags) = parse_suite(sources);
    let (modules, instances) = ast.split();
    match resolve(&modules, &instances) {
        Ok(suite) => {
            let summary = suite.summary();
            (Some(suite), diags, summary)
        }
        Err(more) => {
            diags.extend(more);
            (None, diags, ast_summary(&ast))
        }
    }
}

/// The whole pipeline over in-memory sources: parse, resolve, validate.
pub fn check_sources(sources: &[(String, String)]) -> Report {
    let (suite, mut diags, summary) = load_suite(sources);
    if let Some(suite) = suite {
        diags.extend(validate_suite(&suite).into_iter().map(Diagnostic::from));
    }
    Report::new(diags, summary)
}

/// Runs the command line with the process's standard streams.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let stdout = io::stdout();
    let stderr = io::stderr();
    run_with(argv, &mut stdout.lock(), &mut stderr.lock())
}

/// Runs the command line, writing to the given streams, and returns the
/// exit code: 0 clean, 1 findings, 2 usage or I/O failure.
pub fn run_with<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = out.write_all(text.as_bytes());
                    0
                }
                _ => {
                    let _ = err.write_all(text.as_bytes());
                    2
                }
            };
        }
    };
    match execute(cli.command, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            2
        }
    }
}

fn emit(text: &str, target: Option<&Path>, out: &mut dyn Write) -> Result<(), CliError> {
    match target {
        Some(path) => std::fs::write(path, text).map_err(|source| CliError::Write {
            path: path.display().to_string(),
            source,
        }),
        None => out
            .write_all(text.as_bytes())
            .map_err(|source| CliError::Write {
                path: "<stdout>".into(),
                source,
            }),
    }
}

fn execute(command: Command, out: &mut dyn Write) -> Result<i32, CliError> {
    match command {
        Command::Validate {
            paths,
            format,
            strict,
            out: target,
        } => {
            let sources = read_sources(&collect_inputs(&paths)?)?;
            let report = check_sources(&sources);
            let text = match format {
                Format::Text => render_text(&report),
                Format::Json => render_json(&report) + "\n",
            };
            emit(&text, target.as_deref(), out)?;
            Ok(if strict {
                exit_code_strict(&report)
            } else {
                exit_code(&report)
            })
        }
        Command::Metamodel { counts } => {
            let text = if counts {
                format!(
                    "terms={} properties={} relationships={}\n",
                    all_term_specs().len(),
                    all_property_specs().len(),
                    all_relationship_specs().len()
                )
            } else {
                metamodel_listing()
            };
            emit(&text, None, out)?;
            Ok(0)
        }
        Command::Graph { paths, out: target } => {
            let sources = read_sources(&collect_inputs(&paths)?)?;
            let (suite, diags, summary) = load_suite(&sources);
            match suite {
                Some(suite) => {
                    emit(&export_graph(&suite), target.as_deref(), out)?;
                    Ok(0)
                }
                None => {
                    emit(&render_text(&Report::new(diags, summary)), None, out)?;
                    Ok(1)
                }
            }
        }
        Command::Explain { topic } => match explain(&topic) {
            Some(text) => {
                emit(&text, None, out)?;
                Ok(0)
            }
            None => Err(CliError::UnknownTopic(topic)),
        },
    }
}

fn metamodel_listing() -> String {
    let mut out = String::from("terms:\n");
    for t in all_term_specs() {
        match t.parent {
            Some(p) => out.push_str(&format!("  {} < {p}\n", t.id)),
            None => out.push_str(&format!("  {}\n", t.id)),
        }
    }
    out.push_str("properties:\n");
    for p in all_property_specs() {
        out.push_str(&format!("  {}.{}\n", p.owner, p.key));
    }
    out.push_str("relationships:\n");
    for r in all_relationship_specs() {
        out.push_str(&format!("  {}: {} -> {}\n", r.ident, r.domain, r.range));
    }
    out
}
