//! Command-line front end.
//!
//! Exit codes: 0 success, 1 failed check or error, 2 inconclusive result
//! (homology sphere only, or solver out of time), 64 usage error.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Duration;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::bounds::{alpha_table, render_table};
use crate::checks::{run_suite, Suite};
use crate::complex::{read_facets_file, write_facets_file, Complex};
use crate::constructions::ConstructionSpec;
use crate::error::Error;
use crate::graph::{alpha_exact, link_recursive_stable, read_graph_file, turan_stable, write_graph_file};
use crate::rigidity::{rigidity_report, DEFAULT_TRIALS};
use crate::verify::{verify_sphere_with, VerifyOptions};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_INCONCLUSIVE: i32 = 2;
pub const EXIT_USAGE: i32 = 64;

#[derive(Debug, Parser)]
#[command(name = "flag-spheres", version, about = "Flag sphere constructions, certification and stable-set bounds")]
pub struct RunConfig {
    #[command(subcommand)]
    pub command: Command,
    /// Output format.
    #[arg(long, value_enum, global = true, default_value_t = Format::Json)]
    pub format: Format,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum AlphaMethod {
    Exact,
    Turan,
    Link,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Build a construction and write `<stem>.facets`, `<stem>.graph` and `manifest.json`.
    Generate {
        /// Construction, e.g. `W:d=3,k=3` or `joinupper:d=8,n=40`.
        spec: String,
        #[arg(short = 'o', long = "out", default_value = ".")]
        out: PathBuf,
    },
    /// Decide whether a `.facets` file triangulates a sphere.
    Verify {
        file: PathBuf,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = crate::verify::DEFAULT_MAX_ROUNDS)]
        max_rounds: usize,
    },
    /// Stable set of a `.graph` file.
    Alpha {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = AlphaMethod::Exact)]
        method: AlphaMethod,
        /// Time budget for the exact solver, in seconds.
        #[arg(long)]
        budget: Option<f64>,
    },
    /// Rigidity matrix rank, stresses and `g_2` of a `.facets` file.
    Rigidity {
        file: PathBuf,
        #[arg(long)]
        dim: usize,
        #[arg(long)]
        probe_r: Option<usize>,
        #[arg(long, default_value_t = DEFAULT_TRIALS)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Bound table for one dimension.
    Table {
        #[arg(long = "d")]
        d: usize,
        #[arg(long)]
        n_min: usize,
        #[arg(long)]
        n_max: usize,
    },
    /// Run a group of end-to-end checks.
    Check {
        #[arg(long, default_value = "all", value_parser = parse_suite)]
        suite: Suite,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

fn parse_suite(s: &str) -> Result<Suite, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

/// Parses `argv` (program name first) and runs it, printing to the process streams.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    run_with(argv, &mut std::io::stdout().lock(), &mut std::io::stderr().lock())
}

pub fn run_with<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let config = match RunConfig::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if code == EXIT_OK { write!(out, "{text}") } else { write!(err, "{text}") };
            return code;
        }
    };
    match execute(&config, out, err) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            match e {
                Error::InvalidSpec(_) => EXIT_USAGE,
                _ => EXIT_FAILURE,
            }
        }
    }
}

fn emit<T: Serialize>(out: &mut dyn Write, value: &T) -> Result<(), Error> {
    let text = serde_json::to_string_pretty(value).expect("report types serialize");
    writeln!(out, "{text}")?;
    Ok(())
}

fn with_path<T>(path: &Path, r: Result<T, Error>) -> Result<T, Error> {
    r.map_err(|e| match e {
        Error::Parse { line, msg } => Error::Parse { line, msg: format!("{}: {msg}", path.display()) },
        Error::Io(io) => Error::Io(std::io::Error::new(io.kind(), format!("{}: {io}", path.display()))),
        other => other,
    })
}

fn execute(config: &RunConfig, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32, Error> {
    let json = config.format == Format::Json;
    match &config.command {
        Command::Generate { spec, out: dir } => {
            let spec: ConstructionSpec = spec.parse()?;
            let k = spec.build()?;
            fs::create_dir_all(dir)?;
            let stem = spec.file_stem();
            write_facets_file(&k, &dir.join(format!("{stem}.facets")))?;
            write_graph_file(&k.skeleton_graph(), &dir.join(format!("{stem}.graph")))?;
            let manifest = spec.manifest(&k);
            let text = serde_json::to_string_pretty(&manifest).expect("manifest serializes");
            fs::write(dir.join("manifest.json"), format!("{text}\n"))?;
            if json {
                writeln!(out, "{text}")?;
            } else {
                writeln!(out, "{spec}: n = {}, f = {}, written to {}", manifest.n, manifest.f_vector, dir.display())?;
            }
            Ok(EXIT_OK)
        }
        Command::Verify { file, seed, max_rounds } => {
            let k = with_path(file, read_facets_file(file))?;
            let opts = VerifyOptions { seed: *seed, max_rounds: *max_rounds, ..VerifyOptions::default() };
            let cert = verify_sphere_with(&k, &opts);
            if json {
                emit(out, &cert)?;
            } else {
                writeln!(out, "{:?}: {}", cert.verdict, cert.reason)?;
            }
            Ok(cert.verdict.exit_code())
        }
        Command::Alpha { file, method, budget } => {
            let g = with_path(file, read_graph_file(file))?;
            let (witness, code) = match method {
                AlphaMethod::Exact => {
                    let budget = budget.map(Duration::from_secs_f64);
                    match alpha_exact(&g, budget) {
                        Ok(w) => (w, EXIT_OK),
                        Err(Error::Timeout { best }) => (best, EXIT_INCONCLUSIVE),
                        Err(e) => return Err(e),
                    }
                }
                AlphaMethod::Turan => (turan_stable(&g), EXIT_OK),
                AlphaMethod::Link => {
                    // A flag complex is determined by its graph.
                    let k = Complex::clique_complex(&g);
                    let d = (k.dim() + 1) as usize;
                    let w = link_recursive_stable(&k, d)?;
                    // Vertex ids of the clique complex follow first appearance in facets.
                    let vertices = w.vertices.iter().map(|&v| g.vertex_id(k.label(v)).unwrap()).collect();
                    (crate::graph::StableSetWitness { vertices, ..w }, EXIT_OK)
                }
            };
            let report = witness.to_json(&g);
            if json {
                emit(out, &report)?;
            } else {
                writeln!(out, "{:?} stable set of size {}: {}", witness.method, witness.size, report.vertices.join(" "))?;
            }
            if code == EXIT_INCONCLUSIVE {
                writeln!(err, "time budget exceeded; optimality not proven")?;
            }
            Ok(code)
        }
        Command::Rigidity { file, dim, probe_r, trials, seed } => {
            if *trials == 0 {
                return Err(Error::InvalidInput("--trials must be at least 1".into()));
            }
            let k = with_path(file, read_facets_file(file))?;
            let report = rigidity_report(&k, *dim, *probe_r, *seed, *trials)?;
            if json {
                emit(out, &report)?;
            } else {
                writeln!(
                    out,
                    "n = {}, f1 = {}, rank {} of {}, stress dim {}, g2 = {}, alpha = {}, {}-rigid: {}",
                    report.n,
                    report.f1,
                    report.rank,
                    report.expected_rank,
                    report.stress_dim,
                    report.g2,
                    report.alpha_witness,
                    report.probe_r,
                    report.verdicts.d_plus_1_rigid
                )?;
            }
            Ok(EXIT_OK)
        }
        Command::Table { d, n_min, n_max } => {
            if n_min > n_max || *d < 2 {
                return Err(Error::InvalidSpec(format!("bad table range d={d}, n={n_min}..{n_max}")));
            }
            let rows = alpha_table(*d, *n_min..=*n_max);
            if json {
                emit(out, &rows)?;
            } else {
                write!(out, "{}", render_table(&rows))?;
            }
            Ok(EXIT_OK)
        }
        Command::Check { suite, seed } => {
            let results = run_suite(*suite, *seed);
            if json {
                emit(out, &results)?;
            } else {
                for r in &results {
                    writeln!(out, "{r}")?;
                }
            }
            Ok(if results.iter().all(|r| r.passed) { EXIT_OK } else { EXIT_FAILURE })
        }
    }
}
