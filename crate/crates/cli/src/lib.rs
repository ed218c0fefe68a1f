//! Command-line front end for `evoalg`: reads algebra documents, runs the
//! analyses and prints either JSON or a plain-text rendering of it.

#[macro_use]
pub mod document;
pub mod commands;
pub mod error;
pub mod render;

use std::ffi::OsString;
use std::io::Read;

use clap::{ArgGroup, Parser, Subcommand};
use evoalg::SuiteConfig;

use crate::commands::{Family, Report};
use crate::document::{AlgebraDocument, AnyAlgebra};
use crate::error::{CliError, CliResult};

#[derive(Debug, Parser)]
#[command(
    name = "evoalg",
    version,
    about = "Exact analysis of evolution algebras and their associated graphs"
)]
pub struct Cli {
    /// Print the report as JSON.
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Dimension, field, perfection, A^2 and the shape of the associated graph.
    Analyze {
        /// Algebra document, or `-` for standard input.
        file: String,
    },
    /// Hereditary vertex sets, in lexicographic order.
    #[command(group(ArgGroup::new("family").args(["all", "maximal", "saturated"])))]
    Hereditary {
        file: String,
        /// Every hereditary set (the default).
        #[arg(long)]
        all: bool,
        /// Maximal proper hereditary sets.
        #[arg(long)]
        maximal: bool,
        /// Hereditary sets that are also saturated.
        #[arg(long)]
        saturated: bool,
        /// Largest family to enumerate.
        #[arg(long)]
        limit: Option<usize>,
    },
    /// Maximal ideals: hyperplanes containing A^2 and ideals of maximal hereditary sets.
    MaximalIdeals {
        file: String,
        /// Largest hyperplane family to list.
        #[arg(long)]
        limit: Option<usize>,
    },
    /// Simplicity of the algebra against the graph criterion.
    Simple {
        file: String,
        /// Random generator sets tried when the search is not exhaustive.
        #[arg(long, default_value_t = 200)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// The quotient by the ideal of a hereditary set.
    Quotient {
        file: String,
        /// Hereditary set, as labels: `e2,e3`.
        #[arg(long)]
        set: String,
        /// Write the quotient document here.
        #[arg(long)]
        out: Option<String>,
    },
    /// The ideal generated by some vectors: H_I, I ∩ B, absorption, maximality.
    Ideal {
        file: String,
        /// Coordinates in basis order, `;` between vectors: `1,1;0,-1/2`.
        #[arg(long, allow_hyphen_values = true)]
        generators: String,
    },
    /// The associated graph, optionally written as DOT (`-` for standard output).
    Graph {
        file: String,
        #[arg(long)]
        dot: Option<String>,
    },
    /// Checks every registered statement on one algebra.
    Verify {
        #[arg(required_unless_present = "random", conflicts_with = "random")]
        file: Option<String>,
        /// Generate the algebra: `seed=7,dims=2-4,field=F3,density=0.5,perfect`.
        #[arg(long)]
        random: Option<String>,
        /// Random ideals per algebra.
        #[arg(long, default_value_t = 50)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Bound on pairs examined per statement.
        #[arg(long, default_value_t = 256)]
        pair_cap: usize,
    },
    /// Checks every registered statement on a seeded stream of random algebras.
    Fuzz {
        /// Dimension or range `a-b`.
        #[arg(long, default_value = "2-5")]
        dim: String,
        /// Number of algebras.
        #[arg(long, default_value_t = 100)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// `Q`, `p`, `Fp` or `mixed` (Q, F2, F3, F5 in turn).
        #[arg(long, default_value = "Q")]
        field: String,
        /// Probability that a coordinate of a square is nonzero.
        #[arg(long, default_value_t = 0.5)]
        density: f64,
        /// Draw perfect algebras only.
        #[arg(long)]
        perfect: bool,
        /// Random ideals per algebra.
        #[arg(long, default_value_t = 10)]
        ideals: usize,
        #[arg(long, default_value_t = 256)]
        pair_cap: usize,
    },
}

/// What a run printed and how it exits.
#[derive(Debug, Default, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Parses `args` (program name first) and runs the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = e.exit_code();
            let text = e.render().to_string();
            return if code == 0 {
                Outcome {
                    code,
                    stdout: text,
                    stderr: String::new(),
                }
            } else {
                Outcome {
                    code: 2,
                    stdout: String::new(),
                    stderr: text,
                }
            };
        }
    };
    let json = cli.json;
    match execute(cli.command) {
        Ok(Executed::Report(r)) => Outcome {
            code: r.code,
            stdout: if json {
                let mut s = serde_json::to_string_pretty(&r.value).expect("reports serialize");
                s.push('\n');
                s
            } else {
                render::render(&r.value)
            },
            stderr: String::new(),
        },
        Ok(Executed::Raw(text)) => Outcome {
            code: 0,
            stdout: text,
            stderr: String::new(),
        },
        Err(e) => Outcome {
            code: 2,
            stdout: String::new(),
            stderr: format!("error: {}\n", describe(&e)),
        },
    }
}

fn describe(e: &CliError) -> String {
    match e {
        CliError::Core(evoalg::Error::EnumerationOverflow { .. }) => {
            format!("{e}; raise --limit or {}", commands::MAX_ENUM_VAR)
        }
        _ => e.to_string(),
    }
}

enum Executed {
    Report(Report),
    Raw(String),
}

fn load(file: &str) -> CliResult<AnyAlgebra> {
    let doc = if file == "-" {
        let mut text = String::new();
        std::io::stdin()
            .read_to_string(&mut text)
            .map_err(|source| CliError::Io {
                path: "<stdin>".into(),
                source,
            })?;
        AlgebraDocument::parse(&text)?
    } else {
        AlgebraDocument::read(file)?
    };
    doc.to_algebra()
}

fn write(path: &str, text: &str) -> CliResult<()> {
    std::fs::write(path, text).map_err(|source| CliError::Io {
        path: path.to_string(),
        source,
    })
}

fn execute(command: Command) -> CliResult<Executed> {
    let report = match command {
        Command::Analyze { file } => with_algebra!(&load(&file)?, a => commands::analyze(a)),
        Command::Hereditary {
            file,
            maximal,
            saturated,
            limit,
            ..
        } => {
            let family = if maximal {
                Family::Maximal
            } else if saturated {
                Family::Saturated
            } else {
                Family::All
            };
            let limit = commands::enumeration_limit(limit)?;
            with_algebra!(&load(&file)?, a => commands::hereditary(a, family, limit)?)
        }
        Command::MaximalIdeals { file, limit } => {
            let limit = commands::enumeration_limit(limit)?;
            with_algebra!(&load(&file)?, a => commands::maximal_ideals(a, limit))
        }
        Command::Simple { file, trials, seed } => with_algebra!(&load(&file)?, a => commands::simple(a, trials, seed)?),
        Command::Quotient { file, set, out } => {
            let (report, doc) = with_algebra!(&load(&file)?, a => commands::quotient(a, &set)?);
            if let Some(path) = out {
                let doc =
                    doc.ok_or_else(|| CliError::Usage("the quotient is the zero algebra; no document written".into()))?;
                write(&path, &doc.to_json())?;
            }
            report
        }
        Command::Ideal { file, generators } => with_algebra!(&load(&file)?, a => commands::ideal(a, &generators)?),
        Command::Graph { file, dot } => {
            let report = with_algebra!(&load(&file)?, a => commands::graph(a));
            let text = report.value["dot"].as_str().expect("dot is a string").to_string();
            match dot.as_deref() {
                Some("-") => return Ok(Executed::Raw(text)),
                Some(path) => write(path, &text)?,
                None => {}
            }
            report
        }
        Command::Verify {
            file,
            random,
            trials,
            seed,
            pair_cap,
        } => {
            let cfg = SuiteConfig {
                trials,
                seed,
                limit: commands::enumeration_limit(None)?,
                pair_cap,
            };
            match (file, random) {
                (_, Some(spec)) => {
                    let spec = commands::parse_stream_spec(&spec)?;
                    let a = commands::generate(&spec, 1)?.pop().expect("one algebra");
                    commands::verify(&a, &cfg, Some(&a.to_document()))
                }
                (Some(file), None) => commands::verify(&load(&file)?, &cfg, None),
                (None, None) => unreachable!("clap requires a file or --random"),
            }
        }
        Command::Fuzz {
            dim,
            trials,
            seed,
            field,
            density,
            perfect,
            ideals,
            pair_cap,
        } => {
            let spec = commands::StreamSpec {
                field: commands::parse_field_choice(&field)?,
                dims: commands::parse_dims(&dim)?,
                density: commands::parse_density(&density.to_string())?,
                seed,
                perfect,
            };
            let cfg = SuiteConfig {
                trials: ideals,
                seed,
                limit: commands::enumeration_limit(None)?,
                pair_cap,
            };
            commands::fuzz(&spec, trials, &cfg)?
        }
    };
    Ok(Executed::Report(report))
}
