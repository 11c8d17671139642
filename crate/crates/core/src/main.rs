//! Command-line front end: constructions, solvers, verification, and format
//! conversion. Exit status 0 on success, 1 on verification failure, 2 on
//! usage or parse errors.

use std::fs;
use std::io::Read as _;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use autboost::aut::aut_group;
use autboost::clique::max_clique;
use autboost::color::chromatic_number;
use autboost::construct::{clique_boost, iterate_boost, realize_group, unbounded_family, verify_boost, BoostCertificate};
use autboost::error::Error;
use autboost::graph::{Graph, VertexSet};
use autboost::group::{GroupSpec, NamedFamily};
use autboost::io::{emit_dot, emit_edge_list, emit_graph6, parse_edge_list, parse_graph6};
use autboost::perm::Permutation;
use autboost::report::invariant_report;

#[derive(Parser)]
#[command(name = "autboost", version, about = "Graphs with a prescribed automorphism group and unbounded clique number")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum InFormat {
    Graph6,
    Edges,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutFormat {
    Graph6,
    Edges,
    Dot,
}

#[derive(Args)]
struct GraphInput {
    /// Input file; "-" reads standard input
    #[arg(long, default_value = "-")]
    input: String,
    /// Input format
    #[arg(long, value_enum, default_value_t = InFormat::Graph6)]
    from: InFormat,
}

impl GraphInput {
    fn read(&self) -> Result<Graph, Error> {
        let text = if self.input == "-" {
            let mut buf = String::new();
            std::io::stdin()
                .read_to_string(&mut buf)
                .map_err(|e| Error::EdgeList(format!("cannot read stdin: {e}")))?;
            buf
        } else {
            fs::read_to_string(&self.input)
                .map_err(|e| Error::EdgeList(format!("cannot read {}: {e}", self.input)))?
        };
        match self.from {
            InFormat::Graph6 => parse_graph6(text.trim()),
            InFormat::Edges => parse_edge_list(&text),
        }
    }
}

fn emit(g: &Graph, to: OutFormat) -> String {
    match to {
        OutFormat::Graph6 => format!("{}\n", emit_graph6(g)),
        OutFormat::Edges => emit_edge_list(g),
        OutFormat::Dot => emit_dot(g),
    }
}

#[derive(Subcommand)]
enum Command {
    /// Apply the clique-boost construction and print the result plus the
    /// certificate of the final step
    Boost {
        #[command(flatten)]
        input: GraphInput,
        #[arg(long, value_enum, default_value_t = OutFormat::Graph6)]
        to: OutFormat,
        #[arg(long, default_value_t = 1)]
        iterations: usize,
    },
    /// Build a connected graph whose automorphism group is the given group
    Realize {
        #[arg(long)]
        group: String,
        #[arg(long, value_enum, default_value_t = OutFormat::Graph6)]
        to: OutFormat,
    },
    /// Build and verify a graph with the given automorphism group and clique
    /// number at least the target
    Family {
        #[arg(long)]
        group: String,
        #[arg(long)]
        clique: usize,
        #[arg(long, value_enum, default_value_t = OutFormat::Graph6)]
        to: OutFormat,
        /// Machine-readable key-value output
        #[arg(long)]
        kv: bool,
    },
    /// Print generators and order of the automorphism group
    Aut {
        #[command(flatten)]
        input: GraphInput,
    },
    /// Print the clique number
    Omega {
        #[command(flatten)]
        input: GraphInput,
    },
    /// Print the chromatic number
    Chi {
        #[command(flatten)]
        input: GraphInput,
    },
    /// Print the consolidated invariant report
    Report {
        #[command(flatten)]
        input: GraphInput,
        /// Machine-readable key-value output
        #[arg(long)]
        kv: bool,
    },
    /// Treat the input as a boosted graph, re-derive the certificate from
    /// the labeling convention, and verify the boost step
    VerifyBoost {
        #[command(flatten)]
        input: GraphInput,
        /// Machine-readable key-value output
        #[arg(long)]
        kv: bool,
    },
    /// Transcode between graph formats
    Convert {
        #[command(flatten)]
        input: GraphInput,
        #[arg(long, value_enum, default_value_t = OutFormat::Graph6)]
        to: OutFormat,
    },
}

fn parse_group_spec(text: &str) -> Result<GroupSpec, Error> {
    let (head, tail) = match text.split_once(':') {
        Some((h, t)) => (h, Some(t)),
        None => (text, None),
    };
    let param = |tail: Option<&str>| -> Result<usize, Error> {
        tail.ok_or_else(|| Error::BadGroupSpec(format!("{head} needs a parameter, e.g. {head}:3")))?
            .parse()
            .map_err(|_| Error::BadGroupSpec(format!("bad parameter in {text:?}")))
    };
    match head {
        "trivial" => Ok(GroupSpec::named(NamedFamily::Trivial, 0)),
        "cyclic" => Ok(GroupSpec::named(NamedFamily::Cyclic, param(tail)?)),
        "dihedral" => Ok(GroupSpec::named(NamedFamily::Dihedral, param(tail)?)),
        "symmetric" => Ok(GroupSpec::named(NamedFamily::Symmetric, param(tail)?)),
        "klein4" => Ok(GroupSpec::named(NamedFamily::KleinFour, 0)),
        "cayley" => {
            let path = tail.ok_or_else(|| Error::BadGroupSpec("cayley:<path> needs a file".into()))?;
            let text = fs::read_to_string(path)
                .map_err(|e| Error::BadGroupSpec(format!("cannot read {path}: {e}")))?;
            parse_cayley_file(&text)
        }
        "perms" => {
            let path = tail.ok_or_else(|| Error::BadGroupSpec("perms:<path> needs a file".into()))?;
            let text = fs::read_to_string(path)
                .map_err(|e| Error::BadGroupSpec(format!("cannot read {path}: {e}")))?;
            parse_perms_file(&text)
        }
        _ => Err(Error::BadGroupSpec(format!("unknown group spec {text:?}"))),
    }
}

/// Cayley table file: first line k, then k lines of k space-separated indices.
fn parse_cayley_file(text: &str) -> Result<GroupSpec, Error> {
    let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty());
    let k: usize = lines
        .next()
        .ok_or_else(|| Error::BadCayleyTable("empty file".into()))?
        .parse()
        .map_err(|_| Error::BadCayleyTable("bad size line".into()))?;
    let mut table = Vec::with_capacity(k);
    for _ in 0..k {
        let line = lines
            .next()
            .ok_or_else(|| Error::BadCayleyTable(format!("expected {k} table rows")))?;
        let row = line
            .split_whitespace()
            .map(|t| t.parse::<usize>().map_err(|_| Error::BadCayleyTable(format!("bad entry {t:?}"))))
            .collect::<Result<Vec<_>, _>>()?;
        table.push(row);
    }
    Ok(GroupSpec::CayleyTable(table))
}

/// Permutation generators file: one image list per line, e.g. `p: 2 0 1`.
fn parse_perms_file(text: &str) -> Result<GroupSpec, Error> {
    let generators = text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty())
        .map(Permutation::parse)
        .collect::<Result<Vec<_>, _>>()?;
    if generators.is_empty() {
        return Err(Error::BadGroupSpec("no permutations in file".into()));
    }
    let degree = generators[0].degree();
    Ok(GroupSpec::PermGenerators { degree, generators })
}

fn run(cli: Cli) -> Result<ExitCode, Error> {
    match cli.command {
        Command::Boost { input, to, iterations } => {
            let g = input.read()?;
            if iterations == 0 {
                print!("{}", emit(&g, to));
                return Ok(ExitCode::SUCCESS);
            }
            let pre = iterate_boost(&g, iterations - 1)?;
            let (boosted, cert) = clique_boost(&pre)?;
            print!("{}", emit(&boosted, to));
            print!("{}", cert.to_text());
            Ok(ExitCode::SUCCESS)
        }
        Command::Realize { group, to } => {
            let spec = parse_group_spec(&group)?;
            let g = realize_group(&spec)?;
            print!("{}", emit(&g, to));
            Ok(ExitCode::SUCCESS)
        }
        Command::Family { group, clique, to, kv } => {
            let spec = parse_group_spec(&group)?;
            let (g, report) = unbounded_family(&spec, clique)?;
            print!("{}", emit(&g, to));
            if kv {
                print!("{}", report.to_kv());
            } else {
                println!("{report}");
            }
            Ok(if report.verdict {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
        Command::Aut { input } => {
            let g = input.read()?;
            let aut = aut_group(&g)?;
            for p in &aut.generators {
                println!("{p}");
            }
            println!("order={}", aut.order);
            Ok(ExitCode::SUCCESS)
        }
        Command::Omega { input } => {
            let g = input.read()?;
            println!("{}", max_clique(&g).len());
            Ok(ExitCode::SUCCESS)
        }
        Command::Chi { input } => {
            let g = input.read()?;
            println!("{}", chromatic_number(&g)?);
            Ok(ExitCode::SUCCESS)
        }
        Command::Report { input, kv } => {
            let g = input.read()?;
            let r = invariant_report(&g)?;
            if kv {
                print!("{}", r.to_kv());
            } else {
                println!("{r}");
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::VerifyBoost { input, kv } => {
            let g = input.read()?;
            if g.n() % 2 != 0 {
                eprintln!("verification failed: odd vertex count {} cannot be a boost", g.n());
                return Ok(ExitCode::from(1));
            }
            let n = g.n() / 2;
            let base = g.induced_subgraph(&VertexSet::range(0, n))?;
            let cert = BoostCertificate::for_base(n);
            let report = verify_boost(&base, &g, &cert)?;
            if kv {
                print!("{}", report.to_kv());
            } else {
                println!("{report}");
            }
            Ok(if report.verdict {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
        Command::Convert { input, to } => {
            let g = input.read()?;
            print!("{}", emit(&g, to));
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(Error::ValidationFailed(msg)) => {
            eprintln!("verification failed: {msg}");
            ExitCode::from(1)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
