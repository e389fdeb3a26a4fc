//! `oddchrome`: odd chromatic index of subdivisions of odd multigraphs.
//!
//! Exit codes: 0 success, 1 verification or agreement failure, 2 input
//! outside the supported domain, 3 search budget exhausted.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Parser, Subcommand};

use oddchrome::census::{self, Runner};
use oddchrome::coloring::{verify_odd, violations};
use oddchrome::oracle::{self, SearchConfig, SearchOutcome};
use oddchrome::{classifier, family, io, multigraph, Error, MultiGraph};

#[derive(Parser)]
#[command(name = "oddchrome", version, about = "Odd edge-colorings of subdivisions of odd multigraphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the odd chromatic index and the deciding case.
    Classify { file: PathBuf },
    /// Print an optimal odd coloring, one `<edge> <u> <v> <color>` line per edge.
    Color {
        file: PathBuf,
        /// Also write the colored graph as DOT.
        #[arg(long)]
        dot: Option<PathBuf>,
    },
    /// Check a coloring file of `<edge> <color>` lines.
    Verify {
        file: PathBuf,
        #[arg(long)]
        colors: PathBuf,
    },
    /// Exact odd chromatic index by exhaustive search (any multigraph).
    Oracle {
        file: PathBuf,
        #[arg(long, default_value_t = 6)]
        max_k: u32,
        #[arg(long, default_value_t = 100_000_000)]
        budget: u64,
    },
    /// For index 4: an edge whose removal leaves an odd 3-colorable graph.
    Witness { file: PathBuf },
    /// Generate a graph as MEL.
    Gen {
        #[command(subcommand)]
        kind: GenKind,
    },
    /// Classifier against oracle on every connected member of S up to M edges.
    Census {
        #[arg(long)]
        max_m: usize,
    },
}

#[derive(Subcommand)]
enum GenKind {
    /// Three vertices joined by bouquets of sizes a, b, c.
    Shannon { a: usize, b: usize, c: usize },
    /// Random member of family F.
    F {
        #[arg(long)]
        seed: u64,
        #[arg(long)]
        budget: usize,
    },
    /// Random connected member of S.
    S {
        #[arg(long)]
        seed: u64,
        #[arg(long)]
        n: usize,
    },
}

/// Failure carrying its exit code.
struct Exit(u8, String);

fn exit_code(e: &anyhow::Error) -> u8 {
    match e.downcast_ref::<Error>() {
        Some(Error::BudgetExhausted(_)) => 3,
        Some(Error::ConstructionDivergence(_)) => 1,
        _ => 2,
    }
}

fn read_graph(path: &Path) -> Result<MultiGraph> {
    let text = if path.as_os_str() == "-" {
        std::io::read_to_string(std::io::stdin()).context("reading stdin")?
    } else {
        fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?
    };
    let g6 = matches!(path.extension().and_then(|s| s.to_str()), Some("g6" | "graph6"));
    let g = if g6 { io::parse_graph6(&text)? } else { io::parse_mel(&text)? };
    Ok(g)
}

fn run(cli: Cli) -> Result<Option<Exit>> {
    match cli.command {
        Command::Classify { file } => {
            let g = read_graph(&file)?;
            let r = classifier::classify(&g)?;
            println!("chi={} case={}", r.chi, r.case);
        }
        Command::Color { file, dot } => {
            let g = read_graph(&file)?;
            let c = classifier::color_optimal(&g)?;
            if !verify_odd(&g, &c)? {
                return Ok(Some(Exit(1, "internal error: coloring failed verification".into())));
            }
            print!("{}", io::coloring_lines(&g, &c));
            if let Some(path) = dot {
                fs::write(&path, io::emit_dot(&g, Some(&c))).with_context(|| format!("writing {}", path.display()))?;
            }
        }
        Command::Verify { file, colors } => {
            let g = read_graph(&file)?;
            let text = fs::read_to_string(&colors).with_context(|| format!("reading {}", colors.display()))?;
            let c = io::parse_colors(&text, g.m())?;
            let bad = violations(&g, &c)?;
            if bad.is_empty() {
                println!("ok");
            } else {
                for v in &bad {
                    println!("vertex {} sees color {} {} times", v.vertex, v.color, v.count);
                }
                return Ok(Some(Exit(1, "not an odd coloring".into())));
            }
        }
        Command::Oracle { file, max_k, budget } => {
            let g = read_graph(&file)?;
            let cfg = SearchConfig {
                max_k,
                node_budget: budget,
                ..SearchConfig::default()
            };
            if g.m() == 0 {
                println!("chi=0");
                return Ok(None);
            }
            for k in 1..=max_k {
                match oracle::search_k(&g, k, &cfg)? {
                    SearchOutcome::Found(_) => {
                        println!("chi={k}");
                        return Ok(None);
                    }
                    SearchOutcome::Absent => {}
                    SearchOutcome::Inconclusive => {
                        println!("inconclusive");
                        return Ok(Some(Exit(3, format!("node budget of {budget} exhausted at k = {k}"))));
                    }
                }
            }
            println!("chi>{max_k}");
        }
        Command::Witness { file } => {
            let g = read_graph(&file)?;
            let w = classifier::witness_edge(&g)?;
            println!("edge={}", w.edge);
            let minus = g.without_edges(&[w.edge]);
            for (i, o) in minus.edge_origin.iter().enumerate() {
                let e = o.expect("spanning subgraph keeps origins");
                let (u, v) = g.endpoints(e);
                println!("{e} {u} {v} {}", w.coloring.color(i));
            }
        }
        Command::Gen { kind } => {
            let g = match kind {
                GenKind::Shannon { a, b, c } => multigraph::named::shannon(a, b, c),
                GenKind::F { seed, budget } => family::gen_f(seed, budget)?,
                GenKind::S { seed, n } => family::gen_s(seed, n)?,
            };
            print!("{}", io::serialize_mel(&g));
        }
        Command::Census { max_m } => {
            let report = census::census(max_m, Runner::from_env())?;
            print!("{}", report.render());
            if !report.is_clean() {
                return Ok(Some(Exit(1, "classifier and oracle disagree".into())));
            }
        }
    }
    Ok(None)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(None) => ExitCode::SUCCESS,
        Ok(Some(Exit(code, msg))) => {
            eprintln!("oddchrome: {msg}");
            ExitCode::from(code)
        }
        Err(e) => {
            eprintln!("oddchrome: {e:#}");
            ExitCode::from(exit_code(&e))
        }
    }
}
