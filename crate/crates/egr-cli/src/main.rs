//! Command-line surface for the edge-girth-regular toolkit.
//!
//! Graphs travel as graph6 lines on stdin/stdout; diagnostics and progress
//! go to stderr. Non-graph6 stdout lines are prefixed with `#` so output
//! can always be piped back in.

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use egr::canon::DEFAULT_STORE_BYTES;
use egr::check::{lambda_profile, verify_egr, LambdaProfile, ParamTuple};
use egr::generate::{generate_all, GenerateError, GenerationConfig};
use egr::girth::per_edge_ngc;
use egr::graph::{parse_graph6, write_graph6, Graph};
use egr::sweep::{sweep, SweepError, SweepOutcome};
use std::io::{BufRead, Write};
use std::process::ExitCode;

/// Exit code when a sweep only established a lower bound.
const EXIT_LOWER_BOUND_ONLY: u8 = 10;
/// Exit code when the visited store overflowed.
const EXIT_CAPACITY: u8 = 20;

#[derive(Parser)]
#[command(name = "egr", about = "Edge-girth-regular graph search and verification", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Variant {
    /// Two-phase search with the full valid-pair test.
    Default,
    /// Skip the leaf-leaf phase.
    NoPhase1,
    /// Drop the lambda clause from the valid-pair test.
    LambdaFree,
}

#[derive(Args)]
struct EngineOpts {
    #[arg(long, value_enum, default_value = "default")]
    variant: Variant,
    /// Stop after this many graphs.
    #[arg(long)]
    max_outputs: Option<usize>,
    /// Byte budget for canonical keys in the visited store.
    #[arg(long, default_value_t = DEFAULT_STORE_BYTES)]
    max_store_bytes: usize,
    /// Cross-check incremental pair validity against recomputation (slow).
    #[arg(long)]
    oracle_verify: bool,
    /// Progress notes on stderr.
    #[arg(long)]
    progress: bool,
}

impl EngineOpts {
    fn config(&self, regular_mode: bool) -> GenerationConfig {
        GenerationConfig {
            skip_phase_one: self.variant == Variant::NoPhase1,
            lambda_unbounded_validity: self.variant == Variant::LambdaFree,
            regular_mode,
            max_outputs: self.max_outputs,
            store_bytes: self.max_store_bytes,
            oracle_verify: self.oracle_verify,
            progress: self.progress,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Sweep orders upward to determine n(k, g, lambda) and its extremal
    /// graphs.
    Search {
        k: usize,
        g: u32,
        lambda: u64,
        /// Largest order to try.
        #[arg(long)]
        max_order: usize,
        /// Generate this many orders concurrently.
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        #[command(flatten)]
        engine: EngineOpts,
    },
    /// Generate all egr(v, k, g, lambda) graphs (or, with --regular, all
    /// connected k-regular graphs of girth at least g on v vertices).
    Generate {
        v: usize,
        k: usize,
        g: u32,
        /// Required unless --regular is given.
        lambda: Option<u64>,
        /// Enumerate k-regular graphs of girth >= g instead; lambda is
        /// ignored.
        #[arg(long)]
        regular: bool,
        #[command(flatten)]
        engine: EngineOpts,
    },
    /// Read graph6 lines and annotate the edge-girth-regular ones with
    /// their (v, k, g, lambda).
    Filter {
        /// Input file; stdin when absent.
        file: Option<std::path::PathBuf>,
    },
    /// Check one graph6 line against parameters; exits nonzero on failure.
    Verify {
        graph6: String,
        v: usize,
        k: usize,
        g: u32,
        lambda: u64,
    },
    /// Per-edge girth-cycle report for one graph6 line.
    CountCycles { graph6: String },
}

fn main() -> ExitCode {
    match run() {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(2)
        }
    }
}

fn run() -> Result<ExitCode> {
    match Cli::parse().command {
        Command::Search {
            k,
            g,
            lambda,
            max_order,
            jobs,
            engine,
        } => cmd_search(k, g, lambda, max_order, jobs, &engine.config(false)),
        Command::Generate {
            v,
            k,
            g,
            lambda,
            regular,
            engine,
        } => {
            let lambda = match (lambda, regular) {
                (Some(l), _) => l,
                (None, true) => 1, // ignored in regular mode
                (None, false) => bail!("lambda is required unless --regular is given"),
            };
            cmd_generate(v, k, g, lambda, &engine.config(regular))
        }
        Command::Filter { file } => cmd_filter(file.as_deref()),
        Command::Verify {
            graph6,
            v,
            k,
            g,
            lambda,
        } => cmd_verify(&graph6, v, k, g, lambda),
        Command::CountCycles { graph6 } => cmd_count_cycles(&graph6),
    }
}

fn cmd_search(
    k: usize,
    g: u32,
    lambda: u64,
    max_order: usize,
    jobs: usize,
    cfg: &GenerationConfig,
) -> Result<ExitCode> {
    let p = ParamTuple::without_order(k, g, lambda);
    let outcome = match sweep(&p, max_order, cfg, jobs) {
        Ok(outcome) => outcome,
        Err(SweepError::Params(e)) => return Err(anyhow!(e)),
        Err(SweepError::Generate(e)) => return Err(anyhow!(e)),
    };
    print_outcome(&outcome, max_order)
}

fn print_outcome(outcome: &SweepOutcome, max_order: usize) -> Result<ExitCode> {
    let out = std::io::stdout();
    let mut out = out.lock();
    let (k, g, lambda) = (outcome.k, outcome.g, outcome.lambda);
    for t in &outcome.tested {
        writeln!(
            out,
            "# tested v={}: {} graph(s), {} nodes, {:.2}s",
            t.v,
            t.count,
            t.nodes,
            t.elapsed.as_secs_f64()
        )?;
    }
    if let Some((v, abort)) = &outcome.aborted {
        writeln!(out, "# aborted at v={v}: {abort}")?;
        writeln!(
            out,
            "# n({k},{g},{lambda}) >= {} (orders below {v} exhausted; {v} unreliable)",
            outcome.proven_lower
        )?;
        return Ok(ExitCode::from(EXIT_CAPACITY));
    }
    match outcome.best_upper {
        Some((v, count)) => {
            writeln!(out, "# n({k},{g},{lambda}) = {v} ({count} graph(s))")?;
            for graph in &outcome.extremal {
                writeln!(out, "{}", write_graph6(graph))?;
            }
            Ok(ExitCode::SUCCESS)
        }
        None => {
            writeln!(
                out,
                "# n({k},{g},{lambda}) >= {} (exhausted feasible orders <= {max_order})",
                outcome.proven_lower
            )?;
            Ok(ExitCode::from(EXIT_LOWER_BOUND_ONLY))
        }
    }
}

fn cmd_generate(v: usize, k: usize, g: u32, lambda: u64, cfg: &GenerationConfig) -> Result<ExitCode> {
    let out = std::io::stdout();
    let mut out = out.lock();
    let mut sink = |graph: &Graph| {
        writeln!(out, "{}", write_graph6(graph)).expect("stdout write");
    };
    match generate_all(&ParamTuple::new(v, k, g, lambda), cfg, &mut sink) {
        Ok(stats) => {
            eprintln!(
                "{} graph(s), {} nodes, {} stored classes{}",
                stats.emitted,
                stats.nodes,
                stats.store_keys,
                if stats.completed { "" } else { " (output cap hit)" }
            );
            Ok(ExitCode::SUCCESS)
        }
        Err(GenerateError::Capacity { capacity, stats }) => {
            eprintln!("aborted: {capacity} ({} nodes)", stats.nodes);
            Ok(ExitCode::from(EXIT_CAPACITY))
        }
        Err(e) => Err(anyhow!(e)),
    }
}

fn cmd_filter(file: Option<&std::path::Path>) -> Result<ExitCode> {
    let reader: Box<dyn BufRead> = match file {
        Some(path) => Box::new(std::io::BufReader::new(
            std::fs::File::open(path).with_context(|| format!("open {}", path.display()))?,
        )),
        None => Box::new(std::io::stdin().lock()),
    };
    let out = std::io::stdout();
    let mut out = out.lock();
    for (lineno, line) in reader.lines().enumerate() {
        let line = line?;
        if line.trim().is_empty() {
            continue;
        }
        let graph = match parse_graph6(&line) {
            Ok(g) => g,
            Err(e) => {
                eprintln!("line {}: {e}", lineno + 1);
                continue;
            }
        };
        let Some(k) = graph.regular_degree() else {
            continue;
        };
        if k < 3 || !graph.is_connected() {
            continue;
        }
        let Ok((girth, LambdaProfile::Uniform(lambda))) = lambda_profile(&graph) else {
            continue;
        };
        let p = ParamTuple::new(graph.order(), k, girth, lambda);
        if verify_egr(&graph, &p).is_ok() {
            writeln!(out, "{}\t{},{},{},{}", line.trim_end(), graph.order(), k, girth, lambda)?;
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_verify(graph6: &str, v: usize, k: usize, g: u32, lambda: u64) -> Result<ExitCode> {
    let graph = parse_graph6(graph6).map_err(|e| anyhow!("graph6: {e}"))?;
    let p = ParamTuple::new(v, k, g, lambda);
    match verify_egr(&graph, &p) {
        Ok(()) => {
            println!("PASS egr({v},{k},{g},{lambda})");
            Ok(ExitCode::SUCCESS)
        }
        Err(violation) => {
            println!("FAIL egr({v},{k},{g},{lambda}): {violation}");
            Ok(ExitCode::FAILURE)
        }
    }
}

fn cmd_count_cycles(graph6: &str) -> Result<ExitCode> {
    let graph = parse_graph6(graph6).map_err(|e| anyhow!("graph6: {e}"))?;
    let Some((girth, counts)) = per_edge_ngc(&graph) else {
        bail!("graph is acyclic; no girth cycles");
    };
    let out = std::io::stdout();
    let mut out = out.lock();
    writeln!(out, "girth {girth}")?;
    for (e, c) in &counts {
        writeln!(out, "{} {} {}", e.u(), e.w(), c)?;
    }
    for u in graph.vertices() {
        let sum: u64 = counts
            .iter()
            .filter(|(e, _)| e.u() == u || e.w() == u)
            .map(|(_, c)| c)
            .sum();
        writeln!(out, "vertex {u} incident-sum {sum}")?;
    }
    let total: u64 = counts.iter().map(|(_, c)| c).sum();
    debug_assert_eq!(total % girth as u64, 0);
    writeln!(out, "total-girth-cycles {}", total / girth as u64)?;
    Ok(ExitCode::SUCCESS)
}
