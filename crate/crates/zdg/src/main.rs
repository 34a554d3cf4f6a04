use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;
use std::str::FromStr;

use anyhow::{Context, Result};
use clap::{Args, Parser, Subcommand};
use zdg::atlas::ingest_atlas_index;
use zdg::fixtures::{default_pattern, load_fixtures, run_fixture, TableCheck};
use zdg::pipeline::{classify_order, records, write_jsonl, write_report, Summary};
use zdg::table_text::{format_table, numeric_labels, parse_table};
use zdg_core::conditions::check_all_conditions;
use zdg_core::enumeration::MAX_ENUMERATION_ORDER;
use zdg_core::{find_realization, parse_graph6, verify_witness, Budget, ClassifyOptions, Graph, WitnessCertificate};

/// Classify small graphs as zero-divisor graphs of commutative semigroups.
///
/// Vertices are numbered 1..n in graph6 order. Exit status is 0 on success,
/// 1 on a negative or inconclusive verdict, 2 on usage or input errors.
#[derive(Parser)]
#[command(name = "zdg", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Classify every graph on n vertices into a JSONL report.
    Classify {
        #[arg(long, value_parser = clap::value_parser!(u8).range(1..=MAX_ENUMERATION_ORDER as i64))]
        n: u8,
        /// Report path; certificates go to `<stem>.certs/` beside it.
        /// Without it the report goes to stdout and no certificates are kept.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, default_value_t = default_jobs())]
        jobs: usize,
        /// `<atlas_id> <graph6>` lines used to tag records.
        #[arg(long)]
        atlas_index: Option<PathBuf>,
        #[command(flatten)]
        solve: SolveArgs,
    },
    /// Search for a multiplication table realizing one graph.
    Realize {
        #[arg(long)]
        graph: String,
        #[arg(long, default_value = "unlimited")]
        budget: BudgetArg,
    },
    /// Evaluate the necessary conditions on one graph.
    CheckStar {
        #[arg(long)]
        graph: String,
    },
    /// Check that a table file witnesses a graph.
    Verify {
        #[arg(long)]
        graph: String,
        #[arg(long)]
        table: PathBuf,
    },
    /// Classify the transcribed example graphs and compare with their verdicts.
    Fixtures {
        #[arg(long)]
        fixtures: Option<String>,
        #[command(flatten)]
        solve: SolveArgs,
    },
}

#[derive(Args)]
struct SolveArgs {
    /// Decide every graph with the exhaustive search alone (no family
    /// recognizers, no twin reductions).
    #[arg(long)]
    no_patterns: bool,
    /// Search nodes per graph, or `unlimited`.
    #[arg(long, default_value = "unlimited")]
    budget: BudgetArg,
}

impl SolveArgs {
    fn options(&self) -> ClassifyOptions {
        let base = if self.no_patterns { ClassifyOptions::search_only() } else { ClassifyOptions::default() };
        ClassifyOptions { budget: self.budget.0, ..base }
    }
}

#[derive(Clone, Copy)]
struct BudgetArg(Budget);

impl FromStr for BudgetArg {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        if s == "unlimited" {
            return Ok(BudgetArg(Budget::Unlimited));
        }
        s.parse()
            .map(|n| BudgetArg(Budget::Nodes(n)))
            .map_err(|_| format!("expected a node count or `unlimited`, got {s:?}"))
    }
}

fn default_jobs() -> usize {
    std::thread::available_parallelism().map_or(1, |n| n.get())
}

/// Errors that are the caller's fault map to exit status 2.
struct Usage(anyhow::Error);

impl<E: Into<anyhow::Error>> From<E> for Usage {
    fn from(e: E) -> Self {
        Usage(e.into())
    }
}

fn parse_graph(text: &str) -> Result<Graph, Usage> {
    Ok(parse_graph6(text.trim()).with_context(|| format!("bad graph6 {text:?}"))?)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Usage(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn run(command: Command) -> Result<bool, Usage> {
    match command {
        Command::Classify { n, out, jobs, atlas_index, solve } => {
            let atlas = atlas_index.map(|p| ingest_atlas_index(&p)).transpose()?;
            let results = classify_order(n as usize, &solve.options(), jobs)?;
            let summary = match &out {
                Some(path) => write_report(path, &results, atlas.as_ref())?,
                None => {
                    let stdout = io::stdout();
                    let mut lock = stdout.lock();
                    write_jsonl(&mut lock, &records(&results, atlas.as_ref(), None))?;
                    lock.flush()?;
                    Summary::of(&results)
                }
            };
            eprintln!("n={n}: {summary}");
            Ok(summary.inconclusive == 0)
        }
        Command::Realize { graph, budget } => {
            let g = parse_graph(&graph)?;
            if !g.is_connected() {
                println!("DISCONNECTED (not a zero-divisor graph)");
                return Ok(false);
            }
            match find_realization(&g, budget.0)? {
                WitnessCertificate::Sat(t) => {
                    println!("SAT");
                    print!("{}", format_table(&t, &numeric_labels(g.n())));
                    Ok(true)
                }
                WitnessCertificate::Unsat { nodes_explored, exhaustive: true } => {
                    println!("UNSAT (exhaustive, {nodes_explored} nodes)");
                    Ok(false)
                }
                WitnessCertificate::Unsat { nodes_explored, exhaustive: false } => {
                    println!("INCONCLUSIVE (budget exhausted after {nodes_explored} nodes)");
                    Ok(false)
                }
            }
        }
        Command::CheckStar { graph } => {
            let g = parse_graph(&graph)?;
            let r = check_all_conditions(&g);
            println!("connected={} diameter3={} core_ok={} star_ok={}", r.connected, r.diameter3, r.core_ok, r.star_ok);
            if let Some((x, y)) = r.failing_pair {
                println!("failing pair: {} {}", x + 1, y + 1);
            }
            Ok(r.star_ok)
        }
        Command::Verify { graph, table } => {
            let g = parse_graph(&graph)?;
            let text = fs::read_to_string(&table).with_context(|| format!("reading {}", table.display()))?;
            let t = parse_table(&text, &numeric_labels(g.n())).with_context(|| table.display().to_string())?;
            match verify_witness(&g, &t) {
                Ok(()) => {
                    println!("OK");
                    Ok(true)
                }
                Err(e) => {
                    println!("FAIL: {e}");
                    Ok(false)
                }
            }
        }
        Command::Fixtures { fixtures, solve } => {
            let pattern = fixtures.unwrap_or_else(default_pattern);
            let entries = load_fixtures(&pattern)?;
            if entries.is_empty() {
                return Err(Usage(anyhow::anyhow!("no fixtures match {pattern}")));
            }
            let options = solve.options();
            let mut failed = 0;
            for f in &entries {
                let out = run_fixture(f, &options);
                let got = out.got.map_or("inconclusive".to_string(), |k| k.to_string());
                let table = match &out.table {
                    TableCheck::Absent => String::new(),
                    TableCheck::Verified => "; table verifies".to_string(),
                    TableCheck::Discrepancy(why) => format!("; table discrepancy: {why}"),
                };
                let status = if out.passed() { "ok" } else { "FAIL" };
                println!("{status:4} {:32} expected {:16} got {got} via {}{table}", out.name, out.expected, out.method);
                if !out.passed() {
                    failed += 1;
                }
            }
            println!("{} fixtures, {} passed, {failed} failed", entries.len(), entries.len() - failed);
            Ok(failed == 0)
        }
    }
}
