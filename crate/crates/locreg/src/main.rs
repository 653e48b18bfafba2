//! Command-line surface. All data output goes to stdout in the declared
//! format (JSON unless stated otherwise); diagnostics go to stderr. Exit
//! codes: 0 success, 1 domain error, 2 usage error.

use std::io::{BufRead, Write};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use locreg::existence;
use locreg::graph::KtParameters;
use locreg::groups::catalog::{catalog, CATALOG_PARAMETERS};
use locreg::search::{enumerate, SearchMode, SearchTask};
use locreg::{graph6, verify};

#[derive(Parser)]
#[command(
    name = "locreg",
    about = "Construct, verify, classify, and search (k,t)-regular graphs",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Certify each graph6 line of FILE ("-" for stdin).
    Check {
        file: String,
    },
    /// Build a recipe such as "lex(K(4),2)" and print graph6 + certification.
    Construct {
        recipe: String,
        /// Print only the graph6 string.
        #[arg(long)]
        graph6: bool,
    },
    /// Print a named sporadic graph, or list the catalog.
    Catalog {
        name: Option<String>,
        #[arg(long)]
        list: bool,
        /// Print only the graph6 string.
        #[arg(long)]
        graph6: bool,
    },
    /// Existence verdict for the parameter pair (K, T).
    Decide {
        k: u32,
        t: u32,
    },
    /// Reproduce the small-parameter existence table.
    Table {
        #[arg(long, default_value_t = 16)]
        kmax: u32,
        #[arg(long, default_value_t = 14)]
        tmax: u32,
        #[arg(long, value_enum, default_value_t = TableFormat::Json)]
        format: TableFormat,
    },
    /// Exhaustively enumerate connected (K,T)-regular graphs up to --max-n.
    Search {
        k: u32,
        t: u32,
        #[arg(long)]
        max_n: usize,
        #[arg(long, value_enum, default_value_t = Mode::All)]
        mode: Mode,
        /// Worker count (0 = all cores).
        #[arg(long, default_value_t = 0)]
        jobs: usize,
        /// Search-tree node budget (default: LOCREG_BUDGET env var, else unbounded).
        #[arg(long)]
        budget: Option<u64>,
        /// Write witnesses (one graph6 line each) to this file.
        #[arg(long)]
        out: Option<String>,
    },
    /// Run a quantified property suite.
    Verify {
        #[arg(long)]
        suite: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum TableFormat {
    Json,
    Md,
    Csv,
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    All,
    First,
}

fn main() -> ExitCode {
    match run() {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}

fn run() -> locreg::Result<ExitCode> {
    match Cli::parse().command {
        Command::Check { file } => check(&file),
        Command::Construct { recipe, graph6 } => construct(&recipe, graph6),
        Command::Catalog { name, list, graph6 } => catalog_cmd(name.as_deref(), list, graph6),
        Command::Decide { k, t } => {
            let verdict = existence::decide(k, t);
            let mut body = verdict.to_json();
            body["k"] = json!(k);
            body["t"] = json!(t);
            println!("{body}");
            Ok(ExitCode::SUCCESS)
        }
        Command::Table { kmax, tmax, format } => table(kmax, tmax, format),
        Command::Search {
            k,
            t,
            max_n,
            mode,
            jobs,
            budget,
            out,
        } => search(k, t, max_n, mode, jobs, budget, out.as_deref()),
        Command::Verify { suite, seed } => {
            let results = verify::run_suite(&suite, seed)?;
            println!("{}", verify::suite_json(&results));
            if results.iter().all(|r| r.passed()) {
                Ok(ExitCode::SUCCESS)
            } else {
                Ok(ExitCode::from(1))
            }
        }
    }
}

fn check(file: &str) -> locreg::Result<ExitCode> {
    let reader: Box<dyn BufRead> = if file == "-" {
        Box::new(std::io::stdin().lock())
    } else {
        Box::new(std::io::BufReader::new(std::fs::File::open(file)?))
    };
    for (i, line) in reader.lines().enumerate() {
        let line = line?;
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        let g = graph6::decode(line)?;
        println!(
            "{}",
            json!({
                "line": i + 1,
                "graph6": line,
                "n": g.n(),
                "report": g.certify(),
            })
        );
    }
    Ok(ExitCode::SUCCESS)
}

fn construct(text: &str, graph6_only: bool) -> locreg::Result<ExitCode> {
    let recipe = existence::parse_recipe(text)?;
    let g = existence::build(&recipe)?;
    let encoded = graph6::encode(&g);
    if graph6_only {
        println!("{encoded}");
    } else {
        println!(
            "{}",
            json!({
                "recipe": recipe.to_string(),
                "graph6": encoded,
                "n": g.n(),
                "report": g.certify(),
            })
        );
    }
    Ok(ExitCode::SUCCESS)
}

fn catalog_cmd(name: Option<&str>, list: bool, graph6_only: bool) -> locreg::Result<ExitCode> {
    if list || name.is_none() {
        let entries: Vec<_> = CATALOG_PARAMETERS
            .iter()
            .map(|&(name, (k, t), n)| json!({"name": name, "k": k, "t": t, "n": n}))
            .collect();
        println!("{}", json!(entries));
        return Ok(ExitCode::SUCCESS);
    }
    let name = name.unwrap();
    let g = catalog(name)?;
    let encoded = graph6::encode(&g);
    if graph6_only {
        println!("{encoded}");
    } else {
        println!(
            "{}",
            json!({
                "name": name,
                "graph6": encoded,
                "n": g.n(),
                "report": g.certify(),
            })
        );
    }
    Ok(ExitCode::SUCCESS)
}

fn table(kmax: u32, tmax: u32, format: TableFormat) -> locreg::Result<ExitCode> {
    let cells = existence::reproduce_table(kmax, tmax);
    match format {
        TableFormat::Json => {
            let rows: Vec<_> = cells
                .iter()
                .map(|c| {
                    let mut body = c.verdict.to_json();
                    body["k"] = json!(c.k);
                    body["t"] = json!(c.t);
                    body["symbol"] = json!(c.symbol());
                    body
                })
                .collect();
            println!("{}", json!(rows));
        }
        TableFormat::Md | TableFormat::Csv => {
            let cell_at = |k: u32, t: u32| {
                cells
                    .iter()
                    .find(|c| c.k == k && c.t == t)
                    .expect("cell present")
                    .symbol()
            };
            match format {
                TableFormat::Md => {
                    let header: Vec<String> = std::iter::once("k\\t".to_string())
                        .chain((0..=tmax).map(|t| t.to_string()))
                        .collect();
                    println!("| {} |", header.join(" | "));
                    println!("|{}|", vec!["---"; header.len()].join("|"));
                    for k in 1..=kmax {
                        let row: Vec<String> = std::iter::once(k.to_string())
                            .chain((0..=tmax).map(|t| cell_at(k, t)))
                            .collect();
                        println!("| {} |", row.join(" | "));
                    }
                }
                _ => {
                    let header: Vec<String> = std::iter::once("k/t".to_string())
                        .chain((0..=tmax).map(|t| t.to_string()))
                        .collect();
                    println!("{}", header.join(","));
                    for k in 1..=kmax {
                        let row: Vec<String> = std::iter::once(k.to_string())
                            .chain((0..=tmax).map(|t| cell_at(k, t)))
                            .collect();
                        println!("{}", row.join(","));
                    }
                }
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn search(
    k: u32,
    t: u32,
    max_n: usize,
    mode: Mode,
    jobs: usize,
    budget: Option<u64>,
    out: Option<&str>,
) -> locreg::Result<ExitCode> {
    let budget = budget.or_else(|| {
        std::env::var("LOCREG_BUDGET")
            .ok()
            .and_then(|v| v.parse().ok())
    });
    let outcome = enumerate(&SearchTask {
        target: KtParameters::new(k, t),
        max_n,
        mode: match mode {
            Mode::All => SearchMode::EnumerateAll,
            Mode::First => SearchMode::FirstWitness,
        },
        jobs,
        budget,
    })?;
    let lines: Vec<String> = outcome
        .witnesses
        .iter()
        .map(|(_, g)| graph6::encode(g))
        .collect();
    if let Some(path) = out {
        let mut f = std::fs::File::create(path)?;
        for line in &lines {
            writeln!(f, "{line}")?;
        }
    } else {
        for line in &lines {
            println!("{line}");
        }
    }
    println!(
        "{}",
        json!({
            "k": k,
            "t": t,
            "max_n": max_n,
            "witnesses": lines.len(),
            "states_explored": outcome.states_explored,
            "budget_exhausted": outcome.budget_exhausted,
            "max_n_reached": outcome.max_n_reached,
        })
    );
    Ok(ExitCode::SUCCESS)
}
