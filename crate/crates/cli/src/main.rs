use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use bicirc::census::{self, CensusJob, Parity};
use bicirc::circulant::{self, CirculantSymbol};
use bicirc::coset::{self, SabidussiModel};
use bicirc::group::DEFAULT_ELEMENT_CAP;
use bicirc::{graph6, named, s5, Graph};
use clap::{Parser, Subcommand, ValueEnum};
use log::info;

#[derive(Parser)]
#[command(name = "bicirc", version, about = "Edge-transitive bicirculant census and group tools")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum OutFormat {
    Csv,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum GraphFormat {
    Graph6,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Census of edge-transitive graphs in F(d)
    Search {
        #[arg(long)]
        d: usize,
        #[arg(long, default_value_t = 50)]
        max_order: usize,
        /// Only orders 2n with n odd
        #[arg(long)]
        twice_odd: bool,
        /// Include disconnected symbols
        #[arg(long)]
        include_disconnected: bool,
        /// Worker threads (default: all cores)
        #[arg(long)]
        jobs: Option<usize>,
        #[arg(long, default_value_t = DEFAULT_ELEMENT_CAP)]
        element_cap: usize,
        #[arg(long, value_enum, default_value = "csv")]
        out: OutFormat,
        /// Write to this file instead of stdout
        #[arg(long)]
        output: Option<PathBuf>,
        /// Print one graph6 line per class instead of the table
        #[arg(long)]
        graph6: bool,
        /// Exit 0 even when some rows are undecided
        #[arg(long)]
        lenient: bool,
    },
    /// Symmetry report for one graph (graph6 or edge-list JSON; '-' reads stdin)
    Analyze {
        input: Option<String>,
        /// Analyse a named graph instead of reading input
        #[arg(long)]
        named: Option<String>,
        #[arg(long, default_value_t = DEFAULT_ELEMENT_CAP)]
        element_cap: usize,
    },
    /// The three A5/S5 checks over all 24 five-cycles
    VerifyS5 {
        /// Full per-row JSON report
        #[arg(long)]
        json: bool,
    },
    /// Structural cases of a connected arc-transitive circulant, e.g. `6 1,2,4,5`
    ClassifyCirculant {
        n: usize,
        s: String,
        #[arg(long)]
        json: bool,
    },
    /// Case table for every connected arc-transitive circulant up to n
    CirculantCoverage {
        #[arg(long, default_value_t = 30)]
        max_n: usize,
        #[arg(long, value_enum, default_value = "csv")]
        out: OutFormat,
    },
    /// Rebuild a graph as a coset graph of its automorphism group
    CosetRoundtrip {
        #[arg(long)]
        graph: String,
        #[arg(long, default_value_t = DEFAULT_ELEMENT_CAP)]
        element_cap: usize,
    },
    /// Print a named graph
    Named {
        name: String,
        #[arg(long, value_enum, default_value = "graph6")]
        format: GraphFormat,
    },
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn emit(output: &Option<PathBuf>, text: &str) -> Result<()> {
    match output {
        Some(path) => fs::write(path, text).with_context(|| format!("writing {}", path.display())),
        None => {
            io::stdout().write_all(text.as_bytes())?;
            Ok(())
        }
    }
}

fn to_csv<T: serde::Serialize>(rows: &[T]) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    for r in rows {
        w.serialize(r)?;
    }
    Ok(String::from_utf8(w.into_inner()?)?)
}

fn read_graph(input: &str) -> Result<Graph> {
    let text = if input == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s)?;
        s
    } else {
        fs::read_to_string(input).with_context(|| format!("reading {input}"))?
    };
    let graph = if text.trim_start().starts_with('{') {
        Graph::from_json(&text)?
    } else {
        graph6::decode(text.trim_end())?
    };
    Ok(graph)
}

fn run(cli: Cli) -> Result<ExitCode> {
    match cli.command {
        Command::Search {
            d,
            max_order,
            twice_odd,
            include_disconnected,
            jobs,
            element_cap,
            out,
            output,
            graph6,
            lenient,
        } => {
            if let Some(j) = jobs {
                rayon::ThreadPoolBuilder::new().num_threads(j).build_global()?;
            }
            let parity = if twice_odd { Parity::TwiceOdd } else { Parity::All };
            let mut job = CensusJob::new(d, max_order, parity)?;
            job.connected_only = !include_disconnected;
            job.element_cap = element_cap;
            let report = census::search(&job)?;
            for st in &report.stats {
                info!("{st:?}");
            }
            let text = if graph6 {
                report.classes().map(|r| format!("{}\n", r.graph6)).collect()
            } else {
                match out {
                    OutFormat::Csv => to_csv(&report.records)?,
                    OutFormat::Json => serde_json::to_string_pretty(&report)? + "\n",
                }
            };
            emit(&output, &text)?;
            let undecided = report.undecided().count();
            eprintln!(
                "{} edge-transitive class(es), {} undecided",
                report.classes().count(),
                undecided
            );
            Ok(if undecided > 0 && !lenient {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            })
        }
        Command::Analyze {
            input,
            named: name,
            element_cap,
        } => {
            let g = match (name, input) {
                (Some(n), None) => named::by_name(&n)?,
                (None, Some(i)) => read_graph(&i)?,
                _ => bail!("give exactly one of an input path or --named"),
            };
            let report = census::analyze(&g, element_cap)?;
            println!("{}", serde_json::to_string_pretty(&report)?);
            Ok(ExitCode::SUCCESS)
        }
        Command::VerifyS5 { json } => {
            let report = s5::run_section5();
            if json {
                println!("{}", report.to_json());
            } else {
                for c in &report.claims {
                    println!("{} {}: {}", if c.pass { "PASS" } else { "FAIL" }, c.claim, c.statement);
                }
                let passed = report.claims.iter().filter(|c| c.pass).count();
                println!("{passed}/{} claims pass", report.claims.len());
            }
            Ok(if report.all_pass() { ExitCode::SUCCESS } else { ExitCode::from(1) })
        }
        Command::ClassifyCirculant { n, s, json } => {
            let sym = CirculantSymbol::parse(n, &s)?;
            let report = circulant::classify_arc_transitive_circulant(&sym)?;
            if json {
                println!("{}", serde_json::to_string_pretty(&report)?);
            } else {
                println!("{sym}");
                for c in &report.cases {
                    println!("  {}", c.describe());
                    if let circulant::CirculantCase::CosetBlocks { d_order, .. } = c {
                        let step = n / d_order;
                        let d: Vec<String> = (0..*d_order).map(|i| (i * step).to_string()).collect();
                        println!("    D = {{{}}}", d.join(","));
                    }
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::CirculantCoverage { max_n, out } => {
            let report = circulant::exhaustive_case_coverage(max_n)?;
            match out {
                OutFormat::Csv => print!("{}", to_csv(&report.rows)?),
                OutFormat::Json => println!("{}", serde_json::to_string_pretty(&report)?),
            }
            eprintln!("{} circulants, {} without a case", report.rows.len(), report.uncovered.len());
            Ok(if report.is_total() { ExitCode::SUCCESS } else { ExitCode::from(1) })
        }
        Command::CosetRoundtrip { graph, element_cap } => {
            let model: SabidussiModel = if graph.eq_ignore_ascii_case("petersen_complement") {
                coset::petersen_complement_model()
            } else {
                coset::model_from_graph(&named::by_name(&graph)?, element_cap)?
            };
            let spec = model.spec()?;
            let (cos, map) = coset::sabidussi_roundtrip(&model)?;
            println!("|G| = {}, |H| = {}, g = {}", spec.ambient.order(), spec.h.order(), spec.g);
            println!("cosets: {}", cos.vertex_count());
            println!("valence formula: {}", coset::coset_valence(&spec)?);
            println!("isomorphic: {}", map.is_some());
            Ok(if map.is_some() { ExitCode::SUCCESS } else { ExitCode::from(1) })
        }
        Command::Named { name, format } => {
            let g = named::by_name(&name)?;
            match format {
                GraphFormat::Graph6 => println!("{}", graph6::encode(&g)),
                GraphFormat::Json => println!("{}", g.to_json()),
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}
