use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use listdist::lists::{CharacterizationOptions, DirectOptions, HuntOptions};
use listdist::small_graphs::small_graphs;
use listdist::{encode_edge_list, encode_graph6, generate_family, Error, Family, Predicate};
use listdist_cli::hunt::run_hunt;
use listdist_cli::input::{parse_single, read_source, GraphFormat};
use listdist_cli::invariants::{invariants_report, listnum_report, Method, Settings, StrategyArg};
use listdist_cli::suites::{run_suite, Suite, SuiteConfig};
use listdist_cli::{error_json, exit_code};
use serde_json::{json, Value};

#[derive(Parser)]
#[command(
    name = "listdist",
    version,
    about = "Distinguishing and list-distinguishing numbers of small graphs"
)]
struct Cli {
    /// Print human-readable progress to stderr.
    #[arg(short, long, global = true)]
    verbose: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Report D, chi, chi_D and their list versions for one graph.
    Invariants {
        #[command(flatten)]
        graph: GraphInput,
        #[command(flatten)]
        lists: ListFlags,
        /// Which list-number routes to run.
        #[arg(long, value_enum, default_value_t = Method::Both)]
        lists_method: Method,
        /// Include per-stage wall-clock times (makes output non-deterministic).
        #[arg(long)]
        timing: bool,
    },
    /// List number for one predicate with per-k and per-m detail.
    Listnum {
        #[command(flatten)]
        graph: GraphInput,
        #[arg(long, value_enum, default_value_t = PredArg::Dist)]
        pred: PredArg,
        #[command(flatten)]
        lists: ListFlags,
        #[arg(long, value_enum, default_value_t = Method::Both)]
        method: Method,
    },
    /// Run the seeded property suites.
    VerifyProps {
        #[arg(long, value_enum, default_value_t = Suite::All)]
        suite: Suite,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        /// Random instances for the counting and canonical suites.
        #[arg(long, default_value_t = 100)]
        instances: usize,
        /// Random list assignments per n for the constructive suites.
        #[arg(long, default_value_t = 1000)]
        trials: usize,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
    /// Print a member of a named family.
    Family {
        #[arg(value_enum)]
        family: FamilyArg,
        /// One size parameter, or two for complete_bipartite.
        #[arg(required = true, num_args = 1..=2)]
        params: Vec<usize>,
        #[arg(long, value_enum, default_value_t = GraphFormat::Graph6)]
        format: GraphFormat,
    },
    /// Search a graph6 stream for graphs whose list number exceeds the
    /// ordinary one.
    Hunt {
        /// graph6 file, one graph per line; stdin when omitted.
        input: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = PredArg::Dist)]
        pred: PredArg,
        /// Automorphism group size cap.
        #[arg(long, default_value_t = listdist::DEFAULT_GROUP_CAP)]
        cap: usize,
        /// Canonical list assignments examined per graph before giving up.
        #[arg(long, default_value_t = DirectOptions::default().max_representatives)]
        max_reps: u64,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
    /// Print every graph of order n up to isomorphism as graph6 (n <= 6).
    Graphs {
        n: usize,
        #[arg(long)]
        connected: bool,
    },
}

#[derive(Args)]
struct GraphInput {
    /// Input file; stdin when omitted or `-`.
    input: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = GraphFormat::Graph6)]
    format: GraphFormat,
}

#[derive(Args)]
struct ListFlags {
    /// Largest universe size in the characterization sweep (default n*d).
    #[arg(long)]
    m_max: Option<u32>,
    /// Check every list size 1..=k_max with the direct oracle instead of
    /// stopping at the first pass.
    #[arg(long)]
    k_max: Option<usize>,
    /// Automorphism group size cap.
    #[arg(long, default_value_t = listdist::DEFAULT_GROUP_CAP)]
    cap: usize,
    /// Cap on satisfying labelings enumerated per universe size.
    #[arg(long, default_value_t = listdist::labeling::DEFAULT_LABELING_CAP)]
    labeling_cap: usize,
    /// Canonical list assignments examined per list size.
    #[arg(long, default_value_t = 20_000_000)]
    max_reps: u64,
    /// Decide each characterization step by membership, counting, or both.
    #[arg(long, value_enum, default_value_t = StrategyArg::Membership)]
    strategy: StrategyArg,
}

impl ListFlags {
    fn settings(&self, method: Method) -> Settings {
        Settings {
            group_cap: self.cap,
            method,
            k_max: self.k_max,
            characterization: CharacterizationOptions {
                m_max: self.m_max,
                strategy: self.strategy.into(),
                labeling_cap: self.labeling_cap,
                ..CharacterizationOptions::default()
            },
            direct: DirectOptions {
                max_representatives: self.max_reps,
                ..DirectOptions::default()
            },
            timing: false,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum PredArg {
    Dist,
    Proper,
    Propdist,
}

impl From<PredArg> for Predicate {
    fn from(p: PredArg) -> Predicate {
        match p {
            PredArg::Dist => Predicate::Distinguishing,
            PredArg::Proper => Predicate::Proper,
            PredArg::Propdist => Predicate::ProperDistinguishing,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyArg {
    Friendship,
    Book,
    Path,
    Cycle,
    Complete,
    #[value(name = "complete_bipartite", alias = "complete-bipartite")]
    CompleteBipartite,
    Star,
}

impl From<FamilyArg> for Family {
    fn from(f: FamilyArg) -> Family {
        match f {
            FamilyArg::Friendship => Family::Friendship,
            FamilyArg::Book => Family::Book,
            FamilyArg::Path => Family::Path,
            FamilyArg::Cycle => Family::Cycle,
            FamilyArg::Complete => Family::Complete,
            FamilyArg::CompleteBipartite => Family::CompleteBipartite,
            FamilyArg::Star => Family::Star,
        }
    }
}

/// What a command produced: text for stdout and whether every check passed.
struct Outcome {
    stdout: String,
    verified: bool,
}

fn pretty(v: &Value) -> String {
    serde_json::to_string_pretty(v).expect("JSON values serialize") + "\n"
}

fn run(cli: Cli) -> Result<Outcome, Error> {
    let verbose = cli.verbose;
    match cli.command {
        Command::Invariants {
            graph,
            lists,
            lists_method,
            timing,
        } => {
            let g = parse_single(&read_source(graph.input.as_deref())?, graph.format)?;
            let mut settings = lists.settings(lists_method);
            settings.timing = timing;
            let report = invariants_report(&g, &settings)?;
            let verified = report.get("agreement").and_then(Value::as_bool).unwrap_or(true);
            Ok(Outcome {
                stdout: pretty(&report),
                verified,
            })
        }
        Command::Listnum {
            graph,
            pred,
            lists,
            method,
        } => {
            let g = parse_single(&read_source(graph.input.as_deref())?, graph.format)?;
            let report = listnum_report(&g, pred.into(), &lists.settings(method))?;
            let verified = report["agreement"].as_bool().unwrap_or(true);
            Ok(Outcome {
                stdout: pretty(&report),
                verified,
            })
        }
        Command::VerifyProps {
            suite,
            seed,
            instances,
            trials,
            jobs,
        } => {
            let config = SuiteConfig {
                seed,
                instances,
                trials,
            };
            eprintln!("seed {seed}");
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(jobs.max(1))
                .build()
                .map_err(|e| Error::InvalidInput(e.to_string()))?;
            let results: Vec<_> = pool.install(|| {
                use rayon::prelude::*;
                suite.expand().into_par_iter().map(|s| run_suite(s, &config)).collect()
            });
            if verbose {
                for r in &results {
                    eprintln!(
                        "{:>16}: {}/{}",
                        format!("{:?}", r.suite).to_lowercase(),
                        r.passed,
                        r.instances
                    );
                }
            }
            let verified = results.iter().all(|r| r.ok());
            let report = json!({ "seed": seed, "suites": results, "all_passed": verified });
            Ok(Outcome {
                stdout: pretty(&report),
                verified,
            })
        }
        Command::Family { family, params, format } => {
            let g = generate_family(family.into(), &params)?;
            let stdout = match format {
                GraphFormat::Graph6 => encode_graph6(&g) + "\n",
                GraphFormat::Edges => encode_edge_list(&g),
            };
            Ok(Outcome { stdout, verified: true })
        }
        Command::Hunt {
            input,
            pred,
            cap,
            max_reps,
            jobs,
        } => {
            let text = read_source(input.as_deref())?;
            let opts = HuntOptions {
                group_cap: cap,
                direct: DirectOptions {
                    max_representatives: max_reps,
                    ..DirectOptions::default()
                },
                ..HuntOptions::default()
            };
            let mut out = Vec::new();
            let summary = run_hunt(&text, pred.into(), &opts, jobs.max(1), &mut out, &mut io::stderr())
                .map_err(|e| Error::InvalidInput(e.to_string()))?;
            if verbose {
                eprintln!(
                    "scanned {}, skipped {}, hits {}",
                    summary.scanned, summary.skipped, summary.hits
                );
            }
            Ok(Outcome {
                stdout: String::from_utf8(out).expect("JSON is UTF-8"),
                verified: summary.unconfirmed == 0,
            })
        }
        Command::Graphs { n, connected } => {
            let stdout = small_graphs(n, connected)?
                .iter()
                .map(|g| encode_graph6(g) + "\n")
                .collect();
            Ok(Outcome { stdout, verified: true })
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut stdout = io::stdout().lock();
    let code = match run(cli) {
        Ok(outcome) => {
            let _ = stdout.write_all(outcome.stdout.as_bytes());
            if outcome.verified {
                0
            } else {
                1
            }
        }
        Err(e) => {
            let _ = writeln!(stdout, "{}", error_json(&e));
            exit_code(&e)
        }
    };
    let _ = stdout.flush();
    ExitCode::from(code)
}
