use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use matchroot::structure::{LemmaId, DEFAULT_PATH_CAP};
use matchroot_cli::campaign::{self, CampaignConfig, Corpus, INGEST_LIMIT};
use matchroot_cli::commands::{cmd_classify, cmd_decompose, cmd_poly, sign_tables};
use matchroot_cli::dot::to_dot;
use matchroot_cli::fixtures::cmd_fixtures;
use matchroot_cli::input::{parse_graph, RootSelector};
use matchroot_cli::{CliError, EXIT_USAGE, EXIT_VIOLATIONS};

#[derive(Parser)]
#[command(
    name = "matchroot",
    version,
    about = "Root multiplicities of matching polynomials"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the matching polynomial, its factorization, matching number and deficiency.
    Poly {
        /// graph6 string, or edge-list text such as "4; 0-1, 0-2, 0-3"
        graph: String,
    },
    /// Print the sign of every vertex for each selected root.
    Classify {
        graph: String,
        /// "all", "#k" (k-th factor, from 0) or "poly:c0,c1,..."
        #[arg(long, default_value = "all")]
        root: String,
        /// Also write a DOT rendering colored by sign.
        #[arg(long)]
        dot: Option<PathBuf>,
    },
    /// Print the D/A/C partition and check the component count identity.
    Decompose {
        graph: String,
        #[arg(long, default_value = "all")]
        root: String,
    },
    /// Check the structural lemmas over a corpus and write a JSON-lines report.
    Verify {
        /// Largest vertex count (default 7 generated, 12 from a file).
        #[arg(long)]
        max_n: Option<usize>,
        /// Read graphs from this file instead of generating all classes.
        #[arg(long)]
        corpus: Option<PathBuf>,
        /// Comma-separated lemma ids (default: all).
        #[arg(long, value_delimiter = ',')]
        lemmas: Option<Vec<String>>,
        #[arg(long, default_value_t = DEFAULT_PATH_CAP)]
        path_cap: usize,
        /// Also run roots that do not divide the polynomial; reported, never failed.
        #[arg(long)]
        exploratory: bool,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        /// Report file (default: stdout).
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, hide = true)]
        inject_fault: bool,
    },
    /// Print the built-in vertex-transitive fixtures as graph6 lines.
    Fixtures,
}

fn write_file(path: &PathBuf, text: &str) -> Result<(), CliError> {
    std::fs::write(path, text).map_err(|e| CliError::io(path.display().to_string(), e))
}

fn run(cli: Cli) -> Result<i32, CliError> {
    match cli.command {
        Command::Poly { graph } => {
            print!("{}", cmd_poly(&parse_graph(&graph)?)?);
            Ok(0)
        }
        Command::Classify { graph, root, dot } => {
            let g = parse_graph(&graph)?;
            let sel: RootSelector = root.parse()?;
            print!("{}", cmd_classify(&g, &sel)?);
            if let Some(path) = dot {
                let text: String = sign_tables(&g, &sel)?
                    .iter()
                    .enumerate()
                    .map(|(i, t)| to_dot(&g, t, &format!("root{i}")))
                    .collect();
                write_file(&path, &text)?;
            }
            Ok(0)
        }
        Command::Decompose { graph, root } => {
            let (text, ok) = cmd_decompose(&parse_graph(&graph)?, &root.parse()?)?;
            print!("{text}");
            Ok(if ok { 0 } else { EXIT_VIOLATIONS })
        }
        Command::Verify {
            max_n,
            corpus,
            lemmas,
            path_cap,
            exploratory,
            jobs,
            out,
            inject_fault,
        } => {
            let corpus = corpus.map_or(Corpus::Generated, Corpus::File);
            let max_n = max_n.unwrap_or(match corpus {
                Corpus::Generated => 7,
                Corpus::File(_) => INGEST_LIMIT,
            });
            let lemmas = match lemmas {
                None => campaign::default_lemmas(exploratory),
                Some(ids) => ids
                    .iter()
                    .map(|s| s.trim().parse::<LemmaId>().map_err(CliError::Usage))
                    .collect::<Result<_, _>>()?,
            };
            let cfg = CampaignConfig {
                max_n,
                corpus,
                lemmas,
                path_cap,
                exploratory,
                jobs,
                out: out.clone(),
                fault: inject_fault.then_some(campaign::corrupt_vertex_zero as _),
            };
            let summary = match &out {
                Some(path) => {
                    let file = File::create(path)
                        .map_err(|e| CliError::io(path.display().to_string(), e))?;
                    let mut w = BufWriter::new(file);
                    let s = campaign::run_campaign(&cfg, &mut w)?;
                    println!(
                        "{} graphs, {} (graph, root) pairs, {} violations",
                        s.graphs,
                        s.pairs,
                        s.violations.len()
                    );
                    s
                }
                None => {
                    let stdout = std::io::stdout();
                    let mut lock = stdout.lock();
                    campaign::run_campaign(&cfg, &mut lock)?
                }
            };
            eprintln!("wall time {:.3}s", summary.wall_time.as_secs_f64());
            Ok(summary.exit_code())
        }
        Command::Fixtures => {
            let mut stdout = std::io::stdout();
            stdout
                .write_all(cmd_fixtures().as_bytes())
                .map_err(|e| CliError::io("stdout", e))?;
            Ok(0)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(EXIT_USAGE as u8)
        }
    }
}
