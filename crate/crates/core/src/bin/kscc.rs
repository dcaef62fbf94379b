use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use kscc::bench::{bench_run, reports_to_json_lines, Algorithm, BenchConfig, GeneratorSpec};
use kscc::generate::{gen_adversarial_chain, gen_blocks_vs_components, gen_random};
use kscc::io::{emit_components, parse_graph, write_edgelist, Format, OutputFormat};
use kscc::local::two_escc_sparse_with;
use kscc::oracle::{brute_force_kscc, naive_kscc, BRUTE_FORCE_MAX_EDGE, BRUTE_FORCE_MAX_VERTEX};
use kscc::primitives::scc;
use kscc::trace::TraceEvent;
use kscc::error::Mismatch;
use kscc::{kscc_with, ComponentSet, Error, Graph, KsccConfig, Mode, SparseConfig};

#[derive(Parser)]
#[command(name = "kscc", version, about = "k-edge and k-vertex strongly connected components")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Input {
    /// Graph file.
    input: PathBuf,
    /// `edgelist` or `dimacs`.
    #[arg(long, default_value = "edgelist")]
    input_format: Format,
    /// `text` or `json`.
    #[arg(long, default_value = "text")]
    format: OutputFormat,
    /// Print the SHA-256 digest of the result instead of the result.
    #[arg(long)]
    digest: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Strongly connected components.
    Scc(Input),
    /// k-edge strongly connected components.
    Kescc {
        #[command(flatten)]
        input: Input,
        #[arg(long, default_value_t = 2)]
        k: usize,
        /// Write trace events to stderr, one JSON object per line.
        #[arg(long)]
        trace: bool,
    },
    /// k-vertex strongly connected components.
    Kvscc {
        #[command(flatten)]
        input: Input,
        #[arg(long, default_value_t = 2)]
        k: usize,
        #[arg(long)]
        trace: bool,
        /// Leave out components with fewer than three vertices.
        #[arg(long)]
        suppress_degenerate: bool,
    },
    /// 2-edge strongly connected components by local search.
    Sparse2e {
        #[command(flatten)]
        input: Input,
        #[arg(long, default_value_t = 0.5)]
        epsilon: f64,
        #[arg(long)]
        trace: bool,
    },
    /// Cross-check the recursion against the naive and brute-force algorithms.
    Oracle {
        #[command(flatten)]
        input: Input,
        #[arg(long, default_value_t = 2)]
        k: usize,
        #[arg(long, default_value = "edge")]
        mode: Mode,
    },
    /// Write a generated graph as an edge list.
    Gen {
        #[command(subcommand)]
        generator: Generator,
    },
    /// Run algorithms on generated instances and compare digests.
    Bench {
        /// `random`, `blocks` or `chain`.
        #[arg(long, default_value = "random")]
        generator: String,
        #[arg(long, default_value_t = 0.1)]
        p: f64,
        /// Block size for chains.
        #[arg(long, default_value_t = 3)]
        b: usize,
        #[arg(long, value_delimiter = ',', default_value = "30")]
        sizes: Vec<usize>,
        /// Number of seeds, starting at `--seed`.
        #[arg(long, default_value_t = 10)]
        seeds: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_delimiter = ',', default_value = "kscc,naive")]
        algorithms: Vec<Algorithm>,
        #[arg(long, default_value_t = 2)]
        k: usize,
        #[arg(long, default_value = "edge")]
        mode: Mode,
        /// Include wall times in the report.
        #[arg(long)]
        timing: bool,
    },
}

#[derive(Subcommand)]
enum Generator {
    Random {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        p: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    Chain {
        #[arg(long)]
        c: usize,
        #[arg(long)]
        b: usize,
    },
    /// Adds the four-vertex gadget to a graph file.
    Blocks {
        input: PathBuf,
        #[arg(long, default_value = "edgelist")]
        input_format: Format,
    },
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            let kind = format!("{e:?}");
            let kind = kind.split(['(', ' ', '{']).next().unwrap_or("Error").to_string();
            eprintln!("{}", serde_json::json!({ "error": kind, "message": e.to_string() }));
            ExitCode::FAILURE
        }
    }
}

fn emit(input: &Input, cs: &ComponentSet) -> String {
    if input.digest {
        format!("{}\n", cs.digest())
    } else {
        emit_components(cs, input.format)
    }
}

fn print_trace(events: &[TraceEvent]) {
    for e in events {
        eprintln!("{}", e.to_json_line());
    }
}

fn load(input: &Input) -> Result<Graph, Error> {
    parse_graph(&input.input, input.input_format)
}

fn decompose(input: &Input, k: usize, mode: Mode, trace: bool) -> Result<ComponentSet, Error> {
    let g = load(input)?;
    let run = kscc_with(&g, k, mode, &KsccConfig { trace, ..KsccConfig::default() })?;
    print_trace(&run.trace);
    Ok(run.components)
}

fn run(cli: Cli) -> Result<String, Error> {
    match cli.command {
        Command::Scc(input) => {
            let g = load(&input)?;
            let cs = ComponentSet::from_vertex_sets(&g, 1, Mode::Edge, scc(&g).components);
            Ok(emit(&input, &cs))
        }
        Command::Kescc { input, k, trace } => {
            let cs = decompose(&input, k, Mode::Edge, trace)?;
            Ok(emit(&input, &cs))
        }
        Command::Kvscc { input, k, trace, suppress_degenerate } => {
            let mut cs = decompose(&input, k, Mode::Vertex, trace)?;
            if suppress_degenerate {
                cs = cs.without_degenerate();
            }
            Ok(emit(&input, &cs))
        }
        Command::Sparse2e { input, epsilon, trace } => {
            let g = load(&input)?;
            let run = two_escc_sparse_with(&g, &SparseConfig { epsilon, trace, ..SparseConfig::default() })?;
            print_trace(&run.trace);
            Ok(emit(&input, &run.components))
        }
        Command::Oracle { input, k, mode } => {
            let g = load(&input)?;
            let fast = kscc_with(&g, k, mode, &KsccConfig::default())?.components;
            let mut checks = vec![("naive", naive_kscc(&g, k, mode)?)];
            let max = match mode {
                Mode::Edge => BRUTE_FORCE_MAX_EDGE,
                Mode::Vertex => BRUTE_FORCE_MAX_VERTEX,
            };
            if g.n() <= max {
                checks.push(("brute-force", brute_force_kscc(&g, k, mode)?));
            }
            for (name, other) in checks {
                if other != fast {
                    return Err(Error::DigestMismatch(Box::new(Mismatch {
                        instance: input.input.display().to_string(),
                        seed: 0,
                        left: "kscc".into(),
                        left_digest: fast.digest(),
                        right: name.into(),
                        right_digest: other.digest(),
                    })));
                }
            }
            Ok(emit(&input, &fast))
        }
        Command::Gen { generator } => {
            let g = match generator {
                Generator::Random { n, p, seed } => gen_random(n, p, seed)?,
                Generator::Chain { c, b } => gen_adversarial_chain(c, b)?,
                Generator::Blocks { input, input_format } => gen_blocks_vs_components(&parse_graph(input, input_format)?),
            };
            Ok(write_edgelist(&g))
        }
        Command::Bench { generator, p, b, sizes, seeds, seed, algorithms, k, mode, timing } => {
            let generator = match generator.as_str() {
                "random" => GeneratorSpec::Random { p },
                "blocks" => GeneratorSpec::Blocks { p },
                "chain" => GeneratorSpec::Chain { b },
                other => return Err(Error::InvalidGenerator(format!("unknown generator `{other}`"))),
            };
            let config = BenchConfig {
                generator,
                algorithms,
                sizes,
                seeds: (seed..seed + seeds).collect(),
                k,
                mode,
                timing,
            };
            Ok(reports_to_json_lines(&bench_run(&config)?))
        }
    }
}
