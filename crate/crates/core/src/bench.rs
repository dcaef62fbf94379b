//! Instrumented runs over generated instances with cross-algorithm digest checks.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use serde::Serialize;

use crate::components::{ComponentSet, Mode};
use crate::error::{Error, Mismatch, Result};
use crate::generate::{gen_adversarial_chain, gen_blocks_vs_components, gen_random};
use crate::graph::Graph;
use crate::hierarchical::{kscc_with, KsccConfig};
use crate::local::{two_escc_sparse_with, SparseConfig};
use crate::oracle::naive_kscc;
use crate::trace::{augmentations, TraceEvent, WorkCounters};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Algorithm {
    Kscc,
    Naive,
    Sparse2e,
}

impl FromStr for Algorithm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "kscc" => Ok(Algorithm::Kscc),
            "naive" => Ok(Algorithm::Naive),
            "sparse2e" => Ok(Algorithm::Sparse2e),
            other => Err(Error::UnknownAlgorithm(other.to_string())),
        }
    }
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Algorithm::Kscc => "kscc",
            Algorithm::Naive => "naive",
            Algorithm::Sparse2e => "sparse2e",
        })
    }
}

/// How instances are generated from a size and a seed.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum GeneratorSpec {
    /// `gen_random(size, p, seed)`.
    Random { p: f64 },
    /// A random graph with the four-vertex gadget on top.
    Blocks { p: f64 },
    /// `gen_adversarial_chain(size, b)`; the seed is ignored.
    Chain { b: usize },
}

impl GeneratorSpec {
    pub fn generate(&self, size: usize, seed: u64) -> Result<Graph> {
        match *self {
            GeneratorSpec::Random { p } => gen_random(size, p, seed),
            GeneratorSpec::Blocks { p } => Ok(gen_blocks_vs_components(&gen_random(size, p, seed)?)),
            GeneratorSpec::Chain { b } => gen_adversarial_chain(size, b),
        }
    }
}

#[derive(Clone, Debug)]
pub struct BenchConfig {
    pub generator: GeneratorSpec,
    pub algorithms: Vec<Algorithm>,
    pub sizes: Vec<usize>,
    pub seeds: Vec<u64>,
    pub k: usize,
    pub mode: Mode,
    /// Record wall times; off by default so reports are reproducible byte for byte.
    pub timing: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LevelSummary {
    pub level: usize,
    pub searches: usize,
    pub found: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RunReport {
    pub algorithm: Algorithm,
    pub instance: String,
    pub seed: u64,
    pub n: usize,
    pub m: usize,
    pub k: usize,
    pub mode: Mode,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub wall_ms: Option<f64>,
    pub counters: WorkCounters,
    pub levels: Vec<LevelSummary>,
    pub components: usize,
    pub digest: String,
}

/// What a single algorithm run hands back to the harness.
#[derive(Clone, Debug)]
pub struct Outcome {
    pub components: ComponentSet,
    pub counters: WorkCounters,
    pub trace: Vec<TraceEvent>,
}

/// Runs one of the library algorithms with tracing on.
pub fn run_algorithm(algorithm: Algorithm, g: &Graph, k: usize, mode: Mode) -> Result<Outcome> {
    match algorithm {
        Algorithm::Kscc => {
            let run = kscc_with(g, k, mode, &KsccConfig { trace: true, ..KsccConfig::default() })?;
            Ok(Outcome { components: run.components, counters: run.counters, trace: run.trace })
        }
        Algorithm::Naive => {
            let before = augmentations();
            let components = naive_kscc(g, k, mode)?;
            let counters = WorkCounters { flow_augmentations: augmentations() - before, ..WorkCounters::default() };
            Ok(Outcome { components, counters, trace: Vec::new() })
        }
        Algorithm::Sparse2e => {
            if k != 2 || mode != Mode::Edge {
                return Err(Error::Unsupported(format!("sparse2e computes 2-edge components, not k = {k} {mode}")));
            }
            let run = two_escc_sparse_with(g, &SparseConfig { trace: true, ..SparseConfig::default() })?;
            Ok(Outcome { components: run.components, counters: run.counters, trace: run.trace })
        }
    }
}

pub fn bench_run(config: &BenchConfig) -> Result<Vec<RunReport>> {
    bench_run_with(config, run_algorithm)
}

/// [`bench_run`] with a replaceable algorithm runner.
pub fn bench_run_with(
    config: &BenchConfig,
    mut runner: impl FnMut(Algorithm, &Graph, usize, Mode) -> Result<Outcome>,
) -> Result<Vec<RunReport>> {
    let mut reports = Vec::new();
    for &size in &config.sizes {
        for &seed in &config.seeds {
            let g = config.generator.generate(size, seed)?;
            let instance = format!("{}-{size}", generator_name(&config.generator));
            let mut first: Option<(Algorithm, String)> = None;
            for &algorithm in &config.algorithms {
                let start = Instant::now();
                let outcome = runner(algorithm, &g, config.k, config.mode)?;
                let wall_ms = config.timing.then(|| start.elapsed().as_secs_f64() * 1e3);
                let digest = outcome.components.digest();
                match &first {
                    None => first = Some((algorithm, digest.clone())),
                    Some((left, left_digest)) if *left_digest != digest => {
                        return Err(Error::DigestMismatch(Box::new(Mismatch {
                            instance,
                            seed,
                            left: left.to_string(),
                            left_digest: left_digest.clone(),
                            right: algorithm.to_string(),
                            right_digest: digest,
                        })));
                    }
                    Some(_) => {}
                }
                reports.push(RunReport {
                    algorithm,
                    instance: instance.clone(),
                    seed,
                    n: g.n(),
                    m: g.m(),
                    k: config.k,
                    mode: config.mode,
                    wall_ms,
                    counters: outcome.counters,
                    levels: summarize_levels(&outcome.trace),
                    components: outcome.components.len(),
                    digest,
                });
            }
        }
    }
    Ok(reports)
}

fn generator_name(spec: &GeneratorSpec) -> String {
    match spec {
        GeneratorSpec::Random { p } => format!("random-p{p}"),
        GeneratorSpec::Blocks { p } => format!("blocks-p{p}"),
        GeneratorSpec::Chain { b } => format!("chain-b{b}"),
    }
}

fn summarize_levels(trace: &[TraceEvent]) -> Vec<LevelSummary> {
    let mut by_level: BTreeMap<usize, (usize, usize)> = BTreeMap::new();
    for ev in trace {
        if let TraceEvent::Level { level, found, .. } = ev {
            let entry = by_level.entry(*level).or_default();
            entry.0 += 1;
            entry.1 += usize::from(found.is_some());
        }
    }
    by_level.into_iter().map(|(level, (searches, found))| LevelSummary { level, searches, found }).collect()
}

/// One JSON object per line.
pub fn reports_to_json_lines(reports: &[RunReport]) -> String {
    reports.iter().map(|r| serde_json::to_string(r).expect("reports serialize") + "\n").collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn config(algorithms: Vec<Algorithm>) -> BenchConfig {
        BenchConfig {
            generator: GeneratorSpec::Random { p: 0.1 },
            algorithms,
            sizes: vec![30],
            seeds: (0..10).collect(),
            k: 2,
            mode: Mode::Edge,
            timing: false,
        }
    }

    #[test]
    fn kscc_and_naive_agree() {
        let reports = bench_run(&config(vec![Algorithm::Kscc, Algorithm::Naive])).unwrap();
        assert_eq!(reports.len(), 20);
        for pair in reports.chunks(2) {
            assert_eq!(pair[0].digest, pair[1].digest);
        }
        assert_eq!(reports, bench_run(&config(vec![Algorithm::Kscc, Algorithm::Naive])).unwrap());
    }

    #[test]
    fn empty_algorithm_list() {
        assert!(bench_run(&config(vec![])).unwrap().is_empty());
    }

    #[test]
    fn injected_fault_is_reported() {
        let err = bench_run_with(&config(vec![Algorithm::Kscc, Algorithm::Naive]), |a, g, k, mode| {
            let mut out = run_algorithm(a, g, k, mode)?;
            if a == Algorithm::Naive {
                out.components.components.pop();
            }
            Ok(out)
        })
        .unwrap_err();
        assert!(matches!(&err, Error::DigestMismatch(m) if m.seed == 0));
    }
}
