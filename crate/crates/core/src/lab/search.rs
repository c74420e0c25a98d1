use std::collections::BTreeMap;
use std::io::BufRead;
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::graph::{encode_graph6, parse_graph6, Graph};
use crate::invariants::{SolverError, SolverLimits};

use super::generate::{enumerate_labeled_graphs, sample_random_graph};
use super::{GraphFacts, LabError, Status, TheoremId, TheoremVerdict};

const CHUNK: usize = 4096;

/// A bad line in a graph6 stream. The search records it and moves on.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize, thiserror::Error)]
#[error("line {line}: {message}")]
pub struct InputError {
    pub line: usize,
    pub message: String,
}

/// Reads one graph6 string per line, skipping blank lines.
pub fn graph6_lines<R: BufRead>(reader: R) -> impl Iterator<Item = Result<Graph, InputError>> {
    reader.lines().enumerate().filter_map(|(i, line)| {
        let line_no = i + 1;
        match line {
            Err(e) => Some(Err(InputError {
                line: line_no,
                message: e.to_string(),
            })),
            Ok(text) if text.trim().is_empty() => None,
            Ok(text) => Some(parse_graph6(text.trim()).map_err(|e| InputError {
                line: line_no,
                message: e.to_string(),
            })),
        }
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RandomSpec {
    pub n: usize,
    pub p: f64,
    /// Graph `i` is drawn with seed `seed + i`.
    pub seed: u64,
    pub count: u64,
}

pub enum GraphSource {
    /// Every labeled graph on `1..=max_n` vertices.
    Enumerate {
        max_n: usize,
    },
    Random(RandomSpec),
    Graph6 {
        label: String,
        reader: Box<dyn BufRead>,
    },
    Graphs {
        label: String,
        graphs: Vec<Graph>,
    },
}

impl GraphSource {
    pub fn describe(&self) -> String {
        match self {
            GraphSource::Enumerate { max_n } => format!("enumerate n=1..={max_n}"),
            GraphSource::Random(spec) => {
                format!(
                    "random n={} p={} count={} seed={}",
                    spec.n, spec.p, spec.count, spec.seed
                )
            }
            GraphSource::Graph6 { label, .. } | GraphSource::Graphs { label, .. } => label.clone(),
        }
    }

    fn into_graphs(self) -> Result<Box<dyn Iterator<Item = Result<Graph, InputError>>>, LabError> {
        Ok(match self {
            GraphSource::Enumerate { max_n } => {
                let all = (1..=max_n)
                    .map(enumerate_labeled_graphs)
                    .collect::<Result<Vec<_>, _>>()?;
                Box::new(all.into_iter().flatten().map(Ok))
            }
            GraphSource::Random(spec) => {
                sample_random_graph(0, spec.p, 0)?;
                Box::new((0..spec.count).map(move |i| {
                    Ok(
                        sample_random_graph(spec.n, spec.p, spec.seed.wrapping_add(i))
                            .expect("p was checked"),
                    )
                }))
            }
            GraphSource::Graph6 { reader, .. } => Box::new(graph6_lines(reader)),
            GraphSource::Graphs { graphs, .. } => Box::new(graphs.into_iter().map(Ok)),
        })
    }
}

/// Restricts a search to one class of graphs; the rest are skipped and
/// not counted.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum GraphClass {
    #[default]
    All,
    Bipartite,
    ConnectedClawFree,
}

impl GraphClass {
    pub fn contains(self, g: &Graph) -> bool {
        match self {
            GraphClass::All => true,
            GraphClass::Bipartite => g.is_bipartite(),
            GraphClass::ConnectedClawFree => g.is_connected() && g.is_claw_free(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchOptions {
    pub theorems: Vec<TheoremId>,
    pub class: GraphClass,
    pub limits: SolverLimits,
    /// Worker threads; 0 lets the pool decide.
    pub jobs: usize,
    /// Stop after the first graph with any violation.
    pub early_exit: bool,
    /// Violations kept per theorem; the tallies always count all of them.
    pub max_violations: usize,
}

impl Default for SearchOptions {
    fn default() -> Self {
        Self {
            theorems: TheoremId::ALL.to_vec(),
            class: GraphClass::All,
            limits: SolverLimits::default(),
            jobs: 0,
            early_exit: false,
            max_violations: 20,
        }
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Tally {
    pub holds: u64,
    pub not_applicable: u64,
    pub violated: u64,
    /// Graphs the solver refused because of a vertex cap.
    pub errors: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    /// Position of the graph in the source, from 0.
    pub index: u64,
    pub graph6: String,
    pub verdict: TheoremVerdict,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SearchReport {
    pub source: String,
    pub graphs_examined: u64,
    pub tallies: BTreeMap<TheoremId, Tally>,
    /// Ordered by theorem, then graph6 string.
    pub violations: Vec<Violation>,
    pub input_errors: Vec<InputError>,
    pub solver_errors: Vec<String>,
    pub stopped_early: bool,
    pub elapsed_seconds: f64,
}

impl SearchReport {
    /// Violations of statements that are proven.
    pub fn unexpected_violations(&self) -> u64 {
        self.tallies
            .iter()
            .filter(|(id, _)| id.expected_to_hold())
            .map(|(_, t)| t.violated)
            .sum()
    }

    pub fn tally(&self, theorem: TheoremId) -> Tally {
        self.tallies.get(&theorem).copied().unwrap_or_default()
    }

    /// The report with timing zeroed, for reproducibility comparisons.
    pub fn without_timing(&self) -> SearchReport {
        SearchReport {
            elapsed_seconds: 0.0,
            ..self.clone()
        }
    }
}

type GraphOutcome = Vec<Result<TheoremVerdict, SolverError>>;

fn evaluate(g: &Graph, options: &SearchOptions) -> GraphOutcome {
    let facts = GraphFacts::new(g, options.limits);
    options
        .theorems
        .iter()
        .map(|&id| facts.verdict(id))
        .collect()
}

struct Accumulator<'o> {
    options: &'o SearchOptions,
    report: SearchReport,
    kept: BTreeMap<TheoremId, Vec<Violation>>,
}

impl Accumulator<'_> {
    /// Returns whether the graph had a violation.
    fn record(&mut self, index: u64, g: &Graph, outcome: GraphOutcome) -> bool {
        self.report.graphs_examined += 1;
        let mut violated = false;
        for (&id, result) in self.options.theorems.iter().zip(outcome) {
            let tally = self.report.tallies.entry(id).or_default();
            match result {
                Err(e) => {
                    tally.errors += 1;
                    if self.report.solver_errors.len() < self.options.max_violations {
                        self.report
                            .solver_errors
                            .push(format!("graph {index} {id}: {e}"));
                    }
                }
                Ok(verdict) => match verdict.status {
                    Status::Holds => tally.holds += 1,
                    Status::NotApplicable => tally.not_applicable += 1,
                    Status::Violated => {
                        tally.violated += 1;
                        violated = true;
                        let kept = self.kept.entry(id).or_default();
                        if kept.len() < self.options.max_violations {
                            kept.push(Violation {
                                index,
                                graph6: encode_graph6(g),
                                verdict,
                            });
                        }
                    }
                },
            }
        }
        violated
    }
}

/// Runs the selected checks over every graph of `source`. Results do not
/// depend on `jobs` apart from `elapsed_seconds`.
pub fn run_search(source: GraphSource, options: &SearchOptions) -> Result<SearchReport, LabError> {
    let start = Instant::now();
    let description = source.describe();
    let mut graphs = source.into_graphs()?;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(options.jobs)
        .build()
        .map_err(|e| LabError::WorkerPool(e.to_string()))?;

    let mut acc = Accumulator {
        options,
        report: SearchReport {
            source: description,
            graphs_examined: 0,
            tallies: options
                .theorems
                .iter()
                .map(|&id| (id, Tally::default()))
                .collect(),
            violations: Vec::new(),
            input_errors: Vec::new(),
            solver_errors: Vec::new(),
            stopped_early: false,
            elapsed_seconds: 0.0,
        },
        kept: BTreeMap::new(),
    };

    let mut index = 0u64;
    'chunks: loop {
        let mut chunk = Vec::with_capacity(CHUNK);
        for item in graphs.by_ref() {
            match item {
                Ok(g) if options.class.contains(&g) => chunk.push(g),
                Ok(_) => {}
                Err(e) => acc.report.input_errors.push(e),
            }
            if chunk.len() == CHUNK {
                break;
            }
        }
        if chunk.is_empty() {
            break;
        }
        let outcomes: Vec<GraphOutcome> =
            pool.install(|| chunk.par_iter().map(|g| evaluate(g, options)).collect());
        for (g, outcome) in chunk.iter().zip(outcomes) {
            let violated = acc.record(index, g, outcome);
            index += 1;
            if violated && options.early_exit {
                acc.report.stopped_early = true;
                break 'chunks;
            }
        }
    }

    let mut report = acc.report;
    for kept in acc.kept.values_mut() {
        kept.sort_by(|x, y| (&x.graph6, x.index).cmp(&(&y.graph6, y.index)));
    }
    report.violations = acc.kept.into_values().flatten().collect();
    report.elapsed_seconds = start.elapsed().as_secs_f64();
    Ok(report)
}
