use std::fs::File;
use std::io::{self, BufRead, BufReader, Read};
use std::path::{Path, PathBuf};

use annihilator::families::FAMILIES;
use annihilator::graph::encode_edge_list;
use annihilator::lab::{GraphClass, RandomSpec};
use annihilator::{
    build_family, encode_graph6, full_report_with, parse_edge_list, parse_graph6, run_search,
    Graph, GraphSource, InvariantReport, ReportOptions, SearchOptions, SearchReport, SolverLimits,
    TheoremId,
};
use serde_json::{json, Value};

use crate::args::{ClassArg, GlobalArgs, InputFormat, SearchArgs, SourceArgs};
use crate::output::{columns, Envelope, Outcome};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Input(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Input(_) => 3,
        }
    }
}

fn usage(e: impl ToString) -> CliError {
    CliError::Usage(e.to_string())
}

fn limits(global: &GlobalArgs) -> SolverLimits {
    let mut limits = SolverLimits::default();
    if let Some(exact) = global.limit_n {
        limits.exact = exact;
    }
    limits
}

fn is_stdin(path: Option<&Path>) -> bool {
    path.is_none_or(|p| p.as_os_str() == "-")
}

fn read_text(path: Option<&Path>) -> Result<String, CliError> {
    let mut text = String::new();
    let result = match path {
        Some(p) if !is_stdin(Some(p)) => {
            File::open(p).and_then(|mut f| f.read_to_string(&mut text))
        }
        _ => io::stdin().read_to_string(&mut text),
    };
    result.map_err(|e| CliError::Input(format!("cannot read input: {e}")))?;
    Ok(text)
}

fn report_value(report: &InvariantReport, witnesses: bool) -> Value {
    let mut value = serde_json::to_value(report).expect("report serializes");
    if !witnesses {
        value
            .as_object_mut()
            .expect("report is an object")
            .remove("witnesses");
    }
    value
}

fn opt<T: ToString>(v: Option<T>) -> String {
    v.map_or_else(|| "-".to_string(), |v| v.to_string())
}

pub fn compute(global: &GlobalArgs, input: Option<PathBuf>) -> Result<Outcome, CliError> {
    let text = read_text(input.as_deref())?;
    let graphs = match global.format {
        InputFormat::Graph6 => text
            .lines()
            .enumerate()
            .filter(|(_, l)| !l.trim().is_empty())
            .map(|(i, l)| {
                parse_graph6(l.trim()).map_err(|e| CliError::Input(format!("line {}: {e}", i + 1)))
            })
            .collect::<Result<Vec<_>, _>>()?,
        InputFormat::Edgelist => {
            vec![parse_edge_list(&text).map_err(|e| CliError::Input(e.to_string()))?]
        }
    };

    let options = ReportOptions {
        limits: limits(global),
        oracle: global.oracle,
    };
    let inputs = json!({
        "input": input.as_ref().map_or("-".to_string(), |p| p.display().to_string()),
        "format": format!("{:?}", global.format).to_lowercase(),
        "limit_n": options.limits.exact,
        "oracle": global.oracle,
        "witnesses": global.witnesses,
    });
    let mut envelope = Envelope::new("compute", inputs);
    let mut rows = vec![
        ["graph6", "n", "m", "alpha", "a", "alpha'", "mu", "d", "KE"]
            .map(String::from)
            .to_vec(),
    ];
    let mut results = Vec::new();
    for (i, g) in graphs.iter().enumerate() {
        let report = full_report_with(g, &options);
        let graph6 = encode_graph6(g);
        envelope
            .diagnostics
            .extend(report.diagnostics.iter().map(|d| format!("graph {i}: {d}")));
        rows.push(vec![
            graph6.clone(),
            report.n.to_string(),
            report.m.to_string(),
            opt(report.alpha),
            report.annihilation.to_string(),
            opt(report.alpha_crit),
            report.mu.to_string(),
            opt(report.crit_diff),
            opt(report.koenig_egervary),
        ]);
        results
            .push(json!({ "graph6": graph6, "report": report_value(&report, global.witnesses) }));
    }
    envelope.results = Value::Array(results);
    Ok(Outcome {
        envelope,
        table: columns(&rows),
        verdict: format!("computed {} graph(s)", graphs.len()),
        exit_code: 0,
    })
}

fn family_parameters(name: &str) -> Result<&'static [&'static str], CliError> {
    FAMILIES
        .iter()
        .find(|(f, _)| *f == name)
        .map(|(_, params)| *params)
        .ok_or_else(|| {
            let known: Vec<&str> = FAMILIES.iter().map(|(f, _)| *f).collect();
            usage(format!(
                "unknown family {name:?}; known: {}",
                known.join(", ")
            ))
        })
}

/// Matches `key=value` and bare arguments to the family's parameter names.
fn assign<'a>(name: &str, args: &'a [String]) -> Result<Vec<(&'static str, &'a str)>, CliError> {
    let names = family_parameters(name)?;
    let mut slots: Vec<Option<&str>> = vec![None; names.len()];
    let mut next = 0;
    for arg in args {
        let (index, value) = match arg.split_once('=') {
            Some((key, value)) => {
                let index = names
                    .iter()
                    .position(|n| *n == key)
                    .ok_or_else(|| usage(format!("family {name} has no parameter {key:?}")))?;
                (index, value)
            }
            None => {
                while next < slots.len() && slots[next].is_some() {
                    next += 1;
                }
                if next == slots.len() {
                    return Err(usage(format!("too many parameters for family {name}")));
                }
                (next, arg.as_str())
            }
        };
        if slots[index].replace(value).is_some() {
            return Err(usage(format!("parameter {} given twice", names[index])));
        }
    }
    names
        .iter()
        .zip(slots)
        .map(|(n, slot)| {
            slot.map(|v| (*n, v))
                .ok_or_else(|| usage(format!("missing parameter {n} for family {name}")))
        })
        .collect()
}

fn parse_number(key: &str, value: &str) -> Result<usize, CliError> {
    value.trim().parse().map_err(|_| {
        usage(format!(
            "parameter {key}: {value:?} is not a non-negative integer"
        ))
    })
}

pub fn family(
    global: &GlobalArgs,
    name: &str,
    params: &[String],
    verify: bool,
) -> Result<Outcome, CliError> {
    let assigned = assign(name, params)?;
    let values = assigned
        .iter()
        .map(|(k, v)| parse_number(k, v))
        .collect::<Result<Vec<_>, _>>()?;
    let instance = build_family(name, &values).map_err(usage)?;
    let label = std::iter::once(name.to_string())
        .chain(instance.parameters.iter().map(|(k, v)| format!("{k}={v}")))
        .collect::<Vec<_>>()
        .join(" ");

    let parameters: serde_json::Map<String, Value> = instance
        .parameters
        .iter()
        .map(|(k, v)| (k.to_string(), json!(v)))
        .collect();
    let mut envelope = Envelope::new(
        "family",
        json!({ "name": name, "parameters": parameters, "verify": verify, "limit_n": limits(global).exact }),
    );
    let mut results = json!({
        "name": instance.name,
        "parameters": parameters,
        "description": instance.description,
        "n": instance.graph.n(),
        "m": instance.graph.m(),
        "graph6": encode_graph6(&instance.graph),
        "edge_list": encode_edge_list(&instance.graph),
        "predicted": instance.predicted,
    });

    let mut rows = vec![vec![
        "field".to_string(),
        "predicted".into(),
        "computed".into(),
    ]];
    let p = &instance.predicted;
    let (verdict, exit_code) = if verify {
        let options = ReportOptions {
            limits: limits(global),
            oracle: global.oracle,
        };
        let report = full_report_with(&instance.graph, &options);
        envelope
            .diagnostics
            .extend(report.diagnostics.iter().cloned());
        let mismatches = p.compare(&report);
        let pass = mismatches.is_empty();
        results["verification"] = json!({
            "verdict": if pass { "PASS" } else { "FAIL" },
            "mismatches": mismatches,
            "report": report_value(&report, global.witnesses),
        });
        let mut row = |field: &str, predicted: String, computed: String| {
            rows.push(vec![field.into(), predicted, computed])
        };
        row("n", opt(p.n), report.n.to_string());
        row("alpha", opt(p.alpha), opt(report.alpha));
        row("a", opt(p.annihilation), report.annihilation.to_string());
        row("alpha'", opt(p.alpha_crit), opt(report.alpha_crit));
        row("mu", opt(p.mu), report.mu.to_string());
        row("KE", opt(p.koenig_egervary), opt(report.koenig_egervary));
        let summary = format!(
            "{label} alpha={} a={} alpha'={}",
            opt(report.alpha),
            report.annihilation,
            opt(report.alpha_crit)
        );
        if pass {
            (format!("PASS {summary}"), 0)
        } else {
            let fields: Vec<&str> = mismatches.iter().map(|m| m.field).collect();
            (
                format!("FAIL {summary} mismatched: {}", fields.join(", ")),
                1,
            )
        }
    } else {
        let mut row = |field: &str, predicted: String| {
            rows.push(vec![field.into(), predicted, String::new()])
        };
        row("n", opt(p.n));
        row("alpha", opt(p.alpha));
        row("a", opt(p.annihilation));
        row("alpha'", opt(p.alpha_crit));
        row("mu", opt(p.mu));
        row("KE", opt(p.koenig_egervary));
        (
            format!("built {label} graph6={}", encode_graph6(&instance.graph)),
            0,
        )
    };
    envelope.results = results;
    Ok(Outcome {
        envelope,
        table: columns(&rows),
        verdict,
        exit_code,
    })
}

pub fn parse_theorems(names: &[String]) -> Result<Vec<TheoremId>, CliError> {
    if names.is_empty() {
        return Ok(TheoremId::ALL.to_vec());
    }
    let mut ids = Vec::new();
    for name in names
        .iter()
        .flat_map(|n| n.split(','))
        .filter(|n| !n.is_empty())
    {
        let id: TheoremId = name.parse().map_err(usage)?;
        if !ids.contains(&id) {
            ids.push(id);
        }
    }
    Ok(ids)
}

/// `a..b` (inclusive), `a..=b`, or a single value.
fn parse_range(key: &str, spec: &str) -> Result<Vec<usize>, CliError> {
    match spec.split_once("..") {
        Some((lo, hi)) => {
            let lo = parse_number(key, lo)?;
            let hi = parse_number(key, hi.trim_start_matches('='))?;
            if lo > hi {
                return Err(usage(format!("parameter {key}: empty range {spec:?}")));
            }
            Ok((lo..=hi).collect())
        }
        None => Ok(vec![parse_number(key, spec)?]),
    }
}

fn family_graphs(spec: &[String]) -> Result<Vec<Graph>, CliError> {
    let (name, ranges) = spec
        .split_first()
        .ok_or_else(|| usage("--family needs a name"))?;
    let assigned = assign(name, ranges)?;
    let axes = assigned
        .iter()
        .map(|(k, v)| parse_range(k, v))
        .collect::<Result<Vec<_>, _>>()?;
    let mut combos: Vec<Vec<usize>> = vec![Vec::new()];
    for axis in &axes {
        combos = combos
            .into_iter()
            .flat_map(|prefix| {
                axis.iter().map(move |&v| {
                    let mut next = prefix.clone();
                    next.push(v);
                    next
                })
            })
            .collect();
    }
    combos
        .iter()
        .map(|values| build_family(name, values).map(|f| f.graph).map_err(usage))
        .collect()
}

fn parse_random(spec: &str, seed: u64) -> Result<RandomSpec, CliError> {
    let parts: Vec<&str> = spec.split(',').map(str::trim).collect();
    let [n, p, count] = parts.as_slice() else {
        return Err(usage(format!("--random expects n,p,count, got {spec:?}")));
    };
    let bad = |what: &str| usage(format!("--random: invalid {what} in {spec:?}"));
    Ok(RandomSpec {
        n: n.parse().map_err(|_| bad("n"))?,
        p: p.parse().map_err(|_| bad("p"))?,
        seed,
        count: count.parse().map_err(|_| bad("count"))?,
    })
}

fn build_source(global: &GlobalArgs, source: &SourceArgs) -> Result<GraphSource, CliError> {
    if let Some(max_n) = source.enumerate {
        return Ok(GraphSource::Enumerate { max_n });
    }
    if let Some(spec) = &source.random {
        return Ok(GraphSource::Random(parse_random(spec, global.seed)?));
    }
    if let Some(spec) = &source.family {
        return Ok(GraphSource::Graphs {
            label: format!("family {}", spec.join(" ")),
            graphs: family_graphs(spec)?,
        });
    }
    let path = source.graph6.as_deref();
    let reader: Box<dyn BufRead> = if is_stdin(path) {
        Box::new(BufReader::new(io::stdin()))
    } else {
        let path = path.expect("not stdin");
        let file = File::open(path)
            .map_err(|e| CliError::Input(format!("cannot open {}: {e}", path.display())))?;
        Box::new(BufReader::new(file))
    };
    let label = path.map_or("-".to_string(), |p| p.display().to_string());
    Ok(GraphSource::Graph6 {
        label: format!("graph6 {label}"),
        reader,
    })
}

fn search_table(report: &SearchReport) -> String {
    let mut rows = vec![["theorem", "holds", "n/a", "violated", "errors"]
        .map(String::from)
        .to_vec()];
    for (id, t) in &report.tallies {
        rows.push(vec![
            id.to_string(),
            t.holds.to_string(),
            t.not_applicable.to_string(),
            t.violated.to_string(),
            t.errors.to_string(),
        ]);
    }
    let mut text = format!(
        "source: {}\ngraphs examined: {}\n\n",
        report.source, report.graphs_examined
    );
    text.push_str(&columns(&rows));
    if !report.violations.is_empty() {
        text.push('\n');
        let mut rows = vec![["graph6", "theorem", "detail"].map(String::from).to_vec()];
        rows.extend(report.violations.iter().map(|v| {
            vec![
                v.graph6.clone(),
                v.verdict.theorem.to_string(),
                v.verdict.detail.clone(),
            ]
        }));
        text.push_str(&columns(&rows));
    }
    text
}

pub fn search(
    global: &GlobalArgs,
    command: &'static str,
    theorems: &[String],
    search: &SearchArgs,
) -> Result<Outcome, CliError> {
    let theorems = parse_theorems(theorems)?;
    let graph_source = build_source(global, &search.source)?;
    let options = SearchOptions {
        theorems: theorems.clone(),
        class: match search.class {
            ClassArg::All => GraphClass::All,
            ClassArg::Bipartite => GraphClass::Bipartite,
            ClassArg::ConnectedClawFree => GraphClass::ConnectedClawFree,
        },
        limits: limits(global),
        jobs: global.jobs,
        early_exit: search.early_exit,
        max_violations: search.max_violations,
    };
    let inputs = json!({
        "theorems": theorems,
        "source": graph_source.describe(),
        "class": options.class,
        "jobs": options.jobs,
        "limit_n": options.limits.exact,
        "early_exit": options.early_exit,
    });
    let report = run_search(graph_source, &options).map_err(usage)?;

    let mut envelope = Envelope::new(command, inputs);
    envelope
        .diagnostics
        .extend(report.input_errors.iter().map(|e| format!("input {e}")));
    envelope
        .diagnostics
        .extend(report.solver_errors.iter().cloned());
    let unexpected = report.unexpected_violations();
    let violated: u64 = report.tallies.values().map(|t| t.violated).sum();
    let (verdict, exit_code) = if unexpected > 0 {
        (
            format!(
                "FAIL {unexpected} violation(s) of proven statements over {} graphs",
                report.graphs_examined
            ),
            1,
        )
    } else if !report.input_errors.is_empty() {
        (
            format!(
                "ERROR {} unreadable input line(s)",
                report.input_errors.len()
            ),
            3,
        )
    } else {
        (
            format!(
                "PASS {} graphs, {violated} violation(s) of unproven statements",
                report.graphs_examined
            ),
            0,
        )
    };
    let table = search_table(&report);
    let mut results = serde_json::to_value(&report).expect("report serializes");
    results["unexpected_violations"] = json!(unexpected);
    envelope.results = results;
    Ok(Outcome {
        envelope,
        table,
        verdict,
        exit_code,
    })
}
