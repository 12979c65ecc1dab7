use std::time::Instant;

use edgemu::families::{Family, FamilySpec};
use edgemu::solver::{mu_table, rainbow_bound, MuResult, MuRow};
use edgemu::verifier::{CheckStatus, VerificationReport};
use edgemu::{to_graph6, validate, Error, Graph};
use serde_json::{json, Value};

use crate::cache::{self, Params, ResultRecord};
use crate::input::{self, Loaded};
use crate::{BoundsArgs, CliError, ComputeArgs, FamiliesArgs, Outcome, VerifyArgs, SOLVER_VERSION};

fn solver_error(e: Error) -> CliError {
    match e {
        Error::NodeBudget { .. } => CliError::Resource(e.to_string()),
        other => CliError::Input(other.to_string()),
    }
}

fn pretty(value: &Value) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("JSON values always serialize");
    s.push('\n');
    s
}

fn graph_json(loaded: &Loaded) -> Value {
    let g = &loaded.graph;
    let report = validate(g);
    let mut doc = json!({
        "n": g.vertex_count(),
        "m": g.edge_count(),
        "degrees": g.degrees(),
        "regular": report.regular_degree.is_some(),
        "regular_degree": report.regular_degree,
        "min_degree": report.min_degree,
        "max_degree": report.max_degree,
        "meets_delta2": report.meets_delta2,
        "graph6": to_graph6(g),
        "edges": g.edges(),
    });
    if let Some(labels) = &loaded.labels {
        doc["vertex_labels"] = json!(labels);
    }
    doc
}

fn row_json(row: &MuRow) -> Value {
    json!({
        "t": row.t,
        "mu1": row.mu1,
        "mu2": row.mu2,
        "exact": row.exact,
        "witness_min": row.witness_min.colors(),
        "witness_max": row.witness_max.colors(),
    })
}

/// Exit status implied by a set of checks and the exactness of the search.
fn status_code(report: &VerificationReport, exact: bool) -> u8 {
    if !report.all_passed() {
        1
    } else if !exact {
        3
    } else {
        0
    }
}

pub fn compute(args: &ComputeArgs) -> Result<Outcome, CliError> {
    let src = &args.source;
    let loaded = input::load(src.graph6.as_deref(), src.edges.as_deref(), src.family.as_deref())?;
    let range = match (args.t, &args.t_range) {
        (Some(t), _) => Some(t..=t),
        (None, Some(text)) => Some(input::t_range(text)?),
        (None, None) => None,
    };
    let m = loaded.graph.edge_count();
    if range.is_none() && m > args.search.max_edges {
        return Err(CliError::Input(format!(
            "graph has {m} edges, more than --max-edges {}; raise the limit or give --t/--t-range",
            args.search.max_edges
        )));
    }

    let params = Params {
        t_range: range.as_ref().map(|r| [*r.start(), *r.end()]),
        node_budget: args.search.node_budget,
        summary_only: args.summary_only,
    };
    if let Some(path) = &args.cache {
        if let Some(output) = cache::lookup(path, &loaded.key, SOLVER_VERSION, &params)? {
            return Ok(Outcome {
                stdout: pretty(&output),
                ..Outcome::default()
            });
        }
    }

    let config = args.search.solver_config();
    let started = Instant::now();
    let result = mu_table(&loaded.graph, range, &config).map_err(solver_error)?;
    let duration_ms = started.elapsed().as_millis() as u64;

    let full = result.table.rows.len() == m + 1 - result.chi_prime;
    let mut report = VerificationReport::default();
    if full {
        report.record(
            &loaded.subject,
            &loaded.graph,
            loaded.family.as_ref(),
            Ok(result.clone()),
            &config,
        );
    }
    let exact = result.table.is_exact();
    let doc = compute_doc(&loaded, &result, &params, &report, exact, duration_ms);
    let code = status_code(&report, exact);

    if code == 0 {
        if let Some(path) = &args.cache {
            let record = ResultRecord {
                key: loaded.key.clone(),
                solver_version: SOLVER_VERSION.to_string(),
                params,
                output: doc.clone(),
            };
            cache::store(path, &record)?;
        }
    }
    let stderr = match code {
        1 => "error: verification checks failed\n".to_string(),
        3 => "error: node budget exhausted; values marked exact=false are bounds only\n".to_string(),
        _ => String::new(),
    };
    Ok(Outcome {
        stdout: pretty(&doc),
        stderr,
        code,
    })
}

fn compute_doc(
    loaded: &Loaded,
    result: &MuResult,
    params: &Params,
    report: &VerificationReport,
    exact: bool,
    duration_ms: u64,
) -> Value {
    let table = if params.summary_only {
        Value::Null
    } else {
        result.table.rows.iter().map(row_json).collect()
    };
    json!({
        "input": loaded.key,
        "solver_version": SOLVER_VERSION,
        "graph": graph_json(loaded),
        "chi_prime": result.chi_prime,
        "params": params,
        "table": table,
        "summary": result.summary,
        "checks": report.checks,
        "exact": exact,
        "duration_ms": duration_ms,
    })
}

pub fn verify(args: &VerifyArgs) -> Result<Outcome, CliError> {
    let mut corpus = Vec::new();
    for spec in &args.family {
        corpus.extend(input::family_range(spec)?);
    }
    for text in &args.graph6 {
        corpus.push(input::from_graph6(text)?);
    }
    for path in &args.edges {
        corpus.push(input::from_edges(path)?);
    }
    if corpus.is_empty() && !args.inject_corrupt {
        return Err(CliError::Input("nothing to verify; give --family, --graph6 or --edges".into()));
    }

    let config = args.search.solver_config();
    let mut report = VerificationReport::default();
    let mut exact = true;
    for item in &corpus {
        let m = item.graph.edge_count();
        let result = if m > args.search.max_edges {
            Err(Error::Argument(format!(
                "{m} edges exceeds --max-edges {}",
                args.search.max_edges
            )))
        } else {
            mu_table(&item.graph, None, &config)
        };
        match &result {
            Ok(r) if !r.table.is_exact() => exact = false,
            Err(Error::NodeBudget { .. }) => exact = false,
            _ => {}
        }
        report.record(&item.subject, &item.graph, item.family.as_ref(), result, &config);
    }
    if args.inject_corrupt {
        report.inject_corrupt();
    }
    report.finish();

    let code = status_code(&report, exact);
    let table = format!("{report}\n");
    Ok(if args.json {
        let doc = json!({
            "solver_version": SOLVER_VERSION,
            "subjects": report.subjects,
            "checks": report.checks,
            "passed": report.count(CheckStatus::Pass),
            "failed": report.count(CheckStatus::Fail),
            "skipped": report.count(CheckStatus::Skipped),
        });
        Outcome {
            stdout: pretty(&doc),
            stderr: table,
            code,
        }
    } else {
        Outcome {
            stdout: table,
            stderr: String::new(),
            code,
        }
    })
}

pub fn bounds(args: &BoundsArgs) -> Result<Outcome, CliError> {
    let (r, n) = match (args.r, args.n) {
        (Some(r), Some(n)) => (r, n),
        _ => {
            let loaded = input::load(args.graph6.as_deref(), args.edges.as_deref(), args.family.as_deref())?;
            let g: &Graph = &loaded.graph;
            let r = g
                .regular_degree()
                .ok_or_else(|| CliError::Input(format!("{} is not regular", loaded.subject)))?;
            (r as i64, g.vertex_count() as i64)
        }
    };
    if r < 2 {
        return Err(CliError::Input(format!("r = {r} must be at least 2")));
    }
    if n < 1 {
        return Err(CliError::Input(format!("n = {n} must be at least 1")));
    }
    let bound = rainbow_bound(r as usize, n as usize).map_err(solver_error)?;
    let holds = bound as i64 <= n - 1;
    let stdout = if args.json {
        pretty(&json!({
            "r": r,
            "n": n,
            "bound": bound,
            "n_minus_1": n - 1,
            "prop1_holds": holds,
        }))
    } else {
        format!("r={r} n={n} bound={bound} n-1={} holds={holds}\n", n - 1)
    };
    Ok(Outcome {
        stdout,
        stderr: String::new(),
        code: if holds { 0 } else { 1 },
    })
}

fn example(f: Family) -> &'static str {
    match f {
        Family::Cycle => "cycle:7",
        Family::Complete => "complete:4",
        Family::CompleteBipartite => "complete_bipartite:3,3",
        Family::Petersen => "petersen",
        Family::Prism => "prism:3",
        Family::MoebiusLadder => "moebius_ladder:4",
        Family::Hypercube => "hypercube:3",
    }
}

pub fn families(args: &FamiliesArgs) -> Outcome {
    let rows: Vec<(Family, FamilySpec)> = Family::ALL
        .into_iter()
        .map(|f| (f, example(f).parse().expect("examples are valid")))
        .collect();
    let stdout = if args.json {
        let list: Vec<Value> = rows
            .iter()
            .map(|(f, spec)| {
                let g = spec.generate();
                json!({
                    "name": f.name(),
                    "parameters": f.parameters(),
                    "example": spec.to_string(),
                    "example_n": g.vertex_count(),
                    "example_m": g.edge_count(),
                })
            })
            .collect();
        pretty(&Value::Array(list))
    } else {
        let mut out = format!("{:<20}  {:<10}  example\n", "family", "parameters");
        for (f, spec) in &rows {
            out.push_str(&format!("{:<20}  {:<10}  {spec}\n", f.name(), f.parameters()));
        }
        out
    };
    Outcome {
        stdout,
        ..Outcome::default()
    }
}
