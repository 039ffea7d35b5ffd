use std::fs::File;
use std::io::{BufRead, BufReader, Write};

use serde::Serialize;
use serde_json::{json, Value};

use clique_spectra::construct::{
    complete_graph, complete_multipartite, cycle_graph, empty_graph, flower, k3_join_empty, km_join_turan, path_graph,
    turan_graph, MultipartiteSpec,
};
use clique_spectra::extremal::{
    disjoint_clique_count_probe, explore_spectra_sum_extremal, format_value, generalized_turan, round_json, sweep,
    verify_mu3_extremal, verify_top_order_extremal, verify_triangle_count_extremal, write_csv, write_json,
    ExtremalReport, Objective, ProbeStatus, Source, SweepConfig, Verification, VerifyOptions,
};
use clique_spectra::graph6::{self, read_catalog};
use clique_spectra::spectral::{closed_form_radius, liu_bound, row_sum_bounds, spectral_radius};
use clique_spectra::{Error, Graph};

use crate::args::*;
use crate::Failure;

pub(crate) fn execute(command: Command, stdin: &mut dyn BufRead, out: &mut dyn Write, err: &mut dyn Write) -> Result<(), Failure> {
    match command {
        Command::Spectral(a) => spectral(a, stdin, out),
        Command::Construct(a) => construct(a, out),
        Command::Bounds(a) => bounds(a, stdin, out),
        Command::Sweep(a) => sweep_command(a, out, err),
        Command::Verify(a) => verify(a, out, err),
        Command::TuranCount(a) => turan_count(a, out, err),
    }
}

fn read_graphs(input: &GraphInput, stdin: &mut dyn BufRead) -> Result<Vec<Graph>, Failure> {
    if let Some(code) = &input.graph6 {
        return Ok(vec![graph6::decode(code)?]);
    }
    let graphs: clique_spectra::Result<Vec<(usize, Graph)>> = match &input.input {
        Some(path) => {
            let file = File::open(path).map_err(|e| Failure::Usage(format!("cannot open {}: {e}", path.display())))?;
            read_catalog(BufReader::new(file)).collect()
        }
        None => read_catalog(stdin).collect(),
    };
    Ok(graphs?.into_iter().map(|(_, g)| g).collect())
}

fn emit_json<T: Serialize>(value: &T, out: &mut dyn Write) -> Result<(), Failure> {
    let v = round_json(serde_json::to_value(value).expect("output serializes"));
    writeln!(out, "{}", serde_json::to_string_pretty(&v).expect("output serializes"))?;
    Ok(())
}

fn opt_value(x: Option<f64>) -> String {
    x.map(format_value).unwrap_or_default()
}

fn spectral(a: SpectralArgs, stdin: &mut dyn BufRead, out: &mut dyn Write) -> Result<(), Failure> {
    let emit = a.output.emit.unwrap_or(Emit::Csv);
    if emit == Emit::Graph6 {
        return Err(Failure::Usage("spectral emits csv or json".into()));
    }
    let opts = a.iteration.options();
    let mut rows = Vec::new();
    for g in read_graphs(&a.input, stdin)? {
        let res = match a.method {
            SpectralMethod::Power => spectral_radius(&g, a.r, &opts)?,
            SpectralMethod::ClosedForm => closed_form_radius(&g, a.r)?,
        };
        rows.push((graph6::encode(&g), res));
    }
    match emit {
        Emit::Csv => {
            writeln!(out, "graph6,r,value,method,iterations,residual")?;
            for (code, res) in &rows {
                writeln!(
                    out,
                    "{code},{},{},{},{},{}",
                    res.order,
                    format_value(res.radius),
                    res.method.as_str(),
                    res.iterations,
                    format_value(res.residual)
                )?;
            }
        }
        _ => {
            let items: Vec<Value> = rows
                .iter()
                .map(|(code, res)| {
                    let mut v = serde_json::to_value(res).expect("result serializes");
                    v["graph6"] = json!(code);
                    v
                })
                .collect();
            emit_json(&items, out)?;
        }
    }
    Ok(())
}

fn need(value: Option<usize>, flag: &str, family: Family) -> Result<usize, Failure> {
    value.ok_or_else(|| Failure::Usage(format!("family {family:?} needs --{flag}")))
}

fn construct(a: ConstructArgs, out: &mut dyn Write) -> Result<(), Failure> {
    let f = a.family;
    let g = match f {
        Family::Complete => complete_graph(need(a.n, "n", f)?)?,
        Family::Empty => empty_graph(need(a.n, "n", f)?)?,
        Family::Path => path_graph(need(a.n, "n", f)?)?,
        Family::Cycle => cycle_graph(need(a.n, "n", f)?)?,
        Family::Turan => turan_graph(need(a.n, "n", f)?, need(a.r, "r", f)?)?,
        Family::Multipartite => complete_multipartite(&MultipartiteSpec::new(a.parts.clone())?)?,
        Family::KJoinTuran => km_join_turan(need(a.n, "n", f)?, need(a.m, "m", f)?, need(a.r, "r", f)?)?,
        Family::K3JoinEmpty => k3_join_empty(need(a.n, "n", f)?)?,
        Family::Flower => flower(need(a.r, "r", f)?, need(a.k, "k", f)?, need(a.petals, "petals", f)?)?,
    };
    match a.output.emit.unwrap_or(Emit::Graph6) {
        Emit::Graph6 => writeln!(out, "{}", graph6::encode(&g))?,
        Emit::Csv => {
            writeln!(out, "u,v")?;
            for (u, v) in g.edges() {
                writeln!(out, "{u},{v}")?;
            }
        }
        Emit::Json => emit_json(
            &json!({ "n": g.n(), "graph6": graph6::encode(&g), "edges": g.edges() }),
            out,
        )?,
    }
    Ok(())
}

/// `Ok(None)` for results whose hypotheses the graph does not meet.
fn applicable(r: clique_spectra::Result<f64>) -> Result<Option<f64>, Failure> {
    match r {
        Ok(v) => Ok(Some(v)),
        Err(Error::Inapplicable { .. }) => Ok(None),
        Err(e) => Err(e.into()),
    }
}

#[derive(Serialize)]
struct BoundsRow {
    graph6: String,
    r: usize,
    mu: f64,
    row_sum_lower: f64,
    row_sum_upper: f64,
    clique_count_bound: Option<f64>,
    closed_form: Option<f64>,
}

fn bounds(a: BoundsArgs, stdin: &mut dyn BufRead, out: &mut dyn Write) -> Result<(), Failure> {
    let emit = a.output.emit.unwrap_or(Emit::Csv);
    if emit == Emit::Graph6 {
        return Err(Failure::Usage("bounds emits csv or json".into()));
    }
    let opts = a.iteration.options();
    let mut rows = Vec::new();
    for g in read_graphs(&a.input, stdin)? {
        let (lo, hi) = row_sum_bounds(&g, a.r)?;
        rows.push(BoundsRow {
            graph6: graph6::encode(&g),
            r: a.r,
            mu: spectral_radius(&g, a.r, &opts)?.radius,
            row_sum_lower: lo,
            row_sum_upper: hi,
            clique_count_bound: applicable(liu_bound(&g, a.r))?,
            closed_form: applicable(closed_form_radius(&g, a.r).map(|res| res.radius))?,
        });
    }
    if emit == Emit::Json {
        return emit_json(&rows, out);
    }
    writeln!(out, "graph6,r,mu,row_sum_lower,row_sum_upper,clique_count_bound,closed_form")?;
    for row in &rows {
        writeln!(
            out,
            "{},{},{},{},{},{},{}",
            row.graph6,
            row.r,
            format_value(row.mu),
            format_value(row.row_sum_lower),
            format_value(row.row_sum_upper),
            opt_value(row.clique_count_bound),
            opt_value(row.closed_form)
        )?;
    }
    Ok(())
}

fn verify_options(p: &PopulationArgs) -> Result<VerifyOptions, Failure> {
    let source = match &p.input {
        Some(path) => Source::Catalog(path.clone()),
        None => Source::default_for(p.n)?,
    };
    Ok(VerifyOptions {
        source,
        jobs: p.jobs,
        iteration: p.iteration.options(),
        equality_slack: p.slack,
    })
}

fn emit_report(report: &ExtremalReport, emit: Emit, out: &mut dyn Write) -> Result<(), Failure> {
    match emit {
        Emit::Json => write_json(report, out)?,
        Emit::Csv => write_csv(report, out)?,
        Emit::Graph6 => {
            for m in &report.maximizers {
                writeln!(out, "{}", m.graph6)?;
            }
        }
    }
    Ok(())
}

fn summarize(report: &ExtremalReport, err: &mut dyn Write) -> Result<(), Failure> {
    writeln!(
        err,
        "examined {}, admitted {}, best {}, {} maximizer class(es), {:.2}s",
        report.examined,
        report.admitted,
        opt_value(report.best_value),
        report.maximizers.len(),
        report.runtime_seconds
    )?;
    Ok(())
}

fn sweep_command(a: SweepArgs, out: &mut dyn Write, err: &mut dyn Write) -> Result<(), Failure> {
    let opts = verify_options(&a.population)?;
    let k = a.k.unwrap_or(a.r);
    let objective = match a.objective {
        ObjectiveKind::Mu => Objective::Mu { k },
        ObjectiveKind::MuSum => Objective::MuSum {
            from: k,
            to: a.upper.unwrap_or((2 * a.r).saturating_sub(1)),
        },
        ObjectiveKind::CliqueCount => Objective::CliqueCount { k },
    };
    let config = SweepConfig {
        forbidden_copies: a.copies,
        objective,
        source: opts.source,
        iteration: opts.iteration,
        equality_slack: opts.equality_slack,
        jobs: opts.jobs,
        record_rows: a.rows,
        ..SweepConfig::new(a.population.n, a.r, objective)
    };
    let report = sweep(&config)?;
    summarize(&report, err)?;
    emit_report(&report, a.output.emit.unwrap_or(Emit::Json), out)
}

fn finish_verification(v: &Verification, emit: Emit, out: &mut dyn Write, err: &mut dyn Write) -> Result<(), Failure> {
    match emit {
        Emit::Json => emit_json(v, out)?,
        other => emit_report(&v.report, other, out)?,
    }
    summarize(&v.report, err)?;
    if v.passed {
        writeln!(err, "PASS {}", v.claim)?;
        Ok(())
    } else {
        writeln!(err, "FAIL {}", v.claim)?;
        for f in &v.failures {
            writeln!(err, "  {f}")?;
        }
        Err(Failure::Verification)
    }
}

fn verify(a: VerifyArgs, out: &mut dyn Write, err: &mut dyn Write) -> Result<(), Failure> {
    let opts = verify_options(&a.population)?;
    let n = a.population.n;
    let emit = a.output.emit.unwrap_or(Emit::Json);
    match a.theorem {
        Theorem::Mu3 => finish_verification(&verify_mu3_extremal(n, &opts)?, emit, out, err),
        Theorem::TopOrder => finish_verification(&verify_top_order_extremal(n, a.r, &opts)?, emit, out, err),
        Theorem::TriangleCount => finish_verification(&verify_triangle_count_extremal(n, &opts)?, emit, out, err),
        Theorem::Explore => {
            let k = a.k.unwrap_or((2 * a.r).saturating_sub(2));
            let e = explore_spectra_sum_extremal(n, a.r, k, &opts)?;
            match emit {
                Emit::Json => emit_json(&e, out)?,
                other => emit_report(&e.report, other, out)?,
            }
            summarize(&e.report, err)?;
            writeln!(
                err,
                "conjectured value {}, observed {}: {} (known only for n >= {})",
                opt_value(e.conjectured_value),
                opt_value(e.report.best_value),
                if e.agrees { "agrees" } else { "differs" },
                format_value(e.threshold)
            )?;
            Ok(())
        }
        Theorem::CountProbe => {
            let k = a.k.unwrap_or(1);
            let p = disjoint_clique_count_probe(n, a.r, k, &opts)?;
            match emit {
                Emit::Json => emit_json(&p, out)?,
                other => emit_report(&p.report, other, out)?,
            }
            summarize(&p.report, err)?;
            writeln!(err, "exact {}, bound {}, status {:?}", opt_value(p.exact), format_value(p.bound), p.status)?;
            if p.status == ProbeStatus::BoundViolated {
                return Err(Failure::Verification);
            }
            Ok(())
        }
    }
}

fn turan_count(a: TuranCountArgs, out: &mut dyn Write, err: &mut dyn Write) -> Result<(), Failure> {
    let opts = verify_options(&a.population)?;
    let report = generalized_turan(a.population.n, a.k, a.r, &opts)?;
    summarize(&report, err)?;
    emit_report(&report, a.output.emit.unwrap_or(Emit::Json), out)
}
