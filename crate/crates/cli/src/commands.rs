use std::fs;

use irrtools::bounds::{value_string, CATALOG, CSV_HEADER};
use irrtools::rational::{decimal_string, fraction_string, sig12};
use irrtools::search::{
    class_mode_report_capped, enumerate_free_trees_capped, extremal_capped, falsify_capped,
    level_sequence_to_graph, FalsifyMode, TreeClass,
};
use irrtools::sequences::{
    derive, is_graphical, is_tree_sequence, parse_sequence_literal, realize_graph_hakimi,
    realize_tree,
};
use irrtools::stats::{
    figure_series, reproduce_correlation, reproduce_regression, reproduce_table, table_rows,
    PrintedRegression, TableId, REPORT_CSV_HEADER, TABLE1, TABLE2,
};
use irrtools::{
    all_indices, evaluate_all, evaluate_bound, indices::sigma_closed_form, BoundId, BoundInput,
    BoundParams, BoundReport, DegreeSequenceView, Error, Graph, Result, Verdict,
};
use serde_json::{json, Value};

use crate::args::{
    BoundSelection, BoundSource, CheckArgs, ExtremalArgs, FalsifyArgs, GraphSource, ParamArgs,
    TableRow,
};
use crate::output::Output;

/// Exit status 2: a probative report was violated under --expect-hold.
pub struct Violations(pub usize);

fn read_graph(path: &std::path::Path) -> Result<Graph> {
    let text = fs::read_to_string(path)
        .map_err(|e| Error::Domain(format!("cannot read graph file {}: {e}", path.display())))?;
    Graph::parse_edge_list(&text).map_err(|e| Error::Domain(format!("{}: {e}", path.display())))
}

fn realize(entries: &[u64]) -> Result<Graph> {
    if is_tree_sequence(entries) {
        realize_tree(entries)
    } else {
        realize_graph_hakimi(entries)
    }
}

fn resolve_graph(src: &GraphSource) -> Result<(String, Graph)> {
    if let Some(s) = &src.sequence {
        let entries = parse_sequence_literal(s)?;
        Ok((format!("sequence {s}"), realize(&entries)?))
    } else if let Some(path) = &src.graph {
        Ok((path.display().to_string(), read_graph(path)?))
    } else if let Some(f) = src.family {
        Ok((f.to_string(), f.build()?))
    } else {
        unreachable!("clap requires one input source")
    }
}

pub fn indices(src: &GraphSource) -> Result<Output> {
    let (label, g) = resolve_graph(src)?;
    let values = all_indices(&g);
    let mut obj = serde_json::Map::new();
    obj.insert("input".into(), json!(label));
    obj.insert("n".into(), json!(g.vertex_count()));
    obj.insert("m".into(), json!(g.edge_count()));
    let mut rows = vec![
        vec!["n".to_string(), g.vertex_count().to_string()],
        vec!["m".to_string(), g.edge_count().to_string()],
    ];
    for v in values {
        obj.insert(v.kind.name().into(), json!(v.value));
        rows.push(vec![v.kind.name().to_string(), v.value.to_string()]);
    }
    Ok(Output::new(Value::Object(obj), &["index", "value"], rows).with_summary(label))
}

fn fractions(v: &[irrtools::Q]) -> Vec<String> {
    v.iter().map(fraction_string).collect()
}

pub fn sequence_analyze(sequence: &str, convention: irrtools::Convention) -> Result<Output> {
    let entries = parse_sequence_literal(sequence)?;
    let view = DegreeSequenceView::new(entries.clone(), convention)?;
    let derived = derive(&view).ok();
    let mean = view.mean();
    let graphical = is_graphical(&entries);
    let tree = is_tree_sequence(&entries);
    // the closed form reads entries as caterpillar spine degrees
    let closed = match convention {
        irrtools::Convention::PaperTable => sigma_closed_form(&view).ok(),
        irrtools::Convention::Standard => None,
    };

    let mut rows: Vec<Vec<String>> = vec![
        vec!["entries".into(), sequence.to_string()],
        vec!["convention".into(), convention.to_string()],
        vec!["n".into(), view.order().to_string()],
        vec![
            "m".into(),
            view.size().map_or(String::new(), |m| m.to_string()),
        ],
        vec!["max_degree".into(), view.max_degree().to_string()],
        vec![
            "lambda".into(),
            format!("{} ({})", fraction_string(&mean), decimal_string(&mean)),
        ],
        vec!["graphical".into(), graphical.to_string()],
        vec!["tree_sequence".into(), tree.to_string()],
        vec![
            "sigma_closed_form".into(),
            closed.map_or(String::new(), |s| s.to_string()),
        ],
    ];
    let derived_json = match &derived {
        Some(d) => {
            let r_mean = d.mean_half_difference();
            let a_mean = d.mean_half_sum();
            rows.push(vec![
                "half_differences".into(),
                fractions(&d.half_differences).join(" "),
            ]);
            rows.push(vec!["half_sums".into(), fractions(&d.half_sums).join(" ")]);
            rows.push(vec!["lambda_r".into(), fraction_string(&r_mean)]);
            rows.push(vec!["lambda_a".into(), fraction_string(&a_mean)]);
            rows.push(vec![
                "max_half_difference".into(),
                fraction_string(d.max_half_difference()),
            ]);
            rows.push(vec![
                "max_half_sum".into(),
                fraction_string(d.max_half_sum()),
            ]);
            json!({
                "half_differences": fractions(&d.half_differences),
                "half_sums": fractions(&d.half_sums),
                "lambda_r": fraction_string(&r_mean),
                "lambda_a": fraction_string(&a_mean),
                "max_half_difference": fraction_string(d.max_half_difference()),
                "max_half_sum": fraction_string(d.max_half_sum()),
            })
        }
        None => Value::Null,
    };
    let json = json!({
        "entries": entries,
        "convention": convention.to_string(),
        "n": view.order(),
        "m": view.size(),
        "max_degree": view.max_degree(),
        "lambda": fraction_string(&mean),
        "graphical": graphical,
        "tree_sequence": tree,
        "sigma_closed_form": closed,
        "derived": derived_json,
    });
    Ok(Output::new(json, &["field", "value"], rows))
}

fn params(p: &ParamArgs) -> BoundParams {
    BoundParams {
        alpha: p.alpha,
        beta: p.beta,
        p: p.p,
        eta: p.eta,
        eta1: p.eta1.clone(),
        t: p.t,
        max_sigma_gating: p.b10_gating.into(),
    }
}

fn table_row_input(tr: TableRow) -> Result<BoundInput> {
    let rows: Vec<([u64; 7], u64)> = match tr.table {
        TableId::One => TABLE1.iter().map(|r| (r.entries, r.irr)).collect(),
        TableId::Two => TABLE2.iter().map(|r| (r.entries, r.irr)).collect(),
    };
    let (entries, irr) = tr
        .row
        .checked_sub(1)
        .and_then(|i| rows.get(i))
        .ok_or_else(|| {
            Error::Domain(format!(
                "table {} has rows 1..={}, got {}",
                tr.table,
                rows.len(),
                tr.row
            ))
        })?;
    Ok(BoundInput::paper_table(entries, Some(*irr))?
        .with_label(format!("table {} row {}", tr.table, tr.row)))
}

fn bound_input(src: &BoundSource, args: &CheckArgs) -> Result<BoundInput> {
    if args.irr.is_some() && src.sequence.is_none() {
        return Err(Error::Domain(
            "--irr only applies to --sequence input".into(),
        ));
    }
    if let Some(s) = &src.sequence {
        let view = DegreeSequenceView::new(parse_sequence_literal(s)?, args.convention)?;
        BoundInput::from_view(&view, args.irr)
    } else if let Some(path) = &src.graph {
        BoundInput::from_graph(path.display().to_string(), &read_graph(path)?)
    } else if let Some(f) = src.family {
        BoundInput::from_graph(f.to_string(), &f.build()?)
    } else if let Some(tr) = src.table_row {
        table_row_input(tr)
    } else {
        unreachable!("clap requires one input source")
    }
}

const CLASS_MODE_BOUNDS: [BoundId; 5] = [
    BoundId::B1a,
    BoundId::B1b,
    BoundId::B2a,
    BoundId::B2b,
    BoundId::B10,
];

fn tally(reports: &[BoundReport]) -> Value {
    let count = |v: Verdict| reports.iter().filter(|r| r.verdict == v).count();
    json!({
        "reports": reports.len(),
        "probative": reports.iter().filter(|r| r.is_probative()).count(),
        "holds": count(Verdict::Holds),
        "violated": count(Verdict::Violated),
        "indeterminate": count(Verdict::Indeterminate),
        "undefined": count(Verdict::Undefined),
    })
}

pub fn bounds_check(args: &CheckArgs, cap: usize) -> Result<(Output, Violations)> {
    let input = bound_input(&args.source, args)?;
    let p = params(&args.params);
    let reports = if args.class_mode {
        let graph = input
            .graph
            .as_ref()
            .filter(|_| input.is_tree)
            .ok_or_else(|| Error::Domain("--class-mode needs an input that is a tree".into()))?;
        let n = graph.vertex_count();
        let d = graph.degrees().into_iter().max().unwrap_or(0);
        let ids: Vec<BoundId> = match args.bound {
            BoundSelection::All => CLASS_MODE_BOUNDS.to_vec(),
            BoundSelection::One(id) => vec![id],
        };
        ids.into_iter()
            .map(|id| class_mode_report_capped(id, n, d, &p, cap))
            .collect::<Result<Vec<_>>>()?
    } else {
        match args.bound {
            BoundSelection::All => evaluate_all(&input, &p)?,
            BoundSelection::One(id) => vec![evaluate_bound(id, &input, &p)?],
        }
    };
    let violated = reports
        .iter()
        .filter(|r| r.is_probative() && r.holds() == Some(false))
        .count();
    let json = json!({
        "input": input.label,
        "class_mode": args.class_mode,
        "reports": reports.iter().map(BoundReport::to_json).collect::<Vec<_>>(),
        "summary": tally(&reports),
    });
    let rows = reports.iter().map(|r| r.csv_record().to_vec()).collect();
    let mut out =
        Output::new(json, &CSV_HEADER, rows).with_summary(format!("input: {}", input.label));
    // one line per distinct note, listing the bounds that carry it
    let mut notes: Vec<(&str, Vec<String>)> = Vec::new();
    for r in &reports {
        for note in &r.notes {
            match notes.iter_mut().find(|(n, _)| n == note) {
                Some((_, ids)) => ids.push(r.bound_id.to_string()),
                None => notes.push((note, vec![r.bound_id.to_string()])),
            }
        }
    }
    for (note, ids) in notes {
        out = out.with_summary(format!("[{}] {note}", ids.join(",")));
    }
    Ok((out, Violations(violated)))
}

pub fn bounds_falsify(args: &FalsifyArgs, cap: usize) -> Result<Output> {
    let mode = match args.samples {
        Some(samples) => FalsifyMode::Random {
            n: args.nmax,
            samples,
            seed: args.seed,
        },
        None => FalsifyMode::Exhaustive { n_max: args.nmax },
    };
    let outcome = falsify_capped(args.bound, mode, &params(&args.params), cap)?;
    let rows = outcome
        .counterexamples
        .iter()
        .map(|c| {
            vec![
                c.bound_id.to_string(),
                c.order().to_string(),
                c.canonical.to_string(),
                value_string(&c.report.lhs),
                value_string(&c.report.rhs),
                c.report.relation.to_string(),
                value_string(&c.report.margin),
                c.report.params.clone(),
            ]
        })
        .collect();
    let mode_text = match mode {
        FalsifyMode::Exhaustive { n_max } => format!("all trees with n <= {n_max}"),
        FalsifyMode::Random { n, samples, seed } => {
            format!("{samples} random trees of order {n}, seed {seed}")
        }
    };
    Ok(Output::new(
        outcome.to_json(),
        &[
            "bound_id",
            "n",
            "canonical",
            "lhs",
            "rhs",
            "relation",
            "margin",
            "params",
        ],
        rows,
    )
    .with_summary(format!(
        "{}: {} counterexample(s) over {} ({} examined, {} skipped)",
        outcome.bound_id,
        outcome.counterexamples.len(),
        mode_text,
        outcome.trees_examined,
        outcome.skipped
    )))
}

pub fn bounds_list() -> Output {
    let rows: Vec<Vec<String>> = CATALOG
        .iter()
        .map(|s| {
            vec![
                s.code.to_string(),
                s.name.to_string(),
                s.relation.symbol().to_string(),
                s.statement.to_string(),
                s.hypotheses.to_string(),
            ]
        })
        .collect();
    let json = Value::Array(
        CATALOG
            .iter()
            .map(|s| {
                json!({
                    "code": s.code,
                    "name": s.name,
                    "relation": s.relation.symbol(),
                    "statement": s.statement,
                    "hypotheses": s.hypotheses,
                })
            })
            .collect(),
    );
    Output::new(
        json,
        &["code", "name", "relation", "statement", "hypotheses"],
        rows,
    )
}

pub fn enumerate(n: usize, count_only: bool, cap: usize) -> Result<Output> {
    let trees = enumerate_free_trees_capped(n, cap)?;
    if count_only {
        let count = trees.count();
        return Ok(Output::new(
            json!({"n": n, "count": count}),
            &["n", "count"],
            vec![vec![n.to_string(), count.to_string()]],
        ));
    }
    let mut rows = Vec::new();
    let mut items = Vec::new();
    for (i, levels) in trees.enumerate() {
        let g = level_sequence_to_graph(&levels)?;
        let idx = all_indices(&g);
        let (irr, sigma) = (idx[0].value, idx[1].value);
        let text: Vec<String> = levels.iter().map(usize::to_string).collect();
        rows.push(vec![
            (i + 1).to_string(),
            text.join(" "),
            irr.to_string(),
            sigma.to_string(),
        ]);
        items.push(json!({"levels": levels, "albertson": irr, "sigma": sigma}));
    }
    Ok(Output::new(
        json!({"n": n, "count": items.len(), "trees": items}),
        &["index", "levels", "albertson", "sigma"],
        rows,
    ))
}

pub fn extremal(args: &ExtremalArgs, cap: usize) -> Result<Output> {
    let class = match (&args.degrees, args.n, args.max_degree) {
        (Some(d), _, _) => TreeClass::WithDegreeMultiset(parse_sequence_literal(d)?),
        (None, Some(n), Some(max_degree)) => TreeClass::WithMaxDegree { n, max_degree },
        (None, Some(n), None) => TreeClass::AllTrees(n),
        (None, None, _) => unreachable!("clap requires --n or --degrees"),
    };
    let res = extremal_capped(&class, args.objective, args.direction, cap)?;
    let rows = vec![
        vec!["class".into(), res.class.to_string()],
        vec!["objective".into(), res.objective.name().to_string()],
        vec!["direction".into(), res.direction.name().to_string()],
        vec!["optimum".into(), res.optimum.to_string()],
        vec!["witness".into(), res.witness.to_string()],
        vec!["witness_edges".into(), edge_summary(&res.witness_graph())],
        vec!["trees_examined".into(), res.trees_examined.to_string()],
    ];
    Ok(Output::new(res.to_json(), &["field", "value"], rows))
}

fn edge_summary(g: &Graph) -> String {
    let edges: Vec<String> = g.edges().map(|(u, v)| format!("{u}-{v}")).collect();
    edges.join(" ")
}

pub fn tables_reproduce(table: TableId) -> Output {
    let report = reproduce_table(table);
    let mut columns: Vec<&str> = report.cells.iter().map(|c| c.column).collect();
    columns.dedup();
    columns.sort_unstable();
    columns.dedup();
    let mut json = report.to_json();
    let mut tallies = serde_json::Map::new();
    let mut out_summary = Vec::new();
    for col in &columns {
        let (hits, total) = report.tally(col);
        let derivable = report.column(col).any(|c| c.recomputed.is_some());
        tallies.insert(
            col.to_string(),
            json!({"matches": hits, "cells": total, "derivable": derivable}),
        );
        if derivable {
            out_summary.push(format!("{col}: {hits}/{total} match"));
        } else {
            out_summary.push(format!("{col}: printed values used as data"));
        }
    }
    json["tallies"] = Value::Object(tallies);
    let rows = report
        .csv_records()
        .into_iter()
        .map(|r| r.to_vec())
        .collect();
    let mut out = Output::new(json, &REPORT_CSV_HEADER, rows);
    for s in out_summary {
        out = out.with_summary(s);
    }
    out
}

pub fn tables_export(table: TableId) -> Output {
    let (header, rows) = table_rows(table);
    let json = json!({
        "table": table.number(),
        "columns": header,
        "rows": rows,
    });
    Output::new(json, &header, rows)
}

pub fn stats_correlate(table: TableId) -> Result<Output> {
    let rep = reproduce_correlation(table)?;
    let opt = |v: Option<f64>| v.map_or("undefined".to_string(), sig12);
    let rows = rep
        .comparisons
        .iter()
        .map(|c| {
            vec![
                c.row.clone(),
                c.col.clone(),
                opt(c.computed),
                sig12(c.printed),
                c.abs_diff.map_or(String::new(), sig12),
                if c.within { "match" } else { "deviation" }.to_string(),
            ]
        })
        .collect();
    let deviations = rep.deviations().count();
    Ok(Output::new(
        rep.to_json(),
        &["row", "col", "computed", "printed", "abs_diff", "status"],
        rows,
    )
    .with_summary(format!(
        "table {table}: {deviations} of {} entries deviate from the printed matrix by more than {}",
        rep.comparisons.len(),
        sig12(irrtools::stats::MATRIX_TOLERANCE)
    )))
}

pub fn stats_regress(table: TableId, predict: Option<&[f64]>) -> Result<Output> {
    let attempts = reproduce_regression(table)?;
    let printed = PrintedRegression::of(table);
    if let Some(p) = predict {
        if p.len() != 2 {
            return Err(Error::Domain(format!(
                "--predict needs 2 coordinates, got {}",
                p.len()
            )));
        }
    }
    let printed_prediction = match predict {
        Some(p) => Some(irrtools::stats::predict_linear(
            &printed.coefficient_values(),
            printed.intercept_value(),
            p,
        )?),
        None => None,
    };
    let mut rows = vec![vec![
        "printed".to_string(),
        String::new(),
        printed.coefficients.join(";"),
        printed.intercept.to_string(),
        printed.r_squared.to_string(),
        String::new(),
        String::new(),
        String::new(),
        printed_prediction.map_or(String::new(), sig12),
    ]];
    let mut fits = Vec::new();
    for a in &attempts {
        let prediction = match predict {
            Some(p) => Some(a.fit.predict(p)?),
            None => None,
        };
        let coefs: Vec<String> = a.fit.coefficients.iter().map(|&c| sig12(c)).collect();
        rows.push(vec![
            a.label.to_string(),
            a.fit.feature_names.join(";"),
            coefs.join(";"),
            sig12(a.fit.intercept),
            sig12(a.fit.r_squared),
            a.fit.rank.to_string(),
            sig12(a.fit.condition_number),
            if a.r_squared_matches {
                "match"
            } else {
                "deviation"
            }
            .to_string(),
            prediction.map_or(String::new(), sig12),
        ]);
        let mut j = a.to_json();
        j["prediction"] = json!(prediction.map(sig12));
        fits.push(j);
    }
    let json = json!({
        "table": table.number(),
        "printed": {
            "coefficients": printed.coefficients,
            "intercept": printed.intercept,
            "r_squared": printed.r_squared,
            "query": printed.query.map(sig12),
            "prediction": printed.prediction,
            "recomputed_prediction": sig12(printed.recomputed_prediction()),
        },
        "predict_at": predict.map(|p| p.iter().map(|&x| sig12(x)).collect::<Vec<_>>()),
        "printed_model_prediction": printed_prediction.map(sig12),
        "fits": fits,
    });
    Ok(Output::new(
        json,
        &[
            "model",
            "features",
            "coefficients",
            "intercept",
            "r_squared",
            "rank",
            "condition_number",
            "r_squared_status",
            "prediction",
        ],
        rows,
    )
    .with_summary(format!(
        "printed model at ({}, {}): {} (printed {})",
        sig12(printed.query[0]),
        sig12(printed.query[1]),
        sig12(printed.recomputed_prediction()),
        printed.prediction
    )))
}

pub fn plots_emit(figure: u8) -> Result<Output> {
    let s = figure_series(figure)?;
    let header: Vec<&str> = s.header.iter().map(String::as_str).collect();
    let json = json!({"figure": figure, "columns": s.header, "rows": s.rows});
    Ok(Output::new(json, &header, s.rows.clone()).csv_by_default())
}
