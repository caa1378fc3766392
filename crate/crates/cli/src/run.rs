use std::fmt::Write as _;
use std::io::Read;
use std::sync::Arc;

use anyhow::{anyhow, Context, Result};
use serde_json::{json, Value};

use lyubeznik::complex::{class_census, is_broken, lyubeznik_complex};
use lyubeznik::covers::{clutter_edges, covers_of, is_e_minimal_cover_of, m_minimal_covers};
use lyubeznik::generators::radical_generators;
use lyubeznik::graphs::{check_graph_propositions, edge_ideal, graph_corpus, parse_graph, SimpleGraph};
use lyubeznik::invariants::{
    analyze, is_totally_lyubeznik, min_l_length, min_preserved_size, total_obstruction,
    AnalyzeConfig, BettiSource, InvariantReport,
};
use lyubeznik::oracle::{
    projdim_oracle, taylor_betti, verify_chain_complex, verify_resolution, verify_taylor_chain_complex,
    ChainCheck,
};
use lyubeznik::{corpus, parse_ideal, GenSet, MonomialIdeal, OrderedIdeal, SubsetClass};

use crate::config::{Command, Input, RunConfig};

/// A finished report in both renderings.
pub struct Report {
    pub json: Value,
    pub text: String,
}

pub fn run(config: &RunConfig) -> Result<Report> {
    if let Command::Graph {
        check_props,
        edge_ideal,
        ..
    } = &config.command
    {
        let graph = load_graph(&config.input)?;
        return graph_report(&graph, config, *check_props, *edge_ideal);
    }
    let ideal = Arc::new(load_ideal(&config.input)?);
    let ordered = match &config.order {
        Some(text) => OrderedIdeal::parse(ideal.clone(), text)?,
        None => OrderedIdeal::identity(ideal.clone()),
    };
    let mut text = String::new();
    let mut json = match &config.command {
        Command::Covers { .. } => covers(&ordered, &mut text),
        Command::Complex { .. } => complex(&ordered, &mut text),
        Command::Analyze { .. } => {
            let report = analyze(&ordered, &analyze_config(config))?;
            report_json(&report, &ordered, &mut text)
        }
        Command::Search { .. } => search(&ordered, config, &mut text)?,
        Command::OracleBetti { .. } => {
            let table = taylor_betti(&ideal, &config.oracle)?;
            let view = table.view(ideal.context());
            let _ = write!(
                text,
                "field: {}\nprojdim: {}\ngraded:\n{}multigraded:\n{}",
                config.oracle.field,
                table.projective_dimension().unwrap_or(0),
                table.render_graded(),
                table.render_multigraded(ideal.context())
            );
            json!({
                "field": config.oracle.field.to_string(),
                "projdim": table.projective_dimension().unwrap_or(0),
                "betti": serde_json::to_value(view)?,
            })
        }
        Command::Verify { .. } => verify(&ordered, config, &mut text)?,
        Command::RadicalGens { .. } => {
            let gens = radical_generators(&ordered)?;
            let ctx = ideal.context();
            let polys: Vec<Value> = gens
                .polynomials
                .iter()
                .enumerate()
                .map(|(k, p)| {
                    let shown = p.display(ctx);
                    let _ = writeln!(text, "g{} = {shown}", k + 1);
                    json!({ "s": k + 1, "polynomial": shown, "terms": p.len() })
                })
                .collect();
            if !gens.minimal {
                text.push_str("warning: the resolution under this order is not minimal\n");
            }
            json!({ "minimal": gens.minimal, "generators": polys })
        }
        Command::Graph { .. } => unreachable!(),
    };
    if let Value::Object(map) = &mut json {
        map.insert("order".into(), json!(ordered.word()));
    }
    Ok(finish(config, json, text))
}

fn finish(config: &RunConfig, mut json: Value, text: String) -> Report {
    if let Value::Object(map) = &mut json {
        map.insert("schema".into(), json!(1));
        map.insert("command".into(), json!(config.command.name()));
    }
    Report { json, text }
}

fn read_input(input: &Input) -> Result<String> {
    match input {
        Input::Stdin => {
            let mut s = String::new();
            std::io::stdin().read_to_string(&mut s).context("reading standard input")?;
            Ok(s)
        }
        Input::File(path) => {
            std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
        }
        Input::Corpus(_) => unreachable!(),
    }
}

fn load_ideal(input: &Input) -> Result<MonomialIdeal> {
    if let Input::Corpus(name) = input {
        if name == "i3" {
            return Ok(corpus::i3());
        }
        return corpus::corpus()
            .into_iter()
            .find(|(n, _)| n == name)
            .map(|(_, i)| i)
            .ok_or_else(|| anyhow!("no bundled ideal named `{name}`"));
    }
    let parsed = parse_ideal(&read_input(input)?)?;
    for w in &parsed.warnings {
        log::warn!("{w}");
    }
    Ok(parsed.ideal)
}

fn load_graph(input: &Input) -> Result<SimpleGraph> {
    if let Input::Corpus(name) = input {
        return graph_corpus()
            .into_iter()
            .find(|(n, _)| n == name)
            .map(|(_, g)| g)
            .ok_or_else(|| anyhow!("no bundled graph named `{name}`"));
    }
    Ok(parse_graph(&read_input(input)?)?)
}

fn analyze_config(config: &RunConfig) -> AnalyzeConfig {
    AnalyzeConfig {
        search: config.search,
        oracle: config.oracle,
    }
}

fn one_based(set: GenSet) -> Vec<usize> {
    set.iter().map(|i| i + 1).collect()
}

fn sets_json(sets: &[GenSet]) -> Value {
    json!(sets.iter().map(|&s| one_based(s)).collect::<Vec<_>>())
}

fn covers(ordered: &OrderedIdeal, text: &mut String) -> Value {
    let ideal = ordered.ideal();
    let ctx = ideal.context();
    let mut per_generator = Vec::new();
    for u in 0..ideal.mu() {
        let _ = writeln!(text, "m{} = {}", u + 1, ideal.generator(u).display(ctx));
        let mut list = Vec::new();
        for c in covers_of(u, ideal).expect("index in range") {
            let e_minimal = is_e_minimal_cover_of(c.members, u, ideal);
            let rest = c.members.without(u);
            let broken = match ordered.min_of(rest) {
                Some(least) if ordered.precedes(u, least) => Some((rest, u)),
                _ => c
                    .members
                    .subsets()
                    .filter(|d| !d.is_empty())
                    .find_map(|d| is_broken(d, ordered).map(|court| (d, court))),
            };
            let _ = write!(text, "  {}", c.members.label());
            if e_minimal {
                text.push_str("  e-minimal");
            }
            match broken {
                Some((d, court)) => {
                    let _ = writeln!(text, "  broken: m{} courts {}", court + 1, d.label());
                }
                None => text.push_str("  preserved\n"),
            }
            list.push(json!({
                "members": one_based(c.members),
                "e_minimal": e_minimal,
                "preserved": broken.is_none(),
                "court": broken.map(|(_, court)| court + 1),
                "broken_subset": broken.map(|(d, _)| one_based(d)),
            }));
        }
        per_generator.push(json!({
            "generator": u + 1,
            "monomial": ideal.generator(u).display(ctx).to_string(),
            "covers": list,
        }));
    }
    let clutter = clutter_edges(ideal);
    let m_minimal: Vec<GenSet> = m_minimal_covers(ideal).iter().map(|c| c.members).collect();
    let labels = |sets: &[GenSet]| sets.iter().map(|s| s.label()).collect::<Vec<_>>().join(" ");
    let _ = writeln!(text, "clutter: {}", labels(clutter));
    let _ = writeln!(text, "m-minimal: {}", labels(&m_minimal));
    json!({
        "generators": per_generator,
        "clutter": sets_json(clutter),
        "m_minimal": sets_json(&m_minimal),
    })
}

fn complex(ordered: &OrderedIdeal, text: &mut String) -> Value {
    let complex = lyubeznik_complex(ordered);
    let census = class_census(&complex);
    let f = complex.f_vector();
    let _ = writeln!(text, "dimension: {}", complex.dimension());
    let _ = writeln!(
        text,
        "f-vector: {}",
        f.iter().map(usize::to_string).collect::<Vec<_>>().join(" ")
    );
    text.push_str("facets:\n");
    for facet in &complex.facets {
        let _ = writeln!(text, "  {}", facet.label());
    }
    text.push_str("faces:\n");
    for face in complex.faces.iter().filter(|f| !f.is_empty()) {
        let _ = writeln!(text, "  {}", face.label());
    }
    text.push_str("classes (size: preserved-cover unpreserved-cover preserved-non-cover unpreserved-non-cover):\n");
    let mut rows = Vec::new();
    for (size, counts) in census.iter().enumerate().skip(1) {
        let _ = writeln!(
            text,
            "  {size}: {} {} {} {}",
            counts[0], counts[1], counts[2], counts[3]
        );
        let mut row = serde_json::Map::new();
        row.insert("size".into(), json!(size));
        for (class, count) in SubsetClass::ALL.iter().zip(counts) {
            row.insert(class.name().into(), json!(count));
        }
        rows.push(Value::Object(row));
    }
    json!({
        "dimension": complex.dimension(),
        "f_vector": f,
        "faces": sets_json(&complex.faces),
        "facets": sets_json(&complex.facets),
        "census": rows,
    })
}

fn report_json(report: &InvariantReport, ordered: &OrderedIdeal, text: &mut String) -> Value {
    let ctx = ordered.ideal().context();
    let order: Vec<String> = report.order.iter().map(usize::to_string).collect();
    let _ = writeln!(text, "order: {}", order.join(","));
    let _ = writeln!(text, "minimal: {}", report.minimal);
    let _ = writeln!(text, "obsL: {}", report.obs_l);
    let _ = writeln!(text, "l_length: {}", report.l_length);
    let _ = writeln!(text, "ps: {}", report.ps);
    let _ = writeln!(text, "height: {}", report.height);
    let _ = writeln!(
        text,
        "ara: {} <= ara <= {}{}",
        report.ara.lower,
        report.ara.upper,
        if report.ara.equality { " (equal)" } else { "" }
    );
    let betti = match &report.betti {
        Some((table, source)) => {
            let _ = write!(
                text,
                "betti of R/I (from {}):\n{}",
                match source {
                    BettiSource::Preserved => "preserved sets",
                    BettiSource::Oracle => "Taylor oracle",
                },
                table.render_graded()
            );
            let mut v = serde_json::to_value(table.view(ctx)).expect("serializable");
            v["source"] = serde_json::to_value(source).expect("serializable");
            v
        }
        None => {
            text.push_str("betti: unavailable\n");
            Value::Null
        }
    };
    json!({
        "order": report.order,
        "minimal": report.minimal,
        "obsL": report.obs_l,
        "l_length": report.l_length,
        "ps": report.ps,
        "height": report.height,
        "betti": betti,
        "ara": serde_json::to_value(report.ara).expect("serializable"),
    })
}

fn search(ordered: &OrderedIdeal, config: &RunConfig, text: &mut String) -> Result<Value> {
    let ideal = ordered.ideal_arc();
    let tobs = total_obstruction(ideal, &config.search)?;
    let l = min_l_length(ideal, &config.search)?;
    let ps = min_preserved_size(ideal, &config.search)?;
    let report = analyze(ordered, &analyze_config(config))?;
    let mut json = report_json(&report, ordered, text);
    let lyubeznik = tobs.value == 0;
    let definitive = lyubeznik || tobs.exact;
    let totally = if config.search.force || ideal.mu() <= config.search.max_exhaustive {
        Some(is_totally_lyubeznik(ideal, &config.search)?.totally)
    } else {
        None
    };
    let almost = match projdim_oracle(ideal, &config.oracle) {
        Ok(pd) if l.value == pd => Some(true),
        Ok(_) if l.exact => Some(false),
        _ => None,
    };
    let word = |w: &[usize]| w.iter().map(|g| (g + 1).to_string()).collect::<Vec<_>>().join(",");
    let _ = writeln!(text, "search: {} ({} orders)", config.search.mode, tobs.orders_searched);
    let _ = writeln!(text, "tobsL: {}", tobs.value);
    let _ = writeln!(text, "L: {}", l.value);
    let _ = writeln!(text, "ps_min: {}", ps.value);
    let _ = writeln!(
        text,
        "lyubeznik: {}{}",
        lyubeznik,
        if definitive { "" } else { " (heuristic search, not conclusive)" }
    );
    let _ = writeln!(text, "witness: {}", word(&tobs.witness));
    let show = |b: Option<bool>| b.map_or("unknown".to_string(), |b| b.to_string());
    let _ = writeln!(text, "almost: {}", show(almost));
    let _ = writeln!(text, "totally: {}", show(totally));
    let map = json.as_object_mut().expect("object");
    for (k, v) in [
        ("search_mode", json!(config.search.mode.to_string())),
        ("orders_searched", json!(tobs.orders_searched)),
        ("exact", json!(tobs.exact && l.exact && ps.exact)),
        ("tobsL", json!(tobs.value)),
        ("L", json!(l.value)),
        ("L_witness", json!(l.witness_word())),
        ("ps_min", json!(ps.value)),
        ("lyubeznik", json!(lyubeznik)),
        ("definitive", json!(definitive)),
        ("witness", json!(tobs.witness_word())),
        ("almost", json!(almost)),
        ("totally", json!(totally)),
    ] {
        map.insert(k.into(), v);
    }
    Ok(json)
}

fn chain_json(check: &ChainCheck) -> Value {
    json!({
        "passed": check.passed(),
        "by_size": check.by_size.iter().map(|&(size, ok)| json!({ "size": size, "ok": ok })).collect::<Vec<_>>(),
    })
}

fn verify(ordered: &OrderedIdeal, config: &RunConfig, text: &mut String) -> Result<Value> {
    let ideal = ordered.ideal();
    let ctx = ideal.context();
    let chain = verify_chain_complex(ordered);
    let taylor = verify_taylor_chain_complex(ideal);
    let resolution = verify_resolution(ordered, &config.oracle)?;
    let status = |ok: bool| if ok { "PASS" } else { "FAIL" };
    let _ = writeln!(text, "{} lyubeznik complex squares to zero", status(chain.passed()));
    let _ = writeln!(text, "{} taylor complex squares to zero", status(taylor.passed()));
    let mut degrees = Vec::new();
    for (a, dims) in &resolution.degrees {
        let ok = dims.iter().all(|&d| d == 0);
        let shown = a.display(ctx).to_string();
        let _ = writeln!(text, "{} exact in degree {shown}", status(ok));
        degrees.push(json!({
            "multidegree": shown,
            "exponents": a.exponents(),
            "reduced_homology": dims,
            "ok": ok,
        }));
    }
    let passed = chain.passed() && taylor.passed() && resolution.passed();
    let _ = writeln!(text, "{}", status(passed));
    Ok(json!({
        "passed": passed,
        "chain_complex": chain_json(&chain),
        "taylor_chain_complex": chain_json(&taylor),
        "resolution": { "passed": resolution.passed(), "degrees": degrees },
    }))
}

fn graph_report(graph: &SimpleGraph, config: &RunConfig, check_props: bool, emit_ideal: bool) -> Result<Report> {
    let mut text = String::new();
    let mut json = serde_json::Map::new();
    let check_props = check_props || !emit_ideal;
    if emit_ideal {
        let file = edge_ideal(graph)?.to_ideal_file();
        text.push_str(&file);
        json.insert("ideal_file".into(), json!(file));
    }
    if check_props {
        let report = check_graph_propositions(graph, &config.search)?;
        let _ = writeln!(text, "longest path: {} edges", report.longest_path_edges);
        let _ = writeln!(text, "lyubeznik: {}", report.lyubeznik);
        let _ = writeln!(text, "totally lyubeznik: {}", report.totally_lyubeznik);
        if let Some(w) = &report.non_minimal_order {
            let labels: Vec<String> = w.iter().map(|&k| graph.edge_label(k)).collect();
            let _ = writeln!(text, "non-minimal order: {}", labels.join(" < "));
        }
        for c in &report.checks {
            let convention = c
                .convention
                .map(|v| format!(" [{}]", serde_json::to_value(v).expect("serializable").as_str().unwrap_or("")))
                .unwrap_or_default();
            let verdict = match (c.hypothesis, c.holds()) {
                (false, _) => "n/a",
                (true, true) => "holds",
                (true, false) => "FAILS",
            };
            let _ = writeln!(text, "{verdict}: {}{convention}", c.proposition);
        }
        let mut v = serde_json::to_value(&report)?;
        if let Some(w) = report.non_minimal_order {
            v["non_minimal_order"] = json!(w.iter().map(|g| g + 1).collect::<Vec<_>>());
        }
        json.insert("report".into(), v);
    }
    Ok(finish(config, Value::Object(json), text))
}
