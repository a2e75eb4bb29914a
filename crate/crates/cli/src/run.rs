//! Command implementations. Each returns an exit code plus the text to print,
//! so integration tests can drive them without spawning processes.
//!
//! Exit-code contract: 0 ok / freeness proved, 1 negative finding (mono copy
//! found, table diff), 2 invalid input, 3 undecided (budget exhausted).

use anyhow::Result;
use deltachi_core::cert::Certificate;
use deltachi_core::classify::{expected_construction, pair_threshold};
use deltachi_core::construct::{
    b1, b2, bh_surrogate, borsuk_surrogate, g1, g2, g3, g4, g5, g6, ramsey_k5, universal_forest,
    zoo, zykov, BuildGraph, LabeledBuild,
};
use deltachi_core::embed::{embeddability, FivePartition};
use deltachi_core::error::Error;
use deltachi_core::graph6::emit_graph6;
use deltachi_core::rational::Rational;
use deltachi_core::recognition::single_threshold;
use deltachi_core::search::Budget;
use deltachi_core::verify::{mono_free, verify_certificate, verify_trace};
use deltachi_core::{Graph, Outcome};
use serde_json::json;

use crate::io::{load_colored, resolve_graph, resolve_slot};
use crate::tables::{
    reproduce_tables, render_pairwise, showcase_construction, EXPECTED_EMB, EXPECTED_SINGLE,
    TABLE_ORDER,
};


/// Resolves an input graph, mapping failures to the invalid-input exit code.
macro_rules! resolve_or_exit2 {
    ($spec:expr) => {
        match resolve_graph($spec) {
            Ok(g) => g,
            Err(e) => return Ok(failure(2, format!("error: {e}\n"))),
        }
    };
}

pub struct CommandOutput {
    pub code: i32,
    pub text: String,
}

fn ok(text: impl Into<String>) -> CommandOutput {
    CommandOutput { code: 0, text: text.into() }
}

fn failure(code: i32, text: impl Into<String>) -> CommandOutput {
    CommandOutput { code, text: text.into() }
}

fn classify_error(e: &Error) -> CommandOutput {
    match e {
        Error::InvalidInput(_) | Error::InvalidArgument(_) | Error::Parse { .. } => {
            failure(2, format!("error: {e}"))
        }
        Error::Undecided(_) => failure(3, format!("undecided: {e}")),
        other => failure(2, format!("error: {other}")),
    }
}

pub fn cmd_classify(h1: &str, h2: &str, json_out: bool, budget_cap: u64) -> Result<CommandOutput> {
    let g1 = resolve_or_exit2!(h1);
    let g2 = resolve_or_exit2!(h2);
    let mut budget = Budget::new(budget_cap);
    let trace = match pair_threshold(&g1, &g2, &mut budget) {
        Ok(t) => t,
        Err(e) => return Ok(classify_error(&e)),
    };
    verify_trace(&g1, &g2, &trace).map_err(|r| anyhow::anyhow!("produced trace failed verification: {r}"))?;
    if json_out {
        let body = json!({
            "h1": h1,
            "h2": h2,
            "value": trace.value.to_string(),
            "branch": trace.branch.to_string(),
            "emb": [trace.emb1, trace.emb2],
            "eta": trace.eta.to_string(),
            "construction": expected_construction(&trace).to_string(),
            "diagram_path": trace.diagram_path(),
            "trace": trace,
        });
        Ok(ok(serde_json::to_string_pretty(&body)?))
    } else {
        let mut text = String::new();
        for line in trace.diagram_path() {
            text.push_str(&format!("  {line}\n"));
        }
        text.push_str(&format!("{}\n", trace.value));
        Ok(ok(text))
    }
}

pub fn cmd_emb(h: &str, json_out: bool, dot: bool, budget_cap: u64) -> Result<CommandOutput> {
    let g = resolve_or_exit2!(h);
    let mut budget = Budget::new(budget_cap);
    let result = match embeddability(&g, &mut budget) {
        Ok(r) => r,
        Err(e) => return Ok(classify_error(&e)),
    };
    if dot {
        let partition = best_partition(&result);
        return Ok(ok(render_dot(&g, partition.as_ref())));
    }
    if json_out {
        let body = json!({
            "graph": h,
            "emb": result.exact(),
            "low": result.low,
            "high": result.high,
            "result": result,
        });
        return Ok(ok(serde_json::to_string_pretty(&body)?));
    }
    match result.exact() {
        Some(v) => Ok(ok(format!("{v}\n"))),
        None => Ok(failure(3, format!("undecided: emb in [{}, {}]\n", result.low, result.high))),
    }
}

fn best_partition(result: &deltachi_core::EmbResult) -> Option<FivePartition> {
    if let Outcome::Yes(c) = &result.c5 {
        return Some(c.partition.clone());
    }
    if let Outcome::Yes(c) = &result.z2 {
        return Some(c.partition.clone());
    }
    if let Outcome::Yes(c) = &result.z1 {
        return Some(c.partition.clone());
    }
    if let Outcome::Yes(c) = &result.z0 {
        return Some(c.partition.clone());
    }
    None
}

/// DOT rendering with one fill color per class (grey when no partition).
fn render_dot(g: &Graph, partition: Option<&FivePartition>) -> String {
    const FILL: [&str; 5] = ["lightcoral", "lightblue", "lightgreen", "gold", "plum"];
    let mut out = String::from("graph {\n  node [style=filled];\n");
    for v in 0..g.order() {
        let color = partition
            .map(|p| FILL[(p.class_of[v] - 1) as usize])
            .unwrap_or("lightgrey");
        let label = partition
            .map(|p| format!("{} [class {}]", v, p.class_of[v]))
            .unwrap_or_else(|| v.to_string());
        out.push_str(&format!("  {v} [fillcolor={color}, label=\"{label}\"];\n"));
    }
    for (u, v) in g.edges() {
        out.push_str(&format!("  {u} -- {v};\n"));
    }
    out.push_str("}\n");
    out
}

pub fn cmd_threshold(h: &str, json_out: bool, budget_cap: u64) -> Result<CommandOutput> {
    let g = resolve_or_exit2!(h);
    let mut budget = Budget::new(budget_cap);
    let t = match single_threshold(&g, &mut budget) {
        Ok(t) => t,
        Err(e) => return Ok(classify_error(&e)),
    };
    verify_certificate(&g, &Certificate::SingleThreshold(t.clone()))
        .map_err(|r| anyhow::anyhow!("produced threshold failed verification: {r}"))?;
    if json_out {
        let body = json!({
            "graph": h,
            "value": t.value.to_string(),
            "threshold": t,
        });
        Ok(ok(serde_json::to_string_pretty(&body)?))
    } else {
        Ok(ok(format!("{}\n", t.value)))
    }
}

#[derive(Debug, Clone)]
pub struct ConstructOpts {
    pub n: Option<usize>,
    pub m: Option<usize>,
    pub k: Option<usize>,
    pub t: Option<usize>,
    pub dim: usize,
    pub eps: f64,
    pub alpha: Rational,
    pub seed: u64,
    pub sizes: Option<Vec<usize>>,
    pub slot: Option<String>,
    pub min_girth: Option<usize>,
    pub out: Option<String>,
}

impl Default for ConstructOpts {
    fn default() -> Self {
        ConstructOpts {
            n: None,
            m: None,
            k: None,
            t: None,
            dim: 3,
            eps: 0.3,
            alpha: Rational::new(1, 20),
            seed: 1,
            sizes: None,
            slot: None,
            min_girth: None,
            out: None,
        }
    }
}

fn need_n(opts: &ConstructOpts) -> Result<usize, Error> {
    opts.n.ok_or_else(|| Error::InvalidArgument("--n is required for this construction".into()))
}

fn need_slot(opts: &ConstructOpts) -> Result<String, Error> {
    opts.slot
        .clone()
        .ok_or_else(|| Error::InvalidArgument("--slot E=<name|file> is required".into()))
}

pub fn cmd_construct(id: &str, opts: &ConstructOpts) -> Result<CommandOutput> {
    let built: Result<LabeledBuild, Error> = (|| match id {
        "g1" | "g4" | "g6" => {
            let n = need_n(opts)?;
            let slot_spec = need_slot(opts)?;
            let slot = resolve_slot(&slot_spec)
                .map_err(|e| Error::InvalidArgument(format!("slot: {e}")))?;
            match id {
                "g1" => g1(n, &slot, opts.min_girth),
                "g4" => g4(n, &slot, opts.min_girth),
                _ => g6(n, &slot, opts.min_girth),
            }
        }
        "g2" => g2(need_n(opts)?, opts.alpha, opts.dim, opts.eps, opts.seed),
        "g3" => g3(need_n(opts)?, opts.alpha, opts.dim, opts.eps, opts.seed),
        "g5" => g5(need_n(opts)?, opts.alpha, opts.dim, opts.eps, opts.seed),
        "ramsey_k5" => {
            let sizes = opts.sizes.clone().ok_or_else(|| {
                Error::InvalidArgument("--sizes a,b,c,d,e is required for ramsey_k5".into())
            })?;
            if sizes.len() != 5 {
                return Err(Error::InvalidArgument("ramsey_k5 needs exactly 5 sizes".into()));
            }
            ramsey_k5([sizes[0], sizes[1], sizes[2], sizes[3], sizes[4]])
        }
        "zykov" => zykov(
            opts.k.ok_or_else(|| Error::InvalidArgument("--k is required".into()))?,
            opts.t.ok_or_else(|| Error::InvalidArgument("--t is required".into()))?,
        ),
        "universal_forest" => universal_forest(
            opts.k.ok_or_else(|| Error::InvalidArgument("--k is required".into()))?,
            opts.t.ok_or_else(|| Error::InvalidArgument("--t is required".into()))?,
        ),
        "borsuk" => borsuk_surrogate(opts.dim, need_n(opts)?, opts.eps, opts.seed),
        "bh" => {
            let m = opts.m.or(opts.n).ok_or_else(|| {
                Error::InvalidArgument("--m (or --n) is required for bh".into())
            })?;
            bh_surrogate(m, opts.dim, opts.eps, opts.alpha, opts.seed).map(|(build, audit)| {
                let mut build = build;
                build.recipe = build
                    .recipe
                    .param("bullets_checked", audit.checked.len())
                    .param("not_certified", audit.not_certified.join("; "));
                build
            })
        }
        "b1" => b1(need_n(opts)?, opts.alpha, opts.dim, opts.eps, opts.seed),
        "b2" => b2(need_n(opts)?, opts.alpha, opts.dim, opts.eps, opts.seed),
        other => {
            if let Some(name) = other.strip_prefix("zoo:") {
                let g = zoo(name)?;
                let mut parts = std::collections::BTreeMap::new();
                parts.insert(
                    "V".to_string(),
                    deltachi_core::VertexSet::full(g.order()),
                );
                Ok(LabeledBuild {
                    graph: BuildGraph::Plain(g),
                    parts,
                    recipe: deltachi_core::construct::ConstructionRecipe::new(format!(
                        "zoo:{name}"
                    )),
                })
            } else {
                Err(Error::InvalidArgument(format!(
                    "unknown construction {other:?}; expected g1..g6, ramsey_k5, zykov, \
                     universal_forest, borsuk, bh, b1, b2, or zoo:<name>"
                )))
            }
        }
    })();

    let build = match built {
        Ok(b) => b,
        Err(e) => return Ok(classify_error(&e)),
    };

    let (payload, format) = match &build.graph {
        BuildGraph::Plain(g) => (format!("{}\n", emit_graph6(g)), "g6"),
        BuildGraph::Colored(g) => (format!("{}\n", g.emit_cg6()), "cg6"),
    };
    let manifest = json!({
        "id": build.recipe.id,
        "format": format,
        "order": build.graph.order(),
        "min_degree": build.graph.min_degree(),
        "parameters": build.recipe.parameters,
        "slots": build.recipe.slots,
        "parts": build.parts,
    });
    let manifest_text = serde_json::to_string_pretty(&manifest)?;

    let mut text = String::new();
    match &opts.out {
        Some(path) => {
            std::fs::write(path, &payload)?;
            let manifest_path = format!("{path}.json");
            std::fs::write(&manifest_path, format!("{manifest_text}\n"))?;
            text.push_str(&format!(
                "wrote {path} ({format}, n = {}, min degree {})\nwrote {manifest_path}\n",
                build.graph.order(),
                build.graph.min_degree()
            ));
        }
        None => {
            text.push_str(&payload);
            text.push_str(&format!("{manifest_text}\n"));
        }
    }
    Ok(ok(text))
}

pub fn cmd_verify(host: &str, p1: &str, p2: &str, budget_cap: u64) -> Result<CommandOutput> {
    let colored = match load_colored(host) {
        Ok(c) => c,
        Err(e) => return Ok(failure(2, format!("error: {e}"))),
    };
    let h1 = resolve_or_exit2!(p1);
    let h2 = resolve_or_exit2!(p2);
    let mut budget = Budget::new(budget_cap);
    let report = mono_free(&colored, &h1, &h2, &mut budget);
    let mut text = String::new();
    for (color, result, pattern) in [
        ("red", &report.red_result, p1),
        ("blue", &report.blue_result, p2),
    ] {
        match result {
            Outcome::No => text.push_str(&format!("{color}: no copy of {pattern}\n")),
            Outcome::Yes(emb) => text.push_str(&format!(
                "{color}: found {pattern} at {:?}\n",
                emb.map.iter().map(|&v| v as usize).collect::<Vec<_>>()
            )),
            Outcome::Undecided => {
                text.push_str(&format!("{color}: undecided within budget for {pattern}\n"))
            }
        }
    }
    let code = if report.undecided() {
        3
    } else if report.is_free() {
        0
    } else {
        1
    };
    Ok(CommandOutput { code, text })
}

pub fn cmd_reproduce_tables(budget_cap: u64, corrupt: Option<(usize, usize)>) -> Result<CommandOutput> {
    let report = match reproduce_tables(budget_cap, corrupt) {
        Ok(r) => r,
        Err(e) => return Ok(classify_error(&e)),
    };
    let mut text = String::new();
    text.push_str("symmetric showcase (recomputed):\n");
    for (name, value) in &report.computed_symmetric {
        text.push_str(&format!("  {name:<18} {value}\n"));
    }
    text.push_str("\npairwise table (recomputed, upper triangle):\n");
    text.push_str(&render_pairwise(&report));
    text.push_str(&format!(
        "\ncertificates checked: {} (failures: {})\n",
        report.certificates_checked,
        report.certificate_failures.len()
    ));
    for f in &report.certificate_failures {
        text.push_str(&format!("  certificate failure: {f}\n"));
    }
    if report.ok() {
        text.push_str("all cells match the expected tables\n");
        Ok(ok(text))
    } else {
        for d in report.symmetric_diffs.iter().chain(&report.pairwise_diffs) {
            text.push_str(&format!(
                "  diff at ({}, {}): expected {}, got {}\n",
                d.row, d.col, d.expected, d.got
            ));
        }
        Ok(failure(1, text))
    }
}

pub fn cmd_list_zoo() -> Result<CommandOutput> {
    let mut text = String::new();
    text.push_str(&format!(
        "{:<20}{:>7}{:>6}{:>6}{:>8}{:>14}\n",
        "name", "order", "chi", "emb", "delta", "construction"
    ));
    for (idx, name) in TABLE_ORDER.iter().enumerate() {
        let g = zoo(name).expect("zoo names resolve");
        let (n, d) = EXPECTED_SINGLE[idx];
        let delta = Rational::new(n, d);
        let construction = showcase_construction(name)
            .map(|c| c.to_string())
            .unwrap_or_default();
        text.push_str(&format!(
            "{:<20}{:>7}{:>6}{:>6}{:>8}{:>14}\n",
            name,
            g.order(),
            3,
            EXPECTED_EMB[idx],
            delta.to_string(),
            construction
        ));
    }
    let mcgee = zoo("mcgee").expect("builtin");
    text.push_str(&format!(
        "{:<20}{:>7}{:>6}{:>6}{:>8}{:>14}\n",
        "mcgee",
        mcgee.order(),
        3,
        "-",
        "-",
        "(slot)"
    ));
    Ok(ok(text))
}

pub fn cmd_girth(h: &str) -> Result<CommandOutput> {
    let g = resolve_or_exit2!(h);
    let s = g.girth_stats();
    let fmt = |x: Option<usize>| x.map(|v| v.to_string()).unwrap_or_else(|| "inf".into());
    Ok(ok(format!("girth {}  odd girth {}\n", fmt(s.girth), fmt(s.odd_girth))))
}

/// Parses a --sizes list like `3,3,3,3,3`.
pub fn parse_sizes(text: &str) -> Result<Vec<usize>> {
    text.split(',')
        .map(|s| s.trim().parse::<usize>().map_err(|e| anyhow::anyhow!("bad size {s:?}: {e}")))
        .collect()
}
