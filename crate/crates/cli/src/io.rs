//! Input resolution: zoo names take precedence over file paths.

use anyhow::{bail, Context, Result};
use deltachi_core::construct::{builtin_slot, zoo, zoo_names, Provenance, SlotGraph};
use deltachi_core::graph6::parse_graph6;
use deltachi_core::search::Budget;
use deltachi_core::{Graph, Outcome, TwoColoredGraph};
use std::path::Path;

/// Resolves a graph argument: a zoo name if it matches, else a .g6 file
/// (first non-empty line).
pub fn resolve_graph(spec: &str) -> Result<Graph> {
    if zoo_names().contains(&spec) || spec == "pg" {
        return Ok(zoo(spec).expect("name checked"));
    }
    let path = Path::new(spec);
    if !path.exists() {
        bail!("{spec:?} is neither a zoo name nor an existing file (try `list-zoo`)");
    }
    let text = std::fs::read_to_string(path).with_context(|| format!("reading {spec}"))?;
    let line = text
        .lines()
        .find(|l| !l.trim().is_empty())
        .with_context(|| format!("{spec} is empty"))?;
    Ok(parse_graph6(line)?)
}

/// Loads a two-colored graph from a .cg6 file.
pub fn load_colored(path: &str) -> Result<TwoColoredGraph> {
    let text = std::fs::read_to_string(path).with_context(|| format!("reading {path}"))?;
    Ok(TwoColoredGraph::parse_cg6(&text)?)
}

/// Resolves a slot spec: builtin name first, else a .g6 file whose declared
/// values are measured from the graph itself.
pub fn resolve_slot(spec: &str) -> Result<SlotGraph> {
    if let Ok(slot) = builtin_slot(spec) {
        return Ok(slot);
    }
    let graph = resolve_graph(spec)?;
    let stats = graph.girth_stats();
    let declared_girth = stats.girth.unwrap_or(usize::MAX);
    let declared_chromatic =
        match deltachi_core::chromatic::chromatic_number(&graph, &mut Budget::new(10_000_000)) {
            Outcome::Yes(cert) => cert.chi,
            _ => 1,
        };
    Ok(SlotGraph::new(
        spec,
        graph,
        declared_girth,
        declared_chromatic,
        Provenance::User,
        &mut Budget::new(10_000_000),
    )?)
}
