//! Graph sources: fixtures, graph6 strings, files, stdin and generator
//! expressions.

use std::fs;
use std::io::Read;

use anyhow::{anyhow, bail, Context, Result};
use psi_core::generators::{all_graphs, labeled_trees, random_graph, random_tree};
use psi_core::io::{parse_edge_list, parse_graph6_str};
use psi_core::{complete, cycle, edgeless, named_fixture, path, star, FixtureId, Graph};

fn number<T: std::str::FromStr>(expr: &str, field: &str, text: &str) -> Result<T> {
    text.parse()
        .map_err(|_| anyhow!("generator `{expr}`: bad {field} `{text}`"))
}

/// Evaluates a generator expression such as `path:5`, `tree:8:3` or
/// `random:20:0.2`. Seeds default to `seed`. `trees:N` and `graphs:N`
/// produce many graphs.
pub fn generate(expr: &str, seed: u64) -> Result<Vec<Graph>> {
    let fields: Vec<&str> = expr.split(':').collect();
    let n = |i: usize| -> Result<usize> {
        let text = fields
            .get(i)
            .ok_or_else(|| anyhow!("generator `{expr}`: missing order"))?;
        number(expr, "order", text)
    };
    let seed_at =
        |i: usize| -> Result<u64> { fields.get(i).map_or(Ok(seed), |t| number(expr, "seed", t)) };
    let arity = |lo: usize, hi: usize| -> Result<()> {
        if fields.len() < lo || fields.len() > hi {
            bail!("generator `{expr}`: wrong number of fields");
        }
        Ok(())
    };
    Ok(match fields[0] {
        "fixture" => {
            arity(2, 2)?;
            vec![named_fixture(fields[1].parse()?)]
        }
        "path" | "complete" | "edgeless" | "cycle" | "star" | "trees" | "graphs" => {
            arity(2, 2)?;
            let n = n(1)?;
            match fields[0] {
                "path" => vec![path(n)],
                "complete" => vec![complete(n)],
                "edgeless" => vec![edgeless(n)],
                "cycle" => vec![cycle(n)?],
                "star" => vec![star(n)],
                "trees" => {
                    if n == 0 {
                        bail!("generator `{expr}`: trees need at least one vertex");
                    }
                    labeled_trees(n).collect()
                }
                _ => {
                    if n > 9 {
                        bail!("generator `{expr}`: graph enumeration stops at 9 vertices");
                    }
                    all_graphs(n)
                }
            }
        }
        "tree" => {
            arity(2, 3)?;
            let n = n(1)?;
            if n == 0 {
                bail!("generator `{expr}`: trees need at least one vertex");
            }
            vec![random_tree(n, seed_at(2)?)]
        }
        "random" => {
            arity(3, 4)?;
            let p: f64 = number(expr, "edge probability", fields[2])?;
            if !(0.0..=1.0).contains(&p) {
                bail!("generator `{expr}`: edge probability must be in [0, 1]");
            }
            vec![random_graph(n(1)?, p, seed_at(3)?)]
        }
        other => bail!("unknown generator `{other}`"),
    })
}

/// Parses every graph in `text`, which is either an edge list (first
/// content line `n <count>`) or graph6, one graph per line.
pub fn parse_graphs(text: &str, source: &str) -> Result<Vec<Graph>> {
    let first = text
        .lines()
        .map(str::trim)
        .find(|l| !l.is_empty() && !l.starts_with('#'));
    match first {
        None => bail!("{source}: no graph found"),
        Some(l) if l.starts_with("n ") || l == "n" => Ok(vec![
            parse_edge_list(text).with_context(|| source.to_string())?
        ]),
        Some(_) => text
            .lines()
            .enumerate()
            .filter(|(_, l)| !l.trim().is_empty() && l.trim() != ">>graph6<<")
            .map(|(i, l)| {
                parse_graph6_str(l.trim_end()).with_context(|| format!("{source}: line {}", i + 1))
            })
            .collect(),
    }
}

pub fn read_file(path: &str) -> Result<Vec<Graph>> {
    let text = fs::read_to_string(path).with_context(|| format!("cannot read {path}"))?;
    parse_graphs(&text, path)
}

pub fn read_stdin() -> Result<Vec<Graph>> {
    let mut text = String::new();
    std::io::stdin()
        .read_to_string(&mut text)
        .context("cannot read stdin")?;
    parse_graphs(&text, "stdin")
}

pub fn single(mut graphs: Vec<Graph>, what: &str) -> Result<Graph> {
    if graphs.len() != 1 {
        bail!("{what}: expected one graph, found {}", graphs.len());
    }
    Ok(graphs.remove(0))
}

/// An operand spec: `fixture:NAME`, `graph6:STR`, `file:PATH` or a
/// generator expression. A bare fixture name is accepted too.
pub fn operand(spec: &str, seed: u64) -> Result<Graph> {
    let graphs = if let Some(g6) = spec.strip_prefix("graph6:") {
        vec![parse_graph6_str(g6).with_context(|| format!("operand `{spec}`"))?]
    } else if let Some(file) = spec.strip_prefix("file:") {
        read_file(file)?
    } else if let Ok(id) = spec.parse::<FixtureId>() {
        vec![named_fixture(id)]
    } else {
        generate(spec, seed)?
    };
    single(graphs, &format!("operand `{spec}`"))
}
