use std::fs;
use std::path::Path;

use anyhow::{bail, Context, Result};
use fullobs::graph_core::{graph6_decode, make_standard, StandardKind};
use fullobs::Graph;

/// A graph argument as written on the command line.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GraphArg {
    Standard(StandardKind, usize),
    Literal(Graph),
}

impl GraphArg {
    /// Parse `P<n>`, `C<n>`, `K<n>`, an edge list `n:u-v,u-v,...`, or graph6.
    /// With `literal_g6` only graph6 is accepted.
    pub fn parse(text: &str, literal_g6: bool) -> Result<GraphArg> {
        let text = text.trim();
        if !literal_g6 {
            if let Some(arg) = shorthand(text)? {
                return Ok(arg);
            }
            if let Some((n, edges)) = text.split_once(':') {
                return Ok(GraphArg::Literal(edge_list(n, edges)?));
            }
        }
        let g = graph6_decode(text).with_context(|| format!("cannot read '{text}' as graph6"))?;
        Ok(GraphArg::Literal(g))
    }

    pub fn graph(&self) -> Result<Graph> {
        match *self {
            GraphArg::Standard(kind, n) => Ok(make_standard(kind, n)?),
            GraphArg::Literal(g) => Ok(g),
        }
    }
}

fn shorthand(text: &str) -> Result<Option<GraphArg>> {
    let mut chars = text.chars();
    let kind = match chars.next() {
        Some('P') => StandardKind::Path,
        Some('C') => StandardKind::Cycle,
        Some('K') => StandardKind::Complete,
        _ => return Ok(None),
    };
    let digits = chars.as_str();
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return Ok(None);
    }
    let n: usize = digits.parse().with_context(|| format!("bad order in '{text}'"))?;
    if n == 0 {
        bail!("'{text}': graphs need at least one vertex");
    }
    Ok(Some(GraphArg::Standard(kind, n)))
}

fn edge_list(order: &str, edges: &str) -> Result<Graph> {
    let n: usize = order.trim().parse().with_context(|| format!("bad vertex count '{order}'"))?;
    let mut list = Vec::new();
    for item in edges.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        let (u, v) = item
            .split_once('-')
            .with_context(|| format!("edge '{item}' is not of the form u-v"))?;
        list.push((
            u.trim().parse().with_context(|| format!("bad vertex in '{item}'"))?,
            v.trim().parse().with_context(|| format!("bad vertex in '{item}'"))?,
        ));
    }
    Ok(Graph::from_edges(n, &list)?)
}

/// Read one graph6 string per non-empty line.
pub fn read_graph6_file(path: &Path) -> Result<Vec<Graph>> {
    let text = fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))?;
    text.lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty())
        .map(|(i, l)| graph6_decode(l).with_context(|| format!("{}:{}", path.display(), i + 1)))
        .collect()
}

/// Parse an inclusive range `a-b` or a single number.
pub fn parse_range(text: &str) -> Result<std::ops::RangeInclusive<usize>> {
    let (a, b) = text.split_once('-').unwrap_or((text, text));
    let a: usize = a.trim().parse().with_context(|| format!("bad range '{text}'"))?;
    let b: usize = b.trim().parse().with_context(|| format!("bad range '{text}'"))?;
    if a > b {
        bail!("empty range '{text}'");
    }
    Ok(a..=b)
}
