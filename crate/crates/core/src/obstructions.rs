//! Minimal obstructions computed by exhaustive search.
//!
//! A minimal `H`-obstruction is a graph with no full `H`-colouring all of
//! whose proper induced subgraphs have one. Such graphs are
//! point-determining and have at most `|V(H)| + 1` vertices, so `obs(H)` is
//! found by scanning the point-determining classes up to that order.

use std::collections::BTreeSet;
use std::fmt;

use crate::enumeration::{Catalog, MAX_SUPPORTED_ORDER};
use crate::error::{Error, Result};
use crate::fullhom::full_hom_exists;
use crate::graph_core::{canonize, is_isomorphic, CanonicalForm, Graph, MAX_ORDER};
use crate::pd_core::{full_core_graph, is_point_determining};

/// A canonical, sorted set of obstructions for one host.
#[derive(Clone, PartialEq, Eq)]
pub struct ObstructionSet {
    host: Graph,
    members: Vec<(CanonicalForm, Graph)>,
}

impl ObstructionSet {
    /// Canonize, sort and deduplicate `graphs`.
    pub fn new(host: Graph, graphs: impl IntoIterator<Item = Graph>) -> Self {
        let mut members: Vec<(CanonicalForm, Graph)> = graphs
            .into_iter()
            .map(|g| {
                let c = canonize(&g);
                (c.form(), c.graph)
            })
            .collect();
        members.sort_by(|a, b| a.0.cmp(&b.0));
        members.dedup_by(|a, b| a.0 == b.0);
        ObstructionSet { host, members }
    }

    pub fn host(&self) -> &Graph {
        &self.host
    }

    pub fn members(&self) -> &[(CanonicalForm, Graph)] {
        &self.members
    }

    /// Canonically labelled members in canonical order.
    pub fn graphs(&self) -> impl Iterator<Item = &Graph> {
        self.members.iter().map(|(_, g)| g)
    }

    pub fn forms(&self) -> impl Iterator<Item = &CanonicalForm> {
        self.members.iter().map(|(f, _)| f)
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, g: &Graph) -> bool {
        let form = canonize(g).form();
        self.members.binary_search_by(|(f, _)| f.cmp(&form)).is_ok()
    }

    /// Whether both sets have the same members, whatever their hosts.
    pub fn same_members(&self, other: &ObstructionSet) -> bool {
        self.forms().eq(other.forms())
    }

    /// Members of `self` missing from `other`.
    pub fn difference(&self, other: &ObstructionSet) -> Vec<Graph> {
        let theirs: BTreeSet<&CanonicalForm> = other.forms().collect();
        self.members
            .iter()
            .filter(|(f, _)| !theirs.contains(f))
            .map(|(_, g)| *g)
            .collect()
    }

    /// A copy with the class of `g` removed.
    pub fn without(&self, g: &Graph) -> ObstructionSet {
        let form = canonize(g).form();
        ObstructionSet {
            host: self.host,
            members: self.members.iter().filter(|(f, _)| *f != form).cloned().collect(),
        }
    }

    /// The union of both member lists, keeping the host of `self`.
    pub fn union(&self, other: &ObstructionSet) -> ObstructionSet {
        ObstructionSet::new(self.host, self.graphs().chain(other.graphs()).copied())
    }

    /// Check the structural invariants every obstruction set must satisfy.
    pub fn check_invariants(&self) -> Result<()> {
        for pair in self.members.windows(2) {
            if pair[0].0 >= pair[1].0 {
                return Err(Error::precondition("members are not strictly sorted"));
            }
        }
        for (form, g) in &self.members {
            if canonize(g).form() != *form {
                return Err(Error::precondition(format!("member {g} does not match its key")));
            }
            if g.order() > self.host.order() + 1 {
                return Err(Error::precondition(format!(
                    "member {g} has more than {} vertices",
                    self.host.order() + 1
                )));
            }
            if !is_point_determining(g) {
                return Err(Error::precondition(format!("member {g} is not point-determining")));
            }
        }
        Ok(())
    }
}

impl fmt::Debug for ObstructionSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("ObstructionSet")
            .field("host", &self.host.to_string())
            .field("members", &self.graphs().map(|g| g.to_string()).collect::<Vec<_>>())
            .finish()
    }
}

/// `g` has no full `h`-colouring but every one-vertex deletion has one.
/// Colourability is hereditary, so this covers every proper induced subgraph.
pub fn is_minimal_obstruction(g: &Graph, h: &Graph) -> bool {
    if full_hom_exists(g, h) {
        return false;
    }
    if g.order() == 1 {
        return true;
    }
    (0..g.order()).all(|v| full_hom_exists(&g.delete_vertex_unchecked(v), h))
}

fn check_host(h: &Graph) -> Result<()> {
    if h.order() + 1 > MAX_SUPPORTED_ORDER {
        return Err(Error::UnsupportedOrder {
            order: h.order() + 1,
            max: MAX_SUPPORTED_ORDER,
        });
    }
    Ok(())
}

fn scan(catalog: &Catalog, h: &Graph, orders: std::ops::RangeInclusive<usize>) -> Result<ObstructionSet> {
    let mut found = Vec::new();
    for order in orders {
        found.extend(catalog.par_filter_map(order, |g| {
            (is_point_determining(g) && is_minimal_obstruction(g, h)).then_some(*g)
        })?);
    }
    Ok(ObstructionSet::new(*h, found))
}

/// `obs(h)` by exhaustive search over the built-in enumeration.
pub fn obs_oracle(h: &Graph) -> Result<ObstructionSet> {
    obs_oracle_in(Catalog::builtin(), h)
}

/// `obs(h)` restricted to the classes of `catalog`.
pub fn obs_oracle_in(catalog: &Catalog, h: &Graph) -> Result<ObstructionSet> {
    check_host(h)?;
    scan(catalog, h, 1..=h.order() + 1)
}

/// `obs*(h)`: the members of `obs(h)` with `|V(h)| + 1` vertices.
pub fn obs_star_oracle(h: &Graph) -> Result<ObstructionSet> {
    obs_star_oracle_in(Catalog::builtin(), h)
}

pub fn obs_star_oracle_in(catalog: &Catalog, h: &Graph) -> Result<ObstructionSet> {
    check_host(h)?;
    let top = h.order() + 1;
    scan(catalog, h, top..=top)
}

/// Both sides of `obs(g) = (obs(h) \ {g}) ∪ obs*(g)` for `g ∈ obs*(h)`.
#[derive(Debug, Clone)]
pub struct TransferReport {
    pub host: Graph,
    pub graph: Graph,
    /// `obs(g)` computed directly.
    pub lhs: ObstructionSet,
    /// `(obs(h) \ {g}) ∪ obs*(g)`.
    pub rhs: ObstructionSet,
}

impl TransferReport {
    pub fn holds(&self) -> bool {
        self.lhs.same_members(&self.rhs)
    }

    pub fn only_lhs(&self) -> Vec<Graph> {
        self.lhs.difference(&self.rhs)
    }

    pub fn only_rhs(&self) -> Vec<Graph> {
        self.rhs.difference(&self.lhs)
    }
}

pub fn check_obs_transfer(h: &Graph, g: &Graph) -> Result<TransferReport> {
    check_host(g)?;
    let star_h = obs_star_oracle(h)?;
    if !star_h.contains(g) {
        return Err(Error::precondition(format!("{g} is not in obs*({h})")));
    }
    let lhs = obs_oracle(g)?;
    let rhs = obs_oracle(h)?.without(g).union(&obs_star_oracle(g)?);
    Ok(TransferReport {
        host: *h,
        graph: *g,
        lhs,
        rhs: ObstructionSet::new(*g, rhs.graphs().copied()),
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WitnessHost {
    /// Disjoint union of the full cores of `g - x`, in vertex order.
    pub host: Graph,
    /// Whether `g` was confirmed to be a minimal obstruction for `host`.
    pub verified: bool,
}

/// A host for which the connected point-determining graph `g` is a minimal
/// obstruction.
pub fn construct_witness_host(g: &Graph) -> Result<WitnessHost> {
    if g.order() < 2 {
        return Err(Error::precondition("the graph needs at least two vertices"));
    }
    if !g.is_connected() {
        return Err(Error::precondition(format!("{g} is not connected")));
    }
    if !is_point_determining(g) {
        return Err(Error::precondition(format!("{g} is not point-determining")));
    }
    let parts: Vec<Graph> = (0..g.order())
        .map(|x| full_core_graph(&g.delete_vertex_unchecked(x)))
        .collect();
    let total: usize = parts.iter().map(Graph::order).sum();
    if total > MAX_ORDER {
        return Err(Error::Capacity {
            order: total,
            max: MAX_ORDER,
        });
    }
    let host = Graph::disjoint_union(&parts)?;
    Ok(WitnessHost {
        host,
        verified: is_minimal_obstruction(g, &host),
    })
}

/// Whether `g` lies in `obs*(h)` for some `h`. Any such `h` is `g - x` for
/// a vertex `x`, so only those hosts are tried.
pub fn obs_star_existence_regular(g: &Graph) -> Result<bool> {
    if g.order() < 2 {
        return Err(Error::precondition("the graph needs at least two vertices"));
    }
    if !g.is_regular() {
        return Err(Error::precondition(format!("{g} is not regular")));
    }
    if !is_point_determining(g) {
        return Err(Error::precondition(format!("{g} is not point-determining")));
    }
    let mut tried: Vec<Graph> = Vec::new();
    for x in 0..g.order() {
        let h = g.delete_vertex_unchecked(x);
        if tried.iter().any(|t| is_isomorphic(t, &h)) {
            continue;
        }
        if is_minimal_obstruction(g, &h) {
            return Ok(true);
        }
        tried.push(h);
    }
    Ok(false)
}
