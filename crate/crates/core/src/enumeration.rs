//! Isomorph-free generation of all graphs up to a given order.
//!
//! Generation is by canonical augmentation: a graph on `n + 1` vertices is
//! produced from a parent class representative by adding vertex `n` with
//! some neighbourhood `S`, and it is kept only when the new vertex lies in
//! the automorphism orbit of the canonically chosen deletion vertex. Every
//! class therefore has exactly one parent class. Children of one parent
//! that differ by a parent automorphism are collapsed with a per-parent set
//! of keys, needed only when the parent has nontrivial symmetry.
//!
//! The deletion vertex is chosen among vertices of maximum degree, then
//! maximum `(sum of neighbour degrees, edges among neighbours)`, and then
//! by earliest canonical label. The first two stages are cheap and reject
//! most children before any canonical labelling is computed.

use std::collections::{BTreeMap, HashSet};
use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph_core::canon::{graph_from_small_key, small_key};
use crate::graph_core::{canonical_form, canonize, vertices_of, Graph};
use crate::pd_core::is_point_determining;

/// Largest order enumerated on request.
pub const MAX_SUPPORTED_ORDER: usize = 10;
/// Largest order reachable with [`EnumerationRequest::best_effort`].
pub const BEST_EFFORT_ORDER: usize = 11;
/// Levels up to this order are kept in memory once built.
const MATERIALIZED_ORDER: usize = 9;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Filter {
    All,
    PointDetermining,
    Connected,
    ConnectedRegular,
}

impl Filter {
    pub fn accepts(self, g: &Graph) -> bool {
        match self {
            Filter::All => true,
            Filter::PointDetermining => is_point_determining(g),
            Filter::Connected => g.is_connected(),
            Filter::ConnectedRegular => g.is_connected() && g.is_regular(),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Filter::All => "all",
            Filter::PointDetermining => "point-determining",
            Filter::Connected => "connected",
            Filter::ConnectedRegular => "connected-regular",
        }
    }
}

impl fmt::Display for Filter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Filter {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().replace('_', "-").as_str() {
            "all" => Ok(Filter::All),
            "point-determining" | "pd" => Ok(Filter::PointDetermining),
            "connected" => Ok(Filter::Connected),
            "connected-regular" => Ok(Filter::ConnectedRegular),
            other => Err(Error::domain(format!("unknown filter '{other}'"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EnumerationRequest {
    max_order: usize,
    filter: Filter,
}

impl EnumerationRequest {
    pub fn new(max_order: usize, filter: Filter) -> Result<Self> {
        Self::checked(max_order, filter, MAX_SUPPORTED_ORDER)
    }

    /// Like [`EnumerationRequest::new`] but admits order 11, which is
    /// enumerated by the same method with no guarantee on time or memory.
    pub fn best_effort(max_order: usize, filter: Filter) -> Result<Self> {
        Self::checked(max_order, filter, BEST_EFFORT_ORDER)
    }

    fn checked(max_order: usize, filter: Filter, limit: usize) -> Result<Self> {
        if max_order == 0 {
            return Err(Error::domain("max_order must be at least 1"));
        }
        if max_order > limit {
            return Err(Error::UnsupportedOrder {
                order: max_order,
                max: limit,
            });
        }
        Ok(EnumerationRequest { max_order, filter })
    }

    pub fn max_order(&self) -> usize {
        self.max_order
    }

    pub fn filter(&self) -> Filter {
        self.filter
    }
}

/// Visit the accepted children of `parent`, passing the child (labelled as
/// parent plus vertex `n`) and, if requested, its packed canonical key.
fn for_each_child(parent: &Graph, want_key: bool, mut visit: impl FnMut(&Graph, Option<u64>)) {
    let k = parent.order();
    let new = k;
    let parent_rows = parent.rows();
    let mut pdeg = [0u32; 32];
    let mut max_pdeg = 0;
    for v in 0..k {
        pdeg[v] = parent_rows[v].count_ones();
        max_pdeg = max_pdeg.max(pdeg[v]);
    }
    let rigid = canonize(parent).has_trivial_group();
    let mut seen: HashSet<u64> = HashSet::new();
    let mut rows = [0u32; 32];
    rows[..k].copy_from_slice(parent_rows);
    let mut deg = [0u32; 32];

    for s in 0u32..(1u32 << k) {
        let d = s.count_ones();
        if d < max_pdeg {
            continue;
        }
        // the new vertex must have maximum degree
        let mut too_small = false;
        let mut cand = 1u32 << new;
        for v in 0..k {
            let dv = pdeg[v] + (s >> v & 1);
            deg[v] = dv;
            if dv > d {
                too_small = true;
                break;
            }
            if dv == d {
                cand |= 1 << v;
            }
        }
        if too_small {
            continue;
        }
        deg[new] = d;
        for v in 0..k {
            rows[v] = parent_rows[v] | (s >> v & 1) << new;
        }
        rows[new] = s;

        let mut canon = None;
        if cand != 1 << new {
            let invariant = |v: usize| -> u32 {
                let nb = rows[v];
                let mut sum = 0;
                let mut inner = 0;
                for u in vertices_of(nb) {
                    sum += deg[u];
                    inner += (rows[u] & nb).count_ones();
                }
                (sum << 10) | (inner / 2)
            };
            let mine = invariant(new);
            let mut best = mine;
            let mut tied = 1u32 << new;
            let mut beaten = false;
            for v in vertices_of(cand & !(1 << new)) {
                let x = invariant(v);
                if x > mine {
                    beaten = true;
                    break;
                }
                if x == best {
                    tied |= 1 << v;
                } else if x > best {
                    best = x;
                    tied = 1 << v;
                }
            }
            if beaten {
                continue;
            }
            if tied != 1 << new {
                let child = Graph::from_rows_unchecked(&rows[..=new]);
                let c = canonize(&child);
                let m = c
                    .labelling
                    .iter()
                    .copied()
                    .find(|&v| tied >> v & 1 == 1)
                    .expect("tied set is nonempty");
                if !c.same_orbit(m, new) {
                    continue;
                }
                canon = Some(c.graph);
            }
        }

        let child = Graph::from_rows_unchecked(&rows[..=new]);
        let key = if want_key || !rigid {
            let cg = canon.unwrap_or_else(|| canonize(&child).graph);
            Some(small_key(&cg))
        } else {
            None
        };
        if !rigid && !seen.insert(key.expect("key computed for symmetric parents")) {
            continue;
        }
        visit(&child, if want_key { key } else { None });
    }
}

enum Source {
    Builtin { levels: Vec<OnceLock<Vec<u64>>> },
    External { by_order: BTreeMap<usize, Vec<Graph>> },
}

/// A source of isomorphism-class representatives, either the built-in
/// generator or a list of graphs supplied from outside.
pub struct Catalog {
    source: Source,
}

impl Catalog {
    /// A fresh generator with its own level cache.
    pub fn generator() -> Self {
        Catalog {
            source: Source::Builtin {
                levels: (0..=BEST_EFFORT_ORDER).map(|_| OnceLock::new()).collect(),
            },
        }
    }

    /// The process-wide generator; levels built once are shared by all callers.
    pub fn builtin() -> &'static Catalog {
        static BUILTIN: OnceLock<Catalog> = OnceLock::new();
        BUILTIN.get_or_init(Catalog::generator)
    }

    /// Use externally supplied graphs in place of the generator. Duplicates
    /// up to isomorphism are dropped; classes are kept in canonical order.
    pub fn from_graphs(graphs: impl IntoIterator<Item = Graph>) -> Self {
        let mut by_form: BTreeMap<_, Graph> = BTreeMap::new();
        for g in graphs {
            let c = canonize(&g);
            by_form.entry(c.form()).or_insert(c.graph);
        }
        let mut by_order: BTreeMap<usize, Vec<Graph>> = BTreeMap::new();
        for (form, g) in by_form {
            by_order.entry(form.order()).or_default().push(g);
        }
        Catalog {
            source: Source::External { by_order },
        }
    }

    pub fn is_external(&self) -> bool {
        matches!(self.source, Source::External { .. })
    }

    /// Largest order this catalog can serve.
    pub fn max_order(&self) -> usize {
        match &self.source {
            Source::Builtin { .. } => BEST_EFFORT_ORDER,
            Source::External { by_order } => by_order.keys().next_back().copied().unwrap_or(0),
        }
    }

    fn check(&self, order: usize) -> Result<()> {
        if order == 0 {
            return Err(Error::domain("graphs have at least one vertex"));
        }
        if let Source::Builtin { .. } = self.source {
            if order > BEST_EFFORT_ORDER {
                return Err(Error::UnsupportedOrder {
                    order,
                    max: BEST_EFFORT_ORDER,
                });
            }
        }
        Ok(())
    }

    fn level(&self, order: usize) -> &[u64] {
        let Source::Builtin { levels } = &self.source else {
            unreachable!("levels exist only for the generator")
        };
        levels[order].get_or_init(|| {
            if order == 1 {
                return vec![0];
            }
            let parents = self.level(order - 1);
            let mut keys: Vec<u64> = parents
                .par_iter()
                .flat_map_iter(|&pk| {
                    let parent = graph_from_small_key(order - 1, pk);
                    let mut out = Vec::new();
                    for_each_child(&parent, true, |_, key| out.push(key.expect("key requested")));
                    out
                })
                .collect();
            keys.par_sort_unstable();
            keys
        })
    }

    /// Apply `f` to one representative of every class of the given order,
    /// in parallel. The output order is deterministic but not sorted.
    pub fn par_filter_map<T, F>(&self, order: usize, f: F) -> Result<Vec<T>>
    where
        T: Send,
        F: Fn(&Graph) -> Option<T> + Sync + Send,
    {
        self.check(order)?;
        match &self.source {
            Source::External { by_order } => Ok(by_order
                .get(&order)
                .map(|gs| gs.par_iter().filter_map(&f).collect())
                .unwrap_or_default()),
            Source::Builtin { levels } => {
                if order <= MATERIALIZED_ORDER || levels[order].get().is_some() {
                    Ok(self
                        .level(order)
                        .par_iter()
                        .filter_map(|&key| f(&graph_from_small_key(order, key)))
                        .collect())
                } else {
                    let parents = self.level(order - 1);
                    Ok(parents
                        .par_iter()
                        .flat_map_iter(|&pk| {
                            let parent = graph_from_small_key(order - 1, pk);
                            let mut out = Vec::new();
                            for_each_child(&parent, false, |child, _| {
                                if let Some(t) = f(child) {
                                    out.push(t);
                                }
                            });
                            out
                        })
                        .collect())
                }
            }
        }
    }

    /// Canonical representatives of the given order passing `filter`, in
    /// ascending canonical order.
    pub fn classes(&self, order: usize, filter: Filter) -> Result<Vec<Graph>> {
        self.check(order)?;
        match &self.source {
            Source::External { by_order } => Ok(by_order
                .get(&order)
                .map(|gs| gs.iter().filter(|g| filter.accepts(g)).copied().collect())
                .unwrap_or_default()),
            Source::Builtin { levels } => {
                if order <= MATERIALIZED_ORDER || levels[order].get().is_some() {
                    Ok(self
                        .level(order)
                        .iter()
                        .map(|&key| graph_from_small_key(order, key))
                        .filter(|g| filter.accepts(g))
                        .collect())
                } else {
                    let mut keys = self.par_filter_map(order, |g| {
                        filter.accepts(g).then(|| small_key(&canonize(g).graph))
                    })?;
                    keys.par_sort_unstable();
                    Ok(keys.into_iter().map(|k| graph_from_small_key(order, k)).collect())
                }
            }
        }
    }

    /// Number of classes of the given order.
    pub fn count(&self, order: usize) -> Result<usize> {
        self.check(order)?;
        match &self.source {
            Source::External { by_order } => Ok(by_order.get(&order).map_or(0, Vec::len)),
            Source::Builtin { levels } => {
                if order <= MATERIALIZED_ORDER || levels[order].get().is_some() {
                    Ok(self.level(order).len())
                } else {
                    Ok(self.par_filter_map(order, |_| Some(()))?.len())
                }
            }
        }
    }

    /// Stream the classes of every order up to the request's bound.
    pub fn enumerate(&self, req: EnumerationRequest) -> impl Iterator<Item = Graph> + '_ {
        (1..=req.max_order()).flat_map(move |order| {
            self.classes(order, req.filter())
                .expect("request orders are validated on construction")
        })
    }
}

/// Every isomorphism class on `1..=max_order` vertices passing the filter,
/// exactly once, by ascending order and then ascending canonical key.
pub fn enumerate_graphs(req: EnumerationRequest) -> impl Iterator<Item = Graph> {
    Catalog::builtin().enumerate(req)
}

/// Connected regular classes (every degree) of each order up to `max_order`.
pub fn enumerate_regular_connected(max_order: usize) -> Result<Vec<Graph>> {
    let req = EnumerationRequest::new(max_order, Filter::ConnectedRegular)?;
    Ok(enumerate_graphs(req).collect())
}

/// Brute-force class list: all labelled graphs of the order, deduplicated
/// by canonical form. Feasible up to order 7.
pub fn brute_force_classes(order: usize) -> Result<Vec<Graph>> {
    if order == 0 || order > 7 {
        return Err(Error::UnsupportedOrder { order, max: 7 });
    }
    let pairs: Vec<(usize, usize)> = (0..order).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
    let mut forms = std::collections::BTreeSet::new();
    for mask in 0u64..(1u64 << pairs.len()) {
        let edges: Vec<(usize, usize)> = pairs
            .iter()
            .enumerate()
            .filter(|(b, _)| mask >> b & 1 == 1)
            .map(|(_, &e)| e)
            .collect();
        forms.insert(canonical_form(&Graph::from_edges(order, &edges)?));
    }
    Ok(forms.into_iter().map(|f| f.to_graph()).collect())
}
