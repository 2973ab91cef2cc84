//! Twins, point-determining graphs, full cores and linear forests.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::graph_core::{vertices_of, Graph};

/// Pairs `(u, v)`, `u < v`, with `N(u) = N(v)`. Such pairs are never adjacent.
pub fn false_twins(g: &Graph) -> Vec<(usize, usize)> {
    let n = g.order();
    let mut out = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if g.neighbours(u) == g.neighbours(v) {
                out.push((u, v));
            }
        }
    }
    out
}

/// Pairs `(u, v)`, `u < v`, with `N[u] = N[v]`. Such pairs are always adjacent.
pub fn true_twins(g: &Graph) -> Vec<(usize, usize)> {
    let n = g.order();
    let mut out = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if g.closed_neighbourhood(u) == g.closed_neighbourhood(v) {
                out.push((u, v));
            }
        }
    }
    out
}

pub fn is_point_determining(g: &Graph) -> bool {
    let rows = g.rows();
    for (u, ru) in rows.iter().enumerate() {
        if rows[u + 1..].contains(ru) {
            return false;
        }
    }
    true
}

/// Vertex map from a graph onto its full core.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CollapseMap {
    assignment: Vec<usize>,
    core_order: usize,
}

impl CollapseMap {
    pub fn identity(n: usize) -> Self {
        CollapseMap {
            assignment: (0..n).collect(),
            core_order: n,
        }
    }

    pub fn source_order(&self) -> usize {
        self.assignment.len()
    }

    pub fn core_order(&self) -> usize {
        self.core_order
    }

    /// Image of each source vertex in the core.
    pub fn assignment(&self) -> &[usize] {
        &self.assignment
    }

    pub fn image(&self, v: usize) -> usize {
        self.assignment[v]
    }

    pub fn is_identity(&self) -> bool {
        self.assignment.iter().enumerate().all(|(i, &v)| i == v)
    }
}

/// Collapse false twins until none remain.
///
/// The least false-twin pair is merged first, keeping the lower-labelled
/// vertex. Deleting one vertex of a false-twin pair neither creates nor
/// destroys twin relations among the remaining vertices, so this ends with
/// exactly one vertex per class of equal neighbourhoods, namely the class
/// minimum, and surviving vertices keep their relative order.
pub fn full_core(g: &Graph) -> (Graph, CollapseMap) {
    let n = g.order();
    let rows = g.rows();
    let mut rep = [0usize; 32];
    let mut keep = 0u32;
    for v in 0..n {
        rep[v] = (0..v).find(|&u| rows[u] == rows[v]).unwrap_or(v);
        if rep[v] == v {
            keep |= 1 << v;
        }
    }
    let core = g.induced_by_mask(keep).expect("vertex 0 is always kept");
    let mut index = [0usize; 32];
    for (i, v) in vertices_of(keep).enumerate() {
        index[v] = i;
    }
    let map = CollapseMap {
        assignment: (0..n).map(|v| index[rep[v]]).collect(),
        core_order: core.order(),
    };
    (core, map)
}

pub fn full_core_graph(g: &Graph) -> Graph {
    if is_point_determining(g) {
        *g
    } else {
        full_core(g).0
    }
}

/// Vertices whose deletion leaves a point-determining graph.
pub fn removable_vertices(g: &Graph) -> Result<Vec<usize>> {
    if !is_point_determining(g) {
        return Err(Error::domain("graph is not point-determining"));
    }
    if g.order() == 1 {
        return Ok(Vec::new());
    }
    Ok((0..g.order())
        .filter(|&v| is_point_determining(&g.delete_vertex_unchecked(v)))
        .collect())
}

/// Multiset of path-component orders of a linear forest: `counts[i]` is the
/// number of components that are paths on `i` vertices.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct LinearForestSpec {
    counts: BTreeMap<usize, usize>,
}

impl LinearForestSpec {
    /// Build from `(component order, multiplicity)` pairs; zero entries are dropped.
    pub fn from_counts(counts: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut map = BTreeMap::new();
        for (size, m) in counts {
            if size == 0 {
                return Err(Error::domain("a path component needs at least one vertex"));
            }
            if m > 0 {
                *map.entry(size).or_insert(0) += m;
            }
        }
        if map.is_empty() {
            return Err(Error::domain("a linear forest needs at least one vertex"));
        }
        Ok(LinearForestSpec { counts: map })
    }

    /// Number of components on exactly `i` vertices.
    pub fn multiplicity(&self, i: usize) -> usize {
        self.counts.get(&i).copied().unwrap_or(0)
    }

    pub fn counts(&self) -> &BTreeMap<usize, usize> {
        &self.counts
    }

    pub fn order(&self) -> usize {
        self.counts.iter().map(|(i, m)| i * m).sum()
    }

    pub fn components(&self) -> usize {
        self.counts.values().sum()
    }

    /// Component orders in ascending order.
    pub fn component_orders(&self) -> Vec<usize> {
        self.counts.iter().flat_map(|(&i, &m)| std::iter::repeat_n(i, m)).collect()
    }

    /// Smallest `n` with an injective full-homomorphism into `P_n`:
    /// `|V| + c - 1`, components laid out with one gap vertex between them.
    pub fn mu(&self) -> usize {
        self.order() + self.components() - 1
    }

    /// Disjoint union of the paths, smallest components first.
    pub fn to_graph(&self) -> Result<Graph> {
        let parts = self
            .component_orders()
            .into_iter()
            .map(Graph::path)
            .collect::<Result<Vec<_>>>()?;
        Graph::disjoint_union(&parts)
    }
}

impl fmt::Display for LinearForestSpec {
    /// `K_1+2K_2+P_4` style notation.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (&i, &m) in &self.counts {
            if !first {
                f.write_str("+")?;
            }
            first = false;
            if m > 1 {
                write!(f, "{m}")?;
            }
            if i <= 2 {
                write!(f, "K_{i}")?;
            } else {
                write!(f, "P_{i}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LinearForestSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LinearForestSpec({self})")
    }
}

/// Recognize a linear forest and return its component multiset; otherwise
/// report a component that is not a path.
pub fn linear_forest_spec(g: &Graph) -> Result<LinearForestSpec> {
    let mut counts = BTreeMap::new();
    for comp in g.component_masks() {
        let size = comp.count_ones() as usize;
        let mut edges = 0;
        let mut max_degree = 0;
        for v in vertices_of(comp) {
            let d = g.degree(v);
            edges += d;
            max_degree = max_degree.max(d);
        }
        // a connected graph with |V| - 1 edges and no vertex of degree 3+ is a path
        if edges / 2 != size - 1 || max_degree > 2 {
            return Err(Error::NotLinearForest {
                component: vertices_of(comp).collect(),
            });
        }
        *counts.entry(size).or_insert(0) += 1;
    }
    Ok(LinearForestSpec { counts })
}

pub fn mu(spec: &LinearForestSpec) -> usize {
    spec.mu()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph_core::{canonical_form, is_isomorphic, make_named, NamedGraph};

    fn k(n: usize) -> Graph {
        Graph::complete(n).unwrap()
    }

    fn forest(parts: &[usize]) -> Graph {
        let parts: Vec<Graph> = parts.iter().map(|&i| Graph::path(i).unwrap()).collect();
        Graph::disjoint_union(&parts).unwrap()
    }

    #[test]
    fn twins() {
        assert_eq!(false_twins(&Graph::cycle(4).unwrap()), vec![(0, 2), (1, 3)]);
        assert_eq!(true_twins(&k(3)), vec![(0, 1), (0, 2), (1, 2)]);
        let p4 = Graph::path(4).unwrap();
        assert!(false_twins(&p4).is_empty());
        assert!(true_twins(&p4).is_empty());
    }

    #[test]
    fn point_determining() {
        assert!(!is_point_determining(&Graph::path(3).unwrap()));
        assert!(!is_point_determining(&Graph::empty(2).unwrap()));
        assert!(is_point_determining(&make_named(NamedGraph::A)));
        assert!(is_point_determining(&Graph::path(1).unwrap()));
    }

    #[test]
    fn cores() {
        let (core, map) = full_core(&Graph::cycle(4).unwrap());
        assert_eq!(core, k(2));
        assert_eq!(map.assignment(), &[0, 1, 0, 1]);
        let k23 = Graph::from_edges(5, &[(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)]).unwrap();
        let (core, map) = full_core(&k23);
        assert_eq!(core, k(2));
        assert_eq!(map.assignment(), &[0, 0, 1, 1, 1]);
        let a = make_named(NamedGraph::A);
        let (core, map) = full_core(&a);
        assert_eq!(core, a);
        assert!(map.is_identity());
        let (core, map) = full_core(&Graph::path(1).unwrap());
        assert_eq!(core.order(), 1);
        assert!(map.is_identity());
    }

    #[test]
    fn collapse_map_reflects_adjacency() {
        let g = Graph::from_edges(7, &[(0, 1), (0, 2), (3, 1), (3, 2), (4, 5), (4, 6), (1, 4)]).unwrap();
        let (core, map) = full_core(&g);
        assert!(is_point_determining(&core));
        for u in 0..g.order() {
            for v in 0..g.order() {
                if u != v {
                    assert_eq!(g.has_edge(u, v), core.has_edge(map.image(u), map.image(v)));
                }
            }
        }
        let mut hit = 0u32;
        for &i in map.assignment() {
            hit |= 1 << i;
        }
        assert_eq!(hit, core.vertex_mask());
    }

    #[test]
    fn removable() {
        let c5 = Graph::cycle(5).unwrap();
        assert_eq!(removable_vertices(&c5).unwrap(), vec![0, 1, 2, 3, 4]);
        let p4 = Graph::path(4).unwrap();
        // deleting an end leaves P_3; deleting a middle vertex leaves K_1+K_2
        assert_eq!(removable_vertices(&p4).unwrap(), vec![1, 2]);
        assert!(removable_vertices(&Graph::cycle(4).unwrap()).is_err());
    }

    #[test]
    fn linear_forests() {
        let g = forest(&[1, 2, 2]);
        let spec = linear_forest_spec(&g).unwrap();
        assert_eq!(spec.multiplicity(1), 1);
        assert_eq!(spec.multiplicity(2), 2);
        assert_eq!(spec.to_string(), "K_1+2K_2");
        assert_eq!(mu(&spec), 7);
        assert!(matches!(
            linear_forest_spec(&Graph::cycle(4).unwrap()),
            Err(Error::NotLinearForest { .. })
        ));
        let claw = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        assert_eq!(
            linear_forest_spec(&claw),
            Err(Error::NotLinearForest {
                component: vec![0, 1, 2, 3]
            })
        );
        let three_k2 = linear_forest_spec(&forest(&[2, 2, 2])).unwrap();
        assert_eq!(three_k2.to_string(), "3K_2");
        assert_eq!(three_k2.mu(), 8);
        assert_eq!(linear_forest_spec(&Graph::path(6).unwrap()).unwrap().mu(), 6);
    }

    #[test]
    fn spec_round_trip() {
        let spec = LinearForestSpec::from_counts([(1, 1), (4, 2), (2, 1), (6, 0)]).unwrap();
        assert_eq!(spec.to_string(), "K_1+K_2+2P_4");
        let g = spec.to_graph().unwrap();
        assert_eq!(linear_forest_spec(&g).unwrap(), spec);
        let shuffled = g.relabel(&[10, 3, 1, 7, 2, 0, 9, 4, 8, 5, 6]);
        assert_eq!(linear_forest_spec(&shuffled).unwrap(), spec);
        assert!(is_isomorphic(&shuffled, &g));
        assert_eq!(canonical_form(&shuffled), canonical_form(&g));
        assert!(LinearForestSpec::from_counts([(2, 0)]).is_err());
    }
}
