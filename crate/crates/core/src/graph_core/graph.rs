use std::fmt;

use crate::error::{Error, Result};

/// Largest supported vertex count; one adjacency row fits a `u32`.
pub const MAX_ORDER: usize = 32;

/// A set of vertices as a bit mask, bit `v` set iff `v` is a member.
pub type VertexSet = u32;

/// Iterate the members of a vertex set in ascending order.
pub fn vertices_of(mut set: VertexSet) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if set == 0 {
            None
        } else {
            let v = set.trailing_zeros() as usize;
            set &= set - 1;
            Some(v)
        }
    })
}

#[inline]
pub(crate) fn low_mask(n: usize) -> u32 {
    if n >= 32 {
        u32::MAX
    } else {
        (1u32 << n) - 1
    }
}

/// Remove bit `v` from `row` and shift the higher bits down by one.
#[inline]
pub(crate) fn squeeze_bit(row: u32, v: usize) -> u32 {
    let low = low_mask(v);
    (row & low) | ((row >> 1) & !low)
}

pub(crate) fn check_order(order: usize) -> Result<()> {
    if order == 0 {
        Err(Error::domain("graphs must have at least one vertex"))
    } else if order > MAX_ORDER {
        Err(Error::Capacity {
            order,
            max: MAX_ORDER,
        })
    } else {
        Ok(())
    }
}

/// A loopless simple graph on `1..=32` vertices stored as a symmetric
/// adjacency bit matrix, one `u32` row per vertex.
///
/// Graphs are plain values: every operation returns a new graph.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Graph {
    order: u8,
    rows: [u32; MAX_ORDER],
}

impl Graph {
    /// The edgeless graph on `order` vertices.
    pub fn empty(order: usize) -> Result<Self> {
        check_order(order)?;
        Ok(Graph {
            order: order as u8,
            rows: [0; MAX_ORDER],
        })
    }

    pub fn from_edges(order: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::empty(order)?;
        for &(u, v) in edges {
            if u >= order || v >= order {
                return Err(Error::domain(format!(
                    "edge ({u}, {v}) references a vertex outside 0..{order}"
                )));
            }
            if u == v {
                return Err(Error::domain(format!("loop at vertex {u}")));
            }
            g.set_edge(u, v);
        }
        Ok(g)
    }

    /// Build a graph from adjacency rows, rejecting loops, asymmetry and
    /// bits outside the vertex range.
    pub fn from_rows(rows: &[u32]) -> Result<Self> {
        check_order(rows.len())?;
        let n = rows.len();
        let all = low_mask(n);
        for (v, &row) in rows.iter().enumerate() {
            if row & !all != 0 {
                return Err(Error::domain(format!("row {v} has bits beyond vertex {n}")));
            }
            if row >> v & 1 == 1 {
                return Err(Error::domain(format!("loop at vertex {v}")));
            }
            for u in vertices_of(row) {
                if rows[u] >> v & 1 == 0 {
                    return Err(Error::domain(format!("adjacency is not symmetric at ({v}, {u})")));
                }
            }
        }
        Ok(Graph::from_rows_unchecked(rows))
    }

    pub(crate) fn from_rows_unchecked(rows: &[u32]) -> Self {
        let mut g = Graph {
            order: rows.len() as u8,
            rows: [0; MAX_ORDER],
        };
        g.rows[..rows.len()].copy_from_slice(rows);
        g
    }

    #[inline]
    pub(crate) fn set_edge(&mut self, u: usize, v: usize) {
        self.rows[u] |= 1 << v;
        self.rows[v] |= 1 << u;
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.order as usize
    }

    /// Number of edges.
    pub fn size(&self) -> usize {
        self.rows().iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    #[inline]
    pub fn rows(&self) -> &[u32] {
        &self.rows[..self.order as usize]
    }

    #[inline]
    pub fn vertex_mask(&self) -> VertexSet {
        low_mask(self.order())
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.rows[u] >> v & 1 == 1
    }

    /// Open neighbourhood N(v).
    #[inline]
    pub fn neighbours(&self, v: usize) -> VertexSet {
        self.rows[v]
    }

    /// Closed neighbourhood N[v].
    #[inline]
    pub fn closed_neighbourhood(&self, v: usize) -> VertexSet {
        self.rows[v] | 1 << v
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.rows[v].count_ones() as usize
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.order()).map(|v| self.degree(v)).collect()
    }

    pub fn is_regular(&self) -> bool {
        let d = self.degree(0);
        (1..self.order()).all(|v| self.degree(v) == d)
    }

    pub fn is_complete(&self) -> bool {
        self.size() == self.order() * (self.order() - 1) / 2
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.order()).flat_map(move |u| vertices_of(self.rows[u] >> u >> 1).map(move |d| (u, u + 1 + d)))
    }

    /// Connected components as vertex masks, ordered by smallest member.
    pub fn component_masks(&self) -> Vec<VertexSet> {
        let mut remaining = self.vertex_mask();
        let mut out = Vec::new();
        while remaining != 0 {
            let start = remaining & remaining.wrapping_neg();
            let mut comp = start;
            let mut frontier = start;
            while frontier != 0 {
                let mut next = 0;
                for v in vertices_of(frontier) {
                    next |= self.rows[v];
                }
                frontier = next & !comp;
                comp |= next;
            }
            remaining &= !comp;
            out.push(comp);
        }
        out
    }

    /// Partition of the vertex set into maximal connected sets.
    pub fn connected_components(&self) -> Vec<Vec<usize>> {
        self.component_masks().into_iter().map(|m| vertices_of(m).collect()).collect()
    }

    pub fn component_count(&self) -> usize {
        self.component_masks().len()
    }

    pub fn is_connected(&self) -> bool {
        self.component_count() == 1
    }

    /// `g - v`, with the labels above `v` shifted down by one.
    pub fn delete_vertex(&self, v: usize) -> Result<Graph> {
        if v >= self.order() {
            return Err(Error::domain(format!("vertex {v} not in graph of order {}", self.order())));
        }
        if self.order() == 1 {
            return Err(Error::domain("deleting the only vertex leaves the empty graph"));
        }
        Ok(self.delete_vertex_unchecked(v))
    }

    #[inline]
    pub(crate) fn delete_vertex_unchecked(&self, v: usize) -> Graph {
        let n = self.order();
        let mut g = Graph {
            order: (n - 1) as u8,
            rows: [0; MAX_ORDER],
        };
        for u in 0..v {
            g.rows[u] = squeeze_bit(self.rows[u], v);
        }
        for u in v + 1..n {
            g.rows[u - 1] = squeeze_bit(self.rows[u], v);
        }
        g
    }

    /// Subgraph induced by a vertex set; labels keep their relative order.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Result<Graph> {
        let mut mask = 0u32;
        for &v in vertices {
            if v >= self.order() {
                return Err(Error::domain(format!("vertex {v} not in graph of order {}", self.order())));
            }
            mask |= 1 << v;
        }
        self.induced_by_mask(mask)
    }

    pub fn induced_by_mask(&self, mask: VertexSet) -> Result<Graph> {
        let mask = mask & self.vertex_mask();
        if mask == 0 {
            return Err(Error::domain("induced subgraph on the empty vertex set"));
        }
        let kept: Vec<usize> = vertices_of(mask).collect();
        let mut g = Graph {
            order: kept.len() as u8,
            rows: [0; MAX_ORDER],
        };
        for (i, &u) in kept.iter().enumerate() {
            for (j, &w) in kept.iter().enumerate() {
                if self.has_edge(u, w) {
                    g.rows[i] |= 1 << j;
                }
            }
        }
        Ok(g)
    }

    /// Vertex-disjoint union; the parts occupy consecutive label ranges in
    /// the given order.
    pub fn disjoint_union(parts: &[Graph]) -> Result<Graph> {
        let total: usize = parts.iter().map(Graph::order).sum();
        check_order(total)?;
        let mut g = Graph::empty(total)?;
        let mut offset = 0;
        for part in parts {
            for v in 0..part.order() {
                g.rows[offset + v] = part.rows[v] << offset;
            }
            offset += part.order();
        }
        Ok(g)
    }

    /// Relabel so that vertex `v` becomes `perm[v]`.
    ///
    /// Panics if `perm` is not a permutation of `0..order`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.order(), "permutation length mismatch");
        let mut g = Graph {
            order: self.order,
            rows: [0; MAX_ORDER],
        };
        let mut seen = 0u32;
        for (v, &p) in perm.iter().enumerate() {
            assert!(p < self.order() && seen >> p & 1 == 0, "not a permutation");
            seen |= 1 << p;
            let mut row = 0;
            for u in vertices_of(self.rows[v]) {
                row |= 1 << perm[u];
            }
            g.rows[p] = row;
        }
        g
    }

    pub fn complement(&self) -> Graph {
        let all = self.vertex_mask();
        let mut g = *self;
        for v in 0..self.order() {
            g.rows[v] = !self.rows[v] & all & !(1 << v);
        }
        g
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges=", self.order())?;
        f.debug_list().entries(self.edges()).finish()?;
        write!(f, ")")
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&super::graph6::encode(self))
    }
}

/// The standard families of named graphs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum StandardKind {
    Path,
    Cycle,
    Complete,
    Empty,
}

/// Path, cycle, complete or edgeless graph on vertices `0..n` in natural
/// order; path and cycle edges join consecutive labels.
pub fn make_standard(kind: StandardKind, n: usize) -> Result<Graph> {
    check_order(n)?;
    let mut g = Graph::empty(n)?;
    match kind {
        StandardKind::Path => {
            for v in 1..n {
                g.set_edge(v - 1, v);
            }
        }
        StandardKind::Cycle => {
            if n < 3 {
                return Err(Error::domain(format!("a cycle needs at least 3 vertices, got {n}")));
            }
            for v in 1..n {
                g.set_edge(v - 1, v);
            }
            g.set_edge(n - 1, 0);
        }
        StandardKind::Complete => {
            let all = low_mask(n);
            for v in 0..n {
                g.rows[v] = all & !(1 << v);
            }
        }
        StandardKind::Empty => {}
    }
    Ok(g)
}

impl Graph {
    pub fn path(n: usize) -> Result<Graph> {
        make_standard(StandardKind::Path, n)
    }

    pub fn cycle(n: usize) -> Result<Graph> {
        make_standard(StandardKind::Cycle, n)
    }

    pub fn complete(n: usize) -> Result<Graph> {
        make_standard(StandardKind::Complete, n)
    }
}

/// The three exceptional six-vertex path obstructions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum NamedGraph {
    /// The path `v0..v5` with the chord `v1v4`.
    A,
    /// `A` plus the edge `v0v5`: two four-cycles sharing the edge `v1v4`.
    B,
    /// The spider with legs `v1v0v5`, `v1v2v3` and `v1v4`.
    E,
}

impl NamedGraph {
    pub const ALL: [NamedGraph; 3] = [NamedGraph::A, NamedGraph::B, NamedGraph::E];

    pub fn edges(self) -> &'static [(usize, usize)] {
        match self {
            NamedGraph::A => &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (1, 4)],
            NamedGraph::B => &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (1, 4), (0, 5)],
            NamedGraph::E => &[(0, 1), (1, 2), (0, 5), (1, 4), (2, 3)],
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            NamedGraph::A => "A",
            NamedGraph::B => "B",
            NamedGraph::E => "E",
        }
    }
}

/// Graph `A`, `B` or `E` on vertices `v0..v5` with the labels as drawn.
pub fn make_named(which: NamedGraph) -> Graph {
    Graph::from_edges(6, which.edges()).expect("named graphs are well formed")
}
