//! Canonical labelling and automorphism orbits.
//!
//! The search is the usual individualization–refinement tree: refine the
//! ordered vertex partition to an equitable one, pick the first non-singleton
//! cell, and branch on each of its vertices. Every leaf is a labelling; the
//! canonical form is the lexicographically least upper-triangle adjacency
//! bit string (row-major) over all leaves. Leaves that produce the same
//! relabelled graph as the first or best leaf yield automorphisms, which
//! prune sibling branches lying in the same orbit of the automorphisms that
//! fix the current branch prefix pointwise.

use std::cmp::Ordering;
use std::fmt;

use super::graph::{vertices_of, Graph, MAX_ORDER};

/// Ordered partition of the vertex set into cells.
#[derive(Clone, Copy)]
struct Partition {
    cells: [u32; MAX_ORDER],
    len: usize,
}

impl Partition {
    fn unit(g: &Graph) -> Self {
        let mut cells = [0; MAX_ORDER];
        cells[0] = g.vertex_mask();
        Partition { cells, len: 1 }
    }

    fn is_discrete(&self, n: usize) -> bool {
        self.len == n
    }

    /// Refine until equitable, starting from the given splitter cells.
    fn refine(&mut self, g: &Graph, initial: &[u32]) {
        let rows = g.rows();
        let mut queue = [0u32; 3 * MAX_ORDER];
        let mut head = 0;
        let mut tail = 0;
        for &w in initial {
            queue[tail] = w;
            tail += 1;
        }
        while head < tail && self.len < rows.len() {
            let w = queue[head];
            head += 1;
            let mut i = 0;
            while i < self.len {
                let x = self.cells[i];
                if x & (x - 1) == 0 {
                    i += 1;
                    continue;
                }
                let mut buckets = [0u32; MAX_ORDER + 1];
                let mut lo = usize::MAX;
                let mut hi = 0;
                for v in vertices_of(x) {
                    let c = (rows[v] & w).count_ones() as usize;
                    buckets[c] |= 1 << v;
                    lo = lo.min(c);
                    hi = hi.max(c);
                }
                if lo == hi {
                    i += 1;
                    continue;
                }
                let pieces: Vec<u32> = buckets[lo..=hi].iter().copied().filter(|&b| b != 0).collect();
                let extra = pieces.len() - 1;
                self.cells.copy_within(i + 1..self.len, i + 1 + extra);
                self.cells[i..i + pieces.len()].copy_from_slice(&pieces);
                self.len += extra;
                for &p in &pieces {
                    if tail < queue.len() {
                        queue[tail] = p;
                        tail += 1;
                    } else {
                        // compact the consumed prefix of the queue
                        queue.copy_within(head..tail, 0);
                        tail -= head;
                        head = 0;
                        queue[tail] = p;
                        tail += 1;
                    }
                }
                i += pieces.len();
            }
        }
    }

    /// Individualize `v` out of cell `t` and refine.
    fn individualize(&self, g: &Graph, t: usize, v: usize) -> Partition {
        let mut p = *self;
        p.cells.copy_within(t..p.len, t + 1);
        p.cells[t] = 1 << v;
        p.cells[t + 1] &= !(1 << v);
        p.len += 1;
        p.refine(g, &[1 << v]);
        p
    }
}

/// Compare two graphs of equal order by the row-major upper-triangle bit
/// string: the first differing pair `(i, j)`, `i < j`, decides, and the
/// graph without that edge is smaller.
pub(crate) fn cmp_adjacency_strings(a: &Graph, b: &Graph) -> Ordering {
    debug_assert_eq!(a.order(), b.order());
    for (ra, rb) in a.rows().iter().zip(b.rows()) {
        let diff = ra ^ rb;
        if diff != 0 {
            // equal earlier rows force the lowest differing bit above the diagonal
            let j = diff.trailing_zeros();
            return if ra >> j & 1 == 0 {
                Ordering::Less
            } else {
                Ordering::Greater
            };
        }
    }
    Ordering::Equal
}

type Perm = [u8; MAX_ORDER];

struct Leaf {
    labelling: Perm,
    graph: Graph,
}

struct Search<'g> {
    g: &'g Graph,
    n: usize,
    first: Option<Leaf>,
    best: Option<Leaf>,
    generators: Vec<Perm>,
}

impl Search<'_> {
    fn leaf(&mut self, p: &Partition) {
        let n = self.n;
        let mut labelling = [0u8; MAX_ORDER];
        let mut inverse = [0u8; MAX_ORDER];
        for i in 0..n {
            let v = p.cells[i].trailing_zeros() as u8;
            labelling[i] = v;
            inverse[v as usize] = i as u8;
        }
        let mut rows = [0u32; MAX_ORDER];
        for i in 0..n {
            let mut row = 0;
            for u in vertices_of(self.g.neighbours(labelling[i] as usize)) {
                row |= 1 << inverse[u];
            }
            rows[i] = row;
        }
        let graph = Graph::from_rows_unchecked(&rows[..n]);

        let Some(first) = &self.first else {
            self.first = Some(Leaf { labelling, graph });
            self.best = Some(Leaf { labelling, graph });
            return;
        };
        if first.graph == graph {
            let gen = automorphism(&first.labelling, &labelling, n);
            self.generators.push(gen);
            return;
        }
        let best = self.best.as_ref().expect("best is set with first");
        match cmp_adjacency_strings(&graph, &best.graph) {
            Ordering::Less => self.best = Some(Leaf { labelling, graph }),
            Ordering::Equal => {
                let gen = automorphism(&best.labelling, &labelling, n);
                self.generators.push(gen);
            }
            Ordering::Greater => {}
        }
    }

    fn descend(&mut self, p: &Partition, prefix: &mut Vec<u8>) {
        if p.is_discrete(self.n) {
            self.leaf(p);
            return;
        }
        let t = (0..p.len).find(|&i| p.cells[i].count_ones() > 1).expect("non-discrete partition");
        let cell = p.cells[t];
        let mut tried = 0u32;
        for v in vertices_of(cell) {
            if tried != 0 && self.equivalent_to_tried(v, tried, prefix) {
                continue;
            }
            tried |= 1 << v;
            let child = p.individualize(self.g, t, v);
            prefix.push(v as u8);
            self.descend(&child, prefix);
            prefix.pop();
        }
    }

    /// Whether `v` lies in the orbit of a tried vertex under the group
    /// generated by the known automorphisms that fix `prefix` pointwise.
    fn equivalent_to_tried(&self, v: usize, tried: u32, prefix: &[u8]) -> bool {
        let mut uf = UnionFind::new(self.n);
        let mut any = false;
        for gen in &self.generators {
            if prefix.iter().all(|&x| gen[x as usize] == x) {
                any = true;
                for (x, &y) in gen[..self.n].iter().enumerate() {
                    uf.union(x, y as usize);
                }
            }
        }
        if !any {
            return false;
        }
        let root = uf.find(v);
        vertices_of(tried).any(|u| uf.find(u) == root)
    }
}

fn automorphism(from: &Perm, to: &Perm, n: usize) -> Perm {
    let mut gen = [0u8; MAX_ORDER];
    for i in 0..n {
        gen[from[i] as usize] = to[i];
    }
    gen
}

struct UnionFind {
    parent: [u8; MAX_ORDER],
}

impl UnionFind {
    fn new(n: usize) -> Self {
        let mut parent = [0u8; MAX_ORDER];
        for (i, p) in parent.iter_mut().enumerate().take(n) {
            *p = i as u8;
        }
        UnionFind { parent }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] as usize != x {
            let p = self.parent[x] as usize;
            self.parent[x] = self.parent[p];
            x = p;
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
            self.parent[hi] = lo as u8;
        }
    }
}

/// Result of canonically labelling a graph.
#[derive(Clone, Debug)]
pub struct Canonization {
    /// `labelling[i]` is the input vertex that receives canonical label `i`.
    pub labelling: Vec<usize>,
    /// The input graph relabelled canonically.
    pub graph: Graph,
    /// Generators of the automorphism group, as `gen[v]` images.
    pub generators: Vec<Vec<usize>>,
    /// Orbit representative (smallest member) of every vertex.
    pub orbit_of: Vec<usize>,
}

impl Canonization {
    pub fn form(&self) -> CanonicalForm {
        CanonicalForm::of_canonical_graph(&self.graph)
    }

    pub fn has_trivial_group(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn same_orbit(&self, u: usize, v: usize) -> bool {
        self.orbit_of[u] == self.orbit_of[v]
    }

    /// Canonical label of each input vertex.
    pub fn inverse_labelling(&self) -> Vec<usize> {
        let mut inv = vec![0; self.labelling.len()];
        for (i, &v) in self.labelling.iter().enumerate() {
            inv[v] = i;
        }
        inv
    }
}

pub fn canonize(g: &Graph) -> Canonization {
    let n = g.order();
    let mut root = Partition::unit(g);
    root.refine(g, &[g.vertex_mask()]);
    let mut search = Search {
        g,
        n,
        first: None,
        best: None,
        generators: Vec::new(),
    };
    search.descend(&root, &mut Vec::with_capacity(n));

    let best = search.best.expect("the search reaches at least one leaf");
    let mut uf = UnionFind::new(n);
    for gen in &search.generators {
        for (x, &y) in gen[..n].iter().enumerate() {
            uf.union(x, y as usize);
        }
    }
    // roots are arbitrary; name each orbit by its smallest vertex
    let mut smallest = vec![usize::MAX; n];
    for v in 0..n {
        let r = uf.find(v);
        smallest[r] = smallest[r].min(v);
    }
    Canonization {
        labelling: best.labelling[..n].iter().map(|&v| v as usize).collect(),
        graph: best.graph,
        generators: search
            .generators
            .iter()
            .map(|gen| gen[..n].iter().map(|&v| v as usize).collect())
            .collect(),
        orbit_of: (0..n).map(|v| smallest[uf.find(v)]).collect(),
    }
}

/// An isomorphism-invariant key: the order plus the row-major upper
/// triangle of the canonically labelled adjacency matrix, packed most
/// significant bit first.
///
/// Keys order first by vertex count and then lexicographically by bits.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm {
    order: u8,
    key: Vec<u8>,
}

impl CanonicalForm {
    fn of_canonical_graph(g: &Graph) -> Self {
        let n = g.order();
        let bits = n * (n - 1) / 2;
        let mut key = vec![0u8; bits.div_ceil(8)];
        let mut k = 0;
        for i in 0..n {
            for j in i + 1..n {
                if g.has_edge(i, j) {
                    key[k / 8] |= 0x80 >> (k % 8);
                }
                k += 1;
            }
        }
        CanonicalForm { order: n as u8, key }
    }

    pub fn order(&self) -> usize {
        self.order as usize
    }

    pub fn key_bytes(&self) -> &[u8] {
        &self.key
    }

    /// The canonically labelled representative.
    pub fn to_graph(&self) -> Graph {
        let n = self.order();
        let mut rows = vec![0u32; n];
        let mut k = 0;
        for i in 0..n {
            for j in i + 1..n {
                if self.key[k / 8] & (0x80 >> (k % 8)) != 0 {
                    rows[i] |= 1 << j;
                    rows[j] |= 1 << i;
                }
                k += 1;
            }
        }
        Graph::from_rows_unchecked(&rows)
    }
}

impl fmt::Debug for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CanonicalForm({}:", self.order)?;
        for b in &self.key {
            write!(f, "{b:02x}")?;
        }
        write!(f, ")")
    }
}

pub fn canonical_form(g: &Graph) -> CanonicalForm {
    canonize(g).form()
}

pub fn canonical_graph(g: &Graph) -> Graph {
    canonize(g).graph
}

pub fn is_isomorphic(g: &Graph, h: &Graph) -> bool {
    g.order() == h.order()
        && g.size() == h.size()
        && {
            let (mut dg, mut dh) = (g.degrees(), h.degrees());
            dg.sort_unstable();
            dh.sort_unstable();
            dg == dh
        }
        && canonize(g).graph == canonize(h).graph
}

/// Orbits of the full automorphism group, each sorted, ordered by their
/// smallest vertex.
pub fn automorphism_orbits(g: &Graph) -> Vec<Vec<usize>> {
    let c = canonize(g);
    let mut orbits: Vec<Vec<usize>> = Vec::new();
    for v in 0..g.order() {
        let rep = c.orbit_of[v];
        match orbits.iter_mut().find(|o| o[0] == rep) {
            Some(o) => o.push(v),
            None => orbits.push(vec![v]),
        }
    }
    orbits
}

pub fn is_vertex_transitive(g: &Graph) -> bool {
    let c = canonize(g);
    c.orbit_of.iter().all(|&r| r == 0)
}

/// Packed key of a canonically labelled graph with at most 11 vertices,
/// row-major upper triangle, first bit most significant.
pub(crate) fn small_key(canonical: &Graph) -> u64 {
    let n = canonical.order();
    debug_assert!(n <= 11);
    let mut key = 0u64;
    for i in 0..n {
        let upper = canonical.neighbours(i) >> (i + 1);
        let width = n - i - 1;
        // bit for j = i+1 must be most significant: reverse the upper row
        let rev = (upper.reverse_bits() >> (32 - width.max(1))) as u64 & ((1u64 << width) - 1);
        key = key << width | rev;
    }
    key
}

pub(crate) fn graph_from_small_key(n: usize, key: u64) -> Graph {
    let mut rows = [0u32; MAX_ORDER];
    let total = n * n.saturating_sub(1) / 2;
    let mut k = 0;
    for i in 0..n {
        for j in i + 1..n {
            if key >> (total - 1 - k) & 1 == 1 {
                rows[i] |= 1 << j;
                rows[j] |= 1 << i;
            }
            k += 1;
        }
    }
    Graph::from_rows_unchecked(&rows[..n])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph_core::{make_named, NamedGraph};
    use rand::{Rng, SeedableRng};

    fn random_graph(rng: &mut impl Rng, n: usize, p: f64) -> Graph {
        let mut edges = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                if rng.gen_bool(p) {
                    edges.push((i, j));
                }
            }
        }
        Graph::from_edges(n, &edges).unwrap()
    }

    fn random_perm(rng: &mut impl Rng, n: usize) -> Vec<usize> {
        let mut p: Vec<usize> = (0..n).collect();
        for i in (1..n).rev() {
            p.swap(i, rng.gen_range(0..=i));
        }
        p
    }

    #[test]
    fn examples() {
        assert!(is_isomorphic(&Graph::cycle(3).unwrap(), &Graph::complete(3).unwrap()));
        assert!(!is_isomorphic(&make_named(NamedGraph::A), &make_named(NamedGraph::B)));
        let p4 = Graph::path(4).unwrap();
        assert!(is_isomorphic(&p4, &p4.relabel(&[3, 2, 1, 0])));
    }

    #[test]
    fn orbits() {
        let c5 = Graph::cycle(5).unwrap();
        assert_eq!(automorphism_orbits(&c5), vec![vec![0, 1, 2, 3, 4]]);
        assert!(is_vertex_transitive(&c5));
        let p4 = Graph::path(4).unwrap();
        assert_eq!(automorphism_orbits(&p4), vec![vec![0, 3], vec![1, 2]]);
        assert!(!is_vertex_transitive(&p4));
        let k1k2 = Graph::disjoint_union(&[Graph::path(1).unwrap(), Graph::path(2).unwrap()]).unwrap();
        assert_eq!(automorphism_orbits(&k1k2), vec![vec![0], vec![1, 2]]);
        assert!(!is_vertex_transitive(&k1k2));
        let petersen = crate::graph_core::graph6::decode("IheA@GUAo").unwrap();
        assert!(is_vertex_transitive(&petersen));
    }

    #[test]
    fn large_symmetric_graphs_finish() {
        for n in [1, 2, 16, 32] {
            let k = Graph::complete(n).unwrap();
            assert_eq!(canonical_graph(&k), k);
            assert!(is_vertex_transitive(&k));
            let e = Graph::empty(n).unwrap();
            assert_eq!(canonical_graph(&e), e);
        }
        let k3 = Graph::complete(3).unwrap();
        let many = Graph::disjoint_union(&[k3; 10]).unwrap();
        assert_eq!(automorphism_orbits(&many).len(), 1);
        let c32 = Graph::cycle(32).unwrap();
        assert!(is_vertex_transitive(&c32));
    }

    #[test]
    fn form_is_labelling_independent() {
        let mut rng = rand::rngs::StdRng::seed_from_u64(7);
        for _ in 0..300 {
            let n = rng.gen_range(1..=14);
            let p = rng.gen_range(0.1..0.9);
            let g = random_graph(&mut rng, n, p);
            let h = g.relabel(&random_perm(&mut rng, n));
            let (cg, ch) = (canonize(&g), canonize(&h));
            assert_eq!(cg.graph, ch.graph);
            assert_eq!(cg.form(), ch.form());
            assert_eq!(g.relabel(&cg.inverse_labelling()), cg.graph);
            assert_eq!(cg.form().to_graph(), cg.graph);
            for gen in &cg.generators {
                assert_eq!(g.relabel(gen), g);
            }
        }
    }

    #[test]
    fn orbits_match_brute_force_on_small_graphs() {
        let mut rng = rand::rngs::StdRng::seed_from_u64(11);
        for _ in 0..150 {
            let n = rng.gen_range(1..=7);
            let g = random_graph(&mut rng, n, 0.5);
            let mut brute: Vec<u32> = vec![0; n];
            let mut perm: Vec<usize> = (0..n).collect();
            permutations(&mut perm, 0, &mut |p| {
                if g.relabel(p) == g {
                    for v in 0..n {
                        brute[v] |= 1 << p[v];
                    }
                }
            });
            let c = canonize(&g);
            for u in 0..n {
                for v in 0..n {
                    assert_eq!(brute[u] >> v & 1 == 1, c.same_orbit(u, v), "{g:?} {u} {v}");
                }
            }
        }
    }

    fn permutations(p: &mut Vec<usize>, k: usize, f: &mut impl FnMut(&[usize])) {
        if k == p.len() {
            f(p);
            return;
        }
        for i in k..p.len() {
            p.swap(k, i);
            permutations(p, k + 1, f);
            p.swap(k, i);
        }
    }

    #[test]
    fn small_key_round_trip() {
        let mut rng = rand::rngs::StdRng::seed_from_u64(3);
        for _ in 0..200 {
            let n = rng.gen_range(1..=11);
            let g = canonical_graph(&random_graph(&mut rng, n, 0.4));
            assert_eq!(graph_from_small_key(n, small_key(&g)), g);
        }
        // key order agrees with the byte-string form order
        for _ in 0..200 {
            let n = rng.gen_range(2..=9);
            let a = canonize(&random_graph(&mut rng, n, 0.5));
            let b = canonize(&random_graph(&mut rng, n, 0.5));
            assert_eq!(small_key(&a.graph).cmp(&small_key(&b.graph)), a.form().cmp(&b.form()));
            assert_eq!(cmp_adjacency_strings(&a.graph, &b.graph), a.form().cmp(&b.form()));
        }
    }
}
