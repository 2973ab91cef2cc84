//! Induced-subgraph embedding by backtracking over bit masks.

use super::graph::{vertices_of, Graph, VertexSet};

/// Pattern vertex order for the search: repeatedly take the vertex with the
/// most already-placed neighbours, breaking ties by higher degree and then
/// lower label. Connected prefixes prune the host candidates early.
fn search_order(pattern: &Graph) -> Vec<usize> {
    let n = pattern.order();
    let mut placed: VertexSet = 0;
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let best = (0..n)
            .filter(|&v| placed >> v & 1 == 0)
            .max_by_key(|&v| {
                (
                    (pattern.neighbours(v) & placed).count_ones(),
                    pattern.degree(v),
                    std::cmp::Reverse(v),
                )
            })
            .expect("an unplaced vertex remains");
        placed |= 1 << best;
        order.push(best);
    }
    order
}

/// Find an induced copy of `pattern` in `host`: an injective map `f` with
/// `uv` an edge iff `f(u)f(v)` is. Returns `f` indexed by pattern vertex.
///
/// The result is the first embedding met when pattern vertices are placed
/// in a fixed order and host candidates are tried in ascending label order.
pub fn find_induced(host: &Graph, pattern: &Graph) -> Option<Vec<usize>> {
    let k = pattern.order();
    if k > host.order() {
        return None;
    }
    let order = search_order(pattern);
    // position of each pattern vertex in the search order
    let mut pos = [0usize; 32];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    // host vertices able to take pattern vertex `order[i]` on degree grounds
    let mut degree_ok = [0u32; 32];
    for (i, &v) in order.iter().enumerate() {
        let d = pattern.degree(v);
        let nd = k - 1 - d;
        for h in 0..host.order() {
            let hd = host.degree(h);
            if hd >= d && host.order() - 1 - hd >= nd {
                degree_ok[i] |= 1 << h;
            }
        }
    }
    // for step i, which earlier steps are adjacent in the pattern
    let mut earlier_adj = [0u32; 32];
    for (i, &v) in order.iter().enumerate() {
        for u in vertices_of(pattern.neighbours(v)) {
            if pos[u] < i {
                earlier_adj[i] |= 1 << pos[u];
            }
        }
    }

    let mut image = [0usize; 32];
    let mut cands = [0u32; 32];
    let mut used: VertexSet = 0;
    let mut i = 0usize;
    let candidates_at = |i: usize, image: &[usize; 32], used: VertexSet| -> u32 {
        let mut c = degree_ok[i] & !used;
        for j in 0..i {
            let row = host.neighbours(image[j]);
            if earlier_adj[i] >> j & 1 == 1 {
                c &= row;
            } else {
                c &= !row;
            }
        }
        c
    };
    if k == 0 {
        return Some(Vec::new());
    }
    cands[0] = candidates_at(0, &image, used);
    loop {
        if cands[i] == 0 {
            if i == 0 {
                return None;
            }
            i -= 1;
            used &= !(1 << image[i]);
            continue;
        }
        let h = cands[i].trailing_zeros() as usize;
        cands[i] &= cands[i] - 1;
        image[i] = h;
        used |= 1 << h;
        if i + 1 == k {
            let mut f = vec![0; k];
            for (step, &v) in order.iter().enumerate() {
                f[v] = image[step];
            }
            return Some(f);
        }
        i += 1;
        cands[i] = candidates_at(i, &image, used);
    }
}

/// Whether some vertex subset of `host` induces a copy of `pattern`.
pub fn contains_induced(host: &Graph, pattern: &Graph) -> bool {
    find_induced(host, pattern).is_some()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph_core::{make_named, NamedGraph};

    fn is_induced_embedding(host: &Graph, pattern: &Graph, f: &[usize]) -> bool {
        let k = pattern.order();
        let mut seen = 0u32;
        for &x in f {
            if seen >> x & 1 == 1 {
                return false;
            }
            seen |= 1 << x;
        }
        (0..k).all(|u| (0..k).all(|v| u == v || pattern.has_edge(u, v) == host.has_edge(f[u], f[v])))
    }

    #[test]
    fn examples() {
        let c6 = Graph::cycle(6).unwrap();
        let p4 = Graph::path(4).unwrap();
        let f = find_induced(&c6, &p4).unwrap();
        assert!(is_induced_embedding(&c6, &p4, &f));
        let b = make_named(NamedGraph::B);
        assert!(contains_induced(&b, &Graph::cycle(4).unwrap()));
        assert!(!contains_induced(&Graph::complete(3).unwrap(), &Graph::path(3).unwrap()));
        assert!(!contains_induced(&Graph::cycle(6).unwrap(), &Graph::cycle(5).unwrap()));
        assert!(!contains_induced(&p4, &Graph::cycle(6).unwrap()));
    }

    #[test]
    fn self_and_single_vertex() {
        for g in [
            Graph::cycle(7).unwrap(),
            make_named(NamedGraph::A),
            make_named(NamedGraph::E),
            Graph::empty(5).unwrap(),
        ] {
            assert!(contains_induced(&g, &g));
            assert!(contains_induced(&g, &Graph::path(1).unwrap()));
        }
    }
}
