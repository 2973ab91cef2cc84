//! Deciding full `H`-colourability.
//!
//! A full-homomorphism out of a point-determining graph is injective, so it
//! is an induced embedding. Any graph collapses onto its full core by a
//! full-homomorphism, hence `G -> H` exists iff the full core of `G` is an
//! induced subgraph of `H`, and a witness is the collapse map followed by
//! the embedding.

use crate::error::{Error, Result};
use crate::graph_core::{contains_induced, find_induced, make_named, Graph, NamedGraph};
use crate::pd_core::{full_core, full_core_graph, linear_forest_spec};

/// A vertex map `V(G) -> V(H)` satisfying the full-homomorphism condition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FullHomWitness {
    assignment: Vec<usize>,
}

impl FullHomWitness {
    pub fn assignment(&self) -> &[usize] {
        &self.assignment
    }

    pub fn into_assignment(self) -> Vec<usize> {
        self.assignment
    }

    /// Whether `assignment` is a full-homomorphism `g -> h`.
    pub fn verify_assignment(g: &Graph, h: &Graph, assignment: &[usize]) -> bool {
        if assignment.len() != g.order() || assignment.iter().any(|&x| x >= h.order()) {
            return false;
        }
        for u in 0..g.order() {
            for v in u + 1..g.order() {
                let (a, b) = (assignment[u], assignment[v]);
                let image_adjacent = a != b && h.has_edge(a, b);
                if g.has_edge(u, v) != image_adjacent {
                    return false;
                }
            }
        }
        true
    }

    pub fn is_injective(&self) -> bool {
        let mut seen = 0u32;
        self.assignment.iter().all(|&x| {
            let fresh = seen >> x & 1 == 0;
            seen |= 1 << x;
            fresh
        })
    }
}

pub fn full_hom_witness(g: &Graph, h: &Graph) -> Option<FullHomWitness> {
    let (core, map) = full_core(g);
    if core.order() > h.order() {
        return None;
    }
    let embedding = find_induced(h, &core)?;
    let assignment: Vec<usize> = map.assignment().iter().map(|&c| embedding[c]).collect();
    assert!(
        FullHomWitness::verify_assignment(g, h, &assignment),
        "core route produced an invalid witness"
    );
    Some(FullHomWitness { assignment })
}

pub fn full_hom_exists(g: &Graph, h: &Graph) -> bool {
    let core = full_core_graph(g);
    core.order() <= h.order() && contains_induced(h, &core)
}

/// Exhaustive assignment search, kept as an independent check of the core route.
pub fn full_hom_brute(g: &Graph, h: &Graph) -> Result<bool> {
    if g.order() > 7 || h.order() > 6 {
        return Err(Error::SizeGuard(format!(
            "exhaustive search is limited to |V(G)| <= 7 and |V(H)| <= 6, got {} and {}",
            g.order(),
            h.order()
        )));
    }
    // all m^n assignments, abandoning a prefix as soon as it breaks a pair
    fn extend(g: &Graph, h: &Graph, assignment: &mut Vec<usize>) -> bool {
        let i = assignment.len();
        if i == g.order() {
            return true;
        }
        for x in 0..h.order() {
            let consistent = (0..i).all(|j| {
                let y = assignment[j];
                g.has_edge(i, j) == (x != y && h.has_edge(x, y))
            });
            if consistent {
                assignment.push(x);
                if extend(g, h, assignment) {
                    return true;
                }
                assignment.pop();
            }
        }
        false
    }
    Ok(extend(g, h, &mut Vec::with_capacity(g.order())))
}

/// An induced subgraph that rules out being a blow-up of a linear forest.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ForbiddenWitness {
    /// `"C_5"`, `"A"`, ...
    pub name: String,
    pub pattern: Graph,
    /// Vertices of the input graph inducing `pattern`, indexed by pattern vertex.
    pub vertices: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlowupVerdict {
    pub is_blowup: bool,
    pub witness: Option<ForbiddenWitness>,
}

/// The forbidden patterns for blow-ups of linear forests on at most `n`
/// vertices: `C_3`, `C_m` for `5 <= m <= n`, then `A`, `B`, `E`.
pub fn blowup_forbidden_patterns(n: usize) -> Vec<(String, Graph)> {
    let mut out = vec![("C_3".to_string(), Graph::cycle(3).expect("C_3"))];
    for m in 5..=n.min(crate::graph_core::MAX_ORDER) {
        out.push((format!("C_{m}"), Graph::cycle(m).expect("cycle within capacity")));
    }
    for named in NamedGraph::ALL {
        out.push((named.name().to_string(), make_named(named)));
    }
    out
}

/// Search `g` for one of the forbidden patterns.
pub fn find_blowup_obstruction(g: &Graph) -> Option<ForbiddenWitness> {
    blowup_forbidden_patterns(g.order()).into_iter().find_map(|(name, pattern)| {
        find_induced(g, &pattern).map(|vertices| ForbiddenWitness {
            name,
            pattern,
            vertices,
        })
    })
}

/// A graph is a blow-up of a linear forest iff its full core is a linear
/// forest. When it is not, the verdict carries an induced forbidden
/// subgraph found by direct search.
pub fn is_blowup_of_linear_forest(g: &Graph) -> BlowupVerdict {
    let is_blowup = linear_forest_spec(&full_core_graph(g)).is_ok();
    BlowupVerdict {
        is_blowup,
        witness: if is_blowup { None } else { find_blowup_obstruction(g) },
    }
}
