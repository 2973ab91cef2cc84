use std::collections::HashMap;

use fullobs::enumeration::{Catalog, Filter};
use fullobs::fullhom::full_hom_exists;
use fullobs::graph_core::{canonical_form, is_isomorphic, is_vertex_transitive, vertices_of};
use fullobs::obstructions::{
    check_obs_transfer, construct_witness_host, is_minimal_obstruction, obs_oracle, obs_star_existence_regular,
    obs_star_oracle, ObstructionSet,
};
use fullobs::pd_core::{is_point_determining, true_twins};
use fullobs::Graph;

fn union(parts: &[Graph]) -> Graph {
    Graph::disjoint_union(parts).unwrap()
}

/// Minimality checked against every proper induced subgraph.
fn minimal_by_all_subsets(g: &Graph, h: &Graph) -> bool {
    if full_hom_exists(g, h) {
        return false;
    }
    let full = g.vertex_mask();
    (1..full).all(|mask| full_hom_exists(&g.induced_by_mask(mask).unwrap(), h))
}

#[test]
fn one_vertex_deletions_suffice_for_minimality() {
    let cat = Catalog::builtin();
    let hosts: Vec<Graph> = (1..=4).flat_map(|n| cat.classes(n, Filter::All).unwrap()).collect();
    for n in 1..=5 {
        for g in cat.classes(n, Filter::All).unwrap() {
            for h in &hosts {
                assert_eq!(is_minimal_obstruction(&g, h), minimal_by_all_subsets(&g, h), "{g} for {h}");
            }
        }
    }
}

#[test]
fn scanning_only_point_determining_graphs_loses_nothing() {
    let cat = Catalog::builtin();
    for n in 1..=4 {
        for h in cat.classes(n, Filter::All).unwrap() {
            let everything: Vec<Graph> = (1..=n + 1)
                .flat_map(|k| cat.classes(k, Filter::All).unwrap())
                .filter(|g| is_minimal_obstruction(g, &h))
                .collect();
            let full = ObstructionSet::new(h, everything);
            let oracle = obs_oracle(&h).unwrap();
            assert!(full.same_members(&oracle), "{h}");
            oracle.check_invariants().unwrap();
        }
    }
}

#[test]
fn complete_and_regular_hosts() {
    let k = |n| Graph::complete(n).unwrap();
    assert!(obs_star_oracle(&k(1)).unwrap().same_members(&ObstructionSet::new(k(1), [k(2)])));
    for n in 3..=6 {
        let star = obs_star_oracle(&k(n)).unwrap();
        assert!(star.same_members(&ObstructionSet::new(k(n), [k(n + 1)])), "K_{n}");
        let all = obs_oracle(&k(n)).unwrap();
        let k1k2 = union(&[Graph::path(1).unwrap(), Graph::path(2).unwrap()]);
        assert!(all.same_members(&ObstructionSet::new(k(n), [k1k2, k(n + 1)])), "K_{n}");
    }
    for n in 3..=7 {
        for h in Catalog::builtin().classes(n, Filter::ConnectedRegular).unwrap() {
            if !h.is_complete() {
                assert!(obs_star_oracle(&h).unwrap().is_empty(), "{h}");
            }
        }
    }
}

/// Bound of two, the one-vertex-extension shape, host uniqueness, and the
/// true-twin implication for regular hosts, over every host on at most 7
/// vertices.
#[test]
fn obs_star_structure_for_small_hosts() {
    let cat = Catalog::builtin();
    let mut hosts_of: HashMap<_, Vec<Graph>> = HashMap::new();
    for n in 1..=7 {
        for h in cat.classes(n, Filter::All).unwrap() {
            let star = obs_star_oracle(&h).unwrap();
            assert!(star.len() <= 2, "{h}: {star:?}");
            for g in star.graphs() {
                assert!(
                    (0..g.order()).any(|v| is_isomorphic(&g.delete_vertex(v).unwrap(), &h)),
                    "{g} over {h}"
                );
                if h.is_regular() && h.is_connected() && !h.is_complete() {
                    let twins = true_twins(g);
                    assert!(
                        twins.iter().any(|&(u, v)| {
                            is_isomorphic(&g.delete_vertex(u).unwrap(), &h)
                                && is_isomorphic(&g.delete_vertex(v).unwrap(), &h)
                        }),
                        "{g} over regular {h}"
                    );
                }
                hosts_of.entry(canonical_form(g)).or_default().push(h);
            }
        }
    }
    for (g, hosts) in hosts_of {
        assert_eq!(hosts.len(), 1, "{:?} lies in obs* of {} hosts", g, hosts.len());
    }
}

#[test]
fn vertex_transitive_hosts() {
    let cat = Catalog::builtin();
    let mut seen = 0;
    for n in 3..=8 {
        for h in cat.classes(n, Filter::Connected).unwrap() {
            if h.is_complete() || !is_vertex_transitive(&h) {
                continue;
            }
            let obs_h = obs_oracle(&h).unwrap();
            for x in [0, n - 1] {
                let smaller = obs_oracle(&h.delete_vertex(x).unwrap()).unwrap().without(&h);
                assert!(obs_h.same_members(&smaller), "{h} minus {x}");
            }
            seen += 1;
        }
    }
    assert!(seen >= 8, "only {seen} hosts checked");
}

#[test]
fn regular_graphs_in_some_obs_star_are_the_vertex_transitive_ones() {
    let cat = Catalog::builtin();
    let mut non_transitive = 0;
    for n in 2..=8 {
        for g in cat.classes(n, Filter::PointDetermining).unwrap() {
            if !g.is_regular() {
                continue;
            }
            let vt = is_vertex_transitive(&g);
            non_transitive += usize::from(!vt);
            assert_eq!(obs_star_existence_regular(&g).unwrap(), vt, "{g}");
        }
    }
    assert!(non_transitive > 0);
}

#[test]
fn transfer_identity_for_every_small_member() {
    let cat = Catalog::builtin();
    let mut checked = 0;
    for n in 1..=5 {
        for h in cat.classes(n, Filter::All).unwrap() {
            for g in obs_star_oracle(&h).unwrap().graphs() {
                let report = check_obs_transfer(&h, g).unwrap();
                assert!(report.holds(), "{h} / {g}: {:?} {:?}", report.only_lhs(), report.only_rhs());
                checked += 1;
            }
        }
    }
    assert!(checked > 10);
}

#[test]
fn witness_hosts_for_connected_point_determining_graphs() {
    let cat = Catalog::builtin();
    for n in 2..=6 {
        for g in cat.classes(n, Filter::Connected).unwrap() {
            if !is_point_determining(&g) {
                continue;
            }
            let w = construct_witness_host(&g).unwrap();
            assert!(w.verified, "{g}");
            // components come from the vertex-deleted subgraphs in order
            let sizes: Vec<usize> = w.host.component_masks().iter().map(|m| vertices_of(*m).count()).collect();
            assert_eq!(sizes.iter().sum::<usize>(), w.host.order());
        }
    }
}
