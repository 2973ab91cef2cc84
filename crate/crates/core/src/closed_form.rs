//! Explicit obstruction sets for paths and cycles.
//!
//! `obs(P_n)` is `C(n) ∪ LF(n) ∪ O(n)` where `C(n)` holds the cycles `C_3`
//! and `C_5..C_{n+1}`, `O(n)` holds some of `A`, `B`, `E`, and `LF(n)` holds
//! the linear forests read off the non-negative solutions of
//!
//! ```text
//! LF1: 3 m2             = n + 2    m2·K_2
//! LF2: 3 m2 + 5 m4      = n + 1    K_1 + m2·K_2 + m4·P_4
//! LF3: 3 m2 + 5 m4 + 7 m6 = n      K_1 + m2·K_2 + m4·P_4 + m6·P_6
//! ```
//!
//! For `n >= 5`, `obs(C_n) = C(n-2) ∪ LF(n-1) ∪ O(n-1)`.
//!
//! Members are kept symbolic so sets and counts are available past the
//! 32-vertex graph capacity; graphs are built only on request.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::graph_core::{make_named, Graph, NamedGraph, MAX_ORDER};
use crate::obstructions::ObstructionSet;
use crate::pd_core::LinearForestSpec;

/// All non-negative integer solutions of `Σ coeffs[i]·x[i] = target`, in
/// lexicographic order.
///
/// # Panics
/// If `coeffs` is empty or has a zero entry.
pub fn solve_linear(coeffs: &[u64], target: i64) -> Vec<Vec<u64>> {
    assert!(!coeffs.is_empty(), "at least one coefficient");
    assert!(coeffs.iter().all(|&c| c >= 1), "coefficients must be positive");
    let mut out = Vec::new();
    if target < 0 {
        return out;
    }
    fn rec(coeffs: &[u64], rest: u64, prefix: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
        let (&c, tail) = coeffs.split_first().expect("nonempty");
        if tail.is_empty() {
            if rest.is_multiple_of(c) {
                prefix.push(rest / c);
                out.push(prefix.clone());
                prefix.pop();
            }
            return;
        }
        for x in 0..=rest / c {
            prefix.push(x);
            rec(tail, rest - x * c, prefix, out);
            prefix.pop();
        }
    }
    rec(coeffs, target as u64, &mut Vec::with_capacity(coeffs.len()), &mut out);
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum LfFamily {
    Lf1,
    Lf2,
    Lf3,
}

impl LfFamily {
    pub const ALL: [LfFamily; 3] = [LfFamily::Lf1, LfFamily::Lf2, LfFamily::Lf3];

    pub fn coefficients(self) -> &'static [u64] {
        match self {
            LfFamily::Lf1 => &[3],
            LfFamily::Lf2 => &[3, 5],
            LfFamily::Lf3 => &[3, 5, 7],
        }
    }

    /// Right-hand side of the family's equation for a given `n`.
    pub fn target(self, n: usize) -> i64 {
        let n = n as i64;
        match self {
            LfFamily::Lf1 => n + 2,
            LfFamily::Lf2 => n + 1,
            LfFamily::Lf3 => n,
        }
    }
}

/// One solution of an LF equation, `variables` being `(m2)`, `(m2, m4)` or
/// `(m2, m4, m6)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DiophantineSolution {
    pub family: LfFamily,
    pub variables: Vec<u64>,
}

impl DiophantineSolution {
    pub fn forest(&self) -> LinearForestSpec {
        let v = |i: usize| self.variables.get(i).copied().unwrap_or(0) as usize;
        let isolated = usize::from(self.family != LfFamily::Lf1);
        LinearForestSpec::from_counts([(1, isolated), (2, v(0)), (4, v(1)), (6, v(2))])
            .expect("every LF solution has a vertex")
    }
}

/// Solutions of all three LF equations for `n`.
pub fn lf_solutions(n: usize) -> Vec<DiophantineSolution> {
    LfFamily::ALL
        .into_iter()
        .flat_map(|family| {
            solve_linear(family.coefficients(), family.target(n))
                .into_iter()
                .map(move |variables| DiophantineSolution { family, variables })
        })
        // LF1 with m2 = 0 would be the null graph
        .filter(|s| s.family != LfFamily::Lf1 || s.variables[0] > 0)
        .collect()
}

/// A member of a closed-form obstruction set, described by name.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Member {
    Cycle(usize),
    Named(NamedGraph),
    Forest(LinearForestSpec),
}

impl Member {
    pub fn order(&self) -> usize {
        match self {
            Member::Cycle(m) => *m,
            Member::Named(_) => 6,
            Member::Forest(spec) => spec.order(),
        }
    }

    pub fn to_graph(&self) -> Result<Graph> {
        match self {
            Member::Cycle(m) => Graph::cycle(*m),
            Member::Named(x) => Ok(make_named(*x)),
            Member::Forest(spec) => spec.to_graph(),
        }
    }
}

impl fmt::Display for Member {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Member::Cycle(m) => write!(f, "C_{m}"),
            Member::Named(x) => f.write_str(x.name()),
            Member::Forest(spec) => write!(f, "{spec}"),
        }
    }
}

fn check_path_domain(n: usize) -> Result<()> {
    if n < 2 {
        return Err(Error::domain(format!(
            "the closed form for paths needs n >= 2, got {n}"
        )));
    }
    Ok(())
}

fn check_cycle_domain(n: usize) -> Result<()> {
    if n < 5 {
        return Err(Error::domain(format!(
            "the closed form for cycles needs n >= 5, got {n}"
        )));
    }
    Ok(())
}

#[allow(non_snake_case)]
pub fn set_C(n: usize) -> Result<Vec<Member>> {
    check_path_domain(n)?;
    Ok(std::iter::once(3).chain(5..=n + 1).map(Member::Cycle).collect())
}

#[allow(non_snake_case)]
pub fn set_O(n: usize) -> Result<Vec<Member>> {
    check_path_domain(n)?;
    let named: &[NamedGraph] = match n {
        0..=4 => &[],
        5 => &[NamedGraph::B],
        6 => &[NamedGraph::A, NamedGraph::B],
        _ => &NamedGraph::ALL,
    };
    Ok(named.iter().copied().map(Member::Named).collect())
}

#[allow(non_snake_case)]
pub fn set_LF(n: usize) -> Result<Vec<Member>> {
    check_path_domain(n)?;
    let forests: BTreeSet<LinearForestSpec> = lf_solutions(n).iter().map(DiophantineSolution::forest).collect();
    Ok(forests.into_iter().map(Member::Forest).collect())
}

/// Symbolic `obs(P_n)`, sorted and duplicate-free.
pub fn obs_paths_members(n: usize) -> Result<Vec<Member>> {
    let mut all: BTreeSet<Member> = BTreeSet::new();
    all.extend(set_C(n)?);
    all.extend(set_LF(n)?);
    all.extend(set_O(n)?);
    Ok(all.into_iter().collect())
}

/// Symbolic `obs(C_n)`, `n >= 5`.
pub fn obs_cycles_members(n: usize) -> Result<Vec<Member>> {
    check_cycle_domain(n)?;
    let mut all: BTreeSet<Member> = BTreeSet::new();
    all.extend(set_C(n - 2)?);
    all.extend(set_LF(n - 1)?);
    all.extend(set_O(n - 1)?);
    Ok(all.into_iter().collect())
}

fn materialize(host: Graph, members: &[Member]) -> Result<ObstructionSet> {
    let graphs = members.iter().map(Member::to_graph).collect::<Result<Vec<_>>>()?;
    Ok(ObstructionSet::new(host, graphs))
}

/// `obs(P_n)` as graphs. Needs `2 <= n < 32` so every member fits.
pub fn obs_paths_closed(n: usize) -> Result<ObstructionSet> {
    check_path_domain(n)?;
    if n + 1 > MAX_ORDER {
        return Err(Error::Capacity {
            order: n + 1,
            max: MAX_ORDER,
        });
    }
    materialize(Graph::path(n)?, &obs_paths_members(n)?)
}

/// `obs(C_n)` as graphs, `5 <= n <= 32`.
pub fn obs_cycles_closed(n: usize) -> Result<ObstructionSet> {
    check_cycle_domain(n)?;
    materialize(Graph::cycle(n)?, &obs_cycles_members(n)?)
}

fn cycle_count(n: usize) -> usize {
    1 + (n + 1).saturating_sub(4)
}

fn other_count(n: usize) -> usize {
    match n {
        0..=4 => 0,
        5 => 1,
        6 => 2,
        _ => 3,
    }
}

/// `|obs(P_n)|` from the solution counts alone.
pub fn count_obs_paths(n: usize) -> Result<usize> {
    check_path_domain(n)?;
    Ok(cycle_count(n) + other_count(n) + lf_solutions(n).len())
}

/// `|obs(C_n)|` from the solution counts alone.
pub fn count_obs_cycles(n: usize) -> Result<usize> {
    check_cycle_domain(n)?;
    Ok(cycle_count(n - 2) + other_count(n - 1) + lf_solutions(n - 1).len())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph_core::is_isomorphic;

    fn names(ms: &[Member]) -> Vec<String> {
        ms.iter().map(Member::to_string).collect()
    }

    #[test]
    fn solver() {
        assert_eq!(solve_linear(&[3], 9), vec![vec![3]]);
        assert_eq!(solve_linear(&[3, 5], 8), vec![vec![1, 1]]);
        assert_eq!(solve_linear(&[3, 5, 7], 9), vec![vec![3, 0, 0]]);
        assert!(solve_linear(&[3, 5], -1).is_empty());
        assert_eq!(solve_linear(&[1, 1], 2), vec![vec![0, 2], vec![1, 1], vec![2, 0]]);
        assert_eq!(solve_linear(&[3], 0), vec![vec![0]]);
    }

    #[test]
    fn families() {
        assert_eq!(names(&set_C(4).unwrap()), ["C_3", "C_5"]);
        assert_eq!(names(&set_O(5).unwrap()), ["B"]);
        assert_eq!(names(&set_O(7).unwrap()), ["A", "B", "E"]);
        assert_eq!(names(&set_LF(5).unwrap()), ["K_1+2K_2", "K_1+P_4"]);
        assert_eq!(names(&set_LF(7).unwrap()), ["K_1+K_2+P_4", "K_1+P_6", "3K_2"]);
        assert_eq!(names(&set_LF(9).unwrap()), ["K_1+3K_2", "K_1+2P_4"]);
        assert!(set_C(1).is_err());
        assert!(set_LF(0).is_err());
    }

    #[test]
    fn path_sets() {
        let two = obs_paths_closed(2).unwrap();
        assert_eq!(two.len(), 2);
        let k1k2 = Graph::disjoint_union(&[Graph::path(1).unwrap(), Graph::path(2).unwrap()]).unwrap();
        assert!(two.contains(&k1k2) && two.contains(&Graph::complete(3).unwrap()));
        assert_eq!(
            names(&obs_paths_members(5).unwrap()),
            ["C_3", "C_5", "C_6", "B", "K_1+2K_2", "K_1+P_4"]
        );
        assert_eq!(obs_paths_closed(8).unwrap().len(), 11);
        assert!(obs_paths_closed(1).is_err());
        assert!(obs_paths_closed(31).is_ok());
        assert!(matches!(obs_paths_closed(32), Err(Error::Capacity { .. })));
    }

    #[test]
    fn cycle_sets() {
        assert_eq!(names(&obs_cycles_members(5).unwrap()), ["C_3", "K_1+P_4", "2K_2"]);
        assert_eq!(
            names(&obs_cycles_members(7).unwrap()),
            ["C_3", "C_5", "C_6", "A", "B", "K_1+2K_2"]
        );
        assert_eq!(
            names(&obs_cycles_members(10).unwrap()),
            ["C_3", "C_5", "C_6", "C_7", "C_8", "C_9", "A", "B", "E", "K_1+3K_2", "K_1+2P_4"]
        );
        assert!(obs_cycles_closed(4).is_err());
    }

    #[test]
    fn counts() {
        assert_eq!(count_obs_paths(8).unwrap(), 11);
        assert_eq!(count_obs_cycles(5).unwrap(), 3);
        for n in 2..=50 {
            assert_eq!(count_obs_paths(n).unwrap(), obs_paths_members(n).unwrap().len(), "P_{n}");
        }
        for n in 5..=50 {
            assert_eq!(count_obs_cycles(n).unwrap(), obs_cycles_members(n).unwrap().len(), "C_{n}");
        }
    }

    #[test]
    fn forests_build() {
        let s = DiophantineSolution {
            family: LfFamily::Lf3,
            variables: vec![0, 1, 1],
        };
        let g = s.forest().to_graph().unwrap();
        let expected = Graph::disjoint_union(&[
            Graph::path(1).unwrap(),
            Graph::path(4).unwrap(),
            Graph::path(6).unwrap(),
        ])
        .unwrap();
        assert!(is_isomorphic(&g, &expected));
    }
}
