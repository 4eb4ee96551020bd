//! Max-ATSP-Path solvers: maximum-weight Hamiltonian paths in a complete
//! digraph.
//!
//! All solvers implement [`MaxPathSolver`], which is the slot the
//! superstring pipeline plugs into. [`ExactPath`] (Held–Karp) is exact and
//! practical up to about 16 nodes. [`CycleCoverPath`] and [`GreedyPath`] are
//! ½-approximations. A 2/3-approximation (Kaplan et al., Paluch et al.) is
//! the natural production upgrade for large inputs and would be added as
//! another implementation of the trait.

use serde::Serialize;
use thiserror::Error;

use crate::graph::{self, WeightMatrix};
use crate::rational::{self, Rational};

pub const DEFAULT_EXACT_LIMIT: usize = 16;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AtspError {
    #[error("exact solver limit: {n} nodes exceeds limit {limit}")]
    ExactLimit { n: usize, limit: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum SolverTag {
    Exact,
    CycleCoverHalf,
    Greedy,
}

impl SolverTag {
    /// Worst-case fraction of the optimum path weight.
    pub fn ratio_guarantee(self) -> Rational {
        match self {
            SolverTag::Exact => rational::int(1),
            SolverTag::CycleCoverHalf | SolverTag::Greedy => rational::frac(1, 2),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PathSolution {
    pub order: Vec<usize>,
    pub weight: i64,
    pub solver_tag: SolverTag,
}

impl PathSolution {
    fn new(order: Vec<usize>, m: &WeightMatrix, solver_tag: SolverTag) -> Self {
        let weight = path_weight(m, &order);
        PathSolution { order, weight, solver_tag }
    }

    pub fn ratio_guarantee(&self) -> Rational {
        self.solver_tag.ratio_guarantee()
    }
}

pub fn path_weight(m: &WeightMatrix, order: &[usize]) -> i64 {
    order.windows(2).map(|e| m.get(e[0], e[1])).sum()
}

pub trait MaxPathSolver {
    fn tag(&self) -> SolverTag;
    fn solve(&self, m: &WeightMatrix) -> Result<PathSolution, AtspError>;
}

/// Held–Karp over subsets, O(2ⁿ·n²) time and O(2ⁿ·n) memory.
#[derive(Debug, Clone, Copy)]
pub struct ExactPath {
    pub limit: usize,
}

impl Default for ExactPath {
    fn default() -> Self {
        ExactPath { limit: DEFAULT_EXACT_LIMIT }
    }
}

impl MaxPathSolver for ExactPath {
    fn tag(&self) -> SolverTag {
        SolverTag::Exact
    }

    fn solve(&self, m: &WeightMatrix) -> Result<PathSolution, AtspError> {
        exact_max_path(m, self.limit)
    }
}

#[derive(Debug, Clone, Copy, Default)]
pub struct CycleCoverPath;

impl MaxPathSolver for CycleCoverPath {
    fn tag(&self) -> SolverTag {
        SolverTag::CycleCoverHalf
    }

    fn solve(&self, m: &WeightMatrix) -> Result<PathSolution, AtspError> {
        Ok(cycle_cover_path(m))
    }
}

#[derive(Debug, Clone, Copy, Default)]
pub struct GreedyPath;

impl MaxPathSolver for GreedyPath {
    fn tag(&self) -> SolverTag {
        SolverTag::Greedy
    }

    fn solve(&self, m: &WeightMatrix) -> Result<PathSolution, AtspError> {
        Ok(greedy_max_path(m))
    }
}

/// Maximum-weight Hamiltonian path; among optimal paths the
/// lexicographically smallest order is returned.
pub fn exact_max_path(m: &WeightMatrix, limit: usize) -> Result<PathSolution, AtspError> {
    let n = m.n();
    if n > limit || n >= usize::BITS as usize {
        return Err(AtspError::ExactLimit { n, limit });
    }
    if n <= 1 {
        return Ok(PathSolution::new((0..n).collect(), m, SolverTag::Exact));
    }
    // best[set][v]: heaviest path that starts at v and visits exactly `set`
    // (v ∈ set). Filled by increasing set size so the path can be rebuilt
    // from the front, taking the smallest feasible node at every step.
    let full = (1usize << n) - 1;
    let unset = i64::MIN;
    let mut best = vec![unset; (full + 1) * n];
    for v in 0..n {
        best[(1 << v) * n + v] = 0;
    }
    for set in 1..=full {
        if set.count_ones() < 2 {
            continue;
        }
        for v in 0..n {
            if set & (1 << v) == 0 {
                continue;
            }
            let rest = set & !(1 << v);
            let mut value = unset;
            let mut bits = rest;
            while bits != 0 {
                let u = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                let sub = best[rest * n + u];
                if sub != unset {
                    value = value.max(m.get(v, u) + sub);
                }
            }
            best[set * n + v] = value;
        }
    }
    let optimum = (0..n).map(|v| best[full * n + v]).max().unwrap_or(0);
    let mut order = Vec::with_capacity(n);
    let mut set = full;
    let mut current = (0..n).find(|&v| best[full * n + v] == optimum).unwrap_or(0);
    order.push(current);
    while order.len() < n {
        let rest = set & !(1 << current);
        let target = best[set * n + current];
        let next = (0..n)
            .find(|&u| rest & (1 << u) != 0 && m.get(current, u) + best[rest * n + u] == target)
            .expect("Held-Karp table is consistent");
        order.push(next);
        set = rest;
        current = next;
    }
    Ok(PathSolution::new(order, m, SolverTag::Exact))
}

/// Maximum cycle cover (self-loops weighted zero), lightest edge dropped on
/// every cycle, resulting paths joined in ascending order of their smallest
/// node.
pub fn cycle_cover_path(m: &WeightMatrix) -> PathSolution {
    let cover = graph::max_cycle_cover(&m.without_self_loops());
    let mut order = Vec::with_capacity(m.n());
    for cycle in &cover.cycles {
        let k = cycle.len();
        // first lightest edge walking from the cycle's smallest node
        let drop = (0..k)
            .min_by_key(|&t| (m.get(cycle[t], cycle[(t + 1) % k]), t))
            .unwrap_or(0);
        order.extend((1..=k).map(|s| cycle[(drop + s) % k]));
    }
    PathSolution::new(order, m, SolverTag::CycleCoverHalf)
}

/// Repeatedly takes the heaviest edge that keeps the chosen edges a set of
/// vertex-disjoint paths; ties go to the smallest `(i, j)`.
pub fn greedy_max_path(m: &WeightMatrix) -> PathSolution {
    let n = m.n();
    let mut edges: Vec<(i64, usize, usize)> = (0..n)
        .flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| (i, j)))
        .map(|(i, j)| (m.get(i, j), i, j))
        .collect();
    edges.sort_by(|a, b| b.0.cmp(&a.0).then(a.1.cmp(&b.1)).then(a.2.cmp(&b.2)));

    let mut next = vec![usize::MAX; n];
    let mut has_pred = vec![false; n];
    // component id = head of the path the node currently belongs to
    let mut parent: Vec<usize> = (0..n).collect();
    fn root(parent: &mut [usize], mut v: usize) -> usize {
        while parent[v] != v {
            parent[v] = parent[parent[v]];
            v = parent[v];
        }
        v
    }
    let mut taken = 0;
    for (_, i, j) in edges {
        if taken + 1 >= n {
            break;
        }
        if next[i] != usize::MAX || has_pred[j] {
            continue;
        }
        let (ri, rj) = (root(&mut parent, i), root(&mut parent, j));
        if ri == rj {
            continue;
        }
        parent[rj] = ri;
        next[i] = j;
        has_pred[j] = true;
        taken += 1;
    }
    let mut order = Vec::with_capacity(n);
    if let Some(mut v) = (0..n).find(|&v| !has_pred[v]) {
        order.push(v);
        while next[v] != usize::MAX {
            v = next[v];
            order.push(v);
        }
    }
    PathSolution::new(order, m, SolverTag::Greedy)
}
