//! Overlap and prefix (distance) graphs, exact cycle covers and per-cycle
//! statistics.

use serde::Serialize;
use thiserror::Error;

use crate::rational::{self, Rational};
use crate::words::{self, Text};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("empty input")]
    EmptyInput,
    #[error("degenerate instance")]
    Degenerate { survivors: Vec<Text> },
    #[error("instance strings must be distinct (index {0})")]
    Duplicate(usize),
    #[error("string {inner} is a substring of string {outer}")]
    Substring { inner: usize, outer: usize },
    #[error("matrix is not square")]
    NotSquare,
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
}

/// A normalized input set: at least two distinct strings, none a substring
/// of another.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Instance {
    strings: Vec<Text>,
    labels: Option<Vec<String>>,
}

impl Instance {
    pub fn new(strings: Vec<Text>) -> Result<Self, GraphError> {
        if strings.len() < 2 {
            return Err(GraphError::Degenerate { survivors: strings });
        }
        for (i, s) in strings.iter().enumerate() {
            for (j, t) in strings.iter().enumerate() {
                if i == j {
                    continue;
                }
                if s == t {
                    return Err(GraphError::Duplicate(i.max(j)));
                }
                if words::contains(t, s) {
                    return Err(GraphError::Substring { inner: i, outer: j });
                }
            }
        }
        Ok(Instance { strings, labels: None })
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self, GraphError> {
        if labels.len() != self.strings.len() {
            return Err(GraphError::DimensionMismatch { expected: self.strings.len(), got: labels.len() });
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn strings(&self) -> &[Text] {
        &self.strings
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn len(&self) -> usize {
        self.strings.len()
    }

    pub fn is_empty(&self) -> bool {
        self.strings.is_empty()
    }

    pub fn total_length(&self) -> usize {
        self.strings.iter().map(Vec::len).sum()
    }
}

/// Why a raw string did not survive normalization. Indices refer to the raw
/// input list.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Removal {
    Duplicate { index: usize, kept: usize },
    Substring { index: usize, container: usize },
}

#[derive(Debug, Clone)]
pub struct Normalized {
    pub instance: Instance,
    /// Raw index of every surviving string, in instance order.
    pub kept: Vec<usize>,
    pub removed: Vec<Removal>,
}

/// Removes duplicates (first occurrence wins) and strings contained in
/// another string, preserving input order.
pub fn normalize(raw: &[Text]) -> Result<Normalized, GraphError> {
    if raw.is_empty() {
        return Err(GraphError::EmptyInput);
    }
    let mut removed = Vec::new();
    let mut unique: Vec<usize> = Vec::new();
    for (i, s) in raw.iter().enumerate() {
        match unique.iter().find(|&&u| raw[u] == *s) {
            Some(&kept) => removed.push(Removal::Duplicate { index: i, kept }),
            None => unique.push(i),
        }
    }
    let mut kept = Vec::new();
    for &i in &unique {
        let container = unique.iter().copied().find(|&j| j != i && words::contains(&raw[j], &raw[i]));
        match container {
            Some(container) => removed.push(Removal::Substring { index: i, container }),
            None => kept.push(i),
        }
    }
    removed.sort_by_key(|r| match *r {
        Removal::Duplicate { index, .. } | Removal::Substring { index, .. } => index,
    });
    let strings: Vec<Text> = kept.iter().map(|&i| raw[i].clone()).collect();
    if strings.len() < 2 {
        return Err(GraphError::Degenerate { survivors: strings });
    }
    Ok(Normalized { instance: Instance { strings, labels: None }, kept, removed })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum MatrixKind {
    Overlap,
    Prefix,
}

/// Square integer edge-weight matrix of a complete digraph with self-loops.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightMatrix {
    kind: MatrixKind,
    rows: Vec<Vec<i64>>,
}

impl WeightMatrix {
    pub fn from_rows(kind: MatrixKind, rows: Vec<Vec<i64>>) -> Result<Self, GraphError> {
        if rows.iter().any(|r| r.len() != rows.len()) {
            return Err(GraphError::NotSquare);
        }
        Ok(WeightMatrix { kind, rows })
    }

    /// Overlap graph of arbitrary texts; the diagonal holds each text's
    /// longest border.
    pub fn overlap_of(texts: &[Text]) -> Self {
        let rows = texts
            .iter()
            .map(|u| texts.iter().map(|v| words::overlap_len(u, v) as i64).collect())
            .collect();
        WeightMatrix { kind: MatrixKind::Overlap, rows }
    }

    /// Prefix graph derived from an overlap matrix of the same texts.
    pub fn prefix_of(texts: &[Text], overlap: &WeightMatrix) -> Self {
        let rows = texts
            .iter()
            .zip(&overlap.rows)
            .map(|(s, row)| row.iter().map(|&o| s.len() as i64 - o).collect())
            .collect();
        WeightMatrix { kind: MatrixKind::Prefix, rows }
    }

    /// Copy with every self-loop weight set to zero.
    pub fn without_self_loops(&self) -> Self {
        let mut out = self.clone();
        for (i, row) in out.rows.iter_mut().enumerate() {
            row[i] = 0;
        }
        out
    }

    pub fn kind(&self) -> MatrixKind {
        self.kind
    }

    pub fn n(&self) -> usize {
        self.rows.len()
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.rows[i][j]
    }

    pub fn rows(&self) -> &[Vec<i64>] {
        &self.rows
    }
}

pub fn build_matrices(inst: &Instance) -> (WeightMatrix, WeightMatrix) {
    let overlap = WeightMatrix::overlap_of(inst.strings());
    let prefix = WeightMatrix::prefix_of(inst.strings(), &overlap);
    (overlap, prefix)
}

/// A permutation read as a set of disjoint cycles.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CycleCover {
    /// `perm[i]` is the successor of node `i`.
    pub perm: Vec<usize>,
    /// Each cycle starts at its smallest node; cycles are sorted by that node.
    pub cycles: Vec<Vec<usize>>,
    pub total_weight: i64,
}

impl CycleCover {
    pub fn from_perm(perm: Vec<usize>, m: &WeightMatrix) -> Self {
        let n = perm.len();
        let mut seen = vec![false; n];
        let mut cycles = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut v = start;
            while !seen[v] {
                seen[v] = true;
                cycle.push(v);
                v = perm[v];
            }
            cycles.push(cycle);
        }
        let total_weight = perm.iter().enumerate().map(|(i, &j)| m.get(i, j)).sum();
        CycleCover { perm, cycles, total_weight }
    }
}

/// Minimum-cost perfect assignment (Hungarian method, O(n^3)).
/// Returns `assign[row] = column`.
fn hungarian(costs: &[Vec<i64>]) -> Vec<usize> {
    let n = costs.len();
    if n == 0 {
        return Vec::new();
    }
    let inf = i64::MAX / 4;
    let mut u = vec![0i64; n + 1];
    let mut v = vec![0i64; n + 1];
    let mut p = vec![0usize; n + 1];
    let mut way = vec![0usize; n + 1];
    for i in 1..=n {
        p[0] = i;
        let mut j0 = 0usize;
        let mut minv = vec![inf; n + 1];
        let mut used = vec![false; n + 1];
        loop {
            used[j0] = true;
            let i0 = p[j0];
            let mut delta = inf;
            let mut j1 = 0usize;
            for j in 1..=n {
                if used[j] {
                    continue;
                }
                let cur = costs[i0 - 1][j - 1] - u[i0] - v[j];
                if cur < minv[j] {
                    minv[j] = cur;
                    way[j] = j0;
                }
                if minv[j] < delta {
                    delta = minv[j];
                    j1 = j;
                }
            }
            for j in 0..=n {
                if used[j] {
                    u[p[j]] += delta;
                    v[j] -= delta;
                } else {
                    minv[j] -= delta;
                }
            }
            j0 = j1;
            if p[j0] == 0 {
                break;
            }
        }
        loop {
            let j1 = way[j0];
            p[j0] = p[j1];
            j0 = j1;
            if j0 == 0 {
                break;
            }
        }
    }
    let mut assign = vec![0usize; n];
    for j in 1..=n {
        assign[p[j] - 1] = j - 1;
    }
    assign
}

/// Scales costs so that, among optimal assignments, the one with the most
/// fixed points wins; the Hungarian scan order settles the rest.
fn tie_broken(costs: impl Fn(usize, usize) -> i64, n: usize) -> Vec<Vec<i64>> {
    let scale = n as i64 + 1;
    (0..n)
        .map(|i| (0..n).map(|j| costs(i, j) * scale + i64::from(i != j)).collect())
        .collect()
}

/// Exact minimum-weight cycle cover.
pub fn min_cycle_cover(m: &WeightMatrix) -> CycleCover {
    let perm = hungarian(&tie_broken(|i, j| m.get(i, j), m.n()));
    CycleCover::from_perm(perm, m)
}

/// Exact maximum-weight cycle cover.
pub fn max_cycle_cover(m: &WeightMatrix) -> CycleCover {
    let perm = hungarian(&tie_broken(|i, j| -m.get(i, j), m.n()));
    CycleCover::from_perm(perm, m)
}

/// Statistics of one cycle of an overlap-graph cycle cover.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CycleStats {
    pub nodes: Vec<usize>,
    /// `M`: lightest edge weight.
    pub min_edge: i64,
    /// `O`: total edge weight.
    pub total: i64,
    /// `L`: sum of the members' period lengths.
    pub period_sum: i64,
    /// `ΔO = 3/2·L − O`.
    #[serde(serialize_with = "rational::serialize")]
    pub delta_o: Rational,
}

pub fn cycle_stats(cover: &CycleCover, m: &WeightMatrix, lengths: &[usize]) -> Result<Vec<CycleStats>, GraphError> {
    if m.n() != cover.perm.len() {
        return Err(GraphError::DimensionMismatch { expected: cover.perm.len(), got: m.n() });
    }
    if lengths.len() != cover.perm.len() {
        return Err(GraphError::DimensionMismatch { expected: cover.perm.len(), got: lengths.len() });
    }
    Ok(cover
        .cycles
        .iter()
        .map(|cycle| {
            let weights: Vec<i64> = cycle.iter().map(|&v| m.get(v, cover.perm[v])).collect();
            let total: i64 = weights.iter().sum();
            let period_sum: i64 = cycle.iter().map(|&v| lengths[v] as i64).sum();
            CycleStats {
                nodes: cycle.clone(),
                min_edge: weights.iter().copied().min().unwrap_or(0),
                total,
                period_sum,
                delta_o: rational::frac(3 * period_sum, 2) - rational::int(total),
            }
        })
        .collect())
}
