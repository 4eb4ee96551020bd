//! The superstring pipeline: merge-by-order, cycle strings, representatives,
//! the two reductions to Max-ATSP-Path and their combination, plus the
//! classic greedy merge and an exact solver for small inputs.

use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::atsp::{self, AtspError, CycleCoverPath, MaxPathSolver};
use crate::graph::{self, CycleCover, Instance, WeightMatrix};
use crate::words::{self, NiceWord, Text, WordError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SuperstringError {
    #[error("order is not a permutation of 0..{0}")]
    InvalidOrder(usize),
    #[error(transparent)]
    Atsp(#[from] AtspError),
    #[error("cycle string: {0}")]
    Word(#[from] WordError),
    #[error("cycle member {0} does not occur in the representative period")]
    MissingMember(usize),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Algorithm {
    Combined,
    S1,
    S2,
    Greedy,
    Exact,
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Algorithm::Combined => "combined",
            Algorithm::S1 => "s1",
            Algorithm::S2 => "s2",
            Algorithm::Greedy => "greedy",
            Algorithm::Exact => "exact",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Solution {
    /// Instance indices in the order the solution places them.
    pub order: Vec<usize>,
    #[serde(skip)]
    pub text: Text,
    pub length: usize,
    /// `Σ|s_i| − length`. Negative when representatives carry more than the
    /// members' own symbols (e.g. a lone periodic string).
    pub total_overlap: i64,
    pub algorithm: Algorithm,
}

impl Solution {
    fn new(inst: &Instance, order: Vec<usize>, text: Text, algorithm: Algorithm) -> Self {
        let length = text.len();
        Solution {
            order,
            total_overlap: inst.total_length() as i64 - length as i64,
            text,
            length,
            algorithm,
        }
    }
}

/// `pref(t₁,t₂)·pref(t₂,t₃)···t_last` and its total overlap.
pub fn merge_texts(texts: &[Text], order: &[usize]) -> Result<(Text, i64), SuperstringError> {
    let mut seen = vec![false; texts.len()];
    if order.len() != texts.len() || order.iter().any(|&i| i >= texts.len() || std::mem::replace(&mut seen[i], true)) {
        return Err(SuperstringError::InvalidOrder(texts.len()));
    }
    let mut out = Text::new();
    let mut overlap = 0i64;
    for pair in order.windows(2) {
        let (u, v) = (&texts[pair[0]], &texts[pair[1]]);
        let pref = words::prefix_part(u, v);
        overlap += (u.len() - pref.len()) as i64;
        out.extend_from_slice(pref);
    }
    if let Some(&last) = order.last() {
        out.extend_from_slice(&texts[last]);
    }
    Ok((out, overlap))
}

pub fn merge_order(inst: &Instance, order: &[usize]) -> Result<Solution, SuperstringError> {
    let (text, overlap) = merge_texts(inst.strings(), order)?;
    let mut sol = Solution::new(inst, order.to_vec(), text, Algorithm::Exact);
    sol.total_overlap = overlap;
    Ok(sol)
}

/// `s(C)`: the prefixes read along the cycle.
pub fn cycle_string(strings: &[Text], cycle: &[usize]) -> Text {
    let k = cycle.len();
    let mut out = Text::new();
    for t in 0..k {
        let (u, v) = (&strings[cycle[t]], &strings[cycle[(t + 1) % k]]);
        out.extend_from_slice(words::prefix_part(u, v));
    }
    out
}

/// A cycle replaced by one `w(C)`-string that contains all its members.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Representative {
    pub text: Text,
    /// `w(C)`, the nice rotation of `s(C)`.
    pub nice: NiceWord,
    /// `|w(C)|`, the cycle's weight in the prefix graph.
    pub l: usize,
    pub members: Vec<usize>,
}

/// Shortest prefix of `w(C)^∞` containing every member of the cycle.
pub fn representative(strings: &[Text], cycle: &[usize]) -> Result<Representative, SuperstringError> {
    let s = cycle_string(strings, cycle);
    let nice = words::nice_rotation(&s)?;
    let l = nice.len();
    let mut needed = 0;
    for &m in cycle {
        let member = &strings[m];
        // every member sits in w^∞ at an offset below l
        let window = nice.prefix(l - 1 + member.len());
        let at = words::find(&window, member).ok_or(SuperstringError::MissingMember(m))?;
        needed = needed.max(at + member.len());
    }
    Ok(Representative { text: nice.prefix(needed), nice, l, members: cycle.to_vec() })
}

/// Minimum cycle cover of the prefix graph and its representatives.
#[derive(Debug, Clone)]
pub struct Reduction {
    pub cover: CycleCover,
    pub representatives: Vec<Representative>,
}

impl Reduction {
    pub fn texts(&self) -> Vec<Text> {
        self.representatives.iter().map(|r| r.text.clone()).collect()
    }

    pub fn periods(&self) -> Vec<usize> {
        self.representatives.iter().map(|r| r.l).collect()
    }

    /// Overlap graph of the representatives with self-loops weighted zero.
    pub fn overlap_matrix(&self) -> WeightMatrix {
        WeightMatrix::overlap_of(&self.texts()).without_self_loops()
    }
}

pub fn reduce(inst: &Instance) -> Result<Reduction, SuperstringError> {
    let (_, prefix) = graph::build_matrices(inst);
    let cover = graph::min_cycle_cover(&prefix);
    let representatives = cover
        .cycles
        .iter()
        .map(|c| representative(inst.strings(), c))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Reduction { cover, representatives })
}

fn solve_reduced(
    inst: &Instance,
    solver: &dyn MaxPathSolver,
    algorithm: Algorithm,
) -> Result<Solution, SuperstringError> {
    let reduction = reduce(inst)?;
    let reps = &reduction.representatives;
    let path = if reps.len() == 1 {
        vec![0]
    } else {
        solver.solve(&reduction.overlap_matrix())?.order
    };
    let (text, _) = merge_texts(&reduction.texts(), &path)?;
    let order = path.iter().flat_map(|&r| reps[r].members.iter().copied()).collect();
    Ok(Solution::new(inst, order, text, algorithm))
}

/// Path solver over the representatives' overlap graph.
pub fn solve_s1(inst: &Instance, solver: &dyn MaxPathSolver) -> Result<Solution, SuperstringError> {
    solve_reduced(inst, solver, Algorithm::S1)
}

/// Maximum cycle cover over the representatives, lightest edge dropped per
/// cycle.
pub fn solve_s2(inst: &Instance) -> Result<Solution, SuperstringError> {
    solve_reduced(inst, &CycleCoverPath, Algorithm::S2)
}

/// The shorter of [`solve_s1`] and [`solve_s2`]; ties go to the former.
pub fn solve_combined(inst: &Instance, solver: &dyn MaxPathSolver) -> Result<Solution, SuperstringError> {
    let s1 = solve_s1(inst, solver)?;
    let s2 = solve_s2(inst)?;
    let mut best = if s2.length < s1.length { s2 } else { s1 };
    best.algorithm = Algorithm::Combined;
    Ok(best)
}

/// Merge the pair with the largest overlap until one string is left.
/// Strings swallowed by a merge are dropped.
pub fn greedy_superstring(inst: &Instance) -> Solution {
    let mut live: Vec<Option<(Text, Vec<usize>)>> =
        inst.strings().iter().enumerate().map(|(i, s)| Some((s.clone(), vec![i]))).collect();
    loop {
        let alive: Vec<usize> = (0..live.len()).filter(|&i| live[i].is_some()).collect();
        if alive.len() <= 1 {
            break;
        }
        let mut pick = (0usize, alive[0], alive[1]);
        let mut found = false;
        for &i in &alive {
            for &j in &alive {
                if i == j {
                    continue;
                }
                let (a, b) = (&live[i].as_ref().unwrap().0, &live[j].as_ref().unwrap().0);
                let o = words::overlap_len(a, b);
                if !found || o > pick.0 {
                    pick = (o, i, j);
                    found = true;
                }
            }
        }
        let (o, i, j) = pick;
        let (a, mut ma) = live[i].take().unwrap();
        let (b, mb) = live[j].take().unwrap();
        let mut merged = a;
        merged.extend_from_slice(&b[o..]);
        ma.extend(mb);
        for slot in live.iter_mut() {
            if let Some((s, members)) = slot.as_ref() {
                if words::contains(&merged, s) {
                    ma.extend(members.iter().copied());
                    *slot = None;
                }
            }
        }
        live[i.min(j)] = Some((merged, ma));
    }
    let (text, order) = live.into_iter().flatten().next().unwrap_or_default();
    Solution::new(inst, order, text, Algorithm::Greedy)
}

/// Optimal superstring via an exact maximum path in the overlap graph.
pub fn exact_superstring(inst: &Instance, limit: usize) -> Result<Solution, SuperstringError> {
    let (overlap, _) = graph::build_matrices(inst);
    let path = atsp::exact_max_path(&overlap, limit)?;
    let mut sol = merge_order(inst, &path.order)?;
    sol.algorithm = Algorithm::Exact;
    Ok(sol)
}

pub fn validate_superstring(inst: &Instance, text: &[u8]) -> bool {
    inst.strings().iter().all(|s| words::contains(text, s))
}
