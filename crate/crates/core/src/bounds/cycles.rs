//! Inequalities over a cycle of `w`-strings.

use serde::Serialize;

use super::{BoundReport, BoundsError, WString};
use crate::graph::CycleStats;
use crate::rational::{frac, int, Rational};
use crate::words;

/// Nodes of a cycle in cyclic order; edge `i` runs from node `i` to node
/// `i + 1 (mod k)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CycleFixture {
    nodes: Vec<WString>,
}

impl CycleFixture {
    pub fn new(nodes: Vec<WString>) -> Result<Self, BoundsError> {
        if nodes.len() < 2 {
            return Err(BoundsError::TooShort);
        }
        if let Some(i) = nodes.iter().position(|x| x.nice.is_degenerate()) {
            return Err(BoundsError::Degenerate(i));
        }
        for i in 0..nodes.len() {
            for j in i + 1..nodes.len() {
                if words::rotations_equivalent(nodes[i].nice.word(), nodes[j].nice.word()) {
                    return Err(BoundsError::Equivalent(i, j));
                }
            }
        }
        Ok(CycleFixture { nodes })
    }

    pub fn nodes(&self) -> &[WString] {
        &self.nodes
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn periods(&self) -> Vec<i64> {
        self.nodes.iter().map(|x| x.period() as i64).collect()
    }

    /// `o(i, i+1)` for every edge.
    pub fn overlaps(&self) -> Vec<i64> {
        let k = self.nodes.len();
        (0..k).map(|i| words::overlap_len(&self.nodes[i].text, &self.nodes[(i + 1) % k].text) as i64).collect()
    }

    pub fn stats(&self) -> CycleStats {
        let overlaps = self.overlaps();
        let total: i64 = overlaps.iter().sum();
        let period_sum: i64 = self.periods().iter().sum();
        CycleStats {
            nodes: (0..self.len()).collect(),
            min_edge: overlaps.iter().copied().min().unwrap_or(0),
            total,
            period_sum,
            delta_o: frac(3 * period_sum, 2) - int(total),
        }
    }
}

fn stats_inputs(s: &CycleStats) -> String {
    format!("k={} M={} O={} L={}", s.nodes.len(), s.min_edge, s.total, s.period_sum)
}

/// The two cycle theorems evaluated from aggregate statistics.
pub fn check_cycle_stats(s: &CycleStats) -> Vec<BoundReport> {
    let inputs = stats_inputs(s);
    let (m, o, l) = (s.min_edge, s.total, s.period_sum);
    vec![
        BoundReport::inequality("cycle-main", inputs.clone(), int(2 * m + 7 * o), int(11 * l), false),
        BoundReport::inequality("cycle-weak", inputs, int(m + 24 * o), frac(145 * l, 4), false),
    ]
}

/// Every cycle inequality for `f`.
pub fn check_cycle_theorems(f: &CycleFixture) -> Vec<BoundReport> {
    let s = f.stats();
    let mut out = check_cycle_stats(&s);
    let inputs = stats_inputs(&s);
    let k = f.len() as i64;
    let (m, o, l) = (s.min_edge, s.total, s.period_sum);
    let delta_o = s.delta_o;
    let ls = f.periods();
    let os = f.overlaps();
    let n = ls.len();

    out.push(BoundReport::inequality(
        "cycle-main-margin",
        inputs.clone(),
        int(2 * m) - delta_o * int(7),
        frac(l, 2),
        false,
    ));
    let threshold = frac(6 - k, 2 * (7 * k + 2)) * int(l);
    out.push(BoundReport::conditional(
        "cycle-delta-sufficient",
        delta_o >= threshold,
        format!("{inputs} threshold={threshold}"),
        int(2 * m + 7 * o),
        int(11 * l),
        false,
    ));
    out.push(BoundReport::inequality("cycle-delta-floor", inputs.clone(), frac(l, 24 * k), delta_o, false));

    for i in 0..n {
        let j = (i + 1) % n;
        let delta = int(ls[i]) + frac(ls[j], 2) - int(os[i]);
        out.push(BoundReport::conditional(
            "up-edge-delta",
            ls[i] < ls[j],
            format!("edge={i} li={} lj={} oij={}", ls[i], ls[j], os[i]),
            int(ls[i]) - frac(ls[j], 2),
            delta,
            false,
        ));
    }

    let down = |i: usize| ls[i] >= ls[(i + 1) % n];
    let steep = |i: usize| down(i) && ls[i] >= 2 * ls[(i + 1) % n];
    let drop_sum: i64 = (0..n).filter(|&i| down(i)).map(|i| ls[i] - ls[(i + 1) % n]).sum();
    let any_steep = (0..n).any(steep);
    let consecutive_steep = (0..n).any(|i| steep(i) && steep((i + 1) % n));
    let drops = format!("{inputs} drops={drop_sum}");
    let lmin = *ls.iter().min().expect("non-empty");
    let lmax = *ls.iter().max().expect("non-empty");

    let scaled = |c: i64| -> Rational { frac(drop_sum, c) };
    out.push(BoundReport::inequality("down-edge-delta-12", drops.clone(), scaled(12), delta_o, false));
    out.push(BoundReport::inequality(
        "down-edge-delta-12",
        format!("{inputs} lmax={lmax} lmin={lmin}"),
        frac(lmax - lmin, 12),
        delta_o,
        false,
    ));
    out.push(BoundReport::conditional("down-edge-delta-8", !consecutive_steep, drops.clone(), scaled(8), delta_o, false));
    out.push(BoundReport::conditional("down-edge-delta-4", !any_steep, drops, scaled(4), delta_o, false));

    out.push(BoundReport::conditional(
        "flat-cycle-delta",
        2 * lmin > lmax,
        format!("{inputs} lmin={lmin} lmax={lmax}"),
        frac(lmin, 4),
        delta_o,
        false,
    ));
    out.push(BoundReport::conditional(
        "equal-periods",
        lmin == lmax,
        inputs.clone(),
        int(2 * m + 7 * o),
        int(11 * l),
        false,
    ));
    out.push(BoundReport::conditional("long-cycle", k >= 6, inputs, int(2 * m + 7 * o), int(11 * l), false));
    out
}
