//! Executable overlap bounds for `w`-strings of nice words, the cycle
//! inequalities built on them, generators for the tight families, and
//! seeded fuzz campaigns.
//!
//! Every check produces a [`BoundReport`] holding the two sides of an
//! inequality as exact rationals. Checks whose preconditions are not met
//! are reported as not applicable and hold vacuously.
//!
//! Report identifiers:
//!
//! | id | statement |
//! |----|-----------|
//! | `overlap-period-alpha` | `o12 < l1 + α2` |
//! | `overlap-period-multiple` | `o12 < k·l2` for the least `k` with `l1 ≤ k·l2` |
//! | `rotation-positions-max` / `-min` / `-long` | admissible starts of the extremal rotations of `w12` |
//! | `alpha-bound` | `α1 ≤ l2 + (l1 + α2 − o12)` |
//! | `alpha-bound-alternatives` | `α1 ≤ l1 + l2 − o12`, or an extremal rotation of `w12` starts at the rightmost aligned position |
//! | `overlap-alpha-near` / `-double` / `-general` | `o12 + α1` against `l1 + l2`, `2l1 − l2`, `l1 + l2 + α2` |
//! | `delta-sum-near` / `-steep` / `-general` | `Δo12 + Δα1` against `(l1 − l2)/2`, `/4`, `/6` |
//! | `short-alpha-multiples` | `α1 ≤ |α2 − k·l1|` for every `k ≥ 1` |
//! | `two-cycle-delta` | `Δo12 + Δo21 ≥ l2/2` when `l1 ≥ 2l2` |
//! | `cycle-main` | `2M + 7O ≤ 11L` |
//! | `cycle-weak` | `M + 24O ≤ 36¼·L` |
//! | `cycle-main-margin` | `2M − 7ΔO ≤ L/2` |
//! | `cycle-delta-sufficient` | `ΔO ≥ (6−k)/(2(7k+2))·L` implies `cycle-main` |
//! | `up-edge-delta` | `Δoij ≥ li − lj/2` on up-edges |
//! | `down-edge-delta-12` / `-8` / `-4` | `ΔO` against the down-edge drops |
//! | `flat-cycle-delta` | `ΔO ≥ lmin/4` when `lmin > lmax/2` |
//! | `cycle-delta-floor` | `ΔO ≥ L/(24k)` |
//! | `equal-periods` | `cycle-main` when all periods are equal |
//! | `long-cycle` | `cycle-main` when `k ≥ 6` |

mod campaign;
mod cycles;
mod families;
mod pairs;

use serde::Serialize;
use thiserror::Error;

use crate::rational::{self, Rational};
use crate::words::{self, NiceWord, Text, WordError};

pub use campaign::{
    cycle_campaign, instance_campaign, pair_campaign, tight_campaign, trial_rng, CampaignConfig, CampaignSummary,
    LemmaTally, Violation,
};
pub use cycles::{check_cycle_stats, check_cycle_theorems, CycleFixture};
pub use families::{
    gen_greedy_path, gen_random_nice, gen_tight_2cycle, gen_tight_3cycle, sample_cycle_fixture,
    sample_nice, sample_pair, GreedyPathFamily,
};
pub use pairs::{check_pair_bounds, verify_rotation_positions};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BoundsError {
    #[error("words {0} and {1} are rotations of each other")]
    Equivalent(usize, usize),
    #[error("word {0} is degenerate")]
    Degenerate(usize),
    #[error("text is not a w-string of its word")]
    NotWString,
    #[error("a cycle needs at least two nodes")]
    TooShort,
    #[error("parameter must be at least {0}")]
    Parameter(usize),
    #[error("no primitive word after {0} draws")]
    Exhausted(usize),
    #[error("reduction failed: {0}")]
    Reduction(String),
    #[error(transparent)]
    Word(#[from] WordError),
}

/// A nice word together with one of its `w`-strings.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WString {
    pub nice: NiceWord,
    pub text: Text,
}

impl WString {
    pub fn new(nice: NiceWord, text: Text) -> Result<Self, BoundsError> {
        if !words::is_w_string(&text, &nice) {
            return Err(BoundsError::NotWString);
        }
        Ok(WString { nice, text })
    }

    pub fn with_len(nice: NiceWord, len: usize) -> Self {
        let text = nice.prefix(len);
        WString { nice, text }
    }

    pub fn period(&self) -> usize {
        self.nice.len()
    }

    pub fn alpha(&self) -> usize {
        self.nice.alpha()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundReport {
    pub lemma_id: String,
    pub inputs: String,
    #[serde(serialize_with = "rational::serialize")]
    pub lhs: Rational,
    #[serde(serialize_with = "rational::serialize")]
    pub rhs: Rational,
    pub strict: bool,
    pub holds: bool,
    pub applicable: bool,
}

impl BoundReport {
    /// `lhs < rhs` when `strict`, else `lhs ≤ rhs`.
    pub fn inequality(id: &str, inputs: String, lhs: Rational, rhs: Rational, strict: bool) -> Self {
        let holds = if strict { lhs < rhs } else { lhs <= rhs };
        BoundReport { lemma_id: id.to_owned(), inputs, lhs, rhs, strict, holds, applicable: true }
    }

    /// Inequality checked only when `premise` is met.
    pub fn conditional(
        id: &str,
        premise: bool,
        inputs: String,
        lhs: Rational,
        rhs: Rational,
        strict: bool,
    ) -> Self {
        if premise {
            Self::inequality(id, inputs, lhs, rhs, strict)
        } else {
            Self::not_applicable(id, inputs)
        }
    }

    /// A disjunction folded into `lhs ≤ 0` with `lhs = 0` when some
    /// alternative holds and `1` otherwise.
    pub fn disjunction(id: &str, inputs: String, satisfied: bool) -> Self {
        let lhs = rational::int(if satisfied { 0 } else { 1 });
        Self::inequality(id, inputs, lhs, rational::int(0), false)
    }

    /// Exact equality folded into `|computed − expected| ≤ 0`.
    pub fn equality(id: &str, computed: i64, expected: i64) -> Self {
        let inputs = format!("computed={computed} expected={expected}");
        Self::inequality(id, inputs, rational::int((computed - expected).abs()), rational::int(0), false)
    }

    pub fn not_applicable(id: &str, inputs: String) -> Self {
        BoundReport {
            lemma_id: id.to_owned(),
            inputs,
            lhs: rational::int(0),
            rhs: rational::int(0),
            strict: false,
            holds: true,
            applicable: false,
        }
    }

    pub fn is_violation(&self) -> bool {
        self.applicable && !self.holds
    }
}
