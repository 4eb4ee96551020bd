//! Seeded fuzz campaigns over the bound checks.
//!
//! Trial `t` draws from its own generator seeded by `(seed, t)`, so results
//! do not depend on the number of workers. Reports are merged in trial
//! order.

use std::collections::BTreeMap;
use std::thread;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::{
    check_cycle_stats, check_cycle_theorems, check_pair_bounds, gen_greedy_path, gen_tight_2cycle,
    gen_tight_3cycle, sample_cycle_fixture, sample_pair, BoundReport, BoundsError, CycleFixture, WString,
};
use crate::graph::{self, GraphError};
use crate::rational::frac;
use crate::superstring;
use crate::words::{self, Text};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub trial: u64,
    pub context: String,
    pub report: BoundReport,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct LemmaTally {
    pub applicable: u64,
    pub failed: u64,
}

/// Shared knobs of the random campaigns.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CampaignConfig {
    pub trials: u64,
    pub seed: u64,
    pub workers: usize,
    /// Keep every report, not only the violations.
    pub keep_reports: bool,
}

impl CampaignConfig {
    pub fn new(trials: u64, seed: u64) -> Self {
        CampaignConfig { trials, seed, workers: 1, keep_reports: false }
    }

    pub fn workers(mut self, workers: usize) -> Self {
        self.workers = workers;
        self
    }

    pub fn keep_reports(mut self, keep: bool) -> Self {
        self.keep_reports = keep;
        self
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct CampaignSummary {
    pub suite: String,
    pub trials: u64,
    /// Applicable checks evaluated.
    pub run: u64,
    pub held: u64,
    pub failed: u64,
    pub not_applicable: u64,
    pub per_lemma: BTreeMap<String, LemmaTally>,
    pub violations: Vec<Violation>,
    /// Every report, when requested.
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub reports: Vec<Violation>,
}

impl CampaignSummary {
    fn new(suite: &str) -> Self {
        CampaignSummary { suite: suite.to_owned(), ..Default::default() }
    }

    fn absorb(&mut self, trial: u64, context: &str, reports: Vec<BoundReport>, keep: bool) {
        self.trials += 1;
        for r in reports {
            if keep {
                self.reports.push(Violation { trial, context: context.to_owned(), report: r.clone() });
            }
            let tally = self.per_lemma.entry(r.lemma_id.clone()).or_default();
            if !r.applicable {
                self.not_applicable += 1;
                continue;
            }
            self.run += 1;
            tally.applicable += 1;
            if r.holds {
                self.held += 1;
            } else {
                self.failed += 1;
                tally.failed += 1;
                self.violations.push(Violation { trial, context: context.to_owned(), report: r });
            }
        }
    }

    /// Adds another summary's counts; trials are renumbered after ours.
    pub fn merge(&mut self, other: CampaignSummary) {
        self.trials += other.trials;
        self.run += other.run;
        self.held += other.held;
        self.failed += other.failed;
        self.not_applicable += other.not_applicable;
        for (id, t) in other.per_lemma {
            let e = self.per_lemma.entry(id).or_default();
            e.applicable += t.applicable;
            e.failed += t.failed;
        }
        self.violations.extend(other.violations);
        self.reports.extend(other.reports);
    }

    pub fn is_clean(&self) -> bool {
        self.failed == 0
    }
}

pub fn trial_rng(seed: u64, trial: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed ^ trial.wrapping_mul(0x9E37_79B9_7F4A_7C15))
}

type TrialOutcome = Result<(String, Vec<BoundReport>), BoundsError>;

fn run_trials<F>(suite: &str, cfg: &CampaignConfig, f: F) -> Result<CampaignSummary, BoundsError>
where
    F: Fn(u64) -> TrialOutcome + Sync,
{
    let trials = cfg.trials;
    let workers = cfg.workers.max(1) as u64;
    let chunk = trials.div_ceil(workers).max(1);
    let outcomes: Vec<Vec<TrialOutcome>> = thread::scope(|scope| {
        let handles: Vec<_> = (0..workers)
            .map(|w| {
                let f = &f;
                let range = (w * chunk).min(trials)..((w + 1) * chunk).min(trials);
                scope.spawn(move || range.map(f).collect::<Vec<_>>())
            })
            .collect();
        handles.into_iter().map(|h| h.join().expect("worker panicked")).collect()
    });
    let mut summary = CampaignSummary::new(suite);
    for (trial, outcome) in outcomes.into_iter().flatten().enumerate() {
        let (context, reports) = outcome?;
        summary.absorb(trial as u64, &context, reports, cfg.keep_reports);
    }
    Ok(summary)
}

fn show(t: &[u8]) -> String {
    String::from_utf8_lossy(t).into_owned()
}

fn describe(nodes: &[WString]) -> String {
    nodes.iter().map(|x| format!("{}/{}", show(x.nice.word()), show(&x.text))).collect::<Vec<_>>().join(" ")
}

/// Random non-equivalent pairs; every pair bound in both directions.
pub fn pair_campaign(cfg: &CampaignConfig) -> Result<CampaignSummary, BoundsError> {
    run_trials("pairs", cfg, |t| {
        let mut rng = trial_rng(cfg.seed, t);
        let alphabet = rng.gen_range(2..=3);
        let (x1, x2) = sample_pair(&mut rng, 12, alphabet)?;
        let reports = check_pair_bounds(&x1, &x2)?;
        Ok((describe(&[x1, x2]), reports))
    })
}

/// Random cycles of length 2 to 6.
pub fn cycle_campaign(cfg: &CampaignConfig) -> Result<CampaignSummary, BoundsError> {
    run_trials("cycles", cfg, |t| {
        let mut rng = trial_rng(cfg.seed, t);
        let k = rng.gen_range(2..=6);
        let alphabet = rng.gen_range(2..=3);
        let f = sample_cycle_fixture(&mut rng, k, 10, alphabet)?;
        Ok((describe(f.nodes()), check_cycle_theorems(&f)))
    })
}

fn random_instance(rng: &mut ChaCha8Rng) -> graph::Instance {
    loop {
        let n = rng.gen_range(2..=8);
        let alphabet = rng.gen_range(2..=3u8);
        let raw: Vec<Text> = (0..n)
            .map(|_| {
                let len = rng.gen_range(1..=12);
                (0..len).map(|_| b'a' + rng.gen_range(0..alphabet)).collect()
            })
            .collect();
        match graph::normalize(&raw) {
            Ok(norm) => return norm.instance,
            Err(GraphError::Degenerate { .. }) => continue,
            Err(e) => unreachable!("random strings are non-empty: {e}"),
        }
    }
}

/// Checks performed on one instance's reduction: every representative
/// period is primitive and pairwise non-equivalent, and every cycle of the
/// maximum cover of the representatives' overlap graph obeys the cycle
/// theorems.
fn instance_reports(inst: &graph::Instance) -> Result<Vec<BoundReport>, BoundsError> {
    let reduction = superstring::reduce(inst).map_err(|e| BoundsError::Reduction(e.to_string()))?;
    let reps = &reduction.representatives;
    let mut out = Vec::new();

    let distinct = reps.iter().enumerate().all(|(i, a)| {
        reps[i + 1..].iter().all(|b| !words::rotations_equivalent(a.nice.word(), b.nice.word()))
    });
    out.push(BoundReport::disjunction("representatives-distinct", format!("r={}", reps.len()), distinct));

    let m = reduction.overlap_matrix();
    let cover = graph::max_cycle_cover(&m);
    let stats = graph::cycle_stats(&cover, &m, &reduction.periods()).expect("matching dimensions");
    for s in &stats {
        out.extend(check_cycle_stats(s));
        if s.nodes.len() < 2 || s.nodes.iter().any(|&v| reps[v].nice.is_degenerate()) {
            continue;
        }
        let nodes = s.nodes.iter().map(|&v| WString::new(reps[v].nice.clone(), reps[v].text.clone())).collect::<Result<Vec<_>, _>>()?;
        match CycleFixture::new(nodes) {
            Ok(f) => out.extend(check_cycle_theorems(&f)),
            Err(e) => out.push(BoundReport::disjunction("representatives-distinct", e.to_string(), false)),
        }
    }
    Ok(out)
}

/// Random instances: the reduction's representatives and the cycles of the
/// maximum cycle cover over them.
pub fn instance_campaign(cfg: &CampaignConfig) -> Result<CampaignSummary, BoundsError> {
    run_trials("instances", cfg, |t| {
        let mut rng = trial_rng(cfg.seed, t);
        let inst = random_instance(&mut rng);
        let context = inst.strings().iter().map(|s| show(s)).collect::<Vec<_>>().join(",");
        Ok((context, instance_reports(&inst)?))
    })
}

fn fixture_reports(f: &CycleFixture, lengths: &[i64], overlaps: &[i64], gap: i64) -> Result<Vec<BoundReport>, BoundsError> {
    let mut out = Vec::new();
    for (got, want) in f.periods().iter().zip(lengths) {
        out.push(BoundReport::equality("closed-form-period", *got, *want));
    }
    for (got, want) in f.overlaps().iter().zip(overlaps) {
        out.push(BoundReport::equality("closed-form-overlap", *got, *want));
    }
    let s = f.stats();
    out.push(BoundReport::equality("closed-form-gap", 11 * s.period_sum - 2 * s.min_edge - 7 * s.total, gap));
    out.extend(check_cycle_theorems(f));
    let nodes = f.nodes();
    for i in 0..nodes.len() {
        for j in i + 1..nodes.len() {
            out.extend(check_pair_bounds(&nodes[i], &nodes[j])?);
        }
    }
    Ok(out)
}

/// Closed forms of the tight families for every parameter in
/// `1..=max_param`, the limit ratio of the 2-cycle family and the greedy
/// path family at `n = 40`.
pub fn tight_campaign(max_param: usize, keep_reports: bool) -> Result<CampaignSummary, BoundsError> {
    let mut summary = CampaignSummary::new("tight");
    let mut trial = 0u64;
    for k in 1..=max_param {
        let f = gen_tight_2cycle(k)?;
        let k = k as i64;
        let reports = fixture_reports(&f, &[3 * k + 5, 2 * k + 3], &[4 * k + 5, 3 * k + 4], 17)?;
        summary.absorb(trial, &format!("tight2 k={k}"), reports, keep_reports);
        trial += 1;
    }
    for n in 1..=max_param {
        let f = gen_tight_3cycle(n)?;
        let n = n as i64;
        let reports = fixture_reports(&f, &[6 * n + 10, 5 * n + 8, 2 * n + 3], &[8 * n + 12, 6 * n + 8, 5 * n + 7], 28)?;
        summary.absorb(trial, &format!("tight3 n={n}"), reports, keep_reports);
        trial += 1;
    }

    let f = gen_tight_2cycle(max_param)?;
    let s = f.stats();
    let ratio = frac(2 * s.min_edge + 7 * s.total, 11 * s.period_sum);
    let limit = BoundReport::inequality("tight2-ratio", format!("k={max_param}"), frac(995, 1000), ratio, true);
    let applies = max_param >= 64;
    let limit = if applies { limit } else { BoundReport::not_applicable("tight2-ratio", format!("k={max_param}")) };
    summary.absorb(trial, "tight2 ratio", vec![limit], keep_reports);
    trial += 1;

    let g = gen_greedy_path(40)?;
    let mut reports = Vec::new();
    let mut total = 0;
    for (e, want) in g.path.windows(2).zip(&g.expected_overlaps) {
        let got = words::overlap_len(&g.strings[e[0]], &g.strings[e[1]]) as i64;
        total += got;
        reports.push(BoundReport::equality("greedy-path-overlap", got, *want));
    }
    reports.push(BoundReport::equality("greedy-path-total", total, g.predicted_total));
    reports.push(BoundReport::inequality(
        "greedy-path-ratio",
        format!("O={total} L={}", g.period_sum),
        frac(7, 5),
        frac(total, g.period_sum),
        true,
    ));
    summary.absorb(trial, "greedy n=40", reports, keep_reports);
    Ok(summary)
}
