//! Acceptance suite. Run with
//! `cargo test -p scs-cli --test acceptance -- --nocapture`
//! to see one PASS/FAIL line per criterion.
//!
//! Every threshold below is pinned; do not relax them.

use std::path::Path;
use std::process::Command;
use std::time::{Duration, Instant};

use itertools::Itertools;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use scs_core::atsp::{self, ExactPath};
use scs_core::bounds::{self, CampaignConfig, CampaignSummary};
use scs_core::graph::{self, GraphError, Instance, MatrixKind, WeightMatrix};
use scs_core::superstring;
use scs_core::words::{self, RotationKind};
use serde_json::Value;

const FUZZ_SEED: u64 = 20_240_601;
const FUZZ_TRIALS: u64 = 10_000;
const END_TO_END_INSTANCES: u64 = 1_000;

struct Outcome {
    id: &'static str,
    title: &'static str,
    failures: Vec<String>,
    detail: String,
    elapsed: Duration,
    budget: Option<Duration>,
}

impl Outcome {
    fn passed(&self) -> bool {
        self.failures.is_empty() && self.budget.is_none_or(|b| self.elapsed < b)
    }

    fn line(&self) -> String {
        let verdict = if self.passed() { "PASS" } else { "FAIL" };
        let budget = match self.budget {
            Some(b) => format!(" (budget {:.0}s)", b.as_secs_f64()),
            None => String::new(),
        };
        let mut line = format!(
            "[{verdict}] {} {}: {} in {:.2}s{budget}",
            self.id,
            self.title,
            self.detail,
            self.elapsed.as_secs_f64()
        );
        for f in self.failures.iter().take(5) {
            line.push_str(&format!("\n       {f}"));
        }
        line
    }
}

fn measure(
    id: &'static str,
    title: &'static str,
    budget: Option<Duration>,
    body: impl FnOnce(&mut Vec<String>) -> String,
) -> Outcome {
    let start = Instant::now();
    let mut failures = Vec::new();
    let detail = body(&mut failures);
    Outcome { id, title, failures, detail, elapsed: start.elapsed(), budget }
}

fn secs(s: u64) -> Option<Duration> {
    Some(Duration::from_secs(s))
}

fn expect_eq(failures: &mut Vec<String>, what: String, got: i64, want: i64) {
    if got != want {
        failures.push(format!("{what}: got {got}, want {want}"));
    }
}

fn campaign_failures(s: &CampaignSummary, required: &[&str], failures: &mut Vec<String>) {
    for v in &s.violations {
        failures.push(format!(
            "trial {} {}: lhs={} rhs={} {} [{}]",
            v.trial, v.report.lemma_id, v.report.lhs, v.report.rhs, v.report.inputs, v.context
        ));
    }
    for id in required {
        if s.per_lemma.get(*id).is_none_or(|t| t.applicable == 0) {
            failures.push(format!("{id} was never applicable"));
        }
    }
}

fn ac1_tight_two_cycles() -> Outcome {
    measure("AC1", "tight 2-cycle exactness", secs(1), |failures| {
        for k in 1..=64usize {
            let f = bounds::gen_tight_2cycle(k).expect("k >= 1");
            let kk = k as i64;
            let o = f.overlaps();
            let s = f.stats();
            expect_eq(failures, format!("k={k} o12"), o[0], 4 * kk + 5);
            expect_eq(failures, format!("k={k} o21"), o[1], 3 * kk + 4);
            expect_eq(failures, format!("k={k} L"), s.period_sum, 5 * kk + 8);
            expect_eq(failures, format!("k={k} gap"), 11 * s.period_sum - (2 * s.min_edge + 7 * s.total), 17);
        }
        "k = 1..64, o12, o21, L and the gap of 17 exact".into()
    })
}

fn ac2_tight_three_cycles() -> Outcome {
    measure("AC2", "tight 3-cycle exactness", secs(1), |failures| {
        for n in 1..=64usize {
            let f = bounds::gen_tight_3cycle(n).expect("n >= 1");
            let nn = n as i64;
            let o = f.overlaps();
            let s = f.stats();
            expect_eq(failures, format!("n={n} o12"), o[0], 8 * nn + 12);
            expect_eq(failures, format!("n={n} o23"), o[1], 6 * nn + 8);
            expect_eq(failures, format!("n={n} o31"), o[2], 5 * nn + 7);
            expect_eq(failures, format!("n={n} gap"), 11 * s.period_sum - (2 * s.min_edge + 7 * s.total), 28);
        }
        "n = 1..64, o12, o23, o31 and the gap of 28 exact".into()
    })
}

fn ac3_greedy_path() -> Outcome {
    measure("AC3", "greedy path family", secs(1), |failures| {
        let g = bounds::gen_greedy_path(40).expect("n >= 3");
        let mut total = 0i64;
        // path runs x40 → x39 → … → x3; edge x_{i+1} → x_i
        for (step, e) in g.path.windows(2).enumerate() {
            let i = 39 - step as i64;
            let got = words::overlap_len(&g.strings[e[0]], &g.strings[e[1]]) as i64;
            expect_eq(failures, format!("o({},{})", i + 1, i), got, 3 * i / 2);
            total += got;
        }
        let period_sum: i64 = (3..=40).sum();
        expect_eq(failures, "period sum".into(), g.period_sum, period_sum);
        let ratio = total as f64 / period_sum as f64;
        if ratio <= 1.40 {
            failures.push(format!("overlap/period ratio {ratio:.4} <= 1.40"));
        }
        format!("38 edges exact, total {total} / Σl {period_sum} = {ratio:.4} > 1.40")
    })
}

fn ac4_main_theorem_fuzz() -> Outcome {
    measure("AC4", "main theorem fuzz over representatives", secs(60), |failures| {
        let s = bounds::instance_campaign(&CampaignConfig::new(FUZZ_TRIALS, FUZZ_SEED)).expect("campaign");
        campaign_failures(&s, &["cycle-main", "cycle-weak"], failures);
        if s.trials != FUZZ_TRIALS {
            failures.push(format!("only {} instances", s.trials));
        }
        let cycles = s.per_lemma.get("cycle-main").map_or(0, |t| t.applicable);
        format!("{} instances, {cycles} cycles, {} checks, {} violations", s.trials, s.run, s.failed)
    })
}

fn ac5_pair_lemma_fuzz() -> Outcome {
    const REQUIRED: [&str; 15] = [
        "overlap-period-alpha",
        "overlap-period-multiple",
        "rotation-positions-max",
        "rotation-positions-min",
        "alpha-bound",
        "alpha-bound-alternatives",
        "overlap-alpha-near",
        "overlap-alpha-double",
        "overlap-alpha-general",
        "delta-sum-near",
        "delta-sum-steep",
        "delta-sum-general",
        "short-alpha-multiples",
        "two-cycle-delta",
        "rotation-positions-long",
    ];
    measure("AC5", "pair bound fuzz", secs(60), |failures| {
        let s = bounds::pair_campaign(&CampaignConfig::new(FUZZ_TRIALS, FUZZ_SEED)).expect("campaign");
        campaign_failures(&s, &REQUIRED, failures);
        format!("{} pairs, {} applicable checks, {} violations", s.trials, s.run, s.failed)
    })
}

// brute-force oracles

fn all_binary(max_len: usize) -> Vec<Vec<u8>> {
    let mut out = Vec::new();
    for len in 1..=max_len {
        for bits in 0u32..(1 << len) {
            out.push((0..len).map(|i| if bits >> i & 1 == 1 { b'b' } else { b'a' }).collect());
        }
    }
    out
}

fn brute_rotation_index(w: &[u8], want_max: bool) -> usize {
    let rots: Vec<Vec<u8>> = (1..=w.len()).map(|s| words::rotation(w, s)).collect();
    let best = if want_max { rots.iter().max() } else { rots.iter().min() }.unwrap();
    rots.iter().position(|r| r == best).unwrap() + 1
}

fn brute_border(w: &[u8]) -> usize {
    (0..w.len()).rev().find(|&k| w[..k] == w[w.len() - k..]).unwrap_or(0)
}

fn brute_period(w: &[u8]) -> usize {
    (1..=w.len()).find(|&p| (p..w.len()).all(|i| w[i] == w[i - p])).unwrap()
}

fn brute_primitive(w: &[u8]) -> bool {
    let n = w.len();
    !(1..n).any(|d| n.is_multiple_of(d) && (0..n).all(|i| w[i] == w[i % d]))
}

fn brute_overlap(u: &[u8], v: &[u8]) -> usize {
    let cap = if u == v { u.len().saturating_sub(1) } else { u.len().min(v.len()) };
    (0..=cap).rev().find(|&k| u[u.len() - k..] == v[..k]).unwrap()
}

fn brute_nice(w: &[u8]) -> Vec<u8> {
    let n = w.len();
    let imin = brute_rotation_index(w, false) - 1;
    let imax = brute_rotation_index(w, true) - 1;
    let pmin = (imax + n - imin) % n;
    if n - pmin <= pmin {
        words::rotation(w, imax + 1)
    } else {
        words::rotation(w, imin + 1)
    }
}

fn check_word(w: &[u8], failures: &mut Vec<String>, mismatches: &mut u64) {
    let mut fail = |what: &str| {
        *mismatches += 1;
        failures.push(format!("{what} on {}", String::from_utf8_lossy(w)));
    };
    if words::minimal_rotation_index(w).unwrap() != brute_rotation_index(w, false) {
        fail("minimal rotation index");
    }
    if words::maximal_rotation_index(w).unwrap() != brute_rotation_index(w, true) {
        fail("maximal rotation index");
    }
    if words::longest_border(w).len() != brute_border(w) {
        fail("border");
    }
    let table = words::border_table(w);
    if (1..=w.len()).any(|i| table[i - 1] != brute_border(&w[..i])) {
        fail("border table");
    }
    if words::min_period(w) != brute_period(w) {
        fail("period");
    }
    let primitive = brute_primitive(w);
    if words::is_primitive(w).unwrap() != primitive {
        fail("primitivity");
    }
    if primitive && w.len() >= 2 {
        let nice = words::nice_rotation(w).unwrap();
        if nice.word() != brute_nice(w).as_slice() {
            fail("nice rotation");
        }
        let expected_kind = if brute_rotation_index(nice.word(), true) == 1 {
            RotationKind::MaxRotation
        } else {
            RotationKind::MinRotation
        };
        if nice.kind() != expected_kind && brute_rotation_index(nice.word(), false) != 1 {
            fail("nice rotation kind");
        }
    }
}

fn random_word(rng: &mut ChaCha8Rng, lens: std::ops::RangeInclusive<usize>) -> Vec<u8> {
    let alphabet = rng.gen_range(2..=4u8);
    let len = rng.gen_range(lens);
    (0..len).map(|_| b'a' + rng.gen_range(0..alphabet)).collect()
}

fn ac6_oracles() -> Outcome {
    measure("AC6", "oracle equivalence", secs(120), |failures| {
        let mut mismatches = 0u64;
        let mut overlap_pairs = 0u64;
        let binary = all_binary(12);
        for w in &binary {
            check_word(w, failures, &mut mismatches);
        }

        let mut overlap_failures = Vec::new();
        let mut check_overlap = |u: &[u8], v: &[u8], _: &mut Vec<String>| {
            overlap_pairs += 1;
            if words::overlap_len(u, v) != brute_overlap(u, v) {
                overlap_failures.push(format!("overlap {:?} {:?}", String::from_utf8_lossy(u), String::from_utf8_lossy(v)));
            }
        };
        let short: Vec<&Vec<u8>> = binary.iter().filter(|w| w.len() <= 8).collect();
        for u in &short {
            for v in &short {
                check_overlap(u, v, failures);
            }
        }
        let tiny: Vec<&Vec<u8>> = binary.iter().filter(|w| w.len() <= 4).collect();
        for u in binary.iter().filter(|w| w.len() > 8) {
            check_overlap(u, u, failures);
            for v in &tiny {
                check_overlap(u, v, failures);
                check_overlap(v, u, failures);
            }
        }

        let mut rng = ChaCha8Rng::seed_from_u64(FUZZ_SEED);
        for _ in 0..10_000 {
            let w = random_word(&mut rng, 13..=48);
            check_word(&w, failures, &mut mismatches);
            // a second string that often starts with a suffix of the first
            let cut = rng.gen_range(0..w.len());
            let mut v = w[cut..].to_vec();
            v.extend(random_word(&mut rng, 0..=20));
            check_overlap(&w, &v, failures);
            check_overlap(&v, &w, failures);
        }

        mismatches += overlap_failures.len() as u64;
        failures.append(&mut overlap_failures);
        let mut matrices = 0;
        for _ in 0..400 {
            let n = rng.gen_range(1..=8usize);
            let rows = (0..n).map(|_| (0..n).map(|_| rng.gen_range(0..12i64)).collect()).collect();
            let m = WeightMatrix::from_rows(MatrixKind::Overlap, rows).unwrap();
            let best = (0..n).permutations(n).map(|p| atsp::path_weight(&m, &p)).max().unwrap();
            let exact = atsp::exact_max_path(&m, 16).unwrap();
            if exact.weight != best || atsp::path_weight(&m, &exact.order) != best {
                mismatches += 1;
                failures.push(format!("held-karp weight {} vs enumeration {best} (n={n})", exact.weight));
            }
            matrices += 1;
        }
        format!(
            "{} exhaustive binary words, {overlap_pairs} overlap pairs, 10000 random words, {matrices} matrices; {mismatches} mismatches",
            binary.len()
        )
    })
}

fn random_instance(rng: &mut ChaCha8Rng) -> Instance {
    loop {
        let n = rng.gen_range(2..=10);
        let alphabet = rng.gen_range(2..=4u8);
        let raw: Vec<Vec<u8>> = (0..n)
            .map(|_| {
                let len = rng.gen_range(1..=12);
                (0..len).map(|_| b'a' + rng.gen_range(0..alphabet)).collect()
            })
            .collect();
        match graph::normalize(&raw) {
            Ok(norm) => return norm.instance,
            Err(GraphError::Degenerate { .. }) => continue,
            Err(e) => panic!("{e}"),
        }
    }
}

fn fuzz_instances() -> Vec<Instance> {
    let mut rng = ChaCha8Rng::seed_from_u64(FUZZ_SEED ^ 0xACE);
    (0..END_TO_END_INSTANCES).map(|_| random_instance(&mut rng)).collect()
}

fn ac7_end_to_end(instances: &[Instance]) -> Outcome {
    measure("AC7", "end-to-end length ratios", secs(120), |failures| {
        let mut worst_s1 = 0f64;
        let mut worst_greedy = 0f64;
        for (i, inst) in instances.iter().enumerate() {
            let opt = superstring::exact_superstring(inst, 16).unwrap().length;
            let s1 = superstring::solve_s1(inst, &ExactPath::default()).unwrap();
            let s2 = superstring::solve_s2(inst).unwrap();
            let s0 = superstring::solve_combined(inst, &ExactPath::default()).unwrap();
            let greedy = superstring::greedy_superstring(inst);
            for sol in [&s1, &s2, &s0, &greedy] {
                if !superstring::validate_superstring(inst, &sol.text) {
                    failures.push(format!("instance {i}: {} output misses a string", sol.algorithm));
                }
            }
            if s1.length > 2 * opt {
                failures.push(format!("instance {i}: |S1| = {} > 2·OPT = {}", s1.length, 2 * opt));
            }
            if s0.length > s1.length || s0.length > s2.length {
                failures.push(format!("instance {i}: |S0| = {} exceeds |S1| = {} or |S2| = {}", s0.length, s1.length, s2.length));
            }
            if 2 * greedy.length > 7 * opt {
                failures.push(format!("instance {i}: |greedy| = {} > 3.5·OPT = {}", greedy.length, 3.5 * opt as f64));
            }
            worst_s1 = worst_s1.max(s1.length as f64 / opt as f64);
            worst_greedy = worst_greedy.max(greedy.length as f64 / opt as f64);
        }
        format!(
            "{} instances, worst |S1|/OPT = {worst_s1:.3}, worst |greedy|/OPT = {worst_greedy:.3}",
            instances.len()
        )
    })
}

fn ac8_half_floor(instances: &[Instance]) -> Outcome {
    measure("AC8", "approximate path solvers reach half the optimum", None, |failures| {
        let mut matrices = 0;
        let mut worst = f64::INFINITY;
        for (i, inst) in instances.iter().enumerate() {
            let (overlap, _) = graph::build_matrices(inst);
            let reps = superstring::reduce(inst).unwrap().overlap_matrix();
            for (label, m) in [("overlap", overlap), ("representatives", reps)] {
                let best = atsp::exact_max_path(&m, 16).unwrap().weight;
                for sol in [atsp::cycle_cover_path(&m), atsp::greedy_max_path(&m)] {
                    if 2 * sol.weight < best {
                        failures.push(format!("instance {i} {label}: {:?} weight {} < {best}/2", sol.solver_tag, sol.weight));
                    }
                    if best > 0 {
                        worst = worst.min(sol.weight as f64 / best as f64);
                    }
                }
                matrices += 1;
            }
        }
        format!("{matrices} matrices, worst ratio {worst:.3} >= 0.5")
    })
}

// CLI determinism

fn scs(args: &[&str]) -> std::process::Output {
    Command::new(env!("CARGO_BIN_EXE_scs")).args(args).env("RUST_LOG", "off").output().expect("spawn scs")
}

fn normalized_json(path: &Path) -> Value {
    let mut v: Value = serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap();
    let obj = v.as_object_mut().unwrap();
    obj.remove("timestamp");
    if let Some(Value::Array(rows)) = obj.get_mut("results") {
        for row in rows {
            row.as_object_mut().unwrap().remove("ms");
        }
    }
    v
}

fn ac9_determinism() -> Outcome {
    measure("AC9", "CLI determinism", None, |failures| {
        let dir = tempfile::tempdir().unwrap();
        let p = |name: &str| dir.path().join(name).to_string_lossy().into_owned();
        let instance = p("random.txt");
        let again = p("random2.txt");
        let status = scs(&["gen", "--family", "random", "-n", "9", "--seed", "3", "-o", &instance]).status;
        let status2 = scs(&["gen", "--family", "random", "-n", "9", "--seed", "3", "-o", &again]).status;
        if !status.success() || !status2.success() {
            failures.push("gen failed".into());
            return "gen failed".into();
        }
        if std::fs::read(&instance).unwrap() != std::fs::read(&again).unwrap() {
            failures.push("gen --family random is not reproducible".into());
        }

        let runs: Vec<Vec<String>> = vec![
            vec!["solve".into(), instance.clone(), "--algo".into(), "combined".into()],
            vec!["solve".into(), instance.clone(), "--algo".into(), "s2".into()],
            vec!["compare".into(), instance.clone()],
            vec!["verify".into(), "--suite".into(), "all".into(), "--trials".into(), "300".into(), "--seed".into(), "11".into()],
            vec![
                "verify".into(),
                "--suite".into(),
                "pairs".into(),
                "--trials".into(),
                "200".into(),
                "--seed".into(),
                "5".into(),
                "--full".into(),
            ],
        ];
        for (i, args) in runs.iter().enumerate() {
            let mut outputs = Vec::new();
            for (rep, workers) in [(0, "1"), (1, "3")] {
                let json = p(&format!("run{i}-{rep}.json"));
                let mut full: Vec<&str> = args.iter().map(String::as_str).collect();
                full.extend(["--json", &json]);
                if args[0] == "verify" {
                    full.extend(["--workers", workers]);
                }
                let out = scs(&full);
                if !out.status.success() {
                    failures.push(format!("{args:?} exited with {:?}", out.status.code()));
                }
                outputs.push((normalized_json(Path::new(&json)), out.stdout));
            }
            if outputs[0] != outputs[1] {
                failures.push(format!("{args:?}: repeated runs differ"));
            }
        }
        format!("gen plus {} commands run twice, identical output apart from timestamp and ms", runs.len())
    })
}

#[test]
fn acceptance_criteria() {
    let instances = fuzz_instances();
    let outcomes = vec![
        ac1_tight_two_cycles(),
        ac2_tight_three_cycles(),
        ac3_greedy_path(),
        ac4_main_theorem_fuzz(),
        ac5_pair_lemma_fuzz(),
        ac6_oracles(),
        ac7_end_to_end(&instances),
        ac8_half_floor(&instances),
        ac9_determinism(),
    ];
    for o in &outcomes {
        println!("{}", o.line());
    }
    let failed: Vec<&str> = outcomes.iter().filter(|o| !o.passed()).map(|o| o.id).collect();
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
