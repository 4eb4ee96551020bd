use std::io::Write;
use std::path::Path;
use std::time::Instant;

use anyhow::anyhow;
use log::{info, warn};
use scs_core::atsp::{AtspError, CycleCoverPath, ExactPath, GreedyPath, MaxPathSolver, DEFAULT_EXACT_LIMIT};
use scs_core::graph::{self, GraphError, Instance};
use scs_core::superstring::{self, Solution, SuperstringError};
use scs_core::Text;

use crate::args::{AlgoArg, CompareArgs, PathSolverArg, SolveArgs, SolverOpts};
use crate::report::{InstanceSummary, ResultRow, RunReport};
use crate::{input, value_name, write_out, CmdResult, Failure};

enum Prepared {
    Many(Instance),
    /// Everything collapsed into one string.
    Single(Text),
}

impl Prepared {
    fn summary(&self) -> InstanceSummary {
        match self {
            Prepared::Many(inst) => InstanceSummary { n: inst.len(), total_length: inst.total_length() },
            Prepared::Single(s) => InstanceSummary { n: 1, total_length: s.len() },
        }
    }
}

fn prepare(path: &Path) -> Result<Prepared, Failure> {
    let raw = input::read_instance(path).map_err(Failure::input)?;
    match graph::normalize(&raw) {
        Ok(norm) => {
            if !norm.removed.is_empty() {
                info!("dropped {} duplicate or contained strings", norm.removed.len());
            }
            Ok(Prepared::Many(norm.instance))
        }
        Err(GraphError::Degenerate { survivors }) => {
            warn!("only one string remains after normalization");
            Ok(Prepared::Single(survivors.into_iter().next().expect("one survivor")))
        }
        Err(e) => Err(Failure::input(e)),
    }
}

fn path_solver(opts: &SolverOpts) -> Box<dyn MaxPathSolver> {
    match opts.path_solver {
        PathSolverArg::Exact => Box::new(ExactPath { limit: opts.exact_limit }),
        PathSolverArg::Half => Box::new(CycleCoverPath),
        PathSolverArg::Greedy => Box::new(GreedyPath),
    }
}

fn warn_limit(opts: &SolverOpts) {
    if opts.exact_limit > DEFAULT_EXACT_LIMIT {
        warn!(
            "exact limit {} above {}: the exact solvers need memory proportional to 2^n·n",
            opts.exact_limit, DEFAULT_EXACT_LIMIT
        );
    }
}

fn run_algo(inst: &Instance, algo: AlgoArg, opts: &SolverOpts) -> Result<Solution, Failure> {
    let solver = path_solver(opts);
    let result = match algo {
        AlgoArg::Combined => superstring::solve_combined(inst, solver.as_ref()),
        AlgoArg::S1 => superstring::solve_s1(inst, solver.as_ref()),
        AlgoArg::S2 => superstring::solve_s2(inst),
        AlgoArg::Greedy => Ok(superstring::greedy_superstring(inst)),
        AlgoArg::Exact => superstring::exact_superstring(inst, opts.exact_limit),
    };
    result.map_err(|e| match e {
        SuperstringError::Atsp(AtspError::ExactLimit { .. }) => Failure::new(Failure::LIMIT, e),
        other => Failure::validation(other),
    })
}

/// Runs `algo`, timing it and checking that every input string occurs in
/// the output.
fn timed(prepared: &Prepared, algo: AlgoArg, opts: &SolverOpts) -> Result<(ResultRow, Text), Failure> {
    let start = Instant::now();
    let (sol_algo, text, overlap, order) = match prepared {
        Prepared::Single(s) => (value_name(&algo), s.clone(), 0, vec![0]),
        Prepared::Many(inst) => {
            let sol = run_algo(inst, algo, opts)?;
            if !superstring::validate_superstring(inst, &sol.text) {
                return Err(Failure::validation(anyhow!("{} output misses an input string", sol.algorithm)));
            }
            if sol.length as i64 != inst.total_length() as i64 - sol.total_overlap || sol.length != sol.text.len() {
                return Err(Failure::validation(anyhow!("{} length bookkeeping is inconsistent", sol.algorithm)));
            }
            (sol.algorithm.to_string(), sol.text, sol.total_overlap, sol.order)
        }
    };
    let ms = (start.elapsed().as_secs_f64() * 1e6).round() / 1e3;
    Ok((ResultRow { algo: sol_algo, length: text.len(), overlap, order, ms, ratio: None }, text))
}

fn solver_echo(opts: &SolverOpts) -> String {
    format!("--path-solver {} --exact-limit {}", value_name(&opts.path_solver), opts.exact_limit)
}

pub fn solve(a: &SolveArgs, out: &mut dyn Write) -> CmdResult {
    warn_limit(&a.solver);
    let prepared = prepare(&a.input)?;
    let (row, text) = timed(&prepared, a.algo, &a.solver)?;
    let mut body = String::from_utf8_lossy(&text).into_owned();
    body.push('\n');
    body.push_str(&format!("# algo={} length={} overlap={} n={}\n", row.algo, row.length, row.overlap, prepared.summary().n));
    write_out(out, &body)?;

    if let Some(path) = &a.json {
        let command = format!("solve {} --algo {} {}", a.input.display(), value_name(&a.algo), solver_echo(&a.solver));
        let mut report = RunReport::new(command, None);
        report.instance = Some(prepared.summary());
        report.results.push(row);
        report.write(path).map_err(Failure::input)?;
    }
    Ok(())
}

pub fn compare(a: &CompareArgs, out: &mut dyn Write) -> CmdResult {
    warn_limit(&a.solver);
    let prepared = prepare(&a.input)?;
    let n = prepared.summary().n;
    let mut algos = vec![AlgoArg::Combined, AlgoArg::S1, AlgoArg::S2, AlgoArg::Greedy];
    if n <= a.solver.exact_limit {
        algos.push(AlgoArg::Exact);
    } else {
        warn!("skipping the exact solver: {n} strings exceed the limit {}", a.solver.exact_limit);
    }
    let mut rows = Vec::new();
    for algo in algos {
        rows.push(timed(&prepared, algo, &a.solver)?.0);
    }
    let best = rows
        .iter()
        .find(|r| r.algo == "exact")
        .map(|r| r.length)
        .unwrap_or_else(|| rows.iter().map(|r| r.length).min().expect("rows"));
    for r in rows.iter_mut() {
        r.ratio = Some(if best == 0 { 1.0 } else { ((r.length as f64 / best as f64) * 1e6).round() / 1e6 });
    }

    let mut table = format!("{:<10}{:>8}{:>9}{:>8}\n", "algo", "length", "overlap", "ratio");
    for r in &rows {
        table.push_str(&format!("{:<10}{:>8}{:>9}{:>8.3}\n", r.algo, r.length, r.overlap, r.ratio.unwrap_or(1.0)));
    }
    write_out(out, &table)?;

    if let Some(path) = &a.json {
        let command = format!("compare {} {}", a.input.display(), solver_echo(&a.solver));
        let mut report = RunReport::new(command, None);
        report.instance = Some(prepared.summary());
        report.results = rows;
        report.write(path).map_err(Failure::input)?;
    }
    Ok(())
}
