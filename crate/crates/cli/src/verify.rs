use std::io::Write;

use scs_core::bounds::{self, CampaignConfig, CampaignSummary};

use crate::args::{Suite, VerifyArgs};
use crate::report::{RunReport, Verification};
use crate::{value_name, write_out, CmdResult, Failure};

fn suites(s: Suite) -> Vec<Suite> {
    match s {
        Suite::All => vec![Suite::Pairs, Suite::Cycles, Suite::Instances, Suite::Tight],
        one => vec![one],
    }
}

fn run_suite(s: Suite, a: &VerifyArgs) -> Result<CampaignSummary, Failure> {
    let cfg = CampaignConfig::new(a.trials, a.seed).workers(a.workers).keep_reports(a.full);
    let result = match s {
        Suite::Pairs => bounds::pair_campaign(&cfg),
        Suite::Cycles => bounds::cycle_campaign(&cfg),
        Suite::Instances => bounds::instance_campaign(&cfg),
        Suite::Tight => bounds::tight_campaign(a.max_param, a.full),
        Suite::All => unreachable!("expanded by suites()"),
    };
    result.map_err(Failure::validation)
}

pub fn verify(a: &VerifyArgs, out: &mut dyn Write) -> CmdResult {
    if a.max_param < 1 {
        return Err(Failure::input(anyhow::anyhow!("--max-param must be at least 1")));
    }
    let mut verification = Verification::default();
    let mut text = String::new();
    for s in suites(a.suite) {
        let summary = run_suite(s, a)?;
        text.push_str(&format!(
            "{:<10} trials={} run={} held={} failed={} not_applicable={}\n",
            summary.suite, summary.trials, summary.run, summary.held, summary.failed, summary.not_applicable
        ));
        for v in summary.violations.iter().take(20) {
            text.push_str(&format!(
                "  violation trial={} {}: {} vs {} [{}] {}\n",
                v.trial,
                v.report.lemma_id,
                scs_core::rational::render(&v.report.lhs),
                scs_core::rational::render(&v.report.rhs),
                v.report.inputs,
                v.context
            ));
        }
        verification.add(summary);
    }
    let failed = verification.failed;
    text.push_str(&format!("total run={} held={} failed={}\n", verification.run, verification.held, failed));
    write_out(out, &text)?;

    if let Some(path) = &a.json {
        let command = format!(
            "verify --suite {} --trials {} --seed {} --max-param {}{}",
            value_name(&a.suite),
            a.trials,
            a.seed,
            a.max_param,
            if a.full { " --full" } else { "" }
        );
        let mut report = RunReport::new(command, Some(a.seed));
        report.verification = Some(verification);
        report.write(path).map_err(Failure::input)?;
    }
    if failed > 0 {
        return Err(Failure::validation(anyhow::anyhow!("{failed} bound checks failed")));
    }
    Ok(())
}
