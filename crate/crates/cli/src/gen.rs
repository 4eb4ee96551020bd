use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use anyhow::Context;
use log::warn;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use scs_core::bounds::{self, CycleFixture};
use scs_core::Text;
use serde::Serialize;

use crate::args::{Family, GenArgs};
use crate::input::render_instance;
use crate::{value_name, write_out, CmdResult, Failure};

/// Predicted overlap of the edge `from → to` (line indices of the file).
#[derive(Debug, Serialize)]
struct Edge {
    from: usize,
    to: usize,
    overlap: i64,
}

#[derive(Debug, Serialize)]
struct Sidecar {
    family: String,
    parameter: usize,
    strings: Vec<String>,
    periods: Vec<i64>,
    edges: Vec<Edge>,
    /// `11L − (2M+7O)` for the cycle families.
    #[serde(skip_serializing_if = "Option::is_none")]
    gap: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    predicted_total: Option<i64>,
}

fn texts(f: &CycleFixture) -> Vec<Text> {
    f.nodes().iter().map(|x| x.text.clone()).collect()
}

fn shown(strings: &[Text]) -> Vec<String> {
    strings.iter().map(|s| String::from_utf8_lossy(s).into_owned()).collect()
}

fn cycle_edges(overlaps: &[i64]) -> Vec<Edge> {
    let k = overlaps.len();
    overlaps.iter().enumerate().map(|(i, &o)| Edge { from: i, to: (i + 1) % k, overlap: o }).collect()
}

fn build(a: &GenArgs) -> Result<(Vec<Text>, Option<Sidecar>), Failure> {
    let family = value_name(&a.family);
    match a.family {
        Family::Tight2 => {
            let f = bounds::gen_tight_2cycle(a.k).map_err(Failure::input)?;
            let k = a.k as i64;
            let strings = texts(&f);
            let side = Sidecar {
                family,
                parameter: a.k,
                strings: shown(&strings),
                periods: vec![3 * k + 5, 2 * k + 3],
                edges: cycle_edges(&[4 * k + 5, 3 * k + 4]),
                gap: Some(17),
                predicted_total: None,
            };
            Ok((strings, Some(side)))
        }
        Family::Tight3 => {
            let f = bounds::gen_tight_3cycle(a.k).map_err(Failure::input)?;
            let n = a.k as i64;
            let strings = texts(&f);
            let side = Sidecar {
                family,
                parameter: a.k,
                strings: shown(&strings),
                periods: vec![6 * n + 10, 5 * n + 8, 2 * n + 3],
                edges: cycle_edges(&[8 * n + 12, 6 * n + 8, 5 * n + 7]),
                gap: Some(28),
                predicted_total: None,
            };
            Ok((strings, Some(side)))
        }
        Family::Greedy => {
            let g = bounds::gen_greedy_path(a.n).map_err(Failure::input)?;
            let edges = g
                .path
                .windows(2)
                .zip(&g.expected_overlaps)
                .map(|(e, &o)| Edge { from: e[0], to: e[1], overlap: o })
                .collect();
            let side = Sidecar {
                family,
                parameter: a.n,
                strings: shown(&g.strings),
                periods: (3..=a.n as i64).collect(),
                edges,
                gap: None,
                predicted_total: Some(g.predicted_total),
            };
            Ok((g.strings, Some(side)))
        }
        Family::Random => {
            if !(2..=26).contains(&a.alphabet) || a.max_len < 1 || a.n < 1 {
                return Err(Failure::input(anyhow::anyhow!(
                    "random family needs -n ≥ 1, --max-len ≥ 1 and an alphabet of 2 to 26 letters"
                )));
            }
            let mut rng = ChaCha8Rng::seed_from_u64(a.seed);
            let strings = (0..a.n)
                .map(|_| {
                    let len = rng.gen_range(1..=a.max_len);
                    (0..len).map(|_| b'a' + rng.gen_range(0..a.alphabet)).collect()
                })
                .collect();
            Ok((strings, None))
        }
    }
}

pub fn sidecar_path(out: &Path) -> PathBuf {
    let mut name = out.as_os_str().to_owned();
    name.push(".expected.json");
    PathBuf::from(name)
}

pub fn generate(a: &GenArgs, out: &mut dyn Write) -> CmdResult {
    let (strings, sidecar) = build(a)?;
    let body = render_instance(&strings);
    let Some(path) = &a.out else {
        if sidecar.is_some() {
            warn!("no output file given, the expected-values sidecar is not written");
        }
        return write_out(out, &body);
    };
    fs::write(path, body).with_context(|| format!("writing {}", path.display())).map_err(Failure::input)?;
    if let Some(side) = sidecar {
        let side_path = sidecar_path(path);
        let json = serde_json::to_string_pretty(&side).map_err(Failure::input)? + "\n";
        fs::write(&side_path, json).with_context(|| format!("writing {}", side_path.display())).map_err(Failure::input)?;
    }
    Ok(())
}
