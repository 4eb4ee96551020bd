//! Generators: the tight cycle families, the greedy path family and
//! random nice words.

use std::ops::RangeInclusive;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::{BoundsError, CycleFixture, WString};
use crate::words::{self, NiceWord, Text};

const MAX_REJECTIONS: usize = 1000;

fn run(symbol: u8, count: usize) -> Text {
    vec![symbol; count]
}

fn concat(parts: &[Text]) -> Text {
    parts.concat()
}

fn node(word: Text, len: impl FnOnce(&NiceWord) -> usize) -> Result<WString, BoundsError> {
    let nice = NiceWord::from_nice(&word)?;
    let n = len(&nice);
    Ok(WString::with_len(nice, n))
}

/// The 2-cycle with `l1 = 3k+5`, `l2 = 2k+3` and `11L − (2M+7O) = 17`.
pub fn gen_tight_2cycle(k: usize) -> Result<CycleFixture, BoundsError> {
    if k < 1 {
        return Err(BoundsError::Parameter(1));
    }
    let (a, b) = (b'a', b'b');
    let w1 = concat(&[vec![b], run(a, k), vec![b], run(a, k + 1), vec![b], run(a, k + 1)]);
    let w2 = concat(&[run(a, k + 1), vec![b], run(a, k), vec![b]]);
    CycleFixture::new(vec![node(w1, |w| 2 * w.len() - 1)?, node(w2, |w| 2 * w.len() - 1)?])
}

/// The 3-cycle with periods `6n+10`, `5n+8`, `2n+3` and
/// `11L − (2M+7O) = 28`.
pub fn gen_tight_3cycle(n: usize) -> Result<CycleFixture, BoundsError> {
    if n < 1 {
        return Err(BoundsError::Parameter(1));
    }
    let (a, b) = (b'a', b'b');
    let an = || run(a, n);
    let an1 = || run(a, n + 1);
    let w1 = concat(&[
        vec![b], an(), vec![b], an1(), vec![b], an(), vec![b],
        an1(), vec![b], an1(), vec![b], an1(),
    ]);
    let w2 = concat(&[an1(), vec![b], an1(), vec![b], an(), vec![b], an1(), vec![b], an(), vec![b]]);
    let w3 = concat(&[an1(), vec![b], an(), vec![b]]);
    CycleFixture::new(vec![
        node(w1, |w| 2 * w.len() - 1)?,
        node(w2, |w| 2 * w.len() + w.alpha() - 1)?,
        node(w3, |w| 4 * w.len() - 1)?,
    ])
}

/// `{x3, …, xn}` whose path `xn → … → x3` has overlaps `⌊3i/2⌋`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GreedyPathFamily {
    /// `strings[i]` is `x_{i+3}`.
    pub strings: Vec<Text>,
    pub words: Vec<NiceWord>,
    /// Indices into `strings`, from `xn` down to `x3`.
    pub path: Vec<usize>,
    /// Predicted overlap of each path edge, in path order.
    pub expected_overlaps: Vec<i64>,
    pub predicted_total: i64,
    pub period_sum: i64,
}

fn greedy_member(i: usize) -> (Text, Text) {
    let (a, b) = (b'a', b'b');
    let k = i.div_ceil(2);
    if i.is_multiple_of(2) {
        let w = concat(&[run(b, k), run(a, k)]);
        let x = concat(&[run(b, k), run(a, k), run(b, k), run(a, k - 1)]);
        (w, x)
    } else {
        let w = concat(&[run(a, k - 1), run(b, k)]);
        let x = concat(&[run(a, k - 1), run(b, k), run(a, k - 1), run(b, k - 1)]);
        (w, x)
    }
}

pub fn gen_greedy_path(n: usize) -> Result<GreedyPathFamily, BoundsError> {
    if n < 3 {
        return Err(BoundsError::Parameter(3));
    }
    let mut strings = Vec::new();
    let mut nice_words = Vec::new();
    for i in 3..=n {
        let (w, x) = greedy_member(i);
        nice_words.push(NiceWord::from_nice(&w)?);
        strings.push(x);
    }
    let path: Vec<usize> = (0..strings.len()).rev().collect();
    let expected_overlaps: Vec<i64> = (3..n).rev().map(|i| (3 * i / 2) as i64).collect();
    Ok(GreedyPathFamily {
        predicted_total: expected_overlaps.iter().sum(),
        period_sum: (3..=n).map(|i| i as i64).sum(),
        strings,
        words: nice_words,
        path,
        expected_overlaps,
    })
}

fn check_sampling(lens: &RangeInclusive<usize>, alphabet: u8) -> Result<(), BoundsError> {
    if !(2..=26).contains(&alphabet) {
        return Err(BoundsError::Parameter(2));
    }
    if *lens.start() < 2 || lens.is_empty() {
        return Err(BoundsError::Parameter(2));
    }
    Ok(())
}

fn random_text<R: Rng>(rng: &mut R, len: usize, alphabet: u8) -> Text {
    (0..len).map(|_| b'a' + rng.gen_range(0..alphabet)).collect()
}

/// Uniform strings over the first `alphabet` letters, non-primitive draws
/// rejected; returns the nice rotation.
pub fn sample_nice<R: Rng>(rng: &mut R, lens: RangeInclusive<usize>, alphabet: u8) -> Result<NiceWord, BoundsError> {
    check_sampling(&lens, alphabet)?;
    for _ in 0..MAX_REJECTIONS {
        let len = rng.gen_range(lens.clone());
        let w = random_text(rng, len, alphabet);
        if words::is_primitive(&w)? {
            return Ok(words::nice_rotation(&w)?);
        }
    }
    Err(BoundsError::Exhausted(MAX_REJECTIONS))
}

pub fn gen_random_nice(seed: u64, lens: RangeInclusive<usize>, alphabet: u8) -> Result<NiceWord, BoundsError> {
    sample_nice(&mut ChaCha8Rng::seed_from_u64(seed), lens, alphabet)
}

fn random_extension<R: Rng>(rng: &mut R, nice: NiceWord) -> WString {
    let l = nice.len();
    let len = rng.gen_range(l..=4 * l);
    WString::with_len(nice, len)
}

/// A nice word whose period contains a long prefix of `next^∞`, plus a
/// `w`-string of it that ends right after that prefix. Such pairs realise
/// overlaps close to the upper bounds.
fn derived<R: Rng>(rng: &mut R, next: &NiceWord, alphabet: u8) -> Result<WString, BoundsError> {
    let l2 = next.len();
    for _ in 0..MAX_REJECTIONS {
        let m = rng.gen_range(l2..=3 * l2);
        let tail = rng.gen_range(0..=l2);
        let mut raw = next.prefix(m);
        raw.extend(random_text(rng, tail, alphabet));
        if !words::is_primitive(&raw)? {
            continue;
        }
        let nice = words::nice_rotation(&raw)?;
        let n = raw.len();
        // raw starts at offset p of the nice word
        let shift = words::find(&[nice.word(), nice.word()].concat(), &raw).expect("a rotation");
        let p = (n - shift) % n;
        let t = rng.gen_range(0..=2);
        let len = p + m + t * n;
        let len = if len < n { len + n } else { len };
        return Ok(WString::with_len(nice, len));
    }
    Err(BoundsError::Exhausted(MAX_REJECTIONS))
}

/// A non-equivalent, non-degenerate pair; about half the time the first
/// word is built around a prefix of the second.
pub fn sample_pair<R: Rng>(rng: &mut R, max_len: usize, alphabet: u8) -> Result<(WString, WString), BoundsError> {
    for _ in 0..MAX_REJECTIONS {
        let w2 = sample_nice(rng, 2..=max_len, alphabet)?;
        let x1 = if rng.gen_bool(0.5) {
            derived(rng, &w2, alphabet)?
        } else {
            let w1 = sample_nice(rng, 2..=max_len, alphabet)?;
            random_extension(rng, w1)
        };
        let x2 = random_extension(rng, w2);
        if !words::rotations_equivalent(x1.nice.word(), x2.nice.word()) {
            return Ok((x1, x2));
        }
    }
    Err(BoundsError::Exhausted(MAX_REJECTIONS))
}

/// A random `k`-cycle; each node is derived from its successor with
/// probability 0.7.
pub fn sample_cycle_fixture<R: Rng>(
    rng: &mut R,
    k: usize,
    max_len: usize,
    alphabet: u8,
) -> Result<CycleFixture, BoundsError> {
    if k < 2 {
        return Err(BoundsError::TooShort);
    }
    for _ in 0..MAX_REJECTIONS {
        let first = sample_nice(rng, 2..=max_len, alphabet)?;
        let mut nodes = vec![random_extension(rng, first)];
        for _ in 1..k {
            let next = nodes.last().expect("non-empty").nice.clone();
            let x = if rng.gen_bool(0.7) {
                derived(rng, &next, alphabet)?
            } else {
                let w = sample_nice(rng, 2..=max_len, alphabet)?;
                random_extension(rng, w)
            };
            nodes.push(x);
        }
        nodes.reverse();
        if let Ok(f) = CycleFixture::new(nodes) {
            return Ok(f);
        }
    }
    Err(BoundsError::Exhausted(MAX_REJECTIONS))
}
