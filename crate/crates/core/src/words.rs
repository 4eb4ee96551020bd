//! Combinatorics on words: rotations, borders, periods, primitivity, nice
//! rotations, suffix/prefix overlaps and `w`-strings.
//!
//! Strings are byte slices compared in numeric byte order. Rotation indices
//! in the public API are 1-based: index `i` names the rotation
//! `w[i..] + w[..i]` written in 0-based slicing as `w[i-1..] + w[..i-1]`.

use std::cmp::Ordering;

use serde::Serialize;
use thiserror::Error;

/// A finite string over the byte alphabet.
pub type Text = Vec<u8>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WordError {
    #[error("empty text")]
    Empty,
    #[error("not primitive")]
    NotPrimitive,
    #[error("not its own nice rotation")]
    NotNice,
}

/// Which extremal rotation a [`NiceWord`] is.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum RotationKind {
    MaxRotation,
    MinRotation,
}

impl RotationKind {
    pub fn flipped(self) -> Self {
        match self {
            RotationKind::MaxRotation => RotationKind::MinRotation,
            RotationKind::MinRotation => RotationKind::MaxRotation,
        }
    }
}

/// A primitive string that is its own nice rotation.
///
/// `word = pmax · pmin` for [`RotationKind::MaxRotation`] and
/// `word = pmin · pmax` for [`RotationKind::MinRotation`]. Single-letter
/// words are accepted as a degenerate case with `alpha = 0`; the overlap
/// bounds do not apply to them.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct NiceWord {
    word: Text,
    kind: RotationKind,
    pmin_len: usize,
    pmax_len: usize,
    alpha: usize,
    degenerate: bool,
}

impl NiceWord {
    /// Accepts `word` only if it already equals its own nice rotation.
    pub fn from_nice(word: &[u8]) -> Result<Self, WordError> {
        let nice = nice_rotation(word)?;
        if nice.word != word {
            return Err(WordError::NotNice);
        }
        Ok(nice)
    }

    pub fn word(&self) -> &[u8] {
        &self.word
    }

    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_empty(&self) -> bool {
        self.word.is_empty()
    }

    pub fn kind(&self) -> RotationKind {
        self.kind
    }

    pub fn pmin_len(&self) -> usize {
        self.pmin_len
    }

    pub fn pmax_len(&self) -> usize {
        self.pmax_len
    }

    pub fn alpha(&self) -> usize {
        self.alpha
    }

    pub fn is_degenerate(&self) -> bool {
        self.degenerate
    }

    pub fn pmin(&self) -> &[u8] {
        match self.kind {
            RotationKind::MinRotation => &self.word[..self.pmin_len],
            RotationKind::MaxRotation => &self.word[self.pmax_len..],
        }
    }

    pub fn pmax(&self) -> &[u8] {
        match self.kind {
            RotationKind::MaxRotation => &self.word[..self.pmax_len],
            RotationKind::MinRotation => &self.word[self.pmin_len..],
        }
    }

    /// The same word seen under the reversed alphabet order: minimal and
    /// maximal rotations trade places, `alpha` is unchanged.
    pub fn reversed_order(&self) -> NiceWord {
        if self.degenerate {
            return self.clone();
        }
        NiceWord {
            word: self.word.clone(),
            kind: self.kind.flipped(),
            pmin_len: self.pmax_len,
            pmax_len: self.pmin_len,
            alpha: self.alpha,
            degenerate: false,
        }
    }

    /// First `n` symbols of `word^∞`.
    pub fn prefix(&self, n: usize) -> Text {
        periodic_prefix(&self.word, n)
    }
}

/// Symbol order used by the rotation routines.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SymbolOrder {
    Natural,
    Reversed,
}

impl SymbolOrder {
    #[inline]
    fn cmp(self, a: u8, b: u8) -> Ordering {
        match self {
            SymbolOrder::Natural => a.cmp(&b),
            SymbolOrder::Reversed => b.cmp(&a),
        }
    }
}

/// Rotation of `w` starting at the 1-based position `start`.
pub fn rotation(w: &[u8], start: usize) -> Text {
    let i = (start - 1) % w.len().max(1);
    let mut out = Vec::with_capacity(w.len());
    out.extend_from_slice(&w[i..]);
    out.extend_from_slice(&w[..i]);
    out
}

/// Booth's least-rotation scan under `order`; returns a 0-based start.
fn least_rotation(w: &[u8], order: SymbolOrder) -> usize {
    let n = w.len();
    let mut fail = vec![-1isize; 2 * n];
    let mut k = 0usize;
    for j in 1..2 * n {
        let sj = w[j % n];
        let mut i = fail[j - k - 1];
        while i != -1 && sj != w[(k + i as usize + 1) % n] {
            if order.cmp(sj, w[(k + i as usize + 1) % n]) == Ordering::Less {
                k = j - i as usize - 1;
            }
            i = fail[i as usize];
        }
        if i == -1 && sj != w[k % n] {
            if order.cmp(sj, w[k % n]) == Ordering::Less {
                k = j;
            }
            fail[j - k] = -1;
        } else {
            fail[j - k] = i + 1;
        }
    }
    // equal rotations repeat with the primitive root's length
    k % primitive_root_len(w)
}

fn primitive_root_len(w: &[u8]) -> usize {
    let p = min_period(w);
    if w.len().is_multiple_of(p) {
        p
    } else {
        w.len()
    }
}

/// 1-based start of the lexicographically least rotation under `order`,
/// smallest index among ties.
pub fn extremal_rotation_index(w: &[u8], order: SymbolOrder) -> Result<usize, WordError> {
    if w.is_empty() {
        return Err(WordError::Empty);
    }
    Ok(least_rotation(w, order) + 1)
}

pub fn minimal_rotation_index(w: &[u8]) -> Result<usize, WordError> {
    extremal_rotation_index(w, SymbolOrder::Natural)
}

pub fn maximal_rotation_index(w: &[u8]) -> Result<usize, WordError> {
    extremal_rotation_index(w, SymbolOrder::Reversed)
}

/// KMP failure table: `table[i]` is the length of the longest proper border
/// of `w[..=i]`.
pub fn border_table(w: &[u8]) -> Vec<usize> {
    let mut table = vec![0usize; w.len()];
    let mut k = 0;
    for i in 1..w.len() {
        while k > 0 && w[i] != w[k] {
            k = table[k - 1];
        }
        if w[i] == w[k] {
            k += 1;
        }
        table[i] = k;
    }
    table
}

/// Longest proper prefix of `w` that is also a suffix (possibly empty).
pub fn longest_border(w: &[u8]) -> &[u8] {
    match border_table(w).last() {
        Some(&b) => &w[..b],
        None => w,
    }
}

/// Smallest period of `w`; `0` for the empty string.
pub fn min_period(w: &[u8]) -> usize {
    w.len() - longest_border(w).len()
}

pub fn is_primitive(w: &[u8]) -> Result<bool, WordError> {
    if w.is_empty() {
        return Err(WordError::Empty);
    }
    let p = min_period(w);
    Ok(p == w.len() || !w.len().is_multiple_of(p))
}

/// Computes the nice rotation of a primitive `w`.
///
/// The maximal rotation is chosen when `|pmax| <= |pmin|`, the minimal one
/// otherwise. A single letter yields a degenerate word with `alpha = 0`.
pub fn nice_rotation(w: &[u8]) -> Result<NiceWord, WordError> {
    if w.is_empty() {
        return Err(WordError::Empty);
    }
    if w.len() == 1 {
        return Ok(NiceWord {
            word: w.to_vec(),
            kind: RotationKind::MaxRotation,
            pmin_len: 0,
            pmax_len: 1,
            alpha: 0,
            degenerate: true,
        });
    }
    if !is_primitive(w)? {
        return Err(WordError::NotPrimitive);
    }
    let n = w.len();
    let i_min = least_rotation(w, SymbolOrder::Natural);
    let i_max = least_rotation(w, SymbolOrder::Reversed);
    // w_min = pmin·pmax and w_max starts |pmin| symbols into w_min
    let pmin_len = (i_max + n - i_min) % n;
    let pmax_len = n - pmin_len;
    let (start, kind, alpha) = if pmax_len <= pmin_len {
        (i_max, RotationKind::MaxRotation, pmax_len)
    } else {
        (i_min, RotationKind::MinRotation, pmin_len)
    };
    Ok(NiceWord {
        word: rotation(w, start + 1),
        kind,
        pmin_len,
        pmax_len,
        alpha,
        degenerate: false,
    })
}

/// KMP automaton state after reading `text`, matching against `pattern`.
/// The state never exceeds `pattern.len()`; a full match at the very end is
/// kept, interior full matches fall back along the failure links.
fn final_match_state(text: &[u8], pattern: &[u8], table: &[usize]) -> usize {
    let mut j = 0;
    for &c in text {
        if j == pattern.len() {
            j = table[j - 1];
        }
        while j > 0 && c != pattern[j] {
            j = table[j - 1];
        }
        if c == pattern[j] {
            j += 1;
        }
    }
    j
}

/// Longest suffix of `u` that is a prefix of `v`.
///
/// For `u == v` this is the longest proper border, so that a string's
/// self-loop in the prefix graph keeps one full period.
pub fn overlap<'a>(u: &'a [u8], v: &[u8]) -> &'a [u8] {
    if u.is_empty() || v.is_empty() {
        return &u[u.len()..];
    }
    if u == v {
        return &u[u.len() - longest_border(u).len()..];
    }
    let table = border_table(v);
    let len = final_match_state(u, v, &table);
    &u[u.len() - len..]
}

pub fn overlap_len(u: &[u8], v: &[u8]) -> usize {
    overlap(u, v).len()
}

/// `u` with its overlap with `v` removed from the end.
pub fn prefix_part<'a>(u: &'a [u8], v: &[u8]) -> &'a [u8] {
    &u[..u.len() - overlap_len(u, v)]
}

/// First `n` symbols of `word^∞`.
pub fn periodic_prefix(word: &[u8], n: usize) -> Text {
    if word.is_empty() {
        return Vec::new();
    }
    word.iter().copied().cycle().take(n).collect()
}

pub fn w_string_prefix(w: &NiceWord, n: usize) -> Result<Text, WordError> {
    if w.is_empty() {
        return Err(WordError::Empty);
    }
    Ok(w.prefix(n))
}

pub fn is_w_string(x: &[u8], w: &NiceWord) -> bool {
    if w.is_empty() {
        return x.is_empty();
    }
    x.iter().zip(w.word().iter().cycle()).all(|(a, b)| a == b)
}

/// First occurrence of `needle` in `hay` (0-based).
pub fn find(hay: &[u8], needle: &[u8]) -> Option<usize> {
    if needle.is_empty() {
        return Some(0);
    }
    if needle.len() > hay.len() {
        return None;
    }
    let table = border_table(needle);
    let mut j = 0;
    for (i, &c) in hay.iter().enumerate() {
        while j > 0 && c != needle[j] {
            j = table[j - 1];
        }
        if c == needle[j] {
            j += 1;
        }
        if j == needle.len() {
            return Some(i + 1 - j);
        }
    }
    None
}

pub fn contains(hay: &[u8], needle: &[u8]) -> bool {
    find(hay, needle).is_some()
}

pub fn rotations_equivalent(u: &[u8], v: &[u8]) -> bool {
    if u.len() != v.len() {
        return false;
    }
    let mut vv = Vec::with_capacity(2 * v.len());
    vv.extend_from_slice(v);
    vv.extend_from_slice(v);
    contains(&vv, u)
}
