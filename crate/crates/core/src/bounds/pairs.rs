//! Overlap bounds for a pair of `w`-strings.

use super::{BoundReport, BoundsError, WString};
use crate::rational::{frac, int, Rational};
use crate::words::{self, RotationKind, SymbolOrder};

fn validate(a: &WString, b: &WString) -> Result<(), BoundsError> {
    if a.nice.is_degenerate() {
        return Err(BoundsError::Degenerate(0));
    }
    if b.nice.is_degenerate() {
        return Err(BoundsError::Degenerate(1));
    }
    if words::rotations_equivalent(a.nice.word(), b.nice.word()) {
        return Err(BoundsError::Equivalent(0, 1));
    }
    Ok(())
}

/// Every pair bound, evaluated for `(a, b)` and then for `(b, a)`.
pub fn check_pair_bounds(a: &WString, b: &WString) -> Result<Vec<BoundReport>, BoundsError> {
    validate(a, b)?;
    let mut out = directional(a, b, "1>2");
    out.extend(directional(b, a, "2>1"));
    out.extend(rotation_reports(a, b, "1>2"));
    out.extend(rotation_reports(b, a, "2>1"));
    out.push(two_cycle(a, b));
    out.push(two_cycle(b, a));
    Ok(out)
}

/// Positions of the extremal rotations of `w12` and the derived bounds on
/// `α1`, for the direction `a → b` only.
pub fn verify_rotation_positions(a: &WString, b: &WString) -> Result<Vec<BoundReport>, BoundsError> {
    validate(a, b)?;
    Ok(rotation_reports(a, b, "1>2"))
}

struct Params {
    l1: i64,
    l2: i64,
    a1: i64,
    a2: i64,
    o12: i64,
}

impl Params {
    fn of(x1: &WString, x2: &WString) -> Self {
        Params {
            l1: x1.period() as i64,
            l2: x2.period() as i64,
            a1: x1.alpha() as i64,
            a2: x2.alpha() as i64,
            o12: words::overlap_len(&x1.text, &x2.text) as i64,
        }
    }

    fn describe(&self, dir: &str) -> String {
        format!("dir={dir} l1={} l2={} a1={} a2={} o12={}", self.l1, self.l2, self.a1, self.a2, self.o12)
    }

    fn delta_o12(&self) -> Rational {
        int(self.l1) + frac(self.l2, 2) - int(self.o12)
    }

    fn delta_a1(&self) -> Rational {
        frac(self.l1, 2) - int(self.a1)
    }
}

fn directional(x1: &WString, x2: &WString, dir: &str) -> Vec<BoundReport> {
    let p = Params::of(x1, x2);
    let inputs = p.describe(dir);
    let Params { l1, l2, a1, a2, o12 } = p;
    let mut out = Vec::new();

    out.push(BoundReport::inequality("overlap-period-alpha", inputs.clone(), int(o12), int(l1 + a2), true));

    let k = (l1 + l2 - 1) / l2;
    out.push(BoundReport::inequality(
        "overlap-period-multiple",
        format!("{inputs} k={k}"),
        int(o12),
        int(k * l2),
        true,
    ));

    out.push(BoundReport::conditional(
        "overlap-alpha-near",
        l2 <= l1 && l1 < 2 * l2,
        inputs.clone(),
        int(o12 + a1),
        int(l1 + l2),
        false,
    ));
    out.push(BoundReport::conditional(
        "overlap-alpha-double",
        2 * l2 <= l1 && 2 * l1 < 5 * l2,
        inputs.clone(),
        int(o12 + a1),
        int(2 * l1 - l2),
        false,
    ));
    out.push(BoundReport::conditional(
        "overlap-alpha-general",
        l1 >= l2,
        inputs.clone(),
        int(o12 + a1),
        int(l1 + l2 + a2),
        false,
    ));

    let delta = p.delta_o12() + p.delta_a1();
    out.push(BoundReport::conditional(
        "delta-sum-near",
        l2 <= l1 && l1 < 2 * l2,
        inputs.clone(),
        frac(l1 - l2, 2),
        delta,
        false,
    ));
    out.push(BoundReport::conditional(
        "delta-sum-steep",
        l1 >= 3 * l2,
        inputs.clone(),
        frac(l1 - l2, 4),
        delta,
        false,
    ));
    out.push(BoundReport::conditional(
        "delta-sum-general",
        l1 >= l2,
        inputs.clone(),
        frac(l1 - l2, 6),
        delta,
        false,
    ));

    // |α2 − k·l1| is minimised by the multiples next to α2/l1
    let q = a2 / l1;
    let nearest = [q, q + 1].into_iter().filter(|&k| k >= 1).map(|k| (a2 - k * l1).abs()).min().unwrap_or(l1 - a2);
    out.push(BoundReport::conditional(
        "short-alpha-multiples",
        l1 <= l2 && o12 >= l1 + a2 - a1,
        inputs,
        int(a1),
        int(nearest),
        false,
    ));
    out
}

fn two_cycle(x1: &WString, x2: &WString) -> BoundReport {
    let p = Params::of(x1, x2);
    let q = Params::of(x2, x1);
    let inputs = format!("{} o21={}", p.describe("1>2"), q.o12);
    BoundReport::conditional("two-cycle-delta", p.l1 >= 2 * p.l2, inputs, frac(p.l2, 2), p.delta_o12() + q.delta_o12(), false)
}

/// Smallest 1-based start `p` such that the overlap is a prefix of
/// `rot_p(w1)^∞`.
fn overlap_rotation_start(x1: &WString, ov: &[u8]) -> Option<usize> {
    let w1 = x1.nice.word();
    (1..=w1.len()).find(|&p| words::periodic_prefix(&words::rotation(w1, p), ov.len()) == ov)
}

fn rotation_reports(x1: &WString, x2: &WString, dir: &str) -> Vec<BoundReport> {
    const IDS: [&str; 5] = [
        "rotation-positions-max",
        "rotation-positions-min",
        "rotation-positions-long",
        "alpha-bound",
        "alpha-bound-alternatives",
    ];
    let p = Params::of(x1, x2);
    let Params { l1, l2, a1, a2, o12 } = p;
    let base = p.describe(dir);
    if !(l1 >= l2 && o12 >= l2) {
        return IDS.iter().map(|id| BoundReport::not_applicable(id, base.clone())).collect();
    }

    let ov = words::overlap(&x1.text, &x2.text);
    let Some(start) = overlap_rotation_start(x1, ov) else {
        // the overlap is a factor of w1^∞, so a start always exists
        return IDS.iter().map(|id| BoundReport::disjunction(id, format!("{base} no-rotation"), false)).collect();
    };
    let w12 = words::rotation(x1.nice.word(), start);

    // a minimal-rotation w2 is handled as the maximal-rotation case under
    // the reversed symbol order
    let (max_order, min_order) = match x2.nice.kind() {
        RotationKind::MaxRotation => (SymbolOrder::Reversed, SymbolOrder::Natural),
        RotationKind::MinRotation => (SymbolOrder::Natural, SymbolOrder::Reversed),
    };
    let i_max = words::extremal_rotation_index(&w12, max_order).expect("non-empty") as i64;
    let i_min = words::extremal_rotation_index(&w12, min_order).expect("non-empty") as i64;

    let t = l2 * ((o12 - 1) / l2) + 1;
    let t2 = l2 * ((o12 - a2 - 1) / l2) + a2 + 1;
    let inputs = format!("{base} w12_start={start} i_max={i_max} i_min={i_min} t={t} t2={t2}");

    let max_ok = i_max == 1 || i_max == t || i_max > t.max(o12 - a2 + 1);
    let min_ok = i_min == a2 + 1 || i_min == t2 || i_min > t2.max(o12 - (l2 - a2) + 1);
    let long = if o12 >= l1 {
        BoundReport::disjunction(IDS[2], inputs.clone(), i_max != 1 && i_min == a2 + 1)
    } else {
        BoundReport::not_applicable(IDS[2], inputs.clone())
    };
    let alternatives = a1 <= l1 + l2 - o12 || i_max == t || i_min == t2;

    vec![
        BoundReport::disjunction(IDS[0], inputs.clone(), max_ok),
        BoundReport::disjunction(IDS[1], inputs.clone(), min_ok),
        long,
        BoundReport::inequality(IDS[3], inputs.clone(), int(a1), int(l2 + l1 + a2 - o12), false),
        BoundReport::disjunction(IDS[4], inputs, alternatives),
    ]
}
