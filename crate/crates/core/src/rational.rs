//! Exact rational arithmetic for bound checks.

use num_rational::Ratio;
use serde::Serializer;

pub type Rational = Ratio<i64>;

pub fn int(v: impl Into<i64>) -> Rational {
    Rational::from_integer(v.into())
}

pub fn frac(num: i64, den: i64) -> Rational {
    Rational::new(num, den)
}

/// Renders as `p/q` (`p` alone for integers).
pub fn render(r: &Rational) -> String {
    if *r.denom() == 1 {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn serialize<S: Serializer>(r: &Rational, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&format!("{}/{}", r.numer(), r.denom()))
}
