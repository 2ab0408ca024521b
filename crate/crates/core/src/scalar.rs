//! The scalar abstraction shared by every geometric routine.

use std::fmt::{Debug, Display};

use num_bigint::BigInt;
use num_traits::{Num, Signed, Zero};

use crate::error::{Error, Result};
use crate::Rational;

/// Ordered signed field elements.
///
/// Only field operations and comparisons are used, so exact rationals and
/// IEEE floats both qualify. Exactness claims in this crate assume an exact
/// implementation such as [`Rational`].
pub trait Scalar: Num + Signed + PartialOrd + Clone + Debug + Display {
    fn two() -> Self {
        Self::one() + Self::one()
    }

    fn from_ratio(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        from_i64::<Self>(num) / from_i64::<Self>(den)
    }

    /// Sign as -1, 0 or +1.
    fn sign(&self) -> i8 {
        if self.is_zero() {
            0
        } else if self.is_positive() {
            1
        } else {
            -1
        }
    }
}

impl<T: Num + Signed + PartialOrd + Clone + Debug + Display> Scalar for T {}

fn from_i64<S: Scalar>(v: i64) -> S {
    // Binary expansion keeps this independent of FromPrimitive.
    let mut acc = S::zero();
    let mut bit = S::one();
    let mut m = v.unsigned_abs();
    while m > 0 {
        if m & 1 == 1 {
            acc = acc + bit.clone();
        }
        bit = bit.clone() + bit;
        m >>= 1;
    }
    if v < 0 {
        -acc
    } else {
        acc
    }
}

/// Parses `"p/q"` or an integer `"p"` into a rational in lowest terms.
pub fn parse_rational(text: &str) -> Result<Rational> {
    let text = text.trim();
    let bad = || Error::Parse(format!("invalid rational {text:?}"));
    let (num, den) = match text.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (text, "1"),
    };
    if num.is_empty() || den.is_empty() {
        return Err(bad());
    }
    let num: BigInt = num.parse().map_err(|_| bad())?;
    let den: BigInt = den.parse().map_err(|_| bad())?;
    if den.is_zero() {
        return Err(Error::Parse(format!("zero denominator in {text:?}")));
    }
    Ok(Rational::new(num, den))
}

/// Canonical lowest-terms text: `"5/8"`, `"1"`, `"0"`, `"-3/2"`.
pub fn format_rational(value: &Rational) -> String {
    value.to_string()
}
