//! Exact rational scalars: the only number type used anywhere in this crate.
//!
//! All series coefficients, pairings, and character values are `Q`
//! (arbitrary-precision rationals). Nothing here or downstream touches
//! floating point.

use num::bigint::BigInt;
use num::traits::{One, Signed, Zero};
use num::BigRational;

use crate::error::{Error, Result};

pub type Q = BigRational;

/// Integer as a rational.
pub fn qi(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

/// Ratio of two integers. Panics on a zero denominator; intended for literals.
pub fn qr(num: i64, den: i64) -> Q {
    assert!(den != 0, "zero denominator in rational literal");
    Q::new(BigInt::from(num), BigInt::from(den))
}

pub fn q_zero() -> Q {
    Q::zero()
}

pub fn q_one() -> Q {
    Q::one()
}

/// Parses `"p/q"` or a bare integer `"n"`, with optional leading sign.
pub fn parse_q(s: &str) -> Result<Q> {
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), Some(d.trim())),
        None => (s, None),
    };
    let n: BigInt = num
        .parse()
        .map_err(|_| Error::Parse(format!("bad rational numerator in `{s}`")))?;
    let d: BigInt = match den {
        Some(d) => d
            .parse()
            .map_err(|_| Error::Parse(format!("bad rational denominator in `{s}`")))?,
        None => BigInt::one(),
    };
    if d.is_zero() {
        return Err(Error::Parse(format!("zero denominator in `{s}`")));
    }
    Ok(Q::new(n, d))
}

/// Formats as `"p/q"`, or `"n"` when the denominator is 1.
pub fn fmt_q(x: &Q) -> String {
    if x.denom().is_one() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

pub fn q_is_integer(x: &Q) -> bool {
    x.denom().is_one()
}

pub fn q_to_i64(x: &Q) -> Option<i64> {
    if !q_is_integer(x) {
        return None;
    }
    i64::try_from(x.numer().clone()).ok()
}

/// Integer power with negative exponents allowed (requires x != 0 for those).
pub fn q_pow(x: &Q, e: i64) -> Q {
    if e == 0 {
        return q_one();
    }
    let base = if e < 0 {
        assert!(!x.is_zero(), "negative power of zero");
        x.recip()
    } else {
        x.clone()
    };
    let mut acc = q_one();
    let mut b = base;
    let mut n = e.unsigned_abs();
    while n > 0 {
        if n & 1 == 1 {
            acc *= &b;
        }
        b = &b * &b;
        n >>= 1;
    }
    acc
}

/// Dot product of equal-length slices.
pub fn q_dot(a: &[Q], b: &[Q]) -> Q {
    assert_eq!(a.len(), b.len(), "dot product length mismatch");
    let mut acc = q_zero();
    for (x, y) in a.iter().zip(b) {
        acc += x * y;
    }
    acc
}

pub fn q_abs(x: &Q) -> Q {
    x.abs()
}

/// Largest integer <= x, as i64.
pub fn q_floor_i64(x: &Q) -> i64 {
    i64::try_from(x.floor().to_integer()).expect("floor fits i64")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_roundtrip() {
        for s in ["3", "-7", "3/4", "-22/7", "0"] {
            let q = parse_q(s).unwrap();
            assert_eq!(fmt_q(&q), s);
        }
        assert_eq!(fmt_q(&parse_q("6/4").unwrap()), "3/2");
        assert!(parse_q("1/0").is_err());
        assert!(parse_q("x").is_err());
    }

    #[test]
    fn powers() {
        assert_eq!(q_pow(&qr(2, 3), 2), qr(4, 9));
        assert_eq!(q_pow(&qr(2, 3), -1), qr(3, 2));
        assert_eq!(q_pow(&qi(5), 0), qi(1));
    }
}
