//! Rational helpers shared by every module.

use num::bigint::BigInt;
use num::rational::{BigRational, Ratio};
use num::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Exact rational used for roots, weights and shifts.
pub type Q = Ratio<i64>;

/// Arbitrary-precision rational used where products grow.
pub type BigQ = BigRational;

pub fn q(numer: i64, denom: i64) -> Q {
    Q::new(numer, denom)
}

pub fn qi(n: i64) -> Q {
    Q::from_integer(n)
}

pub fn half() -> Q {
    Q::new(1, 2)
}

pub fn to_big(x: &Q) -> BigQ {
    BigQ::new(BigInt::from(*x.numer()), BigInt::from(*x.denom()))
}

pub fn to_f64(x: &Q) -> f64 {
    *x.numer() as f64 / *x.denom() as f64
}

pub fn big_to_f64(x: &BigQ) -> f64 {
    // Ratio<BigInt> -> f64 through the shared exponent keeps large values finite.
    use num::ToPrimitive;
    x.to_f64().unwrap_or(f64::NAN)
}

/// Natural log of a positive big integer, accurate far outside f64 range.
pub fn ln_bigint(n: &BigInt) -> f64 {
    let bits = n.bits();
    if bits <= 1000 {
        use num::ToPrimitive;
        return n.to_f64().unwrap_or(f64::NAN).ln();
    }
    let shift = bits - 64;
    let top: BigInt = n >> shift;
    use num::ToPrimitive;
    top.to_f64().unwrap_or(f64::NAN).ln() + shift as f64 * std::f64::consts::LN_2
}

/// `ln|x|` for nonzero `x`.
pub fn ln_abs_big(x: &BigQ) -> f64 {
    use num::Signed;
    ln_bigint(&x.numer().abs()) - ln_bigint(&x.denom().abs())
}

/// Parses `"3/2"`, `"-1"`, `"0.5"` into an exact rational.
pub fn parse_q(s: &str) -> Result<Q> {
    let s = s.trim();
    if s.is_empty() {
        return Err(Error::Parse("empty rational".into()));
    }
    if let Some((n, d)) = s.split_once('/') {
        let n: i64 = n.trim().parse().map_err(|_| Error::Parse(format!("bad numerator in {s:?}")))?;
        let d: i64 = d.trim().parse().map_err(|_| Error::Parse(format!("bad denominator in {s:?}")))?;
        if d == 0 {
            return Err(Error::Parse(format!("zero denominator in {s:?}")));
        }
        return Ok(Q::new(n, d));
    }
    if let Some((int, frac)) = s.split_once('.') {
        let neg = int.trim_start().starts_with('-');
        let int_part: i64 = if int.is_empty() || int == "-" || int == "+" {
            0
        } else {
            int.parse().map_err(|_| Error::Parse(format!("bad decimal {s:?}")))?
        };
        if frac.is_empty() || !frac.chars().all(|c| c.is_ascii_digit()) || frac.len() > 15 {
            return Err(Error::Parse(format!("bad decimal {s:?}")));
        }
        let denom = 10i64.pow(frac.len() as u32);
        let f: i64 = frac.parse().map_err(|_| Error::Parse(format!("bad decimal {s:?}")))?;
        let mag = Q::from_integer(int_part.abs()) + Q::new(f, denom);
        return Ok(if neg { -mag } else { mag });
    }
    let n: i64 = s.parse().map_err(|_| Error::Parse(format!("bad rational {s:?}")))?;
    Ok(Q::from_integer(n))
}

/// Parses a comma separated list of rationals.
pub fn parse_q_list(s: &str) -> Result<Vec<Q>> {
    if s.trim().is_empty() {
        return Ok(Vec::new());
    }
    s.split(',').map(parse_q).collect()
}

/// `" + c"` or `" - |c|"`, for printing affine expressions.
pub fn fmt_offset(c: &Q) -> String {
    if *c < Q::from_integer(0) {
        format!(" - {}", -c)
    } else {
        format!(" + {c}")
    }
}

pub fn fmt_q(x: &Q) -> String {
    x.to_string()
}

pub fn fmt_q_list(v: &[Q]) -> String {
    let parts: Vec<String> = v.iter().map(|x| x.to_string()).collect();
    format!("({})", parts.join(", "))
}

pub fn is_integer(x: &Q) -> bool {
    x.is_integer()
}

/// True for `k + 1/2` with integer `k`.
pub fn is_half_odd(x: &Q) -> bool {
    *x.denom() == 2
}

pub fn dot(a: &[Q], b: &[Q]) -> Q {
    a.iter().zip(b).fold(Q::zero(), |acc, (x, y)| acc + x * y)
}

pub fn add(a: &[Q], b: &[Q]) -> Vec<Q> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn sub(a: &[Q], b: &[Q]) -> Vec<Q> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn scale(a: &[Q], c: Q) -> Vec<Q> {
    a.iter().map(|x| x * c).collect()
}

pub fn zeros(n: usize) -> Vec<Q> {
    vec![Q::zero(); n]
}

pub fn big_pow(base: &BigQ, exp: i64) -> BigQ {
    if exp >= 0 {
        num::pow(base.clone(), exp as usize)
    } else {
        num::pow(base.recip(), (-exp) as usize)
    }
}

pub fn sign_of(x: &Q) -> i32 {
    if x.is_zero() {
        0
    } else if x.is_positive() {
        1
    } else {
        -1
    }
}

pub fn one() -> Q {
    Q::one()
}
