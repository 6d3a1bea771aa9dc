//! Exact rational helpers: construction, parsing, binomials, integer powers,
//! and a certified rational enclosure of 1/e.
//!
//! Every quantity the toolkit manipulates is a `BigRational`; nothing in this
//! crate touches floating point except display-only conversions.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::cmp::Ordering;

pub type Rat = BigRational;

pub fn rat(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

pub fn ratio(num: i64, den: i64) -> Rat {
    assert!(den != 0, "zero denominator");
    Rat::new(BigInt::from(num), BigInt::from(den))
}

/// Parses "p/q", an optionally signed integer, or a decimal literal such as
/// "0.5" (converted exactly with a power-of-ten denominator).
pub fn parse_rational(s: &str) -> Option<Rat> {
    let s = s.trim();
    if s.is_empty() {
        return None;
    }
    if let Some((num, den)) = s.split_once('/') {
        let num: BigInt = num.trim().parse().ok()?;
        let den: BigInt = den.trim().parse().ok()?;
        if den.is_zero() {
            return None;
        }
        return Some(Rat::new(num, den));
    }
    if let Some((int_part, frac_part)) = s.split_once('.') {
        let negative = int_part.trim_start().starts_with('-');
        let int_part = if int_part.is_empty() || int_part == "-" || int_part == "+" {
            BigInt::zero()
        } else {
            int_part.parse().ok()?
        };
        if frac_part.is_empty() || !frac_part.bytes().all(|b| b.is_ascii_digit()) {
            return None;
        }
        let digits: BigInt = frac_part.parse().ok()?;
        let scale = BigInt::from(10u32).pow(frac_part.len() as u32);
        let frac = Rat::new(digits, scale);
        let int = Rat::from_integer(int_part);
        return Some(if negative { int - frac } else { int + frac });
    }
    let n: BigInt = s.parse().ok()?;
    Some(Rat::from_integer(n))
}

/// Canonical "p/q" rendering; integers print without the denominator.
pub fn format_rational(r: &Rat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Display-only decimal conversion, marked approximate wherever it appears.
pub fn to_f64(r: &Rat) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

/// Binomial coefficient with the combinatorial convention: zero whenever
/// `r < 0`, `m < 0`, or `r > m`.
pub fn binomial(m: i64, r: i64) -> BigInt {
    if r < 0 || m < 0 || r > m {
        return BigInt::zero();
    }
    let r = r.min(m - r);
    let mut acc = BigInt::one();
    for i in 1..=r {
        acc = acc * BigInt::from(m - r + i) / BigInt::from(i);
    }
    acc
}

/// Exact `base^exp` for nonnegative integer exponents.
pub fn pow_rat(base: &Rat, exp: u64) -> Rat {
    if exp == 0 {
        return Rat::one();
    }
    let n = base.numer().pow(exp as u32);
    let d = base.denom().pow(exp as u32);
    Rat::new(n, d)
}

/// Two-sided enclosure `lo < 1/e < hi` from the alternating series
/// `sum (-1)^i / i!`, truncated after `terms` terms (`terms` is rounded up to
/// the next odd index so the partial sum is a strict lower bound).
pub fn inv_e_enclosure(terms: u32) -> (Rat, Rat) {
    let m = if terms % 2 == 1 { terms } else { terms + 1 };
    let mut sum = Rat::zero();
    let mut factorial = BigInt::one();
    for i in 0..=m {
        if i > 0 {
            factorial *= BigInt::from(i);
        }
        let term = Rat::new(BigInt::one(), factorial.clone());
        if i % 2 == 0 {
            sum += term;
        } else {
            sum -= term;
        }
    }
    let next = Rat::new(BigInt::one(), factorial * BigInt::from(m + 1));
    (sum.clone(), sum + next)
}

/// Exact comparison of a rational against the irrational 1/e, deepening the
/// series enclosure until it is decisive. Total because q != 1/e for every
/// rational q.
pub fn cmp_inv_e(q: &Rat) -> Ordering {
    let mut terms = 9;
    loop {
        let (lo, hi) = inv_e_enclosure(terms);
        if *q <= lo {
            return Ordering::Less;
        }
        if *q >= hi {
            return Ordering::Greater;
        }
        terms += 8;
        assert!(terms < 4000, "enclosure failed to separate; q = {q}");
    }
}

/// True iff `q > 1 - 1/e`, decided exactly via the 1/e enclosure.
pub fn exceeds_one_minus_inv_e(q: &Rat) -> bool {
    // q > 1 - 1/e  <=>  1 - q < 1/e
    cmp_inv_e(&(Rat::one() - q)) == Ordering::Less
}

pub fn is_nonneg(r: &Rat) -> bool {
    !r.is_negative()
}

/// The value as a usize when it is a nonnegative integer in range.
pub fn as_usize(r: &Rat) -> Option<usize> {
    if r.is_integer() {
        r.to_integer().to_usize()
    } else {
        None
    }
}
