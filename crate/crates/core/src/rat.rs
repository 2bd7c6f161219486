//! Exact rational scalars.
//!
//! `Rat` is an arbitrary-precision rational, always reduced, denominator
//! positive. All coefficient arithmetic in this crate goes through it; no
//! floating point anywhere on the exact paths.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

pub type Rat = num_rational::BigRational;

/// `n/d` as an exact rational. Panics if `d == 0`.
pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// The integer `n` as a rational.
pub fn rat_int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// `base^exp` for a signed integer exponent (requires `base != 0` when
/// `exp < 0`).
pub fn rat_pow(base: &Rat, exp: i64) -> Rat {
    if exp >= 0 {
        rat_pow_unsigned(base, exp as u64)
    } else {
        rat_pow_unsigned(base, (-exp) as u64).recip()
    }
}

fn rat_pow_unsigned(base: &Rat, mut exp: u64) -> Rat {
    let mut result = Rat::one();
    let mut acc = base.clone();
    while exp > 0 {
        if exp & 1 == 1 {
            result *= &acc;
        }
        exp >>= 1;
        if exp > 0 {
            acc = &acc * &acc;
        }
    }
    result
}

/// `2^e` with a signed exponent.
pub fn pow2(e: i64) -> Rat {
    rat_pow(&rat_int(2), e)
}

/// `n!` as a rational.
pub fn factorial(n: u64) -> Rat {
    let mut f = BigInt::one();
    for i in 2..=n {
        f *= BigInt::from(i);
    }
    Rat::from_integer(f)
}

/// `1! 2! ... n!`.
pub fn superfactorial(n: u64) -> Rat {
    let mut f = Rat::one();
    for i in 1..=n {
        f *= factorial(i);
    }
    f
}

/// Parses `"p"`, `"-p"`, or `"p/q"`.
pub fn parse_rat(s: &str) -> Option<Rat> {
    let s = s.trim();
    match s.split_once('/') {
        Some((p, q)) => {
            let p: BigInt = p.trim().parse().ok()?;
            let q: BigInt = q.trim().parse().ok()?;
            if q.is_zero() {
                return None;
            }
            Some(Rat::new(p, q))
        }
        None => {
            let p: BigInt = s.parse().ok()?;
            Some(Rat::from_integer(p))
        }
    }
}

/// Renders a rational as `p` or `p/q` (reduced, denominator positive).
pub fn format_rat(r: &Rat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Truthy sign of an integer-parity expression: `(-1)^e`.
pub fn neg_one_pow(e: i64) -> Rat {
    if e.rem_euclid(2) == 0 {
        Rat::one()
    } else {
        -Rat::one()
    }
}

/// Exact conversion to `f64`; only used by the numeric modular checks.
pub fn rat_to_f64(r: &Rat) -> f64 {
    let n = r.numer();
    let d = r.denom();
    // Good enough for the magnitudes that occur in the numeric checks.
    let nf = n.to_string().parse::<f64>().unwrap_or(if n.is_negative() {
        f64::NEG_INFINITY
    } else {
        f64::INFINITY
    });
    let df = d.to_string().parse::<f64>().unwrap_or(f64::INFINITY);
    nf / df
}
