//! Ground truth for representation counts.
//!
//! Two independent routes: coefficients of powers of the generating
//! functions `Box(q) = 1 + 2 sum q^{n^2}` and `Tri(q) = sum q^{n(n+1)/2}`
//! (fast, integer arithmetic), and direct lattice enumeration with
//! memoization (slow, used as a second witness on a subrange). Squares
//! count ordered signed tuples; triangles count ordered tuples of
//! triangular numbers.
//!
//! The classical divisor-sum formulas for 2, 4, 8 squares and triangles
//! live here too, so every identity in the catalog can be checked against
//! a value that never came from the identity itself.

use crate::rat::Rat;
use crate::series::QSeries;
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RepKind {
    Squares,
    Triangles,
}

impl RepKind {
    pub fn as_str(self) -> &'static str {
        match self {
            RepKind::Squares => "squares",
            RepKind::Triangles => "triangles",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum OracleError {
    RangeTooLarge { what: &'static str },
}

impl std::fmt::Display for OracleError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            OracleError::RangeTooLarge { what } => write!(f, "range too large for {what}"),
        }
    }
}

impl std::error::Error for OracleError {}

/// `Box(q)` or `Tri(q)` to q-order `N`, as an exact series.
pub fn base_series(kind: RepKind, n: usize) -> QSeries {
    let mut qc = vec![Rat::zero(); n + 1];
    match kind {
        RepKind::Squares => {
            qc[0] = Rat::one();
            let mut m = 1usize;
            while m * m <= n {
                qc[m * m] = Rat::from_integer(BigInt::from(2));
                m += 1;
            }
        }
        RepKind::Triangles => {
            let mut m = 0usize;
            while m * (m + 1) / 2 <= n {
                qc[m * (m + 1) / 2] = Rat::one();
                m += 1;
            }
        }
    }
    QSeries::from_q_coeffs(&qc)
}

/// Coefficient vector of `base^k` to q-order `N`: the representation counts
/// `r_k(0..=N)`. Pure integer arithmetic.
pub fn rep_counts(kind: RepKind, k: u32, n: usize) -> Vec<BigInt> {
    let mut base = vec![BigInt::zero(); n + 1];
    match kind {
        RepKind::Squares => {
            base[0] = BigInt::one();
            let mut m = 1usize;
            while m * m <= n {
                base[m * m] = BigInt::from(2);
                m += 1;
            }
        }
        RepKind::Triangles => {
            let mut m = 0usize;
            while m * (m + 1) / 2 <= n {
                base[m * (m + 1) / 2] = BigInt::one();
                m += 1;
            }
        }
    }
    let mut result = vec![BigInt::zero(); n + 1];
    result[0] = BigInt::one();
    let mut acc = base;
    let mut e = k;
    while e > 0 {
        if e & 1 == 1 {
            result = conv_trunc(&result, &acc, n);
        }
        e >>= 1;
        if e > 0 {
            acc = conv_trunc(&acc, &acc, n);
        }
    }
    result
}

fn conv_trunc(a: &[BigInt], b: &[BigInt], n: usize) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); n + 1];
    for (i, ai) in a.iter().enumerate().take(n + 1) {
        if ai.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().enumerate().take(n + 1 - i) {
            if !bj.is_zero() {
                out[i + j] += ai * bj;
            }
        }
    }
    out
}

/// `base^k` as a rational [`QSeries`] (the oracle side of series identities).
pub fn rep_series(kind: RepKind, k: u32, n: usize) -> QSeries {
    let counts = rep_counts(kind, k, n);
    let qc: Vec<Rat> = counts.into_iter().map(Rat::from_integer).collect();
    QSeries::from_q_coeffs(&qc)
}

/// Representation count by direct recursive enumeration with memoization.
/// Supported for `k <= 8`, `n <= 200`.
pub fn count_enum(kind: RepKind, k: u32, n: usize) -> Result<BigInt, OracleError> {
    if k > 8 || n > 200 {
        return Err(OracleError::RangeTooLarge {
            what: "count_enum (k <= 8, n <= 200)",
        });
    }
    let mut memo = vec![vec![None; n + 1]; k as usize + 1];
    Ok(enum_rec(kind, k as usize, n, &mut memo))
}

fn enum_rec(kind: RepKind, k: usize, n: usize, memo: &mut Vec<Vec<Option<BigInt>>>) -> BigInt {
    if k == 0 {
        return if n == 0 { BigInt::one() } else { BigInt::zero() };
    }
    if let Some(v) = &memo[k][n] {
        return v.clone();
    }
    let mut total = BigInt::zero();
    match kind {
        RepKind::Squares => {
            let mut x = 0usize;
            while x * x <= n {
                let sub = enum_rec(kind, k - 1, n - x * x, memo);
                total += if x == 0 { sub } else { sub * 2 };
                x += 1;
            }
        }
        RepKind::Triangles => {
            let mut x = 0usize;
            while x * (x + 1) / 2 <= n {
                total += enum_rec(kind, k - 1, n - x * (x + 1) / 2, memo);
                x += 1;
            }
        }
    }
    memo[k][n] = Some(total.clone());
    total
}

/// The six classical divisor-sum formulas.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DivisorFormula {
    S2,
    S4,
    S8,
    T2,
    T4,
    T8,
}

impl DivisorFormula {
    pub fn kind(self) -> RepKind {
        match self {
            DivisorFormula::S2 | DivisorFormula::S4 | DivisorFormula::S8 => RepKind::Squares,
            _ => RepKind::Triangles,
        }
    }

    pub fn summands(self) -> u32 {
        match self {
            DivisorFormula::S2 | DivisorFormula::T2 => 2,
            DivisorFormula::S4 | DivisorFormula::T4 => 4,
            DivisorFormula::S8 | DivisorFormula::T8 => 8,
        }
    }
}

fn divisors(n: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1u64;
    while d * d <= n {
        if n % d == 0 {
            small.push(d);
            if d * d != n {
                large.push(n / d);
            }
        }
        d += 1;
    }
    large.reverse();
    small.extend(large);
    small
}

/// Evaluates one classical divisor formula at `n >= 1`.
pub fn divisor_count(id: DivisorFormula, n: u64) -> BigInt {
    assert!(n >= 1);
    match id {
        DivisorFormula::S2 => {
            // 4 sum_{d | n, d odd} (-1)^{(d-1)/2}
            let mut s = BigInt::zero();
            for d in divisors(n) {
                if d % 2 == 1 {
                    if ((d - 1) / 2) % 2 == 0 {
                        s += 1;
                    } else {
                        s -= 1;
                    }
                }
            }
            s * 4
        }
        DivisorFormula::S4 => {
            // 8 sum_{d | n, 4 !| d} d
            let mut s = BigInt::zero();
            for d in divisors(n) {
                if d % 4 != 0 {
                    s += BigInt::from(d);
                }
            }
            s * 8
        }
        DivisorFormula::S8 => {
            // 16 sum_{d | n} (-1)^{n+d} d^3
            let mut s = BigInt::zero();
            for d in divisors(n) {
                let cube = BigInt::from(d).pow(3);
                if (n + d) % 2 == 0 {
                    s += cube;
                } else {
                    s -= cube;
                }
            }
            s * 16
        }
        DivisorFormula::T2 => {
            // sum_{d | 4n+1} (-1)^{(d-1)/2}
            let mut s = BigInt::zero();
            for d in divisors(4 * n + 1) {
                if ((d - 1) / 2) % 2 == 0 {
                    s += 1;
                } else {
                    s -= 1;
                }
            }
            s
        }
        DivisorFormula::T4 => {
            // sum_{d | 2n+1} d
            divisors(2 * n + 1).into_iter().map(BigInt::from).sum()
        }
        DivisorFormula::T8 => {
            // sum_{d | n+1, (n+1)/d odd} d^3
            let mut s = BigInt::zero();
            for d in divisors(n + 1) {
                if ((n + 1) / d) % 2 == 1 {
                    s += BigInt::from(d).pow(3);
                }
            }
            s
        }
    }
}

/// The twisted four-squares sum `8 sum_{d|n} (-1)^{(d-1)(n/d-1)} d`,
/// equivalent to the `4 !| d` form.
pub fn four_squares_twisted(n: u64) -> BigInt {
    let mut s = BigInt::zero();
    for d in divisors(n) {
        let sign = ((d - 1) * (n / d - 1)) % 2 == 0;
        if sign {
            s += BigInt::from(d);
        } else {
            s -= BigInt::from(d);
        }
    }
    s * 8
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::rat_int;

    #[test]
    fn base_series_values() {
        let b = base_series(RepKind::Squares, 9);
        for (n, c) in [(0, 1), (1, 2), (4, 2), (9, 2), (2, 0), (5, 0)] {
            assert_eq!(b.q_coeff(n), rat_int(c));
        }
        let t = base_series(RepKind::Triangles, 6);
        for (n, c) in [(0, 1), (1, 1), (3, 1), (6, 1), (2, 0)] {
            assert_eq!(t.q_coeff(n), rat_int(c));
        }
    }

    #[test]
    fn product_form_matches_sum_form() {
        // Box(q) = (q^2;q^2) (-q;q^2)^2 and Tri(q) = (q;q) (-q;q)^2, to order 200.
        use crate::rat::{rat, Rat};
        use crate::series::poch;
        let n = 400;
        let sq = &poch(Rat::one(), 4, 4, n) * &poch(rat(-1, 1), 2, 4, n).pow(2);
        assert!(sq.eq_to_order(&base_series(RepKind::Squares, 200), n));
        let tri = &poch(Rat::one(), 2, 2, n) * &poch(rat(-1, 1), 2, 2, n).pow(2);
        assert!(tri.eq_to_order(&base_series(RepKind::Triangles, 200), n));
    }

    #[test]
    fn four_squares_counts() {
        let c = rep_counts(RepKind::Squares, 4, 6);
        let expect = [1, 8, 24, 32, 24, 48, 96];
        for (n, e) in expect.iter().enumerate() {
            assert_eq!(c[n], BigInt::from(*e));
        }
    }

    #[test]
    fn sixteen_squares_of_one() {
        assert_eq!(rep_counts(RepKind::Squares, 16, 1)[1], BigInt::from(32));
    }

    #[test]
    fn four_triangles_of_one() {
        assert_eq!(rep_counts(RepKind::Triangles, 4, 1)[1], BigInt::from(4));
        assert_eq!(divisor_count(DivisorFormula::T4, 1), BigInt::from(4));
    }

    #[test]
    fn enumeration_examples() {
        assert_eq!(
            count_enum(RepKind::Squares, 3, 2).unwrap(),
            BigInt::from(12)
        );
        assert_eq!(count_enum(RepKind::Squares, 2, 3).unwrap(), BigInt::zero());
        assert_eq!(
            count_enum(RepKind::Triangles, 2, 4).unwrap(),
            BigInt::from(2)
        );
        assert!(count_enum(RepKind::Squares, 9, 1).is_err());
    }

    #[test]
    fn enumeration_matches_series_powers() {
        for kind in [RepKind::Squares, RepKind::Triangles] {
            for k in 1..=5u32 {
                let counts = rep_counts(kind, k, 40);
                for n in 0..=40 {
                    assert_eq!(
                        count_enum(kind, k, n).unwrap(),
                        counts[n],
                        "{kind:?} k={k} n={n}"
                    );
                }
            }
        }
    }

    #[test]
    fn divisor_formula_examples() {
        assert_eq!(divisor_count(DivisorFormula::S4, 2), BigInt::from(24));
        assert_eq!(divisor_count(DivisorFormula::S8, 1), BigInt::from(16));
        assert_eq!(divisor_count(DivisorFormula::T8, 1), BigInt::from(8));
        assert_eq!(
            count_enum(RepKind::Triangles, 8, 1).unwrap(),
            BigInt::from(8)
        );
    }

    #[test]
    fn twisted_four_squares_equals_classical() {
        for n in 1..=500u64 {
            assert_eq!(
                four_squares_twisted(n),
                divisor_count(DivisorFormula::S4, n),
                "n = {n}"
            );
        }
    }

    #[test]
    fn counts_even_for_positive_n() {
        for k in 1..=6u32 {
            let c = rep_counts(RepKind::Squares, k, 50);
            for n in 1..=50 {
                assert!((&c[n] % 2u32).is_zero(), "k={k} n={n}");
            }
        }
    }
}
