//! The squared-difference coefficient polynomials `A_m^{+-}` and the
//! Eisenstein-type series `E^{+-}(2k)` used by the modular-forms variant of
//! the squares formulas.
//!
//! `A_m^+` collects the monomial coefficients of
//! `prod x_i prod_{i<j} (x_j^2 - x_i^2)^2`, `A_m^-` the same with `x_i^3`.
//! `E^+(2k)` and `E^-(2k)` are explicit combinations of a Bernoulli
//! constant with divisor-power sums at `q`, `q^2`, and `q^4`.

use crate::orthopoly::bernoulli;
use crate::rat::{rat_int, Rat};
use crate::series::QSeries;
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use std::collections::BTreeMap;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OnoSign {
    Plus,
    Minus,
}

/// Sparse expansion of `prod x_i^(1 or 3) prod_{i<j} (x_j^2 - x_i^2)^2`
/// as exponent-vector -> integer coefficient.
pub fn ono_a(sign: OnoSign, m: usize) -> BTreeMap<Vec<u32>, BigInt> {
    let base = match sign {
        OnoSign::Plus => 1u32,
        OnoSign::Minus => 3u32,
    };
    let mut poly: BTreeMap<Vec<u32>, BigInt> = BTreeMap::new();
    poly.insert(vec![base; m], BigInt::one());
    for i in 0..m {
        for j in (i + 1)..m {
            for _ in 0..2 {
                // multiply by (x_j^2 - x_i^2)
                let mut next: BTreeMap<Vec<u32>, BigInt> = BTreeMap::new();
                for (exps, c) in &poly {
                    let mut ej = exps.clone();
                    ej[j] += 2;
                    *next.entry(ej).or_default() += c;
                    let mut ei = exps.clone();
                    ei[i] += 2;
                    *next.entry(ei).or_default() -= c;
                }
                next.retain(|_, c| !c.is_zero());
                poly = next;
            }
        }
    }
    poly
}

fn sigma_series(power: u32, exponent_scale: usize, alternating: bool, n: usize) -> QSeries {
    // sum_{j>=1} (-1)^{j (if alternating)} sigma_power(j) q^{scale * j},
    // accumulated divisor-by-divisor.
    let mut qc = vec![Rat::zero(); n + 1];
    for d in 1..=(n / exponent_scale.max(1)) {
        let dp = Rat::from_integer(BigInt::from(d).pow(power));
        let mut j = d;
        while exponent_scale * j <= n {
            if alternating && j % 2 == 1 {
                qc[exponent_scale * j] -= &dp;
            } else {
                qc[exponent_scale * j] += &dp;
            }
            j += d;
        }
    }
    QSeries::from_q_coeffs(&qc)
}

/// `E^+(2k)` or `E^-(2k)` to q-order `N`.
pub fn ono_e(sign: OnoSign, two_k: u32, n: usize) -> QSeries {
    assert!(two_k >= 2 && two_k % 2 == 0);
    let k = (two_k / 2) as usize;
    let b = bernoulli(2 * k);
    let mut konst = b[2 * k].abs() / rat_int(4 * k as i64);
    if k % 2 == 1 {
        konst = -konst;
    }
    let p = two_k - 1;
    match sign {
        OnoSign::Plus => {
            // 2^{4k-1}(c + sum sigma q^{4n}) - 2^{2k-1}(c + sum sigma q^n)
            let a = QSeries::constant(konst.clone()) + sigma_series(p, 4, false, n);
            let bqs = QSeries::constant(konst) + sigma_series(p, 1, false, n);
            a.mul_scalar(&crate::rat::pow2(4 * k as i64 - 1))
                - bqs.mul_scalar(&crate::rat::pow2(2 * k as i64 - 1))
        }
        OnoSign::Minus => {
            // 2^{2k}(c + sum sigma q^{2n}) - (c + sum (-1)^n sigma q^n)
            let a = QSeries::constant(konst.clone()) + sigma_series(p, 2, false, n);
            let bqs = QSeries::constant(konst) + sigma_series(p, 1, true, n);
            a.mul_scalar(&crate::rat::pow2(2 * k as i64)) - bqs
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::rat;

    #[test]
    fn a_polynomials_small() {
        // A_1^+ = {(1): 1}
        let a1 = ono_a(OnoSign::Plus, 1);
        assert_eq!(a1.len(), 1);
        assert_eq!(a1[&vec![1u32]], BigInt::one());
        // A_2^+ : x1 x2 (x2^2 - x1^2)^2 = x1 x2^5 - 2 x1^3 x2^3 + x1^5 x2
        let a2 = ono_a(OnoSign::Plus, 2);
        assert_eq!(a2[&vec![1u32, 5]], BigInt::one());
        assert_eq!(a2[&vec![3u32, 3]], BigInt::from(-2));
        assert_eq!(a2[&vec![5u32, 1]], BigInt::one());
        assert_eq!(a2.len(), 3);
        // A_1^- = {(3): 1}
        let am = ono_a(OnoSign::Minus, 1);
        assert_eq!(am[&vec![3u32]], BigInt::one());
    }

    #[test]
    fn e_plus_two_constant() {
        // E+(2) constant term = (8-2) * (-|B_2|/4) = -1/4
        let e = ono_e(OnoSign::Plus, 2, 4);
        assert_eq!(e.q_coeff(0), rat(-1, 4));
        // -4 E+(2) matches Box^4 at orders 0..4
        let lhs = e.mul_scalar(&rat(-4, 1));
        let sq4 = crate::oracle::rep_series(crate::oracle::RepKind::Squares, 4, 4);
        assert!(lhs.eq_to_order(&sq4, 8));
    }

    #[test]
    fn e_minus_four_matches_eight_squares() {
        // 16 E-(4) = Box^8 at small order
        let e = ono_e(OnoSign::Minus, 4, 6);
        let lhs = e.mul_scalar(&rat(16, 1));
        let sq8 = crate::oracle::rep_series(crate::oracle::RepKind::Squares, 8, 6);
        assert!(lhs.eq_to_order(&sq8, 12));
    }

    #[test]
    fn a_plus_matches_vandermonde_square_coefficients() {
        // A_m^+(2k_1+1, ..., 2k_m+1) equals the coefficient of
        // prod y_i^{k_i} in prod_{i<j} (y_j - y_i)^2.
        let m = 3usize;
        let a = ono_a(OnoSign::Plus, m);
        // expand prod (y_j - y_i)^2
        let mut poly: BTreeMap<Vec<u32>, BigInt> = BTreeMap::new();
        poly.insert(vec![0; m], BigInt::one());
        for i in 0..m {
            for j in (i + 1)..m {
                for _ in 0..2 {
                    let mut next: BTreeMap<Vec<u32>, BigInt> = BTreeMap::new();
                    for (e, c) in &poly {
                        let mut ej = e.clone();
                        ej[j] += 1;
                        *next.entry(ej).or_default() += c;
                        let mut ei = e.clone();
                        ei[i] += 1;
                        *next.entry(ei).or_default() -= c;
                    }
                    next.retain(|_, c| !c.is_zero());
                    poly = next;
                }
            }
        }
        for (e, c) in &poly {
            let key: Vec<u32> = e.iter().map(|&k| 2 * k + 1).collect();
            assert_eq!(a.get(&key), Some(c), "exponents {e:?}");
        }
        assert_eq!(a.len(), poly.len());
    }
}
