//! Schur-type functions at exact rational points.
//!
//! - [`s_mu_eval`]: the bialternant `S_mu = det(x_j^{mu_i}) / prod_{i<j}(x_i - x_j)`
//!   for integer labels `mu` (negative entries allowed).
//! - [`s_at_ones`]: its principal specialization
//!   `S_mu(1^m) = prod_{i<j} (mu_i - mu_j)/(j - i)`.
//! - [`schur_eval`]: Schur polynomials `s_lambda`, routed through the
//!   bialternant at distinct points and through a Jacobi-Trudi determinant
//!   in complete homogeneous functions when points repeat.
//! - [`q_lambda_eval`]: Schur Q-polynomials with integer (possibly
//!   negative) labels, from the signed symmetrization formula with
//!   `floor((n-m)/2)` difference-quotient pair factors.
//! - [`q_balanced_at_ones`]: `Q_{(k_1..k_m,-k_m..-k_1)}(1^{2n})` and
//!   `(1^{2n+1})`, which degenerate at coincident points and are therefore
//!   evaluated through correlation functions of the tangent-moment
//!   orthogonal polynomial ensembles.

use crate::linalg::{ExactMatrix, Permutations};
use crate::orthopoly::{self, CorrelationRoute};
use crate::rat::{factorial, rat_int, rat_pow, Rat};
use num_traits::{One, Zero};

#[derive(Debug, Clone, PartialEq)]
pub enum SymfunError {
    RepeatedPoint,
    ZeroPointWithNegativeExponent,
    NotStrictlyDecreasing,
    AntipodalPoints,
    TooManyVariables { n: usize, bound: usize },
    LabelNotStrict,
    LabelLongerThanPoints,
}

impl std::fmt::Display for SymfunError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            SymfunError::RepeatedPoint => write!(f, "points must be pairwise distinct"),
            SymfunError::ZeroPointWithNegativeExponent => {
                write!(f, "negative label entries need nonzero points")
            }
            SymfunError::NotStrictlyDecreasing => write!(f, "label must be strictly decreasing"),
            SymfunError::AntipodalPoints => write!(f, "points x_i = -x_j are not allowed"),
            SymfunError::TooManyVariables { n, bound } => {
                write!(f, "{n} variables exceeds the factorial-sum bound {bound}")
            }
            SymfunError::LabelNotStrict => write!(f, "label entries must satisfy k_1 > ... > k_m >= 1"),
            SymfunError::LabelLongerThanPoints => write!(f, "label longer than the point vector"),
        }
    }
}

impl std::error::Error for SymfunError {}

const FACTORIAL_SUM_BOUND: usize = 8;

/// Vandermonde-style product `prod_{i<j} (x_i - x_j)`.
fn vandermonde_upper(xs: &[Rat]) -> Rat {
    let mut v = Rat::one();
    for i in 0..xs.len() {
        for j in (i + 1)..xs.len() {
            v *= &xs[i] - &xs[j];
        }
    }
    v
}

/// `S_mu(xs) = det(x_j^{mu_i}) / prod_{i<j}(x_i - x_j)`, exactly.
pub fn s_mu_eval(mu: &[i64], xs: &[Rat]) -> Result<Rat, SymfunError> {
    let m = mu.len();
    assert_eq!(m, xs.len(), "label and point vector must have equal length");
    for i in 0..m {
        for j in (i + 1)..m {
            if xs[i] == xs[j] {
                return Err(SymfunError::RepeatedPoint);
            }
        }
    }
    if mu.iter().any(|&e| e < 0) && xs.iter().any(|x| x.is_zero()) {
        return Err(SymfunError::ZeroPointWithNegativeExponent);
    }
    if m == 0 {
        return Ok(Rat::one());
    }
    let matrix = ExactMatrix::from_fn(m, |i, j| rat_pow(&xs[j], mu[i]));
    Ok(matrix.determinant_bareiss() / vandermonde_upper(xs))
}

/// `S_mu(1^m) = prod_{i<j} (mu_i - mu_j)/(j - i)` for strictly decreasing `mu`.
pub fn s_at_ones(mu: &[i64]) -> Result<Rat, SymfunError> {
    if mu.windows(2).any(|w| w[0] <= w[1]) {
        return Err(SymfunError::NotStrictlyDecreasing);
    }
    let m = mu.len();
    let mut v = Rat::one();
    for i in 0..m {
        for j in (i + 1)..m {
            v *= rat_int(mu[i] - mu[j]) / rat_int((j - i) as i64);
        }
    }
    Ok(v)
}

/// Complete homogeneous symmetric polynomials `h_0..h_k` at the given
/// points, from the generating product `prod_i 1/(1 - x_i t)`.
fn complete_homogeneous(xs: &[Rat], k: usize) -> Vec<Rat> {
    let mut h = vec![Rat::zero(); k + 1];
    h[0] = Rat::one();
    for x in xs {
        // multiply by 1/(1 - x t): prefix-sum with ratio x
        for d in 1..=k {
            let t = &h[d - 1] * x;
            h[d] += t;
        }
    }
    h
}

/// Schur polynomial `s_lambda(xs)`. Distinct points go through the
/// bialternant; repeated points fall back to the Jacobi-Trudi determinant
/// `det(h_{lambda_i - i + j})`, which is insensitive to coincidences.
pub fn schur_eval(lambda: &[u64], xs: &[Rat]) -> Rat {
    let m = xs.len();
    let mut lam: Vec<u64> = lambda.to_vec();
    while lam.len() < m {
        lam.push(0);
    }
    assert!(
        lam.len() == m,
        "partition has more parts than there are variables"
    );
    let distinct = (0..m).all(|i| (i + 1..m).all(|j| xs[i] != xs[j]));
    if distinct && !xs.is_empty() {
        let mu: Vec<i64> = lam
            .iter()
            .enumerate()
            .map(|(i, &l)| l as i64 + (m - 1 - i) as i64)
            .collect();
        return s_mu_eval(&mu, xs).expect("distinct points cannot fail the bialternant");
    }
    if lam.iter().all(|&l| l == 0) {
        return Rat::one();
    }
    let r = lam.iter().position(|&l| l == 0).unwrap_or(lam.len());
    let lam = &lam[..r];
    let maxdeg = (lam[0] as usize) + r;
    let h = complete_homogeneous(xs, maxdeg);
    let matrix = ExactMatrix::from_fn(r, |i, j| {
        let e = lam[i] as i64 - i as i64 + j as i64;
        if e < 0 {
            Rat::zero()
        } else {
            h[e as usize].clone()
        }
    });
    matrix.determinant_bareiss()
}

fn check_q_points(xs: &[Rat]) -> Result<(), SymfunError> {
    let n = xs.len();
    if n > FACTORIAL_SUM_BOUND {
        return Err(SymfunError::TooManyVariables {
            n,
            bound: FACTORIAL_SUM_BOUND,
        });
    }
    if xs.iter().any(|x| x.is_zero()) {
        return Err(SymfunError::ZeroPointWithNegativeExponent);
    }
    for i in 0..n {
        for j in (i + 1)..n {
            if xs[i] == xs[j] {
                return Err(SymfunError::RepeatedPoint);
            }
            if xs[i] == -xs[j].clone() {
                return Err(SymfunError::AntipodalPoints);
            }
        }
    }
    Ok(())
}

/// Schur Q-polynomial `Q_lambda(xs)` for an integer label of length
/// `m <= n = xs.len()`, from the signed symmetrization with
/// `k = floor((n-m)/2)` pair factors:
///
/// `Q = (2^{m-k}/k!) prod_{i<j} (x_i+x_j)/(x_i-x_j) *
///  sum_{sigma} sgn(sigma) prod_i x_{sigma(i)}^{lambda_i}
///  prod_i (x_{sigma(m+2i-1)} - x_{sigma(m+2i)})/(x_{sigma(m+2i-1)} + x_{sigma(m+2i)})`.
pub fn q_lambda_eval(lambda: &[i64], xs: &[Rat]) -> Result<Rat, SymfunError> {
    let n = xs.len();
    let m = lambda.len();
    if m > n {
        return Err(SymfunError::LabelLongerThanPoints);
    }
    check_q_points(xs)?;
    if m == 0 && n == 0 {
        return Ok(Rat::one());
    }
    let k = (n - m) / 2;
    let mut total = Rat::zero();
    for (perm, sign) in Permutations::new(n) {
        let mut term = Rat::one();
        for (i, &l) in lambda.iter().enumerate() {
            term *= rat_pow(&xs[perm[i]], l);
        }
        for i in 0..k {
            let a = &xs[perm[m + 2 * i]];
            let b = &xs[perm[m + 2 * i + 1]];
            term *= (a - b) / (a + b);
        }
        total += if sign { term } else { -term };
    }
    let mut prefactor = crate::rat::pow2(m as i64 - k as i64) / factorial(k as u64);
    for i in 0..n {
        for j in (i + 1)..n {
            prefactor *= (&xs[i] + &xs[j]) / (&xs[i] - &xs[j]);
        }
    }
    Ok(prefactor * total)
}

/// `Q_lambda` straight from the coset-symmetrization definition
/// `2^m sum_{sigma in S_n/S_{n-m}} sigma(x_1^{l_1}..x_m^{l_m}
/// prod_{i<=m, i<j<=n} (x_i+x_j)/(x_i-x_j))`. Quadratic cross-check for
/// [`q_lambda_eval`]; same preconditions.
pub fn q_lambda_direct(lambda: &[i64], xs: &[Rat]) -> Result<Rat, SymfunError> {
    let n = xs.len();
    let m = lambda.len();
    if m > n {
        return Err(SymfunError::LabelLongerThanPoints);
    }
    check_q_points(xs)?;
    let mut total = Rat::zero();
    for (perm, _) in Permutations::new(n) {
        let mut term = Rat::one();
        for (i, &l) in lambda.iter().enumerate() {
            term *= rat_pow(&xs[perm[i]], l);
        }
        for i in 0..m {
            for j in (i + 1)..n {
                term *= (&xs[perm[i]] + &xs[perm[j]]) / (&xs[perm[i]] - &xs[perm[j]]);
            }
        }
        total += term;
    }
    // Summing over all of S_n overcounts each coset by (n-m)!.
    Ok(crate::rat::pow2(m as i64) * total / factorial((n - m) as u64))
}

/// Balanced-label Q-polynomial at all-ones points:
/// `Q_{(k_1..k_m,-k_m..-k_1)}(1^{2n})` (parity `Even`) or `(1^{2n+1})`
/// (parity `Odd`), via the correlation-function specialization
/// `8^m prod k_i^{1 or 3} prod (k_i^2-k_j^2)^2 * (+-) C_m^{n,eps}(-k^2)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OnesParity {
    Even,
    Odd,
}

pub fn q_balanced_at_ones(ks: &[u64], n: usize, parity: OnesParity) -> Result<Rat, SymfunError> {
    if ks.windows(2).any(|w| w[0] <= w[1]) || ks.iter().any(|&k| k == 0) {
        return Err(SymfunError::LabelNotStrict);
    }
    let m = ks.len();
    if m > n {
        return Err(SymfunError::LabelLongerThanPoints);
    }
    if m == 0 {
        return Ok(Rat::one());
    }
    let eps = match parity {
        OnesParity::Even => 0,
        OnesParity::Odd => 1,
    };
    let points: Vec<Rat> = ks.iter().map(|&k| -rat_int((k * k) as i64)).collect();
    let corr = orthopoly::correlation_eval(eps, n, &points, CorrelationRoute::SumOfSquares)
        .expect("distinct negative squares are valid correlation points");
    let mut v = crate::rat::pow2(3 * m as i64) * corr;
    for &k in ks {
        v *= rat_pow(&rat_int(k as i64), 1 + 2 * eps as i64);
    }
    for i in 0..m {
        for j in (i + 1)..m {
            let d = rat_int((ks[i] * ks[i]) as i64) - rat_int((ks[j] * ks[j]) as i64);
            v *= &d * &d;
        }
    }
    if eps == 1 && m % 2 == 1 {
        v = -v;
    }
    Ok(v)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::rat;
    use proptest::prelude::*;
    use crate::testutil::lagrange_at_zero;

    #[test]
    fn bialternant_examples() {
        // mu = (2,0) at (3,1): (9-1)/(3-1) = 4
        assert_eq!(
            s_mu_eval(&[2, 0], &[rat(3, 1), rat(1, 1)]).unwrap(),
            rat(4, 1)
        );
        // mu = (1,0): det [[x1,x2],[1,1]]/(x1-x2) = 1
        assert_eq!(
            s_mu_eval(&[1, 0], &[rat(5, 1), rat(-2, 3)]).unwrap(),
            Rat::one()
        );
    }

    #[test]
    fn shift_law() {
        // mu + (a..a) multiplies by (x1..xm)^a
        let xs = [rat(3, 2), rat(-5, 1), rat(7, 3)];
        let mu = [4i64, 1, -2];
        let shifted: Vec<i64> = mu.iter().map(|e| e + 3).collect();
        let base = s_mu_eval(&mu, &xs).unwrap();
        let prod: Rat = xs.iter().product();
        assert_eq!(
            s_mu_eval(&shifted, &xs).unwrap(),
            base * rat_pow(&prod, 3)
        );
    }

    #[test]
    fn at_ones_examples() {
        assert_eq!(s_at_ones(&[2, 0]).unwrap(), rat(2, 1));
        assert_eq!(s_at_ones(&[0]).unwrap(), Rat::one());
        assert!(matches!(
            s_at_ones(&[1, 1]),
            Err(SymfunError::NotStrictlyDecreasing)
        ));
    }

    #[test]
    fn balanced_at_ones_two_routes() {
        // S_{(k1..km,-km..-k1)}(1^{2m}) = 2^m prod k_i prod (k_j^2-k_i^2)^2 / prod_{i<2m} i!
        // For (k1,k2) = (2,1): both routes give 6.
        let hlf = s_at_ones(&[2, 1, -1, -2]).unwrap();
        assert_eq!(hlf, rat(6, 1));
        let display = crate::rat::pow2(2) * rat(2, 1) * rat(9, 1)
            / (factorial(1) * factorial(2) * factorial(3));
        assert_eq!(display, rat(6, 1));
    }

    #[test]
    fn at_ones_matches_bialternant_limit() {
        // Oracle for the specialization: evaluate the bialternant at distinct
        // points approaching 1 along an exact interpolation in delta.
        // S_mu along x_i = 1 + i*delta is a polynomial in delta; its value at
        // delta = 0 is S_mu(1^m).
        let mu = [3i64, 1, 0];
        let expected = s_at_ones(&mu).unwrap();
        // Interpolate through enough exact sample points.
        let samples: Vec<(Rat, Rat)> = (1..=12)
            .map(|t| {
                let delta = rat(1, 3 * t);
                let xs: Vec<Rat> = (1..=3)
                    .map(|i| Rat::one() + rat_int(i) * &delta)
                    .collect();
                (delta, s_mu_eval(&mu, &xs).unwrap())
            })
            .collect();
        assert_eq!(lagrange_at_zero(&samples), expected);
    }

    #[test]
    fn schur_polynomial_examples() {
        assert_eq!(
            schur_eval(&[1], &[rat(4, 1), rat(1, 1)]),
            rat(5, 1) // k1^2 + k2^2 with x = squares
        );
        assert_eq!(schur_eval(&[2], &[rat(1, 1), rat(1, 1)]), rat(3, 1));
        assert_eq!(schur_eval(&[], &[rat(2, 1), rat(7, 1)]), Rat::one());
        // Repeated-point fallback agrees with the bialternant nearby:
        // s_(2,1)(x, y) at distinct points vs the h-determinant.
        let xs = [rat(2, 1), rat(3, 1)];
        let via_bialternant = schur_eval(&[2, 1], &xs);
        let h = complete_homogeneous(&xs, 3);
        let jt = &h[2] * &h[2] - &h[3] * &h[1];
        assert_eq!(via_bialternant, jt);
    }

    #[test]
    fn q_polynomial_examples() {
        // Q_(1)(x,y) = 2(x+y)
        assert_eq!(
            q_lambda_eval(&[1], &[rat(2, 1), rat(1, 1)]).unwrap(),
            rat(6, 1)
        );
        // Q_(k,-k)(2,1) = 12(2^k - 2^-k)
        for k in 1..=3i64 {
            let expect = rat(12, 1) * (rat_pow(&rat(2, 1), k) - rat_pow(&rat(2, 1), -k));
            assert_eq!(
                q_lambda_eval(&[k, -k], &[rat(2, 1), rat(1, 1)]).unwrap(),
                expect,
                "k = {k}"
            );
        }
        // Empty label
        assert_eq!(
            q_lambda_eval(&[], &[rat(2, 1), rat(1, 1)]).unwrap(),
            Rat::one()
        );
    }

    #[test]
    fn q_eval_consistent_with_direct_definition() {
        let points: [&[Rat]; 3] = [
            &[rat(2, 1), rat(1, 1), rat(5, 1)],
            &[rat(3, 1), rat(1, 2), rat(-2, 5), rat(7, 1)],
            &[rat(1, 1), rat(4, 3)],
        ];
        let labels: [&[i64]; 4] = [&[1], &[2, -2], &[3, 1], &[2]];
        for xs in points {
            for lam in labels {
                if lam.len() > xs.len() {
                    continue;
                }
                assert_eq!(
                    q_lambda_eval(lam, xs).unwrap(),
                    q_lambda_direct(lam, xs).unwrap(),
                    "lambda = {lam:?}, xs = {xs:?}"
                );
            }
        }
    }

    #[test]
    fn q_point_preconditions() {
        assert!(matches!(
            q_lambda_eval(&[1], &[rat(2, 1), rat(-2, 1)]),
            Err(SymfunError::AntipodalPoints)
        ));
        assert!(matches!(
            q_lambda_eval(&[1], &[rat(2, 1), rat(2, 1)]),
            Err(SymfunError::RepeatedPoint)
        ));
        let nine: Vec<Rat> = (1..=9).map(|i| rat(i, 1)).collect();
        assert!(matches!(
            q_lambda_eval(&[1], &nine),
            Err(SymfunError::TooManyVariables { .. })
        ));
    }

    #[test]
    fn balanced_ones_examples() {
        // Q_(1,-1)(1,1) = 16, Q_(2,-2)(1,1) = 32, Q_empty = 1
        assert_eq!(
            q_balanced_at_ones(&[1], 1, OnesParity::Even).unwrap(),
            rat(16, 1)
        );
        assert_eq!(
            q_balanced_at_ones(&[2], 1, OnesParity::Even).unwrap(),
            rat(32, 1)
        );
        assert_eq!(
            q_balanced_at_ones(&[], 1, OnesParity::Even).unwrap(),
            Rat::one()
        );
    }

    #[test]
    fn balanced_ones_limit_oracle() {
        // Q_(k,-k)(x,y) -> Q_(k,-k)(1,1): exact limit via interpolation of
        // Q * (xy)^k (a polynomial) along x = 1+d, y = 1+2d.
        for k in 1..=3i64 {
            let expected = q_balanced_at_ones(&[k as u64], 1, OnesParity::Even).unwrap();
            let deg = (4 * k + 2) as usize;
            let samples: Vec<(Rat, Rat)> = (1..=deg + 1)
                .map(|t| {
                    let d = rat(1, (t + 1) as i64);
                    let x = Rat::one() + &d;
                    let y = Rat::one() + rat(2, 1) * &d;
                    let q = q_lambda_eval(&[k, -k], &[x.clone(), y.clone()]).unwrap();
                    (d, q * rat_pow(&(x * y), k))
                })
                .collect();
            assert_eq!(lagrange_at_zero(&samples), expected, "k = {k}");
        }
    }

    #[test]
    fn balanced_ones_limit_oracle_four_points() {
        // Same for 2n = 4 points, m = 1.
        let k = 1i64;
        let expected = q_balanced_at_ones(&[1], 2, OnesParity::Even).unwrap();
        let deg = 12usize;
        let samples: Vec<(Rat, Rat)> = (1..=deg + 1)
            .map(|t| {
                let d = rat(1, (t + 2) as i64);
                let xs: Vec<Rat> = (1..=4).map(|i| Rat::one() + rat_int(i) * &d).collect();
                let q = q_lambda_eval(&[k, -k], &xs).unwrap();
                let prod: Rat = xs.iter().product();
                (d, q * rat_pow(&prod, k))
            })
            .collect();
        assert_eq!(lagrange_at_zero(&samples), expected);
    }

    proptest! {
        #[test]
        fn bialternant_antisymmetry(a in -4i64..=4, b in -4i64..=4, c in -4i64..=4) {
            let mu = [a, b, c];
            let xs = [rat(2, 1), rat(3, 1), rat(5, 1)];
            let swapped = [b, a, c];
            let v1 = s_mu_eval(&mu, &xs).unwrap();
            let v2 = s_mu_eval(&swapped, &xs).unwrap();
            if a == b {
                prop_assert!(v1.is_zero());
            } else {
                prop_assert_eq!(v1, -v2);
            }
        }

        #[test]
        fn balanced_label_sign(k1 in 2u64..=5, d in 1u64..=3) {
            // S_((-k1,k1,-k2,k2) interleaved) = (-1)^m S_(k1,k2,-k2,-k1)
            let k2 = k1 + d;
            let xs = [rat(2,1), rat(3,1), rat(5,1), rat(7,1)];
            let inter = [-(k2 as i64), k2 as i64, -(k1 as i64), k1 as i64];
            let sorted = [k2 as i64, k1 as i64, -(k1 as i64), -(k2 as i64)];
            let lhs = s_mu_eval(&inter, &xs).unwrap();
            let rhs = s_mu_eval(&sorted, &xs).unwrap();
            prop_assert_eq!(lhs, rhs); // (-1)^2 = +1 for m = 2
        }
    }
}
