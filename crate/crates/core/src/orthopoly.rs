//! Tangent-number moment functionals, the monic orthogonal polynomials they
//! generate, and correlation functions of the associated ensembles.
//!
//! The scalar functionals are
//! `mu_eps(x^j) = t_{j+1+eps}` (tangent numbers, `eps` in `{0,1}`), with
//! q-deformations `nu_eps = mu_eps + lambda_eps` where
//! `lambda_0(f) = 4 sum_k k q^k/(1+(-q)^k) f(-k^2)` and
//! `lambda_1(f) = 4 sum_k k^3 q^k/(1-(-q)^k) f(-k^2)`.
//!
//! Orthogonal polynomials are built only from moments (exact Gram-Schmidt
//! on the monomial basis); no external recurrences are trusted, so the
//! closed-form norm and correlation identities remain genuine checks.
//! Correlation functions are evaluated by three independent routes
//! (Christoffel-Darboux determinant, sum over squared minors, and the
//! Schur-function expansion over box-bounded partition pairs) that must
//! agree exactly.

use crate::linalg::{hankel_from_moments, ExactMatrix};
use crate::rat::{factorial, pow2, rat_int, rat_pow, Rat};
use crate::ring::Ring;
use crate::series::{lambert_sum, LambertKind, QSeries};
use crate::symfun::schur_eval;
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

#[derive(Debug, Clone, PartialEq)]
pub enum OrthopolyError {
    SingularHankel { at: usize },
    RepeatedPoint,
    RouteUnavailable { why: &'static str },
    TooFewPoints,
    UnknownId,
}

impl std::fmt::Display for OrthopolyError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            OrthopolyError::SingularHankel { at } => {
                write!(f, "Hankel determinant vanishes at index {at}")
            }
            OrthopolyError::RepeatedPoint => write!(f, "points must be pairwise distinct"),
            OrthopolyError::RouteUnavailable { why } => write!(f, "route unavailable: {why}"),
            OrthopolyError::TooFewPoints => write!(f, "more points than ensemble size"),
            OrthopolyError::UnknownId => write!(f, "unknown moment sequence id"),
        }
    }
}

impl std::error::Error for OrthopolyError {}

/// Bernoulli numbers `B_0..=B_upto` by the standard sum recurrence
/// (`B_1 = -1/2`; only `|B_{2k}|` is ever used downstream).
pub fn bernoulli(upto: usize) -> Vec<Rat> {
    let mut b: Vec<Rat> = Vec::with_capacity(upto + 1);
    for m in 0..=upto {
        if m == 0 {
            b.push(Rat::one());
            continue;
        }
        // sum_{j=0}^{m} C(m+1, j) B_j = 0
        let mut acc = Rat::zero();
        let mut binom = BigInt::one(); // C(m+1, 0)
        for (j, bj) in b.iter().enumerate() {
            acc += Rat::from_integer(binom.clone()) * bj;
            binom = &binom * BigInt::from(m + 1 - j) / BigInt::from(j + 1);
        }
        b.push(-acc / Rat::from_integer(binom));
    }
    b
}

/// Tangent numbers `t_1..=t_K`, `t_k = (4^k - 1)|B_{2k}|/k`. These are the
/// odd Taylor coefficients of `tan(x/2)` against `x^{2k-1}/(2k-1)!`.
pub fn tangent_numbers(upto: usize) -> Vec<Rat> {
    let b = bernoulli(2 * upto);
    (1..=upto)
        .map(|k| {
            let four_k = rat_pow(&rat_int(4), k as i64) - Rat::one();
            four_k * b[2 * k].abs() / rat_int(k as i64)
        })
        .collect()
}

/// Moments of the scalar functionals: `mu_eps(x^j) = t_{j+1+eps}` for
/// `j = 0..=upto`.
pub fn mu_moments(eps: usize, upto: usize) -> Vec<Rat> {
    assert!(eps <= 1);
    let t = tangent_numbers(upto + 1 + eps);
    (0..=upto).map(|j| t[j + eps].clone()).collect()
}

/// `lambda_eps(x^j)` as a q-series: `4 (-1)^j sum_k k^{2j+1+2eps} q^k / (1 -+ (-q)^k)`.
pub fn lambda_moments(eps: usize, upto: usize, q_order: usize) -> Vec<QSeries> {
    assert!(eps <= 1);
    let kind = if eps == 0 {
        LambertKind::PlusNegQ
    } else {
        LambertKind::MinusNegQ
    };
    (0..=upto)
        .map(|j| {
            let s = lambert_sum(kind, (2 * j + 1 + 2 * eps) as u32, q_order);
            let sign = if j % 2 == 0 { rat_int(4) } else { rat_int(-4) };
            s.mul_scalar(&sign)
        })
        .collect()
}

/// `nu_eps(x^j) = mu_eps(x^j) + lambda_eps(x^j)` as q-series.
pub fn nu_moments(eps: usize, upto: usize, q_order: usize) -> Vec<QSeries> {
    let mu = mu_moments(eps, upto);
    let lam = lambda_moments(eps, upto, q_order);
    mu.into_iter()
        .zip(lam)
        .map(|(m, l)| QSeries::constant(m) + l)
        .collect()
}

/// Named moment sequences, scalar or q-series valued.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MomentId {
    Mu0,
    Mu1,
    Nu0,
    Nu1,
    Lambda0,
    Lambda1,
    Tangent,
}

pub enum MomentSeq {
    Rational(Vec<Rat>),
    Series(Vec<QSeries>),
}

/// Moment sequence by id, up to index `upto`, q-series truncated at `q_order`.
pub fn moments(id: MomentId, upto: usize, q_order: usize) -> MomentSeq {
    match id {
        MomentId::Mu0 => MomentSeq::Rational(mu_moments(0, upto)),
        MomentId::Mu1 => MomentSeq::Rational(mu_moments(1, upto)),
        MomentId::Tangent => MomentSeq::Rational(tangent_numbers(upto + 1)),
        MomentId::Lambda0 => MomentSeq::Series(lambda_moments(0, upto, q_order)),
        MomentId::Lambda1 => MomentSeq::Series(lambda_moments(1, upto, q_order)),
        MomentId::Nu0 => MomentSeq::Series(nu_moments(0, upto, q_order)),
        MomentId::Nu1 => MomentSeq::Series(nu_moments(1, upto, q_order)),
    }
}

/// Monic orthogonal polynomials `p_0..p_K` with their squared norms, over
/// any exact ring with the needed inverses.
#[derive(Clone, Debug)]
pub struct MonicOps<R> {
    /// `polys[k]` holds the coefficients of `p_k`, constant term first.
    pub polys: Vec<Vec<R>>,
    /// `norms[k] = <p_k, p_k>`.
    pub norms: Vec<R>,
}

impl<R: Ring> MonicOps<R> {
    pub fn eval(&self, k: usize, x: &R) -> R {
        horner(&self.polys[k], x)
    }

    pub fn eval_deriv(&self, k: usize, x: &R) -> R {
        let d = derivative(&self.polys[k]);
        horner(&d, x)
    }
}

fn horner<R: Ring>(coeffs: &[R], x: &R) -> R {
    let mut acc = R::zero();
    for c in coeffs.iter().rev() {
        acc = acc.mul(x).add(c);
    }
    acc
}

fn derivative<R: Ring>(coeffs: &[R]) -> Vec<R> {
    coeffs
        .iter()
        .enumerate()
        .skip(1)
        .map(|(i, c)| c.scale_rat(&rat_int(i as i64)))
        .collect()
}

/// Exact Gram-Schmidt on the monomial basis: needs moments `c_0..c_{2K}`.
/// `<x^a, x^b> = c_{a+b}`; each `p_k` is monic; `SingularHankel` when a
/// squared norm is not invertible in the ring.
pub fn monic_ops<R: Ring>(c: &[R], kmax: usize) -> Result<MonicOps<R>, OrthopolyError> {
    assert!(
        c.len() >= 2 * kmax + 1,
        "need moments to index {} for K = {kmax}",
        2 * kmax
    );
    let mut polys: Vec<Vec<R>> = Vec::with_capacity(kmax + 1);
    let mut norms: Vec<R> = Vec::with_capacity(kmax + 1);
    for k in 0..=kmax {
        // start from x^k
        let mut p = vec![R::zero(); k + 1];
        p[k] = R::one();
        // subtract projections onto p_0..p_{k-1}
        for j in 0..k {
            // <x^k, p_j> = sum_i p_j[i] c_{k+i}
            let mut inner = R::zero();
            for (i, pj) in polys[j].iter().enumerate() {
                if !pj.is_zero() {
                    inner = inner.add(&pj.mul(&c[k + i]));
                }
            }
            if inner.is_zero() {
                continue;
            }
            let coef = inner
                .try_div(&norms[j])
                .ok_or(OrthopolyError::SingularHankel { at: j })?;
            for (i, pj) in polys[j].iter().enumerate() {
                p[i] = p[i].sub(&coef.mul(pj));
            }
        }
        // ||p_k||^2 = <p_k, x^k> by monicity and orthogonality
        let mut norm = R::zero();
        for (i, pi) in p.iter().enumerate() {
            if !pi.is_zero() {
                norm = norm.add(&pi.mul(&c[k + i]));
            }
        }
        polys.push(p);
        norms.push(norm);
    }
    Ok(MonicOps { polys, norms })
}

/// Monic orthogonal polynomials of the scalar functional `mu_eps`
/// (the `q = 0` family; continuous dual Hahn in classical terms).
pub fn scalar_ops(eps: usize, kmax: usize) -> MonicOps<Rat> {
    let c = mu_moments(eps, 2 * kmax);
    monic_ops(&c, kmax).expect("positive-definite tangent moments")
}

/// `prod_{i=1}^m ||p_{i-1}^{(eps)}||^2` for the scalar family.
pub fn norms_product(eps: usize, m: usize) -> Rat {
    if m == 0 {
        return Rat::one();
    }
    let ops = scalar_ops(eps, m - 1);
    ops.norms.iter().product()
}

/// Closed form the norm product must match:
/// `2^{-m(2m-1)} prod_{i<2m} i!` for `eps = 0`,
/// `2^{-m(2m+1)} prod_{i<=2m} i!` for `eps = 1`.
pub fn norms_product_closed_form(eps: usize, m: usize) -> Rat {
    let m64 = m as i64;
    if eps == 0 {
        pow2(-m64 * (2 * m64 - 1)) * crate::rat::superfactorial(2 * m as u64 - 1)
    } else {
        pow2(-m64 * (2 * m64 + 1)) * crate::rat::superfactorial(2 * m as u64)
    }
}

/// Squared norms of the q-deformed family (`nu_eps` moments), as q-series.
pub fn q_norms(eps: usize, kmax: usize, q_order: usize) -> Result<Vec<QSeries>, OrthopolyError> {
    let c = nu_moments(eps, 2 * kmax, q_order);
    let ops = monic_ops(&c, kmax)?;
    Ok(ops.norms)
}

/// Vandermonde `prod_{i<j} (x_j - x_i)`.
pub fn vandermonde(points: &[Rat]) -> Rat {
    let mut v = Rat::one();
    for i in 0..points.len() {
        for j in (i + 1)..points.len() {
            v *= &points[j] - &points[i];
        }
    }
    v
}

/// The Schur-type determinant polynomial
/// `P_{n^m}(x_1..x_m) = det(p_{n+j-1}(x_i)) / Vandermonde(x)` for the
/// scalar family. Points must be pairwise distinct.
pub fn schur_type_p(eps: usize, n_base: usize, points: &[Rat]) -> Result<Rat, OrthopolyError> {
    let m = points.len();
    for i in 0..m {
        for j in (i + 1)..m {
            if points[i] == points[j] {
                return Err(OrthopolyError::RepeatedPoint);
            }
        }
    }
    let groups: Vec<(Rat, usize)> = points.iter().map(|x| (x.clone(), 1)).collect();
    Ok(schur_type_p_confluent(eps, n_base, &groups))
}

/// Confluent version of [`schur_type_p`]: each point carries a
/// multiplicity; a point of multiplicity `r` contributes rows
/// `p(x), p'(x), p''(x)/2!, ...` and the Vandermonde degenerates to
/// `prod_{groups i<j} (y_j - y_i)^{r_i r_j}`. This is the exact limit of
/// the distinct-point quotient and is what correlation functions at
/// doubled points and the squares-family formulas consume.
pub fn schur_type_p_confluent(eps: usize, n_base: usize, groups: &[(Rat, usize)]) -> Rat {
    let m: usize = groups.iter().map(|(_, r)| *r).sum();
    if m == 0 {
        return Rat::one();
    }
    let ops = scalar_ops(eps, n_base + m - 1);
    // Taylor rows: row t of a group is the coefficient-wise t-th derivative
    // over t!.
    let mut rows: Vec<Vec<Rat>> = Vec::with_capacity(m);
    for (y, r) in groups {
        for t in 0..*r {
            let mut row = Vec::with_capacity(m);
            for j in 0..m {
                let mut coeffs = ops.polys[n_base + j].clone();
                for s in 0..t {
                    coeffs = derivative(&coeffs);
                    let inv = rat_int((s + 1) as i64).recip();
                    for c in coeffs.iter_mut() {
                        *c *= &inv;
                    }
                }
                row.push(horner(&coeffs, y));
            }
            rows.push(row);
        }
    }
    let det = ExactMatrix::from_rows(rows)
        .expect("square by construction")
        .determinant_bareiss();
    let mut denom = Rat::one();
    for i in 0..groups.len() {
        for j in (i + 1)..groups.len() {
            let d = &groups[j].0 - &groups[i].0;
            denom *= rat_pow(&d, (groups[i].1 * groups[j].1) as i64);
        }
    }
    det / denom
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CorrelationRoute {
    ChristoffelDarboux,
    SumOfSquares,
    SchurExpansion,
}

/// Normalized correlation function `C_s^{n,eps}(x_1..x_s)` of the ensemble
/// attached to `mu_eps` with `n` points. All three routes agree exactly;
/// only the Christoffel-Darboux route accepts coincident points (via the
/// confluent determinant limit).
pub fn correlation_eval(
    eps: usize,
    n: usize,
    points: &[Rat],
    route: CorrelationRoute,
) -> Result<Rat, OrthopolyError> {
    let s = points.len();
    if s > n {
        return Err(OrthopolyError::TooFewPoints);
    }
    if s == 0 {
        return Ok(Rat::one());
    }
    let mut distinct = true;
    for i in 0..s {
        for j in (i + 1)..s {
            if points[i] == points[j] {
                distinct = false;
            }
        }
    }
    match route {
        CorrelationRoute::ChristoffelDarboux => {
            if distinct {
                correlation_cd(eps, n, points)
            } else {
                Ok(correlation_confluent(eps, n, points))
            }
        }
        CorrelationRoute::SumOfSquares => {
            if !distinct {
                return Err(OrthopolyError::RepeatedPoint);
            }
            correlation_sumsq(eps, n, points)
        }
        CorrelationRoute::SchurExpansion => {
            if !distinct {
                return Err(OrthopolyError::RepeatedPoint);
            }
            correlation_schur(eps, n, points)
        }
    }
}

fn correlation_cd(eps: usize, n: usize, points: &[Rat]) -> Result<Rat, OrthopolyError> {
    let s = points.len();
    let ops = scalar_ops(eps, n);
    let kernel = ExactMatrix::from_fn(s, |i, j| {
        if i == j {
            // limit entry: p_n'(x) p_{n-1}(x) - p_{n-1}'(x) p_n(x)
            let x = &points[i];
            ops.eval_deriv(n, x) * ops.eval(n - 1, x) - ops.eval_deriv(n - 1, x) * ops.eval(n, x)
        } else {
            let (xi, xj) = (&points[i], &points[j]);
            (ops.eval(n, xi) * ops.eval(n - 1, xj) - ops.eval(n - 1, xi) * ops.eval(n, xj))
                / (xi - xj)
        }
    });
    let det = kernel.determinant_bareiss();
    let v = vandermonde(points);
    let norm = rat_pow(&ops.norms[n - 1], s as i64);
    Ok(det / (norm * &v * &v))
}

fn correlation_sumsq(eps: usize, n: usize, points: &[Rat]) -> Result<Rat, OrthopolyError> {
    let s = points.len();
    let ops = scalar_ops(eps, n.saturating_sub(1));
    let v = vandermonde(points);
    let mut total = Rat::zero();
    // all strictly increasing s-subsets of 0..n
    let mut subset: Vec<usize> = (0..s).collect();
    loop {
        let det = ExactMatrix::from_fn(s, |i, j| ops.eval(subset[i], &points[j]))
            .determinant_bareiss();
        let mut norm = Rat::one();
        for &k in &subset {
            norm *= &ops.norms[k];
        }
        total += &det * &det / norm;
        // next subset
        let mut i = s;
        loop {
            if i == 0 {
                return Ok(total / (&v * &v));
            }
            i -= 1;
            if subset[i] < n - (s - i) {
                subset[i] += 1;
                for j in i + 1..s {
                    subset[j] = subset[j - 1] + 1;
                }
                break;
            }
        }
    }
}

fn correlation_schur(eps: usize, n: usize, points: &[Rat]) -> Result<Rat, OrthopolyError> {
    let s = points.len();
    let c = mu_moments(eps, 2 * n - 2);
    let ops = scalar_ops(eps, n - 1);
    let norm_all: Rat = ops.norms.iter().product();
    let boxed = box_partitions(s, n - s);
    let mut total = Rat::zero();
    for lam in &boxed {
        let s_lam = schur_eval(&to_u64(lam), points);
        let rows = complement_indices(lam, s, n);
        for mu in &boxed {
            let s_mu = schur_eval(&to_u64(mu), points);
            let cols = complement_indices(mu, s, n);
            let minor = ExactMatrix::from_fn(n - s, |i, j| c[rows[i] + cols[j] - 2].clone())
                .determinant_bareiss();
            let weight: i64 = (lam.iter().sum::<i64>() + mu.iter().sum::<i64>()) % 2;
            let term = &s_lam * &s_mu * minor / &norm_all;
            total += if weight == 0 { term } else { -term };
        }
    }
    Ok(total)
}

/// Correlation at coincident points: the confluent Schur-type determinant
/// with every point doubled, normalized by the top norms.
fn correlation_confluent(eps: usize, n: usize, points: &[Rat]) -> Rat {
    let s = points.len();
    // group points by value, multiplicity 2 * count
    let mut groups: Vec<(Rat, usize)> = Vec::new();
    for x in points {
        match groups.iter_mut().find(|(y, _)| y == x) {
            Some((_, r)) => *r += 2,
            None => groups.push((x.clone(), 2)),
        }
    }
    let p = schur_type_p_confluent(eps, n - s, &groups);
    let ops = scalar_ops(eps, n - 1);
    let mut norm = Rat::one();
    for i in 1..=s {
        norm *= &ops.norms[n - i];
    }
    p / norm
}

/// Weakly decreasing sequences of length `s` with entries in `0..=cap`.
fn box_partitions(s: usize, cap: usize) -> Vec<Vec<i64>> {
    let mut out = Vec::new();
    let mut cur = vec![0i64; s];
    fn rec(out: &mut Vec<Vec<i64>>, cur: &mut Vec<i64>, idx: usize, maxval: i64) {
        if idx == cur.len() {
            out.push(cur.clone());
            return;
        }
        for v in 0..=maxval {
            cur[idx] = v;
            rec(out, cur, idx + 1, v);
        }
    }
    rec(&mut out, &mut cur, 0, cap as i64);
    // generated weakly increasing constraint downward; entries are
    // lambda_1 >= ... >= lambda_s by construction (maxval shrinks)
    out
}

fn to_u64(v: &[i64]) -> Vec<u64> {
    v.iter().map(|&x| x as u64).collect()
}

/// `[n] - S` with `S = {lam_k + s + 1 - k}`, 1-based, sorted ascending.
fn complement_indices(lam: &[i64], s: usize, n: usize) -> Vec<usize> {
    let set: std::collections::BTreeSet<usize> = lam
        .iter()
        .enumerate()
        .map(|(idx, &l)| l as usize + s - idx) // k = idx+1: lam_k + s + 1 - k
        .collect();
    (1..=n).filter(|i| !set.contains(i)).collect()
}

/// Merged even/odd family: `p_{2k}(x) = p_k^{(0)}(x^2)`,
/// `p_{2k+1}(x) = x p_k^{(1)}(x^2)`. Returns coefficient vectors.
pub fn merged_meixner_pollaczek(kmax: usize) -> Vec<Vec<Rat>> {
    let even = scalar_ops(0, kmax / 2 + 1);
    let odd = scalar_ops(1, kmax / 2 + 1);
    let mut out = Vec::with_capacity(kmax + 1);
    for k in 0..=kmax {
        let (src, shift) = if k % 2 == 0 {
            (&even.polys[k / 2], 0)
        } else {
            (&odd.polys[k / 2], 1)
        };
        let mut coeffs = vec![Rat::zero(); k + 1];
        for (i, c) in src.iter().enumerate() {
            coeffs[2 * i + shift] = c.clone();
        }
        out.push(coeffs);
    }
    out
}
