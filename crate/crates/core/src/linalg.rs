//! Exact determinants, pfaffians, and Hankel matrices over any [`Ring`].
//!
//! The pfaffian follows the symmetrized-sum definition
//! `pf(A) = 1/(2^M M!) sum_{sigma} sgn(sigma) prod a_{sigma(2i-1),sigma(2i)}`
//! with `M = floor(m/2)`, which for odd `m` is the normalized variant equal
//! to the even pfaffian of the matrix bordered by a column of `1`s and a row
//! of `-1`s. Two algorithms are provided and cross-checked: the direct
//! definition (dimensions `<= 6`) and a division-free expansion along the
//! first index, memoized over index subsets. Determinants are division-free
//! (subset expansion) so series entries never need invertibility; a
//! fraction-free Bareiss elimination is provided for rational matrices.

use crate::rat::{factorial, pow2, Rat};
use crate::ring::Ring;
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

pub const DIMENSION_BOUND: usize = 10;

#[derive(Debug, Clone, PartialEq)]
pub enum LinalgError {
    NotSkewSymmetric { row: usize, col: usize },
    DimensionTooLarge { n: usize, bound: usize },
    InsufficientMoments { needed: usize, have: usize },
    NotSquare,
}

impl std::fmt::Display for LinalgError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            LinalgError::NotSkewSymmetric { row, col } => {
                write!(f, "matrix is not skew-symmetric at ({row}, {col})")
            }
            LinalgError::DimensionTooLarge { n, bound } => {
                write!(f, "dimension {n} exceeds bound {bound}")
            }
            LinalgError::InsufficientMoments { needed, have } => {
                write!(f, "need moments up to index {needed}, have {have}")
            }
            LinalgError::NotSquare => write!(f, "entries do not form a square matrix"),
        }
    }
}

impl std::error::Error for LinalgError {}

/// Dense square matrix over an exact ring.
#[derive(Clone, Debug, PartialEq)]
pub struct ExactMatrix<R> {
    n: usize,
    entries: Vec<R>,
}

impl<R: Ring> ExactMatrix<R> {
    pub fn from_rows(rows: Vec<Vec<R>>) -> Result<Self, LinalgError> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(LinalgError::NotSquare);
        }
        Ok(ExactMatrix {
            n,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> R) -> Self {
        let mut entries = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                entries.push(f(i, j));
            }
        }
        ExactMatrix { n, entries }
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn at(&self, i: usize, j: usize) -> &R {
        &self.entries[i * self.n + j]
    }

    pub fn is_skew_symmetric(&self) -> bool {
        for i in 0..self.n {
            if !self.at(i, i).is_zero() {
                return false;
            }
            for j in (i + 1)..self.n {
                if self.at(i, j).neg() != *self.at(j, i) {
                    return false;
                }
            }
        }
        true
    }

    fn check_skew(&self) -> Result<(), LinalgError> {
        for i in 0..self.n {
            for j in i..self.n {
                if self.at(i, j).neg() != *self.at(j, i) {
                    return Err(LinalgError::NotSkewSymmetric { row: i, col: j });
                }
            }
        }
        Ok(())
    }

    /// Division-free determinant by expansion over column subsets
    /// (memoized Laplace), `n <=` [`DIMENSION_BOUND`]. Empty matrix gives 1.
    pub fn determinant(&self) -> Result<R, LinalgError> {
        let n = self.n;
        if n > DIMENSION_BOUND {
            return Err(LinalgError::DimensionTooLarge {
                n,
                bound: DIMENSION_BOUND,
            });
        }
        if n == 0 {
            return Ok(R::one());
        }
        // minor[mask] = det of rows 0..popcount(mask) and columns in mask.
        let full = 1usize << n;
        let mut minor: Vec<Option<R>> = vec![None; full];
        minor[0] = Some(R::one());
        for mask in 1..full {
            let k = (mask as u32).count_ones() as usize; // rows 0..k
            let mut acc = R::zero();
            let mut sign_pos = true;
            for j in 0..n {
                if mask & (1 << j) == 0 {
                    continue;
                }
                let sub = minor[mask & !(1 << j)]
                    .clone()
                    .expect("subset minors fill in popcount order");
                let a = self.at(k - 1, j);
                if !a.is_zero() && !sub.is_zero() {
                    let term = a.mul(&sub);
                    acc = if sign_pos {
                        acc.add(&term)
                    } else {
                        acc.sub(&term)
                    };
                }
                sign_pos = !sign_pos;
            }
            minor[mask] = Some(acc);
        }
        Ok(minor[full - 1].clone().unwrap())
    }

    /// Pfaffian with the normalized odd-dimension convention. Requires exact
    /// skew-symmetry; `n <=` [`DIMENSION_BOUND`]. Empty matrix gives 1.
    pub fn pfaffian(&self) -> Result<R, LinalgError> {
        if self.n > DIMENSION_BOUND {
            return Err(LinalgError::DimensionTooLarge {
                n: self.n,
                bound: DIMENSION_BOUND,
            });
        }
        self.check_skew()?;
        if self.n == 0 {
            return Ok(R::one());
        }
        if self.n % 2 == 1 {
            // Border with a column of 1s and a row of -1s.
            let n = self.n;
            let bordered = ExactMatrix::from_fn(n + 1, |i, j| {
                if i < n && j < n {
                    self.at(i, j).clone()
                } else if i < n && j == n {
                    R::one()
                } else if i == n && j < n {
                    R::one().neg()
                } else {
                    R::zero()
                }
            });
            return bordered.pfaffian_even();
        }
        self.pfaffian_even()
    }

    /// Even-dimension pfaffian by memoized expansion along the lowest
    /// remaining index: `pf(S) = sum_t (-1)^t a_{s_1 s_t} pf(S - {s_1, s_t})`.
    fn pfaffian_even(&self) -> Result<R, LinalgError> {
        let n = self.n;
        debug_assert!(n % 2 == 0);
        if n == 0 {
            return Ok(R::one());
        }
        let full = (1usize << n) - 1;
        let mut memo: std::collections::HashMap<usize, R> = std::collections::HashMap::new();
        memo.insert(0, R::one());
        Ok(self.pf_rec(full, &mut memo))
    }

    fn pf_rec(&self, mask: usize, memo: &mut std::collections::HashMap<usize, R>) -> R {
        if let Some(v) = memo.get(&mask) {
            return v.clone();
        }
        let i = mask.trailing_zeros() as usize;
        let rest = mask & !(1 << i);
        let mut acc = R::zero();
        let mut sign_pos = true; // position t = 2 gives (+1): (-1)^t with t even
        let mut j = rest;
        while j != 0 {
            let b = j.trailing_zeros() as usize;
            let a = self.at(i, b);
            if !a.is_zero() {
                let sub = self.pf_rec(rest & !(1 << b), memo);
                if !sub.is_zero() {
                    let term = a.mul(&sub);
                    acc = if sign_pos {
                        acc.add(&term)
                    } else {
                        acc.sub(&term)
                    };
                }
            }
            sign_pos = !sign_pos;
            j &= !(1 << b);
        }
        memo.insert(mask, acc.clone());
        acc
    }

    /// Pfaffian straight from the symmetrized-sum definition (`n <= 6`).
    /// Used to cross-check the recursive algorithm.
    pub fn pfaffian_direct(&self) -> Result<R, LinalgError> {
        let n = self.n;
        if n > 6 {
            return Err(LinalgError::DimensionTooLarge { n, bound: 6 });
        }
        self.check_skew()?;
        if n == 0 {
            return Ok(R::one());
        }
        let m = n / 2;
        let mut acc = R::zero();
        for (perm, sign) in Permutations::new(n) {
            let mut term = R::one();
            let mut zero = false;
            for i in 0..m {
                let a = self.at(perm[2 * i], perm[2 * i + 1]);
                if a.is_zero() {
                    zero = true;
                    break;
                }
                term = term.mul(a);
            }
            if zero {
                continue;
            }
            acc = if sign { acc.add(&term) } else { acc.sub(&term) };
        }
        let norm = (pow2(m as i64) * factorial(m as u64)).recip();
        Ok(acc.scale_rat(&norm))
    }
}

impl ExactMatrix<Rat> {
    /// Fraction-free (Bareiss) determinant for rational matrices: clears
    /// denominators and eliminates over integers with exact divisions.
    pub fn determinant_bareiss(&self) -> Rat {
        let n = self.n;
        if n == 0 {
            return Rat::one();
        }
        // Common denominator per row keeps the integer matrix small.
        let mut m: Vec<Vec<BigInt>> = Vec::with_capacity(n);
        let mut scale = Rat::one();
        for i in 0..n {
            let mut lcm = BigInt::one();
            for j in 0..n {
                lcm = num_integer::lcm(lcm, self.at(i, j).denom().clone());
            }
            scale *= Rat::new(BigInt::one(), lcm.clone());
            m.push(
                (0..n)
                    .map(|j| {
                        let e = self.at(i, j);
                        e.numer() * (&lcm / e.denom())
                    })
                    .collect(),
            );
        }
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if m[k][k].is_zero() {
                match (k + 1..n).find(|&r| !m[r][k].is_zero()) {
                    Some(r) => {
                        m.swap(k, r);
                        sign = -sign;
                    }
                    None => return Rat::zero(),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                    m[i][j] = num / &prev;
                }
                m[i][k] = BigInt::zero();
            }
            prev = m[k][k].clone();
        }
        Rat::from_integer(sign * m[n - 1][n - 1].clone()) * scale
    }
}

/// Hankel matrix `(c_{i+j-2+offset})` of size `m x m` drawn from a moment
/// list `c[0], c[1], ...`.
pub fn hankel_from_moments<R: Ring>(
    c: &[R],
    m: usize,
    offset: usize,
) -> Result<ExactMatrix<R>, LinalgError> {
    if m == 0 {
        return Ok(ExactMatrix {
            n: 0,
            entries: vec![],
        });
    }
    let needed = 2 * m - 2 + offset;
    if c.len() <= needed {
        return Err(LinalgError::InsufficientMoments {
            needed,
            have: c.len(),
        });
    }
    Ok(ExactMatrix::from_fn(m, |i, j| c[i + j + offset].clone()))
}

/// Iterator over all permutations of `0..n` with their signs, via Heap's
/// algorithm (each step is one transposition, so the sign just flips).
pub struct Permutations {
    perm: Vec<usize>,
    stack: Vec<usize>,
    i: usize,
    sign: bool,
    first: bool,
    done: bool,
}

impl Permutations {
    pub fn new(n: usize) -> Self {
        Permutations {
            perm: (0..n).collect(),
            stack: vec![0; n],
            i: 0,
            sign: true,
            first: true,
            done: n == 0,
        }
    }
}

impl Iterator for Permutations {
    type Item = (Vec<usize>, bool);

    fn next(&mut self) -> Option<Self::Item> {
        if self.done {
            return None;
        }
        if self.first {
            self.first = false;
            return Some((self.perm.clone(), self.sign));
        }
        let n = self.perm.len();
        while self.i < n {
            if self.stack[self.i] < self.i {
                if self.i % 2 == 0 {
                    self.perm.swap(0, self.i);
                } else {
                    let s = self.stack[self.i];
                    self.perm.swap(s, self.i);
                }
                self.sign = !self.sign;
                self.stack[self.i] += 1;
                self.i = 0;
                return Some((self.perm.clone(), self.sign));
            } else {
                self.stack[self.i] = 0;
                self.i += 1;
            }
        }
        self.done = true;
        None
    }
}

/// Right side of the pfaffian sum expansion for `pf(A - A^T + B)` with `B`
/// skew: `(1/M!) sum_s 2^{s-M} C(M,s) sum_sigma sgn prod_{i<=s} a prod_{i>s} b`.
pub fn pfaffian_sum_expansion<R: Ring>(a: &ExactMatrix<R>, b: &ExactMatrix<R>) -> R {
    let n = a.dim();
    assert_eq!(n, b.dim());
    let m = n / 2;
    let mut total = R::zero();
    for s in 0..=m {
        let mut inner = R::zero();
        for (perm, sign) in Permutations::new(n) {
            let mut term = R::one();
            let mut zero = false;
            for i in 0..m {
                let e = if i < s {
                    a.at(perm[2 * i], perm[2 * i + 1])
                } else {
                    b.at(perm[2 * i], perm[2 * i + 1])
                };
                if e.is_zero() {
                    zero = true;
                    break;
                }
                term = term.mul(e);
            }
            if zero {
                continue;
            }
            inner = if sign { inner.add(&term) } else { inner.sub(&term) };
        }
        let coef = pow2(s as i64 - m as i64) * factorial(m as u64)
            / (factorial(s as u64) * factorial((m - s) as u64));
        total = total.add(&inner.scale_rat(&(coef / factorial(m as u64))));
    }
    total
}
