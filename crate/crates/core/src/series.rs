//! Truncated formal power series in `u`, where `u^2 = q`.
//!
//! A [`QSeries`] stores exact rational coefficients of `u^0..=u^N` together
//! with the truncation order `N`, meaning the series is known modulo
//! `u^{N+1}`. Working in `u` rather than `q` makes half-integer powers of
//! `q` (which occur throughout the pfaffian evaluations) exact exponent
//! shifts; pure q-series simply live on even `u`-exponents.
//!
//! Truncation bookkeeping: addition and multiplication propagate the
//! minimum order of the operands (both inputs start at `u^0`, so no order
//! is ever lost beyond that minimum); constants are exact at every order
//! and carry the sentinel order [`UNBOUNDED`]. Comparison helpers refuse to
//! certify equality beyond the propagated order.
//!
//! Builders provided here:
//! - [`poch_trunc`]: truncated q-Pochhammer products `prod (1 - a u^{j+ks})`.
//! - [`theta_trunc`] / [`theta_shifted`]: the theta function
//!   `theta(x) = (x; q)_inf (q/x; q)_inf` at a fixed rational argument,
//!   optionally shifted by `u` or `u^2`.
//! - [`theta_logderiv_trunc`] / [`theta_logderiv_shifted`]: `x theta'(x)/theta(x)`
//!   via the geometric expansion of each product factor.
//! - [`lambert_sum`]: the Lambert-type sums whose geometric expansions
//!   produce divisor sums.

use crate::rat::{rat_int, rat_pow, Rat};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use std::cmp::min;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Sentinel order for exact values (constants, polynomials known exactly).
pub const UNBOUNDED: usize = usize::MAX;

#[derive(Debug, Clone, PartialEq)]
pub enum SeriesError {
    /// Inversion of a series with zero constant term.
    ZeroConstantTerm,
    /// Theta at argument zero: the `(q/x; q)_inf` factor is undefined.
    ZeroArgument,
    /// Log-derivative at an argument where a product factor vanishes.
    PoleAtArgument,
    /// A shift-down would discard a nonzero low-order coefficient.
    NonzeroLowOrderTerm,
    /// An operation was asked to certify more than the propagated order.
    TruncationTooSmall { requested: usize, valid: usize },
}

impl fmt::Display for SeriesError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SeriesError::ZeroConstantTerm => write!(f, "series has zero constant term"),
            SeriesError::ZeroArgument => write!(f, "theta function undefined at x = 0"),
            SeriesError::PoleAtArgument => write!(f, "log-derivative has a pole at this argument"),
            SeriesError::NonzeroLowOrderTerm => {
                write!(f, "shift down would drop a nonzero coefficient")
            }
            SeriesError::TruncationTooSmall { requested, valid } => write!(
                f,
                "requested order {requested} exceeds propagated validity {valid}"
            ),
        }
    }
}

impl std::error::Error for SeriesError {}

/// Truncated power series in `u` (`u^2 = q`) with exact rational coefficients.
#[derive(Clone, PartialEq, Eq)]
pub struct QSeries {
    /// `coeffs[i]` is the coefficient of `u^i`; trailing zeros trimmed.
    coeffs: Vec<Rat>,
    /// Known modulo `u^{order+1}`.
    order: usize,
}

impl QSeries {
    fn normalized(mut coeffs: Vec<Rat>, order: usize) -> Self {
        if order != UNBOUNDED && coeffs.len() > order + 1 {
            coeffs.truncate(order + 1);
        }
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        QSeries { coeffs, order }
    }

    /// The zero series, exact at every order.
    pub fn zero_unbounded() -> Self {
        QSeries {
            coeffs: Vec::new(),
            order: UNBOUNDED,
        }
    }

    /// `0 + O(u^{order+1})`.
    pub fn zero(order: usize) -> Self {
        QSeries {
            coeffs: Vec::new(),
            order,
        }
    }

    /// The constant `1`.
    pub fn one() -> Self {
        Self::constant(Rat::one())
    }

    /// A rational constant, exact at every order.
    pub fn constant(c: Rat) -> Self {
        Self::normalized(vec![c], UNBOUNDED)
    }

    /// `c * u^exp`, exact.
    pub fn monomial_u(exp: usize, c: Rat) -> Self {
        let mut coeffs = vec![Rat::zero(); exp + 1];
        coeffs[exp] = c;
        Self::normalized(coeffs, UNBOUNDED)
    }

    /// `c * q^n`, exact.
    pub fn monomial_q(n: usize, c: Rat) -> Self {
        Self::monomial_u(2 * n, c)
    }

    /// Builds a series from q-coefficients `c[0] + c[1] q + ...` known to
    /// q-order `c.len() - 1`.
    pub fn from_q_coeffs(c: &[Rat]) -> Self {
        let mut coeffs = vec![Rat::zero(); 2 * c.len().saturating_sub(1) + 1];
        for (n, v) in c.iter().enumerate() {
            coeffs[2 * n] = v.clone();
        }
        let order = if c.is_empty() { 0 } else { 2 * c.len() - 1 };
        Self::normalized(coeffs, order)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// Largest q-order fully covered by the truncation.
    pub fn q_order(&self) -> usize {
        if self.order == UNBOUNDED {
            UNBOUNDED
        } else {
            self.order / 2
        }
    }

    /// Coefficient of `u^k`. Panics on access beyond the truncation order.
    pub fn u_coeff(&self, k: usize) -> Rat {
        assert!(
            k <= self.order,
            "u-coefficient {k} beyond truncation order {}",
            self.order
        );
        self.coeffs.get(k).cloned().unwrap_or_else(Rat::zero)
    }

    /// Coefficient of `q^n = u^{2n}`.
    pub fn q_coeff(&self, n: usize) -> Rat {
        self.u_coeff(2 * n)
    }

    pub fn constant_term(&self) -> Rat {
        self.coeffs.first().cloned().unwrap_or_else(Rat::zero)
    }

    pub fn is_zero_series(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// True when only even u-exponents carry nonzero coefficients, i.e. the
    /// series is a pure q-series.
    pub fn is_even_series(&self) -> bool {
        self.coeffs
            .iter()
            .enumerate()
            .all(|(k, c)| k % 2 == 0 || c.is_zero())
    }

    /// Nonzero terms as `(u-exponent, coefficient)` pairs.
    pub fn terms(&self) -> impl Iterator<Item = (usize, &Rat)> {
        self.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero())
    }

    /// Restricts to a (smaller) truncation order.
    pub fn truncated(&self, order: usize) -> Self {
        Self::normalized(self.coeffs.clone(), min(order, self.order))
    }

    pub fn mul_scalar(&self, c: &Rat) -> Self {
        if c.is_zero() {
            return Self::zero(self.order);
        }
        Self::normalized(self.coeffs.iter().map(|a| a * c).collect(), self.order)
    }

    /// Multiplies by `u^k` (order grows by `k`: nothing below `u^k` is lost).
    pub fn shift_up(&self, k: usize) -> Self {
        if self.order == UNBOUNDED {
            let mut coeffs = vec![Rat::zero(); k];
            coeffs.extend(self.coeffs.iter().cloned());
            return Self::normalized(coeffs, UNBOUNDED);
        }
        let mut coeffs = vec![Rat::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Self::normalized(coeffs, self.order + k)
    }

    /// Divides by `u^k`; errors if any nonzero coefficient sits below `u^k`.
    pub fn shift_down(&self, k: usize) -> Result<Self, SeriesError> {
        if self.coeffs.iter().take(k).any(|c| !c.is_zero()) {
            return Err(SeriesError::NonzeroLowOrderTerm);
        }
        let coeffs: Vec<Rat> = self.coeffs.iter().skip(k).cloned().collect();
        let order = if self.order == UNBOUNDED {
            UNBOUNDED
        } else {
            self.order.saturating_sub(k)
        };
        Ok(Self::normalized(coeffs, order))
    }

    /// Substitutes `q -> -q` (flips the sign of odd q-exponents). Panics if
    /// the series has odd u-exponent terms.
    pub fn negate_q(&self) -> Self {
        assert!(self.is_even_series(), "negate_q needs a pure q-series");
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(k, c)| if (k / 2) % 2 == 1 { -c } else { c.clone() })
            .collect();
        Self::normalized(coeffs, self.order)
    }

    /// Substitutes `q -> q^r` for `r >= 1` (u-exponents scale by `r`). A
    /// series known modulo `q^{N+1}` becomes known modulo `q^{r(N+1)}`.
    pub fn substitute_q_power(&self, r: usize) -> Self {
        assert!(r >= 1);
        assert!(self.is_even_series(), "substitution needs a pure q-series");
        let mut coeffs = vec![Rat::zero(); self.coeffs.len().saturating_sub(1) * r + 1];
        for (k, c) in self.terms() {
            coeffs[k * r] = c.clone();
        }
        let order = if self.order == UNBOUNDED {
            UNBOUNDED
        } else {
            // known mod u^{order+1} => mod u^{r(order+1)}
            r * (self.order + 1) - 1
        };
        Self::normalized(coeffs, order)
    }

    /// Multiplicative inverse up to the truncation order.
    pub fn inverse(&self) -> Result<Self, SeriesError> {
        let c0 = self.constant_term();
        if c0.is_zero() {
            return Err(SeriesError::ZeroConstantTerm);
        }
        let order = self.order;
        let n = if order == UNBOUNDED {
            // An exact polynomial has an exact inverse only when it is a
            // constant; otherwise the inverse is a genuine infinite series
            // and callers must truncate first.
            if self.coeffs.len() > 1 {
                panic!("inverse of a non-constant exact polynomial needs a truncation order");
            }
            return Ok(Self::constant(c0.recip()));
        } else {
            order
        };
        let inv0 = c0.recip();
        let mut g = vec![Rat::zero(); n + 1];
        g[0] = inv0.clone();
        let nonzero: Vec<(usize, &Rat)> = self.terms().filter(|(k, _)| *k > 0).collect();
        for m in 1..=n {
            let mut acc = Rat::zero();
            for (k, fk) in &nonzero {
                if *k > m {
                    break;
                }
                if !g[m - k].is_zero() {
                    acc += *fk * &g[m - k];
                }
            }
            if !acc.is_zero() {
                g[m] = -acc * &inv0;
            }
        }
        Ok(Self::normalized(g, n))
    }

    /// Integer power by repeated squaring.
    pub fn pow(&self, e: u32) -> Self {
        let mut result = QSeries::one().truncated(self.order);
        let mut acc = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &acc;
            }
            e >>= 1;
            if e > 0 {
                acc = &acc * &acc;
            }
        }
        result
    }

    /// First u-order `<= max_order` where the two series differ, with both
    /// coefficients. Errors when the operands cannot certify `max_order`.
    pub fn first_difference(
        &self,
        other: &Self,
        max_order: usize,
    ) -> Result<Option<(usize, Rat, Rat)>, SeriesError> {
        let valid = min(self.order, other.order);
        if max_order > valid {
            return Err(SeriesError::TruncationTooSmall {
                requested: max_order,
                valid,
            });
        }
        for k in 0..=max_order {
            let a = self.coeffs.get(k).cloned().unwrap_or_else(Rat::zero);
            let b = other.coeffs.get(k).cloned().unwrap_or_else(Rat::zero);
            if a != b {
                return Ok(Some((k, a, b)));
            }
        }
        Ok(None)
    }

    /// Convenience: exact equality of all coefficients up to `max_order`.
    pub fn eq_to_order(&self, other: &Self, max_order: usize) -> bool {
        matches!(self.first_difference(other, max_order), Ok(None))
    }
}

impl fmt::Debug for QSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.terms().take(12) {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            if k == 0 {
                write!(f, "{c}")?;
            } else if k % 2 == 0 {
                write!(f, "({c})q^{}", k / 2)?;
            } else {
                write!(f, "({c})u^{k}")?;
            }
        }
        if first {
            write!(f, "0")?;
        }
        if self.order == UNBOUNDED {
            write!(f, " (exact)")
        } else {
            write!(f, " + O(u^{})", self.order + 1)
        }
    }
}

fn add_impl(a: &QSeries, b: &QSeries, negate_b: bool) -> QSeries {
    let order = min(a.order, b.order);
    let len = a.coeffs.len().max(b.coeffs.len());
    let mut coeffs = Vec::with_capacity(len);
    for k in 0..len {
        let x = a.coeffs.get(k).cloned().unwrap_or_else(Rat::zero);
        let y = b.coeffs.get(k).cloned().unwrap_or_else(Rat::zero);
        coeffs.push(if negate_b { x - y } else { x + y });
    }
    QSeries::normalized(coeffs, order)
}

fn mul_impl(a: &QSeries, b: &QSeries) -> QSeries {
    let order = min(a.order, b.order);
    if a.coeffs.is_empty() || b.coeffs.is_empty() {
        return QSeries::zero(order);
    }
    let max_len = if order == UNBOUNDED {
        a.coeffs.len() + b.coeffs.len() - 1
    } else {
        min(a.coeffs.len() + b.coeffs.len() - 1, order + 1)
    };
    // Iterate the sparser operand on the outside; many series here (theta
    // functions, base generating functions) have very few terms.
    let (outer, inner) = {
        let na = a.coeffs.iter().filter(|c| !c.is_zero()).count();
        let nb = b.coeffs.iter().filter(|c| !c.is_zero()).count();
        if na <= nb {
            (a, b)
        } else {
            (b, a)
        }
    };
    let mut coeffs = vec![Rat::zero(); max_len];
    for (i, ci) in outer.terms() {
        if i >= max_len {
            break;
        }
        for (j, cj) in inner.terms() {
            let k = i + j;
            if k >= max_len {
                break;
            }
            coeffs[k] += ci * cj;
        }
    }
    QSeries::normalized(coeffs, order)
}

macro_rules! impl_binop {
    ($trait:ident, $meth:ident, $f:expr) => {
        impl $trait for &QSeries {
            type Output = QSeries;
            fn $meth(self, rhs: &QSeries) -> QSeries {
                $f(self, rhs)
            }
        }
        impl $trait for QSeries {
            type Output = QSeries;
            fn $meth(self, rhs: QSeries) -> QSeries {
                $f(&self, &rhs)
            }
        }
    };
}

impl_binop!(Add, add, |a, b| add_impl(a, b, false));
impl_binop!(Sub, sub, |a, b| add_impl(a, b, true));
impl_binop!(Mul, mul, mul_impl);

impl Neg for QSeries {
    type Output = QSeries;
    fn neg(self) -> QSeries {
        QSeries::normalized(self.coeffs.iter().map(|c| -c).collect(), self.order)
    }
}

/// One truncated q-Pochhammer product `prod_{k>=0} (1 - a u^{shift + k*step})`.
///
/// Only factors whose u-exponent is `<= N` are multiplied, which is exact
/// modulo `u^{N+1}`. `step > 0`; `shift == 0` contributes the scalar factor
/// `1 - a`.
#[derive(Clone, Debug, PartialEq)]
pub struct PochSpec {
    pub scalar: Rat,
    pub shift: usize,
    pub step: usize,
}

/// Expands a [`PochSpec`] to order `N`.
pub fn poch_trunc(spec: &PochSpec, n: usize) -> QSeries {
    assert!(spec.step > 0, "Pochhammer step must be positive");
    let mut coeffs = vec![Rat::zero(); n + 1];
    coeffs[0] = Rat::one();
    let a = &spec.scalar;
    if a.is_zero() {
        return QSeries::normalized(coeffs, n);
    }
    let mut e = spec.shift;
    // Multiply by (1 - a u^e) in place, descending so each pass is O(N).
    loop {
        if e == 0 {
            let f = Rat::one() - a;
            for c in coeffs.iter_mut() {
                *c *= &f;
            }
        } else if e <= n {
            for i in (e..=n).rev() {
                if !coeffs[i - e].is_zero() {
                    let t = a * &coeffs[i - e];
                    coeffs[i] -= t;
                }
            }
        } else {
            break;
        }
        e += spec.step;
    }
    QSeries::normalized(coeffs, n)
}

/// `(a u^shift; u^step)_inf` convenience wrapper.
pub fn poch(a: Rat, shift: usize, step: usize, n: usize) -> QSeries {
    poch_trunc(
        &PochSpec {
            scalar: a,
            shift,
            step,
        },
        n,
    )
}

/// `(q; q)_inf` to u-order `N`.
pub fn euler_product(n: usize) -> QSeries {
    poch(Rat::one(), 2, 2, n)
}

/// `theta(x; q) = (x; q)_inf (q/x; q)_inf` for a fixed rational `x != 0`,
/// as a pure q-series to u-order `N`.
pub fn theta_trunc(x: &Rat, n: usize) -> Result<QSeries, SeriesError> {
    theta_shifted(x, 0, n)
}

/// `theta(a u^t; q)` for `t` in `0..=2`. The cases `t = 1, 2` give
/// `theta(a sqrt q)` and `theta(a q)` with all exponents exact in `u`.
pub fn theta_shifted(a: &Rat, t: usize, n: usize) -> Result<QSeries, SeriesError> {
    if a.is_zero() {
        return Err(SeriesError::ZeroArgument);
    }
    assert!(t <= 2, "theta argument shift must be 0, 1, or 2");
    let first = poch(a.clone(), t, 2, n);
    let second = poch(a.recip(), 2 - t, 2, n);
    Ok(&first * &second)
}

/// `x theta'(x)/theta(x)` at fixed rational `x` (pure q-series), from the
/// geometric expansion of the product's logarithmic derivative:
/// `-x/(1-x) + sum_{n>=1} q^n sum_{d|n} (x^{-d} - x^d)`.
pub fn theta_logderiv_trunc(x: &Rat, n: usize) -> Result<QSeries, SeriesError> {
    if x.is_zero() || x.is_one() {
        return Err(SeriesError::PoleAtArgument);
    }
    let qn = n / 2;
    let mut qc = vec![Rat::zero(); qn + 1];
    qc[0] = -x / (Rat::one() - x);
    for k in 1..=qn {
        let xk = rat_pow(x, k as i64);
        let term = xk.recip() - xk;
        if term.is_zero() {
            continue;
        }
        let mut m = k;
        while m <= qn {
            qc[m] += &term;
            m += k;
        }
    }
    Ok(QSeries::from_q_coeffs(&qc).truncated(n))
}

/// `z theta'(z)/theta(z)` at `z = a u` (argument on the half-integer
/// q-lattice). Starts at `u^1`; every term is a plain geometric series in u.
pub fn theta_logderiv_shifted(a: &Rat, n: usize) -> Result<QSeries, SeriesError> {
    if a.is_zero() {
        return Err(SeriesError::PoleAtArgument);
    }
    let mut coeffs = vec![Rat::zero(); n + 1];
    // -z/(1-z) and -z q^k/(1 - z q^k): exponents j*(2k+1), coefficient -a^j.
    let mut k = 0usize;
    while 2 * k + 1 <= n {
        let e = 2 * k + 1;
        let mut j = 1usize;
        let mut aj = a.clone();
        while j * e <= n {
            coeffs[j * e] -= &aj;
            j += 1;
            if j * e <= n {
                aj *= a;
            }
        }
        k += 1;
    }
    // (q^k/z)/(1 - q^k/z): exponents j*(2k-1), coefficient a^{-j}.
    let inv = a.recip();
    let mut k = 1usize;
    while 2 * k - 1 <= n {
        let e = 2 * k - 1;
        let mut j = 1usize;
        let mut aj = inv.clone();
        while j * e <= n {
            coeffs[j * e] += &aj;
            j += 1;
            if j * e <= n {
                aj *= &inv;
            }
        }
        k += 1;
    }
    Ok(QSeries::normalized(coeffs, n))
}

/// `1 + 2x theta'(-x)/theta(-x)` at fixed rational `x != -1` (the odd
/// pfaffian matrix entry). Equals `(1-x)/(1+x) + 2 sum_{n>=1} q^n
/// sum_{d|n} (-1)^d (x^d - x^{-d})`.
pub fn one_plus_two_logderiv_at_neg(x: &Rat, n: usize) -> Result<QSeries, SeriesError> {
    let neg = -x.clone();
    let l = theta_logderiv_trunc(&neg, n)?;
    // x theta'(-x)/theta(-x) = -L(-x)
    Ok(QSeries::one() - l.mul_scalar(&rat_int(2)))
}

/// The Lambert-type sums that expand into divisor sums. Each variant names
/// its denominator; `weight` is the power of `k` in the numerator.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LambertKind {
    /// `sum_k k^w q^k / (1 + (-q)^k)`
    PlusNegQ,
    /// `sum_k k^w q^k / (1 - (-q)^k)`
    MinusNegQ,
    /// `sum_k k^w q^k / (1 + q^{2k})`
    PlusQSquared,
    /// `sum_k (-1)^k k^w q^{2k} / (1 + q^{2k})`
    AltQSquared,
}

/// Expands a Lambert sum to q-order `N` (exact: the `k`-th term only
/// contributes at q-order `>= k`).
pub fn lambert_sum(kind: LambertKind, weight: u32, n: usize) -> QSeries {
    let mut qc = vec![Rat::zero(); n + 1];
    for k in 1..=n {
        let kw = Rat::from_integer(BigInt::from(k).pow(weight));
        match kind {
            LambertKind::PlusNegQ => {
                // q^k/(1+(-q)^k) = sum_{l>=1} (-1)^{(k-1)(l-1)} q^{kl}
                for l in 1..=(n / k) {
                    if (k - 1) * (l - 1) % 2 == 0 {
                        qc[k * l] += &kw;
                    } else {
                        qc[k * l] -= &kw;
                    }
                }
            }
            LambertKind::MinusNegQ => {
                // q^k/(1-(-q)^k) = sum_{l>=1} (-1)^{k(l-1)} q^{kl}
                for l in 1..=(n / k) {
                    if k * (l - 1) % 2 == 0 {
                        qc[k * l] += &kw;
                    } else {
                        qc[k * l] -= &kw;
                    }
                }
            }
            LambertKind::PlusQSquared => {
                // q^k/(1+q^{2k}) = sum_{l odd} (-1)^{(l-1)/2} q^{kl}
                let mut l = 1usize;
                while k * l <= n {
                    if ((l - 1) / 2) % 2 == 0 {
                        qc[k * l] += &kw;
                    } else {
                        qc[k * l] -= &kw;
                    }
                    l += 2;
                }
            }
            LambertKind::AltQSquared => {
                // (-1)^k q^{2k}/(1+q^{2k}) = (-1)^k sum_{j>=1} (-1)^{j-1} q^{2kj}
                let mut j = 1usize;
                while 2 * k * j <= n {
                    if (k + j - 1) % 2 == 0 {
                        qc[2 * k * j] += &kw;
                    } else {
                        qc[2 * k * j] -= &kw;
                    }
                    j += 1;
                }
            }
        }
    }
    QSeries::from_q_coeffs(&qc)
}

/// The single-`k` weight series `k^w q^k/(1 ± (-q)^k)` used when grouping
/// multivariable sums by their `k`-tuple. `plus` selects the `1 + (-q)^k`
/// denominator.
pub fn lambert_atom(plus: bool, weight: u32, k: usize, n: usize) -> QSeries {
    let mut qc = vec![Rat::zero(); n + 1];
    let kw = Rat::from_integer(BigInt::from(k).pow(weight));
    for l in 1..=(n / k.max(1)) {
        let par = if plus { (k - 1) * (l - 1) } else { k * (l - 1) };
        if par % 2 == 0 {
            qc[k * l] += &kw;
        } else {
            qc[k * l] -= &kw;
        }
    }
    QSeries::from_q_coeffs(&qc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::rat;
    use proptest::prelude::*;

    fn u(exp: usize, n: i64, d: i64) -> QSeries {
        QSeries::monomial_u(exp, rat(n, d))
    }

    #[test]
    fn mul_keeps_order_and_convolves() {
        // (1 + 2u)(1 - u) = 1 + u - 2u^2
        let a = QSeries::one() + u(1, 2, 1);
        let b = QSeries::one() - u(1, 1, 1);
        let p = (&a.truncated(10) * &b.truncated(10)).clone();
        assert_eq!(p.order(), 10);
        assert_eq!(p.u_coeff(0), rat(1, 1));
        assert_eq!(p.u_coeff(1), rat(1, 1));
        assert_eq!(p.u_coeff(2), rat(-2, 1));
        assert_eq!(p.u_coeff(3), rat(0, 1));
    }

    #[test]
    fn square_series_self_convolution() {
        // Box(q)^2 counts sums of two squares: 1, 4, 4, 0, 4, 8 at n = 0..5.
        let b = crate::oracle::base_series(crate::oracle::RepKind::Squares, 5);
        let sq = &b * &b;
        let expect = [1, 4, 4, 0, 4, 8];
        for (n, e) in expect.iter().enumerate() {
            assert_eq!(sq.q_coeff(n), rat_int(*e));
        }
    }

    #[test]
    fn one_is_multiplicative_identity() {
        let f = QSeries::from_q_coeffs(&[rat(1, 2), rat(-3, 1), rat(7, 5)]);
        assert_eq!(&f * &QSeries::one(), f);
    }

    #[test]
    fn geometric_inverse() {
        let f = (QSeries::one() - u(1, 1, 1)).truncated(8);
        let g = f.inverse().unwrap();
        for k in 0..=8 {
            assert_eq!(g.u_coeff(k), rat(1, 1));
        }
    }

    #[test]
    fn theta_minus_one_and_its_inverse() {
        let t = theta_trunc(&rat(-1, 1), 12).unwrap();
        // 2 prod (1+q^k)^2 = 2 + 4q + 6q^2 + 12q^3 + ...
        assert_eq!(t.q_coeff(0), rat_int(2));
        assert_eq!(t.q_coeff(1), rat_int(4));
        assert_eq!(t.q_coeff(2), rat_int(6));
        assert_eq!(t.q_coeff(3), rat_int(12));
        let inv = t.inverse().unwrap();
        assert_eq!(inv.q_coeff(0), rat(1, 2));
        assert_eq!(inv.q_coeff(1), rat(-1, 1));
        assert_eq!(inv.q_coeff(2), rat(1, 2));
        assert_eq!((&t * &inv).q_coeff(0), rat_int(1));
        for k in 1..=6 {
            assert_eq!((&t * &inv).q_coeff(k), rat_int(0));
        }
    }

    #[test]
    fn euler_product_pentagonal_pattern() {
        let e = euler_product(14); // q-order 7
        let expect = [1, -1, -1, 0, 0, 1, 0, 1];
        for (n, c) in expect.iter().enumerate() {
            assert_eq!(e.q_coeff(n), rat_int(*c), "at q^{n}");
        }
    }

    #[test]
    fn empty_pochhammer_is_one() {
        let p = poch(rat(0, 1), 2, 2, 10);
        assert_eq!(p, QSeries::one().truncated(10));
    }

    #[test]
    fn theta_at_one_vanishes() {
        let t = theta_trunc(&rat(1, 1), 16).unwrap();
        assert!(t.is_zero_series());
    }

    #[test]
    fn theta_at_zero_rejected() {
        assert_eq!(
            theta_trunc(&rat(0, 1), 4).unwrap_err(),
            SeriesError::ZeroArgument
        );
    }

    #[test]
    fn triple_product_at_rational_points() {
        // (q)_inf theta(x) = sum_k (-1)^k q^{k(k-1)/2} x^k, truncated at |k| <= K
        // complete to q-order K(K-1)/2.
        for x in [rat(2, 1), rat(3, 1), rat(-2, 1), rat(1, 2)] {
            let kk: i64 = 7;
            let qord = (kk * (kk - 1) / 2) as usize;
            let n = 2 * qord;
            let lhs = &euler_product(n) * &theta_trunc(&x, n).unwrap();
            let mut rhs = QSeries::zero(n);
            for k in -kk..=kk {
                let e = k * (k - 1) / 2;
                let term = QSeries::monomial_q(e as usize, rat_pow(&x, k));
                rhs = if k.rem_euclid(2) == 0 {
                    rhs + term
                } else {
                    rhs - term
                };
            }
            assert!(
                lhs.eq_to_order(&rhs, 2 * qord),
                "triple product fails at x = {x}"
            );
        }
    }

    #[test]
    fn quasi_periodicity() {
        // theta(qx) = -x^{-1} theta(x)
        for x in [rat(2, 1), rat(-3, 1), rat(1, 2), rat(5, 3)] {
            let n = 30;
            let lhs = theta_shifted(&x, 2, n).unwrap();
            let rhs = theta_trunc(&x, n).unwrap().mul_scalar(&-x.recip());
            assert!(lhs.eq_to_order(&rhs, n), "quasi-periodicity at x = {x}");
        }
    }

    #[test]
    fn ramanujan_kernel_expansion() {
        // (q)^2 theta(ax) / (theta(a) theta(x)) = sum_k x^k/(1 - a q^k),
        // with the k-grouped formal reading of the bilateral sum.
        let (a, x) = (rat(2, 1), rat(3, 1));
        let n = 60; // q-order 30
        let qn = n / 2;
        let e = euler_product(n);
        let lhs = &(&(&e * &e) * &theta_trunc(&(&a * &x), n).unwrap())
            * &(&theta_trunc(&a, n).unwrap().inverse().unwrap()
                * &theta_trunc(&x, n).unwrap().inverse().unwrap());
        // constant: 1/(1-a) + x/(1-x); q^m (m>=1): sum_{d|m} (a^{m/d} x^d - a^{-m/d} x^{-d})
        let mut qc = vec![Rat::zero(); qn + 1];
        qc[0] = (Rat::one() - &a).recip() + &x * (Rat::one() - &x).recip();
        for m in 1..=qn {
            for d in 1..=m {
                if m % d == 0 {
                    let j = (m / d) as i64;
                    qc[m] += rat_pow(&a, j) * rat_pow(&x, d as i64)
                        - rat_pow(&a, -j) * rat_pow(&x, -(d as i64));
                }
            }
        }
        let rhs = QSeries::from_q_coeffs(&qc);
        assert!(lhs.eq_to_order(&rhs, n));
    }

    #[test]
    fn logderiv_constant_and_first_coefficient() {
        // 1 + 2x theta'(-x)/theta(-x) at x = 2: constant (1-2)/(1+2) = -1/3,
        // q-coefficient 2*(-1)*(2 - 1/2) = -3.
        let g = one_plus_two_logderiv_at_neg(&rat(2, 1), 20).unwrap();
        assert_eq!(g.q_coeff(0), rat(-1, 3));
        assert_eq!(g.q_coeff(1), rat(-3, 1));
    }

    #[test]
    fn logderiv_at_one_is_identically_zero() {
        let g = one_plus_two_logderiv_at_neg(&rat(1, 1), 40).unwrap();
        assert!(g.is_zero_series());
    }

    #[test]
    fn logderiv_matches_triple_product_ratio() {
        // Independent route: x theta'(x)/theta(x) = N(x)/D(x) with
        // D = sum (-1)^k q^{k(k-1)/2} x^k and N = sum (-1)^k k q^{k(k-1)/2} x^k.
        let x = rat(2, 1);
        let kk: i64 = 9;
        let qord = (kk * (kk - 1) / 2) as usize;
        let n = 2 * qord;
        let mut num = QSeries::zero(n);
        let mut den = QSeries::zero(n);
        for k in -kk..=kk {
            let e = (k * (k - 1) / 2) as usize;
            let c = rat_pow(&x, k);
            let sgn = if k.rem_euclid(2) == 0 {
                Rat::one()
            } else {
                -Rat::one()
            };
            den = den + QSeries::monomial_q(e, &sgn * &c);
            num = num + QSeries::monomial_q(e, sgn * c * rat_int(k));
        }
        let ratio = &num * &den.inverse().unwrap();
        let direct = theta_logderiv_trunc(&x, n).unwrap();
        assert!(ratio.eq_to_order(&direct, n));
    }

    #[test]
    fn logderiv_finite_cutoff_partial_sums() {
        // x theta'(x)/theta(x) + sum_{k != 0, |k| <= K} x^k/(1-q^k) vanishes
        // at q-orders 1..=K (the order-0 coefficient cannot vanish at any
        // finite cutoff; the geometric k>0 constants resum to x/(1-x)).
        let x = rat(2, 1);
        let kcut = 12usize;
        let n = 2 * kcut;
        let l = theta_logderiv_trunc(&x, n).unwrap();
        let mut qc = vec![Rat::zero(); kcut + 1];
        for k in 1..=kcut {
            // x^k/(1-q^k) expanded, plus x^{-k}/(1-q^{-k}) = -x^{-k} q^k/(1-q^k)
            let xk = rat_pow(&x, k as i64);
            let xmk = xk.recip();
            qc[0] += &xk;
            let mut m = k;
            while m <= kcut {
                qc[m] += &xk - &xmk;
                m += k;
            }
        }
        let partial = QSeries::from_q_coeffs(&qc);
        let total = &l + &partial;
        for m in 1..=kcut {
            assert_eq!(total.q_coeff(m), rat_int(0), "q-order {m}");
        }
    }

    #[test]
    fn lambert_examples() {
        // sum k q^k/(1+(-q)^k) = q + 3q^2 + 4q^3 + ...
        let s = lambert_sum(LambertKind::PlusNegQ, 1, 3);
        assert_eq!(s.q_coeff(1), rat_int(1));
        assert_eq!(s.q_coeff(2), rat_int(3));
        assert_eq!(s.q_coeff(3), rat_int(4));
        // sum k^2 q^k/(1+q^{2k}) = q + 4q^2 + ...
        let s = lambert_sum(LambertKind::PlusQSquared, 2, 2);
        assert_eq!(s.q_coeff(1), rat_int(1));
        assert_eq!(s.q_coeff(2), rat_int(4));
    }

    #[test]
    fn shift_down_guards_low_terms() {
        let f = QSeries::monomial_u(1, rat(3, 1));
        assert!(f.shift_down(1).is_ok());
        let g = QSeries::one();
        assert_eq!(
            g.shift_down(1).unwrap_err(),
            SeriesError::NonzeroLowOrderTerm
        );
    }

    fn arb_series(order: usize) -> impl Strategy<Value = QSeries> {
        proptest::collection::vec((-6i64..=6, 1i64..=4), 0..8).prop_map(move |terms| {
            let mut s = QSeries::zero(order);
            for (i, (n, d)) in terms.into_iter().enumerate() {
                s = s + QSeries::monomial_u(i * 3 % (order + 1), rat(n, d)).truncated(order);
            }
            s
        })
    }

    proptest! {
        #[test]
        fn ring_laws(a in arb_series(60), b in arb_series(60), c in arb_series(60)) {
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        }

        #[test]
        fn inverse_is_two_sided(a in arb_series(40)) {
            let f = &a + &QSeries::one(); // nonzero constant term unless a(0) = -1
            if !f.constant_term().is_zero() {
                let g = f.inverse().unwrap();
                prop_assert!((&f * &g).eq_to_order(&QSeries::one().truncated(40), 40));
            }
        }
    }
}
