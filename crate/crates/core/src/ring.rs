//! Minimal commutative-ring abstraction.
//!
//! The linear algebra and orthogonal-polynomial layers run over two rings:
//! exact rationals and truncated power series. Both are algebras over the
//! rationals, which `scale_rat` exposes; `try_div` is exact division where
//! the divisor is invertible (nonzero rational, or series with nonzero
//! constant term).

use crate::rat::Rat;
use crate::series::QSeries;
use num_traits::Zero;

pub trait Ring: Clone + PartialEq + std::fmt::Debug {
    fn zero() -> Self;
    fn one() -> Self;
    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
    fn is_zero(&self) -> bool;
    fn scale_rat(&self, c: &Rat) -> Self;
    /// Exact division; `None` when `rhs` is not invertible.
    fn try_div(&self, rhs: &Self) -> Option<Self>;
}

impl Ring for Rat {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        num_traits::One::one()
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg(&self) -> Self {
        -self
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn scale_rat(&self, c: &Rat) -> Self {
        self * c
    }
    fn try_div(&self, rhs: &Self) -> Option<Self> {
        if Zero::is_zero(rhs) {
            None
        } else {
            Some(self / rhs)
        }
    }
}

impl Ring for QSeries {
    fn zero() -> Self {
        QSeries::zero_unbounded()
    }
    fn one() -> Self {
        QSeries::one()
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg(&self) -> Self {
        -self.clone()
    }
    fn is_zero(&self) -> bool {
        self.is_zero_series()
    }
    fn scale_rat(&self, c: &Rat) -> Self {
        self.mul_scalar(c)
    }
    fn try_div(&self, rhs: &Self) -> Option<Self> {
        rhs.inverse().ok().map(|inv| self * &inv)
    }
}
