//! Coefficient rings shared by the algebraic modules: exact [`Scalar`] for
//! symbolic work, `f64` for fast numeric sweeps.

use std::fmt::{Debug, Display};

use crate::scalars::{Rational, Scalar};

pub trait Coeff: Clone + Debug + Display + PartialEq + Send + Sync + 'static {
    fn zero() -> Self;
    fn one() -> Self;
    fn from_i64(n: i64) -> Self;
    fn from_rational(q: &Rational) -> Self;
    fn is_zero(&self) -> bool;
    fn plus(&self, other: &Self) -> Self;
    fn minus(&self, other: &Self) -> Self;
    fn times(&self, other: &Self) -> Self;
    fn negated(&self) -> Self;

    /// `self += a * b`.
    fn accumulate(&mut self, a: &Self, b: &Self) {
        *self = self.plus(&a.times(b));
    }

    /// Size used to report residuals: max absolute value for floats, number
    /// of surviving terms for exact scalars.
    fn magnitude(&self) -> f64;

    /// Exact zero test for exact rings; `|x| <= tol` for floats.
    fn approx_zero(&self, tol: f64) -> bool;
}

impl Coeff for Scalar {
    fn zero() -> Self {
        Scalar::zero()
    }
    fn one() -> Self {
        Scalar::one()
    }
    fn from_i64(n: i64) -> Self {
        Scalar::from_int(n)
    }
    fn from_rational(q: &Rational) -> Self {
        Scalar::from_rational(q.clone())
    }
    fn is_zero(&self) -> bool {
        Scalar::is_zero(self)
    }
    fn plus(&self, other: &Self) -> Self {
        self + other
    }
    fn minus(&self, other: &Self) -> Self {
        self - other
    }
    fn times(&self, other: &Self) -> Self {
        self * other
    }
    fn negated(&self) -> Self {
        -self
    }
    fn accumulate(&mut self, a: &Self, b: &Self) {
        self.add_product(a, b);
    }
    fn magnitude(&self) -> f64 {
        self.num_terms() as f64
    }
    fn approx_zero(&self, _tol: f64) -> bool {
        Scalar::is_zero(self)
    }
}

impl Coeff for f64 {
    fn zero() -> Self {
        0.0
    }
    fn one() -> Self {
        1.0
    }
    fn from_i64(n: i64) -> Self {
        n as f64
    }
    fn from_rational(q: &Rational) -> Self {
        crate::scalars::rational_to_f64(q)
    }
    fn is_zero(&self) -> bool {
        *self == 0.0
    }
    fn plus(&self, other: &Self) -> Self {
        self + other
    }
    fn minus(&self, other: &Self) -> Self {
        self - other
    }
    fn times(&self, other: &Self) -> Self {
        self * other
    }
    fn negated(&self) -> Self {
        -self
    }
    fn accumulate(&mut self, a: &Self, b: &Self) {
        *self += a * b;
    }
    fn magnitude(&self) -> f64 {
        self.abs()
    }
    fn approx_zero(&self, tol: f64) -> bool {
        self.abs() <= tol
    }
}

/// Largest residual seen over a family of checks, with a label for the worst
/// offender.
#[derive(Clone, Debug, Default, PartialEq, serde::Serialize)]
pub struct Residual {
    pub norm: f64,
    pub worst: Option<String>,
}

impl Residual {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn is_zero(&self) -> bool {
        self.norm == 0.0
    }

    pub fn record(&mut self, norm: f64, label: impl FnOnce() -> String) {
        if norm > self.norm || (norm.is_nan() && !self.norm.is_nan()) {
            self.norm = norm;
            self.worst = Some(label());
        }
    }

    pub fn merge(&mut self, other: Residual) {
        if let Some(w) = other.worst {
            self.record(other.norm, || w);
        }
    }
}
