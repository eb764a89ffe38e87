//! Real scalars that can carry forward-mode derivatives.
//!
//! [`Dual`] nests: `Dual<Dual<f64>>` carries two independent infinitesimals,
//! which is how second-order quantities (field commutators, gradients of
//! brackets) are evaluated.

use std::fmt;
use std::ops::{Add, AddAssign, Div, DivAssign, Mul, MulAssign, Neg, Sub, SubAssign};

use num_traits::{One, Zero};

pub trait Real:
    nalgebra::Scalar
    + Copy
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
    + AddAssign
    + SubAssign
    + MulAssign
    + DivAssign
    + Send
    + Sync
{
    fn cst(x: f64) -> Self;
    /// Value with all infinitesimal parts dropped.
    fn re(&self) -> f64;
    fn sqrt(self) -> Self;
    fn sin(self) -> Self;
    fn cos(self) -> Self;
    fn tan(self) -> Self;
    fn sinh(self) -> Self;
    fn cosh(self) -> Self;
    fn asinh(self) -> Self;
    fn atan(self) -> Self;
    fn atanh(self) -> Self;
    fn asin(self) -> Self;
    fn atan2(self, x: Self) -> Self;

    fn powi(self, n: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..n {
            acc *= self;
        }
        acc
    }
}

impl Real for f64 {
    fn cst(x: f64) -> Self {
        x
    }
    fn re(&self) -> f64 {
        *self
    }
    fn sqrt(self) -> Self {
        f64::sqrt(self)
    }
    fn sin(self) -> Self {
        f64::sin(self)
    }
    fn cos(self) -> Self {
        f64::cos(self)
    }
    fn tan(self) -> Self {
        f64::tan(self)
    }
    fn sinh(self) -> Self {
        f64::sinh(self)
    }
    fn cosh(self) -> Self {
        f64::cosh(self)
    }
    fn asinh(self) -> Self {
        f64::asinh(self)
    }
    fn atan(self) -> Self {
        f64::atan(self)
    }
    fn atanh(self) -> Self {
        f64::atanh(self)
    }
    fn asin(self) -> Self {
        f64::asin(self)
    }
    fn atan2(self, x: Self) -> Self {
        f64::atan2(self, x)
    }
    fn powi(self, n: u32) -> Self {
        f64::powi(self, n as i32)
    }
}

/// `a + b ε` with `ε² = 0`.
#[derive(Clone, Copy, PartialEq, Default)]
pub struct Dual<T> {
    pub a: T,
    pub b: T,
}

impl<T: Real> Dual<T> {
    pub fn new(a: T, b: T) -> Self {
        Dual { a, b }
    }

    pub fn constant(a: T) -> Self {
        Dual { a, b: T::zero() }
    }

    /// The seeded variable `a + ε`.
    pub fn variable(a: T) -> Self {
        Dual { a, b: T::one() }
    }

    /// `f(a) + f'(a) b ε`.
    fn chain(self, f: T, df: T) -> Self {
        Dual { a: f, b: df * self.b }
    }
}

impl<T: fmt::Debug> fmt::Debug for Dual<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({:?} + {:?}ε)", self.a, self.b)
    }
}

impl<T: Real> Zero for Dual<T> {
    fn zero() -> Self {
        Dual::constant(T::zero())
    }
    fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }
}

impl<T: Real> One for Dual<T> {
    fn one() -> Self {
        Dual::constant(T::one())
    }
}

impl<T: Real> Add for Dual<T> {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        Dual { a: self.a + o.a, b: self.b + o.b }
    }
}

impl<T: Real> Sub for Dual<T> {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        Dual { a: self.a - o.a, b: self.b - o.b }
    }
}

impl<T: Real> Mul for Dual<T> {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        Dual { a: self.a * o.a, b: self.a * o.b + self.b * o.a }
    }
}

impl<T: Real> Div for Dual<T> {
    type Output = Self;
    fn div(self, o: Self) -> Self {
        let q = self.a / o.a;
        Dual { a: q, b: (self.b - q * o.b) / o.a }
    }
}

impl<T: Real> Neg for Dual<T> {
    type Output = Self;
    fn neg(self) -> Self {
        Dual { a: -self.a, b: -self.b }
    }
}

impl<T: Real> AddAssign for Dual<T> {
    fn add_assign(&mut self, o: Self) {
        *self = *self + o;
    }
}

impl<T: Real> SubAssign for Dual<T> {
    fn sub_assign(&mut self, o: Self) {
        *self = *self - o;
    }
}

impl<T: Real> MulAssign for Dual<T> {
    fn mul_assign(&mut self, o: Self) {
        *self = *self * o;
    }
}

impl<T: Real> DivAssign for Dual<T> {
    fn div_assign(&mut self, o: Self) {
        *self = *self / o;
    }
}

impl<T: Real> Real for Dual<T> {
    fn cst(x: f64) -> Self {
        Dual::constant(T::cst(x))
    }
    fn re(&self) -> f64 {
        self.a.re()
    }
    fn sqrt(self) -> Self {
        let s = self.a.sqrt();
        self.chain(s, T::one() / (T::cst(2.0) * s))
    }
    fn sin(self) -> Self {
        self.chain(self.a.sin(), self.a.cos())
    }
    fn cos(self) -> Self {
        self.chain(self.a.cos(), -self.a.sin())
    }
    fn tan(self) -> Self {
        let t = self.a.tan();
        self.chain(t, T::one() + t * t)
    }
    fn sinh(self) -> Self {
        self.chain(self.a.sinh(), self.a.cosh())
    }
    fn cosh(self) -> Self {
        self.chain(self.a.cosh(), self.a.sinh())
    }
    fn asinh(self) -> Self {
        self.chain(self.a.asinh(), T::one() / (T::one() + self.a * self.a).sqrt())
    }
    fn atan(self) -> Self {
        self.chain(self.a.atan(), T::one() / (T::one() + self.a * self.a))
    }
    fn atanh(self) -> Self {
        self.chain(self.a.atanh(), T::one() / (T::one() - self.a * self.a))
    }
    fn asin(self) -> Self {
        self.chain(self.a.asin(), T::one() / (T::one() - self.a * self.a).sqrt())
    }
    fn atan2(self, x: Self) -> Self {
        let r2 = self.a * self.a + x.a * x.a;
        Dual { a: self.a.atan2(x.a), b: (x.a * self.b - self.a * x.b) / r2 }
    }
}
