//! Curvature-dependent trigonometry, real-analytic in the cosmological
//! constant.
//!
//! With `η² = −Λ` the four primitives are `Ct(x) = cos(ηx)`,
//! `St(x) = sin(ηx)/η`, `Ch(x) = cosh(ηx)` and `Sh(x) = sinh(ηx)/η`. None of
//! them ever needs an imaginary number: each is `C(u, x)` or `S(u, x)` below
//! with `u = Λ` (Ct, St) or `u = −Λ` (Ch, Sh), where `C(u, x) = cosh(√u x)`
//! and `S(u, x) = sinh(√u x)/√u`, continued to `u < 0` through `cos`/`sin`.

use super::real::Real;

/// Below this `|u x²|` the Taylor series replaces the closed forms.
pub const SERIES_THRESHOLD: f64 = 1e-8;

fn small<T: Real>(u: T, x: T) -> bool {
    (u.re() * x.re() * x.re()).abs() < SERIES_THRESHOLD
}

/// `cosh(√u x)`.
pub fn c<T: Real>(u: T, x: T) -> T {
    if small(u, x) {
        let z = u * x * x;
        return T::one() + z * (T::cst(0.5) + z * (T::cst(1.0 / 24.0) + z * T::cst(1.0 / 720.0)));
    }
    if u.re() > 0.0 {
        (u.sqrt() * x).cosh()
    } else {
        ((-u).sqrt() * x).cos()
    }
}

/// `sinh(√u x)/√u`.
pub fn s<T: Real>(u: T, x: T) -> T {
    if small(u, x) {
        let z = u * x * x;
        return x * (T::one() + z * (T::cst(1.0 / 6.0) + z * (T::cst(1.0 / 120.0) + z * T::cst(1.0 / 5040.0))));
    }
    if u.re() > 0.0 {
        let r = u.sqrt();
        (r * x).sinh() / r
    } else {
        let r = (-u).sqrt();
        (r * x).sin() / r
    }
}

/// Inverse of `x ↦ S(u, x)` on its principal branch.
pub fn s_inv<T: Real>(u: T, y: T) -> T {
    if small(u, y) {
        let z = u * y * y;
        return y * (T::one() + z * (T::cst(-1.0 / 6.0) + z * (T::cst(3.0 / 40.0) + z * T::cst(-5.0 / 112.0))));
    }
    if u.re() > 0.0 {
        let r = u.sqrt();
        (r * y).asinh() / r
    } else {
        let r = (-u).sqrt();
        (r * y).asin() / r
    }
}

/// Inverse of `x ↦ S(u, x)/C(u, x)` on its principal branch.
pub fn t_inv<T: Real>(u: T, y: T) -> T {
    if small(u, y) {
        let z = u * y * y;
        return y * (T::one() + z * (T::cst(1.0 / 3.0) + z * (T::cst(1.0 / 5.0) + z * T::cst(1.0 / 7.0))));
    }
    if u.re() > 0.0 {
        let r = u.sqrt();
        (r * y).atanh() / r
    } else {
        let r = (-u).sqrt();
        (r * y).atan() / r
    }
}

/// The four primitives at a fixed cosmological constant.
#[derive(Clone, Copy, Debug)]
pub struct CurvTrig<T> {
    pub lambda: T,
}

impl<T: Real> CurvTrig<T> {
    pub fn new(lambda: T) -> Self {
        CurvTrig { lambda }
    }

    /// `η² = −Λ`.
    pub fn eta2(&self) -> T {
        -self.lambda
    }

    pub fn ct(&self, x: T) -> T {
        c(self.lambda, x)
    }

    pub fn st(&self, x: T) -> T {
        s(self.lambda, x)
    }

    pub fn ch(&self, x: T) -> T {
        c(-self.lambda, x)
    }

    pub fn sh(&self, x: T) -> T {
        s(-self.lambda, x)
    }

    /// `tanh(ηx)/η`.
    pub fn th(&self, x: T) -> T {
        self.sh(x) / self.ch(x)
    }

    /// `tan(ηx)/η`.
    pub fn tt(&self, x: T) -> T {
        self.st(x) / self.ct(x)
    }

    pub fn sh_inv(&self, y: T) -> T {
        s_inv(-self.lambda, y)
    }

    pub fn tt_inv(&self, y: T) -> T {
        t_inv(self.lambda, y)
    }

    /// `Ch² − η² Sh² − 1`.
    pub fn hyperbolic_residual(&self, x: T) -> T {
        let (ch, sh) = (self.ch(x), self.sh(x));
        ch * ch + self.lambda * sh * sh - T::one()
    }

    /// `Ct² + η² St² − 1`.
    pub fn circular_residual(&self, x: T) -> T {
        let (ct, st) = (self.ct(x), self.st(x));
        ct * ct - self.lambda * st * st - T::one()
    }
}
