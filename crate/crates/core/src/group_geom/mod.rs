//! The (A)dS group in its 5×5 vector representation: group elements from
//! ordered exponentials, ambient and geodesic parallel coordinates, the
//! metric, and left/right invariant vector fields.
//!
//! Matrix rows and columns are ordered `(s4, s0, s1, s2, s3)`, so the origin
//! of spacetime is the first basis vector and the first column of a group
//! element holds the ambient coordinates of the coset point.

pub mod curvtrig;
pub mod expm;
pub mod real;

use nalgebra::{Matrix4, SMatrix};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

pub use curvtrig::CurvTrig;
pub use real::{Dual, Real};

use crate::liealg::LieElement;

pub type Mat5<T> = SMatrix<T, 5, 5>;

pub const COORD_LABELS: [&str; 10] = ["x0", "x1", "x2", "x3", "xi1", "xi2", "xi3", "theta1", "theta2", "theta3"];
pub const AMBIENT_LABELS: [&str; 5] = ["s4", "s0", "s1", "s2", "s3"];

/// Exponentials are refused beyond this value of `|x|·√|Λ|`.
pub const OVERFLOW_LIMIT: f64 = 50.0;
pub const PSEUDOSPHERE_TOL: f64 = 1e-8;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum GeomError {
    #[error("coordinate {0} = {1} overflows the exponential")]
    NumericOverflow(&'static str, f64),
    #[error("point leaves the principal chart: {0}")]
    ChartBoundary(String),
    #[error("point is off the pseudosphere (residual {0:e})")]
    OffPseudosphere(f64),
    #[error("s4 = {0} is not positive")]
    OutOfChart(f64),
}

/// `ρ(T_i)` for a basis generator.
pub fn rep_basis<T: Real>(i: usize, lambda: T) -> Mat5<T> {
    let mut m = Mat5::<T>::zeros();
    let one = T::one();
    match i {
        0 => {
            m[(0, 1)] = lambda;
            m[(1, 0)] = one;
        }
        1..=3 => {
            m[(0, i + 1)] = -lambda;
            m[(i + 1, 0)] = one;
        }
        4..=6 => {
            m[(1, i - 2)] = one;
            m[(i - 2, 1)] = one;
        }
        7 => {
            m[(3, 4)] = -one;
            m[(4, 3)] = one;
        }
        8 => {
            m[(2, 4)] = one;
            m[(4, 2)] = -one;
        }
        9 => {
            m[(2, 3)] = -one;
            m[(3, 2)] = one;
        }
        _ => panic!("generator index {i} out of range"),
    }
    m
}

pub fn vector_rep(x: &LieElement<f64>, lambda: f64) -> Mat5<f64> {
    x.components.iter().enumerate().filter(|(_, c)| **c != 0.0).map(|(i, c)| rep_basis(i, lambda) * *c).sum()
}

/// `I_Λ = diag(1, −Λ, Λ, Λ, Λ)`.
pub fn bilinear_form(lambda: f64) -> Mat5<f64> {
    Mat5::from_diagonal(&nalgebra::Vector5::new(1.0, -lambda, lambda, lambda, lambda))
}

/// Coordinates `(x0, x1, x2, x3, ξ1, ξ2, ξ3, θ1, θ2, θ3)`.
#[derive(Clone, Copy, Debug, PartialEq, serde::Serialize)]
pub struct GroupPoint {
    pub coords: [f64; 10],
    pub lambda: f64,
}

impl GroupPoint {
    pub fn new(x: [f64; 4], xi: [f64; 3], theta: [f64; 3], lambda: f64) -> Self {
        let mut coords = [0.0; 10];
        coords[..4].copy_from_slice(&x);
        coords[4..7].copy_from_slice(&xi);
        coords[7..].copy_from_slice(&theta);
        GroupPoint { coords, lambda }
    }

    pub fn translation(x: [f64; 4], lambda: f64) -> Self {
        Self::new(x, [0.0; 3], [0.0; 3], lambda)
    }

    pub fn local(&self) -> [f64; 4] {
        [self.coords[0], self.coords[1], self.coords[2], self.coords[3]]
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct GroupElement {
    pub m: Mat5<f64>,
}

impl GroupElement {
    pub fn identity() -> Self {
        GroupElement { m: Mat5::identity() }
    }

    /// `‖Gᵀ I_Λ G − I_Λ‖∞`.
    pub fn isometry_residual(&self, lambda: f64) -> f64 {
        let i = bilinear_form(lambda);
        (self.m.transpose() * i * self.m - i).amax()
    }

    pub fn det(&self) -> f64 {
        self.m.determinant()
    }

    pub fn ambient(&self) -> AmbientPoint {
        AmbientPoint(std::array::from_fn(|r| self.m[(r, 0)]))
    }

    pub fn mul(&self, other: &GroupElement) -> GroupElement {
        GroupElement { m: self.m * other.m }
    }
}

/// `exp(x0 P0) exp(x1 P1) ⋯ exp(θ3 J3)`, translations first, then boosts,
/// then rotations.
pub fn group_element(p: &GroupPoint) -> Result<GroupElement, GeomError> {
    let scale = p.lambda.abs().sqrt().max(1.0);
    let mut m = Mat5::identity();
    for (i, (&c, label)) in p.coords.iter().zip(COORD_LABELS).enumerate() {
        if !c.is_finite() || (i < 4 && c.abs() * scale > OVERFLOW_LIMIT) || (i >= 4 && c.abs() > OVERFLOW_LIMIT) {
            return Err(GeomError::NumericOverflow(label, c));
        }
        if c != 0.0 {
            m *= expm::expm(&(rep_basis(i, p.lambda) * c));
        }
    }
    Ok(GroupElement { m })
}

/// Ambient coordinates in the order `(s4, s0, s1, s2, s3)`.
#[derive(Clone, Copy, Debug, PartialEq, serde::Serialize)]
pub struct AmbientPoint(pub [f64; 5]);

impl AmbientPoint {
    pub const ORIGIN: AmbientPoint = AmbientPoint([1.0, 0.0, 0.0, 0.0, 0.0]);

    /// `(s4)² − Λ(s0)² + Λ|s|² − 1`.
    pub fn pseudosphere_residual(&self, lambda: f64) -> f64 {
        pseudosphere(&self.0, lambda) - 1.0
    }
}

fn pseudosphere<T: Real>(s: &[T; 5], lambda: T) -> T {
    s[0] * s[0] - lambda * s[1] * s[1] + lambda * (s[2] * s[2] + s[3] * s[3] + s[4] * s[4])
}

/// Rejects points where `Ct(x0)` or some `Ch(xa)` fails to be positive.
pub fn check_chart(x: &[f64; 4], lambda: f64) -> Result<(), GeomError> {
    let bound = std::f64::consts::FRAC_PI_2 / lambda.abs().sqrt();
    if lambda < 0.0 && x[0].abs() >= bound {
        return Err(GeomError::ChartBoundary(format!("|x0| = {} reaches π/(2η) = {bound}", x[0].abs())));
    }
    if lambda > 0.0 {
        for (a, xa) in x.iter().enumerate().skip(1) {
            if xa.abs() >= bound {
                return Err(GeomError::ChartBoundary(format!("|x{a}| = {} reaches π/(2|η|) = {bound}", xa.abs())));
            }
        }
    }
    Ok(())
}

/// The geodesic parallel coordinate map, without chart checks.
pub fn ambient_coords<T: Real>(x: &[T; 4], lambda: T) -> [T; 5] {
    let ct = CurvTrig::new(lambda);
    let (c1, c2, c3) = (ct.ch(x[1]), ct.ch(x[2]), ct.ch(x[3]));
    let c123 = c1 * c2 * c3;
    [ct.ct(x[0]) * c123, ct.st(x[0]) * c123, ct.sh(x[1]) * c2 * c3, ct.sh(x[2]) * c3, ct.sh(x[3])]
}

pub fn ambient_from_local(x: &[f64; 4], lambda: f64) -> Result<AmbientPoint, GeomError> {
    check_chart(x, lambda)?;
    Ok(AmbientPoint(ambient_coords(x, lambda)))
}

/// Inverse of [`ambient_coords`] on the principal chart, solving for
/// `x3, x2, x1` and then `x0` from `s0/s4`. Does not test the pseudosphere.
pub fn local_coords<T: Real>(s: &[T; 5], lambda: T) -> Result<[T; 4], GeomError> {
    if s[0].re() <= 0.0 {
        return Err(GeomError::OutOfChart(s[0].re()));
    }
    let ct = CurvTrig::new(lambda);
    let x3 = ct.sh_inv(s[4]);
    let c3 = ct.ch(x3);
    let x2 = ct.sh_inv(s[3] / c3);
    let c2 = ct.ch(x2);
    let x1 = ct.sh_inv(s[2] / (c2 * c3));
    let x0 = ct.tt_inv(s[1] / s[0]);
    let x = [x0, x1, x2, x3];
    if x.iter().any(|v| !v.re().is_finite()) {
        return Err(GeomError::ChartBoundary("ambient point outside the range of the coordinate map".into()));
    }
    Ok(x)
}

pub fn local_from_ambient(s: &AmbientPoint, lambda: f64) -> Result<[f64; 4], GeomError> {
    let res = s.pseudosphere_residual(lambda);
    if res.abs() >= PSEUDOSPHERE_TOL || !res.is_finite() {
        return Err(GeomError::OffPseudosphere(res));
    }
    local_coords(&s.0, lambda)
}

/// The induced metric in geodesic parallel coordinates, signature (+,−,−,−).
pub fn metric_at(x: &[f64; 4], lambda: f64) -> Result<Matrix4<f64>, GeomError> {
    check_chart(x, lambda)?;
    let ct = CurvTrig::new(lambda);
    let (c1, c2, c3) = (ct.ch(x[1]).powi(2), ct.ch(x[2]).powi(2), ct.ch(x[3]).powi(2));
    Ok(Matrix4::from_diagonal(&nalgebra::Vector4::new(c1 * c2 * c3, -c2 * c3, -c3, -1.0)))
}

/// Pullback of the flat ambient metric `I_Λ/(−Λ)` through the Jacobian of
/// [`ambient_coords`], differentiated with dual numbers. At `Λ = 0` the `s4`
/// term vanishes identically and is dropped.
pub fn pullback_metric(x: &[f64; 4], lambda: f64) -> Result<Matrix4<f64>, GeomError> {
    check_chart(x, lambda)?;
    let jac: [[f64; 5]; 4] = std::array::from_fn(|mu| {
        let xd: [Dual<f64>; 4] =
            std::array::from_fn(|nu| if nu == mu { Dual::variable(x[nu]) } else { Dual::constant(x[nu]) });
        let s = ambient_coords(&xd, Dual::constant(lambda));
        std::array::from_fn(|a| s[a].b)
    });
    Ok(Matrix4::from_fn(|mu, nu| {
        let mut g = jac[mu][1] * jac[nu][1] - (2..5).map(|a| jac[mu][a] * jac[nu][a]).sum::<f64>();
        if lambda != 0.0 {
            g -= jac[mu][0] * jac[nu][0] / lambda;
        }
        g
    }))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
pub enum Side {
    Left,
    Right,
}

/// A smooth function on the group, evaluable on matrices of any [`Real`]
/// type so that it can be differentiated.
pub trait GroupFn: Sync {
    fn eval<T: Real>(&self, g: &Mat5<T>, lambda: f64) -> Result<T, GeomError>;
}

/// Geodesic parallel coordinate `x^μ` of the coset point, read from the
/// first column.
#[derive(Clone, Copy, Debug)]
pub struct LocalCoord(pub usize);

impl GroupFn for LocalCoord {
    fn eval<T: Real>(&self, g: &Mat5<T>, lambda: f64) -> Result<T, GeomError> {
        let s: [T; 5] = std::array::from_fn(|r| g[(r, 0)]);
        Ok(local_coords(&s, T::cst(lambda))?[self.0])
    }
}

/// Ambient coordinate, indexed in the order `(s4, s0, s1, s2, s3)`.
#[derive(Clone, Copy, Debug)]
pub struct AmbientCoord(pub usize);

impl GroupFn for AmbientCoord {
    fn eval<T: Real>(&self, g: &Mat5<T>, _lambda: f64) -> Result<T, GeomError> {
        Ok(g[(self.0, 0)])
    }
}

/// The function `X_i f` for an invariant field `X_i`.
#[derive(Clone, Copy, Debug)]
pub struct FieldOf<'a, F> {
    pub side: Side,
    pub generator: usize,
    pub f: &'a F,
}

impl<F: GroupFn> GroupFn for FieldOf<'_, F> {
    fn eval<T: Real>(&self, g: &Mat5<T>, lambda: f64) -> Result<T, GeomError> {
        invariant_field(self.side, self.generator, self.f, g, lambda)
    }
}

/// `d/dt f(h·exp(t T_i))` (left) or `d/dt f(exp(t T_i)·h)` (right) at `t = 0`,
/// by one dual-number evaluation: `exp(ε T_i) = 1 + ε ρ(T_i)` exactly.
pub fn invariant_field<T: Real, F: GroupFn + ?Sized>(
    side: Side,
    i: usize,
    f: &F,
    h: &Mat5<T>,
    lambda: f64,
) -> Result<T, GeomError> {
    let rho = rep_basis(i, lambda);
    let step = Mat5::<Dual<T>>::from_fn(|r, c| {
        Dual::new(if r == c { T::one() } else { T::zero() }, T::cst(rho[(r, c)]))
    });
    let hd = h.map(Dual::constant);
    let moved = match side {
        Side::Left => hd * step,
        Side::Right => step * hd,
    };
    Ok(f.eval(&moved, lambda)?.b)
}

/// Central finite-difference version of [`invariant_field`], using the
/// matrix exponential.
pub fn invariant_field_fd<F: GroupFn + ?Sized>(
    side: Side,
    i: usize,
    f: &F,
    h: &Mat5<f64>,
    lambda: f64,
    step: f64,
) -> Result<f64, GeomError> {
    let at = |t: f64| {
        let e = expm::expm(&(rep_basis(i, lambda) * t));
        let g = match side {
            Side::Left => h * e,
            Side::Right => e * h,
        };
        f.eval(&g, lambda)
    };
    Ok((at(step)? - at(-step)?) / (2.0 * step))
}

/// Half-width of the sampling box for translation coordinates.
pub fn chart_box(lambda: f64) -> f64 {
    0.8 / lambda.abs().sqrt().max(1.0)
}

pub const LORENTZ_BOX: f64 = 0.5;

/// Seeded uniform samples from the chart box, with Lorentz-sector
/// coordinates in `[−0.5, 0.5]`.
pub fn sample_points(lambda: f64, n: usize, seed: u64) -> Vec<GroupPoint> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let b = chart_box(lambda);
    let guard = 0.9 * std::f64::consts::FRAC_PI_2;
    let mut out = Vec::with_capacity(n);
    while out.len() < n {
        let x: [f64; 4] = std::array::from_fn(|_| rng.random_range(-b..=b));
        let xi: [f64; 3] = std::array::from_fn(|_| rng.random_range(-LORENTZ_BOX..=LORENTZ_BOX));
        let th: [f64; 3] = std::array::from_fn(|_| rng.random_range(-LORENTZ_BOX..=LORENTZ_BOX));
        let eta = lambda.abs().sqrt();
        let guarded = if lambda < 0.0 { eta * x[0].abs() < guard } else { x[1..].iter().all(|v| eta * v.abs() < guard) };
        if guarded {
            out.push(GroupPoint::new(x, xi, th, lambda));
        }
    }
    out
}
