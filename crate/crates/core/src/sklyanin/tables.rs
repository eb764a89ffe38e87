//! Closed-form Poisson brackets of the κ-deformed spacetimes, in geodesic
//! parallel and ambient coordinates.
//!
//! Every table is written through [`CurvTrig`] and is generic over [`Real`],
//! so the same code yields values, dual-number gradients and derivatives in
//! the curvature.

use serde::Serialize;

use crate::group_geom::{ambient_coords, CurvTrig, Dual, Real};

/// Parameters of a table. `eta` multiplies the rotation-sector term of the
/// r-matrix (`α₃ = κ⁻¹ η`); it equals `√(−Λ)` for Λ ≤ 0. For Λ > 0 that
/// root is imaginary and `eta` is a real stand-in: the brackets are affine
/// in it, so checks linear in the brackets hold for any value.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct TableParams<T> {
    pub lambda: T,
    pub eta: T,
    pub kinv: T,
    pub twist: T,
}

impl TableParams<f64> {
    pub fn new(lambda: f64, kinv: f64, twist: f64) -> Self {
        TableParams { lambda, eta: lambda.abs().sqrt(), kinv, twist }
    }

    pub fn with_eta(self, eta: f64) -> Self {
        TableParams { eta, ..self }
    }

    pub fn lift<T: Real>(&self) -> TableParams<T> {
        TableParams { lambda: T::cst(self.lambda), eta: T::cst(self.eta), kinv: T::cst(self.kinv), twist: T::cst(self.twist) }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum TableKind {
    /// `{x^μ, x^ν}` in geodesic parallel coordinates, optionally twisted.
    Local,
    /// `{s^A, s^B}` on the pseudosphere, ordered `(s4, s0, s1, s2, s3)`.
    Ambient,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BracketTable {
    pub name: String,
    pub kind: TableKind,
    pub params: TableParams<f64>,
    /// Restricted to `x3 = 0` and the coordinates `(x0, x1, x2)`.
    pub projected: bool,
}

pub const LOCAL_COORDS: [&str; 4] = ["x0", "x1", "x2", "x3"];
pub const PROJECTED_COORDS: [&str; 3] = ["x0", "x1", "x2"];
pub const AMBIENT_COORDS: [&str; 5] = ["s4", "s0", "s1", "s2", "s3"];

pub fn closed_form_local(lambda: f64, kinv: f64) -> BracketTable {
    table("kappa-AdS local", TableKind::Local, TableParams::new(lambda, kinv, 0.0))
}

pub fn closed_form_twisted(lambda: f64, kinv: f64, twist: f64) -> BracketTable {
    table("twisted kappa-AdS local", TableKind::Local, TableParams::new(lambda, kinv, twist))
}

pub fn closed_form_ambient(lambda: f64, kinv: f64) -> BracketTable {
    table("kappa-AdS ambient", TableKind::Ambient, TableParams::new(lambda, kinv, 0.0))
}

pub fn kappa_minkowski(kinv: f64) -> BracketTable {
    table("kappa-Minkowski", TableKind::Local, TableParams::new(0.0, kinv, 0.0))
}

pub fn twisted_minkowski(kinv: f64, twist: f64) -> BracketTable {
    table("twisted kappa-Minkowski", TableKind::Local, TableParams::new(0.0, kinv, twist))
}

fn table(name: &str, kind: TableKind, params: TableParams<f64>) -> BracketTable {
    BracketTable { name: name.into(), kind, params, projected: false }
}

/// Restriction of a local table to `x3 = 0`.
pub fn project_2plus1(t: &BracketTable) -> BracketTable {
    assert_eq!(t.kind, TableKind::Local, "only local tables project");
    BracketTable { name: format!("{} (2+1)", t.name), projected: true, ..t.clone() }
}

fn local_matrix<T: Real>(x: &[T; 4], p: &TableParams<T>) -> [[T; 4]; 4] {
    let ct = CurvTrig::new(p.lambda);
    let (k, e, v) = (p.kinv, p.eta, p.twist);
    let (ch1, ch2, ch3) = (ct.ch(x[1]), ct.ch(x[2]), ct.ch(x[3]));
    let (th1, th2, th3) = (ct.th(x[1]), ct.th(x[2]), ct.th(x[3]));
    let sh1 = ct.sh(x[1]);
    let ke = k * e;
    let mut m = [[T::zero(); 4]; 4];
    m[0][1] = -(k * th1) / (ch2 * ch2 * ch3 * ch3) - v * ch1 * th2;
    m[0][2] = -(k * th2) / (ch3 * ch3) + v * sh1;
    m[0][3] = -(k * th3);
    m[1][2] = -ke * ch1 * th3 * th3;
    m[1][3] = ke * ch1 * th2 * th3;
    m[2][3] = -ke * sh1 * th3;
    antisymmetrize(m)
}

fn ambient_matrix<T: Real>(s: &[T; 5], p: &TableParams<T>) -> [[T; 5]; 5] {
    let (k, e, e2) = (p.kinv, p.eta, -p.lambda);
    let ke = k * e;
    let (s4, s0, s1, s2, s3) = (s[0], s[1], s[2], s[3], s[4]);
    let mut m = [[T::zero(); 5]; 5];
    for a in 2..5 {
        m[1][a] = -(k * s[a] * s4);
        m[0][a] = e2 * k * s[a] * s0;
    }
    m[0][1] = e2 * k * (s1 * s1 + s2 * s2 + s3 * s3);
    m[2][3] = -ke * s3 * s3;
    m[2][4] = ke * s2 * s3;
    m[3][4] = -ke * s1 * s3;
    antisymmetrize(m)
}

fn antisymmetrize<T: Real, const N: usize>(mut m: [[T; N]; N]) -> [[T; N]; N] {
    for i in 0..N {
        for j in 0..i {
            m[i][j] = -m[j][i];
        }
    }
    m
}

impl BracketTable {
    pub fn coords(&self) -> &'static [&'static str] {
        match (self.kind, self.projected) {
            (TableKind::Ambient, _) => &AMBIENT_COORDS,
            (TableKind::Local, false) => &LOCAL_COORDS,
            (TableKind::Local, true) => &PROJECTED_COORDS,
        }
    }

    pub fn dim(&self) -> usize {
        self.coords().len()
    }

    /// Poisson matrix `{y^i, y^j}` at `y` with explicit parameters.
    pub fn matrix_with<T: Real>(&self, y: &[T], p: &TableParams<T>) -> Vec<Vec<T>> {
        match self.kind {
            TableKind::Local => {
                let x = if self.projected { [y[0], y[1], y[2], T::zero()] } else { [y[0], y[1], y[2], y[3]] };
                local_matrix(&x, p)[..self.dim()].iter().map(|row| row[..self.dim()].to_vec()).collect()
            }
            TableKind::Ambient => ambient_matrix(&[y[0], y[1], y[2], y[3], y[4]], p).iter().map(|r| r.to_vec()).collect(),
        }
    }

    pub fn matrix(&self, y: &[f64]) -> Vec<Vec<f64>> {
        self.matrix_with(y, &self.params)
    }

    pub fn bracket(&self, a: usize, b: usize, y: &[f64]) -> f64 {
        self.matrix(y)[a][b]
    }

    /// Table coordinates of the coset point with local coordinates `x`.
    pub fn coords_of_local(&self, x: &[f64; 4]) -> Vec<f64> {
        match self.kind {
            TableKind::Local => x[..self.dim()].to_vec(),
            TableKind::Ambient => ambient_coords(x, self.params.lambda).to_vec(),
        }
    }

    /// Cyclic sum `Σ_l P^{il} ∂_l P^{jk} + cyclic` for every triple, with
    /// `eta` given explicitly.
    fn jacobiator(&self, y: &[f64], p: &TableParams<f64>) -> Vec<f64> {
        let n = self.dim();
        let pm = self.matrix_with(y, p);
        let lifted = p.lift::<Dual<f64>>();
        let grad: Vec<Vec<Vec<f64>>> = (0..n)
            .map(|l| {
                let yd: Vec<Dual<f64>> =
                    (0..n).map(|m| if m == l { Dual::variable(y[m]) } else { Dual::constant(y[m]) }).collect();
                self.matrix_with(&yd, &lifted).iter().map(|row| row.iter().map(|d| d.b).collect()).collect()
            })
            .collect();
        let term = |i: usize, j: usize, k: usize| (0..n).map(|l| pm[i][l] * grad[l][j][k]).sum::<f64>();
        let mut out = Vec::new();
        for i in 0..n {
            for j in (i + 1)..n {
                for k in (j + 1)..n {
                    out.push(term(i, j, k) + term(j, k, i) + term(k, i, j));
                }
            }
        }
        out
    }

    /// Largest Jacobi violation at `y`. The Jacobiator is a quadratic
    /// polynomial `J₀ + e J₁ + e² J₂` in the rotation-sector coefficient;
    /// with `e² = −Λ` the identity requires `J₀ − Λ J₂ = 0` and `J₁ = 0`,
    /// which is checked for either sign of Λ without complex numbers.
    pub fn jacobi_residual(&self, y: &[f64]) -> f64 {
        let at = |e: f64| self.jacobiator(y, &self.params.with_eta(e));
        let (j0, jp, jm) = (at(0.0), at(1.0), at(-1.0));
        let scale = self.params.lambda.abs().sqrt();
        (0..j0.len())
            .map(|t| {
                let j1 = 0.5 * (jp[t] - jm[t]);
                let j2 = 0.5 * (jp[t] + jm[t]) - j0[t];
                (j0[t] - self.params.lambda * j2).abs().max((scale * j1).abs())
            })
            .fold(0.0, f64::max)
    }

    /// Zeroth and first order in `η` at `η = 0` (with `Λ = −η²`), by
    /// dual-number differentiation.
    pub fn eta_expansion(&self, y: &[f64]) -> [Vec<Vec<f64>>; 2] {
        let eta = Dual::variable(0.0);
        let p = TableParams {
            lambda: -(eta * eta),
            eta,
            kinv: Dual::constant(self.params.kinv),
            twist: Dual::constant(self.params.twist),
        };
        let yd: Vec<Dual<f64>> = y.iter().map(|v| Dual::constant(*v)).collect();
        let m = self.matrix_with(&yd, &p);
        [
            m.iter().map(|r| r.iter().map(|d| d.a).collect()).collect(),
            m.iter().map(|r| r.iter().map(|d| d.b).collect()).collect(),
        ]
    }
}

/// Local table pushed through the Jacobian of the ambient embedding, as a
/// 5×5 matrix in the order `(s4, s0, s1, s2, s3)`.
pub fn push_to_ambient(local: &BracketTable, x: &[f64; 4]) -> [[f64; 5]; 5] {
    assert!(local.kind == TableKind::Local && !local.projected);
    let pm = local.matrix(x);
    let jac: Vec<[f64; 5]> = (0..4)
        .map(|mu| {
            let xd: [Dual<f64>; 4] =
                std::array::from_fn(|nu| if nu == mu { Dual::variable(x[nu]) } else { Dual::constant(x[nu]) });
            let s = ambient_coords(&xd, Dual::constant(local.params.lambda));
            std::array::from_fn(|a| s[a].b)
        })
        .collect();
    std::array::from_fn(|a| {
        std::array::from_fn(|b| {
            let mut acc = 0.0;
            for mu in 0..4 {
                for nu in 0..4 {
                    acc += jac[mu][a] * jac[nu][b] * pm[mu][nu];
                }
            }
            acc
        })
    })
}
