//! Exact polynomial Poisson brackets over [`Scalar`], with coordinates
//! represented by parameters.

use std::collections::BTreeMap;

use serde_json::{json, Value};

use crate::scalars::{Param, ParamValues, Scalar, ScalarError};

#[derive(Clone, Debug, PartialEq)]
pub struct PolyPoisson {
    pub coords: Vec<Param>,
    /// `{coords[i], coords[j]}` for `i < j`.
    brackets: BTreeMap<(usize, usize), Scalar>,
}

impl PolyPoisson {
    pub fn new(coords: Vec<Param>) -> Self {
        PolyPoisson { coords, brackets: BTreeMap::new() }
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn set(&mut self, i: usize, j: usize, value: Scalar) {
        assert_ne!(i, j);
        if i < j {
            self.brackets.insert((i, j), value);
        } else {
            self.brackets.insert((j, i), -value);
        }
    }

    pub fn get(&self, i: usize, j: usize) -> Scalar {
        match i.cmp(&j) {
            std::cmp::Ordering::Less => self.brackets.get(&(i, j)).cloned().unwrap_or_default(),
            std::cmp::Ordering::Greater => -self.brackets.get(&(j, i)).cloned().unwrap_or_default(),
            std::cmp::Ordering::Equal => Scalar::zero(),
        }
    }

    /// `{f, g} = Σ_{i<j} P^{ij} (∂_i f ∂_j g − ∂_j f ∂_i g)`.
    pub fn bracket(&self, f: &Scalar, g: &Scalar) -> Scalar {
        let df: Vec<Scalar> = self.coords.iter().map(|c| f.derivative(*c)).collect();
        let dg: Vec<Scalar> = self.coords.iter().map(|c| g.derivative(*c)).collect();
        let mut out = Scalar::zero();
        for ((i, j), p) in &self.brackets {
            let w = &df[*i] * &dg[*j] - &df[*j] * &dg[*i];
            if !w.is_zero() {
                out += p * &w;
            }
        }
        out
    }

    /// `{x_i,{x_j,x_k}} + cyclic` for every coordinate triple.
    pub fn jacobi(&self) -> Vec<((usize, usize, usize), Scalar)> {
        let n = self.dim();
        let x = |i: usize| Scalar::param(self.coords[i]);
        let mut out = Vec::new();
        for i in 0..n {
            for j in (i + 1)..n {
                for k in (j + 1)..n {
                    let s = self.bracket(&x(i), &self.get(j, k))
                        + self.bracket(&x(j), &self.get(k, i))
                        + self.bracket(&x(k), &self.get(i, j));
                    out.push(((i, j, k), s));
                }
            }
        }
        out
    }

    /// `{C, x_i}` for every coordinate.
    pub fn casimir_residuals(&self, c: &Scalar) -> Vec<Scalar> {
        self.coords.iter().map(|x| self.bracket(c, &Scalar::param(*x))).collect()
    }

    /// Apply a substitution to every bracket.
    pub fn substitute(&self, bindings: &BTreeMap<Param, Scalar>) -> Result<Self, ScalarError> {
        let mut out = PolyPoisson::new(self.coords.clone());
        for ((i, j), p) in &self.brackets {
            let v = p.substitute(bindings)?;
            if !v.is_zero() {
                out.brackets.insert((*i, *j), v);
            }
        }
        Ok(out)
    }

    pub fn nonzero(&self) -> impl Iterator<Item = (&(usize, usize), &Scalar)> {
        self.brackets.iter().filter(|(_, v)| !v.is_zero())
    }

    pub fn compile(&self, values: &ParamValues) -> Result<CompiledPoisson, ScalarError> {
        let n = self.dim();
        let mut entries = Vec::new();
        for ((i, j), p) in &self.brackets {
            entries.push((*i, *j, NumPoly::compile(p, &self.coords, values)?));
        }
        Ok(CompiledPoisson { dim: n, entries })
    }

    pub fn to_json(&self) -> Value {
        let mut m = serde_json::Map::new();
        for ((i, j), p) in self.nonzero() {
            m.insert(format!("{{{},{}}}", self.coords[*i].name(), self.coords[*j].name()), json!(p.to_string()));
        }
        Value::Object(m)
    }
}

/// Polynomial in a fixed coordinate list with numeric coefficients.
#[derive(Clone, Debug, PartialEq)]
pub struct NumPoly {
    terms: Vec<(f64, Vec<(usize, u16)>)>,
}

impl NumPoly {
    /// Binds every parameter other than `coords` from `values`.
    pub fn compile(p: &Scalar, coords: &[Param], values: &ParamValues) -> Result<NumPoly, ScalarError> {
        let mut terms = Vec::new();
        for (m, c) in p.terms() {
            let mut coef = crate::scalars::rational_to_f64(c);
            let mut vars = Vec::new();
            for (q, e) in m.factors() {
                match coords.iter().position(|x| x == q) {
                    Some(i) => vars.push((i, *e)),
                    None => {
                        let v = values.get(*q).ok_or_else(|| ScalarError::UnboundParameter(q.name().into_owned()))?;
                        coef *= v.powi(*e as i32);
                    }
                }
            }
            terms.push((coef, vars));
        }
        Ok(NumPoly { terms })
    }

    pub fn eval(&self, y: &[f64]) -> f64 {
        self.terms.iter().map(|(c, vars)| vars.iter().fold(*c, |acc, (i, e)| acc * y[*i].powi(*e as i32))).sum()
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct CompiledPoisson {
    dim: usize,
    entries: Vec<(usize, usize, NumPoly)>,
}

impl CompiledPoisson {
    pub fn matrix(&self, y: &[f64]) -> Vec<Vec<f64>> {
        let mut m = vec![vec![0.0; self.dim]; self.dim];
        for (i, j, p) in &self.entries {
            let v = p.eval(y);
            m[*i][*j] = v;
            m[*j][*i] = -v;
        }
        m
    }

    /// Hamiltonian vector field `ẏ_i = {y_i, H} = Σ_j P^{ij} ∂_j H`.
    pub fn hamiltonian_field(&self, y: &[f64], grad_h: &[f64]) -> Vec<f64> {
        let m = self.matrix(y);
        m.iter().map(|row| row.iter().zip(grad_h).map(|(p, g)| p * g).sum()).collect()
    }
}

/// Integrates `ẏ = {y, H}` with classical fourth-order Runge–Kutta and
/// returns the trajectory including the initial point.
pub fn hamiltonian_flow(
    p: &CompiledPoisson,
    grad_h: impl Fn(&[f64]) -> Vec<f64>,
    y0: &[f64],
    dt: f64,
    steps: usize,
) -> Vec<Vec<f64>> {
    let field = |y: &[f64]| p.hamiltonian_field(y, &grad_h(y));
    let axpy = |y: &[f64], k: &[f64], h: f64| -> Vec<f64> { y.iter().zip(k).map(|(a, b)| a + h * b).collect() };
    let mut traj = vec![y0.to_vec()];
    let mut y = y0.to_vec();
    for _ in 0..steps {
        let k1 = field(&y);
        let k2 = field(&axpy(&y, &k1, dt / 2.0));
        let k3 = field(&axpy(&y, &k2, dt / 2.0));
        let k4 = field(&axpy(&y, &k3, dt));
        for i in 0..y.len() {
            y[i] += dt / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
        }
        traj.push(y.clone());
    }
    traj
}

fn x(mu: usize) -> Scalar {
    Scalar::param(Param::local(mu))
}

fn s(a: usize) -> Scalar {
    Scalar::param(Param::ambient(a))
}

/// `{x1,x2} = f ∂F/∂x3`, `{x2,x3} = f ∂F/∂x1`, `{x3,x1} = f ∂F/∂x2`;
/// `F` is a Casimir for any `f`.
pub fn poisson_3d(f: &Scalar, big_f: &Scalar) -> PolyPoisson {
    let coords: Vec<Param> = (1..=3).map(Param::local).collect();
    let mut p = PolyPoisson::new(coords.clone());
    p.set(0, 1, f * &big_f.derivative(coords[2]));
    p.set(1, 2, f * &big_f.derivative(coords[0]));
    p.set(2, 0, f * &big_f.derivative(coords[1]));
    p
}

/// `x1² + x2² + x3²`.
pub fn sphere() -> Scalar {
    (1..=3).map(|a| x(a).pow(2)).fold(Scalar::zero(), |acc, t| acc + t)
}

fn eta_kinv() -> Scalar {
    Scalar::param(Param::ETA) * Scalar::param(Param::KAPPA_INV)
}

/// The su(2)-type quadratic brackets linear in `η`.
pub fn quadratic_sphere() -> PolyPoisson {
    let mut p = PolyPoisson::new((1..=3).map(Param::local).collect());
    let ek = eta_kinv();
    p.set(0, 1, -(&ek * &x(3).pow(2)));
    p.set(0, 2, &ek * &(x(2) * x(3)));
    p.set(1, 2, -(&ek * &(x(1) * x(3))));
    p
}

/// Linear κ-Minkowski brackets `{x0, xa} = −κ⁻¹ xa`, plus the twist terms
/// `{x0,x1} −= ϑ x2`, `{x0,x2} += ϑ x1`.
pub fn minkowski(twisted: bool) -> PolyPoisson {
    let mut p = PolyPoisson::new((0..=3).map(Param::local).collect());
    let k = Scalar::param(Param::KAPPA_INV);
    let v = Scalar::param(Param::VARTHETA);
    for a in 1..=3 {
        p.set(0, a, -(&k * &x(a)));
    }
    if twisted {
        p.set(0, 1, p.get(0, 1) - &v * &x(2));
        p.set(0, 2, p.get(0, 2) + &v * &x(1));
    }
    p
}

/// κ-Minkowski time-space brackets with the quadratic sphere space sector:
/// the local table to first order in `η`.
pub fn first_order() -> PolyPoisson {
    let mut p = minkowski(false);
    let q = quadratic_sphere();
    for ((i, j), v) in q.nonzero() {
        p.set(i + 1, j + 1, v.clone());
    }
    p
}

/// The ambient table with `Λ = −η²`, coordinates ordered `(s4, s0, s1, s2, s3)`.
pub fn ambient() -> PolyPoisson {
    let coords = vec![Param::ambient(4), Param::ambient(0), Param::ambient(1), Param::ambient(2), Param::ambient(3)];
    let mut p = PolyPoisson::new(coords);
    let k = Scalar::param(Param::KAPPA_INV);
    let e2k = Scalar::param(Param::ETA).pow(2) * &k;
    let ek = eta_kinv();
    for a in 1..=3 {
        p.set(1, a + 1, -(&k * &(s(a) * s(4))));
        p.set(0, a + 1, &e2k * &(s(a) * s(0)));
    }
    p.set(1, 0, -(&e2k * &(1..=3).map(|a| s(a).pow(2)).fold(Scalar::zero(), |acc, t| acc + t)));
    p.set(2, 3, -(&ek * &s(3).pow(2)));
    p.set(2, 4, &ek * &(s(2) * s(3)));
    p.set(3, 4, -(&ek * &(s(1) * s(3))));
    p
}

/// `(s4)² + η²(s0)² − η²|s|²`, the pseudosphere with `Λ = −η²`.
pub fn pseudosphere() -> Scalar {
    let e2 = Scalar::param(Param::ETA).pow(2);
    let spatial = (1..=3).map(|a| s(a).pow(2)).fold(Scalar::zero(), |acc, t| acc + t);
    s(4).pow(2) + &e2 * &s(0).pow(2) - &e2 * &spatial
}
