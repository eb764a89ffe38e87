//! Classification of κ-type r-matrices on the (A)dS algebra: the generic
//! ansatz, the linear primitivity constraint δ(P0)=0, the quadratic
//! constraint surface of the six-parameter family, the sphere
//! parametrization, and reduction to canonical form by a rotation.

use std::collections::{BTreeMap, BTreeSet};

use thiserror::Error;

use crate::bialgebra::{cocommutator_of, mcybe_components, mcybe_residual, BialgebraError, Bivector, CocommutatorTable};
use crate::coeff::{Coeff, Residual};
use crate::liealg::{ads_algebra, epsilon, j, k, p, KINEMATICAL_LABELS, rotate_basis, rotate_basis_numeric, LieAlgebra, LieElement, LieError, ADS3, DIM, P0};
use crate::scalars::{Param, RelationSet, Scalar};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum RClassError {
    #[error("point violates the quadratic constraints (residual {0:e})")]
    ConstraintViolated(f64),
    #[error(transparent)]
    Bialgebra(#[from] BialgebraError),
    #[error(transparent)]
    Lie(#[from] LieError),
}

/// An r-matrix depending linearly on `free_params`, subject to `relations`.
#[derive(Clone, Debug)]
pub struct RFamily {
    pub r: Bivector<Scalar>,
    pub free_params: Vec<Param>,
    pub relations: Vec<Scalar>,
}

/// Outcome of eliminating unknowns from linear equations whose coefficients
/// are polynomials in the remaining parameters (assumed generic, i.e. every
/// monomial in them is nonzero).
#[derive(Clone, Debug, Default)]
pub struct LinearSolution {
    pub bindings: BTreeMap<Param, Scalar>,
    /// Equations left over that could not be solved without division.
    pub unsolved: Vec<Scalar>,
    /// Equations with no unknowns that do not vanish.
    pub inconsistent: Vec<Scalar>,
}

fn strip_generic_content(e: &Scalar, unknowns: &BTreeSet<Param>) -> Scalar {
    let content = e.monomial_content();
    let generic = crate::scalars::Monomial::from_pairs(
        content.factors().iter().copied().filter(|(q, _)| !unknowns.contains(q)),
    );
    e.div_monomial(&generic).expect("content divides").monic()
}

/// Gaussian elimination pivoting on constant coefficients.
pub fn solve_linear(eqs: Vec<Scalar>, unknowns: &BTreeSet<Param>) -> LinearSolution {
    let mut sol = LinearSolution::default();
    let mut pending = eqs;
    loop {
        let mut live = Vec::new();
        for e in pending {
            let e = e.substitute(&sol.bindings).expect("bindings are fully reduced");
            if e.is_zero() {
                continue;
            }
            if e.params().is_disjoint(unknowns) {
                sol.inconsistent.push(e);
                continue;
            }
            let e = strip_generic_content(&e, unknowns);
            if !live.contains(&e) {
                live.push(e);
            }
        }
        if live.is_empty() {
            break;
        }
        let pick = |require_constant: bool| {
            let mut best: Option<(usize, usize, Param)> = None;
            for (n, e) in live.iter().enumerate() {
                let vars: Vec<Param> = e.params().intersection(unknowns).copied().collect();
                if !require_constant && vars.len() != 1 {
                    continue;
                }
                for &v in vars.iter().rev() {
                    if e.degree_in(v) != 1 {
                        continue;
                    }
                    let coef = e.linear_coefficient(v);
                    if require_constant && coef.as_constant().is_none() {
                        continue;
                    }
                    let key = (e.num_terms(), n, v);
                    if best.is_none_or(|b| (key.0, key.1) < (b.0, b.1)) {
                        best = Some(key);
                    }
                    break;
                }
            }
            best
        };
        let choice = pick(true).or_else(|| pick(false));
        let Some((_, n, v)) = choice else {
            sol.unsolved.extend(live);
            break;
        };
        let e = live.swap_remove(n);
        let coef = e.linear_coefficient(v);
        let rest = &e - &(&coef * &Scalar::param(v));
        let value = match coef.as_constant() {
            Some(c) => rest.scale(&(-c.recip())),
            None if rest.is_zero() => Scalar::zero(),
            None => {
                let m = coef.monomial_content();
                match (coef.num_terms(), rest.div_monomial(&m)) {
                    (1, Some(q)) => q.scale(&(-coef.leading_term().unwrap().1.recip())),
                    _ => {
                        sol.unsolved.push(e);
                        sol.unsolved.extend(live);
                        break;
                    }
                }
            }
        };
        let single = BTreeMap::from([(v, value.clone())]);
        for b in sol.bindings.values_mut() {
            *b = b.substitute(&single).expect("acyclic");
        }
        sol.bindings.insert(v, value);
        pending = live;
    }
    sol
}

impl RFamily {
    /// Whether some choice of the free parameters gives `target`.
    pub fn contains(&self, target: &Bivector<Scalar>) -> bool {
        let diff = self.r.sub(target);
        let mut eqs: Vec<Scalar> = diff.components().values().cloned().collect();
        eqs.extend(self.relations.iter().cloned());
        let unknowns: BTreeSet<Param> = self.free_params.iter().copied().collect();
        let sol = solve_linear(eqs, &unknowns);
        sol.inconsistent.is_empty() && sol.unsolved.is_empty()
    }

    pub fn dimension(&self) -> usize {
        self.free_params.len()
    }
}

/// `Σ_{i<j} r_{Ti,Tj} Tᵢ∧Tⱼ` with 45 independent parameters.
pub fn generic_ansatz() -> RFamily {
    let mut r = Bivector::zero(DIM);
    let mut free_params = Vec::new();
    for a in 0..DIM {
        for b in a + 1..DIM {
            let q = Param::ansatz(a, b);
            r.add_wedge(a, b, &Scalar::param(q));
            free_params.push(q);
        }
    }
    RFamily { r, free_params, relations: Vec::new() }
}

/// Restricts `fam` to the r-matrices for which `x` is primitive, δ(x)=0.
pub fn impose_primitivity(fam: &RFamily, g: &LieAlgebra<Scalar>, x: &LieElement<Scalar>) -> RFamily {
    let delta = cocommutator_of(g, &fam.r, x);
    let unknowns: BTreeSet<Param> = fam.free_params.iter().copied().collect();
    let sol = solve_linear(delta.components().values().cloned().collect(), &unknowns);
    let r = fam.r.substitute(&sol.bindings).expect("acyclic");
    let free_params = fam.free_params.iter().copied().filter(|q| !sol.bindings.contains_key(q)).collect();
    let mut relations: Vec<Scalar> =
        fam.relations.iter().map(|e| e.substitute(&sol.bindings).expect("acyclic")).filter(|e| !e.is_zero()).collect();
    relations.extend(sol.unsolved);
    relations.extend(sol.inconsistent);
    RFamily { r, free_params, relations }
}

/// `κ⁻¹ Σ Kₐ∧Pₐ + P0∧(β·J) + α₃ J1∧J2 − α₂ J1∧J3 + α₁ J2∧J3`.
pub fn family_r<C: Coeff>(alpha: &[C; 3], beta: &[C; 3], kinv: &C) -> Bivector<C> {
    let mut r = Bivector::zero(DIM);
    for a in 1..=3 {
        r.add_wedge(k(a), p(a), kinv);
        r.add_wedge(P0, j(a), &beta[a - 1]);
    }
    r.add_wedge(j(1), j(2), &alpha[2]);
    r.add_wedge(j(1), j(3), &alpha[1].negated());
    r.add_wedge(j(2), j(3), &alpha[0]);
    r
}

/// The κ-Poincaré r-matrix `κ⁻¹ Σ Kₐ∧Pₐ`.
pub fn r0<C: Coeff>(kinv: &C) -> Bivector<C> {
    family_r(&[C::zero(), C::zero(), C::zero()], &[C::zero(), C::zero(), C::zero()], kinv)
}

/// `r0 + ϑ J3∧P0`.
pub fn r0_twisted<C: Coeff>(kinv: &C, vartheta: &C) -> Bivector<C> {
    r_lambda_twisted(kinv, &C::zero(), vartheta)
}

/// `κ⁻¹ (Σ Kₐ∧Pₐ + η J1∧J2)`.
pub fn r_lambda<C: Coeff>(kinv: &C, eta: &C) -> Bivector<C> {
    r_lambda_twisted(kinv, eta, &C::zero())
}

/// `κ⁻¹ (Σ Kₐ∧Pₐ + η J1∧J2) + ϑ J3∧P0`.
pub fn r_lambda_twisted<C: Coeff>(kinv: &C, eta: &C, vartheta: &C) -> Bivector<C> {
    let zero = C::zero();
    family_r(&[zero.clone(), zero.clone(), kinv.times(eta)], &[zero.clone(), zero, vartheta.negated()], kinv)
}

/// `κ⁻¹ (K1∧P1 + K2∧P2)` in the ten-dimensional basis.
pub fn r_2plus1<C: Coeff>(kinv: &C) -> Bivector<C> {
    Bivector::from_terms(DIM, [((k(1), p(1)), kinv.clone()), ((k(2), p(2)), kinv.clone())])
}

/// mCYBE residual of [`r_2plus1`] on the (2+1) subalgebra.
pub fn mcybe_2plus1<C: Coeff>(g: &LieAlgebra<C>, kinv: &C) -> Result<Residual, RClassError> {
    let sub = g.restrict(&ADS3)?;
    let r = r_2plus1(kinv).restrict(&ADS3).expect("supported on the subalgebra");
    Ok(mcybe_residual(&sub, &r)?)
}

/// Closed-form `δ` of [`r_lambda`] with `Λ = −η²`; at `η = 0` the
/// κ-Poincaré table.
pub fn kappa_ads_cocommutator<C: Coeff>(kinv: &C, eta: &C) -> CocommutatorTable<C> {
    let e2 = eta.times(eta);
    let mut values = vec![Bivector::zero(DIM); DIM];
    let mut put = |gen: usize, a: usize, b: usize, c: C| values[gen].add_wedge(a, b, &c.times(kinv));
    put(j(1), j(1), j(3), eta.clone());
    put(j(2), j(2), j(3), eta.clone());
    for a in 1..=3 {
        put(p(a), p(a), P0, C::one());
        put(k(a), k(a), P0, C::one());
        for b in 1..=3 {
            for c in 1..=3 {
                let s = epsilon(a, b, c);
                if s != 0 {
                    put(k(a), p(b), j(c), C::from_i64(s));
                }
            }
        }
    }
    put(p(1), p(3), j(1), eta.negated());
    put(p(2), p(3), j(2), eta.negated());
    put(p(3), p(1), j(1), eta.clone());
    put(p(3), p(2), j(2), eta.clone());
    put(p(1), k(2), j(3), e2.negated());
    put(p(1), k(3), j(2), e2.clone());
    put(p(2), k(1), j(3), e2.clone());
    put(p(2), k(3), j(1), e2.negated());
    put(p(3), k(1), j(2), e2.negated());
    put(p(3), k(2), j(1), e2.clone());
    put(k(1), k(3), j(1), eta.negated());
    put(k(2), k(3), j(2), eta.negated());
    put(k(3), k(1), j(1), eta.clone());
    put(k(3), k(2), j(2), eta.clone());
    CocommutatorTable { labels: KINEMATICAL_LABELS.iter().map(|l| l.to_string()).collect(), values }
}

fn formal(q: Param) -> Scalar {
    Scalar::param(q)
}

pub fn formal_alpha() -> [Scalar; 3] {
    [formal(Param::alpha(1)), formal(Param::alpha(2)), formal(Param::alpha(3))]
}

pub fn formal_beta() -> [Scalar; 3] {
    [formal(Param::beta(1)), formal(Param::beta(2)), formal(Param::beta(3))]
}

/// The (A)dS algebra written through η with Λ = −η².
pub fn eta_algebra() -> LieAlgebra<Scalar> {
    ads_algebra(-formal(Param::ETA).pow(2))
}

/// The quadratic relations cutting out the solutions inside the
/// six-parameter family.
pub fn expected_constraints() -> Vec<Scalar> {
    let a = formal_alpha();
    let b = formal_beta();
    let r2 = (formal(Param::ETA) * formal(Param::KAPPA_INV)).pow(2);
    vec![
        &b[0] * &a[2] - &b[2] * &a[0],
        &b[0] * &a[1] - &b[1] * &a[0],
        &b[1] * &a[2] - &b[2] * &a[1],
        &(&a[0].pow(2) + &a[1].pow(2)) + &(&a[2].pow(2) - &r2),
    ]
}

/// The distinct (monic) components of `ad_X [[r,r]]` over all generators X,
/// for the six-parameter family with formal α, β, κ⁻¹ and Λ = −η².
pub fn constraint_residuals() -> Result<Vec<Scalar>, RClassError> {
    let g = eta_algebra();
    let r = family_r(&formal_alpha(), &formal_beta(), &formal(Param::KAPPA_INV));
    let mut out: Vec<Scalar> = Vec::new();
    for t in mcybe_components(&g, &r)? {
        for c in t.components().values() {
            let m = c.monic();
            if !out.contains(&m) {
                out.push(m);
            }
        }
    }
    out.sort_by(|x, y| x.leading_term().cmp(&y.leading_term()));
    Ok(out)
}

/// Remainders of each of `polys` modulo `basis` (division by leading terms).
pub fn remainders(polys: &[Scalar], basis: &[Scalar]) -> Vec<Scalar> {
    let rel = RelationSet::from_polynomials(basis);
    polys.iter().map(|q| rel.reduce(q)).collect()
}

/// Two generating sets define the same ideal as certified by mutual
/// reduction to zero.
pub fn mutually_reduce(a: &[Scalar], b: &[Scalar]) -> bool {
    remainders(a, b).iter().all(Scalar::is_zero) && remainders(b, a).iter().all(Scalar::is_zero)
}

/// Largest `ad_X [[r,r]]` over generators, numeric, for the six-parameter
/// family at cosmological constant `−η²`.
pub fn numeric_mcybe(alpha: &[f64; 3], beta: &[f64; 3], kinv: f64, eta: f64) -> f64 {
    let g = ads_algebra(-eta * eta);
    mcybe_residual(&g, &family_r(alpha, beta, &kinv)).expect("antisymmetric").norm
}

/// Values of [`expected_constraints`] at a numeric point.
pub fn numeric_constraints(alpha: &[f64; 3], beta: &[f64; 3], kinv: f64, eta: f64) -> [f64; 4] {
    let (a, b) = (alpha, beta);
    [
        b[0] * a[2] - b[2] * a[0],
        b[0] * a[1] - b[1] * a[0],
        b[1] * a[2] - b[2] * a[1],
        a[0] * a[0] + a[1] * a[1] + a[2] * a[2] - (eta * kinv).powi(2),
    ]
}

/// `(α₁, α₂, α₃) = R (sθ cφ, −sθ sφ, cθ)`.
pub fn sphere_param<C: Coeff>(ct: &C, st: &C, cp: &C, sp: &C, radius: &C) -> [C; 3] {
    [radius.times(&st.times(cp)), radius.times(&st.times(sp)).negated(), radius.times(ct)]
}

/// Twist vector aligned with the sphere direction, `β = t (sθ cφ, −sθ sφ, cθ)`.
/// Satisfies `cθ β₁ = β₃ sθ cφ` and `cθ β₂ = −β₃ sθ sφ` without division.
pub fn twisted_beta<C: Coeff>(ct: &C, st: &C, cp: &C, sp: &C, t: &C) -> [C; 3] {
    sphere_param(ct, st, cp, sp, t)
}

/// Rotation whose third column is the unit direction `(sθ cφ, −sθ sφ, cθ)`:
/// the induced automorphism maps J3 to `sθ cφ J1 − sθ sφ J2 + cθ J3`.
pub fn sphere_rotation<C: Coeff>(ct: &C, st: &C, cp: &C, sp: &C) -> [[C; 3]; 3] {
    [
        [cp.times(ct), sp.clone(), cp.times(st)],
        [sp.times(ct).negated(), cp.clone(), sp.times(st).negated()],
        [st.negated(), C::zero(), ct.clone()],
    ]
}

fn transpose<C: Clone>(m: &[[C; 3]; 3]) -> [[C; 3]; 3] {
    std::array::from_fn(|r| std::array::from_fn(|c| m[c][r].clone()))
}

/// Symbolic canonicalization: the family at `α = ηκ⁻¹ (sphere direction)`,
/// `β = t (sphere direction)`, rotated back by the inverse sphere rotation
/// and reduced modulo the trigonometric relations.
pub fn canonicalize_formal() -> Result<Bivector<Scalar>, RClassError> {
    let (ct, st, cp, sp) =
        (formal(Param::COS_THETA), formal(Param::SIN_THETA), formal(Param::COS_PHI), formal(Param::SIN_PHI));
    let radius = formal(Param::ETA) * formal(Param::KAPPA_INV);
    let alpha = sphere_param(&ct, &st, &cp, &sp, &radius);
    let beta = twisted_beta(&ct, &st, &cp, &sp, &formal(Param::TWIST_SCALE));
    let r = family_r(&alpha, &beta, &formal(Param::KAPPA_INV));
    let trig = RelationSet::trig();
    let inverse = rotate_basis(&transpose(&sphere_rotation(&ct, &st, &cp, &sp)), &trig)?;
    Ok(r.pushforward(&inverse).reduce_mod(&trig))
}

/// Result of numeric canonicalization.
#[derive(Clone, Debug)]
pub struct Canonical {
    pub theta: f64,
    pub phi: f64,
    pub vartheta: f64,
    pub rotation: [[f64; 3]; 3],
    pub r: Bivector<f64>,
}

/// Rotates a numeric solution of the constraints to the canonical form
/// `κ⁻¹(Σ Kₐ∧Pₐ + η J1∧J2) + ϑ J3∧P0`.
///
/// The direction is that of α (or of β when α = 0); ϑ = −β₃/cosθ, which is
/// −|β| times the sign of β along that direction.
pub fn canonicalize(alpha: &[f64; 3], beta: &[f64; 3], kinv: f64, eta: f64) -> Result<Canonical, RClassError> {
    let scale = 1.0 + alpha.iter().chain(beta).map(|x| x * x).sum::<f64>() + (eta * kinv).powi(2);
    let worst = numeric_constraints(alpha, beta, kinv, eta).iter().map(|x| x.abs()).fold(0.0, f64::max);
    if worst.is_nan() || worst > 1e-9 * scale {
        return Err(RClassError::ConstraintViolated(worst));
    }
    let norm = |v: &[f64; 3]| v.iter().map(|x| x * x).sum::<f64>().sqrt();
    let dir = if norm(alpha) > 1e-12 {
        Some(*alpha)
    } else if norm(beta) > 1e-12 {
        Some(*beta)
    } else {
        None
    };
    let (theta, phi) = match dir {
        Some(v) => {
            let n = norm(&v);
            ((v[2] / n).clamp(-1.0, 1.0).acos(), (-v[1]).atan2(v[0]))
        }
        None => (0.0, 0.0),
    };
    let rotation = sphere_rotation(&theta.cos(), &theta.sin(), &phi.cos(), &phi.sin());
    let n = [rotation[0][2], rotation[1][2], rotation[2][2]];
    let vartheta = -(beta[0] * n[0] + beta[1] * n[1] + beta[2] * n[2]);
    let inverse = rotate_basis_numeric(&transpose(&rotation))?;
    let r = family_r(alpha, beta, &kinv).pushforward(&inverse);
    Ok(Canonical { theta, phi, vartheta, rotation, r })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primitivity_forces_zero_on_boost_time_term() {
        let q = Param::ansatz(P0, k(1));
        let fam = RFamily {
            r: Bivector::from_terms(DIM, [((k(1), P0), Scalar::param(q))]),
            free_params: vec![q],
            relations: vec![],
        };
        let reduced = impose_primitivity(&fam, &eta_algebra(), &LieElement::basis(DIM, P0));
        assert!(reduced.r.is_zero());
        assert!(reduced.free_params.is_empty());
    }

    #[test]
    fn zero_family_stays_zero() {
        let fam = RFamily { r: Bivector::zero(DIM), free_params: vec![], relations: vec![] };
        let reduced = impose_primitivity(&fam, &eta_algebra(), &LieElement::basis(DIM, P0));
        assert!(reduced.r.is_zero());
    }

    #[test]
    fn sphere_points() {
        let (one, zero, r) = (Scalar::one(), Scalar::zero(), Scalar::param(Param::RADIUS));
        assert_eq!(sphere_param(&one, &zero, &one, &zero, &r), [zero.clone(), zero.clone(), r.clone()]);
        assert_eq!(sphere_param(&zero, &one, &one, &zero, &r), [r.clone(), zero.clone(), zero.clone()]);
    }

    #[test]
    fn canonicalize_at_theta_zero_is_identity() {
        let alpha = [0.0, 0.0, 0.6];
        let c = canonicalize(&alpha, &[0.0, 0.0, 0.0], 0.5, 1.2).unwrap();
        assert_eq!(c.theta, 0.0);
        assert!(c.r.sub(&family_r(&alpha, &[0.0; 3], &0.5)).norm() < 1e-15);
    }

    #[test]
    fn violated_point_rejected() {
        let e = canonicalize(&[0.3, 0.0, 0.0], &[0.0; 3], 1.0, 1.0);
        assert!(matches!(e, Err(RClassError::ConstraintViolated(_))));
    }
}
