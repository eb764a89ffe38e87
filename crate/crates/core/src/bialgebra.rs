//! Tensor layer over a Lie algebra: bivectors and trivectors, the coboundary
//! cocommutator `δ(X) = [X⊗1 + 1⊗X, r]`, the Schouten bracket `[[r,r]]`, the
//! modified classical Yang–Baxter residual, coisotropy and the dual Jacobi
//! identity.
//!
//! Wedges carry no normalization: `a∧b = a⊗b − b⊗a`, and `a∧b∧c` is the
//! signed sum over all six permutations.

use std::collections::BTreeMap;
use std::fmt;

use serde_json::{Map, Value};
use thiserror::Error;

use crate::coeff::{Coeff, Residual};
use crate::liealg::{BasisMap, LieAlgebra, LieElement, LieError};
use crate::scalars::{Param, RelationSet, Scalar, ScalarError};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum BialgebraError {
    #[error("Schouten tensor is not totally antisymmetric at ({0},{1},{2})")]
    NotAntisymmetric(usize, usize, usize),
    #[error(transparent)]
    Lie(#[from] LieError),
}

/// `Σ_{i<j} rⁱʲ Tᵢ∧Tⱼ`.
#[derive(Clone, PartialEq)]
pub struct Bivector<C> {
    dim: usize,
    components: BTreeMap<(usize, usize), C>,
}

impl<C: Coeff> Bivector<C> {
    pub fn zero(dim: usize) -> Self {
        Bivector { dim, components: BTreeMap::new() }
    }

    /// Sum of `c·Tᵢ∧Tⱼ`; pairs may come in either order.
    pub fn from_terms(dim: usize, terms: impl IntoIterator<Item = ((usize, usize), C)>) -> Self {
        let mut b = Self::zero(dim);
        for ((i, j), c) in terms {
            b.add_wedge(i, j, &c);
        }
        b
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// `self += c·Tᵢ∧Tⱼ`.
    pub fn add_wedge(&mut self, i: usize, j: usize, c: &C) {
        assert!(i < self.dim && j < self.dim, "wedge index out of range");
        if i == j || c.is_zero() {
            return;
        }
        let (key, c) = if i < j { ((i, j), c.clone()) } else { ((j, i), c.negated()) };
        let slot = self.components.entry(key).or_insert_with(C::zero);
        *slot = slot.plus(&c);
        if slot.is_zero() {
            self.components.remove(&key);
        }
    }

    /// Coefficient of `Tᵢ∧Tⱼ`, antisymmetric in `(i, j)`.
    pub fn get(&self, i: usize, j: usize) -> C {
        match i.cmp(&j) {
            std::cmp::Ordering::Less => self.components.get(&(i, j)).cloned().unwrap_or_else(C::zero),
            std::cmp::Ordering::Greater => self.components.get(&(j, i)).map_or_else(C::zero, C::negated),
            std::cmp::Ordering::Equal => C::zero(),
        }
    }

    pub fn components(&self) -> &BTreeMap<(usize, usize), C> {
        &self.components
    }

    pub fn is_zero(&self) -> bool {
        self.components.is_empty()
    }

    pub fn len(&self) -> usize {
        self.components.len()
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for ((i, j), c) in &other.components {
            out.add_wedge(*i, *j, c);
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&C::from_i64(-1)))
    }

    pub fn scale(&self, c: &C) -> Self {
        Bivector::from_terms(self.dim, self.components.iter().map(|(k, v)| (*k, v.times(c))))
    }

    pub fn map_coeffs<D: Coeff>(&self, f: impl Fn(&C) -> D) -> Bivector<D> {
        Bivector::from_terms(self.dim, self.components.iter().map(|(k, v)| (*k, f(v))))
    }

    /// Max magnitude over components.
    pub fn norm(&self) -> f64 {
        self.components.values().map(C::magnitude).fold(0.0, f64::max)
    }

    /// Dense antisymmetric matrix `Rⁱʲ` with `r = ½ Σ Rⁱʲ Tᵢ∧Tⱼ = Σ Rⁱʲ Tᵢ⊗Tⱼ`.
    pub fn tensor_entries(&self) -> Vec<(usize, usize, C)> {
        let mut out = Vec::with_capacity(2 * self.components.len());
        for ((i, j), c) in &self.components {
            out.push((*i, *j, c.clone()));
            out.push((*j, *i, c.negated()));
        }
        out
    }

    /// Image under a linear map of the algebra.
    pub fn pushforward(&self, phi: &BasisMap<C>) -> Bivector<C> {
        let mut out = Bivector::zero(self.dim);
        for ((i, j), c) in &self.components {
            let (x, y) = (phi.image_of_basis(*i), phi.image_of_basis(*j));
            for (a, xa) in x.support() {
                for (b, yb) in y.support() {
                    out.add_wedge(a, b, &c.times(&xa.times(yb)));
                }
            }
        }
        out
    }

    /// JSON object keyed `"Ti^Tj"`.
    pub fn to_json(&self, labels: &[impl AsRef<str>]) -> Value {
        let mut m = Map::new();
        for ((i, j), c) in &self.components {
            m.insert(format!("{}^{}", labels[*i].as_ref(), labels[*j].as_ref()), Value::String(c.to_string()));
        }
        Value::Object(m)
    }

    /// Human-readable form using the given generator labels.
    pub fn display<'a>(&'a self, labels: &'a [impl AsRef<str>]) -> impl fmt::Display + 'a {
        DisplayBivector { b: self, labels }
    }
}

struct DisplayBivector<'a, C, L> {
    b: &'a Bivector<C>,
    labels: &'a [L],
}

impl<C: Coeff, L: AsRef<str>> fmt::Display for DisplayBivector<'_, C, L> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_zero() {
            return f.write_str("0");
        }
        for (n, ((i, j), c)) in self.b.components.iter().enumerate() {
            if n > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "({c}) {}^{}", self.labels[*i].as_ref(), self.labels[*j].as_ref())?;
        }
        Ok(())
    }
}

impl<C: fmt::Display> fmt::Debug for Bivector<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map().entries(self.components.iter().map(|(k, v)| (k, v.to_string()))).finish()
    }
}

impl Bivector<Scalar> {
    pub fn substitute(&self, bindings: &BTreeMap<Param, Scalar>) -> Result<Self, ScalarError> {
        let mut terms = Vec::new();
        for (k, v) in &self.components {
            terms.push((*k, v.substitute(bindings)?));
        }
        Ok(Bivector::from_terms(self.dim, terms))
    }

    pub fn reduce_mod(&self, relations: &RelationSet) -> Self {
        Bivector::from_terms(self.dim, self.components.iter().map(|(k, v)| (*k, relations.reduce(v))))
    }
}

/// `x∧y` for algebra elements.
pub fn wedge<C: Coeff>(x: &LieElement<C>, y: &LieElement<C>) -> Bivector<C> {
    let mut out = Bivector::zero(x.dim());
    for (a, xa) in x.support() {
        for (b, yb) in y.support() {
            out.add_wedge(a, b, &xa.times(yb));
        }
    }
    out
}

/// `Σ_{i<j<k} tⁱʲᵏ Tᵢ∧Tⱼ∧Tₖ`.
#[derive(Clone, PartialEq)]
pub struct Trivector<C> {
    dim: usize,
    components: BTreeMap<(usize, usize, usize), C>,
}

impl<C: Coeff> Trivector<C> {
    pub fn zero(dim: usize) -> Self {
        Trivector { dim, components: BTreeMap::new() }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// `self += c·Tₐ∧T_b∧T_c` for indices in any order.
    pub fn add_wedge(&mut self, a: usize, b: usize, c: usize, coef: &C) {
        if a == b || b == c || a == c || coef.is_zero() {
            return;
        }
        let mut idx = [a, b, c];
        let mut sign = false;
        for pass in 0..2 {
            for k in 0..2 - pass {
                if idx[k] > idx[k + 1] {
                    idx.swap(k, k + 1);
                    sign = !sign;
                }
            }
        }
        let key = (idx[0], idx[1], idx[2]);
        let v = if sign { coef.negated() } else { coef.clone() };
        let slot = self.components.entry(key).or_insert_with(C::zero);
        *slot = slot.plus(&v);
        if slot.is_zero() {
            self.components.remove(&key);
        }
    }

    pub fn get(&self, a: usize, b: usize, c: usize) -> C {
        let mut t = Trivector::zero(self.dim);
        t.add_wedge(a, b, c, &C::one());
        match t.components.into_iter().next() {
            None => C::zero(),
            Some((key, sign)) => self.components.get(&key).map_or_else(C::zero, |v| v.times(&sign)),
        }
    }

    pub fn components(&self) -> &BTreeMap<(usize, usize, usize), C> {
        &self.components
    }

    pub fn is_zero(&self) -> bool {
        self.components.is_empty()
    }

    pub fn len(&self) -> usize {
        self.components.len()
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }

    /// Max magnitude over components: the number of surviving terms of the
    /// worst component for exact scalars, max |value| for floats.
    pub fn norm(&self) -> f64 {
        self.components.values().map(C::magnitude).fold(0.0, f64::max)
    }

    pub fn map_coeffs<D: Coeff>(&self, f: impl Fn(&C) -> D) -> Trivector<D> {
        let mut out = Trivector::zero(self.dim);
        for ((a, b, c), v) in &self.components {
            out.add_wedge(*a, *b, *c, &f(v));
        }
        out
    }
}

impl<C: fmt::Display> fmt::Debug for Trivector<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map().entries(self.components.iter().map(|(k, v)| (k, v.to_string()))).finish()
    }
}

/// `δ(Tᵢ)` for every basis generator.
#[derive(Clone, PartialEq)]
pub struct CocommutatorTable<C> {
    pub labels: Vec<String>,
    pub values: Vec<Bivector<C>>,
}

impl<C: fmt::Display> fmt::Debug for CocommutatorTable<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map().entries(self.labels.iter().zip(&self.values)).finish()
    }
}

impl<C: Coeff> CocommutatorTable<C> {
    pub fn get(&self, i: usize) -> &Bivector<C> {
        &self.values[i]
    }

    /// `{"Ti": {"Tj^Tk": "c"}}`.
    pub fn to_json(&self) -> Value {
        let mut m = Map::new();
        for (label, b) in self.labels.iter().zip(&self.values) {
            m.insert(label.clone(), b.to_json(&self.labels));
        }
        Value::Object(m)
    }
}

impl CocommutatorTable<Scalar> {
    pub fn substitute(&self, bindings: &BTreeMap<Param, Scalar>) -> Result<Self, ScalarError> {
        let values = self.values.iter().map(|b| b.substitute(bindings)).collect::<Result<_, _>>()?;
        Ok(CocommutatorTable { labels: self.labels.clone(), values })
    }
}

/// `δ(X) = [X⊗1 + 1⊗X, r]` for a single element.
pub fn cocommutator_of<C: Coeff>(g: &LieAlgebra<C>, r: &Bivector<C>, x: &LieElement<C>) -> Bivector<C> {
    let mut out = Bivector::zero(g.dim());
    for ((i, j), c) in r.components() {
        for (xi, xc) in x.support() {
            let w = xc.times(c);
            for (k, s) in g.bracket_basis(xi, *i) {
                out.add_wedge(*k, *j, &w.times(s));
            }
            for (k, s) in g.bracket_basis(xi, *j) {
                out.add_wedge(*i, *k, &w.times(s));
            }
        }
    }
    out
}

pub fn cocommutator<C: Coeff>(g: &LieAlgebra<C>, r: &Bivector<C>) -> CocommutatorTable<C> {
    let values = (0..g.dim()).map(|i| cocommutator_of(g, r, &LieElement::basis(g.dim(), i))).collect();
    CocommutatorTable { labels: g.labels().to_vec(), values }
}

/// Dense three-index tensor.
struct Tensor3<C> {
    n: usize,
    data: Vec<C>,
}

impl<C: Coeff> Tensor3<C> {
    fn zero(n: usize) -> Self {
        Tensor3 { n, data: vec![C::zero(); n * n * n] }
    }

    fn at(&mut self, a: usize, b: usize, c: usize) -> &mut C {
        &mut self.data[(a * self.n + b) * self.n + c]
    }

    fn get(&self, a: usize, b: usize, c: usize) -> &C {
        &self.data[(a * self.n + b) * self.n + c]
    }
}

/// `[[r,r]] = [r₁₂,r₁₃] + [r₁₂,r₂₃] + [r₁₃,r₂₃]`, verified to be totally
/// antisymmetric and returned as a trivector.
pub fn schouten<C: Coeff>(g: &LieAlgebra<C>, r: &Bivector<C>) -> Result<Trivector<C>, BialgebraError> {
    let n = g.dim();
    let entries = r.tensor_entries();
    let mut s = Tensor3::<C>::zero(n);
    for (i, jj, a) in &entries {
        for (k, l, b) in &entries {
            let ab = a.times(b);
            // [r12, r13]: [Ti,Tk] ⊗ Tj ⊗ Tl
            for (m, c) in g.bracket_basis(*i, *k) {
                s.at(*m, *jj, *l).accumulate(&ab, c);
            }
            // [r12, r23]: Ti ⊗ [Tj,Tk] ⊗ Tl
            for (m, c) in g.bracket_basis(*jj, *k) {
                s.at(*i, *m, *l).accumulate(&ab, c);
            }
            // [r13, r23]: Ti ⊗ Tk ⊗ [Tj,Tl]
            for (m, c) in g.bracket_basis(*jj, *l) {
                s.at(*i, *k, *m).accumulate(&ab, c);
            }
        }
    }
    let tol = 1e-9 * s.data.iter().map(C::magnitude).fold(1.0, f64::max);
    let mut out = Trivector::zero(n);
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                let v = s.get(a, b, c);
                let antisym = |x: &C| v.plus(x).approx_zero(tol);
                let diagonal = a == b || b == c || a == c;
                let ok = if diagonal {
                    v.approx_zero(tol)
                } else {
                    antisym(s.get(b, a, c)) && antisym(s.get(a, c, b)) && antisym(s.get(c, b, a))
                };
                if !ok {
                    return Err(BialgebraError::NotAntisymmetric(a, b, c));
                }
                if a < b && b < c {
                    out.add_wedge(a, b, c, v);
                }
            }
        }
    }
    Ok(out)
}

/// `[X⊗1⊗1 + 1⊗X⊗1 + 1⊗1⊗X, t]`.
pub fn ad_trivector<C: Coeff>(g: &LieAlgebra<C>, x: &LieElement<C>, t: &Trivector<C>) -> Trivector<C> {
    let mut out = Trivector::zero(g.dim());
    for ((a, b, c), v) in t.components() {
        for (xi, xc) in x.support() {
            let w = xc.times(v);
            for (m, s) in g.bracket_basis(xi, *a) {
                out.add_wedge(*m, *b, *c, &w.times(s));
            }
            for (m, s) in g.bracket_basis(xi, *b) {
                out.add_wedge(*a, *m, *c, &w.times(s));
            }
            for (m, s) in g.bracket_basis(xi, *c) {
                out.add_wedge(*a, *b, *m, &w.times(s));
            }
        }
    }
    out
}

/// `ad_{Tᵢ}[[r,r]]` for every generator.
pub fn mcybe_components<C: Coeff>(g: &LieAlgebra<C>, r: &Bivector<C>) -> Result<Vec<Trivector<C>>, BialgebraError> {
    let s = schouten(g, r)?;
    Ok((0..g.dim()).map(|i| ad_trivector(g, &LieElement::basis(g.dim(), i), &s)).collect())
}

/// Largest `‖ad_X [[r,r]]‖` over basis generators; zero iff `r` solves the
/// modified classical Yang–Baxter equation.
pub fn mcybe_residual<C: Coeff>(g: &LieAlgebra<C>, r: &Bivector<C>) -> Result<Residual, BialgebraError> {
    let mut res = Residual::zero();
    for (i, t) in mcybe_components(g, r)?.iter().enumerate() {
        res.record(t.norm(), || g.label(i).to_string());
    }
    Ok(res)
}

/// `δ(h) ⊂ h∧g`: every `δ(Tᵢ)`, `i ∈ h`, is supported on pairs meeting `h`.
pub fn coisotropy_check<C: Coeff>(
    g: &LieAlgebra<C>,
    delta: &CocommutatorTable<C>,
    h: &[usize],
) -> Result<bool, BialgebraError> {
    g.check_subalgebra(h)?;
    Ok(h.iter().all(|i| delta.get(*i).components().keys().all(|(a, b)| h.contains(a) || h.contains(b))))
}

/// Jacobi residual of the dual bracket `[ξᵏ,ξˡ] = Σᵢ fᵏˡᵢ ξⁱ` with `fᵏˡᵢ` the
/// `Tₖ∧Tₗ` coefficient of `δ(Tᵢ)`. Vanishes exactly when δ is a Lie bracket
/// on the dual; for a coboundary this holds iff `[[r,r]]` is ad-invariant.
pub fn dual_jacobi_residual<C: Coeff>(delta: &CocommutatorTable<C>) -> Residual {
    let n = delta.values.len();
    let f = |k: usize, l: usize, i: usize| delta.values[i].get(k, l);
    let mut res = Residual::zero();
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                for m in 0..n {
                    let mut s = C::zero();
                    for (x, y, z) in [(a, b, c), (b, c, a), (c, a, b)] {
                        for i in 0..n {
                            let fi = f(y, z, i);
                            if !fi.is_zero() {
                                s.accumulate(&fi, &f(x, i, m));
                            }
                        }
                    }
                    res.record(s.magnitude(), || {
                        format!("({},{},{})→{}", delta.labels[a], delta.labels[b], delta.labels[c], delta.labels[m])
                    });
                }
            }
        }
    }
    res
}

impl<C: Coeff> Bivector<C> {
    /// Re-indexes onto the subalgebra spanned by `gens`; `None` if some
    /// component leaves it.
    pub fn restrict(&self, gens: &[usize]) -> Option<Bivector<C>> {
        let pos = |g: usize| gens.iter().position(|h| *h == g);
        let mut out = Bivector::zero(gens.len());
        for ((i, j), c) in &self.components {
            out.add_wedge(pos(*i)?, pos(*j)?, c);
        }
        Some(out)
    }
}
