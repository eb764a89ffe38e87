//! The ten-dimensional kinematical Lie algebras with cosmological constant Λ:
//! anti-de Sitter (Λ<0), de Sitter (Λ>0) and Poincaré (Λ=0), in the basis
//! `P0 P1 P2 P3 K1 K2 K3 J1 J2 J3`.

use std::collections::BTreeMap;

use serde_json::{Map, Value};
use thiserror::Error;

use crate::coeff::{Coeff, Residual};
use crate::scalars::{Param, RelationSet, Scalar, ScalarError};

pub const KINEMATICAL_LABELS: [&str; 10] = ["P0", "P1", "P2", "P3", "K1", "K2", "K3", "J1", "J2", "J3"];
pub const DIM: usize = 10;

pub const P0: usize = 0;

/// Index of Pₐ, `a` in `1..=3`.
pub const fn p(a: usize) -> usize {
    a
}

/// Index of Kₐ, `a` in `1..=3`.
pub const fn k(a: usize) -> usize {
    3 + a
}

/// Index of Jₐ, `a` in `1..=3`.
pub const fn j(a: usize) -> usize {
    6 + a
}

/// The Lorentz subalgebra {K, J}.
pub const LORENTZ: [usize; 6] = [k(1), k(2), k(3), j(1), j(2), j(3)];

/// The (2+1)-dimensional subalgebra {P0, P1, P2, K1, K2, J3}.
pub const ADS3: [usize; 6] = [P0, p(1), p(2), k(1), k(2), j(3)];

pub fn index_of(label: &str) -> Option<usize> {
    KINEMATICAL_LABELS.iter().position(|l| *l == label)
}

#[derive(Debug, Error, Clone, PartialEq)]
pub enum LieError {
    #[error("generators {0:?} do not span a subalgebra: [{1},{2}] leaves the set")]
    NotSubalgebra(Vec<String>, String, String),
    #[error("matrix is not a proper rotation: {0}")]
    NotOrthogonal(String),
    #[error("bracket table entry [{0},{1}] is invalid")]
    InvalidEntry(String, String),
    #[error(transparent)]
    Scalar(#[from] ScalarError),
}

/// Levi-Civita symbol on indices `1..=3`.
pub fn epsilon(a: usize, b: usize, c: usize) -> i64 {
    match (a, b, c) {
        (1, 2, 3) | (2, 3, 1) | (3, 1, 2) => 1,
        (1, 3, 2) | (3, 2, 1) | (2, 1, 3) => -1,
        _ => 0,
    }
}

/// Vector in the Lie algebra, given by components in the basis.
#[derive(Clone, Debug, PartialEq)]
pub struct LieElement<C> {
    pub components: Vec<C>,
}

impl<C: Coeff> LieElement<C> {
    pub fn zero(dim: usize) -> Self {
        LieElement { components: vec![C::zero(); dim] }
    }

    pub fn basis(dim: usize, i: usize) -> Self {
        let mut e = Self::zero(dim);
        e.components[i] = C::one();
        e
    }

    pub fn from_terms(dim: usize, terms: impl IntoIterator<Item = (usize, C)>) -> Self {
        let mut e = Self::zero(dim);
        for (i, c) in terms {
            e.components[i] = e.components[i].plus(&c);
        }
        e
    }

    pub fn dim(&self) -> usize {
        self.components.len()
    }

    pub fn is_zero(&self) -> bool {
        self.components.iter().all(C::is_zero)
    }

    pub fn add(&self, other: &Self) -> Self {
        LieElement { components: self.components.iter().zip(&other.components).map(|(a, b)| a.plus(b)).collect() }
    }

    pub fn sub(&self, other: &Self) -> Self {
        LieElement { components: self.components.iter().zip(&other.components).map(|(a, b)| a.minus(b)).collect() }
    }

    pub fn scale(&self, c: &C) -> Self {
        LieElement { components: self.components.iter().map(|a| a.times(c)).collect() }
    }

    pub fn support(&self) -> impl Iterator<Item = (usize, &C)> {
        self.components.iter().enumerate().filter(|(_, c)| !c.is_zero())
    }

    /// Max magnitude over components.
    pub fn norm(&self) -> f64 {
        self.components.iter().map(C::magnitude).fold(0.0, f64::max)
    }
}

/// Structure constants `[Tᵢ,Tⱼ] = Σ cᵢⱼᵏ Tₖ` over a coefficient ring.
#[derive(Clone, Debug, PartialEq)]
pub struct LieAlgebra<C> {
    labels: Vec<String>,
    /// Sparse brackets for `i < j`.
    structure: BTreeMap<(usize, usize), Vec<(usize, C)>>,
    /// Dense lookup for all ordered pairs, row-major `i * dim + j`.
    table: Vec<Vec<(usize, C)>>,
}

impl<C: Coeff> LieAlgebra<C> {
    /// Builds an algebra from brackets `[Tᵢ,Tⱼ]`; each unordered pair may be
    /// given at most once, in either order.
    pub fn from_brackets(
        labels: Vec<String>,
        entries: impl IntoIterator<Item = ((usize, usize), Vec<(usize, C)>)>,
    ) -> Result<Self, LieError> {
        let dim = labels.len();
        let mut structure: BTreeMap<(usize, usize), Vec<(usize, C)>> = BTreeMap::new();
        for ((i, j), rhs) in entries {
            let bad = || LieError::InvalidEntry(i.to_string(), j.to_string());
            if i == j || i >= dim || j >= dim || rhs.iter().any(|(k, _)| *k >= dim) {
                return Err(bad());
            }
            let (key, rhs) = if i < j {
                ((i, j), rhs)
            } else {
                ((j, i), rhs.into_iter().map(|(k, c)| (k, c.negated())).collect())
            };
            let mut merged: BTreeMap<usize, C> = BTreeMap::new();
            for (k, c) in rhs {
                let slot = merged.entry(k).or_insert_with(C::zero);
                *slot = slot.plus(&c);
            }
            let rhs: Vec<(usize, C)> = merged.into_iter().filter(|(_, c)| !c.is_zero()).collect();
            if structure.contains_key(&key) {
                return Err(LieError::InvalidEntry(labels[key.0].clone(), labels[key.1].clone()));
            }
            if !rhs.is_empty() {
                structure.insert(key, rhs);
            }
        }
        let mut table = vec![Vec::new(); dim * dim];
        for ((i, j), rhs) in &structure {
            table[i * dim + j] = rhs.clone();
            table[j * dim + i] = rhs.iter().map(|(k, c)| (*k, c.negated())).collect();
        }
        Ok(LieAlgebra { labels, structure, table })
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    /// `[Tᵢ,Tⱼ]` as a sparse list of `(k, cᵢⱼᵏ)`.
    pub fn bracket_basis(&self, i: usize, j: usize) -> &[(usize, C)] {
        &self.table[i * self.dim() + j]
    }

    pub fn structure_constant(&self, i: usize, j: usize, k: usize) -> C {
        self.bracket_basis(i, j).iter().find(|(m, _)| *m == k).map_or_else(C::zero, |(_, c)| c.clone())
    }

    /// Nonzero brackets for `i < j`.
    pub fn structure(&self) -> &BTreeMap<(usize, usize), Vec<(usize, C)>> {
        &self.structure
    }

    pub fn bracket(&self, x: &LieElement<C>, y: &LieElement<C>) -> LieElement<C> {
        let mut out = LieElement::<C>::zero(self.dim());
        for (i, a) in x.support() {
            for (j, b) in y.support() {
                let ab = a.times(b);
                for (k, c) in self.bracket_basis(i, j) {
                    out.components[*k].accumulate(&ab, c);
                }
            }
        }
        out
    }

    /// `[Tᵢ, Y]`.
    pub fn ad_basis(&self, i: usize, y: &LieElement<C>) -> LieElement<C> {
        self.bracket(&LieElement::basis(self.dim(), i), y)
    }

    /// `[Tᵢ,[Tⱼ,Tₖ]] + cyclic` for one triple.
    pub fn jacobiator(&self, i: usize, j: usize, k: usize) -> LieElement<C> {
        let e = |n| LieElement::basis(self.dim(), n);
        let term = |a: usize, b: usize, c: usize| self.bracket(&e(a), &self.bracket(&e(b), &e(c)));
        term(i, j, k).add(&term(j, k, i)).add(&term(k, i, j))
    }

    /// Largest Jacobiator over all triples `i<j<k`.
    pub fn jacobi_residual(&self) -> Residual {
        let n = self.dim();
        let mut res = Residual::zero();
        for i in 0..n {
            for j in i + 1..n {
                for k in j + 1..n {
                    let norm = self.jacobiator(i, j, k).norm();
                    res.record(norm, || format!("({},{},{})", self.labels[i], self.labels[j], self.labels[k]));
                }
            }
        }
        res
    }

    /// Checks that the span of `gens` is closed under the bracket.
    pub fn check_subalgebra(&self, gens: &[usize]) -> Result<(), LieError> {
        for &a in gens {
            for &b in gens {
                if self.bracket_basis(a, b).iter().any(|(k, _)| !gens.contains(k)) {
                    return Err(LieError::NotSubalgebra(
                        gens.iter().map(|g| self.labels[*g].clone()).collect(),
                        self.labels[a].clone(),
                        self.labels[b].clone(),
                    ));
                }
            }
        }
        Ok(())
    }

    /// The subalgebra spanned by `gens`, re-indexed in the given order.
    pub fn restrict(&self, gens: &[usize]) -> Result<LieAlgebra<C>, LieError> {
        self.check_subalgebra(gens)?;
        let pos = |g: usize| gens.iter().position(|h| *h == g).expect("closed");
        let labels = gens.iter().map(|g| self.labels[*g].clone()).collect();
        let mut entries = Vec::new();
        for (a, &ga) in gens.iter().enumerate() {
            for (b, &gb) in gens.iter().enumerate().skip(a + 1) {
                let rhs: Vec<(usize, C)> = self.bracket_basis(ga, gb).iter().map(|(k, c)| (pos(*k), c.clone())).collect();
                entries.push(((a, b), rhs));
            }
        }
        LieAlgebra::from_brackets(labels, entries)
    }

    pub fn map_coeffs<D: Coeff>(&self, f: impl Fn(&C) -> D) -> LieAlgebra<D> {
        let entries =
            self.structure.iter().map(|(&key, rhs)| (key, rhs.iter().map(|(k, c)| (*k, f(c))).collect::<Vec<_>>()));
        LieAlgebra::from_brackets(self.labels.clone(), entries).expect("same shape")
    }

    /// Structure constants as JSON: `{"[Ti,Tj]": {"Tk": "c"}}`.
    pub fn to_json(&self) -> Value {
        let mut out = Map::new();
        for ((i, j), rhs) in &self.structure {
            let mut row = Map::new();
            for (k, c) in rhs {
                row.insert(self.labels[*k].clone(), Value::String(c.to_string()));
            }
            out.insert(format!("[{},{}]", self.labels[*i], self.labels[*j]), Value::Object(row));
        }
        Value::Object(out)
    }
}

impl LieAlgebra<Scalar> {
    pub fn substitute(&self, bindings: &BTreeMap<Param, Scalar>) -> Result<LieAlgebra<Scalar>, ScalarError> {
        let mut entries = Vec::new();
        for (&key, rhs) in &self.structure {
            let mut row = Vec::new();
            for (k, c) in rhs {
                row.push((*k, c.substitute(bindings)?));
            }
            entries.push((key, row));
        }
        Ok(LieAlgebra::from_brackets(self.labels.clone(), entries).expect("same shape"))
    }
}

/// The (A)dS algebra with cosmological constant `lambda`:
///
/// ```text
/// [Ja,Jb] = ε Jc   [Ja,Pb] = ε Pc   [Ja,Kb] = ε Kc
/// [Ka,P0] = Pa     [Ka,Pb] = δab P0  [Ka,Kb] = −ε Jc
/// [P0,Pa] = −Λ Ka  [Pa,Pb] = Λ ε Jc  [P0,Ja] = 0
/// ```
pub fn ads_algebra<C: Coeff>(lambda: C) -> LieAlgebra<C> {
    let one = C::one();
    let eps = |a, b, c| C::from_i64(epsilon(a, b, c));
    let mut entries: Vec<((usize, usize), Vec<(usize, C)>)> = Vec::new();
    for a in 1..=3 {
        entries.push(((k(a), P0), vec![(p(a), one.clone())]));
        entries.push(((P0, p(a)), vec![(k(a), lambda.negated())]));
        for b in 1..=3 {
            entries.push(((k(a), p(b)), if a == b { vec![(P0, one.clone())] } else { vec![] }));
            if a == b {
                continue;
            }
            let c = 6 - a - b;
            entries.push(((j(a), p(b)), vec![(p(c), eps(a, b, c))]));
            entries.push(((j(a), k(b)), vec![(k(c), eps(a, b, c))]));
            if a < b {
                entries.push(((j(a), j(b)), vec![(j(c), eps(a, b, c))]));
                entries.push(((k(a), k(b)), vec![(j(c), eps(a, b, c).negated())]));
                entries.push(((p(a), p(b)), vec![(j(c), eps(a, b, c).times(&lambda))]));
            }
        }
    }
    let labels = KINEMATICAL_LABELS.iter().map(|s| s.to_string()).collect();
    LieAlgebra::from_brackets(labels, entries).expect("table is well formed")
}

/// The (A)dS algebra with formal Λ.
pub fn ads_formal() -> LieAlgebra<Scalar> {
    ads_algebra(Scalar::param(Param::LAMBDA))
}

/// Linear map on the algebra: column `i` of `matrix` is the image of `Tᵢ`.
#[derive(Clone, Debug, PartialEq)]
pub struct BasisMap<C> {
    pub matrix: Vec<Vec<C>>,
}

impl<C: Coeff> BasisMap<C> {
    pub fn identity(dim: usize) -> Self {
        let matrix = (0..dim).map(|r| (0..dim).map(|c| if r == c { C::one() } else { C::zero() }).collect()).collect();
        BasisMap { matrix }
    }

    pub fn dim(&self) -> usize {
        self.matrix.len()
    }

    pub fn image_of_basis(&self, i: usize) -> LieElement<C> {
        LieElement { components: self.matrix.iter().map(|row| row[i].clone()).collect() }
    }

    pub fn apply(&self, x: &LieElement<C>) -> LieElement<C> {
        let mut out = LieElement::<C>::zero(self.dim());
        for (i, c) in x.support() {
            for (r, row) in self.matrix.iter().enumerate() {
                out.components[r].accumulate(&row[i], c);
            }
        }
        out
    }

    pub fn compose(&self, inner: &BasisMap<C>) -> BasisMap<C> {
        let n = self.dim();
        let mut matrix = vec![vec![C::zero(); n]; n];
        for (r, row) in matrix.iter_mut().enumerate() {
            for (c, slot) in row.iter_mut().enumerate() {
                for m in 0..n {
                    slot.accumulate(&self.matrix[r][m], &inner.matrix[m][c]);
                }
            }
        }
        BasisMap { matrix }
    }

    /// Largest `φ([Tᵢ,Tⱼ]) − [φTᵢ,φTⱼ]` over all pairs, after `normalize`.
    pub fn automorphism_residual(&self, g: &LieAlgebra<C>, normalize: impl Fn(&C) -> C) -> Residual {
        let n = g.dim();
        let images: Vec<_> = (0..n).map(|i| self.image_of_basis(i)).collect();
        let mut res = Residual::zero();
        for i in 0..n {
            for jj in i + 1..n {
                let lhs = self.apply(&LieElement::from_terms(n, g.bracket_basis(i, jj).iter().cloned()));
                let rhs = g.bracket(&images[i], &images[jj]);
                let diff = lhs.sub(&rhs);
                let diff = LieElement { components: diff.components.iter().map(&normalize).collect() };
                res.record(diff.norm(), || format!("[{},{}]", g.label(i), g.label(jj)));
            }
        }
        res
    }
}

fn rotation_map<C: Coeff>(r: &[[C; 3]; 3]) -> BasisMap<C> {
    let mut m = BasisMap::identity(DIM);
    for block in [p, k, j] {
        for a in 1..=3 {
            for b in 1..=3 {
                m.matrix[block(b)][block(a)] = r[b - 1][a - 1].clone();
            }
        }
    }
    m
}

fn det3<C: Coeff>(r: &[[C; 3]; 3]) -> C {
    let minor = |a: usize, b: usize, c: usize, d: usize| r[1][a].times(&r[2][b]).minus(&r[1][c].times(&r[2][d]));
    r[0][0].times(&minor(1, 2, 2, 1)).minus(&r[0][1].times(&minor(0, 2, 2, 0))).plus(&r[0][2].times(&minor(0, 1, 1, 0)))
}

fn rtr_minus_identity<C: Coeff>(r: &[[C; 3]; 3]) -> Vec<C> {
    let mut out = Vec::with_capacity(10);
    for a in 0..3 {
        for b in 0..3 {
            let mut s = if a == b { C::one().negated() } else { C::zero() };
            for row in r {
                s.accumulate(&row[a], &row[b]);
            }
            out.push(s);
        }
    }
    out.push(det3(r).minus(&C::one()));
    out
}

/// Automorphism of the kinematical algebra induced by a rotation: P0 is
/// fixed and each triple (P, K, J) transforms as `Tₐ ↦ Σ_b R[b][a] T_b`.
/// Orthogonality and `det R = 1` are checked exactly modulo `relations`.
pub fn rotate_basis(r: &[[Scalar; 3]; 3], relations: &RelationSet) -> Result<BasisMap<Scalar>, LieError> {
    if let Some(bad) = rtr_minus_identity(r).iter().map(|s| relations.reduce(s)).find(|s| !s.is_zero()) {
        return Err(LieError::NotOrthogonal(format!("residual {bad}")));
    }
    Ok(rotation_map(r))
}

/// Numeric counterpart of [`rotate_basis`] with tolerance `1e-12`.
pub fn rotate_basis_numeric(r: &[[f64; 3]; 3]) -> Result<BasisMap<f64>, LieError> {
    let worst = rtr_minus_identity(r).into_iter().map(f64::abs).fold(0.0, f64::max);
    if worst.is_nan() || worst > 1e-12 {
        return Err(LieError::NotOrthogonal(format!("residual {worst:e}")));
    }
    Ok(rotation_map(r))
}
