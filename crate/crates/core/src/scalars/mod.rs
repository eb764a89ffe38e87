//! Exact coefficient ring of the algebraic layer.
//!
//! A [`Scalar`] is a sparse polynomial with rational coefficients in a closed,
//! build-time set of named parameters ([`Param`]): the deformation constants
//! (η, κ⁻¹, ϑ, Λ, R), the multiparametric r-matrix family (αᵢ, βᵢ), algebraic
//! stand-ins for angles (cθ, sθ, cφ, sφ), commuting coordinates (xᵘ, sᴬ) used
//! by the polynomial Poisson layer, and the 45 coefficients of a generic
//! skew-symmetric ansatz on the ten-dimensional kinematical algebra.
//!
//! Terms are kept in a `BTreeMap` keyed by [`Monomial`] under the crate's
//! monomial order, so the representation is canonical and equality is
//! structural.

mod relations;
mod text;

pub use relations::RelationSet;
pub use text::ParseScalarError;

use std::borrow::Cow;
use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use smallvec::SmallVec;
use thiserror::Error;

use crate::liealg::KINEMATICAL_LABELS;

/// Exact rational number, always stored in lowest terms with positive
/// denominator.
pub type Rational = BigRational;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ScalarError {
    #[error("cyclic substitution: parameter `{0}` occurs in a binding value")]
    CyclicSubstitution(String),
    #[error("relation for `{lhs}` does not decrease the monomial order (offending term `{term}`)")]
    NonTerminating { lhs: String, term: String },
    #[error("parameter `{0}` is unbound")]
    UnboundParameter(String),
}

/// A formal parameter of the coefficient ring.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Param(u8);

const NAMED: [&str; 28] = [
    "eta", "kinv", "vartheta", "alpha1", "alpha2", "alpha3", "beta1", "beta2", "beta3", "lambda",
    "R", "a1", "a2", "a3", "ctheta", "stheta", "cphi", "sphi", "t", "x0", "x1", "x2", "x3", "s0",
    "s1", "s2", "s3", "s4",
];

const ANSATZ_BASE: u8 = NAMED.len() as u8;
const ANSATZ_COUNT: u8 = 45;

impl Param {
    pub const ETA: Param = Param(0);
    pub const KAPPA_INV: Param = Param(1);
    pub const VARTHETA: Param = Param(2);
    pub const LAMBDA: Param = Param(9);
    pub const RADIUS: Param = Param(10);
    pub const COS_THETA: Param = Param(14);
    pub const SIN_THETA: Param = Param(15);
    pub const COS_PHI: Param = Param(16);
    pub const SIN_PHI: Param = Param(17);
    /// Common scale of a twist vector aligned with the α direction.
    pub const TWIST_SCALE: Param = Param(18);

    /// Number of parameters in the ring.
    pub const COUNT: usize = (ANSATZ_BASE + ANSATZ_COUNT) as usize;

    /// αᵢ, `i` in `1..=3`.
    pub fn alpha(i: usize) -> Param {
        assert!((1..=3).contains(&i), "alpha index {i} out of range");
        Param(2 + i as u8)
    }

    /// βᵢ, `i` in `1..=3`.
    pub fn beta(i: usize) -> Param {
        assert!((1..=3).contains(&i), "beta index {i} out of range");
        Param(5 + i as u8)
    }

    /// aᵢ, `i` in `1..=3` (generic sphere coordinates).
    pub fn sphere(i: usize) -> Param {
        assert!((1..=3).contains(&i), "sphere index {i} out of range");
        Param(10 + i as u8)
    }

    /// Local spacetime coordinate xᵘ, `mu` in `0..=3`.
    pub fn local(mu: usize) -> Param {
        assert!(mu <= 3, "local coordinate index {mu} out of range");
        Param(19 + mu as u8)
    }

    /// Ambient coordinate sᴬ, `a` in `0..=4`.
    pub fn ambient(a: usize) -> Param {
        assert!(a <= 4, "ambient coordinate index {a} out of range");
        Param(23 + a as u8)
    }

    /// Coefficient of Tᵢ∧Tⱼ in the generic 45-parameter ansatz.
    pub fn ansatz(i: usize, j: usize) -> Param {
        let (i, j) = if i < j { (i, j) } else { (j, i) };
        assert!(i != j && j < 10, "ansatz pair ({i},{j}) out of range");
        Param(ANSATZ_BASE + pair_index(i, j) as u8)
    }

    /// Inverse of [`Param::ansatz`].
    pub fn ansatz_pair(self) -> Option<(usize, usize)> {
        if self.0 < ANSATZ_BASE {
            return None;
        }
        let idx = (self.0 - ANSATZ_BASE) as usize;
        let mut k = 0;
        for i in 0..10 {
            for j in i + 1..10 {
                if k == idx {
                    return Some((i, j));
                }
                k += 1;
            }
        }
        None
    }

    pub fn index(self) -> usize {
        self.0 as usize
    }

    pub fn all() -> impl Iterator<Item = Param> {
        (0..Self::COUNT as u8).map(Param)
    }

    pub fn name(self) -> Cow<'static, str> {
        match self.ansatz_pair() {
            Some((i, j)) => {
                Cow::Owned(format!("r_{}_{}", KINEMATICAL_LABELS[i], KINEMATICAL_LABELS[j]))
            }
            None => Cow::Borrowed(NAMED[self.0 as usize]),
        }
    }

    pub fn from_name(name: &str) -> Option<Param> {
        if let Some(pos) = NAMED.iter().position(|n| *n == name) {
            return Some(Param(pos as u8));
        }
        let rest = name.strip_prefix("r_")?;
        let (a, b) = rest.split_once('_')?;
        let i = KINEMATICAL_LABELS.iter().position(|l| *l == a)?;
        let j = KINEMATICAL_LABELS.iter().position(|l| *l == b)?;
        (i < j).then(|| Param::ansatz(i, j))
    }

    /// Weight used by the monomial order. The deformation constants carry
    /// weight zero so that relations such as α₁² → (η κ⁻¹)² − α₂² − α₃² are
    /// decreasing.
    pub fn weight(self) -> u32 {
        match self {
            Param::ETA | Param::KAPPA_INV | Param::VARTHETA | Param::LAMBDA | Param::RADIUS => 0,
            _ => 1,
        }
    }
}

fn pair_index(i: usize, j: usize) -> usize {
    i * 9 - i * (i.saturating_sub(1)) / 2 + (j - i - 1)
}

/// A monomial: sorted list of `(parameter, exponent)` with positive exponents.
///
/// Ordered by weighted degree, then total degree, then lexicographically with
/// earlier parameters dominating.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Monomial(SmallVec<[(Param, u16); 4]>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(SmallVec::new())
    }

    pub fn var(p: Param) -> Self {
        Self::power(p, 1)
    }

    pub fn power(p: Param, e: u16) -> Self {
        let mut v = SmallVec::new();
        if e > 0 {
            v.push((p, e));
        }
        Monomial(v)
    }

    pub fn from_pairs(pairs: impl IntoIterator<Item = (Param, u16)>) -> Self {
        let mut m = Monomial::one();
        for (p, e) in pairs {
            m = m.mul(&Monomial::power(p, e));
        }
        m
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn factors(&self) -> &[(Param, u16)] {
        &self.0
    }

    pub fn degree_in(&self, p: Param) -> u16 {
        self.0.iter().find(|(q, _)| *q == p).map_or(0, |(_, e)| *e)
    }

    pub fn total_degree(&self) -> u32 {
        self.0.iter().map(|(_, e)| *e as u32).sum()
    }

    pub fn weighted_degree(&self) -> u32 {
        self.0.iter().map(|(p, e)| p.weight() * *e as u32).sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let (a, b) = (&self.0, &other.0);
        let mut out = SmallVec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() || j < b.len() {
            if j == b.len() || (i < a.len() && a[i].0 < b[j].0) {
                out.push(a[i]);
                i += 1;
            } else if i == a.len() || b[j].0 < a[i].0 {
                out.push(b[j]);
                j += 1;
            } else {
                let e = a[i].1.checked_add(b[j].1).expect("exponent overflow");
                out.push((a[i].0, e));
                i += 1;
                j += 1;
            }
        }
        Monomial(out)
    }

    /// `self / other` when `other` divides `self`.
    pub fn checked_div(&self, other: &Monomial) -> Option<Monomial> {
        let mut out = self.0.clone();
        for &(p, e) in other.0.iter() {
            let slot = out.iter_mut().find(|(q, _)| *q == p)?;
            if slot.1 < e {
                return None;
            }
            slot.1 -= e;
        }
        out.retain(|(_, e)| *e > 0);
        Some(Monomial(out))
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().all(|&(p, e)| other.degree_in(p) >= e)
    }

    fn without(&self, p: Param) -> Monomial {
        Monomial(self.0.iter().copied().filter(|(q, _)| *q != p).collect())
    }

    fn lex_cmp(&self, other: &Monomial) -> Ordering {
        let (a, b) = (&self.0, &other.0);
        let (mut i, mut j) = (0, 0);
        loop {
            match (a.get(i), b.get(j)) {
                (None, None) => return Ordering::Equal,
                (Some(_), None) => return Ordering::Greater,
                (None, Some(_)) => return Ordering::Less,
                (Some(&(pa, ea)), Some(&(pb, eb))) => match pa.cmp(&pb) {
                    Ordering::Less => return Ordering::Greater,
                    Ordering::Greater => return Ordering::Less,
                    Ordering::Equal => {
                        if ea != eb {
                            return ea.cmp(&eb);
                        }
                        i += 1;
                        j += 1;
                    }
                },
            }
        }
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.weighted_degree()
            .cmp(&other.weighted_degree())
            .then_with(|| self.total_degree().cmp(&other.total_degree()))
            .then_with(|| self.lex_cmp(other))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return f.write_str("1");
        }
        let parts: Vec<String> = self
            .0
            .iter()
            .map(|(p, e)| if *e == 1 { p.name().into_owned() } else { format!("{}^{}", p.name(), e) })
            .collect();
        f.write_str(&parts.join("*"))
    }
}

/// Numeric values for parameters, used by [`Scalar::eval_numeric`].
#[derive(Clone, Debug, Default)]
pub struct ParamValues(BTreeMap<Param, f64>);

impl ParamValues {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with(mut self, p: Param, v: f64) -> Self {
        self.0.insert(p, v);
        self
    }

    pub fn set(&mut self, p: Param, v: f64) {
        self.0.insert(p, v);
    }

    pub fn get(&self, p: Param) -> Option<f64> {
        self.0.get(&p).copied()
    }
}

impl FromIterator<(Param, f64)> for ParamValues {
    fn from_iter<I: IntoIterator<Item = (Param, f64)>>(iter: I) -> Self {
        ParamValues(iter.into_iter().collect())
    }
}

/// Sparse multivariate polynomial over ℚ in the fixed parameter set.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Scalar {
    terms: BTreeMap<Monomial, Rational>,
}

impl Scalar {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::from_rational(Rational::one())
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rational(Rational::from_integer(BigInt::from(n)))
    }

    pub fn from_ratio(num: i64, den: i64) -> Self {
        Self::from_rational(Rational::new(BigInt::from(num), BigInt::from(den)))
    }

    pub fn from_rational(c: Rational) -> Self {
        Self::term(c, Monomial::one())
    }

    pub fn param(p: Param) -> Self {
        Self::term(Rational::one(), Monomial::var(p))
    }

    pub fn term(c: Rational, m: Monomial) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Scalar { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in ascending monomial order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &Rational)> {
        self.terms.iter().next_back()
    }

    /// The constant value if this scalar has no parameter dependence.
    pub fn as_constant(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => {
                let (m, c) = self.terms.iter().next().unwrap();
                m.is_one().then(|| c.clone())
            }
            _ => None,
        }
    }

    pub fn params(&self) -> BTreeSet<Param> {
        self.terms.keys().flat_map(|m| m.0.iter().map(|(p, _)| *p)).collect()
    }

    pub fn contains_param(&self, p: Param) -> bool {
        self.terms.keys().any(|m| m.degree_in(p) > 0)
    }

    pub fn degree_in(&self, p: Param) -> u16 {
        self.terms.keys().map(|m| m.degree_in(p)).max().unwrap_or(0)
    }

    fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn scale(&self, c: &Rational) -> Scalar {
        if c.is_zero() {
            return Scalar::zero();
        }
        Scalar { terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect() }
    }

    fn mul_monomial(&self, m: &Monomial, c: &Rational) -> Scalar {
        Scalar { terms: self.terms.iter().map(|(n, a)| (n.mul(m), a * c)).collect() }
    }

    pub fn pow(&self, e: u32) -> Scalar {
        let mut acc = Scalar::one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// `self += a * b` without materialising the product.
    pub fn add_product(&mut self, a: &Scalar, b: &Scalar) {
        for (ma, ca) in &a.terms {
            for (mb, cb) in &b.terms {
                self.add_term(ma.mul(mb), ca * cb);
            }
        }
    }

    /// Simultaneous substitution of parameters by scalars.
    pub fn substitute(&self, bindings: &BTreeMap<Param, Scalar>) -> Result<Scalar, ScalarError> {
        for value in bindings.values() {
            if let Some(p) = value.params().into_iter().find(|p| bindings.contains_key(p)) {
                return Err(ScalarError::CyclicSubstitution(p.name().into_owned()));
            }
        }
        let mut powers: BTreeMap<(Param, u16), Scalar> = BTreeMap::new();
        let mut out = Scalar::zero();
        for (m, c) in &self.terms {
            let mut kept = Monomial::one();
            let mut factor = Scalar::from_rational(c.clone());
            for &(p, e) in m.0.iter() {
                match bindings.get(&p) {
                    Some(v) => {
                        let pw = powers.entry((p, e)).or_insert_with(|| v.pow(e as u32));
                        factor = &factor * &*pw;
                    }
                    None => kept = kept.mul(&Monomial::power(p, e)),
                }
            }
            for (n, a) in factor.terms {
                out.add_term(n.mul(&kept), a);
            }
        }
        Ok(out)
    }

    /// Convenience for a single binding.
    pub fn substitute_one(&self, p: Param, value: &Scalar) -> Result<Scalar, ScalarError> {
        self.substitute(&BTreeMap::from([(p, value.clone())]))
    }

    /// Normal form under exhaustive rewriting by `relations`.
    pub fn reduce_mod(&self, relations: &RelationSet) -> Scalar {
        relations.reduce(self)
    }

    /// Floating-point evaluation. Powers of each parameter are tabulated once,
    /// so every term costs one multiplication per distinct parameter.
    pub fn eval_numeric(&self, values: &ParamValues) -> Result<f64, ScalarError> {
        let mut table: BTreeMap<Param, Vec<f64>> = BTreeMap::new();
        for p in self.params() {
            let v = values.get(p).ok_or_else(|| ScalarError::UnboundParameter(p.name().into_owned()))?;
            let deg = self.degree_in(p) as usize;
            let mut pw = Vec::with_capacity(deg + 1);
            pw.push(1.0);
            for k in 1..=deg {
                pw.push(pw[k - 1] * v);
            }
            table.insert(p, pw);
        }
        let mut sum = 0.0;
        for (m, c) in &self.terms {
            let mut t = rational_to_f64(c);
            for (p, e) in m.0.iter() {
                t *= table[p][*e as usize];
            }
            sum += t;
        }
        Ok(sum)
    }

    /// Formal partial derivative.
    pub fn derivative(&self, p: Param) -> Scalar {
        let mut out = Scalar::zero();
        for (m, c) in &self.terms {
            let e = m.degree_in(p);
            if e == 0 {
                continue;
            }
            let reduced = m.without(p).mul(&Monomial::power(p, e - 1));
            out.add_term(reduced, c * Rational::from_integer(BigInt::from(e)));
        }
        out
    }

    /// Terms whose degree in `p` is exactly `k` (with `p` kept).
    pub fn part_of_degree(&self, p: Param, k: u16) -> Scalar {
        Scalar {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.degree_in(p) == k)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// Terms of degree at most `max` in `p`.
    pub fn truncated(&self, p: Param, max: u16) -> Scalar {
        Scalar {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.degree_in(p) <= max)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// Terms whose joint degree in `ps` is exactly `k`.
    pub fn part_of_joint_degree(&self, ps: &[Param], k: u32) -> Scalar {
        Scalar {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| ps.iter().map(|p| m.degree_in(*p) as u32).sum::<u32>() == k)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// Coefficient of `p¹` viewed as a polynomial in `p` (with `p` removed).
    pub fn linear_coefficient(&self, p: Param) -> Scalar {
        Scalar {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.degree_in(p) == 1)
                .map(|(m, c)| (m.without(p), c.clone()))
                .collect(),
        }
    }

    /// Divides by the leading coefficient, so that associates compare equal.
    pub fn monic(&self) -> Scalar {
        match self.leading_term() {
            None => Scalar::zero(),
            Some((_, lc)) => {
                let inv = lc.recip();
                self.scale(&inv)
            }
        }
    }

    /// Greatest monomial dividing every term.
    pub fn monomial_content(&self) -> Monomial {
        let mut iter = self.terms.keys();
        let Some(first) = iter.next() else { return Monomial::one() };
        let mut g = first.0.clone();
        for m in iter {
            g = g
                .into_iter()
                .filter_map(|(p, e)| {
                    let f = m.degree_in(p).min(e);
                    (f > 0).then_some((p, f))
                })
                .collect();
        }
        Monomial(g)
    }

    /// Exact division by a monomial; `None` if some term is not divisible.
    pub fn div_monomial(&self, m: &Monomial) -> Option<Scalar> {
        let mut terms = BTreeMap::new();
        for (n, c) in &self.terms {
            terms.insert(n.checked_div(m)?, c.clone());
        }
        Some(Scalar { terms })
    }
}

pub(crate) fn rational_to_f64(c: &Rational) -> f64 {
    if let (Some(n), Some(d)) = (c.numer().to_i64(), c.denom().to_i64()) {
        if n.unsigned_abs() < (1u64 << 53) && d < (1i64 << 53) {
            return n as f64 / d as f64;
        }
    }
    c.to_f64().unwrap_or(f64::NAN)
}

/// Exact rational value of a finite `f64`.
pub fn rational_from_f64(x: f64) -> Option<Rational> {
    Rational::from_float(x)
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Self {
        Scalar::from_int(n)
    }
}

impl From<Param> for Scalar {
    fn from(p: Param) -> Self {
        Scalar::param(p)
    }
}

impl<'a> Add<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl<'a> Sub<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl<'a> Mul<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        if self.is_zero() || rhs.is_zero() {
            return Scalar::zero();
        }
        if rhs.terms.len() == 1 {
            let (m, c) = rhs.terms.iter().next().unwrap();
            return self.mul_monomial(m, c);
        }
        if self.terms.len() == 1 {
            let (m, c) = self.terms.iter().next().unwrap();
            return rhs.mul_monomial(m, c);
        }
        let mut out = Scalar::zero();
        out.add_product(self, rhs);
        out
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar { terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect() }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $method:ident) => {
        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                (&self).$method(&rhs)
            }
        }
        impl<'a> $tr<&'a Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                (&self).$method(rhs)
            }
        }
        impl<'a> $tr<Scalar> for &'a Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                self.$method(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), c.clone());
        }
    }
}

impl AddAssign<Scalar> for Scalar {
    fn add_assign(&mut self, rhs: Scalar) {
        if self.is_zero() {
            *self = rhs;
            return;
        }
        for (m, c) in rhs.terms {
            self.add_term(m, c);
        }
    }
}

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, rhs: &Scalar) {
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), -c);
        }
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Scalar({self})")
    }
}

#[cfg(test)]
mod tests;
