//! Quadratic noncommutative algebras presented by commutation relations,
//! reduced to a fixed ordered-monomial basis.
//!
//! Generators are stored in normal order, so a word is normal exactly when
//! its letters are non-decreasing. A relation for `gᵢ gⱼ` with `i > j`
//! rewrites it as `gⱼ gᵢ + [gᵢ, gⱼ]`.
//!
//! Words are compared by total generator weight, then length, then
//! lexicographically in the normal order. When every relation strictly
//! decreases this order, rewriting terminates and the overlap certificate is a
//! confluence proof. Orders that fail the test are accepted only with a
//! truncation degree in `κ⁻¹`: rewriting then works in the truncated power
//! series ring, where every cycle eventually vanishes.

pub mod builtins;

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;
use smallvec::SmallVec;
use thiserror::Error;

use crate::scalars::{Param, Scalar, ScalarError};

/// Rewrite steps allowed per normal-form computation.
pub const DEFAULT_BUDGET: usize = 2_000_000;

/// Parameters counted as one order of deformation.
pub const DEFORMATION: [Param; 2] = [Param::KAPPA_INV, Param::VARTHETA];

#[derive(Debug, Error, Clone, PartialEq)]
pub enum NCError {
    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),
    #[error("relation for [{0}, {1}] given twice")]
    DuplicateRelation(String, String),
    #[error("relation for [{0}, {1}] does not decrease the word order; give a truncation degree")]
    NonTerminating(String, String),
    #[error("right-hand side of [{0}, {1}] has degree above 2")]
    NotQuadratic(String, String),
    #[error("rewriting exceeded the budget of {0} steps")]
    BudgetExhausted(usize),
    #[error("rewriting produced a word of length {0} from input of length {1}")]
    DegreeIncrease(usize, usize),
    #[error(transparent)]
    Scalar(#[from] ScalarError),
}

/// Word over generator indices, ordered by length then lexicographically.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Word(pub SmallVec<[u8; 8]>);

impl Word {
    pub fn new(letters: &[u8]) -> Self {
        Word(SmallVec::from_slice(letters))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_normal(&self) -> bool {
        self.0.windows(2).all(|w| w[0] <= w[1])
    }

    /// Number of letter pairs out of normal order.
    pub fn inversions(&self) -> usize {
        let w = &self.0;
        (0..w.len()).map(|i| w[i + 1..].iter().filter(|b| **b < w[i]).count()).sum()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Word(v)
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.len().cmp(&other.0.len()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0.as_slice())
    }
}

/// Linear combination of words with [`Scalar`] coefficients. Zero
/// coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Default, Debug)]
pub struct NCPoly {
    terms: BTreeMap<Word, Scalar>,
}

impl NCPoly {
    pub fn zero() -> Self {
        NCPoly::default()
    }

    pub fn constant(c: Scalar) -> Self {
        NCPoly::term(Word::default(), c)
    }

    pub fn term(w: Word, c: Scalar) -> Self {
        let mut p = NCPoly::zero();
        p.add_term(w, c);
        p
    }

    pub fn word(letters: &[u8]) -> Self {
        NCPoly::term(Word::new(letters), Scalar::one())
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Word, &Scalar)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn degree(&self) -> usize {
        self.terms.keys().map(Word::len).max().unwrap_or(0)
    }

    pub fn is_normal(&self) -> bool {
        self.terms.keys().all(Word::is_normal)
    }

    pub fn add_term(&mut self, w: Word, c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(w) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &NCPoly) -> NCPoly {
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &NCPoly) -> NCPoly {
        self.add(&other.scale(&Scalar::from_int(-1)))
    }

    pub fn scale(&self, c: &Scalar) -> NCPoly {
        let mut out = NCPoly::zero();
        for (w, v) in &self.terms {
            out.add_term(w.clone(), v * c);
        }
        out
    }

    /// Concatenation product, without reduction.
    pub fn concat(&self, other: &NCPoly) -> NCPoly {
        let mut out = NCPoly::zero();
        for (a, x) in &self.terms {
            for (b, y) in &other.terms {
                out.add_term(a.concat(b), x * y);
            }
        }
        out
    }

    pub fn map_coeffs(&self, f: impl Fn(&Scalar) -> Result<Scalar, ScalarError>) -> Result<NCPoly, ScalarError> {
        let mut out = NCPoly::zero();
        for (w, c) in &self.terms {
            out.add_term(w.clone(), f(c)?);
        }
        Ok(out)
    }

    /// Commutative image: each letter becomes its coordinate parameter.
    pub fn abelianize(&self, params: &[Param]) -> Scalar {
        let mut out = Scalar::zero();
        for (w, c) in &self.terms {
            let m = w.0.iter().fold(Scalar::one(), |acc, l| acc * Scalar::param(params[*l as usize]));
            out += c * &m;
        }
        out
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Strategy {
    LeftmostFirst,
    RightmostFirst,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Generator {
    pub name: String,
    /// Commutative coordinate standing for the generator.
    pub param: Param,
    pub weight: u32,
}

impl Generator {
    pub fn new(name: &str, param: Param, weight: u32) -> Self {
        assert!(weight > 0, "generator weights are positive");
        Generator { name: name.into(), param, weight }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct NCAlgebra {
    pub name: String,
    /// Generator names in normal order.
    pub names: Vec<String>,
    pub params: Vec<Param>,
    pub weights: Vec<u32>,
    /// `[g_i, g_j]` for `i > j`, in normal form.
    relations: BTreeMap<(u8, u8), NCPoly>,
    /// Largest `κ⁻¹` degree kept, if rewriting is truncated.
    pub truncation: Option<u16>,
    pub budget: usize,
}

impl NCAlgebra {
    /// Generators listed in normal order; relations `[a, b] = rhs` in either
    /// order. Missing pairs commute. Right-hand sides need not be normal;
    /// they are reduced once the system is known to terminate.
    pub fn new(
        name: &str,
        generators: &[Generator],
        relations: Vec<(&str, &str, NCPoly)>,
        truncation: Option<u16>,
    ) -> Result<NCAlgebra, NCError> {
        let names: Vec<String> = generators.iter().map(|g| g.name.clone()).collect();
        let idx = |n: &str| names.iter().position(|m| m == n).ok_or_else(|| NCError::UnknownGenerator(n.into()));
        let mut alg = NCAlgebra {
            name: name.into(),
            names: names.clone(),
            params: generators.iter().map(|g| g.param).collect(),
            weights: generators.iter().map(|g| g.weight).collect(),
            relations: BTreeMap::new(),
            truncation,
            budget: DEFAULT_BUDGET,
        };
        for (a, b, rhs) in relations {
            let (i, j) = (idx(a)?, idx(b)?);
            if rhs.degree() > 2 {
                return Err(NCError::NotQuadratic(a.into(), b.into()));
            }
            let (key, value) = match i.cmp(&j) {
                Ordering::Greater => ((i as u8, j as u8), rhs),
                Ordering::Less => ((j as u8, i as u8), rhs.scale(&Scalar::from_int(-1))),
                Ordering::Equal => return Err(NCError::DuplicateRelation(a.into(), b.into())),
            };
            let lhs = Word::new(&[key.0, key.1]);
            if truncation.is_none() && value.terms.keys().any(|w| alg.word_cmp(w, &lhs) != Ordering::Less) {
                return Err(NCError::NonTerminating(a.into(), b.into()));
            }
            let value = alg.truncate(value);
            if alg.relations.insert(key, value).is_some() {
                return Err(NCError::DuplicateRelation(a.into(), b.into()));
            }
        }
        let keys: Vec<(u8, u8)> = alg.relations.keys().copied().collect();
        for k in keys {
            let reduced = alg.normal_form(&alg.relations[&k])?;
            alg.relations.insert(k, reduced);
        }
        Ok(alg)
    }

    /// The same algebra presented with another normal order, weights and
    /// truncation. Generators are named in the new order.
    pub fn reordered(&self, name: &str, order: &[(&str, u32)], truncation: Option<u16>) -> Result<NCAlgebra, NCError> {
        let gens = order
            .iter()
            .map(|(n, w)| Ok(Generator::new(n, self.params[self.index(n)? as usize], *w)))
            .collect::<Result<Vec<_>, NCError>>()?;
        if gens.len() != self.len() {
            return Err(NCError::UnknownGenerator(format!("{} generators given, {} expected", gens.len(), self.len())));
        }
        let map: Vec<u8> = self.names.iter().map(|n| order.iter().position(|(m, _)| m == n).map(|i| i as u8)).collect::<Option<_>>()
            .ok_or_else(|| NCError::UnknownGenerator("generator missing from the new order".into()))?;
        let rename = |p: &NCPoly| {
            let mut out = NCPoly::zero();
            for (w, c) in &p.terms {
                out.add_term(Word(w.0.iter().map(|l| map[*l as usize]).collect()), c.clone());
            }
            out
        };
        let rels: Vec<(&str, &str, NCPoly)> =
            self.relations.iter().map(|((i, j), v)| (self.names[*i as usize].as_str(), self.names[*j as usize].as_str(), rename(v))).collect();
        NCAlgebra::new(name, &gens, rels, truncation)
    }

    fn weight(&self, w: &Word) -> u32 {
        w.0.iter().map(|l| self.weights[*l as usize]).sum()
    }

    /// The termination order on words.
    pub fn word_cmp(&self, a: &Word, b: &Word) -> Ordering {
        self.weight(a).cmp(&self.weight(b)).then_with(|| a.cmp(b))
    }

    /// True when every relation decreases the word order, so rewriting
    /// terminates without truncation.
    pub fn is_terminating(&self) -> bool {
        self.relations.iter().all(|((i, j), v)| {
            let lhs = Word::new(&[*i, *j]);
            v.terms.keys().all(|w| self.word_cmp(w, &lhs) == Ordering::Less)
        })
    }

    fn truncate(&self, p: NCPoly) -> NCPoly {
        match self.truncation {
            None => p,
            Some(n) => {
                let mut out = NCPoly::zero();
                for (w, c) in p.terms {
                    out.add_term(w, c.truncated(Param::KAPPA_INV, n));
                }
                out
            }
        }
    }

    fn truncate_scalar(&self, c: Scalar) -> Scalar {
        match self.truncation {
            None => c,
            Some(n) => c.truncated(Param::KAPPA_INV, n),
        }
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn index(&self, name: &str) -> Result<u8, NCError> {
        self.names.iter().position(|m| m == name).map(|i| i as u8).ok_or_else(|| NCError::UnknownGenerator(name.into()))
    }

    pub fn gen(&self, name: &str) -> Result<NCPoly, NCError> {
        Ok(NCPoly::word(&[self.index(name)?]))
    }

    /// Word from space-separated generator names, e.g. `"s1 s0 s4"`.
    pub fn parse_word(&self, text: &str) -> Result<Word, NCError> {
        let letters = text.split_whitespace().map(|n| self.index(n)).collect::<Result<Vec<_>, _>>()?;
        Ok(Word::new(&letters))
    }

    /// `[g_i, g_j]` for `i > j` as stored.
    pub fn relation(&self, i: u8, j: u8) -> Option<&NCPoly> {
        self.relations.get(&(i, j))
    }

    pub fn normal_form(&self, p: &NCPoly) -> Result<NCPoly, NCError> {
        self.normal_form_with(p, Strategy::LeftmostFirst)
    }

    /// Exhaustive rewriting. Pending words are merged by coefficient, so
    /// each distinct word is expanded once per round.
    pub fn normal_form_with(&self, p: &NCPoly, strategy: Strategy) -> Result<NCPoly, NCError> {
        let max_len = p.degree();
        let mut pending = self.truncate(p.clone()).terms;
        let mut out = NCPoly::zero();
        let mut steps = 0usize;
        while let Some((w, c)) = pending.pop_last() {
            let pos = match strategy {
                Strategy::LeftmostFirst => w.0.windows(2).position(|x| x[0] > x[1]),
                Strategy::RightmostFirst => w.0.windows(2).rposition(|x| x[0] > x[1]),
            };
            let Some(k) = pos else {
                out.add_term(w, c);
                continue;
            };
            steps += 1;
            if steps > self.budget {
                return Err(NCError::BudgetExhausted(self.budget));
            }
            let (b, a) = (w.0[k], w.0[k + 1]);
            let mut swapped = w.clone();
            swapped.0.swap(k, k + 1);
            push(&mut pending, swapped, c.clone());
            if let Some(rhs) = self.relations.get(&(b, a)) {
                for (r, rc) in &rhs.terms {
                    let mut v: SmallVec<[u8; 8]> = SmallVec::from_slice(&w.0[..k]);
                    v.extend_from_slice(&r.0);
                    v.extend_from_slice(&w.0[k + 2..]);
                    if v.len() > max_len {
                        return Err(NCError::DegreeIncrease(v.len(), max_len));
                    }
                    push(&mut pending, Word(v), self.truncate_scalar(&c * rc));
                }
            }
        }
        Ok(out)
    }

    pub fn product(&self, p: &NCPoly, q: &NCPoly) -> Result<NCPoly, NCError> {
        self.normal_form(&p.concat(q))
    }

    pub fn commutator(&self, p: &NCPoly, q: &NCPoly) -> Result<NCPoly, NCError> {
        self.normal_form(&p.concat(q).sub(&q.concat(p)))
    }

    /// `[a,[b,c]] + [b,[c,a]] + [c,[a,b]]` for every generator triple.
    pub fn jacobi_certificate(&self) -> Result<Vec<Certificate>, NCError> {
        let g = |i: usize| NCPoly::word(&[i as u8]);
        let mut out = Vec::new();
        for a in 0..self.len() {
            for b in (a + 1)..self.len() {
                for c in (b + 1)..self.len() {
                    let term = |x: usize, y: usize, z: usize| -> Result<NCPoly, NCError> {
                        self.commutator(&g(x), &self.commutator(&g(y), &g(z))?)
                    };
                    let r = term(a, b, c)?.add(&term(b, c, a)?).add(&term(c, a, b)?);
                    out.push(self.certificate(&[a, b, c], r));
                }
            }
        }
        Ok(out)
    }

    /// For every decreasing triple `c > b > a`, reduces the overlap `cba`
    /// starting from `(cb)a` and from `c(ba)`; the difference must vanish.
    pub fn overlap_certificate(&self) -> Result<Vec<Certificate>, NCError> {
        let mut out = Vec::new();
        for a in 0..self.len() {
            for b in (a + 1)..self.len() {
                for c in (b + 1)..self.len() {
                    let w = NCPoly::word(&[c as u8, b as u8, a as u8]);
                    let left = self.normal_form_with(&w, Strategy::LeftmostFirst)?;
                    let right = self.normal_form_with(&w, Strategy::RightmostFirst)?;
                    out.push(self.certificate(&[c, b, a], left.sub(&right)));
                }
            }
        }
        Ok(out)
    }

    /// `[C, g]` for each named generator.
    pub fn casimir_check(&self, c: &NCPoly, subset: &[&str]) -> Result<Vec<Certificate>, NCError> {
        subset
            .iter()
            .map(|name| {
                let i = self.index(name)? as usize;
                Ok(self.certificate(&[i], self.commutator(c, &NCPoly::word(&[i as u8]))?))
            })
            .collect()
    }

    fn certificate(&self, gens: &[usize], residual: NCPoly) -> Certificate {
        Certificate {
            generators: gens.iter().map(|i| self.names[*i].clone()).collect(),
            zero: residual.is_zero(),
            residual: self.render(&residual),
        }
    }

    pub fn substitute(&self, bindings: &BTreeMap<Param, Scalar>) -> Result<NCAlgebra, NCError> {
        let mut relations = BTreeMap::new();
        for (k, v) in &self.relations {
            let s = v.map_coeffs(|c| c.substitute(bindings))?;
            if !s.is_zero() {
                relations.insert(*k, s);
            }
        }
        Ok(NCAlgebra { relations, ..self.clone() })
    }

    /// Relations as `[later, earlier]` pairs with the same content as
    /// another algebra on the same generators.
    pub fn same_relations(&self, other: &NCAlgebra) -> bool {
        self.names == other.names
            && self.relations.iter().filter(|(_, v)| !v.is_zero()).eq(other.relations.iter().filter(|(_, v)| !v.is_zero()))
    }

    /// Text form with words as powers, e.g. `s0^1 s1^2 s4^1 * (eta^2*kinv)`.
    pub fn render(&self, p: &NCPoly) -> String {
        if p.is_zero() {
            return "0".into();
        }
        let parts: Vec<String> = p
            .terms
            .iter()
            .map(|(w, c)| {
                let mut runs: Vec<(u8, usize)> = Vec::new();
                for l in &w.0 {
                    match runs.last_mut() {
                        Some((x, n)) if x == l => *n += 1,
                        _ => runs.push((*l, 1)),
                    }
                }
                let word = if runs.is_empty() {
                    "1".to_string()
                } else {
                    runs.iter().map(|(l, n)| format!("{}^{}", self.names[*l as usize], n)).collect::<Vec<_>>().join(" ")
                };
                format!("{word} * ({c})")
            })
            .collect();
        parts.join(" + ")
    }

    /// Part of the abelianized commutator that is linear in the deformation
    /// parameters `κ⁻¹` and `ϑ` jointly.
    pub fn semiclassical_bracket(&self, p: &NCPoly, q: &NCPoly) -> Result<Scalar, NCError> {
        Ok(self.commutator(p, q)?.abelianize(&self.params).part_of_joint_degree(&DEFORMATION, 1))
    }
}

fn push(pending: &mut BTreeMap<Word, Scalar>, w: Word, c: Scalar) {
    if c.is_zero() {
        return;
    }
    match pending.entry(w) {
        std::collections::btree_map::Entry::Vacant(e) => {
            e.insert(c);
        }
        std::collections::btree_map::Entry::Occupied(mut e) => {
            *e.get_mut() += c;
            if e.get().is_zero() {
                e.remove();
            }
        }
    }
}

/// Result of one identity check: the generators involved, the reduced
/// residual and whether it vanished.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Certificate {
    pub generators: Vec<String>,
    pub residual: String,
    pub zero: bool,
}

pub fn all_zero(certs: &[Certificate]) -> bool {
    certs.iter().all(|c| c.zero)
}
