use super::{Monomial, Param, Rational, Scalar, ScalarError};

/// Rewrite rules `lhs → rhs` on monomials, each strictly decreasing in the
/// monomial order. Reduction is multivariate division by the leading
/// monomials, so it always terminates; the result is canonical when the
/// rules form a Gröbner basis (as the trigonometric and sphere relations do).
#[derive(Clone, Debug, Default)]
pub struct RelationSet {
    rules: Vec<(Monomial, Scalar)>,
}

impl RelationSet {
    pub fn empty() -> Self {
        Self::default()
    }

    pub fn new(rules: Vec<(Monomial, Scalar)>) -> Result<Self, ScalarError> {
        for (lhs, rhs) in &rules {
            if let Some((m, _)) = rhs.terms().find(|(m, _)| *m >= lhs) {
                return Err(ScalarError::NonTerminating {
                    lhs: format!("{lhs:?}"),
                    term: format!("{m:?}"),
                });
            }
        }
        Ok(RelationSet { rules })
    }

    /// Rules `p = 0` oriented at the leading monomial of each `p`.
    pub fn from_polynomials(polys: &[Scalar]) -> Self {
        let rules = polys
            .iter()
            .filter_map(|p| {
                let (lm, lc) = p.leading_term()?;
                let lm = lm.clone();
                let inv = -lc.recip();
                let tail = p - &Scalar::term(lc.clone(), lm.clone());
                Some((lm, tail.scale(&inv)))
            })
            .collect();
        RelationSet { rules }
    }

    /// cos²θ + sin²θ = 1 and cos²φ + sin²φ = 1 on the angle stand-ins.
    pub fn trig() -> Self {
        let one = Scalar::one();
        let rule = |c: Param, s: Param| {
            (Monomial::power(c, 2), &one - &Scalar::param(s).pow(2))
        };
        RelationSet::new(vec![
            rule(Param::COS_THETA, Param::SIN_THETA),
            rule(Param::COS_PHI, Param::SIN_PHI),
        ])
        .expect("trigonometric rules decrease")
    }

    /// a₁² + a₂² + a₃² = R².
    pub fn sphere() -> Self {
        let rhs = &Scalar::param(Param::RADIUS).pow(2)
            - &(&Scalar::param(Param::sphere(2)).pow(2) + &Scalar::param(Param::sphere(3)).pow(2));
        RelationSet::new(vec![(Monomial::power(Param::sphere(1), 2), rhs)]).expect("sphere rule decreases")
    }

    pub fn rules(&self) -> &[(Monomial, Scalar)] {
        &self.rules
    }

    pub fn len(&self) -> usize {
        self.rules.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rules.is_empty()
    }

    pub fn union(&self, other: &RelationSet) -> RelationSet {
        let mut rules = self.rules.clone();
        rules.extend(other.rules.iter().cloned());
        RelationSet { rules }
    }

    pub fn reduce(&self, s: &Scalar) -> Scalar {
        if self.rules.is_empty() {
            return s.clone();
        }
        let mut work = s.clone();
        let mut done = Scalar::zero();
        while let Some((m, c)) = work.terms.pop_last() {
            match self.rules.iter().find_map(|(lhs, rhs)| m.checked_div(lhs).map(|q| (q, rhs))) {
                Some((q, rhs)) => work += rhs.mul_monomial(&q, &c),
                None => {
                    done.terms.insert(m, c);
                }
            }
        }
        done
    }

    /// True if `s` reduces to zero.
    pub fn contains(&self, s: &Scalar) -> bool {
        self.reduce(s).is_zero()
    }
}

impl Scalar {
    /// Rational coefficient of a monomial (zero if absent).
    pub fn coefficient(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_default()
    }
}
