use std::collections::BTreeMap;

use kads_core::scalars::{Monomial, Param, ParamValues, RelationSet, Scalar};
use proptest::prelude::*;

const POOL: [Param; 5] = [Param::ETA, Param::KAPPA_INV, Param::LAMBDA, Param::COS_THETA, Param::SIN_THETA];

/// Dense oracle: coefficients indexed by exponent vectors over `POOL`, each
/// exponent < 8.
#[derive(Clone, Debug, PartialEq)]
struct Dense(BTreeMap<[u16; 5], i128>);

impl Dense {
    fn mul(&self, o: &Dense) -> Dense {
        let mut out = BTreeMap::new();
        for (a, x) in &self.0 {
            for (b, y) in &o.0 {
                let e: [u16; 5] = std::array::from_fn(|k| a[k] + b[k]);
                *out.entry(e).or_insert(0) += x * y;
            }
        }
        out.retain(|_, v| *v != 0);
        Dense(out)
    }
    fn add(&self, o: &Dense) -> Dense {
        let mut out = self.0.clone();
        for (e, v) in &o.0 {
            *out.entry(*e).or_insert(0) += v;
        }
        out.retain(|_, v| *v != 0);
        Dense(out)
    }
    fn to_scalar(&self) -> Scalar {
        let mut s = Scalar::zero();
        for (e, v) in &self.0 {
            let m = Monomial::from_pairs(POOL.iter().zip(e).map(|(p, k)| (*p, *k)));
            s += Scalar::term(num_rational::BigRational::from_integer((*v).into()), m);
        }
        s
    }
}

fn dense() -> impl Strategy<Value = Dense> {
    prop::collection::btree_map(prop::array::uniform5(0u16..3), -5i128..=5, 0..5).prop_map(|mut m| {
        m.retain(|_, v| *v != 0);
        Dense(m)
    })
}

fn values() -> ParamValues {
    POOL.iter().zip([0.7, -1.3, 0.45, 0.9, -0.2]).map(|(p, v)| (*p, v)).collect()
}

proptest! {
    #[test]
    fn ring_axioms(a in dense(), b in dense(), c in dense()) {
        let (x, y, z) = (a.to_scalar(), b.to_scalar(), c.to_scalar());
        prop_assert_eq!(&(&x + &y) + &z, &x + &(&y + &z));
        prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
        prop_assert_eq!(&x * &y, &y * &x);
        prop_assert_eq!(&x + &y, &y + &x);
        prop_assert_eq!(&x * &(&y + &z), &(&x * &y) + &(&x * &z));
        prop_assert!((&x - &x).is_zero());
    }

    #[test]
    fn matches_dense_oracle(a in dense(), b in dense()) {
        prop_assert_eq!(&a.to_scalar() * &b.to_scalar(), a.mul(&b).to_scalar());
        prop_assert_eq!(&a.to_scalar() + &b.to_scalar(), a.add(&b).to_scalar());
    }

    #[test]
    fn reduction_is_idempotent(a in dense()) {
        let trig = RelationSet::trig();
        let once = a.to_scalar().reduce_mod(&trig);
        prop_assert_eq!(once.reduce_mod(&trig), once.clone());
        prop_assert!(once.degree_in(Param::COS_THETA) <= 1);
        let v = values().with(Param::COS_THETA, 0.6).with(Param::SIN_THETA, 0.8);
        let (lhs, rhs) = (a.to_scalar().eval_numeric(&v).unwrap(), once.eval_numeric(&v).unwrap());
        prop_assert!((lhs - rhs).abs() <= 1e-9 * (1.0 + lhs.abs()));
    }

    #[test]
    fn evaluation_is_additive(a in dense(), b in dense()) {
        let v = values();
        let (x, y) = (a.to_scalar(), b.to_scalar());
        let sum = (&x + &y).eval_numeric(&v).unwrap();
        let parts = x.eval_numeric(&v).unwrap() + y.eval_numeric(&v).unwrap();
        prop_assert!((sum - parts).abs() <= 1e-12 * (1.0 + sum.abs().max(parts.abs())));
    }

    #[test]
    fn text_round_trip(a in dense()) {
        let x = a.to_scalar();
        prop_assert_eq!(x.to_string().parse::<Scalar>().unwrap(), x);
    }
}

#[test]
fn two_term_sum() {
    let s: Scalar = "alpha1^2 + alpha2^2".parse().unwrap();
    assert_eq!(s.num_terms(), 2);
    assert!(s.terms().all(|(_, c)| *c == num_rational::BigRational::from_integer(1.into())));
}
