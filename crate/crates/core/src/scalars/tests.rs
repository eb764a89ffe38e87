use std::collections::BTreeMap;

use super::*;

fn p(name: &str) -> Scalar {
    Scalar::param(Param::from_name(name).unwrap())
}

fn s(text: &str) -> Scalar {
    text.parse().unwrap()
}

#[test]
fn additive_identity_and_inverse() {
    assert_eq!(&p("eta") + &Scalar::zero(), p("eta"));
    let ek = &p("eta") * &p("kinv");
    assert!((&ek + &(-&ek)).is_zero());
}

#[test]
fn products() {
    assert_eq!(&p("eta") * &p("eta"), Scalar::param(Param::ETA).pow(2));
    assert_eq!((&p("kinv") * &p("eta")).to_string(), "eta*kinv");
    let (a, b) = (p("alpha1"), p("alpha2"));
    assert_eq!((&a + &b) * (&a - &b), s("alpha1^2 - alpha2^2"));
}

#[test]
fn text_round_trip() {
    let x = s("3/2*eta^2*kinv − 1");
    assert_eq!(x.to_string(), "3/2*eta^2*kinv - 1");
    assert_eq!(x.to_string().parse::<Scalar>().unwrap(), x);
    let y = s("-(alpha1 + 2*r_P0_J3)^2/3 + lambda*x0");
    assert_eq!(y.to_string().parse::<Scalar>().unwrap(), y);
    assert!("eta +".parse::<Scalar>().is_err());
    assert!("zeta".parse::<Scalar>().is_err());
}

#[test]
fn substitution() {
    let a3 = Param::alpha(3);
    let bound = Scalar::param(a3).substitute_one(a3, &Scalar::param(Param::RADIUS)).unwrap();
    assert_eq!(bound, Scalar::param(Param::RADIUS));
    assert_eq!(p("eta").substitute(&BTreeMap::new()).unwrap(), p("eta"));
    let cyclic = BTreeMap::from([(Param::ETA, p("kinv")), (Param::KAPPA_INV, p("eta"))]);
    assert!(matches!(p("eta").substitute(&cyclic), Err(ScalarError::CyclicSubstitution(_))));
}

#[test]
fn sphere_substitution_reduces_to_radius_squared() {
    let sum = s("alpha1^2 + alpha2^2 + alpha3^2");
    let bindings: BTreeMap<_, _> = (1..=3).map(|i| (Param::alpha(i), Scalar::param(Param::sphere(i)))).collect();
    let on_sphere = sum.substitute(&bindings).unwrap().reduce_mod(&RelationSet::sphere());
    assert_eq!(on_sphere, s("R^2"));
}

#[test]
fn reduce_constraint_relation() {
    let rel = RelationSet::new(vec![(Monomial::power(Param::alpha(1), 2), s("eta^2*kinv^2 - alpha2^2 - alpha3^2"))])
        .unwrap();
    let r = s("alpha1^2 + alpha2^2 + alpha3^2").reduce_mod(&rel);
    assert_eq!(r, s("eta^2*kinv^2"));
    assert!(Scalar::zero().reduce_mod(&rel).is_zero());
    let v = ParamValues::new().with(Param::ETA, 1.3).with(Param::KAPPA_INV, 0.7);
    assert!((r.eval_numeric(&v).unwrap() - 0.8281).abs() < 1e-14);
}

#[test]
fn increasing_relation_rejected() {
    let bad = RelationSet::new(vec![(Monomial::var(Param::alpha(2)), s("alpha1"))]);
    assert!(matches!(bad, Err(ScalarError::NonTerminating { .. })));
}

#[test]
fn eval_examples() {
    let v = ParamValues::new().with(Param::ETA, 2.0).with(Param::KAPPA_INV, 0.5);
    assert_eq!(s("eta*kinv").eval_numeric(&v).unwrap(), 1.0);
    assert_eq!(s("eta^2").eval_numeric(&ParamValues::new().with(Param::ETA, 3.0)).unwrap(), 9.0);
    assert!(matches!(s("lambda").eval_numeric(&v), Err(ScalarError::UnboundParameter(n)) if n == "lambda"));
}

#[test]
fn ansatz_names_round_trip() {
    let mut seen = std::collections::BTreeSet::new();
    for i in 0..10 {
        for j in i + 1..10 {
            let q = Param::ansatz(i, j);
            assert_eq!(q.ansatz_pair(), Some((i, j)));
            assert_eq!(Param::from_name(&q.name()), Some(q));
            seen.insert(q);
        }
    }
    assert_eq!(seen.len(), 45);
    assert_eq!(Param::all().count(), Param::COUNT);
}

#[test]
fn derivative_and_parts() {
    let x = s("eta^3*kinv + 2*eta - lambda");
    assert_eq!(x.derivative(Param::ETA), s("3*eta^2*kinv + 2"));
    assert_eq!(x.part_of_degree(Param::ETA, 1), s("2*eta"));
    assert_eq!(x.linear_coefficient(Param::KAPPA_INV), s("eta^3"));
}
