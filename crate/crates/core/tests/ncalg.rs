mod common;

use std::collections::BTreeMap;

use common::{eta, int, kinv};
use kads_core::ncalg::builtins::*;
use kads_core::ncalg::{all_zero, Generator, NCAlgebra, NCError, NCPoly, Strategy as Rewrite, Word};
use kads_core::scalars::{Param, Scalar};
use kads_core::sklyanin::poly::{self, PolyPoisson};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn ek() -> Scalar {
    eta() * kinv()
}

fn e2k() -> Scalar {
    eta().pow(2) * kinv()
}

fn word(a: &NCAlgebra, text: &str) -> NCPoly {
    NCPoly::term(a.parse_word(text).unwrap(), Scalar::one())
}

fn term(a: &NCAlgebra, text: &str, c: Scalar) -> NCPoly {
    NCPoly::term(a.parse_word(text).unwrap(), c)
}

/// Same polynomial written over the generators of another algebra.
fn translate(p: &NCPoly, from: &NCAlgebra, to: &NCAlgebra) -> NCPoly {
    let mut out = NCPoly::zero();
    for (w, c) in p.terms() {
        let letters: Vec<u8> = w.0.iter().map(|l| to.index(&from.names[*l as usize]).unwrap()).collect();
        out.add_term(Word::new(&letters), c.clone());
    }
    out
}

fn truncate(p: &NCPoly, n: u16) -> NCPoly {
    p.map_coeffs(|c| Ok(c.truncated(Param::KAPPA_INV, n))).unwrap()
}

fn random_word(rng: &mut impl Rng, n: usize, max_len: usize) -> Word {
    let len = rng.random_range(0..=max_len);
    let letters: Vec<u8> = (0..len).map(|_| rng.random_range(0..n) as u8).collect();
    Word::new(&letters)
}

#[test]
fn rewriting_examples() {
    let m = kappa_minkowski();
    let got = m.normal_form(&word(&m, "x1 x0")).unwrap();
    assert_eq!(got, word(&m, "x0 x1").add(&term(&m, "x1", kinv())));

    let q = quantum_sphere();
    let got = q.normal_form(&word(&q, "x2 x1")).unwrap();
    assert_eq!(got, word(&q, "x1 x2").add(&term(&q, "x3 x3", ek())));

    for a in all() {
        for w in normal_words(&a, 3) {
            let p = NCPoly::term(w, Scalar::one());
            assert_eq!(a.normal_form(&p).unwrap(), p, "{}", a.name);
        }
    }
}

#[test]
fn relations_are_stored_normal() {
    for a in all() {
        assert!(a.is_terminating(), "{}", a.name);
        for i in 0..a.len() as u8 {
            for j in 0..i {
                if let Some(r) = a.relation(i, j) {
                    assert!(r.is_normal() && r.degree() <= 2, "{}", a.name);
                }
            }
        }
    }
}

#[test]
fn construction_errors() {
    let g = [Generator::new("a", Param::local(1), 1), Generator::new("b", Param::local(2), 1)];
    let bad = NCAlgebra::new("t", &g, vec![("a", "c", NCPoly::zero())], None);
    assert!(matches!(bad, Err(NCError::UnknownGenerator(_))));
    let twice = NCAlgebra::new("t", &g, vec![("a", "b", NCPoly::zero()), ("b", "a", NCPoly::zero())], None);
    assert!(matches!(twice, Err(NCError::DuplicateRelation(..))));
    let cubic = NCAlgebra::new("t", &g, vec![("a", "b", NCPoly::word(&[0, 0, 1]))], None);
    assert!(matches!(cubic, Err(NCError::NotQuadratic(..))));
    // b a → a b + b a is not a decrease.
    let cyc = NCAlgebra::new("t", &g, vec![("b", "a", NCPoly::word(&[1, 0]))], None);
    assert!(matches!(cyc, Err(NCError::NonTerminating(..))));
}

#[test]
fn commutator_examples() {
    let a = ambient_kappa_ads();
    let s = sphere_casimir(&a, 's');
    for p in [word(&a, "s1 s2"), s.clone(), word(&a, "s4 s0 s3")] {
        assert!(a.commutator(&p, &p).unwrap().is_zero());
    }
    let c = a.commutator(&word(&a, "s0"), &word(&a, "s4")).unwrap();
    assert_eq!(c, s.scale(&-e2k()));
    assert_eq!(
        a.render(&c),
        "s3^2 * (-eta^2*kinv) + s1^2 * (-eta^2*kinv) + s1^1 s2^1 * (-eta^3*kinv^2) + s2^2 * (-eta^2*kinv)"
    );
    let got = a.commutator(&s, &word(&a, "s0")).unwrap();
    assert_eq!(got, a.normal_form(&displayed_sphere_s0(&a)).unwrap());
    assert!(!got.is_zero());
    let got = a.commutator(&s, &word(&a, "s4")).unwrap();
    assert_eq!(got, a.normal_form(&displayed_sphere_s4(&a)).unwrap());
}

#[test]
fn jacobi_and_overlaps_vanish() {
    for a in all() {
        let j = a.jacobi_certificate().unwrap();
        let n = a.len();
        assert_eq!(j.len(), n * (n - 1) * (n - 2) / 6);
        assert!(all_zero(&j), "{}: {:?}", a.name, j.iter().find(|c| !c.zero));
        let o = a.overlap_certificate().unwrap();
        assert!(all_zero(&o), "{}: {:?}", a.name, o.iter().find(|c| !c.zero));
    }
    assert_eq!(ambient_kappa_ads().jacobi_certificate().unwrap().len(), 10);
}

#[test]
fn broken_relation_is_detected() {
    let a = ambient_kappa_ads();
    // Flip the sign of [s1, s2] only.
    let gens: Vec<Generator> = a.names.iter().zip(&a.params).zip(&a.weights).map(|((n, p), w)| Generator::new(n, *p, *w)).collect();
    let mut rels = vec![];
    for i in 0..a.len() as u8 {
        for j in 0..i {
            if let Some(r) = a.relation(i, j) {
                let r = if (a.names[i as usize].as_str(), a.names[j as usize].as_str()) == ("s2", "s1") { r.scale(&int(-1)) } else { r.clone() };
                rels.push((a.names[i as usize].as_str(), a.names[j as usize].as_str(), r));
            }
        }
    }
    let broken = NCAlgebra::new("broken", &gens, rels, None).unwrap();
    assert!(!all_zero(&broken.jacobi_certificate().unwrap()));
    assert!(!all_zero(&broken.overlap_certificate().unwrap()));
}

#[test]
fn casimir_centrality() {
    let a = ambient_kappa_ads();
    let sig = pseudosphere_casimir(&a);
    assert!(all_zero(&a.casimir_check(&sig, &["s0", "s1", "s2", "s3", "s4"]).unwrap()));
    let s = sphere_casimir(&a, 's');
    let certs = a.casimir_check(&s, &["s0", "s1", "s2", "s3", "s4"]).unwrap();
    let central: Vec<&str> = certs.iter().filter(|c| c.zero).map(|c| c.generators[0].as_str()).collect();
    assert_eq!(central, ["s1", "s2", "s3"]);
    assert!(a.commutator(&sig, &s).unwrap().is_zero());

    let q = quantum_sphere();
    assert!(all_zero(&q.casimir_check(&quantum_sphere_casimir(&q), &["x1", "x2", "x3"]).unwrap()));
    // Dropping the ηκ⁻¹ x1x2 correction breaks centrality.
    let plain = quantum_sphere_casimir(&q).sub(&term(&q, "x1 x2", ek()));
    assert!(!all_zero(&q.casimir_check(&plain, &["x1", "x2", "x3"]).unwrap()));
}

#[test]
fn strategy_independence_on_random_words() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5EED);
    let algebras = [ambient_kappa_ads(), first_order_kappa_ads(), twisted_kappa_minkowski(), quantum_sphere()];
    for k in 0..1000 {
        let a = &algebras[k % algebras.len()];
        let w = random_word(&mut rng, a.len(), 6);
        let p = NCPoly::term(w.clone(), Scalar::one());
        let left = a.normal_form_with(&p, Rewrite::LeftmostFirst).unwrap();
        let right = a.normal_form_with(&p, Rewrite::RightmostFirst).unwrap();
        assert_eq!(left, right, "{} {:?}", a.name, w);
        assert!(left.is_normal());
        assert!(left.degree() <= w.len());
    }
}

#[test]
fn eta_to_zero_limits() {
    let mut zero = BTreeMap::new();
    zero.insert(Param::ETA, Scalar::zero());
    assert!(first_order_kappa_ads().substitute(&zero).unwrap().same_relations(&kappa_minkowski()));
    let q = quantum_sphere().substitute(&zero).unwrap();
    for i in 0..q.len() as u8 {
        for j in 0..i {
            assert!(q.relation(i, j).is_none());
        }
    }
    for a in [kappa_minkowski(), twisted_kappa_minkowski()] {
        assert!(a.substitute(&zero).unwrap().same_relations(&a));
    }

    // Ambient: s4 becomes central and [s0, sa] = −κ⁻¹ sa s4, κ-Minkowski on s4 = 1.
    let a = ambient_kappa_ads().substitute(&zero).unwrap();
    let gens: Vec<Generator> = a.names.iter().zip(&a.params).zip(&a.weights).map(|((n, p), w)| Generator::new(n, *p, *w)).collect();
    let expect = NCAlgebra::new(
        "flat",
        &gens,
        ["s1", "s2", "s3"].iter().map(|s| ("s0", *s, term(&a, &format!("{s} s4"), -kinv()))).collect(),
        None,
    )
    .unwrap();
    assert!(a.same_relations(&expect));
}

fn semiclassical_matches(a: &NCAlgebra, table: &PolyPoisson) {
    let pos = |p: Param| table.coords.iter().position(|c| *c == p).unwrap();
    let gens: Vec<NCPoly> = (0..a.len() as u8).map(|i| NCPoly::word(&[i])).collect();
    for i in 0..a.len() {
        for j in 0..a.len() {
            let got = a.semiclassical_bracket(&gens[i], &gens[j]).unwrap();
            assert_eq!(got, table.get(pos(a.params[i]), pos(a.params[j])), "{} [{}, {}]", a.name, a.names[i], a.names[j]);
        }
    }
    // Quadratic monomials against a generator: the Leibniz extension.
    for i in 0..a.len() {
        for j in i..a.len() {
            for k in 0..a.len() {
                let f = NCPoly::word(&[i as u8, j as u8]);
                let got = a.semiclassical_bracket(&f, &gens[k]).unwrap();
                let fc = Scalar::param(a.params[i]) * Scalar::param(a.params[j]);
                let want = table.bracket(&fc, &Scalar::param(a.params[k]));
                assert_eq!(got, want, "{} [{}{}, {}]", a.name, a.names[i], a.names[j], a.names[k]);
            }
        }
    }
}

#[test]
fn semiclassical_limit_reproduces_poisson_tables() {
    semiclassical_matches(&kappa_minkowski(), &poly::minkowski(false));
    semiclassical_matches(&twisted_kappa_minkowski(), &poly::minkowski(true));
    semiclassical_matches(&first_order_kappa_ads(), &poly::first_order());
    semiclassical_matches(&quantum_sphere(), &poly::quadratic_sphere());
    semiclassical_matches(&ambient_kappa_ads(), &poly::ambient());
}

#[test]
fn alternate_orders_need_truncation() {
    let a = first_order_kappa_ads();
    let order = [("x0", 1), ("x1", 1), ("x3", 1), ("x2", 1)];
    assert!(matches!(a.reordered("alt", &order, None), Err(NCError::NonTerminating(..))));
    let amb = ambient_kappa_ads();
    let alt = [("s0", 1), ("s1", 1), ("s3", 1), ("s2", 1), ("s4", 1)];
    assert!(matches!(amb.reordered("alt", &alt, None), Err(NCError::NonTerminating(..))));
    // Weights only change the order; this one still terminates.
    let weighted = [("s3", 1), ("s1", 1), ("s2", 1), ("s0", 2), ("s4", 2)];
    let w = amb.reordered("weighted", &weighted, None).unwrap();
    assert!(w.is_terminating() && all_zero(&w.jacobi_certificate().unwrap()));
}

#[test]
fn truncated_alternate_orders_agree() {
    const N: u16 = 3;
    let pairs = [
        (first_order_kappa_ads(), first_order_kappa_ads_alt_order(N).unwrap()),
        (ambient_kappa_ads(), ambient_kappa_ads_alt_order(N).unwrap()),
    ];
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for (base, alt) in &pairs {
        assert!(!alt.is_terminating());
        assert!(all_zero(&alt.jacobi_certificate().unwrap()), "{}", alt.name);
        assert!(all_zero(&alt.overlap_certificate().unwrap()), "{}", alt.name);
        for _ in 0..200 {
            let w = NCPoly::term(random_word(&mut rng, base.len(), 4), Scalar::one());
            let direct = truncate(&base.normal_form(&w).unwrap(), N);
            let via = alt.normal_form(&translate(&w, base, alt)).unwrap();
            let back = truncate(&base.normal_form(&translate(&via, alt, base)).unwrap(), N);
            assert_eq!(direct, back, "{}", alt.name);
        }
    }
    let alt = ambient_kappa_ads_alt_order(N).unwrap();
    let sig = translate(&pseudosphere_casimir(&ambient_kappa_ads()), &ambient_kappa_ads(), &alt);
    assert!(all_zero(&alt.casimir_check(&sig, &["s0", "s1", "s2", "s3", "s4"]).unwrap()));
}

fn arb_poly(n: usize) -> impl Strategy<Value = Vec<(Vec<u8>, i64)>> {
    prop::collection::vec((prop::collection::vec(0..n as u8, 0..=3), -3i64..=3), 1..=3)
}

fn build(terms: &[(Vec<u8>, i64)]) -> NCPoly {
    let mut p = NCPoly::zero();
    for (w, c) in terms {
        p.add_term(Word::new(w), int(*c));
    }
    p
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn commutator_is_a_lie_bracket(p in arb_poly(5), q in arb_poly(5), r in arb_poly(5)) {
        let a = ambient_kappa_ads();
        let (p, q, r) = (build(&p), build(&q), build(&r));
        let c = |x: &NCPoly, y: &NCPoly| a.commutator(x, y).unwrap();
        prop_assert!(c(&p, &q).add(&c(&q, &p)).is_zero());
        let jac = c(&p, &c(&q, &r)).add(&c(&q, &c(&r, &p))).add(&c(&r, &c(&p, &q)));
        prop_assert!(jac.is_zero());
        let sum = c(&p.add(&q), &r);
        prop_assert_eq!(sum, c(&p, &r).add(&c(&q, &r)));
    }

    #[test]
    fn products_are_associative(p in arb_poly(4), q in arb_poly(4), r in arb_poly(4)) {
        let a = first_order_kappa_ads();
        let (p, q, r) = (build(&p), build(&q), build(&r));
        let left = a.product(&a.product(&p, &q).unwrap(), &r).unwrap();
        let right = a.product(&p, &a.product(&q, &r).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }
}
