mod common;

use common::{eta, int, kinv, rho};
use kads_core::bialgebra::*;
use kads_core::liealg::*;
use kads_core::rclass::{eta_algebra, r0, r0_twisted, r_2plus1, r_lambda, r_lambda_twisted};
use kads_core::scalars::{Param, Scalar};
use nalgebra::DMatrix;
use proptest::prelude::*;

type Terms = Vec<((usize, usize), Scalar)>;

fn biv(terms: Terms) -> Bivector<Scalar> {
    Bivector::from_terms(DIM, terms)
}

fn poincare() -> LieAlgebra<Scalar> {
    ads_algebra(Scalar::zero())
}

fn vartheta() -> Scalar {
    Scalar::param(Param::VARTHETA)
}

#[test]
fn kappa_poincare_cocommutator_matches_printed_table() {
    let d = cocommutator(&poincare(), &r0(&kinv()));
    assert!(d.get(P0).is_zero());
    for a in 1..=3 {
        assert!(d.get(j(a)).is_zero());
        assert_eq!(d.get(p(a)), &biv(vec![((p(a), P0), kinv())]));
        let mut expected = vec![((k(a), P0), kinv())];
        for b in 1..=3 {
            for c in 1..=3 {
                let e = epsilon(a, b, c);
                if e != 0 {
                    expected.push(((p(b), j(c)), int(e) * kinv()));
                }
            }
        }
        assert_eq!(d.get(k(a)), &biv(expected), "δ(K{a})");
    }
}

#[test]
fn kappa_ads_cocommutator_matches_printed_table() {
    let d = cocommutator(&eta_algebra(), &r_lambda(&kinv(), &eta()));
    let (e, e2) = (eta(), eta().pow(2));
    let t = |i: usize, jj: usize, c: Scalar| ((i, jj), &c * &kinv());
    let expected: Vec<(usize, Terms)> = vec![
        (P0, vec![]),
        (j(3), vec![]),
        (j(1), vec![t(j(1), j(3), e.clone())]),
        (j(2), vec![t(j(2), j(3), e.clone())]),
        (p(1), vec![t(p(1), P0, int(1)), t(p(3), j(1), -&e), t(k(2), j(3), -&e2), t(k(3), j(2), e2.clone())]),
        (p(2), vec![t(p(2), P0, int(1)), t(p(3), j(2), -&e), t(k(1), j(3), e2.clone()), t(k(3), j(1), -&e2)]),
        (
            p(3),
            vec![
                t(p(3), P0, int(1)),
                t(p(1), j(1), e.clone()),
                t(p(2), j(2), e.clone()),
                t(k(1), j(2), -&e2),
                t(k(2), j(1), e2.clone()),
            ],
        ),
        (k(1), vec![t(k(1), P0, int(1)), t(p(2), j(3), int(1)), t(p(3), j(2), int(-1)), t(k(3), j(1), -&e)]),
        (k(2), vec![t(k(2), P0, int(1)), t(p(1), j(3), int(-1)), t(p(3), j(1), int(1)), t(k(3), j(2), -&e)]),
        (
            k(3),
            vec![
                t(k(3), P0, int(1)),
                t(p(1), j(2), int(1)),
                t(p(2), j(1), int(-1)),
                t(k(1), j(1), e.clone()),
                t(k(2), j(2), e.clone()),
            ],
        ),
    ];
    for (gen, terms) in expected {
        assert_eq!(d.get(gen), &biv(terms), "δ({})", KINEMATICAL_LABELS[gen]);
    }
}

#[test]
fn zero_r_gives_zero_cocommutator() {
    let d = cocommutator(&ads_formal(), &Bivector::zero(DIM));
    assert!(d.values.iter().all(Bivector::is_zero));
    assert!(schouten(&ads_formal(), &Bivector::zero(DIM)).unwrap().is_zero());
}

#[test]
fn cocommutator_json_keys() {
    let d = cocommutator(&poincare(), &r0(&kinv()));
    let v = d.to_json();
    assert_eq!(v["P1"]["P0^P1"], "-kinv");
    assert_eq!(v["K1"]["P2^J3"], "kinv");
}

fn ints() -> impl Strategy<Value = Vec<((usize, usize), i64)>> {
    prop::collection::vec(((0usize..10, 0usize..10), -3i64..=3), 0..6)
}

fn to_biv(v: &[((usize, usize), i64)]) -> Bivector<Scalar> {
    biv(v.iter().map(|(k, c)| (*k, int(*c))).collect())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn cocommutator_is_linear(r1 in ints(), r2 in ints(), a in -4i64..=4, b in -4i64..=4) {
        let g = ads_formal();
        let (a, b) = (int(a), int(b));
        let (r1, r2) = (to_biv(&r1), to_biv(&r2));
        let lhs = cocommutator(&g, &r1.scale(&a).add(&r2.scale(&b)));
        let (d1, d2) = (cocommutator(&g, &r1), cocommutator(&g, &r2));
        for i in 0..DIM {
            prop_assert_eq!(lhs.get(i), &d1.get(i).scale(&a).add(&d2.get(i).scale(&b)));
        }
    }

    #[test]
    fn schouten_matches_matrix_representation(
        terms in prop::collection::vec(((0usize..10, 0usize..10), -2.0f64..2.0), 1..=6),
        lambda in prop::sample::select(vec![-1.0, -0.3, 0.0, 0.3, 1.0]),
    ) {
        let r = Bivector::from_terms(DIM, terms);
        let g = ads_algebra(lambda);
        let s = schouten(&g, &r).unwrap();
        let err = matrix_schouten_mismatch(&r, &s, lambda);
        prop_assert!(err < 1e-10, "mismatch {}", err);
    }
}

fn kron3(a: &DMatrix<f64>, b: &DMatrix<f64>, c: &DMatrix<f64>) -> DMatrix<f64> {
    a.kronecker(b).kronecker(c)
}

/// Compares `ρ⊗ρ⊗ρ([[r,r]])` with the matrix commutators of the leg-embedded
/// `r₁₂, r₁₃, r₂₃`, an oracle independent of the structure constants.
fn matrix_schouten_mismatch(r: &Bivector<f64>, s: &Trivector<f64>, lambda: f64) -> f64 {
    let id = DMatrix::<f64>::identity(5, 5);
    let reps: Vec<_> = (0..DIM).map(|i| rho(i, lambda)).collect();
    let mut r12 = DMatrix::zeros(125, 125);
    let mut r13 = DMatrix::zeros(125, 125);
    let mut r23 = DMatrix::zeros(125, 125);
    for (i, jj, c) in r.tensor_entries() {
        r12 += kron3(&reps[i], &reps[jj], &id) * c;
        r13 += kron3(&reps[i], &id, &reps[jj]) * c;
        r23 += kron3(&id, &reps[i], &reps[jj]) * c;
    }
    let comm = |a: &DMatrix<f64>, b: &DMatrix<f64>| a * b - b * a;
    let lhs = comm(&r12, &r13) + comm(&r12, &r23) + comm(&r13, &r23);
    let mut rhs = DMatrix::zeros(125, 125);
    for ((a, b, c), v) in s.components() {
        for (x, y, z, sign) in [(a, b, c, 1.0), (b, c, a, 1.0), (c, a, b, 1.0), (b, a, c, -1.0), (a, c, b, -1.0), (c, b, a, -1.0)] {
            rhs += kron3(&reps[*x], &reps[*y], &reps[*z]) * (sign * v);
        }
    }
    (lhs - rhs).amax()
}

#[test]
fn single_boost_translation_term_has_nonzero_schouten() {
    let r = Bivector::from_terms(DIM, [((k(1), p(1)), 1.0)]);
    let s = schouten(&ads_algebra(0.0), &r).unwrap();
    assert!(!s.is_zero());
    assert!(matrix_schouten_mismatch(&r, &s, 0.0) < 1e-12);
}

#[test]
fn r_lambda_schouten_nonzero_but_invariant() {
    let s = schouten(&eta_algebra(), &r_lambda(&kinv(), &eta())).unwrap();
    assert!(!s.is_zero());
    for i in 0..DIM {
        assert!(ad_trivector(&eta_algebra(), &LieElement::basis(DIM, i), &s).is_zero());
    }
}

#[test]
fn mcybe_certificates() {
    assert!(mcybe_residual(&poincare(), &r0(&kinv())).unwrap().is_zero());
    assert!(mcybe_residual(&poincare(), &r0_twisted(&kinv(), &vartheta())).unwrap().is_zero());
    assert!(mcybe_residual(&eta_algebra(), &r_lambda(&kinv(), &eta())).unwrap().is_zero());
    assert!(mcybe_residual(&eta_algebra(), &r_lambda_twisted(&kinv(), &eta(), &vartheta())).unwrap().is_zero());
    let r = r_2plus1(&kinv());
    assert!(r.components().keys().all(|(a, b)| !(*a >= j(1) && *b >= j(1))));
    assert!(kads_core::rclass::mcybe_2plus1(&ads_formal(), &kinv()).unwrap().is_zero());
    let bad = Bivector::from_terms(DIM, [((j(1), p(2)), int(1))]);
    assert!(!mcybe_residual(&ads_formal(), &bad).unwrap().is_zero());
    // Commuting generators: [[r,r]] vanishes identically.
    let abelian = Bivector::from_terms(DIM, [((j(1), p(1)), int(1))]);
    assert!(schouten(&ads_formal(), &abelian).unwrap().is_zero());
}

#[test]
fn coisotropy() {
    let g = eta_algebra();
    let d = cocommutator(&g, &r_lambda(&kinv(), &eta()));
    assert!(coisotropy_check(&g, &d, &LORENTZ).unwrap());
    assert!(coisotropy_check(&g, &d, &[P0, j(3)]).unwrap());
    let zero = cocommutator(&g, &Bivector::zero(DIM));
    assert!(coisotropy_check(&g, &zero, &[P0]).unwrap());
    assert!(matches!(coisotropy_check(&g, &d, &[P0, p(1)]), Err(BialgebraError::Lie(LieError::NotSubalgebra(..)))));
    let tw = cocommutator(&poincare(), &r0_twisted(&kinv(), &vartheta()));
    assert!(coisotropy_check(&poincare(), &tw, &LORENTZ).unwrap());
    let off = cocommutator(&g, &Bivector::from_terms(DIM, [((p(1), p(2)), int(1))]));
    assert!(!coisotropy_check(&g, &off, &LORENTZ).unwrap());
}

#[test]
fn dual_jacobi() {
    let g = eta_algebra();
    assert!(dual_jacobi_residual(&cocommutator(&g, &r_lambda(&kinv(), &eta()))).is_zero());
    assert!(dual_jacobi_residual(&cocommutator(&poincare(), &r0(&kinv()))).is_zero());
    let mut corrupted = cocommutator(&g, &r_lambda(&kinv(), &eta()));
    corrupted.values[p(1)].add_wedge(p(2), j(1), &int(1));
    assert!(!dual_jacobi_residual(&corrupted).is_zero());
    // A coboundary whose Schouten bracket is not ad-invariant fails.
    let bad = Bivector::from_terms(DIM, [((j(1), p(2)), int(1))]);
    assert!(!dual_jacobi_residual(&cocommutator(&ads_formal(), &bad)).is_zero());
}

#[test]
fn numeric_and_exact_paths_agree() {
    let lam = -0.49;
    let gf = ads_algebra(lam);
    let rf = r_lambda_twisted(&0.8, &0.7, &0.3);
    let df = cocommutator(&gf, &rf);
    let bindings = std::collections::BTreeMap::from([
        (Param::ETA, Scalar::from_ratio(7, 10)),
        (Param::KAPPA_INV, Scalar::from_ratio(4, 5)),
        (Param::VARTHETA, Scalar::from_ratio(3, 10)),
    ]);
    let de = cocommutator(&eta_algebra(), &r_lambda_twisted(&kinv(), &eta(), &vartheta())).substitute(&bindings).unwrap();
    for i in 0..DIM {
        let exact = de.get(i).map_coeffs(|c| c.eval_numeric(&Default::default()).unwrap());
        assert!(exact.sub(df.get(i)).norm() < 1e-14);
    }
}

#[test]
fn closed_form_cocommutator_tables() {
    use kads_core::rclass::kappa_ads_cocommutator;
    assert_eq!(cocommutator(&eta_algebra(), &r_lambda(&kinv(), &eta())), kappa_ads_cocommutator(&kinv(), &eta()));
    assert_eq!(cocommutator(&poincare(), &r0(&kinv())), kappa_ads_cocommutator(&kinv(), &Scalar::zero()));
}
