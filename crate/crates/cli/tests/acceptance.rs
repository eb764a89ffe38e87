//! The ten acceptance criteria, run in order with one PASS/FAIL line each.

use std::io::Write;
use std::process::Command;
use std::time::{Duration, Instant};

use kads_core::bialgebra::{cocommutator, mcybe_residual, Bivector};
use kads_core::group_geom::{ambient_coords, group_element, metric_at, pullback_metric, sample_points};
use kads_core::liealg::{ads_algebra, ads_formal, epsilon, j, k, p, DIM, P0};
use kads_core::ncalg::all_zero;
use kads_core::ncalg::builtins as nc;
use kads_core::rclass::{
    canonicalize, constraint_residuals, eta_algebra, expected_constraints, mcybe_2plus1, mutually_reduce, numeric_constraints,
    numeric_mcybe, r0, r0_twisted, r_lambda, r_lambda_twisted, sphere_param, twisted_beta,
};
use kads_core::sklyanin::poly;
use kads_core::sklyanin::tables::{closed_form_ambient, closed_form_local, closed_form_twisted, project_2plus1};
use kads_core::sklyanin::verify_table;
use kads_core::{Param, ParamValues, Scalar};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const SEED: u64 = 0x5EED;
const KINV: f64 = 0.7;

type Outcome = Result<String, String>;

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(start: Instant, budget: Duration) -> Result<(), String> {
    let t = start.elapsed();
    ensure(t < budget, || format!("took {t:?}, budget {budget:?}"))
}

fn s(p: Param) -> Scalar {
    Scalar::param(p)
}

fn int(n: i64) -> Scalar {
    Scalar::from_int(n)
}

fn biv(terms: Vec<((usize, usize), Scalar)>) -> Bivector<Scalar> {
    Bivector::from_terms(DIM, terms)
}

/// κ-Poincaré and κ-AdS cocommutators, entered term by term.
fn criterion_1() -> Outcome {
    let start = Instant::now();
    let kinv = s(Param::KAPPA_INV);
    let d = cocommutator(&ads_algebra(Scalar::zero()), &r0(&kinv));
    ensure(d.get(P0).is_zero(), || "δ(P0) ≠ 0".into())?;
    for a in 1..=3 {
        ensure(d.get(j(a)).is_zero(), || format!("δ(J{a}) ≠ 0"))?;
        ensure(d.get(p(a)) == &biv(vec![((p(a), P0), kinv.clone())]), || format!("δ(P{a})"))?;
        let mut want = vec![((k(a), P0), kinv.clone())];
        for b in 1..=3 {
            for c in 1..=3 {
                if epsilon(a, b, c) != 0 {
                    want.push(((p(b), j(c)), int(epsilon(a, b, c)) * kinv.clone()));
                }
            }
        }
        ensure(d.get(k(a)) == &biv(want), || format!("δ(K{a})"))?;
    }

    let d = cocommutator(&eta_algebra(), &r_lambda(&kinv, &s(Param::ETA)));
    let (e, e2) = (s(Param::ETA), s(Param::ETA).pow(2));
    let t = |a: usize, b: usize, c: Scalar| ((a, b), &c * &kinv);
    let table: Vec<(usize, Vec<((usize, usize), Scalar)>)> = vec![
        (P0, vec![]),
        (j(3), vec![]),
        (j(1), vec![t(j(1), j(3), e.clone())]),
        (j(2), vec![t(j(2), j(3), e.clone())]),
        (p(1), vec![t(p(1), P0, int(1)), t(p(3), j(1), -&e), t(k(2), j(3), -&e2), t(k(3), j(2), e2.clone())]),
        (p(2), vec![t(p(2), P0, int(1)), t(p(3), j(2), -&e), t(k(1), j(3), e2.clone()), t(k(3), j(1), -&e2)]),
        (p(3), vec![t(p(3), P0, int(1)), t(p(1), j(1), e.clone()), t(p(2), j(2), e.clone()), t(k(1), j(2), -&e2), t(k(2), j(1), e2.clone())]),
        (k(1), vec![t(k(1), P0, int(1)), t(p(2), j(3), int(1)), t(p(3), j(2), int(-1)), t(k(3), j(1), -&e)]),
        (k(2), vec![t(k(2), P0, int(1)), t(p(1), j(3), int(-1)), t(p(3), j(1), int(1)), t(k(3), j(2), -&e)]),
        (k(3), vec![t(k(3), P0, int(1)), t(p(1), j(2), int(1)), t(p(2), j(1), int(-1)), t(k(1), j(1), e.clone()), t(k(2), j(2), e.clone())]),
    ];
    for (gen, terms) in table {
        ensure(d.get(gen) == &biv(terms), || format!("δ of generator {gen} differs from the κ-AdS table"))?;
    }
    within(start, Duration::from_secs(1))?;
    Ok(format!("20 cocommutators exact in {:?}", start.elapsed()))
}

fn criterion_2() -> Outcome {
    let start = Instant::now();
    let (kinv, eta, v) = (s(Param::KAPPA_INV), s(Param::ETA), s(Param::VARTHETA));
    let flat = ads_algebra(Scalar::zero());
    let cases = [
        ("r0", mcybe_residual(&flat, &r0(&kinv))),
        ("twisted r0", mcybe_residual(&flat, &r0_twisted(&kinv, &v))),
        ("r_Λ", mcybe_residual(&eta_algebra(), &r_lambda(&kinv, &eta))),
        ("twisted r_Λ", mcybe_residual(&eta_algebra(), &r_lambda_twisted(&kinv, &eta, &v))),
    ];
    for (name, res) in cases {
        let res = res.map_err(|e| format!("{name}: {e}"))?;
        ensure(res.is_zero(), || format!("{name}: residual {:?}", res))?;
    }
    let sub = mcybe_2plus1(&ads_formal(), &kinv).map_err(|e| e.to_string())?;
    ensure(sub.is_zero(), || "(2+1) residual nonzero".into())?;
    within(start, Duration::from_secs(10))?;
    Ok(format!("5 exact certificates in {:?}", start.elapsed()))
}

fn unit(rng: &mut ChaCha8Rng) -> [f64; 3] {
    let ct: f64 = rng.random_range(-1.0..1.0);
    let ph: f64 = rng.random_range(0.0..std::f64::consts::TAU);
    let st = (1.0 - ct * ct).sqrt();
    [st * ph.cos(), -st * ph.sin(), ct]
}

fn criterion_3() -> Outcome {
    let found = constraint_residuals().map_err(|e| e.to_string())?;
    ensure(mutually_reduce(&found, &expected_constraints()), || "ideals differ".into())?;
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let (mut worst_sat, mut least_viol) = (0.0f64, f64::INFINITY);
    for _ in 0..1000 {
        let (kinv, eta) = (rng.random_range(0.2..2.0), rng.random_range(0.2..2.0));
        let n = unit(&mut rng);
        let t: f64 = rng.random_range(-1.5..1.5);
        worst_sat = worst_sat.max(numeric_mcybe(&n.map(|x| x * eta * kinv), &n.map(|x| x * t), kinv, eta));
        loop {
            let a: [f64; 3] = std::array::from_fn(|_| rng.random_range(-2.0..2.0));
            let b: [f64; 3] = std::array::from_fn(|_| rng.random_range(-2.0..2.0));
            if numeric_constraints(&a, &b, kinv, eta).iter().any(|c| c.abs() > 0.1) {
                least_viol = least_viol.min(numeric_mcybe(&a, &b, kinv, eta));
                break;
            }
        }
    }
    ensure(worst_sat < 1e-10, || format!("satisfying residual {worst_sat:e}"))?;
    ensure(least_viol > 1e-6, || format!("violating residual {least_viol:e}"))?;
    Ok(format!("ideal equal; satisfying max {worst_sat:.1e}, violating min {least_viol:.1e}"))
}

fn criterion_4() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let mut worst = 0.0f64;
    for _ in 0..100 {
        let theta: f64 = rng.random_range(0.05..1.5);
        let phi: f64 = rng.random_range(-3.0..3.0);
        let beta3: f64 = rng.random_range(-1.0..1.0);
        let (kinv, eta) = (rng.random_range(0.2..2.0), rng.random_range(0.2..2.0));
        let (ct, st, cp, sp) = (theta.cos(), theta.sin(), phi.cos(), phi.sin());
        let alpha = sphere_param(&ct, &st, &cp, &sp, &(eta * kinv));
        let beta = twisted_beta(&ct, &st, &cp, &sp, &(beta3 / ct));
        let c = canonicalize(&alpha, &beta, kinv, eta).map_err(|e| e.to_string())?;
        let vartheta = -beta3 / ct;
        worst = worst.max(c.r.sub(&r_lambda_twisted(&kinv, &eta, &vartheta)).norm());
        if beta3.abs() < 1e-3 {
            worst = worst.max(c.r.sub(&r_lambda(&kinv, &eta)).norm() - vartheta.abs());
        }
    }
    ensure(worst < 1e-12, || format!("max deviation {worst:e}"))?;
    Ok(format!("100 samples, max deviation {worst:.1e}"))
}

/// Central differences of the ambient embedding, contracted with the flat
/// ambient metric `diag(−1/Λ, 1, −1, −1, −1)`; the `s0` term drops at `Λ = 0`.
fn fd_metric(x: &[f64; 4], lambda: f64) -> [[f64; 4]; 4] {
    let h = 1e-5;
    let w = [if lambda == 0.0 { 0.0 } else { -1.0 / lambda }, 1.0, -1.0, -1.0, -1.0];
    let jac: Vec<[f64; 5]> = (0..4)
        .map(|mu| {
            let (mut xp, mut xm) = (*x, *x);
            xp[mu] += h;
            xm[mu] -= h;
            let (a, b) = (ambient_coords(&xp, lambda), ambient_coords(&xm, lambda));
            std::array::from_fn(|r| (a[r] - b[r]) / (2.0 * h))
        })
        .collect();
    std::array::from_fn(|m| std::array::from_fn(|n| (0..5).map(|r| jac[m][r] * w[r] * jac[n][r]).sum()))
}

fn criterion_5() -> Outcome {
    let (mut iso, mut pseudo, mut metric, mut fd) = (0.0f64, 0.0f64, 0.0f64, 0.0f64);
    for lambda in [-1.0, -0.3, 0.0, 0.3, 1.0] {
        for pt in sample_points(lambda, 500, SEED) {
            let g = group_element(&pt).map_err(|e| e.to_string())?;
            iso = iso.max(g.isometry_residual(lambda));
            pseudo = pseudo.max(g.ambient().pseudosphere_residual(lambda).abs());
            let x = pt.local();
            let m = metric_at(&x, lambda).map_err(|e| e.to_string())?;
            let pb = pullback_metric(&x, lambda).map_err(|e| e.to_string())?;
            let f = fd_metric(&x, lambda);
            for a in 0..4 {
                for b in 0..4 {
                    metric = metric.max((m[(a, b)] - pb[(a, b)]).abs());
                    fd = fd.max((m[(a, b)] - f[a][b]).abs());
                }
            }
        }
    }
    ensure(iso < 1e-10, || format!("isometry {iso:e}"))?;
    ensure(pseudo < 1e-10, || format!("pseudosphere {pseudo:e}"))?;
    ensure(metric < 1e-8 && fd < 1e-8, || format!("metric vs pullback {metric:e}, vs finite differences {fd:e}"))?;
    Ok(format!("isometry {iso:.1e}, pseudosphere {pseudo:.1e}, metric {metric:.1e} (fd {fd:.1e})"))
}

fn criterion_6() -> Outcome {
    let start = Instant::now();
    let mut worst = 0.0f64;
    for lambda in [-1.0f64, 1.0] {
        let eta = lambda.abs().sqrt();
        let cases = [
            (r_lambda(&KINV, &eta), closed_form_local(lambda, KINV)),
            (r_lambda_twisted(&KINV, &eta, &0.4), closed_form_twisted(lambda, KINV, 0.4)),
            (r_lambda(&KINV, &eta), closed_form_ambient(lambda, KINV)),
        ];
        for (r, table) in cases {
            let rep = verify_table(&r, &table, 200, SEED).map_err(|e| e.to_string())?;
            ensure(rep.passes(1e-8), || {
                format!("{} at Λ={lambda}: {:e} (Lorentz {:e})", table.name, rep.max_deviation, rep.lorentz_deviation)
            })?;
            worst = worst.max(rep.max_deviation).max(rep.lorentz_deviation);
        }
    }
    within(start, Duration::from_secs(60))?;
    Ok(format!("6 tables × 200 points, max deviation {worst:.1e} in {:?}", start.elapsed()))
}

fn criterion_7() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let mut flat = 0.0f64;
    for _ in 0..200 {
        let x: [f64; 4] = std::array::from_fn(|_| rng.random_range(-0.8..0.8));
        let v = rng.random_range(-1.0..1.0);
        let minkowski = [
            [0.0, -KINV * x[1] - v * x[2], -KINV * x[2] + v * x[1], -KINV * x[3]],
            [KINV * x[1] + v * x[2], 0.0, 0.0, 0.0],
            [KINV * x[2] - v * x[1], 0.0, 0.0, 0.0],
            [KINV * x[3], 0.0, 0.0, 0.0],
        ];
        for tiny in [1e-22, -1e-22] {
            let untwisted = closed_form_local(tiny, KINV).matrix(&x);
            let twisted = closed_form_twisted(tiny, KINV, v).matrix(&x);
            for a in 0..4 {
                for b in 0..4 {
                    let plain = if a == 0 && b > 0 { -KINV * x[b] } else if b == 0 && a > 0 { KINV * x[a] } else { 0.0 };
                    flat = flat.max((untwisted[a][b] - plain).abs()).max((twisted[a][b] - minkowski[a][b]).abs());
                }
            }
            let sa = ambient_coords(&x, 0.0);
            let amb = closed_form_ambient(tiny, KINV).matrix(&sa);
            for a in 0..5 {
                for b in 0..5 {
                    let want = match (a, b) {
                        (1, 2..=4) => -KINV * sa[b] * sa[0],
                        (2..=4, 1) => KINV * sa[a] * sa[0],
                        _ => 0.0,
                    };
                    flat = flat.max((amb[a][b] - want).abs());
                }
            }
        }
        let [_, first] = closed_form_local(-1.0, KINV).eta_expansion(&x);
        let want = [(1, 2, -KINV * x[3] * x[3]), (1, 3, KINV * x[2] * x[3]), (2, 3, -KINV * x[1] * x[3])];
        for (a, b, w) in want {
            ensure(first[a][b] == w, || format!("first-order {{x{a},x{b}}} = {} ≠ {w}", first[a][b]))?;
        }
        for lambda in [-1.0, 1.0] {
            let m = project_2plus1(&closed_form_local(lambda, KINV)).matrix(&x[..3]);
            ensure(m[1][2] == 0.0, || "projected {x1,x2} ≠ 0".into())?;
        }
    }
    ensure(flat < 1e-10, || format!("flat-limit deviation {flat:e}"))?;
    Ok(format!("flat limits within {flat:.1e}; first order exact; projection exact"))
}

fn criterion_8() -> Outcome {
    let start = Instant::now();
    for a in nc::all() {
        ensure(all_zero(&a.jacobi_certificate().map_err(|e| e.to_string())?), || format!("{}: Jacobi", a.name))?;
    }
    let q = nc::quantum_sphere();
    let sq = q.casimir_check(&nc::quantum_sphere_casimir(&q), &["x1", "x2", "x3"]).map_err(|e| e.to_string())?;
    ensure(all_zero(&sq), || "quantum sphere Casimir".into())?;
    let a = nc::ambient_kappa_ads();
    let sphere = nc::sphere_casimir(&a, 's');
    let space = a.casimir_check(&sphere, &["s1", "s2", "s3"]).map_err(|e| e.to_string())?;
    ensure(all_zero(&space), || "sphere Casimir on the space sector".into())?;
    let sig = a.casimir_check(&nc::pseudosphere_casimir(&a), &["s0", "s1", "s2", "s3", "s4"]).map_err(|e| e.to_string())?;
    ensure(all_zero(&sig), || "pseudosphere Casimir".into())?;
    for (g, shown) in [("s0", nc::displayed_sphere_s0(&a)), ("s4", nc::displayed_sphere_s4(&a))] {
        let got = a.commutator(&sphere, &a.gen(g).map_err(|e| e.to_string())?).map_err(|e| e.to_string())?;
        let want = a.normal_form(&shown).map_err(|e| e.to_string())?;
        ensure(got == want && !got.is_zero(), || format!("[sphere Casimir, {g}]"))?;
    }
    within(start, Duration::from_secs(30))?;
    Ok(format!("5 algebras, 3 Casimirs, 2 brackets exact in {:?}", start.elapsed()))
}

fn criterion_9() -> Outcome {
    let x = |a: usize| s(Param::local(a));
    let half = Scalar::from_ratio(1, 2);
    let f = -(half * s(Param::ETA) * s(Param::KAPPA_INV) * x(3));
    let built = poly::poisson_3d(&f, &poly::sphere());
    let ek = s(Param::ETA) * s(Param::KAPPA_INV);
    let want = [(0, 1, -(&ek * &x(3).pow(2))), (0, 2, &ek * &(x(2) * x(3))), (1, 2, -(&ek * &(x(1) * x(3))))];
    for (a, b, w) in want {
        ensure(built.get(a, b) == w, || format!("bracket ({a},{b}) = {}", built.get(a, b)))?;
    }
    let values: ParamValues = [(Param::ETA, 1.0), (Param::KAPPA_INV, KINV)].into_iter().collect();
    let q = built.compile(&values).map_err(|e| e.to_string())?;
    let hamiltonians: [fn(&[f64]) -> Vec<f64>; 3] = [
        |_| vec![1.0, 0.0, 0.0],
        |y| vec![y[1] * y[2], y[0] * y[2], y[0] * y[1]],
        |y| vec![2.0 * y[0], -y[2], -y[1] + 3.0 * y[2] * y[2]],
    ];
    let sq = |y: &[f64]| y.iter().map(|v| v * v).sum::<f64>();
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let mut drift = 0.0f64;
    for grad in hamiltonians {
        for _ in 0..5 {
            let y0: Vec<f64> = (0..3).map(|_| rng.random_range(-1.0..1.0)).collect();
            let traj = poly::hamiltonian_flow(&q, grad, &y0, 1e-3, 2000);
            drift = drift.max(traj.iter().map(|y| (sq(y) - sq(&y0)).abs()).fold(0.0, f64::max));
        }
    }
    ensure(drift < 1e-8, || format!("drift {drift:e}"))?;
    Ok(format!("closed forms exact; max drift of S over 15 flows {drift:.1e}"))
}

fn kads(args: &[&str], threads: &str) -> Result<Vec<u8>, String> {
    let out = Command::new(env!("CARGO_BIN_EXE_kads"))
        .args(args)
        .env("KADS_THREADS", threads)
        .output()
        .map_err(|e| e.to_string())?;
    ensure(out.status.success(), || format!("kads {args:?} exited with {:?}", out.status.code()))?;
    Ok(out.stdout)
}

fn criterion_10() -> Outcome {
    let runs: [&[&str]; 4] = [
        &["poisson", "--lambda", "-1", "--kappa-inv", "0.7", "--samples", "50", "--seed", "7"],
        &["nc"],
        &["classify", "--samples", "100"],
        &["check-bialgebra", "--lambda", "0.3", "--format", "csv"],
    ];
    for args in runs {
        let a = kads(args, "1")?;
        let b = kads(args, "4")?;
        let c = kads(args, "4")?;
        ensure(a == b && b == c, || format!("kads {args:?} output differs between runs"))?;
    }
    Ok("4 commands byte-identical across repeated runs and thread counts".into())
}

/// Written past the test harness capture so the lines always show.
fn report(line: String) {
    let mut out = std::io::stdout().lock();
    let _ = writeln!(out, "{line}");
    let _ = out.flush();
}

#[test]
fn acceptance() {
    let criteria: [(&str, fn() -> Outcome); 10] = [
        ("exact bialgebra reproduction", criterion_1),
        ("mCYBE certificates", criterion_2),
        ("constraint-surface equivalence", criterion_3),
        ("canonicalization", criterion_4),
        ("group geometry", criterion_5),
        ("Sklyanin verification", criterion_6),
        ("limits and expansions", criterion_7),
        ("quantum algebra certificates", criterion_8),
        ("Poisson 3D construction", criterion_9),
        ("determinism", criterion_10),
    ];
    let mut failed = Vec::new();
    for (i, (name, run)) in criteria.iter().enumerate() {
        match run() {
            Ok(msg) => report(format!("PASS {:>2} {name}: {msg}", i + 1)),
            Err(msg) => {
                report(format!("FAIL {:>2} {name}: {msg}", i + 1));
                failed.push(i + 1);
            }
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
