use kads_core::bialgebra::Bivector;
use kads_core::group_geom::{chart_box, sample_points, LORENTZ_BOX};
use kads_core::rclass::{r0, r0_twisted, r_lambda, r_lambda_twisted};
use kads_core::sklyanin::poly::{self, PolyPoisson};
use kads_core::sklyanin::tables::{closed_form_ambient, closed_form_local, closed_form_twisted, kappa_minkowski, project_2plus1, twisted_minkowski, BracketTable};
use kads_core::sklyanin::verify_table;
use kads_core::{Param, ParamValues, Scalar};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::json;

use crate::config::RunConfig;
use crate::report::Suite;

/// Flat-limit comparisons use this `|Λ|`.
const TINY_LAMBDA: f64 = 1e-22;
const LIMIT_TOL: f64 = 1e-10;
const FLOW_TOL: f64 = 1e-8;

fn tables_at(lambda: f64, kinv: f64, twist: f64, fault: bool) -> Vec<(Bivector<f64>, BracketTable)> {
    let eta = lambda.abs().sqrt();
    let local_kinv = if fault { 1.5 * kinv } else { kinv };
    if lambda == 0.0 {
        vec![
            (r0(&kinv), kappa_minkowski(local_kinv)),
            (r0_twisted(&kinv, &twist), twisted_minkowski(kinv, twist)),
            (r0(&kinv), closed_form_ambient(0.0, kinv)),
            (r0(&kinv), project_2plus1(&kappa_minkowski(kinv))),
        ]
    } else {
        vec![
            (r_lambda(&kinv, &eta), closed_form_local(lambda, local_kinv)),
            (r_lambda_twisted(&kinv, &eta, &twist), closed_form_twisted(lambda, kinv, twist)),
            (r_lambda(&kinv, &eta), closed_form_ambient(lambda, kinv)),
            (r_lambda(&kinv, &eta), project_2plus1(&closed_form_local(lambda, kinv))),
        ]
    }
}

fn tag(t: &BracketTable) -> &'static str {
    match (t.kind, t.projected, t.params.twist != 0.0) {
        (kads_core::sklyanin::tables::TableKind::Ambient, _, _) => "ambient-table",
        (_, true, _) => "projected-2plus1-table",
        (_, false, true) => "twisted-local-table",
        _ => "local-table",
    }
}

fn sklyanin_suites(cfg: &RunConfig, lambda: f64) -> Vec<Suite> {
    let mut out = Vec::new();
    for (r, table) in tables_at(lambda, cfg.kinv(), cfg.twist_value(), cfg.inject_fault) {
        let name = format!("Sklyanin vs closed form: {} at Λ = {lambda}", table.name);
        match verify_table(&r, &table, cfg.samples, cfg.seed) {
            Ok(rep) => {
                let detail = json!({
                    "table": rep.table,
                    "params": rep.params,
                    "samples": rep.samples,
                    "seed": rep.seed,
                    "chart": { "box": chart_box(lambda), "lorentz_box": LORENTZ_BOX },
                    "per_bracket": rep.per_bracket,
                    "max_deviation": rep.max_deviation,
                    "lorentz_deviation": rep.lorentz_deviation,
                    "worst_point": rep.worst_point.map(|p| p.coords),
                });
                out.push(Suite::numeric(name, tag(&table), rep.max_deviation.max(rep.lorentz_deviation), cfg.tolerance, detail));
            }
            Err(e) => out.push(Suite::check(name, tag(&table), false, json!({ "error": e.to_string() }))),
        }
        let worst = sample_points(lambda, cfg.samples, cfg.seed)
            .iter()
            .map(|p| {
                let mut x = p.local();
                if table.projected {
                    x[3] = 0.0;
                }
                table.jacobi_residual(&table.coords_of_local(&x))
            })
            .fold(0.0, f64::max);
        out.push(Suite::numeric(format!("Jacobi identity: {} at Λ = {lambda}", table.name), "table-jacobi", worst, cfg.tolerance, json!({ "samples": cfg.samples, "seed": cfg.seed })));
    }
    out
}

fn nonzero_jacobi(p: &PolyPoisson) -> usize {
    p.jacobi().iter().filter(|(_, v)| !v.is_zero()).count()
}

fn exact_suites(fault: bool) -> Vec<Suite> {
    let mut sphere_alg = poly::quadratic_sphere();
    if fault {
        sphere_alg.set(0, 1, sphere_alg.get(0, 1) + Scalar::param(Param::KAPPA_INV) * Scalar::param(Param::local(1)));
    }
    let mut out = Vec::new();
    for (name, p) in [
        ("kappa-Minkowski", poly::minkowski(false)),
        ("twisted kappa-Minkowski", poly::minkowski(true)),
        ("first-order kappa-AdS", poly::first_order()),
        ("quadratic sphere", sphere_alg.clone()),
        ("ambient", poly::ambient()),
    ] {
        out.push(Suite::exact(format!("polynomial Jacobi: {name}"), "poly-jacobi", nonzero_jacobi(&p), serde_json::Value::Null));
    }
    let sphere_res = sphere_alg.casimir_residuals(&poly::sphere()).iter().filter(|s| !s.is_zero()).count();
    out.push(Suite::exact("sphere is a Casimir of the quadratic algebra", "casimir-sphere", sphere_res, serde_json::Value::Null));
    let pseudo = poly::ambient().casimir_residuals(&poly::pseudosphere()).iter().filter(|s| !s.is_zero()).count();
    out.push(Suite::exact("pseudosphere is a Casimir of the ambient algebra", "casimir-pseudosphere", pseudo, serde_json::Value::Null));

    let f = -(Scalar::from_ratio(1, 2) * Scalar::param(Param::ETA) * Scalar::param(Param::KAPPA_INV) * Scalar::param(Param::local(3)));
    let built = poly::poisson_3d(&f, &poly::sphere());
    let diff = (0..3).flat_map(|a| (0..3).map(move |b| (a, b))).filter(|(a, b)| built.get(*a, *b) != sphere_alg.get(*a, *b)).count();
    out.push(Suite::exact(
        "3D construction with F = sphere, f = -(eta/2) kinv x3",
        "poisson-3d",
        diff,
        json!({ "brackets": built.to_json() }),
    ));
    out
}

fn flow_suite(cfg: &RunConfig, fault: bool) -> Suite {
    let eta = cfg.lambda.value().map(|l| l.abs().sqrt()).filter(|e| *e > 0.0).unwrap_or(1.0);
    let values: ParamValues = [(Param::ETA, eta), (Param::KAPPA_INV, cfg.kinv())].into_iter().collect();
    let mut alg = poly::quadratic_sphere();
    if fault {
        alg.set(0, 1, alg.get(0, 1) + Scalar::param(Param::KAPPA_INV) * Scalar::param(Param::local(1)));
    }
    let q = alg.compile(&values).expect("all parameters bound");
    let hamiltonians: [fn(&[f64]) -> Vec<f64>; 3] = [
        |_| vec![1.0, 0.0, 0.0],
        |y| vec![y[1] * y[2], y[0] * y[2], y[0] * y[1]],
        |y| vec![2.0 * y[0], -y[2], -y[1] + 3.0 * y[2] * y[2]],
    ];
    let s = |y: &[f64]| y.iter().map(|v| v * v).sum::<f64>();
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut worst = 0.0f64;
    let runs = cfg.samples.min(5);
    for grad in hamiltonians {
        for _ in 0..runs {
            let y0: Vec<f64> = (0..3).map(|_| rng.random_range(-1.0..1.0)).collect();
            let traj = poly::hamiltonian_flow(&q, grad, &y0, 1e-3, 2000);
            worst = worst.max(traj.iter().map(|y| (s(y) - s(&y0)).abs()).fold(0.0, f64::max));
        }
    }
    Suite::numeric(
        "sphere conserved along Hamiltonian flows",
        "leaf-conservation",
        worst,
        FLOW_TOL,
        json!({ "eta": eta, "kappa_inv": cfg.kinv(), "flows": 3 * runs, "dt": 1e-3, "steps": 2000 }),
    )
}

fn limit_suites(cfg: &RunConfig) -> Vec<Suite> {
    let (kinv, twist) = (cfg.kinv(), cfg.twist_value());
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut flat = 0.0f64;
    let mut order1 = 0usize;
    let mut projected = 0.0f64;
    for _ in 0..cfg.samples {
        let x: [f64; 4] = std::array::from_fn(|_| rng.random_range(-0.8..0.8));
        for tiny in [TINY_LAMBDA, -TINY_LAMBDA] {
            let pairs = [
                (closed_form_local(tiny, kinv), kappa_minkowski(kinv)),
                (closed_form_twisted(tiny, kinv, twist), twisted_minkowski(kinv, twist)),
            ];
            for (t, m) in pairs {
                let (a, b) = (t.matrix(&x), m.matrix(&x));
                for i in 0..4 {
                    for j in 0..4 {
                        flat = flat.max((a[i][j] - b[i][j]).abs());
                    }
                }
            }
        }
        let [_, first] = closed_form_local(-1.0, kinv).eta_expansion(&x);
        let want = [(1, 2, -kinv * x[3] * x[3]), (1, 3, kinv * x[2] * x[3]), (2, 3, -kinv * x[1] * x[3])];
        order1 += want.iter().filter(|(a, b, v)| first[*a][*b] != *v).count();
        order1 += (1..4).filter(|a| first[0][*a] != 0.0).count();
        for lambda in cfg.lambdas() {
            let p = project_2plus1(&closed_form_local(lambda, kinv));
            projected = projected.max(p.matrix(&x[..3])[1][2].abs());
        }
    }
    vec![
        Suite::numeric("η → 0 of the closed forms", "flat-limit", flat, LIMIT_TOL, json!({ "lambda": [TINY_LAMBDA, -TINY_LAMBDA], "samples": cfg.samples })),
        Suite::exact("first order in η of the space-space brackets", "eta-expansion", order1, json!({ "samples": cfg.samples })),
        Suite::exact("x3 → 0 projection has {x1,x2} = 0", "projection-2plus1", usize::from(projected != 0.0), serde_json::Value::Null),
    ]
}

pub fn run(cfg: &RunConfig) -> Vec<Suite> {
    let mut out = Vec::new();
    for lambda in cfg.lambdas() {
        out.extend(sklyanin_suites(cfg, lambda));
    }
    out.extend(exact_suites(cfg.inject_fault));
    out.push(flow_suite(cfg, cfg.inject_fault));
    out.extend(limit_suites(cfg));
    out
}
