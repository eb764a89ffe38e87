use kads_core::liealg::{ads_formal, LieElement, DIM, P0};
use kads_core::rclass::{
    canonicalize, canonicalize_formal, constraint_residuals, expected_constraints, generic_ansatz, impose_primitivity,
    mutually_reduce, numeric_constraints, numeric_mcybe, r_lambda_twisted, remainders, sphere_param, twisted_beta,
};
use kads_core::{Param, Scalar};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::json;

use crate::config::RunConfig;
use crate::report::Suite;

/// Satisfying points must give an mCYBE residual below this.
pub const SATISFYING_BOUND: f64 = 1e-10;
/// Violating points (constraint distance above 0.1) must exceed this.
pub const VIOLATING_BOUND: f64 = 1e-6;

fn unit(rng: &mut ChaCha8Rng) -> [f64; 3] {
    let ct: f64 = rng.random_range(-1.0..1.0);
    let ph: f64 = rng.random_range(0.0..std::f64::consts::TAU);
    let st = (1.0 - ct * ct).sqrt();
    [st * ph.cos(), -st * ph.sin(), ct]
}

fn falsification(cfg: &RunConfig) -> Vec<Suite> {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let (mut sat_worst, mut viol_best, mut violating) = (0.0f64, f64::INFINITY, 0usize);
    for _ in 0..cfg.samples {
        let kinv = cfg.kappa_inv.value().unwrap_or_else(|| rng.random_range(0.2..2.0));
        let eta = match cfg.lambda.value() {
            Some(l) if l < 0.0 => (-l).sqrt(),
            _ => rng.random_range(0.2..2.0),
        };
        let n = unit(&mut rng);
        let t: f64 = rng.random_range(-1.5..1.5);
        sat_worst = sat_worst.max(numeric_mcybe(&n.map(|x| x * eta * kinv), &n.map(|x| x * t), kinv, eta));
        // Rejection-sample points a definite distance off the surface.
        loop {
            let a: [f64; 3] = std::array::from_fn(|_| rng.random_range(-2.0..2.0));
            let b: [f64; 3] = std::array::from_fn(|_| rng.random_range(-2.0..2.0));
            let dist = numeric_constraints(&a, &b, kinv, eta).iter().map(|x| x.abs()).fold(0.0, f64::max);
            if dist > 0.1 {
                viol_best = viol_best.min(numeric_mcybe(&a, &b, kinv, eta));
                violating += 1;
                break;
            }
        }
    }
    vec![
        Suite::numeric(
            "solutions on the constraint surface",
            "falsification-satisfying",
            sat_worst,
            SATISFYING_BOUND,
            json!({ "samples": cfg.samples, "seed": cfg.seed }),
        ),
        Suite {
            passed: viol_best > VIOLATING_BOUND,
            ..Suite::numeric(
                "points off the constraint surface",
                "falsification-violating",
                viol_best,
                VIOLATING_BOUND,
                json!({ "samples": violating, "seed": cfg.seed, "criterion": "smallest residual must exceed threshold" }),
            )
        },
    ]
}

fn canonicalization(cfg: &RunConfig) -> Suite {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed ^ 0xCA70);
    let mut worst = 0.0f64;
    let mut transcripts = Vec::new();
    for i in 0..cfg.samples.min(100).max(1) {
        let theta: f64 = rng.random_range(0.05..1.5);
        let phi: f64 = rng.random_range(-3.0..3.0);
        let beta3: f64 = rng.random_range(-1.0..1.0);
        let kinv = cfg.kappa_inv.value().unwrap_or_else(|| rng.random_range(0.2..2.0));
        let eta = match cfg.lambda.value() {
            Some(l) if l < 0.0 => (-l).sqrt(),
            _ => rng.random_range(0.2..2.0),
        };
        let (ct, st, cp, sp) = (theta.cos(), theta.sin(), phi.cos(), phi.sin());
        let alpha = sphere_param(&ct, &st, &cp, &sp, &(eta * kinv));
        let beta = twisted_beta(&ct, &st, &cp, &sp, &(beta3 / ct));
        let dev = match canonicalize(&alpha, &beta, kinv, eta) {
            Ok(c) => {
                let d = c.r.sub(&r_lambda_twisted(&kinv, &eta, &(-beta3 / ct))).norm().max((c.vartheta + beta3 / ct).abs());
                if i < 3 {
                    transcripts.push(json!({
                        "theta": theta, "phi": phi, "beta3": beta3, "kappa_inv": kinv, "eta": eta,
                        "recovered_theta": c.theta, "recovered_phi": c.phi, "vartheta": c.vartheta,
                        "rotation": c.rotation, "deviation": d,
                    }));
                }
                d
            }
            Err(_) => f64::NAN,
        };
        worst = if dev.is_nan() { f64::NAN } else { worst.max(dev) };
    }
    Suite::numeric(
        "rotation to canonical form",
        "canonicalization-numeric",
        worst,
        cfg.tolerance.min(1e-12),
        json!({ "samples": cfg.samples.min(100).max(1), "transcripts": transcripts }),
    )
}

pub fn run(cfg: &RunConfig) -> Vec<Suite> {
    let mut out = Vec::new();
    let fam = impose_primitivity(&generic_ansatz(), &ads_formal(), &LieElement::basis(DIM, P0));
    out.push(Suite::check(
        "primitivity of P0 on the generic ansatz",
        "primitivity",
        fam.dimension() == 15 && fam.relations.is_empty(),
        json!({ "free_parameters": fam.dimension() }),
    ));

    let mut found = constraint_residuals().unwrap_or_default();
    let mut expected = expected_constraints();
    if cfg.inject_fault {
        expected[0] = &expected[0] + &Scalar::param(Param::alpha(1));
    }
    found.retain(|c| !c.is_zero());
    let left = remainders(&found, &expected).iter().filter(|r| !r.is_zero()).count();
    let right = remainders(&expected, &found).iter().filter(|r| !r.is_zero()).count();
    out.push(Suite::exact(
        "mCYBE ideal of the six-parameter family",
        "constraint-ideal",
        left + right,
        json!({
            "constraints": expected.iter().map(|c| c.to_string()).collect::<Vec<_>>(),
            "mcybe_components": found.len(),
            "mutually_reduce": mutually_reduce(&found, &expected),
        }),
    ));
    out.extend(falsification(cfg));

    let canonical = canonicalize_formal();
    let target = r_lambda_twisted(&Scalar::param(Param::KAPPA_INV), &Scalar::param(Param::ETA), &-Scalar::param(Param::TWIST_SCALE));
    let diff = canonical.as_ref().map(|c| c.sub(&target).len()).unwrap_or(1);
    out.push(Suite::exact(
        "symbolic rotation to canonical form",
        "canonicalization-formal",
        diff,
        json!({ "vartheta": "-t" }),
    ));
    out.push(canonicalization(cfg));
    out
}
