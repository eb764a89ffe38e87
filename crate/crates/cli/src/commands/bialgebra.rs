use kads_core::bialgebra::{cocommutator, coisotropy_check, dual_jacobi_residual, mcybe_components, mcybe_residual, Bivector};
use kads_core::liealg::{ads_algebra, ads_formal, k, p, LieAlgebra, LORENTZ};
use kads_core::rclass::{eta_algebra, kappa_ads_cocommutator, mcybe_2plus1, r0, r0_twisted, r_lambda, r_lambda_twisted};
use kads_core::scalars::{rational_from_f64, Monomial};
use kads_core::{Coeff, Param, ParamValues, Scalar};
use serde_json::json;

use crate::config::{ParamArg, RunConfig};
use crate::report::Suite;

/// Adds a `K1∧P2` term, which no κ-type r-matrix carries.
fn corrupt<C: Coeff>(r: Bivector<C>, on: bool) -> Bivector<C> {
    let mut r = r;
    if on {
        r.add_wedge(k(1), p(2), &C::one());
    }
    r
}

fn formal_or(arg: ParamArg, p: Param) -> Scalar {
    match arg {
        ParamArg::Formal => Scalar::param(p),
        ParamArg::Value(v) => Scalar::from_rational(rational_from_f64(v).expect("validated finite")),
    }
}

struct Checks {
    exact: bool,
    tol: f64,
}

impl Checks {
    fn suite(&self, name: String, tag: &str, residual: f64, detail: serde_json::Value) -> Suite {
        if self.exact {
            Suite::exact(name, tag, residual as usize, detail)
        } else {
            Suite::numeric(name, tag, residual, self.tol, detail)
        }
    }

    fn run<C: Coeff>(
        &self,
        label: &str,
        g: &LieAlgebra<C>,
        r: &Bivector<C>,
        expected: Option<kads_core::bialgebra::CocommutatorTable<C>>,
    ) -> Vec<Suite> {
        let mut out = Vec::new();
        let delta = cocommutator(g, r);
        if let Some(want) = expected {
            let mut worst = 0.0f64;
            let mut at = None;
            for (i, (got, w)) in delta.values.iter().zip(&want.values).enumerate() {
                let diff = got.sub(w);
                let size = if self.exact { diff.len() as f64 } else { diff.norm() };
                if size > worst {
                    worst = size;
                    at = Some(delta.labels[i].clone());
                }
            }
            out.push(self.suite(format!("{label}: cocommutator table"), "cocommutator-table", worst, json!({ "worst_generator": at })));
        }
        match mcybe_residual(g, r) {
            Ok(res) => out.push(self.suite(format!("{label}: mCYBE"), "mcybe", res.norm, json!({ "worst_generator": res.worst }))),
            Err(e) => out.push(Suite::check(format!("{label}: mCYBE"), "mcybe", false, json!({ "error": e.to_string() }))),
        }
        let dj = dual_jacobi_residual(&delta);
        out.push(self.suite(format!("{label}: dual Jacobi"), "dual-jacobi", dj.norm, json!({ "worst_triple": dj.worst })));
        let co = coisotropy_check(g, &delta, &LORENTZ).unwrap_or(false);
        out.push(Suite::check(format!("{label}: Lorentz coisotropy"), "coisotropy-lorentz", co, serde_json::Value::Null));
        out
    }
}

/// Value of a polynomial in `η` at `η² = −Λ`, split as `A + ηB`; for `Λ > 0`
/// the root is imaginary, so the polynomial vanishes iff `A = B = 0`.
fn parity_residual(s: &Scalar, values: &ParamValues, lambda: f64) -> f64 {
    let (mut even, mut odd) = (0.0, 0.0);
    for (m, c) in s.terms() {
        let e = m.degree_in(Param::ETA);
        let rest = Monomial::from_pairs(m.factors().iter().copied().filter(|(q, _)| *q != Param::ETA));
        let v = Scalar::term(c.clone(), rest).eval_numeric(values).unwrap_or(f64::NAN) * (-lambda).powi(i32::from(e / 2));
        if e % 2 == 0 {
            even += v;
        } else {
            odd += v;
        }
    }
    even.abs().max(odd.abs())
}

fn parity_mcybe(label: &str, r: &Bivector<Scalar>, values: &ParamValues, lambda: f64, tol: f64) -> Suite {
    let comps = mcybe_components(&eta_algebra(), r).expect("antisymmetric");
    let worst = comps
        .iter()
        .flat_map(|t| t.components().values())
        .map(|c| parity_residual(c, values, lambda))
        .fold(0.0, f64::max);
    Suite::numeric(format!("{label}: mCYBE at η² = −Λ"), "mcybe", worst, tol, json!({ "route": "formal residual evaluated at eta^2 = -lambda" }))
}

pub fn run(cfg: &RunConfig) -> Vec<Suite> {
    let fault = cfg.inject_fault;
    let mut out = Vec::new();
    match cfg.lambda {
        ParamArg::Formal => {
            let checks = Checks { exact: true, tol: cfg.tolerance };
            let kinv = formal_or(cfg.kappa_inv, Param::KAPPA_INV);
            let twist = formal_or(cfg.twist, Param::VARTHETA);
            let eta = Scalar::param(Param::ETA);
            let flat = ads_algebra(Scalar::zero());
            let g = eta_algebra();
            out.extend(checks.run("kappa-Poincare r0", &flat, &corrupt(r0(&kinv), fault), Some(kappa_ads_cocommutator(&kinv, &Scalar::zero()))));
            out.extend(checks.run("twisted kappa-Poincare", &flat, &r0_twisted(&kinv, &twist), None));
            out.extend(checks.run("kappa-AdS r", &g, &corrupt(r_lambda(&kinv, &eta), fault), Some(kappa_ads_cocommutator(&kinv, &eta))));
            out.extend(checks.run("twisted kappa-AdS r", &g, &r_lambda_twisted(&kinv, &eta, &twist), None));
            out.push(two_plus_one_exact(&kinv));
        }
        ParamArg::Value(lambda) => {
            let checks = Checks { exact: false, tol: cfg.tolerance };
            let (kinv, twist) = (cfg.kinv(), cfg.twist_value());
            let g = ads_algebra(lambda);
            if lambda == 0.0 {
                out.extend(checks.run("kappa-Poincare r0", &g, &corrupt(r0(&kinv), fault), Some(kappa_ads_cocommutator(&kinv, &0.0))));
                out.extend(checks.run("twisted kappa-Poincare", &g, &r0_twisted(&kinv, &twist), None));
            } else {
                if lambda < 0.0 {
                    let eta = (-lambda).sqrt();
                    out.extend(checks.run("kappa-AdS r", &g, &corrupt(r_lambda(&kinv, &eta), fault), Some(kappa_ads_cocommutator(&kinv, &eta))));
                    out.extend(checks.run("twisted kappa-AdS r", &g, &r_lambda_twisted(&kinv, &eta, &twist), None));
                }
                let values: ParamValues = [(Param::KAPPA_INV, kinv), (Param::VARTHETA, twist)].into_iter().collect();
                let (ks, es, ts) = (Scalar::param(Param::KAPPA_INV), Scalar::param(Param::ETA), Scalar::param(Param::VARTHETA));
                out.push(parity_mcybe("kappa-AdS r", &corrupt(r_lambda(&ks, &es), fault), &values, lambda, cfg.tolerance));
                out.push(parity_mcybe("twisted kappa-AdS r", &r_lambda_twisted(&ks, &es, &ts), &values, lambda, cfg.tolerance));
            }
            let res = mcybe_2plus1(&g, &kinv).map(|r| r.norm).unwrap_or(f64::NAN);
            out.push(Suite::numeric("(2+1) r-matrix: mCYBE on the subalgebra", "mcybe-2plus1", res, cfg.tolerance, serde_json::Value::Null));
        }
    }
    out
}

fn two_plus_one_exact(kinv: &Scalar) -> Suite {
    match mcybe_2plus1(&ads_formal(), kinv) {
        Ok(r) => Suite::exact("(2+1) r-matrix: mCYBE on the subalgebra", "mcybe-2plus1", r.norm as usize, json!({ "worst_generator": r.worst })),
        Err(e) => Suite::check("(2+1) r-matrix: mCYBE on the subalgebra", "mcybe-2plus1", false, json!({ "error": e.to_string() })),
    }
}
