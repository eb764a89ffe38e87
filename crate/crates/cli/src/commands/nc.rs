use std::collections::BTreeMap;

use kads_core::ncalg::builtins::{
    all, ambient_kappa_ads, ambient_kappa_ads_alt_order, displayed_sphere_s0, displayed_sphere_s4, first_order_kappa_ads,
    first_order_kappa_ads_alt_order, kappa_minkowski, pseudosphere_casimir, quantum_sphere, quantum_sphere_casimir,
    sphere_casimir, twisted_kappa_minkowski,
};
use kads_core::ncalg::{Certificate, Generator, NCAlgebra, NCError, NCPoly};
use kads_core::sklyanin::poly::{self, PolyPoisson};
use kads_core::{Param, Scalar};
use serde_json::json;

use crate::report::Suite;

const ALT_TRUNCATION: u16 = 3;

fn failures(certs: &[Certificate]) -> Vec<&Certificate> {
    certs.iter().filter(|c| !c.zero).collect()
}

fn certificate_suite(name: String, tag: &str, certs: Result<Vec<Certificate>, NCError>) -> Suite {
    match certs {
        Ok(c) => {
            let bad = failures(&c);
            Suite::exact(name, tag, bad.len(), json!({ "checked": c.len(), "failures": bad }))
        }
        Err(e) => Suite::check(name, tag, false, json!({ "error": e.to_string() })),
    }
}

fn rebuild(a: &NCAlgebra, name: &str, edit: impl Fn(&str, &str, NCPoly) -> NCPoly) -> NCAlgebra {
    let gens: Vec<Generator> = a.names.iter().zip(&a.params).zip(&a.weights).map(|((n, p), w)| Generator::new(n, *p, *w)).collect();
    let mut rels = Vec::new();
    for i in 0..a.len() as u8 {
        for j in 0..i {
            if let Some(r) = a.relation(i, j) {
                let (x, y) = (a.names[i as usize].as_str(), a.names[j as usize].as_str());
                rels.push((x, y, edit(x, y, r.clone())));
            }
        }
    }
    NCAlgebra::new(name, &gens, rels, a.truncation).expect("edited relations keep the order")
}

/// Flips the sign of `[s1, s2]`.
fn corrupted_ambient() -> NCAlgebra {
    rebuild(&ambient_kappa_ads(), "ambient kappa-AdS", |x, y, r| if (x, y) == ("s2", "s1") { r.scale(&Scalar::from_int(-1)) } else { r })
}

fn algebras(fault: bool) -> Vec<NCAlgebra> {
    let mut v = all();
    if fault {
        let last = v.len() - 1;
        v[last] = corrupted_ambient();
    }
    v
}

fn casimir_suites(fault: bool) -> Vec<Suite> {
    let a = if fault { corrupted_ambient() } else { ambient_kappa_ads() };
    let five = ["s0", "s1", "s2", "s3", "s4"];
    let mut out = Vec::new();
    let q = quantum_sphere();
    out.push(certificate_suite(
        "quantum sphere Casimir is central".into(),
        "casimir-quantum-sphere",
        q.casimir_check(&quantum_sphere_casimir(&q), &["x1", "x2", "x3"]),
    ));
    let s = sphere_casimir(&a, 's');
    out.push(certificate_suite("sphere Casimir commutes with s1, s2, s3".into(), "casimir-sphere-space", a.casimir_check(&s, &["s1", "s2", "s3"])));
    let pattern = a.casimir_check(&s, &five).map(|c| c.iter().filter(|c| c.zero).map(|c| c.generators[0].clone()).collect::<Vec<_>>());
    out.push(Suite::check(
        "sphere Casimir is central exactly on the space sector",
        "casimir-sphere-pattern",
        pattern.as_deref().map(|p| p == ["s1", "s2", "s3"]).unwrap_or(false),
        json!({ "commutes_with": pattern.unwrap_or_default() }),
    ));
    let sig = pseudosphere_casimir(&a);
    out.push(certificate_suite("pseudosphere Casimir is central".into(), "casimir-pseudosphere", a.casimir_check(&sig, &five)));
    let ss = a.commutator(&sig, &s).map(|c| c.num_terms()).unwrap_or(1);
    out.push(Suite::exact("pseudosphere and sphere Casimirs commute", "casimir-commute", ss, serde_json::Value::Null));
    for (gen, shown, tag) in [("s0", displayed_sphere_s0(&a), "sphere-bracket-s0"), ("s4", displayed_sphere_s4(&a), "sphere-bracket-s4")] {
        let got = a.gen(gen).and_then(|g| a.commutator(&s, &g));
        let want = a.normal_form(&shown);
        let diff = match (&got, &want) {
            (Ok(g), Ok(w)) => g.sub(w).num_terms(),
            _ => 1,
        };
        out.push(Suite::exact(
            format!("[sphere Casimir, {gen}] in closed form"),
            tag,
            diff,
            json!({ "bracket": got.map(|p| a.render(&p)).unwrap_or_default() }),
        ));
    }
    out
}

fn limit_suites() -> Vec<Suite> {
    let zero: BTreeMap<Param, Scalar> = [(Param::ETA, Scalar::zero())].into_iter().collect();
    let mut out = Vec::new();
    let mut diff = |name: &str, a: NCAlgebra, b: &NCAlgebra| {
        let same = a.substitute(&zero).map(|s| s.same_relations(b)).unwrap_or(false);
        out.push(Suite::check(format!("η → 0 of {name}"), "eta-zero-limit", same, serde_json::Value::Null));
    };
    diff("first-order kappa-AdS", first_order_kappa_ads(), &kappa_minkowski());
    diff("kappa-Minkowski", kappa_minkowski(), &kappa_minkowski());
    diff("twisted kappa-Minkowski", twisted_kappa_minkowski(), &twisted_kappa_minkowski());
    let q = quantum_sphere();
    diff("quantum sphere", q.clone(), &rebuild(&q, "commutative", |_, _, _| NCPoly::zero()));
    let amb = ambient_kappa_ads();
    let flat = rebuild(&amb, "flat ambient", |x, y, r| if x == "s0" && y != "s4" { r.substitute_zero_eta() } else { NCPoly::zero() });
    diff("ambient kappa-AdS", amb, &flat);
    out
}

trait ZeroEta {
    fn substitute_zero_eta(&self) -> NCPoly;
}

impl ZeroEta for NCPoly {
    fn substitute_zero_eta(&self) -> NCPoly {
        self.map_coeffs(|c| c.substitute_one(Param::ETA, &Scalar::zero())).expect("polynomial substitution")
    }
}

fn semiclassical(a: &NCAlgebra, table: &PolyPoisson) -> usize {
    let pos = |p: Param| table.coords.iter().position(|c| *c == p);
    let mut bad = 0;
    for i in 0..a.len() {
        for j in 0..a.len() {
            let (Some(pi), Some(pj)) = (pos(a.params[i]), pos(a.params[j])) else {
                bad += 1;
                continue;
            };
            let got = a.semiclassical_bracket(&NCPoly::word(&[i as u8]), &NCPoly::word(&[j as u8]));
            if got.as_ref() != Ok(&table.get(pi, pj)) {
                bad += 1;
            }
        }
    }
    bad
}

pub fn run(cfg: &crate::config::RunConfig) -> Vec<Suite> {
    let mut out = Vec::new();
    for a in algebras(cfg.inject_fault) {
        out.push(certificate_suite(format!("Jacobi identity: {}", a.name), "nc-jacobi", a.jacobi_certificate()));
        out.push(certificate_suite(format!("overlap confluence: {}", a.name), "nc-overlap", a.overlap_certificate()));
    }
    for alt in [first_order_kappa_ads_alt_order(ALT_TRUNCATION), ambient_kappa_ads_alt_order(ALT_TRUNCATION)] {
        match alt {
            Ok(a) => {
                let name = format!("{} modulo kinv^{}", a.name, ALT_TRUNCATION + 1);
                out.push(certificate_suite(format!("Jacobi identity: {name}"), "nc-jacobi-truncated", a.jacobi_certificate()));
                out.push(certificate_suite(format!("overlap confluence: {name}"), "nc-overlap-truncated", a.overlap_certificate()));
            }
            Err(e) => out.push(Suite::check("alternate normal order", "nc-jacobi-truncated", false, json!({ "error": e.to_string() }))),
        }
    }
    out.extend(casimir_suites(cfg.inject_fault));
    out.extend(limit_suites());
    for (a, table) in [
        (kappa_minkowski(), poly::minkowski(false)),
        (twisted_kappa_minkowski(), poly::minkowski(true)),
        (first_order_kappa_ads(), poly::first_order()),
        (quantum_sphere(), poly::quadratic_sphere()),
        (ambient_kappa_ads(), poly::ambient()),
    ] {
        out.push(Suite::exact(format!("semiclassical limit: {}", a.name), "semiclassical", semiclassical(&a, &table), serde_json::Value::Null));
    }
    out
}
