//! The quantum spacetime algebras: κ-Minkowski and its twisted form, the
//! quantum-sphere (su(2)-type) space sector, the first-order κ-(A)dS algebra
//! and the ambient κ-(A)dS algebra, all with formal `η`, `κ⁻¹`, `ϑ`.

use super::{Generator, NCAlgebra, NCError, NCPoly, Word};
use crate::scalars::{Param, Scalar};

fn kinv() -> Scalar {
    Scalar::param(Param::KAPPA_INV)
}

fn eta() -> Scalar {
    Scalar::param(Param::ETA)
}

/// `η κ⁻¹`.
fn ek() -> Scalar {
    eta() * kinv()
}

/// `η² κ⁻¹`.
fn e2k() -> Scalar {
    eta().pow(2) * kinv()
}

fn mono(a: &NCAlgebra, text: &str, c: Scalar) -> NCPoly {
    NCPoly::term(a.parse_word(text).expect("builtin generator"), c)
}

/// Normal order `x0 < x3 < x1 < x2`; every relation then lowers the
/// degree-lexicographic order.
fn local_gens(with_time: bool) -> Vec<Generator> {
    let mut g = Vec::new();
    if with_time {
        g.push(Generator::new("x0", Param::local(0), 1));
    }
    for a in [3, 1, 2] {
        g.push(Generator::new(&format!("x{a}"), Param::local(a), 1));
    }
    g
}

/// Skeleton used to build words before the relations are known.
fn skeleton(gens: &[Generator]) -> NCAlgebra {
    NCAlgebra::new("", gens, vec![], None).expect("no relations")
}

fn time_space(a: &NCAlgebra, twisted: bool) -> Vec<(&'static str, &'static str, NCPoly)> {
    let v = Scalar::param(Param::VARTHETA);
    let mut rel = vec![];
    for x in ["x1", "x2", "x3"] {
        let mut rhs = mono(a, x, -kinv());
        if twisted && x == "x1" {
            rhs = rhs.add(&mono(a, "x2", -v.clone()));
        }
        if twisted && x == "x2" {
            rhs = rhs.add(&mono(a, "x1", v.clone()));
        }
        rel.push(("x0", x, rhs));
    }
    rel
}

fn sphere_relations(a: &NCAlgebra, prefix: char) -> Vec<(&'static str, &'static str, NCPoly)> {
    let n = |i: usize| match (prefix, i) {
        ('x', 1) => "x1",
        ('x', 2) => "x2",
        ('x', 3) => "x3",
        ('s', 1) => "s1",
        ('s', 2) => "s2",
        ('s', 3) => "s3",
        _ => unreachable!(),
    };
    let w = |i: usize, j: usize| format!("{} {}", n(i), n(j));
    vec![
        (n(1), n(2), mono(a, &w(3, 3), -ek())),
        (n(1), n(3), mono(a, &w(3, 2), ek())),
        (n(2), n(3), mono(a, &w(1, 3), -ek())),
    ]
}

/// `[x0, xa] = −κ⁻¹ xa`.
pub fn kappa_minkowski() -> NCAlgebra {
    let gens = local_gens(true);
    let a = skeleton(&gens);
    NCAlgebra::new("kappa-Minkowski", &gens, time_space(&a, false), None).expect("valid relations")
}

/// `[x0, x1] = −κ⁻¹x1 − ϑx2`, `[x0, x2] = −κ⁻¹x2 + ϑx1`, `[x0, x3] = −κ⁻¹x3`.
pub fn twisted_kappa_minkowski() -> NCAlgebra {
    let gens = local_gens(true);
    let a = skeleton(&gens);
    NCAlgebra::new("twisted kappa-Minkowski", &gens, time_space(&a, true), None).expect("valid relations")
}

/// `[x1,x2] = −ηκ⁻¹ x3²`, `[x1,x3] = ηκ⁻¹ x3x2`, `[x2,x3] = −ηκ⁻¹ x1x3`.
pub fn quantum_sphere() -> NCAlgebra {
    let gens = local_gens(false);
    let a = skeleton(&gens);
    NCAlgebra::new("quantum sphere", &gens, sphere_relations(&a, 'x'), None).expect("valid relations")
}

/// κ-Minkowski time-space relations with the quantum-sphere space sector.
pub fn first_order_kappa_ads() -> NCAlgebra {
    let gens = local_gens(true);
    let a = skeleton(&gens);
    let mut rel = time_space(&a, false);
    rel.extend(sphere_relations(&a, 'x'));
    NCAlgebra::new("first-order kappa-AdS", &gens, rel, None).expect("valid relations")
}

/// Normal order `s3 < s1 < s2 < s0 < s4`; every relation then lowers the
/// degree-lexicographic order.
fn ambient_gens() -> Vec<Generator> {
    vec![
        Generator::new("s3", Param::ambient(3), 1),
        Generator::new("s1", Param::ambient(1), 1),
        Generator::new("s2", Param::ambient(2), 1),
        Generator::new("s0", Param::ambient(0), 1),
        Generator::new("s4", Param::ambient(4), 1),
    ]
}

/// `𝔰̂ = s1² + s2² + s3² + ηκ⁻¹ s1s2` (or the `x` version) as a normal
/// polynomial of `a`.
pub fn sphere_casimir(a: &NCAlgebra, prefix: char) -> NCPoly {
    let n = |i: u8| format!("{prefix}{i}");
    let mut p = NCPoly::zero();
    for i in 1..=3 {
        p = p.add(&mono(a, &format!("{} {}", n(i), n(i)), Scalar::one()));
    }
    p.add(&mono(a, &format!("{} {}", n(1), n(2)), ek()))
}

/// The ambient quantum algebra:
/// `[s0, sa] = −κ⁻¹ sa s4`, `[s4, sa] = η²κ⁻¹ s0 sa`, `[s0, s4] = −η²κ⁻¹ 𝔰̂`,
/// and the quantum-sphere relations among `s1, s2, s3`.
pub fn ambient_kappa_ads() -> NCAlgebra {
    let gens = ambient_gens();
    let a = skeleton(&gens);
    let mut rel = vec![];
    for s in ["s1", "s2", "s3"] {
        rel.push(("s0", s, mono(&a, &format!("{s} s4"), -kinv())));
        rel.push(("s4", s, mono(&a, &format!("s0 {s}"), e2k())));
    }
    rel.push(("s0", "s4", sphere_casimir(&a, 's').scale(&-e2k())));
    rel.extend(sphere_relations(&a, 's'));
    NCAlgebra::new("ambient kappa-AdS", &gens, rel, None).expect("valid relations")
}

/// `Σ̂ = s4² + η² s0² − η²κ⁻¹ s0s4 − η² 𝔰̂`.
pub fn pseudosphere_casimir(a: &NCAlgebra) -> NCPoly {
    let e2 = eta().pow(2);
    mono(a, "s4 s4", Scalar::one())
        .add(&mono(a, "s0 s0", e2.clone()))
        .add(&mono(a, "s0 s4", -e2k()))
        .add(&sphere_casimir(a, 's').scale(&-e2))
}

/// `Ŝ = x1² + x2² + x3² + ηκ⁻¹ x1x2` in the quantum-sphere algebra.
pub fn quantum_sphere_casimir(a: &NCAlgebra) -> NCPoly {
    sphere_casimir(a, 'x')
}

/// `[𝔰̂, s0]` as displayed: `κ⁻¹(s4𝔰̂ + 𝔰̂s4) − η²κ⁻² s0𝔰̂`, unreduced.
pub fn displayed_sphere_s0(a: &NCAlgebra) -> NCPoly {
    let s = sphere_casimir(a, 's');
    let (s0, s4) = (mono(a, "s0", Scalar::one()), mono(a, "s4", Scalar::one()));
    s4.concat(&s).add(&s.concat(&s4)).scale(&kinv()).sub(&s0.concat(&s).scale(&(eta().pow(2) * kinv().pow(2))))
}

/// `[𝔰̂, s4]` as displayed: `−η²κ⁻¹(s0𝔰̂ + 𝔰̂s0) + η²κ⁻² 𝔰̂s4`, unreduced.
pub fn displayed_sphere_s4(a: &NCAlgebra) -> NCPoly {
    let s = sphere_casimir(a, 's');
    let (s0, s4) = (mono(a, "s0", Scalar::one()), mono(a, "s4", Scalar::one()));
    s0.concat(&s).add(&s.concat(&s0)).scale(&-e2k()).add(&s.concat(&s4).scale(&(eta().pow(2) * kinv().pow(2))))
}

/// First-order algebra with normal order `x0 < x1 < x3 < x2`. The relation
/// `x1 x3 → x3 x1 + ηκ⁻¹ x3 x2` raises the order there, so rewriting only
/// terminates modulo `κ⁻ᴺ⁺¹`.
pub fn first_order_kappa_ads_alt_order(truncation: u16) -> Result<NCAlgebra, NCError> {
    first_order_kappa_ads().reordered(
        "first-order kappa-AdS (x0 x1 x3 x2)",
        &[("x0", 1), ("x1", 1), ("x3", 1), ("x2", 1)],
        Some(truncation),
    )
}

/// Ambient algebra with normal order `s0 < s1 < s3 < s2 < s4`, where
/// `s1 s3 → s3 s1 + ηκ⁻¹ s3 s2` raises the order; truncated at `κ⁻ᴺ`.
pub fn ambient_kappa_ads_alt_order(truncation: u16) -> Result<NCAlgebra, NCError> {
    ambient_kappa_ads().reordered(
        "ambient kappa-AdS (s0 s1 s3 s2 s4)",
        &[("s0", 1), ("s1", 1), ("s3", 1), ("s2", 1), ("s4", 1)],
        Some(truncation),
    )
}

pub fn all() -> Vec<NCAlgebra> {
    vec![kappa_minkowski(), twisted_kappa_minkowski(), first_order_kappa_ads(), quantum_sphere(), ambient_kappa_ads()]
}

/// Every normal word of the given length over `a`.
pub fn normal_words(a: &NCAlgebra, len: usize) -> Vec<Word> {
    fn rec(n: u8, len: usize, start: u8, cur: &mut Vec<u8>, out: &mut Vec<Word>) {
        if cur.len() == len {
            out.push(Word::new(cur));
            return;
        }
        for l in start..n {
            cur.push(l);
            rec(n, len, l, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(a.len() as u8, len, 0, &mut Vec::new(), &mut out);
    out
}

