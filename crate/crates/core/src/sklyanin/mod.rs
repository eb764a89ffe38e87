//! The Sklyanin bracket on the (A)dS group and its projection to spacetime.
//!
//! `{f, g} = r^{ij} (X^L_i f X^L_j g − X^R_i f X^R_j g)` is evaluated with the
//! dual-number invariant fields of [`crate::group_geom`] and compared against
//! the closed-form tables in [`tables`].

pub mod poly;
pub mod tables;

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Serialize;

use crate::bialgebra::Bivector;
use crate::group_geom::{
    group_element, invariant_field, sample_points, AmbientCoord, GeomError, GroupFn, GroupPoint, LocalCoord, Mat5, Side,
};
use crate::liealg::DIM;
pub use tables::{BracketTable, TableKind, TableParams};

fn field_values<F: GroupFn>(side: Side, fns: &[F], h: &Mat5<f64>, lambda: f64) -> Result<Vec<[f64; DIM]>, GeomError> {
    fns.iter()
        .map(|f| {
            let mut row = [0.0; DIM];
            for (i, v) in row.iter_mut().enumerate() {
                *v = invariant_field(side, i, f, h, lambda)?;
            }
            Ok(row)
        })
        .collect()
}

/// Matrix of Sklyanin brackets `{f_a, f_b}` at `h`.
pub fn sklyanin_matrix<F: GroupFn>(r: &Bivector<f64>, fns: &[F], h: &Mat5<f64>, lambda: f64) -> Result<Vec<Vec<f64>>, GeomError> {
    let left = field_values(Side::Left, fns, h, lambda)?;
    let right = field_values(Side::Right, fns, h, lambda)?;
    let entries = r.tensor_entries();
    let n = fns.len();
    let mut out = vec![vec![0.0; n]; n];
    for a in 0..n {
        for b in 0..n {
            out[a][b] = entries
                .iter()
                .map(|(i, j, c)| c * (left[a][*i] * left[b][*j] - right[a][*i] * right[b][*j]))
                .sum();
        }
    }
    Ok(out)
}

pub fn sklyanin_bracket<F: GroupFn, G: GroupFn>(
    r: &Bivector<f64>,
    f: &F,
    g: &G,
    h: &Mat5<f64>,
    lambda: f64,
) -> Result<f64, GeomError> {
    let mut acc = 0.0;
    for (i, j, c) in r.tensor_entries() {
        let l = invariant_field(Side::Left, i, f, h, lambda)? * invariant_field(Side::Left, j, g, h, lambda)?;
        let rr = invariant_field(Side::Right, i, f, h, lambda)? * invariant_field(Side::Right, j, g, h, lambda)?;
        acc += c * (l - rr);
    }
    Ok(acc)
}

/// Outcome of comparing Sklyanin brackets with a closed-form table.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct VerifyReport {
    pub table: String,
    pub params: TableParams<f64>,
    pub samples: usize,
    pub seed: u64,
    /// Largest `|Sklyanin − table|` per bracket, keyed `{a,b}`.
    pub per_bracket: BTreeMap<String, f64>,
    pub max_deviation: f64,
    pub worst_point: Option<GroupPoint>,
    /// Largest change of the brackets when the Lorentz-sector coordinates are
    /// set to zero.
    pub lorentz_deviation: f64,
}

impl VerifyReport {
    pub fn passes(&self, tol: f64) -> bool {
        self.max_deviation <= tol && self.lorentz_deviation <= tol
    }
}

struct PointResult {
    point: GroupPoint,
    deviations: Vec<f64>,
    lorentz: f64,
}

fn coordinate_brackets(r: &Bivector<f64>, table: &BracketTable, h: &Mat5<f64>) -> Result<Vec<Vec<f64>>, GeomError> {
    let lambda = table.params.lambda;
    match table.kind {
        TableKind::Local => sklyanin_matrix(r, &(0..table.dim()).map(LocalCoord).collect::<Vec<_>>(), h, lambda),
        TableKind::Ambient => sklyanin_matrix(r, &(0..5).map(AmbientCoord).collect::<Vec<_>>(), h, lambda),
    }
}

/// Compares Sklyanin brackets of the table's coordinate functions with the
/// closed forms at `samples` seeded chart points. Projected tables are
/// sampled on `x3 = 0`.
pub fn verify_table(r: &Bivector<f64>, table: &BracketTable, samples: usize, seed: u64) -> Result<VerifyReport, GeomError> {
    let lambda = table.params.lambda;
    let mut points = sample_points(lambda, samples, seed);
    if table.projected {
        for p in &mut points {
            p.coords[3] = 0.0;
        }
    }
    let results: Vec<PointResult> = points
        .par_iter()
        .map(|p| {
            let h = group_element(p)?.m;
            let h0 = group_element(&GroupPoint::translation(p.local(), lambda))?.m;
            let sk = coordinate_brackets(r, table, &h)?;
            let sk0 = coordinate_brackets(r, table, &h0)?;
            let closed = table.matrix(&table.coords_of_local(&p.local()));
            let n = table.dim();
            let mut deviations = Vec::with_capacity(n * (n - 1) / 2);
            let mut lorentz: f64 = 0.0;
            for a in 0..n {
                for b in (a + 1)..n {
                    deviations.push((sk[a][b] - closed[a][b]).abs());
                    lorentz = lorentz.max((sk[a][b] - sk0[a][b]).abs());
                }
            }
            Ok(PointResult { point: *p, deviations, lorentz })
        })
        .collect::<Result<_, GeomError>>()?;

    let names = table.coords();
    let pairs: Vec<String> = (0..names.len())
        .flat_map(|a| ((a + 1)..names.len()).map(move |b| (a, b)))
        .map(|(a, b)| format!("{{{},{}}}", names[a], names[b]))
        .collect();
    let mut per_bracket: BTreeMap<String, f64> = pairs.iter().map(|k| (k.clone(), 0.0)).collect();
    let mut max_deviation: f64 = 0.0;
    let mut worst_point = None;
    let mut lorentz_deviation: f64 = 0.0;
    for res in &results {
        for (name, d) in pairs.iter().zip(&res.deviations) {
            let slot = per_bracket.get_mut(name).expect("every pair is keyed");
            *slot = slot.max(*d);
            if *d > max_deviation || d.is_nan() {
                max_deviation = *d;
                worst_point = Some(res.point);
            }
        }
        lorentz_deviation = lorentz_deviation.max(res.lorentz);
    }
    Ok(VerifyReport {
        table: table.name.clone(),
        params: table.params,
        samples,
        seed,
        per_bracket,
        max_deviation,
        worst_point,
        lorentz_deviation,
    })
}
