//! Exact and numeric toolkit for κ-deformed (anti-)de Sitter Lie bialgebras,
//! their Poisson homogeneous spacetimes and the quantized spacetime algebras.

pub mod bialgebra;
pub mod coeff;
pub mod group_geom;
pub mod liealg;
pub mod ncalg;
pub mod rclass;
pub mod scalars;
pub mod sklyanin;

pub use coeff::{Coeff, Residual};
pub use scalars::{Monomial, Param, ParamValues, RelationSet, Scalar, ScalarError};
