pub mod bialgebra;
pub mod classify;
pub mod export;
pub mod nc;
pub mod poisson;
