#![allow(dead_code)]

use kads_core::scalars::{Param, Scalar};
use nalgebra::DMatrix;

pub fn eta() -> Scalar {
    Scalar::param(Param::ETA)
}

pub fn kinv() -> Scalar {
    Scalar::param(Param::KAPPA_INV)
}

pub fn int(n: i64) -> Scalar {
    Scalar::from_int(n)
}

/// 5×5 matrix of a basis generator in the defining representation on
/// ambient space (rows/columns ordered s⁴, s⁰, s¹, s², s³).
pub fn rho(i: usize, lambda: f64) -> DMatrix<f64> {
    let mut m = DMatrix::zeros(5, 5);
    match i {
        0 => {
            m[(0, 1)] = lambda;
            m[(1, 0)] = 1.0;
        }
        1..=3 => {
            m[(0, i + 1)] = -lambda;
            m[(i + 1, 0)] = 1.0;
        }
        4..=6 => {
            let a = i - 3;
            m[(1, a + 1)] = 1.0;
            m[(a + 1, 1)] = 1.0;
        }
        7 => {
            m[(3, 4)] = -1.0;
            m[(4, 3)] = 1.0;
        }
        8 => {
            m[(2, 4)] = 1.0;
            m[(4, 2)] = -1.0;
        }
        9 => {
            m[(2, 3)] = -1.0;
            m[(3, 2)] = 1.0;
        }
        _ => panic!("generator index {i}"),
    }
    m
}
