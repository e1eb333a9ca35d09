#![allow(dead_code)]

use std::sync::Arc;

use qalg_core::qalgebra::{build_algebra, Path, Quiver, Relation};
use qalg_core::{BoundQuiverAlgebra, Field};

pub const Q: Field = Field::Rational;

pub fn linear(n: usize) -> Arc<BoundQuiverAlgebra> {
    let edges: Vec<(usize, usize)> = (0..n.saturating_sub(1)).map(|i| (i, i + 1)).collect();
    build_algebra(Q, Quiver::from_edges(n, &edges).unwrap(), vec![], 32).unwrap()
}

pub fn nilpotent(n: usize) -> Arc<BoundQuiverAlgebra> {
    let q = Quiver::from_edges(1, &[(0, 0)]).unwrap();
    let rel = Relation::zero_path(Q, Path::from_arrows(&q, vec![0; n]).unwrap()).unwrap();
    build_algebra(Q, q, vec![rel], 32).unwrap()
}

pub fn kronecker() -> Arc<BoundQuiverAlgebra> {
    build_algebra(Q, Quiver::from_edges(2, &[(0, 1), (0, 1)]).unwrap(), vec![], 32).unwrap()
}
