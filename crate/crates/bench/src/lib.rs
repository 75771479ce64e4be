//! Fixtures shared by the benchmarks.

use myb_core::catalog::{default_q, lookup, mult_operators, CatalogEntry};
use myb_core::rrho::{build_bunch, QuadraticBunch, RRhoAlgebra};

/// Catalog entry by name; panics on a bad name since names here are fixed.
pub fn entry(name: &str) -> CatalogEntry {
    lookup(name).unwrap_or_else(|e| panic!("{name}: {e}"))
}

/// The bunch of `so(n)` with `R = QX + XQ`, `rho = QXQ`, `Q = diag(1..n)`.
pub fn so_bunch(n: usize) -> QuadraticBunch {
    let base = entry(&format!("so{n}"));
    let ops = mult_operators(&base, &default_q(n)).expect("diagonal Q is symmetric");
    let a = RRhoAlgebra::new(base.bracket.expect("so(n) has a bracket"), ops.sum, ops.rho).expect("so(n) is Lie");
    build_bunch(&a)
}
