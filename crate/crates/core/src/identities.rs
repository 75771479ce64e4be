//! Base-structure predicates: antisymmetry, Jacobi, the Jordan triple
//! identities, and exact tensor/operator comparisons.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::check::{exhaustive, CheckReport};
use crate::operator::Operator;
use crate::structure::{BilinearStructure, TrilinearStructure};
use crate::vector::Vector;

/// Which five-variable identity a triple system is validated against.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum JtsVariant {
    /// `<x,<a,z,b>,y> = <<x,a,y>,b,z> + <<y,a,z>,b,x> - <<x,b,y>,a,z>`
    Paper,
    /// `<a,b,<x,y,z>> = <<a,b,x>,y,z> - <x,<b,a,y>,z> + <x,y,<a,b,z>>`
    Jacobson,
}

impl JtsVariant {
    pub const ALL: [JtsVariant; 2] = [JtsVariant::Jacobson, JtsVariant::Paper];

    pub fn name(self) -> &'static str {
        match self {
            JtsVariant::Paper => "paper",
            JtsVariant::Jacobson => "jacobson",
        }
    }
}

impl fmt::Display for JtsVariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for JtsVariant {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "paper" => Ok(JtsVariant::Paper),
            "jacobson" => Ok(JtsVariant::Jacobson),
            other => Err(format!("unknown JTS variant {other:?} (expected paper or jacobson)")),
        }
    }
}

pub(crate) fn e(dim: usize, i: usize) -> Vector {
    Vector::basis(dim, i)
}

pub fn check_antisymmetry(b: &BilinearStructure) -> CheckReport {
    exhaustive("antisymmetry", b.dim(), &["X", "Y"], |t| {
        b.basis_product(t[0], t[1]) + b.basis_product(t[1], t[0])
    })
}

/// `[[X,Y],Z] + [[Y,Z],X] + [[Z,X],Y] = 0`
pub fn check_jacobi(b: &BilinearStructure) -> CheckReport {
    let n = b.dim();
    exhaustive("jacobi", n, &["X", "Y", "Z"], |t| {
        let (x, y, z) = (t[0], t[1], t[2]);
        b.eval(&b.basis_product(x, y), &e(n, z))
            + b.eval(&b.basis_product(y, z), &e(n, x))
            + b.eval(&b.basis_product(z, x), &e(n, y))
    })
}

/// Antisymmetry and Jacobi together.
pub fn check_lie(b: &BilinearStructure) -> CheckReport {
    CheckReport::aggregate("lie", vec![check_antisymmetry(b), check_jacobi(b)], vec![])
}

/// Checks the chosen five-variable identity on all `dim^5` basis tuples,
/// variables ordered `(a, b, x, y, z)`.
pub fn check_jts_identity(t: &TrilinearStructure, variant: JtsVariant) -> CheckReport {
    let n = t.dim();
    let name = format!("jts-identity[{variant}]");
    let vars = ["a", "b", "x", "y", "z"];
    match variant {
        JtsVariant::Paper => exhaustive(name, n, &vars, |v| {
            let (a, b, x, y, z) = (v[0], v[1], v[2], v[3], v[4]);
            let lhs = t.eval(&e(n, x), &t.basis_product(a, z, b), &e(n, y));
            let rhs = t.eval(&t.basis_product(x, a, y), &e(n, b), &e(n, z))
                + t.eval(&t.basis_product(y, a, z), &e(n, b), &e(n, x))
                - t.eval(&t.basis_product(x, b, y), &e(n, a), &e(n, z));
            lhs - rhs
        }),
        JtsVariant::Jacobson => exhaustive(name, n, &vars, |v| {
            let (a, b, x, y, z) = (v[0], v[1], v[2], v[3], v[4]);
            let lhs = t.eval(&e(n, a), &e(n, b), &t.basis_product(x, y, z));
            let rhs = t.eval(&t.basis_product(a, b, x), &e(n, y), &e(n, z))
                - t.eval(&e(n, x), &t.basis_product(b, a, y), &e(n, z))
                + t.eval(&e(n, x), &e(n, y), &t.basis_product(a, b, z));
            lhs - rhs
        }),
    }
}

/// Exact equality of two bracket tensors, reported pairwise.
pub fn check_bilinear_equal(
    name: impl Into<String>,
    left: &BilinearStructure,
    right: &BilinearStructure,
) -> CheckReport {
    exhaustive(name, left.dim(), &["X", "Y"], |t| {
        left.basis_product(t[0], t[1]) - right.basis_product(t[0], t[1])
    })
}

pub fn check_trilinear_equal(
    name: impl Into<String>,
    left: &TrilinearStructure,
    right: &TrilinearStructure,
) -> CheckReport {
    exhaustive(name, left.dim(), &["X", "Y", "Z"], |t| {
        left.basis_product(t[0], t[1], t[2]) - right.basis_product(t[0], t[1], t[2])
    })
}

pub fn check_operator_equal(name: impl Into<String>, left: &Operator, right: &Operator) -> CheckReport {
    exhaustive(name, left.dim(), &["X"], |t| left.column(t[0]) - right.column(t[0]))
}

/// `A B = B A`, column by column.
pub fn check_commute(name: impl Into<String>, a: &Operator, b: &Operator) -> CheckReport {
    let ab = a * b;
    let ba = b * a;
    check_operator_equal(name, &ab, &ba)
}

/// `D[X,Y] = [DX,Y] + [X,DY]`
pub fn check_derivation(name: impl Into<String>, b: &BilinearStructure, d: &Operator) -> CheckReport {
    let n = b.dim();
    exhaustive(name, n, &["X", "Y"], |t| {
        let (x, y) = (e(n, t[0]), e(n, t[1]));
        d.eval(&b.eval(&x, &y)) - b.eval(&d.eval(&x), &y) - b.eval(&x, &d.eval(&y))
    })
}
