//! Lie algebras with a pair of operators `(R, rho)` and quadratic families of
//! brackets `[.,.]_t = b0 + t b1 + t^2 b2` with maps `R_t = r0 + t r1 + t^2 r2`.
//!
//! Expanding `R_t[X,Y]_t - [R_t X, R_t Y]` in `t` (with `r0 = 1`) gives:
//!
//! | degree | vanishing coefficient means                                   |
//! |--------|----------------------------------------------------------------|
//! | 0      | nothing (identically zero)                                     |
//! | 1      | `b1` is the derived bracket of `r1`                            |
//! | 2      | `b2` is the quadratic bracket of `(r1, r2)`                    |
//! | 3      | `R[X,Y]_rho + rho[X,Y]_R = [RX,rho Y] + [rho X,RY]`            |
//! | 4      | `rho[X,Y]_rho = [rho X, rho Y]`                                |
//!
//! so homomorphic quadratic families and Rρ-algebras determine each other.

use crate::check::{exhaustive, CheckReport};
use crate::error::Error;
use crate::identities::{check_antisymmetry, check_bilinear_equal, check_operator_equal, e};
use crate::lie::{check_bi_myb, check_even_tempered, derived_bracket, validate_lie, LieBiOperator};
use crate::operator::Operator;
use crate::scalar::{self, Scalar};
use crate::structure::BilinearStructure;
use crate::vector::Vector;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RRhoAlgebra {
    bracket: BilinearStructure,
    r: Operator,
    rho: Operator,
}

impl RRhoAlgebra {
    pub fn new(bracket: BilinearStructure, r: Operator, rho: Operator) -> Result<Self, Error> {
        for op in [&r, &rho] {
            if op.dim() != bracket.dim() {
                return Err(Error::DimensionMismatch {
                    expected: bracket.dim(),
                    found: op.dim(),
                });
            }
        }
        validate_lie(&bracket)?;
        Ok(RRhoAlgebra { bracket, r, rho })
    }

    pub fn bracket(&self) -> &BilinearStructure {
        &self.bracket
    }

    pub fn r(&self) -> &Operator {
        &self.r
    }

    pub fn rho(&self) -> &Operator {
        &self.rho
    }

    pub fn dim(&self) -> usize {
        self.bracket.dim()
    }
}

/// `[X,Y]_rho = [rho X,Y] + [X,rho Y] - rho[X,Y] + [RX,RY] - R[X,Y]_R`
pub fn quadratic_bracket(b: &BilinearStructure, r: &Operator, rho: &Operator) -> BilinearStructure {
    let n = b.dim();
    let br = derived_bracket(b, r);
    BilinearStructure::from_fn(n, |i, j| {
        let (x, y) = (e(n, i), e(n, j));
        b.eval(&rho.column(i), &y) + b.eval(&x, &rho.column(j)) - rho.eval(&b.basis_product(i, j))
            + b.eval(&r.column(i), &r.column(j))
            - r.eval(&br.basis_product(i, j))
    })
}

pub fn bracket_rho(a: &RRhoAlgebra) -> BilinearStructure {
    quadratic_bracket(&a.bracket, &a.r, &a.rho)
}

/// The two defining identities (asserted) and the regular condition
/// `R[X,Y]_R = 2([rho X,Y] + [X,rho Y])` (informational).
pub fn check_rrho(a: &RRhoAlgebra) -> CheckReport {
    let n = a.dim();
    let (b, r, rho) = (&a.bracket, &a.r, &a.rho);
    let br = derived_bracket(b, r);
    let brho = quadratic_bracket(b, r, rho);
    let first = exhaustive("rrho/rho-homomorphism", n, &["X", "Y"], |t| {
        rho.eval(&brho.basis_product(t[0], t[1])) - b.eval(&rho.column(t[0]), &rho.column(t[1]))
    });
    let second = exhaustive("rrho/mixed", n, &["X", "Y"], |t| {
        let lhs = r.eval(&brho.basis_product(t[0], t[1])) + rho.eval(&br.basis_product(t[0], t[1]));
        let rhs = b.eval(&r.column(t[0]), &rho.column(t[1])) + b.eval(&rho.column(t[0]), &r.column(t[1]));
        lhs - rhs
    });
    let two = scalar::int(2);
    let regular = exhaustive("rrho/regular", n, &["X", "Y"], |t| {
        let (x, y) = (e(n, t[0]), e(n, t[1]));
        r.eval(&br.basis_product(t[0], t[1]))
            - (b.eval(&rho.column(t[0]), &y) + b.eval(&x, &rho.column(t[1]))).scaled(&two)
    });
    CheckReport::aggregate("rrho", vec![first, second], vec![regular])
}

/// `R = R1 + R2`, `rho = R1 R2` from an even-tempered bi-mYB algebra.
pub fn from_bi_myb(g: &LieBiOperator) -> Result<RRhoAlgebra, Error> {
    let bi = check_bi_myb(g);
    if !bi.passed {
        return Err(Error::precondition("from_bi_myb", bi));
    }
    let even = check_even_tempered(g);
    if !even.passed {
        return Err(Error::precondition("from_bi_myb", even));
    }
    Ok(RRhoAlgebra {
        bracket: g.bracket().clone(),
        r: g.r1() + g.r2(),
        rho: g.r1() * g.r2(),
    })
}

/// `[.,.]_t = b0 + t b1 + t^2 b2` together with `R_t = r0 + t r1 + t^2 r2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuadraticBunch {
    pub brackets: [BilinearStructure; 3],
    pub operators: [Operator; 3],
}

impl QuadraticBunch {
    /// Validates that `b0` is a Lie bracket and all dimensions agree.
    pub fn new(brackets: [BilinearStructure; 3], operators: [Operator; 3]) -> Result<Self, Error> {
        let n = brackets[0].dim();
        for d in brackets.iter().map(BilinearStructure::dim).chain(operators.iter().map(Operator::dim)) {
            if d != n {
                return Err(Error::DimensionMismatch { expected: n, found: d });
            }
        }
        validate_lie(&brackets[0])?;
        Ok(QuadraticBunch { brackets, operators })
    }

    pub fn dim(&self) -> usize {
        self.brackets[0].dim()
    }

    pub fn bracket_at(&self, t: &Scalar) -> BilinearStructure {
        let t2 = t * t;
        BilinearStructure::linear_combination(
            self.dim(),
            &[
                (scalar::one(), &self.brackets[0]),
                (t.clone(), &self.brackets[1]),
                (t2, &self.brackets[2]),
            ],
        )
    }

    pub fn operator_at(&self, t: &Scalar) -> Operator {
        let t2 = t * t;
        &(&self.operators[0] + &self.operators[1].scaled(t)) + &self.operators[2].scaled(&t2)
    }
}

/// `b1 = [.,.]_R`, `b2 = [.,.]_rho`, `R_t = 1 + t R + t^2 rho`.
pub fn build_bunch(a: &RRhoAlgebra) -> QuadraticBunch {
    QuadraticBunch {
        brackets: [a.bracket.clone(), derived_bracket(&a.bracket, &a.r), bracket_rho(a)],
        operators: [Operator::identity(a.dim()), a.r.clone(), a.rho.clone()],
    }
}

/// Homomorphism identity `R_t[X,Y]_t = [R_t X, R_t Y]` and the Jacobi
/// identity of `[.,.]_t`, each checked per power of `t` (degrees 0..=4),
/// plus antisymmetry of `b1` and `b2`.
pub fn check_gamma_bunch(q: &QuadraticBunch) -> CheckReport {
    let n = q.dim();
    let (b, r) = (&q.brackets, &q.operators);
    let mut subs = Vec::new();
    for degree in 0..=4usize {
        let pairs: Vec<(usize, usize)> = (0..=2)
            .flat_map(|a| (0..=2).map(move |c| (a, c)))
            .filter(|(a, c)| a + c == degree)
            .collect();
        subs.push(exhaustive(format!("gamma/homomorphism-degree-{degree}"), n, &["X", "Y"], |t| {
            let mut acc = Vector::zeros(n);
            for &(a, c) in &pairs {
                // r_a b_c(X,Y) - b0(r_a X, r_c Y)
                acc += &r[a].eval(&b[c].basis_product(t[0], t[1]));
                acc -= &b[0].eval(&r[a].column(t[0]), &r[c].column(t[1]));
            }
            acc
        }));
    }
    for degree in 0..=4usize {
        let pairs: Vec<(usize, usize)> = (0..=2)
            .flat_map(|a| (0..=2).map(move |c| (a, c)))
            .filter(|(a, c)| a + c == degree)
            .collect();
        subs.push(exhaustive(format!("gamma/jacobi-degree-{degree}"), n, &["X", "Y", "Z"], |t| {
            let (x, y, z) = (t[0], t[1], t[2]);
            let mut acc = Vector::zeros(n);
            for &(outer, inner) in &pairs {
                for (p, q2, s) in [(x, y, z), (y, z, x), (z, x, y)] {
                    acc += &b[outer].eval(&b[inner].basis_product(p, q2), &e(n, s));
                }
            }
            acc
        }));
    }
    for (k, name) in [(1, "gamma/antisymmetry-b1"), (2, "gamma/antisymmetry-b2")] {
        let mut rep = check_antisymmetry(&b[k]);
        rep.identity_name = name.into();
        subs.push(rep);
    }
    CheckReport::aggregate("gamma-bunch", subs, vec![])
}

/// Reads `R = r1`, `rho = r2` off a homomorphic bunch with `r0 = 1`, and
/// verifies `b1`, `b2` are the brackets rebuilt from them.
pub fn extract_rrho(q: &QuadraticBunch) -> Result<RRhoAlgebra, Error> {
    let n = q.dim();
    let unit = check_operator_equal("bunch/r0-is-identity", &q.operators[0], &Operator::identity(n));
    if !unit.passed {
        return Err(Error::precondition("extract_rrho", unit));
    }
    let gamma = check_gamma_bunch(q);
    if !gamma.passed {
        return Err(Error::precondition("extract_rrho", gamma));
    }
    let a = RRhoAlgebra {
        bracket: q.brackets[0].clone(),
        r: q.operators[1].clone(),
        rho: q.operators[2].clone(),
    };
    let coefficients = CheckReport::aggregate(
        "bunch/coefficients",
        vec![
            check_bilinear_equal("bunch/b1-is-derived-bracket", &q.brackets[1], &derived_bracket(&a.bracket, &a.r)),
            check_bilinear_equal("bunch/b2-is-quadratic-bracket", &q.brackets[2], &bracket_rho(&a)),
        ],
        vec![],
    );
    if !coefficients.passed {
        return Err(Error::Precondition {
            operation: "extract_rrho",
            detail: "bracket coefficients do not match the operator coefficients".into(),
            report: Some(Box::new(coefficients)),
        });
    }
    Ok(a)
}
