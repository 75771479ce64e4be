//! Jordan triple systems with operators: designs on Lie algebras, triple mYB
//! systems, derived triples, bi-mYB triple systems and the rho-identity.

use serde::{Deserialize, Serialize};

use crate::check::{exhaustive, CheckReport};
use crate::error::Error;
use crate::identities::{check_commute, check_jts_identity, check_trilinear_equal, e, JtsVariant};
use crate::lie::validate_lie;
use crate::operator::Operator;
use crate::structure::{BilinearStructure, TrilinearStructure};
use crate::vector::Vector;

pub const UNVERIFIED_MARKER: &str = "base-JTS-unverified";

/// A triple product with an operator `R`, validated against a chosen JTS variant.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TripleWithOperator {
    triple: TrilinearStructure,
    r: Operator,
    variant: JtsVariant,
    verified: bool,
}

impl TripleWithOperator {
    pub fn new(triple: TrilinearStructure, r: Operator, variant: JtsVariant) -> Result<Self, Error> {
        if triple.dim() != r.dim() {
            return Err(Error::DimensionMismatch {
                expected: triple.dim(),
                found: r.dim(),
            });
        }
        let report = check_jts_identity(&triple, variant);
        if !report.passed {
            return Err(Error::InvalidBase {
                structure: "Jordan triple system",
                report: Box::new(report),
            });
        }
        Ok(TripleWithOperator {
            triple,
            r,
            variant,
            verified: true,
        })
    }

    /// Skips base validation; every report derived from this system carries
    /// the [`UNVERIFIED_MARKER`].
    pub fn new_unchecked(triple: TrilinearStructure, r: Operator, variant: JtsVariant) -> Result<Self, Error> {
        if triple.dim() != r.dim() {
            return Err(Error::DimensionMismatch {
                expected: triple.dim(),
                found: r.dim(),
            });
        }
        Ok(TripleWithOperator {
            triple,
            r,
            variant,
            verified: false,
        })
    }

    pub fn triple(&self) -> &TrilinearStructure {
        &self.triple
    }

    pub fn r(&self) -> &Operator {
        &self.r
    }

    pub fn variant(&self) -> JtsVariant {
        self.variant
    }

    pub fn is_verified(&self) -> bool {
        self.verified
    }

    fn finish(&self, mut report: CheckReport) -> CheckReport {
        if !self.verified {
            report.mark(UNVERIFIED_MARKER);
        }
        report
    }
}

/// A Lie bracket and a triple product on the same space, to be tested as a design.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DesignCandidate {
    bracket: BilinearStructure,
    triple: TrilinearStructure,
    variant: JtsVariant,
}

impl DesignCandidate {
    pub fn new(bracket: BilinearStructure, triple: TrilinearStructure, variant: JtsVariant) -> Result<Self, Error> {
        if bracket.dim() != triple.dim() {
            return Err(Error::DimensionMismatch {
                expected: bracket.dim(),
                found: triple.dim(),
            });
        }
        validate_lie(&bracket)?;
        Ok(DesignCandidate {
            bracket,
            triple,
            variant,
        })
    }

    pub fn bracket(&self) -> &BilinearStructure {
        &self.bracket
    }

    pub fn triple(&self) -> &TrilinearStructure {
        &self.triple
    }
}

/// `ad_A` derives the triple:
/// `[A,<X,Y,Z>] = <[A,X],Y,Z> + <X,[A,Y],Z> + <X,Y,[A,Z]>`.
pub fn check_equivariance(bracket: &BilinearStructure, triple: &TrilinearStructure) -> CheckReport {
    let n = bracket.dim();
    exhaustive("equivariance", n, &["A", "X", "Y", "Z"], |t| {
        let (a, x, y, z) = (t[0], t[1], t[2], t[3]);
        let lhs = bracket.eval(&e(n, a), &triple.basis_product(x, y, z));
        let rhs = triple.eval(&bracket.basis_product(a, x), &e(n, y), &e(n, z))
            + triple.eval(&e(n, x), &bracket.basis_product(a, y), &e(n, z))
            + triple.eval(&e(n, x), &e(n, y), &bracket.basis_product(a, z));
        lhs - rhs
    })
}

/// Full polarisation of `[A,<X,A,X>] + [X,<A,X,A>]` in the slots `(A1, A2, X1, X2)`.
/// Setting `A1 = A2 = A`, `X1 = X2 = X` gives four times the original, so over
/// the rationals the quadratic condition holds iff this 4-linear form vanishes.
pub fn check_design_condition(bracket: &BilinearStructure, triple: &TrilinearStructure) -> CheckReport {
    let n = bracket.dim();
    exhaustive("design-condition", n, &["A1", "A2", "X1", "X2"], |t| {
        let (a1, a2, x1, x2) = (t[0], t[1], t[2], t[3]);
        let term = |outer: usize, p: usize, q: usize, r: usize| bracket.eval(&e(n, outer), &triple.basis_product(p, q, r));
        let mut acc = Vector::zeros(n);
        for v in [
            term(a1, x1, a2, x2),
            term(a2, x1, a1, x2),
            term(a1, x2, a2, x1),
            term(a2, x2, a1, x1),
            term(x1, a1, x2, a2),
            term(x1, a2, x2, a1),
            term(x2, a1, x1, a2),
            term(x2, a2, x1, a1),
        ] {
            acc += &v;
        }
        acc
    })
}

/// JTS identity (under the candidate's variant), equivariance and the
/// quadratic design condition.
pub fn check_design(d: &DesignCandidate) -> CheckReport {
    CheckReport::aggregate(
        format!("design[{}]", d.variant),
        vec![
            check_jts_identity(&d.triple, d.variant),
            check_equivariance(&d.bracket, &d.triple),
            check_design_condition(&d.bracket, &d.triple),
        ],
        vec![],
    )
}

/// `R<RX,Y,Z> + R<X,Y,RZ> = <RX,Y,RZ> + R^2<X,Y,Z>`
pub fn check_triple_myb_identity(t: &TrilinearStructure, r: &Operator) -> CheckReport {
    let n = t.dim();
    let r2 = r * r;
    exhaustive("triple-myb", n, &["X", "Y", "Z"], |v| {
        let (x, y, z) = (e(n, v[0]), e(n, v[1]), e(n, v[2]));
        let (rx, rz) = (r.column(v[0]), r.column(v[2]));
        let lhs = r.eval(&(t.eval(&rx, &y, &z) + t.eval(&x, &y, &rz)));
        let rhs = t.eval(&rx, &y, &rz) + r2.eval(&t.basis_product(v[0], v[1], v[2]));
        lhs - rhs
    })
}

pub fn check_triple_myb(s: &TripleWithOperator) -> CheckReport {
    s.finish(check_triple_myb_identity(&s.triple, &s.r))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum TripleMode {
    /// Seven-term definition, valid for any operator.
    Full,
    /// Three-term form, equal to the full one on triple mYB systems.
    Reduced,
}

impl std::str::FromStr for TripleMode {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "full" => Ok(TripleMode::Full),
            "reduced" => Ok(TripleMode::Reduced),
            other => Err(format!("unknown triple mode {other:?} (expected full or reduced)")),
        }
    }
}

/// `<X,RY,RZ> + <RX,Y,RZ> + <RX,RY,Z> - R<RX,Y,Z> - R<X,RY,Z> - R<X,Y,RZ> + R^2<X,Y,Z>`
pub fn derived_triple_full(t: &TrilinearStructure, r: &Operator) -> TrilinearStructure {
    let n = t.dim();
    let r2 = r * r;
    TrilinearStructure::from_fn(n, |i, j, k| {
        let (x, y, z) = (e(n, i), e(n, j), e(n, k));
        let (rx, ry, rz) = (r.column(i), r.column(j), r.column(k));
        let quadratic = t.eval(&x, &ry, &rz) + t.eval(&rx, &y, &rz) + t.eval(&rx, &ry, &z);
        let linear = t.eval(&rx, &y, &z) + t.eval(&x, &ry, &z) + t.eval(&x, &y, &rz);
        quadratic - r.eval(&linear) + r2.eval(&t.basis_product(i, j, k))
    })
}

/// `<RX,RY,Z> + <X,RY,RZ> - R<X,RY,Z>`
pub fn derived_triple_reduced(t: &TrilinearStructure, r: &Operator) -> TrilinearStructure {
    let n = t.dim();
    TrilinearStructure::from_fn(n, |i, j, k| {
        let (x, z) = (e(n, i), e(n, k));
        let (rx, ry, rz) = (r.column(i), r.column(j), r.column(k));
        t.eval(&rx, &ry, &z) + t.eval(&x, &ry, &rz) - r.eval(&t.eval(&x, &ry, &z))
    })
}

/// The derived triple `<.,.,.>_R`. Reduced mode requires the triple mYB identity.
pub fn triple_r(s: &TripleWithOperator, mode: TripleMode) -> Result<TrilinearStructure, Error> {
    match mode {
        TripleMode::Full => Ok(derived_triple_full(&s.triple, &s.r)),
        TripleMode::Reduced => {
            let pre = check_triple_myb(s);
            if !pre.passed {
                return Err(Error::precondition("reduced derived triple", pre));
            }
            Ok(derived_triple_reduced(&s.triple, &s.r))
        }
    }
}

/// `R<X,Y,Z>_R = <RX,RY,RZ>` on a triple mYB system.
pub fn check_derived_triple_intertwining(s: &TripleWithOperator) -> Result<CheckReport, Error> {
    let pre = check_triple_myb(s);
    if !pre.passed {
        return Err(Error::precondition("derived triple intertwining", pre));
    }
    let n = s.triple.dim();
    let derived = derived_triple_reduced(&s.triple, &s.r);
    let r = &s.r;
    let report = exhaustive("derived-triple-intertwining", n, &["X", "Y", "Z"], |v| {
        r.eval(&derived.basis_product(v[0], v[1], v[2]))
            - s.triple.eval(&r.column(v[0]), &r.column(v[1]), &r.column(v[2]))
    });
    Ok(s.finish(report))
}

/// Builds `<aX, bY, cZ> + ... - outer<...>` style trilinear residual checks.
fn check_trilinear_chain(name: &str, n: usize, left: impl Fn(usize, usize, usize) -> Vector + Sync, right: impl Fn(usize, usize, usize) -> Vector + Sync) -> CheckReport {
    exhaustive(name, n, &["X", "Y", "Z"], |v| left(v[0], v[1], v[2]) - right(v[0], v[1], v[2]))
}

/// `<S1 X, M Y, S2 Z> + <S2 X, M Y, S3 Z> - M<X, M Y, Z>` evaluated on basis vectors.
fn mixed_term(t: &TrilinearStructure, s1: &Operator, s2: &Operator, s3: &Operator, middle: &Operator, (i, j, k): (usize, usize, usize)) -> Vector {
    let n = t.dim();
    let my = middle.column(j);
    t.eval(&s1.column(i), &my, &s2.column(k)) + t.eval(&s2.column(i), &my, &s3.column(k))
        - middle.eval(&t.eval(&e(n, i), &my, &e(n, k)))
}

/// Commuting `R1, R2`, both triple mYB, identical derived triples. The normal
/// and even-tempered chains, the concise normal form `<X,Y,Z>_R = <X,rho Y,Z>`
/// (`rho = R1 R2`) and its agreement with the normal chain are informational.
pub fn check_triple_bi_myb(triple: &TrilinearStructure, r1: &Operator, r2: &Operator) -> Result<CheckReport, Error> {
    for op in [r1, r2] {
        if op.dim() != triple.dim() {
            return Err(Error::DimensionMismatch {
                expected: triple.dim(),
                found: op.dim(),
            });
        }
    }
    let n = triple.dim();
    let t = triple;
    let rho = r1 * r2;
    let rename = |mut r: CheckReport, name: &str| {
        r.identity_name = name.into();
        r
    };
    let core = vec![
        check_commute("triple-bi-myb/commute", r1, r2),
        rename(check_triple_myb_identity(t, r1), "triple-bi-myb/triple-myb[R1]"),
        rename(check_triple_myb_identity(t, r2), "triple-bi-myb/triple-myb[R2]"),
        check_trilinear_equal(
            "triple-bi-myb/identical-triples",
            &derived_triple_full(t, r1),
            &derived_triple_full(t, r2),
        ),
    ];

    let rho_middle = |i: usize, j: usize, k: usize| t.eval(&e(n, i), &rho.column(j), &e(n, k));
    let reduced_1 = derived_triple_reduced(t, r1);
    let reduced_2 = derived_triple_reduced(t, r2);
    let normal = CheckReport::aggregate(
        "triple-bi-myb/normal",
        vec![
            check_trilinear_chain(
                "normal/mixed",
                n,
                rho_middle,
                |i, j, k| {
                    // <R1X,Y,R2Z> + <R2X,Y,R1Z> - R1R2<X,Y,Z>
                    let y = e(n, j);
                    t.eval(&r1.column(i), &y, &r2.column(k)) + t.eval(&r2.column(i), &y, &r1.column(k))
                        - rho.eval(&t.basis_product(i, j, k))
                },
            ),
            check_trilinear_chain("normal/R1-reduced", n, rho_middle, |i, j, k| reduced_1.basis_product(i, j, k)),
            check_trilinear_chain("normal/R2-reduced", n, rho_middle, |i, j, k| reduced_2.basis_product(i, j, k)),
        ],
        vec![],
    );

    let r1_sq = r1 * r1;
    let r2_sq = r2 * r2;
    let reduced_r1_sq = derived_triple_reduced(t, &r1_sq);
    let reduced_r2_sq = derived_triple_reduced(t, &r2_sq);
    let symmetric = |i: usize, j: usize, k: usize| mixed_term(t, r1, r2, r1, &rho, (i, j, k));
    let even = CheckReport::aggregate(
        "triple-bi-myb/even-tempered",
        vec![
            check_trilinear_chain("even-tempered/R1-squared", n, symmetric, |i, j, k| reduced_r1_sq.basis_product(i, j, k)),
            check_trilinear_chain("even-tempered/R2-squared", n, symmetric, |i, j, k| reduced_r2_sq.basis_product(i, j, k)),
        ],
        vec![],
    );
    // Literal reading with <R2X, rho Y, R2Z> as the second term.
    let printed = |i: usize, j: usize, k: usize| mixed_term(t, r1, r2, r2, &rho, (i, j, k));
    let even_printed = CheckReport::aggregate(
        "triple-bi-myb/even-tempered-as-printed",
        vec![
            check_trilinear_chain("even-tempered-as-printed/R1-squared", n, printed, |i, j, k| reduced_r1_sq.basis_product(i, j, k)),
            check_trilinear_chain("even-tempered-as-printed/R2-squared", n, printed, |i, j, k| reduced_r2_sq.basis_product(i, j, k)),
        ],
        vec![],
    );

    let derived = derived_triple_full(t, r1);
    let concise = check_trilinear_chain("triple-bi-myb/normal-concise", n, |i, j, k| derived.basis_product(i, j, k), rho_middle);
    let consistency = agreement("triple-bi-myb/normal-consistency", &normal, &concise);

    Ok(CheckReport::aggregate(
        "triple-bi-myb",
        core,
        vec![normal, even, even_printed, concise, consistency],
    ))
}

/// Passes iff both reports have the same verdict; on disagreement carries the
/// witness of whichever one failed.
pub fn agreement(name: &str, a: &CheckReport, b: &CheckReport) -> CheckReport {
    let mut r = CheckReport::aggregate(name, vec![], vec![]);
    r.tuples_evaluated = 0;
    if a.passed != b.passed {
        let failing = if a.passed { b } else { a };
        r.passed = false;
        r.witness = failing.witness.clone();
        r.variables = failing.variables.clone();
    }
    r
}

/// `<rho X, Y, rho Z> = rho<X, rho Y, Z>`; with `derived` supplied, also
/// `rho<X,Y,Z>_rho = <rho X, Y, rho Z>` against that tensor.
pub fn check_rho_identity(triple: &TrilinearStructure, rho: &Operator, derived: Option<&TrilinearStructure>) -> Result<CheckReport, Error> {
    if rho.dim() != triple.dim() {
        return Err(Error::DimensionMismatch {
            expected: triple.dim(),
            found: rho.dim(),
        });
    }
    let n = triple.dim();
    let t = triple;
    let outer = |i: usize, j: usize, k: usize| t.eval(&rho.column(i), &e(n, j), &rho.column(k));
    let mut subs = vec![check_trilinear_chain("rho-identity/main", n, outer, |i, j, k| {
        rho.eval(&t.eval(&e(n, i), &rho.column(j), &e(n, k)))
    })];
    if let Some(d) = derived {
        if d.dim() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: d.dim(),
            });
        }
        subs.push(check_trilinear_chain(
            "rho-identity/derived-form",
            n,
            |i, j, k| rho.eval(&d.basis_product(i, j, k)),
            outer,
        ));
    }
    Ok(CheckReport::aggregate("rho-identity", subs, vec![]))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::int;

    fn diagonal_triple() -> TrilinearStructure {
        // <e_i, e_j, e_k> = e_i if i == j == k: the cube map on coordinates,
        // i.e. XYZ + ZYX / 2 on a product of copies of the rationals.
        TrilinearStructure::from_fn(2, |i, j, k| {
            if i == j && j == k {
                Vector::basis(2, i)
            } else {
                Vector::zeros(2)
            }
        })
    }

    #[test]
    fn identity_and_zero_operators() {
        let t = diagonal_triple();
        let s = TripleWithOperator::new(t.clone(), Operator::identity(2), JtsVariant::Jacobson).unwrap();
        assert!(check_triple_myb(&s).passed);
        assert_eq!(triple_r(&s, TripleMode::Full).unwrap(), t);
        assert_eq!(triple_r(&s, TripleMode::Reduced).unwrap(), t);
        assert!(check_derived_triple_intertwining(&s).unwrap().passed);
        let z = TripleWithOperator::new(t, Operator::zero(2), JtsVariant::Jacobson).unwrap();
        assert!(triple_r(&z, TripleMode::Full).unwrap().is_zero());
        assert!(check_derived_triple_intertwining(&z).unwrap().passed);
    }

    #[test]
    fn unchecked_construction_marks_reports() {
        let t = TrilinearStructure::from_coefficients(1, [(0, 0, 0, 0, int(1))]).unwrap();
        let s = TripleWithOperator::new_unchecked(t, Operator::identity(1), JtsVariant::Paper).unwrap();
        let r = check_triple_myb(&s);
        assert!(r.markers.iter().any(|m| m == UNVERIFIED_MARKER));
    }

    #[test]
    fn reduced_mode_needs_myb() {
        let t = diagonal_triple();
        let swap = Operator::from_int_rows(&[&[1, 1], &[0, 1]]).unwrap();
        let s = TripleWithOperator::new(t, swap, JtsVariant::Jacobson).unwrap();
        if !check_triple_myb(&s).passed {
            assert!(matches!(triple_r(&s, TripleMode::Reduced), Err(Error::Precondition { .. })));
            assert!(check_derived_triple_intertwining(&s).is_err());
        }
    }

    #[test]
    fn identity_pair_passes_everything() {
        let t = diagonal_triple();
        let id = Operator::identity(2);
        let r = check_triple_bi_myb(&t, &id, &id).unwrap();
        assert!(r.passed);
        for name in ["triple-bi-myb/normal", "triple-bi-myb/even-tempered", "triple-bi-myb/normal-consistency"] {
            assert_eq!(r.passed_named(name), Some(true), "{name}");
        }
        assert!(check_rho_identity(&t, &id, Some(&t)).unwrap().passed);
    }

    #[test]
    fn agreement_flags() {
        let t = diagonal_triple();
        let pass = check_triple_myb_identity(&t, &Operator::identity(2));
        let fail = check_triple_myb_identity(&t, &Operator::from_int_rows(&[&[0, 1], &[1, 1]]).unwrap());
        assert!(agreement("a", &pass, &pass).passed);
        if !fail.passed {
            let d = agreement("a", &pass, &fail);
            assert!(!d.passed);
            assert_eq!(d.witness, fail.witness);
        }
    }

    #[test]
    fn triple_mode_parse() {
        assert_eq!("full".parse::<TripleMode>().unwrap(), TripleMode::Full);
        assert!("half".parse::<TripleMode>().is_err());
    }
}
