//! Named check suites over an algebra file.

use std::collections::BTreeMap;

use myb_core::check::ensure_within_guard;
use myb_core::identities::{
    check_antisymmetry, check_jacobi, check_jts_identity, check_operator_equal, check_trilinear_equal,
};
use myb_core::jordan::{
    check_derived_triple_intertwining, check_design, check_rho_identity, check_triple_bi_myb, check_triple_myb,
    derived_triple_full, derived_triple_reduced, DesignCandidate, TripleWithOperator, UNVERIFIED_MARKER,
};
use myb_core::lie::{
    bracket_r, check_bi_myb, check_even_tempered, check_even_tempered_xi, check_myb, check_polynomial_closure,
    check_xi_characterization, probe_r0, LieBiOperator, LieWithOperator,
};
use myb_core::rrho::{build_bunch, check_gamma_bunch, check_rrho, extract_rrho, from_bi_myb, RRhoAlgebra};
use myb_core::{CheckReport, Error, JtsVariant, Operator, Polynomial};

use crate::error::CliError;
use crate::format::AlgebraFile;

/// Suite names with a one-line description each.
pub const SUITES: &[(&str, &str)] = &[
    ("lie-base", "antisymmetry and Jacobi identity of the bracket"),
    ("myb", "mYB identity for R"),
    ("bracket-r", "mYB identity for R and the Jacobi identity of the derived bracket"),
    ("poly-closure", "mYB identity for f(R) (--poly)"),
    ("bi-myb", "commuting mYB operators R1, R2 with identical derived brackets"),
    ("even-tempered", "the two even-tempered identities for R1, R2"),
    ("xi", "(R, xi) characterisation with R = R1 and xi (default R2 - R1)"),
    ("r0", "midpoint probe R0 = (R1 + R2)/2"),
    ("jts", "Jordan triple identity (--variant asserted, the other reported)"),
    ("design", "Jordan design: JTS identity, equivariance and the quadratic condition"),
    ("triple-myb", "triple mYB identity for R"),
    ("derived-triple", "derived triple: full = reduced, intertwining, Jacobson JTS"),
    ("triple-bi-myb", "triple bi-mYB core conditions with normal/even-tempered flags"),
    ("rho-identity", "rho identity, with the derived-triple form when R1 is present"),
    ("rrho", "the two R-rho identities (regular condition reported)"),
    ("bunch", "quadratic bunch built from (R, rho) and its exact inversion"),
    ("rrho+bunch", "rrho followed by bunch"),
    ("from-bi-myb", "R = R1 + R2, rho = R1 R2 checked as an R-rho algebra"),
];

#[derive(Clone, Debug)]
pub struct SuiteOptions {
    pub variant: JtsVariant,
    pub force: bool,
    /// Construct triple systems without JTS validation.
    pub unchecked: bool,
    /// Role (`R`, `R1`, `R2`, `xi`, `rho`) to operator name.
    pub roles: BTreeMap<String, String>,
    pub poly: Polynomial,
}

impl Default for SuiteOptions {
    fn default() -> Self {
        SuiteOptions {
            variant: JtsVariant::Jacobson,
            force: false,
            unchecked: false,
            roles: BTreeMap::new(),
            poly: Polynomial::from_ints(&[1, 1]),
        }
    }
}

struct Ctx<'a> {
    file: &'a AlgebraFile,
    opts: &'a SuiteOptions,
}

impl Ctx<'_> {
    fn op(&self, role: &str) -> Result<Operator, CliError> {
        let name = self.opts.roles.get(role).map(String::as_str).unwrap_or(role);
        self.file.operator(name).cloned()
    }

    fn has(&self, role: &str) -> bool {
        let name = self.opts.roles.get(role).map(String::as_str).unwrap_or(role);
        self.file.operators.contains_key(name)
    }

    fn xi(&self) -> Result<Operator, CliError> {
        if self.has("xi") {
            return self.op("xi");
        }
        Ok(&self.op("R2")? - &self.op("R1")?)
    }

    fn guard(&self, arity: usize) -> Result<(), CliError> {
        ensure_within_guard(self.file.dimension, arity, self.opts.force).map_err(CliError::from)
    }

    fn lie(&self, role: &str) -> Result<LieWithOperator, Error> {
        let b = self.file.bracket.clone().expect("checked by caller");
        let r = self.op(role).map_err(|e| Error::InvalidArgument(e.to_string()))?;
        LieWithOperator::new(b, r)
    }

    fn bi(&self) -> Result<LieBiOperator, Error> {
        let b = self.file.bracket.clone().expect("checked by caller");
        let get = |role| self.op(role).map_err(|e| Error::InvalidArgument(e.to_string()));
        LieBiOperator::new(b, get("R1")?, get("R2")?)
    }

    fn triple_system(&self, role: &str) -> Result<TripleWithOperator, Error> {
        let t = self.file.triple.clone().expect("checked by caller");
        let r = self.op(role).map_err(|e| Error::InvalidArgument(e.to_string()))?;
        if self.opts.unchecked {
            TripleWithOperator::new_unchecked(t, r, self.opts.variant)
        } else {
            TripleWithOperator::new(t, r, self.opts.variant)
        }
    }
}

/// Turns a failed base validation or precondition into a failed check;
/// everything else stays an error.
fn settle(result: Result<CheckReport, Error>) -> Result<CheckReport, CliError> {
    match result {
        Ok(r) => Ok(r),
        Err(Error::InvalidBase { structure, report }) => {
            let mut r = *report;
            r.identity_name = format!("base/{}", r.identity_name);
            r.markers.push(format!("invalid {structure}"));
            Ok(r)
        }
        Err(Error::Precondition {
            operation,
            report: Some(report),
            ..
        }) => {
            let mut r = *report;
            r.markers.push(format!("precondition of {operation}"));
            Ok(r)
        }
        Err(e) => Err(e.into()),
    }
}

fn renamed(mut r: CheckReport, name: &str) -> CheckReport {
    r.identity_name = name.into();
    r
}

fn needs(file: &AlgebraFile, suite: &str) -> Result<(), CliError> {
    let bracket = !matches!(suite, "jts" | "triple-myb" | "derived-triple" | "triple-bi-myb" | "rho-identity");
    let triple = matches!(
        suite,
        "jts" | "design" | "triple-myb" | "derived-triple" | "triple-bi-myb" | "rho-identity"
    );
    if bracket {
        file.require_bracket()?;
    }
    if triple {
        file.require_triple()?;
    }
    Ok(())
}

/// Runs a suite and returns one report per asserted identity group.
pub fn run_suite(file: &AlgebraFile, suite: &str, opts: &SuiteOptions) -> Result<Vec<CheckReport>, CliError> {
    if !SUITES.iter().any(|(name, _)| *name == suite) {
        return Err(CliError::UnknownSuite(suite.into()));
    }
    needs(file, suite)?;
    let cx = Ctx { file, opts };
    let mut out = Vec::new();
    match suite {
        "lie-base" => {
            cx.guard(3)?;
            let b = file.require_bracket()?;
            out.push(check_antisymmetry(b));
            out.push(check_jacobi(b));
        }
        "myb" => {
            cx.op("R")?;
            cx.guard(3)?;
            out.push(settle(cx.lie("R").map(|g| check_myb(&g)))?);
        }
        "bracket-r" => {
            cx.op("R")?;
            cx.guard(3)?;
            out.push(settle(cx.lie("R").map(|g| {
                let myb = check_myb(&g);
                let derived = bracket_r(&g);
                CheckReport::aggregate(
                    "bracket-r",
                    vec![
                        myb,
                        renamed(check_antisymmetry(&derived), "bracket-r/antisymmetry"),
                        renamed(check_jacobi(&derived), "bracket-r/jacobi"),
                    ],
                    vec![],
                )
            }))?);
        }
        "poly-closure" => {
            cx.op("R")?;
            cx.guard(3)?;
            out.push(settle(cx.lie("R").and_then(|g| check_polynomial_closure(&g, &opts.poly)))?);
        }
        "bi-myb" | "even-tempered" | "r0" | "from-bi-myb" => {
            cx.op("R1")?;
            cx.op("R2")?;
            cx.guard(3)?;
            let report = cx.bi().and_then(|g| match suite {
                "bi-myb" => Ok(check_bi_myb(&g)),
                "even-tempered" => Ok(check_even_tempered(&g)),
                "r0" => probe_r0(&g),
                _ => from_bi_myb(&g).map(|a| check_rrho(&a)),
            });
            out.push(settle(report)?);
        }
        "xi" => {
            let xi = cx.xi()?;
            cx.op("R1")?;
            cx.guard(3)?;
            match cx.lie("R1") {
                Ok(g) => {
                    out.push(settle(check_xi_characterization(&g, &xi))?);
                    out.push(settle(check_even_tempered_xi(&g, &xi))?);
                }
                Err(e) => out.push(settle(Err(e))?),
            }
        }
        "jts" => {
            cx.guard(5)?;
            let t = file.require_triple()?;
            let other = JtsVariant::ALL.into_iter().find(|v| *v != opts.variant).expect("two variants");
            out.push(CheckReport::aggregate(
                "jts",
                vec![check_jts_identity(t, opts.variant)],
                vec![check_jts_identity(t, other)],
            ));
        }
        "design" => {
            cx.guard(5)?;
            let d = DesignCandidate::new(file.require_bracket()?.clone(), file.require_triple()?.clone(), opts.variant);
            out.push(settle(d.map(|d| check_design(&d)))?);
        }
        "triple-myb" => {
            cx.op("R")?;
            cx.guard(if opts.unchecked { 3 } else { 5 })?;
            out.push(settle(cx.triple_system("R").map(|s| check_triple_myb(&s)))?);
        }
        "derived-triple" => {
            cx.op("R")?;
            cx.guard(5)?;
            let s = match cx.triple_system("R") {
                Ok(s) => s,
                Err(e) => {
                    out.push(settle(Err(e))?);
                    return Ok(out);
                }
            };
            let full = derived_triple_full(s.triple(), s.r());
            let reduced = derived_triple_reduced(s.triple(), s.r());
            let mut modes = check_trilinear_equal("derived-triple/full-equals-reduced", &full, &reduced);
            let mut jts = renamed(check_jts_identity(&full, JtsVariant::Jacobson), "derived-triple/jts[jacobson]");
            if !s.is_verified() {
                modes.mark(UNVERIFIED_MARKER);
                jts.mark(UNVERIFIED_MARKER);
            }
            out.push(modes);
            out.push(settle(check_derived_triple_intertwining(&s))?);
            out.push(jts);
        }
        "triple-bi-myb" => {
            cx.guard(3)?;
            let (r1, r2) = (cx.op("R1")?, cx.op("R2")?);
            out.push(settle(check_triple_bi_myb(file.require_triple()?, &r1, &r2))?);
        }
        "rho-identity" => {
            cx.guard(3)?;
            let t = file.require_triple()?;
            let rho = cx.op("rho")?;
            let derived = if cx.has("R1") {
                Some(derived_triple_full(t, &cx.op("R1")?))
            } else {
                None
            };
            out.push(settle(check_rho_identity(t, &rho, derived.as_ref()))?);
        }
        "rrho" | "bunch" | "rrho+bunch" => {
            let (r, rho) = (cx.op("R")?, cx.op("rho")?);
            cx.guard(3)?;
            let a = match RRhoAlgebra::new(file.require_bracket()?.clone(), r, rho) {
                Ok(a) => a,
                Err(e) => {
                    out.push(settle(Err(e))?);
                    return Ok(out);
                }
            };
            if suite != "bunch" {
                out.push(check_rrho(&a));
            }
            if suite != "rrho" {
                let bunch = build_bunch(&a);
                out.push(check_gamma_bunch(&bunch));
                let round_trip = match extract_rrho(&bunch) {
                    Ok(back) => CheckReport::aggregate(
                        "bunch/round-trip",
                        vec![
                            check_operator_equal("bunch/round-trip-R", back.r(), a.r()),
                            check_operator_equal("bunch/round-trip-rho", back.rho(), a.rho()),
                        ],
                        vec![],
                    ),
                    Err(e) => settle(Err(e))?,
                };
                out.push(round_trip);
            }
        }
        _ => unreachable!("suite list checked above"),
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use myb_core::catalog::lookup;

    fn run(name: &str, suite: &str) -> Vec<CheckReport> {
        let file = AlgebraFile::from_entry(&lookup(name).unwrap());
        run_suite(&file, suite, &SuiteOptions::default()).unwrap()
    }

    #[test]
    fn catalog_suites_pass() {
        for (name, suite) in [
            ("so3", "lie-base"),
            ("example2-gl2", "bi-myb"),
            ("example2-gl2", "even-tempered"),
            ("example2-gl2", "xi"),
            ("example2-gl2", "r0"),
            ("example2-gl2", "from-bi-myb"),
            ("example2-gl2", "rrho"),
            ("example3-gl2", "triple-bi-myb"),
            ("example3-gl2", "rho-identity"),
            ("example3-gl2", "jts"),
            ("example3-gl2", "design"),
            ("example4-so3", "rrho+bunch"),
        ] {
            for r in run(name, suite) {
                assert!(r.passed, "{name} {suite}: {r:?}");
            }
        }
    }

    #[test]
    fn failures_become_reports() {
        // R = Ra (projection) on so(3) is not mYB, so reduced-mode checks fail.
        let file = AlgebraFile::from_entry(&lookup("example1-standard").unwrap());
        let r = run_suite(&file, "myb", &SuiteOptions::default()).unwrap();
        assert!(!r[0].passed);
        let opts = SuiteOptions {
            variant: JtsVariant::Paper,
            ..SuiteOptions::default()
        };
        let r = run_suite(&file, "triple-myb", &opts).unwrap();
        assert!(!r[0].passed);
        assert!(r[0].identity_name.starts_with("base/"));
    }

    #[test]
    fn usage_errors() {
        let file = AlgebraFile::from_entry(&lookup("so3").unwrap());
        let opts = SuiteOptions::default();
        assert!(matches!(run_suite(&file, "nope", &opts), Err(CliError::UnknownSuite(_))));
        assert!(matches!(run_suite(&file, "myb", &opts), Err(CliError::Missing(_))));
        assert!(matches!(run_suite(&file, "jts", &opts), Err(CliError::Missing(_))));
        let big = AlgebraFile::from_entry(&lookup("gl3").unwrap());
        assert!(matches!(
            run_suite(&big, "jts", &opts),
            Err(CliError::Core(Error::GuardExceeded { .. }))
        ));
    }
}
