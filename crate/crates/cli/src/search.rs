//! Seeded random searches for instances behind "in general" claims.
//!
//! Every target defines a premise (what a trial must satisfy to count) and a
//! witness predicate. Trials are drawn from one seeded sampler in order, so a
//! search is reproducible from its parameters alone.

use myb_core::catalog::matrix::Matrix;
use myb_core::catalog::{gl_assoc, mult_operators, so_n, CatalogEntry, MatrixBasis};
use myb_core::identities::check_trilinear_equal;
use myb_core::jordan::{check_triple_bi_myb, derived_triple_full, derived_triple_reduced};
use myb_core::lie::{check_bi_myb, check_even_tempered, check_myb_identity, probe_r0, LieBiOperator};
use myb_core::sample::{Sampler, DEFAULT_ENTRY_BOUND};
use myb_core::scalar::{int, zero, Scalar};
use myb_core::{CheckReport, Operator};
use serde_json::{json, Value};

use crate::error::CliError;
use crate::format::AlgebraFile;
use crate::report::RunReport;

/// Targets with the claim each one probes.
pub const TARGETS: &[(&str, &str)] = &[
    ("r0-not-myb", "midpoint R0 of a gl(n) multiplication pair is not mYB"),
    ("non-even-tempered-myb", "R1 = R2 = R, R a right multiplication on gl(n), not even-tempered"),
    ("non-even-tempered-diagonal-R", "R1 = R2 = R, R a diagonal mYB operator on so(n), not even-tempered"),
    ("non-normal-triple", "R1 = R2 = right multiplication on the gl(n) triple, not normal"),
    ("rrho-not-factorizable", "so(n), diagonal Q: no R1 = a + bR + c rho with R1 (R - R1) = rho is bi-mYB"),
    ("non-myb-so3", "diagonal operator on so(n) failing the mYB identity"),
    ("full-reduced-disagree", "random operator on the gl(n) triple whose full and reduced derived triples differ"),
];

/// Names that denote identities rather than claims; searching them is a misuse.
const THEOREMS: &[&str] = &[
    "myb-right-mult",
    "bracket-r-jacobi",
    "polynomial-closure",
    "bi-myb-example2",
    "triple-myb-right-mult",
    "rrho-example4",
    "gamma-bunch",
    "from-bi-myb",
];

#[derive(Clone, Debug)]
pub struct SearchParams {
    pub target: String,
    pub seed: u64,
    pub trials: u64,
    /// Matrix size `n`; defaults to 2 for gl targets and 3 for so targets.
    pub dim: Option<usize>,
    pub entry_bound: i64,
}

impl SearchParams {
    pub fn new(target: &str, seed: u64, trials: u64) -> Self {
        SearchParams {
            target: target.into(),
            seed,
            trials,
            dim: None,
            entry_bound: DEFAULT_ENTRY_BOUND,
        }
    }
}

struct Hit {
    report: CheckReport,
    entry: CatalogEntry,
}

enum Trial {
    /// The sample did not satisfy the premise.
    Skipped,
    Miss,
    Found(Box<Hit>),
}

fn uses_so(target: &str) -> bool {
    matches!(target, "non-even-tempered-diagonal-R" | "rrho-not-factorizable" | "non-myb-so3")
}

fn with_ops(mut entry: CatalogEntry, ops: &[(&str, &Operator)]) -> CatalogEntry {
    for (name, op) in ops {
        entry.operators.insert((*name).into(), (*op).clone());
    }
    entry
}

fn informational<'a>(report: &'a CheckReport, name: &str) -> &'a CheckReport {
    report.find(name).unwrap_or_else(|| panic!("report has no {name}"))
}

fn trial(target: &str, n: usize, s: &mut Sampler) -> Result<Trial, CliError> {
    Ok(match target {
        "r0-not-myb" => {
            let base = gl_assoc(n)?;
            let q = s.matrix(n);
            let ops = mult_operators(&base, &q)?;
            let (r1, r2) = (ops.right.expect("gl"), ops.left.expect("gl"));
            let g = LieBiOperator::new(base.bracket.clone().expect("gl"), r1.clone(), r2.clone())?;
            let report = probe_r0(&g)?;
            let r0 = informational(&report, "r0/R0-myb").clone();
            if r0.passed {
                Trial::Miss
            } else {
                let r0_op = (&r1 + &r2).scaled(&myb_core::scalar::ratio(1, 2));
                Trial::Found(Box::new(Hit {
                    report: r0,
                    entry: with_ops(base, &[("R1", &r1), ("R2", &r2), ("R0", &r0_op)]),
                }))
            }
        }
        "non-even-tempered-myb" => {
            let base = gl_assoc(n)?;
            let q = s.matrix(n);
            let r = mult_operators(&base, &q)?.right.expect("gl");
            let g = LieBiOperator::new(base.bracket.clone().expect("gl"), r.clone(), r.clone())?;
            let report = check_even_tempered(&g);
            if report.passed {
                Trial::Miss
            } else {
                Trial::Found(Box::new(Hit {
                    report,
                    entry: with_ops(base, &[("R", &r), ("R1", &r), ("R2", &r)]),
                }))
            }
        }
        "non-even-tempered-diagonal-R" => {
            let base = so_n(n)?;
            let d = s.diagonal(base.dim());
            let r = Operator::diagonal(&d);
            let b = base.bracket.clone().expect("so");
            if !check_myb_identity(&b, &r).passed {
                return Ok(Trial::Skipped);
            }
            let report = check_even_tempered(&LieBiOperator::new(b, r.clone(), r.clone())?);
            if report.passed {
                Trial::Miss
            } else {
                Trial::Found(Box::new(Hit {
                    report,
                    entry: with_ops(base, &[("R", &r), ("R1", &r), ("R2", &r)]),
                }))
            }
        }
        "non-normal-triple" => {
            let base = gl_assoc(n)?;
            let q = s.matrix(n);
            let r = mult_operators(&base, &q)?.right.expect("gl");
            let report = check_triple_bi_myb(base.triple.as_ref().expect("gl"), &r, &r)?;
            if !report.passed {
                return Ok(Trial::Skipped);
            }
            let normal = informational(&report, "triple-bi-myb/normal").clone();
            if normal.passed {
                Trial::Miss
            } else {
                Trial::Found(Box::new(Hit {
                    report: normal,
                    entry: with_ops(base, &[("R", &r), ("R1", &r), ("R2", &r)]),
                }))
            }
        }
        "rrho-not-factorizable" => {
            let base = so_n(n)?;
            let d = s.diagonal(n);
            if (0..n).any(|i| (i + 1..n).any(|j| d[i] == d[j])) {
                return Ok(Trial::Skipped);
            }
            let q = Matrix::diagonal(&d);
            let ops = mult_operators(&base, &q)?;
            let b = base.bracket.clone().expect("so");
            let factors = family_factorizations(&base, &d, &ops.sum, &ops.rho)?;
            let mut reports = Vec::new();
            for (r1, r2) in &factors {
                let report = check_bi_myb(&LieBiOperator::new(b.clone(), r1.clone(), r2.clone())?);
                if report.passed {
                    return Ok(Trial::Miss);
                }
                reports.push(report);
            }
            let mut report = CheckReport::aggregate("no-bi-myb-factorization", vec![], reports);
            report.identity_name = format!("no-bi-myb-factorization ({} candidates)", factors.len());
            Trial::Found(Box::new(Hit {
                report,
                entry: with_ops(base, &[("R", &ops.sum), ("rho", &ops.rho)]),
            }))
        }
        "non-myb-so3" => {
            let base = so_n(n)?;
            let r = Operator::diagonal(&s.diagonal(base.dim()));
            let report = check_myb_identity(base.bracket.as_ref().expect("so"), &r);
            if report.passed {
                Trial::Miss
            } else {
                Trial::Found(Box::new(Hit {
                    report,
                    entry: with_ops(base, &[("R", &r)]),
                }))
            }
        }
        "full-reduced-disagree" => {
            let base = gl_assoc(n)?;
            let r = s.operator(base.dim());
            let t = base.triple.as_ref().expect("gl");
            let report = check_trilinear_equal(
                "full-equals-reduced",
                &derived_triple_full(t, &r),
                &derived_triple_reduced(t, &r),
            );
            if report.passed {
                Trial::Miss
            } else {
                Trial::Found(Box::new(Hit {
                    report,
                    entry: with_ops(base, &[("R", &r)]),
                }))
            }
        }
        other => return Err(CliError::UnknownTarget(other.into())),
    })
}

/// Runs a search. The report never contains asserted checks, so its exit
/// status is always 0; the outcome is in the findings.
pub fn search(params: &SearchParams) -> Result<RunReport, CliError> {
    let target = params.target.as_str();
    if THEOREMS.contains(&target) {
        return Err(CliError::TheoremTarget(target.into()));
    }
    if !TARGETS.iter().any(|(t, _)| *t == target) {
        return Err(CliError::UnknownTarget(target.into()));
    }
    if params.trials == 0 {
        return Err(CliError::field("trials", "must be at least 1"));
    }
    if params.entry_bound < 1 {
        return Err(CliError::field("entry-bound", "must be at least 1"));
    }
    let n = params.dim.unwrap_or(if uses_so(target) { 3 } else { 2 });
    let mut sampler = Sampler::with_bound(params.seed, params.entry_bound);
    let mut premise_held = 0u64;
    let mut found = None;
    for index in 0..params.trials {
        match trial(target, n, &mut sampler)? {
            Trial::Skipped => {}
            Trial::Miss => premise_held += 1,
            Trial::Found(hit) => {
                premise_held += 1;
                found = Some((index, hit));
                break;
            }
        }
    }
    let mut report = RunReport::new("search", target, None);
    let mut finding = json!({
        "target": target,
        "seed": params.seed,
        "trials": params.trials,
        "matrix_size": n,
        "entry_bound": params.entry_bound,
        "premise_held": premise_held,
    });
    let obj = finding.as_object_mut().expect("object literal");
    match found {
        Some((index, hit)) => {
            let file = AlgebraFile::from_entry(&hit.entry);
            let algebra: Value = serde_json::from_str(&file.render()).expect("rendered file is JSON");
            obj.insert("outcome".into(), json!("witness found"));
            obj.insert("trial".into(), json!(index));
            obj.insert("check".into(), serde_json::to_value(&hit.report).expect("report serialises"));
            obj.insert("algebra".into(), algebra);
        }
        None => {
            obj.insert("outcome".into(), json!(format!("none found in {} trials", params.trials)));
        }
    }
    report.findings.push(finding);
    Ok(report)
}

/// All `R1 = a + bR + c rho` with `R1 (R - R1) = rho` on `so(n)` for diagonal
/// `Q`. There `R` and `rho` act on `E_ij - E_ji` as `q_i + q_j` and `q_i q_j`,
/// so `R1` must act there as `q_i` or `q_j`; every choice is solved exactly.
fn family_factorizations(
    base: &CatalogEntry,
    d: &[Scalar],
    r: &Operator,
    rho: &Operator,
) -> Result<Vec<(Operator, Operator)>, CliError> {
    let pairs: Vec<(usize, usize)> = match base.matrix_basis.as_ref() {
        Some(MatrixBasis::Skew { pairs, .. }) => pairs.clone(),
        _ => return Err(CliError::Missing("skew basis".into())),
    };
    let dim = pairs.len();
    let rows: Vec<[Scalar; 3]> = pairs.iter().map(|&(i, j)| [int(1), &d[i] + &d[j], &d[i] * &d[j]]).collect();
    let mut out = Vec::new();
    for choice in 0u64..(1 << dim) {
        let target: Vec<Scalar> = pairs
            .iter()
            .enumerate()
            .map(|(k, &(i, j))| if choice >> k & 1 == 0 { d[i].clone() } else { d[j].clone() })
            .collect();
        let Some(coeffs) = solve_family(&rows, &target) else { continue };
        let r1 = &(&Operator::scalar(dim, coeffs[0].clone()) + &r.scaled(&coeffs[1])) + &rho.scaled(&coeffs[2]);
        let r2 = r - &r1;
        if &r1 * &r2 == *rho && !out.iter().any(|(a, _): &(Operator, Operator)| *a == r1) {
            out.push((r1, r2));
        }
    }
    Ok(out)
}

/// Solves `rows . (a, b, c) = target` exactly: Cramer's rule on the first
/// independent triple of rows, then a consistency check on all rows.
fn solve_family(rows: &[[Scalar; 3]], target: &[Scalar]) -> Option<[Scalar; 3]> {
    let m = rows.len();
    let det = |idx: [usize; 3], col: Option<usize>| -> Scalar {
        let cells = idx
            .iter()
            .map(|&r| (0..3).map(|c| if Some(c) == col { target[r].clone() } else { rows[r][c].clone() }).collect())
            .collect();
        Matrix::from_rows(cells).expect("3x3").determinant()
    };
    let combos = (0..m).flat_map(|a| (a + 1..m).flat_map(move |b| (b + 1..m).map(move |c| [a, b, c])));
    for idx in combos {
        let base = det(idx, None);
        if base == zero() {
            continue;
        }
        let x = [0, 1, 2].map(|c| det(idx, Some(c)) / &base);
        let consistent = (0..m).all(|r| &rows[r][0] * &x[0] + &rows[r][1] * &x[1] + &rows[r][2] * &x[2] == target[r]);
        return consistent.then_some(x);
    }
    None
}

/// The `so(3)` operator `diag(1,0,0)`, a fixed instance failing the mYB identity.
pub fn so3_projection_instance() -> (CatalogEntry, Operator) {
    let base = so_n(3).expect("so(3)");
    let r = Operator::diagonal(&[int(1), int(0), int(0)]);
    (with_ops(base, &[("R", &r)]), r)
}

/// Right multiplication by `Q` on `gl(n)`.
pub fn right_mult(n: usize, q: &Matrix) -> Result<Operator, CliError> {
    Ok(mult_operators(&gl_assoc(n)?, q)?.right.expect("gl"))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn outcome(r: &RunReport) -> &str {
        r.findings[0]["outcome"].as_str().unwrap()
    }

    #[test]
    fn witnesses_are_found() {
        for target in ["r0-not-myb", "non-even-tempered-myb", "non-normal-triple", "non-myb-so3", "full-reduced-disagree"] {
            let r = search(&SearchParams::new(target, 42, 100)).unwrap();
            assert_eq!(outcome(&r), "witness found", "{target}");
            assert!(r.passed());
            let algebra = serde_json::to_string(&r.findings[0]["algebra"]).unwrap();
            assert!(AlgebraFile::parse(algebra.as_bytes()).is_ok());
        }
    }

    #[test]
    fn deterministic_by_seed() {
        let p = SearchParams::new("full-reduced-disagree", 9, 50);
        assert_eq!(search(&p).unwrap().to_json(), search(&p).unwrap().to_json());
    }

    #[test]
    fn diagonal_so3_has_no_non_scalar_myb() {
        let r = search(&SearchParams::new("non-even-tempered-diagonal-R", 7, 200)).unwrap();
        assert_eq!(outcome(&r), "none found in 200 trials");
    }

    #[test]
    fn factorizations_solve_exactly() {
        let r = search(&SearchParams::new("rrho-not-factorizable", 3, 20)).unwrap();
        let f = &r.findings[0];
        assert!(f["premise_held"].as_u64().unwrap() >= 1, "{f}");
    }

    #[test]
    fn misuse() {
        assert!(matches!(
            search(&SearchParams::new("bi-myb-example2", 1, 1)),
            Err(CliError::TheoremTarget(_))
        ));
        assert!(matches!(search(&SearchParams::new("nope", 1, 1)), Err(CliError::UnknownTarget(_))));
        assert!(search(&SearchParams::new("non-myb-so3", 1, 0)).is_err());
    }

    #[test]
    fn fixed_projection_fails_at_first_pair() {
        let (entry, r) = so3_projection_instance();
        let report = check_myb_identity(entry.bracket.as_ref().unwrap(), &r);
        assert_eq!(report.witness.unwrap().tuple, vec![1, 2]);
    }
}
