//! A fixed, deterministic document recording verdicts on the ambiguous points
//! of the theory: operator and triple readings of the so(3) example, the sign
//! of the derived matrix triple, the choice of JTS identity, the reading of
//! the triple even-tempered chain and the midpoint probe.

use myb_core::catalog::matrix::Matrix;
use myb_core::catalog::monomial::{full_derived_triple, jts_residual, reduced_derived_triple, trilinear_tensor, Expr};
use myb_core::catalog::{default_q, gl_assoc, mult_operators, FormExample};
use myb_core::identities::{check_jts_identity, check_trilinear_equal};
use myb_core::jordan::{check_design, check_design_condition, check_equivariance, check_triple_bi_myb, derived_triple_reduced, DesignCandidate};
use myb_core::lie::{check_myb_identity, probe_r0, LieBiOperator};
use myb_core::sample::Sampler;
use myb_core::{CheckReport, JtsVariant, TrilinearStructure};
use serde_json::{json, Value};

use crate::error::CliError;
use crate::report::{TOOL_NAME, TOOL_VERSION};

/// Seed of the random `Q` used by the midpoint item.
pub const R0_SEED: u64 = 2024;
pub const R0_SAMPLES: usize = 20;

fn verdict(r: &CheckReport) -> Value {
    json!({
        "identity": r.identity_name,
        "passed": r.passed,
        "tuples_evaluated": r.tuples_evaluated,
        "variables": r.variables,
        "witness": r.witness,
    })
}

fn full(r: &CheckReport) -> Value {
    serde_json::to_value(r).expect("report serialises")
}

fn example1_operators(ex: &FormExample) -> Value {
    let ra = check_myb_identity(&ex.bracket, &ex.r_projection);
    let rb = check_myb_identity(&ex.bracket, &ex.r_adjoint);
    json!({
        "printed": "RX = <X0,X> (scalar valued as printed)",
        "x0": ex.x0,
        "readings": {
            "projection": { "operator": "X -> <X0,X> X0", "myb": verdict(&ra) },
            "adjoint": { "operator": "X -> [X0,X]", "myb": verdict(&rb) },
        },
    })
}

fn triple_verdicts(ex: &FormExample, t: &TrilinearStructure) -> Result<Value, CliError> {
    let design = check_design(&DesignCandidate::new(ex.bracket.clone(), t.clone(), JtsVariant::Jacobson)?);
    Ok(json!({
        "jts": {
            "jacobson": verdict(&check_jts_identity(t, JtsVariant::Jacobson)),
            "paper": verdict(&check_jts_identity(t, JtsVariant::Paper)),
        },
        "equivariance": verdict(&check_equivariance(&ex.bracket, t)),
        "design_condition": verdict(&check_design_condition(&ex.bracket, t)),
        "design_jacobson": design.passed,
    }))
}

fn example1_triple(ex: &FormExample) -> Result<Value, CliError> {
    Ok(json!({
        "printed": "<X,Y>Z + <Y,Z>X",
        "standard": "<X,Y>Z + <Y,Z>X - <X,Z>Y",
        "candidates": {
            "printed": triple_verdicts(ex, &ex.triple_paper)?,
            "standard": triple_verdicts(ex, &ex.triple_standard)?,
        },
    }))
}

fn example3_sign() -> Result<Value, CliError> {
    let n = 2;
    let q = default_q(n);
    let gl = gl_assoc(n)?;
    let t = gl.triple.as_ref().expect("gl has a triple");
    let ops = mult_operators(&gl, &q)?;
    let right = ops.right.expect("gl");
    let derived = derived_triple_reduced(t, &right);
    let plus = trilinear_tensor(&Expr::parse("XQYQZ + ZQYQX"), n, &[('Q', &q)]);
    let minus = trilinear_tensor(&Expr::parse("XQYQZ - ZQYQX"), n, &[('Q', &q)]);
    let r_right = |e: &Expr| e.right_mul('Q');
    let r_left = |e: &Expr| e.left_mul('Q');
    Ok(json!({
        "printed": "XQYQZ - ZQYQX",
        "symbolic": {
            "R1 = XQ": {
                "reduced": reduced_derived_triple(r_right).to_string(),
                "full": full_derived_triple(r_right).to_string(),
            },
            "R2 = QX": {
                "reduced": reduced_derived_triple(r_left).to_string(),
                "full": full_derived_triple(r_left).to_string(),
            },
        },
        "tensor": {
            "q": q_rows(&q),
            "against_plus": verdict(&check_trilinear_equal("derived-triple = XQYQZ + ZQYQX", &derived, &plus)),
            "against_printed": verdict(&check_trilinear_equal("derived-triple = XQYQZ - ZQYQX", &derived, &minus)),
        },
        "verdict": "XQYQZ + ZQYQX",
    }))
}

fn jts_variant() -> Result<Value, CliError> {
    let gl = gl_assoc(2)?;
    let t = gl.triple.as_ref().expect("gl has a triple");
    Ok(json!({
        "triple": "XYZ + ZYX on gl(2)",
        "jacobson": verdict(&check_jts_identity(t, JtsVariant::Jacobson)),
        "paper": verdict(&check_jts_identity(t, JtsVariant::Paper)),
        "free_algebra_residual": {
            "jacobson": jts_residual(JtsVariant::Jacobson).to_string(),
            "paper": jts_residual(JtsVariant::Paper).to_string(),
        },
    }))
}

fn triple_even_tempered() -> Result<Value, CliError> {
    let gl = gl_assoc(2)?;
    let q = default_q(2);
    let ops = mult_operators(&gl, &q)?;
    let report = check_triple_bi_myb(
        gl.triple.as_ref().expect("gl has a triple"),
        ops.right.as_ref().expect("gl"),
        ops.left.as_ref().expect("gl"),
    )?;
    let get = |name: &str| report.find(name).map(verdict).unwrap_or(Value::Null);
    Ok(json!({
        "instance": "gl(2), XYZ + ZYX, R1 = XQ, R2 = QX, Q = diag(1,2)",
        "core": report.passed,
        "normal": get("triple-bi-myb/normal"),
        "normal_concise": get("triple-bi-myb/normal-concise"),
        "normal_consistency": get("triple-bi-myb/normal-consistency"),
        "even_tempered_symmetric_reading": get("triple-bi-myb/even-tempered"),
        "even_tempered_as_printed": get("triple-bi-myb/even-tempered-as-printed"),
    }))
}

fn q_rows(q: &Matrix) -> Vec<Vec<String>> {
    let n = q.size();
    (0..n)
        .map(|i| (0..n).map(|j| myb_core::scalar::render(q.get(i, j))).collect())
        .collect()
}

fn r0_midpoint() -> Result<Value, CliError> {
    let gl = gl_assoc(2)?;
    let b = gl.bracket.clone().expect("gl has a bracket");
    let mut sampler = Sampler::new(R0_SEED);
    let mut qs = vec![default_q(2)];
    qs.extend((0..R0_SAMPLES).map(|_| sampler.matrix(2)));
    let mut instances = Vec::new();
    let (mut coincide, mut r0_myb) = (0, 0);
    for q in &qs {
        let ops = mult_operators(&gl, q)?;
        let g = LieBiOperator::new(b.clone(), ops.right.expect("gl"), ops.left.expect("gl"))?;
        let probe = probe_r0(&g)?;
        let myb = probe.find("r0/R0-myb").expect("probe reports R0");
        coincide += probe.passed as usize;
        r0_myb += myb.passed as usize;
        instances.push(json!({
            "q": q_rows(q),
            "bracket_coincidence": probe.passed,
            "r0_myb": verdict(myb),
        }));
    }
    Ok(json!({
        "seed": R0_SEED,
        "instances": instances,
        "bracket_coincidence_passed": coincide,
        "r0_myb_passed": r0_myb,
        "total": qs.len(),
    }))
}

/// Builds the findings document.
pub fn findings() -> Result<Value, CliError> {
    let ex = FormExample::default_instance();
    let mut doc = json!({
        "tool": { "name": TOOL_NAME, "version": TOOL_VERSION },
        "items": {
            "example1-operator-readings": example1_operators(&ex),
            "example1-triple": example1_triple(&ex)?,
            "example3-sign": example3_sign()?,
            "jts-variant": jts_variant()?,
            "triple-even-tempered-reading": triple_even_tempered()?,
            "r0-midpoint": r0_midpoint()?,
        },
    });
    // Full sub-reports for the two asserted disagreements.
    let gl = gl_assoc(2)?;
    doc["items"]["jts-variant"]["paper_report"] =
        full(&check_jts_identity(gl.triple.as_ref().expect("gl"), JtsVariant::Paper));
    Ok(doc)
}

pub fn render(doc: &Value) -> String {
    let mut s = serde_json::to_string_pretty(doc).expect("document serialises");
    s.push('\n');
    s
}
