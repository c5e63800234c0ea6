//! JSON renderings of library values.

use std::collections::BTreeSet;

use pnmaps::algebra::FieldValue;
use pnmaps::fixmap::{FiberBasis, NoetherReport};
use pnmaps::git::{StabilityVerdict, SupportProfile};
use pnmaps::poly::{HomogeneousPolynomial, Monomial, ProjectiveMatrix, RationalMap};
use pnmaps::stab::{DiagonalStabilizer, FiniteSubgroup};
use pnmaps::Error;
use serde_json::{json, Value};

/// Groups larger than this are reported without their element list.
const ELEMENT_LIST_LIMIT: usize = 1000;

pub fn error(e: &Error) -> Value {
    json!({ "error": { "code": e.code(), "message": e.to_string() } })
}

pub fn values(xs: &[FieldValue]) -> Value {
    xs.iter().map(|x| Value::String(x.to_string())).collect()
}

pub fn map(phi: &RationalMap) -> Value {
    json!({
        "field": phi.field().descriptor().to_string(),
        "n": phi.n(),
        "d": phi.degree(),
        "map": phi.to_string(),
    })
}

pub fn matrix(m: &ProjectiveMatrix) -> Value {
    m.entries().iter().map(|row| values(row)).collect()
}

/// Coefficients in graded-lex order, largest monomial first.
pub fn form(f: &HomogeneousPolynomial) -> Value {
    json!({ "form": f.to_string(), "coefficients": values(&f.dense_coefficients()) })
}

fn positions(set: &BTreeSet<(Monomial, usize)>) -> Value {
    set.iter().rev().map(|(m, i)| json!([m.to_string(), i])).collect()
}

pub fn verdict(v: &StabilityVerdict) -> Value {
    json!({
        "status": v.status.as_str(),
        "witness": v.witness.as_ref().map(|w| w.as_slice().to_vec()),
        "frame": matrix(&v.frame),
    })
}

pub fn chamber(c: &SupportProfile) -> Value {
    json!({
        "representative": c.representative,
        "nonstable": positions(&c.nonstable),
        "unstable": positions(&c.unstable),
    })
}

pub fn group(g: &FiniteSubgroup) -> Value {
    let elements: Option<Vec<Value>> =
        (g.order() <= ELEMENT_LIST_LIMIT).then(|| g.elements().iter().map(matrix).collect());
    json!({
        "order": g.order(),
        "invariant_factors": g.abelian_invariants(),
        "elements": elements,
    })
}

pub fn diagonal(s: &DiagonalStabilizer) -> Value {
    json!({
        "invariant_factors": s.invariant_factors.iter().map(ToString::to_string).collect::<Vec<_>>(),
        "finite": s.is_finite(),
        "order_over_closure": s.order_over_closure.as_ref().map(ToString::to_string),
        "order_prime_to_p": s.order_prime_to_p.as_ref().map(ToString::to_string),
        "generators": s.generators.iter().map(matrix).collect::<Vec<_>>(),
    })
}

pub fn fiber(basis: &FiberBasis) -> Value {
    let vectors: Vec<Value> = basis
        .vectors()
        .iter()
        .map(|v| {
            json!({
                "p": values(&v.p.dense_coefficients()),
                "q": values(&v.q.dense_coefficients()),
                "t": v.t.to_string(),
            })
        })
        .collect();
    json!({
        "divisor": form(basis.divisor().form()),
        "dimension": basis.dimension(),
        "basis": vectors,
    })
}

pub fn noether(report: &NoetherReport) -> Value {
    let checks: Vec<Value> =
        report.checks.iter().map(|c| json!({ "name": c.name, "passed": c.passed })).collect();
    json!({
        "d": report.d,
        "field": report.field,
        "lambda": report.lambda,
        "passed": report.passed(),
        "checks": checks,
    })
}
