//! JSON and CSV views of the core types.
//!
//! Schemas:
//!
//! * sequences: JSON arrays of integers, e.g. `[1, 3, 6, 10, 8, 7]`;
//! * stable ideals: `{"n": 3, "slices": {"4": ["x1^4", ...]}}` with only
//!   the minimal generators serialized; spans are recomputed on load;
//! * Betti diagrams: `{"q,j": value}` maps;
//! * verdicts: `{"status": "...", "certificates": [{"kind", "d", "detail",
//!   "cite"}]}`;
//! * polynomial ideals: `{"n": 3, "generators": [[[num, den, [e1,e2,e3]],
//!   ...], ...]}` with exact integer numerators and denominators.
//!   Coefficients are normalized to lowest terms with a positive
//!   denominator, so emit-parse round trips are exact.

use std::collections::BTreeMap;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::Zero;
use serde_json::{json, Map, Number, Value};
use thiserror::Error;

use oseq_core::betti::BettiDiagram;
use oseq_core::level::{LevelVerdict, WlpCheck};
use oseq_core::lexideal::StableIdeal;
use oseq_core::monomial::{degree_span, Monomial, MonomialSet};
use oseq_core::oracle::{CancellationReport, GradedIdeal, MonomialSlices, Polynomial};
use oseq_core::osequence::{BinomialExpansion, OSequence, ShapeReport};

/// Errors raised while reading the JSON formats.
#[derive(Debug, Error)]
pub enum FormatError {
    #[error("malformed {context}: {detail}")]
    Malformed { context: &'static str, detail: String },
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

fn malformed(context: &'static str, detail: impl Into<String>) -> FormatError {
    FormatError::Malformed { context, detail: detail.into() }
}

/// Exact unsigned integer as a JSON number.
pub fn biguint_json(v: &BigUint) -> Value {
    Value::Number(Number::from_str(&v.to_string()).expect("decimal digits"))
}

/// Exact signed integer as a JSON number.
pub fn bigint_json(v: &BigInt) -> Value {
    Value::Number(Number::from_str(&v.to_string()).expect("decimal digits"))
}

fn number_to_bigint(value: &Value, context: &'static str) -> Result<BigInt, FormatError> {
    match value {
        Value::Number(n) => BigInt::from_str(&n.to_string())
            .map_err(|_| malformed(context, format!("non-integer number {n}"))),
        other => Err(malformed(context, format!("expected an integer, found {other}"))),
    }
}

/// A sequence as a JSON array of exact integers.
pub fn sequence_json(h: &OSequence) -> Value {
    Value::Array(h.entries().iter().map(biguint_json).collect())
}

/// A plain integer vector as a JSON array.
pub fn u64s_json(values: &[u64]) -> Value {
    Value::Array(values.iter().map(|&v| json!(v)).collect())
}

/// Signed integer vector (first differences) as a JSON array.
pub fn bigints_json(values: &[BigInt]) -> Value {
    Value::Array(values.iter().map(bigint_json).collect())
}

/// The shape report of a sequence.
pub fn shape_json(report: &ShapeReport) -> Value {
    json!({
        "theta": report.theta,
        "alpha": report.alpha,
        "strictly_unimodal": report.strictly_unimodal,
        "plateaus": report.plateaus,
        "delta": bigints_json(&report.delta),
    })
}

/// A binomial expansion as `{"index": i, "terms": [[m, j], ...]}`.
pub fn expansion_json(e: &BinomialExpansion) -> Value {
    json!({
        "index": e.index(),
        "terms": e
            .terms()
            .iter()
            .map(|(m, j)| Value::Array(vec![biguint_json(m), json!(j)]))
            .collect::<Vec<_>>(),
    })
}

/// Stable ideal as minimal generators per degree.
pub fn stable_ideal_json(ideal: &StableIdeal) -> Value {
    let mut slices = Map::new();
    for d in 0..=ideal.max_degree() {
        let gens = ideal.minimal_generators(d).expect("materialized");
        if gens.is_empty() {
            continue;
        }
        slices.insert(
            d.to_string(),
            Value::Array(gens.iter().map(|m| json!(m.to_string())).collect()),
        );
    }
    json!({ "n": ideal.n(), "slices": Value::Object(slices) })
}

/// Monomial slices (for sampled initial ideals) use the same schema as
/// stable ideals: minimal generators per degree.
pub fn slices_json(slices: &MonomialSlices) -> Value {
    let mut out = Map::new();
    let mut previous: Option<&MonomialSet> = None;
    for (d, slice) in slices.slices.iter().enumerate() {
        let span = previous
            .map(|p| degree_span(p.members(), d as u32, slices.n))
            .unwrap_or_else(|| MonomialSet::empty(slices.n, d as u32));
        let gens: Vec<Value> = slice
            .iter()
            .filter(|m| !span.contains(m))
            .map(|m| json!(m.to_string()))
            .collect();
        if !gens.is_empty() {
            out.insert(d.to_string(), Value::Array(gens));
        }
        previous = Some(slice);
    }
    json!({ "n": slices.n, "slices": Value::Object(out) })
}

/// Reads a stable ideal from its minimal-generator form, rebuilding every
/// slice by degree spans. Materializes through `max(highest generator
/// degree + 1, requested)`.
pub fn stable_ideal_from_json(
    value: &Value,
    materialize_to: Option<usize>,
) -> Result<StableIdeal, FormatError> {
    let context = "stable ideal";
    let n = value
        .get("n")
        .and_then(Value::as_u64)
        .ok_or_else(|| malformed(context, "missing variable count \"n\""))? as usize;
    let slices_obj = value
        .get("slices")
        .and_then(Value::as_object)
        .ok_or_else(|| malformed(context, "missing \"slices\" object"))?;
    let mut generators: BTreeMap<usize, Vec<Monomial>> = BTreeMap::new();
    for (key, list) in slices_obj {
        let degree: usize = key
            .parse()
            .map_err(|_| malformed(context, format!("bad degree key {key:?}")))?;
        let list = list
            .as_array()
            .ok_or_else(|| malformed(context, "slice values must be arrays"))?;
        let mut gens = Vec::with_capacity(list.len());
        for m in list {
            let text = m
                .as_str()
                .ok_or_else(|| malformed(context, "monomials must be strings"))?;
            let mono = Monomial::parse(text, n)
                .map_err(|e| malformed(context, format!("{text:?}: {e}")))?;
            if mono.degree() as usize != degree {
                return Err(malformed(context, format!("{text:?} is not of degree {degree}")));
            }
            gens.push(mono);
        }
        generators.insert(degree, gens);
    }
    let highest = generators.keys().max().copied().unwrap_or(0);
    let top = materialize_to.unwrap_or(0).max(highest + 1);
    let mut slices: Vec<MonomialSet> = Vec::with_capacity(top + 1);
    for d in 0..=top {
        let mut members: Vec<Monomial> = generators.get(&d).cloned().unwrap_or_default();
        if d > 0 {
            members.extend(degree_span(slices[d - 1].members(), d as u32, n).iter().cloned());
        }
        slices.push(
            MonomialSet::new(n, d as u32, members)
                .map_err(|e| malformed(context, e.to_string()))?,
        );
    }
    StableIdeal::from_slices(n, slices).map_err(|e| malformed(context, e.to_string()))
}

/// Betti diagram as a `{"q,j": value}` map.
pub fn betti_json(diagram: &BettiDiagram) -> Value {
    let mut map = Map::new();
    for (q, j, v) in diagram.entries() {
        map.insert(format!("{q},{j}"), json!(v));
    }
    Value::Object(map)
}

/// Verdict JSON with one entry per firing certificate.
pub fn verdict_json(verdict: &LevelVerdict) -> Value {
    json!({
        "status": verdict.status.name(),
        "certificates": verdict
            .certificates
            .iter()
            .map(|c| {
                json!({
                    "kind": c.kind.name(),
                    "d": c.degree,
                    "detail": c.detail,
                    "cite": c.citation,
                })
            })
            .collect::<Vec<_>>(),
    })
}

/// Human-readable verdict.
pub fn verdict_text(verdict: &LevelVerdict) -> String {
    let mut out = format!("status: {}\n", verdict.status.name());
    for c in &verdict.certificates {
        out.push_str(&format!(
            "  - {} at d = {}: {} [{}]\n",
            c.kind.name(),
            c.degree,
            c.detail,
            c.citation
        ));
    }
    out
}

/// WLP check outcome.
pub fn wlp_json(check: &WlpCheck) -> Value {
    match check {
        WlpCheck::Pass => json!({ "status": "pass" }),
        WlpCheck::Fail { clause, degree, detail } => json!({
            "status": "fail",
            "clause": clause.name(),
            "d": degree,
            "detail": detail,
        }),
    }
}

/// Polynomial ideal with exact rational coefficients:
/// `{"n": 3, "generators": [[[num, den, [exponents]], ...], ...]}`.
pub fn ideal_json(ideal: &GradedIdeal) -> Value {
    let generators: Vec<Value> = ideal
        .generators()
        .iter()
        .map(|g| {
            Value::Array(
                g.terms()
                    .map(|(m, c)| {
                        Value::Array(vec![
                            bigint_json(c.numer()),
                            bigint_json(c.denom()),
                            json!(m.exponents()),
                        ])
                    })
                    .collect(),
            )
        })
        .collect();
    json!({ "n": ideal.n(), "generators": generators })
}

/// Parses the polynomial-ideal schema.
pub fn ideal_from_json(value: &Value) -> Result<GradedIdeal, FormatError> {
    let context = "polynomial ideal";
    let n = value
        .get("n")
        .and_then(Value::as_u64)
        .ok_or_else(|| malformed(context, "missing variable count \"n\""))? as usize;
    let generators = value
        .get("generators")
        .and_then(Value::as_array)
        .ok_or_else(|| malformed(context, "missing \"generators\" array"))?;
    let mut gens = Vec::with_capacity(generators.len());
    for g in generators {
        let terms = g
            .as_array()
            .ok_or_else(|| malformed(context, "each generator must be an array of terms"))?;
        let mut poly_terms = Vec::with_capacity(terms.len());
        for term in terms {
            let triple = term
                .as_array()
                .filter(|t| t.len() == 3)
                .ok_or_else(|| malformed(context, "each term must be [num, den, exponents]"))?;
            let numer = number_to_bigint(&triple[0], context)?;
            let denom = number_to_bigint(&triple[1], context)?;
            if denom.is_zero() {
                return Err(malformed(context, "zero denominator"));
            }
            let exps = triple[2]
                .as_array()
                .ok_or_else(|| malformed(context, "exponents must be an array"))?;
            if exps.len() != n {
                return Err(malformed(context, format!("expected {n} exponents")));
            }
            let exps: Vec<u32> = exps
                .iter()
                .map(|e| {
                    e.as_u64()
                        .and_then(|v| u32::try_from(v).ok())
                        .ok_or_else(|| malformed(context, "exponents must be small nonnegative"))
                })
                .collect::<Result<_, _>>()?;
            let mono = Monomial::from_exponents(&exps)
                .map_err(|e| malformed(context, e.to_string()))?;
            poly_terms.push((mono, BigRational::new(numer, denom)));
        }
        gens.push(Polynomial::from_terms(n, poly_terms));
    }
    GradedIdeal::new(n, gens).map_err(|e| malformed(context, e.to_string()))
}

/// Report of the cancellation cross-check.
pub fn cancellation_json(report: &CancellationReport) -> Value {
    json!({
        "chain_holds": report.chain_holds,
        "alternating_identity_holds": report.alternating_identity_holds,
        "failures": report.failures,
        "betti_ideal": betti_json(&report.betti_ideal),
        "betti_gin": betti_json(&report.betti_gin),
        "betti_lex": betti_json(&report.betti_lex),
    })
}

/// One CSV atlas row per classified sequence:
/// `sequence,status,certificates,witness_degrees`.
pub fn atlas_record(h: &OSequence, verdict: &LevelVerdict) -> [String; 4] {
    let kinds: Vec<&str> = verdict.certificates.iter().map(|c| c.kind.name()).collect();
    let degrees: Vec<String> = verdict
        .certificates
        .iter()
        .map(|c| c.degree.to_string())
        .collect();
    [
        h.to_string(),
        verdict.status.name().to_string(),
        kinds.join(";"),
        degrees.join(";"),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;
    use oseq_core::lexideal::lex_segment_ideal;

    fn seq(entries: &[u64]) -> OSequence {
        OSequence::from_u64(entries).unwrap()
    }

    #[test]
    fn stable_ideal_round_trip() {
        let ideal = lex_segment_ideal(&seq(&[1, 3, 6, 10, 8, 7]), 3).unwrap();
        let value = stable_ideal_json(&ideal);
        let back = stable_ideal_from_json(&value, Some(ideal.max_degree())).unwrap();
        for d in 0..=ideal.max_degree().min(back.max_degree()) {
            assert_eq!(ideal.slice(d).unwrap(), back.slice(d).unwrap());
        }
        // emission is stable
        assert_eq!(value, stable_ideal_json(&back));
    }

    #[test]
    fn ideal_round_trip_is_idempotent() {
        let raw = serde_json::json!({
            "n": 3,
            "generators": [
                [[1, 1, [2, 0, 0]], [-3, 2, [0, 1, 1]]],
                [[5, 1, [0, 0, 2]]]
            ]
        });
        let ideal = ideal_from_json(&raw).unwrap();
        let emitted = ideal_json(&ideal);
        let again = ideal_from_json(&emitted).unwrap();
        assert_eq!(emitted, ideal_json(&again));
    }

    #[test]
    fn big_coefficients_survive() {
        let big = "123456789012345678901234567890";
        let raw: Value = serde_json::from_str(&format!(
            "{{\"n\": 2, \"generators\": [[[{big}, 1, [1, 0]]]]}}"
        ))
        .unwrap();
        let ideal = ideal_from_json(&raw).unwrap();
        let emitted = serde_json::to_string(&ideal_json(&ideal)).unwrap();
        assert!(emitted.contains(big));
    }

    #[test]
    fn sequence_json_shape() {
        let value = sequence_json(&seq(&[1, 3, 6]));
        assert_eq!(value.to_string(), "[1,3,6]");
    }
}
