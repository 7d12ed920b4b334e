//! Stable JSON documents for every type that crosses the CLI boundary.
//!
//! Mathematical values (coefficients, rationals) are strings such as `"-3/2"`;
//! structural integers (`n`, `k`, `case`, `dim`, `schema_version`) are JSON
//! numbers. Objects use sorted keys, so serialization is deterministic.

use std::collections::BTreeMap;

use serde_json::{json, Map, Value};

use crate::chamber::{ChamberVerdict, DivisorCombo, Generator, NMode};
use crate::conic::{Modification, PluckerConic};
use crate::kronecker::{KroneckerModule, LinearForm, StabilityClass, Stratum, Witness};
use crate::linalg::{parse_rat, rat_to_string, BinaryForm, ProjPoint, Rat, RootStructure};
use crate::{Error, QPoly, Result};

pub const SCHEMA_VERSION: u64 = 1;

fn parse_err(msg: impl Into<String>) -> Error {
    Error::Parse(msg.into())
}

/// Adds `schema_version` to an object.
pub fn versioned(mut v: Value) -> Value {
    if let Value::Object(m) = &mut v {
        m.insert("schema_version".into(), json!(SCHEMA_VERSION));
    }
    v
}

/// Rejects documents that declare a different schema version.
pub fn check_version(v: &Value) -> Result<()> {
    match v.get("schema_version") {
        None => Ok(()),
        Some(s) if s.as_u64() == Some(SCHEMA_VERSION) => Ok(()),
        Some(s) => Err(parse_err(format!("unsupported schema_version {s}"))),
    }
}

pub fn rat_to_json(r: &Rat) -> Value {
    Value::String(rat_to_string(r))
}

/// Accepts `"p/q"` strings and, for convenience, JSON integers.
pub fn rat_from_json(v: &Value) -> Result<Rat> {
    match v {
        Value::String(s) => parse_rat(s),
        Value::Number(n) if n.is_i64() || n.is_u64() => parse_rat(&n.to_string()),
        _ => Err(parse_err(format!("expected a rational string, got {v}"))),
    }
}

fn array<'a>(v: &'a Value, what: &str) -> Result<&'a Vec<Value>> {
    v.as_array().ok_or_else(|| parse_err(format!("{what} must be an array")))
}

fn field<'a>(v: &'a Value, key: &str) -> Result<&'a Value> {
    v.get(key).ok_or_else(|| parse_err(format!("missing field {key:?}")))
}

fn rats_from_json(v: &Value, what: &str) -> Result<Vec<Rat>> {
    array(v, what)?.iter().map(rat_from_json).collect()
}

fn rats_to_json(r: &[Rat]) -> Value {
    Value::Array(r.iter().map(rat_to_json).collect())
}

pub fn qpoly_to_json(p: &QPoly) -> Value {
    Value::Array(p.coeffs().iter().map(|c| Value::String(c.to_string())).collect())
}

pub fn qpoly_from_json(v: &Value) -> Result<QPoly> {
    let coeffs = array(v, "polynomial")?
        .iter()
        .map(|c| match c {
            Value::String(s) => s.trim().parse().map_err(|_| parse_err(format!("bad integer {s:?}"))),
            Value::Number(n) if n.is_i64() || n.is_u64() => Ok(n.to_string().parse().unwrap()),
            _ => Err(parse_err(format!("bad polynomial coefficient {c}"))),
        })
        .collect::<Result<_>>()?;
    Ok(QPoly::new(coeffs))
}

pub fn form_to_json(f: &BinaryForm) -> Value {
    rats_to_json(f.coeffs())
}

pub fn form_from_json(v: &Value) -> Result<BinaryForm> {
    let c = rats_from_json(v, "binary form")?;
    if c.is_empty() {
        return Err(parse_err("binary form needs at least one coefficient"));
    }
    Ok(BinaryForm::new(c))
}

fn linear_from_json(v: &Value) -> Result<LinearForm> {
    let c = rats_from_json(v, "linear form")?;
    if c.is_empty() {
        return Err(parse_err("linear form needs at least one coefficient"));
    }
    Ok(LinearForm::new(c))
}

fn two<'a>(v: &'a Value, what: &str) -> Result<[&'a Value; 2]> {
    match array(v, what)?.as_slice() {
        [a, b] => Ok([a, b]),
        _ => Err(parse_err(format!("{what} must have exactly two entries"))),
    }
}

fn check_n(doc: &Value, n: usize) -> Result<()> {
    match doc.get("n") {
        None => Ok(()),
        Some(v) if v.as_u64() == Some(n as u64) => Ok(()),
        Some(v) => Err(parse_err(format!("declared n = {v} but the entries have n = {n}"))),
    }
}

/// `{"n": 3, "matrix": [[m11, m12], [m21, m22]]}` with each `m` the
/// coefficient array of `x₀ … x_n`.
pub fn module_to_json(m: &KroneckerModule) -> Value {
    let rows: Vec<Value> = m
        .entries()
        .iter()
        .map(|row| Value::Array(row.iter().map(|f| rats_to_json(f.coeffs())).collect()))
        .collect();
    versioned(json!({ "n": m.n(), "matrix": rows }))
}

pub fn module_from_json(doc: &Value) -> Result<KroneckerModule> {
    check_version(doc)?;
    let [r0, r1] = two(field(doc, "matrix")?, "matrix")?;
    let row = |r: &Value| -> Result<[LinearForm; 2]> {
        let [a, b] = two(r, "matrix row")?;
        Ok([linear_from_json(a)?, linear_from_json(b)?])
    };
    let m = KroneckerModule::new([row(r0)?, row(r1)?])?;
    check_n(doc, m.n())?;
    Ok(m)
}

fn pair_key(i: usize, j: usize) -> String {
    format!("{i},{j}")
}

fn parse_pair_key(k: &str) -> Result<(usize, usize)> {
    let bad = || parse_err(format!("bad Plücker index {k:?}"));
    let (i, j) = k.split_once(',').ok_or_else(bad)?;
    Ok((i.trim().parse().map_err(|_| bad())?, j.trim().parse().map_err(|_| bad())?))
}

/// `{"n": 3, "coords": {"0,1": [c0, c1, c2], ...}}`, coefficients of
/// `s², st, t²`.
pub fn conic_to_json(c: &PluckerConic) -> Value {
    let coords: Map<String, Value> = c
        .coords()
        .iter()
        .map(|(&(i, j), f)| (pair_key(i, j), form_to_json(f)))
        .collect();
    versioned(json!({ "n": c.n(), "coords": coords }))
}

pub fn conic_from_json(doc: &Value) -> Result<PluckerConic> {
    check_version(doc)?;
    let n = field(doc, "n")?.as_u64().ok_or_else(|| parse_err("n must be a nonnegative integer"))? as usize;
    let coords = field(doc, "coords")?
        .as_object()
        .ok_or_else(|| parse_err("coords must be an object"))?
        .iter()
        .map(|(k, v)| Ok((parse_pair_key(k)?, form_from_json(v)?)))
        .collect::<Result<BTreeMap<_, _>>>()?;
    PluckerConic::new(n, coords)
}

/// Same layout as a module, but each entry is an array over `λ`-degree of
/// linear forms.
pub fn family_to_json(f: &crate::conic::LambdaFamily) -> Value {
    let rows: Vec<Value> = f
        .entries()
        .iter()
        .map(|row| {
            Value::Array(
                row.iter()
                    .map(|poly| Value::Array(poly.iter().map(|l| rats_to_json(l.coeffs())).collect()))
                    .collect(),
            )
        })
        .collect();
    versioned(json!({ "n": f.n(), "matrix": rows }))
}

pub fn family_from_json(doc: &Value) -> Result<crate::conic::LambdaFamily> {
    check_version(doc)?;
    let [r0, r1] = two(field(doc, "matrix")?, "matrix")?;
    let entry = |e: &Value| -> Result<Vec<LinearForm>> {
        array(e, "family entry")?.iter().map(linear_from_json).collect()
    };
    let row = |r: &Value| -> Result<[Vec<LinearForm>; 2]> {
        let [a, b] = two(r, "matrix row")?;
        Ok([entry(a)?, entry(b)?])
    };
    let f = crate::conic::LambdaFamily::new([row(r0)?, row(r1)?])?;
    check_n(doc, f.n())?;
    Ok(f)
}

fn point_to_json(p: &ProjPoint) -> Value {
    let (s, t) = p.as_rats();
    json!([rat_to_string(&s), rat_to_string(&t)])
}

pub fn root_structure_to_json(r: &RootStructure) -> Value {
    match r {
        RootStructure::NoRoot => json!({ "kind": "none", "roots": [] }),
        RootStructure::SimpleRoot(p) => json!({ "kind": "simple", "roots": [point_to_json(p)] }),
        RootStructure::DoubleRoot(p) => json!({ "kind": "double", "roots": [point_to_json(p)] }),
        RootStructure::TwoDistinctRoots { roots, discriminant } => json!({
            "kind": "two_distinct",
            "roots": roots.iter().flat_map(|r| r.iter().map(point_to_json)).collect::<Vec<_>>(),
            "discriminant": rat_to_string(discriminant),
        }),
    }
}

fn witness_to_json(w: &Witness) -> Value {
    match w {
        Witness::ZeroColumn(v) => json!({ "kind": "zero_column", "vector": rats_to_json(v) }),
        Witness::ZeroRow(v) => json!({ "kind": "zero_row", "vector": rats_to_json(v) }),
        Witness::RankDrop(p) => json!({ "kind": "rank_drop", "point": point_to_json(p) }),
        Witness::MinorGcd(f) => json!({ "kind": "minor_gcd", "form": form_to_json(f) }),
    }
}

pub fn stability_to_json(c: &StabilityClass) -> Value {
    versioned(json!({
        "verdict": c.verdict.as_str(),
        "closed_orbit": c.closed_orbit,
        "stabilizer": c.stabilizer.map(|s| s.as_str()),
        "witness": c.witness.as_ref().map(witness_to_json),
    }))
}

pub fn stratum_to_json(s: Stratum) -> Value {
    versioned(json!({ "stratum": s.as_str() }))
}

pub fn modification_to_json(m: &Modification) -> Value {
    versioned(json!({
        "k": m.k,
        "conic": conic_to_json(&m.conic),
        "base_points": m.base_points.as_ref().map(root_structure_to_json),
    }))
}

pub fn coeffs_from_json(v: &Value) -> Result<Vec<(Generator, Rat)>> {
    v.as_object()
        .ok_or_else(|| parse_err("coeffs must be an object"))?
        .iter()
        .map(|(k, c)| Ok((k.parse()?, rat_from_json(c)?)))
        .collect()
}

/// `{"n_mode": "gt3", "coeffs": {"H11": "1", "T": "2/3"}}`.
pub fn combo_to_json(d: &DivisorCombo) -> Value {
    let coeffs: Map<String, Value> = d
        .coeffs()
        .iter()
        .map(|(g, c)| (g.as_str().to_string(), rat_to_json(c)))
        .collect();
    versioned(json!({ "n_mode": d.mode().as_str(), "coeffs": coeffs }))
}

pub fn combo_from_json(doc: &Value) -> Result<DivisorCombo> {
    check_version(doc)?;
    let mode = match doc.get("n_mode") {
        None => NMode::default(),
        Some(Value::String(s)) => s.parse()?,
        Some(v) => return Err(parse_err(format!("n_mode must be a string, got {v}"))),
    };
    DivisorCombo::new(coeffs_from_json(field(doc, "coeffs")?)?, mode)
}

pub fn verdict_to_json(v: &ChamberVerdict) -> Value {
    versioned(json!({
        "case": v.case,
        "model": v.model,
        "description": v.description,
        "cell": {
            "dim": v.cell.dim(),
            "generators": v.cell.generators().iter().map(|g| g.as_str()).collect::<Vec<_>>(),
        },
    }))
}

pub fn error_to_json(e: &Error) -> Value {
    versioned(json!({ "error": e.code(), "detail": e.to_string() }))
}
