use std::sync::Arc;

use serde_json::{json, Map, Value};

use super::{verify_pair, Certificate, PairModule};
use crate::error::{Error, Result};
use crate::liealg::io::{algebra_from_value, algebra_to_value, rational_from_json};
use crate::liealg::{builtin_algebra, LieAlgebra, Rep};
use crate::qlinalg::{format_rational, MatrixQ};

pub fn matrix_to_json(m: &MatrixQ) -> Value {
    Value::Array(
        m.to_rows()
            .iter()
            .map(|row| Value::Array(row.iter().map(|x| Value::String(format_rational(x))).collect()))
            .collect(),
    )
}

pub fn matrix_from_json(v: &Value, n: usize) -> Result<MatrixQ> {
    let rows = v.as_array().ok_or_else(|| Error::Parse("matrix must be an array of rows".into()))?;
    if rows.len() != n {
        return Err(Error::Parse(format!("expected {n} rows, got {}", rows.len())));
    }
    let mut data = Vec::with_capacity(n * n);
    for row in rows {
        let row = row.as_array().ok_or_else(|| Error::Parse("matrix row must be an array".into()))?;
        if row.len() != n {
            return Err(Error::Parse(format!("expected {n} columns, got {}", row.len())));
        }
        for x in row {
            data.push(rational_from_json(x)?);
        }
    }
    Ok(MatrixQ::from_vec(n, n, data))
}

pub fn certificate_to_json(c: &Certificate) -> Value {
    match c {
        Certificate::ExactNilpotent(n) => json!({"kind": c.code(), "N": n}),
        Certificate::ExactByConstruction(tag) => json!({"kind": c.code(), "tag": tag}),
        Certificate::Bounded(r) => json!({"kind": c.code(), "R": r}),
    }
}

/// The algebra of a module file: a tag such as `"sl2"` or an inline
/// structure-constant object.
pub fn algebra_from_field(v: &Value) -> Result<Arc<LieAlgebra>> {
    match v {
        Value::String(tag) => Ok(builtin_algebra(tag)?.0),
        Value::Object(_) => Ok(Arc::new(algebra_from_value(v)?)),
        _ => Err(Error::Parse("\"algebra\" must be a tag or an object".into())),
    }
}

/// `ρ` and `η` as stored in a module file, before any verification.
pub fn module_parts_from_value(v: &Value) -> Result<(Rep, Vec<MatrixQ>)> {
    let obj = v.as_object().ok_or_else(|| Error::Parse("module file must be an object".into()))?;
    let field = |k: &str| obj.get(k).ok_or_else(|| Error::Parse(format!("missing field {k:?}")));
    let algebra = algebra_from_field(field("algebra")?)?;
    let n = field("dim")?.as_u64().ok_or_else(|| Error::Parse("\"dim\" must be a count".into()))? as usize;
    let mats = |k: &str| -> Result<Vec<MatrixQ>> {
        let arr = field(k)?.as_array().ok_or_else(|| Error::Parse(format!("{k:?} must be a list")))?;
        if arr.len() != algebra.dim() {
            return Err(Error::Parse(format!("{k:?} needs one matrix per basis element")));
        }
        arr.iter().map(|m| matrix_from_json(m, n)).collect()
    };
    let rho = Rep::from_parts(algebra.clone(), mats("rho")?)?;
    Ok((rho, mats("eta")?))
}

/// Loads and verifies a module; any stored certificate is recomputed.
pub fn module_from_value(v: &Value, bound: usize) -> Result<PairModule> {
    let (rho, eta) = module_parts_from_value(v)?;
    verify_pair(&rho, eta, bound)
}

pub fn module_to_value(m: &PairModule, algebra_tag: Option<&str>) -> Value {
    let mut out = Map::new();
    let alg = match algebra_tag {
        Some(tag) => Value::String(tag.into()),
        None => algebra_to_value(m.algebra()),
    };
    out.insert("algebra".into(), alg);
    out.insert("dim".into(), json!(m.dim()));
    out.insert("rho".into(), Value::Array(m.rho().matrices().iter().map(matrix_to_json).collect()));
    out.insert("eta".into(), Value::Array(m.eta().iter().map(matrix_to_json).collect()));
    out.insert("certificate".into(), certificate_to_json(m.certificate()));
    Value::Object(out)
}
