use serde::{Deserialize, Serialize};
use serde_json::Value;

use super::{make_algebra, LieAlgebra, Triangular};
use crate::error::{Error, Result};
use crate::qlinalg::{format_rational, parse_rational, Rational};

#[derive(Debug, Serialize, Deserialize)]
struct TriangularFile {
    nplus: Vec<usize>,
    h: Vec<usize>,
    nminus: Vec<usize>,
    x_theta_plus: Vec<Value>,
    x_theta_minus: Vec<Value>,
    theta: Vec<Value>,
}

#[derive(Debug, Serialize, Deserialize)]
struct AlgebraFile {
    dim: usize,
    basis: Vec<String>,
    brackets: Vec<(usize, usize, Vec<(usize, Value)>)>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    triangular: Option<TriangularFile>,
}

/// Accepts `"p/q"` strings and plain JSON integers.
pub fn rational_from_json(v: &Value) -> Result<Rational> {
    match v {
        Value::String(s) => parse_rational(s),
        Value::Number(n) if n.is_i64() => Ok(Rational::from_integer(n.as_i64().unwrap().into())),
        _ => Err(Error::Parse(format!("expected a rational as \"p/q\", got {v}"))),
    }
}

pub fn rationals_from_json(vs: &[Value]) -> Result<Vec<Rational>> {
    vs.iter().map(rational_from_json).collect()
}

pub fn rationals_to_json(xs: &[Rational]) -> Vec<Value> {
    xs.iter().map(|x| Value::String(format_rational(x))).collect()
}

pub fn algebra_from_value(v: &Value) -> Result<LieAlgebra> {
    let file: AlgebraFile = serde_json::from_value(v.clone()).map_err(|e| Error::Parse(e.to_string()))?;
    let mut brackets = Vec::with_capacity(file.brackets.len());
    for (i, j, terms) in file.brackets {
        let terms = terms
            .iter()
            .map(|(k, c)| Ok((*k, rational_from_json(c)?)))
            .collect::<Result<Vec<_>>>()?;
        brackets.push((i, j, terms));
    }
    let alg = make_algebra(file.dim, file.basis, brackets)?;
    match file.triangular {
        None => Ok(alg),
        Some(t) => alg.with_triangular(Triangular {
            nplus: t.nplus,
            h: t.h,
            nminus: t.nminus,
            x_theta_plus: rationals_from_json(&t.x_theta_plus)?,
            x_theta_minus: rationals_from_json(&t.x_theta_minus)?,
            theta: rationals_from_json(&t.theta)?,
        }),
    }
}

pub fn algebra_from_json(text: &str) -> Result<LieAlgebra> {
    let v: Value = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    algebra_from_value(&v)
}

/// Writes the pairs `i < j` with nonzero bracket.
pub fn algebra_to_value(alg: &LieAlgebra) -> Value {
    let brackets = alg
        .nonzero_brackets()
        .into_iter()
        .map(|(i, j, v)| {
            let terms = v.iter().map(|(k, c)| (*k, Value::String(format_rational(c)))).collect();
            (i, j, terms)
        })
        .collect();
    let triangular = alg.triangular().map(|t| TriangularFile {
        nplus: t.nplus.clone(),
        h: t.h.clone(),
        nminus: t.nminus.clone(),
        x_theta_plus: rationals_to_json(&t.x_theta_plus),
        x_theta_minus: rationals_to_json(&t.x_theta_minus),
        theta: rationals_to_json(&t.theta),
    });
    let file = AlgebraFile { dim: alg.dim(), basis: alg.names().to_vec(), brackets, triangular };
    serde_json::to_value(file).expect("algebra serializes")
}
