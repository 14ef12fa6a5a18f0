use std::fs;
use std::sync::Arc;

use curalg::curmod::io::{module_from_value, module_parts_from_value};
use curalg::curmod::{evaluation_module, PairModule};
use curalg::freelie::TensorPoly;
use curalg::liealg::io::{algebra_from_value, rational_from_json};
use curalg::liealg::{adjoint_rep, builtin_algebra, sl2_irrep, trivial, LieAlgebra, Rep};
use curalg::qlinalg::{parse_rational, Rational};
use curalg::{Error, Result};
use serde_json::Value;

/// An algebra plus the tag it was loaded from, when it has one.
#[derive(Clone)]
pub struct LoadedAlgebra {
    pub algebra: Arc<LieAlgebra>,
    pub natural: Option<Rep>,
    pub tag: Option<String>,
}

pub fn read_json(path: &str) -> Result<Value> {
    let text = fs::read_to_string(path).map_err(|e| Error::Parse(format!("{path}: {e}")))?;
    serde_json::from_str(&text).map_err(|e| Error::Parse(format!("{path}: {e}")))
}

/// `sl2`, `builtin:sl2`, or a path to a structure-constant file.
pub fn load_algebra(spec: &str) -> Result<LoadedAlgebra> {
    let tag = spec.strip_prefix("builtin:").unwrap_or(spec);
    if let Ok((algebra, natural)) = builtin_algebra(tag) {
        return Ok(LoadedAlgebra { algebra, natural: Some(natural), tag: Some(tag.to_string()) });
    }
    if spec.starts_with("builtin:") {
        return Err(Error::Parse(format!("unknown algebra tag {tag:?}")));
    }
    let algebra = Arc::new(algebra_from_value(&read_json(spec)?)?);
    Ok(LoadedAlgebra { algebra, natural: None, tag: None })
}

pub fn parse_point(text: &str) -> Result<Rational> {
    parse_rational(text.trim())
}

pub fn parse_list(text: &str) -> Result<Vec<Rational>> {
    if text.trim().is_empty() {
        return Ok(Vec::new());
    }
    text.split(',').map(parse_point).collect()
}

/// A vector of `𝔞`: a basis element name or comma-separated coordinates.
pub fn parse_element(alg: &LieAlgebra, text: &str) -> Result<Vec<Rational>> {
    if let Some(i) = alg.names().iter().position(|n| n == text) {
        let mut v = vec![Rational::from_integer(0.into()); alg.dim()];
        v[i] = Rational::from_integer(1.into());
        return Ok(v);
    }
    let v = parse_list(text)?;
    if v.len() != alg.dim() {
        return Err(Error::Parse(format!("expected a basis name or {} coordinates", alg.dim())));
    }
    Ok(v)
}

enum ModuleSpec {
    /// `builtin:trivial`, taking the algebra from context.
    Trivial,
    Builtin { algebra: String, rep: String, point: Rational },
    File(String),
}

fn parse_module_spec(spec: &str) -> Result<ModuleSpec> {
    let Some(body) = spec.strip_prefix("builtin:") else {
        return Ok(ModuleSpec::File(spec.to_string()));
    };
    if body == "trivial" {
        return Ok(ModuleSpec::Trivial);
    }
    let (head, point) = match body.split_once(':') {
        Some((h, p)) => (h, parse_point(p)?),
        None => (body, Rational::from_integer(0.into())),
    };
    let parts: Vec<&str> = head.split('-').collect();
    let bad = || Error::Parse(format!("builtin module {spec:?}: expected <algebra>-<nat|ad|triv|v<n>>-eval:<a>"));
    match parts.as_slice() {
        [alg, "trivial"] => Ok(ModuleSpec::Builtin { algebra: alg.to_string(), rep: "triv".into(), point }),
        [alg, rep, "eval"] | [alg, rep] => Ok(ModuleSpec::Builtin { algebra: alg.to_string(), rep: rep.to_string(), point }),
        _ => Err(bad()),
    }
}

fn builtin_rep(loaded: &LoadedAlgebra, rep: &str) -> Result<Rep> {
    let alg = &loaded.algebra;
    match rep {
        "nat" | "natural" => loaded.natural.clone().ok_or_else(|| Error::Parse("no natural representation".into())),
        "ad" | "adjoint" => Ok(adjoint_rep(alg)),
        "triv" | "trivial" => Ok(trivial(alg.clone(), 1)),
        _ => {
            let n = rep
                .strip_prefix('v')
                .and_then(|n| n.parse::<usize>().ok())
                .ok_or_else(|| Error::Parse(format!("unknown representation {rep:?}")))?;
            if loaded.tag.as_deref() != Some("sl2") {
                return Err(Error::Parse("v<n> representations exist for sl2 only".into()));
            }
            sl2_irrep(alg.clone(), n)
        }
    }
}

/// Module file contents: either a bare module object or a `build` report
/// with a `module` field.
pub fn module_value(path: &str) -> Result<Value> {
    let v = read_json(path)?;
    Ok(match v.get("module") {
        Some(m) => m.clone(),
        None => v,
    })
}

fn load_one(spec: &ModuleSpec, context: Option<&Arc<LieAlgebra>>, bound: usize) -> Result<PairModule> {
    match spec {
        ModuleSpec::Trivial => {
            let alg = match context {
                Some(a) => a.clone(),
                None => load_algebra("sl2")?.algebra,
            };
            evaluation_module(&trivial(alg, 1), &Rational::from_integer(0.into()))
        }
        ModuleSpec::Builtin { algebra, rep, point } => {
            let loaded = load_algebra(algebra)?;
            evaluation_module(&builtin_rep(&loaded, rep)?, point)
        }
        ModuleSpec::File(path) => module_from_value(&module_value(path)?, bound),
    }
}

pub fn load_module(spec: &str, bound: usize) -> Result<PairModule> {
    load_one(&parse_module_spec(spec)?, None, bound)
}

/// Two modules over one algebra; a bare `builtin:trivial` takes the
/// algebra of the other one.
pub fn load_pair(s1: &str, s2: &str, bound: usize) -> Result<(PairModule, PairModule)> {
    let (p1, p2) = (parse_module_spec(s1)?, parse_module_spec(s2)?);
    match (&p1, &p2) {
        (ModuleSpec::Trivial, ModuleSpec::Trivial) => Ok((load_one(&p1, None, bound)?, load_one(&p2, None, bound)?)),
        (ModuleSpec::Trivial, _) => {
            let m2 = load_one(&p2, None, bound)?;
            Ok((load_one(&p1, Some(m2.algebra()), bound)?, m2))
        }
        _ => {
            let m1 = load_one(&p1, None, bound)?;
            let m2 = load_one(&p2, Some(m1.algebra()), bound)?;
            Ok((m1, m2))
        }
    }
}

/// Unverified `(ρ, η)` from a file, for `verify`.
pub fn load_parts(path: &str) -> Result<(Rep, Vec<curalg::qlinalg::MatrixQ>)> {
    module_parts_from_value(&module_value(path)?)
}

/// Generators `[[[word], "c"], …]`, one list per homogeneous polynomial.
pub fn load_generators(path: &str) -> Result<Vec<TensorPoly>> {
    let v = read_json(path)?;
    let polys = v.as_array().ok_or_else(|| Error::Parse("generators must be a list".into()))?;
    polys
        .iter()
        .map(|p| {
            let terms = p.as_array().ok_or_else(|| Error::Parse("a generator is a list of terms".into()))?;
            let mut parsed = Vec::new();
            for t in terms {
                let pair = t.as_array().filter(|a| a.len() == 2).ok_or_else(|| Error::Parse("a term is [word, coefficient]".into()))?;
                let word = pair[0]
                    .as_array()
                    .ok_or_else(|| Error::Parse("a word is a list of indices".into()))?
                    .iter()
                    .map(|i| i.as_u64().map(|i| i as usize).ok_or_else(|| Error::Parse("bad letter".into())))
                    .collect::<Result<Vec<_>>>()?;
                parsed.push((word, rational_from_json(&pair[1])?));
            }
            let degree = parsed.first().map_or(0, |(w, _)| w.len());
            TensorPoly::from_terms(degree, parsed)
        })
        .collect()
}
