use serde_json::{json, Value};
use thiserror::Error;

use crate::qlinalg::{format_rational, Rational};

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Every failure the library can report. `code()` gives the stable
/// upper-case identifier used in JSON reports.
#[derive(Debug, Clone, Error)]
pub enum Error {
    #[error("ambient dimensions differ ({0} vs {1})")]
    AmbientMismatch(usize, usize),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("bracket table is not antisymmetric at ({0}, {1})")]
    NotAntisymmetric(usize, usize),
    #[error("Jacobi identity fails on basis triple ({0}, {1}, {2})")]
    JacobiFails(usize, usize, usize),
    #[error("unsupported rank for {family}: n = {n}")]
    BadRank { family: String, n: usize },
    #[error("no nonzero invariant symmetric form")]
    NoForm,
    #[error("invariant symmetric forms are not unique (dimension {0})")]
    NotUnique(usize),
    #[error("the invariant symmetric form is degenerate")]
    Degenerate,
    #[error("{monomials} monomials exceed the cap of {cap}")]
    SizeLimit { monomials: usize, cap: usize },
    #[error("degree {degree} exceeds the configured degree cap {cap}")]
    DegreeLimit { degree: usize, cap: usize },
    #[error("tensor is not in the free Lie algebra")]
    NotInF,
    #[error("the Lie algebra is not perfect")]
    NotPerfect,
    #[error("rho is not a representation: bracket identity fails on ({0}, {1})")]
    C1Fails(usize, usize),
    #[error("eta is not equivariant on ({0}, {1})")]
    C2Fails(usize, usize),
    #[error("eta does not kill ker tau in degree {degree}")]
    C3Fails { degree: usize, vector: Vec<(Vec<usize>, Rational)> },
    #[error("x has no preimage under tau_{degree}")]
    NoPreimage { degree: usize },
    #[error("degree {degree} is not covered by the certificate (cover {cover})")]
    UncoveredDegree { degree: usize, cover: usize },
    #[error("the algebra carries no triangular data")]
    NoTriangularData,
    #[error("characteristic polynomial has non-rational roots")]
    IrrationalEigenvalue { charpoly: Vec<Rational> },
    #[error("ker tau is not contained in the ideal in degree {degree}")]
    KerTauNotContained { degree: usize },
    #[error("invariant complement in degree {degree} could not be determined")]
    OrbitNotStable { degree: usize },
    #[error("rho does not preserve the form (basis element {0})")]
    NotSkew(usize),
    #[error("subspace is not closed under {operator}({basis})")]
    NotClosed { operator: &'static str, basis: usize },
    #[error("eta_tilde does not satisfy the extension conditions")]
    NotInE,
    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    pub fn code(&self) -> &'static str {
        match self {
            Error::AmbientMismatch(..) => "AMBIENT_MISMATCH",
            Error::DimensionMismatch(_) => "DIMENSION_MISMATCH",
            Error::NotAntisymmetric(..) => "NOT_ANTISYMMETRIC",
            Error::JacobiFails(..) => "JACOBI_FAILS",
            Error::BadRank { .. } => "BAD_RANK",
            Error::NoForm => "NO_FORM",
            Error::NotUnique(_) => "NOT_UNIQUE",
            Error::Degenerate => "DEGENERATE",
            Error::SizeLimit { .. } | Error::DegreeLimit { .. } => "SIZE_LIMIT",
            Error::NotInF => "NOT_IN_F",
            Error::NotPerfect => "NOT_PERFECT",
            Error::C1Fails(..) => "C1_FAILS",
            Error::C2Fails(..) => "C2_FAILS",
            Error::C3Fails { .. } => "C3_FAILS",
            Error::NoPreimage { .. } => "NO_PREIMAGE",
            Error::UncoveredDegree { .. } => "UNCOVERED_DEGREE",
            Error::NoTriangularData => "NO_TRIANGULAR_DATA",
            Error::IrrationalEigenvalue { .. } => "IRRATIONAL_EIGENVALUE",
            Error::KerTauNotContained { .. } => "KER_TAU_NOT_CONTAINED",
            Error::OrbitNotStable { .. } => "ORBIT_NOT_STABLE",
            Error::NotSkew(_) => "NOT_SKEW",
            Error::NotClosed { .. } => "NOT_CLOSED",
            Error::NotInE => "NOT_IN_E",
            Error::Parse(_) => "PARSE_ERROR",
        }
    }

    /// Machine-readable witness for reports, `null` when the error has none.
    pub fn witness(&self) -> Value {
        match self {
            Error::AmbientMismatch(a, b) => json!([a, b]),
            Error::NotAntisymmetric(i, j)
            | Error::C1Fails(i, j)
            | Error::C2Fails(i, j) => json!([i, j]),
            Error::JacobiFails(i, j, k) => json!([i, j, k]),
            Error::NotUnique(d) => json!(d),
            Error::SizeLimit { monomials, cap } => json!({"monomials": monomials, "cap": cap}),
            Error::DegreeLimit { degree, cap } => json!({"degree": degree, "cap": cap}),
            Error::C3Fails { degree, vector } => json!({
                "degree": degree,
                "vector": vector
                    .iter()
                    .map(|(w, c)| json!([w, format_rational(c)]))
                    .collect::<Vec<_>>(),
            }),
            Error::NoPreimage { degree } => json!({"degree": degree}),
            Error::UncoveredDegree { degree, cover } => json!({"degree": degree, "cover": cover}),
            Error::IrrationalEigenvalue { charpoly } => {
                json!(charpoly.iter().map(format_rational).collect::<Vec<_>>())
            }
            Error::KerTauNotContained { degree } | Error::OrbitNotStable { degree } => {
                json!({"degree": degree})
            }
            Error::NotSkew(i) => json!(i),
            Error::NotClosed { operator, basis } => json!({"operator": operator, "basis": basis}),
            _ => Value::Null,
        }
    }
}
