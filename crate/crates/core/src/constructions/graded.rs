use serde::Serialize;

use crate::curmod::PairModule;
use crate::error::{Error, Result};
use crate::liealg::Rep;

/// Dimensions of a graded module.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GradedModuleReport {
    pub total_dim: usize,
    pub per_degree_dims: Vec<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub isotypic_dims: Option<Vec<usize>>,
}

impl GradedModuleReport {
    pub fn from_degrees(degrees: &[usize]) -> Self {
        let top = degrees.iter().max().map_or(0, |m| m + 1);
        let mut per_degree_dims = vec![0; top];
        for &k in degrees {
            per_degree_dims[k] += 1;
        }
        Self { total_dim: degrees.len(), per_degree_dims, isotypic_dims: None }
    }
}

/// A constructed module whose basis vectors each sit in one degree.
#[derive(Clone, Debug)]
pub struct GradedModule {
    pub module: PairModule,
    pub degrees: Vec<usize>,
    pub report: GradedModuleReport,
}

impl GradedModule {
    pub(crate) fn new(module: PairModule, degrees: Vec<usize>) -> Self {
        let report = GradedModuleReport::from_degrees(&degrees);
        Self { module, degrees, report }
    }

    /// Basis indices of degree `k`.
    pub fn indices_of_degree(&self, k: usize) -> Vec<usize> {
        (0..self.degrees.len()).filter(|&i| self.degrees[i] == k).collect()
    }
}

/// Restriction to the span of the chosen basis vectors, which must be
/// stable under every `ρ(x)` and `η(x)`.
pub fn restrict_to_coordinates(g: &GradedModule, keep: &[usize]) -> Result<GradedModule> {
    let m = &g.module;
    let n = m.dim();
    let mut inside = vec![false; n];
    for &i in keep {
        inside[i] = true;
    }
    let check = |mats: &[crate::qlinalg::MatrixQ], operator: &'static str| -> Result<()> {
        for mat in mats {
            for &c in keep {
                for r in 0..n {
                    if !inside[r] && mat[(r, c)] != crate::qlinalg::zero() {
                        return Err(Error::NotClosed { operator, basis: c });
                    }
                }
            }
        }
        Ok(())
    };
    check(m.rho().matrices(), "rho")?;
    check(m.eta(), "eta")?;
    let rho = Rep::from_parts(
        m.algebra().clone(),
        m.rho().matrices().iter().map(|a| a.select(keep, keep)).collect(),
    )?;
    let eta = m.eta().iter().map(|a| a.select(keep, keep)).collect();
    let module = PairModule::from_parts(rho, eta, m.certificate().clone())?;
    Ok(GradedModule::new(module, keep.iter().map(|&i| g.degrees[i]).collect()))
}
