use nalgebra::DMatrix;
use serde::Serialize;

use super::{GraphError, LinkGraph};

/// Eigenvalues closer than this are reported as one value.
pub const SPECTRUM_TOLERANCE: f64 = 1e-9;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct EigenvalueClass {
    pub value: f64,
    pub multiplicity: usize,
}

/// Spectrum of the random-walk operator `D = A / degree`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Spectrum {
    /// Distinct eigenvalues in decreasing order.
    pub eigenvalues: Vec<EigenvalueClass>,
    /// `1 - λ`, with `λ` the second largest eigenvalue counted with multiplicity.
    pub lambda1: f64,
}

impl Spectrum {
    pub fn total_multiplicity(&self) -> usize {
        self.eigenvalues.iter().map(|e| e.multiplicity).sum()
    }

    pub fn multiplicity_of(&self, value: f64, tol: f64) -> usize {
        self.eigenvalues
            .iter()
            .filter(|e| (e.value - value).abs() <= tol)
            .map(|e| e.multiplicity)
            .sum()
    }
}

pub fn random_walk_spectrum(g: &LinkGraph) -> Result<Spectrum, GraphError> {
    let n = g.n();
    if n == 0 {
        return Err(GraphError::Empty);
    }
    let degree = g.regular_degree().ok_or(GraphError::NotRegular)?;
    if degree == 0 {
        return Err(GraphError::NotRegular);
    }
    let mut m = DMatrix::<f64>::zeros(n, n);
    for (u, v) in g.edges() {
        m[(u, v)] = 1.0 / degree as f64;
        m[(v, u)] = 1.0 / degree as f64;
    }
    let mut values: Vec<f64> = m.symmetric_eigen().eigenvalues.iter().copied().collect();
    values.sort_by(|a, b| b.total_cmp(a));
    let lambda1 = 1.0 - values.get(1).copied().unwrap_or(values[0]);
    let mut classes: Vec<EigenvalueClass> = Vec::new();
    for v in values {
        match classes.last_mut() {
            Some(last) if (last.value - v).abs() <= SPECTRUM_TOLERANCE => {
                // Running mean keeps the representative centred in its cluster.
                last.value = (last.value * last.multiplicity as f64 + v) / (last.multiplicity + 1) as f64;
                last.multiplicity += 1;
            }
            _ => classes.push(EigenvalueClass {
                value: v,
                multiplicity: 1,
            }),
        }
    }
    for c in &mut classes {
        if c.value.abs() < SPECTRUM_TOLERANCE {
            c.value = 0.0;
        }
    }
    Ok(Spectrum {
        eigenvalues: classes,
        lambda1,
    })
}
