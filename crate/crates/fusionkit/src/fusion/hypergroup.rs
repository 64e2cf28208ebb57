//! Hypergroups obtained by normalizing a fusion algebra: each basis element
//! is divided by its dimension so that every convolution's coefficients sum
//! to one, and the weight of an element is the square of its dimension.

use super::dimension::DimensionFunction;
use super::{BasisLabel, FusionAlgebra, FusionError};
use crate::Tol;

/// A finite hypergroup: nonnegative real convolution coefficients summing to
/// one in every product, plus per-element weights.
#[derive(Clone, Debug)]
pub struct Hypergroup {
    labels: Vec<BasisLabel>,
    unit: usize,
    involution: Vec<usize>,
    coefficients: Vec<Vec<Vec<f64>>>,
    weights: Vec<f64>,
}

impl Hypergroup {
    pub fn new(
        labels: Vec<BasisLabel>,
        involution: Vec<usize>,
        coefficients: Vec<Vec<Vec<f64>>>,
        weights: Vec<f64>,
    ) -> Self {
        Hypergroup { labels, unit: 0, involution, coefficients, weights }
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[BasisLabel] {
        &self.labels
    }

    pub fn unit(&self) -> usize {
        self.unit
    }

    pub fn involution(&self) -> &[usize] {
        &self.involution
    }

    pub fn coefficient(&self, i: usize, j: usize, k: usize) -> f64 {
        self.coefficients[i][j][k]
    }

    pub fn coefficients(&self) -> &Vec<Vec<Vec<f64>>> {
        &self.coefficients
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }
}

/// Hypergroup axioms, mirroring the fusion-algebra report style.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HypergroupAxiom {
    /// H1: associativity of the convolution.
    Associativity,
    /// H2: nonnegative coefficients summing to one in every product.
    RowSums,
    /// H3: the unit appears in `c_i c_j` iff `j = i*`; weights match `1/a_0`.
    UnitSupport,
}

impl std::fmt::Display for HypergroupAxiom {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let name = match self {
            HypergroupAxiom::Associativity => "H1 (associativity)",
            HypergroupAxiom::RowSums => "H2 (row sums)",
            HypergroupAxiom::UnitSupport => "H3 (unit support and weights)",
        };
        f.write_str(name)
    }
}

/// Checks H1-H3 on a hypergroup, returning the first violation per axiom.
pub fn check_hypergroup_axioms(h: &Hypergroup, tol: Tol) -> Vec<(HypergroupAxiom, Option<String>)> {
    let n = h.len();
    let mut out = Vec::new();

    let mut assoc = None;
    'assoc: for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                for l in 0..n {
                    let left: f64 =
                        (0..n).map(|s| h.coefficient(i, j, s) * h.coefficient(s, k, l)).sum();
                    let right: f64 =
                        (0..n).map(|t| h.coefficient(j, k, t) * h.coefficient(i, t, l)).sum();
                    if (left - right).abs() > tol.eq * (1.0 + left.abs()) {
                        assoc = Some(format!("H1 violated at ({i}, {j}, {k}) -> {l}"));
                        break 'assoc;
                    }
                }
            }
        }
    }
    out.push((HypergroupAxiom::Associativity, assoc));

    let mut rows = None;
    'rows: for i in 0..n {
        for j in 0..n {
            let mut sum = 0.0;
            for k in 0..n {
                let c = h.coefficient(i, j, k);
                if c < -tol.eq {
                    rows = Some(format!("negative coefficient at ({i}, {j}, {k})"));
                    break 'rows;
                }
                sum += c;
            }
            if (sum - 1.0).abs() > tol.eq {
                rows = Some(format!("H2 violated at ({i}, {j}): row sum {sum}"));
                break 'rows;
            }
        }
    }
    out.push((HypergroupAxiom::RowSums, rows));

    let mut unit = None;
    'unit: for i in 0..n {
        for j in 0..n {
            let c = h.coefficient(i, j, h.unit());
            let is_dual = j == h.involution()[i];
            if is_dual {
                if c <= tol.eq {
                    unit = Some(format!("H3 violated: unit missing from ({i}, {j})"));
                    break 'unit;
                }
                let w = 1.0 / c;
                if (w - h.weights()[i]).abs() > tol.eq * (1.0 + w.abs()) {
                    unit = Some(format!("weight of {i} is {}, expected {w}", h.weights()[i]));
                    break 'unit;
                }
            } else if c.abs() > tol.eq {
                unit = Some(format!("H3 violated: unit appears in ({i}, {j})"));
                break 'unit;
            }
        }
    }
    out.push((HypergroupAxiom::UnitSupport, unit));

    out
}

/// Normalizes a fusion algebra to its hypergroup: coefficients
/// `a[i][j][k] d(X_k) / (d(X_i) d(X_j))`, weights `d(X_i)^2`. The axioms
/// H1-H3 are asserted before returning.
pub fn normalize_to_hypergroup(
    alg: &FusionAlgebra,
    dims: &DimensionFunction,
    tol: Tol,
) -> Result<Hypergroup, FusionError> {
    let n = alg.len();
    let mut coefficients = vec![vec![vec![0.0f64; n]; n]; n];
    for (i, plane) in coefficients.iter_mut().enumerate() {
        for (j, row) in plane.iter_mut().enumerate() {
            for (k, slot) in row.iter_mut().enumerate() {
                let c = alg.coefficient(i, j, k) as f64 * dims.value(k)
                    / (dims.value(i) * dims.value(j));
                *slot = c.max(0.0);
            }
        }
    }
    let weights: Vec<f64> = dims.values().iter().map(|d| d * d).collect();
    let h = Hypergroup::new(alg.labels().to_vec(), alg.involution().to_vec(), coefficients, weights);
    for (axiom, failure) in check_hypergroup_axioms(&h, tol) {
        if let Some(reason) = failure {
            return Err(FusionError::AxiomViolation(format!("{axiom}: {reason}")));
        }
    }
    Ok(h)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fusion::dimension_function;

    #[test]
    fn group_algebra_normalization_is_the_identity() {
        let alg = FusionAlgebra::cyclic_group_algebra(3);
        let d = dimension_function(&alg, Tol::default()).unwrap();
        let h = normalize_to_hypergroup(&alg, &d, Tol::default()).unwrap();
        for i in 0..3 {
            for j in 0..3 {
                for k in 0..3 {
                    assert!((h.coefficient(i, j, k) - alg.coefficient(i, j, k) as f64).abs() < 1e-12);
                }
            }
        }
        assert!(h.weights().iter().all(|&w| (w - 1.0).abs() < 1e-12));
    }

    #[test]
    fn row_sums_are_one_and_weights_are_squared_dimensions() {
        let alg = crate::fusion::order_two_extension();
        let d = dimension_function(&alg, Tol::default()).unwrap();
        let h = normalize_to_hypergroup(&alg, &d, Tol::default()).unwrap();
        for i in 0..3 {
            for j in 0..3 {
                let sum: f64 = (0..3).map(|k| h.coefficient(i, j, k)).sum();
                assert!((sum - 1.0).abs() < 1e-9);
            }
        }
        assert!((h.weights()[2] - 2.0).abs() < 1e-9);
    }

    #[test]
    fn denormalization_recovers_the_integer_tensor() {
        let alg = crate::fusion::order_two_extension();
        let d = dimension_function(&alg, Tol::default()).unwrap();
        let h = normalize_to_hypergroup(&alg, &d, Tol::default()).unwrap();
        for i in 0..3 {
            for j in 0..3 {
                for k in 0..3 {
                    let back = h.coefficient(i, j, k) * d.value(i) * d.value(j) / d.value(k);
                    assert!((back - alg.coefficient(i, j, k) as f64).abs() < 1e-6);
                }
            }
        }
    }
}
