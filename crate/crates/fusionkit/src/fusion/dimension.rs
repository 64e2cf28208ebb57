//! The dimension function of a fusion algebra and its Haar element.

use super::{FusionAlgebra, FusionError};
use crate::Tol;

/// The unique positive algebra homomorphism to the reals, one value per
/// basis element.
#[derive(Clone, Debug)]
pub struct DimensionFunction {
    values: Vec<f64>,
}

impl DimensionFunction {
    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn value(&self, i: usize) -> f64 {
        self.values[i]
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Integer dimensions, when every value is integral within `tol.int`.
    pub fn as_integers(&self, tol: Tol) -> Result<Vec<u64>, FusionError> {
        self.values
            .iter()
            .enumerate()
            .map(|(i, &d)| {
                if (d - d.round()).abs() > tol.int || d.round() < 1.0 {
                    Err(FusionError::NonIntegralDimensions { index: i, value: d })
                } else {
                    Ok(d.round() as u64)
                }
            })
            .collect()
    }
}

/// Computes the dimension of each basis element as the largest real
/// eigenvalue of its left-multiplication matrix, then verifies the
/// homomorphism property `d(X_i) d(X_j) = sum_k a_ijk d(X_k)`.
pub fn dimension_function(alg: &FusionAlgebra, tol: Tol) -> Result<DimensionFunction, FusionError> {
    let n = alg.len();
    let mut values = Vec::with_capacity(n);
    for i in 0..n {
        // Left multiplication by X_i on the basis: column j holds X_i X_j.
        let matrix: Vec<Vec<f64>> = (0..n)
            .map(|k| (0..n).map(|j| alg.coefficient(i, j, k) as f64).collect())
            .collect();
        values.push(perron_frobenius_eigenvalue(&matrix));
    }
    if (values[alg.unit()] - 1.0).abs() > tol.eq {
        return Err(FusionError::NoPositiveSolution(format!(
            "unit has dimension {}",
            values[alg.unit()]
        )));
    }
    for i in 0..n {
        if values[i].is_nan() || values[i] < 1.0 - tol.eq {
            return Err(FusionError::NoPositiveSolution(format!(
                "basis element {i} has dimension {}",
                values[i]
            )));
        }
        for j in 0..n {
            let lhs = values[i] * values[j];
            let rhs: f64 = (0..n).map(|k| alg.coefficient(i, j, k) as f64 * values[k]).sum();
            if (lhs - rhs).abs() > tol.eq * (1.0 + lhs.abs()) {
                return Err(FusionError::NoPositiveSolution(format!(
                    "homomorphism fails at ({i}, {j}): {lhs} vs {rhs}"
                )));
            }
        }
    }
    Ok(DimensionFunction { values })
}

/// Largest real eigenvalue of a nonnegative matrix by power iteration on
/// `M + I` (the shift removes periodicity), refined to near machine
/// precision via the Rayleigh quotient.
fn perron_frobenius_eigenvalue(matrix: &[Vec<f64>]) -> f64 {
    let n = matrix.len();
    let mut v = vec![1.0f64; n];
    let mut eigenvalue = 0.0f64;
    for _ in 0..100_000 {
        let mut w = vec![0.0f64; n];
        for (k, row) in matrix.iter().enumerate() {
            for (j, &m) in row.iter().enumerate() {
                w[k] += m * v[j];
            }
            w[k] += v[k];
        }
        let norm = w.iter().map(|x| x * x).sum::<f64>().sqrt();
        if norm == 0.0 {
            return 0.0;
        }
        for x in &mut w {
            *x /= norm;
        }
        // Rayleigh quotient of the shifted matrix.
        let mut mw = vec![0.0f64; n];
        for (k, row) in matrix.iter().enumerate() {
            for (j, &m) in row.iter().enumerate() {
                mw[k] += m * w[j];
            }
            mw[k] += w[k];
        }
        let rayleigh: f64 = w.iter().zip(&mw).map(|(a, b)| a * b).sum();
        let delta = (rayleigh - 1.0 - eigenvalue).abs();
        eigenvalue = rayleigh - 1.0;
        v = w;
        if delta < 1e-15 * (1.0 + eigenvalue.abs()) {
            break;
        }
    }
    eigenvalue
}

/// Coefficients of the Haar element `R = sum_k d(X_k) X_k`. The absorbing
/// identity `X_i R = d(X_i) R` is verified for every basis element.
pub fn haar_element(
    alg: &FusionAlgebra,
    dims: &DimensionFunction,
    tol: Tol,
) -> Result<Vec<f64>, FusionError> {
    let n = alg.len();
    assert_eq!(dims.len(), n, "dimension function for a different algebra");
    let coeffs: Vec<f64> = dims.values().to_vec();
    for i in 0..n {
        for (l, &target) in coeffs.iter().enumerate() {
            let lhs: f64 = (0..n).map(|k| coeffs[k] * alg.coefficient(i, k, l) as f64).sum();
            let rhs = dims.value(i) * target;
            let residual = (lhs - rhs).abs();
            if residual > tol.eq * (1.0 + rhs.abs()) {
                return Err(FusionError::HaarViolation { index: i, residual });
            }
        }
    }
    Ok(coeffs)
}
