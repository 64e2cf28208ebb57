//! Irreducible character values via the class-algebra eigenvector method.
//!
//! The class sums of a finite group span a commutative algebra whose
//! structure constants are integers. For each class `C_i` the matrix
//! `A_i[j][k] = n_ijk` (the number of ways a fixed element of `C_k` factors
//! as a product from `C_i` and `C_j`) acts on the class space, and the
//! simultaneous eigenvectors of all `A_i` are the central characters. A
//! random real combination of the `A_i` separates the eigenspaces almost
//! surely; clustered eigenvalues trigger a retry with fresh coefficients.

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::group::FiniteGroup;
use crate::Tol;

use super::CharError;

/// Retry budget for the random-combination eigensolver.
pub const RETRY_BUDGET: usize = 20;

/// Returns unnormalized character rows `chi[t][class]`, in no particular
/// order. Each row has an integral degree and the rows are pairwise distinct;
/// orthogonality is validated by the caller.
pub(super) fn character_rows(group: &FiniteGroup, tol: Tol) -> Result<Vec<Vec<Complex64>>, CharError> {
    let r = group.class_count();
    if r == 1 {
        return Ok(vec![vec![Complex64::new(1.0, 0.0)]]);
    }
    let class_matrices = class_algebra_matrices(group);
    let class_sizes: Vec<f64> = group.classes().iter().map(|c| c.len() as f64).collect();
    let order = group.order() as f64;

    let mut last_err = String::from("no attempts made");
    for attempt in 0..RETRY_BUDGET {
        let mut rng = ChaCha8Rng::seed_from_u64(0xF0_5A_17 + attempt as u64);
        match attempt_rows(&class_matrices, &class_sizes, order, r, tol, &mut rng) {
            Ok(rows) => return Ok(rows),
            Err(e) => last_err = e,
        }
    }
    Err(CharError::NumericalFailure { attempts: RETRY_BUDGET, detail: last_err })
}

/// Class multiplication coefficients: `result[i][j][k] = n_ijk` with
/// `C_i C_j = sum_k n_ijk C_k` in the group algebra.
fn class_algebra_matrices(group: &FiniteGroup) -> Vec<DMatrix<f64>> {
    let r = group.class_count();
    let classes = group.classes();
    let mut mats = vec![DMatrix::<f64>::zeros(r, r); r];
    for i in 0..r {
        for j in 0..r {
            let mut hits = vec![0usize; r];
            for &x in &classes[i] {
                for &y in &classes[j] {
                    hits[group.class_of(group.mul(x, y))] += 1;
                }
            }
            for k in 0..r {
                debug_assert_eq!(hits[k] % classes[k].len(), 0);
                // A_i acts on central-character vectors: (A_i v)_j = sum_k n_ijk v_k.
                mats[i][(j, k)] = (hits[k] / classes[k].len()) as f64;
            }
        }
    }
    mats
}

fn attempt_rows(
    class_matrices: &[DMatrix<f64>],
    class_sizes: &[f64],
    order: f64,
    r: usize,
    tol: Tol,
    rng: &mut ChaCha8Rng,
) -> Result<Vec<Vec<Complex64>>, String> {
    let mut combo = DMatrix::<f64>::zeros(r, r);
    for m in class_matrices {
        let c: f64 = rng.gen_range(-1.0..1.0);
        combo += m * c;
    }
    let eigenvalues = combo.clone().complex_eigenvalues();
    let scale = 1.0 + eigenvalues.iter().map(|z| z.norm()).fold(0.0, f64::max);
    for s in 0..r {
        for t in (s + 1)..r {
            if (eigenvalues[s] - eigenvalues[t]).norm() < 1e-6 * scale {
                return Err(format!(
                    "eigenvalues {s} and {t} are not separated ({} vs {})",
                    eigenvalues[s], eigenvalues[t]
                ));
            }
        }
    }

    let complex_combo = combo.map(|x| Complex64::new(x, 0.0));
    let mut rows = Vec::with_capacity(r);
    for t in 0..r {
        let vector = eigenvector_for(&complex_combo, eigenvalues[t], rng)?;
        // Extract the central character from the simultaneous eigenvector.
        let pivot = vector
            .iter()
            .enumerate()
            .max_by(|a, b| a.1.norm().total_cmp(&b.1.norm()))
            .map(|(i, _)| i)
            .unwrap();
        let mut omega = Vec::with_capacity(r);
        for a in class_matrices {
            let image = a.map(|x| Complex64::new(x, 0.0)) * &vector;
            omega.push(image[pivot] / vector[pivot]);
        }
        // Degree from the second orthogonality relation, then class values.
        let weight: f64 = omega
            .iter()
            .zip(class_sizes)
            .map(|(w, &size)| w.norm_sqr() / size)
            .sum();
        let degree = (order / weight).sqrt();
        if (degree - degree.round()).abs() > tol.int || degree.round() < 1.0 {
            return Err(format!("non-integral degree {degree}"));
        }
        let degree = degree.round();
        let row: Vec<Complex64> = omega
            .iter()
            .zip(class_sizes)
            .map(|(w, &size)| w * degree / size)
            .collect();
        rows.push(row);
    }

    // Rows must be pairwise distinct characters.
    for s in 0..r {
        for t in (s + 1)..r {
            let close = rows[s]
                .iter()
                .zip(&rows[t])
                .all(|(a, b)| (a - b).norm() < 1e-4);
            if close {
                return Err(format!("rows {s} and {t} collapsed"));
            }
        }
    }
    Ok(rows)
}

/// Inverse iteration for the eigenvector of an (almost) known eigenvalue.
fn eigenvector_for(
    matrix: &DMatrix<Complex64>,
    eigenvalue: Complex64,
    rng: &mut ChaCha8Rng,
) -> Result<DVector<Complex64>, String> {
    let r = matrix.nrows();
    let scale = 1.0 + matrix.iter().map(|z| z.norm()).fold(0.0, f64::max);
    let mut shifted = matrix.clone();
    for i in 0..r {
        shifted[(i, i)] -= eigenvalue;
    }
    let mut jitter = 0.0;
    for _ in 0..6 {
        let mut work = shifted.clone();
        if jitter > 0.0 {
            for i in 0..r {
                work[(i, i)] += Complex64::new(jitter, jitter);
            }
        }
        let lu = work.lu();
        let mut v = DVector::from_fn(r, |_, _| {
            Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0))
        });
        v /= Complex64::new(v.norm(), 0.0);
        let mut ok = true;
        for _ in 0..4 {
            match lu.solve(&v) {
                Some(w) => {
                    let norm = w.norm();
                    if !norm.is_finite() || norm == 0.0 {
                        ok = false;
                        break;
                    }
                    v = w / Complex64::new(norm, 0.0);
                }
                None => {
                    ok = false;
                    break;
                }
            }
        }
        if ok {
            let residual = (matrix * &v - v.map(|x| x * eigenvalue)).norm();
            if residual < 1e-6 * scale {
                return Ok(v);
            }
        }
        jitter = if jitter == 0.0 { 1e-12 * scale } else { jitter * 100.0 };
    }
    Err(format!("inverse iteration failed near eigenvalue {eigenvalue}"))
}
