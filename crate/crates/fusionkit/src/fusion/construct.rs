//! Constructions on fusion algebras: the order-two join, the direct product
//! with an order-two grading, and a backtracking isomorphism search.

use super::dimension::{dimension_function, DimensionFunction};
use super::{BasisLabel, FusionAlgebra, FusionError};
use crate::Tol;

/// Adjoins a single self-dual element `Y` to a fusion algebra with integral
/// dimensions: `X_i Y = d(X_i) Y` and `Y Y = sum_k d(X_k) X_k` (the Haar
/// element). Requires every dimension to be a positive integer.
pub fn join(
    alg: &FusionAlgebra,
    dims: &DimensionFunction,
    tol: Tol,
) -> Result<FusionAlgebra, FusionError> {
    let n = alg.len();
    let int_dims = dims.as_integers(tol)?;
    let m = n + 1;
    let mut labels = alg.labels().to_vec();
    labels.push(BasisLabel::Abstract("Y1".into()));
    let mut involution = alg.involution().to_vec();
    involution.push(n);
    let mut structure = vec![vec![vec![0u64; m]; m]; m];
    for (i, plane) in structure.iter_mut().take(n).enumerate() {
        for (j, row) in plane.iter_mut().take(n).enumerate() {
            row[..n].copy_from_slice(alg.product(i, j));
        }
        plane[n][n] = int_dims[i];
    }
    for (i, &d) in int_dims.iter().enumerate() {
        structure[n][i][n] = d;
    }
    for (k, &d) in int_dims.iter().enumerate() {
        structure[n][n][k] = d;
    }
    let joined = FusionAlgebra::new(labels, involution, structure)?;
    let report = joined.check_axioms();
    if !report.all_passed() {
        return Err(FusionError::AxiomViolation(
            report.first_failure().and_then(|c| c.failure.clone()).unwrap_or_default(),
        ));
    }
    Ok(joined)
}

/// Doubles the basis with an order-two grading: `(X_i, a)(X_j, b) =
/// sum_k a_ijk (X_k, a+b)`. Grade-one copies of circle labels become bullet
/// labels and vice versa, so the result lines up with the pair algebra of a
/// group against itself.
pub fn direct_product_with_z2(alg: &FusionAlgebra) -> FusionAlgebra {
    let n = alg.len();
    let m = 2 * n;
    let flip = |label: &BasisLabel| -> BasisLabel {
        match label {
            BasisLabel::Circle(i) => BasisLabel::Bullet(*i),
            BasisLabel::Bullet(i) => BasisLabel::Circle(*i),
            BasisLabel::Abstract(name) => BasisLabel::Abstract(format!("{name}~")),
        }
    };
    // Grade 0 occupies indices 0..n, grade 1 indices n..2n.
    let mut labels = alg.labels().to_vec();
    labels.extend(alg.labels().iter().map(flip));
    let mut involution: Vec<usize> = alg.involution().to_vec();
    involution.extend(alg.involution().iter().map(|&i| i + n));
    let mut structure = vec![vec![vec![0u64; m]; m]; m];
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let c = alg.coefficient(i, j, k);
                structure[i][j][k] = c;
                structure[i][j + n][k + n] = c;
                structure[i + n][j][k + n] = c;
                structure[i + n][j + n][k] = c;
            }
        }
    }
    FusionAlgebra::new(labels, involution, structure).expect("grading preserves the axioms")
}

/// Searches for a unit-, involution-, tag-, and tensor-preserving bijection
/// between two fusion algebras. Dimension values prune the search; abstract
/// labels are compatible with any tag. Returns the basis bijection when one
/// exists.
pub fn algebra_isomorphic(a: &FusionAlgebra, b: &FusionAlgebra, tol: Tol) -> Option<Vec<usize>> {
    if a.len() != b.len() {
        return None;
    }
    let n = a.len();
    let da = dimension_function(a, tol).ok()?;
    let db = dimension_function(b, tol).ok()?;
    let mut mapping = vec![usize::MAX; n];
    let mut used = vec![false; n];
    mapping[a.unit()] = b.unit();
    used[b.unit()] = true;
    fn extend(
        a: &FusionAlgebra,
        b: &FusionAlgebra,
        da: &DimensionFunction,
        db: &DimensionFunction,
        mapping: &mut Vec<usize>,
        used: &mut Vec<bool>,
    ) -> bool {
        let n = a.len();
        let Some(next) = (0..n).find(|&i| mapping[i] == usize::MAX) else {
            return true;
        };
        for candidate in 0..n {
            if used[candidate]
                || !a.label(next).compatible(b.label(candidate))
                || (da.value(next) - db.value(candidate)).abs() > 1e-6
            {
                continue;
            }
            mapping[next] = candidate;
            used[candidate] = true;
            if consistent(a, b, mapping) && extend(a, b, da, db, mapping, used) {
                return true;
            }
            mapping[next] = usize::MAX;
            used[candidate] = false;
        }
        false
    }
    fn consistent(a: &FusionAlgebra, b: &FusionAlgebra, mapping: &[usize]) -> bool {
        let n = a.len();
        let assigned: Vec<usize> = (0..n).filter(|&i| mapping[i] != usize::MAX).collect();
        for &i in &assigned {
            if mapping[a.dual(i)] != usize::MAX && mapping[a.dual(i)] != b.dual(mapping[i]) {
                return false;
            }
            for &j in &assigned {
                for &k in &assigned {
                    if a.coefficient(i, j, k) != b.coefficient(mapping[i], mapping[j], mapping[k]) {
                        return false;
                    }
                }
            }
        }
        true
    }
    if extend(a, b, &da, &db, &mut mapping, &mut used) {
        Some(mapping)
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fusion::order_two_extension;

    #[test]
    fn join_of_the_trivial_algebra_is_the_order_two_group_algebra() {
        let trivial = FusionAlgebra::trivial();
        let d = dimension_function(&trivial, Tol::default()).unwrap();
        let joined = join(&trivial, &d, Tol::default()).unwrap();
        let z2 = FusionAlgebra::cyclic_group_algebra(2);
        assert!(algebra_isomorphic(&joined, &z2, Tol::default()).is_some());
    }

    #[test]
    fn join_of_z2_matches_the_order_two_extension() {
        let z2 = FusionAlgebra::cyclic_group_algebra(2);
        let d = dimension_function(&z2, Tol::default()).unwrap();
        let joined = join(&z2, &d, Tol::default()).unwrap();
        assert_eq!(joined.coefficient(2, 2, 0), 1);
        assert_eq!(joined.coefficient(2, 2, 1), 1);
        assert!(algebra_isomorphic(&joined, &order_two_extension(), Tol::default()).is_some());
    }

    #[test]
    fn join_of_z3_adjoins_a_square_root_of_the_group_sum() {
        let z3 = FusionAlgebra::cyclic_group_algebra(3);
        let d = dimension_function(&z3, Tol::default()).unwrap();
        let joined = join(&z3, &d, Tol::default()).unwrap();
        assert!(joined.check_axioms().all_passed());
        assert_eq!(joined.product(3, 3), &[1, 1, 1, 0]);
    }

    #[test]
    fn direct_product_doubles_into_a_graded_algebra() {
        let trivial = FusionAlgebra::trivial();
        let doubled = direct_product_with_z2(&trivial);
        let z2 = FusionAlgebra::cyclic_group_algebra(2);
        assert!(algebra_isomorphic(&doubled, &z2, Tol::default()).is_some());

        let z2sq = direct_product_with_z2(&FusionAlgebra::cyclic_group_algebra(2));
        assert_eq!(z2sq.len(), 4);
        assert!(z2sq.check_axioms().all_passed());
        let d = dimension_function(&z2sq, Tol::default()).unwrap();
        assert!(d.values().iter().all(|&x| (x - 1.0).abs() < 1e-12));
    }

    #[test]
    fn every_algebra_is_isomorphic_to_itself() {
        let alg = order_two_extension();
        let iso = algebra_isomorphic(&alg, &alg, Tol::default()).unwrap();
        assert_eq!(iso[0], 0);
    }

    #[test]
    fn cyclic_four_and_klein_four_group_algebras_differ() {
        let z4 = FusionAlgebra::cyclic_group_algebra(4);
        let mut v4 = FusionAlgebra::cyclic_group_algebra(2);
        v4 = direct_product_with_z2(&v4);
        assert!(algebra_isomorphic(&z4, &v4, Tol::default()).is_none());
    }
}
