//! Abstract fusion rule algebras: a finite basis with a distinguished unit,
//! an involution on the basis, and nonnegative-integer structure constants.
//!
//! Structure constants are exact `u64` integers; only dimension values and
//! hypergroup coefficients are floating point. Axiom checking reports every
//! axiom with the first violating index tuple instead of failing fast.

mod construct;
mod dimension;
mod hypergroup;

use thiserror::Error;

pub use construct::{algebra_isomorphic, direct_product_with_z2, join};
pub use dimension::{dimension_function, haar_element, DimensionFunction};
pub use hypergroup::{check_hypergroup_axioms, normalize_to_hypergroup, Hypergroup, HypergroupAxiom};

#[derive(Debug, Error)]
pub enum FusionError {
    #[error("no positive dimension solution: {0}")]
    NoPositiveSolution(String),
    #[error("Haar element identity fails at basis element {index} (residual {residual:.3e})")]
    HaarViolation { index: usize, residual: f64 },
    #[error("dimension of basis element {index} is {value}, not a positive integer")]
    NonIntegralDimensions { index: usize, value: f64 },
    #[error("fusion axioms fail: {0}")]
    AxiomViolation(String),
}

/// Identity of a basis element: where it came from and how to print it.
///
/// `Circle` marks characters of the ambient group, `Bullet` characters of the
/// subgroup (the two halves of a pair algebra); `Abstract` labels everything
/// built by hand.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BasisLabel {
    Circle(usize),
    Bullet(usize),
    Abstract(String),
}

impl BasisLabel {
    pub fn text(&self) -> String {
        match self {
            BasisLabel::Circle(i) => format!("γ{i}"),
            BasisLabel::Bullet(i) => format!("ρ{i}"),
            BasisLabel::Abstract(name) => name.clone(),
        }
    }

    /// Same tag family; abstract labels are compatible with anything.
    pub fn compatible(&self, other: &BasisLabel) -> bool {
        matches!(
            (self, other),
            (BasisLabel::Circle(_), BasisLabel::Circle(_))
                | (BasisLabel::Bullet(_), BasisLabel::Bullet(_))
                | (BasisLabel::Abstract(_), _)
                | (_, BasisLabel::Abstract(_))
        )
    }

    pub fn is_circle(&self) -> bool {
        matches!(self, BasisLabel::Circle(_))
    }

    pub fn is_bullet(&self) -> bool {
        matches!(self, BasisLabel::Bullet(_))
    }
}

/// A finitely based algebra with unit basis element, involution, and
/// nonnegative-integer structure constants `a[i][j][k]`.
#[derive(Clone, Debug, PartialEq)]
pub struct FusionAlgebra {
    labels: Vec<BasisLabel>,
    unit: usize,
    involution: Vec<usize>,
    structure: Vec<Vec<Vec<u64>>>,
}

impl FusionAlgebra {
    /// Wraps raw data after shape validation only; run [`check_axioms`] for
    /// the algebraic laws.
    ///
    /// [`check_axioms`]: FusionAlgebra::check_axioms
    pub fn new(
        labels: Vec<BasisLabel>,
        involution: Vec<usize>,
        structure: Vec<Vec<Vec<u64>>>,
    ) -> Result<Self, FusionError> {
        let n = labels.len();
        if n == 0 {
            return Err(FusionError::AxiomViolation("empty basis".into()));
        }
        if involution.len() != n || involution.iter().any(|&i| i >= n) {
            return Err(FusionError::AxiomViolation("involution is not a basis map".into()));
        }
        let mut seen = vec![false; n];
        for &i in &involution {
            if std::mem::replace(&mut seen[i], true) {
                return Err(FusionError::AxiomViolation("involution is not a bijection".into()));
            }
        }
        if structure.len() != n
            || structure.iter().any(|p| p.len() != n || p.iter().any(|r| r.len() != n))
        {
            return Err(FusionError::AxiomViolation("structure tensor has wrong shape".into()));
        }
        Ok(FusionAlgebra { labels, unit: 0, involution, structure })
    }

    /// The one-element algebra.
    pub fn trivial() -> Self {
        FusionAlgebra {
            labels: vec![BasisLabel::Abstract("X0".into())],
            unit: 0,
            involution: vec![0],
            structure: vec![vec![vec![1]]],
        }
    }

    /// The group algebra of a cyclic group of order `n`, for tests and joins.
    pub fn cyclic_group_algebra(n: usize) -> Self {
        let mut structure = vec![vec![vec![0u64; n]; n]; n];
        for i in 0..n {
            for j in 0..n {
                structure[i][j][(i + j) % n] = 1;
            }
        }
        let labels = (0..n).map(|i| BasisLabel::Abstract(format!("X{i}"))).collect();
        let involution = (0..n).map(|i| (n - i) % n).collect();
        FusionAlgebra { labels, unit: 0, involution, structure }
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

    pub fn label(&self, i: usize) -> &BasisLabel {
        &self.labels[i]
    }

    pub fn unit(&self) -> usize {
        self.unit
    }

    pub fn involution(&self) -> &[usize] {
        &self.involution
    }

    pub fn dual(&self, i: usize) -> usize {
        self.involution[i]
    }

    pub fn coefficient(&self, i: usize, j: usize, k: usize) -> u64 {
        self.structure[i][j][k]
    }

    /// Coefficient row of the product `X_i X_j`.
    pub fn product(&self, i: usize, j: usize) -> &[u64] {
        &self.structure[i][j]
    }

    pub fn structure(&self) -> &Vec<Vec<Vec<u64>>> {
        &self.structure
    }

    /// The support of `X_i X_j`: basis indices with nonzero coefficient.
    pub fn support(&self, i: usize, j: usize) -> Vec<usize> {
        (0..self.len()).filter(|&k| self.structure[i][j][k] != 0).collect()
    }

    pub fn is_commutative(&self) -> bool {
        let n = self.len();
        (0..n).all(|i| (i..n).all(|j| self.structure[i][j] == self.structure[j][i]))
    }

    /// Runs every axiom check and reports pass/fail with the first violating
    /// index tuple. Failures are report entries, never panics.
    pub fn check_axioms(&self) -> AxiomReport {
        let n = self.len();
        let mut checks = Vec::new();

        // F1, unit law: X_0 X_j = X_j = X_j X_0.
        let mut unit_failure = None;
        'unit: for j in 0..n {
            for k in 0..n {
                let expected = u64::from(j == k);
                if self.structure[self.unit][j][k] != expected {
                    unit_failure = Some(format!("left unit law fails at ({}, {j}, {k})", self.unit));
                    break 'unit;
                }
                if self.structure[j][self.unit][k] != expected {
                    unit_failure = Some(format!("right unit law fails at ({j}, {}, {k})", self.unit));
                    break 'unit;
                }
            }
        }
        checks.push(AxiomCheck::new(FusionAxiom::UnitLaw, unit_failure));

        // F1, associativity over all basis triples, exact integer arithmetic.
        let mut assoc_failure = None;
        'assoc: for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    for l in 0..n {
                        let left: u64 = (0..n)
                            .map(|s| self.structure[i][j][s] * self.structure[s][k][l])
                            .sum();
                        let right: u64 = (0..n)
                            .map(|t| self.structure[j][k][t] * self.structure[i][t][l])
                            .sum();
                        if left != right {
                            assoc_failure =
                                Some(format!("associativity fails at ({i}, {j}, {k}) -> {l}"));
                            break 'assoc;
                        }
                    }
                }
            }
        }
        checks.push(AxiomCheck::new(FusionAxiom::Associativity, assoc_failure));

        // F2: nonnegative integers, guaranteed by the u64 representation.
        checks.push(AxiomCheck::new(FusionAxiom::NonnegativeIntegers, None));

        // F3: the unit appears exactly in X_i X_{i*}, with coefficient one.
        let mut f3_failure = None;
        'f3: for i in 0..n {
            for j in 0..n {
                let coeff = self.structure[i][j][self.unit];
                let expected = if j == self.involution[i] { 1 } else { 0 };
                if coeff != expected {
                    f3_failure = Some(format!("F3 violated at ({i}, {j}, {})", self.unit));
                    break 'f3;
                }
            }
        }
        checks.push(AxiomCheck::new(FusionAxiom::UnitCoefficient, f3_failure));

        // The involution fixes the unit and is an anti-automorphism.
        let mut inv_failure = None;
        if self.involution[self.unit] != self.unit {
            inv_failure = Some("involution moves the unit".into());
        } else {
            'inv: for i in 0..n {
                for j in 0..n {
                    for k in 0..n {
                        let direct = self.structure[i][j][k];
                        let dual = self.structure[self.involution[j]][self.involution[i]]
                            [self.involution[k]];
                        if direct != dual {
                            inv_failure =
                                Some(format!("involution is not an anti-automorphism at ({i}, {j}, {k})"));
                            break 'inv;
                        }
                    }
                }
            }
        }
        checks.push(AxiomCheck::new(FusionAxiom::InvolutionAntiAutomorphism, inv_failure));

        AxiomReport { checks }
    }

    /// Structure equations in display form, one line per nontrivial product.
    /// Unit rows are omitted; for commutative algebras only `i <= j` prints.
    pub fn structure_equations(&self) -> Vec<String> {
        let n = self.len();
        let commutative = self.is_commutative();
        let mut out = Vec::new();
        for i in 0..n {
            if i == self.unit {
                continue;
            }
            for j in 0..n {
                if j == self.unit || (commutative && j < i) {
                    continue;
                }
                out.push(format!(
                    "{} {} = {}",
                    self.labels[i].text(),
                    self.labels[j].text(),
                    self.render_combination(&self.structure[i][j])
                ));
            }
        }
        out
    }

    fn render_combination(&self, coeffs: &[u64]) -> String {
        let mut terms = Vec::new();
        for (k, &c) in coeffs.iter().enumerate() {
            match c {
                0 => {}
                1 => terms.push(self.labels[k].text()),
                c => terms.push(format!("{c}{}", self.labels[k].text())),
            }
        }
        if terms.is_empty() {
            "0".to_string()
        } else {
            terms.join(" + ")
        }
    }
}

/// Axioms checked on a fusion algebra.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FusionAxiom {
    /// F1: the distinguished basis element is a two-sided unit.
    UnitLaw,
    /// F1: associativity of the structure tensor.
    Associativity,
    /// F2: structure constants are nonnegative integers.
    NonnegativeIntegers,
    /// F3: the unit appears in `X_i X_j` iff `j = i*`, with coefficient one.
    UnitCoefficient,
    /// The involution fixes the unit and reverses products.
    InvolutionAntiAutomorphism,
}

impl std::fmt::Display for FusionAxiom {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let name = match self {
            FusionAxiom::UnitLaw => "F1 (unit law)",
            FusionAxiom::Associativity => "F1 (associativity)",
            FusionAxiom::NonnegativeIntegers => "F2 (nonnegative integers)",
            FusionAxiom::UnitCoefficient => "F3 (unit coefficient)",
            FusionAxiom::InvolutionAntiAutomorphism => "F3 (involution anti-automorphism)",
        };
        f.write_str(name)
    }
}

#[derive(Clone, Debug)]
pub struct AxiomCheck {
    pub axiom: FusionAxiom,
    pub passed: bool,
    pub failure: Option<String>,
}

impl AxiomCheck {
    fn new(axiom: FusionAxiom, failure: Option<String>) -> Self {
        AxiomCheck { axiom, passed: failure.is_none(), failure }
    }
}

#[derive(Clone, Debug)]
pub struct AxiomReport {
    pub checks: Vec<AxiomCheck>,
}

impl AxiomReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn first_failure(&self) -> Option<&AxiomCheck> {
        self.checks.iter().find(|c| !c.passed)
    }

    pub fn summary(&self) -> String {
        self.checks
            .iter()
            .map(|c| {
                if c.passed {
                    format!("{}: pass", c.axiom)
                } else {
                    format!("{}: FAIL ({})", c.axiom, c.failure.as_deref().unwrap_or(""))
                }
            })
            .collect::<Vec<_>>()
            .join("\n")
    }
}

/// Test helper: the three-element algebra on {g0, g1, r0} with r0 r0 = g0 + g1.
#[cfg(test)]
pub(crate) fn order_two_extension() -> FusionAlgebra {
    let labels = vec![
        BasisLabel::Abstract("g0".into()),
        BasisLabel::Abstract("g1".into()),
        BasisLabel::Abstract("r0".into()),
    ];
    let mut s = vec![vec![vec![0u64; 3]; 3]; 3];
    s[0][0][0] = 1;
    s[0][1][1] = 1;
    s[1][0][1] = 1;
    s[1][1][0] = 1;
    s[0][2][2] = 1;
    s[2][0][2] = 1;
    s[1][2][2] = 1;
    s[2][1][2] = 1;
    s[2][2][0] = 1;
    s[2][2][1] = 1;
    FusionAlgebra::new(labels, vec![0, 1, 2], s).unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn group_algebra_of_z2_passes_all_axioms() {
        let alg = FusionAlgebra::cyclic_group_algebra(2);
        assert!(alg.check_axioms().all_passed());
    }

    #[test]
    fn order_two_extension_passes_all_axioms() {
        assert!(super::order_two_extension().check_axioms().all_passed());
    }

    #[test]
    fn doubled_unit_coefficient_fails_f3_at_the_right_tuple() {
        let mut alg = FusionAlgebra::cyclic_group_algebra(2);
        alg.structure[1][1][0] = 2;
        let report = alg.check_axioms();
        assert!(!report.all_passed());
        let f3 = report
            .checks
            .iter()
            .find(|c| c.axiom == FusionAxiom::UnitCoefficient)
            .unwrap();
        assert!(!f3.passed);
        assert!(f3.failure.as_deref().unwrap().contains("(1, 1, 0)"));
    }

    #[test]
    fn structure_equations_render_in_display_form() {
        let alg = super::order_two_extension();
        let lines = alg.structure_equations();
        assert!(lines.contains(&"r0 r0 = g0 + g1".to_string()));
        assert!(lines.contains(&"g1 r0 = r0".to_string()));
    }
}
