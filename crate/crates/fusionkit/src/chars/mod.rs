//! Class functions and irreducible character tables.
//!
//! Characters are stored as complex values indexed by conjugacy class; the
//! representation matrices themselves are never materialized. `decompose` is
//! the single gate from floating point to integer multiplicities: everything
//! that consumes structure constants goes through it.

mod solver;

use std::sync::Arc;

use num_complex::Complex64;
use thiserror::Error;

use crate::group::{FiniteGroup, SubgroupEmbedding};
use crate::Tol;

pub use solver::RETRY_BUDGET;

#[derive(Debug, Error)]
pub enum CharError {
    #[error("class functions live on different groups")]
    GroupMismatch,
    #[error("eigensolver failed after {attempts} attempts: {detail}")]
    NumericalFailure { attempts: usize, detail: String },
    #[error("multiplicity {index} is not integral (residual {residual:.3e})")]
    NotIntegral { index: usize, residual: f64 },
    #[error("multiplicity {index} rounds to the negative value {value}")]
    NotNonnegative { index: usize, value: i64 },
    #[error("induced and restricted multiplicities disagree: {0}")]
    ReciprocityViolation(String),
    #[error("character table is inconsistent: {0}")]
    TableInvariant(String),
}

/// A complex-valued function constant on conjugacy classes.
#[derive(Clone, Debug)]
pub struct ClassFunction {
    group: Arc<FiniteGroup>,
    values: Vec<Complex64>,
}

impl ClassFunction {
    pub fn new(group: Arc<FiniteGroup>, values: Vec<Complex64>) -> Self {
        assert_eq!(values.len(), group.class_count(), "one value per conjugacy class");
        ClassFunction { group, values }
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    /// Values in class order.
    pub fn values(&self) -> &[Complex64] {
        &self.values
    }

    pub fn value_on_class(&self, class: usize) -> Complex64 {
        self.values[class]
    }

    pub fn value_at(&self, element: usize) -> Complex64 {
        self.values[self.group.class_of(element)]
    }

    pub fn conjugated(&self) -> ClassFunction {
        ClassFunction {
            group: Arc::clone(&self.group),
            values: self.values.iter().map(|z| z.conj()).collect(),
        }
    }

    pub fn degree_value(&self) -> Complex64 {
        self.value_at(self.group.identity())
    }

    fn same_group(&self, other: &ClassFunction) -> bool {
        Arc::ptr_eq(&self.group, &other.group) || self.group.same_table(&other.group)
    }

    pub fn max_abs_difference(&self, other: &ClassFunction) -> f64 {
        self.values
            .iter()
            .zip(&other.values)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }
}

/// `<f, h> = (1/|G|) sum over classes of |C| f(C) conj(h(C))`.
pub fn inner_product(f: &ClassFunction, h: &ClassFunction) -> Result<Complex64, CharError> {
    if !f.same_group(h) {
        return Err(CharError::GroupMismatch);
    }
    let group = f.group();
    let mut acc = Complex64::default();
    for (c, class) in group.classes().iter().enumerate() {
        acc += f.values[c] * h.values[c].conj() * class.len() as f64;
    }
    Ok(acc / group.order() as f64)
}

/// Classwise product; the character of a tensor product of representations.
pub fn pointwise_product(f: &ClassFunction, h: &ClassFunction) -> Result<ClassFunction, CharError> {
    if !f.same_group(h) {
        return Err(CharError::GroupMismatch);
    }
    Ok(ClassFunction {
        group: Arc::clone(f.group()),
        values: f.values.iter().zip(&h.values).map(|(a, b)| a * b).collect(),
    })
}

/// Restriction to a subgroup: each subgroup class takes the value of the
/// parent class containing it. Classes of the subgroup may fuse in the
/// parent; any representative gives the same value.
pub fn restrict(f: &ClassFunction, emb: &SubgroupEmbedding) -> ClassFunction {
    debug_assert!(
        Arc::ptr_eq(f.group(), emb.parent()) || f.group().same_table(emb.parent()),
        "restricting a function from a different parent group"
    );
    let sub = emb.as_group();
    let values = sub
        .classes()
        .iter()
        .map(|class| {
            let first = f.value_at(emb.to_parent(class[0]));
            // Representative independence; a failure here means a broken embedding.
            debug_assert!(class
                .iter()
                .all(|&m| (f.value_at(emb.to_parent(m)) - first).norm() < 1e-9));
            first
        })
        .collect();
    ClassFunction { group: Arc::clone(sub), values }
}

/// Induction of a class function from the subgroup to the parent:
/// `ind(f)(g) = (1/|H|) sum over s in G of f(s g s^{-1})` extended by zero
/// off the subgroup. The degree multiplies by the subgroup index.
pub fn induce(f: &ClassFunction, emb: &SubgroupEmbedding) -> ClassFunction {
    debug_assert!(
        Arc::ptr_eq(f.group(), emb.as_group()) || f.group().same_table(emb.as_group()),
        "inducing a function that does not live on the subgroup"
    );
    let parent = emb.parent();
    let values = parent
        .classes()
        .iter()
        .map(|class| {
            let g = class[0];
            let mut acc = Complex64::default();
            for s in 0..parent.order() {
                let conj = parent.conjugate(s, g);
                if let Some(m) = emb.from_parent(conj) {
                    acc += f.values[emb.as_group().class_of(m)];
                }
            }
            acc / emb.order() as f64
        })
        .collect();
    ClassFunction { group: Arc::clone(parent), values }
}

/// The same induction computed as `[G:H]` times the group average; agrees
/// with [`induce`] identically and exists as an independent code path.
pub fn induce_averaged(f: &ClassFunction, emb: &SubgroupEmbedding) -> ClassFunction {
    let parent = emb.parent();
    let index = emb.index() as f64;
    let values = parent
        .classes()
        .iter()
        .map(|class| {
            let g = class[0];
            let mut acc = Complex64::default();
            for s in 0..parent.order() {
                let conj = parent.conjugate(s, g);
                if let Some(m) = emb.from_parent(conj) {
                    acc += f.values[emb.as_group().class_of(m)];
                }
            }
            acc * index / parent.order() as f64
        })
        .collect();
    ClassFunction { group: Arc::clone(parent), values }
}

/// An irreducible (or at least decomposable) character: a class function
/// with an integral degree.
#[derive(Clone, Debug)]
pub struct Character {
    function: ClassFunction,
    degree: usize,
    irreducible: bool,
}

impl Character {
    pub fn from_class_function(function: ClassFunction, irreducible: bool, tol: Tol) -> Result<Self, CharError> {
        let at_identity = function.degree_value();
        let rounded = at_identity.re.round();
        if (at_identity.re - rounded).abs() > tol.int || at_identity.im.abs() > tol.int || rounded < 1.0 {
            return Err(CharError::TableInvariant(format!(
                "degree {at_identity} is not a positive integer"
            )));
        }
        Ok(Character { function, degree: rounded as usize, irreducible })
    }

    pub fn function(&self) -> &ClassFunction {
        &self.function
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn is_irreducible(&self) -> bool {
        self.irreducible
    }

    /// The normalized character: values divided by the degree.
    pub fn normalized(&self) -> ClassFunction {
        let d = self.degree as f64;
        ClassFunction {
            group: Arc::clone(self.function.group()),
            values: self.function.values().iter().map(|z| z / d).collect(),
        }
    }
}

/// The full set of irreducible characters of a group, in canonical order:
/// the trivial character first, then ascending degree, ties broken by a
/// lexicographic comparison of the value rows in class order.
#[derive(Clone, Debug)]
pub struct CharacterTable {
    group: Arc<FiniteGroup>,
    irreducibles: Vec<Character>,
}

impl CharacterTable {
    pub fn compute(group: &Arc<FiniteGroup>, tol: Tol) -> Result<Self, CharError> {
        let mut rows = solver::character_rows(group, tol)?;
        rows.sort_by(|a, b| row_order_key(a).partial_cmp(&row_order_key(b)).unwrap());
        let irreducibles: Vec<Character> = rows
            .into_iter()
            .map(|values| {
                Character::from_class_function(
                    ClassFunction::new(Arc::clone(group), values),
                    true,
                    tol,
                )
            })
            .collect::<Result<_, _>>()?;
        let table = CharacterTable { group: Arc::clone(group), irreducibles };
        table.validate(tol)?;
        Ok(table)
    }

    fn validate(&self, tol: Tol) -> Result<(), CharError> {
        let n = self.irreducibles.len();
        if n != self.group.class_count() {
            return Err(CharError::TableInvariant(format!(
                "{n} irreducibles for {} classes",
                self.group.class_count()
            )));
        }
        let trivial = &self.irreducibles[0];
        if trivial.function().values().iter().any(|z| (z - Complex64::new(1.0, 0.0)).norm() > tol.eq) {
            return Err(CharError::TableInvariant("first row is not the trivial character".into()));
        }
        for i in 0..n {
            for j in 0..n {
                let ip = inner_product(self.irreducibles[i].function(), self.irreducibles[j].function())?;
                let expected = if i == j { 1.0 } else { 0.0 };
                if (ip - Complex64::new(expected, 0.0)).norm() > tol.eq {
                    return Err(CharError::TableInvariant(format!(
                        "rows {i} and {j} are not orthonormal (<chi_i, chi_j> = {ip})"
                    )));
                }
            }
        }
        let degree_square_sum: usize = self.irreducibles.iter().map(|c| c.degree() * c.degree()).sum();
        if degree_square_sum != self.group.order() {
            return Err(CharError::TableInvariant(format!(
                "degree squares sum to {degree_square_sum}, group order is {}",
                self.group.order()
            )));
        }
        Ok(())
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    pub fn irreducibles(&self) -> &[Character] {
        &self.irreducibles
    }

    pub fn len(&self) -> usize {
        self.irreducibles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.irreducibles.is_empty()
    }

    pub fn character(&self, i: usize) -> &Character {
        &self.irreducibles[i]
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.irreducibles.iter().map(|c| c.degree()).collect()
    }

    /// Index of the complex-conjugate character of row `i`.
    pub fn conjugate_index(&self, i: usize, tol: Tol) -> usize {
        let conj = self.irreducibles[i].function().conjugated();
        self.irreducibles
            .iter()
            .position(|c| c.function().max_abs_difference(&conj) < tol.eq.max(1e-6))
            .expect("tables are closed under complex conjugation")
    }

    /// Row index whose values match the given class function, if any.
    pub fn find_row(&self, f: &ClassFunction, tol: Tol) -> Option<usize> {
        self.irreducibles
            .iter()
            .position(|c| c.function().max_abs_difference(f) < tol.eq.max(1e-6))
    }

    /// UTF-8 rendering with class sizes in the header row.
    pub fn render_text(&self) -> String {
        let mut out = format!("group: {} (order {})\n", self.group.name(), self.group.order());
        let header: Vec<String> = self
            .group
            .classes()
            .iter()
            .map(|c| format!("|{}|={}", self.group.label(c[0]), c.len()))
            .collect();
        out.push_str(&format!("classes: {}\n", header.join("  ")));
        for (i, ch) in self.irreducibles.iter().enumerate() {
            let values: Vec<String> = ch.function().values().iter().map(|z| format_complex(*z)).collect();
            out.push_str(&format!("chi{i} [deg {}]: {}\n", ch.degree(), values.join("  ")));
        }
        out
    }
}

fn row_order_key(values: &[Complex64]) -> (f64, Vec<(f64, f64)>) {
    let is_trivial = values.iter().all(|z| (z - Complex64::new(1.0, 0.0)).norm() < 1e-6);
    let degree = values[0].re;
    let snapped: Vec<(f64, f64)> = values.iter().map(|z| (snap(z.re), snap(z.im))).collect();
    (if is_trivial { f64::MIN } else { degree }, snapped)
}

fn snap(x: f64) -> f64 {
    (x * 1e6).round() / 1e6
}

/// Stable plain-text formatting for possibly complex values.
pub fn format_complex(z: Complex64) -> String {
    let fmt_real = |x: f64| {
        let s = format!("{:.6}", x + 0.0);
        let s = s.trim_end_matches('0').trim_end_matches('.').to_string();
        if s == "-0" { "0".to_string() } else { s }
    };
    if z.im.abs() < 1e-9 {
        fmt_real(z.re)
    } else if z.re.abs() < 1e-9 {
        format!("{}i", fmt_real(z.im))
    } else if z.im > 0.0 {
        format!("{}+{}i", fmt_real(z.re), fmt_real(z.im))
    } else {
        format!("{}{}i", fmt_real(z.re), fmt_real(z.im))
    }
}

/// Multiplicities of the irreducibles inside a class function; the single
/// float-to-integer rounding site in the crate. Errors on inputs that are
/// not genuine characters (non-integral or negative multiplicities), and
/// verifies that the rounded combination reconstructs the input.
pub fn decompose(f: &ClassFunction, table: &CharacterTable, tol: Tol) -> Result<Vec<u64>, CharError> {
    if !(Arc::ptr_eq(f.group(), table.group()) || f.group().same_table(table.group())) {
        return Err(CharError::GroupMismatch);
    }
    let mut out = Vec::with_capacity(table.len());
    for (i, ch) in table.irreducibles().iter().enumerate() {
        let m = inner_product(f, ch.function())?;
        let rounded = m.re.round();
        let residual = ((m.re - rounded).powi(2) + m.im.powi(2)).sqrt();
        if residual > tol.int {
            return Err(CharError::NotIntegral { index: i, residual });
        }
        if rounded < 0.0 {
            return Err(CharError::NotNonnegative { index: i, value: rounded as i64 });
        }
        out.push(rounded as u64);
    }
    // Reconstruction must reproduce the input exactly up to tolerance.
    for (c, &value) in f.values().iter().enumerate() {
        let mut acc = Complex64::default();
        for (m, ch) in out.iter().zip(table.irreducibles()) {
            acc += ch.function().value_on_class(c) * *m as f64;
        }
        if (acc - value).norm() > tol.eq.max(tol.int) * (1.0 + value.norm()) {
            return Err(CharError::NotIntegral { index: c, residual: (acc - value).norm() });
        }
    }
    Ok(out)
}

/// The fusion algebra of the irreducible characters themselves: circle
/// labels, involution by complex conjugation, structure constants from
/// decomposing pointwise products.
pub fn character_ring(
    table: &CharacterTable,
    tol: Tol,
) -> Result<crate::fusion::FusionAlgebra, CharError> {
    let n = table.len();
    let mut structure = vec![vec![vec![0u64; n]; n]; n];
    for (i, plane) in structure.iter_mut().enumerate() {
        for (j, row) in plane.iter_mut().enumerate() {
            let product =
                pointwise_product(table.character(i).function(), table.character(j).function())?;
            *row = decompose(&product, table, tol)?;
        }
    }
    let labels = (0..n).map(crate::fusion::BasisLabel::Circle).collect();
    let involution = (0..n).map(|i| table.conjugate_index(i, tol)).collect();
    crate::fusion::FusionAlgebra::new(labels, involution, structure)
        .map_err(|e| CharError::TableInvariant(e.to_string()))
}

/// The multiplicity `[ind(tau) : pi] = [tau : res(pi)]`, computed along both
/// routes and cross-checked; a disagreement indicates an internal bug.
pub fn frobenius_multiplicity(
    tau: &Character,
    pi: &Character,
    emb: &SubgroupEmbedding,
    tol: Tol,
) -> Result<u64, CharError> {
    let via_induction = inner_product(&induce(tau.function(), emb), pi.function())?;
    let via_restriction = inner_product(tau.function(), &restrict(pi.function(), emb))?;
    let a = via_induction.re.round();
    let b = via_restriction.re.round();
    let res_a = (via_induction - Complex64::new(a, 0.0)).norm();
    let res_b = (via_restriction - Complex64::new(b, 0.0)).norm();
    if res_a > tol.int || res_b > tol.int {
        return Err(CharError::NotIntegral { index: 0, residual: res_a.max(res_b) });
    }
    if a != b || a < 0.0 {
        return Err(CharError::ReciprocityViolation(format!(
            "induction gives {via_induction}, restriction gives {via_restriction}"
        )));
    }
    Ok(a as u64)
}
