//! The convolution algebra on the union of the irreducible characters of a
//! group and a finite-index subgroup.
//!
//! Products of two ambient characters multiply pointwise; an ambient
//! character acts on a subgroup character through restriction; two subgroup
//! characters multiply and induce back up. The construction closes into a
//! fusion rule algebra exactly when the pair is admissible: every subgroup
//! character must be constant on the conjugation orbits that stay inside the
//! subgroup. Non-admissible pairs are refused with an explicit witness, and
//! the associativity verifier still runs on raw characters to show exactly
//! which law breaks.

mod convolution;

use std::sync::Arc;

use thiserror::Error;

use crate::chars::{decompose, CharError, CharacterTable};
use crate::fusion::{BasisLabel, FusionAlgebra};
use crate::group::{conjugator_set, centralizes, is_normal, FiniteGroup, GroupError, SubgroupEmbedding};
use crate::Tol;

pub use convolution::{AssocLaw, AssociativityReport, LawResult};

#[derive(Debug, Error)]
pub enum PairError {
    #[error("the pair is not admissible: {0}")]
    NotAdmissible(Witness),
    #[error("the subgroup is not normal in its parent")]
    NotNormal,
    #[error("{0}")]
    Group(#[from] GroupError),
    #[error("{0}")]
    Char(#[from] CharError),
    #[error("constructed tensor failed an axiom check: {0}")]
    AxiomCheckFailed(String),
}

/// A failing triple for admissibility: the subgroup character `tau` takes
/// different values at `g` and at `s g s^{-1}`, although both lie in the
/// subgroup.
#[derive(Clone, Debug)]
pub struct Witness {
    /// Row index of the offending subgroup character.
    pub tau: usize,
    /// Parent index of the subgroup element.
    pub g: usize,
    /// Parent index of the conjugating element.
    pub s: usize,
    /// Human-readable rendering with element labels.
    pub description: String,
}

impl std::fmt::Display for Witness {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.description)
    }
}

/// Sufficient conditions for admissibility that can be certified
/// independently of the exhaustive check.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Certificate {
    /// The ambient group is abelian.
    AbelianGroup,
    /// Every irreducible subgroup character is the exact restriction of an
    /// irreducible character of the ambient group.
    CharacterExtension,
    /// Conjugation into the subgroup is always realized by an element of the
    /// subgroup itself.
    InnerConjugacyCover,
    /// The subgroup is normal and conjugation permutes its characters
    /// trivially.
    NormalTrivialCoadjoint,
    /// The subgroup is central in the ambient group.
    CentralSubgroup,
}

impl std::fmt::Display for Certificate {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let name = match self {
            Certificate::AbelianGroup => "abelian ambient group",
            Certificate::CharacterExtension => "every subgroup character extends",
            Certificate::InnerConjugacyCover => "subgroup conjugacy covers conjugation",
            Certificate::NormalTrivialCoadjoint => "normal with trivial coadjoint action",
            Certificate::CentralSubgroup => "central subgroup",
        };
        f.write_str(name)
    }
}

/// Outcome of the exhaustive admissibility check.
#[derive(Clone, Debug)]
pub struct Admissibility {
    pub admissible: bool,
    pub witness: Option<Witness>,
}

/// The permutation action of the ambient group on the subgroup's
/// irreducible characters, defined for normal subgroups by composing a
/// character with conjugation.
#[derive(Clone, Debug)]
pub struct CoadjointAction {
    /// `perms[s][t]` is the row index of the character `tau_t` composed with
    /// conjugation by the parent element `s`.
    pub perms: Vec<Vec<usize>>,
}

impl CoadjointAction {
    pub fn is_trivial(&self) -> bool {
        self.perms.iter().all(|p| p.iter().enumerate().all(|(i, &x)| x == i))
    }
}

/// Everything produced by the pair construction, including the refusal path.
#[derive(Clone, Debug)]
pub struct PairAlgebraResult {
    pub admissible: bool,
    pub algebra: Option<FusionAlgebra>,
    pub witness: Option<Witness>,
    pub certificates: Vec<Certificate>,
}

/// A group with a chosen subgroup and both character tables, ready for the
/// convolution construction. Tables are computed once and shared.
#[derive(Clone, Debug)]
pub struct GroupPair {
    group: Arc<FiniteGroup>,
    emb: SubgroupEmbedding,
    parent_table: CharacterTable,
    sub_table: CharacterTable,
    tol: Tol,
}

impl GroupPair {
    pub fn new(group: Arc<FiniteGroup>, generators: &[usize], tol: Tol) -> Result<Self, PairError> {
        let emb = SubgroupEmbedding::generate(&group, generators)?;
        Self::from_embedding(emb, tol)
    }

    pub fn from_labels(group: Arc<FiniteGroup>, labels: &[&str], tol: Tol) -> Result<Self, PairError> {
        let emb = SubgroupEmbedding::from_label_generators(&group, labels)?;
        Self::from_embedding(emb, tol)
    }

    pub fn from_embedding(emb: SubgroupEmbedding, tol: Tol) -> Result<Self, PairError> {
        let group = Arc::clone(emb.parent());
        let parent_table = CharacterTable::compute(&group, tol)?;
        let sub_table = CharacterTable::compute(emb.as_group(), tol)?;
        Ok(GroupPair { group, emb, parent_table, sub_table, tol })
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    pub fn embedding(&self) -> &SubgroupEmbedding {
        &self.emb
    }

    pub fn parent_table(&self) -> &CharacterTable {
        &self.parent_table
    }

    pub fn sub_table(&self) -> &CharacterTable {
        &self.sub_table
    }

    pub fn tol(&self) -> Tol {
        self.tol
    }

    /// Exhaustive admissibility check over every subgroup character, every
    /// subgroup class representative, and every conjugator. Character values
    /// are compared unnormalized; dividing by the degree changes nothing.
    pub fn admissibility(&self) -> Admissibility {
        for (t, tau) in self.sub_table.irreducibles().iter().enumerate() {
            for class in self.emb.as_group().classes() {
                let g_parent = self.emb.to_parent(class[0]);
                let conjugators = conjugator_set(&self.emb, g_parent).expect("class member");
                let reference = tau.function().value_on_class(
                    self.emb.as_group().class_of(class[0]),
                );
                for s in conjugators {
                    let conj_parent = self.group.conjugate(s, g_parent);
                    let conj_sub = self.emb.from_parent(conj_parent).expect("conjugator lands inside");
                    let value = tau
                        .function()
                        .value_on_class(self.emb.as_group().class_of(conj_sub));
                    if (value - reference).norm() > self.tol.eq {
                        let description = format!(
                            "character tau{t} separates g = {} from s g s^-1 = {} (s = {})",
                            self.group.label(g_parent),
                            self.group.label(conj_parent),
                            self.group.label(s),
                        );
                        return Admissibility {
                            admissible: false,
                            witness: Some(Witness { tau: t, g: g_parent, s, description }),
                        };
                    }
                }
            }
        }
        Admissibility { admissible: true, witness: None }
    }

    /// Independently evaluated sufficient conditions; each certificate
    /// implies admissibility on its own.
    pub fn certificates(&self) -> Vec<Certificate> {
        let mut out = Vec::new();
        if self.group.is_abelian() {
            out.push(Certificate::AbelianGroup);
        }
        if self.every_character_extends() {
            out.push(Certificate::CharacterExtension);
        }
        if self.inner_conjugacy_covers() {
            out.push(Certificate::InnerConjugacyCover);
        }
        if is_normal(&self.emb) {
            if let Ok(action) = self.coadjoint_action() {
                if action.is_trivial() {
                    out.push(Certificate::NormalTrivialCoadjoint);
                }
            }
        }
        if centralizes(&self.emb) {
            out.push(Certificate::CentralSubgroup);
        }
        out
    }

    /// Transitivity through an intermediate subgroup: both nested pairs must
    /// be admissible and the tower must actually nest.
    pub fn admissible_via_intermediate(&self, intermediate_generators: &[usize]) -> Result<bool, PairError> {
        let mid = SubgroupEmbedding::generate(&self.group, intermediate_generators)?;
        if !self.emb.members().iter().all(|&m| mid.contains(m)) {
            return Ok(false);
        }
        let outer = GroupPair::from_embedding(mid.clone(), self.tol)?;
        if !outer.admissibility().admissible {
            return Ok(false);
        }
        let inner_gens: Vec<usize> = self
            .emb
            .members()
            .iter()
            .map(|&m| mid.from_parent(m).expect("nested"))
            .collect();
        let inner = GroupPair::new(Arc::clone(mid.as_group()), &inner_gens, self.tol)?;
        Ok(inner.admissibility().admissible)
    }

    fn every_character_extends(&self) -> bool {
        // Restriction multiplicities of every ambient irreducible.
        let mut restrictions = Vec::new();
        for pi in self.parent_table.irreducibles() {
            let res = crate::chars::restrict(pi.function(), &self.emb);
            match decompose(&res, &self.sub_table, self.tol) {
                Ok(m) => restrictions.push(m),
                Err(_) => return false,
            }
        }
        // A character of the ambient group restricting exactly to an
        // irreducible tau forces some irreducible constituent to restrict
        // exactly to tau, so searching irreducibles suffices.
        (0..self.sub_table.len()).all(|t| {
            restrictions.iter().any(|m| {
                m.iter().enumerate().all(|(j, &c)| c == u64::from(j == t))
            })
        })
    }

    fn inner_conjugacy_covers(&self) -> bool {
        let parent = &self.group;
        for &g in self.emb.members() {
            let conjugators = conjugator_set(&self.emb, g).expect("member");
            for s in conjugators {
                let target = parent.conjugate(s, g);
                let covered = self
                    .emb
                    .members()
                    .iter()
                    .any(|&t| parent.conjugate(t, g) == target);
                if !covered {
                    return false;
                }
            }
        }
        true
    }

    /// The permutation of subgroup characters induced by conjugation, per
    /// parent element. Defined only for normal subgroups.
    pub fn coadjoint_action(&self) -> Result<CoadjointAction, PairError> {
        if !is_normal(&self.emb) {
            return Err(PairError::NotNormal);
        }
        let sub = self.emb.as_group();
        let mut perms = Vec::with_capacity(self.group.order());
        for s in 0..self.group.order() {
            let mut perm = Vec::with_capacity(self.sub_table.len());
            for tau in self.sub_table.irreducibles() {
                let twisted: Vec<_> = sub
                    .classes()
                    .iter()
                    .map(|class| {
                        let conj = self.group.conjugate(s, self.emb.to_parent(class[0]));
                        let m = self.emb.from_parent(conj).expect("normal subgroup");
                        tau.function().value_on_class(sub.class_of(m))
                    })
                    .collect();
                let twisted =
                    crate::chars::ClassFunction::new(Arc::clone(sub), twisted);
                let image = self
                    .sub_table
                    .find_row(&twisted, self.tol)
                    .expect("conjugation permutes irreducible characters");
                perm.push(image);
            }
            perms.push(perm);
        }
        Ok(CoadjointAction { perms })
    }

    /// Builds the fusion algebra on the joint character basis, refusing
    /// non-admissible pairs with a witness. Basis order: ambient characters
    /// in table order (circle), then subgroup characters (bullet).
    // Index loops: the tensor is written at (i, n+j) and (n+j, i) in the
    // same pass, which rules out iter_mut traversal.
    #[allow(clippy::needless_range_loop)]
    pub fn build_algebra(&self) -> Result<FusionAlgebra, PairError> {
        let check = self.admissibility();
        if let Some(witness) = check.witness {
            return Err(PairError::NotAdmissible(witness));
        }
        let n = self.parent_table.len();
        let m = self.sub_table.len();
        let total = n + m;
        let mut structure = vec![vec![vec![0u64; total]; total]; total];
        let tol = self.tol;

        for i in 0..n {
            for j in 0..n {
                let product = crate::chars::pointwise_product(
                    self.parent_table.character(i).function(),
                    self.parent_table.character(j).function(),
                )?;
                let coeffs = decompose(&product, &self.parent_table, tol)?;
                structure[i][j][..n].copy_from_slice(&coeffs);
            }
        }
        for i in 0..n {
            let restricted = crate::chars::restrict(self.parent_table.character(i).function(), &self.emb);
            for j in 0..m {
                let product =
                    crate::chars::pointwise_product(&restricted, self.sub_table.character(j).function())?;
                let coeffs = decompose(&product, &self.sub_table, tol)?;
                structure[i][n + j][n..].copy_from_slice(&coeffs);
                structure[n + j][i][n..].copy_from_slice(&coeffs);
            }
        }
        for i in 0..m {
            for j in 0..m {
                let product = crate::chars::pointwise_product(
                    self.sub_table.character(i).function(),
                    self.sub_table.character(j).function(),
                )?;
                let induced = crate::chars::induce(&product, &self.emb);
                let coeffs = decompose(&induced, &self.parent_table, tol)?;
                structure[n + i][n + j][..n].copy_from_slice(&coeffs);
            }
        }

        let mut labels = Vec::with_capacity(total);
        labels.extend((0..n).map(BasisLabel::Circle));
        labels.extend((0..m).map(BasisLabel::Bullet));
        let mut involution = Vec::with_capacity(total);
        involution.extend((0..n).map(|i| self.parent_table.conjugate_index(i, tol)));
        involution.extend((0..m).map(|j| n + self.sub_table.conjugate_index(j, tol)));

        let algebra = FusionAlgebra::new(labels, involution, structure)
            .map_err(|e| PairError::AxiomCheckFailed(e.to_string()))?;
        let report = algebra.check_axioms();
        if !report.all_passed() {
            return Err(PairError::AxiomCheckFailed(
                report.first_failure().and_then(|c| c.failure.clone()).unwrap_or_default(),
            ));
        }
        Ok(algebra)
    }

    /// The full outcome: algebra or witness, plus certificates.
    pub fn result(&self) -> PairAlgebraResult {
        let certificates = self.certificates();
        match self.build_algebra() {
            Ok(algebra) => PairAlgebraResult {
                admissible: true,
                algebra: Some(algebra),
                witness: None,
                certificates,
            },
            Err(PairError::NotAdmissible(witness)) => PairAlgebraResult {
                admissible: false,
                algebra: None,
                witness: Some(witness),
                certificates,
            },
            Err(other) => panic!("internal failure constructing the pair algebra: {other}"),
        }
    }

    /// Brute-force associativity over the four tag patterns, evaluated on
    /// raw class functions so it also runs for non-admissible pairs.
    pub fn verify_associativity(&self) -> AssociativityReport {
        convolution::verify_associativity(self)
    }
}
