//! Computational engine for fusion rule algebras built from the irreducible
//! characters of a finite group `G` and a subgroup `G0`.
//!
//! The crate covers the whole pipeline:
//!
//! * [`group`] — finite groups as explicit Cayley tables, subgroups, conjugacy
//!   classes, and the conjugator sets that drive admissibility.
//! * [`chars`] — class functions, irreducible character tables (computed with
//!   the class-algebra eigenvector method), induction, restriction, and
//!   Frobenius multiplicities.
//! * [`fusion`] — abstract fusion rule algebras and hypergroups: axiom
//!   checks, dimension functions, Haar elements, normalization, joins.
//! * [`pair`] — the convolution algebra on the union of the two character
//!   sets, admissibility of `(G, G0)`, and the associativity diagnostics.
//! * [`diagram`] — bipartite Frobenius diagrams and DOT output.
//! * [`json`] — a versioned JSON interchange format for every entity.
//! * [`fixtures`] — a regression suite of worked small-group pairs.

pub mod chars;
pub mod diagram;
pub mod fixtures;
pub mod fusion;
pub mod group;
pub mod json;
pub mod pair;

/// Default tolerance for floating-point value equality.
pub const EPS_EQ: f64 = 1e-8;
/// Default tolerance when rounding floats to integers (multiplicities, degrees).
pub const EPS_INT: f64 = 1e-6;

/// Numerical tolerances threaded through every float comparison.
///
/// `eq` guards value equality, `int` guards integrality checks. Rounding from
/// floats to integer structure constants happens in exactly one place
/// ([`chars::decompose`]); everything downstream consumes integers.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Tol {
    pub eq: f64,
    pub int: f64,
}

impl Default for Tol {
    fn default() -> Self {
        Tol { eq: EPS_EQ, int: EPS_INT }
    }
}

impl Tol {
    pub fn new(eq: f64, int: f64) -> Self {
        Tol { eq, int }
    }
}
