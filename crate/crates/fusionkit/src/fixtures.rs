//! Regression suite over ten worked group/subgroup pairs.
//!
//! Every expected structure constant below was derived independently from
//! the classical character tables of the groups involved: restriction
//! multiplicities pin the bullet products, and the degree identity
//! `deg(ind tau) = [G:G0] deg(tau)` cross-checks every right-hand side.
//! Basis labels follow the gamma/rho display convention of
//! [`BasisLabel::text`]; the resolver of each fixture maps that labelling
//! onto the computed character-table order, which may differ.
//!
//! [`BasisLabel::text`]: crate::fusion::BasisLabel::text

use std::sync::Arc;

use num_complex::Complex64;

use crate::fusion::dimension_function;
use crate::group::{build_group, GroupSpec};
use crate::pair::{AssocLaw, GroupPair};
use crate::Tol;

const SQRT_2: f64 = std::f64::consts::SQRT_2;
const SQRT_3: f64 = 1.732_050_807_568_877_2;
const TWO_SQRT_3: f64 = 2.0 * SQRT_3;

/// One expected product: `lhs.0 * lhs.1 = sum of coeff * basis`, in fixture
/// (gamma/rho) indexing. Unlisted coefficients are asserted to be zero.
pub struct Equation {
    pub lhs: (usize, usize),
    pub rhs: &'static [(u64, usize)],
}

/// Maps fixture indices (circles first, then bullets) to computed basis
/// indices, or explains why the tables cannot be aligned.
type Resolver = fn(&GroupPair) -> Result<Vec<usize>, String>;

pub struct AlgebraExpectation {
    pub circles: usize,
    pub bullets: usize,
    pub resolver: Resolver,
    pub equations: &'static [Equation],
    /// Expected dimension values in fixture indexing, checked to 1e-9.
    pub dims: &'static [f64],
    pub notes: &'static [&'static str],
}

pub enum Expectation {
    Algebra(AlgebraExpectation),
    /// The pair must be refused with a witness, and exactly the triple
    /// bullet associativity law must fail.
    Refused,
}

pub struct Fixture {
    pub name: &'static str,
    pub group_spec: &'static str,
    pub subgroup: &'static [&'static str],
    pub expectation: Expectation,
}

#[derive(Clone, Debug)]
pub struct FixtureReport {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
    pub notes: Vec<String>,
}

macro_rules! eq {
    ($i:expr, $j:expr => $($coeff:expr => $k:expr),+) => {
        Equation { lhs: ($i, $j), rhs: &[$(($coeff, $k)),+] }
    };
}

// ---------------------------------------------------------------------------
// Resolvers
// ---------------------------------------------------------------------------

fn element(pair: &GroupPair, label: &str) -> Result<usize, String> {
    pair.group().element_by_label(label).ok_or_else(|| format!("no element {label:?}"))
}

/// The unique parent-table row with the given degree and the given values at
/// the given elements.
fn circle_row(
    pair: &GroupPair,
    degree: usize,
    constraints: &[(&str, Complex64)],
) -> Result<usize, String> {
    let mut found = None;
    'rows: for (r, ch) in pair.parent_table().irreducibles().iter().enumerate() {
        if ch.degree() != degree {
            continue;
        }
        for &(label, expected) in constraints {
            let g = element(pair, label)?;
            if (ch.function().value_at(g) - expected).norm() > 1e-6 {
                continue 'rows;
            }
        }
        if found.replace(r).is_some() {
            return Err(format!("constraints {constraints:?} match more than one row"));
        }
    }
    found.ok_or_else(|| format!("no character row matches {constraints:?}"))
}

fn identity_map(pair: &GroupPair) -> Result<Vec<usize>, String> {
    Ok((0..pair.parent_table().len() + pair.sub_table().len()).collect())
}

fn re(x: f64) -> Complex64 {
    Complex64::new(x, 0.0)
}

/// Cyclic four over its order-two subgroup: the fixture numbering walks the
/// powers of a faithful character, while the table sorts the real-valued
/// character first.
fn resolve_z4(pair: &GroupPair) -> Result<Vec<usize>, String> {
    let i = Complex64::new(0.0, 1.0);
    let g1 = circle_row(pair, 1, &[("1", i)])?;
    let g2 = circle_row(pair, 1, &[("1", re(-1.0))])?;
    let g3 = circle_row(pair, 1, &[("1", -i)])?;
    let n = 4;
    Ok(vec![0, g1, g2, g3, n, n + 1])
}

/// Klein four over its first factor: the character trivial on the subgroup
/// sits in the gamma2 slot.
fn resolve_v4(pair: &GroupPair) -> Result<Vec<usize>, String> {
    let g1 = circle_row(pair, 1, &[("(1,0)", re(-1.0)), ("(0,1)", re(1.0))])?;
    let g2 = circle_row(pair, 1, &[("(1,0)", re(1.0)), ("(0,1)", re(-1.0))])?;
    let g3 = circle_row(pair, 1, &[("(1,0)", re(-1.0)), ("(0,1)", re(-1.0))])?;
    let n = 4;
    Ok(vec![0, g1, g2, g3, n, n + 1])
}

/// Dihedral of order eight over a reflection: gamma1 is the linear character
/// trivial on the subgroup, gamma2 the two-dimensional one.
fn resolve_d4(pair: &GroupPair) -> Result<Vec<usize>, String> {
    let g1 = circle_row(pair, 1, &[("r1", re(-1.0)), ("s0", re(1.0))])?;
    let g2 = circle_row(pair, 2, &[])?;
    let g3 = circle_row(pair, 1, &[("r1", re(1.0)), ("s0", re(-1.0))])?;
    let g4 = circle_row(pair, 1, &[("r1", re(-1.0)), ("s0", re(-1.0))])?;
    let n = 5;
    Ok(vec![0, g1, g2, g3, g4, n, n + 1])
}

/// Alternating four over a three-cycle: gamma1 is the linear character
/// restricting to the subgroup row tau1, gamma2 its conjugate, gamma3 the
/// three-dimensional one.
fn resolve_a4(pair: &GroupPair) -> Result<Vec<usize>, String> {
    let gen = element(pair, "(123)")?;
    let inside = pair
        .embedding()
        .from_parent(gen)
        .ok_or("the three-cycle must generate the subgroup")?;
    let tau1_value = pair.sub_table().character(1).function().value_at(inside);
    let g1 = circle_row(pair, 1, &[("(123)", tau1_value)])?;
    let g2 = circle_row(pair, 1, &[("(123)", tau1_value.conj())])?;
    let g3 = circle_row(pair, 3, &[])?;
    let n = 4;
    Ok(vec![0, g1, g2, g3, n, n + 1, n + 2])
}

/// Symmetric four: gamma3 is the degree-three character whose restriction to
/// a transposition contains the trivial twice, gamma4 its sign twist.
fn resolve_s4(pair: &GroupPair) -> Result<Vec<usize>, String> {
    let g1 = circle_row(pair, 1, &[("(12)", re(-1.0))])?;
    let g2 = circle_row(pair, 2, &[])?;
    let g3 = circle_row(pair, 3, &[("(12)", re(1.0))])?;
    let g4 = circle_row(pair, 3, &[("(12)", re(-1.0))])?;
    let n = 5;
    let mut map = vec![0, g1, g2, g3, g4];
    map.extend((0..pair.sub_table().len()).map(|j| n + j));
    Ok(map)
}

// ---------------------------------------------------------------------------
// Fixture data
// ---------------------------------------------------------------------------

static Z2_TRIVIAL_EQS: &[Equation] = &[
    eq!(1, 1 => 1 => 0),
    eq!(2, 2 => 1 => 0, 1 => 1),
    eq!(1, 2 => 1 => 2),
];

static Z3_TRIVIAL_EQS: &[Equation] = &[
    eq!(1, 1 => 1 => 2),
    eq!(2, 2 => 1 => 1),
    eq!(1, 2 => 1 => 0),
    eq!(3, 3 => 1 => 0, 1 => 1, 1 => 2),
    eq!(1, 3 => 1 => 3),
    eq!(2, 3 => 1 => 3),
];

static S3_Z2_EQS: &[Equation] = &[
    eq!(1, 1 => 1 => 0),
    eq!(2, 2 => 1 => 0, 1 => 1, 1 => 2),
    eq!(1, 2 => 1 => 2),
    eq!(3, 3 => 1 => 0, 1 => 2),
    eq!(4, 4 => 1 => 0, 1 => 2),
    eq!(3, 4 => 1 => 1, 1 => 2),
    eq!(4, 3 => 1 => 1, 1 => 2),
    eq!(0, 3 => 1 => 3),
    eq!(1, 3 => 1 => 4),
    eq!(2, 3 => 1 => 3, 1 => 4),
    eq!(0, 4 => 1 => 4),
    eq!(1, 4 => 1 => 3),
    eq!(2, 4 => 1 => 3, 1 => 4),
];

static Z4_Z2_EQS: &[Equation] = &[
    eq!(1, 1 => 1 => 2),
    eq!(2, 2 => 1 => 0),
    eq!(3, 3 => 1 => 2),
    eq!(1, 2 => 1 => 3),
    eq!(1, 3 => 1 => 0),
    eq!(2, 3 => 1 => 1),
    eq!(4, 4 => 1 => 0, 1 => 2),
    eq!(5, 5 => 1 => 0, 1 => 2),
    eq!(4, 5 => 1 => 1, 1 => 3),
    eq!(5, 4 => 1 => 1, 1 => 3),
    eq!(0, 4 => 1 => 4),
    eq!(1, 4 => 1 => 5),
    eq!(2, 4 => 1 => 4),
    eq!(3, 4 => 1 => 5),
    eq!(0, 5 => 1 => 5),
    eq!(1, 5 => 1 => 4),
    eq!(2, 5 => 1 => 5),
    eq!(3, 5 => 1 => 4),
];

static V4_Z2_EQS: &[Equation] = &[
    eq!(1, 1 => 1 => 0),
    eq!(2, 2 => 1 => 0),
    eq!(3, 3 => 1 => 0),
    eq!(1, 2 => 1 => 3),
    eq!(1, 3 => 1 => 2),
    eq!(2, 3 => 1 => 1),
    eq!(4, 4 => 1 => 0, 1 => 2),
    eq!(5, 5 => 1 => 0, 1 => 2),
    eq!(4, 5 => 1 => 1, 1 => 3),
    eq!(5, 4 => 1 => 1, 1 => 3),
    eq!(0, 4 => 1 => 4),
    eq!(1, 4 => 1 => 5),
    eq!(2, 4 => 1 => 4),
    eq!(3, 4 => 1 => 5),
    eq!(0, 5 => 1 => 5),
    eq!(1, 5 => 1 => 4),
    eq!(2, 5 => 1 => 5),
    eq!(3, 5 => 1 => 4),
];

static D4_Z2_EQS: &[Equation] = &[
    eq!(1, 1 => 1 => 0),
    eq!(2, 2 => 1 => 0, 1 => 1, 1 => 3, 1 => 4),
    eq!(3, 3 => 1 => 0),
    eq!(4, 4 => 1 => 0),
    eq!(1, 2 => 1 => 2),
    eq!(1, 3 => 1 => 4),
    eq!(1, 4 => 1 => 3),
    eq!(2, 3 => 1 => 2),
    eq!(2, 4 => 1 => 2),
    eq!(3, 4 => 1 => 1),
    eq!(5, 5 => 1 => 0, 1 => 1, 1 => 2),
    eq!(6, 6 => 1 => 0, 1 => 1, 1 => 2),
    eq!(5, 6 => 1 => 2, 1 => 3, 1 => 4),
    eq!(1, 5 => 1 => 5),
    eq!(2, 5 => 1 => 5, 1 => 6),
    eq!(3, 5 => 1 => 6),
    eq!(4, 5 => 1 => 6),
    eq!(1, 6 => 1 => 6),
    eq!(2, 6 => 1 => 5, 1 => 6),
    eq!(3, 6 => 1 => 5),
    eq!(4, 6 => 1 => 5),
];

static A4_Z3_EQS: &[Equation] = &[
    eq!(1, 1 => 1 => 2),
    eq!(2, 2 => 1 => 1),
    eq!(3, 3 => 1 => 0, 1 => 1, 1 => 2, 2 => 3),
    eq!(1, 2 => 1 => 0),
    eq!(1, 3 => 1 => 3),
    eq!(2, 3 => 1 => 3),
    eq!(4, 4 => 1 => 0, 1 => 3),
    eq!(5, 6 => 1 => 0, 1 => 3),
    eq!(4, 5 => 1 => 1, 1 => 3),
    eq!(4, 6 => 1 => 2, 1 => 3),
    eq!(1, 4 => 1 => 5),
    eq!(2, 4 => 1 => 6),
    eq!(1, 5 => 1 => 6),
    eq!(2, 5 => 1 => 4),
    eq!(3, 4 => 1 => 4, 1 => 5, 1 => 6),
    eq!(3, 5 => 1 => 4, 1 => 5, 1 => 6),
    eq!(3, 6 => 1 => 4, 1 => 5, 1 => 6),
];

static S4_Z2_EQS: &[Equation] = &[
    eq!(1, 1 => 1 => 0),
    eq!(2, 2 => 1 => 0, 1 => 1, 1 => 2),
    eq!(3, 3 => 1 => 0, 1 => 2, 1 => 3, 1 => 4),
    eq!(4, 4 => 1 => 0, 1 => 2, 1 => 3, 1 => 4),
    eq!(1, 2 => 1 => 2),
    eq!(1, 3 => 1 => 4),
    eq!(1, 4 => 1 => 3),
    eq!(2, 3 => 1 => 3, 1 => 4),
    eq!(2, 4 => 1 => 3, 1 => 4),
    eq!(3, 4 => 1 => 1, 1 => 2, 1 => 3, 1 => 4),
    eq!(5, 5 => 1 => 0, 1 => 2, 2 => 3, 1 => 4),
    eq!(6, 6 => 1 => 0, 1 => 2, 2 => 3, 1 => 4),
    eq!(5, 6 => 1 => 1, 1 => 2, 1 => 3, 2 => 4),
    eq!(6, 5 => 1 => 1, 1 => 2, 1 => 3, 2 => 4),
    eq!(0, 5 => 1 => 5),
    eq!(1, 5 => 1 => 6),
    eq!(2, 5 => 1 => 5, 1 => 6),
    eq!(3, 5 => 2 => 5, 1 => 6),
    eq!(4, 5 => 1 => 5, 2 => 6),
    eq!(0, 6 => 1 => 6),
    eq!(1, 6 => 1 => 5),
    eq!(2, 6 => 1 => 5, 1 => 6),
    eq!(3, 6 => 1 => 5, 2 => 6),
    eq!(4, 6 => 2 => 5, 1 => 6),
];

static S4_S3_EQS: &[Equation] = &[
    eq!(1, 1 => 1 => 0),
    eq!(2, 2 => 1 => 0, 1 => 1, 1 => 2),
    eq!(3, 3 => 1 => 0, 1 => 2, 1 => 3, 1 => 4),
    eq!(4, 4 => 1 => 0, 1 => 2, 1 => 3, 1 => 4),
    eq!(1, 2 => 1 => 2),
    eq!(1, 3 => 1 => 4),
    eq!(1, 4 => 1 => 3),
    eq!(2, 3 => 1 => 3, 1 => 4),
    eq!(2, 4 => 1 => 3, 1 => 4),
    eq!(3, 4 => 1 => 1, 1 => 2, 1 => 3, 1 => 4),
    eq!(5, 5 => 1 => 0, 1 => 3),
    eq!(6, 6 => 1 => 0, 1 => 3),
    eq!(7, 7 => 1 => 0, 1 => 1, 1 => 2, 2 => 3, 2 => 4),
    eq!(6, 7 => 1 => 2, 1 => 3, 1 => 4),
    eq!(0, 5 => 1 => 5),
    eq!(1, 5 => 1 => 6),
    eq!(2, 5 => 1 => 7),
    eq!(3, 5 => 1 => 5, 1 => 7),
    eq!(4, 5 => 1 => 6, 1 => 7),
    eq!(0, 6 => 1 => 6),
    eq!(1, 6 => 1 => 5),
    eq!(2, 6 => 1 => 7),
    eq!(3, 6 => 1 => 6, 1 => 7),
    eq!(4, 6 => 1 => 5, 1 => 7),
    eq!(0, 7 => 1 => 7),
    eq!(1, 7 => 1 => 7),
    eq!(2, 7 => 1 => 5, 1 => 6, 1 => 7),
    eq!(3, 7 => 1 => 5, 1 => 6, 2 => 7),
    eq!(4, 7 => 1 => 5, 1 => 6, 2 => 7),
];

static FIXTURES: &[Fixture] = &[
    Fixture {
        name: "z2_over_trivial",
        group_spec: "Z2",
        subgroup: &[],
        expectation: Expectation::Algebra(AlgebraExpectation {
            circles: 2,
            bullets: 1,
            resolver: identity_map,
            equations: Z2_TRIVIAL_EQS,
            dims: &[1.0, 1.0, SQRT_2],
            notes: &[],
        }),
    },
    Fixture {
        name: "z3_over_trivial",
        group_spec: "Z3",
        subgroup: &[],
        expectation: Expectation::Algebra(AlgebraExpectation {
            circles: 3,
            bullets: 1,
            resolver: identity_map,
            equations: Z3_TRIVIAL_EQS,
            dims: &[1.0, 1.0, 1.0, SQRT_3],
            notes: &["the two nontrivial characters are interchangeable; the equation set is symmetric under swapping them"],
        }),
    },
    Fixture {
        name: "s3_over_z2",
        group_spec: "S3",
        subgroup: &["(12)"],
        expectation: Expectation::Algebra(AlgebraExpectation {
            circles: 3,
            bullets: 2,
            resolver: identity_map,
            equations: S3_Z2_EQS,
            dims: &[1.0, 1.0, 2.0, SQRT_3, SQRT_3],
            notes: &[],
        }),
    },
    Fixture {
        name: "z4_over_z2",
        group_spec: "Z4",
        subgroup: &["2"],
        expectation: Expectation::Algebra(AlgebraExpectation {
            circles: 4,
            bullets: 2,
            resolver: resolve_z4,
            equations: Z4_Z2_EQS,
            dims: &[1.0, 1.0, 1.0, 1.0, SQRT_2, SQRT_2],
            notes: &["gamma3 gamma3 = gamma2: gamma3 is inverse to gamma1 while gamma1 gamma1 = gamma2 and gamma2 gamma2 = gamma0, so no other value is consistent"],
        }),
    },
    Fixture {
        name: "v4_over_z2",
        group_spec: "Z2xZ2",
        subgroup: &["(1,0)"],
        expectation: Expectation::Algebra(AlgebraExpectation {
            circles: 4,
            bullets: 2,
            resolver: resolve_v4,
            equations: V4_Z2_EQS,
            dims: &[1.0, 1.0, 1.0, 1.0, SQRT_2, SQRT_2],
            notes: &["same diagram shape as z4_over_z2 but a different circle block: the tensors are not isomorphic"],
        }),
    },
    Fixture {
        name: "s3_over_z3",
        group_spec: "S3",
        subgroup: &["(123)"],
        expectation: Expectation::Refused,
    },
    Fixture {
        name: "d4_over_z2",
        group_spec: "D4",
        subgroup: &["s0"],
        expectation: Expectation::Algebra(AlgebraExpectation {
            circles: 5,
            bullets: 2,
            resolver: resolve_d4,
            equations: D4_Z2_EQS,
            dims: &[1.0, 1.0, 2.0, 1.0, 1.0, 2.0, 2.0],
            notes: &["gamma2 is the two-dimensional character: gamma2 gamma2 = gamma0 + gamma1 + gamma3 + gamma4 forces d(gamma2) = 2"],
        }),
    },
    Fixture {
        name: "a4_over_z3",
        group_spec: "A4",
        subgroup: &["(123)"],
        expectation: Expectation::Algebra(AlgebraExpectation {
            circles: 4,
            bullets: 3,
            resolver: resolve_a4,
            equations: A4_Z3_EQS,
            dims: &[1.0, 1.0, 1.0, 3.0, 2.0, 2.0, 2.0],
            notes: &[],
        }),
    },
    Fixture {
        name: "s4_over_z2",
        group_spec: "S4",
        subgroup: &["(12)"],
        expectation: Expectation::Algebra(AlgebraExpectation {
            circles: 5,
            bullets: 2,
            resolver: resolve_s4,
            equations: S4_Z2_EQS,
            dims: &[1.0, 1.0, 2.0, 3.0, 3.0, TWO_SQRT_3, TWO_SQRT_3],
            notes: &[
                "rho0 rho0 = gamma0 + gamma2 + 2 gamma3 + gamma4: the coefficient two is forced by the degree identity (12 = 1 + 2 + 2*3 + 3) and matches the doubled diagram edge",
                "gamma3 rho0 = 2 rho0 + rho1 and the sign-twisted variants likewise carry a coefficient two",
            ],
        }),
    },
    Fixture {
        name: "s4_over_s3",
        group_spec: "S4",
        subgroup: &["(12)", "(123)"],
        expectation: Expectation::Algebra(AlgebraExpectation {
            circles: 5,
            bullets: 3,
            resolver: resolve_s4,
            equations: S4_S3_EQS,
            dims: &[1.0, 1.0, 2.0, 3.0, 3.0, 2.0, 2.0, 4.0],
            notes: &[
                "rho2 rho2 = gamma0 + gamma1 + gamma2 + 2 gamma3 + 2 gamma4: degree 16 = d(rho2)^2 requires both coefficients two",
                "gamma3 rho2 = gamma4 rho2 = rho0 + rho1 + 2 rho2 (degree 6 = 3 * 2)",
            ],
        }),
    },
];

/// The full fixture list, in a fixed order.
pub fn fixtures() -> &'static [Fixture] {
    FIXTURES
}

/// Runs a single fixture and reports the outcome.
pub fn run_one(fixture: &Fixture, tol: Tol) -> FixtureReport {
    let (passed, detail) = match try_run(fixture, tol) {
        Ok(detail) => (true, detail),
        Err(detail) => (false, detail),
    };
    FixtureReport { name: fixture.name, passed, detail, notes: fixture_notes(fixture) }
}

fn fixture_notes(fixture: &Fixture) -> Vec<String> {
    match &fixture.expectation {
        Expectation::Algebra(exp) => exp.notes.iter().map(|s| s.to_string()).collect(),
        Expectation::Refused => Vec::new(),
    }
}

/// Runs every fixture.
pub fn run_all(tol: Tol) -> Vec<FixtureReport> {
    fixtures().iter().map(|f| run_one(f, tol)).collect()
}

fn try_run(fixture: &Fixture, tol: Tol) -> Result<String, String> {
    let spec: GroupSpec = fixture
        .group_spec
        .parse()
        .map_err(|e| format!("group spec: {e}"))?;
    let group = Arc::new(build_group(&spec).map_err(|e| format!("group build: {e}"))?);
    let pair = GroupPair::from_labels(group, fixture.subgroup, tol)
        .map_err(|e| format!("pair setup: {e}"))?;
    match &fixture.expectation {
        Expectation::Refused => run_refused(&pair),
        Expectation::Algebra(exp) => run_algebra(&pair, exp, tol),
    }
}

fn run_refused(pair: &GroupPair) -> Result<String, String> {
    let result = pair.result();
    if result.admissible || result.algebra.is_some() {
        return Err("expected a refusal, but the pair was admissible".into());
    }
    let witness = result.witness.ok_or("refusal must carry a witness")?;
    let report = pair.verify_associativity();
    for law in [AssocLaw::CircleCircleCircle, AssocLaw::BulletCircleCircle, AssocLaw::BulletBulletCircle] {
        if !report.law(law).passed {
            return Err(format!("{law} must hold unconditionally"));
        }
    }
    let bbb = report.law(AssocLaw::BulletBulletBullet);
    if bbb.passed {
        return Err("the triple bullet law must fail for a refused pair".into());
    }
    Ok(format!(
        "refused with witness: {witness}; {} fails at {:?}",
        AssocLaw::BulletBulletBullet,
        bbb.counterexample.unwrap_or((0, 0, 0)),
    ))
}

fn run_algebra(pair: &GroupPair, exp: &AlgebraExpectation, tol: Tol) -> Result<String, String> {
    if pair.parent_table().len() != exp.circles || pair.sub_table().len() != exp.bullets {
        return Err(format!(
            "expected {}+{} characters, found {}+{}",
            exp.circles,
            exp.bullets,
            pair.parent_table().len(),
            pair.sub_table().len()
        ));
    }
    let algebra = pair.build_algebra().map_err(|e| format!("build: {e}"))?;
    let report = algebra.check_axioms();
    if !report.all_passed() {
        return Err(format!("axioms: {}", report.summary()));
    }

    let map = (exp.resolver)(pair)?;
    let total = exp.circles + exp.bullets;
    if map.len() != total {
        return Err(format!("resolver produced {} indices for {total} labels", map.len()));
    }

    // Every listed product must match coefficient-for-coefficient.
    for equation in exp.equations {
        let (i, j) = equation.lhs;
        let mut expected = vec![0u64; total];
        for &(coeff, k) in equation.rhs {
            expected[k] += coeff;
        }
        for (k, &want) in expected.iter().enumerate() {
            let actual = algebra.coefficient(map[i], map[j], map[k]);
            if actual != want {
                return Err(format!(
                    "product ({}, {}): coefficient of {} is {actual}, expected {want}",
                    label_text(exp, i),
                    label_text(exp, j),
                    label_text(exp, k),
                ));
            }
        }
    }

    // Dimension values, in fixture indexing.
    let dims = dimension_function(&algebra, tol).map_err(|e| format!("dimensions: {e}"))?;
    for (p, &expected) in exp.dims.iter().enumerate() {
        let actual = dims.value(map[p]);
        if (actual - expected).abs() > 1e-9 {
            return Err(format!(
                "dimension of {}: {actual} vs expected {expected}",
                label_text(exp, p)
            ));
        }
    }

    // Tag grading: products of like tags land in circles, mixed products in
    // bullets.
    let n = exp.circles;
    for i in 0..total {
        for j in 0..total {
            for k in algebra.support(i, j) {
                let expected_circle = (i < n) == (j < n);
                if (k < n) != expected_circle {
                    return Err(format!("grading violated at product ({i}, {j})"));
                }
            }
        }
    }

    Ok(format!(
        "{} equations exact, dimensions within 1e-9, axioms pass",
        exp.equations.len()
    ))
}

fn label_text(exp: &AlgebraExpectation, p: usize) -> String {
    if p < exp.circles {
        format!("gamma{p}")
    } else {
        format!("rho{}", p - exp.circles)
    }
}
