//! Acceptance suite: every release-gating criterion as one test, each
//! printing a single pass/fail line. The catalog covers all ten worked
//! fixture pairs plus additional subgroups up to order 24.

use std::sync::Arc;
use std::time::Instant;

use fusionkit::chars::{character_ring, frobenius_multiplicity, induce, inner_product, restrict, CharacterTable};
use fusionkit::diagram::{emit_dot, frobenius_diagram};
use fusionkit::fixtures;
use fusionkit::fusion::{
    algebra_isomorphic, check_hypergroup_axioms, dimension_function, direct_product_with_z2,
    haar_element, join, normalize_to_hypergroup, FusionAlgebra,
};
use fusionkit::group::{build_group, FiniteGroup, GroupSpec};
use fusionkit::pair::{AssocLaw, GroupPair};
use fusionkit::Tol;

const SQRT_2: f64 = std::f64::consts::SQRT_2;
const SQRT_3: f64 = 1.732_050_807_568_877_2;

/// Pairs of (group spec, subgroup generator labels). Orders stay at or
/// below 24; both admissible and refused pairs are represented.
const CATALOG: &[(&str, &[&str])] = &[
    ("Z2", &[]),
    ("Z3", &[]),
    ("Z4", &[]),
    ("Z4", &["2"]),
    ("Z2xZ2", &["(1,0)"]),
    ("Z6", &["3"]),
    ("Z6", &["2"]),
    ("S3", &[]),
    ("S3", &["(12)"]),
    ("S3", &["(123)"]),
    ("D4", &["s0"]),
    ("D4", &["r1"]),
    ("D4", &["r2"]),
    ("A4", &[]),
    ("A4", &["(123)"]),
    ("A4", &["(12)(34)", "(13)(24)"]),
    ("A4", &["(12)(34)"]),
    ("S4", &["(12)"]),
    ("S4", &["(12)", "(123)"]),
    ("S4", &["(1234)"]),
    ("S4", &["(123)", "(12)(34)"]),
    ("S4", &["(12)(34)", "(13)(24)"]),
    ("S4", &["(1234)", "(13)"]),
    ("S4", &[]),
];

fn group(spec: &str) -> Arc<FiniteGroup> {
    Arc::new(build_group(&spec.parse::<GroupSpec>().unwrap()).unwrap())
}

fn pair(spec: &str, gens: &[&str]) -> GroupPair {
    GroupPair::from_labels(group(spec), gens, Tol::default()).unwrap()
}

fn catalog_pairs() -> Vec<GroupPair> {
    CATALOG.iter().map(|(spec, gens)| pair(spec, gens)).collect()
}

fn dims_multiset(alg: &FusionAlgebra) -> Vec<f64> {
    let d = dimension_function(alg, Tol::default()).unwrap();
    let mut values = d.values().to_vec();
    values.sort_by(f64::total_cmp);
    values
}

fn assert_multiset_close(actual: &[f64], expected: &[f64], tol: f64, what: &str) {
    assert_eq!(actual.len(), expected.len(), "{what}: length");
    let mut expected = expected.to_vec();
    expected.sort_by(f64::total_cmp);
    for (a, e) in actual.iter().zip(&expected) {
        assert!((a - e).abs() <= tol, "{what}: {a} vs {e}");
    }
}

#[test]
fn criterion_01_fixture_regression_is_exact_and_fast() {
    let start = Instant::now();
    let reports = fixtures::run_all(Tol::default());
    for report in &reports {
        assert!(report.passed, "{}: {}", report.name, report.detail);
    }
    let elapsed = start.elapsed();
    assert!(elapsed.as_secs_f64() < 10.0, "regression suite took {elapsed:?}");
    println!(
        "[PASS] criterion 01: {} fixtures reproduce their structure equations exactly in {elapsed:?}",
        reports.len()
    );
}

#[test]
fn criterion_02_the_negative_pair_is_refused_with_diagnostics() {
    let p = pair("S3", &["(123)"]);
    let result = p.result();
    assert!(!result.admissible);
    assert!(result.algebra.is_none());
    let witness = result.witness.expect("refusal carries a witness");
    let g = p.group();
    // The witness triple genuinely separates character values.
    let conj = g.conjugate(witness.s, witness.g);
    let tau = p.sub_table().character(witness.tau).function();
    let inside = |x| p.embedding().from_parent(x).unwrap();
    let diff = (tau.value_at(inside(witness.g)) - tau.value_at(inside(conj))).norm();
    assert!(diff > 1e-6);

    let report = p.verify_associativity();
    assert!(report.law(AssocLaw::CircleCircleCircle).passed);
    assert!(report.law(AssocLaw::BulletCircleCircle).passed);
    assert!(report.law(AssocLaw::BulletBulletCircle).passed);
    assert!(!report.law(AssocLaw::BulletBulletBullet).passed);
    println!("[PASS] criterion 02: the symmetric-three over rotation pair is refused; only the triple bullet law fails");
}

#[test]
fn criterion_03_dimension_values_match_to_1e9() {
    let two_sqrt3 = 2.0 * SQRT_3;
    let cases: &[(&str, &[&str], &[f64])] = &[
        ("Z2", &[], &[1.0, 1.0, SQRT_2]),
        ("Z3", &[], &[1.0, 1.0, 1.0, SQRT_3]),
        ("S3", &["(12)"], &[1.0, 1.0, 2.0, SQRT_3, SQRT_3]),
        ("Z4", &["2"], &[1.0, 1.0, 1.0, 1.0, SQRT_2, SQRT_2]),
        ("Z2xZ2", &["(1,0)"], &[1.0, 1.0, 1.0, 1.0, SQRT_2, SQRT_2]),
        ("A4", &["(123)"], &[1.0, 1.0, 1.0, 3.0, 2.0, 2.0, 2.0]),
        ("S4", &["(12)"], &[1.0, 1.0, 2.0, 3.0, 3.0, two_sqrt3, two_sqrt3]),
        ("S4", &["(12)", "(123)"], &[1.0, 1.0, 2.0, 3.0, 3.0, 2.0, 2.0, 4.0]),
    ];
    for (spec, gens, expected) in cases {
        let alg = pair(spec, gens).build_algebra().unwrap();
        assert_multiset_close(&dims_multiset(&alg), expected, 1e-9, spec);
    }
    println!("[PASS] criterion 03: dimension values of all eight admissible fixtures match to 1e-9");
}

#[test]
fn criterion_04_admissibility_agrees_with_brute_force_associativity() {
    let pairs = catalog_pairs();
    assert!(pairs.len() >= 15, "catalog must hold at least 15 pairs");
    let mut admissible = 0usize;
    for (p, (spec, gens)) in pairs.iter().zip(CATALOG) {
        let direct = p.admissibility().admissible;
        let report = p.verify_associativity();
        assert!(report.law(AssocLaw::CircleCircleCircle).passed, "{spec}/{gens:?}");
        assert!(report.law(AssocLaw::BulletCircleCircle).passed, "{spec}/{gens:?}");
        assert!(report.law(AssocLaw::BulletBulletCircle).passed, "{spec}/{gens:?}");
        assert_eq!(
            direct,
            report.law(AssocLaw::BulletBulletBullet).passed,
            "equivalence fails for {spec} over {gens:?}"
        );
        if direct {
            admissible += 1;
        }
    }
    println!(
        "[PASS] criterion 04: admissibility equals brute-force associativity on {} pairs ({} admissible, {} refused)",
        pairs.len(),
        admissible,
        pairs.len() - admissible
    );
}

#[test]
fn criterion_05_reciprocity_multiplicities_agree_both_ways() {
    let mut checked = 0usize;
    for p in catalog_pairs() {
        for tau in p.sub_table().irreducibles() {
            for pi in p.parent_table().irreducibles() {
                let via_ind = inner_product(&induce(tau.function(), p.embedding()), pi.function()).unwrap();
                let via_res = inner_product(tau.function(), &restrict(pi.function(), p.embedding())).unwrap();
                let rounded = via_ind.re.round();
                assert!((via_ind.re - rounded).abs() < 1e-6 && via_ind.im.abs() < 1e-6);
                assert!((via_res.re - rounded).abs() < 1e-6 && via_res.im.abs() < 1e-6);
                // The cross-checked accessor must agree and never error.
                let m = frobenius_multiplicity(tau, pi, p.embedding(), p.tol()).unwrap();
                assert_eq!(m as f64, rounded);
                checked += 1;
            }
        }
    }
    println!("[PASS] criterion 05: induction and restriction give identical multiplicities in {checked} cases");
}

#[test]
fn criterion_06_normalized_hypergroups_satisfy_their_axioms() {
    let mut count = 0usize;
    for p in catalog_pairs() {
        if !p.admissibility().admissible {
            continue;
        }
        let alg = p.build_algebra().unwrap();
        let dims = dimension_function(&alg, Tol::default()).unwrap();
        let h = normalize_to_hypergroup(&alg, &dims, Tol::default()).unwrap();
        for i in 0..h.len() {
            for j in 0..h.len() {
                let sum: f64 = (0..h.len()).map(|k| h.coefficient(i, j, k)).sum();
                assert!((sum - 1.0).abs() < 1e-9, "row sum {sum} at ({i}, {j})");
            }
            let expected = dims.value(i) * dims.value(i);
            assert!((h.weights()[i] - expected).abs() < 1e-9);
        }
        for (axiom, failure) in check_hypergroup_axioms(&h, Tol::default()) {
            assert!(failure.is_none(), "{axiom}: {failure:?}");
        }
        count += 1;
    }
    println!("[PASS] criterion 06: normalization yields valid hypergroups for {count} admissible pairs");
}

#[test]
fn criterion_07_haar_element_absorbs_every_basis_element() {
    // Pair algebras, character rings, joins, and graded doubles all count
    // as constructed algebras.
    let mut algebras: Vec<FusionAlgebra> = Vec::new();
    for p in catalog_pairs() {
        if p.admissibility().admissible {
            algebras.push(p.build_algebra().unwrap());
        }
    }
    for spec in ["Z2", "Z3", "Z4", "Z6", "S3", "D4", "A4", "S4"] {
        let g = group(spec);
        let table = CharacterTable::compute(&g, Tol::default()).unwrap();
        let ring = character_ring(&table, Tol::default()).unwrap();
        algebras.push(direct_product_with_z2(&ring));
        let dims = dimension_function(&ring, Tol::default()).unwrap();
        algebras.push(join(&ring, &dims, Tol::default()).unwrap());
        algebras.push(ring);
    }
    let count = algebras.len();
    for alg in algebras {
        let dims = dimension_function(&alg, Tol::default()).unwrap();
        // haar_element verifies the absorbing identity to 1e-8 internally.
        let coeffs = haar_element(&alg, &dims, Tol::default()).unwrap();
        for (c, d) in coeffs.iter().zip(dims.values()) {
            assert!((c - d).abs() < 1e-12);
        }
    }
    println!("[PASS] criterion 07: the Haar element absorbs multiplication in {count} constructed algebras");
}

#[test]
fn criterion_08_joins_and_graded_doubles_match_the_pair_construction() {
    for spec in ["Z2", "Z3", "S3", "A4"] {
        let g = group(spec);
        let table = CharacterTable::compute(&g, Tol::default()).unwrap();
        let ring = character_ring(&table, Tol::default()).unwrap();

        // Join against the trivial-subgroup pair algebra.
        let dims = dimension_function(&ring, Tol::default()).unwrap();
        let joined = join(&ring, &dims, Tol::default()).unwrap();
        let over_trivial = GroupPair::from_labels(Arc::clone(&g), &[], Tol::default())
            .unwrap()
            .build_algebra()
            .unwrap();
        assert!(
            algebra_isomorphic(&joined, &over_trivial, Tol::default()).is_some(),
            "{spec}: join differs from the trivial-subgroup pair algebra"
        );

        // Graded double against the whole-group pair algebra.
        let doubled = direct_product_with_z2(&ring);
        let whole_gens: Vec<String> = g.labels().to_vec();
        let whole_refs: Vec<&str> = whole_gens.iter().map(String::as_str).collect();
        let over_self = GroupPair::from_labels(Arc::clone(&g), &whole_refs, Tol::default())
            .unwrap()
            .build_algebra()
            .unwrap();
        assert!(
            algebra_isomorphic(&doubled, &over_self, Tol::default()).is_some(),
            "{spec}: graded double differs from the whole-group pair algebra"
        );
    }
    println!("[PASS] criterion 08: join and graded-double constructions agree with the pair algebras for Z2, Z3, S3, A4");
}

#[test]
fn criterion_09_diagram_shapes_and_degree_identity() {
    let d = frobenius_diagram(&pair("Z2", &[])).unwrap();
    assert!(d.is_path() && d.circles.len() + d.bullets.len() == 3, "three-node path expected");
    let d = frobenius_diagram(&pair("Z3", &[])).unwrap();
    assert!(d.is_star() && d.circles.len() + d.bullets.len() == 4, "four-node star expected");
    let d = frobenius_diagram(&pair("S3", &["(12)"])).unwrap();
    assert!(d.is_path() && d.circles.len() + d.bullets.len() == 5, "five-node path expected");

    for (p, (spec, gens)) in catalog_pairs().iter().zip(CATALOG) {
        let d = frobenius_diagram(p).unwrap();
        assert!(
            d.degree_identity_holds(p.embedding().index()),
            "degree identity fails for {spec} over {gens:?}"
        );
        // Deterministic output.
        assert_eq!(emit_dot(&d), emit_dot(&frobenius_diagram(p).unwrap()));
    }
    println!("[PASS] criterion 09: diagram shapes match (path-3, star-4, path-5) and the degree identity is exact on the whole catalog");
}

#[test]
fn criterion_10_character_table_invariants_across_the_catalog() {
    let specs = ["Z2", "Z3", "Z4", "Z2xZ2", "Z6", "S3", "D4", "A4", "S4"];
    for spec in specs {
        let g = group(spec);
        let table = CharacterTable::compute(&g, Tol::default()).unwrap();
        let order = g.order() as f64;
        // Row orthonormality.
        for i in 0..table.len() {
            for j in 0..table.len() {
                let ip = inner_product(table.character(i).function(), table.character(j).function())
                    .unwrap();
                let expected = if i == j { 1.0 } else { 0.0 };
                assert!(
                    (ip.re - expected).abs() < 1e-8 && ip.im.abs() < 1e-8,
                    "{spec}: row orthogonality at ({i}, {j})"
                );
            }
        }
        // Column orthogonality.
        for c1 in 0..g.class_count() {
            for c2 in 0..g.class_count() {
                let mut acc = num_complex::Complex64::default();
                for ch in table.irreducibles() {
                    acc += ch.function().value_on_class(c1) * ch.function().value_on_class(c2).conj();
                }
                acc /= order;
                let expected =
                    if c1 == c2 { 1.0 / g.classes()[c1].len() as f64 } else { 0.0 };
                assert!(
                    (acc.re - expected).abs() < 1e-8 && acc.im.abs() < 1e-8,
                    "{spec}: column orthogonality at ({c1}, {c2})"
                );
            }
        }
        // Degree squares sum exactly to the order.
        let sum: usize = table.degrees().iter().map(|d| d * d).sum();
        assert_eq!(sum, g.order(), "{spec}: degree square sum");
    }
    println!(
        "[PASS] criterion 10: orthogonality within 1e-8 and exact degree sums for {} groups",
        specs.len()
    );
}
