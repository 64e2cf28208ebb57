//! Property tests over randomly generated subgroups: the admissibility
//! theorem, conjugator-set containments, reciprocity, grading, and
//! serialization round trips must hold for every subgroup the generator
//! closure produces, not only the curated catalog.

use std::sync::{Arc, OnceLock};

use proptest::prelude::*;

use fusionkit::chars::{decompose, induce, inner_product, restrict};
use fusionkit::fusion::dimension_function;
use fusionkit::group::{build_group, conjugator_set, FiniteGroup, GroupSpec, SubgroupEmbedding};
use fusionkit::json::{algebra_from_json, algebra_to_json};
use fusionkit::pair::{AssocLaw, GroupPair};
use fusionkit::Tol;

const POOL: &[&str] = &["Z4", "Z6", "S3", "D4", "A4", "S4"];

fn pool_group(index: usize) -> Arc<FiniteGroup> {
    static GROUPS: OnceLock<Vec<Arc<FiniteGroup>>> = OnceLock::new();
    let groups = GROUPS.get_or_init(|| {
        POOL.iter()
            .map(|spec| Arc::new(build_group(&spec.parse::<GroupSpec>().unwrap()).unwrap()))
            .collect()
    });
    Arc::clone(&groups[index % groups.len()])
}

prop_compose! {
    /// A random subgroup embedding: a pool group with up to two random
    /// generators (possibly none, giving the trivial subgroup).
    fn arb_embedding()(group_index in 0usize..POOL.len(), seeds in proptest::collection::vec(0usize..24, 0..3))
        -> SubgroupEmbedding
    {
        let group = pool_group(group_index);
        let gens: Vec<usize> = seeds.iter().map(|&s| s % group.order()).collect();
        SubgroupEmbedding::generate(&group, &gens).unwrap()
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn conjugator_sets_contain_the_subgroup_and_meet_the_index_bound(emb in arb_embedding()) {
        let group = emb.parent().clone();
        for &g in emb.members() {
            let x = conjugator_set(&emb, g).unwrap();
            for &m in emb.members() {
                prop_assert!(x.contains(&m));
            }
            // The induced trivial character evaluates to index * |X| / |G|
            // at g, which is at least one.
            let value = emb.index() as f64 * x.len() as f64 / group.order() as f64;
            prop_assert!(value >= 1.0 - 1e-12);
            // Right translation by the centralizer preserves the set.
            for &s in &x {
                for &c in &group.centralizer(g) {
                    prop_assert!(x.contains(&group.mul(s, c)));
                }
            }
        }
    }

    #[test]
    fn lagrange_holds_for_generated_subgroups(emb in arb_embedding()) {
        prop_assert_eq!(emb.order() * emb.index(), emb.parent().order());
    }

    #[test]
    fn admissibility_is_equivalent_to_the_triple_bullet_law(emb in arb_embedding()) {
        let pair = GroupPair::from_embedding(emb, Tol::default()).unwrap();
        let report = pair.verify_associativity();
        prop_assert!(report.law(AssocLaw::CircleCircleCircle).passed);
        prop_assert!(report.law(AssocLaw::BulletCircleCircle).passed);
        prop_assert!(report.law(AssocLaw::BulletBulletCircle).passed);
        prop_assert_eq!(
            pair.admissibility().admissible,
            report.law(AssocLaw::BulletBulletBullet).passed
        );
    }

    #[test]
    fn reciprocity_and_degree_additivity(emb in arb_embedding()) {
        let pair = GroupPair::from_embedding(emb, Tol::default()).unwrap();
        let emb = pair.embedding();
        for tau in pair.sub_table().irreducibles() {
            let ind = induce(tau.function(), emb);
            let multiplicities = decompose(&ind, pair.parent_table(), Tol::default()).unwrap();
            // Degree additivity for the induced character.
            let total: usize = multiplicities
                .iter()
                .zip(pair.parent_table().degrees())
                .map(|(&m, d)| m as usize * d)
                .sum();
            prop_assert_eq!(total, emb.index() * tau.degree());
            // Reciprocity per irreducible.
            for (pi, &m) in pair.parent_table().irreducibles().iter().zip(&multiplicities) {
                let res = restrict(pi.function(), emb);
                let back = inner_product(tau.function(), &res).unwrap();
                prop_assert!((back.re - m as f64).abs() < 1e-6 && back.im.abs() < 1e-6);
            }
        }
    }

    #[test]
    fn admissible_pairs_build_graded_algebras_that_round_trip(emb in arb_embedding()) {
        let pair = GroupPair::from_embedding(emb, Tol::default()).unwrap();
        if !pair.admissibility().admissible {
            return Ok(());
        }
        let algebra = pair.build_algebra().unwrap();
        prop_assert!(algebra.check_axioms().all_passed());
        // The tag grading is the order-two quotient of the basis.
        let circles = pair.parent_table().len();
        for i in 0..algebra.len() {
            for j in 0..algebra.len() {
                for k in algebra.support(i, j) {
                    prop_assert_eq!((i < circles) == (j < circles), k < circles);
                }
            }
        }
        // The involution preserves dimension values.
        let dims = dimension_function(&algebra, Tol::default()).unwrap();
        for i in 0..algebra.len() {
            let dual = algebra.dual(i);
            prop_assert!((dims.value(i) - dims.value(dual)).abs() < 1e-8);
        }
        // Serialization round trip is exact on the integer tensor.
        let back = algebra_from_json(&algebra_to_json(&algebra)).unwrap();
        prop_assert_eq!(algebra, back);
    }

    #[test]
    fn restriction_then_induction_contains_the_original(emb in arb_embedding()) {
        // Every irreducible of the subgroup appears in the restriction of
        // its own induction with multiplicity at least one.
        let pair = GroupPair::from_embedding(emb, Tol::default()).unwrap();
        for tau in pair.sub_table().irreducibles() {
            let round = restrict(&induce(tau.function(), pair.embedding()), pair.embedding());
            let m = inner_product(&round, tau.function()).unwrap();
            prop_assert!(m.re > 1.0 - 1e-9);
        }
    }
}
