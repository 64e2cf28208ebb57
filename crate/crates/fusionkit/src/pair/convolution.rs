//! Associativity diagnostics for the tagged convolution, evaluated directly
//! on class functions without any integer decomposition, so the verifier
//! also works for pairs that fail to close into a fusion algebra.

use crate::chars::{induce, pointwise_product, restrict, ClassFunction};

use super::GroupPair;

/// A tagged class function: circle values live on the ambient group, bullet
/// values on the subgroup.
#[derive(Clone, Debug)]
enum Tagged {
    Circle(ClassFunction),
    Bullet(ClassFunction),
}

/// The four associativity patterns, by the tags of the three factors.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AssocLaw {
    /// (circle * circle) * circle
    CircleCircleCircle,
    /// (bullet * circle) * circle
    BulletCircleCircle,
    /// (bullet * bullet) * circle
    BulletBulletCircle,
    /// (bullet * bullet) * bullet
    BulletBulletBullet,
}

impl std::fmt::Display for AssocLaw {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let name = match self {
            AssocLaw::CircleCircleCircle => "(circle * circle) * circle",
            AssocLaw::BulletCircleCircle => "(bullet * circle) * circle",
            AssocLaw::BulletBulletCircle => "(bullet * bullet) * circle",
            AssocLaw::BulletBulletBullet => "(bullet * bullet) * bullet",
        };
        f.write_str(name)
    }
}

#[derive(Clone, Debug)]
pub struct LawResult {
    pub law: AssocLaw,
    pub passed: bool,
    /// Basis indices of the first counterexample, in iteration order.
    pub counterexample: Option<(usize, usize, usize)>,
    pub detail: Option<String>,
}

#[derive(Clone, Debug)]
pub struct AssociativityReport {
    pub laws: Vec<LawResult>,
}

impl AssociativityReport {
    pub fn all_passed(&self) -> bool {
        self.laws.iter().all(|l| l.passed)
    }

    pub fn law(&self, law: AssocLaw) -> &LawResult {
        self.laws.iter().find(|l| l.law == law).expect("all four laws are present")
    }

    pub fn summary(&self) -> String {
        self.laws
            .iter()
            .map(|l| {
                if l.passed {
                    format!("{}: pass", l.law)
                } else {
                    format!(
                        "{}: FAIL at {:?}{}",
                        l.law,
                        l.counterexample.unwrap_or((0, 0, 0)),
                        l.detail.as_deref().map(|d| format!(" ({d})")).unwrap_or_default()
                    )
                }
            })
            .collect::<Vec<_>>()
            .join("\n")
    }
}

fn convolve(pair: &GroupPair, a: &Tagged, b: &Tagged) -> Tagged {
    match (a, b) {
        (Tagged::Circle(f), Tagged::Circle(g)) => {
            Tagged::Circle(pointwise_product(f, g).expect("same ambient group"))
        }
        (Tagged::Circle(f), Tagged::Bullet(g)) => {
            let res = restrict(f, pair.embedding());
            Tagged::Bullet(pointwise_product(&res, g).expect("same subgroup"))
        }
        (Tagged::Bullet(f), Tagged::Circle(g)) => {
            let res = restrict(g, pair.embedding());
            Tagged::Bullet(pointwise_product(f, &res).expect("same subgroup"))
        }
        (Tagged::Bullet(f), Tagged::Bullet(g)) => {
            let product = pointwise_product(f, g).expect("same subgroup");
            Tagged::Circle(induce(&product, pair.embedding()))
        }
    }
}

fn equal(pair: &GroupPair, a: &Tagged, b: &Tagged) -> bool {
    let scale = 1.0 + pair.group().order() as f64;
    match (a, b) {
        (Tagged::Circle(f), Tagged::Circle(g)) | (Tagged::Bullet(f), Tagged::Bullet(g)) => {
            f.max_abs_difference(g) <= pair.tol().eq * scale
        }
        _ => false,
    }
}

/// Runs all four laws over every basis triple of the appropriate tags,
/// reporting the first counterexample per law.
pub(super) fn verify_associativity(pair: &GroupPair) -> AssociativityReport {
    let circles: Vec<Tagged> = pair
        .parent_table()
        .irreducibles()
        .iter()
        .map(|c| Tagged::Circle(c.function().clone()))
        .collect();
    let bullets: Vec<Tagged> = pair
        .sub_table()
        .irreducibles()
        .iter()
        .map(|c| Tagged::Bullet(c.function().clone()))
        .collect();

    let run = |law: AssocLaw, xs: &[Tagged], ys: &[Tagged], zs: &[Tagged]| -> LawResult {
        for (i, x) in xs.iter().enumerate() {
            for (j, y) in ys.iter().enumerate() {
                for (k, z) in zs.iter().enumerate() {
                    let left = convolve(pair, &convolve(pair, x, y), z);
                    let right = convolve(pair, x, &convolve(pair, y, z));
                    if !equal(pair, &left, &right) {
                        return LawResult {
                            law,
                            passed: false,
                            counterexample: Some((i, j, k)),
                            detail: Some(describe(&left, &right)),
                        };
                    }
                }
            }
        }
        LawResult { law, passed: true, counterexample: None, detail: None }
    };

    let laws = vec![
        run(AssocLaw::CircleCircleCircle, &circles, &circles, &circles),
        run(AssocLaw::BulletCircleCircle, &bullets, &circles, &circles),
        run(AssocLaw::BulletBulletCircle, &bullets, &bullets, &circles),
        run(AssocLaw::BulletBulletBullet, &bullets, &bullets, &bullets),
    ];
    AssociativityReport { laws }
}

fn describe(left: &Tagged, right: &Tagged) -> String {
    let render = |t: &Tagged| match t {
        Tagged::Circle(f) => format!(
            "circle[{}]",
            f.values().iter().map(|z| crate::chars::format_complex(*z)).collect::<Vec<_>>().join(", ")
        ),
        Tagged::Bullet(f) => format!(
            "bullet[{}]",
            f.values().iter().map(|z| crate::chars::format_complex(*z)).collect::<Vec<_>>().join(", ")
        ),
    };
    format!("{} != {}", render(left), render(right))
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::super::GroupPair;
    use super::AssocLaw;
    use crate::group::{build_group, GroupSpec};
    use crate::Tol;

    fn pair(spec: &str, gens: &[&str]) -> GroupPair {
        let g = Arc::new(build_group(&spec.parse::<GroupSpec>().unwrap()).unwrap());
        GroupPair::from_labels(g, gens, Tol::default()).unwrap()
    }

    #[test]
    fn admissible_pairs_pass_all_four_laws() {
        for (spec, gens) in [("Z4", vec!["2"]), ("S3", vec!["(12)"]), ("S4", vec!["(12)", "(123)"])] {
            let p = pair(spec, &gens);
            let report = p.verify_associativity();
            assert!(report.all_passed(), "{spec}: {}", report.summary());
        }
    }

    #[test]
    fn s3_over_z3_fails_exactly_the_triple_bullet_law() {
        let p = pair("S3", &["(123)"]);
        let report = p.verify_associativity();
        assert!(report.law(AssocLaw::CircleCircleCircle).passed);
        assert!(report.law(AssocLaw::BulletCircleCircle).passed);
        assert!(report.law(AssocLaw::BulletBulletCircle).passed);
        let failing = report.law(AssocLaw::BulletBulletBullet);
        assert!(!failing.passed);
        let (i, j, k) = failing.counterexample.unwrap();
        // Some nontrivial character must be involved.
        assert!(i > 0 || j > 0 || k > 0);
    }

    #[test]
    fn whole_group_pair_passes() {
        let g = Arc::new(build_group(&"S3".parse::<GroupSpec>().unwrap()).unwrap());
        let all: Vec<usize> = (0..g.order()).collect();
        let p = GroupPair::new(g, &all, Tol::default()).unwrap();
        assert!(p.verify_associativity().all_passed());
    }
}
