//! Finite groups as explicit Cayley tables.
//!
//! Groups are immutable after construction: the table, inverses, and the
//! conjugacy-class partition are all computed and validated up front.
//! Classes follow a canonical order (identity class first, then by size and
//! least member) so that every downstream serialization is byte-stable.

pub mod perm;
pub mod spec;

use std::sync::Arc;

use thiserror::Error;

pub use spec::{build_group, GroupSpec};

/// Largest group order accepted by the constructors.
pub const MAX_ORDER: usize = 10_000;
/// Full associativity is verified on construction up to this order.
const ASSOC_CHECK_LIMIT: usize = 256;

#[derive(Debug, Error)]
pub enum GroupError {
    #[error("group order {0} exceeds the supported limit {MAX_ORDER}")]
    OrderLimit(usize),
    #[error("semidirect action is not by automorphisms: {0}")]
    InvalidAction(String),
    #[error("invalid Cayley table: {0}")]
    InvalidCayley(String),
    #[error("cannot parse group spec {0:?}: {1}")]
    ParseSpec(String, String),
    #[error("no element labelled {0:?}")]
    UnknownLabel(String),
    #[error("element {0} does not belong to the subgroup")]
    NotInSubgroup(usize),
}

/// A finite group given by its full multiplication table.
#[derive(Clone, Debug)]
pub struct FiniteGroup {
    name: String,
    order: usize,
    cayley: Vec<Vec<usize>>,
    identity: usize,
    inverse: Vec<usize>,
    labels: Vec<String>,
    classes: Vec<Vec<usize>>,
    class_of: Vec<usize>,
}

impl FiniteGroup {
    /// Builds and validates a group from a raw table. Checks the Latin-square
    /// property, a two-sided identity, inverses, and (for order up to 256)
    /// associativity over all triples.
    pub fn from_parts(
        name: impl Into<String>,
        cayley: Vec<Vec<usize>>,
        labels: Vec<String>,
    ) -> Result<Self, GroupError> {
        let order = cayley.len();
        if order == 0 {
            return Err(GroupError::InvalidCayley("empty table".into()));
        }
        if order > MAX_ORDER {
            return Err(GroupError::OrderLimit(order));
        }
        if labels.len() != order {
            return Err(GroupError::InvalidCayley(format!(
                "{} labels for {} elements",
                labels.len(),
                order
            )));
        }
        for (i, row) in cayley.iter().enumerate() {
            if row.len() != order {
                return Err(GroupError::InvalidCayley(format!("row {i} has length {}", row.len())));
            }
            if row.iter().any(|&x| x >= order) {
                return Err(GroupError::InvalidCayley(format!("row {i} mentions an element out of range")));
            }
        }
        // Latin square: every row and column is a permutation.
        for i in 0..order {
            let mut seen_row = vec![false; order];
            let mut seen_col = vec![false; order];
            for j in 0..order {
                if std::mem::replace(&mut seen_row[cayley[i][j]], true) {
                    return Err(GroupError::InvalidCayley(format!("row {i} repeats a value")));
                }
                if std::mem::replace(&mut seen_col[cayley[j][i]], true) {
                    return Err(GroupError::InvalidCayley(format!("column {i} repeats a value")));
                }
            }
        }
        let identity = (0..order)
            .find(|&e| (0..order).all(|x| cayley[e][x] == x && cayley[x][e] == x))
            .ok_or_else(|| GroupError::InvalidCayley("no two-sided identity".into()))?;
        let mut inverse = vec![usize::MAX; order];
        for x in 0..order {
            let inv = (0..order)
                .find(|&y| cayley[x][y] == identity && cayley[y][x] == identity)
                .ok_or_else(|| GroupError::InvalidCayley(format!("element {x} has no inverse")))?;
            inverse[x] = inv;
        }
        if order <= ASSOC_CHECK_LIMIT {
            for a in 0..order {
                for b in 0..order {
                    for c in 0..order {
                        if cayley[cayley[a][b]][c] != cayley[a][cayley[b][c]] {
                            return Err(GroupError::InvalidCayley(format!(
                                "associativity fails at ({a}, {b}, {c})"
                            )));
                        }
                    }
                }
            }
        }
        let (classes, class_of) = conjugacy_partition(&cayley, &inverse, identity);
        Ok(FiniteGroup {
            name: name.into(),
            order,
            cayley,
            identity,
            inverse,
            labels,
            classes,
            class_of,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.cayley[a][b]
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a]
    }

    /// `s * g * s^{-1}`.
    pub fn conjugate(&self, s: usize, g: usize) -> usize {
        self.mul(self.mul(s, g), self.inv(s))
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn element_by_label(&self, label: &str) -> Option<usize> {
        let wanted = label.trim();
        self.labels.iter().position(|l| l == wanted)
    }

    /// Conjugacy classes in canonical order: identity class first, then by
    /// (size, least member).
    pub fn classes(&self) -> &[Vec<usize>] {
        &self.classes
    }

    pub fn class_count(&self) -> usize {
        self.classes.len()
    }

    pub fn class_of(&self, g: usize) -> usize {
        self.class_of[g]
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|a| (0..self.order).all(|b| self.cayley[a][b] == self.cayley[b][a]))
    }

    pub fn centralizer(&self, g: usize) -> Vec<usize> {
        (0..self.order).filter(|&s| self.mul(s, g) == self.mul(g, s)).collect()
    }

    /// Structural equality of the multiplication tables (labels ignored).
    pub fn same_table(&self, other: &FiniteGroup) -> bool {
        self.order == other.order && self.cayley == other.cayley
    }

    /// Plain-text Cayley export: first line the order, then the table rows of
    /// zero-based indices.
    pub fn to_cayley_text(&self) -> String {
        let mut out = format!("{}\n", self.order);
        for row in &self.cayley {
            let words: Vec<String> = row.iter().map(|x| x.to_string()).collect();
            out.push_str(&words.join(" "));
            out.push('\n');
        }
        out
    }

    /// Parses the plain-text Cayley format accepted by [`to_cayley_text`].
    ///
    /// [`to_cayley_text`]: FiniteGroup::to_cayley_text
    pub fn from_cayley_text(text: &str) -> Result<Self, GroupError> {
        let mut lines = text.lines().filter(|l| !l.trim().is_empty());
        let order: usize = lines
            .next()
            .ok_or_else(|| GroupError::InvalidCayley("empty input".into()))?
            .trim()
            .parse()
            .map_err(|e| GroupError::InvalidCayley(format!("bad order line: {e}")))?;
        let mut cayley = Vec::with_capacity(order);
        for _ in 0..order {
            let line = lines
                .next()
                .ok_or_else(|| GroupError::InvalidCayley("missing table row".into()))?;
            let row: Vec<usize> = line
                .split_whitespace()
                .map(|w| w.parse().map_err(|e| GroupError::InvalidCayley(format!("bad entry: {e}"))))
                .collect::<Result<_, _>>()?;
            cayley.push(row);
        }
        let labels = (0..order).map(|i| format!("g{i}")).collect();
        FiniteGroup::from_parts("imported", cayley, labels)
    }
}

fn conjugacy_partition(
    cayley: &[Vec<usize>],
    inverse: &[usize],
    identity: usize,
) -> (Vec<Vec<usize>>, Vec<usize>) {
    let order = cayley.len();
    let mut assigned = vec![false; order];
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for g in 0..order {
        if assigned[g] {
            continue;
        }
        let mut class: Vec<usize> = (0..order)
            .map(|s| cayley[cayley[s][g]][inverse[s]])
            .collect();
        class.sort_unstable();
        class.dedup();
        for &x in &class {
            assigned[x] = true;
        }
        classes.push(class);
    }
    classes.sort_by_key(|c| (!c.contains(&identity), c.len(), c[0]));
    let mut class_of = vec![usize::MAX; order];
    for (ci, class) in classes.iter().enumerate() {
        for &x in class {
            class_of[x] = ci;
        }
    }
    (classes, class_of)
}

/// A subgroup embedded in its parent: the sorted member set, the re-indexed
/// group on those members, and both index translations.
#[derive(Clone, Debug)]
pub struct SubgroupEmbedding {
    parent: Arc<FiniteGroup>,
    members: Vec<usize>,
    as_group: Arc<FiniteGroup>,
    from_parent: Vec<Option<usize>>,
    index: usize,
}

impl SubgroupEmbedding {
    /// Closes the generator set under multiplication and wraps the result.
    /// The closure of a nonempty subset of a finite group under products is
    /// automatically closed under inverses.
    pub fn generate(parent: &Arc<FiniteGroup>, generators: &[usize]) -> Result<Self, GroupError> {
        for &g in generators {
            if g >= parent.order() {
                return Err(GroupError::UnknownLabel(format!("element index {g}")));
            }
        }
        let mut in_set = vec![false; parent.order()];
        in_set[parent.identity()] = true;
        let mut frontier: Vec<usize> = vec![parent.identity()];
        for &g in generators {
            if !in_set[g] {
                in_set[g] = true;
                frontier.push(g);
            }
        }
        let mut members: Vec<usize> = frontier.clone();
        while let Some(x) = frontier.pop() {
            for &y in members.clone().iter() {
                for z in [parent.mul(x, y), parent.mul(y, x)] {
                    if !in_set[z] {
                        in_set[z] = true;
                        frontier.push(z);
                        members.push(z);
                    }
                }
            }
        }
        members.sort_unstable();
        Self::from_members(parent, members)
    }

    pub fn from_label_generators(
        parent: &Arc<FiniteGroup>,
        labels: &[&str],
    ) -> Result<Self, GroupError> {
        let gens: Vec<usize> = labels
            .iter()
            .map(|l| parent.element_by_label(l).ok_or_else(|| GroupError::UnknownLabel(l.to_string())))
            .collect::<Result<_, _>>()?;
        Self::generate(parent, &gens)
    }

    /// The whole group as a subgroup of itself.
    pub fn whole(parent: &Arc<FiniteGroup>) -> Self {
        let members: Vec<usize> = (0..parent.order()).collect();
        Self::from_members(parent, members).expect("whole group is a subgroup")
    }

    /// The trivial subgroup.
    pub fn trivial(parent: &Arc<FiniteGroup>) -> Self {
        Self::from_members(parent, vec![parent.identity()]).expect("identity is a subgroup")
    }

    fn from_members(parent: &Arc<FiniteGroup>, members: Vec<usize>) -> Result<Self, GroupError> {
        let mut from_parent = vec![None; parent.order()];
        for (i, &m) in members.iter().enumerate() {
            from_parent[m] = Some(i);
        }
        let n = members.len();
        let mut cayley = vec![vec![0usize; n]; n];
        for a in 0..n {
            for b in 0..n {
                let p = parent.mul(members[a], members[b]);
                cayley[a][b] = from_parent[p]
                    .ok_or_else(|| GroupError::InvalidCayley("member set not closed".into()))?;
            }
        }
        let labels = members.iter().map(|&m| parent.label(m).to_string()).collect();
        let name = format!("{}-subgroup-of-order-{}", parent.name(), n);
        let as_group = Arc::new(FiniteGroup::from_parts(name, cayley, labels)?);
        debug_assert_eq!(parent.order() % n, 0);
        Ok(SubgroupEmbedding {
            parent: Arc::clone(parent),
            members,
            as_group,
            from_parent,
            index: parent.order() / n,
        })
    }

    pub fn parent(&self) -> &Arc<FiniteGroup> {
        &self.parent
    }

    pub fn as_group(&self) -> &Arc<FiniteGroup> {
        &self.as_group
    }

    /// Sorted parent indices of the members.
    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn order(&self) -> usize {
        self.members.len()
    }

    /// The index `[G : G0]`.
    pub fn index(&self) -> usize {
        self.index
    }

    pub fn to_parent(&self, i: usize) -> usize {
        self.members[i]
    }

    pub fn from_parent(&self, p: usize) -> Option<usize> {
        self.from_parent[p]
    }

    pub fn contains(&self, p: usize) -> bool {
        self.from_parent[p].is_some()
    }
}

/// All `s` in the parent group with `s g s^{-1}` inside the subgroup. The
/// result always contains every subgroup member.
pub fn conjugator_set(emb: &SubgroupEmbedding, g: usize) -> Result<Vec<usize>, GroupError> {
    if !emb.contains(g) {
        return Err(GroupError::NotInSubgroup(g));
    }
    let parent = emb.parent();
    Ok((0..parent.order())
        .filter(|&s| emb.contains(parent.conjugate(s, g)))
        .collect())
}

/// True when the subgroup is stable under conjugation by the whole parent.
pub fn is_normal(emb: &SubgroupEmbedding) -> bool {
    let parent = emb.parent();
    emb.members()
        .iter()
        .all(|&g| (0..parent.order()).all(|s| emb.contains(parent.conjugate(s, g))))
}

/// True when every parent element commutes with every subgroup member, i.e.
/// the subgroup is central.
pub fn centralizes(emb: &SubgroupEmbedding) -> bool {
    let parent = emb.parent();
    emb.members()
        .iter()
        .all(|&g| (0..parent.order()).all(|s| parent.mul(s, g) == parent.mul(g, s)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn arc(spec: &str) -> Arc<FiniteGroup> {
        Arc::new(build_group(&spec.parse().unwrap()).unwrap())
    }

    #[test]
    fn z2_has_one_self_inverse_nontrivial_element() {
        let g = arc("Z2");
        assert_eq!(g.order(), 2);
        let x = 1 - g.identity();
        assert_eq!(g.inv(x), x);
        assert_eq!(g.mul(x, x), g.identity());
    }

    #[test]
    fn s4_has_five_classes_with_cycle_type_sizes() {
        let g = arc("S4");
        assert_eq!(g.order(), 24);
        let mut sizes: Vec<usize> = g.classes().iter().map(|c| c.len()).collect();
        assert_eq!(sizes.remove(0), 1);
        sizes.sort_unstable();
        assert_eq!(sizes, vec![3, 6, 6, 8]);
    }

    #[test]
    fn abelian_groups_split_into_singleton_classes() {
        let g = arc("Z4");
        assert_eq!(g.class_count(), 4);
        assert!(g.classes().iter().all(|c| c.len() == 1));
    }

    #[test]
    fn s3_classes_are_sized_one_two_three_in_canonical_order() {
        let g = arc("S3");
        let sizes: Vec<usize> = g.classes().iter().map(|c| c.len()).collect();
        assert_eq!(sizes, vec![1, 2, 3]);
        assert!(g.classes()[0].contains(&g.identity()));
    }

    #[test]
    fn a4_classes_have_sizes_one_three_four_four() {
        let g = arc("A4");
        let sizes: Vec<usize> = g.classes().iter().map(|c| c.len()).collect();
        assert_eq!(sizes, vec![1, 3, 4, 4]);
    }

    #[test]
    fn class_sizes_divide_group_order_and_partition() {
        for spec in ["Z6", "S3", "D4", "A4", "S4"] {
            let g = arc(spec);
            let total: usize = g.classes().iter().map(|c| c.len()).sum();
            assert_eq!(total, g.order());
            for c in g.classes() {
                assert_eq!(g.order() % c.len(), 0, "class size must divide order in {spec}");
            }
        }
    }

    #[test]
    fn transposition_generates_index_three_subgroup_of_s3() {
        let g = arc("S3");
        let h = SubgroupEmbedding::from_label_generators(&g, &["(12)"]).unwrap();
        assert_eq!(h.order(), 2);
        assert_eq!(h.index(), 3);
    }

    #[test]
    fn identity_generates_trivial_subgroup() {
        let g = arc("D4");
        let h = SubgroupEmbedding::generate(&g, &[g.identity()]).unwrap();
        assert_eq!(h.order(), 1);
        assert_eq!(h.index(), g.order());
    }

    #[test]
    fn point_stabilizer_of_s4_has_order_six() {
        let g = arc("S4");
        let h = SubgroupEmbedding::from_label_generators(&g, &["(12)", "(123)"]).unwrap();
        assert_eq!(h.order(), 6);
        assert_eq!(h.index(), 4);
    }

    #[test]
    fn conjugator_set_of_identity_is_everything() {
        let g = arc("S3");
        let h = SubgroupEmbedding::from_label_generators(&g, &["(12)"]).unwrap();
        let x = conjugator_set(&h, g.identity()).unwrap();
        assert_eq!(x.len(), g.order());
    }

    #[test]
    fn conjugator_set_is_everything_for_normal_subgroups() {
        let g = arc("S3");
        let h = SubgroupEmbedding::from_label_generators(&g, &["(123)"]).unwrap();
        assert!(is_normal(&h));
        for &m in h.members() {
            assert_eq!(conjugator_set(&h, m).unwrap().len(), g.order());
        }
    }

    #[test]
    fn conjugator_set_of_a_transposition_is_its_centralizer() {
        let g = arc("S3");
        let h = SubgroupEmbedding::from_label_generators(&g, &["(12)"]).unwrap();
        let t = g.element_by_label("(12)").unwrap();
        let x = conjugator_set(&h, t).unwrap();
        assert_eq!(x.len(), 2);
        assert!(x.contains(&g.identity()) && x.contains(&t));
        // Contains the subgroup, and is stable under right products with the
        // centralizer of g.
        for &m in h.members() {
            assert!(x.contains(&m));
        }
        for &s in &x {
            for &c in &g.centralizer(t) {
                assert!(x.contains(&g.mul(s, c)));
            }
        }
    }

    #[test]
    fn conjugator_set_errors_outside_the_subgroup() {
        let g = arc("S3");
        let h = SubgroupEmbedding::from_label_generators(&g, &["(12)"]).unwrap();
        let c3 = g.element_by_label("(123)").unwrap();
        assert!(matches!(conjugator_set(&h, c3), Err(GroupError::NotInSubgroup(_))));
    }

    #[test]
    fn normality_and_centrality_predicates() {
        let s3 = arc("S3");
        let z3 = SubgroupEmbedding::from_label_generators(&s3, &["(123)"]).unwrap();
        assert!(is_normal(&z3));
        assert!(!centralizes(&z3));

        let v4 = arc("Z2xZ2");
        let factor = SubgroupEmbedding::from_label_generators(&v4, &["(1,0)"]).unwrap();
        assert!(is_normal(&factor));
        assert!(centralizes(&factor));

        let s4 = arc("S4");
        let s3_in_s4 = SubgroupEmbedding::from_label_generators(&s4, &["(12)", "(123)"]).unwrap();
        assert!(!is_normal(&s3_in_s4));
    }

    #[test]
    fn cayley_text_round_trips() {
        let g = arc("S3");
        let text = g.to_cayley_text();
        let back = FiniteGroup::from_cayley_text(&text).unwrap();
        assert!(g.same_table(&back));
    }

    #[test]
    fn rejects_non_associative_table() {
        // A quasigroup (Latin square) that is not a group.
        let cayley = vec![
            vec![0, 1, 2, 3, 4],
            vec![1, 0, 3, 4, 2],
            vec![2, 4, 0, 1, 3],
            vec![3, 2, 4, 0, 1],
            vec![4, 3, 1, 2, 0],
        ];
        let labels = (0..5).map(|i| format!("g{i}")).collect();
        assert!(FiniteGroup::from_parts("bad", cayley, labels).is_err());
    }
}
