//! Bipartite Frobenius diagrams: one node per irreducible character of the
//! group (circle) and of the subgroup (bullet), with edges weighted by the
//! induction/restriction multiplicity. DOT output is deterministic and
//! byte-stable across runs.

use crate::chars::frobenius_multiplicity;
use crate::pair::{GroupPair, PairError};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiagramNode {
    pub label: String,
    pub degree: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FrobeniusDiagram {
    pub circles: Vec<DiagramNode>,
    pub bullets: Vec<DiagramNode>,
    /// `(circle index, bullet index, multiplicity)`, multiplicity >= 1.
    pub edges: Vec<(usize, usize, u64)>,
}

impl FrobeniusDiagram {
    pub fn multiplicity(&self, circle: usize, bullet: usize) -> u64 {
        self.edges
            .iter()
            .find(|&&(c, b, _)| c == circle && b == bullet)
            .map(|&(_, _, m)| m)
            .unwrap_or(0)
    }

    /// For every bullet node, the edge-weighted circle degrees must add up
    /// to the subgroup index times the bullet degree (the degree of the
    /// induced representation).
    pub fn degree_identity_holds(&self, index: usize) -> bool {
        (0..self.bullets.len()).all(|b| {
            let total: u64 = self
                .edges
                .iter()
                .filter(|&&(_, eb, _)| eb == b)
                .map(|&(c, _, m)| m * self.circles[c].degree as u64)
                .sum();
            total == (index * self.bullets[b].degree) as u64
        })
    }

    fn simple_adjacency(&self) -> Option<Vec<Vec<usize>>> {
        // Shape predicates only apply to multiplicity-free diagrams.
        if self.edges.iter().any(|&(_, _, m)| m != 1) {
            return None;
        }
        let n = self.circles.len() + self.bullets.len();
        let mut adj = vec![Vec::new(); n];
        for &(c, b, _) in &self.edges {
            adj[c].push(self.circles.len() + b);
            adj[self.circles.len() + b].push(c);
        }
        Some(adj)
    }

    fn is_connected(adj: &[Vec<usize>]) -> bool {
        let n = adj.len();
        let mut seen = vec![false; n];
        let mut stack = vec![0usize];
        seen[0] = true;
        while let Some(x) = stack.pop() {
            for &y in &adj[x] {
                if !seen[y] {
                    seen[y] = true;
                    stack.push(y);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    /// A simple path on all nodes: connected, n-1 edges, two endpoints.
    pub fn is_path(&self) -> bool {
        let Some(adj) = self.simple_adjacency() else { return false };
        let n = adj.len();
        if self.edges.len() != n - 1 || !Self::is_connected(&adj) {
            return false;
        }
        let mut degrees: Vec<usize> = adj.iter().map(|a| a.len()).collect();
        degrees.sort_unstable();
        n == 1 || (degrees[0] == 1 && degrees[1] == 1 && degrees[2..].iter().all(|&d| d == 2))
    }

    /// A star: one hub adjacent to every other node, no other edges.
    pub fn is_star(&self) -> bool {
        let Some(adj) = self.simple_adjacency() else { return false };
        let n = adj.len();
        if n < 2 || self.edges.len() != n - 1 || !Self::is_connected(&adj) {
            return false;
        }
        let mut degrees: Vec<usize> = adj.iter().map(|a| a.len()).collect();
        degrees.sort_unstable();
        degrees[n - 1] == n - 1 && degrees[..n - 1].iter().all(|&d| d == 1)
    }

    /// Unlabeled graph isomorphism for the underlying multigraphs: a degree
    /// pruned backtracking search over node bijections that must also match
    /// edge multiplicities. Sufficient at this scale.
    pub fn same_shape(&self, other: &FrobeniusDiagram) -> bool {
        let a = self.weighted_adjacency();
        let b = other.weighted_adjacency();
        if a.len() != b.len() {
            return false;
        }
        let n = a.len();
        let mut mapping = vec![usize::MAX; n];
        let mut used = vec![false; n];
        fn weight_multiset(row: &[u64]) -> Vec<u64> {
            let mut w: Vec<u64> = row.iter().copied().filter(|&m| m > 0).collect();
            w.sort_unstable();
            w
        }
        fn extend(
            a: &[Vec<u64>],
            b: &[Vec<u64>],
            mapping: &mut Vec<usize>,
            used: &mut Vec<bool>,
        ) -> bool {
            let n = a.len();
            let Some(next) = (0..n).find(|&i| mapping[i] == usize::MAX) else {
                return true;
            };
            for cand in 0..n {
                if used[cand] || weight_multiset(&a[next]) != weight_multiset(&b[cand]) {
                    continue;
                }
                let ok = (0..n).all(|x| mapping[x] == usize::MAX || a[next][x] == b[cand][mapping[x]]);
                if !ok {
                    continue;
                }
                mapping[next] = cand;
                used[cand] = true;
                if extend(a, b, mapping, used) {
                    return true;
                }
                mapping[next] = usize::MAX;
                used[cand] = false;
            }
            false
        }
        extend(&a, &b, &mut mapping, &mut used)
    }

    fn weighted_adjacency(&self) -> Vec<Vec<u64>> {
        let n = self.circles.len() + self.bullets.len();
        let mut adj = vec![vec![0u64; n]; n];
        for &(c, b, m) in &self.edges {
            adj[c][self.circles.len() + b] = m;
            adj[self.circles.len() + b][c] = m;
        }
        adj
    }
}

/// Builds the diagram for a pair: nodes in character-table order, one edge
/// per nonzero multiplicity.
pub fn frobenius_diagram(pair: &GroupPair) -> Result<FrobeniusDiagram, PairError> {
    let circles: Vec<DiagramNode> = pair
        .parent_table()
        .irreducibles()
        .iter()
        .enumerate()
        .map(|(i, c)| DiagramNode { label: format!("pi{i}"), degree: c.degree() })
        .collect();
    let bullets: Vec<DiagramNode> = pair
        .sub_table()
        .irreducibles()
        .iter()
        .enumerate()
        .map(|(j, c)| DiagramNode { label: format!("tau{j}"), degree: c.degree() })
        .collect();
    let mut edges = Vec::new();
    for (i, pi) in pair.parent_table().irreducibles().iter().enumerate() {
        for (j, tau) in pair.sub_table().irreducibles().iter().enumerate() {
            let m = frobenius_multiplicity(tau, pi, pair.embedding(), pair.tol())?;
            if m != 0 {
                edges.push((i, j, m));
            }
        }
    }
    Ok(FrobeniusDiagram { circles, bullets, edges })
}

/// Deterministic DOT text: circle nodes unfilled, bullet nodes filled,
/// multiplicities above one printed as edge labels.
pub fn emit_dot(diagram: &FrobeniusDiagram) -> String {
    let mut out = String::from("graph frobenius {\n");
    out.push_str("  node [shape=circle, fontsize=11];\n");
    for (i, node) in diagram.circles.iter().enumerate() {
        out.push_str(&format!(
            "  c{i} [label=\"{} ({})\"];\n",
            node.label, node.degree
        ));
    }
    for (j, node) in diagram.bullets.iter().enumerate() {
        out.push_str(&format!(
            "  b{j} [label=\"{} ({})\", style=filled, fillcolor=black, fontcolor=white];\n",
            node.label, node.degree
        ));
    }
    for &(c, b, m) in &diagram.edges {
        if m == 1 {
            out.push_str(&format!("  c{c} -- b{b};\n"));
        } else {
            out.push_str(&format!("  c{c} -- b{b} [label=\"{m}\"];\n"));
        }
    }
    out.push_str("}\n");
    out
}
