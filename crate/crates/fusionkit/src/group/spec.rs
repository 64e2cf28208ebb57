//! A small construction language for the group catalog: cyclic groups,
//! direct products, symmetric/alternating/dihedral groups, and semidirect
//! products with an explicit automorphism action.

use std::str::FromStr;

use super::perm::{all_permutations, compose, cycle_notation, is_even};
use super::{FiniteGroup, GroupError, MAX_ORDER};

/// Term of the construction language.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GroupSpec {
    /// `Zn`: integers mod `n` under addition.
    Cyclic(usize),
    /// Direct product, elements flattened row-major.
    Product(Box<GroupSpec>, Box<GroupSpec>),
    /// `Sn`: all permutations of `n` points.
    Symmetric(usize),
    /// `An`: even permutations of `n` points.
    Alternating(usize),
    /// `Dn`: symmetries of the regular `n`-gon, order `2n`, realized as the
    /// semidirect product of the rotations by a reflection.
    Dihedral(usize),
    /// Semidirect product `normal ⋊ acting`. `action[k]` is the permutation of
    /// the normal group's elements applied by the `k`-th acting element; it
    /// must be an automorphism, and `k -> action[k]` a homomorphism.
    Semidirect {
        normal: Box<GroupSpec>,
        acting: Box<GroupSpec>,
        action: Vec<Vec<usize>>,
    },
}

impl GroupSpec {
    fn display_name(&self) -> String {
        match self {
            GroupSpec::Cyclic(n) => format!("Z{n}"),
            GroupSpec::Product(a, b) => format!("{}x{}", a.display_name(), b.display_name()),
            GroupSpec::Symmetric(n) => format!("S{n}"),
            GroupSpec::Alternating(n) => format!("A{n}"),
            GroupSpec::Dihedral(n) => format!("D{n}"),
            GroupSpec::Semidirect { normal, acting, .. } => {
                format!("{}:{}", normal.display_name(), acting.display_name())
            }
        }
    }

    fn order(&self) -> usize {
        match self {
            GroupSpec::Cyclic(n) => *n,
            GroupSpec::Product(a, b) => a.order().saturating_mul(b.order()),
            GroupSpec::Symmetric(n) => (1..=*n).product(),
            GroupSpec::Alternating(n) => {
                let f: usize = (1..=*n).product();
                if *n < 2 { f } else { f / 2 }
            }
            GroupSpec::Dihedral(n) => 2 * n,
            GroupSpec::Semidirect { normal, acting, .. } => {
                normal.order().saturating_mul(acting.order())
            }
        }
    }
}

impl FromStr for GroupSpec {
    type Err = GroupError;

    /// Accepts `Z<n>`, `S<n>`, `A<n>`, `D<n>`, products joined with `x`
    /// (left-associated), and `semidirect(<normal>,<acting>,inv|triv)`.
    fn from_str(s: &str) -> Result<Self, GroupError> {
        parse_spec(s.trim())
    }
}

fn parse_spec(s: &str) -> Result<GroupSpec, GroupError> {
    let err = |m: &str| GroupError::ParseSpec(s.to_string(), m.to_string());
    if s.is_empty() {
        return Err(err("empty spec"));
    }
    // Split on top-level 'x' (product), respecting parentheses.
    let mut depth = 0usize;
    let mut parts: Vec<&str> = Vec::new();
    let mut start = 0usize;
    for (i, c) in s.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth = depth.saturating_sub(1),
            'x' if depth == 0 => {
                parts.push(&s[start..i]);
                start = i + 1;
            }
            _ => {}
        }
    }
    parts.push(&s[start..]);
    if parts.len() > 1 {
        let mut iter = parts.into_iter();
        let mut acc = parse_spec(iter.next().unwrap())?;
        for p in iter {
            acc = GroupSpec::Product(Box::new(acc), Box::new(parse_spec(p)?));
        }
        return Ok(acc);
    }

    if let Some(rest) = s.strip_prefix("semidirect(").and_then(|r| r.strip_suffix(')')) {
        let args = split_top_level(rest, ',');
        if args.len() != 3 {
            return Err(err("semidirect takes (normal, acting, action)"));
        }
        let normal = parse_spec(args[0].trim())?;
        let acting = parse_spec(args[1].trim())?;
        let action = match args[2].trim() {
            "inv" => inversion_action(&normal, &acting)?,
            "triv" => trivial_action(&normal, &acting),
            other => return Err(GroupError::ParseSpec(s.to_string(), format!("unknown action {other:?}"))),
        };
        return Ok(GroupSpec::Semidirect {
            normal: Box::new(normal),
            acting: Box::new(acting),
            action,
        });
    }

    let (head, num) = s.split_at(1);
    let n: usize = num
        .parse()
        .map_err(|_| GroupError::ParseSpec(s.to_string(), "expected a number".into()))?;
    match head {
        "Z" if n >= 1 => Ok(GroupSpec::Cyclic(n)),
        "S" if n >= 1 => Ok(GroupSpec::Symmetric(n)),
        "A" if n >= 1 => Ok(GroupSpec::Alternating(n)),
        "D" if n >= 1 => Ok(GroupSpec::Dihedral(n)),
        _ => Err(err("unknown family (expected Z/S/A/D/semidirect)")),
    }
}

/// Splits on `sep` at parenthesis depth zero.
pub fn split_top_level(s: &str, sep: char) -> Vec<&str> {
    let mut depth = 0usize;
    let mut parts = Vec::new();
    let mut start = 0usize;
    for (i, c) in s.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth = depth.saturating_sub(1),
            c if c == sep && depth == 0 => {
                parts.push(&s[start..i]);
                start = i + 1;
            }
            _ => {}
        }
    }
    parts.push(&s[start..]);
    parts
}

/// The acting group's generator-independent "invert everything" action: each
/// acting element of odd order in its image inverts the normal group. Only a
/// homomorphism when the normal group is abelian and the acting group maps
/// onto `{id, inv}` consistently; validation happens in `build_group`.
fn inversion_action(normal: &GroupSpec, acting: &GroupSpec) -> Result<Vec<Vec<usize>>, GroupError> {
    let n_group = build_group(normal)?;
    let a_group = build_group(acting)?;
    let inv_perm: Vec<usize> = (0..n_group.order()).map(|x| n_group.inv(x)).collect();
    let id_perm: Vec<usize> = (0..n_group.order()).collect();
    // Map acting element k to inversion^{sign(k)} where sign alternates along
    // a Z2 quotient: works for Z2 acting; for others require order-2 images.
    let mut action = Vec::with_capacity(a_group.order());
    for k in 0..a_group.order() {
        // Elements equal to a square act trivially; the rest invert. For Z2
        // this is exactly {id on 0, inv on 1}.
        let is_square = (0..a_group.order()).any(|y| a_group.mul(y, y) == k);
        action.push(if is_square { id_perm.clone() } else { inv_perm.clone() });
    }
    Ok(action)
}

fn trivial_action(normal: &GroupSpec, acting: &GroupSpec) -> Vec<Vec<usize>> {
    let n = normal.order();
    let m = acting.order();
    vec![(0..n).collect(); m]
}

/// Builds a validated group from a spec term.
pub fn build_group(spec: &GroupSpec) -> Result<FiniteGroup, GroupError> {
    if spec.order() > MAX_ORDER {
        return Err(GroupError::OrderLimit(spec.order()));
    }
    match spec {
        GroupSpec::Cyclic(n) => cyclic(*n),
        GroupSpec::Product(a, b) => {
            let ga = build_group(a)?;
            let gb = build_group(b)?;
            direct_product(spec.display_name(), &ga, &gb)
        }
        GroupSpec::Symmetric(n) => permutation_group(format!("S{n}"), *n, false),
        GroupSpec::Alternating(n) => permutation_group(format!("A{n}"), *n, true),
        GroupSpec::Dihedral(n) => dihedral(*n),
        GroupSpec::Semidirect { normal, acting, action } => {
            let h = build_group(normal)?;
            let k = build_group(acting)?;
            semidirect(spec.display_name(), &h, &k, action, None)
        }
    }
}

fn cyclic(n: usize) -> Result<FiniteGroup, GroupError> {
    let cayley = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
    let labels = (0..n).map(|i| i.to_string()).collect();
    FiniteGroup::from_parts(format!("Z{n}"), cayley, labels)
}

fn direct_product(
    name: String,
    a: &FiniteGroup,
    b: &FiniteGroup,
) -> Result<FiniteGroup, GroupError> {
    let (na, nb) = (a.order(), b.order());
    let n = na * nb;
    let mut cayley = vec![vec![0usize; n]; n];
    for xa in 0..na {
        for xb in 0..nb {
            for ya in 0..na {
                for yb in 0..nb {
                    cayley[xa * nb + xb][ya * nb + yb] = a.mul(xa, ya) * nb + b.mul(xb, yb);
                }
            }
        }
    }
    let labels = (0..n)
        .map(|i| format!("({},{})", a.label(i / nb), b.label(i % nb)))
        .collect();
    FiniteGroup::from_parts(name, cayley, labels)
}

fn permutation_group(name: String, n: usize, even_only: bool) -> Result<FiniteGroup, GroupError> {
    let perms: Vec<Vec<usize>> = all_permutations(n)
        .into_iter()
        .filter(|p| !even_only || is_even(p))
        .collect();
    let m = perms.len();
    if m > MAX_ORDER {
        return Err(GroupError::OrderLimit(m));
    }
    let index_of = |p: &[usize]| perms.binary_search_by(|q| q.as_slice().cmp(p)).expect("closed");
    let mut cayley = vec![vec![0usize; m]; m];
    for (i, p) in perms.iter().enumerate() {
        for (j, q) in perms.iter().enumerate() {
            cayley[i][j] = index_of(&compose(p, q));
        }
    }
    let labels = perms.iter().map(|p| cycle_notation(p)).collect();
    FiniteGroup::from_parts(name, cayley, labels)
}

fn dihedral(n: usize) -> Result<FiniteGroup, GroupError> {
    let rotations = cyclic(n)?;
    let reflections = cyclic(2)?;
    let inv_perm: Vec<usize> = (0..n).map(|x| rotations.inv(x)).collect();
    let id_perm: Vec<usize> = (0..n).collect();
    let action = vec![id_perm, inv_perm];
    let labels = (0..2 * n)
        .map(|i| if i % 2 == 0 { format!("r{}", i / 2) } else { format!("s{}", i / 2) })
        .collect();
    semidirect(format!("D{n}"), &rotations, &reflections, &action, Some(labels))
}

/// Semidirect product with elements `(h, k)` flattened row-major as
/// `h * |K| + k`, so the acting-group section occupies the lowest indices.
fn semidirect(
    name: String,
    normal: &FiniteGroup,
    acting: &FiniteGroup,
    action: &[Vec<usize>],
    labels: Option<Vec<String>>,
) -> Result<FiniteGroup, GroupError> {
    let (nh, nk) = (normal.order(), acting.order());
    if action.len() != nk {
        return Err(GroupError::InvalidAction(format!(
            "need {nk} action entries, got {}",
            action.len()
        )));
    }
    // Each action entry must be an automorphism of the normal group.
    for (k, alpha) in action.iter().enumerate() {
        if alpha.len() != nh {
            return Err(GroupError::InvalidAction(format!("entry {k} has wrong length")));
        }
        let mut seen = vec![false; nh];
        for &img in alpha {
            if img >= nh || std::mem::replace(&mut seen[img], true) {
                return Err(GroupError::InvalidAction(format!("entry {k} is not a bijection")));
            }
        }
        for a in 0..nh {
            for b in 0..nh {
                if alpha[normal.mul(a, b)] != normal.mul(alpha[a], alpha[b]) {
                    return Err(GroupError::InvalidAction(format!(
                        "entry {k} is not multiplicative at ({a}, {b})"
                    )));
                }
            }
        }
    }
    // k -> action[k] must be a homomorphism and the identity must act trivially.
    let e = acting.identity();
    if action[e].iter().enumerate().any(|(i, &img)| img != i) {
        return Err(GroupError::InvalidAction("identity must act trivially".into()));
    }
    for k1 in 0..nk {
        for k2 in 0..nk {
            let composed: Vec<usize> = (0..nh).map(|h| action[k1][action[k2][h]]).collect();
            if composed != action[acting.mul(k1, k2)] {
                return Err(GroupError::InvalidAction(format!(
                    "action is not a homomorphism at ({k1}, {k2})"
                )));
            }
        }
    }
    let n = nh * nk;
    let mut cayley = vec![vec![0usize; n]; n];
    for h1 in 0..nh {
        for k1 in 0..nk {
            for h2 in 0..nh {
                for k2 in 0..nk {
                    let h = normal.mul(h1, action[k1][h2]);
                    let k = acting.mul(k1, k2);
                    cayley[h1 * nk + k1][h2 * nk + k2] = h * nk + k;
                }
            }
        }
    }
    let labels = labels.unwrap_or_else(|| {
        (0..n)
            .map(|i| format!("({},{})", normal.label(i / nk), acting.label(i % nk)))
            .collect()
    });
    FiniteGroup::from_parts(name, cayley, labels)
}
