//! Permutations in one-line form, used to realize symmetric and alternating
//! groups and to parse cycle-notation element labels.

/// A permutation of `{0, .., n-1}` stored as its one-line image vector.
pub type Perm = Vec<usize>;

/// Function composition: `(compose(p, q))(x) = p(q(x))`.
pub fn compose(p: &[usize], q: &[usize]) -> Perm {
    q.iter().map(|&x| p[x]).collect()
}

pub fn invert(p: &[usize]) -> Perm {
    let mut out = vec![0; p.len()];
    for (i, &pi) in p.iter().enumerate() {
        out[pi] = i;
    }
    out
}

/// True when the permutation is even.
pub fn is_even(p: &[usize]) -> bool {
    let mut seen = vec![false; p.len()];
    let mut transpositions = 0;
    for start in 0..p.len() {
        if seen[start] {
            continue;
        }
        let mut len = 0;
        let mut x = start;
        while !seen[x] {
            seen[x] = true;
            x = p[x];
            len += 1;
        }
        transpositions += len - 1;
    }
    transpositions % 2 == 0
}

/// All permutations of `{0, .., n-1}` in lexicographic order of the one-line
/// form, so the identity comes first.
pub fn all_permutations(n: usize) -> Vec<Perm> {
    let mut cur: Perm = (0..n).collect();
    let mut out = vec![cur.clone()];
    while next_permutation(&mut cur) {
        out.push(cur.clone());
    }
    out
}

fn next_permutation(p: &mut [usize]) -> bool {
    if p.len() < 2 {
        return false;
    }
    let mut i = p.len() - 1;
    while i > 0 && p[i - 1] >= p[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = p.len() - 1;
    while p[j] <= p[i - 1] {
        j -= 1;
    }
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

/// Cycle notation with 1-based points, cycles sorted by least moved point.
/// The identity prints as `"e"`.
pub fn cycle_notation(p: &[usize]) -> String {
    let mut seen = vec![false; p.len()];
    let mut out = String::new();
    for start in 0..p.len() {
        if seen[start] || p[start] == start {
            seen[start] = true;
            continue;
        }
        out.push('(');
        let mut x = start;
        while !seen[x] {
            seen[x] = true;
            push_point(&mut out, x + 1, p.len());
            x = p[x];
        }
        out.push(')');
    }
    if out.is_empty() {
        out.push('e');
    }
    out
}

fn push_point(out: &mut String, point: usize, n: usize) {
    if n > 9 && out.ends_with(|c: char| c.is_ascii_digit()) {
        out.push(' ');
    }
    out.push_str(&point.to_string());
}

/// Parses cycle notation such as `"(12)(34)"` or `"e"` into a permutation on
/// `n` points. Points are 1-based; for `n > 9` separate them with spaces.
/// Non-disjoint cycles are applied right-to-left, matching composition.
pub fn parse_cycles(text: &str, n: usize) -> Result<Perm, String> {
    let s: String = text.chars().filter(|c| !c.is_whitespace() || n > 9).collect();
    let s = s.trim();
    if s.is_empty() || s == "e" || s == "()" || s == "id" {
        return Ok((0..n).collect());
    }
    let mut cycles: Vec<Vec<usize>> = Vec::new();
    let mut chars = s.chars().peekable();
    while let Some(c) = chars.next() {
        if c != '(' {
            return Err(format!("expected '(' in cycle notation, found {c:?}"));
        }
        let mut body = String::new();
        for c in chars.by_ref() {
            if c == ')' {
                break;
            }
            body.push(c);
        }
        let points: Vec<usize> = if n > 9 {
            body.split_whitespace()
                .map(|w| w.parse::<usize>().map_err(|e| e.to_string()))
                .collect::<Result<_, _>>()?
        } else {
            body.chars()
                .map(|c| c.to_digit(10).map(|d| d as usize).ok_or(format!("bad point {c:?}")))
                .collect::<Result<_, _>>()?
        };
        if points.iter().any(|&x| x == 0 || x > n) {
            return Err(format!("cycle point out of range 1..={n} in {text:?}"));
        }
        let mut sorted = points.clone();
        sorted.sort_unstable();
        sorted.dedup();
        if sorted.len() != points.len() {
            return Err(format!("repeated point inside a cycle in {text:?}"));
        }
        cycles.push(points.iter().map(|&x| x - 1).collect());
    }
    // Rightmost cycle acts first.
    let mut perm: Perm = (0..n).collect();
    for cycle in cycles.iter().rev() {
        let mut step: Perm = (0..n).collect();
        for w in 0..cycle.len() {
            step[cycle[w]] = cycle[(w + 1) % cycle.len()];
        }
        perm = compose(&step, &perm);
    }
    Ok(perm)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn composes_in_function_order() {
        // p = (12), q = (23); (p.q)(1) = p(1) = 2, (p.q)(2) = p(3) = 3,
        // (p.q)(3) = p(2) = 1, so the product is the cycle (123).
        let p = parse_cycles("(12)", 3).unwrap();
        let q = parse_cycles("(23)", 3).unwrap();
        let pq = compose(&p, &q);
        assert_eq!(cycle_notation(&pq), "(123)");
    }

    #[test]
    fn parses_and_prints_round_trip() {
        for text in ["e", "(12)", "(123)", "(12)(34)", "(1234)"] {
            let p = parse_cycles(text, 4).unwrap();
            assert_eq!(cycle_notation(&p), text);
        }
    }

    #[test]
    fn lexicographic_enumeration_starts_at_identity() {
        let perms = all_permutations(4);
        assert_eq!(perms.len(), 24);
        assert_eq!(perms[0], vec![0, 1, 2, 3]);
        assert!(perms.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn parity_counts_transpositions() {
        assert!(is_even(&parse_cycles("e", 4).unwrap()));
        assert!(!is_even(&parse_cycles("(12)", 4).unwrap()));
        assert!(is_even(&parse_cycles("(123)", 4).unwrap()));
        assert!(is_even(&parse_cycles("(12)(34)", 4).unwrap()));
    }
}
