//! Small-degree permutation helpers for the enumeration oracles.
//!
//! Permutations on `{0, .., d-1}` are plain `Vec<u8>` in one-line notation:
//! `p[i]` is the image of `i`.

/// Identity permutation.
pub fn identity(d: usize) -> Vec<u8> {
    (0..d as u8).collect()
}

/// `(p . q)(i) = p(q(i))`: apply `q` first.
pub fn compose(p: &[u8], q: &[u8]) -> Vec<u8> {
    q.iter().map(|&i| p[i as usize]).collect()
}

pub fn inverse(p: &[u8]) -> Vec<u8> {
    let mut inv = vec![0u8; p.len()];
    for (i, &pi) in p.iter().enumerate() {
        inv[pi as usize] = i as u8;
    }
    inv
}

/// Cycle lengths in non-increasing order.
pub fn cycle_type(p: &[u8]) -> Vec<u64> {
    let mut seen = vec![false; p.len()];
    let mut lengths = Vec::new();
    for start in 0..p.len() {
        if seen[start] {
            continue;
        }
        let mut len = 0u64;
        let mut i = start;
        while !seen[i] {
            seen[i] = true;
            i = p[i] as usize;
            len += 1;
        }
        lengths.push(len);
    }
    lengths.sort_unstable_by(|a, b| b.cmp(a));
    lengths
}

/// The cycles of `p` as vertex lists, each starting at its smallest element,
/// ordered by that smallest element.
pub fn cycles(p: &[u8]) -> Vec<Vec<u8>> {
    let mut seen = vec![false; p.len()];
    let mut out = Vec::new();
    for start in 0..p.len() {
        if seen[start] {
            continue;
        }
        let mut cycle = Vec::new();
        let mut i = start;
        while !seen[i] {
            seen[i] = true;
            cycle.push(i as u8);
            i = p[i] as usize;
        }
        out.push(cycle);
    }
    out
}

/// Whether the group generated by `gens` acts transitively on `{0..d-1}`.
pub fn is_transitive(gens: &[&[u8]], d: usize) -> bool {
    if d == 0 {
        return true;
    }
    let mut parent: Vec<usize> = (0..d).collect();
    fn find(parent: &mut [usize], mut i: usize) -> usize {
        while parent[i] != i {
            parent[i] = parent[parent[i]];
            i = parent[i];
        }
        i
    }
    for g in gens {
        for (i, &gi) in g.iter().enumerate() {
            let a = find(&mut parent, i);
            let b = find(&mut parent, gi as usize);
            if a != b {
                parent[a] = b;
            }
        }
    }
    let root = find(&mut parent, 0);
    (0..d).all(|i| find(&mut parent, i) == root)
}

/// All permutations of `S_d` with the given cycle type (a partition of `d`
/// in any order).
pub fn with_cycle_type(d: usize, wanted: &[u64]) -> Vec<Vec<u8>> {
    let mut sorted = wanted.to_vec();
    sorted.sort_unstable_by(|a, b| b.cmp(a));
    let mut out = Vec::new();
    let mut current = identity(d);
    permute_collect(&mut current, 0, &mut |p| {
        if cycle_type(p) == sorted {
            out.push(p.to_vec());
        }
    });
    out
}

fn permute_collect(arr: &mut [u8], k: usize, f: &mut impl FnMut(&[u8])) {
    if k == arr.len() {
        f(arr);
        return;
    }
    for i in k..arr.len() {
        arr.swap(k, i);
        permute_collect(arr, k + 1, f);
        arr.swap(k, i);
    }
}

/// All transpositions of `S_d` in lexicographic order.
pub fn transpositions(d: usize) -> Vec<Vec<u8>> {
    let mut out = Vec::new();
    for i in 0..d {
        for j in (i + 1)..d {
            let mut t = identity(d);
            t.swap(i, j);
            out.push(t);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn compose_applies_right_first() {
        // p = (0 1), q = (1 2) on 3 points: p(q(1)) = p(2) = 2
        let p = vec![1, 0, 2];
        let q = vec![0, 2, 1];
        assert_eq!(compose(&p, &q), vec![1, 2, 0]);
    }

    #[test]
    fn inverse_round_trip() {
        let p = vec![2, 0, 3, 1];
        assert_eq!(compose(&p, &inverse(&p)), identity(4));
    }

    #[test]
    fn cycle_types() {
        assert_eq!(cycle_type(&[1, 0, 2]), vec![2, 1]);
        assert_eq!(cycle_type(&[1, 2, 0]), vec![3]);
        assert_eq!(cycle_type(&identity(4)), vec![1, 1, 1, 1]);
    }

    #[test]
    fn transitivity() {
        let c3 = vec![1, 2, 0];
        assert!(is_transitive(&[&c3], 3));
        let swap01 = vec![1, 0, 2];
        assert!(!is_transitive(&[&swap01], 3));
        let swap12 = vec![0, 2, 1];
        assert!(is_transitive(&[&swap01, &swap12], 3));
    }

    #[test]
    fn counts_by_cycle_type() {
        // 3-cycles in S_3: two of them; transpositions in S_4: six
        assert_eq!(with_cycle_type(3, &[3]).len(), 2);
        assert_eq!(with_cycle_type(4, &[2, 1, 1]).len(), 6);
        assert_eq!(transpositions(4).len(), 6);
    }
}
