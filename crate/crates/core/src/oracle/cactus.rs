//! Cactus-node trees: trees of directed cycles joined by branches.
//!
//! A cactus-node tree of type `nu` on `d = |nu|` labelled points consists of
//! disjoint nodes (a directed `nu_i`-cycle for `nu_i > 1`, a bare point for
//! `nu_i = 1`) joined into a tree by `len(nu) - 1` branches.  They are
//! counted by `d! / |Aut nu| * d^(len(nu)-2)`, which the brute force checks
//! through a generalized Pruefer encoding:
//!
//! ```text
//!   { trees of type nu }  <->  M x {1..d}^(len(nu)-2)
//! ```
//!
//! where `M` is the set of node collections with one marked point per node.
//! The brute force enumerates the right-hand side, decodes each element to a
//! tree, validates the tree, re-encodes it, and demands the round trip
//! reproduce the input; the count of decoded trees is returned.

use crate::exact::{factorial, Rat};
use crate::mu::MuTuple;

use super::OracleError;

/// Closed-form count `d!/|Aut nu| * d^(len(nu)-2)`, with the single-node
/// case `len(nu) = 1` read as an exact rational power `d^(-1)`.
pub fn cactus_formula(nu: &MuTuple) -> Rat {
    assert!(!nu.is_empty(), "type must have at least one part");
    let d = nu.total();
    let l = nu.len() as i64;
    factorial(d) / nu.aut_order() * Rat::from(d).pow(l - 2)
}

/// Exact count of cactus-node trees of type `nu` by enumeration of the
/// Pruefer-style encoding.  Every decoded tree is validated structurally and
/// re-encoded; a round-trip mismatch panics, because it means the bijection
/// (and hence the count) is broken.
pub fn count_cactus_trees_bruteforce(nu: &MuTuple, d_limit: u64) -> Result<u64, OracleError> {
    if nu.is_empty() {
        return Err(OracleError::InvalidInput("empty type".into()));
    }
    let d = nu.total();
    if d > d_limit {
        return Err(OracleError::LimitExceeded(format!(
            "|nu| = {d} > d_limit = {d_limit}"
        )));
    }
    let d = d as usize;

    if nu.len() == 1 {
        // A single node: the tree is one directed d-cycle on d points.
        return Ok(count_directed_cycles(d));
    }

    let mut total = 0u64;
    for_each_assembly(&nu.sorted_desc(), d, &mut |assembly| {
        let l = assembly.roots.len();
        let seq_len = l - 2;
        let mut seq = vec![0u8; seq_len];
        loop {
            let branches = decode(assembly, &seq);
            validate_tree(assembly, &branches);
            let (marks, seq_out) = encode(assembly, &branches);
            assert_eq!(marks, assembly.roots, "round trip lost the marked points");
            assert_eq!(seq_out, seq, "round trip changed the sequence");
            total += 1;

            let mut pos = seq_len;
            while pos > 0 {
                if seq[pos - 1] + 1 < d as u8 {
                    seq[pos - 1] += 1;
                    for s in &mut seq[pos..] {
                        *s = 0;
                    }
                    break;
                }
                pos -= 1;
            }
            if pos == 0 {
                break;
            }
        }
    });
    Ok(total)
}

fn count_directed_cycles(d: usize) -> u64 {
    if d == 1 {
        return 1;
    }
    // Sequences 0, p(1), ..., p(d-1) over permutations p of {1..d-1}, each
    // giving a distinct directed d-cycle.
    let mut rest: Vec<u8> = (1..d as u8).collect();
    let mut count = 0u64;
    permute_count(&mut rest, 0, &mut count);
    count
}

fn permute_count(arr: &mut [u8], k: usize, count: &mut u64) {
    if k == arr.len() {
        *count += 1;
        return;
    }
    for i in k..arr.len() {
        arr.swap(k, i);
        permute_count(arr, k + 1, count);
        arr.swap(k, i);
    }
}

/// One element of `M`: points partitioned into nodes, a directed-cycle
/// successor map, and one marked point (root) per node.
struct Assembly {
    /// Per node, its points in increasing order.
    comp_points: Vec<Vec<u8>>,
    /// point -> node index
    comp_of: Vec<u8>,
    /// point -> successor within its node's cycle (itself for a bare point)
    next: Vec<u8>,
    /// per node, the marked point
    roots: Vec<u8>,
}

/// Enumerates every element of `M` for the given block sizes.
fn for_each_assembly(sizes: &[u64], d: usize, f: &mut impl FnMut(&Assembly)) {
    let mut blocks: Vec<Vec<u8>> = Vec::new();
    let mut unassigned: Vec<bool> = vec![true; d];
    partition_rec(sizes, d, &mut unassigned, &mut blocks, f);
}

/// Set partitions with the given size multiset, each produced once: the
/// smallest unassigned point anchors the next block, and equal-size blocks
/// are therefore ordered by their minima.
fn partition_rec(
    sizes: &[u64],
    d: usize,
    unassigned: &mut Vec<bool>,
    blocks: &mut Vec<Vec<u8>>,
    f: &mut impl FnMut(&Assembly),
) {
    let anchor = match unassigned.iter().position(|&u| u) {
        Some(p) => p as u8,
        None => {
            structures_rec(blocks, d, &mut Vec::new(), &mut vec![0u8; d], f);
            return;
        }
    };
    let mut remaining = sizes.to_vec();
    let mut tried = Vec::new();
    for idx in 0..remaining.len() {
        let s = remaining[idx];
        if tried.contains(&s) {
            continue;
        }
        tried.push(s);
        remaining.remove(idx);
        unassigned[anchor as usize] = false;
        let pool: Vec<u8> = (anchor as usize + 1..d)
            .filter(|&p| unassigned[p])
            .map(|p| p as u8)
            .collect();
        let mut chosen = Vec::new();
        combinations_rec(
            &pool,
            0,
            s as usize - 1,
            &mut chosen,
            &mut |others: &[u8]| {
                let mut block = vec![anchor];
                block.extend_from_slice(others);
                for &p in others {
                    unassigned[p as usize] = false;
                }
                blocks.push(block);
                partition_rec(&remaining, d, unassigned, blocks, f);
                let block = blocks.pop().unwrap();
                for &p in &block[1..] {
                    unassigned[p as usize] = true;
                }
            },
        );
        unassigned[anchor as usize] = true;
        remaining.insert(idx, s);
    }
}

fn combinations_rec(
    pool: &[u8],
    start: usize,
    need: usize,
    chosen: &mut Vec<u8>,
    f: &mut impl FnMut(&[u8]),
) {
    if need == 0 {
        f(chosen);
        return;
    }
    for i in start..pool.len() {
        if pool.len() - i < need {
            break;
        }
        chosen.push(pool[i]);
        combinations_rec(pool, i + 1, need - 1, chosen, f);
        chosen.pop();
    }
}

/// For fixed blocks, enumerates all rooted directed cycle structures:
/// `size!` per block (`(size-1)!` cycles times `size` marked points).
fn structures_rec(
    blocks: &[Vec<u8>],
    d: usize,
    roots: &mut Vec<u8>,
    next: &mut Vec<u8>,
    f: &mut impl FnMut(&Assembly),
) {
    let idx = roots.len();
    if idx == blocks.len() {
        let mut comp_of = vec![0u8; d];
        for (ci, block) in blocks.iter().enumerate() {
            for &p in block {
                comp_of[p as usize] = ci as u8;
            }
        }
        f(&Assembly {
            comp_points: blocks.to_vec(),
            comp_of,
            next: next.clone(),
            roots: roots.clone(),
        });
        return;
    }
    let block = &blocks[idx];
    if block.len() == 1 {
        next[block[0] as usize] = block[0];
        roots.push(block[0]);
        structures_rec(blocks, d, roots, next, f);
        roots.pop();
        return;
    }
    // Directed cycles: block[0] is fixed first, the rest permuted.
    let mut arrangement: Vec<u8> = block[1..].to_vec();
    cycles_rec(block[0], &mut arrangement, 0, blocks, d, roots, next, f);
}

#[allow(clippy::too_many_arguments)]
fn cycles_rec(
    head: u8,
    arr: &mut Vec<u8>,
    k: usize,
    blocks: &[Vec<u8>],
    d: usize,
    roots: &mut Vec<u8>,
    next: &mut Vec<u8>,
    f: &mut impl FnMut(&Assembly),
) {
    if k == arr.len() {
        next[head as usize] = arr[0];
        for i in 0..arr.len() - 1 {
            next[arr[i] as usize] = arr[i + 1];
        }
        next[arr[arr.len() - 1] as usize] = head;
        for root_pos in 0..=arr.len() {
            let root = if root_pos == 0 { head } else { arr[root_pos - 1] };
            roots.push(root);
            structures_rec(blocks, d, roots, next, f);
            roots.pop();
        }
        return;
    }
    for i in k..arr.len() {
        arr.swap(k, i);
        cycles_rec(head, arr, k + 1, blocks, d, roots, next, f);
        arr.swap(k, i);
    }
}

/// Pruefer decode: attaches, for each sequence entry, the pending node with
/// the largest point among those none of whose points appear later in the
/// sequence; its mark connects to the sequence point.  The final two nodes
/// join at their marks.
fn decode(assembly: &Assembly, seq: &[u8]) -> Vec<(u8, u8)> {
    let l = assembly.roots.len();
    let mut pending_refs = vec![0u32; l];
    for &k in seq {
        pending_refs[assembly.comp_of[k as usize] as usize] += 1;
    }
    let mut attached = vec![false; l];
    let mut branches = Vec::with_capacity(l - 1);
    for &k in seq {
        let b = (0..l)
            .filter(|&c| !attached[c] && pending_refs[c] == 0)
            .max_by_key(|&c| *assembly.comp_points[c].last().unwrap())
            .expect("at least two nodes stay eligible");
        branches.push((assembly.roots[b], k));
        attached[b] = true;
        pending_refs[assembly.comp_of[k as usize] as usize] -= 1;
    }
    let mut stragglers = (0..l).filter(|&c| !attached[c]);
    let s0 = stragglers.next().expect("two nodes remain");
    let s1 = stragglers.next().expect("two nodes remain");
    branches.push((assembly.roots[s0], assembly.roots[s1]));
    branches
}

fn validate_tree(assembly: &Assembly, branches: &[(u8, u8)]) {
    let d = assembly.next.len();
    assert_eq!(branches.len(), assembly.roots.len() - 1);
    let mut parent: Vec<usize> = (0..d).collect();
    fn find(parent: &mut [usize], mut i: usize) -> usize {
        while parent[i] != i {
            parent[i] = parent[parent[i]];
            i = parent[i];
        }
        i
    }
    let mut unions = 0;
    let join = |parent: &mut Vec<usize>, x: usize, y: usize, unions: &mut usize| {
        let (a, b) = (find(parent, x), find(parent, y));
        if a != b {
            parent[a] = b;
            *unions += 1;
        }
    };
    for p in 0..d {
        let q = assembly.next[p] as usize;
        if q != p {
            join(&mut parent, p, q, &mut unions);
        }
    }
    for &(p, q) in branches {
        join(&mut parent, p as usize, q as usize, &mut unions);
    }
    let root = find(&mut parent, 0);
    assert!(
        (0..d).all(|i| find(&mut parent, i) == root),
        "decoded graph is disconnected"
    );
}

/// Pruefer encode: repeatedly strips the branch-leaf node with the largest
/// point, recording the far endpoint and marking the near one.  Returns the
/// recovered marks and sequence.
fn encode(assembly: &Assembly, branches: &[(u8, u8)]) -> (Vec<u8>, Vec<u8>) {
    let l = assembly.roots.len();
    let mut incident: Vec<Vec<usize>> = vec![Vec::new(); l];
    for (bi, &(p, q)) in branches.iter().enumerate() {
        incident[assembly.comp_of[p as usize] as usize].push(bi);
        incident[assembly.comp_of[q as usize] as usize].push(bi);
    }
    let mut alive_branch = vec![true; branches.len()];
    let mut degree: Vec<usize> = incident.iter().map(Vec::len).collect();
    let mut active = vec![true; l];
    let mut marks = vec![u8::MAX; l];
    let mut seq = Vec::with_capacity(l - 2);
    for _ in 0..l.saturating_sub(2) {
        let b = (0..l)
            .filter(|&c| active[c] && degree[c] == 1)
            .max_by_key(|&c| *assembly.comp_points[c].last().unwrap())
            .expect("a tree always has a leaf");
        let bi = *incident[b]
            .iter()
            .find(|&&bi| alive_branch[bi])
            .expect("leaf has one live branch");
        let (p, q) = branches[bi];
        let (own, other) = if assembly.comp_of[p as usize] as usize == b {
            (p, q)
        } else {
            (q, p)
        };
        marks[b] = own;
        seq.push(other);
        alive_branch[bi] = false;
        active[b] = false;
        degree[b] -= 1;
        degree[assembly.comp_of[other as usize] as usize] -= 1;
    }
    let bi = alive_branch.iter().position(|&x| x).expect("one branch left");
    let (p, q) = branches[bi];
    marks[assembly.comp_of[p as usize] as usize] = p;
    marks[assembly.comp_of[q as usize] as usize] = q;
    (marks, seq)
}
