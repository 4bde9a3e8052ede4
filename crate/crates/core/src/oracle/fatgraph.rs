//! Fatgraph enumeration with automorphism weights.
//!
//! A fatgraph here is a finite half-edge set `X` with a vertex rotation
//! `sigma_0` and an involution `sigma_1`; faces are the cycles of
//! `sigma_2 = sigma_0 . sigma_1`, and fixed points of `sigma_1` are leaves.
//! The graphs counted for the profile `(a, g, mu)` have `|mu|/a` vertices,
//! each carrying `a*m` half-edges cyclically labelled `1..m` repeated `a`
//! times, one edge per label, and face perimeters `(mu_1 m, ..., mu_n m)`
//! with faces labelled to match.  The weighted count `sum 1/|Aut Gamma|`
//! equals `K_g(mu) = H_{g;mu} |Aut mu|`.

use std::collections::HashSet;

use crate::exact::Rat;
use crate::mu::MuTuple;

use super::perm;
use super::{OracleError, OracleLimits};

/// Weighted fatgraph count for the profile `(a, g, mu)`.
///
/// Requires `m >= 1`; at `m = 0` the half-edge model degenerates (the
/// `m = 0` covers are handled by the monodromy oracle).
pub fn count_fatgraphs(
    a: u32,
    g: u32,
    mu: &MuTuple,
    limits: &OracleLimits,
) -> Result<Rat, OracleError> {
    if a < 1 || mu.is_empty() {
        return Err(OracleError::InvalidInput(
            "need a >= 1 and a nonempty profile".into(),
        ));
    }
    let d = mu.total();
    if d % a as u64 != 0 {
        // No vertex set of size |mu|/a exists.
        return Ok(Rat::zero());
    }
    if d > limits.max_degree {
        return Err(OracleError::LimitExceeded(format!(
            "degree {d} > max_degree {}",
            limits.max_degree
        )));
    }
    let m_signed = 2 * g as i64 - 2 + mu.len() as i64 + (d / a as u64) as i64;
    if m_signed < 1 {
        return Err(OracleError::InvalidInput(format!(
            "fatgraph model needs m >= 1, got m = {m_signed}"
        )));
    }
    let m = m_signed as u64;
    if m > limits.max_transpositions {
        return Err(OracleError::LimitExceeded(format!(
            "m = {m} > max_transpositions {}",
            limits.max_transpositions
        )));
    }

    let geom = Geometry::new(a as usize, d as usize, m as usize);
    let symmetries = geom.symmetries();

    // Half-edges sharing a label, in id order; edges pick pairs from these.
    let mut by_label: Vec<Vec<u8>> = vec![Vec::new(); geom.m];
    for h in 0..geom.half_edges {
        by_label[geom.label(h)].push(h as u8);
    }

    let wanted_perimeters: Vec<u64> = mu.parts().iter().map(|&p| p * m).collect();

    let mut seen = HashSet::new();
    let mut total = Rat::zero();
    let mut config_count = 0u64;

    let mut pairing: Vec<(u8, u8)> = Vec::with_capacity(geom.m);
    enumerate_pairings(&by_label, 0, &mut pairing, &mut |pairing| {
        let mut sigma_1: Vec<u8> = (0..geom.half_edges as u8).collect();
        for &(x, y) in pairing {
            sigma_1[x as usize] = y;
            sigma_1[y as usize] = x;
        }
        if !perm::is_transitive(&[&geom.sigma_0, &sigma_1], geom.half_edges) {
            return;
        }
        let sigma_2 = perm::compose(&geom.sigma_0, &sigma_1);
        let faces = perm::cycles(&sigma_2);
        for labelling in face_labellings(&faces, &wanted_perimeters) {
            config_count += 1;
            let canon = canonical_form(&sigma_1, &labelling, &symmetries);
            if seen.insert(canon) {
                let aut = symmetries
                    .iter()
                    .filter(|s| applies_trivially(s, &sigma_1, &labelling))
                    .count() as i64;
                total += Rat::from_frac(1, aut);
            }
        }
    });

    // Orbit-stabilizer: the class weights must sum to configs / |G|.
    debug_assert_eq!(
        &total * &Rat::from(symmetries.len() as u64),
        Rat::from(config_count)
    );

    Ok(total)
}

/// Fixed vertex-rotation structure: `V` vertices with `a*m` half-edges each,
/// half-edge `v*a*m + j` carrying label `j mod m`.
struct Geometry {
    a: usize,
    m: usize,
    vertices: usize,
    half_edges: usize,
    sigma_0: Vec<u8>,
}

impl Geometry {
    fn new(a: usize, d: usize, m: usize) -> Self {
        let vertices = d / a;
        let per_vertex = a * m;
        let half_edges = vertices * per_vertex;
        assert!(half_edges <= u8::MAX as usize + 1, "half-edge set too large");
        let mut sigma_0 = vec![0u8; half_edges];
        for v in 0..vertices {
            for j in 0..per_vertex {
                sigma_0[v * per_vertex + j] = (v * per_vertex + (j + 1) % per_vertex) as u8;
            }
        }
        Geometry {
            a,
            m,
            vertices,
            half_edges,
            sigma_0,
        }
    }

    fn label(&self, h: usize) -> usize {
        (h % (self.a * self.m)) % self.m
    }

    /// The label-preserving bijections commuting with `sigma_0`: permute the
    /// vertices arbitrarily and rotate each vertex by a multiple of `m`.
    fn symmetries(&self) -> Vec<Vec<u8>> {
        let per_vertex = self.a * self.m;
        let mut vertex_perms = Vec::new();
        let mut current: Vec<u8> = (0..self.vertices as u8).collect();
        permute_collect(&mut current, 0, &mut |p| vertex_perms.push(p.to_vec()));

        let mut out = Vec::new();
        let mut offsets = vec![0usize; self.vertices];
        loop {
            for pi in &vertex_perms {
                let mut map = vec![0u8; self.half_edges];
                for v in 0..self.vertices {
                    for j in 0..per_vertex {
                        let image_j = (j + offsets[v] * self.m) % per_vertex;
                        map[v * per_vertex + j] =
                            (pi[v] as usize * per_vertex + image_j) as u8;
                    }
                }
                out.push(map);
            }
            // next offset vector in odometer order
            let mut pos = self.vertices;
            while pos > 0 {
                if offsets[pos - 1] + 1 < self.a {
                    offsets[pos - 1] += 1;
                    for o in &mut offsets[pos..] {
                        *o = 0;
                    }
                    break;
                }
                pos -= 1;
            }
            if pos == 0 {
                break;
            }
        }
        out
    }
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

fn enumerate_pairings(
    by_label: &[Vec<u8>],
    level: usize,
    pairing: &mut Vec<(u8, u8)>,
    f: &mut impl FnMut(&[(u8, u8)]),
) {
    if level == by_label.len() {
        f(pairing);
        return;
    }
    let pool = &by_label[level];
    for i in 0..pool.len() {
        for j in (i + 1)..pool.len() {
            pairing.push((pool[i], pool[j]));
            enumerate_pairings(by_label, level + 1, pairing, f);
            pairing.pop();
        }
    }
}

/// All assignments of face indices such that face `f` gets an index `i`
/// with `perimeter(f) = wanted[i]`, returned as per-half-edge index arrays.
fn face_labellings(faces: &[Vec<u8>], wanted: &[u64]) -> Vec<Vec<u8>> {
    if faces.len() != wanted.len() {
        return Vec::new();
    }
    let n = faces.len();
    let mut assignments = Vec::new();
    let mut assigned: Vec<Option<u8>> = vec![None; n];
    let mut used = vec![false; n];
    fn rec(
        faces: &[Vec<u8>],
        wanted: &[u64],
        f: usize,
        assigned: &mut Vec<Option<u8>>,
        used: &mut Vec<bool>,
        out: &mut Vec<Vec<u8>>,
    ) {
        if f == faces.len() {
            let total: usize = faces.iter().map(Vec::len).sum();
            let mut labelling = vec![0u8; total];
            for (fi, face) in faces.iter().enumerate() {
                for &h in face {
                    labelling[h as usize] = assigned[fi].unwrap();
                }
            }
            out.push(labelling);
            return;
        }
        for i in 0..wanted.len() {
            if !used[i] && wanted[i] == faces[f].len() as u64 {
                used[i] = true;
                assigned[f] = Some(i as u8);
                rec(faces, wanted, f + 1, assigned, used, out);
                used[i] = false;
                assigned[f] = None;
            }
        }
    }
    rec(faces, wanted, 0, &mut assigned, &mut used, &mut assignments);
    assignments
}

/// Minimal serialized image of `(sigma_1, labelling)` over the symmetry
/// group; orbit-invariant, so it identifies the isomorphism class.
fn canonical_form(sigma_1: &[u8], labelling: &[u8], symmetries: &[Vec<u8>]) -> Vec<u8> {
    let mut best: Option<Vec<u8>> = None;
    for s in symmetries {
        let image = apply(s, sigma_1, labelling);
        if best.as_ref().is_none_or(|b| image < *b) {
            best = Some(image);
        }
    }
    best.expect("symmetry group is nonempty")
}

fn apply(s: &[u8], sigma_1: &[u8], labelling: &[u8]) -> Vec<u8> {
    let x = sigma_1.len();
    let mut out = vec![0u8; 2 * x];
    for h in 0..x {
        // conjugated involution and transported labels
        out[s[h] as usize] = s[sigma_1[h] as usize];
        out[x + s[h] as usize] = labelling[h];
    }
    out
}

fn applies_trivially(s: &[u8], sigma_1: &[u8], labelling: &[u8]) -> bool {
    let x = sigma_1.len();
    for h in 0..x {
        if s[sigma_1[h] as usize] != sigma_1[s[h] as usize] {
            return false;
        }
        if labelling[s[h] as usize] != labelling[h] {
            return false;
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::count_connected_covers;

    fn mu(parts: &[u64]) -> MuTuple {
        MuTuple::from_slice(parts).unwrap()
    }

    #[test]
    fn three_graphs_with_trivial_automorphisms() {
        let v = count_fatgraphs(2, 0, &mu(&[3, 1]), &OracleLimits::default()).unwrap();
        assert_eq!(v, Rat::from(3i64));
    }

    #[test]
    fn single_edge_two_vertex_graphs() {
        // Profile (4) at a = 2, g = 0 has m = 1: two 2-valent vertices and
        // one connecting edge.  K = H * |Aut mu| = 1/2.
        let v = count_fatgraphs(2, 0, &mu(&[4]), &OracleLimits::default()).unwrap();
        assert_eq!(v, Rat::from_frac(1, 2));
        let covers = count_connected_covers(2, 0, &mu(&[4]), &OracleLimits::default()).unwrap();
        assert_eq!(v, covers * mu(&[4]).aut_order());
    }

    #[test]
    fn indivisible_profile_counts_zero() {
        let v = count_fatgraphs(2, 0, &mu(&[2, 1]), &OracleLimits::default()).unwrap();
        assert_eq!(v, Rat::zero());
    }

    #[test]
    fn unramified_covers_have_no_fatgraph_model() {
        // (a, g, mu) = (2, 0, (2)) has m = 0: no edges to enumerate.
        assert!(matches!(
            count_fatgraphs(2, 0, &mu(&[2]), &OracleLimits::default()),
            Err(OracleError::InvalidInput(_))
        ));
    }

    #[test]
    fn repeated_parts_pick_up_aut_mu() {
        let lim = OracleLimits::default();
        let t = mu(&[2, 2]);
        let fat = count_fatgraphs(2, 0, &t, &lim).unwrap();
        let covers = count_connected_covers(2, 0, &t, &lim).unwrap();
        assert_eq!(fat, covers * t.aut_order());
        assert!(!fat.is_zero());
    }
}
