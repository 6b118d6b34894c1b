//! Pure complexes up to isomorphism on small vertex sets.

use std::collections::HashSet;

use crate::complex::SimplicialComplex;
use crate::vertex_set::VertexSet;

/// All permutations of `0..n` in lexicographic order.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut p: Vec<usize> = (0..n).collect();
    let mut out = vec![p.clone()];
    loop {
        let Some(i) = (0..n.saturating_sub(1)).rev().find(|&i| p[i] < p[i + 1]) else {
            return out;
        };
        let j = (i + 1..n).rev().find(|&j| p[j] > p[i]).unwrap();
        p.swap(i, j);
        p[i + 1..].reverse();
        out.push(p.clone());
    }
}

/// The least sorted facet list over all vertex relabellings.
pub fn canonical_form(c: &SimplicialComplex) -> Vec<VertexSet> {
    canonical_with(c, &permutations(c.n()))
}

fn canonical_with(c: &SimplicialComplex, perms: &[Vec<usize>]) -> Vec<VertexSet> {
    perms
        .iter()
        .map(|p| c.relabel(p).facets().to_vec())
        .min()
        .unwrap_or_default()
}

/// Pure complexes on exactly the vertices `1..=n` with facets of size `k`, one per
/// isomorphism class, in order of their canonical forms.
pub fn pure_complexes(n: usize, k: usize) -> Vec<SimplicialComplex> {
    let all = VertexSet::full(n).subsets_of_size(k);
    assert!(all.len() < 32, "too many candidate facets");
    let perms = permutations(n);
    let full = VertexSet::full(n);
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for mask in 1u32..(1u32 << all.len()) {
        let facets: Vec<VertexSet> = (0..all.len()).filter(|i| mask >> i & 1 == 1).map(|i| all[i]).collect();
        if facets.iter().fold(VertexSet::EMPTY, |a, f| a.union(*f)) != full {
            continue;
        }
        let c = SimplicialComplex::from_sets(n, facets);
        let canon = canonical_with(&c, &perms);
        if seen.insert(canon.clone()) {
            out.push(SimplicialComplex::from_sets(n, canon));
        }
    }
    out.sort_by(|a, b| a.facets().cmp(b.facets()));
    out
}

/// The census: pure complexes on `n` used vertices, `2 ≤ n ≤ max_n`, facet size `1..n`,
/// up to isomorphism. The full simplex is excluded (its ideal is zero).
pub fn pure_census(max_n: usize) -> Vec<SimplicialComplex> {
    (2..=max_n)
        .flat_map(|n| (1..n).flat_map(move |k| pure_complexes(n, k)))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn permutation_counts() {
        assert_eq!(permutations(0).len(), 1);
        assert_eq!(permutations(4).len(), 24);
        assert_eq!(permutations(3)[1], vec![0, 2, 1]);
    }

    #[test]
    fn graphs_without_isolated_vertices() {
        // graphs on 4 vertices with no isolated vertex: 7 classes
        assert_eq!(pure_complexes(4, 2).len(), 7);
        // on 3 vertices: path and triangle
        assert_eq!(pure_complexes(3, 2).len(), 2);
        assert_eq!(pure_complexes(5, 1).len(), 1);
    }

    #[test]
    fn census_members_are_pure_and_distinct() {
        let c = pure_census(4);
        assert!(c
            .iter()
            .all(|x| x.is_pure() && x.vertex_set() == VertexSet::full(x.n())));
        let forms: HashSet<_> = c.iter().map(canonical_form).collect();
        assert_eq!(forms.len(), c.len());
    }

    #[test]
    fn isomorphic_inputs_share_a_form() {
        let a = SimplicialComplex::new(4, &[vec![1, 2], vec![2, 3], vec![3, 4]]).unwrap();
        let b = SimplicialComplex::new(4, &[vec![2, 4], vec![4, 1], vec![1, 3]]).unwrap();
        assert_eq!(canonical_form(&a), canonical_form(&b));
    }
}
