//! Simplicial complexes given by their facets, and the combinatorial constructions used
//! by the Cohen-Macaulay tests: links, restrictions `Δ_V`, skeleta, joins, the 1-skeleton
//! diameter, minimal nonfaces, facet subcomplexes and 4-cycles through facet pairs.
//!
//! Vertices are 1-based in every external representation and 0-based internally.

use std::collections::{HashSet, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::vertex_set::{VertexSet, MAX_VERTICES};

/// Dimension reported for the void complex (no faces at all).
pub const VOID_DIM: isize = isize::MIN;

/// Default cap on `|F(Δ)|` for loops over all facet subsets.
pub const DEFAULT_FACET_CAP: usize = 20;

/// A simplicial complex on the vertex universe `{1..n}`, stored as its facets.
///
/// Facets are kept pairwise incomparable and in canonical order (lexicographic on ascending
/// vertex lists). The facet list may be empty (the void complex) or consist of the empty set
/// alone (the irrelevant complex `{∅}`); these are distinct values.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SimplicialComplex {
    n: usize,
    facets: Vec<VertexSet>,
}

/// JSON shape: `{"n": 5, "facets": [[1,2],[2,3]]}` with 1-based labels.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComplexFile {
    pub n: usize,
    pub facets: Vec<Vec<usize>>,
}

/// Graph diameter of the 1-skeleton.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Diameter {
    Finite(usize),
    Infinite,
}

impl fmt::Display for Diameter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Diameter::Finite(d) => write!(f, "{d}"),
            Diameter::Infinite => f.write_str("inf"),
        }
    }
}

impl SimplicialComplex {
    /// Builds a complex from 1-based facet lists, keeping only inclusion-maximal sets.
    pub fn new(n: usize, facets: &[Vec<usize>]) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices { n, max: MAX_VERTICES });
        }
        if facets.is_empty() {
            return Err(Error::EmptyFacetList);
        }
        let sets = facets
            .iter()
            .map(|f| VertexSet::from_labels(f, n))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::from_sets(n, sets))
    }

    /// Builds a complex from vertex sets without range checks beyond `debug_assert`.
    /// An empty iterator gives the void complex.
    pub fn from_sets<I: IntoIterator<Item = VertexSet>>(n: usize, sets: I) -> Self {
        let mut sets: Vec<VertexSet> = sets.into_iter().collect();
        debug_assert!(sets.iter().all(|s| s.is_subset(VertexSet::full(n))));
        // larger sets first so that maximality is decided against already-kept facets
        sets.sort_by(|a, b| b.len().cmp(&a.len()).then(a.cmp(b)));
        sets.dedup();
        let mut facets: Vec<VertexSet> = Vec::with_capacity(sets.len());
        for s in sets {
            if !facets.iter().any(|f| s.is_subset(*f)) {
                facets.push(s);
            }
        }
        facets.sort();
        SimplicialComplex { n, facets }
    }

    pub fn void(n: usize) -> Self {
        SimplicialComplex { n, facets: Vec::new() }
    }

    /// The complex `{∅}`.
    pub fn irrelevant(n: usize) -> Self {
        SimplicialComplex {
            n,
            facets: vec![VertexSet::EMPTY],
        }
    }

    /// The full simplex on `n` vertices.
    pub fn simplex(n: usize) -> Self {
        SimplicialComplex {
            n,
            facets: vec![VertexSet::full(n)],
        }
    }

    pub fn from_file(file: &ComplexFile) -> Result<Self> {
        Self::new(file.n, &file.facets)
    }

    pub fn to_file(&self) -> ComplexFile {
        ComplexFile {
            n: self.n,
            facets: self.facets.iter().map(|f| f.labels()).collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn facets(&self) -> &[VertexSet] {
        &self.facets
    }

    pub fn num_facets(&self) -> usize {
        self.facets.len()
    }

    pub fn is_void(&self) -> bool {
        self.facets.is_empty()
    }

    /// `(max facet size) - 1`, or [`VOID_DIM`] for the void complex.
    pub fn dim(&self) -> isize {
        match self.facets.iter().map(|f| f.len()).max() {
            Some(k) => k as isize - 1,
            None => VOID_DIM,
        }
    }

    pub fn is_pure(&self) -> bool {
        match self.facets.first() {
            Some(f) => self.facets.iter().all(|g| g.len() == f.len()),
            None => true,
        }
    }

    /// Union of all facets.
    pub fn vertex_set(&self) -> VertexSet {
        self.facets.iter().fold(VertexSet::EMPTY, |acc, f| acc.union(*f))
    }

    pub fn contains_face(&self, face: VertexSet) -> bool {
        self.facets.iter().any(|f| face.is_subset(*f))
    }

    pub fn facet_index(&self, facet: VertexSet) -> Option<usize> {
        self.facets.binary_search(&facet).ok()
    }

    /// All faces grouped by dimension: entry `k` holds the faces with `k` vertices
    /// (dimension `k - 1`), each group sorted.
    pub fn faces_by_size(&self) -> Vec<Vec<VertexSet>> {
        if self.is_void() {
            return Vec::new();
        }
        let top = (self.dim() + 1) as usize;
        let mut seen: HashSet<VertexSet> = HashSet::new();
        for f in &self.facets {
            for s in f.subsets() {
                seen.insert(s);
            }
        }
        let mut groups = vec![Vec::new(); top + 1];
        for s in seen {
            groups[s.len()].push(s);
        }
        for g in &mut groups {
            g.sort();
        }
        groups
    }

    /// All faces in increasing dimension, lexicographic within a dimension.
    pub fn faces(&self) -> Vec<VertexSet> {
        self.faces_by_size().into_iter().flatten().collect()
    }

    /// `lk_Δ F = {G : G ∩ F = ∅, G ∪ F ∈ Δ}` on the same vertex universe.
    pub fn link(&self, face: VertexSet) -> Result<Self> {
        if !self.contains_face(face) {
            return Err(Error::NotAFace { face: face.to_string() });
        }
        Ok(self.link_unchecked(face))
    }

    pub(crate) fn link_unchecked(&self, face: VertexSet) -> Self {
        let sets = self
            .facets
            .iter()
            .filter(|h| face.is_subset(**h))
            .map(|h| h.difference(face));
        Self::from_sets(self.n, sets)
    }

    /// `Δ_V`: the subcomplex generated by the facets with at least `|V| - 1` vertices in `V`.
    /// May be void.
    pub fn restrict(&self, v: VertexSet) -> Result<Self> {
        if !v.is_subset(VertexSet::full(self.n)) {
            let bad = v.difference(VertexSet::full(self.n)).iter().next().unwrap_or(0);
            return Err(Error::VertexOutOfRange {
                vertex: bad + 1,
                n: self.n,
            });
        }
        if v.len() < 2 {
            return Err(Error::RestrictionTooSmall { size: v.len() });
        }
        let need = v.len() - 1;
        Ok(SimplicialComplex {
            n: self.n,
            facets: self
                .facets
                .iter()
                .copied()
                .filter(|f| f.intersection(v).len() >= need)
                .collect(),
        })
    }

    /// All faces of dimension at most `d`.
    pub fn skeleton(&self, d: isize) -> Result<Self> {
        let top = self.dim();
        if d < 0 || d > top {
            return Err(Error::DimensionOutOfRange {
                requested: d,
                min: 0,
                max: top,
            });
        }
        let k = (d + 1) as usize;
        let mut sets = Vec::new();
        for f in &self.facets {
            if f.len() <= k {
                sets.push(*f);
            } else {
                sets.extend(f.subsets_of_size(k));
            }
        }
        Ok(Self::from_sets(self.n, sets))
    }

    /// The join `Δ * Γ`, with `Γ`'s vertices relabelled to follow `Δ`'s.
    pub fn join(&self, other: &Self) -> Result<Self> {
        let n = self.n + other.n;
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices { n, max: MAX_VERTICES });
        }
        let mut sets = Vec::with_capacity(self.facets.len() * other.facets.len());
        for f in &self.facets {
            for g in &other.facets {
                sets.push(f.union(g.shifted(self.n)));
            }
        }
        Ok(Self::from_sets(n, sets))
    }

    /// Adjacency of the 1-skeleton, indexed by 0-based vertex.
    pub fn edge_graph(&self) -> Vec<VertexSet> {
        let mut adj = vec![VertexSet::EMPTY; self.n];
        for f in &self.facets {
            for v in f.iter() {
                adj[v] = adj[v].union(f.without(v));
            }
        }
        adj
    }

    /// Diameter of the graph of 1-dimensional faces over all `n` vertices. Infinite when the
    /// graph is disconnected or some vertex lies in no edge.
    pub fn one_skeleton_diameter(&self) -> Diameter {
        let adj = self.edge_graph();
        if self.n == 0 || adj.iter().any(|a| a.is_empty()) {
            return Diameter::Infinite;
        }
        let mut diam = 0;
        for s in 0..self.n {
            let mut dist = vec![usize::MAX; self.n];
            dist[s] = 0;
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for w in adj[u].iter() {
                    if dist[w] == usize::MAX {
                        dist[w] = dist[u] + 1;
                        queue.push_back(w);
                    }
                }
            }
            for &d in &dist {
                if d == usize::MAX {
                    return Diameter::Infinite;
                }
                diam = diam.max(d);
            }
        }
        Diameter::Finite(diam)
    }

    /// Inclusion-minimal subsets of `{1..n}` that are not faces, sorted.
    pub fn minimal_nonfaces(&self) -> Vec<VertexSet> {
        let faces: HashSet<VertexSet> = self.faces().into_iter().collect();
        let mut out: HashSet<VertexSet> = HashSet::new();
        // every minimal nonface is a face plus one vertex
        let candidates: Vec<VertexSet> = if faces.is_empty() {
            vec![VertexSet::EMPTY]
        } else {
            faces.iter().copied().collect()
        };
        for f in candidates {
            for v in 0..self.n {
                if f.contains(v) {
                    continue;
                }
                let s = f.with(v);
                if faces.contains(&s) {
                    continue;
                }
                if s.iter().all(|w| faces.contains(&s.without(w))) {
                    out.insert(s);
                }
            }
        }
        if faces.is_empty() {
            // the void complex has ∅ itself as its only minimal nonface
            return vec![VertexSet::EMPTY];
        }
        let mut out: Vec<VertexSet> = out.into_iter().collect();
        out.sort();
        out
    }

    /// Whether every minimal nonface has exactly two vertices.
    pub fn is_flag(&self) -> bool {
        self.minimal_nonfaces().iter().all(|s| s.len() == 2)
    }

    /// The subcomplex generated by the facets at the given canonical indices.
    pub fn generated_subcomplex(&self, selection: &[usize]) -> Result<FacetSubset<'_>> {
        if selection.is_empty() {
            return Err(Error::EmptySelection);
        }
        let mut mask = 0u64;
        for &i in selection {
            if i >= self.facets.len() {
                return Err(Error::FacetIndexOutOfRange {
                    index: i,
                    count: self.facets.len(),
                });
            }
            mask |= 1u64 << i;
        }
        Ok(FacetSubset { parent: self, mask })
    }

    /// Same as [`generated_subcomplex`](Self::generated_subcomplex) but selecting facets by value.
    pub fn subcomplex_of_facets(&self, facets: &[VertexSet]) -> Result<FacetSubset<'_>> {
        let idx = facets
            .iter()
            .map(|f| {
                self.facet_index(*f)
                    .ok_or_else(|| Error::NotAFacet { face: f.to_string() })
            })
            .collect::<Result<Vec<_>>>()?;
        self.generated_subcomplex(&idx)
    }

    /// Every nonempty facet subset exactly once, by binary counting over canonical facet order.
    pub fn facet_subsets(&self, cap: usize) -> Result<FacetSubsets<'_>> {
        let count = self.facets.len();
        if count > cap || count >= 64 {
            return Err(Error::FacetCapExceeded { count, cap });
        }
        Ok(FacetSubsets {
            parent: self,
            next: 1,
            end: 1u64 << count,
        })
    }

    /// Searches for a 4-cycle `v1,G1,v2,F2,v3,G2,v4,F4` with `v1,v2 ∈ G1∖G2`, `v3,v4 ∈ G2∖G1`
    /// and `F2, F4` facets containing `G1 ∩ G2`. Returns the lexicographically first one.
    pub fn four_cycle_witness(&self, g1: VertexSet, g2: VertexSet) -> Result<Option<FourCycle>> {
        for g in [g1, g2] {
            if self.facet_index(g).is_none() {
                return Err(Error::NotAFacet { face: g.to_string() });
            }
        }
        let common = g1.intersection(g2);
        if common.len() as isize > self.dim() - 1 {
            return Err(Error::FacetPairTooClose {
                g1: g1.to_string(),
                g2: g2.to_string(),
            });
        }
        let left = g1.difference(g2);
        let right = g2.difference(g1);
        let candidates: Vec<VertexSet> = self
            .facets
            .iter()
            .copied()
            .filter(|f| common.is_subset(*f) && *f != g1 && *f != g2)
            .collect();
        let through = |a: usize, b: usize| candidates.iter().copied().find(|f| f.contains(a) && f.contains(b));
        for v1 in left.iter() {
            for v2 in left.iter().filter(|&v| v != v1) {
                for v3 in right.iter() {
                    let Some(f2) = through(v2, v3) else { continue };
                    for v4 in right.iter().filter(|&v| v != v3) {
                        let Some(f4) = candidates
                            .iter()
                            .copied()
                            .find(|f| *f != f2 && f.contains(v4) && f.contains(v1))
                        else {
                            continue;
                        };
                        return Ok(Some(FourCycle {
                            vertices: [v1, v2, v3, v4],
                            facets: [g1, f2, g2, f4],
                        }));
                    }
                }
            }
        }
        Ok(None)
    }

    /// Applies a vertex permutation: vertex `v` becomes `perm[v]` (both 0-based).
    pub fn relabel(&self, perm: &[usize]) -> Self {
        let sets = self
            .facets
            .iter()
            .map(|f| VertexSet::from_indices(f.iter().map(|v| perm[v])));
        Self::from_sets(self.n, sets)
    }
}

impl fmt::Display for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n={} [", self.n)?;
        for (i, face) in self.facets.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{face}")?;
        }
        f.write_str("]")
    }
}

impl fmt::Debug for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// A subcomplex `Γ` generated by a nonempty subset of the parent's facets, so that
/// `F(Γ) ⊆ F(Δ)` holds by construction.
#[derive(Clone, Copy)]
pub struct FacetSubset<'a> {
    parent: &'a SimplicialComplex,
    mask: u64,
}

impl<'a> FacetSubset<'a> {
    pub fn parent(&self) -> &'a SimplicialComplex {
        self.parent
    }

    /// Bit `i` set iff canonical facet `i` is selected.
    pub fn mask(&self) -> u64 {
        self.mask
    }

    pub fn indices(&self) -> Vec<usize> {
        VertexSet::from_bits(self.mask).iter().collect()
    }

    pub fn contains_index(&self, i: usize) -> bool {
        self.mask & (1u64 << i) != 0
    }

    pub fn is_full(&self) -> bool {
        self.mask.count_ones() as usize == self.parent.facets.len()
    }

    pub fn len(&self) -> usize {
        self.mask.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.mask == 0
    }

    /// Selected facets in canonical order.
    pub fn facets(&self) -> Vec<VertexSet> {
        self.indices().into_iter().map(|i| self.parent.facets[i]).collect()
    }

    /// Parent facets not in the selection.
    pub fn complement_facets(&self) -> Vec<VertexSet> {
        (0..self.parent.facets.len())
            .filter(|&i| !self.contains_index(i))
            .map(|i| self.parent.facets[i])
            .collect()
    }

    pub fn complex(&self) -> SimplicialComplex {
        SimplicialComplex {
            n: self.parent.n,
            facets: self.facets(),
        }
    }
}

impl fmt::Debug for FacetSubset<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.facets()).finish()
    }
}

#[derive(Debug)]
pub struct FacetSubsets<'a> {
    parent: &'a SimplicialComplex,
    next: u64,
    end: u64,
}

impl<'a> Iterator for FacetSubsets<'a> {
    type Item = FacetSubset<'a>;

    fn next(&mut self) -> Option<FacetSubset<'a>> {
        if self.next >= self.end {
            return None;
        }
        let mask = self.next;
        self.next += 1;
        Some(FacetSubset {
            parent: self.parent,
            mask,
        })
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let r = (self.end - self.next) as usize;
        (r, Some(r))
    }
}

impl ExactSizeIterator for FacetSubsets<'_> {}

/// `v1, F1, v2, F2, v3, F3, v4, F4` with `v_i, v_{i+1} ∈ F_i` (indices mod 4).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct FourCycle {
    /// 0-based vertices.
    pub vertices: [usize; 4],
    pub facets: [VertexSet; 4],
}

impl FourCycle {
    pub fn is_valid_in(&self, complex: &SimplicialComplex) -> bool {
        let distinct_v = (0..4).all(|i| (i + 1..4).all(|j| self.vertices[i] != self.vertices[j]));
        let distinct_f = (0..4).all(|i| (i + 1..4).all(|j| self.facets[i] != self.facets[j]));
        distinct_v
            && distinct_f
            && (0..4).all(|i| {
                let f = self.facets[i];
                complex.facet_index(f).is_some()
                    && f.contains(self.vertices[i])
                    && f.contains(self.vertices[(i + 1) % 4])
            })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(n: usize, f: &[&[usize]]) -> SimplicialComplex {
        SimplicialComplex::new(n, &f.iter().map(|x| x.to_vec()).collect::<Vec<_>>()).unwrap()
    }

    fn vs(l: &[usize]) -> VertexSet {
        VertexSet::from_labels(l, 64).unwrap()
    }

    fn labels(cx: &SimplicialComplex) -> Vec<Vec<usize>> {
        cx.facets().iter().map(|f| f.labels()).collect()
    }

    fn c5() -> SimplicialComplex {
        c(5, &[&[1, 2], &[2, 3], &[3, 4], &[4, 5], &[5, 1]])
    }

    fn flap() -> SimplicialComplex {
        c(5, &[&[1, 2, 3], &[1, 2, 4], &[1, 3, 4], &[2, 3, 4], &[3, 4, 5]])
    }

    fn rp2() -> SimplicialComplex {
        c(
            6,
            &[
                &[1, 2, 3],
                &[1, 2, 6],
                &[1, 3, 5],
                &[1, 4, 5],
                &[1, 4, 6],
                &[2, 3, 4],
                &[2, 4, 5],
                &[2, 5, 6],
                &[3, 4, 6],
                &[3, 5, 6],
            ],
        )
    }

    #[test]
    fn constructor_canonicalizes() {
        let cx = c5();
        assert_eq!(cx.dim(), 1);
        assert!(cx.is_pure());
        assert_eq!(
            labels(&cx),
            vec![vec![1, 2], vec![1, 5], vec![2, 3], vec![3, 4], vec![4, 5]]
        );
        let s = c(3, &[&[1, 2, 3]]);
        assert_eq!(s.num_facets(), 1);
        assert_eq!(s.dim(), 2);
        let m = c(4, &[&[1, 2], &[1, 2, 3]]);
        assert_eq!(labels(&m), vec![vec![1, 2, 3]]);
        assert!(!c(4, &[&[1, 2], &[3]]).is_pure());
    }

    #[test]
    fn constructor_errors() {
        assert_eq!(SimplicialComplex::new(3, &[]), Err(Error::EmptyFacetList));
        assert_eq!(
            SimplicialComplex::new(3, &[vec![1, 4]]),
            Err(Error::VertexOutOfRange { vertex: 4, n: 3 })
        );
        assert!(SimplicialComplex::new(3, &[vec![0]]).is_err());
    }

    #[test]
    fn void_and_irrelevant_are_distinct() {
        let v = SimplicialComplex::void(3);
        let e = SimplicialComplex::irrelevant(3);
        assert_ne!(v, e);
        assert_eq!(v.dim(), VOID_DIM);
        assert_eq!(e.dim(), -1);
        assert!(e.contains_face(VertexSet::EMPTY));
        assert!(!v.contains_face(VertexSet::EMPTY));
    }

    #[test]
    fn links() {
        assert_eq!(labels(&c5().link(vs(&[1])).unwrap()), vec![vec![2], vec![5]]);
        assert_eq!(labels(&flap().link(vs(&[5])).unwrap()), vec![vec![3, 4]]);
        assert_eq!(flap().link(VertexSet::EMPTY).unwrap(), flap());
        let lk = c5().link(vs(&[1, 2])).unwrap();
        assert_eq!(lk, SimplicialComplex::irrelevant(5));
        assert!(matches!(c5().link(vs(&[1, 3])), Err(Error::NotAFace { .. })));
    }

    #[test]
    fn restriction() {
        let r = rp2().restrict(vs(&[4, 5, 6])).unwrap();
        let mut expect = vec![
            vec![1, 4, 5],
            vec![1, 4, 6],
            vec![2, 5, 6],
            vec![2, 4, 5],
            vec![3, 4, 6],
            vec![3, 5, 6],
        ];
        expect.sort();
        assert_eq!(labels(&r), expect);
        assert_eq!(
            labels(&c5().restrict(vs(&[1, 3])).unwrap()),
            vec![vec![1, 2], vec![1, 5], vec![2, 3], vec![3, 4]]
        );
        // a single facet's own vertex set keeps that facet
        let f = flap();
        for g in f.facets() {
            assert!(f.restrict(*g).unwrap().facets().contains(g));
        }
        assert!(matches!(
            c5().restrict(vs(&[1])),
            Err(Error::RestrictionTooSmall { size: 1 })
        ));
        // |V| >= dim + 3 leaves nothing
        assert!(c5().restrict(vs(&[1, 2, 3, 4])).unwrap().is_void());
    }

    #[test]
    fn skeleta() {
        let k4 = SimplicialComplex::simplex(4).skeleton(1).unwrap();
        assert_eq!(k4.num_facets(), 6);
        assert_eq!(k4.dim(), 1);
        let pts = SimplicialComplex::simplex(4).skeleton(0).unwrap();
        assert_eq!(labels(&pts), vec![vec![1], vec![2], vec![3], vec![4]]);
        assert_eq!(flap().skeleton(2).unwrap(), flap());
        assert!(flap().skeleton(3).is_err());
        assert!(flap().skeleton(-1).is_err());
        // mixed: a lower facet survives untouched
        let m = c(4, &[&[1, 2, 3], &[4]]).skeleton(1).unwrap();
        assert_eq!(labels(&m), vec![vec![1, 2], vec![1, 3], vec![2, 3], vec![4]]);
    }

    #[test]
    fn joins() {
        let two = c(2, &[&[1], &[2]]);
        let j = two.join(&two).unwrap();
        assert_eq!(labels(&j), vec![vec![1, 3], vec![1, 4], vec![2, 3], vec![2, 4]]);
        let cone = flap().join(&c(1, &[&[1]])).unwrap();
        assert_eq!(cone.dim(), 3);
        assert_eq!(cone.n(), 6);
        let j = c5().join(&two).unwrap();
        assert_eq!(j.num_facets(), 10);
        assert!(j.is_pure());
        assert_eq!(j.dim(), 2);
    }

    #[test]
    fn diameters() {
        assert_eq!(c5().one_skeleton_diameter(), Diameter::Finite(2));
        let path = c(4, &[&[1, 2], &[2, 3], &[3, 4]]);
        assert_eq!(path.one_skeleton_diameter(), Diameter::Finite(3));
        assert_eq!(rp2().one_skeleton_diameter(), Diameter::Finite(1));
        assert_eq!(c(4, &[&[1, 2], &[3, 4]]).one_skeleton_diameter(), Diameter::Infinite);
        assert_eq!(c(3, &[&[1, 2]]).one_skeleton_diameter(), Diameter::Infinite);
    }

    #[test]
    fn minimal_nonfaces_small_cases() {
        let mn: Vec<_> = c5().minimal_nonfaces().iter().map(|s| s.labels()).collect();
        assert_eq!(mn, vec![vec![1, 3], vec![1, 4], vec![2, 4], vec![2, 5], vec![3, 5]]);
        assert!(SimplicialComplex::simplex(4).minimal_nonfaces().is_empty());
        let mn: Vec<_> = c(4, &[&[1, 2], &[3, 4]])
            .minimal_nonfaces()
            .iter()
            .map(|s| s.labels())
            .collect();
        assert_eq!(mn, vec![vec![1, 3], vec![1, 4], vec![2, 3], vec![2, 4]]);
        // unused vertex is a minimal nonface on its own
        let mn = c(3, &[&[1, 2]]).minimal_nonfaces();
        assert_eq!(mn, vec![vs(&[3])]);
        // hollow triangle: the full set is the only minimal nonface
        let t = c(3, &[&[1, 2], &[2, 3], &[1, 3]]);
        assert_eq!(t.minimal_nonfaces(), vec![vs(&[1, 2, 3])]);
    }

    #[test]
    fn minimal_nonfaces_partition_all_subsets() {
        for cx in [c5(), flap(), rp2(), c(4, &[&[1, 2], &[3, 4]])] {
            let mn = cx.minimal_nonfaces();
            for s in VertexSet::full(cx.n()).subsets() {
                let has_nonface = mn.iter().any(|m| m.is_subset(s));
                assert_ne!(has_nonface, cx.contains_face(s), "{cx} {s}");
            }
        }
    }

    #[test]
    fn facet_subsets() {
        let f = flap();
        let g = f.subcomplex_of_facets(&[vs(&[1, 2, 3]), vs(&[3, 4, 5])]).unwrap();
        assert_eq!(labels(&g.complex()), vec![vec![1, 2, 3], vec![3, 4, 5]]);
        assert_eq!(g.complement_facets().len(), 3);
        let all = f.generated_subcomplex(&[0, 1, 2, 3, 4]).unwrap();
        assert!(all.is_full());
        assert_eq!(all.complex(), f);
        assert_eq!(f.generated_subcomplex(&[]).unwrap_err(), Error::EmptySelection);
        assert!(f.generated_subcomplex(&[5]).is_err());

        assert_eq!(c(3, &[&[1, 2], &[2, 3]]).facet_subsets(20).unwrap().count(), 3);
        assert_eq!(c5().facet_subsets(20).unwrap().count(), 31);
        let k4 = SimplicialComplex::simplex(4).skeleton(1).unwrap();
        let masks: Vec<u64> = k4.facet_subsets(20).unwrap().map(|s| s.mask()).collect();
        assert_eq!(masks, (1..64).collect::<Vec<_>>());
        assert_eq!(
            k4.facet_subsets(5).unwrap_err(),
            Error::FacetCapExceeded { count: 6, cap: 5 }
        );
        let pair = k4.subcomplex_of_facets(&[vs(&[1, 2]), vs(&[3, 4])]).unwrap();
        assert_eq!(pair.indices(), vec![0, 5]);
    }

    #[test]
    fn four_cycles() {
        let k4 = SimplicialComplex::simplex(4).skeleton(1).unwrap();
        let cyc = k4.four_cycle_witness(vs(&[1, 2]), vs(&[3, 4])).unwrap().unwrap();
        assert_eq!(cyc.vertices, [0, 1, 2, 3]);
        assert_eq!(cyc.facets, [vs(&[1, 2]), vs(&[2, 3]), vs(&[3, 4]), vs(&[1, 4])]);
        assert!(cyc.is_valid_in(&k4));
        assert_eq!(c5().four_cycle_witness(vs(&[1, 2]), vs(&[3, 4])).unwrap(), None);

        let k5 = SimplicialComplex::simplex(5).skeleton(1).unwrap();
        for g1 in k5.facets() {
            for g2 in k5.facets() {
                if g1.intersection(*g2).is_empty() {
                    let cyc = k5.four_cycle_witness(*g1, *g2).unwrap().unwrap();
                    assert!(cyc.is_valid_in(&k5));
                }
            }
        }
        assert!(matches!(
            k4.four_cycle_witness(vs(&[1, 2]), vs(&[1, 3])),
            Err(Error::FacetPairTooClose { .. })
        ));
        assert!(matches!(
            k4.four_cycle_witness(vs(&[1, 2, 3]), vs(&[3, 4])),
            Err(Error::NotAFacet { .. })
        ));
    }

    #[test]
    fn json_round_trip() {
        let s = r#"{"n": 5, "facets": [[1,2],[2,3],[3,4],[4,5],[1,5]]}"#;
        let file: ComplexFile = serde_json::from_str(s).unwrap();
        let cx = SimplicialComplex::from_file(&file).unwrap();
        assert_eq!(cx, c5());
        let back = SimplicialComplex::from_file(&cx.to_file()).unwrap();
        assert_eq!(back, cx);
    }
}
