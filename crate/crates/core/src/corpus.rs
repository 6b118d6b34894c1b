//! Named example complexes and ideals.

use crate::complex::SimplicialComplex;
use crate::ideal::MonomialIdeal;
use crate::vertex_set::VertexSet;

fn build(n: usize, facets: &[&[usize]]) -> SimplicialComplex {
    let f: Vec<Vec<usize>> = facets.iter().map(|x| x.to_vec()).collect();
    SimplicialComplex::new(n, &f).expect("corpus complexes are well formed")
}

/// The 5-cycle.
pub fn five_cycle() -> SimplicialComplex {
    build(5, &[&[1, 2], &[2, 3], &[3, 4], &[4, 5], &[1, 5]])
}

/// The path with `r` edges on vertices `1..=r+1`.
pub fn path(r: usize) -> SimplicialComplex {
    let f: Vec<Vec<usize>> = (1..=r).map(|i| vec![i, i + 1]).collect();
    SimplicialComplex::new(r + 1, &f).expect("path")
}

/// The complete graph on four vertices.
pub fn k4() -> SimplicialComplex {
    simplex_skeleton(4, 1)
}

/// The `d`-skeleton of the simplex on `n` vertices.
pub fn simplex_skeleton(n: usize, d: isize) -> SimplicialComplex {
    SimplicialComplex::simplex(n).skeleton(d).expect("skeleton in range")
}

/// A six-vertex triangulation of the real projective plane.
pub fn projective_plane() -> SimplicialComplex {
    build(
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

/// The boundary of the tetrahedron on `1..4` with the extra triangle `{3,4,5}`: all
/// `(n-2)`-subsets of `[n-1]` plus `{3..n}` for `n = 5`. Tight, not a matroid.
pub fn tetrahedron_with_flap() -> SimplicialComplex {
    build(5, &[&[1, 2, 3], &[1, 2, 4], &[1, 3, 4], &[2, 3, 4], &[3, 4, 5]])
}

/// `∩ P_F^{m_F}` over the edges of `K4` in canonical order `12, 13, 14, 23, 24, 34`.
pub fn tetrahedral_ideal(m: [u32; 6]) -> MonomialIdeal {
    let comps: Vec<(VertexSet, u32)> = k4().facets().iter().copied().zip(m).collect();
    MonomialIdeal::new(4, &comps).expect("tetrahedral exponents are positive")
}

/// The complexes shown by the demo, with display names.
pub fn demo_complexes() -> Vec<(&'static str, SimplicialComplex)> {
    vec![
        ("five-cycle", five_cycle()),
        ("path-3", path(3)),
        ("K4", k4()),
        ("projective-plane", projective_plane()),
        ("tetrahedron+flap", tetrahedron_with_flap()),
        ("skeleton(5,1)", simplex_skeleton(5, 1)),
        ("skeleton(5,2)", simplex_skeleton(5, 2)),
        ("skeleton(6,3)", simplex_skeleton(6, 3)),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shapes() {
        assert_eq!(five_cycle().num_facets(), 5);
        assert_eq!(path(3).facets().len(), 3);
        assert_eq!(k4().num_facets(), 6);
        assert_eq!(projective_plane().num_facets(), 10);
        assert_eq!(tetrahedral_ideal([1, 2, 3, 1, 2, 3]).exponents(), &[1, 2, 3, 1, 2, 3]);
        assert!(demo_complexes().iter().all(|(_, c)| c.is_pure()));
    }
}
