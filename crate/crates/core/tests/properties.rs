use proptest::prelude::*;

use cmsym::classify::{is_cm_symbolic_box, is_cm_symbolic_subcomplex};
use cmsym::feasibility::lp::{q, LinearProgram, LpOutcome};
use cmsym::feasibility::{motzkin_certificate, strict_homogeneous_feasible, IncidenceRow, LinearSystem};
use cmsym::homology::{boundary_matrix, is_cm_complex, reduced_homology_dims};
use cmsym::ideal::symbolic_rho;
use cmsym::{DegreeVector, FieldSpec, Monomial, MonomialIdeal, SimplicialComplex, VertexSet};

const FIELDS: [FieldSpec; 3] = [FieldSpec::Rationals, FieldSpec::PrimeField(2), FieldSpec::PrimeField(3)];

/// A pure complex on `n` vertices with `k`-element facets chosen by `pick`.
fn pure_complex(n: usize, k: usize, pick: u64) -> SimplicialComplex {
    let all = VertexSet::full(n).subsets_of_size(k);
    let mut facets: Vec<VertexSet> = (0..all.len()).filter(|i| pick >> i & 1 == 1).map(|i| all[i]).collect();
    if facets.is_empty() {
        facets.push(all[(pick as usize) % all.len()]);
    }
    SimplicialComplex::from_sets(n, facets)
}

fn complex_strategy(max_n: usize) -> impl Strategy<Value = SimplicialComplex> {
    (2..=max_n)
        .prop_flat_map(|n| (Just(n), 1..n, any::<u64>()))
        .prop_map(|(n, k, pick)| pure_complex(n, k, pick))
}

fn ideal_strategy() -> impl Strategy<Value = MonomialIdeal> {
    (complex_strategy(5), prop::collection::vec(1u32..=3, 10)).prop_map(|(c, e)| {
        let comps: Vec<(VertexSet, u32)> = c.facets().iter().copied().zip(e.into_iter().cycle()).collect();
        MonomialIdeal::new(c.n(), &comps).unwrap()
    })
}

fn sign(k: usize) -> i64 {
    if k.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn boundary_squares_to_zero(c in complex_strategy(6)) {
        for field in FIELDS {
            for j in 1..=c.dim() {
                let d = boundary_matrix(&c, j - 1, field).unwrap().mul(&boundary_matrix(&c, j, field).unwrap());
                prop_assert!(d.is_zero());
            }
        }
    }

    #[test]
    fn euler_characteristic_matches_betti_numbers(c in complex_strategy(6)) {
        let faces = c.faces_by_size();
        for field in FIELDS {
            let b = reduced_homology_dims(&c, field).unwrap();
            let lhs: i64 = faces.iter().enumerate().map(|(k, f)| -sign(k) * f.len() as i64).sum();
            let rhs: i64 = b.dims.iter().enumerate().map(|(k, &d)| -sign(k) * d as i64).sum();
            prop_assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn prime_field_betti_numbers_dominate_rational_ones(c in complex_strategy(6)) {
        let bq = reduced_homology_dims(&c, FieldSpec::Rationals).unwrap();
        for p in [2, 3] {
            let bp = reduced_homology_dims(&c, FieldSpec::PrimeField(p)).unwrap();
            prop_assert!(bq.dims.iter().zip(&bp.dims).all(|(a, b)| a <= b));
        }
    }

    #[test]
    fn cones_are_acyclic_and_keep_cohen_macaulayness(c in complex_strategy(5)) {
        let cone = c.join(&SimplicialComplex::simplex(1)).unwrap();
        for field in FIELDS {
            prop_assert!(reduced_homology_dims(&cone, field).unwrap().is_acyclic());
            prop_assert_eq!(
                is_cm_complex(&c, field).unwrap().cohen_macaulay,
                is_cm_complex(&cone, field).unwrap().cohen_macaulay
            );
        }
    }

    #[test]
    fn degree_complex_constructions_agree(ideal in ideal_strategy(), raw in prop::collection::vec(-2i64..4, 5), face_pick in any::<usize>()) {
        let n = ideal.n();
        let faces = ideal.complex().faces();
        let g = faces[face_pick % faces.len()];
        let a: Vec<i64> = (0..n).map(|i| if g.contains(i) { -1 - raw[i].abs() } else { raw[i].abs() }).collect();
        let a = DegreeVector::new(a);
        prop_assert_eq!(ideal.delta_a_components(&a).unwrap(), ideal.delta_a_generators(&a).unwrap());
    }

    #[test]
    fn membership_matches_generators(ideal in ideal_strategy(), u in prop::collection::vec(0u32..4, 5)) {
        let u = Monomial(u[..ideal.n()].to_vec());
        let by_components = ideal.contains_monomial(&u).unwrap().all;
        let by_generators = ideal.minimal_generators().iter().any(|g| g.divides(&u));
        prop_assert_eq!(by_components, by_generators);
    }

    #[test]
    fn symbolic_rho_matches_generators(c in complex_strategy(5), m in 1u32..=3) {
        let i = MonomialIdeal::symbolic_power(&c, m).unwrap();
        prop_assert_eq!(symbolic_rho(&c, m), i.rho());
    }

    #[test]
    fn clamped_solutions_still_solve(
        n in 1usize..=5,
        rows in prop::collection::vec((1u64..32, 1i64..=4, any::<bool>()), 1..6),
        point in prop::collection::vec(0i64..12, 5),
    ) {
        let mask = (1u64 << n) - 1;
        let mut sys = LinearSystem { n, weak: Vec::new(), strict: Vec::new() };
        for (bits, bound, weak) in rows {
            let support = VertexSet::from_bits((bits & mask).max(1));
            let row = IncidenceRow { support, bound };
            if weak { sys.weak.push(row) } else { sys.strict.push(row) }
        }
        let a = &point[..n];
        if sys.is_solution(a) {
            let m = sys.clamp_bound();
            let clamped: Vec<i64> = a.iter().map(|&x| x.min(m)).collect();
            prop_assert!(sys.is_solution(&clamped));
            prop_assert!(sys.integer_feasible().is_some());
        }
        prop_assert_eq!(sys.integer_feasible().is_some(), sys.search_box(3 * sys.clamp_bound().max(1)).is_some());
    }

    #[test]
    fn strict_infeasibility_matches_certificate_extraction(c in complex_strategy(5), pick in any::<u64>()) {
        let k = c.num_facets();
        let mask = (pick % ((1u64 << k) - 1)) + 1;
        let idx: Vec<usize> = VertexSet::from_bits(mask).iter().collect();
        let gamma = c.generated_subcomplex(&idx).unwrap();
        let out = strict_homogeneous_feasible(&gamma).unwrap();
        let cert = motzkin_certificate(&gamma);
        prop_assert_eq!(out.feasible, cert.is_err());
        if let Ok(cert) = cert {
            prop_assert!(cert.verify(&gamma));
        }
    }

    #[test]
    fn random_lps_certify_or_report_status(
        rows in prop::collection::vec(prop::collection::vec(-3i64..=3, 4), 1..4),
        rhs in prop::collection::vec(-4i64..=4, 4),
        cost in prop::collection::vec(-3i64..=3, 4),
    ) {
        let p = LinearProgram {
            a: rows.iter().map(|r| r.iter().map(|&v| q(v)).collect()).collect(),
            b: rhs[..rows.len()].iter().map(|&v| q(v)).collect(),
            c: cost.iter().map(|&v| q(v)).collect(),
        };
        if let LpOutcome::Optimal(s) = p.solve() {
            prop_assert!(p.certifies(&s));
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn box_and_subcomplex_routes_agree(c in complex_strategy(5), m in 1u32..=3) {
        let field = FieldSpec::Rationals;
        prop_assert_eq!(
            is_cm_symbolic_box(&c, m, field).unwrap().cohen_macaulay,
            is_cm_symbolic_subcomplex(&c, m, field, 20).unwrap().cohen_macaulay
        );
    }
}
