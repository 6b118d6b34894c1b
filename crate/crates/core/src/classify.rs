//! Cohen-Macaulay decisions for symbolic powers and unmixed monomial ideals, each backed by
//! more than one route so that the routes can be checked against each other.
//!
//! * Degree box: `Δ_a` must be Cohen-Macaulay for every `a` in `[0, ρ)`.
//! * Subcomplex: `L_Γ(I)` must be empty for every non-Cohen-Macaulay facet subcomplex `Γ`.
//! * Structural (second power only): `Δ` and every `Δ_V` with `2 ≤ |V| ≤ dim Δ + 1` must be
//!   Cohen-Macaulay.
//! * All powers: `Δ` is a matroid, cross-checked against the strict homogeneous systems.

use std::fmt;
use std::time::Instant;

use num_bigint::BigUint;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::complex::{Diameter, SimplicialComplex, DEFAULT_FACET_CAP};
use crate::error::{Error, Result};
use crate::feasibility::{build_l_system, strict_homogeneous_feasible};
use crate::homology::{FieldSpec, HomologyCache, HomologyWitness};
use crate::ideal::{odometer, symbolic_rho, DegreeVector, Monomial, MonomialIdeal};
use crate::vertex_set::VertexSet;

/// Default cap on `n` for the `n!` labelling search.
pub const DEFAULT_LABELLING_CAP: usize = 8;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Caps {
    pub facet_cap: usize,
    pub labelling_cap: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            facet_cap: DEFAULT_FACET_CAP,
            labelling_cap: DEFAULT_LABELLING_CAP,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Route {
    DegreeBox,
    Subcomplex,
    Structural,
    LocalCohomology,
    StrictSystem,
    Matroid,
}

impl fmt::Display for Route {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Route::DegreeBox => "degree-box",
            Route::Subcomplex => "subcomplex",
            Route::Structural => "structural",
            Route::LocalCohomology => "local-cohomology",
            Route::StrictSystem => "strict-system",
            Route::Matroid => "matroid",
        })
    }
}

/// Evidence that an ideal is not Cohen-Macaulay.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Witness {
    /// `point ∈ L_Γ(I)` for the non-Cohen-Macaulay subcomplex `Γ`. `m` is set when the point
    /// came from the all-powers route and refers to `I_Δ^{(m)}`.
    Lattice {
        gamma: Vec<VertexSet>,
        gamma_homology: HomologyWitness,
        point: Vec<i64>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        m: Option<u32>,
    },
    /// `Δ_a` is not Cohen-Macaulay, for `a ∈ ℕⁿ` in the degree box.
    Degree { a: Vec<i64>, homology: HomologyWitness },
    /// `Δ_V` (or `Δ` itself when `v` is absent) is not Cohen-Macaulay.
    Restriction {
        #[serde(default, skip_serializing_if = "Option::is_none")]
        v: Option<VertexSet>,
        homology: HomologyWitness,
    },
    /// `dim H^i_𝔪(S/I)_a ≠ 0` with `H̃_degree(Δ_a)` below the top.
    LocalCohomology { a: Vec<i64>, degree: isize, dim: usize },
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Witness::Lattice {
                gamma,
                gamma_homology,
                point,
                m,
            } => {
                let g: Vec<String> = gamma.iter().map(|x| x.to_string()).collect();
                write!(f, "Γ = <{}> ({gamma_homology}) with a = {point:?}", g.join(" "))?;
                if let Some(m) = m {
                    write!(f, " at m = {m}")?;
                }
                Ok(())
            }
            Witness::Degree { a, homology } => write!(f, "Δ_a for a = {a:?}: {homology}"),
            Witness::Restriction { v: Some(v), homology } => write!(f, "Δ_V for V = {v}: {homology}"),
            Witness::Restriction { v: None, homology } => write!(f, "Δ itself: {homology}"),
            Witness::LocalCohomology { a, degree, dim } => {
                write!(f, "a = {a:?}: dim H̃_{degree}(Δ_a) = {dim}")
            }
        }
    }
}

impl Witness {
    /// Re-checks the witness against `ideal` with fresh homology computations.
    pub fn verify(&self, ideal: &MonomialIdeal, field: FieldSpec) -> Result<bool> {
        let delta = ideal.complex();
        match self {
            Witness::Lattice {
                gamma,
                gamma_homology,
                point,
                m,
            } => {
                let target = match m {
                    Some(m) => MonomialIdeal::symbolic_power(delta, *m)?,
                    None => ideal.clone(),
                };
                let sub = delta.subcomplex_of_facets(gamma)?;
                if !homology_witness_holds(&sub.complex(), gamma_homology, field)? {
                    return Ok(false);
                }
                if point.iter().any(|&x| x < 0) {
                    return Ok(false);
                }
                let mono = Monomial(point.iter().map(|&x| x as u32).collect());
                let mem = target.contains_monomial(&mono)?;
                Ok(mem
                    .per_component
                    .iter()
                    .enumerate()
                    .all(|(k, &inside)| inside != sub.contains_index(k)))
            }
            Witness::Degree { a, homology } => {
                let da = ideal.delta_a_components(&DegreeVector::new(a.clone()))?;
                Ok(!da.is_void() && homology_witness_holds(&da, homology, field)?)
            }
            Witness::Restriction { v, homology } => {
                let c = match v {
                    Some(v) => delta.restrict(*v)?,
                    None => delta.clone(),
                };
                Ok(!c.is_void() && homology_witness_holds(&c, homology, field)?)
            }
            Witness::LocalCohomology { a, degree, dim } => {
                let a = DegreeVector::new(a.clone());
                let da = ideal.delta_a_components(&a)?;
                if da.is_void() {
                    return Ok(false);
                }
                let bound = delta.dim() - a.negative_support().len() as isize;
                let b = HomologyCache::new(field).betti(&da)?;
                Ok(*degree < bound && *dim > 0 && b.get(*degree) == *dim)
            }
        }
    }
}

/// Whether `H̃_degree(lk face) = dim ≠ 0` with `degree < dim lk face`.
pub fn homology_witness_holds(c: &SimplicialComplex, w: &HomologyWitness, field: FieldSpec) -> Result<bool> {
    if !c.contains_face(w.face) {
        return Ok(false);
    }
    let link = c.link(w.face)?;
    if w.degree >= link.dim() || w.dim == 0 {
        return Ok(false);
    }
    Ok(HomologyCache::new(field).betti(&link)?.get(w.degree) == w.dim)
}

/// Verdict of one route.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RouteCheck {
    pub route: Route,
    pub cohen_macaulay: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CmReport {
    pub subject: String,
    pub field: FieldSpec,
    /// The symbolic power checked; absent for all powers or a general ideal.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub m: Option<u32>,
    pub cohen_macaulay: bool,
    pub route: Route,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
    /// Further routes run on the same input, all agreeing with the primary verdict.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub cross_checks: Vec<RouteCheck>,
    pub elapsed_us: u64,
}

impl CmReport {
    fn new(subject: String, field: FieldSpec, m: Option<u32>, check: RouteCheck, start: Instant) -> Self {
        CmReport {
            subject,
            field,
            m,
            cohen_macaulay: check.cohen_macaulay,
            route: check.route,
            witness: check.witness,
            cross_checks: Vec::new(),
            elapsed_us: start.elapsed().as_micros() as u64,
        }
    }

    pub fn as_check(&self) -> RouteCheck {
        RouteCheck {
            route: self.route,
            cohen_macaulay: self.cohen_macaulay,
            witness: self.witness.clone(),
        }
    }

    /// The witness reported by `route`, whether primary or a cross-check.
    pub fn witness_for(&self, route: Route) -> Option<&Witness> {
        if self.route == route {
            return self.witness.as_ref();
        }
        self.cross_checks
            .iter()
            .find(|c| c.route == route)
            .and_then(|c| c.witness.as_ref())
    }
}

fn require_pure(delta: &SimplicialComplex) -> Result<()> {
    if delta.is_void() {
        return Err(Error::EmptyFacetList);
    }
    if !delta.is_pure() {
        return Err(Error::NotPure);
    }
    Ok(())
}

/// Box route for `I_Δ^{(m)}`: every nonvoid `Δ_a`, `a ∈ ∏ [0, max(ρ_j, 1))`, must be
/// Cohen-Macaulay. Cone points have `ρ_j = 0` and only contribute `a_j = 0`.
pub fn is_cm_symbolic_box(delta: &SimplicialComplex, m: u32, field: FieldSpec) -> Result<CmReport> {
    let start = Instant::now();
    require_pure(delta)?;
    let ideal = MonomialIdeal::symbolic_power(delta, m)?;
    let check = degree_box_route(&ideal, &symbolic_rho(delta, m), field)?;
    Ok(CmReport::new(delta.to_string(), field, Some(m), check, start))
}

fn degree_box_route(ideal: &MonomialIdeal, rho: &[u32], field: FieldSpec) -> Result<RouteCheck> {
    let ranges: Vec<Vec<i64>> = rho.iter().map(|&r| (0..r.max(1) as i64).collect()).collect();
    let degrees = odometer(&ranges);
    let cache = HomologyCache::new(field);
    let witness = degrees
        .par_iter()
        .map(|a| -> Result<Option<Witness>> {
            let da = ideal.delta_a_components(&DegreeVector::new(a.clone()))?;
            if da.is_void() {
                return Ok(None);
            }
            Ok(cache
                .cm_witness(&da)?
                .map(|homology| Witness::Degree { a: a.clone(), homology }))
        })
        .find_map_first(transpose_hit)
        .transpose()?;
    Ok(RouteCheck {
        route: Route::DegreeBox,
        cohen_macaulay: witness.is_none(),
        witness,
    })
}

fn transpose_hit<T>(r: Result<Option<T>>) -> Option<Result<T>> {
    match r {
        Ok(None) => None,
        Ok(Some(t)) => Some(Ok(t)),
        Err(e) => Some(Err(e)),
    }
}

/// Subcomplex route for `I_Δ^{(m)}`.
pub fn is_cm_symbolic_subcomplex(
    delta: &SimplicialComplex,
    m: u32,
    field: FieldSpec,
    facet_cap: usize,
) -> Result<CmReport> {
    let start = Instant::now();
    require_pure(delta)?;
    let ideal = MonomialIdeal::symbolic_power(delta, m)?;
    let check = subcomplex_route(&ideal, field, facet_cap)?;
    Ok(CmReport::new(delta.to_string(), field, Some(m), check, start))
}

/// Scans facet subsets `Γ` in increasing mask order; the first non-Cohen-Macaulay `Γ` with a
/// lattice point in `L_Γ(I)` is the witness.
pub fn subcomplex_route(ideal: &MonomialIdeal, field: FieldSpec, facet_cap: usize) -> Result<RouteCheck> {
    if !ideal.is_unmixed() {
        return Err(Error::MixedIdeal);
    }
    let delta = ideal.complex();
    let masks: Vec<u64> = delta.facet_subsets(facet_cap)?.map(|g| g.mask()).collect();
    let cache = HomologyCache::new(field);
    let witness = masks
        .par_iter()
        .map(|&mask| -> Result<Option<Witness>> {
            let gamma = delta.generated_subcomplex(&VertexSet::from_bits(mask).iter().collect::<Vec<_>>())?;
            let Some(hw) = cache.cm_witness(&gamma.complex())? else {
                return Ok(None);
            };
            let sys = build_l_system(&gamma, ideal.exponents())?;
            Ok(sys.integer_feasible().map(|point| Witness::Lattice {
                gamma: gamma.facets(),
                gamma_homology: hw,
                point,
                m: None,
            }))
        })
        .find_map_first(transpose_hit)
        .transpose()?;
    Ok(RouteCheck {
        route: Route::Subcomplex,
        cohen_macaulay: witness.is_none(),
        witness,
    })
}

/// Second-power route: `Δ` and each nonvoid `Δ_V`, `V ⊆ vertices(Δ)` with
/// `2 ≤ |V| ≤ dim Δ + 1`, must be Cohen-Macaulay. `V` runs by size, then lexicographically.
pub fn is_cm_second_structural(delta: &SimplicialComplex, field: FieldSpec) -> Result<CmReport> {
    let start = Instant::now();
    require_pure(delta)?;
    let cache = HomologyCache::new(field);
    let check = |v: Option<VertexSet>| -> Result<Option<Witness>> {
        let c = match v {
            Some(v) => delta.restrict(v)?,
            None => delta.clone(),
        };
        if c.is_void() {
            return Ok(None);
        }
        Ok(cache
            .cm_witness(&c)?
            .map(|homology| Witness::Restriction { v, homology }))
    };
    let mut witness = check(None)?;
    if witness.is_none() {
        let verts = delta.vertex_set();
        let top = (delta.dim() + 1).max(0) as usize;
        let vs: Vec<VertexSet> = (2..=top).flat_map(|k| verts.subsets_of_size(k)).collect();
        witness = vs
            .par_iter()
            .map(|&v| check(Some(v)))
            .find_map_first(transpose_hit)
            .transpose()?;
    }
    let rc = RouteCheck {
        route: Route::Structural,
        cohen_macaulay: witness.is_none(),
        witness,
    };
    Ok(CmReport::new(delta.to_string(), field, Some(2), rc, start))
}

/// Every failing `V` of the second-power route, in the same order.
pub fn failing_restrictions(delta: &SimplicialComplex, field: FieldSpec) -> Result<Vec<VertexSet>> {
    require_pure(delta)?;
    let cache = HomologyCache::new(field);
    let top = (delta.dim() + 1).max(0) as usize;
    let mut out = Vec::new();
    for k in 2..=top {
        for v in delta.vertex_set().subsets_of_size(k) {
            let c = delta.restrict(v)?;
            if !c.is_void() && !cache.is_cm(&c)? {
                out.push(v);
            }
        }
    }
    Ok(out)
}

/// Runs the box route, plus the subcomplex route within the facet cap and the structural
/// route at `m = 2`. Any disagreement is an error.
pub fn check_symbolic(delta: &SimplicialComplex, m: u32, field: FieldSpec, caps: Caps) -> Result<CmReport> {
    let start = Instant::now();
    let mut report = is_cm_symbolic_box(delta, m, field)?;
    if delta.num_facets() <= caps.facet_cap {
        report
            .cross_checks
            .push(is_cm_symbolic_subcomplex(delta, m, field, caps.facet_cap)?.as_check());
    }
    if m == 2 {
        report
            .cross_checks
            .push(is_cm_second_structural(delta, field)?.as_check());
    }
    ensure_agreement(&report)?;
    report.elapsed_us = start.elapsed().as_micros() as u64;
    Ok(report)
}

fn ensure_agreement(report: &CmReport) -> Result<()> {
    for c in &report.cross_checks {
        if c.cohen_macaulay != report.cohen_macaulay {
            return Err(Error::RouteDisagreement(format!(
                "{} says {}, {} says {} on {}",
                report.route, report.cohen_macaulay, c.route, c.cohen_macaulay, report.subject
            )));
        }
    }
    Ok(())
}

/// Unmixed ideal check: the local-cohomology oracle over the full degree box (including
/// negative supports), cross-checked by the subcomplex route with per-component exponents.
pub fn check_ideal(ideal: &MonomialIdeal, field: FieldSpec, facet_cap: usize) -> Result<CmReport> {
    let start = Instant::now();
    let oracle = ideal.takayama_cm_oracle(field)?;
    let primary = RouteCheck {
        route: Route::LocalCohomology,
        cohen_macaulay: oracle.cohen_macaulay,
        witness: oracle.witness.map(|w| Witness::LocalCohomology {
            a: w.a.entries().to_vec(),
            degree: w.degree,
            dim: w.dim,
        }),
    };
    let mut report = CmReport::new(ideal.to_string(), field, None, primary, start);
    report.cross_checks.push(subcomplex_route(ideal, field, facet_cap)?);
    ensure_agreement(&report)?;
    report.elapsed_us = start.elapsed().as_micros() as u64;
    Ok(report)
}

/// `diam(Δ) ≤ 2`, necessary for `I_Δ^{(2)}` to be Cohen-Macaulay when `dim Δ ≥ 1`.
pub fn diameter_necessary(delta: &SimplicialComplex) -> bool {
    matches!(delta.one_skeleton_diameter(), Diameter::Finite(d) if d <= 2)
}

/// A failing basis exchange: no `y ∈ G∖F` makes `(F∖{x}) ∪ {y}` a facet.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExchangeViolation {
    pub f: VertexSet,
    pub g: VertexSet,
    /// 1-based vertex label.
    pub x: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatroidVerdict {
    pub matroid: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub violation: Option<ExchangeViolation>,
}

/// Basis exchange over ordered facet pairs in canonical order, `x` ascending.
pub fn is_matroid(delta: &SimplicialComplex) -> Result<MatroidVerdict> {
    require_pure(delta)?;
    let facets = delta.facets();
    for &f in facets {
        for &g in facets {
            if f == g {
                continue;
            }
            for x in f.difference(g).iter() {
                let base = f.without(x);
                let ok = g
                    .difference(f)
                    .iter()
                    .any(|y| delta.facet_index(base.with(y)).is_some());
                if !ok {
                    return Ok(MatroidVerdict {
                        matroid: false,
                        violation: Some(ExchangeViolation { f, g, x: x + 1 }),
                    });
                }
            }
        }
    }
    Ok(MatroidVerdict {
        matroid: true,
        violation: None,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AllPowersReport {
    pub report: CmReport,
    pub matroid: MatroidVerdict,
    /// Number of non-Cohen-Macaulay facet subsets examined by the strict-system route.
    pub non_cm_subsets: usize,
}

/// Whether `I_Δ^{(m)}` is Cohen-Macaulay for every `m ≥ 1`, by the matroid test and by the
/// strict homogeneous system of every non-Cohen-Macaulay facet subset. `Γ = Δ` has no pairs
/// and counts as feasible, which encodes that `Δ` itself must be Cohen-Macaulay.
pub fn all_symbolic_cm(delta: &SimplicialComplex, field: FieldSpec, facet_cap: usize) -> Result<AllPowersReport> {
    let start = Instant::now();
    let matroid = is_matroid(delta)?;
    let non_cm = non_cm_facet_subsets(delta, field, facet_cap)?;
    let witness = non_cm
        .par_iter()
        .map(|(mask, hw)| -> Result<Option<Witness>> {
            let gamma = delta.generated_subcomplex(&VertexSet::from_bits(*mask).iter().collect::<Vec<_>>())?;
            let out = strict_homogeneous_feasible(&gamma)?;
            if !out.feasible {
                return Ok(None);
            }
            if gamma.is_full() {
                return Ok(Some(Witness::Restriction { v: None, homology: *hw }));
            }
            let (point, m) = out
                .lattice_witness(delta.n())
                .ok_or_else(|| Error::InvalidInput("feasible direction without a lattice point".into()))?;
            Ok(Some(Witness::Lattice {
                gamma: gamma.facets(),
                gamma_homology: *hw,
                point,
                m: Some(m),
            }))
        })
        .find_map_first(transpose_hit)
        .transpose()?;
    let strict = RouteCheck {
        route: Route::StrictSystem,
        cohen_macaulay: witness.is_none(),
        witness,
    };
    let mut report = CmReport::new(delta.to_string(), field, None, strict, start);
    report.cross_checks.push(RouteCheck {
        route: Route::Matroid,
        cohen_macaulay: matroid.matroid,
        witness: None,
    });
    ensure_agreement(&report)?;
    Ok(AllPowersReport {
        report,
        matroid,
        non_cm_subsets: non_cm.len(),
    })
}

/// Masks of the facet subsets whose generated complex is not Cohen-Macaulay, with witnesses.
pub fn non_cm_facet_subsets(
    delta: &SimplicialComplex,
    field: FieldSpec,
    facet_cap: usize,
) -> Result<Vec<(u64, HomologyWitness)>> {
    require_pure(delta)?;
    let cache = HomologyCache::new(field);
    let masks: Vec<u64> = delta.facet_subsets(facet_cap)?.map(|g| g.mask()).collect();
    let hits: Vec<Option<(u64, HomologyWitness)>> = masks
        .par_iter()
        .map(|&mask| -> Result<_> {
            let c =
                SimplicialComplex::from_sets(delta.n(), VertexSet::from_bits(mask).iter().map(|k| delta.facets()[k]));
            Ok(cache.cm_witness(&c)?.map(|w| (mask, w)))
        })
        .collect::<Result<_>>()?;
    Ok(hits.into_iter().flatten().collect())
}

/// A vertex labelling: vertex `v` (0-based) carries label `labels[v]` in `1..=n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Labelling(Vec<usize>);

impl Labelling {
    pub fn new(labels: Vec<usize>) -> Result<Self> {
        let n = labels.len();
        let mut seen = vec![false; n];
        for &l in &labels {
            if l == 0 || l > n || seen[l - 1] {
                return Err(Error::InvalidLabelling(format!(
                    "{labels:?} is not a permutation of 1..={n}"
                )));
            }
            seen[l - 1] = true;
        }
        Ok(Labelling(labels))
    }

    pub fn identity(n: usize) -> Self {
        Labelling((1..=n).collect())
    }

    pub fn reversed(n: usize) -> Self {
        Labelling((1..=n).rev().collect())
    }

    pub fn labels(&self) -> &[usize] {
        &self.0
    }

    pub fn label(&self, v: usize) -> usize {
        self.0[v]
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Next permutation in lexicographic order.
    fn advance(&mut self) -> bool {
        let v = &mut self.0;
        let n = v.len();
        if n < 2 {
            return false;
        }
        let Some(i) = (0..n - 1).rev().find(|&i| v[i] < v[i + 1]) else {
            return false;
        };
        let j = (i + 1..n).rev().find(|&j| v[j] > v[i]).unwrap();
        v.swap(i, j);
        v[i + 1..].reverse();
        true
    }
}

impl fmt::Display for Labelling {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .0
            .iter()
            .enumerate()
            .map(|(v, l)| format!("{}->{l}", v + 1))
            .collect();
        f.write_str(&parts.join(" "))
    }
}

fn check_labelling(delta: &SimplicialComplex, l: &Labelling) -> Result<()> {
    if l.len() != delta.n() {
        return Err(Error::LengthMismatch {
            expected: delta.n(),
            got: l.len(),
        });
    }
    Ok(())
}

/// For all facets `G1 ≠ G2`, `i ∈ G1∖G2`, `j ∈ G2∖G1` with `i < j` under the labelling,
/// some `j' ∈ G1∖G2` makes `(G2∖{j}) ∪ {j'}` a facet.
pub fn is_tight(delta: &SimplicialComplex, l: &Labelling) -> Result<bool> {
    require_pure(delta)?;
    check_labelling(delta, l)?;
    Ok(tight_unchecked(delta, l))
}

fn tight_unchecked(delta: &SimplicialComplex, l: &Labelling) -> bool {
    let facets = delta.facets();
    facets.iter().all(|&g1| {
        facets.iter().all(|&g2| {
            if g1 == g2 {
                return true;
            }
            let left = g1.difference(g2);
            let right = g2.difference(g1);
            left.iter().all(|i| {
                right.iter().filter(|&j| l.label(i) < l.label(j)).all(|j| {
                    let base = g2.without(j);
                    left.iter().any(|jp| delta.facet_index(base.with(jp)).is_some())
                })
            })
        })
    })
}

/// First labelling in lexicographic order under which `Δ` is tight.
pub fn find_tight_labelling(delta: &SimplicialComplex, labelling_cap: usize) -> Result<Option<Labelling>> {
    require_pure(delta)?;
    if delta.n() > labelling_cap {
        return Err(Error::LabellingCapExceeded {
            n: delta.n(),
            cap: labelling_cap,
        });
    }
    let mut l = Labelling::identity(delta.n());
    loop {
        if tight_unchecked(delta, &l) {
            return Ok(Some(l));
        }
        if !l.advance() {
            return Ok(None);
        }
    }
}

/// For every face `F`, `i ∈ F` and vertex `j` with a smaller label, `(F∖{i}) ∪ {j} ∈ Δ`.
pub fn is_shifted(delta: &SimplicialComplex, l: &Labelling) -> Result<bool> {
    check_labelling(delta, l)?;
    let n = delta.n();
    for face in delta.faces() {
        for i in face.iter() {
            for j in (0..n).filter(|&j| l.label(j) < l.label(i) && !face.contains(j)) {
                if !delta.contains_face(face.without(i).with(j)) {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

/// For a flag complex, all symbolic powers are Cohen-Macaulay iff every connected component
/// of the graph of minimal nonfaces is a complete graph.
pub fn flag_all_symbolic(delta: &SimplicialComplex) -> Result<bool> {
    if !delta.is_flag() {
        return Err(Error::NotFlag);
    }
    let n = delta.n();
    let mut adj = vec![VertexSet::EMPTY; n];
    for e in delta.minimal_nonfaces() {
        let v: Vec<usize> = e.iter().collect();
        adj[v[0]] = adj[v[0]].with(v[1]);
        adj[v[1]] = adj[v[1]].with(v[0]);
    }
    let mut seen = VertexSet::EMPTY;
    for s in 0..n {
        if seen.contains(s) {
            continue;
        }
        let mut comp = VertexSet::singleton(s);
        let mut frontier = vec![s];
        while let Some(u) = frontier.pop() {
            for w in adj[u].iter() {
                if !comp.contains(w) {
                    comp = comp.with(w);
                    frontier.push(w);
                }
            }
        }
        seen = seen.union(comp);
        if comp.iter().any(|u| adj[u].with(u) != comp) {
            return Ok(false);
        }
    }
    Ok(true)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Thresholds {
    /// `(m−1)² + 1`: Cohen-Macaulayness at this power implies it at `m`.
    pub t_down: u64,
    /// `(n−d)^{n+1}`: Cohen-Macaulayness at this power implies it at every power.
    pub t_all: BigUint,
}

pub fn preservation_thresholds(m: u32, n: usize, d: usize) -> Result<Thresholds> {
    if m == 0 {
        return Err(Error::ZeroExponent);
    }
    if d >= n {
        return Err(Error::DimensionOutOfRange {
            requested: d as isize,
            min: 0,
            max: n as isize - 1,
        });
    }
    let k = (m - 1) as u64;
    Ok(Thresholds {
        t_down: k * k + 1,
        t_all: BigUint::from(n - d).pow(n as u32 + 1),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    const Q: FieldSpec = FieldSpec::Rationals;
    const F2: FieldSpec = FieldSpec::PrimeField(2);

    fn cx(n: usize, f: &[&[usize]]) -> SimplicialComplex {
        SimplicialComplex::new(n, &f.iter().map(|x| x.to_vec()).collect::<Vec<_>>()).unwrap()
    }

    fn vs(l: &[usize]) -> VertexSet {
        VertexSet::from_labels(l, 64).unwrap()
    }

    fn c5() -> SimplicialComplex {
        cx(5, &[&[1, 2], &[2, 3], &[3, 4], &[4, 5], &[5, 1]])
    }

    fn path3() -> SimplicialComplex {
        cx(4, &[&[1, 2], &[2, 3], &[3, 4]])
    }

    fn flap() -> SimplicialComplex {
        cx(5, &[&[1, 2, 3], &[1, 2, 4], &[1, 3, 4], &[2, 3, 4], &[3, 4, 5]])
    }

    fn k4() -> SimplicialComplex {
        SimplicialComplex::simplex(4).skeleton(1).unwrap()
    }

    fn rp2() -> SimplicialComplex {
        cx(
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
    fn five_cycle_powers() {
        for field in [Q, F2] {
            let r2 = check_symbolic(&c5(), 2, field, Caps::default()).unwrap();
            assert!(r2.cohen_macaulay);
            assert_eq!(r2.cross_checks.len(), 2);
            let r3 = check_symbolic(&c5(), 3, field, Caps::default()).unwrap();
            assert!(!r3.cohen_macaulay);
            let ideal = MonomialIdeal::symbolic_power(&c5(), 3).unwrap();
            assert!(r3.witness.as_ref().unwrap().verify(&ideal, field).unwrap());
            let sub = r3.witness_for(Route::Subcomplex).unwrap();
            assert!(sub.verify(&ideal, field).unwrap());
        }
    }

    #[test]
    fn path_second_power_fails_on_endpoints() {
        let r = is_cm_symbolic_box(&path3(), 2, Q).unwrap();
        assert!(!r.cohen_macaulay);
        let Some(Witness::Degree { a, homology }) = &r.witness else {
            panic!("expected a degree witness")
        };
        assert_eq!(a, &vec![1, 0, 0, 1]);
        assert_eq!(homology.face, VertexSet::EMPTY);
        assert_eq!(homology.degree, 0);
        assert!(!diameter_necessary(&path3()));
        assert!(!is_cm_second_structural(&path3(), Q).unwrap().cohen_macaulay);
    }

    #[test]
    fn flap_second_power_and_higher() {
        assert!(check_symbolic(&flap(), 2, Q, Caps::default()).unwrap().cohen_macaulay);
        for m in 3..=5 {
            let r = is_cm_symbolic_subcomplex(&flap(), m, Q, 20).unwrap();
            assert!(!r.cohen_macaulay);
            let Some(Witness::Lattice { gamma, point, .. }) = &r.witness else {
                panic!("expected a lattice witness")
            };
            assert_eq!(gamma, &vec![vs(&[1, 2, 3]), vs(&[3, 4, 5])]);
            assert_eq!(point, &vec![1, 1, 1, 0, m as i64 - 1]);
            let ideal = MonomialIdeal::symbolic_power(&flap(), m).unwrap();
            assert!(r.witness.unwrap().verify(&ideal, Q).unwrap());
            assert!(!is_cm_symbolic_box(&flap(), m, Q).unwrap().cohen_macaulay);
        }
    }

    #[test]
    fn projective_plane() {
        let d = rp2();
        assert_eq!(d.one_skeleton_diameter(), Diameter::Finite(1));
        for field in [Q, F2] {
            let r = is_cm_second_structural(&d, field).unwrap();
            assert!(!r.cohen_macaulay);
            let bad = failing_restrictions(&d, field).unwrap();
            assert!(bad.contains(&vs(&[4, 5, 6])), "{bad:?}");
            let w = Witness::Restriction {
                v: Some(vs(&[4, 5, 6])),
                homology: crate::homology::is_cm_complex(&d.restrict(vs(&[4, 5, 6])).unwrap(), field)
                    .unwrap()
                    .witness
                    .unwrap(),
            };
            let ideal = MonomialIdeal::symbolic_power(&d, 2).unwrap();
            assert!(w.verify(&ideal, field).unwrap());
        }
    }

    #[test]
    fn matroid_checks() {
        assert!(is_matroid(&k4()).unwrap().matroid);
        let v = is_matroid(&c5()).unwrap();
        assert_eq!(
            v.violation,
            Some(ExchangeViolation {
                f: vs(&[1, 2]),
                g: vs(&[3, 4]),
                x: 2
            })
        );
        for n in 2..=6 {
            for d in 0..(n as isize - 1) {
                let s = SimplicialComplex::simplex(n).skeleton(d).unwrap();
                assert!(is_matroid(&s).unwrap().matroid, "n={n} d={d}");
            }
        }
    }

    #[test]
    fn all_powers() {
        for field in [Q, F2] {
            let c = all_symbolic_cm(&c5(), field, 20).unwrap();
            assert!(!c.report.cohen_macaulay);
            let ideal = MonomialIdeal::symbolic_power(&c5(), 1).unwrap();
            assert!(c.report.witness.unwrap().verify(&ideal, field).unwrap());
            assert!(all_symbolic_cm(&k4(), field, 20).unwrap().report.cohen_macaulay);
            let f = all_symbolic_cm(&flap(), field, 20).unwrap();
            assert!(!f.report.cohen_macaulay);
        }
        for m in 1..=5 {
            assert!(check_symbolic(&k4(), m, Q, Caps::default()).unwrap().cohen_macaulay);
        }
    }

    #[test]
    fn tightness() {
        let f = flap();
        // Under the literal definition the identity labelling fails at G1={1,2,3},
        // G2={3,4,5}, i=1, j=4; the reversed labelling works.
        assert!(!is_tight(&f, &Labelling::identity(5)).unwrap());
        assert!(is_tight(&f, &Labelling::reversed(5)).unwrap());
        assert!(find_tight_labelling(&f, 8).unwrap().is_some());
        assert_eq!(find_tight_labelling(&c5(), 8).unwrap(), None);
        assert!(is_tight(&k4(), &Labelling::new(vec![3, 1, 4, 2]).unwrap()).unwrap());
        assert_eq!(
            find_tight_labelling(&c5(), 4),
            Err(Error::LabellingCapExceeded { n: 5, cap: 4 })
        );
    }

    #[test]
    fn shifted_complexes() {
        let s = cx(4, &[&[1, 2], &[1, 3], &[1, 4], &[2, 3]]);
        assert!(is_shifted(&s, &Labelling::identity(4)).unwrap());
        assert!(is_tight(&s, &Labelling::identity(4)).unwrap());
        assert!(!is_shifted(&c5(), &Labelling::identity(5)).unwrap());
        assert!(is_shifted(&SimplicialComplex::simplex(4), &Labelling::identity(4)).unwrap());
    }

    #[test]
    fn labellings() {
        assert!(Labelling::new(vec![1, 1]).is_err());
        assert!(Labelling::new(vec![0, 1]).is_err());
        let mut l = Labelling::identity(3);
        let mut count = 1;
        while l.advance() {
            count += 1;
        }
        assert_eq!(count, 6);
        assert_eq!(l, Labelling::reversed(3));
    }

    #[test]
    fn flag_criterion() {
        assert!(!flag_all_symbolic(&c5()).unwrap());
        // nonfaces {1,2} and {3,4}: the join of two pairs of points
        let sq = cx(4, &[&[1, 3], &[1, 4], &[2, 3], &[2, 4]]);
        assert!(flag_all_symbolic(&sq).unwrap());
        assert!(flag_all_symbolic(&SimplicialComplex::simplex(3)).unwrap());
        let hollow = SimplicialComplex::simplex(3).skeleton(1).unwrap();
        assert_eq!(flag_all_symbolic(&hollow), Err(Error::NotFlag));
    }

    #[test]
    fn thresholds() {
        assert_eq!(preservation_thresholds(2, 5, 2).unwrap().t_down, 2);
        assert_eq!(preservation_thresholds(3, 5, 2).unwrap().t_down, 5);
        assert_eq!(preservation_thresholds(2, 5, 2).unwrap().t_all, BigUint::from(729u32));
        assert!(preservation_thresholds(0, 5, 2).is_err());
        assert!(preservation_thresholds(2, 5, 5).is_err());
    }

    #[test]
    fn ideal_check_on_tetrahedral_exponents() {
        let k = k4();
        let ones = MonomialIdeal::new(4, &k.facets().iter().map(|f| (*f, 1)).collect::<Vec<_>>()).unwrap();
        assert!(check_ideal(&ones, Q, 20).unwrap().cohen_macaulay);
        let m = [2, 1, 1, 1, 1, 2];
        let mixed = MonomialIdeal::new(4, &k.facets().iter().zip(m).map(|(f, e)| (*f, e)).collect::<Vec<_>>()).unwrap();
        let r = check_ideal(&mixed, Q, 20).unwrap();
        assert_eq!(r.cross_checks[0].cohen_macaulay, r.cohen_macaulay);
        let disc = MonomialIdeal::new(4, &[(vs(&[1, 2]), 2), (vs(&[3, 4]), 1)]).unwrap();
        let r = check_ideal(&disc, Q, 20).unwrap();
        assert!(!r.cohen_macaulay);
        assert!(r.witness.unwrap().verify(&disc, Q).unwrap());
    }

    #[test]
    fn report_json_round_trip() {
        let r = check_symbolic(&c5(), 3, Q, Caps::default()).unwrap();
        let s = serde_json::to_string(&r).unwrap();
        let back: CmReport = serde_json::from_str(&s).unwrap();
        assert_eq!(back, r);
    }
}
