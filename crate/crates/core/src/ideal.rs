//! Monomial ideals `I = ∩ P_F^{m_F}` over the facets of a complex, their minimal generators,
//! `ρ(I)`, the degree complexes `Δ_a`, and the multigraded local-cohomology oracle.

use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::homology::{FieldSpec, HomologyCache};
use crate::vertex_set::{VertexSet, MAX_VERTICES};

/// A monomial `x^u`, `u ∈ ℕⁿ`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Monomial(pub Vec<u32>);

impl Monomial {
    pub fn one(n: usize) -> Self {
        Monomial(vec![0; n])
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| *a.max(b)).collect())
    }

    /// Total degree in the variables outside `facet`.
    pub fn degree_outside(&self, facet: VertexSet) -> u64 {
        self.0
            .iter()
            .enumerate()
            .filter(|(i, _)| !facet.contains(*i))
            .map(|(_, &e)| e as u64)
            .sum()
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, &e) in self.0.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "x{}", i + 1)?;
            } else {
                write!(f, "x{}^{}", i + 1, e)?;
            }
        }
        if first {
            f.write_str("1")?;
        }
        Ok(())
    }
}

/// A multidegree `a ∈ ℤⁿ`. Negative entries are normalized to `-1`: only the negative support
/// `G_a` matters for the degree complex.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct DegreeVector {
    entries: Vec<i64>,
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    normalized: bool,
}

impl DegreeVector {
    pub fn new(entries: Vec<i64>) -> Self {
        let normalized = entries.iter().any(|&a| a < -1);
        let entries = entries.into_iter().map(|a| a.max(-1)).collect();
        DegreeVector { entries, normalized }
    }

    pub fn zero(n: usize) -> Self {
        DegreeVector::new(vec![0; n])
    }

    pub fn from_monomial(m: &Monomial) -> Self {
        DegreeVector::new(m.0.iter().map(|&e| e as i64).collect())
    }

    /// 0/1 indicator of a vertex set.
    pub fn indicator(n: usize, v: VertexSet) -> Self {
        DegreeVector::new((0..n).map(|i| v.contains(i) as i64).collect())
    }

    pub fn entries(&self) -> &[i64] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Whether any entry below `-1` was clamped on construction.
    pub fn was_normalized(&self) -> bool {
        self.normalized
    }

    /// `G_a = {i : a_i < 0}`.
    pub fn negative_support(&self) -> VertexSet {
        VertexSet::from_indices(self.entries.iter().enumerate().filter(|(_, &a)| a < 0).map(|(i, _)| i))
    }

    /// `Σ_{i ∉ F} a_i`, over nonnegative entries only (callers ensure `G_a ⊆ F`).
    pub fn degree_outside(&self, facet: VertexSet) -> i64 {
        self.entries
            .iter()
            .enumerate()
            .filter(|(i, _)| !facet.contains(*i))
            .map(|(_, &a)| a)
            .sum()
    }
}

impl fmt::Display for DegreeVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, a) in self.entries.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{a}")?;
        }
        f.write_str(")")
    }
}

/// Per-component membership of a monomial.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Membership {
    /// Entry `k` is `x^u ∈ P_{F_k}^{m_k}` for the `k`-th canonical facet.
    pub per_component: Vec<bool>,
    pub all: bool,
}

/// JSON shape: `{"n": 4, "components": [{"facet": [1,2], "exponent": 3}]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdealFile {
    pub n: usize,
    pub components: Vec<ComponentFile>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComponentFile {
    pub facet: Vec<usize>,
    pub exponent: u32,
}

/// `I = ∩_{F ∈ F(Δ)} P_F^{m_F}` where `P_F = (x_i : i ∉ F)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MonomialIdeal {
    complex: SimplicialComplex,
    exponents: Vec<u32>,
    unmixed: bool,
}

impl MonomialIdeal {
    pub fn new(n: usize, components: &[(VertexSet, u32)]) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices { n, max: MAX_VERTICES });
        }
        if components.is_empty() {
            return Err(Error::EmptyFacetList);
        }
        let full = VertexSet::full(n);
        for (i, &(f, m)) in components.iter().enumerate() {
            if !f.is_subset(full) {
                let v = f.difference(full).iter().next().unwrap_or(0) + 1;
                return Err(Error::VertexOutOfRange { vertex: v, n });
            }
            if m == 0 {
                return Err(Error::ZeroExponent);
            }
            if f == full {
                return Err(Error::FullFacetComponent);
            }
            for &(g, _) in &components[i + 1..] {
                if f.is_subset(g) || g.is_subset(f) {
                    return Err(Error::ComparableFacets(f.to_string(), g.to_string()));
                }
            }
        }
        let complex = SimplicialComplex::from_sets(n, components.iter().map(|c| c.0));
        let exponents = complex
            .facets()
            .iter()
            .map(|f| components.iter().find(|c| c.0 == *f).map(|c| c.1).unwrap())
            .collect();
        let unmixed = complex.is_pure();
        Ok(MonomialIdeal {
            complex,
            exponents,
            unmixed,
        })
    }

    /// `I_Δ^{(m)} = ∩ P_F^m`. Requires a pure complex.
    pub fn symbolic_power(complex: &SimplicialComplex, m: u32) -> Result<Self> {
        if !complex.is_pure() {
            return Err(Error::NotPure);
        }
        if complex.is_void() {
            return Err(Error::EmptyFacetList);
        }
        let comps: Vec<_> = complex.facets().iter().map(|f| (*f, m)).collect();
        Self::new(complex.n(), &comps)
    }

    pub fn from_file(file: &IdealFile) -> Result<Self> {
        let comps = file
            .components
            .iter()
            .map(|c| Ok((VertexSet::from_labels(&c.facet, file.n)?, c.exponent)))
            .collect::<Result<Vec<_>>>()?;
        Self::new(file.n, &comps)
    }

    pub fn to_file(&self) -> IdealFile {
        IdealFile {
            n: self.n(),
            components: self
                .components()
                .map(|(f, m)| ComponentFile {
                    facet: f.labels(),
                    exponent: m,
                })
                .collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.complex.n()
    }

    /// The complex `Δ(I)` whose Stanley-Reisner ideal is `√I`.
    pub fn complex(&self) -> &SimplicialComplex {
        &self.complex
    }

    /// Exponents aligned with `complex().facets()`.
    pub fn exponents(&self) -> &[u32] {
        &self.exponents
    }

    pub fn components(&self) -> impl Iterator<Item = (VertexSet, u32)> + '_ {
        self.complex
            .facets()
            .iter()
            .copied()
            .zip(self.exponents.iter().copied())
    }

    pub fn is_unmixed(&self) -> bool {
        self.unmixed
    }

    pub fn max_exponent(&self) -> u32 {
        self.exponents.iter().copied().max().unwrap_or(0)
    }

    pub fn is_symbolic_power(&self) -> Option<u32> {
        let m = self.exponents[0];
        self.exponents.iter().all(|&e| e == m).then_some(m)
    }

    /// `x^u ∈ P_F^{m_F}` iff `Σ_{i ∉ F} u_i ≥ m_F`, per component.
    pub fn contains_monomial(&self, u: &Monomial) -> Result<Membership> {
        if u.0.len() != self.n() {
            return Err(Error::LengthMismatch {
                expected: self.n(),
                got: u.0.len(),
            });
        }
        let per_component: Vec<bool> = self
            .components()
            .map(|(f, m)| u.degree_outside(f) >= m as u64)
            .collect();
        let all = per_component.iter().all(|&b| b);
        Ok(Membership { per_component, all })
    }

    /// The minimal monomial generators, sorted by degree then exponent vector.
    pub fn minimal_generators(&self) -> Vec<Monomial> {
        let mut comps = self.components();
        let (f0, m0) = comps.next().expect("ideal has components");
        let mut gens = power_generators(self.n(), f0, m0);
        for (f, m) in comps {
            let other = power_generators(self.n(), f, m);
            let mut prod = Vec::with_capacity(gens.len() * other.len());
            for g in &gens {
                for h in &other {
                    prod.push(g.lcm(h));
                }
            }
            gens = reduce_generators(prod);
        }
        gens
    }

    /// `ρ_j(I)`: the largest exponent of `x_j` over the minimal generators.
    pub fn rho(&self) -> Vec<u32> {
        rho_of(self.n(), &self.minimal_generators())
    }

    /// `Δ_a` from the primary components: generated by `F ∖ G_a` over facets `F ⊇ G_a` with
    /// `Σ_{i ∉ F} a_i < m_F`.
    pub fn delta_a_components(&self, a: &DegreeVector) -> Result<SimplicialComplex> {
        let g = self.check_degree(a)?;
        let sets = self
            .components()
            .filter(|&(f, m)| g.is_subset(f) && a.degree_outside(f) < m as i64)
            .map(|(f, _)| f.difference(g));
        Ok(SimplicialComplex::from_sets(self.n(), sets))
    }

    /// `Δ_a` from the generators: all `F ∖ G_a` with `F ⊇ G_a` such that every minimal
    /// generator `x^b` has some `i ∉ F` with `a_i < b_i`.
    pub fn delta_a_generators(&self, a: &DegreeVector) -> Result<SimplicialComplex> {
        self.delta_a_from_generators(a, &self.minimal_generators())
    }

    pub fn delta_a_from_generators(&self, a: &DegreeVector, gens: &[Monomial]) -> Result<SimplicialComplex> {
        let g = self.check_degree(a)?;
        let rest = VertexSet::full(self.n()).difference(g);
        let ent = a.entries();
        let sets = rest.subsets().filter(|&s| {
            let f = g.union(s);
            gens.iter()
                .all(|b| (0..self.n()).any(|i| !f.contains(i) && ent[i] < b.0[i] as i64))
        });
        Ok(SimplicialComplex::from_sets(self.n(), sets))
    }

    fn check_degree(&self, a: &DegreeVector) -> Result<VertexSet> {
        if a.len() != self.n() {
            return Err(Error::LengthMismatch {
                expected: self.n(),
                got: a.len(),
            });
        }
        let g = a.negative_support();
        if !self.complex.contains_face(g) {
            return Err(Error::NegativeSupportNotFace { face: g.to_string() });
        }
        Ok(g)
    }

    /// All degrees in the local-cohomology box: `a_i = -1` on a face `G` of `Δ` and
    /// `0 ≤ a_j < ρ_j` off `G`, in lexicographic order.
    pub fn degree_box(&self) -> Vec<DegreeVector> {
        let rho = self.rho();
        let ranges: Vec<Vec<i64>> = rho
            .iter()
            .map(|&r| std::iter::once(-1).chain(0..r as i64).collect())
            .collect();
        odometer(&ranges)
            .into_iter()
            .map(DegreeVector::new)
            .filter(|a| self.complex.contains_face(a.negative_support()))
            .collect()
    }

    /// Nonzero `dim_k H^i_𝔪(S/I)_a = dim_k H̃_{i-|G_a|-1}(Δ_a)` over the degree box.
    pub fn local_cohomology(&self, field: FieldSpec) -> Result<Vec<LocalCohomologyEntry>> {
        let cache = HomologyCache::new(field);
        let degrees = self.degree_box();
        let per: Vec<Vec<LocalCohomologyEntry>> = degrees
            .par_iter()
            .map(|a| -> Result<Vec<LocalCohomologyEntry>> {
                let da = self.delta_a_components(a)?;
                if da.is_void() {
                    return Ok(Vec::new());
                }
                let g = a.negative_support().len() as isize;
                let b = cache.betti(&da)?;
                Ok(b.dims
                    .iter()
                    .enumerate()
                    .filter(|(_, &d)| d != 0)
                    .map(|(idx, &d)| LocalCohomologyEntry {
                        a: a.entries().to_vec(),
                        i: (idx as isize - 1 + g + 1) as usize,
                        dim: d,
                    })
                    .collect())
            })
            .collect::<Result<_>>()?;
        Ok(per.into_iter().flatten().collect())
    }

    /// Decides Cohen-Macaulayness by the local-cohomology formula: `H^i_𝔪(S/I)_a = 0` for all
    /// `i < dim S/I` over the whole degree box, including negative supports. Returns the
    /// lexicographically least failing degree.
    pub fn takayama_cm_oracle(&self, field: FieldSpec) -> Result<OracleVerdict> {
        if !self.unmixed {
            return Err(Error::MixedIdeal);
        }
        let cache = HomologyCache::new(field);
        let top = self.complex.dim();
        let degrees = self.degree_box();
        let witness = degrees
            .par_iter()
            .map(|a| -> Result<Option<DegreeWitness>> {
                let da = self.delta_a_components(a)?;
                if da.is_void() {
                    return Ok(None);
                }
                let g = a.negative_support().len() as isize;
                let b = cache.betti(&da)?;
                Ok(b.first_nonzero_below(top - g).map(|(j, d)| DegreeWitness {
                    a: a.clone(),
                    degree: j,
                    dim: d,
                }))
            })
            .find_map_first(|r| match r {
                Ok(None) => None,
                other => Some(other),
            })
            .transpose()?
            .flatten();
        Ok(OracleVerdict {
            cohen_macaulay: witness.is_none(),
            witness,
            degrees_checked: degrees.len(),
        })
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (facet, m)) in self.components().enumerate() {
            if i > 0 {
                f.write_str(" ∩ ")?;
            }
            let vars: Vec<String> = (0..self.n())
                .filter(|v| !facet.contains(*v))
                .map(|v| format!("x{}", v + 1))
                .collect();
            write!(f, "({})", vars.join(","))?;
            if m != 1 {
                write!(f, "^{m}")?;
            }
        }
        Ok(())
    }
}

/// `ρ` of the symbolic power `I_Δ^{(m)}` without computing generators: `m` for every vertex
/// missing from some facet, `0` for cone points.
pub fn symbolic_rho(complex: &SimplicialComplex, m: u32) -> Vec<u32> {
    (0..complex.n())
        .map(|v| {
            if complex.facets().iter().all(|f| f.contains(v)) {
                0
            } else {
                m
            }
        })
        .collect()
}

pub fn rho_of(n: usize, gens: &[Monomial]) -> Vec<u32> {
    (0..n).map(|j| gens.iter().map(|g| g.0[j]).max().unwrap_or(0)).collect()
}

/// A failing degree: `H̃_degree(Δ_a) ≠ 0` below `dim Δ_a`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreeWitness {
    pub a: DegreeVector,
    pub degree: isize,
    pub dim: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleVerdict {
    pub cohen_macaulay: bool,
    pub witness: Option<DegreeWitness>,
    pub degrees_checked: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LocalCohomologyEntry {
    pub a: Vec<i64>,
    pub i: usize,
    pub dim: usize,
}

/// All monomials of degree `m` in the variables outside `facet`.
fn power_generators(n: usize, facet: VertexSet, m: u32) -> Vec<Monomial> {
    let vars: Vec<usize> = (0..n).filter(|v| !facet.contains(*v)).collect();
    let mut out = Vec::new();
    let mut cur = vec![0u32; n];
    fn rec(vars: &[usize], left: u32, cur: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        match vars.split_first() {
            None => {
                if left == 0 {
                    out.push(Monomial(cur.clone()));
                }
            }
            Some((&v, rest)) => {
                for e in (0..=left).rev() {
                    cur[v] = e;
                    rec(rest, left - e, cur, out);
                }
                cur[v] = 0;
            }
        }
    }
    rec(&vars, m, &mut cur, &mut out);
    out
}

/// Drops every monomial divisible by another one in the list.
pub fn reduce_generators(mut gens: Vec<Monomial>) -> Vec<Monomial> {
    gens.sort_by(|a, b| a.degree().cmp(&b.degree()).then_with(|| a.cmp(b)));
    gens.dedup();
    let mut kept: Vec<Monomial> = Vec::new();
    for g in gens {
        if !kept.iter().any(|k| k.divides(&g)) {
            kept.push(g);
        }
    }
    kept
}

/// Cartesian product in lexicographic order.
pub(crate) fn odometer(ranges: &[Vec<i64>]) -> Vec<Vec<i64>> {
    if ranges.iter().any(|r| r.is_empty()) {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut idx = vec![0usize; ranges.len()];
    loop {
        out.push(idx.iter().zip(ranges).map(|(&i, r)| r[i]).collect());
        let mut k = ranges.len();
        loop {
            if k == 0 {
                return out;
            }
            k -= 1;
            idx[k] += 1;
            if idx[k] < ranges[k].len() {
                break;
            }
            idx[k] = 0;
        }
    }
}
