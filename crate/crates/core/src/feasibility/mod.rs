//! Feasibility of the lattice systems `L_Γ(I)` and of the homogeneous strict system over all
//! powers, with incidence certificates for the infeasible case.
//!
//! For a facet subset `Γ` and exponents `m_F`, `L_Γ(I)` is the set of `a ∈ ℕⁿ` with
//! `Σ_{i∉F} a_i ≥ m_F` for facets `F ∉ Γ` and `Σ_{i∉G} a_i < m_G` for `G ∈ Γ`.

pub mod lp;

use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::complex::FacetSubset;
use crate::error::{Error, Result};
use crate::vertex_set::VertexSet;
use lp::{q, LinearProgram, LpOutcome, LpSolution, Q};

/// `Σ_{i ∈ support} a_i` compared against `bound`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct IncidenceRow {
    pub support: VertexSet,
    pub bound: i64,
}

impl IncidenceRow {
    pub fn value(&self, a: &[i64]) -> i64 {
        self.support.iter().map(|i| a[i]).sum()
    }
}

/// Weak rows `Σ ≥ bound`, strict rows `Σ < bound`, all unknowns nonnegative.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct LinearSystem {
    pub n: usize,
    pub weak: Vec<IncidenceRow>,
    pub strict: Vec<IncidenceRow>,
}

impl LinearSystem {
    pub fn is_solution(&self, a: &[i64]) -> bool {
        a.len() == self.n
            && a.iter().all(|&x| x >= 0)
            && self.weak.iter().all(|r| r.value(a) >= r.bound)
            && self.strict.iter().all(|r| r.value(a) < r.bound)
    }

    /// The clamp bound `M = max` over weak bounds (0 without weak rows).
    pub fn clamp_bound(&self) -> i64 {
        self.weak.iter().map(|r| r.bound).max().unwrap_or(0).max(0)
    }

    /// Lexicographically least lattice point in `[0, M]ⁿ`. Clamping any solution to `M`
    /// keeps weak rows (a clamped coordinate alone reaches `M`) and strict rows (sums only
    /// drop), so the search is exhaustive.
    pub fn integer_feasible(&self) -> Option<Vec<i64>> {
        self.search_box(self.clamp_bound())
    }

    /// Lexicographically least lattice point in `[0, upper]ⁿ`.
    pub fn search_box(&self, upper: i64) -> Option<Vec<i64>> {
        if upper < 0 {
            return None;
        }
        if self.strict.iter().any(|r| r.bound <= 0) {
            return None;
        }
        let mut a = vec![0i64; self.n];
        let mut weak_sum = vec![0i64; self.weak.len()];
        let mut strict_sum = vec![0i64; self.strict.len()];
        // remaining[k][i]: number of coordinates >= i in the support of weak row k
        let remaining: Vec<Vec<i64>> = self
            .weak
            .iter()
            .map(|r| {
                let mut v = vec![0i64; self.n + 1];
                for i in (0..self.n).rev() {
                    v[i] = v[i + 1] + r.support.contains(i) as i64;
                }
                v
            })
            .collect();
        let ctx = Search {
            sys: self,
            upper,
            remaining: &remaining,
        };
        ctx.dfs(0, &mut a, &mut weak_sum, &mut strict_sum).then_some(a)
    }
}

struct Search<'a> {
    sys: &'a LinearSystem,
    upper: i64,
    remaining: &'a [Vec<i64>],
}

impl Search<'_> {
    fn dfs(&self, i: usize, a: &mut [i64], weak: &mut [i64], strict: &mut [i64]) -> bool {
        if i == self.sys.n {
            return self.sys.weak.iter().zip(weak.iter()).all(|(r, &s)| s >= r.bound);
        }
        for v in 0..=self.upper {
            a[i] = v;
            let mut ok = true;
            for (k, r) in self.sys.strict.iter().enumerate() {
                if r.support.contains(i) && strict[k] + v >= r.bound {
                    ok = false;
                }
            }
            // larger v only makes strict rows worse
            if !ok {
                break;
            }
            for (k, r) in self.sys.weak.iter().enumerate() {
                let s = weak[k] + if r.support.contains(i) { v } else { 0 };
                if s + self.remaining[k][i + 1] * self.upper < r.bound {
                    ok = false;
                    break;
                }
            }
            if ok {
                self.apply(i, v, weak, strict, 1);
                if self.dfs(i + 1, a, weak, strict) {
                    return true;
                }
                self.apply(i, v, weak, strict, -1);
            }
        }
        a[i] = 0;
        false
    }

    fn apply(&self, i: usize, v: i64, weak: &mut [i64], strict: &mut [i64], sign: i64) {
        for (k, r) in self.sys.weak.iter().enumerate() {
            if r.support.contains(i) {
                weak[k] += sign * v;
            }
        }
        for (k, r) in self.sys.strict.iter().enumerate() {
            if r.support.contains(i) {
                strict[k] += sign * v;
            }
        }
    }
}

/// Builds `L_Γ` for exponents aligned with the parent's canonical facets: a weak row
/// `Σ_{i∉F} a_i ≥ m_F` per facet outside `Γ` and a strict row `Σ_{i∉G} a_i < m_G` per facet
/// of `Γ`, both in canonical facet order.
pub fn build_l_system(gamma: &FacetSubset<'_>, exponents: &[u32]) -> Result<LinearSystem> {
    let parent = gamma.parent();
    if gamma.is_empty() {
        return Err(Error::EmptySelection);
    }
    if exponents.len() != parent.num_facets() {
        return Err(Error::LengthMismatch {
            expected: parent.num_facets(),
            got: exponents.len(),
        });
    }
    let full = VertexSet::full(parent.n());
    let mut weak = Vec::new();
    let mut strict = Vec::new();
    for (k, f) in parent.facets().iter().enumerate() {
        let row = IncidenceRow {
            support: full.difference(*f),
            bound: exponents[k] as i64,
        };
        if gamma.contains_index(k) {
            strict.push(row);
        } else {
            weak.push(row);
        }
    }
    Ok(LinearSystem {
        n: parent.n(),
        weak,
        strict,
    })
}

/// Result of the homogeneous strict system
/// `Σ_{i∉F} a_i > Σ_{i∉G} a_i` for all `F ∉ Γ`, `G ∈ Γ`, over real `a ≥ 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StrictOutcome {
    pub feasible: bool,
    /// `(F, G)` pairs in the order of the LP rows.
    pub pairs: Vec<(VertexSet, VertexSet)>,
    /// Optimal margin `t*` under `Σ a_i = 1`; `None` when there are no pairs.
    pub optimum: Option<Q>,
    /// Optimal direction `a`; `Σ a_i = 1` whenever `t* > 0`.
    pub direction: Vec<Q>,
    /// Convex pair weights `λ` attaining `t*`.
    pub pair_duals: Vec<Q>,
    /// The LP solved, for re-substitution checks.
    pub program: Option<LinearProgram>,
    pub solution: Option<LpSolution>,
}

impl StrictOutcome {
    /// An integer point of `L_Γ(I^{(m)})`: the direction scaled to integers, with
    /// `m = min_{F∉Γ} Σ_{i∉F} a_i`.
    pub fn lattice_witness(&self, n: usize) -> Option<(Vec<i64>, u32)> {
        if !self.feasible || self.pairs.is_empty() {
            return None;
        }
        let a = integerize(&self.direction);
        let full = VertexSet::full(n);
        let m = self
            .pairs
            .iter()
            .map(|(f, _)| full.difference(*f).iter().map(|i| a[i]).sum::<i64>())
            .min()?;
        Some((a, u32::try_from(m).ok()?))
    }
}

/// Decides the strict homogeneous system by an exact LP: the margin
/// `t* = max_a min_k (χ_{G_k} − χ_{F_k})·a` over `Σ a_i = 1`, `a ≥ 0`; feasible iff `t* > 0`.
///
/// The LP solved is the dual one, with a column per pair and a row per vertex, which keeps
/// the tableau small: minimize `w` subject to `Σ_k λ_k (χ_{G_k} − χ_{F_k}) ≤ w·1`, `Σ λ = 1`,
/// `λ ≥ 0`. The pair weights are its primal solution and the direction `a` its row duals.
///
/// With `Γ` the full facet set there are no pairs and the outcome is trivially feasible; that
/// case says nothing about Cohen-Macaulayness.
pub fn strict_homogeneous_feasible(gamma: &FacetSubset<'_>) -> Result<StrictOutcome> {
    if gamma.is_empty() {
        return Err(Error::EmptySelection);
    }
    let n = gamma.parent().n();
    let inside = gamma.facets();
    let outside = gamma.complement_facets();
    let pairs: Vec<(VertexSet, VertexSet)> = outside
        .iter()
        .flat_map(|&f| inside.iter().map(move |&g| (f, g)))
        .collect();
    if pairs.is_empty() {
        let share = Q::new(BigInt::one(), BigInt::from(n.max(1)));
        return Ok(StrictOutcome {
            feasible: true,
            pairs,
            optimum: None,
            direction: vec![share; n],
            pair_duals: Vec::new(),
            program: None,
            solution: None,
        });
    }
    // Entries of χ_G − χ_F are ≥ −1, so w ≥ −1 and v = w + 1 ≥ 0. Columns: λ, v, one slack
    // per vertex. Vertex row i: Σ_k d_{k,i} λ_k − v + s_i = −1; last row: Σ λ = 1; max −v.
    let k = pairs.len();
    let cols = k + 1 + n;
    let mut a = Vec::with_capacity(n + 1);
    let mut b = Vec::with_capacity(n + 1);
    for i in 0..n {
        let mut row = vec![q(0); cols];
        for (cell, &(f, g)) in row.iter_mut().zip(&pairs) {
            *cell = q(g.contains(i) as i64 - f.contains(i) as i64);
        }
        row[k] = q(-1);
        row[k + 1 + i] = q(1);
        a.push(row);
        b.push(q(-1));
    }
    let mut norm = vec![q(0); cols];
    for cell in norm.iter_mut().take(k) {
        *cell = q(1);
    }
    a.push(norm);
    b.push(q(1));
    let mut c = vec![q(0); cols];
    c[k] = q(-1);
    let program = LinearProgram { a, b, c };
    let sol = match program.solve() {
        LpOutcome::Optimal(s) => s,
        // any convex λ with v large is feasible, and −v ≤ 0 bounds the objective
        other => unreachable!("strict-system LP returned {other:?}"),
    };
    let t = -&sol.value - q(1);
    Ok(StrictOutcome {
        feasible: t.is_positive(),
        pairs,
        optimum: Some(t),
        direction: sol.duals[..n].to_vec(),
        pair_duals: sol.x[..k].to_vec(),
        program: Some(program),
        solution: Some(sol),
    })
}

/// Equal incidence sums `a_{F_1} + ··· + a_{F_s} = a_{G_1} + ··· + a_{G_s}` with
/// `F_k ∉ Γ` and `G_k ∈ Γ`, as multisets in canonical order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IncidenceCertificate {
    pub s: usize,
    pub numerator: Vec<VertexSet>,
    pub denominator: Vec<VertexSet>,
}

impl IncidenceCertificate {
    /// Checks sizes and the sum identity on `n` coordinates.
    pub fn new(n: usize, mut numerator: Vec<VertexSet>, mut denominator: Vec<VertexSet>) -> Result<Self> {
        numerator.sort();
        denominator.sort();
        if numerator.is_empty() || numerator.len() != denominator.len() {
            return Err(Error::CertificateMismatch);
        }
        if incidence_sum(n, &numerator) != incidence_sum(n, &denominator) {
            return Err(Error::CertificateMismatch);
        }
        Ok(IncidenceCertificate {
            s: numerator.len(),
            numerator,
            denominator,
        })
    }

    /// Re-checks the identity and that numerators avoid `Γ` while denominators lie in it.
    pub fn verify(&self, gamma: &FacetSubset<'_>) -> bool {
        let parent = gamma.parent();
        let side = |f: &VertexSet, inside: bool| {
            parent
                .facet_index(*f)
                .is_some_and(|k| gamma.contains_index(k) == inside)
        };
        self.s == self.numerator.len()
            && self.s == self.denominator.len()
            && self.s > 0
            && self.numerator.iter().all(|f| side(f, false))
            && self.denominator.iter().all(|g| side(g, true))
            && incidence_sum(parent.n(), &self.numerator) == incidence_sum(parent.n(), &self.denominator)
    }
}

impl fmt::Display for IncidenceCertificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |v: &[VertexSet]| v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" + ");
        write!(f, "{} = {}", join(&self.numerator), join(&self.denominator))
    }
}

pub fn incidence_sum(n: usize, sets: &[VertexSet]) -> Vec<u32> {
    let mut s = vec![0u32; n];
    for f in sets {
        for i in f.iter() {
            s[i] += 1;
        }
    }
    s
}

/// Extracts an incidence certificate from the optimal duals of the strict-system LP.
///
/// With `t* ≤ 0` the pair weights `λ ≥ 0` satisfy `Σ λ_k χ_{G_k} ≤ Σ λ_k χ_{F_k}` coordinatewise,
/// with equality because all facets have the same size. The aggregated multiplicities are
/// then moved to a vertex of `{Σ μ_F χ_F = Σ ν_G χ_G, Σ μ = 1}` on the same support, cleared
/// of denominators and divided by their gcd.
pub fn motzkin_certificate(gamma: &FacetSubset<'_>) -> Result<IncidenceCertificate> {
    let parent = gamma.parent();
    if !parent.is_pure() {
        return Err(Error::NotPure);
    }
    let out = strict_homogeneous_feasible(gamma)?;
    if out.feasible {
        return Err(Error::SystemFeasible);
    }
    let mut mu: HashMap<VertexSet, Q> = HashMap::new();
    let mut nu: HashMap<VertexSet, Q> = HashMap::new();
    for (&(f, g), y) in out.pairs.iter().zip(&out.pair_duals) {
        if y.is_positive() {
            *mu.entry(f).or_insert_with(Q::zero) += y;
            *nu.entry(g).or_insert_with(Q::zero) += y;
        }
    }
    let mut num_support: Vec<VertexSet> = mu.keys().copied().collect();
    let mut den_support: Vec<VertexSet> = nu.keys().copied().collect();
    num_support.sort();
    den_support.sort();
    let n = parent.n();
    let weights = refine_to_vertex(n, &num_support, &den_support).ok_or(Error::CertificateMismatch)?;
    let ints = integerize(&weights);
    let mut numerator = Vec::new();
    let mut denominator = Vec::new();
    for (idx, &c) in ints.iter().enumerate() {
        let target = if idx < num_support.len() {
            (&mut numerator, num_support[idx])
        } else {
            (&mut denominator, den_support[idx - num_support.len()])
        };
        for _ in 0..c {
            target.0.push(target.1);
        }
    }
    let cert = IncidenceCertificate::new(n, numerator, denominator)?;
    if !cert.verify(gamma) {
        return Err(Error::CertificateMismatch);
    }
    Ok(cert)
}

/// A basic feasible solution of `Σ μ_F χ_F − Σ ν_G χ_G = 0`, `Σ μ = 1`, `μ, ν ≥ 0`.
fn refine_to_vertex(n: usize, num: &[VertexSet], den: &[VertexSet]) -> Option<Vec<Q>> {
    let cols = num.len() + den.len();
    let mut a = Vec::with_capacity(n + 1);
    for i in 0..n {
        let mut row: Vec<Q> = num.iter().map(|f| q(f.contains(i) as i64)).collect();
        row.extend(den.iter().map(|g| q(-(g.contains(i) as i64))));
        a.push(row);
    }
    let mut norm = vec![q(1); num.len()];
    norm.extend(std::iter::repeat_n(q(0), den.len()));
    a.push(norm);
    let mut b = vec![q(0); n];
    b.push(q(1));
    let program = LinearProgram {
        a,
        b,
        c: vec![q(0); cols],
    };
    match program.solve() {
        LpOutcome::Optimal(s) => Some(s.x),
        _ => None,
    }
}

/// Scales a nonnegative rational vector to the primitive integer vector on the same ray.
fn integerize(v: &[Q]) -> Vec<i64> {
    let lcm = v.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let scaled: Vec<BigInt> = v
        .iter()
        .map(|x| (x * Q::from_integer(lcm.clone())).to_integer())
        .collect();
    let g = scaled.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    scaled
        .iter()
        .map(|x| {
            let y = if g.is_zero() { x.clone() } else { x / &g };
            y.to_i64().expect("certificate multiplicity fits in i64")
        })
        .collect()
}

/// Exhaustive search over multisets `F_1..F_s` outside `Γ` and `G_1..G_s` inside `Γ` with
/// equal incidence sums, for `s = 1..=s_max`. Returns the first hit in order of `s`, then
/// lexicographic multiset order.
pub fn brute_force_certificate_search(gamma: &FacetSubset<'_>, s_max: usize) -> Option<IncidenceCertificate> {
    let n = gamma.parent().n();
    let inside = gamma.facets();
    let outside = gamma.complement_facets();
    if inside.is_empty() || outside.is_empty() {
        return None;
    }
    for s in 1..=s_max {
        let mut by_sum: HashMap<Vec<u32>, Vec<VertexSet>> = HashMap::new();
        for ms in multisets(&inside, s) {
            by_sum.entry(incidence_sum(n, &ms)).or_insert(ms);
        }
        for ms in multisets(&outside, s) {
            if let Some(den) = by_sum.get(&incidence_sum(n, &ms)) {
                return IncidenceCertificate::new(n, ms, den.clone()).ok();
            }
        }
    }
    None
}

/// Size-`s` multisets of `items`, as nondecreasing index sequences in lexicographic order.
fn multisets(items: &[VertexSet], s: usize) -> Vec<Vec<VertexSet>> {
    let mut out = Vec::new();
    let mut idx = vec![0usize; s];
    if items.is_empty() {
        return out;
    }
    loop {
        out.push(idx.iter().map(|&i| items[i]).collect());
        let mut k = s;
        loop {
            if k == 0 {
                return out;
            }
            k -= 1;
            if idx[k] + 1 < items.len() {
                idx[k] += 1;
                for j in k + 1..s {
                    idx[j] = idx[k];
                }
                break;
            }
        }
    }
}

/// Convenience wrapper: `L_Γ(I_Δ^{(m)})` for a facet subset of `Δ`.
pub fn symbolic_l_system(gamma: &FacetSubset<'_>, m: u32) -> Result<LinearSystem> {
    build_l_system(gamma, &vec![m; gamma.parent().num_facets()])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::SimplicialComplex;

    fn cx(n: usize, f: &[&[usize]]) -> SimplicialComplex {
        SimplicialComplex::new(n, &f.iter().map(|x| x.to_vec()).collect::<Vec<_>>()).unwrap()
    }

    fn vs(l: &[usize]) -> VertexSet {
        VertexSet::from_labels(l, 64).unwrap()
    }

    fn k4() -> SimplicialComplex {
        SimplicialComplex::simplex(4).skeleton(1).unwrap()
    }

    fn flap() -> SimplicialComplex {
        cx(5, &[&[1, 2, 3], &[1, 2, 4], &[1, 3, 4], &[2, 3, 4], &[3, 4, 5]])
    }

    fn c5() -> SimplicialComplex {
        cx(5, &[&[1, 2], &[2, 3], &[3, 4], &[4, 5], &[5, 1]])
    }

    fn row(l: &[usize], bound: i64) -> IncidenceRow {
        IncidenceRow { support: vs(l), bound }
    }

    #[test]
    fn tetrahedral_rows() {
        let k = k4();
        let g = k.subcomplex_of_facets(&[vs(&[1, 2]), vs(&[3, 4])]).unwrap();
        let sys = build_l_system(&g, &[11, 12, 13, 14, 15, 16]).unwrap();
        assert_eq!(
            sys.weak,
            vec![row(&[2, 4], 12), row(&[2, 3], 13), row(&[1, 4], 14), row(&[1, 3], 15)]
        );
        assert_eq!(sys.strict, vec![row(&[3, 4], 11), row(&[1, 2], 16)]);
    }

    #[test]
    fn flap_rows_and_lattice_point() {
        let f = flap();
        let g = f.subcomplex_of_facets(&[vs(&[1, 2, 3]), vs(&[3, 4, 5])]).unwrap();
        let sys = symbolic_l_system(&g, 3).unwrap();
        assert_eq!(sys.weak, vec![row(&[3, 5], 3), row(&[2, 5], 3), row(&[1, 5], 3)]);
        assert_eq!(sys.strict, vec![row(&[4, 5], 3), row(&[1, 2], 3)]);
        assert_eq!(sys.integer_feasible(), Some(vec![1, 1, 1, 0, 2]));
        assert_eq!(symbolic_l_system(&g, 2).unwrap().integer_feasible(), None);
        assert_eq!(
            symbolic_l_system(&g, 5).unwrap().integer_feasible(),
            Some(vec![1, 1, 1, 0, 4])
        );
    }

    #[test]
    fn trivial_systems() {
        let c = c5();
        let g = c.subcomplex_of_facets(&[vs(&[1, 2]), vs(&[3, 4])]).unwrap();
        assert_eq!(symbolic_l_system(&g, 2).unwrap().integer_feasible(), None);
        let all = c.generated_subcomplex(&[0, 1, 2, 3, 4]).unwrap();
        assert_eq!(symbolic_l_system(&all, 2).unwrap().integer_feasible(), Some(vec![0; 5]));
        let contra = LinearSystem {
            n: 2,
            weak: vec![row(&[1], 1)],
            strict: vec![row(&[1, 2], 1)],
        };
        assert_eq!(contra.integer_feasible(), None);
        assert!(matches!(
            build_l_system(&c.generated_subcomplex(&[0]).unwrap(), &[1, 1]),
            Err(Error::LengthMismatch { .. })
        ));
    }

    #[test]
    fn strict_system_verdicts() {
        let f = flap();
        let g = f.subcomplex_of_facets(&[vs(&[1, 2, 3]), vs(&[3, 4, 5])]).unwrap();
        let out = strict_homogeneous_feasible(&g).unwrap();
        assert!(out.feasible);
        let (a, m) = out.lattice_witness(5).unwrap();
        assert!(symbolic_l_system(&g, m).unwrap().is_solution(&a));
        assert!(out.program.unwrap().certifies(&out.solution.unwrap()));

        let k = k4();
        let h = k.subcomplex_of_facets(&[vs(&[1, 2]), vs(&[3, 4])]).unwrap();
        let out = strict_homogeneous_feasible(&h).unwrap();
        assert!(!out.feasible);
        assert_eq!(out.optimum, Some(q(0)));

        let all = k.generated_subcomplex(&[0, 1, 2, 3, 4, 5]).unwrap();
        let out = strict_homogeneous_feasible(&all).unwrap();
        assert!(out.feasible && out.optimum.is_none());
    }

    #[test]
    fn rectangle_certificate_on_k4() {
        let k = k4();
        let h = k.subcomplex_of_facets(&[vs(&[1, 2]), vs(&[3, 4])]).unwrap();
        let cert = motzkin_certificate(&h).unwrap();
        assert_eq!(cert.s, 2);
        assert_eq!(cert.denominator, vec![vs(&[1, 2]), vs(&[3, 4])]);
        assert!(cert.numerator == vec![vs(&[1, 3]), vs(&[2, 4])] || cert.numerator == vec![vs(&[1, 4]), vs(&[2, 3])]);
        assert!(cert.verify(&h));
        let brute = brute_force_certificate_search(&h, 2).unwrap();
        assert_eq!(brute.s, 2);
        assert!(brute.verify(&h));
        let f = flap();
        let g = f.subcomplex_of_facets(&[vs(&[1, 2, 3]), vs(&[3, 4, 5])]).unwrap();
        assert_eq!(motzkin_certificate(&g), Err(Error::SystemFeasible));
    }

    #[test]
    fn rectangle_certificate_on_skeleton_of_4_simplex() {
        let k5 = SimplicialComplex::simplex(5).skeleton(1).unwrap();
        let h = k5.subcomplex_of_facets(&[vs(&[1, 2]), vs(&[3, 4])]).unwrap();
        let cert = motzkin_certificate(&h).unwrap();
        assert!(cert.verify(&h));
        let brute = brute_force_certificate_search(&h, 2).unwrap();
        assert_eq!(brute.s, 2);
    }

    #[test]
    fn no_certificate_for_five_cycle() {
        let c = c5();
        let g = c.subcomplex_of_facets(&[vs(&[1, 2]), vs(&[3, 4])]).unwrap();
        assert_eq!(brute_force_certificate_search(&g, 4), None);
        assert!(strict_homogeneous_feasible(&g).unwrap().feasible);
        assert_eq!(brute_force_certificate_search(&g, 0), None);
    }

    #[test]
    fn certificate_constructor_checks_sums() {
        assert_eq!(
            IncidenceCertificate::new(4, vec![vs(&[1, 3])], vec![vs(&[1, 2])]),
            Err(Error::CertificateMismatch)
        );
        assert!(IncidenceCertificate::new(4, vec![vs(&[1, 3]), vs(&[2, 4])], vec![vs(&[1, 2]), vs(&[3, 4])]).is_ok());
    }

    #[test]
    fn multiset_enumeration() {
        let items = [vs(&[1]), vs(&[2]), vs(&[3])];
        assert_eq!(multisets(&items, 2).len(), 6);
        assert_eq!(multisets(&items, 3).len(), 10);
        assert_eq!(multisets(&items, 0), vec![Vec::<VertexSet>::new()]);
    }

    #[test]
    fn integerize_is_primitive() {
        let v = [Q::new(1.into(), 4.into()), Q::new(1.into(), 2.into()), q(0)];
        assert_eq!(integerize(&v), vec![1, 2, 0]);
    }
}
