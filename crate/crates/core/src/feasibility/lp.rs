//! Exact two-phase primal simplex with Bland's rule.
//!
//! Problems are in equality form: maximize `c·x` subject to `A x = b`, `x ≥ 0`. Pivoting runs
//! over checked `i128` fractions and restarts over `BigRational` if any operation overflows;
//! the result is always re-substituted exactly.

use num_bigint::BigInt;
use num_rational::{BigRational, Ratio};
use num_traits::{CheckedAdd, CheckedDiv, CheckedMul, CheckedSub, One, Signed, ToPrimitive, Zero};

pub type Q = BigRational;

pub fn q(v: i64) -> Q {
    Q::from_integer(BigInt::from(v))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearProgram {
    pub a: Vec<Vec<Q>>,
    pub b: Vec<Q>,
    pub c: Vec<Q>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LpSolution {
    pub x: Vec<Q>,
    pub value: Q,
    /// Optimal dual `y` with `yᵀA ≥ c` and `yᵀb = value`.
    pub duals: Vec<Q>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LpOutcome {
    Optimal(LpSolution),
    Infeasible,
    Unbounded,
}

impl LinearProgram {
    pub fn rows(&self) -> usize {
        self.a.len()
    }

    pub fn cols(&self) -> usize {
        self.c.len()
    }

    /// `A x = b`, `x ≥ 0`, exactly.
    pub fn is_primal_feasible(&self, x: &[Q]) -> bool {
        x.len() == self.cols()
            && x.iter().all(|v| !v.is_negative())
            && self.a.iter().zip(&self.b).all(|(row, bi)| dot(row, x) == *bi)
    }

    /// `yᵀA ≥ c` componentwise.
    pub fn is_dual_feasible(&self, y: &[Q]) -> bool {
        y.len() == self.rows()
            && (0..self.cols()).all(|j| {
                let s: Q = self.a.iter().zip(y).map(|(row, yi)| &row[j] * yi).sum();
                s >= self.c[j]
            })
    }

    /// Primal feasibility, dual feasibility and equal objective values.
    pub fn certifies(&self, sol: &LpSolution) -> bool {
        self.is_primal_feasible(&sol.x)
            && self.is_dual_feasible(&sol.duals)
            && dot(&self.c, &sol.x) == sol.value
            && dot(&self.b, &sol.duals) == sol.value
    }

    pub fn solve(&self) -> LpOutcome {
        for (r, row) in self.a.iter().enumerate() {
            assert_eq!(row.len(), self.cols(), "row {r} has the wrong length");
        }
        assert_eq!(self.b.len(), self.rows(), "right-hand side has the wrong length");
        let raw = self
            .to_small()
            .and_then(|(a, b, c)| simplex(&a, &b, &c))
            .map(|r| r.map(|v| Q::new(BigInt::from(*v.numer()), BigInt::from(*v.denom()))))
            .unwrap_or_else(|| simplex(&self.a, &self.b, &self.c).expect("BigRational arithmetic cannot overflow"));
        match raw {
            Raw::Infeasible => LpOutcome::Infeasible,
            Raw::Unbounded => LpOutcome::Unbounded,
            Raw::Optimal { x, duals } => {
                let value = dot(&self.c, &x);
                let sol = LpSolution { x, value, duals };
                assert!(self.certifies(&sol), "simplex result failed exact re-substitution");
                LpOutcome::Optimal(sol)
            }
        }
    }

    #[allow(clippy::type_complexity)]
    fn to_small(&self) -> Option<(Vec<Vec<Small>>, Vec<Small>, Vec<Small>)> {
        let conv = |v: &[Q]| v.iter().map(small).collect::<Option<Vec<_>>>();
        Some((
            self.a.iter().map(|r| conv(r)).collect::<Option<_>>()?,
            conv(&self.b)?,
            conv(&self.c)?,
        ))
    }
}

pub fn dot(a: &[Q], b: &[Q]) -> Q {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

type Small = Ratio<i128>;

fn small(v: &Q) -> Option<Small> {
    Some(Small::new(v.numer().to_i128()?, v.denom().to_i128()?))
}

/// Ordered-field operations, `None` on overflow.
trait Exact: Clone + PartialOrd + Zero + One + Signed + CheckedAdd + CheckedSub + CheckedMul + CheckedDiv {}

impl<T: Clone + PartialOrd + Zero + One + Signed + CheckedAdd + CheckedSub + CheckedMul + CheckedDiv> Exact for T {}

enum Raw<T> {
    Optimal { x: Vec<T>, duals: Vec<T> },
    Infeasible,
    Unbounded,
}

impl<T> Raw<T> {
    fn map<U>(self, f: impl Fn(&T) -> U) -> Raw<U> {
        match self {
            Raw::Optimal { x, duals } => Raw::Optimal {
                x: x.iter().map(&f).collect(),
                duals: duals.iter().map(&f).collect(),
            },
            Raw::Infeasible => Raw::Infeasible,
            Raw::Unbounded => Raw::Unbounded,
        }
    }
}

fn neg<T: Exact>(v: &T) -> Option<T> {
    T::zero().checked_sub(v)
}

/// `Σ cost[basis[r]] · t[r][j]` over rows whose basic cost is nonzero.
fn basic_sum<T: Exact>(t: &[Vec<T>], basis: &[usize], cost: &[T], j: usize) -> Option<T> {
    let mut z = T::zero();
    for (r, &bj) in basis.iter().enumerate() {
        if !cost[bj].is_zero() && !t[r][j].is_zero() {
            z = z.checked_add(&cost[bj].checked_mul(&t[r][j])?)?;
        }
    }
    Some(z)
}

/// Two-phase simplex on `[A | I | b]`; the identity block holds the artificials and tracks
/// `B⁻¹`. Returns `None` if the arithmetic overflowed.
fn simplex<T: Exact>(a: &[Vec<T>], b: &[T], c: &[T]) -> Option<Raw<T>> {
    let m = a.len();
    let n = c.len();
    let width = n + m + 1;
    let mut flipped = vec![false; m];
    let mut t: Vec<Vec<T>> = Vec::with_capacity(m);
    for (r, row) in a.iter().enumerate() {
        let flip = b[r].is_negative();
        flipped[r] = flip;
        let mut tr = vec![T::zero(); width];
        for j in 0..n {
            tr[j] = if flip { neg(&row[j])? } else { row[j].clone() };
        }
        tr[n + r] = T::one();
        tr[width - 1] = if flip { neg(&b[r])? } else { b[r].clone() };
        t.push(tr);
    }
    let mut basis: Vec<usize> = (n..n + m).collect();
    // A structural column equal to e_r starts basic in row r; artificials are only
    // needed for the remaining rows.
    #[allow(clippy::needless_range_loop)]
    for j in 0..n {
        let mut rows = (0..m).filter(|&r| !t[r][j].is_zero());
        if let (Some(r), None) = (rows.next(), rows.next()) {
            if t[r][j].is_one() && basis[r] >= n {
                basis[r] = j;
            }
        }
    }

    let mut phase1 = vec![T::zero(); n + m];
    for v in phase1.iter_mut().skip(n) {
        *v = neg(&T::one())?;
    }
    pivot_loop(&mut t, &mut basis, &phase1, n + m)?;
    let mut infeasibility = T::zero();
    for (r, &bj) in basis.iter().enumerate() {
        if bj >= n {
            infeasibility = infeasibility.checked_add(&t[r][width - 1])?;
        }
    }
    if infeasibility.is_positive() {
        return Some(Raw::Infeasible);
    }
    // Drive zero-level artificials out where a structural column allows it.
    for r in 0..m {
        if basis[r] >= n {
            if let Some(j) = (0..n).find(|&j| !t[r][j].is_zero()) {
                pivot(&mut t, &mut basis, r, j)?;
            }
        }
    }

    let mut phase2 = c.to_vec();
    phase2.extend(std::iter::repeat_n(T::zero(), m));
    if !pivot_loop(&mut t, &mut basis, &phase2, n)? {
        return Some(Raw::Unbounded);
    }

    let mut x = vec![T::zero(); n];
    for (r, &bj) in basis.iter().enumerate() {
        if bj < n {
            x[bj] = t[r][width - 1].clone();
        }
    }
    let mut duals = Vec::with_capacity(m);
    for (i, &flip) in flipped.iter().enumerate() {
        let y = basic_sum(&t, &basis, &phase2, n + i)?;
        duals.push(if flip { neg(&y)? } else { y });
    }
    Some(Raw::Optimal { x, duals })
}

/// Runs Bland pivots over entering columns `< allowed` until optimal (`Some(true)`) or
/// unbounded (`Some(false)`).
fn pivot_loop<T: Exact>(t: &mut [Vec<T>], basis: &mut [usize], cost: &[T], allowed: usize) -> Option<bool> {
    let rhs = t.first().map_or(0, |r| r.len() - 1);
    loop {
        let mut entering = None;
        for j in 0..allowed {
            if cost[j] > basic_sum(t, basis, cost, j)? {
                entering = Some(j);
                break;
            }
        }
        let Some(e) = entering else {
            return Some(true);
        };
        let mut leave: Option<(usize, T)> = None;
        for r in 0..t.len() {
            if !t[r][e].is_positive() {
                continue;
            }
            let ratio = t[r][rhs].checked_div(&t[r][e])?;
            let better = match &leave {
                None => true,
                Some((lr, best)) => ratio < *best || (ratio == *best && basis[r] < basis[*lr]),
            };
            if better {
                leave = Some((r, ratio));
            }
        }
        let Some((r, _)) = leave else {
            return Some(false);
        };
        pivot(t, basis, r, e)?;
    }
}

fn pivot<T: Exact>(t: &mut [Vec<T>], basis: &mut [usize], r: usize, e: usize) -> Option<()> {
    let p = t[r][e].clone();
    for v in t[r].iter_mut().filter(|v| !v.is_zero()) {
        *v = v.checked_div(&p)?;
    }
    let prow: Vec<(usize, T)> = t[r].iter().cloned().enumerate().filter(|(_, v)| !v.is_zero()).collect();
    for (i, row) in t.iter_mut().enumerate() {
        if i == r || row[e].is_zero() {
            continue;
        }
        let f = row[e].clone();
        for (j, pv) in &prow {
            row[*j] = row[*j].checked_sub(&f.checked_mul(pv)?)?;
        }
    }
    basis[r] = e;
    Some(())
}
