//! Reduced simplicial homology over `ℚ` or `𝔽_p` and the link-vanishing Cohen-Macaulay test.
//!
//! All ranks are exact. Over `ℚ` elimination is fraction-free (Bareiss) on `i128` and restarts
//! on big integers if an intermediate minor overflows.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::Mutex;

use num_bigint::BigInt;
use num_traits::Zero;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::vertex_set::VertexSet;

/// Coefficient field for homology.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FieldSpec {
    Rationals,
    PrimeField(u32),
}

impl FieldSpec {
    pub fn prime(p: u32) -> Result<Self> {
        if is_prime(p) && p < (1u32 << 31) {
            Ok(FieldSpec::PrimeField(p))
        } else {
            Err(Error::InvalidField(format!("{p} is not a prime below 2^31")))
        }
    }

    pub fn characteristic(self) -> u32 {
        match self {
            FieldSpec::Rationals => 0,
            FieldSpec::PrimeField(p) => p,
        }
    }
}

fn is_prime(p: u32) -> bool {
    if p < 2 {
        return false;
    }
    let p = p as u64;
    let mut d = 2u64;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rationals => f.write_str("Q"),
            FieldSpec::PrimeField(p) => write!(f, "Fp:{p}"),
        }
    }
}

impl FromStr for FieldSpec {
    type Err = Error;

    /// Accepts `Q` or `Fp:<p>`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "Q" {
            return Ok(FieldSpec::Rationals);
        }
        if let Some(p) = s.strip_prefix("Fp:") {
            let p: u32 = p
                .parse()
                .map_err(|_| Error::InvalidField(format!("bad characteristic in {s:?}")))?;
            return FieldSpec::prime(p);
        }
        Err(Error::InvalidField(format!("expected Q or Fp:<p>, got {s:?}")))
    }
}

impl Serialize for FieldSpec {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for FieldSpec {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// A dense matrix with entries in the given field. Entries over `𝔽_p` are kept in `[0, p)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FieldMatrix {
    field: FieldSpec,
    rows: usize,
    cols: usize,
    data: Vec<i64>,
}

impl FieldMatrix {
    pub fn zeros(field: FieldSpec, rows: usize, cols: usize) -> Self {
        FieldMatrix {
            field,
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn from_rows(field: FieldSpec, rows: &[Vec<i64>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        let mut m = FieldMatrix::zeros(field, r, c);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), c);
            for (j, &v) in row.iter().enumerate() {
                m.set(i, j, v);
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn get(&self, r: usize, c: usize) -> i64 {
        self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: i64) {
        let v = match self.field {
            FieldSpec::Rationals => v,
            FieldSpec::PrimeField(p) => v.rem_euclid(p as i64),
        };
        self.data[r * self.cols + c] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&v| v == 0)
    }

    /// Matrix product in the field.
    pub fn mul(&self, other: &FieldMatrix) -> FieldMatrix {
        assert_eq!(self.cols, other.rows);
        assert_eq!(self.field, other.field);
        let mut out = FieldMatrix::zeros(self.field, self.rows, other.cols);
        for i in 0..self.rows {
            for j in 0..other.cols {
                let mut acc: i128 = 0;
                for k in 0..self.cols {
                    acc += self.get(i, k) as i128 * other.get(k, j) as i128;
                }
                let v = match self.field {
                    FieldSpec::Rationals => acc as i64,
                    FieldSpec::PrimeField(p) => acc.rem_euclid(p as i128) as i64,
                };
                out.set(i, j, v);
            }
        }
        out
    }

    pub fn rank(&self) -> usize {
        if self.rows == 0 || self.cols == 0 {
            return 0;
        }
        match self.field {
            FieldSpec::Rationals => {
                let m: Vec<i128> = self.data.iter().map(|&v| v as i128).collect();
                bareiss_rank_i128(m, self.rows, self.cols).unwrap_or_else(|| {
                    let m: Vec<BigInt> = self.data.iter().map(|&v| BigInt::from(v)).collect();
                    bareiss_rank_big(m, self.rows, self.cols)
                })
            }
            FieldSpec::PrimeField(p) => modular_rank(self.data.clone(), self.rows, self.cols, p as i64),
        }
    }
}

/// Fraction-free elimination; `None` on overflow.
fn bareiss_rank_i128(mut m: Vec<i128>, rows: usize, cols: usize) -> Option<usize> {
    let mut prev: i128 = 1;
    let mut rank = 0;
    for c in 0..cols {
        if rank == rows {
            break;
        }
        let Some(p) = (rank..rows).find(|&r| m[r * cols + c] != 0) else {
            continue;
        };
        if p != rank {
            for k in 0..cols {
                m.swap(p * cols + k, rank * cols + k);
            }
        }
        let piv = m[rank * cols + c];
        for r in rank + 1..rows {
            let lead = m[r * cols + c];
            for k in c + 1..cols {
                let a = piv.checked_mul(m[r * cols + k])?;
                let b = lead.checked_mul(m[rank * cols + k])?;
                m[r * cols + k] = a.checked_sub(b)? / prev;
            }
            m[r * cols + c] = 0;
        }
        prev = piv;
        rank += 1;
    }
    Some(rank)
}

fn bareiss_rank_big(mut m: Vec<BigInt>, rows: usize, cols: usize) -> usize {
    let mut prev = BigInt::from(1);
    let mut rank = 0;
    for c in 0..cols {
        if rank == rows {
            break;
        }
        let Some(p) = (rank..rows).find(|&r| !m[r * cols + c].is_zero()) else {
            continue;
        };
        if p != rank {
            for k in 0..cols {
                m.swap(p * cols + k, rank * cols + k);
            }
        }
        let piv = m[rank * cols + c].clone();
        for r in rank + 1..rows {
            let lead = m[r * cols + c].clone();
            for k in c + 1..cols {
                let v = (&piv * &m[r * cols + k] - &lead * &m[rank * cols + k]) / &prev;
                m[r * cols + k] = v;
            }
            m[r * cols + c] = BigInt::zero();
        }
        prev = piv;
        rank += 1;
    }
    rank
}

fn mod_pow(mut b: i64, mut e: i64, p: i64) -> i64 {
    let mut r = 1i64;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    r
}

fn modular_rank(mut m: Vec<i64>, rows: usize, cols: usize, p: i64) -> usize {
    let mut rank = 0;
    for c in 0..cols {
        if rank == rows {
            break;
        }
        let Some(piv_row) = (rank..rows).find(|&r| m[r * cols + c] != 0) else {
            continue;
        };
        if piv_row != rank {
            for k in 0..cols {
                m.swap(piv_row * cols + k, rank * cols + k);
            }
        }
        let inv = mod_pow(m[rank * cols + c], p - 2, p);
        for k in c..cols {
            m[rank * cols + k] = m[rank * cols + k] * inv % p;
        }
        for r in rank + 1..rows {
            let f = m[r * cols + c];
            if f == 0 {
                continue;
            }
            for k in c..cols {
                m[r * cols + k] = (m[r * cols + k] - f * m[rank * cols + k]).rem_euclid(p);
            }
        }
        rank += 1;
    }
    rank
}

/// The faces of `complex` of dimension `dim` (i.e. with `dim + 1` vertices), sorted.
fn faces_of_dim(by_size: &[Vec<VertexSet>], dim: isize) -> &[VertexSet] {
    let k = dim + 1;
    if k < 0 || k as usize >= by_size.len() {
        return &[];
    }
    &by_size[k as usize]
}

fn boundary_from_faces(by_size: &[Vec<VertexSet>], dim: isize, field: FieldSpec) -> FieldMatrix {
    let lower = faces_of_dim(by_size, dim - 1);
    let upper = faces_of_dim(by_size, dim);
    let index: HashMap<VertexSet, usize> = lower.iter().enumerate().map(|(i, f)| (*f, i)).collect();
    let mut m = FieldMatrix::zeros(field, lower.len(), upper.len());
    for (col, face) in upper.iter().enumerate() {
        for (pos, v) in face.iter().enumerate() {
            let row = index[&face.without(v)];
            m.set(row, col, if pos % 2 == 0 { 1 } else { -1 });
        }
    }
    m
}

/// Matrix of `∂_j` from `j`-faces (columns) to `(j-1)`-faces (rows), with the sign of
/// removing the `i`-th smallest vertex equal to `(-1)^i`. `∂_0` is the augmentation onto `∅`.
pub fn boundary_matrix(complex: &SimplicialComplex, j: isize, field: FieldSpec) -> Result<FieldMatrix> {
    if complex.is_void() || j < -1 || j > complex.dim() {
        return Err(Error::DimensionOutOfRange {
            requested: j,
            min: -1,
            max: complex.dim(),
        });
    }
    Ok(boundary_from_faces(&complex.faces_by_size(), j, field))
}

/// `dim H̃_j` for `j = -1 ..= dim Δ`; index 0 holds `j = -1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BettiVector {
    pub dims: Vec<usize>,
}

impl BettiVector {
    /// `dim H̃_j`, zero outside the stored range.
    pub fn get(&self, j: isize) -> usize {
        let i = j + 1;
        if i < 0 {
            return 0;
        }
        self.dims.get(i as usize).copied().unwrap_or(0)
    }

    /// Smallest `j < bound` with `H̃_j ≠ 0`.
    pub fn first_nonzero_below(&self, bound: isize) -> Option<(isize, usize)> {
        self.dims
            .iter()
            .enumerate()
            .map(|(i, &d)| (i as isize - 1, d))
            .find(|&(j, d)| j < bound && d != 0)
    }

    pub fn is_acyclic(&self) -> bool {
        self.dims.iter().all(|&d| d == 0)
    }
}

pub fn reduced_homology_dims(complex: &SimplicialComplex, field: FieldSpec) -> Result<BettiVector> {
    if complex.is_void() {
        return Err(Error::VoidComplex);
    }
    let by_size = complex.faces_by_size();
    let top = complex.dim();
    // rank of ∂_j for j = -1 ..= top + 1; ∂_{-1} and ∂_{top+1} vanish
    let mut ranks = vec![0usize; (top + 3) as usize];
    for j in 0..=top {
        ranks[(j + 1) as usize] = boundary_from_faces(&by_size, j, field).rank();
    }
    let dims = (-1..=top)
        .map(|j| {
            let cj = faces_of_dim(&by_size, j).len();
            cj - ranks[(j + 1) as usize] - ranks[(j + 2) as usize]
        })
        .collect();
    Ok(BettiVector { dims })
}

/// A nonvanishing `H̃_j(lk F)` with `j < dim lk F`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct HomologyWitness {
    pub face: VertexSet,
    pub degree: isize,
    pub dim: usize,
}

impl fmt::Display for HomologyWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "face {} has dim H̃_{}(lk) = {}", self.face, self.degree, self.dim)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CmVerdict {
    pub cohen_macaulay: bool,
    pub pure: bool,
    pub witness: Option<HomologyWitness>,
}

/// Homology cache keyed by a complex's facet list.
#[derive(Default)]
pub struct HomologyCache {
    field: Option<FieldSpec>,
    betti: Mutex<HashMap<Vec<VertexSet>, BettiVector>>,
    cm: Mutex<HashMap<Vec<VertexSet>, Option<HomologyWitness>>>,
}

impl HomologyCache {
    pub fn new(field: FieldSpec) -> Self {
        HomologyCache {
            field: Some(field),
            ..Default::default()
        }
    }

    pub fn field(&self) -> FieldSpec {
        self.field.unwrap_or(FieldSpec::Rationals)
    }

    pub fn betti(&self, complex: &SimplicialComplex) -> Result<BettiVector> {
        if let Some(b) = self.betti.lock().unwrap().get(complex.facets()) {
            return Ok(b.clone());
        }
        let b = reduced_homology_dims(complex, self.field())?;
        self.betti.lock().unwrap().insert(complex.facets().to_vec(), b.clone());
        Ok(b)
    }

    /// Cached [`is_cm_complex`]; returns the failure witness if any.
    pub fn cm_witness(&self, complex: &SimplicialComplex) -> Result<Option<HomologyWitness>> {
        if let Some(w) = self.cm.lock().unwrap().get(complex.facets()) {
            return Ok(*w);
        }
        let w = cm_witness_with(complex, self)?;
        self.cm.lock().unwrap().insert(complex.facets().to_vec(), w);
        Ok(w)
    }

    pub fn is_cm(&self, complex: &SimplicialComplex) -> Result<bool> {
        Ok(self.cm_witness(complex)?.is_none())
    }
}

fn cm_witness_with(complex: &SimplicialComplex, cache: &HomologyCache) -> Result<Option<HomologyWitness>> {
    if complex.is_void() {
        return Err(Error::VoidComplex);
    }
    for face in complex.faces() {
        let link = complex.link_unchecked(face);
        let ld = link.dim();
        // a nonempty link of dimension <= 0 has H̃_j = 0 for every j < dim
        if ld <= 0 {
            continue;
        }
        let b = cache.betti(&link)?;
        if let Some((j, d)) = b.first_nonzero_below(ld) {
            return Ok(Some(HomologyWitness {
                face,
                degree: j,
                dim: d,
            }));
        }
    }
    Ok(None)
}

/// Cohen-Macaulay test over `field`: `H̃_j(lk F) = 0` for every face `F` (including `∅`) and
/// every `j < dim lk F`. Faces are scanned by increasing dimension, so the witness is the
/// first failing face in canonical order. Purity is reported but not required.
pub fn is_cm_complex(complex: &SimplicialComplex, field: FieldSpec) -> Result<CmVerdict> {
    let cache = HomologyCache::new(field);
    let witness = cm_witness_with(complex, &cache)?;
    Ok(CmVerdict {
        cohen_macaulay: witness.is_none(),
        pure: complex.is_pure(),
        witness,
    })
}
