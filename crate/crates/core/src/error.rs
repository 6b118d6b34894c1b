use thiserror::Error;

/// Errors raised by the complex, ideal and decision routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {vertex} is outside 1..={n}")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("at most {max} vertices are supported, got {n}")]
    TooManyVertices { n: usize, max: usize },
    #[error("the facet list is empty")]
    EmptyFacetList,
    #[error("{face} is not a face of the complex")]
    NotAFace { face: String },
    #[error("{face} is not a facet of the complex")]
    NotAFacet { face: String },
    #[error("restriction needs |V| >= 2, got {size}")]
    RestrictionTooSmall { size: usize },
    #[error("dimension {requested} is outside {min}..={max}")]
    DimensionOutOfRange { requested: isize, min: isize, max: isize },
    #[error("the void complex has no homology")]
    VoidComplex,
    #[error("the complex is not pure")]
    NotPure,
    #[error("the ideal is not unmixed: primary components have different heights")]
    MixedIdeal,
    #[error("empty facet selection")]
    EmptySelection,
    #[error("facet index {index} out of range for {count} facets")]
    FacetIndexOutOfRange { index: usize, count: usize },
    #[error("{count} facets exceed the facet-subset cap of {cap}")]
    FacetCapExceeded { count: usize, cap: usize },
    #[error("{n} vertices exceed the labelling-search cap of {cap}")]
    LabellingCapExceeded { n: usize, cap: usize },
    #[error("invalid labelling: {0}")]
    InvalidLabelling(String),
    #[error("length mismatch: expected {expected}, got {got}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("exponent must be at least 1")]
    ZeroExponent,
    #[error("a component on the full vertex set gives the zero prime ideal")]
    FullFacetComponent,
    #[error("facets {0} and {1} are comparable")]
    ComparableFacets(String, String),
    #[error("invalid field: {0}")]
    InvalidField(String),
    #[error("negative support {face} is not a face of the complex")]
    NegativeSupportNotFace { face: String },
    #[error("facet pair {g1}, {g2} shares too many vertices: |G1 ∩ G2| must be at most dim - 1")]
    FacetPairTooClose { g1: String, g2: String },
    #[error("the strict homogeneous system is feasible, no certificate exists")]
    SystemFeasible,
    #[error("certificate sums do not match")]
    CertificateMismatch,
    #[error("the complex is not flag")]
    NotFlag,
    #[error("routes disagree: {0}")]
    RouteDisagreement(String),
    #[error("invalid input: {0}")]
    InvalidInput(String),
}

pub type Result<T> = std::result::Result<T, Error>;
