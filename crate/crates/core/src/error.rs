use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("argument {value} outside the domain {domain}")]
    Domain { value: f64, domain: &'static str },

    #[error("harmonic index out of range: l = {l}, m = {m}")]
    HarmonicIndex { l: i64, m: i64 },

    #[error("coefficient index l = {l} exceeds 2j = {twice_j}")]
    CoefficientIndex { l: usize, twice_j: u32 },

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("band limit {lmax} exceeds 2j = {twice_j}")]
    BandLimit { lmax: usize, twice_j: u32 },

    #[error("quadrature exact through degree {exact} but degree {required} is required")]
    QuadratureOrder { exact: usize, required: usize },

    #[error("not a unit vector: |n| = {norm}")]
    NotUnit { norm: f64 },

    #[error("cannot parse spin quantum number from {0:?}")]
    ParseSpin(String),
}

pub type Result<T> = std::result::Result<T, Error>;
