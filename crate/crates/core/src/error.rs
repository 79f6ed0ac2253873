use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupError {
    #[error("n must be at least 2, got {0}")]
    InvalidN(u32),
    #[error("cannot parse group element `{0}`")]
    ParseElement(String),
    #[error("exponent {k} out of range, expected 0 <= k < {two_n}")]
    ExponentOutOfRange { k: u32, two_n: u32 },
    #[error("cannot parse subgroup `{0}`, expected `<g1, g2, ...>`")]
    ParseSubgroup(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RepError {
    #[error("fixed-space dimension of {subgroup} varies across the Galois orbit of {irrep}")]
    GaloisInconsistency { irrep: String, subgroup: String },
    #[error("unknown irreducible representation `{0}`")]
    UnknownIrrep(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ActionError {
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error("expected 5 entries, got {0}")]
    WrongLength(usize),
    #[error("entry {position} has order {order}, expected 2 or n")]
    WrongOrder { position: usize, order: u32 },
    #[error("entry orders {orders:?} are not a permutation of (2,2,2,2,n)")]
    WrongPeriods { orders: Vec<u32> },
    #[error("product of the entries is {product}, not 1")]
    ProductNotOne { product: String },
    #[error("entries generate {generated}, not the whole group")]
    NotGenerating { generated: String },
    #[error("Riemann-Hurwitz genus is not a non-negative integer (2g = {twice_genus})")]
    NonIntegerGenus { twice_genus: String },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DecompositionError {
    #[error(transparent)]
    Rep(#[from] RepError),
    #[error(transparent)]
    Action(#[from] ActionError),
    #[error("dimension of the factor on {irrep} is not a non-negative integer ({detail})")]
    FractionalDimension { irrep: String, detail: String },
    #[error("consistency failure: {0}")]
    ConsistencyFailure(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ShimuraError {
    #[error("multiplicity of {irrep} in the analytic representation is not an integer")]
    NonIntegerMultiplicity { irrep: String },
    #[error("Serre sum {sum} is not divisible by 2|G| = {divisor}")]
    DivisibilityFailure { sum: i128, divisor: i128 },
    #[error("label {label} is not valid for n = {n}")]
    InvalidLabel { label: String, n: u32 },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ModelError {
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    #[error("label {label} is not valid for n = {n}")]
    InvalidLabel { label: String, n: u32 },
    #[error("degenerate branching: {0}")]
    DegenerateBranching(String),
    #[error("cannot parse parameter `{0}`")]
    ParseParam(String),
}
