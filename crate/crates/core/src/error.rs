use thiserror::Error;

use crate::znmod::ModElement;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("enumeration of {size} elements exceeds the cap of {cap}")]
    EnumerationTooLarge { size: u128, cap: usize },

    #[error("invalid module shape: {0}")]
    InvalidShape(String),

    #[error("element {element:?} does not belong to the shape with orders {orders:?}")]
    ShapeMismatch { element: Vec<u64>, orders: Vec<u64> },

    #[error("multiplication table is not well defined at basis pair ({i}, {j})")]
    IllDefinedProduct { i: usize, j: usize },

    #[error("multiplication is not associative on basis triple ({0}, {1}, {2})")]
    NotAssociative(usize, usize, usize),

    #[error("unit law fails for basis element {0}")]
    UnitLaw(usize),

    #[error("additive order of the identity is {found}, expected the characteristic {expected}")]
    Characteristic { expected: u64, found: u64 },

    #[error("invalid group table: {0}")]
    InvalidGroup(String),

    #[error("invalid automorphism: {0}")]
    InvalidAutomorphism(String),

    #[error("polynomial must be monic of degree at least 1")]
    NotMonic,

    #[error("constant coefficient {0:?} is not a unit")]
    ConstantNotUnit(ModElement),

    #[error("S f is not a two-sided ideal: {0}")]
    NotTwoSided(String),

    #[error("operation requires f = x^m - 1 with sigma^m = id")]
    UnsupportedModulus,

    #[error("bilinear form is degenerate")]
    DegenerateForm,

    #[error("linear form is not well defined on the shape")]
    InvalidLinearForm,

    #[error("code sides do not match: {0}")]
    SideMismatch(String),

    #[error("MacWilliams transform is not integral: coefficient {coefficient} is not divisible by {divisor}")]
    NotIntegral { coefficient: i128, divisor: u128 },

    #[error("ring is not a group algebra")]
    NotGroupAlgebra,

    #[error("internal consistency check failed: {0}")]
    Internal(String),

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse { line: usize, column: usize, message: String },

    #[error("{0}")]
    Invalid(String),
}
