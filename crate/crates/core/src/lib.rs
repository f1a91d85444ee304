//! Finite rings presented as algebras over `Z_n`: Frobenius functionals,
//! socles, skew-polynomial quotients and ring-linear codes.

pub mod codes;
pub mod corpus;
pub mod error;
pub mod finring;
pub mod format;
pub mod frobenius;
pub mod skewpoly;
pub mod znmod;

pub use error::{Error, Result};

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/rings.md")]
    mod rings {}
    #[doc = include_str!("../../../book/src/frobenius.md")]
    mod frobenius {}
    #[doc = include_str!("../../../book/src/skew.md")]
    mod skew {}
    #[doc = include_str!("../../../book/src/codes.md")]
    mod codes {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
