//! Projection decoding for binary linear codes that project onto an additive
//! code over GF(4).
//!
//! A binary word of length `4m` is read as a 4×m array whose rows are
//! labelled `0, 1, ω, ω̄`. The inner product of each column with the labels
//! gives a word over GF(4), its *projection*. Codes built by Constructions
//! O and E project onto a short GF(4) code with uniform column parity, and
//! the decoder in [`decoder`] uses that structure to correct up to three
//! bit errors with a handful of GF(4) syndrome computations.
//!
//! The crate ships the two GF(4) codes of lengths 9 and 10
//! ([`quaternary::c4_9`], [`quaternary::c4_10`]) from which the optimal
//! binary `[36, 19, 8]` and `[40, 22, 8]` codes are built:
//!
//! ```
//! use projdec::{projection::{construct, Variant}, quaternary::c4_9};
//!
//! let code = construct(&c4_9(), Variant::O).unwrap();
//! assert_eq!((code.n(), code.k()), (36, 19));
//! ```

pub mod bitlin;
pub mod decoder;
pub mod gf4;
pub mod golden;
pub mod projection;
pub mod quaternary;

mod error;

pub use error::Error;

// The guide's and the README's Rust snippets run as doctests.
#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/gf4.md")]
    mod gf4 {}
    #[doc = include_str!("../../../book/src/projection.md")]
    mod projection {}
    #[doc = include_str!("../../../book/src/constructions.md")]
    mod constructions {}
    #[doc = include_str!("../../../book/src/decoding.md")]
    mod decoding {}
    #[doc = include_str!("../../../book/src/verification.md")]
    mod verification {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
    #[doc = include_str!("../../../README.md")]
    mod readme {}
}
