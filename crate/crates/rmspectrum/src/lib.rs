//! Weight spectra of Reed-Muller codes via Boolean-function
//! concatenation.
//!
//! The crate provides, bottom to top:
//!
//! - [`boolfn`]: truth tables, algebraic normal form, degree, weight and
//!   the `f || g` concatenation operators;
//! - [`formulas`]: closed-form Hamming weights for XOR-sums of two and
//!   three monomials, cross-validated against a brute-force oracle;
//! - [`constructions`]: four-block codeword constructions for RM(6,12)
//!   and its generalization, plus a regression catalog of explicit
//!   witness functions;
//! - [`spectrum`]: the predicted weight spectrum of RM(m-6,m), achieved
//!   sets assembled from constructions, low-weight witness generators and
//!   the exhaustive enumeration of the generalized construction;
//! - [`verify`]: the exhaustive and catalog checks wired into the
//!   `rmspectrum verify` command.
//!
//! A narrative guide with runnable examples lives in `book/`; its code
//! snippets are compiled and run as doc-tests of this crate.

pub mod boolfn;
pub mod constructions;
pub mod error;
pub mod formulas;
pub mod rng;
pub mod spectrum;
pub mod verify;

pub use error::{Error, Result};

// Keep every code snippet in the guide compiling and passing: each
// chapter is included here as a doc-test-only module.
#[cfg(doctest)]
mod book {
    macro_rules! chapter {
        ($name:ident, $path:literal) => {
            #[doc = include_str!($path)]
            #[allow(unused)]
            mod $name {}
        };
    }

    chapter!(introduction, "../../../book/src/introduction.md");
    chapter!(boolean_functions, "../../../book/src/boolean-functions.md");
    chapter!(concatenation, "../../../book/src/concatenation.md");
    chapter!(weight_formulas, "../../../book/src/weight-formulas.md");
    chapter!(constructions, "../../../book/src/constructions.md");
    chapter!(spectrum, "../../../book/src/spectrum.md");
    chapter!(enumeration, "../../../book/src/enumeration.md");
}
