//! Core Boolean-function algebra: monomials, algebraic normal form,
//! truth tables, and the concatenation operators that build longer
//! Reed-Muller codewords out of shorter ones.

mod anf;
mod monomial;
mod parse;
mod table;

pub use anf::Anf;
pub use monomial::{Monomial, MAX_VARS};
pub use parse::parse_anf;
pub use table::TruthTable;
