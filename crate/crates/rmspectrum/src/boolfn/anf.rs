use crate::boolfn::{Monomial, TruthTable, MAX_VARS};
use crate::error::{Error, Result};
use std::collections::BTreeSet;
use std::fmt;

/// A Boolean function in algebraic normal form: an XOR of distinct
/// monomials over a common ambient variable count. Canonical by
/// construction — inserting a term twice cancels it.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Anf {
    n: usize,
    terms: BTreeSet<u32>,
}

impl Anf {
    /// The zero function (no terms).
    pub fn zero(n: usize) -> Self {
        assert!(n <= MAX_VARS, "at most {MAX_VARS} variables supported");
        Anf { n, terms: BTreeSet::new() }
    }

    /// The constant-1 function.
    pub fn one(n: usize) -> Self {
        let mut f = Anf::zero(n);
        f.toggle_mask(0);
        f
    }

    /// XOR-sum of the given monomials (duplicates cancel pairwise).
    pub fn from_monomials(monomials: &[Monomial], n: usize) -> Result<Self> {
        let mut f = Anf::zero(n);
        for m in monomials {
            if m.var_count() != n {
                return Err(Error::VarCountMismatch { left: m.var_count(), right: n });
            }
            f.toggle_mask(m.mask());
        }
        Ok(f)
    }

    /// Single monomial as a function.
    pub fn monomial(m: &Monomial) -> Self {
        let mut f = Anf::zero(m.var_count());
        f.toggle_mask(m.mask());
        f
    }

    pub(crate) fn from_masks_unchecked(masks: Vec<u32>, n: usize) -> Self {
        Anf { n, terms: masks.into_iter().collect() }
    }

    pub(crate) fn toggle_mask(&mut self, mask: u32) {
        if !self.terms.remove(&mask) {
            self.terms.insert(mask);
        }
    }

    pub fn var_count(&self) -> usize {
        self.n
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms as monomials, in canonical (mask-ascending) order.
    pub fn terms(&self) -> impl Iterator<Item = Monomial> + '_ {
        self.terms.iter().map(|&m| Monomial::from_mask(m, self.n))
    }

    /// Algebraic degree: the largest term degree, `Some(0)` for the
    /// constant 1, `None` for the zero function (conventionally minus
    /// infinity, so every `degree <= r` bound admits it).
    pub fn degree(&self) -> Option<usize> {
        self.terms.iter().map(|m| m.count_ones() as usize).max()
    }

    /// True when the degree is at most `r` (the zero function always is).
    pub fn degree_at_most(&self, r: usize) -> bool {
        self.degree().is_none_or(|d| d <= r)
    }

    /// GF(2) sum.
    pub fn xor(&self, other: &Anf) -> Result<Anf> {
        if self.n != other.n {
            return Err(Error::VarCountMismatch { left: self.n, right: other.n });
        }
        let mut out = self.clone();
        for &m in &other.terms {
            out.toggle_mask(m);
        }
        Ok(out)
    }

    /// GF(2) product, distributing terms and unioning supports.
    pub fn mul(&self, other: &Anf) -> Result<Anf> {
        if self.n != other.n {
            return Err(Error::VarCountMismatch { left: self.n, right: other.n });
        }
        let mut out = Anf::zero(self.n);
        for &a in &self.terms {
            for &b in &other.terms {
                out.toggle_mask(a | b);
            }
        }
        Ok(out)
    }

    /// Adds the constant 1 (complements the function).
    pub fn complement(&self) -> Anf {
        let mut out = self.clone();
        out.toggle_mask(0);
        out
    }

    /// Reinterprets the function over a larger ambient variable set.
    pub fn lift(&self, n: usize) -> Anf {
        assert!(n >= self.n && n <= MAX_VARS);
        Anf { n, terms: self.terms.clone() }
    }

    /// Multiplies by the single variable `xv` (1-based).
    pub fn mul_var(&self, v: usize) -> Result<Anf> {
        if v == 0 || v > self.n {
            return Err(Error::VarOutOfRange { index: v, n: self.n });
        }
        let bit = 1u32 << (v - 1);
        let mut out = Anf::zero(self.n);
        for &m in &self.terms {
            out.toggle_mask(m | bit);
        }
        Ok(out)
    }

    /// Concatenation `self || other` over a fresh variable `x_{n+1}`:
    /// `(x_{n+1} + 1) self + x_{n+1} other = self + x_{n+1} (self + other)`.
    pub fn concat(&self, other: &Anf) -> Result<Anf> {
        if self.n != other.n {
            return Err(Error::VarCountMismatch { left: self.n, right: other.n });
        }
        let lifted = self.lift(self.n + 1);
        let sum = self.xor(other)?.lift(self.n + 1);
        lifted.xor(&sum.mul_var(self.n + 1)?)
    }

    /// Four-block concatenation `f1 || f2 || f3 || f4` over two fresh
    /// variables.
    pub fn concat4(f1: &Anf, f2: &Anf, f3: &Anf, f4: &Anf) -> Result<Anf> {
        f1.concat(f2)?.concat(&f3.concat(f4)?)
    }

    /// Evaluates at a point given as a bitmask (`x1` in bit 0).
    pub fn eval(&self, point: u32) -> bool {
        self.terms.iter().filter(|&&m| point & m == m).count() % 2 == 1
    }

    /// Truth table via the fast GF(2) Mobius (zeta) transform. Agrees
    /// with pointwise [`Anf::eval`] on every input.
    pub fn truth_table(&self) -> TruthTable {
        let words_len = if self.n >= 6 { 1 << (self.n - 6) } else { 1 };
        let mut words = vec![0u64; words_len];
        for &m in &self.terms {
            words[(m >> 6) as usize] |= 1u64 << (m & 63);
        }
        TruthTable::from_anf_words(words, self.n)
    }

    /// Shorthand for `truth_table().weight()`.
    pub fn weight(&self) -> u64 {
        self.truth_table().weight()
    }
}

impl fmt::Display for Anf {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for m in self.terms() {
            if !first {
                write!(f, " + ")?;
            }
            write!(f, "{m}")?;
            first = false;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::boolfn::parse_anf;

    #[test]
    fn degree_conventions() {
        assert_eq!(Anf::zero(5).degree(), None);
        assert_eq!(Anf::one(5).degree(), Some(0));
        assert!(Anf::zero(5).degree_at_most(0));
        let f = parse_anf("x1*x2 + x3", 3).unwrap();
        assert_eq!(f.degree(), Some(2));
    }

    #[test]
    fn xor_cancels() {
        let f = parse_anf("x1*x2 + x3", 4).unwrap();
        assert!(f.xor(&f).unwrap().is_zero());
        assert_eq!(f.xor(&Anf::zero(4)).unwrap(), f);
    }

    #[test]
    fn mul_distributes_and_cancels() {
        // (x1 + x2)(x1 + x2) = x1 + x2 over GF(2).
        let f = parse_anf("x1 + x2", 2).unwrap();
        assert_eq!(f.mul(&f).unwrap(), f);
        // (x1 + x2)(x1 + 1): the two x1 terms cancel.
        let g = parse_anf("x1 + 1", 2).unwrap();
        assert_eq!(f.mul(&g).unwrap(), parse_anf("x1*x2 + x2", 2).unwrap());
    }

    #[test]
    fn concat_matches_table_concat() {
        let f = parse_anf("x1*x2 + x3", 3).unwrap();
        let g = parse_anf("x2 + 1", 3).unwrap();
        let via_anf = f.concat(&g).unwrap().truth_table();
        let via_table = f.truth_table().concat(&g.truth_table()).unwrap();
        assert_eq!(via_anf, via_table);
        // f || f does not depend on the fresh variable.
        let ff = f.concat(&f).unwrap();
        assert_eq!(ff, f.lift(4));
    }

    #[test]
    fn display_canonical() {
        let f = parse_anf("x2 + x1*x2 + 1", 2).unwrap();
        assert_eq!(f.to_string(), "1 + x2 + x1*x2");
        assert_eq!(Anf::zero(2).to_string(), "0");
    }
}
