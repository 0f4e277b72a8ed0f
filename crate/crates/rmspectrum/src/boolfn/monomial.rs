use crate::error::{Error, Result};
use std::fmt;

/// Largest supported ambient variable count. Truth tables are dense
/// (`2^n` bits), so this bounds allocations to 2 MiB.
pub const MAX_VARS: usize = 24;

/// A product of distinct variables over an ambient set `{x1, ..., xn}`,
/// stored as a bitmask with `x1` in bit 0. The empty product is the
/// constant 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial {
    mask: u32,
    n: usize,
}

impl Monomial {
    /// Builds a monomial from 1-based variable indices. Repeated indices
    /// collapse (x^2 = x over GF(2)).
    pub fn new(vars: &[usize], n: usize) -> Result<Self> {
        assert!(n <= MAX_VARS, "at most {MAX_VARS} variables supported");
        let mut mask = 0u32;
        for &v in vars {
            if v == 0 || v > n {
                return Err(Error::VarOutOfRange { index: v, n });
            }
            mask |= 1 << (v - 1);
        }
        Ok(Monomial { mask, n })
    }

    /// The constant-1 monomial (empty product).
    pub fn one(n: usize) -> Self {
        assert!(n <= MAX_VARS);
        Monomial { mask: 0, n }
    }

    pub(crate) fn from_mask(mask: u32, n: usize) -> Self {
        debug_assert!(n <= MAX_VARS && (mask >> n) == 0);
        Monomial { mask, n }
    }

    /// Support as a bitmask with `x1` in bit 0.
    pub fn mask(&self) -> u32 {
        self.mask
    }

    pub fn var_count(&self) -> usize {
        self.n
    }

    /// Number of variables in the product.
    pub fn degree(&self) -> usize {
        self.mask.count_ones() as usize
    }

    /// 1-based variable indices, ascending.
    pub fn vars(&self) -> Vec<usize> {
        (1..=self.n).filter(|v| self.mask >> (v - 1) & 1 == 1).collect()
    }

    pub fn contains(&self, var: usize) -> bool {
        var >= 1 && var <= self.n && self.mask >> (var - 1) & 1 == 1
    }

    /// Cardinality of the support intersection.
    pub fn intersection_size(&self, other: &Monomial) -> usize {
        (self.mask & other.mask).count_ones() as usize
    }

    /// Evaluates the product at a point given as a bitmask (`x1` in bit 0).
    pub fn eval(&self, point: u32) -> bool {
        point & self.mask == self.mask
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.mask == 0 {
            return write!(f, "1");
        }
        let mut first = true;
        for v in self.vars() {
            if !first {
                write!(f, "*")?;
            }
            write!(f, "x{v}")?;
            first = false;
        }
        Ok(())
    }
}
