use crate::boolfn::{Anf, Monomial, MAX_VARS};
use crate::error::{Error, Result};
use std::fmt;

/// Dense truth table of an `n`-variable Boolean function: `2^n` bits,
/// where the point `(x1, ..., xn)` lives at index `sum xk * 2^(k-1)`
/// (`x1` least significant). The bit vector of a truth table is exactly
/// the Reed-Muller codeword of the function.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TruthTable {
    n: usize,
    words: Vec<u64>,
}

fn word_len(n: usize) -> usize {
    if n >= 6 {
        1 << (n - 6)
    } else {
        1
    }
}

/// Mask of the bits actually used in the last word (all of it for n >= 6).
fn tail_mask(n: usize) -> u64 {
    if n >= 6 {
        u64::MAX
    } else {
        (1u64 << (1 << n)) - 1
    }
}

impl TruthTable {
    /// The all-zero table (the zero codeword).
    pub fn zero(n: usize) -> Self {
        assert!(n <= MAX_VARS, "at most {MAX_VARS} variables supported");
        TruthTable { n, words: vec![0; word_len(n)] }
    }

    /// The all-ones table (the constant-1 codeword).
    pub fn ones(n: usize) -> Self {
        let mut t = TruthTable::zero(n);
        for w in &mut t.words {
            *w = u64::MAX;
        }
        *t.words.last_mut().unwrap() &= tail_mask(n);
        t
    }

    /// Table of a single monomial: 1 exactly on points containing the
    /// whole support. Weight is `2^(n - degree)`.
    pub fn of_monomial(m: &Monomial) -> Self {
        let mut t = TruthTable::zero(m.var_count());
        let mask = m.mask();
        for idx in 0..(1u32 << m.var_count()) {
            if idx & mask == mask {
                t.set(idx as usize, true);
            }
        }
        t
    }

    pub fn from_fn(n: usize, f: impl Fn(u32) -> bool) -> Self {
        let mut t = TruthTable::zero(n);
        for idx in 0..(1u32 << n) {
            if f(idx) {
                t.set(idx as usize, true);
            }
        }
        t
    }

    pub fn var_count(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        1 << self.n
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn get(&self, idx: usize) -> bool {
        debug_assert!(idx < self.len());
        self.words[idx >> 6] >> (idx & 63) & 1 == 1
    }

    pub fn set(&mut self, idx: usize, value: bool) {
        debug_assert!(idx < self.len());
        if value {
            self.words[idx >> 6] |= 1 << (idx & 63);
        } else {
            self.words[idx >> 6] &= !(1 << (idx & 63));
        }
    }

    pub(crate) fn words(&self) -> &[u64] {
        &self.words
    }

    /// Hamming weight: the number of ones.
    pub fn weight(&self) -> u64 {
        self.words.iter().map(|w| w.count_ones() as u64).sum()
    }

    /// Bitwise XOR (the GF(2) sum f + g). `weight(f.xor(g))` is the
    /// Hamming distance between f and g.
    pub fn xor(&self, other: &TruthTable) -> Result<TruthTable> {
        if self.n != other.n {
            return Err(Error::VarCountMismatch { left: self.n, right: other.n });
        }
        let words = self.words.iter().zip(&other.words).map(|(a, b)| a ^ b).collect();
        Ok(TruthTable { n: self.n, words })
    }

    /// Bitwise AND (support intersection).
    pub fn and(&self, other: &TruthTable) -> Result<TruthTable> {
        if self.n != other.n {
            return Err(Error::VarCountMismatch { left: self.n, right: other.n });
        }
        let words = self.words.iter().zip(&other.words).map(|(a, b)| a & b).collect();
        Ok(TruthTable { n: self.n, words })
    }

    /// Flips every bit; the weight becomes `2^n - weight(self)`.
    pub fn complement(&self) -> TruthTable {
        let mut words: Vec<u64> = self.words.iter().map(|w| !w).collect();
        *words.last_mut().unwrap() &= tail_mask(self.n);
        TruthTable { n: self.n, words }
    }

    /// Concatenation `self || other`: an (n+1)-variable table whose lower
    /// half is `self` and upper half is `other` (the new variable is the
    /// most significant index bit). Weights add.
    pub fn concat(&self, other: &TruthTable) -> Result<TruthTable> {
        if self.n != other.n {
            return Err(Error::VarCountMismatch { left: self.n, right: other.n });
        }
        let n = self.n;
        if n >= 6 {
            let mut words = Vec::with_capacity(2 * self.words.len());
            words.extend_from_slice(&self.words);
            words.extend_from_slice(&other.words);
            Ok(TruthTable { n: n + 1, words })
        } else {
            let half = 1u64 << n;
            let word = self.words[0] | (other.words[0] << half);
            Ok(TruthTable { n: n + 1, words: vec![word] })
        }
    }

    /// Four-block concatenation `f1 || f2 || f3 || f4`, an (n+2)-variable
    /// table. Equal to `f1.concat(f2)` concatenated with `f3.concat(f4)`.
    pub fn concat4(
        f1: &TruthTable,
        f2: &TruthTable,
        f3: &TruthTable,
        f4: &TruthTable,
    ) -> Result<TruthTable> {
        f1.concat(f2)?.concat(&f3.concat(f4)?)
    }

    /// Splits an n-variable table into its 2^k blocks of n-k variables
    /// (inverse of repeated concatenation). `k` must satisfy `k <= n`.
    pub fn blocks(&self, k: usize) -> Vec<TruthTable> {
        assert!(k <= self.n);
        let sub = self.n - k;
        let sub_len = 1usize << sub;
        (0..1usize << k)
            .map(|b| {
                let mut t = TruthTable::zero(sub);
                for i in 0..sub_len {
                    t.set(i, self.get(b * sub_len + i));
                }
                t
            })
            .collect()
    }

    /// Algebraic degree, or `None` for the zero function. A table has odd
    /// weight exactly when its degree is `n`.
    pub fn degree(&self) -> Option<usize> {
        self.to_anf().degree()
    }

    /// ANF whose evaluation reproduces this table (inverse Mobius
    /// transform; exact round trip in both directions).
    pub fn to_anf(&self) -> Anf {
        let mut words = self.words.clone();
        mobius_in_place(&mut words, self.n);
        let mut masks = Vec::new();
        for idx in 0..self.len() {
            if words[idx >> 6] >> (idx & 63) & 1 == 1 {
                masks.push(idx as u32);
            }
        }
        Anf::from_masks_unchecked(masks, self.n)
    }

    pub(crate) fn from_anf_words(mut words: Vec<u64>, n: usize) -> TruthTable {
        mobius_in_place(&mut words, n);
        TruthTable { n, words }
    }

    /// Lowercase-hex serialization: 2 hex chars per 8 table bits, byte 0
    /// first, bit 0 of byte 0 = table index 0. Tables shorter than 8 bits
    /// pad the unused high bits of the single byte with zeros.
    pub fn to_hex(&self) -> String {
        let bytes = self.len().div_ceil(8);
        let mut s = String::with_capacity(2 * bytes);
        for b in 0..bytes {
            let byte = (self.words[b / 8] >> (8 * (b % 8))) as u8;
            s.push_str(&format!("{byte:02x}"));
        }
        s
    }

    /// Parses the serialization produced by [`TruthTable::to_hex`].
    pub fn from_hex(n: usize, hex: &str) -> Result<TruthTable> {
        assert!(n <= MAX_VARS);
        let expected = (1usize << n).div_ceil(8) * 2;
        if hex.len() != expected {
            return Err(Error::Syntax {
                position: 1,
                message: format!("expected {expected} hex chars for n={n}, got {}", hex.len()),
            });
        }
        let mut t = TruthTable::zero(n);
        for (b, chunk) in hex.as_bytes().chunks(2).enumerate() {
            let s = std::str::from_utf8(chunk).unwrap();
            let byte = u8::from_str_radix(s, 16).map_err(|_| Error::Syntax {
                position: 2 * b + 1,
                message: format!("invalid hex byte {s:?}"),
            })?;
            t.words[b / 8] |= (byte as u64) << (8 * (b % 8));
        }
        if t.words.last().unwrap() & !tail_mask(n) != 0 {
            return Err(Error::Syntax {
                position: expected,
                message: "nonzero padding bits beyond table length".into(),
            });
        }
        Ok(t)
    }
}

impl fmt::Display for TruthTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_hex())
    }
}

/// In-place GF(2) Mobius transform over the subset lattice. Self-inverse,
/// so the same routine maps ANF coefficients to table values and back.
pub(crate) fn mobius_in_place(words: &mut [u64], n: usize) {
    // Strides inside a word use masked shifts; strides of a word or more
    // XOR whole words.
    const MASKS: [u64; 6] = [
        0x5555_5555_5555_5555,
        0x3333_3333_3333_3333,
        0x0f0f_0f0f_0f0f_0f0f,
        0x00ff_00ff_00ff_00ff,
        0x0000_ffff_0000_ffff,
        0x0000_0000_ffff_ffff,
    ];
    for (j, mask) in MASKS.iter().enumerate().take(n.min(6)) {
        let shift = 1 << j;
        for w in words.iter_mut() {
            *w ^= (*w & mask) << shift;
        }
    }
    for j in 6..n {
        let stride = 1 << (j - 6);
        let mut i = 0;
        while i < words.len() {
            for k in 0..stride {
                words[i + stride + k] ^= words[i + k];
            }
            i += 2 * stride;
        }
    }
}
