//! Codeword constructions built from four-block concatenation.
//!
//! The workhorse shape is `g0 || g1 || g2 || (g1 + g2 + g3)`: expanding
//! the concatenation variables shows it equals
//! `(x_{n+1}+1)(x_{n+2}+1) g0 + x_{n+1} g1 + x_{n+2} g2 + x_{n+1} x_{n+2} g3`,
//! so bounding the block degrees bounds the output degree, while the
//! output weight is just the sum of the four block weights.
//!
//! The explicit witness functions exercised by the regression suite live
//! in [`witness_catalog`]; each entry records its expected block weights
//! and total weight.

use crate::boolfn::{Anf, Monomial};
use crate::error::{Error, Result};
use serde_json::json;

/// Degree-bounded four-block concatenation
/// `g0 || g1 || g2 || (g1 + g2 + g3)` over two fresh variables.
///
/// Requires `deg(g0), deg(g3) <= max_degree - 2` and
/// `deg(g1), deg(g2) <= max_degree - 1`; the result then has degree at
/// most `max_degree` (asserted via an independent ANF reconstruction).
pub fn four_block_concat(
    g0: &Anf,
    g1: &Anf,
    g2: &Anf,
    g3: &Anf,
    max_degree: usize,
) -> Result<Anf> {
    if max_degree < 2 {
        return Err(Error::Unsupported(format!("need max_degree >= 2, got {max_degree}")));
    }
    for (g, limit) in [
        (g0, max_degree - 2),
        (g3, max_degree - 2),
        (g1, max_degree - 1),
        (g2, max_degree - 1),
    ] {
        if !g.degree_at_most(limit) {
            return Err(Error::DegreeTooHigh { degree: g.degree().unwrap(), limit });
        }
    }
    let last = g1.xor(g2)?.xor(g3)?;
    let out = Anf::concat4(g0, g1, g2, &last)?;
    assert!(out.degree_at_most(max_degree), "four-block degree bound violated");
    Ok(out)
}

/// Codeword `0 || (g1+a1) || (g2+a2) || (g1+g2+a3)` over `n+2`
/// variables, for arbitrary blocks over `n` variables.
pub fn zero_block_codeword(g1: &Anf, g2: &Anf, flips: (bool, bool, bool)) -> Result<Anf> {
    let n = g1.var_count();
    let flip = |g: &Anf, bit: bool| if bit { g.complement() } else { g.clone() };
    let b1 = flip(g1, flips.0);
    let b2 = flip(g2, flips.1);
    let b3 = flip(&g1.xor(g2)?, flips.2);
    Anf::concat4(&Anf::zero(n), &b1, &b2, &b3)
}

/// The two three-monomial blocks sharing a pair:
/// `g1 = x1..x5 + x_A + x_B` and `g2 = x1..x5 + x_A + x_C` over 10
/// variables. Their sum collapses to `x_B + x_C`.
pub fn shared_triple_blocks(a: &Monomial, b: &Monomial, c: &Monomial) -> Result<(Anf, Anf)> {
    for m in [a, b, c] {
        if m.var_count() != 10 {
            return Err(Error::VarCountMismatch { left: m.var_count(), right: 10 });
        }
        if m.degree() != 5 {
            return Err(Error::DegreeMismatch { left: m.degree(), right: 5 });
        }
    }
    let x = Monomial::new(&[1, 2, 3, 4, 5], 10).unwrap();
    let g1 = Anf::from_monomials(&[x, *a, *b], 10)?;
    let g2 = Anf::from_monomials(&[x, *a, *c], 10)?;
    Ok((g1, g2))
}

/// Codeword `0 || g1 || g2 || (g1+g2)` over 12 variables from the
/// shared-triple blocks of `(A, B, C)`. Weight is
/// `wt(g1) + wt(g2) + wt(x_B + x_C)`.
pub fn shared_triple_codeword(a: &Monomial, b: &Monomial, c: &Monomial) -> Result<Anf> {
    shared_triple_flipped(a, b, c, (false, false, false))
}

/// Shared-triple codeword with per-block constant flips:
/// `0 || (g1+a1) || (g2+a2) || (g1+g2+a3)`. A flipped block contributes
/// `1024 - w` instead of `w`.
pub fn shared_triple_flipped(
    a: &Monomial,
    b: &Monomial,
    c: &Monomial,
    flips: (bool, bool, bool),
) -> Result<Anf> {
    let (g1, g2) = shared_triple_blocks(a, b, c)?;
    let out = zero_block_codeword(&g1, &g2, flips)?;
    assert!(out.degree_at_most(6));
    Ok(out)
}

/// The generalized construction over `2m` base variables:
/// `g1 = x1..xm + x_M1 + x_M2`, `g2 = x1..xm + x_M3 + x_M4`, codeword
/// `0 || (g1+a1) || g2 || (g1+g2+a2)` over `2m+2` variables, of degree
/// at most `m+1`. The sum `g1+g2` collapses to
/// `x_M1 + x_M2 + x_M3 + x_M4`.
pub fn general_codeword(
    m: usize,
    supports: &[Monomial; 4],
    a1: bool,
    a2: bool,
) -> Result<Anf> {
    if m < 2 {
        return Err(Error::Unsupported(format!("need m >= 2, got {m}")));
    }
    let n = 2 * m;
    for s in supports {
        if s.var_count() != n {
            return Err(Error::VarCountMismatch { left: s.var_count(), right: n });
        }
        if s.degree() != m {
            return Err(Error::DegreeMismatch { left: s.degree(), right: m });
        }
    }
    let x = Monomial::new(&(1..=m).collect::<Vec<_>>(), n).unwrap();
    let g1 = Anf::from_monomials(&[x, supports[0], supports[1]], n)?;
    let g2 = Anf::from_monomials(&[x, supports[2], supports[3]], n)?;
    let out = zero_block_codeword(&g1, &g2, (a1, false, a2))?;
    assert!(out.degree_at_most(m + 1), "general construction degree bound violated");
    Ok(out)
}

/// One explicit witness: two blocks over 10 variables given as lists of
/// 1-based index sets, the flip bits, the expected weights of the three
/// nonzero blocks (after flips) and the expected total.
#[derive(Debug, Clone, Copy)]
pub struct WitnessEntry {
    pub name: &'static str,
    pub g1: &'static [&'static [usize]],
    pub g2: &'static [&'static [usize]],
    pub flips: (bool, bool, bool),
    pub block_weights: (u64, u64, u64),
    pub weight: u64,
}

impl WitnessEntry {
    fn anf(terms: &[&[usize]]) -> Anf {
        let monomials: Vec<Monomial> =
            terms.iter().map(|t| Monomial::new(t, 10).unwrap()).collect();
        Anf::from_monomials(&monomials, 10).unwrap()
    }

    pub fn g1_anf(&self) -> Anf {
        Self::anf(self.g1)
    }

    pub fn g2_anf(&self) -> Anf {
        Self::anf(self.g2)
    }

    /// Builds the 12-variable codeword `0||(g1+a1)||(g2+a2)||(g1+g2+a3)`.
    pub fn codeword(&self) -> Anf {
        zero_block_codeword(&self.g1_anf(), &self.g2_anf(), self.flips).unwrap()
    }
}

const X: &[usize] = &[1, 2, 3, 4, 5];
/// Shared monomial of the ten-entry family and both flip families.
const A67: &[usize] = &[1, 2, 3, 6, 7];
/// Third monomial of the weight-74 block.
const B8910: &[usize] = &[4, 5, 8, 9, 10];
/// Third monomial of the weight-72 block.
const B78910: &[usize] = &[1, 7, 8, 9, 10];

const G74: &[&[usize]] = &[X, A67, B8910];
const G72: &[&[usize]] = &[X, A67, B78910];

macro_rules! entries {
    ($($name:literal: $g1:expr, $g2:expr, ($f1:literal,$f2:literal,$f3:literal),
        ($w1:literal,$w2:literal,$w3:literal) => $total:literal;)*) => {
        &[$(WitnessEntry {
            name: $name,
            g1: $g1,
            g2: $g2,
            flips: ($f1 != 0, $f2 != 0, $f3 != 0),
            block_weights: ($w1, $w2, $w3),
            weight: $total,
        }),*]
    };
}

/// The regression catalog: every explicit construction whose weight the
/// library pins down exactly. Ranges covered: 154..=214 (center
/// weights, no flips), 1050..=1110 and 1056..=1116 (one block flipped).
pub fn witness_catalog() -> &'static [WitnessEntry] {
    entries![
        // Two two-monomial blocks sharing x1..x5.
        "w166": &[X, &[6,7,8,9,10]], &[X, &[1,2,6,7,8]], (0,0,0), (62,56,48) => 166;
        // Shared-triple blocks around A = {1,2,3,4,6}.
        "w158": &[X, &[1,2,3,4,6], &[1,2,3,4,7]], &[X, &[1,2,3,4,6], &[5,6,8,9,10]],
            (0,0,0), (32,64,62) => 158;
        "w154": &[X, &[1,2,3,4,6], &[1,2,3,4,7]], &[X, &[1,2,3,4,6], &[5,7,8,9,10]],
            (0,0,0), (32,62,60) => 154;
        // The weight-74 block against ten choices of the third monomial.
        "w162": G74, &[X, A67, &[1,2,3,4,5]], (0,0,0), (74,32,56) => 162;
        "w174": G74, &[X, A67, &[1,4,5,8,9]], (0,0,0), (74,68,32) => 174;
        "w178": G74, &[X, A67, &[1,2,3,4,8]], (0,0,0), (74,48,56) => 178;
        "w182": G74, &[X, A67, &[1,2,3,4,6]], (0,0,0), (74,48,60) => 182;
        "w186": G74, &[X, A67, &[1,2,3,8,9]], (0,0,0), (74,56,56) => 186;
        "w190": G74, &[X, A67, &[1,2,6,7,8]], (0,0,0), (74,56,60) => 190;
        "w194": G74, &[X, A67, &[1,2,4,5,6]], (0,0,0), (74,64,56) => 194;
        "w198": G74, &[X, A67, &[1,2,4,6,7]], (0,0,0), (74,64,60) => 198;
        "w202": G74, &[X, A67, &[1,4,6,7,8]], (0,0,0), (74,72,56) => 202;
        "w210": G74, &[X, A67, &[1,4,5,6,7]], (0,0,0), (74,80,56) => 210;
        // Blocks sharing only x1..x5; the last block has four monomials,
        // so its weight comes from the oracle, not a closed form.
        "w206": G74, &[X, &[1,6,8,9,10], B8910], (0,0,0), (74,76,56) => 206;
        "w214": G74, &[X, &[1,6,7,8,9], &[6,7,8,9,10]], (0,0,0), (74,62,78) => 214;
        // Weight-74 block complemented: totals 2 mod 4 above 1024.
        "w1050": G74, &[X, A67, &[1,4,5,8,9]], (1,0,0), (950,68,32) => 1050;
        "w1054": G74, &[X, A67, &[1,2,3,4,8]], (1,0,0), (950,48,56) => 1054;
        "w1058": G74, &[X, A67, &[1,2,3,4,6]], (1,0,0), (950,48,60) => 1058;
        "w1062": G74, &[X, A67, &[1,2,3,8,9]], (1,0,0), (950,56,56) => 1062;
        "w1066": G74, &[X, A67, &[1,2,6,7,8]], (1,0,0), (950,56,60) => 1066;
        "w1070": G74, &[X, A67, &[1,2,4,5,6]], (1,0,0), (950,64,56) => 1070;
        "w1074": G74, &[X, A67, &[1,2,4,6,7]], (1,0,0), (950,64,60) => 1074;
        "w1078": G74, &[X, A67, &[1,4,6,7,8]], (1,0,0), (950,72,56) => 1078;
        "w1086": G74, &[X, A67, &[1,4,5,6,7]], (1,0,0), (950,80,56) => 1086;
        "w1082": G74, &[X, A67, &[1,4,6,7,8]], (0,1,0), (74,952,56) => 1082;
        "w1090": G74, &[X, A67, &[1,2,3,4,8]], (0,0,1), (74,48,968) => 1090;
        "w1094": G74, &[X, A67, &[1,2,6,7,8]], (0,0,1), (74,56,964) => 1094;
        "w1098": G74, &[X, A67, &[1,2,3,8,9]], (0,1,0), (74,968,56) => 1098;
        "w1102": G74, &[X, A67, &[1,2,6,7,8]], (0,1,0), (74,968,60) => 1102;
        "w1106": G74, &[X, A67, &[1,2,3,4,8]], (0,1,0), (74,976,56) => 1106;
        "w1110": G74, &[X, A67, &[1,2,3,4,6]], (0,1,0), (74,976,60) => 1110;
        // Weight-72 block variants: totals 0 mod 4 above 1024.
        "w1056": G72, &[X, A67, &[1,2,3,4,7]], (1,0,0), (952,48,56) => 1056;
        "w1060": G72, &[X, A67, &[1,2,3,4,6]], (1,0,0), (952,48,60) => 1060;
        "w1064": G72, &[X, A67, &[1,2,4,5,8]], (1,0,0), (952,56,56) => 1064;
        "w1068": G72, &[X, A67, &[1,4,5,8,9]], (1,0,0), (952,68,48) => 1068;
        "w1072": G72, &[X, A67, &[1,2,4,5,7]], (1,0,0), (952,64,56) => 1072;
        "w1076": G72, &[X, A67, &[1,4,5,8,9]], (0,1,0), (72,956,48) => 1076;
        "w1080": G72, &[X, A67, &[1,4,5,6,8]], (0,1,0), (72,952,56) => 1080;
        "w1084": G72, &[X, A67, &[1,2,3,4,6]], (0,0,1), (72,48,964) => 1084;
        "w1088": G72, &[X, A67, &[1,2,3,4,7]], (0,0,1), (72,48,968) => 1088;
        "w1092": G72, &[X, A67, &[1,2,4,5,6]], (0,1,0), (72,960,60) => 1092;
        "w1096": G72, &[X, A67, &[1,2,4,5,8]], (0,1,0), (72,968,56) => 1096;
        "w1100": G72, &[X, A67, &[1,2,4,5,6]], (0,0,1), (72,64,964) => 1100;
        "w1104": G72, &[X, A67, &[1,2,3,4,7]], (0,1,0), (72,976,56) => 1104;
        "w1108": G72, &[X, A67, &[1,2,3,4,6]], (0,1,0), (72,976,60) => 1108;
        "w1112": G72, &[X, A67, &[1,4,5,6,8]], (0,0,1), (72,72,968) => 1112;
        "w1116": G72, &[X, A67, &[1,4,5,8,9]], (0,0,1), (72,68,976) => 1116;
    ]
}

/// The catalog as JSON for external auditing: name, ANF text of both
/// blocks, flips and expected weight.
pub fn catalog_json() -> serde_json::Value {
    let entries: Vec<serde_json::Value> = witness_catalog()
        .iter()
        .map(|e| {
            json!({
                "name": e.name,
                "g1": e.g1_anf().to_string(),
                "g2": e.g2_anf().to_string(),
                "flips": [e.flips.0 as u8, e.flips.1 as u8, e.flips.2 as u8],
                "block_weights": [e.block_weights.0, e.block_weights.1, e.block_weights.2],
                "expected_weight": e.weight,
            })
        })
        .collect();
    json!(entries)
}
