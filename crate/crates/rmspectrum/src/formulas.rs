//! Closed-form Hamming weights for XOR-sums of two and three monomials,
//! together with the brute-force truth-table oracle used to validate
//! them.
//!
//! The two-monomial formula holds for any degree and ambient count by
//! inclusion-exclusion. The three-monomial formula is kept to degree-5
//! monomials in 10 variables, the instance its derivation hard-codes;
//! everything else goes through [`oracle_weight`].

use crate::boolfn::{Anf, Monomial};
use crate::error::{Error, Result};
use std::collections::BTreeSet;

/// Intersection cardinalities of three equal-degree monomial supports
/// `I, J, K`: `c1 = |I ∩ J|`, `c2 = |I ∩ K|`, `c3 = |J ∩ K|`,
/// `c4 = |I ∩ J ∩ K|`. These four numbers determine the weight of
/// `x_I + x_J + x_K`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct IntersectionProfile {
    pub c1: usize,
    pub c2: usize,
    pub c3: usize,
    pub c4: usize,
    pub degree: usize,
    pub var_count: usize,
}

impl IntersectionProfile {
    /// Validates that the four cardinalities can come from actual
    /// degree-`d` sets in `n` variables.
    pub fn new(c1: usize, c2: usize, c3: usize, c4: usize, d: usize, n: usize) -> Result<Self> {
        let p = IntersectionProfile { c1, c2, c3, c4, degree: d, var_count: n };
        let err = |msg: String| Err(Error::InvalidProfile(msg));
        if c4 > c1.min(c2).min(c3) {
            return err(format!("c4={c4} exceeds min(c1,c2,c3)"));
        }
        if c1.max(c2).max(c3) > d {
            return err(format!("pairwise intersection exceeds degree {d}"));
        }
        // Each pair of intersections meets inside one d-set.
        if c1 + c2 - c4 > d || c1 + c3 - c4 > d || c2 + c3 - c4 > d {
            return err("pairwise intersections overflow a single support".into());
        }
        if 3 * d + c4 < c1 + c2 + c3 || 3 * d - c1 - c2 - c3 + c4 > n {
            return err(format!("|I ∪ J ∪ K| out of range for n={n}"));
        }
        Ok(p)
    }

    /// `|I ∪ J ∪ K|` by inclusion-exclusion.
    pub fn union_size(&self) -> usize {
        3 * self.degree - self.c1 - self.c2 - self.c3 + self.c4
    }
}

/// Reads the profile off three equal-degree supports over a common
/// ambient count.
pub fn profile_of(i: &Monomial, j: &Monomial, k: &Monomial) -> Result<IntersectionProfile> {
    if i.var_count() != j.var_count() || i.var_count() != k.var_count() {
        return Err(Error::VarCountMismatch { left: i.var_count(), right: j.var_count().max(k.var_count()) });
    }
    if i.degree() != j.degree() || i.degree() != k.degree() {
        return Err(Error::DegreeMismatch {
            left: i.degree(),
            right: j.degree().max(k.degree()),
        });
    }
    let triple = (i.mask() & j.mask() & k.mask()).count_ones() as usize;
    IntersectionProfile::new(
        i.intersection_size(j),
        i.intersection_size(k),
        j.intersection_size(k),
        triple,
        i.degree(),
        i.var_count(),
    )
}

/// Weight of `x_I + x_J` for degree-`d` supports with `|I ∩ J| = c` in
/// `n` variables: `2^(n-d+1) - 2^(n-2d+c+1)`. For `(n, d) = (10, 5)`
/// this reads `64 - 2^(c+1)`.
pub fn two_monomial_weight(n: usize, d: usize, c: usize) -> Result<u64> {
    if d > n || c > d || 2 * d > n + c {
        return Err(Error::FormulaDomain(format!(
            "need c <= d <= n and 2d - c <= n, got n={n} d={d} c={c}"
        )));
    }
    Ok((1u64 << (n - d + 1)) - (1u64 << (n - 2 * d + c + 1)))
}

/// All weights realizable as `x_I + x_J` over degree-`d` supports in `n`
/// variables, i.e. the formula over every feasible intersection size.
pub fn two_monomial_weight_set(n: usize, d: usize) -> Result<BTreeSet<u64>> {
    if 2 * d > n {
        return Err(Error::FormulaDomain(format!("need 2d <= n, got n={n} d={d}")));
    }
    (0..=d).map(|c| two_monomial_weight(n, d, c)).collect()
}

/// Weight of `x_I + x_J + x_K` for degree-5 supports in 10 variables:
/// `2^(c1+c2+c3-c4-3) - 2^(c1+1) - 2^(c2+1) - 2^(c3+1) + 96`.
///
/// Restricted to `(n, d) = (10, 5)`; other arities go through
/// [`oracle_weight`].
pub fn three_monomial_weight(p: &IntersectionProfile) -> Result<u64> {
    if p.var_count != 10 || p.degree != 5 {
        return Err(Error::FormulaDomain(format!(
            "three-monomial closed form is defined for n=10, d=5 only, got n={} d={}",
            p.var_count, p.degree
        )));
    }
    // A valid profile has |I ∪ J ∪ K| <= 10, i.e. c1+c2+c3-c4 >= 5, so
    // the leading exponent never underflows.
    let pow = |e: usize| 1i64 << e;
    let value = pow(p.c1 + p.c2 + p.c3 - p.c4 - 3)
        - pow(p.c1 + 1)
        - pow(p.c2 + 1)
        - pow(p.c3 + 1)
        + 96;
    debug_assert!(value >= 0, "formula went negative on a valid profile");
    Ok(value as u64)
}

/// Every value the three-monomial formula takes over realizable
/// profiles (n=10, d=5). By variable relabeling it suffices to fix
/// `I = {1..5}` and sweep all ordered pairs `(J, K)`.
pub fn three_monomial_weight_set() -> BTreeSet<u64> {
    let supports = degree5_supports();
    let i = Monomial::new(&[1, 2, 3, 4, 5], 10).unwrap();
    let mut out = BTreeSet::new();
    for j in &supports {
        for k in &supports {
            let p = profile_of(&i, j, k).unwrap();
            out.insert(three_monomial_weight(&p).unwrap());
        }
    }
    out
}

/// All `C(10,5) = 252` degree-5 supports over 10 variables, ascending
/// by mask.
pub fn degree5_supports() -> Vec<Monomial> {
    subsets_of_size(10, 5)
}

/// All degree-`d` supports over `n` variables, ascending by mask
/// (Gosper's hack).
pub fn subsets_of_size(n: usize, d: usize) -> Vec<Monomial> {
    assert!(d <= n && n < 32);
    if d == 0 {
        return vec![Monomial::one(n)];
    }
    let mut out = Vec::new();
    let mut v: u32 = (1 << d) - 1;
    let limit: u32 = 1 << n;
    while v < limit {
        out.push(Monomial::from_mask(v, n));
        let low = v & v.wrapping_neg();
        let ripple = v + low;
        v = ripple | (((v ^ ripple) >> 2) / low);
    }
    out
}

/// Brute-force weight: evaluate the ANF into a truth table and count
/// ones. Independent of every closed form above, and the only route for
/// sums of four or more monomials.
pub fn oracle_weight(f: &Anf) -> u64 {
    f.truth_table().weight()
}

/// How a weight was computed by [`weight_with_method`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WeightMethod {
    /// Zero or a single monomial: `0` or `2^(n-d)` directly.
    Direct,
    /// Two equal-degree monomials: the two-monomial closed form.
    TwoMonomial,
    /// Three degree-5 monomials in 10 variables: the three-monomial
    /// closed form.
    ThreeMonomial,
    /// Anything else: truth-table oracle.
    Oracle,
}

impl WeightMethod {
    pub fn describe(&self) -> &'static str {
        match self {
            WeightMethod::Direct => "direct (constant or single monomial)",
            WeightMethod::TwoMonomial => "two-monomial closed form",
            WeightMethod::ThreeMonomial => "three-monomial closed form",
            WeightMethod::Oracle => "truth-table oracle",
        }
    }
}

/// Computes the weight through the sharpest applicable route and reports
/// which one was used. All routes agree with [`oracle_weight`].
pub fn weight_with_method(f: &Anf) -> (u64, WeightMethod) {
    let terms: Vec<Monomial> = f.terms().collect();
    match terms.as_slice() {
        [] => (0, WeightMethod::Direct),
        [m] => (1u64 << (f.var_count() - m.degree()), WeightMethod::Direct),
        [a, b] if a.degree() == b.degree() => {
            let w = two_monomial_weight(f.var_count(), a.degree(), a.intersection_size(b))
                .expect("a real pair of supports is always in the formula domain");
            (w, WeightMethod::TwoMonomial)
        }
        [a, b, c]
            if f.var_count() == 10
                && a.degree() == 5
                && b.degree() == 5
                && c.degree() == 5 =>
        {
            let p = profile_of(a, b, c).expect("real supports yield a valid profile");
            (three_monomial_weight(&p).unwrap(), WeightMethod::ThreeMonomial)
        }
        _ => (oracle_weight(f), WeightMethod::Oracle),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::boolfn::parse_anf;

    fn mono(vars: &[usize]) -> Monomial {
        Monomial::new(vars, 10).unwrap()
    }

    #[test]
    fn profile_examples() {
        let i = mono(&[1, 2, 3, 4, 5]);
        let p = profile_of(&i, &i, &i).unwrap();
        assert_eq!((p.c1, p.c2, p.c3, p.c4), (5, 5, 5, 5));

        let j = mono(&[1, 2, 3, 6, 7]);
        let k = mono(&[4, 5, 8, 9, 10]);
        let p = profile_of(&i, &j, &k).unwrap();
        assert_eq!((p.c1, p.c2, p.c3, p.c4), (3, 2, 0, 0));
        assert_eq!(p.union_size(), 10);

        // Computed by direct set arithmetic.
        let j = mono(&[1, 2, 3, 4, 6]);
        let k = mono(&[1, 2, 3, 4, 7]);
        let p = profile_of(&i, &j, &k).unwrap();
        assert_eq!((p.c1, p.c2, p.c3, p.c4), (4, 4, 4, 4));
    }

    #[test]
    fn profile_rejects_degree_mismatch() {
        let i = mono(&[1, 2, 3, 4, 5]);
        let j = mono(&[1, 2, 3, 4]);
        assert!(matches!(profile_of(&i, &j, &i), Err(Error::DegreeMismatch { .. })));
    }

    #[test]
    fn profile_invariants_enforced() {
        assert!(IntersectionProfile::new(5, 0, 0, 1, 5, 10).is_err()); // c4 > min
        assert!(IntersectionProfile::new(4, 4, 0, 1, 5, 10).is_err()); // c1+c2-c4 > d
        assert!(IntersectionProfile::new(0, 0, 0, 0, 5, 10).is_err()); // union 15 > 10
        assert!(IntersectionProfile::new(3, 2, 0, 0, 5, 10).is_ok());
    }

    #[test]
    fn two_monomial_values() {
        assert_eq!(two_monomial_weight(10, 5, 0).unwrap(), 62);
        assert_eq!(two_monomial_weight(10, 5, 5).unwrap(), 0);
        // Frozen from the truth-table oracle; also re-checked below.
        assert_eq!(two_monomial_weight(8, 4, 2).unwrap(), 24);
        let f = parse_anf("x1*x2*x3*x4 + x1*x2*x5*x6", 8).unwrap();
        assert_eq!(oracle_weight(&f), 24);
        assert!(two_monomial_weight(10, 5, 6).is_err());
        assert!(two_monomial_weight(11, 6, 0).is_err()); // 2d - c > n
    }

    #[test]
    fn two_monomial_strictly_decreasing_in_c() {
        for (n, d) in [(10, 5), (8, 4), (12, 5)] {
            let mut prev = None;
            for c in 0..=d {
                let w = two_monomial_weight(n, d, c).unwrap();
                if let Some(p) = prev {
                    assert!(w < p, "not strictly decreasing at n={n} d={d} c={c}");
                }
                prev = Some(w);
            }
        }
    }

    #[test]
    fn two_monomial_sets() {
        let s: Vec<u64> = two_monomial_weight_set(10, 5).unwrap().into_iter().collect();
        assert_eq!(s, vec![0, 32, 48, 56, 60, 62]);
        let s: Vec<u64> = two_monomial_weight_set(2, 1).unwrap().into_iter().collect();
        assert_eq!(s, vec![0, 2]);
        assert!(two_monomial_weight_set(9, 5).is_err());
    }

    #[test]
    fn two_monomial_set_8_4_matches_exhaustive_oracle() {
        let supports = subsets_of_size(8, 4);
        assert_eq!(supports.len(), 70);
        let mut oracle_set = BTreeSet::new();
        for a in &supports {
            for b in &supports {
                let f = Anf::from_monomials(&[*a, *b], 8).unwrap();
                oracle_set.insert(oracle_weight(&f));
            }
        }
        assert_eq!(oracle_set, two_monomial_weight_set(8, 4).unwrap());
    }

    #[test]
    fn three_monomial_values() {
        let p = IntersectionProfile::new(4, 4, 4, 4, 5, 10).unwrap();
        assert_eq!(three_monomial_weight(&p).unwrap(), 32);
        let p = IntersectionProfile::new(3, 2, 0, 0, 5, 10).unwrap();
        assert_eq!(three_monomial_weight(&p).unwrap(), 74);
        let p = IntersectionProfile::new(5, 5, 5, 5, 5, 10).unwrap();
        assert_eq!(three_monomial_weight(&p).unwrap(), 32);
    }

    #[test]
    fn three_monomial_rejects_other_arities() {
        let p = IntersectionProfile::new(2, 2, 2, 2, 4, 8).unwrap();
        assert!(matches!(three_monomial_weight(&p), Err(Error::FormulaDomain(_))));
    }

    #[test]
    fn three_monomial_symmetric_in_pairwise_counts() {
        for (c1, c2, c3, c4) in [(3, 2, 0, 0), (4, 3, 3, 2), (5, 2, 2, 2)] {
            let base = IntersectionProfile::new(c1, c2, c3, c4, 5, 10).unwrap();
            let w = three_monomial_weight(&base).unwrap();
            for (a, b, c) in [(c1, c3, c2), (c2, c1, c3), (c2, c3, c1), (c3, c1, c2), (c3, c2, c1)]
            {
                if let Ok(p) = IntersectionProfile::new(a, b, c, c4, 5, 10) {
                    assert_eq!(three_monomial_weight(&p).unwrap(), w);
                }
            }
        }
    }

    #[test]
    fn three_monomial_set_full_enumeration() {
        let expected: BTreeSet<u64> =
            [32, 48, 56, 60, 62, 64, 68, 72, 74, 76, 80].into_iter().collect();
        assert_eq!(three_monomial_weight_set(), expected);
    }

    #[test]
    fn weight_method_selection() {
        let (w, m) = weight_with_method(&Anf::zero(10));
        assert_eq!((w, m), (0, WeightMethod::Direct));
        let f = parse_anf("x1*x2*x3*x4*x5 + x6*x7*x8*x9*x10", 10).unwrap();
        assert_eq!(weight_with_method(&f), (62, WeightMethod::TwoMonomial));
        let f = parse_anf("x1*x2*x3*x4*x5 + x1*x2*x3*x6*x7 + x4*x5*x8*x9*x10", 10).unwrap();
        assert_eq!(weight_with_method(&f), (74, WeightMethod::ThreeMonomial));
        // Four monomials: oracle only.
        let f = parse_anf(
            "x1*x2*x3*x6*x7 + x1*x6*x7*x8*x9 + x4*x5*x8*x9*x10 + x6*x7*x8*x9*x10",
            10,
        )
        .unwrap();
        assert_eq!(weight_with_method(&f), (78, WeightMethod::Oracle));
    }

    #[test]
    fn subsets_enumeration_counts() {
        assert_eq!(subsets_of_size(10, 5).len(), 252);
        assert_eq!(subsets_of_size(8, 4).len(), 70);
        assert_eq!(subsets_of_size(6, 3).len(), 20);
        assert_eq!(subsets_of_size(4, 0).len(), 1);
    }
}
