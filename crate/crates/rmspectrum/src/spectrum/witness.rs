//! Explicit low-degree witnesses: the coset family realizing every
//! weight `16i` in RM(4,8), and a seeded randomized search for a
//! codeword of a prescribed weight.

use crate::boolfn::{Anf, Monomial, TruthTable};
use crate::rng::SplitMix64;
use std::collections::BTreeSet;

/// For each `i` in `0..=16`, a degree-at-most-4 function over 8
/// variables of weight exactly `16i`.
///
/// Construction: the 4-dimensional subspace `x5 = x6 = x7 = x8 = 0` has
/// sixteen cosets, one per assignment of `(x5..x8)`; each indicator is a
/// product of four affine forms (degree 4, weight 16) and distinct
/// cosets are disjoint, so XOR-ing `i` of them weighs `16i`. All sixteen
/// together collapse to the constant 1.
pub fn rm4_8_witnesses() -> Vec<(u64, Anf)> {
    let indicator = |a: u32| -> Anf {
        let mut f = Anf::one(8);
        for k in 0..4u32 {
            // Factor (x_{5+k} + a_k + 1): equals 1 exactly when
            // x_{5+k} = a_k.
            let var = Anf::monomial(&Monomial::new(&[5 + k as usize], 8).unwrap());
            let factor = if a >> k & 1 == 1 { var } else { var.complement() };
            f = f.mul(&factor).unwrap();
        }
        f
    };
    (0..=16u64)
        .map(|i| {
            let mut f = Anf::zero(8);
            for a in 0..i as u32 {
                f = f.xor(&indicator(a)).unwrap();
            }
            (16 * i, f)
        })
        .collect()
}

/// Seeded randomized search for a degree-at-most-`r` function over `n`
/// variables of the exact target weight. Returns `None` when the target
/// is impossible (parity, divisibility, range) or when the budget of
/// candidate evaluations runs out. Deterministic for a fixed seed.
///
/// The search starts from sparse random ANFs and greedily toggles single
/// monomials that move the weight toward the target, restarting on
/// plateaus.
pub fn find_witness(
    target: u64,
    r: usize,
    n: usize,
    budget: u64,
    seed: u64,
) -> Option<Anf> {
    assert!(n <= 12, "search supports n <= 12");
    assert!(r <= n);
    let full = 1u64 << n;
    if target > full {
        return None;
    }
    if target == 0 {
        return Some(Anf::zero(n));
    }
    if r == 0 {
        return (target == full).then(|| Anf::one(n));
    }
    if target == full {
        return Some(Anf::one(n));
    }
    // Odd weight forces degree n; weights are multiples of
    // 2^floor((n-1)/r) (McEliece divisibility); nothing lives strictly
    // between 0 and the minimum distance 2^(n-r), nor within its
    // complement gap at the top.
    if target % 2 == 1 && r < n {
        return None;
    }
    if !target.is_multiple_of(1u64 << ((n - 1) / r)) {
        return None;
    }
    let min_dist = 1u64 << (n - r);
    if target < min_dist || target > full - min_dist {
        return None;
    }

    // Monomials of degree <= r with their tables.
    let mut pool: Vec<(u32, TruthTable)> = Vec::new();
    for mask in 0u32..1 << n {
        if (mask.count_ones() as usize) <= r {
            pool.push((mask, TruthTable::of_monomial(&Monomial::from_mask(mask, n))));
        }
    }
    // Quick win: a single monomial of degree d weighs 2^(n-d).
    for (mask, table) in &pool {
        if table.weight() == target {
            return Some(Anf::from_masks_unchecked(vec![*mask], n));
        }
    }

    let mut rng = SplitMix64::new(seed);
    let mut remaining = budget;
    let distance = |w: u64| w.abs_diff(target);
    let toggle = |terms: &mut BTreeSet<u32>, mask: u32| {
        if !terms.remove(&mask) {
            terms.insert(mask);
        }
    };
    loop {
        if remaining == 0 {
            return None;
        }
        // Sparse random restart.
        let mut terms: BTreeSet<u32> = BTreeSet::new();
        let mut table = TruthTable::zero(n);
        for _ in 0..1 + rng.below(6) {
            let (mask, mono_table) = &pool[rng.below(pool.len() as u64) as usize];
            toggle(&mut terms, *mask);
            table = table.xor(mono_table).unwrap();
        }
        let mut weight = table.weight();
        let mut stale = 0u32;
        while remaining > 0 && stale < 400 {
            if weight == target {
                return Some(Anf::from_masks_unchecked(terms.into_iter().collect(), n));
            }
            remaining -= 1;
            let (mask, mono_table) = &pool[rng.below(pool.len() as u64) as usize];
            let overlap = table.and(mono_table).unwrap().weight();
            let new_weight = weight + mono_table.weight() - 2 * overlap;
            let accept = distance(new_weight) < distance(weight)
                || (distance(new_weight) == distance(weight) && rng.chance(1, 8));
            if accept {
                table = table.xor(mono_table).unwrap();
                weight = new_weight;
                toggle(&mut terms, *mask);
                stale = 0;
            } else {
                stale += 1;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::formulas::oracle_weight;

    #[test]
    fn coset_witnesses_hit_every_multiple_of_16() {
        let witnesses = rm4_8_witnesses();
        assert_eq!(witnesses.len(), 17);
        for (i, (w, f)) in witnesses.iter().enumerate() {
            assert_eq!(*w, 16 * i as u64);
            assert_eq!(oracle_weight(f), *w, "witness {i} has wrong weight");
            assert!(f.degree_at_most(4), "witness {i} exceeds degree 4");
        }
        // Extremes: the zero function and the constant 1.
        assert!(witnesses[0].1.is_zero());
        assert_eq!(witnesses[16].1, Anf::one(8));
    }

    #[test]
    fn search_finds_minimum_weight_codeword() {
        let f = find_witness(64, 6, 12, 10_000, 0).expect("weight 64 exists");
        assert_eq!(oracle_weight(&f), 64);
        assert!(f.degree_at_most(6));
    }

    #[test]
    fn search_rejects_impossible_targets() {
        assert!(find_witness(1, 6, 12, 10_000, 0).is_none()); // odd
        assert!(find_witness(2, 6, 12, 10_000, 0).is_none()); // below minimum distance
        assert!(find_witness(4094, 6, 12, 10_000, 0).is_none()); // inside the top gap
        assert!(find_witness(5000, 6, 12, 10_000, 0).is_none()); // beyond 2^12
        assert!(find_witness(0, 6, 12, 10, 0).is_some()); // zero function
        let ones = find_witness(4096, 6, 12, 10, 0).unwrap();
        assert_eq!(ones, Anf::one(12));
    }

    #[test]
    fn search_is_deterministic_per_seed() {
        let a = find_witness(512, 5, 10, 50_000, 3);
        let b = find_witness(512, 5, 10, 50_000, 3);
        assert_eq!(a, b);
        let f = a.expect("weight 512 is easy at (5,10)");
        assert_eq!(oracle_weight(&f), 512);
        assert!(f.degree_at_most(5));
    }

    #[test]
    fn search_finds_constructed_weight() {
        let f = find_witness(166, 6, 12, 400_000, 0).expect("weight 166 exists");
        assert_eq!(oracle_weight(&f), 166);
        assert!(f.degree_at_most(6));
    }
}
