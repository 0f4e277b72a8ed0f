//! The verification pipelines behind `rmspectrum verify`: exhaustive
//! closed-form-versus-oracle sweeps, the witness-catalog regression, the
//! range-coverage audit, the coset witnesses and the induction step.
//!
//! Every check reports how many cases matched and surfaces each mismatch
//! verbatim; a mismatch is reported, never patched over.

use crate::boolfn::{Anf, Monomial};
use crate::constructions::{witness_catalog, zero_block_codeword};
use crate::formulas::{
    degree5_supports, oracle_weight, profile_of, subsets_of_size, three_monomial_weight,
    two_monomial_weight, two_monomial_weight_set,
};
use crate::spectrum::{
    assemble_achieved_6_12, induction_step, predicted_spectrum, rm4_8_witnesses,
    rm6_12_low_weights,
};
use serde_json::json;
use std::collections::BTreeMap;

/// Outcome of one verification target.
#[derive(Debug, Clone)]
pub struct CheckReport {
    pub name: String,
    pub total: u64,
    pub matched: u64,
    /// One line per failing case, verbatim.
    pub mismatches: Vec<String>,
}

impl CheckReport {
    fn new(name: &str) -> Self {
        CheckReport { name: name.into(), total: 0, matched: 0, mismatches: Vec::new() }
    }

    fn case(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.total += 1;
        if ok {
            self.matched += 1;
        } else {
            self.mismatches.push(describe());
        }
    }

    pub fn passed(&self) -> bool {
        self.matched == self.total
    }

    pub fn summary_line(&self) -> String {
        format!(
            "{}: {}/{} {}",
            self.name,
            self.matched,
            self.total,
            if self.passed() { "PASS" } else { "FAIL" }
        )
    }

    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "name": self.name,
            "total": self.total,
            "matched": self.matched,
            "mismatch_count": self.mismatches.len(),
            "mismatches": self.mismatches,
            "pass": self.passed(),
        })
    }
}

/// Exhaustive two-monomial check: for every ordered pair of degree-5
/// supports over 10 variables (63,504 pairs) and every ordered pair of
/// degree-4 supports over 8 variables (4,900 pairs), the closed form
/// equals the truth-table oracle.
pub fn check_two_monomial() -> CheckReport {
    let mut report = CheckReport::new("two-monomial");
    for (n, d) in [(10usize, 5usize), (8, 4)] {
        let supports = subsets_of_size(n, d);
        for a in &supports {
            for b in &supports {
                let formula = two_monomial_weight(n, d, a.intersection_size(b)).unwrap();
                let f = Anf::from_monomials(&[*a, *b], n).unwrap();
                let oracle = oracle_weight(&f);
                report.case(formula == oracle, || {
                    format!("(n={n},d={d}) {a} + {b}: formula {formula} oracle {oracle}")
                });
            }
        }
        // The full value set at (10,5) and at (8,4).
        let set = two_monomial_weight_set(n, d).unwrap();
        let expected: Vec<u64> = if n == 10 {
            vec![0, 32, 48, 56, 60, 62]
        } else {
            vec![0, 16, 24, 28, 30]
        };
        report.case(set.iter().copied().collect::<Vec<_>>() == expected, || {
            format!("(n={n},d={d}) value set {set:?} != {expected:?}")
        });
    }
    report
}

/// Exhaustive three-monomial check: `I = {1..5}` fixed, all 63,504
/// ordered pairs `(J, K)`; the closed form must equal the oracle. Any
/// nonzero mismatch count is surfaced in the report.
pub fn check_three_monomial() -> CheckReport {
    let mut report = CheckReport::new("three-monomial");
    let supports = degree5_supports();
    let i = Monomial::new(&[1, 2, 3, 4, 5], 10).unwrap();
    for j in &supports {
        for k in &supports {
            let p = profile_of(&i, j, k).unwrap();
            let formula = three_monomial_weight(&p).unwrap();
            let f = Anf::from_monomials(&[i, *j, *k], 10).unwrap();
            let oracle = oracle_weight(&f);
            report.case(formula == oracle, || {
                format!(
                    "I=x1..x5, J={j}, K={k} (profile {},{},{},{}): formula {formula} oracle {oracle}",
                    p.c1, p.c2, p.c3, p.c4
                )
            });
        }
    }
    report
}

/// Witness-catalog regression: every entry reproduces its expected block
/// weights and total exactly, stays within degree 6, and its weight
/// belongs to the predicted spectrum.
pub fn check_witness_catalog() -> CheckReport {
    let mut report = CheckReport::new("witnesses");
    let predicted = predicted_spectrum(12).unwrap();
    for e in witness_catalog() {
        let g1 = e.g1_anf();
        let g2 = e.g2_anf();
        let flip = |g: &Anf, bit: bool| if bit { g.complement() } else { g.clone() };
        let blocks = (
            oracle_weight(&flip(&g1, e.flips.0)),
            oracle_weight(&flip(&g2, e.flips.1)),
            oracle_weight(&flip(&g1.xor(&g2).unwrap(), e.flips.2)),
        );
        let codeword = e.codeword();
        let total = oracle_weight(&codeword);
        report.case(blocks == e.block_weights, || {
            format!("{}: blocks {blocks:?} expected {:?}", e.name, e.block_weights)
        });
        report.case(total == e.weight, || {
            format!("{}: total {total} expected {}", e.name, e.weight)
        });
        report.case(codeword.degree_at_most(6), || {
            format!("{}: degree {:?} exceeds 6", e.name, codeword.degree())
        });
        report.case(predicted.contains(total), || {
            format!("{}: weight {total} outside the predicted spectrum", e.name)
        });
    }
    report
}

/// Range-coverage audit: every weight in the three claimed ranges is
/// realized by an explicit construction found by exhaustive sweep over
/// the shared-monomial families (with flips for the two high ranges).
///
/// Covered families: both blocks `x1..x5 + x_A + x_{B or C}`
/// (shared-triple), both blocks `x1..x5 + x_{E or F}` (shared-pair), and
/// the catalog's wide entries.
pub fn check_range_coverage() -> CheckReport {
    let mut report = CheckReport::new("ranges");
    let coverage = range_coverage_witnesses();
    for (lo, hi, allow_flips) in [(154u64, 214u64, false), (1050, 1110, true), (1056, 1116, true)]
    {
        for w in (lo..=hi).step_by(4) {
            // A center witness must use no flips; a high one may use any.
            let ok = match coverage.get(&w) {
                None => false,
                Some(c) if !allow_flips => c.flips == (false, false, false),
                Some(_) => true,
            };
            report.case(ok, || format!("no construction found for weight {w}"));
        }
    }
    report
}

/// A realized total with the blocks that realize it.
#[derive(Debug, Clone)]
pub struct RangeWitness {
    pub g1: Anf,
    pub g2: Anf,
    pub flips: (bool, bool, bool),
    pub blocks: (u64, u64, u64),
}

impl RangeWitness {
    pub fn codeword(&self) -> Anf {
        zero_block_codeword(&self.g1, &self.g2, self.flips).unwrap()
    }
}

/// Exhaustively sweeps the shared-triple family (4,064,256 distinct
/// block-weight triples collapsed through closed forms) and the
/// shared-pair family, expands constant flips, and keeps one witness per
/// total weight. Catalog entries are merged in last, covering the two
/// wide entries.
pub fn range_coverage_witnesses() -> BTreeMap<u64, RangeWitness> {
    let supports = degree5_supports();
    let count = supports.len();
    let x = Monomial::new(&[1, 2, 3, 4, 5], 10).unwrap();

    // Pairwise three-monomial weights w(x1..x5 + x_A + x_B) by index.
    let mut triple_w = vec![0u64; count * count];
    for (ai, a) in supports.iter().enumerate() {
        for (bi, b) in supports.iter().enumerate() {
            let p = profile_of(&x, a, b).unwrap();
            triple_w[ai * count + bi] = three_monomial_weight(&p).unwrap();
        }
    }
    let two_w: Vec<u64> = (0..=5).map(|c| two_monomial_weight(10, 5, c).unwrap()).collect();

    // Distinct (w1, w2, w12) block triples of the shared-triple family,
    // with the first (A, B, C) realizing each.
    let mut triples: BTreeMap<(u64, u64, u64), (usize, usize, usize)> = BTreeMap::new();
    for ai in 0..count {
        for bi in 0..count {
            let w1 = triple_w[ai * count + bi];
            for ci in 0..count {
                let w2 = triple_w[ai * count + ci];
                let w12 = two_w[supports[bi].intersection_size(&supports[ci])];
                triples.entry((w1, w2, w12)).or_insert((ai, bi, ci));
            }
        }
    }
    // Shared-pair family: both blocks x1..x5 + x_E (and + x_F).
    let mut pair_triples: BTreeMap<(u64, u64, u64), (usize, usize)> = BTreeMap::new();
    for ei in 0..count {
        let w1 = two_w[x.intersection_size(&supports[ei])];
        for fi in 0..count {
            let w2 = two_w[x.intersection_size(&supports[fi])];
            let w12 = two_w[supports[ei].intersection_size(&supports[fi])];
            pair_triples.entry((w1, w2, w12)).or_insert((ei, fi));
        }
    }

    let mut out: BTreeMap<u64, RangeWitness> = BTreeMap::new();
    let flip_combos = [
        (false, false, false),
        (false, false, true),
        (false, true, false),
        (true, false, false),
        (false, true, true),
        (true, false, true),
        (true, true, false),
        (true, true, true),
    ];
    let flip_weight = |w: u64, bit: bool| if bit { 1024 - w } else { w };
    let mut record =
        |total: u64, g1: &Anf, g2: &Anf, flips: (bool, bool, bool), blocks: (u64, u64, u64)| {
            out.entry(total).or_insert_with(|| RangeWitness {
                g1: g1.clone(),
                g2: g2.clone(),
                flips,
                blocks,
            });
        };

    for (&(w1, w2, w12), &(ai, bi, ci)) in &triples {
        let g1 = Anf::from_monomials(&[x, supports[ai], supports[bi]], 10).unwrap();
        let g2 = Anf::from_monomials(&[x, supports[ai], supports[ci]], 10).unwrap();
        for flips in flip_combos {
            let blocks =
                (flip_weight(w1, flips.0), flip_weight(w2, flips.1), flip_weight(w12, flips.2));
            record(blocks.0 + blocks.1 + blocks.2, &g1, &g2, flips, blocks);
        }
    }
    for (&(w1, w2, w12), &(ei, fi)) in &pair_triples {
        let g1 = Anf::from_monomials(&[x, supports[ei]], 10).unwrap();
        let g2 = Anf::from_monomials(&[x, supports[fi]], 10).unwrap();
        for flips in flip_combos {
            let blocks =
                (flip_weight(w1, flips.0), flip_weight(w2, flips.1), flip_weight(w12, flips.2));
            record(blocks.0 + blocks.1 + blocks.2, &g1, &g2, flips, blocks);
        }
    }
    for e in witness_catalog() {
        record(e.weight, &e.g1_anf(), &e.g2_anf(), e.flips, e.block_weights);
    }
    out
}

/// The seventeen coset witnesses: weights `16i` for `i` in `0..=16`,
/// degree at most 4, each validated by the oracle.
pub fn check_coset_witnesses() -> CheckReport {
    let mut report = CheckReport::new("low-weights");
    let witnesses = rm4_8_witnesses();
    report.case(witnesses.len() == 17, || {
        format!("expected 17 witnesses, got {}", witnesses.len())
    });
    for (expected, f) in &witnesses {
        let w = oracle_weight(f);
        report.case(w == *expected, || format!("witness for {expected} weighs {w}"));
        report.case(f.degree_at_most(4), || {
            format!("witness for {expected} has degree {:?}", f.degree())
        });
    }
    report
}

/// Structure of the predicted spectrum plus the induction step from
/// m = 12 up to m = 20, checked against the direct formula.
pub fn check_induction() -> CheckReport {
    let mut report = CheckReport::new("induction");
    let base = predicted_spectrum(12).unwrap();
    report.case(base.len() == 1919, || format!("m=12 cardinality {} != 1919", base.len()));
    report.case(base.is_complement_symmetric(), || "m=12 not complement-symmetric".into());
    report.case(!base.contains(150), || "m=12 contains 150".into());
    for w in rm6_12_low_weights() {
        report.case(base.contains(w), || format!("m=12 missing low weight {w}"));
    }
    let achieved = assemble_achieved_6_12(true);
    report.case(achieved.is_subset_of(&base), || {
        "achieved set escapes the predicted spectrum".into()
    });
    let mut middle_ok = true;
    for i in 0..=((1u64 << 11) - 152) {
        if !achieved.contains(152 + 2 * i) {
            middle_ok = false;
            break;
        }
    }
    report.case(middle_ok, || "achieved set misses part of the middle range".into());

    let mut current = base;
    for m in 12..=19 {
        let stepped = induction_step(&current);
        let direct = predicted_spectrum(m + 1).unwrap();
        report.case(stepped.weights() == direct.weights(), || {
            format!("induction step at m={m} disagrees with the direct formula")
        });
        current = stepped;
    }
    report
}

/// Every verification target, in a stable order.
pub fn check_all() -> Vec<CheckReport> {
    vec![
        check_two_monomial(),
        check_three_monomial(),
        check_witness_catalog(),
        check_range_coverage(),
        check_coset_witnesses(),
        check_induction(),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn range_coverage_includes_all_three_ranges() {
        let report = check_range_coverage();
        assert!(report.passed(), "{:?}", report.mismatches);
        assert_eq!(report.total, 16 * 3);
    }

    #[test]
    fn range_witnesses_rebuild_correctly() {
        let coverage = range_coverage_witnesses();
        // Weight 170 has no catalog entry; the sweep must find one.
        let w170 = coverage.get(&170).expect("sweep witness for 170");
        assert_eq!(w170.flips, (false, false, false));
        assert_eq!(oracle_weight(&w170.codeword()), 170);
        // Spot-check a flipped witness.
        let w1050 = coverage.get(&1050).expect("sweep witness for 1050");
        assert_eq!(oracle_weight(&w1050.codeword()), 1050);
    }

    #[test]
    fn catalog_and_coset_checks_pass() {
        assert!(check_witness_catalog().passed());
        assert!(check_coset_witnesses().passed());
    }

    #[test]
    fn induction_check_passes() {
        let report = check_induction();
        assert!(report.passed(), "{:?}", report.mismatches);
    }

    #[test]
    fn report_json_and_summary() {
        let mut r = CheckReport::new("demo");
        r.case(true, || unreachable!());
        r.case(false, || "boom".into());
        assert!(!r.passed());
        assert_eq!(r.summary_line(), "demo: 1/2 FAIL");
        let v = r.to_json();
        assert_eq!(v["mismatch_count"], 1);
        assert_eq!(v["mismatches"][0], "boom");
    }
}
