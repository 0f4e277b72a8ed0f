//! Weight-spectrum assembly and verification for RM(m-6,m): the
//! predicted spectrum and its induction step, the achieved set built
//! from constructions, exhaustive enumeration of the generalized
//! construction, target coverage, and witness search.

mod enumeration;
mod sets;
mod witness;

pub use enumeration::{
    construction2_targets, coverage_check, enumerate_construction2,
    enumerate_construction2_with, Convention, CoverageReport, EnumerationMode,
    TargetCoverage, TupleWitness, WeightHistogram, M4_REFERENCE_COUNTS,
};
pub use sets::{
    assemble_achieved_6_12, induction_step, kasami_range_weights, predicted_spectrum,
    rm6_12_low_weights, spectrum_shape, Provenance, SpectrumSet, LOW_WEIGHTS_BELOW_152,
};
pub use witness::{find_witness, rm4_8_witnesses};
