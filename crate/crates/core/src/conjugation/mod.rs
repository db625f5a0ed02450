//! Σ-non-negativity, non-negative conjugates and m-data normalisation.

mod cycles;
mod mdata;

pub use cycles::{
    contraction_conjugate, cycle_sum, is_sigma_nonneg, is_sigma_nonneg_bruteforce, min_cycle,
    nonneg_conjugate, normalized_cycle_conjugate, CycleSeq,
};
pub use mdata::{
    conjugate_mdata, floor_profile, floor_type_conjugate, fold_mdata, mean_of, normalize_mdata,
    validate_mdata, FoldedMData, MData,
};
