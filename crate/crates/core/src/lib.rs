//! Exact integer computations with graded Gorenstein tiled orders.
//!
//! * [`exponent`]: exponent matrices, validation, cyclic orders, Morita shifts.
//! * [`gorenstein`]: Nakayama permutation and Gorenstein parameters.
//! * [`conjugation`]: Σ-non-negativity, non-negative conjugates and the
//!   normalisation of m-data to almost constant non-negative form.
//! * [`tilting`]: rank-one lattices, the tilting poset `V_A`, its Hasse quiver
//!   and the incidence-algebra block dimensions.
//!
//! All indices are 0-based. Arithmetic is checked; overflow is an error.

pub mod conjugation;
pub mod error;
pub mod exponent;
pub mod gorenstein;
pub mod tilting;

pub use conjugation::{
    conjugate_mdata, contraction_conjugate, cycle_sum, floor_profile, floor_type_conjugate,
    fold_mdata, is_sigma_nonneg, is_sigma_nonneg_bruteforce, min_cycle, nonneg_conjugate,
    normalize_mdata, normalized_cycle_conjugate, validate_mdata, CycleSeq, FoldedMData, MData,
};
pub use error::{Error, Result};
pub use exponent::{
    cyclic_order, morita_shift, validate_order, ExponentMatrix, ExponentVector, IntMatrix,
    OrderReport, Permutation, ShiftVector, TriangleViolation,
};
pub use gorenstein::{detect_gorenstein, shifted_parameters, GorensteinData};
pub use tilting::{
    build_va, cyclic_hasse_oracle, endo_block_dim, grothendieck_rank, hasse_quiver, hom_dim,
    lattice_validate, tilting_summands, truncate_shift, ArrowRule, CyclicHasse, Quiver, Summand,
    SummandLabel, TiltingPoset,
};

pub use num_rational::Ratio;
