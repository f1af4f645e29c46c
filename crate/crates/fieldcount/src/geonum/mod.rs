//! Exact geometry of numbers over the rational function field.
//!
//! Lattice point counts in expanding compact boxes of a finite product of
//! completions of `F_q(t)` are computed two independent ways: directly, by
//! enumerating the functions with prescribed pole bounds, and spectrally,
//! through the Poisson summation formula with symbolic cyclotomic character
//! sums. Past an explicit expansion threshold the spectral count collapses
//! to a single term and the count equals the box volume exactly; below it,
//! projection bounds still control the count of skew regions.
//!
//! Everything is exact: volumes are rationals with power-of-`q`
//! denominators, character sums are elements of `Q(zeta_p)`, and counts are
//! integers. No floating point enters at any stage.

pub mod boxes;
pub mod func;
pub mod poisson;
pub mod trials;

pub use boxes::{
    fourier_box, fourier_member_value, fourier_value, fourier_value_by_integration, AxisBox,
    BoxKS, BoxMember, ConductorData, PlaceData, PlaceSet,
};
pub use func::RatFunc;
pub use poisson::{
    exact_count_check, expansion_threshold_met, lattice_points_direct, poisson_count,
    skew_count_bound, standard_fundamental_domain, tiling_check, CountCheck, Divisor, SkewBound,
    ENUM_BUDGET,
};
pub use trials::{
    run_expansion_trials, run_geonum_report, run_skew_sweep, run_tiling_checks, ExpansionTrial,
    GeonumReport, SkewTrial, TilingSummary,
};
