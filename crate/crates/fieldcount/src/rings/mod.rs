//! Cubic rings attached to binary cubic forms, and the local data read off
//! them: splitting types at places, maximality, orbit censuses over finite
//! fields, and discriminant-divisibility classes.
//!
//! A form `f = a x^3 + b x^2 y + c x y^2 + d y^3` determines the ring with
//! basis `(1, omega, theta)` described in [`cubic`]; the correspondence
//! sends group translates of `f` to isomorphic rings and matches `disc(f)`
//! with the trace-form discriminant. Degree-2 forms correspond to quadratic
//! rings only when 2 is invertible in the base, which every odd-order field
//! here satisfies; no separate quadratic ring type is materialized, the
//! square class of the discriminant already determines the ring. Quartic
//! pairs get splitting types and orbit statistics but no ring construction.

pub mod cubic;
pub mod divisibility;
pub mod maximality;
pub mod orbits;
pub mod splitting;

pub use cubic::{CubicElem, CubicRing};
pub use divisibility::{
    disc_divisibility_by_lifts, disc_divisibility_class, DivisibilityClass, DEFAULT_LIFT_BUDGET,
};
pub use maximality::{
    is_maximal_at, is_maximal_by_scan, verify_witness, EnlargementWitness, MaximalityVerdict,
};
pub use orbits::{
    dim_v, field_basis, generators, group_order, multiplicative_generator, orbit_census_fq,
    stabilizer_order, OrbitCensus, OrbitRow, CENSUS_SPACE_BUDGET, DEFAULT_GROUP_BUDGET,
};
pub use splitting::{
    splitting_type_cubic, splitting_type_cubic_at, splitting_type_of, splitting_type_quadratic,
    splitting_type_quartic, splitting_type_quartic_at, splitting_type_quartic_by_counts,
    SplittingType,
};
