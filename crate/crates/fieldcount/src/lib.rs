//! Exact counting of low-degree ring and field extensions over global fields.
//!
//! The crate provides, over both `Q` and rational function fields `F_q(t)`:
//!
//! * exact finite-field and polynomial arithmetic, including factorization
//!   over `F_q` for odd `q` ([`arith`]);
//! * the standard prehomogeneous coefficient spaces for counting ring
//!   extensions of degree 2, 3 and 4, with their group actions,
//!   discriminants and relative-invariance characters ([`forms`]);
//! * the dictionary between binary cubic forms (resp. pairs of ternary
//!   quadratic forms) and cubic (resp. quartic) rings: ring structure
//!   constants, maximality at a finite place, splitting types, stabilizers,
//!   and full orbit censuses over small finite fields ([`rings`]);
//! * exact local masses of etale algebras, Euler factors and certified
//!   density predictions as rational intervals ([`mass`]);
//! * geometry-of-numbers tools over `F_q(t)`: additive characters by
//!   residues, Fourier transforms of adelic boxes, Poisson summation, and
//!   exact count-versus-volume checks ([`geonum`]);
//! * exact rational linear-programming certificates showing cusp regions of
//!   the degree-4 coefficient space carry no irreducible points ([`cusp`]);
//! * a census driver that enumerates binary cubic forms over `F_q[t]` in a
//!   coefficient-degree box, canonicalizes orbits, and tabulates counts of
//!   generic maximal classes by discriminant degree against the predicted
//!   density ([`census`]).
//!
//! Counts are exact integers and densities are exact rationals or rational
//! intervals throughout; floating point is never used in a result.
//!
//! The `parallel` feature (on by default) enables a rayon-based data-parallel
//! path for the large sweeps. The sequential path is always compiled and can
//! be selected at runtime, so the two can be benchmarked against each other.

pub mod arith;
pub mod census;
pub mod cusp;
pub mod error;
pub mod forms;
pub mod geonum;
pub mod mass;
pub mod par;
pub mod rings;

pub use error::Error;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
