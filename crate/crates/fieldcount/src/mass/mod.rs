//! Local masses and the certified density predictions assembled from them.
//!
//! The density of degree-`n` extensions ordered by discriminant norm is an
//! Euler product: a leading zeta residue, an unweighted mass per place in
//! the chosen exclusion set, and a discriminant-weighted local factor per
//! remaining place. Three layers supply it:
//!
//! * [`partitions`]: the closed-form local factors. The weighted local
//!   mass at a place of norm `np` is `sum_k q(k, n-k) np^{-k}` with
//!   `q(k, m)` counting partitions of `k` into at most `m` parts, and
//!   `(1 - np^{-1})` times that sum is the degree-`n` Euler factor
//!   polynomial evaluated at `np^{-1}`. Archimedean masses count real and
//!   complex algebras by involutions.
//! * [`tame`]: an independent enumeration of tame local algebras through
//!   the Frobenius-inertia presentation. It never touches partition
//!   counts, so agreement with the closed form is a real check rather
//!   than a restatement.
//! * [`density`]: exact truncated products with certified tail intervals,
//!   over the rationals and over rational function fields.

pub mod density;
pub mod partitions;
pub mod tame;

pub use density::{
    ff_zeta_residue, predicted_density, DensityPrediction, ExplicitClass, FfZetaResidue,
    FieldDescriptor, LocalSpec, LocalSpecMode, PlaceRef,
};
pub use partitions::{
    euler_factor, local_mass_arch, local_mass_nonarch, partitions_at_most, sn_involutions,
    ArchKind, EulerFactorPoly,
};
pub use tame::{
    tame_local_mass_oracle, tame_unweighted_mass, TameAlgebraClass, TameLocalMass, TamePiece,
};
