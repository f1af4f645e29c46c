//! Exact base arithmetic: finite fields, dense polynomials, factorization,
//! places of `F_q(t)`, rational intervals, and cyclotomic numbers.
//!
//! Finite fields are represented concretely. The prime field `F_p` is a
//! machine integer residue ([`fp::Fp`]); an extension is a quotient
//! `F[z]/(m)` by a monic irreducible modulus over any base field
//! ([`ext::Ext`]), so towers such as the residue field `k(pi)` of a place or
//! the point-counting fields `F_{q^k}` all reuse one construction. The
//! run-time field `F_q` of the public API is the two-variant enum
//! [`fq::FqElem`].
//!
//! Elements carry their field description, so there is no global context;
//! binary operations require both operands from the same field and panic on
//! a mismatch (a logic error, not a data error).

pub mod cyclotomic;
pub mod ext;
pub mod factor;
pub mod field;
pub mod fp;
pub mod fq;
pub mod linalg;
pub mod parse;
pub mod places;
pub mod poly;
pub mod rational;

pub use cyclotomic::CycQ;
pub use ext::{Ext, ExtCtx};
pub use field::Field;
pub use fp::Fp;
pub use fq::{FqCfg, FqCtx, FqElem};
pub use places::Place;
pub use poly::{Poly, PolyFq};
pub use rational::{rat, rat_pow, RationalInterval};

/// Exact rational number used throughout the crate.
pub type Rat = num_rational::BigRational;
