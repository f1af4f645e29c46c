//! Places of the rational function field `F_q(t)`.
//!
//! A finite place is a monic irreducible polynomial `pi`; the remaining
//! place is the degree-one place at infinity (`1/t`). The residue field at a
//! finite place `pi` is `F_q[t]/(pi)`, of size `q^{deg pi}`.
//!
//! The crate fixes the differential `dt` on the projective line, whose
//! divisor is `-2 * infinity`; the per-place exponents `k_v` of that divisor
//! (0 at finite places, -2 at infinity) drive the self-dual measure
//! normalizations in the Fourier analysis.

use std::sync::Arc;

use super::ext::{Ext, ExtCtx};
use super::factor::{factor, is_irreducible};

use super::fq::FqElem;
use super::poly::{Poly, PolyFq};
use super::rational::{rat_pow, Rat};
use crate::{Error, Result};

/// A place of `F_q(t)`.
#[derive(Clone, PartialEq, Eq)]
pub enum Place {
    /// Finite place: a monic irreducible polynomial.
    Finite(PolyFq),
    /// The place at infinity (valuation `deg(den) - deg(num)`).
    Infinity,
}

impl std::fmt::Debug for Place {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Place::Finite(p) => write!(f, "({p})"),
            Place::Infinity => write!(f, "(infinity)"),
        }
    }
}

impl std::fmt::Display for Place {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Place::Finite(p) => write!(f, "{p}"),
            Place::Infinity => write!(f, "infinity"),
        }
    }
}

impl Place {
    /// Builds a finite place, validating monicity and irreducibility.
    pub fn finite(pi: PolyFq) -> Result<Self> {
        if !pi.is_monic() || !is_irreducible(&pi) {
            return Err(Error::invalid(
                "a finite place must be a monic irreducible polynomial",
            ));
        }
        Ok(Place::Finite(pi))
    }

    /// Degree of the place (residue field is `F_{q^deg}`).
    pub fn degree(&self) -> usize {
        match self {
            Place::Finite(p) => p.degree().expect("places are nonconstant"),
            Place::Infinity => 1,
        }
    }

    /// Exponent of the divisor of `dt` at this place: 0 at finite places,
    /// -2 at infinity.
    pub fn dt_exponent(&self) -> i64 {
        match self {
            Place::Finite(_) => 0,
            Place::Infinity => -2,
        }
    }

    /// Residue-field size `q^deg` for field size `q`.
    pub fn norm(&self, q: u64) -> u64 {
        q.pow(self.degree() as u32)
    }

    /// Valuation of a nonzero polynomial.
    pub fn valuation_poly(&self, f: &PolyFq) -> Result<i64> {
        if f.is_zero() {
            return Err(Error::ZeroInput);
        }
        match self {
            Place::Infinity => Ok(-(f.degree().unwrap() as i64)),
            Place::Finite(pi) => {
                let mut v = 0i64;
                let mut rest = f.clone();
                loop {
                    let (qout, r) = rest.divmod(pi);
                    if !r.is_zero() {
                        return Ok(v);
                    }
                    v += 1;
                    rest = qout;
                }
            }
        }
    }

    /// Valuation of the rational function `num/den`.
    pub fn valuation(&self, num: &PolyFq, den: &PolyFq) -> Result<i64> {
        if den.is_zero() {
            return Err(Error::invalid("zero denominator"));
        }
        Ok(self.valuation_poly(num)? - self.valuation_poly(den)?)
    }

    /// Normalized absolute value `|x|_v = q_v^{-v(x)}` of `num/den`.
    pub fn abs_value(&self, q: u64, num: &PolyFq, den: &PolyFq) -> Result<Rat> {
        let v = self.valuation(num, den)?;
        Ok(rat_pow(self.norm(q), -v))
    }

    /// Residue field `k(pi)` as an extension of `F_q`; errors at infinity
    /// (use a coordinate change to move it to a finite place instead).
    pub fn residue_field(&self) -> Result<Arc<ExtCtx<FqElem>>> {
        match self {
            Place::Finite(pi) => ExtCtx::new(pi.clone()),
            Place::Infinity => Err(Error::invalid("residue field at infinity not materialized")),
        }
    }

    /// Reduction of a polynomial into the residue field at a finite place.
    pub fn reduce(&self, ctx: &Arc<ExtCtx<FqElem>>, f: &PolyFq) -> Ext<FqElem> {
        Ext::from_poly(ctx, f)
    }
}

/// All finite places of degree exactly `d` (i.e. monic irreducibles),
/// ordered by coefficient index.
pub fn finite_places_of_degree(sample: &FqElem, d: usize) -> Vec<Place> {
    Poly::monics_of_degree(sample, d)
        .into_iter()
        .filter(is_irreducible)
        .map(Place::Finite)
        .collect()
}

/// The first `n` places in the canonical order: infinity first, then finite
/// places by (degree, coefficient index).
pub fn lowest_places(sample: &FqElem, n: usize) -> Vec<Place> {
    let mut out = vec![Place::Infinity];
    let mut d = 1;
    while out.len() < n {
        out.extend(finite_places_of_degree(sample, d));
        d += 1;
    }
    out.truncate(n);
    out
}

/// Number of monic irreducible polynomials of degree `d` over `F_q`, by
/// Moebius inversion of `q^n = sum_{d | n} d N_d`.
pub fn count_monic_irreducible(q: u64, d: u32) -> u128 {
    let mut total: i128 = 0;
    for e in 1..=d {
        if d % e != 0 {
            continue;
        }
        let mu = moebius((d / e) as u64);
        if mu != 0 {
            total += mu as i128 * (q as i128).pow(e);
        }
    }
    debug_assert!(total > 0 && total % d as i128 == 0);
    (total / d as i128) as u128
}

/// Moebius function for small arguments.
pub fn moebius(mut n: u64) -> i64 {
    let mut primes = 0;
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            n /= d;
            if n % d == 0 {
                return 0;
            }
            primes += 1;
        }
        d += 1;
    }
    if n > 1 {
        primes += 1;
    }
    if primes % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Product-formula check data: the sum `sum_v v(x) deg(v)` over all places,
/// which must vanish for nonzero `x = num/den`.
pub fn degree_weighted_valuation_sum(num: &PolyFq, den: &PolyFq) -> Result<i64> {
    if num.is_zero() {
        return Err(Error::ZeroInput);
    }
    let mut total = 0i64;
    for (part, sign) in [(num, 1i64), (den, -1i64)] {
        let fac = factor(part)?;
        for (pi, e) in &fac.factors {
            total += sign * (*e as i64) * pi.degree().unwrap() as i64;
        }
    }
    total += Place::Infinity.valuation(num, den)? * Place::Infinity.degree() as i64;
    Ok(total)
}
