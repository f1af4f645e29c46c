//! How robustly `pi^2` divides a cubic discriminant over `F_q[t]`.
//!
//! For a form `f` with `pi^2 | disc(f)`, the divisibility either survives
//! every perturbation of `f` by a multiple of `pi` or it does not. Since
//! `disc(f + pi g) = disc(f) + pi <grad disc(f), g>  (mod pi^2)`, the strong
//! case is decided by reducing the discriminant gradient mod `pi`.
//! [`disc_divisibility_by_lifts`] settles the same question by exhausting
//! all lifts mod `pi^2` in a residue ring, with no gradient reasoning.

use crate::arith::{Field, Place, Poly, PolyFq};
use crate::forms::{FormV3, ResidueCtx, Ring};
use crate::{Error, Result};

/// Behavior of `pi^2 | disc` under perturbations of the form by `pi`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DivisibilityClass {
    /// `pi^2` does not divide the discriminant.
    None,
    /// `pi^2` divides the discriminant of `f` but not of some lift
    /// `f' = f (mod pi)`.
    Weak,
    /// `pi^2` divides the discriminant of every lift `f' = f (mod pi)`.
    Strong,
}

impl std::fmt::Display for DivisibilityClass {
    fn fmt(&self, fo: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            DivisibilityClass::None => "none",
            DivisibilityClass::Weak => "weak",
            DivisibilityClass::Strong => "strong",
        };
        write!(fo, "{s}")
    }
}

/// Largest number of lifts the exhaustive oracle accepts.
pub const DEFAULT_LIFT_BUDGET: u64 = 1_000_000;

fn finite_part(place: &Place) -> Result<&PolyFq> {
    match place {
        Place::Finite(pi) => Ok(pi),
        Place::Infinity => Err(Error::invalid(
            "divisibility classes are defined at finite places only",
        )),
    }
}

/// Classifies `pi^2 | disc(f)` via the discriminant gradient.
///
/// Errors with "degenerate form" when `disc(f) = 0`.
pub fn disc_divisibility_class(f: &FormV3<PolyFq>, place: &Place) -> Result<DivisibilityClass> {
    let disc = f.disc();
    if disc.is_zero() {
        return Err(Error::DegenerateForm);
    }
    let pi = finite_part(place)?;
    if place.valuation_poly(&disc)? < 2 {
        return Ok(DivisibilityClass::None);
    }
    let strong = f.disc_gradient().iter().all(|p| p.rem(pi).is_zero());
    Ok(if strong {
        DivisibilityClass::Strong
    } else {
        DivisibilityClass::Weak
    })
}

/// All residues mod `pi`, as polynomials of degree below `deg pi`.
fn residues_mod(pi: &PolyFq) -> Vec<PolyFq> {
    let d = pi.degree().expect("modulus is nonzero") as u32;
    let sample = pi.coeff(0);
    let elems = sample.all_elements();
    let q = elems.len();
    let mut out = Vec::with_capacity(q.pow(d));
    for idx in 0..q.pow(d) {
        let mut k = idx;
        let coeffs = (0..d)
            .map(|_| {
                let c = elems[k % q].clone();
                k /= q;
                c
            })
            .collect();
        out.push(Poly::from_coeffs(&sample, coeffs));
    }
    out
}

/// Same classification as [`disc_divisibility_class`], by checking
/// `pi^2 | disc(f + pi g)` for every `g` mod `pi` in the residue ring mod
/// `pi^2`. The lift count is `q^(4 deg pi)`; exceeding `budget` errors.
pub fn disc_divisibility_by_lifts(
    f: &FormV3<PolyFq>,
    place: &Place,
    budget: u64,
) -> Result<DivisibilityClass> {
    let disc = f.disc();
    if disc.is_zero() {
        return Err(Error::DegenerateForm);
    }
    let pi = finite_part(place)?;
    if place.valuation_poly(&disc)? < 2 {
        return Ok(DivisibilityClass::None);
    }
    let d = pi.degree().expect("modulus is nonzero") as u32;
    let q = pi.coeff(0).order() as u128;
    let total = q
        .checked_pow(4 * d)
        .filter(|&n| n <= budget as u128)
        .ok_or_else(|| {
            Error::Budget(format!(
                "q^(4 deg pi) lifts at a degree-{d} place, budget {budget}"
            ))
        })?;
    let residues = residues_mod(pi);
    let ctx = ResidueCtx::new(pi.mul(pi))?;
    let base = f.to_vec();
    let nr = residues.len() as u128;
    for idx in 0..total {
        let mut k = idx;
        let lifted: Vec<_> = base
            .iter()
            .map(|c| {
                let g = &residues[(k % nr) as usize];
                k /= nr;
                ctx.elem(&c.add(&pi.mul(g)))
            })
            .collect();
        let [a, b, c3, d3] = lifted.try_into().expect("a cubic form has 4 coefficients");
        if !FormV3::new(a, b, c3, d3).disc().is_zero() {
            return Ok(DivisibilityClass::Weak);
        }
    }
    Ok(DivisibilityClass::Strong)
}
