//! The run-time field `F_q`, `q = p^e`, as a two-variant enum over the
//! prime field and its extension.
//!
//! Downstream code works with `FqElem` concretely (no generics in public
//! signatures); the inner representation is [`Fp`] for `e = 1` and
//! [`Ext<Fp>`] for `e >= 2`. Elements of `F_{p^e}` print and parse as
//! polynomials in the generator `u` with digit coefficients, e.g. `2+u`.


use serde::{Deserialize, Serialize};

use super::ext::{Ext, ExtCtx};
use super::field::Field;
use super::fp::{is_small_odd_prime, Fp};
use super::poly::Poly;
use crate::{Error, Result};

/// Configuration of a finite field `F_{p^e}`.
///
/// `p` must be an odd prime and `e >= 1`. The optional modulus (little-endian
/// digit coefficients of a monic degree-`e` polynomial over `F_p`, including
/// the leading 1) pins the representation of `F_{p^e}`; when omitted, the
/// first irreducible monic polynomial in index order is used, so the choice
/// is deterministic.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct FqCfg {
    pub p: u64,
    pub e: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub modulus: Option<Vec<u64>>,
}

impl FqCfg {
    /// Prime-field configuration.
    pub fn prime(p: u64) -> Self {
        FqCfg { p, e: 1, modulus: None }
    }

    /// Extension-field configuration with the default modulus.
    pub fn new(p: u64, e: u32) -> Self {
        FqCfg { p, e, modulus: None }
    }

    /// Configuration for the field of the given order, which must be a
    /// power of an odd prime.
    pub fn from_order(q: u64) -> Result<Self> {
        if q < 3 || q % 2 == 0 {
            return Err(Error::invalid(format!("no odd field of order {q}")));
        }
        let mut p = q;
        let mut e = 1u32;
        for cand in 3..=q {
            if cand * cand > q {
                break;
            }
            if q % cand == 0 {
                p = cand;
                let mut rest = q;
                e = 0;
                while rest % cand == 0 {
                    rest /= cand;
                    e += 1;
                }
                if rest != 1 {
                    return Err(Error::invalid(format!("{q} is not a prime power")));
                }
                break;
            }
        }
        Ok(FqCfg { p, e, modulus: None })
    }

    /// Validates the configuration and builds the field context.
    pub fn build(&self) -> Result<FqCtx> {
        if !is_small_odd_prime(self.p) {
            return Err(Error::invalid(format!(
                "field characteristic {} is not an odd prime",
                self.p
            )));
        }
        if self.e == 0 {
            return Err(Error::invalid("field extension degree must be >= 1"));
        }
        if self.e == 1 {
            if self.modulus.is_some() {
                return Err(Error::invalid("prime field takes no modulus"));
            }
            return Ok(FqCtx {
                sample: FqElem::P(Fp::new(self.p, 0)),
            });
        }
        let fp = Fp::new(self.p, 0);
        let modulus = match &self.modulus {
            Some(digits) => {
                if digits.len() != self.e as usize + 1 {
                    return Err(Error::invalid(format!(
                        "modulus must have degree {} (got {} coefficients)",
                        self.e,
                        digits.len()
                    )));
                }
                Poly::from_coeffs(&fp, digits.iter().map(|&d| fp.from_int(d as i64)).collect())
            }
            None => default_modulus(self.p, self.e),
        };
        let ctx = ExtCtx::new(modulus)?;
        Ok(FqCtx {
            sample: FqElem::E(Ext::zero_of(&ctx)),
        })
    }
}

/// First monic irreducible polynomial of degree `e` over `F_p` in index
/// order (constant coefficient least significant).
fn default_modulus(p: u64, e: u32) -> Poly<Fp> {
    let fp = Fp::new(p, 0);
    Poly::monics_of_degree(&fp, e as usize)
        .into_iter()
        .find(super::factor::is_irreducible)
        .expect("an irreducible polynomial of every degree exists")
}

/// Built field context: a sample element plus conveniences.
#[derive(Debug, Clone)]
pub struct FqCtx {
    sample: FqElem,
}

impl FqCtx {
    /// Sample (zero) element carrying the field description.
    pub fn sample(&self) -> &FqElem {
        &self.sample
    }

    pub fn order(&self) -> u64 {
        self.sample.order()
    }

    pub fn characteristic(&self) -> u64 {
        self.sample.characteristic()
    }

    pub fn elem_from_int(&self, n: i64) -> FqElem {
        self.sample.from_int(n)
    }

    pub fn elem_from_index(&self, idx: u64) -> FqElem {
        self.sample.from_index(idx)
    }

    /// Generator `u` of the extension (errors for a prime field, where the
    /// symbol `u` has no meaning).
    pub fn generator(&self) -> Result<FqElem> {
        match &self.sample {
            FqElem::P(_) => Err(Error::invalid("prime field has no generator symbol u")),
            FqElem::E(e) => Ok(FqElem::E(Ext::generator(e.ctx()))),
        }
    }

    /// All field elements in index order.
    pub fn elements(&self) -> Vec<FqElem> {
        self.sample.all_elements()
    }

    /// Zero polynomial over this field.
    pub fn poly_zero(&self) -> Poly<FqElem> {
        Poly::zero(&self.sample)
    }

    /// The polynomial variable `t`.
    pub fn poly_var(&self) -> Poly<FqElem> {
        Poly::var(&self.sample)
    }

    /// Polynomial from integer coefficients, little-endian.
    pub fn poly_from_ints(&self, coeffs: &[i64]) -> Poly<FqElem> {
        Poly::from_coeffs(
            &self.sample,
            coeffs.iter().map(|&v| self.elem_from_int(v)).collect(),
        )
    }
}

/// Element of the run-time field `F_q`.
#[derive(Clone, PartialEq, Eq)]
pub enum FqElem {
    /// Prime-field element.
    P(Fp),
    /// Extension-field element.
    E(Ext<Fp>),
}

impl FqElem {
    fn lift2<FP, FE>(&self, other: &Self, fp: FP, fe: FE) -> Self
    where
        FP: FnOnce(&Fp, &Fp) -> Fp,
        FE: FnOnce(&Ext<Fp>, &Ext<Fp>) -> Ext<Fp>,
    {
        match (self, other) {
            (FqElem::P(a), FqElem::P(b)) => FqElem::P(fp(a, b)),
            (FqElem::E(a), FqElem::E(b)) => FqElem::E(fe(a, b)),
            _ => panic!("mixed prime/extension field elements"),
        }
    }

    /// Coordinates over the prime field (length e).
    pub fn prime_coords(&self) -> Vec<u64> {
        match self {
            FqElem::P(a) => vec![a.value()],
            FqElem::E(a) => a.coords().iter().map(|x| x.value()).collect(),
        }
    }

    /// Absolute trace down to the prime field, as a value in `0..p`.
    pub fn trace_to_prime(&self) -> u64 {
        match self {
            FqElem::P(a) => a.value(),
            FqElem::E(a) => a.trace_to_base().value(),
        }
    }
}

impl std::fmt::Debug for FqElem {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{self}")
    }
}

impl std::fmt::Display for FqElem {
    /// Prints in the coefficient grammar: a digit for prime fields, and a
    /// polynomial in the generator `u` (ascending powers) otherwise, e.g.
    /// `2+u` or `2*u^2`.
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            FqElem::P(a) => write!(f, "{}", a.value()),
            FqElem::E(a) => {
                let coords = a.coords();
                let mut parts = Vec::new();
                for (k, x) in coords.iter().enumerate() {
                    if x.is_zero() {
                        continue;
                    }
                    let part = match k {
                        0 => format!("{}", x.value()),
                        1 if x.is_one() => "u".to_string(),
                        1 => format!("{}*u", x.value()),
                        _ if x.is_one() => format!("u^{k}"),
                        _ => format!("{}*u^{k}", x.value()),
                    };
                    parts.push(part);
                }
                if parts.is_empty() {
                    write!(f, "0")
                } else {
                    write!(f, "{}", parts.join("+"))
                }
            }
        }
    }
}

impl Field for FqElem {
    fn characteristic(&self) -> u64 {
        match self {
            FqElem::P(a) => a.characteristic(),
            FqElem::E(a) => a.characteristic(),
        }
    }

    fn degree_over_prime(&self) -> u32 {
        match self {
            FqElem::P(a) => a.degree_over_prime(),
            FqElem::E(a) => a.degree_over_prime(),
        }
    }

    fn zero(&self) -> Self {
        match self {
            FqElem::P(a) => FqElem::P(a.zero()),
            FqElem::E(a) => FqElem::E(a.zero()),
        }
    }

    fn one(&self) -> Self {
        match self {
            FqElem::P(a) => FqElem::P(a.one()),
            FqElem::E(a) => FqElem::E(a.one()),
        }
    }

    fn is_zero(&self) -> bool {
        match self {
            FqElem::P(a) => a.is_zero(),
            FqElem::E(a) => a.is_zero(),
        }
    }

    fn add(&self, other: &Self) -> Self {
        self.lift2(other, |a, b| a.add(b), |a, b| a.add(b))
    }

    fn sub(&self, other: &Self) -> Self {
        self.lift2(other, |a, b| a.sub(b), |a, b| a.sub(b))
    }

    fn mul(&self, other: &Self) -> Self {
        self.lift2(other, |a, b| a.mul(b), |a, b| a.mul(b))
    }

    fn neg(&self) -> Self {
        match self {
            FqElem::P(a) => FqElem::P(a.neg()),
            FqElem::E(a) => FqElem::E(a.neg()),
        }
    }

    fn inv(&self) -> Option<Self> {
        match self {
            FqElem::P(a) => a.inv().map(FqElem::P),
            FqElem::E(a) => a.inv().map(FqElem::E),
        }
    }

    fn from_int(&self, n: i64) -> Self {
        match self {
            FqElem::P(a) => FqElem::P(a.from_int(n)),
            FqElem::E(a) => FqElem::E(a.from_int(n)),
        }
    }

    fn index(&self) -> u64 {
        match self {
            FqElem::P(a) => a.index(),
            FqElem::E(a) => a.index(),
        }
    }

    fn from_index(&self, idx: u64) -> Self {
        match self {
            FqElem::P(a) => FqElem::P(a.from_index(idx)),
            FqElem::E(a) => FqElem::E(a.from_index(idx)),
        }
    }
}
