//! Exact coefficient rings for forms.
//!
//! Everything in this crate that manipulates forms is generic over [`Ring`],
//! a minimal commutative-ring interface. Instances cover the integers,
//! rationals, finite fields, polynomial rings `F_q[t]`, and quotients
//! `F_q[t]/(m)`, so one discriminant implementation serves finite-field orbit
//! scans, local computations mod powers of a prime, and global enumeration.
//!
//! As with [`Field`](crate::arith::Field), methods take `&self` so that an
//! element doubles as the description of its own ring; `zero`, `one`, and
//! `from_int` build new elements in the ring of the receiver.

use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::arith::{Ext, Field, Fp, FqElem, Poly, Rat};

/// An element of an exact commutative ring with identity.
pub trait Ring: Clone + PartialEq + std::fmt::Debug + Send + Sync {
    /// Additive identity of the same ring.
    fn zero(&self) -> Self;

    /// Multiplicative identity of the same ring.
    fn one(&self) -> Self;

    fn is_zero(&self) -> bool;

    fn add(&self, other: &Self) -> Self;

    fn sub(&self, other: &Self) -> Self;

    fn mul(&self, other: &Self) -> Self;

    fn neg(&self) -> Self;

    /// Multiplicative inverse; `None` when the element is not a unit.
    fn inv(&self) -> Option<Self>;

    /// Image of the integer `n` under the canonical map `Z -> R`.
    fn from_int(&self, n: i64) -> Self;

    fn is_one(&self) -> bool {
        *self == self.one()
    }

    /// Repeated squaring; `pow_u(0)` is one.
    fn pow_u(&self, mut e: u64) -> Self {
        let mut base = self.clone();
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }
}

/// Field elements are ring elements; generated per concrete type to keep
/// method calls unambiguous where only one of the two traits is imported.
macro_rules! impl_ring_for_field {
    ($t:ty) => {
        impl Ring for $t {
            fn zero(&self) -> Self {
                Field::zero(self)
            }
            fn one(&self) -> Self {
                Field::one(self)
            }
            fn is_zero(&self) -> bool {
                Field::is_zero(self)
            }
            fn add(&self, other: &Self) -> Self {
                Field::add(self, other)
            }
            fn sub(&self, other: &Self) -> Self {
                Field::sub(self, other)
            }
            fn mul(&self, other: &Self) -> Self {
                Field::mul(self, other)
            }
            fn neg(&self) -> Self {
                Field::neg(self)
            }
            fn inv(&self) -> Option<Self> {
                Field::inv(self)
            }
            fn from_int(&self, n: i64) -> Self {
                Field::from_int(self, n)
            }
        }
    };
}

impl_ring_for_field!(Fp);
impl_ring_for_field!(FqElem);
impl_ring_for_field!(Ext<Fp>);
impl_ring_for_field!(Ext<FqElem>);
impl_ring_for_field!(Ext<Ext<Fp>>);

impl Ring for BigInt {
    fn zero(&self) -> Self {
        <BigInt as Zero>::zero()
    }
    fn one(&self) -> Self {
        <BigInt as One>::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn inv(&self) -> Option<Self> {
        if One::is_one(&self.abs()) {
            Some(self.clone())
        } else {
            None
        }
    }
    fn from_int(&self, n: i64) -> Self {
        BigInt::from(n)
    }
}

impl Ring for Rat {
    fn zero(&self) -> Self {
        <Rat as Zero>::zero()
    }
    fn one(&self) -> Self {
        <Rat as One>::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn inv(&self) -> Option<Self> {
        if Zero::is_zero(self) {
            None
        } else {
            Some(self.recip())
        }
    }
    fn from_int(&self, n: i64) -> Self {
        Rat::from(BigInt::from(n))
    }
}

impl<F: Field> Ring for Poly<F> {
    fn zero(&self) -> Self {
        Poly::zero(self.sample())
    }
    fn one(&self) -> Self {
        Poly::constant(&self.sample().one())
    }
    fn is_zero(&self) -> bool {
        Poly::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        Poly::add(self, other)
    }
    fn sub(&self, other: &Self) -> Self {
        Poly::sub(self, other)
    }
    fn mul(&self, other: &Self) -> Self {
        Poly::mul(self, other)
    }
    fn neg(&self) -> Self {
        Poly::neg(self)
    }
    fn inv(&self) -> Option<Self> {
        if self.degree() == Some(0) {
            self.coeff(0).inv().map(|c| Poly::constant(&c))
        } else {
            None
        }
    }
    fn from_int(&self, n: i64) -> Self {
        Poly::constant(&self.sample().from_int(n))
    }
}

/// Quotient ring `F[t]/(m)` for an arbitrary monic modulus of degree >= 1.
///
/// Unlike [`Ext`], the modulus need not be irreducible, so the ring may have
/// zero divisors (for example `F_q[t]/(pi^2)` with nilpotent `pi`). Units are
/// exactly the residues coprime to the modulus.
#[derive(Clone, Debug, PartialEq)]
pub struct ResidueCtx<F: Field> {
    modulus: Poly<F>,
}

impl<F: Field> ResidueCtx<F> {
    /// Builds the quotient by a monic modulus of degree at least 1.
    pub fn new(modulus: Poly<F>) -> crate::Result<Arc<Self>> {
        if modulus.degree().unwrap_or(0) < 1 {
            return Err(crate::Error::invalid("residue modulus must have degree >= 1"));
        }
        if !modulus.is_monic() {
            return Err(crate::Error::invalid("residue modulus must be monic"));
        }
        Ok(Arc::new(ResidueCtx { modulus }))
    }

    pub fn modulus(&self) -> &Poly<F> {
        &self.modulus
    }

    /// Reduction of a polynomial into the quotient.
    pub fn elem(self: &Arc<Self>, value: &Poly<F>) -> ResidueElem<F> {
        ResidueElem {
            ctx: Arc::clone(self),
            value: value.rem(&self.modulus),
        }
    }
}

/// An element of [`ResidueCtx`], stored as the reduced representative.
#[derive(Clone, Debug)]
pub struct ResidueElem<F: Field> {
    ctx: Arc<ResidueCtx<F>>,
    value: Poly<F>,
}

impl<F: Field> ResidueElem<F> {
    /// The canonical representative of degree below the modulus.
    pub fn value(&self) -> &Poly<F> {
        &self.value
    }

    pub fn ctx(&self) -> &Arc<ResidueCtx<F>> {
        &self.ctx
    }
}

impl<F: Field> PartialEq for ResidueElem<F> {
    fn eq(&self, other: &Self) -> bool {
        self.ctx.modulus == other.ctx.modulus && self.value == other.value
    }
}

impl<F: Field> Ring for ResidueElem<F> {
    fn zero(&self) -> Self {
        ResidueElem {
            ctx: Arc::clone(&self.ctx),
            value: Poly::zero(self.value.sample()),
        }
    }
    fn one(&self) -> Self {
        self.ctx.elem(&Poly::constant(&self.value.sample().one()))
    }
    fn is_zero(&self) -> bool {
        self.value.is_zero()
    }
    fn add(&self, other: &Self) -> Self {
        self.ctx.elem(&self.value.add(&other.value))
    }
    fn sub(&self, other: &Self) -> Self {
        self.ctx.elem(&self.value.sub(&other.value))
    }
    fn mul(&self, other: &Self) -> Self {
        self.ctx.elem(&self.value.mul(&other.value))
    }
    fn neg(&self) -> Self {
        self.ctx.elem(&self.value.neg())
    }
    fn inv(&self) -> Option<Self> {
        let (g, s, _) = self.value.xgcd(&self.ctx.modulus);
        if g.is_one() {
            Some(self.ctx.elem(&s))
        } else {
            None
        }
    }
    fn from_int(&self, n: i64) -> Self {
        self.ctx
            .elem(&Poly::constant(&self.value.sample().from_int(n)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::FqCfg;

    fn bi(n: i64) -> BigInt {
        BigInt::from(n)
    }

    #[test]
    fn bigint_units_are_plus_minus_one() {
        assert_eq!(Ring::inv(&bi(1)), Some(bi(1)));
        assert_eq!(Ring::inv(&bi(-1)), Some(bi(-1)));
        assert_eq!(Ring::inv(&bi(2)), None);
        assert_eq!(Ring::inv(&bi(0)), None);
    }

    #[test]
    fn rational_inverse() {
        let half = Rat::new(bi(1), bi(2));
        assert_eq!(Ring::inv(&half), Some(Rat::new(bi(2), bi(1))));
        assert_eq!(Ring::inv(&Rat::from(bi(0))), None);
    }

    #[test]
    fn poly_units_are_nonzero_constants() {
        let ctx = FqCfg::prime(5).build().unwrap();
        let two = ctx.poly_from_ints(&[2]);
        let t = ctx.poly_var();
        let inv = Ring::inv(&two).unwrap();
        assert!(inv.mul(&two).is_one());
        assert_eq!(Ring::inv(&t), None);
    }

    #[test]
    fn residue_ring_mod_t_squared_has_nilpotents() {
        let ctx = FqCfg::prime(5).build().unwrap();
        let t = ctx.poly_var();
        let quot = ResidueCtx::new(t.mul(&t)).unwrap();
        let tbar = quot.elem(&t);
        assert!(tbar.mul(&tbar).is_zero());
        assert_eq!(tbar.inv(), None);
        // 1 + t is a unit with inverse 1 - t since (1+t)(1-t) = 1 - t^2.
        let one_plus_t = tbar.one().add(&tbar);
        let inv = one_plus_t.inv().unwrap();
        assert!(inv.mul(&one_plus_t).is_one());
        assert_eq!(inv, tbar.one().sub(&tbar));
    }

    #[test]
    fn residue_ring_rejects_bad_modulus() {
        let ctx = FqCfg::prime(5).build().unwrap();
        let c = ctx.poly_from_ints(&[3]);
        assert!(ResidueCtx::new(c).is_err());
        let t = ctx.poly_var();
        assert!(ResidueCtx::new(t.scale(&ctx.elem_from_int(2))).is_err());
    }

    #[test]
    fn from_int_reduces_in_finite_fields() {
        let ctx = FqCfg::prime(5).build().unwrap();
        let one = ctx.elem_from_int(1);
        let seven = Ring::from_int(&one, 7);
        assert_eq!(seven, ctx.elem_from_int(2));
        assert!(Ring::is_one(&Ring::pow_u(&seven, 4)));
    }
}
