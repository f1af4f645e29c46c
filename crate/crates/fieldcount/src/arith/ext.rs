//! Extension field `F[z]/(m)` for a monic irreducible modulus `m` over any
//! base field `F`.
//!
//! One construction covers every extension the crate needs: `F_{p^e}` over
//! `F_p`, the residue field `k(pi) = F_q[t]/(pi)` of a finite place, and
//! the point-counting fields `F_{q^k}` over `F_q`. The base field embeds as
//! the constant coefficients, so no root-finding is needed to move
//! coefficients into the extension.

use std::sync::Arc;

use super::factor::is_irreducible;
use super::field::Field;
use super::poly::Poly;
use crate::{Error, Result};

/// Shared description of the quotient `F[z]/(m)`.
#[derive(Debug)]
pub struct ExtCtx<F: Field> {
    modulus: Poly<F>,
    degree: usize,
    order: u64,
}

impl<F: Field> ExtCtx<F> {
    /// Builds the quotient field. The modulus must be monic, of degree at
    /// least 1, and irreducible over the base field.
    pub fn new(modulus: Poly<F>) -> Result<Arc<Self>> {
        let degree = match modulus.degree() {
            Some(d) if d >= 1 => d,
            _ => return Err(Error::invalid("extension modulus must have degree >= 1")),
        };
        if !modulus.is_monic() {
            return Err(Error::invalid("extension modulus must be monic"));
        }
        if !is_irreducible(&modulus) {
            return Err(Error::invalid("extension modulus must be irreducible"));
        }
        let base_order = modulus.sample().order();
        let order = base_order
            .checked_pow(degree as u32)
            .ok_or_else(|| Error::invalid("extension field too large"))?;
        Ok(Arc::new(ExtCtx {
            modulus,
            degree,
            order,
        }))
    }

    /// The defining modulus.
    pub fn modulus(&self) -> &Poly<F> {
        &self.modulus
    }

    /// Degree of the extension over its base field.
    pub fn degree(&self) -> usize {
        self.degree
    }

    fn base_sample(&self) -> &F {
        self.modulus.sample()
    }
}

/// Element of `F[z]/(m)`: coefficients of `1, z, ..., z^{d-1}`.
#[derive(Clone)]
pub struct Ext<F: Field> {
    ctx: Arc<ExtCtx<F>>,
    c: Vec<F>,
}

impl<F: Field> PartialEq for Ext<F> {
    fn eq(&self, other: &Self) -> bool {
        debug_assert!(
            Arc::ptr_eq(&self.ctx, &other.ctx) || self.ctx.modulus == other.ctx.modulus,
            "comparing elements of different extension fields"
        );
        self.c == other.c
    }
}

impl<F: Field> Eq for Ext<F> {}

impl<F: Field> std::fmt::Debug for Ext<F> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "ext{:?}", self.c)
    }
}

impl<F: Field> Ext<F> {
    /// Zero element of the quotient field.
    pub fn zero_of(ctx: &Arc<ExtCtx<F>>) -> Self {
        Ext {
            ctx: Arc::clone(ctx),
            c: vec![ctx.base_sample().zero(); ctx.degree],
        }
    }

    /// Class of the generator `z`.
    pub fn generator(ctx: &Arc<ExtCtx<F>>) -> Self {
        let mut e = Ext::zero_of(ctx);
        if ctx.degree == 1 {
            // z = -m(0) in a degree-1 quotient.
            e.c[0] = ctx.modulus.coeff(0).neg();
        } else {
            e.c[1] = e.c[1].one();
        }
        e
    }

    /// Embeds a base-field element as a constant.
    pub fn embed(ctx: &Arc<ExtCtx<F>>, x: &F) -> Self {
        let mut e = Ext::zero_of(ctx);
        e.c[0] = x.clone();
        e
    }

    /// Reduces a base-coefficient polynomial modulo the modulus; this is the
    /// quotient map `F[z] -> F[z]/(m)`.
    pub fn from_poly(ctx: &Arc<ExtCtx<F>>, p: &Poly<F>) -> Self {
        let r = p.rem(&ctx.modulus);
        let mut c = vec![ctx.base_sample().zero(); ctx.degree];
        for (i, x) in r.coeffs().iter().enumerate() {
            c[i] = x.clone();
        }
        Ext {
            ctx: Arc::clone(ctx),
            c,
        }
    }

    /// Representative polynomial of degree below the modulus degree.
    pub fn to_poly(&self) -> Poly<F> {
        Poly::from_coeffs(self.ctx.base_sample(), self.c.clone())
    }

    /// Shared field description.
    pub fn ctx(&self) -> &Arc<ExtCtx<F>> {
        &self.ctx
    }

    /// Coefficients over the base field (little-endian in the generator).
    pub fn coords(&self) -> &[F] {
        &self.c
    }

    /// Multiplication matrix trace of this element over the base field.
    ///
    /// `mul_by_self` on the basis `1, z, ..., z^{d-1}`; the trace of that
    /// matrix is the relative field trace down to `F`.
    pub fn trace_to_base(&self) -> F {
        let d = self.ctx.degree;
        let mut acc = self.ctx.base_sample().zero();
        let mut basis_img = self.clone();
        for j in 0..d {
            // basis_img = self * z^j; its j-th coordinate is the (j,j) entry.
            acc = acc.add(&basis_img.c[j]);
            if j + 1 < d {
                basis_img = basis_img.mul_by_generator();
            }
        }
        acc
    }

    fn mul_by_generator(&self) -> Self {
        let d = self.ctx.degree;
        let sample = self.ctx.base_sample();
        let mut c = vec![sample.zero(); d];
        let top = self.c[d - 1].clone();
        for i in (1..d).rev() {
            c[i] = self.c[i - 1].clone();
        }
        if !top.is_zero() {
            // z^d = -(m - z^d), subtract top * (low part of m).
            for i in 0..d {
                c[i] = c[i].sub(&top.mul(&self.ctx.modulus.coeff(i)));
            }
        }
        Ext {
            ctx: Arc::clone(&self.ctx),
            c,
        }
    }
}

impl<F: Field> Field for Ext<F> {
    fn characteristic(&self) -> u64 {
        self.ctx.base_sample().characteristic()
    }

    fn degree_over_prime(&self) -> u32 {
        self.ctx.base_sample().degree_over_prime() * self.ctx.degree as u32
    }

    fn order(&self) -> u64 {
        self.ctx.order
    }

    fn zero(&self) -> Self {
        Ext::zero_of(&self.ctx)
    }

    fn one(&self) -> Self {
        Ext::embed(&self.ctx, &self.ctx.base_sample().one())
    }

    fn is_zero(&self) -> bool {
        self.c.iter().all(|x| x.is_zero())
    }

    fn add(&self, other: &Self) -> Self {
        let c = self
            .c
            .iter()
            .zip(&other.c)
            .map(|(a, b)| a.add(b))
            .collect();
        Ext {
            ctx: Arc::clone(&self.ctx),
            c,
        }
    }

    fn sub(&self, other: &Self) -> Self {
        let c = self
            .c
            .iter()
            .zip(&other.c)
            .map(|(a, b)| a.sub(b))
            .collect();
        Ext {
            ctx: Arc::clone(&self.ctx),
            c,
        }
    }

    fn mul(&self, other: &Self) -> Self {
        let prod = self.to_poly().mul(&other.to_poly());
        Ext::from_poly(&self.ctx, &prod)
    }

    fn neg(&self) -> Self {
        Ext {
            ctx: Arc::clone(&self.ctx),
            c: self.c.iter().map(|x| x.neg()).collect(),
        }
    }

    fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let (g, s, _) = self.to_poly().xgcd(self.ctx.modulus());
        debug_assert!(g.is_one(), "modulus is irreducible, gcd must be 1");
        Some(Ext::from_poly(&self.ctx, &s))
    }

    fn from_int(&self, n: i64) -> Self {
        Ext::embed(&self.ctx, &self.ctx.base_sample().from_int(n))
    }

    fn index(&self) -> u64 {
        let b = self.ctx.base_sample().order();
        let mut idx = 0u64;
        for x in self.c.iter().rev() {
            idx = idx * b + x.index();
        }
        idx
    }

    fn from_index(&self, mut idx: u64) -> Self {
        let b = self.ctx.base_sample().order();
        let mut c = Vec::with_capacity(self.ctx.degree);
        for _ in 0..self.ctx.degree {
            c.push(self.ctx.base_sample().from_index(idx % b));
            idx /= b;
        }
        Ext {
            ctx: Arc::clone(&self.ctx),
            c,
        }
    }
}
