//! Dense univariate polynomials over a finite field.
//!
//! Coefficients are stored little-endian (index = exponent) with no trailing
//! zeros; the zero polynomial has an empty coefficient vector. Every
//! polynomial carries a sample field element so the zero polynomial still
//! knows its coefficient field.

use super::field::Field;
use super::fq::FqElem;

/// Dense polynomial over the field of `sample`.
#[derive(Clone)]
pub struct Poly<F: Field> {
    sample: F,
    c: Vec<F>,
}

/// Polynomial over the run-time field `F_q`; the `t` of `F_q[t]`.
pub type PolyFq = Poly<FqElem>;

impl<F: Field> PartialEq for Poly<F> {
    fn eq(&self, other: &Self) -> bool {
        self.c == other.c
    }
}

impl<F: Field> Eq for Poly<F> {}

impl<F: Field> Poly<F> {
    /// Zero polynomial over the field of `sample`.
    pub fn zero(sample: &F) -> Self {
        Poly {
            sample: sample.zero(),
            c: Vec::new(),
        }
    }

    /// Constant polynomial.
    pub fn constant(value: &F) -> Self {
        let mut p = Poly::zero(value);
        if !value.is_zero() {
            p.c.push(value.clone());
        }
        p
    }

    /// The monomial `c t^k`.
    pub fn monomial(coeff: &F, k: usize) -> Self {
        let mut c = vec![coeff.zero(); k + 1];
        c[k] = coeff.clone();
        let mut p = Poly {
            sample: coeff.zero(),
            c,
        };
        p.normalize();
        p
    }

    /// Polynomial from little-endian coefficients (trailing zeros allowed).
    pub fn from_coeffs(sample: &F, coeffs: Vec<F>) -> Self {
        let mut p = Poly {
            sample: sample.zero(),
            c: coeffs,
        };
        p.normalize();
        p
    }

    /// The variable `t` itself.
    pub fn var(sample: &F) -> Self {
        Poly::monomial(&sample.one(), 1)
    }

    fn normalize(&mut self) {
        while self.c.last().is_some_and(|x| x.is_zero()) {
            self.c.pop();
        }
    }

    /// Sample element of the coefficient field.
    pub fn sample(&self) -> &F {
        &self.sample
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.c.len() == 1 && self.c[0].is_one()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.c.len().checked_sub(1)
    }

    /// Degree with the zero polynomial counting as smaller than all others.
    pub fn degree_or_neg(&self) -> i64 {
        self.c.len() as i64 - 1
    }

    /// Coefficient of `t^k` (zero beyond the degree).
    pub fn coeff(&self, k: usize) -> F {
        self.c.get(k).cloned().unwrap_or_else(|| self.sample.zero())
    }

    /// Little-endian coefficient slice (no trailing zeros).
    pub fn coeffs(&self) -> &[F] {
        &self.c
    }

    /// Leading coefficient; `None` for zero.
    pub fn leading(&self) -> Option<&F> {
        self.c.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(|x| x.is_one())
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.c.len().max(other.c.len());
        let mut c = Vec::with_capacity(n);
        for i in 0..n {
            c.push(self.coeff(i).add(&other.coeff(i)));
        }
        Poly::from_coeffs(&self.sample, c)
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.c.len().max(other.c.len());
        let mut c = Vec::with_capacity(n);
        for i in 0..n {
            c.push(self.coeff(i).sub(&other.coeff(i)));
        }
        Poly::from_coeffs(&self.sample, c)
    }

    pub fn neg(&self) -> Self {
        Poly {
            sample: self.sample.clone(),
            c: self.c.iter().map(|x| x.neg()).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Poly::zero(&self.sample);
        }
        let mut c = vec![self.sample.zero(); self.c.len() + other.c.len() - 1];
        for (i, a) in self.c.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.c.iter().enumerate() {
                c[i + j] = c[i + j].add(&a.mul(b));
            }
        }
        Poly::from_coeffs(&self.sample, c)
    }

    pub fn scale(&self, k: &F) -> Self {
        Poly::from_coeffs(&self.sample, self.c.iter().map(|x| x.mul(k)).collect())
    }

    /// Multiplication by `t^k`.
    pub fn shift_up(&self, k: usize) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut c = vec![self.sample.zero(); k];
        c.extend(self.c.iter().cloned());
        Poly {
            sample: self.sample.clone(),
            c,
        }
    }

    /// Euclidean division; panics when dividing by zero.
    pub fn divmod(&self, d: &Self) -> (Self, Self) {
        assert!(!d.is_zero(), "polynomial division by zero");
        let dd = d.degree().unwrap();
        let lead_inv = d.leading().unwrap().inv().expect("leading coeff invertible");
        let mut rem = self.c.clone();
        if rem.len() <= dd {
            return (Poly::zero(&self.sample), self.clone());
        }
        let mut quo = vec![self.sample.zero(); rem.len() - dd];
        while rem.len() > dd {
            let k = rem.len() - 1 - dd;
            let q = rem.last().unwrap().mul(&lead_inv);
            if !q.is_zero() {
                for i in 0..=dd {
                    rem[k + i] = rem[k + i].sub(&q.mul(&d.c[i]));
                }
                quo[k] = q;
            }
            debug_assert!(rem.last().unwrap().is_zero());
            rem.pop();
        }
        (
            Poly::from_coeffs(&self.sample, quo),
            Poly::from_coeffs(&self.sample, rem),
        )
    }

    pub fn rem(&self, d: &Self) -> Self {
        self.divmod(d).1
    }

    /// Exact division; panics when the remainder is nonzero.
    pub fn div_exact(&self, d: &Self) -> Self {
        let (q, r) = self.divmod(d);
        assert!(r.is_zero(), "polynomial division was not exact");
        q
    }

    /// Monic greatest common divisor (zero if both inputs are zero).
    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Extended gcd: returns `(g, s, v)` with `g` monic and
    /// `s*self + v*other = g`.
    pub fn xgcd(&self, other: &Self) -> (Self, Self, Self) {
        let one = Poly::constant(&self.sample.one());
        let zero = Poly::zero(&self.sample);
        let (mut r0, mut r1) = (self.clone(), other.clone());
        let (mut s0, mut s1) = (one.clone(), zero.clone());
        let (mut t0, mut t1) = (zero, one);
        while !r1.is_zero() {
            let (q, r) = r0.divmod(&r1);
            let s = s0.sub(&q.mul(&s1));
            let t = t0.sub(&q.mul(&t1));
            r0 = r1;
            r1 = r;
            s0 = s1;
            s1 = s;
            t0 = t1;
            t1 = t;
        }
        if let Some(lead) = r0.leading() {
            let li = lead.inv().unwrap();
            return (r0.scale(&li), s0.scale(&li), t0.scale(&li));
        }
        (r0, s0, t0)
    }

    /// Scales to leading coefficient one (zero stays zero).
    pub fn monic(&self) -> Self {
        match self.leading() {
            None => self.clone(),
            Some(l) => self.scale(&l.inv().expect("leading coeff invertible")),
        }
    }

    pub fn derivative(&self) -> Self {
        if self.c.len() <= 1 {
            return Poly::zero(&self.sample);
        }
        let c = self.c[1..]
            .iter()
            .enumerate()
            .map(|(i, x)| x.mul(&self.sample.from_int((i + 1) as i64)))
            .collect();
        Poly::from_coeffs(&self.sample, c)
    }

    pub fn eval(&self, x: &F) -> F {
        let mut acc = self.sample.zero();
        for c in self.c.iter().rev() {
            acc = acc.mul(x).add(c);
        }
        acc
    }

    /// Composition `self(g)`.
    pub fn compose(&self, g: &Self) -> Self {
        let mut acc = Poly::zero(&self.sample);
        for c in self.c.iter().rev() {
            acc = acc.mul(g).add(&Poly::constant(c));
        }
        acc
    }

    /// `self^e mod m` by binary exponentiation.
    pub fn pow_mod(&self, mut e: u128, m: &Self) -> Self {
        let mut base = self.rem(m);
        let mut acc = Poly::constant(&self.sample.one()).rem(m);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base).rem(m);
            }
            base = base.mul(&base).rem(m);
            e >>= 1;
        }
        acc
    }

    /// Plain power (small exponents).
    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Poly::constant(&self.sample.one());
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Canonical position of this polynomial among those of its degree:
    /// mixed-radix number with the constant coefficient least significant.
    /// Total order key: `(degree+1, index)`.
    pub fn index_key(&self) -> (usize, u128) {
        let q = self.sample.order() as u128;
        let mut idx: u128 = 0;
        for x in self.c.iter().rev() {
            idx = idx * q + x.index() as u128;
        }
        (self.c.len(), idx)
    }

    /// Deterministic total order: by degree, then mixed-radix coefficient
    /// index (constant coefficient least significant).
    pub fn cmp_key(&self, other: &Self) -> std::cmp::Ordering {
        self.index_key().cmp(&other.index_key())
    }

    /// Enumerates all monic polynomials of exact degree `d` (index order).
    pub fn monics_of_degree(sample: &F, d: usize) -> Vec<Self> {
        let q = sample.order();
        let total = (q as u128).pow(d as u32);
        assert!(total <= 1 << 40, "enumeration too large");
        let mut out = Vec::with_capacity(total as usize);
        for mut idx in 0..total {
            let mut c = Vec::with_capacity(d + 1);
            for _ in 0..d {
                c.push(sample.from_index((idx % q as u128) as u64));
                idx /= q as u128;
            }
            c.push(sample.one());
            out.push(Poly::from_coeffs(sample, c));
        }
        out
    }

    /// Writes the polynomial using `var` as the variable name, in the text
    /// grammar accepted by the parser (descending powers, `*` for products,
    /// `^` for powers). Extension-field coefficients that are not monomials
    /// in the generator are parenthesized.
    pub fn display_with(&self, var: &str, coeff_str: impl Fn(&F) -> String) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut parts: Vec<String> = Vec::new();
        for (k, x) in self.c.iter().enumerate().rev() {
            if x.is_zero() {
                continue;
            }
            let cs = coeff_str(x);
            let needs_parens = cs.contains('+') || cs.contains('-');
            let cs_wrapped = if needs_parens { format!("({cs})") } else { cs };
            let term = match k {
                0 => cs_wrapped,
                _ => {
                    let v = if k == 1 {
                        var.to_string()
                    } else {
                        format!("{var}^{k}")
                    };
                    if x.is_one() {
                        v
                    } else {
                        format!("{cs_wrapped}*{v}")
                    }
                }
            };
            parts.push(term);
        }
        parts.join("+")
    }
}

impl<F: Field> std::fmt::Debug for Poly<F> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "poly{:?}", self.c)
    }
}

impl std::fmt::Display for Poly<FqElem> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.display_with("t", |x| x.to_string()))
    }
}
