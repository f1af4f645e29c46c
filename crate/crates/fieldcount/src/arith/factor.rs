//! Polynomial factorization over a finite field of odd order.
//!
//! Pipeline: squarefree decomposition (with p-th-root descent in
//! characteristic p), distinct-degree splitting by Frobenius powers, then
//! Cantor-Zassenhaus equal-degree splitting. Equal-degree splitting draws
//! its random elements from a fixed-seed ChaCha stream, so factorizations
//! are deterministic run to run.
//!
//! Factors are returned monic, sorted by (degree, coefficient index), with
//! the unit leading coefficient reported separately.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::field::Field;
use super::poly::Poly;
use crate::{Error, Result};

/// Monic irreducible factors with multiplicities, plus the leading unit:
/// `input = unit * prod f_i^{e_i}`.
#[derive(Debug, Clone, PartialEq)]
pub struct Factorization<F: Field> {
    pub unit: F,
    pub factors: Vec<(Poly<F>, u32)>,
}

impl<F: Field> Factorization<F> {
    /// Multiplies the factorization back together.
    pub fn expand(&self) -> Poly<F> {
        let mut acc = Poly::constant(&self.unit);
        for (f, e) in &self.factors {
            for _ in 0..*e {
                acc = acc.mul(f);
            }
        }
        acc
    }
}

/// Factors a nonzero polynomial into monic irreducibles.
///
/// Errors with "zero input" on the zero polynomial. Constants factor as a
/// unit with an empty factor list.
pub fn factor<F: Field>(input: &Poly<F>) -> Result<Factorization<F>> {
    if input.is_zero() {
        return Err(Error::ZeroInput);
    }
    assert!(
        input.sample().characteristic() % 2 == 1,
        "factorization requires odd characteristic"
    );
    let unit = input.leading().unwrap().clone();
    let monic = input.monic();
    let mut factors: Vec<(Poly<F>, u32)> = Vec::new();
    for (g, mult) in squarefree_parts(&monic) {
        for h in split_distinct_degrees(&g) {
            factors.push((h, mult));
        }
    }
    factors.sort_by(|a, b| a.0.cmp_key(&b.0));
    Ok(Factorization { unit, factors })
}

/// Squarefree decomposition: returns pairwise-coprime squarefree monic
/// polynomials `g` with multiplicities `m` so the input is `prod g^m`.
fn squarefree_parts<F: Field>(f: &Poly<F>) -> Vec<(Poly<F>, u32)> {
    let mut out = Vec::new();
    if f.degree() == Some(0) || f.is_zero() {
        return out;
    }
    let d = f.derivative();
    if d.is_zero() {
        // f = g(t^p); extract the p-th root coefficientwise and recurse.
        let root = pth_root(f);
        let p = f.sample().characteristic() as u32;
        for (g, m) in squarefree_parts(&root) {
            out.push((g, m * p));
        }
        return out;
    }
    let mut c = f.gcd(&d);
    let mut w = f.div_exact(&c);
    let mut i = 1u32;
    while w.degree() != Some(0) {
        let y = w.gcd(&c);
        let z = w.div_exact(&y);
        if z.degree() != Some(0) {
            out.push((z, i));
        }
        i += 1;
        w = y;
        c = c.div_exact(&w);
    }
    if c.degree() != Some(0) {
        let p = f.sample().characteristic() as u32;
        let root = pth_root(&c);
        for (g, m) in squarefree_parts(&root) {
            out.push((g, m * p));
        }
    }
    out
}

/// For `f = g(t^p)` with zero derivative, returns the monic `h` with
/// `h^p = f`. In `F_q` the coefficient p-th root is `c^(q/p)`.
fn pth_root<F: Field>(f: &Poly<F>) -> Poly<F> {
    let p = f.sample().characteristic() as usize;
    let q = f.sample().order();
    let root_exp = (q / p as u64) as u128;
    let deg = f.degree().unwrap();
    debug_assert_eq!(deg % p, 0);
    let mut c = Vec::with_capacity(deg / p + 1);
    for k in 0..=deg / p {
        c.push(f.coeff(k * p).pow(root_exp));
    }
    Poly::from_coeffs(f.sample(), c)
}

/// Splits a squarefree monic polynomial into its irreducible factors.
fn split_distinct_degrees<F: Field>(f: &Poly<F>) -> Vec<Poly<F>> {
    let mut out = Vec::new();
    let mut rest = f.clone();
    let q = f.sample().order() as u128;
    let x = Poly::var(f.sample());
    let mut h = x.clone();
    let mut d = 0usize;
    while rest.degree().map_or(false, |deg| deg > 0) {
        d += 1;
        if 2 * d > rest.degree().unwrap() {
            // What remains is a single irreducible factor.
            out.push(rest.clone());
            break;
        }
        h = h.pow_mod(q, &rest);
        let g = h.sub(&x).gcd(&rest);
        if g.degree().map_or(false, |deg| deg > 0) {
            out.extend(split_equal_degree(&g, d));
            rest = rest.div_exact(&g);
            h = h.rem(&rest);
        }
    }
    out
}

/// Cantor-Zassenhaus: splits a product of distinct irreducibles all of
/// degree `d` into the individual factors. Odd field order only.
fn split_equal_degree<F: Field>(f: &Poly<F>, d: usize) -> Vec<Poly<F>> {
    let deg = f.degree().unwrap();
    if deg == d {
        return vec![f.clone()];
    }
    let q = f.sample().order() as u128;
    let split_exp = (q.pow(d as u32) - 1) / 2;
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_cafe);
    loop {
        let a = random_poly_below(f.sample(), deg, &mut rng);
        if a.degree().is_none() {
            continue;
        }
        let b = a.pow_mod(split_exp, f);
        let g = b.sub(&Poly::constant(&f.sample().one())).gcd(f);
        if let Some(gd) = g.degree() {
            if gd > 0 && gd < deg {
                let mut out = split_equal_degree(&g, d);
                out.extend(split_equal_degree(&f.div_exact(&g), d));
                return out;
            }
        }
    }
}

fn random_poly_below<F: Field>(sample: &F, deg: usize, rng: &mut ChaCha8Rng) -> Poly<F> {
    let q = sample.order();
    let c = (0..deg)
        .map(|_| sample.from_index(rng.gen_range(0..q)))
        .collect();
    Poly::from_coeffs(sample, c)
}

/// Whether a polynomial of degree >= 1 is irreducible, by the Frobenius
/// criterion: `t^{q^d} = t (mod f)` and for each prime `r | d` the power
/// `t^{q^{d/r}} - t` is coprime to `f`.
pub fn is_irreducible<F: Field>(f: &Poly<F>) -> bool {
    let d = match f.degree() {
        Some(d) if d >= 1 => d,
        _ => return false,
    };
    if d == 1 {
        return true;
    }
    let q = f.sample().order() as u128;
    let x = Poly::var(f.sample());
    let frob_d = x.pow_mod(q.pow(d as u32), f);
    if frob_d != x.rem(f) {
        return false;
    }
    for r in prime_divisors(d) {
        let h = x.pow_mod(q.pow((d / r) as u32), f).sub(&x);
        if h.gcd(f).degree() != Some(0) {
            return false;
        }
    }
    true
}

fn prime_divisors(mut n: usize) -> Vec<usize> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Roots of a nonzero polynomial in the coefficient field, with
/// multiplicities, found by scanning the field (intended for small fields)
/// and deflating.
pub fn roots_with_multiplicity<F: Field>(f: &Poly<F>) -> Vec<(F, u32)> {
    assert!(!f.is_zero(), "roots of the zero polynomial");
    let mut out = Vec::new();
    let sample = f.sample();
    let mut rest = f.clone();
    for i in 0..sample.order() {
        let r = sample.from_index(i);
        if rest.degree() == Some(0) {
            break;
        }
        let mut mult = 0u32;
        let lin = Poly::from_coeffs(sample, vec![r.neg(), sample.one()]);
        loop {
            let (q, rem) = rest.divmod(&lin);
            if rem.is_zero() {
                mult += 1;
                rest = q;
            } else {
                break;
            }
        }
        if mult > 0 {
            out.push((r, mult));
        }
    }
    out
}
