//! The one-variable and binary-cubic representations.
//!
//! Degree 2 is the multiplicative group acting on a single coordinate by
//! `g . v = g^2 v` with character `chi(g) = g`. Degree 3 is `GL_2` acting on
//! binary cubic forms `a x^3 + b x^2 y + c x y^2 + d y^3` by
//! `g . f = det(g)^{-1} f((x, y) g)`, rows times matrix, with character
//! `chi(g) = det(g)`. In both cases the discriminant transforms by
//! `disc(g . v) = chi(g)^2 disc(v)`.

use super::ring::Ring;
use crate::{Error, Result};

/// A 2 x 2 matrix over a ring, row major.
#[derive(Clone, Debug, PartialEq)]
pub struct Mat2<R: Ring> {
    pub e: [[R; 2]; 2],
}

impl<R: Ring> Mat2<R> {
    pub fn new(e: [[R; 2]; 2]) -> Self {
        Mat2 { e }
    }

    /// Identity matrix in the ring of `sample`.
    pub fn identity(sample: &R) -> Self {
        let o = sample.one();
        let z = sample.zero();
        Mat2::new([[o.clone(), z.clone()], [z, o]])
    }

    pub fn from_ints(sample: &R, e: [[i64; 2]; 2]) -> Self {
        Mat2::new([
            [sample.from_int(e[0][0]), sample.from_int(e[0][1])],
            [sample.from_int(e[1][0]), sample.from_int(e[1][1])],
        ])
    }

    pub fn det(&self) -> R {
        let e = &self.e;
        e[0][0].mul(&e[1][1]).sub(&e[0][1].mul(&e[1][0]))
    }

    /// Matrix product `self * other`.
    pub fn mul(&self, other: &Self) -> Self {
        let a = &self.e;
        let b = &other.e;
        let mut out = Mat2::identity(&a[0][0]);
        for i in 0..2 {
            for j in 0..2 {
                out.e[i][j] = a[i][0].mul(&b[0][j]).add(&a[i][1].mul(&b[1][j]));
            }
        }
        out
    }

    /// Scales every entry.
    pub fn scale(&self, k: &R) -> Self {
        let mut out = self.clone();
        for row in out.e.iter_mut() {
            for v in row.iter_mut() {
                *v = v.mul(k);
            }
        }
        out
    }
}

/// The degree-2 vector: a single ring element.
#[derive(Clone, Debug, PartialEq)]
pub struct FormV2<R: Ring> {
    pub v: R,
}

impl<R: Ring> FormV2<R> {
    pub fn new(v: R) -> Self {
        FormV2 { v }
    }

    /// `g . v = g^2 v`; `g` must be a unit.
    pub fn act(&self, g: &R) -> Result<Self> {
        if g.inv().is_none() {
            return Err(Error::SingularGroupElement);
        }
        Ok(FormV2::new(g.mul(g).mul(&self.v)))
    }

    /// The discriminant is the coordinate itself.
    pub fn disc(&self) -> R {
        self.v.clone()
    }
}

/// Character of the degree-2 group: the element itself.
pub fn chi_v2<R: Ring>(g: &R) -> R {
    g.clone()
}

/// A binary cubic form `a x^3 + b x^2 y + c x y^2 + d y^3`.
#[derive(Clone, Debug, PartialEq)]
pub struct FormV3<R: Ring> {
    pub a: R,
    pub b: R,
    pub c: R,
    pub d: R,
}

impl<R: Ring> FormV3<R> {
    pub fn new(a: R, b: R, c: R, d: R) -> Self {
        FormV3 { a, b, c, d }
    }

    pub fn from_ints(sample: &R, c: [i64; 4]) -> Self {
        FormV3::new(
            sample.from_int(c[0]),
            sample.from_int(c[1]),
            sample.from_int(c[2]),
            sample.from_int(c[3]),
        )
    }

    pub fn coeffs(&self) -> [&R; 4] {
        [&self.a, &self.b, &self.c, &self.d]
    }

    /// Coefficient array in the order `a, b, c, d`.
    pub fn to_vec(&self) -> Vec<R> {
        vec![
            self.a.clone(),
            self.b.clone(),
            self.c.clone(),
            self.d.clone(),
        ]
    }

    /// Value `f(x, y)`.
    pub fn eval(&self, x: &R, y: &R) -> R {
        let x2 = x.mul(x);
        let y2 = y.mul(y);
        let mut acc = self.a.mul(&x2).mul(x);
        acc = acc.add(&self.b.mul(&x2).mul(y));
        acc = acc.add(&self.c.mul(x).mul(&y2));
        acc.add(&self.d.mul(y).mul(&y2))
    }

    /// `g . f = det(g)^{-1} f((x, y) g)` with `(x, y) g` the row-vector
    /// substitution `(g11 x + g21 y, g12 x + g22 y)`.
    pub fn act(&self, g: &Mat2<R>) -> Result<Self> {
        let det_inv = g.det().inv().ok_or(Error::SingularGroupElement)?;
        let sub = substitute_binary(
            &[
                self.a.clone(),
                self.b.clone(),
                self.c.clone(),
                self.d.clone(),
            ],
            &g.e[0][0],
            &g.e[1][0],
            &g.e[0][1],
            &g.e[1][1],
        );
        Ok(FormV3::new(
            sub[0].mul(&det_inv),
            sub[1].mul(&det_inv),
            sub[2].mul(&det_inv),
            sub[3].mul(&det_inv),
        ))
    }

    /// Discriminant `b^2 c^2 - 4 a c^3 - 4 b^3 d - 27 a^2 d^2 + 18 a b c d`.
    pub fn disc(&self) -> R {
        let (a, b, c, d) = (&self.a, &self.b, &self.c, &self.d);
        let b2c2 = b.mul(b).mul(c).mul(c);
        let ac3 = a.mul(c).mul(c).mul(c);
        let b3d = b.mul(b).mul(b).mul(d);
        let a2d2 = a.mul(a).mul(d).mul(d);
        let abcd = a.mul(b).mul(c).mul(d);
        b2c2.sub(&ac3.mul(&ac3.from_int(4)))
            .sub(&b3d.mul(&b3d.from_int(4)))
            .sub(&a2d2.mul(&a2d2.from_int(27)))
            .add(&abcd.mul(&abcd.from_int(18)))
    }

    /// Gradient of the discriminant, in coefficient order `a, b, c, d`.
    pub fn disc_gradient(&self) -> [R; 4] {
        let (a, b, c, d) = (&self.a, &self.b, &self.c, &self.d);
        let k = |n: i64| a.from_int(n);
        // d/da = -4c^3 - 54ad^2 + 18bcd
        let da = k(-4)
            .mul(&c.mul(c).mul(c))
            .add(&k(-54).mul(&a.mul(d).mul(d)))
            .add(&k(18).mul(&b.mul(c).mul(d)));
        // d/db = 2bc^2 - 12b^2d + 18acd
        let db = k(2)
            .mul(&b.mul(c).mul(c))
            .add(&k(-12).mul(&b.mul(b).mul(d)))
            .add(&k(18).mul(&a.mul(c).mul(d)));
        // d/dc = 2b^2c - 12ac^2 + 18abd
        let dc = k(2)
            .mul(&b.mul(b).mul(c))
            .add(&k(-12).mul(&a.mul(c).mul(c)))
            .add(&k(18).mul(&a.mul(b).mul(d)));
        // d/dd = -4b^3 - 54a^2d + 18abc
        let dd = k(-4)
            .mul(&b.mul(b).mul(b))
            .add(&k(-54).mul(&a.mul(a).mul(d)))
            .add(&k(18).mul(&a.mul(b).mul(c)));
        [da, db, dc, dd]
    }

    /// Scales every coefficient.
    pub fn scale(&self, k: &R) -> Self {
        FormV3::new(
            self.a.mul(k),
            self.b.mul(k),
            self.c.mul(k),
            self.d.mul(k),
        )
    }
}

/// Character of the degree-3 group: the determinant.
pub fn chi_v3<R: Ring>(g: &Mat2<R>) -> R {
    g.det()
}

/// Coefficients of `f(px + ry, qx + sy)` for a binary form `f` given by
/// `coeffs[i]` on `x^{n-i} y^i`.
pub fn substitute_binary<R: Ring>(coeffs: &[R], p: &R, r: &R, q: &R, s: &R) -> Vec<R> {
    let n = coeffs.len() - 1;
    let zero = p.zero();
    let mut out = vec![zero.clone(); n + 1];
    // Powers of the two substituted linear forms, as coefficient vectors.
    let first = linear_powers(p, r, n);
    let second = linear_powers(q, s, n);
    for (i, c) in coeffs.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let prod = convolve(&first[n - i], &second[i], &zero);
        for (k, term) in prod.iter().enumerate() {
            out[k] = out[k].add(&c.mul(term));
        }
    }
    out
}

/// Coefficient vectors of `(px + qy)^k` for `k = 0..=n`.
fn linear_powers<R: Ring>(p: &R, q: &R, n: usize) -> Vec<Vec<R>> {
    let mut out = vec![vec![p.one()]];
    let lin = vec![p.clone(), q.clone()];
    for k in 1..=n {
        out.push(convolve(&out[k - 1], &lin, &p.zero()));
    }
    out
}

fn convolve<R: Ring>(u: &[R], v: &[R], zero: &R) -> Vec<R> {
    let mut out = vec![zero.clone(); u.len() + v.len() - 1];
    for (i, a) in u.iter().enumerate() {
        for (j, b) in v.iter().enumerate() {
            out[i + j] = out[i + j].add(&a.mul(b));
        }
    }
    out
}
