//! The degree-4 representation: pairs of ternary quadratic forms.
//!
//! A vector is a pair `(A, B)` of quadratic forms in three variables. The
//! stored coefficients are the integer-form ones: `Q = sum a_ii x_i^2 +
//! sum_{i<j} a_ij x_i x_j`, so the symmetric Gram matrix would carry halves
//! off the diagonal and is never materialized. The group `GL_2 x GL_3`
//! (modulo the kernel `(u^2 I_2, u^{-1} I_3)`) acts by `g3` on each form as a
//! quadric and by `g2` mixing the pair; the character is
//! `chi(g2, g3) = det(g2)^3 det(g3)^4`.
//!
//! The discriminant is the binary-cubic discriminant of the resolvent
//! `4 det(A x - B y)`, whose coefficients are integer polynomials in the
//! stored entries. They are hard coded below through the cubic polarization
//! of the doubled determinant and validated in tests against a rational
//! determinant expansion with explicit halves.

use super::binary::{FormV3, Mat2};
use super::ring::Ring;
use crate::{Error, Result};

/// A 3 x 3 matrix over a ring, row major.
#[derive(Clone, Debug, PartialEq)]
pub struct Mat3<R: Ring> {
    pub e: [[R; 3]; 3],
}

impl<R: Ring> Mat3<R> {
    pub fn new(e: [[R; 3]; 3]) -> Self {
        Mat3 { e }
    }

    pub fn identity(sample: &R) -> Self {
        let o = sample.one();
        let z = sample.zero();
        Mat3::new([
            [o.clone(), z.clone(), z.clone()],
            [z.clone(), o.clone(), z.clone()],
            [z.clone(), z.clone(), o],
        ])
    }

    pub fn from_ints(sample: &R, e: [[i64; 3]; 3]) -> Self {
        let mut m = Mat3::identity(sample);
        for i in 0..3 {
            for j in 0..3 {
                m.e[i][j] = sample.from_int(e[i][j]);
            }
        }
        m
    }

    pub fn det(&self) -> R {
        let e = &self.e;
        let m = |i: usize, j: usize| &e[i][j];
        let t1 = m(0, 0).mul(&m(1, 1).mul(m(2, 2)).sub(&m(1, 2).mul(m(2, 1))));
        let t2 = m(0, 1).mul(&m(1, 0).mul(m(2, 2)).sub(&m(1, 2).mul(m(2, 0))));
        let t3 = m(0, 2).mul(&m(1, 0).mul(m(2, 1)).sub(&m(1, 1).mul(m(2, 0))));
        t1.sub(&t2).add(&t3)
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Mat3::identity(&self.e[0][0]);
        for i in 0..3 {
            for j in 0..3 {
                let mut acc = self.e[i][0].mul(&other.e[0][j]);
                for k in 1..3 {
                    acc = acc.add(&self.e[i][k].mul(&other.e[k][j]));
                }
                out.e[i][j] = acc;
            }
        }
        out
    }

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

/// Quadratic-form coefficients in the order
/// `(q11, q12, q13, q22, q23, q33)`, cross terms unhalved.
pub type QuadCoeffs<R> = [R; 6];

/// A pair of ternary quadratic forms.
#[derive(Clone, Debug, PartialEq)]
pub struct FormV4<R: Ring> {
    pub a: QuadCoeffs<R>,
    pub b: QuadCoeffs<R>,
}

/// An element of the degree-4 group.
#[derive(Clone, Debug, PartialEq)]
pub struct GroupElemV4<R: Ring> {
    pub g2: Mat2<R>,
    pub g3: Mat3<R>,
}

impl<R: Ring> GroupElemV4<R> {
    pub fn new(g2: Mat2<R>, g3: Mat3<R>) -> Self {
        GroupElemV4 { g2, g3 }
    }

    pub fn identity(sample: &R) -> Self {
        GroupElemV4::new(Mat2::identity(sample), Mat3::identity(sample))
    }

    /// Componentwise product; the group law.
    pub fn mul(&self, other: &Self) -> Self {
        GroupElemV4::new(self.g2.mul(&other.g2), self.g3.mul(&other.g3))
    }
}

/// Character `chi(g2, g3) = det(g2)^3 det(g3)^4`.
pub fn chi_v4<R: Ring>(g: &GroupElemV4<R>) -> R {
    let d2 = g.g2.det();
    let d3 = g.g3.det();
    d2.pow_u(3).mul(&d3.pow_u(4))
}

impl<R: Ring> FormV4<R> {
    pub fn new(a: QuadCoeffs<R>, b: QuadCoeffs<R>) -> Self {
        FormV4 { a, b }
    }

    pub fn from_ints(sample: &R, a: [i64; 6], b: [i64; 6]) -> Self {
        let f = |v: [i64; 6]| v.map(|n| sample.from_int(n));
        FormV4::new(f(a), f(b))
    }

    /// All twelve coordinates, `a` block then `b` block.
    pub fn to_vec(&self) -> Vec<R> {
        self.a.iter().chain(self.b.iter()).cloned().collect()
    }

    pub fn from_slice(coeffs: &[R]) -> Result<Self> {
        if coeffs.len() != 12 {
            return Err(Error::invalid("a degree-4 form takes 12 coefficients"));
        }
        let grab = |k: usize| -> QuadCoeffs<R> {
            [
                coeffs[k].clone(),
                coeffs[k + 1].clone(),
                coeffs[k + 2].clone(),
                coeffs[k + 3].clone(),
                coeffs[k + 4].clone(),
                coeffs[k + 5].clone(),
            ]
        };
        Ok(FormV4::new(grab(0), grab(6)))
    }

    /// Applies `(g2, g3)`: each quadric transforms by `x -> g3^T x`, then the
    /// pair mixes as the row vector `(A, B) g2^T`. Both steps are polynomial
    /// in the group entries; invertibility is still required for membership.
    pub fn act(&self, g: &GroupElemV4<R>) -> Result<Self> {
        if g.g2.det().inv().is_none() || g.g3.det().inv().is_none() {
            return Err(Error::SingularGroupElement);
        }
        let a1 = transform_quadric(&self.a, &g.g3);
        let b1 = transform_quadric(&self.b, &g.g3);
        let e = &g.g2.e;
        let mix = |u: &R, v: &R| -> QuadCoeffs<R> {
            let mut out = a1.clone();
            for k in 0..6 {
                out[k] = u.mul(&a1[k]).add(&v.mul(&b1[k]));
            }
            out
        };
        Ok(FormV4::new(
            mix(&e[0][0], &e[0][1]),
            mix(&e[1][0], &e[1][1]),
        ))
    }

    /// The binary cubic `4 det(A x - B y)` in integer-form coefficients.
    ///
    /// Writing `D(M)` for the doubled-determinant cubic form of a single
    /// quadric and `P(M, N)` for its polarization `<grad D(M), N>`, the
    /// expansion of `D(Ax - By)` in `(x, y)` is
    /// `D(A) x^3 - P(A,B) x^2 y + P(B,A) x y^2 - D(B) y^3`.
    pub fn resolvent_cubic(&self) -> FormV3<R> {
        FormV3::new(
            four_det(&self.a),
            four_det_polar(&self.a, &self.b).neg(),
            four_det_polar(&self.b, &self.a),
            four_det(&self.b).neg(),
        )
    }

    /// Discriminant: the binary-cubic discriminant of the resolvent.
    pub fn disc(&self) -> R {
        self.resolvent_cubic().disc()
    }

    /// Scales every coordinate of both forms.
    pub fn scale(&self, k: &R) -> Self {
        FormV4::new(
            self.a.clone().map(|v| v.mul(k)),
            self.b.clone().map(|v| v.mul(k)),
        )
    }
}

/// `4 det` of the half-integral Gram matrix of `(q11, q12, q13, q22, q23, q33)`:
/// `4 q11 q22 q33 + q12 q13 q23 - q11 q23^2 - q22 q13^2 - q33 q12^2`.
pub fn four_det<R: Ring>(m: &QuadCoeffs<R>) -> R {
    let [m11, m12, m13, m22, m23, m33] = m;
    let four = m11.from_int(4);
    four.mul(&m11.mul(m22).mul(m33))
        .add(&m12.mul(m13).mul(m23))
        .sub(&m11.mul(&m23.mul(m23)))
        .sub(&m22.mul(&m13.mul(m13)))
        .sub(&m33.mul(&m12.mul(m12)))
}

/// Polarization `<grad four_det(m), n>`, linear in `n` and quadratic in `m`.
pub fn four_det_polar<R: Ring>(m: &QuadCoeffs<R>, n: &QuadCoeffs<R>) -> R {
    let [m11, m12, m13, m22, m23, m33] = m;
    let [n11, n12, n13, n22, n23, n33] = n;
    let four = m11.from_int(4);
    let two = m11.from_int(2);
    let d11 = four.mul(&m22.mul(m33)).sub(&m23.mul(m23));
    let d22 = four.mul(&m11.mul(m33)).sub(&m13.mul(m13));
    let d33 = four.mul(&m11.mul(m22)).sub(&m12.mul(m12));
    let d12 = m13.mul(m23).sub(&two.mul(&m33.mul(m12)));
    let d13 = m12.mul(m23).sub(&two.mul(&m22.mul(m13)));
    let d23 = m12.mul(m13).sub(&two.mul(&m11.mul(m23)));
    d11.mul(n11)
        .add(&d22.mul(n22))
        .add(&d33.mul(n33))
        .add(&d12.mul(n12))
        .add(&d13.mul(n13))
        .add(&d23.mul(n23))
}

/// Coefficients of `Q(g^T x)` for a quadric `Q` with unhalved cross terms.
///
/// With `y_k = sum_i g_ik x_i` the new coefficients are
/// `q'_ii = sum_k g_ik^2 q_kk + sum_{k<l} g_ik g_il q_kl` and
/// `q'_ij = 2 sum_k g_ik g_jk q_kk + sum_{k<l} (g_ik g_jl + g_il g_jk) q_kl`,
/// all divisions by 2 cancelling.
pub fn transform_quadric<R: Ring>(q: &QuadCoeffs<R>, g: &Mat3<R>) -> QuadCoeffs<R> {
    // Index of the cross coefficient q_kl (k < l) in the storage order.
    const CROSS: [(usize, usize, usize); 3] = [(0, 1, 1), (0, 2, 2), (1, 2, 4)];
    const DIAG: [(usize, usize); 3] = [(0, 0), (1, 3), (2, 5)];
    let e = &g.e;
    let two = q[0].from_int(2);
    let mut out = q.clone();
    for (i, slot) in DIAG {
        let mut acc = q[0].zero();
        for (k, qk) in DIAG {
            acc = acc.add(&e[i][k].mul(&e[i][k]).mul(&q[qk]));
        }
        for (k, l, qkl) in CROSS {
            acc = acc.add(&e[i][k].mul(&e[i][l]).mul(&q[qkl]));
        }
        out[slot] = acc;
    }
    for (i, j, slot) in CROSS {
        let mut acc = q[0].zero();
        for (k, qk) in DIAG {
            acc = acc.add(&two.mul(&e[i][k]).mul(&e[j][k]).mul(&q[qk]));
        }
        for (k, l, qkl) in CROSS {
            let sym = e[i][k].mul(&e[j][l]).add(&e[i][l].mul(&e[j][k]));
            acc = acc.add(&sym.mul(&q[qkl]));
        }
        out[slot] = acc;
    }
    out
}
