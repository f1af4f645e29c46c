//! Cubic rings attached to binary cubic forms.
//!
//! A binary cubic form `f = (a, b, c, d)` over a commutative ring determines
//! a commutative rank-3 ring with basis `(1, omega, theta)` and
//! multiplication table
//!
//! ```text
//! omega^2     = -b*omega + a*theta
//! omega*theta = -a*d - c*omega
//! theta^2     = -b*d - d*omega - c*theta
//! ```
//!
//! the normalization with `omega = a*xi` and `theta = a*xi^2 + b*xi` for a
//! root `xi` of `f(x, 1)`. The table is commutative and associative for
//! every `f`, degenerate forms included, and the discriminant of the trace
//! form on this basis equals `disc(f)` on the nose; both facts are pinned by
//! tests rather than assumed.

use crate::forms::{FormV3, Mat3, Ring};

/// Element of a [`CubicRing`], stored as coordinates over `(1, omega, theta)`.
#[derive(Clone, Debug, PartialEq)]
pub struct CubicElem<R: Ring> {
    /// Coordinates `(c[0], c[1], c[2])` of `c[0] + c[1]*omega + c[2]*theta`.
    pub c: [R; 3],
}

/// The rank-3 commutative ring attached to a binary cubic form.
///
/// Degenerate forms are allowed; they give rings with zero divisors or
/// nontrivial nilradical, but every ring operation below stays valid.
#[derive(Clone, Debug, PartialEq)]
pub struct CubicRing<R: Ring> {
    f: FormV3<R>,
}

impl<R: Ring> CubicRing<R> {
    /// Attaches the cubic ring to a form.
    pub fn new(f: FormV3<R>) -> Self {
        CubicRing { f }
    }

    /// The defining form.
    pub fn form(&self) -> &FormV3<R> {
        &self.f
    }

    fn sample(&self) -> &R {
        &self.f.a
    }

    /// Element from explicit coordinates.
    pub fn elem(&self, c0: R, c1: R, c2: R) -> CubicElem<R> {
        CubicElem { c: [c0, c1, c2] }
    }

    /// Element from integer coordinates.
    pub fn elem_from_ints(&self, ints: [i64; 3]) -> CubicElem<R> {
        let s = self.sample();
        self.elem(s.from_int(ints[0]), s.from_int(ints[1]), s.from_int(ints[2]))
    }

    /// The additive identity.
    pub fn zero(&self) -> CubicElem<R> {
        self.elem_from_ints([0, 0, 0])
    }

    /// The multiplicative identity.
    pub fn one(&self) -> CubicElem<R> {
        self.elem_from_ints([1, 0, 0])
    }

    /// The basis element `omega`.
    pub fn omega(&self) -> CubicElem<R> {
        self.elem_from_ints([0, 1, 0])
    }

    /// The basis element `theta`.
    pub fn theta(&self) -> CubicElem<R> {
        self.elem_from_ints([0, 0, 1])
    }

    /// The basis `(1, omega, theta)`.
    pub fn basis(&self) -> [CubicElem<R>; 3] {
        [self.one(), self.omega(), self.theta()]
    }

    /// Coordinatewise sum.
    pub fn add(&self, x: &CubicElem<R>, y: &CubicElem<R>) -> CubicElem<R> {
        self.elem(
            x.c[0].add(&y.c[0]),
            x.c[1].add(&y.c[1]),
            x.c[2].add(&y.c[2]),
        )
    }

    /// Coordinatewise difference.
    pub fn sub(&self, x: &CubicElem<R>, y: &CubicElem<R>) -> CubicElem<R> {
        self.elem(
            x.c[0].sub(&y.c[0]),
            x.c[1].sub(&y.c[1]),
            x.c[2].sub(&y.c[2]),
        )
    }

    /// Coordinatewise negation.
    pub fn neg(&self, x: &CubicElem<R>) -> CubicElem<R> {
        self.elem(x.c[0].neg(), x.c[1].neg(), x.c[2].neg())
    }

    /// Scalar multiple.
    pub fn scale(&self, x: &CubicElem<R>, k: &R) -> CubicElem<R> {
        self.elem(x.c[0].mul(k), x.c[1].mul(k), x.c[2].mul(k))
    }

    /// Product in the ring, expanding through the multiplication table.
    pub fn mul(&self, x: &CubicElem<R>, y: &CubicElem<R>) -> CubicElem<R> {
        let (a, b, c, d) = (&self.f.a, &self.f.b, &self.f.c, &self.f.d);
        // p, r, s collect the omega^2, theta^2 and omega*theta contributions
        let p = x.c[1].mul(&y.c[1]);
        let r = x.c[2].mul(&y.c[2]);
        let s = x.c[1].mul(&y.c[2]).add(&x.c[2].mul(&y.c[1]));
        let ad = a.mul(d);
        let bd = b.mul(d);
        let c0 = x.c[0].mul(&y.c[0]).sub(&ad.mul(&s)).sub(&bd.mul(&r));
        let c1 = x.c[0]
            .mul(&y.c[1])
            .add(&x.c[1].mul(&y.c[0]))
            .sub(&b.mul(&p))
            .sub(&c.mul(&s))
            .sub(&d.mul(&r));
        let c2 = x.c[0]
            .mul(&y.c[2])
            .add(&x.c[2].mul(&y.c[0]))
            .add(&a.mul(&p))
            .sub(&c.mul(&r));
        self.elem(c0, c1, c2)
    }

    /// Matrix of multiplication by `x` on the basis `(1, omega, theta)`;
    /// column `j` holds the coordinates of `x * basis_j`.
    pub fn mult_matrix(&self, x: &CubicElem<R>) -> Mat3<R> {
        let mut m = Mat3::identity(self.sample());
        for (j, e) in self.basis().iter().enumerate() {
            let col = self.mul(x, e);
            for i in 0..3 {
                m.e[i][j] = col.c[i].clone();
            }
        }
        m
    }

    /// Trace of multiplication by `x`.
    pub fn trace(&self, x: &CubicElem<R>) -> R {
        let m = self.mult_matrix(x);
        m.e[0][0].add(&m.e[1][1]).add(&m.e[2][2])
    }

    /// Gram matrix of the trace form, `T[i][j] = trace(basis_i * basis_j)`.
    pub fn trace_matrix(&self) -> Mat3<R> {
        let basis = self.basis();
        let mut m = Mat3::identity(self.sample());
        for i in 0..3 {
            for j in 0..3 {
                m.e[i][j] = self.trace(&self.mul(&basis[i], &basis[j]));
            }
        }
        m
    }

    /// Discriminant of the ring: the determinant of the trace form. Equals
    /// the discriminant of the defining form.
    pub fn disc(&self) -> R {
        self.trace_matrix().det()
    }
}
