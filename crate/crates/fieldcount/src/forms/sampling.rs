//! Random forms and group elements for property tests and audits.
//!
//! Samplers are parametrized by a coefficient-drawing closure so the same
//! code serves every ring. Group elements come in two flavors: rejection
//! sampling of invertible matrices (rings where units are dense, such as
//! fields and the rationals) and products of elementary shears (determinant
//! one by construction, needed over polynomial rings where a random matrix
//! almost never has unit determinant).

use rand::Rng;

use super::binary::{FormV2, FormV3, Mat2};
use super::pairs::{FormV4, GroupElemV4, Mat3};
use super::ring::Ring;
use super::{Form, GroupElem};
use crate::arith::{FqCtx, FqElem, Poly, Rat};

/// Uniform element of the field described by `ctx`.
pub fn fq_elem(ctx: &FqCtx, rng: &mut impl Rng) -> FqElem {
    let idx = rng.gen_range(0..ctx.order());
    ctx.elem_from_index(idx)
}

/// Rational with numerator in `-9..=9` and denominator in `1..=9`.
pub fn rat_elem(rng: &mut impl Rng) -> Rat {
    crate::arith::rat(rng.gen_range(-9..=9), rng.gen_range(1..=9))
}

/// Polynomial over the field of `ctx` with degree at most `max_deg`.
pub fn poly_elem(ctx: &FqCtx, max_deg: usize, rng: &mut impl Rng) -> Poly<FqElem> {
    let coeffs = (0..=max_deg).map(|_| fq_elem(ctx, rng)).collect();
    Poly::from_coeffs(ctx.sample(), coeffs)
}

/// First drawn unit of the ring.
pub fn unit<R: Ring>(draw: &mut dyn FnMut() -> R) -> R {
    loop {
        let x = draw();
        if x.inv().is_some() {
            return x;
        }
    }
}

/// Rejection-sampled invertible 2 x 2 matrix.
pub fn mat2_invertible<R: Ring>(draw: &mut dyn FnMut() -> R) -> Mat2<R> {
    loop {
        let m = Mat2::new([[draw(), draw()], [draw(), draw()]]);
        if m.det().inv().is_some() {
            return m;
        }
    }
}

/// Rejection-sampled invertible 3 x 3 matrix.
pub fn mat3_invertible<R: Ring>(draw: &mut dyn FnMut() -> R) -> Mat3<R> {
    loop {
        let mut m = Mat3::identity(&draw());
        for i in 0..3 {
            for j in 0..3 {
                m.e[i][j] = draw();
            }
        }
        if m.det().inv().is_some() {
            return m;
        }
    }
}

/// Product of `rounds` elementary shears; determinant one in any ring.
pub fn mat2_unimodular<R: Ring>(draw: &mut dyn FnMut() -> R, rounds: usize) -> Mat2<R> {
    let sample = draw();
    let mut m = Mat2::identity(&sample);
    for k in 0..rounds {
        let mut e = Mat2::identity(&sample);
        if k % 2 == 0 {
            e.e[0][1] = draw();
        } else {
            e.e[1][0] = draw();
        }
        m = m.mul(&e);
    }
    m
}

/// Product of elementary shears in three dimensions; determinant one. The
/// shear positions cycle through all six off-diagonal slots while the shear
/// amounts come from `draw`.
pub fn mat3_unimodular<R: Ring>(draw: &mut dyn FnMut() -> R, rounds: usize) -> Mat3<R> {
    const SLOTS: [(usize, usize); 6] = [(0, 1), (1, 2), (2, 0), (1, 0), (2, 1), (0, 2)];
    let sample = draw();
    let mut m = Mat3::identity(&sample);
    for k in 0..rounds {
        let (i, j) = SLOTS[k % SLOTS.len()];
        let mut e = Mat3::identity(&sample);
        e.e[i][j] = draw();
        m = m.mul(&e);
    }
    m
}

/// Random form of the given degree with coefficients from `draw`.
pub fn form<R: Ring>(n: u32, draw: &mut dyn FnMut() -> R) -> Form<R> {
    match n {
        2 => Form::V2(FormV2::new(draw())),
        3 => Form::V3(FormV3::new(draw(), draw(), draw(), draw())),
        4 => Form::V4(FormV4::new(
            std::array::from_fn(|_| draw()),
            std::array::from_fn(|_| draw()),
        )),
        _ => panic!("samplers exist for degrees 2, 3, 4"),
    }
}

/// Random invertible group element of the given degree (rejection flavor).
pub fn group_elem_invertible<R: Ring>(n: u32, draw: &mut dyn FnMut() -> R) -> GroupElem<R> {
    match n {
        2 => GroupElem::V2(unit(draw)),
        3 => GroupElem::V3(mat2_invertible(draw)),
        4 => GroupElem::V4(GroupElemV4::new(
            mat2_invertible(draw),
            mat3_invertible(draw),
        )),
        _ => panic!("samplers exist for degrees 2, 3, 4"),
    }
}

/// Random determinant-one group element of the given degree (shear flavor),
/// usable over rings with sparse units such as `F_q[t]`.
pub fn group_elem_unimodular<R: Ring>(n: u32, draw: &mut dyn FnMut() -> R) -> GroupElem<R> {
    match n {
        2 => GroupElem::V2(draw().one()),
        3 => GroupElem::V3(mat2_unimodular(draw, 4)),
        4 => GroupElem::V4(GroupElemV4::new(
            mat2_unimodular(draw, 4),
            mat3_unimodular(draw, 6),
        )),
        _ => panic!("samplers exist for degrees 2, 3, 4"),
    }
}
