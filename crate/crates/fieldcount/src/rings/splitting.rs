//! Splitting types: the Frobenius-orbit shape of the zero locus of a form
//! over a finite field, and its reduction at finite places of `F_q(t)`.
//!
//! For a binary cubic form the type is the multiplicity pattern of its roots
//! in `P^1`; for a pair of ternary quadratic forms it is the orbit partition
//! of the four intersection points of the two conics in `P^2`. Nondegenerate
//! forms give the partitions of unramified etale algebras; degenerate
//! reductions give the ramified shapes `(1^2 1)`, `(1^3)`, `(0)` and the
//! quartic marker `(ram)`.

use std::sync::Arc;

use crate::arith::factor::roots_with_multiplicity;
use crate::arith::places::finite_places_of_degree;
use crate::arith::{Ext, ExtCtx, Field, FqElem, Place, Poly, PolyFq};
use crate::forms::{Form, FormV2, FormV3, FormV4, QuadCoeffs};
use crate::{Error, Result};

/// Frobenius-orbit shape of the zero locus of a form.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SplittingType {
    /// Degree 2: two rational points.
    Split11,
    /// Degree 2: one inert quadratic point.
    Split2,
    /// Degree 3: three distinct rational roots.
    Split111,
    /// Degree 3: one rational root and one quadratic point.
    Split12,
    /// Degree 3: one cubic point.
    Split3,
    /// Degree 3: a double root plus a simple root.
    Ram121,
    /// Degree 3: a triple root.
    Ram13,
    /// Degree 3: the zero form.
    Zero,
    /// Degree 4: four rational points.
    Split1111,
    /// Degree 4: two rational points and a quadratic point.
    Split112,
    /// Degree 4: two quadratic points.
    Split22,
    /// Degree 4: a rational point and a cubic point.
    Split13,
    /// Degree 4: one quartic point.
    Split4,
    /// Degree 4: the pair degenerates at the place.
    QuarticRam,
}

impl SplittingType {
    /// Conventional display form, e.g. `(111)` or `(1^2 1)`.
    pub fn as_str(self) -> &'static str {
        match self {
            SplittingType::Split11 => "(11)",
            SplittingType::Split2 => "(2)",
            SplittingType::Split111 => "(111)",
            SplittingType::Split12 => "(12)",
            SplittingType::Split3 => "(3)",
            SplittingType::Ram121 => "(1^2 1)",
            SplittingType::Ram13 => "(1^3)",
            SplittingType::Zero => "(0)",
            SplittingType::Split1111 => "(1111)",
            SplittingType::Split112 => "(112)",
            SplittingType::Split22 => "(22)",
            SplittingType::Split13 => "(13)",
            SplittingType::Split4 => "(4)",
            SplittingType::QuarticRam => "(ram)",
        }
    }

    /// Automorphism-group order of the etale algebra with this shape; `None`
    /// for the ramified and degenerate shapes.
    pub fn aut_order(self) -> Option<u64> {
        match self {
            SplittingType::Split11 | SplittingType::Split2 => Some(2),
            SplittingType::Split111 => Some(6),
            SplittingType::Split12 => Some(2),
            SplittingType::Split3 => Some(3),
            SplittingType::Split1111 => Some(24),
            SplittingType::Split112 => Some(4),
            SplittingType::Split22 => Some(8),
            SplittingType::Split13 => Some(3),
            SplittingType::Split4 => Some(4),
            _ => None,
        }
    }
}

impl std::fmt::Display for SplittingType {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Splitting type of a nonzero element under `v -> g^2 v`: split when `v` is
/// a square, inert otherwise.
pub fn splitting_type_quadratic<K: Field + crate::forms::Ring>(
    v: &FormV2<K>,
) -> Result<SplittingType> {
    if Field::is_zero(&v.v) {
        return Err(Error::DegenerateForm);
    }
    Ok(if v.v.is_square() {
        SplittingType::Split11
    } else {
        SplittingType::Split2
    })
}

/// Splitting type of a binary cubic form over the field of its coefficients:
/// the multiplicity pattern of its roots in `P^1`, with `(0)` reserved for
/// the zero form.
pub fn splitting_type_cubic<K: Field + crate::forms::Ring>(f: &FormV3<K>) -> SplittingType {
    if f.coeffs().iter().all(|c| Field::is_zero(*c)) {
        return SplittingType::Zero;
    }
    let p = Poly::from_coeffs(
        &f.a,
        vec![f.d.clone(), f.c.clone(), f.b.clone(), f.a.clone()],
    );
    let inf_mult = 3 - p.degree().expect("nonzero by the zero-form guard") as u32;
    let mut mults: Vec<u32> = roots_with_multiplicity(&p)
        .into_iter()
        .map(|(_, m)| m)
        .collect();
    if inf_mult > 0 {
        mults.push(inf_mult);
    }
    if mults.contains(&3) {
        return SplittingType::Ram13;
    }
    if mults.contains(&2) {
        return SplittingType::Ram121;
    }
    match mults.len() {
        3 => SplittingType::Split111,
        1 => SplittingType::Split12,
        0 => SplittingType::Split3,
        // two simple rational roots would leave a linear cofactor whose root
        // would also have been found
        _ => unreachable!("a cubic cannot have exactly two simple rational roots"),
    }
}

/// Reduces the coefficients of a cubic form over `F_q[t]` into the residue
/// field of a finite place.
pub(crate) fn reduce_form_v3(
    f: &FormV3<PolyFq>,
    kctx: &Arc<ExtCtx<FqElem>>,
) -> FormV3<Ext<FqElem>> {
    FormV3::new(
        Ext::from_poly(kctx, &f.a),
        Ext::from_poly(kctx, &f.b),
        Ext::from_poly(kctx, &f.c),
        Ext::from_poly(kctx, &f.d),
    )
}

fn reduce_quad(q: &QuadCoeffs<PolyFq>, kctx: &Arc<ExtCtx<FqElem>>) -> QuadCoeffs<Ext<FqElem>> {
    std::array::from_fn(|i| Ext::from_poly(kctx, &q[i]))
}

/// Splitting type of the reduction of a cubic form over `F_q[t]` at a finite
/// place.
pub fn splitting_type_cubic_at(f: &FormV3<PolyFq>, place: &Place) -> Result<SplittingType> {
    let kctx = place.residue_field()?;
    Ok(splitting_type_cubic(&reduce_form_v3(f, &kctx)))
}

/// Number of common zeros of two ternary quadratic forms in `P^2(K)`.
pub fn count_common_zeros_p2<K: Field + crate::forms::Ring>(
    a: &QuadCoeffs<K>,
    b: &QuadCoeffs<K>,
) -> u64 {
    let sample = &a[0];
    let mul = |x: &K, y: &K| Field::mul(x, y);
    let eval = |q: &QuadCoeffs<K>, x: &K, y: &K, z: &K| -> bool {
        let terms = [
            mul(&mul(&q[0], x), x),
            mul(&mul(&q[1], x), y),
            mul(&mul(&q[2], x), z),
            mul(&mul(&q[3], y), y),
            mul(&mul(&q[4], y), z),
            mul(&mul(&q[5], z), z),
        ];
        let total = terms
            .into_iter()
            .reduce(|s, t| Field::add(&s, &t))
            .expect("six quadric terms");
        Field::is_zero(&total)
    };
    let elems = sample.all_elements();
    let one = Field::one(sample);
    let zero = Field::zero(sample);
    let mut count = 0u64;
    for y in &elems {
        for z in &elems {
            if eval(a, &one, y, z) && eval(b, &one, y, z) {
                count += 1;
            }
        }
    }
    for z in &elems {
        if eval(a, &zero, &one, z) && eval(b, &zero, &one, z) {
            count += 1;
        }
    }
    if eval(a, &zero, &zero, &one) && eval(b, &zero, &zero, &one) {
        count += 1;
    }
    count
}

/// Splitting type of a nondegenerate pair of ternary quadratic forms: the
/// Frobenius-orbit partition of the four intersection points of the two
/// conics in `P^2` over the algebraic closure.
///
/// A nonzero pair discriminant makes the intersection etale of degree 4, so
/// the resolvent cubic's splitting type (the image of Frobenius under the
/// surjection `S_4 -> S_3`) together with the rational point count pins the
/// partition without leaving the base field.
pub fn splitting_type_quartic<K: Field + crate::forms::Ring>(
    v: &FormV4<K>,
) -> Result<SplittingType> {
    if Field::is_zero(&v.disc()) {
        return Err(Error::DegeneratePair);
    }
    let res = v.resolvent_cubic();
    let n1 = count_common_zeros_p2(&v.a, &v.b);
    Ok(match (splitting_type_cubic(&res), n1) {
        (SplittingType::Split111, 4) => SplittingType::Split1111,
        (SplittingType::Split111, 0) => SplittingType::Split22,
        (SplittingType::Split12, 2) => SplittingType::Split112,
        (SplittingType::Split12, 0) => SplittingType::Split4,
        (SplittingType::Split3, 1) => SplittingType::Split13,
        (t, n) => unreachable!("no etale quartic has resolvent {t} with {n} rational points"),
    })
}

/// Splitting type of a nondegenerate pair by direct point counting over
/// `F_{q^k}` for `k = 1..4` plus Moebius inversion. Slower than
/// [`splitting_type_quartic`] and used to cross-check it.
pub fn splitting_type_quartic_by_counts(v: &FormV4<FqElem>) -> Result<SplittingType> {
    if v.disc().is_zero() {
        return Err(Error::DegeneratePair);
    }
    let sample = v.a[0].clone();
    let mut n = [0u64; 4];
    n[1] = count_common_zeros_p2(&v.a, &v.b);
    for k in 2..=3usize {
        let place = finite_places_of_degree(&sample, k)
            .into_iter()
            .next()
            .expect("monic irreducibles exist in every degree");
        let Place::Finite(pi) = place else {
            unreachable!("finite_places_of_degree returns finite places")
        };
        let ctx = ExtCtx::new(pi)?;
        let a2: QuadCoeffs<Ext<FqElem>> = std::array::from_fn(|i| Ext::embed(&ctx, &v.a[i]));
        let b2: QuadCoeffs<Ext<FqElem>> = std::array::from_fn(|i| Ext::embed(&ctx, &v.b[i]));
        n[k] = count_common_zeros_p2(&a2, &b2);
    }
    // closed points of degree d among the four geometric points; the
    // quartic count is forced by the total degree
    let m1 = n[1];
    assert!(n[2] >= n[1] && (n[2] - n[1]) % 2 == 0, "point counts tower");
    assert!(n[3] >= n[1] && (n[3] - n[1]) % 3 == 0, "point counts tower");
    let m2 = (n[2] - n[1]) / 2;
    let m3 = (n[3] - n[1]) / 3;
    let low = m1 + 2 * m2 + 3 * m3;
    assert!(
        low <= 4 && (4 - low) % 4 == 0,
        "a nondegenerate pair meets in four geometric points"
    );
    let m4 = (4 - low) / 4;
    Ok(match (m1, m2, m3, m4) {
        (4, 0, 0, 0) => SplittingType::Split1111,
        (2, 1, 0, 0) => SplittingType::Split112,
        (0, 2, 0, 0) => SplittingType::Split22,
        (1, 0, 1, 0) => SplittingType::Split13,
        (0, 0, 0, 1) => SplittingType::Split4,
        _ => unreachable!("partition of 4 with a fixed point pattern"),
    })
}

/// Splitting type of the reduction of a quartic pair over `F_q[t]` at a
/// finite place; `(ram)` when the reduced pair is degenerate.
pub fn splitting_type_quartic_at(v: &FormV4<PolyFq>, place: &Place) -> Result<SplittingType> {
    let kctx = place.residue_field()?;
    let vbar = FormV4::new(reduce_quad(&v.a, &kctx), reduce_quad(&v.b, &kctx));
    if vbar.disc().is_zero() {
        return Ok(SplittingType::QuarticRam);
    }
    splitting_type_quartic(&vbar)
}

/// Splitting type of any supported form over a finite field.
pub fn splitting_type_of<K: Field + crate::forms::Ring>(form: &Form<K>) -> Result<SplittingType> {
    match form {
        Form::V2(v) => splitting_type_quadratic(v),
        Form::V3(f) => Ok(splitting_type_cubic(f)),
        Form::V4(v) => splitting_type_quartic(v),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{FqCfg, FqCtx};
    use crate::forms::sampling;
    use rand::SeedableRng;

    fn f5() -> FqCtx {
        FqCfg::prime(5).build().unwrap()
    }

    fn cubic(ctx: &FqCtx, c: [i64; 4]) -> FormV3<FqElem> {
        FormV3::from_ints(ctx.sample(), c)
    }

    #[test]
    fn cubic_examples_over_f5() {
        let ctx = f5();
        assert_eq!(
            splitting_type_cubic(&cubic(&ctx, [1, 0, -1, 0])),
            SplittingType::Split111
        );
        assert_eq!(
            splitting_type_cubic(&cubic(&ctx, [1, 0, 0, 0])),
            SplittingType::Ram13
        );
        assert_eq!(
            splitting_type_cubic(&cubic(&ctx, [0, 0, 0, 0])),
            SplittingType::Zero
        );
        // x^2 y + x y^2 has roots 0, -1 and infinity
        assert_eq!(
            splitting_type_cubic(&cubic(&ctx, [0, 1, 1, 0])),
            SplittingType::Split111
        );
        // x^2 y has a double root at 0 and a simple root at infinity
        assert_eq!(
            splitting_type_cubic(&cubic(&ctx, [0, 1, 0, 0])),
            SplittingType::Ram121
        );
    }

    #[test]
    fn cubic_examples_over_f3() {
        let ctx = FqCfg::prime(3).build().unwrap();
        // x^3 - x - 1 has no roots mod 3, hence is irreducible
        assert_eq!(
            splitting_type_cubic(&cubic(&ctx, [1, 0, -1, -1])),
            SplittingType::Split3
        );
        // x(x^2 + y^2) with x^2 + 1 irreducible mod 3
        assert_eq!(
            splitting_type_cubic(&cubic(&ctx, [1, 0, 1, 0])),
            SplittingType::Split12
        );
    }

    #[test]
    fn cubic_reduction_at_a_place() {
        let ctx = f5();
        let t = ctx.poly_var();
        let f = FormV3::new(
            ctx.poly_from_ints(&[1]),
            t.clone(),
            ctx.poly_from_ints(&[-1]),
            t.clone(),
        );
        let place = Place::finite(t).unwrap();
        // reduction mod t is x^3 - x y^2
        assert_eq!(
            splitting_type_cubic_at(&f, &place).unwrap(),
            SplittingType::Split111
        );
        assert!(splitting_type_cubic_at(&f, &Place::Infinity).is_err());
    }

    #[test]
    fn quadratic_split_and_inert() {
        let ctx = f5();
        let sq = FormV2::new(ctx.elem_from_int(4));
        let ns = FormV2::new(ctx.elem_from_int(2));
        assert_eq!(
            splitting_type_quadratic(&sq).unwrap(),
            SplittingType::Split11
        );
        assert_eq!(splitting_type_quadratic(&ns).unwrap(), SplittingType::Split2);
        let zero = FormV2::new(ctx.elem_from_int(0));
        assert_eq!(
            splitting_type_quadratic(&zero).unwrap_err().to_string(),
            "degenerate form"
        );
    }

    #[test]
    fn quartic_pair_with_four_rational_points() {
        // conics x y = y z and y z = x z meet exactly in the four rational
        // points (1:0:0), (0:1:0), (0:0:1), (1:1:1)
        let ctx = FqCfg::prime(7).build().unwrap();
        let v = FormV4::from_ints(ctx.sample(), [0, 1, 0, 0, -1, 0], [0, 0, -1, 0, 1, 0]);
        assert_eq!(count_common_zeros_p2(&v.a, &v.b), 4);
        assert_eq!(
            splitting_type_quartic(&v).unwrap(),
            SplittingType::Split1111
        );
        assert_eq!(
            splitting_type_quartic_by_counts(&v).unwrap(),
            SplittingType::Split1111
        );
    }

    #[test]
    fn quartic_unit_spheres_over_f7_pair_into_two_quadratic_points() {
        // x^2+y^2+z^2 = x^2+2y^2+3z^2 = 0 forces y^2 = 5 x^2 and z^2 = x^2;
        // 5 is not a square mod 7, so the four points live in F_49 and the
        // Frobenius y -> -y pairs them into two orbits of size two
        let ctx = FqCfg::prime(7).build().unwrap();
        let v = FormV4::from_ints(ctx.sample(), [1, 0, 0, 1, 0, 1], [1, 0, 0, 2, 0, 3]);
        assert_eq!(count_common_zeros_p2(&v.a, &v.b), 0);
        assert_eq!(splitting_type_quartic(&v).unwrap(), SplittingType::Split22);
        assert_eq!(
            splitting_type_quartic_by_counts(&v).unwrap(),
            SplittingType::Split22
        );
    }

    #[test]
    fn quartic_degenerate_pair_is_rejected() {
        let ctx = FqCfg::prime(7).build().unwrap();
        // second form a multiple of the first: resolvent has a triple root
        let v = FormV4::from_ints(ctx.sample(), [1, 0, 0, 1, 0, 1], [2, 0, 0, 2, 0, 2]);
        assert_eq!(
            splitting_type_quartic(&v).unwrap_err().to_string(),
            "degenerate pair"
        );
        assert_eq!(
            splitting_type_quartic_by_counts(&v).unwrap_err().to_string(),
            "degenerate pair"
        );
    }

    #[test]
    fn quartic_fast_route_matches_point_count_oracle() {
        let mut seen = std::collections::BTreeSet::new();
        for q in [3u64, 5] {
            let ctx = FqCfg::prime(q).build().unwrap();
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(q);
            let mut checked = 0;
            while checked < 60 {
                let mut draw = || sampling::fq_elem(&ctx, &mut rng);
                let v = FormV4::new(
                    std::array::from_fn(|_| draw()),
                    std::array::from_fn(|_| draw()),
                );
                if v.disc().is_zero() {
                    continue;
                }
                checked += 1;
                let fast = splitting_type_quartic(&v).unwrap();
                let slow = splitting_type_quartic_by_counts(&v).unwrap();
                assert_eq!(fast, slow, "disagreement on {:?}", v.to_vec());
                seen.insert(fast);
            }
        }
        // the sample is large enough to hit every etale quartic shape
        assert_eq!(seen.len(), 5, "saw {seen:?}");
    }

    #[test]
    fn quartic_reduction_at_a_place() {
        let ctx = FqCfg::prime(3).build().unwrap();
        let t = ctx.poly_var();
        let c = |n: i64| ctx.poly_from_ints(&[n]);
        // A = identity conic, B = diag(1,1,2) + t*z^2: degenerate mod t
        let v = FormV4::new(
            [c(1), c(0), c(0), c(1), c(0), c(1)],
            [c(1), c(0), c(0), c(1), c(0), c(2).add(&t)],
        );
        let place = Place::finite(ctx.poly_var()).unwrap();
        assert_eq!(
            splitting_type_quartic_at(&v, &place).unwrap(),
            SplittingType::QuarticRam
        );
    }

    #[test]
    fn dispatcher_covers_all_degrees() {
        let ctx = f5();
        let v2 = Form::V2(FormV2::new(ctx.elem_from_int(4)));
        let v3 = Form::V3(cubic(&ctx, [1, 0, -1, 0]));
        assert_eq!(splitting_type_of(&v2).unwrap(), SplittingType::Split11);
        assert_eq!(splitting_type_of(&v3).unwrap(), SplittingType::Split111);
    }
}
