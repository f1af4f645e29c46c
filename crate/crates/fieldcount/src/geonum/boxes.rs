//! Compact open boxes in a finite product of completions of `F_q(t)` and
//! their exact Fourier transforms.
//!
//! A window is a finite set `S` of places. A box member over `S` is a
//! product, over the axes of `K_S^n` and the places of `S`, of shifted balls
//! `c + pi_v^{n_v} O_v`; a [`BoxKS`] is a disjoint union of members. All
//! measures use the self-dual normalization `meas(O_v) = q_v^{-k_v/2}`, with
//! `k_v` the exponent of the divisor of `dt`, so every volume is a rational
//! power of `q` times a rational number.
//!
//! The transform of the indicator of an unshifted box `prod pi_v^{n_v} O_v`
//! is `Vol(box)` times the indicator of `prod pi_v^{-n_v - k_v} O_v`.
//! Shifting the box by `c` multiplies the transform pointwise by the
//! character factor `chi_S(c y)`; [`fourier_member_value`] applies that
//! modulation rule, while [`fourier_box`] accepts only pure boxes and
//! reports the transform as data.

use super::func::RatFunc;
use crate::arith::{rat, rat_pow, CycQ, Field, FqElem, Place, Rat};
use crate::{Error, Result};

/// Coset enumeration cap for reference integration of character integrals.
const INTEGRATION_BUDGET: u64 = 200_000;

/// Local data of one place inside a window.
#[derive(Debug, Clone)]
pub struct PlaceData {
    place: Place,
    norm: u64,
    k: i64,
}

impl PlaceData {
    fn new(q: u64, place: Place) -> Self {
        let norm = place.norm(q);
        let k = place.dt_exponent();
        PlaceData { place, norm, k }
    }

    pub fn place(&self) -> &Place {
        &self.place
    }

    /// Residue-field size `q_v`.
    pub fn norm(&self) -> u64 {
        self.norm
    }

    /// Exponent of the divisor of `dt` at this place.
    pub fn k(&self) -> i64 {
        self.k
    }

    /// Self-dual measure of the ring of integers, `q_v^{-k_v/2}`.
    pub fn unit_measure(&self) -> Rat {
        debug_assert_eq!(self.k % 2, 0, "dt exponents are even on this curve");
        rat_pow(self.norm, -self.k / 2)
    }
}

/// A finite window of places with their local measure data.
#[derive(Debug, Clone)]
pub struct PlaceSet {
    sample: FqElem,
    q: u64,
    data: Vec<PlaceData>,
}

impl PlaceSet {
    /// Builds a window from distinct places.
    pub fn new(sample: &FqElem, places: Vec<Place>) -> Result<Self> {
        if places.is_empty() {
            return Err(Error::invalid("a window needs at least one place"));
        }
        let q = sample.order();
        for (i, p) in places.iter().enumerate() {
            if let Place::Finite(pi) = p {
                if pi.sample().order() != q {
                    return Err(Error::invalid("place from a different base field"));
                }
            }
            if places[..i].contains(p) {
                return Err(Error::invalid(format!("duplicate place {p}")));
            }
        }
        let data = places.into_iter().map(|p| PlaceData::new(q, p)).collect();
        Ok(PlaceSet {
            sample: sample.zero(),
            q,
            data,
        })
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn sample(&self) -> &FqElem {
        &self.sample
    }

    pub fn len(&self) -> usize {
        self.data.len()
    }

    pub fn is_empty(&self) -> bool {
        self.data.is_empty()
    }

    pub fn data(&self) -> &[PlaceData] {
        &self.data
    }

    pub fn places(&self) -> impl Iterator<Item = &Place> {
        self.data.iter().map(|d| &d.place)
    }

    pub fn has_infinity(&self) -> bool {
        self.data.iter().any(|d| d.place == Place::Infinity)
    }

    /// Covolume of the lattice of functions regular outside the window,
    /// `prod_{v not in S} q_v^{k_v/2}`. Only the infinite place contributes.
    pub fn lattice_covolume(&self) -> Rat {
        if self.has_infinity() {
            rat(1, 1)
        } else {
            rat(1, self.q as i64)
        }
    }

    /// Pole bounds outside the window that cut out the dual lattice: the
    /// dual requires `v(y) >= -k_v` away from `S`.
    pub fn dual_outside_bounds(&self) -> Vec<(Place, i64)> {
        if self.has_infinity() {
            Vec::new()
        } else {
            vec![(Place::Infinity, Place::Infinity.dt_exponent())]
        }
    }

    /// Exponent in `0..p` of the product character `chi_S(x)`.
    pub fn character_exponent(&self, x: &RatFunc) -> u64 {
        let p = self.sample.characteristic();
        self.data
            .iter()
            .map(|d| x.residue_trace(&d.place))
            .sum::<u64>()
            % p
    }

    /// Product character `chi_S(x)` over the places of the window.
    pub fn character(&self, x: &RatFunc) -> CycQ {
        let p = self.sample.characteristic();
        CycQ::zeta_pow(p, self.character_exponent(x) as i64)
    }

    /// `log_q |x|_S = -sum_{v in S} v(x) deg v` for nonzero `x`.
    pub fn log_abs(&self, x: &RatFunc) -> Result<i64> {
        if x.is_zero() {
            return Err(Error::ZeroInput);
        }
        Ok(self
            .data
            .iter()
            .map(|d| {
                let v = x.valuation(&d.place).expect("nonzero function");
                -v * d.place.degree() as i64
            })
            .sum())
    }
}

/// One axis of a box member: a shifted ball `shift + prod pi_v^{floor_v} O_v`
/// with one valuation floor per place of the window.
#[derive(Debug, Clone)]
pub struct AxisBox {
    floors: Vec<i64>,
    shift: Option<RatFunc>,
}

impl AxisBox {
    pub fn new(floors: Vec<i64>, shift: Option<RatFunc>) -> Self {
        let shift = shift.filter(|c| !c.is_zero());
        AxisBox { floors, shift }
    }

    pub fn floors(&self) -> &[i64] {
        &self.floors
    }

    pub fn shift(&self) -> Option<&RatFunc> {
        self.shift.as_ref()
    }

    /// Measure `prod_v q_v^{-floor_v} meas(O_v)`.
    pub fn measure(&self, s: &PlaceSet) -> Rat {
        self.floors
            .iter()
            .zip(s.data())
            .map(|(&n, d)| rat_pow(d.norm(), -n) * d.unit_measure())
            .product()
    }

    /// Whether the point lies in this axis ball.
    pub fn contains(&self, s: &PlaceSet, x: &RatFunc) -> bool {
        let diff = match &self.shift {
            Some(c) => x.sub(c),
            None => x.clone(),
        };
        self.floors
            .iter()
            .zip(s.data())
            .all(|(&n, d)| diff.valuation_at_least(&d.place, n))
    }

    fn scaled(&self, s: &PlaceSet, t: &RatFunc) -> Result<AxisBox> {
        if t.is_zero() {
            return Err(Error::ZeroInput);
        }
        let floors = self
            .floors
            .iter()
            .zip(s.data())
            .map(|(&n, d)| n + t.valuation(&d.place).expect("nonzero scaling"))
            .collect();
        Ok(AxisBox::new(floors, self.shift.as_ref().map(|c| c.mul(t))))
    }

    /// Whether two axis balls over the same window are disjoint.
    fn disjoint(&self, other: &AxisBox, s: &PlaceSet) -> bool {
        let diff = match (&self.shift, &other.shift) {
            (Some(a), Some(b)) => a.sub(b),
            (Some(a), None) => a.clone(),
            (None, Some(b)) => b.neg(),
            (None, None) => RatFunc::zero(s.sample()),
        };
        self.floors
            .iter()
            .zip(&other.floors)
            .zip(s.data())
            .any(|((&n, &m), d)| !diff.valuation_at_least(&d.place, n.min(m)))
    }
}

/// One member of a box union: a product of axis balls across `K_S^n`.
#[derive(Debug, Clone)]
pub struct BoxMember {
    axes: Vec<AxisBox>,
}

impl BoxMember {
    pub fn new(axes: Vec<AxisBox>) -> Self {
        BoxMember { axes }
    }

    pub fn axes(&self) -> &[AxisBox] {
        &self.axes
    }

    pub fn measure(&self, s: &PlaceSet) -> Rat {
        self.axes.iter().map(|a| a.measure(s)).product()
    }
}

/// Disjoint union of box members over a common window; a compact open
/// subset of `K_S^n`.
#[derive(Debug, Clone)]
pub struct BoxKS {
    s: PlaceSet,
    members: Vec<BoxMember>,
}

impl BoxKS {
    /// Builds a union, verifying member shapes and pairwise disjointness.
    pub fn new(s: PlaceSet, members: Vec<BoxMember>) -> Result<Self> {
        if members.is_empty() {
            return Err(Error::invalid("a box needs at least one member"));
        }
        let n = members[0].axes.len();
        if n == 0 {
            return Err(Error::invalid("a box needs at least one axis"));
        }
        for m in &members {
            if m.axes.len() != n {
                return Err(Error::invalid("members must share the axis count"));
            }
            for a in &m.axes {
                if a.floors.len() != s.len() {
                    return Err(Error::invalid(
                        "axis floors must cover every place of the window",
                    ));
                }
            }
        }
        for (i, m1) in members.iter().enumerate() {
            for m2 in &members[i + 1..] {
                let disjoint = m1
                    .axes
                    .iter()
                    .zip(&m2.axes)
                    .any(|(a, b)| a.disjoint(b, &s));
                if !disjoint {
                    return Err(Error::invalid("box members must be pairwise disjoint"));
                }
            }
        }
        Ok(BoxKS { s, members })
    }

    /// The unshifted unit box `(prod_v O_v)^n`.
    pub fn unit(s: PlaceSet, n: usize) -> Result<Self> {
        let floors = vec![0i64; s.len()];
        let member = BoxMember::new(vec![AxisBox::new(floors, None); n]);
        BoxKS::new(s, vec![member])
    }

    /// Single unshifted member with the given per-axis floors.
    pub fn pure(s: PlaceSet, floors: Vec<Vec<i64>>) -> Result<Self> {
        let axes = floors.into_iter().map(|f| AxisBox::new(f, None)).collect();
        BoxKS::new(s, vec![BoxMember::new(axes)])
    }

    pub fn place_set(&self) -> &PlaceSet {
        &self.s
    }

    pub fn members(&self) -> &[BoxMember] {
        &self.members
    }

    /// Number of axes `n` of the ambient `K_S^n`.
    pub fn dims(&self) -> usize {
        self.members[0].axes.len()
    }

    /// Whether this is a single member with no shifts.
    pub fn is_pure(&self) -> bool {
        self.members.len() == 1 && self.members[0].axes.iter().all(|a| a.shift.is_none())
    }

    /// Total measure under the self-dual product measure on `K_S^n`.
    pub fn volume(&self) -> Rat {
        self.members.iter().map(|m| m.measure(&self.s)).sum()
    }

    /// Volume normalized against the lattice covolume, so that counts of
    /// lattice points in expanding boxes converge to it: the measure divided
    /// by `Vol(K_S / O_S)` once per axis.
    pub fn lattice_volume(&self) -> Rat {
        let covol = self.s.lattice_covolume();
        let n = self.dims() as i64;
        // covol is 1 or 1/q; dividing by covol^n multiplies by q^n.
        if covol == rat(1, 1) {
            self.volume()
        } else {
            self.volume() * rat_pow(self.s.q(), n)
        }
    }

    /// Whether the point of `K_S^n` lies in the union.
    pub fn contains(&self, x: &[RatFunc]) -> Result<bool> {
        if x.len() != self.dims() {
            return Err(Error::invalid("point dimension mismatch"));
        }
        Ok(self.members.iter().any(|m| {
            m.axes
                .iter()
                .zip(x)
                .all(|(a, xa)| a.contains(&self.s, xa))
        }))
    }

    /// Image under the diagonal scaling `x_a -> t_a x_a` by nonzero
    /// functions: floors shift by the valuations of `t_a`, shifts multiply.
    pub fn scaled(&self, t: &[RatFunc]) -> Result<BoxKS> {
        if t.len() != self.dims() {
            return Err(Error::invalid("scaling dimension mismatch"));
        }
        let members = self
            .members
            .iter()
            .map(|m| {
                let axes = m
                    .axes
                    .iter()
                    .zip(t)
                    .map(|(a, ta)| a.scaled(&self.s, ta))
                    .collect::<Result<Vec<_>>>()?;
                Ok(BoxMember::new(axes))
            })
            .collect::<Result<Vec<_>>>()?;
        // Scaling by a unit of K_S^n preserves disjointness; revalidation
        // also recheck shapes, which cannot change.
        BoxKS::new(self.s.clone(), members)
    }

    /// Conductor data of the indicator function: the per-axis exponents
    /// `c_v` of the largest subgroup `prod pi_v^{c_v} O_v` whose translates
    /// fix every member, together with the degrees `sum_v c_v deg v`.
    pub fn conductor(&self) -> ConductorData {
        let n = self.dims();
        let mut exponents = Vec::with_capacity(n);
        let mut axis_degrees = Vec::with_capacity(n);
        for a in 0..n {
            let exps: Vec<i64> = (0..self.s.len())
                .map(|v| {
                    self.members
                        .iter()
                        .map(|m| m.axes[a].floors[v])
                        .max()
                        .expect("nonempty union")
                })
                .collect();
            let degree = exps
                .iter()
                .zip(self.s.data())
                .map(|(&c, d)| c * d.place.degree() as i64)
                .sum();
            exponents.push(exps);
            axis_degrees.push(degree);
        }
        ConductorData {
            exponents,
            axis_degrees,
        }
    }
}

/// Conductor exponents of a box indicator, per axis and place, with the
/// degree `sum_v c_v deg v` of each axis.
#[derive(Debug, Clone)]
pub struct ConductorData {
    pub exponents: Vec<Vec<i64>>,
    pub axis_degrees: Vec<i64>,
}

/// Fourier transform of a pure box: the coefficient `Vol(b)` and the dual
/// box with floors `-n_v - k_v`.
///
/// For a shifted member the transform is the same pair multiplied pointwise
/// by `chi_S(c y)`; [`fourier_member_value`] evaluates that directly, and
/// unions transform by summing members.
pub fn fourier_box(b: &BoxKS) -> Result<(Rat, BoxKS)> {
    if !b.is_pure() {
        return Err(Error::invalid(
            "transform as a box requires a single unshifted member",
        ));
    }
    let s = b.place_set();
    let dual_axes = b.members[0]
        .axes
        .iter()
        .map(|a| {
            let floors = a
                .floors
                .iter()
                .zip(s.data())
                .map(|(&n, d)| -n - d.k())
                .collect();
            AxisBox::new(floors, None)
        })
        .collect();
    let dual = BoxKS::new(s.clone(), vec![BoxMember::new(dual_axes)])?;
    Ok((b.volume(), dual))
}

/// Pointwise value of the transform of one member at `y in K_S^n`:
/// the member measure on its dual support, modulated by `chi_S(c_a y_a)`
/// for each shifted axis, and zero off the support.
pub fn fourier_member_value(s: &PlaceSet, member: &BoxMember, y: &[RatFunc]) -> CycQ {
    let p = s.sample().characteristic();
    let mut coefficient = rat(1, 1);
    let mut exponent = 0u64;
    for (axis, ya) in member.axes().iter().zip(y) {
        for (&n, d) in axis.floors().iter().zip(s.data()) {
            if !ya.valuation_at_least(&d.place, -n - d.k()) {
                return CycQ::zero(p);
            }
            coefficient = coefficient * rat_pow(d.norm(), -n) * d.unit_measure();
        }
        if let Some(c) = axis.shift() {
            exponent += s.character_exponent(&c.mul(ya));
        }
    }
    CycQ::zeta_pow(p, (exponent % p) as i64).scale(&coefficient)
}

/// Pointwise value of the transform of a box union at `y`.
pub fn fourier_value(b: &BoxKS, y: &[RatFunc]) -> Result<CycQ> {
    if y.len() != b.dims() {
        return Err(Error::invalid("point dimension mismatch"));
    }
    let p = b.place_set().sample().characteristic();
    Ok(CycQ::sum(
        p,
        b.members()
            .iter()
            .map(|m| fourier_member_value(b.place_set(), m, y)),
    ))
}

/// Reference evaluation of the transform of a one-axis member by direct
/// integration: the character integral over each local ball is summed over
/// coset representatives at a depth where the integrand is constant.
///
/// Exact but exponential in the refinement depth; intended for pinning the
/// closed form on small examples.
pub fn fourier_value_by_integration(
    s: &PlaceSet,
    floors: &[i64],
    shift: Option<&RatFunc>,
    y: &RatFunc,
) -> Result<CycQ> {
    if floors.len() != s.len() {
        return Err(Error::invalid("floor count must match the window"));
    }
    let p = s.sample().characteristic();
    let mut total = match shift {
        Some(c) => s.character(&c.mul(y)),
        None => CycQ::from_rat(p, rat(1, 1)),
    };
    for (&n, d) in floors.iter().zip(s.data()) {
        // chi_v(x y) is constant on cosets of pi^m O_v once m + v(y) >= -k_v,
        // the triviality depth of the character.
        let m = match y.valuation(&d.place) {
            Some(vy) => n.max(-d.k() - vy),
            None => n,
        };
        let levels = (m - n) as u32;
        let degree = d.place.degree() as u32;
        let count = (d.norm() as u128).pow(levels);
        if count > INTEGRATION_BUDGET as u128 {
            return Err(Error::budget(format!(
                "character integral needs {count} cosets at {}",
                d.place
            )));
        }
        let uniformizer = match &d.place {
            Place::Finite(pi) => RatFunc::from_poly(pi.clone()),
            Place::Infinity => RatFunc::t_power(s.sample(), -1),
        };
        let mut level_powers = Vec::new();
        let mut acc = uniformizer.pow(n)?;
        for _ in 0..levels {
            level_powers.push(acc.clone());
            acc = acc.mul(&uniformizer);
        }
        let digit_space = (s.q() as usize).pow(degree);
        let mut place_sum = CycQ::zero(p);
        for idx in 0..count {
            // Mixed-radix digits over residue representatives.
            let mut x = RatFunc::zero(s.sample());
            let mut rest = idx;
            for pw in &level_powers {
                let digit = (rest % digit_space as u128) as u64;
                rest /= digit_space as u128;
                let rep = digit_rep(s.sample(), digit, degree);
                x = x.add(&rep.mul(pw));
            }
            place_sum = place_sum.add(&x.mul(y).character(&d.place));
        }
        let coset_measure = rat_pow(d.norm(), -m) * d.unit_measure();
        total = total.mul(&place_sum.scale(&coset_measure));
    }
    Ok(total)
}

/// Polynomial representative of a residue digit: coefficients of `t^i` for
/// `i < degree`, read off mixed-radix from the index.
fn digit_rep(sample: &FqElem, mut digit: u64, degree: u32) -> RatFunc {
    let q = sample.order();
    let mut coeffs = Vec::with_capacity(degree as usize);
    for _ in 0..degree {
        coeffs.push(sample.from_index(digit % q));
        digit /= q;
    }
    RatFunc::from_poly(crate::arith::Poly::from_coeffs(sample, coeffs))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::FqCfg;

    fn f3() -> crate::arith::FqCtx {
        FqCfg::prime(3).build().unwrap()
    }

    fn infinity_window(ctx: &crate::arith::FqCtx) -> PlaceSet {
        PlaceSet::new(ctx.sample(), vec![Place::Infinity]).unwrap()
    }

    fn two_place_window(ctx: &crate::arith::FqCtx) -> PlaceSet {
        let t = Place::finite(ctx.poly_from_ints(&[0, 1])).unwrap();
        PlaceSet::new(ctx.sample(), vec![Place::Infinity, t]).unwrap()
    }

    #[test]
    fn window_validation() {
        let ctx = f3();
        assert!(PlaceSet::new(ctx.sample(), vec![]).is_err());
        assert!(PlaceSet::new(ctx.sample(), vec![Place::Infinity, Place::Infinity]).is_err());
        let s = two_place_window(&ctx);
        assert_eq!(s.len(), 2);
        assert!(s.has_infinity());
        assert_eq!(s.lattice_covolume(), rat(1, 1));
        // Without infinity the covolume drops to 1/q and the dual picks up
        // a forced zero of order 2 at infinity.
        let t = Place::finite(ctx.poly_from_ints(&[0, 1])).unwrap();
        let s = PlaceSet::new(ctx.sample(), vec![t]).unwrap();
        assert_eq!(s.lattice_covolume(), rat(1, 3));
        assert_eq!(s.dual_outside_bounds(), vec![(Place::Infinity, -2)]);
    }

    #[test]
    fn measures_use_the_dt_normalization() {
        let ctx = f3();
        let s = two_place_window(&ctx);
        // meas(O_inf) = 3, meas(O_t) = 1.
        assert_eq!(s.data()[0].unit_measure(), rat(3, 1));
        assert_eq!(s.data()[1].unit_measure(), rat(1, 1));
        let b = BoxKS::unit(s, 1).unwrap();
        assert_eq!(b.volume(), rat(3, 1));
        assert_eq!(b.lattice_volume(), rat(3, 1));
    }

    #[test]
    fn log_abs_of_scalings() {
        let ctx = f3();
        let s = infinity_window(&ctx);
        let t3 = RatFunc::t_power(ctx.sample(), 3);
        assert_eq!(s.log_abs(&t3).unwrap(), 3);
        let s2 = two_place_window(&ctx);
        // |t^3|_inf |t^3|_t = 3^3 * 3^{-3} = 1.
        assert_eq!(s2.log_abs(&t3).unwrap(), 0);
        assert!(s2.log_abs(&RatFunc::zero(ctx.sample())).is_err());
    }

    #[test]
    fn disjointness_is_enforced() {
        let ctx = f3();
        let s = infinity_window(&ctx);
        let ball = |n: i64, c: Option<RatFunc>| AxisBox::new(vec![n], c);
        // O and 1 + pi O overlap (1 lies in O), so the union is rejected.
        let overlapping = vec![
            BoxMember::new(vec![ball(0, None)]),
            BoxMember::new(vec![ball(1, Some(RatFunc::one(ctx.sample())))]),
        ];
        assert!(BoxKS::new(s.clone(), overlapping).is_err());
        // O and t^2 + pi^{-1} O are disjoint: v_inf(t^2) = -2 < -1.
        let far = RatFunc::from_poly(ctx.poly_from_ints(&[0, 0, 1]));
        let fine = vec![
            BoxMember::new(vec![ball(0, None)]),
            BoxMember::new(vec![ball(-1, Some(far))]),
        ];
        let b = BoxKS::new(s, fine).unwrap();
        assert_eq!(b.members().len(), 2);
        // Volumes add over disjoint members: 3 + 3 * 3 = 12.
        assert_eq!(b.volume(), rat(12, 1));
    }

    #[test]
    fn containment_respects_shifts() {
        let ctx = f3();
        let s = two_place_window(&ctx);
        // Box t + (pi_inf O_inf x pi_t O_t): functions close to t at both.
        let shift = RatFunc::from_poly(ctx.poly_from_ints(&[0, 1]));
        let member = BoxMember::new(vec![AxisBox::new(vec![1, 1], Some(shift))]);
        let b = BoxKS::new(s, vec![member]).unwrap();
        let t = RatFunc::from_poly(ctx.poly_from_ints(&[0, 1]));
        assert!(b.contains(&[t.clone()]).unwrap());
        // t + 1 differs by a unit at both places.
        let t1 = RatFunc::from_poly(ctx.poly_from_ints(&[1, 1]));
        assert!(!b.contains(&[t1]).unwrap());
        // t + t^2/(t^2+1) is within pi^1 at t but not at infinity.
        let wiggle = RatFunc::new(ctx.poly_from_ints(&[0, 0, 1]), ctx.poly_from_ints(&[1, 0, 1]))
            .unwrap();
        assert!(!b.contains(&[t.add(&wiggle)]).unwrap());
    }

    #[test]
    fn scaling_moves_floors_and_shifts() {
        let ctx = f3();
        let s = infinity_window(&ctx);
        let shift = RatFunc::one(ctx.sample());
        let member = BoxMember::new(vec![AxisBox::new(vec![0], Some(shift))]);
        let b = BoxKS::new(s, vec![member]).unwrap();
        let t2 = RatFunc::t_power(ctx.sample(), 2);
        let tb = b.scaled(&[t2.clone()]).unwrap();
        assert_eq!(tb.members()[0].axes()[0].floors(), &[-2]);
        assert_eq!(tb.members()[0].axes()[0].shift(), Some(&t2));
        assert!(b.scaled(&[RatFunc::zero(ctx.sample())]).is_err());
    }

    #[test]
    fn conductor_of_a_union_takes_the_deepest_floor() {
        let ctx = f3();
        let s = infinity_window(&ctx);
        let far = RatFunc::from_poly(ctx.poly_from_ints(&[0, 0, 1]));
        let members = vec![
            BoxMember::new(vec![AxisBox::new(vec![0], None)]),
            BoxMember::new(vec![AxisBox::new(vec![2], Some(far))]),
        ];
        let b = BoxKS::new(s, vec![members[0].clone(), members[1].clone()]).unwrap();
        let cond = b.conductor();
        assert_eq!(cond.exponents, vec![vec![2]]);
        assert_eq!(cond.axis_degrees, vec![2]);
    }

    #[test]
    fn transform_of_the_unit_ball() {
        // Over F_3 at infinity: coefficient 3 and dual floor 2.
        let ctx = f3();
        let s = infinity_window(&ctx);
        let b = BoxKS::unit(s, 1).unwrap();
        let (coeff, dual) = fourier_box(&b).unwrap();
        assert_eq!(coeff, rat(3, 1));
        assert_eq!(dual.members()[0].axes()[0].floors(), &[2]);
        // Floor m transforms to floor 2 - m.
        for m in -2..=3i64 {
            let bm = BoxKS::pure(b.place_set().clone(), vec![vec![m]]).unwrap();
            let (c, d) = fourier_box(&bm).unwrap();
            assert_eq!(c, rat_pow(3, 1 - m));
            assert_eq!(d.members()[0].axes()[0].floors(), &[2 - m]);
        }
    }

    #[test]
    fn double_transform_scales_by_the_volume_product() {
        let ctx = f3();
        let s = two_place_window(&ctx);
        let b = BoxKS::pure(s, vec![vec![1, -1], vec![0, 2]]).unwrap();
        let (c1, dual) = fourier_box(&b).unwrap();
        let (c2, double) = fourier_box(&dual).unwrap();
        for (a, b_axis) in double.members()[0]
            .axes()
            .iter()
            .zip(b.members()[0].axes())
        {
            assert_eq!(a.floors(), b_axis.floors());
        }
        assert_eq!(c1, b.volume());
        assert_eq!(c2, dual.volume());
        assert!(fourier_box(&BoxKS::new(
            b.place_set().clone(),
            vec![BoxMember::new(vec![
                AxisBox::new(vec![0, 0], Some(RatFunc::one(ctx.sample()))),
                AxisBox::new(vec![0, 0], None),
            ])],
        )
        .unwrap())
        .is_err());
    }

    #[test]
    fn transform_value_matches_integration_at_infinity() {
        let ctx = f3();
        let s = infinity_window(&ctx);
        for n in -1..=2i64 {
            let b = BoxKS::pure(s.clone(), vec![vec![n]]).unwrap();
            for j in -4..=4i64 {
                for c in 1..3 {
                    let y = RatFunc::t_power(ctx.sample(), -j).scale(&ctx.elem_from_int(c));
                    let closed = fourier_value(&b, &[y.clone()]).unwrap();
                    let brute =
                        fourier_value_by_integration(&s, &[n], None, &y).unwrap();
                    assert_eq!(closed, brute, "n = {n}, y = {y}");
                }
            }
        }
    }

    #[test]
    fn shifted_transform_picks_up_the_modulation_factor() {
        let ctx = f3();
        let s = infinity_window(&ctx);
        let shift = RatFunc::from_poly(ctx.poly_from_ints(&[0, 1]));
        let member = BoxMember::new(vec![AxisBox::new(vec![0], Some(shift.clone()))]);
        let b = BoxKS::new(s.clone(), vec![member.clone()]).unwrap();
        for j in -3..=3i64 {
            let y = RatFunc::t_power(ctx.sample(), j);
            let closed = fourier_value(&b, &[y.clone()]).unwrap();
            let brute = fourier_value_by_integration(&s, &[0], Some(&shift), &y).unwrap();
            assert_eq!(closed, brute, "y = t^{j}");
            // The modulation rule: shifted value = character times pure value.
            let pure = BoxKS::unit(s.clone(), 1).unwrap();
            let modulated = fourier_value(&pure, &[y.clone()])
                .unwrap()
                .mul(&s.character(&shift.mul(&y)));
            assert_eq!(closed, modulated);
        }
    }
}
