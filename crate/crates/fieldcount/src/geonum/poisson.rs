//! Exact lattice point counts in boxes via Poisson summation, with direct
//! enumeration oracles, expansion thresholds, skew projection bounds, and
//! fundamental domain tiling checks.
//!
//! The lattice is `O_S`, the functions regular outside the window `S`,
//! diagonally embedded in `K_S = prod_{v in S} K_v`. Poisson summation
//! reads `sum_{x in O_S^n} f(x) = Vol(K_S/O_S)^{-n} sum_{y in dual^n} Ff(y)`
//! for a box indicator `f`; both sides are computed exactly, the left by
//! enumerating sections of explicit divisors on the projective line, the
//! right by cyclotomic character sums over the dual sections. Once a box is
//! scaled past the expansion threshold the dual sum collapses to its `y = 0`
//! term and the count equals the normalized volume on the nose.

use super::boxes::{BoxKS, PlaceSet};
use super::func::RatFunc;
use crate::arith::{rat, rat_pow, CycQ, Field, FqElem, Place, Poly, Rat};
use crate::{Error, Result};

/// Cap on the number of functions enumerated from one section space.
pub const ENUM_BUDGET: u64 = 2_000_000;

/// Divisor on the projective line over `F_q`: places with integer
/// multiplicities. Positive multiplicity allows a pole, negative forces a
/// zero.
#[derive(Debug, Clone)]
pub struct Divisor {
    sample: FqElem,
    points: Vec<(Place, i64)>,
}

impl Divisor {
    /// Builds a divisor from distinct places; zero multiplicities drop out.
    pub fn new(sample: &FqElem, points: Vec<(Place, i64)>) -> Result<Self> {
        let points: Vec<(Place, i64)> = points.into_iter().filter(|&(_, m)| m != 0).collect();
        for (i, (p, _)) in points.iter().enumerate() {
            if points[..i].iter().any(|(p2, _)| p2 == p) {
                return Err(Error::invalid(format!("repeated place {p} in divisor")));
            }
        }
        Ok(Divisor {
            sample: sample.zero(),
            points,
        })
    }

    pub fn points(&self) -> &[(Place, i64)] {
        &self.points
    }

    pub fn coefficient(&self, place: &Place) -> i64 {
        self.points
            .iter()
            .find(|(p, _)| p == place)
            .map_or(0, |&(_, m)| m)
    }

    pub fn degree(&self) -> i64 {
        self.points
            .iter()
            .map(|(p, m)| m * p.degree() as i64)
            .sum()
    }

    /// Dimension of the space of sections; degree plus one in genus zero,
    /// zero for negative degree.
    pub fn h0_dim(&self) -> i64 {
        (self.degree() + 1).max(0)
    }

    /// Basis of the functions `f` with `div(f) + D >= 0`: zeros forced by
    /// the negative part are collected in a numerator, allowed poles in a
    /// denominator, and the remaining freedom is a polynomial factor of
    /// bounded degree.
    pub fn h0_basis(&self) -> Vec<RatFunc> {
        let one = self.sample.one();
        let mut forced = Poly::constant(&one);
        let mut allowed = Poly::constant(&one);
        let mut at_infinity = 0i64;
        for (p, m) in &self.points {
            match p {
                Place::Infinity => at_infinity = *m,
                Place::Finite(pi) => {
                    if *m > 0 {
                        allowed = allowed.mul(&pi.pow(*m as u32));
                    } else {
                        forced = forced.mul(&pi.pow((-m) as u32));
                    }
                }
            }
        }
        let bound = allowed.degree_or_neg() - forced.degree_or_neg() + at_infinity;
        (0..=bound)
            .map(|i| {
                let num = forced.mul(&Poly::monomial(&one, i as usize));
                RatFunc::new(num, allowed.clone()).expect("nonzero denominator")
            })
            .collect()
    }

    /// Every section, zero included: all `F_q`-combinations of the basis.
    pub fn h0_elements(&self) -> Result<Vec<RatFunc>> {
        let basis = self.h0_basis();
        let q = self.sample.order();
        let dim = basis.len() as u32;
        let count = (q as u128).saturating_pow(dim);
        if count > ENUM_BUDGET as u128 {
            return Err(Error::budget(format!(
                "section space has {count} elements, budget {ENUM_BUDGET}"
            )));
        }
        let mut out = Vec::with_capacity(count as usize);
        for idx in 0..count {
            let mut f = RatFunc::zero(&self.sample);
            let mut rest = idx;
            for b in &basis {
                let digit = (rest % q as u128) as u64;
                rest /= q as u128;
                if digit != 0 {
                    f = f.add(&b.scale(&self.sample.from_index(digit)));
                }
            }
            out.push(f);
        }
        Ok(out)
    }
}

/// Per-axis divisor whose sections are the dual lattice points meeting the
/// transform support of the box: pole orders `conductor + k_v` on the
/// window, the dual constraints outside it.
fn dual_axis_divisor(b: &BoxKS, axis: usize) -> Result<Divisor> {
    let s = b.place_set();
    let cond = b.conductor();
    let mut points: Vec<(Place, i64)> = cond.exponents[axis]
        .iter()
        .zip(s.data())
        .map(|(&c, d)| (d.place().clone(), c + d.k()))
        .collect();
    points.extend(s.dual_outside_bounds());
    Divisor::new(s.sample(), points)
}

/// Degree of the dual axis divisor; negative degree means only `y = 0`
/// survives on that axis.
fn dual_axis_degree(b: &BoxKS, axis: usize) -> i64 {
    let s = b.place_set();
    let cond = b.conductor();
    let window: i64 = cond.exponents[axis]
        .iter()
        .zip(s.data())
        .map(|(&c, d)| (c + d.k()) * d.place().degree() as i64)
        .sum();
    let outside = if s.has_infinity() { 0 } else { -2 };
    window + outside
}

/// Whether every axis of the box is past the expansion threshold, so the
/// dual sum collapses and the lattice count equals the normalized volume.
pub fn expansion_threshold_met(b: &BoxKS) -> bool {
    (0..b.dims()).all(|a| dual_axis_degree(b, a) < 0)
}

/// Number of `O_S^n` points in the box, by Poisson summation: the dual sum
/// factors over members and axes, each factor an exact cyclotomic character
/// sum over the sections of the dual axis divisor.
pub fn poisson_count(b: &BoxKS) -> Result<Rat> {
    let s = b.place_set();
    let p = s.sample().characteristic();
    let n = b.dims();
    let axis_duals = (0..n)
        .map(|a| dual_axis_divisor(b, a)?.h0_elements())
        .collect::<Result<Vec<_>>>()?;
    let mut total = CycQ::zero(p);
    for member in b.members() {
        let mut term = CycQ::from_rat(p, member.measure(s));
        for (axis, duals) in member.axes().iter().zip(&axis_duals) {
            let mut charsum = CycQ::zero(p);
            for y in duals {
                let supported = axis
                    .floors()
                    .iter()
                    .zip(s.data())
                    .all(|(&nv, d)| y.valuation_at_least(d.place(), -nv - d.k()));
                if !supported {
                    continue;
                }
                let e = match axis.shift() {
                    Some(c) => s.character_exponent(&c.mul(y)),
                    None => 0,
                };
                charsum = charsum.add(&CycQ::zeta_pow(p, e as i64));
            }
            term = term.mul(&charsum);
        }
        total = total.add(&term);
    }
    let covol_recip = if s.has_infinity() {
        rat(1, 1)
    } else {
        rat_pow(s.q(), n as i64)
    };
    let count = total
        .scale(&covol_recip)
        .as_rational()
        .ok_or_else(|| Error::invalid("dual character sum did not collapse to a rational"))?;
    if !count.is_integer() || count < rat(0, 1) {
        return Err(Error::invalid(format!(
            "dual character sum gave a non-count value {count}"
        )));
    }
    Ok(count)
}

/// Whether the function lies in `O_S`: no poles at finite places outside
/// the window, and none at infinity when infinity is outside it.
fn is_s_integral(s: &PlaceSet, x: &RatFunc) -> Result<bool> {
    if x.is_zero() {
        return Ok(true);
    }
    if !s.has_infinity() && !x.valuation_at_least(&Place::Infinity, 0) {
        return Ok(false);
    }
    if x.den().is_one() {
        return Ok(true);
    }
    for (pi, _) in &crate::arith::factor::factor(x.den())?.factors {
        let place = Place::Finite(pi.clone());
        if !s.places().any(|p| *p == place) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Number of `O_S^n` points in the box by direct enumeration. Candidates
/// for each axis come from an explicit section space around the shift;
/// membership in `O_S` is then checked one candidate at a time.
///
/// Exponential in the box size; this is the oracle the spectral count is
/// measured against.
pub fn lattice_points_direct(b: &BoxKS) -> Result<Rat> {
    let s = b.place_set();
    let mut total = rat(0, 1);
    for member in b.members() {
        let mut member_count = rat(1, 1);
        for axis in member.axes() {
            let mut points: Vec<(Place, i64)> = axis
                .floors()
                .iter()
                .zip(s.data())
                .map(|(&nv, d)| (d.place().clone(), -nv))
                .collect();
            if let Some(c) = axis.shift() {
                // Candidate differences may need the shift's own poles
                // outside the window to cancel them.
                if !c.den().is_one() {
                    for (pi, e) in &crate::arith::factor::factor(c.den())?.factors {
                        let place = Place::Finite(pi.clone());
                        if !s.places().any(|p| *p == place) {
                            points.push((place, *e as i64));
                        }
                    }
                }
                if !s.has_infinity() {
                    let vinf = c.valuation(&Place::Infinity).expect("nonzero shift");
                    if vinf < 0 {
                        points.push((Place::Infinity, -vinf));
                    }
                }
            }
            let sections = Divisor::new(s.sample(), points)?.h0_elements()?;
            let mut axis_count = 0i64;
            for delta in sections {
                let x = match axis.shift() {
                    Some(c) => c.add(&delta),
                    None => delta,
                };
                if is_s_integral(s, &x)? {
                    axis_count += 1;
                }
            }
            member_count *= rat(axis_count, 1);
        }
        total += member_count;
    }
    Ok(total)
}

/// Count, normalized volume, and threshold status of one box.
#[derive(Debug, Clone)]
pub struct CountCheck {
    pub count: Rat,
    pub volume: Rat,
    pub threshold_met: bool,
}

/// Counts the lattice points of the box spectrally and compares against the
/// normalized volume. Past the expansion threshold the two must agree
/// exactly, and the function insists on it.
pub fn exact_count_check(b: &BoxKS) -> Result<CountCheck> {
    let count = poisson_count(b)?;
    let volume = b.lattice_volume();
    let threshold_met = expansion_threshold_met(b);
    if threshold_met {
        assert_eq!(
            count, volume,
            "past the threshold the count must equal the volume"
        );
    }
    Ok(CountCheck {
        count,
        volume,
        threshold_met,
    })
}

/// Exact count of a scaled box against its projection bound.
#[derive(Debug, Clone)]
pub struct SkewBound {
    pub count: Rat,
    pub bound: Rat,
}

/// Counts `O_S^n` points of the box scaled by `t` and bounds the count
/// through the projection onto the axes at and past `pivot` (1-based).
///
/// Axes before the pivot may only shrink (`v(t_j) >= 0` on the window);
/// axes from the pivot on must be scaled past the expansion threshold.
/// Fibering over the leading coordinates bounds the count by
///
/// ```text
/// covol^{-(n-pivot+1)} * sum_members prod_{j < pivot} q^{h0(D_j)}
///                                  * prod_{j >= pivot} Vol_j
/// ```
///
/// where `q^{h0(D_j)}` counts the lattice points a shrunk axis ball can
/// hold and `Vol_j` is the scaled axis measure. With `pivot = 1` the bound
/// degenerates to the normalized volume and the count matches it exactly.
pub fn skew_count_bound(b: &BoxKS, t: &[RatFunc], pivot: usize) -> Result<SkewBound> {
    let n = b.dims();
    let s = b.place_set();
    if pivot < 1 || pivot > n {
        return Err(Error::invalid("pivot must name an axis, 1-based"));
    }
    if t.len() != n {
        return Err(Error::invalid("scaling dimension mismatch"));
    }
    for (j, tj) in t.iter().enumerate().take(pivot - 1) {
        if tj.is_zero() {
            return Err(Error::ZeroInput);
        }
        for d in s.data() {
            if tj.valuation(d.place()).expect("nonzero scaling") < 0 {
                return Err(Error::invalid(format!(
                    "axis {} before the pivot must not expand at {}",
                    j + 1,
                    d.place()
                )));
            }
        }
    }
    let scaled = b.scaled(t)?;
    for member in scaled.members() {
        for axis in &member.axes()[pivot - 1..] {
            let degree: i64 = axis
                .floors()
                .iter()
                .zip(s.data())
                .map(|(&nv, d)| (nv + d.k()) * d.place().degree() as i64)
                .sum::<i64>()
                + if s.has_infinity() { 0 } else { -2 };
            if degree >= 0 {
                return Err(Error::invalid(
                    "axes from the pivot on must be past the expansion threshold",
                ));
            }
        }
    }
    let count = poisson_count(&scaled)?;
    let covol_recip = if s.has_infinity() {
        rat(1, 1)
    } else {
        rat_pow(s.q(), (n - pivot + 1) as i64)
    };
    let mut bound = rat(0, 1);
    for member in scaled.members() {
        let mut term = covol_recip.clone();
        for (j, axis) in member.axes().iter().enumerate() {
            if j < pivot - 1 {
                let points = axis
                    .floors()
                    .iter()
                    .zip(s.data())
                    .map(|(&nv, d)| (d.place().clone(), -nv))
                    .collect();
                let sections = Divisor::new(s.sample(), points)?;
                term *= rat_pow(s.q(), sections.h0_dim());
            } else {
                term *= axis.measure(s);
            }
        }
        bound += term;
    }
    assert!(count <= bound, "projection bound fell below the exact count");
    if pivot == 1 {
        assert_eq!(count, bound, "full expansion forces equality");
    }
    Ok(SkewBound { count, bound })
}

/// One-axis box tiling `K_S` under translation by `O_S`: the ball of floor
/// one at infinity (or at the first place when the window misses infinity)
/// and floor zero elsewhere. Its measure equals the lattice covolume.
pub fn standard_fundamental_domain(s: &PlaceSet) -> Result<BoxKS> {
    let idx = s
        .data()
        .iter()
        .position(|d| *d.place() == Place::Infinity)
        .unwrap_or(0);
    if s.data()[idx].place().degree() != 1 {
        return Err(Error::invalid(
            "the standard domain needs a degree-one place to carry the floor",
        ));
    }
    let mut floors = vec![0i64; s.len()];
    floors[idx] = 1;
    let domain = BoxKS::pure(s.clone(), vec![floors])?;
    if domain.volume() != s.lattice_covolume() {
        return Err(Error::invalid("fundamental domain volume mismatch"));
    }
    Ok(domain)
}

/// All truncated expansions `sum_{j=-level}^{level-1} a_j pi^j` at a place,
/// with digits running over residue representatives. These represent every
/// coset of `pi^level O_v` met by the ball `pi^{-level} O_v`.
fn truncated_reps(s: &PlaceSet, which: usize, level: i64) -> Result<Vec<RatFunc>> {
    let d = &s.data()[which];
    let degree = d.place().degree() as u32;
    let q = s.q();
    let digit_space = (q as u128).pow(degree);
    let count = digit_space.saturating_pow(2 * level as u32);
    if count > ENUM_BUDGET as u128 {
        return Err(Error::budget(format!(
            "coset enumeration needs {count} points at {}",
            d.place()
        )));
    }
    let uniformizer = match d.place() {
        Place::Finite(pi) => RatFunc::from_poly(pi.clone()),
        Place::Infinity => RatFunc::t_power(s.sample(), -1),
    };
    let mut powers = Vec::new();
    let mut acc = uniformizer.pow(-level)?;
    for _ in 0..2 * level {
        powers.push(acc.clone());
        acc = acc.mul(&uniformizer);
    }
    let mut out = Vec::with_capacity(count as usize);
    for idx in 0..count {
        let mut x = RatFunc::zero(s.sample());
        let mut rest = idx;
        for pw in &powers {
            let digit = (rest % digit_space) as u64;
            rest /= digit_space;
            if digit != 0 {
                x = x.add(&digit_poly(s.sample(), digit, degree).mul(pw));
            }
        }
        out.push(x);
    }
    Ok(out)
}

fn digit_poly(sample: &FqElem, mut digit: u64, degree: u32) -> RatFunc {
    let q = sample.order();
    let mut coeffs = Vec::with_capacity(degree as usize);
    for _ in 0..degree {
        coeffs.push(sample.from_index(digit % q));
        digit /= q;
    }
    RatFunc::from_poly(Poly::from_coeffs(sample, coeffs))
}

/// Verifies that the standard fundamental domain tiles `K_S` under `O_S`:
/// every point of `K_S`, represented to the given truncation level, lies in
/// exactly one lattice translate of the domain. Returns the number of
/// points checked.
///
/// Truncation is sound because domain membership only depends on residues
/// to depth `level >= ` every domain floor, and candidate translates with
/// `v(lambda) >= -level` on the window exhaust the possible hits.
pub fn tiling_check(s: &PlaceSet, level: i64) -> Result<u64> {
    let domain = standard_fundamental_domain(s)?;
    let floors = domain.members()[0].axes()[0].floors().to_vec();
    let deepest = *floors.iter().max().expect("nonempty window");
    if level < deepest {
        return Err(Error::invalid("truncation level shallower than the domain"));
    }
    let lattice_points = Divisor::new(
        s.sample(),
        s.data()
            .iter()
            .map(|d| (d.place().clone(), level))
            .collect(),
    )?
    .h0_elements()?;
    let per_place = (0..s.len())
        .map(|i| truncated_reps(s, i, level))
        .collect::<Result<Vec<_>>>()?;
    let total: u128 = per_place.iter().map(|v| v.len() as u128).product();
    if total > ENUM_BUDGET as u128 {
        return Err(Error::budget(format!("{total} cosets exceed the budget")));
    }
    let mut checked = 0u64;
    let mut indices = vec![0usize; s.len()];
    loop {
        let hits = lattice_points
            .iter()
            .filter(|lambda| {
                indices.iter().enumerate().all(|(vi, &ri)| {
                    per_place[vi][ri]
                        .sub(lambda)
                        .valuation_at_least(s.data()[vi].place(), floors[vi])
                })
            })
            .count();
        if hits != 1 {
            let point: Vec<String> = indices
                .iter()
                .enumerate()
                .map(|(vi, &ri)| format!("{}", per_place[vi][ri]))
                .collect();
            return Err(Error::invalid(format!(
                "tiling failure: ({}) lies in {hits} translates",
                point.join(", ")
            )));
        }
        checked += 1;
        // Odometer step over the per-place coset representatives.
        let mut vi = 0;
        loop {
            if vi == s.len() {
                return Ok(checked);
            }
            indices[vi] += 1;
            if indices[vi] < per_place[vi].len() {
                break;
            }
            indices[vi] = 0;
            vi += 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::FqCfg;
    use crate::geonum::boxes::{AxisBox, BoxMember};

    fn f3() -> crate::arith::FqCtx {
        FqCfg::prime(3).build().unwrap()
    }

    fn window(ctx: &crate::arith::FqCtx, with_infinity: bool) -> PlaceSet {
        let t = Place::finite(ctx.poly_from_ints(&[0, 1])).unwrap();
        let places = if with_infinity {
            vec![Place::Infinity, t]
        } else {
            vec![t]
        };
        PlaceSet::new(ctx.sample(), places).unwrap()
    }

    #[test]
    fn section_spaces_on_the_line() {
        let ctx = f3();
        // Polynomials of degree at most three: the divisor 3[inf].
        let d = Divisor::new(ctx.sample(), vec![(Place::Infinity, 3)]).unwrap();
        assert_eq!(d.degree(), 3);
        assert_eq!(d.h0_dim(), 4);
        assert_eq!(d.h0_elements().unwrap().len(), 81);
        // Poles at t of order two, a forced zero at t + 1, none at infinity:
        // degree 1, sections c (t + 1) / t^2 + c' (t + 1) t / t^2.
        let at_t = Place::finite(ctx.poly_from_ints(&[0, 1])).unwrap();
        let at_t1 = Place::finite(ctx.poly_from_ints(&[1, 1])).unwrap();
        let d = Divisor::new(
            ctx.sample(),
            vec![(at_t.clone(), 2), (at_t1.clone(), -1), (Place::Infinity, 0)],
        )
        .unwrap();
        assert_eq!(d.degree(), 1);
        let basis = d.h0_basis();
        assert_eq!(basis.len(), 2);
        for f in &basis {
            assert!(f.valuation_at_least(&at_t, -2));
            assert!(f.valuation_at_least(&at_t1, 1));
            assert!(f.valuation_at_least(&Place::Infinity, 0));
        }
        // Negative degree: only the zero section.
        let d = Divisor::new(ctx.sample(), vec![(Place::Infinity, -1)]).unwrap();
        assert_eq!(d.h0_dim(), 0);
        assert_eq!(d.h0_elements().unwrap().len(), 1);
        assert!(d.h0_elements().unwrap()[0].is_zero());
    }

    #[test]
    fn polynomial_count_in_expanding_balls() {
        // Over the window {inf}, the ball t^m O_inf holds the polynomials
        // of degree at most m: count 3^{m+1}, matching the volume.
        let ctx = f3();
        let s = PlaceSet::new(ctx.sample(), vec![Place::Infinity]).unwrap();
        for m in 0..=4i64 {
            let b = BoxKS::pure(s.clone(), vec![vec![-m]]).unwrap();
            let count = poisson_count(&b).unwrap();
            assert_eq!(count, rat_pow(3, m + 1));
            assert_eq!(lattice_points_direct(&b).unwrap(), count);
            let check = exact_count_check(&b).unwrap();
            assert!(check.threshold_met);
            assert_eq!(check.volume, count);
        }
        // Floor 1 still collapses (dual degree 1 - 2 < 0): the ball holds
        // exactly the zero polynomial and its volume is exactly 1.
        let b = BoxKS::pure(s.clone(), vec![vec![1]]).unwrap();
        assert!(expansion_threshold_met(&b));
        assert_eq!(poisson_count(&b).unwrap(), rat(1, 1));
    }

    #[test]
    fn sub_threshold_boxes_disagree_with_volume() {
        // pi^2 O at the window {inf}: volume 1/3, but the only lattice
        // point is 0. Poisson still counts exactly 1, through a nonzero
        // dual character sum over the constants.
        let ctx = f3();
        let s = PlaceSet::new(ctx.sample(), vec![Place::Infinity]).unwrap();
        let b = BoxKS::pure(s, vec![vec![2]]).unwrap();
        let check = exact_count_check(&b).unwrap();
        assert!(!check.threshold_met);
        assert_eq!(check.count, rat(1, 1));
        assert_eq!(check.volume, rat(1, 3));
        assert_eq!(lattice_points_direct(&b).unwrap(), rat(1, 1));
    }

    #[test]
    fn windows_without_infinity_use_the_covolume() {
        // Window {(t)}: O_S = F_3[1/t]. The ball t^{-m} O_t meets it in the
        // span of 1, 1/t, ..., 1/t^m once m >= 1: count 3^{m+1}.
        let ctx = f3();
        let s = window(&ctx, false);
        for m in 0..=4i64 {
            let b = BoxKS::pure(s.clone(), vec![vec![-m]]).unwrap();
            let count = poisson_count(&b).unwrap();
            assert_eq!(count, rat_pow(3, m + 1), "m = {m}");
            assert_eq!(lattice_points_direct(&b).unwrap(), count);
            assert!(expansion_threshold_met(&b));
            assert_eq!(b.lattice_volume(), count);
        }
        // Floor 2 is below threshold (dual degree 0): the raw volume is
        // 1/9 and the normalized volume 1/3, but Poisson still counts the
        // single lattice point 0 exactly.
        let b = BoxKS::pure(s, vec![vec![2]]).unwrap();
        assert!(!expansion_threshold_met(&b));
        assert_eq!(b.lattice_volume(), rat(1, 3));
        assert_eq!(poisson_count(&b).unwrap(), rat(1, 1));
        assert_eq!(lattice_points_direct(&b).unwrap(), rat(1, 1));
    }

    #[test]
    fn two_place_window_counts() {
        // Window {inf, (t)}: O_S = F_3[t, 1/t]. Powers t^j with -a <= j <= b
        // plus combinations fill the box pi_inf^{-b} O x pi_t^{-a} O.
        let ctx = f3();
        let s = window(&ctx, true);
        for a in 0..=2i64 {
            for b in 0..=2i64 {
                let bx = BoxKS::pure(s.clone(), vec![vec![-b, -a]]).unwrap();
                let count = poisson_count(&bx).unwrap();
                assert_eq!(
                    lattice_points_direct(&bx).unwrap(),
                    count,
                    "a = {a}, b = {b}"
                );
                // Laurent polynomials sum_{-a <= j <= b} c_j t^j. The dual
                // degree is -a - b - 2 < 0, so the threshold always holds.
                assert_eq!(count, rat_pow(3, a + b + 1));
                assert!(expansion_threshold_met(&bx));
            }
        }
    }

    #[test]
    fn shifted_and_union_boxes_count_exactly() {
        let ctx = f3();
        let s = PlaceSet::new(ctx.sample(), vec![Place::Infinity]).unwrap();
        // The tail of 1/(t+1) at infinity starts at order one, so the ball
        // 1/(t+1) + pi^2 O_inf asks a polynomial to match that tail to
        // depth two. None can: the count is 0, found spectrally by a
        // vanishing character sum (volume 1/3 times sum of cube roots).
        let c = RatFunc::new(ctx.poly_from_ints(&[1]), ctx.poly_from_ints(&[1, 1])).unwrap();
        let member = BoxMember::new(vec![AxisBox::new(vec![2], Some(c.clone()))]);
        let b = BoxKS::new(s.clone(), vec![member]).unwrap();
        assert!(!expansion_threshold_met(&b));
        assert_eq!(poisson_count(&b).unwrap(), rat(0, 1));
        assert_eq!(lattice_points_direct(&b).unwrap(), rat(0, 1));
        // A disjoint union: t + pi^{-1} O holds the nine t + (linear),
        // while t^2 + 1/(t+1) + pi O holds exactly t^2, whose difference
        // from the shift has infinity valuation 1.
        let t_shift = RatFunc::from_poly(ctx.poly_from_ints(&[0, 1]));
        let far = c.add(&RatFunc::from_poly(ctx.poly_from_ints(&[0, 0, 1])));
        let members = vec![
            BoxMember::new(vec![AxisBox::new(vec![-1], Some(t_shift))]),
            BoxMember::new(vec![AxisBox::new(vec![1], Some(far))]),
        ];
        let b = BoxKS::new(s, vec![members[0].clone(), members[1].clone()]).unwrap();
        assert_eq!(poisson_count(&b).unwrap(), rat(10, 1));
        assert_eq!(lattice_points_direct(&b).unwrap(), rat(10, 1));
    }

    #[test]
    fn two_axis_counts_factor() {
        let ctx = f3();
        let s = PlaceSet::new(ctx.sample(), vec![Place::Infinity]).unwrap();
        let b = BoxKS::pure(s, vec![vec![-1], vec![-2]]).unwrap();
        let count = poisson_count(&b).unwrap();
        assert_eq!(count, rat(9 * 27, 1));
        assert_eq!(lattice_points_direct(&b).unwrap(), count);
        let check = exact_count_check(&b).unwrap();
        assert!(check.threshold_met);
    }

    #[test]
    fn skew_bound_with_full_expansion_is_equality() {
        let ctx = f3();
        let s = PlaceSet::new(ctx.sample(), vec![Place::Infinity]).unwrap();
        let b = BoxKS::unit(s, 2).unwrap();
        let t2 = RatFunc::t_power(ctx.sample(), 2);
        let t3 = RatFunc::t_power(ctx.sample(), 3);
        let sk = skew_count_bound(&b, &[t2, t3], 1).unwrap();
        assert_eq!(sk.count, sk.bound);
        assert_eq!(sk.count, rat_pow(3, 3) * rat_pow(3, 4));
    }

    #[test]
    fn skew_bound_dominates_on_shrunk_axes() {
        let ctx = f3();
        let s = PlaceSet::new(ctx.sample(), vec![Place::Infinity]).unwrap();
        let b = BoxKS::unit(s, 2).unwrap();
        // First axis shrunk to t^{-2} O_inf: only the zero polynomial;
        // second expanded to t^3 O_inf: 81 polynomials of degree <= 3.
        let shrink = RatFunc::t_power(ctx.sample(), -2);
        let grow = RatFunc::t_power(ctx.sample(), 3);
        let sk = skew_count_bound(&b, &[shrink, grow], 2).unwrap();
        assert_eq!(sk.count, rat(81, 1));
        // Bound: q^{h0(-2[inf])} = 1 times the expanded axis volume 81.
        assert_eq!(sk.bound, rat(81, 1));
        // Shrinking less, to O_inf itself: h0 dim 1, bound 3 * 81, count
        // 3 * 81 as well (constants times cubics), still tight.
        let sk = skew_count_bound(
            &b,
            &[RatFunc::one(ctx.sample()), RatFunc::t_power(ctx.sample(), 3)],
            2,
        )
        .unwrap();
        assert_eq!(sk.count, rat(3 * 81, 1));
        assert_eq!(sk.bound, rat(3 * 81, 1));
    }

    #[test]
    fn skew_bound_validates_the_regime() {
        let ctx = f3();
        let s = PlaceSet::new(ctx.sample(), vec![Place::Infinity]).unwrap();
        let b = BoxKS::unit(s, 2).unwrap();
        // Expanding before the pivot is rejected.
        let grow = RatFunc::t_power(ctx.sample(), 3);
        assert!(skew_count_bound(&b, &[grow.clone(), grow.clone()], 2).is_err());
        // Shrinking past the pivot far enough to cross back under the
        // threshold is rejected.
        let one = RatFunc::one(ctx.sample());
        let shrink = RatFunc::t_power(ctx.sample(), -2);
        assert!(skew_count_bound(&b, &[one, shrink], 2).is_err());
    }

    #[test]
    fn fundamental_domains_tile() {
        let ctx = f3();
        // Window {inf}: the tail ball pi_inf O_inf, covolume 1.
        let s = PlaceSet::new(ctx.sample(), vec![Place::Infinity]).unwrap();
        let d = standard_fundamental_domain(&s).unwrap();
        assert_eq!(d.volume(), rat(1, 1));
        assert_eq!(tiling_check(&s, 2).unwrap(), 81);
        // Window {inf, (t)}: covolume still 1.
        let s = window(&ctx, true);
        assert_eq!(
            standard_fundamental_domain(&s).unwrap().volume(),
            rat(1, 1)
        );
        assert_eq!(tiling_check(&s, 1).unwrap(), 81);
        // Window {(t)} alone: covolume 1/3, the domain is pi_t O_t.
        let s = window(&ctx, false);
        assert_eq!(
            standard_fundamental_domain(&s).unwrap().volume(),
            rat(1, 3)
        );
        assert_eq!(tiling_check(&s, 1).unwrap(), 9);
    }

    #[test]
    fn tiling_rejects_degree_two_anchors() {
        let ctx = f3();
        let quad = Place::finite(ctx.poly_from_ints(&[1, 0, 1])).unwrap();
        let s = PlaceSet::new(ctx.sample(), vec![quad]).unwrap();
        assert!(standard_fundamental_domain(&s).is_err());
    }
}
