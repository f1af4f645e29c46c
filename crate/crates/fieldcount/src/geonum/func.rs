//! Exact rational functions on the projective line, with local residues and
//! the residue-based additive characters of its places.
//!
//! Elements of `F_q(t)` are kept in lowest terms with a monic denominator, so
//! equality of representations is equality of values. The additive character
//! at a place `v` is `x -> zeta_p^{Tr(Res_v(x dt))}`, where the residue is
//! taken of the differential `x dt` and the trace runs from the residue field
//! `k(v)` down to the prime field. With the measure normalization
//! `meas(O_v) = q_v^{-k_v/2}` (where `k_v` is the exponent of the divisor of
//! `dt`), this character matches the measure: it is trivial on
//! `pi_v^{-k_v} O_v` and on no larger ball, which makes `pi_v^{-k_v} O_v`
//! the annihilator of `O_v` in the transform law of [`super::boxes`].

use crate::arith::{CycQ, Field, FqElem, Place, Poly, PolyFq};
use crate::{Error, Result};

/// Rational function `num/den` over `F_q`, in lowest terms, monic `den`.
#[derive(Clone, PartialEq, Eq)]
pub struct RatFunc {
    num: PolyFq,
    den: PolyFq,
}

impl std::fmt::Debug for RatFunc {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{self}")
    }
}

impl std::fmt::Display for RatFunc {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

impl RatFunc {
    /// Builds `num/den`, reducing to lowest terms and scaling the
    /// denominator monic.
    pub fn new(num: PolyFq, den: PolyFq) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::invalid("zero denominator"));
        }
        let one = Poly::constant(&den.sample().one());
        if num.is_zero() {
            return Ok(RatFunc { num, den: one });
        }
        let g = num.gcd(&den).monic();
        let (num, den) = (num.div_exact(&g), den.div_exact(&g));
        let lead_inv = den
            .leading()
            .expect("nonzero denominator")
            .inv()
            .expect("field leading coefficient");
        Ok(RatFunc {
            num: num.scale(&lead_inv),
            den: den.scale(&lead_inv),
        })
    }

    pub fn from_poly(p: PolyFq) -> Self {
        let one = Poly::constant(&p.sample().one());
        RatFunc { num: p, den: one }
    }

    pub fn zero(sample: &FqElem) -> Self {
        RatFunc::from_poly(Poly::zero(sample))
    }

    pub fn one(sample: &FqElem) -> Self {
        RatFunc::from_poly(Poly::constant(&sample.one()))
    }

    pub fn constant(c: &FqElem) -> Self {
        RatFunc::from_poly(Poly::constant(c))
    }

    /// The monomial `t^k`, with negative `k` allowed.
    pub fn t_power(sample: &FqElem, k: i64) -> Self {
        let one = sample.one();
        if k >= 0 {
            RatFunc::from_poly(Poly::monomial(&one, k as usize))
        } else {
            RatFunc {
                num: Poly::constant(&one),
                den: Poly::monomial(&one, (-k) as usize),
            }
        }
    }

    pub fn num(&self) -> &PolyFq {
        &self.num
    }

    pub fn den(&self) -> &PolyFq {
        &self.den
    }

    pub fn sample(&self) -> &FqElem {
        self.den.sample()
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn add(&self, other: &Self) -> Self {
        let num = self
            .num
            .mul(&other.den)
            .add(&other.num.mul(&self.den));
        RatFunc::new(num, self.den.mul(&other.den)).expect("nonzero denominator product")
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        RatFunc {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        RatFunc::new(self.num.mul(&other.num), self.den.mul(&other.den))
            .expect("nonzero denominator product")
    }

    pub fn scale(&self, c: &FqElem) -> Self {
        if c.is_zero() {
            return RatFunc::zero(self.sample());
        }
        RatFunc {
            num: self.num.scale(c),
            den: self.den.clone(),
        }
    }

    /// Integer power, with negative exponents of nonzero functions allowed.
    pub fn pow(&self, e: i64) -> Result<Self> {
        let step = if e >= 0 {
            self.clone()
        } else {
            if self.is_zero() {
                return Err(Error::ZeroInput);
            }
            RatFunc::new(self.den.clone(), self.num.clone())?
        };
        let mut acc = RatFunc::one(self.sample());
        for _ in 0..e.unsigned_abs() {
            acc = acc.mul(&step);
        }
        Ok(acc)
    }

    /// Sort and dedup key; distinct keys represent distinct values.
    pub fn key(&self) -> ((usize, u128), (usize, u128)) {
        (self.num.index_key(), self.den.index_key())
    }

    /// Valuation at a place, `None` for the zero function.
    pub fn valuation(&self, place: &Place) -> Option<i64> {
        if self.is_zero() {
            return None;
        }
        Some(
            place
                .valuation(&self.num, &self.den)
                .expect("nonzero function"),
        )
    }

    /// Whether `v(self) >= floor` at the place; the zero function passes.
    pub fn valuation_at_least(&self, place: &Place, floor: i64) -> bool {
        self.valuation(place).map_or(true, |v| v >= floor)
    }

    /// Value in `0..p` of the absolute trace of `Res_v(self * dt)`.
    pub fn residue_trace(&self, place: &Place) -> u64 {
        if self.is_zero() {
            return 0;
        }
        match place {
            Place::Finite(pi) => self.residue_trace_finite(pi),
            Place::Infinity => self.residue_trace_infinity(),
        }
    }

    /// Additive character `zeta_p^{Tr(Res_v(self * dt))}` of the place.
    pub fn character(&self, place: &Place) -> CycQ {
        let p = self.sample().characteristic();
        CycQ::zeta_pow(p, self.residue_trace(place) as i64)
    }

    /// Sum over every place of the traced residue of `self * dt`, in `F_p`.
    /// Only poles of the function and the infinite place can contribute.
    pub fn residue_trace_total(&self) -> Result<u64> {
        if self.is_zero() {
            return Ok(0);
        }
        let p = self.sample().characteristic();
        let mut total = self.residue_trace_infinity();
        for (pi, _) in &crate::arith::factor::factor(&self.den)?.factors {
            total = (total + self.residue_trace_finite(pi)) % p;
        }
        Ok(total % p)
    }

    /// Residue at a finite place via the base-`pi` digit expansion of
    /// `self / pi'`, where `pi'` is the derivative of the uniformizer. The
    /// differential `d(pi)` equals `pi' dt`, so that quotient converts the
    /// residue of `self * dt` into a plain series coefficient.
    fn residue_trace_finite(&self, pi: &PolyFq) -> u64 {
        let (n0, vn) = strip_factor(&self.num, pi);
        let (d0, vd) = strip_factor(&self.den, pi);
        let w = vn - vd;
        if w >= 0 {
            return 0;
        }
        let m = (-w) as u32;
        let modulus = pi.pow(m);
        // pi is separable, so pi' is a unit at pi and d0 * pi' is invertible
        // modulo pi^m.
        let denom = d0.mul(&pi.derivative()).rem(&modulus);
        let series = mul_with_inverse(&n0.rem(&modulus), &denom, &modulus);
        let digit = top_digit(series, pi, m as usize);
        let ctx = crate::arith::ExtCtx::new(pi.clone()).expect("places are irreducible");
        crate::arith::Ext::from_poly(&ctx, &digit)
            .trace_to_base()
            .trace_to_prime()
    }

    /// Residue at infinity: with `u = 1/t` the differential is
    /// `dt = -u^{-2} du`, so `Res_inf(self * dt)` is minus the coefficient
    /// of `u^1` in the `u`-expansion of `self(1/u)`.
    fn residue_trace_infinity(&self) -> u64 {
        let w = self.den.degree_or_neg() - self.num.degree_or_neg();
        let idx = 1 - w;
        if idx < 0 {
            return 0;
        }
        let prec = (idx + 1) as usize;
        let upow = Poly::monomial(&self.sample().one(), prec);
        // Reversal sends f(t) of exact degree d to u^d f(1/u); the reversed
        // monic denominator has unit constant term, so it is invertible in
        // the u-adic series ring.
        let arev = reversed(&self.num).rem(&upow);
        let brev = reversed(&self.den);
        let series = mul_with_inverse(&arev, &brev, &upow);
        series.coeff(idx as usize).neg().trace_to_prime()
    }
}

/// Divides out the highest power of `pi`, returning the cofactor and the
/// exponent removed.
fn strip_factor(f: &PolyFq, pi: &PolyFq) -> (PolyFq, i64) {
    let mut rest = f.clone();
    let mut v = 0i64;
    loop {
        let (quo, rem) = rest.divmod(pi);
        if !rem.is_zero() {
            return (rest, v);
        }
        rest = quo;
        v += 1;
    }
}

/// `a * b^{-1} mod m` for `b` coprime to `m`.
fn mul_with_inverse(a: &PolyFq, b: &PolyFq, m: &PolyFq) -> PolyFq {
    let (g, u, _) = b.xgcd(m);
    debug_assert_eq!(g.degree(), Some(0), "inverse requires coprime inputs");
    let ginv = g.coeff(0).inv().expect("nonzero constant gcd");
    let inv = u.scale(&ginv).rem(m);
    a.mul(&inv).rem(m)
}

/// Digit at position `m - 1` in the base-`pi` expansion of `r`, for
/// `deg r < m * deg pi`.
fn top_digit(mut r: PolyFq, pi: &PolyFq, m: usize) -> PolyFq {
    for _ in 0..m.saturating_sub(1) {
        let (quo, _) = r.divmod(pi);
        r = quo;
    }
    r.rem(pi)
}

/// Coefficient reversal `f(t) -> u^{deg f} f(1/u)` as a polynomial in `u`.
fn reversed(f: &PolyFq) -> PolyFq {
    let coeffs: Vec<FqElem> = f.coeffs().iter().rev().cloned().collect();
    Poly::from_coeffs(f.sample(), coeffs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{rat, FqCfg};
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn f3() -> crate::arith::FqCtx {
        FqCfg::prime(3).build().unwrap()
    }

    fn rf(ctx: &crate::arith::FqCtx, num: &[i64], den: &[i64]) -> RatFunc {
        RatFunc::new(ctx.poly_from_ints(num), ctx.poly_from_ints(den)).unwrap()
    }

    #[test]
    fn lowest_terms_and_monic_denominator() {
        let ctx = f3();
        // (2t^2 + 2t) / (2t) = t + 1.
        let x = rf(&ctx, &[0, 2, 2], &[0, 2]);
        assert!(x.den().is_one());
        assert_eq!(x.num(), &ctx.poly_from_ints(&[1, 1]));
        // Denominator t + 2 scaled monic from 2t + 4 = 2t + 1.
        let y = rf(&ctx, &[1], &[1, 2]);
        assert!(y.den().is_monic());
    }

    #[test]
    fn field_operations_compose() {
        let ctx = f3();
        let a = rf(&ctx, &[1], &[0, 1]); // 1/t
        let b = rf(&ctx, &[0, 1], &[1]); // t
        assert!(a.mul(&b).sub(&RatFunc::one(ctx.sample())).is_zero());
        let s = a.add(&b); // (1 + t^2)/t
        assert_eq!(s, rf(&ctx, &[1, 0, 1], &[0, 1]));
        assert_eq!(RatFunc::t_power(ctx.sample(), -2), rf(&ctx, &[1], &[0, 0, 1]));
    }

    #[test]
    fn valuations_match_places() {
        let ctx = f3();
        let x = rf(&ctx, &[0, 1], &[1, 1]); // t/(t+1)
        let at_t = Place::finite(ctx.poly_from_ints(&[0, 1])).unwrap();
        let at_t1 = Place::finite(ctx.poly_from_ints(&[1, 1])).unwrap();
        assert_eq!(x.valuation(&at_t), Some(1));
        assert_eq!(x.valuation(&at_t1), Some(-1));
        assert_eq!(x.valuation(&Place::Infinity), Some(0));
        assert_eq!(RatFunc::zero(ctx.sample()).valuation(&Place::Infinity), None);
        assert!(RatFunc::zero(ctx.sample()).valuation_at_least(&at_t, 100));
    }

    #[test]
    fn simple_pole_residues() {
        let ctx = f3();
        let at_t = Place::finite(ctx.poly_from_ints(&[0, 1])).unwrap();
        // Res_t((1/t) dt) = 1.
        assert_eq!(rf(&ctx, &[1], &[0, 1]).residue_trace(&at_t), 1);
        // Res_t((2/t) dt) = 2.
        assert_eq!(rf(&ctx, &[2], &[0, 1]).residue_trace(&at_t), 2);
        // Res_inf((c/t) dt) = -c.
        assert_eq!(rf(&ctx, &[1], &[0, 1]).residue_trace(&Place::Infinity), 2);
        // dt itself is regular away from infinity and has no residue there.
        assert_eq!(RatFunc::one(ctx.sample()).residue_trace(&Place::Infinity), 0);
        // Res_inf(t^2 dt) = 0.
        assert_eq!(rf(&ctx, &[0, 0, 1], &[1]).residue_trace(&Place::Infinity), 0);
    }

    #[test]
    fn partial_fraction_residues_cancel() {
        let ctx = f3();
        // 1/(t(t+1)) = 1/t - 1/(t+1).
        let x = rf(&ctx, &[1], &[0, 1, 1]);
        let at_t = Place::finite(ctx.poly_from_ints(&[0, 1])).unwrap();
        let at_t1 = Place::finite(ctx.poly_from_ints(&[1, 1])).unwrap();
        assert_eq!(x.residue_trace(&at_t), 1);
        assert_eq!(x.residue_trace(&at_t1), 2);
        assert_eq!(x.residue_trace(&Place::Infinity), 0);
        assert_eq!(x.residue_trace_total().unwrap(), 0);
    }

    #[test]
    fn higher_order_pole_residue() {
        let ctx = f3();
        // (1 + t)/t^2 = t^{-2} + t^{-1}: residue at t is 1.
        let x = rf(&ctx, &[1, 1], &[0, 0, 1]);
        let at_t = Place::finite(ctx.poly_from_ints(&[0, 1])).unwrap();
        assert_eq!(x.residue_trace(&at_t), 1);
        // Pure double pole has no residue anywhere: 1/t^2 is u^2 at
        // infinity, clear of the u^1 coefficient.
        let y = rf(&ctx, &[1], &[0, 0, 1]);
        assert_eq!(y.residue_trace(&at_t), 0);
        assert_eq!(y.residue_trace(&Place::Infinity), 0);
        assert_eq!(y.residue_trace_total().unwrap(), 0);
    }

    #[test]
    fn residue_at_a_quadratic_place() {
        let ctx = f3();
        let pi = ctx.poly_from_ints(&[1, 0, 1]); // t^2 + 1
        let place = Place::finite(pi.clone()).unwrap();
        // Res((1/pi) dt) in k(pi) is 1/pi'(theta) = 1/(2 theta); its trace to
        // F_3 is Tr(2^{-1} theta^{-1}) = Tr(2 * 2 theta) = Tr(theta) = 0.
        let x = RatFunc::new(ctx.poly_from_ints(&[1]), pi.clone()).unwrap();
        assert_eq!(x.residue_trace(&place), 0);
        assert_eq!(x.residue_trace_total().unwrap(), 0);
        // t/pi has residue theta/(2 theta) = 2, trace 2 * 2 = 4 = 1.
        let y = RatFunc::new(ctx.poly_from_ints(&[0, 1]), pi).unwrap();
        assert_eq!(y.residue_trace(&place), 1);
        // The infinity residue balances it: v_inf = 1, so it can be nonzero.
        assert_eq!(y.residue_trace(&Place::Infinity), 2);
        assert_eq!(y.residue_trace_total().unwrap(), 0);
    }

    #[test]
    fn residue_theorem_on_random_functions() {
        // The traced residues of f dt over all places sum to zero.
        let mut rng = ChaCha8Rng::seed_from_u64(40);
        for cfg in [FqCfg::prime(3), FqCfg::prime(5), FqCfg::new(3, 2)] {
            let ctx = cfg.build().unwrap();
            for _ in 0..100 {
                let f = random_ratfunc(&ctx, &mut rng);
                assert_eq!(f.residue_trace_total().unwrap(), 0, "f = {f}");
            }
        }
    }

    #[test]
    fn characters_are_additive() {
        let ctx = f3();
        let mut rng = ChaCha8Rng::seed_from_u64(41);
        let places = [
            Place::Infinity,
            Place::finite(ctx.poly_from_ints(&[0, 1])).unwrap(),
            Place::finite(ctx.poly_from_ints(&[1, 0, 1])).unwrap(),
        ];
        for _ in 0..50 {
            let x = random_ratfunc(&ctx, &mut rng);
            let y = random_ratfunc(&ctx, &mut rng);
            for place in &places {
                let lhs = x.add(&y).character(place);
                let rhs = x.character(place).mul(&y.character(place));
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn character_conductor_is_the_dt_exponent() {
        // The character at v is trivial on pi^{-k_v} O_v and nontrivial on
        // pi^{-k_v - 1} O_v, so the annihilator of pi^n O_v is exactly
        // pi^{-n - k_v} O_v.
        let ctx = f3();
        let checks = [
            (Place::Infinity, RatFunc::t_power(ctx.sample(), -1)),
            (
                Place::finite(ctx.poly_from_ints(&[0, 1])).unwrap(),
                RatFunc::from_poly(ctx.poly_from_ints(&[0, 1])),
            ),
            (
                Place::finite(ctx.poly_from_ints(&[1, 0, 1])).unwrap(),
                RatFunc::from_poly(ctx.poly_from_ints(&[1, 0, 1])),
            ),
        ];
        for (place, pi) in checks {
            let c = -place.dt_exponent();
            let one = CycQ::from_rat(3, rat(1, 1));
            let reps = residue_reps(&ctx, place.degree());
            // Spanning elements of pi^c O_v modulo pi^{c+3} O_v.
            let mut trivial = true;
            let mut boundary_trivial = true;
            for r in &reps {
                for j in 0..3i64 {
                    let z = r.mul(&power(&pi, c + j));
                    if z.character(&place) != one {
                        trivial = false;
                    }
                }
                let z = r.mul(&power(&pi, c - 1));
                if z.character(&place) != one {
                    boundary_trivial = false;
                }
            }
            assert!(trivial, "character must vanish on pi^(-k) O at {place}");
            assert!(
                !boundary_trivial,
                "character must be nontrivial on pi^(-k-1) O at {place}"
            );
        }
    }

    fn residue_reps(ctx: &crate::arith::FqCtx, degree: usize) -> Vec<RatFunc> {
        // Nonzero polynomials of degree < degree, one per nonzero residue.
        let q = ctx.order() as usize;
        let mut out = Vec::new();
        for idx in 1..q.pow(degree as u32) {
            let mut digits = Vec::new();
            let mut rest = idx;
            for _ in 0..degree {
                digits.push((rest % q) as i64);
                rest /= q;
            }
            out.push(RatFunc::from_poly(ctx.poly_from_ints(&digits)));
        }
        out
    }

    fn power(x: &RatFunc, e: i64) -> RatFunc {
        let step = if e >= 0 {
            x.clone()
        } else {
            RatFunc::new(x.den().clone(), x.num().clone()).unwrap()
        };
        let mut acc = RatFunc::one(x.sample());
        for _ in 0..e.unsigned_abs() {
            acc = acc.mul(&step);
        }
        acc
    }

    fn random_ratfunc(ctx: &crate::arith::FqCtx, rng: &mut ChaCha8Rng) -> RatFunc {
        loop {
            let nd = rng.gen_range(0..=4usize);
            let dd = rng.gen_range(0..=4usize);
            let num: Vec<i64> = (0..=nd).map(|_| rng.gen_range(0..9)).collect();
            let den: Vec<i64> = (0..=dd).map(|_| rng.gen_range(0..9)).collect();
            let num = ctx.poly_from_ints(&num);
            let den = ctx.poly_from_ints(&den);
            if den.is_zero() {
                continue;
            }
            return RatFunc::new(num, den).unwrap();
        }
    }
}
