//! Certified density predictions as exact rational brackets.
//!
//! The predicted count of degree-`n` extensions with discriminant norm up
//! to `X` grows like a constant times `X`, and the constant is an Euler
//! product: a leading zeta residue, one mass factor per place in a chosen
//! finite exclusion set `S`, and one local factor per remaining place. The
//! infinite product cannot be evaluated exactly, so [`predicted_density`]
//! multiplies the finitely many factors up to a truncation bound exactly
//! and encloses everything beyond it in a certified tail interval. All
//! arithmetic is exact rational arithmetic; the only approximation in the
//! result is the explicitly stated tail bound.
//!
//! Base fields are the rationals (primes as finite places, one real place)
//! and rational function fields `F_q(t)` (closed points of the projective
//! line as places, no archimedean places, `log q` cancelling between the
//! zeta residue and the counting normalization so the constant is exactly
//! rational).

use std::collections::{HashMap, HashSet};

use num_bigint::BigInt;
use num_rational::Ratio;
use num_traits::{One, Signed, Zero};
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::arith::places::count_monic_irreducible;
use crate::arith::rational::{geometric_tail, rat, rat_pow, Rat, RationalInterval};
use crate::mass::partitions::{euler_factor, local_mass_arch, ArchKind, EulerFactorPoly};
use crate::mass::tame::{residue_characteristic, tame_local_mass_oracle, tame_unweighted_mass};
use crate::par::{map_collect, ExecMode};
use crate::{Error, Result};

/// Largest allowed place-norm bound `q^depth` for a function-field
/// truncation. Beyond this the exact product has millions of digits and
/// stops being useful.
const FF_PLACE_BUDGET: u64 = 1_000_000;

/// Largest allowed prime bound for a truncation over the rationals. The
/// bound keeps the exact product small enough that the final reduction
/// (and hence `width()` on the result) stays cheap.
const NF_PRIME_BUDGET: u64 = 100_000;

/// Products whose parts stay below this bit size are reduced on the way
/// out; larger ones are returned unreduced (see [`BigFraction`]).
const REDUCE_BIT_LIMIT: u64 = 1 << 20;

/// Base field of a counting problem.
#[derive(Debug, Clone)]
pub enum FieldDescriptor {
    /// The rational numbers.
    Rationals,
    /// The rational function field `F_q(t)`, `q` a prime power.
    RationalFunctionField { q: u64 },
    /// A number field described by its archimedean signature together with
    /// a caller-supplied bracket for the residue of its zeta function at
    /// `s = 1`. Only the signature of the rationals (one real place, no
    /// complex places) is wired up; the variant exists so a caller can
    /// drive the same assembly with an independently computed residue.
    NumberFieldInput {
        real_places: u32,
        complex_places: u32,
        zeta_residue: RationalInterval,
    },
}

/// A place of the base field.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PlaceRef {
    /// The archimedean place of the rationals.
    RealPlace,
    /// A finite prime of the rationals.
    RationalPrime(u64),
    /// The degree-one place at infinity of `F_q(t)`.
    FfInfinity,
    /// A finite place of `F_q(t)`: the `index`-th monic irreducible of the
    /// stated degree, in an arbitrary but fixed labelling. Distinct indices
    /// are distinct places; the labelling never affects any mass.
    FfFinite { degree: u32, index: u64 },
}

impl std::fmt::Display for PlaceRef {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            PlaceRef::RealPlace => write!(f, "real place"),
            PlaceRef::RationalPrime(p) => write!(f, "prime {p}"),
            PlaceRef::FfInfinity => write!(f, "place at infinity"),
            PlaceRef::FfFinite { degree, index } => {
                write!(f, "degree-{degree} place #{index}")
            }
        }
    }
}

/// One isomorphism class admitted at a place with an explicit local
/// condition: its discriminant valuation, automorphism order, and how many
/// classes with those invariants are admitted.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ExplicitClass {
    pub disc_valuation: u32,
    pub aut_order: u64,
    pub multiplicity: u64,
}

/// How the local mass at one place is computed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LocalSpecMode {
    /// All local algebras of the given degree. Nonarchimedean places must
    /// be tame (residue characteristic exceeding the degree) for this to
    /// be computable by enumeration; wild places are rejected rather than
    /// silently approximated.
    Full,
    /// The tame-regime unweighted mass, which is the partition number of
    /// the degree independently of the residue field. Valid verbatim at
    /// tame places; at wild places it is the documented stand-in for the
    /// full mass, restricting the count to tamely behaved algebras.
    TameEnumerated,
    /// A caller-chosen list of admitted classes.
    ExplicitList(Vec<ExplicitClass>),
}

/// A local condition at one place: whether the place belongs to the
/// exclusion set `S` (counted extensions are unrestricted there, and the
/// place contributes an unweighted mass factor) or not (the place keeps
/// its discriminant-weighted factor in the Euler product).
#[derive(Debug, Clone)]
pub struct LocalSpec {
    pub place: PlaceRef,
    pub in_s: bool,
    pub mode: LocalSpecMode,
}

/// The residue at `s = 1` of the zeta function of `F_q(t)`, stored as its
/// rational part; the true residue is `rational_part / log q`, and the
/// `log q` always cancels against the counting normalization, so it is
/// never materialized.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FfZetaResidue {
    pub rational_part: Rat,
}

/// Residue data for `F_q(t)`: the zeta function is
/// `1 / ((1 - q^{-s})(1 - q^{1-s}))`, with residue `q / ((q-1) log q)`
/// at `s = 1`.
pub fn ff_zeta_residue(q: u64) -> Result<FfZetaResidue> {
    residue_characteristic(q)
        .ok_or_else(|| Error::invalid("base field size must be a prime power"))?;
    Ok(FfZetaResidue {
        rational_part: Rat::new(BigInt::from(q), BigInt::from(q - 1)),
    })
}

/// A certified density bracket.
#[derive(Debug, Clone)]
pub struct DensityPrediction {
    /// Degree of the extensions being counted.
    pub degree: u32,
    /// Truncation parameter: maximal place degree over a function field,
    /// prime bound over the rationals.
    pub truncation: u64,
    /// Two-sided enclosure of the density constant: the exactly evaluated
    /// truncated product times the certified tail interval. For deep
    /// function-field truncations the endpoints are stored unreduced
    /// (comparisons and containment stay cheap; `width()` does not).
    pub interval: RationalInterval,
    /// The tail mass `t` with the product beyond the truncation certified
    /// to lie in `[1 - t, 1/(1 - t)]`.
    pub tail_bound: Rat,
    /// Fully closed form, available over a function field in degrees 2
    /// and 3 when every finite place outside `S` keeps its default factor.
    pub exact_closed_form: Option<Rat>,
}

impl Serialize for DensityPrediction {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("DensityPrediction", 5)?;
        s.serialize_field("degree", &self.degree)?;
        s.serialize_field("truncation", &self.truncation)?;
        s.serialize_field("interval", &self.interval)?;
        s.serialize_field("tail_bound", &self.tail_bound.to_string())?;
        s.serialize_field(
            "exact_closed_form",
            &self.exact_closed_form.as_ref().map(|r| r.to_string()),
        )?;
        s.end()
    }
}

/// Running product held as an explicit numerator and denominator. The
/// parts are deliberately never reduced while folding: deep truncations
/// make them large enough that gcd passes would dominate the whole
/// computation, while multiplication is cheap. Comparisons on `Rat` are
/// value-based, so an unreduced final value still behaves correctly.
#[derive(Debug, Clone)]
struct BigFraction {
    num: BigInt,
    den: BigInt,
}

impl BigFraction {
    fn one() -> Self {
        BigFraction {
            num: BigInt::one(),
            den: BigInt::one(),
        }
    }

    fn mul_rat(&mut self, r: &Rat) {
        self.num *= r.numer();
        self.den *= r.denom();
    }

    /// `self * k` as a `Rat`, reducing only when the parts are small
    /// enough for the gcd to be cheap. Both parts are positive products,
    /// which `Ratio::new_raw` requires for consistent ordering.
    fn scaled(&self, k: &Rat) -> Rat {
        let num = &self.num * k.numer();
        let den = &self.den * k.denom();
        assert!(den.is_positive(), "denominator stays positive");
        assert!(!num.is_negative(), "all factors are nonnegative");
        if num.bits().max(den.bits()) <= REDUCE_BIT_LIMIT {
            Rat::new(num, den)
        } else {
            Ratio::new_raw(num, den)
        }
    }
}

/// `sum multiplicity / aut` over an explicit class list.
fn explicit_unweighted(classes: &[ExplicitClass]) -> Result<Rat> {
    let mut total = Rat::zero();
    for c in classes {
        if c.aut_order == 0 {
            return Err(Error::invalid(
                "explicit class needs a positive automorphism order",
            ));
        }
        total += Rat::new(BigInt::from(c.multiplicity), BigInt::from(c.aut_order));
    }
    Ok(total)
}

/// `sum multiplicity * np^{-disc} / aut` over an explicit class list, with
/// `np = base^deg` kept in exponent form to avoid overflow.
fn explicit_weighted(classes: &[ExplicitClass], base: u64, deg: u32) -> Result<Rat> {
    let mut total = Rat::zero();
    for c in classes {
        if c.aut_order == 0 {
            return Err(Error::invalid(
                "explicit class needs a positive automorphism order",
            ));
        }
        let weight = rat_pow(base, -((deg as i64) * (c.disc_valuation as i64)));
        total += Rat::new(BigInt::from(c.multiplicity), BigInt::from(c.aut_order)) * weight;
    }
    Ok(total)
}

/// Unweighted mass of one nonarchimedean place inside `S`, with residue
/// field `base^deg`.
fn s_place_mass(n: u32, base: u64, deg: u32, mode: &LocalSpecMode) -> Result<Rat> {
    match mode {
        LocalSpecMode::Full => {
            let q0 = checked_norm(base, deg)?;
            Ok(tame_local_mass_oracle(n, q0)?.unweighted)
        }
        LocalSpecMode::TameEnumerated => tame_unweighted_mass(n),
        LocalSpecMode::ExplicitList(classes) => explicit_unweighted(classes),
    }
}

/// Euler-product factor of one nonarchimedean place outside `S`, with
/// residue field `base^deg`: the discriminant-weighted local mass times
/// the `(1 - np^{-1})` normalization.
fn finite_place_factor(
    n: u32,
    base: u64,
    deg: u32,
    mode: &LocalSpecMode,
    euler: &EulerFactorPoly,
) -> Result<Rat> {
    let one_minus_inv = Rat::one() - rat_pow(base, -(deg as i64));
    match mode {
        LocalSpecMode::Full => Ok(euler.eval(&rat_pow(base, -(deg as i64)))),
        LocalSpecMode::TameEnumerated => {
            let q0 = checked_norm(base, deg)?;
            Ok(one_minus_inv * tame_local_mass_oracle(n, q0)?.disc_weighted)
        }
        LocalSpecMode::ExplicitList(classes) => {
            Ok(one_minus_inv * explicit_weighted(classes, base, deg)?)
        }
    }
}

fn checked_norm(base: u64, deg: u32) -> Result<u64> {
    base.checked_pow(deg)
        .ok_or_else(|| Error::budget("residue field too large to enumerate"))
}

/// Predicts the density of degree-`n` extensions of the base field ordered
/// by discriminant norm, with local conditions `specs`, as a certified
/// rational bracket. Over a function field `truncation` bounds the place
/// degree of the exactly evaluated factors; over the rationals it bounds
/// the primes. Factors beyond it are enclosed by a tail interval.
pub fn predicted_density(
    n: u32,
    field: &FieldDescriptor,
    specs: &[LocalSpec],
    truncation: u64,
    mode: ExecMode,
) -> Result<DensityPrediction> {
    let euler = euler_factor(n)?;
    match field {
        FieldDescriptor::RationalFunctionField { q } => {
            ff_density(n, *q, specs, truncation, mode, &euler)
        }
        FieldDescriptor::Rationals => {
            let residue = RationalInterval::point(Rat::one());
            nf_density(n, &residue, specs, truncation, mode, &euler)
        }
        FieldDescriptor::NumberFieldInput {
            real_places,
            complex_places,
            zeta_residue,
        } => {
            if *real_places != 1 || *complex_places != 0 {
                return Err(Error::invalid(
                    "only the signature of the rationals (one real place) is wired up",
                ));
            }
            if !zeta_residue.lo().is_positive() {
                return Err(Error::invalid("zeta residue bracket must be positive"));
            }
            nf_density(n, zeta_residue, specs, truncation, mode, &euler)
        }
    }
}

fn ff_density(
    n: u32,
    q: u64,
    specs: &[LocalSpec],
    truncation: u64,
    mode: ExecMode,
    euler: &EulerFactorPoly,
) -> Result<DensityPrediction> {
    residue_characteristic(q)
        .ok_or_else(|| Error::invalid("base field size must be a prime power"))?;
    if truncation == 0 {
        return Err(Error::invalid("truncation depth must be at least 1"));
    }
    let depth = u32::try_from(truncation)
        .ok()
        .filter(|&d| q.checked_pow(d).is_some_and(|v| v <= FF_PLACE_BUDGET))
        .ok_or_else(|| Error::budget("truncation depth exceeds the certified-product budget"))?;

    let mut seen: HashSet<PlaceRef> = HashSet::new();
    let mut s_degrees: Vec<u32> = Vec::new();
    let mut s_masses: Vec<Rat> = Vec::new();
    let mut override_factors: Vec<Rat> = Vec::new();
    let mut specced_by_degree: HashMap<u32, u64> = HashMap::new();
    let mut any_non_s = false;
    for spec in specs {
        if !seen.insert(spec.place) {
            return Err(Error::invalid(format!(
                "duplicate local condition at the {}",
                spec.place
            )));
        }
        let degree = match spec.place {
            PlaceRef::FfInfinity => 1,
            PlaceRef::FfFinite { degree, index } => {
                if degree == 0 {
                    return Err(Error::invalid("finite places have positive degree"));
                }
                if u128::from(index) >= count_monic_irreducible(q, degree) {
                    return Err(Error::invalid(
                        "place index exceeds the number of places of that degree",
                    ));
                }
                degree
            }
            PlaceRef::RealPlace | PlaceRef::RationalPrime(_) => {
                return Err(Error::invalid(
                    "rational places do not live on a function field",
                ));
            }
        };
        *specced_by_degree.entry(degree).or_insert(0) += 1;
        if spec.in_s {
            s_degrees.push(degree);
            s_masses.push(s_place_mass(n, q, degree, &spec.mode)?);
        } else {
            any_non_s = true;
            override_factors.push(finite_place_factor(n, q, degree, &spec.mode, euler)?);
        }
    }

    // Leading constant: the counting normalization contributes log q, the
    // zeta residue contributes 1/log q, and removing the S-places' Euler
    // factors from the zeta function multiplies the residue by
    // (1 - q^{-deg}) per place. Everything rational survives.
    let mut small = ff_zeta_residue(q)?.rational_part;
    for &d in &s_degrees {
        small *= Rat::one() - rat_pow(q, -(d as i64));
    }
    for m in &s_masses {
        small *= m;
    }
    for f in &override_factors {
        small *= f;
    }

    // Closed form before the truncated product: for degrees 2 and 3 the
    // local factor is 1 - x^n at x = q^{-deg}, and the product of
    // (1 - q^{-n deg}) over every place of the projective line is the
    // reciprocal zeta value (1 - q^{-n})(1 - q^{-(n-1)}). Dividing out the
    // S-places' factors leaves exactly the product being truncated.
    let exact_closed_form = if (n == 2 || n == 3) && !any_non_s {
        let mut closed = small.clone()
            * (Rat::one() - rat_pow(q, -(n as i64)))
            * (Rat::one() - rat_pow(q, -(n as i64 - 1)));
        for &d in &s_degrees {
            closed /= Rat::one() - rat_pow(q, -((n as i64) * (d as i64)));
        }
        Some(closed)
    } else {
        None
    };

    // Exact product over the unspecified places of degree at most `depth`,
    // one power of the local factor per place. The per-degree factor
    // E_n(q^{-d}) is carried as (numerator, power of q): the numerator is
    // congruent to the top coefficient of E_n modulo q, hence coprime to
    // the denominator, so nothing would cancel anyway.
    let degrees: Vec<(u32, u64)> = (1..=depth)
        .map(|d| {
            let total = ff_place_count(q, d);
            let excluded = specced_by_degree.get(&d).copied().unwrap_or(0);
            debug_assert!(excluded <= total, "validation bounds spec counts");
            (d, total - excluded)
        })
        .collect();
    let q_big = BigInt::from(q);
    let parts: Vec<(BigInt, u64)> = map_collect(mode, degrees, |(d, count)| {
        if count == 0 {
            return (BigInt::one(), 0);
        }
        let x = q_big.pow(d);
        let mut numerator = BigInt::zero();
        for (k, e) in euler.coeffs().iter().enumerate() {
            numerator += e * x.pow(n - k as u32);
        }
        let c = u32::try_from(count).expect("place budget bounds per-degree counts");
        (numerator.pow(c), u64::from(d) * u64::from(n) * count)
    });
    let mut big = BigFraction::one();
    let mut den_exp: u64 = 0;
    for (numerator, e) in parts {
        big.num *= numerator;
        den_exp += e;
    }
    big.den = q_big.pow(u32::try_from(den_exp).expect("place budget bounds the exponent"));
    big.mul_rat(&small);

    // Tail over the places of degree exceeding `depth`: there are at most
    // q^d places of degree d >= 2 (d N_d <= q^d + 1), and each factor
    // deviates from 1 by at most t_n q^{-2d} with t_n the sum of the
    // absolute Euler coefficients beyond the linear term. The total
    // deviation is at most t_n sum_{d > depth} q^{-d}.
    let t_n = Rat::from(euler.tail_coefficient_bound());
    let tail_bound = t_n * geometric_tail(&rat_pow(q, -1), depth + 1);
    finish(n, truncation, big, tail_bound, exact_closed_form, None)
}

fn nf_density(
    n: u32,
    residue: &RationalInterval,
    specs: &[LocalSpec],
    truncation: u64,
    mode: ExecMode,
    euler: &EulerFactorPoly,
) -> Result<DensityPrediction> {
    if truncation < 2 {
        return Err(Error::invalid("prime bound must be at least 2"));
    }
    if truncation > NF_PRIME_BUDGET {
        return Err(Error::budget("prime bound exceeds the certified-product budget"));
    }

    let mut seen: HashSet<PlaceRef> = HashSet::new();
    let mut arch_mass: Option<Rat> = None;
    let mut s_primes: Vec<u64> = Vec::new();
    let mut s_masses: Vec<Rat> = Vec::new();
    let mut override_primes: Vec<u64> = Vec::new();
    let mut override_factors: Vec<Rat> = Vec::new();
    for spec in specs {
        if !seen.insert(spec.place) {
            return Err(Error::invalid(format!(
                "duplicate local condition at the {}",
                spec.place
            )));
        }
        match spec.place {
            PlaceRef::RealPlace => {
                if !spec.in_s {
                    return Err(Error::invalid(
                        "the archimedean place always carries an unweighted mass factor",
                    ));
                }
                arch_mass = Some(match &spec.mode {
                    LocalSpecMode::Full => local_mass_arch(n, ArchKind::Real),
                    LocalSpecMode::TameEnumerated => {
                        return Err(Error::invalid(
                            "archimedean places have no tame enumeration",
                        ));
                    }
                    LocalSpecMode::ExplicitList(classes) => explicit_unweighted(classes)?,
                });
            }
            PlaceRef::RationalPrime(p) => {
                if !is_prime(p)? {
                    return Err(Error::invalid("rational place must be a prime"));
                }
                if spec.in_s {
                    s_primes.push(p);
                    s_masses.push(s_place_mass(n, p, 1, &spec.mode)?);
                } else {
                    override_primes.push(p);
                    override_factors.push(finite_place_factor(n, p, 1, &spec.mode, euler)?);
                }
            }
            PlaceRef::FfInfinity | PlaceRef::FfFinite { .. } => {
                return Err(Error::invalid(
                    "function-field places do not live over the rationals",
                ));
            }
        }
    }

    // Leading constant: 1/2 from the counting normalization, the real
    // place's unweighted mass, and (1 - p^{-1}) per finite prime in S
    // (removing its Euler factor from the zeta function at s = 1).
    let arch = arch_mass.unwrap_or_else(|| local_mass_arch(n, ArchKind::Real));
    let mut small = rat(1, 2) * arch;
    for &p in &s_primes {
        small *= Rat::one() - rat_pow(p, -1);
    }
    for m in &s_masses {
        small *= m;
    }
    for f in &override_factors {
        small *= f;
    }

    // Exact product over the unspecified primes up to the bound.
    let spec_set: HashSet<u64> = s_primes.iter().chain(&override_primes).copied().collect();
    let bulk: Vec<u64> = primes_up_to(truncation)
        .into_iter()
        .filter(|p| !spec_set.contains(p))
        .collect();
    let parts: Vec<(BigInt, BigInt)> = map_collect(mode, bulk, |p| {
        let x = BigInt::from(p);
        let mut numerator = BigInt::zero();
        for (k, e) in euler.coeffs().iter().enumerate() {
            numerator += e * x.pow(n - k as u32);
        }
        (numerator, x.pow(n))
    });
    let mut big = BigFraction::one();
    for (np, dp) in parts {
        big.num *= np;
        big.den *= dp;
    }
    big.mul_rat(&small);

    // Tail over the primes beyond the bound P: each factor deviates from 1
    // by at most t_n p^{-2}, and sum_{p > P} p^{-2} < sum_{m > P} m^{-2}
    // < 1/P by the integral bound.
    let tail_bound =
        Rat::from(euler.tail_coefficient_bound()) * Rat::new(BigInt::one(), BigInt::from(truncation));
    finish(n, truncation, big, tail_bound, None, Some(residue))
}

/// Shared final assembly: tail interval, endpoint construction without
/// any rational arithmetic on the large unreduced parts, and packaging.
fn finish(
    n: u32,
    truncation: u64,
    big: BigFraction,
    tail_bound: Rat,
    exact_closed_form: Option<Rat>,
    residue: Option<&RationalInterval>,
) -> Result<DensityPrediction> {
    if tail_bound >= Rat::one() {
        return Err(Error::invalid(
            "truncation too shallow to certify a tail bound",
        ));
    }
    // A product of factors 1 + d_i with sum |d_i| <= t < 1 lies between
    // 1 - t and 1/(1 - t): the lower bound is the Weierstrass product
    // inequality, the upper follows from 1 + d <= 1/(1 - d).
    let lo_scale = Rat::one() - &tail_bound;
    let hi_scale = lo_scale.clone().recip();
    let (res_lo, res_hi) = match residue {
        Some(r) => (r.lo().clone(), r.hi().clone()),
        None => (Rat::one(), Rat::one()),
    };
    let interval = RationalInterval::new(
        big.scaled(&(lo_scale * res_lo)),
        big.scaled(&(hi_scale * res_hi)),
    )?;
    Ok(DensityPrediction {
        degree: n,
        truncation,
        interval,
        tail_bound,
        exact_closed_form,
    })
}

/// Number of places of `F_q(t)` of exact degree `d`: the monic irreducible
/// polynomials of degree `d`, plus the place at infinity when `d = 1`.
fn ff_place_count(q: u64, d: u32) -> u64 {
    let finite = count_monic_irreducible(q, d);
    let total = finite + u128::from(d == 1);
    u64::try_from(total).expect("place budget keeps counts in range")
}

/// Deterministic primality by trial division; rejects inputs so large that
/// the division loop would be slow.
fn is_prime(p: u64) -> Result<bool> {
    if p > 1_000_000_000_000 {
        return Err(Error::budget("prime candidate too large to validate"));
    }
    if p < 2 {
        return Ok(false);
    }
    if p % 2 == 0 {
        return Ok(p == 2);
    }
    let mut d = 3;
    while d * d <= p {
        if p % d == 0 {
            return Ok(false);
        }
        d += 2;
    }
    Ok(true)
}

/// Primes up to `limit` inclusive, by sieve.
fn primes_up_to(limit: u64) -> Vec<u64> {
    let limit = limit as usize;
    let mut is_comp = vec![false; limit + 1];
    let mut out = Vec::new();
    for m in 2..=limit {
        if is_comp[m] {
            continue;
        }
        out.push(m as u64);
        let mut j = m * m;
        while j <= limit {
            is_comp[j] = true;
            j += m;
        }
    }
    out
}
