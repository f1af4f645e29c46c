//! Exact rationals and closed rational intervals.
//!
//! Intervals represent certified enclosures of real quantities (truncated
//! Euler products, density constants). All endpoint arithmetic is exact
//! rational arithmetic, so interval operations are exact as well; widening
//! only ever enters through explicit tail bounds supplied by callers.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::{Error, Result};

pub use num_rational::BigRational as Rat;

/// The rational `n / d`.
pub fn rat(n: i64, d: i64) -> Rat {
    assert!(d != 0, "zero denominator");
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// The rational `base^e` for integer (possibly negative) exponents.
pub fn rat_pow(base: u64, e: i64) -> Rat {
    let b = BigRational::from(BigInt::from(base));
    if e >= 0 {
        b.pow(e as i32)
    } else {
        b.pow(-(e) as i32).recip()
    }
}

/// Closed interval `[lo, hi]` with exact rational endpoints.
#[derive(Debug, Clone, PartialEq)]
pub struct RationalInterval {
    lo: Rat,
    hi: Rat,
}

impl RationalInterval {
    /// Interval from endpoints; errors when `lo > hi`.
    pub fn new(lo: Rat, hi: Rat) -> Result<Self> {
        if lo > hi {
            return Err(Error::invalid("interval endpoints out of order"));
        }
        Ok(RationalInterval { lo, hi })
    }

    /// Degenerate interval `[x, x]`.
    pub fn point(x: Rat) -> Self {
        RationalInterval { lo: x.clone(), hi: x }
    }

    pub fn lo(&self) -> &Rat {
        &self.lo
    }

    pub fn hi(&self) -> &Rat {
        &self.hi
    }

    pub fn width(&self) -> Rat {
        &self.hi - &self.lo
    }

    pub fn contains(&self, x: &Rat) -> bool {
        &self.lo <= x && x <= &self.hi
    }

    pub fn contains_interval(&self, other: &Self) -> bool {
        self.lo <= other.lo && other.hi <= self.hi
    }

    pub fn intersects(&self, other: &Self) -> bool {
        self.lo <= other.hi && other.lo <= self.hi
    }

    pub fn midpoint(&self) -> Rat {
        (&self.lo + &self.hi) / BigRational::from(BigInt::from(2))
    }

    pub fn add(&self, other: &Self) -> Self {
        RationalInterval {
            lo: &self.lo + &other.lo,
            hi: &self.hi + &other.hi,
        }
    }

    /// Interval product: the hull of the four endpoint products.
    pub fn mul(&self, other: &Self) -> Self {
        let products = [
            &self.lo * &other.lo,
            &self.lo * &other.hi,
            &self.hi * &other.lo,
            &self.hi * &other.hi,
        ];
        let lo = products.iter().min().unwrap().clone();
        let hi = products.iter().max().unwrap().clone();
        RationalInterval { lo, hi }
    }

    pub fn scale(&self, k: &Rat) -> Self {
        if k.is_negative() {
            RationalInterval {
                lo: &self.hi * k,
                hi: &self.lo * k,
            }
        } else {
            RationalInterval {
                lo: &self.lo * k,
                hi: &self.hi * k,
            }
        }
    }

    /// Reciprocal; requires the interval not to contain zero.
    pub fn recip(&self) -> Result<Self> {
        if self.lo.is_zero() || self.hi.is_zero() || (self.lo.is_negative() != self.hi.is_negative())
        {
            return Err(Error::invalid("interval straddles zero, cannot invert"));
        }
        Ok(RationalInterval {
            lo: self.hi.recip(),
            hi: self.lo.recip(),
        })
    }
}

impl Serialize for RationalInterval {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("RationalInterval", 4)?;
        s.serialize_field("lo", &self.lo.to_string())?;
        s.serialize_field("hi", &self.hi.to_string())?;
        s.serialize_field("lo_approx", &rat_to_f64(&self.lo))?;
        s.serialize_field("hi_approx", &rat_to_f64(&self.hi))?;
        s.end()
    }
}

impl<'de> serde::Deserialize<'de> for RationalInterval {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(serde::Deserialize)]
        struct Raw {
            lo: String,
            hi: String,
        }
        let raw = Raw::deserialize(d)?;
        let lo: Rat = raw
            .lo
            .parse()
            .map_err(|e| serde::de::Error::custom(format!("lo: {e}")))?;
        let hi: Rat = raw
            .hi
            .parse()
            .map_err(|e| serde::de::Error::custom(format!("hi: {e}")))?;
        RationalInterval::new(lo, hi).map_err(serde::de::Error::custom)
    }
}

/// Nearest-f64 rendering for reports; never used in computations. Shifts
/// numerator and denominator down together first, so values of moderate
/// size survive even when both parts overflow f64 on their own.
pub fn rat_to_f64(x: &Rat) -> f64 {
    let (n, d) = (x.numer(), x.denom());
    let shift = n.bits().max(d.bits()).saturating_sub(64);
    let nf = bigint_to_f64(&(n >> shift));
    let df = bigint_to_f64(&(d >> shift));
    nf / df
}

fn bigint_to_f64(n: &BigInt) -> f64 {
    // Take the top 64 bits and scale; plenty for display purposes.
    let (sign, digits) = n.to_u64_digits();
    let mut value = 0.0f64;
    for d in digits.iter().rev() {
        value = value * (u64::MAX as f64 + 1.0) + *d as f64;
    }
    match sign {
        num_bigint::Sign::Minus => -value,
        _ => value,
    }
}

/// Geometric series tail bound: for `0 <= x < 1`, the sum
/// `x^k + x^{k+1} + ...` equals `x^k / (1-x)`, returned exactly.
pub fn geometric_tail(x: &Rat, k: u32) -> Rat {
    assert!(!x.is_negative() && x < &Rat::one(), "ratio must be in [0,1)");
    let mut xk = Rat::one();
    for _ in 0..k {
        xk *= x;
    }
    let denom = Rat::one() - x;
    xk / denom
}
