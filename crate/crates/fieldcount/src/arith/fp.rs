//! Prime field `F_p` as machine-integer residues.

use super::field::Field;

/// Element of `F_p`, stored as the least nonnegative residue.
///
/// `p` must be an odd prime below `2^31` so products fit in `u64` without
/// overflow anywhere in the crate.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Fp {
    p: u64,
    v: u64,
}

impl Fp {
    /// Element `v mod p`. Panics unless `p` is an odd prime (trial division;
    /// the primes in this crate are tiny).
    pub fn new(p: u64, v: i64) -> Self {
        assert!(is_small_odd_prime(p), "characteristic must be an odd prime");
        let m = v.rem_euclid(p as i64) as u64;
        Fp { p, v: m }
    }

    /// Residue value in `0..p`.
    pub fn value(&self) -> u64 {
        self.v
    }
}

/// Trial-division primality for the small moduli used here.
pub fn is_small_odd_prime(p: u64) -> bool {
    if p < 3 || p % 2 == 0 {
        return false;
    }
    let mut d = 3;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

impl std::fmt::Debug for Fp {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.v)
    }
}

impl std::fmt::Display for Fp {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.v)
    }
}

impl Field for Fp {
    fn characteristic(&self) -> u64 {
        self.p
    }

    fn degree_over_prime(&self) -> u32 {
        1
    }

    fn zero(&self) -> Self {
        Fp { p: self.p, v: 0 }
    }

    fn one(&self) -> Self {
        Fp { p: self.p, v: 1 }
    }

    fn is_zero(&self) -> bool {
        self.v == 0
    }

    fn add(&self, other: &Self) -> Self {
        debug_assert_eq!(self.p, other.p);
        let mut s = self.v + other.v;
        if s >= self.p {
            s -= self.p;
        }
        Fp { p: self.p, v: s }
    }

    fn sub(&self, other: &Self) -> Self {
        debug_assert_eq!(self.p, other.p);
        let s = if self.v >= other.v {
            self.v - other.v
        } else {
            self.v + self.p - other.v
        };
        Fp { p: self.p, v: s }
    }

    fn mul(&self, other: &Self) -> Self {
        debug_assert_eq!(self.p, other.p);
        Fp {
            p: self.p,
            v: (self.v * other.v) % self.p,
        }
    }

    fn neg(&self) -> Self {
        let v = if self.v == 0 { 0 } else { self.p - self.v };
        Fp { p: self.p, v }
    }

    fn inv(&self) -> Option<Self> {
        if self.v == 0 {
            return None;
        }
        // Fermat: v^(p-2). The fields are tiny, so no extended gcd needed.
        Some(self.pow((self.p - 2) as u128))
    }

    fn from_int(&self, n: i64) -> Self {
        Fp {
            p: self.p,
            v: n.rem_euclid(self.p as i64) as u64,
        }
    }

    fn index(&self) -> u64 {
        self.v
    }

    fn from_index(&self, idx: u64) -> Self {
        debug_assert!(idx < self.p);
        Fp { p: self.p, v: idx }
    }

    fn trace_to_prime(&self) -> u64 {
        self.v
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn field_axioms_small() {
        let s = Fp::new(7, 0);
        for a in s.all_elements() {
            for b in s.all_elements() {
                assert_eq!(a.add(&b), b.add(&a));
                assert_eq!(a.mul(&b), b.mul(&a));
                assert_eq!(a.sub(&b), a.add(&b.neg()));
            }
            if !a.is_zero() {
                let ai = a.inv().unwrap();
                assert!(a.mul(&ai).is_one());
            }
        }
        assert!(s.from_int(-1).add(&s.one()).is_zero());
    }

    #[test]
    fn squares_match_enumeration() {
        let s = Fp::new(11, 0);
        let squares: Vec<u64> = s.all_elements().iter().map(|x| x.mul(x).index()).collect();
        for x in s.all_elements() {
            assert_eq!(x.is_square(), squares.contains(&x.index()));
        }
    }

    #[test]
    #[should_panic(expected = "odd prime")]
    fn even_characteristic_rejected() {
        let _ = Fp::new(2, 1);
    }
}
