//! Exact arithmetic in the cyclotomic field `Q(zeta_p)` for an odd prime `p`.
//!
//! Elements are stored on the power basis `1, zeta, ..., zeta^{p-2}` of
//! `Q[x]/Phi_p(x)`, using `zeta^{p-1} = -(1 + zeta + ... + zeta^{p-2})`.
//! This is where additive character values live; sums of character values
//! that are claimed to be rational can be checked exactly.

use num_traits::Zero;

use super::rational::Rat;

/// Element of `Q(zeta_p)` on the power basis (length `p-1`).
#[derive(Debug, Clone, PartialEq)]
pub struct CycQ {
    p: u64,
    c: Vec<Rat>,
}

impl CycQ {
    pub fn zero(p: u64) -> Self {
        assert!(p >= 3 && p % 2 == 1, "p must be an odd prime");
        CycQ {
            p,
            c: vec![Rat::zero(); (p - 1) as usize],
        }
    }

    pub fn from_rat(p: u64, x: Rat) -> Self {
        let mut z = CycQ::zero(p);
        z.c[0] = x;
        z
    }

    /// The root of unity power `zeta_p^k`.
    pub fn zeta_pow(p: u64, k: i64) -> Self {
        let mut z = CycQ::zero(p);
        let k = k.rem_euclid(p as i64) as usize;
        if k < (p - 1) as usize {
            z.c[k] = Rat::from_integer(1.into());
        } else {
            // zeta^{p-1} = -(1 + zeta + ... + zeta^{p-2}).
            for x in z.c.iter_mut() {
                *x = -Rat::from_integer(1.into());
            }
        }
        z
    }

    pub fn conductor(&self) -> u64 {
        self.p
    }

    pub fn is_zero(&self) -> bool {
        self.c.iter().all(|x| x.is_zero())
    }

    /// The rational value when the element lies in `Q`, else `None`.
    pub fn as_rational(&self) -> Option<Rat> {
        if self.c[1..].iter().all(|x| x.is_zero()) {
            Some(self.c[0].clone())
        } else {
            None
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.p, other.p, "mixed conductors");
        CycQ {
            p: self.p,
            c: self.c.iter().zip(&other.c).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!(self.p, other.p, "mixed conductors");
        CycQ {
            p: self.p,
            c: self.c.iter().zip(&other.c).map(|(a, b)| a - b).collect(),
        }
    }

    pub fn neg(&self) -> Self {
        CycQ {
            p: self.p,
            c: self.c.iter().map(|a| -a.clone()).collect(),
        }
    }

    pub fn scale(&self, k: &Rat) -> Self {
        CycQ {
            p: self.p,
            c: self.c.iter().map(|a| a * k).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.p, other.p, "mixed conductors");
        let p = self.p as usize;
        // Convolve with exponents mod p, then fold zeta^{p-1} back in.
        let mut by_exp = vec![Rat::zero(); p];
        for (i, a) in self.c.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.c.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let k = (i + j) % p;
                by_exp[k] = &by_exp[k] + &(a * b);
            }
        }
        let mut c = by_exp[..p - 1].to_vec();
        let top = by_exp[p - 1].clone();
        if !top.is_zero() {
            for x in c.iter_mut() {
                *x = &*x - &top;
            }
        }
        CycQ { p: self.p, c }
    }

    /// Sum of a list of elements.
    pub fn sum(p: u64, items: impl IntoIterator<Item = CycQ>) -> Self {
        items
            .into_iter()
            .fold(CycQ::zero(p), |acc, x| acc.add(&x))
    }
}

#[cfg(test)]
mod tests {
    use super::super::rational::rat;
    use super::*;

    #[test]
    fn full_orbit_sums_to_zero() {
        for p in [3u64, 5, 7] {
            let total = CycQ::sum(p, (0..p as i64).map(|k| CycQ::zeta_pow(p, k)));
            assert!(total.is_zero(), "sum of all p-th roots of unity is 0");
        }
    }

    #[test]
    fn zeta_power_arithmetic_wraps() {
        let p = 5;
        let z2 = CycQ::zeta_pow(p, 2);
        let z4 = CycQ::zeta_pow(p, 4);
        assert_eq!(z2.mul(&z2), z4);
        assert_eq!(z2.mul(&z4), CycQ::zeta_pow(p, 1)); // 2+4 = 6 = 1 mod 5
        assert_eq!(
            CycQ::zeta_pow(p, 3).mul(&CycQ::zeta_pow(p, 2)),
            CycQ::from_rat(p, rat(1, 1))
        );
    }

    #[test]
    fn rationality_detection() {
        let p = 7;
        let x = CycQ::from_rat(p, rat(3, 4));
        assert_eq!(x.as_rational(), Some(rat(3, 4)));
        assert_eq!(CycQ::zeta_pow(p, 1).as_rational(), None);
        // zeta + zeta^2 + ... + zeta^6 = -1.
        let s = CycQ::sum(p, (1..7).map(|k| CycQ::zeta_pow(p, k)));
        assert_eq!(s.as_rational(), Some(rat(-1, 1)));
    }

    #[test]
    fn norm_like_product_is_rational() {
        // (1 - zeta)(1 - zeta^2)(1 - zeta^3)(1 - zeta^4) = 5 for p = 5.
        let p = 5;
        let one = CycQ::from_rat(p, rat(1, 1));
        let mut acc = CycQ::from_rat(p, rat(1, 1));
        for k in 1..5 {
            acc = acc.mul(&one.sub(&CycQ::zeta_pow(p, k)));
        }
        assert_eq!(acc.as_rational(), Some(rat(5, 1)));
    }
}
