//! Partition counts, Euler-factor polynomials, and closed local masses.
//!
//! Everything here is exact. The count `q(k, m)` of partitions of `k` into
//! at most `m` parts drives two families of constants: the Euler factor
//! `E_n(x) = sum_k (q(k, n-k) - q(k-1, n-k+1)) x^k` attached to a finite
//! place (with `x` standing for `1/Np`), and the full nonarchimedean local
//! mass `(1 - 1/Np) * sum_{k<n} q(k, n-k) / Np^k`. The two are linked by the
//! polynomial identity `(1 - x) * sum_{k<n} q(k, n-k) x^k = E_n(x)`, which
//! [`euler_factor`] is tested against. Archimedean masses are the involution
//! count `#S_n[2] / n!` at a real place and `1 / n!` at a complex one.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::arith::{rat_pow, Rat};
use crate::{Error, Result};

/// Number of partitions of `k` into at most `m` parts, exactly.
///
/// Negative `k` counts zero partitions; `k = 0` has exactly the empty
/// partition for every `m`, including `m = 0`.
pub fn partitions_at_most(k: i64, m: i64) -> BigInt {
    if k < 0 {
        return BigInt::zero();
    }
    if k == 0 {
        return BigInt::one();
    }
    if m <= 0 {
        return BigInt::zero();
    }
    // Parts larger than k never occur, so the table is (k+1) x (min(m,k)+1).
    let cols = m.min(k) as usize;
    let rows = k as usize;
    // table[i][j] = q(i, j); column j built from column j-1 by the recurrence
    // q(i, j) = q(i, j-1) + q(i-j, j).
    let mut prev: Vec<BigInt> = vec![BigInt::zero(); rows + 1];
    prev[0] = BigInt::one();
    let mut cur = prev.clone();
    for j in 1..=cols {
        for i in 1..=rows {
            cur[i] = &prev[i] + if i >= j { cur[i - j].clone() } else { BigInt::zero() };
        }
        prev.clone_from(&cur);
    }
    prev[rows].clone()
}

/// The Euler factor `E_n` of the degree-`n` count at one finite place, as a
/// polynomial in `x = 1/Np` with exact integer coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EulerFactorPoly {
    n: u32,
    coeffs: Vec<BigInt>,
}

impl EulerFactorPoly {
    /// The degree `n` the factor belongs to.
    pub fn n(&self) -> u32 {
        self.n
    }

    /// Coefficients of `1, x, x^2, ..., x^n` in that order.
    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Exact value `E_n(x)` at a rational point.
    pub fn eval(&self, x: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + Rat::from(c.clone());
        }
        acc
    }

    /// Sum of the absolute values of the coefficients beyond `x^1`.
    ///
    /// The linear coefficient of `E_n` vanishes, so for `0 <= x <= 1` this
    /// bounds `|E_n(x) - 1| <= tail_coefficient_bound() * x^2`, which is the
    /// per-place deviation bound behind every certified truncation tail.
    pub fn tail_coefficient_bound(&self) -> BigInt {
        self.coeffs.iter().skip(2).map(|c| c.abs()).sum()
    }
}

impl std::fmt::Display for EulerFactorPoly {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            match k {
                0 => write!(f, "{mag}")?,
                _ => {
                    if !mag.is_one() {
                        write!(f, "{mag}*")?;
                    }
                    if k == 1 {
                        write!(f, "x")?;
                    } else {
                        write!(f, "x^{k}")?;
                    }
                }
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// Euler factor `E_n(x) = sum_{k=0}^n (q(k, n-k) - q(k-1, n-k+1)) x^k`.
///
/// Supported for `2 <= n <= 5`; the constant term is always 1 and the
/// linear term always vanishes.
pub fn euler_factor(n: u32) -> Result<EulerFactorPoly> {
    if !(2..=5).contains(&n) {
        return Err(Error::UnsupportedDegree);
    }
    let n_i = n as i64;
    let coeffs: Vec<BigInt> = (0..=n_i)
        .map(|k| partitions_at_most(k, n_i - k) - partitions_at_most(k - 1, n_i - k + 1))
        .collect();
    debug_assert!(coeffs[0].is_one());
    debug_assert!(coeffs[1].is_zero());
    Ok(EulerFactorPoly { n, coeffs })
}

/// Full nonarchimedean local mass of degree-`n` etale algebras over a local
/// field with residue field size `np`:
/// `(1 - 1/np) * sum_{k=0}^{n-1} q(k, n-k) / np^k`, exactly.
pub fn local_mass_nonarch(n: u32, np: u64) -> Rat {
    assert!(n >= 1, "degree must be positive");
    assert!(np >= 2, "residue field size must be at least 2");
    let n_i = n as i64;
    let mut sum = Rat::zero();
    for k in 0..n_i {
        sum += Rat::from(partitions_at_most(k, n_i - k)) * rat_pow(np, -k);
    }
    (Rat::one() - rat_pow(np, -1)) * sum
}

/// Number of elements of order dividing 2 in the symmetric group `S_n`.
pub fn sn_involutions(n: u32) -> BigInt {
    // I(n) = I(n-1) + (n-1) I(n-2): an involution either fixes the last
    // letter or swaps it with one of the other n-1.
    let mut prev = BigInt::one(); // I(0)
    let mut cur = BigInt::one(); // I(1)
    if n == 0 {
        return prev;
    }
    for m in 2..=n as u64 {
        let next = &cur + BigInt::from(m - 1) * &prev;
        prev = cur;
        cur = next;
    }
    cur
}

/// Kind of archimedean completion.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArchKind {
    Real,
    Complex,
}

/// Archimedean local mass of degree-`n` etale algebras: `#S_n[2] / n!` over
/// the reals (etale algebras are `R^a x C^b` and their automorphisms are the
/// involutive permutations), `1 / n!` over the complexes (only `C^n` exists).
pub fn local_mass_arch(n: u32, kind: ArchKind) -> Rat {
    assert!((1..=5).contains(&n), "degree must be between 1 and 5");
    let factorial: BigInt = (1..=n as u64).map(BigInt::from).product();
    let numer = match kind {
        ArchKind::Real => sn_involutions(n),
        ArchKind::Complex => BigInt::one(),
    };
    Rat::new(numer, factorial)
}
