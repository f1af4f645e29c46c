//! Trait for elements of a finite field.
//!
//! Methods use `&self` as the carrier of the field description, so a single
//! sample element is enough context to build zero, one, or any element by
//! index. All fields in this crate are small (order fits in `u64`), which
//! the trait assumes.

/// An element of a finite field of odd characteristic.
pub trait Field: Clone + PartialEq + std::fmt::Debug + Send + Sync {
    /// Characteristic `p` of the field.
    fn characteristic(&self) -> u64;

    /// Degree of the field over its prime field.
    fn degree_over_prime(&self) -> u32;

    /// Number of elements `p^e`.
    fn order(&self) -> u64 {
        self.characteristic().pow(self.degree_over_prime())
    }

    /// Additive identity of the same field.
    fn zero(&self) -> Self;

    /// Multiplicative identity of the same field.
    fn one(&self) -> Self;

    fn is_zero(&self) -> bool;

    fn add(&self, other: &Self) -> Self;

    fn sub(&self, other: &Self) -> Self;

    fn mul(&self, other: &Self) -> Self;

    fn neg(&self) -> Self;

    /// Multiplicative inverse; `None` for zero.
    fn inv(&self) -> Option<Self>;

    /// Image of the integer `n` under `Z -> F`.
    fn from_int(&self, n: i64) -> Self;

    /// Canonical position of this element in `0..order`. The numbering is a
    /// fixed bijection (mixed-radix over the prime field), used for element
    /// enumeration and as a hash key.
    fn index(&self) -> u64;

    /// Inverse of [`Field::index`].
    fn from_index(&self, idx: u64) -> Self;

    fn is_one(&self) -> bool {
        *self == self.one()
    }

    /// Binary exponentiation; `pow(0)` is one, including for zero.
    fn pow(&self, mut e: u128) -> Self {
        let mut base = self.clone();
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }

    /// Absolute trace down to the prime field, as an integer in `0..p`.
    ///
    /// Default implementation sums the Frobenius orbit
    /// `x + x^p + ... + x^{p^{e-1}}`; the result lies in the prime field, so
    /// its index is the residue.
    fn trace_to_prime(&self) -> u64 {
        let p = self.characteristic() as u128;
        let e = self.degree_over_prime();
        let mut term = self.clone();
        let mut acc = self.clone();
        for _ in 1..e {
            term = term.pow(p);
            acc = acc.add(&term);
        }
        debug_assert!(acc.index() < self.characteristic());
        acc.index()
    }

    /// All field elements in index order. Intended for small fields only.
    fn all_elements(&self) -> Vec<Self> {
        (0..self.order()).map(|i| self.from_index(i)).collect()
    }

    /// Whether this element is a square in the field (zero counts).
    fn is_square(&self) -> bool {
        if self.is_zero() {
            return true;
        }
        // Euler criterion; the order is odd-characteristic so q is odd.
        self.pow(((self.order() - 1) / 2) as u128).is_one()
    }
}
