//! Torus weights of the form coordinates and their partial order.
//!
//! A maximal torus of the acting group scales each coordinate of the
//! representation by a monomial `lambda^e s_1^{e_1} ... s_r^{e_r}`; the
//! exponent vector is the weight of the coordinate. Every coordinate of one
//! representation shares the same lambda exponent, so the componentwise order
//! on the `s_i` exponents gives a partial order on coordinates. Each
//! representation has a unique minimal coordinate (`a` for degree 3, `a11`
//! for degree 4), the corner the cusp analysis pivots on.

use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// Exponent vector of a torus character.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeightVector {
    /// Exponent of the central scaling coordinate.
    pub lambda: i64,
    /// Exponents of the torus coordinates `s_1..s_r`.
    pub s: Vec<i64>,
}

impl WeightVector {
    pub fn new(lambda: i64, s: Vec<i64>) -> Self {
        WeightVector { lambda, s }
    }

    /// True when `other - self` has all `s`-exponents nonnegative. The
    /// lambda exponent is ignored; it is constant within one representation.
    pub fn leq(&self, other: &WeightVector) -> bool {
        debug_assert_eq!(self.s.len(), other.s.len());
        self.s.iter().zip(&other.s).all(|(a, b)| a <= b)
    }

    /// Componentwise sum of `s`-exponents scaled by `k`, lambda included.
    pub fn scaled_add(&self, k: i64, other: &WeightVector) -> WeightVector {
        WeightVector {
            lambda: self.lambda + k * other.lambda,
            s: self
                .s
                .iter()
                .zip(&other.s)
                .map(|(a, b)| a + k * b)
                .collect(),
        }
    }
}

/// Coordinate names of the degree-3 representation, minimal first.
pub const V3_COORDS: [&str; 4] = ["a", "b", "c", "d"];

/// Coordinate names of the degree-4 representation: the `a` block then the
/// `b` block, each in the order `11, 12, 13, 22, 23, 33`.
pub const V4_COORDS: [&str; 12] = [
    "a11", "a12", "a13", "a22", "a23", "a33", "b11", "b12", "b13", "b22", "b23", "b33",
];

const V3_S1: [i64; 4] = [-3, -1, 1, 3];

/// `(s2, s3)` exponents of the six quadric coefficients in storage order;
/// the `s1` exponent is -1 on the `a` block and +1 on the `b` block.
const V4_S2S3: [(i64, i64); 6] = [(-4, -2), (-1, -2), (-1, 1), (2, -2), (2, 1), (2, 4)];

/// Valid coordinate names for degree `n`.
pub fn coordinate_names(n: u32) -> Result<&'static [&'static str]> {
    match n {
        3 => Ok(&V3_COORDS),
        4 => Ok(&V4_COORDS),
        _ => Err(Error::UnsupportedDegree),
    }
}

/// Weight of a named coordinate of the degree-`n` representation.
///
/// Supported degrees are 3 and 4; the degree-2 representation has no torus
/// coordinates beyond the center.
pub fn torus_weight(n: u32, coordinate: &str) -> Result<WeightVector> {
    let names = coordinate_names(n)?;
    let idx = names
        .iter()
        .position(|&c| c == coordinate)
        .ok_or_else(|| Error::invalid(format!("unknown coordinate {coordinate:?}")))?;
    Ok(torus_weight_by_index(n, idx))
}

/// Weight of the coordinate at `index` in storage order; `n` must be 3 or 4
/// and the index in range.
pub fn torus_weight_by_index(n: u32, index: usize) -> WeightVector {
    match n {
        3 => WeightVector::new(1, vec![V3_S1[index]]),
        4 => {
            let s1 = if index < 6 { -1 } else { 1 };
            let (s2, s3) = V4_S2S3[index % 6];
            WeightVector::new(1, vec![s1, s2, s3])
        }
        _ => unreachable!("weights exist only for degrees 3 and 4"),
    }
}

/// Partial order on coordinates: true iff every `s_i` exponent of
/// `weight(beta) - weight(alpha)` is nonnegative.
pub fn weight_leq(n: u32, alpha: &str, beta: &str) -> Result<bool> {
    let wa = torus_weight(n, alpha)?;
    let wb = torus_weight(n, beta)?;
    Ok(wa.leq(&wb))
}

/// Coordinates with no strictly smaller coordinate in the weight order.
pub fn minimal_coordinates(n: u32) -> Result<Vec<&'static str>> {
    let names = coordinate_names(n)?;
    let weights: Vec<_> = (0..names.len())
        .map(|i| torus_weight_by_index(n, i))
        .collect();
    Ok(names
        .iter()
        .enumerate()
        .filter(|(i, _)| {
            weights
                .iter()
                .enumerate()
                .all(|(j, w)| j == *i || !(w.leq(&weights[*i]) && *w != weights[*i]))
        })
        .map(|(_, &name)| name)
        .collect())
}
