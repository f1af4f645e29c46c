//! Prehomogeneous representations underlying low-degree ring counting.
//!
//! Three representations over an exact coefficient ring: a single scaled
//! coordinate (degree 2), binary cubic forms under `GL_2` (degree 3), and
//! pairs of ternary quadratic forms under `GL_2 x GL_3` (degree 4). Each
//! carries a group action, a multiplicative character `chi`, and a
//! discriminant polynomial satisfying `disc(g . v) = chi(g)^2 disc(v)`.
//! Degree 5 has no explicit discriminant here and is rejected at
//! construction.
//!
//! Torus weights of the coordinates and their componentwise partial order
//! live in [`weights`]; they feed the cusp-volume certificates.

pub mod binary;
pub mod json;
pub mod pairs;
pub mod ring;
pub mod sampling;
pub mod weights;

pub use binary::{chi_v2, chi_v3, substitute_binary, FormV2, FormV3, Mat2};
pub use json::FormJson;
pub use pairs::{
    chi_v4, four_det, four_det_polar, transform_quadric, FormV4, GroupElemV4, Mat3, QuadCoeffs,
};
pub use ring::{ResidueCtx, ResidueElem, Ring};
pub use weights::{
    coordinate_names, minimal_coordinates, torus_weight, torus_weight_by_index, weight_leq,
    WeightVector, V3_COORDS, V4_COORDS,
};

use crate::{Error, Result};

/// A vector in one of the supported representations.
#[derive(Clone, Debug, PartialEq)]
pub enum Form<R: Ring> {
    V2(FormV2<R>),
    V3(FormV3<R>),
    V4(FormV4<R>),
}

/// A group element matching one of the supported representations.
#[derive(Clone, Debug, PartialEq)]
pub enum GroupElem<R: Ring> {
    /// A unit of the coefficient ring.
    V2(R),
    /// An invertible 2 x 2 matrix.
    V3(Mat2<R>),
    /// A pair of invertible matrices of sizes 2 and 3.
    V4(GroupElemV4<R>),
}

impl<R: Ring> Form<R> {
    /// Builds a form of the given degree from its coefficient list
    /// (1 coefficient for degree 2, 4 for degree 3, 12 for degree 4).
    pub fn from_coeff_vec(n: u32, coeffs: Vec<R>) -> Result<Self> {
        match n {
            2 => {
                let [v]: [R; 1] = coeffs
                    .try_into()
                    .map_err(|_| Error::invalid("a degree-2 form takes 1 coefficient"))?;
                Ok(Form::V2(FormV2::new(v)))
            }
            3 => {
                let [a, b, c, d]: [R; 4] = coeffs
                    .try_into()
                    .map_err(|_| Error::invalid("a degree-3 form takes 4 coefficients"))?;
                Ok(Form::V3(FormV3::new(a, b, c, d)))
            }
            4 => Ok(Form::V4(FormV4::from_slice(&coeffs)?)),
            _ => Err(Error::UnsupportedDegree),
        }
    }

    pub fn n(&self) -> u32 {
        match self {
            Form::V2(_) => 2,
            Form::V3(_) => 3,
            Form::V4(_) => 4,
        }
    }

    /// Coefficients in storage order.
    pub fn to_coeff_vec(&self) -> Vec<R> {
        match self {
            Form::V2(f) => vec![f.v.clone()],
            Form::V3(f) => f.to_vec(),
            Form::V4(f) => f.to_vec(),
        }
    }

    pub fn disc(&self) -> R {
        match self {
            Form::V2(f) => f.disc(),
            Form::V3(f) => f.disc(),
            Form::V4(f) => f.disc(),
        }
    }

    /// Applies a group element of the matching degree.
    pub fn act(&self, g: &GroupElem<R>) -> Result<Self> {
        match (self, g) {
            (Form::V2(f), GroupElem::V2(g)) => Ok(Form::V2(f.act(g)?)),
            (Form::V3(f), GroupElem::V3(g)) => Ok(Form::V3(f.act(g)?)),
            (Form::V4(f), GroupElem::V4(g)) => Ok(Form::V4(f.act(g)?)),
            _ => Err(Error::invalid(
                "group element degree does not match form degree",
            )),
        }
    }
}

impl<R: Ring> GroupElem<R> {
    pub fn n(&self) -> u32 {
        match self {
            GroupElem::V2(_) => 2,
            GroupElem::V3(_) => 3,
            GroupElem::V4(_) => 4,
        }
    }

    /// The character value of this element.
    pub fn chi(&self) -> R {
        match self {
            GroupElem::V2(g) => chi_v2(g),
            GroupElem::V3(g) => chi_v3(g),
            GroupElem::V4(g) => chi_v4(g),
        }
    }

    /// Group law; degrees must match.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        match (self, other) {
            (GroupElem::V2(a), GroupElem::V2(b)) => Ok(GroupElem::V2(a.mul(b))),
            (GroupElem::V3(a), GroupElem::V3(b)) => Ok(GroupElem::V3(a.mul(b))),
            (GroupElem::V4(a), GroupElem::V4(b)) => Ok(GroupElem::V4(a.mul(b))),
            _ => Err(Error::invalid("group element degrees differ")),
        }
    }
}
