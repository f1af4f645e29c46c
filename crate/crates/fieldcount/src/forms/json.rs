//! JSON serialization of forms with `F_q[t]` coefficients.
//!
//! A form is the object `{"n": 3, "coeffs": ["1", "0", "2*t+1", "t^2"]}`.
//! Coefficient strings use the polynomial grammar of [`crate::arith::parse`];
//! the degree-4 coefficient order is the `a` block then the `b` block, each
//! as `11, 12, 13, 22, 23, 33`. Forms over the base field itself use the
//! same shape with constant coefficient strings.

use serde::{Deserialize, Serialize};

use super::Form;
use crate::arith::{parse, FqCtx, FqElem, Poly};
use crate::{Error, Result};

/// Serialized form: degree and coefficient strings in storage order.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct FormJson {
    pub n: u32,
    pub coeffs: Vec<String>,
}

impl FormJson {
    pub fn from_poly_form(form: &Form<Poly<FqElem>>) -> Self {
        FormJson {
            n: form.n(),
            coeffs: form.to_coeff_vec().iter().map(|c| c.to_string()).collect(),
        }
    }

    pub fn from_fq_form(form: &Form<FqElem>) -> Self {
        FormJson {
            n: form.n(),
            coeffs: form.to_coeff_vec().iter().map(|c| c.to_string()).collect(),
        }
    }

    /// Parses the coefficients as polynomials in `t` over the given field.
    pub fn to_poly_form(&self, ctx: &FqCtx) -> Result<Form<Poly<FqElem>>> {
        let coeffs = self
            .coeffs
            .iter()
            .map(|s| parse::parse_poly(ctx, s))
            .collect::<Result<Vec<_>>>()?;
        Form::from_coeff_vec(self.n, coeffs)
    }

    /// Parses the coefficients as field elements (degree-0 polynomials).
    pub fn to_fq_form(&self, ctx: &FqCtx) -> Result<Form<FqElem>> {
        let coeffs = self
            .coeffs
            .iter()
            .map(|s| parse::parse_elem(ctx, s))
            .collect::<Result<Vec<_>>>()?;
        Form::from_coeff_vec(self.n, coeffs)
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string(self).expect("plain struct serializes")
    }

    pub fn from_json_str(input: &str) -> Result<Self> {
        serde_json::from_str(input).map_err(|e| Error::parse(format!("form json: {e}")))
    }
}
