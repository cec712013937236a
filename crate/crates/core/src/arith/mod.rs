//! Exact scalars: rationals, cyclotomic field elements, integer polynomials
//! in `q` and Laurent polynomials in `v = q^{1/2}`.
//!
//! Nothing in here touches floating point. Every zero test downstream is a
//! structural comparison of exact coefficients.

mod cyclo;
mod laurent;
mod poly;
pub mod rational;

pub use cyclo::{cyclotomic_modulus, euler_phi, two_cos, CycloNumber};
pub use laurent::LaurentPoly;
pub use poly::IntPoly;
pub use rational::BigRational;

pub(crate) fn bigint_to_json(n: &num_bigint::BigInt) -> serde_json::Value {
    use num_traits::ToPrimitive;
    match n.to_i64() {
        Some(small) => serde_json::Value::from(small),
        None => serde_json::Value::String(n.to_string()),
    }
}

pub(crate) fn bigint_from_json(value: &serde_json::Value) -> crate::Result<num_bigint::BigInt> {
    use crate::Error;
    match value {
        serde_json::Value::Number(n) => n
            .as_i64()
            .map(Into::into)
            .ok_or_else(|| Error::Parse(format!("`{n}` is not an integer"))),
        serde_json::Value::String(s) => s
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("`{s}` is not an integer"))),
        other => Err(Error::Parse(format!("expected an integer, found {other}"))),
    }
}
