use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::{Error, Result};

/// Sparse polynomial in one variable with integer coefficients.
///
/// Used both for `P_{y,w}` (variable `q`) and for the cyclotomic moduli
/// (variable `x`). Zero coefficients are never stored.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct IntPoly {
    coeffs: BTreeMap<u32, BigInt>,
}

impl IntPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(1, 0)
    }

    pub fn monomial(coeff: impl Into<BigInt>, degree: u32) -> Self {
        let mut p = Self::zero();
        p.add_term(degree, coeff.into());
        p
    }

    /// Builds from a dense coefficient list, lowest degree first.
    pub fn from_coeffs<T: Into<BigInt>>(coeffs: impl IntoIterator<Item = T>) -> Self {
        let mut p = Self::zero();
        for (d, c) in coeffs.into_iter().enumerate() {
            p.add_term(d as u32, c.into());
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<u32> {
        self.coeffs.keys().next_back().copied()
    }

    pub fn coeff(&self, degree: u32) -> BigInt {
        self.coeffs.get(&degree).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (u32, &BigInt)> {
        self.coeffs.iter().map(|(&d, c)| (d, c))
    }

    pub fn add_term(&mut self, degree: u32, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        let slot = self.coeffs.entry(degree).or_default();
        *slot += coeff;
        if slot.is_zero() {
            self.coeffs.remove(&degree);
        }
    }

    /// Multiplies by `x^k`.
    pub fn shift(&self, k: u32) -> Self {
        Self { coeffs: self.coeffs.iter().map(|(&d, c)| (d + k, c.clone())).collect() }
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.coeffs.iter().map(|(&d, c)| c * x.pow(d)).sum()
    }

    pub fn has_nonnegative_coeffs(&self) -> bool {
        self.coeffs.values().all(|c| !c.is_negative())
    }

    /// Dense coefficients `[c_0, ..., c_deg]`.
    pub fn to_dense(&self) -> Vec<BigInt> {
        let Some(deg) = self.degree() else {
            return Vec::new();
        };
        (0..=deg).map(|d| self.coeff(d)).collect()
    }

    /// Exact division by a monic polynomial.
    pub fn div_exact_monic(&self, divisor: &IntPoly) -> Result<IntPoly> {
        let d_deg = divisor.degree().ok_or(Error::DivisionByZero)?;
        if !divisor.coeff(d_deg).is_one() {
            return Err(Error::Precondition("divisor must be monic".into()));
        }
        let mut rem = self.to_dense();
        if rem.len() <= d_deg as usize {
            return if self.is_zero() {
                Ok(IntPoly::zero())
            } else {
                Err(Error::Precondition("division leaves a remainder".into()))
            };
        }
        let div = divisor.to_dense();
        let q_len = rem.len() - d_deg as usize;
        let mut quot = vec![BigInt::zero(); q_len];
        for i in (0..q_len).rev() {
            let lead = rem[i + d_deg as usize].clone();
            if lead.is_zero() {
                continue;
            }
            for (j, dc) in div.iter().enumerate() {
                rem[i + j] -= &lead * dc;
            }
            quot[i] = lead;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return Err(Error::Precondition("division leaves a remainder".into()));
        }
        Ok(IntPoly::from_coeffs(quot))
    }
}

impl Add for &IntPoly {
    type Output = IntPoly;
    fn add(self, rhs: &IntPoly) -> IntPoly {
        let mut out = self.clone();
        for (&d, c) in &rhs.coeffs {
            out.add_term(d, c.clone());
        }
        out
    }
}

impl Sub for &IntPoly {
    type Output = IntPoly;
    fn sub(self, rhs: &IntPoly) -> IntPoly {
        let mut out = self.clone();
        for (&d, c) in &rhs.coeffs {
            out.add_term(d, -c);
        }
        out
    }
}

impl Neg for &IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        IntPoly { coeffs: self.coeffs.iter().map(|(&d, c)| (d, -c)).collect() }
    }
}

impl Mul for &IntPoly {
    type Output = IntPoly;
    fn mul(self, rhs: &IntPoly) -> IntPoly {
        let mut out = IntPoly::zero();
        for (&da, ca) in &self.coeffs {
            for (&db, cb) in &rhs.coeffs {
                out.add_term(da + db, ca * cb);
            }
        }
        out
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (&d, c) in &self.coeffs {
            let (sign, abs) = if c.is_negative() { ("-", -c) } else { ("+", c.clone()) };
            if first {
                if sign == "-" {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            match d {
                0 => write!(f, "{abs}")?,
                _ if abs.is_one() => {}
                _ => write!(f, "{abs}*")?,
            }
            match d {
                0 => {}
                1 => write!(f, "q")?,
                _ => write!(f, "q^{d}")?,
            }
        }
        Ok(())
    }
}

impl IntPoly {
    /// JSON object mapping degree strings to integers, e.g. `{"0": 1, "1": 1}`.
    pub fn to_json(&self) -> serde_json::Value {
        let map = self
            .coeffs
            .iter()
            .map(|(d, c)| (d.to_string(), super::bigint_to_json(c)))
            .collect::<serde_json::Map<_, _>>();
        serde_json::Value::Object(map)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic() {
        let a = IntPoly::from_coeffs([1, 1]);
        let b = IntPoly::from_coeffs([-1, 1]);
        assert_eq!(&a * &b, IntPoly::from_coeffs([-1, 0, 1]));
        assert!((&a - &a).is_zero());
        assert_eq!((&a * &b).div_exact_monic(&b).unwrap(), a);
        assert!(a.div_exact_monic(&IntPoly::from_coeffs([0, 0, 1])).is_err());
        assert_eq!(a.to_string(), "1 + q");
        assert_eq!(a.eval(&BigInt::from(3)), BigInt::from(4));
    }
}
