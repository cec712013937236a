use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::IntPoly;
use crate::{Error, Result};

/// Integer Laurent polynomial in `v = q^{1/2}`. `v^i` stands for `q^{i/2}`.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    coeffs: BTreeMap<i32, BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(1, 0)
    }

    /// `v`.
    pub fn v() -> Self {
        Self::monomial(1, 1)
    }

    /// `v - v^{-1}`, the quadratic-relation coefficient of the normalized basis.
    pub fn v_minus_vinv() -> Self {
        let mut p = Self::v();
        p.add_term(-1, BigInt::from(-1));
        p
    }

    pub fn monomial(coeff: impl Into<BigInt>, degree: i32) -> Self {
        let mut p = Self::zero();
        p.add_term(degree, coeff.into());
        p
    }

    /// Embeds a polynomial in `q` via `q = v^2`.
    pub fn from_q_poly(p: &IntPoly) -> Self {
        let mut out = Self::zero();
        for (d, c) in p.terms() {
            out.add_term(2 * d as i32, c.clone());
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, degree: i32) -> BigInt {
        self.coeffs.get(&degree).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (i32, &BigInt)> {
        self.coeffs.iter().map(|(&d, c)| (d, c))
    }

    pub fn add_term(&mut self, degree: i32, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        let slot = self.coeffs.entry(degree).or_default();
        *slot += coeff;
        if slot.is_zero() {
            self.coeffs.remove(&degree);
        }
    }

    pub fn lowest_degree(&self) -> Result<i32> {
        self.coeffs.keys().next().copied().ok_or(Error::EmptyPolynomial)
    }

    pub fn highest_degree(&self) -> Result<i32> {
        self.coeffs.keys().next_back().copied().ok_or(Error::EmptyPolynomial)
    }

    /// Value at `v = 1`, i.e. the sum of the coefficients.
    pub fn evaluate_at_one(&self) -> BigInt {
        self.coeffs.values().sum()
    }

    /// Multiplies by `v^k`.
    pub fn shift(&self, k: i32) -> Self {
        Self { coeffs: self.coeffs.iter().map(|(&d, c)| (d + k, c.clone())).collect() }
    }

    /// The involution `v -> v^{-1}`.
    pub fn bar(&self) -> Self {
        Self { coeffs: self.coeffs.iter().map(|(&d, c)| (-d, c.clone())).collect() }
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        if k.is_zero() {
            return Self::zero();
        }
        Self { coeffs: self.coeffs.iter().map(|(&d, c)| (d, c * k)).collect() }
    }

    /// True when `(-1)^i c_i >= 0` for every coefficient `c_i` of `v^i`.
    pub fn is_sign_alternating(&self) -> bool {
        self.coeffs.iter().all(|(&d, c)| {
            if d.rem_euclid(2) == 0 {
                !c.is_negative()
            } else {
                !c.is_positive()
            }
        })
    }

    pub fn to_json(&self) -> serde_json::Value {
        let map = self
            .coeffs
            .iter()
            .map(|(d, c)| (d.to_string(), super::bigint_to_json(c)))
            .collect::<serde_json::Map<_, _>>();
        serde_json::Value::Object(map)
    }

    pub fn from_json(value: &serde_json::Value) -> Result<Self> {
        let map = value
            .as_object()
            .ok_or_else(|| Error::Parse("Laurent polynomial must be a JSON object".into()))?;
        let mut out = Self::zero();
        for (k, c) in map {
            let d: i32 = k
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("`{k}` is not a degree")))?;
            out.add_term(d, super::bigint_from_json(c)?);
        }
        Ok(out)
    }
}

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        for (&d, c) in &rhs.coeffs {
            self.add_term(d, c.clone());
        }
    }
}

impl SubAssign<&LaurentPoly> for LaurentPoly {
    fn sub_assign(&mut self, rhs: &LaurentPoly) {
        for (&d, c) in &rhs.coeffs {
            self.add_term(d, -c);
        }
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for LaurentPoly {
    type Output = LaurentPoly;
    fn add(mut self, rhs: LaurentPoly) -> LaurentPoly {
        self += &rhs;
        self
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Sub for LaurentPoly {
    type Output = LaurentPoly;
    fn sub(mut self, rhs: LaurentPoly) -> LaurentPoly {
        self -= &rhs;
        self
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly { coeffs: self.coeffs.iter().map(|(&d, c)| (d, -c)).collect() }
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (&da, ca) in &self.coeffs {
            for (&db, cb) in &rhs.coeffs {
                out.add_term(da + db, ca * cb);
            }
        }
        out
    }
}

impl Mul for LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: LaurentPoly) -> LaurentPoly {
        &self * &rhs
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (&d, c) in &self.coeffs {
            let (neg, abs) = (c.is_negative(), c.abs());
            match (first, neg) {
                (true, true) => write!(f, "-")?,
                (true, false) => {}
                (false, true) => write!(f, " - ")?,
                (false, false) => write!(f, " + ")?,
            }
            first = false;
            if d == 0 {
                write!(f, "{abs}")?;
                continue;
            }
            if !abs.is_one() {
                write!(f, "{abs}*")?;
            }
            match d {
                1 => write!(f, "v")?,
                _ => write!(f, "v^{d}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lp(terms: &[(i32, i64)]) -> LaurentPoly {
        let mut p = LaurentPoly::zero();
        for &(d, c) in terms {
            p.add_term(d, c.into());
        }
        p
    }

    #[test]
    fn examples() {
        let v = LaurentPoly::v();
        assert_eq!(&LaurentPoly::v_minus_vinv() * &v, lp(&[(2, 1), (0, -1)]));
        assert_eq!(LaurentPoly::v_minus_vinv().evaluate_at_one(), BigInt::zero());
        assert_eq!(lp(&[(-3, 1), (1, 1)]).lowest_degree(), Ok(-3));
        assert_eq!(LaurentPoly::zero().lowest_degree(), Err(Error::EmptyPolynomial));
    }

    #[test]
    fn sign_alternation() {
        assert!(lp(&[(1, -1), (-1, -1)]).is_sign_alternating());
        assert!(lp(&[(0, 2), (2, 1), (-3, -4)]).is_sign_alternating());
        assert!(!lp(&[(1, 1)]).is_sign_alternating());
    }

    #[test]
    fn json_roundtrip_and_display() {
        let p = lp(&[(-1, -1), (1, -1)]);
        let json = p.to_json();
        assert_eq!(json, serde_json::json!({"-1": -1, "1": -1}));
        assert_eq!(LaurentPoly::from_json(&json).unwrap(), p);
        assert_eq!(p.to_string(), "-v^-1 - v");
    }
}
