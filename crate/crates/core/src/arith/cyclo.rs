//! The cyclotomic field `Q(zeta_n)` as `Q[x] / Phi_n(x)` in the power basis.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::rational::{format_rational, parse_rational};
use super::{BigRational, IntPoly};
use crate::{Error, Result};

fn modulus_cache() -> &'static RwLock<HashMap<u32, Arc<IntPoly>>> {
    static CACHE: OnceLock<RwLock<HashMap<u32, Arc<IntPoly>>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

fn cached_modulus(n: u32) -> Arc<IntPoly> {
    assert!(n >= 1, "cyclotomic conductor must be positive");
    if let Some(p) = modulus_cache().read().unwrap().get(&n) {
        return Arc::clone(p);
    }
    // x^n - 1 divided by Phi_d for every proper divisor d.
    let mut p = IntPoly::monomial(1, n);
    p.add_term(0, BigInt::from(-1));
    for d in (1..n).filter(|d| n.is_multiple_of(*d)) {
        p = p
            .div_exact_monic(&cached_modulus(d))
            .expect("Phi_d divides x^n - 1");
    }
    let p = Arc::new(p);
    modulus_cache().write().unwrap().insert(n, Arc::clone(&p));
    p
}

/// The `n`-th cyclotomic polynomial.
pub fn cyclotomic_modulus(n: u32) -> Result<IntPoly> {
    if n == 0 {
        return Err(Error::Precondition("cyclotomic index must be positive".into()));
    }
    Ok(cached_modulus(n).as_ref().clone())
}

pub fn euler_phi(n: u32) -> u32 {
    let mut result = n;
    let mut m = n;
    let mut p = 2;
    while p * p <= m {
        if m.is_multiple_of(p) {
            while m.is_multiple_of(p) {
                m /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if m > 1 {
        result -= result / m;
    }
    result
}

/// Element of `Q(zeta_conductor)`.
///
/// `coeffs[i]` is the coefficient of `zeta^i`; the vector always has length
/// `phi(conductor)`. Arithmetic requires equal conductors: use
/// [`CycloNumber::promote`] to move into a larger field.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CycloNumber {
    conductor: u32,
    coeffs: Vec<BigRational>,
}

fn reduce(conductor: u32, mut v: Vec<BigRational>) -> Vec<BigRational> {
    let modulus = cached_modulus(conductor);
    let phi = modulus.to_dense();
    let deg = phi.len() - 1;
    for i in (deg..v.len()).rev() {
        if v[i].is_zero() {
            continue;
        }
        let lead = std::mem::take(&mut v[i]);
        for (j, c) in phi.iter().enumerate().take(deg) {
            if !c.is_zero() {
                v[i - deg + j] -= &lead * BigRational::from_integer(c.clone());
            }
        }
    }
    v.resize(deg, BigRational::zero());
    v
}

fn trim(p: &mut Vec<BigRational>) {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
}

fn poly_mul(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigRational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if !y.is_zero() {
                out[i + j] += x * y;
            }
        }
    }
    out
}

fn poly_sub(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let mut out = vec![BigRational::zero(); a.len().max(b.len())];
    for (i, x) in a.iter().enumerate() {
        out[i] += x;
    }
    for (i, y) in b.iter().enumerate() {
        out[i] -= y;
    }
    trim(&mut out);
    out
}

/// Long division of trimmed dense polynomials; `b` must be nonzero.
fn poly_divrem(a: &[BigRational], b: &[BigRational]) -> (Vec<BigRational>, Vec<BigRational>) {
    let mut rem = a.to_vec();
    trim(&mut rem);
    let db = b.len() - 1;
    let lead_inv = b[db].recip();
    if rem.len() < b.len() {
        return (Vec::new(), rem);
    }
    let mut quot = vec![BigRational::zero(); rem.len() - db];
    for i in (0..quot.len()).rev() {
        let c = &rem[i + db] * &lead_inv;
        if c.is_zero() {
            continue;
        }
        for (j, bc) in b.iter().enumerate() {
            rem[i + j] -= &c * bc;
        }
        quot[i] = c;
    }
    trim(&mut rem);
    trim(&mut quot);
    (quot, rem)
}

impl CycloNumber {
    /// Reduces an arbitrary polynomial in `zeta` modulo `Phi_conductor`.
    pub fn from_poly(conductor: u32, coeffs: Vec<BigRational>) -> Self {
        Self { conductor, coeffs: reduce(conductor, coeffs) }
    }

    pub fn zero(conductor: u32) -> Self {
        Self::from_poly(conductor, Vec::new())
    }

    pub fn one(conductor: u32) -> Self {
        Self::from_rational(conductor, BigRational::one())
    }

    pub fn from_rational(conductor: u32, r: BigRational) -> Self {
        Self::from_poly(conductor, vec![r])
    }

    pub fn from_int(conductor: u32, n: i64) -> Self {
        Self::from_rational(conductor, BigRational::from_integer(n.into()))
    }

    /// `zeta^k` for any integer `k`.
    pub fn zeta_pow(conductor: u32, k: i64) -> Self {
        let e = k.rem_euclid(conductor as i64) as usize;
        let mut v = vec![BigRational::zero(); e + 1];
        v[e] = BigRational::one();
        Self::from_poly(conductor, v)
    }

    pub fn conductor(&self) -> u32 {
        self.conductor
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.iter().enumerate().all(|(i, c)| if i == 0 { c.is_one() } else { c.is_zero() })
    }

    /// The rational value, if this number lies in `Q`.
    pub fn to_rational(&self) -> Option<BigRational> {
        if self.coeffs.iter().skip(1).all(Zero::is_zero) {
            Some(self.coeffs.first().cloned().unwrap_or_default())
        } else {
            None
        }
    }

    /// Maps `zeta_n -> zeta_N^{N/n}`.
    pub fn promote(&self, to: u32) -> Result<Self> {
        if to == 0 || !to.is_multiple_of(self.conductor) {
            return Err(Error::ConductorNotDivisible { conductor: to, divisor: self.conductor });
        }
        let step = (to / self.conductor) as usize;
        let mut v = vec![BigRational::zero(); step * self.coeffs.len().max(1)];
        for (i, c) in self.coeffs.iter().enumerate() {
            v[i * step] = c.clone();
        }
        Ok(Self::from_poly(to, v))
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.conductor == other.conductor {
            Ok(())
        } else {
            Err(Error::ConductorMismatch(self.conductor, other.conductor))
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect();
        Ok(Self { conductor: self.conductor, coeffs })
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a - b).collect();
        Ok(Self { conductor: self.conductor, coeffs })
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        if self.coeffs.len() == 1 {
            let c = &self.coeffs[0] * &other.coeffs[0];
            return Ok(Self { conductor: self.conductor, coeffs: vec![c] });
        }
        Ok(Self::from_poly(self.conductor, poly_mul(&self.coeffs, &other.coeffs)))
    }

    /// Multiplicative inverse by the extended Euclidean algorithm against
    /// `Phi_n`, which is irreducible so every nonzero residue is a unit.
    pub fn inverse(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if let Some(r) = self.to_rational() {
            return Ok(Self::from_rational(self.conductor, r.recip()));
        }
        let modulus: Vec<BigRational> = cached_modulus(self.conductor)
            .to_dense()
            .into_iter()
            .map(BigRational::from_integer)
            .collect();
        let mut a = self.coeffs.clone();
        trim(&mut a);
        // Invariant: s_i * self == r_i (mod Phi_n).
        let (mut r0, mut r1) = (modulus, a);
        let (mut s0, mut s1) = (Vec::new(), vec![BigRational::one()]);
        while !r1.is_empty() {
            let (q, r) = poly_divrem(&r0, &r1);
            let s2 = poly_sub(&s0, &poly_mul(&q, &s1));
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s2);
        }
        debug_assert_eq!(r0.len(), 1, "gcd with an irreducible modulus is a unit");
        let g_inv = r0[0].recip();
        let v = s0.iter().map(|c| c * &g_inv).collect();
        Ok(Self::from_poly(self.conductor, v))
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self> {
        self.checked_mul(&other.inverse()?)
    }

    /// Complex conjugation `zeta -> zeta^{-1}`.
    pub fn conj(&self) -> Self {
        let n = self.conductor as i64;
        let mut out = Self::zero(self.conductor);
        for (i, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                let term = Self::zeta_pow(self.conductor, n - i as i64);
                out = &out + &term.scale(c);
            }
        }
        out
    }

    pub fn scale(&self, r: &BigRational) -> Self {
        Self { conductor: self.conductor, coeffs: self.coeffs.iter().map(|c| c * r).collect() }
    }

    /// `{"conductor": n, "coeffs": ["p/q", ...]}`.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "conductor": self.conductor,
            "coeffs": self.coeffs.iter().map(format_rational).collect::<Vec<_>>(),
        })
    }

    /// Parses either the object form or a rational scalar (`"p/q"` or an
    /// integer), promoting into `Q(zeta_conductor)`.
    pub fn from_json_in(value: &serde_json::Value, conductor: u32) -> Result<Self> {
        match value {
            serde_json::Value::String(s) => Ok(Self::from_rational(conductor, parse_rational(s)?)),
            serde_json::Value::Number(n) => {
                let n = n
                    .as_i64()
                    .ok_or_else(|| Error::Parse(format!("`{n}` is not an exact scalar")))?;
                Ok(Self::from_int(conductor, n))
            }
            serde_json::Value::Object(_) => Self::from_json(value)?.promote(conductor),
            other => Err(Error::Parse(format!("expected a scalar, found {other}"))),
        }
    }

    pub fn from_json(value: &serde_json::Value) -> Result<Self> {
        match value {
            serde_json::Value::Object(map) => {
                let conductor = map
                    .get("conductor")
                    .and_then(serde_json::Value::as_u64)
                    .filter(|&n| n >= 1 && n <= u32::MAX as u64)
                    .ok_or_else(|| Error::Parse("cyclotomic scalar needs a positive `conductor`".into()))?
                    as u32;
                let coeffs = map
                    .get("coeffs")
                    .and_then(serde_json::Value::as_array)
                    .ok_or_else(|| Error::Parse("cyclotomic scalar needs a `coeffs` array".into()))?;
                let coeffs = coeffs
                    .iter()
                    .map(|c| match c {
                        serde_json::Value::String(s) => parse_rational(s),
                        serde_json::Value::Number(n) => n
                            .as_i64()
                            .map(|k| BigRational::from_integer(k.into()))
                            .ok_or_else(|| Error::Parse(format!("`{n}` is not exact"))),
                        other => Err(Error::Parse(format!("bad coefficient {other}"))),
                    })
                    .collect::<Result<Vec<_>>>()?;
                Ok(Self::from_poly(conductor, coeffs))
            }
            _ => Self::from_json_in(value, 1),
        }
    }
}

/// `2 cos(k pi / m)` as `zeta^{ek} + zeta^{-ek}` in `Q(zeta_conductor)`, where
/// `e = conductor / 2m`.
pub fn two_cos(k: i64, m: u32, conductor: u32) -> Result<CycloNumber> {
    if m == 0 || !conductor.is_multiple_of(2 * m) {
        return Err(Error::ConductorNotDivisible { conductor, divisor: 2 * m });
    }
    let e = (conductor / (2 * m)) as i64;
    Ok(&CycloNumber::zeta_pow(conductor, e * k) + &CycloNumber::zeta_pow(conductor, -e * k))
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl $trait for &CycloNumber {
            type Output = CycloNumber;
            /// Panics on conductor mismatch; see the `checked_*` variants.
            fn $method(self, rhs: &CycloNumber) -> CycloNumber {
                self.$checked(rhs).unwrap_or_else(|e| panic!("{e}"))
            }
        }
        impl $trait for CycloNumber {
            type Output = CycloNumber;
            fn $method(self, rhs: CycloNumber) -> CycloNumber {
                (&self).$method(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, checked_add);
forward_binop!(Sub, sub, checked_sub);
forward_binop!(Mul, mul, checked_mul);
forward_binop!(Div, div, checked_div);

impl Neg for &CycloNumber {
    type Output = CycloNumber;
    fn neg(self) -> CycloNumber {
        CycloNumber { conductor: self.conductor, coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl Neg for CycloNumber {
    type Output = CycloNumber;
    fn neg(self) -> CycloNumber {
        -&self
    }
}

impl fmt::Display for CycloNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(r) = self.to_rational() {
            return write!(f, "{r}");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            let abs = c.abs();
            match (first, c.is_negative()) {
                (true, true) => write!(f, "-")?,
                (true, false) => {}
                (false, true) => write!(f, " - ")?,
                (false, false) => write!(f, " + ")?,
            }
            first = false;
            let zeta = match i {
                0 => String::new(),
                1 => format!("z{}", self.conductor),
                _ => format!("z{}^{i}", self.conductor),
            };
            match (i, abs.is_one()) {
                (0, _) => write!(f, "{abs}")?,
                (_, true) => write!(f, "{zeta}")?,
                (_, false) => write!(f, "{abs}*{zeta}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for CycloNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Q(z{})[{self}]", self.conductor)
    }
}
