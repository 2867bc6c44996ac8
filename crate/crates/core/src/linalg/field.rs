use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{invalid, Error, Result};

/// Field elements are stored as rationals. Over `F_p` they are kept as
/// integers in `[0, p)`.
pub type Scalar = BigRational;

/// Coefficient field: the rationals or a prime field.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Field {
    Rational,
    Prime(u64),
}

impl Field {
    pub fn prime(p: u64) -> Result<Field> {
        if p < 2 || p >= 1 << 31 || !is_prime(p) {
            return invalid(format!("{p} is not a prime below 2^31"));
        }
        Ok(Field::Prime(p))
    }

    pub fn characteristic(&self) -> u64 {
        match self {
            Field::Rational => 0,
            Field::Prime(p) => *p,
        }
    }

    /// True when the characteristic does not divide `order`.
    pub fn is_good_for(&self, order: usize) -> bool {
        match self {
            Field::Rational => true,
            Field::Prime(p) => order as u64 % p != 0,
        }
    }

    pub fn zero(&self) -> Scalar {
        Scalar::zero()
    }

    pub fn one(&self) -> Scalar {
        Scalar::one()
    }

    pub fn from_i64(&self, v: i64) -> Scalar {
        self.reduce(&Scalar::from_integer(BigInt::from(v)))
            .expect("integers reduce in every field")
    }

    /// Canonical representative. Fails over `F_p` when the denominator is
    /// divisible by `p`.
    pub fn reduce(&self, s: &Scalar) -> Result<Scalar> {
        match self {
            Field::Rational => Ok(s.clone()),
            Field::Prime(p) => Ok(Scalar::from_integer(BigInt::from(self.to_mod(s, *p)?))),
        }
    }

    /// Image of a rational in `Z/p`.
    pub fn to_mod(&self, s: &Scalar, p: u64) -> Result<u64> {
        let pb = BigInt::from(p);
        let n = s.numer().mod_floor(&pb).to_u64().unwrap();
        let d = s.denom().mod_floor(&pb).to_u64().unwrap();
        if d == 0 {
            return Err(Error::Invalid(format!("{s} has no image mod {p}")));
        }
        Ok(n * inv_mod(d, p) % p)
    }

    pub fn add(&self, a: &Scalar, b: &Scalar) -> Scalar {
        self.fix(a + b)
    }

    pub fn sub(&self, a: &Scalar, b: &Scalar) -> Scalar {
        self.fix(a - b)
    }

    pub fn mul(&self, a: &Scalar, b: &Scalar) -> Scalar {
        self.fix(a * b)
    }

    pub fn neg(&self, a: &Scalar) -> Scalar {
        self.fix(-a)
    }

    pub fn inv(&self, a: &Scalar) -> Option<Scalar> {
        if a.is_zero() {
            return None;
        }
        match self {
            Field::Rational => Some(a.recip()),
            Field::Prime(p) => {
                let v = a.to_integer().to_u64()?;
                Some(Scalar::from_integer(BigInt::from(inv_mod(v, *p))))
            }
        }
    }

    fn fix(&self, s: Scalar) -> Scalar {
        match self {
            Field::Rational => s,
            Field::Prime(p) => {
                let pb = BigInt::from(*p);
                Scalar::from_integer(s.to_integer().mod_floor(&pb))
            }
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rational => write!(f, "q"),
            Field::Prime(p) => write!(f, "p:{p}"),
        }
    }
}

impl FromStr for Field {
    type Err = Error;
    fn from_str(s: &str) -> Result<Field> {
        let t = s.trim();
        if t.eq_ignore_ascii_case("q") {
            return Ok(Field::Rational);
        }
        if let Some(rest) = t.strip_prefix("p:") {
            let p: u64 = rest
                .parse()
                .map_err(|_| Error::Invalid(format!("bad prime in field spec {s:?}")))?;
            return Field::prime(p);
        }
        invalid(format!("field must be \"q\" or \"p:P\", got {s:?}"))
    }
}

impl Serialize for Field {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Field {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Field, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Renders a scalar as `"p/q"` (or `"p"` for integers).
pub fn scalar_to_string(s: &Scalar) -> String {
    if s.is_integer() {
        s.numer().to_string()
    } else {
        format!("{}/{}", s.numer(), s.denom())
    }
}

pub fn parse_scalar(s: &str) -> Result<Scalar> {
    let t = s.trim();
    let bad = || Error::Invalid(format!("bad rational {s:?}"));
    match t.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| bad())?;
            let d: BigInt = d.trim().parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(bad());
            }
            Ok(Scalar::new(n, d))
        }
        None => Ok(Scalar::from_integer(t.parse().map_err(|_| bad())?)),
    }
}

/// Accepts a JSON string `"p/q"` or a JSON integer.
pub fn scalar_from_json(v: &serde_json::Value) -> Result<Scalar> {
    match v {
        serde_json::Value::String(s) => parse_scalar(s),
        serde_json::Value::Number(n) => match n.as_i64() {
            Some(i) => Ok(Scalar::from_integer(BigInt::from(i))),
            None => invalid(format!("non-integer number {n}; use a \"p/q\" string")),
        },
        _ => invalid(format!("expected a rational, got {v}")),
    }
}

pub(crate) fn inv_mod(a: u64, p: u64) -> u64 {
    pow_mod(a % p, p - 2, p)
}

pub(crate) fn pow_mod(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1 % p;
    a %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = r * a % p;
        }
        a = a * a % p;
        e >>= 1;
    }
    r
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Rational reconstruction of `a mod m` with numerator and denominator
/// bounded by `sqrt(m/2)`.
pub(crate) fn rational_reconstruct(a: &BigInt, m: &BigInt) -> Option<Scalar> {
    let bound = (m / BigInt::from(2)).sqrt();
    let (mut r0, mut r1) = (m.clone(), a.mod_floor(m));
    let (mut t0, mut t1) = (BigInt::zero(), BigInt::one());
    while r1 > bound {
        let q = &r0 / &r1;
        let r2 = &r0 - &q * &r1;
        let t2 = &t0 - &q * &t1;
        r0 = std::mem::replace(&mut r1, r2);
        t0 = std::mem::replace(&mut t1, t2);
    }
    if t1.is_zero() || t1.abs() > bound {
        return None;
    }
    Some(Scalar::new(r1, t1))
}
