//! Scalar arithmetic back ends used by the elimination routines.

use num_rational::BigRational;
use num_traits::{One, Zero};

use super::field::{inv_mod, Field, Scalar};
use crate::error::Result;

pub trait Arith: Sync + Send {
    type E: Clone + Send + Sync + std::fmt::Debug;
    fn zero(&self) -> Self::E;
    fn one(&self) -> Self::E;
    fn is_zero(&self, a: &Self::E) -> bool;
    fn from_scalar(&self, s: &Scalar) -> Result<Self::E>;
    fn from_i64(&self, v: i64) -> Self::E;
    fn add(&self, a: &Self::E, b: &Self::E) -> Self::E;
    fn sub(&self, a: &Self::E, b: &Self::E) -> Self::E;
    fn mul(&self, a: &Self::E, b: &Self::E) -> Self::E;
    fn neg(&self, a: &Self::E) -> Self::E;
    fn inv(&self, a: &Self::E) -> Self::E;
}

/// Arithmetic in `Z/p` for a prime `p < 2^31`.
#[derive(Clone, Copy, Debug)]
pub struct ModP(pub u64);

impl Arith for ModP {
    type E = u64;
    #[inline]
    fn zero(&self) -> u64 {
        0
    }
    #[inline]
    fn one(&self) -> u64 {
        1
    }
    #[inline]
    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }
    fn from_scalar(&self, s: &Scalar) -> Result<u64> {
        Field::Rational.to_mod(s, self.0)
    }
    #[inline]
    fn from_i64(&self, v: i64) -> u64 {
        v.rem_euclid(self.0 as i64) as u64
    }
    #[inline]
    fn add(&self, a: &u64, b: &u64) -> u64 {
        let s = a + b;
        if s >= self.0 {
            s - self.0
        } else {
            s
        }
    }
    #[inline]
    fn sub(&self, a: &u64, b: &u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.0 - b
        }
    }
    #[inline]
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        a * b % self.0
    }
    #[inline]
    fn neg(&self, a: &u64) -> u64 {
        if *a == 0 {
            0
        } else {
            self.0 - a
        }
    }
    fn inv(&self, a: &u64) -> u64 {
        inv_mod(*a, self.0)
    }
}

/// Exact rational arithmetic.
#[derive(Clone, Copy, Debug)]
pub struct Exact;

impl Arith for Exact {
    type E = BigRational;
    fn zero(&self) -> BigRational {
        BigRational::zero()
    }
    fn one(&self) -> BigRational {
        BigRational::one()
    }
    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }
    fn from_scalar(&self, s: &Scalar) -> Result<BigRational> {
        Ok(s.clone())
    }
    fn from_i64(&self, v: i64) -> BigRational {
        BigRational::from_integer(v.into())
    }
    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }
    fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a - b
    }
    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }
    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }
    fn inv(&self, a: &BigRational) -> BigRational {
        a.recip()
    }
}
