//! Coefficient fields for the oracle.
//!
//! A [`Field`] is a small context object that owns the arithmetic; elements
//! are plain values. This lets the prime be chosen at run time while exact
//! number types from the `num` ecosystem plug in through [`NumField`].

use std::fmt::Debug;
use std::marker::PhantomData;

use num_rational::BigRational;
use num_traits::Num;

use crate::error::{Error, Result};

pub trait Field: Clone + Debug + Send + Sync {
    type Elem: Clone + PartialEq + Debug + Send + Sync;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn int(&self, v: i64) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    /// `None` for zero.
    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem>;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    /// 0 for fields of characteristic zero.
    fn characteristic(&self) -> u64;

    /// `a * b + c`, the inner step of elimination.
    fn mul_add(&self, a: &Self::Elem, b: &Self::Elem, c: &Self::Elem) -> Self::Elem {
        self.add(&self.mul(a, b), c)
    }

    fn pow(&self, base: &Self::Elem, mut exp: u32) -> Self::Elem {
        let mut acc = self.one();
        let mut sq = base.clone();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(&acc, &sq);
            }
            sq = self.mul(&sq, &sq);
            exp >>= 1;
        }
        acc
    }

    /// Checks that `label` is a usable nonzero coordinate.
    fn coordinate(&self, label: u64) -> Result<Self::Elem> {
        let p = self.characteristic();
        if label == 0 || (p != 0 && label >= p) || label > i64::MAX as u64 {
            return Err(Error::LabelOutOfField { label, p });
        }
        Ok(self.int(label as i64))
    }
}

/// `Z/pZ` for a prime `p < 2^32`, elements stored in `[0, p)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PrimeField {
    p: u64,
}

pub const DEFAULT_PRIME: u64 = 32003;

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self> {
        if !(2..1 << 32).contains(&p) {
            return Err(Error::PrimeOutOfRange(p));
        }
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(Self { p })
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }
}

impl Default for PrimeField {
    fn default() -> Self {
        Self { p: DEFAULT_PRIME }
    }
}

impl Field for PrimeField {
    type Elem = u64;

    fn zero(&self) -> u64 {
        0
    }

    fn one(&self) -> u64 {
        1 % self.p
    }

    fn int(&self, v: i64) -> u64 {
        v.rem_euclid(self.p as i64) as u64
    }

    #[inline]
    fn add(&self, a: &u64, b: &u64) -> u64 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }

    #[inline]
    fn sub(&self, a: &u64, b: &u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }

    #[inline]
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        a * b % self.p
    }

    #[inline]
    fn mul_add(&self, a: &u64, b: &u64, c: &u64) -> u64 {
        (a * b + c) % self.p
    }

    fn neg(&self, a: &u64) -> u64 {
        if *a == 0 {
            0
        } else {
            self.p - a
        }
    }

    fn inv(&self, a: &u64) -> Option<u64> {
        if *a == 0 {
            return None;
        }
        // Fermat: a^(p-2)
        Some(self.pow(a, (self.p - 2) as u32))
    }

    #[inline]
    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }

    fn characteristic(&self) -> u64 {
        self.p
    }
}

/// Any exact field type implementing [`num_traits::Num`], such as
/// `BigRational`. Floating-point types satisfy the bounds but make ranks
/// meaningless; do not use them here.
#[derive(Debug)]
pub struct NumField<T>(PhantomData<fn() -> T>);

impl<T> NumField<T> {
    pub fn new() -> Self {
        Self(PhantomData)
    }
}

impl<T> Default for NumField<T> {
    fn default() -> Self {
        Self::new()
    }
}

impl<T> Clone for NumField<T> {
    fn clone(&self) -> Self {
        Self::new()
    }
}

impl<T> Field for NumField<T>
where
    T: Num + Clone + PartialEq + Debug + Send + Sync,
{
    type Elem = T;

    fn zero(&self) -> T {
        T::zero()
    }

    fn one(&self) -> T {
        T::one()
    }

    fn int(&self, v: i64) -> T {
        // double-and-add keeps the bound at `Num`
        let mut acc = T::zero();
        let mut unit = T::one();
        let mut m = v.unsigned_abs();
        while m > 0 {
            if m & 1 == 1 {
                acc = acc + unit.clone();
            }
            unit = unit.clone() + unit;
            m >>= 1;
        }
        if v < 0 {
            T::zero() - acc
        } else {
            acc
        }
    }

    fn add(&self, a: &T, b: &T) -> T {
        a.clone() + b.clone()
    }

    fn sub(&self, a: &T, b: &T) -> T {
        a.clone() - b.clone()
    }

    fn mul(&self, a: &T, b: &T) -> T {
        a.clone() * b.clone()
    }

    fn neg(&self, a: &T) -> T {
        T::zero() - a.clone()
    }

    fn inv(&self, a: &T) -> Option<T> {
        if a.is_zero() {
            None
        } else {
            Some(T::one() / a.clone())
        }
    }

    fn is_zero(&self, a: &T) -> bool {
        a.is_zero()
    }

    fn characteristic(&self) -> u64 {
        0
    }
}

/// The rationals, exact.
pub type Rationals = NumField<BigRational>;
