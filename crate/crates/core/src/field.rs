//! Coefficient fields: exact rationals and prime fields with a run-time modulus.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Arbitrary-precision rational, always kept in lowest terms with a positive denominator.
pub type Rational = num_rational::BigRational;

/// The prime used when a prime field is requested without an explicit modulus.
pub const DEFAULT_PRIME: u32 = 32003;

/// Field operations needed by the polynomial kernel.
///
/// Elements never need a free-standing zero or one: every constant is derived
/// from an existing element (`one_like`), so a prime-field element can carry its
/// own modulus.
pub trait Coeff: Clone + PartialEq + Eq + fmt::Debug + fmt::Display + Send + Sync + 'static {
    fn is_zero(&self) -> bool;
    fn is_one(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    /// Multiplicative inverse; `None` for zero.
    fn inv(&self) -> Option<Self>;
    fn one_like(&self) -> Self;
    /// True when the rendered form starts with a minus sign.
    fn is_negative(&self) -> bool;
}

impl Coeff for Rational {
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn is_one(&self) -> bool {
        One::is_one(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn inv(&self) -> Option<Self> {
        if Zero::is_zero(self) {
            None
        } else {
            Some(self.recip())
        }
    }
    fn one_like(&self) -> Self {
        Rational::one()
    }
    fn is_negative(&self) -> bool {
        Signed::is_negative(self)
    }
}

/// Rational from an integer.
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Element of the prime field of order `modulus`, stored as a value in `[0, modulus)`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Fp {
    value: u32,
    modulus: u32,
}

impl Fp {
    pub fn new(value: i64, modulus: u32) -> Self {
        let p = i64::from(modulus);
        Fp {
            value: value.rem_euclid(p) as u32,
            modulus,
        }
    }

    pub fn value(&self) -> u32 {
        self.value
    }

    pub fn modulus(&self) -> u32 {
        self.modulus
    }

    /// Image of a rational number; fails when the denominator vanishes mod p.
    pub fn from_rational(q: &Rational, modulus: u32) -> Result<Self> {
        let p = BigInt::from(modulus);
        let num = q.numer().mod_floor(&p).to_i64().expect("reduced value fits");
        let den = q.denom().mod_floor(&p).to_i64().expect("reduced value fits");
        let den = Fp::new(den, modulus)
            .inv()
            .ok_or_else(|| Error::Domain(format!("denominator of {q} vanishes mod {modulus}")))?;
        Ok(Fp::new(num, modulus).mul(&den))
    }

    fn pow(self, mut e: u64) -> Self {
        let mut base = self;
        let mut acc = Fp { value: 1 % self.modulus, modulus: self.modulus };
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }
}

impl fmt::Display for Fp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

impl Coeff for Fp {
    fn is_zero(&self) -> bool {
        self.value == 0
    }
    fn is_one(&self) -> bool {
        self.value == 1
    }
    fn add(&self, other: &Self) -> Self {
        debug_assert_eq!(self.modulus, other.modulus);
        let s = u64::from(self.value) + u64::from(other.value);
        Fp { value: (s % u64::from(self.modulus)) as u32, modulus: self.modulus }
    }
    fn sub(&self, other: &Self) -> Self {
        debug_assert_eq!(self.modulus, other.modulus);
        let s = u64::from(self.value) + u64::from(self.modulus) - u64::from(other.value);
        Fp { value: (s % u64::from(self.modulus)) as u32, modulus: self.modulus }
    }
    fn mul(&self, other: &Self) -> Self {
        debug_assert_eq!(self.modulus, other.modulus);
        let s = u64::from(self.value) * u64::from(other.value);
        Fp { value: (s % u64::from(self.modulus)) as u32, modulus: self.modulus }
    }
    fn neg(&self) -> Self {
        if self.value == 0 {
            *self
        } else {
            Fp { value: self.modulus - self.value, modulus: self.modulus }
        }
    }
    fn inv(&self) -> Option<Self> {
        if self.value == 0 {
            None
        } else {
            Some(self.pow(u64::from(self.modulus) - 2))
        }
    }
    fn one_like(&self) -> Self {
        Fp { value: 1, modulus: self.modulus }
    }
    fn is_negative(&self) -> bool {
        false
    }
}

pub fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    let n = u64::from(n);
    let mut k = 2u64;
    while k * k <= n {
        if n % k == 0 {
            return false;
        }
        k += 1;
    }
    true
}

/// Run-level choice of coefficient field.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[derive(Default)]
pub enum FieldChoice {
    #[default]
    Rational,
    Prime(u32),
}

impl fmt::Display for FieldChoice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldChoice::Rational => write!(f, "rational"),
            FieldChoice::Prime(p) => write!(f, "fp:{p}"),
        }
    }
}

impl FromStr for FieldChoice {
    type Err = Error;

    /// Accepts `rational`, `fp` (default prime) or `fp:<p>` with `p` an odd prime below 2^31.
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "rational" | "q" | "QQ" => Ok(FieldChoice::Rational),
            "fp" => Ok(FieldChoice::Prime(DEFAULT_PRIME)),
            _ => {
                let p = s
                    .strip_prefix("fp:")
                    .ok_or_else(|| Error::Precondition(format!("unknown field `{s}`")))?
                    .parse::<u32>()
                    .map_err(|e| Error::Precondition(format!("bad prime in `{s}`: {e}")))?;
                if p == 2 || !is_prime(p) || p >= 1 << 31 {
                    return Err(Error::Precondition(format!("{p} is not an odd prime below 2^31")));
                }
                Ok(FieldChoice::Prime(p))
            }
        }
    }
}
