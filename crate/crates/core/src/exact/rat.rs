//! Exact rational scalars.

use std::fmt;
use std::ops::{Add, AddAssign, Div, DivAssign, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{de, Deserialize, Deserializer, Serialize, Serializer};

/// Arbitrary-precision rational number, always in lowest terms with a
/// positive denominator.
///
/// Serializes as the string `"p/q"`, with `/q` omitted when `q = 1`.
#[derive(Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Rat(BigRational);

impl Rat {
    pub fn zero() -> Self {
        Rat(BigRational::zero())
    }

    pub fn one() -> Self {
        Rat(BigRational::one())
    }

    /// Builds `numer / denom`, reducing to lowest terms.
    ///
    /// Panics when `denom` is zero.
    pub fn new(numer: BigInt, denom: BigInt) -> Self {
        Rat(BigRational::new(numer, denom))
    }

    pub fn from_frac(numer: i64, denom: i64) -> Self {
        assert!(denom != 0, "zero denominator");
        Rat(BigRational::new(BigInt::from(numer), BigInt::from(denom)))
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_one()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn abs(&self) -> Self {
        Rat(self.0.abs())
    }

    /// Multiplicative inverse.  Panics on zero.
    pub fn recip(&self) -> Self {
        assert!(!self.is_zero(), "inverse of zero");
        Rat(self.0.recip())
    }

    /// Integer power, with negative exponents inverting.  Panics on `0^e`
    /// for `e < 0`.
    pub fn pow(&self, exp: i64) -> Self {
        if exp == 0 {
            return Rat::one();
        }
        let base = if exp < 0 { self.recip() } else { self.clone() };
        let mut acc = Rat::one();
        let mut sq = base;
        let mut e = exp.unsigned_abs();
        while e > 0 {
            if e & 1 == 1 {
                acc *= &sq;
            }
            e >>= 1;
            if e > 0 {
                sq = &sq * &sq;
            }
        }
        acc
    }

    pub fn to_f64(&self) -> f64 {
        self.0.to_f64().expect("rational out of f64 range")
    }
}

impl From<i64> for Rat {
    fn from(v: i64) -> Self {
        Rat(BigRational::from_integer(BigInt::from(v)))
    }
}

impl From<u64> for Rat {
    fn from(v: u64) -> Self {
        Rat(BigRational::from_integer(BigInt::from(v)))
    }
}

impl From<BigInt> for Rat {
    fn from(v: BigInt) -> Self {
        Rat(BigRational::from_integer(v))
    }
}

/// `n!` as a rational.
pub fn factorial(n: u64) -> Rat {
    let mut acc = BigInt::one();
    for k in 2..=n {
        acc *= BigInt::from(k);
    }
    Rat::from(acc)
}

macro_rules! forward_binop {
    ($Op:ident, $method:ident, $OpAssign:ident, $assign:ident) => {
        impl<'a> $OpAssign<&'a Rat> for Rat {
            fn $assign(&mut self, rhs: &'a Rat) {
                let lhs = std::mem::take(&mut self.0);
                self.0 = $Op::$method(lhs, &rhs.0);
            }
        }
        impl $OpAssign<Rat> for Rat {
            fn $assign(&mut self, rhs: Rat) {
                self.$assign(&rhs);
            }
        }
        impl<'a> $Op<&'a Rat> for &Rat {
            type Output = Rat;
            fn $method(self, rhs: &'a Rat) -> Rat {
                let mut out = self.clone();
                out.$assign(rhs);
                out
            }
        }
        impl $Op<Rat> for Rat {
            type Output = Rat;
            fn $method(mut self, rhs: Rat) -> Rat {
                self.$assign(&rhs);
                self
            }
        }
        impl<'a> $Op<&'a Rat> for Rat {
            type Output = Rat;
            fn $method(mut self, rhs: &'a Rat) -> Rat {
                self.$assign(rhs);
                self
            }
        }
        impl $Op<Rat> for &Rat {
            type Output = Rat;
            fn $method(self, rhs: Rat) -> Rat {
                let mut out = self.clone();
                out.$assign(&rhs);
                out
            }
        }
    };
}

forward_binop!(Add, add, AddAssign, add_assign);
forward_binop!(Sub, sub, SubAssign, sub_assign);
forward_binop!(Mul, mul, MulAssign, mul_assign);
forward_binop!(Div, div, DivAssign, div_assign);

impl Neg for Rat {
    type Output = Rat;
    fn neg(self) -> Rat {
        Rat(-self.0)
    }
}

impl Neg for &Rat {
    type Output = Rat;
    fn neg(self) -> Rat {
        Rat(-self.0.clone())
    }
}

impl fmt::Display for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_integer() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl fmt::Debug for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl FromStr for Rat {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.split_once('/') {
            Some((p, q)) => {
                let numer: BigInt = p.trim().parse().map_err(|e| format!("{e}"))?;
                let denom: BigInt = q.trim().parse().map_err(|e| format!("{e}"))?;
                if denom.is_zero() {
                    return Err("zero denominator".into());
                }
                Ok(Rat::new(numer, denom))
            }
            None => {
                let numer: BigInt = s.trim().parse().map_err(|e| format!("{e}"))?;
                Ok(Rat::from(numer))
            }
        }
    }
}

impl Serialize for Rat {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Rat {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(de::Error::custom)
    }
}
