//! Truncated power series with explicit truncation order.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::{ExactError, Poly, Rat};

/// Power series truncated at an explicit (exclusive) order: exactly `order`
/// coefficients are stored, for exponents `0 .. order`.
///
/// Binary operations return the minimum of the two orders, so precision loss
/// is always visible in the result's order.
#[derive(Clone, PartialEq, Eq)]
pub struct Series {
    coeffs: Vec<Rat>,
}

impl Series {
    /// Series with the given coefficients; the order is their count.
    pub fn from_coeffs(coeffs: Vec<Rat>) -> Self {
        Series { coeffs }
    }

    pub fn zero(order: usize) -> Self {
        Series {
            coeffs: vec![Rat::zero(); order],
        }
    }

    pub fn one(order: usize) -> Self {
        let mut s = Series::zero(order);
        if order > 0 {
            s.coeffs[0] = Rat::one();
        }
        s
    }

    /// The identity series `x`.
    pub fn x(order: usize) -> Self {
        let mut s = Series::zero(order);
        if order > 1 {
            s.coeffs[1] = Rat::one();
        }
        s
    }

    pub fn from_poly(p: &Poly, order: usize) -> Self {
        let coeffs = (0..order).map(|i| p.coeff(i)).collect();
        Series { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len()
    }

    /// Coefficient of `x^k`.  Panics beyond the truncation order, where the
    /// coefficient is unknown rather than zero.
    pub fn coeff(&self, k: usize) -> Rat {
        assert!(k < self.order(), "coefficient beyond truncation order");
        self.coeffs[k].clone()
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn truncate(&self, order: usize) -> Series {
        assert!(order <= self.order(), "cannot extend a truncated series");
        Series {
            coeffs: self.coeffs[..order].to_vec(),
        }
    }

    pub fn scale(&self, c: &Rat) -> Series {
        Series {
            coeffs: self.coeffs.iter().map(|x| x * c).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Rat::is_zero)
    }

    /// Composition `self(inner(x))`.  The inner series must have zero
    /// constant term, otherwise the composition would need coefficients of
    /// `self` beyond its truncation.
    pub fn compose(&self, inner: &Series) -> Result<Series, ExactError> {
        if inner.order() > 0 && !inner.coeffs[0].is_zero() {
            return Err(ExactError::NonzeroConstantTerm);
        }
        let order = self.order().min(inner.order());
        let mut acc = Series::zero(order);
        // Horner: acc = (... (c_{m-1} * inner + c_{m-2}) * inner + ...) + c_0
        for k in (0..order).rev() {
            acc = &acc * inner;
            acc.coeffs[0] += &self.coeffs[k];
        }
        Ok(acc)
    }
}

impl Add for &Series {
    type Output = Series;
    fn add(self, rhs: &Series) -> Series {
        let order = self.order().min(rhs.order());
        let coeffs = (0..order)
            .map(|i| &self.coeffs[i] + &rhs.coeffs[i])
            .collect();
        Series { coeffs }
    }
}

impl Sub for &Series {
    type Output = Series;
    fn sub(self, rhs: &Series) -> Series {
        let order = self.order().min(rhs.order());
        let coeffs = (0..order)
            .map(|i| &self.coeffs[i] - &rhs.coeffs[i])
            .collect();
        Series { coeffs }
    }
}

impl Mul for &Series {
    type Output = Series;
    fn mul(self, rhs: &Series) -> Series {
        let order = self.order().min(rhs.order());
        let mut coeffs = vec![Rat::zero(); order];
        for (i, a) in self.coeffs.iter().enumerate().take(order) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate().take(order - i) {
                if !b.is_zero() {
                    coeffs[i + j] += a * b;
                }
            }
        }
        Series { coeffs }
    }
}

macro_rules! forward_owned {
    ($Op:ident, $method:ident) => {
        impl $Op<Series> for Series {
            type Output = Series;
            fn $method(self, rhs: Series) -> Series {
                $Op::$method(&self, &rhs)
            }
        }
        impl $Op<&Series> for Series {
            type Output = Series;
            fn $method(self, rhs: &Series) -> Series {
                $Op::$method(&self, rhs)
            }
        }
        impl $Op<Series> for &Series {
            type Output = Series;
            fn $method(self, rhs: Series) -> Series {
                $Op::$method(self, &rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for &Series {
    type Output = Series;
    fn neg(self) -> Series {
        Series {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Neg for Series {
    type Output = Series;
    fn neg(self) -> Series {
        -&self
    }
}

impl fmt::Display for Series {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut wrote = false;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if wrote {
                write!(f, " + ")?;
            }
            wrote = true;
            match i {
                0 => write!(f, "{c}")?,
                1 => write!(f, "{c}*x")?,
                _ => write!(f, "{c}*x^{i}")?,
            }
        }
        if !wrote {
            write!(f, "0")?;
        }
        write!(f, " + O(x^{})", self.order())
    }
}

impl fmt::Debug for Series {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(coeffs: &[i64]) -> Series {
        Series::from_coeffs(coeffs.iter().map(|&c| Rat::from(c)).collect())
    }

    #[test]
    fn binary_ops_truncate_to_min_order() {
        let a = s(&[1, 2, 3, 4]);
        let b = s(&[1, 1]);
        assert_eq!((&a + &b).order(), 2);
        assert_eq!((&a * &b).order(), 2);
    }

    #[test]
    fn compose_identity() {
        let outer = Series::x(6);
        let inner = s(&[0, 1, 5, -2, 0, 7]);
        assert_eq!(outer.compose(&inner).unwrap(), inner);
    }

    #[test]
    fn compose_square_of_s_plus_s_squared() {
        // (s + s^2)^2 = s^2 + 2 s^3 + s^4 -> [0, 0, 1, 2] at order 4
        let outer = Series::from_poly(&Poly::monomial(Rat::one(), 2), 4);
        let inner = s(&[0, 1, 1, 0]);
        assert_eq!(outer.compose(&inner).unwrap(), s(&[0, 0, 1, 2]));
    }

    #[test]
    fn compose_rejects_nonzero_constant_term() {
        let outer = Series::one(4);
        let inner = s(&[1, 1, 0, 0]);
        assert_eq!(
            outer.compose(&inner),
            Err(ExactError::NonzeroConstantTerm)
        );
    }

    #[test]
    fn exp_composition_against_convolution() {
        // exp truncation composed with g(x) = x + x^2, against the direct
        // convolution sum_k g^k / k! accumulated by brute force.
        let order = 8;
        let exp: Series = Series::from_coeffs(
            (0..order)
                .map(|k| Rat::one() / crate::exact::factorial(k as u64))
                .collect(),
        );
        let g = {
            let mut c = vec![Rat::zero(); order];
            c[1] = Rat::one();
            c[2] = Rat::one();
            Series::from_coeffs(c)
        };
        let composed = exp.compose(&g).unwrap();

        let mut brute = Series::one(order);
        let mut pow = Series::one(order);
        for k in 1..order {
            pow = &pow * &g;
            brute = &brute + &pow.scale(&(Rat::one() / crate::exact::factorial(k as u64)));
        }
        assert_eq!(composed, brute);
    }
}
