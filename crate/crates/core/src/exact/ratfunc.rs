//! Rational functions of one variable in reduced canonical form.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;

use super::{ExactError, Poly, Rat, Series};

/// Threshold below which [`RatFunc::eval_complex`] reports a near-pole
/// instead of returning a wildly ill-conditioned quotient.
pub const DEFAULT_NEAR_POLE_THRESHOLD: f64 = 1e-12;

/// Quotient of two polynomials, kept with `gcd(num, den) = 1` and a monic
/// denominator so that equality is structural.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatFunc {
    num: Poly,
    den: Poly,
}

impl RatFunc {
    /// Builds `num / den` in canonical form.
    pub fn new(num: Poly, den: Poly) -> Result<Self, ExactError> {
        if den.is_zero() {
            return Err(ExactError::DivisionByZero);
        }
        Ok(Self::reduced(num, den))
    }

    fn reduced(num: Poly, den: Poly) -> Self {
        debug_assert!(!den.is_zero());
        if num.is_zero() {
            return RatFunc {
                num: Poly::zero(),
                den: Poly::one(),
            };
        }
        let g = Poly::gcd(&num, &den);
        let (num, den) = if g.degree() == Some(0) {
            (num, den)
        } else {
            (num.div_rem(&g).0, den.div_rem(&g).0)
        };
        let lead = den.leading().expect("nonzero denominator").clone();
        if lead.is_one() {
            RatFunc { num, den }
        } else {
            let inv = lead.recip();
            RatFunc {
                num: num.scale(&inv),
                den: den.scale(&inv),
            }
        }
    }

    pub fn from_poly(p: Poly) -> Self {
        RatFunc {
            num: p,
            den: Poly::one(),
        }
    }

    pub fn zero() -> Self {
        RatFunc::from_poly(Poly::zero())
    }

    pub fn one() -> Self {
        RatFunc::from_poly(Poly::one())
    }

    pub fn var() -> Self {
        RatFunc::from_poly(Poly::var())
    }

    pub fn constant(c: Rat) -> Self {
        RatFunc::from_poly(Poly::constant(c))
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn num(&self) -> &Poly {
        &self.num
    }

    pub fn den(&self) -> &Poly {
        &self.den
    }

    pub fn scale(&self, c: &Rat) -> RatFunc {
        RatFunc::reduced(self.num.scale(c), self.den.clone())
    }

    /// Division with an explicit zero check.
    pub fn checked_div(&self, rhs: &RatFunc) -> Result<RatFunc, ExactError> {
        if rhs.is_zero() {
            return Err(ExactError::DivisionByZero);
        }
        Ok(RatFunc::reduced(
            &self.num * &rhs.den,
            &self.den * &rhs.num,
        ))
    }

    /// Exact derivative d/dz via the quotient rule.
    pub fn derivative(&self) -> RatFunc {
        let num = &self.num.derivative() * &self.den - &self.num * &self.den.derivative();
        let den = &self.den * &self.den;
        RatFunc::reduced(num, den)
    }

    /// Taylor coefficients at the origin, up to (exclusive) `order`.
    ///
    /// Fails with [`ExactError::PoleAtOrigin`] when the denominator vanishes
    /// at 0.
    pub fn series(&self, order: usize) -> Result<Series, ExactError> {
        let d0 = self.den.coeff(0);
        if d0.is_zero() {
            return Err(ExactError::PoleAtOrigin);
        }
        let d0_inv = d0.recip();
        let mut coeffs = Vec::with_capacity(order);
        for k in 0..order {
            let mut c = self.num.coeff(k);
            for j in 0..k {
                let dkj = self.den.coeff(k - j);
                if !dkj.is_zero() {
                    c -= &coeffs[j] * &dkj;
                }
            }
            coeffs.push(c * &d0_inv);
        }
        Ok(Series::from_coeffs(coeffs))
    }

    /// Floating-point evaluation.  Accuracy is limited by the conditioning
    /// of the two Horner evaluations; it is not certified.
    pub fn eval_complex(&self, z: Complex64, near_pole_threshold: f64) -> Result<Complex64, ExactError> {
        let den = self.den.eval_complex(z);
        if den.norm() < near_pole_threshold {
            return Err(ExactError::NearPole {
                denominator_abs: den.norm(),
            });
        }
        Ok(self.num.eval_complex(z) / den)
    }

    /// Exact evaluation at a rational point, `None` on a pole.
    pub fn eval_rat(&self, x: &Rat) -> Option<Rat> {
        let den = self.den.eval(x);
        if den.is_zero() {
            return None;
        }
        Some(self.num.eval(x) / den)
    }
}

impl Add for &RatFunc {
    type Output = RatFunc;
    fn add(self, rhs: &RatFunc) -> RatFunc {
        RatFunc::reduced(
            &self.num * &rhs.den + &rhs.num * &self.den,
            &self.den * &rhs.den,
        )
    }
}

impl Sub for &RatFunc {
    type Output = RatFunc;
    fn sub(self, rhs: &RatFunc) -> RatFunc {
        RatFunc::reduced(
            &self.num * &rhs.den - &rhs.num * &self.den,
            &self.den * &rhs.den,
        )
    }
}

impl Mul for &RatFunc {
    type Output = RatFunc;
    fn mul(self, rhs: &RatFunc) -> RatFunc {
        RatFunc::reduced(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

macro_rules! forward_owned {
    ($Op:ident, $method:ident) => {
        impl $Op<RatFunc> for RatFunc {
            type Output = RatFunc;
            fn $method(self, rhs: RatFunc) -> RatFunc {
                $Op::$method(&self, &rhs)
            }
        }
        impl $Op<&RatFunc> for RatFunc {
            type Output = RatFunc;
            fn $method(self, rhs: &RatFunc) -> RatFunc {
                $Op::$method(&self, rhs)
            }
        }
        impl $Op<RatFunc> for &RatFunc {
            type Output = RatFunc;
            fn $method(self, rhs: RatFunc) -> RatFunc {
                $Op::$method(self, &rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for &RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl Neg for RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        -&self
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == Poly::one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(coeffs: &[i64]) -> Poly {
        Poly::from_coeffs(coeffs.iter().map(|&c| Rat::from(c)).collect())
    }

    fn rf(num: &[i64], den: &[i64]) -> RatFunc {
        RatFunc::new(p(num), p(den)).unwrap()
    }

    #[test]
    fn self_division_is_one() {
        let f = rf(&[0, 1], &[1, -1]); // z / (1 - z)
        assert_eq!(f.checked_div(&f).unwrap(), RatFunc::one());
    }

    #[test]
    fn inverse_times_original_is_one() {
        let g = rf(&[1], &[1, 0, -2]); // 1 / (1 - 2 z^2)
        let h = rf(&[1, 0, -2], &[1]);
        assert_eq!(&g * &h, RatFunc::one());
    }

    #[test]
    fn partial_fraction_sum() {
        // z/(1-z) + 1 = 1/(1-z), checked against the hand reduction
        let f = rf(&[0, 1], &[1, -1]);
        let sum = &f + &RatFunc::one();
        assert_eq!(sum, rf(&[1], &[1, -1]));
    }

    #[test]
    fn division_by_zero_is_reported() {
        let f = rf(&[0, 1], &[1, -1]);
        assert_eq!(
            f.checked_div(&RatFunc::zero()),
            Err(ExactError::DivisionByZero)
        );
    }

    #[test]
    fn canonical_form_monic_denominator() {
        // (2z)/(2 - 2z) reduces to z/(1 - z) ... with monic denominator z - 1
        let f = RatFunc::new(p(&[0, 2]), p(&[2, -2])).unwrap();
        let g = RatFunc::new(p(&[0, -1]), p(&[-1, 1])).unwrap();
        assert_eq!(f, g);
        assert!(f.den().leading().unwrap().is_one());
    }

    #[test]
    fn derivative_examples() {
        // d/dz z^3 = 3 z^2
        let f = RatFunc::from_poly(p(&[0, 0, 0, 1]));
        assert_eq!(f.derivative(), RatFunc::from_poly(p(&[0, 0, 3])));
        // d/dz 1/(1-z) = 1/(1-z)^2
        let g = rf(&[1], &[1, -1]);
        assert_eq!(g.derivative(), rf(&[1], &[1, -2, 1]));
        // d/dz constant = 0
        assert!(RatFunc::constant(Rat::from(5i64)).derivative().is_zero());
    }

    #[test]
    fn series_of_geometric() {
        let g = rf(&[1], &[1, -1]);
        let s = g.series(4).unwrap();
        assert_eq!(
            s.coeffs().to_vec(),
            vec![Rat::one(), Rat::one(), Rat::one(), Rat::one()]
        );
    }

    #[test]
    fn series_by_long_division() {
        // z/(1 - 2 z^2) = z + 2 z^3 + ...
        let f = rf(&[0, 1], &[1, 0, -2]);
        let s = f.series(5).unwrap();
        let expect: Vec<Rat> = [0i64, 1, 0, 2, 0].iter().map(|&c| Rat::from(c)).collect();
        assert_eq!(s.coeffs().to_vec(), expect);
    }

    #[test]
    fn series_of_constant() {
        let s = RatFunc::one().series(3).unwrap();
        assert_eq!(
            s.coeffs().to_vec(),
            vec![Rat::one(), Rat::zero(), Rat::zero()]
        );
    }

    #[test]
    fn series_rejects_pole_at_origin() {
        let f = rf(&[1], &[0, 1]); // 1/z
        assert_eq!(f.series(3), Err(ExactError::PoleAtOrigin));
    }

    #[test]
    fn eval_complex_values() {
        let f = rf(&[1], &[1, -1]);
        let v = f
            .eval_complex(Complex64::new(0.5, 0.0), DEFAULT_NEAR_POLE_THRESHOLD)
            .unwrap();
        assert!((v - Complex64::new(2.0, 0.0)).norm() < 1e-14);

        let sq = RatFunc::from_poly(p(&[0, 0, 1]));
        let v = sq
            .eval_complex(Complex64::new(0.0, 1.0), DEFAULT_NEAR_POLE_THRESHOLD)
            .unwrap();
        assert!((v - Complex64::new(-1.0, 0.0)).norm() < 1e-14);
    }

    #[test]
    fn eval_complex_near_branch_point_denominator() {
        let f = rf(&[1], &[1, 0, -2]); // 1/(1 - 2 z^2)
        let z = Complex64::new(0.7071067811865476, 0.0);
        assert!(matches!(
            f.eval_complex(z, DEFAULT_NEAR_POLE_THRESHOLD),
            Err(ExactError::NearPole { .. })
        ));
    }
}
