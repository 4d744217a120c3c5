//! The coefficient field: fractions of Laurent polynomials.
//!
//! Fractions are kept lazily unreduced. Equality is decided by
//! cross-multiplication (`a/b = c/d` iff `a*d - c*b = 0`), which is exact and
//! never needs a multivariate GCD. A lightweight cleanup pass (monomial
//! content stripping, an exact-division attempt, and a univariate GCD when
//! `mu` is absent) keeps intermediate sizes in check.

use crate::gaussian::GaussianRational;
use crate::laurent::LaurentPoly;
use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};

/// An element of the fraction field of [`LaurentPoly`].
#[derive(Clone, Debug)]
pub struct Scalar {
    num: LaurentPoly,
    den: LaurentPoly,
}

impl Scalar {
    /// Builds `num / den`. Panics when `den` is zero.
    pub fn ratio(num: LaurentPoly, den: LaurentPoly) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        let mut s = Scalar { num, den };
        s.normalize();
        s
    }

    pub fn from_poly(p: LaurentPoly) -> Self {
        Scalar {
            num: p,
            den: LaurentPoly::one(),
        }
    }

    pub fn zero() -> Self {
        Scalar::from_poly(LaurentPoly::zero())
    }

    pub fn one() -> Self {
        Scalar::from_poly(LaurentPoly::one())
    }

    pub fn from_int(n: i64) -> Self {
        Scalar::from_poly(LaurentPoly::constant(GaussianRational::from_int(n)))
    }

    pub fn from_ratio(n: i64, d: i64) -> Self {
        Scalar::from_poly(LaurentPoly::constant(GaussianRational::from_ratio(n, d)))
    }

    pub fn gauss(c: GaussianRational) -> Self {
        Scalar::from_poly(LaurentPoly::constant(c))
    }

    /// The imaginary unit.
    pub fn i() -> Self {
        Scalar::gauss(GaussianRational::i())
    }

    pub fn q() -> Self {
        Scalar::q_pow(1)
    }

    pub fn q_pow(n: i64) -> Self {
        Scalar::from_poly(LaurentPoly::q_pow(n))
    }

    pub fn mu() -> Self {
        Scalar::mu_pow(1)
    }

    pub fn mu_pow(n: i64) -> Self {
        Scalar::from_poly(LaurentPoly::mu_pow(n))
    }

    pub fn num(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn den(&self) -> &LaurentPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self == &Scalar::one()
    }

    /// Multiplicative inverse, or `None` for zero.
    pub fn try_inv(&self) -> Option<Scalar> {
        if self.is_zero() {
            return None;
        }
        Some(Scalar::ratio(self.den.clone(), self.num.clone()))
    }

    /// Multiplicative inverse. Panics on zero.
    pub fn inv(&self) -> Scalar {
        self.try_inv().expect("inverse of zero scalar")
    }

    /// Integer power, with negative exponents via the inverse.
    pub fn pow_i(&self, n: i64) -> Scalar {
        let base = if n < 0 { self.inv() } else { self.clone() };
        let mut out = Scalar::one();
        for _ in 0..n.unsigned_abs() {
            out = &out * &base;
        }
        out
    }

    /// Substitute `q -> q^-1` in numerator and denominator.
    pub fn bar(&self) -> Scalar {
        Scalar::ratio(self.num.bar(), self.den.bar())
    }

    /// Substitute `mu -> c * q^qe`.
    pub fn substitute_mu(&self, c: &GaussianRational, qe: i64) -> Scalar {
        Scalar::ratio(self.num.substitute_mu(c, qe), self.den.substitute_mu(c, qe))
    }

    /// Opportunistic reduction; never changes the value.
    fn normalize(&mut self) {
        if self.num.is_zero() {
            self.den = LaurentPoly::one();
            return;
        }
        // Pull the denominator's monomial content across the fraction bar.
        let dmin = self.den.min_exp();
        if dmin != (0, 0) {
            let one = GaussianRational::one();
            self.den = self.den.mul_monomial(&one, -dmin.0, -dmin.1);
            self.num = self.num.mul_monomial(&one, -dmin.0, -dmin.1);
        }
        if !self.den.is_one() {
            if let Some(q) = self.num.try_exact_div(&self.den) {
                self.num = q;
                self.den = LaurentPoly::one();
            } else if self.num.is_mu_free() && self.den.is_mu_free() {
                let g = self.num.gcd_q(&self.den);
                if !g.is_monomial() {
                    self.num = self.num.try_exact_div(&g).expect("gcd divides numerator");
                    self.den = self.den.try_exact_div(&g).expect("gcd divides denominator");
                }
            }
        }
        // Canonical leading coefficient 1 in the denominator.
        if !self.den.is_one() {
            let lc = self
                .den
                .iter()
                .last()
                .map(|(_, c)| c.clone())
                .expect("nonzero denominator");
            if !lc.is_one() {
                let lcinv = lc.inv();
                self.num = self.num.scale(&lcinv);
                self.den = self.den.scale(&lcinv);
            }
        }
    }
}

impl PartialEq for Scalar {
    /// Cross-multiplication equality: `a/b = c/d` iff `a*d - c*b = 0`.
    fn eq(&self, other: &Scalar) -> bool {
        (&(&self.num * &other.den) - &(&other.num * &self.den)).is_zero()
    }
}

impl Eq for Scalar {}

impl Add for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        Scalar::ratio(
            &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
    }
}

impl Sub for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        Scalar::ratio(
            &(&self.num * &rhs.den) - &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
    }
}

impl Mul for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        Scalar::ratio(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl Div for &Scalar {
    type Output = Scalar;
    fn div(self, rhs: &Scalar) -> Scalar {
        assert!(!rhs.is_zero(), "division by zero scalar");
        Scalar::ratio(&self.num * &rhs.den, &self.den * &rhs.num)
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

macro_rules! owned_ops {
    ($($trait:ident, $method:ident);*) => {$(
        impl $trait for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                $trait::$method(&self, &rhs)
            }
        }
    )*};
}
owned_ops!(Add, add; Sub, sub; Mul, mul; Div, div);

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        *self = &*self + rhs;
    }
}

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, rhs: &Scalar) {
        *self = &*self - rhs;
    }
}

impl MulAssign<&Scalar> for Scalar {
    fn mul_assign(&mut self, rhs: &Scalar) {
        *self = &*self * rhs;
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            return write!(f, "{}", self.num);
        }
        if self.num.is_monomial() {
            write!(f, "{}/({})", self.num, self.den)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}
