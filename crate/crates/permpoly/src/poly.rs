//! Dense univariate polynomials over arbitrary-precision integers.
//!
//! `IntPoly` stores coefficients in ascending degree order as a `Vec<BigInt>`.
//! Invariant: the vector is either empty (zero polynomial) or the last element
//! is nonzero. Every permanental polynomial, recurrence term, and closed form
//! in this crate is carried by this type; all arithmetic is exact.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// A dense univariate polynomial with `BigInt` coefficients, ascending order:
/// `coeffs[k]` multiplies x^k. Canonical form has no trailing zeros; the zero
/// polynomial is the empty vector and its degree is `None`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    fn normalize(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    /// The zero polynomial.
    pub fn zero() -> Self {
        IntPoly { coeffs: Vec::new() }
    }

    /// The constant polynomial 1.
    pub fn one() -> Self {
        IntPoly {
            coeffs: vec![BigInt::one()],
        }
    }

    /// The indeterminate x.
    pub fn x() -> Self {
        IntPoly {
            coeffs: vec![BigInt::zero(), BigInt::one()],
        }
    }

    /// A constant polynomial.
    pub fn constant<T: Into<BigInt>>(c: T) -> Self {
        let mut p = IntPoly {
            coeffs: vec![c.into()],
        };
        p.normalize();
        p
    }

    /// The linear polynomial `a0 + a1*x`.
    pub fn linear<T: Into<BigInt>, U: Into<BigInt>>(a0: T, a1: U) -> Self {
        let mut p = IntPoly {
            coeffs: vec![a0.into(), a1.into()],
        };
        p.normalize();
        p
    }

    /// The monomial `c * x^deg`.
    pub fn monomial<T: Into<BigInt>>(c: T, deg: usize) -> Self {
        let c = c.into();
        if c.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); deg + 1];
        coeffs[deg] = c;
        IntPoly { coeffs }
    }

    /// Construct from coefficients in ascending degree order; trailing zeros
    /// are stripped so the result is canonical.
    pub fn from_coeffs(coeffs: Vec<BigInt>) -> Self {
        let mut p = IntPoly { coeffs };
        p.normalize();
        p
    }

    /// Convenience constructor from machine integers, ascending order.
    pub fn from_i64_coeffs(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Coefficient of x^k (zero beyond the degree).
    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_else(BigInt::zero)
    }

    /// Coefficients in ascending degree order, canonical (no trailing zeros).
    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn leading_coeff(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    /// True iff the polynomial is monic of some degree.
    pub fn is_monic(&self) -> bool {
        self.leading_coeff().is_some_and(|c| c.is_one())
    }

    pub fn add(&self, other: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for k in 0..n {
            let mut c = self.coeffs.get(k).cloned().unwrap_or_else(BigInt::zero);
            if let Some(d) = other.coeffs.get(k) {
                c += d;
            }
            coeffs.push(c);
        }
        IntPoly::from_coeffs(coeffs)
    }

    pub fn sub(&self, other: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for k in 0..n {
            let mut c = self.coeffs.get(k).cloned().unwrap_or_else(BigInt::zero);
            if let Some(d) = other.coeffs.get(k) {
                c -= d;
            }
            coeffs.push(c);
        }
        IntPoly::from_coeffs(coeffs)
    }

    pub fn neg(&self) -> IntPoly {
        IntPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    /// Schoolbook convolution product. Degrees stay far below the point where
    /// anything fancier would pay off.
    pub fn mul(&self, other: &IntPoly) -> IntPoly {
        if self.is_zero() || other.is_zero() {
            return IntPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        IntPoly::from_coeffs(coeffs)
    }

    /// Multiply by a scalar.
    pub fn scale(&self, c: &BigInt) -> IntPoly {
        if c.is_zero() {
            return IntPoly::zero();
        }
        IntPoly {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// `self^k` by repeated squaring, with `self^0 = 1`.
    pub fn pow(&self, k: usize) -> IntPoly {
        let mut result = IntPoly::one();
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                result = result.mul(&base);
            }
            k >>= 1;
            if k > 0 {
                base = base.mul(&base);
            }
        }
        result
    }

    /// Exact Horner evaluation at an integer point.
    pub fn eval(&self, x0: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x0 + c;
        }
        acc
    }

    /// Decimal coefficient strings, ascending order (the machine form).
    pub fn coeffs_decimal(&self) -> Vec<String> {
        self.coeffs.iter().map(|c| c.to_string()).collect()
    }
}

impl Add for &IntPoly {
    type Output = IntPoly;
    fn add(self, rhs: &IntPoly) -> IntPoly {
        IntPoly::add(self, rhs)
    }
}

impl Sub for &IntPoly {
    type Output = IntPoly;
    fn sub(self, rhs: &IntPoly) -> IntPoly {
        IntPoly::sub(self, rhs)
    }
}

impl Mul for &IntPoly {
    type Output = IntPoly;
    fn mul(self, rhs: &IntPoly) -> IntPoly {
        IntPoly::mul(self, rhs)
    }
}

impl Neg for &IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        IntPoly::neg(self)
    }
}

/// Text rendering in descending powers with explicit signs and caret
/// exponents, e.g. `x^7 - 12x^6 + 65x^5 - ... - 60`.
impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for k in (0..self.coeffs.len()).rev() {
            let c = &self.coeffs[k];
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let unit = mag.is_one();
            match k {
                0 => write!(f, "{}", mag)?,
                1 => {
                    if unit {
                        write!(f, "x")?
                    } else {
                        write!(f, "{}x", mag)?
                    }
                }
                _ => {
                    if unit {
                        write!(f, "x^{}", k)?
                    } else {
                        write!(f, "{}x^{}", mag, k)?
                    }
                }
            }
        }
        Ok(())
    }
}
