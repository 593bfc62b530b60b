//! Truncated formal power series in `q` with exact integer coefficients.
//!
//! A [`TruncSeries`] of order `N` holds the coefficients of `q^0 ..= q^N`.
//! Binary operations truncate to the smaller of the two orders; nothing is
//! ever padded with assumed zeros.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::SeriesError;

/// A power series `c_0 + c_1 q + ... + c_N q^N + O(q^{N+1})`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct TruncSeries {
    coeffs: Vec<BigInt>,
}

/// Outcome of an exact coefficientwise comparison.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Comparison {
    /// Every coefficient up to and including `order` agrees.
    Equal { order: usize },
    /// First exponent at which the two series differ.
    Mismatch {
        exponent: usize,
        lhs: BigInt,
        rhs: BigInt,
    },
}

impl Comparison {
    pub fn is_equal(&self) -> bool {
        matches!(self, Comparison::Equal { .. })
    }
}

impl TruncSeries {
    /// Builds a series from its coefficient list; the order is `coeffs.len() - 1`.
    ///
    /// Panics on an empty list, since a series always retains `q^0`.
    pub fn from_coeffs(coeffs: Vec<BigInt>) -> Self {
        assert!(
            !coeffs.is_empty(),
            "a series needs at least the q^0 coefficient"
        );
        TruncSeries { coeffs }
    }

    pub fn from_i64s(order: usize, values: &[i64]) -> Self {
        let mut coeffs = vec![BigInt::zero(); order + 1];
        for (slot, v) in coeffs.iter_mut().zip(values) {
            *slot = BigInt::from(*v);
        }
        TruncSeries { coeffs }
    }

    pub fn zero(order: usize) -> Self {
        TruncSeries {
            coeffs: vec![BigInt::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        Self::constant(BigInt::one(), order)
    }

    pub fn constant(c: BigInt, order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = c;
        s
    }

    /// `q^k`, which is the zero series when `k` exceeds the order.
    pub fn monomial(k: usize, order: usize) -> Self {
        let mut s = Self::zero(order);
        if k <= order {
            s.coeffs[k] = BigInt::one();
        }
        s
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Coefficient of `q^n`, or `None` beyond the truncation order.
    pub fn get(&self, n: usize) -> Option<&BigInt> {
        self.coeffs.get(n)
    }

    /// Coefficient of `q^n`. Panics beyond the truncation order.
    pub fn coeff(&self, n: usize) -> &BigInt {
        &self.coeffs[n]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// Drops every coefficient above `order`. Panics if `order` exceeds the current order.
    pub fn truncate(&self, order: usize) -> Self {
        assert!(order <= self.order(), "cannot extend a truncated series");
        TruncSeries {
            coeffs: self.coeffs[..=order].to_vec(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let order = self.order().min(other.order());
        let coeffs = (0..=order)
            .map(|i| &self.coeffs[i] + &other.coeffs[i])
            .collect();
        TruncSeries { coeffs }
    }

    pub fn sub(&self, other: &Self) -> Self {
        let order = self.order().min(other.order());
        let coeffs = (0..=order)
            .map(|i| &self.coeffs[i] - &other.coeffs[i])
            .collect();
        TruncSeries { coeffs }
    }

    pub fn neg(&self) -> Self {
        TruncSeries {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        TruncSeries {
            coeffs: self.coeffs.iter().map(|x| x * c).collect(),
        }
    }

    /// Truncated Cauchy product (schoolbook; zero coefficients are skipped).
    pub fn mul(&self, other: &Self) -> Self {
        let order = self.order().min(other.order());
        let mut out = vec![BigInt::zero(); order + 1];
        let rhs: Vec<(usize, &BigInt)> = other.nonzero_terms(order).collect();
        for (i, a) in self.nonzero_terms(order) {
            for &(j, b) in &rhs {
                if i + j > order {
                    break;
                }
                out[i + j] += a * b;
            }
        }
        TruncSeries { coeffs: out }
    }

    /// Multiplicative inverse of a series with constant term `±1`.
    pub fn invert(&self) -> Result<Self, SeriesError> {
        self.div_into(&TruncSeries::one(self.order()))
    }

    /// `self / divisor`, defined as `self * divisor^{-1}`.
    pub fn div(&self, divisor: &Self) -> Result<Self, SeriesError> {
        divisor.div_into(self)
    }

    /// Solves `self * x = numerator` by forward substitution, which produces the
    /// same truncated series as multiplying by the inverse.
    fn div_into(&self, numerator: &Self) -> Result<Self, SeriesError> {
        let unit = &self.coeffs[0];
        if !(unit.is_one() || (-unit).is_one()) {
            return Err(SeriesError::NonUnitConstant {
                constant: unit.clone(),
            });
        }
        let negate = unit.is_negative();
        let order = self.order().min(numerator.order());
        let tail: Vec<(usize, &BigInt)> =
            self.nonzero_terms(order).filter(|&(i, _)| i > 0).collect();
        let mut out: Vec<BigInt> = Vec::with_capacity(order + 1);
        for n in 0..=order {
            let mut acc = numerator.coeffs[n].clone();
            for &(k, a) in &tail {
                if k > n {
                    break;
                }
                acc -= a * &out[n - k];
            }
            out.push(if negate { -acc } else { acc });
        }
        Ok(TruncSeries { coeffs: out })
    }

    /// Substitutes `q -> q^k`, keeping the order of `self`.
    pub fn compose_power(&self, k: usize) -> Result<Self, SeriesError> {
        if k == 0 {
            return Err(SeriesError::ZeroSubstitution);
        }
        let order = self.order();
        let mut out = vec![BigInt::zero(); order + 1];
        for (n, c) in self.coeffs.iter().enumerate() {
            let target = n * k;
            if target > order {
                break;
            }
            out[target] = c.clone();
        }
        Ok(TruncSeries { coeffs: out })
    }

    /// Substitutes `q -> -q`.
    pub fn alternate(&self) -> Self {
        TruncSeries {
            coeffs: self
                .coeffs
                .iter()
                .enumerate()
                .map(|(n, c)| if n % 2 == 1 { -c } else { c.clone() })
                .collect(),
        }
    }

    pub fn even_part(&self) -> Self {
        self.keep_parity(0)
    }

    pub fn odd_part(&self) -> Self {
        self.keep_parity(1)
    }

    fn keep_parity(&self, parity: usize) -> Self {
        TruncSeries {
            coeffs: self
                .coeffs
                .iter()
                .enumerate()
                .map(|(n, c)| {
                    if n % 2 == parity {
                        c.clone()
                    } else {
                        BigInt::zero()
                    }
                })
                .collect(),
        }
    }

    /// Multiplies by `q^k`; the top `k` coefficients fall off.
    pub fn shift(&self, k: usize) -> Self {
        let order = self.order();
        let mut out = vec![BigInt::zero(); order + 1];
        if k <= order {
            out[k..].clone_from_slice(&self.coeffs[..=order - k]);
        }
        TruncSeries { coeffs: out }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut result = TruncSeries::one(self.order());
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                result = TruncSeries::mul(&result, &base);
            }
            e >>= 1;
            if e > 0 {
                base = TruncSeries::mul(&base, &base);
            }
        }
        result
    }

    /// Least exponent carrying a negative coefficient.
    pub fn first_negative(&self) -> Option<usize> {
        self.coeffs.iter().position(Signed::is_negative)
    }

    /// Exact comparison over the common order.
    pub fn compare(&self, other: &Self) -> Comparison {
        let order = self.order().min(other.order());
        for n in 0..=order {
            if self.coeffs[n] != other.coeffs[n] {
                return Comparison::Mismatch {
                    exponent: n,
                    lhs: self.coeffs[n].clone(),
                    rhs: other.coeffs[n].clone(),
                };
            }
        }
        Comparison::Equal { order }
    }

    fn nonzero_terms(&self, order: usize) -> impl Iterator<Item = (usize, &BigInt)> {
        self.coeffs[..=order.min(self.order())]
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
    }
}

impl fmt::Debug for TruncSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TruncSeries({self})")
    }
}

impl fmt::Display for TruncSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (n, c) in self.nonzero_terms(self.order()) {
            let (sign, abs) = if c.is_negative() {
                ("-", -c)
            } else {
                ("+", c.clone())
            };
            if first {
                if sign == "-" {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            match (n, abs.is_one()) {
                (0, _) => write!(f, "{abs}")?,
                (1, true) => write!(f, "q")?,
                (1, false) => write!(f, "{abs}*q")?,
                (_, true) => write!(f, "q^{n}")?,
                (_, false) => write!(f, "{abs}*q^{n}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, " + O(q^{})", self.order() + 1)
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident) => {
        impl $trait<&TruncSeries> for &TruncSeries {
            type Output = TruncSeries;
            fn $method(self, rhs: &TruncSeries) -> TruncSeries {
                TruncSeries::$method(self, rhs)
            }
        }
        impl $trait<TruncSeries> for TruncSeries {
            type Output = TruncSeries;
            fn $method(self, rhs: TruncSeries) -> TruncSeries {
                TruncSeries::$method(&self, &rhs)
            }
        }
        impl $trait<&TruncSeries> for TruncSeries {
            type Output = TruncSeries;
            fn $method(self, rhs: &TruncSeries) -> TruncSeries {
                TruncSeries::$method(&self, rhs)
            }
        }
        impl $trait<TruncSeries> for &TruncSeries {
            type Output = TruncSeries;
            fn $method(self, rhs: TruncSeries) -> TruncSeries {
                TruncSeries::$method(self, &rhs)
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);

impl Neg for TruncSeries {
    type Output = TruncSeries;
    fn neg(self) -> TruncSeries {
        TruncSeries::neg(&self)
    }
}

impl Neg for &TruncSeries {
    type Output = TruncSeries;
    fn neg(self) -> TruncSeries {
        TruncSeries::neg(self)
    }
}

impl Mul<&TruncSeries> for i64 {
    type Output = TruncSeries;
    fn mul(self, rhs: &TruncSeries) -> TruncSeries {
        rhs.scale(&BigInt::from(self))
    }
}

impl Mul<TruncSeries> for i64 {
    type Output = TruncSeries;
    fn mul(self, rhs: TruncSeries) -> TruncSeries {
        rhs.scale(&BigInt::from(self))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(order: usize, v: &[i64]) -> TruncSeries {
        TruncSeries::from_i64s(order, v)
    }

    /// Pentagonal expansion written out by hand up to q^12.
    fn euler_12() -> TruncSeries {
        s(12, &[1, -1, -1, 0, 0, 1, 0, 1, 0, 0, 0, 0, -1])
    }

    #[test]
    fn add_cancels_and_has_identity() {
        assert_eq!(s(3, &[1, 1]) + s(3, &[1, -1]), s(3, &[2]));
        let a = s(4, &[3, -1, 0, 7]);
        assert_eq!(&a + &TruncSeries::zero(4), a);
        assert!((&euler_12() + &euler_12().neg()).is_zero());
    }

    #[test]
    fn mixed_orders_truncate_to_smaller() {
        let a = s(5, &[1, 1, 1, 1, 1, 1]);
        let b = s(2, &[1, 1, 1]);
        assert_eq!((&a + &b).order(), 2);
        assert_eq!((&a * &b).order(), 2);
        assert_eq!(a.compare(&b), Comparison::Equal { order: 2 });
    }

    #[test]
    fn mul_difference_of_squares() {
        assert_eq!(s(5, &[1, 1]) * s(5, &[1, -1]), s(5, &[1, 0, -1]));
        let a = s(4, &[2, 0, 5, -1]);
        assert_eq!(&a * &TruncSeries::one(4), a);
    }

    #[test]
    fn invert_geometric_and_involution() {
        assert_eq!(
            s(6, &[1, -1]).invert().unwrap(),
            s(6, &[1, 1, 1, 1, 1, 1, 1])
        );
        let a = s(9, &[1, 1]);
        assert_eq!(a.invert().unwrap().invert().unwrap(), a);
        let neg = s(5, &[-1, 2, 0, 1]);
        assert_eq!(&neg * &neg.invert().unwrap(), TruncSeries::one(5));
    }

    #[test]
    fn invert_rejects_non_unit() {
        let err = s(3, &[2, 1]).invert().unwrap_err();
        assert_eq!(err, SeriesError::NonUnitConstant { constant: 2.into() });
        assert!(err.to_string().contains('2'));
        assert!(s(3, &[0, 1]).invert().is_err());
    }

    #[test]
    fn partition_numbers_from_inverse() {
        // p(0..=12) by hand
        let p = [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77];
        assert_eq!(euler_12().invert().unwrap(), s(12, &p));
    }

    #[test]
    fn div_self_is_one() {
        assert_eq!(euler_12().div(&euler_12()).unwrap(), TruncSeries::one(12));
    }

    #[test]
    fn compose_power_cases() {
        assert_eq!(s(6, &[1, 1]).compose_power(2).unwrap(), s(6, &[1, 0, 1]));
        let a = s(6, &[1, 2, 3, 4, 5, 6, 7]);
        assert_eq!(a.compose_power(1).unwrap(), a);
        assert_eq!(a.compose_power(3).unwrap(), s(6, &[1, 0, 0, 2, 0, 0, 3]));
        assert_eq!(a.compose_power(0), Err(SeriesError::ZeroSubstitution));
    }

    #[test]
    fn alternate_and_parts() {
        assert_eq!(s(2, &[1, 1, 1]).alternate(), s(2, &[1, -1, 1]));
        let a = s(3, &[1, 1, 1, 1]);
        assert_eq!(a.even_part(), s(3, &[1, 0, 1, 0]));
        assert_eq!(a.odd_part(), s(3, &[0, 1, 0, 1]));
        assert_eq!(&a + &a.alternate(), a.even_part().scale(&2.into()));
    }

    #[test]
    fn shift_scale_pow() {
        assert_eq!(TruncSeries::one(5).shift(3), TruncSeries::monomial(3, 5));
        assert_eq!(TruncSeries::one(2).shift(3), TruncSeries::zero(2));
        assert_eq!(s(4, &[1, 1]).pow(3), s(4, &[1, 3, 3, 1]));
        assert_eq!(s(4, &[1, 1]).pow(0), TruncSeries::one(4));
        assert_eq!(3 * &s(2, &[1, -2]), s(2, &[3, -6]));
    }

    #[test]
    fn first_negative_and_compare() {
        assert_eq!(euler_12().first_negative(), Some(1));
        assert_eq!(TruncSeries::one(4).first_negative(), None);
        let prod = &euler_12() * &euler_12().invert().unwrap();
        assert!(prod.compare(&TruncSeries::one(12)).is_equal());
        assert_eq!(
            s(3, &[1, 2, 3]).compare(&s(3, &[1, 2, 4])),
            Comparison::Mismatch {
                exponent: 2,
                lhs: 3.into(),
                rhs: 4.into()
            }
        );
    }

    #[test]
    fn display_format() {
        assert_eq!(s(3, &[1, -1, 0, 2]).to_string(), "1 - q + 2*q^3 + O(q^4)");
        assert_eq!(TruncSeries::zero(1).to_string(), "0 + O(q^2)");
    }
}
