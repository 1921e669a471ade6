//! Truncated power series `a_0 + a_1 z + ... + a_N z^N`.
//!
//! Binary operations truncate to the smaller of the two operand orders.

use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::scalar::Scalar;

#[derive(Debug, Clone, PartialEq)]
pub struct TruncatedSeries<C> {
    coeffs: Vec<C>,
}

impl<C: Scalar> TruncatedSeries<C> {
    /// Series whose order is `coeffs.len() - 1`. An empty vector gives the
    /// zero series of order 0.
    pub fn new(mut coeffs: Vec<C>) -> Self {
        if coeffs.is_empty() {
            coeffs.push(C::zero());
        }
        Self { coeffs }
    }

    /// Pads with zeros or truncates `coeffs` to exactly `order + 1` entries.
    pub fn with_order(mut coeffs: Vec<C>, order: usize) -> Self {
        coeffs.resize(order + 1, C::zero());
        Self { coeffs }
    }

    pub fn zero(order: usize) -> Self {
        Self::with_order(Vec::new(), order)
    }

    pub fn one(order: usize) -> Self {
        Self::constant(C::one(), order)
    }

    pub fn constant(c: C, order: usize) -> Self {
        Self::with_order(vec![c], order)
    }

    /// `c z^k` carried to `order` (zero if `k > order`).
    pub fn monomial(k: usize, c: C, order: usize) -> Self {
        let mut s = Self::zero(order);
        if k <= order {
            s.coeffs[k] = c;
        }
        s
    }

    /// The identity function `z`.
    pub fn z(order: usize) -> Self {
        Self::monomial(1, C::one(), order)
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<C> {
        self.coeffs
    }

    /// Coefficient of `z^n`; zero past the truncation order.
    pub fn coeff(&self, n: usize) -> C {
        self.coeffs.get(n).cloned().unwrap_or_else(C::zero)
    }

    /// `a_0 = 0` and `a_1 = 1`, i.e. the jet of a member of the normalized
    /// class `f(z) = z + a_2 z^2 + ...`.
    pub fn is_normalized(&self) -> bool {
        self.order() >= 1 && self.coeffs[0].is_zero() && self.coeffs[1].is_one()
    }

    pub fn truncate(&self, order: usize) -> Self {
        Self::with_order(self.coeffs.clone(), order)
    }

    pub fn scale(&self, c: &C) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|a| a.clone() * c.clone()).collect(),
        }
    }

    /// Multiplication by `z`; the order rises by one.
    pub fn shift_up(&self) -> Self {
        let mut coeffs = Vec::with_capacity(self.coeffs.len() + 1);
        coeffs.push(C::zero());
        coeffs.extend(self.coeffs.iter().cloned());
        Self { coeffs }
    }

    /// Division by `z`; the order drops by one.
    pub fn shift_down(&self) -> Result<Self> {
        if !self.coeffs[0].is_zero() {
            return Err(Error::domain("cannot divide by z: nonzero constant term"));
        }
        if self.order() == 0 {
            return Err(Error::domain("cannot divide an order-0 series by z"));
        }
        Ok(Self {
            coeffs: self.coeffs[1..].to_vec(),
        })
    }

    /// Multiplicative inverse, `1/a` to the same order.
    pub fn reciprocal(&self) -> Result<Self> {
        let a0 = &self.coeffs[0];
        if a0.is_zero() {
            return Err(Error::domain("reciprocal of a series with zero constant term"));
        }
        let n = self.order();
        let inv0 = C::one() / a0.clone();
        let mut out = Vec::with_capacity(n + 1);
        out.push(inv0.clone());
        for k in 1..=n {
            let mut acc = C::zero();
            for j in 1..=k {
                acc = acc + self.coeffs[j].clone() * out[k - j].clone();
            }
            out.push(C::zero() - acc * inv0.clone());
        }
        Ok(Self { coeffs: out })
    }

    pub fn div(&self, rhs: &Self) -> Result<Self> {
        if rhs.coeffs[0].is_zero() {
            return Err(Error::domain("division by a series with zero constant term"));
        }
        Ok(self * &rhs.reciprocal()?)
    }

    /// `self(inner(z))`; `inner` must have a zero constant term.
    pub fn compose(&self, inner: &Self) -> Result<Self> {
        if !inner.coeffs[0].is_zero() {
            return Err(Error::domain(
                "composition requires an inner series with zero constant term",
            ));
        }
        let order = self.order().min(inner.order());
        let inner = inner.truncate(order);
        let mut acc = Self::constant(self.coeffs[order].clone(), order);
        for k in (0..order).rev() {
            acc = &acc * &inner;
            acc.coeffs[0] = acc.coeffs[0].clone() + self.coeffs[k].clone();
        }
        Ok(acc)
    }

    fn zip_with(&self, rhs: &Self, f: impl Fn(C, C) -> C) -> Self {
        let order = self.order().min(rhs.order());
        Self {
            coeffs: (0..=order)
                .map(|k| f(self.coeffs[k].clone(), rhs.coeffs[k].clone()))
                .collect(),
        }
    }
}

impl<C: Scalar> Add for &TruncatedSeries<C> {
    type Output = TruncatedSeries<C>;
    fn add(self, rhs: Self) -> TruncatedSeries<C> {
        self.zip_with(rhs, |a, b| a + b)
    }
}

impl<C: Scalar> Sub for &TruncatedSeries<C> {
    type Output = TruncatedSeries<C>;
    fn sub(self, rhs: Self) -> TruncatedSeries<C> {
        self.zip_with(rhs, |a, b| a - b)
    }
}

impl<C: Scalar> Mul for &TruncatedSeries<C> {
    type Output = TruncatedSeries<C>;
    fn mul(self, rhs: Self) -> TruncatedSeries<C> {
        let order = self.order().min(rhs.order());
        let coeffs = (0..=order)
            .map(|k| {
                (0..=k).fold(C::zero(), |acc, j| {
                    acc + self.coeffs[j].clone() * rhs.coeffs[k - j].clone()
                })
            })
            .collect();
        TruncatedSeries { coeffs }
    }
}

impl<C: Scalar> Neg for &TruncatedSeries<C> {
    type Output = TruncatedSeries<C>;
    fn neg(self) -> TruncatedSeries<C> {
        TruncatedSeries {
            coeffs: self.coeffs.iter().map(|a| C::zero() - a.clone()).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl<C: Scalar> $tr for TruncatedSeries<C> {
            type Output = TruncatedSeries<C>;
            fn $m(self, rhs: Self) -> TruncatedSeries<C> {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
