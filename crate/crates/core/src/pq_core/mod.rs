//! (p,q)-numbers and the (p,q)-derivative and (p,q)-integral acting on
//! truncated power series.

mod series;

pub use series::TruncatedSeries;

use crate::error::{Error, Result};
use crate::scalar::{Real, Scalar};

/// Default truncation order for function jets.
pub const DEFAULT_ORDER: usize = 8;

/// Deformation pair with `0 < q < p <= 1`.
///
/// [`PQParams::relaxed`] also admits `q == p`, which includes the classical
/// point `p = q = 1`. The (p,q)-numbers are evaluated in summation form, which
/// stays finite there.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PQParams<T> {
    p: T,
    q: T,
}

impl<T: Real> PQParams<T> {
    /// Strict constructor: `0 < q < p <= 1`.
    pub fn new(p: T, q: T) -> Result<Self> {
        Self::check(&p, &q)?;
        if !(q < p) {
            return Err(Self::invalid(&p, &q, "requires q < p"));
        }
        Ok(Self { p, q })
    }

    /// Closed-boundary constructor for limit studies: `0 < q <= p <= 1`.
    pub fn relaxed(p: T, q: T) -> Result<Self> {
        Self::check(&p, &q)?;
        if !(q <= p) {
            return Err(Self::invalid(&p, &q, "requires q <= p"));
        }
        Ok(Self { p, q })
    }

    /// The classical point `p = q = 1`, where `[n] = n`.
    pub fn classical() -> Self {
        Self {
            p: T::one(),
            q: T::one(),
        }
    }

    fn check(p: &T, q: &T) -> Result<()> {
        if !(*q > T::zero()) {
            return Err(Self::invalid(p, q, "requires q > 0"));
        }
        if !(*p <= T::one()) {
            return Err(Self::invalid(p, q, "requires p <= 1"));
        }
        Ok(())
    }

    fn invalid(p: &T, q: &T, reason: &'static str) -> Error {
        Error::InvalidParams {
            p: format!("{p:?}"),
            q: format!("{q:?}"),
            reason,
        }
    }

    pub fn p(&self) -> &T {
        &self.p
    }

    pub fn q(&self) -> &T {
        &self.q
    }

    /// `true` when `q < p`, i.e. the pair is admissible for the strict
    /// constructor.
    pub fn is_strict(&self) -> bool {
        self.q < self.p
    }

    /// `[n]_{p,q} = sum_{k<n} p^k q^(n-1-k)`, with `[0] = 0`.
    pub fn number(&self, n: usize) -> T {
        let mut acc = T::zero();
        let mut q_pow = T::one();
        for _ in 0..n {
            acc = acc * self.p.clone() + q_pow.clone();
            q_pow = q_pow * self.q.clone();
        }
        acc
    }
}

/// `[n]_{p,q}` for a signed index; negative `n` is a domain error.
pub fn pq_number<T: Real>(n: i64, params: &PQParams<T>) -> Result<T> {
    let n = usize::try_from(n)
        .map_err(|_| Error::domain(format!("(p,q)-number index must be >= 0, got {n}")))?;
    Ok(params.number(n))
}

/// `D_{p,q} f`: coefficient `n-1` of the result is `[n] a_n`.
pub fn pq_derivative<T, C>(f: &TruncatedSeries<C>, params: &PQParams<T>) -> Result<TruncatedSeries<C>>
where
    T: Real,
    C: Scalar + From<T>,
{
    if f.order() == 0 {
        return Err(Error::domain("(p,q)-derivative needs a series of order >= 1"));
    }
    let coeffs = f.coeffs()[1..]
        .iter()
        .enumerate()
        .map(|(i, a)| a.clone() * C::from(params.number(i + 1)))
        .collect();
    Ok(TruncatedSeries::new(coeffs))
}

/// `int_0^z f d_{p,q}t`: coefficient `n+1` of the result is `a_n / [n+1]`.
pub fn pq_integral<T, C>(f: &TruncatedSeries<C>, params: &PQParams<T>) -> TruncatedSeries<C>
where
    T: Real,
    C: Scalar + From<T>,
{
    let mut coeffs = Vec::with_capacity(f.order() + 2);
    coeffs.push(C::zero());
    coeffs.extend(
        f.coeffs()
            .iter()
            .enumerate()
            .map(|(n, a)| a.clone() / C::from(params.number(n + 1))),
    );
    TruncatedSeries::new(coeffs)
}
