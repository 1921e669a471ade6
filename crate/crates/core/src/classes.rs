//! Ma-Minda targets, second-order Schwarz/Carathéodory data, and the
//! coefficient jets `(a2, a3)` of (p,q)-starlike and (p,q)-convex members.
//!
//! A member `f` of either class satisfies `Q_f(z) = phi(w(z))` for a Schwarz
//! function `w`, where `Q_f` is `z D f / f` (starlike) or
//! `D(z D f) / D f` (convex). Matching coefficients through `z^2` gives
//!
//! ```text
//! alpha a2                 = b1 c1 / 2
//! beta a3 - gamma a2^2     = (b1/2)(c2 - c1^2/2) + b2 c1^2 / 4
//! ```
//!
//! with class weights ([`ClassGeometry`])
//!
//! | class    | alpha        | beta         | gamma           |
//! |----------|--------------|--------------|-----------------|
//! | starlike | [2]-1        | [3]-1        | [2]-1           |
//! | convex   | [2]([2]-1)   | [3]([3]-1)   | [2]^2([2]-1)    |

use std::fmt;
use std::str::FromStr;

use num_complex::Complex;

use crate::error::{Error, Result};
use crate::pq_core::{pq_derivative, PQParams, TruncatedSeries, DEFAULT_ORDER};
use crate::scalar::{lit, RealFloat};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ClassKind {
    Starlike,
    Convex,
}

impl fmt::Display for ClassKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ClassKind::Starlike => "starlike",
            ClassKind::Convex => "convex",
        })
    }
}

impl FromStr for ClassKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "starlike" | "s" => Ok(ClassKind::Starlike),
            "convex" | "c" => Ok(ClassKind::Convex),
            other => Err(Error::domain(format!(
                "unknown class '{other}', expected 'starlike' or 'convex'"
            ))),
        }
    }
}

/// `phi(z) = 1 + b1 z + b2 z^2 + ...` with real coefficients.
#[derive(Debug, Clone, PartialEq)]
pub struct MaMindaTarget<T> {
    b: Vec<T>,
}

impl<T: RealFloat> MaMindaTarget<T> {
    /// `b` lists `b1, b2, ...`; a missing `b2` is taken as zero.
    pub fn new(b: Vec<T>) -> Result<Self> {
        let Some(&b1) = b.first() else {
            return Err(Error::Hypothesis("target needs at least b1".into()));
        };
        if b.iter().any(|x| !x.is_finite()) {
            return Err(Error::Hypothesis("target coefficients must be finite".into()));
        }
        if b1 == T::zero() {
            return Err(Error::Hypothesis("b1 must be nonzero".into()));
        }
        Ok(Self { b })
    }

    /// `(1 + z)/(1 - z) = 1 + 2z + 2z^2 + ...`, kept to the default order.
    pub fn koebe() -> Self {
        Self {
            b: vec![lit(2.0); DEFAULT_ORDER],
        }
    }

    pub fn b1(&self) -> T {
        self.b[0]
    }

    pub fn b2(&self) -> T {
        self.b.get(1).copied().unwrap_or_else(T::zero)
    }

    pub fn coeffs(&self) -> &[T] {
        &self.b
    }

    /// Checks `b1 > 0` and `b2 >= 0`, the hypotheses of the piecewise
    /// (threshold) bounds.
    pub fn require_positive(&self) -> Result<()> {
        if !(self.b1() > T::zero()) {
            return Err(Error::Hypothesis(format!("requires b1 > 0, got {}", self.b1())));
        }
        if !(self.b2() >= T::zero()) {
            return Err(Error::Hypothesis(format!("requires b2 >= 0, got {}", self.b2())));
        }
        Ok(())
    }

    pub fn series(&self, order: usize) -> TruncatedSeries<Complex<T>> {
        let mut coeffs = Vec::with_capacity(order + 1);
        coeffs.push(Complex::new(T::one(), T::zero()));
        coeffs.extend(self.b.iter().map(|&x| Complex::new(x, T::zero())));
        TruncatedSeries::with_order(coeffs, order)
    }
}

fn slack<T: RealFloat>() -> T {
    T::epsilon() * lit(64.0)
}

/// First two Taylor coefficients of a Schwarz function,
/// `|w1| <= 1`, `|w2| <= 1 - |w1|^2`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SchwarzJet<T> {
    w1: Complex<T>,
    w2: Complex<T>,
}

impl<T: RealFloat> SchwarzJet<T> {
    pub fn new(w1: Complex<T>, w2: Complex<T>) -> Result<Self> {
        let r1 = w1.norm_sqr();
        if !(w1.norm() <= T::one() + slack()) || !(w2.norm() <= T::one() - r1 + slack()) {
            return Err(Error::Infeasible(format!(
                "Schwarz jet (w1, w2) = ({w1}, {w2}) violates |w1| <= 1, |w2| <= 1 - |w1|^2"
            )));
        }
        Ok(Self { w1, w2 })
    }

    pub fn real(w1: T, w2: T) -> Result<Self> {
        Self::new(Complex::new(w1, T::zero()), Complex::new(w2, T::zero()))
    }

    /// `w(z) = z` and `w(z) = z^2`, the two extremal jets.
    pub fn extremals() -> [Self; 2] {
        let one = Complex::new(T::one(), T::zero());
        let zero = Complex::new(T::zero(), T::zero());
        [Self { w1: one, w2: zero }, Self { w1: zero, w2: one }]
    }

    pub fn w1(&self) -> Complex<T> {
        self.w1
    }

    pub fn w2(&self) -> Complex<T> {
        self.w2
    }

    pub fn series(&self, order: usize) -> TruncatedSeries<Complex<T>> {
        TruncatedSeries::with_order(vec![Complex::new(T::zero(), T::zero()), self.w1, self.w2], order)
    }
}

/// First two coefficients of a Carathéodory function `p = (1 + w)/(1 - w)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CaratheodoryJet<T> {
    c1: Complex<T>,
    c2: Complex<T>,
}

impl<T: RealFloat> CaratheodoryJet<T> {
    /// Accepts `(c1, c2)` in the second-order coefficient body
    /// `|c1| <= 2`, `|c2 - c1^2/2| <= 2 - |c1|^2/2`.
    pub fn new(c1: Complex<T>, c2: Complex<T>) -> Result<Self> {
        let half: T = lit(0.5);
        let two: T = lit(2.0);
        let ok = c1.norm() <= two + slack()
            && (c2 - c1 * c1 * half).norm() <= two - c1.norm_sqr() * half + slack::<T>() * two;
        if !ok {
            return Err(Error::Infeasible(format!(
                "Carathéodory jet (c1, c2) = ({c1}, {c2}) is outside the coefficient body"
            )));
        }
        Ok(Self { c1, c2 })
    }

    pub fn real(c1: T, c2: T) -> Result<Self> {
        Self::new(Complex::new(c1, T::zero()), Complex::new(c2, T::zero()))
    }

    pub fn c1(&self) -> Complex<T> {
        self.c1
    }

    pub fn c2(&self) -> Complex<T> {
        self.c2
    }

    /// Inverse map: `w1 = c1/2`, `w2 = c2/2 - c1^2/4`.
    pub fn to_schwarz(&self) -> SchwarzJet<T> {
        let half: T = lit(0.5);
        let w1 = self.c1 * half;
        SchwarzJet {
            w1,
            w2: self.c2 * half - w1 * w1,
        }
    }
}

impl<T: RealFloat> From<&SchwarzJet<T>> for CaratheodoryJet<T> {
    fn from(j: &SchwarzJet<T>) -> Self {
        caratheodory_from_schwarz(j)
    }
}

/// `c1 = 2 w1`, `c2 = 2 w1^2 + 2 w2`.
pub fn caratheodory_from_schwarz<T: RealFloat>(j: &SchwarzJet<T>) -> CaratheodoryJet<T> {
    let two: T = lit(2.0);
    CaratheodoryJet {
        c1: j.w1 * two,
        c2: (j.w1 * j.w1 + j.w2) * two,
    }
}

/// Quotient weights of a class evaluated at (possibly effective)
/// (p,q)-numbers `n2 = [2]`, `n3 = [3]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ClassGeometry<T> {
    kind: ClassKind,
    n2: T,
    n3: T,
}

impl<T: RealFloat> ClassGeometry<T> {
    pub fn new(kind: ClassKind, params: &PQParams<T>) -> Result<Self> {
        Self::with_numbers(kind, params.number(2), params.number(3), params)
    }

    /// Geometry at explicitly supplied numbers (used for the Bernardi
    /// substitution `[n] -> [n] L_n`); `params` is only echoed in errors.
    pub fn with_numbers(kind: ClassKind, n2: T, n3: T, params: &PQParams<T>) -> Result<Self> {
        if !(n2 > T::one()) || !(n3 > T::one()) {
            return Err(Error::Degenerate {
                p: params.p().to_string(),
                q: params.q().to_string(),
                n2: n2.to_string(),
                n3: n3.to_string(),
            });
        }
        Ok(Self { kind, n2, n3 })
    }

    pub fn kind(&self) -> ClassKind {
        self.kind
    }

    pub fn n2(&self) -> T {
        self.n2
    }

    pub fn n3(&self) -> T {
        self.n3
    }

    /// Coefficient of `a2` in the `z` term of the class quotient.
    pub fn alpha(&self) -> T {
        match self.kind {
            ClassKind::Starlike => self.n2 - T::one(),
            ClassKind::Convex => self.n2 * (self.n2 - T::one()),
        }
    }

    /// Coefficient of `a3` in the `z^2` term.
    pub fn beta(&self) -> T {
        match self.kind {
            ClassKind::Starlike => self.n3 - T::one(),
            ClassKind::Convex => self.n3 * (self.n3 - T::one()),
        }
    }

    /// Coefficient of `-a2^2` in the `z^2` term.
    pub fn gamma(&self) -> T {
        match self.kind {
            ClassKind::Starlike => self.n2 - T::one(),
            ClassKind::Convex => self.n2 * self.n2 * (self.n2 - T::one()),
        }
    }
}

/// Second-order jet of a class member, with its provenance.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MemberJet<T> {
    a2: Complex<T>,
    a3: Complex<T>,
    kind: ClassKind,
    source: CaratheodoryJet<T>,
    params: PQParams<T>,
    b1: T,
    b2: T,
}

impl<T: RealFloat> MemberJet<T> {
    pub fn a2(&self) -> Complex<T> {
        self.a2
    }

    pub fn a3(&self) -> Complex<T> {
        self.a3
    }

    pub fn kind(&self) -> ClassKind {
        self.kind
    }

    pub fn source(&self) -> &CaratheodoryJet<T> {
        &self.source
    }

    pub fn params(&self) -> &PQParams<T> {
        &self.params
    }

    /// `(b1, b2)` of the target the jet was built for.
    pub fn target_coeffs(&self) -> (T, T) {
        (self.b1, self.b2)
    }

    /// `|a3 - mu a2^2|`.
    pub fn fekete_szego(&self, mu: Complex<T>) -> T {
        (self.a3 - mu * self.a2 * self.a2).norm()
    }

    /// Copy with replaced coefficients and the same provenance. Used to
    /// probe the residual check and to carry transformed jets.
    pub fn with_coefficients(&self, a2: Complex<T>, a3: Complex<T>) -> Self {
        Self { a2, a3, ..*self }
    }

    /// `z + a2 z^2 + a3 z^3`.
    pub fn series(&self) -> TruncatedSeries<Complex<T>> {
        let zero = Complex::new(T::zero(), T::zero());
        let one = Complex::new(T::one(), T::zero());
        TruncatedSeries::new(vec![zero, one, self.a2, self.a3])
    }
}

/// Builds member jets for a fixed `(class, phi, params)`.
#[derive(Debug, Clone, Copy)]
pub struct MemberBuilder<T> {
    geometry: ClassGeometry<T>,
    params: PQParams<T>,
    b1: T,
    b2: T,
}

impl<T: RealFloat> MemberBuilder<T> {
    pub fn new(kind: ClassKind, phi: &MaMindaTarget<T>, params: &PQParams<T>) -> Result<Self> {
        Ok(Self::with_geometry(ClassGeometry::new(kind, params)?, phi, params))
    }

    pub fn with_geometry(geometry: ClassGeometry<T>, phi: &MaMindaTarget<T>, params: &PQParams<T>) -> Self {
        Self {
            geometry,
            params: *params,
            b1: phi.b1(),
            b2: phi.b2(),
        }
    }

    pub fn geometry(&self) -> &ClassGeometry<T> {
        &self.geometry
    }

    pub fn member(&self, c: &CaratheodoryJet<T>) -> MemberJet<T> {
        let g = &self.geometry;
        let (alpha, beta, gamma) = (g.alpha(), g.beta(), g.gamma());
        let (b1, b2) = (self.b1, self.b2);
        let half: T = lit(0.5);
        let two: T = lit(2.0);

        let a2 = c.c1 * (b1 / (two * alpha));
        let shape = half * (T::one() - b2 / b1 - b1 * gamma / (alpha * alpha));
        let a3 = (c.c2 - c.c1 * c.c1 * shape) * (b1 / (two * beta));
        MemberJet {
            a2,
            a3,
            kind: g.kind(),
            source: *c,
            params: self.params,
            b1,
            b2,
        }
    }
}

pub fn starlike_member<T: RealFloat>(
    c: &CaratheodoryJet<T>,
    phi: &MaMindaTarget<T>,
    params: &PQParams<T>,
) -> Result<MemberJet<T>> {
    Ok(MemberBuilder::new(ClassKind::Starlike, phi, params)?.member(c))
}

pub fn convex_member<T: RealFloat>(
    c: &CaratheodoryJet<T>,
    phi: &MaMindaTarget<T>,
    params: &PQParams<T>,
) -> Result<MemberJet<T>> {
    Ok(MemberBuilder::new(ClassKind::Convex, phi, params)?.member(c))
}

/// Largest coefficient mismatch through `z^2` between the class quotient of
/// `m` (computed by series arithmetic) and `phi(w(z))` for the Schwarz jet `j`.
pub fn subordination_residual<T: RealFloat>(
    m: &MemberJet<T>,
    j: &SchwarzJet<T>,
    phi: &MaMindaTarget<T>,
    params: &PQParams<T>,
) -> T {
    let quotient = class_quotient(m.kind(), &m.series(), params)
        .expect("order-3 normalized jet always has an order-2 quotient");
    let target = phi
        .series(2)
        .compose(&j.series(2))
        .expect("Schwarz series has zero constant term");
    (0..=2)
        .map(|k| (quotient.coeff(k) - target.coeff(k)).norm())
        .fold(T::zero(), T::max)
}

/// `z D f / f` (starlike) or `D(z D f) / D f` (convex) for a normalized jet.
pub fn class_quotient<T: RealFloat>(
    kind: ClassKind,
    f: &TruncatedSeries<Complex<T>>,
    params: &PQParams<T>,
) -> Result<TruncatedSeries<Complex<T>>> {
    let df = pq_derivative(f, params)?;
    match kind {
        // z Df / f = Df / (f / z)
        ClassKind::Starlike => df.div(&f.shift_down()?),
        ClassKind::Convex => pq_derivative(&df.shift_up(), params)?.div(&df),
    }
}
