//! Closed-form Fekete-Szegő bounds for the (p,q)-starlike and (p,q)-convex
//! classes.
//!
//! Every member satisfies
//!
//! ```text
//! a3 - mu a2^2 = b1 / (2 beta) * (c2 - v c1^2),
//! v = (1 - b2/b1 - (b1 gamma / alpha^2)(1 - mu beta / gamma)) / 2
//! ```
//!
//! (weights from [`ClassGeometry`]), so the bounds follow from the
//! Carathéodory estimates [`ma_minda_bound`] and [`lemma31_bound`]. The
//! functions taking a [`ClassGeometry`] directly are shared with the
//! Bernardi module, which evaluates the same formulas at effective numbers.

use std::fmt;

use num_complex::Complex;

use crate::classes::{ClassGeometry, ClassKind, MaMindaTarget, MemberJet};
use crate::error::{Error, Result};
use crate::pq_core::PQParams;
use crate::scalar::{lit, RealFloat};

/// Absolute tolerance for equality assertions.
pub const EQUALITY_TOL: f64 = 1e-9;
/// Absolute tolerance for algebraic identities.
pub const IDENTITY_TOL: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Branch {
    MaxForm,
    BelowSigma1,
    Mid,
    AboveSigma2,
    BelowRho1,
    MidRho,
    AboveRho2,
}

impl Branch {
    pub fn as_str(&self) -> &'static str {
        match self {
            Branch::MaxForm => "max_form",
            Branch::BelowSigma1 => "below_sigma1",
            Branch::Mid => "mid",
            Branch::AboveSigma2 => "above_sigma2",
            Branch::BelowRho1 => "below_rho1",
            Branch::MidRho => "mid_rho",
            Branch::AboveRho2 => "above_rho2",
        }
    }
}

impl fmt::Display for Branch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Which variant of the threshold formulas to evaluate.
///
/// `Printed` keeps the typeset factor `([2][2]-1)^2` in the convex
/// thresholds (and drops the `L` factors from the Bernardi starlike
/// piecewise values). It exists for side-by-side comparison only; the
/// `Consistent` variant is the one that agrees with the max-form bounds.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Reading {
    #[default]
    Consistent,
    Printed,
}

/// `(sigma1, sigma2, sigma3)` for the starlike class, `(rho1, rho2, rho3)`
/// for the convex class. `t1 <= t3 <= t2` whenever `b1 > 0`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Thresholds<T> {
    pub kind: ClassKind,
    pub t1: T,
    pub t2: T,
    pub t3: T,
}

impl<T: RealFloat> Thresholds<T> {
    pub fn symbol(&self) -> &'static str {
        match self.kind {
            ClassKind::Starlike => "sigma",
            ClassKind::Convex => "rho",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoundReport<T> {
    pub value: T,
    pub branch: Branch,
    pub thresholds: Option<Thresholds<T>>,
    pub mu: Complex<T>,
    pub kind: ClassKind,
    /// `[2]` and `[3]` used by the formulas (effective values for Bernardi).
    pub n2: T,
    pub n3: T,
}

/// `2 max(1, |2 mu - 1|)`, the sharp bound on `|c2 - mu c1^2|`.
pub fn ma_minda_bound<T: RealFloat>(mu: Complex<T>) -> T {
    let two: T = lit(2.0);
    two * T::one().max((mu * two - T::one()).norm())
}

/// Piecewise bound on `|c2 - v c1^2|` for real `v`.
pub fn lemma31_bound<T: RealFloat>(v: T) -> T {
    let two: T = lit(2.0);
    let four: T = lit(4.0);
    if v <= T::zero() {
        two - four * v
    } else if v <= T::one() {
        two
    } else {
        four * v - two
    }
}

/// The reduced parameter `v` with `a3 - mu a2^2 = b1/(2 beta) (c2 - v c1^2)`.
pub fn reduced_parameter<T: RealFloat>(
    geom: &ClassGeometry<T>,
    mu: Complex<T>,
    phi: &MaMindaTarget<T>,
) -> Complex<T> {
    let (b1, b2) = (phi.b1(), phi.b2());
    let (alpha, beta, gamma) = (geom.alpha(), geom.beta(), geom.gamma());
    let one = Complex::new(T::one(), T::zero());
    let lead = b1 * gamma / (alpha * alpha);
    (one * (T::one() - b2 / b1) - (one - mu * (beta / gamma)) * lead) * lit::<T>(0.5)
}

pub fn v_starlike<T: RealFloat>(mu: Complex<T>, phi: &MaMindaTarget<T>, params: &PQParams<T>) -> Result<Complex<T>> {
    Ok(reduced_parameter(&ClassGeometry::new(ClassKind::Starlike, params)?, mu, phi))
}

pub fn v_convex<T: RealFloat>(mu: Complex<T>, phi: &MaMindaTarget<T>, params: &PQParams<T>) -> Result<Complex<T>> {
    Ok(reduced_parameter(&ClassGeometry::new(ClassKind::Convex, params)?, mu, phi))
}

/// `|b1|/beta * max(1, |b2/b1 + (b1 gamma/alpha^2)(1 - mu beta/gamma)|)`.
pub fn max_form_bound<T: RealFloat>(
    geom: &ClassGeometry<T>,
    mu: Complex<T>,
    phi: &MaMindaTarget<T>,
) -> BoundReport<T> {
    let v = reduced_parameter(geom, mu, phi);
    let value = phi.b1().abs() / (lit::<T>(2.0) * geom.beta()) * ma_minda_bound(v);
    BoundReport {
        value,
        branch: Branch::MaxForm,
        thresholds: None,
        mu,
        kind: geom.kind(),
        n2: geom.n2(),
        n3: geom.n3(),
    }
}

/// The max form with `mu` multiplying the whole bracket:
/// `|b1|/beta * max(1, |b2/b1 + (b1 gamma/alpha^2)(1 - beta/gamma) mu|)`.
/// Not a valid bound in general (at `mu = 0` it drops the `b1` term); kept
/// for comparison with [`max_form_bound`].
pub fn printed_max_form_bound<T: RealFloat>(
    geom: &ClassGeometry<T>,
    mu: Complex<T>,
    phi: &MaMindaTarget<T>,
) -> BoundReport<T> {
    let (b1, b2) = (phi.b1(), phi.b2());
    let (alpha, beta, gamma) = (geom.alpha(), geom.beta(), geom.gamma());
    let inner = mu * (b1 * gamma / (alpha * alpha) * (T::one() - beta / gamma)) + b2 / b1;
    BoundReport {
        value: b1.abs() / beta * T::one().max(inner.norm()),
        branch: Branch::MaxForm,
        thresholds: None,
        mu,
        kind: geom.kind(),
        n2: geom.n2(),
        n3: geom.n3(),
    }
}

pub fn fs_bound<T: RealFloat>(
    kind: ClassKind,
    mu: Complex<T>,
    phi: &MaMindaTarget<T>,
    params: &PQParams<T>,
) -> Result<BoundReport<T>> {
    Ok(max_form_bound(&ClassGeometry::new(kind, params)?, mu, phi))
}

pub fn fs_bound_starlike<T: RealFloat>(
    mu: Complex<T>,
    phi: &MaMindaTarget<T>,
    params: &PQParams<T>,
) -> Result<BoundReport<T>> {
    fs_bound(ClassKind::Starlike, mu, phi, params)
}

pub fn fs_bound_convex<T: RealFloat>(
    mu: Complex<T>,
    phi: &MaMindaTarget<T>,
    params: &PQParams<T>,
) -> Result<BoundReport<T>> {
    fs_bound(ClassKind::Convex, mu, phi, params)
}

/// Values of `mu` at which `v` equals 0, 1 and 1/2:
/// `t = (gamma b1^2 + alpha^2 (b2 + s b1)) / (beta b1^2)` for `s = -1, +1, 0`.
pub fn threshold_values<T: RealFloat>(
    geom: &ClassGeometry<T>,
    phi: &MaMindaTarget<T>,
    reading: Reading,
) -> Result<Thresholds<T>> {
    phi.require_positive()?;
    let (b1, b2) = (phi.b1(), phi.b2());
    let n2 = geom.n2();
    let square = match (reading, geom.kind()) {
        (Reading::Printed, ClassKind::Convex) => (n2 * n2 - T::one()).powi(2),
        _ => geom.alpha() * geom.alpha(),
    };
    let denom = geom.beta() * b1 * b1;
    let base = geom.gamma() * b1 * b1;
    let at = |shift: T| (base + square * (b2 + shift)) / denom;
    Ok(Thresholds {
        kind: geom.kind(),
        t1: at(-b1),
        t2: at(b1),
        t3: at(T::zero()),
    })
}

pub fn sigma_thresholds<T: RealFloat>(phi: &MaMindaTarget<T>, params: &PQParams<T>) -> Result<Thresholds<T>> {
    threshold_values(&ClassGeometry::new(ClassKind::Starlike, params)?, phi, Reading::Consistent)
}

pub fn rho_thresholds<T: RealFloat>(
    phi: &MaMindaTarget<T>,
    params: &PQParams<T>,
    reading: Reading,
) -> Result<Thresholds<T>> {
    threshold_values(&ClassGeometry::new(ClassKind::Convex, params)?, phi, reading)
}

/// Three-branch bound for real `mu`. Branch selection uses `thresholds`,
/// branch values use the weights of `geom`:
///
/// ```text
/// mu <= t1:       b2/beta + (b1^2 gamma/alpha^2)(1/beta - mu/gamma)
/// t1 <= mu <= t2: b1/beta
/// mu >= t2:       -(first branch)
/// ```
pub fn piecewise_bound<T: RealFloat>(
    geom: &ClassGeometry<T>,
    thresholds: &Thresholds<T>,
    mu: T,
    phi: &MaMindaTarget<T>,
) -> BoundReport<T> {
    let (b1, b2) = (phi.b1(), phi.b2());
    let (alpha, beta, gamma) = (geom.alpha(), geom.beta(), geom.gamma());
    let outer = b2 / beta + b1 * b1 * gamma / (alpha * alpha) * (T::one() / beta - mu / gamma);
    let convex = geom.kind() == ClassKind::Convex;
    let (value, branch) = if mu <= thresholds.t1 {
        (outer, if convex { Branch::BelowRho1 } else { Branch::BelowSigma1 })
    } else if mu < thresholds.t2 {
        (b1 / beta, if convex { Branch::MidRho } else { Branch::Mid })
    } else {
        (-outer, if convex { Branch::AboveRho2 } else { Branch::AboveSigma2 })
    };
    BoundReport {
        value,
        branch,
        thresholds: Some(*thresholds),
        mu: Complex::new(mu, T::zero()),
        kind: geom.kind(),
        n2: geom.n2(),
        n3: geom.n3(),
    }
}

pub fn fs_piecewise<T: RealFloat>(
    kind: ClassKind,
    mu: T,
    phi: &MaMindaTarget<T>,
    params: &PQParams<T>,
    reading: Reading,
) -> Result<BoundReport<T>> {
    let geom = ClassGeometry::new(kind, params)?;
    let thresholds = threshold_values(&geom, phi, reading)?;
    Ok(piecewise_bound(&geom, &thresholds, mu, phi))
}

pub fn fs_piecewise_starlike<T: RealFloat>(
    mu: T,
    phi: &MaMindaTarget<T>,
    params: &PQParams<T>,
) -> Result<BoundReport<T>> {
    fs_piecewise(ClassKind::Starlike, mu, phi, params, Reading::Consistent)
}

pub fn fs_piecewise_convex<T: RealFloat>(
    mu: T,
    phi: &MaMindaTarget<T>,
    params: &PQParams<T>,
) -> Result<BoundReport<T>> {
    fs_piecewise(ClassKind::Convex, mu, phi, params, Reading::Consistent)
}

/// Sharpened inequalities inside the middle threshold window.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RefinedForm {
    /// `t1 < mu <= t3`: `|a3 - mu a2^2| + (mu - t1)|a2|^2 <= b1/beta`.
    StarlikeLow,
    /// `t3 <= mu < t2`: `|a3 - mu a2^2| + (t2 - mu)|a2|^2 <= b1/beta`.
    StarlikeHigh,
    ConvexLow,
    ConvexHigh,
}

impl RefinedForm {
    pub fn new(kind: ClassKind, low: bool) -> Self {
        match (kind, low) {
            (ClassKind::Starlike, true) => RefinedForm::StarlikeLow,
            (ClassKind::Starlike, false) => RefinedForm::StarlikeHigh,
            (ClassKind::Convex, true) => RefinedForm::ConvexLow,
            (ClassKind::Convex, false) => RefinedForm::ConvexHigh,
        }
    }

    pub fn kind(&self) -> ClassKind {
        match self {
            RefinedForm::StarlikeLow | RefinedForm::StarlikeHigh => ClassKind::Starlike,
            RefinedForm::ConvexLow | RefinedForm::ConvexHigh => ClassKind::Convex,
        }
    }

    pub fn is_low(&self) -> bool {
        matches!(self, RefinedForm::StarlikeLow | RefinedForm::ConvexLow)
    }

    /// The form whose window contains `mu`, preferring the low form at `t3`.
    pub fn for_mu<T: RealFloat>(thresholds: &Thresholds<T>, mu: T) -> Option<Self> {
        if thresholds.t1 < mu && mu <= thresholds.t3 {
            Some(Self::new(thresholds.kind, true))
        } else if thresholds.t3 <= mu && mu < thresholds.t2 {
            Some(Self::new(thresholds.kind, false))
        } else {
            None
        }
    }

    fn window<T: RealFloat>(&self, t: &Thresholds<T>, mu: T) -> Result<()> {
        let s = t.symbol();
        let (inside, window) = if self.is_low() {
            (t.t1 < mu && mu <= t.t3, format!("{s}1 < mu <= {s}3 = ({}, {}]", t.t1, t.t3))
        } else {
            (t.t3 <= mu && mu < t.t2, format!("{s}3 <= mu < {s}2 = [{}, {})", t.t3, t.t2))
        };
        if inside {
            Ok(())
        } else {
            Err(Error::Window {
                mu: mu.to_string(),
                window,
            })
        }
    }
}

/// `(lhs, rhs)` of a refined inequality for coefficients `(a2, a3)`.
pub fn refined_terms<T: RealFloat>(
    form: RefinedForm,
    geom: &ClassGeometry<T>,
    thresholds: &Thresholds<T>,
    a2: Complex<T>,
    a3: Complex<T>,
    mu: T,
    phi: &MaMindaTarget<T>,
) -> Result<(T, T)> {
    form.window(thresholds, mu)?;
    let weight = if form.is_low() {
        mu - thresholds.t1
    } else {
        thresholds.t2 - mu
    };
    let lhs = (a3 - a2 * a2 * mu).norm() + weight * a2.norm_sqr();
    Ok((lhs, phi.b1() / geom.beta()))
}

pub fn refined_inequality_lhs<T: RealFloat>(
    form: RefinedForm,
    m: &MemberJet<T>,
    mu: T,
    phi: &MaMindaTarget<T>,
    params: &PQParams<T>,
) -> Result<(T, T)> {
    if m.kind() != form.kind() {
        return Err(Error::domain(format!(
            "refined form for the {} class applied to a {} member",
            form.kind(),
            m.kind()
        )));
    }
    let geom = ClassGeometry::new(form.kind(), params)?;
    let thresholds = threshold_values(&geom, phi, Reading::Consistent)?;
    refined_terms(form, &geom, &thresholds, m.a2(), m.a3(), mu, phi)
}
