//! The (p,q)-Bernardi integral operator
//!
//! ```text
//! L f(z) = [1+c] / z^c * int_0^z t^(c-1) f(t) d_{p,q}t = z + sum_n L_n a_n z^n,
//! L_n = [1+c] / [n+c],
//! ```
//!
//! and the Fekete-Szegő bounds obtained by substituting the effective numbers
//! `[2] L_2` and `[3] L_3` for `[2]` and `[3]` in the class formulas.

use num_complex::Complex;

use crate::bounds::{self, BoundReport, Reading, RefinedForm, Thresholds};
use crate::classes::{ClassGeometry, ClassKind, MaMindaTarget, MemberJet};
use crate::error::{Error, Result};
use crate::pq_core::{pq_integral, PQParams, TruncatedSeries};
use crate::scalar::{Real, RealFloat, Scalar};

/// Operator order `c >= 0` together with the base (p,q) pair.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BernardiParams<T> {
    c: u32,
    base: PQParams<T>,
}

impl<T: Real> BernardiParams<T> {
    pub fn new(c: u32, base: PQParams<T>) -> Self {
        Self { c, base }
    }

    pub fn c(&self) -> u32 {
        self.c
    }

    pub fn base(&self) -> &PQParams<T> {
        &self.base
    }

    /// `L_n = [1+c]/[n+c]` for `n >= 1`.
    pub fn factor(&self, n: usize) -> Result<T> {
        if n == 0 {
            return Err(Error::domain("Bernardi factor index must be >= 1"));
        }
        let c = self.c as usize;
        Ok(self.base.number(1 + c) / self.base.number(n + c))
    }
}

impl<T: RealFloat> BernardiParams<T> {
    /// `([2] L_2, [3] L_3)`.
    pub fn effective_numbers(&self) -> (T, T) {
        let l2 = self.factor(2).expect("n >= 1");
        let l3 = self.factor(3).expect("n >= 1");
        (self.base.number(2) * l2, self.base.number(3) * l3)
    }

    /// Class weights at the effective numbers.
    pub fn geometry(&self, kind: ClassKind) -> Result<ClassGeometry<T>> {
        let (n2, n3) = self.effective_numbers();
        ClassGeometry::with_numbers(kind, n2, n3, &self.base).map_err(|_| Error::DegenerateEffective {
            c: self.c,
            p: self.base.p().to_string(),
            q: self.base.q().to_string(),
            n2: n2.to_string(),
            n3: n3.to_string(),
        })
    }
}

pub fn bernardi_factor<T: Real>(n: usize, bp: &BernardiParams<T>) -> Result<T> {
    bp.factor(n)
}

fn require_normalized<C: Scalar>(f: &TruncatedSeries<C>) -> Result<()> {
    if f.is_normalized() {
        Ok(())
    } else {
        Err(Error::domain("Bernardi operator needs a normalized series (a0 = 0, a1 = 1)"))
    }
}

/// Coefficient route: `a_n -> L_n a_n`.
pub fn bernardi_transform<T, C>(f: &TruncatedSeries<C>, bp: &BernardiParams<T>) -> Result<TruncatedSeries<C>>
where
    T: Real,
    C: Scalar + From<T>,
{
    require_normalized(f)?;
    let mut coeffs = f.coeffs().to_vec();
    for (n, a) in coeffs.iter_mut().enumerate().skip(1) {
        *a = a.clone() * C::from(bp.factor(n)?);
    }
    Ok(TruncatedSeries::new(coeffs))
}

/// Integral route: `[1+c] z^(-c) int_0^z t^(c-1) f(t) d_{p,q}t`.
pub fn bernardi_integral<T, C>(f: &TruncatedSeries<C>, bp: &BernardiParams<T>) -> Result<TruncatedSeries<C>>
where
    T: Real,
    C: Scalar + From<T>,
{
    require_normalized(f)?;
    let mut integrand = if bp.c == 0 { f.shift_down()? } else { f.clone() };
    for _ in 1..bp.c {
        integrand = integrand.shift_up();
    }
    let mut out = pq_integral(&integrand, &bp.base);
    for _ in 0..bp.c {
        out = out.shift_down()?;
    }
    Ok(out.scale(&C::from(bp.base.number(1 + bp.c as usize))))
}

/// Jet of the transformed function: `(L_2 a2, L_3 a3)`.
pub fn transformed_member<T: RealFloat>(m: &MemberJet<T>, bp: &BernardiParams<T>) -> MemberJet<T> {
    let l2 = bp.factor(2).expect("n >= 1");
    let l3 = bp.factor(3).expect("n >= 1");
    m.with_coefficients(m.a2() * l2, m.a3() * l3)
}

/// Max-form bound at the effective numbers (starlike and convex analogues
/// of the class theorems).
pub fn fs_bound_bernardi<T: RealFloat>(
    kind: ClassKind,
    mu: Complex<T>,
    phi: &MaMindaTarget<T>,
    bp: &BernardiParams<T>,
) -> Result<BoundReport<T>> {
    Ok(bounds::max_form_bound(&bp.geometry(kind)?, mu, phi))
}

pub fn thresholds_bernardi<T: RealFloat>(
    kind: ClassKind,
    phi: &MaMindaTarget<T>,
    bp: &BernardiParams<T>,
    reading: Reading,
) -> Result<Thresholds<T>> {
    bounds::threshold_values(&bp.geometry(kind)?, phi, reading)
}

/// Piecewise bound at the effective numbers. With [`Reading::Printed`] the
/// starlike branch values are taken at the unsubstituted numbers while the
/// thresholds keep the `L` factors.
pub fn fs_piecewise_bernardi<T: RealFloat>(
    kind: ClassKind,
    mu: T,
    phi: &MaMindaTarget<T>,
    bp: &BernardiParams<T>,
    reading: Reading,
) -> Result<BoundReport<T>> {
    let geom = bp.geometry(kind)?;
    let thresholds = bounds::threshold_values(&geom, phi, reading)?;
    let values = match (reading, kind) {
        (Reading::Printed, ClassKind::Starlike) => ClassGeometry::new(kind, &bp.base)?,
        _ => geom,
    };
    Ok(bounds::piecewise_bound(&values, &thresholds, mu, phi))
}

/// Refined inequality `(lhs, rhs)` at the effective numbers for a jet
/// `(a2, a3)` of the transformed function.
pub fn refined_bernardi<T: RealFloat>(
    form: RefinedForm,
    a2: Complex<T>,
    a3: Complex<T>,
    mu: T,
    phi: &MaMindaTarget<T>,
    bp: &BernardiParams<T>,
) -> Result<(T, T)> {
    let geom = bp.geometry(form.kind())?;
    let thresholds = bounds::threshold_values(&geom, phi, Reading::Consistent)?;
    bounds::refined_terms(form, &geom, &thresholds, a2, a3, mu, phi)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classes::{CaratheodoryJet, MemberBuilder};
    use num_complex::Complex64;

    fn classical(c: u32) -> BernardiParams<f64> {
        BernardiParams::new(c, PQParams::classical())
    }

    #[test]
    fn factor_examples() {
        let pq = PQParams::new(0.9f64, 0.6).unwrap();
        for c in 0..4 {
            assert_eq!(BernardiParams::new(c, pq).factor(1).unwrap(), 1.0);
        }
        assert!((classical(1).factor(2).unwrap() - 2.0 / 3.0).abs() < 1e-15);
        let l2 = BernardiParams::new(1, pq).factor(2).unwrap();
        assert!((l2 - 1.5 / 1.71).abs() < 1e-15);
        assert!((l2 - 0.8772).abs() < 1e-4);
        assert!(classical(1).factor(0).is_err());
    }

    #[test]
    fn factors_decrease_when_numbers_increase() {
        // at p = 1 the q-numbers increase, so L_n decreases from L_1 = 1
        for q in [0.3, 0.6, 0.9] {
            let bp = BernardiParams::new(2, PQParams::new(1.0, q).unwrap());
            let l: Vec<f64> = (1..10).map(|n| bp.factor(n).unwrap()).collect();
            assert!(l.windows(2).all(|w| w[1] < w[0]));
            assert!(l.iter().all(|&x| x > 0.0 && x <= 1.0));
        }
    }

    #[test]
    fn factors_can_exceed_one_when_p_below_one() {
        // [n] eventually decreases for p < 1
        let bp = BernardiParams::new(2, PQParams::new(0.8, 0.5).unwrap());
        assert!(bp.factor(2).unwrap() > 1.0);
    }

    #[test]
    fn transform_examples() {
        let z = TruncatedSeries::<f64>::z(4);
        assert_eq!(bernardi_transform(&z, &classical(1)).unwrap(), z);
        let f = TruncatedSeries::new(vec![0.0f64, 1.0, 1.0]);
        let g = bernardi_transform(&f, &classical(1)).unwrap();
        assert!((g.coeff(2) - 2.0 / 3.0).abs() < 1e-15);
        assert_eq!(g.coeff(1), 1.0);
    }

    #[test]
    fn non_normalized_input_rejected() {
        let f = TruncatedSeries::new(vec![0.0, 2.0, 1.0]);
        assert!(bernardi_transform(&f, &classical(1)).is_err());
        assert!(bernardi_integral(&f, &classical(1)).is_err());
    }

    #[test]
    fn integral_route_matches_coefficient_route() {
        let f = TruncatedSeries::new(vec![0.0f64, 1.0, 0.3, -0.7, 0.2, 1.1]);
        let pq = PQParams::new(0.9, 0.6).unwrap();
        for c in 0..4 {
            let bp = BernardiParams::new(c, pq);
            let a = bernardi_transform(&f, &bp).unwrap();
            let b = bernardi_integral(&f, &bp).unwrap();
            assert_eq!(a.order(), b.order());
            for n in 0..=a.order() {
                assert!((a.coeff(n) - b.coeff(n)).abs() < 1e-12, "c={c} n={n}");
            }
        }
    }

    #[test]
    fn application_one_classical() {
        let r = fs_bound_bernardi(ClassKind::Starlike, Complex64::new(0.0, 0.0), &MaMindaTarget::koebe(), &classical(1)).unwrap();
        assert!((r.n3 - 1.5).abs() < 1e-15);
        assert!((r.n2 - 4.0 / 3.0).abs() < 1e-15);
        // 2/0.5 * max(1, |1 + 2/(1/3)|)
        assert!((r.value - 28.0).abs() < 1e-12);
    }

    #[test]
    fn unit_factors_reduce_to_class_bounds() {
        // L2 = L3 = 1 formally: effective numbers equal the base numbers
        let pq = PQParams::new(0.9, 0.6).unwrap();
        let phi = MaMindaTarget::new(vec![1.0, 0.5]).unwrap();
        let mu = Complex64::new(0.4, 0.0);
        for kind in [ClassKind::Starlike, ClassKind::Convex] {
            let geom = ClassGeometry::with_numbers(kind, pq.number(2), pq.number(3), &pq).unwrap();
            let via = bounds::max_form_bound(&geom, mu, &phi).value;
            let direct = bounds::fs_bound(kind, mu, &phi, &pq).unwrap().value;
            assert_eq!(via, direct);
        }
    }

    #[test]
    fn degenerate_effective_numbers_reported() {
        // c = 0 gives [n] L_n = 1 for every n
        let bp = BernardiParams::new(0, PQParams::new(0.9, 0.6).unwrap());
        let err = fs_bound_bernardi(ClassKind::Starlike, Complex64::new(0.0, 0.0), &MaMindaTarget::koebe(), &bp)
            .unwrap_err();
        assert!(matches!(err, Error::DegenerateEffective { c: 0, .. }));
        assert!(err.to_string().contains("[3]L3"));
    }

    #[test]
    fn effective_class_jets_attain_bound() {
        // jets built at the effective numbers are the extremals of the
        // substituted formula
        let bp = classical(2);
        let phi = MaMindaTarget::koebe();
        for kind in [ClassKind::Starlike, ClassKind::Convex] {
            let geom = bp.geometry(kind).unwrap();
            let builder = MemberBuilder::with_geometry(geom, &phi, bp.base());
            for mu in [-1.0, 0.0, 0.5, 2.0] {
                let bound = fs_bound_bernardi(kind, Complex64::new(mu, 0.0), &phi, &bp).unwrap().value;
                let best = [(2.0, 2.0), (0.0, 2.0)]
                    .iter()
                    .map(|&(c1, c2)| {
                        builder
                            .member(&CaratheodoryJet::real(c1, c2).unwrap())
                            .fekete_szego(Complex64::new(mu, 0.0))
                    })
                    .fold(0.0, f64::max);
                assert!((best - bound).abs() < 1e-9, "{kind} mu={mu}");
            }
        }
    }

    #[test]
    fn printed_starlike_piecewise_drops_l_factors() {
        let bp = classical(1);
        let phi = MaMindaTarget::koebe();
        let mid = |reading| {
            let t = thresholds_bernardi(ClassKind::Starlike, &phi, &bp, reading).unwrap();
            fs_piecewise_bernardi(ClassKind::Starlike, (t.t1 + t.t2) / 2.0, &phi, &bp, reading)
                .unwrap()
                .value
        };
        assert!((mid(Reading::Consistent) - 2.0 / 0.5).abs() < 1e-12);
        assert!((mid(Reading::Printed) - 2.0 / 2.0).abs() < 1e-12);
    }

    #[test]
    fn piecewise_agrees_with_max_form() {
        let bp = BernardiParams::new(1, PQParams::new(0.95, 0.8).unwrap());
        let phi = MaMindaTarget::new(vec![1.4, 0.3]).unwrap();
        for kind in [ClassKind::Starlike, ClassKind::Convex] {
            for i in 0..=40 {
                let mu = -2.0 + 0.125 * i as f64;
                let a = fs_piecewise_bernardi(kind, mu, &phi, &bp, Reading::Consistent).unwrap().value;
                let b = fs_bound_bernardi(kind, Complex64::new(mu, 0.0), &phi, &bp).unwrap().value;
                assert!((a - b).abs() < 1e-10, "{kind} mu={mu}: {a} vs {b}");
            }
        }
    }

    #[test]
    fn refined_bernardi_window() {
        let bp = classical(1);
        let phi = MaMindaTarget::koebe();
        let t = thresholds_bernardi(ClassKind::Starlike, &phi, &bp, Reading::Consistent).unwrap();
        let zero = Complex64::new(0.0, 0.0);
        let mu = (t.t1 + t.t3) / 2.0;
        let (lhs, rhs) = refined_bernardi(RefinedForm::StarlikeLow, zero, zero, mu, &phi, &bp).unwrap();
        assert_eq!(lhs, 0.0);
        assert!(rhs > 0.0);
        assert!(refined_bernardi(RefinedForm::StarlikeHigh, zero, zero, mu, &phi, &bp).is_err());
    }

    #[test]
    fn transformed_member_scales_coefficients() {
        let bp = classical(1);
        let phi = MaMindaTarget::koebe();
        let m = MemberBuilder::new(ClassKind::Starlike, &phi, bp.base())
            .unwrap()
            .member(&CaratheodoryJet::real(2.0, 2.0).unwrap());
        let t = transformed_member(&m, &bp);
        assert!((t.a2().re - 4.0 / 3.0).abs() < 1e-15);
        assert!((t.a3().re - 1.5).abs() < 1e-15);
    }
}
