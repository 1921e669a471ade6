//! Brute-force verification of the closed-form bounds.
//!
//! Feasible second-order data is sampled in Schwarz coordinates, where the
//! coefficient body is a product of discs: `|w1| <= 1` and
//! `|w2| <= 1 - |w1|^2`. Each sample is mapped to Carathéodory data and,
//! through the class constructors, to a member jet; the functional is then
//! maximized over the sample and compared to the theoretical value.
//!
//! The sample consists of
//! - a polar grid: radii `k/G` (`k = 0..=G`) and angles `2 pi j / G`
//!   (`j < G`) in each coordinate, scaled into the `w2` disc, so the grid at
//!   density `m G` contains the grid at density `G`;
//! - `random_samples` uniform draws from a seeded ChaCha stream (a longer
//!   stream extends a shorter one);
//! - the extremal jets `w = z` and `w = z^2` when `include_extremals` is set.

use std::f64::consts::TAU;
use std::fmt;

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::bernardi::{self, BernardiParams};
use crate::bounds::{self, Branch, Reading, RefinedForm};
use crate::classes::{caratheodory_from_schwarz, ClassKind, MaMindaTarget, MemberBuilder, SchwarzJet};
use crate::error::{Error, Result};
use crate::pq_core::PQParams;

pub const DEFAULT_SEED: u64 = 20_170_330;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OracleConfig {
    /// Samples per real dimension of the polar grid (`>= 8`).
    pub grid_density: usize,
    pub random_samples: usize,
    pub include_extremals: bool,
    /// Allowed excess of the empirical maximum over the bound.
    pub tolerance: f64,
    /// A bound counts as attained when the gap is at most this.
    pub attain_tolerance: f64,
    pub seed: u64,
}

impl Default for OracleConfig {
    fn default() -> Self {
        Self {
            grid_density: 24,
            random_samples: 10_000,
            include_extremals: true,
            tolerance: bounds::EQUALITY_TOL,
            attain_tolerance: 1e-6,
            seed: DEFAULT_SEED,
        }
    }
}

impl OracleConfig {
    pub fn validate(&self) -> Result<()> {
        if self.grid_density < 8 {
            return Err(Error::domain(format!(
                "grid density must be >= 8, got {}",
                self.grid_density
            )));
        }
        if !(self.tolerance > 0.0) || !(self.attain_tolerance > 0.0) {
            return Err(Error::domain("oracle tolerances must be positive"));
        }
        Ok(())
    }
}

/// Feasible Schwarz jets to maximize over.
#[derive(Debug, Clone)]
pub struct SampleSet {
    jets: Vec<SchwarzJet<f64>>,
}

fn polar(r: f64, theta: f64) -> Complex64 {
    Complex64::from_polar(r, theta)
}

impl SampleSet {
    pub fn new(cfg: &OracleConfig) -> Result<Self> {
        cfg.validate()?;
        let g = cfg.grid_density;
        let radii: Vec<f64> = (0..=g).map(|k| k as f64 / g as f64).collect();
        let angles: Vec<f64> = (0..g).map(|j| TAU * j as f64 / g as f64).collect();
        let ring = |r: f64| -> &[f64] { if r == 0.0 { &angles[..1] } else { &angles[..] } };

        let mut jets = Vec::with_capacity((g * g + 1).pow(2) + cfg.random_samples + 2);
        for &r1 in &radii {
            let room = 1.0 - r1 * r1;
            for &t1 in ring(r1) {
                let w1 = polar(r1, t1);
                if room == 0.0 {
                    jets.push(jet(w1, Complex64::new(0.0, 0.0)));
                    continue;
                }
                for &r2 in &radii {
                    for &t2 in ring(r2) {
                        jets.push(jet(w1, polar(r2 * room, t2)));
                    }
                }
            }
        }

        let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
        for _ in 0..cfg.random_samples {
            let w1 = polar(rng.gen::<f64>().sqrt(), TAU * rng.gen::<f64>());
            let room = 1.0 - w1.norm_sqr();
            let w2 = polar(room.max(0.0) * rng.gen::<f64>().sqrt(), TAU * rng.gen::<f64>());
            jets.push(jet(w1, w2));
        }

        if cfg.include_extremals {
            jets.extend(SchwarzJet::extremals());
        }
        Ok(Self { jets })
    }

    pub fn len(&self) -> usize {
        self.jets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.jets.is_empty()
    }

    pub fn jets(&self) -> &[SchwarzJet<f64>] {
        &self.jets
    }

    /// Largest value of `f` and the first jet attaining it.
    pub fn maximize<F>(&self, f: F) -> (f64, SchwarzJet<f64>)
    where
        F: Fn(&SchwarzJet<f64>) -> f64 + Sync,
    {
        let (value, idx) = self
            .jets
            .par_iter()
            .enumerate()
            .map(|(i, j)| (f(j), i))
            .reduce(
                || (f64::NEG_INFINITY, usize::MAX),
                |a, b| if b.0 > a.0 || (b.0 == a.0 && b.1 < a.1) { b } else { a },
            );
        (value, self.jets[idx])
    }
}

fn jet(w1: Complex64, w2: Complex64) -> SchwarzJet<f64> {
    SchwarzJet::new(w1, w2).expect("sampled jets lie in the feasible body")
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct VerificationRecord {
    pub mu: Complex64,
    pub theoretical: f64,
    pub empirical_max: f64,
    /// `theoretical - empirical_max`; negative beyond tolerance is a violation.
    pub gap: f64,
    pub attained: bool,
    pub passed: bool,
    pub witness: SchwarzJet<f64>,
    pub branch: Branch,
}

impl VerificationRecord {
    fn new(mu: Complex64, theoretical: f64, (empirical_max, witness): (f64, SchwarzJet<f64>), branch: Branch, cfg: &OracleConfig) -> Self {
        let gap = theoretical - empirical_max;
        Self {
            mu,
            theoretical,
            empirical_max,
            gap,
            attained: gap <= cfg.attain_tolerance,
            passed: empirical_max <= theoretical + cfg.tolerance,
            witness,
            branch,
        }
    }
}

/// Reusable sample set plus configuration.
#[derive(Debug, Clone)]
pub struct Verifier {
    cfg: OracleConfig,
    samples: SampleSet,
}

impl Verifier {
    pub fn new(cfg: OracleConfig) -> Result<Self> {
        Ok(Self {
            samples: SampleSet::new(&cfg)?,
            cfg,
        })
    }

    pub fn config(&self) -> &OracleConfig {
        &self.cfg
    }

    pub fn samples(&self) -> &SampleSet {
        &self.samples
    }

    /// `max |c2 - mu c1^2|` against `2 max(1, |2 mu - 1|)`.
    pub fn lemma21(&self, mu: Complex64) -> VerificationRecord {
        let best = self.samples.maximize(|j| {
            let c = caratheodory_from_schwarz(j);
            (c.c2() - mu * c.c1() * c.c1()).norm()
        });
        VerificationRecord::new(mu, bounds::ma_minda_bound(mu), best, Branch::MaxForm, &self.cfg)
    }

    /// Piecewise estimate for real `v`, plus the sharpened sums when
    /// `0 < v < 1`.
    pub fn lemma31(&self, v: f64) -> RealParameterRecord {
        let mu = Complex64::new(v, 0.0);
        let best = self.samples.maximize(|j| {
            let c = caratheodory_from_schwarz(j);
            (c.c2() - c.c1() * c.c1() * v).norm()
        });
        let main = VerificationRecord::new(mu, bounds::lemma31_bound(v), best, Branch::MaxForm, &self.cfg);
        let weight = if v > 0.0 && v <= 0.5 {
            Some(v)
        } else if (0.5..1.0).contains(&v) {
            Some(1.0 - v)
        } else {
            None
        };
        let refined = weight.map(|w| {
            let best = self.samples.maximize(|j| {
                let c = caratheodory_from_schwarz(j);
                (c.c2() - c.c1() * c.c1() * v).norm() + w * c.c1().norm_sqr()
            });
            VerificationRecord::new(mu, 2.0, best, Branch::MaxForm, &self.cfg)
        });
        RealParameterRecord { main, refined }
    }

    /// `max |a3 - mu a2^2|` over member jets against the max-form bound.
    pub fn fs(
        &self,
        kind: ClassKind,
        mu: Complex64,
        phi: &MaMindaTarget<f64>,
        params: &PQParams<f64>,
    ) -> Result<VerificationRecord> {
        let report = bounds::fs_bound(kind, mu, phi, params)?;
        let branch = if mu.im == 0.0 && phi.require_positive().is_ok() {
            bounds::fs_piecewise(kind, mu.re, phi, params, Reading::Consistent)?.branch
        } else {
            Branch::MaxForm
        };
        let builder = MemberBuilder::new(kind, phi, params)?;
        let best = self
            .samples
            .maximize(|j| builder.member(&caratheodory_from_schwarz(j)).fekete_szego(mu));
        Ok(VerificationRecord::new(mu, report.value, best, branch, &self.cfg))
    }

    /// Maximum of the refined left-hand side for the window containing `mu`.
    pub fn refined(
        &self,
        kind: ClassKind,
        mu: f64,
        phi: &MaMindaTarget<f64>,
        params: &PQParams<f64>,
    ) -> Result<VerificationRecord> {
        let thresholds = match kind {
            ClassKind::Starlike => bounds::sigma_thresholds(phi, params)?,
            ClassKind::Convex => bounds::rho_thresholds(phi, params, Reading::Consistent)?,
        };
        let form = RefinedForm::for_mu(&thresholds, mu).ok_or_else(|| {
            let s = thresholds.symbol();
            Error::Window {
                mu: mu.to_string(),
                window: format!("{s}1 < mu < {s}2 = ({}, {})", thresholds.t1, thresholds.t2),
            }
        })?;
        let builder = MemberBuilder::new(kind, phi, params)?;
        let rhs = phi.b1() / builder.geometry().beta();
        let best = self.samples.maximize(|j| {
            let m = builder.member(&caratheodory_from_schwarz(j));
            bounds::refined_terms(form, builder.geometry(), &thresholds, m.a2(), m.a3(), mu, phi)
                .map(|(lhs, _)| lhs)
                .unwrap_or(f64::NAN)
        });
        let branch = match kind {
            ClassKind::Starlike => Branch::Mid,
            ClassKind::Convex => Branch::MidRho,
        };
        Ok(VerificationRecord::new(Complex64::new(mu, 0.0), rhs, best, branch, &self.cfg))
    }

    /// `max |A3 - mu A2^2|` over jets `(A2, A3) = (L2 a2, L3 a3)` of
    /// transformed class members, against the effective-number bound.
    pub fn bernardi(
        &self,
        kind: ClassKind,
        mu: Complex64,
        phi: &MaMindaTarget<f64>,
        bp: &BernardiParams<f64>,
    ) -> Result<VerificationRecord> {
        let report = bernardi::fs_bound_bernardi(kind, mu, phi, bp)?;
        let builder = MemberBuilder::new(kind, phi, bp.base())?;
        let best = self.samples.maximize(|j| {
            let m = builder.member(&caratheodory_from_schwarz(j));
            bernardi::transformed_member(&m, bp).fekete_szego(mu)
        });
        Ok(VerificationRecord::new(mu, report.value, best, Branch::MaxForm, &self.cfg))
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RealParameterRecord {
    pub main: VerificationRecord,
    /// Present for `0 < v < 1`: the sharpened sum against 2.
    pub refined: Option<VerificationRecord>,
}

pub fn brute_force_lemma21(mu: Complex64, cfg: &OracleConfig) -> Result<VerificationRecord> {
    Ok(Verifier::new(*cfg)?.lemma21(mu))
}

pub fn brute_force_lemma31(v: f64, cfg: &OracleConfig) -> Result<RealParameterRecord> {
    Ok(Verifier::new(*cfg)?.lemma31(v))
}

pub fn verify_fs(
    kind: ClassKind,
    mu: impl Into<Complex64>,
    phi: &MaMindaTarget<f64>,
    params: &PQParams<f64>,
    cfg: &OracleConfig,
) -> Result<VerificationRecord> {
    Verifier::new(*cfg)?.fs(kind, mu.into(), phi, params)
}

pub fn verify_refined(
    kind: ClassKind,
    mu: f64,
    phi: &MaMindaTarget<f64>,
    params: &PQParams<f64>,
    cfg: &OracleConfig,
) -> Result<VerificationRecord> {
    Verifier::new(*cfg)?.refined(kind, mu, phi, params)
}

pub fn verify_bernardi(
    kind: ClassKind,
    mu: impl Into<Complex64>,
    phi: &MaMindaTarget<f64>,
    bp: &BernardiParams<f64>,
    cfg: &OracleConfig,
) -> Result<VerificationRecord> {
    Verifier::new(*cfg)?.bernardi(kind, mu.into(), phi, bp)
}

/// Closed interval `[lo, hi]` walked in steps of `step`; empty when `lo >= hi`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MuRange {
    pub lo: f64,
    pub hi: f64,
    pub step: f64,
}

impl MuRange {
    pub fn new(lo: f64, hi: f64, step: f64) -> Result<Self> {
        if !(step > 0.0) || !lo.is_finite() || !hi.is_finite() {
            return Err(Error::domain(format!(
                "mu range needs finite bounds and step > 0, got ({lo}, {hi}, {step})"
            )));
        }
        Ok(Self { lo, hi, step })
    }

    pub fn values(&self) -> Vec<f64> {
        if self.lo >= self.hi {
            return Vec::new();
        }
        let n = ((self.hi - self.lo) / self.step + 1e-9).floor() as usize;
        (0..=n).map(|i| self.lo + i as f64 * self.step).collect()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
    Skip,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Skip => "SKIP(domain)",
        })
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweepRecord {
    pub mu: f64,
    pub outcome: std::result::Result<VerificationRecord, Error>,
}

impl SweepRecord {
    pub fn status(&self) -> Status {
        match &self.outcome {
            Ok(r) if r.passed => Status::Pass,
            Ok(_) => Status::Fail,
            Err(_) => Status::Skip,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Default)]
pub struct SweepReport {
    pub records: Vec<SweepRecord>,
}

impl SweepReport {
    fn count(&self, s: Status) -> usize {
        self.records.iter().filter(|r| r.status() == s).count()
    }

    pub fn passes(&self) -> usize {
        self.count(Status::Pass)
    }

    pub fn failures(&self) -> usize {
        self.count(Status::Fail)
    }

    pub fn skipped(&self) -> usize {
        self.count(Status::Skip)
    }
}

impl Verifier {
    /// One record per `mu`, in increasing order. Domain errors are recorded
    /// per entry rather than aborting the sweep.
    pub fn sweep(
        &self,
        kind: ClassKind,
        range: &MuRange,
        phi: &MaMindaTarget<f64>,
        params: &PQParams<f64>,
    ) -> SweepReport {
        let records = range
            .values()
            .into_iter()
            .map(|mu| SweepRecord {
                mu,
                outcome: self.fs(kind, Complex64::new(mu, 0.0), phi, params),
            })
            .collect();
        SweepReport { records }
    }
}

pub fn sweep(
    kind: ClassKind,
    range: &MuRange,
    phi: &MaMindaTarget<f64>,
    params: &PQParams<f64>,
    cfg: &OracleConfig,
) -> Result<SweepReport> {
    Ok(Verifier::new(*cfg)?.sweep(kind, range, phi, params))
}
