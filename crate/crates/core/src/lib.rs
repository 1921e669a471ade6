//! (p,q)-calculus on truncated power series, Fekete-Szegő bounds for the
//! (p,q)-starlike and (p,q)-convex classes, and a brute-force oracle that
//! checks those bounds over the second-order Carathéodory coefficient body.
//!
//! The algebra is generic over the scalar type. [`pq_core`] works for any
//! field (floats, complex numbers, exact rationals); [`classes`], [`bounds`]
//! and [`bernardi`] are generic over `f32`/`f64`. The oracle and the CLI run
//! in double precision and use the aliases below.

#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod bernardi;
pub mod bounds;
pub mod classes;
pub mod cli;
mod error;
pub mod oracle;
pub mod pq_core;
pub mod scalar;

pub use num_complex::{Complex, Complex64};

pub use bernardi::BernardiParams;
pub use bounds::{BoundReport, Branch, Reading, Thresholds};
pub use classes::{CaratheodoryJet, ClassKind, MaMindaTarget, MemberJet, SchwarzJet};
pub use error::{Error, Result};
pub use oracle::{OracleConfig, VerificationRecord};
pub use pq_core::{PQParams, TruncatedSeries};

/// Double-precision (p,q) pair.
pub type Params = PQParams<f64>;
/// Complex double-precision series, the working type for function jets.
pub type Series = TruncatedSeries<Complex64>;
/// Real double-precision series.
pub type RealSeries = TruncatedSeries<f64>;
pub type Target = MaMindaTarget<f64>;
pub type Schwarz = SchwarzJet<f64>;
pub type Caratheodory = CaratheodoryJet<f64>;
pub type Member = MemberJet<f64>;
pub type Report = BoundReport<f64>;
pub type Bernardi = BernardiParams<f64>;
