//! `pqfs` command-line front end.
//!
//! Exit codes: 0 on success, 1 when any verification fails, 2 on usage or
//! domain errors.

use std::ffi::OsString;
use std::fs::File;
use std::io::{self, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_complex::Complex64;

use crate::bernardi::{self, BernardiParams};
use crate::bounds::{self, Reading};
use crate::classes::{ClassGeometry, ClassKind, MaMindaTarget};
use crate::error::{Error, Result};
use crate::oracle::{self, MuRange, OracleConfig, Status, SweepRecord, VerificationRecord, Verifier};
use crate::pq_core::PQParams;

pub const SEED_ENV: &str = "PQFS_SEED";

#[derive(Debug, Parser)]
#[command(name = "pqfs", version, about = "Fekete-Szegő bounds for (p,q)-starlike and (p,q)-convex classes")]
pub struct RunConfig {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Closed-form bound on |a3 - mu a2^2|.
    Bound {
        #[command(flatten)]
        problem: Problem,
        #[command(flatten)]
        mu: MuArg,
        /// Evaluate the piecewise form (real mu, b1 > 0, b2 >= 0).
        #[arg(long)]
        piecewise: bool,
        /// Use the formulas as typeset instead of the consistent variants.
        #[arg(long)]
        literal: bool,
    },
    /// Threshold triple (sigma for starlike, rho for convex).
    Thresholds {
        #[command(flatten)]
        problem: Problem,
        #[arg(long)]
        literal: bool,
    },
    /// Compare a bound with the brute-force maximum.
    Verify {
        #[command(flatten)]
        problem: Problem,
        #[command(flatten)]
        mu: MuArg,
        /// Check the refined inequality for the window containing mu.
        #[arg(long)]
        refined: bool,
        #[command(flatten)]
        oracle: OracleArgs,
    },
    /// Verify over a range of real mu and emit a table or CSV.
    Sweep {
        #[command(flatten)]
        problem: Problem,
        /// `lo,hi,step`
        #[arg(long, allow_hyphen_values = true)]
        mu_range: String,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
        #[command(flatten)]
        oracle: OracleArgs,
    },
    /// Bounds for the image under the (p,q)-Bernardi operator.
    Bernardi {
        #[command(flatten)]
        problem: Problem,
        #[command(flatten)]
        mu: MuArg,
        #[arg(long)]
        c: u32,
        #[arg(long)]
        piecewise: bool,
        #[arg(long)]
        literal: bool,
        /// Check soundness on transformed class members.
        #[arg(long)]
        verify: bool,
        #[command(flatten)]
        oracle: OracleArgs,
    },
    /// Classical-limit regressions with oracle checks.
    Limits {
        #[command(flatten)]
        oracle: OracleArgs,
    },
    /// Sample Re(z D_{p,q} f(z) / f(z)) on a polar grid in the unit disc.
    Region {
        /// Coefficients of z, z^2, ... (`"1,0.3"` is z + 0.3 z^2).
        #[arg(long, allow_hyphen_values = true)]
        f: String,
        #[arg(long)]
        p: f64,
        #[arg(long)]
        q: f64,
        #[arg(long, default_value_t = 64)]
        grid: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Debug, Args)]
pub struct Problem {
    #[arg(long, value_parser = parse_kind)]
    pub class: ClassKind,
    /// `koebe` or `b1,b2[,b3...]`
    #[arg(long, default_value = "koebe", allow_hyphen_values = true)]
    pub phi: String,
    #[arg(long)]
    pub p: f64,
    #[arg(long)]
    pub q: f64,
}

#[derive(Debug, Args)]
pub struct MuArg {
    #[arg(long, allow_hyphen_values = true)]
    pub mu: f64,
    /// Imaginary part of mu.
    #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
    pub mu_im: f64,
}

impl MuArg {
    fn value(&self) -> Complex64 {
        Complex64::new(self.mu, self.mu_im)
    }

    fn real(&self) -> Result<f64> {
        if self.mu_im != 0.0 {
            return Err(Error::domain("this form needs a real mu"));
        }
        Ok(self.mu)
    }
}

#[derive(Debug, Args)]
pub struct OracleArgs {
    #[arg(long, default_value_t = 24)]
    pub grid: usize,
    #[arg(long, default_value_t = 10_000)]
    pub samples: usize,
    #[arg(long)]
    pub no_extremals: bool,
    #[arg(long, default_value_t = bounds::EQUALITY_TOL)]
    pub tol: f64,
    /// Overrides PQFS_SEED.
    #[arg(long)]
    pub seed: Option<u64>,
}

impl OracleArgs {
    pub fn config(&self) -> Result<OracleConfig> {
        let seed = match self.seed {
            Some(s) => s,
            None => match std::env::var(SEED_ENV) {
                Ok(v) => v
                    .trim()
                    .parse()
                    .map_err(|_| Error::domain(format!("{SEED_ENV} must be an unsigned integer, got {v:?}")))?,
                Err(_) => oracle::DEFAULT_SEED,
            },
        };
        let cfg = OracleConfig {
            grid_density: self.grid,
            random_samples: self.samples,
            include_extremals: !self.no_extremals,
            tolerance: self.tol,
            seed,
            ..OracleConfig::default()
        };
        cfg.validate()?;
        Ok(cfg)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Table,
    Csv,
}

fn parse_kind(s: &str) -> std::result::Result<ClassKind, String> {
    s.parse::<ClassKind>().map_err(|e| e.to_string())
}

fn parse_list(s: &str, what: &str) -> Result<Vec<f64>> {
    s.split(',')
        .map(|t| {
            t.trim()
                .parse::<f64>()
                .ok()
                .filter(|x| x.is_finite())
                .ok_or_else(|| Error::domain(format!("malformed {what} entry {t:?} in {s:?}")))
        })
        .collect()
}

pub fn parse_phi(s: &str) -> Result<MaMindaTarget<f64>> {
    if s.trim().eq_ignore_ascii_case("koebe") {
        return Ok(MaMindaTarget::koebe());
    }
    MaMindaTarget::new(parse_list(s, "phi")?)
}

/// `p = q` goes through the relaxed constructor (classical-limit mode).
pub fn parse_params(p: f64, q: f64) -> Result<PQParams<f64>> {
    if p == q {
        PQParams::relaxed(p, q)
    } else {
        PQParams::new(p, q)
    }
}

fn parse_range(s: &str) -> Result<MuRange> {
    match parse_list(s, "mu-range")?.as_slice() {
        [lo, hi, step] => MuRange::new(*lo, *hi, *step),
        _ => Err(Error::domain(format!("mu-range must be lo,hi,step, got {s:?}"))),
    }
}

/// Like C's `%.{digits}g`.
pub fn fmt_g(x: f64, digits: usize) -> String {
    if x.is_nan() {
        return "NaN".into();
    }
    if x.is_infinite() {
        return if x > 0.0 { "inf".into() } else { "-inf".into() };
    }
    if x == 0.0 {
        return "0".into();
    }
    let sci = format!("{:.*e}", digits - 1, x);
    let (mant, exp) = sci.split_once('e').expect("exponent");
    let exp: i32 = exp.parse().expect("integer exponent");
    if exp < -4 || exp >= digits as i32 {
        let mant = trim_zeros(mant);
        format!("{mant}e{}{:02}", if exp < 0 { '-' } else { '+' }, exp.abs())
    } else {
        let decimals = (digits as i32 - 1 - exp).max(0) as usize;
        trim_zeros(&format!("{x:.decimals$}")).to_string()
    }
}

fn trim_zeros(s: &str) -> &str {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.')
    } else {
        s
    }
}

fn g12(x: f64) -> String {
    fmt_g(x, 12)
}

fn fmt_mu(mu: Complex64) -> String {
    if mu.im == 0.0 {
        g12(mu.re)
    } else {
        format!("{}{:+}i", g12(mu.re), g12(mu.im))
    }
}

fn status_of(r: &VerificationRecord) -> Status {
    if r.passed {
        Status::Pass
    } else {
        Status::Fail
    }
}

/// Header plus one row per record, sorted by `mu`.
pub fn emit_csv<W: Write>(records: &[SweepRecord], w: W) -> Result<()> {
    if records.is_empty() {
        return Err(Error::domain("no records to write"));
    }
    let mut rows: Vec<&SweepRecord> = records.iter().collect();
    rows.sort_by(|a, b| a.mu.total_cmp(&b.mu));
    let mut wtr = csv::Writer::from_writer(w);
    let io = |e: csv::Error| Error::domain(format!("writing CSV: {e}"));
    wtr.write_record(["mu", "theoretical", "empirical", "gap", "branch", "status"]).map_err(io)?;
    for r in rows {
        let status = r.status().to_string();
        let row = match &r.outcome {
            Ok(v) => [g12(r.mu), g12(v.theoretical), g12(v.empirical_max), g12(v.gap), v.branch.to_string(), status],
            Err(_) => [g12(r.mu), String::new(), String::new(), String::new(), String::new(), status],
        };
        wtr.write_record(&row).map_err(io)?;
    }
    wtr.flush().map_err(|e| Error::domain(format!("writing CSV: {e}")))?;
    Ok(())
}

fn emit_table(records: &[SweepRecord], w: &mut dyn Write) -> io::Result<()> {
    writeln!(w, "{:>10} {:>16} {:>16} {:>12} {:>13} status", "mu", "theoretical", "empirical", "gap", "branch")?;
    for r in records {
        match &r.outcome {
            Ok(v) => writeln!(
                w,
                "{:>10} {:>16} {:>16} {:>12} {:>13} {}",
                g12(r.mu),
                g12(v.theoretical),
                g12(v.empirical_max),
                fmt_g(v.gap, 4),
                v.branch.as_str(),
                r.status()
            )?,
            Err(e) => writeln!(w, "{:>10} {:>16} {:>16} {:>12} {:>13} {} {e}", g12(r.mu), "", "", "", "", r.status())?,
        }
    }
    Ok(())
}

/// `(x, y, Re(z D_{p,q} f(z) / f(z)))` on radii `i/grid`, angles
/// `2 pi j/grid`, via `z D f(z) = (f(pz) - f(qz)) / (p - q)`. The origin
/// carries the limit value 1 and points where `f` vanishes carry NaN.
pub fn region_sample(coeffs: &[f64], params: &PQParams<f64>, grid: usize) -> Result<Vec<(f64, f64, f64)>> {
    if grid < 16 {
        return Err(Error::domain(format!("grid must be >= 16, got {grid}")));
    }
    if coeffs.is_empty() || coeffs[0] == 0.0 {
        return Err(Error::domain("f needs a nonzero coefficient of z"));
    }
    let (p, q) = (*params.p(), *params.q());
    let eval = |z: Complex64| coeffs.iter().rev().fold(Complex64::new(0.0, 0.0), |acc, &a| (acc + a) * z);
    let zdf = |z: Complex64| {
        if p == q {
            // coefficient form: sum [n] a_n z^n
            coeffs
                .iter()
                .enumerate()
                .rev()
                .fold(Complex64::new(0.0, 0.0), |acc, (i, &a)| (acc + a * params.number(i + 1)) * z)
        } else {
            (eval(z * p) - eval(z * q)) / (p - q)
        }
    };
    let scale: f64 = coeffs.iter().map(|a| a.abs()).sum();
    let mut rows = Vec::with_capacity(grid * grid);
    for i in 0..grid {
        let r = i as f64 / grid as f64;
        for j in 0..grid {
            let z = Complex64::from_polar(r, std::f64::consts::TAU * j as f64 / grid as f64);
            let value = if i == 0 {
                1.0
            } else {
                let fz = eval(z);
                if fz.norm() <= 1e-12 * scale {
                    f64::NAN
                } else {
                    (zdf(z) / fz).re
                }
            };
            rows.push((z.re, z.im, value));
        }
    }
    Ok(rows)
}

fn open_out(path: &Option<PathBuf>) -> Result<Option<File>> {
    path.as_ref()
        .map(|p| File::create(p).map_err(|e| Error::domain(format!("cannot write {}: {e}", p.display()))))
        .transpose()
}

enum Outcome {
    Ok,
    Violation,
}

fn check(pass: bool) -> Outcome {
    if pass {
        Outcome::Ok
    } else {
        Outcome::Violation
    }
}

fn thresholds_for(kind: ClassKind, phi: &MaMindaTarget<f64>, params: &PQParams<f64>, reading: Reading) -> Result<bounds::Thresholds<f64>> {
    match kind {
        ClassKind::Starlike => bounds::sigma_thresholds(phi, params),
        ClassKind::Convex => bounds::rho_thresholds(phi, params, reading),
    }
}

fn write_record(w: &mut dyn Write, r: &VerificationRecord) -> io::Result<()> {
    writeln!(w, "mu          {}", fmt_mu(r.mu))?;
    writeln!(w, "theoretical {}", g12(r.theoretical))?;
    writeln!(w, "empirical   {}", g12(r.empirical_max))?;
    writeln!(w, "gap         {}", g12(r.gap))?;
    writeln!(w, "witness     w1 = {}, w2 = {}", r.witness.w1(), r.witness.w2())?;
    writeln!(w, "attained    {}", r.attained)?;
    writeln!(w, "status      {}", status_of(r))
}

fn dispatch(cmd: &Command, out: &mut dyn Write) -> Result<Outcome> {
    let io = |e: io::Error| Error::domain(format!("output: {e}"));
    match cmd {
        Command::Bound { problem, mu, piecewise, literal } => {
            let phi = parse_phi(&problem.phi)?;
            let params = parse_params(problem.p, problem.q)?;
            let reading = if *literal { Reading::Printed } else { Reading::Consistent };
            let report = if *piecewise {
                bounds::fs_piecewise(problem.class, mu.real()?, &phi, &params, reading)?
            } else if *literal {
                bounds::printed_max_form_bound(&ClassGeometry::new(problem.class, &params)?, mu.value(), &phi)
            } else {
                bounds::fs_bound(problem.class, mu.value(), &phi, &params)?
            };
            writeln!(out, "value  {}", g12(report.value)).map_err(io)?;
            writeln!(out, "branch {}", report.branch).map_err(io)?;
            if let Some(t) = report.thresholds {
                let s = t.symbol();
                writeln!(out, "{s}1 {}  {s}2 {}  {s}3 {}", g12(t.t1), g12(t.t2), g12(t.t3)).map_err(io)?;
            }
            Ok(Outcome::Ok)
        }
        Command::Thresholds { problem, literal } => {
            let phi = parse_phi(&problem.phi)?;
            let params = parse_params(problem.p, problem.q)?;
            let reading = if *literal { Reading::Printed } else { Reading::Consistent };
            let t = thresholds_for(problem.class, &phi, &params, reading)?;
            let s = t.symbol();
            writeln!(out, "{s}1 {}", g12(t.t1)).map_err(io)?;
            writeln!(out, "{s}2 {}", g12(t.t2)).map_err(io)?;
            writeln!(out, "{s}3 {}", g12(t.t3)).map_err(io)?;
            Ok(Outcome::Ok)
        }
        Command::Verify { problem, mu, refined, oracle } => {
            let phi = parse_phi(&problem.phi)?;
            let params = parse_params(problem.p, problem.q)?;
            let v = Verifier::new(oracle.config()?)?;
            let r = if *refined {
                v.refined(problem.class, mu.real()?, &phi, &params)?
            } else {
                v.fs(problem.class, mu.value(), &phi, &params)?
            };
            write_record(out, &r).map_err(io)?;
            Ok(check(r.passed))
        }
        Command::Sweep { problem, mu_range, out: path, format, oracle } => {
            let phi = parse_phi(&problem.phi)?;
            let params = parse_params(problem.p, problem.q)?;
            let range = parse_range(mu_range)?;
            if range.values().is_empty() {
                return Err(Error::domain(format!("mu-range {mu_range:?} is empty")));
            }
            let file = open_out(path)?;
            let report = Verifier::new(oracle.config()?)?.sweep(problem.class, &range, &phi, &params);
            match (file, format) {
                (Some(f), Format::Csv) => emit_csv(&report.records, io::BufWriter::new(f))?,
                (Some(f), Format::Table) => emit_table(&report.records, &mut io::BufWriter::new(f)).map_err(io)?,
                (None, Format::Csv) => emit_csv(&report.records, &mut *out)?,
                (None, Format::Table) => emit_table(&report.records, out).map_err(io)?,
            }
            if path.is_some() || *format == Format::Table {
                writeln!(
                    out,
                    "{} pass, {} fail, {} skipped",
                    report.passes(),
                    report.failures(),
                    report.skipped()
                )
                .map_err(io)?;
            }
            Ok(check(report.failures() == 0))
        }
        Command::Bernardi { problem, mu, c, piecewise, literal, verify, oracle } => {
            let phi = parse_phi(&problem.phi)?;
            let bp = BernardiParams::new(*c, parse_params(problem.p, problem.q)?);
            let reading = if *literal { Reading::Printed } else { Reading::Consistent };
            let (l2, l3) = (bp.factor(2)?, bp.factor(3)?);
            writeln!(out, "L2 {}  L3 {}", g12(l2), g12(l3)).map_err(io)?;
            let report = if *piecewise {
                bernardi::fs_piecewise_bernardi(problem.class, mu.real()?, &phi, &bp, reading)?
            } else {
                bernardi::fs_bound_bernardi(problem.class, mu.value(), &phi, &bp)?
            };
            writeln!(out, "value  {}", g12(report.value)).map_err(io)?;
            writeln!(out, "branch {}", report.branch).map_err(io)?;
            if *verify {
                let r = Verifier::new(oracle.config()?)?.bernardi(problem.class, mu.value(), &phi, &bp)?;
                write_record(out, &r).map_err(io)?;
                return Ok(check(r.passed));
            }
            Ok(Outcome::Ok)
        }
        Command::Limits { oracle } => limits(&Verifier::new(oracle.config()?)?, out),
        Command::Region { f, p, q, grid, out: path } => {
            let coeffs = parse_list(f, "f")?;
            let params = parse_params(*p, *q)?;
            let rows = region_sample(&coeffs, &params, *grid)?;
            let file = open_out(path)?;
            let w: Box<dyn Write + '_> = match file {
                Some(f) => Box::new(io::BufWriter::new(f)),
                None => Box::new(&mut *out),
            };
            let mut wtr = csv::Writer::from_writer(w);
            let cerr = |e: csv::Error| Error::domain(format!("writing CSV: {e}"));
            wtr.write_record(["x", "y", "re"]).map_err(cerr)?;
            for (x, y, v) in rows {
                wtr.write_record([g12(x), g12(y), g12(v)]).map_err(cerr)?;
            }
            wtr.flush().map_err(io)?;
            Ok(Outcome::Ok)
        }
    }
}

/// Classical-limit values of the max-form and piecewise bounds, each
/// checked by the oracle.
fn limits(v: &Verifier, out: &mut dyn Write) -> Result<Outcome> {
    let io = |e: io::Error| Error::domain(format!("output: {e}"));
    let classical = PQParams::classical();
    let koebe = MaMindaTarget::koebe();
    let half = MaMindaTarget::new(vec![1.0, 0.5])?;
    let mut ok = true;
    writeln!(out, "{:<10} {:<8} {:<7} {:>6} {:>14} {:>14} {:>13} status", "form", "class", "phi", "mu", "bound", "oracle", "branch").map_err(io)?;
    for (form, piecewise) in [("max", false), ("piecewise", true)] {
        for kind in [ClassKind::Starlike, ClassKind::Convex] {
            for (name, phi) in [("koebe", &koebe), ("1,0.5", &half)] {
                for mu in [-1.0, 0.0, 0.5, 1.0, 2.0] {
                    let bound = if piecewise {
                        bounds::fs_piecewise(kind, mu, phi, &classical, Reading::Consistent)?
                    } else {
                        bounds::fs_bound(kind, Complex64::new(mu, 0.0), phi, &classical)?
                    };
                    let r = v.fs(kind, Complex64::new(mu, 0.0), phi, &classical)?;
                    let pass = r.passed && r.attained && (bound.value - r.theoretical).abs() <= bounds::IDENTITY_TOL;
                    ok &= pass;
                    writeln!(
                        out,
                        "{form:<10} {:<8} {name:<7} {:>6} {:>14} {:>14} {:>13} {}",
                        kind.to_string(),
                        g12(mu),
                        g12(bound.value),
                        g12(r.empirical_max),
                        bound.branch.as_str(),
                        if pass { "PASS" } else { "FAIL" }
                    )
                    .map_err(io)?;
                }
            }
        }
    }
    for kind in [ClassKind::Starlike, ClassKind::Convex] {
        let t = thresholds_for(kind, &koebe, &classical, Reading::Consistent)?;
        let s = t.symbol();
        writeln!(out, "thresholds {:<8} koebe   {s} = ({}, {}, {})", kind.to_string(), g12(t.t1), g12(t.t2), g12(t.t3)).map_err(io)?;
    }
    let near = PQParams::new(1.0, 1.0 - 1e-6)?;
    for kind in [ClassKind::Starlike, ClassKind::Convex] {
        let a = bounds::fs_bound(kind, Complex64::new(0.0, 0.0), &koebe, &near)?.value;
        let b = bounds::fs_bound(kind, Complex64::new(0.0, 0.0), &koebe, &classical)?.value;
        let pass = (a - b).abs() <= 1e-4;
        ok &= pass;
        writeln!(out, "q->1       {:<8} koebe   {:>6} {:>14} {:>14} {:>13} {}", kind.to_string(), "0", g12(a), g12(b), "", if pass { "PASS" } else { "FAIL" })
            .map_err(io)?;
    }
    Ok(check(ok))
}

/// Parse `args` (including the program name) and run the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cfg = match RunConfig::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 { write!(out, "{text}") } else { write!(err, "{text}") };
            return code;
        }
    };
    match dispatch(&cfg.command, out) {
        Ok(Outcome::Ok) => 0,
        Ok(Outcome::Violation) => 1,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            2
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run(std::iter::once("pqfs").chain(args.iter().copied()), &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn g_format() {
        assert_eq!(fmt_g(3.0, 12), "3");
        assert_eq!(fmt_g(1.0 / 3.0, 12), "0.333333333333");
        assert_eq!(fmt_g(-2.5e-7, 12), "-2.5e-07");
        assert_eq!(fmt_g(14.084507042253522, 12), "14.0845070423");
        assert_eq!(fmt_g(1e13, 12), "1e+13");
        assert_eq!(fmt_g(0.0001, 12), "0.0001");
        assert_eq!(fmt_g(f64::NAN, 12), "NaN");
    }

    #[test]
    fn bound_command() {
        let (code, out, _) = call(&["bound", "--class", "starlike", "--phi", "koebe", "--p", "0.9", "--q", "0.6", "--mu", "0"]);
        assert_eq!(code, 0);
        assert!(out.contains("value  14.0845070423"), "{out}");
        assert!(out.contains("branch max_form"));
        let (_, out, _) = call(&["bound", "--class", "starlike", "--p", "0.9", "--q", "0.6", "--mu", "0", "--literal"]);
        assert!(out.contains("value  2.81690140845"), "{out}");
    }

    #[test]
    fn usage_and_domain_errors_exit_2() {
        let (code, _, err) = call(&["bound", "--class", "starlike", "--p", "0.5", "--q", "0.2", "--mu", "0"]);
        assert_eq!(code, 2);
        assert!(err.contains("p + q > 1"), "{err}");
        assert_eq!(call(&["bound", "--bogus"]).0, 2);
        assert_eq!(call(&["bound", "--class", "s", "--p", "0.6", "--q", "0.9", "--mu", "0"]).0, 2);
        assert_eq!(call(&["bound", "--class", "s", "--phi", "1,x", "--p", "0.9", "--q", "0.6", "--mu", "0"]).0, 2);
        assert_eq!(call(&["--help"]).0, 0);
    }

    #[test]
    fn negative_mu_is_accepted() {
        let (code, out, _) = call(&["bound", "--class", "starlike", "--p", "1", "--q", "1", "--mu", "-1", "--piecewise"]);
        assert_eq!(code, 0, "{out}");
        assert!(out.contains("value  7"), "{out}");
    }

    #[test]
    fn region_identity() {
        let rows = region_sample(&[1.0], &PQParams::new(0.9, 0.6).unwrap(), 16).unwrap();
        assert_eq!(rows.len(), 256);
        assert!(rows.iter().all(|r| (r.2 - 1.0).abs() < 1e-12));
        let rows = region_sample(&[1.0, 0.3], &PQParams::new(0.9, 0.6).unwrap(), 16).unwrap();
        assert_eq!(rows[0], (0.0, 0.0, 1.0));
        assert!(region_sample(&[1.0], &PQParams::classical(), 8).is_err());
    }

    #[test]
    fn region_classical_matches_coefficient_form() {
        let rows = region_sample(&[1.0, 0.5], &PQParams::classical(), 16).unwrap();
        let z = Complex64::new(rows[20].0, rows[20].1);
        let expect = ((z + z * z) / (z + z * z * 0.5)).re;
        assert!((rows[20].2 - expect).abs() < 1e-12);
    }
}
