//! Command-line front end: every operation over CSV/JSON files.
//!
//! Exit codes: `0` success, `2` input or validation error, `3` the conformal
//! solver did not reach its tolerance.

pub mod svg;
pub mod table;

use std::ffi::OsString;
use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_complex::Complex64;

use crate::analytic::{afc, extend, reinstate_wave, AfcSpectrum};
use crate::conformal::{evaluate_disk, solve_with_center, BoundaryCurve, Center, Shape};
use crate::error::Error;
use crate::hcorr::{rank, RankKey};
use crate::operators::{build_general, harmonic_count, tilde, SpectralProfile};
use crate::signal::{grid_angle, RealSignal};

use table::{fmt_f64, Table, Writer};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_NO_CONVERGENCE: i32 = 3;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Input(String),
    #[error("{0}")]
    NoConvergence(String),
}

impl CliError {
    pub(crate) fn input(msg: impl Into<String>) -> Self {
        CliError::Input(msg.into())
    }

    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Input(_) => EXIT_INPUT,
            CliError::NoConvergence(_) => EXIT_NO_CONVERGENCE,
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::NoConvergence { .. } => CliError::NoConvergence(e.to_string()),
            e => CliError::Input(e.to_string()),
        }
    }
}

#[derive(Debug, Parser)]
#[command(name = "harmonia", version, about = "Harmonic analysis with circulant spectral operators")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct Io {
    /// Input CSV, `-` for stdin.
    pub input: PathBuf,
    /// Output file; stdout when omitted.
    #[arg(short, long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum KeyArg {
    /// Ascending |HC - 1|.
    Hc1,
    /// Descending |HC|.
    Abs,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Real Fourier coefficients `k,a,b` of a one-column signal.
    Afc(Io),
    /// Rebuild the signal from an `afc` table.
    Synth {
        #[command(flatten)]
        io: Io,
        /// Signal length; defaults to the table's `# n=` line, else `2K+1`.
        #[arg(long)]
        n: Option<usize>,
    },
    /// Apply a general spectral operator; writes `re,im`.
    Filter {
        #[command(flatten)]
        io: Io,
        /// JSON profile `{"lambda": [...], "r": R, "psi": PSI}`.
        #[arg(long, conflicts_with_all = ["gaussian", "r", "psi"], required_unless_present = "gaussian")]
        profile: Option<PathBuf>,
        /// Gaussian gains `exp(-((k - center)/width)^2)`, given as `center,width`.
        #[arg(long, value_name = "CENTER,WIDTH")]
        gaussian: Option<String>,
        #[arg(long, default_value_t = 1.0, allow_negative_numbers = true)]
        r: f64,
        #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
        psi: f64,
    },
    /// Harmonic conjugate of a one-column signal.
    Conjugate(Io),
    /// Continue to the circle of radius ratio `r`, rotated by `psi`; writes `re,im`.
    Extend {
        #[command(flatten)]
        io: Io,
        #[arg(long, allow_negative_numbers = true)]
        r: f64,
        #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
        psi: f64,
        /// Add back `a_0/2` to the real part.
        #[arg(long)]
        add_dc: bool,
    },
    /// Wave function from a strictly positive density; writes `re,im`.
    Wave(Io),
    /// Conformal map of the unit disk onto a curve's interior.
    Confmap(ConfmapArgs),
    /// Rank series of a price table by harmonic correlation with one of them.
    Hc {
        /// Label of the reference column.
        #[arg(long = "ref")]
        reference: String,
        #[arg(long)]
        input: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
        /// Keep only the first K ranked rows.
        #[arg(long)]
        top: Option<usize>,
        #[arg(long, value_enum, default_value = "hc1")]
        key: KeyArg,
    },
}

#[derive(Debug, Args)]
pub struct ConfmapArgs {
    /// Two-column `re,im` samples of the curve, uniform in its parameter.
    #[arg(long, conflicts_with = "shape", required_unless_present = "shape")]
    pub curve: Option<PathBuf>,
    /// Built-in shape, e.g. `ellipse:a=2,b=1` or `perturbed:eps=0.25,k=2`.
    #[arg(long)]
    pub shape: Option<String>,
    #[arg(long, default_value_t = 256)]
    pub n: usize,
    #[arg(long, default_value_t = crate::conformal::DEFAULT_TOL)]
    pub tol: f64,
    #[arg(long, default_value_t = crate::conformal::DEFAULT_MAX_ITER)]
    pub max_iter: usize,
    #[arg(long, default_value_t = 8)]
    pub rings: usize,
    #[arg(long, default_value_t = 16)]
    pub spokes: usize,
    /// Image of the disk center: `centroid`, `mean` or `X,Y`.
    #[arg(long, default_value = "centroid", allow_hyphen_values = true)]
    pub center: String,
    /// Write the mesh image here.
    #[arg(long)]
    pub svg: Option<PathBuf>,
    /// Write `j,s,t,ns,iteration,residual` here.
    #[arg(long)]
    pub report: Option<PathBuf>,
    /// Coefficient table destination; stdout when omitted.
    #[arg(short, long)]
    pub output: Option<PathBuf>,
}

/// Parses `args` (program name first) and runs the subcommand, returning the
/// process exit code. Diagnostics go to `stderr`, results to `stdout` unless
/// redirected by flags.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(stdout, "{e}");
                    return EXIT_OK;
                }
                _ => EXIT_INPUT,
            };
            let _ = write!(stderr, "{e}");
            return code;
        }
    };
    match execute(cli.command, stdout) {
        Ok(()) => EXIT_OK,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            e.exit_code()
        }
    }
}

fn read_text(path: &Path) -> Result<String, CliError> {
    if path == Path::new("-") {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s).map_err(|e| CliError::input(format!("stdin: {e}")))?;
        Ok(s)
    } else {
        fs::read_to_string(path).map_err(|e| CliError::input(format!("{}: {e}", path.display())))
    }
}

fn read_table(path: &Path) -> Result<Table, CliError> {
    Table::parse(&read_text(path)?, &path.display().to_string())
}

fn read_signal(path: &Path) -> Result<RealSignal, CliError> {
    let values = read_table(path)?.single_column(&path.display().to_string())?;
    RealSignal::new(values).map_err(|e| CliError::input(format!("{}: {e}", path.display())))
}

fn emit(text: String, dest: Option<&Path>, stdout: &mut dyn Write) -> Result<(), CliError> {
    match dest {
        Some(p) => fs::write(p, text).map_err(|e| CliError::input(format!("{}: {e}", p.display()))),
        None => stdout.write_all(text.as_bytes()).map_err(|e| CliError::input(format!("stdout: {e}"))),
    }
}

fn complex_table(values: &[Complex64]) -> String {
    let mut w = Writer::new();
    w.header(&["re", "im"]);
    for z in values {
        w.nums(&[z.re, z.im]);
    }
    w.finish()
}

fn finite(name: &str, v: f64) -> Result<f64, CliError> {
    if v.is_finite() {
        Ok(v)
    } else {
        Err(CliError::input(format!("--{name} must be finite")))
    }
}

fn parse_pair(flag: &str, text: &str) -> Result<(f64, f64), CliError> {
    let bad = || CliError::input(format!("--{flag} expects two numbers 'x,y', got '{text}'"));
    let (a, b) = text.split_once(',').ok_or_else(bad)?;
    let a: f64 = a.trim().parse().map_err(|_| bad())?;
    let b: f64 = b.trim().parse().map_err(|_| bad())?;
    Ok((finite(flag, a)?, finite(flag, b)?))
}

fn parse_center(text: &str) -> Result<Center, CliError> {
    match text.trim() {
        "centroid" => Ok(Center::Centroid),
        "mean" => Ok(Center::BoundaryMean),
        other => parse_pair("center", other).map(|(x, y)| Center::Fixed(Complex64::new(x, y))),
    }
}

fn execute(cmd: Command, stdout: &mut dyn Write) -> Result<(), CliError> {
    match cmd {
        Command::Afc(io) => {
            let u = read_signal(&io.input)?;
            emit(afc_table(&afc(&u)), io.output.as_deref(), stdout)
        }
        Command::Synth { io, n } => {
            let spec = read_afc_table(&io.input, n)?;
            let mut w = Writer::new();
            w.header(&["u"]);
            for v in spec.reconstruct() {
                w.nums(&[v]);
            }
            emit(w.finish(), io.output.as_deref(), stdout)
        }
        Command::Filter { io, profile, gaussian, r, psi } => {
            let u = read_signal(&io.input)?;
            let n = u.len();
            let profile = match (profile, gaussian) {
                (Some(path), _) => {
                    let p: SpectralProfile = serde_json::from_str(&read_text(&path)?)
                        .map_err(|e| CliError::input(format!("{}: {e}", path.display())))?;
                    p.validate()?;
                    p
                }
                (None, Some(g)) => {
                    let (center, width) = parse_pair("gaussian", &g)?;
                    SpectralProfile::gaussian(n, center, width, finite("r", r)?, finite("psi", psi)?)?
                }
                (None, None) => return Err(CliError::input("one of --profile or --gaussian is required")),
            };
            profile.check_len(n)?;
            let out = build_general(n, &profile)?.apply(&u)?;
            emit(complex_table(&out), io.output.as_deref(), stdout)
        }
        Command::Conjugate(io) => {
            let u = read_signal(&io.input)?;
            let mut w = Writer::new();
            w.header(&["v"]);
            for v in tilde(&u).iter() {
                w.nums(&[*v]);
            }
            emit(w.finish(), io.output.as_deref(), stdout)
        }
        Command::Extend { io, r, psi, add_dc } => {
            let u = read_signal(&io.input)?;
            let r = finite("r", r)?;
            if r < 0.0 {
                return Err(CliError::input("--r must be >= 0"));
            }
            let mut out = extend(&u, r, finite("psi", psi)?)?.into_vec();
            if add_dc {
                let dc = u.mean();
                out.iter_mut().for_each(|z| z.re += dc);
            }
            emit(complex_table(&out), io.output.as_deref(), stdout)
        }
        Command::Wave(io) => {
            let d = read_signal(&io.input)?;
            emit(complex_table(&reinstate_wave(&d)?), io.output.as_deref(), stdout)
        }
        Command::Confmap(args) => confmap(args, stdout),
        Command::Hc { reference, input, output, top, key } => {
            let text = hc_table(&reference, &input, top, key)?;
            emit(text, output.as_deref(), stdout)
        }
    }
}

fn afc_table(spec: &AfcSpectrum) -> String {
    let mut w = Writer::new();
    w.comment(&format!("n={}", spec.n));
    w.header(&["k", "a", "b"]);
    for k in 0..=spec.k_max() {
        w.nums(&[k as f64, spec.a[k], spec.b[k]]);
    }
    if let Some(h) = spec.nyquist {
        w.nums(&[(spec.n / 2) as f64, h, 0.0]);
    }
    w.finish()
}

fn read_afc_table(path: &Path, n: Option<usize>) -> Result<AfcSpectrum, CliError> {
    let src = path.display().to_string();
    let t = read_table(path)?;
    if t.width() != 3 {
        return Err(CliError::input(format!("{src}: expected columns k,a,b")));
    }
    let n = match (n, t.meta("n")) {
        (Some(n), _) => n,
        (None, Some(v)) => v.parse().map_err(|_| CliError::input(format!("{src}: '# n={v}' is not a length")))?,
        (None, None) => 2 * t.rows.len().saturating_sub(1) + 1,
    };
    if n < crate::signal::MIN_LEN {
        return Err(CliError::input(format!("{src}: signal length {n} is below 3")));
    }
    let k_max = harmonic_count(n);
    let mut a = vec![0.0; k_max + 1];
    let mut b = vec![0.0; k_max + 1];
    let mut nyquist = (n % 2 == 0).then_some(0.0);
    for row in &t.rows {
        let k = row[0];
        if k < 0.0 || k.fract() != 0.0 {
            return Err(CliError::input(format!("{src}: harmonic index {k} is not a whole number")));
        }
        let k = k as usize;
        if k <= k_max {
            a[k] = row[1];
            b[k] = if k == 0 { 0.0 } else { row[2] };
        } else if n % 2 == 0 && k == n / 2 {
            nyquist = Some(row[1]);
        } else {
            return Err(CliError::input(format!("{src}: harmonic {k} does not exist for n = {n}")));
        }
    }
    Ok(AfcSpectrum { n, a, b, nyquist })
}

fn confmap(args: ConfmapArgs, stdout: &mut dyn Write) -> Result<(), CliError> {
    let curve = match (&args.curve, &args.shape) {
        (Some(path), _) => {
            let src = path.display().to_string();
            let t = read_table(path)?;
            if t.width() != 2 {
                return Err(CliError::input(format!("{src}: expected two columns re,im")));
            }
            let pts = t.rows.iter().map(|r| Complex64::new(r[0], r[1])).collect();
            BoundaryCurve::sampled(pts).map_err(|e| CliError::input(format!("{src}: {e}")))?
        }
        (None, Some(spec)) => spec.parse::<Shape>()?.curve(),
        (None, None) => return Err(CliError::input("one of --curve or --shape is required")),
    };
    if args.rings == 0 {
        return Err(CliError::input("--rings must be at least 1"));
    }
    let center = parse_center(&args.center)?;
    let sol = solve_with_center(&curve, args.n, args.tol, args.max_iter, center)?;

    if let Some(path) = &args.report {
        let mut w = Writer::new();
        w.header(&["j", "s", "t", "ns", "iteration", "residual"]);
        for i in 0..sol.n.max(sol.history.len()) {
            let mut fields: Vec<String> = if i < sol.n {
                vec![i.to_string(), fmt_f64(grid_angle(i, sol.n)), fmt_f64(sol.t[i]), fmt_f64(sol.ns[i])]
            } else {
                vec![String::new(); 4]
            };
            match sol.history.get(i) {
                Some(r) => fields.extend([(i + 1).to_string(), fmt_f64(*r)]),
                None => fields.extend([String::new(), String::new()]),
            }
            w.row(fields);
        }
        emit(w.finish(), Some(path), stdout)?;
    }
    if let Some(path) = &args.svg {
        let mesh = evaluate_disk(&sol, args.rings, args.spokes)?;
        emit(svg::render(&mesh), Some(path), stdout)?;
    }

    let mut w = Writer::new();
    w.comment(&format!("n={}", sol.n));
    w.comment(&format!("iterations={}", sol.iterations));
    w.comment(&format!("residual={}", fmt_f64(sol.residual)));
    w.comment(&format!("w0={},{}", fmt_f64(sol.w0.re), fmt_f64(sol.w0.im)));
    w.header(&["k", "re", "im"]);
    for (k, c) in sol.coefficients.c[..=harmonic_count(sol.n)].iter().enumerate() {
        w.nums(&[k as f64, c.re, c.im]);
    }
    emit(w.finish(), args.output.as_deref(), stdout)
}

fn hc_table(reference: &str, input: &Path, top: Option<usize>, key: KeyArg) -> Result<String, CliError> {
    let src = input.display().to_string();
    let t = read_table(input)?;
    let labels =
        t.header.clone().ok_or_else(|| CliError::input(format!("{src}: missing header row of series labels")))?;
    let mut seen = std::collections::HashSet::new();
    if let Some(dup) = labels.iter().find(|l| !seen.insert(l.as_str())) {
        return Err(CliError::input(format!("{src}: duplicate label '{dup}'")));
    }
    let series = |c: usize| {
        RealSignal::new(t.column(c)).map_err(|e| CliError::input(format!("{src}: column '{}': {e}", labels[c])))
    };
    let ref_col = labels
        .iter()
        .position(|l| l == reference)
        .ok_or_else(|| CliError::input(format!("{src}: no column labelled '{reference}'")))?;
    let reference_series = series(ref_col)?;
    let candidates =
        (0..labels.len()).map(|c| Ok((labels[c].clone(), series(c)?))).collect::<Result<Vec<_>, CliError>>()?;
    let key = match key {
        KeyArg::Hc1 => RankKey::InPhase,
        KeyArg::Abs => RankKey::Magnitude,
    };
    let ranking = rank(&reference_series, &candidates, key).map_err(|e| match e {
        Error::Domain(m) => CliError::input(format!("{src}: reference '{reference}': {m}")),
        e => e.into(),
    })?;

    let mut w = Writer::new();
    w.header(&["label", "hc_re", "hc_im", "pearson"]);
    for e in ranking.ranked.iter().take(top.unwrap_or(usize::MAX)) {
        let c = e.hc.correlation;
        w.row([e.label.clone(), fmt_f64(c.re), fmt_f64(c.im), fmt_f64(e.pearson)]);
    }
    for label in &ranking.constant {
        w.comment(&format!("constant series not ranked: {label}"));
    }
    Ok(w.finish())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run(std::iter::once("harmonia").chain(args.iter().copied()), &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn help_and_unknown_flags() {
        assert_eq!(run_args(&["--help"]).0, EXIT_OK);
        assert_eq!(run_args(&["afc", "--bogus", "x"]).0, EXIT_INPUT);
        assert_eq!(run_args(&["nope"]).0, EXIT_INPUT);
    }

    #[test]
    fn center_parsing() {
        assert_eq!(parse_center("mean").unwrap(), Center::BoundaryMean);
        assert_eq!(parse_center("0.5,-1").unwrap(), Center::Fixed(Complex64::new(0.5, -1.0)));
        assert!(parse_center("x").is_err());
    }

    #[test]
    fn afc_table_round_trips() {
        for n in [7usize, 8] {
            let u = RealSignal::from_fn(n, |t| 1.0 + (2.0 * t).sin() - 0.25 * (3.0 * t).cos()).unwrap();
            let dir = std::env::temp_dir().join(format!("harmonia-afc-{n}-{}", std::process::id()));
            fs::write(&dir, afc_table(&afc(&u))).unwrap();
            let back = read_afc_table(&dir, None).unwrap().reconstruct();
            fs::remove_file(&dir).unwrap();
            for (x, y) in back.iter().zip(u.iter()) {
                assert!((x - y).abs() < 1e-13);
            }
        }
    }

    #[test]
    fn non_convergence_maps_to_exit_3() {
        let (code, _, err) = run_args(&["confmap", "--shape", "ellipse:a=2,b=1", "--n", "64", "--max-iter", "2"]);
        assert_eq!(code, EXIT_NO_CONVERGENCE, "{err}");
        assert!(err.contains("residual"));
    }
}
