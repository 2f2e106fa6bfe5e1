use std::f64::consts::{FRAC_PI_2, PI, TAU};

use num_complex::Complex64;
use rayon::prelude::*;

use super::curve::BoundaryCurve;
use crate::analytic::{row_coefficients_slice, ComplexSpectrum};
use crate::error::{Error, Result};
use crate::operators::{build_analytic_extension, tilde_slice};
use crate::signal::grid_angle;
use crate::spectral::{self, signed_freq};

pub const DEFAULT_TOL: f64 = 1e-10;
pub const DEFAULT_MAX_ITER: usize = 50;
pub const MIN_GRID: usize = 16;

/// How the image of the disk center is chosen.
///
/// A Jordan domain is the image of the disk under a three-parameter family of
/// maps; fixing `f(0)` leaves only the rotation, which the solver pins by
/// preserving the mean of `t(s) − s`.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub enum Center {
    /// Area centroid of the domain, computed once from the curve.
    #[default]
    Centroid,
    /// Re-estimated every iteration as the mean of the current boundary
    /// samples. Any disk automorphism of the result is also a fixed point,
    /// so the outcome depends on the curve's own parametrization.
    BoundaryMean,
    Fixed(Complex64),
}

/// Area centroid `∮|z|² dz / ∮ z̄ dz` by the periodic trapezoid rule.
pub fn centroid(curve: &BoundaryCurve, n: usize) -> Result<Complex64> {
    let (mut moment, mut area) = (Complex64::new(0.0, 0.0), Complex64::new(0.0, 0.0));
    for j in 0..n {
        let (g, dg) = curve.eval(grid_angle(j, n));
        moment += g.norm_sqr() * dg;
        area += g.conj() * dg;
    }
    // area = 2i·A; a clockwise or degenerate curve gives A <= 0.
    if area.im.is_nan() || area.im <= 0.0 || !moment.is_finite() {
        return Err(Error::NonSimpleCurve("curve encloses no positive area".into()));
    }
    Ok(moment / area)
}

/// Solved boundary correspondence of the disk map onto a curve's interior.
#[derive(Debug, Clone)]
pub struct ConformalSolution {
    pub n: usize,
    /// `t(s_j)` at `s_j = 2πj/n`.
    pub t: Vec<f64>,
    pub w0: Complex64,
    /// `γ(t_j)`, the images of the unit-circle grid points.
    pub boundary: Vec<Complex64>,
    /// `d/ds γ(t(s))` at the grid points.
    pub derivative: Vec<Complex64>,
    pub coefficients: ComplexSpectrum,
    pub iterations: usize,
    /// Final `max_j |ln ns_j|`.
    pub residual: f64,
    pub tol: f64,
    /// Residual at each iteration, first entry for `t(s) = s`.
    pub history: Vec<f64>,
    /// Dissatisfaction at the returned parametrization.
    pub ns: Vec<f64>,
}

/// Continuous branch of `arg(z_j)` along the grid, minus `s_j`.
///
/// The sequence must wind exactly once counter-clockwise; anything else means
/// the curve folds over itself or is traversed backwards.
fn winding_residual(z: &[Complex64], what: &str) -> Result<Vec<f64>> {
    let n = z.len();
    let wrap = |d: f64| (d + PI).rem_euclid(TAU) - PI;
    let mut out = Vec::with_capacity(n);
    let mut phi = z[0].arg();
    out.push(phi);
    for j in 1..n {
        phi += wrap(z[j].arg() - z[j - 1].arg());
        out.push(phi);
    }
    let total = phi + wrap(z[0].arg() - z[n - 1].arg()) - out[0];
    let winding = (total / TAU).round();
    if winding != 1.0 || (total - TAU).abs() > 1e-6 {
        return Err(Error::NonSimpleCurve(format!(
            "{what} winds {winding} times around the grid instead of once counter-clockwise"
        )));
    }
    for (j, v) in out.iter_mut().enumerate() {
        *v -= grid_angle(j, n);
    }
    Ok(out)
}

/// Multiplicative residual of the boundary correspondence.
///
/// `ns_j = exp[tilde((arg w'_j − s_j − π/2) − (arg(w_j − w0) − s_j))]·|w'_j|/|w_j − w0|`,
/// rescaled so `ln ns` has zero mean. Identically 1 when `w` is the boundary
/// trace of a map analytic in the disk with `w0` the image of the center.
pub fn dissatisfaction(w: &[Complex64], dw_ds: &[Complex64], w0: Complex64) -> Result<Vec<f64>> {
    let n = w.len();
    if n < 3 || dw_ds.len() != n {
        return Err(Error::contract(format!(
            "dissatisfaction needs equal lengths >= 3, got {} and {}",
            n,
            dw_ds.len()
        )));
    }
    if !w0.is_finite() || w.iter().chain(dw_ds).any(|z| !z.is_finite()) {
        return Err(Error::contract("dissatisfaction input is not finite"));
    }
    let radial: Vec<Complex64> = w.iter().map(|&z| z - w0).collect();
    let radial_scale = radial.iter().map(|z| z.norm()).fold(0.0, f64::max);
    if let Some(index) = radial.iter().position(|z| z.norm() <= f64::EPSILON * radial_scale) {
        return Err(Error::CenterCollision { index });
    }
    let tangent_scale = dw_ds.iter().map(|z| z.norm()).fold(0.0, f64::max);
    if let Some(index) = dw_ds.iter().position(|z| z.norm() <= f64::EPSILON * tangent_scale) {
        return Err(Error::DegenerateTangent { index });
    }

    let radial_arg = winding_residual(&radial, "w - w0")?;
    let tangent_arg = winding_residual(dw_ds, "dw/ds")?;
    let mismatch: Vec<f64> = tangent_arg.iter().zip(&radial_arg).map(|(t, r)| (t - FRAC_PI_2) - r).collect();
    let conj = tilde_slice(&mismatch);

    let mut log_ns: Vec<f64> = (0..n).map(|j| conj[j] + dw_ds[j].norm().ln() - radial[j].norm().ln()).collect();
    let mean = log_ns.iter().sum::<f64>() / n as f64;
    for v in &mut log_ns {
        *v -= mean;
    }
    Ok(log_ns.into_iter().map(f64::exp).collect())
}

/// Spectral derivative of a real periodic sequence; Nyquist dropped.
fn spectral_derivative(p: &[f64]) -> Vec<f64> {
    let n = p.len();
    let mut spec = spectral::dft_real(p);
    for (k, c) in spec.iter_mut().enumerate() {
        let f = signed_freq(k, n);
        *c = if 2 * k == n { Complex64::new(0.0, 0.0) } else { *c * Complex64::new(0.0, f as f64) };
    }
    spectral::idft_unchecked(&spec).into_iter().map(|z| z.re).collect()
}

/// Zero-mean spectral antiderivative; the mean and Nyquist parts of the
/// integrand are dropped.
fn spectral_integral(d: &[f64]) -> Vec<f64> {
    let n = d.len();
    let mut spec = spectral::dft_real(d);
    for (k, c) in spec.iter_mut().enumerate() {
        let f = signed_freq(k, n);
        *c = if k == 0 || 2 * k == n { Complex64::new(0.0, 0.0) } else { *c / Complex64::new(0.0, f as f64) };
    }
    spectral::idft_unchecked(&spec).into_iter().map(|z| z.re).collect()
}

fn at(iteration: usize) -> impl FnOnce(Error) -> Error {
    move |e| Error::AtIteration { iteration, source: Box::new(e) }
}

/// Smallest relaxation exponent applied to `ns` after repeated setbacks.
const MIN_STEP: f64 = 1.0 / 64.0;

/// `step · ln ns` with harmonics above `n/3` removed.
///
/// Products of near-Nyquist components alias on the grid; feeding them back
/// into the reparametrization grows a sawtooth mode, so only the band where
/// quadratic products are alias-free drives the update.
fn dealiased_log(ns: &[f64], step: f64) -> Vec<f64> {
    let n = ns.len();
    let log: Vec<f64> = ns.iter().map(|q| q.ln()).collect();
    let mut spec = spectral::dft_real(&log);
    let cut = (n / 3) as i64;
    for (k, c) in spec.iter_mut().enumerate() {
        if signed_freq(k, n).abs() > cut {
            *c = Complex64::new(0.0, 0.0);
        } else {
            *c *= step;
        }
    }
    spectral::idft_unchecked(&spec).into_iter().map(|z| z.re).collect()
}

/// Trigonometric interpolant of a real periodic sequence.
struct Periodic {
    coeffs: Vec<Complex64>,
    nyquist: f64,
}

impl Periodic {
    fn new(p: &[f64]) -> Self {
        let n = p.len();
        let scale = 1.0 / n as f64;
        let spec = spectral::dft_real(p);
        let k_max = (n - 1) / 2;
        Periodic {
            coeffs: spec[..=k_max].iter().map(|c| c * scale).collect(),
            nyquist: if n.is_multiple_of(2) { spec[n / 2].re * scale } else { 0.0 },
        }
    }

    fn eval(&self, x: f64) -> f64 {
        let z = Complex64::from_polar(1.0, x);
        let tail = self.coeffs[1..].iter().rev().fold(Complex64::new(0.0, 0.0), |acc, &c| (acc + c) * z);
        let half = self.coeffs.len() as f64;
        self.coeffs[0].re + 2.0 * tail.re + self.nyquist * (half * x).cos()
    }
}

/// New offset `t_new(s) − s` for `t_new = t∘τ` with `τ' ∝ exp(−log_ns)`,
/// keeping the mean offset fixed.
///
/// The correction belongs to the curve point `γ(t_j)` where it was measured,
/// so the grid is re-spaced along the current parametrization rather than
/// rescaling `dt/ds` in place.
fn recompose(offset: &[f64], log_ns: &[f64], s: &[f64]) -> Vec<f64> {
    let n = offset.len();
    let weights: Vec<f64> = log_ns.iter().map(|l| (-l).exp()).collect();
    let mean_weight = weights.iter().sum::<f64>() / n as f64;
    let shift = spectral_integral(&weights.iter().map(|w| w / mean_weight - 1.0).collect::<Vec<_>>());
    let p = Periodic::new(offset);
    let anchor = offset.iter().sum::<f64>() / n as f64;
    let mut out: Vec<f64> = s.iter().zip(&shift).map(|(sj, dj)| dj + p.eval(sj + dj)).collect();
    let mean = out.iter().sum::<f64>() / n as f64;
    for v in &mut out {
        *v += anchor - mean;
    }
    out
}

/// Finds the reparametrization `t(s)` that makes `γ(t(s_j))` the images of
/// equispaced unit-circle points under a map analytic in the disk.
///
/// Starts from `t(s) = s`. Each iteration measures the dissatisfaction `ns`
/// and redistributes the grid along the curve so the point density at
/// `γ(t_j)` is divided by `ns_j` (relaxed when the residual grows), keeping
/// the mean of `t(s) − s` fixed, until `max|ln ns| < tol`. The image of the
/// disk center is the domain's area centroid; see [`solve_with_center`].
pub fn solve(curve: &BoundaryCurve, n: usize, tol: f64, max_iter: usize) -> Result<ConformalSolution> {
    solve_with_center(curve, n, tol, max_iter, Center::default())
}

/// [`solve`] with an explicit choice of the image of the disk center.
pub fn solve_with_center(
    curve: &BoundaryCurve,
    n: usize,
    tol: f64,
    max_iter: usize,
    center: Center,
) -> Result<ConformalSolution> {
    if n < MIN_GRID {
        return Err(Error::contract(format!("grid size {n} is below {MIN_GRID}")));
    }
    if !(tol.is_finite() && tol > 0.0) {
        return Err(Error::contract("tolerance must be finite and positive"));
    }
    if max_iter == 0 {
        return Err(Error::contract("max_iter must be at least 1"));
    }

    let fixed_center = match center {
        Center::Centroid => Some(centroid(curve, n)?),
        Center::BoundaryMean => None,
        Center::Fixed(c) if c.is_finite() => Some(c),
        Center::Fixed(_) => return Err(Error::contract("center must be finite")),
    };

    let s: Vec<f64> = (0..n).map(|j| grid_angle(j, n)).collect();
    let mut offset = vec![0.0; n];
    let mut history = Vec::new();
    let mut step = 1.0f64;

    for iteration in 1..=max_iter {
        let density: Vec<f64> = spectral_derivative(&offset).iter().map(|d| 1.0 + d).collect();
        if let Some(j) = density.iter().position(|&d| d <= 0.0) {
            return Err(at(iteration)(Error::NonSimpleCurve(format!(
                "reparametrization lost monotonicity at sample {j}"
            ))));
        }
        let t: Vec<f64> = s.iter().zip(&offset).map(|(s, p)| s + p).collect();
        let (w, dw): (Vec<Complex64>, Vec<Complex64>) = t
            .iter()
            .zip(&density)
            .map(|(&tj, &dj)| {
                let (g, dg) = curve.eval(tj);
                (g, dg * dj)
            })
            .unzip();
        if w.iter().chain(&dw).any(|z| !z.is_finite()) {
            return Err(at(iteration)(Error::contract("curve evaluator returned a non-finite value")));
        }
        let w0 = fixed_center.unwrap_or_else(|| w.iter().sum::<Complex64>() / n as f64);
        let ns = dissatisfaction(&w, &dw, w0).map_err(at(iteration))?;
        let residual = ns.iter().map(|x| x.ln().abs()).fold(0.0, f64::max);
        history.push(residual);

        if residual < tol {
            let coefficients = row_coefficients_slice(&w);
            return Ok(ConformalSolution {
                n,
                t,
                w0,
                boundary: w,
                derivative: dw,
                coefficients,
                iterations: iteration,
                residual,
                tol,
                history,
                ns,
            });
        }

        if history.len() >= 2 && residual > history[history.len() - 2] {
            step = (step * 0.5).max(MIN_STEP);
        } else {
            step = (step * 1.5).min(1.0);
        }
        let correction = dealiased_log(&ns, step);
        offset = recompose(&offset, &correction, &s);
    }

    Err(Error::NoConvergence { iterations: max_iter, residual: history.last().copied().unwrap_or(f64::INFINITY) })
}

/// Images of concentric circles and radial spokes of the unit disk.
#[derive(Debug, Clone)]
pub struct DiskMesh {
    pub center: Complex64,
    pub radii: Vec<f64>,
    /// One closed polyline of `n` points per radius.
    pub rings: Vec<Vec<Complex64>>,
    /// Polylines from the center outward through every ring.
    pub spokes: Vec<Vec<Complex64>>,
}

impl ConformalSolution {
    /// Image of the `n`-point circle of radius `r` (0 < r <= 1).
    ///
    /// The complex boundary carries the full analytic trace, so one
    /// extension operator applied to it (halved, as the operator doubles the
    /// positive harmonics of a real input) gives `Σ_{k=1}^{K} c_k r^k e^{ikθ}`.
    pub fn ring(&self, r: f64) -> Result<Vec<Complex64>> {
        if !(r > 0.0 && r <= 1.0) {
            return Err(Error::contract(format!("ring radius {r} is outside (0, 1]")));
        }
        let centered: Vec<Complex64> = self.boundary.iter().map(|&w| w - self.w0).collect();
        let op = build_analytic_extension(self.n, r, 0.0)?;
        Ok(op.apply_complex(&centered)?.iter().map(|&z| 0.5 * z + self.w0).collect())
    }

    /// Residuals of the two harmonic-conjugacy relations a converged solution
    /// must satisfy, after removing means:
    /// `arg(w − w0) − s` vs `tilde(ln|w − w0|)` and
    /// `arg(w') − s − π/2` vs `tilde(ln|w'|)`.
    pub fn analyticity_residuals(&self) -> Result<(f64, f64)> {
        let radial: Vec<Complex64> = self.boundary.iter().map(|&w| w - self.w0).collect();
        let rel = |args: Vec<f64>, logs: Vec<f64>| -> f64 {
            let n = args.len() as f64;
            let mean = args.iter().sum::<f64>() / n;
            let conj = tilde_slice(&logs);
            args.iter().zip(conj.iter()).map(|(a, c)| (a - mean - c).abs()).fold(0.0, f64::max)
        };
        let radial_res = rel(winding_residual(&radial, "w - w0")?, radial.iter().map(|z| z.norm().ln()).collect());
        let tangent_res =
            rel(winding_residual(&self.derivative, "dw/ds")?, self.derivative.iter().map(|z| z.norm().ln()).collect());
        Ok((radial_res, tangent_res))
    }
}

pub fn coefficients(sol: &ConformalSolution) -> &ComplexSpectrum {
    &sol.coefficients
}

/// Maps `rings` concentric circles `r_i = i/rings` and `spokes` radii of the
/// disk through the solved map. Rings are evaluated in parallel, one circulant
/// application each.
pub fn evaluate_disk(sol: &ConformalSolution, rings: usize, spokes: usize) -> Result<DiskMesh> {
    if sol.residual.is_nan() || sol.residual >= sol.tol {
        return Err(Error::contract("solution is not converged"));
    }
    if rings == 0 {
        return Err(Error::contract("at least one ring is required"));
    }
    let radii: Vec<f64> = (1..=rings).map(|i| i as f64 / rings as f64).collect();
    let ring_points = radii.par_iter().map(|&r| sol.ring(r)).collect::<Result<Vec<_>>>()?;
    let spoke_lines = (0..spokes)
        .map(|k| {
            let j = k * sol.n / spokes;
            std::iter::once(sol.w0).chain(ring_points.iter().map(|ring| ring[j])).collect()
        })
        .collect();
    Ok(DiskMesh { center: sol.w0, radii, rings: ring_points, spokes: spoke_lines })
}
