//! Closed-form circulant operators and their fast application.
//!
//! Three families share one representation, a first-column kernel `m` with
//! `(M x)_l = Σ_j m_{(l-j) mod N} x_j`:
//!
//! * [`build_general`]: spectral reshaping by gains `λ_k`, radius ratio `r`
//!   and rotation `ψ`, `m_Δ = (2/N) Σ_{k=1}^{K} λ_k r^k e^{i(2πΔ/N + ψ)k}`.
//! * [`build_analytic_extension`]: the `λ ≡ 1` case summed in closed form.
//! * [`build_conjugation`]: the real harmonic-conjugation kernel behind [`tilde`].
//!
//! `K = floor((N-1)/2)` for every `N`, so the constant harmonic and the even-`N`
//! Nyquist harmonic are always dropped.

use std::f64::consts::{PI, TAU};

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::analytic::{AfcSpectrum, ComplexSpectrum};
use crate::error::{Error, Result};
use crate::signal::{ComplexSignal, RealSignal, MIN_LEN};
use crate::spectral;

/// Highest harmonic the operators act on for an `n`-point grid.
#[inline]
pub fn harmonic_count(n: usize) -> usize {
    (n - 1) / 2
}

/// Gains `λ_1..λ_K`, radius ratio `r` and rotation `ψ` of a general operator.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SpectralProfile {
    pub lambda: Vec<f64>,
    pub r: f64,
    pub psi: f64,
}

impl SpectralProfile {
    pub fn new(lambda: Vec<f64>, r: f64, psi: f64) -> Result<Self> {
        let p = SpectralProfile { lambda, r, psi };
        p.validate()?;
        Ok(p)
    }

    /// `λ ≡ 1`, `r = 1`, `ψ = 0`: maps a real signal to its analytic signal
    /// with the mean and Nyquist parts removed.
    pub fn identity(n: usize) -> Self {
        SpectralProfile { lambda: vec![1.0; harmonic_count(n)], r: 1.0, psi: 0.0 }
    }

    /// Gaussian band `λ_k = exp(-((k - center)/width)²)`.
    pub fn gaussian(n: usize, center: f64, width: f64, r: f64, psi: f64) -> Result<Self> {
        if !(width.is_finite() && width > 0.0) || !center.is_finite() {
            return Err(Error::contract("gaussian profile needs finite center and width > 0"));
        }
        let lambda = (1..=harmonic_count(n)).map(|k| (-((k as f64 - center) / width).powi(2)).exp()).collect();
        SpectralProfile::new(lambda, r, psi)
    }

    pub fn validate(&self) -> Result<()> {
        if let Some(k) = self.lambda.iter().position(|l| !l.is_finite()) {
            return Err(Error::contract(format!("lambda[{}] is not finite", k + 1)));
        }
        if !self.r.is_finite() || self.r < 0.0 {
            return Err(Error::contract(format!("r must be finite and >= 0, got {}", self.r)));
        }
        if !self.psi.is_finite() {
            return Err(Error::contract("psi must be finite"));
        }
        Ok(())
    }

    /// Checks the profile is sized for an `n`-point signal.
    pub fn check_len(&self, n: usize) -> Result<()> {
        let k = harmonic_count(n);
        if self.lambda.len() != k {
            return Err(Error::contract(format!("profile has {} gains but n = {n} needs K = {k}", self.lambda.len())));
        }
        Ok(())
    }

    /// Complex multiplier `λ_k r^k e^{iψk}` applied to harmonic `k`.
    pub fn multiplier(&self, k: usize) -> Complex64 {
        let mag = self.lambda[k - 1] * self.r.powi(k as i32);
        Complex64::from_polar(1.0, self.psi * k as f64) * mag
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OperatorKind {
    General,
    AnalyticExtension,
    Conjugation,
}

/// An `n`-point circulant operator stored by its first column.
#[derive(Debug, Clone, PartialEq)]
pub struct CirculantOperator {
    n: usize,
    kernel: Vec<Complex64>,
    kind: OperatorKind,
}

impl CirculantOperator {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn kernel(&self) -> &[Complex64] {
        &self.kernel
    }

    pub fn kind(&self) -> OperatorKind {
        self.kind
    }

    pub fn apply(&self, u: &RealSignal) -> Result<ComplexSignal> {
        self.check_input(u.len())?;
        Ok(ComplexSignal::from_vec_unchecked(spectral::convolve_real(&self.kernel, u)))
    }

    /// Complex-linear application to complex samples.
    pub fn apply_complex(&self, w: &[Complex64]) -> Result<ComplexSignal> {
        self.check_input(w.len())?;
        ComplexSignal::new(spectral::convolve_complex(&self.kernel, w))
    }

    fn check_input(&self, len: usize) -> Result<()> {
        if len != self.n {
            return Err(Error::contract(format!("operator is {}-point but input has {len} samples", self.n)));
        }
        Ok(())
    }
}

fn check_n(n: usize) -> Result<()> {
    if n < MIN_LEN {
        return Err(Error::contract(format!("operator size {n} is below {MIN_LEN}")));
    }
    Ok(())
}

/// Phase of `e^{i(2πΔ/n + ψ)k}`, reduced before multiplying out.
#[inline]
fn phase(delta: usize, k: usize, n: usize, psi: f64) -> f64 {
    TAU * ((delta * k) % n) as f64 / n as f64 + psi * k as f64
}

/// General reshaping operator by direct `O(N·K)` summation of its kernel.
pub fn build_general(n: usize, profile: &SpectralProfile) -> Result<CirculantOperator> {
    check_n(n)?;
    profile.validate()?;
    profile.check_len(n)?;
    let k_max = harmonic_count(n);
    let gains: Vec<f64> = (1..=k_max).map(|k| profile.lambda[k - 1] * profile.r.powi(k as i32)).collect();
    let scale = 2.0 / n as f64;
    let kernel = (0..n)
        .map(|delta| {
            (1..=k_max).map(|k| Complex64::from_polar(gains[k - 1], phase(delta, k, n, profile.psi))).sum::<Complex64>()
                * scale
        })
        .collect();
    Ok(CirculantOperator { n, kernel, kind: OperatorKind::General })
}

/// Threshold on `|q - 1|` below which the geometric sum takes its limit `K`.
pub const GEOMETRIC_SINGULAR_TOL: f64 = 1e-9;

/// Analytic-extension operator: the `λ ≡ 1` kernel via the geometric sum
/// `(2/N)·q(q^K - 1)/(q - 1)` with `q = r e^{i(2πΔ/N + ψ)}`.
///
/// `r` must stay below the convergence radius of the function whose real
/// part is supplied, otherwise the output is not meaningful.
pub fn build_analytic_extension(n: usize, r: f64, psi: f64) -> Result<CirculantOperator> {
    check_n(n)?;
    if !r.is_finite() || r < 0.0 || !psi.is_finite() {
        return Err(Error::contract("analytic extension needs finite r >= 0 and finite psi"));
    }
    let k_max = harmonic_count(n);
    let scale = 2.0 / n as f64;
    let kernel = (0..n)
        .map(|delta| {
            let q = Complex64::from_polar(r, phase(delta, 1, n, psi));
            if (q - 1.0).norm() < GEOMETRIC_SINGULAR_TOL {
                return Complex64::new(scale * k_max as f64, 0.0);
            }
            let q_k = Complex64::from_polar(r.powi(k_max as i32), phase(delta, k_max, n, psi));
            q * (q_k - 1.0) / (q - 1.0) * scale
        })
        .collect();
    Ok(CirculantOperator { n, kernel, kind: OperatorKind::AnalyticExtension })
}

/// Harmonic-conjugation kernel. Real, zero on the diagonal.
pub fn build_conjugation(n: usize) -> Result<CirculantOperator> {
    check_n(n)?;
    let nf = n as f64;
    let odd = n % 2 == 1;
    let kernel = (0..n)
        .map(|delta| {
            let value = if delta == 0 {
                0.0
            } else {
                let x = PI * delta as f64 / nf;
                let parity = if delta % 2 == 0 { 1.0 } else { -1.0 };
                if odd {
                    (x.cos() - parity) / (nf * x.sin())
                } else if delta % 2 == 0 {
                    0.0
                } else {
                    2.0 * x.cos() / (nf * x.sin())
                }
            };
            Complex64::new(value, 0.0)
        })
        .collect();
    Ok(CirculantOperator { n, kernel, kind: OperatorKind::Conjugation })
}

pub fn apply(op: &CirculantOperator, u: &RealSignal) -> Result<ComplexSignal> {
    op.apply(u)
}

/// Discrete harmonic conjugate. Annihilates the mean and (even `n`) the
/// Nyquist harmonic; `tilde(tilde(u)) = -u` on everything else.
pub fn tilde(u: &RealSignal) -> RealSignal {
    tilde_slice(u)
}

pub(crate) fn tilde_slice(u: &[f64]) -> RealSignal {
    let op = build_conjugation(u.len()).expect("length checked by caller");
    let out = spectral::convolve_real(&op.kernel, u);
    RealSignal::from_vec_unchecked(out.into_iter().map(|z| z.re).collect())
}

/// Reshaped AFC: `a'_k = λ_k r^k (a_k cos kψ + b_k sin kψ)`,
/// `b'_k = λ_k r^k (b_k cos kψ - a_k sin kψ)`; `a'_0` and the Nyquist term are 0.
pub fn predict_spectrum(afc: &AfcSpectrum, profile: &SpectralProfile) -> Result<AfcSpectrum> {
    profile.validate()?;
    profile.check_len(afc.n)?;
    let k_max = harmonic_count(afc.n);
    let mut a = vec![0.0; k_max + 1];
    let mut b = vec![0.0; k_max + 1];
    for k in 1..=k_max {
        let g = profile.lambda[k - 1] * profile.r.powi(k as i32);
        let (s, c) = (k as f64 * profile.psi).sin_cos();
        a[k] = g * (afc.a[k] * c + afc.b[k] * s);
        b[k] = g * (afc.b[k] * c - afc.a[k] * s);
    }
    Ok(AfcSpectrum { n: afc.n, a, b, nyquist: afc.nyquist.map(|_| 0.0) })
}

/// Coefficient-domain form of the same prediction, `c'_j = λ_j r^j e^{iψj} c_j`
/// for `j = 1..K` and zero elsewhere. `c` are the row coefficients of the
/// analytic function whose real part is being reshaped.
pub fn predict_row_coefficients(c: &ComplexSpectrum, profile: &SpectralProfile) -> Result<ComplexSpectrum> {
    profile.validate()?;
    profile.check_len(c.n)?;
    let mut out = vec![Complex64::new(0.0, 0.0); c.n];
    for (j, slot) in out.iter_mut().enumerate().take(harmonic_count(c.n) + 1).skip(1) {
        *slot = profile.multiplier(j) * c.c[j];
    }
    Ok(ComplexSpectrum { n: c.n, c: out })
}
