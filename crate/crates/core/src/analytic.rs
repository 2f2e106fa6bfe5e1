//! Spectrum extraction, analytic signals, continuation to concentric circles
//! and reinstatement of a wave function from its modulus.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::operators::{build_analytic_extension, harmonic_count, tilde};
use crate::signal::{grid_angle, ComplexSignal, RealSignal};
use crate::spectral;

/// Amplitude-frequency characteristic of a real signal.
///
/// `a[k]`, `b[k]` for `k = 0..=K` with `K = floor((n-1)/2)` and `b[0] = 0`,
/// so that `u_t = a_0/2 + Σ_k (a_k cos kt + b_k sin kt) + nyquist·(-1)^t`.
/// `nyquist` is present only for even `n` and carries the `1/n` weight.
#[derive(Debug, Clone, PartialEq)]
pub struct AfcSpectrum {
    pub n: usize,
    pub a: Vec<f64>,
    pub b: Vec<f64>,
    pub nyquist: Option<f64>,
}

impl AfcSpectrum {
    /// Trigonometric reconstruction on the `n`-point grid.
    pub fn reconstruct(&self) -> Vec<f64> {
        (0..self.n)
            .map(|t| {
                let theta = grid_angle(t, self.n);
                let mut acc = self.a[0] / 2.0;
                for k in 1..self.a.len() {
                    let (s, c) = (k as f64 * theta).sin_cos();
                    acc += self.a[k] * c + self.b[k] * s;
                }
                if let Some(h) = self.nyquist {
                    acc += if t % 2 == 0 { h } else { -h };
                }
                acc
            })
            .collect()
    }

    /// Harmonic count `K`.
    pub fn k_max(&self) -> usize {
        self.a.len() - 1
    }
}

/// Row (Fourier) coefficients `c_j = (1/n) Σ_t w_t e^{-2πijt/n}`.
#[derive(Debug, Clone, PartialEq)]
pub struct ComplexSpectrum {
    pub n: usize,
    pub c: Vec<Complex64>,
}

impl ComplexSpectrum {
    /// Evaluates `Σ_{k=0}^{K} c_k z^k`, the analytic (non-negative frequency)
    /// part of the coefficient set, at `z`.
    pub fn eval_analytic(&self, z: Complex64) -> Complex64 {
        let k_max = harmonic_count(self.n);
        self.c[..=k_max].iter().rev().fold(Complex64::new(0.0, 0.0), |acc, &ck| acc * z + ck)
    }
}

pub fn afc(u: &RealSignal) -> AfcSpectrum {
    let n = u.len();
    let k_max = harmonic_count(n);
    let spec = spectral::dft_real(u);
    let scale = 2.0 / n as f64;
    let a = (0..=k_max).map(|k| spec[k].re * scale).collect();
    let mut b: Vec<f64> = (0..=k_max).map(|k| -spec[k].im * scale).collect();
    b[0] = 0.0;
    let nyquist = n.is_multiple_of(2).then(|| spec[n / 2].re / n as f64);
    AfcSpectrum { n, a, b, nyquist }
}

pub fn row_coefficients(w: &ComplexSignal) -> ComplexSpectrum {
    row_coefficients_slice(w)
}

pub(crate) fn row_coefficients_slice(w: &[Complex64]) -> ComplexSpectrum {
    let n = w.len();
    let scale = 1.0 / n as f64;
    let c = spectral::dft(w).expect("signal samples are finite").into_iter().map(|z| z * scale).collect();
    ComplexSpectrum { n, c }
}

/// Values on the circle of radius ratio `r`, rotated by `psi`, of the analytic
/// function whose real part on the unit circle is `u`, minus its constant term.
///
/// Accuracy improves with `n` only while `r` is inside the convergence radius
/// of that function.
pub fn extend(u: &RealSignal, r: f64, psi: f64) -> Result<ComplexSignal> {
    build_analytic_extension(u.len(), r, psi)?.apply(u)
}

/// Boundary analytic signal `u + i·tilde(u)`.
pub fn analytic_signal(u: &RealSignal) -> ComplexSignal {
    let v = tilde(u);
    ComplexSignal::from_vec_unchecked(u.iter().zip(v.iter()).map(|(&re, &im)| Complex64::new(re, im)).collect())
}

/// Outer function with modulus `sqrt(density)` and phase
/// `tilde(ln sqrt(density))`. The phase has zero mean.
pub fn reinstate_wave(density: &RealSignal) -> Result<ComplexSignal> {
    if let Some(j) = density.iter().position(|&d| d <= 0.0) {
        return Err(Error::domain(format!(
            "density must be strictly positive on the grid (sample {j} is {})",
            density[j]
        )));
    }
    let log_modulus = RealSignal::from_vec_unchecked(density.iter().map(|d| 0.5 * d.ln()).collect());
    let phase = tilde(&log_modulus);
    ComplexSignal::new(density.iter().zip(phase.iter()).map(|(&d, &p)| Complex64::from_polar(d.sqrt(), p)).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::TAU;

    #[test]
    fn afc_of_constant() {
        let s = afc(&RealSignal::new(vec![1.0; 7]).unwrap());
        assert!((s.a[0] - 2.0).abs() < 1e-15);
        assert!(s.a[1..].iter().chain(&s.b).all(|x| x.abs() < 1e-15));
        assert!(s.nyquist.is_none());
    }

    #[test]
    fn afc_of_cosine() {
        let s = afc(&RealSignal::from_fn(8, f64::cos).unwrap());
        assert_eq!(s.k_max(), 3);
        assert!((s.a[1] - 1.0).abs() < 1e-15);
        for k in 0..=3 {
            if k != 1 {
                assert!(s.a[k].abs() < 1e-15);
            }
            assert!(s.b[k].abs() < 1e-15);
        }
        assert!(s.nyquist.unwrap().abs() < 1e-15);
    }

    #[test]
    fn even_length_reconstruction_uses_nyquist() {
        let u = RealSignal::new(vec![1.0, -2.0, 3.0, 0.5, -1.0, 4.0]).unwrap();
        let rec = afc(&u).reconstruct();
        for (x, y) in rec.iter().zip(u.iter()) {
            assert!((x - y).abs() < 1e-13);
        }
    }

    #[test]
    fn row_coefficients_trivial() {
        let n = 6;
        let w = ComplexSignal::from_fn(n, |t| Complex64::from_polar(1.0, t)).unwrap();
        let c = row_coefficients(&w);
        assert!((c.c[1] - 1.0).norm() < 1e-15);
        assert!(c.c.iter().enumerate().all(|(j, z)| j == 1 || z.norm() < 1e-15));
        let ones = ComplexSignal::new(vec![Complex64::new(1.0, 0.0); n]).unwrap();
        assert!((row_coefficients(&ones).c[0] - 1.0).norm() < 1e-15);
    }

    #[test]
    fn analytic_signal_of_cosine() {
        let n = 10;
        for k in 1..=4 {
            let u = RealSignal::from_fn(n, |t| (k as f64 * t).cos()).unwrap();
            let w = analytic_signal(&u);
            for (j, z) in w.iter().enumerate() {
                let e = Complex64::from_polar(1.0, k as f64 * TAU * j as f64 / n as f64);
                assert!((z - e).norm() < 1e-13);
                assert_eq!(z.re, u[j]);
            }
        }
        let c = analytic_signal(&RealSignal::new(vec![2.0; 5]).unwrap());
        assert!(c.iter().all(|z| z.re == 2.0 && z.im.abs() < 1e-15));
    }

    #[test]
    fn extend_of_constant_is_zero() {
        let out = extend(&RealSignal::new(vec![4.0; 9]).unwrap(), 0.5, 0.2).unwrap();
        assert!(out.iter().all(|z| z.norm() < 1e-14));
    }

    #[test]
    fn wave_rejects_non_positive_density() {
        let d = RealSignal::new(vec![1.0, 0.0, 2.0]).unwrap();
        assert!(matches!(reinstate_wave(&d), Err(Error::Domain(_))));
        let d = RealSignal::new(vec![1.0, -3.0, 2.0]).unwrap();
        assert!(reinstate_wave(&d).is_err());
    }

    #[test]
    fn wave_of_unit_density() {
        let psi = reinstate_wave(&RealSignal::new(vec![1.0; 8]).unwrap()).unwrap();
        assert!(psi.iter().all(|z| (z - 1.0).norm() < 1e-15));
    }

    #[test]
    fn eval_analytic_horner() {
        let c = ComplexSpectrum {
            n: 5,
            c: vec![
                Complex64::new(1.0, 0.0),
                Complex64::new(2.0, 0.0),
                Complex64::new(3.0, 0.0),
                Complex64::new(9.0, 0.0),
                Complex64::new(9.0, 0.0),
            ],
        };
        let z = Complex64::new(0.5, 0.0);
        assert!((c.eval_analytic(z) - Complex64::new(2.75, 0.0)).norm() < 1e-15);
    }
}
