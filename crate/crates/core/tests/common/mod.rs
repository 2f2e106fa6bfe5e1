//! Independent oracles and generators shared by the integration tests.
//! Nothing here routes through the library's transform engine.

#![allow(dead_code)]

use std::f64::consts::TAU;

use harmonia::{Complex64, RealSignal};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn theta(j: usize, n: usize) -> f64 {
    TAU * j as f64 / n as f64
}

/// `e^{-2πi·jk/n}` with the exponent reduced exactly.
fn root(jk: usize, n: usize, sign: f64) -> Complex64 {
    Complex64::from_polar(1.0, sign * theta(jk % n, n))
}

/// Unscaled O(n²) DFT.
pub fn naive_dft(x: &[Complex64]) -> Vec<Complex64> {
    let n = x.len();
    (0..n).map(|k| x.iter().enumerate().map(|(j, &v)| v * root(j * k, n, -1.0)).sum()).collect()
}

/// `(1/n) Σ x_j e^{-2πijk/n}`.
pub fn naive_coeffs(x: &[Complex64]) -> Vec<Complex64> {
    let n = x.len() as f64;
    naive_dft(x).into_iter().map(|c| c / n).collect()
}

pub fn naive_coeffs_real(u: &[f64]) -> Vec<Complex64> {
    naive_coeffs(&to_complex(u))
}

/// `Σ_k c_k e^{ikθ_j}` over every bin, with signed frequencies.
pub fn naive_synth(c: &[Complex64]) -> Vec<Complex64> {
    let n = c.len();
    (0..n).map(|j| c.iter().enumerate().map(|(k, &ck)| ck * root(j * k, n, 1.0)).sum()).collect()
}

/// `a_k, b_k` for `k = 0..=K` by direct cosine/sine sums.
pub fn naive_afc(u: &[f64]) -> (Vec<f64>, Vec<f64>) {
    let n = u.len();
    let k_max = (n - 1) / 2;
    let scale = 2.0 / n as f64;
    let a = (0..=k_max)
        .map(|k| scale * u.iter().enumerate().map(|(t, x)| x * theta(t * k % n, n).cos()).sum::<f64>())
        .collect();
    let b = (0..=k_max)
        .map(|k| scale * u.iter().enumerate().map(|(t, x)| x * theta(t * k % n, n).sin()).sum::<f64>())
        .collect();
    (a, b)
}

/// Harmonic conjugate via coefficient multipliers `-i·sign(k)`, with DC and
/// Nyquist removed.
pub fn naive_tilde(u: &[f64]) -> Vec<f64> {
    let n = u.len();
    let mut c = naive_coeffs_real(u);
    for (k, ck) in c.iter_mut().enumerate() {
        let m = if k == 0 || 2 * k == n {
            Complex64::new(0.0, 0.0)
        } else if 2 * k < n {
            Complex64::new(0.0, -1.0)
        } else {
            Complex64::new(0.0, 1.0)
        };
        *ck *= m;
    }
    naive_synth(&c).into_iter().map(|z| z.re).collect()
}

/// Kernel entry of the general operator by literal summation.
pub fn naive_kernel(n: usize, lambda: &[f64], r: f64, psi: f64) -> Vec<Complex64> {
    (0..n)
        .map(|delta| {
            let scale = 2.0 / n as f64;
            lambda
                .iter()
                .enumerate()
                .map(|(i, l)| {
                    let k = (i + 1) as f64;
                    Complex64::from_polar(l * r.powf(k), (TAU * delta as f64 / n as f64 + psi) * k) * scale
                })
                .sum()
        })
        .collect()
}

/// Direct circulant product `(Mx)_l = Σ_j m_{(l-j) mod n} x_j`.
pub fn naive_matvec(kernel: &[Complex64], x: &[Complex64]) -> Vec<Complex64> {
    let n = x.len();
    (0..n).map(|l| (0..n).map(|j| kernel[(l + n - j) % n] * x[j]).sum()).collect()
}

pub fn to_complex(u: &[f64]) -> Vec<Complex64> {
    u.iter().map(|&x| Complex64::new(x, 0.0)).collect()
}

pub fn random_real(rng: &mut impl Rng, n: usize) -> Vec<f64> {
    (0..n).map(|_| rng.gen_range(-1.0..1.0)).collect()
}

pub fn random_complex(rng: &mut impl Rng, n: usize) -> Vec<Complex64> {
    (0..n).map(|_| Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0))).collect()
}

/// Random analytic polynomial coefficients `c_1..c_deg` (no constant term).
pub fn random_analytic(rng: &mut impl Rng, deg: usize) -> Vec<Complex64> {
    let mut c = vec![Complex64::new(0.0, 0.0)];
    c.extend(random_complex(rng, deg));
    c
}

pub fn eval_poly(c: &[Complex64], z: Complex64) -> Complex64 {
    c.iter().rev().fold(Complex64::new(0.0, 0.0), |acc, &ck| acc * z + ck)
}

/// `Re W(e^{iθ_j})` for a polynomial `W` given by coefficients.
pub fn real_part_on_circle(c: &[Complex64], n: usize) -> RealSignal {
    RealSignal::from_fn(n, |t| eval_poly(c, Complex64::from_polar(1.0, t)).re).unwrap()
}

/// Zero-mean real signal with harmonics `1..=deg` only.
pub fn band_limited(rng: &mut impl Rng, n: usize, deg: usize) -> RealSignal {
    real_part_on_circle(&random_analytic(rng, deg), n)
}

pub fn max_diff(a: &[f64], b: &[f64]) -> f64 {
    assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| (x - y).abs()).fold(0.0, f64::max)
}

pub fn max_diff_c(a: &[Complex64], b: &[Complex64]) -> f64 {
    assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| (x - y).norm()).fold(0.0, f64::max)
}

pub fn max_abs_c(a: &[Complex64]) -> f64 {
    a.iter().map(|z| z.norm()).fold(0.0, f64::max)
}

pub fn norm2_c(a: &[Complex64]) -> f64 {
    a.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
}

/// Rotation `θ0` minimizing `Σ|w_j − f(e^{i(s_j+θ0)})|` near the phase of
/// the first samples, refined by golden-section search.
pub fn best_rotation(w: &[Complex64], f: impl Fn(Complex64) -> Complex64) -> (f64, f64) {
    let n = w.len();
    let err = |t0: f64| -> f64 {
        (0..n).map(|j| (w[j] - f(Complex64::from_polar(1.0, theta(j, n) + t0))).norm()).fold(0.0, f64::max)
    };
    let coarse = (0..720).map(|i| TAU * i as f64 / 720.0).min_by(|a, b| err(*a).total_cmp(&err(*b))).unwrap();
    let (mut lo, mut hi) = (coarse - TAU / 720.0, coarse + TAU / 720.0);
    let g = (5f64.sqrt() - 1.0) / 2.0;
    for _ in 0..200 {
        let m1 = hi - g * (hi - lo);
        let m2 = lo + g * (hi - lo);
        if err(m1) < err(m2) {
            hi = m2;
        } else {
            lo = m1;
        }
    }
    let t0 = 0.5 * (lo + hi);
    (t0, err(t0))
}
