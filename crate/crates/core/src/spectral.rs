//! Length-agnostic fast circular convolution and discrete Fourier transforms.
//!
//! The engine is a single iterative radix-2 kernel. Every other length is
//! reached by zero-padding: circular convolution embeds into a linear
//! convolution of power-of-two size `>= 2N - 1` and folds the tail back, and
//! the arbitrary-length DFT uses the chirp-z (Bluestein) identity on top of
//! the same padded convolution. Cost is `O(N log N)` for every `N`, prime
//! lengths included.
//!
//! Normalization: [`dft`] is unscaled, [`idft`] carries `1/N`.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{Error, Result};

fn check_finite(x: &[Complex64], what: &str) -> Result<()> {
    match x.iter().position(|z| !z.is_finite()) {
        Some(i) => Err(Error::contract(format!("{what}: entry {i} is not finite"))),
        None => Ok(()),
    }
}

fn check_same_len(a: &[Complex64], b: &[Complex64]) -> Result<()> {
    if a.len() != b.len() {
        return Err(Error::contract(format!("length mismatch: {} vs {}", a.len(), b.len())));
    }
    if a.is_empty() {
        return Err(Error::contract("empty sequence"));
    }
    check_finite(a, "first operand")?;
    check_finite(b, "second operand")
}

/// In-place iterative radix-2 transform. `buf.len()` must be a power of two.
/// `inverse` flips the twiddle sign; no scaling is applied.
fn fft_pow2(buf: &mut [Complex64], inverse: bool) {
    let n = buf.len();
    debug_assert!(n.is_power_of_two());
    if n <= 1 {
        return;
    }

    let bits = n.trailing_zeros();
    for i in 0..n {
        let j = i.reverse_bits() >> (usize::BITS - bits);
        if j > i {
            buf.swap(i, j);
        }
    }

    // Twiddles from exact angles; a recurrence would accumulate error.
    let sign = if inverse { 1.0 } else { -1.0 };
    let twiddles: Vec<Complex64> = (0..n / 2)
        .map(|k| {
            let (s, c) = (sign * 2.0 * PI * k as f64 / n as f64).sin_cos();
            Complex64::new(c, s)
        })
        .collect();

    let mut len = 2;
    while len <= n {
        let half = len / 2;
        let stride = n / len;
        for start in (0..n).step_by(len) {
            for k in 0..half {
                let w = twiddles[k * stride];
                let u = buf[start + k];
                let v = buf[start + k + half] * w;
                buf[start + k] = u + v;
                buf[start + k + half] = u - v;
            }
        }
        len <<= 1;
    }
}

/// Circular convolution by padded linear convolution. No validation.
fn convolve_unchecked(a: &[Complex64], b: &[Complex64]) -> Vec<Complex64> {
    let n = a.len();
    if n == 1 {
        return vec![a[0] * b[0]];
    }
    let size = (2 * n - 1).next_power_of_two();
    let zero = Complex64::new(0.0, 0.0);

    let mut fa = vec![zero; size];
    fa[..n].copy_from_slice(a);
    let mut fb = vec![zero; size];
    fb[..n].copy_from_slice(b);

    fft_pow2(&mut fa, false);
    fft_pow2(&mut fb, false);
    for (x, y) in fa.iter_mut().zip(&fb) {
        *x *= y;
    }
    fft_pow2(&mut fa, true);

    let scale = 1.0 / size as f64;
    // Linear result has 2N-1 terms; wrap indices N..2N-2 onto 0..N-2.
    (0..n)
        .map(|l| {
            let tail = if l + n < 2 * n - 1 { fa[l + n] } else { zero };
            (fa[l] + tail) * scale
        })
        .collect()
}

/// `c_l = Σ_j a_j · b_{(l-j) mod N}` in `O(N log N)` for any `N >= 1`.
pub fn circular_convolve(a: &[Complex64], b: &[Complex64]) -> Result<Vec<Complex64>> {
    check_same_len(a, b)?;
    Ok(convolve_unchecked(a, b))
}

/// Naive `O(N²)` circular convolution with the same contract as
/// [`circular_convolve`]. Kept as the reference the fast path is tested against.
pub fn circular_convolve_direct(a: &[Complex64], b: &[Complex64]) -> Result<Vec<Complex64>> {
    check_same_len(a, b)?;
    let n = a.len();
    Ok((0..n).map(|l| (0..n).map(|j| a[j] * b[(l + n - j) % n]).sum()).collect())
}

/// Chirp-z transform. `inverse` selects the `+i` exponent; unscaled.
fn bluestein(x: &[Complex64], inverse: bool) -> Vec<Complex64> {
    let n = x.len();
    let sign = if inverse { 1.0 } else { -1.0 };
    // chirp_m = exp(sign·iπ m²/N); m² reduced mod 2N keeps the angle small.
    let chirp: Vec<Complex64> = (0..n)
        .map(|m| {
            let m2 = (m as u128 * m as u128 % (2 * n as u128)) as f64;
            let (s, c) = (sign * PI * m2 / n as f64).sin_cos();
            Complex64::new(c, s)
        })
        .collect();

    let size = (2 * n - 1).next_power_of_two();
    let zero = Complex64::new(0.0, 0.0);
    let mut fa = vec![zero; size];
    for (slot, (xi, ci)) in fa.iter_mut().zip(x.iter().zip(&chirp)) {
        *slot = xi * ci;
    }
    let mut fb = vec![zero; size];
    fb[0] = chirp[0].conj();
    for m in 1..n {
        fb[m] = chirp[m].conj();
        fb[size - m] = chirp[m].conj();
    }
    fft_pow2(&mut fa, false);
    fft_pow2(&mut fb, false);
    for (p, q) in fa.iter_mut().zip(&fb) {
        *p *= q;
    }
    fft_pow2(&mut fa, true);
    let scale = 1.0 / size as f64;
    (0..n).map(|k| fa[k] * chirp[k] * scale).collect()
}

fn transform(x: &[Complex64], inverse: bool) -> Vec<Complex64> {
    if x.len().is_power_of_two() {
        let mut buf = x.to_vec();
        fft_pow2(&mut buf, inverse);
        buf
    } else {
        bluestein(x, inverse)
    }
}

/// Forward DFT, `X_k = Σ_t x_t e^{-2πikt/N}` (unscaled).
pub fn dft(x: &[Complex64]) -> Result<Vec<Complex64>> {
    if x.is_empty() {
        return Err(Error::contract("empty sequence"));
    }
    check_finite(x, "dft input")?;
    Ok(transform(x, false))
}

/// Inverse DFT, `x_t = (1/N) Σ_k X_k e^{2πikt/N}`.
pub fn idft(x: &[Complex64]) -> Result<Vec<Complex64>> {
    if x.is_empty() {
        return Err(Error::contract("empty sequence"));
    }
    check_finite(x, "idft input")?;
    let scale = 1.0 / x.len() as f64;
    Ok(transform(x, true).into_iter().map(|z| z * scale).collect())
}

/// Forward DFT of real samples.
pub(crate) fn dft_real(x: &[f64]) -> Vec<Complex64> {
    let c: Vec<Complex64> = x.iter().map(|&v| Complex64::new(v, 0.0)).collect();
    transform(&c, false)
}

/// Inverse DFT with `1/N`, skipping validation for internal callers.
pub(crate) fn idft_unchecked(x: &[Complex64]) -> Vec<Complex64> {
    let scale = 1.0 / x.len() as f64;
    transform(x, true).into_iter().map(|z| z * scale).collect()
}

pub(crate) fn convolve_real(kernel: &[Complex64], u: &[f64]) -> Vec<Complex64> {
    let c: Vec<Complex64> = u.iter().map(|&v| Complex64::new(v, 0.0)).collect();
    convolve_unchecked(kernel, &c)
}

pub(crate) fn convolve_complex(kernel: &[Complex64], u: &[Complex64]) -> Vec<Complex64> {
    convolve_unchecked(kernel, u)
}

/// Signed frequency of DFT bin `k` on an `n`-point grid; the even-`n` Nyquist
/// bin maps to `+n/2`.
pub(crate) fn signed_freq(k: usize, n: usize) -> i64 {
    if 2 * k <= n {
        k as i64
    } else {
        k as i64 - n as i64
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64) -> Complex64 {
        Complex64::new(re, 0.0)
    }

    fn max_abs_diff(a: &[Complex64], b: &[Complex64]) -> f64 {
        a.iter().zip(b).map(|(x, y)| (x - y).norm()).fold(0.0, f64::max)
    }

    #[test]
    fn delta_is_identity_kernel() {
        let a = [c(1.0), c(0.0), c(0.0), c(0.0)];
        let b = [c(1.0), c(2.0), c(3.0), c(4.0)];
        let out = circular_convolve(&a, &b).unwrap();
        assert!(max_abs_diff(&out, &b) < 1e-14);
    }

    #[test]
    fn small_hand_example() {
        let a = [c(1.0), c(2.0), c(3.0), c(4.0)];
        let b = [c(1.0), c(1.0), c(0.0), c(0.0)];
        let expect = [c(5.0), c(3.0), c(5.0), c(7.0)];
        let direct = circular_convolve_direct(&a, &b).unwrap();
        assert!(max_abs_diff(&direct, &expect) < 1e-14);
        let fast = circular_convolve(&a, &b).unwrap();
        assert!(max_abs_diff(&fast, &expect) < 1e-13);
    }

    #[test]
    fn length_one_and_errors() {
        assert_eq!(circular_convolve(&[c(2.0)], &[c(3.0)]).unwrap(), vec![c(6.0)]);
        assert!(matches!(circular_convolve(&[c(1.0)], &[c(1.0), c(2.0)]), Err(Error::Contract(_))));
        assert!(circular_convolve(&[c(f64::NAN)], &[c(1.0)]).is_err());
        assert!(circular_convolve_direct(&[], &[]).is_err());
        assert!(dft(&[c(f64::INFINITY)]).is_err());
    }

    #[test]
    fn dft_trivial_pairs() {
        let x = dft(&[c(1.0), c(0.0), c(0.0), c(0.0)]).unwrap();
        assert!(max_abs_diff(&x, &[c(1.0); 4]) < 1e-15);
        let y = dft(&[c(1.0); 4]).unwrap();
        assert!(max_abs_diff(&y, &[c(4.0), c(0.0), c(0.0), c(0.0)]) < 1e-15);
    }

    #[test]
    fn bluestein_matches_direct_dft() {
        for n in [3usize, 5, 7, 12, 97] {
            let x: Vec<Complex64> =
                (0..n).map(|t| Complex64::new((t as f64 * 0.7).sin(), (t as f64 * 1.3).cos())).collect();
            let direct: Vec<Complex64> = (0..n)
                .map(|k| {
                    (0..n).map(|t| x[t] * Complex64::from_polar(1.0, -2.0 * PI * ((k * t) % n) as f64 / n as f64)).sum()
                })
                .collect();
            let fast = dft(&x).unwrap();
            assert!(max_abs_diff(&fast, &direct) < 1e-11 * n as f64, "n = {n}");
        }
    }

    #[test]
    fn signed_freq_layout() {
        assert_eq!(signed_freq(0, 8), 0);
        assert_eq!(signed_freq(4, 8), 4);
        assert_eq!(signed_freq(5, 8), -3);
        assert_eq!(signed_freq(3, 7), 3);
        assert_eq!(signed_freq(4, 7), -3);
    }
}
