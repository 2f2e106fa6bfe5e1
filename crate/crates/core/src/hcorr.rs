//! Harmonic covariation and correlation of oscillating signals.
//!
//! Inner products use `⟨x, y⟩ = (2/n) Σ x_t y_t`, the discrete form of
//! `(1/π)∫₀^{2π}`. Even-length inputs lose their Nyquist harmonic before any
//! conjugate is formed, since the conjugation operator annihilates it.

use std::cmp::Ordering;

use num_complex::Complex64;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::operators::tilde_slice;
use crate::signal::RealSignal;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HCResult {
    pub covariation: Complex64,
    pub correlation: Complex64,
    pub n: usize,
}

fn inner(x: &[f64], y: &[f64]) -> f64 {
    2.0 / x.len() as f64 * x.iter().zip(y).map(|(a, b)| a * b).sum::<f64>()
}

/// Removes the mean and, for even lengths, the alternating component.
fn center(u: &[f64]) -> Vec<f64> {
    let n = u.len();
    let mean = u.iter().sum::<f64>() / n as f64;
    let nyquist = if n.is_multiple_of(2) {
        u.iter().enumerate().map(|(t, x)| if t % 2 == 0 { *x } else { -*x }).sum::<f64>() / n as f64
    } else {
        0.0
    };
    u.iter().enumerate().map(|(t, x)| x - mean - if t % 2 == 0 { nyquist } else { -nyquist }).collect()
}

fn check_pair(u: &RealSignal, v: &RealSignal) -> Result<()> {
    if u.len() != v.len() {
        return Err(Error::contract(format!("length mismatch: {} vs {}", u.len(), v.len())));
    }
    Ok(())
}

fn covariation_centered(uc: &[f64], vc: &[f64]) -> Complex64 {
    let conj = tilde_slice(vc);
    Complex64::new(inner(uc, vc), inner(uc, &conj))
}

/// `U~V = ⟨u_c, v_c⟩ + i⟨u_c, tilde(v_c)⟩`.
pub fn hcov(u: &RealSignal, v: &RealSignal) -> Result<Complex64> {
    check_pair(u, v)?;
    Ok(covariation_centered(&center(u), &center(v)))
}

fn energy(xc: &[f64], raw: &[f64]) -> Result<f64> {
    let e = inner(xc, xc);
    let scale = raw.iter().fold(0.0f64, |m, x| m.max(x.abs())).max(f64::MIN_POSITIVE);
    if e <= (1e-13 * scale).powi(2) {
        return Err(Error::domain("zero variance: signal is constant"));
    }
    Ok(e)
}

/// Harmonic correlation `U~V / sqrt(⟨u_c,u_c⟩⟨v_c,v_c⟩)`.
pub fn hcorr(u: &RealSignal, v: &RealSignal) -> Result<HCResult> {
    check_pair(u, v)?;
    let (uc, vc) = (center(u), center(v));
    let norm = (energy(&uc, u)? * energy(&vc, v)?).sqrt();
    let covariation = covariation_centered(&uc, &vc);
    Ok(HCResult { covariation, correlation: covariation / norm, n: u.len() })
}

/// `(a + ib) ~ u = a·u + b·tilde(u)`. Always real-valued.
pub fn tilde_scalar_mul(lambda: Complex64, u: &RealSignal) -> RealSignal {
    let conj = tilde_slice(u);
    let out = u.iter().zip(conj.iter()).map(|(x, y)| lambda.re * x + lambda.im * y).collect();
    RealSignal::new(out).expect("finite inputs give finite output")
}

/// Standard Pearson correlation coefficient.
pub fn pearson(u: &[f64], v: &[f64]) -> Option<f64> {
    let n = u.len() as f64;
    let mu = u.iter().sum::<f64>() / n;
    let mv = v.iter().sum::<f64>() / n;
    let (mut suv, mut suu, mut svv) = (0.0, 0.0, 0.0);
    for (a, b) in u.iter().zip(v) {
        let (x, y) = (a - mu, b - mv);
        suv += x * y;
        suu += x * x;
        svv += y * y;
    }
    let d = (suu * svv).sqrt();
    (d > 0.0).then(|| suv / d)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum RankKey {
    /// Ascending `|HC − 1|`: closest to in-phase tracking first.
    #[default]
    InPhase,
    /// Descending `|HC|`: phase-agnostic similarity.
    Magnitude,
}

impl RankKey {
    fn score(self, hc: Complex64) -> f64 {
        match self {
            RankKey::InPhase => (hc - 1.0).norm(),
            RankKey::Magnitude => -hc.norm(),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct RankEntry {
    pub label: String,
    pub hc: HCResult,
    pub pearson: f64,
}

#[derive(Debug, Clone, PartialEq, Default)]
pub struct Ranking {
    pub ranked: Vec<RankEntry>,
    /// Candidates with zero variance; reported, never ranked.
    pub constant: Vec<String>,
}

/// Orders candidates by similarity to `reference`. Ties break on label.
///
/// A constant reference is a domain error; constant candidates are listed
/// separately.
pub fn rank(reference: &RealSignal, candidates: &[(String, RealSignal)], key: RankKey) -> Result<Ranking> {
    energy(&center(reference), reference)?;
    let results = candidates
        .par_iter()
        .map(|(label, series)| match hcorr(reference, series) {
            Ok(hc) => {
                Ok(Ok(RankEntry { label: label.clone(), hc, pearson: pearson(reference, series).unwrap_or(f64::NAN) }))
            }
            Err(Error::Domain(_)) => Ok(Err(label.clone())),
            Err(e) => Err(e),
        })
        .collect::<Result<Vec<_>>>()?;

    let mut ranking = Ranking::default();
    for r in results {
        match r {
            Ok(entry) => ranking.ranked.push(entry),
            Err(label) => ranking.constant.push(label),
        }
    }
    ranking.ranked.sort_by(|a, b| {
        key.score(a.hc.correlation)
            .partial_cmp(&key.score(b.hc.correlation))
            .unwrap_or(Ordering::Equal)
            .then_with(|| a.label.cmp(&b.label))
    });
    ranking.constant.sort();
    Ok(ranking)
}
