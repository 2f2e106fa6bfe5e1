//! Sampled signals on the uniform circle grid `t_j = 2πj/N`.

use std::f64::consts::TAU;
use std::ops::Deref;

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Smallest signal length accepted by the operators.
pub const MIN_LEN: usize = 3;

/// Grid angle of sample `j` on an `n`-point circle.
#[inline]
pub fn grid_angle(j: usize, n: usize) -> f64 {
    TAU * j as f64 / n as f64
}

/// Real samples `U_0..U_{N-1}`; `N >= 3`, all finite.
#[derive(Debug, Clone, PartialEq)]
pub struct RealSignal(Vec<f64>);

/// Complex samples `W_0..W_{N-1}`; `N >= 3`, all finite.
#[derive(Debug, Clone, PartialEq)]
pub struct ComplexSignal(Vec<Complex64>);

fn check_len(n: usize) -> Result<()> {
    if n < MIN_LEN {
        return Err(Error::contract(format!("signal length {n} is below the minimum of {MIN_LEN}")));
    }
    Ok(())
}

impl RealSignal {
    pub fn new(samples: Vec<f64>) -> Result<Self> {
        check_len(samples.len())?;
        if let Some(i) = samples.iter().position(|x| !x.is_finite()) {
            return Err(Error::contract(format!("sample {i} is not finite")));
        }
        Ok(RealSignal(samples))
    }

    /// Samples `f(t_j)` on the `n`-point grid.
    pub fn from_fn(n: usize, f: impl Fn(f64) -> f64) -> Result<Self> {
        Self::new((0..n).map(|j| f(grid_angle(j, n))).collect())
    }

    pub(crate) fn from_vec_unchecked(samples: Vec<f64>) -> Self {
        debug_assert!(samples.len() >= MIN_LEN);
        RealSignal(samples)
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<f64> {
        self.0
    }

    pub fn mean(&self) -> f64 {
        self.0.iter().sum::<f64>() / self.0.len() as f64
    }

    pub fn to_complex(&self) -> Vec<Complex64> {
        self.0.iter().map(|&x| Complex64::new(x, 0.0)).collect()
    }
}

impl Deref for RealSignal {
    type Target = [f64];

    fn deref(&self) -> &[f64] {
        &self.0
    }
}

impl TryFrom<Vec<f64>> for RealSignal {
    type Error = Error;

    fn try_from(v: Vec<f64>) -> Result<Self> {
        RealSignal::new(v)
    }
}

impl ComplexSignal {
    pub fn new(samples: Vec<Complex64>) -> Result<Self> {
        check_len(samples.len())?;
        if let Some(i) = samples.iter().position(|z| !z.is_finite()) {
            return Err(Error::contract(format!("sample {i} is not finite")));
        }
        Ok(ComplexSignal(samples))
    }

    pub fn from_fn(n: usize, f: impl Fn(f64) -> Complex64) -> Result<Self> {
        Self::new((0..n).map(|j| f(grid_angle(j, n))).collect())
    }

    pub(crate) fn from_vec_unchecked(samples: Vec<Complex64>) -> Self {
        debug_assert!(samples.len() >= MIN_LEN);
        ComplexSignal(samples)
    }

    pub fn as_slice(&self) -> &[Complex64] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<Complex64> {
        self.0
    }

    pub fn re(&self) -> RealSignal {
        RealSignal(self.0.iter().map(|z| z.re).collect())
    }

    pub fn im(&self) -> RealSignal {
        RealSignal(self.0.iter().map(|z| z.im).collect())
    }
}

impl Deref for ComplexSignal {
    type Target = [Complex64];

    fn deref(&self) -> &[Complex64] {
        &self.0
    }
}

impl TryFrom<Vec<Complex64>> for ComplexSignal {
    type Error = Error;

    fn try_from(v: Vec<Complex64>) -> Result<Self> {
        ComplexSignal::new(v)
    }
}
