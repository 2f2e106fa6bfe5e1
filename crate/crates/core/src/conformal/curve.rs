use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::signal::MIN_LEN;
use crate::spectral::{self, signed_freq};

/// Evaluator returning `(γ(τ), dγ/dτ)`.
pub type CurveFn = dyn Fn(f64) -> (Complex64, Complex64) + Send + Sync;

/// A closed boundary curve, `2π`-periodic in its own parameter and
/// positively oriented. Simplicity is the caller's obligation.
#[derive(Clone)]
pub enum BoundaryCurve {
    Sampled(SampledCurve),
    Parametric(Arc<CurveFn>),
}

impl fmt::Debug for BoundaryCurve {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BoundaryCurve::Sampled(s) => f.debug_tuple("Sampled").field(&s.len()).finish(),
            BoundaryCurve::Parametric(_) => f.write_str("Parametric(..)"),
        }
    }
}

impl BoundaryCurve {
    pub fn parametric(f: impl Fn(f64) -> (Complex64, Complex64) + Send + Sync + 'static) -> Self {
        BoundaryCurve::Parametric(Arc::new(f))
    }

    /// Samples `γ(2πm/M)`, interpolated band-limited between the samples.
    pub fn sampled(points: Vec<Complex64>) -> Result<Self> {
        Ok(BoundaryCurve::Sampled(SampledCurve::new(points)?))
    }

    /// Boundary `τ ↦ f(e^{iτ})` of a map given with its derivative.
    pub fn from_disk_map(
        f: impl Fn(Complex64) -> Complex64 + Send + Sync + 'static,
        df: impl Fn(Complex64) -> Complex64 + Send + Sync + 'static,
    ) -> Self {
        BoundaryCurve::parametric(move |tau| {
            let z = Complex64::from_polar(1.0, tau);
            (f(z), Complex64::i() * z * df(z))
        })
    }

    pub fn eval(&self, tau: f64) -> (Complex64, Complex64) {
        match self {
            BoundaryCurve::Sampled(s) => s.eval(tau),
            BoundaryCurve::Parametric(f) => f(tau),
        }
    }

    /// Pointwise image under `z ↦ c·z`.
    pub fn scaled(&self, c: Complex64) -> Self {
        let inner = self.clone();
        BoundaryCurve::parametric(move |tau| {
            let (g, dg) = inner.eval(tau);
            (c * g, c * dg)
        })
    }
}

/// Trigonometric interpolant through `M` equispaced samples.
#[derive(Debug, Clone)]
pub struct SampledCurve {
    /// `(frequency, coefficient)`; an even-`M` Nyquist bin is split evenly
    /// between `±M/2` so the interpolant is real-symmetric in its spectrum.
    terms: Vec<(i64, Complex64)>,
    len: usize,
}

impl SampledCurve {
    pub fn new(points: Vec<Complex64>) -> Result<Self> {
        let m = points.len();
        if m < MIN_LEN {
            return Err(Error::contract(format!("curve needs at least {MIN_LEN} samples, got {m}")));
        }
        let spec = spectral::dft(&points)?;
        let scale = 1.0 / m as f64;
        let mut terms = Vec::with_capacity(m + 1);
        for (k, c) in spec.into_iter().enumerate() {
            let c = c * scale;
            let f = signed_freq(k, m);
            if m.is_multiple_of(2) && 2 * k == m {
                terms.push((f, c * 0.5));
                terms.push((-f, c * 0.5));
            } else {
                terms.push((f, c));
            }
        }
        Ok(SampledCurve { terms, len: m })
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn eval(&self, tau: f64) -> (Complex64, Complex64) {
        let zero = Complex64::new(0.0, 0.0);
        let (mut g, mut dg) = (zero, zero);
        for &(k, c) in &self.terms {
            let term = c * Complex64::from_polar(1.0, k as f64 * tau);
            g += term;
            dg += term * Complex64::new(0.0, k as f64);
        }
        (g, dg)
    }
}

/// Built-in boundary shapes, written `name:key=val,...`.
///
/// * `circle[:r=R,cx=X,cy=Y]`
/// * `ellipse:a=A,b=B`
/// * `perturbed:eps=E,k=K` for `e^{iτ} + E·e^{iKτ}`
/// * `distorted:delta=D` for the unit circle traced as `e^{i(τ + D sin τ)}`
#[derive(Debug, Clone, PartialEq)]
pub enum Shape {
    Circle { r: f64, center: Complex64 },
    Ellipse { a: f64, b: f64 },
    Perturbed { eps: f64, k: u32 },
    Distorted { delta: f64 },
}

impl Shape {
    pub fn curve(&self) -> BoundaryCurve {
        match *self {
            Shape::Circle { r, center } => BoundaryCurve::parametric(move |tau| {
                let e = Complex64::from_polar(r, tau);
                (center + e, Complex64::i() * e)
            }),
            Shape::Ellipse { a, b } => BoundaryCurve::parametric(move |tau| {
                let (s, c) = tau.sin_cos();
                (Complex64::new(a * c, b * s), Complex64::new(-a * s, b * c))
            }),
            Shape::Perturbed { eps, k } => BoundaryCurve::parametric(move |tau| {
                let e1 = Complex64::from_polar(1.0, tau);
                let ek = Complex64::from_polar(eps, k as f64 * tau);
                (e1 + ek, Complex64::i() * (e1 + ek * k as f64))
            }),
            Shape::Distorted { delta } => BoundaryCurve::parametric(move |tau| {
                let e = Complex64::from_polar(1.0, tau + delta * tau.sin());
                (e, Complex64::i() * e * (1.0 + delta * tau.cos()))
            }),
        }
    }
}

fn parse_params(body: &str) -> Result<Vec<(String, f64)>> {
    body.split(',')
        .filter(|s| !s.trim().is_empty())
        .map(|kv| {
            let (k, v) = kv
                .split_once('=')
                .ok_or_else(|| Error::contract(format!("shape parameter '{kv}' is not key=value")))?;
            let v: f64 =
                v.trim().parse().map_err(|_| Error::contract(format!("shape parameter '{kv}' is not a number")))?;
            if !v.is_finite() {
                return Err(Error::contract(format!("shape parameter '{kv}' is not finite")));
            }
            Ok((k.trim().to_string(), v))
        })
        .collect()
}

impl FromStr for Shape {
    type Err = Error;

    fn from_str(spec: &str) -> Result<Self> {
        let (name, body) = spec.split_once(':').unwrap_or((spec, ""));
        let params = parse_params(body)?;
        let allowed: &[&str] = match name.trim() {
            "circle" => &["r", "cx", "cy"],
            "ellipse" => &["a", "b"],
            "perturbed" => &["eps", "k"],
            "distorted" => &["delta"],
            other => return Err(Error::contract(format!("unknown shape '{other}'"))),
        };
        if let Some((k, _)) = params.iter().find(|(k, _)| !allowed.contains(&k.as_str())) {
            return Err(Error::contract(format!("unknown parameter '{k}' for shape '{name}'")));
        }
        let get = |key: &str, default: Option<f64>| -> Result<f64> {
            params
                .iter()
                .rev()
                .find(|(k, _)| k == key)
                .map(|(_, v)| *v)
                .or(default)
                .ok_or_else(|| Error::contract(format!("shape '{name}' needs parameter '{key}'")))
        };
        let shape = match name.trim() {
            "circle" => {
                let r = get("r", Some(1.0))?;
                if r <= 0.0 {
                    return Err(Error::contract("circle radius must be positive"));
                }
                Shape::Circle { r, center: Complex64::new(get("cx", Some(0.0))?, get("cy", Some(0.0))?) }
            }
            "ellipse" => {
                let (a, b) = (get("a", None)?, get("b", None)?);
                if a <= 0.0 || b <= 0.0 {
                    return Err(Error::contract("ellipse semi-axes must be positive"));
                }
                Shape::Ellipse { a, b }
            }
            "perturbed" => {
                let eps = get("eps", None)?;
                let k = get("k", None)?;
                if k.fract() != 0.0 || k < 2.0 {
                    return Err(Error::contract("perturbed: k must be an integer >= 2"));
                }
                if eps.abs() * k >= 1.0 {
                    return Err(Error::contract("perturbed: |eps|·k must be < 1 for a simple curve"));
                }
                Shape::Perturbed { eps, k: k as u32 }
            }
            _ => {
                let delta = get("delta", None)?;
                if delta.abs() >= 1.0 {
                    return Err(Error::contract("distorted: |delta| must be < 1"));
                }
                Shape::Distorted { delta }
            }
        };
        Ok(shape)
    }
}
