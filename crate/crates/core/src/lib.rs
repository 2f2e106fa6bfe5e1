//! Harmonic analysis of sampled periodic signals through closed-form
//! circulant operators.
//!
//! Every transform in this crate is a single multiplication by a circulant
//! matrix, carried out as an `O(N log N)` circular convolution for any
//! length `N`:
//!
//! * [`operators`]: spectral reshaping `M(λ, r, ψ)`, analytic extension
//!   `MA(r, ψ)` and harmonic conjugation ([`operators::tilde`]).
//! * [`analytic`]: AFC and row-coefficient extraction, analytic signals,
//!   continuation to concentric circles, wave-function reinstatement.
//! * [`conformal`]: iterative Riemann mapping onto Jordan domains.
//! * [`hcorr`]: harmonic covariation, correlation and ranking.
//! * [`cli`]: the `harmonia` command line.
//!
//! ```
//! use harmonia::{operators::tilde, RealSignal};
//!
//! let u = RealSignal::from_fn(9, |t| (2.0 * t).cos()).unwrap();
//! let v = tilde(&u);
//! let expect = RealSignal::from_fn(9, |t| (2.0 * t).sin()).unwrap();
//! assert!(v.iter().zip(expect.iter()).all(|(a, b)| (a - b).abs() < 1e-12));
//! ```

pub mod analytic;
pub mod cli;
pub mod conformal;
pub mod error;
pub mod hcorr;
pub mod operators;
pub mod signal;
pub mod spectral;

pub use error::{Error, Result};
pub use num_complex::Complex64;
pub use signal::{ComplexSignal, RealSignal};
