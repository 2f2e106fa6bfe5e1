//! Recover a wave function from its probability density on the circle.

use harmonia::analytic::reinstate_wave;
use harmonia::{Complex64, RealSignal};

fn main() -> harmonia::Result<()> {
    let n = 64;
    let f = |t: f64| 1.0 + 0.5 * Complex64::from_polar(1.0, t);
    let density = RealSignal::from_fn(n, |t| f(t).norm_sqr())?;
    let psi = reinstate_wave(&density)?;

    for j in (0..n).step_by(8) {
        let t = std::f64::consts::TAU * j as f64 / n as f64;
        println!("theta = {t:.4}: psi = {:.12}, expected {:.12}", psi[j], f(t));
    }

    let modulus = psi.iter().zip(density.iter()).map(|(z, d)| (z.norm_sqr() - d).abs()).fold(0.0, f64::max);
    println!("max ||psi|^2 - d| = {modulus:.1e}");
    Ok(())
}
