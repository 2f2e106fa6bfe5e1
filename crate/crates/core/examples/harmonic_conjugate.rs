//! Harmonic conjugates on the circle: cos k -> sin k, sin k -> -cos k.

use harmonia::operators::{harmonic_count, tilde};
use harmonia::RealSignal;

fn main() -> harmonia::Result<()> {
    let n = 16;
    for k in 1..=harmonic_count(n) {
        let kf = k as f64;
        let c = RealSignal::from_fn(n, |t| (kf * t).cos())?;
        let s = RealSignal::from_fn(n, |t| (kf * t).sin())?;
        let err = tilde(&c).iter().zip(s.iter()).map(|(a, b)| (a - b).abs()).fold(0.0, f64::max);
        println!("k = {k}: max |tilde(cos) - sin| = {err:.1e}");
    }

    // Odd length, so there is no Nyquist term to lose.
    let u = RealSignal::from_fn(17, |t| (t.cos() * 2.0).exp())?;
    let twice = tilde(&tilde(&u));
    let mean = u.mean();
    let err = twice.iter().zip(u.iter()).map(|(a, b)| (a + b - mean).abs()).fold(0.0, f64::max);
    println!("tilde(tilde(u)) = -(u - mean) up to {err:.1e}");
    Ok(())
}
