//! Circular convolution at prime and power-of-two lengths.
//!
//! ```text
//! cargo run --release --example fast_convolution
//! ```

use std::time::Instant;

use harmonia::spectral::{circular_convolve, circular_convolve_direct};
use harmonia::Complex64;

fn signal(n: usize, seed: f64) -> Vec<Complex64> {
    (0..n)
        .map(|j| {
            let x = (j as f64 + seed) * 0.618_033_988_75;
            Complex64::new((7.0 * x).sin(), (3.0 * x).cos())
        })
        .collect()
}

fn main() -> harmonia::Result<()> {
    let (a, b) = (signal(97, 0.0), signal(97, 1.0));
    let fast = circular_convolve(&a, &b)?;
    let direct = circular_convolve_direct(&a, &b)?;
    let err = fast.iter().zip(&direct).map(|(x, y)| (x - y).norm()).fold(0.0, f64::max);
    println!("N = 97: max |fast - direct| = {err:.2e}");

    for n in [8192, 9973] {
        let (a, b) = (signal(n, 0.0), signal(n, 2.0));
        let start = Instant::now();
        let out = circular_convolve(&a, &b)?;
        println!("N = {n}: {:?} (out[0] = {:.6})", start.elapsed(), out[0]);
    }
    Ok(())
}
