//! Continue boundary data of W(z) = 1/(1 - z/2) into the disk.

use harmonia::analytic::extend;
use harmonia::{Complex64, RealSignal};

fn main() -> harmonia::Result<()> {
    let n = 128;
    let w = |z: Complex64| 1.0 / (1.0 - 0.5 * z);
    let u = RealSignal::from_fn(n, |t| w(Complex64::from_polar(1.0, t)).re)?;

    for r in [0.25, 0.5, 0.6, 0.9] {
        let inside = extend(&u, r, 0.0)?;
        let err = inside
            .iter()
            .enumerate()
            .map(|(j, z)| {
                let theta = std::f64::consts::TAU * j as f64 / n as f64;
                (z - (w(Complex64::from_polar(r, theta)) - 1.0)).norm()
            })
            .fold(0.0, f64::max);
        println!("r = {r:4}: max error against W(re^(it)) - W(0) = {err:.2e}");
    }
    Ok(())
}
