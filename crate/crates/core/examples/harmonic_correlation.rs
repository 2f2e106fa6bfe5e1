//! Rank phase-shifted series against a reference by harmonic correlation.

use std::f64::consts::{FRAC_PI_2, PI};

use harmonia::hcorr::{rank, RankKey};
use harmonia::{Complex64, RealSignal};

fn main() -> harmonia::Result<()> {
    let n = 96;
    let w = |z: Complex64| z + 0.4 * z * z - 0.2 * z.powi(5);
    let series = |phi: f64| {
        let rot = Complex64::from_polar(1.0, phi);
        RealSignal::from_fn(n, |t| 100.0 + 10.0 * (rot * w(Complex64::from_polar(1.0, t))).re)
    };

    let reference = series(0.0)?;
    let mut candidates = Vec::new();
    for (label, phi) in [("lag 0.2", 0.2), ("quarter", FRAC_PI_2), ("half", PI), ("lag 2.5", 2.5)] {
        candidates.push((label.to_string(), series(phi)?));
    }
    candidates.push(("flat".to_string(), RealSignal::new(vec![42.0; n])?));

    let ranking = rank(&reference, &candidates, RankKey::InPhase)?;
    println!("{:10} {:>24} {:>10}", "label", "HC", "pearson");
    for e in &ranking.ranked {
        println!("{:10} {:>24.6} {:>10.6}", e.label, e.hc.correlation, e.pearson);
    }
    for label in &ranking.constant {
        println!("{label}: constant, not ranked");
    }
    Ok(())
}
