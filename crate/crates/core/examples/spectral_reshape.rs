//! Reshape the spectrum of a signal with a single circulant operator and
//! compare the result with the predicted Fourier coefficients.

use harmonia::analytic::afc;
use harmonia::operators::{build_general, predict_spectrum, SpectralProfile};
use harmonia::RealSignal;

fn main() -> harmonia::Result<()> {
    let n = 31;
    let u = RealSignal::from_fn(n, |t| 1.5 + t.cos() + 0.5 * (3.0 * t).sin() - 0.25 * (9.0 * t).cos())?;

    // Band-pass around k = 3, damped by r and phase-shifted by psi.
    let profile = SpectralProfile::gaussian(n, 3.0, 1.5, 0.9, 0.3)?;
    let out = build_general(n, &profile)?.apply(&u)?;

    let predicted = predict_spectrum(&afc(&u), &profile)?;
    let measured = afc(&out.re());
    println!(" k   predicted a_k   measured a_k   predicted b_k   measured b_k");
    for k in 0..=predicted.k_max() {
        println!(
            "{k:2} {:15.10} {:14.10} {:15.10} {:14.10}",
            predicted.a[k], measured.a[k], predicted.b[k], measured.b[k]
        );
    }
    Ok(())
}
