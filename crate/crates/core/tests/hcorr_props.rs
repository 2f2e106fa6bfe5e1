mod common;

use std::f64::consts::PI;

use common::*;
use harmonia::hcorr::{hcorr, hcov, pearson, rank, tilde_scalar_mul, RankKey};
use harmonia::operators::tilde;
use harmonia::{Complex64, Error, RealSignal};
use rand::Rng;

fn sig(n: usize, f: impl Fn(f64) -> f64) -> RealSignal {
    RealSignal::from_fn(n, f).unwrap()
}

fn scalar(r: &mut impl Rng) -> Complex64 {
    Complex64::new(r.gen_range(-2.0..2.0), r.gen_range(-2.0..2.0))
}

fn add(u: &RealSignal, v: &RealSignal) -> RealSignal {
    RealSignal::new(u.iter().zip(v.iter()).map(|(a, b)| a + b).collect()).unwrap()
}

/// `Re(W·e^{iφ})` on the circle for a polynomial `W`.
fn rotated(c: &[Complex64], n: usize, phi: f64) -> RealSignal {
    let rot = Complex64::from_polar(1.0, phi);
    RealSignal::from_fn(n, |t| (rot * eval_poly(c, Complex64::from_polar(1.0, t))).re).unwrap()
}

#[test]
fn covariation_examples() {
    for n in [5usize, 8, 64] {
        let (c, s) = (sig(n, f64::cos), sig(n, f64::sin));
        assert!((hcov(&c, &c).unwrap() - 1.0).norm() < 1e-13);
        assert!((hcov(&c, &s).unwrap() + Complex64::i()).norm() < 1e-13);
        assert!(hcov(&c, &sig(n, |_| 4.0)).unwrap().norm() < 1e-13);
    }
    assert!(matches!(hcov(&sig(5, f64::cos), &sig(6, f64::cos)), Err(Error::Contract(_))));
    assert!(matches!(hcorr(&sig(8, f64::cos), &sig(8, |_| 1.0)), Err(Error::Domain(_))));
}

#[test]
fn scalar_action_examples() {
    let n = 16;
    let u = band_limited(&mut rng(1), n, 7);
    assert_eq!(tilde_scalar_mul(Complex64::new(1.0, 0.0), &u), u);
    for k in 1..8 {
        let c = sig(n, |t| (k as f64 * t).cos());
        let s: Vec<f64> = (0..n).map(|j| (k as f64 * theta(j, n)).sin()).collect();
        assert!(max_diff(&tilde_scalar_mul(Complex64::i(), &c), &s) < 1e-12);
    }
    let twice = tilde_scalar_mul(Complex64::i(), &tilde_scalar_mul(Complex64::i(), &u));
    let neg: Vec<f64> = u.iter().map(|x| -x).collect();
    assert!(max_diff(&twice, &neg) < 1e-12);
}

#[test]
fn rotation_values() {
    let mut r = rng(12);
    for n in [64usize, 65] {
        for _ in 0..20 {
            let w = random_analytic(&mut r, 12);
            let base = rotated(&w, n, 0.0);
            for (phi, expect) in [
                (0.0, Complex64::new(1.0, 0.0)),
                (PI / 2.0, Complex64::i()),
                (PI, Complex64::new(-1.0, 0.0)),
                (1.5 * PI, -Complex64::i()),
            ] {
                let hc = hcorr(&base, &rotated(&w, n, phi)).unwrap().correlation;
                assert!((hc - expect).norm() < 1e-9, "phi={phi} hc={hc}");
            }
            let phi = r.gen_range(-PI..PI);
            let hc = hcorr(&base, &rotated(&w, n, phi)).unwrap().correlation;
            assert!((hc - Complex64::from_polar(1.0, phi)).norm() < 1e-9);
        }
    }
}

#[test]
fn tilde_algebra() {
    let mut r = rng(33);
    for trial in 0..200 {
        let n = [16usize, 31, 64][trial % 3];
        let deg = (n - 1) / 2;
        let (u, v, x, y) = (
            band_limited(&mut r, n, deg),
            band_limited(&mut r, n, deg),
            band_limited(&mut r, n, deg),
            band_limited(&mut r, n, deg),
        );
        let (lambda, mu) = (scalar(&mut r), scalar(&mut r));

        // (1)
        let lhs = tilde_scalar_mul(lambda, &u);
        let tu = tilde(&u);
        let rhs: Vec<f64> = u.iter().zip(tu.iter()).map(|(a, b)| lambda.re * a + lambda.im * b).collect();
        assert!(max_diff(&lhs, &rhs) < 1e-9);

        // (3) in the scalar and in the left signal argument
        let sum = tilde_scalar_mul(lambda + mu, &u);
        let parts = add(&tilde_scalar_mul(lambda, &u), &tilde_scalar_mul(mu, &u));
        assert!(max_diff(&sum, &parts) < 1e-9);
        let left = hcov(&add(&u, &x), &v).unwrap();
        assert!((left - hcov(&u, &v).unwrap() - hcov(&x, &v).unwrap()).norm() < 1e-9);

        // (4)
        assert!((hcov(&u, &v).unwrap() - hcov(&v, &u).unwrap().conj()).norm() < 1e-9);

        // (5)
        let mix = add(&tilde_scalar_mul(lambda, &x), &tilde_scalar_mul(mu, &y));
        let expect = lambda.conj() * hcov(&u, &x).unwrap() + mu.conj() * hcov(&u, &y).unwrap();
        assert!((hcov(&u, &mix).unwrap() - expect).norm() < 1e-9);

        // (2) in assertable form: a left covariation scalar equals the
        // conjugate of the swapped one, so both act identically on a signal.
        let left = tilde_scalar_mul(hcov(&u, &v).unwrap(), &x);
        let right = tilde_scalar_mul(hcov(&v, &u).unwrap().conj(), &x);
        assert!(max_diff(&left, &right) < 1e-9);
    }
}

#[test]
fn sine_cosine_illustration() {
    for n in [16usize, 33] {
        let (s, c) = (sig(n, f64::sin), sig(n, f64::cos));
        let sc = hcov(&s, &c).unwrap();
        let cs = hcov(&c, &s).unwrap();
        assert!((sc - Complex64::i()).norm() < 1e-9);
        assert!((cs + Complex64::i()).norm() < 1e-9);
        // [sin~cos]~sin and sin~[cos~sin], the right action being conj(λ)~u.
        let lhs = tilde_scalar_mul(sc, &s);
        let rhs = tilde_scalar_mul(cs.conj(), &s);
        assert!(max_diff(&lhs, &rhs) < 1e-9);
        let minus_cos: Vec<f64> = c.iter().map(|x| -x).collect();
        assert!(max_diff(&lhs, &minus_cos) < 1e-9);
    }
}

#[test]
fn correlation_bounds_and_invariances() {
    let mut r = rng(8);
    for _ in 0..100 {
        let n = r.gen_range(8..90);
        let (u, v) = (random_real(&mut r, n), random_real(&mut r, n));
        let (u, v) = (RealSignal::new(u).unwrap(), RealSignal::new(v).unwrap());
        let hc = hcorr(&u, &v).unwrap();
        assert!(hc.correlation.norm() <= 1.0 + 1e-9);
        assert_eq!(hc.n, n);
        assert!((hcorr(&u, &u).unwrap().correlation - 1.0).norm() < 1e-10);

        let alpha = r.gen_range(0.1..10.0);
        let beta = r.gen_range(-5.0..5.0);
        let affine = RealSignal::new(u.iter().map(|x| alpha * x + beta).collect()).unwrap();
        assert!((hcorr(&affine, &v).unwrap().correlation - hc.correlation).norm() < 1e-10);
        let flipped = RealSignal::new(u.iter().map(|x| -x + beta).collect()).unwrap();
        assert!((hcorr(&flipped, &v).unwrap().correlation + hc.correlation).norm() < 1e-10);
    }
}

#[test]
fn pearson_baseline() {
    let u = [1.0, 2.0, 3.0, 4.0];
    assert!((pearson(&u, &[2.0, 4.0, 6.0, 8.5]).unwrap() - 0.9983814394570298).abs() < 1e-12);
    assert!((pearson(&u, &[4.0, 3.0, 2.0, 1.0]).unwrap() + 1.0).abs() < 1e-15);
    assert_eq!(pearson(&u, &[1.0; 4]), None);
}

#[test]
fn ranking() {
    let n = 128;
    let w = random_analytic(&mut rng(5), 10);
    let reference = rotated(&w, n, 0.0);
    let negated = RealSignal::new(reference.iter().map(|x| 7.0 - x).collect()).unwrap();
    let mut candidates = vec![
        ("self".to_string(), reference.clone()),
        ("negated".to_string(), negated),
        ("flat".to_string(), sig(n, |_| 2.0)),
    ];
    let lags = [0.3, 0.9, 1.7, 2.5, 3.0];
    for (i, phi) in lags.iter().enumerate().rev() {
        candidates.push((format!("lag{i}"), rotated(&w, n, *phi)));
    }
    let ranking = rank(&reference, &candidates, RankKey::InPhase).unwrap();
    let labels: Vec<&str> = ranking.ranked.iter().map(|e| e.label.as_str()).collect();
    assert_eq!(labels, ["self", "lag0", "lag1", "lag2", "lag3", "lag4", "negated"]);
    assert_eq!(ranking.constant, ["flat"]);
    assert!((ranking.ranked[0].hc.correlation - 1.0).norm() < 1e-10);
    assert!((ranking.ranked.last().unwrap().hc.correlation + 1.0).norm() < 1e-10);
    assert!((ranking.ranked[0].pearson - 1.0).abs() < 1e-12);

    let by_magnitude = rank(&reference, &candidates, RankKey::Magnitude).unwrap();
    assert!(by_magnitude.ranked.iter().all(|e| (e.hc.correlation.norm() - 1.0).abs() < 1e-9));
    assert_eq!(by_magnitude.constant, ["flat"]);
}
