//! Approximate polynomial roots for human-readable output. Exactness
//! claims are made only with rational arithmetic elsewhere; these floats
//! exist to label the characteristic polynomial, nothing more.

use num_complex::Complex64;
use num_traits::ToPrimitive;
use sl2fd_core::exactpoly::Poly;

/// Durand-Kerner iteration; coefficients lowest degree first. Fixed seed
/// and iteration order keep the result deterministic.
pub fn roots(coeffs: &[f64]) -> Vec<Complex64> {
    let n = match coeffs.len().checked_sub(1) {
        Some(0) | None => return Vec::new(),
        Some(n) => n,
    };
    let lead = coeffs[n];
    let monic: Vec<f64> = coeffs.iter().map(|c| c / lead).collect();
    let eval = |z: Complex64| {
        monic
            .iter()
            .rev()
            .fold(Complex64::new(0.0, 0.0), |acc, &c| acc * z + c)
    };

    let seed = Complex64::new(0.4, 0.9);
    let mut z: Vec<Complex64> = (0..n).map(|i| seed.powu(i as u32 + 1)).collect();
    for _ in 0..500 {
        let mut moved = 0.0f64;
        for i in 0..n {
            let mut den = Complex64::new(1.0, 0.0);
            for j in 0..n {
                if j != i {
                    den *= z[i] - z[j];
                }
            }
            if den.norm() == 0.0 {
                continue;
            }
            let step = eval(z[i]) / den;
            z[i] -= step;
            moved = moved.max(step.norm());
        }
        if moved < 1e-14 {
            break;
        }
    }
    z.sort_by(|a, b| {
        a.re.partial_cmp(&b.re)
            .unwrap()
            .then(a.im.partial_cmp(&b.im).unwrap())
    });
    z
}

/// Roots of an exact-coefficient polynomial as (re, im) pairs, rounded to
/// 12 decimals so repeated runs and near-clean rationals print stably.
pub fn poly_roots(p: &Poly) -> Vec<(f64, f64)> {
    let coeffs: Vec<f64> = p
        .coeffs()
        .iter()
        .map(|r| r.to_f64().expect("finite coefficient"))
        .collect();
    roots(&coeffs)
        .into_iter()
        .map(|z| (round12(z.re), round12(z.im)))
        .collect()
}

fn round12(v: f64) -> f64 {
    let r = (v * 1e12).round() / 1e12;
    // normalize -0.0 so JSON output has one spelling of zero
    if r == 0.0 {
        0.0
    } else {
        r
    }
}
