//! Principal-branch complex log-gamma.

use crate::error::{Error, Result};
use num_complex::Complex64;

// Lanczos coefficients, g = 7, n = 9 (GSL / Godfrey table).
const LANCZOS_G: f64 = 7.0;
const LANCZOS: [f64; 9] = [
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
];

fn near_nonpositive_integer(z: Complex64) -> bool {
    z.im.abs() < 1e-13 && z.re <= 0.5 && (z.re - z.re.round()).abs() < 1e-13
}

/// log Gamma(z), principal branch up to multiples of 2 pi i for Re z < 1/2.
///
/// Lanczos rational approximation for Re z >= 1/2, reflection otherwise.
/// Relative accuracy is ~1e-13 or better away from the poles.
pub fn log_gamma(z: Complex64) -> Result<Complex64> {
    if !z.re.is_finite() || !z.im.is_finite() {
        return Err(Error::domain("log_gamma: non-finite argument"));
    }
    if near_nonpositive_integer(z) {
        return Err(Error::pole(format!("log_gamma: pole at z = {z}")));
    }
    if z.re < 0.5 {
        // Reflection: log Gamma(z) = log pi - log sin(pi z) - log Gamma(1 - z).
        // log sin is computed in a form stable for large |Im z|.
        let lg1 = log_gamma(Complex64::new(1.0, 0.0) - z)?;
        let pi = std::f64::consts::PI;
        let log_sin = if z.im >= 0.0 {
            // sin(pi z) = -exp(-i pi z) (1 - exp(2 i pi z)) / (2i)
            let w = Complex64::new(0.0, 2.0 * pi) * z;
            -Complex64::new(0.0, pi) * z + (Complex64::new(1.0, 0.0) - w.exp()).ln()
                - Complex64::new(0.0, -1.0).ln()
                + Complex64::new(0.0, pi)
        } else {
            let w = Complex64::new(0.0, -2.0 * pi) * z;
            Complex64::new(0.0, pi) * z + (Complex64::new(1.0, 0.0) - w.exp()).ln()
                - Complex64::new(0.0, 1.0).ln()
        };
        return Ok(Complex64::new(pi.ln(), 0.0) - log_sin - lg1);
    }
    let zm1 = z - 1.0;
    let mut acc = Complex64::new(LANCZOS[0], 0.0);
    for (i, &c) in LANCZOS.iter().enumerate().skip(1) {
        acc += c / (zm1 + i as f64);
    }
    let t = zm1 + LANCZOS_G + 0.5;
    let half_log_2pi = 0.5 * (2.0 * std::f64::consts::PI).ln();
    Ok(half_log_2pi + (zm1 + 0.5) * t.ln() - t + acc.ln())
}

/// |Gamma(z)|.
pub fn gamma_abs(z: Complex64) -> Result<f64> {
    Ok(log_gamma(z)?.re.exp())
}

/// Gamma(x) for real x (not a non-positive integer).
pub fn real_gamma(x: f64) -> Result<f64> {
    if x > 0.0 {
        return Ok(log_gamma(Complex64::new(x, 0.0))?.re.exp());
    }
    let lg = log_gamma(Complex64::new(x, 0.0))?;
    // sign of Gamma on (-n-1, -n) alternates
    let s = if (x.floor() as i64).rem_euclid(2) == 0 { 1.0 } else { -1.0 };
    Ok(s * lg.re.exp())
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Stirling series with Bernoulli terms, shifted upward by the
    /// recurrence until |z| is large. Independent of the Lanczos path.
    fn log_gamma_stirling(mut z: Complex64) -> Complex64 {
        let mut shift = Complex64::new(0.0, 0.0);
        while z.norm() < 25.0 {
            shift -= z.ln();
            z += 1.0;
        }
        let b = [
            1.0 / 12.0,
            -1.0 / 360.0,
            1.0 / 1260.0,
            -1.0 / 1680.0,
            1.0 / 1188.0,
            -691.0 / 360360.0,
            7.0 / 1092.0,
        ];
        let half_log_2pi = 0.5 * (2.0 * std::f64::consts::PI).ln();
        let mut s = (z - 0.5) * z.ln() - z + half_log_2pi;
        let z2 = z * z;
        let mut zp = z;
        for bk in b {
            s += bk / zp;
            zp *= z2;
        }
        s + shift
    }

    #[test]
    fn half_integer_value() {
        let v = log_gamma(Complex64::new(0.5, 0.0)).unwrap();
        assert!((v.re - std::f64::consts::PI.sqrt().ln()).abs() < 1e-14);
        assert!(v.im.abs() < 1e-14);
    }

    #[test]
    fn abs_gamma_one_plus_i() {
        // |Gamma(1+ib)|^2 = pi b / sinh(pi b)
        let b = 1.0;
        let expected = (std::f64::consts::PI * b / (std::f64::consts::PI * b).sinh()).sqrt();
        let v = gamma_abs(Complex64::new(1.0, b)).unwrap();
        assert!((v - expected).abs() < 1e-13);
    }

    #[test]
    fn against_stirling_oracle() {
        for &z in &[
            Complex64::new(0.5, 3.0),
            Complex64::new(3.2, -1.7),
            Complex64::new(-2.3, 0.4),
            Complex64::new(0.1, 0.0),
            Complex64::new(-0.7, -2.0),
        ] {
            let a = log_gamma(z).unwrap();
            let b = log_gamma_stirling(z);
            // compare exp to be insensitive to 2 pi i branch differences
            let d = (a.exp() - b.exp()).norm() / b.exp().norm();
            assert!(d < 1e-12, "z={z} rel={d:.3e}");
        }
    }

    #[test]
    fn pole_detection() {
        assert!(log_gamma(Complex64::new(0.0, 0.0)).is_err());
        assert!(log_gamma(Complex64::new(-3.0, 0.0)).is_err());
        assert!(log_gamma(Complex64::new(-3.0000001, 0.0)).is_ok());
    }

    #[test]
    fn real_gamma_signs() {
        // Gamma(-0.5) = -2 sqrt(pi)
        let v = real_gamma(-0.5).unwrap();
        assert!((v + 2.0 * std::f64::consts::PI.sqrt()).abs() < 1e-12);
        let v = real_gamma(-1.5).unwrap();
        assert!((v - 4.0 / 3.0 * std::f64::consts::PI.sqrt()).abs() < 1e-12);
    }
}
