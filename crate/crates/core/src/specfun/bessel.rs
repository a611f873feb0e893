//! Modified Bessel function I_nu for real order nu >= -1 and complex argument.

use crate::error::{Error, Result};
use crate::specfun::gamma::log_gamma;
use num_complex::Complex64;

/// Power series is used below this |z|; Taylor continuation of the Bessel
/// ODE along the ray above it. At the switch the series still carries
/// ~11 correct digits in the worst (purely oscillatory) direction.
pub(crate) const SERIES_RADIUS: f64 = 10.0;

/// I_nu(z) for nu >= -1, complex z.
pub fn bessel_i(nu: f64, z: Complex64) -> Result<Complex64> {
    if nu < -1.0 {
        return Err(Error::domain(format!("bessel_i: order {nu} < -1")));
    }
    if !z.re.is_finite() || !z.im.is_finite() {
        return Err(Error::domain("bessel_i: non-finite argument"));
    }
    if z.norm() == 0.0 {
        return Ok(match nu {
            0.0 => Complex64::new(1.0, 0.0),
            v if v > 0.0 => Complex64::new(0.0, 0.0),
            _ => Complex64::new(f64::INFINITY, 0.0),
        });
    }
    if z.norm() <= SERIES_RADIUS {
        Ok(series(nu, z).0)
    } else {
        Ok(continued(nu, z))
    }
}

/// Series evaluation returning (I_nu, d/dz I_nu).
pub(crate) fn series(nu: f64, z: Complex64) -> (Complex64, Complex64) {
    let half = z * 0.5;
    // t_0 = (z/2)^nu / Gamma(nu+1), via logs so nu in (-1, 0) works too
    let lg = log_gamma(Complex64::new(nu + 1.0, 0.0)).expect("nu > -1 so no pole");
    let t0 = (half.ln() * nu - lg).exp();
    let q = half * half;
    let mut term = t0;
    let mut sum = term;
    // derivative: d/dz sum t_k = sum t_k (nu + 2k) / z
    let mut dsum = term * nu / z;
    for k in 0..400 {
        let kf = k as f64;
        term = term * q / ((kf + 1.0) * (nu + kf + 1.0));
        sum += term;
        dsum += term * (nu + 2.0 * kf + 2.0) / z;
        if term.norm() < 1e-18 * sum.norm() + 1e-300 {
            break;
        }
    }
    (sum, dsum)
}

/// Taylor continuation of z^2 w'' + z w' - (z^2 + nu^2) w = 0 along the ray
/// from |z| = SERIES_RADIUS to z.
fn continued(nu: f64, z: Complex64) -> Complex64 {
    let dir = z / z.norm();
    let mut r = SERIES_RADIUS;
    let (mut w, mut dw) = series(nu, dir * r);
    let target = z.norm();
    while r < target {
        let step = (0.3 * r).min(target - r);
        let z0 = dir * r;
        let h = dir * step;
        let (nw, ndw) = taylor_step(nu, z0, w, dw, h);
        w = nw;
        dw = ndw;
        r += step;
    }
    w
}

/// One Taylor step of the modified Bessel ODE around z0, evaluated at z0 + h.
fn taylor_step(
    nu: f64,
    z0: Complex64,
    w: Complex64,
    dw: Complex64,
    h: Complex64,
) -> (Complex64, Complex64) {
    const ORDER: usize = 40;
    let mut c = [Complex64::new(0.0, 0.0); ORDER + 1];
    c[0] = w;
    c[1] = dw;
    let z0sq = z0 * z0;
    let nu2 = nu * nu;
    for m in 0..ORDER - 1 {
        let mf = m as f64;
        let cm1 = if m >= 1 { c[m - 1] } else { Complex64::new(0.0, 0.0) };
        let cm2 = if m >= 2 { c[m - 2] } else { Complex64::new(0.0, 0.0) };
        c[m + 2] = ((z0sq + nu2 - mf * mf) * c[m] + 2.0 * z0 * cm1 + cm2
            - z0 * (2.0 * mf + 1.0) * (mf + 1.0) * c[m + 1])
            / (z0sq * ((mf + 2.0) * (mf + 1.0)));
    }
    let mut val = Complex64::new(0.0, 0.0);
    let mut der = Complex64::new(0.0, 0.0);
    for m in (0..=ORDER).rev() {
        val = val * h + c[m];
        if m >= 1 {
            der = der * h + c[m] * m as f64;
        }
    }
    (val, der)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn half_integer_closed_form() {
        // I_{1/2}(z) = sqrt(2/(pi z)) sinh z
        let v = bessel_i(0.5, Complex64::new(1.0, 0.0)).unwrap();
        let exact = (2.0 / std::f64::consts::PI).sqrt() * 1f64.sinh();
        assert!((v.re - exact).abs() < 1e-14);
        assert!(v.im.abs() < 1e-15);
    }

    #[test]
    fn zero_argument() {
        assert_eq!(bessel_i(1.0, Complex64::new(0.0, 0.0)).unwrap(), Complex64::new(0.0, 0.0));
        assert_eq!(bessel_i(0.0, Complex64::new(0.0, 0.0)).unwrap(), Complex64::new(1.0, 0.0));
    }

    #[test]
    fn thirty_term_series_oracle() {
        // direct truncated power series, written out independently
        let z = 1.0f64;
        let mut s = 0.0;
        for k in 0..30 {
            let mut kfact = 1.0f64;
            for j in 1..=k {
                kfact *= j as f64;
            }
            s += (z / 2.0).powi(2 * k as i32) / (kfact * kfact);
        }
        let v = bessel_i(0.0, Complex64::new(z, 0.0)).unwrap();
        assert!((v.re - s).abs() < 1e-14);
    }

    #[test]
    fn recurrence_residual() {
        // I_{nu-1}(z) - I_{nu+1}(z) = (2 nu / z) I_nu(z)
        for &nu in &[0.3, 1.0, 2.7] {
            for &z in &[
                Complex64::new(2.0, 0.0),
                Complex64::new(0.0, -6.0),
                Complex64::new(14.0, 3.0),
                Complex64::new(0.0, -25.0),
                Complex64::new(-8.0, 17.0),
            ] {
                let a = bessel_i(nu - 1.0, z).unwrap();
                let b = bessel_i(nu + 1.0, z).unwrap();
                let c = bessel_i(nu, z).unwrap();
                let lhs = a - b;
                let rhs = c * 2.0 * nu / z;
                let scale = a.norm().max(b.norm()).max(1e-30);
                assert!(
                    (lhs - rhs).norm() / scale <= 1e-10,
                    "nu={nu} z={z} rel={:e}",
                    (lhs - rhs).norm() / scale
                );
            }
        }
    }

    #[test]
    fn crossover_continuity() {
        // series just below the switch vs continuation just above it
        for &arg in &[0.0f64, -1.3, 2.2] {
            let dir = Complex64::new(0.0, arg).exp();
            let lo = bessel_i(0.8, dir * (SERIES_RADIUS - 1e-6)).unwrap();
            let hi = bessel_i(0.8, dir * (SERIES_RADIUS + 1e-6)).unwrap();
            assert!((lo - hi).norm() / lo.norm() < 1e-10, "arg(z)={arg}");
        }
    }

    #[test]
    fn large_imaginary_argument_against_j() {
        // I_0(iy) = J_0(y); check against an accurate fixed value of J_0(30)
        // (Abramowitz & Stegun table / high-precision reference).
        let v = bessel_i(0.0, Complex64::new(0.0, 30.0)).unwrap();
        let j0_30 = -0.086367983581040142;
        assert!((v.re - j0_30).abs() < 1e-12, "got {v}");
        assert!(v.im.abs() < 1e-12);
    }
}
