//! Ferrers function P_nu^sigma of real degree and order on (-1, 1),
//! through the hypergeometric representation.

use crate::error::{Error, Result};
use crate::specfun::gamma::real_gamma;

/// P_nu^sigma(x) = ((1+x)/(1-x))^(sigma/2) / Gamma(1-sigma)
///                 * 2F1(nu+1, -nu; 1-sigma; (1-x)/2)
pub fn legendre_p(nu: f64, sigma: f64, x: f64) -> Result<f64> {
    if x.abs() >= 1.0 {
        return Err(Error::domain(format!("legendre_p: x = {x} outside (-1, 1)")));
    }
    let c = 1.0 - sigma;
    if c <= 0.0 && (c - c.round()).abs() < 1e-13 {
        return Err(Error::domain("legendre_p: 1 - sigma at a Gamma pole"));
    }
    let u = 0.5 * (1.0 - x);
    let f = gauss_2f1_series(nu + 1.0, -nu, c, u)?;
    let pref = ((1.0 + x) / (1.0 - x)).powf(0.5 * sigma) / real_gamma(c)?;
    Ok(pref * f)
}

/// Plain Gauss series; adequate for u in [0, ~0.9]. Terminates early for
/// polynomial cases.
fn gauss_2f1_series(a: f64, b: f64, c: f64, u: f64) -> Result<f64> {
    let mut term = 1.0;
    let mut sum = 1.0;
    for k in 0..4000 {
        let kf = k as f64;
        term *= (a + kf) * (b + kf) / ((c + kf) * (kf + 1.0)) * u;
        sum += term;
        if term.abs() < 1e-17 * sum.abs() + 1e-300 {
            return Ok(sum);
        }
    }
    if term.abs() > 1e-13 * sum.abs() {
        return Err(Error::domain(format!(
            "legendre_p: hypergeometric series did not converge at u = {u}"
        )));
    }
    Ok(sum)
}
