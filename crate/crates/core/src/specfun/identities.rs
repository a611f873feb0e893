//! Numerically verified classical identities.
//!
//! Each identity is evaluated as |LHS - RHS| with series truncated and
//! integrals quadratured to the documented internal tolerances. The
//! returned residual is the achieved absolute defect.

use crate::error::{Error, Result};
use crate::quad::integrate_complex;
use crate::specfun::bessel_i;
use crate::specfun::confluent::{
    pcf, whittaker_m, whittaker_m_rotated, whittaker_w, whittaker_w_connection,
    whittaker_w_connection_rotated, Parity,
};
use crate::specfun::gamma::{log_gamma, real_gamma};
use crate::specfun::orthopoly::{hermite, jacobi, laguerre};
use num_complex::Complex64;

const I: Complex64 = Complex64::new(0.0, 1.0);
const PI: f64 = std::f64::consts::PI;

/// An identity together with its evaluation parameters.
///
/// `Default`-constructed variants carry the shipped parameter sets used by
/// the validation suite.
#[derive(Debug, Clone, PartialEq)]
pub enum IdentityId {
    /// Hille-Hardy bilinear Laguerre generating function; |z| < 1.
    HilleHardy { x: f64, y: f64, z: f64, alpha: f64, n_terms: usize },
    /// Continuum dispersion formula for the radial oscillator kernel in
    /// terms of Whittaker M products; 0 < alpha < pi. The integrand carries
    /// the exponential factor exp((pi - 2 alpha) p).
    Dispersion { mu: f64, x: f64, y: f64, alpha: f64, p_max: f64 },
    /// Bateman addition theorem for products of modified Bessel functions.
    Bateman { nu: f64, mu: f64, z: f64, a: f64, b: f64, n_terms: usize },
    /// Laplace-type integral producing the M x W Whittaker product;
    /// requires p + gamma + 1/2 > 0, gamma > 0, y > x > 0.
    MwIntegral { p: f64, gamma: f64, x: f64, y: f64 },
    /// Whittaker M reflection under z -> z e^{i pi}.
    MReflection { kappa: Complex64, mu: f64, z: Complex64 },
    /// Connection expressing M through W(z) and W(z e^{i pi}).
    MwConnection { kappa: Complex64, mu: f64, z: Complex64 },
    /// Mehler bilinear Hermite kernel; |a| < 1.
    Mehler { a: f64, x: f64, y: f64, n_terms: usize },
    /// Parity-resolved dispersion formula in terms of even/odd parabolic
    /// cylinder functions (weights fixed by the E0(0)=1, E1'(0)=1
    /// normalization used here).
    PcfDispersion { x: f64, y: f64, alpha: f64, p_max: f64 },
    /// Terminating 2F1 representation of Jacobi polynomials.
    HypergeomJacobi { l: usize, alpha: f64, beta: f64, t: f64 },
}

impl IdentityId {
    /// The shipped default parameter sets, one per identity.
    pub fn defaults() -> Vec<IdentityId> {
        vec![
            IdentityId::HilleHardy { x: 0.3, y: 0.3, z: 0.4, alpha: 0.5, n_terms: 40 },
            IdentityId::Dispersion { mu: 0.35, x: 0.4, y: 0.75, alpha: 1.0, p_max: 14.0 },
            IdentityId::Bateman { nu: 0.3, mu: 0.6, z: 1.7, a: 0.5, b: 0.8, n_terms: 40 },
            IdentityId::MwIntegral { p: 0.4, gamma: 0.7, x: 0.8, y: 1.7 },
            IdentityId::MReflection {
                kappa: Complex64::new(0.0, 0.3),
                mu: 0.7,
                z: Complex64::new(1.0, 0.5),
            },
            IdentityId::MwConnection {
                kappa: Complex64::new(0.25, 0.0),
                mu: 0.7,
                z: Complex64::new(1.2, -0.4),
            },
            IdentityId::Mehler { a: 0.3, x: 0.5, y: 0.5, n_terms: 40 },
            IdentityId::PcfDispersion { x: 0.3, y: 0.55, alpha: 1.0, p_max: 14.0 },
            IdentityId::HypergeomJacobi { l: 3, alpha: 0.4, beta: 0.7, t: 0.3 },
        ]
    }

    /// Short stable name for reports.
    pub fn name(&self) -> &'static str {
        match self {
            IdentityId::HilleHardy { .. } => "hille_hardy",
            IdentityId::Dispersion { .. } => "dispersion",
            IdentityId::Bateman { .. } => "bateman",
            IdentityId::MwIntegral { .. } => "mw_integral",
            IdentityId::MReflection { .. } => "m_reflection",
            IdentityId::MwConnection { .. } => "m_w_connection",
            IdentityId::Mehler { .. } => "mehler",
            IdentityId::PcfDispersion { .. } => "pcf_dispersion",
            IdentityId::HypergeomJacobi { .. } => "hypergeom_jacobi",
        }
    }
}

/// Evaluate both sides of the identity and return |LHS - RHS|.
pub fn verify_identity(id: &IdentityId) -> Result<f64> {
    match *id {
        IdentityId::HilleHardy { x, y, z, alpha, n_terms } => hille_hardy(x, y, z, alpha, n_terms),
        IdentityId::Dispersion { mu, x, y, alpha, p_max } => dispersion(mu, x, y, alpha, p_max),
        IdentityId::Bateman { nu, mu, z, a, b, n_terms } => bateman(nu, mu, z, a, b, n_terms),
        IdentityId::MwIntegral { p, gamma, x, y } => mw_integral(p, gamma, x, y),
        IdentityId::MReflection { kappa, mu, z } => m_reflection(kappa, mu, z),
        IdentityId::MwConnection { kappa, mu, z } => m_w_connection(kappa, mu, z),
        IdentityId::Mehler { a, x, y, n_terms } => mehler(a, x, y, n_terms),
        IdentityId::PcfDispersion { x, y, alpha, p_max } => pcf_dispersion(x, y, alpha, p_max),
        IdentityId::HypergeomJacobi { l, alpha, beta, t } => hypergeom_jacobi(l, alpha, beta, t),
    }
}

fn hille_hardy(x: f64, y: f64, z: f64, alpha: f64, n_terms: usize) -> Result<f64> {
    if z.abs() >= 1.0 {
        return Err(Error::domain("hille_hardy: |z| >= 1"));
    }
    if alpha <= -1.0 || x <= 0.0 || y <= 0.0 {
        return Err(Error::domain("hille_hardy: parameters out of domain"));
    }
    let lhs = (1.0 - z).recip()
        * (-z * (x + y) / (1.0 - z)).exp()
        * bessel_i(alpha, Complex64::new(2.0 * (x * y * z).sqrt() / (1.0 - z), 0.0))?.re;
    let mut rhs = 0.0;
    let mut zn = 1.0;
    for n in 0..n_terms {
        let nf = fact(n);
        rhs += nf / real_gamma(n as f64 + alpha + 1.0)?
            * laguerre(n, alpha, x)
            * laguerre(n, alpha, y)
            * zn;
        zn *= z;
    }
    rhs *= (x * y * z).powf(0.5 * alpha);
    Ok((lhs - rhs).abs())
}

fn dispersion(mu: f64, x: f64, y: f64, alpha: f64, p_max: f64) -> Result<f64> {
    if !(0.0 < alpha && alpha < PI) || x <= 0.0 || y <= 0.0 || mu <= 0.0 {
        return Err(Error::domain("dispersion: parameters out of domain"));
    }
    let sa = alpha.sin();
    let lhs = 2.0 * PI * (x * y).sqrt() / sa
        * (-(x + y) * alpha.cos() / sa).exp()
        * bessel_i(2.0 * mu, Complex64::new(2.0 * (x * y).sqrt() / sa, 0.0))?.re;
    let lg2mu = log_gamma(Complex64::new(2.0 * mu + 1.0, 0.0))?;
    let integrand = |p: f64| -> Complex64 {
        let gp = log_gamma(Complex64::new(0.5 + mu, p)).unwrap();
        let gm = log_gamma(Complex64::new(0.5 + mu, -p)).unwrap();
        let gamma_pair = (gp + gm - 2.0 * lg2mu).exp();
        let m1 = whittaker_m(I * p, mu, Complex64::new(0.0, -2.0 * x)).unwrap();
        let m2 = whittaker_m(-I * p, mu, Complex64::new(0.0, 2.0 * y)).unwrap();
        ((PI - 2.0 * alpha) * p).exp() * gamma_pair * m1 * m2
    };
    let rhs = integrate_complex(integrand, -p_max, p_max, 1e-10 * lhs.abs().max(1.0));
    Ok((Complex64::new(lhs, 0.0) - rhs).norm())
}

fn bateman(nu: f64, mu: f64, z: f64, a: f64, b: f64, n_terms: usize) -> Result<f64> {
    if nu <= -1.0 || mu <= -1.0 || z <= 0.0 {
        return Err(Error::domain("bateman: parameters out of domain"));
    }
    let (sa, ca) = (a.sin(), a.cos());
    let (sb, cb) = (b.sin(), b.cos());
    let lhs = 0.5
        * z
        * bessel_i(nu, Complex64::new(z * sa * sb, 0.0))?.re
        * bessel_i(mu, Complex64::new(z * ca * cb, 0.0))?.re;
    let mut rhs = 0.0;
    for n in 0..n_terms {
        let nf = n as f64;
        let coeff = (nu + mu + 2.0 * nf + 1.0) * fact(n) / real_gamma(nu + nf + 1.0)?
            * real_gamma(nu + mu + nf + 1.0)?
            / real_gamma(mu + nf + 1.0)?;
        rhs += coeff
            * bessel_i(mu + nu + 2.0 * nf + 1.0, Complex64::new(z, 0.0))?.re
            * jacobi(n, nu, mu, (2.0 * a).cos())
            * jacobi(n, nu, mu, (2.0 * b).cos());
    }
    rhs *= (sa * sb).powf(nu) * (ca * cb).powf(mu);
    Ok((lhs - rhs).abs())
}

fn mw_integral(p: f64, gamma: f64, x: f64, y: f64) -> Result<f64> {
    if p + gamma + 0.5 <= 0.0 || gamma <= 0.0 || !(y > x && x > 0.0) {
        return Err(Error::domain("mw_integral: parameters out of domain"));
    }
    // q -> 0 tail is bounded by exp(-(sqrt(y)-sqrt(x))^2 / (2q)); pick q_min
    // so the bound is below 1e-18, and q_max from the exp(-2(p+gamma)q) tail.
    let gap = (y.sqrt() - x.sqrt()).powi(2) / 2.0;
    let q_min = gap / 42.0;
    let q_max = 42.0 / (2.0 * (p + gamma)).min(2.0) + 5.0;
    let integrand = |q: f64| -> Complex64 {
        let sh = q.sinh();
        let ch_over_sh = q.cosh() / sh;
        let w = (x * y).sqrt() / sh;
        let iv = bessel_i(2.0 * gamma, Complex64::new(w, 0.0)).unwrap().re;
        Complex64::new((-2.0 * p * q - 0.5 * (x + y) * ch_over_sh).exp() / sh * iv, 0.0)
    };
    let lhs = integrate_complex(integrand, q_min, q_max, 1e-12).re;
    let rhs = real_gamma(p + gamma + 0.5)? / (real_gamma(2.0 * gamma + 1.0)? * (x * y).sqrt())
        * whittaker_m(Complex64::new(-p, 0.0), gamma, Complex64::new(x, 0.0))?.re
        * whittaker_w(-p, gamma, y)?.re;
    Ok((lhs - rhs).abs())
}

fn m_reflection(kappa: Complex64, mu: f64, z: Complex64) -> Result<f64> {
    // M_{k,mu}(z) = e^{-i pi (mu + 1/2)} M_{-k,mu}(z e^{+i pi})
    let lhs = whittaker_m(kappa, mu, z)?;
    let rot = whittaker_m_rotated(-kappa, mu, z, 1)?;
    let rhs = (-I * PI * (mu + 0.5)).exp() * rot;
    Ok((lhs - rhs).norm())
}

fn m_w_connection(kappa: Complex64, mu: f64, z: Complex64) -> Result<f64> {
    if (2.0 * mu - (2.0 * mu).round()).abs() < 1e-8 {
        return Err(Error::domain("m_w_connection: 2 mu too close to an integer"));
    }
    let lhs = whittaker_m(kappa, mu, z)?;
    let g = |v: Complex64| log_gamma(v);
    let c1 = (-g(Complex64::new(mu + 0.5, 0.0) - kappa)?).exp();
    let c2 = (-g(Complex64::new(mu + 0.5, 0.0) + kappa)?).exp();
    let gam2mu1 = g(Complex64::new(2.0 * mu + 1.0, 0.0))?.exp();
    let w_rot = whittaker_w_connection_rotated(-kappa, mu, z, 1)?;
    let w_dir = whittaker_w_connection(kappa, mu, z)?;
    let rhs = gam2mu1
        * (I * PI * kappa).exp()
        * (c1 * w_rot + (-I * PI * (mu + 0.5)).exp() * c2 * w_dir);
    Ok((lhs - rhs).norm())
}

fn mehler(a: f64, x: f64, y: f64, n_terms: usize) -> Result<f64> {
    if a.abs() >= 1.0 {
        return Err(Error::domain("mehler: |a| >= 1"));
    }
    let lhs = (1.0 - a * a).sqrt().recip()
        * (-((x * x + y * y) * (1.0 + a * a) - 4.0 * x * y * a) / (2.0 * (1.0 - a * a))).exp();
    let mut rhs = 0.0;
    let mut an = 1.0;
    for n in 0..n_terms {
        rhs += an / fact(n) * hermite(n, x) * hermite(n, y);
        an *= 0.5 * a;
    }
    rhs *= (-0.5 * (x * x + y * y)).exp();
    Ok((lhs - rhs).abs())
}

fn pcf_dispersion(x: f64, y: f64, alpha: f64, p_max: f64) -> Result<f64> {
    if !(0.0 < alpha && alpha < PI) || x <= 0.0 || y <= 0.0 {
        return Err(Error::domain("pcf_dispersion: parameters out of domain"));
    }
    let sa = alpha.sin();
    let sxy = (x * y).sqrt();
    let lhs = (PI * sxy / sa).sqrt() * (-(x + y) * alpha.cos() / sa + 2.0 * sxy / sa).exp();
    let zx = (-I * PI / 4.0).exp() * 2.0 * x.sqrt();
    let zy = (I * PI / 4.0).exp() * 2.0 * y.sqrt();
    let integrand = |p: f64| -> Complex64 {
        let nup = Complex64::new(-0.5, 2.0 * p);
        let num = Complex64::new(-0.5, -2.0 * p);
        let g14 = (2.0 * log_gamma(Complex64::new(0.25, p)).unwrap().re).exp();
        let g34 = (2.0 * log_gamma(Complex64::new(0.75, p)).unwrap().re).exp();
        let even = pcf(Parity::Even, nup, zx).unwrap() * pcf(Parity::Even, num, zy).unwrap();
        let odd = pcf(Parity::Odd, nup, zx).unwrap() * pcf(Parity::Odd, num, zy).unwrap();
        ((PI - 2.0 * alpha) * p).exp() * (g14 * even + 2.0 * g34 * odd)
    };
    let integral = integrate_complex(integrand, -p_max, p_max, 1e-10 * lhs.abs().max(1.0));
    let rhs = (x * y).powf(0.25) / (2f64.sqrt() * PI) * integral;
    Ok((Complex64::new(lhs, 0.0) - rhs).norm())
}

fn hypergeom_jacobi(l: usize, alpha: f64, beta: f64, t: f64) -> Result<f64> {
    if alpha <= -1.0 || beta <= -1.0 {
        return Err(Error::domain("hypergeom_jacobi: parameters out of domain"));
    }
    // terminating 2F1(l+alpha+beta+1, -l; 1+alpha; (1-t)/2)
    let u = 0.5 * (1.0 - t);
    let (a, b, c) = (l as f64 + alpha + beta + 1.0, -(l as f64), 1.0 + alpha);
    let mut term = 1.0;
    let mut lhs = 1.0;
    for k in 0..=l {
        let kf = k as f64;
        term *= (a + kf) * (b + kf) / ((c + kf) * (kf + 1.0)) * u;
        lhs += term;
    }
    let rhs = fact(l) * real_gamma(alpha + 1.0)? / real_gamma(l as f64 + alpha + 1.0)?
        * jacobi(l, alpha, beta, t);
    Ok((lhs - rhs).abs())
}

fn fact(n: usize) -> f64 {
    let mut v = 1.0;
    for j in 2..=n {
        v *= j as f64;
    }
    v
}
