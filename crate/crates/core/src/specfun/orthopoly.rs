//! Orthogonal polynomials by three-term recurrence.

use crate::error::{Error, Result};

/// Which classical family a [`PolySpec`] refers to.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum PolyFamily {
    /// Generalized Laguerre L_n^alpha, alpha > -1.
    Laguerre { alpha: f64 },
    /// Physicists' Hermite H_n.
    Hermite,
    /// Jacobi P_n^(a,b), a > -1, b > -1.
    Jacobi { a: f64, b: f64 },
}

/// A polynomial of a classical family at fixed degree and parameters.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PolySpec {
    pub family: PolyFamily,
    pub degree: usize,
}

impl PolySpec {
    pub fn laguerre(n: usize, alpha: f64) -> Self {
        PolySpec { family: PolyFamily::Laguerre { alpha }, degree: n }
    }
    pub fn hermite(n: usize) -> Self {
        PolySpec { family: PolyFamily::Hermite, degree: n }
    }
    pub fn jacobi(n: usize, a: f64, b: f64) -> Self {
        PolySpec { family: PolyFamily::Jacobi { a, b }, degree: n }
    }

    fn check(&self) -> Result<()> {
        match self.family {
            PolyFamily::Laguerre { alpha } if alpha <= -1.0 => {
                Err(Error::domain(format!("laguerre: alpha = {alpha} <= -1")))
            }
            PolyFamily::Jacobi { a, b } if a <= -1.0 || b <= -1.0 => {
                Err(Error::domain(format!("jacobi: (a, b) = ({a}, {b}) out of domain")))
            }
            _ => Ok(()),
        }
    }
}

/// Evaluate the polynomial described by `spec` at `x`.
pub fn orthopoly(spec: PolySpec, x: f64) -> Result<f64> {
    spec.check()?;
    if !x.is_finite() {
        return Err(Error::domain("orthopoly: non-finite x"));
    }
    let n = spec.degree;
    Ok(match spec.family {
        PolyFamily::Laguerre { alpha } => laguerre(n, alpha, x),
        PolyFamily::Hermite => hermite(n, x),
        PolyFamily::Jacobi { a, b } => jacobi(n, a, b, x),
    })
}

pub(crate) fn laguerre(n: usize, alpha: f64, x: f64) -> f64 {
    if n == 0 {
        return 1.0;
    }
    let mut lm1 = 1.0;
    let mut l = 1.0 + alpha - x;
    for k in 1..n {
        let kf = k as f64;
        let lp1 = ((2.0 * kf + 1.0 + alpha - x) * l - (kf + alpha) * lm1) / (kf + 1.0);
        lm1 = l;
        l = lp1;
    }
    l
}

pub(crate) fn hermite(n: usize, x: f64) -> f64 {
    if n == 0 {
        return 1.0;
    }
    let mut hm1 = 1.0;
    let mut h = 2.0 * x;
    for k in 1..n {
        let kf = k as f64;
        let hp1 = 2.0 * x * h - 2.0 * kf * hm1;
        hm1 = h;
        h = hp1;
    }
    h
}

pub(crate) fn jacobi(n: usize, a: f64, b: f64, x: f64) -> f64 {
    if n == 0 {
        return 1.0;
    }
    let mut pm1 = 1.0;
    let mut p = 0.5 * (a - b + (a + b + 2.0) * x);
    for k in 1..n {
        let kf = k as f64;
        let c1 = 2.0 * (kf + 1.0) * (kf + a + b + 1.0) * (2.0 * kf + a + b);
        let c2 = (2.0 * kf + a + b + 1.0) * (a * a - b * b);
        let c3 = (2.0 * kf + a + b) * (2.0 * kf + a + b + 1.0) * (2.0 * kf + a + b + 2.0);
        let c4 = 2.0 * (kf + a) * (kf + b) * (2.0 * kf + a + b + 2.0);
        let pp1 = ((c2 + c3 * x) * p - c4 * pm1) / c1;
        pm1 = p;
        p = pp1;
    }
    p
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::specfun::real_gamma;

    #[test]
    fn laguerre_root() {
        // L_1^alpha(x) = 1 + alpha - x vanishes at x = 1 + alpha
        let v = orthopoly(PolySpec::laguerre(1, 0.5), 1.5).unwrap();
        assert_eq!(v, 0.0);
    }

    #[test]
    fn hermite_degree_two() {
        let v = orthopoly(PolySpec::hermite(2), 1.0).unwrap();
        assert!((v - 2.0).abs() < 1e-15); // 4x^2 - 2
    }

    #[test]
    fn jacobi_at_one() {
        // P_n^(a,b)(1) = C(n+a, n)
        let v = orthopoly(PolySpec::jacobi(2, 1.0, 0.0), 1.0).unwrap();
        assert!((v - 3.0).abs() < 1e-14);
    }

    #[test]
    fn domain_errors() {
        assert!(orthopoly(PolySpec::laguerre(2, -1.0), 0.3).is_err());
        assert!(orthopoly(PolySpec::jacobi(2, -1.2, 0.0), 0.3).is_err());
    }

    fn binom_real(top: f64, k: usize) -> f64 {
        // C(top, k) via Gamma; top need not be an integer
        let mut v = 1.0;
        for j in 0..k {
            v *= (top - j as f64) / (k - j) as f64;
        }
        v
    }

    /// Direct monomial expansions for n <= 10, used as the recurrence oracle.
    fn laguerre_monomial(n: usize, alpha: f64, x: f64) -> f64 {
        let mut s = 0.0;
        for k in 0..=n {
            let mut kfact = 1.0;
            for j in 1..=k {
                kfact *= j as f64;
            }
            s += (-1f64).powi(k as i32) * binom_real(n as f64 + alpha, n - k) * x.powi(k as i32)
                / kfact;
        }
        s
    }

    fn hermite_monomial(n: usize, x: f64) -> f64 {
        // H_n(x) = n! sum_m (-1)^m (2x)^(n-2m) / (m! (n-2m)!)
        let mut nfact = 1.0;
        for j in 1..=n {
            nfact *= j as f64;
        }
        let mut s = 0.0;
        let mut m = 0;
        while 2 * m <= n {
            let mut mfact = 1.0;
            for j in 1..=m {
                mfact *= j as f64;
            }
            let mut rfact = 1.0;
            for j in 1..=(n - 2 * m) {
                rfact *= j as f64;
            }
            s += (-1f64).powi(m as i32) * (2.0 * x).powi((n - 2 * m) as i32) / (mfact * rfact);
            m += 1;
        }
        nfact * s
    }

    fn jacobi_monomial(n: usize, a: f64, b: f64, x: f64) -> f64 {
        // P_n = sum_k C(n+a, n-k) C(n+b, k) ((x-1)/2)^k ((x+1)/2)^(n-k)
        let mut s = 0.0;
        for k in 0..=n {
            s += binom_real(n as f64 + a, n - k)
                * binom_real(n as f64 + b, k)
                * (0.5 * (x - 1.0)).powi(k as i32)
                * (0.5 * (x + 1.0)).powi((n - k) as i32);
        }
        s
    }

    #[test]
    fn recurrence_matches_monomial_expansion() {
        for n in 0..=10usize {
            for &x in &[0.2, 1.7, 4.0] {
                let r = orthopoly(PolySpec::laguerre(n, 0.37), x).unwrap();
                let o = laguerre_monomial(n, 0.37, x);
                assert!((r - o).abs() <= 1e-12 * o.abs().max(1.0), "laguerre n={n} x={x}");

                let r = orthopoly(PolySpec::hermite(n), x).unwrap();
                let o = hermite_monomial(n, x);
                assert!((r - o).abs() <= 1e-12 * o.abs().max(1.0), "hermite n={n} x={x}");
            }
            for &x in &[-0.6, 0.1, 0.9] {
                let r = orthopoly(PolySpec::jacobi(n, 0.3, 0.8), x).unwrap();
                let o = jacobi_monomial(n, 0.3, 0.8, x);
                assert!((r - o).abs() <= 1e-12 * o.abs().max(1.0), "jacobi n={n} x={x}");
            }
        }
        // silence unused import if gamma not referenced above
        let _ = real_gamma(1.0);
    }
}
