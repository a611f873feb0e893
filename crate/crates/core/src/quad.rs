//! Quadrature helpers: Gauss-Legendre nodes and a panel-adaptive integrator
//! for real and complex integrands.

use num_complex::Complex64;

/// Nodes and weights of the n-point Gauss-Legendre rule on [-1, 1].
///
/// Nodes are found by Newton iteration on the Legendre recurrence, seeded
/// with the Chebyshev-angle estimate. Deterministic for fixed `n`.
pub fn gauss_legendre(n: usize) -> (Vec<f64>, Vec<f64>) {
    assert!(n >= 2);
    let mut nodes = vec![0.0; n];
    let mut weights = vec![0.0; n];
    let m = (n + 1) / 2;
    for i in 0..m {
        let mut x = (std::f64::consts::PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
        let mut dp = 0.0;
        for _ in 0..100 {
            // Legendre P_n(x) and its derivative by recurrence.
            let mut p0 = 1.0;
            let mut p1 = x;
            for k in 1..n {
                let kf = k as f64;
                let p2 = ((2.0 * kf + 1.0) * x * p1 - kf * p0) / (kf + 1.0);
                p0 = p1;
                p1 = p2;
            }
            dp = n as f64 * (x * p1 - p0) / (x * x - 1.0);
            let dx = p1 / dp;
            x -= dx;
            if dx.abs() < 1e-15 {
                break;
            }
        }
        nodes[i] = -x;
        nodes[n - 1 - i] = x;
        let w = 2.0 / ((1.0 - x * x) * dp * dp);
        weights[i] = w;
        weights[n - 1 - i] = w;
    }
    (nodes, weights)
}

fn gl20() -> &'static (Vec<f64>, Vec<f64>) {
    use std::sync::OnceLock;
    static GL: OnceLock<(Vec<f64>, Vec<f64>)> = OnceLock::new();
    GL.get_or_init(|| gauss_legendre(20))
}

fn panel<F: Fn(f64) -> Complex64>(f: &F, a: f64, b: f64) -> Complex64 {
    let (x, w) = gl20();
    let c = 0.5 * (a + b);
    let h = 0.5 * (b - a);
    let mut s = Complex64::new(0.0, 0.0);
    for i in 0..x.len() {
        s += f(c + h * x[i]) * w[i];
    }
    s * h
}

fn adapt<F: Fn(f64) -> Complex64>(
    f: &F,
    a: f64,
    b: f64,
    whole: Complex64,
    tol: f64,
    depth: usize,
) -> Complex64 {
    let m = 0.5 * (a + b);
    let left = panel(f, a, m);
    let right = panel(f, m, b);
    let err = (left + right - whole).norm();
    if err < tol || depth == 0 {
        return left + right;
    }
    adapt(f, a, m, left, 0.5 * tol, depth - 1) + adapt(f, m, b, right, 0.5 * tol, depth - 1)
}

/// Adaptive Gauss-Legendre integration of a complex-valued integrand on [a, b].
///
/// `tol` is an absolute target for the whole interval.
pub fn integrate_complex<F: Fn(f64) -> Complex64>(f: F, a: f64, b: f64, tol: f64) -> Complex64 {
    // Split into a few seed panels first; purely bisection-adaptive after that.
    let nseed = 8;
    let mut total = Complex64::new(0.0, 0.0);
    for k in 0..nseed {
        let pa = a + (b - a) * k as f64 / nseed as f64;
        let pb = a + (b - a) * (k + 1) as f64 / nseed as f64;
        let est = panel(&f, pa, pb);
        total += adapt(&f, pa, pb, est, tol / nseed as f64, 40);
    }
    total
}

/// Adaptive Gauss-Legendre integration of a real integrand on [a, b].
pub fn integrate<F: Fn(f64) -> f64>(f: F, a: f64, b: f64, tol: f64) -> f64 {
    integrate_complex(|x| Complex64::new(f(x), 0.0), a, b, tol).re
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gl_nodes_integrate_polynomials_exactly() {
        let (x, w) = gauss_legendre(8);
        // degree 15 is exact for 8 nodes
        let mut s = 0.0;
        for i in 0..8 {
            s += w[i] * x[i].powi(14);
        }
        assert!((s - 2.0 / 15.0).abs() < 1e-14);
    }

    #[test]
    fn adaptive_handles_peaked_integrand() {
        let v = integrate(|x| (-(x - 0.3) * (x - 0.3) * 400.0).exp(), -1.0, 2.0, 1e-12);
        let exact = (std::f64::consts::PI / 400.0).sqrt();
        assert!((v - exact).abs() < 1e-11);
    }

    #[test]
    fn complex_integrand() {
        let v = integrate_complex(
            |x| Complex64::new(0.0, 1.0) * Complex64::new(x, 0.0).exp(),
            0.0,
            1.0,
            1e-13,
        );
        assert!((v.im - (1f64.exp() - 1.0)).abs() < 1e-12);
        assert!(v.re.abs() < 1e-12);
    }
}
