//! Independent verification: finite-difference Sturm-Liouville eigensolver
//! for the separated 1D problems and composed spectra.
//!
//! Nothing here calls the closed forms in `spectra`/`wavefun`; the only
//! shared inputs are the potential parameters themselves.
//!
//! Singular endpoints are handled on half-step offset grids with a weighted
//! flux discretization: writing the eigenfunction as u = W v with the known
//! endpoint power behavior W, the barrier terms cancel exactly out of the
//! effective potential and v stays smooth, so the scheme is cleanly O(h^2)
//! and Richardson extrapolation over (h, h/2) is justified.

use crate::error::{Error, Result};
use crate::model::{AngularMode, Constants, CoordinateSystem, PotentialSpec};

/// Boundary behavior at one endpoint.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Endpoint {
    /// Regular endpoint with a Dirichlet wall (used for domain truncation).
    Dirichlet,
    /// Regular-singular endpoint where u ~ (distance)^s; `s` selects the
    /// self-adjoint extension (the sign branch of the barrier index).
    RegularSingular { exponent: f64 },
}

/// A 1D Sturm-Liouville problem -u'' + q(x) u = Lambda u on (a, b).
pub struct Sl1d<'a> {
    pub a: f64,
    pub b: f64,
    /// Full potential q(x), including any singular barrier terms.
    pub q: Box<dyn Fn(f64) -> f64 + Sync + 'a>,
    pub left: Endpoint,
    pub right: Endpoint,
    /// Interior points of the coarse grid; the solver also runs 2n.
    pub n_points: usize,
}

/// Eigenvalues with Richardson error estimates and an optional accuracy
/// warning when the (h, h/2) trend looks unconverged.
#[derive(Debug, Clone)]
pub struct SlEigs {
    pub values: Vec<f64>,
    pub est_error: Vec<f64>,
    pub warning: Option<String>,
}

/// Weight W(x) built from the endpoint exponents, with W''/W available in
/// closed form so the singular barrier cancels exactly.
struct Weight {
    sa: f64,
    sb: f64,
    a: f64,
    b: f64,
}

impl Weight {
    fn new(p: &Sl1d) -> Weight {
        let sa = match p.left {
            Endpoint::Dirichlet => 0.0,
            Endpoint::RegularSingular { exponent } => exponent,
        };
        let sb = match p.right {
            Endpoint::Dirichlet => 0.0,
            Endpoint::RegularSingular { exponent } => exponent,
        };
        Weight { sa, sb, a: p.a, b: p.b }
    }
    /// w = W^2
    fn w(&self, x: f64) -> f64 {
        (x - self.a).powf(2.0 * self.sa) * (self.b - x).powf(2.0 * self.sb)
    }
    /// W''/W for W = (x-a)^sa (b-x)^sb
    fn wpp_over_w(&self, x: f64) -> f64 {
        let da = x - self.a;
        let db = self.b - x;
        let lp = self.sa / da - self.sb / db; // W'/W
        let lpp = -self.sa / (da * da) - self.sb / (db * db); // (W'/W)'
        lpp + lp * lp
    }
}

fn build_tridiag(p: &Sl1d, n: usize) -> (Vec<f64>, Vec<f64>) {
    let h = (p.b - p.a) / n as f64;
    let wt = Weight::new(p);
    let x = |i: usize| p.a + (i as f64 + 0.5) * h;
    let mut diag = vec![0.0; n];
    let mut off = vec![0.0; n - 1];
    let wmid: Vec<f64> = (0..=n).map(|i| wt.w(p.a + i as f64 * h)).collect();
    for i in 0..n {
        let xi = x(i);
        let wi = wt.w(xi);
        let q_eff = (p.q)(xi) - wt.wpp_over_w(xi);
        let mut d = q_eff;
        // left flux
        if i > 0 {
            d += wmid[i] / (h * h * wi);
        } else {
            match p.left {
                Endpoint::Dirichlet => d += 2.0 * wmid[0] / (h * h * wi),
                Endpoint::RegularSingular { .. } => {} // natural: w vanishes at a
            }
        }
        // right flux
        if i + 1 < n {
            d += wmid[i + 1] / (h * h * wi);
        } else {
            match p.right {
                Endpoint::Dirichlet => d += 2.0 * wmid[n] / (h * h * wi),
                Endpoint::RegularSingular { .. } => {}
            }
        }
        diag[i] = d;
        if i + 1 < n {
            let wj = wt.w(x(i + 1));
            off[i] = -wmid[i + 1] / (h * h * (wi * wj).sqrt());
        }
    }
    (diag, off)
}

/// Sturm count: number of eigenvalues of the symmetric tridiagonal matrix
/// strictly below `x`.
fn count_below(diag: &[f64], off: &[f64], x: f64) -> usize {
    let mut count = 0usize;
    let mut d = diag[0] - x;
    if d < 0.0 {
        count += 1;
    }
    for i in 1..diag.len() {
        let e = off[i - 1];
        if d.abs() < 1e-300 {
            d = -1e-300;
        }
        d = (diag[i] - x) - e * e / d;
        if d < 0.0 {
            count += 1;
        }
    }
    count
}

/// Lowest `count` eigenvalues of a symmetric tridiagonal matrix by bisection.
pub fn lowest_eigs_tridiag(diag: &[f64], off: &[f64], count: usize) -> Vec<f64> {
    let n = diag.len();
    assert!(count <= n);
    // Gershgorin bounds
    let mut lo = f64::INFINITY;
    let mut hi = f64::NEG_INFINITY;
    for i in 0..n {
        let mut r = 0.0;
        if i > 0 {
            r += off[i - 1].abs();
        }
        if i < n - 1 {
            r += off[i].abs();
        }
        lo = lo.min(diag[i] - r);
        hi = hi.max(diag[i] + r);
    }
    let mut out = Vec::with_capacity(count);
    for k in 0..count {
        let (mut a, mut b) = (lo, hi);
        // keep the k-th smallest inside (a, b]
        for _ in 0..140 {
            let mid = 0.5 * (a + b);
            if count_below(diag, off, mid) > k {
                b = mid;
            } else {
                a = mid;
            }
            if b - a <= 1e-14 * b.abs().max(a.abs()).max(1.0) {
                break;
            }
        }
        out.push(0.5 * (a + b));
    }
    out
}

/// The `count` lowest eigenvalues of the discretized problem, Richardson
/// extrapolated over grids (h, h/2).
pub fn sl_eigs(p: &Sl1d, count: usize) -> Result<SlEigs> {
    if p.n_points < 64 {
        return Err(Error::domain("sl_eigs: n_points >= 64 required"));
    }
    if !(p.b > p.a) {
        return Err(Error::domain("sl_eigs: empty domain"));
    }
    let (d1, o1) = build_tridiag(p, p.n_points);
    let (d2, o2) = build_tridiag(p, 2 * p.n_points);
    let e1 = lowest_eigs_tridiag(&d1, &o1, count);
    let e2 = lowest_eigs_tridiag(&d2, &o2, count);
    let mut values = Vec::with_capacity(count);
    let mut est = Vec::with_capacity(count);
    let mut warn = None;
    for k in 0..count {
        let v = (4.0 * e2[k] - e1[k]) / 3.0;
        let delta = (e2[k] - e1[k]).abs() / 3.0;
        if delta > 1e-3 * v.abs().max(1.0) {
            warn = Some(format!(
                "eigenvalue {k}: extrapolation correction {delta:.2e} is large; \
                 grid may be too coarse"
            ));
        }
        values.push(v);
        est.push(delta);
    }
    Ok(SlEigs { values, est_error: est, warning: warn })
}

// ---------------------------------------------------------------------------
// Periodic solver (V4 azimuthal problems)
// ---------------------------------------------------------------------------

/// Dense symmetric eigensolve helpers for the periodic FD matrix
/// (tridiagonal with corner entries): Householder tridiagonalization for
/// values, Sherman-Morrison inverse iteration for vectors.
mod periodic {
    /// Householder reduction of a symmetric matrix to tridiagonal form;
    /// returns (diag, off). The input is consumed.
    pub fn householder_tridiag(mut a: Vec<Vec<f64>>) -> (Vec<f64>, Vec<f64>) {
        let n = a.len();
        for k in 0..n.saturating_sub(2) {
            let mut alpha2 = 0.0;
            for i in k + 1..n {
                alpha2 += a[i][k] * a[i][k];
            }
            if alpha2 <= 1e-300 {
                continue;
            }
            let mut alpha = alpha2.sqrt();
            if a[k + 1][k] > 0.0 {
                alpha = -alpha;
            }
            let r2 = alpha2 - a[k + 1][k] * alpha;
            if r2 <= 1e-300 {
                continue;
            }
            // v = column with v[k+1] adjusted; H = I - v v^T / r2
            let mut v = vec![0.0; n];
            v[k + 1] = a[k + 1][k] - alpha;
            for i in k + 2..n {
                v[i] = a[i][k];
            }
            // p = A v / r2
            let mut p = vec![0.0; n];
            for i in 0..n {
                let mut s = 0.0;
                for j in k + 1..n {
                    s += a[i][j] * v[j];
                }
                p[i] = s / r2;
            }
            let mut vtp = 0.0;
            for i in k + 1..n {
                vtp += v[i] * p[i];
            }
            // q = p - (v^T p / 2 r2) v
            let c = vtp / (2.0 * r2);
            for i in 0..n {
                p[i] -= c * v[i];
            }
            // A <- A - v q^T - q v^T
            for i in 0..n {
                for j in 0..n {
                    a[i][j] -= v[i] * p[j] + p[i] * v[j];
                }
            }
        }
        let diag: Vec<f64> = (0..n).map(|i| a[i][i]).collect();
        let off: Vec<f64> = (0..n - 1).map(|i| a[i + 1][i]).collect();
        (diag, off)
    }

    /// Thomas solve of (T - sigma I) x = b for tridiagonal T (no pivoting;
    /// shifted slightly off the eigenvalue by the caller).
    fn tridiag_solve(diag: &[f64], off: &[f64], sigma: f64, b: &[f64]) -> Vec<f64> {
        let n = diag.len();
        let mut c = vec![0.0; n];
        let mut d = vec![0.0; n];
        let mut denom = diag[0] - sigma;
        if denom.abs() < 1e-300 {
            denom = 1e-300;
        }
        c[0] = if n > 1 { off[0] / denom } else { 0.0 };
        d[0] = b[0] / denom;
        for i in 1..n {
            let e = off[i - 1];
            let mut m = (diag[i] - sigma) - e * c[i - 1];
            if m.abs() < 1e-300 {
                m = 1e-300;
            }
            if i < n - 1 {
                c[i] = off[i] / m;
            }
            d[i] = (b[i] - e * d[i - 1]) / m;
        }
        let mut x = vec![0.0; n];
        x[n - 1] = d[n - 1];
        for i in (0..n - 1).rev() {
            x[i] = d[i] - c[i] * x[i + 1];
        }
        x
    }

    /// Inverse iteration on the periodic matrix T + corner, where `corner`
    /// couples indices 0 and n-1. Sherman-Morrison with u = e0 + e_{n-1}.
    pub fn periodic_inverse_iteration(
        diag: &[f64],
        off: &[f64],
        corner: f64,
        lambda: f64,
    ) -> Vec<f64> {
        let n = diag.len();
        // A = T' + corner * u u^T with T' = T - corner on entries (0,0),(n-1,n-1)
        let mut dprime = diag.to_vec();
        dprime[0] -= corner;
        dprime[n - 1] -= corner;
        let sigma = lambda + 1e-11 * (1.0 + lambda.abs());
        let mut u = vec![0.0; n];
        u[0] = 1.0;
        u[n - 1] = 1.0;
        let solve = |b: &[f64]| -> Vec<f64> {
            // Sherman-Morrison: (T' + c u u^T)^{-1} b
            let y = tridiag_solve(&dprime, off, sigma, b);
            let z = tridiag_solve(&dprime, off, sigma, &u);
            let utz = z[0] + z[n - 1];
            let uty = y[0] + y[n - 1];
            let f = corner * uty / (1.0 + corner * utz);
            y.iter().zip(&z).map(|(yi, zi)| yi - f * zi).collect()
        };
        let mut v: Vec<f64> = (0..n)
            .map(|i| 1.0 + 0.3 * ((i * 2654435761usize) % 97) as f64 / 97.0)
            .collect();
        for _ in 0..5 {
            let w = solve(&v);
            let norm = w.iter().map(|x| x * x).sum::<f64>().sqrt();
            v = w.iter().map(|x| x / norm).collect();
        }
        v
    }
}

/// Periodic FD eigensolve of -d^2/dphi^2 + f(phi) on [0, 2 pi), returning
/// the `count` lowest eigenvalues and eigenfunction samples on the uniform
/// phi grid (Richardson for the values, fine-grid samples for the vectors).
pub fn periodic_eigs<F: Fn(f64) -> f64>(
    f: &F,
    count: usize,
    n_points: usize,
) -> Result<(Vec<f64>, Vec<Vec<f64>>)> {
    if n_points < 64 {
        return Err(Error::domain("periodic_eigs: n_points >= 64 required"));
    }
    let solve_values = |n: usize| -> Vec<f64> {
        let h = 2.0 * std::f64::consts::PI / n as f64;
        let mut a = vec![vec![0.0; n]; n];
        for i in 0..n {
            let phi = i as f64 * h;
            a[i][i] = 2.0 / (h * h) + f(phi);
            a[i][(i + 1) % n] = -1.0 / (h * h);
            a[(i + 1) % n][i] = -1.0 / (h * h);
        }
        let (d, o) = periodic::householder_tridiag(a);
        lowest_eigs_tridiag(&d, &o, count)
    };
    let e1 = solve_values(n_points);
    let e2 = solve_values(2 * n_points);
    let values: Vec<f64> = (0..count).map(|k| (4.0 * e2[k] - e1[k]) / 3.0).collect();

    // eigenvectors on the coarse grid via inverse iteration on the raw
    // (un-extrapolated) periodic matrix
    let n = n_points;
    let h = 2.0 * std::f64::consts::PI / n as f64;
    let diag: Vec<f64> = (0..n).map(|i| 2.0 / (h * h) + f(i as f64 * h)).collect();
    let off = vec![-1.0 / (h * h); n - 1];
    let corner = -1.0 / (h * h);
    let raw = {
        let mut a = vec![vec![0.0; n]; n];
        for i in 0..n {
            a[i][i] = diag[i];
            a[i][(i + 1) % n] = corner;
            a[(i + 1) % n][i] = corner;
        }
        let (d, o) = periodic::householder_tridiag(a);
        lowest_eigs_tridiag(&d, &o, count)
    };
    let mut vectors = Vec::with_capacity(count);
    for k in 0..count {
        let mut v = periodic::periodic_inverse_iteration(&diag, &off, corner, raw[k]);
        // normalize: sum v^2 h = 1
        let norm = (v.iter().map(|x| x * x).sum::<f64>() * h).sqrt();
        for x in &mut v {
            *x /= norm;
        }
        vectors.push(v);
    }
    Ok((values, vectors))
}

// ---------------------------------------------------------------------------
// Composed oracles
// ---------------------------------------------------------------------------

/// Default grid sizes.
const N_ANGULAR: usize = 700;
const N_PERIODIC: usize = 420;

/// Radial grid: target spacing ~0.025 Bohr radii, clamped.
fn radial_points(r_max_over_a: f64) -> usize {
    ((r_max_over_a / 0.025) as usize).clamp(3000, 42000)
}

/// Angular eigenvalues (lambda_1^2 for V1/V3, lambda_phi^2 for V4), plus
/// eigenfunction samples in the V4 case (usable as an external-mode table).
pub fn oracle_angular(
    spec: &PotentialSpec,
    count: usize,
) -> Result<(Vec<f64>, Option<Vec<Vec<f64>>>)> {
    spec.validate()?;
    match spec {
        PotentialSpec::V1 { k1, k2, s1, s2 } | PotentialSpec::V3 { k1, k2, s1, s2 } => {
            let (k1, k2) = (*k1, *k2);
            let (sa, sb) = (0.5 + s2.apply(k2), 0.5 + s1.apply(k1));
            let p = Sl1d {
                a: 0.0,
                b: std::f64::consts::FRAC_PI_2,
                q: Box::new(move |phi: f64| {
                    (k1 * k1 - 0.25) / phi.cos().powi(2) + (k2 * k2 - 0.25) / phi.sin().powi(2)
                }),
                left: Endpoint::RegularSingular { exponent: sa },
                right: Endpoint::RegularSingular { exponent: sb },
                n_points: N_ANGULAR,
            };
            Ok((sl_eigs(&p, count)?.values, None))
        }
        PotentialSpec::V4 { azimuthal, .. } => match azimuthal {
            AngularMode::Constant { gamma_sq } => {
                let g = *gamma_sq;
                let (vals, vecs) = periodic_eigs(&move |_phi: f64| g, count, N_PERIODIC)?;
                Ok((vals, Some(vecs)))
            }
            AngularMode::External { .. } => Err(Error::unsupported(
                "oracle_angular: external azimuthal mode supplies its own eigenpairs",
            )),
        },
        PotentialSpec::V2 { .. } => {
            Err(Error::domain("oracle_angular: V2 has no angular problem"))
        }
    }
}

/// Radial Coulomb-type solve: -u'' + [(s(s-1))/r^2 - 2/(a r)] u = (2ME/hbar^2) u
/// on (0, r_max), truncated with a Dirichlet cap.
fn radial_coulomb_energies(
    c: &Constants,
    s_exp: f64,
    r_max: f64,
    count: usize,
    n_points: usize,
) -> Result<Vec<f64>> {
    let two_m_over_h2 = 2.0 * c.mass / (c.hbar * c.hbar);
    let p = Sl1d {
        a: 0.0,
        b: r_max,
        q: Box::new(move |r: f64| (s_exp * (s_exp - 1.0)) / (r * r) - two_m_over_h2 * c.alpha0 / r),
        left: Endpoint::RegularSingular { exponent: s_exp },
        right: Endpoint::Dirichlet,
        n_points,
    };
    let eps = sl_eigs(&p, count)?;
    Ok(eps.values.iter().map(|e| e * c.hbar * c.hbar / (2.0 * c.mass)).collect())
}

/// Oscillator-type parabolic solve at fixed omega:
/// -u'' + [(s(s-1))/x^2 + (M omega / hbar)^2 x^2] u = (2M sigma/hbar^2) u.
fn parabolic_sigma(
    c: &Constants,
    s_exp: f64,
    omega: f64,
    index: usize,
    n_points: usize,
) -> Result<f64> {
    let scale = c.mass * omega / c.hbar;
    let x_max = (80.0 / scale).sqrt();
    let p = Sl1d {
        a: 0.0,
        b: x_max,
        q: Box::new(move |x: f64| (s_exp * (s_exp - 1.0)) / (x * x) + (scale * x).powi(2)),
        left: Endpoint::RegularSingular { exponent: s_exp },
        right: Endpoint::Dirichlet,
        n_points,
    };
    let eps = sl_eigs(&p, index + 1)?;
    Ok(eps.values[index] * c.hbar * c.hbar / (2.0 * c.mass))
}

/// Illinois (modified false position) root finder on a bracket with
/// g(lo) < 0 < g(hi); deterministic, ~15 evaluations to 1e-13 relative.
fn illinois<G: FnMut(f64) -> Result<f64>>(
    mut g: G,
    mut lo: f64,
    mut hi: f64,
    mut flo: f64,
    mut fhi: f64,
) -> Result<f64> {
    let mut last_side = 0i8;
    for _ in 0..80 {
        let x = hi - fhi * (hi - lo) / (fhi - flo);
        let fx = g(x)?;
        if fx > 0.0 {
            hi = x;
            fhi = fx;
            if last_side == 1 {
                flo *= 0.5;
            }
            last_side = 1;
        } else {
            lo = x;
            flo = fx;
            if last_side == -1 {
                fhi *= 0.5;
            }
            last_side = -1;
        }
        if (hi - lo).abs() <= 1e-13 * hi.abs().max(lo.abs()) {
            break;
        }
    }
    Ok(0.5 * (lo + hi))
}

/// Solve the parabolic self-consistency sigma_xi(n1, E) + sigma_eta(n2, E)
/// = 2 alpha0 for E < 0 by root-finding in omega = sqrt(-2E/M).
fn parabolic_level(
    c: &Constants,
    s_xi: f64,
    s_eta: f64,
    n1: usize,
    n2: usize,
    n_points: usize,
) -> Result<f64> {
    let target = 2.0 * c.alpha0;
    let g = |omega: f64| -> Result<f64> {
        Ok(parabolic_sigma(c, s_xi, omega, n1, n_points)?
            + parabolic_sigma(c, s_eta, omega, n2, n_points)?
            - target)
    };
    // bracket around the hydrogenic scale
    let w0 = c.mass * c.alpha0 * c.alpha0 / (c.hbar * c.hbar * c.hbar);
    let mut lo = w0 * 0.01;
    let mut hi = w0 * 4.0;
    let mut flo = g(lo)?;
    let mut fhi = g(hi)?;
    while flo > 0.0 {
        lo *= 0.25;
        flo = g(lo)?;
        if lo < w0 * 1e-12 {
            return Err(Error::domain("parabolic oracle: bracket failure (low)"));
        }
    }
    while fhi < 0.0 {
        hi *= 2.0;
        fhi = g(hi)?;
        if hi > w0 * 1e6 {
            return Err(Error::domain("parabolic oracle: bracket failure (high)"));
        }
    }
    let w = illinois(g, lo, hi, flo, fhi)?;
    Ok(-0.5 * c.mass * w * w)
}

/// V2: 1D full-line oscillator-with-linear-term eigenvalue at fixed omega.
fn v2_sigma(c: &Constants, beta: f64, omega: f64, index: usize, n_points: usize) -> Result<f64> {
    let scale = c.mass * omega / c.hbar;
    let shift = 2.0 * beta.abs() / (c.mass * omega * omega);
    let l = (80.0 / scale).sqrt() + shift;
    let two_m_over_h2 = 2.0 * c.mass / (c.hbar * c.hbar);
    let half_m_w2 = 0.5 * c.mass * omega * omega;
    let p = Sl1d {
        a: -l,
        b: l,
        q: Box::new(move |x: f64| two_m_over_h2 * (2.0 * beta * x + half_m_w2 * x * x)),
        left: Endpoint::Dirichlet,
        right: Endpoint::Dirichlet,
        n_points,
    };
    let eps = sl_eigs(&p, index + 1)?;
    Ok(eps.values[index] * c.hbar * c.hbar / (2.0 * c.mass))
}

fn v2_level(
    c: &Constants,
    beta1: f64,
    beta2: f64,
    n1: usize,
    n2: usize,
    n_points: usize,
) -> Result<f64> {
    let target = 2.0 * c.alpha0;
    let g = |omega: f64| -> Result<f64> {
        Ok(v2_sigma(c, beta1, omega, n1, n_points)? + v2_sigma(c, beta2, omega, n2, n_points)?
            - target)
    };
    let w0 = c.mass * c.alpha0 * c.alpha0 / (c.hbar * c.hbar * c.hbar);
    let mut lo = w0 * 0.01;
    let mut hi = w0 * 8.0;
    let mut flo = g(lo)?;
    let mut fhi = g(hi)?;
    while flo > 0.0 {
        lo *= 0.25;
        flo = g(lo)?;
    }
    while fhi < 0.0 {
        hi *= 2.0;
        fhi = g(hi)?;
    }
    let w = illinois(g, lo, hi, flo, fhi)?;
    Ok(-0.5 * c.mass * w * w)
}

/// Spherical-type theta solve: -u'' + q_theta u = (Lambda + 1/4) u on (0, pi),
/// with the numerator f(theta) = lam_phi_sq + k1^2 cos(theta) - 1/4 over
/// sin^2(theta) (k1 = 0 reproduces the V1/V3 case with lam1_sq barrier).
fn theta_eigs(
    lam0_sq: f64,
    k1_sq_cos_coeff: f64,
    count: usize,
    n_points: usize,
) -> Result<Vec<f64>> {
    // endpoint exponents from the local barrier strengths
    let s0 = 0.5 + (lam0_sq + k1_sq_cos_coeff).max(0.0).sqrt();
    let spi = 0.5 + (lam0_sq - k1_sq_cos_coeff).max(0.0).sqrt();
    let p = Sl1d {
        a: 0.0,
        b: std::f64::consts::PI,
        q: Box::new(move |t: f64| {
            (lam0_sq + k1_sq_cos_coeff * t.cos() - 0.25) / t.sin().powi(2)
        }),
        left: Endpoint::RegularSingular { exponent: s0 },
        right: Endpoint::RegularSingular { exponent: spi },
        n_points,
    };
    // eigenvalues returned are Lambda + 1/4
    sl_eigs(&p, count).map(|e| e.values)
}

/// Run Coulomb-type radial solves for every effective exponent in `s_list`,
/// bounding the per-channel radial count by the hydrogenic monotonicity
/// E ~ -1/(m + s)^2, so only states that can enter the lowest `count`
/// distinct energies are computed.
fn compose_radial(c: &Constants, s_list: &[f64], count: usize) -> Result<Vec<f64>> {
    let a = c.bohr();
    let s_min = s_list.iter().cloned().fold(f64::INFINITY, f64::min);
    let mut energies = Vec::new();
    for &s in s_list {
        let m_count = (s_min + count as f64 + 0.75 - s).ceil();
        if m_count < 1.0 {
            continue;
        }
        let m_count = m_count as usize;
        let rmax_over_a = 40.0 * (s + m_count as f64);
        let n = radial_points(rmax_over_a);
        energies.extend(radial_coulomb_energies(c, s, rmax_over_a * a, m_count, n)?);
    }
    Ok(energies)
}

/// Pairs (n1, n2) with n1 + n2 = t, reduced by the xi/eta symmetry when the
/// two exponents coincide.
fn parabolic_pairs(t: usize, symmetric: bool) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for n1 in 0..=t {
        let n2 = t - n1;
        if symmetric && n2 > n1 {
            continue;
        }
        out.push((n1, n2));
    }
    out
}

/// The `count` lowest distinct bound energies of the potential, computed
/// with finite differences only.
pub fn oracle_spectrum(
    spec: &PotentialSpec,
    system: CoordinateSystem,
    c: &Constants,
    count: usize,
) -> Result<Vec<f64>> {
    spec.validate()?;
    c.validate()?;
    let mut energies: Vec<f64> = Vec::new();
    let n_channels = count + 1;
    const N_PAR: usize = 1500;
    match (spec, system) {
        (PotentialSpec::V1 { .. }, CoordinateSystem::Polar) => {
            let (l1sq, _) = oracle_angular(spec, n_channels)?;
            // 2D radial barrier is (lambda1^2/4 - 1/4)/rho^2
            let s_list: Vec<f64> =
                l1sq.iter().map(|v| 0.5 + 0.5 * v.max(0.0).sqrt()).collect();
            energies.extend(compose_radial(c, &s_list, count)?);
        }
        (PotentialSpec::V1 { k1, k2, s1, s2 }, CoordinateSystem::Parabolic) => {
            let s_xi = 0.5 + s1.apply(*k1);
            let s_eta = 0.5 + s2.apply(*k2);
            let symmetric = (s_xi - s_eta).abs() < 1e-14;
            for t in 0..count {
                for (n1, n2) in parabolic_pairs(t, symmetric) {
                    energies.push(parabolic_level(c, s_xi, s_eta, n1, n2, N_PAR)?);
                }
            }
        }
        (PotentialSpec::V2 { beta1, beta2 }, CoordinateSystem::Parabolic) => {
            for total in (0..2 * count).step_by(2) {
                energies.push(v2_level(c, *beta1, *beta2, total, 0, N_PAR)?);
            }
        }
        (PotentialSpec::V3 { .. }, CoordinateSystem::Spherical) => {
            let (l1sq, _) = oracle_angular(spec, n_channels)?;
            let mut s_list = Vec::new();
            for l1s in l1sq {
                for lam2sq in theta_eigs(l1s, 0.0, count, N_ANGULAR)? {
                    s_list.push(0.5 + lam2sq.max(0.0).sqrt());
                }
            }
            energies.extend(compose_radial(c, &s_list, count)?);
        }
        (PotentialSpec::V3 { .. }, CoordinateSystem::Parabolic) => {
            let (l1sq, _) = oracle_angular(spec, n_channels)?;
            for (j, l1s) in l1sq.iter().enumerate().take(count.div_ceil(2) + 1) {
                let s = 0.5 + l1s.max(0.0).sqrt();
                let t_max = count.saturating_sub(2 * j);
                for t in 0..t_max {
                    for (n1, n2) in parabolic_pairs(t, true) {
                        energies.push(parabolic_level(c, s, s, n1, n2, N_PAR)?);
                    }
                }
            }
        }
        (PotentialSpec::V4 { k1, .. }, CoordinateSystem::Spherical) => {
            let (lphisq, _) = oracle_angular(spec, n_channels)?;
            let mut s_list = Vec::new();
            for lps in dedupe(lphisq) {
                for lam1sq in theta_eigs(lps, k1 * k1, count, N_ANGULAR)? {
                    s_list.push(0.5 + lam1sq.max(0.0).sqrt());
                }
            }
            energies.extend(compose_radial(c, &s_list, count)?);
        }
        (PotentialSpec::V4 { k1, .. }, CoordinateSystem::Parabolic) => {
            let (lphisq, _) = oracle_angular(spec, n_channels)?;
            for (j, lps) in dedupe(lphisq).into_iter().enumerate() {
                if lps < k1 * k1 {
                    continue;
                }
                let s_xi = 0.5 + (lps - k1 * k1).sqrt();
                let s_eta = 0.5 + (lps + k1 * k1).sqrt();
                let symmetric = (s_xi - s_eta).abs() < 1e-14;
                let t_max = count.saturating_sub(j);
                for t in 0..t_max {
                    for (n1, n2) in parabolic_pairs(t, symmetric) {
                        energies.push(parabolic_level(c, s_xi, s_eta, n1, n2, N_PAR)?);
                        if !symmetric && n1 != n2 {
                            energies.push(parabolic_level(c, s_eta, s_xi, n1, n2, N_PAR)?);
                        }
                    }
                }
            }
        }
        _ => {
            return Err(Error::domain(
                "oracle_spectrum: unsupported potential/system combination",
            ))
        }
    }
    energies.sort_by(|a, b| a.partial_cmp(b).unwrap());
    let distinct = dedupe(energies);
    if distinct.len() < count {
        return Err(Error::domain("oracle_spectrum: not enough levels found"));
    }
    Ok(distinct[..count].to_vec())
}

fn dedupe(mut v: Vec<f64>) -> Vec<f64> {
    v.sort_by(|a, b| a.partial_cmp(b).unwrap());
    let mut out: Vec<f64> = Vec::new();
    for x in v {
        if out.last().map_or(true, |l| (x - l).abs() > 2e-5 * l.abs().max(1e-10)) {
            out.push(x);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::Sign;

    #[test]
    fn harmonic_oscillator_spectrum() {
        // -u'' + x^2 u on (-L, L): eigenvalues 1, 3, 5
        let p = Sl1d {
            a: -12.0,
            b: 12.0,
            q: Box::new(|x| x * x),
            left: Endpoint::Dirichlet,
            right: Endpoint::Dirichlet,
            n_points: 1200,
        };
        let e = sl_eigs(&p, 3).unwrap();
        for (k, want) in [1.0, 3.0, 5.0].iter().enumerate() {
            assert!(
                (e.values[k] - want).abs() <= 1e-6,
                "HO level {k}: {} vs {want}",
                e.values[k]
            );
        }
    }

    #[test]
    fn dirichlet_box() {
        let p = Sl1d {
            a: 0.0,
            b: std::f64::consts::PI,
            q: Box::new(|_| 0.0),
            left: Endpoint::Dirichlet,
            right: Endpoint::Dirichlet,
            n_points: 1000,
        };
        let e = sl_eigs(&p, 3).unwrap();
        for (k, want) in [1.0, 4.0, 9.0].iter().enumerate() {
            assert!(
                (e.values[k] - want).abs() <= 1e-8,
                "box level {k}: {} vs {want}",
                e.values[k]
            );
        }
    }

    #[test]
    fn hydrogen_radial() {
        // -u'' - (2/x) u on (0, 200): -1, -1/4
        let p = Sl1d {
            a: 0.0,
            b: 200.0,
            q: Box::new(|x| -2.0 / x),
            left: Endpoint::RegularSingular { exponent: 1.0 },
            right: Endpoint::Dirichlet,
            n_points: 16000,
        };
        let e = sl_eigs(&p, 2).unwrap();
        assert!((e.values[0] + 1.0).abs() <= 1e-5, "{}", e.values[0]);
        assert!((e.values[1] + 0.25).abs() <= 1e-5, "{}", e.values[1]);
    }

    #[test]
    fn angular_free_case() {
        // k1 = k2 = 1/2: eigenvalues (2n+2)^2 = 4, 16, 36
        let spec = PotentialSpec::V1 { k1: 0.5, k2: 0.5, s1: Sign::Plus, s2: Sign::Plus };
        let (vals, _) = oracle_angular(&spec, 3).unwrap();
        for (k, want) in [4.0, 16.0, 36.0].iter().enumerate() {
            assert!((vals[k] - want).abs() <= 1e-6, "angular {k}: {} vs {want}", vals[k]);
        }
    }

    #[test]
    fn angular_generic_k() {
        // THE oracle check: matches (2n + k1 + k2 + 1)^2 after extrapolation
        let spec = PotentialSpec::V3 { k1: 0.3, k2: 0.6, s1: Sign::Plus, s2: Sign::Plus };
        let (vals, _) = oracle_angular(&spec, 3).unwrap();
        for n in 0..3 {
            let want = (2.0 * n as f64 + 0.3 + 0.6 + 1.0).powi(2);
            assert!(
                (vals[n] - want).abs() <= 1e-6 * want,
                "angular {n}: {} vs {want}",
                vals[n]
            );
        }
    }

    #[test]
    fn periodic_constant_shift() {
        // F = 1: eigenvalues nu^2 + 1 = 1, 2, 2, 5, 5
        let spec =
            PotentialSpec::V4 { k1: 0.0, azimuthal: AngularMode::Constant { gamma_sq: 1.0 } };
        let (vals, vecs) = oracle_angular(&spec, 5).unwrap();
        let want = [1.0, 2.0, 2.0, 5.0, 5.0];
        for k in 0..5 {
            assert!((vals[k] - want[k]).abs() <= 1e-6, "periodic {k}: {}", vals[k]);
        }
        let vecs = vecs.unwrap();
        assert_eq!(vecs.len(), 5);
        // normalized: sum v^2 h = 1
        let h = 2.0 * std::f64::consts::PI / vecs[0].len() as f64;
        let norm: f64 = vecs[0].iter().map(|x| x * x).sum::<f64>() * h;
        assert!((norm - 1.0).abs() < 1e-12);
    }

    #[test]
    fn grid_convergence_slope() {
        // eigenvalue error ~ h^2 before extrapolation (slope 2.0 +/- 0.2)
        let exact = 1.0; // HO ground state
        let mut errs = Vec::new();
        for &n in &[200usize, 400, 800] {
            let p = Sl1d {
                a: -10.0,
                b: 10.0,
                q: Box::new(|x| x * x),
                left: Endpoint::Dirichlet,
                right: Endpoint::Dirichlet,
                n_points: n,
            };
            let (d, o) = build_tridiag(&p, n);
            let e = lowest_eigs_tridiag(&d, &o, 1)[0];
            errs.push((e - exact).abs());
        }
        let s1 = (errs[0] / errs[1]).log2();
        let s2 = (errs[1] / errs[2]).log2();
        assert!((s1 - 2.0).abs() <= 0.2, "slope {s1}");
        assert!((s2 - 2.0).abs() <= 0.2, "slope {s2}");
    }

    #[test]
    fn endpoint_offset_stability() {
        // halving the grid (and with it the endpoint offset) moves the
        // extrapolated angular eigenvalue by < 1e-6
        let spec = PotentialSpec::V3 { k1: 0.3, k2: 0.6, s1: Sign::Plus, s2: Sign::Plus };
        let run = |n: usize| {
            let p = Sl1d {
                a: 0.0,
                b: std::f64::consts::FRAC_PI_2,
                q: Box::new(move |phi: f64| {
                    (0.3f64 * 0.3 - 0.25) / phi.cos().powi(2)
                        + (0.6f64 * 0.6 - 0.25) / phi.sin().powi(2)
                }),
                left: Endpoint::RegularSingular { exponent: 0.5 + 0.6 },
                right: Endpoint::RegularSingular { exponent: 0.5 + 0.3 },
                n_points: n,
            };
            sl_eigs(&p, 1).unwrap().values[0]
        };
        let _ = &spec;
        let a = run(700);
        let b = run(1400);
        assert!((a - b).abs() <= 1e-6, "offset stability {a} vs {b}");
    }

    #[test]
    fn v1_oracle_vs_closed_form_coulomb() {
        let spec = PotentialSpec::V1 { k1: 0.5, k2: 0.5, s1: Sign::Plus, s2: Sign::Plus };
        let c = Constants::natural();
        let e = oracle_spectrum(&spec, CoordinateSystem::Polar, &c, 3).unwrap();
        for (k, n) in [1.5f64, 2.5, 3.5].iter().enumerate() {
            let want = -1.0 / (2.0 * n * n);
            assert!(
                ((e[k] - want) / want).abs() <= 1e-5,
                "V1 level {k}: {} vs {want}",
                e[k]
            );
        }
    }
}
