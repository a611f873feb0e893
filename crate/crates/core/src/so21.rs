//! The spectrum-generating algebra: differential realization of T1/T2/T3,
//! Baker-Campbell-Hausdorff coefficient maps, commutator residual checks,
//! and the closed-form radial kernel.
//!
//! Generators (acting on functions of x > 0):
//!
//! T1 = -(hbar^2/2M)(d^2/dx^2 - mu(mu-1)/x^2),
//! T2 = -(i/2)(x d/dx + 1/2),
//! T3 = (M/4 hbar^2) x^2,
//!
//! with [T1,T2] = -iT1, [T2,T3] = -iT3, [T1,T3] = -iT2.

use crate::error::{Error, Result};
use crate::specfun::bessel_i;
use num_complex::Complex64;
use std::collections::BTreeMap;

const I: Complex64 = Complex64::new(0.0, 1.0);

/// Parameters of the radial kernel.
#[derive(Debug, Clone, Copy)]
pub struct KernelParams {
    /// Barrier index; the barrier strength coefficient is mu(mu-1).
    pub mu: f64,
    /// Oscillator frequency, > 0.
    pub omega: f64,
    pub hbar: f64,
    pub mass: f64,
}

impl KernelParams {
    pub fn new(mu: f64, omega: f64, hbar: f64, mass: f64) -> Result<Self> {
        let lambda = mu - 0.5;
        if lambda <= -1.0 {
            return Err(Error::domain(format!(
                "kernel params: lambda = mu - 1/2 = {lambda} <= -1 (non-normalizable branch)"
            )));
        }
        if omega <= 0.0 || hbar <= 0.0 || mass <= 0.0 {
            return Err(Error::domain("kernel params: omega, hbar, mass must be > 0"));
        }
        Ok(KernelParams { mu, omega, hbar, mass })
    }

    /// Bessel order lambda = mu - 1/2.
    pub fn lambda(&self) -> f64 {
        self.mu - 0.5
    }
}

/// Coefficients of the split
/// exp(-iS/hbar (T1 + 2 hbar^2 w^2 T3)) = exp(-ia T3) exp(-ib T2) exp(-ic T1).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BchSplit {
    /// 2 hbar w tan(wS)   (units of hbar w)
    pub a: f64,
    /// 2 ln cos(wS)       (dimensionless)
    pub b: f64,
    /// tan(wS) / (hbar w) (units of 1/(hbar w))
    pub c: f64,
}

/// Coefficients of the merge
/// exp(-i alpha T3) exp(-i beta T2) exp(-i gamma T1) = exp(-ic T1) exp(tau T3).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BchMerge {
    pub alpha: Complex64,
    pub beta: Complex64,
    pub gamma: Complex64,
    pub tau: Complex64,
    pub c: f64,
}

/// Split coefficients per a = 2 hbar w tan(wS), b = 2 ln cos(wS),
/// c = tan(wS)/(hbar w).
pub fn bch_split(omega: f64, s: f64, hbar: f64) -> Result<BchSplit> {
    if omega <= 0.0 || s <= 0.0 || hbar <= 0.0 {
        return Err(Error::domain("bch_split: omega, S, hbar must be > 0"));
    }
    let ws = omega * s;
    if ws.cos().abs() < 1e-12 {
        return Err(Error::singularity(format!("bch_split: tangent pole at wS = {ws}")));
    }
    let t = ws.tan();
    // b is real with e^b = cos^2(wS)
    Ok(BchSplit { a: 2.0 * hbar * omega * t, b: ws.cos().powi(2).ln(), c: t / (hbar * omega) })
}

/// Merge coefficients per alpha = i tau / (1 - i tau c / 2),
/// beta = 2 Ln(1 - i tau c / 2), gamma = c / (1 - i tau c / 2).
pub fn bch_merge(tau: Complex64, c: f64) -> Result<BchMerge> {
    let d = Complex64::new(1.0, 0.0) - I * tau * c * 0.5;
    if d.norm() < 1e-12 {
        return Err(Error::singularity("bch_merge: 1 - i tau c / 2 = 0"));
    }
    Ok(BchMerge { alpha: I * tau / d, beta: 2.0 * d.ln(), gamma: Complex64::new(c, 0.0) / d, tau, c })
}

/// Generator pair for commutator checks.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GeneratorPair {
    T1T2,
    T2T3,
    T1T3,
}

/// Terms c * x^p with an implicit factor e^{-x^2/2}; closed under the
/// generators, so commutators evaluate exactly.
type Poly = BTreeMap<i64, Complex64>;

fn poly_add(p: &mut Poly, pow: i64, c: Complex64) {
    *p.entry(pow).or_insert(Complex64::new(0.0, 0.0)) += c;
}

/// d/dx of c x^p e^{-x^2/2} = (c p x^{p-1} - c x^{p+1}) e^{-x^2/2}
fn poly_ddx(p: &Poly) -> Poly {
    let mut out = Poly::new();
    for (&pow, &c) in p {
        if pow != 0 {
            poly_add(&mut out, pow - 1, c * pow as f64);
        }
        poly_add(&mut out, pow + 1, -c);
    }
    out
}

fn poly_shift(p: &Poly, dp: i64, scale: Complex64) -> Poly {
    p.iter().map(|(&pow, &c)| (pow + dp, c * scale)).collect()
}

fn poly_eval(p: &Poly, x: f64) -> Complex64 {
    let mut s = Complex64::new(0.0, 0.0);
    for (&pow, &c) in p {
        s += c * x.powi(pow as i32);
    }
    s * (-0.5 * x * x).exp()
}

struct Generators {
    mu: f64,
    hbar: f64,
    mass: f64,
}

impl Generators {
    fn t1(&self, f: &Poly) -> Poly {
        let d2 = poly_ddx(&poly_ddx(f));
        let mut out = poly_shift(&d2, 0, Complex64::new(-self.hbar * self.hbar / (2.0 * self.mass), 0.0));
        let barrier = self.mu * (self.mu - 1.0);
        if barrier != 0.0 {
            let b = poly_shift(
                f,
                -2,
                Complex64::new(barrier * self.hbar * self.hbar / (2.0 * self.mass), 0.0),
            );
            for (pow, c) in b {
                poly_add(&mut out, pow, c);
            }
        }
        out
    }

    fn t2(&self, f: &Poly) -> Poly {
        let xd = poly_shift(&poly_ddx(f), 1, Complex64::new(1.0, 0.0));
        let mut out = poly_shift(&xd, 0, -I * 0.5);
        for (pow, c) in poly_shift(f, 0, -I * 0.25) {
            poly_add(&mut out, pow, c);
        }
        out
    }

    fn t3(&self, f: &Poly) -> Poly {
        poly_shift(f, 2, Complex64::new(self.mass / (4.0 * self.hbar * self.hbar), 0.0))
    }
}

/// |([A,B] - expected) f_s(x)| with f_s(x) = x^s e^{-x^2/2}, evaluated with
/// closed-form derivatives.
pub fn commutator_residual(pair: GeneratorPair, mu: f64, s: u32, x: f64) -> Result<f64> {
    if x <= 0.0 {
        return Err(Error::domain("commutator_residual: x must be > 0"));
    }
    if s < 2 && mu * (mu - 1.0) != 0.0 {
        return Err(Error::domain("commutator_residual: need s >= 2 when the barrier is present"));
    }
    let g = Generators { mu, hbar: 1.0, mass: 1.0 };
    let mut f = Poly::new();
    poly_add(&mut f, s as i64, Complex64::new(1.0, 0.0));

    let apply = |which: u8, p: &Poly| -> Poly {
        match which {
            1 => g.t1(p),
            2 => g.t2(p),
            _ => g.t3(p),
        }
    };
    let (a, b, expected): (u8, u8, u8) = match pair {
        GeneratorPair::T1T2 => (1, 2, 1),
        GeneratorPair::T2T3 => (2, 3, 3),
        GeneratorPair::T1T3 => (1, 3, 2),
    };
    let ab = apply(a, &apply(b, &f));
    let ba = apply(b, &apply(a, &f));
    let exp_f = apply(expected, &f);
    let mut comm = ab;
    for (pow, c) in ba {
        poly_add(&mut comm, pow, -c);
    }
    for (pow, c) in poly_shift(&exp_f, 0, I) {
        // [A,B] - (-i T_expected) = [A,B] + i T_expected
        poly_add(&mut comm, pow, c);
    }
    Ok(poly_eval(&comm, x).norm())
}

/// The closed-form radial kernel at complex time S (Im S <= 0):
///
/// K = (M w / (i hbar sin wS)) sqrt(x x') exp[i M w (x^2 + x'^2) cot(wS) / 2 hbar]
///     I_lambda(M w x x' / (i hbar sin wS)).
pub fn kernel_complex_time(
    x: f64,
    xp: f64,
    s: Complex64,
    params: &KernelParams,
) -> Result<Complex64> {
    if x <= 0.0 || xp <= 0.0 {
        return Err(Error::domain("kernel: coordinates must be > 0"));
    }
    if s.im > 1e-14 {
        return Err(Error::domain("kernel: Im S must be <= 0 (forward analytic domain)"));
    }
    let ws = s * params.omega;
    let sin = ws.sin();
    if sin.norm() < 1e-12 {
        return Err(Error::singularity(format!("kernel: caustic, sin(wS) = 0 at wS = {ws}")));
    }
    let cot = ws.cos() / sin;
    let mw = params.mass * params.omega;
    let pref = mw / (I * params.hbar * sin) * (x * xp).sqrt();
    let phase = (I * mw / (2.0 * params.hbar) * (x * x + xp * xp) * cot).exp();
    let arg = mw * x * xp / (I * params.hbar * sin);
    Ok(pref * phase * bessel_i(params.lambda(), arg)? * Complex64::new(1.0, 0.0))
}

/// Real-time kernel of the paper; S > 0 with wS not a multiple of pi.
pub fn kernel(x: f64, xp: f64, s: f64, params: &KernelParams) -> Result<Complex64> {
    if s <= 0.0 {
        return Err(Error::domain("kernel: S must be > 0"));
    }
    kernel_complex_time(x, xp, Complex64::new(s, 0.0), params)
}

// ---------------------------------------------------------------------------
// 2x2 representation utilities (shared with the validation suite)
// ---------------------------------------------------------------------------

/// 2x2 complex matrix, row-major.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Mat2(pub [Complex64; 4]);

impl Mat2 {
    pub fn zero() -> Self {
        Mat2([Complex64::new(0.0, 0.0); 4])
    }
    pub fn id() -> Self {
        let mut m = Self::zero();
        m.0[0] = Complex64::new(1.0, 0.0);
        m.0[3] = Complex64::new(1.0, 0.0);
        m
    }
    pub fn mul(&self, o: &Mat2) -> Mat2 {
        let a = &self.0;
        let b = &o.0;
        Mat2([
            a[0] * b[0] + a[1] * b[2],
            a[0] * b[1] + a[1] * b[3],
            a[2] * b[0] + a[3] * b[2],
            a[2] * b[1] + a[3] * b[3],
        ])
    }
    pub fn scale(&self, c: Complex64) -> Mat2 {
        Mat2([self.0[0] * c, self.0[1] * c, self.0[2] * c, self.0[3] * c])
    }
    pub fn add(&self, o: &Mat2) -> Mat2 {
        Mat2([
            self.0[0] + o.0[0],
            self.0[1] + o.0[1],
            self.0[2] + o.0[2],
            self.0[3] + o.0[3],
        ])
    }
    pub fn sub(&self, o: &Mat2) -> Mat2 {
        self.add(&o.scale(Complex64::new(-1.0, 0.0)))
    }
    pub fn norm(&self) -> f64 {
        self.0.iter().map(|c| c.norm_sqr()).sum::<f64>().sqrt()
    }

    /// exp(M) for 2x2 via the trace split: with M0 = M - (tr/2) I and
    /// theta^2 = -det(M0), exp(M) = e^{tr/2} (cosh th I + sinh th / th M0).
    pub fn expm(&self) -> Mat2 {
        let tr_half = (self.0[0] + self.0[3]) * 0.5;
        let m0 = self.sub(&Mat2::id().scale(tr_half));
        let det0 = m0.0[0] * m0.0[3] - m0.0[1] * m0.0[2];
        let theta = (-det0).sqrt();
        let (ch, shot) = if theta.norm() < 1e-8 {
            // cosh th ~ 1 + th^2/2, sinh th / th ~ 1 + th^2/6
            let t2 = theta * theta;
            (Complex64::new(1.0, 0.0) + t2 * 0.5, Complex64::new(1.0, 0.0) + t2 / 6.0)
        } else {
            (theta.cosh(), theta.sinh() / theta)
        };
        Mat2::id().scale(ch).add(&m0.scale(shot)).scale(tr_half.exp())
    }
}

/// The 2x2 realization: T1 = a n_-, T3 = b n_+, T2 = -(i/2) h with ab = 1/2.
pub fn rep2() -> (Mat2, Mat2, Mat2) {
    let zero = Complex64::new(0.0, 0.0);
    let one = Complex64::new(1.0, 0.0);
    let t1 = Mat2([zero, zero, one * 0.5, zero]);
    let t3 = Mat2([zero, one, zero, zero]);
    let t2 = Mat2([-I * 0.5, zero, zero, I * 0.5]);
    (t1, t2, t3)
}

/// Defect of Eq. (split): || exp(-iS/hbar (T1 + 2 hbar^2 w^2 T3))
///  - exp(-ia T3) exp(-ib T2) exp(-ic T1) || in the 2x2 representation.
pub fn bch_split_matrix_residual(omega: f64, s: f64, hbar: f64) -> Result<f64> {
    let (t1, t2, t3) = rep2();
    let co = bch_split(omega, s, hbar)?;
    let gen = t1.add(&t3.scale(Complex64::new(2.0 * hbar * hbar * omega * omega, 0.0)));
    let lhs = gen.scale(-I * s / hbar).expm();
    let rhs = t3
        .scale(-I * co.a)
        .expm()
        .mul(&t2.scale(-I * co.b).expm())
        .mul(&t1.scale(-I * co.c).expm());
    Ok(lhs.sub(&rhs).norm())
}

/// Defect of Eq. (merge) in the 2x2 representation.
pub fn bch_merge_matrix_residual(tau: Complex64, c: f64) -> Result<f64> {
    let (t1, t2, t3) = rep2();
    let co = bch_merge(tau, c)?;
    let lhs = t3
        .scale(-I * co.alpha)
        .expm()
        .mul(&t2.scale(-I * co.beta).expm())
        .mul(&t1.scale(-I * co.gamma).expm());
    let rhs = t1.scale(-I * c).expm().mul(&t3.scale(tau).expm());
    Ok(lhs.sub(&rhs).norm())
}
