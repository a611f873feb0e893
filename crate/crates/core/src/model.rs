//! Problem definitions: constants, potential specifications, coordinate
//! systems, quantum-number containers, derived scales, and the
//! Kustaanheimo-Stiefel map.

use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};

/// Physical scales; all strictly positive.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Constants {
    pub hbar: f64,
    pub mass: f64,
    pub alpha0: f64,
}

impl Constants {
    pub fn new(hbar: f64, mass: f64, alpha0: f64) -> Result<Self> {
        let c = Constants { hbar, mass, alpha0 };
        c.validate()?;
        Ok(c)
    }

    pub fn natural() -> Self {
        Constants { hbar: 1.0, mass: 1.0, alpha0: 1.0 }
    }

    pub fn validate(&self) -> Result<()> {
        if self.hbar > 0.0 && self.mass > 0.0 && self.alpha0 > 0.0 {
            Ok(())
        } else {
            Err(Error::domain("constants must be strictly positive"))
        }
    }

    /// Bohr radius a = hbar^2 / (M alpha0).
    pub fn bohr(&self) -> f64 {
        self.hbar * self.hbar / (self.mass * self.alpha0)
    }
}

/// Sign branch of an angular barrier index (+k or -k).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn apply(self, k: f64) -> f64 {
        match self {
            Sign::Plus => k,
            Sign::Minus => -k,
        }
    }
}

/// Azimuthal sector of V4: either the constant gamma^2 (Hartmann case) or an
/// externally supplied table of angular eigenpairs for a general F(tan phi).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "mode", rename_all = "lowercase", deny_unknown_fields)]
pub enum AngularMode {
    Constant { gamma_sq: f64 },
    External { table: AngularTable },
}

/// Angular eigenpairs (lambda_phi^2, eigenfunction samples on a uniform
/// phi-grid over [0, 2 pi)) for V4's general azimuthal potential.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AngularTable {
    pub entries: Vec<AngularEigenpair>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AngularEigenpair {
    pub lambda_phi_sq: f64,
    /// Samples of the normalized eigenfunction at phi_j = 2 pi j / n.
    pub samples: Vec<f64>,
}

impl AngularTable {
    /// Linear periodic interpolation of entry `idx` at angle phi.
    pub fn eval(&self, idx: usize, phi: f64) -> Result<f64> {
        let e = self
            .entries
            .get(idx)
            .ok_or_else(|| Error::domain(format!("angular table: no entry {idx}")))?;
        let n = e.samples.len();
        if n < 4 {
            return Err(Error::config("angular table entry needs >= 4 samples"));
        }
        let tau = 2.0 * std::f64::consts::PI;
        let t = phi.rem_euclid(tau) / tau * n as f64;
        let j = t.floor() as usize % n;
        let frac = t - t.floor();
        Ok(e.samples[j] * (1.0 - frac) + e.samples[(j + 1) % n] * frac)
    }
}

/// Tagged description of the four potential families.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "lowercase", deny_unknown_fields)]
pub enum PotentialSpec {
    V1 { k1: f64, k2: f64, s1: Sign, s2: Sign },
    V2 { beta1: f64, beta2: f64 },
    V3 { k1: f64, k2: f64, s1: Sign, s2: Sign },
    V4 { k1: f64, azimuthal: AngularMode },
}

impl PotentialSpec {
    pub fn validate(&self) -> Result<()> {
        match self {
            PotentialSpec::V1 { k1, k2, s1, s2 } | PotentialSpec::V3 { k1, k2, s1, s2 } => {
                if *k1 <= 0.0 || *k2 <= 0.0 {
                    return Err(Error::domain("V1/V3: k1, k2 must be > 0"));
                }
                if (*s1 == Sign::Minus && *k1 >= 1.0) || (*s2 == Sign::Minus && *k2 >= 1.0) {
                    return Err(Error::domain(
                        "V1/V3: minus branch requires k < 1 (normalizability)",
                    ));
                }
                Ok(())
            }
            PotentialSpec::V2 { beta1, beta2 } => {
                if beta1.is_finite() && beta2.is_finite() {
                    Ok(())
                } else {
                    Err(Error::domain("V2: beta1, beta2 must be finite"))
                }
            }
            PotentialSpec::V4 { k1, azimuthal } => {
                if *k1 < 0.0 {
                    return Err(Error::domain("V4: k1 must be >= 0"));
                }
                if let AngularMode::Constant { gamma_sq } = azimuthal {
                    if *gamma_sq < 0.0 {
                        return Err(Error::domain("V4: gamma^2 must be >= 0"));
                    }
                }
                Ok(())
            }
        }
    }
}

/// Separating coordinate system.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CoordinateSystem {
    Parabolic,
    Polar,
    Spherical,
}

/// Discrete state labels per coordinate system; nu is a signed integer.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "snake_case")]
pub enum QuantumNumbers {
    Parabolic2D { n1: u32, n2: u32 },
    Polar2D { m: u32, n: u32 },
    Parabolic3D { n1: u32, n2: u32, n: u32 },
    Spherical3D { l: u32, m: u32, n: u32 },
    V4Parabolic { n1: u32, n2: u32, nu: i32 },
    V4Spherical { l: u32, n: u32, nu: i32 },
}

impl QuantumNumbers {
    /// Flat list of the labels in declaration order, for CSV emission.
    pub fn labels(&self) -> Vec<(&'static str, i64)> {
        match *self {
            QuantumNumbers::Parabolic2D { n1, n2 } => {
                vec![("n1", n1 as i64), ("n2", n2 as i64)]
            }
            QuantumNumbers::Polar2D { m, n } => vec![("m", m as i64), ("n", n as i64)],
            QuantumNumbers::Parabolic3D { n1, n2, n } => {
                vec![("n1", n1 as i64), ("n2", n2 as i64), ("n", n as i64)]
            }
            QuantumNumbers::Spherical3D { l, m, n } => {
                vec![("l", l as i64), ("m", m as i64), ("n", n as i64)]
            }
            QuantumNumbers::V4Parabolic { n1, n2, nu } => {
                vec![("n1", n1 as i64), ("n2", n2 as i64), ("nu", nu as i64)]
            }
            QuantumNumbers::V4Spherical { l, n, nu } => {
                vec![("l", l as i64), ("n", n as i64), ("nu", nu as i64)]
            }
        }
    }
}

/// Continuum state labels: momentum (> 0) and, for parabolic systems, the
/// real separation parameter.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ContinuumLabels {
    pub momentum: f64,
    pub separation: f64,
}

impl ContinuumLabels {
    pub fn energy(&self, c: &Constants) -> f64 {
        c.hbar * c.hbar * self.momentum * self.momentum / (2.0 * c.mass)
    }
}

/// Derived scales at a bound-state energy E < 0.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DerivedScales {
    /// omega = sqrt(-2E/M)
    pub omega: f64,
    /// Coulomb parameter p = -alpha0 / (hbar omega)
    pub p: f64,
    /// Bohr radius a = hbar^2/(M alpha0)
    pub bohr: f64,
}

/// omega, p and a at energy E < 0.
pub fn derived_scales(c: &Constants, e: f64) -> Result<DerivedScales> {
    c.validate()?;
    if e >= 0.0 {
        return Err(Error::domain(format!("derived_scales: E = {e} must be < 0")));
    }
    let omega = (-2.0 * e / c.mass).sqrt();
    Ok(DerivedScales { omega, p: -c.alpha0 / (c.hbar * omega), bohr: c.bohr() })
}

/// The Kustaanheimo-Stiefel surjection R^4 -> R^3 (rows 1-3 of the matrix
/// map x = A(u) u):
///
/// x1 = 2(u1 u3 + u2 u4), x2 = 2(u2 u3 - u1 u4), x3 = u3^2 + u4^2 - u1^2 - u2^2.
pub fn ks_map(u: [f64; 4]) -> [f64; 3] {
    let [u1, u2, u3, u4] = u;
    [
        2.0 * (u1 * u3 + u2 * u4),
        2.0 * (u2 * u3 - u1 * u4),
        u3 * u3 + u4 * u4 - u1 * u1 - u2 * u2,
    ]
}

/// Potential energy at a Cartesian point (2 components for V1/V2, 3 for V3/V4).
pub fn potential_value(spec: &PotentialSpec, c: &Constants, point: &[f64]) -> Result<f64> {
    spec.validate()?;
    c.validate()?;
    match spec {
        PotentialSpec::V1 { k1, k2, .. } => {
            let [x1, x2] = two(point)?;
            let rho = x1.hypot(x2);
            if rho == 0.0 || rho + x1 == 0.0 || rho - x1 == 0.0 {
                return Err(Error::singularity("V1: point on the singular set"));
            }
            Ok(-c.alpha0 / rho
                + c.hbar * c.hbar / (4.0 * c.mass * rho)
                    * ((k1 * k1 - 0.25) / (rho + x1) + (k2 * k2 - 0.25) / (rho - x1)))
        }
        PotentialSpec::V2 { beta1, beta2 } => {
            let [x1, x2] = two(point)?;
            let rho = x1.hypot(x2);
            if rho == 0.0 {
                return Err(Error::singularity("V2: origin is singular"));
            }
            Ok(-c.alpha0 / rho + (beta1 * (rho + x1).sqrt() + beta2 * (rho - x1).sqrt()) / rho)
        }
        PotentialSpec::V3 { k1, k2, .. } => {
            let [x1, x2, x3] = three(point)?;
            let r = (x1 * x1 + x2 * x2 + x3 * x3).sqrt();
            if r == 0.0 || x1 == 0.0 || x2 == 0.0 {
                return Err(Error::singularity("V3: point on the singular set"));
            }
            Ok(-c.alpha0 / r
                + c.hbar * c.hbar / (2.0 * c.mass)
                    * ((k1 * k1 - 0.25) / (x1 * x1) + (k2 * k2 - 0.25) / (x2 * x2)))
        }
        PotentialSpec::V4 { k1, azimuthal } => {
            let [x1, x2, x3] = three(point)?;
            let r = (x1 * x1 + x2 * x2 + x3 * x3).sqrt();
            let rho2 = x1 * x1 + x2 * x2;
            if r == 0.0 || rho2 == 0.0 {
                return Err(Error::singularity("V4: point on the singular set"));
            }
            let f = match azimuthal {
                AngularMode::Constant { gamma_sq } => *gamma_sq,
                AngularMode::External { .. } => {
                    return Err(Error::unsupported(
                        "V4 external azimuthal mode supplies spectral data only; \
                         the pointwise F is not available",
                    ))
                }
            };
            Ok(-c.alpha0 / r
                + c.hbar * c.hbar / (2.0 * c.mass * rho2) * (k1 * k1 * x3 / r + f))
        }
    }
}

fn two(point: &[f64]) -> Result<[f64; 2]> {
    match point {
        [a, b] => Ok([*a, *b]),
        _ => Err(Error::domain("expected a 2D point")),
    }
}

fn three(point: &[f64]) -> Result<[f64; 3]> {
    match point {
        [a, b, c] => Ok([*a, *b, *c]),
        _ => Err(Error::domain("expected a 3D point")),
    }
}
