//! Closed-form bound-state energies, separation constants, the V2 cubic
//! frequency equation, and level enumeration.

use crate::error::{Error, Result};
use crate::model::{AngularMode, Constants, CoordinateSystem, PotentialSpec, QuantumNumbers};

/// Separation constants attached to an energy level. Fields are populated
/// per potential/system; `n_principal` is always set.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct SeparationConstants {
    pub lambda1: Option<f64>,
    pub lambda2: Option<f64>,
    pub lambda_plus: Option<f64>,
    pub lambda_minus: Option<f64>,
    pub lambda_phi: Option<f64>,
    pub n_principal: f64,
}

/// One bound level: energy, representative quantum numbers, separation
/// constants and (when enumerated) the in-family degeneracy.
#[derive(Debug, Clone, PartialEq)]
pub struct EnergyLevel {
    pub energy: f64,
    pub qn: QuantumNumbers,
    pub sep: SeparationConstants,
    pub degeneracy: usize,
}

fn coulomb_energy(c: &Constants, n: f64) -> f64 {
    -c.mass * c.alpha0 * c.alpha0 / (2.0 * c.hbar * c.hbar * n * n)
}

/// Angular separation constants for the angular quantum number alone.
pub fn angular_constants(spec: &PotentialSpec, angular_qn: i64) -> Result<SeparationConstants> {
    spec.validate()?;
    let mut sep = SeparationConstants::default();
    match spec {
        PotentialSpec::V1 { k1, k2, s1, s2 } => {
            if angular_qn < 0 {
                return Err(Error::domain("V1 angular qn must be >= 0"));
            }
            let lam = angular_qn as f64 + 0.5 * (1.0 + s1.apply(*k1) + s2.apply(*k2));
            if lam <= 0.0 {
                return Err(Error::domain(format!("V1: lambda = {lam} <= 0")));
            }
            sep.lambda1 = Some(2.0 * lam);
            sep.lambda2 = Some(lam);
            Ok(sep)
        }
        PotentialSpec::V3 { k1, k2, s1, s2 } => {
            if angular_qn < 0 {
                return Err(Error::domain("V3 angular qn must be >= 0"));
            }
            let l1 = 2.0 * angular_qn as f64 + s1.apply(*k1) + s2.apply(*k2) + 1.0;
            if l1 <= 0.0 {
                return Err(Error::domain(format!("V3: lambda1 = {l1} <= 0")));
            }
            sep.lambda1 = Some(l1);
            Ok(sep)
        }
        PotentialSpec::V4 { k1, azimuthal } => {
            let lphi_sq = lambda_phi_sq(azimuthal, angular_qn)?;
            if lphi_sq < k1 * k1 {
                return Err(Error::domain(format!(
                    "V4: lambda_phi^2 = {lphi_sq} < k1^2, complex index"
                )));
            }
            sep.lambda_phi = Some(lphi_sq.sqrt());
            sep.lambda_minus = Some((lphi_sq - k1 * k1).sqrt());
            sep.lambda_plus = Some((lphi_sq + k1 * k1).sqrt());
            Ok(sep)
        }
        PotentialSpec::V2 { .. } => Err(Error::domain("V2 has no angular separation constant")),
    }
}

/// lambda_phi^2 for the azimuthal label nu: nu^2 + gamma^2 in the constant
/// case, a table lookup (by |nu| index) in the external case.
pub fn lambda_phi_sq(mode: &AngularMode, nu: i64) -> Result<f64> {
    match mode {
        AngularMode::Constant { gamma_sq } => Ok((nu * nu) as f64 + gamma_sq),
        AngularMode::External { table } => {
            let idx = nu.unsigned_abs() as usize;
            table
                .entries
                .get(idx)
                .map(|e| e.lambda_phi_sq)
                .ok_or_else(|| Error::domain(format!("external angular table has no entry {idx}")))
        }
    }
}

/// The unique positive root of
/// omega^3 - (2 alpha0 / N hbar) omega^2 - 2 (beta1^2 + beta2^2)/(N M hbar) = 0.
pub fn v2_frequency(n_principal: u32, c: &Constants, beta1: f64, beta2: f64) -> Result<f64> {
    if n_principal == 0 {
        return Err(Error::domain("v2_frequency: N >= 1 required"));
    }
    c.validate()?;
    let n = n_principal as f64;
    let a = 2.0 * c.alpha0 / (n * c.hbar);
    let b = 2.0 * (beta1 * beta1 + beta2 * beta2) / (n * c.mass * c.hbar);
    let f = |w: f64| w * w * w - a * w * w - b;
    if b == 0.0 {
        return Ok(a);
    }
    // f(max(a, b^(1/3))) <= 0; double upward for the right bracket end
    let mut lo = a.max(b.cbrt());
    let mut hi = lo.max(1e-30) * 2.0;
    while f(hi) <= 0.0 {
        hi *= 2.0;
    }
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if f(mid) > 0.0 {
            hi = mid;
        } else {
            lo = mid;
        }
        if hi - lo <= 1e-16 * hi {
            break;
        }
    }
    let mut w = 0.5 * (lo + hi);
    // Newton polish
    for _ in 0..4 {
        let df = 3.0 * w * w - 2.0 * a * w;
        if df != 0.0 {
            w -= f(w) / df;
        }
    }
    Ok(w)
}

/// Cardano closed form of the V2 cubic root (cross-check path). Returns
/// `None` when a radicand is negative.
pub fn v2_frequency_closed_form(
    n_principal: u32,
    c: &Constants,
    beta1: f64,
    beta2: f64,
) -> Option<f64> {
    if n_principal == 0 {
        return None;
    }
    let n = n_principal as f64;
    let q = 2.0 * c.alpha0 / (3.0 * n * c.hbar);
    let s = (beta1 * beta1 + beta2 * beta2) / (n * c.mass * c.hbar);
    let rad = s * (s + 2.0 * q * q * q);
    if rad < 0.0 {
        return None;
    }
    let root = rad.sqrt();
    let l1 = q * q * q + s - root;
    let l2 = q * q * q + s + root;
    if l1 < 0.0 || l2 < 0.0 {
        return None;
    }
    Some(q + l1.cbrt() + l2.cbrt())
}

/// Principal parameter N for a (potential, system, qn) combination, plus the
/// populated separation constants.
fn principal(
    spec: &PotentialSpec,
    system: CoordinateSystem,
    qn: &QuantumNumbers,
) -> Result<SeparationConstants> {
    use CoordinateSystem as Cs;
    use QuantumNumbers as Qn;
    let mismatch = || Error::domain("quantum-number family does not match the potential/system");
    match (spec, system, qn) {
        (PotentialSpec::V1 { k1, k2, s1, s2 }, Cs::Parabolic, Qn::Parabolic2D { n1, n2 }) => {
            let mut sep = SeparationConstants::default();
            sep.n_principal =
                (n1 + n2) as f64 + 0.5 * s1.apply(*k1) + 0.5 * s2.apply(*k2) + 1.0;
            Ok(sep)
        }
        (PotentialSpec::V1 { .. }, Cs::Polar, Qn::Polar2D { m, n }) => {
            let mut sep = angular_constants(spec, *n as i64)?;
            let lam = sep.lambda2.unwrap();
            sep.n_principal = *m as f64 + lam + 0.5;
            Ok(sep)
        }
        (PotentialSpec::V2 { .. }, Cs::Parabolic, Qn::Parabolic2D { n1, n2 }) => {
            if (n1 + n2) % 2 != 0 {
                return Err(Error::Exclusion(format!(
                    "V2: only even total oscillator quanta contribute (n1+n2 = {})",
                    n1 + n2
                )));
            }
            let mut sep = SeparationConstants::default();
            sep.n_principal = (n1 + n2 + 1) as f64;
            Ok(sep)
        }
        (PotentialSpec::V3 { .. }, Cs::Parabolic, Qn::Parabolic3D { n1, n2, n }) => {
            let mut sep = angular_constants(spec, *n as i64)?;
            sep.n_principal = (n1 + n2) as f64 + sep.lambda1.unwrap() + 1.0;
            Ok(sep)
        }
        (PotentialSpec::V3 { .. }, Cs::Spherical, Qn::Spherical3D { l, m, n }) => {
            let mut sep = angular_constants(spec, *n as i64)?;
            let l1 = sep.lambda1.unwrap();
            sep.lambda2 = Some(*m as f64 + l1 + 0.5);
            sep.n_principal = (l + m) as f64 + l1 + 1.0;
            Ok(sep)
        }
        (PotentialSpec::V4 { .. }, Cs::Parabolic, Qn::V4Parabolic { n1, n2, nu }) => {
            let mut sep = angular_constants(spec, *nu as i64)?;
            let (lm, lp) = (sep.lambda_minus.unwrap(), sep.lambda_plus.unwrap());
            sep.n_principal = (n1 + n2) as f64 + 0.5 * (lm + lp) + 1.0;
            Ok(sep)
        }
        (PotentialSpec::V4 { .. }, Cs::Spherical, Qn::V4Spherical { l, n, nu }) => {
            let mut sep = angular_constants(spec, *nu as i64)?;
            let (lm, lp) = (sep.lambda_minus.unwrap(), sep.lambda_plus.unwrap());
            let l1 = *n as f64 + 0.5 * (lp + lm + 1.0);
            sep.lambda1 = Some(l1);
            sep.n_principal = *l as f64 + l1 + 0.5;
            Ok(sep)
        }
        _ => Err(mismatch()),
    }
}

/// Closed-form bound-state energy for the given labels.
pub fn bound_energy(
    spec: &PotentialSpec,
    system: CoordinateSystem,
    qn: QuantumNumbers,
    c: &Constants,
) -> Result<EnergyLevel> {
    spec.validate()?;
    c.validate()?;
    let sep = principal(spec, system, &qn)?;
    let energy = match spec {
        PotentialSpec::V2 { beta1, beta2 } => {
            let w = v2_frequency(sep.n_principal as u32, c, *beta1, *beta2)?;
            -0.5 * c.mass * w * w
        }
        _ => coulomb_energy(c, sep.n_principal),
    };
    Ok(EnergyLevel { energy, qn, sep, degeneracy: 1 })
}

/// All admissible quantum numbers of the family at a given "total quanta"
/// shell, in lexicographic order.
fn shell(
    spec: &PotentialSpec,
    system: CoordinateSystem,
    total: u32,
    nu_range: &[i32],
) -> Vec<QuantumNumbers> {
    use CoordinateSystem as Cs;
    let mut out = Vec::new();
    match (spec, system) {
        (PotentialSpec::V1 { .. } | PotentialSpec::V2 { .. }, Cs::Parabolic) => {
            for n1 in 0..=total {
                out.push(QuantumNumbers::Parabolic2D { n1, n2: total - n1 });
            }
        }
        (PotentialSpec::V1 { .. }, Cs::Polar) => {
            for m in 0..=total {
                out.push(QuantumNumbers::Polar2D { m, n: total - m });
            }
        }
        (PotentialSpec::V3 { .. }, Cs::Parabolic) => {
            for n1 in 0..=total {
                for n2 in 0..=(total - n1) {
                    out.push(QuantumNumbers::Parabolic3D { n1, n2, n: total - n1 - n2 });
                }
            }
        }
        (PotentialSpec::V3 { .. }, Cs::Spherical) => {
            for l in 0..=total {
                for m in 0..=(total - l) {
                    out.push(QuantumNumbers::Spherical3D { l, m, n: total - l - m });
                }
            }
        }
        (PotentialSpec::V4 { .. }, Cs::Parabolic) => {
            for n1 in 0..=total {
                for &nu in nu_range {
                    out.push(QuantumNumbers::V4Parabolic { n1, n2: total - n1, nu });
                }
            }
        }
        (PotentialSpec::V4 { .. }, Cs::Spherical) => {
            for l in 0..=total {
                for &nu in nu_range {
                    out.push(QuantumNumbers::V4Spherical { l, n: total - l, nu });
                }
            }
        }
        _ => {}
    }
    out
}

/// The `count` lowest distinct energies with per-energy degeneracy tallies.
///
/// The search over quantum numbers is bounded by the monotone growth of the
/// principal parameter with total quanta (and with |nu| for V4).
pub fn enumerate_levels(
    spec: &PotentialSpec,
    system: CoordinateSystem,
    c: &Constants,
    count: usize,
) -> Result<Vec<EnergyLevel>> {
    if count == 0 {
        return Err(Error::domain("enumerate_levels: count >= 1"));
    }
    spec.validate()?;
    // nu range for V4: grow |nu| until its minimal N exceeds anything the
    // plain shells can still produce within `count` levels.
    let nu_range: Vec<i32> = if let PotentialSpec::V4 { .. } = spec {
        let mut r = vec![0];
        let mut nu = 1;
        loop {
            let ok = angular_constants(spec, nu as i64).map(|s| {
                0.5 * (s.lambda_minus.unwrap() + s.lambda_plus.unwrap()) + 1.0
            });
            match ok {
                Ok(nmin) if nmin <= (count as f64 + 2.0) * 2.0 => {
                    r.push(nu);
                    r.push(-nu);
                    nu += 1;
                }
                _ => break,
            }
            if nu > 4 * count as i32 + 8 {
                break;
            }
        }
        r
    } else {
        vec![]
    };

    let mut collected: Vec<EnergyLevel> = Vec::new();
    let max_total = 2 * count as u32 + 4;
    for total in 0..=max_total {
        for qn in shell(spec, system, total, &nu_range) {
            match bound_energy(spec, system, qn, c) {
                Ok(level) => collected.push(level),
                Err(Error::Exclusion(_)) => {}
                Err(Error::Domain(_)) => {}
                Err(e) => return Err(e),
            }
        }
    }
    collected.sort_by(|a, b| {
        a.energy
            .partial_cmp(&b.energy)
            .unwrap()
            .then_with(|| a.qn.labels().cmp(&b.qn.labels()))
    });
    // merge into distinct energies with degeneracy tallies
    let mut levels: Vec<EnergyLevel> = Vec::new();
    for lv in collected {
        match levels.last_mut() {
            Some(last)
                if (lv.energy - last.energy).abs()
                    <= 1e-12 * last.energy.abs().max(1e-300) =>
            {
                last.degeneracy += 1;
            }
            _ => levels.push(lv),
        }
    }
    levels.truncate(count);
    if levels.len() < count {
        return Err(Error::domain(format!(
            "enumerate_levels: search bound exhausted before {count} levels"
        )));
    }
    Ok(levels)
}
