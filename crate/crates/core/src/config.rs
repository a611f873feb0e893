//! Plain JSON configuration documents for potentials and constants.
//!
//! The schema mirrors the [`crate::model`] field names exactly; unknown keys
//! are rejected.

use crate::error::{Error, Result};
use crate::model::{Constants, PotentialSpec};
use serde::{Deserialize, Serialize};

/// Top-level configuration document.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProblemConfig {
    pub constants: Constants,
    pub potential: PotentialSpec,
}

impl ProblemConfig {
    pub fn from_json(text: &str) -> Result<Self> {
        let cfg: ProblemConfig = serde_json::from_str(text)
            .map_err(|e| Error::config(format!("line {}, column {}: {e}", e.line(), e.column())))?;
        cfg.constants.validate()?;
        cfg.potential.validate()?;
        Ok(cfg)
    }

    pub fn from_path(path: &std::path::Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::config(format!("cannot read {}: {e}", path.display())))?;
        Self::from_json(&text)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("config serialization cannot fail")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::{AngularMode, Sign};

    #[test]
    fn round_trip_v1() {
        let text = r#"{
            "constants": {"hbar": 1.0, "mass": 1.0, "alpha0": 1.0},
            "potential": {"type": "v1", "k1": 0.5, "k2": 0.5, "s1": "plus", "s2": "minus"}
        }"#;
        let cfg = ProblemConfig::from_json(text).unwrap();
        assert_eq!(
            cfg.potential,
            PotentialSpec::V1 { k1: 0.5, k2: 0.5, s1: Sign::Plus, s2: Sign::Minus }
        );
        let again = ProblemConfig::from_json(&cfg.to_json()).unwrap();
        assert_eq!(cfg, again);
    }

    #[test]
    fn v4_constant_mode() {
        let text = r#"{
            "constants": {"hbar": 1.0, "mass": 1.0, "alpha0": 1.0},
            "potential": {"type": "v4", "k1": 0.0,
                          "azimuthal": {"mode": "constant", "gamma_sq": 1.0}}
        }"#;
        let cfg = ProblemConfig::from_json(text).unwrap();
        assert!(matches!(
            cfg.potential,
            PotentialSpec::V4 { azimuthal: AngularMode::Constant { .. }, .. }
        ));
    }

    #[test]
    fn unknown_keys_fail_closed() {
        let text = r#"{
            "constants": {"hbar": 1.0, "mass": 1.0, "alpha0": 1.0, "oops": 2},
            "potential": {"type": "v2", "beta1": 0.1, "beta2": 0.1}
        }"#;
        assert!(ProblemConfig::from_json(text).is_err());
        let text = r#"{
            "constants": {"hbar": 1.0, "mass": 1.0, "alpha0": 1.0},
            "potential": {"type": "v2", "beta1": 0.1, "beta2": 0.1, "beta3": 0.0}
        }"#;
        let err = ProblemConfig::from_json(text).unwrap_err();
        assert!(matches!(err, Error::Config(_)));
    }

    #[test]
    fn invalid_physics_rejected() {
        let text = r#"{
            "constants": {"hbar": 1.0, "mass": 1.0, "alpha0": -1.0},
            "potential": {"type": "v2", "beta1": 0.1, "beta2": 0.1}
        }"#;
        assert!(ProblemConfig::from_json(text).is_err());
    }
}
