//! Self-contained special-function kernel.
//!
//! Orthogonal polynomials, modified Bessel `I_nu` for complex argument,
//! Whittaker `M`/`W`, Ferrers functions of real degree and order, even/odd
//! parabolic cylinder functions, the complex log-gamma, and a verifier for
//! the classical identities the closed-form solutions rest on.

mod bessel;
mod confluent;
mod gamma;
mod identities;
mod legendre;
mod orthopoly;

pub use bessel::bessel_i;
pub use confluent::{kummer_m, pcf, whittaker, whittaker_m, whittaker_w, Parity, WhittakerKind};
pub use gamma::{gamma_abs, log_gamma, real_gamma};
pub use identities::{verify_identity, IdentityId};
pub use legendre::legendre_p;
pub use orthopoly::{orthopoly, PolyFamily, PolySpec};
