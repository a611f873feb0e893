//! Algebraic solutions of the Smorodinsky-Winternitz super-integrable
//! potentials.
//!
//! The library evaluates, for the four potential families `V1`..`V4`:
//!
//! * the so(2,1) radial kernel and the Baker-Campbell-Hausdorff coefficient
//!   maps it is built from ([`so21`]),
//! * closed-form bound and continuum spectra in every separating coordinate
//!   system ([`spectra`]),
//! * normalized bound-state and continuum wave functions ([`wavefun`]),
//! * radial Green's functions, partial-wave and spectral-sum assembly with
//!   pole/residue extraction ([`greens`]),
//! * the special-function kernel everything rests on ([`specfun`]), and
//! * an independent finite-difference Sturm-Liouville eigensolver used to
//!   cross-validate every closed form ([`oracle`]).
//!
//! All floating point work is `f64`; complex values use [`num_complex::Complex64`].

pub mod config;
pub mod error;
pub mod greens;
pub mod model;
pub mod oracle;
pub mod quad;
pub mod so21;
pub mod specfun;
pub mod spectra;
pub mod validate;
pub mod wavefun;

pub use error::{Error, Result};
pub use num_complex::Complex64;
