//! Unified (p,q;α,β,ν;γ)-deformed oscillator algebra toolkit.
//!
//! The algebra is generated by ladder operators `a`, `a†`, the number
//! operator `N` and a parity involution `K` subject to
//!
//! ```text
//! a a† − p^ν a† a = (1 + 2γK) q^{αN+β},
//! [N,a] = −a,  [N,a†] = a†,  Ka = −aK,  Ka† = −a†K,  [N,K] = 0.
//! ```
//!
//! The crate evaluates the structure function of the deformation, the
//! admissible γ-interval for positivity, truncated Fock-space matrix
//! realizations with numerical relation checks, the classification of
//! irreducible representations with their λ-sequences, and the discrete
//! spectrum of the induced deformed harmonic oscillator.

pub mod error;
pub mod params;
pub mod structure;
pub mod positivity;
pub mod fock;
pub mod representations;
pub mod spectrum;
pub mod cli;

pub use error::Error;
pub use params::{DeformationParams, DeformationPreset, Regime, RegimeInfo, Sign};

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
