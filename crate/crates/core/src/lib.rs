//! Exact spectrum of the derangement graph `Γₙ`, the Cayley graph of the
//! symmetric group `Sₙ` generated by its fixed-point-free permutations.
//!
//! The eigenvalue `η_λ` attached to a partition `λ ⊢ n` is computed by four
//! independent routes that must agree:
//!
//! * [`spectrum::eta_new`]: recurrence on the first column and the last row;
//! * [`spectrum::eta_renteln`]: recurrence on the hook and the first column;
//! * [`spectrum::eta_schur_sum`]: alternating sum of complete shifted
//!   symmetric functions `h*_k(λ)`;
//! * [`spectrum::eta_character`]: the character formula for normal Cayley
//!   graphs, with Murnaghan–Nakayama character values.
//!
//! [`partition`] supplies the order theory (lexicographic, dominance, single
//! box moves), [`shifted`] the shifted Schur machinery, [`verify`] the
//! reference tables and theorem sweeps, and [`cli`] the command-line surface.
//!
//! ```
//! use derangement_spectrum::{partition::Partition, spectrum};
//!
//! let lam: Partition = "4,2,1^2".parse().unwrap();
//! assert_eq!(spectrum::eta_new(&lam), 21.into());
//! assert_eq!(spectrum::eta_schur_sum(&lam), 21.into());
//! ```

pub mod cli;
pub mod partition;
pub mod shifted;
pub mod spectrum;
pub mod verify;

/// Arbitrary-precision signed integer used for every eigenvalue, dimension
/// and class size.
pub type ExactInt = num_bigint::BigInt;

pub use partition::{Partition, Style};
pub use spectrum::SpectrumEntry;
