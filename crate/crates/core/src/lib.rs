//! Exact spectral analysis of the binary Burnside process on `{0,1}^n`.
//!
//! The Burnside process alternates between a binary string and a uniformly
//! chosen permutation stabilizing it; its stationary distribution is uniform
//! over the orbits of the coordinate-permutation action (equivalently, over
//! the number of ones). This crate constructs the complete orthogonal
//! eigenbasis of the transition operator in exact rational arithmetic and
//! uses it to compute chi-square mixing profiles.
//!
//! The main pieces:
//!
//! * [`subset`], [`tensor`]: subset-indexed sparse vectors over `{0,1}^n`
//!   with the stationary inner product, symmetric-group and Jucys–Murphy
//!   actions.
//! * [`tableaux`]: two-row standard Young tableaux, contents, intertwiner
//!   words and the norm-transfer constants `gamma`.
//! * [`orthopoly`]: exact Hahn polynomial evaluation (discrete Chebyshev as
//!   the `(0,0)` case), beta-binomial weights and closed-form norms.
//! * [`eigenbasis`]: the eigenvector families `g`/`f`, lifted eigenvectors,
//!   the subset-to-eigenvector transform, exact squared norms, and the full
//!   basis enumeration.
//! * [`chain`]: exact transition entries, operator application, stationary
//!   distribution, the lumping identity, Monte-Carlo samplers, and a
//!   floating-point spectrum oracle.
//! * [`mixing`]: exact chi-square distance to stationarity, the fast O(n)
//!   path from a one-ones start, and isotypic eigenvalue tables.
//! * [`sl2`]: the sl2 action on tensors and the verifier for the expansion
//!   of the transition matrix in symmetrized projector products.
//! * [`wz`]: brute-force verification of the triple-sum orthogonality
//!   identity and exact checking of its telescoping certificates.
//! * [`verify`]: the structured check suite driven by the CLI and the
//!   acceptance tests.

pub mod chain;
pub mod eigenbasis;
mod error;
pub mod mixing;
pub mod orthopoly;
pub mod scalar;
pub mod sl2;
pub mod subset;
pub mod tableaux;
pub mod tensor;
pub mod verify;
pub mod wz;

pub use error::Error;
pub use scalar::Rat;
pub use subset::Subset;
pub use tableaux::Tableau;
pub use tensor::TensorVector;

/// Shorthand for results with this crate's error type.
pub type Result<T> = std::result::Result<T, Error>;
