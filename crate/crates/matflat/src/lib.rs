//! Matroid computation over bitset ground sets: finite geometries over
//! GF(q), flat-lattice enumeration and Whitney numbers of the second kind,
//! Gaussian binomial coefficients, rank-2 uniform-minor detection, and the
//! bound checks relating them.
//!
//! The claim suite behind `matflat verify-paper` exercises every exactly
//! checkable counting claim in this family at desk scale: the Blokhuis
//! construction's flat counts, the projective-geometry Whitney grid, the
//! point-count bound of Kung, the Whitney-number identities, and the
//! counterexample inequality chain for large prime powers.

pub mod bitset;
pub mod error;
pub mod flats;
pub mod geometry;
pub mod gf;
pub mod json;
pub mod matroid;
pub mod minor;
pub mod oracle;
pub mod qbinom;
pub mod report;
pub mod rng;
pub mod verify;

pub use bitset::Subset;
pub use error::{Error, Result};
pub use matroid::Matroid;
