//! Exact computations for ideals of points, lines and unions of lines and
//! ACM points in `P1 x P1`.

pub mod campaign;
pub mod configurations;
pub mod error;
pub mod fixtures;
pub mod input;
pub mod oracle;
pub mod partitions;
pub mod resolutions;
pub mod splittings;
pub mod staircase;

pub use configurations::{AcmConfig, Diagram, GridPointSet, Label};
pub use error::{Error, Result};
pub use oracle::{Field, Oracle, PrimeField, PrimeOracle, RationalOracle, Rationals};
pub use partitions::Partition;
pub use resolutions::BettiTable;
pub use staircase::{Arrangement, Bidegree, Frame, GeneratorSet};
