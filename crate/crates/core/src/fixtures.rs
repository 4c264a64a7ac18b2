//! Named configurations used throughout the tests, the acceptance suite and
//! the CLI documentation.

use crate::configurations::{AcmConfig, GridPointSet};
use crate::partitions::Partition;

/// The 20-point ACM set with `α = (5,4,3,3,2,2,1)` on rulings `H1..H7`,
/// `V1..V5`.
pub fn twenty_point_staircase() -> AcmConfig {
    AcmConfig::standard(Partition::new(vec![5, 4, 3, 3, 2, 2, 1]).expect("valid partition"))
}

/// Six points with `α = (3,2,1)` and `β = (2,2,1,1)`; not ACM.
///
/// Rows `H1, H2, H3` carry three, two and one point; the lone point of `H3`
/// sits on its own column `V4`.
pub fn six_point_non_acm() -> GridPointSet {
    GridPointSet::from_cells([(1, 1), (1, 2), (1, 3), (2, 1), (2, 2), (3, 4)]).expect("distinct cells")
}
