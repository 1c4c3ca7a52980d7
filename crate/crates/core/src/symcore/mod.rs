//! The combinatorial kernel: integer partitions, Littlewood-Richardson
//! multiplication, dimension formulas for GL(n)-irreducibles, the Cauchy
//! decomposition of exterior powers of a tensor product, and the plethysm
//! decomposition of exterior powers of a third exterior power.

mod cauchy;
mod dimension;
mod lr;
mod partition;
mod plethysm;
mod schurvec;

pub use cauchy::cauchy_wedge;
pub use dimension::{schur_dimension, weyl_dimension};
pub use lr::{lr_multiply, lr_multiply_boxed};
pub use partition::Partition;
pub use plethysm::{wedge_plethysm, PlethysmError};
pub use schurvec::SchurVector;
