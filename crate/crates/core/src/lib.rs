//! Exact-arithmetic tools for the geometry of trivectors on a ten-dimensional
//! space: Schubert calculus on Grassmannians, Borel-Weil-Bott cohomology of
//! homogeneous bundles, plethysm of exterior powers, the Beauville-Bogomolov
//! lattice and blow-up arithmetic of the Hilbert square of a K3 surface, and
//! exact multilinear algebra over the rationals and prime fields.
//!
//! Everything is computed in exact arithmetic (`BigInt` / `BigRational`);
//! no floating point is used anywhere.

pub mod bwb;
pub mod chow;
pub mod hilb2;
pub mod symcore;
pub mod trilab;

pub use symcore::{Partition, SchurVector};
