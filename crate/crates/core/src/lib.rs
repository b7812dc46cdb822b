//! Lattices of uniform-topology classes over finite topological spaces.
//!
//! The crate works entirely at the level of order structure: a directed
//! family of point subsets names a class, classes are compared with the
//! closure criterion, and the resulting quotient is built, measured and
//! mapped. Everything here is `no_std` with `alloc`; file formats, the
//! command-line tool and parallel sweeps live in the `unitop` crate.

#![no_std]

extern crate alloc;

pub mod census;
pub mod error;
pub mod family;
pub mod functor;
pub mod lattice;
pub mod limits;
pub mod mask;
pub mod space;

pub use error::{Error, Result};
pub use family::{DirectedFamily, InfMode, LatticeElement};
pub use functor::{LatticeMap, Verdict};
pub use lattice::UniformLattice;
pub use limits::Limits;
pub use mask::SubsetMask;
pub use space::{FiniteSpace, PointMap, SpaceFlags};
