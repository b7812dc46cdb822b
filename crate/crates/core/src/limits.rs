//! Search-space guards.
//!
//! Every exhaustive routine in this crate checks its candidate count
//! against a [`Limits`] value before it starts. The defaults keep runs at
//! desk scale; [`Limits::unbounded`] lifts all soft guards but never the
//! hard representation limits (point masks are 32 bits wide, lattice
//! element sets are 64 bits wide).

use crate::error::{Error, Result};
use crate::mask::MAX_POINTS;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Largest space accepted by the constructors (closure table is `2^n`).
    pub max_space_points: usize,
    /// Largest space whose lattice may be built.
    pub max_lattice_points: usize,
    /// Largest number of functions `all_maps` will enumerate.
    pub max_maps: u128,
    /// Largest `n` for topology enumeration.
    pub max_topology_points: usize,
    /// Largest `n` for exhaustive directed-family counting.
    pub max_family_points: usize,
    /// Largest `n` for pairwise lattice-isomorphism searches.
    pub max_search_points: usize,
    /// Largest number of choice tuples examined by the verbatim infimum.
    pub max_choice_tuples: u128,
    /// Largest number of isomorphisms collected by `iso_search`.
    pub max_isomorphisms: usize,
    /// Memory budget for enumerations that accumulate results.
    pub max_bytes: Option<u64>,
}

/// Lattice element sets are stored in `u64` bitsets.
pub const MAX_LATTICE_ELEMENTS: usize = 64;

impl Limits {
    pub const DEFAULT: Limits = Limits {
        max_space_points: 20,
        max_lattice_points: 6,
        max_maps: 10_000_000,
        max_topology_points: 5,
        max_family_points: 4,
        max_search_points: 4,
        max_choice_tuples: 1_000_000,
        max_isomorphisms: 100_000,
        max_bytes: None,
    };

    pub fn unbounded() -> Self {
        Limits {
            max_space_points: MAX_POINTS,
            max_lattice_points: MAX_POINTS,
            max_maps: u128::MAX,
            max_topology_points: MAX_POINTS,
            max_family_points: MAX_POINTS,
            max_search_points: MAX_POINTS,
            max_choice_tuples: u128::MAX,
            max_isomorphisms: usize::MAX,
            max_bytes: None,
        }
    }

    pub fn with_max_bytes(mut self, bytes: Option<u64>) -> Self {
        self.max_bytes = bytes;
        self
    }

    pub(crate) fn check(&self, what: &'static str, size: u128, limit: u128) -> Result<()> {
        if size > limit {
            Err(Error::SearchSpaceTooLarge { what, size, limit })
        } else {
            Ok(())
        }
    }

    pub(crate) fn check_bytes(&self, used: u64) -> Result<()> {
        match self.max_bytes {
            Some(limit) if used > limit => Err(Error::MemoryBudget { limit }),
            _ => Ok(()),
        }
    }
}

impl Default for Limits {
    fn default() -> Self {
        Limits::DEFAULT
    }
}
