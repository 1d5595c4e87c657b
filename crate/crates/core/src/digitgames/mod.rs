//! Base-10 games: beastly numbers, reverse-and-add trajectories,
//! multiplicative persistence and the powertrain map.

mod beastly;
mod lychrel;
mod persistence;
mod powertrain;

pub use beastly::{beastly_in_range, beastly_prefix, is_beastly, is_beastly_u64};
pub use lychrel::{a033865_prefix, palindrome_trajectory, DEFAULT_LYCHREL_CAP};
pub use persistence::{
    persistence, persistence_u128, smallest_with_persistence, smallest_with_persistence_by_candidates,
    smallest_with_persistence_by_scan, PersistenceSearch,
};
pub use powertrain::{
    powertrain, powertrain_fixed_points, powertrain_fixed_points_in, powertrain_u128, powertrain_with_limit,
    DEFAULT_POWERTRAIN_DIGITS,
};

use crate::Natural;

/// How an iteration ended.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Resolution {
    /// The stopping predicate held for this value.
    Resolved(Natural),
    /// The iteration cap ran out first. Not an error: for 196 this is the
    /// expected outcome.
    CapReached,
}

/// A start value together with every iterate computed from it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Trajectory {
    pub start: Natural,
    /// Includes `start` as element 0.
    pub iterates: Vec<Natural>,
    pub status: Resolution,
}

impl Trajectory {
    pub fn resolved(&self) -> Option<&Natural> {
        match &self.status {
            Resolution::Resolved(v) => Some(v),
            Resolution::CapReached => None,
        }
    }

    /// Number of map applications performed.
    pub fn steps(&self) -> usize {
        self.iterates.len() - 1
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum DigitGameError {
    #[error("persistence target {target} outside the supported range 1..={max}")]
    PersistenceTarget { target: u32, max: u32 },
    #[error("search bound exhausted: no number with persistence {target} {bound}")]
    SearchExhausted { target: u32, bound: String },
    #[error("powertrain of {digits}-digit input would exceed {limit} digits")]
    PowertrainOverflow { digits: usize, limit: usize },
}
