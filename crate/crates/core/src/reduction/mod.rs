//! Distinct 3-partition reductions to burning.
//!
//! Both gadgets start from the odd shift of the instance: every element `a`
//! becomes `2a - 1`, so that all pieces a schedule carves out of a path have
//! odd order, and the odd values up to `2m - 1` that no element hits become
//! filler paths of their own.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::burning::BurnError;
use crate::graph::GraphError;
use crate::partition::ThreePartitionInstance;

mod extract;
pub mod interval;
pub mod permutation;

pub use interval::{
    comb_graph, construct_ig, emit_interval_representation, partition_to_schedule,
    schedule_to_partition, IGArtifact, RVertexPlan,
};
pub use permutation::{
    construct_px, forest_permutation, partition_to_schedule_pg, path_permutation,
    schedule_to_partition_pg, PGArtifact, SegmentBounds, SegmentPlan,
};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ReductionError {
    #[error("partition does not solve the instance")]
    PartitionMismatch,
    #[error("schedule has {got} sources, expected {expected}")]
    WrongLength { expected: usize, got: usize },
    #[error("schedule does not burn the whole graph")]
    Incomplete,
    #[error("schedule is not optimal-shaped: {0}")]
    NotOptimalShaped(String),
    #[error(transparent)]
    Burn(#[from] BurnError),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Odd-shifted view of an instance.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DerivedSets {
    /// `2a - 1` for every element, in input order.
    pub shifted: Vec<u64>,
    /// `2B - 3`.
    pub shifted_target: u64,
    /// `1, 3, ..., 2m - 1`.
    pub odd_values: Vec<u64>,
    /// Odd values not hit by the shift, ascending.
    pub fillers: Vec<u64>,
}

impl DerivedSets {
    /// Fillers, largest first.
    pub fn fillers_desc(&self) -> Vec<u64> {
        self.fillers.iter().rev().copied().collect()
    }
}

pub fn derive_sets(inst: &ThreePartitionInstance) -> DerivedSets {
    let m = inst.max();
    let shifted: Vec<u64> = inst.values().iter().map(|&a| 2 * a - 1).collect();
    let odd_values: Vec<u64> = (1..=m).map(|i| 2 * i - 1).collect();
    assert!(shifted.iter().all(|&v| v < 2 * m));
    let fillers: Vec<u64> = odd_values
        .iter()
        .copied()
        .filter(|v| !shifted.contains(v))
        .collect();
    assert_eq!(fillers.len() as u64, inst.spare());
    assert_eq!(
        shifted.iter().sum::<u64>() + fillers.iter().sum::<u64>(),
        m * m
    );
    DerivedSets {
        shifted,
        shifted_target: 2 * inst.target() - 3,
        odd_values,
        fillers,
    }
}
