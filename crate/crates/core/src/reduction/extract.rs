//! Turning the cluster sizes found on the block and filler paths back into
//! a partition.

use super::{DerivedSets, ReductionError};
use crate::partition::{verify_partition, Partition3, ThreePartitionInstance};

/// What a path in the remaining forest stands for.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum BagKind {
    /// A path of order `B'`, to be burnt by one shifted triple.
    Block,
    /// A path whose order is the given filler value.
    Filler(u64),
}

/// Cluster sizes that tile one path of the forest.
#[derive(Debug, Clone)]
pub(crate) struct Bag {
    pub kind: BagKind,
    pub sizes: Vec<u64>,
}

/// Normalizes the bags so every filler path holds one cluster of its own
/// order, then un-shifts the three sizes left on each block.
pub(crate) fn bags_to_partition(
    inst: &ThreePartitionInstance,
    derived: &DerivedSets,
    mut bags: Vec<Bag>,
) -> Result<Partition3, ReductionError> {
    let mut all: Vec<u64> = bags.iter().flat_map(|b| b.sizes.iter().copied()).collect();
    all.sort_unstable();
    if all != derived.odd_values {
        return Err(ReductionError::NotOptimalShaped(
            "cluster sizes on the block and filler paths are not 1, 3, ..., 2m-1".into(),
        ));
    }

    normalize_fillers(&mut bags);

    let mut triples = Vec::new();
    for bag in bags.iter().filter(|b| b.kind == BagKind::Block) {
        let &[a, b, c] = bag.sizes.as_slice() else {
            return Err(ReductionError::NotOptimalShaped(format!(
                "a block is burnt by {} clusters",
                bag.sizes.len()
            )));
        };
        triples.push([a, b, c].map(|s: u64| s.div_ceil(2)));
    }
    let p = Partition3::new(triples);
    if verify_partition(inst, &p) {
        Ok(p)
    } else {
        Err(ReductionError::PartitionMismatch)
    }
}

/// Exchange step: a filler path tiled by several clusters trades its whole
/// bag for the single cluster of matching size found elsewhere. Bag sums
/// are preserved, and sizes are assumed distinct.
pub(crate) fn normalize_fillers(bags: &mut [Bag]) {
    for j in 0..bags.len() {
        let BagKind::Filler(order) = bags[j].kind else {
            continue;
        };
        if bags[j].sizes == [order] {
            continue;
        }
        // a bag holding `order` among other sizes would exceed this sum,
        // so the matching cluster sits in another bag
        let Some((owner, pos)) = bags
            .iter()
            .enumerate()
            .filter(|&(b, _)| b != j)
            .find_map(|(b, bag)| bag.sizes.iter().position(|&s| s == order).map(|p| (b, p)))
        else {
            continue;
        };
        let moved = std::mem::replace(&mut bags[j].sizes, vec![order]);
        bags[owner].sizes.remove(pos);
        bags[owner].sizes.extend(moved);
    }
}
