use serde::{Deserialize, Serialize};

use super::{Graph, GraphError};

/// Closed integer interval `[left, right]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Interval {
    pub left: i64,
    pub right: i64,
}

impl Interval {
    pub fn new(left: i64, right: i64) -> Self {
        Interval { left, right }
    }

    /// Closed overlap: a shared endpoint counts.
    pub fn intersects(&self, other: &Interval) -> bool {
        self.left <= other.right && other.left <= self.right
    }
}

/// One interval per vertex; the interval at index `i` belongs to vertex `i`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IntervalRepresentation {
    intervals: Vec<Interval>,
}

impl IntervalRepresentation {
    pub fn new(intervals: Vec<Interval>) -> Result<Self, GraphError> {
        if let Some((id, iv)) = intervals
            .iter()
            .enumerate()
            .find(|(_, iv)| iv.left > iv.right)
        {
            return Err(GraphError::MalformedInterval {
                id,
                left: iv.left,
                right: iv.right,
            });
        }
        Ok(IntervalRepresentation { intervals })
    }

    pub fn intervals(&self) -> &[Interval] {
        &self.intervals
    }

    pub fn len(&self) -> usize {
        self.intervals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.intervals.is_empty()
    }
}

/// Intersection graph of the representation (closed-interval overlap).
pub fn build_interval_graph(rep: &IntervalRepresentation) -> Result<Graph, GraphError> {
    let ivs = rep.intervals();
    let mut order: Vec<usize> = (0..ivs.len()).collect();
    order.sort_by_key(|&i| (ivs[i].left, i));
    let mut edges = Vec::new();
    for (pos, &i) in order.iter().enumerate() {
        for &j in &order[pos + 1..] {
            if ivs[j].left > ivs[i].right {
                break;
            }
            edges.push((i.min(j), i.max(j)));
        }
    }
    Graph::from_edges(ivs.len(), edges)
}
