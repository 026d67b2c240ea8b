//! Graph burning toolkit.
//!
//! Simulation and verification of burning schedules, an exact search for
//! small graphs, bounds and an approximation burner for grids, and the two
//! distinct 3-partition reductions (to a caterpillar interval graph and to a
//! permutation-graph path forest) with solution mappings in both directions.

pub mod burning;
pub mod exact;
pub mod graph;
pub mod grid;
mod intmath;
pub mod io;
pub mod partition;
pub mod reduction;

pub use burning::{BurnError, BurnOutcome, BurningSchedule, ClusterList};
pub use graph::{Graph, GraphError, VertexSet};
