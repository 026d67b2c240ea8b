use std::collections::BTreeSet;

use rand::Rng;

use super::{Graph, GraphError};

/// Path `0 - 1 - ... - (n-1)`.
pub fn build_path(n: usize) -> Result<Graph, GraphError> {
    if n == 0 {
        return Err(GraphError::InvalidSize(
            "path needs at least one vertex".into(),
        ));
    }
    Graph::from_edges(n, (1..n).map(|v| (v - 1, v)))
}

/// Row-major id of cell `(row, col)` in a grid with `cols` columns.
pub fn grid_vertex(cols: usize, row: usize, col: usize) -> usize {
    row * cols + col
}

/// `rows x cols` grid with 4-neighbour edges; cell `(r, c)` has id `r * cols + c`.
pub fn build_grid(rows: usize, cols: usize) -> Result<Graph, GraphError> {
    if rows == 0 || cols == 0 {
        return Err(GraphError::InvalidSize(format!("grid {rows}x{cols}")));
    }
    let mut edges = Vec::with_capacity(2 * rows * cols);
    for r in 0..rows {
        for c in 0..cols {
            let v = grid_vertex(cols, r, c);
            if c + 1 < cols {
                edges.push((v, v + 1));
            }
            if r + 1 < rows {
                edges.push((v, v + cols));
            }
        }
    }
    Graph::from_edges(rows * cols, edges)
}

/// Disjoint union of paths with the given orders, ids assigned consecutively
/// in list order.
pub fn build_path_forest(lengths: &[usize]) -> Result<Graph, GraphError> {
    if lengths.is_empty() {
        return Err(GraphError::InvalidSize(
            "path forest needs at least one path".into(),
        ));
    }
    if lengths.contains(&0) {
        return Err(GraphError::InvalidSize("path of order zero".into()));
    }
    let total = lengths.iter().sum();
    let mut edges = Vec::with_capacity(total);
    let mut start = 0;
    for &len in lengths {
        edges.extend((start + 1..start + len).map(|v| (v - 1, v)));
        start += len;
    }
    Graph::from_edges(total, edges)
}

/// Permutation graph of `permutation` (a sequence of the values `1..=size`).
/// Vertex `i - 1` stands for value `i`; values `i < j` are adjacent iff `j`
/// appears before `i`.
pub fn build_permutation_graph(size: usize, permutation: &[usize]) -> Result<Graph, GraphError> {
    if permutation.len() != size {
        return Err(GraphError::NotAPermutation(size));
    }
    let mut seen = vec![false; size + 1];
    for &p in permutation {
        if p == 0 || p > size || std::mem::replace(&mut seen[p], true) {
            return Err(GraphError::NotAPermutation(size));
        }
    }
    let mut earlier = BTreeSet::new();
    let mut edges = Vec::new();
    for &value in permutation {
        edges.extend(
            earlier
                .range(value + 1..)
                .map(|&bigger| (value - 1, bigger - 1)),
        );
        earlier.insert(value);
    }
    Graph::from_edges(size, edges)
}

/// Erdos-Renyi `G(n, p)`: every pair is joined independently with
/// probability `p` (clamped to `[0, 1]`).
pub fn build_random_graph<R: Rng + ?Sized>(rng: &mut R, n: usize, p: f64) -> Graph {
    let p = p.clamp(0.0, 1.0);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, edges).expect("pairs are distinct")
}
