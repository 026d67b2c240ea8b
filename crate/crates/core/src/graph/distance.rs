use std::collections::VecDeque;

use super::{Graph, GraphError, PathDecoration, VertexSet};

/// Distance marker for vertices not reachable from the sources.
pub const UNREACHABLE: usize = usize::MAX;

/// Multi-source BFS distances. Unreachable vertices get [`UNREACHABLE`].
pub fn distances_from(g: &Graph, sources: &[usize]) -> Vec<usize> {
    bounded_bfs(g, sources.iter().copied(), UNREACHABLE)
}

fn bounded_bfs<I>(g: &Graph, sources: I, limit: usize) -> Vec<usize>
where
    I: IntoIterator<Item = usize>,
{
    let mut dist = vec![UNREACHABLE; g.vertex_count()];
    let mut queue = VecDeque::new();
    for s in sources {
        if dist[s] != 0 {
            dist[s] = 0;
            queue.push_back(s);
        }
    }
    while let Some(u) = queue.pop_front() {
        let du = dist[u];
        if du >= limit {
            continue;
        }
        for &w in g.neighbors(u) {
            if dist[w] == UNREACHABLE {
                dist[w] = du + 1;
                queue.push_back(w);
            }
        }
    }
    dist
}

/// `G.N_radius[sources]`: every vertex within `radius` hops of some source.
pub fn ball(g: &Graph, sources: &VertexSet, radius: usize) -> Result<VertexSet, GraphError> {
    if sources.is_empty() {
        return Err(GraphError::EmptyVertexSet);
    }
    if sources.universe() != g.vertex_count() {
        return Err(GraphError::InvalidSize(format!(
            "vertex set over {} ids used with a graph on {} vertices",
            sources.universe(),
            g.vertex_count()
        )));
    }
    let dist = bounded_bfs(g, sources.iter(), radius);
    let mut out = VertexSet::new(g.vertex_count());
    for (v, &d) in dist.iter().enumerate() {
        if d <= radius {
            out.insert(v);
        }
    }
    Ok(out)
}

/// Largest distance from `v`, or `None` when some vertex is unreachable.
pub fn eccentricity(g: &Graph, v: usize) -> Option<usize> {
    let dist = distances_from(g, &[v]);
    let max = dist.iter().copied().max()?;
    (max != UNREACHABLE).then_some(max)
}

fn require_connected(g: &Graph) -> Result<(), GraphError> {
    if g.vertex_count() == 0 {
        return Err(GraphError::InvalidSize("graph has no vertices".into()));
    }
    if !g.is_connected() {
        return Err(GraphError::Disconnected);
    }
    Ok(())
}

/// Vertex of minimum eccentricity; ties go to the smallest id.
pub fn radical_center(g: &Graph) -> Result<usize, GraphError> {
    require_connected(g)?;
    let mut best = (UNREACHABLE, 0);
    for v in 0..g.vertex_count() {
        let ecc = eccentricity(g, v).ok_or(GraphError::Disconnected)?;
        if ecc < best.0 {
            best = (ecc, v);
        }
    }
    Ok(best.1)
}

/// A shortest path realising the diameter.
///
/// Among diametral pairs the smallest endpoint `u` wins, then the smallest
/// partner `v`; the path itself is the lexicographically smallest shortest
/// `u`-`v` path.
pub fn longest_shortest_path(g: &Graph) -> Result<PathDecoration, GraphError> {
    require_connected(g)?;
    let n = g.vertex_count();
    let mut best: Option<(usize, usize, usize)> = None;
    for u in 0..n {
        let dist = distances_from(g, &[u]);
        for (v, &d) in dist.iter().enumerate() {
            if best.is_none_or(|(bd, _, _)| d > bd) {
                best = Some((d, u, v));
            }
        }
    }
    let (diam, u, v) = best.expect("nonempty graph");
    let to_target = distances_from(g, &[v]);
    let mut path = Vec::with_capacity(diam + 1);
    let mut cur = u;
    path.push(cur);
    while cur != v {
        cur = *g
            .neighbors(cur)
            .iter()
            .find(|&&w| to_target[w] + 1 == to_target[cur])
            .expect("a shortest path continues");
        path.push(cur);
    }
    PathDecoration::new(g, path)
}
