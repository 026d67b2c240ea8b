//! Exact burning numbers for small graphs.
//!
//! A graph burns in `k` rounds iff it is covered by balls of radii
//! `k-1, k-2, ..., 0` around distinct centres. The search assigns centres to
//! radii depth-first. Each node picks the uncovered vertex with the smallest
//! neighbourhood and branches on which still-free radius (and which centre
//! within reach) covers it; options already explored at a node are excluded
//! from its later siblings. Two counting bounds prune a branch:
//!
//! * every free radius `r` adds at most `max_ball[r]` new vertices;
//! * a ball of radius `r` meets a shortest path in at most `2r + 1`
//!   vertices, so the uncovered part of one diametral path must fit.
//!
//! A cover found this way is turned into a legal schedule by replaying it
//! and replacing any centre that is already burnt with an unburnt vertex.

use thiserror::Error;

use crate::burning::{verify_schedule, Burner, BurningSchedule};
use crate::graph::{distances_from, Graph, UNREACHABLE};
use crate::intmath::iroot_ceil;

pub const DEFAULT_NODE_BUDGET: u64 = 10_000_000;

/// The search keeps an all-pairs table; larger graphs are refused.
pub const MAX_EXACT_VERTICES: usize = 4096;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ExactError {
    #[error("search budget exhausted after {explored} nodes")]
    BudgetExhausted { explored: u64 },
    #[error("graph has no vertices")]
    EmptyGraph,
    #[error("graph has {n} vertices; exact search is limited to {max}")]
    TooLarge { n: usize, max: usize },
    #[error("round count must be at least 1")]
    ZeroRounds,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExactResult {
    /// The burning number.
    pub k: usize,
    pub witness: BurningSchedule,
    pub nodes_explored: u64,
}

/// Searches for a schedule of at most `k` rounds.
///
/// `Ok(None)` is a proof that none exists; running out of `node_budget` is
/// reported as [`ExactError::BudgetExhausted`] instead.
pub fn can_burn_in(
    g: &Graph,
    k: usize,
    node_budget: u64,
) -> Result<Option<BurningSchedule>, ExactError> {
    ExactSolver::new(g, node_budget)?.can_burn_in(k)
}

pub fn exact_burning_number(g: &Graph) -> Result<ExactResult, ExactError> {
    exact_burning_number_with_budget(g, DEFAULT_NODE_BUDGET)
}

/// Tries `k = lower_bound, lower_bound + 1, ...` sharing one node budget.
pub fn exact_burning_number_with_budget(
    g: &Graph,
    node_budget: u64,
) -> Result<ExactResult, ExactError> {
    let mut solver = ExactSolver::new(g, node_budget)?;
    let mut k = solver.lower_bound();
    loop {
        if let Some(witness) = solver.can_burn_in(k)? {
            return Ok(ExactResult {
                k: witness.len(),
                witness,
                nodes_explored: solver.explored(),
            });
        }
        k += 1;
    }
}

/// Lower bound on the burning number: the larger of the diametral-path bound
/// `ceil(sqrt(diam + 1))` and the ball-counting bound.
pub fn lower_bound(g: &Graph) -> Result<usize, ExactError> {
    Ok(ExactSolver::new(g, 0)?.lower_bound())
}

/// Smallest `k` such that `k` balls of radii `0..k` could hold every vertex.
pub fn coverage_lower_bound(n: usize, max_ball: &[usize]) -> usize {
    let mut total = 0;
    for (k, &b) in max_ball.iter().enumerate() {
        total += b;
        if total >= n {
            return k + 1;
        }
    }
    // balls stop growing once they cover a component; remaining rounds add
    // one full-size ball each
    let last = *max_ball.last().unwrap_or(&1);
    max_ball.len() + (n - total).div_ceil(last.max(1))
}

/// Reusable search state over one graph.
pub struct ExactSolver<'g> {
    graph: &'g Graph,
    /// `by_distance[v]` lists vertices reachable from `v` sorted by distance.
    by_distance: Vec<Vec<u16>>,
    /// `ball_len[v][r]` = |N_r[v]|; radii past the eccentricity reuse the last entry.
    ball_len: Vec<Vec<u32>>,
    /// `max_ball[r]` over all vertices, for `r` up to the largest eccentricity.
    max_ball: Vec<usize>,
    geodesic: Vec<usize>,
    explored: u64,
    budget: u64,
}

impl<'g> ExactSolver<'g> {
    pub fn new(graph: &'g Graph, budget: u64) -> Result<Self, ExactError> {
        let n = graph.vertex_count();
        if n == 0 {
            return Err(ExactError::EmptyGraph);
        }
        if n > MAX_EXACT_VERTICES {
            return Err(ExactError::TooLarge {
                n,
                max: MAX_EXACT_VERTICES,
            });
        }
        let mut by_distance = Vec::with_capacity(n);
        let mut ball_len = Vec::with_capacity(n);
        let mut far: Option<(usize, usize, usize)> = None;
        for v in 0..n {
            let dist = distances_from(graph, &[v]);
            let mut order: Vec<u16> = (0..n)
                .filter(|&u| dist[u] != UNREACHABLE)
                .map(|u| u as u16)
                .collect();
            order.sort_by_key(|&u| (dist[u as usize], u));
            let ecc = dist[*order.last().unwrap() as usize];
            let mut lens = vec![0u32; ecc + 1];
            for &u in &order {
                lens[dist[u as usize]] += 1;
            }
            for r in 1..lens.len() {
                lens[r] += lens[r - 1];
            }
            // diametral pair: largest distance, then smallest endpoints
            let (d, u) = order
                .iter()
                .map(|&u| (dist[u as usize], u as usize))
                .max_by_key(|&(d, u)| (d, std::cmp::Reverse(u)))
                .unwrap();
            if far.is_none_or(|(best, _, _)| d > best) {
                far = Some((d, v, u));
            }
            by_distance.push(order);
            ball_len.push(lens);
        }
        let max_ecc = ball_len.iter().map(|l| l.len() - 1).max().unwrap_or(0);
        let max_ball = (0..=max_ecc)
            .map(|r| {
                ball_len
                    .iter()
                    .map(|l| l[r.min(l.len() - 1)] as usize)
                    .max()
                    .unwrap_or(0)
            })
            .collect();
        let (_, a, b) = far.expect("graph is nonempty");
        let to_b = distances_from(graph, &[b]);
        let mut geodesic = vec![a];
        let mut cur = a;
        while cur != b {
            cur = *graph
                .neighbors(cur)
                .iter()
                .find(|&&w| to_b[w] + 1 == to_b[cur])
                .expect("shortest path continues");
            geodesic.push(cur);
        }
        Ok(ExactSolver {
            graph,
            by_distance,
            ball_len,
            max_ball,
            geodesic,
            explored: 0,
            budget,
        })
    }

    pub fn explored(&self) -> u64 {
        self.explored
    }

    /// Vertices of the diametral path used by the path bound.
    pub fn geodesic(&self) -> &[usize] {
        &self.geodesic
    }

    fn max_ball(&self, r: usize) -> usize {
        self.max_ball[r.min(self.max_ball.len() - 1)]
    }

    fn ball_len(&self, v: usize, r: usize) -> usize {
        let l = &self.ball_len[v];
        l[r.min(l.len() - 1)] as usize
    }

    fn ball(&self, v: usize, r: usize) -> &[u16] {
        &self.by_distance[v][..self.ball_len(v, r)]
    }

    pub fn lower_bound(&self) -> usize {
        let path_bound = iroot_ceil(self.geodesic.len() as u128, 2) as usize;
        let n = self.graph.vertex_count();
        let balls: Vec<usize> = (0..n).map(|r| self.max_ball(r)).collect();
        path_bound.max(coverage_lower_bound(n, &balls)).max(1)
    }

    pub fn can_burn_in(&mut self, k: usize) -> Result<Option<BurningSchedule>, ExactError> {
        if k == 0 {
            return Err(ExactError::ZeroRounds);
        }
        let n = self.graph.vertex_count();
        let mut on_path = vec![false; n];
        for &v in &self.geodesic {
            on_path[v] = true;
        }
        let slack_all = (0..k).map(|r| self.max_ball(r)).sum::<usize>() as i64 - n as i64;
        let slack_path =
            (0..k).map(|r| self.path_cap(r)).sum::<usize>() as i64 - self.geodesic.len() as i64;
        if slack_all < 0 || slack_path < 0 {
            self.explored += 1;
            return Ok(None);
        }
        let mut state = SearchState {
            cover: vec![0; n],
            uncovered: n,
            on_path,
            center_used: vec![false; n],
            assigned: vec![None; k],
            forbidden: vec![false; k * n],
        };
        if self.search(&mut state, slack_all, slack_path)? {
            let witness = self.replay(&state.assigned);
            debug_assert!(verify_schedule(self.graph, &witness).unwrap_or(false));
            Ok(Some(witness))
        } else {
            Ok(None)
        }
    }

    fn path_cap(&self, r: usize) -> usize {
        (2 * r + 1).min(self.geodesic.len())
    }

    fn search(
        &mut self,
        st: &mut SearchState,
        slack_all: i64,
        slack_path: i64,
    ) -> Result<bool, ExactError> {
        self.explored += 1;
        if self.explored > self.budget {
            return Err(ExactError::BudgetExhausted {
                explored: self.explored,
            });
        }
        if st.uncovered == 0 {
            return Ok(true);
        }
        let n = self.graph.vertex_count();
        let Some(r_max) = st.assigned.iter().rposition(Option::is_none) else {
            return Ok(false);
        };
        if slack_all == 0 && !self.regions_fit(st) {
            return Ok(false);
        }
        let target = self.pick_target(st, r_max, slack_path);

        let mut options = Vec::new();
        for r in (0..=r_max).rev().filter(|&r| st.assigned[r].is_none()) {
            for &c in self.ball(target, r) {
                let c = c as usize;
                if st.center_used[c] || st.forbidden[r * n + c] {
                    continue;
                }
                let (gain, gain_path) = self.ball(c, r).iter().fold((0, 0), |(g, gp), &u| {
                    let u = u as usize;
                    if st.cover[u] == 0 {
                        (g + 1, gp + st.on_path[u] as i64)
                    } else {
                        (g, gp)
                    }
                });
                let waste = self.max_ball(r) as i64 - gain;
                let waste_path = self.path_cap(r) as i64 - gain_path;
                if waste <= slack_all && waste_path <= slack_path {
                    options.push((waste + waste_path, r, c, waste, waste_path));
                }
            }
        }
        options.sort_by_key(|&(w, r, c, _, _)| (w, std::cmp::Reverse(r), c));

        let mut found = false;
        let mut excluded = Vec::with_capacity(options.len());
        for &(_, r, c, waste, waste_path) in &options {
            self.place(st, r, c);
            let ok = self.search(st, slack_all - waste, slack_path - waste_path);
            if matches!(ok, Ok(true)) {
                found = true;
                break;
            }
            self.unplace(st, r, c);
            ok?;
            st.forbidden[r * n + c] = true;
            excluded.push(r * n + c);
        }
        for idx in excluded {
            st.forbidden[idx] = false;
        }
        Ok(found)
    }

    /// With zero slack every remaining ball is a full-size set of uncovered
    /// vertices, so it lies inside one connected region of the uncovered
    /// subgraph. Each region must then be a subset sum of the unused sizes.
    fn regions_fit(&self, st: &SearchState) -> bool {
        let n = self.graph.vertex_count();
        let mut sums = vec![false; n + 1];
        sums[0] = true;
        for r in (0..st.assigned.len()).filter(|&r| st.assigned[r].is_none()) {
            let size = self.max_ball(r);
            for total in (size..=n).rev() {
                if sums[total - size] {
                    sums[total] = true;
                }
            }
        }
        let mut seen = vec![false; n];
        let mut stack = Vec::new();
        for v in 0..n {
            if st.cover[v] > 0 || seen[v] {
                continue;
            }
            seen[v] = true;
            stack.push(v);
            let mut size = 0;
            while let Some(u) = stack.pop() {
                size += 1;
                for &w in self.graph.neighbors(u) {
                    if st.cover[w] == 0 && !seen[w] {
                        seen[w] = true;
                        stack.push(w);
                    }
                }
            }
            if !sums[size] {
                return false;
            }
        }
        true
    }

    /// Branching vertex. Any uncovered vertex gives a complete branching;
    /// the choice only steers how early dead ends show up.
    fn pick_target(&self, st: &SearchState, r_max: usize, slack_path: i64) -> usize {
        let n = self.graph.vertex_count();
        // a vertex whose neighbours are all covered has the fewest options
        if let Some(v) = (0..n).find(|&v| {
            st.cover[v] == 0
                && !st.on_path[v]
                && self.graph.neighbors(v).iter().all(|&w| st.cover[w] > 0)
        }) {
            return v;
        }
        // with no slack on the diametral path, tile it from one end
        if slack_path == 0 {
            if let Some(&v) = self.geodesic.iter().find(|&&v| st.cover[v] == 0) {
                return v;
            }
        }
        (0..n)
            .filter(|&v| st.cover[v] == 0)
            .min_by_key(|&v| (self.ball_len(v, r_max), v))
            .expect("something is uncovered")
    }

    fn place(&self, st: &mut SearchState, r: usize, c: usize) {
        st.assigned[r] = Some(c);
        st.center_used[c] = true;
        for &u in self.ball(c, r) {
            let u = u as usize;
            st.cover[u] += 1;
            if st.cover[u] == 1 {
                st.uncovered -= 1;
            }
        }
    }

    fn unplace(&self, st: &mut SearchState, r: usize, c: usize) {
        st.assigned[r] = None;
        st.center_used[c] = false;
        for &u in self.ball(c, r) {
            let u = u as usize;
            st.cover[u] -= 1;
            if st.cover[u] == 0 {
                st.uncovered += 1;
            }
        }
    }

    /// Turns a radius -> centre cover into a legal schedule of at most `k` rounds.
    fn replay(&self, assigned: &[Option<usize>]) -> BurningSchedule {
        let k = assigned.len();
        let mut burner = Burner::new(self.graph);
        let mut schedule = BurningSchedule::default();
        for round in 1..=k {
            if burner.is_complete() {
                break;
            }
            let source = match assigned[k - round] {
                Some(c) if !burner.burned().contains(c) => c,
                _ => (0..self.graph.vertex_count())
                    .find(|&v| !burner.burned().contains(v))
                    .expect("graph not complete"),
            };
            burner.advance(Some(source)).expect("source is unburnt");
            schedule.push(source);
        }
        assert!(burner.is_complete(), "cover did not burn the graph");
        schedule
    }
}

struct SearchState {
    cover: Vec<u32>,
    uncovered: usize,
    on_path: Vec<bool>,
    center_used: Vec<bool>,
    /// `assigned[r]` = centre of the ball with radius `r`.
    assigned: Vec<Option<usize>>,
    forbidden: Vec<bool>,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::burning::simulate;
    use crate::graph::{build_grid, build_path};

    #[test]
    fn path_of_nine() {
        let g = build_path(9).unwrap();
        let w = can_burn_in(&g, 3, DEFAULT_NODE_BUDGET).unwrap().unwrap();
        assert!(simulate(&g, &w).unwrap().complete);
        assert_eq!(can_burn_in(&g, 2, DEFAULT_NODE_BUDGET).unwrap(), None);
        let r = exact_burning_number(&g).unwrap();
        assert_eq!(r.k, 3);
    }

    #[test]
    fn k_equal_n_is_always_feasible() {
        let g = Graph::from_edges(5, [(0, 1), (2, 3)]).unwrap();
        assert!(can_burn_in(&g, 5, DEFAULT_NODE_BUDGET).unwrap().is_some());
        assert_eq!(exact_burning_number(&g).unwrap().k, 3);
    }

    #[test]
    fn single_vertex() {
        let r = exact_burning_number(&build_path(1).unwrap()).unwrap();
        assert_eq!((r.k, r.witness.sources()), (1, &[0][..]));
    }

    #[test]
    fn budget_exhaustion_is_distinct() {
        let g = build_grid(4, 4).unwrap();
        assert!(matches!(
            exact_burning_number_with_budget(&g, 1),
            Err(ExactError::BudgetExhausted { .. })
        ));
    }

    #[test]
    fn rejects_degenerate_input() {
        assert_eq!(
            exact_burning_number(&Graph::empty(0)),
            Err(ExactError::EmptyGraph)
        );
        assert_eq!(
            can_burn_in(&build_path(3).unwrap(), 0, 10),
            Err(ExactError::ZeroRounds)
        );
    }

    #[test]
    fn coverage_bound() {
        assert_eq!(coverage_lower_bound(9, &[1, 3, 5, 7, 9]), 3);
        assert_eq!(coverage_lower_bound(10, &[1, 3, 5, 7, 9]), 4);
        // edgeless graph: every ball has size one
        assert_eq!(coverage_lower_bound(5, &[1]), 5);
    }

    #[test]
    fn lower_bound_uses_the_diameter() {
        assert_eq!(lower_bound(&build_path(10).unwrap()).unwrap(), 4);
        assert_eq!(lower_bound(&build_grid(3, 3).unwrap()).unwrap(), 3);
    }
}
