//! Round-by-round burning and schedule verification.
//!
//! A schedule `(x_1, ..., x_k)` places `x_t` in round `t`; in the same round
//! fire spreads one hop from everything burnt by round `t - 1`. Two checks
//! are provided and must always agree on legal schedules: [`simulate`] runs
//! the process, [`verify_schedule`] tests whether the clusters
//! `N_{k-i}[x_i]` cover the graph.

use std::fmt;

use rand::seq::IteratorRandom;
use rand::Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{ball, distances_from, radical_center, Graph, VertexSet, UNREACHABLE};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum BurnError {
    #[error("schedule is empty")]
    EmptySchedule,
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    InvalidVertex { vertex: usize, n: usize },
    #[error("vertex {0} appears more than once in the schedule")]
    DuplicateSource(usize),
    #[error("round {round}: source {vertex} is already burnt")]
    SourceAlreadyBurnt { round: usize, vertex: usize },
}

/// Ordered fire sources; position `t` (1-indexed) is the source of round `t`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct BurningSchedule {
    sources: Vec<usize>,
}

impl BurningSchedule {
    pub fn new(sources: Vec<usize>) -> Self {
        BurningSchedule { sources }
    }

    pub fn sources(&self) -> &[usize] {
        &self.sources
    }

    pub fn len(&self) -> usize {
        self.sources.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sources.is_empty()
    }

    /// Source of round `round` (1-indexed).
    pub fn source(&self, round: usize) -> Option<usize> {
        round
            .checked_sub(1)
            .and_then(|i| self.sources.get(i).copied())
    }

    pub fn push(&mut self, v: usize) {
        self.sources.push(v);
    }

    pub fn into_sources(self) -> Vec<usize> {
        self.sources
    }

    fn check_ids(&self, g: &Graph) -> Result<(), BurnError> {
        if self.sources.is_empty() {
            return Err(BurnError::EmptySchedule);
        }
        let n = g.vertex_count();
        match self.sources.iter().find(|&&v| v >= n) {
            Some(&vertex) => Err(BurnError::InvalidVertex { vertex, n }),
            None => Ok(()),
        }
    }

    fn check_distinct(&self, n: usize) -> Result<(), BurnError> {
        let mut seen = VertexSet::new(n);
        match self.sources.iter().find(|&&v| !seen.insert(v)) {
            Some(&v) => Err(BurnError::DuplicateSource(v)),
            None => Ok(()),
        }
    }
}

impl From<Vec<usize>> for BurningSchedule {
    fn from(sources: Vec<usize>) -> Self {
        BurningSchedule::new(sources)
    }
}

impl fmt::Display for BurningSchedule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, v) in self.sources.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

/// Result of [`simulate`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BurnOutcome {
    pub rounds_used: usize,
    /// Cumulative burnt set after each round.
    pub burned_by_round: Vec<VertexSet>,
    pub complete: bool,
}

impl BurnOutcome {
    pub fn final_burned(&self) -> &VertexSet {
        self.burned_by_round.last().expect("at least one round")
    }

    /// First round after which everything is burnt.
    pub fn completion_round(&self) -> Option<usize> {
        self.burned_by_round
            .iter()
            .position(VertexSet::is_full)
            .map(|i| i + 1)
    }
}

/// Whether spreading stops with the last source or runs until nothing changes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum SpreadMode {
    #[default]
    ScheduleOnly,
    ToCompletion,
}

/// Incremental burning process.
#[derive(Debug, Clone)]
pub struct Burner<'g> {
    graph: &'g Graph,
    burned: VertexSet,
    frontier: Vec<usize>,
    round: usize,
}

impl<'g> Burner<'g> {
    pub fn new(graph: &'g Graph) -> Self {
        Burner {
            graph,
            burned: VertexSet::new(graph.vertex_count()),
            frontier: Vec::new(),
            round: 0,
        }
    }

    pub fn burned(&self) -> &VertexSet {
        &self.burned
    }

    pub fn round(&self) -> usize {
        self.round
    }

    pub fn is_complete(&self) -> bool {
        self.burned.is_full()
    }

    /// `true` when another source-free round would burn something.
    pub fn can_spread(&self) -> bool {
        self.frontier.iter().any(|&u| {
            self.graph
                .neighbors(u)
                .iter()
                .any(|&w| !self.burned.contains(w))
        })
    }

    /// Runs one round: the source (if any) must be unburnt at the start of the
    /// round; fire then spreads one hop from everything burnt previously.
    pub fn advance(&mut self, source: Option<usize>) -> Result<(), BurnError> {
        let round = self.round + 1;
        if let Some(v) = source {
            let n = self.graph.vertex_count();
            if v >= n {
                return Err(BurnError::InvalidVertex { vertex: v, n });
            }
            if self.burned.contains(v) {
                return Err(BurnError::SourceAlreadyBurnt { round, vertex: v });
            }
        }
        let mut next = Vec::new();
        for &u in &self.frontier {
            for &w in self.graph.neighbors(u) {
                if self.burned.insert(w) {
                    next.push(w);
                }
            }
        }
        if let Some(v) = source {
            if self.burned.insert(v) {
                next.push(v);
            }
        }
        self.frontier = next;
        self.round = round;
        Ok(())
    }
}

/// Runs the schedule round by round and reports the burnt sets.
pub fn simulate(g: &Graph, s: &BurningSchedule) -> Result<BurnOutcome, BurnError> {
    simulate_with(g, s, SpreadMode::ScheduleOnly)
}

pub fn simulate_with(
    g: &Graph,
    s: &BurningSchedule,
    mode: SpreadMode,
) -> Result<BurnOutcome, BurnError> {
    s.check_ids(g)?;
    let mut burner = Burner::new(g);
    let mut burned_by_round = Vec::with_capacity(s.len());
    for &v in s.sources() {
        burner.advance(Some(v))?;
        burned_by_round.push(burner.burned().clone());
    }
    if mode == SpreadMode::ToCompletion {
        while !burner.is_complete() && burner.can_spread() {
            burner.advance(None)?;
            burned_by_round.push(burner.burned().clone());
        }
    }
    Ok(BurnOutcome {
        rounds_used: burner.round(),
        complete: burner.is_complete(),
        burned_by_round,
    })
}

/// Legal schedule of at most `len` sources, each drawn uniformly from the
/// vertices still unburnt when its round starts. Stops early once the graph
/// is burnt.
pub fn random_schedule<R: Rng + ?Sized>(g: &Graph, rng: &mut R, len: usize) -> BurningSchedule {
    let mut burner = Burner::new(g);
    let mut s = BurningSchedule::default();
    for _ in 0..len {
        let Some(v) = (0..g.vertex_count())
            .filter(|&v| !burner.burned().contains(v))
            .choose(rng)
        else {
            break;
        };
        burner.advance(Some(v)).expect("v is unburnt");
        s.push(v);
    }
    s
}

/// Burning clusters of a schedule: cluster `i` (0-based) is
/// `N_{k-1-i}[x_{i+1}]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClusterList {
    clusters: Vec<VertexSet>,
}

impl ClusterList {
    pub fn clusters(&self) -> &[VertexSet] {
        &self.clusters
    }

    pub fn len(&self) -> usize {
        self.clusters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.clusters.is_empty()
    }

    /// Radius of cluster `i` (0-based).
    pub fn radius(&self, i: usize) -> usize {
        self.clusters.len() - 1 - i
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.clusters.iter().map(VertexSet::len).collect()
    }

    pub fn union(&self) -> VertexSet {
        let mut all = VertexSet::new(self.clusters[0].universe());
        for c in &self.clusters {
            all.union_with(c);
        }
        all
    }

    pub fn pairwise_disjoint(&self) -> bool {
        let mut seen = VertexSet::new(self.clusters[0].universe());
        self.clusters
            .iter()
            .all(|c| c.iter().all(|v| seen.insert(v)))
    }
}

pub fn clusters(g: &Graph, s: &BurningSchedule) -> Result<ClusterList, BurnError> {
    s.check_ids(g)?;
    s.check_distinct(g.vertex_count())?;
    let k = s.len();
    let clusters = s
        .sources()
        .iter()
        .enumerate()
        .map(|(i, &x)| {
            let center = VertexSet::from_vertices(g.vertex_count(), [x]).expect("id checked");
            ball(g, &center, k - 1 - i).expect("nonempty center")
        })
        .collect();
    Ok(ClusterList { clusters })
}

/// `true` iff the clusters of `s` cover every vertex.
pub fn verify_schedule(g: &Graph, s: &BurningSchedule) -> Result<bool, BurnError> {
    Ok(clusters(g, s)?.union().is_full())
}

/// Unburnt vertex farthest from the burnt set; ties go to the smallest id.
/// Vertices with no burnt vertex in their component count as infinitely far.
pub fn farthest_unburnt(g: &Graph, burned: &VertexSet) -> Option<usize> {
    let sources = burned.to_vec();
    let dist = distances_from(g, &sources);
    (0..g.vertex_count())
        .filter(|&v| !burned.contains(v))
        .max_by_key(|&v| (dist[v], std::cmp::Reverse(v)))
}

/// Farthest-first greedy schedule.
///
/// While some component has no burnt vertex, the radical center of the
/// largest such component is used; afterwards the unburnt vertex farthest
/// from the burnt set is taken (smallest id on ties).
pub fn greedy_burn(g: &Graph) -> BurningSchedule {
    let mut schedule = BurningSchedule::default();
    if g.vertex_count() == 0 {
        return schedule;
    }
    let components = g.components();
    let mut burner = Burner::new(g);
    while !burner.is_complete() {
        let burned = burner.burned();
        let untouched = components
            .iter()
            .filter(|c| c.iter().all(|&v| !burned.contains(v)))
            .max_by_key(|c| (c.len(), std::cmp::Reverse(c[0])));
        let source = match untouched {
            Some(comp) => {
                let sub = g.induced_subgraph(comp).expect("component ids are valid");
                comp[radical_center(&sub).expect("component is connected")]
            }
            None => farthest_unburnt(g, burned).expect("graph not yet complete"),
        };
        burner
            .advance(Some(source))
            .expect("source chosen among unburnt vertices");
        schedule.push(source);
    }
    schedule
}

/// Largest number of vertices any single source can burn with `radius` hops.
pub fn max_ball_sizes(g: &Graph, max_radius: usize) -> Vec<usize> {
    let mut best = vec![0; max_radius + 1];
    for v in 0..g.vertex_count() {
        let dist = distances_from(g, &[v]);
        let mut hist = vec![0usize; max_radius + 1];
        for &d in &dist {
            if d != UNREACHABLE && d <= max_radius {
                hist[d] += 1;
            }
        }
        let mut acc = 0;
        for (r, h) in hist.into_iter().enumerate() {
            acc += h;
            best[r] = best[r].max(acc);
        }
    }
    best
}
