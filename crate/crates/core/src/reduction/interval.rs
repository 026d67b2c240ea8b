//! The caterpillar interval graph `IG(X)`.
//!
//! A spine path is assembled from block paths (order `B'`), filler paths
//! (one per filler value) and comb teeth `T_1..T_{m+1}`, where `T_j` has
//! order `2(2m+1-j)+1` and every vertex of `T_j` except its two ends carries
//! a pendant leaf. Spine vertices get ids `0..(2m+1)^2` in spine order and
//! the leaves follow, tooth by tooth.

use serde::{Deserialize, Serialize};

use super::extract::{bags_to_partition, Bag, BagKind};
use super::{derive_sets, DerivedSets, ReductionError};
use crate::burning::{clusters, verify_schedule, BurningSchedule};
use crate::graph::{Graph, Interval, IntervalRepresentation};
use crate::partition::{verify_partition, Partition3, ThreePartitionInstance};

/// Role of a spine segment; indices are 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum SegmentKind {
    Block(usize),
    Filler(usize),
    Tooth(usize),
}

/// A labeled run `start..start+len` of spine positions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Segment {
    pub kind: SegmentKind,
    pub start: usize,
    pub len: usize,
}

impl Segment {
    pub fn end(&self) -> usize {
        self.start + self.len
    }

    pub fn contains(&self, p: usize) -> bool {
        (self.start..self.end()).contains(&p)
    }
}

/// Pendant leaves of one tooth as `(leaf, host)` pairs.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CombLeaves {
    pub tooth: usize,
    pub leaves: Vec<(usize, usize)>,
}

#[derive(Debug, Clone)]
pub struct IGArtifact {
    pub instance: ThreePartitionInstance,
    pub derived: DerivedSets,
    pub graph: Graph,
    /// Spine vertices in path order.
    pub spine: Vec<usize>,
    /// Segments in join order.
    pub segments: Vec<Segment>,
    pub combs: Vec<CombLeaves>,
}

impl IGArtifact {
    pub fn m(&self) -> usize {
        self.instance.max() as usize
    }

    /// Optimal round count `2m + 1`.
    pub fn rounds(&self) -> usize {
        2 * self.m() + 1
    }

    pub fn segment(&self, kind: SegmentKind) -> Option<&Segment> {
        self.segments.iter().find(|s| s.kind == kind)
    }

    /// Orders of `T_1..T_{m+1}`.
    pub fn tooth_orders(&self) -> Vec<usize> {
        (1..=self.m() + 1)
            .map(|j| {
                self.segment(SegmentKind::Tooth(j))
                    .expect("tooth exists")
                    .len
            })
            .collect()
    }

    /// Spine position of a vertex, `None` for leaves.
    pub fn spine_position(&self, v: usize) -> Option<usize> {
        (v < self.spine.len()).then_some(v)
    }

    fn segment_at(&self, p: usize) -> &Segment {
        let i = self.segments.partition_point(|s| s.end() <= p);
        &self.segments[i]
    }
}

/// Order of tooth `j` for largest element `m`.
pub fn tooth_order(m: usize, j: usize) -> usize {
    2 * (2 * m + 1 - j) + 1
}

pub fn construct_ig(inst: &ThreePartitionInstance) -> IGArtifact {
    let derived = derive_sets(inst);
    let m = inst.max() as usize;
    let n = inst.n() as usize;
    let block = derived.shifted_target as usize;
    let fillers = derived.fillers_desc();

    let mut kinds = Vec::new();
    for i in 1..=n {
        kinds.push((SegmentKind::Block(i), block));
        kinds.push((SegmentKind::Tooth(i), tooth_order(m, i)));
    }
    for (j, &y) in fillers.iter().enumerate() {
        kinds.push((SegmentKind::Filler(j + 1), y as usize));
        kinds.push((SegmentKind::Tooth(n + j + 1), tooth_order(m, n + j + 1)));
    }
    for j in n + fillers.len() + 1..=m + 1 {
        kinds.push((SegmentKind::Tooth(j), tooth_order(m, j)));
    }

    let mut segments = Vec::with_capacity(kinds.len());
    let mut start = 0;
    for (kind, len) in kinds {
        segments.push(Segment { kind, start, len });
        start += len;
    }
    let spine_len = start;
    assert_eq!(spine_len, (2 * m + 1) * (2 * m + 1));

    let mut edges: Vec<(usize, usize)> = (1..spine_len).map(|p| (p - 1, p)).collect();
    let mut combs = Vec::new();
    let mut next = spine_len;
    for seg in &segments {
        let SegmentKind::Tooth(j) = seg.kind else {
            continue;
        };
        let leaves: Vec<(usize, usize)> = (seg.start + 1..seg.end() - 1)
            .map(|host| {
                let leaf = next;
                next += 1;
                (leaf, host)
            })
            .collect();
        assert_eq!(leaves.len(), seg.len - 2);
        edges.extend(leaves.iter().copied());
        combs.push(CombLeaves { tooth: j, leaves });
    }
    assert_eq!(next, 7 * m * m + 6 * m);

    let graph = Graph::from_edges(next, edges).expect("construction is simple");
    debug_assert!(graph.is_connected());
    debug_assert_eq!(graph.edge_count(), graph.vertex_count() - 1);
    IGArtifact {
        instance: inst.clone(),
        derived,
        graph,
        spine: (0..spine_len).collect(),
        segments,
        combs,
    }
}

/// Spine position `p` maps to `[20p, 20p+30]`; a leaf on host `p` maps to
/// `[20p+12, 20p+18]`, inside the part of its host no other spine interval
/// reaches.
pub fn emit_interval_representation(art: &IGArtifact) -> IntervalRepresentation {
    let mut intervals = vec![Interval::new(0, 0); art.graph.vertex_count()];
    for (p, &v) in art.spine.iter().enumerate() {
        let p = p as i64;
        intervals[v] = Interval::new(20 * p, 20 * p + 30);
    }
    for comb in &art.combs {
        for &(leaf, host) in &comb.leaves {
            let p = host as i64;
            intervals[leaf] = Interval::new(20 * p + 12, 20 * p + 18);
        }
    }
    IntervalRepresentation::new(intervals).expect("intervals are well formed")
}

/// Standalone comb: a spine path of `len` vertices plus a leaf on every
/// spine vertex except the two ends. Leaves are numbered after the spine.
pub fn comb_graph(len: usize) -> Graph {
    assert!(len >= 1, "comb needs a spine vertex");
    let mut edges: Vec<(usize, usize)> = (1..len).map(|p| (p - 1, p)).collect();
    let mut next = len;
    for host in 1..len.saturating_sub(1) {
        edges.push((host, next));
        next += 1;
    }
    Graph::from_edges(next, edges).expect("comb is simple")
}

/// Planned source positions: source `i` is the centre of the `i`-th largest
/// piece (the `(2m-i+2)`-th vertex of that piece).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RVertexPlan {
    /// `(start, len)` of each piece, largest first.
    pub pieces: Vec<(usize, usize)>,
    pub sources: Vec<usize>,
}

impl RVertexPlan {
    pub fn schedule(&self) -> BurningSchedule {
        BurningSchedule::new(self.sources.clone())
    }
}

/// Splits each block by its shifted triple (left to right in the order the
/// triple is listed) and centres one source per piece.
pub fn plan_sources(art: &IGArtifact, p: &Partition3) -> Result<RVertexPlan, ReductionError> {
    if !verify_partition(&art.instance, p) {
        return Err(ReductionError::PartitionMismatch);
    }
    let mut pieces = Vec::new();
    for seg in &art.segments {
        match seg.kind {
            SegmentKind::Block(i) => {
                let mut at = seg.start;
                for &a in &p.triples()[i - 1] {
                    let len = (2 * a - 1) as usize;
                    pieces.push((at, len));
                    at += len;
                }
                debug_assert_eq!(at, seg.end());
            }
            _ => pieces.push((seg.start, seg.len)),
        }
    }
    pieces.sort_by(|a, b| b.1.cmp(&a.1).then(a.0.cmp(&b.0)));
    let m = art.m();
    assert_eq!(pieces.len(), 2 * m + 1);
    let sources = pieces
        .iter()
        .enumerate()
        .map(|(idx, &(start, len))| {
            let i = idx + 1;
            debug_assert_eq!(len, 2 * (2 * m + 1 - i) + 1);
            art.spine[start + (2 * m + 2 - i) - 1]
        })
        .collect();
    Ok(RVertexPlan { pieces, sources })
}

/// Schedule of `2m + 1` sources burning `IG(X)` from a partition.
pub fn partition_to_schedule(
    art: &IGArtifact,
    p: &Partition3,
) -> Result<BurningSchedule, ReductionError> {
    let s = plan_sources(art, p)?.schedule();
    debug_assert!(verify_schedule(&art.graph, &s).unwrap_or(false));
    Ok(s)
}

/// Recovers a partition from an optimal schedule of `IG(X)`.
pub fn schedule_to_partition(
    art: &IGArtifact,
    s: &BurningSchedule,
) -> Result<Partition3, ReductionError> {
    let rounds = art.rounds();
    if s.len() != rounds {
        return Err(ReductionError::WrongLength {
            expected: rounds,
            got: s.len(),
        });
    }
    if let Some((i, &v)) = s
        .sources()
        .iter()
        .enumerate()
        .find(|(_, &v)| art.spine_position(v).is_none())
    {
        return Err(ReductionError::NotOptimalShaped(format!(
            "source {} (vertex {v}) is off the spine",
            i + 1
        )));
    }
    if !verify_schedule(&art.graph, s)? {
        return Err(ReductionError::Incomplete);
    }

    let cl = clusters(&art.graph, s)?;
    let mut runs: Vec<(usize, usize, usize)> = Vec::with_capacity(rounds);
    for (idx, cluster) in cl.clusters().iter().enumerate() {
        let on_spine: Vec<usize> = cluster
            .iter()
            .filter_map(|v| art.spine_position(v))
            .collect();
        let lo = *on_spine.iter().min().expect("source is on the spine");
        let hi = *on_spine.iter().max().expect("source is on the spine");
        let want = 2 * cl.radius(idx) + 1;
        if hi - lo + 1 != want || on_spine.len() != want {
            return Err(ReductionError::NotOptimalShaped(format!(
                "cluster {} covers {} spine vertices instead of {want}",
                idx + 1,
                on_spine.len()
            )));
        }
        runs.push((lo, hi, idx));
    }
    runs.sort_unstable();
    if runs.windows(2).any(|w| w[0].1 >= w[1].0) {
        return Err(ReductionError::NotOptimalShaped(
            "clusters overlap on the spine".into(),
        ));
    }

    let fillers = art.derived.fillers_desc();
    let mut bags: Vec<Bag> = Vec::new();
    let bag_of = |kind: SegmentKind| -> Option<usize> {
        match kind {
            SegmentKind::Block(i) => Some(i - 1),
            SegmentKind::Filler(j) => Some(art.instance.n() as usize + j - 1),
            SegmentKind::Tooth(_) => None,
        }
    };
    for _ in 0..art.instance.n() {
        bags.push(Bag {
            kind: BagKind::Block,
            sizes: Vec::new(),
        });
    }
    for &y in &fillers {
        bags.push(Bag {
            kind: BagKind::Filler(y),
            sizes: Vec::new(),
        });
    }
    for &(lo, hi, _) in &runs {
        let seg = art.segment_at(lo);
        if !seg.contains(hi) {
            return Err(ReductionError::NotOptimalShaped(format!(
                "a cluster straddles the boundary of {:?}",
                seg.kind
            )));
        }
        if let Some(b) = bag_of(seg.kind) {
            bags[b].sizes.push((hi - lo + 1) as u64);
        }
    }
    bags_to_partition(&art.instance, &art.derived, bags)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::burning::simulate;
    use crate::graph::build_interval_graph;
    use crate::partition::validate_instance;

    fn example() -> IGArtifact {
        construct_ig(&validate_instance(&[10, 11, 12, 14, 15, 16]).unwrap())
    }

    fn example_partition() -> Partition3 {
        Partition3::new(vec![[10, 14, 15], [11, 12, 16]])
    }

    #[test]
    fn example_sizes() {
        let art = example();
        assert_eq!(art.spine.len(), 1089);
        assert_eq!(art.graph.vertex_count(), 1888);
        let teeth = art.tooth_orders();
        assert_eq!(teeth, (0..17).map(|i| 65 - 2 * i).collect::<Vec<_>>());
        assert_eq!(art.combs[0].leaves.len(), 63);
    }

    #[test]
    fn join_order() {
        let art = example();
        let kinds: Vec<SegmentKind> = art.segments.iter().map(|s| s.kind).collect();
        use SegmentKind::*;
        assert_eq!(
            &kinds[..6],
            &[Block(1), Tooth(1), Block(2), Tooth(2), Filler(1), Tooth(3)]
        );
        assert_eq!(kinds[kinds.len() - 1], Tooth(17));
        assert_eq!(art.segment(Filler(1)).unwrap().len, 25);
        assert_eq!(art.segment(Filler(10)).unwrap().len, 1);
    }

    #[test]
    fn intervals_rebuild_the_graph() {
        let art = example();
        let rep = emit_interval_representation(&art);
        let g = build_interval_graph(&rep).unwrap();
        assert_eq!(g, art.graph);
    }

    #[test]
    fn forward_schedule_burns_in_2m_plus_1() {
        let art = example();
        let plan = plan_sources(&art, &example_partition()).unwrap();
        // first source is the 33rd vertex of T_1
        let t1 = art.segment(SegmentKind::Tooth(1)).unwrap();
        assert_eq!(plan.sources[0], t1.start + 32);
        let s = plan.schedule();
        let out = simulate(&art.graph, &s).unwrap();
        assert!(out.complete);
        assert_eq!(out.rounds_used, 33);
        let mut lens: Vec<usize> = plan.pieces.iter().map(|p| p.1).collect();
        lens.sort_unstable();
        assert_eq!(lens, (0..33).map(|i| 2 * i + 1).collect::<Vec<_>>());
    }

    #[test]
    fn round_trip_recovers_partition() {
        let art = example();
        let s = partition_to_schedule(&art, &example_partition()).unwrap();
        let p = schedule_to_partition(&art, &s).unwrap();
        assert!(verify_partition(&art.instance, &p));
    }

    #[test]
    fn rejects_wrong_length_and_leaf_sources() {
        let art = example();
        let mut s = partition_to_schedule(&art, &example_partition()).unwrap();
        let mut longer = s.clone();
        longer.push(art.graph.vertex_count() - 1);
        assert!(matches!(
            schedule_to_partition(&art, &longer),
            Err(ReductionError::WrongLength {
                expected: 33,
                got: 34
            })
        ));
        let leaf = art.combs[0].leaves[0].0;
        let mut sources = s.sources().to_vec();
        sources[5] = leaf;
        s = BurningSchedule::new(sources);
        assert!(matches!(
            schedule_to_partition(&art, &s),
            Err(ReductionError::NotOptimalShaped(_))
        ));
        assert!(!verify_schedule(&art.graph, &s).unwrap());
    }

    #[test]
    fn rejects_mismatched_partition() {
        let art = example();
        let bad = Partition3::new(vec![[10, 14, 16], [11, 12, 15]]);
        assert_eq!(
            partition_to_schedule(&art, &bad),
            Err(ReductionError::PartitionMismatch)
        );
    }

    #[test]
    fn comb_shape() {
        let g = comb_graph(7);
        assert_eq!(g.vertex_count(), 12);
        assert_eq!(g.edge_count(), 11);
        assert_eq!(comb_graph(1).vertex_count(), 1);
        assert_eq!(comb_graph(2).vertex_count(), 2);
    }
}
