//! Path forests realized as permutation graphs, and the forest `P(X)`.
//!
//! A segment of `t` consecutive values `x..=y` is permuted so that its
//! inversion graph is a single path; concatenating segments over disjoint
//! increasing value ranges creates no inversions between them.

use serde::{Deserialize, Serialize};

use super::extract::{bags_to_partition, Bag, BagKind};
use super::{derive_sets, DerivedSets, ReductionError};
use crate::burning::{clusters, verify_schedule, BurningSchedule};
use crate::graph::{build_permutation_graph, Graph, GraphError};
use crate::partition::{verify_partition, Partition3, ThreePartitionInstance};

/// Value range `x..=y` of one segment.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SegmentBounds {
    pub x: usize,
    pub y: usize,
}

impl SegmentBounds {
    pub fn len(&self) -> usize {
        self.y - self.x + 1
    }

    pub fn is_empty(&self) -> bool {
        false
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SegmentPlan {
    pub segments: Vec<SegmentBounds>,
}

impl SegmentPlan {
    pub fn from_lengths(lengths: &[usize]) -> Result<Self, GraphError> {
        if lengths.is_empty() {
            return Err(GraphError::InvalidSize("no segments".into()));
        }
        let mut segments = Vec::with_capacity(lengths.len());
        let mut x = 1;
        for &t in lengths {
            if t == 0 {
                return Err(GraphError::InvalidSize("segment of length 0".into()));
            }
            segments.push(SegmentBounds { x, y: x + t - 1 });
            x += t;
        }
        Ok(SegmentPlan { segments })
    }

    pub fn lengths(&self) -> Vec<usize> {
        self.segments.iter().map(SegmentBounds::len).collect()
    }

    pub fn total(&self) -> usize {
        self.segments.last().map_or(0, |s| s.y)
    }
}

/// Permutation of `x..=x+t-1` whose inversion graph is a path.
pub fn path_permutation(x: usize, t: usize) -> Result<Vec<usize>, GraphError> {
    if x == 0 || t == 0 {
        return Err(GraphError::InvalidSize(format!("x = {x}, t = {t}")));
    }
    let y = x + t - 1;
    let perm = match t {
        1 => vec![x],
        2 => vec![y, x],
        3 => vec![y, x, x + 1],
        4 => vec![x + 1, y, x, x + 2],
        _ => (1..=t)
            .map(|h| {
                if t.is_multiple_of(2) && h == t - 1 {
                    y
                } else if t % 2 == 1 && h == t {
                    y - 1
                } else if h % 2 == 1 {
                    x + h + 1
                } else if h == 2 {
                    x
                } else {
                    x + h - 3
                }
            })
            .collect(),
    };
    let local: Vec<usize> = perm.iter().map(|&v| v + 1 - x).collect();
    let g = build_permutation_graph(t, &local)?;
    if !is_single_path(&g) {
        return Err(GraphError::NotAPath(format!(
            "segment x = {x}, t = {t} does not induce a path"
        )));
    }
    Ok(perm)
}

fn is_single_path(g: &Graph) -> bool {
    let n = g.vertex_count();
    n >= 1 && g.edge_count() == n - 1 && g.is_connected() && (0..n).all(|v| g.degree(v) <= 2)
}

/// Concatenation of path segments over consecutive value ranges.
pub fn forest_permutation(lengths: &[usize]) -> Result<(Vec<usize>, SegmentPlan), GraphError> {
    let plan = SegmentPlan::from_lengths(lengths)?;
    let mut perm = Vec::with_capacity(plan.total());
    for seg in &plan.segments {
        perm.extend(path_permutation(seg.x, seg.len())?);
    }
    Ok((perm, plan))
}

/// Vertices of each component in path order, starting from the endpoint
/// with the smaller id. Component `j` holds the vertices of segment `j`.
fn path_orders(g: &Graph, plan: &SegmentPlan) -> Vec<Vec<usize>> {
    plan.segments
        .iter()
        .map(|seg| {
            let ids = seg.x - 1..seg.y;
            let start = ids
                .clone()
                .find(|&v| g.degree(v) <= 1)
                .expect("a path has an endpoint");
            let mut order = vec![start];
            let mut prev = usize::MAX;
            let mut cur = start;
            while let Some(&next) = g.neighbors(cur).iter().find(|&&w| w != prev) {
                prev = cur;
                cur = next;
                order.push(cur);
            }
            debug_assert_eq!(order.len(), seg.len());
            debug_assert!(order.iter().all(|v| ids.contains(v)));
            order
        })
        .collect()
}

#[derive(Debug, Clone)]
pub struct PGArtifact {
    pub instance: ThreePartitionInstance,
    pub derived: DerivedSets,
    pub permutation: Vec<usize>,
    pub plan: SegmentPlan,
    pub graph: Graph,
    /// Component `j` in path order; the first `n` are blocks, then fillers
    /// largest first.
    pub paths: Vec<Vec<usize>>,
}

impl PGArtifact {
    /// Optimal round count `m`.
    pub fn rounds(&self) -> usize {
        self.instance.max() as usize
    }

    fn component_of(&self) -> Vec<usize> {
        let mut comp = vec![0; self.graph.vertex_count()];
        for (j, path) in self.paths.iter().enumerate() {
            for &v in path {
                comp[v] = j;
            }
        }
        comp
    }
}

/// `n` segments of order `B'`, then one per filler value, largest first.
pub fn construct_px(inst: &ThreePartitionInstance) -> PGArtifact {
    let derived = derive_sets(inst);
    let n = inst.n() as usize;
    let mut lengths = vec![derived.shifted_target as usize; n];
    lengths.extend(derived.fillers_desc().iter().map(|&y| y as usize));
    let (permutation, plan) = forest_permutation(&lengths).expect("segment lengths are positive");
    let m = inst.max() as usize;
    assert_eq!(plan.total(), m * m);
    let graph =
        build_permutation_graph(permutation.len(), &permutation).expect("valid permutation");
    assert_eq!(graph.components().len(), lengths.len());
    let paths = path_orders(&graph, &plan);
    PGArtifact {
        instance: inst.clone(),
        derived,
        permutation,
        plan,
        graph,
        paths,
    }
}

/// Splits each block path into runs sized by its shifted triple and places
/// one source at the centre of each run, largest run first.
pub fn partition_to_schedule_pg(
    art: &PGArtifact,
    p: &Partition3,
) -> Result<BurningSchedule, ReductionError> {
    if !verify_partition(&art.instance, p) {
        return Err(ReductionError::PartitionMismatch);
    }
    let n = art.instance.n() as usize;
    // (len, component, offset)
    let mut runs: Vec<(usize, usize, usize)> = Vec::new();
    for (j, path) in art.paths.iter().enumerate() {
        if j < n {
            let mut at = 0;
            for &a in &p.triples()[j] {
                let len = (2 * a - 1) as usize;
                runs.push((len, j, at));
                at += len;
            }
            debug_assert_eq!(at, path.len());
        } else {
            runs.push((path.len(), j, 0));
        }
    }
    runs.sort_by(|a, b| b.0.cmp(&a.0).then((a.1, a.2).cmp(&(b.1, b.2))));
    assert_eq!(runs.len(), art.rounds());
    let sources = runs
        .iter()
        .map(|&(len, j, at)| art.paths[j][at + len / 2])
        .collect();
    let s = BurningSchedule::new(sources);
    debug_assert!(verify_schedule(&art.graph, &s).unwrap_or(false));
    Ok(s)
}

/// Recovers a partition from an optimal schedule of `P(X)`.
pub fn schedule_to_partition_pg(
    art: &PGArtifact,
    s: &BurningSchedule,
) -> Result<Partition3, ReductionError> {
    let rounds = art.rounds();
    if s.len() != rounds {
        return Err(ReductionError::WrongLength {
            expected: rounds,
            got: s.len(),
        });
    }
    if !verify_schedule(&art.graph, s)? {
        return Err(ReductionError::Incomplete);
    }
    let cl = clusters(&art.graph, s)?;
    if !cl.pairwise_disjoint() {
        return Err(ReductionError::NotOptimalShaped("clusters overlap".into()));
    }
    let comp = art.component_of();
    let n = art.instance.n() as usize;
    let mut bags: Vec<Bag> = (0..art.paths.len())
        .map(|j| Bag {
            kind: if j < n {
                BagKind::Block
            } else {
                BagKind::Filler(art.paths[j].len() as u64)
            },
            sizes: Vec::new(),
        })
        .collect();
    for (idx, cluster) in cl.clusters().iter().enumerate() {
        let want = 2 * cl.radius(idx) + 1;
        if cluster.len() != want {
            return Err(ReductionError::NotOptimalShaped(format!(
                "cluster {} has {} vertices instead of {want}",
                idx + 1,
                cluster.len()
            )));
        }
        let j = comp[s.sources()[idx]];
        bags[j].sizes.push(want as u64);
    }
    bags_to_partition(&art.instance, &art.derived, bags)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::burning::simulate;
    use crate::partition::validate_instance;

    #[test]
    fn explicit_small_segments() {
        assert_eq!(path_permutation(1, 1).unwrap(), vec![1]);
        assert_eq!(path_permutation(1, 2).unwrap(), vec![2, 1]);
        assert_eq!(path_permutation(1, 3).unwrap(), vec![3, 1, 2]);
        assert_eq!(path_permutation(1, 4).unwrap(), vec![2, 4, 1, 3]);
    }

    #[test]
    fn eight_and_five() {
        assert_eq!(
            path_permutation(1, 8).unwrap(),
            vec![3, 1, 5, 2, 7, 4, 8, 6]
        );
        assert_eq!(path_permutation(1, 5).unwrap(), vec![3, 1, 5, 2, 4]);
        let g = build_permutation_graph(5, &[3, 1, 5, 2, 4]).unwrap();
        // path 1-3-2-5-4 in values, ids are value - 1
        for (a, b) in [(1, 3), (3, 2), (2, 5), (5, 4)] {
            assert!(g.has_edge(a - 1, b - 1));
        }
    }

    #[test]
    fn shifted_segments_stay_paths() {
        for x in [1, 2, 7, 100] {
            for t in 1..=20 {
                let p = path_permutation(x, t).unwrap();
                let mut sorted = p.clone();
                sorted.sort_unstable();
                assert_eq!(sorted, (x..x + t).collect::<Vec<_>>());
            }
        }
    }

    #[test]
    fn two_segment_forest() {
        let (p, plan) = forest_permutation(&[2, 3]).unwrap();
        assert_eq!(p, vec![2, 1, 5, 3, 4]);
        assert_eq!(
            plan.segments,
            vec![SegmentBounds { x: 1, y: 2 }, SegmentBounds { x: 3, y: 5 }]
        );
        let g = build_permutation_graph(5, &p).unwrap();
        let edges: Vec<_> = g.edges().collect();
        assert_eq!(
            edges,
            vec![(0, 1), (2, 3), (2, 4), (3, 4)]
                .into_iter()
                .filter(|&e| e != (2, 3))
                .collect::<Vec<_>>()
        );
    }

    #[test]
    fn forest_rejects_bad_lengths() {
        assert!(forest_permutation(&[]).is_err());
        assert!(forest_permutation(&[3, 0]).is_err());
    }

    fn example() -> PGArtifact {
        construct_px(&validate_instance(&[10, 11, 12, 14, 15, 16]).unwrap())
    }

    #[test]
    fn example_forest() {
        let art = example();
        assert_eq!(art.graph.vertex_count(), 256);
        assert_eq!(
            art.plan.lengths(),
            vec![75, 75, 25, 17, 15, 13, 11, 9, 7, 5, 3, 1]
        );
        assert_eq!(art.graph.components().len(), 12);
        assert_eq!(art.plan.segments[1].y, 150);
    }

    #[test]
    fn example_round_trip() {
        let art = example();
        let p = Partition3::new(vec![[10, 14, 15], [11, 12, 16]]);
        let s = partition_to_schedule_pg(&art, &p).unwrap();
        let out = simulate(&art.graph, &s).unwrap();
        assert!(out.complete);
        assert_eq!(out.rounds_used, 16);
        let back = schedule_to_partition_pg(&art, &s).unwrap();
        assert!(verify_partition(&art.instance, &back));

        let mut longer = s.clone();
        longer.push(0);
        assert!(matches!(
            schedule_to_partition_pg(&art, &longer),
            Err(ReductionError::WrongLength {
                expected: 16,
                got: 17
            })
        ));
    }

    #[test]
    fn perturbed_witness_is_rejected() {
        let art = example();
        let p = Partition3::new(vec![[10, 14, 15], [11, 12, 16]]);
        let s = partition_to_schedule_pg(&art, &p).unwrap();
        let mut sources = s.sources().to_vec();
        // shift the largest-run source one step along its block
        let first = sources[0];
        sources[0] = *art.graph.neighbors(first).first().unwrap();
        let s = BurningSchedule::new(sources);
        assert!(schedule_to_partition_pg(&art, &s).is_err());
    }
}
