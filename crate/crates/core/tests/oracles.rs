//! Library results checked against deliberately naive reimplementations.

#![allow(clippy::needless_range_loop)]

use graphburn::burning::{simulate, verify_schedule};
use graphburn::exact::{exact_burning_number, lower_bound};
use graphburn::graph::{
    ball, build_grid, build_interval_graph, build_path, build_permutation_graph,
    build_random_graph, distances_from, longest_shortest_path, Interval, IntervalRepresentation,
    UNREACHABLE,
};
use graphburn::grid::{grid_lower_bound, max_burnable, schedule_capacity, GridSpec};
use graphburn::{BurningSchedule, Graph, VertexSet};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const INF: usize = usize::MAX / 4;

fn floyd_warshall(g: &Graph) -> Vec<Vec<usize>> {
    let n = g.vertex_count();
    let mut d = vec![vec![INF; n]; n];
    for (v, row) in d.iter_mut().enumerate() {
        row[v] = 0;
    }
    for (u, v) in g.edges() {
        d[u][v] = 1;
        d[v][u] = 1;
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                if d[i][k] + d[k][j] < d[i][j] {
                    d[i][j] = d[i][k] + d[k][j];
                }
            }
        }
    }
    d
}

/// Round-by-round process written from scratch: returns `None` for an
/// illegal schedule, otherwise whether everything is burnt at the end.
fn naive_burn(g: &Graph, s: &[usize]) -> Option<bool> {
    let n = g.vertex_count();
    let mut burnt = vec![false; n];
    for &x in s {
        let before = burnt.clone();
        for v in 0..n {
            if before[v] {
                for &w in g.neighbors(v) {
                    burnt[w] = true;
                }
            }
        }
        if before[x] {
            return None;
        }
        burnt[x] = true;
    }
    Some(burnt.iter().all(|&b| b))
}

/// Smallest `k` such that some legal `k`-source schedule burns everything,
/// by trying every sequence.
fn naive_burning_number(g: &Graph) -> usize {
    let n = g.vertex_count();
    for k in 1..=n {
        let mut seq = vec![0usize; k];
        loop {
            if naive_burn(g, &seq) == Some(true) {
                return k;
            }
            let mut i = k;
            loop {
                if i == 0 {
                    break;
                }
                i -= 1;
                seq[i] += 1;
                if seq[i] < n {
                    break;
                }
                seq[i] = 0;
                if i == 0 {
                    i = usize::MAX;
                    break;
                }
            }
            if i == usize::MAX {
                break;
            }
        }
    }
    unreachable!("k = n always suffices")
}

fn random_small_graph(rng: &mut ChaCha8Rng, max_n: usize) -> Graph {
    let n = rng.gen_range(1..=max_n);
    let p = rng.gen_range(0.1..0.7);
    build_random_graph(rng, n, p)
}

#[test]
fn bfs_matches_floyd_warshall() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..60 {
        let g = random_small_graph(&mut rng, 25);
        let fw = floyd_warshall(&g);
        for v in 0..g.vertex_count() {
            let d = distances_from(&g, &[v]);
            for u in 0..g.vertex_count() {
                let expect = if fw[v][u] >= INF {
                    UNREACHABLE
                } else {
                    fw[v][u]
                };
                assert_eq!(d[u], expect);
            }
        }
    }
}

#[test]
fn balls_match_distance_matrix() {
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    for _ in 0..40 {
        let g = random_small_graph(&mut rng, 20);
        let n = g.vertex_count();
        let fw = floyd_warshall(&g);
        let centres: Vec<usize> = (0..n).filter(|_| rng.gen_bool(0.3)).collect();
        if centres.is_empty() {
            continue;
        }
        let set = VertexSet::from_vertices(n, centres.iter().copied()).unwrap();
        for r in 0..5 {
            let b = ball(&g, &set, r).unwrap();
            for u in 0..n {
                let near = centres.iter().any(|&c| fw[c][u] <= r);
                assert_eq!(b.contains(u), near);
            }
        }
    }
}

#[test]
fn exact_matches_brute_force() {
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    for trial in 0..80 {
        let g = random_small_graph(&mut rng, 7);
        let naive = naive_burning_number(&g);
        let r = exact_burning_number(&g).unwrap();
        assert_eq!(
            r.k,
            naive,
            "trial {trial}: {:?}",
            g.edges().collect::<Vec<_>>()
        );
        assert_eq!(r.witness.len(), naive);
        assert_eq!(naive_burn(&g, r.witness.sources()), Some(true));
        assert!(lower_bound(&g).unwrap() <= naive);
    }
}

#[test]
fn simulate_matches_naive_process() {
    let mut rng = ChaCha8Rng::seed_from_u64(14);
    for _ in 0..300 {
        let g = random_small_graph(&mut rng, 15);
        let n = g.vertex_count();
        let mut vs: Vec<usize> = (0..n).collect();
        vs.shuffle(&mut rng);
        vs.truncate(rng.gen_range(1..=n));
        let s = BurningSchedule::new(vs.clone());
        match (simulate(&g, &s), naive_burn(&g, &vs)) {
            (Ok(out), Some(done)) => assert_eq!(out.complete, done),
            (Err(_), None) => {}
            (a, b) => panic!("disagree: {a:?} vs {b:?}"),
        }
    }
}

#[test]
fn cluster_cover_matches_distance_matrix() {
    let mut rng = ChaCha8Rng::seed_from_u64(15);
    for _ in 0..200 {
        let g = random_small_graph(&mut rng, 15);
        let n = g.vertex_count();
        let fw = floyd_warshall(&g);
        let mut vs: Vec<usize> = (0..n).collect();
        vs.shuffle(&mut rng);
        vs.truncate(rng.gen_range(1..=n));
        let k = vs.len();
        let covered = (0..n).all(|u| vs.iter().enumerate().any(|(i, &x)| fw[x][u] <= k - 1 - i));
        assert_eq!(
            verify_schedule(&g, &BurningSchedule::new(vs)).unwrap(),
            covered
        );
    }
}

#[test]
fn permutation_graph_matches_inversion_pairs() {
    let mut rng = ChaCha8Rng::seed_from_u64(16);
    for _ in 0..100 {
        let n = rng.gen_range(1..30);
        let mut p: Vec<usize> = (1..=n).collect();
        p.shuffle(&mut rng);
        let g = build_permutation_graph(n, &p).unwrap();
        let pos: Vec<usize> = {
            let mut pos = vec![0; n + 1];
            for (i, &v) in p.iter().enumerate() {
                pos[v] = i;
            }
            pos
        };
        for i in 1..=n {
            for j in i + 1..=n {
                assert_eq!(g.has_edge(i - 1, j - 1), pos[j] < pos[i]);
            }
        }
    }
}

#[test]
fn interval_graph_matches_pairwise_overlap() {
    let mut rng = ChaCha8Rng::seed_from_u64(17);
    for _ in 0..100 {
        let n = rng.gen_range(1..40);
        let ivs: Vec<Interval> = (0..n)
            .map(|_| {
                let l = rng.gen_range(-50..50);
                Interval::new(l, l + rng.gen_range(0..20))
            })
            .collect();
        let rep = IntervalRepresentation::new(ivs.clone()).unwrap();
        let g = build_interval_graph(&rep).unwrap();
        for a in 0..n {
            for b in a + 1..n {
                let overlap = ivs[a].left <= ivs[b].right && ivs[b].left <= ivs[a].right;
                assert_eq!(g.has_edge(a, b), overlap);
            }
        }
    }
}

#[test]
fn diametral_path_is_a_shortest_path_of_maximum_length() {
    let mut rng = ChaCha8Rng::seed_from_u64(18);
    for _ in 0..40 {
        let g = random_small_graph(&mut rng, 20);
        if !g.is_connected() {
            continue;
        }
        let fw = floyd_warshall(&g);
        let diam = fw.iter().flatten().copied().max().unwrap();
        let p = longest_shortest_path(&g).unwrap();
        assert_eq!(p.length(), diam);
        let (a, b) = (p.vertices()[0], *p.vertices().last().unwrap());
        assert_eq!(fw[a][b], diam);
    }
}

#[test]
fn grid_lower_bound_is_the_first_feasible_scan_value() {
    let mut rng = ChaCha8Rng::seed_from_u64(19);
    for _ in 0..2000 {
        let (l, b) = (rng.gen_range(1..3000usize), rng.gen_range(1..3000usize));
        let area = (l * b) as u128;
        let scan = (1u128..).find(|&i| 2 * i * i * i + i >= 3 * area).unwrap();
        assert_eq!(grid_lower_bound(GridSpec::new(l, b).unwrap()) as u128, scan);
        assert!(schedule_capacity(scan as u64) >= area);
    }
}

#[test]
fn max_burnable_matches_grid_balls() {
    let g = build_grid(41, 41).unwrap();
    let centre = 20 * 41 + 20;
    let d = distances_from(&g, &[centre]);
    for k in 1..=20u64 {
        let count = d.iter().filter(|&&x| x <= (k - 1) as usize).count() as u64;
        assert_eq!(max_burnable(k).unwrap(), count);
    }
}

#[test]
fn path_burning_numbers_match_brute_force() {
    for n in 1..=8 {
        let g = build_path(n).unwrap();
        assert_eq!(
            exact_burning_number(&g).unwrap().k,
            naive_burning_number(&g)
        );
    }
}

#[test]
fn small_grid_burning_number_matches_enumeration() {
    let g = build_grid(3, 3).unwrap();
    let k = naive_burning_number(&g);
    assert!(k <= 3);
    assert_eq!(exact_burning_number(&g).unwrap().k, k);
}
