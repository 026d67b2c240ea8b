//! Grid bounds and the subgrid burner.
//!
//! All bound formulas are evaluated in exact integer arithmetic.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::burning::{farthest_unburnt, simulate, verify_schedule, Burner, BurningSchedule};
use crate::graph::{build_grid, grid_vertex};
use crate::intmath::{iroot_ceil, iroot_floor};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GridError {
    #[error("grid dimensions must be positive, got {rows}x{cols}")]
    ZeroDimension { rows: usize, cols: usize },
    #[error("round count must be at least 1")]
    ZeroRounds,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct GridSpec {
    rows: usize,
    cols: usize,
}

impl GridSpec {
    pub fn new(rows: usize, cols: usize) -> Result<Self, GridError> {
        if rows == 0 || cols == 0 {
            return Err(GridError::ZeroDimension { rows, cols });
        }
        Ok(GridSpec { rows, cols })
    }

    pub fn square(side: usize) -> Result<Self, GridError> {
        GridSpec::new(side, side)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn vertex_count(&self) -> usize {
        self.rows * self.cols
    }
}

/// Most vertices one source can burn on an (unbounded) grid within `k`
/// rounds of being placed: `2k(k-1) + 1`.
pub fn max_burnable(k: u64) -> Result<u64, GridError> {
    if k == 0 {
        return Err(GridError::ZeroRounds);
    }
    let closed = 2 * k * (k - 1) + 1;
    debug_assert_eq!(Ok(closed), max_burnable_recurrence(k));
    Ok(closed)
}

/// `f_1 = 1`, `f_k = 4(k-1) + f_{k-1}`.
pub fn max_burnable_recurrence(k: u64) -> Result<u64, GridError> {
    if k == 0 {
        return Err(GridError::ZeroRounds);
    }
    Ok((2..=k).fold(1, |f, i| f + 4 * (i - 1)))
}

/// Vertices a `k`-source schedule can burn at most: `(2k^3 + k) / 3`.
pub fn schedule_capacity(k: u64) -> u128 {
    let k = k as u128;
    (2 * k * k * k + k) / 3
}

/// Smallest `i` with `(2i^3 + i) / 3 >= rows * cols`.
pub fn grid_lower_bound(spec: GridSpec) -> u64 {
    let area = spec.vertex_count() as u128;
    // (2i^3 + i)/3 <= i^3, so the cube-root ceiling is a valid start
    let mut i = iroot_ceil(area, 3).max(1);
    while 2 * i * i * i + i < 3 * area {
        i += 1;
    }
    i as u64
}

/// `ceil(2 l^{2/3} + 2 l^{1/3} + 1)`, evaluated exactly.
///
/// With `c = l^{1/3}` and `D = 2N - 1`, `2c^2 + 2c + 1 <= N` is equivalent
/// to `(8l + 3D + 1)^2 <= D (D + 3)^2`, which only involves integers.
pub fn upper_bound_formula(side: u64) -> u64 {
    let l = side as u128;
    let fits = |n: u128| {
        let d = 2 * n - 1;
        let lhs = 8 * l + 3 * d + 1;
        lhs * lhs <= d * (d + 3) * (d + 3)
    };
    let c = iroot_floor(l, 3);
    let mut n = 2 * c * c + 2 * c + 1;
    while !fits(n) {
        n += 1;
    }
    n as u64
}

/// Subgrid dimensions `ceil(rows^{2/3}) x ceil(cols^{2/3})`.
pub fn subgrid_dims(spec: GridSpec) -> (usize, usize) {
    let side = |x: usize| iroot_ceil((x as u128) * (x as u128), 3) as usize;
    (side(spec.rows), side(spec.cols))
}

/// Minimum-eccentricity cell of a `rows x cols` grid with the smallest id.
pub fn grid_radical_center(rows: usize, cols: usize) -> (usize, usize) {
    ((rows - 1) / 2, (cols - 1) / 2)
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GridBurnReport {
    pub schedule: BurningSchedule,
    #[serde(rename = "rounds")]
    pub rounds_used: u64,
    pub lower_bound: u64,
    /// Round-count formula evaluated at the longer side.
    #[serde(rename = "upper_bound")]
    pub upper_bound_formula: u64,
    pub ratio: f64,
}

/// Burns the grid with subgrids of side `ceil(l^{2/3}) x ceil(b^{2/3})`.
pub fn burn_grid_2approx(spec: GridSpec) -> GridBurnReport {
    let (h, w) = subgrid_dims(spec);
    burn_grid_with_subgrids(spec, h, w)
}

/// Subgrid burner with explicit subgrid dimensions.
///
/// Rounds `1..=k` take the radical centres of the subgrids in row-major
/// order (a centre that is already burnt is replaced by the farthest
/// unburnt vertex); afterwards the farthest unburnt vertex is added each
/// round until the grid is burnt.
pub fn burn_grid_with_subgrids(spec: GridSpec, sub_rows: usize, sub_cols: usize) -> GridBurnReport {
    assert!(
        sub_rows > 0 && sub_cols > 0,
        "subgrid dimensions must be positive"
    );
    let g = build_grid(spec.rows, spec.cols).expect("spec is valid");
    let mut centers = Vec::new();
    for r0 in (0..spec.rows).step_by(sub_rows) {
        for c0 in (0..spec.cols).step_by(sub_cols) {
            let h = sub_rows.min(spec.rows - r0);
            let w = sub_cols.min(spec.cols - c0);
            let (dr, dc) = grid_radical_center(h, w);
            centers.push(grid_vertex(spec.cols, r0 + dr, c0 + dc));
        }
    }

    let mut burner = Burner::new(&g);
    let mut schedule = BurningSchedule::default();
    let mut centers = centers.into_iter();
    while !burner.is_complete() {
        let source = match centers.next() {
            Some(x) if !burner.burned().contains(x) => x,
            _ => farthest_unburnt(&g, burner.burned()).expect("grid not complete"),
        };
        burner.advance(Some(source)).expect("source is unburnt");
        schedule.push(source);
    }

    assert!(verify_schedule(&g, &schedule).expect("schedule is well formed"));
    assert!(simulate(&g, &schedule).expect("schedule is legal").complete);

    let rounds_used = schedule.len() as u64;
    let lower_bound = grid_lower_bound(spec);
    GridBurnReport {
        schedule,
        rounds_used,
        lower_bound,
        upper_bound_formula: upper_bound_formula(spec.rows.max(spec.cols) as u64),
        ratio: rounds_used as f64 / lower_bound as f64,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{build_grid, eccentricity, radical_center};

    #[test]
    fn max_burnable_values() {
        assert_eq!(max_burnable(1), Ok(1));
        assert_eq!(max_burnable(3), Ok(13));
        assert_eq!(max_burnable(4), Ok(25));
        assert_eq!(max_burnable(0), Err(GridError::ZeroRounds));
        for k in 1..200 {
            assert_eq!(max_burnable(k), max_burnable_recurrence(k));
        }
    }

    #[test]
    fn lower_bound_values() {
        assert_eq!(grid_lower_bound(GridSpec::new(1, 1).unwrap()), 1);
        assert_eq!(grid_lower_bound(GridSpec::new(9, 9).unwrap()), 5);
        assert_eq!(grid_lower_bound(GridSpec::square(403).unwrap()), 63);
        assert_eq!(schedule_capacity(62), 158_906);
        assert_eq!(schedule_capacity(63), 166_719);
    }

    #[test]
    fn upper_bound_values() {
        assert_eq!(upper_bound_formula(1), 5);
        // 8 is a perfect cube: 2*4 + 2*2 + 1 exactly
        assert_eq!(upper_bound_formula(8), 13);
        assert_eq!(upper_bound_formula(27), 25);
        assert_eq!(upper_bound_formula(403), 125);
        assert_eq!(upper_bound_formula(450), 134);
    }

    #[test]
    fn upper_bound_matches_floats_away_from_integers() {
        for l in 1u64..5000 {
            let c = (l as f64).cbrt();
            let v = 2.0 * c * c + 2.0 * c + 1.0;
            if (v - v.round()).abs() > 1e-6 {
                assert_eq!(upper_bound_formula(l), v.ceil() as u64, "l = {l}");
            }
        }
    }

    #[test]
    fn rejects_zero_dimension() {
        assert!(GridSpec::new(0, 4).is_err());
        assert!(GridSpec::new(4, 0).is_err());
    }

    #[test]
    fn closed_form_radical_center() {
        for rows in 1..7 {
            for cols in 1..7 {
                let g = build_grid(rows, cols).unwrap();
                let (r, c) = grid_radical_center(rows, cols);
                let v = grid_vertex(cols, r, c);
                assert_eq!(radical_center(&g).unwrap(), v, "{rows}x{cols}");
                assert_eq!(
                    eccentricity(&g, v),
                    Some(rows / 2 + cols / 2),
                    "{rows}x{cols}"
                );
            }
        }
    }

    #[test]
    fn subgrid_dims_use_exact_ceilings() {
        assert_eq!(subgrid_dims(GridSpec::new(8, 27).unwrap()), (4, 9));
        assert_eq!(subgrid_dims(GridSpec::square(403).unwrap()), (55, 55));
    }

    #[test]
    fn trivial_grid() {
        let r = burn_grid_2approx(GridSpec::new(1, 1).unwrap());
        assert_eq!(r.rounds_used, 1);
        assert_eq!(r.schedule.sources(), &[0]);
    }

    #[test]
    fn eight_by_eight_with_four_subgrids() {
        let r = burn_grid_with_subgrids(GridSpec::square(8).unwrap(), 4, 4);
        let expected = [(1, 1), (1, 5), (5, 1), (5, 5)].map(|(r, c)| grid_vertex(8, r, c));
        assert_eq!(&r.schedule.sources()[..4], &expected);
        assert!(r.rounds_used >= r.lower_bound);
    }

    #[test]
    fn report_json_field_names() {
        let r = burn_grid_2approx(GridSpec::new(3, 4).unwrap());
        let json = serde_json::to_value(&r).unwrap();
        for key in ["schedule", "rounds", "lower_bound", "upper_bound", "ratio"] {
            assert!(json.get(key).is_some(), "missing {key}");
        }
    }
}
