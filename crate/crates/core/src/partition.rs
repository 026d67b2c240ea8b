//! Distinct 3-partition instances and a backtracking solver.

use std::collections::BTreeSet;
use std::fmt;

use rand::seq::SliceRandom;
use rand::Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PartitionError {
    #[error("instance is empty")]
    Empty,
    #[error("instance has {0} elements, not a multiple of three")]
    SizeNotMultipleOfThree(usize),
    #[error("element {0} is not a positive integer")]
    NonPositive(i64),
    #[error("element {0} occurs more than once")]
    Duplicate(u64),
    #[error("sum {sum} is not divisible by n = {n}")]
    SumNotDivisible { sum: u64, n: u64 },
    #[error("element {value} is outside the open window (B/4, B/2) for B = {target}")]
    OutsideWindow { value: u64, target: u64 },
    #[error("max element {max} is smaller than 3n = {three_n}")]
    NegativeSpare { max: u64, three_n: u64 },
    #[error("search budget exhausted after {explored} nodes")]
    BudgetExhausted { explored: u64 },
}

/// A validated distinct 3-partition instance.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "Vec<i64>", into = "Vec<i64>")]
pub struct ThreePartitionInstance {
    values: Vec<u64>,
    n: u64,
    target: u64,
    max: u64,
}

impl ThreePartitionInstance {
    /// Elements in input order.
    pub fn values(&self) -> &[u64] {
        &self.values
    }

    /// Number of triples.
    pub fn n(&self) -> u64 {
        self.n
    }

    /// Common triple sum `B`.
    pub fn target(&self) -> u64 {
        self.target
    }

    /// Largest element `m`.
    pub fn max(&self) -> u64 {
        self.max
    }

    /// `m - 3n`, the number of odd values up to `2m - 1` not hit by the
    /// odd-shifted elements.
    pub fn spare(&self) -> u64 {
        self.max - 3 * self.n
    }
}

impl TryFrom<Vec<i64>> for ThreePartitionInstance {
    type Error = PartitionError;

    fn try_from(values: Vec<i64>) -> Result<Self, Self::Error> {
        validate_instance(&values)
    }
}

impl From<ThreePartitionInstance> for Vec<i64> {
    fn from(inst: ThreePartitionInstance) -> Self {
        inst.values.iter().map(|&v| v as i64).collect()
    }
}

impl fmt::Display for ThreePartitionInstance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.values.iter().map(u64::to_string).collect();
        f.write_str(&parts.join(" "))
    }
}

/// Checks every structural requirement and derives `n`, `B`, `m`.
pub fn validate_instance(values: &[i64]) -> Result<ThreePartitionInstance, PartitionError> {
    if values.is_empty() {
        return Err(PartitionError::Empty);
    }
    if !values.len().is_multiple_of(3) {
        return Err(PartitionError::SizeNotMultipleOfThree(values.len()));
    }
    if let Some(&v) = values.iter().find(|&&v| v <= 0) {
        return Err(PartitionError::NonPositive(v));
    }
    let values: Vec<u64> = values.iter().map(|&v| v as u64).collect();
    let mut seen = BTreeSet::new();
    if let Some(&v) = values.iter().find(|&&v| !seen.insert(v)) {
        return Err(PartitionError::Duplicate(v));
    }
    let n = (values.len() / 3) as u64;
    let sum: u64 = values.iter().sum();
    if !sum.is_multiple_of(n) {
        return Err(PartitionError::SumNotDivisible { sum, n });
    }
    let target = sum / n;
    if let Some(&value) = values
        .iter()
        .find(|&&a| !(4 * a > target && 2 * a < target))
    {
        return Err(PartitionError::OutsideWindow { value, target });
    }
    let max = *values.iter().max().expect("nonempty");
    if max < 3 * n {
        return Err(PartitionError::NegativeSpare {
            max,
            three_n: 3 * n,
        });
    }
    Ok(ThreePartitionInstance {
        values,
        n,
        target,
        max,
    })
}

/// `n` triples; each triple is kept in ascending order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Partition3 {
    triples: Vec<[u64; 3]>,
}

impl Partition3 {
    pub fn new(triples: Vec<[u64; 3]>) -> Self {
        let triples = triples
            .into_iter()
            .map(|mut t| {
                t.sort_unstable();
                t
            })
            .collect();
        Partition3 { triples }
    }

    pub fn triples(&self) -> &[[u64; 3]] {
        &self.triples
    }

    /// Same triples sorted, for order-insensitive comparison.
    pub fn canonical(&self) -> Partition3 {
        let mut triples = self.triples.clone();
        triples.sort_unstable();
        Partition3 { triples }
    }
}

impl fmt::Display for Partition3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, t) in self.triples.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "{} {} {}", t[0], t[1], t[2])?;
        }
        Ok(())
    }
}

/// `true` iff the triples sum to `B` and use every element exactly once.
pub fn verify_partition(inst: &ThreePartitionInstance, p: &Partition3) -> bool {
    if p.triples.len() as u64 != inst.n {
        return false;
    }
    if p.triples
        .iter()
        .any(|t| t.iter().sum::<u64>() != inst.target)
    {
        return false;
    }
    let mut used: Vec<u64> = p.triples.iter().flatten().copied().collect();
    let mut expected = inst.values.clone();
    used.sort_unstable();
    expected.sort_unstable();
    used == expected
}

/// Backtracking: the largest unused element is matched with a pair of
/// smaller unused elements completing the sum.
pub fn solve_3partition(
    inst: &ThreePartitionInstance,
    budget: u64,
) -> Result<Option<Partition3>, PartitionError> {
    let mut sorted = inst.values.clone();
    sorted.sort_unstable_by(|a, b| b.cmp(a));
    let mut solver = Solver {
        values: sorted,
        target: inst.target,
        used: vec![false; inst.values.len()],
        triples: Vec::new(),
        explored: 0,
        budget,
    };
    if solver.search()? {
        Ok(Some(Partition3::new(solver.triples).canonical()))
    } else {
        Ok(None)
    }
}

struct Solver {
    values: Vec<u64>,
    target: u64,
    used: Vec<bool>,
    triples: Vec<[u64; 3]>,
    explored: u64,
    budget: u64,
}

impl Solver {
    fn search(&mut self) -> Result<bool, PartitionError> {
        self.explored += 1;
        if self.explored > self.budget {
            return Err(PartitionError::BudgetExhausted {
                explored: self.explored,
            });
        }
        let Some(first) = self.used.iter().position(|&u| !u) else {
            return Ok(true);
        };
        let len = self.values.len();
        self.used[first] = true;
        let rest = self.target - self.values[first];
        for j in first + 1..len {
            if self.used[j] || self.values[j] >= rest {
                continue;
            }
            let want = rest - self.values[j];
            if want >= self.values[j] {
                // values are descending; later partners only get smaller
                break;
            }
            let Some(l) = (j + 1..len).find(|&l| !self.used[l] && self.values[l] == want) else {
                continue;
            };
            self.used[j] = true;
            self.used[l] = true;
            self.triples
                .push([self.values[first], self.values[j], self.values[l]]);
            if self.search()? {
                return Ok(true);
            }
            self.triples.pop();
            self.used[j] = false;
            self.used[l] = false;
        }
        self.used[first] = false;
        Ok(false)
    }
}

/// Random instance with a planted solution: `n` disjoint triples with a
/// common sum, all elements at most `max_value`. Returns `None` when no
/// planting succeeds after a few attempts.
pub fn random_solvable_instance<R: Rng + ?Sized>(
    rng: &mut R,
    n: usize,
    max_value: u64,
) -> Option<(ThreePartitionInstance, Partition3)> {
    if n == 0 || max_value < 6 {
        return None;
    }
    for _ in 0..200 {
        let target = rng.gen_range(15..=3 * max_value - 3);
        let mut triples = Vec::new();
        for a in 1..=max_value {
            for b in a + 1..=max_value {
                let Some(c) = target.checked_sub(a + b) else {
                    continue;
                };
                if c > b && c <= max_value && 4 * a > target && 2 * c < target {
                    triples.push([a, b, c]);
                }
            }
        }
        if triples.len() < n {
            continue;
        }
        for _ in 0..50 {
            triples.shuffle(rng);
            let mut used = BTreeSet::new();
            let mut chosen = Vec::new();
            for t in &triples {
                if t.iter().all(|v| !used.contains(v)) {
                    used.extend(t.iter().copied());
                    chosen.push(*t);
                    if chosen.len() == n {
                        break;
                    }
                }
            }
            if chosen.len() == n {
                let mut values: Vec<i64> = chosen.iter().flatten().map(|&v| v as i64).collect();
                values.shuffle(rng);
                let inst = validate_instance(&values).expect("planted instance is valid");
                return Some((inst, Partition3::new(chosen).canonical()));
            }
        }
    }
    None
}
