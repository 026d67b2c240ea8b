//! Line-oriented text formats.
//!
//! Graph: a header `n m` followed by `m` lines `u v`. Intervals: a header
//! with the count, then one `id left right` line per vertex. Schedules,
//! instances and permutations are whitespace-separated integers. Blank
//! lines and lines starting with `#` are ignored everywhere.

use std::fmt::Write as _;
use std::str::FromStr;

use thiserror::Error;

use crate::burning::BurningSchedule;
use crate::graph::{Graph, GraphError, Interval, IntervalRepresentation};
use crate::partition::{validate_instance, PartitionError, ThreePartitionInstance};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum IoError {
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("input is empty")]
    Empty,
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Partition(#[from] PartitionError),
}

/// Non-comment lines with their 1-based line numbers.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn parse_fields<T: FromStr>(line: usize, text: &str, want: usize) -> Result<Vec<T>, IoError> {
    let fields: Vec<&str> = text.split_whitespace().collect();
    if fields.len() != want {
        return Err(IoError::Parse {
            line,
            msg: format!("expected {want} fields, found {}", fields.len()),
        });
    }
    fields
        .iter()
        .map(|f| {
            f.parse().map_err(|_| IoError::Parse {
                line,
                msg: format!("cannot parse {f:?}"),
            })
        })
        .collect()
}

fn parse_tokens<T: FromStr>(text: &str) -> Result<Vec<T>, IoError> {
    let mut out = Vec::new();
    for (line, l) in content_lines(text) {
        for f in l.split_whitespace() {
            out.push(f.parse().map_err(|_| IoError::Parse {
                line,
                msg: format!("cannot parse {f:?}"),
            })?);
        }
    }
    Ok(out)
}

fn join<T: ToString>(values: &[T]) -> String {
    let parts: Vec<String> = values.iter().map(T::to_string).collect();
    let mut s = parts.join(" ");
    s.push('\n');
    s
}

pub fn write_graph(g: &Graph) -> String {
    let mut s = format!("{} {}\n", g.vertex_count(), g.edge_count());
    for (u, v) in g.edges() {
        writeln!(s, "{u} {v}").expect("writing to a string");
    }
    s
}

pub fn parse_graph(text: &str) -> Result<Graph, IoError> {
    let mut lines = content_lines(text);
    let (line, header) = lines.next().ok_or(IoError::Empty)?;
    let head: Vec<usize> = parse_fields(line, header, 2)?;
    let (n, m) = (head[0], head[1]);
    let mut edges = Vec::with_capacity(m);
    for (line, l) in lines {
        let uv: Vec<usize> = parse_fields(line, l, 2)?;
        edges.push((uv[0], uv[1]));
    }
    if edges.len() != m {
        return Err(IoError::Parse {
            line,
            msg: format!("header announces {m} edges, found {}", edges.len()),
        });
    }
    Ok(Graph::from_edges(n, edges)?)
}

pub fn write_intervals(rep: &IntervalRepresentation) -> String {
    let mut s = format!("{}\n", rep.len());
    for (id, iv) in rep.intervals().iter().enumerate() {
        writeln!(s, "{id} {} {}", iv.left, iv.right).expect("writing to a string");
    }
    s
}

pub fn parse_intervals(text: &str) -> Result<IntervalRepresentation, IoError> {
    let mut lines = content_lines(text);
    let (line, header) = lines.next().ok_or(IoError::Empty)?;
    let n: usize = parse_fields::<usize>(line, header, 1)?[0];
    let mut slots: Vec<Option<Interval>> = vec![None; n];
    for (line, l) in lines {
        let f: Vec<i64> = parse_fields(line, l, 3)?;
        let id = usize::try_from(f[0])
            .ok()
            .filter(|&id| id < n)
            .ok_or_else(|| IoError::Parse {
                line,
                msg: format!("vertex id {} out of range", f[0]),
            })?;
        if slots[id].replace(Interval::new(f[1], f[2])).is_some() {
            return Err(IoError::Parse {
                line,
                msg: format!("vertex {id} listed twice"),
            });
        }
    }
    let intervals = slots
        .into_iter()
        .enumerate()
        .map(|(id, iv)| {
            iv.ok_or(IoError::Parse {
                line: 0,
                msg: format!("vertex {id} has no interval"),
            })
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(IntervalRepresentation::new(intervals)?)
}

pub fn write_schedule(s: &BurningSchedule) -> String {
    join(s.sources())
}

pub fn parse_schedule(text: &str) -> Result<BurningSchedule, IoError> {
    let sources: Vec<usize> = parse_tokens(text)?;
    if sources.is_empty() {
        return Err(IoError::Empty);
    }
    Ok(BurningSchedule::new(sources))
}

pub fn write_instance(inst: &ThreePartitionInstance) -> String {
    join(inst.values())
}

pub fn parse_instance(text: &str) -> Result<ThreePartitionInstance, IoError> {
    let values: Vec<i64> = parse_tokens(text)?;
    Ok(validate_instance(&values)?)
}

pub fn write_permutation(p: &[usize]) -> String {
    join(p)
}

/// Reads a permutation of `1..=n`.
pub fn parse_permutation(text: &str) -> Result<Vec<usize>, IoError> {
    let p: Vec<usize> = parse_tokens(text)?;
    if p.is_empty() {
        return Err(IoError::Empty);
    }
    let mut seen = vec![false; p.len() + 1];
    for &v in &p {
        if v == 0 || v > p.len() || std::mem::replace(&mut seen[v], true) {
            return Err(GraphError::NotAPermutation(v).into());
        }
    }
    Ok(p)
}
