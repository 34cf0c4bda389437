//! Completion procedure for nonnegative solutions of `A·x = 0`.
//!
//! Breadth-first Contejean–Devie search: candidates start at the unit
//! vectors and are extended by `e_j` only when the defect `A·x` and the column
//! `A·e_j` point in opposite directions. Candidates dominating an already
//! found solution are pruned, which leaves exactly the minimal solutions.
//!
//! One variable may be bounded by 1. This turns the homogeneous solver into a
//! solver for `A·x = b` (append the column `-b` and bound its variable): the
//! solutions with that variable at 1 are the minimal inhomogeneous ones.

use std::collections::HashSet;

use crate::error::{Error, Result};

/// Frontier size at which the search gives up instead of exhausting memory.
const FRONTIER_LIMIT: usize = 4_000_000;

#[derive(Clone, Debug)]
pub(crate) struct Completion {
    columns: Vec<Vec<i64>>,
    bounded: Option<usize>,
    stop_at_first_bounded: bool,
}

impl Completion {
    /// `rows` is the coefficient matrix `A`, one row per equation.
    pub(crate) fn new(rows: &[Vec<i64>], nvars: usize) -> Self {
        let columns = (0..nvars).map(|j| rows.iter().map(|r| r[j]).collect()).collect();
        Completion { columns, bounded: None, stop_at_first_bounded: false }
    }

    /// Restricts variable `var` to `{0, 1}`.
    pub(crate) fn bound_to_one(mut self, var: usize) -> Self {
        self.bounded = Some(var);
        self
    }

    /// Stop as soon as a solution with the bounded variable at 1 appears.
    pub(crate) fn stop_at_first(mut self) -> Self {
        self.stop_at_first_bounded = true;
        self
    }

    pub(crate) fn run(&self) -> Result<Vec<Vec<i64>>> {
        let n = self.columns.len();
        let mut solutions: Vec<Vec<i64>> = Vec::new();
        let mut frontier: Vec<(Vec<i64>, Vec<i64>)> = (0..n)
            .map(|j| {
                let mut x = vec![0; n];
                x[j] = 1;
                (x, self.columns[j].clone())
            })
            .collect();

        while !frontier.is_empty() {
            let mut rest = Vec::with_capacity(frontier.len());
            for (x, defect) in frontier {
                if defect.iter().all(|&d| d == 0) {
                    if !dominates_any(&x, &solutions) {
                        let done = self.stop_at_first_bounded && self.bounded.is_some_and(|b| x[b] == 1);
                        solutions.push(x);
                        if done {
                            return Ok(solutions);
                        }
                    }
                } else {
                    rest.push((x, defect));
                }
            }

            let mut seen: HashSet<Vec<i64>> = HashSet::new();
            let mut next = Vec::new();
            for (x, defect) in &rest {
                for (j, col) in self.columns.iter().enumerate() {
                    if self.bounded == Some(j) && x[j] >= 1 {
                        continue;
                    }
                    let dot: i64 = defect.iter().zip(col).map(|(a, b)| a * b).sum();
                    if dot >= 0 {
                        continue;
                    }
                    let mut y = x.clone();
                    y[j] += 1;
                    if dominates_any(&y, &solutions) || seen.contains(&y) {
                        continue;
                    }
                    let d: Vec<i64> = defect.iter().zip(col).map(|(a, b)| a + b).collect();
                    seen.insert(y.clone());
                    next.push((y, d));
                }
            }
            if next.len() > FRONTIER_LIMIT {
                return Err(Error::SearchExhausted { what: "completion frontier", bound: FRONTIER_LIMIT as u32 });
            }
            frontier = next;
        }
        Ok(solutions)
    }
}

fn dominates_any(x: &[i64], found: &[Vec<i64>]) -> bool {
    found.iter().any(|s| s.iter().zip(x).all(|(a, b)| a <= b))
}
