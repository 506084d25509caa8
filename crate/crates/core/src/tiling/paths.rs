//! Families of nonintersecting lattice paths for the two half regions.
//!
//! Paths use unit steps east `(+1, 0)` and south `(0, -1)` and must be
//! pairwise vertex-disjoint.
//!
//! * Simple half region `S(N, m)`: path `P_i` runs from `(i, i)` to
//!   `(2i, i-m)`, `i = 1..N`.
//! * Complex half region `C(N, m, L)`: path `P_i` runs from
//!   `(2i-N-1, i+m)` to `(i, i)` for `i ∉ L`, with weight 1/2 if its first
//!   step is east, and from `(2i-N, i+m)` to `(i, i)` for `i ∈ L`.

use std::collections::HashSet;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::exact::{pow2, ExactInteger, ExactRational};

type Point = (i64, i64);

struct PathSpec {
    start: Point,
    end: Point,
    halve_if_east_first: bool,
}

struct Walk {
    paths: Vec<PathSpec>,
    occupied: HashSet<Point>,
    by_halves: Vec<u64>,
    visited: u64,
    budget: u64,
}

impl Walk {
    fn tick(&mut self) -> Result<()> {
        self.visited += 1;
        if self.visited > self.budget {
            return Err(Error::BudgetExceeded {
                budget: self.budget,
            });
        }
        Ok(())
    }

    fn start_path(&mut self, idx: usize, halves: usize) -> Result<()> {
        if idx == self.paths.len() {
            if self.by_halves.len() <= halves {
                self.by_halves.resize(halves + 1, 0);
            }
            self.by_halves[halves] += 1;
            return Ok(());
        }
        let s = self.paths[idx].start;
        if !self.occupied.insert(s) {
            return Ok(());
        }
        let r = self.extend(idx, s, halves, true);
        self.occupied.remove(&s);
        r
    }

    fn extend(&mut self, idx: usize, at: Point, halves: usize, first: bool) -> Result<()> {
        self.tick()?;
        let end = self.paths[idx].end;
        if at == end {
            return self.start_path(idx + 1, halves);
        }
        let halve = first && self.paths[idx].halve_if_east_first;
        let mut steps: [Option<(Point, usize)>; 2] = [None, None];
        if at.0 < end.0 {
            steps[0] = Some(((at.0 + 1, at.1), halves + halve as usize));
        }
        if at.1 > end.1 {
            steps[1] = Some(((at.0, at.1 - 1), halves));
        }
        for (next, h) in steps.into_iter().flatten() {
            if self.occupied.insert(next) {
                let r = self.extend(idx, next, h, false);
                self.occupied.remove(&next);
                r?;
            }
        }
        Ok(())
    }
}

fn run(paths: Vec<PathSpec>, budget: u64) -> Result<Vec<u64>> {
    let mut w = Walk {
        paths,
        occupied: HashSet::new(),
        by_halves: Vec::new(),
        visited: 0,
        budget,
    };
    w.start_path(0, 0)?;
    Ok(w.by_halves)
}

/// Number of nonintersecting path families for `S(N, m)`.
pub fn simple_half_count(n: u32, m: u32, budget: u64) -> Result<ExactInteger> {
    let (n, m) = (n as i64, m as i64);
    let paths = (1..=n)
        .map(|i| PathSpec {
            start: (i, i),
            end: (2 * i, i - m),
            halve_if_east_first: false,
        })
        .collect();
    Ok(run(paths, budget)?.into_iter().map(BigInt::from).sum())
}

/// Weighted number of nonintersecting path families for `C(N, m, L)`.
pub fn weighted_half_count(n: u32, m: u32, positions: &[u32], budget: u64) -> Result<ExactRational> {
    let (nn, mm) = (n as i64, m as i64);
    let paths = (1..=nn)
        .map(|i| {
            let fixed = positions.contains(&(i as u32));
            let x0 = if fixed { 2 * i - nn } else { 2 * i - nn - 1 };
            PathSpec {
                start: (x0, i + mm),
                end: (i, i),
                halve_if_east_first: !fixed,
            }
        })
        .collect();
    Ok(run(paths, budget)?
        .into_iter()
        .enumerate()
        .map(|(k, c)| ExactRational::from_integer(BigInt::from(c)) * pow2(-(k as i64)))
        .sum())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::closed_forms::lemma_simple_rhs;
    use crate::determinant::build_complex_matrix;
    use crate::exact::{big, int};

    const B: u64 = 10_000_000;

    #[test]
    fn simple_examples() {
        for m in 0..4 {
            assert_eq!(simple_half_count(0, m, B).unwrap(), big(1));
        }
        assert_eq!(simple_half_count(1, 1, B).unwrap(), big(2));
        assert_eq!(simple_half_count(2, 1, B).unwrap(), big(5));
    }

    #[test]
    fn weighted_examples() {
        assert_eq!(weighted_half_count(1, 1, &[1], B).unwrap(), int(1));
        assert_eq!(weighted_half_count(2, 1, &[1], B).unwrap(), int(2));
        assert_eq!(weighted_half_count(2, 1, &[1, 2], B).unwrap(), int(2));
    }

    #[test]
    fn simple_paths_match_product() {
        for n in 0..=4 {
            for m in 0..=3 {
                assert_eq!(
                    simple_half_count(n, m, B).unwrap(),
                    lemma_simple_rhs(n, m),
                    "N={n} m={m}"
                );
            }
        }
    }

    #[test]
    fn weighted_paths_match_determinant() {
        for n in 1..=4 {
            for m in 1..=3 {
                for l in 1..=n {
                    assert_eq!(
                        weighted_half_count(n, m, &[l], B).unwrap(),
                        build_complex_matrix(n, m, &[l]).det_exact().unwrap(),
                        "N={n} m={m} l={l}"
                    );
                }
            }
        }
    }

    #[test]
    fn budget_is_enforced() {
        assert!(matches!(
            simple_half_count(4, 4, 50),
            Err(Error::BudgetExceeded { budget: 50 })
        ));
    }
}
