//! Depth-first enumeration of rhombus tilings.
//!
//! The search always pairs the first uncovered cell (in row, then `x` order)
//! with one of its uncovered later neighbours. No memoisation: this is the
//! reference oracle and is kept deliberately plain.

use std::io::{self, Write};

use num_bigint::BigInt;

use super::grid::{axis_rhombus, Cell, Orientation, Region};
use crate::closed_forms::{AxisProblem, AxisSet, HexagonShape};
use crate::error::{Error, Result};
use crate::exact::{pow2, ExactInteger, ExactRational};

/// Default limit on visited search states.
pub const DEFAULT_BUDGET: u64 = 10_000_000;

/// Environment variable overriding [`DEFAULT_BUDGET`].
pub const BUDGET_ENV: &str = "LOZENGE_BUDGET";

/// [`DEFAULT_BUDGET`], or the value of `LOZENGE_BUDGET` if it parses.
pub fn default_budget() -> u64 {
    std::env::var(BUDGET_ENV)
        .ok()
        .and_then(|s| s.trim().parse().ok())
        .unwrap_or(DEFAULT_BUDGET)
}

/// Tiling counts of a region, split by the number of half-weight rhombi used.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TilingTally {
    /// `by_halves[k]` tilings use exactly `k` half-weight rhombi.
    pub by_halves: Vec<u64>,
    pub visited: u64,
}

impl TilingTally {
    pub fn count(&self) -> ExactInteger {
        self.by_halves.iter().map(|&c| BigInt::from(c)).sum()
    }

    pub fn weighted(&self) -> ExactRational {
        self.by_halves
            .iter()
            .enumerate()
            .map(|(k, &c)| ExactRational::from_integer(BigInt::from(c)) * pow2(-(k as i64)))
            .sum()
    }
}

type Visitor<'v> = &'v mut dyn FnMut(&[(usize, usize)]);

struct Search<'v> {
    /// Later neighbours of each cell and whether the pair has weight 1/2.
    later: Vec<Vec<(usize, bool)>>,
    covered: Vec<bool>,
    pairs: Vec<(usize, usize)>,
    by_halves: Vec<u64>,
    visited: u64,
    budget: u64,
    visitor: Option<Visitor<'v>>,
}

impl Search<'_> {
    fn run(&mut self, start: usize, halves: usize) -> Result<()> {
        self.visited += 1;
        if self.visited > self.budget {
            return Err(Error::BudgetExceeded {
                budget: self.budget,
            });
        }
        let n = self.covered.len();
        let mut i = start;
        while i < n && self.covered[i] {
            i += 1;
        }
        if i == n {
            if self.by_halves.len() <= halves {
                self.by_halves.resize(halves + 1, 0);
            }
            self.by_halves[halves] += 1;
            if let Some(v) = self.visitor.as_mut() {
                v(&self.pairs);
            }
            return Ok(());
        }
        self.covered[i] = true;
        for t in 0..self.later[i].len() {
            let (j, half) = self.later[i][t];
            if self.covered[j] {
                continue;
            }
            self.covered[j] = true;
            self.pairs.push((i, j));
            let r = self.run(i + 1, halves + half as usize);
            self.pairs.pop();
            self.covered[j] = false;
            r?;
        }
        self.covered[i] = false;
        Ok(())
    }
}

fn tally_impl(
    region: &Region,
    budget: u64,
    visitor: Option<Visitor<'_>>,
) -> Result<TilingTally> {
    let cells = region.cells();
    let index = region.index_map();
    let axis = region.half_weight_axis();
    let later = cells
        .iter()
        .enumerate()
        .map(|(i, c)| {
            c.neighbors()
                .iter()
                .filter_map(|nb| index.get(nb).copied())
                .filter(|&j| j > i)
                .map(|j| {
                    let half = axis.is_some_and(|x| {
                        c.x == x
                            && c.orientation == Orientation::Up
                            && Cell::is_vertical_pair(c, &cells[j])
                    });
                    (j, half)
                })
                .collect()
        })
        .collect();
    let mut search = Search {
        later,
        covered: vec![false; cells.len()],
        pairs: Vec::with_capacity(cells.len() / 2),
        by_halves: Vec::new(),
        visited: 0,
        budget,
        visitor,
    };
    search.run(0, 0)?;
    Ok(TilingTally {
        by_halves: search.by_halves,
        visited: search.visited,
    })
}

/// Counts the tilings of `region`, split by half-weight rhombi.
pub fn tally(region: &Region, budget: u64) -> Result<TilingTally> {
    tally_impl(region, budget, None)
}

/// Calls `visit` once per tiling with its rhombi as sorted cell pairs.
pub fn visit_tilings(
    region: &Region,
    budget: u64,
    mut visit: impl FnMut(&[(Cell, Cell)]),
) -> Result<TilingTally> {
    let cells = region.cells().to_vec();
    let mut buf: Vec<(Cell, Cell)> = Vec::new();
    let mut inner = |pairs: &[(usize, usize)]| {
        buf.clear();
        buf.extend(pairs.iter().map(|&(i, j)| {
            let (a, b) = (cells[i], cells[j]);
            if a <= b {
                (a, b)
            } else {
                (b, a)
            }
        }));
        buf.sort();
        visit(&buf);
    };
    tally_impl(region, budget, Some(&mut inner))
}

/// Number of rhombus tilings of the hexagon.
pub fn enumerate_tilings(shape: HexagonShape, budget: u64) -> Result<ExactInteger> {
    Ok(tally(&Region::hexagon(shape), budget)?.count())
}

/// Writes one line per tiling: its rhombi as sorted `cell-cell` pairs.
pub fn dump_tilings(shape: HexagonShape, budget: u64, out: &mut impl Write) -> Result<ExactInteger> {
    let mut io_err: Option<io::Error> = None;
    let tally = visit_tilings(&Region::hexagon(shape), budget, |pairs| {
        if io_err.is_some() {
            return;
        }
        let line: Vec<String> = pairs.iter().map(|(a, b)| format!("{a}-{b}")).collect();
        if let Err(e) = writeln!(out, "{}", line.join(" ")) {
            io_err = Some(e);
        }
    })?;
    if let Some(e) = io_err {
        return Err(Error::Domain(format!("writing tilings failed: {e}")));
    }
    Ok(tally.count())
}

/// The hexagon of `set` with all fixed axis rhombi removed.
pub fn fixed_axis_region(set: &AxisSet) -> Region {
    let removed: Vec<Cell> = set
        .positions()
        .iter()
        .flat_map(|&l| {
            let (u, d) = axis_rhombus(set.m, l, set.parity);
            [u, d]
        })
        .collect();
    Region::hexagon(set.hexagon())
        .without(&removed)
        .expect("axis rhombi lie inside the hexagon")
}

/// Number of tilings of the hexagon containing every rhombus of `set`.
pub fn count_with_fixed_axis(set: &AxisSet, budget: u64) -> Result<ExactInteger> {
    Ok(tally(&fixed_axis_region(set), budget)?.count())
}

pub fn count_with_fixed_rhombus(p: &AxisProblem, budget: u64) -> Result<ExactInteger> {
    count_with_fixed_axis(&p.as_set(), budget)
}
