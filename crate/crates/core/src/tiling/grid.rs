//! Unit-triangle cells of a hexagon on the triangular lattice.
//!
//! Coordinates: row `r` runs downward from the top side; `x` is a doubled
//! horizontal coordinate, so lattice points on line `y` sit at integers
//! `x ≡ y (mod 2)` relative to the hexagon's left corner. The hexagon with
//! sides `(a, b, c)` has the horizontal side `b` on top, `a` as its upper-left
//! side and `c` as its upper-right side:
//!
//! ```text
//!          ________ b
//!       a /        \ c
//!        /          \
//!        \          /
//!       c \________/ a
//! ```
//!
//! An up cell `U(r,x)` has apex `(x, r)` and base `(x-1, r+1)`, `(x+1, r+1)`;
//! a down cell `D(r,x)` has top corners `(x-1, r)`, `(x+1, r)` and apex
//! `(x, r+1)`. A rhombus is an adjacent up/down pair.
//!
//! For the axis problems the hexagon is `(N, 2m, N)` (even) or
//! `(N+1, 2m-1, N+1)` (odd) and the symmetry axis is the vertical line
//! `x = 2m` resp. `x = 2m-1` (the horizontal axis of the usual picture,
//! rotated by 90 degrees). The axis rhombi are the vertical pairs
//! `U(r, axis)`-`D(r+1, axis)`, numbered `l = 1, ..., N` from the top with
//! `r = 2l-2` (even) resp. `r = 2l-1` (odd):
//!
//! ```text
//!   even, N = 1, m = 1: hexagon (1, 2, 1), axis x = 2
//!
//!      x: 0   2   4
//!         _______         y = 0
//!        /\  /\  /\
//!       /  \/  \/  \      y = 1
//!       \  /\  /\  /
//!        \/  \/  \/       y = 2
//!
//!   rhombus l = 1 is U(0,2) (middle up triangle of the top row)
//!   together with D(1,2) (middle down triangle of the bottom row)
//! ```

use std::collections::HashMap;
use std::fmt;

use serde::Serialize;

use crate::closed_forms::{HexagonShape, Parity};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Orientation {
    Up,
    Down,
}

/// Cells order by row, then `x`: the order in which the enumerator picks the
/// first uncovered cell.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Cell {
    pub row: i32,
    pub x: i32,
    pub orientation: Orientation,
}

impl Cell {
    pub fn up(row: i32, x: i32) -> Self {
        Self {
            row,
            x,
            orientation: Orientation::Up,
        }
    }

    pub fn down(row: i32, x: i32) -> Self {
        Self {
            row,
            x,
            orientation: Orientation::Down,
        }
    }

    pub fn neighbors(&self) -> [Cell; 3] {
        let (r, x) = (self.row, self.x);
        match self.orientation {
            Orientation::Up => [Cell::down(r, x - 1), Cell::down(r, x + 1), Cell::down(r + 1, x)],
            Orientation::Down => [Cell::up(r, x - 1), Cell::up(r, x + 1), Cell::up(r - 1, x)],
        }
    }

    /// `U(r,x)`-`D(r+1,x)`: the rhombus with a vertical long diagonal.
    pub fn is_vertical_pair(a: &Cell, b: &Cell) -> bool {
        let (u, d) = match (a.orientation, b.orientation) {
            (Orientation::Up, Orientation::Down) => (a, b),
            (Orientation::Down, Orientation::Up) => (b, a),
            _ => return false,
        };
        u.x == d.x && d.row == u.row + 1
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let t = match self.orientation {
            Orientation::Up => 'U',
            Orientation::Down => 'D',
        };
        write!(f, "{t}({},{})", self.row, self.x)
    }
}

/// Every cell of a hexagon, sorted.
pub fn hexagon_cells(shape: HexagonShape) -> Vec<Cell> {
    let (p, q, b) = (shape.a as i32, shape.c as i32, shape.b as i32);
    let left = |y: i32| if y <= p { -y } else { -p + (y - p) };
    let right = |y: i32| if y <= q { 2 * b + y } else { 2 * b + q - (y - q) };
    let inside = |x: i32, y: i32| left(y) <= x && x <= right(y);
    let mut cells = Vec::new();
    for r in 0..p + q {
        for x in (-2 * (p + q) - 2)..=(2 * b + 2 * (p + q) + 2) {
            if (x - r).rem_euclid(2) == 0 {
                if inside(x, r) && inside(x - 1, r + 1) && inside(x + 1, r + 1) {
                    cells.push(Cell::up(r, x));
                }
            } else if inside(x - 1, r) && inside(x + 1, r) && inside(x, r + 1) {
                cells.push(Cell::down(r, x));
            }
        }
    }
    cells.sort();
    cells
}

/// A set of cells to be tiled, optionally giving weight 1/2 to each vertical
/// rhombus on a distinguished vertical line.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Region {
    cells: Vec<Cell>,
    half_weight_axis: Option<i32>,
}

impl Region {
    pub fn new(mut cells: Vec<Cell>) -> Self {
        cells.sort();
        cells.dedup();
        Self {
            cells,
            half_weight_axis: None,
        }
    }

    pub fn hexagon(shape: HexagonShape) -> Self {
        Self::new(hexagon_cells(shape))
    }

    pub fn cells(&self) -> &[Cell] {
        &self.cells
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    pub fn contains(&self, c: &Cell) -> bool {
        self.cells.binary_search(c).is_ok()
    }

    pub fn half_weight_axis(&self) -> Option<i32> {
        self.half_weight_axis
    }

    pub fn with_half_weight_axis(mut self, x: i32) -> Self {
        self.half_weight_axis = Some(x);
        self
    }

    pub fn retain(mut self, f: impl Fn(&Cell) -> bool) -> Self {
        self.cells.retain(|c| f(c));
        self
    }

    /// Removes the given cells; returns `None` if one of them is missing.
    pub fn without(mut self, removed: &[Cell]) -> Option<Self> {
        for c in removed {
            let i = self.cells.binary_search(c).ok()?;
            self.cells.remove(i);
        }
        Some(self)
    }

    pub(crate) fn index_map(&self) -> HashMap<Cell, usize> {
        self.cells.iter().enumerate().map(|(i, c)| (*c, i)).collect()
    }
}

/// The vertical line `x` of the symmetry axis.
pub fn axis_x(m: u32, parity: Parity) -> i32 {
    match parity {
        Parity::Even => 2 * m as i32,
        Parity::Odd => 2 * m as i32 - 1,
    }
}

/// The two cells of axis rhombus `l`.
pub fn axis_rhombus(m: u32, l: u32, parity: Parity) -> (Cell, Cell) {
    let x = axis_x(m, parity);
    let r = match parity {
        Parity::Even => 2 * l as i32 - 2,
        Parity::Odd => 2 * l as i32 - 1,
    };
    (Cell::up(r, x), Cell::down(r + 1, x))
}
