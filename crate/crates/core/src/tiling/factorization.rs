//! Factorisation of the fixed-axis counts into half-region counts:
//!
//! * even parity: `count = 2^{N-r} R(S(N-1, m)) R~(C(N, m, L))`
//! * odd parity:  `count = 2^{N+1-r} R(S(N+1, m-1)) R~(C(N, m, L))`
//!
//! where `r = |L|`, `R(S)` counts path families of the simple half region
//! and `R~(C)` is the weighted path count of the complex half region.

use super::enumerate::{count_with_fixed_axis, tally};
use super::grid::{axis_rhombus, axis_x, Cell, Region};
use super::paths::{simple_half_count, weighted_half_count};
use crate::closed_forms::{axis_hexagon, AxisSet, HexagonShape, Parity};
use crate::error::Result;
use crate::exact::{pow2, to_integer, to_rational, ExactRational};
use crate::report::CheckOutcome;

/// Cells strictly left of the axis in the hexagon `(N+1, 2m, N+1)`; its
/// tilings are in bijection with the path families of `S(N, m)`.
pub fn simple_half_region(n: u32, m: u32) -> Region {
    let x = 2 * m as i32;
    Region::hexagon(HexagonShape::new(n + 1, 2 * m, n + 1)).retain(|c| c.x < x)
}

/// Cells on or right of the axis with the fixed rhombi removed and weight 1/2
/// on the remaining vertical axis rhombi; its weighted tiling count is
/// `R~(C(N, m, L))`.
pub fn complex_half_region(set: &AxisSet) -> Region {
    let x = axis_x(set.m, set.parity);
    let removed: Vec<Cell> = set
        .positions()
        .iter()
        .flat_map(|&l| {
            let (u, d) = axis_rhombus(set.m, l, set.parity);
            [u, d]
        })
        .collect();
    Region::hexagon(axis_hexagon(set.n, set.m, set.parity))
        .retain(|c| c.x >= x)
        .without(&removed)
        .expect("axis rhombi lie in the half region")
        .with_half_weight_axis(x)
}

/// Right-hand side of the factorisation, from the path counts.
pub fn factorized_count(set: &AxisSet, budget: u64) -> Result<ExactRational> {
    let (n, m, r) = (set.n, set.m, set.r());
    let weighted = weighted_half_count(n, m, set.positions(), budget)?;
    Ok(match set.parity {
        Parity::Even => {
            pow2(n as i64 - r as i64) * to_rational(&simple_half_count(n - 1, m, budget)?) * weighted
        }
        Parity::Odd => {
            pow2(n as i64 + 1 - r as i64)
                * to_rational(&simple_half_count(n + 1, m - 1, budget)?)
                * weighted
        }
    })
}

/// Compares the brute-force count with the factorised form and checks that
/// the path counts agree with the tilings of the corresponding half regions.
pub fn factorization_check(set: &AxisSet, budget: u64) -> Result<Vec<CheckOutcome>> {
    let brute = count_with_fixed_axis(set, budget)?;
    let product = factorized_count(set, budget)?;
    let mut out = vec![CheckOutcome::predicate(
        "factorised product is an integer",
        product.is_integer(),
        product.to_string(),
    )];
    if let Ok(p) = to_integer(&product, "factorised count") {
        out.push(CheckOutcome::compare("brute force = factorised product", &brute, &p));
    }
    let weighted_paths = weighted_half_count(set.n, set.m, set.positions(), budget)?;
    let weighted_tiles = tally(&complex_half_region(set), budget)?.weighted();
    out.push(CheckOutcome::compare(
        "complex half region: paths = weighted tilings",
        &weighted_paths,
        &weighted_tiles,
    ));
    let (sn, sm) = match set.parity {
        Parity::Even => (set.n - 1, set.m),
        Parity::Odd => (set.n + 1, set.m - 1),
    };
    out.push(CheckOutcome::compare(
        "simple half region: paths = tilings",
        &simple_half_count(sn, sm, budget)?,
        &tally(&simple_half_region(sn, sm), budget)?.count(),
    ));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::int;

    const B: u64 = 10_000_000;

    fn set(n: u32, m: u32, l: &[u32], parity: Parity) -> AxisSet {
        AxisSet::new(n, m, l.to_vec(), parity).unwrap()
    }

    #[test]
    fn examples() {
        assert_eq!(factorized_count(&set(2, 1, &[1], Parity::Even), B).unwrap(), int(8));
        assert_eq!(factorized_count(&set(1, 1, &[1], Parity::Even), B).unwrap(), int(1));
        assert_eq!(factorized_count(&set(2, 1, &[1, 2], Parity::Even), B).unwrap(), int(4));
    }

    #[test]
    fn small_grid_both_parities() {
        for n in 1..=3 {
            for m in 1..=2 {
                for parity in [Parity::Even, Parity::Odd] {
                    for l in 1..=n {
                        for o in factorization_check(&set(n, m, &[l], parity), B).unwrap() {
                            assert!(o.holds, "N={n} m={m} l={l} {parity}: {o:?}");
                        }
                    }
                    if n >= 2 {
                        for o in factorization_check(&set(n, m, &[1, n], parity), B).unwrap() {
                            assert!(o.holds, "N={n} m={m} {parity}: {o:?}");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn simple_region_tilings_for_zero_width() {
        for n in 0..4 {
            assert_eq!(tally(&simple_half_region(n, 0), B).unwrap().count(), 1.into());
        }
    }
}
