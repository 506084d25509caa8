//! Limit of the proportion as `N -> inf` with `m ~ aN`, `l ~ bN`.

use std::f64::consts::{FRAC_PI_2, PI};
use std::fmt::Write as _;

use rayon::prelude::*;
use serde::Serialize;

use crate::closed_forms::{proportion, AxisProblem, Parity};
use crate::error::{range_err, Error, Result};
use crate::exact::{to_f64, ExactRational};

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct AsymptoticParams {
    pub a: f64,
    pub b: f64,
}

impl AsymptoticParams {
    /// Requires `a >= 0` and `0 < b < 1`.
    pub fn new(a: f64, b: f64) -> Result<Self> {
        if !a.is_finite() || a < 0.0 {
            return range_err(format!("need a >= 0, got a = {a}"));
        }
        if !b.is_finite() || b <= 0.0 || b >= 1.0 {
            return range_err(format!("need 0 < b < 1, got b = {b}"));
        }
        Ok(Self { a, b })
    }

    /// `m = round(aN)` and `l = round(bN)` clamped to `1..=N`, halves rounded up.
    pub fn discretize(&self, n: u32) -> (u32, u32) {
        let nf = n as f64;
        let m = (self.a * nf + 0.5).floor() as u32;
        let l = ((self.b * nf + 0.5).floor() as u32).clamp(1, n.max(1));
        (m, l)
    }
}

/// `(2/pi) asin( sqrt(b(1-b)) / sqrt((a+b)(a-b+1)) )`.
pub fn arcsine_value(p: &AsymptoticParams) -> Result<f64> {
    let (a, b) = (p.a, p.b);
    let x = (b * (1.0 - b)).sqrt() / ((a + b) * (a - b + 1.0)).sqrt();
    if x > 1.0 + 1e-12 {
        return Err(Error::Domain(format!("asin argument {x} exceeds 1")));
    }
    Ok(2.0 / PI * x.clamp(0.0, 1.0).asin())
}

/// `(1/pi) arccot(x)` with `arccot` valued in `(0, pi)` and
/// `x = (a(1+a) - b(1-b)) / (2 sqrt(a(1+a) b(1-b)))`; needs `a > 0`.
pub fn clp_density(p: &AsymptoticParams) -> Result<f64> {
    let (a, b) = (p.a, p.b);
    if a <= 0.0 {
        return Err(Error::Domain("the density form needs a > 0".into()));
    }
    let x = (a * (1.0 + a) - b * (1.0 - b)) / (2.0 * (a * (1.0 + a) * b * (1.0 - b)).sqrt());
    Ok((FRAC_PI_2 - x.atan()) / PI)
}

#[derive(Clone, Debug)]
pub struct ConvergenceRow {
    pub n: u32,
    pub m: u32,
    pub l: u32,
    pub proportion: ExactRational,
    pub proportion_float: f64,
    pub limit: f64,
    pub gap: f64,
}

#[derive(Clone, Debug)]
pub struct ConvergenceTable {
    pub params: AsymptoticParams,
    pub rows: Vec<ConvergenceRow>,
    /// `N` values left out, with the reason.
    pub skipped: Vec<(u32, String)>,
}

/// Exact proportion at the discretised parameters next to the limit, for each `N`.
pub fn convergence_table(p: &AsymptoticParams, ns: &[u32]) -> Result<ConvergenceTable> {
    let limit = arcsine_value(p)?;
    let results: Vec<Result<std::result::Result<ConvergenceRow, (u32, String)>>> = ns
        .par_iter()
        .map(|&n| {
            if n == 0 {
                return Ok(Err((n, "N = 0".to_string())));
            }
            let (m, l) = p.discretize(n);
            if m == 0 {
                return Ok(Err((n, format!("round(aN) = 0 for N = {n}"))));
            }
            let q = proportion(&AxisProblem::new(n, m, l, Parity::Even)?)?;
            let f = to_f64(&q);
            Ok(Ok(ConvergenceRow {
                n,
                m,
                l,
                proportion_float: f,
                limit,
                gap: (f - limit).abs(),
                proportion: q,
            }))
        })
        .collect();
    let mut table = ConvergenceTable {
        params: *p,
        rows: Vec::new(),
        skipped: Vec::new(),
    };
    for r in results {
        match r? {
            Ok(row) => table.rows.push(row),
            Err(s) => table.skipped.push(s),
        }
    }
    Ok(table)
}

pub const CSV_HEADER: &str =
    "N,m,l,proportion_exact_num,proportion_exact_den,proportion_float,limit,gap";

pub fn to_csv(table: &ConvergenceTable) -> String {
    let mut s = String::from(CSV_HEADER);
    s.push('\n');
    for r in &table.rows {
        let _ = writeln!(
            s,
            "{},{},{},{},{},{:.12},{:.12},{:.12}",
            r.n,
            r.m,
            r.l,
            r.proportion.numer(),
            r.proportion.denom(),
            r.proportion_float,
            r.limit,
            r.gap
        );
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::ratio;

    fn p(a: f64, b: f64) -> AsymptoticParams {
        AsymptoticParams::new(a, b).unwrap()
    }

    #[test]
    fn known_values() {
        assert!((arcsine_value(&p(1.0, 0.5)).unwrap() - 0.216_346_895_938_785_5).abs() < 1e-12);
        assert!((clp_density(&p(1.0, 0.5)).unwrap() - 0.216_346_895_938_785_5).abs() < 1e-12);
        assert!((arcsine_value(&p(2.0, 0.25)).unwrap() - 0.111_388_754_023_06).abs() < 1e-12);
        assert_eq!(arcsine_value(&p(0.0, 0.5)).unwrap(), 1.0);
    }

    #[test]
    fn forms_agree_on_grid() {
        for a in [0.1, 0.25, 0.5, 1.0, 2.0, 4.0, 10.0] {
            for k in 1..20 {
                let q = p(a, k as f64 / 20.0);
                let d = (arcsine_value(&q).unwrap() - clp_density(&q).unwrap()).abs();
                assert!(d <= 1e-12, "a={a} b={}: {d}", q.b);
            }
        }
    }

    #[test]
    fn rejects_bad_params() {
        assert!(AsymptoticParams::new(-1.0, 0.5).is_err());
        assert!(AsymptoticParams::new(1.0, 1.0).is_err());
        assert!(AsymptoticParams::new(1.0, 0.0).is_err());
        assert!(clp_density(&p(0.0, 0.5)).is_err());
    }

    #[test]
    fn discretisation() {
        assert_eq!(p(1.0, 0.5).discretize(2), (2, 1));
        assert_eq!(p(0.25, 0.1).discretize(2), (1, 1));
        assert_eq!(p(0.2, 0.99).discretize(2), (0, 2));
    }

    #[test]
    fn table_rows_and_skips() {
        let t = convergence_table(&p(0.2, 0.5), &[2, 4, 8]).unwrap();
        assert_eq!(t.skipped.len(), 1);
        assert_eq!(t.skipped[0].0, 2);
        assert_eq!(t.rows.iter().map(|r| r.n).collect::<Vec<_>>(), vec![4, 8]);
        let t = convergence_table(&p(1.0, 0.5), &[2]).unwrap();
        assert_eq!(t.rows[0].proportion, ratio(9, 35));
        let csv = to_csv(&t);
        assert!(csv.starts_with(CSV_HEADER));
        assert!(csv.lines().nth(1).unwrap().starts_with("2,2,1,9,35,"));
    }

    #[test]
    fn gap_shrinks() {
        let t = convergence_table(&p(1.0, 0.5), &[8, 16, 32, 64]).unwrap();
        let gaps: Vec<f64> = t.rows.iter().map(|r| r.gap).collect();
        assert!(gaps.windows(2).all(|w| w[1] < w[0]), "{gaps:?}");
        let big = convergence_table(&p(1.0, 0.5), &[60]).unwrap();
        assert!((big.rows[0].proportion_float - 0.216_344).abs() <= 0.02);
    }
}
