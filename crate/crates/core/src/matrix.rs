//! Dense matrices over exact rationals.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact::ExactRational;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<ExactRational>,
}

impl RationalMatrix {
    /// Row-major construction; `entries.len()` must equal `rows * cols`.
    pub fn new(rows: usize, cols: usize, entries: Vec<ExactRational>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::DimensionMismatch(format!(
                "{} entries for a {rows}x{cols} matrix",
                entries.len()
            )));
        }
        Ok(Self {
            rows,
            cols,
            entries,
        })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            entries: vec![ExactRational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, n, |i, j| {
            if i == j {
                ExactRational::one()
            } else {
                ExactRational::zero()
            }
        })
    }

    /// Builds the matrix from a 0-based entry function.
    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> ExactRational) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(f(i, j));
            }
        }
        Self {
            rows,
            cols,
            entries,
        }
    }

    pub fn try_from_fn(
        rows: usize,
        cols: usize,
        mut f: impl FnMut(usize, usize) -> Result<ExactRational>,
    ) -> Result<Self> {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(f(i, j)?);
            }
        }
        Ok(Self {
            rows,
            cols,
            entries,
        })
    }

    pub fn from_rows(rows: Vec<Vec<ExactRational>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::DimensionMismatch("ragged rows".into()));
        }
        Self::new(r, c, rows.into_iter().flatten().collect())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &ExactRational {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: ExactRational) {
        self.entries[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[ExactRational] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<ExactRational> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<ExactRational>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn negate_row(&mut self, i: usize) {
        for v in &mut self.entries[i * self.cols..(i + 1) * self.cols] {
            *v = -v.clone();
        }
    }

    /// Submatrix on the given (0-based) row and column indices.
    pub fn extract(&self, rows: &[usize], cols: &[usize]) -> Self {
        Self::from_fn(rows.len(), cols.len(), |i, j| self.get(rows[i], cols[j]).clone())
    }

    pub fn mul(&self, rhs: &Self) -> Result<Self> {
        if self.cols != rhs.rows {
            return Err(Error::DimensionMismatch(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        Ok(Self::from_fn(self.rows, rhs.cols, |i, j| {
            (0..self.cols)
                .map(|k| self.get(i, k) * rhs.get(k, j))
                .sum()
        }))
    }

    pub fn is_lower_triangular(&self) -> bool {
        (0..self.rows).all(|i| ((i + 1)..self.cols).all(|j| self.get(i, j).is_zero()))
    }

    pub fn is_upper_triangular(&self) -> bool {
        (0..self.rows).all(|i| (0..i.min(self.cols)).all(|j| self.get(i, j).is_zero()))
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }

    /// Exact determinant.
    ///
    /// Each row is scaled by the lcm of its denominators, the resulting integer
    /// matrix is reduced by Bareiss elimination (pivot: first nonzero entry at
    /// or below the diagonal), and the scale is divided back out.
    pub fn det_exact(&self) -> Result<ExactRational> {
        if self.rows != self.cols {
            return Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let n = self.rows;
        if n == 0 {
            return Ok(ExactRational::one());
        }
        let mut scale = BigInt::one();
        let mut a: Vec<Vec<BigInt>> = Vec::with_capacity(n);
        for i in 0..n {
            let row = self.row(i);
            let l = row
                .iter()
                .fold(BigInt::one(), |acc, q| acc.lcm(q.denom()));
            a.push(row.iter().map(|q| q.numer() * (&l / q.denom())).collect());
            scale *= l;
        }
        let mut sign = false;
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            let Some(p) = (k..n).find(|&r| !a[r][k].is_zero()) else {
                return Ok(ExactRational::zero());
            };
            if p != k {
                a.swap(p, k);
                sign = !sign;
            }
            for i in (k + 1)..n {
                for j in (k + 1)..n {
                    let v = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                    a[i][j] = v / &prev;
                }
                a[i][k] = BigInt::zero();
            }
            prev = a[k][k].clone();
        }
        let mut d = a[n - 1][n - 1].clone();
        if sign {
            d = -d;
        }
        Ok(ExactRational::new(d, scale))
    }
}

impl fmt::Display for RationalMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, ", ")?;
            }
            let row: Vec<String> = self.row(i).iter().map(ToString::to_string).collect();
            write!(f, "[{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{int, ratio};
    use proptest::prelude::*;

    fn m(rows: &[&[i64]]) -> RationalMatrix {
        RationalMatrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&v| int(v)).collect())
                .collect(),
        )
        .unwrap()
    }

    /// Laplace expansion along successive rows, used as an independent oracle.
    fn laplace(a: &RationalMatrix) -> ExactRational {
        fn rec(a: &RationalMatrix, row: usize, used: &mut Vec<bool>) -> ExactRational {
            if row == a.rows() {
                return int(1);
            }
            let mut acc = ExactRational::zero();
            let mut free_before = 0;
            for j in 0..a.cols() {
                if used[j] {
                    continue;
                }
                used[j] = true;
                let minor = a.get(row, j) * rec(a, row + 1, used);
                used[j] = false;
                if free_before % 2 == 0 {
                    acc += minor;
                } else {
                    acc -= minor;
                }
                free_before += 1;
            }
            acc
        }
        rec(a, 0, &mut vec![false; a.cols()])
    }

    #[test]
    fn determinant_examples() {
        assert_eq!(RationalMatrix::identity(3).det_exact().unwrap(), int(1));
        assert_eq!(m(&[&[2, 1], &[1, 3]]).det_exact().unwrap(), int(5));
        assert_eq!(
            m(&[&[1, 2, 3], &[4, 5, 6], &[1, 2, 3]]).det_exact().unwrap(),
            int(0)
        );
        assert_eq!(RationalMatrix::zeros(0, 0).det_exact().unwrap(), int(1));
    }

    #[test]
    fn non_square_is_rejected() {
        assert_eq!(
            RationalMatrix::zeros(2, 3).det_exact(),
            Err(Error::NotSquare { rows: 2, cols: 3 })
        );
    }

    #[test]
    fn pivoting_on_zero_diagonal() {
        assert_eq!(m(&[&[0, 1], &[1, 0]]).det_exact().unwrap(), int(-1));
        let a = m(&[&[0, 0, 2], &[0, 3, 1], &[5, 1, 1]]);
        assert_eq!(a.det_exact().unwrap(), int(-30));
    }

    #[test]
    fn rational_entries() {
        let a = RationalMatrix::from_rows(vec![
            vec![int(2), int(1)],
            vec![int(1), ratio(3, 2)],
        ])
        .unwrap();
        assert_eq!(a.det_exact().unwrap(), int(2));
    }

    #[test]
    fn extract_and_triangularity() {
        let a = m(&[&[1, 0, 0], &[2, 3, 0], &[4, 5, 6]]);
        assert!(a.is_lower_triangular());
        assert!(!a.is_upper_triangular());
        let b = a.extract(&[1, 2], &[0, 2]);
        assert_eq!(b, m(&[&[2, 0], &[4, 6]]));
    }

    fn small_matrix() -> impl Strategy<Value = RationalMatrix> {
        (0usize..5).prop_flat_map(|n| {
            prop::collection::vec((-6i64..7, 1i64..4), n * n).prop_map(move |v| {
                RationalMatrix::new(n, n, v.into_iter().map(|(a, b)| ratio(a, b)).collect())
                    .unwrap()
            })
        })
    }

    proptest! {
        #[test]
        fn bareiss_agrees_with_laplace_expansion(a in small_matrix()) {
            prop_assert_eq!(a.det_exact().unwrap(), laplace(&a));
        }

        #[test]
        fn determinant_is_multiplicative(a in small_matrix(), seed in any::<u64>()) {
            let n = a.rows();
            let b = RationalMatrix::from_fn(n, n, |i, j| {
                int(((seed >> ((i * 5 + j) % 60)) & 7) as i64 - 3)
            });
            let ab = a.mul(&b).unwrap();
            prop_assert_eq!(
                ab.det_exact().unwrap(),
                a.det_exact().unwrap() * b.det_exact().unwrap()
            );
        }
    }
}
