//! Builders for the path-count matrices and the parametrised matrices
//! `D(m;N,l)` and `D1(m;N,l,e)`.

use serde::{Deserialize, Serialize};

use crate::error::{range_err, Error, Result};
use crate::exact::{
    binomial_q, factorial_q, int, pochhammer, ratio, recip_factorial, ExactRational,
    RationalPolynomial,
};
use crate::matrix::RationalMatrix;

/// `N x N` matrix with entries `C(m+i, m-i+j)`; its determinant counts the
/// path families of the simple half region.
pub fn build_simple_matrix(n: u32, m: u32) -> RationalMatrix {
    let (n, m) = (n as usize, m as i64);
    RationalMatrix::from_fn(n, n, |r, c| {
        let (i, j) = (r as i64 + 1, c as i64 + 1);
        binomial_q(m + i, m - i + j)
    })
}

/// `N x N` matrix of weighted path counts for the complex half region with
/// the axis rhombi in `positions` fixed.
pub fn build_complex_matrix(n: u32, m: u32, positions: &[u32]) -> RationalMatrix {
    let (nn, m) = (n as i64, m as i64);
    RationalMatrix::from_fn(n as usize, n as usize, |r, c| {
        let (i, j) = (r as i64 + 1, c as i64 + 1);
        let head = factorial_q(nn + m - i) * recip_factorial(m + i - j);
        if positions.contains(&((r + 1) as u32)) {
            head * recip_factorial(nn + j - 2 * i)
        } else {
            head * recip_factorial(nn + j - 2 * i + 1) * (int(m) + ratio(nn - j + 1, 2))
        }
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Variant {
    D,
    /// The matrix after the column operations that extract `(m+e)^e`.
    D1 { e: u32 },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ParamMatrixSpec {
    pub n: u32,
    pub l: u32,
    pub variant: Variant,
}

impl ParamMatrixSpec {
    pub fn d(n: u32, l: u32) -> Result<Self> {
        if n == 0 || l < 1 || l > n {
            return range_err(format!("l out of range: need 1 <= l <= N = {n}, got l = {l}"));
        }
        Ok(Self {
            n,
            l,
            variant: Variant::D,
        })
    }

    pub fn d1(n: u32, l: u32, e: u32) -> Result<Self> {
        let base = Self::d(n, l)?;
        if e > n / 2 {
            return range_err(format!("e = {e} exceeds floor(N/2) = {}", n / 2));
        }
        Ok(Self {
            variant: Variant::D1 { e },
            ..base
        })
    }
}

/// The factor `(slope*m + offset)_len`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShiftedFactor {
    pub slope: i64,
    pub offset: ExactRational,
    pub len: i64,
}

impl ShiftedFactor {
    fn new(slope: i64, offset: i64, len: i64) -> Self {
        Self {
            slope,
            offset: int(offset),
            len,
        }
    }
}

/// An entry `coeff * prod factors` of a parametrised matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EntryFormula {
    pub coeff: ExactRational,
    pub factors: Vec<ShiftedFactor>,
}

impl EntryFormula {
    fn zero() -> Self {
        Self {
            coeff: int(0),
            factors: Vec::new(),
        }
    }

    pub fn is_zero(&self) -> bool {
        use num_traits::Zero;
        self.coeff.is_zero()
    }

    pub fn eval(&self, m: &ExactRational) -> Result<ExactRational> {
        if self.is_zero() {
            return Ok(int(0));
        }
        let mut v = self.coeff.clone();
        for f in &self.factors {
            v *= pochhammer(&(int(f.slope) * m + &f.offset), f.len)?;
        }
        Ok(v)
    }

    /// Expands the entry as a polynomial in `m`; negative-length factors are
    /// not polynomial and give a domain error.
    pub fn to_polynomial(&self) -> Result<RationalPolynomial> {
        if self.is_zero() {
            return Ok(RationalPolynomial::zero());
        }
        let mut p = RationalPolynomial::constant(self.coeff.clone());
        for f in &self.factors {
            if f.len < 0 {
                return Err(Error::Domain(format!(
                    "negative-length factor ({}*m + {})_{} is not a polynomial",
                    f.slope, f.offset, f.len
                )));
            }
            let lin = RationalPolynomial::new(vec![f.offset.clone(), int(f.slope)]);
            for t in 0..f.len {
                p = &p * &(&lin + &RationalPolynomial::constant(int(t)));
            }
        }
        Ok(p)
    }
}

fn poch_const(a: i64, k: i64) -> ExactRational {
    // constant factors here always have non-negative length
    pochhammer(&int(a), k).expect("non-negative length")
}

fn d_entry(n: i64, l: i64, i: i64, j: i64) -> EntryFormula {
    if i != l {
        EntryFormula {
            coeff: poch_const(n + j - 2 * i + 2, n - j) * ratio(1, 2),
            factors: vec![
                ShiftedFactor::new(1, i - j + 1, j - 1),
                ShiftedFactor::new(2, n - j + 1, 1),
            ],
        }
    } else {
        EntryFormula {
            coeff: poch_const(n + j - 2 * i + 1, n - j + 1),
            factors: vec![ShiftedFactor::new(1, i - j + 1, j - 1)],
        }
    }
}

fn d1_entry(n: i64, l: i64, e: i64, i: i64, j: i64) -> EntryFormula {
    if j <= n - 2 * e || j > n - e {
        return d_entry(n, l, i, j);
    }
    let k = j - (n - 2 * e + 1);
    if i != l {
        EntryFormula {
            coeff: poch_const(2 * n - 2 * e - 2 * i + 2 * k + 3, 2 * e - 2 * k - 1),
            factors: vec![
                ShiftedFactor::new(1, 2 * e + i - k - n, n - 2 * e + k),
                ShiftedFactor::new(1, n - i + 1, k),
            ],
        }
    } else if n - e - l + k < 0 {
        // the constant (2N-2e-2l+2k+2)_{2e-2k} contains the factor 0
        EntryFormula::zero()
    } else {
        EntryFormula {
            coeff: poch_const(2 * n - 2 * e - 2 * l + 2 * k + 2, 2 * e - 2 * k),
            factors: vec![
                ShiftedFactor::new(1, 2 * e + l - k - n, n - e - l + k),
                ShiftedFactor::new(1, e + 1, l - e - 1),
                ShiftedFactor::new(1, 1 - l + n, k),
            ],
        }
    }
}

/// Entry formulas of the matrix, row-major, 0-based.
pub fn build_d_formulas(spec: &ParamMatrixSpec) -> Vec<Vec<EntryFormula>> {
    let n = spec.n as i64;
    let l = spec.l as i64;
    (1..=n)
        .map(|i| {
            (1..=n)
                .map(|j| match spec.variant {
                    Variant::D => d_entry(n, l, i, j),
                    Variant::D1 { e } => d1_entry(n, l, e as i64, i, j),
                })
                .collect()
        })
        .collect()
}

/// The matrix with `m` substituted; `m` may be any rational.
pub fn build_d(spec: &ParamMatrixSpec, m: &ExactRational) -> Result<RationalMatrix> {
    let f = build_d_formulas(spec);
    let n = spec.n as usize;
    RationalMatrix::try_from_fn(n, n, |i, j| f[i][j].eval(m))
}

/// Entries of the matrix as polynomials in `m`.
pub fn build_d_polynomials(spec: &ParamMatrixSpec) -> Result<Vec<Vec<RationalPolynomial>>> {
    build_d_formulas(spec)
        .iter()
        .map(|row| row.iter().map(EntryFormula::to_polynomial).collect())
        .collect()
}

/// `prod_{i=1}^N (m+i-1)! (2N-2i+1)! / (N+m-i)!`, the factor linking the
/// complex path matrix to `D(m;N,l)`.
pub fn complex_to_d_scale(n: u32, m: u32) -> ExactRational {
    let (n, m) = (n as i64, m as i64);
    (1..=n)
        .map(|i| {
            factorial_q(m + i - 1) * factorial_q(2 * n - 2 * i + 1) / factorial_q(n + m - i)
        })
        .product()
}

/// `R(N) = ((-1)^j C(j-1, i-1))`.
pub fn reflection_matrix(n: u32) -> RationalMatrix {
    RationalMatrix::from_fn(n as usize, n as usize, |r, c| {
        let (i, j) = (r as i64 + 1, c as i64 + 1);
        let s = if j % 2 == 0 { 1 } else { -1 };
        binomial_q(j - 1, i - 1) * int(s)
    })
}
