//! Block structure of `D1(-e;N,l,e)` and closed forms of the block
//! determinants.
//!
//! With rows and columns split as
//!
//! ```text
//!              cols 1..N-2e   N-2e+1..N-e   N-e+1..N
//! rows 1..e        *              *            M
//! rows e+1..N-e    Q2             *            0
//! rows N-e+1..N    0              Q1           0
//! ```
//!
//! the determinant factors as `(-1)^{e(N-e)} det Q2 det Q1 det M`, where
//! `Q2` is lower triangular and `Q1` upper triangular.

use num_traits::Zero;
use serde::Serialize;

use super::matrices::{build_d, ParamMatrixSpec};
use crate::error::{range_err, Result};
use crate::exact::{factorial_q, int, pochhammer, pow2, ratio, sign_power, ExactRational};
use crate::matrix::RationalMatrix;
use crate::report::CheckOutcome;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockDecomposition {
    pub q1: RationalMatrix,
    pub q2: RationalMatrix,
    pub m: RationalMatrix,
    /// `(-1)^{e(N-e)}`
    pub sign: i64,
}

/// Result of checking the block structure for one `(N, l, e)`.
#[derive(Clone, Debug, Serialize)]
pub struct BlockCheck {
    pub n: u32,
    pub l: u32,
    pub e: u32,
    #[serde(skip)]
    pub decomposition: BlockDecomposition,
    pub det_d1: String,
    pub outcomes: Vec<CheckOutcome>,
}

impl BlockCheck {
    pub fn passed(&self) -> bool {
        self.outcomes.iter().all(|o| o.holds)
    }
}

/// Whether `l` is in the range `ceil((N+1)/2) <= l <= N` used for the block
/// analysis.
pub fn in_upper_range(n: u32, l: u32) -> bool {
    l <= n && 2 * l >= n + 1
}

/// `det Q1`: zero when `l >= N+1-e`, else
/// `(-1)^{e(e-1)/2} prod_{k=0}^{e-1} k! (2e-2k-1)! (N+k-2e)!`.
pub fn det_q1_closed(n: u32, l: u32, e: u32) -> ExactRational {
    if l + e > n {
        return int(0);
    }
    let (n, e) = (n as i64, e as i64);
    let mut v = int(sign_power(e * (e - 1) / 2));
    for k in 0..e {
        v *= factorial_q(k) * factorial_q(2 * e - 2 * k - 1) * factorial_q(n + k - 2 * e);
    }
    v
}

/// `det Q2 = (1/2)^{N-2e-1} prod_{j=1}^{N-2e} (j-1)! (N-2e-j+1)_{N-j+1}`,
/// valid for `l <= N-e` (so that `Q2` contains row `l`).
pub fn det_q2_closed(n: u32, e: u32) -> ExactRational {
    let (n, e) = (n as i64, e as i64);
    if n == 2 * e {
        return int(1);
    }
    let mut v = pow2(-(n - 2 * e - 1));
    for j in 1..=(n - 2 * e) {
        v *= factorial_q(j - 1) * pochhammer(&int(n - 2 * e - j + 1), n - j + 1).unwrap();
    }
    v
}

/// `det M = (-2)^{e(e-1)/2-e} (e)_e prod_{i=1}^e (i-1)! ((e-i+1)/2)_{i-1} (i-N)_{N-e}`.
pub fn det_m_closed(n: u32, e: u32) -> ExactRational {
    let (n, e) = (n as i64, e as i64);
    let x = e * (e - 1) / 2 - e;
    let mut v = pow2(x) * int(sign_power(x)) * pochhammer(&int(e), e).unwrap();
    for i in 1..=e {
        v *= factorial_q(i - 1)
            * pochhammer(&ratio(e - i + 1, 2), i - 1).unwrap()
            * pochhammer(&int(i - n), n - e).unwrap();
    }
    v
}

/// `det D1(-e;N,l,e)` assembled from the block closed forms.
pub fn det_d1_closed(n: u32, l: u32, e: u32) -> ExactRational {
    if l + e > n {
        return int(0);
    }
    let s = sign_power((e * (n - e)) as i64);
    int(s) * det_q2_closed(n, e) * det_q1_closed(n, l, e) * det_m_closed(n, e)
}

pub fn decompose(d1: &RationalMatrix, n: u32, e: u32) -> BlockDecomposition {
    let (n, e) = (n as usize, e as usize);
    let top: Vec<usize> = (0..e).collect();
    let mid: Vec<usize> = (e..n - e).collect();
    let bottom: Vec<usize> = (n - e..n).collect();
    let left: Vec<usize> = (0..n - 2 * e).collect();
    let centre: Vec<usize> = (n - 2 * e..n - e).collect();
    let right: Vec<usize> = (n - e..n).collect();
    BlockDecomposition {
        q1: d1.extract(&bottom, &centre),
        q2: d1.extract(&mid, &left),
        m: d1.extract(&top, &right),
        sign: sign_power((e * (n - e)) as i64),
    }
}

fn structural_zeros(d1: &RationalMatrix, n: usize, e: usize) -> bool {
    let right_zero = (e..n).all(|i| (n - e..n).all(|j| d1.get(i, j).is_zero()));
    let bottom_left_zero = (n - e..n).all(|i| (0..n - 2 * e).all(|j| d1.get(i, j).is_zero()));
    right_zero && bottom_left_zero
}

/// Builds `D1(-e;N,l,e)`, extracts the blocks and checks the factorisation
/// and each block determinant against its closed form.
pub fn verify_block_decomposition(n: u32, l: u32, e: u32) -> Result<BlockCheck> {
    if !in_upper_range(n, l) {
        return range_err(format!(
            "block analysis needs ceil((N+1)/2) <= l <= N, got N = {n}, l = {l}"
        ));
    }
    let spec = ParamMatrixSpec::d1(n, l, e)?;
    let d1 = build_d(&spec, &int(-(e as i64)))?;
    let det = d1.det_exact()?;
    let blocks = decompose(&d1, n, e);
    let (dq1, dq2, dm) = (
        blocks.q1.det_exact()?,
        blocks.q2.det_exact()?,
        blocks.m.det_exact()?,
    );
    let (nu, eu) = (n as usize, e as usize);
    let mut outcomes = vec![
        CheckOutcome::predicate(
            "zero blocks",
            structural_zeros(&d1, nu, eu),
            "nonzero entry outside the block pattern",
        ),
        CheckOutcome::predicate(
            "Q2 lower triangular",
            blocks.q2.is_lower_triangular(),
            "entry above the diagonal",
        ),
        CheckOutcome::predicate(
            "Q1 upper triangular",
            blocks.q1.is_upper_triangular(),
            "entry below the diagonal",
        ),
        CheckOutcome::compare(
            "det D1 = sign det Q2 det Q1 det M",
            &det,
            &(int(blocks.sign) * &dq2 * &dq1 * &dm),
        ),
        CheckOutcome::compare("det Q1 closed form", &det_q1_closed(n, l, e), &dq1),
        CheckOutcome::compare("det M closed form", &det_m_closed(n, e), &dm),
    ];
    if l + e > n {
        outcomes.push(CheckOutcome::compare("det D1 vanishes", &int(0), &det));
    } else {
        outcomes.push(CheckOutcome::compare(
            "det Q2 closed form",
            &det_q2_closed(n, e),
            &dq2,
        ));
    }
    Ok(BlockCheck {
        n,
        l,
        e,
        decomposition: blocks,
        det_d1: det.to_string(),
        outcomes,
    })
}
