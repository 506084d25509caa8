//! Terminating hypergeometric series and the summation and transformation
//! identities used for the counts and for the determinant symmetries.

use num_traits::{One, Zero};

use crate::closed_forms::{axis_sum, proportion, AxisProblem, Parity};
use crate::determinant::build_d;
use crate::determinant::matrices::ParamMatrixSpec;
use crate::determinant::reconstruct::reflection_identity;
use crate::error::{range_err, Error, Result};
use crate::exact::{
    binomial_i, factorial_q, int, pochhammer, ratio, sign_power, to_rational, ExactRational,
};
use crate::report::CheckOutcome;

/// `pFq(numerator; denominator; argument)` summed for `k = 0..=truncation`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeriesSpec {
    pub numerator: Vec<ExactRational>,
    pub denominator: Vec<ExactRational>,
    pub argument: ExactRational,
    pub truncation: u64,
}

impl SeriesSpec {
    pub fn new(
        numerator: Vec<ExactRational>,
        denominator: Vec<ExactRational>,
        argument: ExactRational,
        truncation: u64,
    ) -> Self {
        Self {
            numerator,
            denominator,
            argument,
            truncation,
        }
    }

    /// Truncates where the series terminates: at `n` for the first numerator
    /// parameter equal to `-n` (`n >= 0`).
    pub fn terminating(
        numerator: Vec<ExactRational>,
        denominator: Vec<ExactRational>,
        argument: ExactRational,
    ) -> Result<Self> {
        let n = numerator
            .iter()
            .filter(|a| a.is_integer() && *a <= &ExactRational::zero())
            .map(|a| (-a).to_integer())
            .min()
            .ok_or_else(|| {
                Error::Domain("series has no non-positive integer numerator parameter".into())
            })?;
        let truncation = u64::try_from(n).map_err(|_| Error::Domain("truncation too large".into()))?;
        Ok(Self::new(numerator, denominator, argument, truncation))
    }
}

/// Exact partial sum `sum_{k=0}^{truncation} prod (a_i)_k / (k! prod (b_j)_k) z^k`,
/// stopping early once a numerator factor vanishes.
pub fn terminating_sum(s: &SeriesSpec) -> Result<ExactRational> {
    let mut term = ExactRational::one();
    let mut total = ExactRational::one();
    for k in 0..s.truncation {
        let kq = int(k as i64);
        let mut num = s.argument.clone();
        for a in &s.numerator {
            num *= a + &kq;
        }
        if num.is_zero() {
            // every later term vanishes
            break;
        }
        let mut den = &kq + int(1);
        for b in &s.denominator {
            let f = b + &kq;
            if f.is_zero() {
                return Err(Error::DivisionByZero(format!(
                    "denominator parameter {b} reaches zero at term {}",
                    k + 1
                )));
            }
            den *= f;
        }
        term = term * num / den;
        total += &term;
    }
    Ok(total)
}

fn hyp(num: &[ExactRational], den: &[ExactRational], n: u64) -> Result<ExactRational> {
    terminating_sum(&SeriesSpec::new(num.to_vec(), den.to_vec(), int(1), n))
}

/// `2F1(a, -n; c; 1) = (c-a)_n / (c)_n`.
pub fn check_chu_vandermonde(a: &ExactRational, c: &ExactRational, n: u64) -> Result<CheckOutcome> {
    let cn = pochhammer(c, n as i64)?;
    if cn.is_zero() {
        return range_err(format!("({c})_{n} vanishes"));
    }
    let lhs = hyp(&[a.clone(), int(-(n as i64))], std::slice::from_ref(c), n)?;
    let rhs = pochhammer(&(c - a), n as i64)? / cn;
    Ok(CheckOutcome::compare(
        format!("Chu-Vandermonde a={a} c={c} n={n}"),
        &rhs,
        &lhs,
    ))
}

/// Contiguous relation
/// `3F2(a,A1,A2;B1,B2) = 3F2(a-1,A1,A2;B1,B2) + A1 A2/(B1 B2) 3F2(a,A1+1,A2+1;B1+1,B2+1)`
/// at argument 1, all series summed to `k = n`.
pub fn check_contiguous(
    a: &ExactRational,
    a1: &ExactRational,
    a2: &ExactRational,
    b1: &ExactRational,
    b2: &ExactRational,
    n: u64,
) -> Result<CheckOutcome> {
    let one = int(1);
    let lhs = hyp(&[a.clone(), a1.clone(), a2.clone()], &[b1.clone(), b2.clone()], n)?;
    let first = hyp(&[a - &one, a1.clone(), a2.clone()], &[b1.clone(), b2.clone()], n)?;
    let second = hyp(
        &[a.clone(), a1 + &one, a2 + &one],
        &[b1 + &one, b2 + &one],
        n,
    )?;
    let rhs = first + a1 * a2 / (b1 * b2) * second;
    Ok(CheckOutcome::compare(
        format!("contiguous a={a} A1={a1} A2={a2} B1={b1} B2={b2}"),
        &rhs,
        &lhs,
    ))
}

/// The contiguous relation at `a = 1-2m-N`, `B1 = -2m-N`, `A1 = 1-j`,
/// `A2 = 1-i-m`, `B2 = 3-2i+N`, and the resulting closed form
/// `(i-N-m-1)(N+j+2m-1)(N-i+m+2)_{j-2} / ((-2m-N)(N-2i+3)_{j-1})`.
pub fn check_contiguous_specialization(n: i64, m: &ExactRational, i: i64, j: i64) -> Result<Vec<CheckOutcome>> {
    if j < 2 {
        return range_err("the specialisation needs j >= 2");
    }
    let nq = int(n);
    let a = int(1) - int(2) * m - &nq;
    let a1 = int(1 - j);
    let a2 = int(1 - i) - m;
    let b1 = -(int(2) * m) - &nq;
    let b2 = int(3 - 2 * i + n);
    let steps = (j - 1) as u64;
    let relation = check_contiguous(&a, &a1, &a2, &b1, &b2, steps)?;
    let series = hyp(&[a.clone(), a1.clone(), a2.clone()], &[b1.clone(), b2.clone()], steps)?;
    let closed = (int(i - n - 1) - m) * (&nq + int(j - 1) + int(2) * m)
        * pochhammer(&(&nq - int(i) + m + int(2)), j - 2)?
        / (&b1 * pochhammer(&int(n - 2 * i + 3), j - 1)?);
    Ok(vec![
        relation,
        CheckOutcome::compare(
            format!("3F2 closed form N={n} m={m} i={i} j={j}"),
            &closed,
            &series,
        ),
    ])
}

/// Entry `(i, j)` of `D(m) R(N)` against `D(-N-m)` for `i != l`, written as
/// the explicit sum over `k`.
pub fn check_row_symmetry(n: i64, m: &ExactRational, i: i64, j: i64, fixed_row: bool) -> Result<CheckOutcome> {
    let nq = int(n);
    let mut lhs = int(0);
    for k in 1..=j {
        let mut t = to_rational(&binomial_i(j - 1, (k - 1) as u64))
            * pochhammer(&(m + int(i - k + 1)), k - 1)?;
        if fixed_row {
            t *= pochhammer(&int(n + k - 2 * i + 1), n - k + 1)?;
        } else {
            t *= pochhammer(&int(n + k - 2 * i + 2), n - k)? * (&nq + int(2) * m - int(k - 1))
                / int(2);
        }
        lhs += t;
    }
    lhs *= int(sign_power(j));
    let mr = -&nq - m;
    let rhs = if fixed_row {
        -(pochhammer(&(&mr + int(i - j + 1)), j - 1)? * pochhammer(&int(n - 2 * i + j + 1), n - j + 1)?)
    } else {
        pochhammer(&(&mr + int(i - j + 1)), j - 1)?
            * pochhammer(&int(n + j - 2 * i + 2), n - j)?
            * (-(int(2) * m) - &nq - int(j - 1))
            / int(2)
    };
    Ok(CheckOutcome::compare(
        format!(
            "{} row entry N={n} m={m} i={i} j={j}",
            if fixed_row { "fixed" } else { "ordinary" }
        ),
        &rhs,
        &lhs,
    ))
}

/// Term `e` of the axis sum in hypergeometric normalisation:
/// `(-N)_e (N-2e)/N (m)_e (m+N)/(m+N-e) (1/2)_e / ((1+m)_e (1/2-N)_e e!)`.
fn axis_hyper_term(n: i64, m: i64, e: i64) -> ExactRational {
    let h = ratio(1, 2);
    pochhammer(&int(-n), e).unwrap() * ratio(n - 2 * e, n) * pochhammer(&int(m), e).unwrap()
        * ratio(m + n, m + n - e)
        * pochhammer(&h, e).unwrap()
        / (pochhammer(&int(1 + m), e).unwrap()
            * pochhammer(&(&h - int(n)), e).unwrap()
            * factorial_q(e))
}

/// `(2N-1)! ((m+1)_{N-1})^2 / ((N-1)!^2 (2m+1)_{2N-1})`.
fn axis_hyper_prefactor(n: i64, m: i64) -> ExactRational {
    let p = pochhammer(&int(m + 1), n - 1).unwrap();
    factorial_q(2 * n - 1) * &p * &p
        / (factorial_q(n - 1) * factorial_q(n - 1) * pochhammer(&int(2 * m + 1), 2 * n - 1).unwrap())
}

fn check_nml(n: u32, m: u32, l: u32) -> Result<()> {
    if m == 0 {
        return range_err("m must be positive");
    }
    AxisProblem::new(n, m, l, Parity::Even).map(|_| ())
}

/// The axis sum written as a terminating very-well-poised series equals the
/// balanced `4F3(1, 1/2, l-N, 1-l; 1+m, 1-m-N, 3/2; 1)` times its prefactor;
/// also checks that the hypergeometric rewriting reproduces the proportion.
pub fn check_whipple_special(n: u32, m: u32, l: u32) -> Result<Vec<CheckOutcome>> {
    check_nml(n, m, l)?;
    let (ni, mi, li) = (n as i64, m as i64, l as i64);
    let h = ratio(1, 2);
    let lhs: ExactRational = (0..li).map(|e| axis_hyper_term(ni, mi, e)).sum();
    let pre = pochhammer(&int(1 - ni), li - 1)? * pochhammer(&(int(-li) + &h), li - 1)?
        / (pochhammer(&(&h - int(ni)), li - 1)? * pochhammer(&int(1 - li), li - 1)?);
    let series = hyp(
        &[int(1), h.clone(), int(li - ni), int(1 - li)],
        &[int(1 + mi), int(1 - mi - ni), ratio(3, 2)],
        (li - 1) as u64,
    )?;
    let p = AxisProblem::new(n, m, l, Parity::Even)?;
    Ok(vec![
        CheckOutcome::compare(
            format!("Whipple special N={n} m={m} l={l}"),
            &lhs,
            &(pre * series),
        ),
        CheckOutcome::compare(
            format!("hypergeometric prefactor N={n} m={m} l={l}"),
            &proportion(&p)?,
            &(axis_hyper_prefactor(ni, mi) * &lhs),
        ),
        CheckOutcome::compare(
            format!("axis sum normalisation N={n} m={m} l={l}"),
            &(axis_sum(n, m, l)? * int(mi) * ratio(mi + ni, ni)),
            &lhs,
        ),
    ])
}

/// The Bailey-transformed form
/// `(2l)!(2m)!(m+N-1)!(m+N)!(2N-2l+2)! / (4(l+m-1)(m+N-l+1)(l-1)! l! (m-1)! m! (N-l)! (N-l+1)! (2m+2N-1)!)`
/// times `4F3(1-l, 1, 1, 3/2-l+N; 3/2, 2-l-m, 2-l+m+N; 1)` equals the proportion.
pub fn check_bailey_special(n: u32, m: u32, l: u32) -> Result<CheckOutcome> {
    check_nml(n, m, l)?;
    let (n_, m_, l_) = (n as i64, m as i64, l as i64);
    let f = factorial_q;
    let pre = f(2 * l_) * f(2 * m_) * f(m_ + n_ - 1) * f(m_ + n_) * f(2 * n_ - 2 * l_ + 2)
        / (int(4 * (l_ + m_ - 1) * (m_ + n_ - l_ + 1))
            * f(l_ - 1)
            * f(l_)
            * f(m_ - 1)
            * f(m_)
            * f(n_ - l_)
            * f(n_ - l_ + 1)
            * f(2 * m_ + 2 * n_ - 1));
    let series = hyp(
        &[int(1 - l_), int(1), int(1), ratio(3, 2) - int(l_) + int(n_)],
        &[ratio(3, 2), int(2 - l_ - m_), int(2 - l_ + m_ + n_)],
        (l_ - 1) as u64,
    )?;
    let p = AxisProblem::new(n, m, l, Parity::Even)?;
    Ok(CheckOutcome::compare(
        format!("Bailey special N={n} m={m} l={l}"),
        &proportion(&p)?,
        &(pre * series),
    ))
}

/// At `m = -e-1/2` the column combination
/// `sum_{j=0}^k C(k,j) col(N-2e+k+j) - (N-e-l+1/2)_k / ((-4)^k (N-e-l+1)_k) col(N-2e)`
/// of `D(m;N,l)` vanishes; valid for `l <= floor((N+1)/2)`,
/// `1 <= k <= e <= floor(N/2)-1`.
pub fn check_column_relation(n: u32, l: u32, e: u32, k: u32) -> Result<CheckOutcome> {
    if n == 0 || l < 1 || 2 * l > n + 1 {
        return range_err(format!("column relations need 1 <= l <= floor((N+1)/2), got N={n} l={l}"));
    }
    if k < 1 || k > e || e + 1 > n / 2 {
        return range_err(format!("column relations need 1 <= k <= e <= floor(N/2)-1, got e={e} k={k}"));
    }
    let (ni, li, ei, ki) = (n as i64, l as i64, e as i64, k as i64);
    let m = int(-ei) - ratio(1, 2);
    let d = build_d(&ParamMatrixSpec::d(n, l)?, &m)?;
    let col = |c: i64| d.column((c - 1) as usize);
    let coef = pochhammer(&(int(ni - ei - li) + ratio(1, 2)), ki)?
        / (int(-4).pow(k as i32) * pochhammer(&int(ni - ei - li + 1), ki)?);
    let mut v: Vec<ExactRational> = col(ni - 2 * ei).iter().map(|x| -(x * &coef)).collect();
    for j in 0..=ki {
        let b = to_rational(&binomial_i(ki, j as u64));
        for (acc, x) in v.iter_mut().zip(col(ni - 2 * ei + ki + j)) {
            *acc += &b * x;
        }
    }
    let bad = v.iter().position(|x| !x.is_zero());
    Ok(CheckOutcome::predicate(
        format!("column relation N={n} l={l} e={e} k={k}"),
        bad.is_none(),
        bad.map_or(String::new(), |r| format!("row {} is {}", r + 1, v[r])),
    ))
}

/// Both parts of the column-relation check: the vanishing combination and
/// the matrix identity `D(m) R(N) = D(-N-m)` (row `l` negated) at `m`.
pub fn check_column_relations(
    n: u32,
    l: u32,
    e: u32,
    k: u32,
    m: &ExactRational,
) -> Result<Vec<CheckOutcome>> {
    Ok(vec![
        check_column_relation(n, l, e, k)?,
        reflection_identity(n, l, m)?,
    ])
}

#[cfg(test)]
mod tests {
    use super::*;

    fn holds(o: &CheckOutcome) -> bool {
        o.holds
    }

    #[test]
    fn series_examples() {
        let empty = SeriesSpec::new(vec![], vec![], int(1), 0);
        assert_eq!(terminating_sum(&empty).unwrap(), int(1));
        let s = SeriesSpec::terminating(vec![int(1), int(-2)], vec![int(3)], int(1)).unwrap();
        assert_eq!(s.truncation, 2);
        assert_eq!(terminating_sum(&s).unwrap(), ratio(1, 2));
        let s = SeriesSpec::terminating(vec![ratio(7, 3), int(0)], vec![ratio(5, 2)], ratio(3, 4))
            .unwrap();
        assert_eq!(terminating_sum(&s).unwrap(), int(1));
    }

    #[test]
    fn series_errors() {
        assert!(SeriesSpec::terminating(vec![ratio(1, 2)], vec![], int(1)).is_err());
        let s = SeriesSpec::new(vec![int(-3)], vec![int(-1)], int(1), 3);
        assert!(matches!(terminating_sum(&s), Err(Error::DivisionByZero(_))));
        // the numerator ends the series before the denominator pole
        let s = SeriesSpec::new(vec![int(-1)], vec![int(-1)], int(1), 3);
        assert_eq!(terminating_sum(&s).unwrap(), int(2));
    }

    #[test]
    fn chu_vandermonde_examples() {
        let o = check_chu_vandermonde(&int(1), &int(3), 2).unwrap();
        assert!(o.holds);
        assert_eq!(o.actual, "1/2");
        assert!(check_chu_vandermonde(&ratio(2, 7), &ratio(-5, 3), 0).unwrap().holds);
        assert!(check_chu_vandermonde(&ratio(1, 2), &ratio(5, 2), 3).unwrap().holds);
    }

    #[test]
    fn contiguous_examples() {
        let z = int(0);
        assert!(check_contiguous(&ratio(3, 7), &z, &int(4), &int(2), &ratio(1, 3), 0).unwrap().holds);
        assert!(check_contiguous(
            &ratio(5, 2),
            &int(-2),
            &ratio(1, 2),
            &int(3),
            &ratio(7, 2),
            2
        )
        .unwrap()
        .holds);
        let out = check_contiguous_specialization(3, &int(2), 1, 2).unwrap();
        assert!(out.iter().all(holds), "{out:?}");
    }

    #[test]
    fn row_symmetry_small_grid() {
        for n in 1..=6 {
            for i in 1..=n {
                for j in 1..=n {
                    for m in [int(1), ratio(5, 3)] {
                        for fixed in [false, true] {
                            assert!(check_row_symmetry(n, &m, i, j, fixed).unwrap().holds);
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn whipple_and_bailey() {
        for (n, m, l) in [(1, 1, 1), (2, 1, 1), (3, 2, 2), (4, 1, 3), (6, 4, 5)] {
            assert!(check_whipple_special(n, m, l).unwrap().iter().all(holds));
            assert!(check_bailey_special(n, m, l).unwrap().holds);
        }
        assert_eq!(check_bailey_special(2, 1, 1).unwrap().actual, "2/5");
        assert_eq!(check_bailey_special(1, 1, 1).unwrap().actual, "1/3");
    }

    #[test]
    fn column_relation_examples() {
        assert!(check_column_relation(4, 1, 1, 1).unwrap().holds);
        assert!(check_column_relation(5, 2, 1, 1).unwrap().holds);
        assert!(check_column_relation(4, 3, 1, 1).is_err());
        assert!(reflection_identity(2, 1, &int(1)).unwrap().holds);
    }
}
