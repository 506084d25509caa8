//! Reconstruction of `det D(m;N,l)` and `P(m;N,l)` as polynomials, and the
//! structural facts about them: symmetries, forced factors, degree bounds,
//! the column operations producing `D1`, and the evaluation of `P` at
//! `m = 0, -1, ..., -N` through the block closed forms.

use super::blocks::{det_d1_closed, in_upper_range};
use super::matrices::{build_d, build_d_polynomials, reflection_matrix, ParamMatrixSpec};
use crate::closed_forms::forced_factor_polynomial;
use crate::error::{range_err, Error, Result};
use crate::exact::{
    binomial_i, int, lagrange_interpolate, ratio, sign_power, to_rational, ExactRational,
    RationalPolynomial,
};
use crate::report::CheckOutcome;

/// `C(N+1,2)`, the number of samples needed for `det D`.
pub fn detd_sample_count(n: u32) -> usize {
    (n as usize * (n as usize + 1) / 2).max(1)
}

fn det_d_at(spec: &ParamMatrixSpec, m: &ExactRational) -> Result<ExactRational> {
    build_d(spec, m)?.det_exact()
}

/// Interpolates `det D(m;N,l)` through `m = 1, ..., C(N+1,2)` and confirms the
/// result at one further point.
pub fn reconstruct_detd_polynomial(n: u32, l: u32) -> Result<RationalPolynomial> {
    let spec = ParamMatrixSpec::d(n, l)?;
    let count = detd_sample_count(n) as i64;
    let points = (1..=count)
        .map(|m| Ok((int(m), det_d_at(&spec, &int(m))?)))
        .collect::<Result<Vec<_>>>()?;
    let p = lagrange_interpolate(&points)?;
    let extra = int(count + 1);
    let seen = det_d_at(&spec, &extra)?;
    if p.eval(&extra) != seen {
        return Err(Error::Domain(format!(
            "det D(m;{n},{l}) exceeds the expected degree bound"
        )));
    }
    Ok(p)
}

/// `P(m;N,l)`: `det D` divided exactly by the forced factors.
pub fn reconstruct_p(n: u32, l: u32) -> Result<RationalPolynomial> {
    reconstruct_detd_polynomial(n, l)?.div_exact(&forced_factor_polynomial(n))
}

/// `(-1)^{C(N+1,2)-1}`, the sign in `det D(-N-m) = sign * det D(m)`.
pub fn detd_reflection_sign(n: u32) -> i64 {
    sign_power(n as i64 * (n as i64 + 1) / 2 - 1)
}

/// `(-1)^{N+1}`, the sign in `P(-N-m) = sign * P(m)`.
pub fn p_reflection_sign(n: u32) -> i64 {
    sign_power(n as i64 + 1)
}

/// `p(-N-m)`.
pub fn reflect(p: &RationalPolynomial, n: u32) -> RationalPolynomial {
    p.compose_affine(&int(-1), &int(-(n as i64)))
}

/// Symmetry `l <-> N+1-l` and the reflection `m -> -N-m` for `det D` and `P`.
pub fn aux_fact_checks(n: u32, l: u32) -> Result<Vec<CheckOutcome>> {
    let d = reconstruct_detd_polynomial(n, l)?;
    let mirrored = reconstruct_detd_polynomial(n, n + 1 - l)?;
    let p = d.div_exact(&forced_factor_polynomial(n))?;
    let sd = int(detd_reflection_sign(n));
    let sp = int(p_reflection_sign(n));
    Ok(vec![
        CheckOutcome::compare("det D(l) = det D(N+1-l)", &d, &mirrored),
        CheckOutcome::compare("det D(-N-m) = sign det D(m)", &d.scale(&sd), &reflect(&d, n)),
        CheckOutcome::compare("P(-N-m) = (-1)^(N+1) P(m)", &p.scale(&sp), &reflect(&p, n)),
    ])
}

/// `D(m) R(N)` equals `D(-N-m)` with row `l` negated, at the rational `m`.
pub fn reflection_identity(n: u32, l: u32, m: &ExactRational) -> Result<CheckOutcome> {
    let spec = ParamMatrixSpec::d(n, l)?;
    let lhs = build_d(&spec, m)?.mul(&reflection_matrix(n))?;
    let mut rhs = build_d(&spec, &(int(-(n as i64)) - m))?;
    rhs.negate_row(l as usize - 1);
    Ok(CheckOutcome::compare(
        format!("D(m)R(N) = D(-N-m) with row l negated at m = {m}"),
        &rhs,
        &lhs,
    ))
}

/// `(m+i)_{N-2i+1}` for `1 <= i <= floor(N/2)`.
pub fn step1_divisors(n: u32) -> Vec<(u32, RationalPolynomial)> {
    (1..=n / 2)
        .map(|i| {
            (
                i,
                RationalPolynomial::rising(&int(i as i64), (n - 2 * i + 1) as u64),
            )
        })
        .collect()
}

/// `(m+e+1/2)^{min(e, N-e-1)}` for `1 <= e <= N-2`.
pub fn step2_divisors(n: u32) -> Vec<(u32, RationalPolynomial)> {
    (1..n.saturating_sub(1))
        .map(|e| {
            let lin = RationalPolynomial::linear(int(e as i64) + ratio(1, 2));
            (e, lin.pow(e.min(n - e - 1)))
        })
        .collect()
}

/// Forced factors and degree bounds for one `(N, l)`.
pub fn factor_and_degree_checks(n: u32, l: u32) -> Result<Vec<CheckOutcome>> {
    let d = reconstruct_detd_polynomial(n, l)?;
    let mut out = Vec::new();
    for (i, f) in step1_divisors(n) {
        out.push(CheckOutcome::predicate(
            format!("(m+{i})_{} divides det D", n - 2 * i + 1),
            f.divides(&d),
            "nonzero remainder",
        ));
    }
    for (e, f) in step2_divisors(n) {
        out.push(CheckOutcome::predicate(
            format!("(m+{e}+1/2)^{} divides det D", e.min(n - e - 1)),
            f.divides(&d),
            "nonzero remainder",
        ));
    }
    let max_d = detd_sample_count(n) - 1;
    let deg_d = d.degree().unwrap_or(0);
    out.push(CheckOutcome::predicate(
        format!("deg det D <= {max_d}"),
        deg_d <= max_d,
        format!("degree {deg_d}"),
    ));
    let p = d.div_exact(&forced_factor_polynomial(n))?;
    let deg_p = p.degree().unwrap_or(0);
    out.push(CheckOutcome::predicate(
        format!("deg P <= {}", n - 1),
        deg_p < n as usize,
        format!("degree {deg_p}"),
    ));
    Ok(out)
}

/// Applies the column operations to the polynomial matrix `D(m;N,l)`: for
/// `k = 0..e-1`, column `N+1-2e+k` receives `sum_{i=1}^k C(k,i)` times column
/// `N+1-2e+k+i` (original columns), then is divided exactly by `m+e`.
///
/// Fails with [`Error::InexactDivision`] if some entry is not divisible.
pub fn apply_column_operations(n: u32, l: u32, e: u32) -> Result<Vec<Vec<RationalPolynomial>>> {
    let spec = ParamMatrixSpec::d1(n, l, e)?;
    let a = build_d_polynomials(&ParamMatrixSpec::d(spec.n, spec.l)?)?;
    let mut b = a.clone();
    let divisor = RationalPolynomial::linear(int(e as i64));
    let (n, e) = (n as usize, e as usize);
    for k in 0..e {
        let c = n - 2 * e + k;
        for r in 0..n {
            let mut v = a[r][c].clone();
            for i in 1..=k {
                v = &v + &a[r][c + i].scale(&to_rational(&binomial_i(k as i64, i as u64)));
            }
            b[r][c] = v.div_exact(&divisor).map_err(|_| {
                Error::InexactDivision(format!(
                    "entry ({}, {}) after column operations is not divisible by m+{e}",
                    r + 1,
                    c + 1
                ))
            })?;
        }
    }
    Ok(b)
}

/// The column operations yield `D1` entrywise and `det D = (m+e)^e det D1`.
pub fn column_operation_checks(n: u32, l: u32, e: u32) -> Result<Vec<CheckOutcome>> {
    let mut out = Vec::new();
    let ops = match apply_column_operations(n, l, e) {
        Ok(b) => b,
        Err(err) => {
            return Ok(vec![CheckOutcome::predicate(
                format!("m+{e} divides the modified columns"),
                false,
                err.to_string(),
            )])
        }
    };
    out.push(CheckOutcome::predicate(
        format!("m+{e} divides the modified columns"),
        true,
        "",
    ));
    let spec = ParamMatrixSpec::d1(n, l, e)?;
    let d1 = build_d_polynomials(&spec)?;
    let mismatch = (0..n as usize)
        .flat_map(|i| (0..n as usize).map(move |j| (i, j)))
        .find(|&(i, j)| ops[i][j] != d1[i][j]);
    out.push(CheckOutcome::predicate(
        "column operations reproduce D1",
        mismatch.is_none(),
        mismatch.map_or(String::new(), |(i, j)| {
            format!("entry ({}, {}): {} vs {}", i + 1, j + 1, ops[i][j], d1[i][j])
        }),
    ));
    let d_spec = ParamMatrixSpec::d(n, l)?;
    for m in [ratio(1, 3), int(2), int(5)] {
        let lhs = det_d_at(&d_spec, &m)?;
        let scale = (&m + int(e as i64)).pow(e as i32);
        let rhs = scale * build_d(&spec, &m)?.det_exact()?;
        out.push(CheckOutcome::compare(
            format!("det D = (m+{e})^{e} det D1 at m = {m}"),
            &lhs,
            &rhs,
        ));
    }
    Ok(out)
}

/// `P(m;N,l)` rebuilt from its values at `m = 0, -1, ..., -N`, where `P(-e)`
/// comes from the block closed forms of `det D1(-e)` and the remaining values
/// from the reflection `P(-N-m) = (-1)^{N+1} P(m)`.
pub fn p_from_block_values(n: u32, l: u32) -> Result<RationalPolynomial> {
    if n == 0 || l < 1 || l > n {
        return range_err(format!("l out of range: need 1 <= l <= N = {n}, got l = {l}"));
    }
    let l = if in_upper_range(n, l) { l } else { n + 1 - l };
    let forced = forced_factor_polynomial(n);
    let sign = int(p_reflection_sign(n));
    let mut points: Vec<(ExactRational, ExactRational)> = Vec::new();
    for e in 0..=n / 2 {
        let ei = e as i64;
        // forced(m) / (m+e)^e does not vanish at m = -e
        let rest = forced.div_exact(&RationalPolynomial::linear(int(ei)).pow(e))?;
        let value = det_d1_closed(n, l, e) / rest.eval(&int(-ei));
        let mirror = int(ei - n as i64);
        if mirror != int(-ei) {
            points.push((mirror, &sign * &value));
        }
        points.push((int(-ei), value));
    }
    lagrange_interpolate(&points)
}
