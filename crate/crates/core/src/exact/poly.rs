use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use super::{int, ExactRational};
use crate::error::{Error, Result};

/// Dense univariate polynomial over the rationals, coefficients in ascending
/// degree. Trailing zeros are always trimmed, so the zero polynomial has no
/// coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct RationalPolynomial {
    coeffs: Vec<ExactRational>,
}

impl RationalPolynomial {
    pub fn new(mut coeffs: Vec<ExactRational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn constant(c: ExactRational) -> Self {
        Self::new(vec![c])
    }

    pub fn one() -> Self {
        Self::constant(int(1))
    }

    /// The polynomial `m + shift`.
    pub fn linear(shift: ExactRational) -> Self {
        Self::new(vec![shift, int(1)])
    }

    /// `(m + shift)_k`, the rising factorial in the indeterminate.
    pub fn rising(shift: &ExactRational, k: u64) -> Self {
        let mut acc = Self::one();
        let mut s = shift.clone();
        for _ in 0..k {
            acc = &acc * &Self::linear(s.clone());
            s += int(1);
        }
        acc
    }

    pub fn coeffs(&self) -> &[ExactRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&ExactRational> {
        self.coeffs.last()
    }

    /// Horner evaluation.
    pub fn eval(&self, x: &ExactRational) -> ExactRational {
        self.coeffs
            .iter()
            .rev()
            .fold(ExactRational::zero(), |acc, c| acc * x + c)
    }

    pub fn scale(&self, c: &ExactRational) -> Self {
        Self::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// `p(a*m + b)`.
    pub fn compose_affine(&self, a: &ExactRational, b: &ExactRational) -> Self {
        let inner = Self::new(vec![b.clone(), a.clone()]);
        self.coeffs.iter().rev().fold(Self::zero(), |acc, c| {
            &(&acc * &inner) + &Self::constant(c.clone())
        })
    }

    /// Polynomial long division; returns `(quotient, remainder)`.
    pub fn div_rem(&self, divisor: &Self) -> Result<(Self, Self)> {
        let lead = divisor
            .leading()
            .ok_or_else(|| Error::DivisionByZero("polynomial division by zero".into()))?
            .clone();
        let dd = divisor.coeffs.len() - 1;
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Ok((Self::zero(), self.clone()));
        }
        let mut quot = vec![ExactRational::zero(); rem.len() - dd];
        for shift in (0..quot.len()).rev() {
            let c = &rem[shift + dd] / &lead;
            if !c.is_zero() {
                for (k, d) in divisor.coeffs.iter().enumerate() {
                    rem[shift + k] -= &c * d;
                }
            }
            quot[shift] = c;
        }
        rem.truncate(dd);
        Ok((Self::new(quot), Self::new(rem)))
    }

    /// Exact division; fails with [`Error::InexactDivision`] on a nonzero
    /// remainder.
    pub fn div_exact(&self, divisor: &Self) -> Result<Self> {
        let (q, r) = self.div_rem(divisor)?;
        if r.is_zero() {
            Ok(q)
        } else {
            Err(Error::InexactDivision(format!(
                "({self}) / ({divisor}) leaves remainder {r}"
            )))
        }
    }

    pub fn divides(&self, dividend: &Self) -> bool {
        dividend.div_rem(self).map(|(_, r)| r.is_zero()).unwrap_or(false)
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(Self::one(), |acc, _| &acc * self)
    }
}

impl Add for &RationalPolynomial {
    type Output = RationalPolynomial;
    fn add(self, rhs: Self) -> RationalPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let zero = ExactRational::zero();
        RationalPolynomial::new(
            (0..n)
                .map(|i| {
                    self.coeffs.get(i).unwrap_or(&zero) + rhs.coeffs.get(i).unwrap_or(&zero)
                })
                .collect(),
        )
    }
}

impl Neg for &RationalPolynomial {
    type Output = RationalPolynomial;
    fn neg(self) -> RationalPolynomial {
        RationalPolynomial::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl Sub for &RationalPolynomial {
    type Output = RationalPolynomial;
    fn sub(self, rhs: Self) -> RationalPolynomial {
        self + &(-rhs)
    }
}

impl Mul for &RationalPolynomial {
    type Output = RationalPolynomial;
    fn mul(self, rhs: Self) -> RationalPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return RationalPolynomial::zero();
        }
        let mut out = vec![ExactRational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        RationalPolynomial::new(out)
    }
}

/// Formats as `60 + 90*m + 30*m^2`; the zero polynomial prints as `0`.
impl fmt::Display for RationalPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "{mag}")?,
                _ => {
                    if !mag.is_one() {
                        write!(f, "{mag}*")?;
                    }
                    if k == 1 {
                        write!(f, "m")?;
                    } else {
                        write!(f, "m^{k}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

/// The unique polynomial of degree below `points.len()` through all points.
pub fn lagrange_interpolate(
    points: &[(ExactRational, ExactRational)],
) -> Result<RationalPolynomial> {
    if points.is_empty() {
        return Err(Error::NoPoints);
    }
    for (i, (xi, _)) in points.iter().enumerate() {
        if points[..i].iter().any(|(xj, _)| xj == xi) {
            return Err(Error::DuplicateAbscissa(xi.to_string()));
        }
    }
    let mut acc = RationalPolynomial::zero();
    for (i, (xi, yi)) in points.iter().enumerate() {
        if yi.is_zero() {
            continue;
        }
        let mut basis = RationalPolynomial::one();
        let mut denom = ExactRational::one();
        for (j, (xj, _)) in points.iter().enumerate() {
            if i != j {
                basis = &basis * &RationalPolynomial::linear(-xj);
                denom *= xi - xj;
            }
        }
        acc = &acc + &basis.scale(&(yi / denom));
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::ratio;
    use proptest::prelude::*;

    fn poly(cs: &[i64]) -> RationalPolynomial {
        RationalPolynomial::new(cs.iter().map(|&c| int(c)).collect())
    }

    #[test]
    fn interpolation_examples() {
        let p = lagrange_interpolate(&[(int(0), int(1)), (int(1), int(1))]).unwrap();
        assert_eq!(p, poly(&[1]));
        let p = lagrange_interpolate(&[(int(0), int(3)), (int(1), int(6))]).unwrap();
        assert_eq!(p, poly(&[3, 3]));
        let c = ratio(-7, 3);
        let p = lagrange_interpolate(&[(int(0), c.clone())]).unwrap();
        assert_eq!(p, RationalPolynomial::constant(c));
    }

    #[test]
    fn interpolation_errors() {
        assert_eq!(lagrange_interpolate(&[]), Err(Error::NoPoints));
        assert!(matches!(
            lagrange_interpolate(&[(int(2), int(1)), (int(2), int(5))]),
            Err(Error::DuplicateAbscissa(_))
        ));
    }

    #[test]
    fn eval_examples() {
        let p = poly(&[3, 3]);
        assert_eq!(p.eval(&int(1)), int(6));
        assert_eq!(p.eval(&int(-3)), int(-6));
        assert_eq!(RationalPolynomial::zero().eval(&ratio(5, 7)), int(0));
    }

    #[test]
    fn zero_polynomial_is_trimmed() {
        let p = poly(&[0, 0, 0]);
        assert!(p.is_zero());
        assert_eq!(p.degree(), None);
        assert_eq!(poly(&[1, 2, 0]).degree(), Some(1));
    }

    #[test]
    fn display_format() {
        assert_eq!(poly(&[3, 3]).to_string(), "3 + 3*m");
        assert_eq!(poly(&[60, 90, 30]).to_string(), "60 + 90*m + 30*m^2");
        assert_eq!(poly(&[1]).to_string(), "1");
        assert_eq!(poly(&[0, -1, 0, 2]).to_string(), "-m + 2*m^3");
        assert_eq!(
            RationalPolynomial::new(vec![ratio(1, 2), ratio(-3, 4)]).to_string(),
            "1/2 - 3/4*m"
        );
    }

    #[test]
    fn rising_factorial_polynomial() {
        // (m+1)_2 = m^2 + 3m + 2
        assert_eq!(RationalPolynomial::rising(&int(1), 2), poly(&[2, 3, 1]));
        assert_eq!(RationalPolynomial::rising(&int(4), 0), poly(&[1]));
    }

    #[test]
    fn exact_division() {
        let p = poly(&[3, 6, 3]);
        let q = p.div_exact(&poly(&[1, 1])).unwrap();
        assert_eq!(q, poly(&[3, 3]));
        assert!(matches!(
            p.div_exact(&poly(&[2, 1])),
            Err(Error::InexactDivision(_))
        ));
    }

    #[test]
    fn affine_composition() {
        // p(m) = m^2, p(-2-m) = m^2 + 4m + 4
        let p = poly(&[0, 0, 1]);
        assert_eq!(p.compose_affine(&int(-1), &int(-2)), poly(&[4, 4, 1]));
    }

    fn small_rational() -> impl Strategy<Value = ExactRational> {
        (-30i64..30, 1i64..7).prop_map(|(n, d)| ratio(n, d))
    }

    proptest! {
        #[test]
        fn interpolation_reproduces_points(
            ys in prop::collection::vec(small_rational(), 1..7),
            offset in -5i64..5,
        ) {
            let pts: Vec<_> = ys
                .iter()
                .enumerate()
                .map(|(i, y)| (int(i as i64 * 2 + offset), y.clone()))
                .collect();
            let p = lagrange_interpolate(&pts).unwrap();
            prop_assert!(p.degree().map_or(true, |d| d < pts.len()));
            for (x, y) in &pts {
                prop_assert_eq!(&p.eval(x), y);
            }
        }

        #[test]
        fn div_rem_recombines(
            a in prop::collection::vec(-9i64..9, 0..6),
            b in prop::collection::vec(-9i64..9, 1..4),
        ) {
            let a = poly(&a);
            let b = poly(&b);
            prop_assume!(!b.is_zero());
            let (q, r) = a.div_rem(&b).unwrap();
            prop_assert_eq!(&(&q * &b) + &r, a);
            prop_assert!(r.degree().map_or(true, |d| d < b.degree().unwrap()));
        }
    }
}
