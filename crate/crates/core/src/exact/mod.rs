//! Exact integer and rational kernels.
//!
//! Every count, weight and determinant in the crate is an [`ExactInteger`] or
//! an [`ExactRational`]. Rationals are `num_rational::BigRational`, which keeps
//! values in lowest terms with a positive denominator after every operation.

mod poly;

pub use poly::{lagrange_interpolate, RationalPolynomial};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type ExactInteger = BigInt;
pub type ExactRational = BigRational;

/// Integer as a rational.
pub fn int(n: i64) -> ExactRational {
    ExactRational::from_integer(BigInt::from(n))
}

/// The fraction `num/den`, reduced. Panics if `den == 0`.
pub fn ratio(num: i64, den: i64) -> ExactRational {
    ExactRational::new(BigInt::from(num), BigInt::from(den))
}

pub fn big(n: i64) -> ExactInteger {
    BigInt::from(n)
}

pub fn to_rational(n: &ExactInteger) -> ExactRational {
    ExactRational::from_integer(n.clone())
}

/// Returns the integer value of `q`, or a [`Error::NonIntegral`] naming `what`.
pub fn to_integer(q: &ExactRational, what: &str) -> Result<ExactInteger> {
    if q.is_integer() {
        Ok(q.to_integer())
    } else {
        Err(Error::NonIntegral {
            what: what.to_string(),
            value: q.to_string(),
        })
    }
}

/// `2^k` for any signed `k`.
pub fn pow2(k: i64) -> ExactRational {
    let p = BigInt::one() << k.unsigned_abs();
    if k >= 0 {
        ExactRational::from_integer(p)
    } else {
        ExactRational::new(BigInt::one(), p)
    }
}

/// `(-1)^k`.
pub fn sign_power(k: i64) -> i64 {
    if k.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

/// Shifted factorial `(a)_k`.
///
/// For `k >= 0` this is `a(a+1)...(a+k-1)` with `(a)_0 = 1`. For `k < 0` the
/// Gamma-ratio extension `(a)_k = 1/((a-1)(a-2)...(a+k))` is used, which
/// fails with [`Error::DivisionByZero`] when one of those factors vanishes.
pub fn pochhammer(a: &ExactRational, k: i64) -> Result<ExactRational> {
    if k >= 0 {
        return Ok(rising(a, k as u64));
    }
    let n = k.unsigned_abs();
    let base = a + int(k);
    let denom = rising(&base, n);
    if denom.is_zero() {
        return Err(Error::DivisionByZero(format!(
            "negative-length shifted factorial ({a})_{k}"
        )));
    }
    Ok(denom.recip())
}

fn rising(a: &ExactRational, k: u64) -> ExactRational {
    let mut acc = ExactRational::one();
    let mut x = a.clone();
    for _ in 0..k {
        acc *= &x;
        if acc.is_zero() {
            return acc;
        }
        x += ExactRational::one();
    }
    acc
}

/// Shifted factorial of an integer argument with non-negative length.
pub fn pochhammer_int(a: i64, k: u64) -> ExactInteger {
    let mut acc = BigInt::one();
    for i in 0..k as i64 {
        let f = a + i;
        if f == 0 {
            return BigInt::zero();
        }
        acc *= f;
    }
    acc
}

pub fn factorial(n: u64) -> ExactInteger {
    (2..=n).fold(BigInt::one(), |acc, i| acc * i)
}

/// `n!!` with `0!! = 1`; `(-1)!!` is reached via [`double_factorial_signed`].
pub fn double_factorial(n: u64) -> ExactInteger {
    let mut acc = BigInt::one();
    let mut i = n;
    while i > 1 {
        acc *= i;
        i -= 2;
    }
    acc
}

/// Double factorial that also accepts `-1` (value 1).
pub fn double_factorial_signed(n: i64) -> Result<ExactInteger> {
    match n {
        -1 => Ok(BigInt::one()),
        n if n >= 0 => Ok(double_factorial(n as u64)),
        _ => Err(Error::ParameterRange(format!("double factorial of {n}"))),
    }
}

/// `1/n!` with the convention `1/n! = 0` for negative integers `n`.
pub fn recip_factorial(n: i64) -> ExactRational {
    if n < 0 {
        ExactRational::zero()
    } else {
        ExactRational::new(BigInt::one(), factorial(n as u64))
    }
}

/// `n!` as a rational, for non-negative `n`.
pub fn factorial_q(n: i64) -> ExactRational {
    assert!(n >= 0, "factorial of negative integer {n}");
    to_rational(&factorial(n as u64))
}

/// Binomial coefficient `C(n, k) = (n-k+1)_k / k!`, valid for negative `n`.
pub fn binomial(n: &ExactInteger, k: u64) -> ExactInteger {
    let mut num = BigInt::one();
    let mut x = n - BigInt::from(k) + 1u32;
    for _ in 0..k {
        num *= &x;
        x += 1u32;
    }
    num / factorial(k)
}

pub fn binomial_i(n: i64, k: u64) -> ExactInteger {
    binomial(&BigInt::from(n), k)
}

/// Binomial coefficient as a rational; zero for negative `k`.
pub fn binomial_q(n: i64, k: i64) -> ExactRational {
    if k < 0 {
        ExactRational::zero()
    } else {
        to_rational(&binomial_i(n, k as u64))
    }
}

/// Converts a rational to the nearest `f64`.
pub fn to_f64(q: &ExactRational) -> f64 {
    // Scale down both parts so huge numerators and denominators survive.
    let num = q.numer();
    let den = q.denom();
    let bits = num.bits().max(den.bits()) as i64;
    let shift = (bits - 1000).max(0) as u64;
    let n = (num.abs() >> shift).to_string().parse::<f64>().unwrap_or(f64::INFINITY);
    let d = (den >> shift).to_string().parse::<f64>().unwrap_or(f64::INFINITY);
    let v = n / d;
    if num.is_negative() {
        -v
    } else {
        v
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn pochhammer_examples() {
        assert_eq!(pochhammer(&ratio(1, 2), 0).unwrap(), int(1));
        assert_eq!(pochhammer(&ratio(1, 2), 2).unwrap(), ratio(3, 4));
        assert_eq!(pochhammer(&int(-3), 5).unwrap(), int(0));
        assert_eq!(pochhammer(&int(3), -1).unwrap(), ratio(1, 2));
    }

    #[test]
    fn pochhammer_negative_length_pole() {
        // (1)_{-1} = 1/(0)
        assert!(matches!(
            pochhammer(&int(1), -1),
            Err(Error::DivisionByZero(_))
        ));
        assert!(pochhammer(&int(3), -3).is_err());
        assert_eq!(pochhammer(&int(3), -2).unwrap(), ratio(1, 2));
    }

    #[test]
    fn binomial_examples() {
        assert_eq!(binomial_i(5, 2), big(10));
        assert_eq!(binomial_i(7, 0), big(1));
        assert_eq!(binomial_i(-7, 0), big(1));
        assert_eq!(binomial_i(-1, 3), big(-1));
        assert_eq!(binomial_i(3, 5), big(0));
    }

    #[test]
    fn double_factorial_examples() {
        assert_eq!(double_factorial(0), big(1));
        assert_eq!(double_factorial(6), big(48));
        assert_eq!(double_factorial(5), big(15));
        assert_eq!(double_factorial_signed(-1).unwrap(), big(1));
        assert!(double_factorial_signed(-3).is_err());
    }

    #[test]
    fn recip_factorial_negative_is_zero() {
        assert_eq!(recip_factorial(-1), int(0));
        assert_eq!(recip_factorial(3), ratio(1, 6));
    }

    #[test]
    fn to_integer_rejects_fractions() {
        assert_eq!(to_integer(&int(8), "x").unwrap(), big(8));
        assert!(matches!(
            to_integer(&ratio(1, 2), "x"),
            Err(Error::NonIntegral { .. })
        ));
    }

    #[test]
    fn pow2_signed() {
        assert_eq!(pow2(3), int(8));
        assert_eq!(pow2(-2), ratio(1, 4));
        assert_eq!(pow2(0), int(1));
    }

    #[test]
    fn float_conversion_of_huge_values() {
        let q = ExactRational::new(factorial(400), factorial(399));
        assert!((to_f64(&q) - 400.0).abs() < 1e-9);
        assert!((to_f64(&ratio(-2, 5)) + 0.4).abs() < 1e-15);
    }

    fn small_rational() -> impl Strategy<Value = ExactRational> {
        (-20i64..20, 1i64..5).prop_map(|(n, d)| ratio(n, d))
    }

    proptest! {
        #[test]
        fn pochhammer_splits_additively(a in small_rational(), j in -6i64..7, k in -6i64..7) {
            let whole = pochhammer(&a, j + k);
            let left = pochhammer(&a, j);
            let right = pochhammer(&(&a + int(j)), k);
            if let (Ok(w), Ok(l), Ok(r)) = (whole, left, right) {
                prop_assert_eq!(w, l * r);
            }
        }

        #[test]
        fn pochhammer_negative_length_is_inverse(a in small_rational(), k in 0i64..8) {
            let forward = pochhammer(&a, k).unwrap();
            if let Ok(back) = pochhammer(&(&a + int(k)), -k) {
                prop_assert_eq!(forward * back, int(1));
            }
        }

        #[test]
        fn binomial_matches_factorial_ratio(n in 0u64..40, k in 0u64..40) {
            let expected = if k > n {
                BigInt::zero()
            } else {
                factorial(n) / (factorial(k) * factorial(n - k))
            };
            prop_assert_eq!(binomial_i(n as i64, k), expected);
        }

        #[test]
        fn binomial_upper_negation(n in 0i64..30, k in 0u64..12) {
            // C(-n, k) = (-1)^k C(n+k-1, k)
            let lhs = binomial_i(-n, k);
            let rhs = binomial_i(n + k as i64 - 1, k) * sign_power(k as i64);
            prop_assert_eq!(lhs, rhs);
        }
    }
}
