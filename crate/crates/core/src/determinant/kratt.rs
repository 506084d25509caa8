//! Krattenthaler's determinant lemma:
//!
//! `det_{1<=i,j<=n} ( prod_{t=j+1}^n (X_i + A_t) prod_{t=2}^j (X_i + B_t) )
//!   = prod_{i<j} (X_i - X_j) prod_{2<=i<=j<=n} (B_i - A_j)`.

use rand::Rng;

use crate::error::{range_err, Result};
use crate::exact::{factorial_q, int, pochhammer, ratio, ExactRational};
use crate::matrix::RationalMatrix;

/// `a[t-2]` holds `A_t` and `b[t-2]` holds `B_t` for `t = 2..=n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KrattLemmaInput {
    x: Vec<ExactRational>,
    a: Vec<ExactRational>,
    b: Vec<ExactRational>,
}

impl KrattLemmaInput {
    pub fn new(x: Vec<ExactRational>, a: Vec<ExactRational>, b: Vec<ExactRational>) -> Result<Self> {
        let want = x.len().saturating_sub(1);
        if a.len() != want || b.len() != want {
            return range_err(format!(
                "need {want} values each of A and B for n = {}, got {} and {}",
                x.len(),
                a.len(),
                b.len()
            ));
        }
        Ok(Self { x, a, b })
    }

    pub fn n(&self) -> usize {
        self.x.len()
    }

    fn a_at(&self, t: usize) -> &ExactRational {
        &self.a[t - 2]
    }

    fn b_at(&self, t: usize) -> &ExactRational {
        &self.b[t - 2]
    }

    /// The instance that evaluates the block `M`: `X_i = i`,
    /// `A_j = -1-N+(e-j+1)/2`, `B_j = -j-N+1`, size `e`.
    pub fn block_specialization(n: u32, e: u32) -> Self {
        let (n, e) = (n as i64, e as i64);
        let x = (1..=e).map(int).collect();
        let a = (2..=e).map(|j| int(-1 - n) + ratio(e - j + 1, 2)).collect();
        let b = (2..=e).map(|j| int(-j - n + 1)).collect();
        Self { x, a, b }
    }

    /// Small random rational parameters for property checks.
    pub fn random<R: Rng>(rng: &mut R, n: usize) -> Self {
        let mut q = || ratio(rng.gen_range(-12..=12), rng.gen_range(1..=4));
        let x = (0..n).map(|_| q()).collect();
        let a = (1..n).map(|_| q()).collect();
        let b = (1..n).map(|_| q()).collect();
        Self { x, a, b }
    }
}

/// Right-hand side of the lemma.
pub fn krattenthaler_det(input: &KrattLemmaInput) -> ExactRational {
    let n = input.n();
    let mut v = int(1);
    for i in 0..n {
        for j in i + 1..n {
            v *= &input.x[i] - &input.x[j];
        }
    }
    for i in 2..=n {
        for j in i..=n {
            v *= input.b_at(i) - input.a_at(j);
        }
    }
    v
}

/// The matrix on the left-hand side of the lemma.
pub fn krattenthaler_matrix(input: &KrattLemmaInput) -> RationalMatrix {
    let n = input.n();
    RationalMatrix::from_fn(n, n, |r, c| {
        let (xi, j) = (&input.x[r], c + 1);
        let mut v = int(1);
        for t in j + 1..=n {
            v *= xi + input.a_at(t);
        }
        for t in 2..=j {
            v *= xi + input.b_at(t);
        }
        v
    })
}

/// `prod_{j=2}^e (j-1)! ((e-j+1)/2)_{j-1}`, the value of the block
/// specialisation.
pub fn block_specialization_value(e: u32) -> ExactRational {
    let e = e as i64;
    (2..=e)
        .map(|j| factorial_q(j - 1) * pochhammer(&ratio(e - j + 1, 2), j - 1).unwrap())
        .product()
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn trivial_sizes() {
        let empty = KrattLemmaInput::new(vec![], vec![], vec![]).unwrap();
        assert_eq!(krattenthaler_det(&empty), int(1));
        let one = KrattLemmaInput::new(vec![ratio(5, 3)], vec![], vec![]).unwrap();
        assert_eq!(krattenthaler_det(&one), int(1));
        assert_eq!(krattenthaler_matrix(&one).det_exact().unwrap(), int(1));
    }

    #[test]
    fn two_by_two() {
        let k = KrattLemmaInput::new(vec![int(1), int(2)], vec![int(0)], vec![int(5)]).unwrap();
        assert_eq!(krattenthaler_det(&k), int(-5));
        assert_eq!(krattenthaler_matrix(&k).det_exact().unwrap(), int(-5));
    }

    #[test]
    fn length_validation() {
        assert!(KrattLemmaInput::new(vec![int(1), int(2)], vec![], vec![int(1)]).is_err());
    }

    #[test]
    fn block_specialization_values() {
        for (e, v) in [(2, ratio(1, 2)), (3, ratio(3, 2)), (4, ratio(135, 2))] {
            assert_eq!(block_specialization_value(e), v);
        }
        for n in 2..=8 {
            for e in 1..=n / 2 {
                let k = KrattLemmaInput::block_specialization(n, e);
                let rhs = krattenthaler_det(&k);
                assert_eq!(rhs, block_specialization_value(e), "N={n} e={e}");
                assert_eq!(krattenthaler_matrix(&k).det_exact().unwrap(), rhs);
            }
        }
    }

    #[test]
    fn seeded_random_inputs() {
        let mut rng = ChaCha8Rng::seed_from_u64(0x6b72_6174);
        for _ in 0..50 {
            for n in 0..=5 {
                let k = KrattLemmaInput::random(&mut rng, n);
                assert_eq!(
                    krattenthaler_matrix(&k).det_exact().unwrap(),
                    krattenthaler_det(&k)
                );
            }
        }
    }
}
