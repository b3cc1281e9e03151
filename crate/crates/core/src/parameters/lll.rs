//! Integral LLL reduction (all arithmetic in exact integers).
//!
//! Works on the Gram-Schmidt data `d_i = det(Gram(b_1..b_i))` and
//! `lambda_{i,j} = d_j mu_{i,j}`, which stay integral throughout, so
//! `|b*_i|^2 = d_i / d_{i-1}` is available exactly at the end.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};

/// Lovász parameter `delta = DELTA_NUM / DELTA_DEN`.
const DELTA_NUM: i64 = 99;
const DELTA_DEN: i64 = 100;

/// Reduced basis with its Gram-Schmidt determinants.
#[derive(Debug, Clone)]
pub struct ReducedBasis {
    pub rows: Vec<Vec<BigInt>>,
    /// `d_0 = 1, d_1, ..., d_n`.
    pub d: Vec<BigInt>,
}

impl ReducedBasis {
    /// `|b*_i|^2 = d_i / d_{i-1}` as the exact pair `(d_i, d_{i-1})` (0-based `i`).
    pub fn gs_norm_sq(&self, i: usize) -> (BigInt, BigInt) {
        (self.d[i + 1].clone(), self.d[i].clone())
    }

    /// Smallest `|b*_i|^2`, a lower bound on the squared length of every
    /// nonzero lattice vector, compared against `bound`: returns true when
    /// every nonzero lattice vector is strictly longer than `sqrt(bound)`.
    pub fn shortest_exceeds(&self, bound: &BigInt) -> bool {
        (0..self.rows.len()).all(|i| {
            let (num, den) = self.gs_norm_sq(i);
            num > bound * den
        })
    }
}

fn dot(a: &[BigInt], b: &[BigInt]) -> BigInt {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// LLL-reduces linearly independent integer row vectors.
pub fn lll_reduce(rows: Vec<Vec<BigInt>>) -> Result<ReducedBasis> {
    let n = rows.len();
    if n == 0 {
        return Ok(ReducedBasis { rows, d: vec![BigInt::from(1)] });
    }
    // 1-based indices below, slot 0 unused in `b` and `lam`
    let mut b: Vec<Vec<BigInt>> = std::iter::once(Vec::new()).chain(rows).collect();
    let mut d = vec![BigInt::zero(); n + 1];
    let mut lam = vec![vec![BigInt::zero(); n + 1]; n + 1];
    d[0] = BigInt::from(1);
    d[1] = dot(&b[1], &b[1]);
    if d[1].is_zero() {
        return Err(Error::InvalidInput("zero vector in lattice basis".into()));
    }
    let mut k = 2;
    let mut k_max = 1;
    while k <= n {
        if k > k_max {
            k_max = k;
            for j in 1..=k {
                let mut u = dot(&b[k], &b[j]);
                for i in 1..j {
                    u = (&d[i] * &u - &lam[k][i] * &lam[j][i]) / &d[i - 1];
                }
                if j < k {
                    lam[k][j] = u;
                } else {
                    if u.is_zero() {
                        return Err(Error::InvalidInput("lattice basis vectors are dependent".into()));
                    }
                    d[k] = u;
                }
            }
        }
        loop {
            redi(&mut b, &mut lam, &d, k, k - 1);
            let lhs = BigInt::from(DELTA_DEN) * &d[k] * &d[k - 2];
            let rhs = BigInt::from(DELTA_NUM) * &d[k - 1] * &d[k - 1] - BigInt::from(DELTA_DEN) * &lam[k][k - 1] * &lam[k][k - 1];
            if lhs < rhs {
                swapi(&mut b, &mut lam, &mut d, k, k_max);
                k = (k - 1).max(2);
            } else {
                for l in (1..k - 1).rev() {
                    redi(&mut b, &mut lam, &d, k, l);
                }
                k += 1;
                break;
            }
        }
    }
    b.remove(0);
    Ok(ReducedBasis { rows: b, d })
}

fn redi(b: &mut [Vec<BigInt>], lam: &mut [Vec<BigInt>], d: &[BigInt], k: usize, l: usize) {
    let two_lam: BigInt = &lam[k][l] * 2;
    if two_lam.abs() <= d[l] {
        return;
    }
    // q = round(lam / d_l)
    let q = (&two_lam + &d[l]).div_floor(&(&d[l] * 2));
    let (head, tail) = b.split_at_mut(k);
    for (x, y) in tail[0].iter_mut().zip(&head[l]) {
        *x -= &q * y;
    }
    lam[k][l] -= &q * &d[l];
    for i in 1..l {
        let t = &q * &lam[l][i];
        lam[k][i] -= t;
    }
}

fn swapi(b: &mut [Vec<BigInt>], lam: &mut [Vec<BigInt>], d: &mut [BigInt], k: usize, k_max: usize) {
    b.swap(k, k - 1);
    for j in 1..k - 1 {
        let t = lam[k][j].clone();
        lam[k][j] = lam[k - 1][j].clone();
        lam[k - 1][j] = t;
    }
    let l = lam[k][k - 1].clone();
    let bb = (&d[k - 2] * &d[k] + &l * &l) / &d[k - 1];
    for i in k + 1..=k_max {
        let t = lam[i][k].clone();
        lam[i][k] = (&d[k] * &lam[i][k - 1] - &l * &t) / &d[k - 1];
        lam[i][k - 1] = (&bb * &t + &l * &lam[i][k]) / &d[k];
    }
    d[k - 1] = bb;
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(rows: &[&[i64]]) -> Vec<Vec<BigInt>> {
        rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect()
    }

    fn det3(m: &[Vec<BigInt>]) -> BigInt {
        &m[0][0] * (&m[1][1] * &m[2][2] - &m[1][2] * &m[2][1]) - &m[0][1] * (&m[1][0] * &m[2][2] - &m[1][2] * &m[2][0])
            + &m[0][2] * (&m[1][0] * &m[2][1] - &m[1][1] * &m[2][0])
    }

    #[test]
    fn textbook_example() {
        // reduces to (0,1,0), (1,0,1), (-1,0,2)
        let red = lll_reduce(big(&[&[1, 1, 1], &[-1, 0, 2], &[3, 5, 6]])).unwrap();
        let norms: Vec<BigInt> = red.rows.iter().map(|r| dot(r, r)).collect();
        assert_eq!(norms[0], BigInt::from(1));
        assert!(norms.iter().all(|n| *n <= BigInt::from(5)));
        assert_eq!(det3(&red.rows).abs(), BigInt::from(3));
    }

    #[test]
    fn preserves_determinant_and_reduces() {
        let rows = big(&[&[1, 0, 0, 100_003], &[0, 1, 0, 70_001], &[0, 0, 1, 170_004]]);
        let red = lll_reduce(rows).unwrap();
        // 1*100003 + 1*70001 - 1*170004 = 0: relation vector (1, 1, -1, 0)
        let first = &red.rows[0];
        assert_eq!(first[3], BigInt::zero());
        assert_eq!(dot(first, first), BigInt::from(3));
    }

    #[test]
    fn dependent_rows_rejected() {
        assert!(lll_reduce(big(&[&[1, 2], &[2, 4]])).is_err());
    }

    #[test]
    fn gram_schmidt_bound() {
        let red = lll_reduce(big(&[&[1, 0, 1_000_000], &[0, 1, 1_414_214]])).unwrap();
        assert!(red.shortest_exceeds(&BigInt::from(10)));
        // shortest vector length^2 is at least the minimum GS norm
        let s = dot(&red.rows[0], &red.rows[0]);
        assert!(!red.shortest_exceeds(&s));
    }
}
