//! Exact sign counting for eigenvalues of symmetric rational matrices.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::rational::{self, Rational};
use crate::{Error, Result};

/// Characteristic polynomial `det(tI - A)` by Berkowitz's division-free
/// algorithm. Coefficients are listed from `t^m` down to `t^0`.
pub fn characteristic_polynomial(a: &[Vec<BigInt>]) -> Vec<BigInt> {
    let m = a.len();
    let mut poly = vec![BigInt::one()];
    for k in 0..m {
        // A_{k+1} = [[A_k, C], [R, a_kk]]
        let row: Vec<&BigInt> = (0..k).map(|j| &a[k][j]).collect();
        let mut col: Vec<BigInt> = (0..k).map(|i| a[i][k].clone()).collect();
        let mut toeplitz = Vec::with_capacity(k + 2);
        toeplitz.push(BigInt::one());
        toeplitz.push(-a[k][k].clone());
        for _ in 0..k {
            let rc: BigInt = row.iter().zip(&col).map(|(r, c)| *r * c).sum();
            toeplitz.push(-rc);
            col = (0..k)
                .map(|i| (0..k).map(|j| &a[i][j] * &col[j]).sum())
                .collect();
        }
        let mut next = vec![BigInt::zero(); k + 2];
        for (i, slot) in next.iter_mut().enumerate() {
            for j in 0..=i.min(k) {
                *slot += &toeplitz[i - j] * &poly[j];
            }
        }
        poly = next;
    }
    poly
}

/// Sign changes in the nonzero coefficients.
pub fn sign_changes(coefficients: &[BigInt]) -> usize {
    let signs: Vec<bool> = coefficients
        .iter()
        .filter(|c| !c.is_zero())
        .map(|c| c.is_positive())
        .collect();
    signs.windows(2).filter(|w| w[0] != w[1]).count()
}

pub fn check_symmetric(q: &[Vec<Rational>]) -> Result<()> {
    let m = q.len();
    for (i, row) in q.iter().enumerate() {
        if row.len() != m {
            return Err(Error::DimensionMismatch(format!(
                "row {} has {} entries in a {m}x{m} matrix",
                i + 1,
                row.len()
            )));
        }
        for j in 0..i {
            if row[j] != q[j][i] {
                return Err(Error::DimensionMismatch(format!(
                    "matrix is not symmetric at ({}, {})",
                    i + 1,
                    j + 1
                )));
            }
        }
    }
    Ok(())
}

/// Exact number of positive eigenvalues of a symmetric rational matrix.
///
/// The characteristic polynomial of a symmetric matrix is real-rooted, so
/// Descartes' rule of signs is exact. Entries are first scaled by their common
/// denominator, which does not change any sign.
pub fn positive_eigenvalue_count(q: &[Vec<Rational>]) -> Result<usize> {
    check_symmetric(q)?;
    let den = rational::common_denominator(q.iter().flatten());
    let scaled: Vec<Vec<BigInt>> = q
        .iter()
        .map(|row| row.iter().map(|x| x.numer() * (&den / x.denom())).collect())
        .collect();
    Ok(positive_eigenvalue_count_int(&scaled))
}

pub fn positive_eigenvalue_count_int(a: &[Vec<BigInt>]) -> usize {
    sign_changes(&characteristic_polynomial(a))
}
