use crate::{Error, Result, Subset};

/// Columns of a matrix over the prime field `GF(p)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearRep {
    p: u64,
    rows: usize,
    columns: Vec<Vec<u64>>,
}

pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

impl LinearRep {
    /// Builds the representation from the rows of the matrix. Entries are
    /// reduced modulo `p`.
    pub fn from_rows(p: u64, rows: &[Vec<i64>]) -> Result<LinearRep> {
        LinearRep::with_columns(p, rows.first().map_or(0, Vec::len), rows)
    }

    /// Like `from_rows`, with the column count given explicitly so that a
    /// matrix with no rows still has `n` (zero) columns.
    pub fn with_columns(p: u64, n: usize, rows: &[Vec<i64>]) -> Result<LinearRep> {
        if p >= 1 << 31 || !is_prime(p) {
            return Err(Error::InvalidPrime(p));
        }
        if let Some(bad) = rows.iter().position(|r| r.len() != n) {
            return Err(Error::DimensionMismatch(format!(
                "row {} has {} entries, expected {n}",
                bad + 1,
                rows[bad].len()
            )));
        }
        let columns = (0..n)
            .map(|j| {
                rows.iter()
                    .map(|r| r[j].rem_euclid(p as i64) as u64)
                    .collect()
            })
            .collect();
        Ok(LinearRep {
            p,
            rows: rows.len(),
            columns,
        })
    }

    pub fn prime(&self) -> u64 {
        self.p
    }

    pub fn row_count(&self) -> usize {
        self.rows
    }

    pub fn column_count(&self) -> usize {
        self.columns.len()
    }

    pub fn rows(&self) -> Vec<Vec<i64>> {
        (0..self.rows)
            .map(|i| self.columns.iter().map(|c| c[i] as i64).collect())
            .collect()
    }

    /// Dimension of the span of the selected columns.
    pub fn rank(&self, s: Subset) -> usize {
        let p = self.p;
        let mut m: Vec<Vec<u64>> = s.iter().map(|j| self.columns[j].clone()).collect();
        // eliminate column vectors against each other, row index as pivot
        let mut rank = 0;
        for row in 0..self.rows {
            let Some(piv) = (rank..m.len()).find(|&c| m[c][row] != 0) else {
                continue;
            };
            m.swap(rank, piv);
            let inv = inverse(m[rank][row], p);
            for x in m[rank].iter_mut() {
                *x = *x * inv % p;
            }
            let pivot = m[rank].clone();
            for (c, col) in m.iter_mut().enumerate() {
                if c != rank && col[row] != 0 {
                    let factor = col[row];
                    for (x, y) in col.iter_mut().zip(&pivot) {
                        let sub = factor * y % p;
                        *x = (*x + p - sub) % p;
                    }
                }
            }
            rank += 1;
            if rank == m.len() {
                break;
            }
        }
        rank
    }
}

fn inverse(a: u64, p: u64) -> u64 {
    let (mut base, mut e, mut acc) = (a % p, p - 2, 1u64);
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        e >>= 1;
    }
    acc
}
