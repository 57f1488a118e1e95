#![allow(dead_code)]

use matmor::rational::{self, Rational};
use matmor::{Polynomial, Subset};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    matmor::random::rng(seed)
}

/// Inserts an unused variable at position `at`.
pub fn spread(p: &Polynomial, at: usize) -> Polynomial {
    let mut out = Polynomial::zero(p.nvars() + 1);
    for (e, c) in p.terms() {
        let mut e = e.clone();
        e.insert(at, 0);
        out.add_term(e, c.clone());
    }
    out
}

/// Rank over GF(2) of bit-packed vectors, by plain elimination.
pub fn gf2_rank(vectors: &[u64]) -> usize {
    let mut basis: Vec<u64> = Vec::new();
    for &v in vectors {
        let mut v = v;
        for &b in &basis {
            let top = 63 - b.leading_zeros();
            if v >> top & 1 == 1 {
                v ^= b;
            }
        }
        if v != 0 {
            basis.push(v);
            basis.sort_unstable_by(|a, b| b.cmp(a));
        }
    }
    basis.len()
}

/// A rational in `[-5, 5]` avoiding the listed values.
pub fn rational_avoiding<R: Rng>(rng: &mut R, avoid: &[Rational]) -> Rational {
    loop {
        let q = rational::ratio(rng.random_range(-20..=20), rng.random_range(1..=4));
        if !avoid.contains(&q) {
            return q;
        }
    }
}

pub fn binomial(n: usize, k: usize) -> u64 {
    (0..k).fold(1u64, |acc, i| acc * (n - i) as u64 / (i + 1) as u64)
}

pub fn subsets(n: usize) -> impl Iterator<Item = Subset> {
    Subset::all(n)
}
