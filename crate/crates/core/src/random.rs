//! Seeded generators for random matroids, quotients, flags and morphisms.
//!
//! Every generator takes an explicit `ChaCha8Rng`, so a seed fixes the whole
//! instance stream. The constructions produce valid objects by construction:
//! quotients come from row-space projections or truncations, morphisms from
//! linear projections, graph homomorphisms or terminal maps.

use rand::seq::IndexedRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::rational::{self, Rational};
use crate::{FlagMatroid, Graph, Matroid, MatroidMorphism};

pub const DEFAULT_SEED: u64 = 0x6d61_746d_6f72;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn random_rows<R: Rng>(rng: &mut R, rows: usize, cols: usize, p: u64) -> Vec<Vec<i64>> {
    (0..rows)
        .map(|_| (0..cols).map(|_| rng.random_range(0..p) as i64).collect())
        .collect()
}

/// Column matroid of a random `rows x n` matrix over GF(p).
pub fn linear_matroid<R: Rng>(rng: &mut R, n: usize, rows: usize, p: u64) -> Matroid {
    Matroid::linear_with_columns(p, n, &random_rows(rng, rows, n, p))
        .expect("valid prime and shape")
}

pub fn uniform_matroid<R: Rng>(rng: &mut R, n: usize) -> Matroid {
    Matroid::uniform(n, rng.random_range(0..=n)).expect("rank within range")
}

/// Cycle matroid of a random multigraph with `n` edges; loops allowed.
pub fn graphic_matroid<R: Rng>(rng: &mut R, n: usize) -> Matroid {
    Matroid::cycle_matroid(random_graph(rng, n)).expect("valid graph")
}

pub fn random_graph<R: Rng>(rng: &mut R, edges: usize) -> Graph {
    let vertices = rng.random_range(1..=edges.max(1) + 1);
    let list = (0..edges)
        .map(|_| (rng.random_range(0..vertices), rng.random_range(0..vertices)))
        .collect();
    Graph::new(vertices, list).expect("endpoints in range")
}

/// A matroid of one of the concrete kinds, rank up to `n`.
pub fn matroid<R: Rng>(rng: &mut R, n: usize) -> Matroid {
    match rng.random_range(0..4) {
        0 => {
            let rows = rng.random_range(0..=n.min(5));
            linear_matroid(rng, n, rows, 2)
        }
        1 => {
            let rows = rng.random_range(0..=n.min(5));
            linear_matroid(rng, n, rows, 3)
        }
        2 => uniform_matroid(rng, n),
        _ => graphic_matroid(rng, n),
    }
}

/// A quotient `N` of `M`. Linear matroids are projected along a random
/// linear map of their row space; other kinds are truncated.
pub fn quotient<R: Rng>(rng: &mut R, m: &Matroid) -> Matroid {
    if let crate::matroid::Backing::Linear(rep) = m.backing() {
        if rng.random_bool(0.7) {
            let p = rep.prime();
            let k = rng.random_range(0..=rep.row_count());
            let b = random_rows(rng, k, rep.row_count(), p);
            let a = rep.rows();
            let prod: Vec<Vec<i64>> = b
                .iter()
                .map(|brow| {
                    (0..rep.column_count())
                        .map(|j| {
                            let s: i128 = brow
                                .iter()
                                .zip(&a)
                                .map(|(&x, arow)| i128::from(x) * i128::from(arow[j]))
                                .sum();
                            s.rem_euclid(i128::from(p)) as i64
                        })
                        .collect()
                })
                .collect();
            return Matroid::linear_with_columns(p, rep.column_count(), &prod).expect("same prime");
        }
    }
    let r = m.full_rank();
    m.truncate(rng.random_range(0..=r))
}

/// A flag `(M_1, .., M_l)` built top-down from a random `M_l`.
pub fn flag<R: Rng>(rng: &mut R, n: usize, len: usize) -> FlagMatroid {
    let mut chain = vec![matroid(rng, n)];
    for _ in 1..len {
        let next = quotient(rng, chain.last().unwrap());
        chain.push(next);
    }
    chain.reverse();
    FlagMatroid::unchecked(chain).expect("common ground set")
}

/// A flag built only from truncations of one random matroid.
pub fn truncation_flag<R: Rng>(rng: &mut R, n: usize, len: usize) -> FlagMatroid {
    let top = matroid(rng, n);
    let r = top.full_rank();
    let mut ranks: Vec<usize> = (0..len).map(|_| rng.random_range(0..=r)).collect();
    ranks.sort_unstable();
    let chain = ranks.into_iter().map(|k| top.truncate(k)).collect();
    FlagMatroid::unchecked(chain).expect("common ground set")
}

pub fn map<R: Rng>(rng: &mut R, n: usize, m: usize) -> Vec<usize> {
    (0..n).map(|_| rng.random_range(0..m)).collect()
}

/// `M` with columns `λ_i c_{f(i)}` stacked over random rows, `N` the column
/// matroid of `C`; the projection to the top block makes `f` a morphism.
pub fn linear_morphism<R: Rng>(rng: &mut R, n: usize, m: usize, p: u64) -> MatroidMorphism {
    let top = rng.random_range(0..=m.min(4));
    let extra = rng.random_range(0..=3);
    let c = random_rows(rng, top, m, p);
    let f = map(rng, n, m);
    let mut a: Vec<Vec<i64>> = vec![vec![0; n]; top + extra];
    for i in 0..n {
        let lambda = rng.random_range(1..p) as i64;
        for r in 0..top {
            a[r][i] = (lambda * c[r][f[i]]) % p as i64;
        }
        for row in a.iter_mut().skip(top) {
            row[i] = rng.random_range(0..p) as i64;
        }
    }
    let source = Matroid::linear_with_columns(p, n, &a).expect("valid");
    let target = Matroid::linear_with_columns(p, m, &c).expect("valid");
    MatroidMorphism::unchecked(source, target, f).expect("map in range")
}

/// A random graph `G` with `n` edges, a random vertex map into `H`, where `H`
/// holds the image edges plus a few extra edges.
pub fn graph_homomorphism<R: Rng>(rng: &mut R, n: usize) -> MatroidMorphism {
    let g = random_graph(rng, n);
    let hv = rng.random_range(1..=g.vertex_count());
    let phi: Vec<usize> = (0..g.vertex_count())
        .map(|_| rng.random_range(0..hv))
        .collect();
    let mut h_edges: Vec<(usize, usize)> = Vec::new();
    let mut f = Vec::with_capacity(n);
    for &(u, v) in g.edges() {
        let (a, b) = (phi[u], phi[v]);
        let key = (a.min(b), a.max(b));
        let idx = match h_edges.iter().position(|&e| e == key) {
            Some(i) => i,
            None => {
                h_edges.push(key);
                h_edges.len() - 1
            }
        };
        f.push(idx);
    }
    for _ in 0..rng.random_range(0..=2) {
        h_edges.push((rng.random_range(0..hv), rng.random_range(0..hv)));
    }
    let source = Matroid::cycle_matroid(g).expect("valid");
    let target = Matroid::cycle_matroid(Graph::new(hv, h_edges).expect("valid")).expect("valid");
    MatroidMorphism::unchecked(source, target, f).expect("map in range")
}

/// A random morphism with source ground set of size `n`.
pub fn morphism<R: Rng>(rng: &mut R, n: usize) -> MatroidMorphism {
    match rng.random_range(0..5) {
        0 => {
            let m = rng.random_range(1..=n.max(1));
            linear_morphism(rng, n, m, 2)
        }
        1 => {
            let m = rng.random_range(1..=n.max(1));
            linear_morphism(rng, n, m, 3)
        }
        2 => graph_homomorphism(rng, n),
        3 => {
            let m = matroid(rng, n);
            let q = quotient(rng, &m);
            MatroidMorphism::identity(m, q).expect("same ground set")
        }
        _ => {
            let m = matroid(rng, n);
            let terminal = Matroid::uniform(1, 0).expect("valid");
            MatroidMorphism::unchecked(m, terminal, vec![0; n]).expect("valid")
        }
    }
}

/// A rational `a/den` with `a` uniform in `lo..=hi`.
pub fn rational_in<R: Rng>(rng: &mut R, lo: i64, hi: i64, den: i64) -> Rational {
    rational::ratio(rng.random_range(lo..=hi), den)
}

/// A nonzero rational with small numerator and denominator.
pub fn nonzero_rational<R: Rng>(rng: &mut R) -> Rational {
    let num = *[-5i64, -3, -2, -1, 1, 2, 3, 4, 7].choose(rng).unwrap();
    let den = rng.random_range(1..=6);
    rational::ratio(num, den)
}

/// A rational in `(0, 1]` with denominator at most `max_den`.
pub fn unit_rational<R: Rng>(rng: &mut R, max_den: i64) -> Rational {
    let den = rng.random_range(1..=max_den);
    rational::ratio(rng.random_range(1..=den), den)
}
