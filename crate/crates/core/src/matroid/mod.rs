//! Matroids given by rank oracles.
//!
//! A [`Matroid`] is an immutable, cheaply clonable handle. Its rank function
//! comes from one of the concrete backings (basis list, graph, matrix over a
//! prime field, uniform, explicit table) or from a derived form (dual,
//! deletion, contraction, truncation, induced matroid). Rank tables over
//! `2^[n]` are built lazily on first use and shared between threads.

mod graph;
mod linear;
mod structure;

use std::collections::HashSet;
use std::fmt;
use std::sync::{Arc, OnceLock};

pub use graph::{Graph, MAX_VERTICES};
pub use linear::{is_prime, LinearRep};
pub use structure::{check_rank_axioms, RankAxiom, RankAxiomVerdict};

use crate::config;
use crate::subset::MAX_GROUND_SET;
use crate::{Error, Result, Subset};

#[derive(Clone)]
pub struct Matroid(Arc<Inner>);

struct Inner {
    n: usize,
    backing: Backing,
    table: OnceLock<Box<[u8]>>,
}

/// How a matroid's rank function is computed.
#[derive(Clone)]
pub enum Backing {
    Bases(Vec<Subset>),
    Graphic(Graph),
    Linear(LinearRep),
    Uniform(usize),
    RankTable,
    Dual(Matroid),
    Delete(Matroid, usize),
    Contract(Matroid, usize),
    Truncate(Matroid, usize),
    Induced { map: Vec<usize>, target: Matroid },
}

fn check_ground(n: usize) -> Result<()> {
    if n > MAX_GROUND_SET {
        return Err(Error::GroundSetTooLarge {
            n,
            max: MAX_GROUND_SET,
        });
    }
    Ok(())
}

impl Matroid {
    fn from_backing(n: usize, backing: Backing) -> Matroid {
        Matroid(Arc::new(Inner {
            n,
            backing,
            table: OnceLock::new(),
        }))
    }

    /// The uniform matroid `U_{r,n}`.
    pub fn uniform(n: usize, r: usize) -> Result<Matroid> {
        check_ground(n)?;
        if r > n {
            return Err(Error::InvalidParameter(format!(
                "uniform rank {r} exceeds ground set size {n}"
            )));
        }
        Ok(Matroid::from_backing(n, Backing::Uniform(r)))
    }

    /// Builds a matroid from its bases, validating the basis exchange axiom.
    pub fn from_bases(n: usize, bases: Vec<Subset>) -> Result<Matroid> {
        check_ground(n)?;
        if bases.is_empty() {
            return Err(Error::EmptyBasisList);
        }
        let full = Subset::full(n);
        for b in &bases {
            if let Some(e) = (*b - full).iter().next() {
                return Err(Error::ElementOutOfRange { element: e, n });
            }
        }
        let mut bases = bases;
        bases.sort_by(|a, b| a.shortlex_cmp(*b));
        bases.dedup();
        let members: HashSet<Subset> = bases.iter().copied().collect();
        for &b1 in &bases {
            for &b2 in &bases {
                for i in (b1 - b2).iter() {
                    let ok = (b2 - b1)
                        .iter()
                        .any(|j| members.contains(&b1.without(i).with(j)));
                    if !ok {
                        return Err(Error::ExchangeAxiomViolation {
                            first: b1,
                            second: b2,
                            element: i,
                        });
                    }
                }
            }
        }
        Ok(Matroid::from_backing(n, Backing::Bases(bases)))
    }

    /// The cycle matroid of a graph; edge `e` is element `e`.
    pub fn cycle_matroid(g: Graph) -> Result<Matroid> {
        check_ground(g.edge_count())?;
        Ok(Matroid::from_backing(g.edge_count(), Backing::Graphic(g)))
    }

    /// The column matroid of a matrix over `GF(p)`, given by its rows.
    pub fn linear(p: u64, rows: &[Vec<i64>]) -> Result<Matroid> {
        let rep = LinearRep::from_rows(p, rows)?;
        check_ground(rep.column_count())?;
        Ok(Matroid::from_backing(
            rep.column_count(),
            Backing::Linear(rep),
        ))
    }

    /// The column matroid of an `r x n` matrix; `rows` may be empty.
    pub fn linear_with_columns(p: u64, n: usize, rows: &[Vec<i64>]) -> Result<Matroid> {
        check_ground(n)?;
        let rep = LinearRep::with_columns(p, n, rows)?;
        Ok(Matroid::from_backing(n, Backing::Linear(rep)))
    }

    /// A matroid from an explicit rank table indexed by subset bitmask.
    /// The table is checked against the rank axioms.
    pub fn from_rank_table(n: usize, ranks: Vec<u8>) -> Result<Matroid> {
        check_ground(n)?;
        config::check_enumerable(n)?;
        if ranks.len() != 1usize << n {
            return Err(Error::DimensionMismatch(format!(
                "rank table has {} entries, expected {}",
                ranks.len(),
                1usize << n
            )));
        }
        let values: Vec<i64> = ranks.iter().map(|&r| i64::from(r)).collect();
        if let RankAxiomVerdict::Fails {
            axiom,
            first,
            second,
        } = check_rank_axioms(n, &values)
        {
            return Err(Error::InvalidParameter(format!(
                "rank table violates {axiom} at {first}, {second}"
            )));
        }
        let m = Matroid::from_backing(n, Backing::RankTable);
        let _ = m.0.table.set(ranks.into_boxed_slice());
        Ok(m)
    }

    /// The Fano plane as the column matroid of all nonzero vectors of
    /// `GF(2)^3`; column `j` is the binary expansion of `j + 1`.
    pub fn fano() -> Matroid {
        let rows: Vec<Vec<i64>> = (0..3)
            .map(|bit| (1..=7i64).map(|v| (v >> bit) & 1).collect())
            .collect();
        Matroid::linear(2, &rows).expect("valid GF(2) matrix")
    }

    pub fn ground_size(&self) -> usize {
        self.0.n
    }

    pub fn backing(&self) -> &Backing {
        &self.0.backing
    }

    pub fn ground(&self) -> Subset {
        Subset::full(self.0.n)
    }

    /// Rank of `s`. Panics in debug builds when `s` leaves the ground set;
    /// see [`Matroid::checked_rank`].
    #[inline]
    pub fn rank(&self, s: Subset) -> usize {
        debug_assert!(s.is_subset_of(self.ground()), "{s} outside [{}]", self.0.n);
        if let Some(t) = self.0.table.get() {
            return usize::from(t[s.bits() as usize]);
        }
        self.rank_uncached(s)
    }

    pub fn checked_rank(&self, s: Subset) -> Result<usize> {
        if let Some(e) = (s - self.ground()).iter().next() {
            return Err(Error::ElementOutOfRange {
                element: e,
                n: self.0.n,
            });
        }
        Ok(self.rank(s))
    }

    /// Rank of the whole ground set.
    pub fn full_rank(&self) -> usize {
        self.rank(self.ground())
    }

    fn rank_uncached(&self, s: Subset) -> usize {
        match &self.0.backing {
            Backing::Bases(bases) => bases.iter().map(|&b| (b & s).len()).max().unwrap_or(0),
            Backing::Graphic(g) => g.rank(s),
            Backing::Linear(rep) => rep.rank(s),
            Backing::Uniform(r) => s.len().min(*r),
            Backing::RankTable => unreachable!("rank tables are always materialised"),
            Backing::Dual(m) => s.len() + m.rank(s.complement(self.0.n)) - m.full_rank(),
            Backing::Delete(m, i) => m.rank(s.spread_at(*i)),
            Backing::Contract(m, i) => {
                m.rank(s.spread_at(*i).with(*i)) - m.rank(Subset::singleton(*i))
            }
            Backing::Truncate(m, k) => m.rank(s).min(*k),
            Backing::Induced { map, target } => target.rank(image(map, s)),
        }
    }

    /// Materialises (once) and returns the rank table indexed by bitmask.
    pub fn rank_table(&self) -> Result<&[u8]> {
        config::check_enumerable(self.0.n)?;
        if let Some(t) = self.0.table.get() {
            return Ok(t);
        }
        match &self.0.backing {
            Backing::Dual(m)
            | Backing::Delete(m, _)
            | Backing::Contract(m, _)
            | Backing::Truncate(m, _) => {
                let _ = m.rank_table();
            }
            Backing::Induced { target, .. } => {
                let _ = target.rank_table();
            }
            _ => {}
        }
        let table: Box<[u8]> = match &self.0.backing {
            Backing::Dual(m) if m.0.table.get().is_some() => {
                let inner = m.0.table.get().unwrap();
                let full = (1usize << self.0.n) - 1;
                let r = usize::from(inner[full]);
                (0..=full)
                    .map(|s| (s.count_ones() as usize + usize::from(inner[full ^ s]) - r) as u8)
                    .collect()
            }
            _ => Subset::all(self.0.n)
                .map(|s| self.rank_uncached(s) as u8)
                .collect(),
        };
        Ok(self.0.table.get_or_init(|| table))
    }

    /// The dual matroid, `rk*(S) = |S| + rk(E \ S) - rk(E)`.
    pub fn dual(&self) -> Matroid {
        if let Backing::Dual(m) = &self.0.backing {
            return m.clone();
        }
        Matroid::from_backing(self.0.n, Backing::Dual(self.clone()))
    }

    fn check_element(&self, i: usize) -> Result<()> {
        if i >= self.0.n {
            return Err(Error::ElementOutOfRange {
                element: i,
                n: self.0.n,
            });
        }
        Ok(())
    }

    /// Deletes element `i`; the remaining elements are relabelled in order.
    pub fn delete(&self, i: usize) -> Result<Matroid> {
        self.check_element(i)?;
        Ok(Matroid::from_backing(
            self.0.n - 1,
            Backing::Delete(self.clone(), i),
        ))
    }

    /// Contracts element `i`; the remaining elements are relabelled in order.
    pub fn contract(&self, i: usize) -> Result<Matroid> {
        self.check_element(i)?;
        Ok(Matroid::from_backing(
            self.0.n - 1,
            Backing::Contract(self.clone(), i),
        ))
    }

    /// The truncation to rank `k`, `rk(S) = min(rk_M(S), k)`.
    pub fn truncate(&self, k: usize) -> Matroid {
        Matroid::from_backing(self.0.n, Backing::Truncate(self.clone(), k))
    }

    /// The induced matroid `f⁻¹(N)` on `[map.len()]` with
    /// `rk(S) = rk_N(f(S))`.
    pub fn induced(map: Vec<usize>, target: &Matroid) -> Result<Matroid> {
        check_ground(map.len())?;
        if let Some(&bad) = map.iter().find(|&&t| t >= target.ground_size()) {
            return Err(Error::ElementOutOfRange {
                element: bad,
                n: target.ground_size(),
            });
        }
        Ok(Matroid::from_backing(
            map.len(),
            Backing::Induced {
                map,
                target: target.clone(),
            },
        ))
    }

    /// Materialised copy backed by its rank table alone.
    pub fn to_table_backed(&self) -> Result<Matroid> {
        let table = self.rank_table()?.to_vec();
        let m = Matroid::from_backing(self.0.n, Backing::RankTable);
        let _ = m.0.table.set(table.into_boxed_slice());
        Ok(m)
    }

    /// Equality of rank functions.
    pub fn same_rank_function(&self, other: &Matroid) -> Result<bool> {
        if self.0.n != other.0.n {
            return Ok(false);
        }
        Ok(self.rank_table()? == other.rank_table()?)
    }

    pub fn is_independent(&self, s: Subset) -> bool {
        self.rank(s) == s.len()
    }

    pub fn is_spanning(&self, s: Subset) -> bool {
        self.rank(s) == self.full_rank()
    }

    pub fn is_basis(&self, s: Subset) -> bool {
        s.len() == self.full_rank() && self.is_independent(s)
    }

    /// All bases, in increasing bitmask order.
    pub fn bases(&self) -> Result<Vec<Subset>> {
        if let Backing::Bases(b) = &self.0.backing {
            let mut out = b.clone();
            out.sort();
            return Ok(out);
        }
        self.rank_table()?;
        let r = self.full_rank();
        Ok(Subset::all(self.0.n)
            .filter(|s| s.len() == r && self.is_independent(*s))
            .collect())
    }

    /// Closure of `s`.
    pub fn closure(&self, s: Subset) -> Subset {
        let r = self.rank(s);
        (self.ground() - s)
            .iter()
            .filter(|&e| self.rank(s.with(e)) == r)
            .fold(s, Subset::with)
    }
}

/// `f(S)` for a map given as a lookup table.
#[inline]
pub fn image(map: &[usize], s: Subset) -> Subset {
    s.iter().fold(Subset::EMPTY, |acc, i| acc.with(map[i]))
}

impl fmt::Debug for Matroid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let kind = match &self.0.backing {
            Backing::Bases(_) => "bases",
            Backing::Graphic(_) => "graphic",
            Backing::Linear(_) => "linear",
            Backing::Uniform(_) => "uniform",
            Backing::RankTable => "table",
            Backing::Dual(_) => "dual",
            Backing::Delete(..) => "deletion",
            Backing::Contract(..) => "contraction",
            Backing::Truncate(..) => "truncation",
            Backing::Induced { .. } => "induced",
        };
        write!(f, "Matroid({kind}, n={})", self.0.n)
    }
}
