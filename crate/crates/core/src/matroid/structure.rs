use std::fmt;

use super::Matroid;
use crate::config;
use crate::{Error, Result, Subset};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RankAxiom {
    /// `0 <= rk(S) <= |S|`
    Bounded,
    /// `S1 ⊆ S2 ⇒ rk(S1) <= rk(S2)`
    Monotone,
    /// `rk(S1 ∪ S2) + rk(S1 ∩ S2) <= rk(S1) + rk(S2)`
    Submodular,
}

impl fmt::Display for RankAxiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            RankAxiom::Bounded => "boundedness",
            RankAxiom::Monotone => "monotonicity",
            RankAxiom::Submodular => "submodularity",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RankAxiomVerdict {
    Valid,
    Fails {
        axiom: RankAxiom,
        first: Subset,
        second: Subset,
    },
}

impl RankAxiomVerdict {
    pub fn is_valid(&self) -> bool {
        matches!(self, RankAxiomVerdict::Valid)
    }
}

/// Checks the matroid rank axioms on a table indexed by bitmask.
///
/// Monotonicity and submodularity are checked in their local forms
/// (`rk(S) <= rk(S+e)` and `rk(S+e+f) + rk(S) <= rk(S+e) + rk(S+f)`), which
/// are equivalent to the global statements. Witnesses are pairs `(S1, S2)`
/// violating the global form; for boundedness both entries are the offending
/// set.
pub fn check_rank_axioms(n: usize, ranks: &[i64]) -> RankAxiomVerdict {
    assert_eq!(ranks.len(), 1usize << n, "rank table size");
    for s in Subset::all(n) {
        let r = ranks[s.bits() as usize];
        if r < 0 || r > s.len() as i64 {
            return RankAxiomVerdict::Fails {
                axiom: RankAxiom::Bounded,
                first: s,
                second: s,
            };
        }
    }
    for s in Subset::all(n) {
        let r = ranks[s.bits() as usize];
        for e in s.complement(n).iter() {
            if ranks[s.with(e).bits() as usize] < r {
                return RankAxiomVerdict::Fails {
                    axiom: RankAxiom::Monotone,
                    first: s,
                    second: s.with(e),
                };
            }
        }
    }
    for s in Subset::all(n) {
        let r = ranks[s.bits() as usize];
        let outside: Vec<usize> = s.complement(n).iter().collect();
        for (a, &e) in outside.iter().enumerate() {
            for &f in &outside[a + 1..] {
                let lhs = ranks[s.with(e).with(f).bits() as usize] + r;
                let rhs = ranks[s.with(e).bits() as usize] + ranks[s.with(f).bits() as usize];
                if lhs > rhs {
                    return RankAxiomVerdict::Fails {
                        axiom: RankAxiom::Submodular,
                        first: s.with(e),
                        second: s.with(f),
                    };
                }
            }
        }
    }
    RankAxiomVerdict::Valid
}

impl Matroid {
    /// Rank table as signed integers, for the axiom checker.
    pub fn rank_values(&self) -> Result<Vec<i64>> {
        Ok(self.rank_table()?.iter().map(|&r| i64::from(r)).collect())
    }

    pub fn check_axioms(&self) -> Result<RankAxiomVerdict> {
        Ok(check_rank_axioms(self.ground_size(), &self.rank_values()?))
    }

    /// Minimal dependent sets, in increasing bitmask order.
    pub fn circuits(&self) -> Result<Vec<Subset>> {
        config::check_structure_enumerable(self.ground_size())?;
        self.rank_table()?;
        Ok(Subset::all(self.ground_size())
            .filter(|&s| {
                !self.is_independent(s) && s.iter().all(|e| self.is_independent(s.without(e)))
            })
            .collect())
    }

    /// Closed sets, in increasing bitmask order.
    pub fn flats(&self) -> Result<Vec<Subset>> {
        config::check_structure_enumerable(self.ground_size())?;
        self.rank_table()?;
        Ok(Subset::all(self.ground_size())
            .filter(|&s| {
                let r = self.rank(s);
                s.complement(self.ground_size())
                    .iter()
                    .all(|e| self.rank(s.with(e)) > r)
            })
            .collect())
    }

    /// Circuits of the dual matroid.
    pub fn cocircuits(&self) -> Result<Vec<Subset>> {
        self.dual().circuits()
    }

    pub fn loops(&self) -> Vec<usize> {
        (0..self.ground_size())
            .filter(|&i| self.rank(Subset::singleton(i)) == 0)
            .collect()
    }

    pub fn is_loop(&self, i: usize) -> bool {
        self.rank(Subset::singleton(i)) == 0
    }

    /// `{i, j}` is a circuit.
    pub fn are_parallel(&self, i: usize, j: usize) -> bool {
        i != j
            && !self.is_loop(i)
            && !self.is_loop(j)
            && self.rank(Subset::singleton(i).with(j)) == 1
    }

    /// Pairs `i < j` forming two-element circuits.
    pub fn parallel_pairs(&self) -> Vec<(usize, usize)> {
        let n = self.ground_size();
        (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .filter(|&(i, j)| self.are_parallel(i, j))
            .collect()
    }

    /// `rk(i) + rk(j) - rk({i, j})`: 1 exactly when `i` and `j` are parallel.
    pub fn parallel_indicator(&self, i: usize, j: usize) -> Result<u8> {
        let n = self.ground_size();
        for e in [i, j] {
            if e >= n {
                return Err(Error::ElementOutOfRange { element: e, n });
            }
        }
        if i == j {
            return Err(Error::InvalidParameter(
                "parallel indicator needs distinct elements".into(),
            ));
        }
        let ri = self.rank(Subset::singleton(i));
        let rj = self.rank(Subset::singleton(j));
        let rij = self.rank(Subset::singleton(i).with(j));
        Ok((ri + rj - rij) as u8)
    }

    pub fn independent_sets(&self) -> Result<Vec<Subset>> {
        self.rank_table()?;
        Ok(Subset::all(self.ground_size())
            .filter(|&s| self.is_independent(s))
            .collect())
    }

    pub fn spanning_sets(&self) -> Result<Vec<Subset>> {
        self.rank_table()?;
        Ok(Subset::all(self.ground_size())
            .filter(|&s| self.is_spanning(s))
            .collect())
    }
}
