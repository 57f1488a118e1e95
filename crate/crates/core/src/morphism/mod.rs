//! Morphisms of matroids.
//!
//! A map `f: E → F` between the ground sets of `M` and `N` is a morphism when
//! `rk_N(f(S2)) - rk_N(f(S1)) <= rk_M(S2) - rk_M(S1)` for all `S1 ⊆ S2`.
//! Equivalently, preimages of cocircuits of `N` are unions of cocircuits of
//! `M`, or preimages of flats of `N` are flats of `M`. All three conditions are
//! implemented separately so they can be cross-checked.

mod delta;
mod embedding;

use std::cmp::Ordering;
use std::fmt;

pub use delta::{check_delta_matroid, DeltaVerdict};
pub use embedding::{geometric_dual, Dart, GeometricDual, RotationSystem};

use crate::config;
use crate::matroid::image;
use crate::{Error, Matroid, Result, Subset};

/// A nested pair `S1 ⊆ S2` violating the morphism inequality.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct NestedPair {
    pub smaller: Subset,
    pub larger: Subset,
}

impl NestedPair {
    /// Ordering used to pick reproducible witnesses: by `|S2|`, then `S2`
    /// lexicographically, then larger `S1` first, then `S1` lexicographically.
    pub fn witness_cmp(&self, other: &NestedPair) -> Ordering {
        self.larger
            .shortlex_cmp(other.larger)
            .then_with(|| other.smaller.len().cmp(&self.smaller.len()))
            .then_with(|| self.smaller.lex_cmp(other.smaller))
    }
}

impl fmt::Display for NestedPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "S1 = {}, S2 = {}", self.smaller, self.larger)
    }
}

/// Which of the three equivalent morphism conditions failed, with a witness.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MorphismFailure {
    /// The rank inequality fails for a nested pair.
    RankInequality(NestedPair),
    /// The preimage of this cocircuit of the target is not a union of
    /// cocircuits of the source.
    Cocircuit { cocircuit: Subset, preimage: Subset },
    /// The preimage of this flat of the target is not a flat of the source.
    Flat { flat: Subset, preimage: Subset },
}

impl fmt::Display for MorphismFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MorphismFailure::RankInequality(p) => write!(f, "rank inequality fails at {p}"),
            MorphismFailure::Cocircuit {
                cocircuit,
                preimage,
            } => write!(
                f,
                "preimage {preimage} of cocircuit {cocircuit} is not a union of cocircuits"
            ),
            MorphismFailure::Flat { flat, preimage } => {
                write!(f, "preimage {preimage} of flat {flat} is not a flat")
            }
        }
    }
}

pub type MorphismVerdict = std::result::Result<(), MorphismFailure>;

/// A ground-set map between two matroids. Construction through
/// [`MatroidMorphism::new`] verifies the morphism condition;
/// [`MatroidMorphism::unchecked`] does not, so arbitrary maps can be tested.
#[derive(Clone, Debug)]
pub struct MatroidMorphism {
    source: Matroid,
    target: Matroid,
    map: Vec<usize>,
}

impl MatroidMorphism {
    pub fn unchecked(source: Matroid, target: Matroid, map: Vec<usize>) -> Result<Self> {
        if map.len() != source.ground_size() {
            return Err(Error::DimensionMismatch(format!(
                "map has {} entries for a ground set of size {}",
                map.len(),
                source.ground_size()
            )));
        }
        if let Some(&bad) = map.iter().find(|&&t| t >= target.ground_size()) {
            return Err(Error::ElementOutOfRange {
                element: bad,
                n: target.ground_size(),
            });
        }
        Ok(MatroidMorphism {
            source,
            target,
            map,
        })
    }

    /// Builds the morphism and checks the rank inequality.
    pub fn new(source: Matroid, target: Matroid, map: Vec<usize>) -> Result<Self> {
        let f = Self::unchecked(source, target, map)?;
        match f.check_covering_pairs()? {
            Ok(()) => Ok(f),
            Err(MorphismFailure::RankInequality(witness)) => Err(Error::NotAMorphism { witness }),
            Err(_) => unreachable!("covering check only reports rank witnesses"),
        }
    }

    /// The identity map `M → N` on a common ground set.
    pub fn identity(source: Matroid, target: Matroid) -> Result<Self> {
        if source.ground_size() != target.ground_size() {
            return Err(Error::GroundSetMismatch {
                left: source.ground_size(),
                right: target.ground_size(),
            });
        }
        let map = (0..source.ground_size()).collect();
        Self::unchecked(source, target, map)
    }

    pub fn source(&self) -> &Matroid {
        &self.source
    }

    pub fn target(&self) -> &Matroid {
        &self.target
    }

    pub fn map(&self) -> &[usize] {
        &self.map
    }

    pub fn image(&self, s: Subset) -> Subset {
        image(&self.map, s)
    }

    /// The induced matroid `f⁻¹(N)` on the source ground set.
    pub fn induced_matroid(&self) -> Matroid {
        Matroid::induced(self.map.clone(), &self.target).expect("map validated on construction")
    }

    fn prepare_tables(&self) -> Result<()> {
        let n = self.source.ground_size();
        config::check_enumerable(n)?;
        self.source.rank_table()?;
        if self.target.ground_size() <= config::max_n() {
            self.target.rank_table()?;
        }
        Ok(())
    }

    /// Rank inequality over pairs `S ⊂ S + e`. Sufficient by telescoping;
    /// `O(n 2^n)`.
    pub fn check_covering_pairs(&self) -> Result<MorphismVerdict> {
        self.prepare_tables()?;
        let n = self.source.ground_size();
        let mut best: Option<NestedPair> = None;
        for s2 in Subset::all(n) {
            if let Some(b) = &best {
                if s2.len() > b.larger.len() {
                    continue;
                }
            }
            let rm2 = self.source.rank(s2) as i64;
            let rn2 = self.target.rank(self.image(s2)) as i64;
            for e in s2.iter() {
                let s1 = s2.without(e);
                let dm = rm2 - self.source.rank(s1) as i64;
                let dn = rn2 - self.target.rank(self.image(s1)) as i64;
                if dn > dm {
                    let cand = NestedPair {
                        smaller: s1,
                        larger: s2,
                    };
                    if best.is_none_or(|b| cand.witness_cmp(&b) == Ordering::Less) {
                        best = Some(cand);
                    }
                }
            }
        }
        Ok(match best {
            None => Ok(()),
            Some(w) => Err(MorphismFailure::RankInequality(w)),
        })
    }

    /// Rank inequality over every nested pair; `O(3^n)`.
    pub fn check_all_nested_pairs(&self) -> Result<MorphismVerdict> {
        self.prepare_tables()?;
        let n = self.source.ground_size();
        let mut best: Option<NestedPair> = None;
        for s2 in Subset::all(n) {
            let rm2 = self.source.rank(s2) as i64;
            let rn2 = self.target.rank(self.image(s2)) as i64;
            for s1 in s2.subsets() {
                let dm = rm2 - self.source.rank(s1) as i64;
                let dn = rn2 - self.target.rank(self.image(s1)) as i64;
                if dn > dm {
                    let cand = NestedPair {
                        smaller: s1,
                        larger: s2,
                    };
                    if best.is_none_or(|b| cand.witness_cmp(&b) == Ordering::Less) {
                        best = Some(cand);
                    }
                }
            }
        }
        Ok(match best {
            None => Ok(()),
            Some(w) => Err(MorphismFailure::RankInequality(w)),
        })
    }

    fn preimage(&self, t: Subset) -> Subset {
        self.map
            .iter()
            .enumerate()
            .filter(|&(_, &y)| t.contains(y))
            .map(|(x, _)| x)
            .collect()
    }

    /// Preimages of cocircuits of `N` are unions of cocircuits of `M`.
    pub fn check_cocircuit_condition(&self) -> Result<MorphismVerdict> {
        let source_cocircuits = self.source.cocircuits()?;
        for t in self.target.cocircuits()? {
            let pre = self.preimage(t);
            let covered = source_cocircuits
                .iter()
                .filter(|c| c.is_subset_of(pre))
                .fold(Subset::EMPTY, |acc, &c| acc | c);
            if covered != pre {
                return Ok(Err(MorphismFailure::Cocircuit {
                    cocircuit: t,
                    preimage: pre,
                }));
            }
        }
        Ok(Ok(()))
    }

    /// Preimages of flats of `N` are flats of `M`.
    pub fn check_flat_condition(&self) -> Result<MorphismVerdict> {
        config::check_structure_enumerable(self.source.ground_size())?;
        self.source.rank_table()?;
        for t in self.target.flats()? {
            let pre = self.preimage(t);
            if self.source.closure(pre) != pre {
                return Ok(Err(MorphismFailure::Flat {
                    flat: t,
                    preimage: pre,
                }));
            }
        }
        Ok(Ok(()))
    }

    /// Evaluates all three conditions and reports each verdict.
    pub fn check_all_conditions(&self) -> Result<ConditionReport> {
        Ok(ConditionReport {
            rank_inequality: self.check_all_nested_pairs()?,
            cocircuits: self.check_cocircuit_condition()?,
            flats: self.check_flat_condition()?,
        })
    }

    /// The default morphism test (covering pairs).
    pub fn is_morphism(&self) -> Result<bool> {
        Ok(self.check_covering_pairs()?.is_ok())
    }

    /// `S` is a basis of `f` when it is independent in `M` and `f(S)` spans
    /// `N`. Returned in increasing bitmask order.
    pub fn bases(&self) -> Result<Vec<Subset>> {
        self.prepare_tables()?;
        let r = self.target.full_rank();
        Ok(Subset::all(self.source.ground_size())
            .filter(|&s| self.source.is_independent(s) && self.target.rank(self.image(s)) == r)
            .collect())
    }

    /// `b_k` = number of bases of `f` of cardinality `k`, for `k = 0..=n`.
    pub fn b_vector(&self) -> Result<Vec<u64>> {
        self.prepare_tables()?;
        let n = self.source.ground_size();
        let r = self.target.full_rank();
        let mut counts = vec![0u64; n + 1];
        for s in Subset::all(n) {
            if self.source.is_independent(s) && self.target.rank(self.image(s)) == r {
                counts[s.len()] += 1;
            }
        }
        Ok(counts)
    }

    /// `f(E)` spans the target, i.e. the morphism has at least one basis.
    pub fn image_spans_target(&self) -> bool {
        self.target.is_spanning(self.image(self.source.ground()))
    }
}

/// Verdicts of the three morphism conditions on one map.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConditionReport {
    pub rank_inequality: MorphismVerdict,
    pub cocircuits: MorphismVerdict,
    pub flats: MorphismVerdict,
}

impl ConditionReport {
    pub fn agree(&self) -> bool {
        let v = self.rank_inequality.is_ok();
        self.cocircuits.is_ok() == v && self.flats.is_ok() == v
    }

    pub fn is_morphism(&self) -> bool {
        self.rank_inequality.is_ok()
    }
}

/// Whether `N` is a quotient of `M` (the identity is a morphism `M → N`).
pub fn is_quotient(m: &Matroid, n: &Matroid) -> Result<MorphismVerdict> {
    MatroidMorphism::identity(m.clone(), n.clone())?.check_covering_pairs()
}

/// Bases of the quotient `M ↠ N`: independent in `M`, spanning in `N`.
pub fn quotient_bases(m: &Matroid, n: &Matroid) -> Result<Vec<Subset>> {
    MatroidMorphism::identity(m.clone(), n.clone())?.bases()
}

/// The rank `k` Higgs lift of `N` toward `M`: the matroid whose bases are the
/// cardinality-`k` bases of `M ↠ N`.
pub fn higgs_lift(m: &Matroid, n: &Matroid, k: usize) -> Result<Matroid> {
    if let Err(MorphismFailure::RankInequality(witness)) = is_quotient(m, n)? {
        return Err(Error::NotAMorphism { witness });
    }
    let slice: Vec<Subset> = quotient_bases(m, n)?
        .into_iter()
        .filter(|s| s.len() == k)
        .collect();
    if slice.is_empty() {
        return Err(Error::EmptyHiggsSlice { k });
    }
    Matroid::from_bases(m.ground_size(), slice)
}
