use crate::morphism::{is_quotient, MorphismFailure};
use crate::{Error, Matroid, Result};

/// A sequence `(M_1, .., M_l)` on one ground set with each `M_k` a quotient
/// of `M_{k+1}`. Equal neighbours are allowed.
#[derive(Clone, Debug)]
pub struct FlagMatroid {
    constituents: Vec<Matroid>,
}

impl FlagMatroid {
    /// Validates the quotient chain; on failure reports the first index `k`
    /// (0-based) with `M_k` not a quotient of `M_{k+1}`.
    pub fn new(constituents: Vec<Matroid>) -> Result<FlagMatroid> {
        let flag = FlagMatroid::unchecked(constituents)?;
        flag.validate()?;
        Ok(flag)
    }

    /// Checks only that the constituents share a ground set.
    pub fn unchecked(constituents: Vec<Matroid>) -> Result<FlagMatroid> {
        let Some(first) = constituents.first() else {
            return Err(Error::InvalidParameter(
                "a flag matroid needs at least one constituent".into(),
            ));
        };
        let n = first.ground_size();
        if let Some(m) = constituents.iter().find(|m| m.ground_size() != n) {
            return Err(Error::GroundSetMismatch {
                left: n,
                right: m.ground_size(),
            });
        }
        Ok(FlagMatroid { constituents })
    }

    pub fn single(m: Matroid) -> FlagMatroid {
        FlagMatroid {
            constituents: vec![m],
        }
    }

    pub fn validate(&self) -> Result<()> {
        for (k, pair) in self.constituents.windows(2).enumerate() {
            if let Err(MorphismFailure::RankInequality(witness)) = is_quotient(&pair[1], &pair[0])?
            {
                return Err(Error::NotAFlag { index: k, witness });
            }
        }
        Ok(())
    }

    pub fn constituents(&self) -> &[Matroid] {
        &self.constituents
    }

    pub fn len(&self) -> usize {
        self.constituents.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn ground_size(&self) -> usize {
        self.constituents[0].ground_size()
    }

    /// Constituent-wise deletion.
    pub fn delete(&self, i: usize) -> Result<FlagMatroid> {
        let constituents = self
            .constituents
            .iter()
            .map(|m| m.delete(i))
            .collect::<Result<_>>()?;
        Ok(FlagMatroid { constituents })
    }

    /// Constituent-wise contraction.
    pub fn contract(&self, i: usize) -> Result<FlagMatroid> {
        let constituents = self
            .constituents
            .iter()
            .map(|m| m.contract(i))
            .collect::<Result<_>>()?;
        Ok(FlagMatroid { constituents })
    }

    /// Rank-table equality of every constituent.
    pub fn same_as(&self, other: &FlagMatroid) -> Result<bool> {
        if self.len() != other.len() {
            return Ok(false);
        }
        for (a, b) in self.constituents.iter().zip(&other.constituents) {
            if !a.same_rank_function(b)? {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::morphism::NestedPair;
    use crate::Subset;

    #[test]
    fn equal_neighbours_and_truncation_chains_are_flags() {
        let m = Matroid::fano();
        assert!(FlagMatroid::new(vec![m.clone(), m.clone()]).is_ok());
        let chain = vec![m.truncate(1), m.truncate(2), m.clone()];
        assert!(FlagMatroid::new(chain).is_ok());
    }

    #[test]
    fn wrong_order_is_rejected_with_witness() {
        let u23 = Matroid::uniform(3, 2).unwrap();
        // rank one, element 1 is the only non-loop
        let n = Matroid::from_bases(3, vec![Subset::singleton(0)]).unwrap();
        let err = FlagMatroid::new(vec![n, u23]).unwrap_err();
        match err {
            Error::NotAFlag { index, witness } => {
                assert_eq!(index, 0);
                // {2,3} spans U_{2,3}, but adding 1 still raises the rank of N
                assert_eq!(
                    witness,
                    NestedPair {
                        smaller: Subset::from_elements([1, 2]),
                        larger: Subset::full(3),
                    }
                );
            }
            other => panic!("unexpected {other}"),
        }
    }

    #[test]
    fn single_constituent_minors_match_matroid_minors() {
        let m = Matroid::uniform(4, 2).unwrap();
        let f = FlagMatroid::single(m.clone());
        let d = f.delete(1).unwrap();
        assert!(d.constituents()[0]
            .same_rank_function(&m.delete(1).unwrap())
            .unwrap());
        let c = f.contract(1).unwrap();
        assert!(c.constituents()[0]
            .same_rank_function(&m.contract(1).unwrap())
            .unwrap());
    }

    #[test]
    fn mismatched_ground_sets() {
        let a = Matroid::uniform(3, 1).unwrap();
        let b = Matroid::uniform(4, 1).unwrap();
        assert!(matches!(
            FlagMatroid::new(vec![a, b]),
            Err(Error::GroundSetMismatch { .. })
        ));
        assert!(FlagMatroid::new(vec![]).is_err());
    }
}
