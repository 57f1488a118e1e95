use std::collections::HashSet;

use crate::config;
use crate::{Error, Result, Subset};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DeltaVerdict {
    Valid,
    /// `lower ⊆ middle ⊆ upper` with `lower`, `upper` feasible but `middle` not.
    Interval {
        lower: Subset,
        upper: Subset,
        middle: Subset,
    },
    /// No `j ∈ first △ second` makes `first △ {element, j}` feasible.
    Exchange {
        first: Subset,
        second: Subset,
        element: usize,
    },
}

impl DeltaVerdict {
    pub fn is_valid(&self) -> bool {
        matches!(self, DeltaVerdict::Valid)
    }
}

/// Checks the two properties characterising feasible sets of a saturated
/// delta-matroid: the interval property and symmetric exchange (where
/// `j = i` is allowed).
pub fn check_delta_matroid(n: usize, family: &[Subset]) -> Result<DeltaVerdict> {
    config::check_enumerable(n)?;
    if family.is_empty() {
        return Err(Error::EmptyFamily);
    }
    let full = Subset::full(n);
    for s in family {
        if let Some(e) = (*s - full).iter().next() {
            return Err(Error::ElementOutOfRange { element: e, n });
        }
    }
    let mut sets: Vec<Subset> = family.to_vec();
    sets.sort();
    sets.dedup();
    let members: HashSet<Subset> = sets.iter().copied().collect();

    for &lower in &sets {
        for &upper in &sets {
            if lower == upper || !lower.is_subset_of(upper) {
                continue;
            }
            let free = upper - lower;
            if let Some(middle) = free
                .subsets()
                .map(|t| lower | t)
                .find(|m| !members.contains(m))
            {
                return Ok(DeltaVerdict::Interval {
                    lower,
                    upper,
                    middle,
                });
            }
        }
    }

    for &first in &sets {
        for &second in &sets {
            let diff = first ^ second;
            for i in diff.iter() {
                let ok = diff.iter().any(|j| {
                    let pair = Subset::singleton(i) | Subset::singleton(j);
                    members.contains(&(first ^ pair))
                });
                if !ok {
                    return Ok(DeltaVerdict::Exchange {
                        first,
                        second,
                        element: i,
                    });
                }
            }
        }
    }
    Ok(DeltaVerdict::Valid)
}
